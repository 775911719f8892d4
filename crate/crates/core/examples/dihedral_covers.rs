//! Build the dihedral covers `D → P¹` for a grid of `(g, p)` and compare the
//! Riemann–Hurwitz data of `D`, its Galois closure `C` and the quotient of
//! `C` by the rotations.
//!
//! ```text
//! cargo run --example dihedral_covers
//! ```

use xiao_ledger::monodromy::{build_dihedral_cover, MonodromyError, DEFAULT_MAX_GROUP_ORDER};

fn main() -> Result<(), MonodromyError> {
    println!("{:>3} {:>3} {:>6} {:>6} {:>6} {:>10}", "g", "p", "g_D", "g_C", "C/rot", "|G|");
    for g in 2..=5 {
        for p in [3, 5, 7] {
            let cover = build_dihedral_cover(g, p)?;
            let group = cover.generated_group(DEFAULT_MAX_GROUP_ORDER)?;
            let rotations = group.rotation_subgroup().expect("dihedral monodromy");
            println!(
                "{:>3} {:>3} {:>6} {:>6} {:>6} {:>10}",
                g,
                p,
                cover.rh_genus()?,
                cover.galois_closure_genus(DEFAULT_MAX_GROUP_ORDER)?,
                cover.quotient_genus(&rotations, DEFAULT_MAX_GROUP_ORDER)?,
                format!("{:?} {}", group.classification(), group.order()),
            );
        }
    }

    let cover = build_dihedral_cover(2, 5)?;
    println!("\nmonodromy of the (2, 5) cover:");
    for s in cover.monodromy() {
        println!("  {s}  cycle type {:?}", s.cycle_type());
    }
    Ok(())
}
