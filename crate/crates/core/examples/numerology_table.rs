//! Tabulate the closed-form numerology of the construction: genera of `C`
//! and `D`, the self-intersection of `C ⊂ D×D`, the fibres of the moduli map
//! and whether `q_rel = 2g_D` beats the Xiao bound.

use xiao_ledger::numerology::{self, CoverParams, FiberClass, NumerologyError};
use xiao_ledger::render_rational;

fn main() -> Result<(), NumerologyError> {
    println!("{:>3} {:>3} {:>5} {:>5} {:>7} {:>10} {:>7} {:>6}", "g", "p", "g_C", "g_D", "gamma^2", "fibres", "bound", "xiao");
    for g in 2..=8 {
        for p in [3, 5, 7, 11] {
            let params = CoverParams::new(g, p)?;
            let (g_c, g_d) = numerology::cover_genera(params);
            let fibres = match numerology::psi_fiber_class(params) {
                FiberClass::Finite => "finite".to_string(),
                FiberClass::PositiveDimensional(Some(d)) => format!("dim {d}"),
                FiberClass::PositiveDimensional(None) => "dim > 0".to_string(),
            };
            let xiao = numerology::xiao_report(g_c, 2 * g_d)?;
            println!(
                "{:>3} {:>3} {:>5} {:>5} {:>7} {:>10} {:>7} {:>6}",
                g,
                p,
                g_c,
                g_d,
                numerology::gamma_self_intersection(params),
                fibres,
                render_rational(&xiao.bound),
                xiao.is_xiao
            );
        }
    }

    let cw = numerology::chevalley_weil(CoverParams::new(2, 5)?);
    println!("\ncharacter dimensions for (2, 5): {:?}", cw.dims);
    println!("Prym dimension {}, invariant quadrics {}", cw.prym_dim, cw.sym2_invariant_dim);
    Ok(())
}
