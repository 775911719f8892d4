//! Assemble the invariants of the double cover `S → D×D` from lattice data
//! and the count of nodal fibres.

use xiao_ledger::invariants;
use xiao_ledger::lattice::{branch_class, product_with_diagonal_lattice};
use xiao_ledger::quartic::plucker_counts;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dxd = product_with_diagonal_lattice(3)?;
    let l = branch_class(3)?.l;
    let k = dxd.canonical();
    let (k2, lk, l2) = (dxd.intersect(k, k)?, dxd.intersect(&l, k)?, dxd.intersect(&l, &l)?);
    let k2_s = invariants::double_cover_k2(k2, lk, l2);
    println!("K^2 = {k2}, L.K = {lk}, L^2 = {l2}  =>  K_S^2 = {k2_s}");

    let (flexes, bitangents) = plucker_counts(4);
    let c2 = invariants::fibration_euler(3, 10, &vec![1; flexes as usize]);
    println!("{flexes} nodal fibres over a genus-3 base  =>  c2 = {c2}");

    let chi = invariants::double_cover_chi(4, lk, l2)?;
    println!("chi(O_S) = {chi} (double cover), {} (Noether)", invariants::noether_chi(k2_s, c2)?);

    let g_b = invariants::double_cover_curve_genus(3, 2 * bitangents)?;
    println!("B double covers D at {} points: genus {g_b}", 2 * bitangents);

    let profile = invariants::assemble_profile(6, 3, k2_s, c2)?;
    println!("{}", serde_json::to_string_pretty(&profile)?);
    Ok(())
}
