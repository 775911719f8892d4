//! Walk the lattice computation for a plane quartic `D`: the class `X_P` on
//! `D×D`, the involution `τ` of `D^(2)` and the branch curve `B`.

use xiao_ledger::lattice::{branch_class, phi_morphism, LatticeError};

fn main() -> Result<(), LatticeError> {
    let phi = phi_morphism(3)?;
    let dxd = phi.source();
    let sym2 = phi.target();
    println!("D x D gram {:?}, signature {:?}", dxd.gram().rows(), dxd.signature());
    println!("D^(2) gram {:?}, signature {:?}", sym2.gram().rows(), sym2.signature());

    let data = branch_class(3)?;
    println!("\nX_P = {} with X_P^2 = {}, p_a = {}", data.x_p, dxd.intersect(&data.x_p, &data.x_p)?, dxd.adjunction_genus(&data.x_p)?);
    println!("tau_* D_P = {}", data.tau_d_p);
    println!("tau_* delta = {}", data.tau_delta);
    println!("tau =\n{}", data.tau);
    println!("B = phi^*(tau_* 2delta) = {}", data.b);
    println!("p_a(B) = {}", dxd.adjunction_genus(&data.b)?);
    println!("L = B/2 = {}, L^2 = {}, L.K = {}", data.l, dxd.intersect(&data.l, &data.l)?, dxd.intersect(&data.l, dxd.canonical())?);
    Ok(())
}
