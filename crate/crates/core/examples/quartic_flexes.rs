//! Smoothness and simple-flex certificates for a few plane quartics.
//!
//! ```text
//! cargo run --release --example quartic_flexes -- "x^4 + y^4 + z^4 + 3*x^2*y*z"
//! ```

use xiao_ledger::quartic::{flexes_all_simple, hessian, is_smooth, parse_form, TernaryForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut curves = vec![
        ("Klein", TernaryForm::klein_quartic()),
        ("Fermat", TernaryForm::fermat_quartic()),
        ("random", parse_form("x^4 - 2*x^3*y + 3*y^3*z + z^4 - x*y*z^2 + 5*y^4")?),
    ];
    if let Some(arg) = std::env::args().nth(1) {
        curves.push(("argument", parse_form(&arg)?));
    }
    for (name, f) in &curves {
        println!("{name}: {f}");
        if !is_smooth(f) {
            println!("  singular");
            continue;
        }
        println!("  Hessian has {} terms", hessian(f)?.terms().len());
        let cert = flexes_all_simple(f, 7)?;
        println!(
            "  all flexes simple: {} ({} distinct of {}, {} projections)",
            cert.all_simple, cert.distinct_flex_points, cert.flex_degree, cert.attempts
        );
    }
    Ok(())
}
