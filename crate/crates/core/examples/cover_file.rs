//! Parse a cover from the text format and report its genus and monodromy
//! group. Pass a path, or run without arguments to use a built-in sample.
//!
//! ```text
//! degree 4; base_genus 0
//! # one permutation per branch point, cycles on 0..degree
//! (0 1 2 3)
//! (0 3 2 1)
//! (0 1)(2 3)
//! (0 1)(2 3)
//! ```

use xiao_ledger::monodromy::{parse_cover, DEFAULT_MAX_GROUP_ORDER};

const SAMPLE: &str = "degree 4; base_genus 0
(0 1 2 3)
(0 3 2 1)
(0 1)(2 3)
(0 1)(2 3)
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let cover = parse_cover(&text)?;
    let group = cover.generated_group(DEFAULT_MAX_GROUP_ORDER)?;
    println!("degree {} over genus {}", cover.degree(), cover.base_genus());
    println!("genus {}", cover.rh_genus()?);
    println!("group {:?} of order {}", group.classification(), group.order());
    println!("Galois closure genus {}", cover.galois_closure_genus(DEFAULT_MAX_GROUP_ORDER)?);
    for (i, profile) in cover.ramification_profile().iter().enumerate() {
        println!("  branch point {i}: {profile:?}");
    }

    match parse_cover("degree 3; base_genus 0\n(0 1)\n(0 5)\n") {
        Err(e) => println!("\nmalformed input is reported with its position: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
