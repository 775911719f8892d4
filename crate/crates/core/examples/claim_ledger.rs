//! Run the whole ledger and print the markdown report, or one case with
//! `cargo run --example claim_ledger -- g4p3`.

use xiao_ledger::ledger::{verify_paper, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let options = VerifyOptions { only: std::env::args().nth(1), ..Default::default() };
    let report = verify_paper(&options)?;
    print!("{}", report.to_markdown());
    std::process::exit(report.exit_code());
}
