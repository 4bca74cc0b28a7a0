//! Runs the claim registry on a chosen configuration and prints the table.
//!
//! `cargo run --example claim_report -- 2 hermitian` picks p = 2 on the
//! Hermitian curve; the default is p = 3 on the D-set (`paper` mode).

use agcodes::cli::{cmd_verify, Render};
use agcodes::config::{Format, Mode, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let mode: Mode = args.next().map(|s| s.parse()).transpose()?.unwrap_or(Mode::Paper);
    let cfg = RunConfig::new(p, 1, None, mode)?;
    print!("{}", cmd_verify(&cfg)?.render(Format::Table));
    Ok(())
}
