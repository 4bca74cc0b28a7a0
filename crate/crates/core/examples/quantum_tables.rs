//! Formula and constructed quantum parameters, plus a symplectic stabilizer
//! matrix.

use agcodes::cli::{cmd_quantum, Render};
use agcodes::code::EvalCode;
use agcodes::config::{Format, Mode, RunConfig};
use agcodes::quantum::{is_symplectic_self_orthogonal, stabilizer_check_matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RunConfig::new(3, 1, Some(2), Mode::Paper)?;
    print!("{}", cmd_quantum(&cfg)?.render(Format::Table));

    let curve = cfg.curve()?;
    let points = Mode::Paper.evaluation_set(&curve);
    let code = EvalCode::build(&curve, &points, 1)?;
    let stab = stabilizer_check_matrix(code.code())?;
    println!(
        "\nstabilizer matrix for s=1: {}x{}, symplectic self-orthogonal: {}",
        stab.rows(),
        stab.cols(),
        is_symplectic_self_orthogonal(&stab)
    );
    Ok(())
}
