//! One-point codes C_L(D, sP∞) on Y^3 + Y = X^2: dimension, designed and true
//! distance, Euclidean dual.

use agcodes::code::{EvalCode, DEFAULT_BUDGET};
use agcodes::curve::{Curve, CurveSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = Curve::new(CurveSpec::new(3, 1, 2)?)?;
    let points = curve.point_sets().d_set;
    println!("n = {}, genus {}", points.len(), curve.genus());
    println!("{:>3} {:>3} {:>8} {:>9} {:>6}", "s", "k", "designed", "distance", "dual k");
    for s in 0..points.len() as i64 {
        let code = EvalCode::build(&curve, &points, s)?;
        let d = code.min_distance(DEFAULT_BUDGET)?;
        let shown = match d.exact() {
            Some(d) => d.to_string(),
            None => format!("{}..{}", d.lower, d.upper),
        };
        println!(
            "{s:>3} {:>3} {:>8} {:>9} {:>6}",
            code.rank(),
            code.designed_distance()?,
            shown,
            code.euclidean_dual().dimension()
        );
    }
    Ok(())
}
