//! Rational points of Y^q + Y = X^m and the Hasse–Weil bound.

use agcodes::curve::{Curve, CurveSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        ("Y^3 + Y = X^2", CurveSpec::new(3, 1, 2)?),
        ("Y^2 + Y = X^3", CurveSpec::hermitian(2, 1)?),
        ("Y^5 + Y = X^4", CurveSpec::new(5, 1, 4)?),
    ];
    for (name, spec) in specs {
        let violations = spec.validate();
        let curve = Curve::new(spec)?;
        let sets = curve.point_sets();
        println!("{name}: genus {}", curve.genus());
        println!("  affine over GF(q^2): {}", curve.full_affine_points().len());
        println!("  affine over GF(q):   {}", sets.g_set.len());
        println!("  evaluation set D:    {}", sets.d_set.len());
        println!(
            "  places {} / Hasse-Weil {} (maximal: {})",
            curve.rational_place_count(),
            curve.hasse_weil_max(),
            curve.is_maximal()
        );
        for v in violations {
            println!("  violates condition {v}");
        }
    }
    Ok(())
}
