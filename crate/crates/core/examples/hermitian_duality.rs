//! Hermitian self-orthogonality and the dual identity on the Hermitian curve
//! over GF(4).

use agcodes::code::{dual_identity_check, EvalCode};
use agcodes::curve::{Curve, CurveSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = Curve::new(CurveSpec::hermitian(2, 1)?)?;
    let points = curve.full_affine_points();
    for s in 0..=6 {
        let code = EvalCode::build(&curve, &points, s)?;
        let id = dual_identity_check(&curve, &points, s)?;
        println!(
            "s={s}: k={} Euclidean s.o. {:5}  Hermitian s.o. {:5}  dual = C_{} ({})",
            code.rank(),
            code.is_self_orthogonal(),
            code.is_hermitian_self_orthogonal(),
            id.generic_s,
            id.generic_equal
        );
    }
    Ok(())
}
