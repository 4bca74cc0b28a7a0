use proptest::prelude::*;

use agcodes::code::EvalCode;
use agcodes::curve::{Curve, CurveSpec};
use agcodes::gf::Field;
use agcodes::rr;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just((2, 2)),
        Just((2, 4)),
        Just((3, 2)),
        Just((5, 2)),
        Just((7, 2)),
        Just((2, 6)),
        Just((3, 4)),
    ]
    .prop_map(|(p, k)| Field::new(p, k).unwrap())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn field_axioms(f in field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let order = f.order();
        let (a, b, c) = (
            f.from_index(a % order).unwrap(),
            f.from_index(b % order).unwrap(),
            f.from_index(c % order).unwrap(),
        );
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b), f.mul_reference(a, b));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.inv(a).unwrap(), f.inv_euclid(a).unwrap());
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative(f in field(), a in any::<u32>(), b in any::<u32>()) {
        let p = f.characteristic() as u64;
        let (a, b) = (f.from_index(a % f.order()).unwrap(), f.from_index(b % f.order()).unwrap());
        let fr = |x| f.frobenius(x, p).unwrap();
        prop_assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
        prop_assert_eq!(fr(f.mul(a, b)), f.mul(fr(a), fr(b)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }

    #[test]
    fn dimension_steps_follow_semigroup(q in 2u64..9, m in 1u64..10, s in -2i64..80) {
        prop_assume!(gcd(q, m) == 1);
        let g = (q - 1) * (m - 1) / 2;
        let semigroup = rr::Semigroup::new(q, m).unwrap();
        let step = rr::dimension(q, m, s) as i64 - rr::dimension(q, m, s - 1) as i64;
        prop_assert_eq!(step == 1, s >= 0 && semigroup.contains(s as u64));
        if s > 2 * g as i64 - 2 {
            prop_assert_eq!(rr::dimension(q, m, s) as i64, s - g as i64 + 1);
        }
    }

    #[test]
    fn codes_are_nested(s in -1i64..14, t in -1i64..14) {
        let c = Curve::new(CurveSpec::new(3, 1, 2).unwrap()).unwrap();
        let d = c.point_sets().d_set;
        let (lo, hi) = (s.min(t), s.max(t));
        let small = EvalCode::build(&c, &d, lo).unwrap();
        let big = EvalCode::build(&c, &d, hi).unwrap();
        prop_assert!(big.code().contains(small.code()));
        prop_assert!(small.rank() <= rr::dimension(3, 2, lo) as usize);
    }
}
