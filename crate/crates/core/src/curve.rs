//! Plane curves `A(Y) = B(X)` with `A` additive.
//!
//! `A(Y) = a_0 Y + a_1 Y^p + ... + a_n Y^{p^n}` and
//! `B(X) = b_0 + b_1 X + ... + b_m X^m`, with coefficients in the prime
//! field. The default curve is `Y^q + Y = X^m`.
//!
//! Rational places are found by exhaustive search over field pairs. The
//! single place at infinity is the common pole of `x` and `y`; its structure
//! is only modelled for `gcd(m, q) = 1`, where it is the unique place there.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{is_prime, Field, FieldElement, GfError};

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("exponent n must be at least 1")]
    ZeroExponent,
    #[error("A needs {expected} coefficients (Y^(p^0) .. Y^(p^n)), got {got}")]
    ACoefficients { expected: usize, got: usize },
    #[error("B needs {expected} coefficients (X^0 .. X^m), got {got}")]
    BCoefficients { expected: usize, got: usize },
    #[error("field characteristic {field} differs from curve characteristic {curve}")]
    Characteristic { curve: u32, field: u32 },
    #[error(transparent)]
    Field(#[from] GfError),
}

/// One of the five defining conditions the curve may fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// Condition (1): the curve degree `max(p^n, m)` is below 4.
    DegreeBelowFour { degree: u64 },
    /// Condition (2): `a_0` or `a_n` vanishes.
    NotSeparable,
    /// Condition (3): `b_m` vanishes.
    LeadingCoefficientZero,
    /// Condition (4): `p` divides `m`.
    MDivisibleByP,
    /// Condition (5): `n < 1` or `m < 2`.
    ExponentsTooSmall,
}

impl Violation {
    pub fn condition(self) -> u8 {
        match self {
            Violation::DegreeBelowFour { .. } => 1,
            Violation::NotSeparable => 2,
            Violation::LeadingCoefficientZero => 3,
            Violation::MDivisibleByP => 4,
            Violation::ExponentsTooSmall => 5,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeBelowFour { degree } => write!(f, "(1) curve degree {degree} < 4"),
            Violation::NotSeparable => write!(f, "(2) a_0 or a_n is zero"),
            Violation::LeadingCoefficientZero => write!(f, "(3) b_m is zero"),
            Violation::MDivisibleByP => write!(f, "(4) m is divisible by p"),
            Violation::ExponentsTooSmall => write!(f, "(5) need n >= 1 and m >= 2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub p: u32,
    pub n: u32,
    pub q: u64,
    pub m: u32,
    /// `a_j` is the coefficient of `Y^{p^j}`, `j = 0..=n`.
    pub a_coeffs: Vec<u32>,
    /// `b_j` is the coefficient of `X^j`, `j = 0..=m`.
    pub b_coeffs: Vec<u32>,
}

impl CurveSpec {
    /// `Y^q + Y = X^m` with `q = p^n`.
    pub fn new(p: u32, n: u32, m: u32) -> Result<Self, CurveError> {
        let mut a = vec![0; n as usize + 1];
        a[0] = 1;
        a[n as usize] = 1;
        let mut b = vec![0; m as usize + 1];
        b[m as usize] = 1;
        Self::with_coefficients(p, n, m, a, b)
    }

    /// The Hermitian curve `Y^q + Y = X^{q+1}`.
    pub fn hermitian(p: u32, n: u32) -> Result<Self, CurveError> {
        let q = (p as u64).pow(n);
        Self::new(p, n, q as u32 + 1)
    }

    pub fn with_coefficients(p: u32, n: u32, m: u32, a_coeffs: Vec<u32>, b_coeffs: Vec<u32>) -> Result<Self, CurveError> {
        if !is_prime(p) {
            return Err(CurveError::NotPrime(p));
        }
        if n == 0 {
            return Err(CurveError::ZeroExponent);
        }
        if a_coeffs.len() != n as usize + 1 {
            return Err(CurveError::ACoefficients {
                expected: n as usize + 1,
                got: a_coeffs.len(),
            });
        }
        if b_coeffs.len() != m as usize + 1 {
            return Err(CurveError::BCoefficients {
                expected: m as usize + 1,
                got: b_coeffs.len(),
            });
        }
        let a_coeffs = a_coeffs.into_iter().map(|c| c % p).collect();
        let b_coeffs = b_coeffs.into_iter().map(|c| c % p).collect();
        Ok(Self {
            p,
            n,
            q: (p as u64).pow(n),
            m,
            a_coeffs,
            b_coeffs,
        })
    }

    /// Violated defining conditions; empty when the curve satisfies all five.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let degree = self.q.max(self.m as u64);
        if degree < 4 {
            out.push(Violation::DegreeBelowFour { degree });
        }
        if self.a_coeffs[0] == 0 || self.a_coeffs[self.n as usize] == 0 {
            out.push(Violation::NotSeparable);
        }
        if self.b_coeffs[self.m as usize] == 0 {
            out.push(Violation::LeadingCoefficientZero);
        }
        if self.m % self.p == 0 {
            out.push(Violation::MDivisibleByP);
        }
        if self.n < 1 || self.m < 2 {
            out.push(Violation::ExponentsTooSmall);
        }
        out
    }

    /// `(p^n - 1)(m - 1) / 2`.
    pub fn genus(&self) -> u64 {
        (self.q - 1) * (self.m as u64).saturating_sub(1) / 2
    }

    /// Whether `|m - p^n| = 1`, the sufficient condition for nonsingularity.
    pub fn nonsingular_guaranteed(&self) -> bool {
        (self.m as i64 - self.q as i64).abs() == 1
    }

    /// `1 + q^2 + 2gq`, the bound on places rational over GF(q^2).
    pub fn hasse_weil_max(&self) -> u64 {
        1 + self.q * self.q + 2 * self.genus() * self.q
    }

    fn check_field(&self, field: &Field) -> Result<(), CurveError> {
        if field.characteristic() != self.p {
            return Err(CurveError::Characteristic {
                curve: self.p,
                field: field.characteristic(),
            });
        }
        Ok(())
    }

    pub fn eval_a(&self, field: &Field, y: FieldElement) -> FieldElement {
        let mut acc = field.zero();
        let mut power = 1u64;
        for &c in &self.a_coeffs {
            if c != 0 {
                acc = field.add(acc, field.mul(field.from_int(c as i64), field.pow(y, power)));
            }
            power *= self.p as u64;
        }
        acc
    }

    pub fn eval_b(&self, field: &Field, x: FieldElement) -> FieldElement {
        // Horner from the top coefficient.
        self.b_coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), field.from_int(c as i64)))
    }

    pub fn contains(&self, field: &Field, x: FieldElement, y: FieldElement) -> bool {
        self.eval_a(field, y) == self.eval_b(field, x)
    }

    /// All `(x, y)` in `field × field` on the curve, ordered by x then y.
    pub fn affine_points(&self, field: &Field) -> Result<Vec<Place>, CurveError> {
        self.check_field(field)?;
        let a_vals: Vec<FieldElement> = field.elements().map(|y| self.eval_a(field, y)).collect();
        let mut out = Vec::new();
        for x in field.elements() {
            let bx = self.eval_b(field, x);
            for (y, &ay) in field.elements().zip(&a_vals) {
                if ay == bx {
                    out.push(Place::Affine { x, y });
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Place {
    Affine { x: FieldElement, y: FieldElement },
    Infinity,
}

impl Place {
    pub fn coords(self) -> Option<(FieldElement, FieldElement)> {
        match self {
            Place::Affine { x, y } => Some((x, y)),
            Place::Infinity => None,
        }
    }
}

/// The rational places over GF(q) (plus infinity) and the remaining affine
/// places over GF(q^2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSets {
    pub g_set: Vec<Place>,
    pub d_set: Vec<Place>,
}

/// A curve together with its ambient field GF(q^2), where all code
/// construction happens.
#[derive(Debug, Clone)]
pub struct Curve {
    spec: CurveSpec,
    field: Field,
}

impl Curve {
    pub fn new(spec: CurveSpec) -> Result<Self, CurveError> {
        let field = Field::new(spec.p, 2 * spec.n)?;
        Ok(Self { spec, field })
    }

    pub fn spec(&self) -> &CurveSpec {
        &self.spec
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.spec.q
    }

    pub fn m(&self) -> u32 {
        self.spec.m
    }

    pub fn genus(&self) -> u64 {
        self.spec.genus()
    }

    pub fn contains(&self, place: &Place) -> bool {
        match *place {
            Place::Affine { x, y } => {
                self.field.contains(x) && self.field.contains(y) && self.spec.contains(&self.field, x, y)
            }
            Place::Infinity => true,
        }
    }

    /// Every affine GF(q^2)-rational point, i.e. the zeros of
    /// `x^{q^2} - x` on the curve.
    pub fn full_affine_points(&self) -> Vec<Place> {
        self.spec
            .affine_points(&self.field)
            .expect("ambient field has the curve characteristic")
    }

    /// Affine points with both coordinates in the subfield GF(q).
    pub fn subfield_affine_points(&self) -> Vec<Place> {
        let q = self.q();
        let f = &self.field;
        self.full_affine_points()
            .into_iter()
            .filter(|pl| {
                let (x, y) = pl.coords().unwrap();
                f.in_subfield(x, q).unwrap() && f.in_subfield(y, q).unwrap()
            })
            .collect()
    }

    pub fn point_sets(&self) -> PointSets {
        let q = self.q();
        let f = &self.field;
        let (sub, rest): (Vec<Place>, Vec<Place>) = self.full_affine_points().into_iter().partition(|pl| {
            let (x, y) = pl.coords().unwrap();
            f.in_subfield(x, q).unwrap() && f.in_subfield(y, q).unwrap()
        });
        let mut g_set = sub;
        g_set.push(Place::Infinity);
        PointSets { g_set, d_set: rest }
    }

    /// Number of GF(q^2)-rational places, counting the one at infinity.
    pub fn rational_place_count(&self) -> u64 {
        self.full_affine_points().len() as u64 + 1
    }

    pub fn hasse_weil_max(&self) -> u64 {
        self.spec.hasse_weil_max()
    }

    pub fn is_maximal(&self) -> bool {
        self.rational_place_count() == self.hasse_weil_max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// GF(9) as Z_3[i], i^2 = -1, written independently of `gf`.
    fn gf9_points_oracle() -> usize {
        let mul = |(a, b): (i64, i64), (c, d): (i64, i64)| ((a * c - b * d).rem_euclid(3), (a * d + b * c).rem_euclid(3));
        let elems: Vec<(i64, i64)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        let mut count = 0;
        for &x in &elems {
            for &y in &elems {
                let y3 = mul(mul(y, y), y);
                let lhs = ((y3.0 + y.0) % 3, (y3.1 + y.1) % 3);
                if lhs == mul(x, x) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn validation_of_small_curves() {
        let c = CurveSpec::new(3, 1, 2).unwrap();
        assert_eq!(c.validate(), vec![Violation::DegreeBelowFour { degree: 3 }]);
        let h = CurveSpec::hermitian(2, 1).unwrap();
        assert_eq!(h.m, 3);
        assert_eq!(h.validate(), vec![Violation::DegreeBelowFour { degree: 3 }]);
        let bad = CurveSpec::new(3, 1, 3).unwrap();
        assert!(bad.validate().contains(&Violation::MDivisibleByP));
        assert!(CurveSpec::new(5, 1, 4).unwrap().validate().is_empty());
        let zero_a = CurveSpec::with_coefficients(3, 1, 4, vec![0, 1], vec![0, 0, 0, 0, 1]).unwrap();
        assert_eq!(zero_a.validate(), vec![Violation::NotSeparable]);
        let zero_b = CurveSpec::with_coefficients(5, 1, 4, vec![1, 1], vec![1, 0, 0, 0, 0]).unwrap();
        assert_eq!(zero_b.validate(), vec![Violation::LeadingCoefficientZero]);
        assert_eq!(CurveSpec::new(5, 1, 1).unwrap().validate(), vec![Violation::ExponentsTooSmall]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(CurveSpec::new(4, 1, 3), Err(CurveError::NotPrime(4))));
        assert!(matches!(CurveSpec::new(3, 0, 2), Err(CurveError::ZeroExponent)));
        assert!(matches!(
            CurveSpec::with_coefficients(3, 1, 2, vec![1], vec![0, 0, 1]),
            Err(CurveError::ACoefficients { .. })
        ));
        let c = CurveSpec::new(3, 1, 2).unwrap();
        assert!(matches!(
            c.affine_points(&Field::new(2, 2).unwrap()),
            Err(CurveError::Characteristic { .. })
        ));
    }

    #[test]
    fn genus_and_nonsingularity() {
        assert_eq!(CurveSpec::new(3, 1, 2).unwrap().genus(), 1);
        assert_eq!(CurveSpec::new(5, 1, 4).unwrap().genus(), 6);
        assert_eq!(CurveSpec::new(3, 1, 1).unwrap().genus(), 0);
        assert!(CurveSpec::new(3, 1, 2).unwrap().nonsingular_guaranteed());
        assert!(CurveSpec::hermitian(2, 1).unwrap().nonsingular_guaranteed());
        assert!(!CurveSpec::new(5, 1, 2).unwrap().nonsingular_guaranteed());
    }

    #[test]
    fn point_counts() {
        let c = Curve::new(CurveSpec::new(3, 1, 2).unwrap()).unwrap();
        assert_eq!(gf9_points_oracle(), 15);
        assert_eq!(c.full_affine_points().len(), 15);
        let gf3 = Field::new(3, 1).unwrap();
        assert_eq!(c.spec().affine_points(&gf3).unwrap().len(), 3);
        let sets = c.point_sets();
        assert_eq!(sets.g_set.len(), 4);
        assert_eq!(sets.d_set.len(), 12);
        assert!(sets.d_set.iter().all(|p| !sets.g_set.contains(p)));
        assert!(!sets.d_set.contains(&Place::Infinity));

        let h = Curve::new(CurveSpec::hermitian(2, 1).unwrap()).unwrap();
        assert_eq!(h.full_affine_points().len(), 8);
        let hs = h.point_sets();
        assert_eq!((hs.g_set.len(), hs.d_set.len()), (3, 6));
    }

    #[test]
    fn subfield_points_agree_with_direct_enumeration() {
        // Points over GF(q) found inside GF(q^2) match those found over GF(q).
        let c = Curve::new(CurveSpec::new(3, 1, 2).unwrap()).unwrap();
        let gf3 = Field::new(3, 1).unwrap();
        let direct: Vec<(u32, u32)> = c
            .spec()
            .affine_points(&gf3)
            .unwrap()
            .into_iter()
            .map(|p| {
                let (x, y) = p.coords().unwrap();
                (x.index(), y.index())
            })
            .collect();
        let embedded: Vec<(u32, u32)> = c
            .subfield_affine_points()
            .into_iter()
            .map(|p| {
                let (x, y) = p.coords().unwrap();
                (x.index(), y.index())
            })
            .collect();
        // Prime-field elements have the same integer encoding in both fields.
        assert_eq!(direct, embedded);
    }

    #[test]
    fn hasse_weil() {
        let c = Curve::new(CurveSpec::new(3, 1, 2).unwrap()).unwrap();
        assert_eq!(c.hasse_weil_max(), 16);
        assert!(c.is_maximal());
        let h = Curve::new(CurveSpec::hermitian(2, 1).unwrap()).unwrap();
        assert_eq!(h.hasse_weil_max(), 9);
        assert!(h.is_maximal());
        let c5 = Curve::new(CurveSpec::new(5, 1, 4).unwrap()).unwrap();
        assert_eq!(c5.hasse_weil_max(), 86);
        assert_eq!(c5.rational_place_count(), 46);
        assert!(!c5.is_maximal());
    }

    #[test]
    fn fibres_have_zero_or_q_points() {
        for (p, n, m) in [(2, 1, 3), (3, 1, 2), (2, 2, 3), (5, 1, 4), (2, 2, 5), (3, 1, 4)] {
            let c = Curve::new(CurveSpec::new(p, n, m).unwrap()).unwrap();
            let f = c.field();
            let pts = c.full_affine_points();
            for x in f.elements() {
                let fibre = pts.iter().filter(|pl| pl.coords().unwrap().0 == x).count() as u64;
                assert!(fibre == 0 || fibre == c.q(), "q={} m={m}", c.q());
            }
            assert!(pts.iter().all(|pl| c.contains(pl)));
            assert!(c.rational_place_count() <= c.hasse_weil_max());
        }
    }
}
