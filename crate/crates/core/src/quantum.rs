//! Quantum stabilizer parameters from Hermitian self-orthogonal codes.
//!
//! A Hermitian self-orthogonal `[n, k]` code over GF(q^2) yields a q-ary
//! `[[n, n - 2k, d]]` stabilizer code, where `d` is the minimum distance of
//! its Hermitian dual.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::code::{CodeError, DistanceResult, LinearCode};
use crate::gf::FieldElement;
use crate::matrix::Matrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuantumError {
    #[error("code is not Hermitian self-orthogonal")]
    NotSelfOrthogonal,
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// `[[n, k, d]]_base`. `d` is a lower bound unless `distance_exact`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub n: u64,
    pub k: i64,
    pub d: i64,
    pub distance_exact: bool,
    pub base: u64,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ge = if self.distance_exact { "" } else { ">=" };
        write!(f, "[[{},{},{}{}]]_{}", self.n, self.k, ge, self.d, self.base)
    }
}

/// Output of the Hermitian construction on a concrete code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constructed {
    pub params: QuantumParams,
    pub classical_dimension: usize,
    pub dual_distance: DistanceResult,
}

/// `[[n, n - 2k, d(C^⊥H)]]_q` for a Hermitian self-orthogonal code.
pub fn hermitian_construction(code: &LinearCode, budget: u64) -> Result<Constructed, QuantumError> {
    if !code.is_hermitian_self_orthogonal()? {
        return Err(QuantumError::NotSelfOrthogonal);
    }
    let q = code.hermitian_q()?;
    let n = code.length();
    let k = code.dimension();
    let dual = code.hermitian_dual()?;
    let dist = dual.min_distance(budget)?;
    Ok(Constructed {
        params: QuantumParams {
            n: n as u64,
            k: n as i64 - 2 * k as i64,
            d: dist.lower as i64,
            distance_exact: dist.exact().is_some(),
            base: q,
        },
        classical_dimension: k,
        dual_distance: dist,
    })
}

/// A row of the formula table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub q: u64,
    pub r: i64,
    pub params: QuantumParams,
    /// Whether `q^2 - 2 <= r <= q^2 + q - 3`.
    pub in_range: bool,
}

pub fn theorem_range(q: u64) -> std::ops::RangeInclusive<i64> {
    let q = q as i64;
    (q * q - 2)..=(q * q + q - 3)
}

/// `[[q^3, q^3 + q^2 - 3q - 2r, r + 2q - q^2]]_q`, evaluated for any `r`;
/// `in_range` flags whether `r` is inside the stated range.
pub fn theorem_params(q: u64, r: i64) -> TheoremRow {
    let qi = q as i64;
    TheoremRow {
        q,
        r,
        params: QuantumParams {
            n: q * q * q,
            k: qi * qi * qi + qi * qi - 3 * qi - 2 * r,
            d: r + 2 * qi - qi * qi,
            distance_exact: true,
            base: q,
        },
        in_range: theorem_range(q).contains(&r),
    }
}

/// `r` values of the tabulated examples: 7..=9 for q = 3 and 18..=22 for
/// q = 5. Other q use the stated range.
pub fn example_range(q: u64) -> std::ops::RangeInclusive<i64> {
    match q {
        3 => 7..=9,
        5 => 18..=22,
        _ => theorem_range(q),
    }
}

pub fn example_table(q: u64) -> Vec<TheoremRow> {
    example_range(q).map(|r| theorem_params(q, r)).collect()
}

/// Parameters of the tabulated examples, keyed by `(q, r)`.
pub fn tabulated_example(q: u64, r: i64) -> Option<(u64, i64, i64)> {
    const ROWS: &[(u64, i64, (u64, i64, i64))] = &[
        (3, 7, (27, 13, 4)),
        (3, 8, (27, 11, 5)),
        (3, 9, (27, 9, 6)),
        (5, 18, (125, 99, 3)),
        (5, 19, (125, 97, 4)),
        (5, 20, (125, 95, 5)),
        (5, 21, (125, 93, 6)),
        (5, 22, (125, 91, 7)),
    ];
    ROWS.iter().find(|(qq, rr, _)| *qq == q && *rr == r).map(|(_, _, v)| *v)
}

/// Codes quoted from external tables for comparison. Recorded, not verified.
pub fn reference_rows(q: u64) -> Vec<QuantumParams> {
    let mk = |n, k, d| QuantumParams {
        n,
        k,
        d,
        distance_exact: true,
        base: q,
    };
    match q {
        3 => vec![mk(27, 13, 6)],
        5 => vec![mk(125, 99, 10), mk(125, 93, 12)],
        _ => Vec::new(),
    }
}

/// Expands a Hermitian self-orthogonal code over GF(q^2) into a `2k × 2n`
/// symplectic check matrix over GF(q).
///
/// Each codeword `v = a + γ b` (with `a, b` over GF(q) and `γ` the
/// canonical root of the field modulus) becomes the row `(a | b)`; both `g`
/// and `γ g` are expanded for every generator row `g`. Entries are returned
/// as elements of the GF(q) subfield inside GF(q^2).
pub fn stabilizer_check_matrix(code: &LinearCode) -> Result<Matrix, QuantumError> {
    if !code.is_hermitian_self_orthogonal()? {
        return Err(QuantumError::NotSelfOrthogonal);
    }
    let q = code.hermitian_q()?;
    let f = code.field();
    let n = code.length();
    let gamma = f.generator();
    let gamma_q = f.frobenius(gamma, q).expect("q divides the field order");
    let denom_inv = f.inv(f.sub(gamma, gamma_q)).expect("γ lies outside GF(q)");

    // v = a + γ b and v^q = a + γ^q b give b = (v - v^q)/(γ - γ^q), a = v - γ b.
    let split = |v: FieldElement| -> (FieldElement, FieldElement) {
        let vq = f.frobenius(v, q).expect("valid q");
        let b = f.mul(f.sub(v, vq), denom_inv);
        (f.sub(v, f.mul(gamma, b)), b)
    };

    let mut rows = Vec::with_capacity(2 * code.dimension());
    for g in code.generator().row_vectors() {
        for scale in [f.one(), gamma] {
            let mut row = vec![f.zero(); 2 * n];
            for (i, &v) in g.iter().enumerate() {
                let (a, b) = split(f.mul(scale, v));
                row[i] = a;
                row[n + i] = b;
            }
            rows.push(row);
        }
    }
    Ok(Matrix::from_rows(f, 2 * n, rows).expect("rows have 2n entries"))
}

/// `sum a_i b'_i - b_i a'_i` for rows `(a | b)` and `(a' | b')`.
pub fn symplectic_product(m: &Matrix, r1: usize, r2: usize) -> FieldElement {
    let f = m.field();
    let n = m.cols() / 2;
    let (u, v) = (m.row(r1), m.row(r2));
    (0..n).fold(f.zero(), |acc, i| {
        let t = f.sub(f.mul(u[i], v[n + i]), f.mul(u[n + i], v[i]));
        f.add(acc, t)
    })
}

/// Exhaustive pairwise symplectic orthogonality.
pub fn is_symplectic_self_orthogonal(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (i..m.rows()).all(|j| symplectic_product(m, i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{EvalCode, DEFAULT_BUDGET};
    use crate::curve::{Curve, CurveSpec};
    use crate::gf::Field;

    #[test]
    fn tabulated_rows() {
        let t3: Vec<String> = example_table(3).iter().map(|r| r.params.to_string()).collect();
        assert_eq!(t3, vec!["[[27,13,4]]_3", "[[27,11,5]]_3", "[[27,9,6]]_3"]);
        assert!(example_table(3).iter().all(|r| r.in_range));
        let t5: Vec<String> = example_table(5).iter().map(|r| r.params.to_string()).collect();
        assert_eq!(
            t5,
            vec!["[[125,99,3]]_5", "[[125,97,4]]_5", "[[125,95,5]]_5", "[[125,93,6]]_5", "[[125,91,7]]_5"]
        );
        // The q = 5 example rows lie below the formula's stated range 23..=27.
        assert!(example_table(5).iter().all(|r| !r.in_range));
        assert_eq!(theorem_range(5), 23..=27);
        assert_eq!(example_table(4).len(), 4);
        for q in [2u64, 3, 4, 5, 7] {
            assert_eq!(theorem_range(q).count() as u64, q);
        }
    }

    #[test]
    fn tabulated_examples_match_formula() {
        for q in [3, 5] {
            for row in example_table(q) {
                let (n, k, d) = tabulated_example(q, row.r).unwrap();
                assert_eq!((row.params.n, row.params.k, row.params.d), (n, k, d));
            }
        }
    }

    #[test]
    fn zero_code_construction() {
        let f = Field::new(2, 2).unwrap();
        let c = hermitian_construction(&LinearCode::zero(&f, 8), DEFAULT_BUDGET).unwrap();
        assert_eq!(c.params.to_string(), "[[8,8,1]]_2");
    }

    #[test]
    fn refuses_non_self_orthogonal() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(
            hermitian_construction(&LinearCode::full_space(&f, 3), 10).unwrap_err(),
            QuantumError::NotSelfOrthogonal
        );
        assert!(stabilizer_check_matrix(&LinearCode::full_space(&f, 3)).is_err());
    }

    #[test]
    fn hermitian_curve_q2() {
        let h = Curve::new(CurveSpec::hermitian(2, 1).unwrap()).unwrap();
        let pts = h.full_affine_points();
        let code = EvalCode::build(&h, &pts, 2).unwrap();
        let c = hermitian_construction(code.code(), DEFAULT_BUDGET).unwrap();
        assert_eq!((c.params.n, c.params.k), (8, 4));
        assert!(c.params.distance_exact);
        let m = stabilizer_check_matrix(code.code()).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 16));
        assert!(is_symplectic_self_orthogonal(&m));
        let f = h.field();
        assert!(m.row_vectors().flatten().all(|&a| f.in_subfield(a, 2).unwrap()));
        // Over GF(q) the 2k rows stay independent.
        assert_eq!(m.rank(), 4);
    }
}
