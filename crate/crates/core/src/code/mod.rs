//! Linear codes over GF(q^2) and one-point evaluation codes `C_L(D, s P∞)`.

mod distance;

pub use distance::{DistanceMethod, DistanceResult, DEFAULT_BUDGET};

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::curve::{Curve, CurveSpec, Place};
use crate::gf::{Field, FieldElement};
use crate::matrix::Matrix;
use crate::rr::{self, MonomialBasis};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("point #{0} is not on the curve")]
    PointNotOnCurve(usize),
    #[error("point #{0} appears twice in the evaluation set")]
    DuplicatePoint(usize),
    #[error("the place at infinity cannot be an evaluation point")]
    InfinityInSupport,
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("designed distance is vacuous: s = {s} >= n = {n}")]
    VacuousBound { s: i64, n: usize },
    #[error("the Hermitian form needs a field of even degree, got GF({p}^{k})")]
    NotQuadratic { p: u32, k: u32 },
}

/// A linear code given by a generator matrix in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

impl LinearCode {
    /// Code spanned by the rows of `m` (which may be dependent).
    pub fn from_generator(m: &Matrix) -> Self {
        Self { gen: m.row_basis() }
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        Self {
            gen: Matrix::zeros(field, 0, n),
        }
    }

    pub fn full_space(field: &Field, n: usize) -> Self {
        Self {
            gen: Matrix::identity(field, n),
        }
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    /// Reduced generator matrix, one row per dimension.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn contains(&self, other: &LinearCode) -> bool {
        self.gen.row_space_contains(&other.gen)
    }

    /// Nullspace under `sum a_i b_i`. Its generator is a parity-check
    /// matrix of `self`.
    pub fn euclidean_dual(&self) -> LinearCode {
        Self {
            gen: self.gen.nullspace(),
        }
    }

    pub fn parity_check(&self) -> Matrix {
        self.gen.nullspace()
    }

    /// Order q of the Frobenius-fixed subfield when the field is GF(q^2).
    pub fn hermitian_q(&self) -> Result<u64, CodeError> {
        let f = self.field();
        if f.degree() % 2 != 0 {
            return Err(CodeError::NotQuadratic {
                p: f.characteristic(),
                k: f.degree(),
            });
        }
        Ok((f.characteristic() as u64).pow(f.degree() / 2))
    }

    /// Entrywise `a -> a^q` applied to every codeword.
    pub fn conjugate(&self, q: u64) -> LinearCode {
        Self::from_generator(&self.gen.conjugate(q))
    }

    /// Nullspace under `<a, b>_H = sum a_i b_i^q`.
    pub fn hermitian_dual(&self) -> Result<LinearCode, CodeError> {
        let q = self.hermitian_q()?;
        // v ⟂_H c for all c  <=>  v · c^q = 0, so the dual is the nullspace of G^(q).
        Ok(Self {
            gen: self.gen.conjugate(q).nullspace(),
        })
    }

    /// `G G^T`.
    pub fn gram(&self) -> Matrix {
        self.gen.mul(&self.gen.transpose())
    }

    /// `G (G^(q))^T`.
    pub fn hermitian_gram(&self) -> Result<Matrix, CodeError> {
        let q = self.hermitian_q()?;
        Ok(self.gen.mul(&self.gen.conjugate(q).transpose()))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gram().is_zero()
    }

    pub fn is_hermitian_self_orthogonal(&self) -> Result<bool, CodeError> {
        Ok(self.hermitian_gram()?.is_zero())
    }

    /// Minimum distance within a work budget; see [`DistanceResult`].
    pub fn min_distance(&self, budget: u64) -> Result<DistanceResult, CodeError> {
        distance::min_distance(self, budget, None)
    }
}

/// `C_L(D, s P∞)`: evaluations of the monomial basis of `L(s P∞)` at an
/// ordered list of affine places.
#[derive(Debug, Clone)]
pub struct EvalCode {
    spec: CurveSpec,
    field: Field,
    points: Vec<Place>,
    s: i64,
    basis: MonomialBasis,
    gen: Matrix,
    code: LinearCode,
}

impl EvalCode {
    pub fn build(curve: &Curve, points: &[Place], s: i64) -> Result<Self, CodeError> {
        let mut seen = HashSet::new();
        let mut coords: Vec<(FieldElement, FieldElement)> = Vec::with_capacity(points.len());
        for (idx, pl) in points.iter().enumerate() {
            let Some((x, y)) = pl.coords() else {
                return Err(CodeError::InfinityInSupport);
            };
            if !curve.contains(pl) {
                return Err(CodeError::PointNotOnCurve(idx));
            }
            if !seen.insert((x, y)) {
                return Err(CodeError::DuplicatePoint(idx));
            }
            coords.push((x, y));
        }

        let f = curve.field();
        let basis = rr::basis(curve.q(), curve.m() as u64, s);
        let mut gen = Matrix::zeros(f, basis.len(), points.len());
        for (r, mono) in basis.entries.iter().enumerate() {
            for (c, &(x, y)) in coords.iter().enumerate() {
                gen.set(r, c, f.mul(f.pow(x, mono.i), f.pow(y, mono.j)));
            }
        }
        let code = LinearCode::from_generator(&gen);
        Ok(Self {
            spec: curve.spec().clone(),
            field: f.clone(),
            points: points.to_vec(),
            s,
            basis,
            gen,
            code,
        })
    }

    pub fn spec(&self) -> &CurveSpec {
        &self.spec
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[Place] {
        &self.points
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    /// Raw evaluation matrix: one row per basis monomial.
    pub fn evaluation_matrix(&self) -> &Matrix {
        &self.gen
    }

    pub fn rank(&self) -> usize {
        self.code.dimension()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// `n - s`, the Goppa lower bound on the minimum distance.
    pub fn designed_distance(&self) -> Result<i64, CodeError> {
        let n = self.length();
        if self.s >= n as i64 {
            return Err(CodeError::VacuousBound { s: self.s, n });
        }
        Ok(n as i64 - self.s)
    }

    /// Minimum distance; the designed bound tightens the lower end when the
    /// search has to give up.
    pub fn min_distance(&self, budget: u64) -> Result<DistanceResult, CodeError> {
        let designed = match self.designed_distance() {
            Ok(d) if self.s >= 0 => Some(d as usize),
            _ => None,
        };
        distance::min_distance(&self.code, budget, designed)
    }

    pub fn euclidean_dual(&self) -> LinearCode {
        self.code.euclidean_dual()
    }

    pub fn hermitian_dual(&self) -> Result<LinearCode, CodeError> {
        self.code.hermitian_dual()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.code.is_self_orthogonal()
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        self.code
            .is_hermitian_self_orthogonal()
            .expect("curve codes live over GF(q^2)")
    }
}

/// Outcome of the printed five-case dimension formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionFormula {
    pub q: u64,
    pub r: i64,
    /// Value of the selected case.
    pub value: i64,
    /// The case that was applied: the last one whose range contains `r`.
    pub case: u8,
    /// All cases whose ranges contain `r`; more than one means overlap.
    pub matching_cases: Vec<u8>,
    /// Case (3) with Riemann–Roch's `+1`: `r(q^2-q+1) - g + 1`.
    pub riemann_roch_variant: Option<i64>,
}

/// The five-case formula for `k_r`, evaluated exactly as printed (with
/// `T` counting `iq + j(q-1) <= r`).
pub fn dimension_formula(q: u64, r: i64) -> DimensionFormula {
    let qi = q as i64;
    let q2 = qi * qi;
    let q3 = q2 * qi;
    let t = |v: i64| rr::dimension(q, q - 1, v) as i64;
    let genus = (qi - 1) * (qi - 2) / 2;
    let case3 = r * (q2 - qi + 1) - genus;

    let mut matching = Vec::new();
    if r < 0 {
        matching.push(1);
    }
    if 0 <= r && r <= q2 - 3 * qi {
        matching.push(2);
    }
    if q2 - 3 * qi < r && r < q3 {
        matching.push(3);
    }
    if q3 <= r && r <= q3 + q2 - 3 * qi {
        matching.push(4);
    }
    if r > q3 - q2 - 3 * qi {
        matching.push(5);
    }
    let case = *matching.last().expect("the cases cover every integer");
    let value = match case {
        1 => 0,
        2 => t(r),
        3 => case3,
        4 => q3 - t(q3 - q2 - 3 * qi - r),
        _ => q3,
    };
    DimensionFormula {
        q,
        r,
        value,
        case,
        riemann_roch_variant: (case == 3).then_some(case3 + 1),
        matching_cases: matching,
    }
}

/// Row-space comparison of `C_s^⊥` with two candidate one-point codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualIdentity {
    pub s: i64,
    pub n: usize,
    pub dual_dimension: usize,
    /// `q^3 + q^2 - 3q - s`.
    pub formula_s: i64,
    pub formula_equal: bool,
    /// `n + 2g - 2 - s`.
    pub generic_s: i64,
    pub generic_equal: bool,
}

pub fn dual_identity_check(curve: &Curve, points: &[Place], s: i64) -> Result<DualIdentity, CodeError> {
    let q = curve.q() as i64;
    let n = points.len();
    let g = curve.genus() as i64;
    let code = EvalCode::build(curve, points, s)?;
    let dual = code.euclidean_dual();
    let formula_s = q * q * q + q * q - 3 * q - s;
    let generic_s = n as i64 + 2 * g - 2 - s;
    let matches = |t: i64| -> Result<bool, CodeError> {
        let candidate = EvalCode::build(curve, points, t)?;
        Ok(candidate.code().generator().same_row_space(dual.generator()))
    };
    Ok(DualIdentity {
        s,
        n,
        dual_dimension: dual.dimension(),
        formula_s,
        formula_equal: matches(formula_s)?,
        generic_s,
        generic_equal: matches(generic_s)?,
    })
}
