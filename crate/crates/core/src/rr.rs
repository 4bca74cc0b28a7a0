//! Weierstrass semigroup at the place at infinity and monomial bases of the
//! one-point spaces `L(s P∞)`.
//!
//! On `A(Y) = B(X)` with `gcd(q, m) = 1` the coordinate functions have pole
//! orders `q` (for `x`) and `m` (for `y`) at infinity, so `H(P∞) = <q, m>` and
//! `{ x^i y^j : iq + jm <= s, 0 <= j < q }` is a basis of `L(s P∞)`.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RrError {
    #[error("generators {q} and {m} are not coprime")]
    NotCoprime { q: u64, m: u64 },
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Pole order of `x^i y^j` at infinity.
pub fn pole_order(i: u64, j: u64, q: u64, m: u64) -> u64 {
    i * q + j * m
}

/// The numerical semigroup generated by `q` and `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Semigroup {
    pub generators: (u64, u64),
    pub gaps: Vec<u64>,
}

impl Semigroup {
    pub fn new(q: u64, m: u64) -> Result<Self, RrError> {
        if q == 0 || m == 0 || gcd(q, m) != 1 {
            return Err(RrError::NotCoprime { q, m });
        }
        // Every integer above the Frobenius number qm - q - m = 2g - 1 is representable.
        let bound = (q * m).saturating_sub(q + m);
        let gaps = (1..=bound).filter(|&v| !representable(v, q, m)).collect();
        Ok(Self {
            generators: (q, m),
            gaps,
        })
    }

    pub fn contains(&self, v: u64) -> bool {
        self.gaps.binary_search(&v).is_err()
    }

    /// Number of gaps, which is the genus of the curve.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Non-gaps `0 = ρ_0 < ρ_1 < ...` up to `limit`.
    pub fn elements_up_to(&self, limit: u64) -> Vec<u64> {
        (0..=limit).filter(|&v| self.contains(v)).collect()
    }
}

fn representable(v: u64, q: u64, m: u64) -> bool {
    (0..=v / m).any(|j| (v - j * m) % q == 0)
}

/// Gap sequence of `<q, m>`.
pub fn gaps(q: u64, m: u64) -> Result<Vec<u64>, RrError> {
    Ok(Semigroup::new(q, m)?.gaps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monomial {
    pub i: u64,
    pub j: u64,
    pub pole_order: u64,
}

/// The monomials `x^i y^j` spanning `L(s P∞)`, sorted by pole order then `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialBasis {
    pub s: i64,
    pub entries: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn basis(q: u64, m: u64, s: i64) -> MonomialBasis {
    let mut entries = Vec::new();
    if s >= 0 {
        let s = s as u64;
        for j in 0..q {
            if j * m > s {
                break;
            }
            for i in 0..=(s - j * m) / q {
                entries.push(Monomial {
                    i,
                    j,
                    pole_order: pole_order(i, j, q, m),
                });
            }
        }
    }
    entries.sort_by_key(|e| (e.pole_order, e.j));
    MonomialBasis { s, entries }
}

/// `dim L(s P∞)`: the number of monomials in [`basis`].
pub fn dimension(q: u64, m: u64, s: i64) -> u64 {
    if s < 0 {
        return 0;
    }
    let s = s as u64;
    (0..q).take_while(|j| j * m <= s).map(|j| (s - j * m) / q + 1).sum()
}
