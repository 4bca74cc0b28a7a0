//! Minimum distance by exhaustive codeword scan or by support search on a
//! parity-check matrix, falling back to an interval when neither fits the
//! work budget.

use itertools::Itertools;
use serde::Serialize;

use super::{CodeError, LinearCode};
use crate::gf::FieldElement;

/// Default cap on candidates examined by a single distance search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMethod {
    ExhaustiveCodewords,
    SupportSearch,
    GoppaBoundOnly,
}

/// Minimum distance, exact when `lower == upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub lower: usize,
    pub upper: usize,
    pub method: DistanceMethod,
    /// Codewords or column subsets examined.
    pub work: u64,
}

impl DistanceResult {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub(super) fn min_distance(code: &LinearCode, budget: u64, designed: Option<usize>) -> Result<DistanceResult, CodeError> {
    let k = code.dimension();
    if k == 0 {
        return Err(CodeError::ZeroCode);
    }
    let order = code.field().order() as u64;
    let codewords = order.checked_pow(k as u32).map(|t| t - 1);
    if let Some(total) = codewords.filter(|&t| t <= budget) {
        let d = exhaustive(code);
        return Ok(DistanceResult {
            lower: d,
            upper: d,
            method: DistanceMethod::ExhaustiveCodewords,
            work: total,
        });
    }
    Ok(support_search(code, budget, designed))
}

/// Scans every nonzero codeword. The code is treated as a Z_p-space spanned
/// by `X^t · g_i`; an odometer over Z_p digits visits each codeword once and
/// each step adds one spanning vector.
fn exhaustive(code: &LinearCode) -> usize {
    let f = code.field();
    let p = f.characteristic();
    let n = code.length();
    let gen = code.generator();
    let basis: Vec<FieldElement> = (0..f.degree())
        .map(|t| f.from_index(p.pow(t)).expect("power of p below the order"))
        .collect();
    let spanning: Vec<Vec<FieldElement>> = gen
        .row_vectors()
        .flat_map(|row| basis.iter().map(move |&b| row.iter().map(|&a| f.mul(a, b)).collect()))
        .collect();

    let mut digits = vec![0u32; spanning.len()];
    let mut word = vec![f.zero(); n];
    let mut best = n;
    'outer: loop {
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                break 'outer;
            }
            for (w, &g) in word.iter_mut().zip(&spanning[pos]) {
                *w = f.add(*w, g);
            }
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        let weight = word.iter().filter(|a| !a.is_zero()).count();
        if weight != 0 && weight < best {
            best = weight;
        }
    }
    best
}

/// Smallest `w` such that some `w` columns of a parity-check matrix are
/// linearly dependent.
fn support_search(code: &LinearCode, budget: u64, designed: Option<usize>) -> DistanceResult {
    let n = code.length();
    let k = code.dimension();
    let singleton = n - k + 1;
    let h = code.parity_check();
    let mut work = 0u64;
    for w in 1..=singleton {
        let cost = binomial(n as u64, w as u64);
        if work.saturating_add(cost) > budget {
            return DistanceResult {
                lower: designed.unwrap_or(0).max(w).min(singleton),
                upper: singleton,
                method: DistanceMethod::GoppaBoundOnly,
                work,
            };
        }
        for cols in (0..n).combinations(w) {
            work += 1;
            if h.select_columns(&cols).rank() < w {
                return DistanceResult {
                    lower: w,
                    upper: w,
                    method: DistanceMethod::SupportSearch,
                    work,
                };
            }
        }
    }
    unreachable!("any n - k + 1 columns of an (n - k)-row matrix are dependent")
}
