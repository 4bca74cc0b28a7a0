//! Arithmetic in GF(p^k).
//!
//! A [`Field`] is Z_p[X]/(f) for a monic irreducible `f`. Elements are the
//! canonical residues `c_0 + c_1 X + ... + c_{k-1} X^{k-1}`, encoded as the
//! integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Enumeration runs over this
//! integer, which is lexicographic order on the coefficient vector read from
//! the top coefficient down.
//!
//! Multiplication goes through exp/log tables built once per field from the
//! polynomial reference path in [`poly`]. Subfields are never materialized:
//! GF(q) inside GF(q^2) is the set fixed by `a -> a^q`.

pub(crate) mod poly;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u64 = 1 << 22;

/// Fields up to this order carry a full addition table.
const ADD_TABLE_MAX: u32 = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{k} exceeds the supported maximum")]
    TooLarge { p: u32, k: u32 },
    #[error("modulus must be monic of degree {expected} with coefficients below p")]
    BadModulus { expected: u32 },
    #[error("modulus is reducible over Z_{0}")]
    Reducible(u32),
    #[error("element does not belong to {0}")]
    FieldMismatch(String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{q} is not a power p^d of the characteristic with d <= {k}")]
    NotPowerOfP { q: u64, k: u32 },
    #[error("GF({q}) is not a subfield of GF({order})")]
    NotSubfield { q: u64, order: u64 },
}

/// An element of some [`Field`]. Carries a short tag identifying its field so
/// that [`Field::ensure`] can reject elements from a different field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    tag: u32,
}

impl FieldElement {
    /// Integer encoding `sum c_i p^i` of the coefficient vector.
    pub fn index(self) -> u32 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.value)
    }
}

struct Inner {
    p: u32,
    k: u32,
    order: u32,
    tag: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field GF(p^k). Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.k, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.order)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First monic irreducible polynomial of degree `k` over Z_p, scanning the
/// lower coefficients in the same order as field elements are enumerated.
pub fn first_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for idx in 0..count {
        let mut coeffs = digits(idx, p, k);
        coeffs.push(1);
        if poly::is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over Z_p")
}

fn digits(mut idx: u64, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = (idx % p as u64) as u32;
            idx /= p as u64;
            d
        })
        .collect()
}

impl Field {
    /// GF(p^k) with the canonical (lexicographically first irreducible) modulus.
    pub fn new(p: u32, k: u32) -> Result<Self, GfError> {
        Self::check_params(p, k)?;
        Self::build(p, k, first_irreducible(p, k))
    }

    /// GF(p^k) with a caller-supplied modulus, low degree first, monic.
    pub fn with_modulus(p: u32, k: u32, modulus: &[u32]) -> Result<Self, GfError> {
        Self::check_params(p, k)?;
        if modulus.len() != k as usize + 1
            || modulus[k as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(GfError::BadModulus { expected: k });
        }
        if !poly::is_irreducible(modulus, p) {
            return Err(GfError::Reducible(p));
        }
        Self::build(p, k, modulus.to_vec())
    }

    fn check_params(p: u32, k: u32) -> Result<(), GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if k == 0 {
            return Err(GfError::ZeroDegree);
        }
        match (p as u64).checked_pow(k) {
            Some(order) if order <= MAX_ORDER => Ok(()),
            _ => Err(GfError::TooLarge { p, k }),
        }
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Result<Self, GfError> {
        let order = p.pow(k);
        let pow_p: Vec<u32> = (0..k).map(|i| p.pow(i)).collect();
        let mut hasher = DefaultHasher::new();
        (p, k, &modulus).hash(&mut hasher);
        let tag = hasher.finish() as u32;

        let encode = |c: &[u32]| -> u32 { c.iter().zip(&pow_p).map(|(&a, &w)| a * w).sum() };
        let decode = |v: u32| -> Vec<u32> { poly::trim(digits(v as u64, p, k)) };

        // Primitive element: the first one whose order is exactly order - 1.
        let group = (order - 1) as u64;
        let factors = prime_factors(group);
        let generator = (1..order)
            .find(|&v| {
                let g = decode(v);
                factors
                    .iter()
                    .all(|&l| poly::pow_poly_mod(&g, group / l, &modulus, p) != [1])
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let g = decode(generator);
        let mut exp = Vec::with_capacity(group as usize);
        let mut log = vec![0u32; order as usize];
        let mut cur = vec![1u32];
        for i in 0..group as u32 {
            let v = encode(&cur);
            exp.push(v);
            log[v as usize] = i;
            cur = poly::mul_mod(&cur, &g, &modulus, p);
        }

        let neg: Vec<u32> = (0..order)
            .map(|v| encode(&digits(v as u64, p, k).iter().map(|&c| (p - c) % p).collect::<Vec<_>>()))
            .collect();

        let mut field = Inner {
            p,
            k,
            order,
            tag,
            modulus,
            pow_p,
            exp,
            log,
            neg,
            add: None,
        };
        if order <= ADD_TABLE_MAX {
            let mut table = vec![0u32; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    table[(a * order + b) as usize] = add_digits(&field, a, b);
                }
            }
            field.add = Some(table);
        }
        Ok(Field(Arc::new(field)))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Monic modulus, low degree first (length `degree + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    fn elem(&self, value: u32) -> FieldElement {
        FieldElement {
            value,
            tag: self.0.tag,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// The class of X, a root of the modulus.
    pub fn generator(&self) -> FieldElement {
        if self.0.k == 1 {
            // X ≡ -c_0 mod (X + c_0)
            self.elem((self.0.p - self.0.modulus[0]) % self.0.p)
        } else {
            self.elem(self.0.p)
        }
    }

    /// Image of an integer under Z -> Z_p -> GF(p^k).
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element from its integer encoding.
    pub fn from_index(&self, index: u32) -> Result<FieldElement, GfError> {
        if index < self.0.order {
            Ok(self.elem(index))
        } else {
            Err(GfError::FieldMismatch(self.to_string()))
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        if coeffs.len() > self.0.k as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(GfError::FieldMismatch(self.to_string()));
        }
        Ok(self.elem(coeffs.iter().zip(&self.0.pow_p).map(|(&c, &w)| c * w).sum()))
    }

    /// Coefficient vector of length `degree`, low degree first.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.value as u64, self.0.p, self.0.k)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.tag == self.0.tag && a.value < self.0.order
    }

    /// Rejects elements that were not produced by this field.
    pub fn ensure(&self, elems: &[FieldElement]) -> Result<(), GfError> {
        if elems.iter().all(|&a| self.contains(a)) {
            Ok(())
        } else {
            Err(GfError::FieldMismatch(self.to_string()))
        }
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order).map(|v| self.elem(v))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.0.add {
            Some(t) => self.elem(t[(a.value * self.0.order + b.value) as usize]),
            None => self.elem(add_digits(&self.0, a.value, b.value)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.elem(self.0.neg[a.value as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.value == 0 || b.value == 0 {
            return self.zero();
        }
        let n = self.0.order - 1;
        let s = self.0.log[a.value as usize] + self.0.log[b.value as usize];
        self.elem(self.0.exp[(if s >= n { s - n } else { s }) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.value == 0 {
            return Err(GfError::ZeroInverse);
        }
        let n = self.0.order - 1;
        let l = self.0.log[a.value as usize];
        Ok(self.elem(self.0.exp[((n - l) % n) as usize]))
    }

    /// Inverse through the extended Euclidean algorithm on the polynomial
    /// representative. Agrees with [`Field::inv`]; kept as the reference route.
    pub fn inv_euclid(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        let c = poly::trim(self.coeffs(a));
        let inv = poly::inv_poly_mod(&c, &self.0.modulus, self.0.p).ok_or(GfError::ZeroInverse)?;
        self.from_coeffs(&inv)
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if a.value == 0 {
            return self.zero();
        }
        let n = (self.0.order - 1) as u64;
        let l = self.0.log[a.value as usize] as u64;
        self.elem(self.0.exp[((l * (e % n)) % n) as usize])
    }

    /// Square-and-multiply over the polynomial representative.
    pub fn pow_reference(&self, a: FieldElement, e: u64) -> FieldElement {
        let c = poly::trim(self.coeffs(a));
        let r = poly::pow_poly_mod(&c, e, &self.0.modulus, self.0.p);
        self.from_coeffs(&r).expect("reduced residue")
    }

    /// Product through polynomial multiplication and reduction.
    pub fn mul_reference(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = poly::mul_mod(&self.coeffs(a), &self.coeffs(b), &self.0.modulus, self.0.p);
        self.from_coeffs(&r).expect("reduced residue")
    }

    /// Exponent d with q = p^d, d <= k.
    fn p_exponent(&self, q: u64) -> Result<u32, GfError> {
        let mut d = 0;
        let mut acc = 1u64;
        while acc < q && d <= self.0.k {
            acc *= self.0.p as u64;
            d += 1;
        }
        if acc == q && d <= self.0.k {
            Ok(d)
        } else {
            Err(GfError::NotPowerOfP { q, k: self.0.k })
        }
    }

    /// `a^q` for q a power of the characteristic.
    pub fn frobenius(&self, a: FieldElement, q: u64) -> Result<FieldElement, GfError> {
        self.p_exponent(q)?;
        Ok(self.pow(a, q))
    }

    /// Whether `a` lies in the subfield GF(q), i.e. `a^q == a`.
    pub fn in_subfield(&self, a: FieldElement, q: u64) -> Result<bool, GfError> {
        let d = self.p_exponent(q)?;
        if d == 0 || self.0.k % d != 0 {
            return Err(GfError::NotSubfield {
                q,
                order: self.0.order as u64,
            });
        }
        Ok(self.pow(a, q) == a)
    }

    /// Frobenius without validation; `q` must be a power of p.
    #[inline]
    pub(crate) fn conj(&self, a: FieldElement, q: u64) -> FieldElement {
        self.pow(a, q)
    }
}

fn add_digits(f: &Inner, mut a: u32, mut b: u32) -> u32 {
    let p = f.p;
    let mut out = 0;
    for &w in &f.pow_p {
        out += ((a % p + b % p) % p) * w;
        a /= p;
        b /= p;
    }
    out
}

/// `make_field` under its usual name: GF(p^k), with an optional modulus.
pub fn make_field(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Field, GfError> {
    match modulus {
        Some(m) => Field::with_modulus(p, k, m),
        None => Field::new(p, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<Field> {
        [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (7, 2), (3, 4)]
            .iter()
            .map(|&(p, k)| Field::new(p, k).unwrap())
            .collect()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(3, 1).unwrap().modulus(), &[0, 1]);
        // Oracle: a monic quadratic over Z_3 is irreducible iff it has no root.
        let first = (0..9u32)
            .map(|i| (i % 3, i / 3))
            .find(|&(c0, c1)| (0..3).all(|x| (x * x + c1 * x + c0) % 3 != 0))
            .unwrap();
        assert_eq!(first, (1, 0));
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
        assert_eq!(Field::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(Field::new(4, 2).unwrap_err(), GfError::NotPrime(4));
        assert_eq!(Field::new(3, 0).unwrap_err(), GfError::ZeroDegree);
        assert_eq!(Field::with_modulus(3, 2, &[2, 0, 1]).unwrap_err(), GfError::Reducible(3));
        assert!(matches!(Field::with_modulus(3, 2, &[1, 0, 2]), Err(GfError::BadModulus { .. })));
        assert!(matches!(Field::new(2, 40), Err(GfError::TooLarge { .. })));
        let f = Field::with_modulus(3, 2, &[2, 2, 1]).unwrap();
        assert_eq!(f.modulus(), &[2, 2, 1]);
    }

    #[test]
    fn deterministic_construction() {
        let a = Field::new(5, 2).unwrap();
        let b = make_field(5, 2, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.modulus(), b.modulus());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::new(3, 1).unwrap();
        let two = f.from_int(2);
        assert_eq!(f.add(two, two), f.one());
        let elems: Vec<u32> = f.elements().map(|e| e.index()).collect();
        assert_eq!(elems, vec![0, 1, 2]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                assert_eq!(f.add(a, f.zero()), a);
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.mul(a, f.one()), a);
                assert_eq!(f.pow(a, 0), f.one());
                if !a.is_zero() {
                    let ai = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, ai), f.one());
                    assert_eq!(f.inv_euclid(a).unwrap(), ai);
                    assert_eq!(f.pow(a, f.order() as u64 - 1), f.one());
                }
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.mul_reference(a, b));
                }
            }
            if f.order() <= 27 {
                for &a in &all {
                    for &b in &all {
                        for &c in &all {
                            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_of_zero() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.inv(f.zero()), Err(GfError::ZeroInverse));
        assert_eq!(f.inv_euclid(f.zero()), Err(GfError::ZeroInverse));
    }

    #[test]
    fn pow_matches_square_and_multiply() {
        let f = Field::new(2, 4).unwrap();
        for a in f.elements() {
            for e in [0, 1, 2, 7, 15, 16, 100] {
                assert_eq!(f.pow(a, e), f.pow_reference(a, e));
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism() {
        for f in small_fields() {
            let p = f.characteristic() as u64;
            for a in f.elements() {
                for b in f.elements() {
                    let fa = f.frobenius(a, p).unwrap();
                    let fb = f.frobenius(b, p).unwrap();
                    assert_eq!(f.frobenius(f.add(a, b), p).unwrap(), f.add(fa, fb));
                    assert_eq!(f.frobenius(f.mul(a, b), p).unwrap(), f.mul(fa, fb));
                }
            }
        }
    }

    #[test]
    fn frobenius_in_gf9() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            let twice = f.frobenius(f.frobenius(a, 3).unwrap(), 3).unwrap();
            assert_eq!(twice, a);
        }
        assert!(f.frobenius(f.one(), 2).is_err());
        assert!(f.frobenius(f.one(), 27).is_err());
    }

    #[test]
    fn subfield_membership() {
        let f = Field::new(3, 2).unwrap();
        let sub: Vec<_> = f.elements().filter(|&a| f.in_subfield(a, 3).unwrap()).collect();
        assert_eq!(sub.len(), 3);
        assert!(sub.contains(&f.zero()) && sub.contains(&f.one()));
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&f.add(a, b)));
                assert!(sub.contains(&f.mul(a, b)));
            }
        }
        // An element of multiplicative order 8 is not in GF(3).
        let prim = f
            .elements()
            .find(|&a| !a.is_zero() && (1..8).all(|e| f.pow(a, e) != f.one()))
            .unwrap();
        assert!(!f.in_subfield(prim, 3).unwrap());
        // GF(8) is not a subfield of GF(16).
        let g = Field::new(2, 4).unwrap();
        assert!(g.in_subfield(g.one(), 8).is_err());
        assert_eq!(g.elements().filter(|&a| g.in_subfield(a, 4).unwrap()).count(), 4);
    }

    #[test]
    fn generator_is_root_of_modulus() {
        for f in small_fields() {
            let x = f.generator();
            let mut acc = f.zero();
            for (i, &c) in f.modulus().iter().enumerate() {
                acc = f.add(acc, f.mul(f.from_int(c as i64), f.pow(x, i as u64)));
            }
            assert_eq!(acc, f.zero(), "{f:?}");
        }
    }

    #[test]
    fn mismatched_elements_are_rejected() {
        let f9 = Field::new(3, 2).unwrap();
        let f3 = Field::new(3, 1).unwrap();
        let a = f9.generator();
        assert!(f9.ensure(&[a]).is_ok());
        assert!(matches!(f3.ensure(&[a]), Err(GfError::FieldMismatch(_))));
        assert!(f3.from_index(3).is_err());
        assert!(f3.from_coeffs(&[3]).is_err());
    }

    #[test]
    fn coefficient_roundtrip() {
        let f = Field::new(5, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(a)).unwrap(), a);
        }
    }
}
