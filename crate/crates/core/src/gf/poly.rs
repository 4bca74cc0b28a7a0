//! Dense polynomials over Z_p.
//!
//! Coefficients are stored low degree first and kept trimmed (no trailing
//! zeros); the zero polynomial is the empty vector. These routines are the
//! slow reference path of the field module: tables are built from them and
//! tests check the tables against them.

pub(crate) fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p as u64 - 2, p)
}

fn pow_mod(a: u32, mut e: u64, p: u32) -> u32 {
    let p = p as u64;
    let mut base = a as u64 % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

#[cfg(test)]
pub(crate) fn add(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub(crate) fn scale(a: &[u32], c: u32, p: u32) -> Vec<u32> {
    trim(a.iter().map(|&x| ((x as u64 * c as u64) % p as u64) as u32).collect())
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn div_rem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = inv_mod(b[db], p) as u64;
    let mut r = trim(a.to_vec());
    let mut quot = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = (r[dr] as u64 * lead_inv % p as u64) as u32;
        let shift = dr - db;
        quot[shift] = c;
        for (i, &bc) in b[..=db].iter().enumerate() {
            let t = (bc as u64 * c as u64 % p as u64) as u32;
            r[i + shift] = (r[i + shift] + p - t) % p;
        }
        r = trim(r);
    }
    (trim(quot), r)
}

pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    div_rem(a, b, p).1
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), modulus, p)
}

pub(crate) fn pow_poly_mod(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let mut acc = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, modulus, p);
        }
        b = mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    acc
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    match degree(&a) {
        Some(d) => scale(&a, inv_mod(a[d], p), p),
        None => a,
    }
}

/// Inverse of `a` modulo an irreducible `modulus` by the extended Euclidean
/// algorithm. Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn inv_poly_mod(a: &[u32], modulus: &[u32], p: u32) -> Option<Vec<u32>> {
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = rem(a, modulus, p);
    let mut t0: Vec<u32> = Vec::new();
    let mut t1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (quot, r) = div_rem(&r0, &r1, p);
        let t = sub(&t0, &mul(&quot, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    // r0 is the gcd; for an irreducible modulus it is a nonzero constant.
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = inv_mod(r0[0], p);
    Some(rem(&scale(&t0, c, p), modulus, p))
}

/// Irreducibility over Z_p: `f` of degree k has no irreducible factor of
/// degree d for any d <= k/2, i.e. gcd(f, X^{p^d} - X) = 1.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut h = rem(&x, f, p);
    for _ in 1..=k / 2 {
        h = pow_poly_mod(&h, p as u64, f, p);
        let g = gcd(f, &sub(&h, &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_reconstructs() {
        let p = 5;
        let a = vec![3, 0, 4, 1, 2];
        let b = vec![1, 2, 3];
        let (q, r) = div_rem(&a, &b, p);
        assert!(degree(&r).map_or(true, |d| d < 2));
        assert_eq!(add(&mul(&q, &b, p), &r, p), trim(a));
    }

    #[test]
    fn irreducible_quadratics_over_z3() {
        // X^2 + 1, X^2 + X + 2, X^2 + 2X + 2 are the three monic irreducibles.
        let mut found = Vec::new();
        for c1 in 0..3 {
            for c0 in 0..3 {
                if is_irreducible(&[c0, c1, 1], 3) {
                    found.push((c0, c1));
                }
            }
        }
        assert_eq!(found, vec![(1, 0), (2, 1), (2, 2)]);
    }

    #[test]
    fn product_of_quadratic_and_cubic_is_reducible() {
        // (X^2 + X + 1)(X^3 + X + 1) over Z_2 has no roots but is reducible.
        let f = mul(&[1, 1, 1], &[1, 1, 0, 1], 2);
        assert_eq!(degree(&f), Some(5));
        assert!(f[0] == 1 && f.iter().sum::<u32>() % 2 == 1);
        assert!(!is_irreducible(&f, 2));
    }

    #[test]
    fn extended_gcd_inverse() {
        let m = vec![1, 0, 1];
        for c0 in 0..3 {
            for c1 in 0..3 {
                let a = trim(vec![c0, c1]);
                match inv_poly_mod(&a, &m, 3) {
                    None => assert!(a.is_empty()),
                    Some(b) => assert_eq!(mul_mod(&a, &b, &m, 3), vec![1]),
                }
            }
        }
    }
}
