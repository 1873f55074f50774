//! Dense polynomials over `Q`, ascending coefficient order.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{divisors, mobius};

pub type Poly = Vec<BigRational>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Euclidean division; `b` must be nonzero.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let lead_inv = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (j, c) in b.iter().enumerate().take(db + 1) {
            if !c.is_zero() {
                r[shift + j] -= &f * c;
            }
        }
        q[shift] = f;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Inverse of `a` modulo `m`, assuming `gcd(a, m) = 1`; `None` otherwise.
pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Poly> {
    // extended Euclid tracking only the coefficient of a
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let qs = mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), BigRational::zero());
        }
        for (x, y) in s2.iter_mut().zip(&qs) {
            *x -= y;
        }
        trim(&mut s2);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is the gcd
    if degree(&r0) != Some(0) {
        return None;
    }
    let inv = r0[0].recip();
    let mut out: Poly = s0.into_iter().map(|c| c * &inv).collect();
    let (_, rem) = divrem(&out, m);
    out = rem;
    Some(out)
}

/// The `n`-th cyclotomic polynomial, as integer coefficients in ascending order.
///
/// `prod (x^d - 1)^mu(n/d)`: multiplications first, then exact divisions, each by a
/// binomial and therefore linear in the length.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut p: Vec<i128> = vec![1];
    let ds = divisors(n);
    for &d in &ds {
        if mobius(n / d) == 1 {
            let d = d as usize;
            let mut out = vec![0i128; p.len() + d];
            for (i, &c) in p.iter().enumerate() {
                out[i + d] += c;
                out[i] -= c;
            }
            p = out;
        }
    }
    for &d in &ds {
        if mobius(n / d) == -1 {
            // p = q (x^d - 1): q[i] = p[i + d] + q[i + d], from the top
            let d = d as usize;
            let qlen = p.len() - d;
            let mut q = vec![0i128; qlen];
            for i in (0..qlen).rev() {
                q[i] = p[i + d] + if i + d < qlen { q[i + d] } else { 0 };
            }
            p = q;
        }
    }
    p.into_iter().map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ints(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), [-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), [1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), [1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(8)), [1, 0, 0, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), [1, 0, -1, 0, 1]);
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&BigInt::from(-2)));
    }

    #[test]
    fn modular_inverse() {
        // (x + 1)^{-1} mod x^2 + 1 = (1 - x)/2
        let m = [rat(1), rat(0), rat(1)];
        let inv = inverse_mod(&[rat(1), rat(1)], &m).unwrap();
        assert_eq!(inv, [crate::arith::frac(1, 2), crate::arith::frac(-1, 2)]);
        assert!(inverse_mod(&[rat(1), rat(1)], &[rat(-1), rat(0), rat(1)]).is_none());
    }
}
