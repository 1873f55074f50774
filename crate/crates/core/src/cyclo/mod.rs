//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element of conductor `N` is a coefficient vector of length `phi(N)` in the
//! power basis `1, zeta_N, ..., zeta_N^(phi(N)-1)` of `Q[x]/Phi_N(x)`. Elements of
//! different conductors are combined by embedding both into the lcm conductor.

mod poly;
mod root;
mod sqrt;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{canonical_conductor, divisors, gcd, lcm, totient, units_mod};
use crate::error::{Error, Result};
use crate::linalg;

pub use poly::cyclotomic_polynomial;
pub use root::RootOfUnity;
pub use sqrt::sqrt_as_cyclotomic;

#[derive(Clone, Debug)]
pub struct CyclotomicElement {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

/// `x mod Phi` for integer coefficients, in `i128` while nothing overflows.
fn reduce_small(raw: &[BigInt], modulus: &[(usize, i128)], deg: usize) -> Option<Vec<i128>> {
    let mut v: Vec<i128> = raw.iter().map(|c| i128::try_from(c).ok()).collect::<Option<_>>()?;
    for i in (deg..v.len()).rev() {
        let c = core::mem::replace(&mut v[i], 0);
        if c == 0 {
            continue;
        }
        let base = i - deg;
        for &(j, m) in modulus {
            v[base + j] = v[base + j].checked_sub(c.checked_mul(m)?)?;
        }
    }
    v.truncate(deg);
    Some(v)
}

pub(crate) fn reduce_integers(mut raw: Vec<BigInt>, phi_n: &[BigInt]) -> Vec<BigInt> {
    let deg = phi_n.len() - 1;
    if raw.len() <= deg {
        raw.resize(deg, BigInt::zero());
        return raw;
    }
    let small: Option<Vec<(usize, i128)>> = phi_n[..deg]
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(j, m)| i128::try_from(m).ok().map(|m| (j, m)))
        .collect();
    if let Some(v) = small.and_then(|m| reduce_small(&raw, &m, deg)) {
        return v.into_iter().map(BigInt::from).collect();
    }
    for i in (deg..raw.len()).rev() {
        let c = core::mem::replace(&mut raw[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        let base = i - deg;
        for (j, m) in phi_n[..deg].iter().enumerate() {
            if !m.is_zero() {
                raw[base + j] -= &c * m;
            }
        }
    }
    raw.truncate(deg);
    raw
}

/// Common denominator and the integer numerators over it.
fn cleared(c: &[BigRational]) -> (BigInt, Vec<BigInt>) {
    let den = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (den, ints)
}

fn int_convolution(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let small = |v: &[BigInt]| v.iter().map(|x| i64::try_from(x).ok()).collect::<Option<Vec<i64>>>();
    if let (Some(x), Some(y)) = (small(a), small(b)) {
        let mut out = vec![0i128; x.len() + y.len() - 1];
        let ok = x.iter().enumerate().all(|(i, &p)| {
            p == 0
                || y.iter().enumerate().all(|(j, &q)| match out[i + j].checked_add(p as i128 * q as i128) {
                    Some(v) => {
                        out[i + j] = v;
                        true
                    }
                    None => false,
                })
        });
        if ok {
            return out.into_iter().map(BigInt::from).collect();
        }
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
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

/// Clears denominators and reduces over the integers.
fn reduce_in_place(raw: &mut Vec<BigRational>, phi_n: &[BigInt]) {
    let (den, ints) = cleared(raw);
    *raw = reduce_integers(ints, phi_n)
        .into_iter()
        .map(|x| BigRational::new(x, den.clone()))
        .collect();
}

/// Reduces raw coefficients (ascending powers of `zeta_N`) modulo `Phi_N`.
pub fn reduce_mod_cyclotomic(raw: &[BigRational], n: u64) -> CyclotomicElement {
    assert!(n >= 1, "conductor must be positive");
    let mut v = raw.to_vec();
    reduce_in_place(&mut v, &cyclotomic_polynomial(n));
    CyclotomicElement { conductor: n, coeffs: v }
}

impl CyclotomicElement {
    pub fn zero(n: u64) -> Self {
        Self { conductor: n, coeffs: vec![BigRational::zero(); totient(n) as usize] }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        Self { conductor: 1, coeffs: vec![q] }
    }

    pub fn integer(k: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(k)))
    }

    /// `zeta_n^k` in conductor `n`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        reduce_mod_cyclotomic(&raw, n)
    }

    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under the inclusion `Q(zeta_N) -> Q(zeta_M)`; requires `N | M`.
    pub fn embed(&self, m: u64) -> Self {
        assert_eq!(m % self.conductor, 0, "cannot embed conductor {} into {}", self.conductor, m);
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut raw = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        reduce_mod_cyclotomic(&raw, m)
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.conductor, other.conductor);
        (self.embed(m), other.embed(m))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let inv = poly::inverse_mod(&self.coeffs, &modulus).ok_or(Error::DivisionByZero)?;
        Ok(reduce_mod_cyclotomic(&inv, self.conductor))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one().embed(self.conductor);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Image under `zeta_N -> zeta_N^a`.
    pub fn galois_act(&self, a: i64) -> Result<Self> {
        let n = self.conductor;
        let a = a.rem_euclid(n as i64) as u64;
        if gcd(a, n) != 1 && n > 1 {
            return Err(Error::InvalidAutomorphism { a, modulus: n });
        }
        let mut raw = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = ((i as u64 * a) % n) as usize;
            raw[j] += c;
        }
        Ok(reduce_mod_cyclotomic(&raw, n))
    }

    /// Checks `x^k = 1` style identities by scanning `+-zeta_N^j`.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let n = self.conductor;
        let mut z = Self::one().embed(n);
        let step = Self::zeta(n);
        for j in 0..n {
            if z.coeffs == self.coeffs {
                return Some(RootOfUnity::new(n, j as i64));
            }
            if z.coeffs.iter().zip(&self.coeffs).all(|(a, b)| *a == -b.clone()) {
                return Some(RootOfUnity::new(2 * n, (n + 2 * j) as i64));
            }
            z = &z * &step;
        }
        None
    }

    /// Least `m >= 1` with `x^m = 1`.
    pub fn root_of_unity_order(&self) -> Result<u64> {
        self.as_root_of_unity()
            .map(|r| r.order())
            .ok_or(Error::NotARootOfUnity)
    }

    /// Rewrites the element in the smallest conductor whose field contains it.
    pub fn minimize(&self) -> Self {
        let n = self.conductor;
        for m in divisors(n) {
            if m == n {
                break;
            }
            if m % 4 == 2 {
                continue;
            }
            let fixed = units_mod(n)
                .into_iter()
                .filter(|a| a % m == 1 % m)
                .all(|a| self.galois_act(a as i64).is_ok_and(|y| y.coeffs == self.coeffs));
            if fixed {
                if let Some(y) = self.restrict(m) {
                    return y;
                }
            }
        }
        self.clone()
    }

    /// Coordinates in conductor `m | N`, when the element lies in `Q(zeta_m)`.
    pub fn restrict(&self, m: u64) -> Option<Self> {
        let n = self.conductor;
        if n % m != 0 {
            let l = lcm(n, m);
            return self.embed(l).restrict(m);
        }
        let dim = totient(m) as usize;
        let columns: Vec<Self> = (0..dim).map(|i| Self::zeta_pow(m, i as i64).embed(n)).collect();
        let rows: Vec<Vec<BigRational>> = (0..self.coeffs.len())
            .map(|r| columns.iter().map(|c| c.coeffs[r].clone()).collect())
            .collect();
        let x = linalg::solve(&rows, &self.coeffs, dim)?;
        Some(Self { conductor: m, coeffs: x })
    }

    pub fn lies_in_conductor(&self, w: u64) -> bool {
        let w = canonical_conductor(w);
        let own = canonical_conductor(self.minimize().conductor);
        w % own == 0
    }

    /// Serializable fraction strings of the coefficient vector.
    pub fn coeff_strings(&self) -> Vec<String> {
        use alloc::string::ToString;
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicElement {}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, rhs: Self) -> CyclotomicElement {
        let (mut a, b) = self.unify(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, rhs: Self) -> CyclotomicElement {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, rhs: Self) -> CyclotomicElement {
        let (a, b) = self.unify(rhs);
        let (da, ia) = cleared(&a.coeffs);
        let (db, ib) = cleared(&b.coeffs);
        let raw = int_convolution(&ia, &ib);
        let den = da * db;
        let coeffs = reduce_integers(raw, &cyclotomic_polynomial(a.conductor))
            .into_iter()
            .map(|x| BigRational::new(x, den.clone()))
            .collect();
        CyclotomicElement { conductor: a.conductor, coeffs }
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{}", i)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Fixing data of the field generated over `Q` by a set of cyclotomic values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratedSubfield {
    pub conductor: u64,
    /// Units `a mod N` with `zeta_N -> zeta_N^a` fixing every value, ascending.
    pub fixing: Vec<u64>,
    pub degree: u64,
}

impl GeneratedSubfield {
    /// Whether `zeta_n` lies in this field.
    pub fn contains_zeta(&self, n: u64) -> bool {
        let big = lcm(self.conductor, n);
        let z = CyclotomicElement::zeta(n).embed(big);
        units_mod(big)
            .into_iter()
            .filter(|a| self.fixing.contains(&(a % self.conductor)))
            .all(|a| z.galois_act(a as i64).is_ok_and(|y| y == z))
    }
}

/// The subfield `Q(values)` of `Q(zeta_N)` with its fixing subgroup.
pub fn generated_subfield(values: &[CyclotomicElement], n: u64) -> Result<GeneratedSubfield> {
    let mut lifted = Vec::with_capacity(values.len());
    for v in values {
        if n % v.conductor() != 0 {
            return Err(Error::InsufficientCoefficients { required: v.conductor(), requested: n });
        }
        lifted.push(v.embed(n));
    }
    let fixing: Vec<u64> = units_mod(n)
        .into_iter()
        .filter(|&a| {
            lifted
                .iter()
                .all(|v| v.galois_act(a as i64).is_ok_and(|y| y.coeffs == v.coeffs))
        })
        .collect();
    let degree = totient(n) / fixing.len() as u64;
    Ok(GeneratedSubfield { conductor: n, fixing, degree })
}

/// Least common conductor of a set of values.
pub fn common_conductor<'a, I: IntoIterator<Item = &'a CyclotomicElement>>(values: I) -> u64 {
    values.into_iter().fold(1, |acc, v| lcm(acc, v.conductor()))
}
