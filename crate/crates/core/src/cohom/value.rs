use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorize_rational, is_prime};
use crate::cyclo::{CyclotomicElement, RootOfUnity};
use crate::error::{Error, Result};

/// Positive primes `p_1, ..., p_k` spanning the free part of the coefficients.
///
/// Signs and other roots of unity always live in the torsion part, so a declared
/// `-1` is accepted and recorded but takes no coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoefficientBasis {
    primes: Vec<u64>,
    declares_sign: bool,
}

impl CoefficientBasis {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        for (i, &p) in primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(Error::InconsistentDatum(format!("basis element {} is not a prime", p)));
            }
            if primes[..i].contains(&p) {
                return Err(Error::InconsistentDatum(format!("basis element {} repeated", p)));
            }
        }
        Ok(Self { primes, declares_sign: false })
    }

    /// Parses entries such as `"-1"`, `"2"`, `"3"`.
    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        let mut primes = Vec::new();
        let mut declares_sign = false;
        for s in entries {
            let s = s.as_ref().trim();
            if s == "-1" {
                declares_sign = true;
                continue;
            }
            let p: u64 = s
                .parse()
                .map_err(|_| Error::InconsistentDatum(format!("basis element {:?} is not a prime", s)))?;
            primes.push(p);
        }
        let mut b = Self::new(primes)?;
        b.declares_sign = declares_sign;
        Ok(b)
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn entries(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.declares_sign {
            out.push("-1".to_string());
        }
        out.extend(self.primes.iter().map(|p| p.to_string()));
        out
    }
}

/// `torsion * prod p_i^{e_i}` over a [`CoefficientBasis`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicativeValue {
    pub torsion: RootOfUnity,
    pub exponents: Vec<i64>,
}

impl MultiplicativeValue {
    pub fn one(k: usize) -> Self {
        Self { torsion: RootOfUnity::ONE, exponents: vec![0; k] }
    }

    pub fn new(torsion: RootOfUnity, exponents: Vec<i64>) -> Self {
        Self { torsion, exponents }
    }

    pub fn from_rational(q: &BigRational, basis: &CoefficientBasis) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::CoefficientBasisTooSmall("0".into()));
        }
        let (sign, factors) = factorize_rational(q);
        let mut exponents = vec![0; basis.len()];
        for (p, e) in factors {
            match basis.primes.iter().position(|&b| b == p) {
                Some(i) => exponents[i] = e,
                None => return Err(Error::CoefficientBasisTooSmall(q.to_string())),
            }
        }
        let torsion = if sign < 0 { RootOfUnity::minus_one() } else { RootOfUnity::ONE };
        Ok(Self { torsion, exponents })
    }

    pub fn is_one(&self) -> bool {
        self.torsion.is_one() && self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            torsion: self.torsion.mul(&other.torsion),
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self { torsion: self.torsion.inverse(), exponents: self.exponents.iter().map(|e| -e).collect() }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, k: i64) -> Self {
        Self { torsion: self.torsion.pow(k), exponents: self.exponents.iter().map(|e| e * k).collect() }
    }

    /// The rational value when the torsion part is `+-1`.
    pub fn to_rational(&self, basis: &CoefficientBasis) -> Option<BigRational> {
        let sign = match self.torsion.order() {
            1 => BigRational::one(),
            2 => -BigRational::one(),
            _ => return None,
        };
        Some(sign * prime_power_product(basis, &self.exponents))
    }

    pub fn to_cyclotomic(&self, basis: &CoefficientBasis) -> CyclotomicElement {
        let free = CyclotomicElement::rational(prime_power_product(basis, &self.exponents));
        &self.torsion.to_cyclotomic() * &free
    }

    pub fn display<'a>(&'a self, basis: &'a CoefficientBasis) -> impl fmt::Display + 'a {
        DisplayValue { v: self, basis }
    }
}

fn prime_power_product(basis: &CoefficientBasis, exponents: &[i64]) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (&p, &e) in basis.primes.iter().zip(exponents) {
        let pp = num_traits::pow(BigInt::from(p), e.unsigned_abs() as usize);
        if e >= 0 {
            num *= pp;
        } else {
            den *= pp;
        }
    }
    BigRational::new(num, den)
}

struct DisplayValue<'a> {
    v: &'a MultiplicativeValue,
    basis: &'a CoefficientBasis,
}

impl fmt::Display for DisplayValue<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.v.to_rational(self.basis) {
            Some(q) => write!(f, "{}", q),
            None => {
                let free = prime_power_product(self.basis, &self.v.exponents);
                if free.is_one() {
                    write!(f, "{}", self.v.torsion)
                } else if free.is_negative() {
                    write!(f, "{}*({})", self.v.torsion, free)
                } else {
                    write!(f, "{}*{}", self.v.torsion, free)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat};

    #[test]
    fn rational_round_trip() {
        let basis = CoefficientBasis::parse(&["-1", "2", "3"]).unwrap();
        assert_eq!(basis.len(), 2);
        for q in [rat(1), rat(-1), rat(12), frac(-3, 8)] {
            let v = MultiplicativeValue::from_rational(&q, &basis).unwrap();
            assert_eq!(v.to_rational(&basis), Some(q.clone()));
            assert_eq!(v.to_cyclotomic(&basis), CyclotomicElement::rational(q));
        }
        assert!(matches!(
            MultiplicativeValue::from_rational(&rat(5), &basis),
            Err(Error::CoefficientBasisTooSmall(_))
        ));
    }

    #[test]
    fn bad_basis() {
        assert!(CoefficientBasis::parse(&["4"]).is_err());
        assert!(CoefficientBasis::parse(&["2", "2"]).is_err());
        assert!(CoefficientBasis::parse(&["x"]).is_err());
    }

    #[test]
    fn group_law() {
        let basis = CoefficientBasis::new(vec![2, 5]).unwrap();
        let a = MultiplicativeValue::from_rational(&frac(-2, 5), &basis).unwrap();
        let b = MultiplicativeValue::new(RootOfUnity::new(3, 1), vec![1, 0]);
        assert!(a.mul(&a.inverse()).is_one());
        assert_eq!(a.pow(2).to_rational(&basis), Some(frac(4, 25)));
        assert_eq!(a.mul(&b).torsion, RootOfUnity::new(6, 5));
        assert_eq!(b.to_rational(&basis), None);
        assert_eq!(alloc::format!("{}", b.display(&basis)), "zeta_3*2");
    }
}
