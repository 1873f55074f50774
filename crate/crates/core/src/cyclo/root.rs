use core::fmt;

use crate::arith::{gcd, lcm};

use super::CyclotomicElement;

/// `zeta_W^e`, stored with `W` equal to its exact order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    conductor: u64,
    exponent: u64,
}

impl RootOfUnity {
    pub const ONE: Self = Self { conductor: 1, exponent: 0 };

    pub fn new(conductor: u64, exponent: i64) -> Self {
        assert!(conductor > 0, "root of unity with conductor 0");
        let e = exponent.rem_euclid(conductor as i64) as u64;
        if e == 0 {
            return Self::ONE;
        }
        let g = gcd(e, conductor);
        Self { conductor: conductor / g, exponent: e / g }
    }

    pub fn minus_one() -> Self {
        Self::new(2, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.conductor
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1
    }

    /// Exponent of this root when written as a power of `zeta_w`; `w` must be a multiple of the order.
    pub fn exponent_in(&self, w: u64) -> u64 {
        assert_eq!(w % self.conductor, 0, "{} does not host {}", w, self);
        self.exponent * (w / self.conductor)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let w = lcm(self.conductor, other.conductor);
        Self::new(w, (self.exponent_in(w) + other.exponent_in(w)) as i64)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.conductor, -(self.exponent as i64))
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.conductor as i128);
        Self::new(self.conductor, e as i64)
    }

    pub fn to_cyclotomic(&self) -> CyclotomicElement {
        CyclotomicElement::zeta_pow(self.conductor, self.exponent as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.conductor, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (w, 1) => write!(f, "zeta_{}", w),
            (w, e) => write!(f, "zeta_{}^{}", w, e),
        }
    }
}
