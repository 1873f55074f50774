use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `w + x i + y j + z ij` in the algebra `(a, b)`; the constants are supplied per operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuaternionElement {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl QuaternionElement {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Self { w, x, y, z }
    }

    pub fn zero() -> Self {
        Self::scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::scalar(BigRational::one())
    }

    pub fn scalar(w: BigRational) -> Self {
        Self { w, x: BigRational::zero(), y: BigRational::zero(), z: BigRational::zero() }
    }

    pub fn i() -> Self {
        Self { x: BigRational::one(), ..Self::zero() }
    }

    pub fn j() -> Self {
        Self { y: BigRational::one(), ..Self::zero() }
    }

    pub fn k() -> Self {
        Self { z: BigRational::one(), ..Self::zero() }
    }

    pub fn from_coords(c: [BigRational; 4]) -> Self {
        let [w, x, y, z] = c;
        Self { w, x, y, z }
    }

    pub fn coords(&self) -> [&BigRational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { w: &self.w + &o.w, x: &self.x + &o.x, y: &self.y + &o.y, z: &self.z + &o.z }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { w: &self.w - &o.w, x: &self.x - &o.x, y: &self.y - &o.y, z: &self.z - &o.z }
    }

    pub fn neg(&self) -> Self {
        Self { w: -&self.w, x: -&self.x, y: -&self.y, z: -&self.z }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { w: &self.w * q, x: &self.x * q, y: &self.y * q, z: &self.z * q }
    }

    /// Product in `(a, b)`.
    pub fn mul(&self, o: &Self, a: &BigRational, b: &BigRational) -> Self {
        let ab = a * b;
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&o.w, &o.x, &o.y, &o.z);
        Self {
            w: w1 * w2 + a * (x1 * x2) + b * (y1 * y2) - &ab * (z1 * z2),
            x: w1 * x2 + x1 * w2 - b * (y1 * z2) + b * (z1 * y2),
            y: w1 * y2 + y1 * w2 + a * (x1 * z2) - a * (z1 * x2),
            z: w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        }
    }

    pub fn conjugate(&self) -> Self {
        Self { w: self.w.clone(), x: -&self.x, y: -&self.y, z: -&self.z }
    }

    /// Reduced norm `w^2 - a x^2 - b y^2 + ab z^2`.
    pub fn norm(&self, a: &BigRational, b: &BigRational) -> BigRational {
        &self.w * &self.w - a * (&self.x * &self.x) - b * (&self.y * &self.y)
            + a * b * (&self.z * &self.z)
    }

    pub fn inverse(&self, a: &BigRational, b: &BigRational) -> Result<Self> {
        let n = self.norm(a, b);
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conjugate().scale(&(BigRational::one() / n)))
    }
}

impl fmt::Display for QuaternionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coords().into_iter().zip(["", "i", "j", "ij"]) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if name.is_empty() {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", name)?;
            } else {
                write!(f, "({}){}", c, name)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
