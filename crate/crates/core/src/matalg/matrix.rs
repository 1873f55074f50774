use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::quaternion::QuaternionElement;
use crate::csa::QuaternionAlgebraQ;
use crate::error::{Error, Result};
use crate::linalg;

/// `M_n(Q)` or `M_n((a, b))`, viewed as a `Q`-algebra through the flattening basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    n: usize,
    algebra: Option<QuaternionAlgebraQ>,
}

impl Ambient {
    pub fn matrices(n: usize) -> Self {
        assert!(n > 0);
        Self { n, algebra: None }
    }

    pub fn over_quaternions(n: usize, algebra: QuaternionAlgebraQ) -> Self {
        assert!(n > 0);
        Self { n, algebra: Some(algebra) }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> Option<&QuaternionAlgebraQ> {
        self.algebra.as_ref()
    }

    fn coords_per_entry(&self) -> usize {
        if self.algebra.is_some() {
            4
        } else {
            1
        }
    }

    /// `Q`-dimension.
    pub fn dim(&self) -> usize {
        self.n * self.n * self.coords_per_entry()
    }

    /// Degree as a central simple algebra: `sqrt(dim)`.
    pub fn degree(&self) -> usize {
        if self.algebra.is_some() {
            2 * self.n
        } else {
            self.n
        }
    }

    pub fn zero(&self) -> MatrixOverB {
        MatrixOverB {
            ambient: self.clone(),
            entries: (0..self.n * self.n).map(|_| QuaternionElement::zero()).collect(),
        }
    }

    pub fn scalar(&self, q: &BigRational) -> MatrixOverB {
        let mut m = self.zero();
        for i in 0..self.n {
            m.entries[i * self.n + i] = QuaternionElement::scalar(q.clone());
        }
        m
    }

    pub fn identity(&self) -> MatrixOverB {
        self.scalar(&BigRational::one())
    }

    pub fn from_entries(&self, rows: Vec<Vec<QuaternionElement>>) -> Result<MatrixOverB> {
        if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::AmbientMismatch);
        }
        let entries: Vec<QuaternionElement> = rows.into_iter().flatten().collect();
        if self.algebra.is_none() && entries.iter().any(|e| !e.is_scalar()) {
            return Err(Error::AmbientMismatch);
        }
        Ok(MatrixOverB { ambient: self.clone(), entries })
    }

    pub fn from_rationals(&self, rows: &[Vec<BigRational>]) -> Result<MatrixOverB> {
        self.from_entries(
            rows.iter()
                .map(|r| r.iter().map(|q| QuaternionElement::scalar(q.clone())).collect())
                .collect(),
        )
    }

    /// A quaternion on the diagonal.
    pub fn diagonal(&self, q: &QuaternionElement) -> Result<MatrixOverB> {
        if self.algebra.is_none() && !q.is_scalar() {
            return Err(Error::AmbientMismatch);
        }
        let mut m = self.zero();
        for i in 0..self.n {
            m.entries[i * self.n + i] = q.clone();
        }
        Ok(m)
    }

    pub fn basis_element(&self, k: usize) -> MatrixOverB {
        let mut v = alloc::vec![BigRational::zero(); self.dim()];
        v[k] = BigRational::one();
        self.unflatten(&v)
    }

    pub fn unflatten(&self, v: &[BigRational]) -> MatrixOverB {
        let c = self.coords_per_entry();
        let entries = v
            .chunks(c)
            .map(|ch| {
                if c == 1 {
                    QuaternionElement::scalar(ch[0].clone())
                } else {
                    QuaternionElement::new(ch[0].clone(), ch[1].clone(), ch[2].clone(), ch[3].clone())
                }
            })
            .collect();
        MatrixOverB { ambient: self.clone(), entries }
    }
}

/// An element of an [`Ambient`] algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOverB {
    ambient: Ambient,
    entries: Vec<QuaternionElement>,
}

impl MatrixOverB {
    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuaternionElement {
        &self.entries[i * self.ambient.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<QuaternionElement>> {
        self.entries.chunks(self.ambient.n).map(|r| r.to_vec()).collect()
    }

    pub fn flatten(&self) -> Vec<BigRational> {
        let c = self.ambient.coords_per_entry();
        self.entries
            .iter()
            .flat_map(|e| e.coords().into_iter().take(c).cloned())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.ambient != o.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(x, y)| x.add(y)).collect();
        Ok(Self { ambient: self.ambient.clone(), entries })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(x, y)| x.sub(y)).collect();
        Ok(Self { ambient: self.ambient.clone(), entries })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { ambient: self.ambient.clone(), entries: self.entries.iter().map(|e| e.scale(q)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.ambient.n;
        let one = BigRational::one();
        let (a, b) = match &self.ambient.algebra {
            Some(alg) => (alg.a().clone(), alg.b().clone()),
            None => (one.clone(), one),
        };
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = QuaternionElement::zero();
                for k in 0..n {
                    let (x, y) = (self.entry(i, k), o.entry(k, j));
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    acc = acc.add(&x.mul(y, &a, &b));
                }
                entries.push(acc);
            }
        }
        Ok(Self { ambient: self.ambient.clone(), entries })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.ambient.identity();
        for _ in 0..k {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// `p(self)` for `p` given by ascending coefficients.
    pub fn eval_poly(&self, coeffs: &[BigRational]) -> Self {
        let mut acc = self.ambient.zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(self).expect("same ambient").add(&self.ambient.scalar(c)).expect("same ambient");
        }
        acc
    }

    /// Matrix of `y -> self * y` on the flattening.
    pub fn left_regular(&self) -> Vec<Vec<BigRational>> {
        let d = self.ambient.dim();
        let cols: Vec<Vec<BigRational>> = (0..d)
            .map(|k| self.mul(&self.ambient.basis_element(k)).expect("same ambient").flatten())
            .collect();
        (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    }

    pub fn is_invertible(&self) -> bool {
        linalg::is_nonsingular(&self.left_regular())
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.ambient.dim();
        let rhs = self.ambient.identity().flatten();
        let x = linalg::solve(&self.left_regular(), &rhs, d).ok_or(Error::NotInvertible)?;
        Ok(self.ambient.unflatten(&x))
    }

    /// `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }
}

impl fmt::Display for MatrixOverB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", e)?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m2(rows: [[i64; 2]; 2]) -> MatrixOverB {
        let amb = Ambient::matrices(2);
        amb.from_rationals(&rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn rational_matrices() {
        let a = m2([[1, 2], [3, 4]]);
        let b = m2([[0, 1], [1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m2([[2, 1], [4, 3]]));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Ambient::matrices(2).identity());
        assert!(m2([[1, 2], [2, 4]]).inverse().is_err());
        assert!(!m2([[1, 2], [2, 4]]).is_invertible());
        // x^2 + 1 at the rotation
        let r = m2([[0, -1], [1, 0]]);
        assert!(r.eval_poly(&[rat(1), rat(0), rat(1)]).is_zero());
    }

    #[test]
    fn quaternion_matrices() {
        let h = QuaternionAlgebraQ::from_ints(-1, -1).unwrap();
        let amb = Ambient::over_quaternions(2, h.clone());
        assert_eq!((amb.dim(), amb.degree()), (16, 4));
        let i = amb.diagonal(&QuaternionElement::i()).unwrap();
        assert_eq!(i.mul(&i).unwrap(), amb.scalar(&rat(-1)));
        let j = amb.diagonal(&QuaternionElement::j()).unwrap();
        let jinv = j.inverse().unwrap();
        assert_eq!(j.mul(&i).unwrap().mul(&jinv).unwrap(), i.scale(&rat(-1)));
        assert_eq!(amb.unflatten(&i.flatten()), i);
        let other = Ambient::over_quaternions(1, h);
        assert_eq!(i.mul(&other.identity()), Err(Error::AmbientMismatch));
        assert!(Ambient::matrices(1).diagonal(&QuaternionElement::i()).is_err());
    }
}
