use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::{Ambient, MatrixOverB};
use crate::error::{Error, Result};
use crate::linalg::{self, Span};

/// The unital `Q`-subalgebra generated by a list of elements, with an explicit basis.
#[derive(Clone, Debug)]
pub struct SubalgebraSpec {
    ambient: Ambient,
    generators: Vec<MatrixOverB>,
    basis: Vec<MatrixOverB>,
    span: Span,
}

impl SubalgebraSpec {
    pub fn generated_by(ambient: &Ambient, generators: Vec<MatrixOverB>) -> Result<Self> {
        if generators.iter().any(|g| g.ambient() != ambient) {
            return Err(Error::AmbientMismatch);
        }
        let mut span = Span::new(ambient.dim());
        let mut basis = Vec::new();
        let one = ambient.identity();
        span.insert(&one.flatten());
        basis.push(one);
        // words in the generators: close the span under right multiplication
        let mut i = 0;
        while i < basis.len() {
            for g in &generators {
                let w = basis[i].mul(g)?;
                if span.insert(&w.flatten()) {
                    basis.push(w);
                }
            }
            i += 1;
        }
        Ok(Self { ambient: ambient.clone(), generators, basis, span })
    }

    /// The subspace spanned by `basis`, which the caller asserts is a unital subalgebra.
    fn from_basis(ambient: &Ambient, basis: Vec<MatrixOverB>) -> Self {
        let mut span = Span::new(ambient.dim());
        for b in &basis {
            span.insert(&b.flatten());
        }
        Self { ambient: ambient.clone(), generators: basis.clone(), basis, span }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn generators(&self) -> &[MatrixOverB] {
        &self.generators
    }

    pub fn basis(&self) -> &[MatrixOverB] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, m: &MatrixOverB) -> bool {
        m.ambient() == &self.ambient && self.span.contains(&m.flatten())
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.span.same_as(&other.span)
    }

    pub fn is_commutative(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators[i + 1..]
                .iter()
                .all(|h| g.commutator(h).is_ok_and(|c| c.is_zero()))
        })
    }

    /// Deterministic nonzero sample elements: basis vectors, then small integer combinations.
    fn samples(&self, limit: usize) -> Vec<MatrixOverB> {
        let d = self.dim();
        let mut out: Vec<MatrixOverB> = self.basis.clone();
        let digits = [0i64, 1, -1, 2];
        let mut idx = alloc::vec![0usize; d];
        'outer: while out.len() < limit {
            let mut pos = 0;
            loop {
                if pos == d {
                    break 'outer;
                }
                idx[pos] += 1;
                if idx[pos] < digits.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if idx.iter().filter(|&&k| k != 0).count() < 2 {
                continue;
            }
            let mut acc = self.ambient.zero();
            for (b, &k) in self.basis.iter().zip(&idx) {
                if k != 0 {
                    acc = acc.add(&b.scale(&BigRational::from_integer(digits[k].into()))).expect("same ambient");
                }
            }
            out.push(acc);
        }
        out
    }

    /// Commutative, invertible on deterministic samples, and of dimension equal to the ambient degree.
    pub fn is_maximal_subfield(&self) -> bool {
        self.dim() == self.ambient.degree()
            && self.is_commutative()
            && self.samples(40).iter().all(|s| !s.is_zero() && s.is_invertible())
    }
}

/// `{x : x g = g x for every generator g}`.
pub fn centralizer(s: &SubalgebraSpec) -> SubalgebraSpec {
    let amb = s.ambient();
    let d = amb.dim();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in s.generators() {
        let cols: Vec<Vec<BigRational>> = (0..d)
            .map(|k| amb.basis_element(k).commutator(g).expect("same ambient").flatten())
            .collect();
        for r in 0..d {
            let row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let basis = linalg::kernel(&rows, d).iter().map(|v| amb.unflatten(v)).collect();
    SubalgebraSpec::from_basis(amb, basis)
}

/// `dim C(S) * dim S = dim A` and `C(C(S)) = S`.
pub fn verify_double_centralizer(s: &SubalgebraSpec) -> bool {
    let c = centralizer(s);
    c.dim() * s.dim() == s.ambient().dim() && centralizer(&c).same_as(s)
}

/// `is_maximal_subfield` as a free function.
pub fn is_maximal_subfield(s: &SubalgebraSpec) -> bool {
    s.is_maximal_subfield()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::csa::QuaternionAlgebraQ;
    use crate::matalg::QuaternionElement;
    use alloc::vec;

    fn rotation() -> MatrixOverB {
        Ambient::matrices(2).from_rationals(&[vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]).unwrap()
    }

    #[test]
    fn centralizer_examples() {
        let amb = Ambient::matrices(2);
        let scalars = SubalgebraSpec::generated_by(&amb, vec![]).unwrap();
        assert_eq!(scalars.dim(), 1);
        assert_eq!(centralizer(&scalars).dim(), 4);
        assert!(verify_double_centralizer(&scalars));
        assert!(!scalars.is_maximal_subfield());

        let qi = SubalgebraSpec::generated_by(&amb, vec![rotation()]).unwrap();
        assert_eq!(qi.dim(), 2);
        let c = centralizer(&qi);
        assert_eq!(c.dim(), 2);
        assert!(c.same_as(&qi));
        assert!(verify_double_centralizer(&qi));
        assert!(qi.is_maximal_subfield());

        let h = Ambient::over_quaternions(1, QuaternionAlgebraQ::from_ints(-1, -1).unwrap());
        let i = h.diagonal(&QuaternionElement::i()).unwrap();
        let s = SubalgebraSpec::generated_by(&h, vec![i]).unwrap();
        assert_eq!(centralizer(&s).dim(), 2);
        assert!(verify_double_centralizer(&s));
        assert!(s.is_maximal_subfield());
    }

    #[test]
    fn zero_divisors_are_not_fields() {
        // Q[x]/(x^2 - 1) via diag(1, -1)
        let amb = Ambient::matrices(2);
        let d = amb.from_rationals(&[vec![rat(1), rat(0)], vec![rat(0), rat(-1)]]).unwrap();
        let s = SubalgebraSpec::generated_by(&amb, vec![d]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(!s.is_maximal_subfield());
    }
}
