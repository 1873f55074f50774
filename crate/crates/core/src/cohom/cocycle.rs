use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::group::FiniteGroup;
use super::value::{CoefficientBasis, MultiplicativeValue};
use crate::arith::lcm;
use crate::cyclo::{CyclotomicElement, RootOfUnity};
use crate::error::{Error, Result};
use crate::snf::{smith_normal_form, IntMatrix, SmithForm};

/// Outcome of [`is_cocycle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleVerdict {
    Valid,
    ShapeMismatch,
    NotNormalized { sigma: usize, tau: usize },
    IdentityFails { sigma: usize, tau: usize, rho: usize },
}

impl CocycleVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Self::Valid)
    }
}

/// Checks normalization and `c(s,t) c(st,r) = c(s,tr) c(t,r)` over all triples.
pub fn is_cocycle(table: &[Vec<MultiplicativeValue>], group: &FiniteGroup) -> CocycleVerdict {
    let g = group.order();
    if table.len() != g || table.iter().any(|r| r.len() != g) {
        return CocycleVerdict::ShapeMismatch;
    }
    let k = table[0][0].exponents.len();
    if table.iter().flatten().any(|v| v.exponents.len() != k) {
        return CocycleVerdict::ShapeMismatch;
    }
    for s in 0..g {
        if !table[s][0].is_one() {
            return CocycleVerdict::NotNormalized { sigma: s, tau: 0 };
        }
        if !table[0][s].is_one() {
            return CocycleVerdict::NotNormalized { sigma: 0, tau: s };
        }
    }
    for s in 0..g {
        for t in 0..g {
            let st = group.mul(s, t);
            for r in 0..g {
                let lhs = table[s][t].mul(&table[st][r]);
                let rhs = table[s][group.mul(t, r)].mul(&table[t][r]);
                if lhs != rhs {
                    return CocycleVerdict::IdentityFails { sigma: s, tau: t, rho: r };
                }
            }
        }
    }
    CocycleVerdict::Valid
}

/// A normalized 2-cocycle of a finite group with trivial action on its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    group: FiniteGroup,
    basis: CoefficientBasis,
    table: Vec<MultiplicativeValue>,
}

impl Cocycle2 {
    pub fn new(group: FiniteGroup, basis: CoefficientBasis, rows: Vec<Vec<MultiplicativeValue>>) -> Result<Self> {
        let g = group.order();
        if let Some(bad) = rows.iter().flatten().find(|v| v.exponents.len() != basis.len()) {
            return Err(Error::CoefficientBasisTooSmall(format!(
                "{} exponents given for a basis of size {}",
                bad.exponents.len(),
                basis.len()
            )));
        }
        match is_cocycle(&rows, &group) {
            CocycleVerdict::Valid => {}
            CocycleVerdict::ShapeMismatch => return Err(Error::ShapeMismatch { order: g }),
            CocycleVerdict::NotNormalized { sigma, tau } => return Err(Error::NotNormalized(sigma, tau)),
            CocycleVerdict::IdentityFails { sigma, tau, rho } => {
                return Err(Error::CocycleInvalid(sigma, tau, rho))
            }
        }
        Ok(Self { group, basis, table: rows.into_iter().flatten().collect() })
    }

    /// Rational-valued cocycle; every value must factor over `basis`.
    pub fn from_rationals(
        group: FiniteGroup,
        basis: CoefficientBasis,
        rows: &[Vec<num_rational::BigRational>],
    ) -> Result<Self> {
        let values = rows
            .iter()
            .map(|r| r.iter().map(|q| MultiplicativeValue::from_rational(q, &basis)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::new(group, basis, values)
    }

    pub fn trivial(group: FiniteGroup, basis: CoefficientBasis) -> Self {
        let g = group.order();
        let table = (0..g * g).map(|_| MultiplicativeValue::one(basis.len())).collect();
        Self { group, basis, table }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn basis(&self) -> &CoefficientBasis {
        &self.basis
    }

    pub fn value(&self, s: usize, t: usize) -> &MultiplicativeValue {
        &self.table[s * self.group.order() + t]
    }

    pub fn rows(&self) -> Vec<Vec<MultiplicativeValue>> {
        self.table.chunks(self.group.order()).map(|r| r.to_vec()).collect()
    }

    pub fn cyclotomic_value(&self, s: usize, t: usize) -> CyclotomicElement {
        self.value(s, t).to_cyclotomic(&self.basis)
    }

    /// `lcm(2, orders of the torsion values)`: the roots of unity the cocycle needs.
    pub fn torsion_modulus(&self) -> u64 {
        self.table.iter().fold(2, |acc, v| lcm(acc, v.torsion.order()))
    }

    pub fn pow(&self, k: i64) -> Self {
        Self {
            group: self.group.clone(),
            basis: self.basis.clone(),
            table: self.table.iter().map(|v| v.pow(k)).collect(),
        }
    }

    /// Pull back along `projection: bigger -> self.group`.
    pub fn inflate(&self, bigger: &FiniteGroup, projection: &[usize]) -> Self {
        let n = bigger.order();
        let table = (0..n * n)
            .map(|i| self.value(projection[i / n], projection[i % n]).clone())
            .collect();
        Self { group: bigger.clone(), basis: self.basis.clone(), table }
    }
}

/// `(s, t) -> f(s) f(t) f(st)^{-1}`.
pub fn coboundary_of(
    group: &FiniteGroup,
    basis: &CoefficientBasis,
    f: &[MultiplicativeValue],
) -> Result<Cocycle2> {
    let g = group.order();
    if f.len() != g {
        return Err(Error::ShapeMismatch { order: g });
    }
    if !f[0].is_one() {
        return Err(Error::NotNormalized(0, 0));
    }
    if f.iter().any(|v| v.exponents.len() != basis.len()) {
        return Err(Error::CoefficientBasisTooSmall("map values off the basis".into()));
    }
    let table = (0..g * g)
        .map(|i| {
            let (s, t) = (i / g, i % g);
            f[s].mul(&f[t]).div(&f[group.mul(s, t)])
        })
        .collect();
    Ok(Cocycle2 { group: group.clone(), basis: basis.clone(), table })
}

/// Integer matrix of `x -> dx` on normalized maps: rows are pairs `(s, t)` of
/// non-identity elements, columns the non-identity elements.
pub(crate) fn coboundary_matrix(group: &FiniteGroup) -> (IntMatrix, Vec<(usize, usize)>) {
    let g = group.order();
    let mut rows = Vec::new();
    let mut pairs = Vec::new();
    for s in 1..g {
        for t in 1..g {
            let mut row = alloc::vec![BigInt::zero(); g - 1];
            row[s - 1] += 1;
            row[t - 1] += 1;
            let st = group.mul(s, t);
            if st != 0 {
                row[st - 1] -= 1;
            }
            rows.push(row);
            pairs.push((s, t));
        }
    }
    (rows, pairs)
}

pub(crate) struct CoboundarySystem {
    pub smith: SmithForm,
    pub pairs: Vec<(usize, usize)>,
    pub matrix: IntMatrix,
}

impl CoboundarySystem {
    pub fn new(group: &FiniteGroup) -> Self {
        let (matrix, pairs) = coboundary_matrix(group);
        let smith = smith_normal_form(&matrix, pairs.len(), group.order() - 1);
        Self { smith, pairs, matrix }
    }

    pub fn free_rhs(&self, c: &Cocycle2, i: usize) -> Vec<BigInt> {
        self.pairs.iter().map(|&(s, t)| BigInt::from(c.value(s, t).exponents[i])).collect()
    }

    pub fn torsion_rhs(&self, c: &Cocycle2, w: u64) -> Vec<BigInt> {
        self.pairs.iter().map(|&(s, t)| BigInt::from(c.value(s, t).torsion.exponent_in(w))).collect()
    }
}

/// Order `m` of the class of `c` together with a normalized `d` with `c^m = dd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassOrder {
    pub order: u64,
    pub witness: Vec<MultiplicativeValue>,
}

pub fn class_order(c: &Cocycle2) -> Result<ClassOrder> {
    let group = c.group();
    let g = group.order();
    let k = c.basis().len();
    if g == 1 {
        return Ok(ClassOrder { order: 1, witness: alloc::vec![MultiplicativeValue::one(k)] });
    }
    let sys = CoboundarySystem::new(group);
    let w = c.torsion_modulus();

    let free_rhs: Vec<Vec<BigInt>> = (0..k).map(|i| sys.free_rhs(c, i)).collect();
    let torsion_rhs = sys.torsion_rhs(c, w);
    let mut m = sys.smith.min_multiplier_mod(&torsion_rhs, w);
    for b in &free_rhs {
        let ki = sys.smith.min_multiplier(b).ok_or_else(|| {
            Error::InconsistentDatum("free part of the cocycle is not a rational coboundary".into())
        })?;
        m = lcm(m, ki);
    }

    let mut exps = alloc::vec![alloc::vec![0i64; k]; g];
    let mb = BigInt::from(m);
    for (i, b) in free_rhs.iter().enumerate() {
        let scaled: Vec<BigInt> = b.iter().map(|x| x * &mb).collect();
        let x = sys.smith.solve_integer(&scaled).expect("multiplier makes the system integral");
        for (rho, xi) in x.iter().enumerate() {
            exps[rho + 1][i] = i64::try_from(xi).map_err(|_| {
                Error::InconsistentDatum("witness exponent out of range".into())
            })?;
        }
    }
    let scaled: Vec<BigInt> = torsion_rhs.iter().map(|x| x * &mb).collect();
    let tors = sys
        .smith
        .solve_mod(&scaled, w)
        .into_iter()
        .min()
        .expect("multiplier makes the torsion system solvable");

    let mut witness = Vec::with_capacity(g);
    witness.push(MultiplicativeValue::one(k));
    for rho in 1..g {
        witness.push(MultiplicativeValue::new(RootOfUnity::new(w, tors[rho - 1] as i64), exps[rho].clone()));
    }
    Ok(ClassOrder { order: m, witness })
}
