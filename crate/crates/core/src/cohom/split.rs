use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::cocycle::{class_order, Cocycle2, CoboundarySystem};
use super::group::FiniteGroup;
use crate::arith::{divisors, rat};
use crate::cyclo::{common_conductor, sqrt_as_cyclotomic, CyclotomicElement, RootOfUnity};
use crate::error::{Error, Result};
use crate::linalg;

/// `beta` on a finite group `H` mapping onto the group of the cocycle it splits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingMap {
    group: FiniteGroup,
    projection: Vec<usize>,
    values: Vec<CyclotomicElement>,
}

impl SplittingMap {
    pub fn new(group: FiniteGroup, projection: Vec<usize>, values: Vec<CyclotomicElement>) -> Result<Self> {
        if values.len() != group.order() || projection.len() != group.order() {
            return Err(Error::ShapeMismatch { order: group.order() });
        }
        if !values[0].is_one() {
            return Err(Error::NotNormalized(0, 0));
        }
        if values.iter().any(|v| v.is_zero()) {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { group, projection, values })
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let g = group.order();
        Self { projection: (0..g).collect(), values: (0..g).map(|_| CyclotomicElement::one()).collect(), group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Image of each element in the group of the split cocycle.
    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn value(&self, x: usize) -> &CyclotomicElement {
        &self.values[x]
    }

    pub fn values(&self) -> &[CyclotomicElement] {
        &self.values
    }

    pub fn conductor(&self) -> u64 {
        common_conductor(&self.values)
    }

    /// Whether the map lives on a proper extension of the cocycle's group.
    pub fn is_extended(&self) -> bool {
        self.projection.iter().enumerate().any(|(i, &p)| i != p)
    }

    /// Table of `beta(s) beta(t) beta(st)^{-1}`.
    pub fn coboundary(&self) -> Vec<Vec<CyclotomicElement>> {
        let g = self.group.order();
        let inv: Vec<CyclotomicElement> =
            self.values.iter().map(|v| v.inverse().expect("values are nonzero")).collect();
        (0..g)
            .map(|s| {
                (0..g)
                    .map(|t| &(&self.values[s] * &self.values[t]) * &inv[self.group.mul(s, t)])
                    .collect()
            })
            .collect()
    }

    /// Whether the coboundary equals `c` pulled back along the projection.
    pub fn splits(&self, c: &Cocycle2) -> bool {
        let d = self.coboundary();
        let g = self.group.order();
        (0..g).all(|s| {
            (0..g).all(|t| d[s][t] == c.cyclotomic_value(self.projection[s], self.projection[t]))
        })
    }
}

fn power_of_sqrt(p: u64, root: &CyclotomicElement, e: i64) -> CyclotomicElement {
    // root^e = p^{floor(e/2)} root^{e mod 2}
    let (q, r) = e.div_mod_floor(&2);
    let pq = CyclotomicElement::rational(num_traits::Pow::pow(&rat(p as i64), q as i32));
    if r == 1 {
        &pq * root
    } else {
        pq
    }
}

/// Torsion part of a splitting on the cocycle's own group, if one exists with
/// values in `mu_{Wk}`, `k | |G|`.
fn torsion_on_base(sys: &CoboundarySystem, c: &Cocycle2, w: u64) -> Option<Vec<RootOfUnity>> {
    let g = c.group().order();
    let t = sys.torsion_rhs(c, w);
    for k in divisors(g as u64) {
        let kb = BigInt::from(k);
        let scaled: Vec<BigInt> = t.iter().map(|x| x * &kb).collect();
        if let Some(y) = sys.smith.solve_mod(&scaled, w * k).into_iter().min() {
            let mut out = Vec::with_capacity(g);
            out.push(RootOfUnity::ONE);
            out.extend(y.iter().map(|&e| RootOfUnity::new(w * k, e as i64)));
            return Some(out);
        }
    }
    None
}

/// A splitting map `beta` with `d beta = c`, values in cyclotomic fields.
///
/// With `conductor = Some(w)` every value must lie in `Q(zeta_w)` and is written there.
/// When the torsion part does not split on the group itself, the map is built on the
/// central extension of the group by `mu_W` that the torsion part defines.
pub fn split_cocycle(c: &Cocycle2, conductor: Option<u64>) -> Result<SplittingMap> {
    let co = class_order(c)?;
    if co.order > 2 {
        return Err(Error::UnsupportedClassOrder(co.order));
    }
    let base = c.group();
    let g = base.order();
    let basis = c.basis();
    if g == 1 {
        return Ok(SplittingMap::trivial(base.clone()));
    }
    let sys = CoboundarySystem::new(base);
    let qmatrix: Vec<Vec<BigRational>> = sys
        .matrix
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();

    // free part: beta_i(s) = sqrt(p_i)^{2 x_i(s)} with dx_i = c_i over Q
    let mut doubled: Vec<Vec<i64>> = alloc::vec![alloc::vec![0; basis.len()]; g];
    for i in 0..basis.len() {
        let b: Vec<BigRational> =
            sys.free_rhs(c, i).into_iter().map(BigRational::from_integer).collect();
        let x = linalg::solve(&qmatrix, &b, g - 1)
            .ok_or_else(|| Error::InconsistentDatum("free part is not a rational coboundary".into()))?;
        for (rho, xr) in x.iter().enumerate() {
            let two_x = xr * rat(2);
            if !two_x.is_integer() {
                return Err(Error::UnsupportedClassOrder(co.order));
            }
            doubled[rho + 1][i] = two_x
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::InconsistentDatum(format!("exponent {} out of range", two_x)))?;
        }
    }
    let roots: Vec<CyclotomicElement> =
        basis.primes().iter().map(|&p| sqrt_as_cyclotomic(&rat(p as i64)).1).collect();

    let w = c.torsion_modulus();
    let (group, projection, torsion) = match torsion_on_base(&sys, c, w) {
        Some(t) => (base.clone(), (0..g).collect::<Vec<_>>(), t),
        None => {
            let rows = c.rows();
            let (ext, proj) =
                base.central_extension(w, |s, u| rows[s][u].torsion.exponent_in(w));
            // (a, s) at index s*w + a maps to zeta_w^{-a}
            let t = (0..ext.order()).map(|x| RootOfUnity::new(w, -((x as u64 % w) as i64))).collect();
            (ext, proj, t)
        }
    };

    let mut values = Vec::with_capacity(group.order());
    for x in 0..group.order() {
        let s = projection[x];
        let mut v = torsion[x].to_cyclotomic();
        for (i, &p) in basis.primes().iter().enumerate() {
            if doubled[s][i] != 0 {
                v = &v * &power_of_sqrt(p, &roots[i], doubled[s][i]);
            }
        }
        let v = v.minimize();
        let v = match conductor {
            Some(req) => {
                if !v.lies_in_conductor(req) {
                    return Err(Error::InsufficientCoefficients { required: v.conductor(), requested: req });
                }
                v.embed(req)
            }
            None => v,
        };
        values.push(v);
    }
    let beta = SplittingMap::new(group, projection, values)?;
    if !beta.splits(c) {
        return Err(Error::PipelineInvariantViolation {
            stage: "split",
            detail: "coboundary of the constructed map differs from the cocycle".into(),
        });
    }
    Ok(beta)
}
