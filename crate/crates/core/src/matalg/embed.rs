use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{Ambient, MatrixOverB};
use crate::arith::factorize_bigint;
use crate::cohom::{Cocycle2, SplittingMap};
use crate::cyclo::{common_conductor, generated_subfield, CyclotomicElement};
use crate::error::{Error, Result};
use crate::linalg;

/// Rational roots of an integer polynomial (ascending coefficients), by the rational root test.
fn rational_roots(p: &[BigRational]) -> Vec<BigRational> {
    let lcd = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcd.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut out = Vec::new();
    if low > 0 {
        out.push(BigRational::zero());
    }
    let c0 = ints[low].abs();
    let cn = ints.last().expect("nonempty").abs();
    let divs = |n: &BigInt| -> Vec<BigInt> {
        // divisors through the factorization
        let mut ds = alloc::vec![BigInt::one()];
        for (p, e) in factorize_bigint(n) {
            let mut next = Vec::new();
            for d in &ds {
                let mut pp = BigInt::one();
                for _ in 0..=e {
                    next.push(d * &pp);
                    pp *= p;
                }
            }
            ds = next;
        }
        ds
    };
    for num in divs(&c0) {
        for den in divs(&cn) {
            for sign in [1i64, -1] {
                let r = BigRational::new(&num * sign, den.clone());
                let val = p.iter().rev().fold(BigRational::zero(), |acc, c| acc * &r + c);
                if val.is_zero() && !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Companion matrix of a polynomial of degree `n` (ascending coefficients) inside `M_n(B)`.
///
/// Polynomials of degree at most 3 are rejected when they have a rational root; beyond that
/// irreducibility is the caller's certificate.
pub fn companion_embedding(poly: &[BigRational], ambient: &Ambient) -> Result<MatrixOverB> {
    let mut p: Vec<BigRational> = poly.to_vec();
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    let degree = p.len().saturating_sub(1);
    let n = ambient.size();
    if p.is_empty() || degree != n {
        return Err(Error::DegreeMismatch { expected: n, found: degree });
    }
    let lead = p[n].clone();
    let monic: Vec<BigRational> = p.iter().map(|c| c / &lead).collect();
    if (2..=3).contains(&n) {
        if let Some(r) = rational_roots(&monic).first() {
            return Err(Error::Reducible(r.to_string()));
        }
    }
    let mut rows = alloc::vec![alloc::vec![BigRational::zero(); n]; n];
    for i in 0..n {
        if i + 1 < n {
            rows[i + 1][i] = BigRational::one();
        }
        rows[i][n - 1] = -monic[i].clone();
    }
    let m = Ambient::matrices(n).from_rationals(&rows)?;
    lift(&m, ambient)
}

/// `M_n(Q) -> M_n(B)` entrywise.
fn lift(m: &MatrixOverB, ambient: &Ambient) -> Result<MatrixOverB> {
    if m.ambient() == ambient {
        return Ok(m.clone());
    }
    ambient.from_entries(m.rows())
}

/// An invertible `b` with `phi(g) = b psi(g) b^{-1}` for every generator image pair.
///
/// Coordinates over a basis of the solution space are enumerated in order of growing
/// max-norm, starting from `{-2, ..., 2}`, up to `bound`. Candidates are tested for
/// invertibility modulo a large prime, so one whose determinant happens to be divisible
/// by that prime is passed over.
pub fn skolem_noether_conjugator(phi: &[MatrixOverB], psi: &[MatrixOverB], bound: i64) -> Result<MatrixOverB> {
    if phi.len() != psi.len() || phi.is_empty() {
        return Err(Error::AmbientMismatch);
    }
    let amb = phi[0].ambient().clone();
    if phi.iter().chain(psi).any(|m| m.ambient() != &amb) {
        return Err(Error::AmbientMismatch);
    }
    let d = amb.dim();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (f, s) in phi.iter().zip(psi) {
        let cols: Vec<Vec<BigRational>> = (0..d)
            .map(|k| {
                let e = amb.basis_element(k);
                e.mul(s).and_then(|x| x.sub(&f.mul(&e)?)).expect("same ambient").flatten()
            })
            .collect();
        for r in 0..d {
            let row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel: Vec<MatrixOverB> = linalg::kernel(&rows, d).iter().map(|v| amb.unflatten(v)).collect();
    let k = kernel.len();
    if k == 0 {
        return Err(Error::NoConjugatorFound { bound });
    }
    // left multiplication is linear in b, so candidates are screened modulo a prime
    let screens: Option<Vec<Vec<Vec<u64>>>> =
        kernel.iter().map(|m| linalg::reduce_mod_prime(&m.left_regular())).collect();
    let start = bound.min(2);
    let mut radius_lo = 0;
    for radius in [start, bound] {
        if radius <= radius_lo {
            continue;
        }
        // all coordinate vectors with entries in [-radius, radius] not already tried
        let width = (2 * radius + 1) as usize;
        let total = width.checked_pow(k as u32).unwrap_or(usize::MAX);
        for code in 0..total {
            let mut c = code;
            let coords: Vec<i64> = (0..k)
                .map(|_| {
                    let digit = (c % width) as i64;
                    c /= width;
                    // 0, 1, -1, 2, -2, ...
                    if digit % 2 == 1 { (digit + 1) / 2 } else { -(digit / 2) }
                })
                .collect();
            let max = coords.iter().map(|x| x.abs()).max().unwrap_or(0);
            if max <= radius_lo || max == 0 {
                continue;
            }
            let build = || -> Result<MatrixOverB> {
                let mut b = amb.zero();
                for (basis, &x) in kernel.iter().zip(&coords) {
                    if x != 0 {
                        b = b.add(&basis.scale(&BigRational::from_integer(x.into())))?;
                    }
                }
                Ok(b)
            };
            let b = match &screens {
                // exact confirmation is unnecessary after a full-rank reduction
                Some(ls) if !linalg::full_rank_mod_prime(linalg::combine_mod_prime(ls, &coords)) => continue,
                Some(_) => build()?,
                None => {
                    let b = build()?;
                    if !b.is_invertible() {
                        continue;
                    }
                    b
                }
            };
            let binv = b.inverse()?;
            let ok = phi
                .iter()
                .zip(psi)
                .all(|(f, s)| b.mul(s).and_then(|x| x.mul(&binv)).is_ok_and(|x| &x == f));
            if ok {
                return Ok(b);
            }
        }
        radius_lo = radius;
    }
    Err(Error::NoConjugatorFound { bound })
}

/// A `Q`-algebra embedding of `E = Q(values)` into a matrix algebra, given by the
/// companion matrix of a primitive element `theta`.
#[derive(Clone, Debug)]
pub struct FieldEmbedding {
    ambient: Ambient,
    conductor: u64,
    /// Coordinates of `1, theta, ..., theta^{d-1}` in `Q(zeta_conductor)`, as columns.
    power_basis: Vec<Vec<BigRational>>,
    minpoly: Vec<BigRational>,
    companion: MatrixOverB,
}

impl FieldEmbedding {
    /// Embeds into `M_d(Q)`, or `M_d(B)` when `quaternion` is given, with `d = [E : Q]`.
    pub fn regular(values: &[CyclotomicElement], quaternion: Option<&crate::csa::QuaternionAlgebraQ>) -> Result<Self> {
        let n = common_conductor(values).max(1);
        let lifted: Vec<CyclotomicElement> = values.iter().map(|v| v.embed(n)).collect();
        let degree = generated_subfield(&lifted, n)?.degree as usize;
        let theta = primitive_element(&lifted, degree, n);
        let mut powers = alloc::vec![CyclotomicElement::one().embed(n)];
        for k in 1..=degree {
            let next = (&powers[k - 1] * &theta).embed(n);
            powers.push(next);
        }
        let dim = powers[0].coeffs().len();
        let power_basis: Vec<Vec<BigRational>> =
            (0..dim).map(|r| powers[..degree].iter().map(|c| c.coeffs()[r].clone()).collect()).collect();
        let target: Vec<BigRational> = powers[degree].coeffs().iter().map(|c| -c.clone()).collect();
        let mut minpoly = linalg::solve(&power_basis, &target, degree)
            .ok_or_else(|| Error::InconsistentDatum("primitive element degree mismatch".into()))?;
        minpoly.push(BigRational::one());

        let ambient = match quaternion {
            Some(q) => Ambient::over_quaternions(degree, q.clone()),
            None => Ambient::matrices(degree),
        };
        let mut rows = alloc::vec![alloc::vec![BigRational::zero(); degree]; degree];
        for i in 0..degree {
            if i + 1 < degree {
                rows[i + 1][i] = BigRational::one();
            }
            rows[i][degree - 1] = -minpoly[i].clone();
        }
        let companion = lift(&Ambient::matrices(degree).from_rationals(&rows)?, &ambient)?;
        let emb = Self { ambient, conductor: n, power_basis, minpoly, companion };
        for v in values {
            emb.image_of(v).ok_or_else(|| Error::EmbeddingIncomplete(format!("{}", v)))?;
        }
        Ok(emb)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// `[E : Q]`.
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Minimal polynomial of the primitive element, ascending and monic.
    pub fn minpoly(&self) -> &[BigRational] {
        &self.minpoly
    }

    /// Image of the primitive element.
    pub fn generator_image(&self) -> &MatrixOverB {
        &self.companion
    }

    /// `None` when `x` is not in `E`.
    pub fn image_of(&self, x: &CyclotomicElement) -> Option<MatrixOverB> {
        if let Some(q) = x.as_rational() {
            return Some(self.ambient.scalar(&q));
        }
        let x = if self.conductor % x.conductor() == 0 { x.clone() } else { x.minimize() };
        if self.conductor % x.conductor() != 0 {
            return None;
        }
        let coords = linalg::solve(&self.power_basis, x.embed(self.conductor).coeffs(), self.degree())?;
        Some(self.companion.eval_poly(&coords))
    }
}

/// Small integer combination of the values whose powers span a space of dimension `degree`.
fn primitive_element(values: &[CyclotomicElement], degree: usize, n: u64) -> CyclotomicElement {
    let k = values.len();
    let span_dim = |theta: &CyclotomicElement| {
        let mut span = linalg::Span::new(theta.coeffs().len());
        let mut p = CyclotomicElement::one().embed(n);
        for _ in 0..degree {
            span.insert(p.coeffs());
            p = (&p * theta).embed(n);
        }
        span.dim()
    };
    if degree <= 1 || k == 0 {
        return CyclotomicElement::one().embed(n);
    }
    for radius in 1..=(degree as i64 + 2) {
        let width = (2 * radius + 1) as usize;
        for code in 1..width.pow(k as u32) {
            let mut c = code;
            let mut theta = CyclotomicElement::zero(n);
            for v in values {
                let digit = (c % width) as i64;
                c /= width;
                let coef = if digit % 2 == 1 { (digit + 1) / 2 } else { -(digit / 2) };
                if coef != 0 {
                    theta = &theta + &v.scale(&BigRational::from_integer(coef.into()));
                }
            }
            let theta = theta.embed(n);
            if span_dim(&theta) == degree {
                return theta;
            }
        }
    }
    unreachable!("a primitive element among small combinations exists for {} values", k)
}

/// `phi(beta(s)) phi(beta(t)) phi(beta(st))^{-1} = c(s, t)` for every pair of the map's group.
pub fn descent_cocycle_check(c: &Cocycle2, beta: &SplittingMap, phi: &FieldEmbedding) -> Result<bool> {
    let group = beta.group();
    let g = group.order();
    let mut images = Vec::with_capacity(g);
    for x in 0..g {
        let v = beta.value(x);
        images.push(phi.image_of(v).ok_or_else(|| Error::EmbeddingIncomplete(format!("{}", v)))?);
    }
    let inverses = images.iter().map(|m| m.inverse()).collect::<Result<Vec<_>>>()?;
    for s in 0..g {
        for t in 0..g {
            let cv = c.cyclotomic_value(beta.projection()[s], beta.projection()[t]);
            let scalar = phi.image_of(&cv).ok_or_else(|| Error::EmbeddingIncomplete(format!("{}", cv)))?;
            let lhs = images[s].mul(&images[t])?.mul(&inverses[group.mul(s, t)])?;
            if lhs != scalar {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
