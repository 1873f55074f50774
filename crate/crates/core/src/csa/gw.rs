use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::abelian::{unit_group_generators, AbelianFieldSpec};
use super::PlaceQ;
use crate::arith::{gcd, lcm_all, mul_mod, pow_mod, totient};
use crate::error::{Error, Result};

/// Require `n_i | [L_w : Q_v]` at the place `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalDegreeConstraint {
    pub place: PlaceQ,
    pub divisor: u64,
}

impl LocalDegreeConstraint {
    pub fn new(place: PlaceQ, divisor: u64) -> Result<Self> {
        if divisor == 0 {
            return Err(Error::InvalidConstraint("local degree divisor must be positive".into()));
        }
        if place == PlaceQ::Infinite && divisor > 2 {
            return Err(Error::InvalidConstraint(format!("real place cannot have local degree {}", divisor)));
        }
        Ok(Self { place, divisor })
    }

    pub fn holds_for(&self, k: &AbelianFieldSpec) -> bool {
        k.local_degree(self.place) % self.divisor == 0
    }
}

/// Kernels of the surjections `(Z/M)^* -> Z/n`, deduplicated, in a fixed order.
fn cyclic_quotient_kernels(m: u64, n: u64) -> Vec<BTreeSet<u64>> {
    let gens = unit_group_generators(m);
    // allowed images of each generator: a with order_j * a = 0 mod n
    let choices: Vec<Vec<u64>> =
        gens.iter().map(|&(_, o)| (0..n).filter(|a| (o * a) % n == 0).collect()).collect();
    // every unit as a product of generator powers
    let mut elements: Vec<(u64, Vec<u64>)> = alloc::vec![(1 % m, alloc::vec![])];
    for &(g, o) in &gens {
        let mut next = Vec::with_capacity(elements.len() * o as usize);
        for (x, exps) in &elements {
            for e in 0..o {
                let mut ex = exps.clone();
                ex.push(e);
                next.push((mul_mod(*x, pow_mod(g, e, m), m), ex));
            }
        }
        elements = next;
    }

    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; gens.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let images: Vec<u64> = idx.iter().enumerate().map(|(j, &i)| choices[j][i]).collect();
        let g = images.iter().fold(n, |acc, &a| gcd(acc, a));
        if g == 1 {
            let kernel: BTreeSet<u64> = elements
                .iter()
                .filter(|(_, ex)| ex.iter().zip(&images).map(|(e, a)| e * a).sum::<u64>() % n == 0)
                .map(|(x, _)| *x)
                .collect();
            let key: Vec<u64> = kernel.iter().copied().collect();
            if seen.insert(key) {
                out.push(kernel);
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// First cyclic field of degree `n` inside some `Q(zeta_M)`, `M` increasing, meeting every
/// local constraint. The result is re-verified before it is returned.
pub fn grunwald_wang_search(
    constraints: &[LocalDegreeConstraint],
    n: u64,
    cap: u64,
) -> Result<AbelianFieldSpec> {
    if n == 0 {
        return Err(Error::InvalidConstraint("degree must be positive".into()));
    }
    for c in constraints {
        LocalDegreeConstraint::new(c.place, c.divisor)?;
    }
    let need = lcm_all(constraints.iter().map(|c| c.divisor));
    if n % need != 0 {
        return Err(Error::InvalidConstraint(format!(
            "degree {} is not divisible by the required local degrees (lcm {})",
            n, need
        )));
    }
    for m in 1..=cap {
        if totient(m) % n != 0 {
            continue;
        }
        for kernel in cyclic_quotient_kernels(m, n) {
            let gens: Vec<u64> = kernel.iter().copied().collect();
            let k = AbelianFieldSpec::new(m, gens)?;
            if constraints.iter().all(|c| c.holds_for(&k)) {
                debug_assert!(k.degree() == n && k.is_cyclic());
                return Ok(k);
            }
        }
    }
    Err(Error::SearchBoundExceeded { cap })
}
