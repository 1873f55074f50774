use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{PlaceQ, QuaternionAlgebraQ};
use crate::arith::{factorize, gcd, mul_mod, totient, units_mod};
use crate::error::{Error, Result};

/// Fixed field of `H <= (Z/M)^*` inside `Q(zeta_M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianFieldSpec {
    modulus: u64,
    generators: Vec<u64>,
    subgroup: BTreeSet<u64>,
}

fn closure(modulus: u64, gens: impl IntoIterator<Item = u64>) -> BTreeSet<u64> {
    let one = 1 % modulus;
    let gens: Vec<u64> = gens.into_iter().map(|g| g % modulus).collect();
    let mut set = BTreeSet::new();
    set.insert(one);
    let mut frontier = alloc::vec![one];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = mul_mod(x, g, modulus);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

impl AbelianFieldSpec {
    pub fn new(modulus: u64, generators: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidConstraint("modulus must be positive".into()));
        }
        if let Some(&g) = generators.iter().find(|&&g| modulus > 1 && gcd(g, modulus) != 1) {
            return Err(Error::InvalidAutomorphism { a: g, modulus });
        }
        let subgroup = closure(modulus, generators.iter().copied());
        Ok(Self { modulus, generators, subgroup })
    }

    pub fn rationals() -> Self {
        Self::cyclotomic(1)
    }

    /// `Q(zeta_m)`.
    pub fn cyclotomic(m: u64) -> Self {
        Self::new(m, Vec::new()).expect("trivial subgroup")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn subgroup(&self) -> impl Iterator<Item = u64> + '_ {
        self.subgroup.iter().copied()
    }

    pub fn degree(&self) -> u64 {
        totient(self.modulus) / self.subgroup.len() as u64
    }

    /// Order of `x` in `(Z/M)^* / H`.
    fn quotient_order(&self, x: u64) -> u64 {
        let mut y = x % self.modulus;
        let mut k = 1;
        while !self.subgroup.contains(&y) {
            y = mul_mod(y, x, self.modulus);
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        let d = self.degree();
        units_mod(self.modulus).into_iter().any(|x| self.quotient_order(x) == d)
    }

    pub fn is_real(&self) -> bool {
        // complex conjugation is -1 mod M
        self.subgroup.contains(&((self.modulus - 1) % self.modulus))
    }

    /// `[K_w : Q_v]` for any place `w` of this field above `v`.
    pub fn local_degree(&self, v: PlaceQ) -> u64 {
        let m = self.modulus;
        match v {
            PlaceQ::Infinite => {
                if self.is_real() {
                    1
                } else {
                    2
                }
            }
            PlaceQ::Finite(p) if m % p != 0 => self.quotient_order(p),
            PlaceQ::Finite(p) => {
                let k = factorize(m).into_iter().find(|&(q, _)| q == p).map(|(_, k)| k).unwrap_or(0);
                let pk = p.pow(k);
                let rest = m / pk;
                // decomposition group: all units that are 1 mod M', plus Frobenius acting on the M' part
                let mut gens: Vec<u64> = self.subgroup.iter().copied().collect();
                gens.extend(units_mod(m).into_iter().filter(|x| x % rest == 1 % rest));
                if rest > 1 {
                    let frob = units_mod(m)
                        .into_iter()
                        .find(|x| x % pk == 1 % pk && x % rest == p % rest)
                        .expect("CRT lift exists");
                    gens.push(frob);
                }
                (closure(m, gens).len() / self.subgroup.len()) as u64
            }
        }
    }
}

/// Local degree of `K` at the place `v`.
pub fn local_degree_in_abelian(v: PlaceQ, k: &AbelianFieldSpec) -> u64 {
    k.local_degree(v)
}

/// Whether `K` splits `A`: even local degree at every ramified place.
pub fn splits(a: &QuaternionAlgebraQ, k: &AbelianFieldSpec) -> Result<bool> {
    Ok(a.ramification()?.iter().all(|&v| k.local_degree(v) % 2 == 0))
}

/// Least `m` such that `Q(zeta_m)` splits `A`.
pub fn min_cyclotomic_splitting(a: &QuaternionAlgebraQ, cap: u64) -> Result<u64> {
    let ram = a.ramification()?;
    for m in 1..=cap {
        let k = AbelianFieldSpec::cyclotomic(m);
        if ram.iter().all(|&v| k.local_degree(v) % 2 == 0) {
            return Ok(m);
        }
    }
    Err(Error::SearchBoundExceeded { cap })
}

/// Generators of `(Z/p^k)^*` lifted to `(Z/M)^*` (1 on the other components), with their orders.
pub(crate) fn unit_group_generators(m: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for (p, k) in factorize(m) {
        let pk = p.pow(k);
        let rest = m / pk;
        let lift = |r: u64| -> u64 {
            // x = r mod p^k, x = 1 mod rest
            (0..rest.max(1))
                .map(|t| r + t * pk)
                .find(|x| x % rest.max(1) == 1 % rest.max(1))
                .expect("CRT lift")
                % m
        };
        if p == 2 {
            match k {
                1 => {}
                2 => out.push((lift(3), 2)),
                _ => {
                    out.push((lift(pk - 1), 2));
                    out.push((lift(5), pk / 4));
                }
            }
        } else {
            let phi = pk / p * (p - 1);
            let g = (2..pk)
                .find(|&g| gcd(g, p) == 1 && crate::arith::multiplicative_order(g, pk) == phi)
                .expect("odd prime powers have primitive roots");
            out.push((lift(g), phi));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::pow_mod;

    fn check_generators(m: u64) -> bool {
        let gens = unit_group_generators(m);
        gens.iter().all(|&(g, o)| pow_mod(g, o, m) == 1 % m)
    }

    #[test]
    fn local_degree_examples() {
        assert_eq!(local_degree_in_abelian(PlaceQ::Finite(3), &AbelianFieldSpec::cyclotomic(5)), 4);
        assert_eq!(local_degree_in_abelian(PlaceQ::Infinite, &AbelianFieldSpec::cyclotomic(3)), 2);
        assert_eq!(local_degree_in_abelian(PlaceQ::Finite(2), &AbelianFieldSpec::cyclotomic(4)), 2);
        // Q(sqrt 5) = fixed field of {1, 4} mod 5: 2 is inert, 5 ramified, real
        let k = AbelianFieldSpec::new(5, alloc::vec![4]).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.local_degree(PlaceQ::Finite(2)), 2);
        assert_eq!(k.local_degree(PlaceQ::Finite(5)), 2);
        assert_eq!(k.local_degree(PlaceQ::Finite(11)), 1);
        assert_eq!(k.local_degree(PlaceQ::Infinite), 1);
        // Q(zeta_12): 2 has e = 2, f = 2 (order of 2 mod 3)
        assert_eq!(AbelianFieldSpec::cyclotomic(12).local_degree(PlaceQ::Finite(2)), 4);
        assert_eq!(AbelianFieldSpec::cyclotomic(1).local_degree(PlaceQ::Finite(7)), 1);
    }

    #[test]
    fn cyclicity() {
        assert!(AbelianFieldSpec::cyclotomic(5).is_cyclic());
        assert!(!AbelianFieldSpec::cyclotomic(8).is_cyclic());
        assert!(!AbelianFieldSpec::cyclotomic(12).is_cyclic());
        assert!(AbelianFieldSpec::new(8, alloc::vec![7]).unwrap().is_cyclic());
    }

    #[test]
    fn unit_generators_have_claimed_orders() {
        for m in 1..200 {
            assert!(check_generators(m), "m = {}", m);
            let gens = unit_group_generators(m);
            let size: u64 = gens.iter().map(|g| g.1).product();
            assert_eq!(size, totient(m), "m = {}", m);
            assert_eq!(closure(m, gens.iter().map(|g| g.0)).len() as u64, totient(m));
        }
    }
}
