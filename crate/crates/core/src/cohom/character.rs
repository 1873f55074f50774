use alloc::format;
use alloc::vec::Vec;

use super::group::FiniteGroup;
use super::split::SplittingMap;
use super::value::{CoefficientBasis, MultiplicativeValue};
use crate::arith::{gcd, lcm};
use crate::cyclo::{generated_subfield, CyclotomicElement, GeneratedSubfield, RootOfUnity};
use crate::error::{Error, Result};

/// A homomorphism from a finite group to the roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterMap {
    group: FiniteGroup,
    values: Vec<RootOfUnity>,
}

impl CharacterMap {
    pub fn new(group: FiniteGroup, values: Vec<RootOfUnity>) -> Result<Self> {
        let g = group.order();
        if values.len() != g {
            return Err(Error::ShapeMismatch { order: g });
        }
        for s in 0..g {
            for t in 0..g {
                if values[s].mul(&values[t]) != values[group.mul(s, t)] {
                    return Err(Error::NotACharacter(format!(
                        "value at {} times value at {} differs from value at their product",
                        s, t
                    )));
                }
            }
        }
        Ok(Self { group, values })
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let values = alloc::vec![RootOfUnity::ONE; group.order()];
        Self { group, values }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn value(&self, x: usize) -> RootOfUnity {
        self.values[x]
    }

    pub fn values(&self) -> &[RootOfUnity] {
        &self.values
    }

    pub fn order(&self) -> u64 {
        self.values.iter().fold(1, |acc, v| lcm(acc, v.order()))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }
}

/// `x -> beta(x)^m / d(pi(x))`, which is a character when `d beta = c` and `c^m = dd`.
pub fn epsilon_character(
    beta: &SplittingMap,
    m: u64,
    d: &[MultiplicativeValue],
    basis: &CoefficientBasis,
) -> Result<CharacterMap> {
    let g = beta.group().order();
    let mut values = Vec::with_capacity(g);
    for x in 0..g {
        let base = beta.projection()[x];
        let dv = d
            .get(base)
            .ok_or_else(|| Error::NotACharacter(format!("witness has no value at {}", base)))?
            .to_cyclotomic(basis);
        let v = beta.value(x).pow(m as i64)?.checked_div(&dv)?;
        let r = v
            .as_root_of_unity()
            .ok_or_else(|| Error::NotACharacter(format!("value at {} is not a root of unity", x)))?;
        values.push(r);
    }
    CharacterMap::new(beta.group().clone(), values)
}

/// `E_beta` as a subfield of the cyclotomic field of the common conductor.
pub fn splitting_field_of(beta: &SplittingMap) -> Result<GeneratedSubfield> {
    generated_subfield(beta.values(), beta.conductor())
}

/// Result of forcing `zeta_n` into the field generated by a splitting map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjustment {
    pub beta: SplittingMap,
    /// Character used for the twist, on `beta`'s group; trivial when nothing changed.
    pub chi: CharacterMap,
    pub epsilon: CharacterMap,
    /// Order of the epsilon character before the twist.
    pub r: u64,
    /// `gcd(n, r)`.
    pub e: u64,
}

impl Adjustment {
    pub fn changed(&self) -> bool {
        !self.chi.is_trivial()
    }
}

/// Twists `beta` by a character of order `mn/e` on `H x C_{mn/e}` so that `zeta_n`
/// lies in `E_beta`. Left unchanged when `zeta_n` is already there.
pub fn adjust_splitting_map(
    beta: &SplittingMap,
    n: u64,
    m: u64,
    d: &[MultiplicativeValue],
    basis: &CoefficientBasis,
) -> Result<Adjustment> {
    if n == 0 || m == 0 {
        return Err(Error::InconsistentDatum("n and m must be positive".into()));
    }
    let eps0 = epsilon_character(beta, m, d, basis)?;
    let r = eps0.order();
    let e = gcd(n, r);
    if n == 1 || splitting_field_of(beta)?.contains_zeta(n) {
        return Ok(Adjustment {
            chi: CharacterMap::trivial(beta.group().clone()),
            beta: beta.clone(),
            epsilon: eps0,
            r,
            e,
        });
    }
    let k = m * n / e;
    let ext = FiniteGroup::direct_product(beta.group(), &FiniteGroup::cyclic(k as usize));
    let ku = k as usize;
    let chi_vals: Vec<RootOfUnity> = (0..ext.order()).map(|x| RootOfUnity::new(k, (x % ku) as i64)).collect();
    let chi = CharacterMap::new(ext.clone(), chi_vals)?;
    let projection: Vec<usize> = (0..ext.order()).map(|x| beta.projection()[x / ku]).collect();
    let values: Vec<CyclotomicElement> = (0..ext.order())
        .map(|x| &chi.value(x).to_cyclotomic() * beta.value(x / ku))
        .collect();
    let adjusted = SplittingMap::new(ext, projection, values)?;
    let epsilon = epsilon_character(&adjusted, m, d, basis)?;

    for x in 0..adjusted.group().order() {
        let want = chi.value(x).pow(m as i64).mul(&eps0.value(x / ku));
        if epsilon.value(x) != want {
            return Err(Error::PipelineInvariantViolation {
                stage: "adjust",
                detail: format!("epsilon differs from chi^m epsilon' at {}", x),
            });
        }
    }
    if !splitting_field_of(&adjusted)?.contains_zeta(n) {
        return Err(Error::PipelineInvariantViolation {
            stage: "adjust",
            detail: format!("zeta_{} not in the adjusted field", n),
        });
    }
    Ok(Adjustment { beta: adjusted, chi, epsilon, r, e })
}
