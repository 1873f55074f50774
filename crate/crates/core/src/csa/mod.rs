//! Quaternion algebras over `Q`: local symbols, ramification, and splitting by abelian fields.

mod abelian;
mod gw;
mod hilbert;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use abelian::{local_degree_in_abelian, min_cyclotomic_splitting, splits, AbelianFieldSpec};
pub use gw::{grunwald_wang_search, LocalDegreeConstraint};
pub use hilbert::hilbert_symbol;

use crate::arith::{factorize_bigint, is_prime, rat};
use crate::error::{Error, Result};

/// A place of `Q`. Finite places sort before the real one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceQ {
    Finite(u64),
    Infinite,
}

impl PlaceQ {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self::Finite(p))
        } else {
            Err(Error::InvalidConstraint(alloc::format!("{} is not a prime", p)))
        }
    }
}

impl fmt::Display for PlaceQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(p) => write!(f, "{}", p),
            Self::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for PlaceQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "oo" => Ok(Self::Infinite),
            t => {
                let p = t
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidConstraint(alloc::format!("bad place {:?}", t)))?;
                Self::prime(p)
            }
        }
    }
}

/// The quaternion algebra `(a, b)_Q`: `i^2 = a`, `j^2 = b`, `ij = -ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionAlgebraQ {
    a: BigRational,
    b: BigRational,
}

/// Ramified places and Schur index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ramification {
    pub places: Vec<PlaceQ>,
    pub schur_index: u64,
}

impl QuaternionAlgebraQ {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InconsistentDatum("quaternion structure constants must be nonzero".into()));
        }
        Ok(Self { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(rat(a), rat(b))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// Places that can possibly ramify: infinity, 2 and the primes in `a` and `b`.
    fn candidate_places(&self) -> Vec<PlaceQ> {
        let mut ps: Vec<u64> = alloc::vec![2];
        for x in [&self.a, &self.b] {
            for n in [x.numer(), x.denom()] {
                ps.extend(factorize_bigint(n).into_iter().map(|(p, _)| p));
            }
        }
        ps.sort_unstable();
        ps.dedup();
        let mut out: Vec<PlaceQ> = ps.into_iter().map(PlaceQ::Finite).collect();
        out.push(PlaceQ::Infinite);
        out
    }

    pub fn ramification(&self) -> Result<Vec<PlaceQ>> {
        let ram: Vec<PlaceQ> = self
            .candidate_places()
            .into_iter()
            .filter(|&v| hilbert_symbol(&self.a, &self.b, v) == -1)
            .collect();
        if ram.len() % 2 == 1 {
            return Err(Error::InternalReciprocityViolation { a: self.a.to_string(), b: self.b.to_string() });
        }
        Ok(ram)
    }

    pub fn schur_index(&self) -> Result<u64> {
        Ok(if self.ramification()?.is_empty() { 1 } else { 2 })
    }

    pub fn is_definite(&self) -> bool {
        self.a.is_negative() && self.b.is_negative()
    }

    /// Some `(a, b)` with small integer entries ramified exactly at `places`.
    pub fn from_ramification(places: &[PlaceQ], bound: i64) -> Result<Self> {
        let mut want: Vec<PlaceQ> = places.to_vec();
        want.sort_unstable();
        want.dedup();
        if want.len() % 2 == 1 {
            return Err(Error::InvalidConstraint("a ramification set has even cardinality".into()));
        }
        // search in order of max(|a|, |b|), negatives first
        let ordered: Vec<i64> = (1..=bound).flat_map(|k| [-k, k]).collect();
        for limit in 1..=bound {
            for &a in &ordered {
                for &b in &ordered {
                    if a.abs().max(b.abs()) != limit || a.abs() > b.abs() {
                        continue;
                    }
                    let q = Self::from_ints(a, b)?;
                    if q.ramification()? == want {
                        return Ok(q);
                    }
                }
            }
        }
        Err(Error::SearchBoundExceeded { cap: bound as u64 })
    }

    pub fn ramification_data(&self) -> Result<Ramification> {
        let places = self.ramification()?;
        let schur_index = if places.is_empty() { 1 } else { 2 };
        Ok(Ramification { places, schur_index })
    }
}

/// Ramified places and Schur index of `A`.
pub fn ramification_data(a: &QuaternionAlgebraQ) -> Result<Ramification> {
    a.ramification_data()
}

pub fn format_places(places: &[PlaceQ]) -> Vec<String> {
    places.iter().map(|p| p.to_string()).collect()
}
