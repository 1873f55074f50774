//! Arithmetic classification of building blocks and of the varieties built from them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Albert type of a division algebra with positive involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlbertType {
    I,
    II,
    III,
    IV,
}

impl AlbertType {
    pub const ALL: [AlbertType; 4] = [Self::I, Self::II, Self::III, Self::IV];
}

impl fmt::Display for AlbertType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
            Self::IV => "IV",
        })
    }
}

impl FromStr for AlbertType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" | "1" => Ok(Self::I),
            "II" | "2" => Ok(Self::II),
            "III" | "3" => Ok(Self::III),
            "IV" | "4" => Ok(Self::IV),
            other => Err(Error::InconsistentDatum(format!("unknown Albert type {:?}", other))),
        }
    }
}

/// Arithmetic shape of `End^0(B)`: center of degree `f`, Schur index `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndomorphismDatum {
    pub center_degree: u64,
    pub schur_index: u64,
    pub albert_type: AlbertType,
    pub center_totally_real: bool,
    pub dim_b: u64,
}

impl EndomorphismDatum {
    pub fn new(
        center_degree: u64,
        schur_index: u64,
        albert_type: AlbertType,
        center_totally_real: bool,
        dim_b: u64,
    ) -> Result<Self> {
        if center_degree == 0 || schur_index == 0 || dim_b == 0 {
            return Err(Error::InconsistentDatum("degrees and dimensions must be positive".into()));
        }
        if albert_type == AlbertType::I && schur_index != 1 {
            return Err(Error::InconsistentDatum(format!(
                "type I algebras are fields, Schur index {} given",
                schur_index
            )));
        }
        Ok(Self { center_degree, schur_index, albert_type, center_totally_real, dim_b })
    }
}

/// `A ~ B^n` with `End^0(A)` a field of degree `field_degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarietyShape {
    pub dim_a: u64,
    pub n: u64,
    pub field_degree: u64,
}

pub fn is_gl2_type(shape: &VarietyShape) -> bool {
    shape.field_degree == shape.dim_a
}

/// `t <= 2` and `t f = dim B`.
pub fn building_block_check(d: &EndomorphismDatum) -> bool {
    d.schur_index <= 2 && d.schur_index * d.center_degree == d.dim_b
}

/// Shape of the variety attached to a splitting field of degree `n_e` over the center.
pub fn dimension_bookkeeping(d: &EndomorphismDatum, n_e: u64) -> Result<VarietyShape> {
    if n_e == 0 || n_e % d.schur_index != 0 {
        return Err(Error::IndivisibleMultiplicity { t: d.schur_index, n: n_e });
    }
    let shape = VarietyShape {
        dim_a: n_e * d.center_degree,
        n: n_e / d.schur_index,
        field_degree: n_e * d.center_degree,
    };
    debug_assert!(is_gl2_type(&shape));
    debug_assert!(!building_block_check(d) || shape.dim_a == shape.n * d.dim_b);
    Ok(shape)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternVerdict {
    Admissible,
    /// Would force complex multiplication on the factor.
    ExcludedCm,
    Inadmissible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorPattern {
    pub dim_factor: u64,
    pub verdict: PatternVerdict,
}

/// For each candidate dimension `D` of a factor power `B_i^{n_i}`: the field degree `dim A`
/// must divide `2D`; `D = dim A / 2` is the CM branch.
pub fn factor_pattern_filter(dim_a: u64) -> Vec<FactorPattern> {
    (1..=dim_a)
        .map(|d| {
            let verdict = if d == dim_a {
                PatternVerdict::Admissible
            } else if 2 * d == dim_a {
                PatternVerdict::ExcludedCm
            } else {
                PatternVerdict::Inadmissible
            };
            FactorPattern { dim_factor: d, verdict }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlbertVerdict {
    pub accepted: bool,
    /// Accepted only because the base field has no real embedding to constrain it.
    pub unconstrained: bool,
    pub rule: &'static str,
    pub reason: String,
}

/// Restrictions on `End^0(B)` for building blocks, sharper when `k` has a real embedding.
pub fn albert_filter(d: &EndomorphismDatum, k_has_real_embedding: bool) -> AlbertVerdict {
    let verdict = |accepted, unconstrained, rule, reason: &str| AlbertVerdict {
        accepted,
        unconstrained,
        rule,
        reason: reason.into(),
    };
    match (d.albert_type, k_has_real_embedding) {
        (AlbertType::III, _) => verdict(
            false,
            false,
            "albert.type-iii.square-of-cm",
            "type III would make B isogenous to the square of a CM abelian variety",
        ),
        (AlbertType::IV, true) => verdict(
            false,
            false,
            "albert.real-embedding.type-iv.nonreal-trace",
            "type IV forces non-real trace values on the center, impossible over a field with a real embedding",
        ),
        (_, true) if !d.center_totally_real => verdict(
            false,
            false,
            "albert.real-embedding.center-totally-real",
            "over a field with a real embedding the center must be totally real",
        ),
        (AlbertType::I, true) => verdict(true, false, "albert.real-embedding.field", "B is a totally real field"),
        (AlbertType::II, true) => verdict(
            true,
            false,
            "albert.real-embedding.indefinite-quaternion",
            "totally indefinite quaternion algebra over a totally real field",
        ),
        (_, false) => verdict(
            true,
            true,
            "albert.no-real-embedding.unconstrained",
            "no real embedding: the center may be totally real or CM",
        ),
    }
}
