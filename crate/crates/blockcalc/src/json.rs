//! Wire formats for cyclotomic numbers, cocycles, matrices and isogeny data.

use blockcalc_core::arith::parse_rational;
use blockcalc_core::cohom::{Cocycle2, CoefficientBasis, FiniteGroup, MultiplicativeValue};
use blockcalc_core::csa::{PlaceQ, QuaternionAlgebraQ};
use blockcalc_core::cyclo::{reduce_mod_cyclotomic, CyclotomicElement, RootOfUnity};
use blockcalc_core::matalg::{Ambient, MatrixOverB, QuaternionElement};
use blockcalc_core::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::InputError;

/// Bound on `|a|, |b|` when realizing a ramification list as `(a, b)`.
pub const RAMIFICATION_SEARCH_BOUND: i64 = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclotomicJson {
    pub conductor: u64,
    pub coeffs: Vec<String>,
}

impl CyclotomicJson {
    pub fn from_element(x: &CyclotomicElement) -> Self {
        Self { conductor: x.conductor(), coeffs: x.coeff_strings() }
    }

    pub fn to_element(&self, path: &str) -> Result<CyclotomicElement, InputError> {
        if self.conductor == 0 {
            return Err(InputError::schema(format!("{}.conductor", path), "conductor must be positive"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, s)| rational(s, &format!("{}.coeffs[{}]", path, i)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(reduce_mod_cyclotomic(&coeffs, self.conductor))
    }
}

pub fn rational(s: &str, path: &str) -> Result<BigRational, InputError> {
    parse_rational(s).ok_or_else(|| InputError::schema(path, format!("{:?} is not a fraction p/q", s)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootJson {
    pub conductor: u64,
    pub exponent: i64,
}

/// A cocycle value: a rational string, or a root of unity times basis prime powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Rational(String),
    Factored { torsion: RootJson, exponents: Vec<i64> },
}

impl ValueJson {
    fn to_value(&self, basis: &CoefficientBasis, path: &str) -> Result<MultiplicativeValue, InputError> {
        match self {
            Self::Rational(s) => {
                let q = rational(s, path)?;
                MultiplicativeValue::from_rational(&q, basis).map_err(|e| InputError::schema(path, e.to_string()))
            }
            Self::Factored { torsion, exponents } => {
                if torsion.conductor == 0 {
                    return Err(InputError::schema(format!("{}.torsion.conductor", path), "must be positive"));
                }
                if exponents.len() != basis.len() {
                    return Err(InputError::schema(
                        format!("{}.exponents", path),
                        format!("{} exponents for {} basis primes", exponents.len(), basis.len()),
                    ));
                }
                Ok(MultiplicativeValue::new(RootOfUnity::new(torsion.conductor, torsion.exponent), exponents.clone()))
            }
        }
    }

    fn from_value(v: &MultiplicativeValue, basis: &CoefficientBasis) -> Self {
        match v.to_rational(basis) {
            Some(q) => Self::Rational(q.to_string()),
            None => Self::Factored {
                torsion: RootJson { conductor: v.torsion.order(), exponent: v.torsion.exponent_in(v.torsion.order()) as i64 },
                exponents: v.exponents.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn to_group(&self, path: &str) -> Result<FiniteGroup, InputError> {
        if self.table.len() != self.order {
            return Err(InputError::schema(
                format!("{}.table", path),
                format!("{} rows for a group of order {}", self.table.len(), self.order),
            ));
        }
        FiniteGroup::from_table(&self.table).map_err(|e| InputError::schema(format!("{}.table", path), e.to_string()))
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        Self { order: g.order(), table: g.table_rows() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleJson {
    pub group: GroupJson,
    pub basis: Vec<String>,
    pub cocycle: Vec<Vec<ValueJson>>,
}

impl CocycleJson {
    pub fn to_cocycle(&self) -> Result<Cocycle2, InputError> {
        let group = self.group.to_group("group")?;
        let basis = CoefficientBasis::parse(&self.basis).map_err(|e| InputError::schema("basis", e.to_string()))?;
        let g = group.order();
        if self.cocycle.len() != g {
            return Err(InputError::schema("cocycle", format!("{} rows for a group of order {}", self.cocycle.len(), g)));
        }
        let mut rows = Vec::with_capacity(g);
        for (i, row) in self.cocycle.iter().enumerate() {
            if row.len() != g {
                return Err(InputError::schema(format!("cocycle[{}]", i), format!("{} entries, expected {}", row.len(), g)));
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .map(|(j, v)| v.to_value(&basis, &format!("cocycle[{}][{}]", i, j)))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(Cocycle2::new(group, basis, rows)?)
    }

    pub fn from_cocycle(c: &Cocycle2) -> Self {
        Self {
            group: GroupJson::from_group(c.group()),
            basis: c.basis().entries(),
            cocycle: c
                .rows()
                .iter()
                .map(|r| r.iter().map(|v| ValueJson::from_value(v, c.basis())).collect())
                .collect(),
        }
    }
}

/// A rational given either as a JSON integer or as a fraction string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Text(String),
}

impl RationalJson {
    fn to_rational(&self, path: &str) -> Result<BigRational, InputError> {
        match self {
            Self::Int(n) => Ok(BigRational::from_integer((*n).into())),
            Self::Text(s) => rational(s, path),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraJson {
    Symbol { a: RationalJson, b: RationalJson },
    Ramification { ramification: Vec<String> },
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<QuaternionAlgebraQ, InputError> {
        match self {
            Self::Symbol { a, b } => {
                let (a, b) = (a.to_rational("algebra.a")?, b.to_rational("algebra.b")?);
                QuaternionAlgebraQ::new(a, b).map_err(|e| InputError::schema("algebra", e.to_string()))
            }
            Self::Ramification { ramification } => {
                let places = ramification
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        s.parse::<PlaceQ>()
                            .map_err(|e| InputError::schema(format!("algebra.ramification[{}]", i), e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                QuaternionAlgebraQ::from_ramification(&places, RAMIFICATION_SEARCH_BOUND).map_err(|e| match e {
                    blockcalc_core::Error::SearchBoundExceeded { .. } => InputError::Core(e),
                    e => InputError::schema("algebra.ramification", e.to_string()),
                })
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsJson {
    #[serde(default)]
    pub f: Option<u64>,
    #[serde(default)]
    pub t: Option<u64>,
    #[serde(default)]
    pub albert_type: Option<String>,
    #[serde(default, rename = "dim_B")]
    pub dim_b: Option<u64>,
    #[serde(default)]
    pub k_has_real_embedding: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumJson {
    pub group: GroupJson,
    pub basis: Vec<String>,
    pub cocycle: Vec<Vec<ValueJson>>,
    pub algebra: AlgebraJson,
    #[serde(default)]
    pub flags: FlagsJson,
}

/// Row-major nested arrays of `[w, x, y, z]` fraction strings.
pub type MatrixJson = Vec<Vec<[String; 4]>>;

pub fn matrix_to_json(m: &MatrixOverB) -> MatrixJson {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|q| q.coords().map(|c| c.to_string())).collect())
        .collect()
}

pub fn matrix_from_json(ambient: &Ambient, rows: &MatrixJson) -> Result<MatrixOverB, InputError> {
    let mut entries = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (j, e) in row.iter().enumerate() {
            let p = format!("[{}][{}]", i, j);
            let c = [rational(&e[0], &p)?, rational(&e[1], &p)?, rational(&e[2], &p)?, rational(&e[3], &p)?];
            out.push(QuaternionElement::from_coords(c));
        }
        entries.push(out);
    }
    ambient.from_entries(entries).map_err(|e| InputError::schema("matrix", e.to_string()))
}
