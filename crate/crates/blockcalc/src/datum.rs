//! Loading isogeny data: every invariant is checked before the datum is handed out.

use blockcalc_core::classify::AlbertType;
use blockcalc_core::cohom::Cocycle2;
use blockcalc_core::pipeline::{DatumFlags, IsogenyDatum};

use crate::error::InputError;
use crate::json::{CocycleJson, DatumJson};

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, InputError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        InputError::schema(if path == "." { "$".into() } else { path }, e.into_inner().to_string())
    })
}

pub fn parse_cocycle(text: &str) -> Result<Cocycle2, InputError> {
    from_json::<CocycleJson>(text)?.to_cocycle()
}

pub fn parse_datum(text: &str) -> Result<IsogenyDatum, InputError> {
    let j: DatumJson = from_json(text)?;
    let cocycle = CocycleJson { group: j.group, basis: j.basis, cocycle: j.cocycle }.to_cocycle()?;
    let algebra = j.algebra.to_algebra()?;
    let albert_type = j
        .flags
        .albert_type
        .as_deref()
        .map(|s| s.parse::<AlbertType>().map_err(|e| InputError::schema("flags.albert_type", e.to_string())))
        .transpose()?;
    let flags = DatumFlags {
        center_degree: j.flags.f,
        schur_index: j.flags.t,
        albert_type,
        dim_b: j.flags.dim_b,
        k_has_real_embedding: j.flags.k_has_real_embedding,
    };
    Ok(IsogenyDatum::new(cocycle, algebra, flags)?)
}
