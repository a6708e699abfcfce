//! Bundled data: Yang-Baxter operators, Hopf structure constants, tile
//! matrices, and example diagrams. Everything ships as JSON or diagram
//! text and is re-validated by the relevant checker on every load; no
//! table is trusted untested.

use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::matrix::ExactMatrix;
use crate::rep::{HeckeRep, VirtualRep};
use crate::ring::{value_from_json, Value};
use crate::tangle::{RibbonMatrixData, TangleDiagram};

const RHO_HECKE2: &str = include_str!("../data/rho_hecke2.json");
const RHO_IDENTITY2: &str = include_str!("../data/rho_identity2.json");
const HECKE2: &str = include_str!("../data/hecke2.json");
const HOPF_SWEEDLER4: &str = include_str!("../data/hopf_sweedler4.json");
const HOPF_GROUP2: &str = include_str!("../data/hopf_group2.json");
const HOPF_TRIVIAL1: &str = include_str!("../data/hopf_trivial1.json");
const RIBBON_BRACKET: &str = include_str!("../data/ribbon_bracket.json");
const RIBBON_FLAT: &str = include_str!("../data/ribbon_flat.json");

const TANGLE_FILES: &[(&str, &str)] = &[
    (
        "virtual-trefoil",
        include_str!("../data/tangles/virtual-trefoil.tng"),
    ),
    ("circle", include_str!("../data/tangles/circle.tng")),
    ("curl", include_str!("../data/tangles/curl.tng")),
    (
        "zigzag-circle",
        include_str!("../data/tangles/zigzag-circle.tng"),
    ),
    (
        "cancelling-pair",
        include_str!("../data/tangles/cancelling-pair.tng"),
    ),
    (
        "braid-rel-lhs",
        include_str!("../data/tangles/braid-rel-lhs.tng"),
    ),
    (
        "braid-rel-rhs",
        include_str!("../data/tangles/braid-rel-rhs.tng"),
    ),
    (
        "swing-lhs",
        include_str!("../data/tangles/swing-lhs.tng"),
    ),
    (
        "swing-rhs",
        include_str!("../data/tangles/swing-rhs.tng"),
    ),
    (
        "detour-lhs",
        include_str!("../data/tangles/detour-lhs.tng"),
    ),
    (
        "detour-rhs",
        include_str!("../data/tangles/detour-rhs.tng"),
    ),
];

pub fn virtual_rep_names() -> &'static [&'static str] {
    &["hecke2", "identity2"]
}

/// Load a bundled algebraic Yang-Baxter operator; `new` re-runs the
/// Yang-Baxter and invertibility checks.
pub fn virtual_rep(name: &str) -> Result<VirtualRep> {
    let json = match name {
        "hecke2" => RHO_HECKE2,
        "identity2" => RHO_IDENTITY2,
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    let v: serde_json::Value = serde_json::from_str(json)?;
    let rho = ExactMatrix::from_json(
        v.get("rho")
            .ok_or_else(|| Error::Parse("builtin lacks `rho`".into()))?,
    )?;
    let d = v
        .get("d")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("builtin lacks `d`".into()))? as usize;
    VirtualRep::new(name, rho, d)
}

/// Load the bundled braided Hecke pair; `new` re-runs the braided
/// Yang-Baxter and quadratic checks.
pub fn hecke_rep(name: &str) -> Result<HeckeRep> {
    let json = match name {
        "hecke2" => HECKE2,
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    let v: serde_json::Value = serde_json::from_str(json)?;
    let r = ExactMatrix::from_json(
        v.get("r")
            .ok_or_else(|| Error::Parse("builtin lacks `r`".into()))?,
    )?;
    let d = v
        .get("d")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse("builtin lacks `d`".into()))? as usize;
    let z = value_from_json(
        r.ring,
        v.get("z")
            .ok_or_else(|| Error::Parse("builtin lacks `z`".into()))?,
    )?;
    HeckeRep::new(name, r, z, d)
}

pub fn hopf_names() -> &'static [&'static str] {
    &["trivial1", "group2", "sweedler4"]
}

pub fn hopf_data(name: &str) -> Result<HopfData> {
    let json = match name {
        "sweedler4" => HOPF_SWEEDLER4,
        "group2" => HOPF_GROUP2,
        "trivial1" => HOPF_TRIVIAL1,
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    let h = HopfData::load(json)?;
    let base = crate::hopf::check_hopf_axioms(&h);
    if !base.all_pass() {
        return Err(Error::FailedCheck(format!(
            "builtin Hopf data `{name}` fails its own axioms:\n{base}"
        )));
    }
    Ok(h)
}

pub fn ribbon_names() -> &'static [&'static str] {
    &["bracket", "flat"]
}

pub fn ribbon_data(name: &str) -> Result<RibbonMatrixData> {
    let json = match name {
        "bracket" => RIBBON_BRACKET,
        "flat" => RIBBON_FLAT,
        _ => return Err(Error::UnknownBuiltin(name.into())),
    };
    let data = RibbonMatrixData::load(json)?;
    let moves = crate::tangle::check_move_invariance(&data)?;
    if !moves.all_pass() {
        return Err(Error::FailedCheck(format!(
            "builtin tile data `{name}` fails move invariance:\n{moves}"
        )));
    }
    Ok(data)
}

pub fn tangle_names() -> Vec<&'static str> {
    TANGLE_FILES.iter().map(|(n, _)| *n).collect()
}

pub fn tangle(name: &str) -> Result<TangleDiagram> {
    for (n, text) in TANGLE_FILES {
        if *n == name {
            return TangleDiagram::parse(text);
        }
    }
    Err(Error::UnknownBuiltin(name.into()))
}

pub fn tangle_source(name: &str) -> Result<&'static str> {
    for (n, text) in TANGLE_FILES {
        if *n == name {
            return Ok(text);
        }
    }
    Err(Error::UnknownBuiltin(name.into()))
}

/// Resolve a `builtin:NAME` or path argument to file contents.
pub fn resolve_source(spec: &str) -> Result<(String, bool)> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        Ok((name.to_string(), true))
    } else {
        Ok((spec.to_string(), false))
    }
}

/// The Laurent variable, for tests and docs.
pub fn q() -> Value {
    Value::monomial(1)
}
