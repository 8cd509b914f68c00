//! Manifest ingestion and canonical serialization.
//!
//! Manifests are strict JSON: unknown fields are rejected, and every integer
//! is a decimal string so arbitrary-precision Gram entries survive
//! round-trips byte-exactly. The canonical form (sorted keys, compact
//! separators) is what reports echo and what golden tests diff.

use formgate_core::charvec::{self, EnumOptions};
use formgate_core::manifold::{
    catalog_lookup, LocalSystemChoice, ManifoldError, ManifoldPresentation, SummandSpec,
};
use formgate_core::obstruct::{EngineOptions, NamedChoice, StrongTenEighths};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestDoc {
    pub schema_version: String,
    pub summands: Vec<SummandEntry>,
    pub local_systems: Vec<LocalSystemDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub options: Option<OptionsDoc>,
}

/// Either a catalog reference (`catalog`, optional `count`) or an inline
/// custom summand (`custom`); exactly one of the two.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub custom: Option<SummandSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalSystemDoc {
    pub name: String,
    /// One entry per summand instance (counts expanded, in order):
    /// `"trivial"` or a local-class name of that summand.
    pub selections: Vec<String>,
    /// Twisted `c_1^2` used in the virtual-dimension report; defaults to
    /// `"0"`, the `E = R + lambda` case the gates evaluate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1sq: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_cap: Option<String>,
    /// When present, enumeration minima are audited against a brute-force
    /// box scan of this radius whenever the witness fits in the box.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_radius: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_10_8: Option<Strong108Doc>,
}

/// Coefficients of the optional user-supplied refinement inequality
/// `den*b2 >= sign_num*|sign| + b1_num*b1 + const_num`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Strong108Doc {
    pub sign_num: String,
    pub b1_num: String,
    pub const_num: String,
    pub den: String,
}

/// A parsed, validated manifest, ready for the obstruction engine.
pub struct LoadedManifest {
    pub doc: ManifestDoc,
    pub presentation: ManifoldPresentation,
    pub choices: Vec<NamedChoice>,
    /// Per local system, the `c1sq` override (defaults to 0).
    pub c1sq: Vec<BigInt>,
    pub engine: EngineOptions,
}

fn parse_count(field: &str, text: &str) -> Result<usize, CliError> {
    text.parse()
        .map_err(|_| CliError::invalid(format!("{field}: {text:?} is not a valid count")))
}

fn parse_bigint(field: &str, text: &str) -> Result<BigInt, CliError> {
    text.parse()
        .map_err(|_| CliError::invalid(format!("{field}: {text:?} is not a decimal integer")))
}

impl ManifestDoc {
    pub fn parse(text: &str) -> Result<ManifestDoc, CliError> {
        let doc: ManifestDoc = serde_json::from_str(text)
            .map_err(|e| CliError::invalid(format!("manifest does not match schema: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::invalid(format!(
                "unsupported schema_version {:?} (expected {:?})",
                doc.schema_version, SCHEMA_VERSION
            )));
        }
        Ok(doc)
    }

    pub fn load(self, rank_cap_flag: Option<usize>) -> Result<LoadedManifest, CliError> {
        let mut summands = Vec::new();
        for (idx, entry) in self.summands.iter().enumerate() {
            match (&entry.catalog, &entry.custom) {
                (Some(name), None) => {
                    let count = match &entry.count {
                        Some(c) => parse_count(&format!("summands[{idx}].count"), c)?,
                        None => 1,
                    };
                    if count == 0 {
                        return Err(CliError::invalid(format!(
                            "summands[{idx}]: count must be at least 1"
                        )));
                    }
                    let s = catalog_lookup(name).map_err(CliError::from_manifold)?;
                    for _ in 0..count {
                        summands.push(s.clone());
                    }
                }
                (None, Some(spec)) => {
                    if entry.count.is_some() {
                        return Err(CliError::invalid(format!(
                            "summands[{idx}]: count is only valid with a catalog reference"
                        )));
                    }
                    summands.push(spec.to_summand().map_err(CliError::from_manifold)?);
                }
                _ => {
                    return Err(CliError::invalid(format!(
                        "summands[{idx}]: exactly one of \"catalog\" or \"custom\" is required"
                    )))
                }
            }
        }
        let presentation = ManifoldPresentation::new(summands).map_err(CliError::from_manifold)?;
        let n = presentation.summands().len();

        if self.local_systems.is_empty() {
            return Err(CliError::invalid(
                "at least one local system is required".to_string(),
            ));
        }
        let mut choices = Vec::new();
        let mut c1sq = Vec::new();
        for ls in &self.local_systems {
            if ls.selections.len() != n {
                return Err(CliError::invalid(format!(
                    "local system {:?} has {} selections for {} summand instances",
                    ls.name,
                    ls.selections.len(),
                    n
                )));
            }
            let selections = ls
                .selections
                .iter()
                .map(|s| {
                    if s == "trivial" {
                        None
                    } else {
                        Some(s.clone())
                    }
                })
                .collect();
            let choice = LocalSystemChoice { selections };
            // surface bad class names and all-trivial systems as manifest errors
            presentation
                .twisted_invariants(&choice)
                .map(|_| ())
                .or_else(|e| match e {
                    // Euler violations are data inconsistencies, deferred to
                    // evaluation so they exit with the dedicated code
                    ManifoldError::EulerIdentityViolation { .. } => Ok(()),
                    other => Err(CliError::from_manifold(other)),
                })?;
            choices.push(NamedChoice {
                name: ls.name.clone(),
                choice,
            });
            c1sq.push(match &ls.c1sq {
                Some(t) => parse_bigint("c1sq", t)?,
                None => BigInt::from(0),
            });
        }

        let mut engine = EngineOptions::default();
        if let Ok(cap) = std::env::var("FORMGATE_RANK_CAP") {
            engine.enum_opts.rank_cap = cap.parse().map_err(|_| {
                CliError::invalid(format!("FORMGATE_RANK_CAP={cap:?} is not a number"))
            })?;
        }
        if let Some(opts) = &self.options {
            if let Some(cap) = &opts.rank_cap {
                engine.enum_opts = EnumOptions {
                    rank_cap: parse_count("options.rank_cap", cap)?,
                };
            }
            if let Some(r) = &opts.oracle_radius {
                let radius = parse_count("options.oracle_radius", r)?;
                if radius == 0 {
                    return Err(CliError::invalid(
                        "options.oracle_radius must be at least 1".to_string(),
                    ));
                }
                engine.verify_radius = Some(radius as u32);
            }
            if let Some(s) = &opts.strong_10_8 {
                let den = parse_bigint("strong_10_8.den", &s.den)?;
                if den <= BigInt::from(0) {
                    return Err(CliError::invalid(
                        "strong_10_8.den must be positive".to_string(),
                    ));
                }
                engine.strong_ten_eighths = Some(StrongTenEighths {
                    sign_num: parse_bigint("strong_10_8.sign_num", &s.sign_num)?,
                    b1_num: parse_bigint("strong_10_8.b1_num", &s.b1_num)?,
                    const_num: parse_bigint("strong_10_8.const_num", &s.const_num)?,
                    den,
                });
            }
        }
        if let Some(cap) = rank_cap_flag {
            engine.enum_opts = EnumOptions { rank_cap: cap };
        }

        Ok(LoadedManifest {
            doc: self,
            presentation,
            choices,
            c1sq,
            engine,
        })
    }
}

/// Strict schema for standalone Gram-matrix files: `{"gram": [[...]]}` with
/// decimal-string entries and an optional `name`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub gram: Vec<Vec<String>>,
}

impl GramFile {
    pub fn parse(text: &str) -> Result<formgate_core::lattice::GramLattice, CliError> {
        let file: GramFile = serde_json::from_str(text)
            .map_err(|e| CliError::invalid(format!("gram file does not match schema: {e}")))?;
        let rows: Vec<Vec<BigInt>> = file
            .gram
            .iter()
            .map(|row| row.iter().map(|e| parse_bigint("gram", e)).collect())
            .collect::<Result<_, _>>()?;
        formgate_core::lattice::GramLattice::new(rows)
            .map_err(|e| CliError::invalid(format!("invalid gram matrix: {e}")))
    }
}

/// Default enumeration options for gram-file subcommands, honoring the
/// environment override and the explicit flag.
pub fn enum_options(rank_cap_flag: Option<usize>) -> Result<EnumOptions, CliError> {
    let mut cap = charvec::DEFAULT_RANK_CAP;
    if let Ok(env_cap) = std::env::var("FORMGATE_RANK_CAP") {
        cap = env_cap.parse().map_err(|_| {
            CliError::invalid(format!("FORMGATE_RANK_CAP={env_cap:?} is not a number"))
        })?;
    }
    if let Some(flag) = rank_cap_flag {
        cap = flag;
    }
    Ok(EnumOptions { rank_cap: cap })
}
