//! Building-block 4-manifolds, connected sums, and twisted Betti numbers.
//!
//! Twisted (local-coefficient) cohomology is never computed from chain
//! complexes. Each catalog summand carries, per named `Z`-bundle class, the
//! twisted Betti data of that summand, and connected sums combine them by
//! Mayer-Vietoris bookkeeping: degree-2 data add up, while
//! `b1(X;l) = sum of summand values + (t - 1)` where `t` is the number of
//! summands on which the bundle is nontrivial. Two global identities guard
//! the data at runtime: the twisted Euler identity
//! `1 - b1 + b+ = -b1(X;l) + b+(X;l)` and (via data validation) equality of
//! twisted and untwisted signatures. A violation aborts with
//! [`ManifoldError::EulerIdentityViolation`] instead of silently producing a
//! wrong certificate.

use crate::lattice::{Definiteness, GramLattice, LatticeError, Parity};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("unknown catalog summand {0:?}")]
    UnknownSummand(String),
    #[error("summand {summand:?} has no local class {class:?}")]
    UnknownLocalClass { summand: String, class: String },
    #[error("local system selects the trivial bundle on every summand")]
    AllTrivial,
    #[error("local system has {got} selections for {expected} summand instances")]
    SelectionLengthMismatch { expected: usize, got: usize },
    #[error("twisted Euler identity violated: 1 - b1 + b+ = {lhs} but -b1l + b+l = {rhs}; catalog or custom summand data are inconsistent")]
    EulerIdentityViolation { lhs: i64, rhs: i64 },
    #[error("invalid summand {name:?}: {reason}")]
    InvalidSummand { name: String, reason: String },
    #[error("a presentation needs at least one summand")]
    EmptyPresentation,
    #[error("invalid summand {name:?}: {source}")]
    BadGram {
        name: String,
        source: LatticeError,
    },
    #[error("invalid integer {text:?} in field {field}")]
    BadInteger { field: String, text: String },
}

/// 2-primary torsion of `H_1`, tracked only as far as the even-form
/// inequality for non-spin manifolds needs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H1TwoTorsion {
    None,
    /// Cyclic of order `2^k`, `k >= 1`.
    Z2k(u32),
    Z2PlusZ2,
    Other,
}

impl H1TwoTorsion {
    /// Direct-sum combination under connected sum, collapsed to the
    /// descriptors we track. Anything beyond a cyclic 2-group or `Z/2 + Z/2`
    /// becomes `Other`.
    pub fn combine(self, other: H1TwoTorsion) -> H1TwoTorsion {
        use H1TwoTorsion::*;
        match (self, other) {
            (None, x) | (x, None) => x,
            (Z2k(1), Z2k(1)) => Z2PlusZ2,
            _ => Other,
        }
    }

    /// Hypothesis set of the Bohr / Lee-Li even-form inequality:
    /// cyclic `Z/2^k` (including the trivial group) or `Z/2 + Z/2`.
    pub fn admits_even_nonspin_bound(self) -> bool {
        !matches!(self, H1TwoTorsion::Other)
    }
}

impl fmt::Display for H1TwoTorsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1TwoTorsion::None => write!(f, "none"),
            H1TwoTorsion::Z2k(1) => write!(f, "Z2"),
            H1TwoTorsion::Z2k(k) => write!(f, "Z2^{k}"),
            H1TwoTorsion::Z2PlusZ2 => write!(f, "Z2+Z2"),
            H1TwoTorsion::Other => write!(f, "other"),
        }
    }
}

impl FromStr for H1TwoTorsion {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(H1TwoTorsion::None),
            "Z2" => Ok(H1TwoTorsion::Z2k(1)),
            "Z2+Z2" => Ok(H1TwoTorsion::Z2PlusZ2),
            "other" => Ok(H1TwoTorsion::Other),
            _ => {
                if let Some(k) = s.strip_prefix("Z2^") {
                    let k: u32 = k
                        .parse()
                        .map_err(|_| format!("bad 2-torsion descriptor {s:?}"))?;
                    if k == 0 {
                        return Ok(H1TwoTorsion::None);
                    }
                    Ok(H1TwoTorsion::Z2k(k))
                } else {
                    Err(format!("bad 2-torsion descriptor {s:?}"))
                }
            }
        }
    }
}

/// Twisted invariants of one summand for one named nontrivial `Z`-bundle,
/// together with the characteristic-class flags the gates consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalClass {
    pub name: String,
    pub nontrivial: bool,
    pub b1_twisted: i64,
    pub b2_twisted: i64,
    pub bplus_twisted: i64,
    pub sign_twisted: i64,
    /// `w1(lambda)^2 = 0`.
    pub w1sq_zero: bool,
    /// `w1(lambda)^2 = w2` on this summand.
    pub w1sq_eq_w2: bool,
    /// `w1(lambda)^2` lifts to the torsion part of the twisted `H^2`.
    pub torsion_lift: bool,
}

/// One connected-sum building block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub name: String,
    pub b1: i64,
    /// Untwisted intersection form on `H^2 / torsion`.
    pub form: GramLattice,
    pub spin: bool,
    /// Kirby-Siebenmann invariant, 0 or 1.
    pub ks: u8,
    pub h1_two_torsion: H1TwoTorsion,
    pub local_classes: Vec<LocalClass>,
    pub provenance: String,
}

impl Summand {
    pub fn class(&self, name: &str) -> Option<&LocalClass> {
        self.local_classes.iter().find(|c| c.name == name)
    }

    /// Structural validation of summand data. The Euler identity is *not*
    /// checked here; it is asserted at twisted-invariant computation time so
    /// inconsistent custom data surface as a data-inconsistency failure.
    pub fn validate(&self) -> Result<(), ManifoldError> {
        let bad = |reason: String| ManifoldError::InvalidSummand {
            name: self.name.clone(),
            reason,
        };
        if self.b1 < 0 {
            return Err(bad(format!("b1 = {} is negative", self.b1)));
        }
        if self.ks > 1 {
            return Err(bad(format!("ks = {} is not a bit", self.ks)));
        }
        let inv = self.form.validate();
        if !inv.is_unimodular() {
            return Err(bad(format!(
                "intersection form must be unimodular, determinant is {}",
                inv.determinant
            )));
        }
        if self.spin && inv.parity != Parity::Even {
            return Err(bad("spin summand with odd intersection form".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for c in &self.local_classes {
            if !seen.insert(c.name.clone()) {
                return Err(bad(format!("duplicate local class {:?}", c.name)));
            }
            if c.b1_twisted < 0 || c.b2_twisted < 0 {
                return Err(bad(format!("class {:?} has negative Betti data", c.name)));
            }
            if (c.b2_twisted + c.sign_twisted) % 2 != 0 || c.sign_twisted.abs() > c.b2_twisted {
                return Err(bad(format!(
                    "class {:?}: b2_twisted = {} and sign_twisted = {} are inconsistent",
                    c.name, c.b2_twisted, c.sign_twisted
                )));
            }
            if c.bplus_twisted != (c.b2_twisted + c.sign_twisted) / 2 {
                return Err(bad(format!(
                    "class {:?}: bplus_twisted = {} but (b2_twisted + sign_twisted)/2 = {}",
                    c.name,
                    c.bplus_twisted,
                    (c.b2_twisted + c.sign_twisted) / 2
                )));
            }
            // twisted signature equals untwisted signature summand-wise
            // (multiplicativity under the free double cover)
            if c.sign_twisted != inv.signature {
                return Err(bad(format!(
                    "class {:?}: sign_twisted = {} differs from form signature {}",
                    c.name, c.sign_twisted, inv.signature
                )));
            }
        }
        Ok(())
    }

    /// Per-class twisted Euler identity `1 - b1 + b+ = -b1_twisted + b+_twisted`;
    /// holds for every catalog entry and is asserted when the catalog loads.
    pub fn euler_identity_holds(&self) -> bool {
        let bplus = self.form.validate().n_plus as i64;
        self.local_classes
            .iter()
            .filter(|c| c.nontrivial)
            .all(|c| 1 - self.b1 + bplus == c.bplus_twisted - c.b1_twisted)
    }

    /// The same summand with the orientation reversed: the form negates and
    /// per-class `b+` data flip to the complementary side.
    pub fn reversed(&self) -> Summand {
        Summand {
            name: self.name.clone(),
            b1: self.b1,
            form: self.form.negate(),
            spin: self.spin,
            ks: self.ks,
            h1_two_torsion: self.h1_two_torsion,
            local_classes: self
                .local_classes
                .iter()
                .map(|c| LocalClass {
                    name: c.name.clone(),
                    nontrivial: c.nontrivial,
                    b1_twisted: c.b1_twisted,
                    b2_twisted: c.b2_twisted,
                    bplus_twisted: c.b2_twisted - c.bplus_twisted,
                    sign_twisted: -c.sign_twisted,
                    w1sq_zero: c.w1sq_zero,
                    w1sq_eq_w2: c.w1sq_eq_w2,
                    torsion_lift: c.torsion_lift,
                })
                .collect(),
            provenance: self.provenance.clone(),
        }
    }
}

/// Connected sum of catalog/custom summands, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldPresentation {
    summands: Vec<Summand>,
}

/// Untwisted invariants of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UntwistedInvariants {
    pub b0: i64,
    pub b1: i64,
    pub b2: i64,
    pub bplus: i64,
    pub bminus: i64,
    pub sign: i64,
    pub chi: i64,
    pub spin: bool,
    pub ks: u8,
    pub h1_two_torsion: H1TwoTorsion,
    pub parity: Parity,
    pub definiteness: Definiteness,
}

/// Betti data of `X` with coefficients in a nontrivial `Z`-bundle `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistedInvariants {
    pub b0l: i64,
    pub b1l: i64,
    pub b2l: i64,
    pub bplusl: i64,
    pub bminusl: i64,
    pub signl: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleCoverBetti {
    pub b0t: i64,
    pub b1t: i64,
    pub b2t: i64,
}

/// `pi_0` of the identity-component gauge group: `Z/2 x Z^{b1(X;l)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugePi0 {
    pub torsion: &'static str,
    pub free_rank: i64,
}

/// A choice of `Z`-bundle per summand instance: `None` selects the trivial
/// bundle, `Some(name)` a named local class of that summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSystemChoice {
    pub selections: Vec<Option<String>>,
}

impl LocalSystemChoice {
    pub fn trivial(len: usize) -> Self {
        LocalSystemChoice {
            selections: vec![None; len],
        }
    }

    pub fn with(mut self, index: usize, class: &str) -> Self {
        self.selections[index] = Some(class.to_string());
        self
    }
}

impl ManifoldPresentation {
    pub fn new(summands: Vec<Summand>) -> Result<Self, ManifoldError> {
        if summands.is_empty() {
            return Err(ManifoldError::EmptyPresentation);
        }
        for s in &summands {
            s.validate()?;
        }
        Ok(ManifoldPresentation { summands })
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// Connected sum: summand lists concatenate; all derived invariants are
    /// additive (ks mod 2, spin by conjunction).
    pub fn connect_sum(&self, other: &ManifoldPresentation) -> ManifoldPresentation {
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        ManifoldPresentation { summands }
    }

    pub fn reversed(&self) -> ManifoldPresentation {
        ManifoldPresentation {
            summands: self.summands.iter().map(Summand::reversed).collect(),
        }
    }

    /// The untwisted intersection form, as the direct sum of summand forms.
    pub fn untwisted_form(&self) -> GramLattice {
        self.summands
            .iter()
            .fold(GramLattice::empty(), |acc, s| acc.direct_sum(&s.form))
    }

    pub fn untwisted_invariants(&self) -> UntwistedInvariants {
        let mut b1 = 0i64;
        let mut ks = 0u8;
        let mut spin = true;
        let mut h1 = H1TwoTorsion::None;
        for s in &self.summands {
            b1 += s.b1;
            ks ^= s.ks & 1;
            spin &= s.spin;
            h1 = h1.combine(s.h1_two_torsion);
        }
        let inv = self.untwisted_form().validate();
        debug_assert_eq!(inv.n_zero, 0, "summand forms are unimodular");
        let b2 = inv.rank as i64;
        let bplus = inv.n_plus as i64;
        UntwistedInvariants {
            b0: 1,
            b1,
            b2,
            bplus,
            bminus: inv.n_minus as i64,
            sign: inv.signature,
            chi: 2 - 2 * b1 + b2,
            spin,
            ks,
            h1_two_torsion: h1,
            parity: inv.parity,
            definiteness: inv.definiteness,
        }
    }

    /// Resolve a local-system choice against this presentation.
    /// Errors if lengths mismatch, a class name is unknown, or no selection
    /// is genuinely nontrivial.
    fn resolve<'a>(
        &'a self,
        c: &'a LocalSystemChoice,
    ) -> Result<Vec<Option<&'a LocalClass>>, ManifoldError> {
        if c.selections.len() != self.summands.len() {
            return Err(ManifoldError::SelectionLengthMismatch {
                expected: self.summands.len(),
                got: c.selections.len(),
            });
        }
        let mut resolved = Vec::with_capacity(self.summands.len());
        for (s, sel) in self.summands.iter().zip(&c.selections) {
            match sel {
                None => resolved.push(None),
                Some(name) => match s.class(name) {
                    Some(cl) => resolved.push(Some(cl)),
                    None => {
                        return Err(ManifoldError::UnknownLocalClass {
                            summand: s.name.clone(),
                            class: name.clone(),
                        })
                    }
                },
            }
        }
        if !resolved.iter().any(|r| r.is_some_and(|c| c.nontrivial)) {
            return Err(ManifoldError::AllTrivial);
        }
        Ok(resolved)
    }

    /// Twisted Betti data for the bundle selected by `c`. The global Euler
    /// identity is recomputed and any mismatch is a hard error.
    pub fn twisted_invariants(
        &self,
        c: &LocalSystemChoice,
    ) -> Result<TwistedInvariants, ManifoldError> {
        let resolved = self.resolve(c)?;
        let mut t = 0i64;
        let (mut b1l, mut b2l, mut bplusl, mut signl) = (0i64, 0i64, 0i64, 0i64);
        for (s, sel) in self.summands.iter().zip(&resolved) {
            match sel {
                Some(cl) => {
                    if cl.nontrivial {
                        t += 1;
                    }
                    b1l += cl.b1_twisted;
                    b2l += cl.b2_twisted;
                    bplusl += cl.bplus_twisted;
                    signl += cl.sign_twisted;
                }
                None => {
                    let inv = s.form.validate();
                    b1l += s.b1;
                    b2l += inv.rank as i64;
                    bplusl += inv.n_plus as i64;
                    signl += inv.signature;
                }
            }
        }
        b1l += t - 1;
        let u = self.untwisted_invariants();
        let lhs = 1 - u.b1 + u.bplus;
        let rhs = -b1l + bplusl;
        if lhs != rhs {
            return Err(ManifoldError::EulerIdentityViolation { lhs, rhs });
        }
        Ok(TwistedInvariants {
            b0l: 0,
            b1l,
            b2l,
            bplusl,
            bminusl: b2l - bplusl,
            signl,
        })
    }

    /// Betti numbers of the double cover associated to the bundle:
    /// `b_q(cover) = b_q(X) + b_q(X;l)`.
    pub fn double_cover_betti(
        &self,
        c: &LocalSystemChoice,
    ) -> Result<DoubleCoverBetti, ManifoldError> {
        let u = self.untwisted_invariants();
        let tw = self.twisted_invariants(c)?;
        Ok(DoubleCoverBetti {
            b0t: u.b0 + tw.b0l,
            b1t: u.b1 + tw.b1l,
            b2t: u.b2 + tw.b2l,
        })
    }

    /// Component group of the identity-component gauge group.
    pub fn gauge_pi0(&self, c: &LocalSystemChoice) -> Result<GaugePi0, ManifoldError> {
        let tw = self.twisted_invariants(c)?;
        Ok(GaugePi0 {
            torsion: "Z/2",
            free_rank: tw.b1l,
        })
    }

    /// Homotopy type of the irreducible configuration space.
    pub fn config_space_descriptor(&self, c: &LocalSystemChoice) -> Result<String, ManifoldError> {
        let tw = self.twisted_invariants(c)?;
        Ok(format!("RP^inf x T^{}", tw.b1l))
    }

    /// Existence of the extra-symmetry spin structure for the rank-2 bundle
    /// `E = R + lambda` (the only shape modeled here): the obstruction
    /// `w2(TX) = w2(E) + w1(E)^2` reduces to `w1(lambda)^2 = w2(X)`, which is
    /// a per-summand conjunction of catalog flags. With
    /// `e_trivial_plus_lambda = false` no existence certificate is available
    /// and the answer is `false`.
    pub fn spin_cminus_exists(
        &self,
        c: &LocalSystemChoice,
        e_trivial_plus_lambda: bool,
    ) -> Result<bool, ManifoldError> {
        let resolved = self.resolve(c)?;
        if !e_trivial_plus_lambda {
            return Ok(false);
        }
        Ok(self
            .summands
            .iter()
            .zip(&resolved)
            .all(|(s, sel)| match sel {
                Some(cl) if cl.nontrivial => cl.w1sq_eq_w2,
                _ => s.spin,
            }))
    }

    /// The twisted intersection form as an explicit Gram matrix. It is
    /// materialized only when every nontrivially-selected summand contributes
    /// nothing in degree 2; then the twisted form is the direct sum of the
    /// trivially-selected summand forms. Otherwise `None`: only the numeric
    /// invariants are available.
    pub fn twisted_form(
        &self,
        c: &LocalSystemChoice,
    ) -> Result<Option<GramLattice>, ManifoldError> {
        let resolved = self.resolve(c)?;
        let mut form = GramLattice::empty();
        for (s, sel) in self.summands.iter().zip(&resolved) {
            match sel {
                Some(cl) => {
                    if cl.b2_twisted != 0 {
                        return Ok(None);
                    }
                }
                None => form = form.direct_sum(&s.form),
            }
        }
        Ok(Some(form))
    }

    /// Flags of the nontrivially-selected classes, for gate hypotheses.
    pub fn nontrivial_classes<'a>(
        &'a self,
        c: &'a LocalSystemChoice,
    ) -> Result<Vec<&'a LocalClass>, ManifoldError> {
        Ok(self
            .resolve(c)?
            .into_iter()
            .flatten()
            .filter(|cl| cl.nontrivial)
            .collect())
    }
}

// ---------------------------------------------------------------------------
// Catalog

pub struct Catalog {
    summands: BTreeMap<String, Summand>,
    version: String,
}

impl Catalog {
    pub fn lookup(&self, name: &str) -> Result<&Summand, ManifoldError> {
        self.summands
            .get(name)
            .ok_or_else(|| ManifoldError::UnknownSummand(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.summands.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Summand> {
        self.summands.values()
    }

    pub fn version(&self) -> &str {
        &self.version
    }
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

/// The built-in summand catalog, loaded from the data file shipped with the
/// crate. Entries are validated and their Euler identities asserted once.
pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(|| {
        let file: CatalogFile = serde_json::from_str(include_str!("../data/catalog.json"))
            .expect("embedded catalog parses");
        let mut summands = BTreeMap::new();
        for spec in &file.summands {
            let s = spec.to_summand().expect("embedded catalog entry is valid");
            s.validate().expect("embedded catalog entry is consistent");
            assert!(
                s.euler_identity_holds(),
                "catalog entry {} violates the Euler identity",
                s.name
            );
            summands.insert(s.name.clone(), s);
        }
        Catalog {
            summands,
            version: file.catalog_version,
        }
    })
}

/// Look up a catalog summand by name, returning an owned copy.
pub fn catalog_lookup(name: &str) -> Result<Summand, ManifoldError> {
    catalog().lookup(name).cloned()
}

// ---------------------------------------------------------------------------
// Wire schema (shared by the catalog file and manifest custom summands).
// All integers are decimal strings so arbitrary-precision entries survive
// serialization losslessly.

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalClassSpec {
    pub name: String,
    pub nontrivial: bool,
    pub b1_twisted: String,
    pub b2_twisted: String,
    pub bplus_twisted: String,
    pub sign_twisted: String,
    pub w1sq_zero: bool,
    pub w1sq_eq_w2: bool,
    pub torsion_lift: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandSpec {
    pub name: String,
    pub b1: String,
    pub gram: Vec<Vec<String>>,
    pub spin: bool,
    pub ks: String,
    pub h1_two_torsion: String,
    pub local_classes: Vec<LocalClassSpec>,
    pub provenance: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    #[allow(dead_code)]
    schema_version: String,
    catalog_version: String,
    summands: Vec<SummandSpec>,
}

pub fn parse_i64(field: &str, text: &str) -> Result<i64, ManifoldError> {
    text.parse().map_err(|_| ManifoldError::BadInteger {
        field: field.to_string(),
        text: text.to_string(),
    })
}

pub fn parse_bigint(field: &str, text: &str) -> Result<BigInt, ManifoldError> {
    text.parse().map_err(|_| ManifoldError::BadInteger {
        field: field.to_string(),
        text: text.to_string(),
    })
}

impl SummandSpec {
    pub fn to_summand(&self) -> Result<Summand, ManifoldError> {
        let rows: Vec<Vec<BigInt>> = self
            .gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| parse_bigint("gram", e))
                    .collect::<Result<_, _>>()
            })
            .collect::<Result<_, _>>()?;
        let form = GramLattice::new(rows).map_err(|source| ManifoldError::BadGram {
            name: self.name.clone(),
            source,
        })?;
        let ks = parse_i64("ks", &self.ks)?;
        if !(0..=1).contains(&ks) {
            return Err(ManifoldError::InvalidSummand {
                name: self.name.clone(),
                reason: format!("ks = {ks} is not a bit"),
            });
        }
        let h1 = self
            .h1_two_torsion
            .parse()
            .map_err(|reason| ManifoldError::InvalidSummand {
                name: self.name.clone(),
                reason,
            })?;
        let local_classes = self
            .local_classes
            .iter()
            .map(|c| {
                Ok(LocalClass {
                    name: c.name.clone(),
                    nontrivial: c.nontrivial,
                    b1_twisted: parse_i64("b1_twisted", &c.b1_twisted)?,
                    b2_twisted: parse_i64("b2_twisted", &c.b2_twisted)?,
                    bplus_twisted: parse_i64("bplus_twisted", &c.bplus_twisted)?,
                    sign_twisted: parse_i64("sign_twisted", &c.sign_twisted)?,
                    w1sq_zero: c.w1sq_zero,
                    w1sq_eq_w2: c.w1sq_eq_w2,
                    torsion_lift: c.torsion_lift,
                })
            })
            .collect::<Result<_, ManifoldError>>()?;
        Ok(Summand {
            name: self.name.clone(),
            b1: parse_i64("b1", &self.b1)?,
            form,
            spin: self.spin,
            ks: ks as u8,
            h1_two_torsion: h1,
            local_classes,
            provenance: self.provenance.clone(),
        })
    }

    pub fn from_summand(s: &Summand) -> SummandSpec {
        SummandSpec {
            name: s.name.clone(),
            b1: s.b1.to_string(),
            gram: s
                .form
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|e| e.to_string()).collect())
                .collect(),
            spin: s.spin,
            ks: s.ks.to_string(),
            h1_two_torsion: s.h1_two_torsion.to_string(),
            local_classes: s
                .local_classes
                .iter()
                .map(|c| LocalClassSpec {
                    name: c.name.clone(),
                    nontrivial: c.nontrivial,
                    b1_twisted: c.b1_twisted.to_string(),
                    b2_twisted: c.b2_twisted.to_string(),
                    bplus_twisted: c.bplus_twisted.to_string(),
                    sign_twisted: c.sign_twisted.to_string(),
                    w1sq_zero: c.w1sq_zero,
                    w1sq_eq_w2: c.w1sq_eq_w2,
                    torsion_lift: c.torsion_lift,
                })
                .collect(),
            provenance: s.provenance.clone(),
        }
    }
}

/// Build a presentation from catalog names with multiplicities, e.g.
/// `[("E8", 2), ("S2xS2", 1)]`.
pub fn presentation_from_catalog(
    parts: &[(&str, usize)],
) -> Result<ManifoldPresentation, ManifoldError> {
    let mut summands = Vec::new();
    for &(name, count) in parts {
        let s = catalog_lookup(name)?;
        for _ in 0..count {
            summands.push(s.clone());
        }
    }
    ManifoldPresentation::new(summands)
}
