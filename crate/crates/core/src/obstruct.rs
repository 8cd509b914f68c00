//! Smoothability gates and certificate assembly.
//!
//! Each gate evaluates one constraint that a smooth structure would have to
//! satisfy, against the finite data of a presentation. A gate either does not
//! apply (its hypotheses fail), is satisfied, or is violated; any violated
//! applicable gate certifies that the presented manifold admits no smooth
//! structure. All comparisons are exact (cross-multiplied integers).

use crate::charvec::{
    self, brute_force_min_char_capped, characteristic_coset, elkies_is_standard_with,
    min_characteristic_norm_with, CharVecError, EnumOptions,
};
use crate::lattice::{Definiteness, GramLattice, Parity};
use crate::manifold::{LocalSystemChoice, ManifoldError, ManifoldPresentation, TwistedInvariants};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("c1^2 - sign = {value} is not divisible by 4; characteristic data inconsistent")]
    NotDivisible { value: BigInt },
    #[error("supplied vector is not characteristic for the twisted form")]
    NotCharacteristic,
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error("oracle cross-check failed: enumeration found {fast} but radius-{radius} box scan found {brute}")]
    OracleMismatch {
        fast: BigInt,
        brute: BigInt,
        radius: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    Violated,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Satisfied => write!(f, "satisfied"),
            Verdict::Violated => write!(f, "violated"),
            Verdict::NotApplicable => write!(f, "not_applicable"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GateId {
    BohrLeeLi,
    CharNormBound,
    DefiniteStandard,
    Furuta,
    Rohlin,
    StrongTenEighths,
    TenEighthsLocal,
}

impl GateId {
    pub fn as_str(self) -> &'static str {
        match self {
            GateId::BohrLeeLi => "bohr_lee_li",
            GateId::CharNormBound => "char_norm_bound",
            GateId::DefiniteStandard => "definite_standard",
            GateId::Furuta => "furuta",
            GateId::Rohlin => "rohlin",
            GateId::StrongTenEighths => "strong_ten_eighths",
            GateId::TenEighthsLocal => "ten_eighths_local",
        }
    }
}

impl fmt::Display for GateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A recorded hypothesis or intermediate value, for auditability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypValue {
    Int(BigInt),
    Bool(bool),
    Text(String),
}

impl fmt::Display for HypValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypValue::Int(v) => write!(f, "{v}"),
            HypValue::Bool(v) => write!(f, "{v}"),
            HypValue::Text(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateResult {
    pub gate_id: GateId,
    pub applicable: bool,
    pub hypothesis_values: BTreeMap<String, HypValue>,
    pub verdict: Verdict,
    pub note: String,
}

impl GateResult {
    fn not_applicable(
        gate_id: GateId,
        note: impl Into<String>,
        hyps: BTreeMap<String, HypValue>,
    ) -> Self {
        GateResult {
            gate_id,
            applicable: false,
            hypothesis_values: hyps,
            verdict: Verdict::NotApplicable,
            note: note.into(),
        }
    }

    fn decided(
        gate_id: GateId,
        violated: bool,
        note: impl Into<String>,
        hyps: BTreeMap<String, HypValue>,
    ) -> Self {
        GateResult {
            gate_id,
            applicable: true,
            hypothesis_values: hyps,
            verdict: if violated {
                Verdict::Violated
            } else {
                Verdict::Satisfied
            },
            note: note.into(),
        }
    }
}

fn hyps<const N: usize>(entries: [(&str, HypValue); N]) -> BTreeMap<String, HypValue> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn int(v: i64) -> HypValue {
    HypValue::Int(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualDimension {
    pub d: BigInt,
    pub d_prime: BigInt,
}

/// Expected dimension of the twisted monopole moduli space:
/// `d = (c1sq - sign)/4 - (b0l - b1l + b+l)`, and the fiberwise index
/// `d' = (c1sq - sign)/4`.
pub fn virtual_dimension(
    c1sq: &BigInt,
    sign: i64,
    b0l: i64,
    b1l: i64,
    bplusl: i64,
) -> Result<VirtualDimension, ObstructionError> {
    let num = c1sq - BigInt::from(sign);
    if !(&num % 4i32).is_zero() {
        return Err(ObstructionError::NotDivisible { value: num });
    }
    let quarter = num / 4i32;
    Ok(VirtualDimension {
        d: &quarter - BigInt::from(b0l - b1l + bplusl),
        d_prime: quarter,
    })
}

/// Rohlin: a smooth closed spin 4-manifold has signature divisible by 16.
/// Applies to spin presentations regardless of ks; a violation rules out any
/// smooth structure inducing the given spin presentation.
pub fn gate_rohlin(p: &ManifoldPresentation) -> GateResult {
    let u = p.untwisted_invariants();
    let mut h = hyps([("spin", HypValue::Bool(u.spin)), ("sign", int(u.sign))]);
    if !u.spin {
        return GateResult::not_applicable(GateId::Rohlin, "presentation is not spin", h);
    }
    let rem = u.sign.rem_euclid(16);
    h.insert("sign_mod_16".into(), int(rem));
    GateResult::decided(
        GateId::Rohlin,
        rem != 0,
        "smooth closed spin 4-manifolds have signature divisible by 16",
        h,
    )
}

/// The 10/8 inequality: a smooth closed spin 4-manifold with indefinite form
/// satisfies `b2 >= (5/4)|sign| + 2`.
pub fn gate_furuta(p: &ManifoldPresentation) -> GateResult {
    let u = p.untwisted_invariants();
    let h = hyps([
        ("spin", HypValue::Bool(u.spin)),
        ("b2", int(u.b2)),
        ("sign", int(u.sign)),
        (
            "definiteness",
            HypValue::Text(u.definiteness.to_string()),
        ),
    ]);
    if !u.spin {
        return GateResult::not_applicable(GateId::Furuta, "presentation is not spin", h);
    }
    if u.definiteness != Definiteness::Indefinite {
        return GateResult::not_applicable(GateId::Furuta, "form is not indefinite", h);
    }
    let violated = 4 * u.b2 < 5 * u.sign.abs() + 8;
    GateResult::decided(
        GateId::Furuta,
        violated,
        "10/8 inequality b2 >= (5/4)|sign| + 2 for smooth spin indefinite forms",
        h,
    )
}

/// Even non-spin inequality `b2 >= (5/4)|sign|`, valid when the 2-primary
/// torsion of `H_1` is cyclic or `Z/2 + Z/2` (Bohr, Lee-Li).
pub fn gate_bohr_lee_li(p: &ManifoldPresentation) -> GateResult {
    let u = p.untwisted_invariants();
    let h = hyps([
        ("spin", HypValue::Bool(u.spin)),
        ("parity", HypValue::Text(u.parity.to_string())),
        (
            "definiteness",
            HypValue::Text(u.definiteness.to_string()),
        ),
        (
            "h1_two_torsion",
            HypValue::Text(u.h1_two_torsion.to_string()),
        ),
        ("b2", int(u.b2)),
        ("sign", int(u.sign)),
    ]);
    if u.spin {
        return GateResult::not_applicable(GateId::BohrLeeLi, "presentation is spin", h);
    }
    if u.parity != Parity::Even {
        return GateResult::not_applicable(GateId::BohrLeeLi, "form is odd", h);
    }
    if u.definiteness != Definiteness::Indefinite {
        return GateResult::not_applicable(GateId::BohrLeeLi, "form is not indefinite", h);
    }
    if !u.h1_two_torsion.admits_even_nonspin_bound() {
        return GateResult::not_applicable(
            GateId::BohrLeeLi,
            "2-primary torsion of H_1 is not Z/2^k or Z/2+Z/2",
            h,
        );
    }
    let violated = 4 * u.b2 < 5 * u.sign.abs();
    GateResult::decided(
        GateId::BohrLeeLi,
        violated,
        "even non-spin inequality b2 >= (5/4)|sign|",
        h,
    )
}

/// User-pluggable refinement hook: a linear inequality
/// `den*b2 >= sign_num*|sign| + b1_num*b1 + const_num` checked for smooth
/// spin indefinite presentations. Disabled unless coefficients are supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongTenEighths {
    pub sign_num: BigInt,
    pub b1_num: BigInt,
    pub const_num: BigInt,
    pub den: BigInt,
}

pub fn gate_strong_ten_eighths(p: &ManifoldPresentation, ineq: &StrongTenEighths) -> GateResult {
    let u = p.untwisted_invariants();
    let h = hyps([
        ("spin", HypValue::Bool(u.spin)),
        ("b1", int(u.b1)),
        ("b2", int(u.b2)),
        ("sign", int(u.sign)),
    ]);
    if !u.spin || u.definiteness != Definiteness::Indefinite {
        return GateResult::not_applicable(
            GateId::StrongTenEighths,
            "requires a spin indefinite presentation",
            h,
        );
    }
    let lhs = &ineq.den * BigInt::from(u.b2);
    let rhs = &ineq.sign_num * BigInt::from(u.sign.abs())
        + &ineq.b1_num * BigInt::from(u.b1)
        + &ineq.const_num;
    GateResult::decided(
        GateId::StrongTenEighths,
        lhs < rhs,
        format!(
            "user-supplied inequality {}*b2 >= {}*|sign| + {}*b1 + {}",
            ineq.den, ineq.sign_num, ineq.b1_num, ineq.const_num
        ),
        h,
    )
}

/// Twisted 10/8 gate: when the rank-2 bundle `R + lambda` carries the extra
/// gauge symmetry (`w1(lambda)^2 = w2(X)`), a smooth structure forces
/// `b+(X;l) >= -sign(X)/8`.
pub fn gate_ten_eighths_local(
    p: &ManifoldPresentation,
    c: &LocalSystemChoice,
) -> Result<GateResult, ObstructionError> {
    let u = p.untwisted_invariants();
    let tw = p.twisted_invariants(c)?;
    let exists = p.spin_cminus_exists(c, true)?;
    let mut h = hyps([
        ("spin_cminus_exists", HypValue::Bool(exists)),
        ("bplusl", int(tw.bplusl)),
        ("sign", int(u.sign)),
    ]);
    h.insert(
        "neg_sign_over_8".into(),
        HypValue::Text(ratio_string(-u.sign, 8)),
    );
    if !exists {
        return Ok(GateResult::not_applicable(
            GateId::TenEighthsLocal,
            "no spin structure with extra symmetry: w1(lambda)^2 != w2(X)",
            h,
        ));
    }
    let violated = 8 * tw.bplusl < -u.sign;
    Ok(GateResult::decided(
        GateId::TenEighthsLocal,
        violated,
        "twisted 10/8 bound b+(X;l) >= -sign(X)/8",
        h,
    ))
}

fn ratio_string(num: i64, den: i64) -> String {
    let g = num_integer::gcd(num.abs(), den.abs()).max(1);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

/// Outcome of orienting the twisted form so its positive part vanishes.
enum Oriented {
    AsGiven(GramLattice),
    Reversed(GramLattice),
    Neither,
}

fn orient_negative(q: &GramLattice, tw: &TwistedInvariants) -> Oriented {
    if tw.bplusl == 0 {
        Oriented::AsGiven(q.clone())
    } else if tw.bminusl == 0 {
        // evaluate on the orientation reversal; |C^2|, rank and the verdict
        // are unchanged
        Oriented::Reversed(q.negate())
    } else {
        Oriented::Neither
    }
}

/// Definite standardness gate: with the twisted form definite and
/// `w1(lambda)^2` lifting to torsion, a smooth structure forces `Q_{X,l}` to
/// be the diagonal form; non-standardness (by the Elkies criterion) is a
/// certificate of nonsmoothability.
pub fn gate_definite_standard(
    p: &ManifoldPresentation,
    c: &LocalSystemChoice,
    opts: &EnumOptions,
) -> Result<GateResult, ObstructionError> {
    let mut h = BTreeMap::new();
    let Some(q) = p.twisted_form(c)? else {
        return Ok(GateResult::not_applicable(
            GateId::DefiniteStandard,
            "twisted form not materializable: a nontrivial summand has b2_twisted != 0",
            h,
        ));
    };
    let inv = q.validate();
    h.insert("rank".into(), int(inv.rank as i64));
    h.insert(
        "definiteness".into(),
        HypValue::Text(inv.definiteness.to_string()),
    );
    if !inv.definiteness.is_definite() {
        return Ok(GateResult::not_applicable(
            GateId::DefiniteStandard,
            "twisted form is not definite",
            h,
        ));
    }
    let lift_all = p.nontrivial_classes(c)?.iter().all(|cl| cl.torsion_lift);
    h.insert("torsion_lift_all".into(), HypValue::Bool(lift_all));
    if !lift_all {
        return Ok(GateResult::not_applicable(
            GateId::DefiniteStandard,
            "w1(lambda)^2 is not certified to lift to the torsion of H^2(X;l)",
            h,
        ));
    }
    match elkies_is_standard_with(&q, opts) {
        Ok((standard, res)) => {
            h.insert("min_char_norm".into(), HypValue::Int(res.min_abs_norm));
            h.insert("standard".into(), HypValue::Bool(standard));
            Ok(GateResult::decided(
                GateId::DefiniteStandard,
                !standard,
                "a smooth structure forces the definite twisted form to be diagonal (Elkies criterion)",
                h,
            ))
        }
        Err(e) => Ok(gate_error(GateId::DefiniteStandard, e, h)),
    }
}

/// Characteristic-norm gate, explicit form: with `b+(X;l) = 0`, every
/// characteristic `C` of the twisted form satisfies `|C^2| >= b2(X;l)` on a
/// smooth manifold.
pub fn gate_char_norm_bound(
    p: &ManifoldPresentation,
    c: &LocalSystemChoice,
    char_elt: &[BigInt],
    _opts: &EnumOptions,
) -> Result<GateResult, ObstructionError> {
    let tw = p.twisted_invariants(c)?;
    let mut h = hyps([("bplusl", int(tw.bplusl)), ("b2l", int(tw.b2l))]);
    let Some(q) = p.twisted_form(c)? else {
        return Ok(GateResult::not_applicable(
            GateId::CharNormBound,
            "twisted form not materializable",
            h,
        ));
    };
    let q = match orient_negative(&q, &tw) {
        Oriented::AsGiven(q) => q,
        Oriented::Reversed(q) => q,
        Oriented::Neither => {
            return Ok(GateResult::not_applicable(
                GateId::CharNormBound,
                "neither orientation has b+(X;l) = 0",
                h,
            ))
        }
    };
    let coset = characteristic_coset(&q).map_err(|_| ObstructionError::NotCharacteristic)?;
    if char_elt.len() != q.rank() || !coset.contains(char_elt) {
        return Err(ObstructionError::NotCharacteristic);
    }
    let c_sq = q.norm(char_elt);
    h.insert("abs_c_sq".into(), HypValue::Int(c_sq.abs()));
    let violated = c_sq.abs() < BigInt::from(tw.b2l);
    Ok(GateResult::decided(
        GateId::CharNormBound,
        violated,
        "characteristic bound |C^2| >= b2(X;l) when b+(X;l) = 0",
        h,
    ))
}

/// Characteristic-norm gate, aggregate form: violated iff the *minimal*
/// characteristic norm is below `b2(X;l)`.
pub fn gate_char_norm_bound_aggregate(
    p: &ManifoldPresentation,
    c: &LocalSystemChoice,
    opts: &EngineOptions,
) -> Result<GateResult, ObstructionError> {
    let tw = p.twisted_invariants(c)?;
    let mut h = hyps([
        ("bplusl", int(tw.bplusl)),
        ("bminusl", int(tw.bminusl)),
        ("b2l", int(tw.b2l)),
    ]);
    let Some(q) = p.twisted_form(c)? else {
        return Ok(GateResult::not_applicable(
            GateId::CharNormBound,
            "twisted form not materializable",
            h,
        ));
    };
    let (q, note_orient) = match orient_negative(&q, &tw) {
        Oriented::AsGiven(q) => (q, ""),
        Oriented::Reversed(q) => (q, " (orientation reversed so that b+(X;l) = 0)"),
        Oriented::Neither => {
            return Ok(GateResult::not_applicable(
                GateId::CharNormBound,
                "neither orientation has b+(X;l) = 0",
                h,
            ))
        }
    };
    match min_characteristic_norm_with(&q, &opts.enum_opts) {
        Ok(res) => {
            if let Some(radius) = opts.verify_radius {
                verify_min_against_box(&q, &res.min_abs_norm, &res.witness, radius)?;
            }
            h.insert(
                "min_char_norm".into(),
                HypValue::Int(res.min_abs_norm.clone()),
            );
            let violated = res.min_abs_norm < BigInt::from(tw.b2l);
            Ok(GateResult::decided(
                GateId::CharNormBound,
                violated,
                format!(
                    "characteristic bound min |C^2| >= b2(X;l) when b+(X;l) = 0{note_orient}"
                ),
                h,
            ))
        }
        Err(e) => Ok(gate_error(GateId::CharNormBound, e, h)),
    }
}

/// Cross-check an enumeration result against the brute-force oracle. Only
/// meaningful when the witness lies inside the box; then the box scan must
/// reproduce the minimum exactly.
fn verify_min_against_box(
    q: &GramLattice,
    min: &BigInt,
    witness: &[BigInt],
    radius: u32,
) -> Result<(), ObstructionError> {
    let inside = witness.iter().all(|w| w.abs() <= BigInt::from(radius));
    if !inside {
        return Ok(());
    }
    match brute_force_min_char_capped(q, radius, charvec::DEFAULT_BOX_CAP) {
        Ok(brute) => {
            if &brute.min_abs_norm != min {
                return Err(ObstructionError::OracleMismatch {
                    fast: min.clone(),
                    brute: brute.min_abs_norm,
                    radius,
                });
            }
            Ok(())
        }
        // an oversized box is a skipped audit, not an inconsistency
        Err(CharVecError::BoxTooLarge { .. }) => Ok(()),
        Err(_) => Ok(()),
    }
}

/// An enumeration failure reported as an unevaluated gate rather than
/// aborting the rest of the report.
fn gate_error(id: GateId, e: CharVecError, hyps: BTreeMap<String, HypValue>) -> GateResult {
    GateResult::not_applicable(id, format!("not evaluated: {e}"), hyps)
}

#[derive(Debug, Clone, Default)]
pub struct EngineOptions {
    pub enum_opts: EnumOptions,
    pub strong_ten_eighths: Option<StrongTenEighths>,
    /// When set, enumeration minima whose witness fits in the box are
    /// re-verified by brute force before being certified.
    pub verify_radius: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// `None` for untwisted gates.
    pub local_system: Option<String>,
    pub gate_id: GateId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Overall {
    NoObstructionFound,
    Nonsmoothable(Vec<Certificate>),
}

#[derive(Debug, Clone)]
pub struct ChoiceGates {
    pub name: String,
    pub twisted: TwistedInvariants,
    pub gates: Vec<GateResult>,
}

#[derive(Debug, Clone)]
pub struct ObstructionReport {
    pub untwisted_gates: Vec<GateResult>,
    pub per_choice: Vec<ChoiceGates>,
    pub overall: Overall,
}

pub struct NamedChoice {
    pub name: String,
    pub choice: LocalSystemChoice,
}

/// Evaluate every gate: the untwisted gates once, and the twisted gates for
/// each supplied local system. Gate order within each block is fixed
/// (alphabetical by id) so reports are canonical; every violated applicable
/// gate is listed as a certificate, not just the first.
pub fn run_all(
    p: &ManifoldPresentation,
    choices: &[NamedChoice],
    opts: &EngineOptions,
) -> Result<ObstructionReport, ObstructionError> {
    let mut untwisted = vec![gate_bohr_lee_li(p), gate_furuta(p), gate_rohlin(p)];
    if let Some(ineq) = &opts.strong_ten_eighths {
        untwisted.push(gate_strong_ten_eighths(p, ineq));
    }
    let mut per_choice = Vec::new();
    for nc in choices {
        let twisted = p.twisted_invariants(&nc.choice)?;
        let gates = vec![
            gate_char_norm_bound_aggregate(p, &nc.choice, opts)?,
            gate_definite_standard(p, &nc.choice, &opts.enum_opts)?,
            gate_ten_eighths_local(p, &nc.choice)?,
        ];
        per_choice.push(ChoiceGates {
            name: nc.name.clone(),
            twisted,
            gates,
        });
    }
    let mut certs = Vec::new();
    for g in &untwisted {
        if g.applicable && g.verdict == Verdict::Violated {
            certs.push(Certificate {
                local_system: None,
                gate_id: g.gate_id,
            });
        }
    }
    for cg in &per_choice {
        for g in &cg.gates {
            if g.applicable && g.verdict == Verdict::Violated {
                certs.push(Certificate {
                    local_system: Some(cg.name.clone()),
                    gate_id: g.gate_id,
                });
            }
        }
    }
    let overall = if certs.is_empty() {
        Overall::NoObstructionFound
    } else {
        Overall::Nonsmoothable(certs)
    };
    Ok(ObstructionReport {
        untwisted_gates: untwisted,
        per_choice,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::presentation_from_catalog;
    use num_traits::Zero;

    fn choice_on(p: &ManifoldPresentation, picks: &[(usize, &str)]) -> LocalSystemChoice {
        let mut c = LocalSystemChoice::trivial(p.summands().len());
        for &(i, name) in picks {
            c = c.with(i, name);
        }
        c
    }

    #[test]
    fn virtual_dimension_examples() {
        let vd = virtual_dimension(&BigInt::zero(), -16, 0, 0, 2).unwrap();
        assert_eq!(vd.d, BigInt::from(2));
        assert_eq!(vd.d_prime, BigInt::from(4));

        let vd = virtual_dimension(&BigInt::zero(), 0, 0, 0, 0).unwrap();
        assert!(vd.d.is_zero());

        let vd = virtual_dimension(&BigInt::from(-8), -8, 0, 0, 0).unwrap();
        assert!(vd.d_prime.is_zero());

        assert!(matches!(
            virtual_dimension(&BigInt::from(1), 0, 0, 0, 0),
            Err(ObstructionError::NotDivisible { .. })
        ));
    }

    #[test]
    fn rohlin_examples() {
        let p = presentation_from_catalog(&[("E8", 2)]).unwrap();
        let g = gate_rohlin(&p);
        assert_eq!(g.verdict, Verdict::Satisfied);

        let p = presentation_from_catalog(&[("E8", 1)]).unwrap();
        let g = gate_rohlin(&p);
        assert_eq!(g.verdict, Verdict::Violated);

        let p = presentation_from_catalog(&[("Sigma0", 1)]).unwrap();
        let g = gate_rohlin(&p);
        assert_eq!(g.verdict, Verdict::NotApplicable);
        assert!(!g.applicable);
    }

    #[test]
    fn furuta_examples() {
        let p = presentation_from_catalog(&[("E8", 2), ("S2xS2", 3)]).unwrap();
        assert_eq!(gate_furuta(&p).verdict, Verdict::Satisfied); // 22 >= 22

        let p = presentation_from_catalog(&[("E8", 2), ("S2xS2", 2)]).unwrap();
        assert_eq!(gate_furuta(&p).verdict, Verdict::Violated); // 20 < 22

        let p = presentation_from_catalog(&[("E8", 2)]).unwrap();
        assert_eq!(gate_furuta(&p).verdict, Verdict::NotApplicable); // definite
    }

    #[test]
    fn bohr_lee_li_examples() {
        // 3|E8| # 1(S2xS2) # Sigma0 # 2(T2xS2): even non-spin, h1 torsion Z2,
        // 4*b2 = 120 = 5*|sign|
        let p = presentation_from_catalog(&[
            ("E8", 3),
            ("S2xS2", 1),
            ("Sigma0", 1),
            ("T2xS2", 2),
        ])
        .unwrap();
        assert_eq!(gate_bohr_lee_li(&p).verdict, Verdict::Satisfied);

        let spin = presentation_from_catalog(&[("E8", 2), ("S2xS2", 3)]).unwrap();
        assert_eq!(gate_bohr_lee_li(&spin).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn ten_eighths_local_examples() {
        // 2|E8| # 1(S2xS2) # 1(T2xS2), l on the torus: b+l = 1 < 2
        let p = presentation_from_catalog(&[("E8", 2), ("S2xS2", 1), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(3, "loop")]);
        let g = gate_ten_eighths_local(&p, &c).unwrap();
        assert_eq!(g.verdict, Verdict::Violated);
        assert_eq!(g.hypothesis_values["bplusl"], HypValue::Int(BigInt::from(1)));
        assert_eq!(
            g.hypothesis_values["neg_sign_over_8"],
            HypValue::Text("2".into())
        );

        // 3|E8| # 1(S2xS2) # Sigma1, l = alpha: b+l = 2 < 3
        let p = presentation_from_catalog(&[("E8", 3), ("S2xS2", 1), ("Sigma1", 1)]).unwrap();
        let c = choice_on(&p, &[(4, "alpha")]);
        let g = gate_ten_eighths_local(&p, &c).unwrap();
        assert_eq!(g.verdict, Verdict::Violated);

        // 1|E8| # 2(S2xS2) # 1(T2xS2): b+l = 2 >= 1
        let p = presentation_from_catalog(&[("E8", 1), ("S2xS2", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(3, "loop")]);
        let g = gate_ten_eighths_local(&p, &c).unwrap();
        assert_eq!(g.verdict, Verdict::Satisfied);
    }

    #[test]
    fn definite_standard_examples() {
        let opts = EnumOptions::default();
        // Q_V = 2(-E8): twisted form materializes to a non-standard definite form
        let p = presentation_from_catalog(&[("E8", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(2, "loop")]);
        let g = gate_definite_standard(&p, &c, &opts).unwrap();
        assert_eq!(g.verdict, Verdict::Violated);

        // indefinite twisted form: not applicable
        let p = presentation_from_catalog(&[("E8", 2), ("S2xS2", 1), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(3, "loop")]);
        let g = gate_definite_standard(&p, &c, &opts).unwrap();
        assert_eq!(g.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn char_norm_bound_examples() {
        let opts = EngineOptions::default();
        // Q = diag(-1)^n via a custom-free route: torus-only sums have rank-0
        // twisted forms, so use E8 blocks for the violated case
        let p = presentation_from_catalog(&[("E8", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(2, "loop")]);
        let g = gate_char_norm_bound_aggregate(&p, &c, &opts).unwrap();
        assert_eq!(g.verdict, Verdict::Violated); // min 0 < 16

        // explicit characteristic element C = 0 on 2(-E8)
        let q_rank = 16;
        let zero = vec![BigInt::zero(); q_rank];
        let g = gate_char_norm_bound(&p, &c, &zero, &opts.enum_opts).unwrap();
        assert_eq!(g.verdict, Verdict::Violated);

        // b+l != 0 on both orientations: not applicable
        let p = presentation_from_catalog(&[("E8", 2), ("S2xS2", 1), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(3, "loop")]);
        let g = gate_char_norm_bound_aggregate(&p, &c, &opts).unwrap();
        assert_eq!(g.verdict, Verdict::NotApplicable);

        // non-characteristic C is rejected
        let p = presentation_from_catalog(&[("E8", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(2, "loop")]);
        let mut bad = vec![BigInt::zero(); 16];
        bad[0] = BigInt::from(1);
        assert!(matches!(
            gate_char_norm_bound(&p, &c, &bad, &EnumOptions::default()),
            Err(ObstructionError::NotCharacteristic)
        ));
    }

    #[test]
    fn orientation_covariance() {
        let opts = EngineOptions::default();
        let p = presentation_from_catalog(&[("E8", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(2, "loop")]);
        let rev = p.reversed();
        let g1 = gate_definite_standard(&p, &c, &opts.enum_opts).unwrap();
        let g2 = gate_definite_standard(&rev, &c, &opts.enum_opts).unwrap();
        assert_eq!(g1.verdict, g2.verdict);
        let g1 = gate_char_norm_bound_aggregate(&p, &c, &opts).unwrap();
        let g2 = gate_char_norm_bound_aggregate(&rev, &c, &opts).unwrap();
        assert_eq!(g1.verdict, g2.verdict);
        assert_eq!(g1.verdict, Verdict::Violated);
    }

    #[test]
    fn run_all_theorem_examples() {
        let opts = EngineOptions::default();

        // spin example clearing Rohlin and the 10/8 bound but violating the
        // twisted one: 2|E8| # 3(T2xS2), l on each torus
        let p = presentation_from_catalog(&[("E8", 2), ("T2xS2", 3)]).unwrap();
        let c = choice_on(&p, &[(2, "loop"), (3, "loop"), (4, "loop")]);
        let report = run_all(
            &p,
            &[NamedChoice {
                name: "l".into(),
                choice: c,
            }],
            &opts,
        )
        .unwrap();
        let rohlin = report
            .untwisted_gates
            .iter()
            .find(|g| g.gate_id == GateId::Rohlin)
            .unwrap();
        assert_eq!(rohlin.verdict, Verdict::Satisfied);
        let furuta = report
            .untwisted_gates
            .iter()
            .find(|g| g.gate_id == GateId::Furuta)
            .unwrap();
        assert_eq!(furuta.verdict, Verdict::Satisfied); // 22 >= 22
        let ten8 = report.per_choice[0]
            .gates
            .iter()
            .find(|g| g.gate_id == GateId::TenEighthsLocal)
            .unwrap();
        assert_eq!(ten8.verdict, Verdict::Violated);
        assert!(matches!(report.overall, Overall::Nonsmoothable(_)));

        // standard definite sum with a torus: nothing fires
        let mut summands = vec![crate::manifold::Summand {
            name: "P16".into(),
            b1: 0,
            form: GramLattice::diagonal(&[-1; 8]),
            spin: false,
            ks: 0,
            h1_two_torsion: crate::manifold::H1TwoTorsion::None,
            local_classes: vec![],
            provenance: "test".into(),
        }];
        summands.push(crate::manifold::catalog_lookup("T4").unwrap());
        let p = ManifoldPresentation::new(summands).unwrap();
        let c = choice_on(&p, &[(1, "loop")]);
        let report = run_all(
            &p,
            &[NamedChoice {
                name: "l".into(),
                choice: c,
            }],
            &opts,
        )
        .unwrap();
        assert_eq!(report.overall, Overall::NoObstructionFound);

        // non-spin even example: 3|E8| # 1(S2xS2) # Sigma0 # 2(T2xS2)
        let p = presentation_from_catalog(&[
            ("E8", 3),
            ("S2xS2", 1),
            ("Sigma0", 1),
            ("T2xS2", 2),
        ])
        .unwrap();
        let c = choice_on(&p, &[(4, "alpha"), (5, "loop"), (6, "loop")]);
        let report = run_all(
            &p,
            &[NamedChoice {
                name: "l".into(),
                choice: c,
            }],
            &opts,
        )
        .unwrap();
        let bll = report
            .untwisted_gates
            .iter()
            .find(|g| g.gate_id == GateId::BohrLeeLi)
            .unwrap();
        assert_eq!(bll.verdict, Verdict::Satisfied);
        let ten8 = report.per_choice[0]
            .gates
            .iter()
            .find(|g| g.gate_id == GateId::TenEighthsLocal)
            .unwrap();
        assert_eq!(ten8.verdict, Verdict::Violated); // b+l = 2 < 3
        assert!(matches!(report.overall, Overall::Nonsmoothable(_)));
    }

    #[test]
    fn aggregation_soundness() {
        // overall is nonsmoothable iff some applicable gate is violated
        let opts = EngineOptions::default();
        let p = presentation_from_catalog(&[("E8", 1), ("S2xS2", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(3, "loop")]);
        let report = run_all(
            &p,
            &[NamedChoice {
                name: "l".into(),
                choice: c,
            }],
            &opts,
        )
        .unwrap();
        let any_violated = report
            .untwisted_gates
            .iter()
            .chain(report.per_choice.iter().flat_map(|cg| cg.gates.iter()))
            .any(|g| g.applicable && g.verdict == Verdict::Violated);
        // Rohlin fires here: sign = -8
        assert!(any_violated);
        assert!(matches!(report.overall, Overall::Nonsmoothable(_)));
    }

    #[test]
    fn rank_cap_becomes_gate_note() {
        let opts = EngineOptions {
            enum_opts: EnumOptions { rank_cap: 4 },
            ..Default::default()
        };
        let p = presentation_from_catalog(&[("E8", 2), ("T2xS2", 1)]).unwrap();
        let c = choice_on(&p, &[(2, "loop")]);
        let g = gate_char_norm_bound_aggregate(&p, &c, &opts).unwrap();
        assert_eq!(g.verdict, Verdict::NotApplicable);
        assert!(g.note.contains("not evaluated"));
    }
}
