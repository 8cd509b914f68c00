//! Report assembly: one JSON tree, canonically serialized (sorted keys,
//! compact separators, integers as decimal strings), plus a human rendering
//! of the same data. The `input` field is the canonical manifest echo, so a
//! report can be reproduced byte-for-byte from itself.

use formgate_core::manifold::{TwistedInvariants, UntwistedInvariants};
use formgate_core::obstruct::{
    run_all, virtual_dimension, GateResult, HypValue, ObstructionError, Overall, Verdict,
};
use serde_json::{json, Map, Value};

use crate::manifest::LoadedManifest;
use crate::CliError;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn untwisted_json(u: &UntwistedInvariants) -> Value {
    json!({
        "b0": s(u.b0),
        "b1": s(u.b1),
        "b2": s(u.b2),
        "bplus": s(u.bplus),
        "bminus": s(u.bminus),
        "sign": s(u.sign),
        "chi": s(u.chi),
        "spin": u.spin,
        "ks": s(u.ks),
        "h1_two_torsion": s(u.h1_two_torsion),
        "parity": s(u.parity),
        "definiteness": s(u.definiteness),
    })
}

fn twisted_json(t: &TwistedInvariants) -> Value {
    json!({
        "b0l": s(t.b0l),
        "b1l": s(t.b1l),
        "b2l": s(t.b2l),
        "bplusl": s(t.bplusl),
        "bminusl": s(t.bminusl),
        "signl": s(t.signl),
    })
}

fn hyp_json(v: &HypValue) -> Value {
    match v {
        HypValue::Int(x) => s(x),
        HypValue::Bool(b) => Value::Bool(*b),
        HypValue::Text(t) => Value::String(t.clone()),
    }
}

fn gate_json(g: &GateResult) -> Value {
    let mut hyp = Map::new();
    for (k, v) in &g.hypothesis_values {
        hyp.insert(k.clone(), hyp_json(v));
    }
    json!({
        "gate": g.gate_id.as_str(),
        "applicable": g.applicable,
        "verdict": s(g.verdict),
        "hypothesis": Value::Object(hyp),
        "note": g.note,
    })
}

pub struct FullReport {
    pub json: Value,
    pub human: String,
}

/// Evaluate everything the report carries and assemble both renderings.
pub fn build(loaded: &LoadedManifest) -> Result<FullReport, CliError> {
    let p = &loaded.presentation;
    let u = p.untwisted_invariants();
    let report = run_all(p, &loaded.choices, &loaded.engine).map_err(CliError::from_engine)?;

    let mut systems = Vec::new();
    let mut human = String::new();
    human.push_str(&format!("formgate {TOOL_VERSION}\n"));
    human.push_str(&format!(
        "presentation: {}\n",
        p.summands()
            .iter()
            .map(|s| s.name.as_str())
            .collect::<Vec<_>>()
            .join(" # ")
    ));
    human.push_str(&format!(
        "untwisted: b1={} b2={} b+={} b-={} sign={} chi={} spin={} ks={} parity={} h1_2tors={}\n",
        u.b1, u.b2, u.bplus, u.bminus, u.sign, u.chi, u.spin, u.ks, u.parity, u.h1_two_torsion
    ));
    for g in &report.untwisted_gates {
        human.push_str(&render_gate(g));
    }

    for (idx, cg) in report.per_choice.iter().enumerate() {
        let tw = cg.twisted;
        let gauge = p
            .gauge_pi0(&loaded.choices[idx].choice)
            .map_err(CliError::from_manifold)?;
        let config = p
            .config_space_descriptor(&loaded.choices[idx].choice)
            .map_err(CliError::from_manifold)?;
        let cover = p
            .double_cover_betti(&loaded.choices[idx].choice)
            .map_err(CliError::from_manifold)?;
        let c1sq = &loaded.c1sq[idx];
        let vdim = virtual_dimension(c1sq, u.sign, tw.b0l, tw.b1l, tw.bplusl);
        let vdim_json = match &vdim {
            Ok(vd) => json!({
                "c1sq": s(c1sq),
                "d": s(&vd.d),
                "d_prime": s(&vd.d_prime),
            }),
            Err(e) => json!({
                "c1sq": s(c1sq),
                "error": e.to_string(),
            }),
        };

        human.push_str(&format!("local system \"{}\":\n", cg.name));
        human.push_str(&format!(
            "  twisted: b0l={} b1l={} b2l={} b+l={} b-l={} signl={}\n",
            tw.b0l, tw.b1l, tw.b2l, tw.bplusl, tw.bminusl, tw.signl
        ));
        human.push_str(&format!(
            "  double cover: b0={} b1={} b2={}\n",
            cover.b0t, cover.b1t, cover.b2t
        ));
        human.push_str(&format!(
            "  gauge pi0: {} x Z^{}\n",
            gauge.torsion, gauge.free_rank
        ));
        human.push_str(&format!("  configuration space: {config}\n"));
        match &vdim {
            Ok(vd) => human.push_str(&format!(
                "  virtual dimension: d={} d'={} (c1sq={})\n",
                vd.d, vd.d_prime, c1sq
            )),
            Err(e) => human.push_str(&format!("  virtual dimension: {e}\n")),
        }
        for g in &cg.gates {
            human.push_str(&format!("  {}", render_gate(g)));
        }

        systems.push(json!({
            "name": cg.name,
            "twisted": twisted_json(&tw),
            "double_cover": json!({
                "b0t": s(cover.b0t),
                "b1t": s(cover.b1t),
                "b2t": s(cover.b2t),
            }),
            "gauge_pi0": json!({
                "torsion": gauge.torsion,
                "free_rank": s(gauge.free_rank),
            }),
            "config_space": config,
            "virtual_dimension": vdim_json,
            "gates": cg.gates.iter().map(gate_json).collect::<Vec<_>>(),
        }));
    }

    let overall_json = match &report.overall {
        Overall::NoObstructionFound => json!({"verdict": "no_obstruction_found"}),
        Overall::Nonsmoothable(certs) => json!({
            "verdict": "nonsmoothable",
            "certificates": certs.iter().map(|c| json!({
                "local_system": c.local_system.clone().map(Value::String).unwrap_or(Value::Null),
                "gate": c.gate_id.as_str(),
            })).collect::<Vec<_>>(),
        }),
    };
    match &report.overall {
        Overall::NoObstructionFound => human.push_str("overall: no obstruction found\n"),
        Overall::Nonsmoothable(certs) => {
            let list = certs
                .iter()
                .map(|c| match &c.local_system {
                    Some(name) => format!("{}/{}", name, c.gate_id),
                    None => c.gate_id.to_string(),
                })
                .collect::<Vec<_>>()
                .join(", ");
            human.push_str(&format!("overall: NONSMOOTHABLE (certificates: {list})\n"));
        }
    }

    let input_echo: Value =
        serde_json::to_value(&loaded.doc).expect("manifest echo serializes");
    let json = json!({
        "formgate_version": TOOL_VERSION,
        "input": input_echo,
        "untwisted": untwisted_json(&u),
        "local_systems": systems,
        "untwisted_gates": report.untwisted_gates.iter().map(gate_json).collect::<Vec<_>>(),
        "overall": overall_json,
    });

    Ok(FullReport { json, human })
}

fn render_gate(g: &GateResult) -> String {
    let verdict = match g.verdict {
        Verdict::Violated => "VIOLATED".to_string(),
        v => v.to_string(),
    };
    let hyp = g
        .hypothesis_values
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    if hyp.is_empty() {
        format!("[gate] {}: {} - {}\n", g.gate_id, verdict, g.note)
    } else {
        format!("[gate] {}: {} ({}) - {}\n", g.gate_id, verdict, hyp, g.note)
    }
}

impl CliError {
    pub(crate) fn from_engine(e: ObstructionError) -> CliError {
        match e {
            ObstructionError::Manifold(m) => CliError::from_manifold(m),
            ObstructionError::OracleMismatch { .. } => CliError::inconsistent(e.to_string()),
            other => CliError::invalid(other.to_string()),
        }
    }
}
