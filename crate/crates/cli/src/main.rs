//! `formgate`: smoothability-obstruction certificates for presented
//! 4-manifolds, plus the exact lattice and character calculators behind
//! them.
//!
//! Exit codes: 0 success, 2 invalid input, 3 data inconsistency (a manifest
//! whose catalog/custom data fail the internal cross-identities).

mod manifest;
mod report;

use clap::{Parser, Subcommand};
use formgate_core::charvec;
use formgate_core::manifold::{self, ManifoldError};
use formgate_core::repring;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
enum CliErrorKind {
    /// Unreadable/unparseable/invalid input: exit 2.
    Invalid,
    /// Internal consistency failure (inconsistent summand data): exit 3.
    Inconsistent,
}

#[derive(Debug)]
pub struct CliError {
    kind: CliErrorKind,
    message: String,
}

impl CliError {
    fn invalid(message: String) -> Self {
        CliError {
            kind: CliErrorKind::Invalid,
            message,
        }
    }

    fn inconsistent(message: String) -> Self {
        CliError {
            kind: CliErrorKind::Inconsistent,
            message,
        }
    }

    fn from_manifold(e: ManifoldError) -> Self {
        match e {
            ManifoldError::EulerIdentityViolation { .. } => CliError::inconsistent(e.to_string()),
            other => CliError::invalid(other.to_string()),
        }
    }

    fn exit_code(&self) -> ExitCode {
        match self.kind {
            CliErrorKind::Invalid => ExitCode::from(2),
            CliErrorKind::Inconsistent => ExitCode::from(3),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "formgate",
    version,
    about = "Exact smoothability obstructions for presented 4-manifolds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a Gram matrix and print its exact invariants.
    Lattice {
        /// JSON file: {"gram": [["0","1"],["1","0"]]}
        gram: PathBuf,
    },
    /// Minimize |w^2| over the characteristic vectors of a definite
    /// unimodular form.
    Charvec {
        gram: PathBuf,
        /// Cross-check the result against an exhaustive box scan.
        #[arg(long)]
        oracle: bool,
        /// Box radius for --oracle.
        #[arg(long, default_value_t = 4)]
        radius: u32,
        /// Enumeration rank cap (also via FORMGATE_RANK_CAP).
        #[arg(long)]
        rank_cap: Option<usize>,
    },
    /// Evaluate every smoothability gate against a manifest and emit the
    /// certificate report.
    Obstruct {
        manifest: PathBuf,
        /// Emit the canonical machine-readable report.
        #[arg(long)]
        json: bool,
        /// Enumeration rank cap override.
        #[arg(long)]
        rank_cap: Option<usize>,
    },
    /// Evaluate equivariant K-theory degree traces in R(Z/2) or R(Z/4).
    Dieck {
        /// Cyclic group: z2 or z4.
        #[arg(long, default_value = "z4")]
        group: String,
        /// Fixed-point degree d(f^g).
        #[arg(long)]
        dg: Option<i64>,
        /// Numerator lines, e.g. "c2^3" or "c1,c-1" (ctilde = c_{N/2}).
        #[arg(long)]
        plus: Option<String>,
        /// Denominator lines, same syntax.
        #[arg(long)]
        minus: Option<String>,
        /// Evaluate the trace at g^j.
        #[arg(long)]
        at: Option<usize>,
        /// Shorthand: trace 2^(b-k) of the twisted 10/8 bound.
        #[arg(long)]
        b: Option<u32>,
        /// Shorthand companion exponent k = -sign/8.
        #[arg(long)]
        k: Option<u32>,
    },
    /// List the built-in summand catalog with provenance notes.
    Catalog,
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))
}

fn cmd_lattice(gram: &PathBuf) -> Result<(), CliError> {
    let l = manifest::GramFile::parse(&read_file(gram)?)?;
    let inv = l.validate();
    println!("rank          {}", inv.rank);
    println!("signature     {}", inv.signature);
    println!("parity        {}", inv.parity);
    println!("definiteness  {}", inv.definiteness);
    println!("determinant   {}", inv.determinant);
    println!("unimodular    {}", inv.is_unimodular());
    Ok(())
}

fn cmd_charvec(
    gram: &PathBuf,
    oracle: bool,
    radius: u32,
    rank_cap: Option<usize>,
) -> Result<(), CliError> {
    let l = manifest::GramFile::parse(&read_file(gram)?)?;
    let opts = manifest::enum_options(rank_cap)?;
    let res = charvec::min_characteristic_norm_with(&l, &opts)
        .map_err(|e| CliError::invalid(e.to_string()))?;
    println!("rank          {}", l.rank());
    println!("min |w^2|     {}", res.min_abs_norm);
    println!(
        "witness       [{}]",
        res.witness
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("nodes         {}", res.node_count);
    let standard = res.min_abs_norm >= l.rank().into();
    println!("standard      {standard}");
    if oracle {
        if radius == 0 {
            return Err(CliError::invalid("--radius must be at least 1".to_string()));
        }
        let brute = charvec::brute_force_min_char(&l, radius)
            .map_err(|e| CliError::invalid(e.to_string()))?;
        if brute.min_abs_norm != res.min_abs_norm {
            return Err(CliError::inconsistent(format!(
                "oracle mismatch: enumeration found {} but radius-{radius} box scan found {}",
                res.min_abs_norm, brute.min_abs_norm
            )));
        }
        println!("oracle        agrees (radius {radius}, {} points)", brute.node_count);
    }
    Ok(())
}

fn cmd_obstruct(path: &PathBuf, json: bool, rank_cap: Option<usize>) -> Result<(), CliError> {
    let doc = manifest::ManifestDoc::parse(&read_file(path)?)?;
    let loaded = doc.load(rank_cap)?;
    let full = report::build(&loaded)?;
    if json {
        println!("{}", full.json);
    } else {
        print!("{}", full.human);
    }
    Ok(())
}

/// Parse a line spec such as "c2^3,c1,c-1" or "ctilde" into
/// (index, multiplicity) pairs.
fn parse_lines(modulus: usize, spec: &str) -> Result<Vec<(isize, u32)>, CliError> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, mult) = match part.split_once('^') {
            Some((n, m)) => (
                n,
                m.parse::<u32>()
                    .map_err(|_| CliError::invalid(format!("bad multiplicity in {part:?}")))?,
            ),
            None => (part, 1),
        };
        let index: isize = if name == "ctilde" {
            (modulus / 2) as isize
        } else if let Some(k) = name.strip_prefix('c') {
            k.parse()
                .map_err(|_| CliError::invalid(format!("bad line {part:?} (use c<k> or ctilde)")))?
        } else {
            return Err(CliError::invalid(format!(
                "bad line {part:?} (use c<k> or ctilde)"
            )));
        };
        out.push((index, mult));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_dieck(
    group: &str,
    dg: Option<i64>,
    plus: Option<String>,
    minus: Option<String>,
    at: Option<usize>,
    b: Option<u32>,
    k: Option<u32>,
) -> Result<(), CliError> {
    if let (Some(b), Some(k)) = (b, k) {
        let r = repring::ten_eighths_bound(b, k);
        println!("trace             {}", r.trace);
        println!("integral          {}", r.integral);
        println!("inequality_holds  {}", r.inequality_holds);
        return Ok(());
    }
    if b.is_some() || k.is_some() {
        return Err(CliError::invalid(
            "--b and --k must be given together".to_string(),
        ));
    }
    let modulus = match group {
        "z2" => 2,
        "z4" => 4,
        other => {
            return Err(CliError::invalid(format!(
                "unknown group {other:?} (use z2 or z4)"
            )))
        }
    };
    let j = at.ok_or_else(|| CliError::invalid("--at <j> is required".to_string()))?;
    if j >= modulus {
        return Err(CliError::invalid(format!(
            "--at {j} out of range for Z/{modulus}"
        )));
    }
    let plus = parse_lines(modulus, plus.as_deref().unwrap_or(""))?;
    let minus = parse_lines(modulus, minus.as_deref().unwrap_or(""))?;
    let trace = repring::tom_dieck_trace(dg.unwrap_or(1), modulus, &plus, &minus, j)
        .map_err(|e| CliError::invalid(e.to_string()))?;
    println!("trace  {trace}");
    Ok(())
}

fn cmd_catalog() -> Result<(), CliError> {
    let cat = manifold::catalog();
    println!("catalog version {}", cat.version());
    for s in cat.entries() {
        let inv = s.form.validate();
        println!("\n{}", s.name);
        println!(
            "  b1={} b2={} sign={} parity={} spin={} ks={} h1_2tors={}",
            s.b1,
            inv.rank,
            inv.signature,
            inv.parity,
            s.spin,
            s.ks,
            s.h1_two_torsion
        );
        for c in &s.local_classes {
            println!(
                "  class {}: b1l={} b2l={} b+l={} signl={} w1sq_zero={} w1sq_eq_w2={} torsion_lift={}",
                c.name,
                c.b1_twisted,
                c.b2_twisted,
                c.bplus_twisted,
                c.sign_twisted,
                c.w1sq_zero,
                c.w1sq_eq_w2,
                c.torsion_lift
            );
        }
        println!("  note: {}", s.provenance);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Lattice { gram } => cmd_lattice(gram),
        Cmd::Charvec {
            gram,
            oracle,
            radius,
            rank_cap,
        } => cmd_charvec(gram, *oracle, *radius, *rank_cap),
        Cmd::Obstruct {
            manifest,
            json,
            rank_cap,
        } => cmd_obstruct(manifest, *json, *rank_cap),
        Cmd::Dieck {
            group,
            dg,
            plus,
            minus,
            at,
            b,
            k,
        } => cmd_dieck(group, *dg, plus.clone(), minus.clone(), *at, *b, *k),
        Cmd::Catalog => cmd_catalog(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.exit_code()
        }
    }
}
