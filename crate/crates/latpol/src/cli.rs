//! Command-line interface. Every subcommand reads JSON (files or inline
//! arguments), writes one JSON document to stdout, and exits with:
//! 0 on success, 1 when a mathematical check failed, 2 on malformed
//! input or usage errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::certificate::{principality_certificate, Certificate};
use crate::error::{Error, Result};
use crate::json::{
    bigint_to_value, lattice_from_value, lattice_to_value, lattice_vector_to_value,
    matrix_from_value, matrix_to_value, rational_vector_from_value, vector_from_value,
};
use crate::lattice::{standard_lattice, Lattice, StandardLattice};
use crate::monodromy::{
    admissible_divisors, beauville_mukai_vector, enumerate_invariant_set, h_lambda,
    InvariantClass,
};
use crate::normal_form::{hermite_normal_form, smith_normal_form};
use crate::periods::PeriodPoint;
use crate::symplectic::symplectic_normal_form;

mod selftest;

#[derive(Parser)]
#[command(
    name = "latpol",
    about = "Exact integral-lattice toolkit: normal forms, polarization types, monodromy invariants",
    disable_help_subcommand = true
)]
struct Cli {
    /// Write the JSON result to a file instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a standard lattice as {"rank": N, "gram": [[...]]}
    Lattice(LatticeArgs),
    /// Smith normal form of an integer matrix: u*m*v = s
    Snf {
        /// JSON file holding the matrix (2D array, or {"gram": [[...]]})
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Row-style Hermite normal form: u*m = h
    Hnf {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Polarization type of a nondegenerate alternating form
    Poltype {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Divisibility of a vector: gcd of its pairings with the lattice
    Div {
        /// JSON file holding the lattice ({"rank": N, "gram": [[...]]})
        #[arg(long)]
        lattice: PathBuf,
        /// Inline JSON array of coordinates
        #[arg(long)]
        vector: String,
    },
    /// Monodromy invariant of a primitive isotropic class
    Invariant {
        #[arg(long)]
        n: u64,
        /// Inline JSON array: 23 coordinates in the rank-23 lattice
        #[arg(long)]
        lambda: String,
    },
    /// All invariant classes for n (optionally restricted to one d)
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: Option<u64>,
    },
    /// Beauville-Mukai vector and fiber class for (n, d, b), verified
    Bm {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Build (or check) a principality certificate
    Certificate(CertificateArgs),
    /// Period-point membership and the integral (1,1)-lattice
    Period {
        #[arg(long)]
        lattice: PathBuf,
        /// Inline JSON array of rationals ("p/q" strings)
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Optional class to test for type (1,1)
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Seeded randomized property battery over the whole toolkit
    Selftest {
        #[arg(long, default_value = "0")]
        seed: u64,
        #[arg(long, default_value = "25")]
        trials: u32,
    },
}

#[derive(Args)]
struct LatticeArgs {
    /// One of: u, e8neg, k3, k3n, mukai, rank1
    #[arg(long)]
    name: String,
    /// Required for k3n
    #[arg(long)]
    n: Option<u64>,
    /// Required for rank1: the square of the generator
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
}

#[derive(Args)]
struct CertificateArgs {
    #[arg(long, required_unless_present = "check", conflicts_with = "check")]
    n: Option<u64>,
    #[arg(long, required_unless_present = "check", conflicts_with = "check")]
    lambda: Option<String>,
    /// Verify an existing certificate JSON file instead of building one
    #[arg(long)]
    check: Option<PathBuf>,
}

/// Entry point used by both the binary and the integration tests.
/// `args` includes the program name.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.cmd, cli.output.as_ref(), out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn dispatch(cmd: Cmd, output: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    let doc = match cmd {
        Cmd::Lattice(args) => cmd_lattice(args)?,
        Cmd::Snf { matrix } => {
            let m = read_matrix(&matrix)?;
            let snf = smith_normal_form(&m);
            json!({
                "s": matrix_to_value(&snf.s),
                "u": matrix_to_value(&snf.u),
                "v": matrix_to_value(&snf.v),
            })
        }
        Cmd::Hnf { matrix } => {
            let m = read_matrix(&matrix)?;
            let hnf = hermite_normal_form(&m);
            json!({
                "h": matrix_to_value(&hnf.h),
                "u": matrix_to_value(&hnf.u),
            })
        }
        Cmd::Poltype { matrix } => {
            let m = read_matrix(&matrix)?;
            let basis = symplectic_normal_form(&m)?;
            // The library cross-checks the multipliers against the
            // elementary divisors; reuse that path so the CLI inherits it.
            let ptype = crate::symplectic::polarization_type(&m)?;
            json!({
                "type": Value::Array(ptype.chain().iter().map(bigint_to_value).collect()),
                "transform": matrix_to_value(&basis.transform),
            })
        }
        Cmd::Div { lattice, vector } => {
            let l = read_lattice(&lattice)?;
            let coords = vector_from_value(&parse_inline(&vector)?)?;
            let v = l.vector(coords)?;
            json!({ "divisibility": bigint_to_value(&v.divisibility()?) })
        }
        Cmd::Invariant { n, lambda } => {
            check_n(n)?;
            let l = Lattice::k3n(n)?;
            let coords = vector_from_value(&parse_inline(&lambda)?)?;
            let v = l.vector(coords)?;
            let inv = h_lambda(n, &v)?;
            json!({
                "n": n,
                "d": inv.class.d.to_string(),
                "b": inv.b.to_string(),
                "b_star": inv.class.b_star.to_string(),
                "gram_h": matrix_to_value(&inv.gram_h),
                "witness_basis": Value::Array(
                    inv.witness_basis.iter().map(lattice_vector_to_value).collect()
                ),
            })
        }
        Cmd::Enumerate { n, d } => {
            check_n(n)?;
            let divisors = match d {
                Some(d) => vec![d],
                None => admissible_divisors(n)?,
            };
            let mut classes = Vec::new();
            for d in divisors {
                classes.extend(enumerate_invariant_set(n, d)?);
            }
            json!({
                "n": n,
                "classes": classes.iter().map(class_to_value).collect::<Vec<_>>(),
            })
        }
        Cmd::Bm { n, d, b } => {
            check_n(n)?;
            let w = beauville_mukai_vector(n, d, b)?;
            json!({
                "n": n,
                "d": w.d.to_string(),
                "b": w.b.to_string(),
                "s": w.s.to_string(),
                "beta": lattice_vector_to_value(&w.beta),
                "v": {
                    "r": bigint_to_value(w.v.r()),
                    "c": lattice_vector_to_value(w.v.c()),
                    "s": bigint_to_value(w.v.s()),
                },
                "alpha": {
                    "r": bigint_to_value(w.alpha.r()),
                    "c": lattice_vector_to_value(w.alpha.c()),
                    "s": bigint_to_value(w.alpha.s()),
                },
                "(v,v)": bigint_to_value(&w.vv),
                "moduli_dimension": bigint_to_value(&w.moduli_dimension),
                "div_alpha": bigint_to_value(&w.div_alpha),
                "div_check": "pass",
            })
        }
        Cmd::Certificate(args) => cmd_certificate(args)?,
        Cmd::Period {
            lattice,
            x,
            y,
            lambda,
        } => {
            let l = read_lattice(&lattice)?;
            let xr = rational_vector_from_value(&parse_inline(&x)?)?;
            let yr = rational_vector_from_value(&parse_inline(&y)?)?;
            let p = PeriodPoint::new(l.clone(), xr, yr)?;
            let is_period = p.is_period_point()?;
            let mut doc = json!({ "is_period": is_period });
            if is_period {
                let one_one = p.one_one_lattice()?;
                doc["one_one_rank"] = json!(one_one.len());
                doc["one_one_basis"] = Value::Array(
                    one_one.iter().map(lattice_vector_to_value).collect(),
                );
                if let Some(lam) = lambda {
                    let coords = vector_from_value(&parse_inline(&lam)?)?;
                    let v = l.vector(coords)?;
                    doc["lambda_in_one_one"] = json!(p.pairs_to_zero(&v)?);
                }
            }
            doc
        }
        Cmd::Selftest { seed, trials } => selftest::run(seed, trials)?,
    };
    let text = serde_json::to_string_pretty(&doc).expect("valid json");
    match output {
        Some(path) => fs::write(path, text + "\n").map_err(|e| {
            Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
        })?,
        // A consumer that closes the pipe early (e.g. `| head`) has read all
        // it wants; that is not an error on our side.
        None => match writeln!(out, "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                return Err(Error::InvalidParameter(format!("cannot write output: {e}")));
            }
            _ => {}
        },
    }
    Ok(())
}

fn cmd_lattice(args: LatticeArgs) -> Result<Value> {
    let which = match args.name.to_lowercase().as_str() {
        "u" | "hyperbolic" => StandardLattice::Hyperbolic,
        "e8neg" | "e8(-1)" | "e8" => StandardLattice::E8Negative,
        "k3" => StandardLattice::K3,
        "k3n" => {
            let n = args.n.ok_or_else(|| {
                Error::InvalidParameter("lattice k3n requires --n".into())
            })?;
            check_n(n)?;
            StandardLattice::K3n(n)
        }
        "mukai" | "extended" => StandardLattice::Extended,
        "rank1" | "rank_one" | "rank-one" => {
            let k = args.k.ok_or_else(|| {
                Error::InvalidParameter("lattice rank1 requires --k".into())
            })?;
            StandardLattice::RankOne(BigInt::from(k))
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown lattice name {other:?} (use u, e8neg, k3, k3n, mukai, rank1)"
            )))
        }
    };
    Ok(lattice_to_value(&standard_lattice(which)?))
}

fn cmd_certificate(args: CertificateArgs) -> Result<Value> {
    if let Some(path) = args.check {
        let doc = read_json(&path)?;
        let cert = Certificate::from_json(&doc)?;
        cert.verify()?;
        return Ok(json!({ "verified": true, "n": cert.n }));
    }
    let n = args.n.expect("clap enforces presence");
    check_n(n)?;
    let lambda_str = args.lambda.expect("clap enforces presence");
    let l = Lattice::k3n(n)?;
    let coords = vector_from_value(&parse_inline(&lambda_str)?)?;
    let v = l.vector(coords)?;
    let cert = principality_certificate(n, &v)?;
    Ok(cert.to_json())
}

fn class_to_value(c: &InvariantClass) -> Value {
    json!({
        "n": c.n,
        "d": c.d.to_string(),
        "b_star": c.b_star.to_string(),
    })
}

/// Guard against absurd `n` that would only exhaust memory.
fn check_n(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    if n > 1_000_000 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is out of the supported range (<= 1000000)"
        )));
    }
    Ok(())
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidParameter(format!("invalid JSON in {}: {e}", path.display())))
}

fn parse_inline(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::InvalidParameter(format!("invalid inline JSON: {e}")))
}

fn read_matrix(path: &PathBuf) -> Result<crate::matrix::IntMat> {
    matrix_from_value(&read_json(path)?)
}

fn read_lattice(path: &PathBuf) -> Result<Lattice> {
    lattice_from_value(&read_json(path)?)
}
