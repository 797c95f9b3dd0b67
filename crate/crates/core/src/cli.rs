//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 when a verification fails, 2 on bad input.

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factorseq::{conjecture_check_with, factor_sequences, shape_counts, Filling, TableauDiagram};
use crate::perm::Permutation;
use crate::poly::schubert_oracle;
use crate::quiver::{compute_p, RankConditions};
use crate::schubert::{assemble_schubert, format_expansion, normalize, quiver_coefficients, rank_conditions_of};
use crate::schur::serialize_coeff;
use crate::stanley::{reduced_word_count, reduced_words, stanley_function};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "quiver", version, about = "Quiver coefficients, Schubert polynomials and Stanley symmetric functions")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stanley symmetric function F_w in the Schur basis.
    Stanley { perm: String },
    /// Schubert polynomial of w from the quiver coefficients.
    Schubert(SchubertArgs),
    /// All coefficients c_mu(r) of a rank-conditions file ("-" for stdin).
    Quiver { file: String },
    /// Table of c_w(a, b, lambda).
    Coeffs { perm: String },
    /// Reduced words of w.
    ReducedWords {
        perm: String,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
    },
    /// Factor sequences of the canonical tableau diagram of w.
    Factorseq {
        perm: String,
        /// Compare counts with the quiver coefficients.
        #[arg(long)]
        check: bool,
        /// Fill rectangles with distinct entries instead of constant rows.
        #[arg(long)]
        sequential: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Args, Debug)]
struct SchubertArgs {
    perm: String,
    /// Keep the y-variables.
    #[arg(long)]
    double: bool,
    /// Number of x-variables, optionally followed by the number of y-variables.
    #[arg(long, value_name = "N[,M]")]
    vars: Option<String>,
    /// Compare with divided differences.
    #[arg(long)]
    check: bool,
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn perm(s: &str) -> Result<Permutation> {
    s.parse()
}

fn io_err(e: io::Error) -> Error {
    Error::Parse(e.to_string())
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json")).map_err(io_err)
}

fn coeff(c: &BigInt) -> Value {
    serialize_coeff(c, serde_json::value::Serializer).expect("json")
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Stanley { perm: p } => {
            let f = stanley_function(&perm(p)?)?;
            if json {
                emit_json(out, &serde_json::to_value(&f).expect("json"))?;
            } else {
                writeln!(out, "{f}").map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Schubert(args) => schubert(args, json, out),
        Command::Quiver { file } => {
            let text = if file == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(io_err)?;
                s
            } else {
                std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))?
            };
            let r: RankConditions = text.parse()?;
            let p = compute_p(&r)?;
            if json {
                emit_json(out, &json!({ "n": r.n(), "codim": r.expected_codim()?, "terms": &*p }))?;
            } else {
                for (key, c) in p.terms() {
                    writeln!(out, "{c}  {key}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Coeffs { perm: p } => {
            let coeffs = quiver_coefficients(&perm(p)?)?;
            if json {
                let rows: Vec<Value> = coeffs
                    .iter()
                    .map(|(idx, c)| json!({ "a": idx.a, "b": idx.b, "lambda": idx.lambda, "coeff": coeff(c) }))
                    .collect();
                emit_json(out, &Value::Array(rows))?;
            } else {
                for (idx, c) in &coeffs {
                    writeln!(out, "{idx}  {c}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ReducedWords { perm: p, list, .. } => {
            let w = perm(p)?;
            if *list {
                let words = reduced_words(&w);
                if json {
                    emit_json(out, &json!(words))?;
                } else {
                    for word in words {
                        let s: Vec<String> = word.iter().map(ToString::to_string).collect();
                        writeln!(out, "{}", s.join(" ")).map_err(io_err)?;
                    }
                }
            } else {
                let n = reduced_word_count(&w);
                if json {
                    emit_json(out, &coeff(&BigInt::from(n)))?;
                } else {
                    writeln!(out, "{n}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Factorseq { perm: p, check, sequential } => {
            let (w, _) = normalize(&perm(p)?);
            let r = rank_conditions_of(&w);
            let filling = if *sequential { Filling::Sequential } else { Filling::Canonical };
            if *check {
                let report = conjecture_check_with(&r, filling)?;
                if json {
                    emit_json(out, &json!({ "proven_regime": report.in_proven_regime, "holds": report.holds(), "report": report }))?;
                } else {
                    for (key, e) in &report.entries {
                        let mark = if e.matches { "ok" } else { "MISMATCH" };
                        writeln!(out, "{mark:8} {key}  sequences={} coefficient={}", e.factor_count, e.coefficient)
                            .map_err(io_err)?;
                    }
                    let verdict = match (report.holds(), report.in_proven_regime) {
                        (true, _) => "counts match",
                        (false, true) => "counts differ inside the proven regime",
                        (false, false) => "counts differ outside the proven regime",
                    };
                    writeln!(out, "{verdict}").map_err(io_err)?;
                }
                return Ok(if report.is_failure() { EXIT_MISMATCH } else { EXIT_OK });
            }
            let d = TableauDiagram::new(&r, filling)?;
            let counts = shape_counts(&factor_sequences(&d));
            if json {
                let rows: Vec<Value> =
                    counts.iter().map(|(k, c)| json!({ "shapes": k, "count": c })).collect();
                emit_json(out, &Value::Array(rows))?;
            } else {
                for (key, c) in &counts {
                    writeln!(out, "{c}  {key}").map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let results = run_suite(suite);
            let failed = results.iter().filter(|r| !r.passed).count();
            if json {
                emit_json(out, &json!({ "suite": suite.to_string(), "failed": failed, "results": results }))?;
            } else {
                for r in &results {
                    writeln!(out, "{r}").map_err(io_err)?;
                }
                writeln!(out, "{suite}: {} checks, {failed} failed", results.len()).map_err(io_err)?;
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn parse_vars(s: &str) -> Result<(usize, Option<usize>)> {
    let bad = || Error::Parse(format!("--vars expects N or N,M, got {s:?}"));
    let mut parts = s.split(',');
    let n = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let m = match parts.next() {
        Some(t) => Some(t.trim().parse().map_err(|_| bad())?),
        None => None,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok((n, m))
}

fn schubert(args: &SchubertArgs, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (w, m) = normalize(&perm(&args.perm)?);
    let (nx, ny) = match &args.vars {
        Some(v) => {
            let (n, mm) = parse_vars(v)?;
            (n, if args.double { mm.unwrap_or(n) } else { 0 })
        }
        None => (m + 1, if args.double { m + 1 } else { 0 }),
    };
    let coeffs = quiver_coefficients(&w)?;
    let work = nx.max(m + 1);
    let full = assemble_schubert(&w, work, work)?;
    let poly = full.with_vars(nx, ny);
    let expansion = if args.double {
        format_expansion(&coeffs)
    } else {
        let single = coeffs.iter().filter(|(idx, _)| idx.a.iter().all(|&e| e == 0)).map(|(k, c)| (k.clone(), c.clone())).collect();
        format_expansion(&single)
    };
    let check = if args.check {
        let oracle = schubert_oracle(&w, work, args.double)?;
        let oracle = if args.double { oracle } else { oracle.with_vars(work, work) };
        Some(oracle.with_vars(nx, ny) == poly)
    } else {
        None
    };
    if json {
        let mut v = json!({
            "permutation": w.to_string(),
            "expansion": expansion,
            "polynomial": poly.to_string(),
            "nx": nx,
            "ny": ny,
        });
        if let Some(ok) = check {
            v["oracle_match"] = json!(ok);
        }
        emit_json(out, &v)?;
    } else {
        writeln!(out, "{expansion}").map_err(io_err)?;
        writeln!(out, "= {poly}").map_err(io_err)?;
        if let Some(ok) = check {
            writeln!(out, "divided differences: {}", if ok { "match" } else { "MISMATCH" }).map_err(io_err)?;
        }
    }
    Ok(match check {
        Some(false) => EXIT_MISMATCH,
        _ => EXIT_OK,
    })
}
