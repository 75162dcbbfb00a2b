//! The `brace-dend` command line. [`run`] does all the work and returns the
//! buffered output, so the binary only prints it.

use std::collections::BTreeSet;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bialgebra::{self, format_tensor};
use crate::dendriform::parse_expr_tilde;
use crate::envelope::{build_envelope, envelope_primitives, validate_brace, BraceStructure};
use crate::exactlin::format_sum;
use crate::operads::{compose_ape, compose_prelie, PlanarOp, PreLieOp};
use crate::trees::{parse_planar, parse_rooted, pbts, Alphabet};
use crate::verify::{default_bound, verify_suite};
use crate::Error;

#[derive(Parser, Debug)]
#[command(
    name = "brace-dend",
    version,
    about = "Exact computations with brace and dendriform algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OperadSpecies {
    /// Planar rooted trees (brace operad).
    Ape,
    /// Non-planar rooted trees (pre-Lie operad).
    Prelie,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partial composition `outer ∘_at inner`.
    Compose {
        #[arg(long, value_enum)]
        species: OperadSpecies,
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        at: String,
    },
    /// Normal form of a dendriform expression.
    Eval {
        #[arg(long)]
        expr: String,
        /// Number of generators a, b, … (default 26).
        #[arg(long)]
        gens: Option<usize>,
    },
    /// Loday–Ronco coproduct of a dendriform expression.
    Coproduct {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        gens: Option<usize>,
    },
    /// Echelon basis of the primitives in one degree.
    Primitives {
        #[arg(long, default_value_t = 1)]
        gens: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Tree counts and primitive dimensions per degree.
    Dims {
        #[arg(long, default_value_t = 1)]
        gens: usize,
        #[arg(long, default_value_t = 5)]
        upto: usize,
    },
    /// Runs a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Truncated enveloping algebra of a brace algebra read from JSON.
    Envelope {
        #[arg(long)]
        brace: String,
        #[arg(long, default_value_t = 4)]
        upto: usize,
        #[arg(long, default_value_t = 1)]
        slack: usize,
    },
}

/// Exit status and buffered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A finished command: plain lines, the JSON result, and any defects.
struct Report {
    command: &'static str,
    lines: Vec<String>,
    result: Value,
    defects: Vec<String>,
}

impl Report {
    fn new(command: &'static str, lines: Vec<String>, result: Value) -> Self {
        Report {
            command,
            lines,
            result,
            defects: Vec::new(),
        }
    }
}

/// Runs one command; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("brace-dend".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => render(report, cli.output),
        Err(msg) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn render(r: Report, format: Format) -> Outcome {
    let code = if r.defects.is_empty() { 0 } else { 1 };
    let stdout = match format {
        Format::Text => {
            let mut out = String::new();
            for l in r.lines.iter().chain(&r.defects) {
                out.push_str(l);
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let v = json!({"command": r.command, "result": r.result, "defects": r.defects});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

/// Error text, with a caret under the offending position of `input`.
fn located(e: Error, input: &str) -> String {
    match e {
        Error::Parse { pos, ref msg } => {
            format!("{msg} at position {pos}\n  {input}\n  {}^", " ".repeat(pos))
        }
        other => other.to_string(),
    }
}

fn dispatch(cmd: &Command) -> Result<Report, String> {
    match cmd {
        Command::Compose {
            species,
            outer,
            inner,
            at,
        } => compose(*species, outer, inner, at),
        Command::Eval { expr, gens } => {
            let al = Alphabet::letters(gens.unwrap_or(26));
            let e = parse_expr_tilde(expr, &al).map_err(|e| located(e, expr))?;
            let sum = format_sum(&e, |t| t.to_expr(&al));
            let bracket = format_sum(&e, |t| t.to_bracket(&al));
            Ok(Report::new(
                "eval",
                vec![sum.clone()],
                json!({"expr": sum, "bracket": bracket, "terms": e.len()}),
            ))
        }
        Command::Coproduct { expr, gens } => {
            let al = Alphabet::letters(gens.unwrap_or(26));
            let e = parse_expr_tilde(expr, &al).map_err(|e| located(e, expr))?;
            let d = bialgebra::coproduct(&e);
            let text = format_tensor(&d, &al, true);
            Ok(Report::new(
                "coproduct",
                vec![text.clone()],
                json!({"coproduct": text, "terms": d.len()}),
            ))
        }
        Command::Primitives { gens, degree } => {
            let al = Alphabet::letters(*gens);
            let basis = bialgebra::primitives(*degree, *gens).map_err(|e| e.to_string())?;
            let lines: Vec<String> = basis.iter().map(|p| format_sum(p, |t| t.to_expr(&al))).collect();
            Ok(Report::new(
                "primitives",
                lines.clone(),
                json!({"degree": degree, "gens": gens, "dim": basis.len(), "basis": lines}),
            ))
        }
        Command::Dims { gens, upto } => {
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for n in 1..=*upto {
                let trees = pbts(n, *gens).len();
                let prims = bialgebra::primitives(n, *gens).map_err(|e| e.to_string())?.len();
                lines.push(format!("{n}: trees {trees}, primitives {prims}"));
                rows.push(json!({"degree": n, "trees": trees, "primitives": prims}));
            }
            Ok(Report::new("dims", lines, json!({"gens": gens, "degrees": rows})))
        }
        Command::Verify { suite, bound } => {
            let bound = match bound {
                Some(b) => *b,
                None => default_bound(suite).map_err(|e| e.to_string())?,
            };
            let r = verify_suite(suite, bound).map_err(|e| e.to_string())?;
            let mut lines: Vec<String> = r.facts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
            lines.push(format!("{} checks", r.checks));
            let summary = format!("{} defects", r.defects.len());
            let facts: serde_json::Map<String, Value> = r.facts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            let mut report = Report::new(
                "verify",
                lines,
                json!({"suite": r.suite, "bound": r.bound, "checks": r.checks, "facts": facts}),
            );
            report.defects = r.defects;
            report.defects.push(summary);
            if report.defects.len() == 1 {
                report.lines.push(report.defects.pop().unwrap());
            }
            Ok(report)
        }
        Command::Envelope { brace, upto, slack } => envelope(brace, *upto, *slack),
    }
}

/// Renames labels of `inner` that clash with those of `outer` (other than
/// `at`) to fresh integers.
fn fresh_labels(outer: &[&str], inner: &[&str], at: &str) -> impl Fn(&str) -> String {
    let taken: BTreeSet<String> = outer.iter().chain(inner).map(|s| s.to_string()).collect();
    let mut next = taken.iter().filter_map(|s| s.parse::<usize>().ok()).max().unwrap_or(0);
    let mut map = std::collections::BTreeMap::new();
    for &l in inner {
        if l != at && outer.contains(&l) {
            next += 1;
            map.insert(l.to_string(), next.to_string());
        }
    }
    move |s: &str| map.get(s).cloned().unwrap_or_else(|| s.to_string())
}

fn compose(species: OperadSpecies, outer: &str, inner: &str, at: &str) -> Result<Report, String> {
    let (sum, terms) = match species {
        OperadSpecies::Ape => {
            let o = parse_planar(outer).map_err(|e| located(e, outer))?;
            let i = parse_planar(inner).map_err(|e| located(e, inner))?;
            let i = i.relabel(&fresh_labels(&o.labels(), &i.labels(), at));
            let r = compose_ape(&PlanarOp::basis(o), at, &PlanarOp::basis(i)).map_err(|e| e.to_string())?;
            (r.to_string(), r.len())
        }
        OperadSpecies::Prelie => {
            let o = parse_rooted(outer).map_err(|e| located(e, outer))?;
            let i = parse_rooted(inner).map_err(|e| located(e, inner))?;
            let i = i.relabel(&fresh_labels(&o.labels(), &i.labels(), at));
            let r = compose_prelie(&PreLieOp::basis(o), at, &PreLieOp::basis(i)).map_err(|e| e.to_string())?;
            (r.to_string(), r.len())
        }
    };
    Ok(Report::new(
        "compose",
        vec![sum.clone()],
        json!({"sum": sum, "terms": terms}),
    ))
}

fn envelope(path: &str, upto: usize, slack: usize) -> Result<Report, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let b = BraceStructure::from_json(&text).map_err(|e| e.to_string())?;
    let al = b.alphabet();
    let check = b.max_arity().min(upto + slack + 1).max(2);
    let invalid = validate_brace(&b, check).map_err(|e| e.to_string())?;
    if !invalid.is_empty() {
        let mut r = Report::new(
            "envelope",
            vec![format!("invalid brace structure: {} failing relations", invalid.len())],
            json!({"valid": false}),
        );
        r.defects = invalid.iter().map(|d| d.describe(&b)).collect();
        return Ok(r);
    }
    let q = build_envelope(&b, upto, slack).map_err(|e| e.to_string())?;
    let mut notices = Vec::new();
    if q.includes_arity_two() {
        notices.push("note: relations include arity-2 corollas".to_string());
    }
    if !q.stable() {
        let mut r = Report::new("envelope", notices, json!({"stable": false}));
        r.defects.push(format!(
            "dimensions change between slack {slack} and {}; rerun with a larger --slack",
            slack + 1
        ));
        return Ok(r);
    }
    let prims = envelope_primitives(&q).map_err(|e| e.to_string())?;
    let basis: Vec<String> = prims.basis.iter().map(|p| format_sum(p, |t| t.to_expr(&al))).collect();
    let mut defects = Vec::new();
    let survivors = q.coproduct_defects();
    if !survivors.is_empty() {
        defects.push(format!(
            "{} ideal vectors have nonzero coproduct in the quotient",
            survivors.len()
        ));
    }
    if !prims.equals_generators {
        defects.push("primitives differ from the span of the generators".to_string());
    }
    for (root, args) in &prims.structure_defects {
        let names: Vec<&str> = args.iter().map(|&i| b.basis()[i].as_str()).collect();
        defects.push(format!(
            "brace {{{}|{}}} not reproduced on primitives",
            b.basis()[*root],
            names.join(",")
        ));
    }
    let dims: Vec<String> = q.dims().iter().map(usize::to_string).collect();
    let mut lines = notices.clone();
    lines.push(format!("dims: {}", dims.join(",")));
    lines.push(format!("stable: {}", q.stable()));
    lines.push(format!("primitives: {}", basis.len()));
    lines.extend(basis.iter().map(|s| format!("  {s}")));
    let mut r = Report::new(
        "envelope",
        lines,
        json!({
            "dims": q.dims(),
            "stable": q.stable(),
            "slack": slack,
            "primitives": basis,
            "notices": notices,
        }),
    );
    r.defects = defects;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["frobnicate"]).code, 2);
        assert_eq!(run(["eval"]).code, 2);
        assert_eq!(run(["eval", "--expr", "a<", "--bogus"]).code, 2);
        let o = run(["eval", "--expr", "a<<b"]);
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains('^'), "{}", o.stderr);
    }

    #[test]
    fn primitives_degree_two() {
        let o = run(["primitives", "--gens", "1", "--degree", "2"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "a<a - a>a\n"));
    }
}
