//! The `mvtrop` command line.
//!
//! Exit codes: 0 success or valid, 1 counterexample, 2 usage or parse error,
//! 3 domain error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use mvtrop_core::algebra::{CheckMode, LGroup, MvAlgebra, MvValue, Semifield};
use mvtrop_core::error::Error;
use mvtrop_core::export::{hasse_dot, tables_json};
use mvtrop_core::functors::{
    boolean_part, delta, detrop, f_equiv, gamma, glue_boolean_perfect, theta, theta_star, trop,
};
use mvtrop_core::logic::{
    axiom_suite, check_equation_chang, check_equation_finite, evaluate, parse, parse_equation, tautology_check,
    vc_membership, Valuation,
};
use mvtrop_core::qpoints::{
    check_flatness, check_theta_pt_functoriality, classify_regularity, frobenius_action, gp_invariant, hom_exists,
    theta_pt, Characteristic, HomExistence,
};
use mvtrop_core::shorthand::{parse_algebra, parse_assignments, parse_group, parse_group_element};
use mvtrop_core::{CheckReport, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Fragment bound used when neither `--bound` nor `MVTROP_DEFAULT_BOUND` is set.
pub const DEFAULT_BOUND: u64 = 8;
/// Sample count for axiom checks on infinite algebras.
pub const DEFAULT_AXIOM_SAMPLES: u64 = 500;
/// Denominator bound for sampled axiom checks on infinite algebras.
pub const DEFAULT_AXIOM_BOUND: u64 = 12;
pub const DEFAULT_FLAT_SAMPLES: u64 = 1000;

#[derive(Debug, Parser)]
#[command(name = "mvtrop", version, about = "MV-algebras, tropical semifields and points of the rationals")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Fragment bound for infinite structures.
    #[arg(long, global = true, env = "MVTROP_DEFAULT_BOUND")]
    pub bound: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct AlgebraArg {
    /// Algebra shorthand (chain:N, interval, chang, delta:G, bool:K, prod:A,B, glue:B,P) or JSON.
    #[arg(long)]
    pub algebra: String,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Group shorthand (Z, Q, Z[1/2], trivial, lex:G, chi:3^2) or JSON.
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a term under an assignment.
    Eval {
        term: String,
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Assignment such as x=1/2,y=(0,3).
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Check an equation `lhs = rhs` in a finite algebra or in Chang's algebra.
    CheckEq {
        equation: String,
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Check that a term evaluates to 1 everywhere in a finite algebra.
    Tautology {
        term: String,
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Elements x with x >= 2x².
    Theta {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Elements x with x <= 2x².
    ThetaStar {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// The interval [0, u] of a group as an MV-algebra.
    Gamma {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        unit: String,
    },
    /// The perfect algebra Γ(Z ×lex G, (1,0)).
    Delta {
        #[command(flatten)]
        group: GroupArg,
    },
    /// The semifield G ∪ {-inf}.
    Trop {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Recover the group from a semifield given as JSON or `trop:G`.
    Detrop { semifield: String },
    /// The cone with top attached to Trop(G).
    F {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Glue a finite Boolean algebra to a perfect algebra.
    Glue { boolean: String, perfect: String },
    /// Decide membership in the variety generated by Chang's algebra.
    VcMember {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Size of G/pG.
    Gp {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        prime: u64,
    },
    /// Regularly discrete or regularly dense.
    Classify {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Whether some increasing homomorphism maps the group into another.
    Hom {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        to: String,
    },
    /// Flatness of the Frobenius action on the positive cone.
    FlatCheck {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// The point of the topos attached to a subgroup of Q.
    ThetaPt {
        #[command(flatten)]
        group: GroupArg,
        /// Also check functoriality along the map into this group.
        #[arg(long)]
        to: Option<String>,
    },
    /// The four axioms of Łukasiewicz logic and modus ponens.
    Axioms {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Operation tables (JSON) or the Hasse diagram (DOT).
    Export {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        dot: bool,
    },
}

/// What a command produced.
enum Outcome {
    Json(Value),
    Report(CheckReport),
    /// Printed verbatim in both modes.
    Text(String),
}

fn report_json(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn pretty_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        pretty_value(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(v))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("{{{}}}", xs.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

impl Outcome {
    fn code(&self) -> i32 {
        match self {
            Outcome::Report(r) if r.verdict == Verdict::Counterexample => EXIT_COUNTEREXAMPLE,
            _ => EXIT_OK,
        }
    }

    fn render(&self, pretty: bool) -> String {
        match (self, pretty) {
            (Outcome::Text(s), _) => s.clone(),
            (Outcome::Json(v), false) => format!("{v}\n"),
            (Outcome::Report(r), false) => format!("{}\n", report_json(r)),
            (Outcome::Report(r), true) => format!("{r}\n"),
            (Outcome::Json(v), true) => {
                let mut s = String::new();
                pretty_value(v, 0, &mut s);
                s
            }
        }
    }
}

fn bound_or_default(bound: Option<u64>) -> Result<u64, Error> {
    match bound {
        Some(0) => Err(Error::Domain("bound must be at least 1".into())),
        Some(b) => Ok(b),
        None => Ok(DEFAULT_BOUND),
    }
}

fn characteristic_of(text: &str) -> Result<Characteristic, Error> {
    match parse_group(text)? {
        LGroup::Integers => Ok(Characteristic::integers()),
        LGroup::QSubgroup { chi } => Ok(chi),
        other => Err(Error::Domain(format!("{other} is not a subgroup of Q containing 1"))),
    }
}

fn semifield_of(text: &str) -> Result<Semifield, Error> {
    let t = text.trim();
    if let Some(g) = t.strip_prefix("trop:") {
        return Ok(trop(&parse_group(g)?));
    }
    serde_json::from_str(t).map_err(|e| Error::Parse {
        position: e.column().saturating_sub(1),
        message: format!("expected trop:G or semifield JSON: {e}"),
    })
}

fn algebra_json(a: &MvAlgebra) -> Value {
    json!({
        "algebra": a.shorthand(),
        "descriptor": serde_json::to_value(a).expect("descriptor serializes"),
    })
}

fn group_json(g: &LGroup) -> Value {
    json!({
        "group": g.shorthand(),
        "descriptor": serde_json::to_value(g).expect("descriptor serializes"),
    })
}

fn carrier_json(name: &str, a: &MvAlgebra, elems: &[MvValue], bound: u64) -> Value {
    let mut v = json!({
        "algebra": a.shorthand(),
        "carrier": name,
        "elements": strings(elems),
    });
    if !a.is_finite() {
        v["bound"] = json!(bound);
    }
    v
}

fn sample_mode(alg: &MvAlgebra, s: &SampleArgs, bound: Option<u64>) -> CheckMode {
    match (alg.is_finite(), s.samples) {
        (true, None) => CheckMode::Exhaustive,
        (_, count) => CheckMode::Sampled {
            count: count.unwrap_or(DEFAULT_AXIOM_SAMPLES),
            seed: s.seed,
            bound: bound.unwrap_or(DEFAULT_AXIOM_BOUND),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let bound = cli.bound;
    Ok(match &cli.command {
        Command::Eval { term, algebra, assign } => {
            let a = parse_algebra(&algebra.algebra)?;
            let t = parse(term)?;
            let v = Valuation::new(a.clone(), parse_assignments(&a, assign)?)?;
            let value = evaluate(&t, &v)?;
            Outcome::Json(json!({
                "term": t.to_string(),
                "algebra": a.shorthand(),
                "value": value.value().to_string(),
            }))
        }
        Command::CheckEq { equation, algebra } => {
            let a = parse_algebra(&algebra.algebra)?;
            let eq = parse_equation(equation)?;
            let r = match a {
                MvAlgebra::Chang => check_equation_chang(&eq, bound)?,
                _ => check_equation_finite(&eq, &a)?,
            };
            Outcome::Report(r)
        }
        Command::Tautology { term, algebra } => {
            let a = parse_algebra(&algebra.algebra)?;
            Outcome::Report(tautology_check(&parse(term)?, &a)?)
        }
        Command::Theta { algebra } | Command::ThetaStar { algebra } => {
            let a = parse_algebra(&algebra.algebra)?;
            let b = bound_or_default(bound)?;
            let (name, s) = if matches!(cli.command, Command::Theta { .. }) {
                ("theta", theta(&a))
            } else {
                ("theta_star", theta_star(&a))
            };
            Outcome::Json(carrier_json(name, &a, &s.elements(b), b))
        }
        Command::Gamma { group, unit } => {
            let g = parse_group(&group.group)?;
            let u = parse_group_element(&g, unit)?;
            let a = gamma(&g, &u)?;
            let mut v = algebra_json(&a);
            v["unit"] = json!(u.to_string());
            Outcome::Json(v)
        }
        Command::Delta { group } => Outcome::Json(algebra_json(&delta(&parse_group(&group.group)?))),
        Command::Trop { group } => {
            let s = trop(&parse_group(&group.group)?);
            let b = bound_or_default(bound)?;
            Outcome::Json(json!({
                "semifield": serde_json::to_value(&s).expect("descriptor serializes"),
                "zero": s.zero().to_string(),
                "one": s.one().to_string(),
                "elements": strings(&s.enumerate(b)),
                "bound": b,
            }))
        }
        Command::Detrop { semifield } => Outcome::Json(group_json(&detrop(&semifield_of(semifield)?))),
        Command::F { group } => {
            let cone = f_equiv(&trop(&parse_group(&group.group)?))?;
            let mut v = cone.to_json(bound_or_default(bound)?);
            v["bound"] = json!(bound_or_default(bound)?);
            Outcome::Json(v)
        }
        Command::Glue { boolean, perfect } => {
            let a = glue_boolean_perfect(&parse_algebra(boolean)?, &parse_algebra(perfect)?)?;
            let b = bound_or_default(bound)?;
            let mut v = algebra_json(&a);
            v["boolean_part"] = json!(strings(&boolean_part(&a, b)));
            v["elements"] = json!(strings(&a.enumerate(b)));
            v["bound"] = json!(b);
            Outcome::Json(v)
        }
        Command::VcMember { algebra } => Outcome::Report(vc_membership(&parse_algebra(&algebra.algebra)?)?),
        Command::Gp { group, prime } => {
            let chi = characteristic_of(&group.group)?;
            let g = gp_invariant(&chi, *prime)?;
            if cli.pretty {
                Outcome::Text(format!("{}\n", g.value))
            } else {
                Outcome::Json(json!({"group": chi.shorthand(), "prime": g.prime, "value": g.value}))
            }
        }
        Command::Classify { group } => {
            let chi = characteristic_of(&group.group)?;
            Outcome::Json(json!({
                "group": chi.shorthand(),
                "regularity": serde_json::to_value(classify_regularity(&chi)).expect("serializes"),
            }))
        }
        Command::Hom { group, to } => {
            let (src, dst) = (characteristic_of(&group.group)?, characteristic_of(to)?);
            let mut v = json!({"source": src.shorthand(), "target": dst.shorthand()});
            match hom_exists(&src, &dst) {
                HomExistence::Exists { scale } => {
                    v["exists"] = json!(true);
                    v["scale"] = json!(scale.to_string());
                }
                HomExistence::Absent { certificate } => {
                    v["exists"] = json!(false);
                    v["certificate"] = json!(certificate);
                }
            }
            Outcome::Json(v)
        }
        Command::FlatCheck { group, sampling } => {
            let chi = characteristic_of(&group.group)?;
            let n = sampling.samples.unwrap_or(DEFAULT_FLAT_SAMPLES);
            Outcome::Report(check_flatness(&frobenius_action(&chi), n, sampling.seed)?)
        }
        Command::ThetaPt { group, to } => {
            let chi = characteristic_of(&group.group)?;
            let b = bound_or_default(bound)?;
            match to {
                Some(dst) => Outcome::Report(check_theta_pt_functoriality(&chi, &characteristic_of(dst)?, b)?),
                None => {
                    let mut v = theta_pt(&chi).to_json(b);
                    v["bound"] = json!(b);
                    Outcome::Json(v)
                }
            }
        }
        Command::Axioms { algebra, sampling } => {
            let a = parse_algebra(&algebra.algebra)?;
            Outcome::Report(axiom_suite(&a, sample_mode(&a, sampling, bound))?)
        }
        Command::Export { algebra, dot } => {
            let a = parse_algebra(&algebra.algebra)?;
            if *dot {
                Outcome::Text(hasse_dot(&a, bound_or_default(bound)?)?)
            } else {
                Outcome::Json(tables_json(&a)?)
            }
        }
    })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let text = outcome.render(cli.pretty);
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_DOMAIN;
            }
            outcome.code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}
