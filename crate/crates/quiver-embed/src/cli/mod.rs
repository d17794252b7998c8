//! JSON front end behind the `quiver-embed` binary.
//!
//! Every subcommand reads one JSON document (`--input` as a path or inline
//! text, stdin otherwise) and writes one pretty-printed JSON document.

pub mod properties;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::embedding::{embed_full, embed_rep_full, embedded_dims, SignConvention};
use crate::exact_algebra::{PointSampler, Q};
use crate::fixed_points::{enumerate_fixed_points, VWTuple};
use crate::quiver_rep::{QuiverSetting, Representation};
use crate::vertex::{
    ahat_contribution_oracle, bracket, verify_setting, vertex_series, VerifyOptions, ZShift,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "quiver-embed",
    version,
    about = "Framing-trade embeddings of A_m quiver varieties and their vertex functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Path to a JSON file, or inline JSON. Reads stdin when absent.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Bound on the total degree of vertex terms.
    #[arg(long, global = true, default_value_t = 3)]
    pub bound: i64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Evaluation points per fixed point.
    #[arg(long, global = true, default_value_t = 3)]
    pub points: usize,
    /// Comma-separated powers of q, one per vertex.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub shift: Option<Vec<i64>>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// List the torus fixed points of a setting.
    FixedPoints,
    /// Print the chain of embedding steps.
    Embed,
    /// Apply the full embedding chain to a representation.
    EmbedRep,
    /// Tautological characters at fixed points.
    Character,
    /// Truncated vertex series at fixed points.
    Vertex,
    /// Check the vertex identity at every fixed point of a setting.
    Verify,
    /// Run the seeded property suites.
    Selftest,
}

/// Parsed command output and whether it counts as a success.
pub struct Outcome {
    pub value: Value,
    pub ok: bool,
}

fn read_input(input: Option<&str>) -> Result<Value> {
    let text = match input {
        Some(s) if s.trim_start().starts_with(['{', '[']) => s.to_string(),
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))
}

fn parse_setting(v: &Value) -> Result<QuiverSetting> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("setting: {e}")))
}

/// Either a bare setting or `{"setting": …, "fixed_point": {"partitions": …}}`.
fn setting_and_points(v: &Value) -> Result<(QuiverSetting, Vec<VWTuple>)> {
    match v.get("setting") {
        Some(sv) => {
            let s = parse_setting(sv)?;
            let fp = v
                .get("fixed_point")
                .ok_or_else(|| Error::Input("missing \"fixed_point\"".into()))?;
            let fp = VWTuple::from_json(&s, fp)?;
            Ok((s, vec![fp]))
        }
        None => {
            let s = parse_setting(v)?;
            let fps = enumerate_fixed_points(&s)?;
            Ok((s, fps))
        }
    }
}

fn characters(fp: &VWTuple) -> Value {
    let per_vertex: Vec<Value> = (1..=fp.setting().m)
        .map(|i| {
            json!(fp
                .character(i)
                .iter()
                .map(|m| serde_json::to_value(m).expect("monomial"))
                .collect::<Vec<_>>())
        })
        .collect();
    json!({ "fixed_point": fp.to_json(), "characters": per_vertex })
}

fn selftest(cli: &Cli) -> Result<Outcome> {
    let mut outcomes = properties::phi_properties(
        &properties::default_settings(),
        24,
        cli.seed,
        SignConvention::Consistent,
    )?;
    // {x}_d against the case-split â-product, d ∈ [−5, 5].
    let mut sampler = PointSampler::new(cli.seed);
    let mut br = properties::PropertyOutcome {
        name: "bracket_matches_oracle",
        cases: 0,
        failures: Vec::new(),
    };
    let w = crate::exact_algebra::Monomial::a(1, 1);
    for d in -5..=5 {
        br.cases += 1;
        let p = sampler.sample(QuiverSetting::new(vec![0], vec![1])?.symbols());
        let ratio = bracket(&w, d).div(&ahat_contribution_oracle(&w, d));
        if ratio.eval(&p)?.value() != Q::from_integer(1.into()) {
            br.failures.push(format!("d = {d}"));
        }
    }
    outcomes.push(br);
    let ok = outcomes.iter().all(|o| o.passed());
    Ok(Outcome {
        value: json!({ "checks": outcomes, "passed": ok }),
        ok,
    })
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    if cli.bound < 0 {
        return Err(Error::Input("--bound must be non-negative".into()));
    }
    if cli.command == Command::Selftest {
        return selftest(cli);
    }
    let input = read_input(cli.input.as_deref())?;
    let done = |value: Value| Ok(Outcome { value, ok: true });
    match cli.command {
        Command::FixedPoints => {
            let s = parse_setting(&input)?;
            let fps = enumerate_fixed_points(&s)?;
            done(
                json!({ "setting": s, "fixed_points": fps.iter().map(VWTuple::to_json).collect::<Vec<_>>() }),
            )
        }
        Command::Embed => {
            done(serde_json::to_value(embed_full(&parse_setting(&input)?)?).expect("steps"))
        }
        Command::EmbedRep => {
            let s = parse_setting(
                input
                    .get("setting")
                    .ok_or_else(|| Error::Input("missing \"setting\"".into()))?,
            )?;
            let rv = input
                .get("rep")
                .ok_or_else(|| Error::Input("missing \"rep\"".into()))?;
            let r = Representation::from_json(&s, rv)?;
            let (chain, out) = embed_rep_full(&s, &r)?;
            done(json!({ "chain": chain, "rep": out }))
        }
        Command::Character => {
            let (_, fps) = setting_and_points(&input)?;
            done(json!(fps.iter().map(characters).collect::<Vec<_>>()))
        }
        Command::Vertex => {
            let (_, fps) = setting_and_points(&input)?;
            done(json!(fps
                .iter()
                .map(|fp| vertex_series(fp, cli.bound).to_json())
                .collect::<Vec<_>>()))
        }
        Command::Verify => {
            let s = parse_setting(&input)?;
            let step = embedded_dims(&s)?;
            let shift = match &cli.shift {
                Some(v) if v.len() != s.m => {
                    return Err(Error::Input(format!("--shift needs {} entries", s.m)));
                }
                Some(v) => ZShift(v.clone()),
                None => ZShift::main_theorem(&step),
            };
            let opts = VerifyOptions {
                points: cli.points,
                seed: cli.seed,
                shift: Some(shift),
                ..Default::default()
            };
            let rep = verify_setting(&s, cli.bound, &opts)?;
            let ok = rep.passed;
            Ok(Outcome {
                value: serde_json::to_value(&rep).expect("report"),
                ok,
            })
        }
        Command::Selftest => unreachable!(),
    }
}

fn emit(out: Option<&PathBuf>, v: &Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(v).expect("json") + "\n";
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `args`, runs, prints. Returns the process exit code:
/// 0 on success, 1 on a failed check, 2 on bad input.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            println!("{}", json!({ "error": e.to_string() }));
            return 2;
        }
    };
    match run(&cli) {
        Ok(o) => match emit(cli.out.as_ref(), &o.value) {
            Ok(()) => i32::from(!o.ok),
            Err(e) => {
                println!("{}", json!({ "error": e.to_string() }));
                2
            }
        },
        Err(e) => {
            println!("{}", json!({ "error": e.to_string() }));
            match e {
                Error::Input(_)
                | Error::ShapeMismatch(_)
                | Error::UnsupportedTheta(_)
                | Error::NoPivot
                | Error::EmptyVariety { .. }
                | Error::InadmissibleDegrees(_)
                | Error::LimitExceeded { .. } => 2,
                _ => 1,
            }
        }
    }
}
