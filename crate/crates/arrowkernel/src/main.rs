//! `arrowkernel`: build path-algebra quotients, decide arrow removal and compare the
//! homological invariants of an algebra with those of its arrow-removed quotient.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use arrowkernel_core::algebra::DEFAULT_ENV_CAP;
use arrowkernel_core::hochschild::{center_dim, hh_dims_bar, hh_dims_resolution};
use arrowkernel_core::ideal::{arrow_set_removable, remove_arrows, resolve_arrows, scan_removable, Removal};
use arrowkernel_core::module::simple_module;
use arrowkernel_core::resolution::{ext_dims_from, pd_up_to, Resolution};
use arrowkernel_core::verifier::{verify, Verdict, VerifyConfig, VerifyOutcome};
use arrowkernel_core::{assemble_algebra, parse_presentation, serialize_presentation, Error, Field, FieldSpec, PrimeField, QuiverPresentation, Rationals};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

const BAR_CAP: usize = 200_000;

#[derive(Parser, Debug)]
#[command(name = "arrowkernel", version, about = "Arrow removal for finite-dimensional path-algebra quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Maximal word length explored by the rewriting completion
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    degree_bound: u64,

    /// Largest enveloping-algebra dimension attempted
    #[arg(long, global = true, default_value_t = DEFAULT_ENV_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    env_cap: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, basis and nilpotency degree
    Basis { file: PathBuf },
    /// Decide whether an arrow set can be removed, or scan all arrows
    Removable(RemovableArgs),
    /// Print the presentation of the quotient by a removable arrow set
    Remove(SetArgs),
    /// Ext dimensions between simple modules
    ExtTable(ExtArgs),
    /// Hochschild cohomology dimensions by two methods
    Hochschild(HhArgs),
    /// Full comparison report for a removable arrow set
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct RemovableArgs {
    file: PathBuf,
    /// Comma-separated arrow names
    #[arg(long, value_delimiter = ',', conflicts_with = "scan", required_unless_present = "scan")]
    set: Vec<String>,
    /// Report every singleton-removable arrow and one greedy maximal set
    #[arg(long)]
    scan: bool,
}

#[derive(Args, Debug)]
struct SetArgs {
    file: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<String>,
}

#[derive(Args, Debug)]
struct ExtArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 8)]
    ext_max: usize,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pd_cap: u64,
}

#[derive(Args, Debug)]
struct HhArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 4)]
    hh_max: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<String>,
    #[arg(long, default_value_t = 8)]
    ext_max: usize,
    #[arg(long, default_value_t = 4)]
    hh_max: usize,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    pd_cap: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampled modules per sampled condition
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Random module pairs added to the Ext comparison
    #[arg(long, default_value_t = 5)]
    random_pairs: usize,
}

/// Result of a command: the JSON document to print and the exit code.
struct Outcome {
    value: Value,
    code: u8,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, code: 0 }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Presentation(_) | Error::UnknownArrow(_) | Error::UnknownVertex(_) | Error::EmptyArrowSet | Error::NotPrime(_) => 2,
        Error::NotFiniteDimensional(_) | Error::NotAdmissible => 3,
        _ => 1,
    }
}

fn file_of(cmd: &Command) -> &PathBuf {
    match cmd {
        Command::Basis { file } => file,
        Command::Removable(a) => &a.file,
        Command::Remove(a) => &a.file,
        Command::ExtTable(a) => &a.file,
        Command::Hochschild(a) => &a.file,
        Command::Verify(a) => &a.file,
    }
}

fn names(set: &[String]) -> Vec<&str> {
    set.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect()
}

fn fingerprint(p: &QuiverPresentation) -> String {
    let digest = Sha256::digest(serialize_presentation(p).as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn run<K: Field>(cli: &Cli, p: QuiverPresentation, field: K) -> Result<Outcome, Error> {
    let cap = cli.degree_bound as usize;
    let env_cap = cli.env_cap as usize;
    let lambda = Arc::new(assemble_algebra(&p, &field, cap)?);
    let field_name = p.field.to_string();
    match &cli.command {
        Command::Basis { .. } => Ok(Outcome::ok(json!({
            "field": field_name,
            "dim": lambda.dim(),
            "nilpotency": lambda.nilpotency(),
            "basis": lambda
                .basis()
                .iter()
                .map(|b| json!({
                    "label": b.label,
                    "source": lambda.vertices()[b.source],
                    "target": lambda.vertices()[b.target],
                }))
                .collect::<Vec<_>>(),
        }))),
        Command::Removable(args) => {
            if args.scan {
                let scan = scan_removable(&lambda, cap)?;
                return Ok(Outcome::ok(json!({ "scan": scan })));
            }
            let t = resolve_arrows(&p, &names(&args.set))?;
            Ok(match arrow_set_removable(&lambda, &t, cap)? {
                Removal::Certified(c) => Outcome::ok(json!({ "removable": true, "certificate": c })),
                Removal::Refused(r) => Outcome {
                    value: json!({ "removable": false, "refusal": r }),
                    code: 1,
                },
            })
        }
        Command::Remove(args) => {
            let t = resolve_arrows(&p, &names(&args.set))?;
            Ok(match arrow_set_removable(&lambda, &t, cap)? {
                Removal::Certified(c) => {
                    let gamma = remove_arrows(&p, &c)?;
                    let g = assemble_algebra(&gamma, &field, cap)?;
                    Outcome::ok(json!({
                        "removed": c.arrows,
                        "dim_gamma": g.dim(),
                        "presentation": serialize_presentation(&gamma),
                    }))
                }
                Removal::Refused(r) => Outcome {
                    value: json!({ "removable": false, "refusal": r }),
                    code: 1,
                },
            })
        }
        Command::ExtTable(args) => {
            let n = lambda.num_vertices();
            let simples = (0..n).map(|v| simple_module(&lambda, v)).collect::<Result<Vec<_>, _>>()?;
            let mut entries = Vec::new();
            let mut pds = Vec::new();
            for (u, s) in simples.iter().enumerate() {
                let mut res = Resolution::new(s);
                for (w, t) in simples.iter().enumerate() {
                    entries.push(json!({
                        "m": format!("S_{}", lambda.vertices()[u]),
                        "n": format!("S_{}", lambda.vertices()[w]),
                        "dims": ext_dims_from(&mut res, t, args.ext_max)?,
                    }));
                }
                pds.push(json!({
                    "module": format!("S_{}", lambda.vertices()[u]),
                    "pd": pd_up_to(s, args.pd_cap as usize),
                }));
            }
            Ok(Outcome::ok(json!({
                "field": field_name,
                "degree_max": args.ext_max,
                "ext": entries,
                "projective_dimensions": pds,
            })))
        }
        Command::Hochschild(args) => {
            let res = hh_dims_resolution(&lambda, env_cap, args.hh_max)?;
            let bar = match hh_dims_bar(&lambda, args.hh_max, BAR_CAP) {
                Ok(t) => Some(t),
                Err(Error::DimensionCapExceeded { .. }) => None,
                Err(e) => return Err(e),
            };
            let agree = bar.as_ref().map(|b| b.dims == res.dims);
            let center = center_dim(&lambda);
            let consistent = agree != Some(false) && res.dims.first() == Some(&center);
            Ok(Outcome {
                value: json!({
                    "field": field_name,
                    "degree_max": args.hh_max,
                    "resolution": res,
                    "relative_bar": bar,
                    "methods_agree": agree,
                    "center_dim": center,
                }),
                code: if consistent { 0 } else { 1 },
            })
        }
        Command::Verify(args) => {
            let t = resolve_arrows(&p, &names(&args.set))?;
            let cfg = VerifyConfig {
                ext_max: args.ext_max,
                hh_max: args.hh_max,
                pd_cap: args.pd_cap as usize,
                samples: args.samples as usize,
                random_pairs: args.random_pairs,
                seed: args.seed,
                degree_bound: cap,
                env_cap,
            };
            let input = args.file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok(match verify(&lambda, &t, &cfg, &input, &fingerprint(&p), env!("CARGO_PKG_VERSION"))? {
                VerifyOutcome::Report(r) => {
                    let code = if r.verdicts.overall == Verdict::Fail { 1 } else { 0 };
                    Outcome {
                        value: serde_json::to_value(&*r).expect("report serializes"),
                        code,
                    }
                }
                VerifyOutcome::Refused(r) => Outcome {
                    value: json!({ "removable": false, "refusal": r }),
                    code: 4,
                },
            })
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, (u8, anyhow::Error)> {
    let path = file_of(&cli.command);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(|e| (2, e))?;
    let result = parse_presentation(&text).map_err(Error::from).and_then(|p| match p.field {
        FieldSpec::Prime { p: q } => {
            let k = PrimeField::new(q)?;
            run(cli, p, k)
        }
        FieldSpec::Rational => run(cli, p, Rationals),
    });
    result.map_err(|e| (exit_code(&e), anyhow::Error::new(e).context(path.display().to_string())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.value).expect("json value serializes"),
                Format::Text => render::text(&out.value),
            };
            println!("{rendered}");
            ExitCode::from(out.code)
        }
        Err((code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
