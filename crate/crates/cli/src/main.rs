use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use omegacat::collage::{cone_under, cylinder, iterate, Construction};
use omegacat::io::{export_dot, export_json, import_json, import_json_unchecked, Kind, Parameter};
use omegacat::iso::{action_compatibility, comparison_chain, phi_cube, phi_oriental, verify_functor_iso};
use omegacat::parity::{Flavor, ParityCategory, DEFAULT_NODE_LIMIT};
use omegacat::{check_axioms, AxiomConfig, CheckReport, OmegaCat};

/// Finite strict ω-categories: orientals, cubes, cones and cylinders.
#[derive(Parser)]
#[command(name = "omegacat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the oriental O(n).
    Oriental(Shape),
    /// Enumerate the cube Q(n).
    Cube(Shape),
    /// The cone s(X) on an input category, or s^N(1).
    Cone(Construct),
    /// The cylinder c(X) on an input category, or c^N(1).
    Cylinder(Construct),
    /// Check the strict ω-category axioms of a document.
    VerifyAxioms(VerifyAxioms),
    /// Certify s^n(1) ≅ O(n) or c^n(1) ≅ Q(n) through the explicit comparison maps.
    VerifyIso(VerifyIso),
    /// Print non-identity cell counts per dimension.
    Counts(Input),
    /// Render the 1- or 2-skeleton as Graphviz DOT.
    ExportDot(ExportDot),
}

#[derive(Args)]
struct Shape {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    max_dim: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Construct {
    #[arg(long = "in", conflicts_with = "iterate", required_unless_present = "iterate")]
    input: Option<PathBuf>,
    #[arg(long)]
    iterate: Option<u32>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyAxioms {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    max_dim: Option<u32>,
    #[arg(long, default_value_t = AxiomConfig::default().budget)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsoKind {
    Oriental,
    Cube,
}

#[derive(Args)]
struct VerifyIso {
    #[arg(long, value_enum)]
    kind: IsoKind,
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct Input {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct ExportDot {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
    dim: u32,
}

enum Outcome {
    Done,
    Failed,
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<OmegaCat> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(import_json(&text).with_context(|| format!("loading {}", path.display()))?.cat)
}

fn param(name: &str, value: impl Into<serde_json::Value>) -> Parameter {
    Parameter {
        name: name.into(),
        value: value.into(),
    }
}

fn shape(flavor: Flavor, args: &Shape) -> Result<Outcome> {
    let max_dim = args.max_dim.unwrap_or(args.n);
    let p = ParityCategory::enumerate(flavor, args.n, max_dim, DEFAULT_NODE_LIMIT)?;
    let kind = match flavor {
        Flavor::Simplex => Kind::Oriental,
        Flavor::Cube => Kind::Cube,
    };
    let params = vec![param("n", args.n), param("max_dim", max_dim)];
    emit(&export_json(p.cat(), kind, params), args.out.as_deref())?;
    Ok(Outcome::Done)
}

fn construct(construction: Construction, args: &Construct) -> Result<Outcome> {
    let kind = match construction {
        Construction::Cone => Kind::Cone,
        Construction::Cylinder => Kind::Cylinder,
    };
    let (cat, params) = match (&args.input, args.iterate) {
        (_, Some(n)) => (iterate(construction, n)?, vec![param("iterate", n)]),
        (Some(path), None) => {
            let x = Arc::new(load(path)?);
            let cat = match construction {
                Construction::Cone => cone_under(x)?.cat().clone(),
                Construction::Cylinder => cylinder(x)?.cat().clone(),
            };
            (cat, vec![param("input", path.display().to_string())])
        }
        (None, None) => unreachable!("clap requires one of --in and --iterate"),
    };
    emit(&export_json(&cat, kind, params), args.out.as_deref())?;
    Ok(Outcome::Done)
}

fn verify_axioms(args: &VerifyAxioms) -> Result<Outcome> {
    let text = fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let mut problems = Vec::new();
    let report = match import_json_unchecked(&text) {
        Ok(doc) => {
            if !doc.checksum_ok {
                problems.push("manifest checksum does not match the cell data".to_string());
            }
            let config = AxiomConfig {
                max_dim: args.max_dim,
                budget: args.budget,
                seed: args.seed,
                ..AxiomConfig::default()
            };
            Some(check_axioms(&doc.cat, &config))
        }
        Err(e) => {
            problems.push(format!("document rejected: {e}"));
            None
        }
    };
    let ok = problems.is_empty() && report.as_ref().is_some_and(|r| r.is_ok());
    let out = json!({
        "status": if ok { "pass" } else { "fail" },
        "problems": problems,
        "report": report,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(if ok { Outcome::Done } else { Outcome::Failed })
}

fn verify_iso(args: &VerifyIso) -> Result<Outcome> {
    let cube = matches!(args.kind, IsoKind::Cube);
    let mut reports: Vec<CheckReport> = Vec::new();
    let (chain, _) = comparison_chain(cube, args.n)?;
    let mut r = verify_functor_iso(&chain, args.n);
    r.check = "chain-iso".into();
    reports.push(r);
    if args.n > 0 {
        let (map, compat) = if cube {
            let c = phi_cube(args.n - 1)?;
            (verify_functor_iso(&c.map, args.n), action_compatibility(&c.collage, &c.map))
        } else {
            let c = phi_oriental(args.n - 1)?;
            (verify_functor_iso(&c.map, args.n), action_compatibility(&c.collage, &c.map))
        };
        reports.push(map);
        reports.push(compat);
    }
    let ok = reports.iter().all(CheckReport::is_ok);
    println!("{}", serde_json::to_string_pretty(&reports)?);
    Ok(if ok { Outcome::Done } else { Outcome::Failed })
}

fn counts(args: &Input) -> Result<Outcome> {
    let x = load(&args.input)?;
    let line: Vec<String> = x
        .non_identity_counts()
        .iter()
        .enumerate()
        .map(|(d, c)| format!("dim{d}: {c}"))
        .collect();
    println!("{}", line.join(", "));
    Ok(Outcome::Done)
}

fn dot(args: &ExportDot) -> Result<Outcome> {
    let x = load(&args.input)?;
    print!("{}", export_dot(&x, args.dim)?);
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Oriental(a) => shape(Flavor::Simplex, a),
        Command::Cube(a) => shape(Flavor::Cube, a),
        Command::Cone(a) => construct(Construction::Cone, a),
        Command::Cylinder(a) => construct(Construction::Cylinder, a),
        Command::VerifyAxioms(a) => verify_axioms(a),
        Command::VerifyIso(a) => verify_iso(a),
        Command::Counts(a) => counts(a),
        Command::ExportDot(a) => dot(a),
    };
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
