//! Thin command-line front end: `zoo`, `report`, and `verify`.
//!
//! Model specs use the family shorthand: `sl 4 R p2`, `o 3 4`,
//! `o 5 5 spin`, `sp 6 R`. Exit codes: 0 all checks pass, 1 a check
//! failed, 2 usage error. `PARABOLICA_ZOO` points at an alternative zoo
//! configuration.

use clap::{Args, Parser, Subcommand};
use parabolica::model::{GradedModel, ModelSpec};
use parabolica::report::{render_csv, render_json, render_markdown, verdicts};
use parabolica::sl2::PartnerRecipe;
use parabolica::verify::{run_suite, Suite};
use parabolica::zoo::{Golden, Zoo};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "parabolica", version, about = "exact workbench for |1|-graded parabolic model algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the model zoo with dimensions and golden-file hashes
    Zoo {
        #[arg(long)]
        json: bool,
    },
    /// Classification table for one model: one row per geometric type
    Report {
        /// Model spec tokens, e.g. `sl 4 R p2` or `o 3 4`
        #[arg(required = true, num_args = 1..)]
        model: Vec<String>,
        #[command(flatten)]
        format: FormatArgs,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run verification suites; exit 0 iff every exact check passes
    Verify {
        /// Model spec tokens, optionally followed by a suite name
        /// (grading | sl2 | kostant | kernels | flows | all)
        #[arg(required = true, num_args = 1..)]
        model: Vec<String>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    md: bool,
    #[arg(long)]
    csv: bool,
}

fn recipe_for(spec: &ModelSpec) -> PartnerRecipe {
    Zoo::load()
        .ok()
        .and_then(|zoo| zoo.entry(&spec.id()).map(|e| e.partner))
        .unwrap_or_else(|| PartnerRecipe::default_for(spec.family))
}

fn emit(out: &Option<std::path::PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn cmd_zoo(json: bool) -> ExitCode {
    let zoo = match Zoo::load() {
        Ok(z) => z,
        Err(e) => {
            eprintln!("zoo: {}", e);
            return ExitCode::from(2);
        }
    };
    let golden = Golden::load().ok();
    if json {
        #[derive(serde::Serialize)]
        struct Row {
            id: String,
            family: parabolica::model::Family,
            field: String,
            params: Vec<usize>,
            golden_hash: Option<String>,
        }
        let rows: Vec<Row> = zoo
            .models
            .iter()
            .map(|e| Row {
                id: e.spec.id(),
                family: e.spec.family,
                field: e.spec.field.clone(),
                params: e.spec.params.clone(),
                golden_hash: golden.as_ref().and_then(|g| g.hash_of(&e.spec.id())),
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        return ExitCode::SUCCESS;
    }
    println!("model zoo v{} ({} models)", zoo.version, zoo.models.len());
    println!("{:<14} {:>5} {:>12} {:>6} {:>7}  golden", "id", "dim", "(d,d0,d)", "types", "dim Ŵ");
    for entry in &zoo.models {
        match GradedModel::build(&entry.spec) {
            Ok(model) => {
                let (d, d0, d1) = model.component_dims();
                let gm = golden.as_ref().and_then(|g| g.models.get(&model.id()));
                let hash = golden
                    .as_ref()
                    .and_then(|g| g.hash_of(&model.id()))
                    .unwrap_or_else(|| "MISSING".into());
                let (types, hatw) = gm
                    .map(|g| (g.num_types.to_string(), g.dim_hat_w.to_string()))
                    .unwrap_or(("?".into(), "?".into()));
                println!(
                    "{:<14} {:>5} {:>12} {:>6} {:>7}  {}",
                    model.id(),
                    model.dim(),
                    format!("({},{},{})", d, d0, d1),
                    types,
                    hatw,
                    hash
                );
            }
            Err(e) => println!("{:<14} BUILD FAILED: {}", entry.spec.id(), e),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_report(tokens: &[String], format: &FormatArgs, out: &Option<std::path::PathBuf>) -> ExitCode {
    let spec = match ModelSpec::parse_tokens(tokens) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("report: {}", e);
            eprintln!("usage: parabolica report sl 4 R p2 | o 3 4 | o 5 5 spin | sp 6 R");
            return ExitCode::from(2);
        }
    };
    let model = match GradedModel::build(&spec) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("report: building {}: {}", spec.id(), e);
            return ExitCode::from(1);
        }
    };
    let rows = match verdicts(&model, recipe_for(&spec)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("report: {}", e);
            return ExitCode::from(1);
        }
    };
    let rendered = if format.json {
        match render_json(&rows) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("report: {}", e);
                return ExitCode::from(1);
            }
        }
    } else if format.csv {
        render_csv(&rows)
    } else {
        render_markdown(&rows)
    };
    if emit(out, &rendered).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn cmd_verify(
    tokens: &[String],
    suite_flag: &Option<String>,
    json: bool,
    out: &Option<std::path::PathBuf>,
) -> ExitCode {
    // the suite may be the trailing token or the --suite flag
    let (model_tokens, suite) = match suite_flag {
        Some(name) => match Suite::parse(name) {
            Some(s) => (tokens, s),
            None => {
                eprintln!("verify: unknown suite {:?}", name);
                return ExitCode::from(2);
            }
        },
        None => match tokens.split_last() {
            Some((last, rest)) if Suite::parse(last).is_some() => {
                (rest, Suite::parse(last).unwrap())
            }
            _ => (tokens, Suite::All),
        },
    };
    let spec = match ModelSpec::parse_tokens(model_tokens) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("verify: {}", e);
            eprintln!("usage: parabolica verify sl 3 R p1 all");
            return ExitCode::from(2);
        }
    };
    let report = run_suite(&spec, recipe_for(&spec), suite);
    if json {
        let text = serde_json::to_string_pretty(&report).expect("report serializes");
        if emit(out, &text).is_err() {
            return ExitCode::from(1);
        }
    } else {
        for c in &report.checks {
            println!(
                "[{}] {:<36} {:>6} ms  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.millis,
                c.details
            );
        }
        println!(
            "{}: suite {} {}",
            report.model,
            report.suite,
            if report.passed { "passed" } else { "FAILED" }
        );
        if let Some(path) = out {
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            if std::fs::write(path, text).is_err() {
                return ExitCode::from(1);
            }
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Zoo { json } => cmd_zoo(*json),
        Command::Report { model, format, out } => cmd_report(model, format, out),
        Command::Verify {
            model,
            suite,
            json,
            out,
        } => cmd_verify(model, suite, *json, out),
    }
}
