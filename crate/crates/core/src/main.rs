use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lqb::io::{
    example_catalog, example_description, example_names, run_check, run_double, run_rep_verify, Flags, InputDocument,
    InputError, Report, DEFAULT_MAX_DIM,
};

#[derive(Parser)]
#[command(name = "lqb", version, about = "Check Lie quasi-bialgebras, build their doubles and verify the exterior representation")]
struct Cli {
    /// Largest dimension accepted by rep-verify.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,

    /// Write the JSON report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Suppress the human-readable summary.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms, derived relations and Laplacian identities.
    Check { file: PathBuf },
    /// Build the double and write it as an exact structure.
    Double {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify the representation on the exterior algebra and the map Q.
    RepVerify { file: PathBuf },
    /// Print a catalog example.
    Example {
        /// One of the catalog names; omit to list them.
        name: Option<String>,
        /// Print the document instead of its description.
        #[arg(long)]
        emit: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags = Flags { max_dim: cli.max_dim };
    match run(&cli, &flags) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(path) = &cli.report {
                let body = serde_json::json!({ "exit_code": 2, "error": e.to_string() });
                let text = serde_json::to_string_pretty(&body).expect("json") + "\n";
                if let Err(w) = std::fs::write(path, text) {
                    eprintln!("error: {}: {w}", path.display());
                }
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, flags: &Flags) -> Result<u8, InputError> {
    let report = match &cli.command {
        Command::Check { file } => run_check(&load(file)?, flags),
        Command::RepVerify { file } => run_rep_verify(&load(file)?, flags)?,
        Command::Double { file, out } => {
            let output = run_double(&load(file)?, flags);
            if let Some(doc) = &output.document {
                write(out, &doc.to_canonical_string())?;
            }
            output.report
        }
        Command::Example { name, emit } => return example(name.as_deref(), *emit),
    };
    finish(cli, &report)
}

fn load(path: &Path) -> Result<InputDocument, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })?;
    InputDocument::parse(&text)
}

fn write(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn finish(cli: &Cli, report: &Report) -> Result<u8, InputError> {
    if let Some(path) = &cli.report {
        write(path, &report.to_json())?;
    }
    if !cli.quiet {
        print!("{}", report.summary());
    }
    Ok(report.exit_code as u8)
}

fn example(name: Option<&str>, emit: bool) -> Result<u8, InputError> {
    let Some(name) = name else {
        for n in example_names() {
            println!("{n:<22}{}", example_description(n).unwrap_or_default());
        }
        return Ok(0);
    };
    let doc = example_catalog(name)?;
    if emit {
        print!("{}", doc.to_canonical_string());
    } else {
        println!("{name}: {}", example_description(name).unwrap_or_default());
    }
    Ok(0)
}
