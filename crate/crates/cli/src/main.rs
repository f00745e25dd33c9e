use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chamberseq::pipeline::{generate, Method, Model};
use chamberseq::verify::{self, Scope};
use chamberseq::{binomial_transform, ReferenceTable, Sequence};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exact enumeration of octant and quadrant excursion sequences.
#[derive(Parser)]
#[command(name = "chamberseq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms 0..=n of a sequence.
    Gen {
        /// t3, e3, a108304 or quad0..quad3.
        model: Model,
        #[arg(long, default_value_t = 20)]
        n: usize,
        /// walk, ct, rec or closed; defaults to rec where the model has one.
        #[arg(long)]
        method: Option<Method>,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
    },
    /// Cross-check every pipeline and print a JSON report.
    Verify {
        /// all, thm1, thm2, factorization, closed or quadrant.
        #[arg(long, default_value = "all")]
        scope: Scope,
    },
    /// Apply the k-fold binomial transform to a b-file.
    Transform {
        /// Input b-file; standard input when omitted.
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Bfile,
    Json,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn render(seq: &Sequence, format: Format) -> String {
    match format {
        Format::Bfile => seq.to_bfile(),
        Format::Json => {
            let terms: Vec<String> = seq.terms().iter().map(ToString::to_string).collect();
            let value = json!({ "tag": seq.tag(), "terms": terms });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("plain JSON value")
            )
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Gen {
            model,
            n,
            method,
            format,
        } => {
            let method = method.unwrap_or(model.default_method());
            let seq = generate(model, method, n).map_err(|e| Failure::Usage(e.to_string()))?;
            stdout.write_all(render(&seq, format).as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { scope } => {
            let report = verify::run(scope, &ReferenceTable::published());
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            writeln!(stdout, "{text}")?;
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Transform { input, k, format } => {
            let (tag, text) = match input {
                Some(path) => {
                    let tag = path
                        .file_stem()
                        .map_or("input".into(), |s| s.to_string_lossy().into_owned());
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    (tag, text)
                }
                None => {
                    let mut text = String::new();
                    io::stdin().read_to_string(&mut text)?;
                    ("stdin".to_owned(), text)
                }
            };
            let seq = Sequence::from_bfile(tag, &text)
                .and_then(|s| binomial_transform(&s, k))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            stdout.write_all(render(&seq, format).as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
