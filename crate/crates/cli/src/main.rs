use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heckoid_core::farey::reduce_slope;
use heckoid_core::group::{are_conjugate, classify, to_cyclic_normal_form, to_normal_form};
use heckoid_core::harness::{
    cross_oracle, verify_fundamental_domain, verify_main_theorem, OracleSelection, RunConfig,
    SweepReport,
};
use heckoid_core::hecke::{classify_matrix, rho, TRACE_TOLERANCE};
use heckoid_core::riley::{cs_of_slope, riley_word};
use heckoid_core::slopes::continued_fraction;
use heckoid_core::{Error, Index, Slope, WordOrSlope};
use serde_json::{json, Value};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Slope words and simple loops in the even Heckoid groups <a, b | (ab)^n>.
#[derive(Parser, Debug)]
#[command(name = "heckoid", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the slope word u_s.
    Word {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Print the cyclic S-sequence of u_s.
    Cs {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Reduce a slope into [1/n, 1] ∪ {∞, 0}.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
        #[arg(long)]
        index: i64,
        /// List every generator application in text output.
        #[arg(long)]
        trace: bool,
    },
    /// Classify a word (or the slope word of a slope).
    Decide {
        #[arg(allow_hyphen_values = true)]
        subject: WordOrSlope,
        #[arg(long)]
        index: i64,
    },
    /// Decide whether two elements are conjugate.
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        first: WordOrSlope,
        #[arg(allow_hyphen_values = true)]
        second: WordOrSlope,
        #[arg(long)]
        index: i64,
    },
    /// Evaluate the Hecke-group representation.
    Rep {
        #[arg(allow_hyphen_values = true)]
        subject: WordOrSlope,
        #[arg(long)]
        index: i64,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        sweep: Sweep,
        #[arg(long)]
        index: i64,
        #[arg(long, default_value_t = 50)]
        max_denominator: u64,
        /// Denominator bound for the pairwise conjugacy check of `verify main`.
        #[arg(long, default_value_t = 20)]
        pair_max_denominator: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// exact, dehn, matrix or all.
        #[arg(long, default_value = "all")]
        oracle: OracleSelection,
        /// Write the JSON Lines report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Sweep {
    Main,
    Domain,
    Cross,
}

enum Failure {
    Usage(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let format = cli.format;
    match cli.command {
        Command::Word { slope } => {
            let sw = riley_word(&slope)?;
            emit(
                &mut out,
                format,
                json!({ "slope": slope, "word": sw.word, "length": sw.word.len() }),
                || sw.word.to_string(),
            )?;
        }
        Command::Cs { slope } => {
            let cs = cs_of_slope(&slope)?;
            let cf = continued_fraction(&slope)?;
            emit(
                &mut out,
                format,
                json!({ "slope": slope, "cs": cs, "continued_fraction": cf.to_string() }),
                || serde_json::to_string(&cs).expect("runs serialize"),
            )?;
        }
        Command::Reduce {
            slope,
            index,
            trace,
        } => {
            let n = Index::new(index)?;
            let t = reduce_slope(&slope, n);
            let mut value = serde_json::to_value(&t).expect("traces serialize");
            value["pierces"] = t.pierce_count().to_string().into();
            emit(&mut out, format, value, || {
                let mut s = t.canonical.to_string();
                if trace {
                    for (step, r) in &t.steps {
                        s.push_str(&format!("\n  {step} -> {r}"));
                    }
                }
                s
            })?;
        }
        Command::Decide { subject, index } => {
            let n = Index::new(index)?;
            let w = subject.to_word()?;
            let class = classify(&w, n);
            let (cyc, _) = to_cyclic_normal_form(&w, n);
            let nf = to_normal_form(&w, n);
            emit(
                &mut out,
                format,
                json!({
                    "word": w,
                    "class": class,
                    "normal_form": nf.to_string(),
                    "cyclic_length": cyc.len(),
                }),
                || class.to_string(),
            )?;
        }
        Command::Conjugate {
            first,
            second,
            index,
        } => {
            let n = Index::new(index)?;
            let (u, v) = (first.to_word()?, second.to_word()?);
            let direct = are_conjugate(&u, &v, n);
            let inverted = are_conjugate(&u, &v.inverse(), n);
            emit(
                &mut out,
                format,
                json!({ "conjugate": direct, "up_to_inversion": direct || inverted }),
                || {
                    match (direct, inverted) {
                        (true, _) => "conjugate",
                        (false, true) => "conjugate to inverse",
                        (false, false) => "not conjugate",
                    }
                    .to_string()
                },
            )?;
        }
        Command::Rep { subject, index } => {
            let n = Index::new(index)?;
            let w = subject.to_word()?;
            let m = rho(&w, n);
            let class = classify_matrix(&m, TRACE_TOLERANCE)?;
            emit(
                &mut out,
                format,
                json!({ "trace": class.trace, "class": class.kind, "matrix": m.to_array() }),
                || format!("{:?} trace {} matrix {m}", class.kind, class.trace),
            )?;
        }
        Command::Verify {
            sweep,
            index,
            max_denominator,
            pair_max_denominator,
            samples,
            seed,
            oracle,
            out: path,
        } => {
            let cfg = RunConfig {
                max_denominator,
                pair_max_denominator,
                samples,
                seed,
                oracle,
                out: path.clone(),
                ..RunConfig::new(Index::new(index)?)
            };
            cfg.validate()?;
            let report = match sweep {
                Sweep::Main => verify_main_theorem(&cfg)?,
                Sweep::Domain => verify_fundamental_domain(&cfg)?,
                Sweep::Cross => cross_oracle(&cfg)?,
            };
            write_report(&mut out, format, &report, path)?;
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_COUNTEREXAMPLE));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(
    out: &mut impl Write,
    format: Format,
    value: Value,
    text: impl FnOnce() -> String,
) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{value}"),
        Format::Text => writeln!(out, "{}", text()),
    }
}

/// Full records go to `--out` when given; stdout then gets only the summary.
fn write_report(
    out: &mut impl Write,
    format: Format,
    report: &SweepReport,
    path: Option<PathBuf>,
) -> Result<(), Failure> {
    if let Some(path) = path {
        let mut file = BufWriter::new(File::create(&path)?);
        report.write_jsonl(&mut file)?;
        file.flush()?;
        match format {
            Format::Json => writeln!(out, "{}", report.summary())?,
            Format::Text => report.write_text(&mut *out)?,
        }
        return Ok(());
    }
    match format {
        Format::Json => report.write_jsonl(&mut *out)?,
        Format::Text => report.write_text(&mut *out)?,
    }
    Ok(())
}
