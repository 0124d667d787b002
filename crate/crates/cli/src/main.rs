//! bentgraph: Boolean function analysis through Cayley graphs.
//!
//! Exit codes: 0 success, 1 parse/usage error, 2 resource-guard refusal,
//! 3 internal invariant violation (never expected).

mod report;
mod specparse;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bentgraph::{
    enumerate_bent, mm_bent, nyberg_vectorial_bent, predicted_bent_params, random_function,
    BooleanFunction, CayleyGraph, Error, Guards, Permutation, VectorialFunction,
};
use report::{
    build_analysis, build_predict, build_vectorial, describe_function, dot_graph, enumerate_csv,
    spectrum_csv, to_json, EnumerateReport, GeneratedVectorial,
};

/// Default arity cap for the quadratic-pair counting (srg verification).
const DEFAULT_COUNTING_LIMIT: usize = 12;

#[derive(Parser)]
#[command(
    name = "bentgraph",
    version,
    about = "Boolean functions, Walsh spectra, Cayley graphs and strongly regular graph checks",
    long_about = "Analyzes Boolean functions through their Cayley graphs over Z_2^n with exact \
                  integer arithmetic.\n\nTruth-table convention: table index i is the input \
                  b(i), the n-bit binary expansion of i with x1 as the most significant bit. \
                  Function specs: b:<bits> (binary table), h:<hex> (4 entries per digit, first \
                  entry in the digit's most significant bit), a:n=<arity>: <anf> (e.g. \
                  \"a:n=4: x1*x2 + x3*x4\")."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the output to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for one function: spectrum, nonlinearity, bent
    /// verdict, components and the strongly-regular-graph check.
    Analyze {
        /// Function spec: b:<bits>, h:<hex>, or a:n=<arity>: <anf>.
        spec: String,
        /// Output format: json report or csv spectrum (index,i_bits,lambda_i).
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Raise the resource guards (transform arity and counting arity).
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export the Cayley graph of a function in DOT format.
    Graph {
        /// Function spec: b:<bits>, h:<hex>, or a:n=<arity>: <anf>.
        spec: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Raise the resource guard on the graph size.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the two srg parameter families of bent-function graphs on 2^n
    /// vertices.
    Predict {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-subset symmetric-difference graph report for a multi-output
    /// function given as one spec per component.
    Vectorial {
        /// Component specs f1, f2, ..., fm (same arity).
        #[arg(required = true)]
        specs: Vec<String>,
        /// Raise the resource guard on the counting arity.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate all bent functions of arity 2 or 4.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// json prints the count; csv lists every function.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Construct example functions.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Maiorana-McFarland bent function from a seeded permutation and
    /// seeded inner function.
    Mm {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Field-multiplication vectorial bent function with m = n/2 outputs.
    Nyberg {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded pseudo-random function.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0")]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

enum CliError {
    Usage(String),
    Guard(String),
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard { .. } => CliError::Guard(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<specparse::ParseError> for CliError {
    fn from(e: specparse::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<report::InvariantViolation> for CliError {
    fn from(e: report::InvariantViolation) -> Self {
        CliError::Internal(e.0)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Guard(message)) => {
            eprintln!("refused: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(message)) => {
            eprintln!("internal invariant violation: {message}");
            ExitCode::from(3)
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => write_file_atomically(path, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn write_file_atomically(path: &Path, content: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, path)
}

fn parse_spec(spec: &str) -> Result<BooleanFunction, CliError> {
    Ok(specparse::parse_function(spec)?)
}

fn effective_limits(limit: Option<usize>) -> (Guards, usize) {
    let mut guards = Guards::default();
    let mut counting = DEFAULT_COUNTING_LIMIT;
    if let Some(limit) = limit {
        guards.max_transform_arity = limit;
        counting = limit;
    }
    (guards, counting)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Analyze {
            spec,
            format,
            limit,
            output,
        } => {
            let f = parse_spec(&spec)?;
            let (guards, counting_limit) = effective_limits(limit);
            if f.arity() > guards.max_transform_arity {
                return Err(CliError::Guard(format!(
                    "analyze: arity {} exceeds the transform limit {}; raise it with --limit",
                    f.arity(),
                    guards.max_transform_arity
                )));
            }
            let run_graph = f.arity() <= counting_limit;
            let analysis = build_analysis(&spec, &f, run_graph, counting_limit)?;
            let rendered = match format {
                Format::Json => to_json(&analysis),
                Format::Csv => spectrum_csv(&analysis),
                Format::Dot => {
                    return Err(CliError::Usage(
                        "analyze supports --format json or csv".to_string(),
                    ))
                }
            };
            write_output(&output.out, &rendered)
        }
        Command::Graph {
            spec,
            format,
            limit,
            output,
        } => {
            if format != Format::Dot {
                return Err(CliError::Usage("graph supports --format dot".to_string()));
            }
            let f = parse_spec(&spec)?;
            let (_, counting_limit) = effective_limits(limit);
            if f.arity() > counting_limit {
                return Err(CliError::Guard(format!(
                    "graph: arity {} exceeds the limit {counting_limit}; raise it with --limit",
                    f.arity()
                )));
            }
            write_output(&output.out, &dot_graph(&CayleyGraph::from_function(&f)))
        }
        Command::Predict { n, output } => {
            let families = predicted_bent_params(n)?;
            let rendered = to_json(&build_predict(n, &families.plus, &families.minus));
            write_output(&output.out, &rendered)
        }
        Command::Vectorial {
            specs,
            limit,
            output,
        } => {
            let components = specs
                .iter()
                .map(|s| parse_spec(s))
                .collect::<Result<Vec<_>, _>>()?;
            let vf = VectorialFunction::new(components).map_err(CliError::from)?;
            let (_, counting_limit) = effective_limits(limit);
            if vf.arity() > counting_limit {
                return Err(CliError::Guard(format!(
                    "vectorial: arity {} exceeds the limit {counting_limit}; raise it with --limit",
                    vf.arity()
                )));
            }
            let rendered = to_json(&build_vectorial(specs, &vf));
            write_output(&output.out, &rendered)
        }
        Command::Enumerate { n, format, output } => {
            let functions = enumerate_bent(n)?;
            let rendered = match format {
                Format::Json => to_json(&EnumerateReport {
                    n,
                    count: functions.len(),
                }),
                Format::Csv => enumerate_csv(&functions),
                Format::Dot => {
                    return Err(CliError::Usage(
                        "enumerate supports --format json or csv".to_string(),
                    ))
                }
            };
            write_output(&output.out, &rendered)
        }
        Command::Generate { kind } => match kind {
            GenerateKind::Mm { n, seed, output } => {
                if n % 2 != 0 || n == 0 {
                    return Err(CliError::Usage(format!(
                        "mm requires an even arity, got {n}"
                    )));
                }
                let half = n / 2;
                let pi = Permutation::random(1 << half, seed);
                let g = random_function(half, seed ^ 0x6D6D_6265_6E74)?;
                // Normalize g(0) to 0 so the generated function is 0 at the
                // origin and its Cayley graph stays loop-free.
                let g = if g.value(0) { g.complement() } else { g };
                let f = mm_bent(n, &pi, &g)?;
                let rendered = to_json(&describe_function("mm", Some(seed), &f));
                write_output(&output.out, &rendered)
            }
            GenerateKind::Nyberg { n, output } => {
                let vf = nyberg_vectorial_bent(n)?;
                let components = vf
                    .components()
                    .iter()
                    .map(|c| describe_function("component", None, c))
                    .collect();
                let rendered = to_json(&GeneratedVectorial {
                    kind: "nyberg".to_string(),
                    n,
                    m: vf.output_arity(),
                    components,
                    is_vectorial_bent: bentgraph::is_vectorial_bent(&vf),
                });
                write_output(&output.out, &rendered)
            }
            GenerateKind::Random { n, seed, output } => {
                let f = random_function(n, seed)?;
                let rendered = to_json(&describe_function("random", Some(seed), &f));
                write_output(&output.out, &rendered)
            }
        },
    }
}
