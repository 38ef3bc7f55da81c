mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use qcube_core::analysis::{verify_equivalences, AnalysisConfig, AnalysisReport, DEFAULT_MAX_N};
use qcube_core::families::{self, CoxeterSpec};
use qcube_core::partial_cube::djokovic_embedding;
use qcube_core::qmatrix::{self, write_csv, DEFAULT_GRID_STEP};
use qcube_core::spectral::DEFAULT_TOL;
use qcube_core::{bfs_distances, parse_graph, Graph};

/// Exit code for usage errors, unreadable input and library errors.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qcube",
    version,
    about = "Q-matrix positivity and partial-cube analysis of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Numerics {
    /// Grid spacing of the q scan on [-1, 1].
    #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
    grid_step: f64,
    /// Relative PSD tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args)]
struct Limits {
    /// Largest accepted vertex count.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Add per-stage wall-clock times to the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph as an edge list.
    ///
    /// Families: hypercube N, doubled-odd M, cycle N, path N, complete N,
    /// complete-bipartite A B, random-tree N, random-connected N P,
    /// petersen, coxeter a|b|i2 N.
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the full analysis and print a report.
    Analyze {
        /// Edge-list file, or "-" for stdin.
        file: String,
        #[command(flatten)]
        numerics: Numerics,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        json: bool,
    },
    /// Estimate the set of q for which Q_q is positive semidefinite.
    PiScan {
        file: String,
        #[command(flatten)]
        numerics: Numerics,
        /// Also write every grid sample as "q,lambda_min" CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Quadratic embedding constant and its witness.
    Qec {
        file: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Hypercube embedding, or a counterexample. Exit 1 if none exists.
    Embed { file: String },
    /// Cross-check the four verdicts. Exit 0 if all hold, 1 if all fail,
    /// 2 if they disagree.
    Verify {
        file: String,
        #[command(flatten)]
        numerics: Numerics,
        #[command(flatten)]
        limits: Limits,
        #[arg(long)]
        json: bool,
        /// Where to write artifacts when the verdicts disagree.
        #[arg(long, default_value = "qcube-dump")]
        dump_dir: PathBuf,
    },
}

fn read_graph(file: &str) -> Result<Graph> {
    let text = if file == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        match fs::read_to_string(file) {
            Ok(s) => s,
            Err(e) if e.kind() == io::ErrorKind::NotFound => bail!("file not found: {file}"),
            Err(e) => return Err(e).with_context(|| format!("reading {file}")),
        }
    };
    Ok(parse_graph(&text)?)
}

fn param<T: std::str::FromStr>(params: &[String], k: usize, name: &str) -> Result<T> {
    let raw = params
        .get(k)
        .ok_or_else(|| anyhow!("missing parameter <{name}>"))?;
    raw.parse()
        .map_err(|_| anyhow!("invalid value for <{name}>: {raw:?}"))
}

fn generate(family: &str, params: &[String], seed: u64) -> Result<Graph> {
    let arity = match family {
        "petersen" => 0,
        "complete-bipartite" | "random-connected" | "coxeter" => 2,
        _ => 1,
    };
    if params.len() != arity {
        bail!("{family} takes {arity} parameter(s), got {}", params.len());
    }
    let n = || param::<usize>(params, 0, "n");
    Ok(match family {
        "hypercube" => families::hypercube(n()?)?,
        "doubled-odd" => families::doubled_odd(n()?)?,
        "cycle" => families::cycle(n()?)?,
        "path" => families::path(n()?)?,
        "complete" => families::complete(n()?)?,
        "complete-bipartite" => families::complete_bipartite(n()?, param(params, 1, "b")?)?,
        "random-tree" => families::random_tree(n()?, seed)?,
        "random-connected" => families::random_connected(n()?, param(params, 1, "p")?, seed)?,
        "petersen" => families::petersen(),
        "coxeter" => {
            let rank: usize = param(params, 1, "n")?;
            let spec = match params[0].as_str() {
                "a" | "A" => CoxeterSpec::a(rank),
                "b" | "B" => CoxeterSpec::b(rank),
                "i2" | "I2" => CoxeterSpec::i2(rank),
                other => bail!("unknown Coxeter type {other:?} (expected a, b or i2)"),
            };
            families::coxeter_cayley(&spec)?.0
        }
        other => bail!("unknown family {other:?}"),
    })
}

fn config(numerics: &Numerics, limits: &Limits) -> AnalysisConfig {
    AnalysisConfig {
        grid_step: numerics.grid_step,
        tol: numerics.tol,
        max_n: limits.max_n,
        timings: limits.timings,
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_dump(dir: &Path, g: &Graph, report: &AnalysisReport) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    fs::write(dir.join("graph.txt"), g.to_edge_list())?;
    fs::write(
        dir.join("report.json"),
        serde_json::to_string_pretty(report)?,
    )?;
    write_csv(&report.pi, fs::File::create(dir.join("pi.csv"))?)?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Generate {
            family,
            params,
            seed,
        } => {
            let g = generate(&family, &params, seed)?;
            io::stdout().write_all(g.to_edge_list().as_bytes())?;
            Ok(0)
        }
        Command::Analyze {
            file,
            numerics,
            limits,
            json,
        } => {
            let g = read_graph(&file)?;
            let report = verify_equivalences(&g, &config(&numerics, &limits))?;
            if json {
                print_json(&report)?;
            } else {
                print!("{}", render::report(&report));
            }
            Ok(0)
        }
        Command::PiScan {
            file,
            numerics,
            csv,
        } => {
            let g = read_graph(&file)?;
            let d = bfs_distances(&g)?;
            let report = qmatrix::estimate_pi(&d, numerics.grid_step, numerics.tol)?;
            if let Some(path) = csv {
                let f = fs::File::create(&path)
                    .with_context(|| format!("creating {}", path.display()))?;
                write_csv(&report, io::BufWriter::new(f))?;
            }
            print_json(&report)?;
            Ok(0)
        }
        Command::Qec { file, tol } => {
            let g = read_graph(&file)?;
            let report = qmatrix::qec(&bfs_distances(&g)?, tol)?;
            print!("{}", render::qec(&g, &report));
            Ok(0)
        }
        Command::Embed { file } => {
            let g = read_graph(&file)?;
            let verdict = djokovic_embedding(&g, &bfs_distances(&g)?)?;
            match &verdict.embedding {
                Some(emb) => {
                    print_json(&emb.to_labeled(&g))?;
                    Ok(0)
                }
                None => {
                    print_json(&serde_json::json!({
                        "vertices": g.labels(),
                        "counterexample": verdict.counterexample,
                    }))?;
                    Ok(1)
                }
            }
        }
        Command::Verify {
            file,
            numerics,
            limits,
            json,
            dump_dir,
        } => {
            let g = read_graph(&file)?;
            let report = verify_equivalences(&g, &config(&numerics, &limits))?;
            if json {
                print_json(&report)?;
            } else {
                print!("{}", render::verdicts(&report));
            }
            if !report.equivalence_consistent {
                write_dump(&dump_dir, &g, &report)?;
                eprintln!(
                    "verdicts disagree; artifacts written to {}",
                    dump_dir.display()
                );
                return Ok(2);
            }
            Ok(if report.verdicts.pi_full_interval {
                0
            } else {
                1
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
