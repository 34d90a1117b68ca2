use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sparsenet::config::ExperimentConfig;
use sparsenet::core::generators::{generate_ba, generate_er, generate_ggp, BaParams, ErParams, GgpParams};
use sparsenet::core::spectral::SpectralConfig;
use sparsenet::core::stats::CoreConfig;
use sparsenet::core::Seed;
use sparsenet::row::{core_seed, ExperimentRow, GraphStatistics, CSV_HEADER};
use sparsenet::{edgelist, plot, spectral_check, summary, sweep, Error};

#[derive(Parser)]
#[command(
    name = "sparsenet",
    version,
    about = "Random graph models and global connectivity statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Er,
    Ba,
    Ggp,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one graph and write it as an edge list.
    Generate {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Node count (ER, BA).
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability (ER).
        #[arg(long)]
        p: Option<f64>,
        /// Edges per arriving node (BA).
        #[arg(long)]
        m: Option<usize>,
        /// Seed clique size (BA), defaults to m.
        #[arg(long)]
        m0: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Compute the four statistics of an edge-list file as one CSV row.
    Stats {
        input: PathBuf,
        /// Seed of the core/periphery optimizer.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the CSV header first.
        #[arg(long)]
        header: bool,
    },
    /// Run a sweep from a JSON config.
    Sweep {
        /// Config file; the built-in default experiment when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Override the config's output directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the config's master seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Reuse rows already present in the output CSV.
        #[arg(long)]
        resume: bool,
        /// Print the default config and exit.
        #[arg(long)]
        print_default: bool,
    },
    /// Compare union-find and Laplacian-spectrum component counts.
    SpectralCheck {
        /// Edge-list files to check instead of the generated suite.
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of generated graphs in the suite.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = sparsenet::core::spectral::DEFAULT_SIZE_CAP)]
        size_cap: usize,
    },
    /// Render the four SVG panels from a results CSV.
    Plot {
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Config {
        path: "args".into(),
        msg: msg.into(),
    }
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Error> {
    value.ok_or_else(|| usage(format!("--{flag} is required for this model")))
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Generate {
            model,
            seed,
            out,
            n,
            p,
            m,
            m0,
            alpha,
            sigma,
            tau,
            epsilon,
        } => {
            let seed = Seed(seed);
            let graph = match model {
                Model::Er => {
                    let params = ErParams {
                        n: require(n, "n")?,
                        p: require(p, "p")?,
                    };
                    generate_er(params, seed).map_err(|e| usage(e.to_string()))?
                }
                Model::Ba => {
                    let m = require(m, "m")?;
                    let params = BaParams {
                        n: require(n, "n")?,
                        m,
                        m0: m0.unwrap_or(m),
                    };
                    generate_ba(params, seed).map_err(|e| usage(e.to_string()))?
                }
                Model::Ggp => {
                    let mut params = GgpParams::new(require(alpha, "alpha")?, require(sigma, "sigma")?, tau);
                    if let Some(eps) = epsilon {
                        params = params.with_epsilon(eps);
                    }
                    params.validate().map_err(|e| usage(e.to_string()))?;
                    generate_ggp(params, seed).map_err(|e| Error::GenerationFailed {
                        model: "ggp".into(),
                        seed: seed.value(),
                        msg: e.to_string(),
                    })?
                }
            };
            match out {
                Some(path) => std::fs::write(path, edgelist::to_string(&graph))?,
                None => edgelist::write(&graph, std::io::stdout().lock())?,
            }
        }
        Command::Stats { input, seed, header } => {
            let text = std::fs::read_to_string(&input)?;
            let graph = edgelist::parse(&text)?;
            let seed = Seed(seed);
            let stats =
                GraphStatistics::compute(&graph, &CoreConfig::default().with_seed(core_seed(seed))).map_err(|e| {
                    Error::GenerationFailed {
                        model: "file".into(),
                        seed: seed.value(),
                        msg: e.to_string(),
                    }
                })?;
            let row = ExperimentRow {
                model: "file".into(),
                sigma: None,
                n_target: graph.node_count(),
                n_realized: graph.node_count(),
                edges: graph.edge_count(),
                replicate: 0,
                seed: seed.value(),
                components: stats.components,
                clustering: stats.clustering,
                assortativity: stats.assortativity,
                core_share: stats.core_share,
            };
            let mut stdout = std::io::stdout().lock();
            if header {
                writeln!(stdout, "{CSV_HEADER}")?;
            }
            writeln!(stdout, "{}", row.to_csv_line())?;
        }
        Command::Sweep {
            config,
            out,
            seed,
            resume,
            print_default,
        } => {
            if print_default {
                println!("{}", ExperimentConfig::default().to_json());
                return Ok(());
            }
            let mut config = match config {
                Some(path) => ExperimentConfig::load(&path)?,
                None => ExperimentConfig::default(),
            };
            if let Some(dir) = out {
                config.output_dir = dir;
            }
            if let Some(s) = seed {
                config.master_seed = s;
            }
            let output = sweep::run_sweep_to_dir(&config, resume)?;
            let groups = summary::summarize(&output.rows)?;
            std::fs::write(config.output_dir.join("summary.csv"), summary::summary_csv(&groups))?;
            plot::emit_plots(&groups, &config.output_dir)?;
            eprintln!(
                "wrote {} rows to {}",
                output.rows.len(),
                config.output_dir.join(sweep::RESULTS_FILE).display()
            );
        }
        Command::SpectralCheck {
            inputs,
            seed,
            count,
            size_cap,
        } => {
            let cases = if inputs.is_empty() {
                spectral_check::suite(Seed(seed), count)
            } else {
                inputs
                    .iter()
                    .map(|p| {
                        let text = std::fs::read_to_string(p)?;
                        Ok((p.display().to_string(), edgelist::parse(&text)?))
                    })
                    .collect::<Result<Vec<_>, Error>>()?
            };
            let results = spectral_check::run_suite(&cases, &SpectralConfig { size_cap })?;
            let mismatches: Vec<_> = results.iter().filter(|r| !r.agrees()).collect();
            for r in &mismatches {
                println!(
                    "MISMATCH {}: n={} m={} union-find={} spectral={}",
                    r.label, r.nodes, r.edges, r.union_find, r.spectral
                );
            }
            println!("{} graphs checked, {} mismatches", results.len(), mismatches.len());
            if !mismatches.is_empty() {
                return Err(Error::GenerationFailed {
                    model: "spectral-check".into(),
                    seed,
                    msg: format!("{} component count mismatches", mismatches.len()),
                });
            }
        }
        Command::Plot { input, out } => {
            let rows = sparsenet::row::parse_csv(&std::fs::read_to_string(&input)?)?;
            let groups = summary::summarize(&rows)?;
            for path in plot::emit_plots(&groups, &out)? {
                eprintln!("wrote {}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
