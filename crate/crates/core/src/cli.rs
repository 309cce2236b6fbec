//! The `netvuln` command line.
//!
//! Exit codes: 0 on success, 1 for invalid arguments, unreadable or
//! malformed input and failed runs, 2 when an output cannot be written.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::attack::{summarize, sweep, AttackStrategy, AttackTrace};
use crate::chart::{render_chart, render_series, ChartSeries};
use crate::error::Error;
use crate::generators::{extract_giant, GeneratorSpec, Model, ModelKind, DEFAULT_REWIRING};
use crate::graph::Graph;
use crate::io::{write_edge_list, write_trace_csv, GraphFormat, LabeledTrace};
use crate::metrics::{network_stats_with, ClusteringConvention};

#[derive(Debug, Parser)]
#[command(name = "netvuln", version, about = "Center-based attacks on complex networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a synthetic network and write it as an edge list.
    Generate {
        #[command(flatten)]
        model: ModelArgs,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print network statistics as JSON.
    Stats {
        #[command(flatten)]
        input: InputArgs,
        /// How nodes of degree < 2 enter the clustering coefficient.
        #[arg(long, value_enum, default_value_t = ClusteringArg::Zero)]
        clustering: ClusteringArg,
    },
    /// Attack a network read from a file.
    Attack {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated strategy codes (IB, IC, ID, IM, RB, RC, RD, RM) or `all`.
        #[arg(long)]
        strategy: String,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Attack freshly generated networks over several seeds.
    Sweep {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 10)]
        runs: usize,
        #[arg(long, default_value = "all")]
        strategy: String,
        #[arg(long)]
        csv: PathBuf,
        /// Chart of the per-strategy mean curves.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Ws,
    Ba,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClusteringArg {
    /// Count them as zero (mean over all nodes).
    Zero,
    /// Leave them out of the mean.
    Exclude,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long, default_value_t = 500)]
    n: usize,
    /// Target mean degree, used for whichever model parameter is not given.
    #[arg(long, default_value_t = 6.0)]
    avg_degree: f64,
    /// Edge probability (er).
    #[arg(long)]
    p: Option<f64>,
    /// Lattice degree, even (ws).
    #[arg(long)]
    k: Option<usize>,
    /// Rewiring probability (ws).
    #[arg(long, default_value_t = DEFAULT_REWIRING)]
    beta: f64,
    /// Edges per new node (ba).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, env = "NETVULN_SEED", default_value_t = 1)]
    seed: u64,
}

impl ModelArgs {
    fn spec(&self) -> Result<GeneratorSpec, Error> {
        let kind = match self.model {
            ModelArg::Er => ModelKind::ErdosRenyi,
            ModelArg::Ws => ModelKind::WattsStrogatz,
            ModelArg::Ba => ModelKind::BarabasiAlbert,
        };
        let model = match Model::with_average_degree(kind, self.n, self.avg_degree) {
            Model::ErdosRenyi { p } => Model::ErdosRenyi { p: self.p.unwrap_or(p) },
            Model::WattsStrogatz { k, .. } => Model::WattsStrogatz {
                k: self.k.unwrap_or(k),
                beta: self.beta,
            },
            Model::BarabasiAlbert { m } => Model::BarabasiAlbert { m: self.m.unwrap_or(m) },
        };
        let spec = GeneratorSpec::new(model, self.n, self.seed);
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// edgelist, pajek or gml; guessed from the extension when omitted.
    #[arg(long)]
    format: Option<String>,
    /// Keep only the largest connected component.
    #[arg(long)]
    giant: bool,
}

impl InputArgs {
    fn load(&self) -> Result<Graph, Failure> {
        let format = match &self.format {
            Some(f) => f.parse::<GraphFormat>().map_err(Failure::Invalid)?,
            None => GraphFormat::from_path(&self.input),
        };
        let file = File::open(&self.input)
            .map_err(|e| Failure::Invalid(Error::InvalidArgument(format!("{}: {e}", self.input.display()))))?;
        let parsed = format.read(std::io::BufReader::new(file)).map_err(|e| match e {
            Error::Io(e) => Failure::Invalid(Error::InvalidArgument(format!("{}: {e}", self.input.display()))),
            e => Failure::Invalid(e),
        })?;
        if self.giant {
            extract_giant(&parsed.graph).map_err(Failure::Invalid)
        } else {
            Ok(parsed.graph)
        }
    }

    fn dataset_name(&self) -> String {
        self.input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".into())
    }
}

/// Errors sorted by exit code.
enum Failure {
    Invalid(Error),
    Output(PathBuf, Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Output(path.to_owned(), e.into()))
}

fn write_to<F>(path: &Path, body: F) -> Result<(), Failure>
where
    F: FnOnce(&mut BufWriter<File>) -> crate::error::Result<()>,
{
    let mut w = create(path)?;
    body(&mut w)
        .and_then(|()| w.flush().map_err(Error::from))
        .map_err(|e| Failure::Output(path.to_owned(), e))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
        Err(Failure::Output(path, e)) => {
            let _ = writeln!(stderr, "error: writing {}: {e}", path.display());
            2
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Generate { model, out } => {
            let spec = model.spec()?;
            let g = spec.generate()?;
            match out {
                Some(path) => write_to(&path, |w| write_edge_list(&g, w))?,
                None => write_edge_list(&g, &mut *stdout).map_err(|e| Failure::Output("<stdout>".into(), e))?,
            }
            let _ = writeln!(
                stderr,
                "{spec} seed {}: {} nodes, {} edges",
                spec.seed,
                g.node_count(),
                g.edge_count()
            );
            Ok(())
        }
        Command::Stats { input, clustering } => {
            let g = input.load()?;
            let convention = match clustering {
                ClusteringArg::Zero => ClusteringConvention::LowDegreeAsZero,
                ClusteringArg::Exclude => ClusteringConvention::ExcludeLowDegree,
            };
            let stats = network_stats_with(&g, convention)?;
            let json = serde_json::to_string_pretty(&stats).expect("stats serialize");
            writeln!(stdout, "{json}").map_err(|e| Failure::Output("<stdout>".into(), e.into()))?;
            Ok(())
        }
        Command::Attack {
            input,
            strategy,
            csv,
            svg,
        } => {
            let strategies = AttackStrategy::parse_list(&strategy)?;
            let g = input.load()?;
            if !g.is_connected() {
                return Err(Failure::Invalid(Error::Domain(format!(
                    "{} has {} components; pass --giant to attack its largest component",
                    input.input.display(),
                    g.connected_components().len()
                ))));
            }
            let traces = strategies
                .iter()
                .map(|s| s.run(&g))
                .collect::<crate::error::Result<Vec<AttackTrace>>>()?;
            let name = input.dataset_name();
            let labeled: Vec<LabeledTrace<'_>> = traces
                .iter()
                .map(|trace| LabeledTrace {
                    trace,
                    source: &name,
                    seed: None,
                })
                .collect();
            write_to(&csv, |w| write_trace_csv(&labeled, w).map(drop))?;
            if let Some(svg) = svg {
                write_to(&svg, |w| render_chart(&traces, &name, w))?;
            }
            let _ = writeln!(stdout, "strategy  destruction_f  iterations  robustness_index");
            for t in &traces {
                let s = summarize(t);
                let _ = writeln!(
                    stdout,
                    "{:<8}  {:>13.6}  {:>10}  {:>16.6}",
                    t.strategy.code(),
                    s.destruction_f,
                    s.iterations,
                    s.robustness_index
                );
            }
            Ok(())
        }
        Command::Sweep {
            model,
            runs,
            strategy,
            csv,
            svg,
        } => {
            let strategies = AttackStrategy::parse_list(&strategy)?;
            let spec = model.spec()?;
            let results = sweep(&spec, &strategies, runs, spec.seed)?;
            let source = spec.to_string();
            let mut failed = 0;
            let mut ok: Vec<(AttackStrategy, u64, &AttackTrace)> = Vec::new();
            for r in &results {
                match &r.outcome {
                    Ok(t) => ok.push((r.strategy, r.seed, t)),
                    Err(e) => {
                        failed += 1;
                        let _ = writeln!(stderr, "{} seed {}: {e}", r.strategy.code(), r.seed);
                    }
                }
            }
            let labeled: Vec<LabeledTrace<'_>> = ok
                .iter()
                .map(|&(_, seed, trace)| LabeledTrace {
                    trace,
                    source: &source,
                    seed: Some(seed),
                })
                .collect();
            write_to(&csv, |w| write_trace_csv(&labeled, w).map(drop))?;

            let mut series = Vec::new();
            let _ = writeln!(stdout, "{source}, {runs} runs from seed {}", spec.seed);
            let _ = writeln!(stdout, "strategy  mean_f    sd_f      mean_robustness");
            for &s in &strategies {
                let traces: Vec<&AttackTrace> = ok.iter().filter(|c| c.0 == s).map(|c| c.2).collect();
                if traces.is_empty() {
                    continue;
                }
                let fs: Vec<f64> = traces.iter().map(|t| t.destruction_f()).collect();
                let mean = fs.iter().sum::<f64>() / fs.len() as f64;
                let var = fs.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / fs.len() as f64;
                let rob = traces.iter().map(|t| summarize(t).robustness_index).sum::<f64>() / traces.len() as f64;
                let _ = writeln!(stdout, "{:<8}  {mean:.6}  {:.6}  {rob:.6}", s.code(), var.sqrt());
                series.push(ChartSeries::mean_of(s, &traces));
            }
            if let Some(svg) = svg {
                if !series.is_empty() {
                    write_to(&svg, |w| {
                        render_series(&series, &format!("{source}, mean of {runs} runs"), w)
                    })?;
                }
            }
            if failed > 0 {
                return Err(Failure::Invalid(Error::InvalidArgument(format!(
                    "{failed} of {} runs failed",
                    results.len()
                ))));
            }
            Ok(())
        }
    }
}
