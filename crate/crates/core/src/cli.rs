//! The `speclab` command line: flag and config-file parsing, dispatch to the
//! studies, and CSV, SVG and manifest output.
//!
//! Every command accepts the same flag set; flags override values read from
//! `--config`, which may be either a plain config object or a manifest
//! written by an earlier run.

use crate::diagnostics::DEFAULT_MARGIN;
use crate::error::{Error, Result};
use crate::experiments::{
    empirical_sup_deviation, fit_rate, rep_seed, run_convergence, run_figures_with, spectrum_panel, FigurePanel, RateField,
    Scenario, StudyConfig, DEFAULT_GRID, DEFAULT_REPS, FIGURE_SIGMAS,
};
use crate::limit::{build_limit, essential_range, example2_roots, limit_eigs, LimitKind};
use crate::model::{build_grid, sample, Density, KernelSpec};
use crate::spectral::{threshold_cluster, Normalization};
use crate::svg::{eigenvalue_plot, eigenvector_plot};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

pub const TOOL: &str = "speclab";
pub const THREADS_ENV: &str = "SPECLAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "speclab", version, about = "Spectral clustering next to its limit operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cluster one sample by thresholding eigenvector 2 at zero.
    Cluster(Flags),
    /// Spectrum of the limit operator on a quadrature grid.
    Limit(Flags),
    /// Sample eigenpair 2 against the limit eigenpair over growing n.
    Converge(Flags),
    /// Classify eigenvalues against the critical region.
    Diagnose(Flags),
    /// Both Laplacians on one mixture sample for several kernel widths.
    Figures(Flags),
    /// Uniform deviation of the empirical degree function.
    Supdev(Flags),
}

#[derive(Args, Debug, Default)]
struct Flags {
    /// JSON config file, or a manifest.json from an earlier run.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    density: Option<DensityChoice>,
    /// Shape parameter of the piecewise density, in (0, 3).
    #[arg(long)]
    s: Option<f64>,
    #[arg(long, value_enum)]
    kernel: Option<KernelChoice>,
    /// Gaussian kernel width.
    #[arg(long)]
    sigma: Option<f64>,
    /// Value of the constant kernel.
    #[arg(long)]
    c: Option<f64>,
    /// Sample size for cluster, diagnose and figures.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated ascending sample sizes for converge and supdev.
    #[arg(long, value_delimiter = ',')]
    nlist: Option<Vec<usize>>,
    #[arg(long)]
    reps: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Quadrature grid size for limit operators.
    #[arg(long)]
    grid: Option<usize>,
    /// Relative margin around the critical region.
    #[arg(long)]
    margin: Option<f64>,
    #[arg(long, value_enum)]
    kind: Option<Normalization>,
    /// Comma-separated kernel widths for figures.
    #[arg(long, value_delimiter = ',')]
    sigmas: Option<Vec<f64>>,
    /// Comma-separated eigenvector indices (1-5) to plot; empty for none.
    #[arg(long)]
    vectors: Option<String>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ValueEnum for Normalization {
    fn value_variants<'a>() -> &'a [Self] {
        &[Normalization::Normalized, Normalization::Unnormalized]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum DensityChoice {
    Example2,
    Mixture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum KernelChoice {
    Product,
    Gaussian,
    Constant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Cluster,
    Limit,
    Converge,
    Diagnose,
    Figures,
    Supdev,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Cluster => "cluster",
            CommandKind::Limit => "limit",
            CommandKind::Converge => "converge",
            CommandKind::Diagnose => "diagnose",
            CommandKind::Figures => "figures",
            CommandKind::Supdev => "supdev",
        }
    }
}

/// Config-file contents. Every key is optional; unknown keys are rejected.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub density: Option<DensityChoice>,
    pub s: Option<f64>,
    pub kernel: Option<KernelChoice>,
    pub sigma: Option<f64>,
    pub c: Option<f64>,
    pub n: Option<usize>,
    pub nlist: Option<Vec<usize>>,
    pub reps: Option<usize>,
    pub seed: Option<u64>,
    pub grid: Option<usize>,
    pub margin: Option<f64>,
    pub kind: Option<Normalization>,
    pub sigmas: Option<Vec<f64>>,
    pub vectors: Option<Vec<usize>>,
    pub out: Option<PathBuf>,
}

/// A fully resolved and validated invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub density: DensityChoice,
    pub s: f64,
    pub kernel: KernelChoice,
    pub sigma: f64,
    pub c: f64,
    pub n: usize,
    pub nlist: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub grid: usize,
    pub margin: f64,
    pub kind: Normalization,
    pub sigmas: Vec<f64>,
    pub vectors: Vec<usize>,
    pub out: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Manifest {
    tool: String,
    version: String,
    command: CommandKind,
    config: FileConfig,
    seeds: Vec<u64>,
    grid_sizes: Vec<usize>,
}

impl RunConfig {
    /// The resolved values as a config document, so a manifest can be fed
    /// back through `--config`.
    pub fn echo(&self) -> FileConfig {
        FileConfig {
            density: Some(self.density),
            s: Some(self.s),
            kernel: Some(self.kernel),
            sigma: Some(self.sigma),
            c: Some(self.c),
            n: Some(self.n),
            nlist: Some(self.nlist.clone()),
            reps: Some(self.reps),
            seed: Some(self.seed),
            grid: Some(self.grid),
            margin: Some(self.margin),
            kind: Some(self.kind),
            sigmas: Some(self.sigmas.clone()),
            vectors: Some(self.vectors.clone()),
            out: Some(self.out.clone()),
        }
    }

    pub fn scenario(&self) -> Result<Scenario> {
        let density = match self.density {
            DensityChoice::Example2 => Density::example2(self.s)?,
            DensityChoice::Mixture => Density::four_gaussians(),
        };
        let support = density.support();
        let (kernel, id) = match self.kernel {
            KernelChoice::Product => (KernelSpec::product(support)?, "product".to_string()),
            KernelChoice::Gaussian => (KernelSpec::gaussian(self.sigma, support)?, format!("gaussian-sigma{}", self.sigma)),
            KernelChoice::Constant => (KernelSpec::constant(self.c, support)?, format!("constant-c{}", self.c)),
        };
        let dname = match self.density {
            DensityChoice::Example2 => format!("example2-s{}", self.s),
            DensityChoice::Mixture => "mixture".to_string(),
        };
        Scenario::new(format!("{dname}/{id}"), density, kernel)
    }
}

fn read_config(path: &Path) -> Result<FileConfig> {
    let text = fs::read_to_string(path).map_err(|e| Error::usage("config", format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::usage("config", format!("{}: {e}", path.display())))?;
    let doc = match value.get("config") {
        Some(inner) if value.get("tool").is_some() => inner.clone(),
        _ => value,
    };
    serde_json::from_value(doc).map_err(|e| Error::usage("config", e.to_string()))
}

fn parse_vectors(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::usage("vectors", format!("`{t}` is not an index"))))
        .collect()
}

/// Merges flags over the optional config file and validates the result.
pub fn parse_config<I, T>(args: I) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::usage("arguments", e.to_string()))?;
    resolve(cli)
}

fn resolve(cli: Cli) -> Result<RunConfig> {
    let (command, flags) = match cli.command {
        Command::Cluster(f) => (CommandKind::Cluster, f),
        Command::Limit(f) => (CommandKind::Limit, f),
        Command::Converge(f) => (CommandKind::Converge, f),
        Command::Diagnose(f) => (CommandKind::Diagnose, f),
        Command::Figures(f) => (CommandKind::Figures, f),
        Command::Supdev(f) => (CommandKind::Supdev, f),
    };
    let file = match &flags.config {
        Some(p) => read_config(p)?,
        None => FileConfig::default(),
    };
    let vectors = match &flags.vectors {
        Some(t) => Some(parse_vectors(t)?),
        None => None,
    };
    let density = flags.density.or(file.density).unwrap_or(DensityChoice::Example2);
    let default_kernel = match density {
        DensityChoice::Example2 => KernelChoice::Product,
        DensityChoice::Mixture => KernelChoice::Gaussian,
    };
    let default_kind = match command {
        CommandKind::Diagnose => Normalization::Unnormalized,
        _ => Normalization::Normalized,
    };
    let cfg = RunConfig {
        command,
        density,
        s: flags.s.or(file.s).unwrap_or(0.3),
        kernel: flags.kernel.or(file.kernel).unwrap_or(default_kernel),
        sigma: flags.sigma.or(file.sigma).unwrap_or(1.0),
        c: flags.c.or(file.c).unwrap_or(1.0),
        n: flags.n.or(file.n).unwrap_or(200),
        nlist: flags.nlist.or(file.nlist).unwrap_or_else(|| vec![100, 200, 400, 800, 1600]),
        reps: flags.reps.or(file.reps).unwrap_or(DEFAULT_REPS),
        seed: flags.seed.or(file.seed).unwrap_or(0),
        grid: flags.grid.or(file.grid).unwrap_or(DEFAULT_GRID),
        margin: flags.margin.or(file.margin).unwrap_or(DEFAULT_MARGIN),
        kind: flags.kind.or(file.kind).unwrap_or(default_kind),
        sigmas: flags.sigmas.or(file.sigmas).unwrap_or_else(|| FIGURE_SIGMAS.to_vec()),
        vectors: vectors.or(file.vectors).unwrap_or_else(|| (1..=5).collect()),
        out: flags.out.or(file.out).unwrap_or_else(|| PathBuf::from("out")),
    };
    validate(&cfg)?;
    Ok(cfg)
}

fn validate(cfg: &RunConfig) -> Result<()> {
    if !(cfg.s > 0.0 && cfg.s < 3.0) {
        return Err(Error::usage("s", format!("must lie in (0, 3), got {}", cfg.s)));
    }
    if !(cfg.sigma > 0.0 && cfg.sigma.is_finite()) {
        return Err(Error::usage("sigma", format!("must be positive, got {}", cfg.sigma)));
    }
    if !(cfg.c > 0.0 && cfg.c.is_finite()) {
        return Err(Error::usage("c", format!("must be positive, got {}", cfg.c)));
    }
    if cfg.kernel == KernelChoice::Product && cfg.density != DensityChoice::Example2 {
        return Err(Error::usage("kernel", "the product kernel needs a positive support (density example2)"));
    }
    if cfg.n < 10 {
        return Err(Error::usage("n", format!("need at least 10 points, got {}", cfg.n)));
    }
    if cfg.reps == 0 {
        return Err(Error::usage("reps", "must be at least 1"));
    }
    if cfg.grid < 16 {
        return Err(Error::usage("grid", format!("need at least 16 nodes, got {}", cfg.grid)));
    }
    if !(cfg.margin >= 0.0 && cfg.margin.is_finite()) {
        return Err(Error::usage("margin", format!("must be nonnegative, got {}", cfg.margin)));
    }
    if cfg.sigmas.is_empty() || cfg.sigmas.iter().any(|s| !(*s > 0.0 && s.is_finite())) {
        return Err(Error::usage("sigmas", "need one or more positive widths"));
    }
    if cfg.vectors.iter().any(|&v| v == 0 || v > 5) {
        return Err(Error::usage("vectors", "indices must lie in 1..=5"));
    }
    if matches!(cfg.command, CommandKind::Converge | CommandKind::Supdev) {
        if cfg.nlist.len() < 4 {
            return Err(Error::usage("nlist", format!("need at least 4 sample sizes, got {}", cfg.nlist.len())));
        }
        if cfg.nlist.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::usage("nlist", "sample sizes must be strictly increasing"));
        }
        if cfg.nlist[0] < 3 {
            return Err(Error::usage("nlist", "sample sizes must be at least 3"));
        }
    }
    Ok(())
}

/// Runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = configure_threads().and_then(|_| resolve(cli)).and_then(|cfg| dispatch(&cfg));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("speclab: {e}");
            e.exit_code()
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(text) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = text
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::usage(THREADS_ENV, format!("expected a positive integer, got `{text}`")))?;
    // A pool that is already initialized (repeated in-process calls) keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Executes a validated config, writing into `cfg.out`.
pub fn dispatch(cfg: &RunConfig) -> Result<()> {
    fs::create_dir_all(&cfg.out)?;
    let (seeds, grids) = match cfg.command {
        CommandKind::Cluster => (vec![cfg.seed], cluster(cfg, false)?),
        CommandKind::Diagnose => (vec![cfg.seed], cluster(cfg, true)?),
        CommandKind::Limit => (vec![], limit(cfg)?),
        CommandKind::Converge => (study_seeds(cfg), converge(cfg)?),
        CommandKind::Supdev => (study_seeds(cfg), supdev(cfg)?),
        CommandKind::Figures => (vec![cfg.seed], figures(cfg)?),
    };
    let manifest = Manifest {
        tool: TOOL.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: cfg.command,
        config: cfg.echo(),
        seeds,
        grid_sizes: grids,
    };
    let text = serde_json::to_string_pretty(&manifest).map_err(|e| Error::Numerical(e.to_string()))?;
    fs::write(cfg.out.join("manifest.json"), text + "\n")?;
    Ok(())
}

fn study_seeds(cfg: &RunConfig) -> Vec<u64> {
    (0..cfg.nlist.len())
        .flat_map(|ni| (0..cfg.reps).map(move |rep| rep_seed(cfg.seed, ni, rep)))
        .collect()
}

/// Floats are written with `Display`, the shortest representation that
/// round-trips, so identical runs give identical bytes.
fn write_csv(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(std::io::Error::from)?;
    w.write_record(header).map_err(std::io::Error::from)?;
    for row in rows {
        w.write_record(&row).map_err(std::io::Error::from)?;
    }
    w.flush()?;
    Ok(())
}

fn write_panel(dir: &Path, x: &[f64], panel: &FigurePanel, vectors: &[usize], title: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    write_csv(
        &dir.join("eigenvalues.csv"),
        &["index", "eigenvalue", "status", "ipr"],
        panel
            .report
            .records
            .iter()
            .map(|r| vec![r.index.to_string(), r.eigenvalue.to_string(), r.status.as_str().into(), r.ipr.to_string()]),
    )?;
    write_csv(
        &dir.join("eigenvectors.csv"),
        &["point", "x", "v1", "v2", "v3", "v4", "v5"],
        x.iter().enumerate().map(|(i, xi)| {
            let mut row = vec![i.to_string(), xi.to_string()];
            row.extend((0..5).map(|k| panel.eigenvectors.get(k).map_or(String::new(), |v| v[i].to_string())));
            row
        }),
    )?;

    let marker = (panel.normalization == Normalization::Unnormalized).then_some(panel.min_degree);
    fs::write(dir.join("eigenvalues.svg"), eigenvalue_plot(&panel.eigenvalues, marker, title)?)?;
    let selected: Vec<(usize, &[f64])> = vectors
        .iter()
        .filter_map(|&k| panel.eigenvectors.get(k - 1).map(|v| (k, v.as_slice())))
        .collect();
    match eigenvector_plot(x, &selected, title)? {
        Some(svg) => fs::write(dir.join("eigenvectors.svg"), svg)?,
        None => eprintln!("warning: empty eigenvector selection, eigenvectors.svg not written"),
    }
    Ok(())
}

fn cluster(cfg: &RunConfig, diagnose: bool) -> Result<Vec<usize>> {
    let scenario = cfg.scenario()?;
    let s = sample(&scenario.density, cfg.n, cfg.seed)?;
    let panel = spectrum_panel(&s, &scenario.kernel, cfg.kind, cfg.margin)?;
    let title = format!("{} {} n={}", scenario.id, cfg.kind.name(), cfg.n);
    write_panel(&cfg.out, &s.points, &panel, &cfg.vectors, &title)?;
    let r = &panel.region;
    println!("critical region [{}, {}] margin {}", r.lo, r.hi, r.margin);
    if diagnose {
        for rec in &panel.report.records {
            println!("{:>3} {:>14.8} {:<8} ipr {:.4}", rec.index, rec.eigenvalue, rec.status.as_str(), rec.ipr);
        }
        println!("eigenvalues below the region: {}", panel.count_below);
    } else {
        let labels = threshold_cluster(&panel.eigenvectors[1], 0.0);
        write_csv(
            &cfg.out.join("labels.csv"),
            &["point", "x", "label"],
            s.points
                .iter()
                .zip(&labels.labels)
                .enumerate()
                .map(|(i, (x, l))| vec![i.to_string(), x.to_string(), l.to_string()]),
        )?;
        let ones = labels.labels.iter().filter(|&&l| l == 1).count();
        println!("cluster sizes: {} / {}", cfg.n - ones, ones);
    }
    Ok(vec![])
}

fn limit(cfg: &RunConfig) -> Result<Vec<usize>> {
    let scenario = cfg.scenario()?;
    let grid = build_grid(&scenario.density, cfg.grid)?;
    let degree = scenario.degree_function(&grid)?;
    let range = essential_range(&degree, 1000)?;
    if cfg.density == DensityChoice::Example2 && cfg.kernel == KernelChoice::Product {
        let roots: Vec<String> = example2_roots(cfg.s)?.iter().map(|r| format!("{r:?}")).collect();
        println!("roots {{{}}}", roots.join(", "));
    }
    println!("range [{:?}, {:?}]", range.lo, range.hi);

    let kind = match cfg.kind {
        Normalization::Normalized => LimitKind::NormalizedT,
        Normalization::Unnormalized => LimitKind::UnnormalizedU,
    };
    let op = build_limit(kind, &scenario.kernel, &grid)?;
    let spec = limit_eigs(&op, 10.min(grid.len()))?;
    write_csv(
        &cfg.out.join("limit_eigenvalues.csv"),
        &["index", "eigenvalue", "degenerate"],
        spec.values
            .iter()
            .zip(&spec.degenerate)
            .enumerate()
            .map(|(i, (v, d))| vec![(i + 1).to_string(), v.to_string(), d.to_string()]),
    )?;
    write_csv(
        &cfg.out.join("limit_eigenfunctions.csv"),
        &["node", "x", "f1", "f2", "f3", "f4", "f5"],
        spec.nodes.iter().enumerate().map(|(i, x)| {
            let mut row = vec![i.to_string(), x.to_string()];
            row.extend((0..5).map(|k| spec.functions.get(k).map_or(String::new(), |f| f[i].to_string())));
            row
        }),
    )?;
    Ok(vec![cfg.grid])
}

fn write_rate(cfg: &RunConfig, samples: &[(usize, f64)], label: &str) -> Result<()> {
    let mut rows = Vec::new();
    match fit_rate(samples) {
        Ok(fit) => {
            rows.push(vec![fit.slope.to_string(), fit.intercept.to_string(), fit.r2.to_string()]);
            println!("{label}: slope {:.4}, r2 {:.4}", fit.slope, fit.r2);
        }
        Err(e) => eprintln!("warning: no rate fit for {label}: {e}"),
    }
    write_csv(&cfg.out.join("rate.csv"), &["slope", "intercept", "r2"], rows)
}

fn converge(cfg: &RunConfig) -> Result<Vec<usize>> {
    let scenario = cfg.scenario()?;
    let mut study = StudyConfig::new(cfg.kind, cfg.nlist.clone(), cfg.reps, cfg.seed);
    study.grid_n = cfg.grid;
    study.margin = cfg.margin;
    let series = run_convergence(&scenario, &study)?;
    write_csv(
        &cfg.out.join("convergence.csv"),
        &["n", "rep", "lambda2_sample", "lambda2_limit", "vec_sup_err", "sign"],
        series.records.iter().map(|r| {
            vec![
                r.n.to_string(),
                r.rep.to_string(),
                r.lambda2_sample.to_string(),
                r.lambda2_limit.to_string(),
                r.eigvec_sup_error.unwrap_or(f64::NAN).to_string(),
                r.sign.to_string(),
            ]
        }),
    )?;
    let vec = series.samples(RateField::EigvecSupError);
    if vec.is_empty() {
        write_rate(cfg, &series.samples(RateField::LambdaError), "eigenvalue error")?;
    } else {
        write_rate(cfg, &vec, "eigenvector sup error")?;
    }
    Ok(vec![cfg.grid])
}

fn supdev(cfg: &RunConfig) -> Result<Vec<usize>> {
    let scenario = cfg.scenario()?;
    let series = empirical_sup_deviation(&scenario, &cfg.nlist, cfg.reps, cfg.seed, cfg.grid)?;
    write_csv(
        &cfg.out.join("supdev.csv"),
        &["n", "rep", "sup_dev"],
        series
            .records
            .iter()
            .map(|r| vec![r.n.to_string(), r.rep.to_string(), r.sup_deviation.to_string()]),
    )?;
    write_rate(cfg, &series.samples(), "degree sup deviation")?;
    Ok(vec![cfg.grid])
}

fn figures(cfg: &RunConfig) -> Result<Vec<usize>> {
    let data = run_figures_with(cfg.seed, &cfg.sigmas, cfg.n, cfg.margin)?;
    write_csv(
        &cfg.out.join("sample.csv"),
        &["point", "x", "component"],
        data.points
            .iter()
            .zip(&data.components)
            .enumerate()
            .map(|(i, (x, c))| vec![i.to_string(), x.to_string(), c.to_string()]),
    )?;
    for p in &data.panels {
        let sigma = p.sigma().unwrap_or(f64::NAN);
        let dir = cfg.out.join(format!("sigma{sigma}_{}", p.normalization.name()));
        let title = format!("sigma = {sigma}, {}", p.normalization.name());
        write_panel(&dir, &data.points, p, &cfg.vectors, &title)?;
        println!(
            "sigma {sigma} {}: min d_i/n {}, {} eigenvalues below the region",
            p.normalization.name(),
            p.min_degree,
            p.count_below
        );
    }
    Ok(vec![])
}
