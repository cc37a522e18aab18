//! Seeded studies: eigenvalue and eigenvector convergence against the
//! grid-discretized limit, uniform deviation of the empirical degree
//! function, log-log rate fits, and the four-Gaussian figure panels.

use crate::diagnostics::{classify, classify_eigenvalues, estimate_critical_region, ipr, CriticalRegion, SpectrumReport};
use crate::error::{Error, Result};
use crate::limit::{
    build_limit, degree_function, limit_eigs, DegreeFunction, DegreeSource, LimitKind, LimitSpectrum, SampleOperators,
    ESSENTIAL_MARGIN,
};
use crate::linalg::{gram, norm2};
use crate::model::{build_grid, sample, Density, DensityKind, KernelKind, KernelSpec, QuadratureGrid, SampleSet};
use crate::spectral::{align_sign, build_laplacian, build_similarity, LaplacianKind, Normalization};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const DEFAULT_GRID: usize = 4000;
pub const DEFAULT_REPS: usize = 20;
pub const SUP_PROBES: usize = 2000;
/// Probe resolution for the function classes `u·H` and `H·H`.
pub const CLASS_PROBES: usize = 400;
pub const FIGURE_SIGMAS: [f64; 4] = [1.0, 2.0, 5.0, 50.0];
pub const FIGURE_POINTS: usize = 200;
pub const FIGURE_SEED: u64 = 1;

/// A density paired with a similarity function.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub density: Density,
    pub kernel: KernelSpec,
}

impl Scenario {
    pub fn new(id: impl Into<String>, density: Density, kernel: KernelSpec) -> Result<Self> {
        if kernel.support != density.support() {
            return Err(Error::Scenario("kernel and density are declared on different supports".into()));
        }
        Ok(Scenario {
            id: id.into(),
            density,
            kernel,
        })
    }

    /// Piecewise density on `[1, 2]` with the product kernel.
    pub fn example2(s: f64) -> Result<Self> {
        let density = Density::example2(s)?;
        let kernel = KernelSpec::product(density.support())?;
        Scenario::new(format!("example2-s{s}"), density, kernel)
    }

    /// Four-Gaussian mixture with a Gaussian kernel of width `sigma`.
    pub fn mixture(sigma: f64) -> Result<Self> {
        let density = Density::four_gaussians();
        let kernel = KernelSpec::gaussian(sigma, density.support())?;
        Scenario::new(format!("mixture-sigma{sigma}"), density, kernel)
    }

    pub fn constant(c: f64, density: Density) -> Result<Self> {
        let kernel = KernelSpec::constant(c, density.support())?;
        Scenario::new(format!("constant-c{c}"), density, kernel)
    }

    /// The analytic degree function where one exists, otherwise the
    /// quadrature one on `grid`.
    pub fn degree_function(&self, grid: &QuadratureGrid) -> Result<DegreeFunction> {
        let analytic = self.kernel.kind == KernelKind::Product
            && matches!(self.density.kind(), DensityKind::PiecewiseExample2 { .. });
        if analytic {
            degree_function(&self.kernel, DegreeSource::Density(&self.density))
        } else {
            degree_function(&self.kernel, DegreeSource::Grid(grid))
        }
    }
}

/// Per-repetition seed, a fixed hash of the master seed and the job
/// coordinates so results do not depend on scheduling.
pub fn rep_seed(master: u64, n_index: usize, rep: usize) -> u64 {
    let mut z = master ^ ((n_index as u64) << 32 | rep as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    pub normalization: Normalization,
    pub n_list: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub grid_n: usize,
    pub margin: f64,
    /// 1-based index of the eigenpair under study.
    pub eigen_index: usize,
    /// Compare eigenvectors with the limit eigenfunction (requires a simple
    /// limit eigenvalue).
    pub compare_eigenvectors: bool,
    /// Also measure the empirical-process supremum over the function class
    /// that bounds the eigenvector error (normalized only).
    pub class_supremum: bool,
}

impl StudyConfig {
    pub fn new(normalization: Normalization, n_list: Vec<usize>, reps: usize, seed: u64) -> Self {
        StudyConfig {
            normalization,
            n_list,
            reps,
            seed,
            grid_n: DEFAULT_GRID,
            margin: crate::diagnostics::DEFAULT_MARGIN,
            eigen_index: 2,
            compare_eigenvectors: true,
            class_supremum: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_list.len() < 4 {
            return Err(Error::Argument(format!("need at least 4 sample sizes, got {}", self.n_list.len())));
        }
        if self.n_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument("sample sizes must be strictly increasing".into()));
        }
        if self.n_list[0] < 2 || self.reps == 0 {
            return Err(Error::Argument("need n >= 2 and at least one repetition".into()));
        }
        if self.eigen_index == 0 || self.eigen_index > self.n_list[0] {
            return Err(Error::Argument(format!("eigenpair index {} out of range", self.eigen_index)));
        }
        if self.class_supremum && self.normalization != Normalization::Normalized {
            return Err(Error::Argument("the class supremum is defined for normalized clustering only".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Consistent,
    /// The eigenvalue sits in or near the essential spectrum; eigenvectors
    /// carry no limit information.
    InconsistentRegime,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub lambda2_sample: f64,
    pub lambda2_limit: f64,
    /// `sup_i |a v_i sqrt(n) - f(X_i)|` after sign alignment; `None` when
    /// eigenvectors are not compared.
    pub eigvec_sup_error: Option<f64>,
    /// The alignment sign `a`, or 0 when no comparison was made.
    pub sign: i8,
    pub ipr: f64,
    pub regime: Regime,
    /// `sup_x |d_n(x) - d(x)|` on the probe grid.
    pub sup_deviation: Option<f64>,
    /// Supremum of `|P_n f - P f|` over `K ∪ u·H ∪ H·H` on probe grids.
    pub class_supremum: Option<f64>,
}

impl ConvergenceRecord {
    pub fn lambda_error(&self) -> f64 {
        (self.lambda2_sample - self.lambda2_limit).abs()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSeries {
    pub scenario: String,
    pub config: StudyConfig,
    pub limit_regime: Regime,
    pub records: Vec<ConvergenceRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RateField {
    LambdaError,
    EigvecSupError,
    SupDeviation,
    ClassSupremum,
}

impl ConvergenceSeries {
    pub fn samples(&self, field: RateField) -> Vec<(usize, f64)> {
        self.records
            .iter()
            .filter_map(|r| {
                let v = match field {
                    RateField::LambdaError => Some(r.lambda_error()),
                    RateField::EigvecSupError => r.eigvec_sup_error,
                    RateField::SupDeviation => r.sup_deviation,
                    RateField::ClassSupremum => r.class_supremum,
                };
                v.map(|v| (r.n, v))
            })
            .collect()
    }

    pub fn records_for(&self, n: usize) -> impl Iterator<Item = &ConvergenceRecord> {
        self.records.iter().filter(move |r| r.n == n)
    }

    /// Median over repetitions of `field` for each sample size.
    pub fn medians(&self, field: RateField) -> Vec<(usize, f64)> {
        group_medians(&self.samples(field))
    }

    /// Median of `eigvec_sup_error / class_supremum` per sample size.
    pub fn class_ratio_medians(&self) -> Vec<(usize, f64)> {
        let pairs: Vec<(usize, f64)> = self
            .records
            .iter()
            .filter_map(|r| match (r.eigvec_sup_error, r.class_supremum) {
                (Some(e), Some(c)) if c > 0.0 => Some((r.n, e / c)),
                _ => None,
            })
            .collect();
        group_medians(&pairs)
    }

    /// Largest per-n median ratio divided by the one at the smallest n.
    pub fn class_ratio_growth(&self) -> Result<f64> {
        let med = self.class_ratio_medians();
        let first = med
            .first()
            .ok_or_else(|| Error::Argument("series carries no class suprema".into()))?
            .1;
        let worst = med.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        Ok(worst / first)
    }
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let m = values.len();
    if m == 0 {
        f64::NAN
    } else if m % 2 == 1 {
        values[m / 2]
    } else {
        0.5 * (values[m / 2 - 1] + values[m / 2])
    }
}

fn group_medians(samples: &[(usize, f64)]) -> Vec<(usize, f64)> {
    let mut ns: Vec<usize> = samples.iter().map(|s| s.0).collect();
    ns.sort_unstable();
    ns.dedup();
    ns.into_iter()
        .map(|n| {
            let mut vals: Vec<f64> = samples.iter().filter(|s| s.0 == n).map(|s| s.1).collect();
            (n, median(&mut vals))
        })
        .collect()
}

/// Ordinary least squares of `log(median error)` against `log n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    /// Distinct sample sizes used.
    pub points: usize,
    /// Individual errors dropped for being zero, negative or not finite.
    pub excluded: usize,
}

pub fn fit_rate(samples: &[(usize, f64)]) -> Result<RateFit> {
    let usable: Vec<(usize, f64)> = samples
        .iter()
        .copied()
        .filter(|(_, e)| e.is_finite() && *e > 0.0)
        .collect();
    let excluded = samples.len() - usable.len();
    let med = group_medians(&usable);
    if med.len() < 4 {
        return Err(Error::Argument(format!(
            "rate fit needs at least 4 sample sizes with positive errors, got {} ({excluded} errors excluded)",
            med.len()
        )));
    }
    let xs: Vec<f64> = med.iter().map(|(n, _)| (*n as f64).ln()).collect();
    let ys: Vec<f64> = med.iter().map(|(_, e)| e.ln()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok(RateFit {
        slope,
        intercept,
        r2,
        points: med.len(),
        excluded,
    })
}

/// Reference quantities for the class supremum, computed once per study.
struct ClassOracle {
    probes: Vec<f64>,
    /// `d` at the probes.
    probe_degrees: Vec<f64>,
    /// `P[u h(x, ·)]` at the probes.
    uh: Vec<f64>,
    /// `P[h(x, ·) h(y, ·)]`, row-major over probe pairs.
    hh: Vec<f64>,
}

impl ClassOracle {
    fn new(kernel: &KernelSpec, grid: &QuadratureGrid, degree: &DegreeFunction, spec: &LimitSpectrum, index: usize) -> Self {
        let probes = kernel.support.probes(CLASS_PROBES);
        let probe_degrees: Vec<f64> = probes.iter().map(|&x| degree.eval_unchecked(x)).collect();
        let node_degrees: Vec<f64> = grid.nodes.iter().map(|&x| degree.eval_unchecked(x)).collect();
        let u = &spec.functions[index];
        let m = grid.len();
        let mut rows = vec![0.0; probes.len() * m];
        let mut uh = vec![0.0; probes.len()];
        for (p, (&x, &dx)) in probes.iter().zip(&probe_degrees).enumerate() {
            for g in 0..m {
                let h = kernel.k(x, grid.nodes[g]) / (dx * node_degrees[g]).sqrt();
                rows[p * m + g] = h * grid.weights[g].sqrt();
                uh[p] += grid.weights[g] * u[g] * h;
            }
        }
        let hh = gram(probes.len(), m, &rows);
        ClassOracle {
            probes,
            probe_degrees,
            uh,
            hh,
        }
    }

    fn supremum(&self, kernel: &KernelSpec, degree: &DegreeFunction, spec: &LimitSpectrum, index: usize, s: &SampleSet) -> f64 {
        let n = s.len();
        let nf = n as f64;
        let point_degrees: Vec<f64> = s.points.iter().map(|&x| degree.eval_unchecked(x)).collect();
        let u_at: Vec<f64> = s.points.iter().map(|&x| spec.eval(index, x)).collect();
        let mut rows = vec![0.0; self.probes.len() * n];
        let mut worst = 0.0f64;
        for (p, (&x, &dx)) in self.probes.iter().zip(&self.probe_degrees).enumerate() {
            let mut dn = 0.0;
            let mut uh = 0.0;
            for j in 0..n {
                let k = kernel.k(x, s.points[j]);
                let h = k / (dx * point_degrees[j]).sqrt();
                dn += k;
                uh += u_at[j] * h;
                rows[p * n + j] = h / nf.sqrt();
            }
            worst = worst.max((dn / nf - dx).abs()).max((uh / nf - self.uh[p]).abs());
        }
        let hh = gram(self.probes.len(), n, &rows);
        hh.iter().zip(&self.hh).fold(worst, |w, (a, b)| w.max((a - b).abs()))
    }
}

/// `sup_x |d_n(x) - d(x)|` over `probes`, given `d` at those probes.
pub fn sup_deviation(ops: &SampleOperators, probes: &[f64], reference: &[f64]) -> f64 {
    probes
        .iter()
        .zip(reference)
        .map(|(&x, &d)| (ops.degree(x) - d).abs())
        .fold(0.0, f64::max)
}

pub fn run_convergence(scenario: &Scenario, cfg: &StudyConfig) -> Result<ConvergenceSeries> {
    cfg.validate()?;
    let kernel = &scenario.kernel;
    let grid = build_grid(&scenario.density, cfg.grid_n)?;
    let limit_kind = match cfg.normalization {
        Normalization::Normalized => LimitKind::NormalizedT,
        Normalization::Unnormalized => LimitKind::UnnormalizedU,
    };
    let op = build_limit(limit_kind, kernel, &grid)?;
    let index = cfg.eigen_index - 1;
    let spec = limit_eigs(&op, (cfg.eigen_index + 1).min(grid.len()))?;
    let lambda_limit = spec.values[index];

    let limit_regime = match cfg.normalization {
        Normalization::Normalized if (1.0 - lambda_limit).abs() < ESSENTIAL_MARGIN => Regime::InconsistentRegime,
        Normalization::Normalized => Regime::Consistent,
        Normalization::Unnormalized => {
            let lo = op.degrees.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = op.degrees.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let region = CriticalRegion { lo, hi, margin: cfg.margin };
            if classify(lambda_limit, &region).is_unreliable() {
                Regime::InconsistentRegime
            } else {
                Regime::Consistent
            }
        }
    };
    if cfg.compare_eigenvectors && limit_regime == Regime::Consistent && spec.degenerate[index] {
        return Err(Error::Scenario(format!(
            "limit eigenvalue {} ({lambda_limit}) is numerically multiple; its eigenfunction is not defined",
            cfg.eigen_index
        )));
    }
    if cfg.class_supremum && limit_regime != Regime::Consistent {
        return Err(Error::Scenario("class supremum requested outside the consistent regime".into()));
    }

    let degree = scenario.degree_function(&grid)?;
    let sup_probes = kernel.support.probes(SUP_PROBES);
    let sup_reference: Vec<f64> = sup_probes.iter().map(|&x| degree.eval_unchecked(x)).collect();
    let oracle = cfg
        .class_supremum
        .then(|| ClassOracle::new(kernel, &grid, &degree, &spec, index));

    let jobs: Vec<(usize, usize, usize)> = cfg
        .n_list
        .iter()
        .enumerate()
        .flat_map(|(ni, &n)| (0..cfg.reps).map(move |rep| (ni, n, rep)))
        .collect();

    let records = jobs
        .into_par_iter()
        .map(|(ni, n, rep)| -> Result<ConvergenceRecord> {
            let seed = rep_seed(cfg.seed, ni, rep);
            let s = sample(&scenario.density, n, seed)?;
            let sim = build_similarity(&s, kernel)?;
            let lap = build_laplacian(&sim, cfg.normalization.laplacian_kind())?;
            let es = lap.eigensystem(cfg.eigen_index)?;
            let lambda = es.values[index];
            let v = &es.vectors[index];

            let mut regime = limit_regime;
            if cfg.normalization == Normalization::Unnormalized {
                let region = estimate_critical_region(&lap.degrees, n, cfg.margin)?;
                if classify(lambda, &region).is_unreliable() {
                    regime = Regime::InconsistentRegime;
                }
            }

            let (mut eigvec_sup_error, mut sign) = (None, 0i8);
            if cfg.compare_eigenvectors && regime == Regime::Consistent {
                let f: Vec<f64> = s.points.iter().map(|&x| spec.eval(index, x)).collect();
                let fn_norm = norm2(&f);
                if fn_norm > 0.0 {
                    let unit: Vec<f64> = f.iter().map(|x| x / fn_norm).collect();
                    let (a, aligned) = align_sign(v, &unit);
                    let scale = (n as f64).sqrt();
                    let err = aligned
                        .iter()
                        .zip(&f)
                        .map(|(vi, fi)| (scale * vi - fi).abs())
                        .fold(0.0, f64::max);
                    eigvec_sup_error = Some(err);
                    sign = a as i8;
                }
            }

            let ops = SampleOperators::new(&s, kernel)?;
            let sup_dev = sup_deviation(&ops, &sup_probes, &sup_reference);
            let class_sup = oracle
                .as_ref()
                .map(|o| o.supremum(kernel, &degree, &spec, index, &s).max(sup_dev));

            Ok(ConvergenceRecord {
                n,
                rep,
                seed,
                lambda2_sample: lambda,
                lambda2_limit: lambda_limit,
                eigvec_sup_error,
                sign,
                ipr: ipr(v)?,
                regime,
                sup_deviation: Some(sup_dev),
                class_supremum: class_sup,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ConvergenceSeries {
        scenario: scenario.id.clone(),
        config: cfg.clone(),
        limit_regime,
        records,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupDeviationRecord {
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub sup_deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupDeviationSeries {
    pub scenario: String,
    pub seed: u64,
    pub grid_n: usize,
    pub records: Vec<SupDeviationRecord>,
}

impl SupDeviationSeries {
    pub fn samples(&self) -> Vec<(usize, f64)> {
        self.records.iter().map(|r| (r.n, r.sup_deviation)).collect()
    }

    pub fn medians(&self) -> Vec<(usize, f64)> {
        group_medians(&self.samples())
    }
}

/// `sup_x |d_n(x) - d(x)|` on a 2000-point probe grid for every
/// `(n, rep)`. Uses the same per-repetition seeds as [`run_convergence`].
pub fn empirical_sup_deviation(
    scenario: &Scenario,
    n_list: &[usize],
    reps: usize,
    seed: u64,
    grid_n: usize,
) -> Result<SupDeviationSeries> {
    if n_list.len() < 4 || n_list.windows(2).any(|w| w[0] >= w[1]) || n_list[0] < 2 || reps == 0 {
        return Err(Error::Argument("need at least 4 strictly increasing sample sizes >= 2 and reps >= 1".into()));
    }
    let grid = build_grid(&scenario.density, grid_n)?;
    let degree = scenario.degree_function(&grid)?;
    let probes = scenario.kernel.support.probes(SUP_PROBES);
    let reference: Vec<f64> = probes.iter().map(|&x| degree.eval_unchecked(x)).collect();
    let jobs: Vec<(usize, usize, usize)> = n_list
        .iter()
        .enumerate()
        .flat_map(|(ni, &n)| (0..reps).map(move |rep| (ni, n, rep)))
        .collect();
    let records = jobs
        .into_par_iter()
        .map(|(ni, n, rep)| {
            let seed = rep_seed(seed, ni, rep);
            let s = sample(&scenario.density, n, seed)?;
            let ops = SampleOperators::new(&s, &scenario.kernel)?;
            Ok(SupDeviationRecord {
                n,
                rep,
                seed,
                sup_deviation: sup_deviation(&ops, &probes, &reference),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SupDeviationSeries {
        scenario: scenario.id.clone(),
        seed,
        grid_n,
        records,
    })
}

/// Spectrum of one Laplacian flavour on one sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigurePanel {
    pub kernel: KernelKind,
    pub normalization: Normalization,
    /// First ten eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors 1–5 as used for clustering: eigenvectors of `L_n / n`,
    /// or of the random-walk Laplacian for the normalized flavour.
    pub eigenvectors: Vec<Vec<f64>>,
    /// First ten eigenvalues classified against `region`, with IPRs.
    pub report: SpectrumReport,
    /// `[min d_i/n, max d_i/n]` for the unnormalized flavour, the point
    /// `{1}` for the normalized one.
    pub region: CriticalRegion,
    /// `min_i d_i / n`.
    pub min_degree: f64,
    /// Eigenvalues of the whole spectrum below the region beyond the margin.
    pub count_below: usize,
}

impl FigurePanel {
    pub fn sigma(&self) -> Option<f64> {
        match self.kernel {
            KernelKind::Gaussian { sigma } => Some(sigma),
            _ => None,
        }
    }
}

pub const PANEL_EIGENVALUES: usize = 10;
pub const PANEL_EIGENVECTORS: usize = 5;

pub fn spectrum_panel(s: &SampleSet, kernel: &KernelSpec, normalization: Normalization, margin: f64) -> Result<FigurePanel> {
    let n = s.len();
    let sim = build_similarity(s, kernel)?;
    let kind = match normalization {
        Normalization::Unnormalized => LaplacianKind::UnnormScaled,
        Normalization::Normalized => LaplacianKind::RwNorm,
    };
    let lap = build_laplacian(&sim, kind)?;
    let all = lap.eigensystem(n)?;
    let sample_region = estimate_critical_region(&lap.degrees, n, margin)?;
    let region = match normalization {
        Normalization::Unnormalized => sample_region,
        Normalization::Normalized => CriticalRegion { lo: 1.0, hi: 1.0, margin },
    };
    let full = classify_eigenvalues(&all, &region)?;
    let count_below = full.count_below();
    let keep = PANEL_EIGENVALUES.min(n);
    Ok(FigurePanel {
        kernel: kernel.kind,
        normalization,
        eigenvalues: all.values[..keep].to_vec(),
        eigenvectors: all.vectors[..PANEL_EIGENVECTORS.min(n)].to_vec(),
        report: SpectrumReport {
            region,
            records: full.records[..keep].to_vec(),
        },
        region,
        min_degree: sample_region.lo,
        count_below,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureData {
    pub seed: u64,
    pub points: Vec<f64>,
    pub components: Vec<usize>,
    pub panels: Vec<FigurePanel>,
}

impl FigureData {
    pub fn panel(&self, sigma: f64, normalization: Normalization) -> Option<&FigurePanel> {
        self.panels
            .iter()
            .find(|p| p.sigma() == Some(sigma) && p.normalization == normalization)
    }
}

/// Both flavours for every width in [`FIGURE_SIGMAS`] on one shared
/// 200-point four-Gaussian sample.
pub fn run_figures(seed: u64, margin: f64) -> Result<FigureData> {
    run_figures_with(seed, &FIGURE_SIGMAS, FIGURE_POINTS, margin)
}

pub fn run_figures_with(seed: u64, sigmas: &[f64], n: usize, margin: f64) -> Result<FigureData> {
    let density = Density::four_gaussians();
    let s = sample(&density, n, seed)?;
    let mut panels = Vec::new();
    for &sigma in sigmas {
        let kernel = KernelSpec::gaussian(sigma, density.support())?;
        for normalization in [Normalization::Unnormalized, Normalization::Normalized] {
            panels.push(spectrum_panel(&s, &kernel, normalization, margin)?);
        }
    }
    Ok(FigureData {
        seed,
        points: s.points,
        components: s.components,
        panels,
    })
}

/// Fraction of each mixture component's points that carry label 1.
pub fn component_fractions(labels: &[u8], components: &[usize], k: usize) -> Vec<f64> {
    let mut ones = vec![0usize; k];
    let mut total = vec![0usize; k];
    for (&l, &c) in labels.iter().zip(components) {
        total[c] += 1;
        ones[c] += usize::from(l == 1);
    }
    ones.iter()
        .zip(&total)
        .map(|(&o, &t)| if t == 0 { f64::NAN } else { o as f64 / t as f64 })
        .collect()
}

/// True when each side of the split holds at least `purity` of exactly two
/// of four components.
pub fn splits_into_pairs(fractions: &[f64], purity: f64) -> bool {
    let ones = fractions.iter().filter(|&&f| f >= purity).count();
    let zeros = fractions.iter().filter(|&&f| f <= 1.0 - purity).count();
    fractions.len() == 4 && ones == 2 && zeros == 2
}

/// Share of points on the wrong side when `group` (component indices) is
/// meant to be the label-1 side, minimized over the two label orientations.
pub fn misassignment(labels: &[u8], components: &[usize], group: &[usize]) -> f64 {
    let wrong = labels
        .iter()
        .zip(components)
        .filter(|(&l, c)| (l == 1) != group.contains(c))
        .count();
    let frac = wrong as f64 / labels.len() as f64;
    frac.min(1.0 - frac)
}
