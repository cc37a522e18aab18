//! Population-limit side: the degree function, the limit operators
//! `T` (normalized) and `U = M_d - S` (unnormalized) discretized on a
//! quadrature grid, the empirical operators `U_n` and `U'_n` acting on
//! functions, eigenfunction extension from a sample eigenvector to the
//! whole space, and the closed-form degenerate example on `[1, 2]`.

use crate::error::{Error, Result};
use crate::linalg::{eig_sym, EigenSystem, Matrix};
use crate::model::{Density, DensityKind, KernelKind, KernelSpec, QuadratureGrid, SampleSet, Support};
use serde::{Deserialize, Serialize};

/// Margin by which an eigenvalue must avoid the essential spectrum before
/// an extension is attempted.
pub const ESSENTIAL_MARGIN: f64 = 1e-6;

/// Probe count used to estimate the range of the empirical degree function.
const RANGE_PROBES: usize = 1000;

/// `d(x) = ∫ k(x, y) dP(y)`.
#[derive(Clone, Debug)]
pub enum DegreeFunction {
    /// `d(x) = 1.5 x` for the product kernel under the example-2 density.
    AnalyticExample2,
    Quadrature { kernel: KernelSpec, grid: QuadratureGrid },
}

pub enum DegreeSource<'a> {
    Density(&'a Density),
    Grid(&'a QuadratureGrid),
}

pub fn degree_function(kernel: &KernelSpec, source: DegreeSource<'_>) -> Result<DegreeFunction> {
    match source {
        DegreeSource::Density(d) => {
            if kernel.kind != KernelKind::Product {
                return Err(Error::Argument("the analytic degree function needs the product kernel".into()));
            }
            if !matches!(d.kind(), DensityKind::PiecewiseExample2 { .. }) {
                return Err(Error::Argument("the analytic degree function needs the example-2 density".into()));
            }
            Ok(DegreeFunction::AnalyticExample2)
        }
        DegreeSource::Grid(g) => Ok(DegreeFunction::Quadrature {
            kernel: *kernel,
            grid: g.clone(),
        }),
    }
}

impl DegreeFunction {
    pub fn support(&self) -> Support {
        match self {
            DegreeFunction::AnalyticExample2 => Support { lo: 1.0, hi: 2.0 },
            DegreeFunction::Quadrature { kernel, .. } => kernel.support,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let sup = self.support();
        if !sup.contains(x) {
            return Err(Error::Domain(format!("{x} is outside [{}, {}]", sup.lo, sup.hi)));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: f64) -> f64 {
        match self {
            DegreeFunction::AnalyticExample2 => 1.5 * x,
            DegreeFunction::Quadrature { kernel, grid } => grid
                .nodes
                .iter()
                .zip(&grid.weights)
                .map(|(&y, &w)| kernel.k(x, y) * w)
                .sum(),
        }
    }
}

/// `[inf d, sup d]`, the essential spectrum of the unnormalized limit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EssentialRange {
    pub lo: f64,
    pub hi: f64,
}

pub fn essential_range(d: &DegreeFunction, probes: usize) -> Result<EssentialRange> {
    if probes < 100 {
        return Err(Error::Argument(format!("need at least 100 probes, got {probes}")));
    }
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for x in d.support().probes(probes) {
        let v = d.eval_unchecked(x);
        lo = lo.min(v);
        hi = hi.max(v);
    }
    Ok(EssentialRange { lo, hi })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitKind {
    /// `T f = ∫ h(·, y) f(y) dP(y)` with `h = k / sqrt(d ⊗ d)`.
    NormalizedT,
    /// `U f = d f - ∫ k(·, y) f(y) dP(y)`.
    UnnormalizedU,
}

/// A limit operator on a quadrature grid, conjugated by `diag(sqrt(w))`
/// into a symmetric matrix with the same spectrum.
#[derive(Clone, Debug)]
pub struct LimitOperatorDisc {
    pub kind: LimitKind,
    pub grid: QuadratureGrid,
    pub matrix: Matrix,
    /// `d` at the grid nodes.
    pub degrees: Vec<f64>,
}

pub fn build_limit(kind: LimitKind, kernel: &KernelSpec, grid: &QuadratureGrid) -> Result<LimitOperatorDisc> {
    let x = &grid.nodes;
    let n = x.len();
    let sw: Vec<f64> = grid.weights.iter().map(|w| w.sqrt()).collect();
    let degrees: Vec<f64> = x
        .iter()
        .map(|&xi| x.iter().zip(&grid.weights).map(|(&y, &w)| kernel.k(xi, y) * w).sum())
        .collect();
    if let Some(i) = degrees.iter().position(|&d| d < kernel.lower * (1.0 - 1e-12)) {
        return Err(Error::Construction(format!(
            "degree {} at node {} is below the kernel lower bound {}",
            degrees[i], x[i], kernel.lower
        )));
    }
    let matrix = match kind {
        LimitKind::NormalizedT => {
            let sd: Vec<f64> = degrees.iter().map(|d| d.sqrt()).collect();
            Matrix::symmetric_from_fn(n, |i, j| sw[i] * kernel.k(x[i], x[j]) / (sd[i] * sd[j]) * sw[j])
        }
        LimitKind::UnnormalizedU => Matrix::symmetric_from_fn(n, |i, j| {
            let s = sw[i] * kernel.k(x[i], x[j]) * sw[j];
            if i == j {
                degrees[i] - s
            } else {
                -s
            }
        }),
    };
    Ok(LimitOperatorDisc {
        kind,
        grid: grid.clone(),
        matrix,
        degrees,
    })
}

/// Leading eigenpairs of a limit operator, expressed for `U' = I - T` or
/// `U` with eigenfunctions sampled at the grid nodes.
#[derive(Clone, Debug)]
pub struct LimitSpectrum {
    pub kind: LimitKind,
    pub nodes: Vec<f64>,
    /// Ascending eigenvalues of `U'` (as `1 - μ`) or `U`.
    pub values: Vec<f64>,
    /// Node values, normalized to unit `L²(P)` norm under the grid weights.
    pub functions: Vec<Vec<f64>>,
    pub degenerate: Vec<bool>,
    /// Eigensystem of the symmetric matrix that was decomposed.
    pub system: EigenSystem,
}

impl LimitSpectrum {
    /// Piecewise-linear interpolation of eigenfunction `index` at `x`,
    /// extrapolating linearly from the outermost cells.
    pub fn eval(&self, index: usize, x: f64) -> f64 {
        interpolate(&self.nodes, &self.functions[index], x)
    }
}

pub(crate) fn interpolate(nodes: &[f64], values: &[f64], x: f64) -> f64 {
    let n = nodes.len();
    if n == 1 {
        return values[0];
    }
    let hi = nodes.partition_point(|&t| t < x).clamp(1, n - 1);
    let lo = hi - 1;
    let t = (x - nodes[lo]) / (nodes[hi] - nodes[lo]);
    values[lo] + t * (values[hi] - values[lo])
}

pub fn limit_eigs(op: &LimitOperatorDisc, r: usize) -> Result<LimitSpectrum> {
    let system = match op.kind {
        LimitKind::NormalizedT => {
            let n = op.matrix.dim();
            let shifted = Matrix::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 } - op.matrix[(i, j)]);
            eig_sym(&shifted, r)?
        }
        LimitKind::UnnormalizedU => eig_sym(&op.matrix, r)?,
    };
    let functions = system
        .vectors
        .iter()
        .map(|u| {
            u.iter()
                .zip(&op.grid.weights)
                .map(|(ui, w)| if *w > 0.0 { ui / w.sqrt() } else { 0.0 })
                .collect()
        })
        .collect();
    Ok(LimitSpectrum {
        kind: op.kind,
        nodes: op.grid.nodes.clone(),
        values: system.values.clone(),
        functions,
        degenerate: system.degenerate.clone(),
        system,
    })
}

/// The empirical operators `U_n` and `U'_n` of a fixed sample, applied to
/// functions on the whole support.
#[derive(Clone, Debug)]
pub struct SampleOperators {
    pub points: Vec<f64>,
    pub kernel: KernelSpec,
    /// `d_n(X_j)`.
    pub point_degrees: Vec<f64>,
}

impl SampleOperators {
    pub fn new(sample: &SampleSet, kernel: &KernelSpec) -> Result<Self> {
        for &p in &sample.points {
            kernel.eval(p, p)?;
        }
        let mut ops = SampleOperators {
            points: sample.points.clone(),
            kernel: *kernel,
            point_degrees: Vec::new(),
        };
        ops.point_degrees = sample.points.iter().map(|&x| ops.degree(x)).collect();
        Ok(ops)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `d_n(x) = (1/n) Σ_j k(x, X_j)`.
    pub fn degree(&self, x: f64) -> f64 {
        self.points.iter().map(|&y| self.kernel.k(x, y)).sum::<f64>() / self.n() as f64
    }

    /// `h_n(x, X_j)` for every sample point.
    fn normalized_row(&self, x: f64) -> Vec<f64> {
        let dx = self.degree(x);
        self.points
            .iter()
            .zip(&self.point_degrees)
            .map(|(&y, &dy)| self.kernel.k(x, y) / (dx * dy).sqrt())
            .collect()
    }

    /// `U_n f (x) = d_n(x) f(x) - (1/n) Σ_j k(x, X_j) f(X_j)`.
    pub fn apply_unnormalized(&self, f: impl Fn(f64) -> f64, x: f64) -> f64 {
        let values: Vec<f64> = self.points.iter().map(|&y| f(y)).collect();
        self.unnormalized_with(&values, f(x), x)
    }

    /// `U_n f (x)` given `f` at the sample points and at `x`.
    fn unnormalized_with(&self, values: &[f64], fx: f64, x: f64) -> f64 {
        let n = self.n() as f64;
        let s: f64 = self.points.iter().zip(values).map(|(&y, v)| self.kernel.k(x, y) * v).sum();
        self.degree(x) * fx - s / n
    }

    /// `U'_n f (x) = f(x) - (1/n) Σ_j h_n(x, X_j) f(X_j)`.
    pub fn apply_normalized(&self, f: impl Fn(f64) -> f64, x: f64) -> f64 {
        let values: Vec<f64> = self.points.iter().map(|&y| f(y)).collect();
        self.normalized_with(&values, f(x), x)
    }

    fn normalized_with(&self, values: &[f64], fx: f64, x: f64) -> f64 {
        let n = self.n() as f64;
        let row = self.normalized_row(x);
        let s: f64 = row.iter().zip(values).map(|(h, v)| h * v).sum();
        fx - s / n
    }

    /// Sampled estimate of `[min d_n, max d_n]` over the support and the
    /// sample points.
    pub fn degree_range(&self) -> EssentialRange {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for x in self.kernel.support.probes(RANGE_PROBES).into_iter().chain(self.points.iter().copied()) {
            let v = self.degree(x);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        EssentialRange { lo, hi }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtensionKind {
    /// `f(x) = (1/n) Σ_j h_n(x, X_j) v_j / (1 - λ)`
    NormalizedEq1,
    /// `f(x) = (1/n) Σ_j k(x, X_j) v_j / (d_n(x) - λ)`
    UnnormalizedEq2,
}

/// An eigenfunction of `U_n` or `U'_n` reconstructed from a sample
/// eigenvector.
#[derive(Clone, Debug)]
pub struct ExtensionFunction {
    pub ops: SampleOperators,
    pub coefficients: Vec<f64>,
    pub lambda: f64,
    pub kind: ExtensionKind,
}

/// Extends an eigenpair `(λ, v)` of `L'_n` (symmetric normalized Laplacian
/// coordinates) to an eigenfunction of `U'_n`.
pub fn extend_normalized(sample: &SampleSet, kernel: &KernelSpec, v: &[f64], lambda: f64) -> Result<ExtensionFunction> {
    if v.len() != sample.len() {
        return Err(Error::Argument("eigenvector length differs from the sample size".into()));
    }
    if (1.0 - lambda).abs() < ESSENTIAL_MARGIN {
        return Err(Error::EssentialSpectrum {
            lambda,
            lo: 1.0,
            hi: 1.0,
            margin: ESSENTIAL_MARGIN,
        });
    }
    Ok(ExtensionFunction {
        ops: SampleOperators::new(sample, kernel)?,
        coefficients: v.to_vec(),
        lambda,
        kind: ExtensionKind::NormalizedEq1,
    })
}

/// Extends an eigenpair `(λ, v)` of `L_n / n` to an eigenfunction of `U_n`.
pub fn extend_unnormalized(sample: &SampleSet, kernel: &KernelSpec, v: &[f64], lambda: f64) -> Result<ExtensionFunction> {
    if v.len() != sample.len() {
        return Err(Error::Argument("eigenvector length differs from the sample size".into()));
    }
    let ops = SampleOperators::new(sample, kernel)?;
    let range = ops.degree_range();
    if lambda > range.lo - ESSENTIAL_MARGIN && lambda < range.hi + ESSENTIAL_MARGIN {
        return Err(Error::EssentialSpectrum {
            lambda,
            lo: range.lo,
            hi: range.hi,
            margin: ESSENTIAL_MARGIN,
        });
    }
    Ok(ExtensionFunction {
        ops,
        coefficients: v.to_vec(),
        lambda,
        kind: ExtensionKind::UnnormalizedEq2,
    })
}

impl ExtensionFunction {
    pub fn eval(&self, x: f64) -> Result<f64> {
        let sup = self.ops.kernel.support;
        if !sup.contains(x) {
            return Err(Error::Domain(format!("{x} is outside [{}, {}]", sup.lo, sup.hi)));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: f64) -> f64 {
        let n = self.ops.n() as f64;
        match self.kind {
            ExtensionKind::NormalizedEq1 => {
                let row = self.ops.normalized_row(x);
                let s: f64 = row.iter().zip(&self.coefficients).map(|(h, v)| h * v).sum();
                s / n / (1.0 - self.lambda)
            }
            ExtensionKind::UnnormalizedEq2 => {
                let s: f64 = self
                    .ops
                    .points
                    .iter()
                    .zip(&self.coefficients)
                    .map(|(&y, v)| self.ops.kernel.k(x, y) * v)
                    .sum();
                s / n / (self.ops.degree(x) - self.lambda)
            }
        }
    }

    /// `max_i |f(X_i) - v_i|`.
    pub fn round_trip_error(&self) -> f64 {
        self.ops
            .points
            .iter()
            .zip(&self.coefficients)
            .map(|(&x, v)| (self.eval_unchecked(x) - v).abs())
            .fold(0.0, f64::max)
    }

    /// `max |A f - λ f|` over the probes, where `A` is `U_n` or `U'_n`.
    pub fn residual(&self, probes: &[f64]) -> f64 {
        let values: Vec<f64> = self.ops.points.iter().map(|&y| self.eval_unchecked(y)).collect();
        probes
            .iter()
            .map(|&x| {
                let fx = self.eval_unchecked(x);
                let af = match self.kind {
                    ExtensionKind::NormalizedEq1 => self.ops.normalized_with(&values, fx, x),
                    ExtensionKind::UnnormalizedEq2 => self.ops.unnormalized_with(&values, fx, x),
                };
                (af - self.lambda * fx).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// `g(λ) = ∫ y² / (1.5 y - λ) p(y) dy` for the example-2 density; `λ` is an
/// eigenvalue of `U` outside `[1.5, 3]` exactly when `g(λ) = 1`.
pub fn example2_g(lambda: f64, s: f64) -> Result<f64> {
    if (1.5..=3.0).contains(&lambda) {
        return Err(Error::Domain(format!("{lambda} lies in the continuous spectrum [1.5, 3]")));
    }
    let density = Density::example2(s)?;
    density.expectation(|y| y * y / (1.5 * y - lambda), 1e-12)
}

const ROOT_SCAN_STEP: f64 = 1e-2;
const ROOT_SCAN_LO: f64 = -100.0;
const ROOT_SCAN_HI: f64 = 100.0;
// Keeps the scan off the log singularity at the edges of [1.5, 3].
const ROOT_SCAN_EDGE: f64 = 1e-3;

/// All solutions of `g(λ) = 1` on `[-100, 1.5) ∪ (3, 100]`, by a bracket scan
/// followed by bisection.
pub fn example2_roots(s: f64) -> Result<Vec<f64>> {
    Density::example2(s)?;
    let h = |l: f64| example2_g(l, s).map(|g| g - 1.0);
    let mut roots = Vec::new();
    for (lo, hi) in [
        (ROOT_SCAN_LO, 1.5 - ROOT_SCAN_EDGE),
        (3.0 + ROOT_SCAN_EDGE, ROOT_SCAN_HI),
    ] {
        let steps = ((hi - lo) / ROOT_SCAN_STEP).ceil() as usize;
        let at = |k: usize| if k == steps { hi } else { lo + k as f64 * ROOT_SCAN_STEP };
        let mut prev_x = at(0);
        let mut prev = h(prev_x)?;
        if prev == 0.0 {
            roots.push(prev_x);
        }
        for k in 1..=steps {
            let x = at(k);
            let cur = h(x)?;
            if cur == 0.0 {
                roots.push(x);
            } else if prev != 0.0 && prev.signum() != cur.signum() {
                roots.push(bisect(&h, prev_x, x, prev)?);
            }
            prev_x = x;
            prev = cur;
        }
    }
    Ok(roots)
}

fn bisect(h: &impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, mut ha: f64) -> Result<f64> {
    while b - a > 1e-12 {
        let m = 0.5 * (a + b);
        let hm = h(m)?;
        if hm == 0.0 {
            return Ok(m);
        }
        if hm.signum() == ha.signum() {
            a = m;
            ha = hm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_grid, sample};
    use crate::spectral::{build_laplacian, build_similarity, LaplacianKind};

    fn example2() -> (Density, KernelSpec) {
        let d = Density::example2(0.3).unwrap();
        let k = KernelSpec::product(d.support()).unwrap();
        (d, k)
    }

    /// Closed-form antiderivative of `y² / (a y - λ)`.
    fn g_closed_form(lambda: f64, s: f64) -> f64 {
        let a: f64 = 1.5;
        let anti = |y: f64| y * y / (2.0 * a) + lambda * y / (a * a) + lambda * lambda / a.powi(3) * (a * y - lambda).abs().ln();
        let outer = (3.0 - s) / 2.0;
        outer * (anti(4.0 / 3.0) - anti(1.0)) + s * (anti(5.0 / 3.0) - anti(4.0 / 3.0)) + outer * (anti(2.0) - anti(5.0 / 3.0))
    }

    #[test]
    fn analytic_degree() {
        let (d, k) = example2();
        let f = degree_function(&k, DegreeSource::Density(&d)).unwrap();
        assert_eq!(f.eval(1.0).unwrap(), 1.5);
        assert_eq!(f.eval(2.0).unwrap(), 3.0);
        let g = KernelSpec::gaussian(1.0, d.support()).unwrap();
        assert!(matches!(degree_function(&g, DegreeSource::Density(&d)), Err(Error::Argument(_))));
        let r = essential_range(&f, 100).unwrap();
        assert_eq!((r.lo, r.hi), (1.5, 3.0));
        assert!(essential_range(&f, 99).is_err());
    }

    #[test]
    fn quadrature_degree_matches_analytic() {
        let (d, k) = example2();
        let grid = build_grid(&d, 4000).unwrap();
        let q = degree_function(&k, DegreeSource::Grid(&grid)).unwrap();
        for x in d.support().probes(100) {
            assert!((q.eval(x).unwrap() - 1.5 * x).abs() < 1e-3);
        }
    }

    #[test]
    fn constant_kernel_range() {
        let d = Density::four_gaussians();
        let k = KernelSpec::constant(0.4, d.support()).unwrap();
        let grid = build_grid(&d, 200).unwrap();
        let r = essential_range(&degree_function(&k, DegreeSource::Grid(&grid)).unwrap(), 100).unwrap();
        assert!((r.lo - 0.4).abs() < 1e-14 && (r.hi - 0.4).abs() < 1e-14);
    }

    #[test]
    fn g_against_closed_form() {
        for s in [0.3, 1.0, 2.5] {
            for lambda in [-50.0, -10.0, -1.0, 0.0, 0.7, 1.2, 1.49, 3.01, 5.0, 40.0] {
                let q = example2_g(lambda, s).unwrap();
                let exact = g_closed_form(lambda, s);
                assert!((q - exact).abs() <= 1e-10 * exact.abs(), "s={s} λ={lambda}: {q} vs {exact}");
            }
        }
        assert!(matches!(example2_g(2.0, 0.3), Err(Error::Domain(_))));
    }

    #[test]
    fn g_values() {
        for s in [0.3, 1.0, 2.5] {
            assert!((example2_g(0.0, s).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!(example2_g(1.0, 0.3).unwrap() > 1.0);
        let far = example2_g(-10.0, 0.3).unwrap();
        assert!(far > 0.0 && far < 1.0);
    }

    #[test]
    fn g_increasing_below_range() {
        let pts: Vec<f64> = (0..100).map(|i| -20.0 + 21.4 * i as f64 / 99.0).collect();
        let vals: Vec<f64> = pts.iter().map(|&l| example2_g(l, 0.3).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn eigencondition_residual() {
        // f(x) = β x / (d(x) - λ) at the root λ = 0.
        let (d, _) = example2();
        let lambda = 0.0;
        let f = |x: f64| x / (1.5 * x - lambda);
        let beta = d.expectation(|y| y * f(y), 1e-13).unwrap();
        let scaled = |x: f64| beta * f(x);
        for x in d.support().probes(200) {
            let r = 1.5 * x * scaled(x) - x * beta - lambda * scaled(x);
            assert!(r.abs() < 1e-8);
        }
    }

    #[test]
    fn normalized_limit_top_eigenpair() {
        let d = Density::four_gaussians();
        let k = KernelSpec::gaussian(2.0, d.support()).unwrap();
        let grid = build_grid(&d, 400).unwrap();
        let op = build_limit(LimitKind::NormalizedT, &k, &grid).unwrap();
        let u: Vec<f64> = grid.weights.iter().zip(&op.degrees).map(|(w, dg)| (w * dg).sqrt()).collect();
        let au = op.matrix.mul_vec(&u);
        for (a, b) in au.iter().zip(&u) {
            assert!((a - b).abs() < 1e-12);
        }
        let spec = limit_eigs(&op, 3).unwrap();
        assert!(spec.values[0].abs() < 1e-8);
        assert!(spec.values.iter().all(|&v| v >= -1e-10));
        // L²(P) normalization of the recovered functions
        let nrm: f64 = spec.functions[1].iter().zip(&grid.weights).map(|(f, w)| f * f * w).sum();
        assert!((nrm - 1.0).abs() < 1e-10);
    }

    #[test]
    fn unnormalized_limit_example2() {
        let (d, k) = example2();
        let grid = build_grid(&d, 400).unwrap();
        let op = build_limit(LimitKind::UnnormalizedU, &k, &grid).unwrap();
        let spec = limit_eigs(&op, 3).unwrap();
        assert!(spec.values[0].abs() < 1e-8);
        assert!(spec.values[1] >= 1.5 - 5e-3);
    }

    #[test]
    fn interpolation_is_linear() {
        let nodes = [0.0, 1.0, 2.0];
        let vals = [0.0, 2.0, 6.0];
        assert_eq!(interpolate(&nodes, &vals, 0.5), 1.0);
        assert_eq!(interpolate(&nodes, &vals, 1.5), 4.0);
        assert_eq!(interpolate(&nodes, &vals, 2.5), 8.0);
        assert_eq!(interpolate(&nodes, &vals, -0.5), -1.0);
    }

    #[test]
    fn normalized_extension_constant_for_trivial_pair() {
        let (d, k) = example2();
        let s = sample(&d, 60, 3).unwrap();
        let lap = build_laplacian(&build_similarity(&s, &k).unwrap(), LaplacianKind::SymNorm).unwrap();
        let es = lap.eigensystem(2).unwrap();
        let ext = extend_normalized(&s, &k, &es.vectors[0], es.values[0]).unwrap();
        assert!(ext.round_trip_error() < 1e-8);
        // λ = 0 eigenfunction of U'_n is sqrt(d_n) up to scale; divide it out.
        let probes = d.support().probes(50);
        let ratios: Vec<f64> = probes.iter().map(|&x| ext.eval(x).unwrap() / ext.ops.degree(x).sqrt()).collect();
        for r in &ratios {
            assert!((r - ratios[0]).abs() < 1e-8);
        }
        assert!(matches!(
            extend_normalized(&s, &k, &es.vectors[1], 1.0),
            Err(Error::EssentialSpectrum { .. })
        ));
    }

    #[test]
    fn unnormalized_extension_two_point_constant_kernel() {
        let d = Density::example2(0.3).unwrap();
        let k = KernelSpec::constant(0.8, d.support()).unwrap();
        let s = SampleSet {
            points: vec![1.2, 1.7],
            seed: 0,
            density: d.clone(),
            components: vec![0, 0],
        };
        let v = [1.0 / 2f64.sqrt(); 2];
        let ext = extend_unnormalized(&s, &k, &v, 0.0).unwrap();
        for x in d.support().probes(20) {
            assert!((ext.eval(x).unwrap() - v[0]).abs() < 1e-15);
        }
        assert!(matches!(
            extend_unnormalized(&s, &k, &v, 0.8),
            Err(Error::EssentialSpectrum { .. })
        ));
    }

    #[test]
    fn roots_example2() {
        for s in [0.3, 1.5] {
            let roots = example2_roots(s).unwrap();
            assert_eq!(roots.len(), 1, "{roots:?}");
            assert!(roots[0].abs() < 1e-9);
        }
    }

    #[test]
    fn g_negative_above_range() {
        for i in 0..50 {
            let l = 3.0 + 1e-3 + 97.0 * i as f64 / 49.0;
            assert!(example2_g(l, 0.3).unwrap() < 0.0);
        }
    }
}
