//! Data space, probability measure and similarity function: densities on a
//! compact interval, seeded samplers, kernels with their bounds, and the
//! quadrature grids that stand in for the measure in the limit operators.

use crate::error::{Error, Result};
use crate::quadrature;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

/// The generator used for every random draw in the crate.
pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Closed interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Argument(format!("support [{lo}, {hi}] is not a proper interval")));
        }
        Ok(Support { lo, hi })
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// `count` equally spaced points including both endpoints.
    pub fn probes(&self, count: usize) -> Vec<f64> {
        match count {
            0 => Vec::new(),
            1 => vec![0.5 * (self.lo + self.hi)],
            _ => (0..count)
                .map(|i| self.lo + self.width() * i as f64 / (count - 1) as f64)
                .collect(),
        }
    }

    fn check(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{x} is outside the support [{}, {}]", self.lo, self.hi)))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum DensityKind {
    /// `s` on `[4/3, 5/3)`, `(3 - s)/2` elsewhere on `[1, 2]`.
    PiecewiseExample2 { s: f64 },
    GaussianMixture {
        means: Vec<f64>,
        stds: Vec<f64>,
        weights: Vec<f64>,
    },
}

/// A probability density on a compact interval.
///
/// Mixtures are truncated to the support and renormalized; the sampler
/// redraws out-of-support points, so samples follow exactly this density.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Density {
    kind: DensityKind,
    support: Support,
    /// Mixture mass inside the support before truncation (1 for the
    /// piecewise density).
    mass: f64,
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

impl Density {
    pub fn example2(s: f64) -> Result<Self> {
        if !(s > 0.0 && s < 3.0) {
            return Err(Error::Argument(format!("example-2 density needs 0 < s < 3, got {s}")));
        }
        Ok(Density {
            kind: DensityKind::PiecewiseExample2 { s },
            support: Support { lo: 1.0, hi: 2.0 },
            mass: 1.0,
        })
    }

    pub fn gaussian_mixture(means: Vec<f64>, stds: Vec<f64>, weights: Vec<f64>, support: Support) -> Result<Self> {
        if means.is_empty() || means.len() != stds.len() || means.len() != weights.len() {
            return Err(Error::Argument("mixture needs equally many means, stds and weights".into()));
        }
        if stds.iter().any(|&s| !(s > 0.0 && s.is_finite())) {
            return Err(Error::Argument("mixture standard deviations must be positive".into()));
        }
        if weights.iter().any(|&w| !(w >= 0.0)) {
            return Err(Error::Argument("mixture weights must be nonnegative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Argument(format!("mixture weights sum to {total}, not 1")));
        }
        let mass: f64 = means
            .iter()
            .zip(&stds)
            .zip(&weights)
            .map(|((m, s), w)| w * (normal_cdf((support.hi - m) / s) - normal_cdf((support.lo - m) / s)))
            .sum();
        if !(mass > 0.0) {
            return Err(Error::Argument("mixture puts no mass on its support".into()));
        }
        Ok(Density {
            kind: DensityKind::GaussianMixture { means, stds, weights },
            support,
            mass,
        })
    }

    /// Four equally weighted Gaussians at 2, 4, 6, 8 with standard deviation
    /// 0.25, on the support `[0, 10]`.
    pub fn four_gaussians() -> Self {
        Density::gaussian_mixture(
            vec![2.0, 4.0, 6.0, 8.0],
            vec![0.25; 4],
            vec![0.25; 4],
            Support { lo: 0.0, hi: 10.0 },
        )
        .expect("fixed mixture parameters are valid")
    }

    pub fn kind(&self) -> &DensityKind {
        &self.kind
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn components(&self) -> usize {
        match &self.kind {
            DensityKind::PiecewiseExample2 { .. } => 1,
            DensityKind::GaussianMixture { means, .. } => means.len(),
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        self.support.check(x)?;
        Ok(self.pdf_unchecked(x))
    }

    pub(crate) fn pdf_unchecked(&self, x: f64) -> f64 {
        match &self.kind {
            DensityKind::PiecewiseExample2 { s } => {
                if (4.0 / 3.0..5.0 / 3.0).contains(&x) {
                    *s
                } else {
                    (3.0 - s) / 2.0
                }
            }
            DensityKind::GaussianMixture { means, stds, weights } => {
                let norm = (2.0 * std::f64::consts::PI).sqrt();
                let raw: f64 = means
                    .iter()
                    .zip(stds)
                    .zip(weights)
                    .map(|((m, sd), w)| {
                        let z = (x - m) / sd;
                        w * (-0.5 * z * z).exp() / (sd * norm)
                    })
                    .sum();
                raw / self.mass
            }
        }
    }

    /// Points where the density is not smooth, plus the support ends.
    fn breakpoints(&self) -> Vec<f64> {
        match &self.kind {
            DensityKind::PiecewiseExample2 { .. } => vec![1.0, 4.0 / 3.0, 5.0 / 3.0, 2.0],
            DensityKind::GaussianMixture { .. } => self.support.probes(65),
        }
    }

    /// Integrates `f * pdf` over the support by adaptive quadrature on the
    /// smooth pieces of the density.
    pub fn expectation(&self, f: impl Fn(f64) -> f64, rel_tol: f64) -> Result<f64> {
        let cuts = self.breakpoints();
        let mut total = 0.0;
        for w in cuts.windows(2) {
            total += quadrature::integrate(|x| f(x) * self.pdf_unchecked(x), w[0], w[1], rel_tol, 1e-15)?;
        }
        Ok(total)
    }

    /// `|∫ p - 1|` over the support.
    pub fn normalization_error(&self) -> Result<f64> {
        Ok((self.expectation(|_| 1.0, 1e-13)? - 1.0).abs())
    }

    fn draw(&self, rng: &mut SampleRng) -> (f64, usize) {
        match &self.kind {
            DensityKind::PiecewiseExample2 { s } => {
                let outer = (3.0 - s) / 2.0;
                let m1 = outer / 3.0;
                let m2 = s / 3.0;
                let u: f64 = rng.random();
                let x = if u < m1 {
                    1.0 + u / outer
                } else if u < m1 + m2 {
                    4.0 / 3.0 + (u - m1) / s
                } else {
                    5.0 / 3.0 + (u - m1 - m2) / outer
                };
                (x.clamp(1.0, 2.0), 0)
            }
            DensityKind::GaussianMixture { means, stds, weights } => loop {
                let u: f64 = rng.random();
                let mut acc = 0.0;
                let mut comp = weights.len() - 1;
                for (k, w) in weights.iter().enumerate() {
                    acc += w;
                    if u < acc {
                        comp = k;
                        break;
                    }
                }
                let x = Normal::new(means[comp], stds[comp])
                    .expect("validated at construction")
                    .sample(rng);
                if self.support.contains(x) {
                    break (x, comp);
                }
            },
        }
    }
}

/// `n` independent draws from a density together with their provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSet {
    pub points: Vec<f64>,
    pub seed: u64,
    pub density: Density,
    /// Generating mixture component of each point (all zero for the
    /// piecewise density).
    pub components: Vec<usize>,
}

impl SampleSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn sample(density: &Density, n: usize, seed: u64) -> Result<SampleSet> {
    if n < 2 {
        return Err(Error::Argument(format!("need at least 2 sample points, got {n}")));
    }
    let mut rng = rng_from_seed(seed);
    let (points, components) = (0..n).map(|_| density.draw(&mut rng)).unzip();
    Ok(SampleSet {
        points,
        seed,
        density: density.clone(),
        components,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum KernelKind {
    /// `exp(-(x - y)^2 / sigma^2)`
    Gaussian { sigma: f64 },
    /// `x * y`, only admissible on a positive support.
    Product,
    Constant { c: f64 },
}

/// A symmetric similarity function together with its lower bound `l` and
/// sup-norm on the support it was declared for.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelSpec {
    pub kind: KernelKind,
    pub support: Support,
    pub lower: f64,
    pub upper: f64,
}

impl KernelSpec {
    pub fn gaussian(sigma: f64, support: Support) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) {
            return Err(Error::Argument(format!("gaussian width must be positive, got {sigma}")));
        }
        let lower = (-(support.width() / sigma).powi(2)).exp();
        if !(lower > 0.0) {
            return Err(Error::Construction(format!(
                "gaussian kernel with sigma = {sigma} underflows to 0 across the support"
            )));
        }
        Ok(KernelSpec {
            kind: KernelKind::Gaussian { sigma },
            support,
            lower,
            upper: 1.0,
        })
    }

    pub fn product(support: Support) -> Result<Self> {
        if !(support.lo > 0.0) {
            return Err(Error::Construction(format!(
                "product kernel is not bounded away from 0 on [{}, {}]",
                support.lo, support.hi
            )));
        }
        Ok(KernelSpec {
            kind: KernelKind::Product,
            support,
            lower: support.lo * support.lo,
            upper: support.hi * support.hi,
        })
    }

    pub fn constant(c: f64, support: Support) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Argument(format!("constant kernel needs c > 0, got {c}")));
        }
        Ok(KernelSpec {
            kind: KernelKind::Constant { c },
            support,
            lower: c,
            upper: c,
        })
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        self.support.check(x)?;
        self.support.check(y)?;
        Ok(self.k(x, y))
    }

    #[inline]
    pub(crate) fn k(&self, x: f64, y: f64) -> f64 {
        match self.kind {
            KernelKind::Gaussian { sigma } => {
                let t = (x - y) / sigma;
                (-t * t).exp()
            }
            KernelKind::Product => x * y,
            KernelKind::Constant { c } => c,
        }
    }
}

/// Nodes and probability weights discretizing a density.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| x * w).sum()
    }
}

/// Midpoint rule on `n` uniform cells with weights proportional to the
/// density at the cell centres.
pub fn build_grid(density: &Density, n: usize) -> Result<QuadratureGrid> {
    if n < 16 {
        return Err(Error::Argument(format!("quadrature grid needs at least 16 nodes, got {n}")));
    }
    let sup = density.support();
    let h = sup.width() / n as f64;
    let nodes: Vec<f64> = (0..n).map(|i| sup.lo + (i as f64 + 0.5) * h).collect();
    let raw: Vec<f64> = nodes.iter().map(|&x| density.pdf_unchecked(x)).collect();
    let total: f64 = raw.iter().sum();
    let weights = raw.into_iter().map(|w| w / total).collect();
    Ok(QuadratureGrid { nodes, weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example2_pdf_values() {
        let d = Density::example2(0.3).unwrap();
        assert_eq!(d.pdf(1.5).unwrap(), 0.3);
        assert!((d.pdf(1.1).unwrap() - 1.35).abs() < 1e-15);
        assert!((d.pdf(2.0).unwrap() - 1.35).abs() < 1e-15);
        assert!(matches!(d.pdf(2.5), Err(Error::Domain(_))));
        assert!(Density::example2(3.0).is_err());
    }

    #[test]
    fn densities_integrate_to_one() {
        for d in [
            Density::example2(0.3).unwrap(),
            Density::example2(2.5).unwrap(),
            Density::four_gaussians(),
        ] {
            assert!(d.normalization_error().unwrap() < 1e-9);
        }
    }

    #[test]
    fn mixture_validation() {
        let sup = Support::new(0.0, 1.0).unwrap();
        assert!(Density::gaussian_mixture(vec![0.5], vec![0.1], vec![0.9], sup).is_err());
        assert!(Density::gaussian_mixture(vec![0.5], vec![-0.1], vec![1.0], sup).is_err());
        assert!(Density::gaussian_mixture(vec![0.5, 0.2], vec![0.1], vec![1.0], sup).is_err());
    }

    #[test]
    fn sampling_is_seeded() {
        let d = Density::example2(0.3).unwrap();
        let a = sample(&d, 5, 42).unwrap();
        let b = sample(&d, 5, 42).unwrap();
        assert_eq!(a.points, b.points);
        assert_ne!(a.points, sample(&d, 5, 43).unwrap().points);
        assert!(sample(&d, 1, 42).is_err());
    }

    #[test]
    fn mixture_samples_in_support() {
        let d = Density::four_gaussians();
        let s = sample(&d, 200, 9).unwrap();
        assert!(s.points.iter().all(|&x| (0.0..=10.0).contains(&x)));
        // every point within 8 standard deviations of its component mean
        for (x, c) in s.points.iter().zip(&s.components) {
            assert!((x - (2.0 + 2.0 * *c as f64)).abs() <= 8.0 * 0.25);
        }
    }

    #[test]
    fn example2_sample_mean() {
        let d = Density::example2(0.3).unwrap();
        let s = sample(&d, 10_000, 1).unwrap();
        let mean = s.points.iter().sum::<f64>() / s.len() as f64;
        assert!((mean - 1.5).abs() < 0.02, "mean {mean}");
        assert!(s.points.iter().all(|&x| (1.0..=2.0).contains(&x)));
    }

    #[test]
    fn kernel_values() {
        let sup = Support::new(0.0, 10.0).unwrap();
        let g = KernelSpec::gaussian(2.0, sup).unwrap();
        assert!((g.eval(2.0, 4.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(g.eval(3.3, 3.3).unwrap(), 1.0);
        assert!((g.lower - (-25.0f64).exp()).abs() < 1e-25);
        let p = KernelSpec::product(Support::new(1.0, 2.0).unwrap()).unwrap();
        assert_eq!(p.eval(1.5, 2.0).unwrap(), 3.0);
        assert_eq!((p.lower, p.upper), (1.0, 4.0));
        assert!(p.eval(0.5, 1.0).is_err());
        assert!(KernelSpec::product(sup).is_err());
    }

    #[test]
    fn grid_moments() {
        let g = build_grid(&Density::example2(0.3).unwrap(), 1000).unwrap();
        assert!((g.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((g.mean() - 1.5).abs() < 1e-3);
        assert!(g.nodes.windows(2).all(|w| w[0] < w[1]));
        let m = build_grid(&Density::four_gaussians(), 2000).unwrap();
        assert!((m.mean() - 5.0).abs() < 1e-2);
        assert!(build_grid(&Density::four_gaussians(), 15).is_err());
    }
}
