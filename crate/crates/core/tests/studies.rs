use speclab::diagnostics::DEFAULT_MARGIN;
use speclab::experiments::{
    component_fractions, empirical_sup_deviation, misassignment, run_convergence, run_figures, Regime, Scenario,
    StudyConfig, FIGURE_SEED, FIGURE_SIGMAS,
};
use speclab::limit::{build_limit, LimitKind};
use speclab::linalg::{eigvals_sym, Matrix};
use speclab::model::{build_grid, Density, KernelSpec, Support};
use speclab::spectral::{threshold_cluster, Normalization};
use speclab::Error;

#[test]
fn normalized_example2_is_rank_one() {
    // The product kernel normalizes to h = 1 on the diagonal of a rank-one
    // matrix, so every eigenvalue past the first equals 1 for all n.
    let scenario = Scenario::example2(0.3).unwrap();
    let mut cfg = StudyConfig::new(Normalization::Normalized, vec![100, 200, 400, 800, 1600], 3, 12);
    cfg.grid_n = 1000;
    let series = run_convergence(&scenario, &cfg).unwrap();
    assert_eq!(series.limit_regime, Regime::InconsistentRegime);
    for r in &series.records {
        assert!((r.lambda2_limit - 1.0).abs() < 1e-10);
        assert!(r.lambda_error() <= 1e-10, "n={} err={}", r.n, r.lambda_error());
        assert!(r.eigvec_sup_error.is_none() && r.sign == 0);
    }
}

#[test]
fn normalized_constant_kernel() {
    let scenario = Scenario::constant(0.7, Density::four_gaussians()).unwrap();
    let mut cfg = StudyConfig::new(Normalization::Normalized, vec![20, 40, 80, 160], 2, 3);
    cfg.grid_n = 400;
    let series = run_convergence(&scenario, &cfg).unwrap();
    for r in &series.records {
        assert!((r.lambda2_sample - 1.0).abs() <= 1e-8);
        assert!(r.lambda_error() <= 1e-8);
    }
}

#[test]
fn degenerate_limit_is_a_scenario_error() {
    // Nearly disconnected components make the bottom limit eigenvalues
    // numerically equal.
    let density = Density::gaussian_mixture(vec![1.0, 9.0], vec![0.25, 0.25], vec![0.5, 0.5], Support::new(0.0, 10.0).unwrap())
        .unwrap();
    let kernel = KernelSpec::gaussian(0.5, density.support()).unwrap();
    let scenario = Scenario::new("two-far-bumps", density, kernel).unwrap();
    let mut cfg = StudyConfig::new(Normalization::Normalized, vec![20, 40, 60, 80], 1, 3);
    cfg.grid_n = 400;
    let err = run_convergence(&scenario, &cfg).unwrap_err();
    assert!(matches!(err, Error::Scenario(_)), "{err}");
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn unnormalized_example2_second_eigenvalue_band() {
    let scenario = Scenario::example2(0.3).unwrap();
    let mut cfg = StudyConfig::new(Normalization::Unnormalized, vec![100, 200, 400, 1600], 10, 21);
    cfg.compare_eigenvectors = false;
    cfg.grid_n = 1000;
    let series = run_convergence(&scenario, &cfg).unwrap();
    for r in series.records_for(1600) {
        assert!((1.4..=1.75).contains(&r.lambda2_sample), "lambda2 = {}", r.lambda2_sample);
        assert_eq!(r.regime, Regime::InconsistentRegime);
        assert!(r.eigvec_sup_error.is_none());
    }
}

#[test]
fn normalized_mixture_eigenvectors_are_compared() {
    let scenario = Scenario::mixture(1.0).unwrap();
    let mut cfg = StudyConfig::new(Normalization::Normalized, vec![50, 100, 200, 400], 3, 8);
    cfg.grid_n = 1000;
    let series = run_convergence(&scenario, &cfg).unwrap();
    assert_eq!(series.limit_regime, Regime::Consistent);
    for r in &series.records {
        let e = r.eigvec_sup_error.unwrap();
        assert!(e.is_finite() && e > 0.0);
        assert!(r.sign == 1 || r.sign == -1);
    }
}

#[test]
fn sup_deviation_cases() {
    let constant = Scenario::constant(2.0, Density::example2(0.3).unwrap()).unwrap();
    let s = empirical_sup_deviation(&constant, &[10, 20, 40, 80], 3, 1, 200).unwrap();
    assert!(s.records.iter().all(|r| r.sup_deviation < 1e-12));

    let ex2 = Scenario::example2(0.3).unwrap();
    let s = empirical_sup_deviation(&ex2, &[100, 400, 1600, 6400], 20, 1, 200).unwrap();
    let med = s.medians();
    assert!(med.windows(2).all(|w| w[1].1 < w[0].1), "{med:?}");
}

#[test]
fn figure_panels() {
    let data = run_figures(FIGURE_SEED, DEFAULT_MARGIN).unwrap();
    for &sigma in &FIGURE_SIGMAS {
        let p = data.panel(sigma, Normalization::Unnormalized).unwrap();
        assert!(p.count_below <= 6, "sigma {sigma}: {} eigenvalues below the region", p.count_below);
        assert!(p.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(p.eigenvectors.len(), 5);
    }
    let p1 = data.panel(1.0, Normalization::Unnormalized).unwrap();
    let labels = threshold_cluster(&p1.eigenvectors[1], 0.0).labels;
    let wrong = misassignment(&labels, &data.components, &[0, 1]);
    assert!(wrong <= 0.05, "misassigned share {wrong}");
    let fr = component_fractions(&labels, &data.components, 4);
    assert!((fr[0] - fr[1]).abs() < 0.05 && (fr[2] - fr[3]).abs() < 0.05);
}

fn grid_spectrum(scenario: &Scenario, kind: LimitKind, n: usize) -> (Vec<f64>, f64, f64) {
    let grid = build_grid(&scenario.density, n).unwrap();
    let op = build_limit(kind, &scenario.kernel, &grid).unwrap();
    let m = match kind {
        LimitKind::NormalizedT => {
            let d = op.matrix.dim();
            Matrix::from_fn(d, |i, j| f64::from(u8::from(i == j)) - op.matrix[(i, j)])
        }
        LimitKind::UnnormalizedU => op.matrix.clone(),
    };
    let lo = op.degrees.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = op.degrees.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (eigvals_sym(&m).unwrap(), lo, hi)
}

#[test]
fn limit_spectrum_settles_under_grid_refinement() {
    // Eigenvalues outside the range of d settle to rounding level. Grid
    // eigenvalues inside it sample d at the nodes and move at first order
    // in 1/N, so for those the test checks the contraction instead.
    let scenarios = [
        Scenario::example2(0.3).unwrap(),
        Scenario::mixture(1.0).unwrap(),
        Scenario::mixture(2.0).unwrap(),
        Scenario::mixture(5.0).unwrap(),
        Scenario::mixture(50.0).unwrap(),
    ];
    for scenario in &scenarios {
        for kind in [LimitKind::NormalizedT, LimitKind::UnnormalizedU] {
            let (v1, _, _) = grid_spectrum(scenario, kind, 1000);
            let (v2, _, _) = grid_spectrum(scenario, kind, 2000);
            let (v4, lo, hi) = grid_spectrum(scenario, kind, 4000);
            for i in 1..5 {
                let coarse = (v1[i] - v2[i]).abs();
                let fine = (v2[i] - v4[i]).abs();
                let continuum = kind == LimitKind::UnnormalizedU && v4[i] >= lo - 1e-9 && v4[i] <= hi;
                if continuum {
                    assert!(fine <= 0.55 * coarse + 1e-12, "{} lambda{}: {coarse:e} -> {fine:e}", scenario.id, i + 1);
                } else {
                    assert!(fine < 1e-3, "{} {kind:?} lambda{}: {fine:e}", scenario.id, i + 1);
                }
            }
            if kind == LimitKind::NormalizedT {
                assert!(v4.iter().all(|&l| l >= -1e-10), "spectral radius of T exceeds 1");
            }
        }
    }
}

#[test]
fn example2_limit_has_no_isolated_eigenvalues() {
    let scenario = Scenario::example2(0.3).unwrap();
    let (v, _, _) = grid_spectrum(&scenario, LimitKind::UnnormalizedU, 2000);
    assert!(v[0].abs() < 1e-8);
    assert!(!v.iter().any(|&l| l > 1e-3 && l < 1.5 - 1e-3));
}

#[test]
fn second_limit_eigenvalue_refines() {
    let mut changes = Vec::new();
    for scenario in [Scenario::example2(0.3).unwrap(), Scenario::mixture(1.0).unwrap()] {
        for kind in [LimitKind::NormalizedT, LimitKind::UnnormalizedU] {
            let l2: Vec<f64> = [500, 1000, 2000, 4000].iter().map(|&n| grid_spectrum(&scenario, kind, n).0[1]).collect();
            let d: Vec<f64> = l2.windows(2).map(|w| (w[0] - w[1]).abs()).collect();
            // Differences already at rounding level cannot shrink further.
            assert!(d.windows(2).all(|w| w[1] < w[0] || w[1] < 1e-12), "{} {kind:?}: {d:?}", scenario.id);
            changes.push(d);
        }
    }
    assert!(changes.iter().any(|d| d[0] > 1e-12), "at least one scenario should refine visibly");
}
