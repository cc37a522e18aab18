//! The piecewise density on [1, 2] with the product kernel: the eigenvalue
//! equation of the unnormalized limit has the single root 0, the degree
//! function is 1.5x, and the second eigenvalue of L_n / n drifts to
//! min d = 1.5 with a localized eigenvector.

use speclab::experiments::{median, run_convergence, Scenario, StudyConfig};
use speclab::limit::{degree_function, essential_range, example2_roots, DegreeSource};
use speclab::spectral::Normalization;

fn main() -> speclab::Result<()> {
    let s = 0.3;
    let scenario = Scenario::example2(s)?;
    let d = degree_function(&scenario.kernel, DegreeSource::Density(&scenario.density))?;
    let range = essential_range(&d, 1000)?;
    println!("roots of the eigenvalue equation: {:?}", example2_roots(s)?);
    println!("range of d: [{}, {}]", range.lo, range.hi);

    let mut cfg = StudyConfig::new(Normalization::Unnormalized, vec![200, 400, 800, 1600], 10, 11);
    cfg.compare_eigenvectors = false;
    let series = run_convergence(&scenario, &cfg)?;
    println!("limit lambda2 on the grid: {}", series.records[0].lambda2_limit);
    println!("{:>6} {:>14} {:>10} {:>22}", "n", "median lambda2", "median ipr", "inconsistent-regime reps");
    for &n in &cfg.n_list {
        let mut lam: Vec<f64> = series.records_for(n).map(|r| r.lambda2_sample).collect();
        let mut ipr: Vec<f64> = series.records_for(n).map(|r| r.ipr).collect();
        let bad = series
            .records_for(n)
            .filter(|r| r.regime == speclab::experiments::Regime::InconsistentRegime)
            .count();
        println!("{:>6} {:>14.5} {:>10.3} {:>22}", n, median(&mut lam), median(&mut ipr), bad);
    }
    Ok(())
}
