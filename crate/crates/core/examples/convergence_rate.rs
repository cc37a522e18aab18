//! Convergence of normalized spectral clustering on the four-Gaussian
//! mixture with a width-1 Gaussian kernel: medians per sample size and the
//! fitted log-log slopes.

use speclab::experiments::{fit_rate, run_convergence, RateField, Scenario, StudyConfig};
use speclab::spectral::Normalization;

fn main() -> speclab::Result<()> {
    let reps = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let scenario = Scenario::mixture(1.0)?;
    let mut cfg = StudyConfig::new(Normalization::Normalized, vec![100, 200, 400, 800, 1600], reps, 2024);
    cfg.class_supremum = true;
    let series = run_convergence(&scenario, &cfg)?;

    let lam = series.medians(RateField::LambdaError);
    let vec = series.medians(RateField::EigvecSupError);
    let dev = series.medians(RateField::SupDeviation);
    let ratio = series.class_ratio_medians();
    println!("limit lambda2 = {}", series.records[0].lambda2_limit);
    println!("{:>6} {:>12} {:>12} {:>12} {:>10}", "n", "|dlambda2|", "vec sup", "sup |dn-d|", "ratio");
    for i in 0..lam.len() {
        println!("{:>6} {:>12.3e} {:>12.3e} {:>12.3e} {:>10.3}", lam[i].0, lam[i].1, vec[i].1, dev[i].1, ratio[i].1);
    }
    for (name, field) in [
        ("eigenvector sup error", RateField::EigvecSupError),
        ("degree sup deviation", RateField::SupDeviation),
        ("eigenvalue error", RateField::LambdaError),
    ] {
        let fit = fit_rate(&series.samples(field))?;
        println!("{name}: slope {:.3} (r2 {:.3})", fit.slope, fit.r2);
    }
    println!("ratio growth: {:.3}", series.class_ratio_growth()?);
    Ok(())
}
