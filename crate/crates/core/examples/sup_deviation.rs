//! Uniform deviation between the empirical and the true degree function
//! for the piecewise density with the product kernel, and its log-log rate.

use speclab::experiments::{empirical_sup_deviation, fit_rate, Scenario};

fn main() -> speclab::Result<()> {
    let scenario = Scenario::example2(0.3)?;
    let series = empirical_sup_deviation(&scenario, &[100, 200, 400, 800, 1600, 3200], 20, 3, 1000)?;
    for (n, m) in series.medians() {
        println!("n = {n:>5}: median sup |d_n - d| = {m:.3e}");
    }
    let fit = fit_rate(&series.samples())?;
    println!("slope {:.3} (r2 {:.3})", fit.slope, fit.r2);
    Ok(())
}
