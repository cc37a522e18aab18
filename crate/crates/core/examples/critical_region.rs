//! Flags eigenvalues of L_n / n that fall in or near the range of the
//! sample degrees, where eigenvectors tend to localize on single points.

use speclab::diagnostics::{classify_eigenvalues, estimate_critical_region, DEFAULT_MARGIN};
use speclab::model::{sample, Density, KernelSpec};
use speclab::spectral::{build_laplacian, build_similarity, LaplacianKind};

fn main() -> speclab::Result<()> {
    let density = Density::four_gaussians();
    let s = sample(&density, 200, 1)?;
    for sigma in [1.0, 50.0] {
        let kernel = KernelSpec::gaussian(sigma, density.support())?;
        let lap = build_laplacian(&build_similarity(&s, &kernel)?, LaplacianKind::UnnormScaled)?;
        let region = estimate_critical_region(&lap.degrees, s.len(), DEFAULT_MARGIN)?;
        let report = classify_eigenvalues(&lap.eigensystem(8)?, &region)?;
        println!("sigma = {sigma}: critical region [{:.5}, {:.5}]", region.lo, region.hi);
        for r in &report.records {
            println!("  {}  {:.6}  {:<8}  ipr {:.3}", r.index, r.eigenvalue, r.status.as_str(), r.ipr);
        }
    }
    Ok(())
}
