//! Extends sample eigenvectors of both Laplacians to functions on the whole
//! support and checks them against the sample operators.

use speclab::limit::{extend_normalized, extend_unnormalized};
use speclab::model::{sample, Density, KernelSpec};
use speclab::spectral::{build_laplacian, build_similarity, LaplacianKind};
use speclab::Error;

fn main() -> speclab::Result<()> {
    let density = Density::four_gaussians();
    let kernel = KernelSpec::gaussian(1.0, density.support())?;
    let s = sample(&density, 200, 5)?;
    let k = build_similarity(&s, &kernel)?;
    let probes = kernel.support.probes(200);

    let sym = build_laplacian(&k, LaplacianKind::SymNorm)?.eigensystem(4)?;
    let un = build_laplacian(&k, LaplacianKind::UnnormScaled)?.eigensystem(6)?;
    for i in 0..4 {
        let f = extend_normalized(&s, &kernel, &sym.vectors[i], sym.values[i])?;
        println!(
            "normalized   pair {}: lambda {:.6}  round trip {:.1e}  residual {:.1e}  f(5) = {:.4}",
            i + 1,
            f.lambda,
            f.round_trip_error(),
            f.residual(&probes),
            f.eval(5.0)?
        );
    }
    for i in 0..6 {
        match extend_unnormalized(&s, &kernel, &un.vectors[i], un.values[i]) {
            Ok(f) => println!(
                "unnormalized pair {}: lambda {:.6}  round trip {:.1e}  residual {:.1e}",
                i + 1,
                f.lambda,
                f.round_trip_error(),
                f.residual(&probes)
            ),
            Err(Error::EssentialSpectrum { lambda, lo, hi, .. }) => {
                println!("unnormalized pair {}: lambda {lambda:.6} lies in [{lo:.6}, {hi:.6}], no extension", i + 1)
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
