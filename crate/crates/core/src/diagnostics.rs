//! Reliability check for unnormalized spectral clustering: eigenvalues of
//! `L_n / n` are compared against the sample estimate of the range of the
//! degree function, and each eigenvector gets a localization score.

use crate::error::{Error, Result};
use crate::linalg::EigenSystem;
use crate::spectral::DegreeVector;
use serde::{Deserialize, Serialize};

pub const DEFAULT_MARGIN: f64 = 0.05;

/// Eigenvalues below this are treated as the trivial eigenvalue 0.
const TRIVIAL_EIGENVALUE: f64 = 1e-8;

/// `[min_i d_i / n, max_i d_i / n]` with a relative closeness margin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalRegion {
    pub lo: f64,
    pub hi: f64,
    pub margin: f64,
}

impl CriticalRegion {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

pub fn estimate_critical_region(deg: &DegreeVector, n: usize, margin: f64) -> Result<CriticalRegion> {
    if !(margin >= 0.0) {
        return Err(Error::Argument(format!("margin must be nonnegative, got {margin}")));
    }
    if deg.is_empty() || n == 0 {
        return Err(Error::Argument("empty degree vector".into()));
    }
    let nf = n as f64;
    Ok(CriticalRegion {
        lo: deg.min() / nf,
        hi: deg.max() / nf,
        margin,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Safe,
    Marginal,
    Inside,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Safe => "safe",
            Status::Marginal => "marginal",
            Status::Inside => "inside",
        }
    }

    /// Inside or marginal.
    pub fn is_unreliable(self) -> bool {
        self != Status::Safe
    }
}

pub fn classify(lambda: f64, region: &CriticalRegion) -> Status {
    let band = region.margin * region.width();
    if lambda >= region.lo && lambda <= region.hi {
        Status::Inside
    } else if (lambda < region.lo && lambda >= region.lo - band) || (lambda > region.hi && lambda <= region.hi + band) {
        Status::Marginal
    } else {
        Status::Safe
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenRecord {
    pub index: usize,
    pub eigenvalue: f64,
    pub status: Status,
    pub ipr: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub region: CriticalRegion,
    pub records: Vec<EigenRecord>,
}

impl SpectrumReport {
    /// Eigenvalues strictly below the region and outside its margin band,
    /// including the trivial one.
    pub fn count_below(&self) -> usize {
        let band = self.region.margin * self.region.width();
        self.records
            .iter()
            .filter(|r| r.eigenvalue < self.region.lo - band)
            .count()
    }
}

pub fn classify_eigenvalues(eigs: &EigenSystem, region: &CriticalRegion) -> Result<SpectrumReport> {
    let records = eigs
        .values
        .iter()
        .zip(&eigs.vectors)
        .enumerate()
        .map(|(i, (&lambda, v))| {
            let status = if i == 0 && lambda.abs() < TRIVIAL_EIGENVALUE {
                Status::Safe
            } else {
                classify(lambda, region)
            };
            Ok(EigenRecord {
                index: i + 1,
                eigenvalue: lambda,
                status,
                ipr: ipr(v)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumReport {
        region: *region,
        records,
    })
}

/// Inverse participation ratio `Σ v_i⁴` of a unit vector: 1 for a one-hot
/// vector, `1/n` for a flat one.
pub fn ipr(v: &[f64]) -> Result<f64> {
    let sq: f64 = v.iter().map(|x| x * x).sum();
    if v.is_empty() || (sq - 1.0).abs() > 1e-8 {
        return Err(Error::Argument(format!("ipr needs a unit vector (squared norm {sq})")));
    }
    Ok(v.iter().map(|x| x.powi(4)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn region() -> CriticalRegion {
        CriticalRegion {
            lo: 1.5,
            hi: 3.0,
            margin: 0.05,
        }
    }

    #[test]
    fn region_from_degrees() {
        let r = estimate_critical_region(&DegreeVector(vec![2.0, 4.0, 6.0]), 3, 0.05).unwrap();
        assert!((r.lo - 2.0 / 3.0).abs() < 1e-15 && r.hi == 2.0);
        let c = estimate_critical_region(&DegreeVector(vec![0.7 * 5.0; 5]), 5, 0.0).unwrap();
        assert_eq!((c.lo, c.hi), (0.7, 0.7));
        assert!(estimate_critical_region(&DegreeVector(vec![1.0]), 1, -0.1).is_err());
    }

    #[test]
    fn statuses() {
        assert_eq!(classify(0.01, &region()), Status::Safe);
        assert_eq!(classify(1.45, &region()), Status::Marginal);
        assert_eq!(classify(2.0, &region()), Status::Inside);
        assert_eq!(classify(3.05, &region()), Status::Marginal);
        assert_eq!(classify(3.2, &region()), Status::Safe);
    }

    #[test]
    fn ipr_extremes() {
        assert_eq!(ipr(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 1.0);
        let n = 16;
        let flat = vec![1.0 / (n as f64).sqrt(); n];
        assert!((ipr(&flat).unwrap() - 1.0 / n as f64).abs() < 1e-15);
        let h = 0.5f64.sqrt();
        assert!((ipr(&[h, h, 0.0, 0.0]).unwrap() - 0.5).abs() < 1e-15);
        assert!(ipr(&[1.0, 1.0]).is_err());
    }

    #[test]
    fn trivial_pair_is_safe() {
        let eigs = EigenSystem {
            values: vec![0.0, 1.6],
            vectors: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            degenerate: vec![false, false],
            norm: 1.6,
        };
        let r = CriticalRegion { lo: 0.0, hi: 2.0, margin: 0.05 };
        let rep = classify_eigenvalues(&eigs, &r).unwrap();
        assert_eq!(rep.records[0].status, Status::Safe);
        assert_eq!(rep.records[1].status, Status::Inside);
    }

    proptest! {
        #[test]
        fn ipr_bounds(v in prop::collection::vec(-1.0f64..1.0, 1..64)) {
            let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            prop_assume!(nrm > 1e-6);
            let u: Vec<f64> = v.iter().map(|x| x / nrm).collect();
            let p = ipr(&u).unwrap();
            prop_assert!(p >= 1.0 / u.len() as f64 - 1e-12 && p <= 1.0 + 1e-12);
        }

        #[test]
        fn larger_margin_never_frees_a_marginal_value(
            lambda in -1.0f64..5.0, lo in 0.5f64..2.0, width in 0.0f64..2.0,
            m1 in 0.0f64..0.5, extra in 0.0f64..0.5,
        ) {
            let small = CriticalRegion { lo, hi: lo + width, margin: m1 };
            let big = CriticalRegion { margin: m1 + extra, ..small };
            if classify(lambda, &small) == Status::Marginal {
                prop_assert_ne!(classify(lambda, &big), Status::Safe);
            }
        }
    }
}
