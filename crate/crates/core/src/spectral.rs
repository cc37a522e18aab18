//! Finite-sample spectral clustering: similarity and degree construction,
//! the three graph Laplacians, their eigenpairs, sign alignment and
//! threshold bi-clustering.

use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix};
pub use crate::linalg::{eig_sym, EigenSystem};
use crate::model::{KernelSpec, SampleSet};
use serde::{Deserialize, Serialize};

/// `K = (k(X_i, X_j))`, exactly symmetric.
#[derive(Clone, Debug)]
pub struct SimilarityMatrix {
    pub matrix: Matrix,
    pub lower: f64,
    pub upper: f64,
}

impl SimilarityMatrix {
    /// Wraps an arbitrary symmetric nonnegative matrix.
    pub fn from_matrix(matrix: Matrix) -> Result<Self> {
        if !matrix.is_symmetric(0.0) {
            return Err(Error::Argument("similarity matrix must be exactly symmetric".into()));
        }
        let (mut lower, mut upper) = (f64::INFINITY, 0.0f64);
        for &v in matrix.as_slice() {
            if !(v >= 0.0) {
                return Err(Error::Argument("similarities must be nonnegative".into()));
            }
            lower = lower.min(v);
            upper = upper.max(v);
        }
        Ok(SimilarityMatrix { matrix, lower, upper })
    }

    pub fn n(&self) -> usize {
        self.matrix.dim()
    }
}

pub fn build_similarity(sample: &SampleSet, kernel: &KernelSpec) -> Result<SimilarityMatrix> {
    let x = &sample.points;
    if x.len() < 2 {
        return Err(Error::Argument("similarity needs at least two points".into()));
    }
    for &p in x {
        kernel.eval(p, p)?;
    }
    let matrix = Matrix::symmetric_from_fn(x.len(), |i, j| kernel.k(x[i], x[j]));
    Ok(SimilarityMatrix {
        matrix,
        lower: kernel.lower,
        upper: kernel.upper,
    })
}

/// Row sums `d_i = Σ_j k_ij`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeVector(pub Vec<f64>);

impl DegreeVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.0.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn degrees(k: &SimilarityMatrix) -> DegreeVector {
    DegreeVector((0..k.n()).map(|i| k.matrix.row(i).iter().sum()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LaplacianKind {
    /// `(D - K) / n`
    UnnormScaled,
    /// `I - D^{-1/2} K D^{-1/2}`
    SymNorm,
    /// `I - D^{-1} K`
    RwNorm,
}

/// Which flavour of spectral clustering an experiment runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Unnormalized,
    Normalized,
}

impl Normalization {
    /// The symmetric Laplacian whose eigenpairs this flavour uses.
    pub fn laplacian_kind(self) -> LaplacianKind {
        match self {
            Normalization::Unnormalized => LaplacianKind::UnnormScaled,
            Normalization::Normalized => LaplacianKind::SymNorm,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Normalization::Unnormalized => "unnormalized",
            Normalization::Normalized => "normalized",
        }
    }
}

#[derive(Clone, Debug)]
pub struct LaplacianMatrix {
    pub kind: LaplacianKind,
    pub matrix: Matrix,
    pub degrees: DegreeVector,
}

pub fn build_laplacian(k: &SimilarityMatrix, kind: LaplacianKind) -> Result<LaplacianMatrix> {
    let deg = degrees(k);
    if let Some(i) = deg.0.iter().position(|&d| !(d > 0.0)) {
        return Err(Error::Construction(format!("vertex {i} has degree {}", deg.0[i])));
    }
    let n = k.n();
    let km = &k.matrix;
    let d = &deg.0;
    let delta = |i: usize, j: usize| if i == j { 1.0 } else { 0.0 };
    let matrix = match kind {
        LaplacianKind::UnnormScaled => {
            let nf = n as f64;
            Matrix::symmetric_from_fn(n, |i, j| (delta(i, j) * d[i] - km[(i, j)]) / nf)
        }
        LaplacianKind::SymNorm => {
            let s: Vec<f64> = d.iter().map(|v| v.sqrt()).collect();
            Matrix::symmetric_from_fn(n, |i, j| delta(i, j) - km[(i, j)] / (s[i] * s[j]))
        }
        LaplacianKind::RwNorm => Matrix::from_fn(n, |i, j| delta(i, j) - km[(i, j)] / d[i]),
    };
    Ok(LaplacianMatrix {
        kind,
        matrix,
        degrees: deg,
    })
}

impl LaplacianMatrix {
    pub fn n(&self) -> usize {
        self.matrix.dim()
    }

    /// The vector every Laplacian of this kind annihilates.
    pub fn trivial_vector(&self) -> Vec<f64> {
        match self.kind {
            LaplacianKind::SymNorm => self.degrees.0.iter().map(|d| d.sqrt()).collect(),
            _ => vec![1.0; self.n()],
        }
    }

    /// The `r` smallest eigenpairs. The random-walk Laplacian is never
    /// decomposed directly: its symmetric conjugate is, and the vectors are
    /// mapped back with [`rw_from_sym`].
    pub fn eigensystem(&self, r: usize) -> Result<EigenSystem> {
        match self.kind {
            LaplacianKind::RwNorm => {
                let s: Vec<f64> = self.degrees.0.iter().map(|d| d.sqrt()).collect();
                let n = self.n();
                // sym_ij = rw_ij * sqrt(d_i) / sqrt(d_j); average the two
                // mirrored entries so rounding leaves it exactly symmetric.
                let sym = Matrix::symmetric_from_fn(n, |i, j| {
                    0.5 * (self.matrix[(i, j)] * s[i] / s[j] + self.matrix[(j, i)] * s[j] / s[i])
                });
                let mut es = eig_sym(&sym, r)?;
                for v in es.vectors.iter_mut() {
                    *v = rw_from_sym(v, &self.degrees)?;
                }
                Ok(es)
            }
            _ => eig_sym(&self.matrix, r),
        }
    }
}

/// `f^T (D - K) f`, checked against `½ Σ_ij k_ij (f_i - f_j)^2`.
pub fn quadratic_form(k: &SimilarityMatrix, f: &[f64]) -> Result<f64> {
    let n = k.n();
    if f.len() != n {
        return Err(Error::Argument(format!("vector has length {}, matrix is {n}x{n}", f.len())));
    }
    let deg = degrees(k);
    let kf = k.matrix.mul_vec(f);
    let form: f64 = (0..n).map(|i| f[i] * (deg.0[i] * f[i] - kf[i])).sum();

    let mut pairwise = 0.0;
    for i in 0..n {
        let row = k.matrix.row(i);
        for j in 0..n {
            let diff = f[i] - f[j];
            pairwise += row[j] * diff * diff;
        }
    }
    pairwise *= 0.5;

    let fmax = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let scale = (n * n) as f64 * k.matrix.max_abs() * fmax * fmax;
    if (form - pairwise).abs() > 1e-9 * scale.max(f64::MIN_POSITIVE) {
        return Err(Error::Numerical(format!(
            "quadratic form {form} disagrees with pairwise sum {pairwise}"
        )));
    }
    Ok(form)
}

/// Maps an eigenvector `w` of `I - D^{-1/2} K D^{-1/2}` to the eigenvector
/// `D^{-1/2} w` of `I - D^{-1} K`, renormalized to unit length.
pub fn rw_from_sym(w: &[f64], deg: &DegreeVector) -> Result<Vec<f64>> {
    if w.len() != deg.len() {
        return Err(Error::Argument("vector and degree lengths differ".into()));
    }
    if deg.0.iter().any(|&d| !(d > 0.0)) {
        return Err(Error::Argument("degrees must be positive".into()));
    }
    let mut v: Vec<f64> = w.iter().zip(&deg.0).map(|(x, d)| x / d.sqrt()).collect();
    let nrm = dot(&v, &v).sqrt();
    if nrm > 0.0 {
        v.iter_mut().for_each(|x| *x /= nrm);
    }
    Ok(v)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClusterAssignment {
    pub labels: Vec<u8>,
    pub threshold: f64,
}

/// Label 1 where `v_j >= threshold`, 0 elsewhere.
pub fn threshold_cluster(v: &[f64], threshold: f64) -> ClusterAssignment {
    ClusterAssignment {
        labels: v.iter().map(|&x| u8::from(x >= threshold)).collect(),
        threshold,
    }
}

/// Chooses `a = sgn<v_ref, v_n>` (with `a = +1` on a zero inner product)
/// and returns `(a, a * v_n)`.
pub fn align_sign(v_n: &[f64], v_ref: &[f64]) -> (f64, Vec<f64>) {
    let a = if dot(v_n, v_ref) < 0.0 { -1.0 } else { 1.0 };
    (a, v_n.iter().map(|x| a * x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::norm2;
    use crate::model::{sample, Density, KernelSpec, Support};

    fn constant_similarity(c: f64) -> SimilarityMatrix {
        SimilarityMatrix::from_matrix(Matrix::from_rows(&[vec![c, c], vec![c, c]]).unwrap()).unwrap()
    }

    #[test]
    fn similarity_entries() {
        let sup = Support::new(1.0, 2.0).unwrap();
        let s = SampleSet {
            points: vec![1.0, 1.0],
            seed: 0,
            density: Density::example2(0.3).unwrap(),
            components: vec![0, 0],
        };
        let k = build_similarity(&s, &KernelSpec::product(sup).unwrap()).unwrap();
        assert_eq!(k.matrix.as_slice(), &[1.0, 1.0, 1.0, 1.0]);

        let s = SampleSet {
            points: vec![2.0, 4.0],
            seed: 0,
            density: Density::four_gaussians(),
            components: vec![0, 1],
        };
        let g = KernelSpec::gaussian(2.0, Support::new(0.0, 10.0).unwrap()).unwrap();
        let k = build_similarity(&s, &g).unwrap();
        assert_eq!(k.matrix[(0, 0)], 1.0);
        assert!((k.matrix[(0, 1)] - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(degrees(&k).0, vec![1.0 + k.matrix[(0, 1)]; 2]);
    }

    #[test]
    fn degree_bounds() {
        let d = Density::four_gaussians();
        let g = KernelSpec::gaussian(1.0, d.support()).unwrap();
        let s = sample(&d, 50, 5).unwrap();
        let k = build_similarity(&s, &g).unwrap();
        assert_eq!(k.matrix, k.matrix.transpose());
        let deg = degrees(&k);
        assert!(deg.min() >= 50.0 * g.lower);
        assert!(deg.max() <= 50.0 * g.upper);
    }

    #[test]
    fn constant_two_point_laplacians() {
        let c = 0.7;
        let k = constant_similarity(c);
        assert_eq!(degrees(&k).0, vec![2.0 * c; 2]);
        let l = build_laplacian(&k, LaplacianKind::UnnormScaled).unwrap();
        let half = c / 2.0;
        let expect = [half, -half, -half, half];
        for (a, b) in l.matrix.as_slice().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        let sym = build_laplacian(&k, LaplacianKind::SymNorm).unwrap();
        let e = sym.eigensystem(2).unwrap();
        assert!(e.values[0].abs() < 1e-14 && (e.values[1] - 1.0).abs() < 1e-14);
        assert_eq!(quadratic_form(&k, &[1.0, 1.0]).unwrap(), 0.0);
    }

    #[test]
    fn quadratic_form_two_point() {
        let w = 0.4;
        let q = quadratic_form(&constant_similarity(w), &[1.0, 0.0]).unwrap();
        assert!((q - w).abs() < 1e-15);
        assert!(quadratic_form(&constant_similarity(w), &[1.0]).is_err());
    }

    #[test]
    fn rw_conversion() {
        let v = rw_from_sym(&[2.0, 2.0], &DegreeVector(vec![4.0, 1.0])).unwrap();
        assert!((v[1] / v[0] - 2.0).abs() < 1e-15);
        assert!((norm2(&v) - 1.0).abs() < 1e-15);
        let w = [0.6, 0.8];
        assert_eq!(rw_from_sym(&w, &DegreeVector(vec![1.0, 1.0])).unwrap(), w.to_vec());
    }

    #[test]
    fn threshold_rule() {
        assert_eq!(threshold_cluster(&[0.3, -0.2, 0.0], 0.0).labels, vec![1, 0, 1]);
        assert_eq!(threshold_cluster(&[1.0; 4], 0.0).labels, vec![1; 4]);
        let v = [0.1, 0.5, -0.3];
        assert_eq!(threshold_cluster(&v, 1.5).labels, vec![0; 3]);
    }

    #[test]
    fn sign_alignment() {
        let (a, v) = align_sign(&[-1.0, 0.0], &[1.0, 0.0]);
        assert_eq!((a, v), (-1.0, vec![1.0, 0.0]));
        let r = [0.6, 0.8];
        assert_eq!(align_sign(&r, &r), (1.0, r.to_vec()));
        assert_eq!(align_sign(&[0.0, 1.0], &[1.0, 0.0]).0, 1.0);
    }
}
