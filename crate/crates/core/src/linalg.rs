//! Dense square matrices and the symmetric eigensolver.
//!
//! The decomposition itself is delegated to `faer` (Householder
//! tridiagonalization followed by an implicit QR sweep), run sequentially so
//! results are bit-reproducible. Everything around it (symmetry check,
//! ordering, sign convention, residual contract, degeneracy flags) lives here.

use crate::error::{Error, Result};
use faer::{Mat, Side};

/// Gap below which two neighbouring eigenvalues are treated as one
/// numerically multiple eigenvalue.
pub const DEGENERACY_GAP: f64 = 1e-8;

/// Residual contract for every returned pair, relative to the spectral norm.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Square dense matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    /// Builds a matrix from nested rows. Fails unless every row has length
    /// equal to the number of rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Argument("rows do not form a square matrix".into()));
        }
        Ok(Matrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Fills the upper triangle from `f` and mirrors it, so the result is
    /// exactly symmetric.
    pub fn symmetric_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n, "dimension mismatch");
        (0..self.n)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest absolute asymmetry `|a_ij - a_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.asymmetry() <= tol
    }

    fn to_faer(&self) -> Mat<f64> {
        Mat::from_fn(self.n, self.n, |i, j| self.data[i * self.n + j])
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// The smallest eigenpairs of a symmetric matrix, in increasing order
/// (repeated according to multiplicity).
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    /// Unit Euclidean norm; the largest-magnitude entry is made positive.
    pub vectors: Vec<Vec<f64>>,
    /// `true` when the pair's eigenvalue lies within [`DEGENERACY_GAP`] of a
    /// neighbour in the full spectrum, so the vector is not well defined.
    pub degenerate: Vec<bool>,
    /// Spectral norm of the decomposed matrix.
    pub norm: f64,
}

impl EigenSystem {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_symmetric(a: &Matrix) -> Result<()> {
    let tol = 1e-12 * a.max_abs().max(1.0);
    let asym = a.asymmetry();
    if asym > tol {
        return Err(Error::Argument(format!(
            "matrix is not symmetric (max |a_ij - a_ji| = {asym:e})"
        )));
    }
    Ok(())
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn eigvals_sym(a: &Matrix) -> Result<Vec<f64>> {
    check_symmetric(a)?;
    if a.dim() == 0 {
        return Ok(Vec::new());
    }
    let mut vals = a
        .to_faer()
        .as_ref()
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| Error::Numerical(format!("eigenvalue iteration did not converge: {e:?}")))?;
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// The `r` smallest eigenpairs of the symmetric matrix `a`.
pub fn eig_sym(a: &Matrix, r: usize) -> Result<EigenSystem> {
    let n = a.dim();
    if r == 0 || r > n {
        return Err(Error::Argument(format!("requested {r} eigenpairs of a {n}x{n} matrix")));
    }
    check_symmetric(a)?;
    let evd = a
        .to_faer()
        .as_ref()
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Numerical(format!("eigen iteration did not converge: {e:?}")))?;
    let s = evd.S().column_vector();
    let u = evd.U();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| s[i].total_cmp(&s[j]));
    let all: Vec<f64> = order.iter().map(|&i| s[i]).collect();
    let norm = all.iter().fold(0.0f64, |m, v| m.max(v.abs()));

    let mut values = Vec::with_capacity(r);
    let mut vectors = Vec::with_capacity(r);
    let mut degenerate = Vec::with_capacity(r);
    for (k, &col) in order.iter().take(r).enumerate() {
        let mut v: Vec<f64> = (0..n).map(|i| u[(i, col)]).collect();
        let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= nrm);
        let pivot = v
            .iter()
            .copied()
            .fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
        if pivot < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }

        let lambda = all[k];
        let av = a.mul_vec(&v);
        let residual = av
            .iter()
            .zip(&v)
            .map(|(x, y)| (x - lambda * y).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual > RESIDUAL_TOL * norm.max(f64::MIN_POSITIVE) {
            return Err(Error::Numerical(format!(
                "eigenpair {k}: residual {residual:e} exceeds {RESIDUAL_TOL:e} * ||A|| = {:e} (lambda = {lambda})",
                RESIDUAL_TOL * norm
            )));
        }

        let near_prev = k > 0 && all[k] - all[k - 1] < DEGENERACY_GAP;
        let near_next = k + 1 < n && all[k + 1] - all[k] < DEGENERACY_GAP;
        values.push(lambda);
        vectors.push(v);
        degenerate.push(near_prev || near_next);
    }
    Ok(EigenSystem {
        values,
        vectors,
        degenerate,
        norm,
    })
}

/// `A Aᵀ` for a row-major `rows x cols` matrix, returned row-major.
pub fn gram(rows: usize, cols: usize, data: &[f64]) -> Vec<f64> {
    assert_eq!(data.len(), rows * cols, "dimension mismatch");
    let a = Mat::from_fn(rows, cols, |i, j| data[i * cols + j]);
    let g = a.as_ref() * a.as_ref().transpose();
    (0..rows * rows).map(|k| g[(k / rows, k % rows)]).collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sup_norm(a: &[f64]) -> f64 {
    a.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}
