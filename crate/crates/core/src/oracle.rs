//! Brute-force reference computations, kept independent of the production
//! code paths they are used to check. Everything here is dense, direct, and
//! only meant for desk-scale verification.

use nalgebra::{DMatrix, DVector};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::matrix::ColumnMatrix;

/// Singular values via eigendecomposition of the Gram matrix A'A.
pub fn gram_singular_values(a: &ColumnMatrix) -> Vec<f64> {
    let d = a.to_dense();
    let gram = d.transpose() * &d;
    let eig = nalgebra::SymmetricEigen::new(gram);
    let mut vals: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals
}

/// `||A - ZZ'A||_F^2` by explicitly forming the residual.
pub fn explicit_projection_residual(a: &DMatrix<f64>, z: &DMatrix<f64>) -> f64 {
    let residual = a - z * (z.transpose() * a);
    residual.norm_squared()
}

/// Ridge quadratic forms `a_i' (A A' + lambda I)^{-1} a_i` via a dense solve.
/// With `lambda = 0` the pseudoinverse is used instead.
pub fn dense_ridge_scores(a: &ColumnMatrix, lambda: f64) -> Vec<f64> {
    let d = a.to_dense();
    let n = d.nrows();
    let gram_like = &d * d.transpose() + DMatrix::identity(n, n) * lambda;
    let inv = dense_pinv(&gram_like);
    (0..d.ncols()).map(|j| (d.column(j).transpose() * &inv * d.column(j))[(0, 0)]).collect()
}

/// Quadratic form `x' (M M' + lambda I)^+ x` via dense pseudoinversion.
pub fn dense_ridge_quadratic(m: &DMatrix<f64>, lambda: f64, x: &DVector<f64>) -> f64 {
    let n = m.nrows();
    let reg = m * m.transpose() + DMatrix::identity(n, n) * lambda;
    let inv = dense_pinv(&reg);
    (x.transpose() * inv * x)[(0, 0)]
}

/// Symmetric PSD pseudoinverse through an eigendecomposition.
pub fn dense_pinv(m: &DMatrix<f64>) -> DMatrix<f64> {
    let eig = nalgebra::SymmetricEigen::new(m.clone());
    let max_ev = eig.eigenvalues.iter().cloned().fold(0.0f64, f64::max);
    let cutoff = max_ev * (m.nrows() as f64) * f64::EPSILON;
    let mut inv = DMatrix::zeros(m.nrows(), m.ncols());
    for i in 0..eig.eigenvalues.len() {
        let ev = eig.eigenvalues[i];
        if ev > cutoff && ev > 0.0 {
            let v = eig.eigenvectors.column(i);
            inv += (&v * v.transpose()) / ev;
        }
    }
    inv
}

/// Minimum eigenvalue of a symmetric matrix.
pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    let sym = (m + m.transpose()) * 0.5;
    let eig = nalgebra::SymmetricEigen::new(sym);
    eig.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Squared spectral norm `||A||_2^2`.
pub fn spectral_norm_sq(a: &ColumnMatrix) -> f64 {
    let d = a.to_dense();
    let eig = nalgebra::SymmetricEigen::new(&d * d.transpose());
    eig.eigenvalues.iter().cloned().fold(0.0f64, f64::max)
}

/// Random n x k matrix with orthonormal columns (QR of a Gaussian draw).
pub fn random_orthonormal(n: usize, k: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    assert!(k <= n);
    let g: DMatrix<f64> = DMatrix::from_fn(n, k, |_, _| StandardNormal.sample(rng));
    g.qr().q()
}

/// Exact ridge leverage scores by the definition: full SVD for the tail norm,
/// then dense solves. Slower and structurally different from the production
/// path (which works in the factored basis).
pub fn definition_ridge_scores(a: &ColumnMatrix, k: usize) -> Vec<f64> {
    let sigma = gram_singular_values(a);
    let total = a.frob_sq();
    let head: f64 = sigma.iter().take(k).map(|s| s * s).sum();
    let lambda = ((total - head).max(0.0)) / k as f64;
    dense_ridge_scores(a, lambda)
}

/// Wilson score interval at `z` standard deviations for `successes / trials`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * ((p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt()) / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}
