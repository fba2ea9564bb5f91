//! Sparse column-major matrix storage, dense SVD paths, and the spectral
//! quantities (tail norms, head/tail split) every other module consumes.

use nalgebra::{DMatrix, DVector};

use crate::error::Error;
use crate::Result;

/// Default edge length above which the full dense SVD is refused.
pub const DEFAULT_DENSE_LIMIT: usize = 4096;

/// Relative tolerance for orthonormality checks.
pub const ORTHO_TOL: f64 = 1e-8;

/// A sparse column: strictly increasing row indices paired with nonzero values.
pub type SparseColumn = Vec<(usize, f64)>;

/// Sparse, column-addressable real matrix (CSC-like semantics).
///
/// Columns are stored independently so that appending, sampling, and scanning
/// whole columns is cheap and never moves existing data. Explicit zeros are
/// dropped at construction and every stored value is finite.
#[derive(Clone, Debug, PartialEq)]
pub struct ColumnMatrix {
    n_rows: usize,
    columns: Vec<SparseColumn>,
    nnz: usize,
}

impl ColumnMatrix {
    /// Empty matrix with a fixed row count and no columns.
    pub fn new(n_rows: usize) -> Self {
        ColumnMatrix { n_rows, columns: Vec::new(), nnz: 0 }
    }

    /// Builds from raw columns, dropping explicit zeros and validating entries.
    pub fn from_columns(n_rows: usize, columns: Vec<SparseColumn>) -> Result<Self> {
        let mut m = ColumnMatrix::new(n_rows);
        for col in columns {
            m.push_column(col)?;
        }
        Ok(m)
    }

    /// Appends one column in O(entries); existing columns do not move.
    pub fn push_column(&mut self, mut entries: SparseColumn) -> Result<()> {
        entries.retain(|&(_, v)| v != 0.0);
        let mut last: Option<usize> = None;
        for &(i, v) in &entries {
            if i >= self.n_rows {
                return Err(Error::DimensionMismatch { expected: self.n_rows, got: i + 1 });
            }
            if !v.is_finite() {
                return Err(Error::invalid("value", format!("non-finite entry {v} in row {i}")));
            }
            if let Some(prev) = last {
                if i <= prev {
                    return Err(Error::invalid("column", "row indices must be strictly increasing"));
                }
            }
            last = Some(i);
        }
        self.nnz += entries.len();
        self.columns.push(entries);
        Ok(())
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.nnz
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, j: usize) -> &SparseColumn {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseColumn] {
        &self.columns
    }

    /// Squared Euclidean norm of column `j`.
    pub fn col_norm_sq(&self, j: usize) -> f64 {
        self.columns[j].iter().map(|&(_, v)| v * v).sum()
    }

    /// Squared Frobenius norm.
    pub fn frob_sq(&self) -> f64 {
        (0..self.n_cols()).map(|j| self.col_norm_sq(j)).sum()
    }

    /// Dense copy (n_rows x n_cols).
    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut d = DMatrix::zeros(self.n_rows, self.n_cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                d[(i, j)] = v;
            }
        }
        d
    }

    /// Sparsifies a dense matrix, dropping exact zeros.
    pub fn from_dense(d: &DMatrix<f64>) -> Self {
        let mut m = ColumnMatrix::new(d.nrows());
        for j in 0..d.ncols() {
            let col: SparseColumn =
                (0..d.nrows()).filter(|&i| d[(i, j)] != 0.0).map(|i| (i, d[(i, j)])).collect();
            m.push_column(col).expect("dense source is structurally valid");
        }
        m
    }

    /// New matrix holding `scale[j] * column(indices[j])` for each j.
    pub fn select_scaled(&self, indices: &[usize], scales: &[f64]) -> Self {
        assert_eq!(indices.len(), scales.len());
        let mut m = ColumnMatrix::new(self.n_rows);
        for (&j, &s) in indices.iter().zip(scales) {
            let col = self.columns[j].iter().map(|&(i, v)| (i, v * s)).collect();
            m.push_column(col).expect("scaled column stays valid");
        }
        m
    }

    /// Appends `x` to a copy of `self`.
    pub fn with_appended(&self, x: &SparseColumn) -> Result<Self> {
        let mut m = self.clone();
        m.push_column(x.clone())?;
        Ok(m)
    }

    /// Dot product of column `j` against a dense vector.
    pub fn col_dot_dense(&self, j: usize, v: &DVector<f64>) -> f64 {
        self.columns[j].iter().map(|&(i, x)| x * v[i]).sum()
    }
}

/// Thin SVD factors `A = U diag(sigma) V'` truncated at the numerical rank.
#[derive(Clone, Debug)]
pub struct SvdFactors {
    /// n x r orthonormal left basis.
    pub u: DMatrix<f64>,
    /// Nonincreasing positive singular values.
    pub sigma: Vec<f64>,
    /// d x r orthonormal right basis.
    pub v: DMatrix<f64>,
    /// Effective rank after the cutoff.
    pub r: usize,
}

impl SvdFactors {
    /// `U diag(sigma) V'`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        let mut us = self.u.clone();
        for (j, &s) in self.sigma.iter().enumerate() {
            us.column_mut(j).scale_mut(s);
        }
        us * self.v.transpose()
    }

    /// Sum of the top-k squared singular values.
    pub fn head_energy(&self, k: usize) -> f64 {
        self.sigma.iter().take(k).map(|s| s * s).sum()
    }

    /// First `k` left singular vectors (k is clamped to the rank).
    pub fn left_basis(&self, k: usize) -> DMatrix<f64> {
        let k = k.min(self.r);
        self.u.columns(0, k).into_owned()
    }

    fn check_orthonormal(m: &DMatrix<f64>) -> f64 {
        let g = m.transpose() * m;
        let mut dev: f64 = 0.0;
        for i in 0..g.nrows() {
            for j in 0..g.ncols() {
                let want = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((g[(i, j)] - want).abs());
            }
        }
        dev
    }

    /// Validates the orthonormality invariants of both bases.
    pub fn validate(&self) -> Result<()> {
        let dev = Self::check_orthonormal(&self.u).max(Self::check_orthonormal(&self.v));
        if dev > ORTHO_TOL {
            return Err(Error::NonOrthonormal { max_dev: dev });
        }
        Ok(())
    }
}

/// Head/tail split at the index `m`: the largest index whose squared singular
/// value still clears the ridge threshold `||A - A_k||_F^2 / k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralSplit {
    /// Number of head directions; always <= 2k.
    pub m: usize,
    /// `||A - A_k||_F^2`.
    pub tail_norm_k: f64,
    /// `||A - A_m||_F^2`.
    pub tail_norm_m: f64,
}

fn rank_cutoff(n: usize, d: usize, sigma_max: f64) -> f64 {
    (n.max(d) as f64) * f64::EPSILON * sigma_max
}

/// Thin SVD of `A`, rank-truncated at `max(n,d) * eps * sigma_1`.
///
/// Uses the full bidiagonalization path when both dimensions fit under
/// `dense_limit`; for tall matrices with few columns it falls back to an
/// eigendecomposition of the d x d Gram matrix. Anything larger is refused.
pub fn svd(a: &ColumnMatrix) -> Result<SvdFactors> {
    svd_with_limit(a, dense_limit_from_env())
}

/// Reads `RIDGETAP_DENSE_LIMIT` or falls back to [`DEFAULT_DENSE_LIMIT`].
pub fn dense_limit_from_env() -> usize {
    std::env::var("RIDGETAP_DENSE_LIMIT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DENSE_LIMIT)
}

pub fn svd_with_limit(a: &ColumnMatrix, limit: usize) -> Result<SvdFactors> {
    if a.is_empty() || a.n_rows() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let (n, d) = (a.n_rows(), a.n_cols());
    if n <= limit && d <= limit {
        svd_dense(a)
    } else if d <= limit {
        svd_gram(a)
    } else {
        Err(Error::DenseLimitExceeded { rows: n, cols: d, limit })
    }
}

fn svd_dense(a: &ColumnMatrix) -> Result<SvdFactors> {
    let dense = a.to_dense();
    let svd = dense.svd(true, true);
    let u_full = svd.u.expect("requested U");
    let vt_full = svd.v_t.expect("requested V'");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| {
        svd.singular_values[j].partial_cmp(&svd.singular_values[i]).expect("finite singulars")
    });
    let sigma_max = svd.singular_values[order[0]];
    let cutoff = rank_cutoff(a.n_rows(), a.n_cols(), sigma_max);
    let kept: Vec<usize> =
        order.into_iter().filter(|&i| svd.singular_values[i] > cutoff).collect();
    let r = kept.len();
    let mut u = DMatrix::zeros(a.n_rows(), r);
    let mut v = DMatrix::zeros(a.n_cols(), r);
    let mut sigma = Vec::with_capacity(r);
    for (slot, &i) in kept.iter().enumerate() {
        u.set_column(slot, &u_full.column(i));
        v.set_column(slot, &vt_full.row(i).transpose());
        sigma.push(svd.singular_values[i]);
    }
    Ok(SvdFactors { u, sigma, v, r })
}

/// Gram-matrix route for thin matrices: eigendecompose A'A, then lift the
/// left basis as U = A V diag(1/sigma).
fn svd_gram(a: &ColumnMatrix) -> Result<SvdFactors> {
    let d = a.n_cols();
    let mut gram = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let dot = sparse_dot(a.column(i), a.column(j));
            gram[(i, j)] = dot;
            gram[(j, i)] = dot;
        }
    }
    let eig = nalgebra::SymmetricEigen::new(gram);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| {
        eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).expect("finite eigenvalues")
    });
    let sigma_max = eig.eigenvalues[order[0]].max(0.0).sqrt();
    let cutoff = rank_cutoff(a.n_rows(), d, sigma_max);
    let kept: Vec<usize> = order
        .into_iter()
        .filter(|&i| eig.eigenvalues[i] > 0.0 && eig.eigenvalues[i].sqrt() > cutoff)
        .collect();
    let r = kept.len();
    let mut sigma = Vec::with_capacity(r);
    let mut v = DMatrix::zeros(d, r);
    for (slot, &i) in kept.iter().enumerate() {
        sigma.push(eig.eigenvalues[i].sqrt());
        v.set_column(slot, &eig.eigenvectors.column(i));
    }
    let mut u = DMatrix::zeros(a.n_rows(), r);
    for slot in 0..r {
        let mut acc = DVector::zeros(a.n_rows());
        for j in 0..d {
            let w = v[(j, slot)];
            if w != 0.0 {
                for &(i, x) in a.column(j) {
                    acc[i] += w * x;
                }
            }
        }
        acc /= sigma[slot];
        u.set_column(slot, &acc);
    }
    // Re-orthonormalize the lifted basis; the Gram route squares the
    // condition number, which shows up once singular values span ~8 digits.
    let qr = u.clone().qr();
    let (q, rr) = (qr.q(), qr.r());
    for slot in 0..r {
        if rr[(slot, slot)] < 0.0 {
            // keep U consistent with V under QR sign flips
            u.set_column(slot, &(-q.column(slot)));
            v.column_mut(slot).neg_mut();
        } else {
            u.set_column(slot, &q.column(slot));
        }
    }
    Ok(SvdFactors { u, sigma, v, r })
}

pub(crate) fn sparse_dot(a: &SparseColumn, b: &SparseColumn) -> f64 {
    let (mut i, mut j, mut acc) = (0, 0, 0.0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += a[i].1 * b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// `||A - A_k||_F^2 = total - sum of top-k squared singular values`.
///
/// `total_frob_sq` is passed in rather than recomputed because streaming
/// callers maintain it incrementally. Returns 0 for `k >= r`.
pub fn tail_norm(factors: &SvdFactors, k: usize, total_frob_sq: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::invalid("k", "must be >= 1"));
    }
    let head = factors.head_energy(k);
    let tail = total_frob_sq - head;
    if tail < -1e-9 * total_frob_sq.max(1.0) {
        return Err(Error::InconsistentTailNorm { value: tail, total: total_frob_sq });
    }
    Ok(tail.max(0.0))
}

/// Largest index m with `sigma_m^2 >= ||A - A_k||_F^2 / k`; m = r on zero tail.
pub fn spectral_split(factors: &SvdFactors, k: usize, total_frob_sq: f64) -> Result<SpectralSplit> {
    let tail_k = tail_norm(factors, k, total_frob_sq)?;
    let m = if tail_k == 0.0 {
        factors.r
    } else {
        let threshold = tail_k / k as f64;
        factors.sigma.iter().take_while(|&&s| s * s >= threshold).count()
    };
    let tail_m = (total_frob_sq - factors.head_energy(m)).max(0.0);
    Ok(SpectralSplit { m, tail_norm_k: tail_k, tail_norm_m: tail_m })
}

/// Projection cost `||A - ZZ'A||_F^2`, computed as `||A||_F^2 - ||Z'A||_F^2`
/// without forming the residual. `Z` must have orthonormal columns.
pub fn project_residual(a: &ColumnMatrix, z: &DMatrix<f64>) -> Result<f64> {
    if z.nrows() != a.n_rows() {
        return Err(Error::DimensionMismatch { expected: a.n_rows(), got: z.nrows() });
    }
    let dev = SvdFactors::check_orthonormal(z);
    if dev > ORTHO_TOL {
        return Err(Error::NonOrthonormal { max_dev: dev });
    }
    let mut captured = 0.0;
    for c in 0..z.ncols() {
        let zc = z.column(c).into_owned();
        for j in 0..a.n_cols() {
            let dot = a.col_dot_dense(j, &zc);
            captured += dot * dot;
        }
    }
    Ok((a.frob_sq() - captured).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::synth::{generate, SyntheticSpec};

    fn diag(values: &[f64]) -> ColumnMatrix {
        let n = values.len();
        let cols = values.iter().enumerate().map(|(i, &v)| vec![(i, v)]).collect();
        ColumnMatrix::from_columns(n, cols).unwrap()
    }

    #[test]
    fn svd_of_diagonal_is_identity_bases() {
        let a = diag(&[3.0, 2.0, 1.0]);
        let f = svd(&a).unwrap();
        assert_eq!(f.r, 3);
        for (i, want) in [3.0, 2.0, 1.0].into_iter().enumerate() {
            assert!((f.sigma[i] - want).abs() < 1e-12);
        }
        f.validate().unwrap();
        let err = (f.reconstruct() - a.to_dense()).norm();
        assert!(err < 1e-12);
    }

    #[test]
    fn svd_of_rank_one_outer_product() {
        // u = e1, v spread over 4 columns, both unit norm
        let u = [1.0, 0.0, 0.0];
        let v = [0.5, 0.5, 0.5, 0.5];
        let cols = v.iter().map(|&vi| vec![(0usize, vi * u[0])]).collect();
        let a = ColumnMatrix::from_columns(3, cols).unwrap();
        let f = svd(&a).unwrap();
        assert_eq!(f.r, 1);
        assert!((f.sigma[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn svd_matches_gram_oracle_on_sparse_random() {
        let spec = SyntheticSpec {
            n: 10,
            d: 20,
            signal_rank: 3,
            noise_scale: 0.3,
            sparsity: 0.2,
            seed: 11,
        };
        let a = generate(&spec).unwrap();
        let f = svd(&a).unwrap();
        f.validate().unwrap();
        let frob = a.frob_sq().sqrt();
        let err = (f.reconstruct() - a.to_dense()).norm();
        assert!(err <= 1e-10 * frob, "reconstruction error {err:e} vs {frob:e}");
        // independent oracle: eigendecomposition of the Gram matrix
        let oracle_sigma = oracle::gram_singular_values(&a);
        assert_eq!(oracle_sigma.len() >= f.r, true);
        for i in 0..f.r {
            assert!((f.sigma[i] - oracle_sigma[i]).abs() < 1e-8 * oracle_sigma[0].max(1.0));
        }
    }

    #[test]
    fn gram_path_used_for_tall_thin_matrices() {
        let spec =
            SyntheticSpec { n: 40, d: 6, signal_rank: 2, noise_scale: 0.1, sparsity: 1.0, seed: 3 };
        let a = generate(&spec).unwrap();
        let f = svd_with_limit(&a, 16).unwrap();
        f.validate().unwrap();
        let err = (f.reconstruct() - a.to_dense()).norm();
        assert!(err < 1e-9 * a.frob_sq().sqrt());
    }

    #[test]
    fn oversized_matrix_signals_sketched_path() {
        let spec =
            SyntheticSpec { n: 8, d: 30, signal_rank: 2, noise_scale: 0.1, sparsity: 1.0, seed: 5 };
        let a = generate(&spec).unwrap();
        match svd_with_limit(&a, 6) {
            Err(Error::DenseLimitExceeded { .. }) => {}
            other => panic!("expected DenseLimitExceeded, got {other:?}"),
        }
    }

    #[test]
    fn tail_norm_basics() {
        let a = diag(&[3.0, 2.0, 1.0]);
        let f = svd(&a).unwrap();
        let total = a.frob_sq();
        assert!((tail_norm(&f, 1, total).unwrap() - 5.0).abs() < 1e-12);
        assert_eq!(tail_norm(&f, 3, total).unwrap(), 0.0);
        assert_eq!(tail_norm(&f, 7, total).unwrap(), 0.0);
    }

    #[test]
    fn tail_norm_matches_full_svd_oracle() {
        let spec = SyntheticSpec {
            n: 8,
            d: 12,
            signal_rank: 4,
            noise_scale: 0.4,
            sparsity: 1.0,
            seed: 21,
        };
        let a = generate(&spec).unwrap();
        let f = svd(&a).unwrap();
        let total = a.frob_sq();
        let got = tail_norm(&f, 3, total).unwrap();
        let want: f64 = f.sigma.iter().skip(3).map(|s| s * s).sum();
        assert!((got - want).abs() < 1e-9 * total);
    }

    #[test]
    fn tail_norm_nonincreasing_and_complements_head() {
        let spec = SyntheticSpec {
            n: 12,
            d: 18,
            signal_rank: 5,
            noise_scale: 0.5,
            sparsity: 0.7,
            seed: 33,
        };
        let a = generate(&spec).unwrap();
        let f = svd(&a).unwrap();
        let total = a.frob_sq();
        let mut prev = f64::INFINITY;
        for k in 1..=10 {
            let t = tail_norm(&f, k, total).unwrap();
            assert!(t <= prev + 1e-12);
            assert!((t + f.head_energy(k) - total).abs() <= 1e-9 * total);
            prev = t;
        }
    }

    #[test]
    fn spectral_split_examples() {
        let a = diag(&[3.0, 2.0, 1.0]);
        let f = svd(&a).unwrap();
        let s = spectral_split(&f, 1, a.frob_sq()).unwrap();
        assert_eq!(s.m, 1); // 9 >= 5, 4 < 5
        assert!((s.tail_norm_k - 5.0).abs() < 1e-12);
        assert!((s.tail_norm_m - 5.0).abs() < 1e-12);

        let i4 = diag(&[1.0; 4]);
        let f4 = svd(&i4).unwrap();
        let s4 = spectral_split(&f4, 2, 4.0).unwrap();
        assert_eq!(s4.m, 4); // all sigma^2 = 1 >= 1

        // zero tail: m = r
        let s_full = spectral_split(&f, 3, a.frob_sq()).unwrap();
        assert_eq!(s_full.m, 3);
    }

    #[test]
    fn spectral_split_m_at_most_two_k() {
        for seed in 0..30u64 {
            let spec = SyntheticSpec {
                n: 10,
                d: 25,
                signal_rank: 4,
                noise_scale: 0.6,
                sparsity: 0.8,
                seed,
            };
            let a = generate(&spec).unwrap();
            let f = svd(&a).unwrap();
            for k in 1..=6 {
                let s = spectral_split(&f, k, a.frob_sq()).unwrap();
                assert!(s.m <= 2 * k, "m={} k={k} seed={seed}", s.m);
                assert!(s.tail_norm_m <= s.tail_norm_k + 1e-12);
            }
        }
    }

    #[test]
    fn project_residual_against_optimal_and_annihilating_bases() {
        let spec =
            SyntheticSpec { n: 6, d: 10, signal_rank: 3, noise_scale: 0.3, sparsity: 1.0, seed: 9 };
        let a = generate(&spec).unwrap();
        let f = svd(&a).unwrap();
        let k = 2;
        let zk = f.left_basis(k);
        let got = project_residual(&a, &zk).unwrap();
        let want = tail_norm(&f, k, a.frob_sq()).unwrap();
        assert!((got - want).abs() < 1e-9 * a.frob_sq());

        // basis orthogonal to range(A): residual equals the full mass
        if f.r < a.n_rows() {
            let mut z = DMatrix::zeros(a.n_rows(), a.n_rows() - f.r);
            // complement via QR of [U | I]
            let full = DMatrix::identity(a.n_rows(), a.n_rows());
            let mut basis: Vec<DVector<f64>> = (0..f.r).map(|c| f.u.column(c).into_owned()).collect();
            let mut slot = 0;
            for c in 0..a.n_rows() {
                let mut v = full.column(c).into_owned();
                for b in &basis {
                    let d = b.dot(&v);
                    v -= b * d;
                }
                if v.norm() > 1e-8 {
                    v /= v.norm();
                    z.set_column(slot, &v);
                    basis.push(v);
                    slot += 1;
                    if slot == z.ncols() {
                        break;
                    }
                }
            }
            let res = project_residual(&a, &z).unwrap();
            assert!((res - a.frob_sq()).abs() < 1e-8 * a.frob_sq());
        }
    }

    #[test]
    fn project_residual_matches_dense_oracle_and_svd_is_optimal() {
        let spec = SyntheticSpec {
            n: 6,
            d: 10,
            signal_rank: 4,
            noise_scale: 0.5,
            sparsity: 1.0,
            seed: 17,
        };
        let a = generate(&spec).unwrap();
        let f = svd(&a).unwrap();
        let k = 2;
        let opt = project_residual(&a, &f.left_basis(k)).unwrap();
        let mut rng = crate::rng::stream_rng(100, "probe", 0);
        for _ in 0..100 {
            let z = oracle::random_orthonormal(a.n_rows(), k, &mut rng);
            let fast = project_residual(&a, &z).unwrap();
            let explicit = oracle::explicit_projection_residual(&a.to_dense(), &z);
            assert!((fast - explicit).abs() < 1e-8 * a.frob_sq().max(1.0));
            assert!(opt <= fast + 1e-9 * a.frob_sq());
        }
    }

    #[test]
    fn rejects_bad_columns() {
        let mut m = ColumnMatrix::new(3);
        assert!(m.push_column(vec![(0, 1.0), (0, 2.0)]).is_err());
        assert!(m.push_column(vec![(5, 1.0)]).is_err());
        assert!(m.push_column(vec![(1, f64::NAN)]).is_err());
        assert!(m.push_column(vec![(2, 1.0), (0, -1.0)]).is_err());
    }

    #[test]
    fn explicit_zeros_are_dropped() {
        let mut m = ColumnMatrix::new(3);
        m.push_column(vec![(0, 1.0), (1, 0.0), (2, 2.0)]).unwrap();
        assert_eq!(m.nnz(), 2);
        assert_eq!(m.column(0).len(), 2);
    }

    #[test]
    fn non_orthonormal_basis_rejected() {
        let a = diag(&[1.0, 2.0]);
        let z = DMatrix::from_row_slice(2, 1, &[1.0, 1.0]);
        assert!(matches!(project_residual(&a, &z), Err(Error::NonOrthonormal { .. })));
    }
}
