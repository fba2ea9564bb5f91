//! Synthetic instance generator: planted low-rank signal plus sparse noise,
//! deterministic under an explicit seed.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Error;
use crate::matrix::{ColumnMatrix, SparseColumn};
use crate::rng::stream_rng;
use crate::Result;

/// Parameters for [`generate`].
///
/// The output is `signal + noise_scale * sparse noise`, where the signal is a
/// rank-`signal_rank` planted factor product restricted to a random subset of
/// "active" columns. Planted factors are unit-normalized so error ratios are
/// scale-stable. `sparsity` is the expected fraction of nonzero entries; with
/// `sparsity = 1` the matrix is dense and all columns carry signal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SyntheticSpec {
    pub n: usize,
    pub d: usize,
    pub signal_rank: usize,
    pub noise_scale: f64,
    pub sparsity: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    /// Per-column signal-activation and per-entry noise probability.
    ///
    /// Both are set to `1 - sqrt(1 - sparsity)` so the expected nonzero
    /// fraction `alpha + (1 - alpha) * alpha` equals `sparsity` exactly
    /// (active columns are dense; inactive ones only hold noise entries).
    pub fn density_split(&self) -> f64 {
        1.0 - (1.0 - self.sparsity.clamp(0.0, 1.0)).sqrt()
    }
}

/// Deterministically generates the planted instance.
pub fn generate(spec: &SyntheticSpec) -> Result<ColumnMatrix> {
    if spec.n == 0 || spec.d == 0 {
        return Err(Error::EmptyMatrix);
    }
    if spec.signal_rank == 0 || spec.signal_rank > spec.n.min(spec.d) {
        return Err(Error::invalid("signal_rank", "must be in [1, min(n,d)]"));
    }
    if !(0.0..=1.0).contains(&spec.sparsity) || spec.sparsity == 0.0 {
        return Err(Error::invalid("sparsity", "must be in (0, 1]"));
    }
    if spec.noise_scale < 0.0 {
        return Err(Error::invalid("noise_scale", "must be >= 0"));
    }
    let alpha = spec.density_split();
    let expected_active = alpha * spec.d as f64;
    if expected_active < 2.0 * spec.signal_rank as f64 {
        return Err(Error::invalid(
            "sparsity",
            format!(
                "expected {expected_active:.1} active columns cannot plant rank {}",
                spec.signal_rank
            ),
        ));
    }

    let r = spec.signal_rank;
    let mut factor_rng = stream_rng(spec.seed, "synth-factors", 0);
    // left factor: n x r with orthonormalized unit columns
    let raw: DMatrix<f64> =
        DMatrix::from_fn(spec.n, r, |_, _| StandardNormal.sample(&mut factor_rng));
    let left = raw.qr().q();

    let mut col_rng = stream_rng(spec.seed, "synth-columns", 0);
    let mut noise_rng = stream_rng(spec.seed, "synth-noise", 0);
    let mut m = ColumnMatrix::new(spec.n);
    for _ in 0..spec.d {
        let active = col_rng.random_bool(alpha);
        let mut dense = vec![0.0f64; spec.n];
        if active {
            // unit-normalized mixing weights for this column
            let mut w: Vec<f64> =
                (0..r).map(|_| -> f64 { StandardNormal.sample(&mut col_rng) }).collect();
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                for x in &mut w {
                    *x /= norm;
                }
            }
            for (j, &wj) in w.iter().enumerate() {
                for i in 0..spec.n {
                    dense[i] += left[(i, j)] * wj;
                }
            }
        }
        if spec.noise_scale > 0.0 {
            for value in dense.iter_mut() {
                if noise_rng.random_bool(alpha) {
                    let g: f64 = StandardNormal.sample(&mut noise_rng);
                    *value += spec.noise_scale * g;
                }
            }
        }
        let col: SparseColumn =
            dense.into_iter().enumerate().filter(|&(_, v)| v != 0.0).collect();
        m.push_column(col)?;
    }
    Ok(m)
}
