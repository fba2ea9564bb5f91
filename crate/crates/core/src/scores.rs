//! Ridge leverage scores: exact, generalized with respect to a surrogate
//! matrix, and Johnson-Lindenstrauss-accelerated estimates, plus the
//! monotonicity certificate.
//!
//! The i-th ridge leverage score of `A` is
//! `a_i' (A A' + lambda I)^+ a_i` with `lambda = ||A - A_k||_F^2 / k`.
//! When `rank(A) <= k` the regularizer vanishes and the score degenerates to
//! the standard leverage score. Exact scores always lie in [0, 1] and sum to
//! at most `2k`.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::{self, ColumnMatrix, SparseColumn, SvdFactors};
use crate::report::{Guarantee, VerificationReport, Witness};
use crate::rng::stream_rng;
use crate::Result;

/// Span-membership tolerance for the infinite branch of generalized scores.
pub const SPAN_TOL: f64 = 1e-8;

/// How a score vector was produced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Exact,
    Generalized { reference: String },
    JlApprox { sketch_rows: usize },
    FdApprox,
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::Exact => "exact",
            Provenance::Generalized { .. } => "generalized",
            Provenance::JlApprox { .. } => "jl_approx",
            Provenance::FdApprox => "fd_approx",
        }
    }
}

/// Per-column score vector with the lambda it was computed under.
///
/// Infinite entries mark columns outside the span of a rank-deficient
/// reference matrix and only appear for non-exact provenances.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RidgeScores {
    pub scores: Vec<f64>,
    pub lambda: f64,
    pub k: usize,
    pub provenance: Provenance,
}

impl RidgeScores {
    /// Sum over finite entries.
    pub fn finite_sum(&self) -> f64 {
        self.scores.iter().filter(|s| s.is_finite()).sum()
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Checks the structural invariants for this provenance.
    pub fn validate(&self) -> Result<()> {
        match self.provenance {
            Provenance::Exact => {
                for (i, &s) in self.scores.iter().enumerate() {
                    if !(0.0..=1.0).contains(&s) {
                        return Err(Error::invalid(
                            "scores",
                            format!("exact score {s} at column {i} outside [0,1]"),
                        ));
                    }
                }
                let sum = self.finite_sum();
                let bound = 2.0 * self.k as f64 + 1e-9 * self.k as f64;
                if sum > bound {
                    return Err(Error::invalid(
                        "scores",
                        format!("exact scores sum {sum} exceeds 2k ({})", 2 * self.k),
                    ));
                }
            }
            _ => {
                for (i, &s) in self.scores.iter().enumerate() {
                    if s < 0.0 || s.is_nan() {
                        return Err(Error::invalid(
                            "scores",
                            format!("score {s} at column {i} invalid"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Factored application of `(M M' + lambda I)^+`.
///
/// Holds the left singular basis `R` of the reference matrix and the inverted
/// regularized spectrum. For `lambda > 0` the operator spans all of R^n
/// through the `(I - RR')/lambda` complement term; for `lambda = 0` it acts
/// on the span only and off-span vectors get an infinite quadratic form.
#[derive(Clone, Debug)]
pub struct RidgeSolver {
    basis: DMatrix<f64>,
    inv_sigma_bar: Vec<f64>,
    lambda: f64,
    reference_rank: usize,
    reference_label: String,
}

impl RidgeSolver {
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn reference_rank(&self) -> usize {
        self.reference_rank
    }

    pub fn n_rows(&self) -> usize {
        self.basis.nrows()
    }

    pub fn reference_label(&self) -> &str {
        &self.reference_label
    }

    pub fn inv_sigma_bar(&self) -> &[f64] {
        &self.inv_sigma_bar
    }

    fn project(&self, x: &SparseColumn) -> (DVector<f64>, f64) {
        // coefficients R'x and the squared norm of x
        let mut coeff = DVector::zeros(self.reference_rank);
        let mut norm_sq = 0.0;
        for &(i, v) in x {
            norm_sq += v * v;
            for c in 0..self.reference_rank {
                coeff[c] += self.basis[(i, c)] * v;
            }
        }
        (coeff, norm_sq)
    }

    /// Quadratic form `x' (M M' + lambda I)^+ x`; infinite when `lambda = 0`
    /// and `x` lies outside the span of the reference (relative tolerance
    /// [`SPAN_TOL`]).
    pub fn quadratic_form(&self, x: &SparseColumn) -> f64 {
        let (coeff, norm_sq) = self.project(x);
        let in_span: f64 = coeff.iter().map(|c| c * c).sum();
        let mut q = 0.0;
        for c in 0..self.reference_rank {
            let t = coeff[c] * self.inv_sigma_bar[c];
            q += t * t;
        }
        let off_span = (norm_sq - in_span).max(0.0);
        if self.lambda > 0.0 {
            q + off_span / self.lambda
        } else if off_span.sqrt() <= SPAN_TOL * norm_sq.sqrt() {
            q
        } else {
            f64::INFINITY
        }
    }

    /// Applies the symmetric square root
    /// `M_sym = R diag(inv_sigma_bar) R' + (1/sqrt(lambda)) (I - RR')`,
    /// so that `||M_sym x||^2` equals [`RidgeSolver::quadratic_form`].
    /// Returns `None` off-span when `lambda = 0`.
    pub fn apply_sym(&self, x: &SparseColumn) -> Option<DVector<f64>> {
        let (coeff, norm_sq) = self.project(x);
        let mut out = DVector::zeros(self.n_rows());
        for c in 0..self.reference_rank {
            let scale = coeff[c] * self.inv_sigma_bar[c];
            out.axpy(scale, &self.basis.column(c).into_owned(), 1.0);
        }
        if self.lambda > 0.0 {
            let inv_sqrt = 1.0 / self.lambda.sqrt();
            // (I - RR') x = x - R coeff
            let mut complement = DVector::zeros(self.n_rows());
            for &(i, v) in x {
                complement[i] = v;
            }
            for c in 0..self.reference_rank {
                complement.axpy(-coeff[c], &self.basis.column(c).into_owned(), 1.0);
            }
            out += complement * inv_sqrt;
            Some(out)
        } else {
            let in_span: f64 = coeff.iter().map(|c| c * c).sum();
            let off_span = (norm_sq - in_span).max(0.0);
            if off_span.sqrt() <= SPAN_TOL * norm_sq.sqrt() {
                Some(out)
            } else {
                None
            }
        }
    }
}

fn ridge_lambda(factors: &SvdFactors, k: usize, total_frob_sq: f64) -> Result<f64> {
    Ok(matrix::tail_norm(factors, k, total_frob_sq)? / k as f64)
}

/// Builds the factored solver for `(M M' + lambda_M I)^+` with
/// `lambda_M = ||M - M_k||_F^2 / k`.
pub fn build_ridge_solver(m: &ColumnMatrix, k: usize) -> Result<RidgeSolver> {
    if m.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let factors = matrix::svd(m)?;
    let lambda = ridge_lambda(&factors, k, m.frob_sq())?;
    let inv_sigma_bar: Vec<f64> =
        factors.sigma.iter().map(|s| 1.0 / (s * s + lambda).sqrt()).collect();
    Ok(RidgeSolver {
        basis: factors.u,
        inv_sigma_bar,
        lambda,
        reference_rank: factors.r,
        reference_label: format!("{}x{}", m.n_rows(), m.n_cols()),
    })
}

/// Exact ridge leverage scores of `A` at rank parameter `k`.
///
/// Works entirely in the left singular basis (columns of `A` lie in it, so
/// the complement term never contributes). Scores are clamped to [0, 1] to
/// absorb roundoff at the top end.
pub fn exact_ridge_scores(a: &ColumnMatrix, k: usize) -> Result<RidgeScores> {
    if a.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if k == 0 || k > a.n_rows().min(a.n_cols()) {
        return Err(Error::invalid("k", format!("k={k} outside [1, min(n,d)]")));
    }
    let factors = matrix::svd(a)?;
    let lambda = ridge_lambda(&factors, k, a.frob_sq())?;
    let mut scores = Vec::with_capacity(a.n_cols());
    for j in 0..a.n_cols() {
        let mut q = 0.0;
        for c in 0..factors.r {
            let coeff: f64 = a.column(j).iter().map(|&(i, v)| factors.u[(i, c)] * v).sum();
            q += coeff * coeff / (factors.sigma[c] * factors.sigma[c] + lambda);
        }
        scores.push(q.clamp(0.0, 1.0));
    }
    Ok(RidgeScores { scores, lambda, k, provenance: Provenance::Exact })
}

/// Generalized ridge leverage scores of `A` with respect to `M`:
/// the quadratic form through `(M M' + lambda_M I)^+`, infinite for columns
/// outside the span of a rank-deficient reference.
pub fn generalized_ridge_scores(
    a: &ColumnMatrix,
    m: &ColumnMatrix,
    k: usize,
) -> Result<RidgeScores> {
    if m.n_rows() != a.n_rows() {
        return Err(Error::DimensionMismatch { expected: a.n_rows(), got: m.n_rows() });
    }
    let solver = build_ridge_solver(m, k)?;
    Ok(scores_via_solver(a, &solver, k))
}

/// Column-by-column application of a prebuilt solver; same contract as
/// [`generalized_ridge_scores`]. The solver is read-only, so callers may
/// score disjoint column ranges concurrently.
pub fn scores_via_solver(a: &ColumnMatrix, solver: &RidgeSolver, k: usize) -> RidgeScores {
    let scores = (0..a.n_cols()).map(|j| solver.quadratic_form(a.column(j))).collect();
    RidgeScores {
        scores,
        lambda: solver.lambda(),
        k,
        provenance: Provenance::Generalized { reference: solver.reference_label().to_string() },
    }
}

/// Johnson-Lindenstrauss estimates of the solver's quadratic forms:
/// `||Pi M_sym a_i||^2` with a `sketch_rows x n` random sign embedding.
///
/// With `sketch_rows = O(log(d/delta))` every score lands within a factor
/// (1 +- 1/2) of the exact form with probability `1 - delta`; callers that
/// need guaranteed overestimates inflate accordingly.
pub fn jl_ridge_scores(
    a: &ColumnMatrix,
    solver: &RidgeSolver,
    sketch_rows: usize,
    rng_seed: u64,
) -> Result<RidgeScores> {
    if sketch_rows == 0 {
        return Err(Error::invalid("sketch_rows", "must be >= 1"));
    }
    if solver.n_rows() != a.n_rows() {
        return Err(Error::DimensionMismatch { expected: a.n_rows(), got: solver.n_rows() });
    }
    let mut rng = stream_rng(rng_seed, "jl-sketch", 0);
    let scale = 1.0 / (sketch_rows as f64).sqrt();
    let pi = DMatrix::from_fn(sketch_rows, a.n_rows(), |_, _| {
        if rng.random::<bool>() {
            scale
        } else {
            -scale
        }
    });
    jl_scores_with_sketch(a, solver, &pi)
}

/// JL scores against a caller-supplied embedding; `pi` must have `n` columns.
/// Exposed so tests can drive the estimate with an isometric embedding.
pub fn jl_scores_with_sketch(
    a: &ColumnMatrix,
    solver: &RidgeSolver,
    pi: &DMatrix<f64>,
) -> Result<RidgeScores> {
    if pi.ncols() != a.n_rows() {
        return Err(Error::DimensionMismatch { expected: a.n_rows(), got: pi.ncols() });
    }
    let rows = pi.nrows();
    let r = solver.reference_rank;
    // P = Pi R (rows x r), formed once
    let p = pi * &solver.basis;
    let mut scores = Vec::with_capacity(a.n_cols());
    for j in 0..a.n_cols() {
        let col = a.column(j);
        let (coeff, norm_sq) = solver.project(col);
        let mut q = DVector::zeros(rows);
        for c in 0..r {
            q.axpy(coeff[c] * solver.inv_sigma_bar[c], &p.column(c).into_owned(), 1.0);
        }
        if solver.lambda > 0.0 {
            let inv_sqrt = 1.0 / solver.lambda.sqrt();
            // Pi (I - RR') a = Pi a - P coeff
            let mut tail = DVector::zeros(rows);
            for &(i, v) in col {
                tail.axpy(v, &pi.column(i).into_owned(), 1.0);
            }
            for c in 0..r {
                tail.axpy(-coeff[c], &p.column(c).into_owned(), 1.0);
            }
            q.axpy(inv_sqrt, &tail, 1.0);
        } else {
            let in_span: f64 = coeff.iter().map(|c| c * c).sum();
            let off_span = (norm_sq - in_span).max(0.0);
            if off_span.sqrt() > SPAN_TOL * norm_sq.sqrt() {
                scores.push(f64::INFINITY);
                continue;
            }
        }
        scores.push(q.norm_squared());
    }
    Ok(RidgeScores {
        scores,
        lambda: solver.lambda,
        k: 0,
        provenance: Provenance::JlApprox { sketch_rows: rows },
    })
}

/// Certifies score monotonicity under a column append: no existing column's
/// exact ridge score may increase (beyond `tolerance`) when `x` is appended.
/// Recomputes both SVDs; this is a verification op, not a fast path.
pub fn check_monotonicity(
    a: &ColumnMatrix,
    x: &SparseColumn,
    k: usize,
    tolerance: f64,
) -> Result<VerificationReport> {
    let before = exact_ridge_scores(a, k)?;
    let extended = a.with_appended(x)?;
    let after = exact_ridge_scores(&extended, k)?;
    let mut max_delta = f64::NEG_INFINITY;
    let mut arg = 0usize;
    for j in 0..a.n_cols() {
        let delta = after.scores[j] - before.scores[j];
        if delta > max_delta {
            max_delta = delta;
            arg = j;
        }
    }
    let passed = max_delta <= tolerance;
    let witness = Witness {
        vector: Some(vec![arg as f64, before.scores[arg], after.scores[arg]]),
        achieved: max_delta,
        detail: format!("max score increase at column {arg}"),
    };
    Ok(VerificationReport::new(Guarantee::Monotonicity, passed, witness, tolerance))
}
