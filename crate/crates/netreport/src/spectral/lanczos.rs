//! Krylov iterations for the sparse eigenproblems.
//!
//! One Lanczos routine serves both extremal symmetric eigenvalues (largest
//! adjacency eigenvalue, smallest deflated Laplacian eigenvalue) and, in
//! its two-sided form, the leading singular values. All inner products and
//! updates go through the deterministic kernels in `exec`, and random
//! restart directions come from a fixed-seed generator, so results do not
//! depend on the execution mode.
//!
//! On a breakdown (the new direction collapses into the span of the basis)
//! the iteration continues from a fresh orthogonal direction with a zero
//! coupling coefficient. The projected matrix then decouples into blocks,
//! which the tridiagonal solver handles as is. This matters for exactness:
//! a single Krylov sequence can never split a repeated eigenvalue, but the
//! continued basis spans the whole space on small inputs.

use crate::exec::{dot, for_each_chunk, Execution};
use crate::graph::Csr;
use crate::spectral::tridiag::Tridiagonal;

/// Inputs at or below this size run to exhaustion of the space, making the
/// result exact up to rounding rather than iteratively approximated.
const EXACT_THRESHOLD: usize = 128;

const LANCZOS_CHECK_EVERY: usize = 8;
const GKL_CHECK_EVERY: usize = 12;

/// Relative breakdown threshold for coupling coefficients.
const BREAKDOWN: f64 = 1e-12;

/// y = A x over a CSR row structure.
pub(crate) fn spmv(exec: Execution, csr: &Csr, x: &[f64], y: &mut [f64]) {
    for_each_chunk(exec, y, |start, chunk| {
        for (i, out) in chunk.iter_mut().enumerate() {
            let mut s = 0.0;
            for &v in csr.neighbors((start + i) as u32) {
                s += x[v as usize];
            }
            *out = s;
        }
    });
}

/// y += a * x.
pub(crate) fn axpy(exec: Execution, y: &mut [f64], a: f64, x: &[f64]) {
    for_each_chunk(exec, y, |start, chunk| {
        for (i, out) in chunk.iter_mut().enumerate() {
            *out += a * x[start + i];
        }
    });
}

fn scale(exec: Execution, x: &mut [f64], s: f64) {
    for_each_chunk(exec, x, |_, chunk| {
        for out in chunk.iter_mut() {
            *out *= s;
        }
    });
}

/// Normalizes x to unit length; returns the norm it had.
fn normalize(exec: Execution, x: &mut [f64]) -> f64 {
    let norm = dot(exec, x, x).sqrt();
    if norm > 0.0 {
        scale(exec, x, 1.0 / norm);
    }
    norm
}

/// Twice-iterated Gram-Schmidt against the basis and an optional exact
/// null direction.
fn reorthogonalize(exec: Execution, w: &mut [f64], basis: &[Vec<f64>], deflate: Option<&[f64]>) {
    for _ in 0..2 {
        if let Some(q) = deflate {
            let c = dot(exec, q, w);
            axpy(exec, w, -c, q);
        }
        for q in basis {
            let c = dot(exec, q, w);
            axpy(exec, w, -c, q);
        }
    }
}

/// Fixed-seed generator for restart directions.
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [-0.5, 0.5).
    fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    }
}

/// A unit vector orthogonal to the basis (and the deflated direction), or
/// `None` when the space is exhausted.
fn fresh_orthogonal(
    n: usize,
    rng: &mut SplitMix64,
    basis: &[Vec<f64>],
    deflate: Option<&[f64]>,
    exec: Execution,
) -> Option<Vec<f64>> {
    let span = basis.len() + usize::from(deflate.is_some());
    if span >= n {
        return None;
    }
    for _ in 0..8 {
        let mut v: Vec<f64> = (0..n).map(|_| rng.next_unit()).collect();
        let before = dot(exec, &v, &v).sqrt();
        reorthogonalize(exec, &mut v, basis, deflate);
        let after = normalize(exec, &mut v);
        if after > 1e-8 * before {
            return Some(v);
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Extremal {
    Largest,
    Smallest,
}

#[derive(Clone, Debug)]
pub(crate) struct LanczosResult {
    pub value: f64,
    pub converged: bool,
}

/// Extremal eigenvalue of a symmetric operator by Lanczos with full
/// reorthogonalization.
#[allow(clippy::too_many_arguments)]
pub(crate) fn lanczos_extremal(
    n: usize,
    apply: impl Fn(&[f64], &mut [f64]),
    start: Vec<f64>,
    deflate: Option<&[f64]>,
    m_max: usize,
    tol: f64,
    exec: Execution,
    which: Extremal,
) -> LanczosResult {
    debug_assert_eq!(start.len(), n);
    let space_dim = n - usize::from(deflate.is_some());
    if space_dim == 0 {
        return LanczosResult { value: 0.0, converged: true };
    }
    let exhaustive = n <= EXACT_THRESHOLD;
    let m_cap = if exhaustive { space_dim } else { m_max.min(space_dim).max(1) };
    let tol = tol.max(1e-13);

    let mut rng = SplitMix64::new(0x6c616e637a6f7321);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m_cap);
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();

    let mut v = start;
    if let Some(q) = deflate {
        let c = dot(exec, q, &v);
        axpy(exec, &mut v, -c, q);
    }
    if normalize(exec, &mut v) <= 0.0 {
        match fresh_orthogonal(n, &mut rng, &basis, deflate, exec) {
            Some(f) => v = f,
            None => return LanczosResult { value: 0.0, converged: true },
        }
    }

    let mut w = vec![0.0f64; n];
    let mut prev_theta: Option<f64> = None;
    let mut stable = 0usize;
    let mut converged = false;
    let mut exhausted = false;

    for j in 0..m_cap {
        apply(&v, &mut w);
        let alpha = dot(exec, &v, &w);
        axpy(exec, &mut w, -alpha, &v);
        if j > 0 && betas[j - 1] > 0.0 {
            axpy(exec, &mut w, -betas[j - 1], &basis[j - 1]);
        }
        basis.push(std::mem::take(&mut v));
        reorthogonalize(exec, &mut w, &basis, deflate);
        alphas.push(alpha);

        if basis.len() == m_cap {
            break;
        }

        // Estimate before extending, using the completed projection.
        if !exhaustive && (j + 1) % LANCZOS_CHECK_EVERY == 0 {
            let t = Tridiagonal::new(alphas.clone(), betas.clone());
            let theta = match which {
                Extremal::Largest => t.largest(),
                Extremal::Smallest => t.smallest(),
            };
            if let Some(p) = prev_theta {
                if (theta - p).abs() <= tol * theta.abs().max(1.0) {
                    stable += 1;
                } else {
                    stable = 0;
                }
            }
            prev_theta = Some(theta);
            if stable >= 2 {
                converged = true;
                break;
            }
        }

        let reach = alphas
            .iter()
            .chain(betas.iter())
            .fold(1.0f64, |a, &x| a.max(x.abs()));
        let beta = normalize(exec, &mut w);
        if beta <= reach * BREAKDOWN {
            betas.push(0.0);
            match fresh_orthogonal(n, &mut rng, &basis, deflate, exec) {
                Some(f) => {
                    v = f;
                    w = vec![0.0; n];
                }
                None => {
                    exhausted = true;
                    break;
                }
            }
        } else {
            betas.push(beta);
            v = std::mem::replace(&mut w, vec![0.0; n]);
        }
    }

    betas.truncate(alphas.len().saturating_sub(1));
    let t = Tridiagonal::new(alphas, betas);
    let value = match which {
        Extremal::Largest => t.largest(),
        Extremal::Smallest => t.smallest(),
    };
    if exhaustive || exhausted || basis.len() >= space_dim {
        converged = true;
    }
    LanczosResult { value, converged }
}

#[derive(Clone, Debug)]
pub(crate) struct GklResult {
    pub values: Vec<f64>,
    pub converged: bool,
}

/// Top-k singular values by Golub-Kahan-Lanczos bidiagonalization with
/// full reorthogonalization of both bases.
pub(crate) fn gkl_top_singular(
    n: usize,
    apply_a: impl Fn(&[f64], &mut [f64]),
    apply_at: impl Fn(&[f64], &mut [f64]),
    k: usize,
    m_max: usize,
    tol: f64,
    exec: Execution,
) -> GklResult {
    let k = k.min(n);
    if k == 0 || n == 0 {
        return GklResult { values: Vec::new(), converged: true };
    }
    let exhaustive = n <= EXACT_THRESHOLD;
    let m_cap = if exhaustive { n } else { m_max.min(n).max(k) };
    let tol = tol.max(1e-13);

    let mut rng = SplitMix64::new(0x62696469616d7321);
    let mut us: Vec<Vec<f64>> = Vec::with_capacity(m_cap);
    let mut vs: Vec<Vec<f64>> = Vec::with_capacity(m_cap);
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();

    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut p = vec![0.0f64; n];
    let mut r = vec![0.0f64; n];
    let mut prev: Option<Vec<f64>> = None;
    let mut stable = 0usize;
    let mut converged = false;
    let mut exhausted = false;

    for j in 0..m_cap {
        // p = A v_j - beta_{j-1} u_{j-1}
        apply_a(&v, &mut p);
        if j > 0 && betas[j - 1] > 0.0 {
            axpy(exec, &mut p, -betas[j - 1], &us[j - 1]);
        }
        vs.push(std::mem::take(&mut v));
        reorthogonalize(exec, &mut p, &us, None);
        let reach = alphas
            .iter()
            .chain(betas.iter())
            .fold(1.0f64, |a, &x| a.max(x.abs()));
        let alpha = normalize(exec, &mut p);
        let u = if alpha <= reach * BREAKDOWN {
            alphas.push(0.0);
            match fresh_orthogonal(n, &mut rng, &us, None, exec) {
                Some(f) => f,
                None => {
                    // The image space is spanned; all remaining singular
                    // values are zero.
                    vs.pop();
                    exhausted = true;
                    break;
                }
            }
        } else {
            alphas.push(alpha);
            std::mem::replace(&mut p, vec![0.0; n])
        };
        us.push(u);

        // r = At u_j - alpha_j v_j
        apply_at(&us[j], &mut r);
        if alphas[j] > 0.0 {
            axpy(exec, &mut r, -alphas[j], &vs[j]);
        }
        reorthogonalize(exec, &mut r, &vs, None);

        if vs.len() == m_cap {
            break;
        }

        if !exhaustive && (j + 1) % GKL_CHECK_EVERY == 0 && alphas.len() >= k {
            let estimates = singular_estimates(&alphas, &betas, k);
            if let Some(p_est) = &prev {
                let anchor = estimates.first().copied().unwrap_or(0.0).max(1e-300);
                let ok = estimates
                    .iter()
                    .zip(p_est.iter())
                    .all(|(a, b)| (a - b).abs() <= tol * anchor);
                if ok {
                    stable += 1;
                } else {
                    stable = 0;
                }
            }
            prev = Some(estimates);
            if stable >= 2 {
                converged = true;
                break;
            }
        }

        let beta = normalize(exec, &mut r);
        if beta <= reach.max(alphas[j]) * BREAKDOWN {
            betas.push(0.0);
            match fresh_orthogonal(n, &mut rng, &vs, None, exec) {
                Some(f) => v = f,
                None => {
                    exhausted = true;
                    break;
                }
            }
        } else {
            betas.push(beta);
            v = std::mem::replace(&mut r, vec![0.0; n]);
        }
    }

    betas.truncate(alphas.len().saturating_sub(1));
    let mut values = if alphas.is_empty() {
        Vec::new()
    } else {
        singular_estimates(&alphas, &betas, k)
    };
    // Exhaustion means the rest of the spectrum is exactly zero.
    while values.len() < k {
        values.push(0.0);
    }
    if exhaustive || exhausted || vs.len() >= n {
        converged = true;
    }
    GklResult { values, converged }
}

/// Top-k singular values of the bidiagonal matrix with diagonal `alphas`
/// and superdiagonal `betas`, via the tridiagonal normal-equations form.
fn singular_estimates(alphas: &[f64], betas: &[f64], k: usize) -> Vec<f64> {
    let m = alphas.len();
    let mut diag = Vec::with_capacity(m);
    let mut off = Vec::with_capacity(m.saturating_sub(1));
    for j in 0..m {
        let b_prev = if j > 0 { betas[j - 1] } else { 0.0 };
        diag.push(alphas[j] * alphas[j] + b_prev * b_prev);
        if j + 1 < m {
            off.push(alphas[j] * betas[j]);
        }
    }
    let t = Tridiagonal::new(diag, off);
    t.largest_k(k).into_iter().map(|x| x.max(0.0).sqrt()).collect()
}
