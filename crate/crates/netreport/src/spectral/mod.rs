//! Eigenvalue, singular value, and PageRank solvers.
//!
//! Everything here works matrix-free against the graph's CSR adjacency
//! views and reports convergence honestly: results carry flags instead of
//! silently returning a bad number when an iteration budget runs out.
//!
//! The adjacency convention is the deduplicated arc set with self-loops
//! kept once, so a multigraph and its simple projection have the same
//! spectrum. The Laplacian is built from the simple undirected view.

mod lanczos;
mod pagerank;
mod power;
mod tridiag;

use crate::exec::{for_each_chunk, Execution};
use crate::graph::{weak_components, Graph};
use lanczos::{gkl_top_singular, lanczos_extremal, spmv, Extremal};

/// Iteration caps for large inputs; small inputs run to exhaustion and
/// are exact regardless of these.
const RADIUS_STEPS: usize = 200;
const FIEDLER_STEPS: usize = 160;

/// Largest adjacency eigenvalue by magnitude.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralRadius {
    pub value: f64,
    /// True when the reported value is a certified upper bound (largest
    /// singular value) rather than the radius itself.
    pub is_upper_bound: bool,
    pub converged: bool,
}

/// A scalar statistic together with its convergence status.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalarOutcome {
    pub value: f64,
    pub converged: bool,
}

/// Leading singular values in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularValues {
    pub values: Vec<f64>,
    /// What the caller asked for; `values` holds `min(requested, n)`.
    pub requested: usize,
    pub converged: bool,
}

/// What to do with nodes that have no outgoing edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DanglingPolicy {
    /// Redistribute their mass uniformly over all nodes.
    #[default]
    Uniform,
    /// Treat them as if they linked only to themselves.
    SelfLoop,
    /// Refuse to run.
    Error,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PageRankOptions {
    pub alpha: f64,
    /// Convergence threshold on the max-norm step size.
    pub tol: f64,
    pub max_iter: usize,
    pub dangling: DanglingPolicy,
    pub exec: Execution,
}

impl Default for PageRankOptions {
    fn default() -> Self {
        PageRankOptions {
            alpha: 0.85,
            tol: 1e-10,
            max_iter: 10_000,
            dangling: DanglingPolicy::Uniform,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PageRankResult {
    /// Unnormalized scores; every entry is at least 1 and the total is
    /// n / (1 - alpha) under the uniform and self-loop policies.
    pub scores: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Max-norm step size of the final sweep.
    pub delta: f64,
}

/// Spectral radius of the adjacency matrix.
///
/// Undirected graphs use symmetric Lanczos started from the all-ones
/// vector, which has positive overlap with the Perron vector. Directed
/// graphs use shifted power iteration with an acyclic fast path; see the
/// `is_upper_bound` flag for the fallback behavior.
pub fn spectral_radius(graph: &Graph, exec: Execution, tol: f64) -> SpectralRadius {
    if graph.is_directed() {
        return power::directed_radius(graph, exec, tol);
    }
    let n = graph.node_count();
    let csr = graph.spectral_out();
    if n == 0 || csr.arc_count() == 0 {
        return SpectralRadius { value: 0.0, is_upper_bound: false, converged: true };
    }
    let start = vec![1.0f64; n];
    let r = lanczos_extremal(
        n,
        |x, y| spmv(exec, csr, x, y),
        start,
        None,
        RADIUS_STEPS,
        tol,
        exec,
        Extremal::Largest,
    );
    // Ritz values approach the top eigenvalue from below, so even a
    // truncated run never overshoots.
    SpectralRadius { value: r.value.max(0.0), is_upper_bound: false, converged: r.converged }
}

/// Second-smallest Laplacian eigenvalue of an undirected graph.
///
/// Zero for disconnected graphs by definition. The constant vector is an
/// exact null direction of the Laplacian, so it is deflated explicitly
/// and the iteration starts from a linear ramp, which is orthogonal to it
/// in exact arithmetic.
pub fn algebraic_connectivity(graph: &Graph, exec: Execution, tol: f64) -> ScalarOutcome {
    let n = graph.node_count();
    if n <= 1 {
        return ScalarOutcome { value: 0.0, converged: true };
    }
    if weak_components(graph).count() > 1 {
        return ScalarOutcome { value: 0.0, converged: true };
    }
    let csr = graph.simple_undirected();
    let deg: Vec<f64> = (0..n).map(|u| csr.row_len(u as u32) as f64).collect();
    let apply = |x: &[f64], y: &mut [f64]| {
        spmv(exec, csr, x, y);
        for_each_chunk(exec, y, |start, chunk| {
            for (i, out) in chunk.iter_mut().enumerate() {
                let idx = start + i;
                *out = deg[idx] * x[idx] - *out;
            }
        });
    };
    let q = vec![1.0 / (n as f64).sqrt(); n];
    let shift = (n as f64 - 1.0) / 2.0;
    let start: Vec<f64> = (0..n).map(|i| i as f64 - shift).collect();
    let r = lanczos_extremal(
        n,
        apply,
        start,
        Some(&q),
        FIEDLER_STEPS,
        tol,
        exec,
        Extremal::Smallest,
    );
    // Ritz values approach the bottom of the deflated spectrum from
    // above: a truncated run reports an upper bound on connectivity.
    ScalarOutcome { value: r.value.max(0.0), converged: r.converged }
}

/// Leading `k` singular values of the adjacency matrix, descending.
pub fn top_singular_values(graph: &Graph, k: usize, exec: Execution, tol: f64) -> SingularValues {
    let n = graph.node_count();
    let k_eff = k.min(n);
    if k_eff == 0 {
        return SingularValues { values: Vec::new(), requested: k, converged: true };
    }
    let out = graph.spectral_out();
    if out.arc_count() == 0 {
        return SingularValues { values: vec![0.0; k_eff], requested: k, converged: true };
    }
    let into = graph.spectral_in();
    let m_max = (2 * k_eff + 60).min(n);
    let r = gkl_top_singular(
        n,
        |x, y| spmv(exec, out, x, y),
        |x, y| spmv(exec, into, x, y),
        k_eff,
        m_max,
        tol,
        exec,
    );
    SingularValues { values: r.values, requested: k, converged: r.converged }
}

/// PageRank scores under the given options.
pub fn pagerank(graph: &Graph, opts: &PageRankOptions) -> crate::Result<PageRankResult> {
    pagerank::pagerank_scores(graph, opts)
}
