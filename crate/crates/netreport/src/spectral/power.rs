//! Spectral radius of directed adjacency matrices.
//!
//! The adjacency matrix of a directed graph is not symmetric, so Lanczos
//! does not apply. Power iteration on the shifted matrix A + I converges
//! to the dominant eigenvalue whenever the radius is attained by a
//! semisimple eigenvalue: shifting maps every eigenvalue l to l + 1, and
//! |l + 1| < rho + 1 holds strictly unless l = rho, so the real Perron
//! root always dominates after the shift even when unshifted eigenvalues
//! tie in magnitude (directed cycles).
//!
//! Two escape hatches keep the answer honest. Graphs whose strongly
//! connected components are all trivial and loop-free are acyclic, so the
//! radius is exactly zero and no iteration runs. When the iteration fails
//! to converge (a defective dominant eigenvalue decays like 1/k), the
//! largest singular value is reported instead, flagged as an upper bound.

use crate::exec::{dot, Execution};
use crate::graph::{strong_components, Graph};
use crate::spectral::lanczos::{axpy, spmv};
use crate::spectral::SpectralRadius;

const MAX_ITER: usize = 5000;

pub(crate) fn directed_radius(graph: &Graph, exec: Execution, tol: f64) -> SpectralRadius {
    let n = graph.node_count();
    let csr = graph.spectral_out();
    if n == 0 || csr.arc_count() == 0 {
        return SpectralRadius { value: 0.0, is_upper_bound: false, converged: true };
    }

    // Acyclic fast path: all SCCs trivial and no self-loops means every
    // eigenvalue is zero.
    let strong = strong_components(graph);
    let has_loop = (0..n as u32).any(|u| csr.neighbors(u).contains(&u));
    if strong.count() == n && !has_loop {
        return SpectralRadius { value: 0.0, is_upper_bound: false, converged: true };
    }

    let tol = tol.max(1e-12);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0f64; n];
    let mut prev_lambda = f64::NAN;
    let mut steady = 0usize;

    for _ in 0..MAX_ITER {
        // y = (A + I) x
        spmv(exec, csr, &x, &mut y);
        axpy(exec, &mut y, 1.0, &x);
        let lambda = dot(exec, &x, &y);
        // residual of the shifted problem: || y - lambda x ||
        let mut resid_sq = 0.0;
        for i in 0..n {
            let d = y[i] - lambda * x[i];
            resid_sq += d * d;
        }
        let scale = lambda.abs().max(1.0);
        let resid_ok = resid_sq.sqrt() <= tol * scale;
        let delta_ok = (lambda - prev_lambda).abs() <= tol * scale;
        if resid_ok && delta_ok {
            steady += 1;
            if steady >= 2 {
                return SpectralRadius {
                    value: (lambda - 1.0).max(0.0),
                    is_upper_bound: false,
                    converged: true,
                };
            }
        } else {
            steady = 0;
        }
        prev_lambda = lambda;
        let norm = dot(exec, &y, &y).sqrt();
        if norm <= 0.0 {
            // The iterate died; with the shift this cannot happen for a
            // nonnegative start, but fall through defensively.
            break;
        }
        let inv = 1.0 / norm;
        for i in 0..n {
            x[i] = y[i] * inv;
        }
    }

    // No convergence: report sigma_1 >= rho as an explicit upper bound.
    let sv = super::top_singular_values(graph, 1, exec, tol);
    SpectralRadius {
        value: sv.values.first().copied().unwrap_or(0.0),
        is_upper_bound: true,
        converged: sv.converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed(n: usize, arcs: &[(u32, u32)]) -> Graph {
        Graph::from_pairs(true, false, n, arcs).expect("graph")
    }

    #[test]
    fn dag_has_zero_radius() {
        let g = directed(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let r = directed_radius(&g, Execution::Sequential, 1e-10);
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
        assert!(!r.is_upper_bound);
    }

    #[test]
    fn three_cycle_radius_is_one() {
        let g = directed(3, &[(0, 1), (1, 2), (2, 0)]);
        let r = directed_radius(&g, Execution::Sequential, 1e-10);
        assert!((r.value - 1.0).abs() < 1e-8, "got {}", r.value);
        assert!(!r.is_upper_bound);
    }

    #[test]
    fn self_loop_radius_is_one() {
        let g = directed(2, &[(0, 0), (0, 1)]);
        let r = directed_radius(&g, Execution::Sequential, 1e-10);
        assert!((r.value - 1.0).abs() < 1e-8, "got {}", r.value);
    }

    #[test]
    fn two_cycle_radius_is_one() {
        let g = directed(2, &[(0, 1), (1, 0)]);
        let r = directed_radius(&g, Execution::Sequential, 1e-10);
        assert!((r.value - 1.0).abs() < 1e-8, "got {}", r.value);
    }
}
