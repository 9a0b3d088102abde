//! PageRank scores in the unnormalized convention.
//!
//! The fixed point solved here is x_v = 1 + alpha * sum over in-neighbors
//! u of x_u / outdeg(u), so every score is at least 1 and the scores sum
//! to n / (1 - alpha) once dangling mass is redistributed. Out-degrees
//! count deduplicated arcs, self-loops included, matching the adjacency
//! view used by the other spectral statistics.
//!
//! Each sweep gathers over in-neighbors rather than scattering over
//! out-neighbors: gathering writes each output entry exactly once, which
//! keeps the parallel and sequential paths bit-identical.

use crate::exec::{dot, for_each_chunk, map_indexed, Execution};
use crate::graph::Graph;
use crate::spectral::{DanglingPolicy, PageRankOptions, PageRankResult};
use crate::{Error, Result};

pub(crate) fn pagerank_scores(graph: &Graph, opts: &PageRankOptions) -> Result<PageRankResult> {
    let n = graph.node_count();
    if n == 0 {
        return Ok(PageRankResult {
            scores: Vec::new(),
            iterations: 0,
            converged: true,
            delta: 0.0,
        });
    }
    if !(opts.alpha >= 0.0 && opts.alpha < 1.0) {
        return Err(Error::usage(format!(
            "damping factor must lie in [0, 1), got {}",
            opts.alpha
        )));
    }

    let out = graph.spectral_out();
    let into = graph.spectral_in();
    let exec = opts.exec;

    // Reciprocal out-degrees, and the dangling nodes in index order.
    let mut inv_out = vec![0.0f64; n];
    let mut dangling: Vec<usize> = Vec::new();
    for u in 0..n {
        let d = out.row_len(u as u32);
        if d == 0 {
            dangling.push(u);
        } else {
            inv_out[u] = 1.0 / d as f64;
        }
    }
    if !dangling.is_empty() && opts.dangling == DanglingPolicy::Error {
        return Err(Error::usage(format!(
            "{} node(s) have no outgoing edges and the dangling policy is strict",
            dangling.len()
        )));
    }

    let alpha = opts.alpha;
    let tol = opts.tol.max(1e-12);
    let mut x = vec![1.0f64; n];
    let mut delta = f64::INFINITY;
    let mut iterations = 0usize;

    while iterations < opts.max_iter {
        // Dangling contribution is summed in index order for determinism.
        let mut lost = 0.0;
        for &u in &dangling {
            lost += x[u];
        }
        let uniform_extra = match opts.dangling {
            DanglingPolicy::Uniform => lost / n as f64,
            DanglingPolicy::SelfLoop | DanglingPolicy::Error => 0.0,
        };
        let keep_self = opts.dangling == DanglingPolicy::SelfLoop;

        let y = map_indexed(exec, n, |v| {
            let mut acc = 0.0;
            for &u in into.neighbors(v as u32) {
                acc += x[u as usize] * inv_out[u as usize];
            }
            if keep_self && inv_out[v] == 0.0 {
                acc += x[v];
            }
            1.0 + alpha * (acc + uniform_extra)
        });
        iterations += 1;

        // max-norm step size, reduced over fixed chunks
        let diffs = map_indexed(exec, n, |v| (y[v] - x[v]).abs());
        delta = diffs.iter().copied().fold(0.0f64, f64::max);

        x = y;
        if delta <= tol {
            return Ok(PageRankResult { scores: x, iterations, converged: true, delta });
        }
    }

    Ok(PageRankResult { scores: x, iterations, converged: false, delta })
}

/// Sum of scores, used by invariants and tests.
#[allow(dead_code)]
pub(crate) fn total_mass(scores: &[f64], exec: Execution) -> f64 {
    let ones = vec![1.0f64; scores.len()];
    dot(exec, scores, &ones)
}

/// Writes scores scaled so that they average to one; handy for reporting.
#[allow(dead_code)]
pub(crate) fn normalize_mean(scores: &mut [f64], exec: Execution) {
    if scores.is_empty() {
        return;
    }
    let mean = total_mass(scores, exec) / scores.len() as f64;
    if mean > 0.0 {
        let inv = 1.0 / mean;
        for_each_chunk(exec, scores, |_, chunk| {
            for s in chunk.iter_mut() {
                *s *= inv;
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> PageRankOptions {
        PageRankOptions {
            alpha: 0.85,
            tol: 1e-12,
            max_iter: 10_000,
            dangling: DanglingPolicy::Uniform,
            exec: Execution::Sequential,
        }
    }

    #[test]
    fn regular_graph_scores_are_uniform() {
        // Any regular graph: x = 1 / (1 - alpha) everywhere.
        let g = Graph::from_pairs(false, false, 3, &[(0, 1), (1, 2), (2, 0)]).expect("graph");
        let r = pagerank_scores(&g, &opts()).expect("pagerank");
        assert!(r.converged);
        for &s in &r.scores {
            assert!((s - 20.0 / 3.0).abs() < 1e-9, "got {s}");
        }
    }

    #[test]
    fn directed_pair_matches_hand_solution() {
        // u -> v with uniform dangling redistribution over n = 2.
        // x_u = 1 + a x_v / 2, x_v = 1 + a x_u + a x_v / 2.
        let g = Graph::from_pairs(true, false, 2, &[(0, 1)]).expect("graph");
        let r = pagerank_scores(&g, &opts()).expect("pagerank");
        let expected_u = 1.0 / 0.21375;
        let expected_v = 1.85 / 0.21375;
        assert!((r.scores[0] - expected_u).abs() < 1e-8, "u = {}", r.scores[0]);
        assert!((r.scores[1] - expected_v).abs() < 1e-8, "v = {}", r.scores[1]);
    }

    #[test]
    fn mass_sums_to_n_over_one_minus_alpha() {
        let g = Graph::from_pairs(true, false, 4, &[(0, 1), (1, 2), (2, 0), (0, 3)])
            .expect("graph");
        let r = pagerank_scores(&g, &opts()).expect("pagerank");
        let total: f64 = r.scores.iter().sum();
        assert!((total - 4.0 / 0.15).abs() < 1e-7, "total = {total}");
    }

    #[test]
    fn self_loop_policy_keeps_dangling_mass_in_place() {
        let g = Graph::from_pairs(true, false, 2, &[(0, 1)]).expect("graph");
        let mut o = opts();
        o.dangling = DanglingPolicy::SelfLoop;
        let r = pagerank_scores(&g, &o).expect("pagerank");
        // x_u = 1, x_v = (1 + a) / (1 - a).
        assert!((r.scores[0] - 1.0).abs() < 1e-9);
        assert!((r.scores[1] - 1.85 / 0.15).abs() < 1e-8);
        let total: f64 = r.scores.iter().sum();
        assert!((total - 2.0 / 0.15).abs() < 1e-8);
    }

    #[test]
    fn strict_policy_rejects_dangling_nodes() {
        let g = Graph::from_pairs(true, false, 2, &[(0, 1)]).expect("graph");
        let mut o = opts();
        o.dangling = DanglingPolicy::Error;
        assert!(pagerank_scores(&g, &o).is_err());
    }

    #[test]
    fn undirected_star_matches_closed_form() {
        // Star K_{1,3}: x_c = 1 + 3a x_l and x_l = 1 + a x_c / 3, so
        // x_l = (1 + a/3) / (1 - a^2).
        let g = Graph::from_pairs(false, false, 4, &[(0, 1), (0, 2), (0, 3)]).expect("graph");
        let r = pagerank_scores(&g, &opts()).expect("pagerank");
        let a = 0.85;
        let leaf = (1.0 + a / 3.0) / (1.0 - a * a);
        let center = 1.0 + 3.0 * a * leaf;
        assert!((r.scores[0] - center).abs() < 1e-8, "center = {}", r.scores[0]);
        for i in 1..4 {
            assert!((r.scores[i] - leaf).abs() < 1e-8, "leaf = {}", r.scores[i]);
        }
    }
}
