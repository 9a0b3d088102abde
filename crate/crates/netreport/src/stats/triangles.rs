//! Triangle counting and clustering coefficients.

use crate::exec::{map_indexed, Execution};
use crate::graph::Graph;

/// Everything the triangle pass produces in one sweep over the simple
/// undirected view.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleCensus {
    /// Triangles through each node.
    pub per_node: Vec<u64>,
    /// Local clustering coefficient; 0 for nodes of degree at most 1.
    pub local: Vec<f64>,
    /// Total number of distinct triangles.
    pub total: u64,
    /// Number of wedges, `sum of C(d, 2)` over simple degrees.
    pub wedges: u128,
    /// `3 * total / wedges`; `None` when there are no wedges.
    pub global: Option<f64>,
    /// Mean of `local` over all nodes.
    pub mean_local: f64,
}

/// Count triangles per node by merging sorted neighbor lists.
///
/// For each arc (u, v) the intersection |N(u) and N(v)| counts the third
/// corners, so summing over v counts every triangle at u twice.
pub fn triangle_census(graph: &Graph, exec: Execution) -> TriangleCensus {
    let csr = graph.simple_undirected();
    let n = csr.node_count();

    let per_node: Vec<u64> = map_indexed(exec, n, |u| {
        let u = u as u32;
        let nu = csr.neighbors(u);
        let mut paired = 0u64;
        for &v in nu {
            paired += sorted_intersection(nu, csr.neighbors(v));
        }
        debug_assert_eq!(paired % 2, 0);
        paired / 2
    });

    let mut total_times_three = 0u64;
    let mut wedges = 0u128;
    let mut local = vec![0.0f64; n];
    let mut local_sum = 0.0f64;
    for u in 0..n {
        total_times_three += per_node[u];
        let d = csr.row_len(u as u32) as u128;
        let w = d * (d.saturating_sub(1)) / 2;
        wedges += w;
        if w > 0 {
            local[u] = per_node[u] as f64 / w as f64;
        }
        local_sum += local[u];
    }
    debug_assert_eq!(total_times_three % 3, 0);
    let total = total_times_three / 3;
    let global = if wedges > 0 {
        Some(3.0 * total as f64 / wedges as f64)
    } else {
        None
    };
    let mean_local = if n > 0 { local_sum / n as f64 } else { 0.0 };
    TriangleCensus { per_node, local, total, wedges, global, mean_local }
}

fn sorted_intersection(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut count) = (0usize, 0usize, 0u64);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(n: usize, pairs: &[(u32, u32)]) -> Graph {
        Graph::from_pairs(false, false, n, pairs).expect("graph")
    }

    fn census(g: &Graph) -> TriangleCensus {
        triangle_census(g, Execution::Sequential)
    }

    #[test]
    fn single_triangle() {
        let c = census(&undirected(3, &[(0, 1), (1, 2), (2, 0)]));
        assert_eq!(c.total, 1);
        assert_eq!(c.per_node, vec![1, 1, 1]);
        assert_eq!(c.local, vec![1.0, 1.0, 1.0]);
        assert_eq!(c.global, Some(1.0));
        assert_eq!(c.mean_local, 1.0);
    }

    #[test]
    fn triangle_with_pendant() {
        // Pendant on node 0: degrees 3, 2, 2, 1 give 5 wedges, 1 triangle.
        let c = census(&undirected(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]));
        assert_eq!(c.total, 1);
        assert_eq!(c.wedges, 5);
        assert_eq!(c.global, Some(3.0 / 5.0));
        assert_eq!(c.local, vec![1.0 / 3.0, 1.0, 1.0, 0.0]);
        assert_eq!(c.mean_local, (1.0 / 3.0 + 1.0 + 1.0 + 0.0) / 4.0);
    }

    #[test]
    fn complete_graph_counts_all_triples() {
        let pairs: Vec<(u32, u32)> =
            (0..5u32).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let c = census(&undirected(5, &pairs));
        assert_eq!(c.total, 10);
        assert!(c.per_node.iter().all(|&t| t == 6));
        assert_eq!(c.global, Some(1.0));
    }

    #[test]
    fn triangle_free_graph_has_zero_clustering() {
        // A star has wedges but no triangles.
        let c = census(&undirected(4, &[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(c.total, 0);
        assert_eq!(c.wedges, 3);
        assert_eq!(c.global, Some(0.0));
        assert_eq!(c.mean_local, 0.0);
    }

    #[test]
    fn no_wedges_means_no_global_coefficient() {
        let c = census(&undirected(4, &[(0, 1), (2, 3)]));
        assert_eq!(c.global, None);
        assert_eq!(c.wedges, 0);
    }

    #[test]
    fn directed_graphs_use_the_undirected_view() {
        // A directed 3-cycle closes one undirected triangle.
        let g = Graph::from_pairs(true, false, 3, &[(0, 1), (1, 2), (2, 0)]).expect("graph");
        let c = census(&g);
        assert_eq!(c.total, 1);
    }

    #[test]
    fn parallel_matches_sequential_exactly() {
        // Deterministic pseudo-random graph, large enough to span chunks.
        let mut pairs = Vec::new();
        let mut x = 0x9e3779b97f4a7c15u64;
        for _ in 0..4000 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let u = ((x >> 20) % 800) as u32;
            let v = ((x >> 40) % 800) as u32;
            if u != v {
                pairs.push((u.min(v), u.max(v)));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let g = Graph::from_pairs(false, false, 800, &pairs).expect("graph");
        let seq = triangle_census(&g, Execution::Sequential);
        let par = triangle_census(&g, Execution::Parallel);
        assert_eq!(seq, par);
    }
}
