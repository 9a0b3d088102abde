//! Core decomposition by bucketed peeling.

use crate::graph::Graph;

/// Core number of every node, computed on the simple undirected view.
///
/// Peeling in nondecreasing degree order with bucket counters runs in
/// O(n + m) and never allocates per step.
pub fn core_numbers(graph: &Graph) -> Vec<u32> {
    let csr = graph.simple_undirected();
    let n = csr.node_count();
    if n == 0 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = (0..n).map(|u| csr.row_len(u as u32)).collect();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // vert holds nodes sorted by current degree; bin[d] is the start of
    // the block with degree d; pos tracks each node's slot.
    let mut bin = vec![0usize; max_degree + 2];
    for &d in &degree {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0u32; n];
    let mut pos = vec![0usize; n];
    {
        let mut cursor = bin.clone();
        for u in 0..n {
            let slot = cursor[degree[u]];
            vert[slot] = u as u32;
            pos[u] = slot;
            cursor[degree[u]] += 1;
        }
    }

    let mut core = vec![0u32; n];
    for i in 0..n {
        let u = vert[i];
        core[u as usize] = degree[u as usize] as u32;
        for &v in csr.neighbors(u) {
            let v = v as usize;
            if degree[v] > degree[u as usize] {
                // Move v to the front of its degree block, then shrink it.
                let dv = degree[v];
                let pv = pos[v];
                let pw = bin[dv];
                let w = vert[pw];
                if v as u32 != w {
                    vert[pv] = w;
                    pos[w as usize] = pv;
                    vert[pw] = v as u32;
                    pos[v] = pw;
                }
                bin[dv] += 1;
                degree[v] -= 1;
            }
        }
    }
    core
}

/// Largest k such that the k-core is nonempty.
pub fn max_core(graph: &Graph) -> u32 {
    core_numbers(graph).into_iter().max().unwrap_or(0)
}
