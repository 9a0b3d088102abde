//! Degree assortativity over the simple undirected view.
//!
//! Both variants are Pearson correlations of degrees across edge ends,
//! computed from exact integer moment sums so the result is independent
//! of edge order and node numbering down to the last bit.

use crate::graph::Graph;

/// Integer moments over all symmetrized edge-end pairs (x, y): each
/// undirected edge contributes both (du, dv) and (dv, du).
struct Moments {
    /// Number of pairs, twice the simple edge count.
    m: i128,
    /// Number of nodes.
    n: i128,
    /// Sum of degrees over nodes.
    s_deg: i128,
    /// Sum of x over pairs.
    sx: i128,
    /// Sum of x * x over pairs.
    sxx: i128,
    /// Sum of x * y over pairs.
    sxy: i128,
}

fn moments(graph: &Graph) -> Moments {
    let csr = graph.simple_undirected();
    let n = csr.node_count();
    let mut sx = 0i128;
    let mut sxx = 0i128;
    let mut sxy = 0i128;
    let mut s_deg = 0i128;
    for u in 0..n {
        let du = csr.row_len(u as u32) as i128;
        s_deg += du;
        // u appears as the x end of du pairs.
        sx += du * du;
        sxx += du * du * du;
        for &v in csr.neighbors(u as u32) {
            sxy += du * csr.row_len(v) as i128;
        }
    }
    Moments { m: csr.arc_count() as i128, n: n as i128, s_deg, sx, sxx, sxy }
}

fn ratio(num: i128, den: i128) -> Option<f64> {
    if den == 0 {
        None
    } else {
        Some(num as f64 / den as f64)
    }
}

/// Pearson degree correlation with means taken over edge ends.
/// `None` when every edge end has the same degree (zero variance).
pub fn degree_assortativity(graph: &Graph) -> Option<f64> {
    let mo = moments(graph);
    ratio(mo.m * mo.sxy - mo.sx * mo.sx, mo.m * mo.sxx - mo.sx * mo.sx)
}

/// Variant that centers degrees on the node mean rather than the edge-end
/// mean. Hubs are weighted less, so the two differ on skewed graphs.
pub fn degree_assortativity_node_mean(graph: &Graph) -> Option<f64> {
    let mo = moments(graph);
    let cross = 2 * mo.n * mo.s_deg * mo.sx - mo.m * mo.s_deg * mo.s_deg;
    ratio(
        mo.n * mo.n * mo.sxy - cross,
        mo.n * mo.n * mo.sxx - cross,
    )
}
