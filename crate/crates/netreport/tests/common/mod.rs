//! Shared test infrastructure: seeded graph generators, naive combinatorial
//! oracles, dense spectral oracles, and small checkers reused by the
//! acceptance gate and the property suite.
//!
//! The oracles deliberately avoid the library's own data structures where
//! they can: they start from the raw pair list and derive their own views,
//! so a bug in the adjacency building cannot hide in both routes.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use nalgebra::{DMatrix, DVector};
use netreport::graph::{DegreeMode, Graph};
use netreport::stats::{FieldValue, PointStats};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Seeded generators
// ---------------------------------------------------------------------------

/// G(n, p): each candidate pair independently with probability `p`.
/// Undirected graphs draw unordered pairs, directed graphs ordered ones;
/// no self-loops.
pub fn er_pairs(rng: &mut ChaCha8Rng, n: u32, p: f64, directed: bool) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s == t || (!directed && s > t) {
                continue;
            }
            if rng.random::<f64>() < p {
                pairs.push((s, t));
            }
        }
    }
    pairs
}

/// G(n, m): exactly `m` distinct pairs, sampled by rejection. No self-loops.
pub fn er_pairs_nm(seed: u64, n: u32, m: usize, directed: bool) -> Vec<(u32, u32)> {
    let mut rng = rng(seed);
    let mut seen = HashSet::with_capacity(m * 2);
    let mut pairs = Vec::with_capacity(m);
    while pairs.len() < m {
        let s = rng.random_range(0..n);
        let t = rng.random_range(0..n);
        if s == t {
            continue;
        }
        let key = if directed || s < t { (s, t) } else { (t, s) };
        if seen.insert(key) {
            pairs.push(key);
        }
    }
    pairs
}

pub fn graph_from_pairs(n: u32, pairs: &[(u32, u32)], directed: bool) -> Graph {
    Graph::from_pairs(directed, false, n as usize, pairs).expect("test graph")
}

/// The same graph with node ids shuffled by a seeded permutation.
pub fn permuted_graph(seed: u64, n: u32, pairs: &[(u32, u32)], directed: bool) -> Graph {
    let mut perm: Vec<u32> = (0..n).collect();
    perm.shuffle(&mut rng(seed));
    let mapped: Vec<(u32, u32)> =
        pairs.iter().map(|&(s, t)| (perm[s as usize], perm[t as usize])).collect();
    graph_from_pairs(n, &mapped, directed)
}

/// Plain whitespace edge-list text for feeding the CLI.
pub fn edge_list_text(pairs: &[(u32, u32)]) -> String {
    let mut out = String::with_capacity(pairs.len() * 12);
    for &(s, t) in pairs {
        out.push_str(&s.to_string());
        out.push(' ');
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Naive combinatorial oracle
// ---------------------------------------------------------------------------

/// Everything the combinatorial statistics should say about a graph, computed
/// by the most direct method available: brute-force loops over sets.
pub struct Naive {
    pub n: usize,
    pub m_raw: usize,
    pub m_simplified: usize,
    pub average_degree: f64,
    pub average_degree_simplified: f64,
    pub degrees_total: Vec<usize>,
    pub simple_degrees: Vec<usize>,
    pub lcc_weak: f64,
    pub lcc_strong: Option<f64>,
    pub triangles: u64,
    pub avg_triangles_per_node: f64,
    pub global_clustering: Option<f64>,
    pub local_clustering: Vec<f64>,
    pub mean_local_clustering: f64,
    pub assortativity: Option<f64>,
    pub assortativity_node_mean: Option<f64>,
    pub power_law: Option<f64>,
    pub max_k_core: u64,
}

pub fn naive_stats(n: usize, raw: &[(u32, u32)], directed: bool) -> Naive {
    // Loop-free deduplicated undirected pair set: the combinatorial view.
    let mut simple: HashSet<(u32, u32)> = HashSet::new();
    for &(s, t) in raw {
        if s != t {
            simple.insert((s.min(t), s.max(t)));
        }
    }
    let mut adj: Vec<HashSet<u32>> = vec![HashSet::new(); n];
    for &(a, b) in &simple {
        adj[a as usize].insert(b);
        adj[b as usize].insert(a);
    }
    let simple_degrees: Vec<usize> = adj.iter().map(|s| s.len()).collect();

    // Raw degree convention: undirected self-loops count twice, directed
    // total degree is out plus in.
    let mut degrees_total = vec![0usize; n];
    for &(s, t) in raw {
        degrees_total[s as usize] += 1;
        degrees_total[t as usize] += 1;
    }

    let m_simplified = if directed {
        raw.iter().collect::<HashSet<_>>().len()
    } else {
        let loops = raw.iter().filter(|(s, t)| s == t).map(|&(s, _)| s).collect::<HashSet<_>>();
        simple.len() + loops.len()
    };
    let ends = if directed { 1.0 } else { 2.0 };
    let average_degree = ends * raw.len() as f64 / n as f64;
    let average_degree_simplified = ends * m_simplified as f64 / n as f64;

    // Triangles by brute force over vertex triples.
    let mut triangles = 0u64;
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            if !adj[i as usize].contains(&j) {
                continue;
            }
            for k in j + 1..n as u32 {
                if adj[i as usize].contains(&k) && adj[j as usize].contains(&k) {
                    triangles += 1;
                }
            }
        }
    }
    let avg_triangles_per_node = 3.0 * triangles as f64 / n as f64;

    // Clustering.
    let mut local_clustering = vec![0.0f64; n];
    let mut wedges = 0u64;
    for u in 0..n {
        let d = simple_degrees[u];
        if d < 2 {
            continue;
        }
        wedges += (d * (d - 1) / 2) as u64;
        let neigh: Vec<u32> = adj[u].iter().copied().collect();
        let mut links = 0u64;
        for i in 0..neigh.len() {
            for j in i + 1..neigh.len() {
                if adj[neigh[i] as usize].contains(&neigh[j]) {
                    links += 1;
                }
            }
        }
        local_clustering[u] = links as f64 / (d * (d - 1) / 2) as f64;
    }
    let global_clustering =
        if wedges == 0 { None } else { Some(3.0 * triangles as f64 / wedges as f64) };
    let mean_local_clustering = local_clustering.iter().sum::<f64>() / n as f64;

    // Assortativity over symmetrized edge-end pairs, plain f64 Pearson.
    let mut xs = Vec::with_capacity(simple.len() * 2);
    for &(a, b) in &simple {
        let da = simple_degrees[a as usize] as f64;
        let db = simple_degrees[b as usize] as f64;
        xs.push((da, db));
        xs.push((db, da));
    }
    let assortativity = pearson(&xs);
    let assortativity_node_mean = node_mean_assortativity(&xs, &simple_degrees);

    // Components.
    let lcc_weak = largest_component(n, &adj) as f64 / n as f64;
    let lcc_strong = if directed {
        Some(largest_scc(n, raw) as f64 / n as f64)
    } else {
        None
    };

    // Power-law fit by direct evaluation of the formula.
    let power_law = naive_power_law(&degrees_total);

    let max_k_core = naive_k_core(n, &adj);

    Naive {
        n,
        m_raw: raw.len(),
        m_simplified,
        average_degree,
        average_degree_simplified,
        degrees_total,
        simple_degrees,
        lcc_weak,
        lcc_strong,
        triangles,
        avg_triangles_per_node,
        global_clustering,
        local_clustering,
        mean_local_clustering,
        assortativity,
        assortativity_node_mean,
        power_law,
        max_k_core,
    }
}

fn pearson(pairs: &[(f64, f64)]) -> Option<f64> {
    if pairs.is_empty() {
        return None;
    }
    let m = pairs.len() as f64;
    let sx: f64 = pairs.iter().map(|p| p.0).sum();
    let sy: f64 = pairs.iter().map(|p| p.1).sum();
    let sxx: f64 = pairs.iter().map(|p| p.0 * p.0).sum();
    let syy: f64 = pairs.iter().map(|p| p.1 * p.1).sum();
    let sxy: f64 = pairs.iter().map(|p| p.0 * p.1).sum();
    let num = m * sxy - sx * sy;
    let den = ((m * sxx - sx * sx) * (m * syy - sy * sy)).sqrt();
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

/// The variant that centers on the node-average degree instead of the
/// edge-end average: r = sum (du - dbar)(dv - dbar) / sum (du - dbar)^2.
fn node_mean_assortativity(pairs: &[(f64, f64)], simple_degrees: &[usize]) -> Option<f64> {
    if pairs.is_empty() {
        return None;
    }
    let dbar = simple_degrees.iter().sum::<usize>() as f64 / simple_degrees.len() as f64;
    let num: f64 = pairs.iter().map(|p| (p.0 - dbar) * (p.1 - dbar)).sum();
    let den: f64 = pairs.iter().map(|p| (p.0 - dbar) * (p.0 - dbar)).sum();
    if den == 0.0 {
        None
    } else {
        Some(num / den)
    }
}

fn largest_component(n: usize, adj: &[HashSet<u32>]) -> usize {
    let mut seen = vec![false; n];
    let mut best = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start as u32];
        seen[start] = true;
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        best = best.max(size);
    }
    best
}

/// Strongly connected components by transitive closure: u and v share a
/// component iff each reaches the other. Cubic, fine at oracle sizes.
fn largest_scc(n: usize, raw: &[(u32, u32)]) -> usize {
    let mut reach = vec![vec![false; n]; n];
    for u in 0..n {
        reach[u][u] = true;
    }
    for &(s, t) in raw {
        reach[s as usize][t as usize] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut best = 0;
    for u in 0..n {
        let size = (0..n).filter(|&v| reach[u][v] && reach[v][u]).count();
        best = best.max(size);
    }
    best
}

fn naive_power_law(degrees: &[usize]) -> Option<f64> {
    let positive: Vec<usize> = degrees.iter().copied().filter(|&d| d > 0).collect();
    if positive.len() < 10 {
        return None;
    }
    let d_min = *positive.iter().min().unwrap();
    let log_sum: f64 = positive.iter().map(|&d| (d as f64 / d_min as f64).ln()).sum();
    if log_sum <= 0.0 {
        return None;
    }
    Some(1.0 + positive.len() as f64 / log_sum)
}

/// Exhaustive peeling: the largest k for which repeatedly deleting nodes of
/// degree below k leaves something.
pub fn naive_k_core(n: usize, adj: &[HashSet<u32>]) -> u64 {
    let max_deg = adj.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut best = 0u64;
    for k in 0..=max_deg {
        let mut deg: Vec<usize> = adj.iter().map(|s| s.len()).collect();
        let mut alive = vec![true; n];
        loop {
            let mut removed = false;
            for u in 0..n {
                if alive[u] && deg[u] < k {
                    alive[u] = false;
                    removed = true;
                    for &v in &adj[u] {
                        if alive[v as usize] {
                            deg[v as usize] -= 1;
                        }
                    }
                }
            }
            if !removed {
                break;
            }
        }
        if alive.iter().any(|&a| a) {
            best = k as u64;
        }
    }
    best
}

/// Triangle count via the trace of the cubed adjacency matrix.
pub fn trace_triangles(n: usize, raw: &[(u32, u32)]) -> f64 {
    let mut a = DMatrix::<f64>::zeros(n, n);
    for &(s, t) in raw {
        if s != t {
            a[(s as usize, t as usize)] = 1.0;
            a[(t as usize, s as usize)] = 1.0;
        }
    }
    let a3 = &a * &a * &a;
    a3.trace() / 6.0
}

// ---------------------------------------------------------------------------
// Dense spectral oracles
// ---------------------------------------------------------------------------

/// Adjacency matrix over the deduplicated arc set with self-loops kept once,
/// built from the raw pairs rather than the library's sparse structure.
pub fn dense_adjacency(n: usize, raw: &[(u32, u32)], directed: bool) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(n, n);
    for &(s, t) in raw {
        a[(s as usize, t as usize)] = 1.0;
        if !directed {
            a[(t as usize, s as usize)] = 1.0;
        }
    }
    a
}

/// Largest adjacency eigenvalue magnitude of a symmetric matrix.
pub fn dense_radius_sym(a: &DMatrix<f64>) -> f64 {
    let eig = a.clone().symmetric_eigen();
    eig.eigenvalues.iter().fold(0.0f64, |m, &l| m.max(l.abs()))
}

/// Second-smallest Laplacian eigenvalue over the loop-free undirected view.
pub fn dense_fiedler(n: usize, raw: &[(u32, u32)]) -> f64 {
    let mut simple: HashSet<(u32, u32)> = HashSet::new();
    for &(s, t) in raw {
        if s != t {
            simple.insert((s.min(t), s.max(t)));
        }
    }
    let mut l = DMatrix::<f64>::zeros(n, n);
    for &(a, b) in &simple {
        let (a, b) = (a as usize, b as usize);
        l[(a, a)] += 1.0;
        l[(b, b)] += 1.0;
        l[(a, b)] -= 1.0;
        l[(b, a)] -= 1.0;
    }
    let mut ev: Vec<f64> = l.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev[1]
}

/// Leading singular values in descending order.
pub fn dense_singular(a: &DMatrix<f64>, k: usize) -> Vec<f64> {
    let svd = a.clone().svd(false, false);
    let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv.truncate(k);
    sv
}

/// PageRank by dense linear solve of (I - alpha P) x = 1 under the uniform
/// dangling policy, where P is the column-normalized adjacency.
pub fn dense_pagerank(n: usize, raw: &[(u32, u32)], directed: bool, alpha: f64) -> Vec<f64> {
    let a = dense_adjacency(n, raw, directed);
    let mut p = DMatrix::<f64>::zeros(n, n);
    for s in 0..n {
        let out: f64 = a.row(s).iter().sum();
        if out == 0.0 {
            for t in 0..n {
                p[(t, s)] = 1.0 / n as f64;
            }
        } else {
            for t in 0..n {
                p[(t, s)] = a[(s, t)] / out;
            }
        }
    }
    let system = DMatrix::identity(n, n) - p * alpha;
    let b = DVector::from_element(n, 1.0);
    let x = system.lu().solve(&b).expect("dense PageRank system is nonsingular");
    x.iter().copied().collect()
}

// ---------------------------------------------------------------------------
// Comparison helpers
// ---------------------------------------------------------------------------

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// Compares two statistics tables field by field: counts and flags exactly,
/// reals within `tol`, absence matching absence.
pub fn stats_close(a: &PointStats, b: &PointStats, tol: f64) -> Result<(), String> {
    for ((name, fa), (_, fb)) in a.fields().iter().zip(b.fields().iter()) {
        let ok = match (fa, fb) {
            (FieldValue::Count(x), FieldValue::Count(y)) => x == y,
            (FieldValue::Flag(x), FieldValue::Flag(y)) => x == y,
            (FieldValue::Real(x), FieldValue::Real(y)) => match (x.value(), y.value()) {
                (Some(x), Some(y)) => close(x, y, tol),
                (None, None) => true,
                _ => false,
            },
            _ => false,
        };
        if !ok {
            return Err(format!("field {name} differs: {fa:?} vs {fb:?}"));
        }
    }
    Ok(())
}

/// Raw total degrees per the report's degree convention.
pub fn impl_degrees(g: &Graph) -> Vec<usize> {
    g.degrees(DegreeMode::Total)
}

// ---------------------------------------------------------------------------
// CLI and filesystem helpers
// ---------------------------------------------------------------------------

/// The compiled binary under test.
pub fn cli() -> std::process::Command {
    std::process::Command::new(env!("CARGO_BIN_EXE_netreport"))
}

/// A path relative to the repository root (two levels above this crate).
pub fn repo_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

/// A path relative to this crate's directory.
pub fn crate_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

/// Reads a directory tree into relative-path -> bytes, sorted by path.
pub fn read_tree(root: &Path) -> std::io::Result<BTreeMap<String, Vec<u8>>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![root.to_path_buf()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir)? {
            let path = entry?.path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(root)
                    .expect("path under root")
                    .to_string_lossy()
                    .into_owned();
                out.insert(rel, std::fs::read(&path)?);
            }
        }
    }
    Ok(out)
}

/// Compares two directory trees byte for byte.
pub fn trees_equal(a: &Path, b: &Path) -> Result<(), String> {
    let ta = read_tree(a).map_err(|e| format!("reading {}: {e}", a.display()))?;
    let tb = read_tree(b).map_err(|e| format!("reading {}: {e}", b.display()))?;
    let keys_a: Vec<&String> = ta.keys().collect();
    let keys_b: Vec<&String> = tb.keys().collect();
    if keys_a != keys_b {
        return Err(format!("file sets differ: {keys_a:?} vs {keys_b:?}"));
    }
    for (path, bytes) in &ta {
        if tb[path] != *bytes {
            return Err(format!("file {path} differs"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Minimal XML well-formedness check (for the generated SVG)
// ---------------------------------------------------------------------------

/// Checks tag balance, attribute quoting, and entity syntax. Not a full XML
/// parser; strict enough to catch unescaped text and broken nesting.
pub fn check_xml(text: &str) -> Result<(), String> {
    let bytes = text.as_bytes();
    let mut stack: Vec<String> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'<' => {
                if text[i..].starts_with("<?") {
                    let end = text[i..].find("?>").ok_or("unterminated processing instruction")?;
                    i += end + 2;
                } else if text[i..].starts_with("<!--") {
                    let end = text[i..].find("-->").ok_or("unterminated comment")?;
                    i += end + 3;
                } else {
                    let end = i + scan_tag(&text[i..])?;
                    let tag = &text[i + 1..end];
                    if let Some(name) = tag.strip_prefix('/') {
                        let open = stack.pop().ok_or(format!("stray closing tag </{name}>"))?;
                        if open != name.trim() {
                            return Err(format!("mismatched tag: <{open}> closed by </{name}>"));
                        }
                    } else if !tag.ends_with('/') {
                        let name = tag.split_whitespace().next().ok_or("empty tag")?;
                        stack.push(name.to_string());
                    }
                    i = end + 1;
                }
            }
            b'>' => return Err(format!("stray > at byte {i}")),
            b'&' => {
                let rest = &text[i + 1..];
                let semi = rest.find(';').filter(|&p| p <= 8).ok_or("unterminated entity")?;
                let name = &rest[..semi];
                let ok = matches!(name, "amp" | "lt" | "gt" | "quot" | "apos")
                    || (name.starts_with('#') && name[1..].chars().all(|c| c.is_ascii_digit()));
                if !ok {
                    return Err(format!("unknown entity &{name};"));
                }
                i += semi + 2;
            }
            _ => i += 1,
        }
    }
    if stack.is_empty() {
        Ok(())
    } else {
        Err(format!("unclosed tags: {stack:?}"))
    }
}

/// Returns the offset of the closing `>` of the tag starting at `text[0]`,
/// skipping quoted attribute values, and checks the attributes are quoted.
fn scan_tag(text: &str) -> Result<usize, String> {
    let bytes = text.as_bytes();
    let mut i = 1;
    while i < bytes.len() {
        match bytes[i] {
            b'"' => {
                let close = text[i + 1..].find('"').ok_or("unterminated attribute value")?;
                i += close + 2;
            }
            b'>' => return Ok(i),
            b'<' => return Err("nested < inside tag".to_string()),
            _ => i += 1,
        }
    }
    Err("unterminated tag".to_string())
}
