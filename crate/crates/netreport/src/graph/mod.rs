//! Graph representation: dense node ids, original labels, CSR adjacency, and
//! the derived views the statistics run on.

mod attrs;
mod components;
mod load;
mod union;

pub use attrs::{load_attributes, AttributeColumn, AttributeTable, AttributeTarget, CellValue, ColumnKind};
pub use components::{strong_components, weak_components, ComponentLabels};
pub use load::{load_edge_list, parse_edge_list, Delimiter, EdgeColumns, LoadOptions, LoadWarning};
pub use union::disjoint_union;

use std::collections::HashMap;
use std::io::Write;

use crate::error::{Error, Result};

/// Degree counting mode. Undirected graphs report the same value for all
/// three modes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeMode {
    In,
    Out,
    Total,
}

/// One edge in input order. Weight and timestamp are carried through for
/// reporting; the structural statistics ignore weights.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeRecord {
    pub src: u32,
    pub dst: u32,
    pub weight: Option<f64>,
    pub timestamp: Option<i64>,
}

/// Compressed neighbor lists. Row `u` is `targets[offsets[u]..offsets[u+1]]`,
/// sorted ascending; parallel edges repeat the target.
#[derive(Clone, Debug, Default)]
pub struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Csr {
    /// Builds rows from (source, target) pairs with a counting sort, then
    /// orders each row. Deterministic for any input order.
    fn from_pairs(n: usize, pairs: impl Iterator<Item = (u32, u32)> + Clone) -> Csr {
        let mut counts = vec![0usize; n + 1];
        for (s, _) in pairs.clone() {
            counts[s as usize + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts.clone();
        let mut targets = vec![0u32; offsets[n]];
        let mut cursor = counts;
        for (s, t) in pairs {
            targets[cursor[s as usize]] = t;
            cursor[s as usize] += 1;
        }
        for u in 0..n {
            targets[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Csr { offsets, targets }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.targets[self.offsets[u as usize]..self.offsets[u as usize + 1]]
    }

    pub fn row_len(&self, u: u32) -> usize {
        self.offsets[u as usize + 1] - self.offsets[u as usize]
    }

    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }
}

/// An immutable graph. Node ids are dense in `[0, node_count)`; `labels`
/// maps them back to the input tokens. Construction builds every derived
/// view, after which the value is safe to share across threads.
#[derive(Clone, Debug)]
pub struct Graph {
    directed: bool,
    multigraph: bool,
    node_count: usize,
    labels: Vec<String>,
    label_index: HashMap<String, u32>,
    edges: Vec<EdgeRecord>,
    dedup_removed: usize,
    simplified_edge_count: usize,
    /// Raw adjacency. Undirected rows hold both endpoints of every edge and
    /// list a self-loop twice, so row length equals the degree convention.
    raw_out: Csr,
    raw_in: Csr,
    /// Deduplicated undirected view without self-loops; the combinatorial
    /// statistics (triangles, clustering, k-core, assortativity, components,
    /// Laplacian) run on this.
    simple_undirected: Csr,
    /// Deduplicated arcs with self-loops kept once; the adjacency matrix for
    /// the spectral statistics and PageRank.
    spectral_out: Csr,
    spectral_in: Csr,
    has_weights: bool,
    has_timestamps: bool,
}

impl Graph {
    /// Builds a graph from prepared labels and edges. `dedup_removed` counts
    /// duplicate records already dropped by the caller (the loader dedups
    /// simple graphs; duplicates are an error here when `multigraph` is off).
    pub fn build(
        directed: bool,
        multigraph: bool,
        labels: Vec<String>,
        edges: Vec<EdgeRecord>,
        dedup_removed: usize,
    ) -> Result<Graph> {
        let node_count = labels.len();
        if node_count == 0 {
            return Err(Error::usage("graph has no nodes"));
        }
        let n32 = u32::try_from(node_count)
            .map_err(|_| Error::usage("node count exceeds the supported range"))?;
        for e in &edges {
            if e.src >= n32 || e.dst >= n32 {
                return Err(Error::usage("edge endpoint out of range"));
            }
        }
        if !multigraph {
            let mut keys: Vec<(u32, u32)> = edges.iter().map(|e| key_of(directed, e.src, e.dst)).collect();
            keys.sort_unstable();
            if keys.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::usage("duplicate edges in a simple graph"));
            }
        }
        let mut label_index = HashMap::with_capacity(node_count);
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i as u32).is_some() {
                return Err(Error::usage(format!("duplicate node label {l:?}")));
            }
        }

        let raw_out;
        let raw_in;
        if directed {
            raw_out = Csr::from_pairs(node_count, edges.iter().map(|e| (e.src, e.dst)));
            raw_in = Csr::from_pairs(node_count, edges.iter().map(|e| (e.dst, e.src)));
        } else {
            // Both orientations; a self-loop contributes its endpoint twice.
            raw_out = Csr::from_pairs(
                node_count,
                edges
                    .iter()
                    .flat_map(|e| [(e.src, e.dst), (e.dst, e.src)])
                    .collect::<Vec<_>>()
                    .into_iter(),
            );
            raw_in = Csr::default();
        }

        // Deduplicated arc set, self-loops kept once.
        let mut arcs: Vec<(u32, u32)> = if directed {
            edges.iter().map(|e| (e.src, e.dst)).collect()
        } else {
            edges
                .iter()
                .flat_map(|e| {
                    if e.src == e.dst {
                        vec![(e.src, e.dst)]
                    } else {
                        vec![(e.src, e.dst), (e.dst, e.src)]
                    }
                })
                .collect()
        };
        arcs.sort_unstable();
        arcs.dedup();
        let loops = arcs.iter().filter(|(s, t)| s == t).count();
        let simplified_edge_count =
            if directed { arcs.len() } else { (arcs.len() - loops) / 2 + loops };
        let spectral_out = Csr::from_pairs(node_count, arcs.iter().copied());
        let spectral_in = if directed {
            Csr::from_pairs(node_count, arcs.iter().map(|&(s, t)| (t, s)))
        } else {
            Csr::default()
        };

        // Undirected simplification without self-loops.
        let mut und: Vec<(u32, u32)> = edges
            .iter()
            .filter(|e| e.src != e.dst)
            .map(|e| (e.src.min(e.dst), e.src.max(e.dst)))
            .collect();
        und.sort_unstable();
        und.dedup();
        let simple_undirected = Csr::from_pairs(
            node_count,
            und.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect::<Vec<_>>().into_iter(),
        );

        let has_weights = edges.iter().any(|e| e.weight.is_some());
        let has_timestamps = edges.iter().any(|e| e.timestamp.is_some());
        Ok(Graph {
            directed,
            multigraph,
            node_count,
            labels,
            label_index,
            edges,
            dedup_removed,
            simplified_edge_count,
            raw_out,
            raw_in,
            simple_undirected,
            spectral_out,
            spectral_in,
            has_weights,
            has_timestamps,
        })
    }

    /// Test and generator convenience: nodes `0..n` labeled by index.
    pub fn from_pairs(
        directed: bool,
        multigraph: bool,
        n: usize,
        pairs: &[(u32, u32)],
    ) -> Result<Graph> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = pairs
            .iter()
            .map(|&(s, t)| EdgeRecord { src: s, dst: t, weight: None, timestamp: None })
            .collect();
        Graph::build(directed, multigraph, labels, edges, 0)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Edge records as loaded (after simple-graph dedup).
    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn edge_count_raw(&self) -> usize {
        self.edges.len()
    }

    /// Unique pairs: ordered for directed graphs, unordered otherwise;
    /// self-loops count once.
    pub fn edge_count_simplified(&self) -> usize {
        self.simplified_edge_count
    }

    /// Duplicate records dropped while loading with `multigraph` off.
    pub fn dedup_removed(&self) -> usize {
        self.dedup_removed
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: u32) -> &str {
        &self.labels[u as usize]
    }

    pub fn id_of(&self, label: &str) -> Option<u32> {
        self.label_index.get(label).copied()
    }

    pub fn has_weights(&self) -> bool {
        self.has_weights
    }

    pub fn has_timestamps(&self) -> bool {
        self.has_timestamps
    }

    /// Raw degree under the loader convention: an undirected self-loop adds 2,
    /// a directed one adds 1 to each of in and out.
    pub fn degree(&self, u: u32, mode: DegreeMode) -> usize {
        if !self.directed {
            return self.raw_out.row_len(u);
        }
        match mode {
            DegreeMode::Out => self.raw_out.row_len(u),
            DegreeMode::In => self.raw_in.row_len(u),
            DegreeMode::Total => self.raw_out.row_len(u) + self.raw_in.row_len(u),
        }
    }

    pub fn degrees(&self, mode: DegreeMode) -> Vec<usize> {
        (0..self.node_count as u32).map(|u| self.degree(u, mode)).collect()
    }

    pub fn raw_out(&self) -> &Csr {
        &self.raw_out
    }

    /// Directed graphs only; empty for undirected.
    pub fn raw_in(&self) -> &Csr {
        &self.raw_in
    }

    pub fn simple_undirected(&self) -> &Csr {
        &self.simple_undirected
    }

    pub fn spectral_out(&self) -> &Csr {
        &self.spectral_out
    }

    /// Transposed spectral adjacency; same as `spectral_out` when undirected.
    pub fn spectral_in(&self) -> &Csr {
        if self.directed {
            &self.spectral_in
        } else {
            &self.spectral_out
        }
    }

    /// Writes the graph back in edge-list form (labels, then the weight and
    /// timestamp columns when present). Reloading yields an isomorphic graph.
    pub fn write_edge_list<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        for e in &self.edges {
            write!(w, "{}\t{}", self.labels[e.src as usize], self.labels[e.dst as usize])?;
            if self.has_weights {
                write!(w, "\t{}", e.weight.unwrap_or(1.0))?;
            }
            if self.has_timestamps {
                write!(w, "\t{}", e.timestamp.unwrap_or(0))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }
}

fn key_of(directed: bool, s: u32, t: u32) -> (u32, u32) {
    if directed || s <= t {
        (s, t)
    } else {
        (t, s)
    }
}
