//! Disjoint union of member networks, used when a dataset directory holds
//! several edge lists and the distributions treat them as one graph.

use crate::error::{Error, Result};
use crate::graph::{EdgeRecord, Graph};

/// Builds the disjoint union. Node labels are prefixed `<member>/` to stay
/// unique; ids are offset in member order. All members must agree on
/// directedness; the union is a multigraph if any member is.
pub fn disjoint_union(members: &[(String, &Graph)]) -> Result<Graph> {
    if members.is_empty() {
        return Err(Error::usage("union of zero networks"));
    }
    let directed = members[0].1.is_directed();
    if members.iter().any(|(_, g)| g.is_directed() != directed) {
        return Err(Error::usage("cannot combine directed and undirected networks"));
    }
    let multigraph = members.iter().any(|(_, g)| g.is_multigraph());

    let mut labels = Vec::new();
    let mut edges: Vec<EdgeRecord> = Vec::new();
    let mut offset = 0u32;
    for (name, g) in members {
        for l in g.labels() {
            labels.push(format!("{name}/{l}"));
        }
        for e in g.edges() {
            edges.push(EdgeRecord {
                src: e.src + offset,
                dst: e.dst + offset,
                weight: e.weight,
                timestamp: e.timestamp,
            });
        }
        offset += g.node_count() as u32;
    }
    let dedup_removed = members.iter().map(|(_, g)| g.dedup_removed()).sum();
    Graph::build(directed, multigraph, labels, edges, dedup_removed)
}
