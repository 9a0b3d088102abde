//! Connected components: union-find over the undirected view for weak
//! components, iterative Tarjan over the arc view for strong ones.

use crate::graph::{Csr, Graph};

/// A partition of the nodes. Component ids are dense and assigned in first
/// touch order, so equal inputs produce equal labelings.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentLabels {
    pub labels: Vec<u32>,
    pub sizes: Vec<usize>,
}

impl ComponentLabels {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn largest_size(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// Members of the largest component; ties break toward the smaller id.
    pub fn largest_members(&self) -> Vec<u32> {
        let best = (0..self.sizes.len())
            .max_by_key(|&c| (self.sizes[c], usize::MAX - c))
            .unwrap_or(0);
        (0..self.labels.len() as u32).filter(|&u| self.labels[u as usize] == best as u32).collect()
    }
}

/// Weak components: direction ignored, self-loops irrelevant.
pub fn weak_components(g: &Graph) -> ComponentLabels {
    let n = g.node_count();
    let adj = g.simple_undirected();
    let mut parent: Vec<u32> = (0..n as u32).collect();

    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            let grand = parent[parent[x as usize] as usize];
            parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    for u in 0..n as u32 {
        for &v in adj.neighbors(u) {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                let (lo, hi) = (ru.min(rv), ru.max(rv));
                parent[hi as usize] = lo;
            }
        }
    }

    relabel((0..n as u32).map(|u| find(&mut parent, u)).collect())
}

/// Strong components via Tarjan with an explicit stack (safe for deep
/// graphs). For undirected graphs this equals the weak partition.
pub fn strong_components(g: &Graph) -> ComponentLabels {
    if !g.is_directed() {
        return weak_components(g);
    }
    let n = g.node_count();
    let adj: &Csr = g.spectral_out();

    const UNSET: u32 = u32::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut comp_count = 0u32;

    // Work frames hold the node and the offset of the next neighbor to visit.
    let mut work: Vec<(u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != UNSET {
            continue;
        }
        work.push((root, 0));
        while let Some(&(u, next)) = work.last() {
            if next == 0 {
                index[u as usize] = next_index;
                low[u as usize] = next_index;
                next_index += 1;
                stack.push(u);
                on_stack[u as usize] = true;
            }
            let neighbors = adj.neighbors(u);
            let mut i = next;
            let mut descended = false;
            while i < neighbors.len() {
                let v = neighbors[i];
                i += 1;
                if index[v as usize] == UNSET {
                    work.last_mut().expect("frame present").1 = i;
                    work.push((v, 0));
                    descended = true;
                    break;
                } else if on_stack[v as usize] {
                    low[u as usize] = low[u as usize].min(index[v as usize]);
                }
            }
            if descended {
                continue;
            }
            // u is finished: pop a component if u is a root.
            if low[u as usize] == index[u as usize] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w as usize] = false;
                    comp[w as usize] = comp_count;
                    if w == u {
                        break;
                    }
                }
                comp_count += 1;
            }
            work.pop();
            if let Some(&(p, _)) = work.last() {
                low[p as usize] = low[p as usize].min(low[u as usize]);
            }
        }
    }

    relabel(comp)
}

/// Renumbers arbitrary component ids into first-touch order and tallies sizes.
fn relabel(raw: Vec<u32>) -> ComponentLabels {
    let mut remap: Vec<u32> = vec![u32::MAX; raw.len()];
    let mut labels = vec![0u32; raw.len()];
    let mut sizes: Vec<usize> = Vec::new();
    for (u, &c) in raw.iter().enumerate() {
        let id = if remap[c as usize] == u32::MAX {
            let id = sizes.len() as u32;
            remap[c as usize] = id;
            sizes.push(0);
            id
        } else {
            remap[c as usize]
        };
        labels[u] = id;
        sizes[id as usize] += 1;
    }
    ComponentLabels { labels, sizes }
}
