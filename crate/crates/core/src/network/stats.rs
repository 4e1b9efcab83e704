use std::collections::BTreeMap;
use std::fmt;

use crate::acyclic::{shrink_components, strong_components, topological_order, Partition};
use crate::network::Network;
use crate::union_find::DisjointSet;

/// Whole-network characteristics in the layout of the usual citation network
/// summary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetworkStats {
    pub n: usize,
    pub m: usize,
    /// Loops.
    pub m0: usize,
    /// Vertices without any non-loop arc.
    pub n0: usize,
    /// Size of the largest weakly connected component.
    pub n_c: usize,
    /// Number of weakly connected components with at least two vertices.
    pub k_c: usize,
    /// Depth: vertex count of the longest path in the loop-free condensation.
    pub h: usize,
    pub delta_in: usize,
    pub delta_out: usize,
    /// Strong component size (>= 2) to number of such components.
    pub scc_size_counts: BTreeMap<usize, usize>,
}

impl fmt::Display for NetworkStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>9} {:>10} {:>5} {:>7} {:>9} {:>6} {:>5} {:>8} {:>9}",
            "n", "m", "m0", "n0", "nC", "kC", "h", "delta_in", "delta_out"
        )?;
        writeln!(
            f,
            "{:>9} {:>10} {:>5} {:>7} {:>9} {:>6} {:>5} {:>8} {:>9}",
            self.n,
            self.m,
            self.m0,
            self.n0,
            self.n_c,
            self.k_c,
            self.h,
            self.delta_in,
            self.delta_out
        )?;
        write!(f, "strong components (size: count):")?;
        if self.scc_size_counts.is_empty() {
            write!(f, " none")?;
        }
        for (size, count) in &self.scc_size_counts {
            write!(f, " {size}:{count}")?;
        }
        writeln!(f)
    }
}

/// Weakly connected components, ignoring arc direction. Classes are numbered
/// by their smallest vertex.
pub fn weak_components(net: &Network) -> Partition {
    let mut ds = DisjointSet::new(net.n());
    for a in net.arcs() {
        ds.union(a.tail, a.head);
    }
    let roots: Vec<usize> = (0..net.n()).map(|v| ds.find(v)).collect();
    Partition::from_labels(&roots)
}

pub fn network_stats(net: &Network) -> NetworkStats {
    let n = net.n();
    let m = net.m();
    let m0 = net.loop_count();

    let mut non_loop_degree = vec![0usize; n];
    for a in net.arcs().iter().filter(|a| !a.is_loop()) {
        non_loop_degree[a.tail] += 1;
        non_loop_degree[a.head] += 1;
    }
    let n0 = non_loop_degree.iter().filter(|&&d| d == 0).count();

    let weak = weak_components(net);
    let sizes = weak.class_sizes();
    let n_c = sizes.iter().copied().max().unwrap_or(0);
    let k_c = sizes.iter().filter(|&&s| s >= 2).count();

    let delta_in = (0..n).map(|v| net.in_degree(v)).max().unwrap_or(0);
    let delta_out = (0..n).map(|v| net.out_degree(v)).max().unwrap_or(0);

    let strong = strong_components(net);
    let mut scc_size_counts = BTreeMap::new();
    for s in strong.class_sizes().into_iter().filter(|&s| s >= 2) {
        *scc_size_counts.entry(s).or_insert(0) += 1;
    }

    let condensed = shrink_components(net, &strong);
    let h = longest_path_vertices(&condensed);

    NetworkStats {
        n,
        m,
        m0,
        n0,
        n_c,
        k_c,
        h,
        delta_in,
        delta_out,
        scc_size_counts,
    }
}

fn longest_path_vertices(dag: &Network) -> usize {
    let order = topological_order(dag).expect("condensation is acyclic");
    let mut level = vec![1usize; dag.n()];
    for &u in order.sequence() {
        for v in dag.successors(u) {
            level[v] = level[v].max(level[u] + 1);
        }
    }
    level.into_iter().max().unwrap_or(0)
}
