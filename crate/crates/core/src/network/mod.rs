//! Directed network model with compressed forward and backward adjacency.
//!
//! Vertices are dense 0-based indices inside the library. Pajek files and the
//! command line use 1-based ids; the conversion happens only at those borders.
//!
//! An arc `(u, v)` follows the citation orientation `u R v`, i.e. `v` cites
//! `u`: arcs point from the older (cited) work to the newer (citing) one.

mod generate;
mod labels;
pub mod pajek;
mod stats;

pub use generate::{complete_acyclic, random_dag};
pub use labels::Labels;
pub use stats::{network_stats, weak_components, NetworkStats};

use crate::error::{Error, Result};

/// One arc of a network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub weight: f64,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Arc {
            tail,
            head,
            weight: 1.0,
        }
    }

    pub fn weighted(tail: usize, head: usize, weight: f64) -> Self {
        Arc { tail, head, weight }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Immutable directed (multi)graph with vertex labels.
///
/// Arc indices refer to positions in [`Network::arcs`], which keeps the input
/// order. Adjacency lists are sorted by `(tail, head, arc index)`.
#[derive(Debug, Clone)]
pub struct Network {
    labels: Labels,
    arcs: Vec<Arc>,
    out_offsets: Vec<usize>,
    // arc and vertex indices in the adjacency are stored as u32
    out_arcs: Vec<u32>,
    // head of every entry of `out_arcs`, so traversals read memory in order
    out_heads: Vec<u32>,
    in_offsets: Vec<usize>,
    in_arcs: Vec<u32>,
    in_tails: Vec<u32>,
}

impl PartialEq for Network {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.arcs == other.arcs
    }
}

impl Network {
    /// Builds a network, validating endpoints and weights. Vertex and arc
    /// counts are limited to `u32::MAX`.
    pub fn new(labels: Vec<String>, arcs: Vec<Arc>) -> Result<Self> {
        let n = labels.len();
        if n >= u32::MAX as usize || arcs.len() >= u32::MAX as usize {
            return Err(Error::Argument(format!(
                "{n} vertices and {} arcs exceed the supported size",
                arcs.len()
            )));
        }
        for (i, a) in arcs.iter().enumerate() {
            if a.tail >= n || a.head >= n {
                return Err(Error::Argument(format!(
                    "arc {} ({} -> {}) has an endpoint outside 1..{}",
                    i + 1,
                    a.tail + 1,
                    a.head + 1,
                    n
                )));
            }
            if !(a.weight.is_finite() && a.weight >= 0.0) {
                return Err(Error::Argument(format!(
                    "arc {} has weight {}, expected a finite nonnegative value",
                    i + 1,
                    a.weight
                )));
            }
        }
        Ok(Self::build(labels, arcs))
    }

    /// Network with default labels `"1"..="n"` and unit arc weights.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let arcs = pairs.iter().map(|&(u, v)| Arc::new(u, v)).collect();
        Self::new(default_labels(n), arcs)
    }

    pub fn empty() -> Self {
        Self::build(Vec::new(), Vec::new())
    }

    // Caller guarantees valid endpoints.
    pub(crate) fn build(labels: impl Into<Labels>, arcs: Vec<Arc>) -> Self {
        let labels = labels.into();
        let n = labels.len();
        assert!(n < u32::MAX as usize && arcs.len() < u32::MAX as usize, "network too large");
        let (out_offsets, out_arcs, out_heads, in_offsets, in_arcs, in_tails) = adjacency(n, &arcs);
        Network {
            labels,
            arcs,
            out_offsets,
            out_arcs,
            out_heads,
            in_offsets,
            in_arcs,
            in_tails,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Number of arcs, counting loops and parallel arcs.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        self.labels.get(v)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> &Arc {
        &self.arcs[index]
    }

    /// Indices of the arcs leaving `v`.
    pub fn out_arcs(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + Clone + '_ {
        self.out_arcs[self.out_offsets[v]..self.out_offsets[v + 1]]
            .iter()
            .map(|&a| a as usize)
    }

    /// Indices of the arcs entering `v`.
    pub fn in_arcs(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + Clone + '_ {
        self.in_arcs[self.in_offsets[v]..self.in_offsets[v + 1]]
            .iter()
            .map(|&a| a as usize)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    /// Heads of the arcs leaving `v`, aligned with [`Network::out_arcs`].
    pub fn out_neighbors(&self, v: usize) -> &[u32] {
        &self.out_heads[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// Tails of the arcs entering `v`, aligned with [`Network::in_arcs`].
    pub fn in_neighbors(&self, v: usize) -> &[u32] {
        &self.in_tails[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out_neighbors(v).iter().map(|&u| u as usize)
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_neighbors(v).iter().map(|&u| u as usize)
    }

    pub fn loop_count(&self) -> usize {
        self.arcs.iter().filter(|a| a.is_loop()).count()
    }

    /// Merges parallel arcs into one arc whose weight is the sum of the
    /// merged weights. The merged arc takes the position of the first
    /// occurrence; loops are kept.
    pub fn simplify(&self) -> Network {
        let mut arcs: Vec<Arc> = Vec::with_capacity(self.m());
        let mut slot = vec![usize::MAX; self.m()];
        // Out-lists are sorted by head, so duplicates are adjacent.
        for v in 0..self.n() {
            let list: Vec<usize> = self.out_arcs(v).collect();
            let mut i = 0;
            while i < list.len() {
                let first = list[i];
                let head = self.arcs[first].head;
                let mut j = i + 1;
                while j < list.len() && self.arcs[list[j]].head == head {
                    slot[list[j]] = first;
                    j += 1;
                }
                slot[first] = first;
                i = j;
            }
        }
        let mut position = vec![usize::MAX; self.m()];
        for (i, a) in self.arcs.iter().enumerate() {
            let keeper = slot[i];
            if keeper == i {
                position[i] = arcs.len();
                arcs.push(*a);
            } else {
                arcs[position[keeper]].weight += a.weight;
            }
        }
        Network::build(self.labels.clone(), arcs)
    }

    pub fn has_parallel_arcs(&self) -> bool {
        (0..self.n()).any(|v| {
            self.out_neighbors(v).windows(2).any(|w| w[0] == w[1])
        })
    }

    /// The inverse relation: every arc `(u, v)` becomes `(v, u)`, keeping its
    /// index and weight.
    pub fn reverse(&self) -> Network {
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc::weighted(a.head, a.tail, a.weight))
            .collect();
        Network::build(self.labels.clone(), arcs)
    }

    /// `self` followed by `other`, with `other`'s vertices shifted by `self.n()`
    /// and its arcs appended after `self`'s arcs.
    pub fn disjoint_union(&self, other: &Network) -> Network {
        let shift = self.n();
        let mut labels = self.labels.clone();
        other.labels.iter().for_each(|l| labels.push(l));
        let mut arcs = self.arcs.clone();
        arcs.extend(
            other
                .arcs
                .iter()
                .map(|a| Arc::weighted(a.tail + shift, a.head + shift, a.weight)),
        );
        Network::build(labels, arcs)
    }

    /// Keeps only the arcs for which `keep` returns true; vertices are kept.
    pub fn filter_arcs(&self, mut keep: impl FnMut(usize, &Arc) -> bool) -> Network {
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .filter(|(i, a)| keep(*i, a))
            .map(|(_, a)| *a)
            .collect();
        Network::build(self.labels.clone(), arcs)
    }

    /// The subnetwork induced by an explicit vertex list and arc list.
    /// Vertices are renumbered in the order given; every arc endpoint must be
    /// in `vertices`.
    pub fn restrict(&self, vertices: &[usize], arc_indices: &[usize]) -> Result<Network> {
        let mut index = vec![usize::MAX; self.n()];
        for (new, &v) in vertices.iter().enumerate() {
            index[v] = new;
        }
        let labels: Labels = vertices.iter().map(|&v| self.label(v)).collect();
        let mut arcs = Vec::with_capacity(arc_indices.len());
        for &i in arc_indices {
            let a = self.arcs[i];
            let (t, h) = (index[a.tail], index[a.head]);
            if t == usize::MAX || h == usize::MAX {
                return Err(Error::Argument(format!(
                    "arc {} has an endpoint outside the vertex subset",
                    i + 1
                )));
            }
            arcs.push(Arc::weighted(t, h, a.weight));
        }
        Ok(Network::build(labels, arcs))
    }

    /// `self` with vertices `labels` appended and `arcs` appended after the
    /// existing arcs. The adjacency lists are merged rather than rebuilt,
    /// so the cost beyond copying is proportional to the new arcs and the
    /// vertex count. Caller guarantees valid endpoints.
    pub(crate) fn extended_by(&self, labels: &[&str], arcs: Vec<Arc>) -> Network {
        let mut all_labels = self.labels.clone();
        labels.iter().for_each(|l| all_labels.push(l));
        let n = all_labels.len();
        let base = self.m();
        let (out_offsets, out_arcs, out_heads) = merge_lists(
            n,
            (&self.out_offsets, &self.out_arcs, &self.out_heads),
            &arcs,
            base,
            |a| (a.tail, a.head),
        );
        let (in_offsets, in_arcs, in_tails) = merge_lists(
            n,
            (&self.in_offsets, &self.in_arcs, &self.in_tails),
            &arcs,
            base,
            |a| (a.head, a.tail),
        );
        let mut all_arcs = Vec::with_capacity(base + arcs.len());
        all_arcs.extend_from_slice(&self.arcs);
        all_arcs.extend(arcs);
        Network {
            labels: all_labels,
            arcs: all_arcs,
            out_offsets,
            out_arcs,
            out_heads,
            in_offsets,
            in_arcs,
            in_tails,
        }
    }

    /// Bytes held by the arc array alone.
    pub fn arc_footprint(&self) -> usize {
        self.arcs.len() * std::mem::size_of::<Arc>()
    }
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Offsets of the buckets of `keys`, a counting sort prefix.
fn offsets(n: usize, keys: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut offsets = vec![0usize; n + 1];
    for k in keys {
        offsets[k + 1] += 1;
    }
    for k in 0..n {
        offsets[k + 1] += offsets[k];
    }
    offsets
}

/// Stable bucketing of the indices `order` by `key`.
fn bucket(offsets: &[usize], order: impl Iterator<Item = usize>, key: impl Fn(usize) -> usize) -> Vec<u32> {
    let mut next = offsets[..offsets.len() - 1].to_vec();
    let mut out = vec![0u32; offsets[offsets.len() - 1]];
    for a in order {
        let k = key(a);
        out[next[k]] = a as u32;
        next[k] += 1;
    }
    out
}

/// One adjacency direction of `old` merged with `extra`, whose arcs are
/// numbered from `base` on. `key` maps an arc to (owner, neighbour).
fn merge_lists(
    n: usize,
    old: (&[usize], &[u32], &[u32]),
    extra: &[Arc],
    base: usize,
    key: impl Fn(&Arc) -> (usize, usize),
) -> (Vec<usize>, Vec<u32>, Vec<u32>) {
    let (old_offsets, old_arcs, old_nb) = old;
    let old_n = old_offsets.len() - 1;
    let extra_offsets = offsets(n, extra.iter().map(|a| key(a).0));
    let mut grouped = bucket(&extra_offsets, 0..extra.len(), |i| key(&extra[i]).0);
    for v in 0..n {
        let group = &mut grouped[extra_offsets[v]..extra_offsets[v + 1]];
        if group.len() > 1 {
            group.sort_by_key(|&i| key(&extra[i as usize]).1);
        }
    }

    let total = old_arcs.len() + extra.len();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut arcs = Vec::with_capacity(total);
    let mut nbs = Vec::with_capacity(total);
    let old_start = |v: usize| old_offsets[v.min(old_n)];
    // runs of vertices without new arcs are copied wholesale
    let mut v = 0;
    for es in grouped.chunk_by(|&a, &b| key(&extra[a as usize]).0 == key(&extra[b as usize]).0) {
        let owner = key(&extra[es[0] as usize]).0;
        let shift = arcs.len() - old_start(v);
        offsets.extend((v..owner).map(|u| old_start(u) + shift));
        let (lo, hi) = (old_start(v), old_start(owner));
        arcs.extend_from_slice(&old_arcs[lo..hi]);
        nbs.extend_from_slice(&old_nb[lo..hi]);

        offsets.push(arcs.len());
        let (mut i, hi) = (old_start(owner), old_start(owner + 1));
        for &e in es {
            let nb = key(&extra[e as usize]).1 as u32;
            // older arcs have smaller indices, so they go first on ties
            while i < hi && old_nb[i] <= nb {
                arcs.push(old_arcs[i]);
                nbs.push(old_nb[i]);
                i += 1;
            }
            arcs.push((base + e as usize) as u32);
            nbs.push(nb);
        }
        arcs.extend_from_slice(&old_arcs[i..hi]);
        nbs.extend_from_slice(&old_nb[i..hi]);
        v = owner + 1;
    }
    let shift = arcs.len() - old_start(v);
    offsets.extend((v..=n).map(|u| old_start(u) + shift));
    arcs.extend_from_slice(&old_arcs[old_start(v)..]);
    nbs.extend_from_slice(&old_nb[old_start(v)..]);
    (offsets, arcs, nbs)
}

/// Both adjacency directions, lists sorted by neighbour and then by arc
/// index. Three stable counting passes: by head, then by tail (giving the
/// out-lists), then by head again (giving the in-lists).
#[allow(clippy::type_complexity)]
fn adjacency(n: usize, arcs: &[Arc]) -> (Vec<usize>, Vec<u32>, Vec<u32>, Vec<usize>, Vec<u32>, Vec<u32>) {
    let in_offsets = offsets(n, arcs.iter().map(|a| a.head));
    let out_offsets = offsets(n, arcs.iter().map(|a| a.tail));
    let by_head = bucket(&in_offsets, 0..arcs.len(), |a| arcs[a].head);
    let out_arcs = bucket(&out_offsets, by_head.iter().map(|&a| a as usize), |a| arcs[a].tail);
    drop(by_head);
    let in_arcs = bucket(&in_offsets, out_arcs.iter().map(|&a| a as usize), |a| arcs[a].head);
    let out_heads = out_arcs.iter().map(|&a| arcs[a as usize].head as u32).collect();
    let in_tails = in_arcs.iter().map(|&a| arcs[a as usize].tail as u32).collect();
    (out_offsets, out_arcs, out_heads, in_offsets, in_arcs, in_tails)
}
