//! Acyclicity: strong components, the two repairs (shrinking and the preprint
//! transformation), topological order, the standard form with a common
//! source and sink, and vertex depths.
//!
//! The repair pipeline is fixed: remove loops, then shrink or preprint, then
//! standardize.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::network::{Arc, Network};

/// Assignment of every vertex to a class `0..class_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    class_count: usize,
}

impl Partition {
    /// Renumbers arbitrary labels into dense classes, ordered by the smallest
    /// vertex in each class.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = remap.len();
                *remap.entry(*l).or_insert(next)
            })
            .collect();
        Partition {
            class_of,
            class_count: remap.len(),
        }
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.class_count];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    /// Members of every class, each list in increasing vertex order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.class_count];
        for (v, &c) in self.class_of.iter().enumerate() {
            groups[c].push(v);
        }
        groups
    }

    /// 1-based classes, as written to a `.clu` file.
    pub fn to_clu(&self) -> Vec<usize> {
        self.class_of.iter().map(|c| c + 1).collect()
    }
}

/// Strong components by an iterative Tarjan search, `O(n + m)`.
pub fn strong_components(net: &Network) -> Partition {
    const UNSEEN: usize = usize::MAX;
    let n = net.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut component = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut next_component = 0;
    // (vertex, position in its out-list)
    let mut frames: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        frames.push((root, 0));

        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            let out = net.out_neighbors(v);
            if *pos < out.len() {
                let w = out[*pos] as usize;
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component[w] = next_component;
                    if w == v {
                        break;
                    }
                }
                next_component += 1;
            }
        }
    }
    Partition::from_labels(&component)
}

/// Identifies each class of `p` into a single vertex. Intra-class arcs
/// (which would become loops) are dropped and parallel arcs are merged with
/// summed weights. Labels of merged vertices are joined with `|`.
pub fn shrink_components(net: &Network, p: &Partition) -> Network {
    let labels: Vec<String> = p
        .members()
        .iter()
        .map(|group| {
            group
                .iter()
                .map(|&v| net.label(v))
                .collect::<Vec<_>>()
                .join("|")
        })
        .collect();
    let arcs = net
        .arcs()
        .iter()
        .map(|a| Arc::weighted(p.class_of(a.tail), p.class_of(a.head), a.weight))
        .filter(|a| !a.is_loop())
        .collect();
    Network::build(labels, arcs).simplify()
}

pub fn remove_loops(net: &Network) -> Network {
    net.filter_arcs(|_, a| !a.is_loop())
}

/// Breaks cycles by giving every member `u` of a nontrivial strong component
/// a preprint vertex `u'`. The arc `u' -> u` is added and every arc inside
/// the component `(u, v)` is redirected to `(u', v)`: papers in the
/// component cite the preprints of the others. Preprints are appended after
/// the original vertices in increasing order of `u` and labelled `label'`;
/// the new arcs `u' -> u` are appended after the original arcs.
pub fn preprint_transform(net: &Network) -> Network {
    let p = strong_components(net);
    let sizes = p.class_sizes();
    let n = net.n();
    let mut preprint = vec![usize::MAX; n];
    let mut labels = net.labels().clone();
    for v in 0..n {
        if sizes[p.class_of(v)] >= 2 {
            preprint[v] = labels.len();
            labels.push(&format!("{}'", net.label(v)));
        }
    }
    let mut arcs: Vec<Arc> = net
        .arcs()
        .iter()
        .map(|a| {
            let same = p.class_of(a.tail) == p.class_of(a.head);
            if same && preprint[a.tail] != usize::MAX {
                Arc::weighted(preprint[a.tail], a.head, a.weight)
            } else {
                *a
            }
        })
        .collect();
    for (v, &p) in preprint.iter().enumerate() {
        if p != usize::MAX {
            arcs.push(Arc::new(p, v));
        }
    }
    Network::build(labels, arcs)
}

/// A permutation certifying acyclicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologicalOrder {
    position: Vec<usize>,
    sequence: Vec<usize>,
}

impl TopologicalOrder {
    fn from_sequence(sequence: Vec<usize>) -> Self {
        let mut position = vec![0; sequence.len()];
        for (i, &v) in sequence.iter().enumerate() {
            position[v] = i;
        }
        TopologicalOrder { position, sequence }
    }

    /// 0-based rank of `v` in the order.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Vertices in topological order.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Single pass over the arcs: every arc except `skip` goes forward.
    pub fn certifies(&self, net: &Network, skip: Option<usize>) -> bool {
        self.sequence.len() == net.n()
            && net.arcs().iter().enumerate().all(|(i, a)| {
                Some(i) == skip || self.position[a.tail] < self.position[a.head]
            })
    }
}

/// Kahn's algorithm taking the smallest available vertex id first, so the
/// order is unique. Fails with a vertex lying on a cycle.
///
/// Networks numbered chronologically, with every arc going to a larger id,
/// are recognized in one scan: their order is the identity.
pub fn topological_order(net: &Network) -> Result<TopologicalOrder> {
    let n = net.n();
    // out-lists are sorted by head, so the first head is the smallest
    if (0..n).all(|v| net.out_neighbors(v).first().is_none_or(|&h| h as usize > v)) {
        return Ok(TopologicalOrder::from_sequence((0..n).collect()));
    }
    let mut indegree: Vec<usize> = (0..n).map(|v| net.in_degree(v)).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut sequence = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        sequence.push(u);
        for v in net.successors(u) {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if sequence.len() < n {
        return Err(Error::Cyclic {
            vertex: vertex_on_cycle(net, &indegree),
        });
    }
    Ok(TopologicalOrder::from_sequence(sequence))
}

// Every unsorted vertex keeps an unsorted predecessor, so walking backwards
// must revisit a vertex, and that vertex lies on a cycle.
fn vertex_on_cycle(net: &Network, indegree: &[usize]) -> usize {
    let start = (0..net.n())
        .find(|&v| indegree[v] > 0)
        .expect("some vertex left unsorted");
    let mut visited = vec![false; net.n()];
    let mut v = start;
    while !visited[v] {
        visited[v] = true;
        v = net
            .predecessors(v)
            .find(|&u| indegree[u] > 0)
            .expect("unsorted vertex has an unsorted predecessor");
    }
    v
}

/// A network in standard form: the original vertices `0..n`, the source
/// `s = n` and sink `t = n + 1`. Arcs are laid out as the original arcs
/// (same indices), then `s -> Min R`, then `Max R -> t`, then the feedback
/// arc `t -> s`. Extended forms used internally append further auxiliary
/// arcs after the feedback arc.
#[derive(Debug, Clone)]
pub struct StandardizedNetwork {
    network: Network,
    original_vertices: usize,
    original_arcs: usize,
    source_arcs: Range<usize>,
    sink_arcs: Range<usize>,
    feedback_arc: usize,
    order: TopologicalOrder,
}

impl StandardizedNetwork {
    /// The extended network including `s`, `t` and all auxiliary arcs.
    pub fn network(&self) -> &Network {
        &self.network
    }

    pub fn source(&self) -> usize {
        self.original_vertices
    }

    pub fn sink(&self) -> usize {
        self.original_vertices + 1
    }

    pub fn feedback_arc(&self) -> usize {
        self.feedback_arc
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_vertices
    }

    pub fn original_arc_count(&self) -> usize {
        self.original_arcs
    }

    /// Indices of the arcs `s -> u`, `u` in `Min R`.
    pub fn source_arcs(&self) -> Range<usize> {
        self.source_arcs.clone()
    }

    /// Indices of the arcs `u -> t`, `u` in `Max R`.
    pub fn sink_arcs(&self) -> Range<usize> {
        self.sink_arcs.clone()
    }

    /// Number of arcs of the standard form itself (original, auxiliary and
    /// feedback), excluding arcs of internal extensions.
    pub fn standard_arc_count(&self) -> usize {
        self.feedback_arc + 1
    }

    /// Topological order of the network without its feedback arc.
    pub fn order(&self) -> &TopologicalOrder {
        &self.order
    }

    pub fn is_original_vertex(&self, v: usize) -> bool {
        v < self.original_vertices
    }

    pub fn is_original_arc(&self, a: usize) -> bool {
        a < self.original_arcs
    }

    /// Copy with an extra arc `s -> u` for every original `u` that is not
    /// yet a successor of `s` (and, if requested, `u -> t` for every `u` not
    /// yet a predecessor of `t`). Indices of existing arcs are unchanged.
    pub(crate) fn extended(&self, link_source: bool, link_sink: bool) -> StandardizedNetwork {
        let n = self.original_vertices;
        let (s, t) = (self.source(), self.sink());
        let mut arcs = Vec::new();
        if link_source {
            let linked = self.network.successors(s).collect::<Vec<_>>();
            let mut has = vec![false; n];
            linked.into_iter().filter(|&v| v < n).for_each(|v| has[v] = true);
            arcs.extend((0..n).filter(|&u| !has[u]).map(|u| Arc::new(s, u)));
        }
        if link_sink {
            let mut has = vec![false; n];
            self.network
                .predecessors(t)
                .filter(|&v| v < n)
                .for_each(|v| has[v] = true);
            arcs.extend((0..n).filter(|&u| !has[u]).map(|u| Arc::new(u, t)));
        }
        StandardizedNetwork {
            network: self.network.extended_by(&[], arcs),
            order: self.order.clone(),
            source_arcs: self.source_arcs.clone(),
            sink_arcs: self.sink_arcs.clone(),
            ..*self
        }
    }
}

/// Brings an acyclic, loop-free network into standard form by adding a
/// common source linked to `Min R`, a common sink linked from `Max R`, and
/// the feedback arc `(t, s)`.
pub fn standardize(net: &Network) -> Result<StandardizedNetwork> {
    if let Some(a) = net.arcs().iter().find(|a| a.is_loop()) {
        return Err(Error::Cyclic { vertex: a.tail });
    }
    let inner = topological_order(net)?;
    let n = net.n();
    let m = net.m();
    let (s, t) = (n, n + 1);

    let mut arcs: Vec<Arc> = (0..n).filter(|&u| net.in_degree(u) == 0).map(|u| Arc::new(s, u)).collect();
    let source_arcs = m..m + arcs.len();
    arcs.extend((0..n).filter(|&u| net.out_degree(u) == 0).map(|u| Arc::new(u, t)));
    let sink_arcs = source_arcs.end..m + arcs.len();
    let feedback_arc = m + arcs.len();
    arcs.push(Arc::new(t, s));

    let mut sequence = Vec::with_capacity(n + 2);
    sequence.push(s);
    sequence.extend_from_slice(inner.sequence());
    sequence.push(t);

    Ok(StandardizedNetwork {
        network: net.extended_by(&["source", "sink"], arcs),
        original_vertices: n,
        original_arcs: m,
        source_arcs,
        sink_arcs,
        feedback_arc,
        order: TopologicalOrder::from_sequence(sequence),
    })
}

/// Longest-path depths in the standard form (feedback arc ignored).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthMap {
    /// Longest `s -> u` path length in arcs; `h(s) = 0`.
    pub h: Vec<usize>,
    /// Longest `u -> t` path length in arcs; `h_minus(t) = 0`.
    pub h_minus: Vec<usize>,
    /// `h(t)`.
    pub depth: usize,
}

pub fn depths(std: &StandardizedNetwork) -> DepthMap {
    let net = std.network();
    let fb = std.feedback_arc();
    let mut h = vec![0usize; net.n()];
    for &u in std.order().sequence() {
        for a in net.out_arcs(u) {
            if a != fb {
                let v = net.arc(a).head;
                h[v] = h[v].max(h[u] + 1);
            }
        }
    }
    let mut h_minus = vec![0usize; net.n()];
    for &u in std.order().sequence().iter().rev() {
        for a in net.in_arcs(u) {
            if a != fb {
                let v = net.arc(a).tail;
                h_minus[v] = h_minus[v].max(h_minus[u] + 1);
            }
        }
    }
    let depth = h[std.sink()];
    DepthMap { h, h_minus, depth }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::complete_acyclic;

    fn net(n: usize, pairs: &[(usize, usize)]) -> Network {
        Network::from_pairs(n, pairs).unwrap()
    }

    fn diamond() -> Network {
        net(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn strong_components_examples() {
        assert_eq!(strong_components(&diamond()).class_count(), 4);
        let p = strong_components(&net(3, &[(0, 1), (1, 0), (1, 2)]));
        assert_eq!(p.classes(), &[0, 0, 1]);
        assert_eq!(strong_components(&complete_acyclic(6).unwrap()).class_count(), 6);
        let p = strong_components(&net(5, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 3), (2, 3)]));
        assert_eq!(p.classes(), &[0, 0, 0, 1, 1]);
    }

    #[test]
    fn shrink_examples() {
        let g = net(3, &[(0, 1), (1, 0), (1, 2)]);
        let s = shrink_components(&g, &strong_components(&g));
        assert_eq!(s.n(), 2);
        assert_eq!(s.arcs(), &[Arc::new(0, 1)]);
        assert_eq!(s.label(0), "1|2");

        let d = diamond();
        assert_eq!(shrink_components(&d, &strong_components(&d)), d);

        // two 2-cycles bridged twice: the bridges merge
        let g = net(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2), (0, 3)]);
        let s = shrink_components(&g, &strong_components(&g));
        assert_eq!((s.n(), s.m()), (2, 1));
        assert_eq!(s.arc(0).weight, 2.0);
    }

    #[test]
    fn remove_loops_examples() {
        assert_eq!(remove_loops(&net(2, &[(0, 0), (1, 1)])).m(), 0);
        assert_eq!(remove_loops(&diamond()), diamond());
        let mixed = net(4, &[(0, 1), (2, 2), (1, 2), (2, 3)]);
        assert_eq!(remove_loops(&mixed).m(), 3);
    }

    #[test]
    fn preprint_two_cycle() {
        let g = preprint_transform(&net(2, &[(0, 1), (1, 0)]));
        assert_eq!(g.n(), 4);
        assert_eq!(g.labels(), &["1", "2", "1'", "2'"]);
        let mut arcs: Vec<_> = g.arcs().iter().map(|a| (a.tail, a.head)).collect();
        arcs.sort();
        // a'=2, b'=3: a'->a, a'->b, b'->a, b'->b
        assert_eq!(arcs, vec![(2, 0), (2, 1), (3, 0), (3, 1)]);
        assert!(topological_order(&g).is_ok());
    }

    #[test]
    fn preprint_identity_and_three_cycle() {
        assert_eq!(preprint_transform(&diamond()), diamond());
        let g = preprint_transform(&net(3, &[(0, 1), (1, 2), (2, 0)]));
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(topological_order(&g).is_ok());
    }

    #[test]
    fn preprint_keeps_inter_component_arcs() {
        let g = preprint_transform(&net(4, &[(3, 0), (0, 1), (1, 0), (1, 2)]));
        assert_eq!(g.arc(0), &Arc::new(3, 0));
        assert_eq!(g.arc(3), &Arc::new(1, 2));
        assert!(topological_order(&g).is_ok());
    }

    #[test]
    fn topological_order_examples() {
        let order = topological_order(&diamond()).unwrap();
        assert!(order.position(0) < order.position(1));
        assert!(order.position(1) < order.position(3));
        assert!(order.position(2) < order.position(3));
        assert!(order.certifies(&diamond(), None));

        assert!(matches!(
            topological_order(&net(2, &[(0, 1), (1, 0)])),
            Err(Error::Cyclic { .. })
        ));
        let dk = complete_acyclic(7).unwrap();
        assert_eq!(topological_order(&dk).unwrap().sequence(), &[0, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn cycle_error_names_a_cycle_vertex() {
        // 0 -> 1 -> 2 -> 1, 2 -> 3: only 1 and 2 are on a cycle
        match topological_order(&net(4, &[(0, 1), (1, 2), (2, 1), (2, 3)])) {
            Err(Error::Cyclic { vertex }) => assert!(vertex == 1 || vertex == 2),
            other => panic!("expected cycle, got {other:?}"),
        }
        match topological_order(&net(2, &[(0, 1), (1, 1)])) {
            Err(Error::Cyclic { vertex }) => assert_eq!(vertex, 1),
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn smallest_id_first() {
        let order = topological_order(&net(4, &[(3, 0), (2, 1)])).unwrap();
        assert_eq!(order.sequence(), &[2, 1, 3, 0]);
    }

    #[test]
    fn standardize_diamond() {
        let std = standardize(&diamond()).unwrap();
        let g = std.network();
        assert_eq!(g.m(), 7);
        assert_eq!((std.source(), std.sink()), (4, 5));
        assert_eq!(g.arc(4), &Arc::new(4, 0));
        assert_eq!(g.arc(5), &Arc::new(3, 5));
        assert_eq!(g.arc(std.feedback_arc()), &Arc::new(5, 4));
        assert!(std.order().certifies(g, Some(std.feedback_arc())));
    }

    #[test]
    fn standardize_small_cases() {
        let std = standardize(&net(1, &[])).unwrap();
        let pairs: Vec<_> = std.network().arcs().iter().map(|a| (a.tail, a.head)).collect();
        assert_eq!(pairs, vec![(1, 0), (0, 2), (2, 1)]);

        let std = standardize(&net(4, &[(0, 1), (2, 3)])).unwrap();
        assert_eq!(std.source_arcs().len(), 2);
        assert_eq!(std.sink_arcs().len(), 2);
        let heads: Vec<_> = std.source_arcs().map(|a| std.network().arc(a).head).collect();
        assert_eq!(heads, vec![0, 2]);
    }

    #[test]
    fn standardize_rejects_cycles_and_loops() {
        assert!(matches!(
            standardize(&net(2, &[(0, 1), (1, 0)])),
            Err(Error::Cyclic { .. })
        ));
        assert!(matches!(
            standardize(&net(2, &[(1, 1)])),
            Err(Error::Cyclic { vertex: 1 })
        ));
    }

    #[test]
    fn depth_examples() {
        let d = depths(&standardize(&diamond()).unwrap());
        assert_eq!(d.h, vec![1, 2, 2, 3, 0, 4]);
        assert_eq!(d.h_minus, vec![3, 2, 2, 1, 4, 0]);
        assert_eq!(d.depth, 4);

        let d = depths(&standardize(&net(3, &[(0, 1), (1, 2)])).unwrap());
        assert_eq!(d.depth, 4);

        let d = depths(&standardize(&complete_acyclic(4).unwrap()).unwrap());
        assert_eq!(&d.h[..4], &[1, 2, 3, 4]);
        assert_eq!(d.depth, 5);
    }

    #[test]
    fn empty_network_is_handled() {
        let e = Network::empty();
        assert_eq!(strong_components(&e).class_count(), 0);
        assert_eq!(preprint_transform(&e).n(), 0);
        let std = standardize(&e).unwrap();
        assert_eq!(std.network().m(), 1);
        assert_eq!(depths(&std).depth, 0);
    }
}
