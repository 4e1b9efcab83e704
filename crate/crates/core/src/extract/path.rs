use super::{check_alignment, Subnetwork, SubnetworkKind};
use crate::acyclic::StandardizedNetwork;
use crate::error::Result;
use crate::weights::{ArcWeights, PathCount, WeightValue, WeightVisitor};

/// Greedy main path. Starting from the source, every reached vertex follows
/// all of its out-arcs of maximal weight (ties included); each vertex is
/// expanded once. The source, the sink and their arcs are stripped from the
/// result, as are original vertices left without a kept arc.
///
/// `w` is aligned with the arcs of the standard form; the feedback arc is
/// ignored.
pub fn main_path(std: &StandardizedNetwork, w: &ArcWeights) -> Result<Subnetwork> {
    check_alignment(w, std.feedback_arc(), "main path")?;
    Ok(w.visit(Greedy { std, single: false }))
}

/// Like [`main_path`], but ties are broken by the smallest head, so the
/// result is a single path.
pub fn main_path_single(std: &StandardizedNetwork, w: &ArcWeights) -> Result<Subnetwork> {
    check_alignment(w, std.feedback_arc(), "main path")?;
    Ok(w.visit(Greedy { std, single: true }))
}

struct Greedy<'a> {
    std: &'a StandardizedNetwork,
    single: bool,
}

impl WeightVisitor for Greedy<'_> {
    type Output = Subnetwork;

    fn visit<C: PathCount>(self, w: &[C]) -> Subnetwork {
        let std = self.std;
        let net = std.network();
        let fb = std.feedback_arc();
        let mut expanded = vec![false; net.n()];
        let mut frontier = vec![std.source()];
        expanded[std.source()] = true;
        let mut kept = Vec::new();

        while !frontier.is_empty() {
            let mut next = Vec::new();
            for u in frontier {
                let out: Vec<usize> = net
                    .out_arcs(u)
                    .filter(|&a| a != fb && a < w.len())
                    .collect();
                let Some(best) = out.iter().map(|&a| &w[a]).max_by(|x, y| x.compare(y)) else {
                    continue;
                };
                let mut chosen: Vec<usize> = out.into_iter().filter(|&a| w[a].ties(best)).collect();
                if self.single {
                    // out-lists are sorted by head
                    chosen.truncate(1);
                }
                for a in chosen {
                    kept.push(a);
                    let h = net.arc(a).head;
                    if !expanded[h] {
                        expanded[h] = true;
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }

        kept.retain(|&a| std.is_original_arc(a));
        Subnetwork::from_arcs(net, kept, SubnetworkKind::MainPath)
    }
}

/// Critical path: the source-to-sink paths of maximal total weight, found by
/// longest-path dynamic programming in topological order. All optimal paths
/// are kept when they tie. Auxiliary arcs count towards the total but are
/// stripped from the result.
pub fn cpm_path(std: &StandardizedNetwork, w: &ArcWeights) -> Result<Subnetwork> {
    check_alignment(w, std.feedback_arc(), "cpm path")?;
    Ok(w.visit(Critical { std }))
}

struct Critical<'a> {
    std: &'a StandardizedNetwork,
}

impl WeightVisitor for Critical<'_> {
    type Output = Subnetwork;

    fn visit<C: PathCount>(self, w: &[C]) -> Subnetwork {
        let std = self.std;
        let net = std.network();
        let fb = std.feedback_arc();
        let (s, t) = (std.source(), std.sink());
        let usable = |a: usize| a != fb && a < w.len();

        let mut best: Vec<Option<C>> = vec![None; net.n()];
        best[s] = Some(C::zero());
        for &u in std.order().sequence() {
            for a in net.in_arcs(u) {
                if !usable(a) {
                    continue;
                }
                if let Some(b) = &best[net.arc(a).tail] {
                    let cand = b.add(&w[a]);
                    if best[u].as_ref().is_none_or(|cur| cand.compare(cur).is_gt()) {
                        best[u] = Some(cand);
                    }
                }
            }
        }

        let mut kept = Vec::new();
        let mut on_path = vec![false; net.n()];
        let mut stack = Vec::new();
        if best[t].is_some() {
            on_path[t] = true;
            stack.push(t);
        }
        while let Some(u) = stack.pop() {
            let target = best[u].clone().expect("vertex on an optimal path");
            for a in net.in_arcs(u) {
                if !usable(a) {
                    continue;
                }
                let v = net.arc(a).tail;
                let Some(b) = &best[v] else { continue };
                if b.add(&w[a]).ties(&target) {
                    kept.push(a);
                    if !on_path[v] {
                        on_path[v] = true;
                        stack.push(v);
                    }
                }
            }
        }

        kept.retain(|&a| std.is_original_arc(a));
        let mut sub = Subnetwork::from_arcs(net, kept, SubnetworkKind::CpmPath);
        sub.total_weight = best[t].clone().map(WeightValue::from_count);
        sub
    }
}
