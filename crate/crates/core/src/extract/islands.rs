//! (k, K)-islands: vertex sets that are weak components of some arc cut and
//! have size between `k` and `K`.
//!
//! Arcs are merged into a union-find forest level by level, in decreasing
//! order of weight, with equal weights forming one level. This is the
//! threshold sweep from high to low: after each level the clusters are the
//! weak components of the cut at that weight. A cluster becomes an island
//! when the next merge would take it above `K`; clusters still within `K`
//! at the end are islands too.

use std::cmp::Ordering;
use std::fmt::Write as _;

use super::check_alignment;
use crate::error::{Error, Result};
use crate::network::Network;
use crate::union_find::DisjointSet;
use crate::weights::{ArcWeights, PathCount, WeightValue, WeightVisitor};

#[derive(Debug, Clone, PartialEq)]
pub struct Island {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    /// Weight of the level at which the island formed: it is connected by
    /// arcs at least this heavy. `None` (infinite) for a singleton.
    pub internal_min: Option<WeightValue>,
    /// Largest weight of an arc leaving the island; `None` if there is none.
    pub external_max: Option<WeightValue>,
}

impl Island {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IslandSet {
    /// Largest first, ties by smallest vertex.
    pub islands: Vec<Island>,
    pub min_size: usize,
    pub max_size: usize,
}

impl IslandSet {
    /// Island number (1-based) of every vertex, 0 outside all islands.
    pub fn to_clu(&self, n: usize) -> Vec<usize> {
        let mut clu = vec![0; n];
        for (i, island) in self.islands.iter().enumerate() {
            for &v in &island.vertices {
                clu[v] = i + 1;
            }
        }
        clu
    }

    /// Text table: island id, size, threshold and largest outside weight.
    pub fn table(&self) -> String {
        let mut out = format!("{:>6} {:>6} {:>24} {:>24}\n", "island", "size", "threshold", "outside max");
        for (i, island) in self.islands.iter().enumerate() {
            let show = |v: &Option<WeightValue>, none: &str| {
                v.as_ref().map_or(none.to_string(), |x| x.to_string())
            };
            let _ = writeln!(
                out,
                "{:>6} {:>6} {:>24} {:>24}",
                i + 1,
                island.size(),
                show(&island.internal_min, "inf"),
                show(&island.external_max, "-"),
            );
        }
        out
    }
}

/// Number of islands of every size from 1 to `K`, as `size,count` lines.
pub fn island_size_csv(set: &IslandSet) -> String {
    let mut counts = vec![0usize; set.max_size + 1];
    for island in &set.islands {
        counts[island.size()] += 1;
    }
    let mut out = String::from("size,count\n");
    for (size, count) in counts.iter().enumerate().skip(1) {
        let _ = writeln!(out, "{size},{count}");
    }
    out
}

/// All maximal (k, K)-islands of `net` under the arc weights `w`. Loops are
/// ignored; islands smaller than `k` are discarded.
pub fn islands(net: &Network, w: &ArcWeights, k: usize, big_k: usize) -> Result<IslandSet> {
    if k == 0 || big_k < k {
        return Err(Error::Argument(format!(
            "island sizes need 1 <= k <= K, got k = {k}, K = {big_k}"
        )));
    }
    check_alignment(w, net.m(), "islands")?;
    let mut found = w.visit(Sweep { net, big_k });
    found.retain(|i| i.size() >= k);
    found.sort_by(|a, b| b.size().cmp(&a.size()).then(a.vertices[0].cmp(&b.vertices[0])));
    Ok(IslandSet {
        islands: found,
        min_size: k,
        max_size: big_k,
    })
}

struct Sweep<'a> {
    net: &'a Network,
    big_k: usize,
}

struct Cluster<C> {
    root: usize,
    size: usize,
    members: Vec<usize>,
    formed: Option<C>,
}

impl WeightVisitor for Sweep<'_> {
    type Output = Vec<Island>;

    fn visit<C: PathCount>(self, w: &[C]) -> Vec<Island> {
        let net = self.net;
        let n = net.n();
        let big_k = self.big_k;

        let mut order: Vec<usize> = (0..net.m()).filter(|&a| !net.arc(a).is_loop()).collect();
        order.sort_by(|&a, &b| w[b].compare(&w[a]));

        let mut ds = DisjointSet::new(n);
        // tracked only while the cluster has at most K vertices
        let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let mut formed: Vec<Option<C>> = vec![None; n];
        let mut stamp = vec![usize::MAX; n];
        let mut found = Vec::new();

        let mut i = 0;
        while i < order.len() {
            let level = &w[order[i]];
            let mut j = i;
            while j < order.len() && w[order[j]].compare(level) == Ordering::Equal {
                j += 1;
            }
            let group = &order[i..j];

            let mut before: Vec<Cluster<C>> = Vec::new();
            for &a in group {
                for v in [net.arc(a).tail, net.arc(a).head] {
                    let root = ds.find(v);
                    if stamp[root] != i {
                        stamp[root] = i;
                        before.push(Cluster {
                            root,
                            size: ds.size_of(root),
                            members: std::mem::take(&mut members[root]),
                            formed: formed[root].take(),
                        });
                    }
                }
            }
            for &a in group {
                ds.union(net.arc(a).tail, net.arc(a).head);
            }

            let mut after: Vec<(usize, Cluster<C>)> =
                before.into_iter().map(|c| (ds.find(c.root), c)).collect();
            after.sort_by_key(|(r, c)| (*r, c.root));
            for chunk in after.chunk_by(|x, y| x.0 == y.0) {
                let root = chunk[0].0;
                let merged = chunk.len() > 1;
                if ds.size_of(root) > big_k {
                    for (_, c) in chunk {
                        if c.size <= big_k {
                            found.push(Island {
                                vertices: sorted(c.members.clone()),
                                internal_min: c.formed.clone().map(WeightValue::from_count),
                                external_max: Some(WeightValue::from_count(level.clone())),
                            });
                        }
                    }
                } else {
                    members[root] = chunk.iter().flat_map(|(_, c)| c.members.iter().copied()).collect();
                    formed[root] = if merged {
                        Some(level.clone())
                    } else {
                        chunk[0].1.formed.clone()
                    };
                }
            }
            i = j;
        }

        for v in 0..n {
            if ds.find(v) == v && ds.size_of(v) <= big_k {
                found.push(Island {
                    vertices: sorted(std::mem::take(&mut members[v])),
                    internal_min: formed[v].take().map(WeightValue::from_count),
                    external_max: None,
                });
            }
        }
        found
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Verifies an island directly from the definition, with threshold
/// `t = island.internal_min`:
///
/// 1. it has between `k` and `K` vertices and is weakly connected by arcs of
///    weight at least `t`;
/// 2. every arc with exactly one endpoint inside weighs less than `t`;
/// 3. every vertex has an arc of weight at least `t` to another vertex of
///    the island (vacuous for a singleton).
///
/// Returns a description of the first violation.
pub fn check_island(
    net: &Network,
    w: &ArcWeights,
    island: &Island,
    k: usize,
    big_k: usize,
) -> std::result::Result<(), String> {
    let size = island.vertices.len();
    if size < k || size > big_k {
        return Err(format!("size {size} outside [{k}, {big_k}]"));
    }
    if w.len() < net.m() {
        return Err("weights not aligned with the network".into());
    }
    w.visit(Checker { net, island })
}

struct Checker<'a> {
    net: &'a Network,
    island: &'a Island,
}

impl WeightVisitor for Checker<'_> {
    type Output = std::result::Result<(), String>;

    fn visit<C: PathCount>(self, w: &[C]) -> Self::Output {
        let net = self.net;
        let vs = &self.island.vertices;
        let threshold: Option<C> = match &self.island.internal_min {
            None => None,
            Some(t) => Some(t.as_count().ok_or("threshold in a different numeric mode")?),
        };
        // `None` stands for an infinite threshold
        let strong = |a: usize| threshold.as_ref().is_some_and(|t| w[a].compare(t).is_ge());

        let mut inside = vec![false; net.n()];
        for &v in vs {
            if v >= net.n() || inside[v] {
                return Err(format!("vertex {v} repeated or out of range"));
            }
            inside[v] = true;
        }

        let mut has_strong = vec![false; net.n()];
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); net.n()];
        for (a, arc) in net.arcs().iter().enumerate() {
            let (ti, hi) = (inside[arc.tail], inside[arc.head]);
            if ti != hi && strong(a) {
                return Err(format!(
                    "arc {} -> {} leaves the island with weight at least the threshold",
                    arc.tail, arc.head
                ));
            }
            if ti && hi && !arc.is_loop() && strong(a) {
                has_strong[arc.tail] = true;
                has_strong[arc.head] = true;
                adjacency[arc.tail].push(arc.head);
                adjacency[arc.head].push(arc.tail);
            }
        }
        if vs.len() > 1 {
            if let Some(&v) = vs.iter().find(|&&v| !has_strong[v]) {
                return Err(format!("vertex {v} has no strong arc inside the island"));
            }
        }

        let mut seen = vec![false; net.n()];
        let mut stack = vec![vs[0]];
        seen[vs[0]] = true;
        let mut reached = 0;
        while let Some(u) = stack.pop() {
            reached += 1;
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if reached != vs.len() {
            return Err(format!(
                "not connected by strong arcs ({reached} of {} vertices reached)",
                vs.len()
            ));
        }
        Ok(())
    }
}
