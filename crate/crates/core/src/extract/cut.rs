use num_bigint::BigUint;
use num_traits::FromPrimitive;

use super::{check_alignment, Subnetwork, SubnetworkKind};
use crate::error::{Error, Result};
use crate::network::Network;
use crate::union_find::DisjointSet;
use crate::weights::{ArcWeights, WeightValues};

/// Arcs of weight at least a threshold, with their weak components.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcCut {
    pub subnetwork: Subnetwork,
    /// Weak components of the cut, largest first (ties by smallest vertex).
    pub components: Vec<Vec<usize>>,
}

impl ArcCut {
    /// The largest weak component as a subnetwork of the parent.
    pub fn main_component(&self, parent: &Network) -> Subnetwork {
        let Some(main) = self.components.first() else {
            return self.subnetwork.clone();
        };
        let arcs = self
            .subnetwork
            .arcs
            .iter()
            .copied()
            .filter(|&a| main.binary_search(&parent.arc(a).tail).is_ok())
            .collect();
        Subnetwork::from_arcs(parent, arcs, SubnetworkKind::ArcCut)
    }
}

/// Deletes the arcs with weight below `threshold` (given on the linear scale,
/// whatever the mode of `w`) and then the isolated vertices. `w` is aligned
/// with the arcs of `net`; extra trailing weights are ignored.
pub fn arc_cut(net: &Network, w: &ArcWeights, threshold: f64) -> Result<ArcCut> {
    if threshold.is_nan() {
        return Err(Error::Argument("threshold is NaN".into()));
    }
    check_alignment(w, net.m(), "arc cut")?;
    let m = net.m();
    let keep: Vec<bool> = match w.values() {
        WeightValues::Float(v) => v[..m].iter().map(|&x| x >= threshold).collect(),
        WeightValues::Log(v) => {
            let t = if threshold > 0.0 { threshold.ln() } else { f64::NEG_INFINITY };
            v[..m].iter().map(|x| threshold <= 0.0 || x.0 >= t).collect()
        }
        WeightValues::Exact(v) => {
            if threshold <= 0.0 {
                vec![true; m]
            } else {
                match BigUint::from_f64(threshold.ceil()) {
                    Some(t) => v[..m].iter().map(|x| *x >= t).collect(),
                    None => vec![false; m],
                }
            }
        }
    };
    let arcs: Vec<usize> = (0..m).filter(|&a| keep[a]).collect();
    let subnetwork = Subnetwork::from_arcs(net, arcs, SubnetworkKind::ArcCut);

    let mut ds = DisjointSet::new(net.n());
    for &a in &subnetwork.arcs {
        ds.union(net.arc(a).tail, net.arc(a).head);
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &v in &subnetwork.vertices {
        by_root.entry(ds.find(v)).or_default().push(v);
    }
    let mut components: Vec<Vec<usize>> = by_root.into_values().collect();
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    Ok(ArcCut {
        subnetwork,
        components,
    })
}
