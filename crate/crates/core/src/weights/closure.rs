use num_bigint::BigUint;
use rayon::prelude::*;

use super::{Method, WeightResult, WeightVector};
use crate::acyclic::topological_order;
use crate::error::{Error, Result};
use crate::network::Network;

/// Sizes of the reflexive-transitive closures of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSizes {
    /// Vertices that reach `u`, including `u`.
    pub ancestors: Vec<u64>,
    /// Vertices reachable from `u`, including `u`.
    pub descendants: Vec<u64>,
}

/// One graph search per vertex and direction, `O(n m)`. Searches run in
/// parallel; each count is independent, so the result does not depend on
/// scheduling.
pub fn closure_sizes(net: &Network) -> ClosureSizes {
    let n = net.n();
    let count = |forward: bool| -> Vec<u64> {
        (0..n)
            .into_par_iter()
            .map_init(
                || (vec![u32::MAX; n], Vec::new()),
                |(mark, stack): &mut (Vec<u32>, Vec<usize>), root| {
                    let stamp = root as u32;
                    mark[root] = stamp;
                    stack.push(root);
                    let mut seen = 0u64;
                    while let Some(u) = stack.pop() {
                        seen += 1;
                        let next = if forward { net.out_neighbors(u) } else { net.in_neighbors(u) };
                        for &v in next {
                            let v = v as usize;
                            if mark[v] != stamp {
                                mark[v] = stamp;
                                stack.push(v);
                            }
                        }
                    }
                    seen
                },
            )
            .collect()
    };
    ClosureSizes {
        ancestors: count(false),
        descendants: count(true),
    }
}

fn check_acyclic(net: &Network) -> Result<()> {
    if let Some(a) = net.arcs().iter().find(|a| a.is_loop()) {
        return Err(Error::Cyclic { vertex: a.tail });
    }
    topological_order(net).map(|_| ())
}

/// Node pair projection count on the original network:
/// `w(u, v) = |ancestors(u)| * |descendants(v)|`, vertex weight
/// `|ancestors(u)| * |descendants(u)|`. Values are exact integers.
pub fn nppc(net: &Network) -> Result<WeightResult> {
    check_acyclic(net)?;
    let c = closure_sizes(net);
    let arc = net
        .arcs()
        .iter()
        .map(|a| BigUint::from(c.ancestors[a.tail]) * c.descendants[a.head])
        .collect();
    let vertex = (0..net.n())
        .map(|u| BigUint::from(c.ancestors[u]) * c.descendants[u])
        .collect();
    Ok(closure_result(net, Method::Nppc, arc, vertex))
}

/// The additive closure weight, raw and divided by `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SumWeights {
    /// `|ancestors(u)| + |descendants(v)|`, at most `n` on an acyclic network.
    pub raw: WeightResult,
    /// Raw weights divided by `n`, in `(0, 1]`.
    pub normalized: WeightVector,
}

pub fn sum_weights(net: &Network) -> Result<SumWeights> {
    check_acyclic(net)?;
    let c = closure_sizes(net);
    let raw_arc: Vec<u64> = net
        .arcs()
        .iter()
        .map(|a| c.ancestors[a.tail] + c.descendants[a.head])
        .collect();
    let n = net.n().max(1) as f64;
    let normalized = WeightVector::from_f64(raw_arc.iter().map(|&w| w as f64 / n).collect());
    let arc = raw_arc.into_iter().map(BigUint::from).collect();
    let vertex = (0..net.n())
        .map(|u| BigUint::from(c.ancestors[u] + c.descendants[u]))
        .collect();
    Ok(SumWeights {
        raw: closure_result(net, Method::Sum, arc, vertex),
        normalized,
    })
}

fn closure_result(net: &Network, method: Method, arc: Vec<BigUint>, vertex: Vec<BigUint>) -> WeightResult {
    WeightResult {
        method,
        arc: WeightVector::from_counts(arc),
        vertex: WeightVector::from_counts(vertex),
        total_flow: None,
        original_vertices: net.n(),
        original_arcs: net.m(),
        alpha: None,
        normalized: false,
        floored_arcs: Vec::new(),
    }
}
