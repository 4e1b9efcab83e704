use num_bigint::BigUint;

use super::{path_totals, ArcWeights, LogCount, Method, NumericMode, PathCount, WeightResult, WeightVector};
use crate::acyclic::StandardizedNetwork;
use crate::error::{Error, Result};

/// Path counts from the source and to the sink.
#[derive(Debug, Clone)]
pub struct FlowCounts<C> {
    /// `N-(u)`: number of `s -> u` paths.
    pub from_source: Vec<C>,
    /// `N+(u)`: number of `u -> t` paths.
    pub to_sink: Vec<C>,
}

/// One forward pass in topological order and one backward pass, `O(m)`.
/// The feedback arc is ignored.
pub fn flow_counts<C: PathCount>(std: &StandardizedNetwork) -> FlowCounts<C> {
    let net = std.network();
    let order = std.order().sequence();
    let (s, t) = (std.source(), std.sink());

    let mut from_source = vec![C::zero(); net.n()];
    from_source[s] = C::one();
    for &u in order {
        if u == s {
            continue;
        }
        // the feedback arc enters s only, which is skipped
        let acc = C::sum_at(&from_source, net.in_neighbors(u));
        from_source[u] = acc;
    }

    let mut to_sink = vec![C::zero(); net.n()];
    to_sink[t] = C::one();
    for &u in order.iter().rev() {
        if u == t {
            continue;
        }
        let acc = C::sum_at(&to_sink, net.out_neighbors(u));
        to_sink[u] = acc;
    }

    FlowCounts {
        from_source,
        to_sink,
    }
}

fn flow_weights_in<C: PathCount>(
    std: &StandardizedNetwork,
    computed_on: &StandardizedNetwork,
    method: Method,
) -> Result<WeightResult> {
    let counts: FlowCounts<C> = flow_counts(computed_on);
    let net = computed_on.network();
    let fb = std.feedback_arc();
    let t = std.sink();

    let mut finite = true;
    let arc: Vec<C> = net.arcs()[..std.standard_arc_count()]
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let w = if i == fb {
                counts.from_source[t].clone()
            } else {
                counts.from_source[a.tail].mul(&counts.to_sink[a.head])
            };
            finite &= w.is_finite();
            w
        })
        .collect();
    let vertex: Vec<C> = counts
        .from_source
        .iter()
        .zip(&counts.to_sink)
        .map(|(d, u)| d.mul(u))
        .collect();

    if !(finite && vertex.iter().all(C::is_finite)) {
        return Err(Error::Overflow {
            what: "path count",
        });
    }

    let total = arc[fb].clone();
    Ok(WeightResult {
        method,
        total_flow: Some(WeightVector::from_counts(vec![total]).get(0)),
        arc: WeightVector::from_counts(arc),
        vertex: WeightVector::from_counts(vertex),
        original_vertices: std.original_vertex_count(),
        original_arcs: std.original_arc_count(),
        alpha: None,
        normalized: false,
        floored_arcs: Vec::new(),
    })
}

fn flow_weights(
    std: &StandardizedNetwork,
    computed_on: &StandardizedNetwork,
    method: Method,
    mode: NumericMode,
) -> Result<WeightResult> {
    match mode {
        NumericMode::Float => flow_weights_in::<f64>(std, computed_on, method),
        NumericMode::Exact => flow_weights_in::<BigUint>(std, computed_on, method),
        NumericMode::Log => flow_weights_in::<LogCount>(std, computed_on, method),
    }
}

/// Search path count: the number of `s -> t` paths through every arc,
/// `N(u, v) = N-(u) * N+(v)`. The feedback arc carries the total flow
/// `N-(t)`; vertex weights are `N-(u) * N+(u)`.
pub fn spc(std: &StandardizedNetwork, mode: NumericMode) -> Result<WeightResult> {
    flow_weights(std, std, Method::Spc, mode)
}

/// Search path link count: SPC on the standard form extended by an arc from
/// the source to every vertex, so that each vertex is a path origin. Weights
/// are reported on the arcs of the standard form only.
pub fn splc(std: &StandardizedNetwork, mode: NumericMode) -> Result<WeightResult> {
    flow_weights(std, &std.extended(true, false), Method::Splc, mode)
}

/// Search path node pair: SPC on the network where every vertex is linked
/// from the source and to the sink. On original arcs this equals
/// `L-(u) * L+(v)`, see [`spnp_direct`].
pub fn spnp(std: &StandardizedNetwork, mode: NumericMode) -> Result<WeightResult> {
    flow_weights(std, &std.extended(true, true), Method::Spnp, mode)
}

/// SPNP weights of the original arcs from path totals: the number of paths
/// ending in the tail times the number of paths starting in the head.
pub fn spnp_direct(std: &StandardizedNetwork, mode: NumericMode) -> Result<ArcWeights> {
    fn run<C: PathCount>(std: &StandardizedNetwork) -> Result<ArcWeights> {
        let (ending, starting) = path_totals::<C>(std);
        let net = std.network();
        let w: Vec<C> = (0..std.original_arc_count())
            .map(|i| {
                let a = net.arc(i);
                ending[a.tail].mul(&starting[a.head])
            })
            .collect();
        if !w.iter().all(C::is_finite) {
            return Err(Error::Overflow {
                what: "path count",
            });
        }
        Ok(WeightVector::from_counts(w))
    }
    match mode {
        NumericMode::Float => run::<f64>(std),
        NumericMode::Exact => run::<BigUint>(std),
        NumericMode::Log => run::<LogCount>(std),
    }
}
