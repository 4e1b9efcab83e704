//! Path counts by length.
//!
//! `P-(u; x) = 1 + x * sum over predecessors v of P-(v; x)` with `P-(s) = 0`,
//! and symmetrically `P+` towards the sink with `P+(t) = 0`. Coefficient `k`
//! counts the paths of length `k` ending (starting) in `u`, so `P(u; 1)` is
//! the number of all such paths and `P(u; alpha)` discounts long paths.

use num_bigint::BigUint;

use super::{Method, PathCount, WeightResult, WeightValue, WeightVector};
use crate::acyclic::StandardizedNetwork;
use crate::error::{Error, Result};

/// Coefficients of `P-` and `P+` for every vertex of the standard form.
#[derive(Debug, Clone, PartialEq)]
pub struct PathPolynomials<C = BigUint> {
    /// `ending[u][k]`: paths of length `k` ending in `u`.
    pub ending: Vec<Vec<C>>,
    /// `starting[u][k]`: paths of length `k` starting in `u`.
    pub starting: Vec<Vec<C>>,
}

impl<C: PathCount> PathPolynomials<C> {
    /// `L-(u) = P-(u; 1)`.
    pub fn paths_ending(&self, u: usize) -> C {
        sum(&self.ending[u])
    }

    /// `L+(u) = P+(u; 1)`.
    pub fn paths_starting(&self, u: usize) -> C {
        sum(&self.starting[u])
    }
}

impl<C: PathCount> PathPolynomials<C> {
    /// Evaluates `P-(u; x)` by Horner's rule.
    pub fn eval_ending(&self, u: usize, x: f64) -> f64 {
        horner(&self.ending[u], x)
    }

    pub fn eval_starting(&self, u: usize, x: f64) -> f64 {
        horner(&self.starting[u], x)
    }
}

fn sum<C: PathCount>(coefficients: &[C]) -> C {
    let mut acc = C::zero();
    for c in coefficients {
        acc.add_assign(c);
    }
    acc
}

fn horner<C: PathCount>(coefficients: &[C], x: f64) -> f64 {
    coefficients
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * x + c.to_linear())
}

fn add_shifted<C: PathCount>(acc: &mut Vec<C>, poly: &[C]) {
    // acc += x * poly
    if acc.len() < poly.len() + 1 {
        acc.resize(poly.len() + 1, C::zero());
    }
    for (k, c) in poly.iter().enumerate() {
        acc[k + 1].add_assign(c);
    }
}

/// Both polynomial families in topological and reverse topological order.
/// Cost is `O(h m)` coefficient operations for network depth `h`.
pub fn path_polynomials<C: PathCount>(std: &StandardizedNetwork) -> Result<PathPolynomials<C>> {
    let net = std.network();
    let fb = std.feedback_arc();
    let order = std.order().sequence();
    let (s, t) = (std.source(), std.sink());

    let mut ending: Vec<Vec<C>> = vec![Vec::new(); net.n()];
    for &u in order {
        if u == s {
            continue;
        }
        let mut poly = vec![C::one()];
        for a in net.in_arcs(u) {
            if a != fb {
                let v = net.arc(a).tail;
                let prev = std::mem::take(&mut ending[v]);
                add_shifted(&mut poly, &prev);
                ending[v] = prev;
            }
        }
        ending[u] = poly;
    }

    let mut starting: Vec<Vec<C>> = vec![Vec::new(); net.n()];
    for &u in order.iter().rev() {
        if u == t {
            continue;
        }
        let mut poly = vec![C::one()];
        for a in net.out_arcs(u) {
            if a != fb {
                let v = net.arc(a).head;
                let next = std::mem::take(&mut starting[v]);
                add_shifted(&mut poly, &next);
                starting[v] = next;
            }
        }
        starting[u] = poly;
    }

    let finite = ending
        .iter()
        .chain(&starting)
        .all(|p| p.iter().all(C::is_finite));
    if !finite {
        return Err(Error::Overflow {
            what: "path polynomial coefficient",
        });
    }
    Ok(PathPolynomials { ending, starting })
}

/// `L-(u)` and `L+(u)` for every vertex of the standard form, computed by
/// the direct recurrences over the original arcs (arcs at the source and
/// sink contribute nothing because `L-(s) = L+(t) = 0`).
pub fn path_totals<C: PathCount>(std: &StandardizedNetwork) -> (Vec<C>, Vec<C>) {
    let ending = aged_totals(std, |acc: C| {
        let mut r = C::one();
        r.add_assign(&acc);
        r
    });
    (ending.0, ending.1)
}

// The feedback arc enters s and leaves t, both of which are skipped.
fn aged_totals<C: PathCount>(std: &StandardizedNetwork, step: impl Fn(C) -> C) -> (Vec<C>, Vec<C>) {
    let net = std.network();
    let order = std.order().sequence();
    let (s, t) = (std.source(), std.sink());

    let mut ending = vec![C::zero(); net.n()];
    for &u in order {
        if u == s {
            continue;
        }
        let acc = C::sum_at(&ending, net.in_neighbors(u));
        ending[u] = step(acc);
    }
    let mut starting = vec![C::zero(); net.n()];
    for &u in order.iter().rev() {
        if u == t {
            continue;
        }
        let acc = C::sum_at(&starting, net.out_neighbors(u));
        starting[u] = step(acc);
    }
    (ending, starting)
}

/// SPNP with aging: `L-(u) = P-(u; alpha)` and `L+(v) = P+(v; alpha)`,
/// evaluated by the recurrence `L-(u) = 1 + alpha * sum L-(v)` without
/// storing polynomials. Arc `(u, v)` gets `L-(u) * L+(v)`; the source arcs
/// get `L+(u)`, the sink arcs `L-(u)` and the feedback arc the sum of all
/// `L-(u)`. With `alpha = 1` this reproduces [`super::spnp`] in float mode.
pub fn aged_path_counts(std: &StandardizedNetwork, alpha: f64) -> Result<WeightResult> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Argument(format!(
            "aging factor must lie in (0, 1], got {alpha}"
        )));
    }
    let (ending, starting) = aged_totals(std, |acc: f64| 1.0 + alpha * acc);
    let net = std.network();
    let n = std.original_vertex_count();
    let fb = std.feedback_arc();
    let (s, t) = (std.source(), std.sink());

    let total: f64 = ending[..n].iter().sum();
    let arc: Vec<f64> = (0..std.standard_arc_count())
        .map(|i| {
            let a = net.arc(i);
            if i == fb {
                total
            } else if a.tail == s {
                starting[a.head]
            } else if a.head == t {
                ending[a.tail]
            } else {
                ending[a.tail] * starting[a.head]
            }
        })
        .collect();
    let source_total: f64 = starting[..n].iter().sum();
    let mut vertex: Vec<f64> = (0..net.n()).map(|u| ending[u] * starting[u]).collect();
    vertex[s] = source_total;
    vertex[t] = total;

    if !arc.iter().chain(&vertex).all(|x| x.is_finite()) {
        return Err(Error::Overflow {
            what: "aged path count",
        });
    }
    Ok(WeightResult {
        method: Method::Spnp,
        arc: WeightVector::from_f64(arc),
        vertex: WeightVector::from_f64(vertex),
        total_flow: Some(WeightValue::Float(total)),
        original_vertices: n,
        original_arcs: std.original_arc_count(),
        alpha: Some(alpha),
        normalized: false,
        floored_arcs: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acyclic::{depths, standardize};
    use crate::network::Network;
    use crate::weights::{spnp, NumericMode};

    fn std_of(n: usize, pairs: &[(usize, usize)]) -> StandardizedNetwork {
        standardize(&Network::from_pairs(n, pairs).unwrap()).unwrap()
    }

    fn coeffs(p: &[BigUint]) -> Vec<u64> {
        p.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn diamond_polynomials() {
        let std = std_of(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let p: PathPolynomials = path_polynomials(&std).unwrap();
        assert_eq!(coeffs(&p.ending[3]), vec![1, 2, 2]);
        assert_eq!(p.paths_ending(3), BigUint::from(5u32));
        assert_eq!(p.paths_starting(0), BigUint::from(5u32));
        assert!(p.ending[std.source()].is_empty());
        for u in 0..4 {
            assert_eq!(p.ending[u][0], BigUint::from(1u32));
        }
        let d = depths(&std);
        for u in 0..std.network().n() {
            assert!(p.ending[u].len() <= d.h[u] + 1);
            assert!(p.starting[u].len() <= d.h_minus[u] + 1);
        }
    }

    #[test]
    fn path_polynomial() {
        let std = std_of(3, &[(0, 1), (1, 2)]);
        let p: PathPolynomials = path_polynomials(&std).unwrap();
        assert_eq!(coeffs(&p.ending[2]), vec![1, 1, 1]);
        assert_eq!(p.eval_ending(2, 0.5), 1.75);
    }

    #[test]
    fn totals_match_polynomials() {
        let std = std_of(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4)]);
        let p: PathPolynomials = path_polynomials(&std).unwrap();
        let (ending, starting) = path_totals::<BigUint>(&std);
        for u in 0..std.network().n() {
            assert_eq!(p.paths_ending(u), ending[u]);
            assert_eq!(p.paths_starting(u), starting[u]);
        }
    }

    #[test]
    fn aging_examples() {
        let std = std_of(3, &[(0, 1), (1, 2)]);
        let r = aged_path_counts(&std, 0.5).unwrap();
        // L-(b) = 1.5, L+(c) = 1
        assert_eq!(r.arc.as_float().unwrap()[1], 1.5);

        let diamond = std_of(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let aged = aged_path_counts(&diamond, 1.0).unwrap();
        let plain = spnp(&diamond, NumericMode::Float).unwrap();
        assert_eq!(aged.arc, plain.arc);
        assert_eq!(aged.vertex, plain.vertex);
        assert_eq!(aged.total_flow, plain.total_flow);

        let tiny = aged_path_counts(&diamond, 1e-12).unwrap();
        for &w in &tiny.arc.as_float().unwrap()[..4] {
            assert!((w - 1.0).abs() < 1e-9);
        }
        assert!(aged_path_counts(&diamond, 0.0).is_err());
        assert!(aged_path_counts(&diamond, 1.5).is_err());
    }
}
