//! Hubs and authorities.
//!
//! Arcs point from the cited work to the citing one, so a good authority is
//! the tail of many arcs whose heads are good hubs. This interchanges the
//! roles relative to a network whose arcs point from citing to cited.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::network::Network;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_MAX_ITERATIONS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct HitsScores {
    /// Hub score of every vertex (citing side), unit Euclidean norm.
    pub hub: Vec<f64>,
    /// Authority score of every vertex (cited side), unit Euclidean norm.
    pub authority: Vec<f64>,
    pub iterations: usize,
    /// Largest Euclidean distance between the last two iterates.
    pub residual: f64,
    /// False if the iteration limit was reached first.
    pub converged: bool,
}

/// Power iteration with binary adjacency (parallel arcs count once, weights
/// are ignored), using
///
/// `a(u) = sum of h(v) over arcs u -> v`, `h(v) = sum of a(u) over arcs u -> v`.
///
/// Two alternating sequences run side by side, one started from constant
/// hubs and one from constant authorities, each normalized after every
/// half-step. A sequence has converged when its vectors move less than
/// `tolerance` from one round to the next. The scores reported are the
/// normalized sums of the two sequences' last vectors. They agree with either
/// sequence when the leading singular value is simple and stay well defined
/// when it is not, where a single sequence depends on its start. The scheme
/// is symmetric, so running on the reversed network swaps hubs and
/// authorities bit for bit.
pub fn hits(net: &Network, tolerance: f64, max_iterations: usize) -> Result<HitsScores> {
    if net.m() == 0 {
        return Err(Error::Argument("hubs and authorities need at least one arc".into()));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::Argument(format!("tolerance must be positive, got {tolerance}")));
    }
    let n = net.n();
    let successors = neighbours(net, true);
    let predecessors = neighbours(net, false);

    // (hub, authority) of the last two half-steps; one belongs to each
    // sequence
    let start = vec![1.0 / (n as f64).sqrt(); n];
    let (mut hub, mut authority) = (start.clone(), start);
    let (mut prev_hub, mut prev_authority) = (hub.clone(), authority.clone());
    let mut residual = f64::INFINITY;
    let mut iterations = 0;

    while iterations < max_iterations {
        iterations += 1;
        let mut next_authority = gather(&successors, &hub);
        let mut next_hub = gather(&predecessors, &authority);
        normalize(&mut next_authority);
        normalize(&mut next_hub);
        residual = if iterations == 1 {
            f64::INFINITY
        } else {
            distance(&next_authority, &prev_authority).max(distance(&next_hub, &prev_hub))
        };
        prev_authority = std::mem::replace(&mut authority, next_authority);
        prev_hub = std::mem::replace(&mut hub, next_hub);
        if residual < tolerance {
            break;
        }
    }

    Ok(HitsScores {
        hub: combine(&hub, &prev_hub),
        authority: combine(&authority, &prev_authority),
        iterations,
        residual,
        converged: residual < tolerance,
    })
}

fn combine(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut sum: Vec<f64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
    normalize(&mut sum);
    sum
}

fn neighbours(net: &Network, out: bool) -> Vec<Vec<usize>> {
    (0..net.n())
        .map(|u| {
            let mut v: Vec<usize> = if out {
                net.successors(u).collect()
            } else {
                net.predecessors(u).collect()
            };
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect()
}

fn gather(adjacency: &[Vec<usize>], x: &[f64]) -> Vec<f64> {
    adjacency
        .iter()
        .map(|list| list.iter().map(|&v| x[v]).sum())
        .collect()
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
}

fn distance(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Vertices by decreasing score, ties by index.
pub fn ranking(scores: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..scores.len()).collect();
    idx.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    idx
}

/// The `top` best hubs and authorities side by side, as aligned text.
pub fn top_table(net: &Network, scores: &HitsScores, top: usize) -> String {
    let rows = top_rows(net, scores, top);
    let width = rows
        .iter()
        .map(|r| r.2.chars().count())
        .max()
        .unwrap_or(0)
        .max(5);
    let mut out = format!(
        "{:>4}  {:>12}  {:<width$}  |  {:>12}  {}\n",
        "rank", "hub", "label", "authority", "label"
    );
    for (rank, hub, hub_label, auth, auth_label) in rows {
        let _ = writeln!(
            out,
            "{rank:>4}  {hub:>12.8}  {hub_label:<width$}  |  {auth:>12.8}  {auth_label}"
        );
    }
    out
}

/// The same table as CSV.
pub fn top_csv(net: &Network, scores: &HitsScores, top: usize) -> String {
    let mut out = String::from("rank,hub,hub_label,authority,authority_label\n");
    for (rank, hub, hub_label, auth, auth_label) in top_rows(net, scores, top) {
        let _ = writeln!(out, "{rank},{hub},{},{auth},{}", csv_field(&hub_label), csv_field(&auth_label));
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn top_rows(net: &Network, scores: &HitsScores, top: usize) -> Vec<(usize, f64, String, f64, String)> {
    let hubs = ranking(&scores.hub);
    let auths = ranking(&scores.authority);
    hubs.iter()
        .zip(&auths)
        .take(top)
        .enumerate()
        .map(|(i, (&h, &a))| {
            (
                i + 1,
                scores.hub[h],
                net.label(h).to_string(),
                scores.authority[a],
                net.label(a).to_string(),
            )
        })
        .collect()
}
