//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use citenet::network::Network;
use num_bigint::BigUint;

/// Counts obtained by listing every path of a small acyclic network.
pub struct PathCensus {
    /// Paths from a vertex without predecessors to one without successors,
    /// through each arc.
    pub spc: Vec<u64>,
    /// Paths from any vertex to one without successors, through each arc.
    pub splc: Vec<u64>,
    /// Paths between any two vertices, through each arc.
    pub spnp: Vec<u64>,
    /// Paths ending in each vertex, the trivial one included.
    pub ending: Vec<u64>,
    /// Paths starting in each vertex, the trivial one included.
    pub starting: Vec<u64>,
    /// `between[i][j]`: number of paths from `i` to `j` (1 on the diagonal).
    pub between: Vec<Vec<u64>>,
}

pub fn census(net: &Network) -> PathCensus {
    let n = net.n();
    let mut c = PathCensus {
        spc: vec![0; net.m()],
        splc: vec![0; net.m()],
        spnp: vec![0; net.m()],
        ending: vec![0; n],
        starting: vec![0; n],
        between: vec![vec![0; n]; n],
    };
    let mut stack = Vec::new();
    for start in 0..n {
        walk(net, start, start, &mut stack, &mut c);
    }
    c
}

fn walk(net: &Network, start: usize, v: usize, stack: &mut Vec<usize>, c: &mut PathCensus) {
    c.ending[v] += 1;
    c.starting[start] += 1;
    c.between[start][v] += 1;
    let maximal = net.out_degree(v) == 0;
    let minimal = net.in_degree(start) == 0;
    for &a in stack.iter() {
        c.spnp[a] += 1;
        if maximal {
            c.splc[a] += 1;
            if minimal {
                c.spc[a] += 1;
            }
        }
    }
    for a in net.out_arcs(v) {
        stack.push(a);
        walk(net, start, net.arc(a).head, stack, c);
        stack.pop();
    }
}

pub fn big(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&x| BigUint::from(x)).collect()
}

/// Sets of vertices that are weak components of the cut `w >= t` for some
/// threshold `t`, found by testing every vertex subset against every
/// threshold (and an infinite one). Bit `i` of a mask stands for vertex `i`.
pub fn brute_force_islands(net: &Network, w: &[f64]) -> Vec<u32> {
    let n = net.n();
    assert!(n <= 16);
    let mut thresholds: Vec<f64> = w[..net.m()].to_vec();
    thresholds.push(f64::INFINITY);
    thresholds.sort_by(f64::total_cmp);
    thresholds.dedup();

    let mut found = Vec::new();
    for mask in 1u32..(1 << n) {
        let inside = |v: usize| mask & (1 << v) != 0;
        let is_island = thresholds.iter().any(|&t| {
            let mut strong = Vec::new();
            for (a, arc) in net.arcs().iter().enumerate() {
                let (ti, hi) = (inside(arc.tail), inside(arc.head));
                if w[a] >= t {
                    if ti != hi {
                        return false;
                    }
                    if ti {
                        strong.push((arc.tail, arc.head));
                    }
                }
            }
            connected(mask, &strong)
        });
        if is_island {
            found.push(mask);
        }
    }
    found
}

fn connected(mask: u32, edges: &[(usize, usize)]) -> bool {
    let first = mask.trailing_zeros();
    let mut reached = 1u32 << first;
    loop {
        let before = reached;
        for &(a, b) in edges {
            if reached & (1 << a) != 0 || reached & (1 << b) != 0 {
                reached |= (1 << a) | (1 << b);
            }
        }
        if reached == before {
            return reached == mask;
        }
    }
}

/// Islands of size at most `big_k` with no island superset of size at most
/// `big_k`, then restricted to size at least `k`.
pub fn maximal_islands(all: &[u32], k: usize, big_k: usize) -> Vec<u32> {
    let small: Vec<u32> = all
        .iter()
        .copied()
        .filter(|m| m.count_ones() as usize <= big_k)
        .collect();
    let mut out: Vec<u32> = small
        .iter()
        .copied()
        .filter(|&m| !small.iter().any(|&o| o != m && o & m == m))
        .filter(|m| m.count_ones() as usize >= k)
        .collect();
    out.sort_unstable();
    out
}

pub fn mask_of(vertices: &[usize]) -> u32 {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}
