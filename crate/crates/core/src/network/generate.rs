use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::{Arc, Labels, Network};

/// The complete acyclic network on `n` vertices: every arc `(i, j)`, `i < j`.
pub fn complete_acyclic(n: usize) -> Result<Network> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "complete acyclic network needs n >= 2, got {n}"
        )));
    }
    let mut arcs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(Arc::new(i, j));
        }
    }
    Ok(Network::build(Labels::numbered(n), arcs))
}

/// Random acyclic network: each pair `(i, j)` with `i < j` becomes an arc
/// independently with probability `density`.
///
/// The generator is fixed so that outputs are reproducible across platforms:
/// a `ChaCha8Rng` seeded with `seed_from_u64(seed)`. Pairs are visited
/// row-major (`i` ascending, then `j` ascending) and the gap to the next
/// selected pair is drawn as `floor(ln(1 - U) / ln(1 - density))` with
/// `U = rng.random::<f64>()`, one draw per selected arc. With `density = 1`
/// no draws are made and the result is the complete acyclic network. The
/// cost is `O(n + m)`, so sparse networks with millions of arcs are cheap.
pub fn random_dag(n: usize, density: f64, seed: u64) -> Result<Network> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "random DAG needs n >= 2, got {n}"
        )));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::Argument(format!(
            "density must lie in (0, 1], got {density}"
        )));
    }
    if density == 1.0 {
        return complete_acyclic(n);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let log_q = (-density).ln_1p();
    let expected = density * (n as f64) * (n as f64 - 1.0) / 2.0;
    let mut arcs = Vec::with_capacity((expected * 1.05) as usize + 16);

    let (mut i, mut j) = (0usize, 1usize);
    'outer: loop {
        let u: f64 = rng.random();
        let gap = ((-u).ln_1p() / log_q).floor();
        let mut skip = if gap >= (usize::MAX / 2) as f64 {
            usize::MAX / 2
        } else {
            gap as usize
        };
        while j + skip >= n {
            skip -= n - j;
            i += 1;
            if i + 1 >= n {
                break 'outer;
            }
            j = i + 1;
        }
        j += skip;
        arcs.push(Arc::new(i, j));
        j += 1;
        if j == n {
            i += 1;
            if i + 1 >= n {
                break;
            }
            j = i + 1;
        }
    }
    Ok(Network::build(Labels::numbered(n), arcs))
}
