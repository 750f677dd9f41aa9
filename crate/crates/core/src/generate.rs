//! Seeded random graph families for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`: every pair is an edge independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A sparse random core on `core` vertices with about `core_degree` average
/// degree, plus `total - core` vertices attached one by one to a uniformly
/// random earlier vertex (random recursive trees hanging off the core).
pub fn core_with_trees(core: usize, core_degree: f64, total: usize, seed: u64) -> Graph {
    assert!(core >= 1 && total >= core);
    let mut r = rng(seed);
    let mut edges = Vec::new();
    // a random spanning path keeps the core connected
    let mut perm: Vec<VertexId> = (0..core).collect();
    perm.shuffle(&mut r);
    for w in perm.windows(2) {
        edges.push((w[0], w[1]));
    }
    let target = ((core as f64 * core_degree) / 2.0) as usize;
    while edges.len() < target.max(core.saturating_sub(1)) && core > 2 {
        let u = r.gen_range(0..core);
        let v = r.gen_range(0..core);
        if u != v {
            edges.push((u, v));
        }
    }
    for v in core..total {
        edges.push((v, r.gen_range(0..v)));
    }
    Graph::from_edges(total, &edges).unwrap()
}

/// A connected graph with many small atoms: random cycles of length 3 to
/// `max_cycle` and pendant edges, each glued onto the existing graph along a
/// vertex or an edge, until `n` vertices exist. Average degree stays near 2.5
/// regardless of `n`.
pub fn glued_blocks(n: usize, max_cycle: usize, seed: u64) -> Graph {
    assert!(max_cycle >= 3);
    let mut r = rng(seed);
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut count = 1;
    while count < n {
        if r.gen_bool(0.3) || count == 1 {
            let anchor = r.gen_range(0..count);
            edges.push((anchor, count));
            count += 1;
            continue;
        }
        let len = r.gen_range(3..=max_cycle);
        // glue along an existing edge or a single vertex
        let (a, b) = if r.gen_bool(0.5) && !edges.is_empty() {
            edges[r.gen_range(0..edges.len())]
        } else {
            let a = r.gen_range(0..count);
            (a, a)
        };
        let fresh = if a == b { len - 1 } else { len - 2 };
        let fresh = fresh.min(n - count).max(1);
        let mut prev = a;
        for i in 0..fresh {
            edges.push((prev, count + i));
            prev = count + i;
        }
        if prev != b {
            edges.push((prev, b));
        }
        count += fresh;
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_sized() {
        let a = erdos_renyi(30, 0.2, 7);
        let b = erdos_renyi(30, 0.2, 7);
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let g = core_with_trees(50, 4.0, 500, 3);
        assert_eq!(g.n(), 500);
        assert!(g.is_connected());
        let h = glued_blocks(1000, 7, 11);
        assert_eq!(h.n(), 1000);
        assert!(h.is_connected());
        let avg = 2.0 * h.m() as f64 / h.n() as f64;
        assert!(avg > 2.0 && avg < 3.5, "{avg}");
    }
}
