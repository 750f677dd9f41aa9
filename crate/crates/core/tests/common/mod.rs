#![allow(dead_code)]

use atomdecomp::{Graph, VertexSet};
use proptest::prelude::*;

/// Graphs on `lo..=hi` vertices, each pair an edge with probability about 0.4.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

/// Connected graphs: a random spanning tree plus random extra edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec(proptest::bool::weighted(0.25), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, bits)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.index(i + 1), i + 1))
                    .collect();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
    })
}

/// A graph together with a nonempty subset of at most `max` vertices.
pub fn graph_and_set(
    lo: usize,
    hi: usize,
    max: usize,
) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(lo, hi).prop_flat_map(move |g| {
        let n = g.n();
        proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=max.min(n))
            .prop_map(move |s| (g.clone(), VertexSet::from_unsorted(s)))
    })
}

/// Number of components `M` of `G - sep` with `N(M) = sep`.
pub fn full_components(g: &Graph, sep: &VertexSet) -> usize {
    let rest = g.all_vertices().difference(sep);
    g.connected_components(&rest)
        .unwrap()
        .iter()
        .filter(|c| &g.neighborhood(c, false).unwrap() == sep)
        .count()
}
