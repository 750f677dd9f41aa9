//! Small bundled graphs with known decompositions.

use crate::graph::Graph;

pub const WORKED_EXAMPLE: &str = include_str!("../fixtures/worked_example.txt");
pub const TWO_BRANCHES: &str = include_str!("../fixtures/two_branches.txt");
pub const MCS_TRACE: &str = include_str!("../fixtures/mcs_trace.txt");
pub const SPARSE_1K: &str = include_str!("../fixtures/sparse_1k.txt");
pub const SPARSE_5K: &str = include_str!("../fixtures/sparse_5k.txt");

/// Edges a-t, t-l, t-r, l-s, l-r, r-x, r-d, d-b, r-b, s-b.
pub fn worked_example() -> Graph {
    Graph::load_edge_list_str(WORKED_EXAMPLE).expect("bundled fixture parses")
}

/// Edges a-b, b-c, c-d, b-e, e-f, f-c.
pub fn two_branches() -> Graph {
    Graph::load_edge_list_str(TWO_BRANCHES).expect("bundled fixture parses")
}

/// Edges a-b, b-c, b-d, d-e, c-e, a-e; ids follow label order.
pub fn mcs_trace() -> Graph {
    Graph::load_edge_list_str(MCS_TRACE).expect("bundled fixture parses")
}

/// 1000 vertices, 1049 edges: a sparse random core of 100 vertices with
/// random trees attached.
pub fn sparse_1k() -> Graph {
    Graph::load_edge_list_str(SPARSE_1K).expect("bundled fixture parses")
}

/// 5000 vertices, 5248 edges, built like [`sparse_1k`] around a core of 500.
pub fn sparse_5k() -> Graph {
    Graph::load_edge_list_str(SPARSE_5K).expect("bundled fixture parses")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Path 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}
