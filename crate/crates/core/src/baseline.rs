//! Triangulation-based atom decomposition used as a comparator.
//!
//! MCS-M computes a minimal elimination ordering together with the fill of
//! the corresponding minimal triangulation `H`. Vertices whose selection
//! weight does not exceed the previous one generate the minimal separators
//! of `H`: their higher-numbered neighborhood in `H`. Scanning vertices in
//! increasing number, each such separator that is a clique in the original
//! graph cuts off one atom.

use std::cmp::Reverse;
use std::time::Instant;

use crate::decompose::{Algorithm, AtomSet, CancelToken, Decomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::mcs::{self, Ordering, TieBreak};

/// A minimal triangulation: an elimination ordering and the fill it induces.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub ordering: Ordering,
    /// Added edges `(u, v)` with `u < v`, sorted.
    pub fill_edges: Vec<(VertexId, VertexId)>,
    /// Vertices whose higher neighborhood in the filled graph is a minimal
    /// separator of it.
    pub generators: Vec<VertexId>,
}

impl Triangulation {
    /// Original edges plus fill.
    pub fn filled_graph(&self, g: &Graph) -> Graph {
        let mut edges: Vec<_> = g.edges().collect();
        edges.extend_from_slice(&self.fill_edges);
        Graph::from_edges(g.n(), &edges).expect("fill endpoints are in range")
    }
}

/// MCS-M with lowest-id tie-breaking.
pub fn mcs_m(g: &Graph) -> Result<Triangulation> {
    mcs_m_impl(g, &CancelToken::new())
}

fn mcs_m_impl(g: &Graph, cancel: &CancelToken) -> Result<Triangulation> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut sequence = vec![0; n];
    let mut fill = Vec::new();
    let mut generators = Vec::new();
    // minimax interior weight over paths from the chosen vertex; usize::MAX = unreached,
    // 0 = direct neighbor, k + 1 = best path has largest interior weight k
    let mut reach = vec![usize::MAX; n];
    let mut buckets: Vec<Vec<VertexId>> = vec![Vec::new(); n + 2];
    let mut touched = Vec::new();
    let mut previous: Option<usize> = None;

    for i in (1..=n).rev() {
        cancel.check()?;
        let x = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], Reverse(v)))
            .expect("an unnumbered vertex remains");
        if previous.is_some_and(|p| weight[x] <= p) {
            generators.push(x);
        }
        previous = Some(weight[x]);
        numbered[x] = true;
        sequence[i - 1] = x;

        touched.clear();
        for &y in g.neighbors(x) {
            if !numbered[y] {
                reach[y] = 0;
                buckets[0].push(y);
                touched.push(y);
            }
        }
        for key in 0..buckets.len() {
            while let Some(y) = buckets[key].pop() {
                if reach[y] != key {
                    continue;
                }
                let through = key.max(weight[y] + 1);
                for &z in g.neighbors(y) {
                    if numbered[z] || through >= reach[z] {
                        continue;
                    }
                    if reach[z] == usize::MAX {
                        touched.push(z);
                    }
                    reach[z] = through;
                    buckets[through].push(z);
                }
            }
        }
        for &y in &touched {
            // reachable through strictly lighter interior vertices
            if reach[y] == 0 || reach[y] - 1 < weight[y] {
                if !g.has_edge(x, y) {
                    fill.push((x.min(y), x.max(y)));
                }
                weight[y] += 1;
            }
        }
        for &y in &touched {
            reach[y] = usize::MAX;
        }
    }
    fill.sort_unstable();
    Ok(Triangulation {
        ordering: Ordering::from_sequence(n, sequence)?,
        fill_edges: fill,
        generators,
    })
}

/// True iff eliminating vertices by increasing number never needs fill.
pub fn is_perfect_elimination_ordering(g: &Graph, ordering: &Ordering) -> bool {
    g.vertices().all(|v| {
        let later: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| ordering.alpha(w) > ordering.alpha(v))
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| ordering.alpha(w)) else {
            return true;
        };
        later.iter().all(|&w| w == parent || g.has_edge(parent, w))
    })
}

/// Chordality test via an MCS ordering.
pub fn is_chordal(g: &Graph) -> bool {
    if g.is_empty() {
        return true;
    }
    let ordering = mcs::mcs_ordering(g, TieBreak::LowestId).expect("graph is nonempty");
    is_perfect_elimination_ordering(g, &ordering)
}

/// Atoms of a connected graph via MCS-M and clique separator extraction.
pub fn leimer_decompose(g: &Graph) -> Result<Decomposition> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let comps = g.components().len();
    if comps > 1 {
        return Err(Error::Disconnected { components: comps });
    }
    let start = Instant::now();
    let atoms = leimer_atoms(g, &CancelToken::new())?;
    Ok(Decomposition {
        atoms: AtomSet::new(g.n(), atoms),
        separators: None,
        algorithm: Algorithm::Baseline,
        tie_break: TieBreak::LowestId,
        wall_time: start.elapsed(),
    })
}

pub(crate) fn leimer_atoms(g: &Graph, cancel: &CancelToken) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let tri = mcs_m_impl(g, cancel)?;
    let ord = &tri.ordering;
    let filled = tri.filled_graph(g);
    let mut is_generator = vec![false; n];
    for &x in &tri.generators {
        is_generator[x] = true;
    }

    let mut alive = vec![true; n];
    let mut atoms = Vec::new();
    let mut in_sep = vec![false; n];
    let mut seen = vec![false; n];
    for i in 1..=n {
        cancel.check()?;
        let x = ord.vertex_at(i);
        if !is_generator[x] || !alive[x] {
            continue;
        }
        let sep: VertexSet = filled
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&w| ord.alpha(w) > i)
            .collect();
        // completeness is judged in the original graph, not the filled one
        if !g.is_complete(&sep) {
            continue;
        }
        for v in &sep {
            in_sep[v] = true;
        }
        let mut comp = vec![x];
        seen[x] = true;
        let mut head = 0;
        while head < comp.len() {
            let y = comp[head];
            head += 1;
            for &z in g.neighbors(y) {
                if alive[z] && !in_sep[z] && !seen[z] {
                    seen[z] = true;
                    comp.push(z);
                }
            }
        }
        for v in &sep {
            in_sep[v] = false;
        }
        for &v in &comp {
            seen[v] = false;
            alive[v] = false;
        }
        comp.extend(sep.iter());
        atoms.push(VertexSet::from_unsorted(comp));
    }
    let rest: Vec<VertexId> = g.vertices().filter(|&v| alive[v]).collect();
    if !rest.is_empty() {
        atoms.push(VertexSet::from_sorted_unchecked(rest));
    }
    Ok(atoms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chordal_graphs_need_no_fill() {
        for g in [fixtures::path(6), fixtures::complete(5), fixtures::star(4)] {
            assert!(is_chordal(&g));
            assert!(mcs_m(&g).unwrap().fill_edges.is_empty());
        }
    }

    #[test]
    fn four_cycle_gets_one_chord() {
        let g = fixtures::cycle(4);
        assert!(!is_chordal(&g));
        let tri = mcs_m(&g).unwrap();
        assert_eq!(tri.fill_edges.len(), 1);
        let h = tri.filled_graph(&g);
        assert!(is_chordal(&h));
        assert!(is_perfect_elimination_ordering(&h, &tri.ordering));
    }

    #[test]
    fn fill_is_minimal_on_two_branches() {
        let g = fixtures::two_branches();
        let tri = mcs_m(&g).unwrap();
        let h = tri.filled_graph(&g);
        assert!(is_chordal(&h));
        for skip in 0..tri.fill_edges.len() {
            let mut edges: Vec<_> = g.edges().collect();
            edges.extend(
                tri.fill_edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &e)| e),
            );
            assert!(!is_chordal(&Graph::from_edges(g.n(), &edges).unwrap()));
        }
    }

    #[test]
    fn worked_example_atoms_match() {
        let g = fixtures::worked_example();
        let d = leimer_decompose(&g).unwrap();
        let mut want: Vec<VertexSet> = [
            &["x", "r"][..],
            &["d", "r", "b"],
            &["b", "r", "s", "l"],
            &["r", "t", "l"],
            &["a", "t"],
        ]
        .iter()
        .map(|l| g.set_from_labels(l).unwrap())
        .collect();
        want.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(d.atoms.atoms(), &want[..]);
    }

    #[test]
    fn complete_graph_single_atom() {
        let g = fixtures::complete(5);
        assert_eq!(
            leimer_decompose(&g).unwrap().atoms.atoms(),
            &[g.all_vertices()]
        );
    }

    #[test]
    fn non_chordal_detected() {
        assert!(!is_chordal(&fixtures::cycle(5)));
        assert!(!is_chordal(&fixtures::two_branches()));
    }
}
