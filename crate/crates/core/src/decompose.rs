//! Atom decomposition by repeated convex hulls.
//!
//! Given an MCS ordering, the hull of the closed neighborhood of the
//! lowest-numbered vertex is an atom. The recursive algorithm (`rda`)
//! records it, shrinks the vertex set to `N[V - H]`, and repeats on the
//! remaining graph with the ordering restricted, skipping hulls contained in
//! an atom already found. The parallel variant (`prda`) recurses
//! independently on `N[M]` for every component `M` of `G - H`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use crate::baseline;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::hull::{HullEngine, Masked, Whole};
use crate::mcs::{mcs_ordering, Ordering, TieBreak};
use crate::scratch::Marks;

/// Decomposition algorithm selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Rda,
    Prda,
    Baseline,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Rda, Algorithm::Prda, Algorithm::Baseline];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Rda => "rda",
            Algorithm::Prda => "prda",
            Algorithm::Baseline => "baseline",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rda" => Ok(Algorithm::Rda),
            "prda" => Ok(Algorithm::Prda),
            "baseline" => Ok(Algorithm::Baseline),
            _ => Err(format!(
                "unknown algorithm `{s}` (expected rda, prda or baseline)"
            )),
        }
    }
}

/// Cooperative cancellation flag polled by the long-running loops.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, AtomicOrdering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(AtomicOrdering::Relaxed)
    }

    pub(crate) fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

/// Atoms in canonical order (by size, then lexicographically) with a
/// vertex -> atom membership index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomSet {
    atoms: Vec<VertexSet>,
    membership: Vec<Vec<usize>>,
}

impl AtomSet {
    /// Canonicalizes `atoms` over a graph with `n` vertices. Exact duplicates
    /// are dropped; no other filtering happens.
    pub fn new(n: usize, mut atoms: Vec<VertexSet>) -> AtomSet {
        atoms.sort_by(|a, b| a.canonical_cmp(b));
        atoms.dedup();
        let mut membership = vec![Vec::new(); n];
        for (i, atom) in atoms.iter().enumerate() {
            for v in atom {
                membership[v].push(i);
            }
        }
        AtomSet { atoms, membership }
    }

    pub fn atoms(&self) -> &[VertexSet] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.atoms.iter()
    }

    /// Indices of the atoms containing `v`.
    pub fn containing(&self, v: VertexId) -> &[usize] {
        &self.membership[v]
    }

    pub fn into_vec(self) -> Vec<VertexSet> {
        self.atoms
    }
}

/// Result of a decomposition run.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub atoms: AtomSet,
    pub separators: Option<Vec<VertexSet>>,
    pub algorithm: Algorithm,
    pub tie_break: TieBreak,
    pub wall_time: Duration,
}

/// Knobs for [`decompose_graph`].
#[derive(Clone, Debug)]
pub struct DecomposeOptions {
    pub separators: bool,
    /// Components of `G - H` with fewer vertices than this are handled
    /// sequentially by `prda`.
    pub parallel_cutoff: usize,
    pub cancel: CancelToken,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            separators: true,
            parallel_cutoff: 256,
            cancel: CancelToken::new(),
        }
    }
}

/// Accumulates atoms under the containment filter: a candidate contained in
/// (or equal to) a stored atom is skipped.
pub(crate) struct AtomCollector {
    atoms: Vec<VertexSet>,
    index: Vec<Vec<u32>>,
}

impl AtomCollector {
    pub fn new(n: usize) -> Self {
        AtomCollector {
            atoms: Vec::new(),
            index: vec![Vec::new(); n],
        }
    }

    pub fn insert(&mut self, candidate: VertexSet) -> bool {
        // only atoms sharing the least-covered vertex can contain the candidate
        let Some(pivot) = candidate.iter().min_by_key(|&v| self.index[v].len()) else {
            return false;
        };
        if self.index[pivot]
            .iter()
            .any(|&i| candidate.is_subset(&self.atoms[i as usize]))
        {
            return false;
        }
        let id = self.atoms.len() as u32;
        for v in &candidate {
            self.index[v].push(id);
        }
        self.atoms.push(candidate);
        true
    }

    pub fn into_atoms(self) -> Vec<VertexSet> {
        self.atoms
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let comps = g.components().len();
    if comps > 1 {
        return Err(Error::Disconnected { components: comps });
    }
    Ok(())
}

fn check_ordering(g: &Graph, ordering: &Ordering) -> Result<()> {
    if ordering.len() != g.n() {
        return Err(Error::InvalidOrdering(format!(
            "ordering covers {} vertices, graph has {}",
            ordering.len(),
            g.n()
        )));
    }
    Ok(())
}

/// Runs the recursive decomposition on a connected graph.
pub fn rda(g: &Graph, ordering: &Ordering) -> Result<Decomposition> {
    require_connected(g)?;
    check_ordering(g, ordering)?;
    let start = Instant::now();
    let atoms = rda_atoms(g, ordering.positions(), &CancelToken::new())?;
    Ok(Decomposition {
        atoms: AtomSet::new(g.n(), atoms),
        separators: None,
        algorithm: Algorithm::Rda,
        tie_break: TieBreak::default(),
        wall_time: start.elapsed(),
    })
}

/// Core loop of `rda`. `rank` holds distinct priorities; the vertex with the
/// smallest rank among the remaining ones is processed next.
pub(crate) fn rda_atoms(g: &Graph, rank: &[usize], cancel: &CancelToken) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let mut sequence: Vec<VertexId> = g.vertices().collect();
    sequence.sort_unstable_by_key(|&v| rank[v]);

    let mut alive = vec![true; n];
    let mut engine = HullEngine::new(n);
    let mut in_hull = Marks::new(n);
    let mut collector = AtomCollector::new(n);
    let mut next = 0;
    let mut seeds = Vec::new();
    loop {
        while next < n && !alive[sequence[next]] {
            next += 1;
        }
        if next == n {
            break;
        }
        cancel.check()?;
        let v = sequence[next];
        seeds.clear();
        seeds.push(v);
        seeds.extend(g.neighbors(v).iter().copied().filter(|&w| alive[w]));
        let hull = engine.hull(
            &Masked {
                graph: g,
                alive: &alive,
            },
            &seeds,
            None,
        );

        // V <- N[V - H]: drop hull vertices with no live neighbor outside H
        in_hull.clear();
        for &h in &hull {
            in_hull.set(h);
        }
        let interior: Vec<VertexId> = hull
            .iter()
            .copied()
            .filter(|&h| g.neighbors(h).iter().all(|&w| !alive[w] || in_hull.get(w)))
            .collect();
        for h in interior {
            alive[h] = false;
        }
        collector.insert(VertexSet::from_sorted_unchecked(hull));
    }
    Ok(collector.into_atoms())
}

/// Runs the parallel recursive decomposition on a connected graph.
pub fn prda(g: &Graph, ordering: &Ordering) -> Result<Decomposition> {
    prda_with_cutoff(g, ordering, DecomposeOptions::default().parallel_cutoff)
}

/// `prda` with an explicit sequential cutoff; `0` spawns on every branch.
pub fn prda_with_cutoff(g: &Graph, ordering: &Ordering, cutoff: usize) -> Result<Decomposition> {
    require_connected(g)?;
    check_ordering(g, ordering)?;
    let start = Instant::now();
    let atoms = prda_atoms(g, ordering.positions(), cutoff, &CancelToken::new())?;
    Ok(Decomposition {
        atoms: AtomSet::new(g.n(), atoms),
        separators: None,
        algorithm: Algorithm::Prda,
        tie_break: TieBreak::default(),
        wall_time: start.elapsed(),
    })
}

pub(crate) fn prda_atoms(
    g: &Graph,
    rank: &[usize],
    cutoff: usize,
    cancel: &CancelToken,
) -> Result<Vec<VertexSet>> {
    let identity: Vec<VertexId> = g.vertices().collect();
    let mut found = prda_task(g, &identity, rank, cutoff, cancel)?;
    // children never see each other, so filter once over everything
    found.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut collector = AtomCollector::new(g.n());
    for atom in found {
        collector.insert(atom);
    }
    Ok(collector.into_atoms())
}

/// One PRDA task over the region `g`, whose vertex `x` is `to_parent[x]` in
/// the input graph. Of the components of `G - H`, the one left unexplored by
/// the split is followed in place; every other one becomes a child, run
/// sequentially below `cutoff` vertices and spawned otherwise.
fn prda_task(
    g: &Graph,
    to_parent: &[VertexId],
    rank: &[usize],
    cutoff: usize,
    cancel: &CancelToken,
) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let lift = |map: &[VertexId], set: &[VertexId]| {
        VertexSet::from_unsorted(set.iter().map(|&x| map[x]).collect())
    };
    let mut sequence: Vec<VertexId> = g.vertices().collect();
    sequence.sort_unstable_by_key(|&v| rank[v]);

    let forked = Mutex::new(Vec::new());
    let failure = Mutex::new(None);
    let own = rayon::scope(|scope| -> Result<Vec<VertexSet>> {
        let mut alive = vec![true; n];
        let mut engine = HullEngine::new(n);
        let mut keep = Marks::new(n);
        let mut out = Vec::new();
        let mut next = 0;
        let mut seeds = Vec::new();
        loop {
            while next < n && !alive[sequence[next]] {
                next += 1;
            }
            if next == n {
                break;
            }
            cancel.check()?;
            let v = sequence[next];
            seeds.clear();
            seeds.push(v);
            seeds.extend(g.neighbors(v).iter().copied().filter(|&w| alive[w]));
            let view = Masked {
                graph: g,
                alive: &alive,
            };
            let hull = engine.hull(&view, &seeds, None);
            out.push(lift(to_parent, &hull));
            let pieces = engine.split_off(&view, &hull);

            for (members, boundary) in pieces.explored {
                for &x in &members {
                    alive[x] = false;
                }
                let mut closed = members;
                closed.extend(boundary);
                closed.sort_unstable();
                let child = g.induced_bare(&closed);
                let child_rank: Vec<usize> = child.to_parent.iter().map(|&x| rank[x]).collect();
                let child_map: Vec<VertexId> =
                    child.to_parent.iter().map(|&x| to_parent[x]).collect();
                if closed.len() < cutoff {
                    for atom in rda_atoms(&child.graph, &child_rank, cancel)? {
                        out.push(lift(&child_map, atom.as_slice()));
                    }
                } else {
                    let (forked, failure) = (&forked, &failure);
                    scope.spawn(move |_| {
                        match prda_task(&child.graph, &child_map, &child_rank, cutoff, cancel) {
                            Ok(atoms) => forked.lock().unwrap().extend(atoms),
                            Err(e) => {
                                failure.lock().unwrap().get_or_insert(e);
                            }
                        }
                    });
                }
            }

            // continue on N[M] for the unexplored component M
            let Some(rest) = pieces.rest else {
                break;
            };
            keep.clear();
            for &x in &rest {
                keep.set(x);
            }
            for &h in &hull {
                if !keep.get(h) {
                    alive[h] = false;
                }
            }
        }
        Ok(out)
    });
    if let Some(e) = failure.into_inner().unwrap() {
        return Err(e);
    }
    let mut out = own?;
    out.extend(forked.into_inner().unwrap());
    Ok(out)
}

/// The clique minimal separators `N(M)` over all atoms `H` and components
/// `M` of `G - H`, deduplicated and in canonical order.
pub fn clique_minimal_separators(g: &Graph, atoms: &AtomSet) -> Vec<VertexSet> {
    let mut engine = HullEngine::new(g.n());
    let mut seen = HashSet::new();
    for atom in atoms.iter() {
        for boundary in engine.component_boundaries(&Whole(g), atom.as_slice()) {
            seen.insert(VertexSet::from_sorted_unchecked(boundary));
        }
    }
    let mut seps: Vec<VertexSet> = seen.into_iter().collect();
    seps.sort_by(|a, b| a.canonical_cmp(b));
    seps
}

/// Decomposes any nonempty graph: each connected component gets its own MCS
/// ordering and is decomposed independently; isolated vertices become
/// singleton atoms.
pub fn decompose_graph(
    g: &Graph,
    algorithm: Algorithm,
    tie_break: TieBreak,
    options: &DecomposeOptions,
) -> Result<Decomposition> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let start = Instant::now();
    let mut atoms = Vec::new();
    for comp in g.components() {
        if comp.len() == 1 {
            atoms.push(comp);
            continue;
        }
        let part = g.induced_bare(comp.as_slice());
        let found = match algorithm {
            Algorithm::Baseline => baseline::leimer_atoms(&part.graph, &options.cancel)?,
            Algorithm::Rda | Algorithm::Prda => {
                let ordering = mcs_ordering(&part.graph, tie_break)?;
                if algorithm == Algorithm::Rda {
                    rda_atoms(&part.graph, ordering.positions(), &options.cancel)?
                } else {
                    prda_atoms(
                        &part.graph,
                        ordering.positions(),
                        options.parallel_cutoff,
                        &options.cancel,
                    )?
                }
            }
        };
        atoms.extend(found.iter().map(|a| part.lift(a)));
    }
    let atoms = AtomSet::new(g.n(), atoms);
    let separators = options
        .separators
        .then(|| clique_minimal_separators(g, &atoms));
    Ok(Decomposition {
        atoms,
        separators,
        algorithm,
        tie_break,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sets(g: &Graph, groups: &[&[&str]]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = groups
            .iter()
            .map(|l| g.set_from_labels(l).unwrap())
            .collect();
        v.sort_by(|a, b| a.canonical_cmp(b));
        v
    }

    #[test]
    fn worked_example_atoms() {
        let g = fixtures::worked_example();
        let ord = Ordering::from_labels(&g, &["x", "d", "b", "s", "r", "l", "t", "a"]).unwrap();
        let want = sets(
            &g,
            &[
                &["x", "r"],
                &["d", "r", "b"],
                &["b", "r", "s", "l"],
                &["r", "t", "l"],
                &["a", "t"],
            ],
        );
        assert_eq!(rda(&g, &ord).unwrap().atoms.atoms(), &want[..]);
        assert_eq!(
            prda_with_cutoff(&g, &ord, 0).unwrap().atoms.atoms(),
            &want[..]
        );
    }

    #[test]
    fn rda_discovery_order_matches_iterations() {
        let g = fixtures::worked_example();
        let ord = Ordering::from_labels(&g, &["x", "d", "b", "s", "r", "l", "t", "a"]).unwrap();
        let found = rda_atoms(&g, ord.positions(), &CancelToken::new()).unwrap();
        let labels: Vec<Vec<String>> = found.iter().map(|a| g.labels_of(a)).collect();
        let want: Vec<Vec<String>> = [
            &["x", "r"][..],
            &["d", "r", "b"],
            &["b", "r", "s", "l"],
            &["r", "t", "l"],
            &["a", "t"],
        ]
        .iter()
        .map(|l| {
            let s = g.set_from_labels(l).unwrap();
            g.labels_of(&s)
        })
        .collect();
        assert_eq!(labels, want);
    }

    #[test]
    fn two_branch_atoms() {
        let g = fixtures::two_branches();
        let ord = Ordering::from_labels(&g, &["e", "f", "d", "c", "b", "a"]).unwrap();
        let want = sets(&g, &[&["b", "c", "e", "f"], &["a", "b"], &["c", "d"]]);
        assert_eq!(rda(&g, &ord).unwrap().atoms.atoms(), &want[..]);
        assert_eq!(
            prda_with_cutoff(&g, &ord, 0).unwrap().atoms.atoms(),
            &want[..]
        );
        assert_eq!(prda(&g, &ord).unwrap().atoms.atoms(), &want[..]);
    }

    #[test]
    fn complete_graph_is_one_atom() {
        let g = fixtures::complete(4);
        let ord = mcs_ordering(&g, TieBreak::LowestId).unwrap();
        let d = rda(&g, &ord).unwrap();
        assert_eq!(d.atoms.atoms(), &[g.all_vertices()]);
        assert!(clique_minimal_separators(&g, &d.atoms).is_empty());
    }

    #[test]
    fn star_atoms_are_edges() {
        let g = fixtures::star(3);
        let ord = mcs_ordering(&g, TieBreak::LowestId).unwrap();
        let want: Vec<VertexSet> = (1..=3)
            .map(|l| VertexSet::from_unsorted(vec![0, l]))
            .collect();
        assert_eq!(
            prda_with_cutoff(&g, &ord, 0).unwrap().atoms.atoms(),
            &want[..]
        );
        assert_eq!(rda(&g, &ord).unwrap().atoms.atoms(), &want[..]);
    }

    #[test]
    fn separators() {
        let g = fixtures::worked_example();
        let d =
            decompose_graph(&g, Algorithm::Rda, TieBreak::LowestId, &Default::default()).unwrap();
        let want = sets(&g, &[&["r"], &["t"], &["r", "b"], &["r", "l"]]);
        assert_eq!(d.separators.unwrap(), want);

        let p = fixtures::path(3);
        let d =
            decompose_graph(&p, Algorithm::Rda, TieBreak::LowestId, &Default::default()).unwrap();
        assert_eq!(d.separators.unwrap(), vec![VertexSet::singleton(1)]);
    }

    #[test]
    fn entry_point_handles_components() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        for alg in Algorithm::ALL {
            let d = decompose_graph(&g, alg, TieBreak::LowestId, &Default::default()).unwrap();
            assert_eq!(d.atoms.len(), 2, "{alg}");
            assert_eq!(d.separators.as_deref(), Some(&[][..]));
        }
        let single = Graph::from_edges(1, &[]).unwrap();
        let d = decompose_graph(
            &single,
            Algorithm::Rda,
            TieBreak::LowestId,
            &Default::default(),
        )
        .unwrap();
        assert_eq!(d.atoms.atoms(), &[VertexSet::singleton(0)]);
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert!(matches!(
            decompose_graph(
                &empty,
                Algorithm::Rda,
                TieBreak::LowestId,
                &Default::default()
            ),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn rda_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let ord = Ordering::from_sequence(4, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(
            rda(&g, &ord),
            Err(Error::Disconnected { components: 2 })
        ));
        assert!(matches!(prda(&g, &ord), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn cancellation() {
        let g = fixtures::path(50);
        let opts = DecomposeOptions::default();
        opts.cancel.cancel();
        for alg in Algorithm::ALL {
            assert!(matches!(
                decompose_graph(&g, alg, TieBreak::LowestId, &opts),
                Err(Error::Cancelled)
            ));
        }
    }

    #[test]
    fn collector_filters_subsets_and_duplicates() {
        let mut c = AtomCollector::new(5);
        assert!(c.insert(VertexSet::from_unsorted(vec![0, 1, 2])));
        assert!(!c.insert(VertexSet::from_unsorted(vec![1, 2])));
        assert!(!c.insert(VertexSet::from_unsorted(vec![0, 1, 2])));
        assert!(c.insert(VertexSet::from_unsorted(vec![2, 3])));
        assert_eq!(c.into_atoms().len(), 2);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for alg in Algorithm::ALL {
            assert_eq!(alg.name().parse::<Algorithm>().unwrap(), alg);
        }
        assert!("fast".parse::<Algorithm>().is_err());
    }
}
