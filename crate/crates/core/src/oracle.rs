//! Exhaustive reference implementations for small graphs.
//!
//! Everything here enumerates vertex subsets as bitmasks, so inputs are
//! capped by an [`OracleBudget`]. These functions exist to check the fast
//! algorithms, not to be used on real data.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Size limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_subsets: u64,
}

impl OracleBudget {
    pub const ATOMS: OracleBudget = OracleBudget {
        max_vertices: 12,
        max_subsets: 1 << 12,
    };
    pub const HULLS: OracleBudget = OracleBudget {
        max_vertices: 11,
        max_subsets: 1 << 11,
    };

    fn admit(&self, n: usize) -> Result<()> {
        if n > self.max_vertices || n >= 64 || (1u64 << n) > self.max_subsets {
            return Err(Error::OverBudget {
                n,
                limit: self.max_vertices,
            });
        }
        Ok(())
    }
}

type Mask = u64;

/// Bitmask adjacency of a small graph.
struct Bits {
    n: usize,
    adj: Vec<Mask>,
}

impl Bits {
    fn new(g: &Graph) -> Bits {
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
            .collect();
        Bits { n: g.n(), adj }
    }

    fn full(&self) -> Mask {
        if self.n == 64 {
            !0
        } else {
            (1 << self.n) - 1
        }
    }

    fn neighborhood(&self, set: Mask) -> Mask {
        members(set).fold(0, |m, v| m | self.adj[v]) & !set
    }

    fn is_complete(&self, set: Mask) -> bool {
        members(set).all(|v| set & !(1 << v) & !self.adj[v] == 0)
    }

    /// Components of the subgraph induced on `within`.
    fn components(&self, within: Mask) -> Vec<Mask> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp: Mask = left & left.wrapping_neg();
            loop {
                let grown = (comp | self.neighborhood(comp)) & within;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    fn is_convex(&self, set: Mask) -> bool {
        self.components(self.full() & !set)
            .into_iter()
            .all(|c| self.is_complete(self.neighborhood(c)))
    }

    /// Complete `S` within `within` leaving at least two full components.
    fn is_clique_min_sep(&self, within: Mask, sep: Mask) -> bool {
        if !self.is_complete(sep) {
            return false;
        }
        let full = self
            .components(within & !sep)
            .into_iter()
            .filter(|&c| self.neighborhood(c) & within == sep)
            .count();
        full >= 2
    }

    fn clique_min_seps(&self, within: Mask) -> Vec<Mask> {
        subsets(within)
            .filter(|&s| self.is_clique_min_sep(within, s))
            .collect()
    }
}

fn members(mask: Mask) -> impl Iterator<Item = VertexId> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

/// All submasks of `mask`, in increasing numeric order.
fn subsets(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

fn to_mask(set: &VertexSet) -> Mask {
    set.iter().fold(0, |m, v| m | (1 << v))
}

fn to_set(mask: Mask) -> VertexSet {
    VertexSet::from_unsorted(members(mask).collect())
}

fn canonical(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| a.canonical_cmp(b));
    sets.dedup();
    sets
}

/// All clique minimal separators of `g`.
pub fn brute_clique_min_seps(g: &Graph) -> Result<Vec<VertexSet>> {
    brute_clique_min_seps_within(g, OracleBudget::ATOMS)
}

pub fn brute_clique_min_seps_within(g: &Graph, budget: OracleBudget) -> Result<Vec<VertexSet>> {
    budget.admit(g.n())?;
    let bits = Bits::new(g);
    Ok(canonical(
        bits.clique_min_seps(bits.full())
            .into_iter()
            .map(to_set)
            .collect(),
    ))
}

/// Atoms of a connected graph by recursive splitting on clique minimal
/// separators. The first separator in enumeration order is used.
pub fn brute_atoms(g: &Graph) -> Result<Vec<VertexSet>> {
    brute_atoms_choosing(g, |_| 0)
}

/// Like [`brute_atoms`], but `choose` picks which of the separators found
/// at each step (given in enumeration order) to split on.
pub fn brute_atoms_choosing(
    g: &Graph,
    mut choose: impl FnMut(usize) -> usize,
) -> Result<Vec<VertexSet>> {
    OracleBudget::ATOMS.admit(g.n())?;
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let comps = g.components().len();
    if comps > 1 {
        return Err(Error::Disconnected { components: comps });
    }
    let bits = Bits::new(g);
    let mut found = Vec::new();
    let mut stack = vec![bits.full()];
    while let Some(part) = stack.pop() {
        let seps = bits.clique_min_seps(part);
        if seps.is_empty() {
            found.push(part);
            continue;
        }
        let sep = seps[choose(seps.len()) % seps.len()];
        for comp in bits.components(part & !sep) {
            stack.push(comp | (bits.neighborhood(comp) & part));
        }
    }
    // a piece may be a strict subset of another piece's atom; keep maximal ones
    let maximal: Vec<Mask> = found
        .iter()
        .copied()
        .filter(|&a| !found.iter().any(|&b| b != a && a & b == a))
        .collect();
    Ok(canonical(maximal.into_iter().map(to_set).collect()))
}

/// Atoms straight from the definition: maximal connected vertex sets whose
/// induced subgraph has no clique minimal separator. Exponential in a worse
/// way than [`brute_atoms`]; meant for graphs of up to about 9 vertices.
pub fn atoms_by_definition(g: &Graph) -> Result<Vec<VertexSet>> {
    OracleBudget {
        max_vertices: 10,
        max_subsets: 1 << 10,
    }
    .admit(g.n())?;
    let bits = Bits::new(g);
    let prime: Vec<Mask> = subsets(bits.full())
        .filter(|&s| s != 0 && bits.components(s).len() == 1 && bits.clique_min_seps(s).is_empty())
        .collect();
    let maximal = prime
        .iter()
        .copied()
        .filter(|&a| !prime.iter().any(|&b| b != a && a & b == a));
    Ok(canonical(maximal.map(to_set).collect()))
}

/// The unique minimal convex superset of `seeds`.
///
/// Panics if two different convex sets of the minimal size contain `seeds`:
/// that would contradict hull uniqueness.
pub fn brute_hull(g: &Graph, seeds: &VertexSet) -> Result<VertexSet> {
    OracleBudget::HULLS.admit(g.n())?;
    g.check_set(seeds)?;
    let bits = Bits::new(g);
    let base = to_mask(seeds);
    let free = bits.full() & !base;
    let mut extras: Vec<Mask> = subsets(free).collect();
    extras.sort_by_key(|m| m.count_ones());
    let mut best: Option<Mask> = None;
    for extra in extras {
        if let Some(b) = best {
            if extra.count_ones() > (b & free).count_ones() {
                break;
            }
        }
        let cand = base | extra;
        if bits.is_convex(cand) {
            if let Some(b) = best {
                panic!(
                    "two minimal convex supersets of {seeds:?}: {:?} and {:?}",
                    to_set(b),
                    to_set(cand)
                );
            }
            best = Some(cand);
        }
    }
    Ok(to_set(best.expect("the full vertex set is convex")))
}

/// Convexity straight from the path definition: no two non-adjacent
/// members joined by a path with all interior vertices outside the set.
pub fn is_convex_by_paths(g: &Graph, set: &VertexSet) -> bool {
    fn reaches(
        g: &Graph,
        set: &VertexSet,
        at: VertexId,
        target: VertexId,
        on_path: &mut [bool],
    ) -> bool {
        for &w in g.neighbors(at) {
            if w == target {
                return true;
            }
            if on_path[w] || set.contains(w) {
                continue;
            }
            on_path[w] = true;
            let found = reaches(g, set, w, target, on_path);
            on_path[w] = false;
            if found {
                return true;
            }
        }
        false
    }
    for u in set {
        for v in set {
            if u >= v || g.has_edge(u, v) {
                continue;
            }
            // paths must have at least one interior vertex, which lies outside the set
            let mut on_path = vec![false; g.n()];
            on_path[u] = true;
            for &w in g.neighbors(u) {
                if set.contains(w) {
                    continue;
                }
                on_path[w] = true;
                if reaches(g, set, w, v, &mut on_path) {
                    return false;
                }
                on_path[w] = false;
            }
        }
    }
    true
}
