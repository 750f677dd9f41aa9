//! Convexity and convex hulls.
//!
//! A vertex set `A` is convex when no two non-adjacent members are joined by
//! a path whose interior avoids `A`. Equivalently, every connected component
//! `C` of `G - A` has a complete neighborhood `N(C)`. The convex hull of `R`
//! is the unique inclusion-minimal convex set containing `R`.
//!
//! The hull is computed by absorption. Starting from `A = R`, while some
//! component `C` of `G - A` has two non-adjacent boundary vertices `u, v`,
//! a minimal `u`-`v` separator inside `C` is added to `A`. The separator is
//! chosen next to one endpoint: with `C_v` the component of `v` in
//! `G[C + {u, v}] - N(u)`, the set `N(C_v)` lies in `N(u)`, and every vertex
//! of it lies on a `u`-`v` path whose only other interior vertices sit in
//! `C_v`, which has no neighbor of `u`. Any convex superset of `A` must
//! therefore contain all of `N(C_v)`, so every absorbed vertex belongs to
//! the hull and the fixpoint is the hull itself.
//!
//! Components are tracked with labels. Splitting a component explores the
//! new pieces in lockstep and stops once a single piece is still growing;
//! that piece keeps the old label and is never walked, which keeps hulls of
//! small sets cheap on large graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::scratch::{Labels, Marks};

/// Read access to a graph whose vertex set may be a subset of a host graph.
pub(crate) trait View {
    fn host(&self) -> &Graph;
    fn live(&self, v: VertexId) -> bool;
}

pub(crate) struct Whole<'a>(pub &'a Graph);

impl View for Whole<'_> {
    #[inline]
    fn host(&self) -> &Graph {
        self.0
    }
    #[inline]
    fn live(&self, _: VertexId) -> bool {
        true
    }
}

/// The host graph restricted to vertices flagged alive.
pub(crate) struct Masked<'a> {
    pub graph: &'a Graph,
    pub alive: &'a [bool],
}

impl View for Masked<'_> {
    #[inline]
    fn host(&self) -> &Graph {
        self.graph
    }
    #[inline]
    fn live(&self, v: VertexId) -> bool {
        self.alive[v]
    }
}

const ROOT: u32 = 0;
const NONE: u32 = u32::MAX;

/// A component of `G - A` awaiting a completeness check.
struct Piece {
    label: u32,
    boundary: Vec<VertexId>,
    /// Empty for the piece that was left unexplored.
    members: Vec<VertexId>,
}

/// Components of `G - A` touching `A`, as reported by
/// [`HullEngine::split_off`].
pub(crate) struct Pieces {
    /// Fully explored components with their neighborhoods.
    pub explored: Vec<(Vec<VertexId>, Vec<VertexId>)>,
    /// Neighborhood of the single unexplored component, if any.
    pub rest: Option<Vec<VertexId>>,
}

/// One lockstep search inside a split.
struct Search {
    queue: Vec<VertexId>,
    head: usize,
    members: Vec<VertexId>,
}

/// Reusable scratch state for hull computations on one host graph.
pub(crate) struct HullEngine {
    in_hull: Marks,
    comp: Labels,
    owner: Labels,
    near_u: Marks,
    near_v: Marks,
    seen_u: Marks,
    seen_v: Marks,
    tmp: Marks,
    next_label: u32,
}

impl HullEngine {
    pub fn new(n: usize) -> Self {
        HullEngine {
            in_hull: Marks::new(n),
            comp: Labels::new(n, ROOT),
            owner: Labels::new(n, NONE),
            near_u: Marks::new(n),
            near_v: Marks::new(n),
            seen_u: Marks::new(n),
            seen_v: Marks::new(n),
            tmp: Marks::new(n),
            next_label: ROOT + 1,
        }
    }

    /// Hull of `seeds` in `view`. Returns a sorted vertex list. When `trace`
    /// is given, every absorbed separator is appended to it in order.
    pub fn hull<V: View>(
        &mut self,
        view: &V,
        seeds: &[VertexId],
        mut trace: Option<&mut Vec<VertexSet>>,
    ) -> Vec<VertexId> {
        let g = view.host();
        self.in_hull.clear();
        self.comp.clear();
        self.next_label = ROOT + 1;

        let mut hull = Vec::with_capacity(seeds.len());
        for &s in seeds {
            if self.in_hull.insert(s) {
                hull.push(s);
            }
        }
        if self.is_clique(g, &hull) {
            hull.sort_unstable();
            return hull;
        }

        let mut work = Vec::new();
        let seeds = hull.clone();
        self.split(view, ROOT, &seeds, &[], &mut work);
        while let Some(piece) = work.pop() {
            let Some((u, v)) = self.non_adjacent_pair(g, &piece.boundary) else {
                continue;
            };
            let sep = self.forced_separator(view, piece.label, u, v);
            for &s in &sep {
                self.in_hull.set(s);
                hull.push(s);
            }
            if let Some(t) = trace.as_deref_mut() {
                t.push(VertexSet::from_unsorted(sep.clone()));
            }
            self.split(view, piece.label, &sep, &piece.boundary, &mut work);
        }
        hull.sort_unstable();
        hull
    }

    /// Components `M` of `G - set` that touch `set`, with their
    /// neighborhoods `N(M)`. All but possibly one are walked; the remaining
    /// one is reported by its neighborhood only.
    pub fn split_off<V: View>(&mut self, view: &V, set: &[VertexId]) -> Pieces {
        self.in_hull.clear();
        self.comp.clear();
        self.next_label = ROOT + 1;
        for &s in set {
            self.in_hull.set(s);
        }
        let mut work = Vec::new();
        self.split(view, ROOT, set, &[], &mut work);
        let mut pieces = Pieces {
            explored: Vec::new(),
            rest: None,
        };
        for p in work {
            if p.label == ROOT {
                pieces.rest = Some(p.boundary).filter(|b| !b.is_empty());
            } else {
                pieces.explored.push((p.members, p.boundary));
            }
        }
        pieces
    }

    /// Neighborhoods `N(M)` of the components `M` of `G - set` that touch
    /// `set`. Only the small components are walked.
    pub fn component_boundaries<V: View>(
        &mut self,
        view: &V,
        set: &[VertexId],
    ) -> Vec<Vec<VertexId>> {
        let pieces = self.split_off(view, set);
        pieces
            .explored
            .into_iter()
            .map(|(_, b)| b)
            .chain(pieces.rest)
            .filter(|b| !b.is_empty())
            .collect()
    }

    fn is_clique(&mut self, g: &Graph, set: &[VertexId]) -> bool {
        let k = set.len();
        if k <= 1 {
            return true;
        }
        if set.iter().any(|&v| g.degree(v) + 1 < k) {
            return false;
        }
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    /// Lexicographically smallest non-adjacent pair of a sorted boundary.
    fn non_adjacent_pair(
        &mut self,
        g: &Graph,
        boundary: &[VertexId],
    ) -> Option<(VertexId, VertexId)> {
        for (i, &u) in boundary.iter().enumerate() {
            if i + 1 == boundary.len() {
                break;
            }
            self.tmp.clear();
            for &w in g.neighbors(u) {
                self.tmp.set(w);
            }
            if let Some(&v) = boundary[i + 1..].iter().find(|&&v| !self.tmp.get(v)) {
                return Some((u, v));
            }
        }
        None
    }

    #[inline]
    fn in_comp<V: View>(&self, view: &V, y: VertexId, label: u32) -> bool {
        view.live(y) && !self.in_hull.get(y) && self.comp.get(y) == label
    }

    /// Splits component `label` after `removed` (a subset of it, or the seed
    /// set for the root) joined the hull, pushing the resulting pieces.
    fn split<V: View>(
        &mut self,
        view: &V,
        label: u32,
        removed: &[VertexId],
        old_boundary: &[VertexId],
        work: &mut Vec<Piece>,
    ) {
        let g = view.host();
        self.owner.clear();
        let mut searches: Vec<Search> = Vec::new();
        for &s in removed {
            for &w in g.neighbors(s) {
                if self.in_comp(view, w, label) && self.owner.get(w) == NONE {
                    self.owner.set(w, searches.len() as u32);
                    searches.push(Search {
                        queue: vec![w],
                        head: 0,
                        members: vec![w],
                    });
                }
            }
        }
        let mut parent: Vec<u32> = (0..searches.len() as u32).collect();
        let mut exhausted = vec![false; searches.len()];
        let mut active: Vec<u32> = parent.clone();

        fn find(parent: &mut [u32], mut i: u32) -> u32 {
            while parent[i as usize] != i {
                let p = parent[i as usize];
                parent[i as usize] = parent[p as usize];
                i = p;
            }
            i
        }

        while active.len() > 1 {
            let round = std::mem::take(&mut active);
            for &i in &round {
                if find(&mut parent, i) != i || exhausted[i as usize] {
                    continue;
                }
                let s = &mut searches[i as usize];
                let x = s.queue[s.head];
                s.head += 1;
                for &y in g.neighbors(x) {
                    if !self.in_comp(view, y, label) {
                        continue;
                    }
                    let cur = find(&mut parent, i);
                    let o = self.owner.get(y);
                    if o == NONE {
                        self.owner.set(y, cur);
                        let s = &mut searches[cur as usize];
                        s.queue.push(y);
                        s.members.push(y);
                        continue;
                    }
                    let other = find(&mut parent, o);
                    if other == cur {
                        continue;
                    }
                    // union by size; the absorbed search's pending queue moves along
                    let (big, small) = if searches[cur as usize].members.len()
                        >= searches[other as usize].members.len()
                    {
                        (cur, other)
                    } else {
                        (other, cur)
                    };
                    let taken = std::mem::replace(
                        &mut searches[small as usize],
                        Search {
                            queue: Vec::new(),
                            head: 0,
                            members: Vec::new(),
                        },
                    );
                    let b = &mut searches[big as usize];
                    b.queue.extend_from_slice(&taken.queue[taken.head..]);
                    b.members.extend(taken.members);
                    parent[small as usize] = big;
                }
                let root = find(&mut parent, i);
                let s = &searches[root as usize];
                if s.head == s.queue.len() {
                    exhausted[root as usize] = true;
                }
            }
            active = round
                .into_iter()
                .filter(|&i| find(&mut parent, i) == i && !exhausted[i as usize])
                .collect();
        }

        for i in 0..searches.len() as u32 {
            if find(&mut parent, i) != i || !exhausted[i as usize] {
                continue;
            }
            let fresh = self.next_label;
            self.next_label += 1;
            let members = std::mem::take(&mut searches[i as usize].members);
            for &x in &members {
                self.comp.set(x, fresh);
            }
            self.tmp.clear();
            let mut boundary = Vec::new();
            for &x in &members {
                for &y in g.neighbors(x) {
                    if view.live(y) && self.in_hull.get(y) && self.tmp.insert(y) {
                        boundary.push(y);
                    }
                }
            }
            boundary.sort_unstable();
            work.push(Piece {
                label: fresh,
                boundary,
                members,
            });
        }

        if !active.is_empty() {
            // the one piece still growing keeps `label`; its boundary lies in
            // the old boundary plus the newly removed vertices
            self.tmp.clear();
            let mut boundary = Vec::new();
            for &a in old_boundary.iter().chain(removed) {
                if !self.tmp.insert(a) {
                    continue;
                }
                if g.neighbors(a).iter().any(|&y| self.in_comp(view, y, label)) {
                    boundary.push(a);
                }
            }
            boundary.sort_unstable();
            work.push(Piece {
                label,
                boundary,
                members: Vec::new(),
            });
        }
    }

    /// A minimal `u`-`v` separator inside component `label`, found by two
    /// lockstep searches: from `v` avoiding `N(u)`, and from `u` avoiding
    /// `N(v)`. The first search to finish supplies the separator.
    fn forced_separator<V: View>(
        &mut self,
        view: &V,
        label: u32,
        u: VertexId,
        v: VertexId,
    ) -> Vec<VertexId> {
        let g = view.host();
        self.near_u.clear();
        self.near_v.clear();
        self.seen_u.clear();
        self.seen_v.clear();
        for &w in g.neighbors(u) {
            self.near_u.set(w);
        }
        for &w in g.neighbors(v) {
            self.near_v.set(w);
        }
        // from_v walks away from v while avoiding N(u); it yields the separator next to u
        let mut from_v = (VecDeque::from([v]), Vec::new());
        let mut from_u = (VecDeque::from([u]), Vec::new());
        self.seen_u.set(v);
        self.seen_v.set(u);
        loop {
            if let Some(x) = from_v.0.pop_front() {
                for &y in g.neighbors(x) {
                    if self.in_comp(view, y, label) && self.seen_u.insert(y) {
                        if self.near_u.get(y) {
                            from_v.1.push(y);
                        } else {
                            from_v.0.push_back(y);
                        }
                    }
                }
            } else {
                return from_v.1;
            }
            if let Some(x) = from_u.0.pop_front() {
                for &y in g.neighbors(x) {
                    if self.in_comp(view, y, label) && self.seen_v.insert(y) {
                        if self.near_v.get(y) {
                            from_u.1.push(y);
                        } else {
                            from_u.0.push_back(y);
                        }
                    }
                }
            } else {
                return from_u.1;
            }
        }
    }
}

/// True iff every component of `G - A` has a complete neighborhood.
pub fn is_convex(g: &Graph, set: &VertexSet) -> Result<bool> {
    g.check_set(set)?;
    let rest = g.all_vertices().difference(set);
    for comp in g.connected_components(&rest)? {
        if !g.is_complete(&g.neighborhood(&comp, false)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique inclusion-minimal convex set containing `seeds`.
pub fn convex_hull(g: &Graph, seeds: &VertexSet) -> Result<VertexSet> {
    Ok(convex_hull_traced(g, seeds)?.0)
}

/// Like [`convex_hull`], also returning the separators absorbed, in order.
pub fn convex_hull_traced(g: &Graph, seeds: &VertexSet) -> Result<(VertexSet, Vec<VertexSet>)> {
    if seeds.is_empty() {
        return Err(Error::EmptySeedSet);
    }
    g.check_set(seeds)?;
    let mut engine = HullEngine::new(g.n());
    let mut trace = Vec::new();
    let hull = engine.hull(&Whole(g), seeds.as_slice(), Some(&mut trace));
    Ok((VertexSet::from_sorted_unchecked(hull), trace))
}

/// The minimal `u`-`v` separator of `G[C + {u, v}]` that lies inside `N(u)`.
///
/// `u` and `v` must be non-adjacent and connected through `component`.
pub fn close_minimal_separator(
    g: &Graph,
    component: &VertexSet,
    u: VertexId,
    v: VertexId,
) -> Result<VertexSet> {
    g.check_set(component)?;
    g.check_set(&VertexSet::from_unsorted(vec![u, v]))?;
    if u == v || g.has_edge(u, v) {
        return Err(Error::Adjacent(u, v));
    }
    let inside = |y: VertexId| component.contains(y) && y != u && y != v;
    let near_u: VertexSet = g
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&y| inside(y))
        .collect();
    let mut seen = vec![false; g.n()];
    seen[v] = true;
    let mut queue = VecDeque::from([v]);
    let mut sep = Vec::new();
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !inside(y) || seen[y] {
                continue;
            }
            seen[y] = true;
            if near_u.contains(y) {
                sep.push(y);
            } else {
                queue.push_back(y);
            }
        }
    }
    if sep.is_empty() {
        return Err(Error::Unreachable { u, v });
    }
    Ok(VertexSet::from_unsorted(sep))
}
