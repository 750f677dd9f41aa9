//! Immutable simple undirected graphs and the set primitives the
//! decomposition algorithms are built from.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored in CSR form with each
//! neighbor list sorted ascending, so membership tests are binary searches
//! and neighbor walks are contiguous slices.

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Dense vertex identifier.
pub type VertexId = usize;

/// A canonical, sorted, duplicate-free set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from ids in any order, dropping duplicates.
    pub fn from_unsorted(mut ids: Vec<VertexId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Wraps an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted_unchecked(ids: Vec<VertexId>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<VertexId> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    /// Canonical ordering used for atom and separator lists: by size, then
    /// lexicographically.
    pub fn canonical_cmp(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// Maps every member through `map` (e.g. local ids back to parent ids).
    pub fn lift(&self, map: &[VertexId]) -> VertexSet {
        VertexSet::from_unsorted(self.0.iter().map(|&v| map[v]).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Counters describing what the loader normalized away.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub lines: usize,
    pub comments: usize,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

/// An immutable simple undirected graph.
#[derive(Clone)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .finish()
    }
}

/// An induced subgraph together with the map from its local ids to the
/// parent graph's ids.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub to_parent: Vec<VertexId>,
}

impl Induced {
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.lift(&self.to_parent)
    }
}

impl Graph {
    /// Builds a graph on `n` unlabeled vertices. Self-loops are dropped and
    /// duplicate edges merged.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
        }
        Ok(Self::build(n, edges.iter().copied(), None).0)
    }

    /// Builds a labeled graph from label pairs; ids are assigned in order of
    /// first appearance.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Graph {
        let mut b = LabelTable::default();
        let pairs: Vec<_> = edges
            .iter()
            .map(|(u, v)| (b.intern(u.as_ref()), b.intern(v.as_ref())))
            .collect();
        Self::build(b.names.len(), pairs.into_iter(), Some(b.names)).0
    }

    fn build(
        n: usize,
        edges: impl Iterator<Item = (VertexId, VertexId)>,
        labels: Option<Vec<String>>,
    ) -> (Graph, usize, usize) {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut loops = 0;
        for (u, v) in edges {
            if u == v {
                loops += 1;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut dups = 0;
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            dups += before - list.len();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        let g = Graph {
            offsets,
            targets,
            labels,
        };
        // every duplicate edge was counted once from each endpoint
        (g, loops, dups / 2)
    }

    /// Reads a whitespace-separated edge list. Lines starting with `#` are
    /// comments and blank lines are skipped; every other line must hold
    /// exactly two labels.
    pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LoadReport)> {
        let mut table = LabelTable::default();
        let mut pairs = Vec::new();
        let mut report = LoadReport::default();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            report.lines += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.starts_with('#') {
                report.comments += 1;
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(a), Some(b), None) => {
                    pairs.push((table.intern(a), table.intern(b)));
                }
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!(
                            "expected two vertex labels, found {} token(s)",
                            trimmed.split_whitespace().count()
                        ),
                    })
                }
            }
        }
        let n = table.names.len();
        let (g, loops, dups) = Self::build(n, pairs.into_iter(), Some(table.names));
        report.self_loops = loops;
        report.duplicate_edges = dups;
        Ok((g, report))
    }

    pub fn load_edge_list_str(text: &str) -> Result<Graph> {
        Ok(Self::load_edge_list(text.as_bytes())?.0)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::from_sorted_unchecked(self.vertices().collect())
    }

    /// Edges with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: VertexId) -> Cow<'_, str> {
        match &self.labels {
            Some(names) => Cow::Borrowed(names[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    /// Looks up a vertex by its external label.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        match &self.labels {
            Some(names) => names.iter().position(|s| s == label),
            None => label.parse().ok().filter(|&v: &usize| v < self.n()),
        }
    }

    /// Builds a label -> id lookup table.
    pub fn label_index(&self) -> HashMap<String, VertexId> {
        self.vertices()
            .map(|v| (self.label(v).into_owned(), v))
            .collect()
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.label(v).into_owned()).collect()
    }

    /// Resolves labels to a vertex set.
    pub fn set_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                self.vertex_by_label(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(VertexSet::from_unsorted)
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.as_slice().last() {
            Some(&v) if v >= self.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }

    /// `N(A)`, or `N[A]` when `closed` is set.
    pub fn neighborhood(&self, set: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(set)?;
        let mut out: Vec<VertexId> = set
            .iter()
            .flat_map(|v| self.neighbors(v).iter().copied())
            .filter(|&w| !set.contains(w))
            .collect();
        if closed {
            out.extend(set.iter());
        }
        Ok(VertexSet::from_unsorted(out))
    }

    /// Connected components of the subgraph induced on `set`, ordered by
    /// smallest member.
    pub fn connected_components(&self, set: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(set)?;
        let mut inside = vec![false; self.n()];
        for v in set {
            inside[v] = true;
        }
        Ok(self.components_where(set.iter(), |v| inside[v]))
    }

    /// Components of the whole graph.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_where(self.vertices(), |_| true)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    fn components_where(
        &self,
        starts: impl Iterator<Item = VertexId>,
        allowed: impl Fn(VertexId) -> bool,
    ) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        // `starts` is ascending, so each component is discovered at its minimum
        for s in starts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(x);
                for &y in self.neighbors(x) {
                    if !seen[y] && allowed(y) {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comps.push(VertexSet::from_unsorted(members));
        }
        comps
    }

    /// True iff every pair of members is adjacent.
    pub fn is_complete(&self, set: &VertexSet) -> bool {
        let k = set.len();
        if k <= 1 {
            return true;
        }
        set.iter().all(|v| {
            self.degree(v) >= k - 1 && set.iter().filter(|&w| w != v).all(|w| self.has_edge(v, w))
        })
    }

    /// The subgraph induced on `set`, with labels carried over.
    pub fn induced(&self, set: &VertexSet) -> Result<Induced> {
        self.check_set(set)?;
        let mut ind = self.induced_bare(set.as_slice());
        if let Some(names) = &self.labels {
            ind.graph.labels = Some(set.iter().map(|v| names[v].clone()).collect());
        }
        Ok(ind)
    }

    /// Induced subgraph without labels; `members` must be sorted and in range.
    pub(crate) fn induced_bare(&self, members: &[VertexId]) -> Induced {
        let mut offsets = Vec::with_capacity(members.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        // parent lists are sorted and the id map is monotone, so local lists stay sorted
        if members.len() * 8 >= self.n() {
            let mut local = vec![usize::MAX; self.n()];
            for (i, &v) in members.iter().enumerate() {
                local[v] = i;
            }
            for &v in members {
                targets.extend(
                    self.neighbors(v)
                        .iter()
                        .map(|&w| local[w])
                        .filter(|&w| w != usize::MAX),
                );
                offsets.push(targets.len());
            }
        } else {
            let local: HashMap<VertexId, usize> =
                members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            for &v in members {
                targets.extend(
                    self.neighbors(v)
                        .iter()
                        .filter_map(|w| local.get(w).copied()),
                );
                offsets.push(targets.len());
            }
        }
        Induced {
            graph: Graph {
                offsets,
                targets,
                labels: None,
            },
            to_parent: members.to_vec(),
        }
    }
}

#[derive(Default)]
struct LabelTable {
    ids: HashMap<String, VertexId>,
    names: Vec<String>,
}

impl LabelTable {
    fn intern(&mut self, label: &str) -> VertexId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.names.len();
        self.names.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }
}
