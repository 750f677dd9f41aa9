//! Maximum Cardinality Search.
//!
//! Vertices are numbered from `n` down to `1`; at every step an unnumbered
//! vertex with the largest number of already numbered neighbors is chosen.
//! The weight of a vertex is that count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// How MCS breaks ties between unnumbered vertices of equal maximum weight.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TieBreak {
    #[default]
    LowestId,
    HighestId,
    Random(u64),
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreak::LowestId => write!(f, "lowest-id"),
            TieBreak::HighestId => write!(f, "highest-id"),
            TieBreak::Random(seed) => write!(f, "random:{seed}"),
        }
    }
}

impl FromStr for TieBreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lowest-id" => Ok(TieBreak::LowestId),
            "highest-id" => Ok(TieBreak::HighestId),
            _ => match s.strip_prefix("random:") {
                Some(seed) => seed
                    .parse()
                    .map(TieBreak::Random)
                    .map_err(|e| format!("bad seed `{seed}`: {e}")),
                None => Err(format!(
                    "unknown tie-break `{s}` (expected lowest-id, highest-id or random:<seed>)"
                )),
            },
        }
    }
}

/// A bijection from vertices to `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordering {
    position: Vec<usize>,
    sequence: Vec<VertexId>,
    numbering_weight: Option<Vec<u32>>,
    trace: Option<McsTrace>,
}

impl Ordering {
    /// `sequence[i]` receives number `i + 1`.
    pub fn from_sequence(n: usize, sequence: Vec<VertexId>) -> Result<Ordering> {
        if sequence.len() != n {
            return Err(Error::InvalidOrdering(format!(
                "{} entries for {n} vertices",
                sequence.len()
            )));
        }
        let mut position = vec![0; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if position[v] != 0 {
                return Err(Error::InvalidOrdering(format!("vertex {v} appears twice")));
            }
            position[v] = i + 1;
        }
        Ok(Ordering {
            position,
            sequence,
            numbering_weight: None,
            trace: None,
        })
    }

    /// Ordering given by labels listed in ascending number order.
    pub fn from_labels<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<Ordering> {
        let seq = labels
            .iter()
            .map(|l| {
                g.vertex_by_label(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ordering::from_sequence(g.n(), seq)
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// The number `alpha(v)` in `1..=n`.
    pub fn alpha(&self, v: VertexId) -> usize {
        self.position[v]
    }

    /// The vertex holding number `i` (1-based).
    pub fn vertex_at(&self, i: usize) -> VertexId {
        self.sequence[i - 1]
    }

    /// Vertices in ascending number order.
    pub fn sequence(&self) -> &[VertexId] {
        &self.sequence
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Weight each vertex had when it was chosen, when produced by MCS.
    pub fn numbering_weights(&self) -> Option<&[u32]> {
        self.numbering_weight.as_deref()
    }

    pub fn trace(&self) -> Option<&McsTrace> {
        self.trace.as_ref()
    }
}

/// Full weight snapshots around every numbering step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McsTrace {
    steps: Vec<TraceStep>,
    step_of: Vec<usize>,
}

/// One numbering step, in processing order (number `n` first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub vertex: VertexId,
    pub number: usize,
    /// Weights of all vertices at the instant `vertex` is selected.
    pub before: Vec<u32>,
    /// Weights of all vertices once `vertex` is numbered and its neighbors updated.
    pub after: Vec<u32>,
}

/// A time stamp relative to the numbering of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stamp {
    /// The instant `v` is selected (`v` still counts as unnumbered).
    Before(VertexId),
    /// The instant `v` has received its number.
    After(VertexId),
}

impl McsTrace {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// Weight of `v` at `stamp`, regardless of whether `v` is numbered.
    pub fn weight(&self, stamp: Stamp, v: VertexId) -> u32 {
        match stamp {
            Stamp::Before(u) => self.steps[self.step_of[u]].before[v],
            Stamp::After(u) => self.steps[self.step_of[u]].after[v],
        }
    }

    /// Highest weight among members of `set` that are unnumbered at `stamp`.
    pub fn weight_at(&self, stamp: Stamp, set: &VertexSet) -> Result<u32> {
        // vertices whose step index is >= cutoff are unnumbered at the stamp
        let (snapshot, cutoff) = match stamp {
            Stamp::Before(u) => {
                let s = self.step_of[u];
                (&self.steps[s].before, s)
            }
            Stamp::After(u) => {
                let s = self.step_of[u];
                (&self.steps[s].after, s + 1)
            }
        };
        set.iter()
            .filter(|&v| v < self.step_of.len() && self.step_of[v] >= cutoff)
            .map(|v| snapshot[v])
            .max()
            .ok_or(Error::AllNumbered)
    }
}

/// Max-weight buckets with a pluggable tie-break.
struct Buckets {
    buckets: Vec<BTreeSet<VertexId>>,
    top: usize,
}

impl Buckets {
    fn new(n: usize) -> Self {
        let mut buckets = vec![BTreeSet::new(); n.max(1)];
        buckets[0] = (0..n).collect();
        Buckets { buckets, top: 0 }
    }

    fn pick(&mut self, tie: TieBreak, rng: &mut Option<ChaCha8Rng>) -> VertexId {
        while self.buckets[self.top].is_empty() {
            self.top -= 1;
        }
        let b = &mut self.buckets[self.top];
        let v = match tie {
            TieBreak::LowestId => *b.first().unwrap(),
            TieBreak::HighestId => *b.last().unwrap(),
            TieBreak::Random(_) => {
                let idx = rng.as_mut().unwrap().gen_range(0..b.len());
                *b.iter().nth(idx).unwrap()
            }
        };
        b.remove(&v);
        v
    }

    fn bump(&mut self, v: VertexId, from: u32) {
        let from = from as usize;
        self.buckets[from].remove(&v);
        self.buckets[from + 1].insert(v);
        self.top = self.top.max(from + 1);
    }
}

/// Computes an MCS ordering.
pub fn mcs_ordering(g: &Graph, tie: TieBreak) -> Result<Ordering> {
    run_mcs(g, tie, false)
}

/// Computes an MCS ordering and records weight snapshots around every step.
pub fn mcs_ordering_traced(g: &Graph, tie: TieBreak) -> Result<Ordering> {
    run_mcs(g, tie, true)
}

fn run_mcs(g: &Graph, tie: TieBreak, record: bool) -> Result<Ordering> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = match tie {
        TieBreak::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut weight = vec![0u32; n];
    let mut numbered = vec![false; n];
    let mut buckets = Buckets::new(n);
    let mut sequence = vec![0; n];
    let mut position = vec![0; n];
    let mut at_numbering = vec![0u32; n];
    let mut steps = Vec::new();
    let mut step_of = vec![0; if record { n } else { 0 }];

    for i in (1..=n).rev() {
        let v = buckets.pick(tie, &mut rng);
        let before = record.then(|| weight.clone());
        numbered[v] = true;
        sequence[i - 1] = v;
        position[v] = i;
        at_numbering[v] = weight[v];
        for &w in g.neighbors(v) {
            if !numbered[w] {
                buckets.bump(w, weight[w]);
                weight[w] += 1;
            }
        }
        if let Some(before) = before {
            step_of[v] = steps.len();
            steps.push(TraceStep {
                vertex: v,
                number: i,
                before,
                after: weight.clone(),
            });
        }
    }

    Ok(Ordering {
        position,
        sequence,
        numbering_weight: Some(at_numbering),
        trace: record.then_some(McsTrace { steps, step_of }),
    })
}

/// Replays `ordering` from number `n` down to `1` and checks that every
/// chosen vertex had maximum weight among the unnumbered vertices.
pub fn is_valid_mcs_ordering(g: &Graph, ordering: &Ordering) -> Result<bool> {
    let n = g.n();
    if ordering.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering covers {} vertices, graph has {n}",
            ordering.len()
        )));
    }
    if n == 0 {
        return Ok(true);
    }
    let mut weight = vec![0usize; n];
    let mut count = vec![0usize; n];
    count[0] = n;
    let mut numbered = vec![false; n];
    let mut top = 0;
    for i in (1..=n).rev() {
        let v = ordering.vertex_at(i);
        while count[top] == 0 {
            top -= 1;
        }
        if weight[v] < top {
            return Ok(false);
        }
        numbered[v] = true;
        count[weight[v]] -= 1;
        for &w in g.neighbors(v) {
            if !numbered[w] {
                count[weight[w]] -= 1;
                weight[w] += 1;
                count[weight[w]] += 1;
                top = top.max(weight[w]);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn id(g: &Graph, l: &str) -> VertexId {
        g.vertex_by_label(l).unwrap()
    }

    #[test]
    fn figure_run_with_highest_id_ties() {
        // fixture ids follow label order a..e
        let g = fixtures::mcs_trace();
        let ord = mcs_ordering_traced(&g, TieBreak::HighestId).unwrap();
        let labels: Vec<_> = ord
            .sequence()
            .iter()
            .map(|&v| g.label(v).into_owned())
            .collect();
        assert_eq!(labels, ["a", "b", "c", "d", "e"]);
        let w = ord.numbering_weights().unwrap();
        let at: Vec<u32> = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|l| w[id(&g, l)])
            .collect();
        assert_eq!(at, [2, 2, 1, 1, 0]);

        let trace = ord.trace().unwrap();
        let (b, c) = (id(&g, "b"), id(&g, "c"));
        assert_eq!(trace.weight(Stamp::Before(c), b), 1);
        assert_eq!(trace.weight(Stamp::After(c), b), 2);
        let ab = g.set_from_labels(&["a", "b"]).unwrap();
        assert_eq!(trace.weight_at(Stamp::Before(c), &ab).unwrap(), 1);
        assert_eq!(trace.weight_at(Stamp::After(c), &ab).unwrap(), 2);
        assert!(is_valid_mcs_ordering(&g, &ord).unwrap());
    }

    #[test]
    fn weight_at_rejects_fully_numbered_sets() {
        let g = fixtures::mcs_trace();
        let ord = mcs_ordering_traced(&g, TieBreak::HighestId).unwrap();
        let trace = ord.trace().unwrap();
        let e = id(&g, "e");
        let d = id(&g, "d");
        // e is numbered first, d second
        assert!(matches!(
            trace.weight_at(Stamp::After(d), &VertexSet::from_unsorted(vec![e, d])),
            Err(Error::AllNumbered)
        ));
        // at its own selection a vertex still counts and holds the maximum weight
        let w = trace
            .weight_at(Stamp::Before(d), &VertexSet::singleton(d))
            .unwrap();
        let max = trace
            .weight_at(Stamp::Before(d), &g.all_vertices())
            .unwrap();
        assert_eq!(w, max);
    }

    #[test]
    fn single_vertex_and_empty() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let ord = mcs_ordering(&g, TieBreak::LowestId).unwrap();
        assert_eq!(ord.alpha(0), 1);
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert!(matches!(
            mcs_ordering(&empty, TieBreak::LowestId),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn validity_checker() {
        let g = fixtures::mcs_trace();
        let ord = Ordering::from_labels(&g, &["a", "b", "c", "d", "e"]).unwrap();
        assert!(is_valid_mcs_ordering(&g, &ord).unwrap());

        let g = fixtures::worked_example();
        let ord = Ordering::from_labels(&g, &["x", "d", "b", "s", "r", "l", "t", "a"]).unwrap();
        assert!(is_valid_mcs_ordering(&g, &ord).unwrap());

        // path p0 - p1 - p2 with the middle vertex numbered n = 3 first, then
        // p0 = 2, then p2 = 1: valid. Number an endpoint first and the other
        // endpoint second: invalid, since the middle vertex has weight 1.
        let p = fixtures::path(3);
        assert!(
            is_valid_mcs_ordering(&p, &Ordering::from_sequence(3, vec![2, 0, 1]).unwrap()).unwrap()
        );
        assert!(
            !is_valid_mcs_ordering(&p, &Ordering::from_sequence(3, vec![1, 2, 0]).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn ordering_errors() {
        assert!(Ordering::from_sequence(3, vec![0, 0, 1]).is_err());
        assert!(Ordering::from_sequence(3, vec![0, 1]).is_err());
        let g = fixtures::path(3);
        let short = Ordering::from_sequence(2, vec![0, 1]).unwrap();
        assert!(is_valid_mcs_ordering(&g, &short).is_err());
    }

    #[test]
    fn tie_break_parse() {
        assert_eq!("lowest-id".parse::<TieBreak>().unwrap(), TieBreak::LowestId);
        assert_eq!(
            "random:42".parse::<TieBreak>().unwrap(),
            TieBreak::Random(42)
        );
        assert_eq!(TieBreak::Random(7).to_string(), "random:7");
        assert!("random:x".parse::<TieBreak>().is_err());
        assert!("best".parse::<TieBreak>().is_err());
    }

    #[test]
    fn complete_graph_accepts_all_permutations() {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        for n in 1..=5 {
            let g = fixtures::complete(n);
            for p in permutations(n) {
                let ord = Ordering::from_sequence(n, p).unwrap();
                assert!(is_valid_mcs_ordering(&g, &ord).unwrap());
            }
        }
    }
}
