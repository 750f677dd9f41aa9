//! The result document written by `decompose` and read by `verify`.

use atomdecomp::{Decomposition, Graph, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct ResultDocument {
    pub atoms: Vec<Vec<String>>,
    #[serde(default)]
    pub separators: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub algorithm: String,
    #[serde(default)]
    pub tie_break: String,
    #[serde(default)]
    pub wall_time_seconds: f64,
}

/// Label lists with each list sorted and the lists ordered by size, then
/// lexicographically.
pub fn canonical_labels(g: &Graph, sets: &[VertexSet]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = sets
        .iter()
        .map(|s| {
            let mut l = g.labels_of(s);
            l.sort();
            l
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

impl ResultDocument {
    pub fn new(g: &Graph, d: &Decomposition) -> Self {
        ResultDocument {
            atoms: canonical_labels(g, d.atoms.atoms()),
            separators: d.separators.as_ref().map(|s| canonical_labels(g, s)),
            algorithm: d.algorithm.to_string(),
            tie_break: d.tie_break.to_string(),
            wall_time_seconds: d.wall_time.as_secs_f64(),
        }
    }
}
