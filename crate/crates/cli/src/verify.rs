//! Invariant checks for a result document against its input graph.

use atomdecomp::oracle::{brute_clique_min_seps, OracleBudget};
use atomdecomp::{decompose_graph, Algorithm, DecomposeOptions, Graph, TieBreak, VertexSet};

use crate::document::{canonical_labels, ResultDocument};

/// Outcome of one named invariant.
pub struct Check {
    pub name: &'static str,
    pub problems: Vec<String>,
    pub note: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            problems: Vec::new(),
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

fn show(g: &Graph, s: &VertexSet) -> String {
    format!("{{{}}}", g.labels_of(s).join(","))
}

fn resolve(g: &Graph, lists: &[Vec<String>], what: &str, check: &mut Check) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for list in lists {
        match g.set_from_labels(list) {
            Ok(s) => out.push(s),
            Err(e) => check
                .problems
                .push(format!("{what} [{}]: {e}", list.join(","))),
        }
    }
    out
}

/// Runs every invariant; the result lists each check in a fixed order.
pub fn verify(g: &Graph, doc: &ResultDocument) -> Vec<Check> {
    let mut checks = Vec::new();

    let mut labels = Check::new("known-labels");
    let atoms = resolve(g, &doc.atoms, "atom", &mut labels);
    let seps = doc
        .separators
        .as_ref()
        .map(|s| resolve(g, s, "separator", &mut labels));
    let labels_ok = labels.passed();
    checks.push(labels);
    if !labels_ok {
        return checks;
    }

    let mut cover = Check::new("vertex-coverage");
    let mut covered = vec![false; g.n()];
    for a in &atoms {
        for v in a.iter() {
            covered[v] = true;
        }
    }
    for v in g.vertices().filter(|&v| !covered[v]) {
        cover
            .problems
            .push(format!("vertex {} is in no atom", g.label(v)));
    }
    checks.push(cover);

    let mut edges = Check::new("edge-coverage");
    for (u, v) in g.edges() {
        if !atoms.iter().any(|a| a.contains(u) && a.contains(v)) {
            edges
                .problems
                .push(format!("edge {}-{} is in no atom", g.label(u), g.label(v)));
        }
    }
    checks.push(edges);

    let mut antichain = Check::new("antichain");
    for (i, a) in atoms.iter().enumerate() {
        for (j, b) in atoms.iter().enumerate() {
            if i != j && a.is_subset(b) && (a != b || i < j) {
                antichain
                    .problems
                    .push(format!("{} is contained in {}", show(g, a), show(g, b)));
            }
        }
    }
    checks.push(antichain);

    let mut prime = Check::new("primality");
    let budget = OracleBudget::ATOMS.max_vertices;
    let mut skipped = 0;
    for a in &atoms {
        let sub = g.induced(a).expect("labels resolved");
        if !sub.graph.is_connected() {
            prime
                .problems
                .push(format!("{} is disconnected", show(g, a)));
        } else if a.len() > budget {
            skipped += 1;
        } else {
            let seps = brute_clique_min_seps(&sub.graph).expect("within budget");
            if let Some(s) = seps.first() {
                prime.problems.push(format!(
                    "{} has clique minimal separator {}",
                    show(g, a),
                    show(g, &sub.lift(s))
                ));
            }
        }
    }
    if skipped > 0 {
        prime.note = Some(format!(
            "{skipped} atom(s) above {budget} vertices only checked for connectivity"
        ));
    }
    checks.push(prime);

    if let Some(seps) = &seps {
        let mut complete = Check::new("separator-completeness");
        let mut full = Check::new("separator-full-components");
        for s in seps {
            if !g.is_complete(s) {
                complete
                    .problems
                    .push(format!("{} is not a clique", show(g, s)));
            }
            let rest = g.all_vertices().difference(s);
            let count = g
                .connected_components(&rest)
                .expect("in range")
                .iter()
                .filter(|c| &g.neighborhood(c, false).expect("in range") == s)
                .count();
            if count < 2 {
                full.problems
                    .push(format!("{} has {count} full component(s)", show(g, s)));
            }
        }
        checks.push(complete);
        checks.push(full);
    }

    // the decomposition is unique, so an independent recomputation must agree
    let mut exact = Check::new("matches-recomputation");
    let opts = DecomposeOptions {
        separators: seps.is_some(),
        ..DecomposeOptions::default()
    };
    match decompose_graph(g, Algorithm::Rda, TieBreak::LowestId, &opts) {
        Ok(d) => {
            if canonical_labels(g, d.atoms.atoms()) != canonical_labels(g, &atoms) {
                exact
                    .problems
                    .push("atom list differs from a fresh decomposition".into());
            }
            if let (Some(want), Some(got)) = (&d.separators, &seps) {
                if canonical_labels(g, want) != canonical_labels(g, got) {
                    exact
                        .problems
                        .push("separator list differs from a fresh decomposition".into());
                }
            }
        }
        Err(e) => exact.problems.push(format!("could not recompute: {e}")),
    }
    checks.push(exact);
    checks
}
