mod common;

use atomdecomp::baseline::{is_chordal, leimer_decompose, mcs_m};
use atomdecomp::oracle::{
    atoms_by_definition, brute_atoms, brute_atoms_choosing, brute_clique_min_seps,
};
use atomdecomp::{
    decompose_graph, fixtures, mcs_ordering, prda_with_cutoff, rda, Algorithm, AtomSet,
    DecomposeOptions, Graph, TieBreak, VertexSet,
};
use proptest::prelude::*;

fn atoms(g: &Graph, alg: Algorithm, tie: TieBreak) -> AtomSet {
    decompose_graph(g, alg, tie, &DecomposeOptions::default())
        .unwrap()
        .atoms
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn atoms_cover_and_form_an_antichain(g in common::graph(1, 14)) {
        let a = atoms(&g, Algorithm::Rda, TieBreak::LowestId);
        for v in g.vertices() {
            prop_assert!(!a.containing(v).is_empty());
        }
        for (u, v) in g.edges() {
            prop_assert!(a.iter().any(|h| h.contains(u) && h.contains(v)));
        }
        for (i, x) in a.iter().enumerate() {
            prop_assert_eq!(g.connected_components(x).unwrap().len(), 1);
            for (j, y) in a.iter().enumerate() {
                prop_assert!(i == j || !x.is_subset(y));
            }
        }
    }

    #[test]
    fn atoms_have_no_clique_separator(g in common::graph(1, 12)) {
        for h in atoms(&g, Algorithm::Rda, TieBreak::LowestId).iter() {
            let sub = g.induced(h).unwrap();
            prop_assert!(brute_clique_min_seps(&sub.graph).unwrap().is_empty());
        }
    }

    #[test]
    fn all_algorithms_and_orderings_agree(g in common::graph(1, 14), seed in any::<u64>()) {
        let reference = atoms(&g, Algorithm::Rda, TieBreak::LowestId);
        for alg in Algorithm::ALL {
            for tie in [TieBreak::HighestId, TieBreak::Random(seed)] {
                prop_assert_eq!(&atoms(&g, alg, tie), &reference);
            }
        }
    }

    #[test]
    fn prda_cutoff_does_not_matter(g in common::connected_graph(2, 14), cutoff in 0usize..16) {
        let ord = mcs_ordering(&g, TieBreak::LowestId).unwrap();
        prop_assert_eq!(prda_with_cutoff(&g, &ord, cutoff).unwrap().atoms, rda(&g, &ord).unwrap().atoms);
    }

    #[test]
    fn matches_oracles(g in common::connected_graph(2, 9), picks in proptest::collection::vec(any::<prop::sample::Index>(), 12)) {
        let want = brute_atoms(&g).unwrap();
        let mut k = 0;
        let other = brute_atoms_choosing(&g, |count| { k += 1; picks[k % picks.len()].index(count) }).unwrap();
        prop_assert_eq!(&other, &want);
        prop_assert_eq!(&atoms_by_definition(&g).unwrap(), &want);
        prop_assert_eq!(atoms(&g, Algorithm::Rda, TieBreak::LowestId).into_vec(), want.clone());
        prop_assert_eq!(leimer_decompose(&g).unwrap().atoms.into_vec(), want);
    }

    #[test]
    fn separators_are_complete_with_two_full_components(g in common::graph(1, 12)) {
        let d = decompose_graph(&g, Algorithm::Rda, TieBreak::LowestId, &DecomposeOptions::default()).unwrap();
        let seps = d.separators.unwrap();
        let all = brute_clique_min_seps(&g).unwrap();
        for s in &seps {
            prop_assert!(g.is_complete(s));
            prop_assert!(common::full_components(&g, s) >= 2);
            prop_assert!(all.contains(s));
        }
    }

    #[test]
    fn chordal_atoms_are_maximal_cliques(g in common::graph(1, 11)) {
        let filled = mcs_m(&g).unwrap().filled_graph(&g);
        prop_assert!(is_chordal(&filled));
        for h in atoms(&filled, Algorithm::Rda, TieBreak::LowestId).iter() {
            prop_assert!(filled.is_complete(h));
        }
    }
}

#[test]
fn small_families() {
    let single = |g: &Graph| atoms(g, Algorithm::Rda, TieBreak::LowestId).len();
    for n in 1..7 {
        assert_eq!(single(&fixtures::complete(n)), 1);
    }
    for n in 4..9 {
        assert_eq!(single(&fixtures::cycle(n)), 1);
    }
    assert_eq!(single(&fixtures::path(6)), 5);
    let star = fixtures::star(5);
    let a = atoms(&star, Algorithm::Prda, TieBreak::LowestId);
    assert!(a.iter().all(|h| h.len() == 2 && h.contains(0)));
    assert_eq!(a.len(), 5);
}

#[test]
fn isolated_vertices_are_atoms() {
    let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
    let a = atoms(&g, Algorithm::Rda, TieBreak::LowestId);
    let want: Vec<VertexSet> = vec![
        VertexSet::singleton(2),
        VertexSet::singleton(3),
        VertexSet::from_unsorted(vec![0, 1]),
    ];
    assert_eq!(a.atoms(), want.as_slice());
}
