use std::io::Cursor;

use atomdecomp::{fixtures, Error, Graph, VertexSet};

#[test]
fn loader_reports_skipped_lines() {
    let text = "# header\n\na b\nb c\nb a\nc c\n  c   d  \n";
    let (g, report) = Graph::load_edge_list(Cursor::new(text)).unwrap();
    assert_eq!((g.n(), g.m()), (4, 3));
    assert_eq!(report.comments, 1);
    assert_eq!(report.self_loops, 1);
    assert_eq!(report.duplicate_edges, 1);
    assert_eq!(g.label(3), "d");
}

#[test]
fn malformed_lines_name_the_line() {
    for (text, line) in [("a b\nc\n", 2), ("a b c\n", 1), ("x y\n# ok\nz\n", 3)] {
        match Graph::load_edge_list_str(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn empty_input_is_an_empty_graph() {
    let g = Graph::load_edge_list_str("# nothing\n").unwrap();
    assert!(g.is_empty());
}

#[test]
fn sets_and_neighborhoods() {
    let g = fixtures::worked_example();
    let r = g.set_from_labels(&["r"]).unwrap();
    let open = g.neighborhood(&r, false).unwrap();
    assert_eq!(g.labels_of(&open), ["t", "l", "x", "d", "b"]);
    assert!(matches!(
        g.set_from_labels(&["zz"]),
        Err(Error::UnknownLabel(_))
    ));
    assert!(matches!(
        g.neighborhood(&VertexSet::singleton(99), false),
        Err(Error::VertexOutOfRange { .. })
    ));
    let rest = g
        .all_vertices()
        .difference(&g.set_from_labels(&["r", "t"]).unwrap());
    assert_eq!(g.connected_components(&rest).unwrap().len(), 3);
}

#[test]
fn induced_subgraphs_keep_labels() {
    let g = fixtures::two_branches();
    let set = g.set_from_labels(&["b", "c", "e", "f"]).unwrap();
    let sub = g.induced(&set).unwrap();
    assert_eq!(sub.graph.m(), 4);
    assert_eq!(sub.lift(&sub.graph.all_vertices()), set);
    let names: Vec<_> = sub
        .graph
        .vertices()
        .map(|v| sub.graph.label(v).into_owned())
        .collect();
    assert_eq!(names, ["b", "c", "e", "f"]);
}

#[test]
fn bundled_benchmarks_load() {
    let g = fixtures::sparse_1k();
    assert_eq!((g.n(), g.m()), (1000, 1049));
    assert!(g.is_connected());
    let g = fixtures::sparse_5k();
    assert_eq!((g.n(), g.m()), (5000, 5248));
}
