//! Black-box walk through the public API: parse, recognize, verify the
//! certificate, optimize, traverse — with nothing but the crate's exports.

use ncpath_core::domination::{covered_edge_check, mcds, mds, mids, steiner_tree, DominationError};
use ncpath_core::graph::Graph;
use ncpath_core::hamiltonicity::{hamiltonian_cycle, hamiltonian_path, CycleSearch, PathSearch};
use ncpath_core::recognition::{
    recognize, verify_certificate, Certificate, TargetClass, Verdict, WitnessKind,
};

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const NET: &str = "6 6\n0 1\n0 2\n1 2\n0 3\n1 4\n2 5\n";
const SUN3: &str = "6 9\n0 1\n0 2\n1 2\n0 3\n1 3\n1 4\n2 4\n0 5\n2 5\n";
const K13: &str = "4 3\n0 1\n0 2\n0 3\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

fn graph(text: &str) -> Graph {
    Graph::parse(text).expect("fixtures parse")
}

#[test]
fn the_four_classes_nest_on_textbook_graphs() {
    // Fixture, then per-class membership in the order
    // chordal / nc-path-tree / nc-path-rtree / proper-interval, then the
    // witness kind expected at the first non-member level.
    let cases: [(&str, [bool; 4], Option<WitnessKind>); 5] = [
        (P4, [true, true, true, true], None),
        (NET, [true, true, true, false], Some(WitnessKind::Net)),
        (SUN3, [true, true, false, false], Some(WitnessKind::ThreeSun)),
        (K13, [true, false, false, false], Some(WitnessKind::Claw)),
        (C5, [false, false, false, false], Some(WitnessKind::Hole)),
    ];
    for (text, memberships, first_witness) in cases {
        let g = graph(text);
        for (class, expect_member) in TargetClass::ALL.into_iter().zip(memberships) {
            let cert = recognize(&g, class).expect("connected fixtures");
            verify_certificate(&g, &cert)
                .unwrap_or_else(|why| panic!("{class} certificate rejected: {why}"));
            assert_eq!(
                cert.verdict == Verdict::Member,
                expect_member,
                "{text:?} against {class}"
            );
            if !expect_member && memberships.iter().filter(|&&m| m).count() == 3 {
                // The first level that rejects names the newly forbidden
                // structure, not some coarser one.
                assert_eq!(cert.witness.as_ref().unwrap().kind, first_witness.unwrap());
            }
        }
    }
}

#[test]
fn certificates_survive_a_json_round_trip() {
    let g = graph(NET);
    for class in TargetClass::ALL {
        let cert = recognize(&g, class).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        verify_certificate(&g, &back).expect("round-tripped certificates still verify");
    }
}

#[test]
fn dimacs_and_edge_list_parse_to_the_same_graph() {
    let dimacs = "c the net\np edge 6 6\ne 1 2\ne 1 3\ne 2 3\ne 1 4\ne 2 5\ne 3 6\n";
    let a = graph(NET);
    let b = graph(dimacs);
    assert_eq!(a.n(), b.n());
    assert_eq!(a.edges(), b.edges());
}

#[test]
fn domination_family_on_the_net() {
    let g = graph(NET);
    let plain = mds(&g).unwrap();
    let independent = mids(&g).unwrap();
    let connected = mcds(&g).unwrap();
    assert_eq!(plain.size, 3);
    assert_eq!(independent.size, 3, "independence costs nothing in this class");
    assert_eq!(connected.vertices, vec![0, 1, 2], "the inner triangle");

    // The edge-cover test is exactly "dominating and induces a connected
    // subgraph": the triangle passes, the independent pendants do not.
    let cert = recognize(&g, TargetClass::NcPathTree).unwrap();
    let model = cert.model.as_ref().unwrap();
    assert!(covered_edge_check(&g, model, &connected.vertices));
    assert!(!covered_edge_check(&g, model, &independent.vertices));

    let steiner = steiner_tree(&g, &[3, 4]).unwrap();
    assert_eq!(steiner.vertices, vec![0, 1, 3, 4]);
}

#[test]
fn traversals_follow_the_block_structure() {
    // The 3-sun is 2-connected: a cycle exists and its hops are real edges.
    let sun = graph(SUN3);
    let CycleSearch::Cycle(tour) = hamiltonian_cycle(&sun).unwrap() else {
        panic!("the 3-sun is Hamiltonian");
    };
    let seq = tour.sequence.as_ref().unwrap();
    let mut sorted = seq.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..sun.n()).collect::<Vec<_>>());
    for i in 0..seq.len() {
        assert!(sun.has_edge(seq[i], seq[(i + 1) % seq.len()]));
    }

    // The net's block-cut tree has three leaves: no Hamiltonian path, and
    // the obstruction is that exact count.
    let net = graph(NET);
    assert!(matches!(hamiltonian_cycle(&net).unwrap(), CycleSearch::NotBiconnected(_)));
    let PathSearch::TooManyLeaves(leaves) = hamiltonian_path(&net).unwrap() else {
        panic!("the net has no Hamiltonian path");
    };
    assert_eq!(leaves, 3);

    // A path graph is the degenerate Hamiltonian-path case.
    let p4 = graph(P4);
    let PathSearch::Path(walk) = hamiltonian_path(&p4).unwrap() else {
        panic!("a path graph traces itself");
    };
    let seq = walk.sequence.as_ref().unwrap();
    assert!(seq == &[0, 1, 2, 3] || seq == &[3, 2, 1, 0]);
}

#[test]
fn rejections_name_their_cause() {
    let disconnected = graph("4 2\n0 1\n2 3\n");
    assert!(recognize(&disconnected, TargetClass::Chordal).is_err());

    let claw = graph(K13);
    match mcds(&claw) {
        Err(DominationError::NotInClass(w)) => assert_eq!(w.kind, WitnessKind::Claw),
        other => panic!("a claw is outside the domination domain, got {other:?}"),
    }

    let net = graph(NET);
    match steiner_tree(&net, &[0, 99]) {
        Err(DominationError::TerminalOutOfRange(v)) => assert_eq!(v, 99),
        other => panic!("expected an out-of-range rejection, got {other:?}"),
    }
}
