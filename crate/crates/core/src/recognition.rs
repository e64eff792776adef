//! Certifying recognition of claw-free chordal graphs and their host-shape
//! refinements.
//!
//! [`recognize`] classifies a connected graph against a [`TargetClass`] and
//! returns a [`Certificate`] that stands on its own: members carry a
//! checkable model (or, for plain chordality, the clique tree), non-members
//! carry a forbidden induced subgraph. [`verify_certificate`] re-validates
//! either payload against the graph from scratch, trusting nothing stored.
//! [`find_claw_chordal`] is the search underneath: on a connected chordal
//! graph it yields an induced claw or the annotated model as proof that
//! none exists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chordal::{chordality, clique_tree, ChordalError, CliqueTree, Hole};
use crate::graph::Graph;
use crate::model::{annotate, first_not_in, CrossReport, NcModel, NodeClass};

/// The four graph classes the recognizer certifies, ordered from the most
/// permissive to the most restrictive host shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetClass {
    /// Chordal graphs (hole-free).
    Chordal,
    /// Claw-free chordal graphs: the clique tree hosts a path per vertex.
    NcPathTree,
    /// Additionally 3-sun-free: the host tree has no junction, so it can be
    /// rooted to make every path vertical.
    NcPathRtree,
    /// Additionally net-free: the host tree is itself a path, which is the
    /// proper interval graphs.
    ProperInterval,
}

impl TargetClass {
    pub const ALL: [TargetClass; 4] = [
        TargetClass::Chordal,
        TargetClass::NcPathTree,
        TargetClass::NcPathRtree,
        TargetClass::ProperInterval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TargetClass::Chordal => "chordal",
            TargetClass::NcPathTree => "nc-path-tree",
            TargetClass::NcPathRtree => "nc-path-rtree",
            TargetClass::ProperInterval => "proper-interval",
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetClass {
    type Err = String;

    fn from_str(s: &str) -> Result<TargetClass, String> {
        TargetClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown class `{s}` (expected chordal, nc-path-tree, \
                     nc-path-rtree, or proper-interval)"
                )
            })
    }
}

/// The answer side of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
        })
    }
}

/// The forbidden induced subgraphs a non-member certificate can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// A chordless cycle on at least four vertices.
    Hole,
    /// A center adjacent to three pairwise non-adjacent leaves.
    Claw,
    /// A triangle plus an independent triple, each outside vertex adjacent
    /// to exactly two triangle corners.
    ThreeSun,
    /// A triangle with a private pendant on each corner.
    Net,
}

impl WitnessKind {
    /// True when an induced subgraph of this kind refutes membership in
    /// `class`.
    pub fn refutes(self, class: TargetClass) -> bool {
        match self {
            WitnessKind::Hole => true,
            WitnessKind::Claw => class != TargetClass::Chordal,
            WitnessKind::ThreeSun => {
                matches!(class, TargetClass::NcPathRtree | TargetClass::ProperInterval)
            }
            WitnessKind::Net => class == TargetClass::ProperInterval,
        }
    }
}

/// A forbidden induced subgraph, spelled out as concrete vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    /// Hole: the cycle in order. Claw: the center, then the three leaves.
    /// Three-sun: the triangle, then the outside vertices, position `i + 3`
    /// missing exactly triangle corner `i`. Net: the triangle, then the
    /// pendants, position `i + 3` hanging off corner `i`.
    pub vertices: Vec<usize>,
    /// The claw center, duplicating `vertices[0]`; absent for other kinds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub center: Option<usize>,
}

impl Witness {
    pub fn hole(cycle: Vec<usize>) -> Witness {
        Witness { kind: WitnessKind::Hole, vertices: cycle, center: None }
    }

    pub fn claw(center: usize, mut leaves: [usize; 3]) -> Witness {
        leaves.sort_unstable();
        Witness {
            kind: WitnessKind::Claw,
            vertices: vec![center, leaves[0], leaves[1], leaves[2]],
            center: Some(center),
        }
    }

    pub fn three_sun(triangle: [usize; 3], outside: [usize; 3]) -> Witness {
        let mut vertices = triangle.to_vec();
        vertices.extend_from_slice(&outside);
        Witness { kind: WitnessKind::ThreeSun, vertices, center: None }
    }

    pub fn net(triangle: [usize; 3], pendants: [usize; 3]) -> Witness {
        let mut vertices = triangle.to_vec();
        vertices.extend_from_slice(&pendants);
        Witness { kind: WitnessKind::Net, vertices, center: None }
    }

    /// Checks that the listed vertices induce exactly the named subgraph of
    /// `g`, adjacency by adjacency.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let vs = &self.vertices;
        if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
            return Err(format!("witness vertex {v} is out of range"));
        }
        let mut dedup = vs.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() != vs.len() {
            return Err("witness vertices repeat".into());
        }
        if self.center.is_some() != (self.kind == WitnessKind::Claw) {
            return Err("center is set exactly for claws".into());
        }
        let edge = |i: usize, j: usize| g.has_edge(vs[i], vs[j]);
        match self.kind {
            WitnessKind::Hole => {
                let k = vs.len();
                if k < 4 {
                    return Err("a hole has at least four vertices".into());
                }
                for i in 0..k {
                    for j in (i + 1)..k {
                        let want = j == i + 1 || (i == 0 && j == k - 1);
                        if edge(i, j) != want {
                            return Err(format!(
                                "hole adjacency is wrong between {} and {}",
                                vs[i], vs[j]
                            ));
                        }
                    }
                }
            }
            WitnessKind::Claw => {
                if vs.len() != 4 {
                    return Err("a claw has four vertices".into());
                }
                if self.center != Some(vs[0]) {
                    return Err("the claw center must lead the vertex list".into());
                }
                for i in 1..4 {
                    if !edge(0, i) {
                        return Err(format!("claw leaf {} misses the center", vs[i]));
                    }
                    for j in (i + 1)..4 {
                        if edge(i, j) {
                            return Err(format!(
                                "claw leaves {} and {} are adjacent",
                                vs[i], vs[j]
                            ));
                        }
                    }
                }
            }
            WitnessKind::ThreeSun => {
                if vs.len() != 6 {
                    return Err("a 3-sun has six vertices".into());
                }
                check_triangle(vs, &edge)?;
                check_independent(vs, &edge)?;
                for i in 0..3 {
                    for j in 3..6 {
                        let want = j - 3 != i;
                        if edge(i, j) != want {
                            return Err(format!(
                                "3-sun adjacency is wrong between {} and {}",
                                vs[i], vs[j]
                            ));
                        }
                    }
                }
            }
            WitnessKind::Net => {
                if vs.len() != 6 {
                    return Err("a net has six vertices".into());
                }
                check_triangle(vs, &edge)?;
                check_independent(vs, &edge)?;
                for i in 0..3 {
                    for j in 3..6 {
                        let want = j - 3 == i;
                        if edge(i, j) != want {
                            return Err(format!(
                                "net adjacency is wrong between {} and {}",
                                vs[i], vs[j]
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_triangle(vs: &[usize], edge: &dyn Fn(usize, usize) -> bool) -> Result<(), String> {
    for i in 0..3 {
        for j in (i + 1)..3 {
            if !edge(i, j) {
                return Err(format!("{} and {} do not form the triangle", vs[i], vs[j]));
            }
        }
    }
    Ok(())
}

fn check_independent(vs: &[usize], edge: &dyn Fn(usize, usize) -> bool) -> Result<(), String> {
    for i in 3..6 {
        for j in (i + 1)..6 {
            if edge(i, j) {
                return Err(format!("outside vertices {} and {} are adjacent", vs[i], vs[j]));
            }
        }
    }
    Ok(())
}

/// A self-contained membership answer. Exactly one payload is present:
/// non-members carry a witness; chordal members carry the clique tree;
/// members of the narrower classes carry the model (plus the chosen root
/// for the rooted-tree class).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(rename = "class")]
    pub target_class: TargetClass,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub model: Option<NcModel>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clique_tree: Option<CliqueTree>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<usize>,
}

impl Certificate {
    fn non_member(target_class: TargetClass, witness: Witness) -> Certificate {
        Certificate {
            target_class,
            verdict: Verdict::NonMember,
            witness: Some(witness),
            model: None,
            clique_tree: None,
            root: None,
        }
    }

    fn member_chordal(tree: CliqueTree) -> Certificate {
        Certificate {
            target_class: TargetClass::Chordal,
            verdict: Verdict::Member,
            witness: None,
            model: None,
            clique_tree: Some(tree),
            root: None,
        }
    }

    fn member_model(target_class: TargetClass, model: NcModel, root: Option<usize>) -> Certificate {
        Certificate {
            target_class,
            verdict: Verdict::Member,
            witness: None,
            model: Some(model),
            clique_tree: None,
            root,
        }
    }
}

/// Classifies a connected graph against `target` and returns a certificate
/// for the verdict.
///
/// The pipeline is chordality first (a hole refutes every class), then the
/// clique tree, then the path annotation. An annotation failure converts to
/// a claw via [`extract_claw`]; an annotated model is the membership proof
/// for `nc-path-tree`, and the narrower classes additionally inspect the
/// host shape: a junction yields a 3-sun, and a branching terminal yields a
/// net for the path-shaped class. Rooted-tree member certificates name the
/// lowest terminal node as root.
///
/// Errors on disconnected (or empty) input; run per component instead.
pub fn recognize(g: &Graph, target: TargetClass) -> Result<Certificate, ChordalError> {
    if !g.is_connected() {
        return Err(ChordalError::Disconnected);
    }
    let peo = match chordality(g) {
        Ok(peo) => peo,
        Err(hole) => return Ok(Certificate::non_member(target, Witness::hole(hole.cycle))),
    };
    let t = clique_tree(g, &peo)?;
    if target == TargetClass::Chordal {
        return Ok(Certificate::member_chordal(t));
    }
    let model = match annotate(t) {
        Ok(model) => model,
        Err((t, report)) => {
            return Ok(Certificate::non_member(target, extract_claw(g, &t, &report)));
        }
    };
    let junction = model.node_class.iter().position(|&c| c == NodeClass::Junction);
    match target {
        TargetClass::Chordal => unreachable!("handled before annotation"),
        TargetClass::NcPathTree => Ok(Certificate::member_model(target, model, None)),
        TargetClass::NcPathRtree => match junction {
            Some(x) => Ok(Certificate::non_member(target, three_sun_at(&model.tree, x))),
            None => {
                let root = model
                    .node_class
                    .iter()
                    .position(|&c| c == NodeClass::Terminal)
                    .expect("a junction-free host tree has a terminal node");
                Ok(Certificate::member_model(target, model, Some(root)))
            }
        },
        TargetClass::ProperInterval => {
            if let Some(x) = junction {
                return Ok(Certificate::non_member(target, three_sun_at(&model.tree, x)));
            }
            match (0..model.tree.cliques.len()).find(|&x| model.tree.adj[x].len() >= 3) {
                Some(x) => Ok(Certificate::non_member(target, net_at(&model.tree, x))),
                None => Ok(Certificate::member_model(target, model, None)),
            }
        }
    }
}

/// The outcome of a claw search on a connected chordal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClawSearch {
    Found(Witness),
    /// No claw exists; the model certifies the absence.
    ClawFree(NcModel),
}

/// Finds an induced claw in a connected chordal graph, or certifies that
/// none exists by producing the path model of its clique tree.
///
/// Returns the offending hole when the graph is not chordal. Panics on
/// disconnected input.
pub fn find_claw_chordal(g: &Graph) -> Result<ClawSearch, Hole> {
    assert!(g.is_connected(), "claw search requires a connected graph");
    let peo = chordality(g)?;
    let t = clique_tree(g, &peo).expect("a connected graph with a valid elimination order");
    match annotate(t) {
        Ok(model) => Ok(ClawSearch::ClawFree(model)),
        Err((t, report)) => Ok(ClawSearch::Found(extract_claw(g, &t, &report))),
    }
}

/// Converts an annotation failure into a concrete induced claw of `g`.
///
/// `r` must have been produced by a failed annotation of `t`. Each report
/// variant pins down where two vertex paths are forced to cross or branch,
/// and the crossing always frees two tree branches whose private vertices
/// complete the claw.
pub fn extract_claw(g: &Graph, t: &CliqueTree, r: &CrossReport) -> Witness {
    let w = match *r {
        CrossReport::NonPathVertex { vertex, center, branches } => {
            // The three branch cliques each hold a vertex missing from the
            // center clique; those live in pairwise foreign subtrees, so
            // they see `vertex` and nothing else of each other.
            let pick = |y: usize| first_not_in(&t.cliques[y], &t.cliques[center]);
            Witness::claw(vertex, [pick(branches[0]), pick(branches[1]), pick(branches[2])])
        }
        CrossReport::MixedHighDegree { node, leaf_vertex, through_vertex } => {
            claw_from_mixed(t, node, leaf_vertex, through_vertex)
        }
        CrossReport::FatJunction { node } => claw_from_fat_junction(t, node),
        CrossReport::JunctionBadNeighbor { junction, neighbor } => {
            claw_from_bad_neighbor(t, junction, neighbor)
        }
        CrossReport::ProperIntervalFailure { center, leaves } => Witness::claw(center, leaves),
    };
    debug_assert_eq!(w.verify(g), Ok(()), "extracted claw must be induced");
    w
}

fn occ_contains(t: &CliqueTree, v: usize, x: usize) -> bool {
    t.occ[v].binary_search(&x).is_ok()
}

fn separator_between(t: &CliqueTree, x: usize, y: usize) -> &[usize] {
    let &(_, ei) = t.adj[x]
        .iter()
        .find(|&&(nb, _)| nb == y)
        .expect("the two nodes are adjacent in the tree");
    &t.edges[ei].separator
}

/// The occurrence path of `v` in node order, walked from its lowest-id end.
fn induced_path(t: &CliqueTree, v: usize) -> Vec<usize> {
    let occ = &t.occ[v];
    if occ.len() == 1 {
        return vec![occ[0]];
    }
    let deg_in = |x: usize| {
        t.adj[x].iter().filter(|&&(y, _)| occ.binary_search(&y).is_ok()).count()
    };
    let start = occ
        .iter()
        .copied()
        .find(|&x| deg_in(x) <= 1)
        .expect("the occurrence set induces a path");
    let mut path = Vec::with_capacity(occ.len());
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        path.push(cur);
        let next = t.adj[cur]
            .iter()
            .map(|&(y, _)| y)
            .find(|&y| y != prev && occ.binary_search(&y).is_ok());
        match next {
            Some(y) => {
                prev = cur;
                cur = y;
            }
            None => break,
        }
    }
    debug_assert_eq!(path.len(), occ.len(), "the occurrence set induces a path");
    path
}

/// The tree neighbors of `x` that lie on `v`'s path, sorted ascending.
/// At most two once every occurrence set is a path.
fn branches_at(t: &CliqueTree, v: usize, x: usize) -> Vec<usize> {
    let mut out: Vec<usize> = t.adj[x]
        .iter()
        .map(|&(y, _)| y)
        .filter(|&y| occ_contains(t, v, y))
        .collect();
    out.sort_unstable();
    out
}

/// A claw from two vertices whose paths cross: `other`'s path meets
/// `center`'s but contains neither of its end nodes. The private vertices
/// found just past the two ends live in separate branches of the host
/// tree, so each is adjacent to `center` and to nothing else of the claw.
fn claw_from_crossing(t: &CliqueTree, center: usize, other: usize) -> Witness {
    let path = induced_path(t, center);
    assert!(path.len() >= 2, "a crossed path spans at least two nodes");
    let head = first_not_in(&t.cliques[path[0]], &t.cliques[path[1]]);
    let tail = first_not_in(&t.cliques[path[path.len() - 1]], &t.cliques[path[path.len() - 2]]);
    Witness::claw(center, [other, head, tail])
}

/// A claw at a node `x` of degree ≥ 3 where `v` ends its path but `u` runs
/// through. The walk narrows down to a pair of vertices whose paths share
/// exactly `x` (or exactly the nodes interior to one of them), at which
/// point [`claw_from_crossing`] applies.
fn claw_from_mixed(t: &CliqueTree, x: usize, v: usize, u: usize) -> Witness {
    if t.occ[v].len() == 1 {
        // v lives only in x, which is interior to u's path.
        return claw_from_crossing(t, u, v);
    }
    let pv = induced_path(t, v);
    debug_assert!(pv[0] == x || pv[pv.len() - 1] == x, "v ends at x");
    let y = if pv[0] == x { pv[1] } else { pv[pv.len() - 2] };
    if !occ_contains(t, u, y) {
        // v leaves x in a direction u does not use, so their paths share
        // only x.
        return claw_from_crossing(t, u, v);
    }
    // u runs through x along y and yp; x has a third direction ypp.
    let ub = branches_at(t, u, x);
    debug_assert_eq!(ub.len(), 2, "u runs through x");
    let yp = if ub[0] == y { ub[1] } else { ub[0] };
    let ypp = t.adj[x]
        .iter()
        .map(|&(nb, _)| nb)
        .filter(|&nb| nb != y && nb != yp)
        .min()
        .expect("the node has at least three tree neighbors");
    let u1 = separator_between(t, x, ypp)[0];
    let b1 = branches_at(t, u1, x);
    debug_assert!(b1.contains(&ypp));
    if b1.len() == 1 {
        // u1's path ends at x going into ypp, clear of u's two directions.
        return claw_from_crossing(t, u, u1);
    }
    let d = if b1[0] == ypp { b1[1] } else { b1[0] };
    if d != y {
        // u1 runs through x avoiding y, so it crosses v's path only at x.
        return claw_from_crossing(t, u1, v);
    }
    // Both u and u1 use y. A member of x's clique missing from y's clique
    // must run elsewhere, freeing one of the three pairings below.
    let u2 = first_not_in(&t.cliques[x], &t.cliques[y]);
    let b2 = branches_at(t, u2, x);
    debug_assert!(!b2.contains(&y));
    if !b2.contains(&yp) {
        claw_from_crossing(t, u, u2)
    } else if !b2.contains(&ypp) {
        claw_from_crossing(t, u1, u2)
    } else {
        // u2 uses exactly yp and ypp, leaving direction y to v alone.
        claw_from_crossing(t, u2, v)
    }
}

/// A claw at a junction with four or more tree directions: two members of
/// the junction clique with disjoint direction pairs cross only there.
fn claw_from_fat_junction(t: &CliqueTree, x: usize) -> Witness {
    debug_assert!(t.adj[x].len() >= 4);
    let members = &t.cliques[x];
    // One sweep over the incident separators records each member's two
    // directions (every member runs through a junction).
    let nv = members.last().unwrap() + 1;
    let mut d1 = vec![usize::MAX; nv];
    let mut d2 = vec![usize::MAX; nv];
    for &(y, ei) in &t.adj[x] {
        for &m in &t.edges[ei].separator {
            if d1[m] == usize::MAX {
                d1[m] = y;
            } else {
                debug_assert_eq!(d2[m], usize::MAX, "junction members run through");
                d2[m] = y;
            }
        }
    }
    let shape = |m: usize| (d1[m].min(d2[m]), d1[m].max(d2[m]));
    let m0 = members[0];
    let (a, b) = shape(m0);
    // Members whose pair misses {a, b} cross m0 outright; the rest sort by
    // which of the two they use.
    let mut on_a: Vec<(usize, usize)> = Vec::new();
    let mut on_b: Vec<(usize, usize)> = Vec::new();
    for &m in members {
        let (c, d) = shape(m);
        let hits_a = c == a || d == a;
        let hits_b = c == b || d == b;
        if !hits_a && !hits_b {
            return claw_from_crossing(t, m0, m);
        }
        if hits_a && !hits_b {
            on_a.push((m, if c == a { d } else { c }));
        } else if hits_b && !hits_a {
            on_b.push((m, if c == b { d } else { c }));
        }
    }
    // Every pair meets {a, b} now. Cliques are incomparable, so direction a
    // misses some member and so does b: both lists are populated, and two
    // entries with different third directions are disjoint pairs.
    let &(ma0, ta0) = on_a.first().expect("some member avoids direction b");
    if let Some(&(mb, _)) = on_b.iter().find(|&&(_, tb)| tb != ta0) {
        return claw_from_crossing(t, ma0, mb);
    }
    let &(mb0, tb0) = on_b.first().expect("some member avoids direction a");
    if let Some(&(ma, _)) = on_a.iter().find(|&&(_, ta)| ta != tb0) {
        return claw_from_crossing(t, ma, mb0);
    }
    unreachable!("four or more covered directions cannot share one third node")
}

/// A claw forced by a three-way junction `x` whose neighbor `y1` is not
/// all-terminal: some vertex runs through both nodes, and sorting the
/// junction members by their direction pairs always frees a crossing.
fn claw_from_bad_neighbor(t: &CliqueTree, x: usize, y1: usize) -> Witness {
    debug_assert_eq!(t.adj[x].len(), 3, "larger junctions are reported first");
    let mut xn: Vec<usize> = t.adj[x].iter().map(|&(nb, _)| nb).collect();
    xn.sort_unstable();
    let others: Vec<usize> = xn.into_iter().filter(|&nb| nb != y1).collect();
    let (o1, o2) = (others[0], others[1]);
    // The first member of x's clique running toward both p and q; every
    // direction pair at a junction is used because cliques are
    // incomparable.
    let pair_rep = |p: usize, q: usize| -> usize {
        t.cliques[x]
            .iter()
            .copied()
            .find(|&m| occ_contains(t, m, p) && occ_contains(t, m, q))
            .expect("every direction pair at a junction is used")
    };
    let mut through_min = usize::MAX;
    let mut leaf_at_y1 = false;
    for &m in &t.cliques[y1] {
        if branches_at(t, m, y1).len() == 2 {
            if through_min == usize::MAX {
                through_min = m;
            }
        } else {
            leaf_at_y1 = true;
        }
    }
    if !leaf_at_y1 {
        // y1 is itself a three-way junction.
        debug_assert_eq!(t.adj[y1].len(), 3);
        let q = pair_rep(y1, o1);
        let r = pair_rep(y1, o2);
        let zq = {
            let b = branches_at(t, q, y1);
            if b[0] == x {
                b[1]
            } else {
                b[0]
            }
        };
        let zr = {
            let b = branches_at(t, r, y1);
            if b[0] == x {
                b[1]
            } else {
                b[0]
            }
        };
        if zq != zr {
            // q and r separate on both sides of the edge x–y1.
            return claw_from_crossing(t, q, r);
        }
        // Both continue into zq; a member of y1's clique heading for the
        // third direction instead separates from one of them.
        let z_other = t.adj[y1]
            .iter()
            .map(|&(nb, _)| nb)
            .find(|&nb| nb != x && nb != zq)
            .expect("three directions at y1");
        let s = t.cliques[y1]
            .iter()
            .copied()
            .find(|&m| occ_contains(t, m, x) && occ_contains(t, m, z_other))
            .expect("every direction pair at a junction is used");
        let js = {
            let b = branches_at(t, s, x);
            if b[0] == y1 {
                b[1]
            } else {
                b[0]
            }
        };
        return if js == o2 { claw_from_crossing(t, q, s) } else { claw_from_crossing(t, r, s) };
    }
    // y1 is mixed with exactly two directions, x and z.
    debug_assert_eq!(t.adj[y1].len(), 2, "a mixed node of higher degree is reported first");
    assert!(through_min != usize::MAX, "a non-terminal node has a through member");
    let w = through_min;
    let z = t.adj[y1]
        .iter()
        .map(|&(nb, _)| nb)
        .find(|&nb| nb != x)
        .expect("two directions at y1");
    let jw = {
        let b = branches_at(t, w, x);
        if b[0] == y1 {
            b[1]
        } else {
            b[0]
        }
    };
    let j2 = if jw == o1 { o2 } else { o1 };
    // A member pairing y1 with the other side that stays clear of z shares
    // exactly {x, y1} with w's path.
    let mut vprime = usize::MAX;
    for &m in &t.cliques[x] {
        if occ_contains(t, m, y1) && occ_contains(t, m, j2) {
            if !occ_contains(t, m, z) {
                return claw_from_crossing(t, w, m);
            }
            if vprime == usize::MAX {
                vprime = m;
            }
        }
    }
    assert!(vprime != usize::MAX, "every direction pair at a junction is used");
    // All of those reach z, so vprime's path covers j2–x–y1–z; now a
    // {y1, jw} member clear of z crosses it the same way.
    for &m in &t.cliques[x] {
        if occ_contains(t, m, y1) && occ_contains(t, m, jw) && !occ_contains(t, m, z) {
            return claw_from_crossing(t, vprime, m);
        }
    }
    // Every member of x's clique that touches y1 also reaches z. A member
    // of y1's clique missing from z's clique is then confined to y1 alone,
    // which sits interior to w's path.
    let u = first_not_in(&t.cliques[y1], &t.cliques[z]);
    debug_assert_eq!(t.occ[u].len(), 1);
    claw_from_crossing(t, w, u)
}

/// The six-vertex witness at a three-way junction `x`: for each direction,
/// the first member of the junction clique avoiding it, plus the first
/// vertex of that neighbor clique outside the junction clique. The former
/// form a triangle inside `x`, the latter an independent triple, matched
/// off against each other.
fn three_sun_at(t: &CliqueTree, x: usize) -> Witness {
    let mut ys: Vec<usize> = t.adj[x].iter().map(|&(nb, _)| nb).collect();
    ys.sort_unstable();
    debug_assert_eq!(ys.len(), 3, "junctions in an accepted model are three-way");
    let pick_inner = |y: usize| {
        t.cliques[x]
            .iter()
            .copied()
            .find(|&m| !occ_contains(t, m, y))
            .expect("cliques are incomparable")
    };
    let inner = [pick_inner(ys[0]), pick_inner(ys[1]), pick_inner(ys[2])];
    let pick_outer = |y: usize| first_not_in(&t.cliques[y], &t.cliques[x]);
    let outer = [pick_outer(ys[0]), pick_outer(ys[1]), pick_outer(ys[2])];
    Witness::three_sun(inner, outer)
}

/// The six-vertex witness at a terminal node `x` with three or more tree
/// directions: the separator minima toward the first three neighbors form
/// a triangle (all paths end at `x`, so they head into pairwise foreign
/// branches), and each branch contributes a private pendant.
fn net_at(t: &CliqueTree, x: usize) -> Witness {
    let mut ys: Vec<usize> = t.adj[x].iter().map(|&(nb, _)| nb).collect();
    ys.sort_unstable();
    debug_assert!(ys.len() >= 3);
    let tri = [
        separator_between(t, x, ys[0])[0],
        separator_between(t, x, ys[1])[0],
        separator_between(t, x, ys[2])[0],
    ];
    let pick_pendant = |y: usize| first_not_in(&t.cliques[y], &t.cliques[x]);
    let pend = [pick_pendant(ys[0]), pick_pendant(ys[1]), pick_pendant(ys[2])];
    Witness::net(tri, pend)
}

/// Re-validates a certificate against the graph from first principles.
///
/// Member payloads are checked structurally (the tree really is a clique
/// tree of `g`, the annotation really belongs to that tree, the host shape
/// matches the class); non-member witnesses are checked vertex by vertex
/// and must be of a kind that refutes the class. Returns the first reason
/// for rejection.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> Result<(), String> {
    match c.verdict {
        Verdict::NonMember => {
            if c.model.is_some() || c.clique_tree.is_some() || c.root.is_some() {
                return Err("a non-member certificate carries only a witness".into());
            }
            let w = c
                .witness
                .as_ref()
                .ok_or_else(|| "a non-member certificate needs a witness".to_string())?;
            if !w.kind.refutes(c.target_class) {
                return Err(format!(
                    "a {:?} witness does not refute membership in {}",
                    w.kind, c.target_class
                ));
            }
            w.verify(g)
        }
        Verdict::Member => {
            if c.witness.is_some() {
                return Err("a member certificate carries no witness".into());
            }
            if c.target_class == TargetClass::Chordal {
                if c.model.is_some() || c.root.is_some() {
                    return Err("a chordal member certificate carries only the clique tree".into());
                }
                let t = c
                    .clique_tree
                    .as_ref()
                    .ok_or_else(|| "a chordal member certificate needs a clique tree".to_string())?;
                return verify_clique_tree(g, t);
            }
            if c.clique_tree.is_some() {
                return Err("the clique tree rides inside the model".into());
            }
            let m = c
                .model
                .as_ref()
                .ok_or_else(|| "a member certificate needs a model".to_string())?;
            verify_clique_tree(g, &m.tree)?;
            let fresh = annotate(m.tree.clone())
                .map_err(|_| "the graph contains a claw, so no path model exists".to_string())?;
            if fresh.role != m.role || fresh.node_class != m.node_class
                || fresh.path_ends != m.path_ends
            {
                return Err("the stored annotation does not match the tree".into());
            }
            let junction = m.node_class.iter().position(|&cl| cl == NodeClass::Junction);
            match c.target_class {
                TargetClass::Chordal => unreachable!("handled above"),
                TargetClass::NcPathTree => {
                    if c.root.is_some() {
                        return Err("only rooted-tree certificates carry a root".into());
                    }
                }
                TargetClass::NcPathRtree => {
                    if let Some(x) = junction {
                        return Err(format!("the host tree has a junction at node {x}"));
                    }
                    let r = c
                        .root
                        .ok_or_else(|| "a rooted-tree member certificate names its root".to_string())?;
                    if r >= m.tree.cliques.len() {
                        return Err(format!("root {r} is out of range"));
                    }
                    if m.node_class[r] != NodeClass::Terminal {
                        return Err(format!("root {r} is not a terminal node"));
                    }
                }
                TargetClass::ProperInterval => {
                    if c.root.is_some() {
                        return Err("only rooted-tree certificates carry a root".into());
                    }
                    if let Some(x) = junction {
                        return Err(format!("the host tree has a junction at node {x}"));
                    }
                    if let Some(x) =
                        (0..m.tree.cliques.len()).find(|&x| m.tree.adj[x].len() >= 3)
                    {
                        return Err(format!("the host tree branches at node {x}"));
                    }
                }
            }
            Ok(())
        }
    }
}

fn sorted_intersection(xs: &[usize], ys: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(xs[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn sorted_disjoint(xs: &[usize], ys: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Structural validation of a clique tree against its graph: the nodes are
/// exactly the maximal cliques, the edges form a tree whose separators are
/// the true intersections and whose mirror is the stored adjacency, every
/// vertex occurrence set is a nonempty subtree, and every graph edge lies
/// in some node. Thanks to the Helly property of subtrees, these checks
/// also force the node set to be complete.
fn verify_clique_tree(g: &Graph, t: &CliqueTree) -> Result<(), String> {
    let n = g.n();
    let q = t.cliques.len();
    if q == 0 {
        return Err("the clique tree has no nodes".into());
    }
    let mut count = vec![0usize; n];
    for (i, c) in t.cliques.iter().enumerate() {
        if c.is_empty() {
            return Err(format!("node {i} is empty"));
        }
        if !c.windows(2).all(|w| w[0] < w[1]) {
            return Err(format!("node {i} is not sorted strictly ascending"));
        }
        if *c.last().unwrap() >= n {
            return Err(format!("node {i} mentions a vertex outside the graph"));
        }
        for &v in c {
            for &w in g.neighbors(v) {
                count[w] += 1;
            }
        }
        for &v in c {
            if count[v] + 1 != c.len() {
                return Err(format!("node {i} is not a clique"));
            }
        }
        for &v in c {
            for &w in g.neighbors(v) {
                if count[w] == c.len() && c.binary_search(&w).is_err() {
                    return Err(format!("node {i} is not maximal (vertex {w} extends it)"));
                }
            }
        }
        for &v in c {
            for &w in g.neighbors(v) {
                count[w] = 0;
            }
        }
    }
    let mut by_content: Vec<&Vec<usize>> = t.cliques.iter().collect();
    by_content.sort();
    if by_content.windows(2).any(|w| w[0] == w[1]) {
        return Err("two nodes hold the same clique".into());
    }
    if t.edges.len() + 1 != q {
        return Err(format!("a tree on {q} nodes needs {} edges", q - 1));
    }
    let mut mirror: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q];
    for (i, e) in t.edges.iter().enumerate() {
        if e.a >= q || e.b >= q || e.a == e.b {
            return Err(format!("edge {i} is malformed"));
        }
        let inter = sorted_intersection(&t.cliques[e.a], &t.cliques[e.b]);
        if inter.is_empty() {
            return Err(format!("edge {i} has an empty separator"));
        }
        if e.separator != inter {
            return Err(format!("edge {i} does not store the clique intersection"));
        }
        mirror[e.a].push((e.b, i));
        mirror[e.b].push((e.a, i));
    }
    if t.adj.len() != q {
        return Err("the adjacency table length is wrong".into());
    }
    for x in 0..q {
        let mut stored = t.adj[x].clone();
        stored.sort_unstable();
        mirror[x].sort_unstable();
        if stored != mirror[x] {
            return Err(format!("the adjacency of node {x} does not mirror the edge list"));
        }
    }
    let mut seen = vec![false; q];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &(y, _) in &t.adj[x] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    if reached != q {
        return Err("the tree edges do not connect all nodes".into());
    }
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in t.cliques.iter().enumerate() {
        for &v in c {
            occ[v].push(i);
        }
    }
    if t.occ != occ {
        return Err("the stored occurrence lists are wrong".into());
    }
    if let Some(v) = (0..n).find(|&v| occ[v].is_empty()) {
        return Err(format!("vertex {v} appears in no clique"));
    }
    let mut span = vec![0usize; n];
    for e in &t.edges {
        for &v in &e.separator {
            span[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| span[v] + 1 != occ[v].len()) {
        return Err(format!("the occurrences of vertex {v} do not form a subtree"));
    }
    for (u, v) in g.edges() {
        if sorted_disjoint(&occ[u], &occ[v]) {
            return Err(format!("edge {u}-{v} lies in no clique"));
        }
    }
    if t.total_size != t.cliques.iter().map(|c| c.len()).sum::<usize>() {
        return Err("the stored total size is wrong".into());
    }
    Ok(())
}
