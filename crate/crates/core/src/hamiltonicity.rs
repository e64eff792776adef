//! Spanning cycles, paths, and minimum-leaf trees on claw-free chordal
//! graphs.
//!
//! On this class a Hamiltonian cycle exists exactly when the graph is
//! 2-connected and has at least three vertices, a Hamiltonian path exactly
//! when the block-cut tree is a path, and in general the fewest leaves any
//! spanning tree can have equals the number of leaf blocks. All three
//! objects are produced constructively from the clique-tree model: every
//! terminal-delimited piece contributes two internally disjoint end-to-end
//! paths through its interval model, every junction three twin-class hops,
//! and every terminal clique a run of private vertices. Those payloads
//! partition the vertex set and form an Eulerian multigraph on the terminal
//! nodes; an Euler tour concatenates them into a Hamiltonian cycle. The
//! path and tree constructions work per block: end blocks open a cycle at
//! their cut vertex, and inner blocks rewire the multigraph along the tree
//! path between their two cut vertices so an Euler trail connects them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::CliqueTree;
use crate::domination::DominationError;
use crate::graph::{block_cut_tree, Graph};
use crate::model::{build_aux_graph, partition_edges, AuxGraph, ModelPiece, NcModel, NodeClass};
use crate::recognition::Witness;

/// Why a graph (or auxiliary graph) fails the connectivity demanded by a
/// spanning cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NotBiconnected {
    /// Not even connected.
    Disconnected,
    /// Removing this vertex disconnects the graph.
    CutVertex(usize),
    /// Fewer than three vertices; the value is the vertex count.
    TooSmall(usize),
}

/// Input rejection shared by every spanning-structure search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamiltonicityError {
    /// The searches only make sense on connected graphs.
    #[error("graph is not connected")]
    Disconnected,
    /// The graph is outside the class; the witness certifies why.
    #[error("graph is not a claw-free chordal graph")]
    NotInClass(Witness),
}

/// Outcome of a Hamiltonian cycle search on a member graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CycleSearch {
    /// A Hamiltonian cycle.
    Cycle(SpanResult),
    /// The obstruction: a cut vertex or fewer than three vertices.
    NotBiconnected(NotBiconnected),
}

/// Outcome of a Hamiltonian path search on a member graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PathSearch {
    /// A Hamiltonian path.
    Path(SpanResult),
    /// The block-cut tree is not a path; the value counts its leaf blocks.
    TooManyLeaves(usize),
}

/// How well a spanning structure approximates a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpanKind {
    HamCycle,
    HamPath,
    SpanningTree,
}

/// A spanning cycle, path, or tree, ready for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanResult {
    pub kind: SpanKind,
    /// Vertex sequence of a cycle (cyclically adjacent) or path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<usize>>,
    /// Edge list of a spanning tree, each edge sorted, the list ascending.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
    /// Number of degree-one vertices of the spanning tree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf_count: Option<usize>,
}

impl SpanResult {
    fn cycle(sequence: Vec<usize>) -> SpanResult {
        SpanResult { kind: SpanKind::HamCycle, sequence: Some(sequence), edges: None, leaf_count: None }
    }

    fn path(sequence: Vec<usize>) -> SpanResult {
        SpanResult { kind: SpanKind::HamPath, sequence: Some(sequence), edges: None, leaf_count: None }
    }

    fn tree(mut edges: Vec<(usize, usize)>, leaf_count: usize) -> SpanResult {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        SpanResult { kind: SpanKind::SpanningTree, sequence: None, edges: Some(edges), leaf_count: Some(leaf_count) }
    }
}

/// The role of one trace edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceKind {
    /// One of the two internally disjoint end-to-end paths of a
    /// terminal-delimited piece. Each piece contributes exactly two.
    TerminalPairPath,
    /// One twin class of a junction clique, hopping between two of the
    /// junction's terminal neighbors.
    JunctionHop,
    /// The vertices private to one terminal clique.
    SelfLoop,
}

/// An edge of the trace multigraph together with its vertex payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEdge {
    /// Terminal nodes the edge connects; equal for a self-loop.
    pub a: usize,
    pub b: usize,
    pub kind: TraceKind,
    /// A path through the host graph, written from the `a` side to the `b`
    /// side: its first vertex lies in clique `a` and its last in clique `b`.
    pub payload: Vec<usize>,
}

/// An Eulerian multigraph on the terminal nodes of the model whose edge
/// payloads partition the vertex set. Concatenating the payloads along an
/// Euler tour — reversing a payload whenever its edge is crossed from the
/// `b` side — yields a Hamiltonian cycle of the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceMultigraph {
    /// Terminal node ids, ascending.
    pub nodes: Vec<usize>,
    pub edges: Vec<TraceEdge>,
}

fn member_model(g: &Graph) -> Result<NcModel, HamiltonicityError> {
    crate::domination::model_of(g).map_err(|e| match e {
        DominationError::Disconnected => HamiltonicityError::Disconnected,
        DominationError::NotInClass(w) => HamiltonicityError::NotInClass(w),
        _ => unreachable!("model construction raises no terminal-set errors"),
    })
}

/// Sorts the auxiliary vertices into an umbrella order: neighborhoods are
/// consecutive, so consecutive vertices of a connected graph are adjacent
/// and — once no vertex separates its neighbors — so are vertices two apart.
///
/// Sorting the clique ranges by (left, right) does the job. For `u < v < w`
/// with `u ~ w`, `u ~ v` is immediate (`v` starts no later than `w`); and if
/// `v` ended before `w` started, the vertex closing `u`'s first clique
/// together with `v` and `w` would hang three pairwise non-adjacent
/// neighbors off `u` — a claw, which the class (and the piece scan that
/// admitted this auxiliary graph) rules out. Sentinels are re-coordinated to
/// single cliques pinned before and after every interior range, which keeps
/// their adjacency and makes them the first and last vertices of the order.
///
/// Returns the order and the re-coordinated intervals indexed by auxiliary
/// vertex.
fn umbrella_order(a: &AuxGraph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = a.graph.n();
    debug_assert!(n >= 3, "an auxiliary graph has two sentinels and a separator");
    let mut iv = a.intervals.clone();
    let mut lmin = usize::MAX;
    let mut rmax = 0;
    for i in 0..n {
        if i != a.u1 && i != a.uk {
            lmin = lmin.min(iv[i].0);
            rmax = rmax.max(iv[i].1);
        }
    }
    iv[a.u1] = (lmin - 2, lmin);
    iv[a.uk] = (rmax, rmax + 2);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&i| (iv[i].0, iv[i].1, a.vertex_map[i].unwrap_or(usize::MAX)));
    debug_assert_eq!(order[0], a.u1);
    debug_assert_eq!(order[n - 1], a.uk);
    (order, iv)
}

fn overlap(iv: &[(usize, usize)], x: usize, y: usize) -> bool {
    iv[x].0.max(iv[y].0) <= iv[x].1.min(iv[y].1)
}

/// Two internally disjoint paths from one sentinel to the other that
/// together visit every auxiliary vertex, or the obstruction. Both paths
/// are returned as auxiliary vertex sequences starting at `u1` and ending
/// at `uk`; `vertex_map` translates their interiors back to the host graph.
///
/// In umbrella order the two paths are the even- and odd-indexed vertices,
/// each walked left to right; the construction only needs every vertex to
/// overlap its second successor, which fails exactly at a cut vertex.
pub fn proper_interval_two_paths(a: &AuxGraph) -> Result<(Vec<usize>, Vec<usize>), NotBiconnected> {
    let (order, iv) = umbrella_order(a);
    let n = order.len();
    for w in order.windows(2) {
        if !overlap(&iv, w[0], w[1]) {
            return Err(NotBiconnected::Disconnected);
        }
    }
    for w in order.windows(3) {
        if !overlap(&iv, w[0], w[2]) {
            let cut = a.vertex_map[w[1]].expect("sentinels never separate their piece");
            return Err(NotBiconnected::CutVertex(cut));
        }
    }
    let mut q1: Vec<usize> = order.iter().copied().step_by(2).collect();
    if n % 2 == 0 {
        q1.push(order[n - 1]);
    }
    let mut q2: Vec<usize> = std::iter::once(order[0]).chain(order.iter().copied().skip(1).step_by(2)).collect();
    if n % 2 == 1 {
        q2.push(order[n - 1]);
    }
    let mut seen = vec![0u32; n];
    for q in [&q1, &q2] {
        assert_eq!(*q.first().unwrap(), a.u1);
        assert_eq!(*q.last().unwrap(), a.uk);
        for w in q.windows(2) {
            assert!(a.graph.has_edge(w[0], w[1]), "cover paths step along edges");
        }
        for &v in q {
            seen[v] += 1;
        }
    }
    assert!(
        (0..n).all(|v| seen[v] == if v == a.u1 || v == a.uk { 2 } else { 1 }),
        "cover paths share exactly the sentinels"
    );
    Ok((q1, q2))
}

/// A Hamiltonian path of the auxiliary graph from `u1` to `uk`, as an
/// auxiliary vertex sequence. Exists whenever the graph is connected: the
/// umbrella order itself is such a path.
pub fn proper_interval_ham_path(a: &AuxGraph) -> Result<Vec<usize>, NotBiconnected> {
    let (order, iv) = umbrella_order(a);
    for w in order.windows(2) {
        if !overlap(&iv, w[0], w[1]) {
            return Err(NotBiconnected::Disconnected);
        }
    }
    Ok(order)
}

/// Builds the trace multigraph of a 2-connected member graph with at least
/// three vertices. Junction hops carry their twin class ascending; the two
/// paths of each piece run from the lower piece end to the upper; private
/// runs are ascending.
pub fn build_trace(g: &Graph, m: &NcModel) -> Result<TraceMultigraph, NotBiconnected> {
    if !g.is_connected() {
        return Err(NotBiconnected::Disconnected);
    }
    if g.n() < 3 {
        return Err(NotBiconnected::TooSmall(g.n()));
    }
    let bc = block_cut_tree(g);
    if let Some(&c) = bc.cut_vertices.first() {
        return Err(NotBiconnected::CutVertex(c));
    }
    Ok(trace_of(g, m))
}

/// Trace construction proper; assumes the checks of [`build_trace`].
fn trace_of(g: &Graph, m: &NcModel) -> TraceMultigraph {
    let t = &m.tree;
    let q = t.cliques.len();
    let nodes: Vec<usize> = (0..q).filter(|&x| m.node_class[x] == NodeClass::Terminal).collect();
    let occ_has = |v: usize, x: usize| t.occ[v].binary_search(&x).is_ok();

    let mut edges: Vec<TraceEdge> = Vec::new();
    for piece in partition_edges(m) {
        match piece {
            ModelPiece::JunctionStar(js) => {
                let [x, y, z] = js.leaves;
                for (p, r) in [(x, y), (y, z), (z, x)] {
                    let mut payload: Vec<usize> = t.cliques[js.center]
                        .iter()
                        .copied()
                        .filter(|&v| occ_has(v, p) && occ_has(v, r))
                        .collect();
                    payload.sort_unstable();
                    debug_assert!(!payload.is_empty(), "junction classes are nonempty");
                    edges.push(TraceEdge { a: p, b: r, kind: TraceKind::JunctionHop, payload });
                }
            }
            ModelPiece::TerminalPath(tp) => {
                let aux = build_aux_graph(g, m, &tp);
                let (q1, q2) = proper_interval_two_paths(&aux)
                    .expect("pieces of a 2-connected graph have no cut vertices");
                let (a, b) = (tp.nodes[0], *tp.nodes.last().unwrap());
                for qp in [q1, q2] {
                    let payload: Vec<usize> = qp.iter().filter_map(|&i| aux.vertex_map[i]).collect();
                    edges.push(TraceEdge { a, b, kind: TraceKind::TerminalPairPath, payload });
                }
            }
        }
    }
    for &x in &nodes {
        let mut payload: Vec<usize> =
            t.cliques[x].iter().copied().filter(|&v| t.occ[v].len() == 1).collect();
        payload.sort_unstable();
        if !payload.is_empty() {
            edges.push(TraceEdge { a: x, b: x, kind: TraceKind::SelfLoop, payload });
        }
    }

    #[cfg(debug_assertions)]
    {
        let mut times = vec![0u32; g.n()];
        for e in &edges {
            for &v in &e.payload {
                times[v] += 1;
            }
        }
        assert!(times.iter().all(|&c| c == 1), "payloads partition the vertex set");
    }
    TraceMultigraph { nodes, edges }
}

/// Walks every edge of the multigraph exactly once, starting at `start`.
/// The walk is closed when every node has even degree and otherwise runs
/// from `start` to the other odd-degree node, which must exist for the walk
/// to cover everything. Each step reports the edge index and whether it was
/// crossed from its `a` side.
fn euler_tour(tm: &TraceMultigraph, start: usize) -> Vec<(usize, bool)> {
    let mut pos = std::collections::HashMap::new();
    for (i, &x) in tm.nodes.iter().enumerate() {
        pos.insert(x, i);
    }
    let ends: Vec<(usize, usize)> = tm.edges.iter().map(|e| (pos[&e.a], pos[&e.b])).collect();
    let q = tm.nodes.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q];
    for (i, &(a, b)) in ends.iter().enumerate() {
        adj[a].push((i, b));
        if a != b {
            adj[b].push((i, a));
        }
    }
    let mut used = vec![false; ends.len()];
    let mut ptr = vec![0usize; q];
    let mut tour: Vec<(usize, bool)> = Vec::with_capacity(ends.len());
    let mut stack: Vec<(usize, Option<(usize, bool)>)> = vec![(pos[&start], None)];
    while let Some(&(v, via)) = stack.last() {
        if ptr[v] < adj[v].len() {
            let (e, w) = adj[v][ptr[v]];
            ptr[v] += 1;
            if !used[e] {
                used[e] = true;
                stack.push((w, Some((e, ends[e].0 == v))));
            }
        } else {
            stack.pop();
            if let Some(step) = via {
                tour.push(step);
            }
        }
    }
    tour.reverse();
    assert!(used.iter().all(|&u| u), "the trace multigraph is connected");
    tour
}

/// Concatenates the payloads along a tour, reversing edges crossed from
/// their `b` side.
fn tour_vertices(tm: &TraceMultigraph, tour: &[(usize, bool)]) -> Vec<usize> {
    let mut seq = Vec::new();
    for &(e, forward) in tour {
        let p = &tm.edges[e].payload;
        if forward {
            seq.extend_from_slice(p);
        } else {
            seq.extend(p.iter().rev().copied());
        }
    }
    seq
}

/// True when `seq` visits every vertex once, stepping along edges; for
/// `closed` sequences the last vertex must also see the first.
fn spans(g: &Graph, seq: &[usize], closed: bool) -> bool {
    if seq.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in seq {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if !seq.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    !closed || seq.len() < 3 || g.has_edge(seq[0], seq[seq.len() - 1])
}

/// Hamiltonian cycle of a 2-connected member with at least three vertices.
fn member_cycle(g: &Graph, m: &NcModel) -> Vec<usize> {
    if m.is_complete() {
        return (0..g.n()).collect();
    }
    let tm = trace_of(g, m);
    let tour = euler_tour(&tm, tm.nodes[0]);
    let seq = tour_vertices(&tm, &tour);
    debug_assert!(spans(g, &seq, true));
    seq
}

/// Searches for a Hamiltonian cycle. Members either carry one or expose a
/// concrete obstruction: fewer than three vertices or a cut vertex (the
/// smallest is reported).
pub fn hamiltonian_cycle(g: &Graph) -> Result<CycleSearch, HamiltonicityError> {
    let m = member_model(g)?;
    if g.n() < 3 {
        return Ok(CycleSearch::NotBiconnected(NotBiconnected::TooSmall(g.n())));
    }
    let bc = block_cut_tree(g);
    if let Some(&c) = bc.cut_vertices.first() {
        return Ok(CycleSearch::NotBiconnected(NotBiconnected::CutVertex(c)));
    }
    Ok(CycleSearch::Cycle(SpanResult::cycle(member_cycle(g, &m))))
}

/// The single terminal clique hosting `v`, which must be private to it.
/// Cut vertices of the ambient graph are exactly such vertices in the model
/// of their block, and the per-block path constructions lean on that.
fn private_terminal(m: &NcModel, v: usize) -> usize {
    let occ = &m.tree.occ[v];
    assert!(
        occ.len() == 1 && m.node_class[occ[0]] == NodeClass::Terminal,
        "a gluing vertex is private to one terminal clique of its block"
    );
    occ[0]
}

/// Hamiltonian path of a block ending at `c`: a cycle with one edge at `c`
/// dropped. The block is an edge, a clique, or 2-connected.
fn block_path_ending_at(bg: &Graph, c: usize) -> Vec<usize> {
    let n = bg.n();
    if n == 2 {
        return vec![1 - c, c];
    }
    let m = member_model(bg).expect("blocks of a member graph are members");
    if m.is_complete() {
        let mut p: Vec<usize> = (0..n).filter(|&v| v != c).collect();
        p.push(c);
        return p;
    }
    let seq = member_cycle(bg, &m);
    let k = seq.iter().position(|&v| v == c).expect("the cycle spans every vertex");
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&seq[k + 1..]);
    out.extend_from_slice(&seq[..=k]);
    out
}

/// Hamiltonian path of a block from `v` to `w`, both private to terminal
/// cliques (or the block an edge or clique). The two endpoints are dropped
/// from their private runs; when their terminals coincide a closed Euler
/// tour of the trace multigraph already starts and ends in that clique, and
/// otherwise the multigraph is rewired along the tree path between the two
/// terminals (see [`reroute_between`]) so that exactly those two nodes go
/// odd and an Euler trail runs from one to the other. Framing the payload
/// concatenation with `v` and `w` gives the path.
fn block_path_between(bg: &Graph, v: usize, w: usize) -> Vec<usize> {
    let n = bg.n();
    if n == 2 {
        return vec![v, w];
    }
    let m = member_model(bg).expect("blocks of a member graph are members");
    if m.is_complete() {
        let mut p = vec![v];
        p.extend((0..n).filter(|&x| x != v && x != w));
        p.push(w);
        return p;
    }
    let x = private_terminal(&m, v);
    let y = private_terminal(&m, w);
    let mut tm = trace_of(bg, &m);
    for e in &mut tm.edges {
        e.payload.retain(|&u| u != v && u != w);
    }
    tm.edges.retain(|e| !e.payload.is_empty());
    if x != y {
        reroute_between(bg, &m, &mut tm, x, y);
    }
    let mut seq = tour_vertices(&tm, &euler_tour(&tm, x));
    let mut out = Vec::with_capacity(n);
    out.push(v);
    out.append(&mut seq);
    out.push(w);
    debug_assert!(spans(bg, &out, false));
    out
}

/// The unique path between two clique-tree nodes, as node ids.
fn tree_path(t: &CliqueTree, from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; t.cliques.len()];
    prev[from] = from;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        if u == to {
            break;
        }
        for &(z, _) in &t.adj[u] {
            if prev[z] == usize::MAX {
                prev[z] = u;
                stack.push(z);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Rewires the trace multigraph so that an Euler trail runs from terminal
/// `x` to terminal `y`.
///
/// The multigraph of a 2-connected member is even everywhere, so an
/// end-to-end trail cannot exist as is. Along the tree path from `x` to `y`
/// two substitutions fix the parity without breaking payload adjacency:
///
/// * a piece on the path gives up its two parallel edges for a single edge
///   whose payload walks the whole interior once, in umbrella order — the
///   order is a Hamiltonian path of the auxiliary graph whenever it is
///   connected, and it starts and ends in the two end cliques;
/// * a junction on the path gives up its three hops for two edges detouring
///   through its third terminal `t`: one carries the twin class shared with
///   the entering side, the other the class shared with `t` followed by the
///   class the junction passes straight through. Every seam stays inside the
///   junction clique, and the ends lie in the right terminal cliques.
///
/// Each substitution flips the parity of exactly the two on-path terminals
/// it joins, so the terminals strictly inside the path flip twice and only
/// `x` and `y` end up odd.
fn reroute_between(bg: &Graph, m: &NcModel, tm: &mut TraceMultigraph, x: usize, y: usize) {
    let t = &m.tree;
    let path = tree_path(t, x, y);
    let occ_has = |v: usize, node: usize| t.occ[v].binary_search(&node).is_ok();
    let pieces = partition_edges(m);
    let mut i = 0;
    while i + 1 < path.len() {
        let a = path[i];
        let mut k = i + 1;
        while m.node_class[path[k]] != NodeClass::Terminal {
            k += 1;
        }
        let b = path[k];
        let mid = &path[i + 1..k];
        if mid.len() == 1 && m.node_class[mid[0]] == NodeClass::Junction {
            let j = mid[0];
            let third = t.adj[j]
                .iter()
                .map(|&(z, _)| z)
                .find(|&z| z != a && z != b)
                .expect("a junction has three terminal neighbors");
            // Two junctions share at most one terminal (the host is a
            // tree), so endpoint containment pins this junction's hops.
            let triple = [a, b, third];
            tm.edges.retain(|e| {
                e.kind != TraceKind::JunctionHop
                    || !(triple.contains(&e.a) && triple.contains(&e.b))
            });
            let class = |p: usize, r: usize| -> Vec<usize> {
                t.cliques[j].iter().copied().filter(|&u| occ_has(u, p) && occ_has(u, r)).collect()
            };
            let mut through = class(third, b);
            through.extend(class(a, b));
            tm.edges.push(TraceEdge {
                a,
                b: third,
                kind: TraceKind::JunctionHop,
                payload: class(a, third),
            });
            tm.edges.push(TraceEdge { a: third, b, kind: TraceKind::JunctionHop, payload: through });
        } else {
            debug_assert!(mid.iter().all(|&z| m.node_class[z] == NodeClass::Mixed));
            tm.edges.retain(|e| {
                e.kind != TraceKind::TerminalPairPath
                    || !((e.a == a && e.b == b) || (e.a == b && e.b == a))
            });
            // The tree has one piece per terminal pair it connects.
            let tp = pieces
                .iter()
                .find_map(|p| match p {
                    ModelPiece::TerminalPath(tp) => {
                        let ends = (tp.nodes[0], *tp.nodes.last().unwrap());
                        (ends == (a, b) || ends == (b, a)).then_some(tp)
                    }
                    ModelPiece::JunctionStar(_) => None,
                })
                .expect("a mixed run on the tree path lies inside one piece");
            let aux = build_aux_graph(bg, m, tp);
            let order = proper_interval_ham_path(&aux)
                .expect("pieces of a connected member have connected auxiliary graphs");
            let payload: Vec<usize> = order.iter().filter_map(|&i| aux.vertex_map[i]).collect();
            tm.edges.push(TraceEdge {
                a: tp.nodes[0],
                b: *tp.nodes.last().unwrap(),
                kind: TraceKind::TerminalPairPath,
                payload,
            });
        }
        i = k;
    }
}

/// Searches for a Hamiltonian path. Members carry one exactly when their
/// block-cut tree is a path; otherwise the leaf-block count is the
/// obstruction. The path is assembled block by block: each leaf block
/// contributes a cycle opened at its cut vertex, each inner block an
/// end-to-end path between its two cut vertices.
pub fn hamiltonian_path(g: &Graph) -> Result<PathSearch, HamiltonicityError> {
    let m = member_model(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(PathSearch::Path(SpanResult::path(vec![0])));
    }
    if n == 2 {
        return Ok(PathSearch::Path(SpanResult::path(vec![0, 1])));
    }
    let bc = block_cut_tree(g);
    if bc.cut_vertices.is_empty() {
        // 2-connected: a cycle read off as a sequence is already a path.
        return Ok(PathSearch::Path(SpanResult::path(member_cycle(g, &m))));
    }
    if bc.leaf_count > 2 {
        return Ok(PathSearch::TooManyLeaves(bc.leaf_count));
    }

    let start = (0..bc.blocks.len())
        .find(|&b| bc.block_cuts[b].len() == 1)
        .expect("a block-cut path has leaf blocks");
    let mut seq: Vec<usize> = Vec::with_capacity(n);
    let mut cur = start;
    let mut entry: Option<usize> = None;
    loop {
        let (bg, ids) = g.induced(&bc.blocks[cur]);
        let local =
            |v: usize| ids.binary_search(&v).expect("cut vertices belong to their blocks");
        let cuts = &bc.block_cuts[cur];
        match entry {
            None => {
                let p = block_path_ending_at(&bg, local(cuts[0]));
                seq.extend(p.into_iter().map(|i| ids[i]));
                entry = Some(cuts[0]);
            }
            Some(e) if cuts.len() == 1 => {
                debug_assert_eq!(cuts[0], e);
                let mut p = block_path_ending_at(&bg, local(e));
                p.reverse();
                seq.extend(p.into_iter().skip(1).map(|i| ids[i]));
                break;
            }
            Some(e) => {
                debug_assert_eq!(cuts.len(), 2, "inner blocks of a block-cut path hold two cuts");
                let next = if cuts[0] == e { cuts[1] } else { cuts[0] };
                let p = block_path_between(&bg, local(e), local(next));
                seq.extend(p.into_iter().skip(1).map(|i| ids[i]));
                entry = Some(next);
            }
        }
        let through = entry.unwrap();
        let hosts = bc.blocks_of(through);
        debug_assert_eq!(hosts.len(), 2, "cuts of a block-cut path join two blocks");
        cur = if hosts[0] == cur { hosts[1] } else { hosts[0] };
    }
    debug_assert!(spans(g, &seq, false));
    Ok(PathSearch::Path(SpanResult::path(seq)))
}

/// A spanning tree with as few leaves as possible. The minimum equals the
/// number of leaf blocks (or two when the graph is 2-connected with an
/// edge, or zero for a single vertex): each leaf block donates a
/// Hamiltonian path ending at its cut vertex, every other block one
/// between two of its cut vertices, and the union glues into a tree whose
/// leaves are exactly the free path ends inside the leaf blocks.
pub fn min_leaf_spanning_tree(g: &Graph) -> Result<SpanResult, HamiltonicityError> {
    let m = member_model(g)?;
    let n = g.n();
    if n == 1 {
        return Ok(SpanResult::tree(Vec::new(), 0));
    }
    let bc = block_cut_tree(g);
    if bc.cut_vertices.is_empty() {
        let seq = if n == 2 { vec![0, 1] } else { member_cycle(g, &m) };
        let edges = seq.windows(2).map(|w| (w[0], w[1])).collect();
        return Ok(SpanResult::tree(edges, 2));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    for (b, verts) in bc.blocks.iter().enumerate() {
        let (bg, ids) = g.induced(verts);
        let local =
            |v: usize| ids.binary_search(&v).expect("cut vertices belong to their blocks");
        let cuts = &bc.block_cuts[b];
        let p = if cuts.len() == 1 {
            block_path_ending_at(&bg, local(cuts[0]))
        } else {
            // Further cut vertices simply sit inside the path.
            block_path_between(&bg, local(cuts[0]), local(cuts[1]))
        };
        edges.extend(p.windows(2).map(|w| (ids[w[0]], ids[w[1]])));
    }
    let mut degree = vec![0usize; n];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let leaf_count = degree.iter().filter(|&&d| d == 1).count();
    debug_assert_eq!(edges.len(), n - 1);
    debug_assert_eq!(leaf_count, bc.leaf_count, "one leaf per leaf block");
    Ok(SpanResult::tree(edges, leaf_count))
}
