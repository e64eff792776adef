//! Annotated clique-tree models of claw-free chordal graphs.
//!
//! A clique tree where every vertex occupies a *path* of tree nodes, and the
//! paths pairwise do not cross, witnesses claw-freeness. This module builds
//! that annotation: per-occurrence leaf/internal roles, the
//! terminal/mixed/junction classification of tree nodes, the partition of
//! tree edges into junction stars and terminal-to-terminal paths, and the
//! per-path auxiliary interval graph used to detect crossings (and later to
//! drive domination and Hamiltonicity routines).

use crate::chordal::{CliqueTree, TreeEdge};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// How a vertex meets one tree node of its path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    /// The node is an end of the vertex's path (single-node paths count).
    LeafOfPath,
    /// The node lies strictly inside the vertex's path.
    Internal,
}

/// Classification of a tree node by the roles of the vertices placed there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeClass {
    /// Every vertex whose path touches the node ends there.
    Terminal,
    /// Some vertex ends there and some vertex passes through.
    Mixed,
    /// Every vertex whose path touches the node passes through.
    Junction,
}

/// A clique tree together with the path annotation that certifies
/// claw-freeness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NcModel {
    pub tree: CliqueTree,
    /// `role[v][i]` is the role of vertex `v` at node `tree.occ[v][i]`.
    pub role: Vec<Vec<Role>>,
    /// Per tree node.
    pub node_class: Vec<NodeClass>,
    /// `path_ends[v]`: the two end nodes of `v`'s path (equal for a
    /// single-node path).
    pub path_ends: Vec<(usize, usize)>,
}

/// Where and why the path annotation failed. Each variant names the
/// vertices/nodes that let a claw be produced mechanically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossReport {
    /// `vertex`'s occurrences branch at tree node `center` into (at least)
    /// the three directions `branches`.
    NonPathVertex { vertex: usize, center: usize, branches: [usize; 3] },
    /// A node of degree ≥ 3 where `leaf_vertex` ends but `through_vertex`
    /// passes through.
    MixedHighDegree { node: usize, leaf_vertex: usize, through_vertex: usize },
    /// A junction with four or more neighbors.
    FatJunction { node: usize },
    /// A junction next to a node that is not a terminal.
    JunctionBadNeighbor { junction: usize, neighbor: usize },
    /// Two vertex paths cross along a terminal-to-terminal path; the
    /// offending claw is already mapped back to original vertices.
    ProperIntervalFailure { center: usize, leaves: [usize; 3] },
}

/// One piece of the edge partition of the host tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ModelPiece {
    JunctionStar(JunctionStar),
    TerminalPath(TerminalPath),
}

/// A junction together with its three terminal neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JunctionStar {
    pub center: usize,
    /// Sorted ascending.
    pub leaves: [usize; 3],
}

/// A maximal path whose two end nodes are terminals and whose interior
/// nodes (if any) are mixed of degree two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalPath {
    /// Node sequence `z_1 .. z_k`, `k ≥ 2`.
    pub nodes: Vec<usize>,
}

/// The auxiliary graph of one terminal-to-terminal path: the vertices
/// living strictly inside the path plus two sentinels, with an explicit
/// interval model. It is proper interval exactly when no two vertex paths
/// cross on the piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub graph: Graph,
    /// Sentinel guarding the `z_1` end; adjacent exactly to `G_{z_1} ∩ G_{z_2}`.
    pub u1: usize,
    /// Sentinel guarding the `z_k` end; adjacent exactly to `G_{z_{k−1}} ∩ G_{z_k}`.
    pub uk: usize,
    /// Aux vertex → original vertex; `None` for the sentinels.
    pub vertex_map: Vec<Option<usize>>,
    /// Closed intervals realizing the aux graph: two aux vertices are
    /// adjacent iff their intervals overlap.
    pub intervals: Vec<(usize, usize)>,
}

/// Builds the path annotation of a clique tree, or reports why none exists.
/// On failure the tree is handed back alongside the report so a claw can be
/// extracted from it.
pub fn annotate(t: CliqueTree) -> Result<NcModel, (CliqueTree, CrossReport)> {
    let q = t.cliques.len();
    let n = t.occ.len();

    // occdeg[v][i]: degree of node occ[v][i] inside the subtree induced by
    // occ[v] — computed by crediting, per tree edge, every vertex of its
    // separator (exactly the vertices whose occurrence sets use that edge).
    let mut occdeg: Vec<Vec<u32>> = t.occ.iter().map(|o| vec![0; o.len()]).collect();
    {
        let mut ptr = vec![0usize; n];
        let mut slot_of: Vec<Vec<usize>> = Vec::with_capacity(q);
        for x in 0..q {
            let mut s = Vec::with_capacity(t.cliques[x].len());
            for &v in &t.cliques[x] {
                debug_assert_eq!(t.occ[v][ptr[v]], x);
                s.push(ptr[v]);
                ptr[v] += 1;
            }
            slot_of.push(s);
        }
        let mut slot_at = vec![0usize; n];
        for x in 0..q {
            for (i, &v) in t.cliques[x].iter().enumerate() {
                slot_at[v] = slot_of[x][i];
            }
            for &(_, eidx) in &t.adj[x] {
                for &v in &t.edges[eidx].separator {
                    occdeg[v][slot_at[v]] += 1;
                }
            }
        }
    }

    // Stage 1: every occurrence set must be a path, i.e. no occurrence may
    // have three branches.
    for v in 0..n {
        for (i, &d) in occdeg[v].iter().enumerate() {
            if d >= 3 {
                let center = t.occ[v][i];
                let mut branches = Vec::with_capacity(3);
                for &(y, _) in &t.adj[center] {
                    if t.occ[v].binary_search(&y).is_ok() {
                        branches.push(y);
                        if branches.len() == 3 {
                            break;
                        }
                    }
                }
                let report = CrossReport::NonPathVertex {
                    vertex: v,
                    center,
                    branches: [branches[0], branches[1], branches[2]],
                };
                return Err((t, report));
            }
        }
    }

    let role: Vec<Vec<Role>> = occdeg
        .iter()
        .map(|ds| {
            ds.iter()
                .map(|&d| if d <= 1 { Role::LeafOfPath } else { Role::Internal })
                .collect()
        })
        .collect();
    let path_ends: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let ends: Vec<usize> = t.occ[v]
                .iter()
                .zip(&role[v])
                .filter(|&(_, r)| *r == Role::LeafOfPath)
                .map(|(&x, _)| x)
                .collect();
            match ends[..] {
                [x] => (x, x),
                [x, y] => (x, y),
                _ => unreachable!("a path has one or two ends"),
            }
        })
        .collect();

    let mut leaf_count = vec![0usize; q];
    let mut member_count = vec![0usize; q];
    for v in 0..n {
        for (&x, r) in t.occ[v].iter().zip(&role[v]) {
            member_count[x] += 1;
            if *r == Role::LeafOfPath {
                leaf_count[x] += 1;
            }
        }
    }
    let node_class: Vec<NodeClass> = (0..q)
        .map(|x| {
            if leaf_count[x] == member_count[x] {
                NodeClass::Terminal
            } else if leaf_count[x] == 0 {
                NodeClass::Junction
            } else {
                NodeClass::Mixed
            }
        })
        .collect();

    // Stage 2: a node where paths both end and pass through must be an
    // interior node of a single corridor.
    for x in 0..q {
        if node_class[x] == NodeClass::Mixed && t.adj[x].len() >= 3 {
            let leaf_vertex = *t.cliques[x]
                .iter()
                .find(|&&v| role_at(&t, &role, v, x) == Role::LeafOfPath)
                .expect("mixed nodes have a leaf occurrence");
            let through_vertex = *t.cliques[x]
                .iter()
                .find(|&&v| role_at(&t, &role, v, x) == Role::Internal)
                .expect("mixed nodes have a through occurrence");
            let report =
                CrossReport::MixedHighDegree { node: x, leaf_vertex, through_vertex };
            return Err((t, report));
        }
    }

    // Stage 3: junctions must have exactly three neighbors. Checked for
    // every junction before stage 4 so that later reports may assume all
    // junctions are three-way.
    for x in 0..q {
        if node_class[x] == NodeClass::Junction {
            debug_assert!(t.adj[x].len() >= 3, "a pass-through-only node has ≥ 3 branches");
            if t.adj[x].len() >= 4 {
                return Err((t, CrossReport::FatJunction { node: x }));
            }
        }
    }

    // Stage 4: every neighbor of a junction must be a terminal.
    for x in 0..q {
        if node_class[x] != NodeClass::Junction {
            continue;
        }
        for &(y, _) in &t.adj[x] {
            if node_class[y] != NodeClass::Terminal {
                return Err((t, CrossReport::JunctionBadNeighbor { junction: x, neighbor: y }));
            }
        }
    }

    // Stage 5: no two paths may cross along a terminal-to-terminal
    // corridor; equivalently, each corridor's auxiliary interval graph must
    // be claw-free.
    for piece in pieces_from_classes(&t, &node_class) {
        if let ModelPiece::TerminalPath(p) = piece {
            if p.nodes.len() >= 3 {
                if let Some([center, a, b, c]) = scan_terminal_path(&t, &p.nodes) {
                    let report =
                        CrossReport::ProperIntervalFailure { center, leaves: [a, b, c] };
                    return Err((t, report));
                }
            }
        }
    }

    Ok(NcModel { tree: t, role, node_class, path_ends })
}

fn role_at(t: &CliqueTree, role: &[Vec<Role>], v: usize, x: usize) -> Role {
    let i = t.occ[v].binary_search(&x).expect("x in occ[v]");
    role[v][i]
}

impl NcModel {
    /// The role of vertex `v` at node `x` (which must lie on `v`'s path).
    pub fn role_at(&self, v: usize, x: usize) -> Role {
        role_at(&self.tree, &self.role, v, x)
    }

    /// The nodes of `v`'s path in order, from `path_ends[v].0` to
    /// `path_ends[v].1`.
    pub fn path_nodes(&self, v: usize) -> Vec<usize> {
        let (start, finish) = self.path_ends[v];
        let mut nodes = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while cur != finish {
            let next = self
                .tree
                .adj[cur]
                .iter()
                .map(|&(y, _)| y)
                .find(|&y| y != prev && self.tree.occ[v].binary_search(&y).is_ok())
                .expect("path continues toward its other end");
            nodes.push(next);
            prev = cur;
            cur = next;
        }
        nodes
    }

    /// True when the underlying graph is complete (one clique, no pieces).
    pub fn is_complete(&self) -> bool {
        self.tree.cliques.len() == 1
    }
}

/// Splits the tree edges into junction stars and maximal terminal-delimited
/// paths. Stars come first (by junction node id), then paths in discovery
/// order (scanning terminals by id).
pub fn partition_edges(m: &NcModel) -> Vec<ModelPiece> {
    pieces_from_classes(&m.tree, &m.node_class)
}

fn pieces_from_classes(t: &CliqueTree, node_class: &[NodeClass]) -> Vec<ModelPiece> {
    let q = t.cliques.len();
    let mut pieces = Vec::new();
    let mut used = vec![false; t.edges.len()];
    for x in 0..q {
        if node_class[x] == NodeClass::Junction {
            let mut leaves: Vec<usize> = Vec::with_capacity(3);
            for &(y, e) in &t.adj[x] {
                used[e] = true;
                leaves.push(y);
            }
            leaves.sort_unstable();
            pieces.push(ModelPiece::JunctionStar(JunctionStar {
                center: x,
                leaves: [leaves[0], leaves[1], leaves[2]],
            }));
        }
    }
    for x in 0..q {
        if node_class[x] != NodeClass::Terminal {
            continue;
        }
        for &(y, e) in &t.adj[x] {
            if used[e] || node_class[y] == NodeClass::Junction {
                continue;
            }
            let mut nodes = vec![x];
            let (mut prev, mut cur, mut edge) = (x, y, e);
            loop {
                used[edge] = true;
                nodes.push(cur);
                if node_class[cur] == NodeClass::Terminal {
                    break;
                }
                debug_assert_eq!(t.adj[cur].len(), 2, "interior nodes are degree-2 mixed");
                let &(next, ne) = t.adj[cur]
                    .iter()
                    .find(|&&(z, _)| z != prev)
                    .expect("mixed node continues");
                prev = cur;
                cur = next;
                edge = ne;
            }
            pieces.push(ModelPiece::TerminalPath(TerminalPath { nodes }));
        }
    }
    debug_assert!(used.iter().all(|&u| u), "every tree edge lies in exactly one piece");
    pieces
}

fn edge_between<'a>(t: &'a CliqueTree, a: usize, b: usize) -> &'a TreeEdge {
    let &(_, e) = t.adj[a]
        .iter()
        .find(|&&(y, _)| y == b)
        .expect("nodes are tree-adjacent");
    &t.edges[e]
}

/// First element of `xs ∖ ys` for sorted lists (exists whenever `xs ⊄ ys`).
pub(crate) fn first_not_in(xs: &[usize], ys: &[usize]) -> usize {
    let mut j = 0;
    for &x in xs {
        while j < ys.len() && ys[j] < x {
            j += 1;
        }
        if j >= ys.len() || ys[j] != x {
            return x;
        }
    }
    panic!("maximal cliques are incomparable");
}

/// Position runs (1-based, clamped to appearances on the piece) of every
/// vertex living strictly inside the path `z_1..z_k`, plus the aux id map.
fn interior_runs(t: &CliqueTree, path: &[usize]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let k = path.len();
    let mut ids: Vec<usize> = Vec::new();
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut index: HashMap<usize, usize> = HashMap::new();
    for p in 1..k - 1 {
        for &v in &t.cliques[path[p]] {
            match index.get(&v) {
                Some(&i) => runs[i].1 = p + 1,
                None => {
                    index.insert(v, ids.len());
                    ids.push(v);
                    runs.push((p + 1, p + 1));
                }
            }
        }
    }
    for &v in &edge_between(t, path[0], path[1]).separator {
        let i = index[&v]; // separator members occupy z_2, hence are interior
        runs[i].0 = 1;
    }
    for &v in &edge_between(t, path[k - 2], path[k - 1]).separator {
        let i = index[&v];
        runs[i].1 = k;
    }
    (ids, runs)
}

/// The interval model of one terminal-to-terminal path: the vertices living
/// strictly inside it (for `k = 2`, the separator clique) together with the
/// position runs they occupy, 1-based along `p.nodes`. Two of these vertices
/// are adjacent in the host graph exactly when their runs overlap.
pub fn piece_intervals(m: &NcModel, p: &TerminalPath) -> (Vec<usize>, Vec<(usize, usize)>) {
    let t = &m.tree;
    let k = p.nodes.len();
    assert!(k >= 2);
    if k == 2 {
        let sep = edge_between(t, p.nodes[0], p.nodes[1]).separator.clone();
        let runs = vec![(1, 2); sep.len()];
        (sep, runs)
    } else {
        interior_runs(t, &p.nodes)
    }
}

/// Builds the auxiliary graph of a terminal-to-terminal path. For `k = 2`
/// the piece hosts no interior nodes and the aux graph degenerates to the
/// separator clique flanked by both sentinels.
pub fn build_aux_graph(g: &Graph, m: &NcModel, p: &TerminalPath) -> AuxGraph {
    let t = &m.tree;
    let k = p.nodes.len();
    let (ids, runs) = piece_intervals(m, p);
    let n_int = ids.len();
    let (u1, uk) = (n_int, n_int + 1);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    if k == 2 {
        for a in 0..n_int {
            for b in 0..a {
                edges.push((b, a));
            }
            edges.push((a, u1));
            edges.push((a, uk));
        }
    } else {
        let mut index: HashMap<usize, usize> = HashMap::new();
        for (i, &v) in ids.iter().enumerate() {
            index.insert(v, i);
        }
        // Emit each interior pair once, at the first interior position both
        // occupy; clamp runs to interior positions for that purpose.
        let el = |a: usize| runs[a].0.max(2);
        for pos in 1..k - 1 {
            let members: Vec<usize> = t.cliques[p.nodes[pos]].iter().map(|v| index[v]).collect();
            for &a in &members {
                if el(a) != pos + 1 {
                    continue;
                }
                for &b in &members {
                    if el(b) < pos + 1 || (el(b) == pos + 1 && b < a) {
                        edges.push((b.min(a), b.max(a)));
                    }
                }
            }
        }
        for &v in &edge_between(t, p.nodes[0], p.nodes[1]).separator {
            edges.push((index[&v], u1));
        }
        for &v in &edge_between(t, p.nodes[k - 2], p.nodes[k - 1]).separator {
            edges.push((index[&v], uk));
        }
    }

    let graph = Graph::from_edges(n_int + 2, &edges).expect("aux edges are simple");
    // Vertices sharing a node of the piece are adjacent in the host graph.
    debug_assert!(edges
        .iter()
        .filter(|&&(a, b)| a < n_int && b < n_int)
        .all(|&(a, b)| g.has_edge(ids[a], ids[b])));

    let mut vertex_map: Vec<Option<usize>> = ids.iter().map(|&v| Some(v)).collect();
    vertex_map.push(None);
    vertex_map.push(None);
    let mut intervals: Vec<(usize, usize)> = if k == 2 {
        vec![(2, 3); n_int]
    } else {
        runs.iter().map(|&(l, r)| (2 * l, 2 * r)).collect()
    };
    if k == 2 {
        intervals.push((1, 2));
        intervals.push((3, 4));
    } else {
        intervals.push((3, 3));
        intervals.push((2 * k - 1, 2 * k - 1));
    }
    AuxGraph { graph, u1, uk, vertex_map, intervals }
}

/// Looks for a claw in the aux interval model of path `z_1..z_k` (`k ≥ 3`)
/// and maps it back to original vertices (sentinels become private
/// neighbors of the corresponding end terminal). Returns
/// `[center, leaf, leaf, leaf]`.
///
/// In an interval family, a claw exists at middle leaf `b` iff some
/// interval ends before `b` starts (take the rightmost such end `amax`),
/// some interval starts after `b` ends (take the leftmost such start
/// `dmin`), and some third interval spans `[amax, dmin]`. The spanning
/// interval meets all three leaves, and the two outer leaves are chosen
/// most favorably, so checking only `amax`/`dmin` per middle is complete.
fn scan_terminal_path(t: &CliqueTree, path: &[usize]) -> Option<[usize; 4]> {
    let k = path.len();
    let (ids, runs) = interior_runs(t, path);
    // Items: interior vertices then the two sentinels, as scaled intervals.
    let mut items: Vec<(usize, usize)> = runs.iter().map(|&(l, r)| (2 * l, 2 * r)).collect();
    items.push((3, 3));
    items.push((2 * k - 1, 2 * k - 1));
    let hi = 2 * k + 2;

    // maxr_below[c]: item with the largest right end < c.
    let mut bucket_r: Vec<Option<usize>> = vec![None; hi];
    let mut bucket_l: Vec<Option<usize>> = vec![None; hi];
    let mut best_r_at_l: Vec<Option<usize>> = vec![None; hi];
    for (i, &(l, r)) in items.iter().enumerate() {
        if bucket_r[r].is_none() {
            bucket_r[r] = Some(i);
        }
        if bucket_l[l].is_none() {
            bucket_l[l] = Some(i);
        }
        match best_r_at_l[l] {
            Some(j) if items[j].1 >= r => {}
            _ => best_r_at_l[l] = Some(i),
        }
    }
    let mut maxr_below: Vec<Option<usize>> = vec![None; hi];
    let mut carry = None;
    for c in 0..hi {
        maxr_below[c] = carry;
        if bucket_r[c].is_some() {
            carry = bucket_r[c];
        }
    }
    let mut minl_above: Vec<Option<usize>> = vec![None; hi];
    carry = None;
    for c in (0..hi).rev() {
        minl_above[c] = carry;
        if bucket_l[c].is_some() {
            carry = bucket_l[c];
        }
    }
    let mut best_span: Vec<Option<usize>> = vec![None; hi];
    carry = None;
    for c in 0..hi {
        if let Some(i) = best_r_at_l[c] {
            match carry {
                Some(j) if items[j].1 >= items[i].1 => {}
                _ => carry = Some(i),
            }
        }
        best_span[c] = carry;
    }

    let original = |i: usize| -> usize {
        if i < ids.len() {
            ids[i]
        } else if i == ids.len() {
            first_not_in(&t.cliques[path[0]], &t.cliques[path[1]])
        } else {
            first_not_in(&t.cliques[path[k - 1]], &t.cliques[path[k - 2]])
        }
    };

    for (b, &(lb, rb)) in items.iter().enumerate() {
        let a = match maxr_below[lb] {
            Some(a) => a,
            None => continue,
        };
        let d = match minl_above[rb] {
            Some(d) => d,
            None => continue,
        };
        if let Some(c) = best_span[items[a].1] {
            if items[c].1 >= items[d].0 {
                debug_assert!(c < ids.len(), "a spanning interval is never a sentinel point");
                return Some([original(c), original(a), original(b), original(d)]);
            }
        }
    }
    None
}

/// DOT rendering of an annotated model: terminals are boxes, mixed nodes
/// circles, junctions triangles; every edge is labeled with the vertices
/// whose paths use it (its separator).
pub fn to_dot(m: &NcModel) -> String {
    use std::fmt::Write;
    let mut out = String::from("graph model {\n");
    for (x, k) in m.tree.cliques.iter().enumerate() {
        let shape = match m.node_class[x] {
            NodeClass::Terminal => "box",
            NodeClass::Mixed => "circle",
            NodeClass::Junction => "triangle",
        };
        let label: Vec<String> = k.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  n{x} [shape={shape}, label=\"{{{}}}\"];", label.join(","));
    }
    for e in &m.tree.edges {
        let label: Vec<String> = e.separator.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.a, e.b, label.join(","));
    }
    out.push_str("}\n");
    out
}
