//! Lexicographic breadth-first search, chordality certification (perfect
//! elimination order or induced-cycle witness), maximal cliques and clique
//! trees.
//!
//! The clique tree is the backbone for everything downstream: its nodes are
//! the maximal cliques of a chordal graph, the cliques containing any fixed
//! vertex form a connected subtree, and every tree edge stores the exact
//! separator (the intersection of its two endpoint cliques).

use crate::graph::Graph;
use thiserror::Error;

const NIL: usize = usize::MAX;

/// Errors for operations that take an elimination order as a precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalError {
    /// The supplied order is not a permutation of the vertices.
    #[error("order is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
    /// The supplied order is not a perfect elimination order; `vertex` is
    /// the first vertex whose later neighbors fail to form a clique.
    #[error("not a perfect elimination order (violation at vertex {vertex})")]
    InvalidPeo { vertex: usize },
    /// The operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,
}

/// A lexicographic breadth-first search order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexBfsOrder {
    /// `visit[i]` is the i-th visited vertex.
    pub visit: Vec<usize>,
    /// `num[v]` is the visit position of `v` (inverse of `visit`).
    pub num: Vec<usize>,
}

/// A perfect elimination order: each vertex's neighbors occurring later in
/// `order` form a clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peo {
    pub order: Vec<usize>,
}

/// An induced cycle on at least four vertices, witnessing non-chordality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hole {
    pub cycle: Vec<usize>,
}

/// Plain LexBFS. Linear time; within a tie class the choice is deterministic
/// but otherwise unspecified.
pub fn lexbfs(g: &Graph) -> LexBfsOrder {
    lexbfs_impl(g, None)
}

/// LexBFS breaking every tie toward the vertex with the largest `priority`.
/// Scans the whole tie class per step, so it costs O(n²) in the worst case;
/// intended for generating alternative orders on small graphs.
pub fn lexbfs_with_priority(g: &Graph, priority: &[usize]) -> LexBfsOrder {
    assert_eq!(priority.len(), g.n());
    lexbfs_impl(g, Some(priority))
}

fn lexbfs_impl(g: &Graph, priority: Option<&[usize]>) -> LexBfsOrder {
    let n = g.n();
    // Partition refinement: a doubly linked list of classes ordered by
    // label, each holding its members in a bag. One pass per vertex: pop a
    // vertex from the head class, then move each unvisited neighbor into a
    // fresh class inserted immediately before the neighbor's current class
    // (at most one fresh class per split class per step).
    struct Class {
        members: Vec<usize>,
        prev: usize,
        next: usize,
        split_mark: usize,
        split_to: usize,
    }
    let mut classes: Vec<Class> = Vec::with_capacity(n + 1);
    classes.push(Class {
        members: (0..n).rev().collect(),
        prev: NIL,
        next: NIL,
        split_mark: NIL,
        split_to: NIL,
    });
    let mut head = 0usize;
    let mut class_of = vec![0usize; n];
    let mut pos_in_class: Vec<usize> = vec![0; n];
    for (i, &v) in classes[0].members.iter().enumerate() {
        pos_in_class[v] = i;
    }

    let mut visit = Vec::with_capacity(n);
    let mut num = vec![NIL; n];

    for step in 0..n {
        let c = head;
        let v = match priority {
            None => classes[c].members.pop().expect("head class nonempty"),
            Some(p) => {
                let (idx, _) = classes[c]
                    .members
                    .iter()
                    .enumerate()
                    .max_by_key(|&(_, &w)| p[w])
                    .expect("head class nonempty");
                let v = classes[c].members.swap_remove(idx);
                if let Some(&moved) = classes[c].members.get(idx) {
                    pos_in_class[moved] = idx;
                }
                v
            }
        };
        if classes[c].members.is_empty() {
            unlink(&mut classes, &mut head, c);
        }
        num[v] = step;
        visit.push(v);

        for &w in g.neighbors(v) {
            if num[w] != NIL {
                continue;
            }
            let cw = class_of[w];
            if classes[cw].split_mark != step {
                let new = classes.len();
                let prev = classes[cw].prev;
                classes.push(Class {
                    members: Vec::new(),
                    prev,
                    next: cw,
                    split_mark: NIL,
                    split_to: NIL,
                });
                classes[cw].prev = new;
                classes[cw].split_mark = step;
                classes[cw].split_to = new;
                if prev == NIL {
                    head = new;
                } else {
                    classes[prev].next = new;
                }
            }
            let target = classes[cw].split_to;
            // Remove w from cw, fixing the displaced member's position.
            let p = pos_in_class[w];
            classes[cw].members.swap_remove(p);
            if let Some(&moved) = classes[cw].members.get(p) {
                pos_in_class[moved] = p;
            }
            if classes[cw].members.is_empty() {
                unlink(&mut classes, &mut head, cw);
            }
            classes[target].members.push(w);
            pos_in_class[w] = classes[target].members.len() - 1;
            class_of[w] = target;
        }
    }

    fn unlink(classes: &mut [Class], head: &mut usize, c: usize) {
        let (prev, next) = (classes[c].prev, classes[c].next);
        if prev == NIL {
            *head = next;
        } else {
            classes[prev].next = next;
        }
        if next != NIL {
            classes[next].prev = prev;
        }
    }

    LexBfsOrder { visit, num }
}

/// Per-vertex data derived from a construction order (the reverse of an
/// elimination order): `rn[v]` are the neighbors of `v` placed earlier, and
/// `parent[v]` is the latest-placed of them.
struct Elimination {
    /// cons[j] = j-th constructed vertex.
    cons: Vec<usize>,
    /// cnum[v] = construction position.
    cnum: Vec<usize>,
    rn: Vec<Vec<usize>>,
    parent: Vec<usize>, // NIL when rn[v] is empty
}

fn eliminate(g: &Graph, elim_order: &[usize]) -> Elimination {
    let n = g.n();
    let cons: Vec<usize> = elim_order.iter().rev().copied().collect();
    let mut cnum = vec![0usize; n];
    for (j, &v) in cons.iter().enumerate() {
        cnum[v] = j;
    }
    let mut rn: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent = vec![NIL; n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            if cnum[w] < cnum[v] {
                rn[v].push(w);
                if parent[v] == NIL || cnum[w] > cnum[parent[v]] {
                    parent[v] = w;
                }
            }
        }
    }
    Elimination { cons, cnum, rn, parent }
}

/// Tests whether the order behind `e` is a perfect elimination order.
/// Returns the first violating triple `(p, v, w)`: `p` and `w` both precede
/// `v` in construction order and are adjacent to it, `p` latest, yet
/// `p` and `w` are non-adjacent. Linear time via deferred subset checks:
/// each vertex v posts rn(v)∖{parent} to its parent's checklist, and every
/// vertex verifies its own checklist against its neighborhood once.
fn first_violation(g: &Graph, e: &Elimination) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut checklist: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (w, poster)
    let mut stamp = vec![NIL; n];
    for j in (0..n).rev() {
        let v = e.cons[j];
        if !checklist[v].is_empty() {
            for &u in g.neighbors(v) {
                stamp[u] = j;
            }
            for &(w, poster) in &checklist[v] {
                if stamp[w] != j {
                    return Some((v, poster, w));
                }
            }
        }
        let p = e.parent[v];
        if p != NIL {
            for &w in &e.rn[v] {
                if w != p {
                    checklist[p].push((w, v));
                }
            }
        }
    }
    None
}

/// Certifies chordality: a perfect elimination order if `g` is chordal,
/// otherwise an induced cycle on ≥ 4 vertices.
pub fn chordality(g: &Graph) -> Result<Peo, Hole> {
    let order = lexbfs(g);
    let elim: Vec<usize> = order.visit.iter().rev().copied().collect();
    let e = eliminate(g, &elim);
    match first_violation(g, &e) {
        None => Ok(Peo { order: elim }),
        Some((p, v, w)) => Err(Hole { cycle: extract_hole(g, &e.cnum, p, v, w) }),
    }
}

/// Grows a chordless path from the violating triple until it closes into an
/// induced cycle.
///
/// Invariants maintained: the path is chordless; every interior vertex was
/// constructed after both ends; the working end is the later-constructed
/// end. Extending always picks an earlier neighbor of the working end that
/// is not adjacent to both the far end and its path neighbor — one exists
/// because in a LexBFS order, whenever a later vertex is adjacent to an
/// earlier one over the head of a middle vertex, the middle vertex has an
/// even earlier private neighbor. Chords from the new vertex truncate the
/// path; an edge to the far end closes the cycle (length ≥ 4 because the
/// selection rule forbids closing a triangle).
fn extract_hole(g: &Graph, cnum: &[usize], p: usize, v: usize, w: usize) -> Vec<usize> {
    let n = g.n();
    debug_assert!(cnum[w] < cnum[p] && cnum[p] < cnum[v]);
    debug_assert!(g.has_edge(p, v) && g.has_edge(v, w) && !g.has_edge(p, w));

    let mut buf = vec![NIL; 2 * n + 3];
    let (mut lo, mut hi) = (n, n + 3);
    buf[n] = p;
    buf[n + 1] = v;
    buf[n + 2] = w;
    let mut pos = vec![NIL; n];
    pos[p] = n;
    pos[v] = n + 1;
    pos[w] = n + 2;
    let mut rev = false;

    loop {
        let (front, back) = (buf[lo], buf[hi - 1]);
        let (v0, vk) = if rev { (back, front) } else { (front, back) };
        let vkm1 = if rev { buf[lo + 1] } else { buf[hi - 2] };
        debug_assert!(cnum[v0] > cnum[vk] && cnum[v0] < cnum[vkm1]);

        let next = g
            .neighbors(v0)
            .iter()
            .copied()
            .find(|&x| {
                cnum[x] < cnum[v0] && !(g.has_edge(x, vk) && g.has_edge(x, vkm1))
            })
            .expect("an earlier neighbor avoiding the far end exists");

        // Chords from `next` into the path: remember the one landing
        // closest to the far end; an edge to the far end itself closes the
        // cycle.
        let sentinel = if rev { 2 * n + 3 } else { 0 };
        let mut chord = sentinel;
        let mut closes = false;
        for &x in g.neighbors(next) {
            let t = pos[x];
            if t == NIL {
                continue;
            }
            if rev {
                if t == lo {
                    closes = true;
                } else if t != hi - 1 {
                    chord = chord.min(t);
                }
            } else if t == hi - 1 {
                closes = true;
            } else if t != lo {
                chord = chord.max(t);
            }
        }

        if chord != sentinel {
            // Truncate everything between the working end and the chord
            // target, then let `next` take the working-end slot.
            if rev {
                for i in chord + 1..hi {
                    pos[buf[i]] = NIL;
                }
                hi = chord + 2;
            } else {
                for i in lo..chord {
                    pos[buf[i]] = NIL;
                }
                lo = chord - 1;
            }
        } else if rev {
            hi += 1;
        } else {
            lo -= 1;
        }
        if rev {
            buf[hi - 1] = next;
            pos[next] = hi - 1;
        } else {
            buf[lo] = next;
            pos[next] = lo;
        }
        rev = cnum[buf[lo]] < cnum[buf[hi - 1]];
        if closes {
            break;
        }
    }

    let mut cycle = buf[lo..hi].to_vec();
    if rev {
        cycle.reverse();
    }
    cycle
}

/// A tree edge between two clique-tree nodes, carrying the exact separator
/// `cliques[a] ∩ cliques[b]` (sorted).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub separator: Vec<usize>,
}

/// A clique tree: the maximal cliques of a connected chordal graph arranged
/// in a tree so that each vertex's occurrences induce a subtree.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CliqueTree {
    /// Maximal cliques as sorted vertex lists.
    pub cliques: Vec<Vec<usize>>,
    pub edges: Vec<TreeEdge>,
    /// `adj[x]` lists `(neighbor node, edge index)` pairs.
    pub adj: Vec<Vec<(usize, usize)>>,
    /// `occ[v]`: sorted indices of the cliques containing `v`.
    pub occ: Vec<Vec<usize>>,
    /// Σ_v |occ[v]| = Σ_x |cliques[x]|.
    pub total_size: usize,
}

/// Clique discovery shared by `maximal_cliques` and `clique_tree`.
///
/// Processing vertices in construction order, K(v) = {v} ∪ rn(v) is a
/// maximal clique unless some later vertex u has rn(u) = K(v) exactly —
/// detected as parent(u) = v with |rn(u)| = |rn(v)| + 1 (any such u will
/// do, and K(v) ⊆ K(u) then). Witness links v → u form disjoint chains;
/// each chain ends at a vertex whose K is maximal, and the chain start s is
/// where that clique separates from the rest of the graph: its separator is
/// exactly rn(s), found inside the clique that absorbed parent(s).
struct CliqueDiscovery {
    /// wit[v] = the recorded witness of v, or NIL (K(v) maximal).
    wit: Vec<usize>,
}

fn discover_cliques(e: &Elimination) -> CliqueDiscovery {
    let n = e.cons.len();
    let mut wit = vec![NIL; n];
    for j in 0..n {
        let u = e.cons[j];
        let p = e.parent[u];
        if p != NIL && e.rn[u].len() == e.rn[p].len() + 1 && wit[p] == NIL {
            wit[p] = u;
        }
    }
    CliqueDiscovery { wit }
}

fn validate_peo(g: &Graph, peo: &Peo) -> Result<Elimination, ChordalError> {
    let n = g.n();
    if peo.order.len() != n {
        return Err(ChordalError::NotAPermutation { n });
    }
    let mut seen = vec![false; n];
    for &v in &peo.order {
        if v >= n || seen[v] {
            return Err(ChordalError::NotAPermutation { n });
        }
        seen[v] = true;
    }
    let e = eliminate(g, &peo.order);
    if let Some((p, _, _)) = first_violation(g, &e) {
        return Err(ChordalError::InvalidPeo { vertex: p });
    }
    Ok(e)
}

/// The maximal cliques of a chordal graph, each listed once as a sorted
/// vertex list, in discovery order. Works for any valid elimination order
/// and for disconnected graphs.
pub fn maximal_cliques(g: &Graph, peo: &Peo) -> Result<Vec<Vec<usize>>, ChordalError> {
    let e = validate_peo(g, peo)?;
    let d = discover_cliques(&e);
    let mut cliques = Vec::new();
    for j in 0..g.n() {
        let s = e.cons[j];
        let is_start = e.parent[s] == NIL || d.wit[e.parent[s]] != s;
        if !is_start {
            continue;
        }
        let mut c = s;
        while d.wit[c] != NIL {
            c = d.wit[c];
        }
        let mut k = e.rn[c].clone();
        k.push(c);
        k.sort_unstable();
        cliques.push(k);
    }
    Ok(cliques)
}

/// Builds the clique tree of a connected chordal graph from a perfect
/// elimination order. Any valid order works, not only LexBFS orders.
///
/// Asserts the size bound Σ|occ[v]| ≤ n + 2m.
pub fn clique_tree(g: &Graph, peo: &Peo) -> Result<CliqueTree, ChordalError> {
    if !g.is_connected() {
        return Err(ChordalError::Disconnected);
    }
    let n = g.n();
    let e = validate_peo(g, peo)?;
    let d = discover_cliques(&e);

    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edges: Vec<TreeEdge> = Vec::new();
    let mut cliq = vec![NIL; n]; // vertex → index of the clique absorbing K(v)
    for j in 0..n {
        let s = e.cons[j];
        let is_start = e.parent[s] == NIL || d.wit[e.parent[s]] != s;
        if !is_start {
            continue;
        }
        let idx = cliques.len();
        let mut c = s;
        loop {
            cliq[c] = idx;
            if d.wit[c] == NIL {
                break;
            }
            c = d.wit[c];
        }
        let mut k = e.rn[c].clone();
        k.push(c);
        k.sort_unstable();
        cliques.push(k);
        let p = e.parent[s];
        if p != NIL {
            let target = cliq[p];
            debug_assert_ne!(target, NIL);
            debug_assert_ne!(target, idx);
            let mut sep = e.rn[s].clone();
            sep.sort_unstable();
            edges.push(TreeEdge { a: idx, b: target, separator: sep });
        }
    }

    let q = cliques.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q];
    for (i, edge) in edges.iter().enumerate() {
        adj[edge.a].push((edge.b, i));
        adj[edge.b].push((edge.a, i));
    }
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut total_size = 0usize;
    for (x, k) in cliques.iter().enumerate() {
        total_size += k.len();
        for &v in k {
            occ[v].push(x);
        }
    }
    assert!(
        total_size <= n + 2 * g.m(),
        "clique tree total size exceeds n + 2m"
    );
    Ok(CliqueTree { cliques, edges, adj, occ, total_size })
}

/// A clique tree reduced to a canonical value: cliques sorted
/// lexicographically and edges re-indexed accordingly. Two clique trees of
/// the same graph are equal as trees iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalCliqueTree {
    pub cliques: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

pub fn canonical_form(t: &CliqueTree) -> CanonicalCliqueTree {
    let mut order: Vec<usize> = (0..t.cliques.len()).collect();
    order.sort_by(|&i, &j| t.cliques[i].cmp(&t.cliques[j]));
    let mut rank = vec![0usize; t.cliques.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let cliques = order.iter().map(|&i| t.cliques[i].clone()).collect();
    let mut edges: Vec<(usize, usize)> = t
        .edges
        .iter()
        .map(|e| {
            let (a, b) = (rank[e.a], rank[e.b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    CanonicalCliqueTree { cliques, edges }
}
