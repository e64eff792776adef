//! Isomorphism-free enumeration of small graphs.
//!
//! Exhaustive acceptance checks quantify over *all* graphs of a given order,
//! so they need a canonical form to deduplicate isomorphic copies. The form
//! used here is the lexicographically smallest lower-triangular adjacency
//! encoding over all vertex orderings: row `i` of a candidate ordering packs
//! the adjacency between the `i`-th vertex and its predecessors into a
//! bitmask, and the key is the row sequence. Two graphs are isomorphic
//! exactly when their keys coincide, and a key decodes back into a concrete
//! graph, so a sorted set of keys doubles as an enumeration.
//!
//! Keys are found by depth-first search over partial orderings. Two prunings
//! keep this affordable at the orders we enumerate (n ≤ 8): a sibling that
//! contributes a larger row than the best sibling can never start a minimal
//! completion, and a prefix that already exceeds the best full key found so
//! far is abandoned. Graphs with many automorphisms (the worst case) still
//! finish in well under a millisecond at n = 8.

use std::collections::BTreeSet;

use ncpath_core::graph::Graph;

/// Largest order the enumerator accepts. One level beyond this roughly
/// decuples both the graph count and the per-graph canonicalization cost.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

/// The canonical form of `g`: the lexicographically smallest sequence of
/// lower-triangular adjacency rows over all vertex orderings. Equal keys
/// characterize isomorphic graphs.
///
/// Cost is exponential in the worst case but tiny for n ≤ 8; callers are
/// expected to stay at enumeration scale. Panics beyond 16 vertices, where
/// the row bitmask would overflow.
pub fn canonical_key(g: &Graph) -> Vec<u16> {
    let n = g.n();
    assert!(n <= 16, "canonical keys cover at most 16 vertices");
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    let mut placed = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    let mut best = None;
    search(&adj, 0, &mut placed, &mut rows, true, &mut best);
    best.expect("the search places every vertex")
}

/// Extends a partial ordering one vertex at a time, keeping only candidates
/// whose next row ties the sibling minimum and whose prefix can still match
/// or beat the best key found so far. `tight` records that the current
/// prefix equals the best key's prefix, which is what makes the per-row
/// pruning sound; a replacement deeper in the tree only ever shrinks the
/// best key below the current prefix, so the flag never goes stale.
fn search(
    adj: &[u16],
    used: u16,
    placed: &mut Vec<usize>,
    rows: &mut Vec<u16>,
    tight: bool,
    best: &mut Option<Vec<u16>>,
) {
    let n = adj.len();
    let d = placed.len();
    if d == n {
        if best.as_deref().is_none_or(|b| rows.as_slice() < b) {
            *best = Some(rows.clone());
        }
        return;
    }
    let row_of = |v: usize| -> u16 {
        placed
            .iter()
            .enumerate()
            .fold(0, |row, (j, &w)| row | ((adj[v] >> w & 1) << j))
    };
    let mut min_row = u16::MAX;
    let mut ties = Vec::new();
    for v in 0..n {
        if used >> v & 1 == 1 {
            continue;
        }
        let row = row_of(v);
        match row.cmp(&min_row) {
            std::cmp::Ordering::Less => {
                min_row = row;
                ties.clear();
                ties.push(v);
            }
            std::cmp::Ordering::Equal => ties.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    if let Some(b) = best.as_deref() {
        if tight && min_row > b[d] {
            return;
        }
    }
    let still_tight = |b: Option<&[u16]>| b.is_some_and(|b| tight && min_row == b[d]);
    for v in ties {
        placed.push(v);
        rows.push(min_row);
        let t = still_tight(best.as_deref());
        search(adj, used | 1 << v, placed, rows, t, best);
        placed.pop();
        rows.pop();
    }
}

/// Decodes a canonical key (or any lower-triangular row encoding) back into
/// a graph.
pub fn graph_from_key(key: &[u16]) -> Graph {
    let mut edges = Vec::new();
    for (i, &row) in key.iter().enumerate() {
        for j in 0..i {
            if row >> j & 1 == 1 {
                edges.push((j, i));
            }
        }
    }
    Graph::from_edges(key.len(), &edges).expect("keys encode simple graphs")
}

/// Every graph on `n` vertices up to isomorphism, in canonical-key order.
///
/// Works level by level: each graph on k vertices arises from some graph on
/// k − 1 vertices by attaching one fresh vertex (delete any vertex to see
/// the parent), so extending every smaller graph with every possible
/// neighborhood and deduplicating by key is exhaustive. Panics above
/// [`MAX_EXHAUSTIVE_ORDER`].
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_EXHAUSTIVE_ORDER).contains(&n),
        "exhaustive enumeration covers orders 1..={MAX_EXHAUSTIVE_ORDER}, got {n}"
    );
    let mut level = BTreeSet::from([vec![0u16]]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for key in &level {
            let parent = graph_from_key(key);
            let base = parent.edges();
            for mask in 0..1u16 << (k - 1) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|j| mask >> j & 1 == 1).map(|j| (j, k - 1)));
                let g = Graph::from_edges(k, &edges).expect("extending keeps the graph simple");
                next.insert(canonical_key(&g));
            }
        }
        level = next;
    }
    level.iter().map(|key| graph_from_key(key)).collect()
}

/// The connected graphs on `n` vertices up to isomorphism, in canonical-key
/// order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
