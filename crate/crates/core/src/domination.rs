//! Domination-style optimisation on claw-free chordal graphs.
//!
//! Every routine recognises its input first and rejects outsiders with the
//! recognition witness. Members are solved exactly by walking the clique
//! tree: independent domination by a bottom-up dynamic program whose state
//! space stays linear in clique size, connected domination and Steiner
//! connection by local selections on the junction-star / terminal-path
//! decomposition of the tree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::CliqueTree;
use crate::graph::Graph;
use crate::model::{
    partition_edges, piece_intervals, ModelPiece, NcModel, NodeClass, Role, TerminalPath,
};
use crate::recognition::{find_claw_chordal, ClawSearch, Witness};

/// Which optimisation a [`DomResult`] answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DomKind {
    /// Minimum dominating set.
    #[serde(rename = "MDS")]
    Mds,
    /// Minimum independent dominating set.
    #[serde(rename = "MIDS")]
    Mids,
    /// Minimum connected dominating set.
    #[serde(rename = "MCDS")]
    Mcds,
    /// Minimum connected superset of the requested terminals.
    Steiner,
}

/// An optimal vertex selection together with the problem it solves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomResult {
    pub kind: DomKind,
    pub size: usize,
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    /// Always `true`: the solvers are exact, never heuristic.
    pub optimal: bool,
    /// Set when the host graph is complete, where a single vertex dominates
    /// everything and the connected requirement is vacuous.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complete_graph: bool,
}

/// Why a domination query was refused.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("the graph is not connected")]
    Disconnected,
    #[error("the graph is outside the class; a forbidden induced subgraph certifies it")]
    NotInClass(Witness),
    #[error("at least one terminal is required")]
    NoTerminals,
    #[error("terminal {0} is not a vertex of the graph")]
    TerminalOutOfRange(usize),
}

fn result(kind: DomKind, mut vertices: Vec<usize>, complete_graph: bool) -> DomResult {
    vertices.sort_unstable();
    vertices.dedup();
    DomResult { kind, size: vertices.len(), vertices, optimal: true, complete_graph }
}

/// Recognises `g` and hands back its model, or the witness refusing it.
pub(crate) fn model_of(g: &Graph) -> Result<NcModel, DominationError> {
    if !g.is_connected() {
        return Err(DominationError::Disconnected);
    }
    match find_claw_chordal(g) {
        Err(hole) => Err(DominationError::NotInClass(Witness::hole(hole.cycle))),
        Ok(ClawSearch::Found(w)) => Err(DominationError::NotInClass(w)),
        Ok(ClawSearch::ClawFree(m)) => Ok(m),
    }
}

/// Minimum dominating set. On claw-free graphs the domination number equals
/// the independent domination number, so this is [`mids`] reported under its
/// own name.
pub fn mds(g: &Graph) -> Result<DomResult, DominationError> {
    let mut r = mids(g)?;
    r.kind = DomKind::Mds;
    Ok(r)
}

/// Minimum independent dominating set, exact.
///
/// An independent set meets every clique at most once, so a bottom-up walk
/// of the clique tree can carry, per node, the choice inside that clique
/// plus one piece of domination debt: vertex paths that still await a
/// dominator above are nested along the upward chain (they can only diverge
/// at a junction, whose neighbors are all terminal), hence the most urgent
/// one stands for all of them.
pub fn mids(g: &Graph) -> Result<DomResult, DominationError> {
    let m = model_of(g)?;
    let vertices = minimum_independent_dominating(g, &m);
    assert!(
        is_independent(g, &vertices) && is_dominating(g, &vertices),
        "the selection is independent and dominating",
    );
    Ok(result(DomKind::Mids, vertices, false))
}

/// Minimum connected dominating set, exact.
///
/// The selection is assembled piece by piece: two lowest-id members of
/// distinct direction classes per junction clique, the lowest separator
/// vertex per two-node path, and the interior of a shortest end-to-end
/// route through the interval model per longer path. A complete graph is
/// answered by a single vertex and flagged, since connectivity of one
/// vertex is vacuous.
pub fn mcds(g: &Graph) -> Result<DomResult, DominationError> {
    let m = model_of(g)?;
    if m.is_complete() {
        return Ok(result(DomKind::Mcds, vec![0], true));
    }
    let t = &m.tree;
    let mut chosen: Vec<usize> = Vec::new();
    for piece in partition_edges(&m) {
        match piece {
            ModelPiece::JunctionStar(star) => {
                // One vertex covers the two star edges of its direction
                // class, so the two smallest class representatives cover all
                // three edges.
                let mut reps = [usize::MAX; 3];
                for &v in &t.cliques[star.center] {
                    let pair = leg_pair(t, v, &star.leaves);
                    if reps[pair] == usize::MAX {
                        reps[pair] = v;
                    }
                }
                debug_assert!(reps.iter().all(|&r| r != usize::MAX));
                reps.sort_unstable();
                chosen.extend_from_slice(&reps[..2]);
            }
            ModelPiece::TerminalPath(path) => {
                if path.nodes.len() == 2 {
                    chosen.push(sep_between(t, path.nodes[0], path.nodes[1])[0]);
                } else {
                    chosen.extend(corridor_core(&m, &path));
                }
            }
        }
    }
    assert!(
        covered_edge_check(g, &m, &chosen),
        "the piecewise selection covers every tree edge",
    );
    Ok(result(DomKind::Mcds, chosen, false))
}

/// Whether `s` meets the separator of every clique-tree edge. On a
/// connected non-complete member this holds exactly when `s` is a connected
/// dominating set, which is what makes piecewise connected domination
/// possible in the first place.
pub fn covered_edge_check(g: &Graph, m: &NcModel, s: &[usize]) -> bool {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        if v >= g.n() {
            return false;
        }
        in_s[v] = true;
    }
    m.tree.edges.iter().all(|e| e.separator.iter().any(|&v| in_s[v]))
}

/// Minimum connected superset of `terminals`, exact.
///
/// The requested vertices pin down a subtree of the clique tree; an edge of
/// that subtree whose separator already holds a terminal needs no help, and
/// the remaining edges are covered per piece: farthest-reaching interval
/// choices along a path, one or two class representatives at a junction.
pub fn steiner_tree(g: &Graph, terminals: &[usize]) -> Result<DomResult, DominationError> {
    if terminals.is_empty() {
        return Err(DominationError::NoTerminals);
    }
    if let Some(&v) = terminals.iter().find(|&&v| v >= g.n()) {
        return Err(DominationError::TerminalOutOfRange(v));
    }
    let m = model_of(g)?;
    let t = &m.tree;
    let q = t.cliques.len();
    let mut xs = terminals.to_vec();
    xs.sort_unstable();
    xs.dedup();

    // The minimal subtree spanning one home node per requested vertex:
    // repeatedly shed tree leaves that serve no terminal.
    let mut marked = vec![false; q];
    for &v in &xs {
        marked[t.occ[v][0]] = true;
    }
    let mut alive = vec![true; q];
    let mut deg: Vec<usize> = t.adj.iter().map(|a| a.len()).collect();
    let mut stack: Vec<usize> = (0..q).filter(|&x| deg[x] <= 1 && !marked[x]).collect();
    while let Some(x) = stack.pop() {
        if !alive[x] || marked[x] || deg[x] > 1 {
            continue;
        }
        alive[x] = false;
        for &(y, _) in &t.adj[x] {
            if alive[y] {
                deg[y] -= 1;
                if deg[y] <= 1 && !marked[y] {
                    stack.push(y);
                }
            }
        }
    }

    let covered = |sep: &[usize]| sep.iter().any(|&v| xs.binary_search(&v).is_ok());
    let mut picks: Vec<usize> = Vec::new();
    for piece in partition_edges(&m) {
        match piece {
            ModelPiece::JunctionStar(star) => {
                let c = star.center;
                let unc: Vec<usize> = star
                    .leaves
                    .iter()
                    .copied()
                    .filter(|&y| alive[c] && alive[y] && !covered(sep_between(t, c, y)))
                    .collect();
                let first_with = |want: &[usize]| -> usize {
                    t.cliques[c]
                        .iter()
                        .copied()
                        .find(|&v| want.iter().all(|&y| occ_contains(t, v, y)))
                        .expect("every direction class of a junction clique is nonempty")
                };
                match unc.len() {
                    0 => {}
                    1 => picks.push(first_with(&unc)),
                    2 => picks.push(first_with(&unc)),
                    _ => {
                        // No single vertex covers three directions; two
                        // always do.
                        picks.push(first_with(&unc[..2]));
                        picks.push(first_with(&unc[2..]));
                    }
                }
            }
            ModelPiece::TerminalPath(path) => {
                let k = path.nodes.len();
                let unc: Vec<usize> = (1..k)
                    .filter(|&j| {
                        alive[path.nodes[j - 1]]
                            && alive[path.nodes[j]]
                            && !covered(sep_between(t, path.nodes[j - 1], path.nodes[j]))
                    })
                    .collect();
                if unc.is_empty() {
                    continue;
                }
                let (ids, runs) = piece_intervals(&m, &path);
                let best_left = farthest_by_left(&ids, &runs, k);
                // Boundary `j` sits between positions `j` and `j + 1`; the
                // widest interval starting at or before it reaches at least
                // as far as any separator member, so it covers `j` and a
                // maximal stretch of later boundaries.
                let mut i = 0;
                while i < unc.len() {
                    let j = unc[i];
                    let b = best_left[j].expect("separators along a piece are nonempty");
                    let (l, r) = runs[b];
                    debug_assert!(l <= j && r > j);
                    picks.push(ids[b]);
                    while i < unc.len() && unc[i] < r {
                        i += 1;
                    }
                }
            }
        }
    }

    let mut vertices = xs.clone();
    vertices.extend_from_slice(&picks);
    let out = result(DomKind::Steiner, vertices, false);
    debug_assert!(xs.iter().all(|v| out.vertices.binary_search(v).is_ok()));
    debug_assert!(g.induced(&out.vertices).0.is_connected());
    Ok(out)
}

// ---------------------------------------------------------------------------
// Shared clique-tree lookups.

fn occ_contains(t: &CliqueTree, v: usize, x: usize) -> bool {
    t.occ[v].binary_search(&x).is_ok()
}

fn sep_between<'a>(t: &'a CliqueTree, a: usize, b: usize) -> &'a [usize] {
    let (_, ei) = t.adj[a]
        .iter()
        .copied()
        .find(|&(y, _)| y == b)
        .expect("the nodes are adjacent in the tree");
    &t.edges[ei].separator
}

/// Index of the direction class of `v` inside a junction clique with
/// neighbor nodes `legs`: 0 for the pair (0,1), 1 for (0,2), 2 for (1,2).
/// Every member runs through exactly two of the legs.
fn leg_pair(t: &CliqueTree, v: usize, legs: &[usize; 3]) -> usize {
    let hit = [
        occ_contains(t, v, legs[0]),
        occ_contains(t, v, legs[1]),
        occ_contains(t, v, legs[2]),
    ];
    match hit {
        [true, true, false] => 0,
        [true, false, true] => 1,
        [false, true, true] => 2,
        _ => unreachable!("a junction clique member occupies exactly two directions"),
    }
}

/// For each 1-based position, the interval starting at or before it that
/// reaches farthest right (ties to the smaller vertex id).
fn farthest_by_left(ids: &[usize], runs: &[(usize, usize)], k: usize) -> Vec<Option<usize>> {
    let mut best: Vec<Option<usize>> = vec![None; k + 1];
    let prefer = |a: usize, b: usize| -> bool {
        runs[a].1 > runs[b].1 || (runs[a].1 == runs[b].1 && ids[a] < ids[b])
    };
    for i in 0..runs.len() {
        let slot = &mut best[runs[i].0];
        if slot.map_or(true, |b| prefer(i, b)) {
            *slot = Some(i);
        }
    }
    let mut carry: Option<usize> = None;
    for slot in best.iter_mut() {
        match (carry, *slot) {
            (Some(c), Some(s)) if prefer(c, s) => *slot = Some(c),
            (Some(c), None) => *slot = Some(c),
            _ => {}
        }
        carry = *slot;
    }
    best
}

/// Interior of a shortest route between the two ends of a `k ≥ 3` path
/// piece, walked greedily through the interval model: from the current
/// interval, hop to the overlapping one that reaches farthest right. The
/// result dominates the whole piece interior with the fewest vertices and
/// induces a path in the host graph.
fn corridor_core(m: &NcModel, path: &TerminalPath) -> Vec<usize> {
    let k = path.nodes.len();
    debug_assert!(k >= 3);
    let (ids, runs) = piece_intervals(m, path);
    let best_left = farthest_by_left(&ids, &runs, k);
    // Doubled coordinates leave room for the end sentinels at 3 and 2k − 1,
    // strictly inside the first and last positions.
    let goal = 2 * k - 1;
    let mut cur_r = 3;
    let mut out = Vec::new();
    while cur_r < goal {
        let b = best_left[cur_r / 2].expect("separators along a piece are nonempty");
        let reach = 2 * runs[b].1;
        assert!(reach > cur_r, "consecutive separators overlap");
        out.push(ids[b]);
        cur_r = reach;
    }
    out
}

// ---------------------------------------------------------------------------
// Exact independent domination.

/// Sentinel node id for "no pending vertex".
const NO_PEND: usize = usize::MAX;

/// State of a subtree as seen from its parent, keyed by what the selection
/// does at the subtree's root clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum UpKey {
    /// The chosen vertex of this clique also lives in the parent clique.
    Extend(usize),
    /// The clique holds a chosen vertex that stops here.
    Hot,
    /// The clique holds no chosen vertex. The payload is `NO_PEND` when
    /// every vertex of the subtree is already dominated, otherwise the
    /// topmost node of the most urgent vertex still waiting for a dominator
    /// above — all waiting vertices share their remaining chances with it.
    Cold(usize),
}

#[derive(Debug, Clone)]
struct StateEntry {
    cost: usize,
    /// The vertex chosen inside this clique, if any.
    choice: Option<usize>,
    /// One recorded key per child, in child order.
    child_keys: Vec<UpKey>,
}

type Table = Vec<(UpKey, StateEntry)>;

fn lookup<'a>(table: &'a Table, key: UpKey) -> Option<&'a StateEntry> {
    table.iter().find(|(k, _)| *k == key).map(|(_, e)| e)
}

fn upsert(table: &mut Table, key: UpKey, entry: StateEntry) {
    match table.iter_mut().find(|(k, _)| *k == key) {
        Some((_, e)) => {
            if entry.cost < e.cost {
                *e = entry;
            }
        }
        None => table.push((key, entry)),
    }
}

/// Cheapest child state compatible with a parent that picks some vertex
/// (`allow_pend`: pending vertices get dominated by that pick) or with a
/// parent that picks nothing and tolerates no debt.
fn best_free(table: &Table, allow_pend: bool) -> Option<(UpKey, usize)> {
    table
        .iter()
        .filter(|(k, _)| match *k {
            UpKey::Extend(_) => false,
            UpKey::Hot => true,
            UpKey::Cold(p) => allow_pend || p == NO_PEND,
        })
        .map(|(k, e)| (*k, e.cost))
        .min_by_key(|&(_, c)| c)
}

/// Exact minimum independent dominating set of a member graph.
///
/// Bottom-up over the rooted clique tree. Because the selection is
/// independent it meets each clique in at most one vertex, so the per-node
/// states are "which member, if any, and is anything still owed". A chosen
/// vertex is paid for at the topmost node of its path. A vertex still owed
/// domination keeps its chances on the chain from the current node up to
/// the top of its own path; those chains nest, and the one that expires
/// first (deepest top) stands for all of them. Junction cliques are the one
/// place where paths diverge; there the three direction classes are settled
/// directly from the children's states.
fn minimum_independent_dominating(g: &Graph, m: &NcModel) -> Vec<usize> {
    let t = &m.tree;
    let q = t.cliques.len();
    let n = g.n();

    // Root at node 0 and orient.
    let mut parent = vec![NO_PEND; q];
    let mut depth = vec![0usize; q];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); q];
    let mut order = Vec::with_capacity(q);
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &(y, _) in &t.adj[x] {
            if y == parent[x] {
                continue;
            }
            parent[y] = x;
            depth[y] = depth[x] + 1;
            children[x].push(y);
            order.push(y);
        }
    }

    // Topmost node of each vertex path, and cliques owning a private vertex.
    let mut top = vec![0usize; n];
    let mut has_private = vec![false; q];
    for v in 0..n {
        top[v] = t.occ[v].iter().copied().min_by_key(|&x| depth[x]).expect("vertex occurs");
        if t.occ[v].len() == 1 {
            has_private[t.occ[v][0]] = true;
        }
    }

    // Vertices whose path starts at `p` and climbs into the parent begin
    // their wait for a dominator here. Under a junction parent the classes
    // are settled at the junction instead, so nothing is carried.
    let mut fresh_top: Vec<Option<usize>> = vec![None; q];
    for p in 0..q {
        let par = parent[p];
        if p == 0 || m.node_class[par] == NodeClass::Junction {
            continue;
        }
        for &v in sep_between(t, p, par) {
            if m.role_at(v, p) == Role::LeafOfPath {
                let cand = top[v];
                let keep = fresh_top[p].map_or(true, |cur| depth[cand] > depth[cur]);
                if keep {
                    fresh_top[p] = Some(cand);
                }
            }
        }
    }

    let merge = |a: Option<usize>, b: Option<usize>| -> usize {
        match (a, b) {
            (None, None) => NO_PEND,
            (Some(x), None) | (None, Some(x)) => x,
            (Some(x), Some(y)) => {
                if depth[x] >= depth[y] {
                    x
                } else {
                    y
                }
            }
        }
    };

    let mut tables: Vec<Table> = vec![Vec::new(); q];
    for &p in order.iter().rev() {
        let mut table: Table = Vec::new();
        let kids = &children[p];

        // Pick a vertex of this clique. Children holding it must extend it;
        // the rest may do anything pend-free or pending, since the pick
        // dominates everything still waiting in the separator below.
        'choices: for &c in &t.cliques[p] {
            let mut cost = usize::from(top[c] == p);
            let mut child_keys = Vec::with_capacity(kids.len());
            for &x in kids {
                let (key, w) = if occ_contains(t, c, x) {
                    match lookup(&tables[x], UpKey::Extend(c)) {
                        Some(e) => (UpKey::Extend(c), e.cost),
                        None => continue 'choices,
                    }
                } else {
                    match best_free(&tables[x], true) {
                        Some(kw) => kw,
                        None => continue 'choices,
                    }
                };
                cost += w;
                child_keys.push(key);
            }
            let key = if p != 0 && occ_contains(t, c, parent[p]) {
                UpKey::Extend(c)
            } else {
                UpKey::Hot
            };
            upsert(&mut table, key, StateEntry { cost, choice: Some(c), child_keys });
        }

        // Pick nothing. A vertex living only here would stay undominated,
        // and any child debt expiring at this very node dies with it.
        if !has_private[p] {
            if m.node_class[p] == NodeClass::Junction {
                junction_skip_states(t, p, kids, parent[p], &tables, &mut table);
            } else if kids.len() == 1 {
                let x = kids[0];
                for (k, e) in &tables[x] {
                    let inherited = match *k {
                        UpKey::Extend(_) => continue,
                        UpKey::Hot => None,
                        UpKey::Cold(pd) => {
                            if pd == NO_PEND {
                                None
                            } else if depth[pd] < depth[p] {
                                Some(pd)
                            } else {
                                continue;
                            }
                        }
                    };
                    let pend = merge(fresh_top[p], inherited);
                    upsert(
                        &mut table,
                        UpKey::Cold(pend),
                        StateEntry { cost: e.cost, choice: None, child_keys: vec![*k] },
                    );
                }
            } else {
                // Zero or several children: any debt a child could carry
                // expires exactly here (paths entering a terminal end at
                // it), so only debt-free child states survive.
                let mut cost = 0;
                let mut child_keys = Vec::with_capacity(kids.len());
                let mut feasible = true;
                for &x in kids {
                    match best_free(&tables[x], false) {
                        Some((k, w)) => {
                            cost += w;
                            child_keys.push(k);
                        }
                        None => {
                            feasible = false;
                            break;
                        }
                    }
                }
                if feasible {
                    let pend = merge(fresh_top[p], None);
                    upsert(
                        &mut table,
                        UpKey::Cold(pend),
                        StateEntry { cost, choice: None, child_keys },
                    );
                }
            }
        }

        tables[p] = table;
    }

    // Read off the best debt-free root state and walk the choices back.
    let mut best: Option<(UpKey, usize)> = None;
    for (k, e) in &tables[0] {
        let closed = matches!(k, UpKey::Hot) || matches!(k, UpKey::Cold(p) if *p == NO_PEND);
        if closed && best.map_or(true, |(_, c)| e.cost < c) {
            best = Some((*k, e.cost));
        }
    }
    let (root_key, _) = best.expect("a maximal independent set always exists");
    let mut out = Vec::new();
    let mut walk = vec![(0usize, root_key)];
    while let Some((x, k)) = walk.pop() {
        let e = lookup(&tables[x], k).expect("recorded state");
        if let Some(v) = e.choice {
            if top[v] == x {
                out.push(v);
            }
        }
        for (i, &ch) in children[x].iter().enumerate() {
            walk.push((ch, e.child_keys[i]));
        }
    }
    out.sort_unstable();
    out
}

/// Skip states of a junction node: every clique member runs through two of
/// the three legs, so with no pick at the junction a member is dominated
/// exactly when one of its two legs holds a pick. Classes towards the
/// parent leg can still be rescued above and are carried as debt expiring
/// at the parent.
fn junction_skip_states(
    t: &CliqueTree,
    p: usize,
    kids: &[usize],
    par: usize,
    tables: &[Table],
    table: &mut Table,
) {
    let mut legs = [0usize; 3];
    legs[..kids.len()].copy_from_slice(kids);
    if par != NO_PEND {
        debug_assert_eq!(kids.len(), 2);
        legs[2] = par;
    } else {
        debug_assert_eq!(kids.len(), 3);
    }
    let mut class_size = [0usize; 3];
    for &v in &t.cliques[p] {
        class_size[leg_pair(t, v, &legs)] += 1;
    }
    let pair_of = |i: usize, j: usize| -> usize {
        match (i, j) {
            (0, 1) => 0,
            (0, 2) => 1,
            (1, 2) => 2,
            _ => unreachable!(),
        }
    };

    let options: Vec<Vec<(UpKey, usize)>> = kids
        .iter()
        .map(|&x| {
            [UpKey::Hot, UpKey::Cold(NO_PEND)]
                .into_iter()
                .filter_map(|k| lookup(&tables[x], k).map(|e| (k, e.cost)))
                .collect()
        })
        .collect();
    if options.iter().any(|o| o.is_empty()) {
        return;
    }

    let mut sel = vec![0usize; kids.len()];
    loop {
        let hot: Vec<bool> =
            sel.iter().enumerate().map(|(i, &s)| matches!(options[i][s].0, UpKey::Hot)).collect();
        let mut feasible = true;
        let mut pend = NO_PEND;
        for i in 0..kids.len() {
            for j in i + 1..kids.len() {
                if class_size[pair_of(i, j)] > 0 && !hot[i] && !hot[j] {
                    feasible = false;
                }
            }
            if par != NO_PEND && class_size[pair_of(i, 2)] > 0 && !hot[i] {
                pend = par;
            }
        }
        if feasible {
            let cost: usize = sel.iter().enumerate().map(|(i, &s)| options[i][s].1).sum();
            let child_keys: Vec<UpKey> =
                sel.iter().enumerate().map(|(i, &s)| options[i][s].0).collect();
            upsert(table, UpKey::Cold(pend), StateEntry { cost, choice: None, child_keys });
        }
        let mut i = 0;
        loop {
            if i == sel.len() {
                return;
            }
            sel[i] += 1;
            if sel[i] < options[i].len() {
                break;
            }
            sel[i] = 0;
            i += 1;
        }
    }
}

fn is_independent(g: &Graph, s: &[usize]) -> bool {
    let mut in_s = vec![false; g.n()];
    for &v in s {
        in_s[v] = true;
    }
    s.iter().all(|&v| g.neighbors(v).iter().all(|&w| !in_s[w]))
}

fn is_dominating(g: &Graph, s: &[usize]) -> bool {
    let mut hit = vec![false; g.n()];
    for &v in s {
        hit[v] = true;
        for &w in g.neighbors(v) {
            hit[w] = true;
        }
    }
    hit.into_iter().all(|b| b)
}
