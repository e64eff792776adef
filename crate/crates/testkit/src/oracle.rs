//! Brute-force reference oracles.
//!
//! Everything here answers from raw adjacency by exhaustive search or
//! elementary dynamic programming, deliberately ignorant of clique trees,
//! models and the other machinery under test — agreement between an oracle
//! and the structural algorithm is evidence for both. The price is hard
//! instance-size bounds, enforced as errors rather than silent slowdowns.
//!
//! All oracles are pure and deterministic: ties break toward smaller
//! vertices, subsets and masks, so repeated runs return identical
//! witnesses.

use thiserror::Error;

use ncpath_core::graph::Graph;
use ncpath_core::recognition::{Witness, WitnessKind};

/// Largest order [`oracle_domination`] accepts (subset enumeration).
pub const MAX_DOMINATION_ORDER: usize = 16;
/// Largest order for cycle and path searches in [`oracle_hamiltonian`].
pub const MAX_HAMILTONIAN_ORDER: usize = 12;
/// Largest order for the minimum-leaf count in [`oracle_hamiltonian`]
/// (subset dynamic programming over rooted subtrees).
pub const MAX_MIN_LEAF_ORDER: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n} vertices exceed this oracle's bound of {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("no feasible solution exists (the graph is disconnected)")]
    Infeasible,
    #[error("terminal list must be nonempty")]
    NoTerminals,
    #[error("terminal {0} is out of range")]
    TerminalOutOfRange(usize),
}

/// Searches `g` exhaustively for an induced subgraph of the given kind and
/// spells out the first one found, in the same witness format the
/// recognizers emit (so [`Witness::verify`] applies to both).
///
/// Claws are found by scanning each center's neighborhood for an
/// independent triple; nets and 3-suns by trying every 6-subset against
/// every labeling; holes by, for every path u–v–w with u ≁ w, looking for a
/// u–w path that avoids the rest of N[v] — the shortest such path is
/// chordless, and conversely every hole contains such a detour around any
/// of its vertices.
pub fn oracle_forbidden(g: &Graph, kind: WitnessKind) -> Option<Witness> {
    match kind {
        WitnessKind::Claw => find_claw(g),
        WitnessKind::ThreeSun => find_on_six(g, assemble_three_sun),
        WitnessKind::Net => find_on_six(g, assemble_net),
        WitnessKind::Hole => find_hole(g),
    }
}

fn find_claw(g: &Graph) -> Option<Witness> {
    for c in 0..g.n() {
        let nbrs = g.neighbors(c);
        for (i, &x) in nbrs.iter().enumerate() {
            for (j, &y) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(x, y) {
                    continue;
                }
                for &z in &nbrs[j + 1..] {
                    if !g.has_edge(x, z) && !g.has_edge(y, z) {
                        return Some(Witness::claw(c, [x, y, z]));
                    }
                }
            }
        }
    }
    None
}

/// Runs `assemble` over every 6-subset of the vertices, ascending.
fn find_on_six(g: &Graph, assemble: fn(&Graph, &[usize; 6]) -> Option<Witness>) -> Option<Witness> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    let mut pick = [0, 1, 2, 3, 4, 5];
    loop {
        if let Some(w) = assemble(g, &pick) {
            return Some(w);
        }
        // Next 6-subset in lexicographic order.
        let mut i = 5;
        loop {
            if pick[i] + (6 - i) < n {
                pick[i] += 1;
                for j in i + 1..6 {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return None;
            }
            i -= 1;
        }
    }
}

/// Tries every labeling of six vertices as triangle + outer triple where
/// outer vertex `i` is adjacent to exactly the two corners other than `i`.
fn assemble_three_sun(g: &Graph, six: &[usize; 6]) -> Option<Witness> {
    for tri_bits in 0u8..64 {
        if tri_bits.count_ones() != 3 {
            continue;
        }
        let (mut triangle, mut outer) = (Vec::new(), Vec::new());
        for (i, &v) in six.iter().enumerate() {
            if tri_bits >> i & 1 == 1 {
                triangle.push(v);
            } else {
                outer.push(v);
            }
        }
        if !g.has_edge(triangle[0], triangle[1])
            || !g.has_edge(triangle[0], triangle[2])
            || !g.has_edge(triangle[1], triangle[2])
        {
            continue;
        }
        if outer.iter().enumerate().any(|(i, &u)| outer[i + 1..].iter().any(|&v| g.has_edge(u, v)))
        {
            continue;
        }
        // Each outer vertex must miss exactly one corner, all distinct.
        let mut by_missing = [usize::MAX; 3];
        let mut ok = true;
        for &u in &outer {
            let missing: Vec<usize> =
                (0..3).filter(|&i| !g.has_edge(u, triangle[i])).collect();
            match missing.as_slice() {
                &[i] if by_missing[i] == usize::MAX => by_missing[i] = u,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Some(Witness::three_sun(
                [triangle[0], triangle[1], triangle[2]],
                by_missing,
            ));
        }
    }
    None
}

/// Tries every labeling of six vertices as triangle + pendant triple where
/// pendant `i` is adjacent to corner `i` alone.
fn assemble_net(g: &Graph, six: &[usize; 6]) -> Option<Witness> {
    for tri_bits in 0u8..64 {
        if tri_bits.count_ones() != 3 {
            continue;
        }
        let (mut triangle, mut pendants) = (Vec::new(), Vec::new());
        for (i, &v) in six.iter().enumerate() {
            if tri_bits >> i & 1 == 1 {
                triangle.push(v);
            } else {
                pendants.push(v);
            }
        }
        if !g.has_edge(triangle[0], triangle[1])
            || !g.has_edge(triangle[0], triangle[2])
            || !g.has_edge(triangle[1], triangle[2])
        {
            continue;
        }
        if pendants
            .iter()
            .enumerate()
            .any(|(i, &u)| pendants[i + 1..].iter().any(|&v| g.has_edge(u, v)))
        {
            continue;
        }
        let mut by_corner = [usize::MAX; 3];
        let mut ok = true;
        for &u in &pendants {
            let hit: Vec<usize> = (0..3).filter(|&i| g.has_edge(u, triangle[i])).collect();
            match hit.as_slice() {
                &[i] if by_corner[i] == usize::MAX => by_corner[i] = u,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Some(Witness::net([triangle[0], triangle[1], triangle[2]], by_corner));
        }
    }
    None
}

fn find_hole(g: &Graph) -> Option<Witness> {
    let n = g.n();
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                // BFS from u to w avoiding v and N(v) \ {u, w}: success
                // closes an induced cycle v-u-…-w-v of length ≥ 4.
                let mut banned = vec![false; n];
                banned[v] = true;
                for &x in nbrs {
                    banned[x] = true;
                }
                banned[u] = false;
                banned[w] = false;
                let mut parent = vec![usize::MAX; n];
                parent[u] = u;
                let mut queue = std::collections::VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    for &y in g.neighbors(x) {
                        if !banned[y] && parent[y] == usize::MAX {
                            parent[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if parent[w] == usize::MAX {
                    continue;
                }
                let mut path = vec![w];
                while *path.last().expect("path starts nonempty") != u {
                    path.push(parent[*path.last().expect("path stays nonempty")]);
                }
                path.push(v);
                path.reverse();
                return Some(Witness::hole(path));
            }
        }
    }
    None
}

/// Which minimization [`oracle_domination`] runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomTask {
    Dominating,
    IndependentDominating,
    ConnectedDominating,
    /// Smallest connected superset of the given terminals.
    Steiner(Vec<usize>),
}

/// Exact minimum by scanning all vertex subsets; returns the size and the
/// first optimal set (fewest vertices, then smallest bitmask). Bounded by
/// [`MAX_DOMINATION_ORDER`].
pub fn oracle_domination(g: &Graph, task: &DomTask) -> Result<(usize, Vec<usize>), OracleError> {
    let n = g.n();
    if n > MAX_DOMINATION_ORDER {
        return Err(OracleError::TooLarge { n, bound: MAX_DOMINATION_ORDER });
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1 << v, |m, &w| m | 1 << w))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let required = match task {
        DomTask::Steiner(terminals) => {
            if terminals.is_empty() {
                return Err(OracleError::NoTerminals);
            }
            if let Some(&t) = terminals.iter().find(|&&t| t >= n) {
                return Err(OracleError::TerminalOutOfRange(t));
            }
            terminals.iter().fold(0u32, |m, &t| m | 1 << t)
        }
        _ => 0,
    };

    let feasible = |mask: u32| -> bool {
        match task {
            DomTask::Dominating => dominates(&closed, mask, full),
            DomTask::IndependentDominating => {
                dominates(&closed, mask, full) && independent(&closed, mask)
            }
            DomTask::ConnectedDominating => {
                dominates(&closed, mask, full) && connected_mask(&closed, mask)
            }
            DomTask::Steiner(_) => mask & required == required && connected_mask(&closed, mask),
        }
    };

    let mut best: Option<u32> = None;
    for mask in 0..=full {
        if best.is_some_and(|b| b.count_ones() <= mask.count_ones()) {
            continue;
        }
        if feasible(mask) {
            best = Some(mask);
        }
    }
    let best = best.ok_or(OracleError::Infeasible)?;
    Ok((best.count_ones() as usize, (0..n).filter(|&v| best >> v & 1 == 1).collect()))
}

fn dominates(closed: &[u32], mask: u32, full: u32) -> bool {
    let mut covered = 0;
    let mut rest = mask;
    while rest > 0 {
        let v = rest.trailing_zeros() as usize;
        covered |= closed[v];
        rest &= rest - 1;
    }
    covered == full
}

fn independent(closed: &[u32], mask: u32) -> bool {
    let mut rest = mask;
    while rest > 0 {
        let v = rest.trailing_zeros() as usize;
        if closed[v] & mask != 1 << v {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// True when the vertices of `mask` induce a connected nonempty subgraph.
fn connected_mask(closed: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    loop {
        let mut grown = seen;
        let mut rest = seen;
        while rest > 0 {
            let v = rest.trailing_zeros() as usize;
            grown |= closed[v] & mask;
            rest &= rest - 1;
        }
        if grown == seen {
            return seen == mask;
        }
        seen = grown;
    }
}

/// Which traversal question [`oracle_hamiltonian`] answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamTask {
    Cycle,
    Path,
    MinLeafTree,
}

/// The oracle's answer: existence for cycles and paths, the exact minimum
/// leaf count over all spanning trees otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamAnswer {
    Exists(bool),
    LeafCount(usize),
}

/// Backtracking search for Hamiltonian cycles and paths, and an exact
/// subset dynamic program for the minimum-leaf spanning tree. Bounded by
/// [`MAX_HAMILTONIAN_ORDER`] / [`MAX_MIN_LEAF_ORDER`].
///
/// Cycles follow the convention that a simple cycle has at least three
/// vertices, so orders one and two answer `false`; the one-vertex graph has
/// a Hamiltonian path and a zero-leaf spanning tree.
pub fn oracle_hamiltonian(g: &Graph, task: HamTask) -> Result<HamAnswer, OracleError> {
    let n = g.n();
    let bound = match task {
        HamTask::Cycle | HamTask::Path => MAX_HAMILTONIAN_ORDER,
        HamTask::MinLeafTree => MAX_MIN_LEAF_ORDER,
    };
    if n > bound {
        return Err(OracleError::TooLarge { n, bound });
    }
    match task {
        HamTask::Cycle => {
            if n < 3 {
                return Ok(HamAnswer::Exists(false));
            }
            Ok(HamAnswer::Exists(extend_path(g, 0, 1 << 0, 1, true)))
        }
        HamTask::Path => {
            if n == 1 {
                return Ok(HamAnswer::Exists(true));
            }
            let found = (0..n).any(|s| extend_path(g, s, 1 << s, 1, false));
            Ok(HamAnswer::Exists(found))
        }
        HamTask::MinLeafTree => min_leaf_count(g).map(HamAnswer::LeafCount),
    }
}

/// Depth-first extension of a simple path; `close` asks for an edge back to
/// vertex 0 at the end, turning the search into a cycle search.
fn extend_path(g: &Graph, last: usize, visited: u32, len: usize, close: bool) -> bool {
    if len == g.n() {
        return !close || g.has_edge(last, 0);
    }
    g.neighbors(last)
        .iter()
        .any(|&w| visited >> w & 1 == 0 && extend_path(g, w, visited | 1 << w, len + 1, close))
}

/// Exact minimum number of leaves over all spanning trees.
///
/// `h[mask][r]` is the minimum leaf count of a spanning tree of the
/// vertices in `mask` rooted at `r`, never charging `r` itself; a tree
/// splits as one branch `t` hanging off `r` (rooted at a neighbor `c`,
/// charged as a leaf exactly when `t = {c}`) plus a tree on the rest, so
/// minimizing over submasks is exact. The root's own charge is settled at
/// the top: it is a leaf exactly when the whole remainder hangs as a single
/// branch.
fn min_leaf_count(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n == 1 {
        return Ok(0);
    }
    const INF: usize = usize::MAX / 2;
    let nbr: Vec<u32> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let full: u32 = (1 << n) - 1;
    let mut h = vec![vec![INF; n]; (full as usize) + 1];
    for r in 0..n {
        h[1 << r][r] = 0;
    }
    // Cost of hanging the branch `t` off a vertex whose neighbors are
    // `nbrs`: the branch root adds a leaf charge only when it is childless.
    let branch = |h: &Vec<Vec<usize>>, t: u32, nbrs: u32| -> usize {
        let mut best = INF;
        let mut cs = t & nbrs;
        while cs > 0 {
            let c = cs.trailing_zeros() as usize;
            best = best.min(h[t as usize][c] + usize::from(t == 1 << c));
            cs &= cs - 1;
        }
        best
    };
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut rest_r = mask;
        while rest_r > 0 {
            let r = rest_r.trailing_zeros() as usize;
            rest_r &= rest_r - 1;
            let others = mask & !(1 << r);
            let mut best = INF;
            let mut t = others;
            while t > 0 {
                let b = branch(&h, t, nbr[r]);
                if b < INF {
                    let tail = h[(mask & !t) as usize][r];
                    if tail < INF {
                        best = best.min(b + tail);
                    }
                }
                t = (t - 1) & others;
            }
            h[mask as usize][r] = best;
        }
    }
    let mut ans = INF;
    for r in 0..n {
        let others = full & !(1 << r);
        let mut t = others;
        while t > 0 {
            let b = branch(&h, t, nbr[r]);
            if b < INF {
                let cand = if t == others {
                    b + 1
                } else {
                    let tail = h[(full & !t) as usize][r];
                    if tail == INF {
                        INF
                    } else {
                        b + tail
                    }
                };
                ans = ans.min(cand);
            }
            t = (t - 1) & others;
        }
    }
    if ans >= INF {
        return Err(OracleError::Infeasible);
    }
    Ok(ans)
}
