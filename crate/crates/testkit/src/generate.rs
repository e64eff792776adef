//! Seeded instance generators.
//!
//! Every generator is a pure function of its [`GenSpec`]: the same spec
//! yields the same graph byte for byte, on any platform, because all
//! randomness comes from a ChaCha8 stream seeded with the spec's 64-bit
//! seed. Three kinds produce random members of a target class by
//! construction — no rejection sampling, so membership is a guarantee
//! rather than an expectation — and the fourth indexes into the exhaustive
//! small-graph enumeration of [`crate::canon`].
//!
//! The sampling is tuned for test coverage, not for uniformity over the
//! class; shapes that exercise distinct code paths (junctions, long
//! corridors, twin classes, cut vertices) appear with healthy frequency.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use ncpath_core::graph::Graph;

use crate::canon;

/// Which family a spec draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    /// Random member of the paths-in-a-tree class (claw-free chordal),
    /// grown as an explicit host-tree model.
    RandomHostTreeNcPaths,
    /// Random connected proper interval graph, from a staircase adjacency.
    RandomProperInterval,
    /// Random connected chordal graph, by simplicial growth. Not claw-free
    /// in general; this kind feeds the recognizers' negative paths.
    RandomChordal,
    /// The `seed`-th graph (mod the count) of the exhaustive enumeration of
    /// all graphs on `n` vertices up to isomorphism, in canonical order.
    ExhaustiveSmall,
}

impl GenKind {
    pub const ALL: [GenKind; 4] = [
        GenKind::RandomHostTreeNcPaths,
        GenKind::RandomProperInterval,
        GenKind::RandomChordal,
        GenKind::ExhaustiveSmall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::RandomHostTreeNcPaths => "random-host-tree-nc-paths",
            GenKind::RandomProperInterval => "random-proper-interval",
            GenKind::RandomChordal => "random-chordal",
            GenKind::ExhaustiveSmall => "exhaustive-small",
        }
    }
}

/// Shape knobs for the host-tree generator; the other kinds ignore them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct GenParams {
    /// Host tree nodes spread at most this wide (must be ≥ 2; junctions
    /// need ≥ 3 to appear at all).
    pub max_degree: usize,
    /// Longest corridor, counted in host tree nodes (must be ≥ 2).
    pub max_piece_len: usize,
    /// Largest twin class planted at a single model position (must be ≥ 1).
    pub twin_multiplicity: usize,
}

impl Default for GenParams {
    fn default() -> GenParams {
        GenParams { max_degree: 4, max_piece_len: 5, twin_multiplicity: 3 }
    }
}

/// A reproducible instance description: same spec, same graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Number of vertices. Exact for every kind.
    pub n: usize,
    pub seed: u64,
    #[serde(default)]
    pub params: GenParams,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unsatisfiable parameters: {0}")]
    Unsatisfiable(String),
}

/// Generates the instance a spec describes.
pub fn gen(spec: &GenSpec) -> Result<Graph, GenError> {
    if spec.n == 0 {
        return Err(GenError::Unsatisfiable("instances need at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GenKind::RandomHostTreeNcPaths => {
            let p = spec.params;
            if p.max_degree < 2 || p.max_piece_len < 2 || p.twin_multiplicity < 1 {
                return Err(GenError::Unsatisfiable(format!(
                    "host-tree growth needs max_degree ≥ 2, max_piece_len ≥ 2 and \
                     twin_multiplicity ≥ 1, got {p:?}"
                )));
            }
            Ok(host_tree_member(spec.n, p, &mut rng))
        }
        GenKind::RandomProperInterval => Ok(proper_interval(spec.n, &mut rng)),
        GenKind::RandomChordal => Ok(chordal(spec.n, &mut rng)),
        GenKind::ExhaustiveSmall => {
            if spec.n > canon::MAX_EXHAUSTIVE_ORDER {
                return Err(GenError::Unsatisfiable(format!(
                    "exhaustive enumeration covers orders 1..={}, got {}",
                    canon::MAX_EXHAUSTIVE_ORDER,
                    spec.n
                )));
            }
            let graphs = canon::all_graphs(spec.n);
            Ok(graphs[(spec.seed % graphs.len() as u64) as usize].clone())
        }
    }
}

/// Growth state for the host-tree generator: host tree nodes ("sites") with
/// their member vertices, plus which sites are terminals open for another
/// piece. Realizing the graph at the end takes co-membership as adjacency.
struct HostTree {
    members: Vec<Vec<usize>>,
    degree: Vec<usize>,
    terminals: Vec<usize>,
    next_vertex: usize,
}

impl HostTree {
    fn site(&mut self) -> usize {
        self.members.push(Vec::new());
        self.degree.push(0);
        self.members.len() - 1
    }

    /// A fresh vertex whose path covers the given sites.
    fn vertex(&mut self, path: &[usize]) {
        for &s in path {
            let v = self.next_vertex;
            self.members[s].push(v);
        }
        self.next_vertex += 1;
    }
}

/// Grows a claw-free chordal graph with exactly `n` vertices as an explicit
/// model: a host tree of terminal, corridor-interior and junction sites,
/// with every vertex occupying a path of sites.
///
/// Moves, applied at a random open terminal until the vertex budget is
/// spent:
///
/// * **corridor** — a fresh chain of sites ending in a new terminal,
///   populated by a staircase of runs (starts and ends both nondecreasing).
///   The staircase keeps the family free of strict containment, which rules
///   out claws within the piece, and makes consecutive sites share a run,
///   which keeps the graph connected. The far terminal gets private
///   vertices so its clique stays maximal.
/// * **junction** — a degree-3 site whose three neighbors are terminals
///   (the attachment point plus two fresh ones), populated by three twin
///   classes, one per pair of legs, each passing through the junction.
/// * **pad** — one more private vertex at an existing terminal; the
///   fallback when the remaining budget is too small for anything else.
///
/// Every move preserves the model invariants, so membership in the class
/// holds by construction; the recognizer re-checks this over thousands of
/// seeds in the integration tests.
fn host_tree_member(n: usize, p: GenParams, rng: &mut ChaCha8Rng) -> Graph {
    let mut h = HostTree {
        members: Vec::new(),
        degree: Vec::new(),
        terminals: Vec::new(),
        next_vertex: 0,
    };
    let root = h.site();
    h.terminals.push(root);
    h.vertex(&[root]);

    while h.next_vertex < n {
        let budget = n - h.next_vertex;
        let open: Vec<usize> = h
            .terminals
            .iter()
            .copied()
            .filter(|&t| h.degree[t] < p.max_degree)
            .collect();
        let t = *open.choose(rng).expect("fresh terminals keep an attachment point open");
        let junction_ok = p.max_degree >= 3 && budget >= 5;
        if budget == 1 {
            h.vertex(&[t]);
        } else if junction_ok && rng.gen_bool(0.35) {
            plant_junction(&mut h, t, budget, p.twin_multiplicity, rng);
        } else {
            grow_corridor(&mut h, t, budget, &p, rng);
        }
    }

    let mut edges = std::collections::BTreeSet::new();
    for site in &h.members {
        for (i, &u) in site.iter().enumerate() {
            for &v in &site[i + 1..] {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("co-membership edges are simple")
}

/// Attaches a corridor of `k` sites at terminal `t` (which serves as
/// position 1). Runs are planned first so the whole piece fits the budget;
/// if the sampled plan is too rich, it degrades to the minimal corridor of
/// one shared vertex plus one private.
fn grow_corridor(h: &mut HostTree, t: usize, budget: usize, p: &GenParams, rng: &mut ChaCha8Rng) {
    let k = rng.gen_range(2..=p.max_piece_len);
    let mut runs: Vec<(usize, usize, usize)> = Vec::new();
    let (mut a, mut b) = (1, (1 + rng.gen_range(1..=3)).min(k));
    runs.push((a, b, rng.gen_range(1..=p.twin_multiplicity)));
    while b < k {
        a = rng.gen_range(a + 1..=b);
        b = (b + rng.gen_range(1..=3)).min(k);
        runs.push((a, b, rng.gen_range(1..=p.twin_multiplicity)));
    }
    let mut far_privates = rng.gen_range(1..=p.twin_multiplicity);
    let cost: usize = far_privates + runs.iter().map(|&(_, _, c)| c).sum::<usize>();
    if cost > budget {
        runs = vec![(1, 2, 1)];
        far_privates = 1;
    }
    let k = runs.last().expect("a corridor has at least one run").1;

    let mut pos_site = vec![t];
    for _ in 2..=k {
        let s = h.site();
        pos_site.push(s);
    }
    h.degree[t] += 1;
    for &s in &pos_site[1..] {
        h.degree[s] = 2;
    }
    let far = *pos_site.last().expect("a corridor spans at least two sites");
    h.degree[far] = 1;
    h.terminals.push(far);

    for &(a, b, copies) in &runs {
        for _ in 0..copies {
            h.vertex(&pos_site[a - 1..b]);
        }
    }
    for _ in 0..far_privates {
        h.vertex(&[far]);
    }
}

/// Attaches a junction at terminal `t`: a degree-3 site with `t` and two
/// fresh terminals as legs, three nonempty twin classes (one per leg pair)
/// passing through, and a private vertex or two at each fresh leg.
fn plant_junction(h: &mut HostTree, t: usize, budget: usize, twin: usize, rng: &mut ChaCha8Rng) {
    let mut sizes = [0usize; 5];
    for s in &mut sizes {
        *s = rng.gen_range(1..=twin);
    }
    if sizes.iter().sum::<usize>() > budget {
        sizes = [1; 5];
    }
    let j = h.site();
    let l2 = h.site();
    let l3 = h.site();
    h.degree[t] += 1;
    h.degree[j] = 3;
    h.degree[l2] = 1;
    h.degree[l3] = 1;
    h.terminals.push(l2);
    h.terminals.push(l3);

    let classes = [[t, j, l2], [t, j, l3], [l2, j, l3]];
    for (class, &count) in classes.iter().zip(&sizes[..3]) {
        for _ in 0..count {
            h.vertex(class);
        }
    }
    for (leg, &count) in [l2, l3].iter().zip(&sizes[3..]) {
        for _ in 0..count {
            h.vertex(&[*leg]);
        }
    }
}

/// A connected proper interval graph from a nondecreasing reach array:
/// vertex `i` is adjacent to every vertex up to `reach[i]`. Nondecreasing
/// reaches are exactly the staircase adjacency matrices of proper interval
/// graphs, and `reach[i] > i` for all but the last vertex keeps the graph
/// connected.
fn proper_interval(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    let mut floor = 0;
    for i in 0..n {
        let lo = floor.max((i + 1).min(n - 1));
        let hi = (i + rng.gen_range(1..=4)).clamp(lo, n - 1);
        let reach = rng.gen_range(lo..=hi);
        floor = reach;
        edges.extend((i + 1..=reach).map(|j| (i, j)));
    }
    Graph::from_edges(n, &edges).expect("staircase edges are simple")
}

/// A connected chordal graph by simplicial growth: each new vertex picks a
/// host and joins a random clique within the host's closed neighborhood, so
/// insertion order reversed is a perfect elimination order.
fn chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let host = rng.gen_range(0..v);
        let mut clique = vec![host];
        let mut pool = adj[host].clone();
        pool.shuffle(rng);
        for c in pool {
            if rng.gen_bool(0.6) && clique.iter().all(|&q| adj[c].contains(&q)) {
                clique.push(c);
            }
        }
        for &q in &clique {
            adj[q].push(v);
            adj[v].push(q);
            edges.push((q, v));
        }
    }
    Graph::from_edges(n, &edges).expect("simplicial growth keeps the graph simple")
}
