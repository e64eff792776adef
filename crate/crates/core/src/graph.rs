//! Simple undirected graphs with sorted adjacency lists, text parsing,
//! connected components, block-cut trees and twin partitions.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Errors produced while building or parsing a graph, or by operations whose
/// preconditions on the input graph are violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// The text input could not be parsed; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// An edge endpoint is not in `0..n`.
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    /// Self-loops are not allowed.
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    /// Parallel edges are not allowed.
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    /// The header declared a different number of edges than were listed.
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    /// The operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,
    /// The operation requires at least one vertex.
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// An undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Adjacency test by binary search.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Parses either of the two supported text formats.
    ///
    /// * Edge list: optional `#` comment lines, a header `n m`, then `m`
    ///   lines `u v` with 0-based endpoints.
    /// * DIMACS: `c` comment lines, a header `p edge n m`, then `m` lines
    ///   `e u v` with 1-based endpoints.
    ///
    /// The format is detected from the first non-comment line.
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        for line in text.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return if t.starts_with('p') || t.starts_with('c') || t.starts_with('e') {
                Self::parse_dimacs(text)
            } else {
                Self::parse_edge_list(text)
            };
        }
        Err(GraphError::Parse { line: 1, msg: "no content".into() })
    }

    fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_ascii_whitespace();
            let a = it.next();
            let b = it.next();
            let rest = it.next();
            let (a, b) = match (a, b, rest) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("expected two integers, got {line:?}"),
                    })
                }
            };
            let parse = |s: &str| -> Result<usize, GraphError> {
                s.parse().map_err(|_| GraphError::Parse {
                    line: lineno,
                    msg: format!("invalid integer {s:?}"),
                })
            };
            let (x, y) = (parse(a)?, parse(b)?);
            if header.is_none() {
                header = Some((x, y));
            } else {
                edges.push((x, y));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 1, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(GraphError::EdgeCountMismatch { declared: m, found: edges.len() });
        }
        Graph::from_edges(n, &edges)
    }

    fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let toks: Vec<&str> = line.split_ascii_whitespace().collect();
            match toks.as_slice() {
                ["p", "edge", n, m] => {
                    if header.is_some() {
                        return Err(GraphError::Parse {
                            line: lineno,
                            msg: "duplicate problem line".into(),
                        });
                    }
                    let parse = |s: &str| -> Result<usize, GraphError> {
                        s.parse().map_err(|_| GraphError::Parse {
                            line: lineno,
                            msg: format!("invalid integer {s:?}"),
                        })
                    };
                    header = Some((parse(n)?, parse(m)?));
                }
                ["e", u, v] => {
                    let n = header
                        .ok_or(GraphError::Parse {
                            line: lineno,
                            msg: "edge before problem line".into(),
                        })?
                        .0;
                    let parse = |s: &str| -> Result<usize, GraphError> {
                        let x: usize = s.parse().map_err(|_| GraphError::Parse {
                            line: lineno,
                            msg: format!("invalid integer {s:?}"),
                        })?;
                        if x == 0 || x > n {
                            return Err(GraphError::VertexOutOfRange { v: x, n });
                        }
                        Ok(x - 1)
                    };
                    edges.push((parse(u)?, parse(v)?));
                }
                _ => {
                    return Err(GraphError::Parse {
                        line: lineno,
                        msg: format!("unrecognized line {line:?}"),
                    })
                }
            }
        }
        let (n, m) =
            header.ok_or(GraphError::Parse { line: 1, msg: "missing problem line".into() })?;
        if edges.len() != m {
            return Err(GraphError::EdgeCountMismatch { declared: m, found: edges.len() });
        }
        Graph::from_edges(n, &edges)
    }

    /// Renders the graph in edge-list format, with an optional leading `#`
    /// comment (the text is prefixed with `# ` per line).
    pub fn to_edge_list_string(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for line in c.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "{} {}", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True when the graph is connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.connected_components().len() == 1
    }

    /// Induced subgraph on `vertices` (deduplicated), together with the map
    /// from new vertex ids to the original ids (sorted ascending).
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &keep {
            for &w in &self.adj[v] {
                if v < w && new_id[w] != usize::MAX {
                    edges.push((new_id[v], new_id[w]));
                }
            }
        }
        let g = Graph::from_edges(keep.len(), &edges).expect("induced subgraph is simple");
        (g, keep)
    }
}

/// Decomposition of a graph into 2-connected blocks and cut vertices.
///
/// The block-cut tree has one node per block and one per cut vertex, with an
/// edge whenever the cut vertex belongs to the block. Every graph edge lies
/// in exactly one block; an isolated vertex forms a single-vertex block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Blocks as sorted vertex lists, in discovery order.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices.
    pub cut_vertices: Vec<usize>,
    /// `is_cut[v]` for every vertex.
    pub is_cut: Vec<bool>,
    /// Per block, its cut vertices (sorted).
    pub block_cuts: Vec<Vec<usize>>,
    /// Number of blocks containing exactly one cut vertex, or 1 when the
    /// graph has no cut vertex at all.
    pub leaf_count: usize,
}

impl BlockCutTree {
    /// Indices of blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.blocks[b].binary_search(&v).is_ok()).collect()
    }
}

/// Computes the block-cut tree with a single non-recursive depth-first
/// traversal (explicit stack), so million-vertex path graphs do not overflow
/// the call stack.
pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut timer = 0usize;

    // Frame: (vertex, parent, next neighbor index to look at).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            disc[root] = timer;
            timer += 1;
            continue;
        }
        let mut root_children = 0usize;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p closes a block through child v.
                        if p != root || root_children > 1 {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] {
                                edge_stack.pop();
                                block.push(a);
                                block.push(b);
                            } else {
                                break;
                            }
                        }
                        // The edge (p, v) itself.
                        if let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }

    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let block_cuts: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| is_cut[v]).collect())
        .collect();
    let leaf_count = if cut_vertices.is_empty() {
        1
    } else {
        block_cuts.iter().filter(|c| c.len() == 1).count()
    };
    BlockCutTree { blocks, cut_vertices, is_cut, block_cuts, leaf_count }
}

/// Partition of the vertices into classes of equal closed neighborhood
/// (true twins).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Class index per vertex.
    pub class_of: Vec<usize>,
    /// Classes as sorted vertex lists, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

/// Groups vertices by closed neighborhood. Runs in `O(n + m)` expected time
/// (one hash per vertex over its adjacency list).
pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        let mut key = Vec::with_capacity(g.degree(v) + 1);
        let pos = g.neighbors(v).partition_point(|&w| w < v);
        key.extend_from_slice(&g.neighbors(v)[..pos]);
        key.push(v);
        key.extend_from_slice(&g.neighbors(v)[pos..]);
        groups.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups
        .into_values()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort_by_key(|c| c[0]);
    let mut class_of = vec![0usize; g.n()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    TwinPartition { class_of, classes }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn make_graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// The net: a triangle 0,1,2 with pendant vertices 3,4,5.
    fn net() -> Graph {
        make_graph(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    }

    #[test]
    fn parse_edge_list_with_comments() {
        let text = "# generated\n# second line\n4 3\n0 1\n1 2\n2 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_dimacs() {
        let text = "c the net\np edge 6 6\ne 1 2\ne 2 3\ne 1 3\ne 1 4\ne 2 5\ne 3 6\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, net());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = net();
        let text = g.to_edge_list_string(Some("net"));
        assert!(text.starts_with("# net\n6 6\n"));
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(Graph::parse(""), Err(GraphError::Parse { .. })));
        assert!(matches!(Graph::parse("x y\n"), Err(GraphError::Parse { .. })));
        assert!(matches!(
            Graph::parse("2 1\n0 0\n"),
            Err(GraphError::SelfLoop { v: 0 })
        ));
        assert!(matches!(
            Graph::parse("2 2\n0 1\n1 0\n"),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::parse("2 1\n0 5\n"),
            Err(GraphError::VertexOutOfRange { v: 5, n: 2 })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1\n"),
            Err(GraphError::EdgeCountMismatch { declared: 2, found: 1 })
        ));
        assert!(matches!(
            Graph::parse("p edge 2 1\ne 0 1\n"),
            Err(GraphError::VertexOutOfRange { v: 0, n: 2 })
        ));
    }

    #[test]
    fn components_and_connectivity() {
        let g = make_graph(5, &[(0, 1), (3, 4)]);
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(net().is_connected());
    }

    #[test]
    fn induced_subgraph_keeps_only_inner_edges() {
        let (h, map) = net().induced(&[0, 1, 2, 4]);
        assert_eq!(map, vec![0, 1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3)]);
    }

    #[test]
    fn block_cut_tree_of_net() {
        let bct = block_cut_tree(&net());
        let mut blocks = bct.blocks.clone();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(bct.cut_vertices, vec![0, 1, 2]);
        assert_eq!(bct.leaf_count, 3);
    }

    #[test]
    fn block_cut_tree_of_path() {
        let bct = block_cut_tree(&make_graph(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(bct.cut_vertices, vec![1, 2]);
        assert_eq!(bct.blocks.len(), 3);
        assert_eq!(bct.leaf_count, 2);
    }

    #[test]
    fn block_cut_tree_without_cut_vertices() {
        let bct = block_cut_tree(&make_graph(3, &[(0, 1), (1, 2), (0, 2)]));
        assert_eq!(bct.blocks, vec![vec![0, 1, 2]]);
        assert!(bct.cut_vertices.is_empty());
        assert_eq!(bct.leaf_count, 1);

        let single = block_cut_tree(&make_graph(1, &[]));
        assert_eq!(single.blocks, vec![vec![0]]);
        assert_eq!(single.leaf_count, 1);
    }

    /// Independent check: v is a cut vertex iff deleting it increases the
    /// number of connected components restricted to its component.
    fn naive_cut_vertices(g: &Graph) -> Vec<usize> {
        let base = g.connected_components().len();
        (0..g.n())
            .filter(|&v| {
                let rest: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
                let (h, _) = g.induced(&rest);
                h.connected_components().len() > base.saturating_sub(
                    if g.degree(v) == 0 { 1 } else { 0 },
                )
            })
            .collect()
    }

    #[test]
    fn cut_vertices_match_naive_on_small_random_graphs() {
        // Deterministic LCG so the test is reproducible.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for _ in 0..300 {
            let n = 2 + next() % 8;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = make_graph(n, &edges);
            let bct = block_cut_tree(&g);
            assert_eq!(bct.cut_vertices, naive_cut_vertices(&g), "graph: {:?}", g.edges());
            // Every edge lies in exactly one block.
            let mut edge_count = 0usize;
            for b in &bct.blocks {
                let (h, _) = g.induced(b);
                edge_count += h.m();
            }
            assert_eq!(edge_count, g.m());
        }
    }

    #[test]
    fn twin_partition_examples() {
        // True twins 0, 1 (adjacent, same closed neighborhood).
        let g = make_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let tp = twin_partition(&g);
        assert_eq!(tp.classes, vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(tp.class_of, vec![0, 0, 1, 2]);

        let k4 = make_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(twin_partition(&k4).classes, vec![vec![0, 1, 2, 3]]);

        let p4 = make_graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(twin_partition(&p4).classes.len(), 4);
    }
}
