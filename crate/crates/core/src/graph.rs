//! Finite simple graphs with bitset adjacency, the graph families used
//! throughout the crate, and the exact graph parameters (chordality,
//! domination number) needed by the reduction corollaries.
//!
//! Vertices carry integer labels. Label order is the canonical vertex
//! order; all operations are pure and leave their input untouched.

use crate::bitset::VertexSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("missing edge ({0}, {1})")]
    MissingEdge(u32, u32),
    #[error("edge ({0}, {1}) already present")]
    EdgeAlreadyPresent(u32, u32),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate label {0}")]
    DuplicateLabel(u32),
    #[error("open neighborhood of an edge is not defined")]
    OpenEdgeNeighborhoodUnsupported,
    #[error("graph with {n} vertices exceeds the exact-search cap {cap}")]
    TooLargeForExactSearch { n: usize, cap: usize },
    #[error("malformed graph file: {0}")]
    ParseError(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborhoodKind {
    Open,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NeighborhoodTarget {
    Vertex(u32),
    Edge(u32, u32),
}

/// Finite simple graph on labeled vertices. Labels are arbitrary distinct
/// `u32`s; adjacency is stored per vertex position as a bit row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    labels: Vec<u32>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph with labels `0..n`.
    pub fn new(n: usize) -> Self {
        Graph {
            labels: (0..n as u32).collect(),
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    pub fn with_labels(labels: Vec<u32>) -> Result<Self, GraphError> {
        let n = labels.len();
        for (i, &l) in labels.iter().enumerate() {
            if labels[..i].contains(&l) {
                return Err(GraphError::DuplicateLabel(l));
            }
        }
        Ok(Graph {
            labels,
            adj: vec![VertexSet::with_capacity(n); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.insert_edge_mut(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn max_label(&self) -> Option<u32> {
        self.labels.iter().copied().max()
    }

    pub(crate) fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    fn index_or_err(&self, label: u32) -> Result<usize, GraphError> {
        self.index_of(label).ok_or(GraphError::UnknownVertex(label))
    }

    pub(crate) fn adj_row(&self, idx: usize) -> &VertexSet {
        &self.adj[idx]
    }

    pub(crate) fn closed_row(&self, idx: usize) -> VertexSet {
        let mut s = self.adj[idx].clone();
        s.insert(idx);
        s
    }

    fn insert_edge_mut(&mut self, u: u32, v: u32) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (i, j) = (self.index_or_err(u)?, self.index_or_err(v)?);
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn has_vertex(&self, label: u32) -> bool {
        self.index_of(label).is_some()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i].contains(j),
            _ => false,
        }
    }

    pub fn degree(&self, v: u32) -> Result<usize, GraphError> {
        Ok(self.adj[self.index_or_err(v)?].len())
    }

    /// Edges as label pairs `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in self.adj[i].iter() {
                if j > i {
                    let (a, b) = (self.labels[i], self.labels[j]);
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    // ---- neighborhoods -------------------------------------------------

    pub fn open_neighborhood(&self, v: u32) -> Result<Vec<u32>, GraphError> {
        let i = self.index_or_err(v)?;
        Ok(self.adj[i].iter().map(|j| self.labels[j]).collect())
    }

    pub fn closed_neighborhood(&self, v: u32) -> Result<Vec<u32>, GraphError> {
        let i = self.index_or_err(v)?;
        Ok(self.closed_row(i).iter().map(|j| self.labels[j]).collect())
    }

    /// `N[e] = N[u] ∪ N[v]` for an edge `e = (u, v)`.
    pub fn edge_neighborhood(&self, u: u32, v: u32) -> Result<Vec<u32>, GraphError> {
        let (i, j) = (self.index_or_err(u)?, self.index_or_err(v)?);
        if !self.adj[i].contains(j) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let s = self.closed_row(i).union(&self.closed_row(j));
        Ok(s.iter().map(|k| self.labels[k]).collect())
    }

    pub(crate) fn edge_neighborhood_set(&self, i: usize, j: usize) -> VertexSet {
        self.closed_row(i).union(&self.closed_row(j))
    }

    /// Unified neighborhood lookup. Edges only have a closed neighborhood.
    pub fn neighborhood(
        &self,
        target: NeighborhoodTarget,
        kind: NeighborhoodKind,
    ) -> Result<Vec<u32>, GraphError> {
        match (target, kind) {
            (NeighborhoodTarget::Vertex(v), NeighborhoodKind::Open) => self.open_neighborhood(v),
            (NeighborhoodTarget::Vertex(v), NeighborhoodKind::Closed) => {
                self.closed_neighborhood(v)
            }
            (NeighborhoodTarget::Edge(u, v), NeighborhoodKind::Closed) => {
                self.edge_neighborhood(u, v)
            }
            (NeighborhoodTarget::Edge(..), NeighborhoodKind::Open) => {
                Err(GraphError::OpenEdgeNeighborhoodUnsupported)
            }
        }
    }

    // ---- pure edits ----------------------------------------------------

    pub fn add_edge(&self, u: u32, v: u32) -> Result<Graph, GraphError> {
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeAlreadyPresent(u, v));
        }
        let mut g = self.clone();
        g.insert_edge_mut(u, v)?;
        Ok(g)
    }

    pub fn remove_edge(&self, u: u32, v: u32) -> Result<Graph, GraphError> {
        let (i, j) = (self.index_or_err(u)?, self.index_or_err(v)?);
        if !self.adj[i].contains(j) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[i].remove(j);
        g.adj[j].remove(i);
        Ok(g)
    }

    /// Induced subgraph on the complement of `remove`; label order kept.
    pub fn remove_vertices(&self, remove: &[u32]) -> Result<Graph, GraphError> {
        let mut drop = VertexSet::with_capacity(self.n());
        for &v in remove {
            drop.insert(self.index_or_err(v)?);
        }
        let keep: Vec<usize> = (0..self.n()).filter(|i| !drop.contains(*i)).collect();
        Ok(self.induced_by_indices(&keep))
    }

    /// Induced subgraph on the given labels (must all exist); label order kept.
    pub fn induced(&self, vertices: &[u32]) -> Result<Graph, GraphError> {
        let mut keep = VertexSet::with_capacity(self.n());
        for &v in vertices {
            keep.insert(self.index_or_err(v)?);
        }
        let idxs: Vec<usize> = (0..self.n()).filter(|i| keep.contains(*i)).collect();
        Ok(self.induced_by_indices(&idxs))
    }

    fn induced_by_indices(&self, idxs: &[usize]) -> Graph {
        let n = idxs.len();
        let mut pos = vec![usize::MAX; self.n()];
        for (new, &old) in idxs.iter().enumerate() {
            pos[old] = new;
        }
        let labels = idxs.iter().map(|&i| self.labels[i]).collect();
        let mut adj = vec![VertexSet::with_capacity(n); n];
        for (new, &old) in idxs.iter().enumerate() {
            for nb in self.adj[old].iter() {
                if pos[nb] != usize::MAX {
                    adj[new].insert(pos[nb]);
                }
            }
        }
        Graph { labels, adj }
    }

    /// Disjoint union; the second operand's labels are offset past this
    /// graph's maximum label. Returns the resulting graph together with the
    /// label map `(old, new)` applied to `other`.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, Vec<(u32, u32)>) {
        let offset = self.max_label().map_or(0, |m| m + 1);
        let n = self.n() + other.n();
        let mut labels = self.labels.clone();
        let map: Vec<(u32, u32)> = other.labels.iter().map(|&l| (l, l + offset)).collect();
        labels.extend(map.iter().map(|&(_, new)| new));
        let mut adj = vec![VertexSet::with_capacity(n); n];
        for (row, self_row) in adj.iter_mut().zip(&self.adj) {
            for j in self_row.iter() {
                row.insert(j);
            }
        }
        let base = self.n();
        for i in 0..other.n() {
            for j in other.adj[i].iter() {
                adj[base + i].insert(base + j);
            }
        }
        (Graph { labels, adj }, map)
    }

    // ---- graph parameters ------------------------------------------------

    /// Perfect elimination order when the graph is chordal: each vertex's
    /// neighbors later in the order form a clique. Found by maximum
    /// cardinality search; ties broken by smallest label.
    pub fn perfect_elimination_order(&self) -> Option<Vec<u32>> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut selection = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&i| !picked[i])
                .max_by(|&a, &b| {
                    weight[a]
                        .cmp(&weight[b])
                        .then(self.labels[b].cmp(&self.labels[a]))
                })
                .unwrap();
            picked[v] = true;
            selection.push(v);
            for nb in self.adj[v].iter() {
                if !picked[nb] {
                    weight[nb] += 1;
                }
            }
        }
        selection.reverse();
        // Candidate PEO; verify later-neighbor cliques.
        let mut pos = vec![0usize; n];
        for (p, &v) in selection.iter().enumerate() {
            pos[v] = p;
        }
        for (p, &v) in selection.iter().enumerate() {
            let later: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] > p).collect();
            for (a, &x) in later.iter().enumerate() {
                for &y in &later[a + 1..] {
                    if !self.adj[x].contains(y) {
                        return None;
                    }
                }
            }
        }
        Some(selection.iter().map(|&i| self.labels[i]).collect())
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Exact domination number by branch and bound over who dominates the
    /// first undominated vertex.
    pub fn domination_number(&self, cap: usize) -> Result<u32, GraphError> {
        let n = self.n();
        if n > cap {
            return Err(GraphError::TooLargeForExactSearch { n, cap });
        }
        if n == 0 {
            return Ok(0);
        }
        let closed: Vec<VertexSet> = (0..n).map(|i| self.closed_row(i)).collect();
        let mut best = n as u32;
        let undominated = VertexSet::full(n);
        fn rec(closed: &[VertexSet], undominated: &VertexSet, chosen: u32, best: &mut u32) {
            if chosen >= *best {
                return;
            }
            let u = match undominated.first() {
                None => {
                    *best = chosen;
                    return;
                }
                Some(u) => u,
            };
            for w in closed[u].iter() {
                rec(
                    closed,
                    &undominated.difference(&closed[w]),
                    chosen + 1,
                    best,
                );
            }
        }
        rec(&closed, &undominated, 0, &mut best);
        Ok(best)
    }

    // ---- file formats ----------------------------------------------------

    /// Text format: `n <count>` followed by `e <u> <v>` lines; `#` starts a
    /// comment. Vertices are written positionally as `0..n-1`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let canonical = self.labels.iter().copied().eq(0..self.n() as u32);
        if !canonical {
            out.push_str("# original-labels:");
            for l in &self.labels {
                out.push_str(&format!(" {l}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("n {}\n", self.n()));
        for i in 0..self.n() {
            for j in self.adj[i].iter() {
                if j > i {
                    out.push_str(&format!("e {i} {j}\n"));
                }
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Graph, GraphError> {
        let mut g: Option<Graph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let tag = it.next().unwrap();
            let err = |m: String| GraphError::ParseError(format!("line {}: {m}", lineno + 1));
            match tag {
                "n" => {
                    let n: usize = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("expected `n <count>`".into()))?;
                    if g.is_some() {
                        return Err(err("duplicate `n` line".into()));
                    }
                    g = Some(Graph::new(n));
                }
                "e" => {
                    let g = g
                        .as_mut()
                        .ok_or_else(|| err("edge before `n` line".into()))?;
                    let u: u32 = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("expected `e <u> <v>`".into()))?;
                    let v: u32 = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("expected `e <u> <v>`".into()))?;
                    g.insert_edge_mut(u, v).map_err(|e| err(e.to_string()))?;
                }
                other => return Err(err(format!("unknown record `{other}`"))),
            }
        }
        g.ok_or(GraphError::ParseError("missing `n` line".into()))
    }

    pub fn to_json(&self) -> GraphJson {
        let pos = |l: u32| self.index_of(l).unwrap() as u32;
        GraphJson {
            n: self.n(),
            edges: self
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (pos(u), pos(v));
                    [a.min(b), a.max(b)]
                })
                .collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph, GraphError> {
        let edges: Vec<(u32, u32)> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(j.n, &edges)
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
}

// ---- families -------------------------------------------------------------

/// `n`-gon power: vertices `0..n-1` mod n, edge iff cyclic distance <= r.
/// The empty graph for `n <= 0`; complete for `n <= 2r+1`.
pub fn cycle_power(n: i64, r: u32) -> Graph {
    let n = n.max(0) as usize;
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i).min(n - (j - i));
            if d as u64 <= r as u64 {
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
    }
    g
}

/// Path power: vertices `0..n-1`, edge iff `|i-j| <= r`.
pub fn path_power(n: i64, r: u32) -> Graph {
    let n = n.max(0) as usize;
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..(i + 1 + r as usize).min(n) {
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
    }
    g
}

pub fn path(n: i64) -> Graph {
    path_power(n, 1)
}

pub fn cycle(n: i64) -> Graph {
    cycle_power(n, 1)
}

pub fn complete(n: i64) -> Graph {
    let n = n.max(0);
    path_power(n, n.max(1) as u32)
}

/// Cylinder grid `P_m x C_k`: vertex `(i, j)` is labeled `i*k + j`,
/// with ring edges inside each layer and rungs between layers.
pub fn cylinder(m: u32, k: u32) -> Graph {
    assert!(m >= 1 && k >= 3, "cylinder requires m >= 1, k >= 3");
    let (m, k) = (m as usize, k as usize);
    let mut g = Graph::new(m * k);
    let lab = |i: usize, j: usize| i * k + j;
    for i in 0..m {
        for j in 0..k {
            let a = lab(i, j);
            let b = lab(i, (j + 1) % k);
            g.adj[a].insert(b);
            g.adj[b].insert(a);
            if i + 1 < m {
                let c = lab(i + 1, j);
                g.adj[a].insert(c);
                g.adj[c].insert(a);
            }
        }
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubdivideMode {
    /// Every edge becomes three segments (two new vertices per edge).
    AllEdgesInto3Parts,
    /// One edge is replaced by a path with three new vertices (four segments).
    OneEdgeWith3NewVertices,
}

/// New vertices take fresh labels past the current maximum, assigned in
/// sorted edge order.
pub fn subdivide(
    g: &Graph,
    mode: SubdivideMode,
    edge: Option<(u32, u32)>,
) -> Result<Graph, GraphError> {
    let mut next = g.max_label().map_or(0, |m| m + 1);
    match mode {
        SubdivideMode::AllEdgesInto3Parts => {
            let edges = g.edges();
            let mut labels = g.labels.clone();
            let mut new_edges: Vec<(u32, u32)> = Vec::new();
            for &(u, v) in &edges {
                let (a, b) = (next, next + 1);
                next += 2;
                labels.push(a);
                labels.push(b);
                new_edges.extend([(u, a), (a, b), (b, v)]);
            }
            let mut out = Graph::with_labels(labels)?;
            for (u, v) in new_edges {
                out.insert_edge_mut(u, v)?;
            }
            Ok(out)
        }
        SubdivideMode::OneEdgeWith3NewVertices => {
            let (u, v) = edge.expect("OneEdgeWith3NewVertices requires an edge");
            let without = g.remove_edge(u, v)?;
            let mut labels = without.labels.clone();
            let (a, b, c) = (next, next + 1, next + 2);
            labels.extend([a, b, c]);
            let mut out = Graph::with_labels(labels)?;
            for i in 0..without.n() {
                for j in without.adj[i].iter() {
                    if j > i {
                        out.insert_edge_mut(without.labels[i], without.labels[j])?;
                    }
                }
            }
            for (x, y) in [(u, a), (a, b), (b, c), (c, v)] {
                out.insert_edge_mut(x, y)?;
            }
            Ok(out)
        }
    }
}

/// Declarative description of a generated graph, mirroring the `gen` CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum FamilySpec {
    Path {
        n: i64,
    },
    Cycle {
        n: i64,
    },
    Complete {
        n: i64,
    },
    PathPower {
        n: i64,
        r: u32,
    },
    CyclePower {
        n: i64,
        r: u32,
    },
    Cylinder {
        m: u32,
        k: u32,
    },
    Subdiv3All {
        base: Box<FamilySpec>,
    },
    Subdiv3Edge {
        base: Box<FamilySpec>,
        edge: (u32, u32),
    },
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Path { n } => Ok(path(*n)),
        FamilySpec::Cycle { n } => Ok(cycle(*n)),
        FamilySpec::Complete { n } => Ok(complete(*n)),
        FamilySpec::PathPower { n, r } => Ok(path_power(*n, *r)),
        FamilySpec::CyclePower { n, r } => Ok(cycle_power(*n, *r)),
        FamilySpec::Cylinder { m, k } => Ok(cylinder(*m, *k)),
        FamilySpec::Subdiv3All { base } => subdivide(
            &build_family(base)?,
            SubdivideMode::AllEdgesInto3Parts,
            None,
        ),
        FamilySpec::Subdiv3Edge { base, edge } => subdivide(
            &build_family(base)?,
            SubdivideMode::OneEdgeWith3NewVertices,
            Some(*edge),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_power_neighborhoods() {
        let g = cycle_power(8, 2);
        let mut nb = g.open_neighborhood(0).unwrap();
        nb.sort_unstable();
        assert_eq!(nb, vec![1, 2, 6, 7]);
        assert_eq!(cycle_power(6, 1).edge_count(), 6);
        // all cyclic distances in C_5 are <= 2
        assert_eq!(cycle_power(5, 2), complete(5));
        assert_eq!(cycle_power(0, 3).n(), 0);
    }

    #[test]
    fn power_one_is_the_plain_family() {
        for n in 3..10i64 {
            let expect: Vec<(u32, u32)> = (0..n as u32 - 1)
                .map(|i| (i, i + 1))
                .chain([(0, n as u32 - 1)])
                .collect();
            let mut expect = expect;
            expect.sort_unstable();
            assert_eq!(cycle_power(n, 1).edges(), expect, "C_{n}");
            assert_eq!(
                path_power(n, 1).edges(),
                (0..n as u32 - 1).map(|i| (i, i + 1)).collect::<Vec<_>>(),
                "P_{n}"
            );
        }
    }

    #[test]
    fn path_power_edges() {
        let g = path_power(4, 2);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(path_power(3, 3), complete(3));
        assert_eq!(path_power(0, 2).n(), 0);
        assert_eq!(path_power(-1, 2).n(), 0);
    }

    #[test]
    fn cylinder_counts() {
        let g = cylinder(2, 5);
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(cylinder(1, 5), cycle(5));
        let g = cylinder(4, 5);
        assert_eq!(g.n(), 20);
        assert_eq!(g.degree(7).unwrap(), 4); // interior vertex (1, 2)
    }

    #[test]
    fn subdivision() {
        let g3 = subdivide(&cycle(3), SubdivideMode::AllEdgesInto3Parts, None).unwrap();
        assert_eq!(g3.n(), 9);
        assert_eq!(g3.edge_count(), 9);
        assert!(g3.labels().iter().all(|&v| g3.degree(v).unwrap() == 2));

        let p5 = subdivide(
            &complete(2),
            SubdivideMode::OneEdgeWith3NewVertices,
            Some((0, 1)),
        )
        .unwrap();
        assert_eq!(p5.n(), 5);
        assert_eq!(p5.edge_count(), 4);
        let degs: Vec<usize> = p5.labels().iter().map(|&v| p5.degree(v).unwrap()).collect();
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 2);

        assert_eq!(
            subdivide(&complete(4), SubdivideMode::AllEdgesInto3Parts, None)
                .unwrap()
                .n(),
            16
        );
        assert_eq!(
            subdivide(
                &cycle(6),
                SubdivideMode::OneEdgeWith3NewVertices,
                Some((0, 2))
            ),
            Err(GraphError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn neighborhoods() {
        let c6 = cycle(6);
        let mut nb = c6.closed_neighborhood(0).unwrap();
        nb.sort_unstable();
        assert_eq!(nb, vec![0, 1, 5]);
        let mut ne = c6.edge_neighborhood(0, 1).unwrap();
        ne.sort_unstable();
        assert_eq!(ne, vec![0, 1, 2, 5]);
        assert_eq!(
            c6.edge_neighborhood(0, 2),
            Err(GraphError::MissingEdge(0, 2))
        );
        assert_eq!(c6.open_neighborhood(9), Err(GraphError::UnknownVertex(9)));

        // unified entry point
        assert_eq!(
            c6.neighborhood(NeighborhoodTarget::Edge(0, 1), NeighborhoodKind::Closed)
                .unwrap(),
            c6.edge_neighborhood(0, 1).unwrap()
        );
        assert_eq!(
            c6.neighborhood(NeighborhoodTarget::Edge(0, 1), NeighborhoodKind::Open),
            Err(GraphError::OpenEdgeNeighborhoodUnsupported)
        );
        assert_eq!(
            c6.neighborhood(NeighborhoodTarget::Vertex(0), NeighborhoodKind::Open)
                .unwrap(),
            c6.open_neighborhood(0).unwrap()
        );
    }

    #[test]
    fn closed_equals_open_plus_self() {
        for g in [cycle(7), path_power(9, 3), cylinder(2, 5)] {
            for &v in g.labels() {
                let mut open = g.open_neighborhood(v).unwrap();
                open.push(v);
                open.sort_unstable();
                let mut closed = g.closed_neighborhood(v).unwrap();
                closed.sort_unstable();
                assert_eq!(open, closed);
            }
            for (u, v) in g.edges() {
                let mut lhs = g.edge_neighborhood(u, v).unwrap();
                lhs.sort_unstable();
                let mut rhs = g.closed_neighborhood(u).unwrap();
                rhs.extend(g.closed_neighborhood(v).unwrap());
                rhs.sort_unstable();
                rhs.dedup();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn edits() {
        let c9p = cycle(9).add_edge(0, 4).unwrap();
        assert!(c9p.has_edge(0, 4));
        assert_eq!(c9p.remove_edge(0, 4).unwrap(), cycle(9));
        assert_eq!(
            cycle(9).add_edge(0, 1),
            Err(GraphError::EdgeAlreadyPresent(0, 1))
        );

        let p5 = cycle(6).remove_vertices(&[0]).unwrap();
        assert_eq!(p5.labels(), &[1, 2, 3, 4, 5]);
        assert_eq!(p5.edges(), vec![(1, 2), (2, 3), (3, 4), (4, 5)]);

        let (two_k2, map) = complete(2).disjoint_union(&complete(2));
        assert_eq!(two_k2.n(), 4);
        assert_eq!(two_k2.edge_count(), 2);
        assert_eq!(map, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn induced_composition() {
        // G[W][U] = G[W ∩ U] for U ⊆ W
        let g = cycle_power(9, 2);
        let w = [0, 1, 2, 4, 6, 8];
        let u = [0, 2, 6];
        let lhs = g.induced(&w).unwrap().induced(&u).unwrap();
        let rhs = g.induced(&u).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chordality() {
        assert!(!cycle(4).is_chordal());
        assert!(complete(4).is_chordal());
        let c9 = subdivide(&cycle(3), SubdivideMode::AllEdgesInto3Parts, None).unwrap();
        assert!(!c9.is_chordal());
        for n in 4..9 {
            assert!(!cycle(n).is_chordal());
            assert!(complete(n).is_chordal());
            assert!(path(n).is_chordal()); // trees
        }
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let order = star.perfect_elimination_order().unwrap();
        assert_eq!(order.len(), 5);
        // witness property: later neighbors of each vertex form a clique
        for (p, &v) in order.iter().enumerate() {
            let later: Vec<u32> = star
                .open_neighborhood(v)
                .unwrap()
                .into_iter()
                .filter(|w| order[p + 1..].contains(w))
                .collect();
            for (a, &x) in later.iter().enumerate() {
                for &y in &later[a + 1..] {
                    assert!(star.has_edge(x, y));
                }
            }
        }
    }

    /// Exhaustive subset-scan oracle for the domination number.
    fn naive_domination(g: &Graph) -> u32 {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        let closed: Vec<VertexSet> = (0..n).map(|i| g.closed_row(i)).collect();
        for k in 0..=n {
            for mask in 0u32..1 << n {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut covered = VertexSet::with_capacity(n);
                for (i, cl) in closed.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        covered.union_with(cl);
                    }
                }
                if covered.len() == n {
                    return k as u32;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn domination() {
        assert_eq!(cycle(6).domination_number(24).unwrap(), 2);
        assert_eq!(complete(5).domination_number(24).unwrap(), 1);
        assert_eq!(Graph::new(0).domination_number(24).unwrap(), 0);
        for g in [cycle(7), path(9), cylinder(2, 5), cycle_power(11, 2)] {
            assert_eq!(g.domination_number(24).unwrap(), naive_domination(&g));
        }
        assert!(matches!(
            complete(30).domination_number(24),
            Err(GraphError::TooLargeForExactSearch { .. })
        ));
    }

    #[test]
    fn text_roundtrip() {
        let g = cycle_power(9, 2);
        let text = g.to_text();
        assert_eq!(Graph::from_text(&text).unwrap(), g);
        let parsed = Graph::from_text("# comment\nn 3\ne 0 1 # trailing\ne 1 2\n").unwrap();
        assert_eq!(parsed.edges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::from_text("e 0 1\n").is_err());
        assert!(Graph::from_text("n 2\ne 0 5\n").is_err());

        let j = g.to_json();
        assert_eq!(Graph::from_json(&j).unwrap(), g);
    }

    #[test]
    fn family_spec_builds() {
        let g = build_family(&FamilySpec::Subdiv3All {
            base: Box::new(FamilySpec::Cycle { n: 3 }),
        })
        .unwrap();
        assert_eq!(g.n(), 9);
        let g = build_family(&FamilySpec::CyclePower { n: 14, r: 2 }).unwrap();
        assert_eq!(g.edge_count(), 28);
    }
}
