//! Certificate-checked graph reductions.
//!
//! Every checker inspects a purely combinatorial condition (plus, for the
//! two rules whose hypotheses mention contractibility, an acyclicity check
//! by the homology oracle) and, when applicable, returns a [`SplitClaim`]:
//! an asserted equation between homology signatures of derived graphs.
//! Claims are data; [`verify_claim`] evaluates both sides with the exact
//! homology oracle in a separate pass, so negative controls are possible
//! and claim generation stays cheap.

use crate::complex::TopologyError;
use crate::config::Budgets;
use crate::graph::{subdivide, Graph, GraphError, SubdivideMode};
use crate::homology::{ind_homology, HomologySignature};
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

/// Errors from checkers whose hypotheses need the homology oracle.
#[derive(Debug, Error)]
pub enum RewriteError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClaimKind {
    Fold,
    ClosedNbhd,
    IsolatingEdge,
    P4Split,
    GeneralT,
    MayerVietoris,
    CliqueNbhd,
    Degree1,
    Degree2Rewire,
    Subdiv3,
}

/// One side of a claim: a formal sum of suspended independence-complex
/// signatures, `sum_t shift(sig(Ind(graph_t)), shift_t)`.
#[derive(Clone, Debug, Serialize)]
pub struct SigRecipe {
    pub terms: Vec<SigTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigTerm {
    pub graph: GraphRef,
    pub shift: u32,
}

/// A graph plus a short description of how it was derived.
#[derive(Clone, Debug, Serialize)]
pub struct GraphRef {
    pub derivation: String,
    #[serde(skip)]
    pub graph: Graph,
}

impl SigRecipe {
    fn one(derivation: &str, graph: Graph) -> Self {
        SigRecipe {
            terms: vec![SigTerm {
                graph: GraphRef {
                    derivation: derivation.into(),
                    graph,
                },
                shift: 0,
            }],
        }
    }

    fn term(mut self, derivation: &str, graph: Graph, shift: u32) -> Self {
        self.terms.push(SigTerm {
            graph: GraphRef {
                derivation: derivation.into(),
                graph,
            },
            shift,
        });
        self
    }

    fn empty() -> Self {
        SigRecipe { terms: Vec::new() }
    }

    pub fn evaluate(&self, budgets: &Budgets) -> Result<HomologySignature, TopologyError> {
        let mut acc = HomologySignature::zero();
        for t in &self.terms {
            acc = acc.add(&ind_homology(&t.graph.graph, budgets)?.shift(t.shift));
        }
        Ok(acc)
    }
}

/// An asserted equation between homology signatures of derived graphs.
#[derive(Clone, Debug, Serialize)]
pub struct SplitClaim {
    pub kind: ClaimKind,
    pub description: String,
    pub lhs: SigRecipe,
    pub rhs: SigRecipe,
    /// Caveats such as contractibility being checked at homology level.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub kind: ClaimKind,
    pub description: String,
    pub notes: Vec<String>,
    pub lhs_signature: HomologySignature,
    pub rhs_signature: HomologySignature,
    pub pass: bool,
    pub runtime_ms: u64,
}

/// Evaluates both sides of a claim with the homology oracle.
pub fn verify_claim(claim: &SplitClaim, budgets: &Budgets) -> Result<ClaimReport, TopologyError> {
    let start = Instant::now();
    let lhs = claim.lhs.evaluate(budgets)?;
    let rhs = claim.rhs.evaluate(budgets)?;
    Ok(ClaimReport {
        kind: claim.kind,
        description: claim.description.clone(),
        notes: claim.notes.clone(),
        pass: lhs == rhs,
        lhs_signature: lhs,
        rhs_signature: rhs,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

const HOMOLOGY_PROXY_NOTE: &str =
    "contractibility hypothesis checked at homology level (acyclic signature)";

// ---- vertex rules ---------------------------------------------------------

/// Fold: `N(u) ⊆ N(v)` lets `v` be deleted without changing the signature.
pub fn check_fold(g: &Graph, u: u32, v: u32) -> Result<Option<SplitClaim>, GraphError> {
    let (i, j) = indices(g, u, v)?;
    if u == v || !g.adj_row(i).is_subset(g.adj_row(j)) {
        return Ok(None);
    }
    Ok(Some(SplitClaim {
        kind: ClaimKind::Fold,
        description: format!("fold: N({u}) ⊆ N({v}), delete {v}"),
        lhs: SigRecipe::one("G", g.clone()),
        rhs: SigRecipe::one("G \\ v", g.remove_vertices(&[v])?),
        notes: vec![],
    }))
}

/// Closed-neighborhood split: `N[u] ⊆ N[v]` gives
/// `sig(G) = sig(G \ v) + shift(sig(G \ N[v]), 1)`.
pub fn check_closed_nbhd(g: &Graph, u: u32, v: u32) -> Result<Option<SplitClaim>, GraphError> {
    let (i, j) = indices(g, u, v)?;
    if u == v || !g.closed_row(i).is_subset(&g.closed_row(j)) {
        return Ok(None);
    }
    let nv = g.closed_neighborhood(v)?;
    Ok(Some(SplitClaim {
        kind: ClaimKind::ClosedNbhd,
        description: format!("closed-neighborhood split: N[{u}] ⊆ N[{v}]"),
        lhs: SigRecipe::one("G", g.clone()),
        rhs: SigRecipe::one("G \\ v", g.remove_vertices(&[v])?).term(
            "G \\ N[v]",
            g.remove_vertices(&nv)?,
            1,
        ),
        notes: vec![],
    }))
}

// ---- edge rules ------------------------------------------------------------

/// Smallest vertex left isolated by removing `N[e]`, if any.
pub fn is_isolating(g: &Graph, e: (u32, u32)) -> Result<Option<u32>, GraphError> {
    let ne = g.edge_neighborhood(e.0, e.1)?;
    let rest = g.remove_vertices(&ne)?;
    Ok(rest
        .labels()
        .iter()
        .copied()
        .filter(|&w| rest.degree(w).unwrap() == 0)
        .min())
}

/// Removing an isolating edge preserves the signature.
pub fn isolating_claim(g: &Graph, e: (u32, u32)) -> Result<Option<SplitClaim>, GraphError> {
    let Some(cert) = is_isolating(g, e)? else {
        return Ok(None);
    };
    Ok(Some(SplitClaim {
        kind: ClaimKind::IsolatingEdge,
        description: format!("isolating edge ({}, {}) with certificate {cert}", e.0, e.1),
        lhs: SigRecipe::one("G", g.clone()),
        rhs: SigRecipe::one("G - e", g.remove_edge(e.0, e.1)?),
        notes: vec![],
    }))
}

/// Four-vertex-path split: `x - u - v - y` induced, `N[x] ∪ N[y] ⊆ N[e]`
/// gives `sig(G - e) = sig(G) + shift(sig(G \ N[e]), 2)`.
pub fn check_p4_split(
    g: &Graph,
    e: (u32, u32),
    x: u32,
    y: u32,
) -> Result<Option<SplitClaim>, GraphError> {
    let (u, v) = e;
    let (ui, vi) = indices(g, u, v)?;
    if !g.adj_row(ui).contains(vi) {
        return Err(GraphError::MissingEdge(u, v));
    }
    let (xi, yi) = indices(g, x, y)?;
    if x == y || [u, v].contains(&x) || [u, v].contains(&y) {
        return Ok(None);
    }
    let ne = g.edge_neighborhood_set(ui, vi);
    if !g.closed_row(xi).union(&g.closed_row(yi)).is_subset(&ne) {
        return Ok(None);
    }
    // induced path x - u - v - y: exactly the edges xu, uv, vy
    let path = g.adj_row(xi).contains(ui)
        && g.adj_row(vi).contains(yi)
        && !g.adj_row(xi).contains(vi)
        && !g.adj_row(ui).contains(yi)
        && !g.adj_row(xi).contains(yi);
    if !path {
        return Ok(None);
    }
    Ok(Some(split_off_edge_claim(
        g,
        e,
        ClaimKind::P4Split,
        format!("P4 split at edge ({u}, {v}) with path {x}-{u}-{v}-{y}"),
        vec![],
    )?))
}

/// Generalization: any induced `T ⊇ e` with acyclic `Ind(G[T])` and
/// `N[t] ⊆ N[e]` for all `t ∈ T` splits the same way.
pub fn check_general_t_split(
    g: &Graph,
    e: (u32, u32),
    t_vertices: &[u32],
    budgets: &Budgets,
) -> Result<Option<SplitClaim>, RewriteError> {
    let (u, v) = e;
    let (ui, vi) = indices(g, u, v)?;
    if !g.adj_row(ui).contains(vi) {
        return Err(GraphError::MissingEdge(u, v).into());
    }
    if !t_vertices.contains(&u) || !t_vertices.contains(&v) {
        return Ok(None);
    }
    let ne = g.edge_neighborhood_set(ui, vi);
    for &t in t_vertices {
        let ti = g.index_of(t).ok_or(GraphError::UnknownVertex(t))?;
        if !g.closed_row(ti).is_subset(&ne) {
            return Ok(None);
        }
    }
    if !ind_homology(&g.induced(t_vertices)?, budgets)?.is_zero() {
        return Ok(None);
    }
    Ok(Some(split_off_edge_claim(
        g,
        e,
        ClaimKind::GeneralT,
        format!("induced-T split at edge ({u}, {v}) with T = {t_vertices:?}"),
        vec![HOMOLOGY_PROXY_NOTE.into()],
    )?))
}

fn split_off_edge_claim(
    g: &Graph,
    e: (u32, u32),
    kind: ClaimKind,
    description: String,
    notes: Vec<String>,
) -> Result<SplitClaim, GraphError> {
    let ne = g.edge_neighborhood(e.0, e.1)?;
    Ok(SplitClaim {
        kind,
        description,
        lhs: SigRecipe::one("G - e", g.remove_edge(e.0, e.1)?),
        rhs: SigRecipe::one("G", g.clone()).term("G \\ N[e]", g.remove_vertices(&ne)?, 2),
        notes,
    })
}

// ---- Mayer-Vietoris ----------------------------------------------------------

/// Cover split: `X ∪ Y = V`, acyclic `Ind(G[X ∩ Y])`, and every vertex of
/// `X \ Y` adjacent to every vertex of `Y \ X` give
/// `sig(G) = sig(G[X]) + sig(G[Y])`.
pub fn check_mayer_vietoris(
    g: &Graph,
    x_set: &[u32],
    y_set: &[u32],
    budgets: &Budgets,
) -> Result<Option<SplitClaim>, RewriteError> {
    let mut cover: Vec<u32> = x_set.iter().chain(y_set).copied().collect();
    for &w in &cover {
        if !g.has_vertex(w) {
            return Err(GraphError::UnknownVertex(w).into());
        }
    }
    cover.sort_unstable();
    cover.dedup();
    if cover.len() != g.n() {
        return Ok(None);
    }
    let in_x = |w: &u32| x_set.contains(w);
    let in_y = |w: &u32| y_set.contains(w);
    let inter: Vec<u32> = x_set.iter().filter(|w| in_y(w)).copied().collect();
    for &a in x_set.iter().filter(|w| !in_y(w)) {
        for &b in y_set.iter().filter(|w| !in_x(w)) {
            if !g.has_edge(a, b) {
                return Ok(None);
            }
        }
    }
    if !ind_homology(&g.induced(&inter)?, budgets)?.is_zero() {
        return Ok(None);
    }
    Ok(Some(SplitClaim {
        kind: ClaimKind::MayerVietoris,
        description: format!("cover split with X = {x_set:?}, Y = {y_set:?}"),
        lhs: SigRecipe::one("G", g.clone()),
        rhs: SigRecipe::one("G[X]", g.induced(x_set)?).term("G[Y]", g.induced(y_set)?, 0),
        notes: vec![HOMOLOGY_PROXY_NOTE.into()],
    }))
}

// ---- corollaries ----------------------------------------------------------------

/// Clique neighborhood: if `N(u)` is a nonempty clique,
/// `sig(G) = sum over v in N(u) of shift(sig(G \ N[v]), 1)`.
pub fn check_clique_nbhd(g: &Graph, u: u32) -> Result<Option<SplitClaim>, GraphError> {
    let ui = g.index_of(u).ok_or(GraphError::UnknownVertex(u))?;
    let nb: Vec<usize> = g.adj_row(ui).iter().collect();
    if nb.is_empty() {
        return Ok(None);
    }
    for (a, &x) in nb.iter().enumerate() {
        for &y in &nb[a + 1..] {
            if !g.adj_row(x).contains(y) {
                return Ok(None);
            }
        }
    }
    let mut rhs = SigRecipe::empty();
    for &vi in &nb {
        let v = g.labels()[vi];
        let nv = g.closed_neighborhood(v)?;
        rhs = rhs.term(&format!("G \\ N[{v}]"), g.remove_vertices(&nv)?, 1);
    }
    Ok(Some(SplitClaim {
        kind: ClaimKind::CliqueNbhd,
        description: format!("clique neighborhood at {u}"),
        lhs: SigRecipe::one("G", g.clone()),
        rhs,
        notes: vec![],
    }))
}

/// Degree-1 reduction: `u` pendant with neighbor `v` gives
/// `sig(G) = shift(sig(G \ N[v]), 1)`.
pub fn check_degree1(g: &Graph, u: u32) -> Result<Option<SplitClaim>, GraphError> {
    let ui = g.index_of(u).ok_or(GraphError::UnknownVertex(u))?;
    if g.adj_row(ui).len() != 1 {
        return Ok(None);
    }
    let v = g.labels()[g.adj_row(ui).first().unwrap()];
    let nv = g.closed_neighborhood(v)?;
    Ok(Some(SplitClaim {
        kind: ClaimKind::Degree1,
        description: format!("degree-1 vertex {u} with neighbor {v}"),
        lhs: SigRecipe::one("G", g.clone()),
        rhs: SigRecipe::empty().term("G \\ N[v]", g.remove_vertices(&nv)?, 1),
        notes: vec![],
    }))
}

/// Degree-2 rewiring: `v` of degree 2 with neighbors `u`, `w` such that
/// `N[u] ∩ N[w] = {v}`. Removes `u, v, w` and spans a complete bipartite
/// graph between the remaining neighborhoods; the signature suspends.
/// Returns the rewired graph along with the claim.
pub fn check_degree2_rewire(g: &Graph, v: u32) -> Result<Option<(Graph, SplitClaim)>, GraphError> {
    let vi = g.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
    if g.adj_row(vi).len() != 2 {
        return Ok(None);
    }
    let mut it = g.adj_row(vi).iter();
    let (ui, wi) = (it.next().unwrap(), it.next().unwrap());
    let inter = g.closed_row(ui).intersection(&g.closed_row(wi));
    if inter.len() != 1 || !inter.contains(vi) {
        return Ok(None);
    }
    let (u, w) = (g.labels()[ui], g.labels()[wi]);
    let side_u: Vec<u32> = g
        .adj_row(ui)
        .iter()
        .filter(|&x| x != vi)
        .map(|x| g.labels()[x])
        .collect();
    let side_w: Vec<u32> = g
        .adj_row(wi)
        .iter()
        .filter(|&x| x != vi)
        .map(|x| g.labels()[x])
        .collect();
    let mut rewired = g.remove_vertices(&[u, v, w])?;
    for &a in &side_u {
        for &b in &side_w {
            if !rewired.has_edge(a, b) {
                rewired = rewired.add_edge(a, b)?;
            }
        }
    }
    let claim = SplitClaim {
        kind: ClaimKind::Degree2Rewire,
        description: format!("degree-2 rewiring at {v} (neighbors {u}, {w})"),
        lhs: SigRecipe::one("G", g.clone()),
        rhs: SigRecipe::empty().term("rewired G'", rewired.clone(), 1),
        notes: vec![],
    };
    Ok(Some((rewired, claim)))
}

/// Replacing edge `e` by a path with three new vertices suspends the
/// signature once.
pub fn check_subdiv3(g: &Graph, e: (u32, u32)) -> Result<SplitClaim, GraphError> {
    let divided = subdivide(g, SubdivideMode::OneEdgeWith3NewVertices, Some(e))?;
    Ok(SplitClaim {
        kind: ClaimKind::Subdiv3,
        description: format!("3-subdivision of edge ({}, {})", e.0, e.1),
        lhs: SigRecipe::one("G with e subdivided", divided),
        rhs: SigRecipe::empty().term("G", g.clone(), 1),
        notes: vec![],
    })
}

fn indices(g: &Graph, u: u32, v: u32) -> Result<(usize, usize), GraphError> {
    let i = g.index_of(u).ok_or(GraphError::UnknownVertex(u))?;
    let j = g.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
    Ok((i, j))
}
