//! Recursive homotopy types for independence complexes of path and cycle
//! powers, grounded in oracle-computed base tables, plus the edge-recursive
//! connectivity bound `psi`.
//!
//! Path powers split as a wedge of suspensions of shorter path powers once
//! `n >= r+2`; below that the graph is complete and the answer is a wedge
//! of 0-spheres (the empty graph contributes the (-1)-sphere). Cycle powers
//! split for `n >= 5r+4` into a double suspension of a shorter cycle power
//! and a multiplicity table of triple suspensions of path powers; smaller
//! cycle powers are base cases whose homology the oracle computes and, when
//! torsion-free, lifts back into a sphere wedge.

use crate::complex::TopologyError;
use crate::config::Budgets;
use crate::graph::{self, Graph, GraphError};
use crate::homology::{ind_homology, HomologySignature};
use crate::homotopy::{HomotopyExpr, PowerFamily};
use dashmap::DashMap;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecursionError {
    #[error("index {i} outside [{lo}, {hi}] for r = {r}")]
    IndexOutOfRange { i: u32, r: u32, lo: u32, hi: u32 },
    #[error("cycle power prediction requires n >= 3, got {0}")]
    CycleTooSmall(i64),
    #[error("base case Ind(C_{n}^{r}) is not a wedge of spheres: {sig}")]
    BaseCaseNotWedgeOfSpheres {
        n: i64,
        r: u32,
        sig: HomologySignature,
    },
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

// ---- the multiplicity table -------------------------------------------------

/// Multiplicity of the triple-suspended path-power summand at offset `i`,
/// defined for `4r+6 <= i <= 6r+3` (an empty range when r = 1).
pub fn k_multiplicity(i: u32, r: u32) -> Result<u64, RecursionError> {
    let (lo, hi) = (4 * r + 6, 6 * r + 3);
    if i < lo || i > hi {
        return Err(RecursionError::IndexOutOfRange { i, r, lo, hi });
    }
    let (i, r) = (i as u64, r as u64);
    let k = if i <= 5 * r + 4 {
        (i - 4 * r - 5) * (i - 2 * r - 2) / 2
    } else {
        (6 * r + 4 - i) * (i - 2 * r - 1) / 2
    };
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KTable {
    pub r: u32,
    /// offset -> multiplicity; empty for r = 1.
    pub k: BTreeMap<u32, u64>,
}

pub fn k_table(r: u32) -> KTable {
    let mut k = BTreeMap::new();
    if r >= 2 {
        for i in 4 * r + 6..=6 * r + 3 {
            k.insert(i, k_multiplicity(i, r).unwrap());
        }
    }
    KTable { r, k }
}

// ---- base tables --------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BaseProvenance {
    /// The graph is complete (or empty); the signature is closed-form.
    TrivialComplete,
    /// Computed by the homology oracle.
    OracleComputed,
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseTable {
    pub family: PowerFamily,
    pub r: u32,
    pub entries: BTreeMap<i64, (HomologySignature, BaseProvenance)>,
}

/// Closed-form signature for a complete graph on `n` vertices: `n` points,
/// so a wedge of `n-1` zero-spheres; the empty graph is the (-1)-sphere.
fn complete_signature(n: i64) -> HomologySignature {
    if n <= 0 {
        HomologySignature::sphere(-1)
    } else if n == 1 {
        HomologySignature::zero()
    } else {
        HomologySignature::from_betti(&[(0, n as u64 - 1)])
    }
}

/// Populates a base table up to `n_max` by the homology oracle; the
/// complete-graph range is filled in closed form and tagged.
pub fn build_base_table(
    family: PowerFamily,
    r: u32,
    n_max: i64,
    budgets: &Budgets,
) -> Result<BaseTable, RecursionError> {
    let mut entries = BTreeMap::new();
    let (n_min, complete_below) = match family {
        PowerFamily::PathPower => (0, r as i64 + 1),
        PowerFamily::CyclePower => (3, 2 * r as i64 + 1),
    };
    for n in n_min..=n_max {
        let (sig, prov) = if n <= complete_below {
            (complete_signature(n), BaseProvenance::TrivialComplete)
        } else {
            let g = match family {
                PowerFamily::PathPower => graph::path_power(n, r),
                PowerFamily::CyclePower => graph::cycle_power(n, r),
            };
            (ind_homology(&g, budgets)?, BaseProvenance::OracleComputed)
        };
        entries.insert(n, (sig, prov));
    }
    Ok(BaseTable { family, r, entries })
}

// ---- the predictor -------------------------------------------------------------

/// Base-case record attached to a prediction report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BaseCaseUse {
    pub family: PowerFamily,
    pub n: i64,
    pub r: u32,
    pub provenance: BaseProvenance,
}

/// Memoizing recursion engine. Memo tables are concurrency-safe insert-once
/// maps keyed on `(family, n, r)`; everything else is pure.
#[derive(Default)]
pub struct Predictor {
    path_memo: DashMap<(i64, u32), HomotopyExpr>,
    cycle_memo: DashMap<(i64, u32), HomotopyExpr>,
    cycle_base: DashMap<(i64, u32), HomologySignature>,
}

impl Predictor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Homotopy type of `Ind(P_n^r)`, fully expanded and normalized.
    ///
    /// The splitting is applied from `n = r+2` upward. At `n = r+1` both
    /// routes agree (the graph is complete; the recursion's terms all
    /// degenerate to suspensions of the empty complex), which
    /// `boundary_case_agrees` pins down.
    pub fn path_power(&self, n: i64, r: u32) -> HomotopyExpr {
        assert!(r >= 1, "radius must be at least 1");
        if n <= 0 {
            return HomotopyExpr::Sphere(-1);
        }
        if n <= r as i64 + 1 {
            return HomotopyExpr::Sphere(0).wedge_pow(n as u64 - 1);
        }
        if let Some(hit) = self.path_memo.get(&(n, r)) {
            return hit.clone();
        }
        let items: Vec<HomotopyExpr> = (r as i64 + 2..=2 * r as i64 + 1)
            .map(|a| HomotopyExpr::susp(1, self.path_power(n - a, r)))
            .collect();
        let result = HomotopyExpr::wedge(items)
            .normalize()
            .expect("path recursion yields sphere wedges");
        self.path_memo.insert((n, r), result.clone());
        result
    }

    /// Homotopy type of `Ind(C_n^r)` for `n >= 3`, fully expanded.
    ///
    /// For `n < 5r+4` the oracle signature is lifted to a sphere wedge;
    /// torsion there aborts with `BaseCaseNotWedgeOfSpheres` rather than
    /// coercing.
    pub fn cycle_power(
        &self,
        n: i64,
        r: u32,
        budgets: &Budgets,
    ) -> Result<HomotopyExpr, RecursionError> {
        assert!(r >= 1, "radius must be at least 1");
        if n < 3 {
            return Err(RecursionError::CycleTooSmall(n));
        }
        if let Some(hit) = self.cycle_memo.get(&(n, r)) {
            return Ok(hit.clone());
        }
        let result = if n < 5 * r as i64 + 4 {
            let sig = self.cycle_base_signature(n, r, budgets)?;
            match HomotopyExpr::from_signature(&sig) {
                Some(e) => e,
                None => return Err(RecursionError::BaseCaseNotWedgeOfSpheres { n, r, sig }),
            }
        } else {
            let mut items = vec![HomotopyExpr::susp(
                2,
                self.cycle_power(n - (3 * r as i64 + 3), r, budgets)?,
            )];
            for i in 4 * r + 6..=6 * r + 3 {
                let k = k_multiplicity(i, r).unwrap();
                let part = HomotopyExpr::susp(3, self.path_power(n - i as i64, r));
                items.push(part.wedge_pow(k));
            }
            HomotopyExpr::wedge(items)
                .normalize()
                .expect("expanded cycle recursion is a sphere wedge")
        };
        self.cycle_memo.insert((n, r), result.clone());
        Ok(result)
    }

    /// One-step expansion of the path splitting with opaque leaves; the
    /// complete-graph range is returned concrete.
    pub fn path_power_partial(&self, n: i64, r: u32) -> HomotopyExpr {
        if n <= r as i64 + 1 {
            return self.path_power(n, r);
        }
        let items: Vec<HomotopyExpr> = (r as i64 + 2..=2 * r as i64 + 1)
            .map(|a| {
                HomotopyExpr::susp(
                    1,
                    HomotopyExpr::Opaque {
                        family: PowerFamily::PathPower,
                        n: n - a,
                        r,
                    },
                )
            })
            .collect();
        HomotopyExpr::wedge(items)
    }

    /// One-step expansion with opaque leaves, for reports: the cycle part
    /// stays `Ind(C_{n-3r-3}^r)` and path parts stay `Ind(P_{n-i}^r)`.
    pub fn cycle_power_partial(&self, n: i64, r: u32) -> Result<HomotopyExpr, RecursionError> {
        if n < 3 {
            return Err(RecursionError::CycleTooSmall(n));
        }
        if n < 5 * r as i64 + 4 {
            return Ok(HomotopyExpr::Opaque {
                family: PowerFamily::CyclePower,
                n,
                r,
            });
        }
        let mut items = vec![HomotopyExpr::susp(
            2,
            HomotopyExpr::Opaque {
                family: PowerFamily::CyclePower,
                n: n - (3 * r as i64 + 3),
                r,
            },
        )];
        for i in 4 * r + 6..=6 * r + 3 {
            let k = k_multiplicity(i, r).unwrap();
            let part = HomotopyExpr::susp(
                3,
                HomotopyExpr::Opaque {
                    family: PowerFamily::PathPower,
                    n: n - i as i64,
                    r,
                },
            );
            items.extend((0..k).map(|_| part.clone()));
        }
        Ok(HomotopyExpr::wedge(items))
    }

    fn cycle_base_signature(
        &self,
        n: i64,
        r: u32,
        budgets: &Budgets,
    ) -> Result<HomologySignature, RecursionError> {
        if let Some(hit) = self.cycle_base.get(&(n, r)) {
            return Ok(hit.clone());
        }
        let sig = if n <= 2 * r as i64 + 1 {
            complete_signature(n)
        } else {
            ind_homology(&graph::cycle_power(n, r), budgets)?
        };
        self.cycle_base.insert((n, r), sig.clone());
        Ok(sig)
    }

    /// Base cases a cycle prediction bottoms out in: the terminal cycle
    /// entry reached by repeatedly subtracting `3r+3`. Path-power parts
    /// bottom out in complete graphs and are not listed.
    pub fn cycle_base_cases_used(&self, n: i64, r: u32) -> Vec<BaseCaseUse> {
        let mut n = n;
        while n >= 5 * r as i64 + 4 {
            n -= 3 * r as i64 + 3;
        }
        let provenance = if n <= 2 * r as i64 + 1 {
            BaseProvenance::TrivialComplete
        } else {
            BaseProvenance::OracleComputed
        };
        vec![BaseCaseUse {
            family: PowerFamily::CyclePower,
            n,
            r,
            provenance,
        }]
    }
}

// ---- psi ----------------------------------------------------------------------

/// Value of the edge-recursive connectivity bound: a natural number or
/// infinity (absorbing under +1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum PsiValue {
    Finite(u64),
    Infinite,
}

impl PsiValue {
    fn succ(self) -> PsiValue {
        match self {
            PsiValue::Finite(v) => PsiValue::Finite(v + 1),
            PsiValue::Infinite => PsiValue::Infinite,
        }
    }
}

impl std::fmt::Display for PsiValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PsiValue::Finite(v) => write!(f, "{v}"),
            PsiValue::Infinite => write!(f, "inf"),
        }
    }
}

/// psi(G): 0 for the empty graph, infinity for a nonempty edgeless graph,
/// otherwise `max over edges e of min(psi(G - e), psi(G \ N[e]) + 1)`.
pub fn psi(g: &Graph, cap: usize) -> Result<PsiValue, GraphError> {
    if g.n() > cap {
        return Err(GraphError::TooLargeForExactSearch { n: g.n(), cap });
    }
    let mut memo: HashMap<Vec<u64>, PsiValue> = HashMap::new();
    Ok(psi_rec(g, &mut memo))
}

fn psi_rec(g: &Graph, memo: &mut HashMap<Vec<u64>, PsiValue>) -> PsiValue {
    let n = g.n();
    if n == 0 {
        return PsiValue::Finite(0);
    }
    if g.edge_count() == 0 {
        return PsiValue::Infinite;
    }
    // An isolated vertex survives every N[e] removal and every edge
    // deletion, so by induction psi is infinite as soon as one coexists
    // with an edge.
    if (0..n).any(|i| g.adj_row(i).is_empty()) {
        return PsiValue::Infinite;
    }
    let key = canonical_key(g);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }

    // The cheap branch first: G \ N[e] loses at least two vertices. An edge
    // whose bound b cannot beat the current best never needs the expensive
    // G - e branch.
    let mut bounds: Vec<((u32, u32), PsiValue)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let ne = g.edge_neighborhood(u, v).unwrap();
            let rest = g.remove_vertices(&ne).unwrap();
            ((u, v), psi_rec(&rest, memo).succ())
        })
        .collect();
    bounds.sort_by_key(|&(_, b)| std::cmp::Reverse(b));

    let mut best: Option<PsiValue> = None;
    for ((u, v), b) in bounds {
        if let Some(cur) = best {
            if b <= cur {
                break; // sorted descending: nothing below can improve
            }
        }
        let a = psi_rec(&g.remove_edge(u, v).unwrap(), memo);
        let val = a.min(b);
        best = Some(match best {
            None => val,
            Some(cur) => cur.max(val),
        });
    }
    let result = best.expect("graph has at least one edge");
    memo.insert(key, result);
    result
}

/// Degree-refined relabeling followed by a row-wise adjacency encoding.
/// Isomorphic graphs may or may not collide (either way psi agrees, since
/// psi is isomorphism-invariant); distinct keys always encode distinct
/// relabeled graphs, so the cache is sound.
fn canonical_key(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|i| {
            let mut nb_degs: Vec<usize> = g.adj_row(i).iter().map(|j| g.adj_row(j).len()).collect();
            nb_degs.sort_unstable();
            (g.adj_row(i).len(), nb_degs)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]).then(a.cmp(&b)));
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut key = vec![n as u64];
    let mut word = 0u64;
    let mut bits = 0;
    for &v in &order {
        for &w in &order {
            let set = g.adj_row(v).contains(w);
            word = word << 1 | set as u64;
            bits += 1;
            if bits == 64 {
                key.push(word);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        key.push(word);
    }
    key
}
