//! Named verification suites. Each suite evaluates a family of cases and
//! returns a deterministic report: cases fan out to a worker pool but are
//! ordered by case id in the result, and every randomized suite takes an
//! explicit seed.

use crate::cnr;
use crate::complex::TopologyError;
use crate::config::Budgets;
use crate::graph::{self, Graph};
use crate::homology::{ind_homology, Connectivity, HomologySignature};
use crate::recursion::{k_table, psi, Predictor, PsiValue};
use crate::rewrite::{
    check_clique_nbhd, check_closed_nbhd, check_degree1, check_degree2_rewire, check_fold,
    check_general_t_split, check_mayer_vietoris, check_p4_split, check_subdiv3, isolating_claim,
    verify_claim, SplitClaim,
};
use crate::script::{parse_script, run_script, ScriptRunError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedBudget,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
    pub verdict: Verdict,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl SuiteReport {
    fn assemble(suite: &str, mut cases: Vec<CaseResult>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = cases.iter().filter(|c| c.verdict == Verdict::Pass).count();
        let failed = cases.iter().filter(|c| c.verdict == Verdict::Fail).count();
        let skipped = cases
            .iter()
            .filter(|c| c.verdict == Verdict::SkippedBudget)
            .count();
        SuiteReport {
            suite: suite.into(),
            cases,
            passed,
            failed,
            skipped,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.skipped == 0 && !self.cases.is_empty()
    }
}

fn timed_case(
    id: String,
    inputs: String,
    expected: String,
    run: impl FnOnce() -> Result<(String, bool), TopologyError>,
) -> CaseResult {
    let start = Instant::now();
    let (actual, verdict) = match run() {
        Ok((actual, true)) => (actual, Verdict::Pass),
        Ok((actual, false)) => (actual, Verdict::Fail),
        Err(
            e @ (TopologyError::FaceBudgetExceeded(_) | TopologyError::MatrixBudgetExceeded(_)),
        ) => (e.to_string(), Verdict::SkippedBudget),
        Err(e) => (e.to_string(), Verdict::Fail),
    };
    CaseResult {
        id,
        inputs,
        expected,
        actual,
        verdict,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

// ---- main splitting identity ---------------------------------------------------

/// For each `n` from `5r+4` to `n_max`: the oracle signature of the cycle
/// power equals the double-suspended shorter cycle plus the multiplicity
/// table of triple-suspended path powers, all computed by the oracle, with
/// no torsion anywhere.
pub fn theorem1(r: u32, n_max: i64, budgets: &Budgets) -> SuiteReport {
    let lo = 5 * r as i64 + 4;
    let cases: Vec<CaseResult> = (lo..=n_max)
        .into_par_iter()
        .map(|n| {
            timed_case(
                format!("theorem1 r={r} n={n:02}"),
                format!("r={r}, n={n}"),
                "degreewise equality, no torsion".into(),
                || {
                    let lhs = ind_homology(&graph::cycle_power(n, r), budgets)?;
                    let mut rhs =
                        ind_homology(&graph::cycle_power(n - 3 * r as i64 - 3, r), budgets)?
                            .shift(2);
                    for (&i, &k) in &k_table(r).k {
                        let part =
                            ind_homology(&graph::path_power(n - i as i64, r), budgets)?.shift(3);
                        for _ in 0..k {
                            rhs = rhs.add(&part);
                        }
                    }
                    let ok = lhs == rhs && lhs.is_torsion_free() && rhs.is_torsion_free();
                    Ok((format!("lhs {lhs} rhs {rhs}"), ok))
                },
            )
        })
        .collect();
    SuiteReport::assemble("theorem1", cases)
}

// ---- path recursion vs oracle ------------------------------------------------

pub fn engstrom(rs: &[u32], n_max: i64, budgets: &Budgets) -> SuiteReport {
    let predictor = Predictor::new();
    let mut cases = Vec::new();
    for &r in rs {
        let sub: Vec<CaseResult> = (0..=n_max)
            .into_par_iter()
            .map(|n| {
                timed_case(
                    format!("engstrom r={r} n={n:02}"),
                    format!("r={r}, n={n}"),
                    "prediction matches oracle".into(),
                    || {
                        let predicted = predictor.path_power(n, r).to_signature().unwrap();
                        let oracle = ind_homology(&graph::path_power(n, r), budgets)?;
                        let ok = predicted == oracle;
                        Ok((format!("predicted {predicted} oracle {oracle}"), ok))
                    },
                )
            })
            .collect();
        cases.extend(sub);
    }
    SuiteReport::assemble("engstrom", cases)
}

// ---- plain cycles vs oracle ------------------------------------------------------

pub fn kozlov(n_max: i64, budgets: &Budgets) -> SuiteReport {
    let predictor = Predictor::new();
    let cases: Vec<CaseResult> = (3..=n_max)
        .map(|n| {
            timed_case(
                format!("kozlov n={n:02}"),
                format!("n={n}"),
                "prediction matches oracle".into(),
                || {
                    let predicted = match predictor.cycle_power(n, 1, budgets) {
                        Ok(e) => e.to_signature().unwrap(),
                        Err(e) => return Ok((e.to_string(), false)),
                    };
                    let oracle = ind_homology(&graph::cycle(n), budgets)?;
                    let mut ok = predicted == oracle;
                    // pinned values for the triple-jump milestones
                    if n == 9 {
                        ok &= oracle == HomologySignature::from_betti(&[(2, 2)]);
                    }
                    if n == 12 {
                        ok &= oracle == HomologySignature::from_betti(&[(3, 2)]);
                    }
                    Ok((format!("predicted {predicted} oracle {oracle}"), ok))
                },
            )
        })
        .collect();
    SuiteReport::assemble("kozlov", cases)
}

// ---- structural lemma across radii -----------------------------------------------

pub fn lemma61(r_max: u32, budgets: &Budgets) -> SuiteReport {
    let cases: Vec<CaseResult> = (1..=r_max)
        .into_par_iter()
        .flat_map_iter(|r| {
            let n = 5 * r as i64 + 4;
            let report = cnr::verify_technical_lemma(r, n, budgets);
            let items: Vec<CaseResult> = match report {
                Ok(rep) => rep
                    .items
                    .into_iter()
                    .map(|item| CaseResult {
                        id: format!("lemma61 r={r} item={}", item.item),
                        inputs: format!("r={r}, n={n}"),
                        expected: "holds".into(),
                        actual: item.detail,
                        verdict: if item.pass {
                            Verdict::Pass
                        } else {
                            Verdict::Fail
                        },
                        runtime_ms: 0,
                    })
                    .collect(),
                Err(e) => vec![CaseResult {
                    id: format!("lemma61 r={r}"),
                    inputs: format!("r={r}, n={n}"),
                    expected: "holds".into(),
                    actual: e.to_string(),
                    verdict: Verdict::Fail,
                    runtime_ms: 0,
                }],
            };
            items
        })
        .collect();
    SuiteReport::assemble("lemma61", cases)
}

// ---- the zigzag script -------------------------------------------------------------

const ZIGZAG: &str = "add(0,4)!2; del(0,1)!3; del(3,4)!1";
const ZIGZAG_SWAPPED: &str = "del(0,1)!3; add(0,4)!2; del(3,4)!1";

pub fn scripts(n_max: i64, budgets: &Budgets) -> SuiteReport {
    let cases: Vec<CaseResult> = (9..=n_max)
        .into_par_iter()
        .map(|n| {
            timed_case(
                format!("scripts n={n:02}"),
                format!("cycle n={n}, ops `{ZIGZAG}`"),
                "certificates valid; path + shorter cycle; suspension identity; swapped order rejected"
                    .into(),
                || {
                    let g = graph::cycle(n);
                    let script = parse_script(ZIGZAG).unwrap();
                    let (final_graph, log) = match run_script(&g, &script) {
                        Ok(x) => x,
                        Err(e) => return Ok((e.to_string(), false)),
                    };
                    let mut ok = log.steps.len() == 3;

                    // path 1-2-3 disjoint from a 2-regular connected remainder
                    let mut path_edges = final_graph.induced(&[1, 2, 3]).unwrap().edges();
                    path_edges.sort_unstable();
                    ok &= path_edges == vec![(1, 2), (2, 3)];
                    let rest: Vec<u32> = final_graph
                        .labels()
                        .iter()
                        .copied()
                        .filter(|v| ![1, 2, 3].contains(v))
                        .collect();
                    let cycle_part = final_graph.induced(&rest).unwrap();
                    ok &= cycle_part.n() == (n - 3) as usize;
                    ok &= cycle_part.edge_count() == (n - 3) as usize;
                    ok &= cycle_part
                        .labels()
                        .iter()
                        .all(|&v| cycle_part.degree(v).unwrap() == 2);
                    ok &= is_connected(&cycle_part);
                    ok &= final_graph.edge_count() == cycle_part.edge_count() + 2;

                    // suspension identity via the oracle
                    let lhs = ind_homology(&g, budgets)?;
                    let rhs = ind_homology(&graph::cycle(n - 3), budgets)?.shift(1);
                    ok &= lhs == rhs;

                    // the swapped order must fail on the first certificate
                    let swapped = parse_script(ZIGZAG_SWAPPED).unwrap();
                    ok &= matches!(
                        run_script(&g, &swapped),
                        Err(ScriptRunError::CertificateInvalid { index: 0, .. })
                    );
                    Ok((format!("final components ok; sig {lhs}"), ok))
                },
            )
        })
        .collect();
    SuiteReport::assemble("scripts", cases)
}

fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in g.adj_row(i).iter() {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

// ---- chordal graphs -----------------------------------------------------------------

/// Random chordal graph: each new vertex attaches to a clique of the
/// existing graph, so reverse insertion order is a perfect elimination
/// order.
pub fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        if rng.gen_bool(0.15) {
            continue; // leave some vertices isolated for variety
        }
        let u = rng.gen_range(0..i);
        let mut clique = vec![u];
        let mut candidates: Vec<usize> = (0..i).filter(|&w| w != u).collect();
        candidates.shuffle(rng);
        for w in candidates {
            if rng.gen_bool(0.5) && clique.iter().all(|&c| g.has_edge(c as u32, w as u32)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            g = g.add_edge(i as u32, c as u32).unwrap();
        }
    }
    g
}

/// Chordal sweep: torsion-free signatures; the lowest homology degree is at
/// least one less than the domination number; psi agrees with homology
/// connectivity plus two.
pub fn chordal(count: u32, n_max: u32, seed: u64, budgets: &Budgets) -> SuiteReport {
    let graphs: Vec<(u32, Graph)> = {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|i| {
                let n = rng.gen_range(1..=n_max as usize);
                (i, random_chordal(n, &mut rng))
            })
            .collect()
    };
    let cases: Vec<CaseResult> = graphs
        .into_par_iter()
        .map(|(i, g)| {
            timed_case(
                format!("chordal {i:03}"),
                format!("n={}, m={}, seed={seed}", g.n(), g.edge_count()),
                "torsion-free; min degree >= domination-1; psi = conn+2".into(),
                || {
                    if !g.is_chordal() {
                        return Ok(("generator produced a non-chordal graph".into(), false));
                    }
                    let sig = ind_homology(&g, budgets)?;
                    let mut ok = sig.is_torsion_free();
                    if let Some(d) = sig.min_nonzero_degree() {
                        let gamma = g.domination_number(budgets.domination_cap).unwrap();
                        ok &= d >= gamma as i32 - 1;
                    }
                    let p = psi(&g, budgets.psi_cap.max(n_max as usize)).unwrap();
                    let conn_ok = match (p, sig.connectivity()) {
                        (PsiValue::Finite(pv), Connectivity::Finite(c)) => {
                            pv as i64 == c as i64 + 2
                        }
                        (PsiValue::Infinite, Connectivity::Infinite) => true,
                        _ => false,
                    };
                    ok &= conn_ok;
                    Ok((
                        format!("sig {sig}, psi {p}, conn {}", sig.connectivity()),
                        ok,
                    ))
                },
            )
        })
        .collect();
    SuiteReport::assemble("chordal", cases)
}

// ---- subdivision and cylinder examples ------------------------------------------------

pub fn examples55_56(budgets: &Budgets) -> SuiteReport {
    let mut specs: Vec<(String, Graph, HomologySignature)> = Vec::new();
    for (name, g) in [
        ("C_3", graph::cycle(3)),
        ("C_4", graph::cycle(4)),
        ("K_4", graph::complete(4)),
    ] {
        let (n, m) = (g.n() as i32, g.edge_count() as i32);
        // two spheres, merged when the dimensions coincide
        let expected = HomologySignature::from_betti(&[(n - 1, 1)])
            .add(&HomologySignature::from_betti(&[(m - 1, 1)]));
        let g3 = graph::subdivide(&g, graph::SubdivideMode::AllEdgesInto3Parts, None).unwrap();
        specs.push((format!("examples55 subdiv3 {name}"), g3, expected));
    }
    let mut cases: Vec<CaseResult> = specs
        .into_par_iter()
        .map(|(id, g, expected)| {
            timed_case(id, format!("n={}", g.n()), expected.render(), || {
                let sig = ind_homology(&g, budgets)?;
                let ok = sig == expected;
                Ok((sig.render(), ok))
            })
        })
        .collect();

    cases.push(timed_case(
        "examples56 cylinder m=2".into(),
        "P_2 x C_5".into(),
        "{1:1}".into(),
        || {
            let sig = ind_homology(&graph::cylinder(2, 5), budgets)?;
            let ok = sig == HomologySignature::from_betti(&[(1, 1)]);
            Ok((sig.render(), ok))
        },
    ));
    let shift_cases: Vec<CaseResult> = [3u32, 4]
        .into_par_iter()
        .map(|m| {
            timed_case(
                format!("examples56 cylinder m={m}"),
                format!("P_{m} x C_5"),
                "double suspension of the two-row shorter cylinder".into(),
                || {
                    let lhs = ind_homology(&graph::cylinder(m, 5), budgets)?;
                    let rhs = ind_homology(&graph::cylinder(m - 2, 5), budgets)?.shift(2);
                    Ok((format!("lhs {lhs} rhs {rhs}"), lhs == rhs))
                },
            )
        })
        .collect();
    cases.extend(shift_cases);
    SuiteReport::assemble("examples55-56", cases)
}

// ---- random rules sweep ------------------------------------------------------------------

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                g = g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Every applicable reduction rule instance on seeded random graphs must
/// verify. Covers as well as T-sets are sampled; vertex- and edge-indexed
/// rules are enumerated exhaustively.
type Cover = (Vec<u32>, Vec<u32>);

pub fn rules_sweep(count: u32, n_max: u32, seed: u64, budgets: &Budgets) -> SuiteReport {
    let graphs: Vec<(u32, Graph, Vec<Cover>)> = {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|i| {
                let n = rng.gen_range(4..=n_max as usize);
                let p = rng.gen_range(0.2..=0.6);
                let g = random_graph(n, p, &mut rng);
                // sampled Mayer-Vietoris covers: each vertex goes to X, Y, or both
                let covers: Vec<(Vec<u32>, Vec<u32>)> = (0..8)
                    .map(|_| {
                        let mut x = Vec::new();
                        let mut y = Vec::new();
                        for &v in g.labels() {
                            match rng.gen_range(0..4) {
                                0 => x.push(v),
                                1 => y.push(v),
                                _ => {
                                    x.push(v);
                                    y.push(v);
                                }
                            }
                        }
                        (x, y)
                    })
                    .collect();
                (i, g, covers)
            })
            .collect()
    };

    let cases: Vec<CaseResult> = graphs
        .into_par_iter()
        .map(|(i, g, covers)| {
            timed_case(
                format!("rules {i:03}"),
                format!("n={}, m={}, seed={seed}", g.n(), g.edge_count()),
                "all applicable claims verify".into(),
                || {
                    let mut claims: Vec<SplitClaim> = Vec::new();
                    let labels = g.labels().to_vec();
                    let edges = g.edges();
                    for &u in &labels {
                        for &v in &labels {
                            if u != v {
                                claims.extend(check_fold(&g, u, v).unwrap());
                                claims.extend(check_closed_nbhd(&g, u, v).unwrap());
                            }
                        }
                        claims.extend(check_clique_nbhd(&g, u).unwrap());
                        claims.extend(check_degree1(&g, u).unwrap());
                        claims.extend(check_degree2_rewire(&g, u).unwrap().map(|(_, c)| c));
                    }
                    for &e in &edges {
                        claims.extend(isolating_claim(&g, e).unwrap());
                        claims.push(check_subdiv3(&g, e).unwrap());
                        // both roles of the edge feed the path checks
                        for (u, v) in [e, (e.1, e.0)] {
                            for x in g.open_neighborhood(u).unwrap() {
                                if x == v {
                                    continue;
                                }
                                for &y in &g.open_neighborhood(v).unwrap() {
                                    if y == u || y == x {
                                        continue;
                                    }
                                    claims.extend(check_p4_split(&g, (u, v), x, y).unwrap());
                                }
                            }
                        }
                        // the largest admissible T-set
                        let t_max: Vec<u32> = {
                            let ne = g.edge_neighborhood(e.0, e.1).unwrap();
                            labels
                                .iter()
                                .copied()
                                .filter(|&t| {
                                    g.closed_neighborhood(t)
                                        .unwrap()
                                        .iter()
                                        .all(|w| ne.contains(w))
                                })
                                .collect()
                        };
                        claims.extend(check_general_t_split(&g, e, &t_max, budgets).map_err(
                            |e| match e {
                                crate::rewrite::RewriteError::Topology(t) => t,
                                crate::rewrite::RewriteError::Graph(g) => {
                                    panic!("unexpected graph error: {g}")
                                }
                            },
                        )?);
                    }
                    // sampled covers, plus the cover each adjacent pair
                    // induces: X = {u} ∪ (V \ N(v)) (v stays), Y = V \ {v};
                    // the side condition then always holds and the
                    // intersection is acyclic whenever N[u] ⊆ N[v]
                    let mut all_covers = covers;
                    for &u in &labels {
                        for &v in &labels {
                            if u == v || !g.has_edge(u, v) {
                                continue;
                            }
                            let nv = g.open_neighborhood(v).unwrap();
                            let x: Vec<u32> = labels
                                .iter()
                                .copied()
                                .filter(|w| *w == u || !nv.contains(w))
                                .collect();
                            let y: Vec<u32> = labels.iter().copied().filter(|w| *w != v).collect();
                            all_covers.push((x, y));
                        }
                    }
                    for (x, y) in &all_covers {
                        claims.extend(check_mayer_vietoris(&g, x, y, budgets).map_err(
                            |e| match e {
                                crate::rewrite::RewriteError::Topology(t) => t,
                                crate::rewrite::RewriteError::Graph(g) => {
                                    panic!("unexpected graph error: {g}")
                                }
                            },
                        )?);
                    }

                    let total = claims.len();
                    let mut failures = Vec::new();
                    for claim in &claims {
                        let report = verify_claim(claim, budgets)?;
                        if !report.pass {
                            failures.push(format!(
                                "{}: {} vs {}",
                                report.description, report.lhs_signature, report.rhs_signature
                            ));
                        }
                    }
                    let ok = failures.is_empty();
                    Ok((
                        if ok {
                            format!("{total} applicable claims verified")
                        } else {
                            format!("{} of {total} failed: {failures:?}", failures.len())
                        },
                        ok,
                    ))
                },
            )
        })
        .collect();
    SuiteReport::assemble("rules-sweep", cases)
}

// ---- model equivalence and reconciliation ----------------------------------------------

pub fn model(pairs: &[(u32, i64)], budgets: &Budgets) -> SuiteReport {
    let cases: Vec<CaseResult> = pairs
        .par_iter()
        .map(|&(r, n)| {
            timed_case(
                format!("model r={r} n={n:02}"),
                format!("r={r}, n={n}"),
                "augmented graph realizes the double suspension".into(),
                || match cnr::verify_model_equivalence(n, r, budgets) {
                    Ok(rep) => Ok((
                        format!(
                            "lhs {} rhs {} (chain {} edges, complete: {})",
                            rep.lhs,
                            rep.rhs,
                            rep.isolating_chain.len(),
                            rep.isolating_chain_complete
                        ),
                        rep.signatures_match,
                    )),
                    Err(e) => Ok((e.to_string(), false)),
                },
            )
        })
        .collect();
    SuiteReport::assemble("model", cases)
}

/// Default model-equivalence instances: the small window above the bound
/// for each radius.
pub fn model_default_pairs() -> Vec<(u32, i64)> {
    let mut pairs = Vec::new();
    for n in 9..=12 {
        pairs.push((1, n));
    }
    for n in 14..=17 {
        pairs.push((2, n));
    }
    for n in 19..=21 {
        pairs.push((3, n));
    }
    pairs
}

pub fn reconcile(r_max: u32) -> SuiteReport {
    let cases: Vec<CaseResult> = (1..=r_max)
        .map(|r| {
            let report = cnr::reconcile_with_closed_form(r);
            CaseResult {
                id: format!("reconcile r={r}"),
                inputs: format!("r={r}"),
                expected: format!("{:?}", report.closed_form.k),
                actual: format!("{:?}", report.ledger_totals),
                verdict: if report.matches {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
                runtime_ms: 0,
            }
        })
        .collect();
    SuiteReport::assemble("reconcile", cases)
}

// ---- dispatcher ---------------------------------------------------------------------------

#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub r: Option<u32>,
    pub n_max: Option<i64>,
    pub r_max: Option<u32>,
    pub count: Option<u32>,
    pub seed: Option<u64>,
}

pub const SUITE_NAMES: &[&str] = &[
    "theorem1",
    "engstrom",
    "kozlov",
    "lemma61",
    "scripts",
    "chordal",
    "examples55-56",
    "rules-sweep",
    "model",
    "reconcile",
];

pub fn run_suite(
    name: &str,
    params: &SuiteParams,
    budgets: &Budgets,
) -> Result<SuiteReport, SuiteError> {
    let report = match name {
        "theorem1" => {
            let r = params.r.unwrap_or(2);
            let n_max = params.n_max.unwrap_or(5 * r as i64 + 9);
            theorem1(r, n_max, budgets)
        }
        "engstrom" => {
            let rs: Vec<u32> = params.r.map(|r| vec![r]).unwrap_or(vec![2, 3]);
            engstrom(&rs, params.n_max.unwrap_or(16), budgets)
        }
        "kozlov" => kozlov(params.n_max.unwrap_or(18), budgets),
        "lemma61" => lemma61(params.r_max.unwrap_or(8), budgets),
        "scripts" => scripts(params.n_max.unwrap_or(15), budgets),
        "chordal" => chordal(
            params.count.unwrap_or(100),
            params.n_max.unwrap_or(11) as u32,
            params.seed.unwrap_or(7),
            budgets,
        ),
        "examples55-56" => examples55_56(budgets),
        "rules-sweep" => rules_sweep(
            params.count.unwrap_or(500),
            params.n_max.unwrap_or(10) as u32,
            params.seed.unwrap_or(7),
            budgets,
        ),
        "model" => {
            let pairs = match (params.r, params.n_max) {
                (Some(r), Some(n_max)) => (5 * r as i64 + 4..=n_max).map(|n| (r, n)).collect(),
                _ => model_default_pairs(),
            };
            model(&pairs, budgets)
        }
        "reconcile" => reconcile(params.r_max.unwrap_or(8)),
        other => return Err(SuiteError::UnknownSuite(other.into())),
    };
    Ok(report)
}
