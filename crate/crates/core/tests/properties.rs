//! Property tests for the algebraic invariants: suspension/shift
//! compatibility, normal-form idempotence, wedge-order invariance, the
//! signature morphism, parser round trips, pure-edit involutions, and
//! Euler-characteristic consistency of the homology oracle.

use indtopo::complex::Complex;
use indtopo::config::Budgets;
use indtopo::graph::Graph;
use indtopo::homology::{reduced_homology, HomologySignature};
use indtopo::homotopy::{self, HomotopyError, HomotopyExpr};
use indtopo::script::{parse_script, render_script, IsolatingAction, IsolatingOp, Script};
use proptest::prelude::*;

fn expr_strategy() -> impl Strategy<Value = HomotopyExpr> {
    let leaf = prop_oneof![
        Just(HomotopyExpr::Contractible),
        (-1i32..6).prop_map(HomotopyExpr::Sphere),
    ];
    leaf.prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..4).prop_map(HomotopyExpr::Wedge),
            (1u32..4, inner).prop_map(|(k, e)| HomotopyExpr::Susp(k, Box::new(e))),
        ]
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = if n < 2 { 0 } else { n * (n - 1) / 2 };
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut idx = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if bits[idx] {
                        g = g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn suspension_commutes_with_shift(e in expr_strategy(), k in 0u32..=5) {
        let suspended = HomotopyExpr::susp(k, e.clone());
        match (suspended.normalize(), e.normalize()) {
            (Ok(s), Ok(base)) => {
                prop_assert_eq!(
                    s.to_signature().unwrap(),
                    base.to_signature().unwrap().shift(k)
                );
            }
            // a wedge with the empty complex has no normal form; suspension
            // may or may not cure it, so nothing to compare
            (Err(HomotopyError::NonNormalizable), _) | (_, Err(HomotopyError::NonNormalizable)) => {}
            (a, b) => prop_assert!(false, "unexpected results {a:?} / {b:?}"),
        }
    }

    #[test]
    fn normalize_is_idempotent(e in expr_strategy()) {
        if let Ok(n1) = e.normalize() {
            prop_assert_eq!(n1.normalize().unwrap(), n1);
        }
    }

    #[test]
    fn normalize_ignores_wedge_order(items in prop::collection::vec(expr_strategy(), 0..5)) {
        let forward = HomotopyExpr::Wedge(items.clone()).normalize();
        let mut rev = items;
        rev.reverse();
        let backward = HomotopyExpr::Wedge(rev).normalize();
        match (forward, backward) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "order-dependent normalize: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn signature_is_additive_over_wedges(items in prop::collection::vec(expr_strategy(), 0..5)) {
        let whole = HomotopyExpr::Wedge(items.clone()).to_signature().unwrap();
        let mut sum = HomologySignature::zero();
        for item in &items {
            sum = sum.add(&item.to_signature().unwrap());
        }
        prop_assert_eq!(whole, sum);
    }

    #[test]
    fn expr_parse_render_roundtrip(e in expr_strategy()) {
        prop_assert_eq!(homotopy::parse(&e.render()).unwrap(), e);
    }

    #[test]
    fn script_parse_render_roundtrip(
        ops in prop::collection::vec(
            (any::<bool>(), 0u32..50, 0u32..50, 0u32..50),
            0..8
        )
    ) {
        let script = Script {
            ops: ops
                .into_iter()
                .map(|(add, u, v, w)| IsolatingOp {
                    action: if add { IsolatingAction::Add } else { IsolatingAction::Del },
                    edge: (u, v),
                    certificate: w,
                })
                .collect(),
        };
        prop_assert_eq!(parse_script(&render_script(&script)).unwrap(), script);
    }

    #[test]
    fn add_remove_edge_involution(g in graph_strategy(8), a in 0usize..8, b in 0usize..8) {
        prop_assume!(g.n() >= 2);
        let u = g.labels()[a % g.n()];
        let v = g.labels()[b % g.n()];
        prop_assume!(u != v);
        if g.has_edge(u, v) {
            prop_assert_eq!(g.remove_edge(u, v).unwrap().add_edge(u, v).unwrap(), g);
        } else {
            prop_assert_eq!(g.add_edge(u, v).unwrap().remove_edge(u, v).unwrap(), g);
        }
    }

    #[test]
    fn induced_subgraph_composes(
        g in graph_strategy(8),
        w_mask in any::<u16>(),
        u_mask in any::<u16>()
    ) {
        let w: Vec<u32> = g
            .labels()
            .iter()
            .enumerate()
            .filter(|(i, _)| w_mask >> i & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        let u: Vec<u32> = w
            .iter()
            .enumerate()
            .filter(|(i, _)| u_mask >> i & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        let lhs = g.induced(&w).unwrap().induced(&u).unwrap();
        prop_assert_eq!(lhs, g.induced(&u).unwrap());
    }

    #[test]
    fn euler_characteristic_matches_homology(g in graph_strategy(8)) {
        let budgets = Budgets::default();
        let k = Complex::independence(&g, &budgets).unwrap();
        let h = reduced_homology(&k, &budgets).unwrap();
        let chi: i64 = h
            .betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum();
        prop_assert_eq!(chi, k.reduced_euler_characteristic());
        prop_assert!(h.is_torsion_free() || !h.torsion.is_empty());
    }

    #[test]
    fn suspension_by_an_edge_complex(g in graph_strategy(6)) {
        // joining with the two-point complex shifts homology once
        let budgets = Budgets::default();
        let k2 = Complex::independence(&indtopo::graph::complete(2), &budgets).unwrap();
        let k = Complex::independence(&g, &budgets).unwrap();
        let joined = k2.join(&k, &budgets).unwrap();
        prop_assert_eq!(
            reduced_homology(&joined, &budgets).unwrap(),
            reduced_homology(&k, &budgets).unwrap().shift(1)
        );
    }
}
