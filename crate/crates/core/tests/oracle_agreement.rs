//! Recursion-vs-oracle agreement beyond the acceptance windows: every
//! prediction the engine can make for small radii is compared against
//! exact homology of the actual complex.

use indtopo::config::Budgets;
use indtopo::graph;
use indtopo::homology::ind_homology;
use indtopo::recursion::Predictor;

#[test]
fn path_powers_match_oracle_r_1_2_3() {
    let budgets = Budgets::default();
    let predictor = Predictor::new();
    for r in 1..=3u32 {
        for n in 0..=16i64 {
            let predicted = predictor.path_power(n, r).to_signature().unwrap();
            let oracle = ind_homology(&graph::path_power(n, r), &budgets).unwrap();
            assert_eq!(predicted, oracle, "P_{n}^{r}");
        }
    }
}

#[test]
fn cycle_powers_match_oracle_r_1_2_3() {
    let budgets = Budgets::default();
    let predictor = Predictor::new();
    for r in 1..=3u32 {
        let n_max = 5 * r as i64 + 13; // several full recursion steps past the bound
        for n in 3..=n_max {
            let predicted = predictor
                .cycle_power(n, r, &budgets)
                .unwrap()
                .to_signature()
                .unwrap();
            let oracle = ind_homology(&graph::cycle_power(n, r), &budgets).unwrap();
            assert_eq!(predicted, oracle, "C_{n}^{r}");
        }
    }
}

#[test]
fn triple_jump_consistency_for_plain_cycles() {
    // the double-jump recursion composed with itself agrees with the
    // single-jump suspension step
    let budgets = Budgets::default();
    let predictor = Predictor::new();
    for n in 9..=18i64 {
        let whole = predictor
            .cycle_power(n, 1, &budgets)
            .unwrap()
            .to_signature()
            .unwrap();
        let shorter = predictor
            .cycle_power(n - 3, 1, &budgets)
            .unwrap()
            .to_signature()
            .unwrap();
        assert_eq!(whole, shorter.shift(1), "C_{n}");
    }
}
