//! Resource budgets for the exact computations.

/// Caps that keep the brute-force oracles at desk scale. All checks fail
/// loudly (`FaceBudgetExceeded`, `MatrixBudgetExceeded`, ...) instead of
/// degrading silently.
#[derive(Clone, Debug)]
pub struct Budgets {
    /// Maximum number of faces enumerated per complex.
    pub max_faces: usize,
    /// Maximum total number of boundary-matrix entries per homology run.
    pub max_matrix_entries: usize,
    /// Largest vertex count accepted by the exact domination solver.
    pub domination_cap: usize,
    /// Largest vertex count accepted by the exact psi recursion.
    pub psi_cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_faces: 5_000_000,
            max_matrix_entries: 50_000_000,
            domination_cap: 24,
            psi_cap: 12,
        }
    }
}

pub const ENV_BUDGET_FACES: &str = "INDTOPO_BUDGET_FACES";
pub const ENV_BUDGET_MATRIX: &str = "INDTOPO_BUDGET_MATRIX";

impl Budgets {
    /// Defaults overridden by `INDTOPO_BUDGET_FACES` / `INDTOPO_BUDGET_MATRIX`
    /// when set. Command-line flags take precedence over both (handled by
    /// the caller).
    pub fn from_env() -> Self {
        let mut b = Budgets::default();
        if let Some(v) = read_env(ENV_BUDGET_FACES) {
            b.max_faces = v;
        }
        if let Some(v) = read_env(ENV_BUDGET_MATRIX) {
            b.max_matrix_entries = v;
        }
        b
    }
}

fn read_env(name: &str) -> Option<usize> {
    std::env::var(name).ok()?.trim().parse().ok()
}
