/// Size limits and work budgets for the exponential-time routines.
///
/// Every exhaustive algorithm in the crate checks one of these knobs before
/// allocating anything; exceeding a knob is a `Capability`/`Budget` error,
/// never a silent fallback to a weaker answer.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Max vertex count for exhaustive minimum-dominating-set search.
    pub domination_n: usize,
    /// Max vertex count for the exact treewidth subset DP.
    pub treewidth_n: usize,
    /// Max vertex count for the jump-searching (helicopter) solver.
    pub helicopter_n: usize,
    /// Max number of game states `C(n+k-1, k) * n * 2` for the pursuit solver.
    pub solver_states: u64,
    /// Max vertex count for the exhaustive wide-subgraph search.
    pub wide_search_n: usize,
    /// Max vertex count for the exhaustive wideness check of a fixed subgraph.
    pub wide_check_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            domination_n: 24,
            treewidth_n: 18,
            helicopter_n: 10,
            solver_states: 50_000_000,
            wide_search_n: 12,
            wide_check_n: 32,
        }
    }
}

impl Limits {
    /// Same limits with the solver state budget replaced.
    pub fn with_solver_states(mut self, budget: u64) -> Self {
        self.solver_states = budget;
        self
    }
}
