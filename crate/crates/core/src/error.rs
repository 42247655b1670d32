use thiserror::Error;

/// Errors produced by the solvers, generators and strategy checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("source set is empty")]
    EmptySources,

    #[error("budget exceeded in {what}: {required} steps required, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        required: u64,
        limit: u64,
    },

    #[error("budget exceeded at k = {k_from}; throttling minima still open for k in {k_from}..={k_to} ({required} steps required, limit {limit})")]
    SweepBudgetExceeded {
        k_from: usize,
        k_to: usize,
        required: u64,
        limit: u64,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertices {0} and {1} are in different components")]
    Unreachable(usize, usize),

    #[error("graph is not chordal (induced cycle {0:?})")]
    NotChordal(Vec<usize>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("path {0:?} is not a geodesic")]
    NotGeodesic(Vec<usize>),

    #[error("no corner off the target path remains; residual vertices {0:?}")]
    NoCornerAvailable(Vec<usize>),

    #[error("vertex {0} is not within the cover radius of any cop")]
    CoverViolated(usize),

    #[error("strategy undefined at round {round} (cops {cops:?}, robber {robber}): {reason}")]
    StrategyUndefined {
        round: u32,
        cops: Vec<usize>,
        robber: usize,
        reason: String,
    },

    #[error("state not present in solved table: {0}")]
    UnknownState(String),

    #[error("illegal move: {0}")]
    IllegalMove(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::SweepBudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
