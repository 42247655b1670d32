//! The Cops and Robbers game: configurations, values and the exact solver.
//!
//! Round 0 is the placement. Each later round is a cop half-move followed by
//! a robber half-move, and capture is checked after every half-move.

mod config;
mod solver;
mod value;

pub use config::{ConfigSpace, CopConfig, GameState};
pub use solver::{
    best_placement, capt_k, capt_k_with, cop_number, optimal_moves, solve, solve_placement, Move,
    Mover, PlacementMode, SolvedGame, TableEntry,
};
pub use value::GameValue;
