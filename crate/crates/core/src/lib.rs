pub mod budget;
pub mod chordal;
pub mod corpus;
pub mod error;
pub mod families;
pub mod game;
pub mod graph;
pub mod strategy;
pub mod throttling;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use game::{CopConfig, GameState, GameValue};
pub use graph::{Distance, Graph};
