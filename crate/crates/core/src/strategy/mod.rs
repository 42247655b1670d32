//! Constructive cop strategies with machine-checked capture bounds.

mod certificate;
mod fbound;
mod guard;
mod lambert;
mod staged;

pub use certificate::{
    certify_strategy, CertifyOutcome, PlacementCertificate, ReserveTarget, Stage, StrategyRunner,
    TraceStep,
};
pub(crate) use certificate::ball_guard_time;
pub use fbound::feedback_bound;
pub use guard::{guard_placement, path_retraction, shadow_guard_simulate, PathRetraction, ShadowStep};
pub use lambert::{lambert_residual, lambert_w, lambert_w_dd, DoubleDouble, LambertParams};
pub use staged::{staged_decomposition, StagedParams};
