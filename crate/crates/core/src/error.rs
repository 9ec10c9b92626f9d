use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes surfaced by the simulation pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Feedback gain exceeds the cavity loss: `kappa_eff <= 0`, so the
    /// dressed-cavity formulas (which divide by `kappa_eff`) are invalid.
    #[error("degenerate cavity: kappa_eff = {kappa_eff:.6e} <= 0")]
    DegenerateCavity { kappa_eff: f64 },

    /// The dressed-cavity response denominator vanished at this frequency
    /// (parametric instability of the in-loop cavity).
    #[error("response pole at omega = {omega}: |denominator| = {denominator:.3e}")]
    ResponsePole { omega: f64, denominator: f64 },

    /// Total mechanical damping `gamma + Gamma_m <= 0`: no steady state.
    #[error("heating runaway: gamma + Gamma_m = {total_damping:.6e} <= 0")]
    HeatingRunaway { total_damping: f64 },

    /// Optical spring pushed the effective mechanical frequency through zero.
    #[error("effective frequency omega_m + Delta_m = {shifted:.6e} <= 0")]
    NegativeFrequency { shifted: f64 },

    /// No valid grid cell brackets the requested level.
    #[error("no valid cell brackets {field} level {level}")]
    EmptyLevel { field: &'static str, level: f64 },

    /// Corner refinement failed under both Newton and nested bisection.
    #[error("corner refinement did not converge near ({x}, {y})")]
    NoConvergence { x: f64, y: f64 },

    /// The four requested level sets do not link into a closed cycle.
    #[error("no closed cycle: {reason}")]
    NoClosedLoop { reason: String },

    /// Net work over the cycle is non-negative; efficiency is undefined.
    #[error("not an engine: W_tot = {w_tot:.6e} >= 0")]
    NotAnEngine { w_tot: f64 },

    /// The adaptive integrator's step size underflowed.
    #[error("integrator step underflow at t = {t}")]
    StepFailure { t: f64 },

    /// Malformed configuration input (file, preset, or argument).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
