//! Simulation of a Stirling heat engine whose working fluid is a single
//! mechanical mode coupled to a feedback-controlled optical cavity.
//!
//! The crate is organized as a pipeline:
//!
//! * [`params`] — device constants, control knobs, presets, validation.
//! * [`cavity`] — feedback-dressed cavity: effective linewidth/detuning,
//!   input-noise occupations, response functions, quadrature spectrum.
//! * [`mech`] — adiabatically eliminated mechanical parameters (optical
//!   damping, optical spring, engineered bath occupation and temperature)
//!   and the excitation-number rate equation.
//! * [`stability`] — drift-matrix eigenvalue analysis and regime
//!   classification of control-plane points.
//! * [`landscape`] — gridded maps of the effective parameters over a 2-D
//!   control plane, with CSV/JSON export.
//! * [`cycle`] — isoline tracing, corner refinement, Stirling cycle
//!   construction and constant-speed schedules.
//! * [`engine`] — adaptive integration of the excitation number along a
//!   schedule, heat/work accounting, efficiency and power.
//! * [`sweep`] — families of cycles: performance versus temperature ratio,
//!   compression ratio, timing, and efficiency at maximum power.
//!
//! All rates and frequencies are stored in units of the mechanical frequency
//! `omega_m`, times in units of `1/omega_m`, and energies in units of
//! `hbar*omega_m`. Kelvin enters only through bath and effective
//! temperatures.

pub mod cavity;
pub mod cycle;
pub mod engine;
mod error;
pub mod landscape;
pub mod mech;
pub mod params;
pub mod stability;
pub mod sweep;

pub use cavity::EffectiveCavity;
pub use cycle::{CycleLevels, Isoline, Schedule, StirlingCycle, Stroke, StrokeKind};
pub use engine::{EngineConfig, EngineReport, Trajectory};
pub use error::{Error, Result};
pub use landscape::{ControlField, FieldKind, GridSpec, LandscapeMap, Plane};
pub use mech::MechanicalEffective;
pub use params::{Constants, FeedbackParams, PhysicalParams, Preset};
pub use stability::{DriftMatrix, RegimeClass};
pub use sweep::{SweepResult, SweepSpec, SweepVariable};
