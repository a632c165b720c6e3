//! Simulation and analysis engine for high-gain pulsed twin-beam sources.
//!
//! The crate computes frequency-resolved Bogoliubov transfer functions for a
//! waveguided parametric down-conversion source from coupled-mode equations
//! that include pump self-phase modulation and cross-phase modulation,
//! extracts squeezing observables from them, emulates cascaded
//! stimulated-emission measurements, and fits the physical coupling
//! parameters back out of such measurements.
//!
//! Modules map onto the stages of that pipeline:
//!
//! * [`grid`] — shared signal/idler detuning lattice and unit conversions.
//! * [`pump`] — classical pump spectral amplitude, chirp, autocorrelation,
//!   and self-phase-modulation propagation.
//! * [`propagator`] — per-section generators and their composed matrix
//!   exponentials yielding the four transfer-function blocks.
//! * [`oracle`] — closed-form low-gain expansion used for independent
//!   verification and as a fast model during calibration.
//! * [`schmidt`] — squeezing-mode decomposition and scalar observables.
//! * [`emulator`] — synthetic cascaded stimulated-emission scans, the κ
//!   gain proxy, and the experiment/theory error metric.
//! * [`calibrate`] — parameter-extraction fits against scan data.

pub mod calibrate;
pub mod emulator;
pub mod error;
pub mod grid;
pub mod linalg;
pub mod oracle;
pub mod propagator;
pub mod pump;
pub mod schmidt;

pub use error::{Error, Result};
