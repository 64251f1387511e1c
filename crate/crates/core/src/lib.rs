//! Numerical models of multiplexed fibre sources of heralded single photons.
//!
//! The crate covers the full chain from fibre dispersion to counting
//! statistics:
//!
//! * [`dispersion`] — parametric propagation-constant model with two
//!   zero-dispersion wavelengths, giving the four-wave-mixing phase mismatch;
//! * [`jsa`] — two-photon joint spectral amplitudes built as pump envelope
//!   times phasematching on a frequency grid, plus phasematching contours;
//! * [`schmidt`] — Schmidt decomposition of a joint amplitude and the derived
//!   mode cooperativity, heralded purity and marginal-coherence prediction;
//! * [`statistics`] — per-pulse Monte Carlo of thermal pair generation,
//!   lossy channels and gated click detectors, with a truncated-Fock exact
//!   oracle;
//! * [`mux`] — feed-forward switch networks that route several heralded
//!   sources into one output;
//! * [`estimators`] — coincidence-to-accidentals ratios and second-order
//!   coherence estimators with Poisson error propagation;
//! * [`tomography`] — seeded reconstruction of the joint spectral intensity
//!   from stimulated spectra;
//! * [`io`] — CSV/JSON artifact formats shared by the command-line front end.

pub mod dispersion;
pub mod error;
#[cfg(test)]
pub(crate) mod test_support;
pub mod estimators;
pub mod io;
pub mod jsa;
pub mod mux;
pub mod schmidt;
pub mod statistics;
pub mod tomography;
pub mod units;

pub use error::{Error, Result};
