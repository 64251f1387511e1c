//! Shared fixtures for unit and integration tests.

use std::f64::consts::TAU;

use crate::dispersion::DispersionModel;
use crate::jsa::{FrequencyGrid, PumpEnvelope};
use crate::units::nm_to_angular_frequency;

/// Model fitted so a 1064 nm pump phasematches 810/1550 nm sidebands with
/// the signal group-velocity matched to the pump (zero nonlinear phase).
///
/// The quartic is fitted about the pump (β₂ = 5e-26 s²/m there, β₄ from the
/// phasematching condition, β₃ from signal group-velocity matching) and then
/// re-centred on a 1000 nm expansion point so the ±40% validity window
/// (714-1667 nm) contains the pump, both sidebands and the whole
/// phasematching loop.
pub fn reference_model() -> DispersionModel {
    let omega_pump = nm_to_angular_frequency(1064.0);
    let omega_signal = nm_to_angular_frequency(810.0);
    let det = omega_signal - omega_pump;
    let beta2 = 5.0e-26;
    let beta4 = -12.0 * beta2 / (det * det);
    let beta3 = 2.0 * beta2 / det;
    let omega_ref = nm_to_angular_frequency(1000.0);
    let shift = omega_ref - omega_pump;
    let beta2_r = beta2 + beta3 * shift + beta4 * shift * shift / 2.0;
    let beta3_r = beta3 + beta4 * shift;
    DispersionModel::new(omega_ref, beta2_r, beta3_r, beta4, 0.018, 0.05, 0.0).unwrap()
}

pub fn reference_pump(rms_bandwidth: f64) -> PumpEnvelope {
    PumpEnvelope::gaussian(nm_to_angular_frequency(1064.0), rms_bandwidth).unwrap()
}

/// Grid centred on the phasematched operating point of the reference model:
/// ±5 two-photon pump bandwidths along signal, ±5 first-zero phasematching
/// widths along idler.
pub fn reference_grid(
    model: &DispersionModel,
    pump: &PumpEnvelope,
    points: usize,
) -> FrequencyGrid {
    let det = model.phasematched_detunings(pump.center).unwrap()[0];
    let ws0 = pump.center + det;
    let wi0 = pump.center - det;
    let slope = model.beta1(wi0).unwrap() - model.beta1(pump.center).unwrap();
    let pm_width = TAU / (model.length * slope.abs());
    let signal_span = 10.0 * pump.two_photon_bandwidth();
    let idler_span = 10.0 * pm_width;
    FrequencyGrid::new(ws0, signal_span, points, wi0, idler_span, points).unwrap()
}
