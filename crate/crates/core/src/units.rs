//! Unit conversions between vacuum wavelength and angular frequency.
//!
//! All spectral quantities inside the crate are angular frequencies in rad/s;
//! wavelengths appear only at the configuration and reporting boundaries.

use std::f64::consts::TAU;

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Vacuum wavelength (m) to angular frequency (rad/s).
pub fn wavelength_to_angular_frequency(lambda_m: f64) -> f64 {
    TAU * SPEED_OF_LIGHT / lambda_m
}

/// Angular frequency (rad/s) to vacuum wavelength (m).
pub fn angular_frequency_to_wavelength(omega: f64) -> f64 {
    TAU * SPEED_OF_LIGHT / omega
}

/// Vacuum wavelength (nm) to angular frequency (rad/s).
pub fn nm_to_angular_frequency(lambda_nm: f64) -> f64 {
    wavelength_to_angular_frequency(lambda_nm * 1e-9)
}

/// Angular frequency (rad/s) to vacuum wavelength (nm).
pub fn angular_frequency_to_nm(omega: f64) -> f64 {
    angular_frequency_to_wavelength(omega) * 1e9
}

/// RMS spectral bandwidth in nm about `lambda_nm` to rad/s.
///
/// First-order conversion `dω = 2πc/λ² · dλ`, adequate for the sub-percent
/// fractional bandwidths of pulsed pump lasers.
pub fn bandwidth_nm_to_angular(lambda_nm: f64, bandwidth_nm: f64) -> f64 {
    let lambda_m = lambda_nm * 1e-9;
    TAU * SPEED_OF_LIGHT / (lambda_m * lambda_m) * bandwidth_nm * 1e-9
}

/// Power ratio for an attenuation given in dB (0 dB -> 1.0, 10 dB -> 0.1).
pub fn db_loss_to_transmission(loss_db: f64) -> f64 {
    10f64.powf(-loss_db / 10.0)
}
