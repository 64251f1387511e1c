//! Parametric fibre dispersion for degenerate-pump four-wave mixing.
//!
//! The propagation constant is a Taylor expansion about a reference angular
//! frequency `ω₀`, carrying only the orders that matter for phasematching
//! (β₂, β₃, β₄; the absolute phase and group delay cancel out of the FWM
//! mismatch on the energy shell and are fixed to zero here). A fibre with a
//! suitable β₂ > 0, β₄ < 0 combination has two zero-dispersion wavelengths
//! and phasematches widely separated sideband pairs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::{angular_frequency_to_nm, angular_frequency_to_wavelength};

/// Fractional half-width of the validity window around the reference
/// frequency. Outside `[ (1-W)·ω₀, (1+W)·ω₀ ]` the Taylor expansion is
/// meaningless and evaluation is refused.
pub const VALIDITY_WINDOW_FRACTION: f64 = 0.4;

/// Taylor-expanded fibre propagation constant plus the nonlinear parameters
/// entering the four-wave-mixing phase mismatch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DispersionModel {
    /// Reference angular frequency ω₀ of the expansion (rad/s).
    pub omega_ref: f64,
    /// Group-velocity dispersion β₂ at ω₀ (s²/m).
    pub beta2: f64,
    /// Third-order coefficient β₃ at ω₀ (s³/m).
    pub beta3: f64,
    /// Fourth-order coefficient β₄ at ω₀ (s⁴/m).
    pub beta4: f64,
    /// Nonlinear coefficient γ (1/(W·m)).
    pub gamma: f64,
    /// Fibre length L (m).
    pub length: f64,
    /// Peak pump power Pₚ (W); enters the mismatch as −2γPₚ.
    pub peak_power: f64,
}

impl DispersionModel {
    pub fn new(
        omega_ref: f64,
        beta2: f64,
        beta3: f64,
        beta4: f64,
        gamma: f64,
        length: f64,
        peak_power: f64,
    ) -> Result<Self> {
        if !(omega_ref > 0.0) {
            return Err(Error::InvalidModel(format!(
                "reference frequency must be positive, got {omega_ref}"
            )));
        }
        if !(length > 0.0) {
            return Err(Error::InvalidModel(format!(
                "fibre length must be positive, got {length}"
            )));
        }
        if gamma < 0.0 || peak_power < 0.0 {
            return Err(Error::InvalidModel(format!(
                "gamma ({gamma}) and peak power ({peak_power}) must be non-negative"
            )));
        }
        Ok(Self {
            omega_ref,
            beta2,
            beta3,
            beta4,
            gamma,
            length,
            peak_power,
        })
    }

    /// Validity window `[lo, hi]` in rad/s.
    pub fn window(&self) -> (f64, f64) {
        (
            (1.0 - VALIDITY_WINDOW_FRACTION) * self.omega_ref,
            (1.0 + VALIDITY_WINDOW_FRACTION) * self.omega_ref,
        )
    }

    /// Error unless `omega` lies inside the validity window.
    pub fn check_window(&self, omega: f64) -> Result<()> {
        let (lo, hi) = self.window();
        if omega < lo || omega > hi || !omega.is_finite() {
            return Err(Error::OutOfWindow {
                omega,
                lo,
                hi,
                lo_nm: angular_frequency_to_nm(hi),
                hi_nm: angular_frequency_to_nm(lo),
            });
        }
        Ok(())
    }

    /// Integrated dispersive phase per unit length: the β(ω) polynomial with
    /// the constant and group-delay terms set to zero (they cancel from the
    /// phase mismatch).
    pub fn beta_polynomial(&self, omega: f64) -> Result<f64> {
        self.check_window(omega)?;
        let d = omega - self.omega_ref;
        Ok(d * d * (self.beta2 / 2.0 + d * (self.beta3 / 6.0 + d * self.beta4 / 24.0)))
    }

    /// Group-slowness detuning dβ/dω relative to the reference frequency
    /// (s/m); vanishes at ω₀ by construction.
    pub fn beta1(&self, omega: f64) -> Result<f64> {
        self.check_window(omega)?;
        let d = omega - self.omega_ref;
        Ok(d * (self.beta2 + d * (self.beta3 / 2.0 + d * self.beta4 / 6.0)))
    }

    /// Group-velocity dispersion β₂(ω) = β₂ + β₃Δω + ½β₄Δω² (s²/m).
    pub fn beta2_at(&self, omega: f64) -> Result<f64> {
        self.check_window(omega)?;
        let d = omega - self.omega_ref;
        Ok(self.beta2 + d * (self.beta3 + d * self.beta4 / 2.0))
    }

    /// All zero crossings of β₂(ω) inside the validity window, returned as
    /// vacuum wavelengths in metres, ascending. The list may be empty.
    pub fn zero_dispersion_wavelengths(&self) -> Vec<f64> {
        let mut detunings: Vec<f64> = Vec::new();
        let a = self.beta4 / 2.0;
        let b = self.beta3;
        let c = self.beta2;
        if a == 0.0 {
            if b != 0.0 {
                detunings.push(-c / b);
            }
        } else {
            let disc = b * b - 4.0 * a * c;
            if disc > 0.0 {
                // Citardauq-stable form: avoids cancellation when b dominates.
                let q = -0.5 * (b + b.signum() * disc.sqrt());
                if q != 0.0 {
                    detunings.push(q / a);
                    detunings.push(c / q);
                } else {
                    detunings.push(0.0);
                }
            } else if disc == 0.0 {
                detunings.push(-b / (2.0 * a));
            }
        }
        let (lo, hi) = self.window();
        let mut lambdas: Vec<f64> = detunings
            .into_iter()
            .map(|d| self.omega_ref + d)
            .filter(|w| *w >= lo && *w <= hi)
            .map(angular_frequency_to_wavelength)
            .collect();
        lambdas.sort_by(|x, y| x.partial_cmp(y).unwrap());
        lambdas.dedup_by(|x, y| (*x - *y).abs() < f64::EPSILON * y.abs());
        lambdas
    }

    /// Degenerate-pump FWM phase mismatch for a sideband pair at
    /// `ω_pump ± detuning` (1/m):
    ///
    /// `Δk(Ω) = −(β₂,ₚ Ω² + β₄ Ω⁴/12) − 2γPₚ`
    ///
    /// with β₂,ₚ the GVD re-centred on the pump. Even in the detuning by
    /// construction; odd expansion orders cancel for a degenerate pump.
    pub fn phase_mismatch(&self, omega_pump: f64, detuning: f64) -> Result<f64> {
        self.check_window(omega_pump + detuning.abs())?;
        self.check_window(omega_pump - detuning.abs())?;
        let beta2_p = self.beta2_at(omega_pump)?;
        let d2 = detuning * detuning;
        Ok(-(beta2_p * d2 + self.beta4 * d2 * d2 / 12.0) - self.nonlinear_mismatch())
    }

    /// Full phase mismatch at an arbitrary grid point (1/m):
    /// `Δk = 2β(ωₚ) − β(ωₛ) − β(ωᵢ) − 2γPₚ`, with no energy pairing assumed.
    pub fn phase_mismatch_general(
        &self,
        omega_signal: f64,
        omega_idler: f64,
        omega_pump: f64,
    ) -> Result<f64> {
        let bp = self.beta_polynomial(omega_pump)?;
        let bs = self.beta_polynomial(omega_signal)?;
        let bi = self.beta_polynomial(omega_idler)?;
        Ok(2.0 * bp - bs - bi - self.nonlinear_mismatch())
    }

    /// The constant nonlinear contribution 2γPₚ (1/m).
    pub fn nonlinear_mismatch(&self) -> f64 {
        2.0 * self.gamma * self.peak_power
    }

    /// Sideband detunings Ω > 0 that phasematch at the given pump, ascending.
    ///
    /// `Δk(Ω) = 0` is quadratic in Ω², so the roots are closed-form. Only
    /// detunings keeping both sidebands inside the validity window are kept.
    pub fn phasematched_detunings(&self, omega_pump: f64) -> Result<Vec<f64>> {
        let (lo, hi) = self.window();
        let max_det = (omega_pump - lo).min(hi - omega_pump);
        Ok(self
            .phasematched_detunings_unclipped(omega_pump)?
            .into_iter()
            .filter(|d| *d <= max_det)
            .collect())
    }

    /// Like [`Self::phasematched_detunings`] but without discarding sidebands
    /// that fall outside the validity window; used to tell a genuine pinch-off
    /// of the phasematching locus from window truncation.
    pub fn phasematched_detunings_unclipped(&self, omega_pump: f64) -> Result<Vec<f64>> {
        self.check_window(omega_pump)?;
        let beta2_p = self.beta2_at(omega_pump)?;
        let nl = self.nonlinear_mismatch();
        // (β₄/12)x² + β₂,ₚ x + 2γPₚ = 0 with x = Ω².
        let a = self.beta4 / 12.0;
        let b = beta2_p;
        let c = nl;
        let mut xs: Vec<f64> = Vec::new();
        if a == 0.0 {
            if b != 0.0 {
                xs.push(-c / b);
            }
        } else {
            let disc = b * b - 4.0 * a * c;
            if disc >= 0.0 {
                let q = -0.5 * (b + b.signum() * disc.sqrt());
                if q != 0.0 {
                    xs.push(q / a);
                    xs.push(c / q);
                } else {
                    xs.push(0.0);
                }
            }
        }
        let mut dets: Vec<f64> = xs
            .into_iter()
            .filter(|x| *x > 0.0)
            .map(|x| x.sqrt())
            .collect();
        dets.sort_by(|x, y| x.partial_cmp(y).unwrap());
        dets.dedup_by(|x, y| (*x - *y).abs() < 1e-9 * y.abs());
        Ok(dets)
    }
}
