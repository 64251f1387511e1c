//! Two-photon joint spectral amplitudes on a discrete frequency grid.
//!
//! The amplitude is the product of the pump envelope in the two-photon sum
//! frequency and the fibre phasematching function, sampled on a rectangular
//! signal × idler grid and normalized so `Σ|A|²·cellArea = 1`.

use std::f64::consts::TAU;

use ndarray::Array2;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionModel;
use crate::error::{Error, Result};

/// Uniform rectangular grid over signal and idler angular frequencies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyGrid {
    /// Signal-axis centre (rad/s).
    pub signal_center: f64,
    /// Full signal-axis span (rad/s).
    pub signal_span: f64,
    /// Signal point count (≥ 2).
    pub signal_points: usize,
    /// Idler-axis centre (rad/s).
    pub idler_center: f64,
    /// Full idler-axis span (rad/s).
    pub idler_span: f64,
    /// Idler point count (≥ 2).
    pub idler_points: usize,
}

impl FrequencyGrid {
    pub fn new(
        signal_center: f64,
        signal_span: f64,
        signal_points: usize,
        idler_center: f64,
        idler_span: f64,
        idler_points: usize,
    ) -> Result<Self> {
        if signal_points < 2 || idler_points < 2 {
            return Err(Error::InvalidModel(format!(
                "grid needs at least 2 points per axis, got {signal_points}x{idler_points}"
            )));
        }
        if !(signal_span > 0.0) || !(idler_span > 0.0) {
            return Err(Error::InvalidModel(format!(
                "grid spans must be positive, got {signal_span} and {idler_span}"
            )));
        }
        Ok(Self {
            signal_center,
            signal_span,
            signal_points,
            idler_center,
            idler_span,
            idler_points,
        })
    }

    pub fn signal_step(&self) -> f64 {
        self.signal_span / (self.signal_points - 1) as f64
    }

    pub fn idler_step(&self) -> f64 {
        self.idler_span / (self.idler_points - 1) as f64
    }

    /// Quadrature weight of one grid cell (rad²/s²).
    pub fn cell_area(&self) -> f64 {
        self.signal_step() * self.idler_step()
    }

    pub fn signal_frequency(&self, j: usize) -> f64 {
        self.signal_center - 0.5 * self.signal_span + self.signal_step() * j as f64
    }

    pub fn idler_frequency(&self, k: usize) -> f64 {
        self.idler_center - 0.5 * self.idler_span + self.idler_step() * k as f64
    }

    pub fn signal_axis(&self) -> Vec<f64> {
        (0..self.signal_points).map(|j| self.signal_frequency(j)).collect()
    }

    pub fn idler_axis(&self) -> Vec<f64> {
        (0..self.idler_points).map(|k| self.idler_frequency(k)).collect()
    }

    /// Grid with the same spans and centres but doubled point counts.
    pub fn refined(&self) -> Self {
        Self {
            signal_points: self.signal_points * 2,
            idler_points: self.idler_points * 2,
            ..self.clone()
        }
    }
}

/// Spectral shape of the pump pulse amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PumpShape {
    Gaussian,
}

/// Pulsed pump spectrum, degenerate (both FWM pump photons from the same
/// field).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PumpEnvelope {
    /// Central angular frequency ωₚ (rad/s).
    pub center: f64,
    /// RMS spectral bandwidth of the pump amplitude, σ (rad/s).
    pub rms_bandwidth: f64,
    pub shape: PumpShape,
}

impl PumpEnvelope {
    pub fn gaussian(center: f64, rms_bandwidth: f64) -> Result<Self> {
        if !(rms_bandwidth > 0.0) {
            return Err(Error::InvalidModel(format!(
                "pump bandwidth must be positive, got {rms_bandwidth}"
            )));
        }
        Ok(Self {
            center,
            rms_bandwidth,
            shape: PumpShape::Gaussian,
        })
    }

    /// Bandwidth of the two-pump-photon amplitude: the autoconvolution of two
    /// identical Gaussian pump amplitudes widens the RMS width by √2.
    pub fn two_photon_bandwidth(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.rms_bandwidth
    }

    /// Envelope amplitude at a grid point; depends on `ωₛ + ωᵢ` only and
    /// peaks at 1 on the energy-conservation line `ωₛ + ωᵢ = 2ωₚ`.
    pub fn value(&self, omega_signal: f64, omega_idler: f64) -> f64 {
        match self.shape {
            PumpShape::Gaussian => {
                let detuning = omega_signal + omega_idler - 2.0 * self.center;
                let sigma2 = self.two_photon_bandwidth();
                (-detuning * detuning / (4.0 * sigma2 * sigma2)).exp()
            }
        }
    }
}

/// `sin(x)/x` with a series branch near zero to avoid cancellation.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Phasematching amplitude `sinc(ΔkL/2)·exp(iΔkL/2)` at an arbitrary grid
/// point; no energy pairing is assumed between the arguments.
pub fn phasematching_value(
    model: &DispersionModel,
    omega_signal: f64,
    omega_idler: f64,
    omega_pump: f64,
) -> Result<Complex64> {
    let dk = model.phase_mismatch_general(omega_signal, omega_idler, omega_pump)?;
    let half = 0.5 * dk * model.length;
    Ok(Complex64::from_polar(1.0, half) * sinc(half))
}

/// Normalized two-photon joint spectral amplitude.
#[derive(Debug, Clone)]
pub struct JointSpectralAmplitude {
    pub grid: FrequencyGrid,
    /// Complex amplitude, indexed `[signal, idler]`.
    pub amplitude: Array2<Complex64>,
}

impl JointSpectralAmplitude {
    /// Wrap and normalize an externally built amplitude matrix.
    pub fn from_matrix(grid: FrequencyGrid, mut amplitude: Array2<Complex64>) -> Result<Self> {
        if amplitude.nrows() != grid.signal_points || amplitude.ncols() != grid.idler_points {
            return Err(Error::InvalidModel(format!(
                "amplitude shape {:?} does not match grid {}x{}",
                amplitude.dim(),
                grid.signal_points,
                grid.idler_points
            )));
        }
        let mass: f64 = amplitude.iter().map(|a| a.norm_sqr()).sum::<f64>() * grid.cell_area();
        if !(mass > 0.0) {
            return Err(Error::DegenerateInput(
                "joint amplitude has zero total mass".into(),
            ));
        }
        let scale = 1.0 / mass.sqrt();
        amplitude.mapv_inplace(|a| a * scale);
        Ok(Self { grid, amplitude })
    }

    /// Total `Σ|A|²·cellArea`; 1 up to rounding after construction.
    pub fn total_mass(&self) -> f64 {
        self.amplitude.iter().map(|a| a.norm_sqr()).sum::<f64>() * self.grid.cell_area()
    }

    /// Intensity matrix `|A|²`.
    pub fn intensity(&self) -> Array2<f64> {
        self.amplitude.mapv(|a| a.norm_sqr())
    }
}

/// Build the joint amplitude `A[j,k] = α(ωₛⱼ + ωᵢₖ)·φ(ωₛⱼ, ωᵢₖ)` and
/// normalize it. Fails if any grid corner leaves the dispersion validity
/// window.
pub fn build_jsa(
    model: &DispersionModel,
    pump: &PumpEnvelope,
    grid: &FrequencyGrid,
) -> Result<JointSpectralAmplitude> {
    for omega in [
        grid.signal_frequency(0),
        grid.signal_frequency(grid.signal_points - 1),
        grid.idler_frequency(0),
        grid.idler_frequency(grid.idler_points - 1),
        pump.center,
    ] {
        model.check_window(omega)?;
    }
    let signal_axis = grid.signal_axis();
    let idler_axis = grid.idler_axis();
    let mut amplitude = Array2::<Complex64>::zeros((grid.signal_points, grid.idler_points));
    amplitude
        .outer_iter_mut()
        .into_par_iter()
        .enumerate()
        .for_each(|(j, mut row)| {
            let ws = signal_axis[j];
            for (k, cell) in row.iter_mut().enumerate() {
                let wi = idler_axis[k];
                // Window already checked at the corners; the interior cannot
                // leave it on a rectangular grid.
                let phi = phasematching_value(model, ws, wi, pump.center)
                    .expect("grid interior inside validity window");
                *cell = phi * pump.value(ws, wi);
            }
        });
    JointSpectralAmplitude::from_matrix(grid.clone(), amplitude)
}

/// One traced `Δk = 0` locus in the (ωₛ, ωᵢ) plane.
#[derive(Debug, Clone, Serialize)]
pub struct ContourLoop {
    /// Polyline vertices `(ωₛ, ωᵢ)` in rad/s. For closed loops the first
    /// vertex is repeated at the end.
    pub points: Vec<(f64, f64)>,
    /// True when the locus pinches to the degenerate line inside the scanned
    /// pump range, so the polyline closes on itself; false when it was
    /// truncated by the scan bounds or the validity window.
    pub closed: bool,
    /// True for the trivial `Ω = 0` degenerate line (present whenever the
    /// nonlinear phase is zero).
    pub degenerate_line: bool,
}

/// Trace the phasematched sideband loci over a pump scan.
///
/// For every pump frequency in the scan the closed-form sideband solutions of
/// `Δk(Ω) = 0` are evaluated; the outer solutions are assembled into one
/// polyline per connected branch, mirrored across the degenerate line so a
/// branch that pinches off at both ends forms a closed loop. With zero
/// nonlinear phase the pinch points are the zero-dispersion frequencies and
/// are inserted exactly.
pub fn phasematching_contour(
    model: &DispersionModel,
    pump_min: f64,
    pump_max: f64,
    pump_steps: usize,
) -> Result<Vec<ContourLoop>> {
    if !(pump_max > pump_min) || pump_steps < 2 {
        return Err(Error::InvalidSweep(format!(
            "pump scan needs an increasing range and at least 2 steps, got \
             [{pump_min}, {pump_max}] with {pump_steps}"
        )));
    }
    let (lo, hi) = model.window();
    let min = pump_min.max(lo);
    let max = pump_max.min(hi);
    if !(max > min) {
        return Ok(Vec::new());
    }

    let mut pumps: Vec<f64> = (0..pump_steps)
        .map(|k| min + (max - min) * k as f64 / (pump_steps - 1) as f64)
        .collect();
    if model.nonlinear_mismatch() == 0.0 {
        // Pinch points: β₂(ωₚ) = 0. Insert them so loops close exactly.
        for lambda in model.zero_dispersion_wavelengths() {
            let w = crate::units::wavelength_to_angular_frequency(lambda);
            if w > min && w < max {
                pumps.push(w);
            }
        }
        pumps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }

    let solutions: Vec<Option<f64>> = pumps
        .iter()
        .map(|&wp| {
            model
                .phasematched_detunings(wp)
                .ok()
                .and_then(|dets| dets.last().copied())
        })
        .collect();
    // Solutions ignoring the validity window, to tell pinch-off from clipping.
    let raw: Vec<Option<f64>> = pumps
        .iter()
        .map(|&wp| {
            model
                .phasematched_detunings_unclipped(wp)
                .ok()
                .and_then(|dets| dets.last().copied())
        })
        .collect();

    let mut loops = Vec::new();
    let mut start = 0;
    while start < pumps.len() {
        if solutions[start].is_none() {
            start += 1;
            continue;
        }
        let mut end = start;
        while end + 1 < pumps.len() && solutions[end + 1].is_some() {
            end += 1;
        }
        let branch: Vec<(f64, f64)> = (start..=end)
            .map(|i| {
                let det = solutions[i].unwrap();
                (pumps[i] + det, pumps[i] - det)
            })
            .collect();
        // Closed only when the branch terminates because the sideband
        // solution genuinely vanishes on both sides (pinch-off), not because
        // it left the window or the scan range.
        let pinched_left = start > 0 && raw[start - 1].is_none();
        let pinched_right = end + 1 < pumps.len() && raw[end + 1].is_none();
        let closed = pinched_left && pinched_right;
        let mut points = branch.clone();
        points.extend(branch.iter().rev().map(|&(s, i)| (i, s)));
        if closed {
            points.push(points[0]);
        }
        loops.push(ContourLoop {
            points,
            closed,
            degenerate_line: false,
        });
        start = end + 1;
    }

    if model.nonlinear_mismatch() == 0.0 {
        loops.push(ContourLoop {
            points: pumps.iter().map(|&wp| (wp, wp)).collect(),
            closed: false,
            degenerate_line: true,
        });
    }
    Ok(loops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{reference_grid, reference_model, reference_pump};

    #[test]
    fn envelope_peaks_at_one_on_energy_line() {
        let p = reference_pump(1.0e12);
        let ws = p.center + 3.0e12;
        let wi = p.center - 3.0e12;
        assert_eq!(p.value(ws, wi), 1.0);
    }

    #[test]
    fn envelope_depends_on_sum_only() {
        let p = reference_pump(8.0e11);
        let (ws, wi) = (p.center + 1.3e12, p.center - 0.4e12);
        let v0 = p.value(ws, wi);
        for delta in [1.0e11, -7.7e11, 2.9e12] {
            let v = p.value(ws + delta, wi - delta);
            assert!((v - v0).abs() <= 1e-9 * v0, "delta {delta}: {v} vs {v0}");
        }
    }

    #[test]
    fn envelope_one_rms_detuning() {
        let p = reference_pump(1.0e12);
        let sigma2 = p.two_photon_bandwidth();
        let v = p.value(p.center + sigma2, p.center);
        assert!((v - (-0.25f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn sinc_branches_agree() {
        for x in [1e-5, 5e-5, 9.9e-5, 1.1e-4, 1e-3] {
            let direct = (x as f64).sin() / x;
            assert!((sinc(x) - direct).abs() < 1e-15);
        }
        assert_eq!(sinc(0.0), 1.0);
    }

    #[test]
    fn phasematching_magnitude_one_on_contour() {
        let m = reference_model();
        let pump = crate::units::nm_to_angular_frequency(1064.0);
        let det = m.phasematched_detunings(pump).unwrap()[0];
        let v = phasematching_value(&m, pump + det, pump - det, pump).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn phasematching_first_zero() {
        let m = reference_model();
        let pump = crate::units::nm_to_angular_frequency(1064.0);
        let det = m.phasematched_detunings(pump).unwrap()[0];
        let ws0 = pump + det;
        let wi0 = pump - det;
        // Locate ΔkL = -2π along the idler axis by bisection, then the sinc
        // must vanish there.
        let f = |wi: f64| m.phase_mismatch_general(ws0, wi, pump).unwrap() * m.length + TAU;
        let slope = m.beta1(wi0).unwrap() - m.beta1(pump).unwrap();
        let guess = wi0 + (TAU / (m.length * slope.abs())).copysign(-slope);
        let (mut a, mut b) = (wi0, wi0 + 2.0 * (guess - wi0));
        assert!(f(a) * f(b) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if f(a) * f(mid) <= 0.0 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let v = phasematching_value(&m, ws0, 0.5 * (a + b), pump).unwrap();
        assert!(v.norm() < 1e-12, "|phi| = {}", v.norm());
    }

    #[test]
    fn contour_parallel_to_signal_axis_at_operating_point() {
        // Signal group-velocity matched to the pump: tracing the Δk = 0
        // contour through the operating point moves along the signal axis.
        let m = reference_model();
        let pump = crate::units::nm_to_angular_frequency(1064.0);
        let det = m.phasematched_detunings(pump).unwrap()[0];
        let ws0 = pump + det;
        let wi0 = pump - det;
        let step = 1.0e12;
        for sign in [-1.0, 1.0] {
            let ws = ws0 + sign * step;
            // Find the idler where Δk = 0 at this signal by bisection.
            let f = |wi: f64| m.phase_mismatch_general(ws, wi, pump).unwrap();
            let (mut a, mut b) = (wi0 - 1.0e12, wi0 + 1.0e12);
            assert!(f(a) * f(b) < 0.0);
            for _ in 0..100 {
                let mid = 0.5 * (a + b);
                if f(a) * f(mid) <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            let wi = 0.5 * (a + b);
            // The contour's idler moves far less than the signal step.
            assert!(
                (wi - wi0).abs() < 0.02 * step,
                "idler drift {} for signal step {step}",
                (wi - wi0).abs()
            );
        }
    }

    #[test]
    fn jsa_is_normalized() {
        let m = reference_model();
        let p = reference_pump(1.2e12);
        let grid = reference_grid(&m, &p, 128);
        let jsa = build_jsa(&m, &p, &grid).unwrap();
        assert!((jsa.total_mass() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn jsa_grid_outside_window_fails() {
        let m = reference_model();
        let p = reference_pump(1.2e12);
        let grid = FrequencyGrid::new(2.6e15, 1.0e14, 32, 1.2e15, 1.0e13, 32).unwrap();
        assert!(build_jsa(&m, &p, &grid).is_err());
    }

    #[test]
    fn long_fibre_concentrates_mass_on_contour() {
        // Mass fraction inside the reference fibre's first sinc lobe
        // (|Δk| ≤ 2π/L_ref, a fixed band around the contour) tends to one as
        // the fibre length grows.
        let m = reference_model();
        let p = reference_pump(1.2e12);
        let grid = reference_grid(&m, &p, 512);
        let band = TAU / m.length;

        let fraction_in_band = |length: f64| -> f64 {
            let mut m2 = m.clone();
            m2.length = length;
            let jsa = build_jsa(&m2, &p, &grid).unwrap();
            let mut inside = 0.0;
            let mut total = 0.0;
            for j in 0..grid.signal_points {
                for k in 0..grid.idler_points {
                    let dk = m2
                        .phase_mismatch_general(
                            grid.signal_frequency(j),
                            grid.idler_frequency(k),
                            p.center,
                        )
                        .unwrap();
                    let w = jsa.amplitude[[j, k]].norm_sqr();
                    total += w;
                    if dk.abs() <= band {
                        inside += w;
                    }
                }
            }
            inside / total
        };

        let base = fraction_in_band(m.length);
        let huge = fraction_in_band(m.length * 8.0);
        assert!(huge > base, "{huge} vs {base}");
        assert!(huge > 0.97, "band fraction {huge}");
    }

    #[test]
    fn reference_contour_closes_and_hits_sidebands() {
        let m = reference_model();
        let (lo, hi) = m.window();
        let loops = phasematching_contour(&m, lo, hi, 801).unwrap();
        let closed: Vec<_> = loops.iter().filter(|l| l.closed).collect();
        assert_eq!(closed.len(), 1);
        let loop0 = closed[0];
        assert_eq!(loop0.points.first(), loop0.points.last());
        // The 1064 nm pump's sideband pair lies on the loop.
        let pump = crate::units::nm_to_angular_frequency(1064.0);
        let det = m.phasematched_detunings(pump).unwrap()[0];
        let target = (pump + det, pump - det);
        let dist = loop0
            .points
            .iter()
            .map(|&(s, i)| ((s - target.0).powi(2) + (i - target.1).powi(2)).sqrt())
            .fold(f64::INFINITY, f64::min);
        assert!(dist < 5.0e12, "distance to sideband pair: {dist}");
        // Degenerate line present at zero nonlinear phase.
        assert!(loops.iter().any(|l| l.degenerate_line));
    }

    #[test]
    fn single_zdw_model_contour_does_not_close() {
        // β₄ = 0 with a β₃ slope: a single ZDW; sidebands exist only on the
        // anomalous side and run off the window instead of pinching.
        let m = DispersionModel::new(1.8e15, 5.0e-26, 3.0e-40, 0.0, 0.018, 0.05, 5.0).unwrap();
        let (lo, hi) = m.window();
        let loops = phasematching_contour(&m, lo, hi, 801).unwrap();
        assert!(!loops.is_empty());
        assert!(loops.iter().all(|l| !l.closed));
    }

    #[test]
    fn degenerate_line_only_when_nonlinear_phase_zero() {
        let mut m = reference_model();
        let (lo, hi) = m.window();
        assert!(phasematching_contour(&m, lo, hi, 101)
            .unwrap()
            .iter()
            .any(|l| l.degenerate_line));
        m.peak_power = 10.0;
        assert!(phasematching_contour(&m, lo, hi, 101)
            .unwrap()
            .iter()
            .all(|l| !l.degenerate_line));
    }
}
