//! Classical pump spectral amplitude: analytic and tabulated shapes, chirp,
//! frequency autocorrelation, and self-phase-modulation propagation.
//!
//! The pump lives on the doubled lattice of [`FrequencyGrid`] (detunings
//! (m − n)·Δω about ω̄_p) so that every sum frequency ω_j + ω_k of the field
//! grid lands on a pump bin. Amplitudes are continuum values β_p(z, ω) in
//! √(J·s), normalized so that Σ_m |β_m|²·Δω equals the pulse energy.

use crate::error::{Error, Result};
use crate::grid::{angular_frequency_to_wavelength, FrequencyGrid, SPEED_OF_LIGHT};
use crate::linalg;
use ndarray::prelude::*;
use num_complex::Complex64;

/// Normalization of the self-phase-modulation convolution kernel relative to
/// the pump autocorrelation. The cross-phase-modulation terms carry an
/// explicit 1/(2π); using the same normalization here keeps the fitted
/// gamma_spm on the same footing as gamma_xpm and reproduces the measured
/// photon-number scale at high pump energy with the tabulated coupling
/// constants.
pub(crate) const SPM_KERNEL_SCALE: f64 = 1.0 / (2.0 * std::f64::consts::PI);

/// Complex pump spectral amplitude sampled on the pump lattice.
#[derive(Debug, Clone)]
pub struct PumpSpectrum {
    grid: FrequencyGrid,
    amplitudes: Array1<Complex64>,
    z_position: f64,
    pulse_energy: f64,
}

impl PumpSpectrum {
    /// Wrap raw per-frequency amplitudes defined on the pump lattice.
    pub fn from_amplitudes(
        grid: FrequencyGrid,
        amplitudes: Array1<Complex64>,
        z_position: f64,
    ) -> Result<Self> {
        if amplitudes.len() != grid.pump_lattice_len() {
            return Err(Error::Domain(format!(
                "pump amplitude array has {} bins, lattice needs {}",
                amplitudes.len(),
                grid.pump_lattice_len()
            )));
        }
        if amplitudes.iter().any(|z| !z.is_finite()) {
            return Err(Error::Domain("pump amplitudes must be finite".into()));
        }
        let pulse_energy = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.spacing();
        Ok(Self {
            grid,
            amplitudes,
            z_position,
            pulse_energy,
        })
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn amplitudes(&self) -> &Array1<Complex64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, m: usize) -> Complex64 {
        self.amplitudes[m]
    }

    pub fn z_position(&self) -> f64 {
        self.z_position
    }

    /// Nominal pulse energy E_p (J).
    pub fn pulse_energy(&self) -> f64 {
        self.pulse_energy
    }

    /// Σ_m |β_m|²·Δω, which the propagation steps must conserve.
    pub fn energy(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>() * self.grid.spacing()
    }

    /// Same spectral shape rescaled to a different pulse energy.
    pub fn with_energy(&self, pulse_energy: f64) -> Result<Self> {
        if pulse_energy < 0.0 {
            return Err(Error::Domain("pulse energy must be non-negative".into()));
        }
        if self.pulse_energy == 0.0 {
            if pulse_energy == 0.0 {
                return Ok(self.clone());
            }
            return Err(Error::Domain(
                "cannot rescale an identically zero pump to finite energy".into(),
            ));
        }
        let s = (pulse_energy / self.pulse_energy).sqrt();
        let mut out = self.clone();
        out.amplitudes.mapv_inplace(|z| z * s);
        out.pulse_energy = pulse_energy;
        Ok(out)
    }
}

/// Transform-limited Gaussian pump with the stated intensity FWHM.
///
/// `fwhm_bandwidth` is the full width at half maximum of |β|² in rad/s and
/// `center` the absolute carrier (rad/s, typically `grid.center_pump()`).
pub fn gaussian_pump(
    grid: &FrequencyGrid,
    pulse_energy: f64,
    fwhm_bandwidth: f64,
    center: f64,
) -> Result<PumpSpectrum> {
    if pulse_energy < 0.0 {
        return Err(Error::Domain("pulse energy must be non-negative".into()));
    }
    if !(fwhm_bandwidth > 0.0) {
        return Err(Error::Domain("bandwidth must be positive".into()));
    }
    if fwhm_bandwidth < 3.0 * grid.spacing() {
        return Err(Error::Resolution(format!(
            "pump FWHM {:.3e} rad/s is below 3 grid bins ({:.3e} rad/s)",
            fwhm_bandwidth,
            3.0 * grid.spacing()
        )));
    }
    // |β(ω)|² ∝ exp(−((ω−c)/s)²) has FWHM 2√(ln2)·s
    let s = fwhm_bandwidth / (2.0 * (2.0f64).ln().sqrt());
    let n_pump = grid.pump_lattice_len();
    let mut amps = Array1::<Complex64>::zeros(n_pump);
    if pulse_energy > 0.0 {
        for m in 0..n_pump {
            let x = (grid.pump_frequency(m) - center) / s;
            amps[m] = Complex64::new((-0.5 * x * x).exp(), 0.0);
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.spacing();
        let scale = (pulse_energy / norm).sqrt();
        amps.mapv_inplace(|z| z * scale);
    }
    PumpSpectrum::from_amplitudes(grid.clone(), amps, 0.0)
}

/// Pump built from tabulated (ω, magnitude, phase) samples, linearly
/// interpolated onto the pump lattice (magnitude and phase separately; the
/// phase column must be continuous/unwrapped) and renormalized to
/// `pulse_energy`. Lattice bins outside the sampled range are zero-filled,
/// which is only allowed where the boundary samples are already negligible.
pub fn tabulated_pump(
    grid: &FrequencyGrid,
    samples: &[(f64, f64, f64)],
    pulse_energy: f64,
) -> Result<PumpSpectrum> {
    if samples.len() < 2 {
        return Err(Error::Coverage(
            "need at least two pump samples for interpolation".into(),
        ));
    }
    if pulse_energy < 0.0 {
        return Err(Error::Domain("pulse energy must be non-negative".into()));
    }
    for w in samples.windows(2) {
        if !(w[1].0 > w[0].0) {
            return Err(Error::Domain(
                "pump samples must have strictly increasing frequency".into(),
            ));
        }
    }
    if samples.iter().any(|s| !s.0.is_finite() || !s.1.is_finite() || !s.2.is_finite()) {
        return Err(Error::Domain("pump samples must be finite".into()));
    }
    if samples.iter().any(|s| s.1 < 0.0) {
        return Err(Error::Domain("pump sample magnitudes must be non-negative".into()));
    }

    let max_mag = samples.iter().map(|s| s.1).fold(0.0f64, f64::max);
    if max_mag == 0.0 && pulse_energy > 0.0 {
        return Err(Error::Domain(
            "all-zero pump samples cannot carry finite pulse energy".into(),
        ));
    }
    let lo = samples[0].0;
    let hi = samples[samples.len() - 1].0;
    let support_floor = 1e-6 * max_mag;

    let n_pump = grid.pump_lattice_len();
    let first_freq = grid.pump_frequency(0);
    let last_freq = grid.pump_frequency(n_pump - 1);
    // Zero-filling beyond the samples is fine only if the pump has already
    // decayed at the sample boundary that faces the lattice.
    if first_freq < lo && samples[0].1 > support_floor {
        return Err(Error::Coverage(format!(
            "samples start at {lo:.6e} rad/s with non-negligible magnitude but the lattice needs {first_freq:.6e}"
        )));
    }
    if last_freq > hi && samples[samples.len() - 1].1 > support_floor {
        return Err(Error::Coverage(format!(
            "samples end at {hi:.6e} rad/s with non-negligible magnitude but the lattice needs {last_freq:.6e}"
        )));
    }

    let mut amps = Array1::<Complex64>::zeros(n_pump);
    let mut cursor = 0usize;
    for m in 0..n_pump {
        let w = grid.pump_frequency(m);
        if w < lo || w > hi {
            continue;
        }
        while cursor + 2 < samples.len() && samples[cursor + 1].0 < w {
            cursor += 1;
        }
        let (w0, m0, p0) = samples[cursor];
        let (w1, m1, p1) = samples[cursor + 1];
        let t = ((w - w0) / (w1 - w0)).clamp(0.0, 1.0);
        let mag = m0 + t * (m1 - m0);
        let phase = p0 + t * (p1 - p0);
        amps[m] = Complex64::from_polar(mag, phase);
    }

    if pulse_energy > 0.0 {
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>() * grid.spacing();
        if norm == 0.0 {
            return Err(Error::Coverage(
                "pump samples have no support on the pump lattice".into(),
            ));
        }
        let scale = (pulse_energy / norm).sqrt();
        amps.mapv_inplace(|z| z * scale);
    } else {
        amps.fill(Complex64::new(0.0, 0.0));
    }
    PumpSpectrum::from_amplitudes(grid.clone(), amps, 0.0)
}

/// Group-delay dispersion per wavelength (fs/nm) expressed in SI (s/m).
pub const FS_PER_NM: f64 = 1e-15 / 1e-9;

/// Quadratic spectral-phase coefficient φ″(ω̄_p) for a dispersion D given in
/// s/m: φ″ = −D·λ²/(2πc) with λ the pump carrier wavelength.
pub fn chirp_phi2_from_dispersion(dispersion_s_per_m: f64, center_pump: f64) -> Result<f64> {
    let lambda = angular_frequency_to_wavelength(center_pump)?;
    Ok(-dispersion_s_per_m * lambda * lambda / (2.0 * std::f64::consts::PI * SPEED_OF_LIGHT))
}

/// Multiply the pump by exp(iφ(Ω)) with φ = ½φ″Ω² (+ optional cubic term
/// φ‴Ω³/6), Ω = ω − ω̄_p. The quadratic coefficient comes from the
/// group-delay-per-wavelength convention dT/dλ = D. Magnitudes are
/// unchanged bin-wise; positive D delays the long-wavelength side.
pub fn apply_chirp(
    pump: &PumpSpectrum,
    dispersion_s_per_m: f64,
    cubic_s3: Option<f64>,
) -> Result<PumpSpectrum> {
    let phi2 = chirp_phi2_from_dispersion(dispersion_s_per_m, pump.grid.center_pump())?;
    let phi3 = cubic_s3.unwrap_or(0.0);
    let mut out = pump.clone();
    for m in 0..out.amplitudes.len() {
        let w = pump.grid.pump_detuning(m);
        let phase = 0.5 * phi2 * w * w + phi3 * w * w * w / 6.0;
        out.amplitudes[m] *= Complex64::from_polar(1.0, phase);
    }
    Ok(out)
}

/// Frequency autocorrelation ε_p(Δω) of the pump spectral amplitude,
/// sampled on the lattice of detuning differences d·Δω, d ∈ [−2n, 2n].
#[derive(Debug, Clone)]
pub struct PumpAutocorrelation {
    values: Array1<Complex64>,
    spacing: f64,
}

impl PumpAutocorrelation {
    /// ε_p at difference index d (lag d·Δω).
    pub fn at_lag(&self, d: isize) -> Complex64 {
        let center = (self.values.len() / 2) as isize;
        let idx = center + d;
        if idx < 0 || idx >= self.values.len() as isize {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[idx as usize]
        }
    }

    /// ε_p(0) = E_p.
    pub fn zero_lag(&self) -> Complex64 {
        self.at_lag(0)
    }

    pub fn values(&self) -> &Array1<Complex64> {
        &self.values
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn max_lag(&self) -> isize {
        (self.values.len() / 2) as isize
    }
}

/// Discrete ε_p(Δω) = Σ_m β*(ω_m − Δω)·β(ω_m)·Δω, evaluated from the
/// input-face pump. It is invariant along z under the SPM evolution.
pub fn autocorrelation(pump: &PumpSpectrum) -> PumpAutocorrelation {
    let n = pump.amplitudes.len();
    let dw = pump.grid.spacing();
    let max_lag = (n - 1) as isize;
    let mut values = Array1::<Complex64>::zeros(2 * n - 1);
    for d in -max_lag..=max_lag {
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..n as isize {
            let shifted = m - d;
            if shifted >= 0 && shifted < n as isize {
                acc += pump.amplitudes[shifted as usize].conj() * pump.amplitudes[m as usize];
            }
        }
        values[(d + max_lag) as usize] = acc * dw;
    }
    PumpAutocorrelation {
        values,
        spacing: dw,
    }
}

/// Exact single-step propagator for the pump SPM equation with the fixed
/// input-face autocorrelation kernel: β(z+dz) = exp(i·γ·ε̂·dz)·β(z).
///
/// The convolution matrix ε̂ is Hermitian, so the evolution is applied
/// through its eigendecomposition and conserves Σ|β|²Δω exactly. One
/// operator can be reused for any γ and any distance.
#[derive(Debug, Clone)]
pub struct SpmOperator {
    eigenvalues: Array1<f64>,
    eigenvectors: Array2<Complex64>,
}

impl SpmOperator {
    pub fn new(autocorr: &PumpAutocorrelation, lattice_len: usize) -> Result<Self> {
        let dw = autocorr.spacing;
        let mut kernel = Array2::<Complex64>::zeros((lattice_len, lattice_len));
        for m in 0..lattice_len {
            for mp in 0..lattice_len {
                let lag = m as isize - mp as isize;
                kernel[[m, mp]] = autocorr.at_lag(lag) * (SPM_KERNEL_SCALE * dw);
            }
        }
        let (eigenvalues, eigenvectors) = linalg::eigh(&kernel)?;
        Ok(Self {
            eigenvalues,
            eigenvectors,
        })
    }

    /// Evolve a pump over a distance dz with coupling γ (both signs allowed).
    pub fn evolve(&self, pump: &PumpSpectrum, gamma_spm: f64, dz: f64) -> PumpSpectrum {
        let n = pump.amplitudes.len();
        assert_eq!(n, self.eigenvalues.len(), "operator/pump lattice mismatch");
        // coefficients in the eigenbasis
        let mut coeff = Array1::<Complex64>::zeros(n);
        for k in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for m in 0..n {
                acc += self.eigenvectors[[m, k]].conj() * pump.amplitudes[m];
            }
            coeff[k] = acc * Complex64::from_polar(1.0, gamma_spm * self.eigenvalues[k] * dz);
        }
        let mut out = pump.clone();
        for m in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += self.eigenvectors[[m, k]] * coeff[k];
            }
            out.amplitudes[m] = acc;
        }
        out.z_position = pump.z_position + dz;
        out
    }
}

/// One SPM step of length dz using the given (input-face) autocorrelation.
pub fn propagate_spm(
    pump: &PumpSpectrum,
    autocorr: &PumpAutocorrelation,
    gamma_spm: f64,
    dz: f64,
) -> Result<PumpSpectrum> {
    if dz < 0.0 {
        return Err(Error::Domain("propagation step must be non-negative".into()));
    }
    if gamma_spm == 0.0 || dz == 0.0 {
        let mut out = pump.clone();
        out.z_position += dz;
        return Ok(out);
    }
    let op = SpmOperator::new(autocorr, pump.amplitudes().len())?;
    Ok(op.evolve(pump, gamma_spm, dz))
}
