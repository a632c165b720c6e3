//! Shared discretized frequency axes.
//!
//! Signal and idler envelopes live on one common detuning lattice
//! Ω_j = (j − n/2)·Δω so that the pump convolution kernel can be indexed
//! without interpolation. Discrete field amplitudes are per-bin amplitudes
//! a_j = a(ω_j)·√Δω, which turns the continuum commutator into an exact
//! Kronecker delta; transfer-function blocks are correspondingly stored as
//! M_jk = U(ω_j, ω_k)·Δω.

use crate::error::{Error, Result};

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Uniform angular-frequency detuning grid shared by the signal and idler
/// envelopes, plus the carrier frequencies tying it to absolute frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    n_points: usize,
    center_signal: f64,
    center_idler: f64,
    center_pump: f64,
    spacing: f64,
    detunings: Vec<f64>,
}

impl FrequencyGrid {
    /// Build a grid from the two carrier wavelengths, a total detuning span
    /// and an (even) number of points. The pump carrier is fixed to
    /// ω̄_p = ω̄_s + ω̄_i.
    pub fn new(
        center_signal_wavelength: f64,
        center_idler_wavelength: f64,
        span: f64,
        n_points: usize,
    ) -> Result<Self> {
        if !(center_signal_wavelength > 0.0) || !(center_idler_wavelength > 0.0) {
            return Err(Error::Domain("wavelengths must be positive".into()));
        }
        if !(span > 0.0) {
            return Err(Error::Domain("span must be positive".into()));
        }
        if n_points % 2 != 0 {
            return Err(Error::Domain(format!(
                "n_points must be even, got {n_points}"
            )));
        }
        if n_points < 16 {
            return Err(Error::Domain(format!(
                "n_points must be at least 16, got {n_points}"
            )));
        }
        let center_signal = wavelength_to_angular_frequency(center_signal_wavelength)?;
        let center_idler = wavelength_to_angular_frequency(center_idler_wavelength)?;
        let spacing = span / (n_points - 1) as f64;
        let half = (n_points / 2) as isize;
        let detunings = (0..n_points)
            .map(|j| (j as isize - half) as f64 * spacing)
            .collect();
        Ok(Self {
            n_points,
            center_signal,
            center_idler,
            center_pump: center_signal + center_idler,
            spacing,
            detunings,
        })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Signal carrier ω̄_s (rad/s).
    pub fn center_signal(&self) -> f64 {
        self.center_signal
    }

    /// Idler carrier ω̄_i (rad/s).
    pub fn center_idler(&self) -> f64 {
        self.center_idler
    }

    /// Pump carrier ω̄_p = ω̄_s + ω̄_i (rad/s).
    pub fn center_pump(&self) -> f64 {
        self.center_pump
    }

    /// Bin spacing Δω (rad/s).
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Detuning lattice Ω_j = (j − n/2)·Δω, identical for signal and idler.
    pub fn detunings(&self) -> &[f64] {
        &self.detunings
    }

    pub fn detuning(&self, j: usize) -> f64 {
        self.detunings[j]
    }

    /// Absolute signal frequency at bin j.
    pub fn signal_frequency(&self, j: usize) -> f64 {
        self.center_signal + self.detunings[j]
    }

    /// Absolute idler frequency at bin j.
    pub fn idler_frequency(&self, j: usize) -> f64 {
        self.center_idler + self.detunings[j]
    }

    /// Number of bins on the pump lattice. A lookup at ω_j + ω_k lands on
    /// ω̄_p + (j + k − n)·Δω, so the pump covers twice the field detuning
    /// span at the same spacing: detunings (m − n)·Δω for m in 0..=2n.
    pub fn pump_lattice_len(&self) -> usize {
        2 * self.n_points + 1
    }

    /// Detuning of pump-lattice bin m from ω̄_p.
    pub fn pump_detuning(&self, m: usize) -> f64 {
        (m as isize - self.n_points as isize) as f64 * self.spacing
    }

    /// Absolute pump frequency at pump-lattice bin m.
    pub fn pump_frequency(&self, m: usize) -> f64 {
        self.center_pump + self.pump_detuning(m)
    }

    /// Pump-lattice bin holding the sum frequency ω_j + ω_k of field bins
    /// (j, k): Ω_j + Ω_k = (j + k − n)·Δω ↔ pump bin m = j + k.
    pub fn pump_index_for_sum(&self, j: usize, k: usize) -> usize {
        j + k
    }
}

/// ω = 2πc/λ.
pub fn wavelength_to_angular_frequency(wavelength: f64) -> Result<f64> {
    if !(wavelength > 0.0) {
        return Err(Error::Domain(format!(
            "wavelength must be positive, got {wavelength}"
        )));
    }
    Ok(2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / wavelength)
}

/// λ = 2πc/ω.
pub fn angular_frequency_to_wavelength(omega: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!(
            "angular frequency must be positive, got {omega}"
        )));
    }
    Ok(2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wavelength_conversion_values() {
        // 2πc/λ evaluated directly
        let w_s = wavelength_to_angular_frequency(1563e-9).unwrap();
        assert!((w_s - 1.2052e15).abs() / 1.2052e15 < 1e-4, "got {w_s:e}");
        let w_i = wavelength_to_angular_frequency(1569e-9).unwrap();
        assert!((w_i - 1.2006e15).abs() / 1.2006e15 < 1e-4, "got {w_i:e}");
    }

    #[test]
    fn wavelength_round_trip() {
        let x = 783e-9;
        let w = wavelength_to_angular_frequency(x).unwrap();
        let back = angular_frequency_to_wavelength(w).unwrap();
        assert!((back - x).abs() / x < 1e-15);
    }

    #[test]
    fn doubling_wavelength_halves_frequency() {
        let w1 = wavelength_to_angular_frequency(700e-9).unwrap();
        let w2 = wavelength_to_angular_frequency(1400e-9).unwrap();
        assert!((w1 / w2 - 2.0).abs() < 1e-14);
    }

    #[test]
    fn conversion_rejects_nonpositive() {
        assert!(wavelength_to_angular_frequency(0.0).is_err());
        assert!(wavelength_to_angular_frequency(-1e-9).is_err());
        assert!(angular_frequency_to_wavelength(0.0).is_err());
    }

    #[test]
    fn pump_carrier_is_sum_of_field_carriers() {
        let grid = FrequencyGrid::new(1563e-9, 1569e-9, 5e13, 64).unwrap();
        assert_eq!(
            grid.center_pump(),
            grid.center_signal() + grid.center_idler()
        );
        // the source geometry puts the pump near 783 nm
        let lam_p = angular_frequency_to_wavelength(grid.center_pump()).unwrap();
        assert!((lam_p - 783e-9).abs() < 0.1e-9, "pump at {lam_p:e}");
    }

    #[test]
    fn degenerate_source_doubles_frequency() {
        let grid = FrequencyGrid::new(1560e-9, 1560e-9, 1e13, 32).unwrap();
        assert!((grid.center_pump() - 2.0 * grid.center_signal()).abs() < 1.0);
    }

    #[test]
    fn detunings_uniform_and_increasing() {
        let grid = FrequencyGrid::new(1563e-9, 1569e-9, 4e13, 64).unwrap();
        let d = grid.detunings();
        assert_eq!(d.len(), 64);
        assert!((grid.spacing() - 4e13 / 63.0).abs() < 1e-3);
        for j in 1..d.len() {
            let step = d[j] - d[j - 1];
            assert!((step - grid.spacing()).abs() < 1e-9 * grid.spacing());
        }
        // centered convention: bin n/2 sits at zero detuning
        assert_eq!(d[32], 0.0);
    }

    #[test]
    fn grid_rejects_bad_inputs() {
        assert!(FrequencyGrid::new(-1.0, 1569e-9, 1e13, 32).is_err());
        assert!(FrequencyGrid::new(1563e-9, 1569e-9, 0.0, 32).is_err());
        assert!(FrequencyGrid::new(1563e-9, 1569e-9, 1e13, 33).is_err());
        assert!(FrequencyGrid::new(1563e-9, 1569e-9, 1e13, 8).is_err());
    }

    #[test]
    fn pump_lattice_covers_all_sum_frequencies() {
        let grid = FrequencyGrid::new(1563e-9, 1569e-9, 1e13, 16).unwrap();
        let n = grid.n_points();
        for j in 0..n {
            for k in 0..n {
                let m = grid.pump_index_for_sum(j, k);
                assert!(m < grid.pump_lattice_len());
                let want = grid.detuning(j) + grid.detuning(k);
                assert!((grid.pump_detuning(m) - want).abs() < 1e-6 * grid.spacing());
            }
        }
    }
}
