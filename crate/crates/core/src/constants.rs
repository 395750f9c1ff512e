//! Physical constants used throughout the toolkit.
//!
//! All values are SI. The flux quantum is kept at the rounded value
//! `2.07e-15 Wb` conventionally quoted for Josephson-junction work; it
//! agrees with h/(2e) built from `HBAR` and `ELECTRON_CHARGE` to about
//! one part in 10^3.

/// Magnetic flux quantum Φ₀ = h/(2e) (Wb), rounded convention.
pub const FLUX_QUANTUM: f64 = 2.07e-15;

/// Reduced Planck constant ħ (J s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Elementary charge e (C).
pub const ELECTRON_CHARGE: f64 = 1.602_176_634e-19;

/// Boltzmann constant k_B (J/K).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Vacuum permittivity ε₀ (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_8128e-12;

/// Reduced flux quantum Φ₀/(2π) (Wb). This is the conversion factor between
/// junction phase and flux, and between phase velocity and voltage.
pub const REDUCED_FLUX_QUANTUM: f64 = FLUX_QUANTUM / std::f64::consts::TAU;

/// The full set of constants as a value, for callers that want to embed the
/// convention in reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Flux quantum (Wb)
    pub flux_quantum: f64,
    /// Reduced Planck constant (J s)
    pub hbar: f64,
    /// Elementary charge (C)
    pub electron_charge: f64,
    /// Boltzmann constant (J/K)
    pub boltzmann: f64,
}

impl PhysicalConstants {
    pub const fn standard() -> Self {
        PhysicalConstants {
            flux_quantum: FLUX_QUANTUM,
            hbar: HBAR,
            electron_charge: ELECTRON_CHARGE,
            boltzmann: BOLTZMANN,
        }
    }

    /// h/(2e) computed from ħ and e, for consistency checks against the
    /// rounded `flux_quantum`.
    pub fn flux_quantum_from_planck(&self) -> f64 {
        std::f64::consts::TAU * self.hbar / (2.0 * self.electron_charge)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flux_quantum_consistent_with_h_over_2e() {
        let c = PhysicalConstants::standard();
        let exact = c.flux_quantum_from_planck();
        // The rounded 2.07e-15 convention differs from h/(2e) by ~0.105%.
        let rel = (exact - c.flux_quantum).abs() / c.flux_quantum;
        assert!(rel < 1.1e-3, "flux quantum off by {rel:e}");
    }

    #[test]
    fn reduced_flux_quantum_matches() {
        assert_eq!(REDUCED_FLUX_QUANTUM, FLUX_QUANTUM / std::f64::consts::TAU);
    }
}
