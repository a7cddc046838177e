//! Physical constants (SI), CODATA values.

/// Elementary charge e (C). Exact since the 2019 SI redefinition.
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;

/// Planck constant h (J s). Exact.
pub const PLANCK: f64 = 6.62607015e-34;

/// Reduced Planck constant hbar = h / 2pi (J s).
pub const HBAR: f64 = PLANCK / (2.0 * core::f64::consts::PI);

/// Magnetic flux quantum Phi_0 = h / 2e (Wb).
pub const FLUX_QUANTUM: f64 = PLANCK / (2.0 * ELEMENTARY_CHARGE);

/// Vacuum permittivity eps_0 (F/m), CODATA 2022.
pub const VACUUM_PERMITTIVITY: f64 = 8.8541878188e-12;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants_match_reference() {
        // Frozen reference values computed independently.
        crate::testutil::assert_rel(HBAR, 1.0545718176461565e-34, 1e-15);
        crate::testutil::assert_rel(FLUX_QUANTUM, 2.0678338484619295e-15, 1e-15);
    }
}
