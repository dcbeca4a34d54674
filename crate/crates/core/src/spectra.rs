//! Hawking emission spectrum of a Schwarzschild hole in the geometric-optics
//! approximation.
//!
//! The dimensionless frequency `u = 4πωr_s/c` is used throughout. In it the
//! rate per unit `u` is `(27/64π⁴)·u²/(eᵘ − 1)` in units of `c/r_s` for two
//! polarizations.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::physcore::BlackHole;
use crate::quadrature::{integrate, Estimate, QuadratureSpec};
use crate::specfun::zeta_int;

/// Beyond this `u` the Bose factor is below 1e-18; the neglected tail
/// ∫ u²e⁻ᵘ du from here is under 1e-15 of the full integral 2ζ(3).
pub const U_CUTOFF: f64 = 41.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmissionSpectrum {
    r_s: f64,
    c: f64,
    polarizations: u32,
    species_multiplicity: u32,
    omega_min: f64,
}

impl EmissionSpectrum {
    /// Default spectrum: one species with two polarizations, no cutoff.
    pub fn new(r_s: f64, c: f64) -> Result<Self> {
        if !(r_s.is_finite() && r_s > 0.0) {
            return domain(format!("Schwarzschild radius must be positive, got {r_s}"));
        }
        if !(c.is_finite() && c > 0.0) {
            return domain(format!("speed of light must be positive, got {c}"));
        }
        Ok(Self {
            r_s,
            c,
            polarizations: 2,
            species_multiplicity: 1,
            omega_min: 0.0,
        })
    }

    pub fn for_black_hole(bh: &BlackHole) -> Self {
        Self::new(bh.schwarzschild_radius(), bh.constants().c)
            .expect("a black hole always has a valid radius")
    }

    pub fn with_polarizations(mut self, polarizations: u32) -> Result<Self> {
        if polarizations == 0 {
            return domain("polarizations must be at least 1");
        }
        self.polarizations = polarizations;
        Ok(self)
    }

    pub fn with_species(mut self, multiplicity: u32) -> Result<Self> {
        if multiplicity == 0 {
            return domain("species multiplicity must be at least 1");
        }
        self.species_multiplicity = multiplicity;
        Ok(self)
    }

    /// Lower angular-frequency cutoff, e.g. mc²/ħ for a massive species.
    pub fn with_omega_min(mut self, omega_min: f64) -> Result<Self> {
        if !(omega_min.is_finite() && omega_min >= 0.0) {
            return domain(format!("omega_min must be non-negative, got {omega_min}"));
        }
        self.omega_min = omega_min;
        Ok(self)
    }

    pub fn r_s(&self) -> f64 {
        self.r_s
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn polarizations(&self) -> u32 {
        self.polarizations
    }
    pub fn species_multiplicity(&self) -> u32 {
        self.species_multiplicity
    }
    pub fn omega_min(&self) -> f64 {
        self.omega_min
    }

    /// 4πωr_s/c
    pub fn u_of_omega(&self, omega: f64) -> f64 {
        4.0 * PI * omega * self.r_s / self.c
    }

    pub fn omega_of_u(&self, u: f64) -> f64 {
        u * self.c / (4.0 * PI * self.r_s)
    }

    pub fn u_min(&self) -> f64 {
        self.u_of_omega(self.omega_min)
    }

    fn scale(&self) -> f64 {
        f64::from(self.polarizations) / 2.0 * f64::from(self.species_multiplicity)
    }

    /// Emission rate per unit angular frequency (s⁻¹ per rad/s).
    pub fn rate_density(&self, omega: f64) -> Result<f64> {
        if !(omega.is_finite() && omega >= 0.0) {
            return domain(format!(
                "angular frequency must be non-negative, got {omega}"
            ));
        }
        if omega == 0.0 || omega < self.omega_min {
            return Ok(0.0);
        }
        let x = self.r_s * omega / self.c;
        let u = 4.0 * PI * x;
        Ok(self.scale() * 27.0 * x * x / (PI * u.exp_m1()))
    }

    /// Λ_total = 27ζ(3)c/(32π⁴r_s) for the default spectrum. With a cutoff the
    /// spectrum is integrated numerically.
    pub fn total_emission_rate(&self) -> Result<f64> {
        if self.omega_min > 0.0 {
            return Ok(self
                .total_emission_rate_numeric(&QuadratureSpec::default())?
                .value);
        }
        Ok(self.scale() * 27.0 * zeta_int(3)? * self.c / (32.0 * PI.powi(4) * self.r_s))
    }

    /// Quadrature of `rate_density` over `[omega_min, ∞)`.
    pub fn total_emission_rate_numeric(&self, quad: &QuadratureSpec) -> Result<Estimate> {
        let moment = bose_moment(self.u_min(), quad)?;
        let k = self.scale() * self.rate_unit_per_u();
        Ok(Estimate {
            value: k * moment.value,
            error: k * moment.error,
            ..moment
        })
    }

    /// Conversion from ∫u²/(eᵘ−1)du to s⁻¹ for one species, two polarizations.
    fn rate_unit_per_u(&self) -> f64 {
        27.0 * self.c / (64.0 * PI.powi(4) * self.r_s)
    }

    /// Normalized distribution of emitted angular frequencies.
    pub fn frequency_pdf(&self, omega: f64) -> Result<f64> {
        Ok(self.rate_density(omega)? / self.total_emission_rate()?)
    }
}

/// u²/(eᵘ − 1), the Bose-weighted spectral shape.
pub fn bose_shape(u: f64) -> f64 {
    if u == 0.0 {
        0.0
    } else {
        u * u / u.exp_m1()
    }
}

/// ∫_{u_min}^{∞} u²/(eᵘ − 1) du, truncated at [`U_CUTOFF`]. Equals 2ζ(3) for
/// `u_min = 0`.
pub fn bose_moment(u_min: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    if u_min >= U_CUTOFF {
        return Ok(Estimate::default());
    }
    // split at the peak so both pieces are smooth and one-signed in slope
    let peak = 1.593_624_260_040_04_f64.max(u_min);
    let lo = integrate(bose_shape, u_min, peak, quad)?;
    let hi = integrate(bose_shape, peak, U_CUTOFF, quad)?;
    Ok(lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::physcore::PhysicalConstants;

    const C: f64 = 2.997_924_58e8;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(EmissionSpectrum::new(0.0, C).is_err());
        assert!(EmissionSpectrum::new(-1.0, C).is_err());
        let s = EmissionSpectrum::new(1.0, C).unwrap();
        assert!(s.with_polarizations(0).is_err());
        assert!(s.with_species(0).is_err());
        assert!(s.with_omega_min(-1.0).is_err());
        assert!(s.rate_density(-1.0).is_err());
        assert!(s.rate_density(f64::NAN).is_err());
    }

    #[test]
    fn rate_density_vanishes_at_zero() {
        let s = EmissionSpectrum::new(1.0, C).unwrap();
        assert_eq!(s.rate_density(0.0).unwrap(), 0.0);
        let tiny = s.rate_density(1e-6).unwrap();
        assert!(tiny > 0.0 && tiny < 1e-12);
    }

    #[test]
    fn rate_density_in_dimensionless_form() {
        // Λ(ω) at ω = c u/(4πr_s) equals 27/(16π³)·u²/(eᵘ−1) for every r_s
        for r_s in [1e-6, 1.0, 2955.6, 1e6] {
            let s = EmissionSpectrum::new(r_s, C).unwrap();
            for u in [0.01, 1.0, 1.5936, 7.0, 30.0] {
                let direct = 27.0 / (16.0 * PI.powi(3)) * u * u / (u.exp() - 1.0);
                let got = s.rate_density(s.omega_of_u(u)).unwrap();
                assert!(rel(got, direct) < 1e-12, "r_s={r_s} u={u}");
            }
        }
        let s = EmissionSpectrum::new(1.0, C).unwrap();
        let at_one = s.rate_density(s.omega_of_u(1.0)).unwrap();
        assert!(rel(at_one, 0.031_673) < 1e-4);
    }

    #[test]
    fn species_and_polarizations_scale_linearly() {
        let s = EmissionSpectrum::new(3.0, C).unwrap();
        let d = s.with_species(2).unwrap();
        let one = s.with_polarizations(1).unwrap();
        for omega in [1e6, 1e7, 1e8] {
            let base = s.rate_density(omega).unwrap();
            assert_eq!(d.rate_density(omega).unwrap(), 2.0 * base);
            assert_eq!(one.rate_density(omega).unwrap(), 0.5 * base);
            assert!(
                rel(
                    d.frequency_pdf(omega).unwrap(),
                    s.frequency_pdf(omega).unwrap()
                ) < 1e-15
            );
            assert!(
                rel(
                    one.frequency_pdf(omega).unwrap(),
                    s.frequency_pdf(omega).unwrap()
                ) < 1e-15
            );
        }
    }

    #[test]
    fn cutoff_zeroes_low_frequencies() {
        let s = EmissionSpectrum::new(1.0, C).unwrap();
        let cut = s.with_omega_min(s.omega_of_u(2.0)).unwrap();
        assert_eq!(cut.rate_density(s.omega_of_u(1.9)).unwrap(), 0.0);
        assert_eq!(
            cut.rate_density(s.omega_of_u(2.1)).unwrap(),
            s.rate_density(s.omega_of_u(2.1)).unwrap()
        );
        assert!(cut.total_emission_rate().unwrap() < s.total_emission_rate().unwrap());
    }

    #[test]
    fn total_rate_examples() {
        let s = EmissionSpectrum::new(1.0916e-4, C).unwrap();
        let total = s.total_emission_rate().unwrap();
        assert!(rel(total, 2.86e10) < 2e-3);
        let numeric = s
            .total_emission_rate_numeric(&QuadratureSpec::default())
            .unwrap();
        assert!(rel(numeric.value, total) < 1e-8);

        let unit = EmissionSpectrum::new(1.0, C)
            .unwrap()
            .total_emission_rate()
            .unwrap()
            / C;
        assert!(rel(unit, 1.0412e-2) < 1e-4);
        let doubled = EmissionSpectrum::new(2.0, C)
            .unwrap()
            .total_emission_rate()
            .unwrap()
            / C;
        assert!(rel(doubled / unit, 0.5) < 1e-15);
    }

    #[test]
    fn bose_moment_is_two_zeta_three() {
        let m = bose_moment(0.0, &QuadratureSpec::default()).unwrap();
        assert!(rel(m.value, 2.0 * zeta_int(3).unwrap()) < 1e-12);
        assert_eq!(
            bose_moment(50.0, &QuadratureSpec::default()).unwrap().value,
            0.0
        );
    }

    #[test]
    fn pdf_mode_by_grid_scan() {
        let s = EmissionSpectrum::new(1.0, C).unwrap();
        let mut best = (0.0, 0.0);
        for i in 1..40_000 {
            let u = i as f64 * 1e-4;
            let p = s.frequency_pdf(s.omega_of_u(u)).unwrap();
            if p > best.1 {
                best = (u, p);
            }
        }
        assert!((best.0 - 1.5936).abs() < 2e-4, "mode at {}", best.0);
    }

    #[test]
    fn pdf_normalization_with_and_without_cutoff() {
        let quad = QuadratureSpec::default();
        let bh = BlackHole::new(7.35e22, PhysicalConstants::default()).unwrap();
        let s = EmissionSpectrum::for_black_hole(&bh);
        for spec in [s, s.with_omega_min(s.omega_of_u(2.0)).unwrap()] {
            let (a, b) = (spec.omega_min(), spec.omega_of_u(U_CUTOFF));
            let area = integrate(|w| spec.frequency_pdf(w).unwrap(), a, b, &quad).unwrap();
            assert!(rel(area.value, 1.0) < 1e-8, "area {}", area.value);
        }
    }
}
