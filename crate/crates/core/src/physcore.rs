//! Physical constants and Schwarzschild black-hole kinematics.
//!
//! Everything is SI. A [`PhysicalConstants`] value is threaded through every
//! computation so unit-system experiments (for instance rescaling ħ) need no
//! global state.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Result};

pub const CONSTANTS_VERSION: &str = "CODATA 2018";

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// Gravitational constant, m³ kg⁻¹ s⁻².
    pub g: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

impl PhysicalConstants {
    pub const CODATA_2018: Self = Self {
        g: 6.674_30e-11,
        c: 2.997_924_58e8,
        hbar: 1.054_571_817e-34,
        k_b: 1.380_649e-23,
    };

    pub fn new(g: f64, c: f64, hbar: f64, k_b: f64) -> Result<Self> {
        for (name, v) in [("G", g), ("c", c), ("hbar", hbar), ("k_B", k_b)] {
            if !(v.is_finite() && v > 0.0) {
                return domain(format!(
                    "constant {name} must be positive and finite, got {v}"
                ));
            }
        }
        Ok(Self { g, c, hbar, k_b })
    }

    /// Same constants with ħ replaced.
    pub fn with_hbar(self, hbar: f64) -> Result<Self> {
        Self::new(self.g, self.c, hbar, self.k_b)
    }

    /// sqrt(ħG/c³)
    pub fn planck_length(&self) -> f64 {
        (self.hbar * self.g / self.c.powi(3)).sqrt()
    }

    /// 2GM/c²
    pub fn schwarzschild_radius(&self, mass: f64) -> Result<f64> {
        check_mass(mass)?;
        Ok(2.0 * self.g * mass / (self.c * self.c))
    }

    /// ħc³/(8πGMk_B)
    pub fn hawking_temperature(&self, mass: f64) -> Result<f64> {
        check_mass(mass)?;
        Ok(self.hbar * self.c.powi(3) / (8.0 * PI * self.g * mass * self.k_b))
    }

    /// Hawking temperature from the horizon radius, ħc/(4πk_B r_s).
    pub fn hawking_temperature_from_radius(&self, r_s: f64) -> Result<f64> {
        if !(r_s.is_finite() && r_s > 0.0) {
            return domain(format!("Schwarzschild radius must be positive, got {r_s}"));
        }
        Ok(self.hbar * self.c / (4.0 * PI * self.k_b * r_s))
    }

    /// G²M³/(ħc⁴), the time scale shared by the lifetime and the
    /// Planck-length localization times.
    pub fn evaporation_time_scale(&self, mass: f64) -> Result<f64> {
        check_mass(mass)?;
        Ok(self.g * self.g * mass.powi(3) / (self.hbar * self.c.powi(4)))
    }

    /// Lifetime for evaporation into a single massless mode,
    /// 5120π G²M³/(ħc⁴).
    pub fn evaporation_time(&self, mass: f64) -> Result<f64> {
        Ok(5120.0 * PI * self.evaporation_time_scale(mass)?)
    }

    /// Quasi-static mass history M0·(1 − t/t_BH)^(1/3).
    pub fn mass_at_time(&self, initial_mass: f64, t: f64) -> Result<f64> {
        let lifetime = self.evaporation_time(initial_mass)?;
        if !(t.is_finite() && t >= 0.0) {
            return domain(format!("time must be non-negative, got {t}"));
        }
        if t >= lifetime {
            return domain(format!(
                "t = {t:e} s is not before the evaporation time {lifetime:e} s; the black hole has evaporated"
            ));
        }
        Ok(initial_mass * (1.0 - t / lifetime).cbrt())
    }
}

fn check_mass(mass: f64) -> Result<()> {
    if mass.is_finite() && mass > 0.0 {
        Ok(())
    } else {
        domain(format!("mass must be positive and finite, got {mass}"))
    }
}

/// A Schwarzschild black hole together with the constants it was built with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlackHole {
    mass: f64,
    r_s: f64,
    t_hawking: f64,
    #[serde(skip)]
    constants: PhysicalConstants,
}

impl BlackHole {
    pub fn new(mass: f64, constants: PhysicalConstants) -> Result<Self> {
        let r_s = constants.schwarzschild_radius(mass)?;
        let t_hawking = constants.hawking_temperature(mass)?;
        Ok(Self {
            mass,
            r_s,
            t_hawking,
            constants,
        })
    }

    pub fn with_default_constants(mass: f64) -> Result<Self> {
        Self::new(mass, PhysicalConstants::default())
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn schwarzschild_radius(&self) -> f64 {
        self.r_s
    }

    pub fn hawking_temperature(&self) -> f64 {
        self.t_hawking
    }

    pub fn constants(&self) -> &PhysicalConstants {
        &self.constants
    }

    pub fn evaporation_time(&self) -> f64 {
        5120.0 * PI * self.constants.g.powi(2) * self.mass.powi(3)
            / (self.constants.hbar * self.constants.c.powi(4))
    }

    /// Light-crossing time r_s/c.
    pub fn light_crossing_time(&self) -> f64 {
        self.r_s / self.constants.c
    }
}
