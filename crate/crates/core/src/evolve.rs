//! Decay of the off-diagonal coherence between the two branches.
//!
//! With `∂ρ/∂t = −Γ(t)ρ`, the normalized coherence is `exp(−∫₀ᵗ Γ dt′)`. The
//! rate is the canonical vacuum rate, evaluated at the quasi-static mass when
//! evaporation is enabled. The exponent is accumulated with composite Simpson
//! on a fixed uniform grid.

use serde::Serialize;

use crate::decoherence::{vacuum_rate, RateVariant, SuperpositionGeometry};
use crate::error::{domain, Result};
use crate::physcore::{BlackHole, PhysicalConstants};

/// Evaporation counts as slow when the decoherence time is below this
/// fraction of the lifetime.
pub const QUASI_STATIC_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvolveRequest {
    /// Branch separation, m.
    pub delta_x: f64,
    /// Mass at t = 0, kg.
    pub initial_mass: f64,
    /// End of the time grid, s.
    pub t_max: f64,
    /// Number of grid intervals; the trace has `steps + 1` points.
    pub steps: usize,
    pub evaporate: bool,
    /// Number of independent massless species, each adding its own rate.
    pub species: u32,
}

impl EvolveRequest {
    pub fn new(delta_x: f64, initial_mass: f64, t_max: f64, steps: usize, evaporate: bool) -> Self {
        Self {
            delta_x,
            initial_mass,
            t_max,
            steps,
            evaporate,
            species: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoherenceTrace {
    pub times: Vec<f64>,
    /// |ρ(x, x′, t)/ρ(x, x′, 0)|
    pub coherence: Vec<f64>,
    /// −∫₀ᵗ Γ dt′, kept separately because the coherence itself underflows.
    pub log_coherence: Vec<f64>,
    pub mass: Vec<f64>,
    /// Decoherence time at the initial mass, s.
    pub decoherence_time: f64,
    pub quasi_static_valid: bool,
}

fn rate_at(mass: f64, req: &EvolveRequest, constants: &PhysicalConstants) -> Result<f64> {
    let bh = BlackHole::new(mass, *constants)?;
    let geom = SuperpositionGeometry::for_black_hole(&bh, req.delta_x)?;
    Ok(f64::from(req.species) * vacuum_rate(&geom, RateVariant::Canonical, constants)?.rate)
}

pub fn evolve_coherence(
    req: &EvolveRequest,
    constants: &PhysicalConstants,
) -> Result<CoherenceTrace> {
    if req.steps < 2 {
        return domain(format!("need at least 2 steps, got {}", req.steps));
    }
    if !(req.t_max.is_finite() && req.t_max > 0.0) {
        return domain(format!("t_max must be positive, got {}", req.t_max));
    }
    if req.species == 0 {
        return domain("species multiplicity must be at least 1");
    }
    if !(req.delta_x.is_finite() && req.delta_x >= 0.0) {
        return domain(format!(
            "separation must be non-negative, got {}",
            req.delta_x
        ));
    }
    let lifetime = constants.evaporation_time(req.initial_mass)?;
    if req.evaporate && req.t_max >= lifetime {
        return domain(format!(
            "t_max = {:e} s reaches the evaporation time {lifetime:e} s",
            req.t_max
        ));
    }

    let n = req.steps;
    let h = req.t_max / n as f64;
    let times: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
    let mass = times
        .iter()
        .map(|&t| {
            if req.evaporate {
                constants.mass_at_time(req.initial_mass, t)
            } else {
                Ok(req.initial_mass)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let rates = mass
        .iter()
        .map(|&m| rate_at(m, req, constants))
        .collect::<Result<Vec<_>>>()?;

    let exponent = cumulative_simpson(&rates, h);
    let log_coherence: Vec<f64> = exponent.iter().map(|e| -e).collect();
    let coherence = log_coherence.iter().map(|l| l.exp()).collect();

    let initial_rate = rates[0];
    let decoherence_time = if initial_rate == 0.0 {
        f64::INFINITY
    } else {
        1.0 / initial_rate
    };
    Ok(CoherenceTrace {
        times,
        coherence,
        log_coherence,
        mass,
        decoherence_time,
        quasi_static_valid: decoherence_time < QUASI_STATIC_FRACTION * lifetime,
    })
}

/// Running integral of uniformly sampled `f` (at least three samples).
///
/// Even indices use Simpson's rule over pairs of intervals; odd indices add a
/// single interval integrated under the quadratic through three neighbours.
fn cumulative_simpson(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    debug_assert!(n >= 3);
    let mut out = vec![0.0; n];
    for i in 1..n {
        out[i] = if i % 2 == 0 {
            out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i])
        } else if i + 1 < n {
            out[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1])
        } else {
            out[i - 1] + h / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i])
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PhysicalConstants {
        PhysicalConstants::default()
    }

    #[test]
    fn simpson_is_exact_for_cubics() {
        let h = 0.1;
        let f: Vec<f64> = (0..=7).map(|i| (i as f64 * h).powi(2)).collect();
        let cum = cumulative_simpson(&f, h);
        for (i, c) in cum.iter().enumerate() {
            let t = i as f64 * h;
            assert!((c - t.powi(3) / 3.0).abs() < 1e-15, "i={i}");
        }
    }

    #[test]
    fn constant_mass_decays_exponentially() {
        let m = 5.97e24;
        let probe = evolve_coherence(&EvolveRequest::new(0.01, m, 1e-9, 2, false), &k()).unwrap();
        let tau = probe.decoherence_time;
        let trace = evolve_coherence(&EvolveRequest::new(0.01, m, tau, 100, false), &k()).unwrap();
        assert_eq!(trace.times.len(), 101);
        assert_eq!(trace.coherence[0], 1.0);
        assert!((trace.coherence[100] - (-1f64).exp()).abs() < 1e-6);
        for (t, c) in trace.times.iter().zip(&trace.coherence) {
            let exact = (-t / tau).exp();
            assert!((c - exact).abs() <= 4.0 * f64::EPSILON, "t={t}");
        }
        assert!(trace.mass.iter().all(|&x| x == m));
    }

    #[test]
    fn invalid_requests() {
        assert!(evolve_coherence(&EvolveRequest::new(0.01, 1e12, 1.0, 1, false), &k()).is_err());
        assert!(evolve_coherence(&EvolveRequest::new(0.01, 1e12, 0.0, 10, false), &k()).is_err());
        assert!(evolve_coherence(&EvolveRequest::new(-1.0, 1e12, 1.0, 10, false), &k()).is_err());
        let life = k().evaporation_time(1e6).unwrap();
        assert!(evolve_coherence(&EvolveRequest::new(1e-20, 1e6, life, 10, true), &k()).is_err());
        assert!(evolve_coherence(&EvolveRequest::new(1e-20, 1e6, life, 10, false), &k()).is_ok());
    }

    #[test]
    fn evaporation_speeds_up_decoherence() {
        let m0 = 1e6;
        let life = k().evaporation_time(m0).unwrap();
        let dx = 1e-22;
        let still =
            evolve_coherence(&EvolveRequest::new(dx, m0, 0.9 * life, 200, false), &k()).unwrap();
        let evap =
            evolve_coherence(&EvolveRequest::new(dx, m0, 0.9 * life, 200, true), &k()).unwrap();
        for i in 0..=200 {
            assert!(evap.log_coherence[i] <= still.log_coherence[i]);
            assert!(i == 0 || evap.mass[i] < evap.mass[i - 1]);
        }
        assert!(evap.log_coherence[200] < still.log_coherence[200]);
    }

    #[test]
    fn quasi_static_flag() {
        let sun =
            evolve_coherence(&EvolveRequest::new(0.01, 1.99e30, 1.0, 2, false), &k()).unwrap();
        assert!(sun.quasi_static_valid);
        let none =
            evolve_coherence(&EvolveRequest::new(0.0, 1.99e30, 1.0, 2, false), &k()).unwrap();
        assert!(none.decoherence_time.is_infinite());
        assert!(!none.quasi_static_valid);
        assert!(none.coherence.iter().all(|&c| c == 1.0));
    }

    #[test]
    fn species_scale_the_exponent() {
        let base = EvolveRequest::new(0.01, 5.97e24, 1e-6, 10, false);
        let two = EvolveRequest { species: 2, ..base };
        let a = evolve_coherence(&base, &k()).unwrap();
        let b = evolve_coherence(&two, &k()).unwrap();
        for (x, y) in a.log_coherence.iter().zip(&b.log_coherence) {
            assert!((2.0 * x - y).abs() <= 1e-12 * y.abs());
        }
    }
}
