//! Self-verification: closed forms against the quadrature oracle and the
//! special functions against their defining series, plus the reference
//! black-hole values.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::decoherence::{
    planck_localization_coefficient, small_separation_prefactor, thermal_bh_constant,
    thermal_bh_rate, thermal_bh_rate_via_sphere, thermal_sphere_rate, vacuum_overlap, vacuum_rate,
    LocalizationMode, RateVariant, SuperpositionGeometry, ThermalBathParams,
};
use crate::error::Result;
use crate::oracle::{overlap_numeric, rate_numeric, trigamma_series_oracle};
use crate::physcore::{BlackHole, PhysicalConstants};
use crate::quadrature::QuadratureSpec;
use crate::specfun::{trigamma_complex, zeta_int, ComplexValue};
use crate::spectra::EmissionSpectrum;

pub const SUN_MASS: f64 = 1.99e30;
pub const EARTH_MASS: f64 = 5.97e24;
pub const MOON_MASS: f64 = 7.35e22;
/// Branch separation of the reference superpositions, m.
pub const REFERENCE_SEPARATION: f64 = 0.01;

pub const SUN_TAU: f64 = 7.52e9;
pub const EARTH_TAU: f64 = 2.07e-7;
/// Quoted moon decoherence time; matches neither closed-form variant.
pub const MOON_TAU_QUOTED: f64 = 1.09e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        let status = if pass { Status::Pass } else { Status::Fail };
        Self {
            name: name.to_string(),
            status,
            detail,
        }
    }

    fn from_result(name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((pass, detail)) => Self::new(name, pass, detail),
            Err(e) => Self::new(name, false, format!("error: {e}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}: {}\n", c.status, c.name, c.detail));
        }
        let fails = self.failures();
        if fails.is_empty() {
            out.push_str(&format!("all {} checks passed\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "{} check(s) failed: {}\n",
                fails.len(),
                fails.join(", ")
            ));
        }
        out
    }
}

/// Inputs that the suite treats as trusted. Perturbing them must make the
/// suite fail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub constants: PhysicalConstants,
    /// ζ(3) used by the closed-form total emission rate.
    pub zeta3: f64,
    pub quadrature: QuadratureSpec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            constants: PhysicalConstants::default(),
            zeta3: zeta_int(3).expect("tabulated"),
            quadrature: QuadratureSpec::default(),
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Δx/r_s grid shared by the oracle and variant checks: 40 log-spaced points
/// on [1e-3, 1e4].
pub fn standard_ratio_grid() -> Vec<f64> {
    (0..40)
        .map(|i| 1e-3 * 10f64.powf(7.0 * i as f64 / 39.0))
        .collect()
}

/// Complex arguments with Re z ∈ [0.5, 20] and |Im z| ∈ [0, 50].
pub fn standard_complex_grid() -> Vec<ComplexValue> {
    let re = [0.5, 0.75, 1.0, 1.5, 2.0, 3.7, 5.0, 9.9, 10.0, 14.2, 20.0];
    let im = [0.0, 0.01, 0.3, 1.0, 2.5, 7.29, 10.0, 19.0, 33.3, 50.0];
    re.iter()
        .flat_map(|&r| {
            im.iter()
                .flat_map(move |&i| [ComplexValue::new(r, i), ComplexValue::new(r, -i)])
        })
        .collect()
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let checks = vec![
        check_trigamma_at_one(),
        check_trigamma_recurrence(),
        check_trigamma_conjugate(),
        check_trigamma_series(),
        check_hawking_temperatures(config),
        check_thermal_constants(config),
        check_small_separation(config),
        check_saturation(config),
        check_localization(),
        check_oracle_grid(config),
        check_variant_factor(config),
        check_hbar_invariance(config),
        check_reference_time("reference_sun", SUN_MASS, SUN_TAU, config),
        check_reference_time("reference_earth", EARTH_MASS, EARTH_TAU, config),
        check_moon(config),
    ];
    VerifyReport { checks }
}

fn check_trigamma_at_one() -> Check {
    Check::from_result(
        "trigamma_at_one",
        trigamma_complex(ComplexValue::new(1.0, 0.0)).map(|v| {
            let e = rel(v.re, PI * PI / 6.0);
            (
                e <= 1e-12 && v.im == 0.0,
                format!("psi1(1) = {:.15}, rel err {e:.1e}", v.re),
            )
        }),
    )
}

fn check_trigamma_recurrence() -> Check {
    let r = (|| {
        let mut worst = 0.0f64;
        for z in standard_complex_grid() {
            let diff = trigamma_complex(z)? - trigamma_complex(z + 1.0)?;
            let expected = (z * z).inv();
            worst = worst.max((diff - expected).norm() / expected.norm());
        }
        Ok((
            worst <= 1e-10,
            format!("max rel err {worst:.2e} (tol 1e-10)"),
        ))
    })();
    Check::from_result("trigamma_recurrence", r)
}

fn check_trigamma_conjugate() -> Check {
    let r = (|| {
        let mut worst = 0.0f64;
        for z in standard_complex_grid() {
            let a = trigamma_complex(z.conj())?;
            let b = trigamma_complex(z)?.conj();
            worst = worst.max((a - b).norm() / b.norm());
        }
        Ok((worst <= 1e-14, format!("max rel err {worst:.2e}")))
    })();
    Check::from_result("trigamma_conjugate_symmetry", r)
}

fn check_trigamma_series() -> Check {
    let r = (|| {
        let mut worst = 0.0f64;
        for z in standard_complex_grid() {
            let (series, _) = trigamma_series_oracle(z, 20_000)?;
            let v = trigamma_complex(z)?;
            worst = worst.max((v - series).norm() / series.norm());
        }
        Ok((
            worst <= 1e-9,
            format!("max rel err vs direct series {worst:.2e} (tol 1e-9)"),
        ))
    })();
    Check::from_result("trigamma_vs_series", r)
}

fn check_hawking_temperatures(config: &VerifyConfig) -> Check {
    let r = (|| {
        let mut ok = true;
        let mut parts = Vec::new();
        for (m, t) in [(SUN_MASS, 6.17e-8), (EARTH_MASS, 0.0205), (MOON_MASS, 1.67)] {
            let th = config.constants.hawking_temperature(m)?;
            ok &= rel(th, t) <= 5e-3;
            parts.push(format!("{th:.4e} K vs {t:e} K"));
        }
        Ok((ok, parts.join("; ")))
    })();
    Check::from_result("hawking_temperatures", r)
}

fn check_thermal_constants(config: &VerifyConfig) -> Check {
    let d = thermal_bh_constant();
    let g = SuperpositionGeometry::from_ratio(1.0, 1.0).expect("valid");
    let tau_units = config.constants.c / thermal_bh_rate(&g, &config.constants).rate;
    let ok = (d - 0.0576).abs() <= 1e-3 && rel(tau_units, 17.37) <= 1e-3;
    Check::new(
        "thermal_constants",
        ok,
        format!("d = {d:.6}, tau(dx = r_s) = {tau_units:.4} r_s/c"),
    )
}

fn check_small_separation(config: &VerifyConfig) -> Check {
    let r = (|| {
        let p = small_separation_prefactor();
        let g = SuperpositionGeometry::from_ratio(0.01, 1.0)?;
        let full = vacuum_rate(&g, RateVariant::Canonical, &config.constants)?.rate;
        let approx = p * 1e-4 * config.constants.c;
        let e = rel(approx, full);
        Ok((
            rel(p, 1.138e-4) <= 1e-3 && e < 1e-4,
            format!("prefactor {p:.6e}; rel dev from full rate at dx/r_s = 0.01: {e:.1e}"),
        ))
    })();
    Check::from_result("small_separation_limit", r)
}

/// Closed-form Λ_total (with the configured ζ(3)) against quadrature of the
/// spectrum, and the large-separation plateau.
fn check_saturation(config: &VerifyConfig) -> Check {
    let r = (|| {
        let c = config.constants.c;
        let r_s = 1.0;
        let closed = 27.0 * config.zeta3 * c / (32.0 * PI.powi(4) * r_s);
        let spectrum = EmissionSpectrum::new(r_s, c)?;
        let numeric = spectrum
            .total_emission_rate_numeric(&config.quadrature)?
            .value;
        let e_total = rel(closed, numeric);
        let g = SuperpositionGeometry::from_ratio(1e4, r_s)?;
        let far = vacuum_rate(&g, RateVariant::Canonical, &config.constants)?.rate;
        let e_far = rel(far, closed);
        Ok((
            e_total <= 1e-8 && e_far <= 1e-2,
            format!(
                "closed-form vs quadrature total rate rel err {e_total:.1e} (tol 1e-8); rate at dx/r_s = 1e4 within {e_far:.1e} of plateau"
            ),
        ))
    })();
    Check::from_result("saturation", r)
}

fn check_localization() -> Check {
    let thermal = planck_localization_coefficient(LocalizationMode::Thermal);
    let vacuum = planck_localization_coefficient(LocalizationMode::Vacuum);
    let ok = (thermal - 139.0).abs() <= 1.0 && rel(vacuum, 22_400.0 * PI) <= 5e-3;
    Check::new(
        "planck_localization",
        ok,
        format!(
            "thermal {thermal:.3}, vacuum {vacuum:.1} = {:.5}·pi, vacuum/lifetime {:.6}",
            vacuum / PI,
            vacuum / (5120.0 * PI)
        ),
    )
}

/// Worst relative deviations (overlap, rate) between quadrature and closed
/// forms over the standard grid for one mass.
pub fn oracle_deviation(mass: f64, config: &VerifyConfig) -> Result<(f64, f64)> {
    let bh = BlackHole::new(mass, config.constants)?;
    let spectrum = EmissionSpectrum::for_black_hole(&bh);
    let devs = standard_ratio_grid()
        .into_par_iter()
        .map(|y| {
            let g = SuperpositionGeometry::from_ratio(y, bh.schwarzschild_radius())?;
            let ov_num = overlap_numeric(&g, &spectrum, &config.quadrature)?.value;
            let ov = vacuum_overlap(&g)?;
            let rate_num = rate_numeric(&g, &spectrum, &config.quadrature)?.value;
            let rate = vacuum_rate(&g, RateVariant::Canonical, &config.constants)?.rate;
            Ok(((ov_num - ov).abs() / ov.abs().max(1.0), rel(rate_num, rate)))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    Ok(devs
        .iter()
        .fold((0.0f64, 0.0f64), |acc, d| (acc.0.max(d.0), acc.1.max(d.1))))
}

fn check_oracle_grid(config: &VerifyConfig) -> Check {
    let r = (|| {
        let mut ok = true;
        let mut parts = Vec::new();
        for m in [1e22, 5.97e24, 1e31] {
            let (ov, rate) = oracle_deviation(m, config)?;
            ok &= ov <= 1e-8 && rate <= 1e-8;
            parts.push(format!("M={m:.2e}: overlap {ov:.1e}, rate {rate:.1e}"));
        }
        Ok((ok, parts.join("; ")))
    })();
    Check::from_result("oracle_vs_closed_form", r)
}

fn check_variant_factor(config: &VerifyConfig) -> Check {
    let r = (|| {
        let mut worst = 0.0f64;
        for y in standard_ratio_grid() {
            let g = SuperpositionGeometry::from_ratio(y, 1.0)?;
            let c = vacuum_rate(&g, RateVariant::Canonical, &config.constants)?.rate;
            let p = vacuum_rate(&g, RateVariant::Printed, &config.constants)?.rate;
            worst = worst.max(rel(p, 4.0 * c));
        }
        Ok((
            worst <= 1e-12,
            format!("printed/canonical = 4 to {worst:.1e}"),
        ))
    })();
    Check::from_result("variant_factor_four", r)
}

fn check_hbar_invariance(config: &VerifyConfig) -> Check {
    let r = (|| {
        let base = config.constants;
        let mass = 1e20;
        let bh = BlackHole::new(mass, base)?;
        let dx = 0.3 * bh.schwarzschild_radius();
        let g = SuperpositionGeometry::for_black_hole(&bh, dx)?;
        let vac = vacuum_rate(&g, RateVariant::Canonical, &base)?.rate;
        let th = thermal_bh_rate_via_sphere(&bh, dx)?;
        let bath = ThermalBathParams::new(1e-6, 300.0)?;
        let sphere = thermal_sphere_rate(&bath, 1e-8, &base)?;
        let mut worst = 0.0f64;
        let mut sphere_ok = true;
        for f in [0.5, 2.0, 10.0] {
            let k = base.with_hbar(base.hbar * f)?;
            let bh_f = BlackHole::new(mass, k)?;
            let g_f = SuperpositionGeometry::for_black_hole(&bh_f, dx)?;
            worst = worst.max(rel(
                vacuum_rate(&g_f, RateVariant::Canonical, &k)?.rate,
                vac,
            ));
            worst = worst.max(rel(thermal_bh_rate_via_sphere(&bh_f, dx)?, th));
            let s = thermal_sphere_rate(&bath, 1e-8, &k)?;
            sphere_ok &= rel(s, sphere * f.powi(-9)) <= 1e-12;
        }
        Ok((
            worst <= 1e-12 && sphere_ok,
            format!("black-hole rates vary by {worst:.1e}; fixed-temperature sphere scales as hbar^-9: {sphere_ok}"),
        ))
    })();
    Check::from_result("hbar_invariance", r)
}

fn reference_times(mass: f64, config: &VerifyConfig) -> Result<(f64, f64, f64)> {
    let bh = BlackHole::new(mass, config.constants)?;
    let g = SuperpositionGeometry::for_black_hole(&bh, REFERENCE_SEPARATION)?;
    let canonical = vacuum_rate(&g, RateVariant::Canonical, &config.constants)?.decoherence_time();
    let printed = vacuum_rate(&g, RateVariant::Printed, &config.constants)?.decoherence_time();
    let spectrum = EmissionSpectrum::for_black_hole(&bh);
    let oracle = 1.0 / rate_numeric(&g, &spectrum, &config.quadrature)?.value;
    Ok((canonical, printed, oracle))
}

fn check_reference_time(name: &str, mass: f64, quoted: f64, config: &VerifyConfig) -> Check {
    let r = reference_times(mass, config).map(|(tau, _, oracle)| {
        let e = rel(tau, quoted);
        (
            e <= 0.02 && rel(oracle, tau) <= 1e-8,
            format!(
                "tau_D = {tau:.4e} s vs quoted {quoted:e} s ({:.2}% off); oracle rel dev {:.1e}",
                100.0 * e,
                rel(oracle, tau)
            ),
        )
    });
    Check::from_result(name, r)
}

/// The quoted moon value is reproduced by neither variant: a warning, not a
/// failure, as long as both computed values agree with the oracle.
fn check_moon(config: &VerifyConfig) -> Check {
    match reference_times(MOON_MASS, config) {
        Ok((canonical, printed, oracle)) => {
            let stable = rel(canonical, oracle) <= 5e-3 && rel(printed, oracle / 4.0) <= 5e-3;
            let detail = format!(
                "quoted {MOON_TAU_QUOTED:e} s is not reproduced: canonical {canonical:.4e} s, printed_eq8 {printed:.4e} s; oracle {oracle:.4e} s (canonical), {:.4e} s (x4)",
                oracle / 4.0
            );
            let status = if stable { Status::Warn } else { Status::Fail };
            Check {
                name: "reference_moon".into(),
                status,
                detail,
            }
        }
        Err(e) => Check::new("reference_moon", false, format!("error: {e}")),
    }
}
