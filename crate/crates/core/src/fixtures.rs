//! Regression constants stored as TOML records.
//!
//! Each record carries a value, the relative tolerance it is checked at and
//! the parameters it was generated with. Floats are written in shortest
//! round-trip form, so reading a file back reproduces every value bit for bit.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::decoherence::{
    thermal_sphere_rate, vacuum_rate, RateVariant, SuperpositionGeometry, ThermalBathParams,
};
use crate::error::{Error, Result};
use crate::oracle::{overlap_numeric, rate_numeric};
use crate::physcore::{BlackHole, PhysicalConstants, CONSTANTS_VERSION};
use crate::quadrature::QuadratureSpec;
use crate::spectra::EmissionSpectrum;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub value: f64,
    pub rel_tol: f64,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FixtureSet {
    #[serde(default, rename = "fixture")]
    pub fixtures: Vec<Fixture>,
}

impl FixtureSet {
    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Names of records whose value differs from `fresh` beyond their tolerance,
    /// or which `fresh` lacks.
    pub fn mismatches(&self, fresh: &FixtureSet) -> Vec<String> {
        self.fixtures
            .iter()
            .filter(|f| match fresh.get(&f.name) {
                Some(g) => ((g.value - f.value) / f.value).abs() > f.rel_tol,
                None => true,
            })
            .map(|f| f.name.clone())
            .collect()
    }
}

fn record(name: &str, value: f64, rel_tol: f64, params: &[(&str, String)]) -> Fixture {
    Fixture {
        name: name.to_string(),
        value,
        rel_tol,
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
    }
}

/// Recompute every regression constant from scratch.
pub fn generate_regression_fixtures() -> Result<FixtureSet> {
    let k = PhysicalConstants::default();
    let quad = QuadratureSpec::default();
    let constants = ("constants", CONSTANTS_VERSION.to_string());
    let quad_params = format!(
        "rel_tol={:e} abs_tol={:e} max_subdivisions={}",
        quad.rel_tol, quad.abs_tol, quad.max_subdivisions
    );
    let mut out = Vec::new();

    let bath = ThermalBathParams::new(1e-6, 300.0)?;
    out.push(record(
        "thermal_sphere_rate",
        thermal_sphere_rate(&bath, 1e-8, &k)?,
        1e-12,
        &[
            constants.clone(),
            ("radius_eff_m", "1e-6".into()),
            ("delta_x_m", "1e-8".into()),
            ("temperature_k", "300".into()),
        ],
    ));

    let unit = EmissionSpectrum::new(1.0, k.c)?;
    let geom = SuperpositionGeometry::new(4.0 * PI, 1.0)?;
    let cut = unit.with_omega_min(unit.omega_of_u(2.0))?;
    out.push(record(
        "overlap_alpha1",
        overlap_numeric(&geom, &unit, &quad)?.value,
        1e-9,
        &[
            ("dx_over_rs", "4pi".into()),
            ("quadrature", quad_params.clone()),
        ],
    ));
    out.push(record(
        "overlap_alpha1_cutoff_u2",
        overlap_numeric(&geom, &cut, &quad)?.value,
        1e-9,
        &[
            ("dx_over_rs", "4pi".into()),
            ("u_min", "2".into()),
            ("quadrature", quad_params.clone()),
        ],
    ));
    out.push(record(
        "rate_alpha1_cutoff_u2_c_over_rs",
        rate_numeric(&geom, &cut, &quad)?.value / k.c,
        1e-9,
        &[
            ("dx_over_rs", "4pi".into()),
            ("u_min", "2".into()),
            ("quadrature", quad_params),
        ],
    ));

    for (label, mass) in [("sun", 1.99e30), ("earth", 5.97e24), ("moon", 7.35e22)] {
        let bh = BlackHole::new(mass, k)?;
        let g = SuperpositionGeometry::for_black_hole(&bh, 0.01)?;
        for variant in [RateVariant::Canonical, RateVariant::Printed] {
            let tau = vacuum_rate(&g, variant, &k)?.decoherence_time();
            out.push(record(
                &format!("tau_{label}_{}", variant.as_str()),
                tau,
                1e-12,
                &[
                    constants.clone(),
                    ("mass_kg", format!("{mass:e}")),
                    ("delta_x_m", "0.01".into()),
                ],
            ));
        }
    }
    Ok(FixtureSet { fixtures: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_lookup() {
        let text = r#"
[[fixture]]
name = "a"
value = 1.5e-7
rel_tol = 1e-12

[fixture.params]
mass_kg = "1e30"
"#;
        let set = FixtureSet::from_toml(text).unwrap();
        let a = set.get("a").unwrap();
        assert_eq!(a.value, 1.5e-7);
        assert_eq!(a.params["mass_kg"], "1e30");
        assert!(set.get("b").is_none());
        assert!(FixtureSet::from_toml("[[fixture]]\nname = 3").is_err());
    }

    #[test]
    fn mismatches_respect_tolerance() {
        let base = FixtureSet {
            fixtures: vec![record("x", 1.0, 1e-6, &[])],
        };
        let near = FixtureSet {
            fixtures: vec![record("x", 1.0 + 1e-7, 1e-6, &[])],
        };
        let far = FixtureSet {
            fixtures: vec![record("x", 1.1, 1e-6, &[])],
        };
        assert!(base.mismatches(&near).is_empty());
        assert_eq!(base.mismatches(&far), vec!["x".to_string()]);
        assert_eq!(
            base.mismatches(&FixtureSet::default()),
            vec!["x".to_string()]
        );
    }
}
