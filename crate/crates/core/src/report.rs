//! Tabular reports behind the command-line tool: info, rate, sweep and
//! evolve, rendered as text, CSV or JSON.
//!
//! Every number is written in scientific notation with 9 significant digits.
//! JSON numbers carry the same digits as the CSV cells, so both formats decode
//! to identical values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::value::RawValue;

use crate::decoherence::{
    thermal_bh_rate, vacuum_rate, DecoherenceResult, RateVariant, SuperpositionGeometry,
};
use crate::error::{domain, Error, Result};
use crate::evolve::{evolve_coherence, CoherenceTrace, EvolveRequest};
use crate::physcore::{BlackHole, PhysicalConstants, CONSTANTS_VERSION};
use crate::spectra::EmissionSpectrum;

/// Scientific notation, 9 significant digits; `inf`/`-inf`/`nan` otherwise.
pub fn sci(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.8e}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => sci(*x),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}
impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}
impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}
impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cell::Num(x) if x.is_finite() => {
                let raw = RawValue::from_string(sci(*x)).map_err(serde::ser::Error::custom)?;
                raw.serialize(s)
            }
            Cell::Num(x) => s.serialize_str(&sci(*x)),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Empty => s.serialize_none(),
        }
    }
}

struct Row<'a> {
    columns: &'a [String],
    cells: &'a [Cell],
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.columns.len()))?;
        for (k, v) in self.columns.iter().zip(self.cells) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(serde::Serialize)]
struct Document<'a> {
    meta: &'a BTreeMap<String, Cell>,
    rows: Vec<Row<'a>>,
}

/// Named columns, rows of cells and a metadata block.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub meta: BTreeMap<String, Cell>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn meta(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Column value of the first row.
    pub fn field(&self, column: &str) -> Option<&Cell> {
        let i = self.columns.iter().position(|c| c == column)?;
        self.rows.first().map(|r| &r[i])
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Row> = self
            .rows
            .iter()
            .map(|cells| Row {
                columns: &self.columns,
                cells,
            })
            .collect();
        let doc = Document {
            meta: &self.meta,
            rows,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
        s.push('\n');
        s
    }

    /// `key = value` lines per row, rows separated by a blank line.
    pub fn to_text(&self) -> String {
        let width = self.columns.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            for (k, v) in self.columns.iter().zip(row) {
                let _ = writeln!(out, "{k:<width$} = {}", v.csv());
            }
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

macro_rules! str_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        impl $name {
            pub fn as_str(&self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }
        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($text => Ok($name::$variant),)+
                    other => domain(format!(
                        concat!("unknown ", stringify!($name), " '{}' (expected one of: {})"),
                        other,
                        [$($text),+].join(", ")
                    )),
                }
            }
        }
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}
str_enum!(OutputFormat { Text => "text", Csv => "csv", Json => "json" });

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Vacuum,
    Thermal,
}
str_enum!(Mode { Vacuum => "vacuum", Thermal => "thermal" });

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}
str_enum!(Spacing { Linear => "linear", Log => "log" });

/// Parse a variant tag: `canonical` (or `canonical_appendix`) and `printed_eq8`.
pub fn parse_variant(s: &str) -> Result<RateVariant> {
    match s {
        "canonical" | "canonical_appendix" => Ok(RateVariant::Canonical),
        "printed_eq8" => Ok(RateVariant::Printed),
        other => domain(format!(
            "unknown variant '{other}' (expected canonical or printed_eq8)"
        )),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl SweepRange {
    pub fn new(start: f64, stop: f64, points: usize, spacing: Spacing) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite()) {
            return domain("sweep bounds must be finite");
        }
        if points < 2 {
            return domain(format!("a sweep needs at least 2 points, got {points}"));
        }
        if stop <= start {
            return domain(format!("sweep stop {stop} must exceed start {start}"));
        }
        if start < 0.0 || (spacing == Spacing::Log && start <= 0.0) {
            return domain(format!(
                "sweep start {start} must be positive for log spacing and non-negative otherwise"
            ));
        }
        Ok(Self {
            start,
            stop,
            points,
            spacing,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    return self.stop;
                }
                let f = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.start + f * (self.stop - self.start),
                    Spacing::Log => self.start * (self.stop / self.start).powf(f),
                }
            })
            .collect()
    }
}

/// `START:STOP[:POINTS[:SPACING]]`, defaulting to 71 log-spaced points.
impl FromStr for SweepRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if !(2..=4).contains(&parts.len()) {
            return domain(format!("range '{s}' is not START:STOP[:POINTS[:SPACING]]"));
        }
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Domain(format!("'{p}' is not a number")))
        };
        let points = match parts.get(2) {
            Some(p) => p
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Domain(format!("'{p}' is not a point count")))?,
            None => 71,
        };
        let spacing = match parts.get(3) {
            Some(p) => p.trim().parse()?,
            None => Spacing::Log,
        };
        SweepRange::new(num(parts[0])?, num(parts[1])?, points, spacing)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRequest {
    pub mass: f64,
    pub range: SweepRange,
    pub mode: Mode,
    pub variant: RateVariant,
    pub species: u32,
}

fn black_hole(mass: f64, constants: &PhysicalConstants) -> Result<BlackHole> {
    BlackHole::new(mass, *constants)
}

fn check_species(species: u32) -> Result<f64> {
    if species == 0 {
        return domain("species multiplicity must be at least 1");
    }
    Ok(f64::from(species))
}

/// One decoherence rate for the given mode, scaled by the species count.
pub fn compute_rate(
    geom: &SuperpositionGeometry,
    mode: Mode,
    variant: RateVariant,
    species: u32,
    constants: &PhysicalConstants,
) -> Result<DecoherenceResult> {
    let n = check_species(species)?;
    let mut r = match mode {
        Mode::Vacuum => vacuum_rate(geom, variant, constants)?,
        Mode::Thermal => thermal_bh_rate(geom, constants),
    };
    r.rate *= n;
    r.lambda_total *= n;
    Ok(r)
}

fn base_meta(table: Table, mass: f64, mode: Mode, variant: RateVariant, species: u32) -> Table {
    let table = table
        .meta("constants", CONSTANTS_VERSION)
        .meta("mass_kg", mass)
        .meta("mode", mode.as_str())
        .meta("species", f64::from(species));
    match mode {
        Mode::Vacuum => table.meta("variant", variant.as_str()),
        Mode::Thermal => table.meta("variant", Cell::Empty),
    }
}

pub fn cmd_info(mass: f64, species: u32, constants: &PhysicalConstants) -> Result<Table> {
    let n = check_species(species)?;
    let bh = black_hole(mass, constants)?;
    let spectrum = EmissionSpectrum::for_black_hole(&bh).with_species(species)?;
    let mut t = Table::new(&[
        "mass_kg",
        "r_s_m",
        "t_hawking_k",
        "t_evap_s",
        "lambda_total_per_s",
        "planck_length_m",
    ])
    .meta("constants", CONSTANTS_VERSION)
    .meta("species", n);
    t.push(vec![
        mass.into(),
        bh.schwarzschild_radius().into(),
        bh.hawking_temperature().into(),
        bh.evaporation_time().into(),
        spectrum.total_emission_rate()?.into(),
        constants.planck_length().into(),
    ]);
    Ok(t)
}

pub fn cmd_rate(
    mass: f64,
    delta_x: f64,
    mode: Mode,
    variant: RateVariant,
    species: u32,
    constants: &PhysicalConstants,
) -> Result<Table> {
    let bh = black_hole(mass, constants)?;
    let geom = SuperpositionGeometry::for_black_hole(&bh, delta_x)?;
    let r = compute_rate(&geom, mode, variant, species, constants)?;
    let mut t = base_meta(
        Table::new(&[
            "mass_kg",
            "dx_m",
            "dx_over_rs",
            "rate_per_s",
            "tau_d_s",
            "overlap",
            "regime",
            "formula",
        ]),
        mass,
        mode,
        variant,
        species,
    );
    t.push(vec![
        mass.into(),
        delta_x.into(),
        geom.dx_over_rs().into(),
        r.rate.into(),
        r.decoherence_time().into(),
        r.overlap.into(),
        r.regime.as_str().into(),
        r.formula.as_str().into(),
    ]);
    Ok(t)
}

pub const SWEEP_COLUMNS: [&str; 5] = [
    "dx_over_rs",
    "rate_c_over_rs",
    "rate_si",
    "overlap",
    "regime",
];

pub fn cmd_sweep(req: &SweepRequest, constants: &PhysicalConstants) -> Result<Table> {
    let bh = black_hole(req.mass, constants)?;
    let r_s = bh.schwarzschild_radius();
    let c_over_rs = constants.c / r_s;
    let rows = req
        .range
        .values()
        .into_par_iter()
        .map(|y| {
            let geom = SuperpositionGeometry::from_ratio(y, r_s)?;
            let r = compute_rate(&geom, req.mode, req.variant, req.species, constants)?;
            Ok(vec![
                y.into(),
                (r.rate / c_over_rs).into(),
                r.rate.into(),
                r.overlap.into(),
                r.regime.as_str().into(),
            ])
        })
        .collect::<Result<Vec<Vec<Cell>>>>()?;
    let mut t = base_meta(
        Table::new(&SWEEP_COLUMNS),
        req.mass,
        req.mode,
        req.variant,
        req.species,
    )
    .meta("r_s_m", r_s)
    .meta("spacing", req.range.spacing.as_str());
    t.rows = rows;
    Ok(t)
}

/// Trace table plus the summary values.
pub fn cmd_evolve(
    req: &EvolveRequest,
    constants: &PhysicalConstants,
) -> Result<(Table, CoherenceTrace)> {
    let trace = evolve_coherence(req, constants)?;
    let mut t = Table::new(&["t", "coherence", "mass"])
        .meta("constants", CONSTANTS_VERSION)
        .meta("mass_kg", req.initial_mass)
        .meta("dx_m", req.delta_x)
        .meta("evaporate", req.evaporate)
        .meta("species", f64::from(req.species))
        .meta("tau_d_s", trace.decoherence_time)
        .meta("quasi_static_valid", trace.quasi_static_valid);
    for i in 0..trace.times.len() {
        t.push(vec![
            trace.times[i].into(),
            trace.coherence[i].into(),
            trace.mass[i].into(),
        ]);
    }
    Ok((t, trace))
}

pub fn evolve_summary(trace: &CoherenceTrace) -> String {
    format!(
        "tau_d_s={} quasi_static_valid={}",
        sci(trace.decoherence_time),
        trace.quasi_static_valid
    )
}
