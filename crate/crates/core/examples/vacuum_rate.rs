//! Vacuum decoherence times for the sun, earth and moon masses at a 1 cm
//! separation, in both closed-form variants.
//!
//! `cargo run --example vacuum_rate`

use hawking_decoherence::decoherence::{vacuum_rate, RateVariant, SuperpositionGeometry};
use hawking_decoherence::physcore::{BlackHole, PhysicalConstants};
use hawking_decoherence::verify::{EARTH_MASS, MOON_MASS, REFERENCE_SEPARATION, SUN_MASS};

fn main() -> hawking_decoherence::Result<()> {
    let k = PhysicalConstants::default();
    for (name, mass) in [
        ("sun", SUN_MASS),
        ("earth", EARTH_MASS),
        ("moon", MOON_MASS),
    ] {
        let bh = BlackHole::new(mass, k)?;
        let geom = SuperpositionGeometry::for_black_hole(&bh, REFERENCE_SEPARATION)?;
        let canonical = vacuum_rate(&geom, RateVariant::Canonical, &k)?;
        let printed = vacuum_rate(&geom, RateVariant::Printed, &k)?;
        println!(
            "{name:<6} dx/r_s = {:<10.4e} regime = {:<16} tau_D = {:.4e} s (printed_eq8: {:.4e} s)",
            geom.dx_over_rs(),
            geom.regime().as_str(),
            canonical.decoherence_time(),
            printed.decoherence_time(),
        );
    }
    Ok(())
}
