//! Decoherence of a black hole treated as a sphere in its own thermal bath,
//! against a laboratory-scale dielectric sphere at room temperature.
//!
//! `cargo run --example thermal_bath`

use hawking_decoherence::decoherence::{
    thermal_bh_constant, thermal_bh_rate, thermal_bh_rate_via_sphere, thermal_sphere_rate,
    SuperpositionGeometry, ThermalBathParams,
};
use hawking_decoherence::physcore::{BlackHole, PhysicalConstants};

fn main() -> hawking_decoherence::Result<()> {
    let k = PhysicalConstants::default();

    let lab = ThermalBathParams::new(1e-6, 300.0)?;
    println!(
        "1 um sphere at 300 K, dx = 10 nm: rate {:.4e} 1/s, dominant wavelength {:.3e} m, dipole regime {}",
        thermal_sphere_rate(&lab, 1e-8, &k)?,
        lab.dominant_wavelength(&k),
        lab.dipole_approximation_holds(1e-8, &k),
    );

    println!(
        "black-hole thermal constant d = {:.6}",
        thermal_bh_constant()
    );
    let bh = BlackHole::new(1e12, k)?;
    for ratio in [1e-3, 1e-1, 1.0] {
        let geom = SuperpositionGeometry::from_ratio(ratio, bh.schwarzschild_radius())?;
        let closed = thermal_bh_rate(&geom, &k);
        let via_sphere = thermal_bh_rate_via_sphere(&bh, geom.delta_x())?;
        println!(
            "M = 1e12 kg, dx/r_s = {ratio:.0e}: rate {:.6e} 1/s (sphere formula {via_sphere:.6e}), tau_D = {:.4} r_s/c",
            closed.rate,
            closed.decoherence_time() / bh.light_crossing_time(),
        );
    }
    Ok(())
}
