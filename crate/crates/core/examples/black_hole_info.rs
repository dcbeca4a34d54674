//! Radius, Hawking temperature, lifetime and emission rate for a few masses.
//!
//! `cargo run --example black_hole_info`

use hawking_decoherence::physcore::{BlackHole, PhysicalConstants};
use hawking_decoherence::spectra::EmissionSpectrum;

fn main() -> hawking_decoherence::Result<()> {
    let k = PhysicalConstants::default();
    println!(
        "{:>10}  {:>12}  {:>12}  {:>12}  {:>12}",
        "mass_kg", "r_s_m", "t_hawking_k", "t_evap_s", "lambda_per_s"
    );
    for mass in [1e11, 7.35e22, 5.97e24, 1.99e30] {
        let bh = BlackHole::new(mass, k)?;
        let total = EmissionSpectrum::for_black_hole(&bh).total_emission_rate()?;
        println!(
            "{mass:>10.3e}  {:>12.5e}  {:>12.5e}  {:>12.5e}  {total:>12.5e}",
            bh.schwarzschild_radius(),
            bh.hawking_temperature(),
            bh.evaporation_time(),
        );
    }
    println!("planck length {:.6e} m", k.planck_length());
    Ok(())
}
