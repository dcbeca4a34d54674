//! Emission rate density of a black hole across frequency, and the total
//! rate in closed form, by quadrature, and with a frequency cutoff.
//!
//! `cargo run --example emission_spectrum`

use hawking_decoherence::physcore::{BlackHole, PhysicalConstants};
use hawking_decoherence::quadrature::QuadratureSpec;
use hawking_decoherence::spectra::EmissionSpectrum;

fn main() -> hawking_decoherence::Result<()> {
    let bh = BlackHole::new(7.35e22, PhysicalConstants::default())?;
    let spectrum = EmissionSpectrum::for_black_hole(&bh);
    for u in [0.1, 0.5, 1.0, 1.5936, 3.0, 10.0, 30.0] {
        let omega = spectrum.omega_of_u(u);
        println!(
            "u = {u:>7.4}  omega = {omega:.4e} rad/s  rate density {:.4e}  pdf {:.4e}",
            spectrum.rate_density(omega)?,
            spectrum.frequency_pdf(omega)?,
        );
    }
    let quad = QuadratureSpec::default();
    println!("total rate {:.6e} 1/s", spectrum.total_emission_rate()?);
    println!(
        "by quadrature {:.6e} 1/s",
        spectrum.total_emission_rate_numeric(&quad)?.value
    );
    let cut = spectrum.with_omega_min(spectrum.omega_of_u(2.0))?;
    println!("above u = 2 {:.6e} 1/s", cut.total_emission_rate()?);
    let three = spectrum.with_species(3)?;
    println!("three species {:.6e} 1/s", three.total_emission_rate()?);
    Ok(())
}
