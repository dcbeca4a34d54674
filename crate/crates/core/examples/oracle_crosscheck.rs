//! Closed-form overlap and rate against adaptive quadrature of the emission
//! spectrum, including a low-frequency cutoff the closed form cannot handle.
//!
//! `cargo run --example oracle_crosscheck`

use hawking_decoherence::decoherence::{
    vacuum_overlap, vacuum_rate, RateVariant, SuperpositionGeometry,
};
use hawking_decoherence::oracle::{overlap_numeric, rate_numeric};
use hawking_decoherence::physcore::{BlackHole, PhysicalConstants};
use hawking_decoherence::quadrature::QuadratureSpec;
use hawking_decoherence::spectra::EmissionSpectrum;

fn main() -> hawking_decoherence::Result<()> {
    let k = PhysicalConstants::default();
    let quad = QuadratureSpec::default();
    let bh = BlackHole::new(5.97e24, k)?;
    let spectrum = EmissionSpectrum::for_black_hole(&bh);
    let cut = spectrum.with_omega_min(spectrum.omega_of_u(2.0))?;

    println!(
        "{:>10}  {:>16}  {:>16}  {:>10}  {:>16}",
        "dx/r_s", "overlap", "quadrature", "rate dev", "rate, u > 2"
    );
    for ratio in [1e-3, 0.1, 1.0, 10.0, 1e3] {
        let g = SuperpositionGeometry::from_ratio(ratio, bh.schwarzschild_radius())?;
        let num = overlap_numeric(&g, &spectrum, &quad)?;
        let rate = vacuum_rate(&g, RateVariant::Canonical, &k)?.rate;
        let rate_num = rate_numeric(&g, &spectrum, &quad)?.value;
        println!(
            "{ratio:>10.0e}  {:>16.12}  {:>16.12}  {:>10.1e}  {:>16.6e}",
            vacuum_overlap(&g)?,
            num.value,
            ((rate_num - rate) / rate).abs(),
            rate_numeric(&g, &cut, &quad)?.value,
        );
    }
    Ok(())
}
