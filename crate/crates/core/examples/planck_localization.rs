//! How long a black hole takes to localize to one Planck length, compared
//! with its evaporation time.
//!
//! `cargo run --example planck_localization`

use hawking_decoherence::decoherence::{
    planck_localization_coefficient, planck_localization_time, LocalizationMode,
};
use hawking_decoherence::physcore::PhysicalConstants;

fn main() -> hawking_decoherence::Result<()> {
    let k = PhysicalConstants::default();
    for mode in [LocalizationMode::Thermal, LocalizationMode::Vacuum] {
        println!(
            "{mode:?}: coefficient of G^2 M^3/(hbar c^4) = {:.4}",
            planck_localization_coefficient(mode)
        );
    }
    for mass in [1e11, 1.99e30] {
        let t_evap = k.evaporation_time(mass)?;
        let vacuum = planck_localization_time(mass, LocalizationMode::Vacuum, &k)?;
        println!("M = {mass:.2e} kg: evaporation {t_evap:.4e} s, vacuum localization {vacuum:.4e} s ({:.4}x)", vacuum / t_evap);
    }
    Ok(())
}
