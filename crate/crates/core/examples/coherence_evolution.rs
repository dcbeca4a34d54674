//! Coherence between two branches over time, at fixed mass and with the mass
//! following its evaporation history.
//!
//! `cargo run --example coherence_evolution`

use hawking_decoherence::evolve::{evolve_coherence, EvolveRequest};
use hawking_decoherence::physcore::PhysicalConstants;

fn main() -> hawking_decoherence::Result<()> {
    let k = PhysicalConstants::default();

    let earth = evolve_coherence(
        &EvolveRequest::new(0.01, 5.97e24, 5.0 * 2.0682e-7, 10, false),
        &k,
    )?;
    println!("earth mass, 1 cm: tau_D = {:.4e} s", earth.decoherence_time);
    for (t, c) in earth.times.iter().zip(&earth.coherence) {
        println!("  t = {t:.3e} s  coherence = {c:.6}");
    }

    // a light hole whose mass shrinks noticeably over the window
    let mass = 1e11;
    let dx = k.schwarzschild_radius(mass)?;
    let t_max = 0.9 * k.evaporation_time(mass)?;
    let light = evolve_coherence(&EvolveRequest::new(dx, mass, t_max, 6, true), &k)?;
    println!(
        "1e11 kg, dx = r_s, evaporating: tau_D = {:.3e} s, quasi-static valid: {}",
        light.decoherence_time, light.quasi_static_valid
    );
    for ((t, m), log_c) in light
        .times
        .iter()
        .zip(&light.mass)
        .zip(&light.log_coherence)
    {
        println!("  t = {t:.3e} s  mass = {m:.4e} kg  ln(coherence) = {log_c:.4e}");
    }
    Ok(())
}
