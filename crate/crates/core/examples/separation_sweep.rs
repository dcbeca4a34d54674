//! Decoherence rate across separations, from the quadratic regime to the
//! emission-rate plateau, written as CSV.
//!
//! `cargo run --example separation_sweep > sweep.csv`

use hawking_decoherence::decoherence::RateVariant;
use hawking_decoherence::physcore::PhysicalConstants;
use hawking_decoherence::report::{cmd_sweep, Mode, Spacing, SweepRange, SweepRequest};

fn main() -> hawking_decoherence::Result<()> {
    let req = SweepRequest {
        mass: 5.97e24,
        range: SweepRange::new(1e-3, 1e4, 29, Spacing::Log)?,
        mode: Mode::Vacuum,
        variant: RateVariant::Canonical,
        species: 1,
    };
    print!(
        "{}",
        cmd_sweep(&req, &PhysicalConstants::default())?.to_csv()
    );
    Ok(())
}
