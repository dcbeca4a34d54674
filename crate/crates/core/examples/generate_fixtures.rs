//! Regenerate the regression fixtures, or check a fixture file against fresh
//! values.
//!
//! `cargo run --example generate_fixtures -- fixtures/regression.toml`
//! `cargo run --example generate_fixtures -- --check fixtures/regression.toml`

use std::path::Path;
use std::process::ExitCode;

use hawking_decoherence::fixtures::{generate_regression_fixtures, FixtureSet};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (check, path) = match args.as_slice() {
        [flag, path] if flag == "--check" => (true, path.as_str()),
        [path] => (false, path.as_str()),
        _ => {
            eprintln!("usage: generate_fixtures [--check] PATH");
            return ExitCode::from(2);
        }
    };
    let run = || -> hawking_decoherence::Result<bool> {
        let fresh = generate_regression_fixtures()?;
        if check {
            let stale = FixtureSet::load(Path::new(path))?.mismatches(&fresh);
            for name in &stale {
                eprintln!("mismatch: {name}");
            }
            return Ok(stale.is_empty());
        }
        std::fs::write(path, fresh.to_toml()?)
            .map_err(|e| hawking_decoherence::Error::Fixture(format!("{path}: {e}")))?;
        println!("wrote {} fixtures to {path}", fresh.fixtures.len());
        Ok(true)
    };
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
