//! Run the built-in cross-check suite and print its report.
//!
//! `cargo run --example self_check`

use hawking_decoherence::verify::{self, VerifyConfig};

fn main() {
    let report = verify::run(&VerifyConfig::default());
    print!("{}", report.to_text());
    if !report.passed() {
        std::process::exit(1);
    }
}
