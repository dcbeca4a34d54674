//! Command-line front end: `info`, `rate`, `sweep`, `evolve`, `verify`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hawking_decoherence::decoherence::RateVariant;
use hawking_decoherence::evolve::EvolveRequest;
use hawking_decoherence::physcore::PhysicalConstants;
use hawking_decoherence::report::{
    cmd_evolve, cmd_info, cmd_rate, cmd_sweep, evolve_summary, parse_variant, Mode, OutputFormat,
    SweepRange, SweepRequest,
};
use hawking_decoherence::verify::{self, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "bhdeco",
    version,
    about = "Decoherence of black-hole superpositions by Hawking radiation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// text, csv or json
    #[arg(long)]
    format: Option<OutputFormat>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Radius, temperature, lifetime and emission rate of a black hole.
    #[command(allow_negative_numbers = true)]
    Info {
        /// Mass in kg.
        #[arg(long)]
        mass: f64,
        #[arg(long, default_value_t = 1)]
        species: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Decoherence rate and time for one separation.
    #[command(allow_negative_numbers = true)]
    Rate {
        #[arg(long)]
        mass: f64,
        /// Branch separation in m.
        #[arg(
            long,
            required_unless_present = "dx_over_rs",
            conflicts_with = "dx_over_rs"
        )]
        dx: Option<f64>,
        /// Branch separation in units of the Schwarzschild radius.
        #[arg(long)]
        dx_over_rs: Option<f64>,
        #[arg(long, default_value = "vacuum")]
        mode: Mode,
        /// canonical or printed_eq8
        #[arg(long, default_value = "canonical", value_parser = parse_variant)]
        variant: RateVariant,
        #[arg(long, default_value_t = 1)]
        species: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Rate as a function of dx/r_s.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long)]
        mass: f64,
        /// START:STOP[:POINTS[:linear|log]]
        #[arg(long, default_value = "1e-3:1e4:71:log")]
        dx_over_rs: SweepRange,
        #[arg(long, default_value = "vacuum")]
        mode: Mode,
        #[arg(long, default_value = "canonical", value_parser = parse_variant)]
        variant: RateVariant,
        #[arg(long, default_value_t = 1)]
        species: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Coherence of the two branches over time.
    #[command(allow_negative_numbers = true)]
    Evolve {
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        dx: f64,
        /// End time in s.
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        /// Let the mass shrink along the quasi-static evaporation history.
        #[arg(long)]
        evaporate: bool,
        #[arg(long, default_value_t = 1)]
        species: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Run the cross-check suite.
    Verify {
        #[command(flatten)]
        output: Output,
    },
}

fn emit(text: &str, output: &Output) -> Result<(), String> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn warn_variant(variant: RateVariant) {
    if variant == RateVariant::Printed {
        eprintln!("warning: printed_eq8 uses the closed form's printed coefficients and is 4x the canonical rate");
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let k = PhysicalConstants::default();
    let err = |e: hawking_decoherence::Error| e.to_string();
    match cli.command {
        Command::Info {
            mass,
            species,
            output,
        } => {
            let t = cmd_info(mass, species, &k).map_err(err)?;
            emit(
                &t.render(output.format.unwrap_or(OutputFormat::Text)),
                &output,
            )?;
        }
        Command::Rate {
            mass,
            dx,
            dx_over_rs,
            mode,
            variant,
            species,
            output,
        } => {
            warn_variant(variant);
            let dx = match (dx, dx_over_rs) {
                (Some(dx), _) => dx,
                (None, Some(y)) => y * k.schwarzschild_radius(mass).map_err(err)?,
                (None, None) => unreachable!("clap requires one of --dx, --dx-over-rs"),
            };
            let t = cmd_rate(mass, dx, mode, variant, species, &k).map_err(err)?;
            emit(
                &t.render(output.format.unwrap_or(OutputFormat::Text)),
                &output,
            )?;
        }
        Command::Sweep {
            mass,
            dx_over_rs,
            mode,
            variant,
            species,
            output,
        } => {
            warn_variant(variant);
            let req = SweepRequest {
                mass,
                range: dx_over_rs,
                mode,
                variant,
                species,
            };
            let t = cmd_sweep(&req, &k).map_err(err)?;
            emit(
                &t.render(output.format.unwrap_or(OutputFormat::Csv)),
                &output,
            )?;
        }
        Command::Evolve {
            mass,
            dx,
            t_max,
            steps,
            evaporate,
            species,
            output,
        } => {
            let req = EvolveRequest {
                species,
                ..EvolveRequest::new(dx, mass, t_max, steps, evaporate)
            };
            let (t, trace) = cmd_evolve(&req, &k).map_err(err)?;
            let format = output.format.unwrap_or(OutputFormat::Csv);
            if format != OutputFormat::Json {
                eprintln!("{}", evolve_summary(&trace));
            }
            emit(&t.render(format), &output)?;
        }
        Command::Verify { output } => {
            let report = verify::run(&VerifyConfig::default());
            let text = match output.format {
                Some(OutputFormat::Json) => {
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
                _ => report.to_text(),
            };
            emit(&text, &output)?;
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
