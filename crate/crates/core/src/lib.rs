pub mod decoherence;
pub mod error;
pub mod evolve;
pub mod fixtures;
pub mod oracle;
pub mod physcore;
pub mod quadrature;
pub mod report;
pub mod specfun;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
