//! Instance files, families and command dispatch for the `gamma-depth`
//! binary.

pub mod commands;
pub mod error;
pub mod family;
pub mod instance;

pub use commands::{corpus_verify, run_command, run_instance, CommandOutput, Options, RunReport, Status};
pub use error::{CliError, Result};
pub use family::{generate_family, CorpusConfig, FamilyKind, FamilyParams};
pub use instance::{parse_instance, Command, InstanceFile, Object, ObjectKind, COMMANDS};

/// Reads `GAMMA_DEPTH_PRIME`.
pub fn prime_from_env() -> Result<Option<u64>> {
    match std::env::var("GAMMA_DEPTH_PRIME") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Refused(format!("GAMMA_DEPTH_PRIME=`{}` is not an integer", v))),
        Err(_) => Ok(None),
    }
}
