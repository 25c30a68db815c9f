use std::path::PathBuf;

use thiserror::Error;

use belyi_core::poly::PolyError;
use belyi_core::verify::ClaimError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal failure: {0}")]
    Internal(String),
    #[error("bad polynomial: {0}")]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Claim(#[from] ClaimError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub precision: u32,
    pub cap: usize,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(precision: u32, cap: usize, out: Option<PathBuf>) -> Result<Self, CliError> {
        if precision < 53 {
            return Err(CliError::Input(format!("precision {precision} is below 53 bits")));
        }
        if cap < 16 {
            return Err(CliError::Input(format!("truncation cap {cap} is below 16")));
        }
        Ok(RunConfig { precision, cap, out })
    }

    pub fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => std::fs::write(path, format!("{text}\n"))?,
            None => println!("{text}"),
        }
        Ok(())
    }
}
