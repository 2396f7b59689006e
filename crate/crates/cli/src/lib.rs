//! Command-line front end for `arithstruct`.

pub mod args;
pub mod cache;
pub mod catalogs;
pub mod commands;
pub mod error;
pub mod records;

use std::io::Write;

use arithstruct::EnumerationLimits;

use args::Command;
use error::CliError;

pub fn run(command: &Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    let limits = EnumerationLimits::default();
    match command {
        Command::Enumerate(a) => commands::enumerate(a, limits, stdout),
        Command::Spectra(a) => commands::spectra(a, stdout),
        Command::Table(a) => commands::table(a, limits, stdout),
        Command::Verify(a) => commands::verify(a, limits, stdout),
        Command::Count(a) => commands::count(a, limits, stdout),
    }
}
