//! Text syntax, JSON documents, certificates and the command-line front end
//! for `vidcore`.

pub mod certificate;
pub mod cli;
pub mod error;
pub mod golden;
pub mod json;
pub mod syntax;

pub use certificate::Certificate;
pub use error::{CliError, CliResult};
