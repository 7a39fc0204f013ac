//! Output plumbing: stdout or file, one consistent newline policy.

use std::io::Write;

use crate::args::Cli;
use crate::CliError;

/// Writes `body` (expected to end with a newline) to the configured sink.
pub fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.output {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| CliError::input(format!("cannot write stdout: {e}")))
        }
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
    }
}

/// Serializes a value as one JSON line.
pub fn json_line<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::input(format!("serialization failed: {e}")))
}
