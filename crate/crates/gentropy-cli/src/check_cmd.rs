//! `check`: run an inequality suite on a stored vector.

use gentropy::ineq::{check_entropy_vector, check_real_vector, InequalityReport, Sign};

use crate::args::{Cli, CheckCmd, Format};
use crate::parse::StoredVector;
use crate::{out, parse, CmdResult};

const REAL_TOLERANCE_BITS: f64 = 1e-9;

pub fn run(cli: &Cli, cmd: &CheckCmd) -> CmdResult {
    let vector = parse::vector_file(&cmd.vector)?;
    let n = match &vector {
        StoredVector::Exact(v) => v.n(),
        StoredVector::Real(v) => v.n(),
    };
    let suite = parse::suite(&cmd.suite, n)?;
    let report = match &vector {
        StoredVector::Exact(v) => {
            check_entropy_vector(v, &suite).map_err(|e| crate::CliError::input(e.to_string()))?
        }
        StoredVector::Real(v) => check_real_vector(v, &suite, REAL_TOLERANCE_BITS)
            .map_err(|e| crate::CliError::input(e.to_string()))?,
    };
    out::emit(cli, &render(cli.format, &report)?)?;
    Ok(if report.all_nonnegative() { 0 } else { 1 })
}

pub fn render(format: Format, report: &InequalityReport) -> Result<String, crate::CliError> {
    Ok(match format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct RowWire<'a> {
                name: &'a str,
                sign: Sign,
                slack_bits: f64,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness: Option<[String; 2]>,
            }
            let rows: Vec<RowWire> = report
                .rows
                .iter()
                .map(|r| RowWire {
                    name: &r.name,
                    sign: r.sign,
                    slack_bits: r.slack_bits,
                    witness: r
                        .witness
                        .as_ref()
                        .map(|(p, n)| [p.to_string(), n.to_string()]),
                })
                .collect();
            #[derive(serde::Serialize)]
            struct ReportWire<'a> {
                all_nonnegative: bool,
                rows: Vec<RowWire<'a>>,
            }
            out::json_line(&ReportWire { all_nonnegative: report.all_nonnegative(), rows })?
        }
        Format::Csv => {
            let mut s = String::from("name,sign,slack_bits\n");
            for r in &report.rows {
                s.push_str(&format!("{},{},{:.12}\n", r.name, r.sign.as_str(), r.slack_bits));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &report.rows {
                s.push_str(&format!(
                    "{:<20} {:>9}  slack {:+.6} bits\n",
                    r.name,
                    r.sign.as_str(),
                    r.slack_bits
                ));
            }
            s.push_str(if report.all_nonnegative() {
                "all nonnegative\n"
            } else {
                "VIOLATIONS FOUND\n"
            });
            s
        }
    })
}
