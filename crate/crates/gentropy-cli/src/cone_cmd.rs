//! `cone project|member|intersect`.

use gentropy::cone::{Cone, ConeError, ProjectionSpec};

use crate::args::{Cli, ConeAction, ConeCmd, Format};
use crate::parse::StoredVector;
use crate::{out, parse, CliError, CmdResult};

const REAL_TOLERANCE_BITS: f64 = 1e-9;

pub fn emit_cone(cli: &Cli, cone: &Cone) -> Result<(), CliError> {
    let body = match cli.format {
        Format::Json => out::json_line(cone)?,
        Format::Csv | Format::Text => cone.to_text(),
    };
    out::emit(cli, &body)
}

fn cone_err(e: ConeError) -> CliError {
    match e {
        ConeError::RowCapExceeded { .. } => CliError::cap(e.to_string()),
        _ => CliError::input(e.to_string()),
    }
}

pub fn run(cli: &Cli, cmd: &ConeCmd) -> CmdResult {
    match &cmd.action {
        ConeAction::Project { cone, keep, full_reduce } => {
            let c = parse::cone_file(cone)?;
            let keep: Vec<String> =
                keep.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            let spec = ProjectionSpec::keep_only(keep);
            let mut projected = c.project_with_cap(&spec, cli.fm_cap).map_err(cone_err)?;
            if *full_reduce {
                projected = projected.remove_redundant(true);
            }
            emit_cone(cli, &projected)?;
            Ok(0)
        }
        ConeAction::Member { cone, vector } => {
            let c = parse::cone_file(cone)?;
            let inside = match parse::vector_file(vector)? {
                StoredVector::Exact(v) => c.member_exact(&v).map_err(cone_err)?,
                StoredVector::Real(v) => {
                    c.member_real(&v, REAL_TOLERANCE_BITS).map_err(cone_err)?
                }
            };
            let body = match cli.format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct Wire {
                        member: bool,
                    }
                    out::json_line(&Wire { member: inside })?
                }
                Format::Csv | Format::Text => {
                    format!("{}\n", if inside { "member" } else { "not a member" })
                }
            };
            out::emit(cli, &body)?;
            Ok(if inside { 0 } else { 1 })
        }
        ConeAction::Intersect { cones } => {
            if cones.len() != 2 {
                return Err(CliError::input("intersect needs exactly two --cone files"));
            }
            let a = parse::cone_file(&cones[0])?;
            let b = parse::cone_file(&cones[1])?;
            let met = a.intersect(&b).map_err(cone_err)?;
            emit_cone(cli, &met)?;
            Ok(0)
        }
    }
}
