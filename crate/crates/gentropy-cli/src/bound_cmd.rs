//! `bound`: extension ∘ intersection ∘ projection, with optional
//! membership regression over a list of vectors.

use gentropy::cone::{Cone, ProjectionSpec};
use gentropy::entropy::EntropyVector;
use gentropy::extension::bound_by_extension_with_cap;

use crate::args::{BoundCmd, Cli, Format};
use crate::parse::extension_err;
use crate::{out, parse, CliError, CmdResult};

pub fn run(cli: &Cli, cmd: &BoundCmd) -> CmdResult {
    let source = cmd
        .source
        .as_ref()
        .map(|p| parse::entropy_vector_file(p))
        .transpose()?;
    let spec = parse::extension_spec(&cmd.extension, source.as_ref())?;
    let outer = parse::outer_cone(&cmd.outer)?;
    let bound = match &cmd.keep {
        None => bound_by_extension_with_cap(&spec, &outer, cli.fm_cap).map_err(extension_err)?,
        Some(keep) => {
            let keep: Vec<String> =
                keep.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            let combined = outer
                .intersect(&spec.constraints)
                .map_err(|e| CliError::input(e.to_string()))?;
            combined
                .project_with_cap(&ProjectionSpec::keep_only(keep), cli.fm_cap)
                .map_err(|e| match e {
                    gentropy::cone::ConeError::RowCapExceeded { .. } => {
                        CliError::cap(e.to_string())
                    }
                    _ => CliError::input(e.to_string()),
                })?
        }
    };

    let membership = cmd
        .verify_members
        .as_ref()
        .map(|path| -> Result<(usize, Vec<usize>), CliError> {
            let text = parse::read_file(path)?;
            let vectors: Vec<EntropyVector> = serde_json::from_str(&text).map_err(|e| {
                CliError::input(format!("bad members file {}: {e}", path.display()))
            })?;
            let mut failures = Vec::new();
            for (i, v) in vectors.iter().enumerate() {
                if !bound.member_exact(v).map_err(|e| CliError::input(e.to_string()))? {
                    failures.push(i);
                }
            }
            Ok((vectors.len(), failures))
        })
        .transpose()?;

    let body = match cli.format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Wire<'a> {
                cone: &'a Cone,
                #[serde(skip_serializing_if = "Option::is_none")]
                members_checked: Option<usize>,
                #[serde(skip_serializing_if = "Option::is_none")]
                non_members: Option<&'a [usize]>,
            }
            out::json_line(&Wire {
                cone: &bound,
                members_checked: membership.as_ref().map(|(n, _)| *n),
                non_members: membership.as_ref().map(|(_, f)| f.as_slice()),
            })?
        }
        Format::Csv | Format::Text => {
            let mut s = bound.to_text();
            if let Some((checked, failures)) = &membership {
                if failures.is_empty() {
                    s.push_str(&format!("members: {checked}/{checked} inside\n"));
                } else {
                    s.push_str(&format!(
                        "members: {}/{checked} inside; non-members at indices {failures:?}\n",
                        checked - failures.len(),
                    ));
                }
            }
            s
        }
    };
    out::emit(cli, &body)?;
    let all_inside = membership.map(|(_, f)| f.is_empty()).unwrap_or(true);
    Ok(if all_inside { 0 } else { 1 })
}
