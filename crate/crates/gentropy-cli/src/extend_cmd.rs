//! `extend`: build extension constraint sets, and adhesive group witnesses.

use gentropy::entropy::entropy_from_characterization;
use gentropy::extension::{
    adhesive_constraints, adhesive_group_extension, join_extension_constraints,
    markov_double_extension_constraints, sw_extension_constraints, ExtensionSpec,
};

use crate::args::{Cli, ExtendAction, ExtendCmd, Format};
use crate::parse::extension_err;
use crate::{out, parse, CmdResult};

fn emit_spec(cli: &Cli, spec: &ExtensionSpec) -> Result<(), crate::CliError> {
    let body = match cli.format {
        Format::Json => out::json_line(spec)?,
        Format::Csv | Format::Text => {
            let mut s = format!(
                "kind: {:?}\nsource n: {}\ntarget m: {}\n",
                spec.kind, spec.n, spec.m
            );
            s.push_str(&spec.constraints.to_text());
            s
        }
    };
    out::emit(cli, &body)
}

pub fn run(cli: &Cli, cmd: &ExtendCmd) -> CmdResult {
    match &cmd.action {
        ExtendAction::Adhesive { n, alpha, group: None, .. } => {
            let spec = adhesive_constraints(*n, parse::varset(alpha)?).map_err(extension_err)?;
            emit_spec(cli, &spec)?;
            Ok(0)
        }
        ExtendAction::Adhesive { n, alpha, group: Some(gspec), subgroups } => {
            let c = parse::characterization(gspec, subgroups)?;
            if c.n() != *n {
                return Err(crate::CliError::input(format!(
                    "--n {} does not match {} --subgroup flags",
                    n,
                    c.n()
                )));
            }
            let glue = parse::varset(alpha)?;
            let (witness, extended) =
                adhesive_group_extension(&c, glue).map_err(extension_err)?;
            let vector = entropy_from_characterization(&extended);
            let body = match cli.format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct Wire<'a> {
                        k_order: usize,
                        k: &'a gentropy::group::FiniteGroup,
                        extended_vector: &'a gentropy::entropy::EntropyVector,
                        verified: bool,
                    }
                    out::json_line(&Wire {
                        k_order: witness.group.order(),
                        k: &witness.group,
                        extended_vector: &vector,
                        verified: true,
                    })?
                }
                Format::Csv | Format::Text => {
                    let mut s = format!(
                        "witness group K: order {} ({} x glue-coset pairs)\n",
                        witness.group.order(),
                        c.group().order()
                    );
                    s.push_str("verified: |K| identity, preimage cardinalities, glued copies, \
                                intersections, extension conditions, independence chain\n");
                    for vs in gentropy::varset::VarSet::nonempty_subsets(vector.n()) {
                        s.push_str(&format!("h({}) = log {}\n", vs.label(), vector.index(vs)));
                    }
                    s
                }
            };
            out::emit(cli, &body)?;
            Ok(0)
        }
        ExtendAction::Join { n, alpha, beta } => {
            let spec =
                join_extension_constraints(*n, parse::varset(alpha)?, parse::varset(beta)?)
                    .map_err(extension_err)?;
            emit_spec(cli, &spec)?;
            Ok(0)
        }
        ExtendAction::Sw { n, alpha, beta } => {
            let spec = sw_extension_constraints(*n, parse::varset(alpha)?, parse::varset(beta)?)
                .map_err(extension_err)?;
            emit_spec(cli, &spec)?;
            Ok(0)
        }
        ExtendAction::Markov { n, alpha, beta, gamma, source } => {
            let source_vector = source
                .as_ref()
                .map(|p| parse::entropy_vector_file(p))
                .transpose()?;
            let spec = markov_double_extension_constraints(
                *n,
                parse::varset(alpha)?,
                parse::varset(beta)?,
                parse::varset(gamma)?,
                source_vector.as_ref(),
            )
            .map_err(extension_err)?;
            emit_spec(cli, &spec)?;
            Ok(0)
        }
    }
}
