//! `linear entropy|dual|sw-extend`.

use gentropy::linear::{
    dual_rank_entropy, entropy_from_linear, sw_extension_linear, LinearCharacterization, Subspace,
};
use gentropy::varset::VarSet;

use crate::args::{Cli, Format, LinearAction, LinearCmd, LinearInput};
use crate::{out, parse, CmdResult};

fn build(input: &LinearInput) -> Result<LinearCharacterization, crate::CliError> {
    let subspaces: Result<Vec<Subspace>, _> = input
        .subspaces
        .iter()
        .map(|s| parse::subspace(input.p, input.m, s))
        .collect();
    LinearCharacterization::new(input.p, input.m, subspaces?)
        .map_err(|e| crate::CliError::input(e.to_string()))
}

fn emit_vector(cli: &Cli, v: &gentropy::entropy::EntropyVector) -> Result<(), crate::CliError> {
    let body = match cli.format {
        Format::Json => out::json_line(v)?,
        Format::Csv => {
            let mut s = String::from("subset,index,bits\n");
            for vs in VarSet::nonempty_subsets(v.n()) {
                s.push_str(&format!("{},{},{:.12}\n", vs.label(), v.index(vs), v.bits(vs)));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for vs in VarSet::nonempty_subsets(v.n()) {
                s.push_str(&format!(
                    "g({}) = log {} = {:.6} bits\n",
                    vs.label(),
                    v.index(vs),
                    v.bits(vs)
                ));
            }
            s
        }
    };
    out::emit(cli, &body)
}

pub fn run(cli: &Cli, cmd: &LinearCmd) -> CmdResult {
    match &cmd.action {
        LinearAction::Entropy(input) => {
            let c = build(input)?;
            emit_vector(cli, &entropy_from_linear(&c))?;
            Ok(0)
        }
        LinearAction::Dual(input) => {
            let c = build(input)?;
            emit_vector(cli, &dual_rank_entropy(&c))?;
            Ok(0)
        }
        LinearAction::SwExtend { input, alpha, beta } => {
            let c = build(input)?;
            let extended = sw_extension_linear(&c, parse::varset(alpha)?, parse::varset(beta)?)
                .map_err(|e| crate::CliError::input(e.to_string()))?;
            let body = match cli.format {
                Format::Json => out::json_line(&extended)?,
                Format::Csv | Format::Text => {
                    let mut s = format!("p: {}\nm: {}\n", extended.p(), extended.m());
                    for (i, w) in extended.subspaces().iter().enumerate() {
                        let rows: Vec<String> = w
                            .basis()
                            .iter()
                            .map(|r| {
                                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                            })
                            .collect();
                        s.push_str(&format!("W{}: {}\n", i + 1, rows.join(";")));
                    }
                    s
                }
            };
            out::emit(cli, &body)?;
            Ok(0)
        }
    }
}
