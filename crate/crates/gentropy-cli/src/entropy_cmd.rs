//! `entropy`: characterization → exact entropy vector, optional oracle
//! cross-check.

use gentropy::dist::induced_joint_distribution;
use gentropy::entropy::entropy_from_characterization;
use gentropy::varset::VarSet;

use crate::args::{Cli, EntropyCmd, Format};
use crate::{out, parse, CmdResult};

pub fn run(cli: &Cli, cmd: &EntropyCmd) -> CmdResult {
    let c = parse::characterization(&cmd.group, &cmd.subgroups)?;
    let vector = entropy_from_characterization(&c);

    let oracle_deviation = if cmd.oracle {
        let d = induced_joint_distribution(&c);
        let mut max_dev = 0.0f64;
        for vs in VarSet::nonempty_subsets(c.n()) {
            let oracle = d
                .shannon_entropy(vs)
                .map_err(|e| crate::CliError::input(e.to_string()))?;
            max_dev = max_dev.max((oracle - vector.bits(vs)).abs());
        }
        Some(max_dev)
    } else {
        None
    };

    let body = match cli.format {
        Format::Json => match oracle_deviation {
            None => out::json_line(&vector)?,
            Some(dev) => {
                #[derive(serde::Serialize)]
                struct WithOracle<'a> {
                    #[serde(flatten)]
                    vector: &'a gentropy::entropy::EntropyVector,
                    oracle_max_deviation_bits: f64,
                }
                out::json_line(&WithOracle { vector: &vector, oracle_max_deviation_bits: dev })?
            }
        },
        Format::Csv => {
            let mut s = String::from("subset,index,bits\n");
            for vs in VarSet::nonempty_subsets(vector.n()) {
                s.push_str(&format!(
                    "{},{},{:.12}\n",
                    vs.label(),
                    vector.index(vs),
                    vector.bits(vs)
                ));
            }
            if let Some(dev) = oracle_deviation {
                s.push_str(&format!("oracle_max_deviation_bits,,{dev:.12e}\n"));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for vs in VarSet::nonempty_subsets(vector.n()) {
                s.push_str(&format!(
                    "g({}) = log {} = {:.6} bits\n",
                    vs.label(),
                    vector.index(vs),
                    vector.bits(vs)
                ));
            }
            if let Some(dev) = oracle_deviation {
                s.push_str(&format!("oracle max deviation: {dev:.3e} bits\n"));
            }
            s
        }
    };
    out::emit(cli, &body)?;
    Ok(0)
}
