//! `group gen` and `group subgroups`.

use crate::args::{Cli, Format, GroupAction, GroupCmd};
use crate::{out, parse, CmdResult};

pub fn run(cli: &Cli, cmd: &GroupCmd) -> CmdResult {
    match &cmd.action {
        GroupAction::Gen { group } => {
            let g = parse::group(group)?;
            let body = match cli.format {
                Format::Json => out::json_line(&g)?,
                Format::Csv | Format::Text => {
                    let mut s = format!(
                        "order: {}\nidentity: {}\nabelian: {}\n",
                        g.order(),
                        g.identity(),
                        g.is_abelian()
                    );
                    if let Some(labels) = g.labels() {
                        s.push_str(&format!("labels: {}\n", labels.join(" ")));
                    }
                    s
                }
            };
            out::emit(cli, &body)?;
            Ok(0)
        }
        GroupAction::Subgroups { group } => {
            let g = parse::group(group)?;
            let subs = g
                .enumerate_subgroups()
                .map_err(|e| crate::CliError::cap(e.to_string()))?;
            let lists: Vec<Vec<u16>> = subs.iter().map(|s| s.elements()).collect();
            let body = match cli.format {
                Format::Json => out::json_line(&lists)?,
                Format::Csv => {
                    let mut s = String::from("index,order,elements\n");
                    for (i, elems) in lists.iter().enumerate() {
                        let joined: Vec<String> =
                            elems.iter().map(|e| e.to_string()).collect();
                        s.push_str(&format!("{i},{},{}\n", elems.len(), joined.join(" ")));
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("{} subgroups\n", lists.len());
                    for elems in &lists {
                        let joined: Vec<String> =
                            elems.iter().map(|e| e.to_string()).collect();
                        s.push_str(&format!("[{}]\n", joined.join(",")));
                    }
                    s
                }
            };
            out::emit(cli, &body)?;
            Ok(0)
        }
    }
}
