//! `sweep`: evaluate a suite over all (or sampled) subgroup n-tuples.
//!
//! Workers own disjoint chunks of the tuple sequence and their partial
//! summaries are merged in chunk order, so the report is byte-identical
//! for a fixed seed regardless of the parallelism degree.

use gentropy::entropy::entropy_from_characterization;
use gentropy::group::{GroupCharacterization, Subgroup};
use gentropy::ineq::{evaluate_exact, Sign};
use gentropy::varset::MAX_VARS;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Cli, Format, SweepCmd};
use crate::{out, parse, CliError, CmdResult};

struct Partial {
    checked: u64,
    violations: u64,
    /// (slack bits, tuple id, functional name)
    min_slack: Option<(f64, u64, String)>,
}

impl Partial {
    fn empty() -> Partial {
        Partial { checked: 0, violations: 0, min_slack: None }
    }

    fn absorb(&mut self, other: Partial) {
        self.checked += other.checked;
        self.violations += other.violations;
        if let Some(m) = other.min_slack {
            let better = match &self.min_slack {
                None => true,
                Some(cur) => m.0 < cur.0 || (m.0 == cur.0 && m.1 < cur.1),
            };
            if better {
                self.min_slack = Some(m);
            }
        }
    }
}

pub fn run(cli: &Cli, cmd: &SweepCmd) -> CmdResult {
    if cmd.n == 0 || cmd.n > MAX_VARS {
        return Err(CliError::input(format!("n must be in 1..={MAX_VARS}")));
    }
    let group = parse::group(&cmd.group)?;
    let subgroups = group
        .enumerate_subgroups()
        .map_err(|e| CliError::cap(e.to_string()))?;
    let suite = parse::suite(&cmd.suite, cmd.n)?;
    for f in &suite {
        if f.n() != cmd.n {
            return Err(CliError::input(format!(
                "suite functional {} is over n={}, sweep is over n={}",
                f.name(),
                f.n(),
                cmd.n
            )));
        }
    }

    let s = subgroups.len() as u64;
    // Tuple ids: exhaustive = base-s digits; random = row in sampled list.
    let (total, sampled): (u64, Option<Vec<Vec<u16>>>) = match cmd.random {
        None => {
            let total = s.checked_pow(cmd.n as u32).filter(|&t| t <= cmd.max_tuples);
            let Some(total) = total else {
                return Err(CliError::cap(format!(
                    "exhaustive sweep needs {} tuples, over the cap {}",
                    s.pow(cmd.n as u32),
                    cmd.max_tuples
                )));
            };
            (total, None)
        }
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let rows = (0..count)
                .map(|_| (0..cmd.n).map(|_| rng.gen_range(0..s) as u16).collect())
                .collect();
            (count, Some(rows))
        }
    };

    let tuple_indices = |id: u64| -> Vec<u16> {
        match &sampled {
            Some(rows) => rows[id as usize].clone(),
            None => {
                let mut digits = vec![0u16; cmd.n];
                let mut rem = id;
                for k in (0..cmd.n).rev() {
                    digits[k] = (rem % s) as u16;
                    rem /= s;
                }
                digits
            }
        }
    };

    let work = |lo: u64, hi: u64| -> Result<Partial, CliError> {
        let mut part = Partial::empty();
        for id in lo..hi {
            let picks: Vec<Subgroup> = tuple_indices(id)
                .iter()
                .map(|&i| subgroups[i as usize].clone())
                .collect();
            let c = GroupCharacterization::new(group.clone(), picks)
                .map_err(|e| CliError::invariant(e.to_string()))?;
            let vector = entropy_from_characterization(&c);
            part.checked += 1;
            for f in &suite {
                let ev =
                    evaluate_exact(f, &vector).map_err(|e| CliError::input(e.to_string()))?;
                if ev.sign == Sign::Negative {
                    part.violations += 1;
                }
                let slack = f.slack_bits(&vector);
                let better = match &part.min_slack {
                    None => true,
                    Some(cur) => slack < cur.0 || (slack == cur.0 && id < cur.1),
                };
                if better {
                    part.min_slack = Some((slack, id, f.name().to_string()));
                }
            }
        }
        Ok(part)
    };

    let workers = cli.parallelism().min(total.max(1) as usize);
    let mut summary = Partial::empty();
    if workers <= 1 || total < 2 {
        summary.absorb(work(0, total)?);
    } else {
        let chunk = total.div_ceil(workers as u64);
        let parts = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|w| {
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(total);
                    let work = &work;
                    scope.spawn(move || work(lo, hi.max(lo)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect::<Vec<_>>()
        });
        for part in parts {
            summary.absorb(part?);
        }
    }

    let witness = summary.min_slack.as_ref().map(|(slack, id, name)| {
        let tuple: Vec<Vec<u16>> = tuple_indices(*id)
            .iter()
            .map(|&i| subgroups[i as usize].elements())
            .collect();
        (*slack, tuple, name.clone())
    });

    let mode = if cmd.random.is_some() { "random" } else { "exhaustive" };
    let body = match cli.format {
        Format::Json => {
            #[derive(serde::Serialize)]
            struct Wire<'a> {
                group: &'a str,
                n: usize,
                suite: &'a str,
                seed: u64,
                mode: &'a str,
                subgroups: usize,
                checked: u64,
                violations: u64,
                #[serde(skip_serializing_if = "Option::is_none")]
                min_slack_bits: Option<f64>,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness_tuple: Option<Vec<Vec<u16>>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness_functional: Option<String>,
            }
            out::json_line(&Wire {
                group: &cmd.group,
                n: cmd.n,
                suite: &cmd.suite,
                seed: cli.seed,
                mode,
                subgroups: subgroups.len(),
                checked: summary.checked,
                violations: summary.violations,
                min_slack_bits: witness.as_ref().map(|w| w.0),
                witness_tuple: witness.as_ref().map(|w| w.1.clone()),
                witness_functional: witness.as_ref().map(|w| w.2.clone()),
            })?
        }
        Format::Csv => {
            let mut sbody = String::from(
                "group,n,suite,seed,mode,subgroups,checked,violations,min_slack_bits\n",
            );
            sbody.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                cmd.group,
                cmd.n,
                cmd.suite,
                cli.seed,
                mode,
                subgroups.len(),
                summary.checked,
                summary.violations,
                witness.as_ref().map(|w| format!("{:.12}", w.0)).unwrap_or_default()
            ));
            sbody
        }
        Format::Text => {
            let mut sbody = format!(
                "sweep: group={} n={} suite={} seed={} mode={mode}\n",
                cmd.group, cmd.n, cmd.suite, cli.seed
            );
            sbody.push_str(&format!("subgroups: {}\n", subgroups.len()));
            sbody.push_str(&format!("tuples checked: {}\n", summary.checked));
            sbody.push_str(&format!("violations: {}\n", summary.violations));
            if let Some((slack, tuple, name)) = &witness {
                let rendered: Vec<String> = tuple
                    .iter()
                    .map(|elems| {
                        let joined: Vec<String> =
                            elems.iter().map(|e| e.to_string()).collect();
                        format!("[{}]", joined.join(","))
                    })
                    .collect();
                sbody.push_str(&format!(
                    "min slack: {slack:+.6} bits at {} ({name})\n",
                    rendered.join(" ")
                ));
            }
            sbody
        }
    };
    out::emit(cli, &body)?;
    Ok(if summary.violations > 0 { 1 } else { 0 })
}
