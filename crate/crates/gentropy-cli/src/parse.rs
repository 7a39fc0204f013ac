//! Parsers for the CLI's spec strings and input files.

use std::path::Path;

use gentropy::cone::Cone;
use gentropy::entropy::{EntropyVector, RealEntropyVector};
use gentropy::extension::{self, ExtensionSpec};
use gentropy::group::{FiniteGroup, GroupCharacterization, GroupError, Subgroup};
use gentropy::ineq::{
    elemental_shannon_inequalities, ingleton_functional, zhang_yeung_functional, LinearFunctional,
};
use gentropy::linear::Subspace;
use gentropy::varset::VarSet;

use crate::CliError;

/// Group spec: `kind:params`, direct products joined with `*`, or `@file`.
pub fn group(spec: &str) -> Result<FiniteGroup, CliError> {
    let factors: Vec<&str> = spec.split('*').collect();
    let mut acc: Option<FiniteGroup> = None;
    for factor in factors {
        let g = group_atom(factor.trim())?;
        acc = Some(match acc {
            None => g,
            Some(prev) => FiniteGroup::direct_product(&prev, &g).map_err(group_err)?,
        });
    }
    acc.ok_or_else(|| CliError::input("empty group spec"))
}

fn group_atom(spec: &str) -> Result<FiniteGroup, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = read_file(Path::new(path))?;
        return serde_json::from_str(&text)
            .map_err(|e| CliError::invariant(format!("bad group file {path}: {e}")));
    }
    let mut parts = spec.split(':');
    let kind = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    let int = |s: &str| -> Result<usize, CliError> {
        s.parse().map_err(|_| CliError::input(format!("bad integer {s:?} in group spec")))
    };
    let built = match (kind, params.as_slice()) {
        ("cyclic", [n]) => FiniteGroup::cyclic(int(n)?),
        ("dihedral", [n]) => FiniteGroup::dihedral(int(n)?),
        ("symmetric", [n]) => FiniteGroup::symmetric(int(n)?),
        ("elementary-abelian", [p, k]) => {
            FiniteGroup::elementary_abelian(int(p)? as u64, int(k)?)
        }
        _ => {
            return Err(CliError::input(format!(
                "unknown group spec {spec:?}; expected cyclic:N, dihedral:N, symmetric:N, \
                 elementary-abelian:P:K, a '*'-product of those, or @file.json"
            )))
        }
    };
    built.map_err(group_err)
}

fn group_err(e: GroupError) -> CliError {
    match e {
        GroupError::ParamOutOfRange(_) | GroupError::NotPrime(_) | GroupError::SizeOverflow(_) => {
            CliError::input(e.to_string())
        }
        _ => CliError::invariant(e.to_string()),
    }
}

/// Subgroup spec: generator list "2,4", explicit list "elems:0,2,4", or ""
/// for the trivial subgroup.
pub fn subgroup(g: &FiniteGroup, spec: &str) -> Result<Subgroup, CliError> {
    let spec = spec.trim();
    if let Some(list) = spec.strip_prefix("elems:") {
        let elems = element_list(list)?;
        return g.subgroup_from_elements(&elems).map_err(|e| CliError::invariant(e.to_string()));
    }
    if spec.is_empty() {
        return Ok(g.trivial_subgroup());
    }
    let gens = element_list(spec)?;
    g.generated_subgroup(&gens).map_err(|e| CliError::invariant(e.to_string()))
}

fn element_list(list: &str) -> Result<Vec<u16>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::input(format!("bad element index {s:?}"))))
        .collect()
}

pub fn characterization(
    group_spec: &str,
    subgroup_specs: &[String],
) -> Result<GroupCharacterization, CliError> {
    let g = group(group_spec)?;
    let subs: Result<Vec<Subgroup>, CliError> =
        subgroup_specs.iter().map(|s| subgroup(&g, s)).collect();
    GroupCharacterization::new(g, subs?).map_err(|e| CliError::invariant(e.to_string()))
}

/// Subset label such as "1" or "12".
pub fn varset(label: &str) -> Result<VarSet, CliError> {
    VarSet::parse_label(label.trim()).map_err(|e| CliError::input(e.to_string()))
}

/// Subspace spec: rows "1,0,0;0,1,1", or "zero" / "full".
pub fn subspace(p: u64, m: usize, spec: &str) -> Result<Subspace, CliError> {
    let spec = spec.trim();
    let built = match spec {
        "zero" | "" => Subspace::zero(p, m),
        "full" => Subspace::full(p, m),
        rows => {
            let parsed: Result<Vec<Vec<u32>>, CliError> = rows
                .split(';')
                .map(|row| {
                    row.split(',')
                        .map(str::trim)
                        .map(|c| {
                            c.parse()
                                .map_err(|_| CliError::input(format!("bad field element {c:?}")))
                        })
                        .collect()
                })
                .collect();
            Subspace::new(p, m, parsed?)
        }
    };
    built.map_err(|e| CliError::input(e.to_string()))
}

/// Inequality suite: builtin name or `@file` with one functional or an
/// array of functionals in JSON.
pub fn suite(spec: &str, n: usize) -> Result<Vec<LinearFunctional>, CliError> {
    match spec {
        "shannon" => {
            elemental_shannon_inequalities(n).map_err(|e| CliError::input(e.to_string()))
        }
        "ingleton" => Ok(vec![ingleton_functional()]),
        "zy" | "zhang-yeung" => Ok(vec![zhang_yeung_functional()]),
        other => {
            let path = other.strip_prefix('@').ok_or_else(|| {
                CliError::input(format!(
                    "unknown suite {other:?}; expected shannon, ingleton, zy, or @file.json"
                ))
            })?;
            let text = read_file(Path::new(path))?;
            if let Ok(list) = serde_json::from_str::<Vec<LinearFunctional>>(&text) {
                return Ok(list);
            }
            serde_json::from_str::<LinearFunctional>(&text)
                .map(|f| vec![f])
                .map_err(|e| CliError::input(format!("bad suite file {path}: {e}")))
        }
    }
}

/// A stored vector: exact (`indices`) or real (`values_bits`).
pub enum StoredVector {
    Exact(EntropyVector),
    Real(RealEntropyVector),
}

pub fn vector_file(path: &Path) -> Result<StoredVector, CliError> {
    let text = read_file(path)?;
    if let Ok(v) = serde_json::from_str::<EntropyVector>(&text) {
        return Ok(StoredVector::Exact(v));
    }
    serde_json::from_str::<RealEntropyVector>(&text)
        .map(StoredVector::Real)
        .map_err(|e| CliError::input(format!("bad vector file {}: {e}", path.display())))
}

pub fn entropy_vector_file(path: &Path) -> Result<EntropyVector, CliError> {
    match vector_file(path)? {
        StoredVector::Exact(v) => Ok(v),
        StoredVector::Real(_) => Err(CliError::input(format!(
            "{} holds a real vector; an exact indices vector is required here",
            path.display()
        ))),
    }
}

/// Cone file: text form when it starts with `labels:`, JSON otherwise.
pub fn cone_file(path: &Path) -> Result<Cone, CliError> {
    let text = read_file(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with("labels:") || trimmed.starts_with('#') {
        Cone::from_text(&text).map_err(|e| CliError::input(e.to_string()))
    } else {
        serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("bad cone file {}: {e}", path.display())))
    }
}

/// Outer-cone spec: `gamma:M`, `full:M`, or `@file`.
pub fn outer_cone(spec: &str) -> Result<Cone, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        return cone_file(Path::new(path));
    }
    let (kind, m) = spec
        .split_once(':')
        .ok_or_else(|| CliError::input(format!("bad outer spec {spec:?}")))?;
    let m: usize = m.parse().map_err(|_| CliError::input(format!("bad outer spec {spec:?}")))?;
    match kind {
        "gamma" => Cone::gamma(m).map_err(|e| CliError::input(e.to_string())),
        "full" => {
            Cone::full_space(Cone::entropy_labels(m)).map_err(|e| CliError::input(e.to_string()))
        }
        _ => Err(CliError::input(format!(
            "unknown outer spec {spec:?}; expected gamma:M, full:M, or @file"
        ))),
    }
}

/// Extension spec string `kind:n:alpha[:beta[:gamma]]` or `@file.json`.
pub fn extension_spec(
    spec: &str,
    source: Option<&EntropyVector>,
) -> Result<ExtensionSpec, CliError> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = read_file(Path::new(path))?;
        return serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("bad extension file {path}: {e}")));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let n: usize = parts
        .get(1)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CliError::input(format!("bad extension spec {spec:?}")))?;
    let block = |i: usize| -> Result<VarSet, CliError> {
        varset(parts.get(i).copied().ok_or_else(|| {
            CliError::input(format!("extension spec {spec:?} is missing a subset"))
        })?)
    };
    let built = match parts.first().copied() {
        Some("adhesive") if parts.len() == 3 => extension::adhesive_constraints(n, block(2)?),
        Some("join") if parts.len() == 4 => {
            extension::join_extension_constraints(n, block(2)?, block(3)?)
        }
        Some("sw") if parts.len() == 4 => {
            extension::sw_extension_constraints(n, block(2)?, block(3)?)
        }
        Some("markov") if parts.len() == 5 => extension::markov_double_extension_constraints(
            n,
            block(2)?,
            block(3)?,
            block(4)?,
            source,
        ),
        _ => {
            return Err(CliError::input(format!(
                "bad extension spec {spec:?}; expected adhesive:N:A, join:N:A:B, sw:N:A:B, \
                 markov:N:A:B:G, or @file.json"
            )))
        }
    };
    built.map_err(extension_err)
}

pub fn extension_err(e: gentropy::extension::ExtensionError) -> CliError {
    use gentropy::extension::ExtensionError::*;
    match &e {
        Cone(gentropy::cone::ConeError::RowCapExceeded { .. }) => CliError::cap(e.to_string()),
        NotNormal { .. } | WitnessCheck(_) | MarkovPremiseFails => {
            CliError::invariant(e.to_string())
        }
        _ => CliError::input(e.to_string()),
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}
