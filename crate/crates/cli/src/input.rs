//! Loading graphs, groups, matchings and partitions from the command line.

use std::fs;
use std::path::Path;

use permatch::autiso::automorphism_group;
use permatch::graph::*;
use permatch::{BlockSystem, PermGroup, Permutation};

use crate::CliError;

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::invalid(format!("{} is empty", path.display())))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    Ok(graph6_decode(line)?)
}

/// `auto` (or no value) means the full automorphism group; anything else is
/// a file with one generator per line in cycle notation.
pub fn read_group(spec: Option<&str>, g: &Graph) -> Result<PermGroup, CliError> {
    match spec {
        None | Some("auto") => Ok(automorphism_group(g)),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::invalid(format!("cannot read {path}: {e}")))?;
            let n = g.vertex_count();
            let gens = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| Permutation::parse_cycles(n, l))
                .collect::<permatch::Result<Vec<_>>>()?;
            for p in &gens {
                if !g.is_automorphism(p) {
                    return Err(CliError::invalid(format!("{p} is not an automorphism")));
                }
            }
            Ok(PermGroup::from_generators(gens, n)?)
        }
    }
}

pub fn parse_matching(text: &str) -> Result<Matching, CliError> {
    Ok(text.parse::<Matching>()?)
}

/// A JSON list of blocks, e.g. `[[0, 3], [1, 4], [2, 5]]`.
pub fn read_partition(path: &Path, n: usize) -> Result<BlockSystem, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    let blocks: Vec<Vec<usize>> = serde_json::from_str(&text)
        .map_err(|e| CliError::invalid(format!("bad partition file: {e}")))?;
    Ok(BlockSystem::from_blocks(n, blocks)?)
}

/// Small graphs named inline: `K4`, `K4bar`, `C5`, `P3`, `Petersen`.
pub fn named_graph(token: &str) -> Result<Graph, CliError> {
    let bad = || CliError::invalid(format!("unknown graph {token:?}"));
    if token.eq_ignore_ascii_case("petersen") {
        return Ok(petersen());
    }
    if token.is_empty() || !token.is_ascii() {
        return Err(bad());
    }
    let (kind, rest) = token.split_at(1);
    let (digits, bar) = match rest.strip_suffix("bar") {
        Some(d) => (d, true),
        None => (rest, false),
    };
    let n: usize = digits.parse().map_err(|_| bad())?;
    let g = match (kind, bar) {
        ("K", false) => complete(n)?,
        ("K", true) => empty_graph(n)?,
        ("C", false) => cycle(n)?,
        ("P", false) => path(n)?,
        _ => return Err(bad()),
    };
    Ok(g)
}
