//! Symmetry of matchings: stabilizers, induced edge actions, permutability
//! and 2-transitivity, witness search, and local transitivity predicates.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::autiso::automorphism_group;
use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph, Matching};
use crate::permgroup::{factorial, PermGroup, Permutation, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Permutable,
    TwoTransitive,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "permutable" => Ok(Mode::Permutable),
            "two-transitive" | "two_transitive" | "2-transitive" => Ok(Mode::TwoTransitive),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Permutable => "permutable",
            Mode::TwoTransitive => "two-transitive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub is_matching: bool,
    pub is_perfect: bool,
    pub m: usize,
    #[serde(serialize_with = "crate::serialize_biguint")]
    pub stabilizer_order: BigUint,
    #[serde(serialize_with = "crate::serialize_biguint")]
    pub induced_order: BigUint,
    pub permutable: bool,
    pub two_transitive: bool,
    pub induced_generators: Vec<Permutation>,
}

impl MatchingReport {
    pub fn satisfies(&self, mode: Mode) -> bool {
        match mode {
            Mode::Permutable => self.permutable,
            Mode::TwoTransitive => self.two_transitive,
        }
    }
}

/// `(is_matching, is_perfect)`.
pub fn validate_matching(g: &Graph, m: &Matching) -> (bool, bool) {
    (m.is_matching_in(g), m.is_perfect_in(g))
}

/// Checks that every generator of `group` is an automorphism of `g`.
pub fn check_automorphisms(g: &Graph, group: &PermGroup) -> Result<()> {
    if group.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: g.vertex_count(),
            found: group.degree(),
        });
    }
    if group.generators().iter().all(|p| g.is_automorphism(p)) {
        Ok(())
    } else {
        Err(Error::NotAutomorphism)
    }
}

fn partner_map(n: usize, m: &Matching) -> Vec<Option<usize>> {
    let mut partner = vec![None; n];
    for &(a, b) in m.edges() {
        partner[a] = Some(b);
        partner[b] = Some(a);
    }
    partner
}

fn stabilizer_unchecked(group: &PermGroup, m: &Matching) -> PermGroup {
    let partner = partner_map(group.degree(), m);
    let prefix = m.vertices();
    let prune = |pairs: &[(usize, usize)]| {
        let &(b, img) = pairs.last().unwrap();
        match (partner[b], partner[img]) {
            (None, None) => true,
            (Some(pb), Some(pi)) => pairs
                .iter()
                .find(|&&(x, _)| x == pb)
                .is_none_or(|&(_, y)| y == pi),
            _ => false,
        }
    };
    let accept = |g: &Permutation| {
        m.edges()
            .iter()
            .all(|&(a, b)| partner[g.image(a)] == Some(g.image(b)))
    };
    group.subgroup_search(&prefix, prune, accept)
}

/// The subgroup of `group` mapping the edge set of `m` to itself.
pub fn matching_stabilizer(g: &Graph, group: &PermGroup, m: &Matching) -> Result<PermGroup> {
    m.validate(g)?;
    check_automorphisms(g, group)?;
    Ok(stabilizer_unchecked(group, m))
}

/// The action of a stabilizer of `m` on the edge indices `0..m.len()`.
pub fn induced_edge_action(stabilizer: &PermGroup, m: &Matching) -> Result<PermGroup> {
    Ok(stabilizer.induced_action(&m.cells())?.image)
}

fn report_from_stabilizer(g: &Graph, stab: &PermGroup, m: &Matching) -> Result<MatchingReport> {
    let image = induced_edge_action(stab, m)?;
    let k = m.len();
    let domain: Vec<usize> = (0..k).collect();
    let induced_order = image.order();
    Ok(MatchingReport {
        is_matching: true,
        is_perfect: m.is_perfect_in(g),
        m: k,
        stabilizer_order: stab.order(),
        permutable: induced_order == factorial(k),
        two_transitive: image.is_2transitive(&domain)?,
        induced_order,
        induced_generators: image.generators().to_vec(),
    })
}

/// Full report for `m` under `group`, or under `Aut(g)` when `group` is `None`.
/// An invalid matching yields a report with `is_matching = false`.
pub fn analyze_matching(g: &Graph, group: Option<&PermGroup>, m: &Matching) -> Result<MatchingReport> {
    if !m.is_matching_in(g) {
        return Ok(MatchingReport {
            is_matching: false,
            is_perfect: false,
            m: m.len(),
            stabilizer_order: BigUint::from(0u32),
            induced_order: BigUint::from(0u32),
            permutable: false,
            two_transitive: false,
            induced_generators: Vec::new(),
        });
    }
    let owned;
    let group = match group {
        Some(gr) => gr,
        None => {
            owned = automorphism_group(g);
            &owned
        }
    };
    let stab = matching_stabilizer(g, group, m)?;
    report_from_stabilizer(g, &stab, m)
}

pub fn is_permutable(g: &Graph, group: Option<&PermGroup>, m: &Matching) -> Result<MatchingReport> {
    analyze_matching(g, group, m)
}

pub fn is_2transitive_matching(
    g: &Graph,
    group: Option<&PermGroup>,
    m: &Matching,
) -> Result<MatchingReport> {
    analyze_matching(g, group, m)
}

/// Searches for an `m`-matching whose stabilizer in `group` satisfies `mode`.
///
/// Partial matchings are extended by one representative of each orbit of
/// their own stabilizer on the remaining disjoint edges, so every `group`
/// orbit of `m`-matchings is visited at least once.
pub fn find_matching(g: &Graph, group: &PermGroup, m: usize, mode: Mode) -> Result<Option<Matching>> {
    check_automorphisms(g, group)?;
    if 2 * m > g.vertex_count() {
        return Ok(None);
    }
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let finder = Finder {
        g,
        group,
        edges: &edges,
        index: &index,
        m,
        mode,
    };
    let mut used = vec![false; g.vertex_count()];
    finder.extend(&mut Vec::new(), &mut used, group)
}

struct Finder<'a> {
    g: &'a Graph,
    group: &'a PermGroup,
    edges: &'a [(usize, usize)],
    index: &'a HashMap<(usize, usize), usize>,
    m: usize,
    mode: Mode,
}

impl Finder<'_> {
    fn extend(
        &self,
        chosen: &mut Vec<(usize, usize)>,
        used: &mut [bool],
        stab: &PermGroup,
    ) -> Result<Option<Matching>> {
        if chosen.len() == self.m {
            let candidate = Matching::new(chosen.clone());
            let report = report_from_stabilizer(self.g, stab, &candidate)?;
            return Ok(report.satisfies(self.mode).then_some(candidate));
        }
        let available: Vec<usize> = (0..self.edges.len())
            .filter(|&i| {
                let (u, v) = self.edges[i];
                !used[u] && !used[v]
            })
            .collect();
        if available.len() < self.m - chosen.len() {
            return Ok(None);
        }
        let mut uf = UnionFind::new(self.edges.len());
        for p in stab.generators() {
            for &i in &available {
                let (u, v) = self.edges[i];
                let (a, b) = (p.image(u), p.image(v));
                uf.union(i, self.index[&(a.min(b), a.max(b))]);
            }
        }
        let mut seen_roots = Vec::new();
        for i in available {
            let root = uf.find(i);
            if seen_roots.contains(&root) {
                continue;
            }
            seen_roots.push(root);
            let (u, v) = self.edges[i];
            chosen.push((u, v));
            used[u] = true;
            used[v] = true;
            let next = stabilizer_unchecked(self.group, &Matching::new(chosen.clone()));
            let found = self.extend(chosen, used, &next)?;
            chosen.pop();
            used[u] = false;
            used[v] = false;
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn check_connected_subgroup(g: &Graph, group: &PermGroup) -> Result<()> {
    check_automorphisms(g, group)?;
    if !is_connected(g) {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    Ok(())
}

fn vertex_transitive(g: &Graph, group: &PermGroup) -> bool {
    group.orbit(0).map_or(true, |o| o.len() == g.vertex_count())
}

/// Transitive on ordered pairs of adjacent vertices.
pub fn is_arc_transitive(g: &Graph, group: &PermGroup) -> Result<bool> {
    check_connected_subgroup(g, group)?;
    if g.vertex_count() == 1 {
        return Ok(true);
    }
    if !vertex_transitive(g, group) {
        return Ok(false);
    }
    let nbrs: Vec<usize> = g.neighbors(0).collect();
    Ok(group.point_stabilizer(0)?.orbit(nbrs[0])?.len() == nbrs.len())
}

/// Transitive on walks `(a, b, c)` with `a ~ b ~ c` and `a != c`.
pub fn is_2arc_transitive(g: &Graph, group: &PermGroup) -> Result<bool> {
    if !is_arc_transitive(g, group)? {
        return Ok(false);
    }
    if g.vertex_count() == 1 || g.degree(0) < 2 {
        return Ok(true);
    }
    let beta = g.neighbors(0).next().unwrap();
    let rest: Vec<usize> = g.neighbors(beta).filter(|&x| x != 0).collect();
    let stab = group.pointwise_stabilizer(&[0, beta])?;
    Ok(stab.orbit(rest[0])?.len() == rest.len())
}

/// Every vertex stabilizer acts primitively on the neighbourhood.
pub fn is_locally_primitive(g: &Graph, group: &PermGroup) -> Result<bool> {
    check_connected_subgroup(g, group)?;
    for orbit in group.orbits() {
        let alpha = orbit[0];
        let nbrs: Vec<usize> = g.neighbors(alpha).collect();
        if nbrs.len() <= 1 {
            continue;
        }
        let local = local_action(group, alpha, &nbrs)?;
        let domain: Vec<usize> = (0..nbrs.len()).collect();
        if !local.is_transitive(&domain)? || !local.is_primitive(&domain)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertex-transitive with every vertex stabilizer inducing the full
/// symmetric group on the neighbourhood.
pub fn is_locally_symmetric(g: &Graph, group: &PermGroup) -> Result<bool> {
    check_connected_subgroup(g, group)?;
    if !vertex_transitive(g, group) {
        return Ok(false);
    }
    let nbrs: Vec<usize> = g.neighbors(0).collect();
    let local = local_action(group, 0, &nbrs)?;
    Ok(local.order() == factorial(nbrs.len()))
}

fn local_action(group: &PermGroup, alpha: usize, nbrs: &[usize]) -> Result<PermGroup> {
    let stab = group.point_stabilizer(alpha)?;
    let cells: Vec<Vec<usize>> = nbrs.iter().map(|&v| vec![v]).collect();
    Ok(stab.induced_action(&cells)?.image)
}

/// For a `group`-permutable `m`-matching of a connected `group`-arc-transitive
/// graph: the degree is at least `m`, or `m = 3` and the graph is a cycle of
/// length divisible by 3. A `false` return is a counterexample.
pub fn degree_bound_check(g: &Graph, group: &PermGroup, m: &Matching) -> Result<bool> {
    check_connected_subgroup(g, group)?;
    if !is_arc_transitive(g, group)? {
        return Err(Error::Precondition("graph is not arc-transitive under the group".into()));
    }
    let report = analyze_matching(g, Some(group), m)?;
    if !report.is_matching {
        return Err(Error::InvalidMatching(m.to_string()));
    }
    if !report.permutable {
        return Err(Error::Precondition("matching is not permutable under the group".into()));
    }
    let degree = g.degree(0);
    let k = m.len();
    Ok(degree >= k || (k == 3 && g.is_cycle() && g.vertex_count() % 3 == 0))
}

#[cfg(test)]
mod tests;
