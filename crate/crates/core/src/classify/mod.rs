//! Catalogs of graphs with 2-transitive or permutable perfect matchings,
//! exhaustive small-order classification and catalog membership checks.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::autiso::{automorphism_group, canonical_form};
use crate::error::{Error, Result};
use crate::graph::*;
use crate::matchsym::{analyze_matching, find_matching, Mode};

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
}

/// The predicted connected graphs on `2m` vertices, pairwise non-isomorphic.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub m: usize,
    pub mode: Mode,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    /// Canonical graph6 strings, sorted.
    pub fn canonical_set(&self) -> BTreeSet<String> {
        self.entries
            .iter()
            .map(|e| canonical_form(&e.graph).canonical_graph6)
            .collect()
    }
}

/// Instantiates the families at `m`: `K_2m`, `K_m v co-K_m`, `K_m,m`,
/// `K_m mj K_m`, `K_m mj co-K_m`; the two Paley incidence graphs for prime
/// `m = 3 (mod 4)`; Petersen and `C_5 v C_5` at `m = 5`. In permutable mode
/// only the first five, plus `C_6` and `K_2,2,2` at `m = 3`. Isomorphic
/// instances are merged, keeping the first name.
pub fn theorem_catalog(m: usize, mode: Mode) -> Result<Catalog> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("catalog needs m >= 2, got {m}")));
    }
    let km = complete(m)?;
    let em = empty_graph(m)?;
    let identity: Vec<usize> = (0..m).collect();
    let mut raw: Vec<(String, Graph)> = vec![
        (format!("K{}", 2 * m), complete(2 * m)?),
        (format!("K{m}vK{m}bar"), join(&km, &em)),
        (format!("K{m}{m}"), complete_bipartite(m, m)?),
        (
            if m == 3 { "prism3".into() } else { format!("K{m}mjK{m}") },
            matching_join(&km, &km, &identity)?,
        ),
        (format!("K{m}mjK{m}bar"), matching_join(&km, &em, &identity)?),
    ];
    match mode {
        Mode::TwoTransitive => {
            if m % 4 == 3 && is_prime(m) {
                let (a, b) = paley_names(m);
                raw.push((a, paley_incidence(m)?));
                raw.push((b, paley_incidence_cliques(m)?));
            }
            if m == 5 {
                let c5 = cycle(5)?;
                raw.push(("Petersen".into(), odd_graph(3)?.graph));
                raw.push(("C5vC5".into(), join(&c5, &c5)));
            }
        }
        Mode::Permutable => {
            if m == 3 {
                raw.push(("C6".into(), cycle(6)?));
                raw.push((
                    "K222".into(),
                    complement(&disjoint_union(&disjoint_union(&complete(2)?, &complete(2)?), &complete(2)?)),
                ));
            }
        }
    }
    let mut seen = BTreeSet::new();
    let entries = raw
        .into_iter()
        .filter(|(_, g)| seen.insert(canonical_form(g).canonical_graph6))
        .map(|(name, graph)| CatalogEntry { name, graph })
        .collect();
    Ok(Catalog { m, mode, entries })
}

fn paley_names(q: usize) -> (String, String) {
    if q == 3 {
        ("C6".into(), "K222".into())
    } else {
        (format!("Paley{q}"), format!("PaleyCliques{q}"))
    }
}

/// One canonically labelled representative of each connected graph on `n`
/// vertices, sorted by graph6.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration limited to {MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    let classes: BTreeSet<String> = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if edges.len() + 1 < n {
                return None;
            }
            let g = Graph::from_edges(n, &edges).expect("pairs are in range");
            is_connected(&g).then(|| canonical_form(&g).canonical_graph6)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(classes
        .iter()
        .map(|s| graph6_decode(s).expect("canonical forms decode"))
        .collect())
}

/// All perfect matchings of `g`, pairing the smallest unmatched vertex first.
pub fn perfect_matchings(g: &Graph) -> Vec<Matching> {
    fn extend(g: &Graph, used: &mut [bool], chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        let Some(u) = used.iter().position(|&b| !b) else {
            out.push(Matching::new(chosen.clone()));
            return;
        };
        used[u] = true;
        for v in g.neighbors(u) {
            if !used[v] {
                used[v] = true;
                chosen.push((u, v));
                extend(g, used, chosen, out);
                chosen.pop();
                used[v] = false;
            }
        }
        used[u] = false;
    }
    let mut out = Vec::new();
    if g.vertex_count() % 2 == 0 {
        extend(g, &mut vec![false; g.vertex_count()], &mut Vec::new(), &mut out);
    }
    out
}

/// A class found by the exhaustive run, with its first qualifying matching.
#[derive(Clone, Debug)]
pub struct Observed {
    pub graph: Graph,
    pub canonical_graph6: String,
    pub witness: Matching,
}

/// Every connected graph on `2m` vertices with a perfect matching whose
/// stabilizer in the full automorphism group satisfies `mode`.
pub fn classify_perfect_matchings(m: usize, mode: Mode) -> Result<Vec<Observed>> {
    if !(2..=3).contains(&m) {
        return Err(Error::InvalidParameter(format!(
            "exhaustive classification covers m = 2, 3 only, got {m}"
        )));
    }
    let classes = enumerate_connected(2 * m)?;
    let found: Vec<Option<Observed>> = classes
        .par_iter()
        .map(|g| qualifying_matching(g, mode).map(|witness| Observed {
            graph: g.clone(),
            canonical_graph6: graph6_encode(g),
            witness,
        }))
        .collect();
    Ok(found.into_iter().flatten().collect())
}

fn qualifying_matching(g: &Graph, mode: Mode) -> Option<Matching> {
    let aut = automorphism_group(g);
    perfect_matchings(g).into_iter().find(|pm| {
        analyze_matching(g, Some(&aut), pm)
            .map(|r| r.satisfies(mode))
            .unwrap_or(false)
    })
}

/// Machine-readable comparison of the exhaustive run with the catalog.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub m: usize,
    pub mode: Mode,
    pub observed: Vec<String>,
    pub expected: Vec<String>,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Keyed by catalog name, or by canonical graph6 for unexpected classes;
    /// matchings refer to the canonical labelling.
    pub witnesses: BTreeMap<String, String>,
}

pub fn classification_report(m: usize, mode: Mode) -> Result<ClassificationReport> {
    let catalog = theorem_catalog(m, mode)?;
    let observed = classify_perfect_matchings(m, mode)?;
    let names: BTreeMap<String, String> = catalog
        .entries
        .iter()
        .map(|e| (canonical_form(&e.graph).canonical_graph6, e.name.clone()))
        .collect();
    let expected: Vec<String> = names.keys().cloned().collect();
    let observed_set: Vec<String> = observed.iter().map(|o| o.canonical_graph6.clone()).collect();
    let witnesses = observed
        .iter()
        .map(|o| {
            let key = names.get(&o.canonical_graph6).cloned().unwrap_or(o.canonical_graph6.clone());
            (key, o.witness.to_string())
        })
        .collect();
    Ok(ClassificationReport {
        m,
        mode,
        matches: observed_set == expected,
        observed: observed_set,
        expected,
        witnesses,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipEntry {
    pub name: String,
    pub vertices: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub m: usize,
    pub mode: Mode,
    pub entries: Vec<MembershipEntry>,
    pub all_witnessed: bool,
}

/// Searches each catalog entry for a perfect matching satisfying `mode` under
/// its full automorphism group.
pub fn verify_catalog_membership(m: usize, mode: Mode) -> Result<MembershipReport> {
    let catalog = theorem_catalog(m, mode)?;
    let entries: Vec<MembershipEntry> = catalog
        .entries
        .par_iter()
        .map(|e| {
            let aut = automorphism_group(&e.graph);
            let witness = find_matching(&e.graph, &aut, m, mode)?;
            Ok(MembershipEntry {
                name: e.name.clone(),
                vertices: e.graph.vertex_count(),
                witness: witness.map(|w| w.to_string()),
            })
        })
        .collect::<Result<_>>()?;
    let all_witnessed = entries.iter().all(|e| e.witness.is_some());
    Ok(MembershipReport {
        m,
        mode,
        entries,
        all_witnessed,
    })
}
