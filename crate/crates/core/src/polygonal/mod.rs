//! Quotient graphs, orbit partitions and near-polygonal cycle systems.

mod cycles;


use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{girth, is_connected, Graph};
use crate::matchsym::is_2arc_transitive;
use crate::permgroup::{BlockSystem, PermGroup, Permutation};

pub use cycles::CycleSystem;

/// A quotient graph together with the block map it was built from.
#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub quotient: Graph,
    pub block_of: Vec<usize>,
    /// Every vertex has exactly one neighbour in each block adjacent to its
    /// own, and no block contains an edge.
    pub regular_cover: bool,
}

/// Graph on the blocks, adjacent when some edge joins them. With `group`
/// given, the partition must be invariant under it.
pub fn quotient_by_partition(
    g: &Graph,
    partition: &BlockSystem,
    group: Option<&PermGroup>,
) -> Result<QuotientResult> {
    let n = g.vertex_count();
    if !partition.covers(n) {
        return Err(Error::InvalidParameter(
            "partition does not cover every vertex".into(),
        ));
    }
    let block_of: Vec<usize> = partition.block_of.iter().map(|b| b.unwrap()).collect();
    if let Some(group) = group {
        if group.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: group.degree(),
            });
        }
        if !is_invariant(partition, &block_of, group.generators()) {
            return Err(Error::NotInvariant);
        }
    }

    let mut quotient = Graph::new(partition.len());
    let mut regular_cover = true;
    let mut hits = vec![0usize; partition.len()];
    for v in 0..n {
        hits.iter_mut().for_each(|h| *h = 0);
        for w in g.neighbors(v) {
            hits[block_of[w]] += 1;
            if block_of[w] == block_of[v] {
                regular_cover = false;
            } else {
                quotient.add_edge(block_of[v], block_of[w]);
            }
        }
        if hits.iter().any(|&h| h > 1) {
            regular_cover = false;
        }
    }
    Ok(QuotientResult {
        quotient,
        block_of,
        regular_cover,
    })
}

fn is_invariant(partition: &BlockSystem, block_of: &[usize], gens: &[Permutation]) -> bool {
    gens.iter().all(|p| {
        partition.blocks.iter().all(|b| {
            let target = block_of[p.image(b[0])];
            b.iter().all(|&x| block_of[p.image(x)] == target)
        })
    })
}

/// The orbits of `group` as a block system.
pub fn orbit_partition(group: &PermGroup) -> BlockSystem {
    BlockSystem::from_blocks(group.degree(), group.orbits())
        .expect("orbits partition the domain")
}

/// Every 2-path of `g` lies in exactly one cycle of `system`.
pub fn verify_cycle_system(g: &Graph, system: &CycleSystem) -> bool {
    if !system.cycles_are_valid(g) {
        return false;
    }
    let counts = system.two_path_counts();
    let two_paths: usize = (0..g.vertex_count())
        .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
        .sum();
    counts.len() == two_paths && counts.values().all(|&c| c == 1)
}

/// The 2-arc `(alpha, beta, gamma)` used by the certificate search: `alpha = 0`,
/// then smallest neighbours.
pub fn first_two_arc(g: &Graph) -> Option<(usize, usize, usize)> {
    if g.vertex_count() == 0 {
        return None;
    }
    let beta = g.neighbors(0).next()?;
    let gamma = g.neighbors(beta).find(|&x| x != 0)?;
    Some((0, beta, gamma))
}

/// Whether the pointwise stabilizer of the first 2-arc `(a, b, c)` fixes some
/// neighbour of `c` other than `b`. For a `(group, 2)`-arc-transitive graph this
/// decides whether a `group`-invariant near-polygonal cycle system exists.
pub fn fixes_next_vertex(g: &Graph, group: &PermGroup) -> Result<bool> {
    check_preconditions(g, group)?;
    let Some((alpha, beta, gamma)) = first_two_arc(g) else {
        return Ok(false);
    };
    let h = group.pointwise_stabilizer(&[alpha, beta, gamma])?;
    Ok(fixed_next(g, &h, beta, gamma).is_some())
}

fn fixed_next(g: &Graph, h: &PermGroup, beta: usize, gamma: usize) -> Option<usize> {
    g.neighbors(gamma)
        .filter(|&d| d != beta)
        .find(|&d| h.generators().iter().all(|p| p.fixes(d)))
}

fn check_preconditions(g: &Graph, group: &PermGroup) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if !is_2arc_transitive(g, group)? {
        return Err(Error::Precondition(
            "graph is not 2-arc-transitive under the group".into(),
        ));
    }
    Ok(())
}

/// A `group`-invariant cycle system covering each 2-path exactly once, built
/// from elements `x` of the normalizer of `H = group_(a,b,c)` with
/// `(a, b)^x = (b, c)`: the cycle is the orbit of `a` under `<x>` and the
/// system is its `group`-orbit. Among the verified systems the one with the
/// shortest cycles is returned. `None` when the stabilizer fixes no further
/// neighbour or no candidate verifies.
pub fn near_polygonal_certificate(g: &Graph, group: &PermGroup) -> Result<Option<CycleSystem>> {
    check_preconditions(g, group)?;
    let Some((alpha, beta, gamma)) = first_two_arc(g) else {
        return Ok(None);
    };
    let h = group.pointwise_stabilizer(&[alpha, beta, gamma])?;
    if fixed_next(g, &h, beta, gamma).is_none() {
        return Ok(None);
    }

    let shortest = girth(g);
    let mut tried = BTreeSet::new();
    let mut best: Option<CycleSystem> = None;
    let prune = |pairs: &[(usize, usize)]| {
        let &(b, img) = pairs.last().unwrap();
        (b != alpha || img == beta) && (b != beta || img == gamma)
    };
    let normalizes = |x: &Permutation| {
        h.generators()
            .iter()
            .all(|p| h.contains(&p.conjugate_by(x)).unwrap_or(false))
    };
    group.for_each_matching(&[alpha, beta], prune, normalizes, |x| {
        let cyc = orbit_cycle(x, alpha);
        if cyc.len() < 3 || best.as_ref().is_some_and(|b| b.length <= cyc.len()) {
            return true;
        }
        let key = normalize_cycle(&cyc);
        if !tried.insert(key.clone()) {
            return true;
        }
        let system = CycleSystem::new(cycle_orbit(group, key)).expect("cycles have equal length");
        if verify_cycle_system(g, &system) {
            let done = Some(system.length) == shortest;
            best = Some(system);
            return !done;
        }
        true
    });
    Ok(best)
}

fn orbit_cycle(x: &Permutation, start: usize) -> Vec<usize> {
    let mut cyc = vec![start];
    let mut v = x.image(start);
    while v != start {
        cyc.push(v);
        v = x.image(v);
    }
    cyc
}

/// Rotation starting at the smallest vertex, direction with the smaller
/// second vertex.
fn normalize_cycle(cyc: &[usize]) -> Vec<usize> {
    let l = cyc.len();
    let i = (0..l).min_by_key(|&i| cyc[i]).unwrap();
    let forward: Vec<usize> = (0..l).map(|k| cyc[(i + k) % l]).collect();
    let backward: Vec<usize> = (0..l).map(|k| cyc[(i + l - k) % l]).collect();
    forward.min(backward)
}

fn cycle_orbit(group: &PermGroup, start: Vec<usize>) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for p in group.generators() {
            let img: Vec<usize> = c.iter().map(|&v| p.image(v)).collect();
            let img = normalize_cycle(&img);
            if seen.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every cycle of length `len` in `g`, normalised and sorted.
pub fn all_cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, len: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(last, start) {
                out.insert(normalize_cycle(path));
            }
            return;
        }
        for w in g.neighbors(last) {
            if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    if len >= 3 {
        for v in 0..g.vertex_count() {
            extend(g, len, &mut vec![v], &mut out);
        }
    }
    out.into_iter().collect()
}
