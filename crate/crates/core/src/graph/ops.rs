//! Graph products, subdivisions and basic metric queries.

use super::{Graph, Matching};
use crate::error::{Error, Result};

/// Disjoint union of `g1` and `g2` plus every edge between them.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let mut g = disjoint_union(g1, g2);
    for u in 0..n1 {
        for v in 0..n2 {
            g.add_edge(u, n1 + v);
        }
    }
    g
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.vertex_count();
    let mut g = Graph::new(n1 + g2.vertex_count());
    for (u, v) in g1.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        g.add_edge(n1 + u, n1 + v);
    }
    g
}

/// Disjoint union plus the edges `{v, phi[v]}` (`phi[v]` indexes `g2`).
pub fn matching_join(g1: &Graph, g2: &Graph, phi: &[usize]) -> Result<Graph> {
    let n = g1.vertex_count();
    if g2.vertex_count() != n || phi.len() != n {
        return Err(Error::InvalidParameter(format!(
            "matching join needs equal orders and a full bijection ({} / {} vertices, {} images)",
            n,
            g2.vertex_count(),
            phi.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in phi {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidParameter("phi is not a bijection".into()));
        }
    }
    let mut g = disjoint_union(g1, g2);
    for (v, &w) in phi.iter().enumerate() {
        g.add_edge(v, n + w);
    }
    Ok(g)
}

/// Lexicographic product with the edgeless graph on `m` vertices:
/// `(eta, i)` is vertex `i * n + eta`.
pub fn composition(g: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("composition needs m >= 1".into()));
    }
    let n = g.vertex_count();
    let mut out = Graph::new(n * m);
    for (u, v) in g.edges() {
        for i in 0..m {
            for j in 0..m {
                out.add_edge(i * n + u, j * n + v);
            }
        }
    }
    Ok(out)
}

fn subdivide(g: &Graph, inserted: impl Fn(usize, usize) -> usize) -> (Graph, Vec<(usize, usize)>) {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    let mut next = n;
    for (u, v) in g.edges() {
        let k = inserted(u, v);
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev, next));
            origin.push((u, v));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    let out = Graph::from_edges(next, &edges).expect("subdivision edges are in range");
    (out, origin)
}

/// Subdivides every edge once. The second component lists, for each new
/// vertex `n + i`, the original edge it subdivides.
pub fn subdivide_all(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    subdivide(g, |_, _| 1)
}

pub fn subdivide_non_matching(g: &Graph, m: &Matching) -> Result<Graph> {
    m.validate(g)?;
    Ok(subdivide(g, |u, v| usize::from(!m.contains_edge(u, v))).0)
}

/// Replaces each matching edge by a path of length 3.
pub fn subdivide_matching_twice(g: &Graph, m: &Matching) -> Result<Graph> {
    m.validate(g)?;
    Ok(subdivide(g, |u, v| if m.contains_edge(u, v) { 2 } else { 0 }).0)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut out = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// Subgraph on `vertices`, renumbered in the given order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    for &v in vertices {
        g.check_vertex(v)?;
    }
    let mut out = Graph::new(vertices.len());
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if u == v {
                return Err(Error::InvalidParameter(format!("vertex {u} listed twice")));
            }
            if g.has_edge(u, v) {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

/// Path length from `u` to `v`, or `None` when they are disconnected.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(g.distances_from(u)[v])
}

pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in g.distances_from(s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() == 0 || g.distances_from(0).iter().all(Option::is_some)
}

/// Degrees in non-increasing order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
