//! Named graph families with fixed vertex numbering.

use super::{Graph, Matching};
use crate::error::{Error, Result};
use crate::permgroup::Permutation;

fn require_vertices(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph must have at least one vertex".into()));
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph> {
    require_vertices(n)?;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    require_vertices(n)?;
    Ok(Graph::new(n))
}

/// First part is `0..a`, second part `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("both parts must be nonempty".into()));
    }
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    require_vertices(n)?;
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

/// Outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram `5+i ~ 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// The odd graph `O_m` together with its natural `S_{2m-1}` action.
#[derive(Clone, Debug)]
pub struct OddGraph {
    pub m: usize,
    pub graph: Graph,
    /// Vertex `v` is the subset with bitmask `subsets[v]`; ground element
    /// `i` (1-based) is bit `i - 1`. Ordered colexicographically.
    pub subsets: Vec<u64>,
    /// Images of the ground permutations `(1 2)` and `(1 2 ... 2m-1)`.
    pub generators: Vec<Permutation>,
}

impl OddGraph {
    pub fn vertex_of(&self, mask: u64) -> Option<usize> {
        self.subsets.binary_search(&mask).ok()
    }

    /// Vertex of the subset given by 1-based ground elements.
    pub fn vertex_of_set(&self, elems: &[usize]) -> Option<usize> {
        let mut mask = 0u64;
        for &e in elems {
            if e == 0 || e > 2 * self.m - 1 {
                return None;
            }
            mask |= 1 << (e - 1);
        }
        self.vertex_of(mask)
    }

    /// The vertex permutation induced by a permutation of the 0-based ground set.
    pub fn ground_action(&self, sigma: &Permutation) -> Result<Permutation> {
        let ground = 2 * self.m - 1;
        if sigma.degree() != ground {
            return Err(Error::DegreeMismatch {
                expected: ground,
                found: sigma.degree(),
            });
        }
        let images = self
            .subsets
            .iter()
            .map(|&mask| {
                let mut out = 0u64;
                for i in 0..ground {
                    if mask >> i & 1 == 1 {
                        out |= 1 << sigma.image(i);
                    }
                }
                self.vertex_of(out).expect("image subset has the same size")
            })
            .collect();
        Permutation::from_images(images)
    }

    /// `{S_i, T_i}` with `S_i = {1..m} \ {i}` and `T_i = {i} ∪ {m+1..2m-2}`.
    pub fn permutable_matching(&self) -> Result<Matching> {
        let m = self.m;
        if m < 3 {
            return Err(Error::InvalidParameter(format!(
                "the odd-graph matching needs m >= 3, got {m}"
            )));
        }
        let edges = (1..=m)
            .map(|i| {
                let s: Vec<usize> = (1..=m).filter(|&j| j != i).collect();
                let mut t = vec![i];
                t.extend(m + 1..=2 * m - 2);
                (
                    self.vertex_of_set(&s).unwrap(),
                    self.vertex_of_set(&t).unwrap(),
                )
            })
            .collect();
        Ok(Matching::new(edges))
    }

    /// For `m = 3` (the Petersen graph): the perfect matching
    /// `{12,34}, {35,24}, {14,25}, {23,15}, {45,13}` on 2-subsets, whose
    /// stabilizer in the full automorphism group is 2-transitive on edges.
    pub fn two_transitive_matching(&self) -> Result<Matching> {
        if self.m != 3 {
            return Err(Error::InvalidParameter("defined for the Petersen graph only".into()));
        }
        let pairs = [
            ([1, 2], [3, 4]),
            ([3, 5], [2, 4]),
            ([1, 4], [2, 5]),
            ([2, 3], [1, 5]),
            ([4, 5], [1, 3]),
        ];
        let edges = pairs
            .iter()
            .map(|(a, b)| (self.vertex_of_set(a).unwrap(), self.vertex_of_set(b).unwrap()))
            .collect();
        Ok(Matching::new(edges))
    }
}

/// `O_m` for `2 <= m <= 8`.
pub fn odd_graph(m: usize) -> Result<OddGraph> {
    if !(2..=8).contains(&m) {
        return Err(Error::InvalidParameter(format!("odd graph needs 2 <= m <= 8, got {m}")));
    }
    let ground = 2 * m - 1;
    let k = (m - 1) as u32;
    let subsets: Vec<u64> = (0u64..1 << ground).filter(|x| x.count_ones() == k).collect();
    let n = subsets.len();
    let mut graph = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if subsets[u] & subsets[v] == 0 {
                graph.add_edge(u, v);
            }
        }
    }
    let mut og = OddGraph {
        m,
        graph,
        subsets,
        generators: Vec::new(),
    };
    let all: Vec<usize> = (0..ground).collect();
    let transposition = Permutation::from_cycles(ground, &[&[0, 1]])?;
    let long = Permutation::from_cycles(ground, &[&all])?;
    og.generators = vec![og.ground_action(&transposition)?, og.ground_action(&long)?];
    Ok(og)
}

pub fn hypercube(m: usize) -> Result<Graph> {
    if !(1..=20).contains(&m) {
        return Err(Error::InvalidParameter(format!("hypercube needs 1 <= m <= 20, got {m}")));
    }
    let n = 1usize << m;
    let mut g = Graph::new(n);
    for v in 0..n {
        for b in 0..m {
            let w = v ^ (1 << b);
            if w > v {
                g.add_edge(v, w);
            }
        }
    }
    Ok(g)
}

/// `Q_{m-1}` plus the edges joining each vertex to its bitwise complement.
pub fn folded_hypercube(m: usize) -> Result<Graph> {
    if !(3..=21).contains(&m) {
        return Err(Error::InvalidParameter(format!(
            "folded hypercube needs 3 <= m <= 21, got {m}"
        )));
    }
    let mut g = hypercube(m - 1)?;
    let mask = (1usize << (m - 1)) - 1;
    for v in 0..=mask {
        let w = v ^ mask;
        if w > v {
            g.add_edge(v, w);
        }
    }
    Ok(g)
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn paley_squares(q: usize) -> Result<Vec<bool>> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "Paley incidence graph needs a prime q = 3 (mod 4), got {q}"
        )));
    }
    let mut square = vec![false; q];
    for s in 0..q {
        square[s * s % q] = true;
    }
    Ok(square)
}

/// Bipartite graph on `GF(q) x {0,1}`: `(x,0) ~ (y,1)` iff `y - x` is a
/// square, 0 included. `(x,0)` is vertex `x`, `(x,1)` is vertex `q + x`.
pub fn paley_incidence(q: usize) -> Result<Graph> {
    let square = paley_squares(q)?;
    let mut g = Graph::new(2 * q);
    for x in 0..q {
        for y in 0..q {
            if square[(y + q - x) % q] {
                g.add_edge(x, q + y);
            }
        }
    }
    Ok(g)
}

/// [`paley_incidence`] with both sides turned into cliques.
pub fn paley_incidence_cliques(q: usize) -> Result<Graph> {
    let mut g = paley_incidence(q)?;
    for side in [0, q] {
        for x in 0..q {
            for y in x + 1..q {
                g.add_edge(side + x, side + y);
            }
        }
    }
    Ok(g)
}
