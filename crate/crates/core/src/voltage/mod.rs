//! Voltage assignments in `Z_p^k`, derived covers and lifted automorphisms.
//!
//! Cover vertex `(v, h)` is numbered `index(h) * |V| + v`, where `index(h)`
//! reads `h` as a little-endian base-`p` number.

pub mod linalg;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{graph6_decode, graph6_encode, is_connected, Graph, Matching};
use crate::permgroup::{PermGroup, Permutation, UnionFind};
use crate::polygonal::CycleSystem;
use linalg::{add, neg, sub, Matrix, Vector};

/// Default upper bound on cover size. Adjacency is stored as dense bit rows,
/// so memory grows with the square of the vertex count.
pub const DEFAULT_COVER_CAP: usize = 16_384;

fn is_prime(p: usize) -> bool {
    crate::graph::is_prime(p)
}

/// A spanning tree containing `required`, grown by union-find from the
/// required edges and then along a breadth-first scan from vertex 0 with
/// neighbours in ascending order. Edges come back sorted.
pub fn spanning_tree(g: &Graph, required: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    if !is_connected(g) {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut tree = Vec::new();
    for &(u, v) in required {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("{u}-{v} is not an edge")));
        }
        if !uf.union(u, v) {
            return Err(Error::CycleInRequiredEdges);
        }
        tree.push((u.min(v), u.max(v)));
    }
    if n > 0 {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if uf.union(u, w) {
                    tree.push((u.min(w), u.max(w)));
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    tree.sort_unstable();
    Ok(tree)
}

/// An assignment `xi` of `Z_p^k` vectors to arcs with `xi(v,u) = -xi(u,v)`
/// and zero voltage on a distinguished spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoltageAssignment {
    base: Graph,
    p: u32,
    k: usize,
    tree: Vec<(usize, usize)>,
    /// Voltage of each edge `(u, v)`, `u < v`, read from `u` to `v`.
    voltages: BTreeMap<(usize, usize), Vector>,
}

impl VoltageAssignment {
    pub fn new(
        base: Graph,
        p: usize,
        k: usize,
        tree: Vec<(usize, usize)>,
        voltages: BTreeMap<(usize, usize), Vector>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let p32 = p as u32;
        let mut normalized = BTreeMap::new();
        for (&(u, v), h) in &voltages {
            if !(u < base.vertex_count() && v < base.vertex_count() && base.has_edge(u, v)) {
                return Err(Error::InvalidParameter(format!("{u}-{v} is not an edge")));
            }
            if h.len() != k {
                return Err(Error::InvalidParameter(format!("voltage on {u}-{v} has wrong length")));
            }
            let h: Vector = h.iter().map(|x| x % p32).collect();
            let (key, value) = if u < v { ((u, v), h) } else { ((v, u), neg(&h, p32)) };
            if normalized.insert(key, value).is_some() {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} listed twice")));
            }
        }
        for (u, v) in base.edges() {
            normalized.entry((u, v)).or_insert_with(|| vec![0; k]);
        }
        let tree: Vec<(usize, usize)> = {
            let mut t: Vec<_> = tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            t.sort_unstable();
            t
        };
        let mut uf = UnionFind::new(base.vertex_count());
        for &(u, v) in &tree {
            if !(v < base.vertex_count() && base.has_edge(u, v)) || !uf.union(u, v) {
                return Err(Error::InvalidParameter("tree edges do not form a forest of the graph".into()));
            }
            if normalized[&(u, v)].iter().any(|&x| x != 0) {
                return Err(Error::InvalidParameter(format!("tree edge {u}-{v} has nonzero voltage")));
            }
        }
        if tree.len() + 1 != base.vertex_count() {
            return Err(Error::InvalidParameter("tree is not spanning".into()));
        }
        Ok(VoltageAssignment {
            base,
            p: p32,
            k,
            tree,
            voltages: normalized,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tree(&self) -> &[(usize, usize)] {
        &self.tree
    }

    pub fn cotree(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .filter(|e| self.tree.binary_search(e).is_err())
            .collect()
    }

    pub fn tree_contains(&self, u: usize, v: usize) -> bool {
        self.tree.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// `xi(u, v)`; panics if `u ~ v` fails.
    pub fn voltage(&self, u: usize, v: usize) -> Vector {
        let h = &self.voltages[&(u.min(v), u.max(v))];
        if u < v {
            h.clone()
        } else {
            neg(h, self.p)
        }
    }

    /// Sum of voltages along a walk given as a vertex sequence.
    pub fn walk_voltage(&self, walk: &[usize]) -> Result<Vector> {
        let mut total = vec![0; self.k];
        for w in walk.windows(2) {
            if w[0] >= self.base.vertex_count() || w[1] >= self.base.vertex_count() || !self.base.has_edge(w[0], w[1]) {
                return Err(Error::InvalidParameter(format!("{}-{} is not an edge", w[0], w[1])));
            }
            total = add(&total, &self.voltage(w[0], w[1]), self.p);
        }
        Ok(total)
    }

    /// Voltage of a closed walk `c[0], c[1], ..., c[l-1], c[0]`.
    pub fn cycle_voltage(&self, c: &[usize]) -> Result<Vector> {
        let mut walk = c.to_vec();
        if let Some(&first) = c.first() {
            walk.push(first);
        }
        self.walk_voltage(&walk)
    }

    pub fn cover_size(&self) -> u128 {
        self.base.vertex_count() as u128 * (self.p as u128).pow(self.k as u32)
    }

    fn index_of(&self, h: &[u32]) -> usize {
        h.iter().rev().fold(0, |acc, &x| acc * self.p as usize + x as usize)
    }

    fn vector_of(&self, mut index: usize) -> Vector {
        (0..self.k)
            .map(|_| {
                let x = (index % self.p as usize) as u32;
                index /= self.p as usize;
                x
            })
            .collect()
    }

    /// Cover vertex for `(v, h)`.
    pub fn vertex_of(&self, v: usize, h: &[u32]) -> usize {
        self.index_of(h) * self.base.vertex_count() + v
    }

    /// `(v, h)` for a cover vertex.
    pub fn fiber_of(&self, x: usize) -> (usize, Vector) {
        let n = self.base.vertex_count();
        (x % n, self.vector_of(x / n))
    }

    /// Parent pointers of the tree rooted at 0, in breadth-first order.
    fn tree_order(&self) -> Vec<(usize, usize)> {
        let n = self.base.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.tree {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        if n == 0 {
            return order;
        }
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// `c_v(g)`: voltage of the image under `g` of the tree path from 0 to `v`.
    fn path_offsets(&self, g: &Permutation) -> Vec<Vector> {
        let mut c = vec![vec![0; self.k]; self.base.vertex_count()];
        for (u, w) in self.tree_order() {
            c[w] = add(&c[u], &self.voltage(g.image(u), g.image(w)), self.p);
        }
        c
    }

    fn check_automorphism(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.base.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: self.base.vertex_count(),
                found: g.degree(),
            });
        }
        if !self.base.is_automorphism(g) {
            return Err(Error::NotAutomorphism);
        }
        Ok(())
    }

    fn linear_map_with_offsets(&self, g: &Permutation) -> Result<(VoltageLinearMap, Vec<Vector>)> {
        self.check_automorphism(g)?;
        let c = self.path_offsets(g);
        let cotree = self.cotree();
        let a: Vec<Vector> = cotree.iter().map(|&(u, v)| self.voltage(u, v)).collect();
        let b: Vec<Vector> = cotree
            .iter()
            .map(|&(u, v)| {
                let image = self.voltage(g.image(u), g.image(v));
                sub(&add(&c[u], &image, self.p), &c[v], self.p)
            })
            .collect();
        let matrix = if self.k == 0 {
            Matrix::identity(0, self.p)
        } else {
            linalg::solve(&a, &b, self.p)?
        };
        if !matrix.is_invertible() {
            return Err(Error::NotInvertible);
        }
        Ok((VoltageLinearMap { matrix }, c))
    }

    /// The linear map `M_g` on `Z_p^k` sending the voltage of each closed
    /// walk based at 0 to the voltage of its image under `g`.
    pub fn induced_voltage_map(&self, g: &Permutation) -> Result<VoltageLinearMap> {
        Ok(self.linear_map_with_offsets(g)?.0)
    }

    /// The lift `(v, h) -> (v^g, h M_g + c_v(g))`, checked to be a cover
    /// automorphism projecting onto `g`.
    pub fn lift_automorphism(&self, cover: &CoverGraph, g: &Permutation) -> Result<Permutation> {
        let (map, c) = self.linear_map_with_offsets(g)?;
        let n = self.base.vertex_count();
        let total = cover.graph.vertex_count();
        let images: Vec<usize> = (0..total)
            .map(|x| {
                let (v, h) = self.fiber_of(x);
                self.vertex_of(g.image(v), &add(&map.matrix.apply(&h), &c[v], self.p))
            })
            .collect();
        let lift = Permutation::from_images(images)?;
        let projects = (0..total).all(|x| lift.image(x) % n == g.image(x % n));
        if !projects || !cover.graph.is_automorphism(&lift) {
            return Err(Error::Precondition("lift failed the commuting-square check".into()));
        }
        Ok(lift)
    }

    /// The fiber translation `(v, h) -> (v, h + t)`.
    pub fn translation(&self, t: &[u32]) -> Permutation {
        let total = self.cover_size() as usize;
        let images = (0..total)
            .map(|x| {
                let (v, h) = self.fiber_of(x);
                self.vertex_of(v, &add(&h, t, self.p))
            })
            .collect();
        Permutation::from_images(images).expect("translations are bijective")
    }

    fn basis_translations(&self) -> Vec<Permutation> {
        (0..self.k)
            .map(|i| {
                let mut t = vec![0; self.k];
                t[i] = 1;
                self.translation(&t)
            })
            .collect()
    }

    pub fn covering_transformations(&self) -> PermGroup {
        let total = self.cover_size() as usize;
        PermGroup::from_generators(self.basis_translations(), total)
            .expect("translations have the cover degree")
    }

    /// Lifts of `group`'s generators together with the covering transformations.
    pub fn lift_group(&self, cover: &CoverGraph, group: &PermGroup) -> Result<PermGroup> {
        let mut gens = Vec::new();
        for g in group.generators() {
            gens.push(self.lift_automorphism(cover, g)?);
        }
        gens.extend(self.basis_translations());
        PermGroup::from_generators(gens, cover.graph.vertex_count())
    }

    /// `{(alpha_i, 0), (beta_i, 0)}` for a base matching inside the tree.
    pub fn lifted_tree_matching(&self, m: &Matching) -> Result<Matching> {
        m.validate(&self.base)?;
        if let Some(&(a, b)) = m.edges().iter().find(|&&(a, b)| !self.tree_contains(a, b)) {
            return Err(Error::Precondition(format!("matching edge {a}-{b} is not in the tree")));
        }
        let zero = vec![0; self.k];
        Ok(Matching::new(
            m.edges()
                .iter()
                .map(|&(a, b)| (self.vertex_of(a, &zero), self.vertex_of(b, &zero)))
                .collect(),
        ))
    }

    /// The offsets `h_i` for the neighbours `beta_i` of `alpha` (ascending):
    /// `h_i` is the total voltage of the cycles through `(beta_i, alpha,
    /// beta_j)`, `j != i`, each traversed from `alpha` towards `beta_i`.
    pub fn cycle_offsets(&self, alpha: usize, system: &CycleSystem) -> Result<Vec<(usize, Vector)>> {
        self.base.check_vertex(alpha)?;
        let nbrs: Vec<usize> = self.base.neighbors(alpha).collect();
        let mut out = Vec::with_capacity(nbrs.len());
        for &bi in &nbrs {
            let mut h = vec![0; self.k];
            for &bj in nbrs.iter().filter(|&&b| b != bi) {
                let through = system.oriented_through(bi, alpha, bj);
                if through.len() != 1 {
                    return Err(Error::Precondition(format!(
                        "{} cycles through the 2-path ({bi}, {alpha}, {bj})",
                        through.len()
                    )));
                }
                h = add(&h, &self.cycle_voltage(&through[0])?, self.p);
            }
            out.push((bi, h));
        }
        Ok(out)
    }

    /// `{(alpha, h_i), (beta_i, xi(alpha, beta_i) + h_i)}` with `h_i` from
    /// [`cycle_offsets`](Self::cycle_offsets).
    pub fn lifted_cycle_matching(&self, alpha: usize, system: &CycleSystem) -> Result<Matching> {
        let offsets = self.cycle_offsets(alpha, system)?;
        Ok(Matching::new(
            offsets
                .iter()
                .map(|(bi, h)| {
                    let hb = add(&self.voltage(alpha, *bi), h, self.p);
                    (self.vertex_of(alpha, h), self.vertex_of(*bi, &hb))
                })
                .collect(),
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut voltages = BTreeMap::new();
        for (&(u, v), h) in &self.voltages {
            voltages.insert(format!("{u}-{v}"), h.clone());
            voltages.insert(format!("{v}-{u}"), neg(h, self.p));
        }
        serde_json::to_value(AssignmentJson {
            base: graph6_encode(&self.base),
            p: self.p as usize,
            k: self.k,
            tree: self.tree.clone(),
            voltages,
        })
        .expect("assignment serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: AssignmentJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let base = graph6_decode(&raw.base)?;
        let mut voltages = BTreeMap::new();
        for (key, h) in raw.voltages {
            let (u, v) = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad arc key {key:?}")))?;
            if u < v {
                voltages.insert((u, v), h);
            }
        }
        let assignment = Self::new(base, raw.p, raw.k, raw.tree, voltages)?;
        let round = assignment.to_json();
        if round["voltages"] != value["voltages"] {
            return Err(Error::Parse("voltages are not anti-symmetric".into()));
        }
        Ok(assignment)
    }
}

#[derive(Serialize, Deserialize)]
struct AssignmentJson {
    base: String,
    p: usize,
    k: usize,
    tree: Vec<(usize, usize)>,
    voltages: BTreeMap<String, Vector>,
}

/// The standard assignment: the `i`-th cotree edge in lexicographic order,
/// read from its smaller end, gets the `i`-th basis vector of `Z_p^k`.
pub fn standard_assignment(g: &Graph, p: usize, tree: &[(usize, usize)]) -> Result<VoltageAssignment> {
    let tree_set: Vec<(usize, usize)> = {
        let mut t: Vec<_> = tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        t.sort_unstable();
        t
    };
    let cotree: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| tree_set.binary_search(e).is_err())
        .collect();
    let k = cotree.len();
    let voltages = cotree
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut h = vec![0; k];
            h[i] = 1;
            (e, h)
        })
        .collect();
    VoltageAssignment::new(g.clone(), p, k, tree_set, voltages)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VoltageLinearMap {
    pub matrix: Matrix,
}

/// A derived cover with its fiber bookkeeping.
#[derive(Clone, Debug)]
pub struct CoverGraph {
    pub graph: Graph,
    pub base_order: usize,
    pub p: usize,
    pub k: usize,
    pub connected: bool,
    /// Every cover vertex has exactly one neighbour over each neighbour of
    /// its projection.
    pub locally_bijective: bool,
}

impl CoverGraph {
    pub fn projection(&self, x: usize) -> usize {
        x % self.base_order
    }

    /// Fibers in base-vertex order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let n = self.base_order;
        (0..n)
            .map(|v| (v..self.graph.vertex_count()).step_by(n).collect())
            .collect()
    }
}

pub fn derived_cover(xi: &VoltageAssignment) -> Result<CoverGraph> {
    derived_cover_with_cap(xi, DEFAULT_COVER_CAP)
}

pub fn derived_cover_with_cap(xi: &VoltageAssignment, cap: usize) -> Result<CoverGraph> {
    let size = xi.cover_size();
    if size > cap as u128 {
        return Err(Error::CoverTooLarge { vertices: size, cap });
    }
    let total = size as usize;
    let n = xi.base.vertex_count();
    let fibers = total / n.max(1);
    let mut graph = Graph::new(total);
    for (u, v) in xi.base.edges() {
        let shift = xi.voltage(u, v);
        for idx in 0..fibers {
            let h = xi.vector_of(idx);
            graph.add_edge(idx * n + u, xi.vertex_of(v, &add(&h, &shift, xi.p)));
        }
    }
    let locally_bijective = (0..total).all(|x| {
        let v = x % n;
        let mut proj: Vec<usize> = graph.neighbors(x).map(|y| y % n).collect();
        proj.sort_unstable();
        proj.len() == xi.base.degree(v) && proj.iter().copied().eq(xi.base.neighbors(v))
    });
    Ok(CoverGraph {
        connected: is_connected(&graph),
        graph,
        base_order: n,
        p: xi.p(),
        k: xi.k,
        locally_bijective,
    })
}
