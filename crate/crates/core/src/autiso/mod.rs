//! Automorphism groups, isomorphism testing and canonical forms.
//!
//! Individualization-refinement: ordered partitions are refined to equitable
//! ones (1-dimensional Weisfeiler-Leman), the first non-singleton cell is
//! individualized, and leaves (discrete partitions) are compared through the
//! adjacency bit string of the relabeled graph. Leaves with equal strings
//! yield automorphisms, which prune the remaining tree.

mod partition;

use serde::Serialize;

use crate::graph::{graph6_encode, Graph};
use crate::permgroup::{PermGroup, Permutation, UnionFind};
use partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    /// Vertex `v` of the input becomes vertex `v^labeling` of the canonical graph.
    pub canonical_labeling: Permutation,
    pub canonical_graph6: String,
}

struct Leaf {
    key: Vec<u64>,
    labeling: Permutation,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> Self {
        let mut search = Search {
            g,
            first: None,
            best: None,
            generators: Vec::new(),
        };
        let n = g.vertex_count();
        let mut root = Partition::unit(n);
        root.refine(g, if n > 0 { vec![0] } else { Vec::new() });
        search.explore(&root, &mut Vec::new());
        search
    }

    /// Returns the depth to unwind to, if an automorphism made the rest of
    /// the current subtree redundant.
    fn explore(&mut self, part: &Partition, path: &mut Vec<usize>) -> Option<usize> {
        let Some(start) = part.first_nontrivial_cell() else {
            return self.leaf(part, path);
        };
        let mut candidates = part.cell(start).to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for w in candidates {
            if !explored.is_empty() && self.equivalent_to_explored(w, &explored, path) {
                continue;
            }
            explored.push(w);
            let mut child = part.clone();
            let singleton = child.individualize(w);
            child.refine(self.g, vec![singleton]);
            path.push(w);
            let jump = self.explore(&child, path);
            path.pop();
            if let Some(level) = jump {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, w: usize, explored: &[usize], path: &[usize]) -> bool {
        let fixing: Vec<&Permutation> = self
            .generators
            .iter()
            .filter(|p| path.iter().all(|&x| p.fixes(x)))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.vertex_count());
        for p in fixing {
            for (x, &y) in p.images().iter().enumerate() {
                uf.union(x, y);
            }
        }
        let root = uf.find(w);
        explored.iter().any(|&e| uf.find(e) == root)
    }

    fn leaf(&mut self, part: &Partition, path: &[usize]) -> Option<usize> {
        let labeling = part.labeling();
        let key = leaf_key(self.g, part.order());
        let leaf = Leaf {
            key,
            labeling,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                key: leaf.key.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("best is set with first");
        for reference in [first, best] {
            if leaf.key == reference.key {
                let aut = &leaf.labeling * &reference.labeling.inverse();
                assert!(self.g.is_automorphism(&aut), "leaf comparison produced a non-automorphism");
                let level = common_prefix(&leaf.path, &reference.path);
                if !aut.is_identity() {
                    self.generators.push(aut);
                }
                return Some(level);
            }
        }
        if leaf.key < best.key {
            self.best = Some(leaf);
        }
        None
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Upper-triangle adjacency bits of the relabeled graph in graph6 order,
/// packed most significant bit first so that `Vec` comparison is
/// lexicographic on the bit string.
fn leaf_key(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut key = vec![0u64; bits.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        let vj = order[j];
        for &vi in &order[..j] {
            if g.has_edge(vi, vj) {
                key[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    key
}

pub fn automorphism_group(g: &Graph) -> PermGroup {
    let search = Search::run(g);
    PermGroup::from_generators(search.generators, g.vertex_count())
        .expect("automorphisms have the graph's degree")
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let search = Search::run(g);
    let best = search.best.expect("the search always reaches a leaf");
    let canonical = g
        .relabel(&best.labeling)
        .expect("labeling has the graph's degree");
    CanonicalForm {
        canonical_labeling: best.labeling,
        canonical_graph6: graph6_encode(&canonical),
    }
}

/// An isomorphism `p` with `g1.relabel(p) == g2`, if one exists.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<Permutation> {
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || crate::graph::degree_sequence(g1) != crate::graph::degree_sequence(g2)
    {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1.canonical_graph6 != c2.canonical_graph6 {
        return None;
    }
    let witness = &c1.canonical_labeling * &c2.canonical_labeling.inverse();
    assert!(
        g1.relabel(&witness).ok().as_ref() == Some(g2),
        "canonical labelings must compose to an isomorphism"
    );
    Some(witness)
}
