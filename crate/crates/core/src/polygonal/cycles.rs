use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of cycles of a common length, each given as a vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSystem {
    pub length: usize,
    pub cycles: Vec<Vec<usize>>,
}

impl CycleSystem {
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let length = cycles.first().map_or(0, Vec::len);
        if length < 3 || cycles.iter().any(|c| c.len() != length) {
            return Err(Error::InvalidParameter(
                "cycles must share a common length of at least 3".into(),
            ));
        }
        Ok(CycleSystem { length, cycles })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Each listed sequence is a cycle of `g` (distinct vertices, consecutive
    /// ones adjacent, closing edge present).
    pub fn cycles_are_valid(&self, g: &Graph) -> bool {
        self.cycles.iter().all(|c| {
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == c.len()
                && c.iter().all(|&v| v < g.vertex_count())
                && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
        })
    }

    /// Count of listed cycles through each 2-path, keyed by
    /// `(middle, min end, max end)`.
    pub fn two_path_counts(&self) -> HashMap<(usize, usize, usize), usize> {
        let mut counts = HashMap::new();
        for c in &self.cycles {
            let l = c.len();
            for i in 0..l {
                let (a, mid, b) = (c[(i + l - 1) % l], c[i], c[(i + 1) % l]);
                *counts.entry((mid, a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        counts
    }

    /// The cycles containing the 2-path `(beta, alpha, gamma)`, each rotated
    /// to start `alpha, beta, ...` and end `..., gamma`.
    pub fn oriented_through(&self, beta: usize, alpha: usize, gamma: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for c in &self.cycles {
            let l = c.len();
            let Some(i) = c.iter().position(|&v| v == alpha) else {
                continue;
            };
            let (prev, next) = (c[(i + l - 1) % l], c[(i + 1) % l]);
            let forward: Vec<usize> = (0..l).map(|k| c[(i + k) % l]).collect();
            if next == beta && prev == gamma {
                out.push(forward);
            } else if prev == beta && next == gamma {
                let mut backward = vec![alpha];
                backward.extend(forward[1..].iter().rev());
                out.push(backward);
            }
        }
        out
    }
}
