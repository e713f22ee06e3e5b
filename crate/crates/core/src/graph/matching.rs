use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// An ordered list of edges `(alpha_i, beta_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Endpoints in listing order `alpha_1, beta_1, alpha_2, ...`.
    pub fn vertices(&self) -> Vec<usize> {
        self.edges.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// Edges as sorted vertex pairs, the cell form used by group actions.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|&(a, b)| vec![a.min(b), a.max(b)])
            .collect()
    }

    /// Checks that every pair is an edge of `g` and the endpoints are distinct.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.vertex_count()];
        for &(a, b) in &self.edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if !g.has_edge(a, b) {
                return Err(Error::InvalidMatching(format!("{a}-{b} is not an edge")));
            }
            for x in [a, b] {
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidMatching(format!("vertex {x} is covered twice")));
                }
            }
        }
        Ok(())
    }

    pub fn is_matching_in(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.is_matching_in(g) && 2 * self.len() == g.vertex_count()
    }

    pub fn relabel(&self, p: &Permutation) -> Matching {
        Matching::new(
            self.edges
                .iter()
                .map(|&(a, b)| (p.image(a), p.image(b)))
                .collect(),
        )
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Matching::new(Vec::new()));
        }
        let edges = s
            .split(',')
            .map(|pair| {
                let (a, b) = pair
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("expected u-v, got {pair:?}")))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad vertex {t:?}")))
                };
                Ok((parse(a)?, parse(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matching::new(edges))
    }
}
