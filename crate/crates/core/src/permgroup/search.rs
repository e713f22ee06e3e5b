//! Backtrack searches over a stabilizer chain.
//!
//! An element `g` of the group is `u_{L-1} ... u_1 u_0` with `u_i` taken
//! from the i-th transversal, and the image of base point `b_i` only depends
//! on `u_i ... u_0`. The search therefore fixes base images level by level
//! and lets a caller-supplied predicate prune partial base images.

use super::chain::Chain;
use super::perm::Permutation;

/// Partial base image: `pairs[l] = (b_l, b_l^g)` for the levels fixed so far.
pub(crate) type Prefix = [(usize, usize)];

pub(crate) struct Backtrack<'a, P, A>
where
    P: Fn(&Prefix) -> bool,
    A: Fn(&Permutation) -> bool,
{
    chain: &'a Chain,
    prune: P,
    accept: A,
}

impl<'a, P, A> Backtrack<'a, P, A>
where
    P: Fn(&Prefix) -> bool,
    A: Fn(&Permutation) -> bool,
{
    pub fn new(chain: &'a Chain, prune: P, accept: A) -> Self {
        Backtrack {
            chain,
            prune,
            accept,
        }
    }

    /// Candidate choices at `level` given the partial product `h`, sorted by
    /// the resulting base image.
    fn choices(&self, level: usize, h: &Permutation) -> Vec<(usize, usize)> {
        let lv = &self.chain.levels[level];
        let mut out: Vec<(usize, usize)> = lv.orbit.iter().map(|&x| (h.image(x), x)).collect();
        out.sort_unstable();
        out
    }

    /// Depth-first search for the first accepted element extending `pairs`.
    fn descend(
        &self,
        level: usize,
        h: &Permutation,
        pairs: &mut Vec<(usize, usize)>,
    ) -> Option<Permutation> {
        if level == self.chain.levels.len() {
            return (self.accept)(h).then(|| h.clone());
        }
        let b = self.chain.levels[level].base_point;
        for (img, x) in self.choices(level, h) {
            pairs.push((b, img));
            if (self.prune)(pairs) {
                let next = self.chain.levels[level].rep(x) * h;
                if let Some(g) = self.descend(level + 1, &next, pairs) {
                    pairs.pop();
                    return Some(g);
                }
            }
            pairs.pop();
        }
        None
    }

    /// Visits every accepted element (in base-image lexicographic order)
    /// until `visit` returns false.
    fn walk<F: FnMut(&Permutation) -> bool>(
        &self,
        level: usize,
        h: &Permutation,
        pairs: &mut Vec<(usize, usize)>,
        visit: &mut F,
    ) -> bool {
        if level == self.chain.levels.len() {
            if (self.accept)(h) {
                return visit(h);
            }
            return true;
        }
        let b = self.chain.levels[level].base_point;
        for (img, x) in self.choices(level, h) {
            pairs.push((b, img));
            let keep_going = if (self.prune)(pairs) {
                let next = self.chain.levels[level].rep(x) * h;
                self.walk(level + 1, &next, pairs, visit)
            } else {
                true
            };
            pairs.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    pub fn first(&self) -> Option<Permutation> {
        let id = Permutation::identity(self.chain.degree);
        self.descend(0, &id, &mut Vec::new())
    }

    pub fn for_each<F: FnMut(&Permutation) -> bool>(&self, mut visit: F) {
        let id = Permutation::identity(self.chain.degree);
        self.walk(0, &id, &mut Vec::new(), &mut visit);
    }

    /// Generators of the subgroup of accepted elements. The accepted set must
    /// be a subgroup and `prune` must never reject a prefix of one of its
    /// elements.
    pub fn subgroup_generators(&self) -> Vec<Permutation> {
        let levels = &self.chain.levels;
        let degree = self.chain.degree;
        let mut found: Vec<Permutation> = Vec::new();
        for i in (0..levels.len()).rev() {
            let b = levels[i].base_point;
            let mut pairs: Vec<(usize, usize)> =
                levels[..i].iter().map(|l| (l.base_point, l.base_point)).collect();
            let mut candidates: Vec<usize> = levels[i].orbit.clone();
            candidates.sort_unstable();
            for gamma in candidates {
                if gamma == b {
                    continue;
                }
                if orbit_contains(&found, degree, b, gamma) {
                    continue;
                }
                pairs.push((b, gamma));
                if (self.prune)(&pairs) {
                    let h = levels[i].rep(gamma).clone();
                    if let Some(g) = self.descend(i + 1, &h, &mut pairs) {
                        found.push(g);
                    }
                }
                pairs.pop();
            }
        }
        found
    }
}

fn orbit_contains(gens: &[Permutation], degree: usize, start: usize, target: usize) -> bool {
    if start == target {
        return true;
    }
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if y == target {
                return true;
            }
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}
