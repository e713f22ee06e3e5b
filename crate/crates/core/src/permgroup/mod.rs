//! Permutation groups given by generators, backed by a stabilizer chain.

mod chain;
mod perm;
mod search;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use chain::Chain;
pub use perm::Permutation;
use search::Backtrack;

/// A group of permutations of `{0, .., degree-1}`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Chain,
}

/// A partition of (part of) the domain into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    pub block_of: Vec<Option<usize>>,
}

impl BlockSystem {
    /// Blocks are normalised: each sorted, ordered by smallest element.
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let mut block_of = vec![None; degree];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidParameter("empty block".into()));
            }
            for &x in b {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if block_of[x].is_some() {
                    return Err(Error::InvalidParameter(format!("point {x} in two blocks")));
                }
                block_of[x] = Some(i);
            }
        }
        Ok(BlockSystem { blocks, block_of })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn covers(&self, degree: usize) -> bool {
        self.block_of.len() == degree && self.block_of.iter().all(Option::is_some)
    }

    /// Trivial on its own domain: one block, or all blocks singletons.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() <= 1 || self.blocks.iter().all(|b| b.len() == 1)
    }
}

/// Image of a group acting on an ordered list of cells.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub image: PermGroup,
    pub kernel_order: BigUint,
}

impl PermGroup {
    pub fn from_generators(generators: Vec<Permutation>, degree: usize) -> Result<Self> {
        Self::with_base_prefix(generators, degree, &[])
    }

    /// Like [`from_generators`](Self::from_generators) but the base starts
    /// with `prefix`.
    pub fn with_base_prefix(
        generators: Vec<Permutation>,
        degree: usize,
        prefix: &[usize],
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        let chain = Chain::build(degree, &generators, prefix);
        Ok(PermGroup {
            degree,
            generators,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: Chain::build(degree, &[], &[]),
        }
    }

    /// `Sym({0..n-1})` on its natural generators.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).unwrap());
        }
        if degree >= 3 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
        }
        Self::from_generators(gens, degree).unwrap()
    }

    fn from_chain(chain: Chain) -> Self {
        let generators = chain.levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        PermGroup {
            degree: chain.degree,
            generators,
            chain,
        }
    }

    /// Same group, re-chained so that its base starts with `prefix`.
    pub fn rebase(&self, prefix: &[usize]) -> Result<Self> {
        let mut g = Self::with_base_prefix(self.chain.strong_generators(), self.degree, prefix)?;
        g.generators = self.generators.clone();
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    /// Lengths of the basic orbits along the base.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.iter().all(|l| l.orbit.len() == 1)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain.contains(p))
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.degree {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// `point^G` in ascending order.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        Ok(orbit_of(&self.generators, self.degree, point))
    }

    /// All orbits, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orb = orbit_of(&self.generators, self.degree, x);
                for &y in &orb {
                    seen[y] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        let chain = Chain::build(self.degree, &self.chain.strong_generators(), &prefix);
        Ok(Self::from_chain(chain.tail(prefix.len())))
    }

    /// Visits every element; intended for small groups and oracles.
    pub fn for_each_element<F: FnMut(&Permutation) -> bool>(&self, visit: F) {
        Backtrack::new(&self.chain, |_: &[(usize, usize)]| true, |_: &Permutation| true)
            .for_each(visit);
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_element(|g| {
            out.push(g.clone());
            true
        });
        out
    }

    /// Subgroup of elements satisfying `accept`, found by backtracking on a
    /// chain whose base starts with `base_prefix`. `prune` receives the
    /// partial base image as `(base point, image)` pairs and must accept
    /// every prefix of a subgroup element. `accept` must define a subgroup.
    pub fn subgroup_search<P, A>(&self, base_prefix: &[usize], prune: P, accept: A) -> PermGroup
    where
        P: Fn(&[(usize, usize)]) -> bool,
        A: Fn(&Permutation) -> bool,
    {
        let chain = Chain::build(self.degree, &self.chain.strong_generators(), base_prefix);
        let gens = Backtrack::new(&chain, prune, accept).subgroup_generators();
        PermGroup::with_base_prefix(gens, self.degree, base_prefix)
            .expect("search results have the group degree")
    }

    /// First element (in base-image order) satisfying the predicates.
    pub fn find_element<P, A>(&self, base_prefix: &[usize], prune: P, accept: A) -> Option<Permutation>
    where
        P: Fn(&[(usize, usize)]) -> bool,
        A: Fn(&Permutation) -> bool,
    {
        let chain = Chain::build(self.degree, &self.chain.strong_generators(), base_prefix);
        Backtrack::new(&chain, prune, accept).first()
    }

    /// Visits elements satisfying the predicates until `visit` returns false.
    pub fn for_each_matching<P, A, F>(&self, base_prefix: &[usize], prune: P, accept: A, visit: F)
    where
        P: Fn(&[(usize, usize)]) -> bool,
        A: Fn(&Permutation) -> bool,
        F: FnMut(&Permutation) -> bool,
    {
        let chain = Chain::build(self.degree, &self.chain.strong_generators(), base_prefix);
        Backtrack::new(&chain, prune, accept).for_each(visit);
    }

    /// Setwise stabilizer `G_set`.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<PermGroup> {
        let mut member = vec![false; self.degree];
        for &x in set {
            self.check_point(x)?;
            member[x] = true;
        }
        let mut prefix: Vec<usize> = set.to_vec();
        prefix.sort_unstable();
        prefix.dedup();
        let prune = |pairs: &[(usize, usize)]| {
            let &(b, img) = pairs.last().unwrap();
            member[b] == member[img]
        };
        let accept = |g: &Permutation| (0..self.degree).all(|x| member[x] == member[g.image(x)]);
        Ok(self.subgroup_search(&prefix, prune, accept))
    }

    /// Checks that `domain` is a union of orbits.
    fn check_invariant(&self, domain: &[usize]) -> Result<Vec<bool>> {
        let mut member = vec![false; self.degree];
        for &x in domain {
            self.check_point(x)?;
            member[x] = true;
        }
        for g in &self.generators {
            if domain.iter().any(|&x| !member[g.image(x)]) {
                return Err(Error::NotInvariant);
            }
        }
        Ok(member)
    }

    pub fn is_transitive(&self, domain: &[usize]) -> Result<bool> {
        self.check_invariant(domain)?;
        let Some(&first) = domain.first() else {
            return Ok(true);
        };
        let distinct: BTreeSet<usize> = domain.iter().copied().collect();
        Ok(self.orbit(first)?.len() == distinct.len())
    }

    pub fn is_2transitive(&self, domain: &[usize]) -> Result<bool> {
        if !self.is_transitive(domain)? {
            return Ok(false);
        }
        let distinct: BTreeSet<usize> = domain.iter().copied().collect();
        if distinct.len() <= 2 {
            return Ok(true);
        }
        let first = *distinct.iter().next().unwrap();
        let stab = self.point_stabilizer(first)?;
        Ok(stab.orbit(*distinct.iter().nth(1).unwrap())?.len() == distinct.len() - 1)
    }

    /// Smallest block system containing `pair` in one block, on the orbit of
    /// `pair.0`.
    pub fn minimal_block(&self, pair: (usize, usize)) -> Result<BlockSystem> {
        self.check_point(pair.0)?;
        self.check_point(pair.1)?;
        let domain = self.orbit(pair.0)?;
        if !domain.contains(&pair.1) {
            return Err(Error::NotTransitive);
        }
        let mut uf = UnionFind::new(self.degree);
        let mut queue = vec![pair];
        uf.union(pair.0, pair.1);
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let (a, b) = (g.image(x), g.image(y));
                if uf.union(a, b) {
                    queue.push((a, b));
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &x in &domain {
            groups.entry(uf.find(x)).or_default().push(x);
        }
        BlockSystem::from_blocks(self.degree, groups.into_values().collect())
    }

    pub fn is_primitive(&self, domain: &[usize]) -> Result<bool> {
        if !self.is_transitive(domain)? {
            return Err(Error::NotTransitive);
        }
        let distinct: BTreeSet<usize> = domain.iter().copied().collect();
        if distinct.len() <= 2 {
            return Ok(true);
        }
        let mut it = distinct.iter();
        let alpha = *it.next().unwrap();
        for &omega in it {
            if self.minimal_block((alpha, omega))?.len() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Action on an ordered list of disjoint cells.
    pub fn induced_action(&self, cells: &[Vec<usize>]) -> Result<InducedAction> {
        let mut cell_of = vec![None; self.degree];
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidParameter("empty cell".into()));
            }
            for &x in cell {
                self.check_point(x)?;
                if cell_of[x].is_some() {
                    return Err(Error::InvalidParameter(format!("point {x} in two cells")));
                }
                cell_of[x] = Some(i);
            }
        }
        let mut image_gens = Vec::new();
        for g in &self.generators {
            let mut images = Vec::with_capacity(cells.len());
            for cell in cells {
                let target = cell_of[g.image(cell[0])].ok_or(Error::CellsNotPermuted)?;
                if cells[target].len() != cell.len()
                    || cell.iter().any(|&x| cell_of[g.image(x)] != Some(target))
                {
                    return Err(Error::CellsNotPermuted);
                }
                images.push(target);
            }
            let p = Permutation::from_images(images).map_err(|_| Error::CellsNotPermuted)?;
            if !p.is_identity() {
                image_gens.push(p);
            }
        }
        let image = PermGroup::from_generators(image_gens, cells.len())?;
        let kernel_order = self.order() / image.order();
        Ok(InducedAction {
            image,
            kernel_order,
        })
    }

    pub fn is_symmetric_action(&self, cells: &[Vec<usize>]) -> Result<bool> {
        let action = self.induced_action(cells)?;
        Ok(action.image.order() == factorial(cells.len()))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

pub(crate) fn orbit_of(gens: &[Permutation], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut stack = vec![point];
    let mut out = vec![point];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the sets were distinct. The smaller root wins.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests;
