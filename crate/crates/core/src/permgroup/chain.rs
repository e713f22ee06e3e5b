//! Base and strong generating set (stabilizer chain) construction.
//!
//! Deterministic Schreier-Sims: new base points are always the smallest
//! point moved by the element that forced the extension.

use num_bigint::BigUint;

use super::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base_point: usize,
    pub gens: Vec<Permutation>,
    /// Orbit of the base point in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[x] = Some((u, u^-1))` with `base_point^u = x`.
    pub transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base_point: usize, gens: Vec<Permutation>, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            gens,
            orbit: Vec::new(),
            transversal: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        let mut transversal: Vec<Option<(Permutation, Permutation)>> = vec![None; degree];
        transversal[self.base_point] = Some((id.clone(), id));
        let mut orbit = vec![self.base_point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in &self.gens {
                let y = s.image(x);
                if transversal[y].is_none() {
                    let u = {
                        let ux = &transversal[x].as_ref().unwrap().0;
                        ux * s
                    };
                    let uinv = u.inverse();
                    transversal[y] = Some((u, uinv));
                    orbit.push(y);
                }
            }
        }
        self.orbit = orbit;
        self.transversal = transversal;
    }

    pub fn rep(&self, x: usize) -> &Permutation {
        &self.transversal[x].as_ref().expect("point not in basic orbit").0
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl Chain {
    /// Runs Schreier-Sims on `gens`, with `base_prefix` forced as the start
    /// of the base (points may be redundant).
    pub fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Chain {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for s in &strong {
            if base.iter().all(|&b| s.fixes(b)) {
                base.push(s.first_moved().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let level_gens = strong
                .iter()
                .filter(|s| base[..i].iter().all(|&c| s.fixes(c)))
                .cloned()
                .collect();
            levels.push(Level::new(b, level_gens, degree));
        }
        let mut chain = Chain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.failing_schreier_generator(level) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let b = h.first_moved().expect("residue is non-identity");
                        self.levels.push(Level::new(b, Vec::new(), self.degree));
                    }
                    for l in level + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn failing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &x in &lv.orbit {
            let ux = lv.rep(x);
            for s in &lv.gens {
                let y = s.image(x);
                let uy_inv = &lv.transversal[y].as_ref().unwrap().1;
                let sg = &(ux * s) * uy_inv;
                if sg.is_identity() {
                    continue;
                }
                let (h, j) = self.strip(sg, level + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Sifts `g` from `start`; returns the residue and the level it stopped
    /// at (`levels.len()` if it went all the way through).
    pub fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, lv) in self.levels.iter().enumerate().skip(start) {
            let x = g.image(lv.base_point);
            match &lv.transversal[x] {
                None => return (g, l),
                Some((_, uinv)) => g = &g * uinv,
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (h, j) = self.strip(g.clone(), 0);
            j == self.levels.len() && h.is_identity()
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// The chain of the pointwise stabilizer of the first `k` base points.
    pub fn tail(&self, k: usize) -> Chain {
        Chain {
            degree: self.degree,
            levels: self.levels[k.min(self.levels.len())..].to_vec(),
        }
    }
}
