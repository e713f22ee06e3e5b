//! Ordered vertex partitions and equitable refinement.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::permgroup::Permutation;

/// Cells are contiguous ranges of `lab`; `cell[v]` is the start of the cell
/// holding `v` and `len[s]` the length of the cell starting at `s`.
#[derive(Clone, Debug)]
pub(super) struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    cell: Vec<usize>,
    len: Vec<usize>,
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        let mut len = vec![0; n];
        if n > 0 {
            len[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            pos: (0..n).collect(),
            cell: vec![0; n],
            len,
        }
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.len[start]]
    }

    pub fn order(&self) -> &[usize] {
        &self.lab
    }

    pub fn first_nontrivial_cell(&self) -> Option<usize> {
        let mut s = 0;
        while s < self.lab.len() {
            if self.len[s] > 1 {
                return Some(s);
            }
            s += self.len[s];
        }
        None
    }

    /// `v -> position of v`; only meaningful for discrete partitions.
    pub fn labeling(&self) -> Permutation {
        Permutation::from_images_unchecked(self.pos.clone())
    }

    /// Moves `v` to the front of its cell as a new singleton cell and
    /// returns that cell's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[v];
        let l = self.len[s];
        debug_assert!(l > 1);
        let p = self.pos[v];
        self.lab.swap(s, p);
        self.pos[self.lab[p]] = p;
        self.pos[v] = s;
        self.len[s] = 1;
        self.len[s + 1] = l - 1;
        for &x in &self.lab[s + 1..s + l] {
            self.cell[x] = s + 1;
        }
        s
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, using `splitters` as the initial queue. Every step depends only
    /// on cell positions and neighbour counts, so the result commutes with
    /// relabeling.
    pub fn refine(&mut self, g: &Graph, splitters: Vec<usize>) {
        let n = self.lab.len();
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut queued = vec![false; n];
        for s in splitters {
            if !queued[s] {
                queued[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0usize; n];
        let mut touched_vertices: Vec<usize> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut cell_touched = vec![false; n];
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            for i in w..w + self.len[w] {
                let x = self.lab[i];
                for y in g.neighbors(x) {
                    if count[y] == 0 {
                        touched_vertices.push(y);
                    }
                    count[y] += 1;
                    let c = self.cell[y];
                    if !cell_touched[c] {
                        cell_touched[c] = true;
                        touched_cells.push(c);
                    }
                }
            }
            touched_cells.sort_unstable();
            for &c in &touched_cells {
                cell_touched[c] = false;
                let l = self.len[c];
                if l == 1 {
                    continue;
                }
                let slice = &mut self.lab[c..c + l];
                slice.sort_by_key(|&v| count[v]);
                if count[slice[0]] == count[slice[l - 1]] {
                    continue;
                }
                let mut fragments: Vec<(usize, usize)> = Vec::new();
                let mut start = c;
                for i in c + 1..=c + l {
                    if i == c + l || count[self.lab[i]] != count[self.lab[start]] {
                        fragments.push((start, i - start));
                        start = i;
                    }
                }
                for &(fs, fl) in &fragments {
                    self.len[fs] = fl;
                    for i in fs..fs + fl {
                        let v = self.lab[i];
                        self.cell[v] = fs;
                        self.pos[v] = i;
                    }
                }
                let skip = if queued[c] {
                    None
                } else {
                    let mut largest = 0;
                    for (k, f) in fragments.iter().enumerate() {
                        if f.1 > fragments[largest].1 {
                            largest = k;
                        }
                    }
                    Some(largest)
                };
                for (k, &(fs, _)) in fragments.iter().enumerate() {
                    if Some(k) != skip && !queued[fs] {
                        queued[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            touched_cells.clear();
            for &y in &touched_vertices {
                count[y] = 0;
            }
            touched_vertices.clear();
        }
    }
}
