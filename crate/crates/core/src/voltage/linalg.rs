//! Dense linear algebra over `Z_p`, with vectors acting as rows (`h * M`).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vector = Vec<u32>;

pub fn add(a: &[u32], b: &[u32], p: u32) -> Vector {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

pub fn neg(a: &[u32], p: u32) -> Vector {
    a.iter().map(|x| (p - x) % p).collect()
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vector {
    add(a, &neg(b, p), p)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    pub p: u32,
    pub rows: Vec<Vector>,
}

impl Matrix {
    pub fn identity(k: usize, p: u32) -> Self {
        let rows = (0..k)
            .map(|i| (0..k).map(|j| u32::from(i == j)).collect())
            .collect();
        Matrix { p, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `h * self`.
    pub fn apply(&self, h: &[u32]) -> Vector {
        let k = self.rows.first().map_or(0, Vec::len);
        let mut out = vec![0u64; k];
        for (hi, row) in h.iter().zip(&self.rows) {
            if *hi == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = (*o + *hi as u64 * r as u64) % self.p as u64;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        Matrix {
            p: self.p,
            rows: self.rows.iter().map(|r| other.apply(r)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        reduce(&mut rows, &mut vec![Vec::new(); self.rows.len()], self.p).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows.iter().all(|r| r.len() == self.rows.len()) && self.rank() == self.dim()
    }
}

/// Row-reduces `a` in place, applying the same operations to `b`. Returns
/// the pivot columns; pivot rows are moved to the top and normalised.
fn reduce(a: &mut [Vector], b: &mut [Vector], p: u32) -> Vec<usize> {
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(sel) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, sel);
        b.swap(r, sel);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        for x in b[r].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let (ar, br) = (a[r].clone(), b[r].clone());
                for (x, y) in a[i].iter_mut().zip(&ar) {
                    *x = (*x + p - (f as u64 * *y as u64 % p as u64) as u32) % p;
                }
                for (x, y) in b[i].iter_mut().zip(&br) {
                    *x = (*x + p - (f as u64 * *y as u64 % p as u64) as u32) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A * M = B` for a square `M`, where `A` has full column rank.
pub fn solve(a: &[Vector], b: &[Vector], p: u32) -> Result<Matrix> {
    let k = a.first().map_or(0, Vec::len);
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let pivots = reduce(&mut a, &mut b, p);
    if pivots.len() != k {
        return Err(Error::Precondition("voltages do not span the voltage group".into()));
    }
    if b[k..].iter().any(|row| row.iter().any(|&x| x != 0)) {
        return Err(Error::Precondition("the automorphism does not lift".into()));
    }
    Ok(Matrix {
        p,
        rows: b[..k].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn solve_recovers_matrix() {
        let m = Matrix {
            p: 5,
            rows: vec![vec![1, 2], vec![3, 4]],
        };
        let a = vec![vec![1, 1], vec![0, 1], vec![2, 0]];
        let b: Vec<Vector> = a.iter().map(|r| m.apply(r)).collect();
        assert_eq!(solve(&a, &b, 5).unwrap(), m);
        assert!(m.is_invertible());
        let singular = Matrix {
            p: 5,
            rows: vec![vec![1, 2], vec![2, 4]],
        };
        assert!(!singular.is_invertible());
        let mut bad = b.clone();
        bad[2][0] = (bad[2][0] + 1) % 5;
        assert!(solve(&a, &bad, 5).is_err());
    }

    #[test]
    fn identity_is_neutral() {
        let m = Matrix {
            p: 3,
            rows: vec![vec![1, 2], vec![0, 2]],
        };
        assert_eq!(Matrix::identity(2, 3).mul(&m), m);
        assert_eq!(m.mul(&Matrix::identity(2, 3)), m);
    }
}
