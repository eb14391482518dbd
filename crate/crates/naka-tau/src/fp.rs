//! Dense linear algebra over a small prime field F_p.
//!
//! The oracle only ever deals with matrices of a few dozen rows, so a
//! naive row-reduction implementation is plenty.

/// A dense matrix over F_p, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> FpMat {
        FpMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> FpMat {
        let mut m = FpMat::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: u64, rows: Vec<Vec<u64>>) -> FpMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.into_iter().map(|x| x % p));
        }
        FpMat { p, rows: r, cols: c, data }
    }

    pub fn mul(&self, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = FpMat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = (out[(i, j)] + a * other[(k, j)]) % self.p;
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &FpMat, scale: u64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for i in 0..self.data.len() {
            self.data[i] = (self.data[i] + scale * other.data[i]) % self.p;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Row-reduce in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self[(r, col)] != 0) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = mod_inverse(self[(row, col)], self.p);
            for j in 0..self.cols {
                self[(row, j)] = self[(row, j)] * inv % self.p;
            }
            for r in 0..self.rows {
                if r != row && self[(r, col)] != 0 {
                    let factor = self[(r, col)];
                    for j in 0..self.cols {
                        let sub = factor * self[(row, j)] % self.p;
                        self[(r, j)] = (self[(r, j)] + self.p - sub) % self.p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the kernel (as row vectors of length `cols`).
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                // pivot row ri: x_pc + sum coeff * x_free = 0
                let coeff = m[(ri, free)];
                if coeff != 0 {
                    v[pc] = (self.p - coeff) % self.p;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `x * self = target` for a single row vector `target`;
    /// `None` when inconsistent. (Left-multiplication by a row.)
    pub fn solve_left(&self, target: &[u64]) -> Option<Vec<u64>> {
        // transpose and solve self^T x^T = target^T by augmenting
        assert_eq!(target.len(), self.cols);
        let mut aug = FpMat::zeros(self.p, self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(j, i)] = self[(i, j)];
            }
        }
        for j in 0..self.cols {
            aug[(j, self.rows)] = target[j] % self.p;
        }
        let pivots = aug.row_reduce();
        if pivots.contains(&self.rows) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![0u64; self.rows];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(ri, self.rows)];
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = u64;
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}

pub fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is a small prime; a != 0 mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let m = FpMat::from_rows(2, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        // check the kernel vector really is in the kernel
        let v = FpMat::from_rows(2, vec![ker[0].clone()]);
        let mt = {
            let mut t = FpMat::zeros(2, 3, 3);
            for i in 0..3 {
                for j in 0..3 {
                    t[(i, j)] = m[(j, i)];
                }
            }
            t
        };
        assert!(v.mul(&mt).is_zero());
    }

    #[test]
    fn solve_left_works() {
        let m = FpMat::from_rows(3, vec![vec![1, 2], vec![0, 1]]);
        let x = m.solve_left(&[1, 0]).unwrap();
        // x[0]*row0 + x[1]*row1 = (1,0)
        let got = (x[0] % 3, (x[0] * 2 + x[1]) % 3);
        assert_eq!(got, (1, 0));
        let inconsistent = FpMat::from_rows(3, vec![vec![0, 0]]);
        assert!(inconsistent.solve_left(&[1, 0]).is_none());
    }

    #[test]
    fn inverse() {
        for p in [2u64, 3, 5] {
            for a in 1..p {
                assert_eq!(a * mod_inverse(a, p) % p, 1);
            }
        }
    }
}
