//! Row-major matrices over GF(q) with just enough linear algebra for code
//! verification: row products, Gram matrices, and rank by Gaussian
//! elimination.

use crate::field::{FieldCtx, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![FieldElem::ZERO; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_dot(&self, ctx: &FieldCtx, i: usize, j: usize) -> FieldElem {
        dot(ctx, self.row(i), self.row(j))
    }

    /// G * G^T.
    pub fn gram(&self, ctx: &FieldCtx) -> Matrix {
        let mut out = Matrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let v = self.row_dot(ctx, i, j);
                out.set(i, j, v);
                out.set(j, i, v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Rank over GF(q) by Gaussian elimination with first-nonzero pivots.
    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        let mut work = self.clone();
        let mut rank = 0;
        for col in 0..work.cols {
            if rank == work.rows {
                break;
            }
            let pivot = (rank..work.rows).find(|&r| !work.get(r, col).is_zero());
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for j in 0..work.cols {
                    let a = work.get(rank, j);
                    let b = work.get(pivot, j);
                    work.set(rank, j, b);
                    work.set(pivot, j, a);
                }
            }
            let inv = ctx.inv(work.get(rank, col)).expect("pivot is nonzero");
            for r in (rank + 1)..work.rows {
                let factor = ctx.mul(work.get(r, col), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..work.cols {
                    let v = ctx.sub(work.get(r, j), ctx.mul(factor, work.get(rank, j)));
                    work.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Select the given columns into a new matrix.
    pub fn select_cols(&self, sel: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, sel.len());
        for i in 0..self.rows {
            for (jj, &j) in sel.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }
}

pub fn dot(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = FieldElem::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = ctx.add(acc, ctx.mul(x, y));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn rank_and_gram() {
        let f = FieldCtx::new(3, 1).unwrap();
        let mut g = Matrix::zeros(2, 3);
        g.set(0, 0, f.one());
        g.set(0, 1, f.one());
        g.set(1, 0, f.scalar(2));
        g.set(1, 1, f.scalar(2));
        assert_eq!(g.rank(&f), 1);
        g.set(1, 2, f.one());
        assert_eq!(g.rank(&f), 2);
        let gram = g.gram(&f);
        // row0 . row0 = 1 + 1 = 2
        assert_eq!(gram.get(0, 0), f.scalar(2));
        assert_eq!(gram.get(0, 1), gram.get(1, 0));
    }

    #[test]
    fn column_selection() {
        let f = FieldCtx::new(3, 1).unwrap();
        let mut g = Matrix::zeros(1, 3);
        for j in 0..3 {
            g.set(0, j, f.scalar(j as u64));
        }
        let s = g.select_cols(&[2, 0]);
        assert_eq!(s.get(0, 0), f.scalar(2));
        assert_eq!(s.get(0, 1), f.zero());
    }
}
