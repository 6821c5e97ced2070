//! Exact linear algebra over the rationals: rank, RREF, solving, nullspaces.

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> RatMat {
        RatMat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> RatMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Solves `A x = b` for a matrix with full column rank.
    ///
    /// Errors: `RankDeficient` when the columns are dependent,
    /// `InconsistentSystem` when no rational solution exists.
    pub fn solve_full_rank(&self, b: &[BigRational]) -> Result<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = RatMat::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(Error::InconsistentSystem);
        }
        if pivots.len() < self.cols {
            return Err(Error::RankDeficient);
        }
        // pivots == [0, 1, .., cols-1]; solution is the last column of the
        // first `cols` rows
        Ok((0..self.cols).map(|r| aug.get(r, self.cols).clone()).collect())
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c) * &x[c])
                    .sum::<BigRational>()
            })
            .collect()
    }
}

/// Incremental row-space builder: feed rows one at a time, query the rank.
/// Zero and dependent rows are cheap to discard.
pub struct RowSpace {
    cols: usize,
    /// Rows in echelon form, each normalized to leading coefficient 1,
    /// keyed by pivot column.
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl RowSpace {
    pub fn new(cols: usize) -> RowSpace {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a row; returns true if it enlarged the span.
    pub fn insert(&mut self, mut row: Vec<BigRational>) -> bool {
        assert_eq!(row.len(), self.cols);
        for (pivot, basis_row) in &self.rows {
            if !row[*pivot].is_zero() {
                let factor = row[*pivot].clone();
                for c in *pivot..self.cols {
                    row[c] = &row[c] - &factor * &basis_row[c];
                }
            }
        }
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[pivot].recip();
        for c in pivot..self.cols {
            row[c] = &row[c] * &inv;
        }
        self.rows.push((pivot, row));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Exact conversion to a nonnegative machine integer, if the value is one.
pub fn to_natural(v: &BigRational) -> Option<u64> {
    if !v.is_integer() || v < &BigRational::zero() {
        return None;
    }
    use num::ToPrimitive;
    v.to_integer().to_u64()
}
