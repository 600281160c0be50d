//! Dense matrices over ℚ(q) and exact elimination.
//!
//! Pivots are chosen per column by size: units of 𝐀 (`±c·q^e`) first, then
//! the entry with the fewest terms and smallest degree spread. With unit
//! pivots the elimination never leaves 𝐀, which is the common case for the
//! PBW coordinate systems built in this crate.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::qcoeff::RatFunc;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = RatFunc::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[RatFunc] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Entrywise bar involution.
    pub fn bar(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(RatFunc::bar).collect() }
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &RatFunc)> {
        let cols = self.cols;
        self.data.iter().enumerate().map(move |(k, x)| ((k / cols, k % cols), x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.entries().all(|((r, c), x)| if r == c { x.is_one() } else { x.is_zero() })
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = RatFunc::zero();
                for (x, y) in self.row(r).iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += &(x * y);
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn choose_pivot(&self, col: usize, from: usize) -> Option<usize> {
        (from..self.rows)
            .filter(|&r| !self[(r, col)].is_zero())
            .min_by_key(|&r| {
                let x = &self[(r, col)];
                (!x.is_unit_of_a(), x.complexity(), r)
            })
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = self.choose_pivot(col, row) else { continue };
            self.swap_rows(row, p);
            let inv = self[(row, col)].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for c in col..self.cols {
                    let x = &self[(row, c)] * &inv;
                    self[(row, c)] = x;
                }
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for c in col..self.cols {
                    let pv = &self[(row, c)];
                    if pv.is_zero() {
                        continue;
                    }
                    let x = &self[(r, c)] - &(&factor * pv);
                    self[(r, c)] = x;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Solves `self · X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(Error::Singular(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, n + rhs.cols);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..rhs.cols {
                aug[(r, n + c)] = rhs[(r, c)].clone();
            }
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} system has rank {}", pivots.iter().filter(|&&p| p < n).count())));
        }
        Ok(Matrix::from_fn(n, rhs.cols, |r, c| aug[(r, n + c)].clone()))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve(&Matrix::identity(self.rows))
    }

    /// Unitriangular in the sense that the diagonal is 1 and everything
    /// strictly above (`upper == false`) or below (`upper == true`) the
    /// diagonal vanishes.
    pub fn is_unitriangular(&self, upper: bool) -> bool {
        self.is_square()
            && self.entries().all(|((r, c), x)| {
                if r == c {
                    x.is_one()
                } else if (r > c) == upper {
                    x.is_zero()
                } else {
                    true
                }
            })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = RatFunc;
    fn index(&self, (r, c): (usize, usize)) -> &RatFunc {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut RatFunc {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let x = &out[(r, c)] + &(a * b);
                        out[(r, c)] = x;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
