//! Dense exact matrices and fraction-free (Bareiss) elimination.
//!
//! Elimination runs over an integral domain `S` with exact division; solutions
//! and nullspace vectors are produced in the fraction field `Ratio<S>`.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{Coefficient, ExactInteger};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Coefficient> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for k in 0..size {
            m.data[k * size + k] = S::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n_rows = rows.len();
        Self {
            rows: n_rows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<S>]) -> Self {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (c, column) in columns.iter().enumerate() {
            assert_eq!(column.len(), rows, "ragged columns");
            for (r, v) in column.iter().enumerate() {
                m.data[r * cols + c] = v.clone();
            }
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn map<T: Coefficient>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Matrix product; skips zero entries of `self`, which dominate here.
    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let slot = &mut out.data[r * other.cols + c];
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / cols, k % cols, v))
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            list.entry(&&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        list.finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("right-hand side column {0} is not in the column space")]
    Inconsistent(usize),
    #[error("system has {free} free unknowns; solution not unique")]
    Underdetermined { free: usize },
}

/// Row echelon form produced by fraction-free elimination.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    pub matrix: Matrix<S>,
    /// Pivot column of each leading row, in row order.
    pub pivots: Vec<usize>,
    /// Number of row swaps performed.
    pub swaps: usize,
}

impl<S: ExactInteger> Echelon<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Back-substitutes `x[free] = 1` for one free column `free` of the
    /// first `width` columns, all other free unknowns zero, in the
    /// homogeneous system. With `rhs = Some(c)` solves against column `c`
    /// instead and ignores `free`.
    fn back_substitute(
        &self,
        width: usize,
        free: Option<usize>,
        rhs: Option<usize>,
    ) -> Vec<Ratio<S>> {
        let mut x = vec![Ratio::<S>::zero(); width];
        if let Some(f) = free {
            x[f] = Ratio::one();
        }
        for (r, &pc) in self.pivots.iter().enumerate().rev() {
            let row = self.matrix.row(r);
            let mut acc = match rhs {
                Some(c) => Ratio::from_integer(row[c].clone()),
                None => Ratio::zero(),
            };
            for (j, xj) in x.iter().enumerate().take(width).skip(pc + 1) {
                if !row[j].is_zero() && !xj.is_zero() {
                    acc = acc - xj.clone() * Ratio::from_integer(row[j].clone());
                }
            }
            x[pc] = acc / Ratio::from_integer(row[pc].clone());
        }
        x
    }
}

/// Bareiss elimination to row echelon form. Every intermediate entry is a
/// minor of the input, so all divisions are exact.
pub fn fraction_free_echelon<S: ExactInteger>(mut m: Matrix<S>) -> Echelon<S> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut previous = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&p| !m.get(p, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
            swaps += 1;
        }
        let pivot = m.get(r, c).clone();
        for i in r + 1..rows {
            let lead = m.get(i, c).clone();
            for j in c + 1..cols {
                let upper = m.get(r, j);
                let current = m.get(i, j);
                if lead.is_zero() && current.is_zero() {
                    continue;
                }
                let value = (pivot.clone() * current.clone() - lead.clone() * upper.clone())
                    / previous.clone();
                m.set(i, j, value);
            }
            m.set(i, c, S::zero());
        }
        previous = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon {
        matrix: m,
        pivots,
        swaps,
    }
}

pub fn rank<S: ExactInteger>(m: &Matrix<S>) -> usize {
    fraction_free_echelon(m.clone()).rank()
}

pub fn determinant<S: ExactInteger>(m: &Matrix<S>) -> S {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let size = m.rows;
    if size == 0 {
        return S::one();
    }
    let e = fraction_free_echelon(m.clone());
    if e.rank() < size {
        return S::zero();
    }
    let last = e.matrix.get(size - 1, size - 1).clone();
    if e.swaps.is_multiple_of(2) {
        last
    } else {
        -last
    }
}

/// A basis of the right nullspace `{x : m x = 0}` over the fraction field.
pub fn nullspace<S: ExactInteger>(m: &Matrix<S>) -> Vec<Vec<Ratio<S>>> {
    let width = m.cols;
    let e = fraction_free_echelon(m.clone());
    let mut is_pivot = vec![false; width];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..width)
        .filter(|&c| !is_pivot[c])
        .map(|f| e.back_substitute(width, Some(f), None))
        .collect()
}

/// Solves `a x = b` exactly for every column of `b`. The solution must exist
/// and be unique.
pub fn solve<S: ExactInteger>(
    a: &Matrix<S>,
    b: &Matrix<S>,
) -> Result<Matrix<Ratio<S>>, SolveError> {
    assert_eq!(a.rows, b.rows, "dimension mismatch");
    let width = a.cols;
    let mut aug = Matrix::zeros(a.rows, width + b.cols);
    for r in 0..a.rows {
        for c in 0..width {
            aug.set(r, c, a.get(r, c).clone());
        }
        for c in 0..b.cols {
            aug.set(r, width + c, b.get(r, c).clone());
        }
    }
    let e = fraction_free_echelon(aug);
    if let Some(&p) = e.pivots.iter().find(|&&p| p >= width) {
        return Err(SolveError::Inconsistent(p - width));
    }
    if e.rank() < width {
        return Err(SolveError::Underdetermined {
            free: width - e.rank(),
        });
    }
    let columns: Vec<Vec<Ratio<S>>> = (0..b.cols)
        .map(|c| e.back_substitute(width, None, Some(width + c)))
        .collect();
    Ok(Matrix::from_columns(&columns))
}
