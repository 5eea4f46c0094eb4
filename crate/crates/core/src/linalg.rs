//! Exact dense linear algebra over ℚ by fraction-based Gaussian elimination.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn set_column(&mut self, c: usize, values: &[Rational]) {
        assert_eq!(values.len(), self.rows);
        for (r, v) in values.iter().enumerate() {
            self[(r, c)] = v.clone();
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |m| m.cols);
        assert!(blocks.iter().all(|m| m.cols == cols));
        Matrix {
            rows: blocks.iter().map(|m| m.rows).sum(),
            cols,
            data: blocks.iter().flat_map(|m| m.data.iter().cloned()).collect(),
        }
    }

    /// Reduces in place to row echelon form; returns the pivot columns and
    /// the sign of the row permutation applied.
    fn echelon(&mut self) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut flipped = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                flipped = !flipped;
            }
            let pivot = self[(r, c)].clone();
            for i in r + 1..self.rows {
                if self[(i, c)].is_zero() {
                    continue;
                }
                let factor = &self[(i, c)] / &pivot;
                for j in c..self.cols {
                    let delta = &factor * &self[(r, j)];
                    self[(i, j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, flipped)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().0.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let (pivots, flipped) = m.echelon();
        if pivots.len() < self.rows {
            return Rational::zero();
        }
        let mut det = (0..self.rows).fold(Rational::one(), |acc, i| acc * &m[(i, i)]);
        if flipped {
            det = -det;
        }
        det
    }

    /// Solves `self · x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(rhs.len(), self.rows);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, n + 1);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n)] = rhs[i].clone();
        }
        let (pivots, _) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = aug[(i, n)].clone();
            for j in i + 1..n {
                acc -= &aug[(i, j)] * &x[j];
            }
            x[i] = acc / &aug[(i, i)];
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn determinant_with_swaps() {
        assert_eq!(m(&[&[0, 2], &[1, 0]]).determinant(), int(-2));
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).determinant(), int(6));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
    }

    #[test]
    fn rank_and_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.nullity(), 1);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn solve_exact() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[int(1), int(0)]).unwrap();
        assert_eq!(x, vec![frac(3, 5), frac(-1, 5)]);
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[int(1), int(0)]).is_none());
    }
}
