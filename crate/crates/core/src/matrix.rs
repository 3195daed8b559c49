//! Dense matrices over an exact field, with just enough linear algebra for
//! the rest of the crate: multiplication, row reduction, rank, kernel bases
//! and row-space membership. Dimensions here are tiny (tens at most), so
//! plain Gaussian elimination is the right tool.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Stack `self` on top of `other` (same number of columns).
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn zero<F: Field<Elem = T>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = T>>(f: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
    }

    pub fn mul<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = f.zero();
            for k in 0..self.cols {
                acc = f.add(&acc, &f.mul(self.at(r, k), other.at(k, c)));
            }
            acc
        })
    }

    pub fn mul_vec<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    acc = f.add(&acc, &f.mul(self.at(r, k), &v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn add<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            f.add(self.at(r, c), other.at(r, c))
        })
    }

    pub fn scale<F: Field<Elem = T>>(&self, f: &F, s: &T) -> Self {
        Matrix::from_fn(self.rows, self.cols, |r, c| f.mul(self.at(r, c), s))
    }

    pub fn is_zero<F: Field<Elem = T>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    /// Block-diagonal sum.
    pub fn direct_sum<F: Field<Elem = T>>(&self, f: &F, other: &Self) -> Self {
        Matrix::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |r, c| match (r < self.rows, c < self.cols) {
                (true, true) => self.at(r, c).clone(),
                (false, false) => other.at(r - self.rows, c - self.cols).clone(),
                _ => f.zero(),
            },
        )
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref<F: Field<Elem = T>>(&mut self, f: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = f.sub(self.at(r, c), &f.mul(&factor, self.at(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank<F: Field<Elem = T>>(&self, f: &F) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Dimension of the null space (viewing the matrix as a map on column
    /// vectors).
    pub fn kernel_dim<F: Field<Elem = T>>(&self, f: &F) -> usize {
        self.cols - self.rank(f)
    }

    /// Basis of the null space, one kernel vector per returned row.
    pub fn kernel_basis<F: Field<Elem = T>>(&self, f: &F) -> Vec<Vec<T>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.at(r, fc));
                }
                v
            })
            .collect()
    }
}

/// Row space of a matrix in reduced echelon form, for fast membership tests.
#[derive(Debug, Clone)]
pub struct RowSpace<T> {
    rref: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Clone> RowSpace<T> {
    pub fn new<F: Field<Elem = T>>(f: &F, m: &Matrix<T>) -> Self {
        let mut rref = m.clone();
        let pivots = rref.rref(f);
        RowSpace { rref, pivots }
    }

    /// Row space of the column span of `m` (i.e. the span of its columns).
    pub fn of_column_span<F: Field<Elem = T>>(f: &F, m: &Matrix<T>) -> Self {
        RowSpace::new(f, &m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains<F: Field<Elem = T>>(&self, f: &F, v: &[T]) -> bool {
        assert_eq!(v.len(), self.rref.cols());
        let mut v = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            if !f.is_zero(&v[pc]) {
                let factor = v[pc].clone();
                for c in pc..v.len() {
                    v[c] = f.sub(&v[c], &f.mul(&factor, self.rref.at(r, c)));
                }
            }
        }
        v.iter().all(|x| f.is_zero(x))
    }

    /// Does this row space contain every row of `m`?
    pub fn contains_rows<F: Field<Elem = T>>(&self, f: &F, m: &Matrix<T>) -> bool {
        (0..m.rows()).all(|r| self.contains(f, m.row(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use num::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rref_and_rank_over_q() {
        let m = Matrix::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ]);
        assert_eq!(m.rank(&Rationals), 2);
        assert_eq!(m.kernel_dim(&Rationals), 1);
        let ker = m.kernel_basis(&Rationals);
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.mul_vec(&Rationals, v).iter().all(|x| Rationals.is_zero(x)));
        }
    }

    #[test]
    fn kernel_of_zero_and_empty_maps() {
        let z: Matrix<BigRational> = Matrix::zero(&Rationals, 2, 3);
        assert_eq!(z.kernel_dim(&Rationals), 3);
        // A map to the zero space: 0 rows, 3 columns. Everything is in the kernel.
        let to_zero: Matrix<BigRational> = Matrix::zero(&Rationals, 0, 3);
        assert_eq!(to_zero.kernel_dim(&Rationals), 3);
        // A map from the zero space has kernel 0.
        let from_zero: Matrix<BigRational> = Matrix::zero(&Rationals, 3, 0);
        assert_eq!(from_zero.kernel_dim(&Rationals), 0);
    }

    #[test]
    fn row_space_membership_mod_p() {
        let f = PrimeField::new(5).unwrap();
        let m = Matrix::from_rows(vec![vec![1u64, 2, 0], vec![0, 1, 4]]);
        let rs = RowSpace::new(&f, &m);
        assert_eq!(rs.dim(), 2);
        assert!(rs.contains(&f, &[1, 0, 2]));
        assert!(!rs.contains(&f, &[0, 0, 1]));
    }

    #[test]
    fn direct_sum_blocks() {
        let a = Matrix::from_rows(vec![vec![q(1)]]);
        let b = Matrix::from_rows(vec![vec![q(2), q(3)]]);
        let s = a.direct_sum(&Rationals, &b);
        assert_eq!(s.rows(), 2);
        assert_eq!(s.cols(), 3);
        assert_eq!(*s.at(0, 0), q(1));
        assert_eq!(*s.at(1, 1), q(2));
        assert_eq!(*s.at(0, 2), q(0));
    }
}
