//! Dense matrices over the rationals.

use std::fmt;
use std::ops::Index;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{dot, format_rational, QVector, Rational};

/// A dense row-major matrix of rationals. Degenerate shapes (0×n, m×0)
/// are legal and keep their column count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = crate::rational::rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<QVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(
                "matrix rows have unequal lengths".into(),
            ));
        }
        Ok(QMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// An empty (0-row) matrix with a fixed column count.
    pub fn empty(cols: usize) -> Self {
        Self::zeros(0, cols)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> QVector {
        self.row(i).to_vec()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<QVector> {
        self.rows_iter().map(|r| r.to_vec()).collect()
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn push_row(&mut self, row: QVector) -> Result<()> {
        if self.rows == 0 && self.data.is_empty() && self.cols == 0 {
            self.cols = row.len();
        }
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} pushed to {}-column matrix",
                row.len(),
                self.cols
            )));
        }
        self.data.extend(row);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(QMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<QVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self.rows_iter().map(|r| dot(r, v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Keeps the selected columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> QMatrix {
        QMatrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.rows_iter() {
            let line: Vec<String> = r.iter().map(format_rational).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Builds a matrix from integer literals; test and fixture helper.
pub fn qmat(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| crate::rational::rat(x)).collect())
            .collect(),
    )
    .expect("literal rows must be rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![rat(1)], vec![rat(1), rat(2)]];
        assert!(QMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn transpose_and_multiply() {
        let a = qmat(&[&[1, 2], &[3, 4]]);
        let b = qmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), qmat(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), qmat(&[&[1, 3], &[2, 4]]));
    }

    #[test]
    fn degenerate_shapes() {
        let e = QMatrix::empty(4);
        assert_eq!(e.n_rows(), 0);
        assert_eq!(e.n_cols(), 4);
        let z = QMatrix::zeros(3, 0);
        assert_eq!(z.mul(&QMatrix::zeros(0, 2)).unwrap(), QMatrix::zeros(3, 2));
    }
}
