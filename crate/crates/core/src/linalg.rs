//! Exact Gaussian elimination: reduced row echelon form, rank, kernels,
//! determinants, and linear solves.
//!
//! Pivoting picks the first nonzero entry in a column; with exact
//! arithmetic there is no stability concern to trade against.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{rat, QVector, Rational};

pub struct GaussResult {
    pub rank: usize,
    pub rref: QMatrix,
    pub pivot_cols: Vec<usize>,
}

/// Reduced row echelon form with unit pivots and zeros above and below.
pub fn gauss_reduce(m: &QMatrix) -> GaussResult {
    let mut a = m.to_rows();
    let (rows, cols) = (m.n_rows(), m.n_cols());
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &a[r][j];
                    a[i][j] = &a[i][j] - &sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    GaussResult {
        rank: r,
        rref: QMatrix::from_rows(a).expect("rows stay rectangular"),
        pivot_cols,
    }
}

pub fn rank(m: &QMatrix) -> usize {
    gauss_reduce(m).rank
}

/// A basis of the right null space, one vector per row.
/// `m · transpose(result)` is the zero matrix and
/// `rank(m) + result.n_rows() == m.n_cols()`.
pub fn kernel_basis(m: &QMatrix) -> QMatrix {
    let cols = m.n_cols();
    let g = gauss_reduce(m);
    let pivots = &g.pivot_cols;
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = rat(1);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -g.rref[(r, f)].clone();
        }
        basis.push(v);
    }
    if basis.is_empty() {
        QMatrix::empty(cols)
    } else {
        QMatrix::from_rows(basis).expect("kernel rows are rectangular")
    }
}

/// Exact determinant by pivoted elimination.
pub fn determinant(m: &QMatrix) -> Result<Rational> {
    let n = m.n_rows();
    if n != m.n_cols() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of {}x{} matrix",
            n,
            m.n_cols()
        )));
    }
    let mut a = m.to_rows();
    let mut det = rat(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in c..n {
                    let sub = &f * &a[c][j];
                    a[i][j] = &a[i][j] - &sub;
                }
            }
        }
    }
    Ok(det)
}

/// Solves `a · x = b` for a unique solution. Returns `None` when the
/// system is inconsistent or underdetermined.
pub fn solve_unique(a: &QMatrix, b: &[Rational]) -> Option<QVector> {
    if a.n_rows() != b.len() {
        return None;
    }
    let mut aug = QMatrix::zeros(a.n_rows(), a.n_cols() + 1);
    for i in 0..a.n_rows() {
        for j in 0..a.n_cols() {
            aug.set(i, j, a[(i, j)].clone());
        }
        aug.set(i, a.n_cols(), b[i].clone());
    }
    let g = gauss_reduce(&aug);
    // Inconsistent if a pivot lands in the augmented column.
    if g.pivot_cols.contains(&a.n_cols()) {
        return None;
    }
    if g.rank != a.n_cols() {
        return None;
    }
    let mut x = vec![Rational::zero(); a.n_cols()];
    for (r, &p) in g.pivot_cols.iter().enumerate() {
        x[p] = g.rref[(r, a.n_cols())].clone();
    }
    Some(x)
}
