//! The double description method.
//!
//! Maintains a minimal generator pair (rays, lineality) of the cone cut
//! out by the inequalities processed so far. Adjacency of rays is decided
//! combinatorially: two rays are adjacent iff no third ray's zero set
//! contains the intersection of their zero sets.

use num_traits::{Signed, Zero};

use super::{rows_or_empty, ConeDescription};
use crate::error::{Error, Result};
use crate::linalg::kernel_basis;
use crate::matrix::QMatrix;
use crate::rational::{dot, primitive_scale, sign_canonical, QVector, Rational};

/// Row insertion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionOrder {
    /// Rows in the order given.
    Given,
    /// Rows sorted lexicographically before insertion.
    Lexicographic,
}

/// Extreme rays and lineality of `{y : A·y >= 0}`.
pub fn double_description(ineqs: &QMatrix) -> Result<ConeDescription> {
    double_description_with_eqs(ineqs, &QMatrix::empty(ineqs.n_cols()))
}

/// Extreme rays and lineality of `{y : A·y >= 0, E·y = 0}`. Equations are
/// eliminated first by passing to the null space of E.
pub fn double_description_with_eqs(ineqs: &QMatrix, eqs: &QMatrix) -> Result<ConeDescription> {
    double_description_ordered(ineqs, eqs, InsertionOrder::Given)
}

pub fn double_description_ordered(
    ineqs: &QMatrix,
    eqs: &QMatrix,
    order: InsertionOrder,
) -> Result<ConeDescription> {
    if ineqs.n_rows() == 0 && eqs.n_rows() == 0 {
        return Err(Error::InvalidParameter(
            "double description needs at least one constraint row".into(),
        ));
    }
    let width = if ineqs.n_rows() > 0 {
        ineqs.n_cols()
    } else {
        eqs.n_cols()
    };
    if eqs.n_rows() > 0 && ineqs.n_rows() > 0 && eqs.n_cols() != width {
        return Err(Error::DimensionMismatch(
            "inequality and equation widths differ".into(),
        ));
    }

    if eqs.n_rows() == 0 {
        let (rays, lineality) = run_dd(ineqs, order);
        return Ok(ConeDescription {
            generators: rows_or_empty(rays, width),
            lineality: rows_or_empty(lineality, width),
        });
    }

    // Eliminate equations: work in the null space of E.
    let basis = kernel_basis(eqs); // rows span {y : E·y = 0}
    if basis.n_rows() == 0 {
        return Ok(ConeDescription {
            generators: QMatrix::empty(width),
            lineality: QMatrix::empty(width),
        });
    }
    let reduced = ineqs.mul(&basis.transpose())?;
    let (rays, lineality) = run_dd(&reduced, order);
    let lift = |rows: Vec<QVector>| -> Vec<QVector> {
        rows.into_iter()
            .map(|r| {
                let m = QMatrix::from_rows(vec![r]).expect("single row");
                m.mul(&basis).expect("widths match").row_vec(0)
            })
            .collect()
    };
    Ok(ConeDescription {
        generators: rows_or_empty(
            lift(rays).iter().map(|r| primitive_scale(r)).collect(),
            width,
        ),
        lineality: rows_or_empty(
            lift(lineality).iter().map(|r| sign_canonical(r)).collect(),
            width,
        ),
    })
}

fn run_dd(ineqs: &QMatrix, order: InsertionOrder) -> (Vec<QVector>, Vec<QVector>) {
    let dim = ineqs.n_cols();
    let mut row_order: Vec<usize> = (0..ineqs.n_rows()).collect();
    if order == InsertionOrder::Lexicographic {
        row_order.sort_by(|&a, &b| ineqs.row(a).cmp(ineqs.row(b)));
    }

    let mut lineality: Vec<QVector> = QMatrix::identity(dim).to_rows();
    let mut rays: Vec<QVector> = Vec::new();
    let mut processed: Vec<usize> = Vec::new();

    for &ri in &row_order {
        let a = ineqs.row(ri);
        if a.iter().all(|x| x.is_zero()) {
            processed.push(ri);
            continue;
        }
        if let Some(idx) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            // A lineality direction leaves the halfspace: it becomes a ray
            // and everything else is projected onto the hyperplane a·y = 0.
            let mut pivot = lineality.remove(idx);
            let mut pv = dot(a, &pivot);
            if pv.is_negative() {
                pivot.iter_mut().for_each(|x| *x = -x.clone());
                pv = -pv;
            }
            for l in lineality.iter_mut() {
                let c = dot(a, l) / &pv;
                if !c.is_zero() {
                    for (x, p) in l.iter_mut().zip(&pivot) {
                        *x -= &c * p;
                    }
                }
                *l = sign_canonical(l);
            }
            for r in rays.iter_mut() {
                let c = dot(a, r) / &pv;
                if !c.is_zero() {
                    for (x, p) in r.iter_mut().zip(&pivot) {
                        *x -= &c * p;
                    }
                }
                *r = primitive_scale(r);
            }
            rays.push(primitive_scale(&pivot));
        } else {
            let vals: Vec<Rational> = rays.iter().map(|r| dot(a, r)).collect();
            if vals.iter().any(|v| v.is_negative()) {
                let zero_sets: Vec<Vec<bool>> = rays
                    .iter()
                    .map(|r| {
                        processed
                            .iter()
                            .map(|&pi| dot(ineqs.row(pi), r).is_zero())
                            .collect()
                    })
                    .collect();
                let mut next: Vec<QVector> = Vec::new();
                for (i, r) in rays.iter().enumerate() {
                    if !vals[i].is_negative() {
                        next.push(r.clone());
                    }
                }
                for p in 0..rays.len() {
                    if !vals[p].is_positive() {
                        continue;
                    }
                    for n in 0..rays.len() {
                        if !vals[n].is_negative() {
                            continue;
                        }
                        if !adjacent(&zero_sets, p, n) {
                            continue;
                        }
                        let combo: QVector = rays[p]
                            .iter()
                            .zip(&rays[n])
                            .map(|(rp, rn)| &vals[p] * rn - &vals[n] * rp)
                            .collect();
                        next.push(primitive_scale(&combo));
                    }
                }
                rays = next;
            }
        }
        processed.push(ri);
    }
    (rays, lineality)
}

/// Combinatorial adjacency: no third ray's zero set contains the
/// intersection of the zero sets of rays `p` and `n`.
fn adjacent(zero_sets: &[Vec<bool>], p: usize, n: usize) -> bool {
    let meet: Vec<bool> = zero_sets[p]
        .iter()
        .zip(&zero_sets[n])
        .map(|(a, b)| *a && *b)
        .collect();
    for (t, zs) in zero_sets.iter().enumerate() {
        if t == p || t == n {
            continue;
        }
        if meet.iter().zip(zs).all(|(m, z)| !*m || *z) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::qmat;

    #[test]
    fn orthant_rays() {
        let cone = double_description(&QMatrix::identity(3)).unwrap();
        assert_eq!(cone.lineality.n_rows(), 0);
        let mut rays = cone.generators.to_rows();
        rays.sort();
        assert_eq!(
            rays,
            qmat(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).to_rows()
        );
    }

    #[test]
    fn halfplane_has_lineality() {
        // {y : y0 >= 0} in R^2: one ray e0, lineality e1.
        let cone = double_description(&qmat(&[&[1, 0]])).unwrap();
        assert_eq!(cone.generators.to_rows(), qmat(&[&[1, 0]]).to_rows());
        assert_eq!(cone.lineality.to_rows(), qmat(&[&[0, 1]]).to_rows());
    }

    #[test]
    fn equations_are_eliminated() {
        // {y in R^3 : y >= 0 componentwise, y0 = y1}
        let cone =
            double_description_with_eqs(&QMatrix::identity(3), &qmat(&[&[1, -1, 0]])).unwrap();
        let mut rays = cone.generators.to_rows();
        rays.sort();
        assert_eq!(rays, qmat(&[&[0, 0, 1], &[1, 1, 0]]).to_rows());
        assert!(cone.lineality.is_empty());
    }

    #[test]
    fn insertion_order_irrelevant_for_output_set() {
        let a = qmat(&[&[1, 2, 0], &[0, 1, 1], &[1, 0, 0], &[2, -1, 3]]);
        let given = double_description(&a).unwrap();
        let lex =
            double_description_ordered(&a, &QMatrix::empty(3), InsertionOrder::Lexicographic)
                .unwrap();
        let mut g = given.generators.to_rows();
        let mut l = lex.generators.to_rows();
        g.sort();
        l.sort();
        assert_eq!(g, l);
    }
}
