//! Convex hulls over homogeneous coordinates.
//!
//! Polyhedra are handled as cones in one dimension up: an affine point x
//! becomes the generator (1, x), a ray (0, r), and an inequality
//! a0 + a·x >= 0 the linear functional (a0, a). Two hull algorithms are
//! provided: the double description method (used in both directions
//! thanks to cone duality) and the incremental beneath-beyond algorithm,
//! which additionally produces a placing triangulation.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rational::{primitive_scale, QVector, Rational};

mod bb;
mod dd;

pub use bb::{beneath_beyond, BeneathBeyond};
pub use dd::{double_description, double_description_with_eqs};

/// A row vector with a leading homogenizing coordinate: 1 for an affine
/// point, 0 for a ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousGenerator {
    pub coords: QVector,
}

impl HomogeneousGenerator {
    pub fn point(x: &[Rational]) -> Self {
        let mut coords = Vec::with_capacity(x.len() + 1);
        coords.push(Rational::one());
        coords.extend_from_slice(x);
        HomogeneousGenerator { coords }
    }

    pub fn ray(r: &[Rational]) -> Self {
        let mut coords = Vec::with_capacity(r.len() + 1);
        coords.push(Rational::zero());
        coords.extend_from_slice(r);
        HomogeneousGenerator { coords }
    }

    pub fn from_row(coords: QVector) -> Result<Self> {
        match coords.first() {
            Some(c) if c.is_one() || c.is_zero() => {
                if c.is_zero() && coords.iter().all(|x| x.is_zero()) {
                    Err(Error::InvalidParameter("zero generator row".into()))
                } else {
                    Ok(HomogeneousGenerator { coords })
                }
            }
            Some(_) => Err(Error::InvalidParameter(
                "generator row must lead with 0 or 1".into(),
            )),
            None => Err(Error::InvalidParameter("empty generator row".into())),
        }
    }

    pub fn is_point(&self) -> bool {
        self.coords[0].is_one()
    }
}

/// An inequality a0 + a1 x1 + ... + ad xd >= 0, stored as (a0, ..., ad).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: QVector,
}

impl Inequality {
    pub fn new(coeffs: QVector) -> Result<Self> {
        if coeffs.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidParameter("zero inequality row".into()));
        }
        Ok(Inequality { coeffs })
    }

    /// Value of the functional at a homogeneous row.
    pub fn eval(&self, row: &[Rational]) -> Rational {
        crate::rational::dot(&self.coeffs, row)
    }

    /// Primitive integer coefficients; the orientation of the halfspace
    /// is preserved.
    pub fn canonical(&self) -> Inequality {
        Inequality {
            coeffs: primitive_scale(&self.coeffs),
        }
    }
}

/// Generators and lineality of a polyhedral cone.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeDescription {
    pub generators: QMatrix,
    pub lineality: QMatrix,
}

/// A triangulation given as vertex-index sets, each of size dim+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
}

/// Homogenized H-description: the cone {y : A·y >= 0, E·y = 0, y0 >= 0},
/// with the y0 >= 0 row appended to the inequalities.
pub fn homogenize_h(
    inequalities: &[Inequality],
    equations: &[Inequality],
) -> Result<(QMatrix, QMatrix)> {
    let width = inequalities
        .iter()
        .chain(equations)
        .map(|i| i.coeffs.len())
        .next()
        .ok_or_else(|| Error::InvalidParameter("no constraints to homogenize".into()))?;
    if inequalities
        .iter()
        .chain(equations)
        .any(|i| i.coeffs.len() != width)
    {
        return Err(Error::DimensionMismatch(
            "constraint rows have unequal lengths".into(),
        ));
    }
    let mut ineq_rows: Vec<QVector> = inequalities.iter().map(|i| i.coeffs.clone()).collect();
    let mut far = vec![Rational::zero(); width];
    far[0] = Rational::one();
    ineq_rows.push(far);
    let eq_rows: Vec<QVector> = equations.iter().map(|e| e.coeffs.clone()).collect();
    Ok((
        QMatrix::from_rows(ineq_rows)?,
        if eq_rows.is_empty() {
            QMatrix::empty(width)
        } else {
            QMatrix::from_rows(eq_rows)?
        },
    ))
}

/// The affine picture of a homogenization cone.
#[derive(Clone, Debug, PartialEq)]
pub struct Dehomogenized {
    pub vertices: QMatrix,
    pub rays: QMatrix,
    pub pointed: bool,
    pub feasible: bool,
}

/// Splits cone generators back into affine vertices (leading coordinate
/// rescaled to 1) and recession rays (primitive, leading coordinate 0).
pub fn dehomogenize(cone: &ConeDescription) -> Dehomogenized {
    let width = cone.generators.n_cols().max(cone.lineality.n_cols());
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for row in cone.generators.rows_iter() {
        let lead = &row[0];
        if lead.is_positive() {
            vertices.push(row.iter().map(|x| x / lead).collect::<QVector>());
        } else {
            debug_assert!(lead.is_zero(), "y0 >= 0 must hold on cone generators");
            rays.push(primitive_scale(row));
        }
    }
    let feasible = !vertices.is_empty();
    Dehomogenized {
        vertices: rows_or_empty(vertices, width),
        rays: rows_or_empty(rays, width),
        pointed: cone.lineality.is_empty(),
        feasible,
    }
}

pub(crate) fn rows_or_empty(rows: Vec<QVector>, width: usize) -> QMatrix {
    if rows.is_empty() {
        QMatrix::empty(width)
    } else {
        QMatrix::from_rows(rows).expect("rows are rectangular")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::qmat;
    use crate::rational::rat;

    fn ineq(coeffs: &[i64]) -> Inequality {
        Inequality::new(coeffs.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn unit_interval_homogenizes_to_three_rows() {
        let (a, e) = homogenize_h(&[ineq(&[0, 1]), ineq(&[1, -1])], &[]).unwrap();
        assert_eq!(a, qmat(&[&[0, 1], &[1, -1], &[1, 0]]));
        assert_eq!(e.n_rows(), 0);
    }

    #[test]
    fn empty_inequalities_give_halfspace() {
        assert!(homogenize_h(&[], &[]).is_err());
        let (a, _) = homogenize_h(&[], &[ineq(&[0, 1, 0])]).unwrap();
        assert_eq!(a, qmat(&[&[1, 0, 0]]));
    }

    #[test]
    fn generator_rows_validated() {
        assert!(HomogeneousGenerator::from_row(vec![rat(2), rat(1)]).is_err());
        assert!(HomogeneousGenerator::from_row(vec![rat(0), rat(0)]).is_err());
        assert!(HomogeneousGenerator::from_row(vec![rat(0), rat(2)]).is_ok());
    }
}
