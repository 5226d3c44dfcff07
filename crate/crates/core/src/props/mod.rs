//! Derived combinatorial and metric properties of polytopes.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull::{Inequality, Triangulation};
use crate::linalg::{determinant, gauss_reduce, kernel_basis};
use crate::matrix::QMatrix;
use crate::rational::{sign_canonical, Rational};

mod lattice;

pub use lattice::{face_lattice, graphs, FaceLattice, Graph, LatticeNode};

/// Vertex-facet incidences: one ascending vertex-index set per facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    pub sets: Vec<Vec<usize>>,
    pub n_vertices: usize,
}

impl IncidenceMatrix {
    pub fn new(sets: Vec<Vec<usize>>, n_vertices: usize) -> Result<Self> {
        for s in &sets {
            if !s.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidParameter(
                    "incidence rows must be strictly ascending".into(),
                ));
            }
            if s.iter().any(|&v| v >= n_vertices) {
                return Err(Error::IndexOutOfRange(format!(
                    "vertex index in {s:?} exceeds {n_vertices}"
                )));
            }
        }
        Ok(IncidenceMatrix { sets, n_vertices })
    }

    pub fn n_facets(&self) -> usize {
        self.sets.len()
    }
}

/// Intrinsic dimension and the equations cutting out the affine hull,
/// computed from the homogeneous generator matrix.
pub fn affine_hull_dim(generators: &QMatrix) -> (i64, Vec<Inequality>) {
    if generators.n_rows() == 0 {
        return (-1, Vec::new());
    }
    let g = gauss_reduce(generators);
    let dim = g.rank as i64 - 1;
    let equations = kernel_basis(generators)
        .rows_iter()
        .map(|row| Inequality {
            coeffs: sign_canonical(row),
        })
        .collect();
    (dim, equations)
}

/// Dimension read off the incidence structure alone, as the height of
/// the face lattice. The incidences are trusted to describe a polytope.
pub fn combinatorial_dim(inc: &IncidenceMatrix) -> i64 {
    face_lattice(inc).dim
}

/// Vertex v is incident to facet F iff F's inequality vanishes at v.
pub fn incidences(vertices: &QMatrix, facets: &[Inequality]) -> IncidenceMatrix {
    let sets = facets
        .iter()
        .map(|f| {
            (0..vertices.n_rows())
                .filter(|&i| f.eval(vertices.row(i)).is_zero())
                .collect()
        })
        .collect();
    IncidenceMatrix {
        sets,
        n_vertices: vertices.n_rows(),
    }
}

/// Face counts per rank 0..dim-1.
pub fn f_vector(lattice: &FaceLattice) -> Vec<u64> {
    let dim = lattice.dim;
    let mut f = vec![0u64; dim.max(0) as usize];
    for node in &lattice.nodes {
        if node.rank >= 0 && node.rank < dim {
            f[node.rank as usize] += 1;
        }
    }
    f
}

/// The standard f-to-h transformation; only meaningful for simplicial
/// polytopes, which is the caller's precondition.
pub fn h_vector(f: &[u64], dim: usize) -> Vec<i64> {
    let d = dim as i64;
    let fk = |i: i64| -> i64 {
        if i < 0 {
            1
        } else {
            f.get(i as usize).copied().unwrap_or(0) as i64
        }
    };
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, d - k) * fk(i - 1)
                })
                .sum()
        })
        .collect()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut r = 1i64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub struct PolytopeFlags {
    pub simple: bool,
    pub simplicial: bool,
    pub cubical: bool,
    pub bounded: bool,
}

/// Predicate flags from the incidence structure.
pub fn flags(inc: &IncidenceMatrix, dim: i64, rays_present: bool) -> PolytopeFlags {
    let d = dim.max(0) as usize;
    let mut vertex_degree = vec![0usize; inc.n_vertices];
    for s in &inc.sets {
        for &v in s {
            vertex_degree[v] += 1;
        }
    }
    let simple = vertex_degree.iter().all(|&c| c == d);
    let simplicial = inc.sets.iter().all(|s| s.len() == d);
    PolytopeFlags {
        simple,
        simplicial,
        cubical: is_cubical(inc, dim),
        bounded: !rays_present,
    }
}

/// A polytope is cubical iff every facet is a combinatorial (dim-1)-cube.
/// Checked by canonical-form comparison of each facet's sub-incidences
/// against the reference cube, behind a cheap f-vector prefilter.
fn is_cubical(inc: &IncidenceMatrix, dim: i64) -> bool {
    if dim <= 1 {
        return true;
    }
    let k = (dim - 1) as usize; // facets should be k-cubes
    let lattice = face_lattice(inc);
    let reference = crate::construct::cube_incidences(k);
    let reference_form = crate::iso::canonical_form(&reference);
    for facet in lattice.facet_nodes() {
        let sub = lattice.facet_sub_incidences(facet);
        if sub.n_vertices != 1usize << k {
            return false;
        }
        if k >= 1 && sub.sets.len() != 2 * k {
            return false;
        }
        if k == 0 {
            continue;
        }
        if crate::iso::canonical_form(&sub) != reference_form {
            return false;
        }
    }
    true
}

/// Exact volume: sum over simplices of |det(v1-v0, ..., vd-v0)| / d!,
/// measured inside the affine hull for lower-dimensional polytopes.
pub fn volume(vertices: &QMatrix, tri: &Triangulation) -> Result<Rational> {
    if vertices.n_rows() == 0 {
        return Ok(Rational::zero());
    }
    if (0..vertices.n_rows()).any(|i| !vertices[(i, 0)].is_one()) {
        return Err(Error::Precondition(
            "volume needs a bounded polytope (ray generators present)".into(),
        ));
    }
    let ambient = vertices.n_cols() - 1;
    let translated = QMatrix::from_fn(vertices.n_rows(), ambient, |i, j| {
        &vertices[(i, j + 1)] - &vertices[(0, j + 1)]
    });
    let g = gauss_reduce(&translated);
    let dim = g.rank;
    let coords = |i: usize| -> Vec<Rational> {
        g.pivot_cols
            .iter()
            .map(|&c| vertices[(i, c + 1)].clone())
            .collect()
    };
    let mut total = Rational::zero();
    for simplex in &tri.simplices {
        if simplex.len() != dim + 1 {
            return Err(Error::DimensionMismatch(format!(
                "simplex {simplex:?} has {} vertices, expected {}",
                simplex.len(),
                dim + 1
            )));
        }
        if simplex.iter().any(|&v| v >= vertices.n_rows()) {
            return Err(Error::IndexOutOfRange(format!("simplex {simplex:?}")));
        }
        let base = coords(simplex[0]);
        let m = QMatrix::from_fn(dim, dim, |r, c| {
            let p = coords(simplex[r + 1]);
            &p[c] - &base[c]
        });
        let det = determinant(&m)?;
        total += det.abs();
    }
    let mut dfact = Rational::one();
    for i in 1..=dim {
        dfact *= Rational::from_integer(i.into());
    }
    Ok(total / dfact)
}

/// Gale transform: one row per vertex, living in R^(n-dim-1); the rows
/// are the coordinates of a basis of the affine dependencies among the
/// vertices, so `vertices^T · result = 0`.
pub fn gale_transform(vertices: &QMatrix) -> Result<QMatrix> {
    let n = vertices.n_rows();
    if n == 0 {
        return Err(Error::InvalidParameter("no vertices".into()));
    }
    let dependencies = kernel_basis(&vertices.transpose());
    Ok(dependencies.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::qmat;
    use crate::rational::rat;

    #[test]
    fn affine_hull_of_single_point() {
        let (dim, eqs) = affine_hull_dim(&qmat(&[&[1, 2, 3, 4]]));
        assert_eq!(dim, 0);
        assert_eq!(eqs.len(), 3);
        for e in &eqs {
            assert_eq!(e.eval(&[rat(1), rat(2), rat(3), rat(4)]), rat(0));
        }
    }

    #[test]
    fn affine_hull_of_planar_square_in_space() {
        // square in the z = 0 plane of R^3
        let square = qmat(&[
            &[1, 0, 0, 0],
            &[1, 1, 0, 0],
            &[1, 1, 1, 0],
            &[1, 0, 1, 0],
        ]);
        let (dim, eqs) = affine_hull_dim(&square);
        assert_eq!(dim, 2);
        assert_eq!(eqs.len(), 1);
        assert_eq!(eqs[0].coeffs, vec![rat(0), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn empty_generator_matrix_has_dim_minus_one() {
        assert_eq!(affine_hull_dim(&QMatrix::empty(3)).0, -1);
    }

    #[test]
    fn h_vector_of_octahedron_counts() {
        assert_eq!(h_vector(&[6, 12, 8], 3), vec![1, 3, 3, 1]);
        assert_eq!(h_vector(&[4, 6, 4], 3), vec![1, 1, 1, 1]);
    }

    #[test]
    fn gale_of_square_is_alternating() {
        let square = qmat(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[1, 0, 1]]);
        let g = gale_transform(&square).unwrap();
        assert_eq!(g.n_rows(), 4);
        assert_eq!(g.n_cols(), 1);
        assert!(square.transpose().mul(&g).unwrap().is_zero());
        // proportional to (1, -1, 1, -1): diagonal pairs on the same side
        assert_eq!(g[(0, 0)], -g[(1, 0)].clone());
        assert_eq!(g[(0, 0)], g[(2, 0)].clone());
        assert_eq!(g[(1, 0)], g[(3, 0)].clone());
    }

    #[test]
    fn simplex_gale_is_empty() {
        let tri = qmat(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]]);
        let g = gale_transform(&tri).unwrap();
        assert_eq!((g.n_rows(), g.n_cols()), (3, 0));
    }
}
