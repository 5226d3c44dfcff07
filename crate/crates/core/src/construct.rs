//! Standard polytope constructions.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hull::Inequality;
use crate::matrix::QMatrix;
use crate::props::IncidenceMatrix;
use crate::rational::{rat, QVector, Rational};
use crate::rng::XorShift64;

/// The 2^d corner points of a cube, homogeneous, in binary counting
/// order with the last coordinate varying fastest. `zero_one` selects
/// {0,1} coordinates, otherwise {-1,1}.
pub fn make_cube(d: usize, zero_one: bool) -> Result<QMatrix> {
    if d < 1 {
        return Err(Error::InvalidParameter("cube needs dimension >= 1".into()));
    }
    let rows = (0..1usize << d)
        .map(|i| {
            let mut row = Vec::with_capacity(d + 1);
            row.push(rat(1));
            for j in 0..d {
                let bit = (i >> (d - 1 - j)) & 1;
                row.push(if zero_one {
                    rat(bit as i64)
                } else {
                    rat(2 * bit as i64 - 1)
                });
            }
            row
        })
        .collect();
    QMatrix::from_rows(rows)
}

/// Vertex-facet incidences of the d-cube in [`make_cube`]'s vertex
/// order: facet (j, b) collects the vertices whose j-th coordinate bit
/// is b. Facets come in the pairs (x_j = low, x_j = high) for ascending j.
pub fn cube_incidences(d: usize) -> IncidenceMatrix {
    let n = 1usize << d;
    let mut sets = Vec::with_capacity(2 * d);
    for j in 0..d {
        for b in 0..2usize {
            sets.push(
                (0..n)
                    .filter(|i| (i >> (d - 1 - j)) & 1 == b)
                    .collect::<Vec<_>>(),
            );
        }
    }
    IncidenceMatrix { sets, n_vertices: n }
}

/// Origin plus the d unit vectors, homogeneous.
pub fn make_simplex(d: usize) -> QMatrix {
    QMatrix::from_fn(d + 1, d + 1, |i, j| {
        if j == 0 || i == j {
            rat(1)
        } else {
            rat(0)
        }
    })
}

/// n distinct exact rational points on the unit sphere in R^d, obtained
/// by stereographic projection of random rational parameter vectors.
/// Deterministic for a given seed.
pub fn rand_sphere(d: usize, n: usize, seed: u64) -> Result<QMatrix> {
    if d < 2 {
        return Err(Error::InvalidParameter("rand_sphere needs d >= 2".into()));
    }
    if n < d + 1 {
        return Err(Error::InvalidParameter(format!(
            "rand_sphere needs at least {} points in dimension {d}",
            d + 1
        )));
    }
    let mut rng = XorShift64::new(seed);
    let mut seen: BTreeSet<QVector> = BTreeSet::new();
    let mut rows: Vec<QVector> = Vec::with_capacity(n);
    while rows.len() < n {
        // Parameters u in Q^(d-1) with numerators in [-4096, 4096].
        let u: QVector = (0..d - 1)
            .map(|_| Rational::new(rng.below_signed(4097).into(), 1024.into()))
            .collect();
        let norm2: Rational = u.iter().map(|x| x * x).sum();
        let denom = &norm2 + rat(1);
        let mut p: QVector = u.iter().map(|x| (x * rat(2)) / &denom).collect();
        p.push((&norm2 - rat(1)) / &denom);
        if !seen.insert(p.clone()) {
            continue;
        }
        let mut row = Vec::with_capacity(d + 1);
        row.push(rat(1));
        row.extend(p);
        rows.push(row);
    }
    QMatrix::from_rows(rows)
}

/// Result of a combinatorial wedge: the incidences plus the vertex
/// numbering convention (original indices for kept vertices, then the
/// top copies of the non-facet vertices in ascending original order).
pub struct WedgeIncidences {
    pub incidences: IncidenceMatrix,
    /// top_copy[i] = Some(new index of the lifted copy of vertex i)
    pub top_copy: Vec<Option<usize>>,
}

/// Wedge over facet `facet_index`, on the combinatorial level: vertices
/// on the chosen facet stay single, all others split into a bottom copy
/// (original index) and a top copy.
pub fn wedge_combinatorial(inc: &IncidenceMatrix, facet_index: usize) -> Result<WedgeIncidences> {
    if facet_index >= inc.n_facets() {
        return Err(Error::IndexOutOfRange(format!(
            "facet {facet_index} of {}",
            inc.n_facets()
        )));
    }
    let n = inc.n_vertices;
    let chosen: BTreeSet<usize> = inc.sets[facet_index].iter().copied().collect();
    let mut top_copy: Vec<Option<usize>> = vec![None; n];
    let mut next = n;
    for i in 0..n {
        if !chosen.contains(&i) {
            top_copy[i] = Some(next);
            next += 1;
        }
    }
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(inc.n_facets() + 1);
    // Bottom and top copies of the whole polytope.
    let bottom: Vec<usize> = (0..n).collect();
    let mut top: Vec<usize> = (0..n)
        .map(|i| top_copy[i].unwrap_or(i))
        .collect();
    top.sort_unstable();
    sets.push(bottom);
    sets.push(top);
    // Mantle facets: for G != F take (G ∩ F) ∪ both copies of G \ F.
    for (gi, g) in inc.sets.iter().enumerate() {
        if gi == facet_index {
            continue;
        }
        let mut s: Vec<usize> = Vec::new();
        for &v in g {
            s.push(v);
            if let Some(t) = top_copy[v] {
                s.push(t);
            }
        }
        s.sort_unstable();
        sets.push(s);
    }
    Ok(WedgeIncidences {
        incidences: IncidenceMatrix::new(sets, next)?,
        top_copy,
    })
}

/// Geometric wedge over the facet with inequality g(x) >= 0:
/// W = {(x, t) : x in P, 0 <= t <= g(x)}. Returns the wedge's points in
/// the numbering convention of [`wedge_combinatorial`].
pub fn wedge_geometric(
    vertices: &QMatrix,
    facet: &Inequality,
) -> Result<QMatrix> {
    if vertices.n_rows() == 0 {
        return Err(Error::InvalidParameter("wedge of an empty polytope".into()));
    }
    if vertices.n_cols() != facet.coeffs.len() {
        return Err(Error::DimensionMismatch(
            "facet row width differs from vertex width".into(),
        ));
    }
    if (0..vertices.n_rows()).any(|i| !vertices[(i, 0)].is_one()) {
        return Err(Error::UnsupportedInput(
            "geometric wedge needs a bounded polytope".into(),
        ));
    }
    let heights: Vec<Rational> = vertices.rows_iter().map(|v| facet.eval(v)).collect();
    if heights.iter().any(|h| h.is_negative()) {
        return Err(Error::InvalidParameter(
            "chosen row is not valid for the given vertices".into(),
        ));
    }
    let mut rows: Vec<QVector> = Vec::new();
    for v in vertices.rows_iter() {
        let mut row = v.to_vec();
        row.push(Rational::zero());
        rows.push(row);
    }
    for (i, h) in heights.iter().enumerate() {
        if !h.is_zero() {
            let mut row = vertices.row_vec(i);
            row.push(h.clone());
            rows.push(row);
        }
    }
    QMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::qmat;

    #[test]
    fn unit_cube_matches_reference_points() {
        let cube = make_cube(3, true).unwrap();
        assert_eq!(
            cube,
            qmat(&[
                &[1, 0, 0, 0],
                &[1, 0, 0, 1],
                &[1, 0, 1, 0],
                &[1, 0, 1, 1],
                &[1, 1, 0, 0],
                &[1, 1, 0, 1],
                &[1, 1, 1, 0],
                &[1, 1, 1, 1],
            ])
        );
        assert_eq!(make_cube(1, true).unwrap(), qmat(&[&[1, 0], &[1, 1]]));
        assert!(make_cube(0, true).is_err());
    }

    #[test]
    fn plus_minus_cube() {
        let c = make_cube(2, false).unwrap();
        assert_eq!(
            c,
            qmat(&[&[1, -1, -1], &[1, -1, 1], &[1, 1, -1], &[1, 1, 1]])
        );
    }

    #[test]
    fn simplex_shapes() {
        assert_eq!(make_simplex(0), qmat(&[&[1]]));
        assert_eq!(
            make_simplex(2),
            qmat(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]])
        );
    }

    #[test]
    fn sphere_points_are_exactly_on_the_sphere() {
        let pts = rand_sphere(3, 20, 7).unwrap();
        assert_eq!(pts.n_rows(), 20);
        for row in pts.rows_iter() {
            let norm2: Rational = row[1..].iter().map(|x| x * x).sum();
            assert_eq!(norm2, rat(1));
        }
    }

    #[test]
    fn sphere_is_seed_deterministic() {
        assert_eq!(
            rand_sphere(3, 12, 99).unwrap(),
            rand_sphere(3, 12, 99).unwrap()
        );
        assert_ne!(
            rand_sphere(3, 12, 99).unwrap(),
            rand_sphere(3, 12, 100).unwrap()
        );
    }

    #[test]
    fn wedge_of_square_is_a_prism() {
        let square =
            IncidenceMatrix::new(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 4)
                .unwrap();
        let w = wedge_combinatorial(&square, 0).unwrap();
        assert_eq!(w.incidences.n_vertices, 6);
        assert_eq!(w.incidences.n_facets(), 5);
        let mut sizes: Vec<usize> = w.incidences.sets.iter().map(|s| s.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn wedge_facet_index_checked() {
        let square =
            IncidenceMatrix::new(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 4)
                .unwrap();
        assert!(wedge_combinatorial(&square, 4).is_err());
    }
}
