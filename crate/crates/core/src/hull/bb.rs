//! Incremental beneath-beyond convex hull.
//!
//! Points are placed in input order. Each new point is joined to the
//! boundary simplices it strictly sees, which yields a placing
//! triangulation of the hull as a byproduct; a point on the hyperplane of
//! a boundary simplex triangulates the strictly visible part only and
//! clears the essentially-generic flag.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use super::{HomogeneousGenerator, Inequality, Triangulation};
use crate::error::{Error, Result};
use crate::linalg::{gauss_reduce, kernel_basis};
use crate::matrix::QMatrix;
use crate::rational::{dot, primitive_scale, sign_canonical, QVector, Rational};

#[derive(Clone, Debug)]
pub struct BeneathBeyond {
    pub facets: Vec<Inequality>,
    pub affine_hull: Vec<Inequality>,
    pub triangulation: Triangulation,
    pub essentially_generic: bool,
}

pub fn beneath_beyond(points: &[HomogeneousGenerator]) -> Result<BeneathBeyond> {
    if points.is_empty() {
        return Err(Error::InvalidParameter(
            "beneath-beyond needs at least one point".into(),
        ));
    }
    if let Some(ray) = points.iter().find(|p| !p.is_point()) {
        return Err(Error::UnsupportedInput(format!(
            "beneath-beyond handles affine points only, got ray {:?}",
            ray.coords
        )));
    }
    let ambient = points[0].coords.len() - 1;
    if points.iter().any(|p| p.coords.len() != ambient + 1) {
        return Err(Error::DimensionMismatch("point rows of unequal length".into()));
    }
    let affine: Vec<QVector> = points.iter().map(|p| p.coords[1..].to_vec()).collect();

    // POINTS may repeat; keep the first occurrence of each.
    let mut seen: BTreeSet<&QVector> = BTreeSet::new();
    let mut reps: Vec<usize> = Vec::new();
    for (i, p) in affine.iter().enumerate() {
        if seen.insert(p) {
            reps.push(i);
        }
    }
    let pts: Vec<&QVector> = reps.iter().map(|&i| &affine[i]).collect();
    let nr = pts.len();

    // Affine hull of the full point set; facets get computed inside it.
    let translated = QMatrix::from_fn(nr, ambient, |i, j| &pts[i][j] - &pts[0][j]);
    let hull_gauss = gauss_reduce(&translated);
    let dim = hull_gauss.rank;
    let pivots = hull_gauss.pivot_cols.clone();
    let proj: Vec<QVector> = pts
        .iter()
        .map(|p| pivots.iter().map(|&c| p[c].clone()).collect())
        .collect();

    let mut state = Placing::new(&proj, dim);
    for i in 1..nr {
        state.insert(i);
    }
    debug_assert_eq!(state.k, dim);

    let facets = state.collect_facets(ambient, &pivots);
    let affine_hull = affine_hull_equations(&affine, ambient);
    let triangulation = Triangulation {
        simplices: state
            .simplices
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.iter().map(|&j| reps[j]).collect();
                v.sort_unstable();
                v
            })
            .collect(),
    };
    Ok(BeneathBeyond {
        facets,
        affine_hull,
        triangulation,
        essentially_generic: state.generic,
    })
}

/// Equations cutting out the affine hull of a point set, sign-canonical.
pub fn affine_hull_equations(affine: &[QVector], ambient: usize) -> Vec<Inequality> {
    let homog = QMatrix::from_fn(affine.len(), ambient + 1, |i, j| {
        if j == 0 {
            Rational::from_integer(1.into())
        } else {
            affine[i][j - 1].clone()
        }
    });
    kernel_basis(&homog)
        .rows_iter()
        .map(|row| Inequality {
            coeffs: sign_canonical(row),
        })
        .collect()
}

struct Placing<'a> {
    pts: &'a [QVector], // projected to the affine hull: R^dim
    dim: usize,
    k: usize,               // dimension spanned so far
    placed: Vec<usize>,     // indices placed so far
    simplices: Vec<Vec<usize>>, // k-dimensional simplices (size k+1)
    generic: bool,
}

impl<'a> Placing<'a> {
    fn new(pts: &'a [QVector], dim: usize) -> Self {
        Placing {
            pts,
            dim,
            k: 0,
            placed: vec![0],
            simplices: vec![vec![0]],
            generic: true,
        }
    }

    fn insert(&mut self, i: usize) {
        if self.k < self.dim && !self.in_current_span(i) {
            for s in self.simplices.iter_mut() {
                s.push(i);
            }
            self.k += 1;
            self.placed.push(i);
            return;
        }
        // Point lies in the current affine span: join it to every
        // boundary simplex it strictly sees.
        let mut joined = Vec::new();
        for (boundary, opposite) in self.boundary_simplices() {
            let h = self.oriented_functional(&boundary, opposite);
            let val = eval_functional(&h, &self.pts[i]);
            if val.is_zero() {
                self.generic = false;
            } else if val.is_negative() {
                let mut s = boundary.clone();
                s.push(i);
                joined.push(s);
            }
        }
        self.simplices.extend(joined);
        self.placed.push(i);
    }

    fn in_current_span(&self, i: usize) -> bool {
        let base = self.placed[0];
        let mut rows: Vec<QVector> = self
            .placed
            .iter()
            .skip(1)
            .map(|&j| sub(&self.pts[j], &self.pts[base]))
            .collect();
        let before = rows.len();
        let r0 = if before == 0 {
            0
        } else {
            gauss_reduce(&QMatrix::from_rows(rows.clone()).unwrap()).rank
        };
        rows.push(sub(&self.pts[i], &self.pts[base]));
        let r1 = gauss_reduce(&QMatrix::from_rows(rows).unwrap()).rank;
        r1 == r0
    }

    /// (k-1)-faces of the triangulation contained in exactly one simplex,
    /// together with the opposite vertex of their owner.
    fn boundary_simplices(&self) -> Vec<(Vec<usize>, usize)> {
        let mut count: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        for s in &self.simplices {
            for drop in 0..s.len() {
                let mut face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != drop)
                    .map(|(_, &v)| v)
                    .collect();
                face.sort_unstable();
                let e = count.entry(face).or_insert((0, s[drop]));
                e.0 += 1;
                e.1 = s[drop];
            }
        }
        count
            .into_iter()
            .filter(|(_, (c, _))| *c == 1)
            .map(|(face, (_, opp))| (face, opp))
            .collect()
    }

    /// Affine functional vanishing on the boundary simplex and positive
    /// at the owner's opposite vertex (i.e. inside the hull).
    fn oriented_functional(&self, boundary: &[usize], opposite: usize) -> QVector {
        // Functional over R^k coordinates of the current span. Work in
        // the span's own pivot coordinates.
        let base = self.placed[0];
        let span_rows: Vec<QVector> = self
            .placed
            .iter()
            .skip(1)
            .map(|&j| sub(&self.pts[j], &self.pts[base]))
            .collect();
        let span_pivots = if span_rows.is_empty() {
            Vec::new()
        } else {
            gauss_reduce(&QMatrix::from_rows(span_rows).unwrap()).pivot_cols
        };
        let local = |x: &QVector| -> QVector {
            span_pivots.iter().map(|&c| x[c].clone()).collect()
        };
        let q0 = local(&self.pts[boundary[0]]);
        let rows: Vec<QVector> = boundary
            .iter()
            .skip(1)
            .map(|&j| sub(&local(&self.pts[j]), &q0))
            .collect();
        let kernel = if rows.is_empty() {
            QMatrix::identity(self.k)
        } else {
            kernel_basis(&QMatrix::from_rows(rows).unwrap())
        };
        debug_assert_eq!(kernel.n_rows(), 1, "boundary simplex must span a hyperplane");
        let normal = kernel.row_vec(0);
        // h(x) = normal·local(x) - normal·q0, then orientation fix.
        let mut h: QVector = Vec::with_capacity(self.k + 1 + span_pivots.len());
        h.push(-dot(&normal, &q0));
        h.extend(normal);
        // Remember which coordinates the functional applies to.
        let at_opp = eval_with(&h, &local(&self.pts[opposite]));
        debug_assert!(!at_opp.is_zero(), "owner's opposite vertex on its facet plane");
        let flip = at_opp.is_negative();
        // Store functional together with pivot selection, encoded by
        // rebuilding it over full span coordinates lazily in eval.
        let mut full: QVector = vec![Rational::zero(); self.pts[0].len() + 1];
        full[0] = if flip { -h[0].clone() } else { h[0].clone() };
        for (t, &c) in span_pivots.iter().enumerate() {
            full[c + 1] = if flip { -h[t + 1].clone() } else { h[t + 1].clone() };
        }
        full
    }

    fn collect_facets(&self, ambient: usize, pivots: &[usize]) -> Vec<Inequality> {
        if self.k == 0 {
            return Vec::new();
        }
        let mut rows: BTreeSet<QVector> = BTreeSet::new();
        for (boundary, opposite) in self.boundary_simplices() {
            let h = self.oriented_functional(&boundary, opposite);
            // Lift from span coordinates back to the ambient space.
            let mut row = vec![Rational::zero(); ambient + 1];
            row[0] = h[0].clone();
            for (t, &c) in pivots.iter().enumerate() {
                row[c + 1] = h[t + 1].clone();
            }
            rows.insert(primitive_scale(&row));
        }
        rows.into_iter()
            .map(|coeffs| Inequality { coeffs })
            .collect()
    }
}

fn sub(a: &QVector, b: &QVector) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn eval_functional(h: &QVector, x: &QVector) -> Rational {
    let mut v = h[0].clone();
    v += dot(&h[1..], x);
    v
}

fn eval_with(h: &QVector, local: &QVector) -> Rational {
    let mut v = h[0].clone();
    v += dot(&h[1..], local);
    v
}
