use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use polyq_core::linalg::{gauss_reduce, kernel_basis, solve_unique};
use polyq_core::matrix::QMatrix;
use polyq_core::rational::{dot, primitive_scale, rat, QVector, Rational};

/// Determinant by Laplace cofactor expansion along the first row.
pub fn laplace_det(m: &QMatrix) -> Rational {
    let n = m.n_rows();
    assert_eq!(n, m.n_cols());
    if n == 0 {
        return rat(1);
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut det = Rational::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let minor = QMatrix::from_fn(n - 1, n - 1, |r, c| {
            m[(r + 1, if c < j { c } else { c + 1 })].clone()
        });
        let cof = &m[(0, j)] * laplace_det(&minor);
        if j % 2 == 0 {
            det += cof;
        } else {
            det -= cof;
        }
    }
    det
}

/// All k-element subsets of 0..n, in lexicographic order.
pub fn subsets_k(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// All permutations of 0..n.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// Rank as the size of the largest nonvanishing square minor.
pub fn minor_rank(m: &QMatrix) -> usize {
    let max_k = m.n_rows().min(m.n_cols());
    for k in (1..=max_k).rev() {
        for rows in subsets_k(m.n_rows(), k) {
            for cols in subsets_k(m.n_cols(), k) {
                let sub = QMatrix::from_fn(k, k, |i, j| m[(rows[i], cols[j])].clone());
                if !laplace_det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Indices of the extreme points of `conv(points)`, by Caratheodory
/// enumeration: a point is redundant iff it is a convex combination of
/// some affinely independent subset of the others.
pub fn extreme_points_brute(points: &[QVector]) -> BTreeSet<usize> {
    let n = points.len();
    if n == 0 {
        return BTreeSet::new();
    }
    let d = points[0].len();
    let mut extreme = BTreeSet::new();
    'point: for i in 0..n {
        let others: Vec<usize> = (0..n).filter(|&j| j != i && points[j] != points[i]).collect();
        if points
            .iter()
            .enumerate()
            .any(|(j, p)| j < i && *p == points[i])
        {
            continue; // duplicate of an earlier point, never reported extreme
        }
        for k in 1..=(d + 2).min(others.len() + 1) {
            for sub in subsets_k(others.len(), k) {
                let chosen: Vec<usize> = sub.iter().map(|&s| others[s]).collect();
                if in_convex_hull_of(&points[i], &chosen.iter().map(|&j| points[j].clone()).collect::<Vec<_>>()) {
                    continue 'point;
                }
            }
        }
        extreme.insert(i);
    }
    extreme
}

fn in_convex_hull_of(p: &QVector, pts: &[QVector]) -> bool {
    // Solve sum(l_i * pts_i) = p, sum(l_i) = 1 for a unique l, then check
    // nonnegativity. Affinely dependent subsets are skipped; Caratheodory
    // guarantees an independent witness subset exists when p is inside.
    let d = p.len();
    let k = pts.len();
    let mut rows = Vec::with_capacity(d + 1);
    for c in 0..d {
        rows.push(pts.iter().map(|q| q[c].clone()).collect::<Vec<_>>());
    }
    rows.push(vec![rat(1); k]);
    let a = QMatrix::from_rows(rows).unwrap();
    let mut b: QVector = p.clone();
    b.push(rat(1));
    match solve_unique(&a, &b) {
        Some(l) => l.iter().all(|x| !x.is_negative()),
        None => false,
    }
}

/// Facets of `conv(points)` by hyperplane enumeration, reported as the
/// sets of point indices lying on each facet. Works inside the affine
/// hull of the points, so lower-dimensional configurations are fine.
/// Also returns the facet inequality rows valid in the *projected*
/// coordinates (identical to ambient coordinates when full-dimensional).
pub fn hull_facets_brute(points: &[QVector]) -> (Vec<BTreeSet<usize>>, Vec<QVector>) {
    let n = points.len();
    assert!(n > 0);
    // Project onto the pivot columns of the translated point matrix.
    let d = points[0].len();
    let translated = QMatrix::from_fn(n, d, |i, j| &points[i][j] - &points[0][j]);
    let g = gauss_reduce(&translated);
    let dim = g.rank;
    let proj: Vec<QVector> = points
        .iter()
        .map(|p| g.pivot_cols.iter().map(|&c| p[c].clone()).collect())
        .collect();
    if dim == 0 {
        return (Vec::new(), Vec::new());
    }
    let mut tight_sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut rows: BTreeSet<QVector> = BTreeSet::new();
    for sub in subsets_k(n, dim) {
        // Hyperplane spanned by the subset, if affinely independent.
        let t = QMatrix::from_fn(dim - 1, dim, |i, j| {
            &proj[sub[i + 1]][j] - &proj[sub[0]][j]
        });
        let ker = kernel_basis(&t);
        if ker.n_rows() != 1 {
            continue;
        }
        let normal = ker.row_vec(0);
        let offset = dot(&normal, &proj[sub[0]]);
        let vals: Vec<Rational> = proj.iter().map(|p| dot(&normal, p)).collect();
        let (all_ge, all_le) = (
            vals.iter().all(|v| *v >= offset),
            vals.iter().all(|v| *v <= offset),
        );
        if all_ge == all_le {
            continue; // points on both sides, or everything tight (skip)
        }
        // Orient inward: a0 + a.x >= 0 on all points.
        let mut row: QVector = Vec::with_capacity(dim + 1);
        if all_ge {
            row.push(-offset.clone());
            row.extend(normal.iter().cloned());
        } else {
            row.push(offset.clone());
            row.extend(normal.iter().map(|x| -x));
        }
        let row = primitive_scale(&row);
        let tight: BTreeSet<usize> = (0..n).filter(|&i| vals[i] == offset).collect();
        tight_sets.insert(tight);
        rows.insert(row);
    }
    (tight_sets.into_iter().collect(), rows.into_iter().collect())
}

/// Vertices of `{x : row[0] + row[1..]·x >= 0 for all rows}` by basis
/// enumeration: every d-subset of constraints with independent linear
/// parts is solved and the solution kept when feasible.
pub fn h_vertices_brute(ineqs: &[QVector]) -> Vec<QVector> {
    assert!(!ineqs.is_empty());
    let d = ineqs[0].len() - 1;
    let m = ineqs.len();
    let mut found: BTreeSet<QVector> = BTreeSet::new();
    for sub in subsets_k(m, d.min(m)) {
        if sub.len() < d {
            continue;
        }
        let a = QMatrix::from_fn(d, d, |i, j| ineqs[sub[i]][j + 1].clone());
        let b: QVector = sub.iter().map(|&i| -ineqs[i][0].clone()).collect();
        let Some(x) = solve_unique(&a, &b) else {
            continue;
        };
        let feasible = ineqs.iter().all(|row| {
            let mut v = row[0].clone();
            v += dot(&row[1..], &x);
            !v.is_negative()
        });
        if feasible {
            found.insert(x);
        }
    }
    found.into_iter().collect()
}

/// Exact circumcenter of a set of points, if one exists (all points
/// equidistant from it): solves the bisector equations.
pub fn circumcenter(points: &[QVector]) -> Option<QVector> {
    let d = points[0].len();
    let k = points.len();
    if k < 2 {
        return None;
    }
    let a = QMatrix::from_fn(k - 1, d, |i, j| {
        (&points[i + 1][j] - &points[0][j]) * rat(2)
    });
    let b: QVector = (1..k)
        .map(|i| dot(&points[i], &points[i]) - dot(&points[0], &points[0]))
        .collect();
    solve_unique(&a, &b)
}

/// Squared euclidean distance.
pub fn dist2(a: &QVector, b: &QVector) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let t = x - y;
            &t * &t
        })
        .sum()
}

/// Determinant over the integers, cofactor expansion.
pub fn int_laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    assert_eq!(n, m[0].len());
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let cof = &m[0][j] * int_laplace_det(&minor);
        if j % 2 == 0 {
            det += cof;
        } else {
            det -= cof;
        }
    }
    det
}

/// gcd of all k×k minors of an integer matrix; zero when every minor
/// vanishes. The chain g_1, g_2, ... determines the Smith invariant
/// factors via d_k = g_k / g_{k-1}.
pub fn minor_gcd(m: &[Vec<BigInt>], k: usize) -> BigInt {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut g = BigInt::zero();
    for rs in subsets_k(rows, k) {
        for cs in subsets_k(cols, k) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            g = g.gcd(&int_laplace_det(&sub));
        }
    }
    g.abs()
}

/// Order of the side-preserving automorphism group of an incidence
/// structure, by exhaustive search over vertex permutations. Only
/// sensible for very small instances.
pub fn automorphism_count_brute(sets: &[Vec<usize>], n_vertices: usize) -> u64 {
    let original: BTreeSet<BTreeSet<usize>> =
        sets.iter().map(|s| s.iter().copied().collect()).collect();
    assert_eq!(original.len(), sets.len(), "duplicate facets");
    let mut count = 0;
    for perm in permutations(n_vertices) {
        let mapped: BTreeSet<BTreeSet<usize>> = sets
            .iter()
            .map(|s| s.iter().map(|&v| perm[v]).collect())
            .collect();
        if mapped == original {
            count += 1;
        }
    }
    count
}
