//! Elimination primitives against independent cofactor/minor oracles.

use polyq_core::linalg::{determinant, gauss_reduce, kernel_basis, rank};
use polyq_core::matrix::QMatrix;
use polyq_core::rational::{rat, ratio};
use polyq_testkit::oracle::{laplace_det, minor_rank};
use polyq_testkit::rng::XorShift64;

fn random_matrix(rng: &mut XorShift64, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| {
        ratio(rng.below_signed(4), rng.range(1, 4))
    })
}

#[test]
fn rank_matches_minor_oracle() {
    let mut rng = XorShift64::new(11);
    for _ in 0..25 {
        let m = random_matrix(&mut rng, 4, 6);
        assert_eq!(rank(&m), minor_rank(&m));
    }
}

#[test]
fn gauss_reduce_is_idempotent() {
    let mut rng = XorShift64::new(7);
    for _ in 0..10 {
        let m = random_matrix(&mut rng, 3, 5);
        let r1 = gauss_reduce(&m).rref;
        assert_eq!(gauss_reduce(&r1).rref, r1);
    }
}

#[test]
fn kernel_annihilates_and_counts() {
    let mut rng = XorShift64::new(23);
    for _ in 0..20 {
        let m = random_matrix(&mut rng, 3, 5);
        let k = kernel_basis(&m);
        assert!(m.mul(&k.transpose()).unwrap().is_zero());
        assert_eq!(rank(&m) + k.n_rows(), m.n_cols());
    }
}

#[test]
fn determinant_matches_laplace_oracle() {
    let mut rng = XorShift64::new(5);
    for _ in 0..25 {
        let m = QMatrix::from_fn(4, 4, |_, _| rat(rng.below_signed(4)));
        assert_eq!(determinant(&m).unwrap(), laplace_det(&m));
    }
}

#[test]
fn determinant_transpose_and_duplicate_row() {
    let mut rng = XorShift64::new(9);
    for _ in 0..10 {
        let m = random_matrix(&mut rng, 4, 4);
        assert_eq!(
            determinant(&m).unwrap(),
            determinant(&m.transpose()).unwrap()
        );
        let mut rows = m.to_rows();
        rows[3] = rows[0].clone();
        let dup = QMatrix::from_rows(rows).unwrap();
        assert_eq!(determinant(&dup).unwrap(), rat(0));
    }
}
