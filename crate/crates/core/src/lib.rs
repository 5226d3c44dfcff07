//! Exact rational polyhedral geometry kernel.
//!
//! Everything is computed over arbitrary-precision rationals: convex
//! hulls (double description and beneath-beyond), linear programming,
//! face lattices and combinatorial invariants, polytope constructions,
//! combinatorial isomorphism, Delaunay/Voronoi/crust reconstructions,
//! and simplicial homology.

pub mod construct;
pub mod error;
pub mod hull;
pub mod iso;
pub mod linalg;
pub mod matrix;
pub mod props;
pub mod rational;
pub mod rng;

pub use error::{Error, Result};
pub use matrix::QMatrix;
pub use rational::{QVector, Rational};
