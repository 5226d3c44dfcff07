//! Brute-force oracles for the test suites.
//!
//! Everything here is deliberately naive: cofactor expansions, subset
//! enumeration, permutation search. The implementations under test must
//! agree with these on small instances.

pub mod oracle;

pub mod rng {
    pub use polyq_core::rng::XorShift64;
}
