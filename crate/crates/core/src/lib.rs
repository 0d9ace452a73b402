//! Delta-matroids and their interlace polynomial, with the machinery needed
//! to verify the identities the toolkit is built around: set systems with the
//! symmetric exchange axiom, GF(2) symmetric matrices and binarity, simple
//! graphs with the pivot recursion, the two handle moves and their four-term
//! relation, and the graded product/coproduct structure with the projection
//! onto primitive elements.
//!
//! Ground sets are {1, …, n} with n ≤ 16; subsets travel as bitmasks
//! (element i ↔ bit i − 1). Operations that enumerate relabellings are
//! bounded at n ≤ 8, and the binary-universe enumerators at n ≤ 5.
//!
//! The crate deliberately keeps two independent roads to most quantities —
//! direct definitions versus recursions, matrices versus set systems — so
//! each can serve as the oracle for the other in the test suites.

pub mod canonical;
pub mod error;
pub mod gf2;
pub mod graphs;
pub mod hopf;
pub mod moves;
pub mod partitions;
pub mod polynomial;
pub mod set_system;

pub use error::{Error, Result};
pub use gf2::{binarity, Binarity, BinaryWitness, Gf2SymMatrix};
pub use graphs::{GraphMoves, GraphPolyMemo, SimpleGraph};
pub use hopf::{DmCombination, PrimitiveSpan, TensorCombination};
pub use moves::{BinaryUniverse, FourTermQuadruple, FourTermReport, PointwiseReport};
pub use polynomial::IntPolynomial;
pub use set_system::{
    DeltaMatroid, Element, ElementClass, Mask, Permutation, Reduction, SetSystem, Validity,
    MAX_GROUND,
};
