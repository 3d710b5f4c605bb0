//! Finite projective planes and mutually projective Latin squares.
//!
//! The crate converts between the incidence matrix of a projective plane of
//! order `κ` and a complete set of `κ − 1` mutually projective Latin squares
//! (MPLS), in both directions. Around that core it provides:
//!
//! * [`binmat`]: 0/1 matrices, permutations and block partitions;
//! * [`geometry`]: finite linear spaces, the two projective-plane tests, the
//!   de Bruijn–Erdős classification and incident injections;
//! * [`field`] and [`planes`]: `GF(q)` and the Desarguesian plane `PG(2, q)`;
//! * [`canonical`]: the staged block normal form of a plane's incidence
//!   matrix, MPLS extraction and plane reconstruction;
//! * [`latin`]: Latin squares, projectivity, pair coverage, transversals and
//!   resolutions, plus the submatrix and group-product covering properties;
//! * [`matching`]: maximum independent ones `v(F)`, maximum zero submatrix
//!   `w(F)`, König–Frobenius duality and permutation-matrix decomposition.

pub mod binmat;
pub mod canonical;
pub mod error;
pub mod field;
pub mod geometry;
pub mod json;
pub mod latin;
pub mod matching;
pub mod planes;

pub use binmat::{BinaryMatrix, BlockPartition, Permutation};
pub use canonical::{canonicalize, extract_mpls, reconstruct, verify_block_form, BlockForm};
pub use error::{Error, GeometryViolation, Result};
pub use field::FiniteField;
pub use geometry::{Classification, Geometry, GeometryReport, PlaneVerdict};
pub use latin::{LatinSquare, MplsSet, Transversal};
pub use matching::{MatchingWitness, ZeroBlockWitness};
pub use planes::{build_pg2, PlaneBundle};
