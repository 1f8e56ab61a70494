//! Computational toolkit for the θ-representations attached to the seven
//! gradings of the exceptional Lie algebra E7.
//!
//! The crate builds the graded algebra from its root system, computes orbit
//! dimensions at representatives, runs Bott's algorithm on homogeneous
//! bundles over flag varieties of the Levi factor, and assembles Euler
//! characteristics and Hilbert series of orbit closures through the
//! geometric technique. The published orbit tables ship as a data atlas
//! that every computation can be replayed against.

pub mod atlas;
pub mod bott;
pub mod bundles;
pub mod chevalley;
pub mod error;
pub mod geomtech;
pub mod grading;
pub mod linalg;
pub mod orbits;
pub mod rootsys;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Basis, DiagramType, RootSystem, Weight, WeylFrame};
