//! Exact computational toolkit for built lattices: nested set complexes and
//! their face enumeration, vertex-decomposition certificates, convex ear
//! decompositions indexed by nbc-bases, and the descent-preserving bijection
//! between maximal nested sets of partition lattices and Stirling
//! permutations.
//!
//! All arithmetic is exact; nothing in the crate uses floating point or
//! randomness.

pub mod building;
pub mod ced;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod decomp;
pub mod io;
pub mod labeling;
pub mod matroid;
pub mod nested;
pub mod partition;
pub mod poset;
pub mod stirling;
pub mod sturm;
pub mod vectors;
