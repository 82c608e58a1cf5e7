//! Classification of Legendrian and transverse torus links and cable links
//! in the standard contact 3-sphere.
//!
//! * [`farey`]: slopes, mediants and clockwise geodesics in the Farey graph.
//! * [`mountain`]: mountain ranges of knot types and membership in them.
//! * [`toruslinks`]: realizability, isotopy and permutations for torus links.
//! * [`cables`]: the same questions for cables of a knot type given as data.
//! * [`fronts`]: front diagrams as event words, their invariants, the
//!   standard constructions and rendering.
//! * [`cli`]: the `legcalc` command line.

pub mod cables;
pub mod cli;
pub mod farey;
pub mod fronts;
pub mod links;
pub mod mountain;
pub mod toruslinks;

pub use links::{Decision, LinkMultiset, NondestabRep, OrderedLink, Permutation, Realization, RepKind};
pub use mountain::{Invariants, MountainRange, Sign};
