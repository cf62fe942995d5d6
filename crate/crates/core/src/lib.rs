//! Knot and link invariants of closed braids, computed exactly over
//! Laurent-polynomial rings from the Burau, Wada and two-variable
//! representations of the braid groups.

pub mod braid;
pub mod fixtures;
pub mod freegroup;
pub mod invariants;
pub mod matrix;
pub mod representations;
pub mod ring;
