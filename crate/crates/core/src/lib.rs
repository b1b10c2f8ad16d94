//! Exact constructive Krull dimension.
//!
//! Entailment relations and the finite distributive lattices they present,
//! idealistic primes and chains with their collapse ladders, several
//! equivalent definitions of dimension, Joyal's Krull lattices, lattice
//! morphisms, and a computable-ring backend for the Zariski lattice.

pub mod bits;
pub mod dimension;
pub mod entailment;
pub mod error;
pub mod finlat;
pub mod krull_functor;
pub mod morphisms;
pub mod primes_chains;
pub mod random;
pub mod rings;

pub use bits::Bits;
pub use error::{KrullError, Result};
pub use finlat::{Element, FinLattice, Poset};
