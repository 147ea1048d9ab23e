//! Quasi-crystals over root systems of types A and C.
//!
//! This crate implements:
//!
//! - exact root-system data (simple roots, coroot pairings, dominance order)
//!   and validators for the root-system axioms ([`rootsys`]);
//! - the quasi-crystal abstraction: extended integers, explicit finite
//!   quasi-crystal tables, axiom and seminormality validators, the standard
//!   quasi-crystals of types A and C, and homomorphism/isomorphism checks
//!   ([`qc_core`]);
//! - the monoid-with-zero of signatures and the quasi-tensor product of
//!   seminormal quasi-crystals ([`qtensor`]);
//! - the free quasi-crystal monoid on words, with fast inversion-scan
//!   operators for the standard alphabets and a generic signature-rule path
//!   for arbitrary seminormal alphabets ([`word_monoid`]);
//! - connected-component exploration of quasi-crystal graphs, the rooted
//!   component-isomorphism decision for the hypoplactic congruence, and
//!   DOT/JSON export ([`qgraph`]);
//! - hypoplactic-monoid semantics: the classical Knuth/quartic rewriting
//!   oracle for type A, classification of commutative and idempotent
//!   elements of type C, the rank-2 type-C normal form, identity checking,
//!   and the embedding homomorphisms between hypoplactic monoids
//!   ([`hypoplactic`]).
//!
//! All arithmetic is exact (integers and rationals); no floating point is
//! used anywhere.

pub mod hypoplactic;
pub mod qc_core;
pub mod qgraph;
pub mod qtensor;
pub mod rootsys;
pub mod word_monoid;

pub use qc_core::{ExtInt, QuasiCrystalTable};
pub use qtensor::Sig;
pub use rootsys::{RootData, Weight};
pub use word_monoid::{Alphabet, Word};
