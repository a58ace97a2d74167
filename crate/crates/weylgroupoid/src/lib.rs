//! Weyl groupoids of bicharacters of diagonal type, their Cayley graphs, and
//! Hamilton circuits on them.
//!
//! The crate computes with exact scalars only ([`exactnum`]). A bicharacter
//! ([`bichar::Bicharacter`]) determines the local reflections; [`groupoid`]
//! closes them into the Cayley graph of the Weyl groupoid and checks the
//! Cartan-scheme axioms. [`coxeter`] handles finite Coxeter groups through
//! their exact geometric representation, and [`hamilton`] builds and verifies
//! Hamilton circuits by coset splicing, with a backtracking search as an
//! independent check. [`catalog`] collects named examples and reads catalog
//! files.

#![allow(clippy::needless_range_loop)]

pub mod bichar;
pub mod catalog;
pub mod classify;
pub mod coxeter;
pub mod exactnum;
pub mod graph;
pub mod groupoid;
pub mod hamilton;
pub mod matrix;
pub mod par;

pub use bichar::{Bicharacter, NValue, ObjectKey};
pub use catalog::{Catalog, CatalogEntry};
pub use coxeter::CoxeterSystem;
pub use exactnum::{CycInteger, CycScalar};
pub use graph::LabeledGraph;
pub use groupoid::CayleyGraph;
pub use hamilton::{CircuitMap, CircuitReport};
pub use matrix::IntMatrix;
pub use par::Exec;
