//! Partition monoids and their substructures: diagram arithmetic, the
//! equivalence lattice, finite monoid closure, Ehresmann-type unary
//! operations and checkers, and exact enumeration of finitely presented
//! monoids.

pub mod catalog;
pub mod combinatorics;
pub mod dsu;
pub mod ehresmann;
pub mod equivalence;
pub mod error;
pub mod monoid;
pub mod par;
pub mod partition;
pub mod presentation;
pub mod render;
pub mod report;
pub mod rgs;
pub mod workbench;

pub use catalog::Family;
pub use ehresmann::LeftCongruence;
pub use equivalence::{BlockWord, EqFilter, Equivalence};
pub use error::{Error, Result};
pub use monoid::{BandType, FiniteMonoid, GreenData, Side, Units, DEFAULT_BUDGET};
pub use par::Exec;
pub use partition::{Membership, Partition, StructureSummary, Transformation};
pub use presentation::{Presentation, Schema, Symbol};
pub use report::{CheckReport, Witness};
