//! A workbench for finite 2-categories and double categories.
//!
//! Everything is fully materialized: categories, 2-categories, and double
//! categories carry explicit composition tables, so every axiom, universal
//! property, and equivalence theorem is decided by a finite loop. The crate
//! provides:
//!
//! - exact finite structures with exhaustive validators ([`cat`], [`two_cat`],
//!   [`dbl_cat`]);
//! - structure-preserving maps with coherence validators, equivalence-witness
//!   search, and bounded enumeration ([`maps`]);
//! - the structure functors between the 2-categorical and double-categorical
//!   worlds ([`constructions`]);
//! - pseudo-comma and pseudo-slice constructions ([`commas`]);
//! - double categories of elements and hom-valued presheaves ([`elements`]);
//! - decision procedures for trivial fibrations and 2-dimensional initiality
//!   ([`initiality`]), tabulators and powers ([`tabulators`]),
//!   bi-representations ([`representability`]), and bi-adjunctions and
//!   weighted bi-limits ([`applications`]).
//!
//! All values are immutable after construction, every operation is a pure
//! function, and all iteration is in canonical id order, so results are
//! deterministic and safe to share across threads.

pub mod applications;
pub mod cat;
pub mod commas;
pub mod constructions;
pub mod dbl_cat;
pub mod elements;
pub mod error;
pub mod fixtures;
pub mod initiality;
pub mod maps;
pub mod report;
pub mod representability;
pub mod sort_map;
pub mod tabulators;
pub mod two_cat;

pub use error::{Caps, Error, Result};
pub use report::{InitialityFailure, InitialityReport, Report, Violation};
