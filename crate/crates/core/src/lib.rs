//! Exact finite category theory and homological algebra.
//!
//! The crate works with fully enumerated finite categories and computes
//! limits and colimits of finite-set and finitely generated abelian group
//! diagrams over them. Every existence claim is answered with an explicit
//! witness: zig-zags, upper bounds, coequalizing arrows, cocones, and
//! inverse pairs of homomorphisms.
//!
//! * [`fincat`]: categories, functors and the connected/final/filtered/sifted
//!   decision procedures.
//! * [`setdiag`]: set-valued diagrams, their limits and colimits, and the
//!   filtered-colimit/finite-limit commutation harness.
//! * [`abgrp`]: integer matrices, Smith normal form, presented abelian groups.
//! * [`abdiag`]: abelian-group diagrams, (co)invariants and the AB-axiom checks.
//! * [`harting`]: the multiset category `HX` and the expansion of a family of
//!   groups into a filtered `HX`-diagram with the same colimit.
//! * [`random`]: seeded generators for the randomized verification suites.

pub mod abdiag;
pub mod abgrp;
mod error;
pub mod fincat;
pub mod harting;
pub mod random;
pub mod setdiag;
mod union_find;
mod validation;

pub use abdiag::{AbCocone, AbColimit, AbCone, AbDiagram, AbLimit, Family, GModule};
pub use abgrp::{AbHom, FGAbGroup, IntMatrix, Snf};
pub use error::{Error, Result};
pub use fincat::{Category, FinCategory, FinFunctor, FinGroup, ZigZag};
pub use harting::{HxCategory, HxObject};
pub use setdiag::{Cocone, Cone, FinSet, SetFunctor};
pub use validation::{ValidationReport, Violation};
