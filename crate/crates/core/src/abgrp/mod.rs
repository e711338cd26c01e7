//! Finitely generated abelian groups presented by integer matrices.

mod group;
mod hom;
mod lattice;
mod matrix;
mod snf;

pub use group::{group_from_presentation, CanonicalForm, FGAbGroup};
pub use hom::{are_isomorphic, biproduct, hom_compose, hom_equal, hom_validate, AbHom, Biproduct, Cokernel, Kernel};
pub use lattice::kernel_basis;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, Snf};
