//! Certified constructors for the standard example families. Every
//! constructor runs the relevant checkers and refuses to return anything that
//! fails them.

mod groups;
mod hopf_algebras;
mod twists;
mod yd_algebras;

pub use groups::GroupPresentation;
pub use hopf_algebras::{certify_hopf, group_algebra, sweedler_h4, tensor_terms, trivial_hopf};
pub use twists::{bicharacter_structures, bicharacter_value, character_idempotents, coboundary_twist};
pub use yd_algebras::{adjoint_yd, certify_braided, character_graded_yd, conjugation_yd};
