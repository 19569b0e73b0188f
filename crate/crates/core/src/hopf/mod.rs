//! Algebras, coalgebras, bialgebras and Hopf algebras by structure constants.

mod algebra;
mod antipode;
mod bialgebra;
mod coalgebra;

pub use algebra::{check_algebra, invert_in_algebra, AlgebraData, TensorPower};
pub use antipode::{antipode_order, check_hopf, delta_op, HopfData};
pub use bialgebra::{check_bialgebra, BialgebraData};
pub use coalgebra::{check_coalgebra, CoalgebraData};
