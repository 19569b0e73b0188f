//! Yetter–Drinfeld modules and module algebras, their monoidal structure and
//! prebraiding, R-matrix coactions, and twisting along a Drinfeld twist.

mod modules;
mod rmatrix;
mod twisting;
mod ydalgebra;
mod ydmodule;

pub use modules::{check_comodule, check_module, ComoduleData, ModuleData};
pub use rmatrix::{check_rmatrix, coaction_from_r, r_braiding, RMatrix};
pub use twisting::{
    check_czgen, check_prebraid_compat, check_zeta, check_zeta_coherence, twist_coaction, twist_yd_algebra,
    zeta_inverse_map, zeta_map,
};
pub(crate) use twisting::{twisted_algebra_over, twisted_host};
pub use ydalgebra::{check_braided_commutative, check_yd_algebra, rehost, trivial_yd_algebra, YDAlgebra};
pub use ydmodule::{
    check_yd, check_yd_condition, check_yd_morphism, diagonal_action, prebraid, prebraid_is_invertible,
    prebraid_map, tensor_coaction, yd_condition_sides, yd_tensor, YDModule,
};
