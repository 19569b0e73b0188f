//! Smash products, left bialgebroids over a noncommutative base, balanced
//! tensor products, scalar extensions and their twisting by induced cocycles.

mod balanced;
mod bialgebroid;
mod smash;
mod twisting;

pub use balanced::{check_balanced_routes, BalancedTensor};
pub use bialgebroid::{
    algebra_generators, blacktriangle, check_bialgebroid, check_bialgebroid_with, check_representative_independence,
    scalar_extension, scalar_extension_unchecked, Bialgebroid, CheckOptions,
};
pub use smash::{check_smash, smash_product, zeta_smash_iso, zeta_smash_map, SmashAlgebra};
pub use twisting::{
    check_cocycle, check_main_theorem, check_twisted_base, induced_cocycle, twist_base, twist_bialgebroid,
    BialgebroidCocycle, TwistedBase,
};
