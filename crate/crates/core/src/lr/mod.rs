//! Littlewood-Richardson tableaux, coefficients and Schur products.

mod expansion;
mod glr;
pub(crate) mod product;
mod tableau;

pub use expansion::SchurExpansion;
pub use glr::{enumerate_glr_tableaux, freeze, glr_coef, thaw, GLRTableau};
pub use product::{
    multi_schur_product, multiply_expansion, multiply_expansion_in_box, schur_product,
    schur_product_in_box,
};
pub use tableau::{enumerate_lr_tableaux, lr_coef, lr_tableaux, LRTableau};
