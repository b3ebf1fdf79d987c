//! Numerical checks of the reconstruction chain: the self-dualizing form
//! `η(a, b̄)`, recovery of the Jordan product from spectral data alone,
//! correlating dilations of states, and classification of bits.

mod bits;
mod dilation;
mod product;
mod selfdual;

pub use bits::{bit_label, classify_bit, BitClass};
pub use dilation::{correlating_check, correlation_dilation, Correlation, Dilation};
pub use product::{
    candidate_product, recover_jordan_product, spectral_square, unhalved_product,
    unique_spectral_rep, ProductRecovery, SharpRepresentation,
};
pub use selfdual::{eta_inner_product, self_duality_check, EtaForm, SelfDualityReport};
