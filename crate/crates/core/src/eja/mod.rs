//! Euclidean Jordan algebras: the four non-exceptional simple families and
//! their direct sums.

mod algebra;
mod linear_map;
mod quaternion;
mod spectral;

pub use algebra::{
    jordan_identity_residual, jordan_product, trace_inner_product, Algebra, AlgebraKind, Element,
};
pub use linear_map::{left_multiplication, quadratic_rep, LinearMap};
pub use quaternion::Quaternion;
pub use spectral::{
    cone_membership, frame_residuals, functional_calculus, inverse, spectral_decompose, sqrt,
    try_functional_calculus, ConeClass, ConeMembership, FrameResiduals, SpectralData,
};
