//! Composites of complex quantum models and their dagger-compact structure:
//! the tensor pairing `π(x, y) = x ⊗ y`, local tomography, the snake
//! identities for `A` and its conjugate, the dagger taken in the
//! self-dualizing inner products, and conjugation of processes.

mod compact;
mod composite;
mod dagger;

pub use compact::{snake_check, SnakeReport};
pub use composite::{
    local_tomography_check, quantum_composite, spanning_projections, Composite, CompositeReport,
    LocalTomography,
};
pub use dagger::{
    conjugate_functoriality_check, conjugate_map, dagger_adjoint, dagger_check, DaggerReport,
    Functoriality,
};
