//! Default numerical tolerances.

/// Default comparison tolerance for eigenvalue classification and invariant
/// checks.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Eigenvalues closer than this (relative to `1 + |largest|`) form one block.
pub const MERGE_TOL: f64 = 1e-8;
