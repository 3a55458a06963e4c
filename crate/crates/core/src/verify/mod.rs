//! Brute-force re-derivation of the extrema, equality conditions and band claims.
//!
//! Entropies here are recomputed from the angles by [`oracle`], which does not
//! go through [`crate::distributions`] or [`crate::pauli_measure`]; the closed
//! forms from [`crate::bounds`] only ever appear as the `claimed` side of a
//! [`VerificationReport`].
//!
//! Grid searches evaluate rows in parallel and reduce them in index order, so
//! the reported extremum and its location do not depend on the thread count.

mod checks;
mod grid;
pub mod oracle;
mod report;

pub use checks::{
    derivative_sign_check, diagonal_family_check, impurity_gap_scan, shannon_limit_check,
    sweep_band, BandSweep, DERIVATIVE_STEP, MIXED_RADIUS_CAP, RELATIVE_GAP_CLAIM, SIGN_TOLERANCE,
};
pub use grid::{
    grid_max_sum_pure, grid_max_sum_pure_with_claim, grid_min_sum, grid_min_sum_with_claim,
    GridDomain, GridSpec, MAX_RESOLUTION,
};
pub use report::{Comparison, VerificationReport};
