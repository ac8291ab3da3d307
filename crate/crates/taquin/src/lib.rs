//! Jeu de taquin on unshifted and shifted, straight and skew shapes.
//!
//! The crate provides the sliding operations (forward, backward, and the
//! modified jeu de taquin driven by an order tableau), the paired
//! operations that replay every transposition onto a companion filling,
//! and a verification layer that checks the symmetry of the resulting
//! count matrices by exhaustive or seeded-random enumeration.

pub mod analysis;
pub mod format;
pub mod jdt;
pub mod shape;
pub mod tableaux;

pub use analysis::{
    a_matrix, verify_constancy, verify_fj_eq_bj, verify_identity_eq1, verify_involution,
    verify_mj_properties, verify_pi_tracking, verify_symmetry, AnalysisError, CountMatrix,
    Counterexample, MatrixOptions, VerificationReport, VerifyMode, EXHAUSTIVE_CAP,
};
pub use format::{
    digit_rows, matrix_to_csv, matrix_to_json, parse_filling, render_digit_matrix,
    render_filling, DigitLegend, FormatError,
};
pub use jdt::{
    backward_jdt, bj, bj_traced, fj, fj_traced, forward_jdt, modified_jdt, modified_jdt_traced,
    step_down, step_up, JdtError, MjPass, MjTrace, PairedPass, PairedState, PairedTrace,
    Transcript,
};
pub use shape::{Cell, Dir, Mask, Shape, ShapeError};
pub use tableaux::{
    canonical_order, enumerate_standard, enumerate_standard_with_cap, hook_product, lex_index,
    CanonicalOrder, Filling, Permutation, TableauxError, ENUMERATION_CAP,
};
