//! Centralized numerical tolerances.

/// Structural checks: Hermiticity, unit trace, state normalization,
/// Kraus completeness.
pub const STRUCTURAL: f64 = 1e-12;

/// Accuracy demanded of eigenvalue routines (dims <= 32).
pub const EIGENVALUE: f64 = 1e-10;

/// How far below zero an eigenvalue of a density matrix may sit before it
/// counts as a genuine positivity violation rather than rounding dust.
pub const PSD_SLACK: f64 = -1e-10;

/// Largest imaginary part tolerated in the concurrence spectrum.
pub const SPECTRUM_IMAG: f64 = 1e-8;
