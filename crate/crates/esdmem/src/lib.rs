//! Density-matrix toolkit for studying entanglement sudden death (ESD) in
//! passively protected quantum memories.
//!
//! The crate simulates logical qubits stored in small error-avoiding codes --
//! a four-qubit decoherence-free subspace (DFS4), a three-qubit noiseless
//! subsystem (NS3), and two exploratory two-qubit encodings -- under
//! independent dephasing and depolarizing Kraus channels. It provides the
//! entanglement metrics (negativity, concurrence, tri-partite negativity),
//! stored-information fidelities with their closed forms, and a sweep /
//! threshold engine that locates the decoherence strength at which an
//! entanglement measure vanishes.
//!
//! Qubits are indexed 1-based; qubit 1 is the most significant bit of the
//! computational-basis index.

pub mod channels;
pub mod codes;
pub mod eigen;
pub mod entanglement;
pub mod error;
pub mod esd;
pub mod qmatrix;
pub mod random;
pub mod tol;
pub mod validate;

pub use error::{Error, Result};
pub use qmatrix::{ComplexMatrix, DensityMatrix, PureState};
