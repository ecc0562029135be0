//! Exact spectral analysis of graphs with twin vertices.
//!
//! Twin vertices (duplicates: non-adjacent with equal neighbourhoods;
//! co-duplicates: adjacent with equal neighbourhoods) contribute the
//! eigenvalues 0 and −1 respectively, and deleting one of them shifts every
//! other simple eigenvalue. This crate computes exact characteristic
//! polynomials with arbitrary-precision integers, evaluates the deletion
//! identity `Φ(A(G_{−v_ℓ})) = Φ(A(G))/(λ + a_{ℓ,k}) + h_{ℓ,k}`, isolates
//! spectra with Sturm sequences, and produces first- and second-order
//! estimates of each eigenvalue's displacement.
//!
//! The `parallel` feature (on by default) runs the data-parallel kernels —
//! determinant evaluation nodes, root refinement, candidate searches — on
//! rayon; results are bitwise identical to the sequential fallback.

pub mod charpoly;
pub mod displacement;
pub mod error;
mod exec;
pub mod graph;
pub mod jacobi;
pub mod poly;
pub mod reconstruct;
pub mod spectra;
pub mod squarefree;
pub mod sturm;

pub use error::{Error, Result};
pub use graph::{build_nsg, CreationSequence, Graph, TwinKind, TwinPair};
pub use poly::{Polynomial, Rational};
pub use spectra::Spectrum;
