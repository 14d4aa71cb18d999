//! Spectral graph indices built on the normalized Laplacian.
//!
//! The crate computes the Estrada index family (EE over adjacency spectra,
//! LEE over Laplacian spectra, NEE over normalized Laplacian spectra),
//! evaluates extremal lower/upper bounds on NEE with exact equality-family
//! detection, and constructs a self-similar tree family whose normalized
//! Laplacian spectrum it obtains two independent ways: a dense symmetric
//! Jacobi eigensolver (the brute-force oracle, O(N^3)) and an exact O(N)
//! decimation recursion. The two routes cross-validate each other in the
//! `acceptance` test suite and via the `verify` CLI subcommand.

pub mod bounds;
pub mod decimation;
pub mod error;
pub mod fractal;
pub mod graph;
pub mod indices;
pub mod kahan;
pub mod linalg;
pub mod spectra;
pub mod textfmt;

pub use bounds::{evaluate_bounds, BoundReport};
pub use decimation::SpectrumMultiset;
pub use error::{Error, Result};
pub use fractal::FractalGraph;
pub use graph::Graph;
pub use linalg::SymmetricMatrix;
pub use spectra::Spectrum;
