//! Seminorm computations and verification suites for zero-product structure
//! on finite-dimensional Banach algebras.
//!
//! The crate is organized around five pieces:
//!
//! * [`algebra`] — finite-dimensional Banach algebras given by structure
//!   constants (group algebras, matrix algebras), their norms and
//!   annihilator subspaces.
//! * [`seminorms`] — the bilinear-functional seminorms (operator norm,
//!   multiplicativity defect, zero-product seminorm) and the distance to
//!   product-factoring functionals, with certificates and witnesses.
//! * [`torus`] — absolutely convergent Fourier series on the circle and the
//!   2-torus, arc windows and partition identities, and the constant kappa.
//! * [`spanning`] — finite matrix groups spanning a full matrix algebra,
//!   the ell^1 homomorphism, and the averaged diagonal tensor.
//! * [`report`] — batch drivers and machine-readable run reports used by
//!   the CLI.

pub mod algebra;
pub mod cplx;
pub mod linalg;
pub mod meb;
pub mod report;
pub mod seminorms;
pub mod spanning;
pub mod torus;

pub use algebra::{AlgebraElement, AlgebraError, FiniteBanachAlgebra, NormKind};
pub use seminorms::{BilinearForm, LinearFunctional, SeminormCertificate, SeminormKind};
