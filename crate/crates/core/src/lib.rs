//! Spectral solver for an axially symmetric nonlinear Helmholtz problem on a
//! spherical shell, plus identification of the nonlinearity from field data.
//!
//! The field is expanded in Legendre polynomials in `t = cos(theta)`; the
//! radial dependence of the expansion coefficients is integrated as a first
//! order ODE system. The nonlinearity `F` acting on the intensity `|U|^2` is
//! represented by Chebyshev coefficients on an interval `[alpha, beta]`, and
//! recovered from sampled trajectories ring by ring via a least squares fit.

pub mod chebyshev;
pub mod error;
pub mod forward;
pub mod inverse;
pub mod legendre;
pub mod ode;
pub mod special;
pub mod util;
pub mod validation;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Complex = num_complex::Complex64;
