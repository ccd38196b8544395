//! Legendre expansion coefficients in O(N log N).
//!
//! The coefficients `c_n` of `f(x) = Σ c_n P_n(x)` on `[-1, 1]` are recovered
//! as `(2n + 1)` times the nonnegative-index Fourier coefficients of a
//! 2π-periodic Abel-type transform `ĥf(y)` of `f`. The pipeline is:
//!
//! 1. sample `ĥf` on a uniform grid of `M` points in `[-π, π)`
//!    ([`abel::sample_grid`]), each sample being a smooth Gauss–Legendre
//!    quadrature after the substitution `x = cos y + (1 - cos y) t²`;
//! 2. take one radix-2 FFT of the grid ([`fft::dft_forward`]);
//! 3. scale bin `n` by `(2n + 1) (-1)^n 2π / M` ([`spectral::coefficients_from_grid`]).
//!
//! [`oracle::oracle_coefficients`] computes the same coefficients by direct
//! O(N·Q) quadrature and [`spectral::sine_form_transform`] by a real sine
//! transform of `φ(y)`; both serve as independent checks of the fast path.

pub mod abel;
pub mod bench;
pub mod catalog;
pub mod cli;
mod error;
pub mod fft;
pub mod legendre;
pub mod oracle;
pub mod quadrature;
pub mod spectral;
mod spline;

pub use abel::{hfhat, phi, sample_grid, AbelGrid};
pub use catalog::{
    parse_spec, FunctionKind, FunctionSpec, Integrand, Interpolation, SampledFunction,
};
pub use error::{Error, Result};
pub use legendre::{
    abs32_reference_coeff, clenshaw_eval, dirichlet_murphy_p, legendre_p, SeriesCoefficients,
};
pub use oracle::{compare, oracle_coefficients, ComparisonReport};
pub use quadrature::QuadratureRule;
pub use spectral::{
    coefficients_from_grid, legendre_transform, sine_form_transform, LegendreCoefficients, Method,
};
