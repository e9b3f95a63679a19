//! Exact polynomial coefficients of `(1 + x + ... + x^l)^k`, the exact law of a
//! sum of discrete uniform variables, and normal approximations to both.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, the command
//! line and parallel drivers live in the companion `polycoef-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod approx;
pub mod coeffs;
pub mod compositions;
pub mod dist;
mod error;
mod limits;

pub use analysis::{central_error_curve, error_sweep, log_of_big_integer, pmf_vs_normal, ErrorRecord, PmfPoint};
pub use approx::{
    cc_phi_approx, central_approx, clt_limit_variance, pointwise_approx, std_normal_cdf, std_normal_pdf, LogApprox,
};
pub use coeffs::{
    central_coefficient, coefficient, coefficient_multinomial_oracle, poly_power_oracle, triangle_row, CoeffQuery,
    TriangleRow,
};
pub use compositions::{count_compositions, enumerate_compositions, CompositionQuery};
pub use dist::{exact_pmf, moments, sample_sums, ExactPmf, Moments, SamplerConfig};
pub use error::{Error, Result};
pub use limits::Limits;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
