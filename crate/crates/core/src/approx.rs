//! Normal approximations to polynomial coefficients.
//!
//! The sum of `m` uniform draws on `{0, ..., l}` has mean `ml/2` and variance
//! `m((l+1)^2 - 1)/12`, and is asymptotically normal. Multiplying a normal
//! estimate of `P[S = n]` by `(l+1)^m` estimates `C(m, n)_{l+1}`. All
//! coefficient estimates are returned in natural-log space because `(l+1)^m`
//! leaves the `f64` range for moderate `m`.

use core::f64::consts::{FRAC_1_SQRT_2, LN_2, PI};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, Result};

/// `ln(f64::MAX)`; anything at or above this has no finite linear value.
const LN_F64_MAX: f64 = 709.782_712_893_384;

/// `1 / sqrt(2 pi)`
const FRAC_1_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// A positive quantity held as its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogApprox {
    pub log_value: f64,
    /// `exp(log_value)` when that is a finite double.
    pub value: Option<f64>,
}

impl LogApprox {
    pub fn from_log(log_value: f64) -> Self {
        let value = (log_value < LN_F64_MAX).then(|| libm::exp(log_value));
        LogApprox { log_value, value }
    }
}

/// Density of the standard normal law.
pub fn std_normal_pdf(z: f64) -> f64 {
    FRAC_1_SQRT_2PI * libm::exp(-0.5 * z * z)
}

/// Distribution function of the standard normal law, `0.5 * erfc(-z / sqrt 2)`.
pub fn std_normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z * FRAC_1_SQRT_2)
}

/// Limit variance of `sqrt(m) (S/m - l/2)`: `((l+1)^2 - 1) / 12`.
pub fn clt_limit_variance(l: u64) -> BigRational {
    let faces = BigInt::from(l) + 1;
    BigRational::new(&faces * &faces - 1, BigInt::from(12))
}

/// `(mu, sigma^2)` in floating point, rejecting the zero-variance case.
fn normal_params(m: u64, l: u64) -> Result<(f64, f64)> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1"));
    }
    if l == 0 {
        return Err(Error::Domain("l must be at least 1 (l = 0 has zero variance)"));
    }
    let m = m as f64;
    let faces = l as f64 + 1.0;
    Ok((0.5 * m * l as f64, m * (faces * faces - 1.0) / 12.0))
}

fn check_support(m: u64, n: u64, l: u64) -> Result<()> {
    if n as u128 > m as u128 * l as u128 {
        return Err(Error::Domain("n must lie in 0..=m*l"));
    }
    Ok(())
}

/// `m ln(l+1) - ln(2 pi sigma^2) / 2`
fn log_peak(m: u64, l: u64, variance: f64) -> f64 {
    m as f64 * libm::log1p(l as f64) - 0.5 * libm::log(2.0 * PI * variance)
}

/// Rectangle estimate of the central coefficient:
/// `C(m, ml/2)_{l+1} ~ (l+1)^m / sqrt(2 pi m ((l+1)^2 - 1) / 12)`.
///
/// For odd `ml` this is the estimate for index `floor(ml/2)`.
pub fn central_approx(m: u64, l: u64) -> Result<LogApprox> {
    let (_, variance) = normal_params(m, l)?;
    Ok(LogApprox::from_log(log_peak(m, l, variance)))
}

/// Density estimate of a single coefficient:
/// `C(m, n)_{l+1} ~ (l+1)^m / sqrt(2 pi sigma^2) * exp(-(n - mu)^2 / (2 sigma^2))`.
///
/// `mu = ml/2` is kept exact, so odd `ml` shifts every `n` by a half step.
pub fn pointwise_approx(m: u64, n: u64, l: u64) -> Result<LogApprox> {
    let (mean, variance) = normal_params(m, l)?;
    check_support(m, n, l)?;
    let offset = n as f64 - mean;
    Ok(LogApprox::from_log(log_peak(m, l, variance) - offset * offset / (2.0 * variance)))
}

/// Continuity-corrected estimate of `P[S = n]`:
/// `Phi((n + 1/2 - mu) / sigma) - Phi((n - 1/2 - mu) / sigma)`.
pub fn cc_phi_approx(m: u64, n: u64, l: u64) -> Result<f64> {
    let (mean, variance) = normal_params(m, l)?;
    check_support(m, n, l)?;
    let sigma = libm::sqrt(variance);
    let lo = (n as f64 - 0.5 - mean) / sigma;
    let hi = (n as f64 + 0.5 - mean) / sigma;
    // Difference the smaller tail so the upper half keeps its precision.
    let p = if lo > 0.0 { std_normal_cdf(-lo) - std_normal_cdf(-hi) } else { std_normal_cdf(hi) - std_normal_cdf(lo) };
    Ok(p.max(0.0))
}

/// [`cc_phi_approx`] scaled by `(l+1)^m` into a coefficient estimate.
pub fn cc_phi_coefficient(m: u64, n: u64, l: u64) -> Result<LogApprox> {
    let p = cc_phi_approx(m, n, l)?;
    Ok(LogApprox::from_log(libm::log(p) + m as f64 * libm::log1p(l as f64)))
}

/// Log of the closed form for `l = 1..=4`, as it reads after simplifying
/// `sqrt(2 pi m ((l+1)^2 - 1) / 12)`.
pub fn specialized_central_log(m: u64, l: u64) -> Option<f64> {
    let mf = m as f64;
    let ln = libm::log;
    match l {
        // 2^(m+1) / sqrt(2 pi m)
        1 => Some((mf + 1.0) * LN_2 - 0.5 * ln(2.0 * PI * mf)),
        // 3^m / sqrt(4/3 pi m)
        2 => Some(mf * ln(3.0) - 0.5 * ln(4.0 / 3.0 * PI * mf)),
        // 4^m / sqrt(5/2 pi m)
        3 => Some(mf * ln(4.0) - 0.5 * ln(2.5 * PI * mf)),
        // 5^m / (2 sqrt(pi m))
        4 => Some(mf * ln(5.0) - LN_2 - 0.5 * ln(PI * mf)),
        _ => None,
    }
}
