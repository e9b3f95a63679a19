//! Relative error of the normal approximations against exact coefficients.
//!
//! Exact coefficients can run to thousands of digits, so both sides are
//! compared as natural logs and the error is `|exp(approx - exact) - 1|`.

use alloc::vec::Vec;

use core::f64::consts::LN_2;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::approx::{cc_phi_approx, central_approx, pointwise_approx, std_normal_pdf};
use crate::coeffs::{central_coefficient_within, triangle_row_within};
use crate::dist::{exact_pmf_within, moments};
use crate::{Error, Limits, Result};

/// One exact-versus-approximate comparison at `(m, n, l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRecord {
    pub m: u64,
    pub l: u64,
    pub n: u64,
    pub exact_log: f64,
    pub approx_log: f64,
    pub rel_error: f64,
}

impl ErrorRecord {
    pub fn new(m: u64, l: u64, n: u64, exact_log: f64, approx_log: f64) -> Self {
        let rel_error = libm::expm1(approx_log - exact_log).abs();
        ErrorRecord { m, l, n, exact_log, approx_log, rel_error }
    }
}

/// Natural log of a positive big integer.
///
/// Uses the top 64 bits and the bit length, so the full value never passes
/// through a float. Writing `x = f * 2^(bits-1)` with `f` in `[1, 2)` makes
/// powers of two come out as exact multiples of `ln 2`.
pub fn log_of_big_integer(x: &BigUint) -> Result<f64> {
    let bits = x.bits();
    if bits == 0 {
        return Err(Error::Domain("logarithm needs a positive integer"));
    }
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_u64().expect("at most 64 bits remain");
    let top_bits = (bits - shift) as i32;
    let fraction = libm::ldexp(top as f64, 1 - top_bits);
    Ok(libm::log(fraction) + (bits - 1) as f64 * LN_2)
}

fn require_positive_alphabet(m: u64, l: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1"));
    }
    if l == 0 {
        return Err(Error::Domain("l must be at least 1 (l = 0 has zero variance)"));
    }
    Ok(())
}

/// Pointwise-approximation error at every `n` in `0..=ml`.
pub fn error_sweep(m: u64, l: u64) -> Result<Vec<ErrorRecord>> {
    error_sweep_within(m, l, &Limits::DEFAULT)
}

pub fn error_sweep_within(m: u64, l: u64, limits: &Limits) -> Result<Vec<ErrorRecord>> {
    require_positive_alphabet(m, l)?;
    let row = triangle_row_within(m, l, limits)?;
    row.values()
        .iter()
        .enumerate()
        .map(|(n, exact)| {
            let n = n as u64;
            let approx = pointwise_approx(m, n, l)?;
            Ok(ErrorRecord::new(m, l, n, log_of_big_integer(exact)?, approx.log_value))
        })
        .collect()
}

/// Error of the central estimate at `n = floor(ml/2)`, one record per `m`.
pub fn central_error_curve(l: u64, m_values: &[u64]) -> Result<Vec<ErrorRecord>> {
    central_error_curve_within(l, m_values, &Limits::DEFAULT)
}

pub fn central_error_curve_within(l: u64, m_values: &[u64], limits: &Limits) -> Result<Vec<ErrorRecord>> {
    m_values.iter().map(|&m| central_error_record(m, l, limits)).collect()
}

/// The record for a single `m` of [`central_error_curve`].
///
/// For even `ml` this is [`central_approx`]. For odd `ml` the coefficient
/// sits half a step off the mean, so the estimate is the pointwise formula
/// at `floor(ml/2)`; the bare rectangle value would put odd and even `m` on
/// two different error curves.
pub fn central_error_record(m: u64, l: u64, limits: &Limits) -> Result<ErrorRecord> {
    require_positive_alphabet(m, l)?;
    let exact = central_coefficient_within(m, l, limits)?;
    let centre = m * l / 2;
    let approx = if (m * l).is_multiple_of(2) { central_approx(m, l)? } else { pointwise_approx(m, centre, l)? };
    Ok(ErrorRecord::new(m, l, centre, log_of_big_integer(&exact)?, approx.log_value))
}

/// Exact probability beside the two normal estimates at one support point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PmfPoint {
    pub m: u64,
    pub l: u64,
    pub n: u64,
    pub exact: f64,
    /// Normal density `phi((n - mu) / sigma) / sigma`.
    pub normal_density: f64,
    pub cc_phi: f64,
}

/// Exact law of the sum next to its normal density over the whole support.
pub fn pmf_vs_normal(m: u64, l: u64) -> Result<Vec<PmfPoint>> {
    pmf_vs_normal_within(m, l, &Limits::DEFAULT)
}

pub fn pmf_vs_normal_within(m: u64, l: u64, limits: &Limits) -> Result<Vec<PmfPoint>> {
    require_positive_alphabet(m, l)?;
    let pmf = exact_pmf_within(m, l, limits)?;
    let mo = moments(m, l)?;
    let (mean, sigma) = (mo.mean_f64(), libm::sqrt(mo.variance_f64()));
    pmf.probs_f64()
        .into_iter()
        .enumerate()
        .map(|(n, exact)| {
            let n = n as u64;
            Ok(PmfPoint {
                m,
                l,
                n,
                exact,
                normal_density: std_normal_pdf((n as f64 - mean) / sigma) / sigma,
                cc_phi: cc_phi_approx(m, n, l)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn log_examples() {
        assert_eq!(log_of_big_integer(&BigUint::one()).unwrap(), 0.0);
        assert_eq!(log_of_big_integer(&(BigUint::one() << 100u32)).unwrap(), 100.0 * LN_2);
        let c = crate::coeffs::central_coefficient(100, 1).unwrap();
        // 50-digit log of C(100, 50).
        let got = log_of_big_integer(&c).unwrap();
        assert!((got - 66.783_841_652_017_43).abs() <= 66.79 * 2f64.powi(-50));
        assert!(log_of_big_integer(&BigUint::default()).is_err());
    }

    #[test]
    fn log_relative_accuracy() {
        // ln(3 * 2^e - 1) = ln 3 + e ln 2 + ln(1 - 1 / (3 * 2^e))
        for e in [1u32, 10, 52, 63, 64, 65, 200, 1000] {
            let x = (BigUint::one() << e) * 3u32 - 1u32;
            let expected = 3f64.ln() + e as f64 * LN_2 + (-1.0 / (3.0 * 2f64.powi(e as i32))).ln_1p();
            let got = log_of_big_integer(&x).unwrap();
            assert!(((got - expected) / expected).abs() <= 2f64.powi(-50), "e={e}");
        }
    }

    #[test]
    fn sweep_shape() {
        let sweep = error_sweep(100, 4).unwrap();
        assert_eq!(sweep.len(), 401);
        // The signed error changes sign about 2.3 sigma out, so the smallest
        // absolute error sits inside the central band, not exactly at n = 200.
        let best = sweep.iter().min_by(|a, b| a.rel_error.partial_cmp(&b.rel_error).unwrap()).unwrap();
        let sigma = 200f64.sqrt();
        assert!((best.n as f64 - 200.0).abs() <= 3.0 * sigma, "{}", best.n);
        for r in &sweep {
            assert_eq!(r.rel_error, sweep[400 - r.n as usize].rel_error);
        }
        assert!(sweep[40].rel_error > sweep[100].rel_error && sweep[100].rel_error > sweep[200].rel_error);
        // Beyond three sigma the error grows all the way to the boundary.
        let edge = (200.0 - 3.0 * sigma) as usize;
        assert!(sweep[..edge].windows(2).all(|w| w[0].rel_error > w[1].rel_error));
    }

    #[test]
    fn sweep_golden_values() {
        // 50-digit evaluation from an independent convolution of (1+...+x^4)^100.
        let sweep = error_sweep(100, 4).unwrap();
        assert!((sweep[200].rel_error - 0.001_628_378_626_841_125_5).abs() < 1e-10);
        assert!((sweep[180].rel_error - 0.002_710_605_561_615_336).abs() < 1e-10);
        assert!((sweep[100].rel_error - 2.879_103_038_471_385).abs() < 1e-9);
    }

    #[test]
    fn central_curve_tracks_stirling() {
        let ms = [10, 20, 40, 80, 160];
        let curve = central_error_curve(1, &ms).unwrap();
        for r in &curve {
            let ratio = r.rel_error * 4.0 * r.m as f64;
            assert!((0.99..1.02).contains(&ratio), "m={} ratio={ratio}", r.m);
        }
        // Odd m: 0.0190 at m = 11 against 0.0664 for the bare rectangle value.
        let odd = central_error_curve(1, &[11]).unwrap()[0];
        assert!((odd.rel_error - 0.019_039_5).abs() < 1e-6, "{}", odd.rel_error);
        let l4 = central_error_curve(4, &[5, 20]).unwrap();
        assert!(l4[1].rel_error < l4[0].rel_error);
        assert!(central_error_curve(0, &[5]).is_err());
    }

    #[test]
    fn record_invariant() {
        let r = ErrorRecord::new(1, 1, 0, 2.0, 2.5);
        assert!((r.rel_error - (0.5f64.exp() - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn pmf_vs_normal_columns() {
        for m in [5, 10, 20] {
            let pts = pmf_vs_normal(m, 4).unwrap();
            assert_eq!(pts.len() as u64, 4 * m + 1);
            let total: f64 = pts.iter().map(|p| p.exact).sum();
            assert!((total - 1.0).abs() < 1e-12);
            let centre = &pts[2 * m as usize];
            assert!((centre.normal_density / centre.exact - 1.0).abs() < 0.05);
        }
    }
}
