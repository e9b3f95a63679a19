//! The sum `S = S_1 + ... + S_m` of `m` independent draws, each uniform on
//! `{0, ..., l}`.
//!
//! `P[S = n]` is the polynomial coefficient `C(m, n)_{l+1}` divided by
//! `(l+1)^m`. [`exact_pmf`] keeps that ratio exact; [`sample_sums`] draws the
//! same law by simulation so the identity can be checked stochastically.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::coeffs::{triangle_row_within, TriangleRow};
use crate::{Error, Limits, Result};

/// Mean and variance of the sum, as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moments {
    pub m: u64,
    pub l: u64,
    /// `m * l / 2`
    pub mean: BigRational,
    /// `m * ((l+1)^2 - 1) / 12`
    pub variance: BigRational,
}

impl Moments {
    pub fn mean_f64(&self) -> f64 {
        self.mean.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn variance_f64(&self) -> f64 {
        self.variance.to_f64().unwrap_or(f64::INFINITY)
    }
}

fn require_positive_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("m must be at least 1"));
    }
    Ok(())
}

pub fn moments(m: u64, l: u64) -> Result<Moments> {
    require_positive_m(m)?;
    let mean = BigRational::new(BigInt::from(m) * BigInt::from(l), BigInt::from(2));
    let variance = crate::approx::clt_limit_variance(l) * BigRational::from_integer(BigInt::from(m));
    Ok(Moments { m, l, mean, variance })
}

/// Exact law of the sum: `probs[n] = coeff[n] / (l+1)^m`.
///
/// Numerators are kept as the raw triangle row over the common denominator;
/// [`ExactPmf::prob`] returns the reduced fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPmf {
    row: TriangleRow,
    denominator: BigUint,
}

impl ExactPmf {
    pub fn m(&self) -> u64 {
        self.row.k()
    }

    pub fn l(&self) -> u64 {
        self.row.l()
    }

    /// Number of support points, `m*l + 1`.
    pub fn len(&self) -> usize {
        self.row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row.is_empty()
    }

    /// Unnormalised weights, i.e. the triangle row.
    pub fn numerators(&self) -> &[BigUint] {
        self.row.values()
    }

    /// `(l+1)^m`
    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    /// `P[S = n]` in lowest terms; zero outside the support.
    pub fn prob(&self, n: i64) -> BigRational {
        match self.row.get(n) {
            Some(num) => BigRational::new(num.clone().into(), self.denominator.clone().into()),
            None => BigRational::zero(),
        }
    }

    pub fn probs(&self) -> Vec<BigRational> {
        (0..self.len() as i64).map(|n| self.prob(n)).collect()
    }

    /// Probabilities rounded to double precision.
    pub fn probs_f64(&self) -> Vec<f64> {
        self.probs().iter().map(|p| p.to_f64().unwrap_or(0.0)).collect()
    }
}

pub fn exact_pmf(m: u64, l: u64) -> Result<ExactPmf> {
    exact_pmf_within(m, l, &Limits::DEFAULT)
}

pub fn exact_pmf_within(m: u64, l: u64, limits: &Limits) -> Result<ExactPmf> {
    require_positive_m(m)?;
    let row = triangle_row_within(m, l, limits)?;
    let exponent = u32::try_from(m).map_err(|_| Error::Domain("m too large for an exact denominator"))?;
    let denominator = BigUint::from(l + 1).pow(exponent);
    Ok(ExactPmf { row, denominator })
}

/// Parameters of a deterministic Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub m: u64,
    pub l: u64,
    pub sample_count: u64,
    pub seed: u64,
}

/// Samples per independent random stream.
///
/// Block `b` always draws its samples from ChaCha8 seeded with `seed` on
/// stream `b`, so any split of the blocks across workers reproduces the
/// sequential counts exactly.
pub const SAMPLES_PER_BLOCK: u64 = 1 << 16;

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive_m(self.m)?;
        if self.sample_count == 0 {
            return Err(Error::Domain("sample_count must be at least 1"));
        }
        if self.l == u64::MAX {
            return Err(Error::Domain("l + 1 must fit in 64 bits"));
        }
        Ok(())
    }

    /// Number of support points `m*l + 1`, checked against the row budget.
    pub fn outcomes(&self, limits: &Limits) -> Result<usize> {
        let width = self.m as u128 * self.l as u128 + 1;
        if width > limits.max_row_entries as u128 {
            return Err(Error::RowTooLarge { entries: width, budget: limits.max_row_entries });
        }
        Ok(width as usize)
    }

    pub fn block_count(&self) -> u64 {
        self.sample_count.div_ceil(SAMPLES_PER_BLOCK)
    }
}

/// Uniform draw from `{0, ..., bound - 1}` without modulo bias.
///
/// Multiply-shift with rejection of the short final interval.
fn uniform_below(rng: &mut impl RngCore, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let wide = rng.next_u64() as u128 * bound as u128;
        if (wide as u64) >= threshold {
            return (wide >> 64) as u64;
        }
    }
}

/// Adds the samples of block `block` into `counts`.
///
/// `counts` must have `m*l + 1` slots.
pub fn sample_block_into(cfg: &SamplerConfig, block: u64, counts: &mut [u64]) {
    let first = block * SAMPLES_PER_BLOCK;
    let samples = cfg.sample_count.saturating_sub(first).min(SAMPLES_PER_BLOCK);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(block);
    let faces = cfg.l + 1;
    for _ in 0..samples {
        let mut sum = 0u64;
        for _ in 0..cfg.m {
            sum += uniform_below(&mut rng, faces);
        }
        counts[sum as usize] += 1;
    }
}

/// Frequency table of `sample_count` simulated sums: `counts[n]` is how many
/// samples summed to `n`.
pub fn sample_sums(cfg: &SamplerConfig) -> Result<Vec<u64>> {
    sample_sums_within(cfg, &Limits::DEFAULT)
}

pub fn sample_sums_within(cfg: &SamplerConfig, limits: &Limits) -> Result<Vec<u64>> {
    cfg.validate()?;
    let mut counts = vec![0u64; cfg.outcomes(limits)?];
    for block in 0..cfg.block_count() {
        sample_block_into(cfg, block, &mut counts);
    }
    Ok(counts)
}
