//! Compositions of `n` into `k` ordered parts, each drawn from `{a, ..., b}`.
//!
//! Subtracting `a` from every part maps these one-to-one onto compositions of
//! `n - k*a` with parts in `{0, ..., b - a}`, which is what the polynomial
//! coefficient `C(k, n - ka)_{b-a+1}` counts.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::coeffs::{coefficient_within, CoeffQuery};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompositionQuery {
    pub n: u64,
    pub k: u64,
    pub a: u64,
    pub b: u64,
}

impl CompositionQuery {
    pub fn new(n: u64, k: u64, a: u64, b: u64) -> Self {
        CompositionQuery { n, k, a, b }
    }

    fn validate(&self) -> Result<()> {
        if self.a > self.b {
            return Err(Error::Domain("part bounds must satisfy a <= b"));
        }
        Ok(())
    }

    /// Target sum after shifting every part down by `a`, or `None` when `n`
    /// is outside `k*a ..= k*b`.
    fn shifted_target(&self) -> Option<u64> {
        let low = self.k as u128 * self.a as u128;
        let high = self.k as u128 * self.b as u128;
        let n = self.n as u128;
        (low..=high).contains(&n).then(|| (n - low) as u64)
    }
}

/// Number of `(p_1, ..., p_k)` with `a <= p_i <= b` and `p_1 + ... + p_k = n`.
pub fn count_compositions(q: CompositionQuery) -> Result<BigUint> {
    count_compositions_within(q, &Limits::DEFAULT)
}

pub fn count_compositions_within(q: CompositionQuery, limits: &Limits) -> Result<BigUint> {
    q.validate()?;
    let Some(target) = q.shifted_target() else {
        return Ok(BigUint::zero());
    };
    let n = i64::try_from(target).map_err(|_| Error::Domain("n - k*a must fit in 63 bits"))?;
    coefficient_within(CoeffQuery::new(q.k, n, q.b - q.a), limits)
}

/// Every composition in lexicographic order.
pub fn enumerate_compositions(q: CompositionQuery) -> Result<Vec<Vec<u64>>> {
    enumerate_compositions_within(q, &Limits::DEFAULT)
}

/// Every composition in lexicographic order, refusing to materialise more
/// than `limits.max_enumerated` of them.
///
/// The enumeration itself never consults the coefficient routines; it walks
/// the parts left to right and only descends where the remaining sum is
/// reachable by the remaining parts.
pub fn enumerate_compositions_within(q: CompositionQuery, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    q.validate()?;
    if q.shifted_target().is_none() {
        return Ok(Vec::new());
    }
    let bound = limits.max_enumerated;
    let exceeds = |count: &BigUint| count.to_u64().is_none_or(|c| c > bound);
    if exceeds(&count_compositions_within(q, limits)?) {
        return Err(Error::TooManyResults { bound });
    }

    let k = q.k as usize;
    let mut out = Vec::new();
    let mut parts: Vec<u64> = Vec::with_capacity(k);
    // The next value to try at each depth.
    let mut next: Vec<u64> = Vec::with_capacity(k + 1);
    next.push(q.a);
    let mut remaining = q.n;
    loop {
        let depth = parts.len();
        if depth == k {
            if remaining == 0 {
                out.push(parts.clone());
            }
            next.pop();
            let Some(last) = parts.pop() else { break };
            remaining += last;
            continue;
        }
        let slots_after = (k - depth - 1) as u128;
        let value = next[depth];
        // Remaining parts must absorb remaining - value within [a, b] each.
        let lowest = (remaining as u128).saturating_sub(slots_after * q.b as u128) as u64;
        let value = value.max(lowest);
        let fits = value <= q.b
            && value as u128 <= remaining as u128
            && (remaining - value) as u128 >= slots_after * q.a as u128;
        if !fits {
            next.pop();
            let Some(last) = parts.pop() else { break };
            remaining += last;
            continue;
        }
        next[depth] = value + 1;
        parts.push(value);
        remaining -= value;
        next.push(q.a);
    }
    Ok(out)
}
