//! Polynomial coefficients `C(k, n)_{l+1}`, the coefficient of `x^n` in
//! `(1 + x + ... + x^l)^k`.
//!
//! Row `k` of the `(l+1)`-nomial triangle is built from row `k - 1` by adding
//! the `l + 1` entries sitting above each position, with missing entries read
//! as zero. [`triangle_row`] runs that recurrence with a sliding window so one
//! row costs `O(kl)` big-integer additions regardless of `l`.
//!
//! Two independent routes exist for cross-checking: [`poly_power_oracle`]
//! multiplies out the polynomial by schoolbook convolution, and
//! [`coefficient_multinomial_oracle`] sums multinomial coefficients over all
//! part-count vectors with the right total weight.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Limits, Result};

/// Address of a single coefficient: row `k`, position `n`, alphabet `{0, ..., l}`.
///
/// `n` may lie outside `0..=k*l`; such coefficients are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoeffQuery {
    pub k: u64,
    pub n: i64,
    pub l: u64,
}

impl CoeffQuery {
    pub fn new(k: u64, n: i64, l: u64) -> Self {
        CoeffQuery { k, n, l }
    }

    /// `k * l`, the largest index with a nonzero coefficient.
    pub fn degree(&self) -> u128 {
        self.k as u128 * self.l as u128
    }

    /// `n` as an in-range index, or `None` when the coefficient is zero.
    fn index(&self) -> Option<u128> {
        u128::try_from(self.n).ok().filter(|&n| n <= self.degree())
    }
}

/// Exact row `k` of the `(l+1)`-nomial triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRow {
    k: u64,
    l: u64,
    values: Vec<BigUint>,
}

impl TriangleRow {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// The `k*l + 1` coefficients in order of increasing power of `x`.
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entry `n`, or `None` outside `0..=k*l`.
    pub fn get(&self, n: i64) -> Option<&BigUint> {
        usize::try_from(n).ok().and_then(|i| self.values.get(i))
    }

    /// The entry at `floor(k*l / 2)`.
    pub fn central(&self) -> &BigUint {
        &self.values[(self.values.len() - 1) / 2]
    }
}

fn check_width(width: u128, limits: &Limits) -> Result<usize> {
    if width > limits.max_row_entries as u128 {
        return Err(Error::RowTooLarge { entries: width, budget: limits.max_row_entries });
    }
    usize::try_from(width).map_err(|_| Error::RowTooLarge { entries: width, budget: limits.max_row_entries })
}

/// Builds the next row from `prev`, keeping only the first `len` entries.
///
/// Entry `n` is `prev[n - l] + ... + prev[n]`. The window sum is updated by
/// one addition and one subtraction per entry. A truncated `prev` is fine as
/// long as it holds every index below `len`.
fn next_row(prev: &[BigUint], l: usize, len: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(len);
    let mut window = BigUint::zero();
    for n in 0..len {
        if let Some(v) = prev.get(n) {
            window += v;
        }
        if n > l {
            if let Some(v) = prev.get(n - l - 1) {
                window -= v;
            }
        }
        out.push(window.clone());
    }
    out
}

/// First `len` entries of row `k`, where `len` has already been checked
/// against the budget and `l < len` whenever `k > 0`.
fn row_prefix(k: u64, l: usize, len: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for step in 1..=k {
        let full = (step as u128 * l as u128 + 1).min(len as u128) as usize;
        row = next_row(&row, l, full);
    }
    row
}

/// Row `k` of the `(l+1)`-nomial triangle under the default [`Limits`].
pub fn triangle_row(k: u64, l: u64) -> Result<TriangleRow> {
    triangle_row_within(k, l, &Limits::DEFAULT)
}

/// Row `k` of the `(l+1)`-nomial triangle.
///
/// Only the left half is run through the recurrence; the right half is its
/// mirror image.
pub fn triangle_row_within(k: u64, l: u64, limits: &Limits) -> Result<TriangleRow> {
    let degree = k as u128 * l as u128;
    let width = check_width(degree + 1, limits)?;
    if k == 0 {
        return Ok(TriangleRow { k, l, values: vec![BigUint::one()] });
    }
    // width >= l + 1 here, so l fits in usize.
    let half = width / 2 + 1;
    let mut values = row_prefix(k, l as usize, half.min(width));
    values.reserve_exact(width - values.len());
    for n in values.len()..width {
        let mirrored = values[width - 1 - n].clone();
        values.push(mirrored);
    }
    Ok(TriangleRow { k, l, values })
}

/// `C(k, n)_{l+1}` under the default [`Limits`]; zero when `n` is out of range.
pub fn coefficient(q: CoeffQuery) -> Result<BigUint> {
    coefficient_within(q, &Limits::DEFAULT)
}

/// `C(k, n)_{l+1}`; zero when `n < 0` or `n > k*l`.
///
/// Only the entries up to `min(n, kl - n)` are kept in each row, so the
/// budget applies to that prefix rather than the full row.
pub fn coefficient_within(q: CoeffQuery, limits: &Limits) -> Result<BigUint> {
    let Some(n) = q.index() else {
        return Ok(BigUint::zero());
    };
    if q.k == 0 {
        return Ok(BigUint::one());
    }
    let target = n.min(q.degree() - n);
    let len = check_width(target + 1, limits)?;
    // Indices beyond the prefix never feed it, so a huge l acts like l = len.
    let l = usize::try_from(q.l).unwrap_or(usize::MAX).min(len);
    let mut prefix = row_prefix(q.k, l, len);
    Ok(prefix.swap_remove(len - 1))
}

/// The central coefficient `C(m, floor(ml/2))_{l+1}`.
pub fn central_coefficient(m: u64, l: u64) -> Result<BigUint> {
    central_coefficient_within(m, l, &Limits::DEFAULT)
}

pub fn central_coefficient_within(m: u64, l: u64, limits: &Limits) -> Result<BigUint> {
    let centre = (m as u128 * l as u128) / 2;
    let n = i64::try_from(centre)
        .map_err(|_| Error::RowTooLarge { entries: centre + 1, budget: limits.max_row_entries })?;
    coefficient_within(CoeffQuery::new(m, n, l), limits)
}

/// Naive product `a * b` of two coefficient vectors.
fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `(1 + x + ... + x^l)^k` by repeated schoolbook convolution.
pub fn poly_power_oracle(k: u64, l: u64) -> Result<TriangleRow> {
    poly_power_oracle_within(k, l, &Limits::DEFAULT)
}

pub fn poly_power_oracle_within(k: u64, l: u64, limits: &Limits) -> Result<TriangleRow> {
    check_width(k as u128 * l as u128 + 1, limits)?;
    if k == 0 {
        return Ok(TriangleRow { k, l, values: vec![BigUint::one()] });
    }
    let base = vec![BigUint::one(); l as usize + 1];
    let mut values = base.clone();
    for _ in 1..k {
        values = convolve(&values, &base);
    }
    Ok(TriangleRow { k, l, values })
}

/// `C(k, n)_{l+1}` as the sum of `k! / (k_0! ... k_l!)` over all
/// `k_0 + ... + k_l = k` with `0*k_0 + 1*k_1 + ... + l*k_l = n`, under the
/// default [`Limits`].
pub fn coefficient_multinomial_oracle(q: CoeffQuery) -> Result<BigUint> {
    coefficient_multinomial_oracle_within(q, &Limits::DEFAULT)
}

/// Multinomial-sum evaluation of `C(k, n)_{l+1}`.
///
/// Counts `k_l, k_{l-1}, ..., k_1` are chosen depth first and `k_0` takes the
/// remainder. At index `j` with `r` parts and weight `w` left, the remaining
/// indices `1..j` can absorb at most `(j-1) * r'` weight, so `k_j` starts at
/// `w - (j-1) r` and every leaf reached is a valid term.
pub fn coefficient_multinomial_oracle_within(q: CoeffQuery, limits: &Limits) -> Result<BigUint> {
    let Some(n) = q.index() else {
        return Ok(BigUint::zero());
    };
    let bound = limits.max_oracle_work;
    if q.k as u128 + 1 > bound as u128 {
        return Err(Error::WorkBoundExceeded { bound });
    }
    // n <= i64::MAX here, and k_j = 0 for every j > n.
    let n = n as u64;
    let k = q.k;
    let top = q.l.min(n);

    let mut factorials = Vec::with_capacity(k as usize + 1);
    factorials.push(BigUint::one());
    for i in 1..=k {
        let next = &factorials[i as usize - 1] * i;
        factorials.push(next);
    }

    struct Frame {
        j: u64,
        parts: u64,
        weight: u64,
        next: u64,
    }
    let start = |j: u64, parts: u64, weight: u64| -> Frame {
        let floor = weight as u128 - ((j.saturating_sub(1)) as u128 * parts as u128).min(weight as u128);
        Frame { j, parts, weight, next: floor as u64 }
    };

    let mut total = BigUint::zero();
    let mut chosen: Vec<u64> = Vec::new();
    let mut stack = vec![start(top, k, n)];
    let mut work = 0u64;
    while let Some(frame) = stack.last_mut() {
        work += 1;
        if work > bound {
            return Err(Error::WorkBoundExceeded { bound });
        }
        if frame.j == 0 {
            if frame.weight == 0 {
                let mut denom = factorials[frame.parts as usize].clone();
                for &c in &chosen {
                    denom *= &factorials[c as usize];
                }
                total += &factorials[k as usize] / denom;
            }
            stack.pop();
            chosen.pop();
            continue;
        }
        let c = frame.next;
        if c > frame.parts.min(frame.weight / frame.j) {
            stack.pop();
            chosen.pop();
            continue;
        }
        frame.next += 1;
        let child = start(frame.j - 1, frame.parts - c, frame.weight - frame.j * c);
        chosen.push(c);
        stack.push(child);
    }
    Ok(total)
}
