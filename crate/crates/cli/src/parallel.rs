//! Thread-parallel versions of the longer-running drivers.
//!
//! Results are assembled in index order, so they match the sequential
//! routines in `polycoef` exactly whatever the thread count.

use rayon::prelude::*;

use polycoef::analysis::central_error_record;
use polycoef::dist::sample_block_into;
use polycoef::{ErrorRecord, Limits, Result, SamplerConfig};

/// Same counts as [`polycoef::sample_sums`], with blocks spread over threads.
pub fn sample_sums(cfg: &SamplerConfig) -> Result<Vec<u64>> {
    cfg.validate()?;
    let width = cfg.outcomes(&Limits::DEFAULT)?;
    let counts = (0..cfg.block_count())
        .into_par_iter()
        .fold(
            || vec![0u64; width],
            |mut acc, block| {
                sample_block_into(cfg, block, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![0u64; width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(counts)
}

/// Same records as [`polycoef::central_error_curve`], one task per `m`.
pub fn central_error_curve(l: u64, m_values: &[u64]) -> Result<Vec<ErrorRecord>> {
    m_values.par_iter().map(|&m| central_error_record(m, l, &Limits::DEFAULT)).collect()
}
