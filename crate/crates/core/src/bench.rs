//! Wall-clock comparison of the fast transform against the direct-quadrature oracle.

use std::time::Instant;

use crate::oracle::{compare, oracle_coefficients};
use crate::spectral::{default_grid_size, legendre_transform};
use crate::{Integrand, QuadratureRule, Result};

pub const WARMUP_RUNS: usize = 1;
pub const TIMED_RUNS: usize = 5;

/// Median wall time in seconds of `runs` calls after `warmup` untimed ones,
/// and the output of the last call.
pub fn median_time<T>(
    warmup: usize,
    runs: usize,
    mut job: impl FnMut() -> Result<T>,
) -> Result<(f64, T)> {
    assert!(runs >= 1);
    for _ in 0..warmup {
        job()?;
    }
    let mut times = Vec::with_capacity(runs);
    let mut last = None;
    for _ in 0..runs {
        let start = Instant::now();
        let out = job()?;
        times.push(start.elapsed().as_secs_f64());
        last = Some(out);
    }
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    let median = if times.len() % 2 == 1 {
        times[mid]
    } else {
        0.5 * (times[mid - 1] + times[mid])
    };
    Ok((median, last.expect("runs >= 1")))
}

/// Oracle rule order used for `n` coefficients: `max(2n, 256)`.
pub fn default_oracle_order(n: usize) -> usize {
    (2 * n).max(256)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub grid_size: usize,
    pub oracle_order: usize,
    pub fast_seconds: f64,
    pub oracle_seconds: f64,
    pub speedup: f64,
    pub max_abs_error_vs_oracle: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

/// Times both paths for every `n` in `sizes` at default grid and oracle sizes.
pub fn run_bench<F: Integrand + ?Sized>(
    f: &F,
    sizes: &[usize],
    rule: &QuadratureRule,
) -> Result<BenchReport> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let m = default_grid_size(n);
        let q = default_oracle_order(n);
        let (fast_seconds, fast) = median_time(WARMUP_RUNS, TIMED_RUNS, || {
            legendre_transform(f, n, m, rule)
        })?;
        let (oracle_seconds, slow) =
            median_time(WARMUP_RUNS, TIMED_RUNS, || oracle_coefficients(f, n, q))?;
        let report = compare(&fast, &slow)?;
        rows.push(BenchRow {
            n,
            grid_size: m,
            oracle_order: q,
            fast_seconds,
            oracle_seconds,
            speedup: oracle_seconds / fast_seconds.max(f64::MIN_POSITIVE),
            max_abs_error_vs_oracle: report.max_abs_error,
        });
    }
    Ok(BenchReport { rows })
}
