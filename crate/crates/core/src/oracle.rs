//! Reference coefficients by direct quadrature of `c_n = (n+½) ∫ f P_n dx`,
//! and entrywise comparison of coefficient vectors.

use crate::quadrature::Graded;
use crate::spectral::Method;
use crate::{Error, Integrand, LegendreCoefficients, QuadratureRule, Result};

/// `c_n = (n+½) Σ_j w_j f(x_j) P_n(x_j)` with a `q`-point Gauss–Legendre rule
/// on every smooth piece of `[-1, 1]` (split at the integrand's breakpoints).
///
/// O(N·Q): one forward recurrence per node, accumulated into all `N` sums.
pub fn oracle_coefficients<F: Integrand + ?Sized>(
    f: &F,
    n: usize,
    q: usize,
) -> Result<LegendreCoefficients> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "need at least one coefficient".into(),
        ));
    }
    if q < n {
        return Err(Error::InvalidParameter(format!(
            "oracle rule of order {q} cannot resolve P_{}; need q >= n",
            n - 1
        )));
    }
    let rule = QuadratureRule::gauss_legendre(q)?;

    let mut cuts = vec![-1.0];
    cuts.extend(f.breakpoints().into_iter().filter(|b| b.abs() < 1.0));
    cuts.push(1.0);

    // Pieces are graded toward interior breakpoints, x = b ± (piece length) s².
    let last = cuts.len() - 2;
    let mut nodes = Vec::with_capacity(2 * rule.order() * (cuts.len() - 1));
    for (i, piece) in cuts.windows(2).enumerate() {
        collect_nodes(
            &rule,
            piece[0],
            piece[1],
            Graded::from_ends(i > 0, i < last),
            &mut nodes,
        );
    }
    for node in &mut nodes {
        node.1 *= f.value(node.0);
    }

    // P_{k+1} = ratio_a[k] x P_k - ratio_b[k] P_{k-1}
    let ratio_a: Vec<f64> = (0..n)
        .map(|k| (2 * k + 1) as f64 / (k + 1) as f64)
        .collect();
    let ratio_b: Vec<f64> = (0..n).map(|k| k as f64 / (k + 1) as f64).collect();

    let mut sums = vec![0.0; n];
    for &(x, wf) in &nodes {
        let mut prev = 0.0;
        let mut curr = 1.0;
        for k in 0..n {
            sums[k] += wf * curr;
            let next = ratio_a[k] * x * curr - ratio_b[k] * prev;
            prev = curr;
            curr = next;
        }
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| (k as f64 + 0.5) * s)
        .collect();
    LegendreCoefficients::new(values, 0.0, Method::Oracle { quad_order: q }, f.label())
}

// (x, w) pairs realizing `QuadratureRule::integrate_graded` on [a, b].
fn collect_nodes(rule: &QuadratureRule, a: f64, b: f64, graded: Graded, out: &mut Vec<(f64, f64)>) {
    let h = b - a;
    match graded {
        Graded::Neither => out.extend(rule.iter().map(|(t, w)| (a + h * t, h * w))),
        Graded::Lower => out.extend(rule.iter().map(|(s, w)| (a + h * s * s, 2.0 * h * s * w))),
        Graded::Upper => out.extend(rule.iter().map(|(s, w)| (b - h * s * s, 2.0 * h * s * w))),
        Graded::Both => {
            let mid = a + 0.5 * h;
            collect_nodes(rule, a, mid, Graded::Lower, out);
            collect_nodes(rule, mid, b, Graded::Upper, out);
        }
    }
}

/// Wall-clock seconds spent on each side of a comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timings {
    pub fast_seconds: f64,
    pub oracle_seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub per_index_abs_error: Vec<f64>,
    pub max_abs_error: f64,
    pub n_at_max: usize,
    pub timings: Option<Timings>,
}

impl ComparisonReport {
    pub fn with_timings(mut self, timings: Timings) -> Self {
        self.timings = Some(timings);
        self
    }
}

/// Entrywise `|a_n - b_n|` and its maximum (first index on ties).
pub fn compare(a: impl AsRef<[f64]>, b: impl AsRef<[f64]>) -> Result<ComparisonReport> {
    let (a, b) = (a.as_ref(), b.as_ref());
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let per_index_abs_error: Vec<f64> = a.iter().zip(b).map(|(x, y)| (x - y).abs()).collect();
    if let Some(index) = per_index_abs_error.iter().position(|e| !e.is_finite()) {
        return Err(Error::NonFinite { index });
    }
    let (n_at_max, max_abs_error) =
        per_index_abs_error
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, 0.0),
                |best, (i, e)| if e > best.1 { (i, e) } else { best },
            );
    Ok(ComparisonReport {
        per_index_abs_error,
        max_abs_error,
        n_at_max,
        timings: None,
    })
}
