//! Legendre polynomials, series synthesis and reference coefficients.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, QuadratureRule, Result};

/// Truncated Legendre series coefficients `c_0 .. c_{N-1}`.
///
/// Always nonempty with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients(Vec<f64>);

impl SeriesCoefficients {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "series needs at least one coefficient".into(),
            ));
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self(values))
    }

    /// The unit vector `e_k` of length `len`.
    pub fn one_hot(len: usize, k: usize) -> Result<Self> {
        if k >= len {
            return Err(Error::InvalidParameter(format!(
                "index {k} out of range for length {len}"
            )));
        }
        let mut v = vec![0.0; len];
        v[k] = 1.0;
        Self::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl AsRef<[f64]> for SeriesCoefficients {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

fn check_unit_interval(x: f64) -> Result<()> {
    if x.abs() <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[-1, 1]",
        })
    }
}

/// `P_n(x)` by the forward recurrence `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
pub fn legendre_p(n: usize, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    Ok(legendre_p_unchecked(n, x))
}

pub(crate) fn legendre_p_unchecked(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * curr - kf * prev) / (kf + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// `Σ_{n<N} c_n P_n(x)` by Clenshaw's backward recurrence.
pub fn clenshaw_eval(coeffs: &SeriesCoefficients, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    Ok(clenshaw_unchecked(coeffs.as_slice(), x))
}

// b_k = c_k + α_k b_{k+1} + β_{k+1} b_{k+2}, with P_{k+1} = α_k P_k + β_k P_{k-1},
// α_k = (2k+1) x / (k+1), β_k = -k / (k+1). The sum is b_0.
pub(crate) fn clenshaw_unchecked(c: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for (k, &ck) in c.iter().enumerate().rev() {
        let kf = k as f64;
        let alpha = (2.0 * kf + 1.0) * x / (kf + 1.0);
        let beta_next = -(kf + 1.0) / (kf + 2.0);
        let b0 = ck + alpha * b1 + beta_next * b2;
        b2 = b1;
        b1 = b0;
    }
    b1
}

const ABS32_EXPONENT: f64 = 1.5;

/// Closed-form Legendre coefficient `c_n` of `f(x) = |x|^{3/2}`.
///
/// Zero for odd `n`, `1/(α+1)` for `n = 0`, and for even `n ≥ 2`
/// `(2n+1) α(α-2)…(α-n+2) / [(α+1)(α+3)…(α+n+1)]` with `α = 3/2`, accumulated
/// as a running product of ratios so that large `n` does not overflow.
pub fn abs32_reference_coeff(n: usize) -> f64 {
    let alpha = ABS32_EXPONENT;
    if n % 2 == 1 {
        return 0.0;
    }
    let mut ratio = 1.0 / (alpha + 1.0);
    if n == 0 {
        return ratio;
    }
    for j in 1..=n / 2 {
        let jf = j as f64;
        ratio *= (alpha - 2.0 * jf + 2.0) / (alpha + 2.0 * jf + 1.0);
    }
    (2.0 * n as f64 + 1.0) * ratio
}

/// `[abs32_reference_coeff(0), …, abs32_reference_coeff(len - 1)]`.
pub fn abs32_reference(len: usize) -> Result<SeriesCoefficients> {
    SeriesCoefficients::new((0..len).map(abs32_reference_coeff).collect())
}

/// `P_n(cos θ)` from its Dirichlet–Murphy integral
/// `(-i/π) ∫_θ^{2π-θ} e^{i(n+½)y} / [2(cos θ - cos y)]^{½} dy`.
///
/// The path is split at `y = π`; the halves are mapped to `t ∈ [0, 1]` by
/// `y = θ + (π-θ)t²` and `y = 2π - θ - (π-θ)t²`, which cancels both
/// inverse-square-root endpoint singularities. The real part approximates
/// `P_n(cos θ)`; the imaginary part is pure quadrature residue.
pub fn dirichlet_murphy_p(n: usize, theta: f64, rule: &QuadratureRule) -> Result<Complex64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Domain {
            what: "theta",
            value: theta,
            domain: "(0, π)",
        });
    }
    let span = PI - theta;
    let freq = n as f64 + 0.5;
    let mut sum = Complex64::new(0.0, 0.0);
    for (t, w) in rule.iter() {
        let half_gap = 0.5 * span * t * t;
        // cos θ - cos y = 2 sin((θ+y)/2) sin((y-θ)/2), identical on both halves.
        let diff = 2.0 * (theta + half_gap).sin() * half_gap.sin();
        let jacobian = 2.0 * span * t / (2.0 * diff).sqrt();
        let y_lower = theta + span * t * t;
        let y_upper = 2.0 * PI - y_lower;
        let phase =
            Complex64::from_polar(1.0, freq * y_lower) + Complex64::from_polar(1.0, freq * y_upper);
        sum += phase * (w * jacobian);
    }
    Ok(Complex64::new(0.0, -1.0 / PI) * sum)
}
