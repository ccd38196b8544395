//! The Abel-type transform `φ(y) = ∫_{cos y}^1 f(x) / [2(x - cos y)]^{½} dx`
//! and its phased, 2π-periodic variant `ĥf(y) = ε(y) e^{iy/2} φ(|y|) / (2πi)`.
//!
//! The kernel singularity at `x = cos y` is removed by `x = cos y + (1 - cos y) t²`,
//! which turns `φ` into `2 sin(y/2) ∫_0^1 f(cos y + (1 - cos y) t²) dt`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::quadrature::Graded;
use crate::{Error, Integrand, QuadratureRule, Result};

/// Quadrature order used for `φ` when none is given.
pub const DEFAULT_QUAD_ORDER: usize = 64;

/// `φ(y)` for `0 <= y <= π`.
pub fn phi<F: Integrand + ?Sized>(f: &F, y: f64, rule: &QuadratureRule) -> Result<f64> {
    if !(0.0..=PI).contains(&y) {
        return Err(Error::Domain {
            what: "y",
            value: y,
            domain: "[0, π]",
        });
    }
    Ok(phi_unchecked(f, &f.breakpoints(), y, rule))
}

fn phi_unchecked<F: Integrand + ?Sized>(
    f: &F,
    breakpoints: &[f64],
    y: f64,
    rule: &QuadratureRule,
) -> f64 {
    if y == 0.0 {
        return 0.0;
    }
    let half_sin = (0.5 * y).sin();
    let c = y.cos();
    // 1 - cos y, without cancellation near y = 0
    let span = 2.0 * half_sin * half_sin;
    let integrand = |t: f64| f.value((c + span * t * t).clamp(-1.0, 1.0));

    // Breakpoints of f in (cos y, 1) map to t = sqrt((b - cos y) / (1 - cos y));
    // the pieces are graded toward them.
    let mut cuts = Vec::with_capacity(breakpoints.len() + 2);
    cuts.push(0.0);
    cuts.extend(
        breakpoints
            .iter()
            .filter(|&&b| b > c && b < 1.0)
            .map(|&b| ((b - c) / span).sqrt())
            .filter(|&t| t > 0.0 && t < 1.0),
    );
    cuts.push(1.0);

    let last = cuts.len() - 2;
    let integral: f64 = cuts
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            rule.integrate_graded(w[0], w[1], Graded::from_ends(i > 0, i < last), integrand)
        })
        .sum();
    2.0 * half_sin * integral
}

// ε(y) e^{iy/2} φ / (2πi) for y <= 0, where ε(y) = -1 (or 0 at y = 0).
fn hfhat_nonpositive(y: f64, phi_abs: f64) -> Complex64 {
    if y == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let scale = Complex64::new(0.0, -1.0 / (2.0 * PI));
    scale * Complex64::from_polar(1.0, 0.5 * y) * (-phi_abs)
}

/// `-e^{iy} v`: maps `ĥf(-y)` to `ĥf(y)`.
fn reflect(y: f64, v: Complex64) -> Complex64 {
    -(Complex64::from_polar(1.0, y) * v)
}

/// `ĥf(y)` for `|y| <= π`.
///
/// Negative arguments are evaluated from the definition; positive ones as
/// `-e^{iy} ĥf(-y)`, so that symmetry holds bit for bit in that direction.
pub fn hfhat<F: Integrand + ?Sized>(f: &F, y: f64, rule: &QuadratureRule) -> Result<Complex64> {
    if y.is_nan() || y.abs() > PI {
        return Err(Error::Domain {
            what: "y",
            value: y,
            domain: "[-π, π]",
        });
    }
    let phi_abs = phi(f, y.abs(), rule)?;
    let negative = hfhat_nonpositive(-y.abs(), phi_abs);
    Ok(if y > 0.0 {
        reflect(y, negative)
    } else {
        negative
    })
}

/// Uniform samples of `ĥf` at `y_k = -π + 2πk/M`, `k = 0..M`.
#[derive(Debug, Clone, PartialEq)]
pub struct AbelGrid {
    samples: Vec<Complex64>,
    quad_order: usize,
    spec_label: String,
}

impl AbelGrid {
    /// Grid size `M`.
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn quad_order(&self) -> usize {
        self.quad_order
    }

    pub fn spec_label(&self) -> &str {
        &self.spec_label
    }

    /// Abscissa `y_k` of sample `k`.
    pub fn abscissa(&self, k: usize) -> f64 {
        -PI + 2.0 * PI * k as f64 / self.samples.len() as f64
    }
}

/// Samples `ĥf` on `M` points of `[-π, π)`.
///
/// `φ` is computed once per `|y|`; the sample at `+y` is the reflection
/// `-e^{iy}` times the sample at `-y`, with `y = 2πk/M`.
pub fn sample_grid<F: Integrand + ?Sized>(
    f: &F,
    m: usize,
    rule: &QuadratureRule,
) -> Result<AbelGrid> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "grid size must be even and >= 4, got {m}"
        )));
    }
    let half = m / 2;
    let breakpoints = f.breakpoints();
    let mut samples = vec![Complex64::new(0.0, 0.0); m];
    samples[0] = hfhat_nonpositive(-PI, phi_unchecked(f, &breakpoints, PI, rule));
    for k in 1..half {
        let y = 2.0 * PI * k as f64 / m as f64;
        let negative = hfhat_nonpositive(-y, phi_unchecked(f, &breakpoints, y, rule));
        samples[half - k] = negative;
        samples[half + k] = reflect(y, negative);
    }
    Ok(AbelGrid {
        samples,
        quad_order: rule.order(),
        spec_label: f.label(),
    })
}
