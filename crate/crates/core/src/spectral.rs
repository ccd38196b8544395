//! Legendre coefficients from the Fourier coefficients of `ĥf`, and the
//! slow real sine-form route used to cross-check them.

use std::f64::consts::PI;

use crate::abel::{phi, sample_grid, AbelGrid};
use crate::fft::dft_forward;
use crate::{Error, Integrand, QuadratureRule, Result, SeriesCoefficients};

/// How a coefficient vector was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Abel transform sampled on `grid_size` points, one FFT.
    Fft { grid_size: usize, quad_order: usize },
    /// Sine transform of `φ` over `panels` composite Gauss–Legendre panels.
    SineForm { panels: usize, quad_order: usize },
    /// Direct Gauss–Legendre quadrature of the projection integral.
    Oracle { quad_order: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TransformParams {
    pub n: usize,
    pub method: Method,
    pub spec_label: String,
}

/// Real coefficients `c_0 .. c_{N-1}` together with the parameters that
/// produced them and the largest imaginary part that was discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreCoefficients {
    values: SeriesCoefficients,
    imag_residual: f64,
    params: TransformParams,
}

impl LegendreCoefficients {
    pub(crate) fn new(
        values: Vec<f64>,
        imag_residual: f64,
        method: Method,
        spec_label: String,
    ) -> Result<Self> {
        let n = values.len();
        Ok(Self {
            values: SeriesCoefficients::new(values)?,
            imag_residual,
            params: TransformParams {
                n,
                method,
                spec_label,
            },
        })
    }

    pub fn values(&self) -> &[f64] {
        self.values.as_slice()
    }

    pub fn series(&self) -> &SeriesCoefficients {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `max_n (2n+1) |Im a_n|`; zero for the real-arithmetic routes.
    pub fn imag_residual(&self) -> f64 {
        self.imag_residual
    }

    pub fn params(&self) -> &TransformParams {
        &self.params
    }

    /// Rejects results whose discarded imaginary part exceeds `tol`.
    pub fn ensure_real(self, tol: f64) -> Result<Self> {
        if self.imag_residual <= tol {
            Ok(self)
        } else {
            Err(Error::InvalidParameter(format!(
                "imaginary residual {:e} exceeds tolerance {:e}; increase the grid size",
                self.imag_residual, tol
            )))
        }
    }
}

impl AsRef<[f64]> for LegendreCoefficients {
    fn as_ref(&self) -> &[f64] {
        self.values()
    }
}

/// Default grid size for `n` coefficients: `max(4n, 1024)` rounded up to a power of two.
pub fn default_grid_size(n: usize) -> usize {
    n.saturating_mul(4).max(1024).next_power_of_two()
}

fn check_aliasing(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "need at least one coefficient".into(),
        ));
    }
    if n > m / 2 {
        return Err(Error::Aliasing { n, m });
    }
    Ok(())
}

/// `c_n = (2n+1) Re a_n` with `a_n ≈ (2π/M) (-1)^n Â_n`, the rectangle rule for
/// `∫_{-π}^{π} ĥf(y) e^{iny} dy` on the grid.
pub fn coefficients_from_grid(grid: &AbelGrid, n: usize) -> Result<LegendreCoefficients> {
    let m = grid.len();
    check_aliasing(n, m)?;
    let spectrum = dft_forward(grid.samples());
    let scale = 2.0 * PI / m as f64;
    let mut values = Vec::with_capacity(n);
    let mut imag_residual = 0.0f64;
    for (i, bin) in spectrum.iter().take(n).enumerate() {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        let a = bin * (sign * scale);
        let weight = 2.0 * i as f64 + 1.0;
        values.push(weight * a.re);
        imag_residual = imag_residual.max(weight * a.im.abs());
    }
    let method = Method::Fft {
        grid_size: m,
        quad_order: grid.quad_order(),
    };
    LegendreCoefficients::new(values, imag_residual, method, grid.spec_label().to_owned())
}

/// The fast path: [`sample_grid`] followed by [`coefficients_from_grid`].
///
/// `m` must be a power of two and at least `2n`.
pub fn legendre_transform<F: Integrand + ?Sized>(
    f: &F,
    n: usize,
    m: usize,
    rule: &QuadratureRule,
) -> Result<LegendreCoefficients> {
    if !m.is_power_of_two() || m < 4 {
        return Err(Error::InvalidParameter(format!(
            "grid size must be a power of two >= 4, got {m}"
        )));
    }
    check_aliasing(n, m)?;
    let grid = sample_grid(f, m, rule)?;
    coefficients_from_grid(&grid, n)
}

/// `c_n = (2/π)(n+½) ∫_0^π φ(y) sin((n+½)y) dy` by composite Gauss–Legendre
/// over `panels` equal panels of `[0, π]`, reusing `rule` both across `y`
/// and inside `φ`. Costs O(N·J·K); the half-integer frequencies rule out an FFT.
pub fn sine_form_transform<F: Integrand + ?Sized>(
    f: &F,
    n: usize,
    panels: usize,
    rule: &QuadratureRule,
) -> Result<LegendreCoefficients> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "need at least one coefficient".into(),
        ));
    }
    if panels < 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least two panels, got {panels}"
        )));
    }
    let width = PI / panels as f64;
    let mut nodes = Vec::with_capacity(panels * rule.order());
    for p in 0..panels {
        let start = p as f64 * width;
        for (t, w) in rule.iter() {
            let y = start + width * t;
            nodes.push((y, width * w * phi(f, y, rule)?));
        }
    }
    let values = (0..n)
        .map(|i| {
            let freq = i as f64 + 0.5;
            let integral: f64 = nodes.iter().map(|&(y, wphi)| wphi * (freq * y).sin()).sum();
            2.0 / PI * freq * integral
        })
        .collect();
    let method = Method::SineForm {
        panels,
        quad_order: rule.order(),
    };
    LegendreCoefficients::new(values, 0.0, method, f.label())
}
