//! Not-a-knot cubic spline slopes for tabulated data.

/// Slopes `s_i` of the C² not-a-knot cubic spline through `(x_i, y_i)`.
///
/// Needs at least four points; callers fall back to linear interpolation below that.
pub(crate) fn not_a_knot_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    debug_assert!(n >= 4 && y.len() == n);
    let dx: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let secant: Vec<f64> = dx
        .iter()
        .zip(y.windows(2))
        .map(|(h, w)| (w[1] - w[0]) / h)
        .collect();

    let mut lower = vec![0.0; n];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n];
    let mut rhs = vec![0.0; n];

    let d0 = x[2] - x[0];
    diag[0] = dx[1];
    upper[0] = d0;
    rhs[0] = ((dx[0] + 2.0 * d0) * dx[1] * secant[0] + dx[0] * dx[0] * secant[1]) / d0;

    for i in 1..n - 1 {
        lower[i] = dx[i];
        diag[i] = 2.0 * (dx[i - 1] + dx[i]);
        upper[i] = dx[i - 1];
        rhs[i] = 3.0 * (dx[i] * secant[i - 1] + dx[i - 1] * secant[i]);
    }

    let dn = x[n - 1] - x[n - 3];
    lower[n - 1] = dn;
    diag[n - 1] = dx[n - 3];
    rhs[n - 1] = (dx[n - 2] * dx[n - 2] * secant[n - 3]
        + (2.0 * dn + dx[n - 2]) * dx[n - 3] * secant[n - 2])
        / dn;

    solve_tridiagonal(&lower, &mut diag, &upper, &mut rhs);
    rhs
}

// Thomas algorithm; the solution overwrites `rhs`.
fn solve_tridiagonal(lower: &[f64], diag: &mut [f64], upper: &[f64], rhs: &mut [f64]) {
    let n = diag.len();
    for i in 1..n {
        let m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for i in (0..n - 1).rev() {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

/// Cubic Hermite interpolant on `[x0, x1]`.
pub(crate) fn hermite(x0: f64, x1: f64, y0: f64, y1: f64, s0: f64, s1: f64, x: f64) -> f64 {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * y0 + h10 * h * s0 + h01 * y1 + h11 * h * s1
}
