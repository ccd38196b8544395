//! Unnormalized discrete Fourier transform with positive exponent,
//! `Â_n = Σ_k s_k e^{+2πi nk/M}`.
//!
//! Power-of-two lengths go through an iterative radix-2 transform; other
//! lengths fall back to direct O(M²) summation.

use std::f64::consts::PI;

use num_complex::Complex64;

pub fn dft_forward(samples: &[Complex64]) -> Vec<Complex64> {
    let mut out = samples.to_vec();
    if out.len() <= 1 {
        return out;
    }
    if out.len().is_power_of_two() {
        fft_in_place(&mut out);
        out
    } else {
        dft_direct(samples)
    }
}

fn dft_direct(samples: &[Complex64]) -> Vec<Complex64> {
    let m = samples.len();
    (0..m)
        .map(|n| {
            samples
                .iter()
                .enumerate()
                .map(|(k, &s)| {
                    s * Complex64::from_polar(1.0, 2.0 * PI * ((n * k) % m) as f64 / m as f64)
                })
                .sum()
        })
        .collect()
}

/// In-place radix-2 decimation-in-time transform; `data.len()` must be a power of two.
pub fn fft_in_place(data: &mut [Complex64]) {
    let m = data.len();
    assert!(
        m.is_power_of_two(),
        "radix-2 FFT needs a power-of-two length, got {m}"
    );
    if m == 1 {
        return;
    }

    let bits = m.trailing_zeros();
    for i in 0..m {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            data.swap(i, j);
        }
    }

    // Each twiddle from sin/cos directly rather than by repeated multiplication.
    let twiddles: Vec<Complex64> = (0..m / 2)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64))
        .collect();

    let mut len = 2;
    while len <= m {
        let half = len / 2;
        let stride = m / len;
        for block in data.chunks_exact_mut(len) {
            let (lo, hi) = block.split_at_mut(half);
            for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let t = *b * twiddles[j * stride];
                *b = *a - t;
                *a += t;
            }
        }
        len *= 2;
    }
}
