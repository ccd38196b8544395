use std::f64::consts::PI;

use legendre_abel::catalog::{catalog, FnIntegrand};
use legendre_abel::fft::dft_forward;
use legendre_abel::spectral::default_grid_size;
use legendre_abel::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn rule(k: usize) -> QuadratureRule {
    QuadratureRule::gauss_legendre(k).unwrap()
}

fn direct_dft(s: &[Complex64]) -> Vec<Complex64> {
    let m = s.len();
    (0..m)
        .map(|n| {
            (0..m)
                .map(|k| {
                    s[k] * Complex64::from_polar(1.0, 2.0 * PI * ((n * k) % m) as f64 / m as f64)
                })
                .sum()
        })
        .collect()
}

fn complex_vec(m: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), m).prop_map(|v| {
        v.into_iter()
            .map(|(re, im)| Complex64::new(re, im))
            .collect()
    })
}

proptest! {
    #[test]
    fn fft_matches_direct_sum(s in (1u32..=8).prop_flat_map(|log_m| complex_vec(1 << log_m))) {
        let m = s.len();
        let fast = dft_forward(&s);
        let slow = direct_dft(&s);
        let scale = slow.iter().map(|v| v.norm()).fold(1e-300, f64::max);
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert!((a - b).norm() <= 1e-12 * scale);
        }
        let energy_in: f64 = s.iter().map(|v| v.norm_sqr()).sum();
        let energy_out: f64 = fast.iter().map(|v| v.norm_sqr()).sum();
        prop_assert!((energy_out - m as f64 * energy_in).abs() <= 1e-10 * m as f64 * energy_in);
    }

    #[test]
    fn grid_symmetry_is_exact(log_m in 2u32..=10, which in 0usize..9, k in 1usize..=12) {
        let spec = &catalog()[which];
        let m = 1usize << log_m;
        let grid = sample_grid(spec, m, &rule(k)).unwrap();
        let half = m / 2;
        prop_assert_eq!(grid.samples()[half], Complex64::new(0.0, 0.0));
        for j in 1..half {
            let y = 2.0 * PI * j as f64 / m as f64;
            prop_assert_eq!(grid.samples()[half + j], -(Complex64::from_polar(1.0, y) * grid.samples()[half - j]));
        }
    }

    #[test]
    fn phi_nonnegative_for_nonnegative_f(y in 0.0f64..=PI, which in 0usize..5) {
        let spec = parse_spec(["one", "abs32", "exp", "cosh", "rational:1"][which]).unwrap();
        prop_assert!(phi(&spec, y, &rule(16)).unwrap() >= 0.0);
    }

    #[test]
    fn phi_of_constant(y in 0.0f64..=PI, k in 1usize..40) {
        let one = parse_spec("one").unwrap();
        prop_assert!((phi(&one, y, &rule(k)).unwrap() - 2.0 * (0.5 * y).sin()).abs() <= 1e-14);
    }
}

#[test]
fn phi_exact_for_polynomials() {
    for d in 0..=12usize {
        let spec = parse_spec(&format!("pk:{d}")).unwrap();
        let reference = rule(64);
        let k = d + 1; // smallest K with 2K - 1 >= 2d
        for i in 0..=20 {
            let y = PI * i as f64 / 20.0;
            let want = phi(&spec, y, &reference).unwrap();
            let got = phi(&spec, y, &rule(k)).unwrap();
            assert!(
                (got - want).abs() <= 1e-13 * want.abs().max(1.0),
                "d={d}, K={k}, y={y}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn phi_of_x_closed_form() {
    // φ(y) = 2 sin(y/2) (1 + 2 cos y) / 3 for f(x) = x
    let x = parse_spec("x").unwrap();
    for i in 0..=30 {
        let y = PI * i as f64 / 30.0;
        let want = 2.0 * (0.5 * y).sin() * (1.0 + 2.0 * y.cos()) / 3.0;
        assert!((phi(&x, y, &rule(2)).unwrap() - want).abs() <= 1e-14);
    }
}

#[test]
fn phi_converges_geometrically_for_exp() {
    let exp = parse_spec("exp").unwrap();
    for y in [0.5, 1.5, 3.0] {
        let gaps: Vec<f64> = (1..=12)
            .map(|k| (phi(&exp, y, &rule(k)).unwrap() - phi(&exp, y, &rule(2 * k)).unwrap()).abs())
            .collect();
        for w in gaps.windows(2) {
            assert!(w[1] <= 0.25 * w[0] || w[1] <= 1e-15, "y={y}: {gaps:?}");
        }
        assert!(gaps[11] <= 1e-14, "y={y}: {gaps:?}");
    }
}

#[test]
fn pk3_grid_gives_unit_vector() {
    let spec = parse_spec("pk:3").unwrap();
    let grid = sample_grid(&spec, 64, &rule(32)).unwrap();
    let c = coefficients_from_grid(&grid, 8).unwrap();
    for (i, v) in c.values().iter().enumerate() {
        let want = if i == 3 { 1.0 } else { 0.0 };
        assert!((v - want).abs() <= 1e-12, "c_{i} = {v}");
    }
    let c = legendre_transform(&spec, 8, 1024, &rule(32)).unwrap();
    for (i, v) in c.values().iter().enumerate() {
        let want = if i == 3 { 1.0 } else { 0.0 };
        assert!((v - want).abs() <= 1e-10, "c_{i} = {v}");
    }
}

#[test]
fn rational_matches_oracle() {
    let spec = parse_spec("rational:1").unwrap();
    let fast = legendre_transform(&spec, 64, 16384, &rule(64)).unwrap();
    let slow = oracle_coefficients(&spec, 64, 512).unwrap();
    let report = compare(&fast, &slow).unwrap();
    assert!(report.max_abs_error <= 1e-10, "{report:?}");
}

#[test]
fn sine_form_examples() {
    let p5 = parse_spec("pk:5").unwrap();
    let c = sine_form_transform(&p5, 8, 128, &rule(32)).unwrap();
    for (i, v) in c.values().iter().enumerate() {
        let want = if i == 5 { 1.0 } else { 0.0 };
        assert!((v - want).abs() <= 1e-12, "c_{i} = {v}");
    }
    let abs32 = parse_spec("abs32").unwrap();
    let slow = sine_form_transform(&abs32, 16, 256, &rule(16)).unwrap();
    let fast = legendre_transform(&abs32, 16, 8192, &rule(64)).unwrap();
    let report = compare(&fast, &slow).unwrap();
    assert!(report.max_abs_error <= 1e-8, "{report:?}");
}

#[test]
fn realness_at_default_parameters() {
    let n = 32;
    for spec in catalog() {
        let c = legendre_transform(&spec, n, default_grid_size(n), &rule(64)).unwrap();
        let scale = c.values().iter().fold(1.0f64, |a, v| a.max(v.abs()));
        assert!(
            c.imag_residual() <= 1e-10 * scale,
            "{spec}: {}",
            c.imag_residual()
        );
    }
}

#[test]
fn linearity() {
    let (alpha, beta) = (0.75, -2.5);
    let r = rule(64);
    let one = parse_spec("one").unwrap();
    let p2 = parse_spec("pk:2").unwrap();
    let combo = FnIntegrand::new("combo", |x: f64| alpha + beta * 0.5 * (3.0 * x * x - 1.0));
    let cf = legendre_transform(&one, 16, 1024, &r).unwrap();
    let cg = legendre_transform(&p2, 16, 1024, &r).unwrap();
    let ch = legendre_transform(&combo, 16, 1024, &r).unwrap();
    for i in 0..16 {
        let want = alpha * cf.values()[i] + beta * cg.values()[i];
        assert!((ch.values()[i] - want).abs() <= 1e-12, "c_{i}");
    }
}

#[test]
fn parity_of_even_functions() {
    let cosh = parse_spec("cosh").unwrap();
    let c = legendre_transform(&cosh, 32, default_grid_size(32), &rule(64)).unwrap();
    assert!(c
        .values()
        .iter()
        .skip(1)
        .step_by(2)
        .all(|v| v.abs() <= 1e-9));
    let abs32 = parse_spec("abs32").unwrap();
    let c = legendre_transform(&abs32, 32, 8192, &rule(64)).unwrap();
    assert!(
        c.values()
            .iter()
            .skip(1)
            .step_by(2)
            .all(|v| v.abs() <= 1e-9),
        "{:?}",
        c.values()
    );
}

#[test]
fn exp_round_trip() {
    let exp = parse_spec("exp").unwrap();
    let c = legendre_transform(&exp, 32, 4096, &rule(48)).unwrap();
    for i in 0..=100 {
        let x = -1.0 + 2.0 * i as f64 / 100.0;
        let s = clenshaw_eval(c.series(), x).unwrap();
        assert!((s - x.exp()).abs() <= 1e-12, "x={x}: {s}");
    }
}

#[test]
fn sampled_data_through_pipeline() {
    use legendre_abel::catalog::{FunctionKind, Interpolation, SampledFunction};
    let table = SampledFunction::tabulate(f64::exp, 2001, Interpolation::Cubic).unwrap();
    let sampled = FunctionSpec::new(FunctionKind::Sampled(table)).unwrap();
    let exp = parse_spec("exp").unwrap();
    let a = legendre_transform(&sampled, 16, 1024, &rule(64)).unwrap();
    let b = legendre_transform(&exp, 16, 1024, &rule(64)).unwrap();
    assert!(compare(&a, &b).unwrap().max_abs_error <= 1e-9);
}

#[test]
fn transform_is_deterministic() {
    let spec = parse_spec("rational:0.5").unwrap();
    let a = legendre_transform(&spec, 64, 4096, &rule(64)).unwrap();
    let b = legendre_transform(&spec, 64, 4096, &rule(64)).unwrap();
    assert_eq!(a, b);
}
