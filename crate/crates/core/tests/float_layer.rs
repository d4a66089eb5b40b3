//! Float-layer coefficients and determinant engines.

use fhdet::determinants::*;
use fhdet::fh_symbol::*;
use fhdet::{Matrix, RealParams};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Generalised binomial coefficient C(a, m).
fn binom(a: f64, m: i64) -> f64 {
    if m < 0 {
        return 0.0;
    }
    (0..m).fold(1.0, |acc, i| acc * (a - i as f64) / (i + 1) as f64)
}

/// For integer β ≥ 0 the factor (1-1/z)^β is a finite sum, so the
/// coefficient of z^k is a finite convolution of two binomial series.
fn coefficient_by_expansion(alpha: f64, beta: i64, k: i64) -> (f64, f64) {
    let mut sum = 0.0;
    let mut scale = 0.0;
    for j in 0..=beta {
        let sign = if (k + 2 * j) % 2 == 0 { 1.0 } else { -1.0 };
        let t = sign * binom(alpha, k + j) * binom(beta as f64, j);
        sum += t;
        scale += t.abs();
    }
    (sum, scale)
}

fn off_poles(p: RealParams, n: usize, width: f64) -> bool {
    (1..n.max(2)).all(|k| {
        let k = k as f64;
        (p.alpha + k).abs() > width && (p.beta + k).abs() > width && (p.alpha + p.beta + k).abs() > width
    })
}

fn sample(rng: &mut ChaCha8Rng, n: usize) -> RealParams {
    loop {
        let p = RealParams::new(rng.gen_range(-0.9..3.0), rng.gen_range(-0.9..3.0));
        if off_poles(p, n, 1e-3) {
            return p;
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b { 0.0 } else { (a - b).abs() / a.abs().max(b.abs()) }
}

#[test]
fn coefficients_match_binomial_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let alpha = rng.gen_range(-0.9..3.0);
        let beta = rng.gen_range(0..=4);
        let spec = coefficient_sequence(RealParams::new(alpha, beta as f64), 21).unwrap();
        for k in -20..=20 {
            let (want, scale) = coefficient_by_expansion(alpha, beta, k);
            let got = spec.coeff(k);
            assert!((got - want).abs() <= 1e-12 * scale.max(1e-300), "α={alpha} β={beta} k={k}: {got} vs {want}");
        }
    }
}

#[test]
fn laurent_polynomial_symbols_have_exact_zeros() {
    // α = 2, β = 1: (1-z)^2 (1-1/z) = -1/z + 3 - 3z + z^2
    let spec = coefficient_sequence(RealParams::new(2.0, 1.0), 6).unwrap();
    let want = [(-1, -1.0), (0, 3.0), (1, -3.0), (2, 1.0)];
    for k in -5i64..=5 {
        let w = want.iter().find(|(j, _)| *j == k).map_or(0.0, |x| x.1);
        assert!((spec.coeff(k) - w).abs() < 1e-14, "k={k}");
        if w == 0.0 {
            assert_eq!(spec.coeff(k), 0.0);
        }
    }
}

#[test]
fn recurrence_matches_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let p = sample(&mut rng, 65);
        let spec = coefficient_sequence(p, 65).unwrap();
        for k in -64..=64 {
            let direct = fourier_coefficient(p, k).unwrap();
            assert!(rel(spec.coeff(k), direct) <= 1e-12, "{p:?} k={k}");
        }
    }
}

#[test]
fn half_half_first_ratio() {
    let p = RealParams::new(0.5, 0.5);
    let spec = coefficient_sequence(p, 3).unwrap();
    assert!((spec.coeff(1) / spec.coeff(0) + 1.0 / 3.0).abs() < 1e-15);
}

fn params() -> impl Strategy<Value = RealParams> {
    (-0.9f64..3.0, -0.9f64..3.0)
        .prop_map(|(a, b)| RealParams::new(a, b))
        .prop_filter("pole neighbourhood", |p| off_poles(*p, 16, 1e-3))
}

proptest! {
    #[test]
    fn swap_symmetry_of_coefficients(p in params(), k in -64i64..=64) {
        let a = fourier_coefficient(p, k).unwrap();
        let b = fourier_coefficient(p.swapped(), -k).unwrap();
        prop_assert!(rel(a, b) <= 1e-13);
    }

    #[test]
    fn swapped_toeplitz_is_transpose(p in params(), n in 1usize..12) {
        let t = toeplitz_matrix(&coefficient_sequence(p, n).unwrap());
        let s = toeplitz_matrix(&coefficient_sequence(p.swapped(), n).unwrap());
        let tt = t.transpose();
        for i in 0..n {
            for j in 0..n {
                prop_assert!(rel(tt[(i, j)], s[(i, j)]) <= 1e-13);
            }
        }
    }

    #[test]
    fn stripping_alternating_sign_keeps_determinant(p in params(), n in 1usize..16) {
        let spec = coefficient_sequence(p, n).unwrap();
        let a = lu_det(&toeplitz_matrix(&spec));
        let b = lu_det(&toeplitz_matrix(&strip_alternating_sign(&spec)));
        prop_assert_eq!(a.sign(), b.sign());
        prop_assert!((a.logmag() - b.logmag()).abs() <= 1e-10 * a.logmag().abs().max(1.0));
    }

    #[test]
    fn closed_form_is_symmetric(p in params(), n in 1usize..16) {
        let a = closed_form_det(p, n).unwrap();
        let b = closed_form_det(p.swapped(), n).unwrap();
        prop_assert_eq!(a.sign(), b.sign());
        prop_assert!((a.logmag() - b.logmag()).abs() <= 1e-13);
    }
}

#[test]
fn closed_form_matches_product_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(1..=64);
        let p = sample(&mut rng, n);
        let a = closed_form_det(p, n).unwrap();
        let b = product_form_det(p, n).unwrap();
        assert_eq!(a.sign(), b.sign(), "{p:?} n={n}");
        assert!((a.logmag() - b.logmag()).abs() <= 1e-10 * a.logmag().abs().max(1.0), "{p:?} n={n}: {a} vs {b}");
    }
}

#[test]
fn closed_form_matches_lu() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in [2, 4, 8, 16, 32, 64, 128] {
        for _ in 0..20 {
            let p = sample(&mut rng, n);
            let closed = closed_form_det(p, n).unwrap();
            let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p, n).unwrap()));
            assert_eq!(closed.sign(), lu.sign(), "{p:?} n={n}");
            let d = (closed.logmag() - lu.logmag()).abs();
            assert!(d <= log_tolerance(n), "{p:?} n={n}: Δ={d:e}");
        }
    }
}

/// det of the (2,-1) second-difference matrix by its three-term recursion.
fn second_difference_det(n: usize) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0);
    for _ in 1..n {
        (prev, cur) = (cur, 2.0 * cur - prev);
    }
    cur
}

#[test]
fn tridiagonal_case() {
    let p = RealParams::new(1.0, 1.0);
    for n in 1..=1000 {
        let closed = closed_form_det(p, n).unwrap();
        let want = second_difference_det(n).ln();
        assert_eq!(closed.sign(), 1);
        assert!(rel(closed.logmag(), want) <= 1e-10, "n={n}");
    }
    let t = toeplitz_matrix(&coefficient_sequence(p, 3).unwrap());
    assert_eq!(t, Matrix::from_rows(vec![vec![2.0, -1.0, 0.0], vec![-1.0, 2.0, -1.0], vec![0.0, -1.0, 2.0]]).unwrap());
    let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p, 10).unwrap()));
    assert!((lu.to_real() - 11.0).abs() < 1e-12);
}

#[test]
fn growth_step_is_log_ratio() {
    let p = RealParams::new(1.0, 1.0);
    let mut prev = closed_form_det(p, 1).unwrap().logmag();
    for n in 2..=1000 {
        let cur = closed_form_det(p, n).unwrap().logmag();
        let want = ((n + 1) as f64 / n as f64).ln();
        assert!((cur - prev - want).abs() <= 1e-12, "n={n}");
        prev = cur;
    }
}

#[test]
fn triangular_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 1..=64 {
        let partner = sample(&mut rng, n).beta;
        for p in [RealParams::new(0.0, partner), RealParams::new(partner, 0.0)] {
            let closed = closed_form_det(p, n).unwrap();
            assert!(closed.logmag().abs() <= 1e-12);
            let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p, n).unwrap()));
            assert!(lu.logmag().abs() <= 1e-9, "{p:?} n={n}");
        }
    }
}

#[test]
fn single_precision_instantiation_tracks_double() {
    let p32 = Params::new(0.5f32, 0.25f32);
    let p64 = RealParams::new(0.5, 0.25);
    for n in [1, 4, 16] {
        let a = closed_form_det(p32, n).unwrap();
        let b = closed_form_det(p64, n).unwrap();
        assert!((a.logmag() as f64 - b.logmag()).abs() < 1e-4);
        let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p32, n).unwrap()));
        assert!((lu.logmag() as f64 - b.logmag()).abs() < 1e-3);
    }
}
