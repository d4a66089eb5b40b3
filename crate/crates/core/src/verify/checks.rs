use num_traits::{One, Zero};

use crate::determinants::{
    closed_form_det, exact_m_det, log_tolerance, lu_det, near_degenerate, product_form_det,
    proof2_det, rational_to_f64, values_agree,
};
use crate::error::{Error, Hyperplane, Result};
use crate::exact_core::{
    bareiss_det, build_d_matrix, build_m_matrix, d_closed_form, m_det_from_d, m_product_formula,
    rational_rank, rising_factorial,
};
use crate::fh_symbol::{
    coefficient_sequence, fourier_coefficient, strip_alternating_sign, toeplitz_matrix, Params,
};
use crate::scalar::rat;
use crate::{BigRational, LogValue};

use super::VerifyOutcome;

fn at(alpha: &BigRational, beta: &BigRational, n: usize) -> String {
    format!("alpha={alpha}, beta={beta}, n={n}")
}

fn at_real(p: Params<f64>, n: usize) -> String {
    format!("alpha={:?}, beta={:?}, n={n}", p.alpha, p.beta)
}

/// Adding row `i-1` to row `i` of `M(α, β)` gives `(α+β+1)/(α+1)` times row
/// `i` of `M(α+1, β)`, for every `i >= 1`.
pub fn check_row_op_identity(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    let alpha1 = alpha + rat::<num_bigint::BigInt>(1);
    if alpha1.is_zero() {
        return Err(Error::DenominatorZero(Hyperplane::Alpha(1)));
    }
    let m = build_m_matrix(alpha, beta, n)?;
    let shifted = build_m_matrix(&alpha1, beta, n)?;
    let scale = (alpha + beta + BigRational::one()) / &alpha1;
    let mut out = VerifyOutcome::new("row_op_identity");
    let mut bad = None;
    'rows: for i in 1..n {
        for j in 0..n {
            let lhs = &m[(i, j)] + &m[(i - 1, j)];
            let rhs = &scale * &shifted[(i, j)];
            if lhs != rhs {
                bad = Some(format!("{}: entry ({i},{j}) lhs={lhs} rhs={rhs}", at(alpha, beta, n)));
                break 'rows;
            }
        }
    }
    out.record(bad.is_none(), || bad.unwrap_or_default());
    Ok(out)
}

/// At `α = -β-k` the matrix `M` has rank at most `k`, hence a zero determinant.
pub fn check_rank_drop(beta: &BigRational, k: usize, n: usize) -> Result<VerifyOutcome> {
    if k == 0 || k >= n {
        return Err(Error::Config(format!("rank-drop needs 1 <= k < n, got k={k}, n={n}")));
    }
    let alpha = -beta - rat::<num_bigint::BigInt>(k as i64);
    let m = build_m_matrix(&alpha, beta, n)?;
    let rank = rational_rank(&m);
    let det = bareiss_det(&m);
    let mut out = VerifyOutcome::new("rank_drop");
    out.record(rank <= k && det.is_zero(), || {
        format!("{}, k={k}: rank={rank}, det={det}", at(&alpha, beta, n))
    });
    Ok(out)
}

/// `D_n(α, β) = (n-1)! (α+β+1)^{n-1} D_{n-1}(α+1, β)`, both sides by Bareiss.
pub fn check_proof2_recursion(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    if n < 2 {
        return Err(Error::Config(format!("the recursion needs n >= 2, got {n}")));
    }
    let one = BigRational::one();
    let lhs = bareiss_det(&build_d_matrix(alpha, beta, n)?);
    let inner = bareiss_det(&build_d_matrix(&(alpha + &one), beta, n - 1)?);
    let rhs = rising_factorial(&one, n - 1)
        * num_traits::pow(alpha + beta + &one, n - 1)
        * inner;
    let mut out = VerifyOutcome::new("proof2_recursion");
    out.record(lhs == rhs, || format!("{}: lhs={lhs} rhs={rhs}", at(alpha, beta, n)));
    Ok(out)
}

/// Bareiss determinant of `D_n(α, β)` against its product closed form.
pub fn check_d_closed_form(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    let det = bareiss_det(&build_d_matrix(alpha, beta, n)?);
    let closed = d_closed_form(alpha, beta, n)?;
    let mut out = VerifyOutcome::new("d_closed_form");
    out.record(det == closed, || format!("{}: bareiss={det} closed={closed}", at(alpha, beta, n)));
    Ok(out)
}

/// Bareiss determinant of `M` against the product formula, exactly.
pub fn check_m_product(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    let det = bareiss_det(&build_m_matrix(alpha, beta, n)?);
    let formula = m_product_formula(alpha, beta, n)?;
    let mut out = VerifyOutcome::new("m_product_formula");
    out.record(det == formula, || format!("{}: bareiss={det} product={formula}", at(alpha, beta, n)));
    Ok(out)
}

/// `det M` equals `D_n(α, β)` with the row and column gamma factors divided out.
pub fn check_m_bridge(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    let det = bareiss_det(&build_m_matrix(alpha, beta, n)?);
    let via_d = m_det_from_d(alpha, beta, n)?;
    let mut out = VerifyOutcome::new("m_bridge");
    out.record(det == via_d, || format!("{}: det M={det} via D={via_d}", at(alpha, beta, n)));
    Ok(out)
}

/// `M(α, β)ᵀ = M(β, α)`, so `det M` is symmetric in `(α, β)`.
pub fn check_m_symmetry(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    let m = build_m_matrix(alpha, beta, n)?;
    let swapped = build_m_matrix(beta, alpha, n)?;
    let mut out = VerifyOutcome::new("exact_symmetry");
    let transposed_ok = m.transpose() == swapped;
    let (d1, d2) = (bareiss_det(&m), bareiss_det(&swapped));
    out.record(transposed_ok && d1 == d2, || {
        format!("{}: transpose equal={transposed_ok}, det={d1} vs {d2}", at(alpha, beta, n))
    });
    Ok(out)
}

fn compare(out: &mut VerifyOutcome, what: &str, a: LogValue, b: LogValue, tol: f64, degenerate: bool, ctx: &str) {
    out.fail_unless(values_agree(a, b, tol, degenerate), || {
        format!("{ctx}: {what}: {a} vs {b} (tol {tol:e}, degenerate={degenerate})")
    });
}

/// Ties the float engines (LU, closed form, product form) to the exact-backed
/// ones, and checks the exact `det M` against `D_n(α, β)`.
pub fn check_cross_layer(alpha: &BigRational, beta: &BigRational, n: usize) -> Result<VerifyOutcome> {
    if n > 16 {
        return Err(Error::Config(format!("cross-layer exact part is limited to n <= 16, got {n}")));
    }
    let p = Params::new(rational_to_f64(alpha), rational_to_f64(beta));
    let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p, n)?));
    let closed = closed_form_det(p, n)?;
    let product = product_form_det(p, n)?;
    let em = exact_m_det(alpha, beta, n)?;
    let p2 = proof2_det(alpha, beta, n)?;
    let det_m = bareiss_det(&build_m_matrix(alpha, beta, n)?);
    let via_d = m_det_from_d(alpha, beta, n)?;

    let tol = log_tolerance(n);
    let degenerate = near_degenerate(p, n);
    let ctx = at(alpha, beta, n);
    let mut out = VerifyOutcome::new("cross_layer");
    out.samples += 1;
    compare(&mut out, "lu vs closed", lu, closed, tol, degenerate, &ctx);
    compare(&mut out, "product vs closed", product, closed, tol, degenerate, &ctx);
    compare(&mut out, "exact-m vs closed", em, closed, tol, degenerate, &ctx);
    compare(&mut out, "proof2 vs closed", p2, closed, tol, degenerate, &ctx);
    out.fail_unless(det_m == via_d, || format!("{ctx}: det M={det_m} vs D_n/gamma factors={via_d}"));
    Ok(out)
}

/// Closed form against LU on the explicit Toeplitz matrix.
pub fn check_closed_vs_lu(p: Params<f64>, n: usize, log_tol: f64) -> Result<VerifyOutcome> {
    let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p, n)?));
    let closed = closed_form_det(p, n)?;
    let mut out = VerifyOutcome::new("closed_vs_lu");
    out.samples += 1;
    compare(&mut out, "lu vs closed", lu, closed, log_tol, near_degenerate(p, n), &at_real(p, n));
    Ok(out)
}

/// Closed form against product form, `|Δ logmag| <= 1e-10 · max(1, |logmag|)`.
pub fn check_closed_vs_product(p: Params<f64>, n: usize) -> Result<VerifyOutcome> {
    let closed = closed_form_det(p, n)?;
    let product = product_form_det(p, n)?;
    let tol = 1e-10 * closed.logmag().abs().max(1.0);
    let mut out = VerifyOutcome::new("closed_vs_product");
    out.samples += 1;
    compare(&mut out, "product vs closed", product, closed, tol, near_degenerate(p, n), &at_real(p, n));
    Ok(out)
}

/// `D_n(α, β) = D_n(β, α)` in the closed form: identical sign, logmag within 1e-13.
pub fn check_float_symmetry(p: Params<f64>, n: usize) -> Result<VerifyOutcome> {
    let a = closed_form_det(p, n)?;
    let b = closed_form_det(p.swapped(), n)?;
    let mut out = VerifyOutcome::new("float_symmetry");
    out.record(a.sign() == b.sign() && (a.logmag() - b.logmag()).abs() <= 1e-13, || {
        format!("{}: {a} vs swapped {b}", at_real(p, n))
    });
    Ok(out)
}

/// Stripping `(-1)^k` from every coefficient leaves the LU determinant
/// unchanged to 1e-10 relative.
pub fn check_sign_irrelevance(p: Params<f64>, n: usize) -> Result<VerifyOutcome> {
    let spec = coefficient_sequence(p, n)?;
    let a = lu_det(&toeplitz_matrix(&spec));
    let b = lu_det(&toeplitz_matrix(&strip_alternating_sign(&spec)));
    let mut out = VerifyOutcome::new("sign_irrelevance");
    out.samples += 1;
    compare(&mut out, "stripped vs signed", b, a, 1e-10, false, &at_real(p, n));
    Ok(out)
}

/// Recurrence-generated coefficients against direct gamma evaluation for
/// `|k| <= kmax`, to 1e-12 relative.
pub fn check_coefficient_recurrence(p: Params<f64>, kmax: usize) -> Result<VerifyOutcome> {
    let spec = coefficient_sequence(p, kmax + 1)?;
    let mut worst = (0.0_f64, 0i64);
    for k in -(kmax as i64)..=kmax as i64 {
        let direct = fourier_coefficient(p, k)?;
        let rec = spec.coeff(k);
        let err = if direct == 0.0 {
            rec.abs()
        } else {
            ((rec - direct) / direct).abs()
        };
        if err > worst.0 || err.is_nan() {
            worst = (err, k);
        }
    }
    let mut out = VerifyOutcome::new("coefficient_recurrence");
    out.record(worst.0 <= 1e-12, || {
        format!("{}: worst relative error {:e} at k={}", at_real(p, kmax + 1), worst.0, worst.1)
    });
    Ok(out)
}

/// `α = β = 1` gives the second-difference matrix with `D_n = n + 1`.
pub fn check_tridiagonal(n: usize) -> Result<VerifyOutcome> {
    let d = closed_form_det(Params::new(1.0, 1.0), n)?;
    let want = ((n + 1) as f64).ln();
    let mut out = VerifyOutcome::new("tridiagonal");
    out.record(d.sign() == 1 && (d.logmag() - want).abs() <= 1e-10 * want, || {
        format!("n={n}: closed={d}, want log({})", n + 1)
    });
    Ok(out)
}

/// With `α = 0` (or `β = 0`) the matrix is triangular with unit diagonal.
pub fn check_triangular(p: Params<f64>, n: usize) -> Result<VerifyOutcome> {
    let closed = closed_form_det(p, n)?;
    let lu = lu_det(&toeplitz_matrix(&coefficient_sequence(p, n)?));
    let mut out = VerifyOutcome::new("triangular");
    out.record(
        closed.sign() == 1 && closed.logmag().abs() <= 1e-12 && lu.sign() == 1 && lu.logmag().abs() <= 1e-9,
        || format!("{}: closed={closed}, lu={lu}", at_real(p, n)),
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn row_op_examples() {
        assert!(check_row_op_identity(&q(1, 1), &q(1, 1), 4).unwrap().passed());
        assert!(check_row_op_identity(&q(0, 1), &q(1, 2), 3).unwrap().passed());
        let o = check_row_op_identity(&q(3, 7), &q(2, 9), 1).unwrap();
        assert!(o.passed());
        assert!(matches!(
            check_row_op_identity(&q(-1, 1), &q(1, 2), 3),
            Err(Error::DenominatorZero(Hyperplane::Alpha(1)))
        ));
    }

    #[test]
    fn rank_drop_examples() {
        assert!(check_rank_drop(&q(1, 3), 1, 5).unwrap().passed());
        assert!(check_rank_drop(&q(2, 7), 3, 4).unwrap().passed());
        assert!(check_rank_drop(&q(1, 2), 2, 6).unwrap().passed());
        assert!(check_rank_drop(&q(1, 2), 0, 6).is_err());
        assert!(check_rank_drop(&q(1, 2), 6, 6).is_err());
    }

    #[test]
    fn rank_bound_is_tight_at_k_one() {
        let alpha = -q(1, 3) - q(1, 1);
        let m = build_m_matrix(&alpha, &q(1, 3), 5).unwrap();
        assert_eq!(rational_rank(&m), 1);
    }

    #[test]
    fn proof2_examples() {
        assert!(check_proof2_recursion(&q(0, 1), &q(0, 1), 2).unwrap().passed());
        assert!(check_proof2_recursion(&q(1, 1), &q(1, 1), 3).unwrap().passed());
        let (a, b) = (q(2, 5), q(-7, 5));
        assert!(bareiss_det(&build_d_matrix(&a, &b, 2).unwrap()).is_zero());
        assert!(check_proof2_recursion(&a, &b, 2).unwrap().passed());
        assert!(check_proof2_recursion(&a, &b, 1).is_err());
    }

    #[test]
    fn m_product_examples() {
        assert!(check_m_product(&q(0, 1), &q(5, 3), 6).unwrap().passed());
        assert_eq!(bareiss_det(&build_m_matrix(&q(0, 1), &q(5, 3), 6).unwrap()), q(1, 1));
        assert!(check_m_product(&q(1, 1), &q(1, 1), 2).unwrap().passed());
        // α = -β - 2 lies on a zero of the product.
        let b = q(3, 11);
        assert!(check_m_product(&(-&b - q(2, 1)), &b, 5).unwrap().passed());
    }

    #[test]
    fn cross_layer_examples() {
        assert!(check_cross_layer(&q(0, 1), &q(0, 1), 8).unwrap().passed());
        let o = check_cross_layer(&q(1, 1), &q(1, 1), 10).unwrap();
        assert!(o.passed(), "{o:?}");
        let o = check_cross_layer(&q(3, 4), &q(1, 2), 6).unwrap();
        assert!(o.passed(), "{o:?}");
        assert!(check_cross_layer(&q(3, 4), &q(1, 2), 17).is_err());
    }

    #[test]
    fn float_checks_on_fixed_points() {
        let p = Params::new(0.3, 1.45);
        assert!(check_closed_vs_lu(p, 16, 1e-9).unwrap().passed());
        assert!(check_closed_vs_product(p, 16).unwrap().passed());
        assert!(check_float_symmetry(p, 16).unwrap().passed());
        assert!(check_sign_irrelevance(p, 16).unwrap().passed());
        assert!(check_coefficient_recurrence(p, 64).unwrap().passed());
        assert!(check_tridiagonal(50).unwrap().passed());
        assert!(check_triangular(Params::new(0.0, 2.5), 20).unwrap().passed());
        assert!(check_triangular(Params::new(-0.6, 0.0), 20).unwrap().passed());
    }

    #[test]
    fn a_wrong_claim_is_reported() {
        // Deliberately misuse the LU check with a far too tight tolerance at
        // a point where roundoff is visible.
        let o = check_closed_vs_lu(Params::new(2.7, 2.9), 64, 0.0).unwrap();
        assert!(!o.passed());
        assert!(o.first_failure.unwrap().contains("lu vs closed"));
    }
}
