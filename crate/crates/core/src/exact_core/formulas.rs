use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Hyperplane, Result};
use crate::scalar::{rat, ExactInt};

use super::{bareiss_det, build_d_matrix, rising_factorial};

/// `det M = ∏_{k=1}^{n-1} [k (α+β+k) / ((α+k)(β+k))]^{n-k}`.
pub fn m_product_formula<I: ExactInt>(alpha: &Ratio<I>, beta: &Ratio<I>, n: usize) -> Result<Ratio<I>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut acc = Ratio::one();
    for k in 1..n {
        let kq = rat::<I>(k as i64);
        let a = alpha + &kq;
        if a.is_zero() {
            return Err(Error::DenominatorZero(Hyperplane::Alpha(k as i64)));
        }
        let b = beta + &kq;
        if b.is_zero() {
            return Err(Error::DenominatorZero(Hyperplane::Beta(k as i64)));
        }
        let factor = kq.clone() * (alpha + beta + &kq) / (a * b);
        acc = acc * num_traits::pow(factor, n - k);
    }
    Ok(acc)
}

/// `D_n(α, β) = ∏_{k=1}^{n-1} (n-k)! (α+β+k)^{n-k}`.
pub fn d_closed_form<I: ExactInt>(alpha: &Ratio<I>, beta: &Ratio<I>, n: usize) -> Result<Ratio<I>> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let sum = alpha + beta;
    let mut acc = Ratio::one();
    for k in 1..n {
        let fact = rising_factorial(&rat::<I>(1), n - k);
        acc = acc * fact * num_traits::pow(sum.clone() + rat::<I>(k as i64), n - k);
    }
    Ok(acc)
}

/// `det M` recovered from `D_n(α, β)` by dividing out the row factors
/// `Γ(α+1+n-i)/Γ(α+1)` and column factors `Γ(β+1+n-j)/Γ(β+1)`:
///
/// `det M = D_n(α, β) / ∏_{m=0}^{n-1} (α+1)_m (β+1)_m`.
pub fn m_det_from_d<I: ExactInt>(alpha: &Ratio<I>, beta: &Ratio<I>, n: usize) -> Result<Ratio<I>> {
    let d = bareiss_det(&build_d_matrix(alpha, beta, n)?);
    let a1 = alpha + rat::<I>(1);
    let b1 = beta + rat::<I>(1);
    let mut denom = Ratio::one();
    for m in 0..n {
        denom = denom * rising_factorial(&a1, m) * rising_factorial(&b1, m);
    }
    if denom.is_zero() {
        // Locate the first vanishing shift for the diagnostic.
        for k in 1..n as i64 {
            if (alpha + rat::<I>(k)).is_zero() {
                return Err(Error::DenominatorZero(Hyperplane::Alpha(k)));
            }
            if (beta + rat::<I>(k)).is_zero() {
                return Err(Error::DenominatorZero(Hyperplane::Beta(k)));
            }
        }
        unreachable!("a rising factorial of alpha+1 or beta+1 vanished without a hyperplane hit");
    }
    Ok(d / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigRational;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn product_formula_examples() {
        assert_eq!(m_product_formula(&q(-7, 3), &q(9, 2), 1).unwrap(), q(1, 1));
        let (a, b) = (q(2, 5), q(-1, 3));
        let expected = (&a + &b + q(1, 1)) / ((&a + q(1, 1)) * (&b + q(1, 1)));
        assert_eq!(m_product_formula(&a, &b, 2).unwrap(), expected);
        for n in 1..9 {
            assert_eq!(m_product_formula(&q(0, 1), &q(13, 16), n).unwrap(), q(1, 1));
        }
        assert_eq!(m_product_formula(&q(1, 1), &q(1, 1), 2).unwrap(), q(3, 4));
    }

    #[test]
    fn product_formula_hyperplanes() {
        assert_eq!(
            m_product_formula(&q(-2, 1), &q(1, 2), 4),
            Err(Error::DenominatorZero(Hyperplane::Alpha(2)))
        );
        assert_eq!(
            m_product_formula(&q(1, 2), &q(-3, 1), 4),
            Err(Error::DenominatorZero(Hyperplane::Beta(3)))
        );
        assert!(m_product_formula(&q(-4, 1), &q(1, 2), 4).is_ok());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(d_closed_form(&q(3, 7), &q(-2, 9), 1).unwrap(), q(1, 1));
        assert_eq!(d_closed_form(&q(1, 1), &q(1, 1), 2).unwrap(), q(3, 1));
        assert_eq!(d_closed_form(&q(0, 1), &q(0, 1), 3).unwrap(), q(4, 1));
    }

    #[test]
    fn bridge_on_simple_points() {
        assert_eq!(m_det_from_d(&q(1, 1), &q(1, 1), 2).unwrap(), q(3, 4));
        assert_eq!(m_det_from_d(&q(0, 1), &q(5, 3), 6).unwrap(), q(1, 1));
        assert_eq!(
            m_det_from_d(&q(1, 2), &q(-2, 1), 3),
            Err(Error::DenominatorZero(Hyperplane::Beta(2)))
        );
    }
}
