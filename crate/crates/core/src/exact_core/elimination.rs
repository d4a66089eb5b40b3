use num_rational::Ratio;

use crate::matrix::Matrix;
use crate::scalar::ExactInt;

/// Scales every row by the lcm of its denominators.
///
/// Returns the integer rows together with the product of the row scalings.
fn clear_denominators<I: ExactInt>(m: &Matrix<Ratio<I>>) -> (Vec<Vec<I>>, I) {
    let mut scale = I::one();
    let rows = m
        .rows()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(I::one(), |acc, x| acc.lcm(x.denom()));
            scale = scale.clone() * lcm.clone();
            row.iter()
                .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Bareiss fraction-free determinant of an integer matrix.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact.
pub fn bareiss_det_integral<I: ExactInt>(mut a: Vec<Vec<I>>) -> I {
    let n = a.len();
    let mut prev = I::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return I::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                debug_assert!((v.clone() % prev.clone()).is_zero());
                a[i][j] = v / prev.clone();
            }
            a[i][k] = I::zero();
        }
        prev = a[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}

/// Exact determinant of a rational matrix: clear denominators row by row,
/// run Bareiss over the integers, then divide the scaling back out.
///
/// With fixed-width integer types intermediate minors overflow for modest
/// orders; use `BigRational` beyond toy sizes.
pub fn bareiss_det<I: ExactInt>(m: &Matrix<Ratio<I>>) -> Ratio<I> {
    let (rows, scale) = clear_denominators(m);
    Ratio::new(bareiss_det_integral(rows), scale)
}

/// Exact rank by fraction-free row echelon reduction.
pub fn rational_rank<I: ExactInt>(m: &Matrix<Ratio<I>>) -> usize {
    let (mut a, _) = clear_denominators(m);
    let n = a.len();
    let mut rank = 0;
    let mut prev = I::one();
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..n {
            for j in col + 1..n {
                let v = a[i][j].clone() * a[rank][col].clone()
                    - a[i][col].clone() * a[rank][j].clone();
                debug_assert!((v.clone() % prev.clone()).is_zero());
                a[i][j] = v / prev.clone();
            }
            a[i][col] = I::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}
