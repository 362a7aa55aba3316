use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::wide::{limbs_for, WideMatrix};
use super::{IntMatrix, IntPolynomial, LinalgError};

/// Characteristic polynomial `det(xI − m)` by the Faddeev–LeVerrier
/// recurrence.
///
/// With `M₁ = I` and `Mₖ₊₁ = m·Mₖ + cₙ₋ₖ·I`, the coefficients satisfy
/// `cₙ₋ₖ = −tr(m·Mₖ)/k`. Over the integers every one of those divisions is
/// exact; a nonzero remainder means something upstream is broken and is
/// reported as `InternalExactnessViolation`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPolynomial, LinalgError> {
    char_poly_with_limit(m, None)
}

/// [`char_poly`] with an optional cap on the bit length of intermediate
/// values. Exceeding the cap aborts with `BitLimitExceeded`.
pub fn char_poly_with_limit(m: &IntMatrix, max_bits: Option<u64>) -> Result<IntPolynomial, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if let Some(small) = m.entries().iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>() {
        return char_poly_small(m.rows(), &small, max_bits);
    }
    char_poly_big(m, max_bits)
}

fn char_poly_big(m: &IntMatrix, max_bits: Option<u64>) -> Result<IntPolynomial, LinalgError> {
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = IntMatrix::identity(n);
    for k in 1..=n {
        let prod = m.mul(&acc)?;
        if let Some(limit) = max_bits {
            let bits = prod.max_bits();
            if bits > limit {
                return Err(LinalgError::BitLimitExceeded { bits, limit });
            }
        }
        let (c, r) = (-prod.trace()).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(LinalgError::InternalExactnessViolation(format!(
                "trace step {k} of {n} left remainder {r}"
            )));
        }
        if k < n {
            acc = prod;
            for i in 0..n {
                acc[(i, i)] += &c;
            }
        } else {
            // Cayley–Hamilton: m·Mₙ + c₀I must vanish.
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j { -&c } else { BigInt::zero() };
                    if prod[(i, j)] != expect {
                        return Err(LinalgError::InternalExactnessViolation(
                            "Cayley-Hamilton residual is nonzero".into(),
                        ));
                    }
                }
            }
        }
        coeffs[n - k] = c;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The same recurrence for matrices whose entries fit in `i64`, carried out
/// on fixed-width limbs. The width before each product is chosen from the
/// largest entry of the accumulator and the largest absolute row sum, so
/// nothing can overflow.
fn char_poly_small(n: usize, m: &[i64], max_bits: Option<u64>) -> Result<IntPolynomial, LinalgError> {
    let row_sum_bits = (0..n)
        .map(|i| m[i * n..(i + 1) * n].iter().map(|v| v.unsigned_abs() as u128).sum::<u128>())
        .max()
        .map_or(0, |r| 128 - r.leading_zeros() as u64);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = WideMatrix::identity(n);
    for k in 1..=n {
        let prod = acc.left_mul(m, limbs_for(acc.max_bits() + row_sum_bits));
        let prod_bits = prod.max_bits();
        if let Some(limit) = max_bits {
            if prod_bits > limit {
                return Err(LinalgError::BitLimitExceeded { bits: prod_bits, limit });
            }
        }
        let trace: BigInt = (0..n).map(|i| prod.get(i, i)).sum();
        let (c, r) = (-trace).div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(LinalgError::InternalExactnessViolation(format!(
                "trace step {k} of {n} left remainder {r}"
            )));
        }
        if k < n {
            acc = prod.widen(limbs_for(prod_bits.max(c.bits()) + 1));
            acc.add_diagonal(&c);
        } else {
            // Cayley–Hamilton: m·Mₙ + c₀I must vanish.
            let neg_c = -&c;
            for i in 0..n {
                for j in 0..n {
                    let ok = if i == j { prod.get(i, i) == neg_c } else { prod.is_zero_at(i, j) };
                    if !ok {
                        return Err(LinalgError::InternalExactnessViolation(
                            "Cayley-Hamilton residual is nonzero".into(),
                        ));
                    }
                }
            }
        }
        coeffs[n - k] = c;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_nested();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(LinalgError::InternalExactnessViolation(format!(
                        "Bareiss step {k} left remainder {r}"
                    )));
                }
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}
