//! Characteristic polynomials by Berkowitz's division-free algorithm.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use super::{IntMatrix, LinalgError, RationalScalar};

/// Coefficients of `det(tI - A)` from the highest degree down, for a square
/// matrix given as rows. `None` on overflow of `T`.
fn berkowitz<T>(a: &[Vec<T>]) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedMul + CheckedAdd + CheckedSub,
{
    let neg = |x: &T| T::zero().checked_sub(x);
    let mut poly = vec![T::one()];
    for k in 1..=a.len() {
        let last = k - 1;
        // Toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^{k-2} C.
        let mut col = Vec::with_capacity(k + 1);
        col.push(T::one());
        col.push(neg(&a[last][last])?);
        let mut w: Vec<T> = (0..last).map(|i| a[i][last].clone()).collect();
        for step in 0..last {
            let mut dot = T::zero();
            for (j, wj) in w.iter().enumerate() {
                dot = dot.checked_add(&a[last][j].checked_mul(wj)?)?;
            }
            col.push(neg(&dot)?);
            if step + 1 < last {
                let mut next = Vec::with_capacity(last);
                for i in 0..last {
                    let mut acc = T::zero();
                    for (j, wj) in w.iter().enumerate() {
                        acc = acc.checked_add(&a[i][j].checked_mul(wj)?)?;
                    }
                    next.push(acc);
                }
                w = next;
            }
        }
        let mut next = vec![T::zero(); k + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in poly.iter().enumerate() {
                if i >= j {
                    *slot = slot.checked_add(&col[i - j].checked_mul(pj)?)?;
                }
            }
        }
        poly = next;
    }
    Some(poly)
}

/// The characteristic polynomial `det(tI - M)`, coefficients in ascending
/// degree: `result[i]` is the coefficient of `t^i`. A 0x0 matrix gives `[1]`.
pub fn char_poly(m: &IntMatrix) -> Result<Vec<BigInt>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let descending = m
        .to_i128_rows()
        .and_then(|rows| berkowitz(&rows))
        .map(|p| p.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| berkowitz(&m.to_rows()).expect("BigInt arithmetic does not overflow"));
    let mut ascending: Vec<BigInt> = descending;
    ascending.reverse();
    Ok(ascending)
}

// Exact quotient of `poly` (descending) by `den * t - num`, if it divides.
fn divide_linear(poly: &[BigInt], num: &BigInt, den: &BigInt) -> Option<Vec<BigInt>> {
    if poly.len() < 2 {
        return None;
    }
    let mut quotient = Vec::with_capacity(poly.len() - 1);
    let mut carry = BigInt::zero();
    for coef in &poly[..poly.len() - 1] {
        let (q, r) = (coef + num * &carry).div_rem(den);
        if !r.is_zero() {
            return None;
        }
        quotient.push(q.clone());
        carry = q;
    }
    let constant = &poly[poly.len() - 1];
    (constant + num * &carry).is_zero().then_some(quotient)
}

/// Multiplicity of `lambda` as a root of an integer polynomial given in
/// ascending degree, by repeated exact division by `den * t - num`.
pub fn root_multiplicity(poly: &[BigInt], lambda: &RationalScalar) -> usize {
    let mut p: Vec<BigInt> = poly.iter().rev().cloned().collect();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
    }
    if p.iter().all(Zero::is_zero) {
        return 0;
    }
    let mut count = 0;
    while let Some(q) = divide_linear(&p, lambda.numerator(), lambda.denominator()) {
        p = q;
        count += 1;
    }
    count
}
