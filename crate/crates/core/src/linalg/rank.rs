//! Fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use super::IntMatrix;

/// Row-echelon rank by Bareiss elimination. The pivot for each column is the
/// first row at or below the current one with a nonzero entry. Returns `None`
/// if an intermediate value does not fit in `T`.
pub(crate) fn bareiss_rank<T>(mut a: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv,
{
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                // (pivot * a_ij - a_ic * a_rj) / prev is exact.
                let x = pivot.checked_mul(&row[j])?;
                let y = lead.checked_mul(&pivot_row[j])?;
                row[j] = x.checked_sub(&y)?.checked_div(&prev)?;
            }
            row[c] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Exact rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    if let Some(small) = m.to_i128_rows() {
        if let Some(r) = bareiss_rank(small) {
            return r;
        }
    }
    bareiss_rank::<BigInt>(m.to_rows()).expect("BigInt arithmetic does not overflow")
}
