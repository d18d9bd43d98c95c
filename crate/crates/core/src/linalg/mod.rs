//! Exact integer linear algebra for graph matrices.
//!
//! Nothing here touches floating point. Elimination first runs on checked
//! `i128` arithmetic and restarts on `BigInt` the moment any intermediate
//! value would overflow, so results are exact for every input.

mod charpoly;
mod rank;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{pendant_profile, Graph};

pub use charpoly::{char_poly, root_multiplicity};
pub use rank::rank;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix rows have differing lengths")]
    Ragged,
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        let data = rows.iter().flatten().cloned().map(Into::into).collect();
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.data[i * self.cols + j] = value.into();
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The principal submatrix on `indices` (in the given order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> IntMatrix {
        let k = indices.len();
        let mut out = Self::zeros(k, k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.data[a * k + b] = self.get(i, j).clone();
            }
        }
        out
    }

    /// `scale * self - shift * I`.
    pub fn scaled_minus_identity(
        &self,
        scale: &BigInt,
        shift: &BigInt,
    ) -> Result<Self, LinalgError> {
        self.require_square()?;
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= scale;
        }
        for i in 0..self.rows {
            out.data[i * self.cols + i] -= shift;
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<(), LinalgError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub(crate) fn to_i128_rows(&self) -> Option<Vec<Vec<i128>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i128).collect())
            .collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalScalar {
    num: BigInt,
    den: BigInt,
}

impl RationalScalar {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, LinalgError> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(LinalgError::ZeroDenominator);
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(RationalScalar { num, den })
    }

    pub fn integer(value: impl Into<BigInt>) -> Self {
        RationalScalar {
            num: value.into(),
            den: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }
}

impl fmt::Display for RationalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

pub fn adjacency(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n, n);
    for u in 0..n {
        m.set(u, u, g.degree(u));
    }
    for (u, v) in g.edges() {
        m.set(u, v, -1);
        m.set(v, u, -1);
    }
    m
}

/// `m_M(lambda)` as the nullity of `den * M - num * I`. For symmetric `M`
/// this is the algebraic multiplicity.
pub fn eigen_multiplicity(m: &IntMatrix, lambda: &RationalScalar) -> Result<usize, LinalgError> {
    let shifted = m.scaled_minus_identity(&lambda.den, &lambda.num)?;
    Ok(m.rows() - rank(&shifted))
}

/// `m_{L(G)}(1)`, the multiplicity of 1 as a Laplacian eigenvalue.
pub fn laplacian_multiplicity_one(g: &Graph) -> usize {
    eigen_multiplicity(&laplacian(g), &RationalScalar::integer(1)).expect("Laplacians are square")
}

/// `m_{A(G)}(-1)`.
pub fn adjacency_multiplicity_minus_one(g: &Graph) -> usize {
    eigen_multiplicity(&adjacency(g), &RationalScalar::integer(-1)).expect("adjacency is square")
}

/// Vertices that are neither pendant nor quasi-pendant, in increasing order.
pub fn internal_vertices(g: &Graph) -> Vec<usize> {
    let prof = pendant_profile(g);
    let mut marked = vec![false; g.order()];
    for &u in prof.pendants.iter().chain(&prof.quasi_pendants) {
        marked[u] = true;
    }
    (0..g.order()).filter(|&u| !marked[u]).collect()
}

/// The principal submatrix `N` of `L(G)` on the internal vertices.
pub fn internal_submatrix(g: &Graph) -> IntMatrix {
    laplacian(g).principal_submatrix(&internal_vertices(g))
}

/// Integer Laplacian eigenvalues with their exact multiplicities, ascending.
///
/// Laplacian eigenvalues lie in `[0, 2 * max_degree]`, so every candidate in
/// that range is tested against the characteristic polynomial.
pub fn integer_laplacian_eigenvalues(g: &Graph) -> Vec<(i64, usize)> {
    let poly = char_poly(&laplacian(g)).expect("Laplacians are square");
    let bound = 2 * g.degrees().into_iter().max().unwrap_or(0) as i64;
    (0..=bound)
        .filter_map(|lambda| {
            let mult = root_multiplicity(&poly, &RationalScalar::integer(lambda));
            (mult > 0).then_some((lambda, mult))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn laplacians_of_small_graphs() {
        assert_eq!(laplacian(&Graph::path(2)), ints(&[&[1, -1], &[-1, 1]]));
        assert_eq!(laplacian(&Graph::empty(1)), ints(&[&[0]]));
        assert_eq!(
            laplacian(&Graph::path(3)),
            ints(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 1]])
        );
    }

    #[test]
    fn matrix_invariants() {
        let g = Graph::cycle(7)
            .extended(2, &[(0, 7), (7, 8), (3, 8)])
            .unwrap();
        let l = laplacian(&g);
        assert!(l.is_symmetric());
        for i in 0..l.rows() {
            let sum: BigInt = l.row(i).iter().sum();
            assert!(sum.is_zero());
        }
        let a = adjacency(&g);
        assert!(a.is_symmetric());
        assert!((0..a.rows()).all(|i| a.get(i, i).is_zero()));
    }

    #[test]
    fn multiplicities_at_one() {
        assert_eq!(
            eigen_multiplicity(&laplacian(&Graph::path(3)), &RationalScalar::integer(1)),
            Ok(1)
        );
        assert_eq!(
            eigen_multiplicity(&laplacian(&Graph::cycle(6)), &RationalScalar::integer(1)),
            Ok(2)
        );
        let k3 = Graph::star(3).line_graph();
        assert_eq!(
            eigen_multiplicity(&adjacency(&k3), &RationalScalar::integer(-1)),
            Ok(2)
        );
        assert_eq!(laplacian_multiplicity_one(&Graph::star(3)), 2);
        assert_eq!(laplacian_multiplicity_one(&Graph::cycle(5)), 0);
        assert_eq!(laplacian_multiplicity_one(&Graph::path(6)), 1);
    }

    #[test]
    fn rational_targets() {
        // L(P_2) = [[1,-1],[-1,1]] has eigenvalues 0 and 2; A(P_2) has +-1.
        let half = RationalScalar::new(2, 4).unwrap();
        assert_eq!(half, RationalScalar::new(-1, -2).unwrap());
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(
            eigen_multiplicity(&laplacian(&Graph::path(2)), &half),
            Ok(0)
        );
        assert_eq!(
            eigen_multiplicity(
                &laplacian(&Graph::path(2)),
                &RationalScalar::new(4, 2).unwrap()
            ),
            Ok(1)
        );
        assert_eq!(RationalScalar::new(1, 0), Err(LinalgError::ZeroDenominator));
    }

    #[test]
    fn non_square_input_is_rejected() {
        let m = IntMatrix::zeros(2, 3);
        assert_eq!(
            eigen_multiplicity(&m, &RationalScalar::integer(1)),
            Err(LinalgError::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn internal_submatrices() {
        assert_eq!(internal_submatrix(&Graph::star(3)).rows(), 0);
        assert_eq!(internal_submatrix(&Graph::path(4)).rows(), 0);
        let c6 = Graph::cycle(6);
        assert_eq!(internal_submatrix(&c6), laplacian(&c6));
        // P_6: vertices 2 and 3 are internal.
        assert_eq!(
            internal_submatrix(&Graph::path(6)),
            ints(&[&[2, -1], &[-1, 2]])
        );
    }

    #[test]
    fn integer_spectra() {
        assert_eq!(
            integer_laplacian_eigenvalues(&Graph::path(3)),
            vec![(0, 1), (1, 1), (3, 1)]
        );
        assert_eq!(
            integer_laplacian_eigenvalues(&Graph::star(3)),
            vec![(0, 1), (1, 2), (4, 1)]
        );
        assert_eq!(
            integer_laplacian_eigenvalues(&Graph::cycle(6)),
            vec![(0, 1), (1, 2), (3, 2), (4, 1)]
        );
    }

    #[test]
    fn display_is_row_major_text() {
        assert_eq!(laplacian(&Graph::path(2)).to_string(), "1 -1\n-1 1\n");
    }
}
