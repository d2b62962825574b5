//! Dense matrices over a scalar backend: the realization of all operators
//! on ℂ(ℤ/nℤ). Includes the exact determinant by division-based elimination
//! (partial-pivot on the floating backend) and the Kronecker product with
//! row-major index pairing.

use crate::error::Error;
use crate::scalar::Scalar;
use crate::Result;

/// A dense rows×cols matrix, row-major, backend-homogeneous.
#[derive(Clone, PartialEq)]
pub struct OpMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> OpMatrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        OpMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        OpMatrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &OpMatrix<S>) -> Result<OpMatrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::DimMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let mut out: OpMatrix<S> = OpMatrix::zeros(self.rows, rhs.cols);
        // i-k-j order: row-major friendly, and zero entries on either side
        // are skipped, which makes products with monomial matrices O(n²)
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    out.data[i * rhs.cols + j].add_assign(&t);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &OpMatrix<S>) -> Result<OpMatrix<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        Ok(OpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, rhs: &OpMatrix<S>) -> Result<OpMatrix<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        Ok(OpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        })
    }

    pub fn scale(&self, c: &S) -> OpMatrix<S> {
        OpMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mul(c)).collect(),
        }
    }

    /// Multiply row i by d[i] in place (diagonal·self).
    pub fn scale_rows(&mut self, d: &[S]) {
        assert_eq!(d.len(), self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.data[i * self.cols + j].mul(&d[i]);
                self.data[i * self.cols + j] = v;
            }
        }
    }

    /// Multiply column j by d[j] in place (self·diagonal).
    pub fn scale_cols(&mut self, d: &[S]) {
        assert_eq!(d.len(), self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.data[i * self.cols + j].mul(&d[j]);
                self.data[i * self.cols + j] = v;
            }
        }
    }

    pub fn transpose(&self) -> OpMatrix<S> {
        OpMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn conj_transpose(&self) -> OpMatrix<S> {
        OpMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        let mut t = S::zero();
        for i in 0..self.rows {
            t.add_assign(self.at(i, i));
        }
        t
    }

    pub fn pow(&self, e: u32) -> Result<OpMatrix<S>> {
        assert!(self.is_square());
        let mut acc = OpMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product with row-major pairing (i₁, i₂) ↦ i₁·r₂ + i₂.
    pub fn kron(&self, rhs: &OpMatrix<S>) -> OpMatrix<S> {
        OpMatrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let (i1, i2) = (i / rhs.rows, i % rhs.rows);
            let (j1, j2) = (j / rhs.cols, j % rhs.cols);
            self.at(i1, j1).mul(rhs.at(i2, j2))
        })
    }

    /// Determinant by Gaussian elimination. On the exact backend any nonzero
    /// pivot is valid; the floating backend picks the largest-magnitude pivot.
    pub fn det(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = S::one();
        let mut negate = false;
        for col in 0..n {
            let pivot_row = if S::EXACT {
                (col..n).find(|&r| !m.at(r, col).is_zero())
            } else {
                (col..n)
                    .filter(|&r| !m.at(r, col).is_zero())
                    .max_by(|&a, &b| {
                        m.at(a, col)
                            .embed()
                            .norm()
                            .partial_cmp(&m.at(b, col).embed().norm())
                            .unwrap()
                    })
            };
            let Some(p) = pivot_row else {
                return S::zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                negate = !negate;
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let pivot_inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = m.at(r, col).mul(&pivot_inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let t = factor.mul(m.at(col, j));
                    let v = m.at(r, j).sub(&t);
                    m.set(r, j, v);
                }
            }
        }
        if negate {
            det.neg()
        } else {
            det
        }
    }

    /// Largest entrywise |embed(self) − embed(rhs)|; works on both backends
    /// and is the residual reported by the floating suites.
    pub fn residual(&self, rhs: &OpMatrix<S>) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a.embed() - b.embed()).norm())
            .fold(0.0, f64::max)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &S)> {
        self.data
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }
}

impl<S: Scalar> std::fmt::Debug for OpMatrix<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "OpMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}  ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycloNum;

    fn int_matrix(rows: usize, cols: usize, vals: &[i64]) -> OpMatrix<CycloNum> {
        OpMatrix::from_fn(rows, cols, |i, j| CycloNum::from_int(vals[i * cols + j]))
    }

    #[test]
    fn det_examples() {
        assert_eq!(OpMatrix::<CycloNum>::identity(5).det(), CycloNum::one());
        let d = int_matrix(2, 2, &[2, 0, 0, 3]);
        assert_eq!(d.det(), CycloNum::from_int(6));
        let singular = int_matrix(2, 2, &[1, 2, 2, 4]);
        assert!(singular.det().is_zero());
    }

    #[test]
    fn det_is_multiplicative() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = OpMatrix::from_fn(4, 4, |_, _| CycloNum::from_int(rng.gen_range(-5..=5)));
            let b = OpMatrix::from_fn(4, 4, |_, _| CycloNum::from_int(rng.gen_range(-5..=5)));
            let lhs = a.mul(&b).unwrap().det();
            assert_eq!(lhs, &a.det() * &b.det());
        }
    }

    #[test]
    fn kron_examples() {
        let i2 = OpMatrix::<CycloNum>::identity(2);
        let i3 = OpMatrix::<CycloNum>::identity(3);
        assert_eq!(i2.kron(&i3), OpMatrix::identity(6));
        let a = int_matrix(1, 1, &[3]);
        let b = int_matrix(2, 2, &[1, 2, 3, 4]);
        assert_eq!(a.kron(&b), b.scale(&CycloNum::from_int(3)));
    }

    #[test]
    fn kron_trace_is_product_of_traces() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let a = OpMatrix::from_fn(3, 3, |_, _| CycloNum::from_int(rng.gen_range(-4..=4)));
            let b = OpMatrix::from_fn(3, 3, |_, _| CycloNum::from_int(rng.gen_range(-4..=4)));
            assert_eq!(a.kron(&b).trace(), &a.trace() * &b.trace());
        }
    }

    #[test]
    fn float_det_matches_exact() {
        use num_complex::Complex64;
        let exact = int_matrix(3, 3, &[2, 1, 0, -1, 3, 5, 0, 2, 1]);
        let float: OpMatrix<Complex64> =
            OpMatrix::from_fn(3, 3, |i, j| exact.at(i, j).embed());
        let d = float.det();
        assert!((d - exact.det().embed()).norm() < 1e-12);
    }
}
