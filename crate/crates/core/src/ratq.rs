//! Exact rational scalars and dense row-major matrices and vectors.
//!
//! Values are immutable: every operation returns a fresh matrix or vector.
//! Circulants are expanded densely here; the compact representation lives in
//! [`crate::circulant`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact fraction over arbitrary-precision integers, always stored reduced with
/// a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `p/q` reduced. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Serializes as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serializes as `"p/q"` even for integers (`"0/1"`, `"3/1"`).
pub fn format_fraction(r: &Rational) -> String {
    alloc::format!("{}/{}", r.numer(), r.denom())
}

/// Nearest `f64`, or NaN when out of range.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Accepts `"p"`, `"p/q"` and `"-p/q"`. The result is always reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let trimmed = s.trim();
    match Rational::from_str(trimmed) {
        Ok(r) => Ok(r),
        Err(_) => Err(Error::Parse(trimmed.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorQ {
    entries: Vec<Rational>,
}

impl VectorQ {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimension(0));
        }
        Ok(Self { entries })
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(alloc::vec![Rational::zero(); len])
    }

    /// The all-ones vector `e`.
    pub fn ones(len: usize) -> Result<Self> {
        Self::new(alloc::vec![Rational::one(); len])
    }

    /// Standard basis vector with a one at 0-based position `index`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        if index >= len {
            return Err(Error::IndexOutOfRange {
                index,
                requirement: "basis index must be below the vector length",
            });
        }
        let mut v = Self::zeros(len)?;
        v.entries[index] = Rational::one();
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.entries
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Rational> {
        self.entries.iter()
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.entries
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn dot(&self, other: &VectorQ) -> Result<Rational> {
        self.check_len("dot", other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn add(&self, other: &VectorQ) -> Result<VectorQ> {
        self.check_len("vector add", other)?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &VectorQ) -> Result<VectorQ> {
        self.check_len("vector sub", other)?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: &Rational) -> VectorQ {
        Self {
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Column matrix `len x 1`.
    pub fn to_column(&self) -> MatrixQ {
        MatrixQ {
            rows: self.len(),
            cols: 1,
            entries: self.entries.clone(),
        }
    }

    /// Row matrix `1 x len`.
    pub fn to_row(&self) -> MatrixQ {
        MatrixQ {
            rows: 1,
            cols: self.len(),
            entries: self.entries.clone(),
        }
    }

    /// Outer product `self * other'`.
    pub fn outer(&self, other: &VectorQ) -> MatrixQ {
        MatrixQ::from_fn(self.len(), other.len(), |i, j| &self.entries[i] * &other.entries[j])
            .expect("outer product of non-empty vectors")
    }

    fn check_len(&self, op: &'static str, other: &VectorQ) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.len(), 1),
                right: (other.len(), 1),
            });
        }
        Ok(())
    }
}

impl fmt::Display for VectorQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl MatrixQ {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimension(rows.min(cols)));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "matrix construction",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Rational,
    {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimension(rows.min(cols)));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds from integer rows; all rows must have the same length.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                op: "from_i64_rows",
                left: (r, c),
                right: (r, 0),
            });
        }
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| Rational::one())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diagonal(values: &[Rational]) -> Result<Self> {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> VectorQ {
        VectorQ {
            entries: self.entries[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> VectorQ {
        VectorQ {
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn row_sums(&self) -> VectorQ {
        VectorQ {
            entries: (0..self.rows)
                .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].iter().fold(Rational::zero(), |a, x| a + x))
                .collect(),
        }
    }

    pub fn transpose(&self) -> MatrixQ {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).expect("non-empty")
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn add(&self, other: &MatrixQ) -> Result<MatrixQ> {
        self.check_same("matrix add", other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &MatrixQ) -> Result<MatrixQ> {
        self.check_same("matrix sub", other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, k: &Rational) -> MatrixQ {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn mat_mul(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut entries = alloc::vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut entries[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out.iter_mut().enumerate() {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn mul_vec(&self, v: &VectorQ) -> Result<VectorQ> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok(VectorQ {
            entries: (0..self.rows)
                .map(|i| {
                    self.entries[i * self.cols..(i + 1) * self.cols]
                        .iter()
                        .zip(v.iter())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        })
    }

    /// Row vector times matrix: `v' * self`.
    pub fn vec_mul(&self, v: &VectorQ) -> Result<VectorQ> {
        if self.rows != v.len() {
            return Err(Error::DimensionMismatch {
                op: "vec_mul",
                left: (1, v.len()),
                right: self.shape(),
            });
        }
        Ok(VectorQ {
            entries: (0..self.cols)
                .map(|j| (0..self.rows).fold(Rational::zero(), |acc, i| acc + v.get(i) * self.get(i, j)))
                .collect(),
        })
    }

    /// Rows `r0..r0+h`, columns `c0..c0+w`.
    pub fn sub_block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Result<MatrixQ> {
        if r0 + h > self.rows || c0 + w > self.cols {
            return Err(Error::DimensionMismatch {
                op: "sub_block",
                left: self.shape(),
                right: (r0 + h, c0 + w),
            });
        }
        Self::from_fn(h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Splits an `n x n` matrix into the `1 + (n-1)` block layout
    /// `(top-left, top-right, bottom-left, bottom-right)`.
    pub fn split_border(&self) -> Result<(MatrixQ, MatrixQ, MatrixQ, MatrixQ)> {
        if !self.is_square() || self.rows < 2 {
            return Err(Error::BlockShape(alloc::format!(
                "cannot split a {}x{} matrix into a bordered layout",
                self.rows,
                self.cols
            )));
        }
        let m = self.rows - 1;
        Ok((
            self.sub_block(0, 0, 1, 1)?,
            self.sub_block(0, 1, 1, m)?,
            self.sub_block(1, 0, m, 1)?,
            self.sub_block(1, 1, m, m)?,
        ))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Places `self` to the left of `other`.
    pub fn hstack(&self, other: &MatrixQ) -> Result<MatrixQ> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    fn check_same(&self, op: &'static str, other: &MatrixQ) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

pub fn identity(n: usize) -> Result<MatrixQ> {
    MatrixQ::identity(n)
}

pub fn mat_mul(a: &MatrixQ, b: &MatrixQ) -> Result<MatrixQ> {
    a.mat_mul(b)
}

/// Assembles `[[tl, tr], [bl, br]]` where `tl` is `1x1`, `tr` is `1xm`, `bl`
/// is `mx1` and `br` is `mxm`.
pub fn block_compose(tl: &MatrixQ, tr: &MatrixQ, bl: &MatrixQ, br: &MatrixQ) -> Result<MatrixQ> {
    let m = br.rows();
    if tl.shape() != (1, 1) || tr.shape() != (1, m) || bl.shape() != (m, 1) || br.shape() != (m, m) {
        return Err(Error::BlockShape(alloc::format!(
            "got tl {:?}, tr {:?}, bl {:?}, br {:?}",
            tl.shape(),
            tr.shape(),
            bl.shape(),
            br.shape()
        )));
    }
    MatrixQ::from_fn(m + 1, m + 1, |i, j| match (i, j) {
        (0, 0) => tl.get(0, 0).clone(),
        (0, j) => tr.get(0, j - 1).clone(),
        (i, 0) => bl.get(i - 1, 0).clone(),
        (i, j) => br.get(i - 1, j - 1).clone(),
    })
}

/// `blockdiag(0, inner)`: the lower-right block placed inside a zero border.
pub fn border_zero(inner: &MatrixQ) -> Result<MatrixQ> {
    let m = inner.rows();
    block_compose(
        &MatrixQ::zeros(1, 1)?,
        &MatrixQ::zeros(1, m)?,
        &MatrixQ::zeros(m, 1)?,
        inner,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn small_matrix(n: usize) -> impl Strategy<Value = MatrixQ> {
        prop::collection::vec((-9i64..10, 1i64..5), n * n)
            .prop_map(move |v| MatrixQ::new(n, n, v.into_iter().map(|(p, q)| rat(p, q)).collect()).unwrap())
    }

    #[test]
    fn identity_small_cases() {
        assert_eq!(identity(1).unwrap(), MatrixQ::from_i64_rows(&[&[1]]).unwrap());
        assert_eq!(identity(2).unwrap(), MatrixQ::from_i64_rows(&[&[1, 0], &[0, 1]]).unwrap());
        let i3 = identity(3).unwrap();
        assert_eq!(i3.mat_mul(&i3).unwrap(), i3);
        assert_eq!(identity(0), Err(Error::InvalidDimension(0)));
    }

    #[test]
    fn swap_matrix_is_involution() {
        let p = MatrixQ::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(p.mat_mul(&p).unwrap(), identity(2).unwrap());
    }

    #[test]
    fn mat_mul_rejects_mismatch() {
        let a = MatrixQ::zeros(2, 3).unwrap();
        assert!(matches!(a.mat_mul(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn block_compose_forced_layout() {
        let e = VectorQ::ones(2).unwrap();
        let m = block_compose(
            &MatrixQ::zeros(1, 1).unwrap(),
            &e.to_row(),
            &e.to_column(),
            &MatrixQ::zeros(2, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(m, MatrixQ::from_i64_rows(&[&[0, 1, 1], &[1, 0, 0], &[1, 0, 0]]).unwrap());
        let (tl, tr, bl, br) = m.split_border().unwrap();
        assert_eq!(block_compose(&tl, &tr, &bl, &br).unwrap(), m);
    }

    #[test]
    fn block_compose_rejects_bad_shapes() {
        let z = MatrixQ::zeros(2, 2).unwrap();
        let r = block_compose(&z, &z, &z, &z);
        assert!(matches!(r, Err(Error::BlockShape(_))));
    }

    #[test]
    fn rational_serialization() {
        assert_eq!(format_rational(&rat(-6, 8)), "-3/4");
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_fraction(&int(0)), "0/1");
        assert_eq!(format_fraction(&rat(2, -4)), "-1/2");
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn vector_basics() {
        let v = VectorQ::from_i64s(&[1, 2, 3]).unwrap();
        assert_eq!(v.sum(), int(6));
        assert_eq!(v.dot(&v).unwrap(), int(14));
        assert!(VectorQ::new(vec![]).is_err());
        assert_eq!(VectorQ::unit(3, 1).unwrap(), VectorQ::from_i64s(&[0, 1, 0]).unwrap());
    }

    proptest! {
        #[test]
        fn rational_reduced_and_inverse(p in -1000i64..1000, q in 1i64..1000) {
            let r = rat(p, q);
            prop_assert!(r.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()) == BigInt::one() || r.is_zero());
            prop_assert!((&r + (-&r)).is_zero());
            if !r.is_zero() {
                prop_assert_eq!(&r * r.recip(), Rational::one());
            }
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r.clone());
            prop_assert_eq!(parse_rational(&format_fraction(&r)).unwrap(), r);
        }

        #[test]
        fn identity_law(a in small_matrix(3)) {
            prop_assert_eq!(identity(3).unwrap().mat_mul(&a).unwrap(), a.clone());
            prop_assert_eq!(a.mat_mul(&identity(3).unwrap()).unwrap(), a);
        }

        #[test]
        fn associativity(a in small_matrix(4), b in small_matrix(4), c in small_matrix(4)) {
            let left = a.mat_mul(&b).unwrap().mat_mul(&c).unwrap();
            let right = a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn distributes_over_addition(a in small_matrix(3), b in small_matrix(3), c in small_matrix(3)) {
            let left = a.mat_mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mat_mul(&b).unwrap().add(&a.mat_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn transpose_of_product(a in small_matrix(3), b in small_matrix(3)) {
            let left = a.mat_mul(&b).unwrap().transpose();
            let right = b.transpose().mat_mul(&a.transpose()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
