//! Circulant matrices stored by their first row, tridiagonal builders, and the
//! defining vectors of the circulant blocks that appear in the inverse and
//! Moore-Penrose formulas.
//!
//! `cir(c)` has row `i` equal to `c` cyclically shifted right `i` times, so
//! entry `(i, j)` is `c[(j - i) mod m]`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratq::{int, rat, MatrixQ, Rational, VectorQ};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantQ {
    first_row: VectorQ,
}

impl CirculantQ {
    pub fn new(first_row: VectorQ) -> Self {
        Self { first_row }
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Ok(Self::new(VectorQ::from_i64s(values)?))
    }

    pub fn identity(order: usize) -> Result<Self> {
        Ok(Self::new(VectorQ::unit(order, 0)?))
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &VectorQ {
        &self.first_row
    }

    /// Entry `(i, j)` without expanding the matrix.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        let m = self.order();
        self.first_row.get((j + m - i % m) % m)
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> VectorQ {
        let m = self.order();
        VectorQ::new((0..m).map(|i| self.entry(i, j).clone()).collect()).expect("order >= 1")
    }

    pub fn to_dense(&self) -> MatrixQ {
        let m = self.order();
        let rows: Vec<VectorQ> = (0..m).map(|i| shift_t(&self.first_row, i)).collect();
        MatrixQ::from_fn(m, m, |i, j| rows[i].get(j).clone()).expect("order >= 1")
    }

    pub fn add(&self, other: &CirculantQ) -> Result<CirculantQ> {
        Ok(Self::new(self.first_row.add(&other.first_row)?))
    }

    pub fn sub(&self, other: &CirculantQ) -> Result<CirculantQ> {
        Ok(Self::new(self.first_row.sub(&other.first_row)?))
    }

    pub fn scale(&self, k: &Rational) -> CirculantQ {
        Self::new(self.first_row.scale(k))
    }

    /// Row sum, shared by every row.
    pub fn row_sum(&self) -> Rational {
        self.first_row.sum()
    }

    pub fn mul_vec(&self, v: &VectorQ) -> Result<VectorQ> {
        let m = self.order();
        if v.len() != m {
            return Err(Error::DimensionMismatch {
                op: "circulant mul_vec",
                left: (m, m),
                right: (v.len(), 1),
            });
        }
        VectorQ::new(
            (0..m)
                .map(|i| (0..m).fold(Rational::zero(), |acc, j| acc + self.entry(i, j) * v.get(j)))
                .collect(),
        )
    }

    /// Row vector times circulant: `v' * self`.
    pub fn vec_mul(&self, v: &VectorQ) -> Result<VectorQ> {
        let m = self.order();
        if v.len() != m {
            return Err(Error::DimensionMismatch {
                op: "circulant vec_mul",
                left: (1, v.len()),
                right: (m, m),
            });
        }
        VectorQ::new(
            (0..m)
                .map(|j| (0..m).fold(Rational::zero(), |acc, i| acc + v.get(i) * self.entry(i, j)))
                .collect(),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric_in_last_coords(&self.first_row)
    }
}

/// Cyclic right shift applied `k` times: `(f_1, ..., f_m) -> (f_m, f_1, ..., f_{m-1})`.
pub fn shift_t(v: &VectorQ, k: usize) -> VectorQ {
    let m = v.len();
    let k = k % m;
    VectorQ::new((0..m).map(|i| v.get((i + m - k) % m).clone()).collect()).expect("non-empty")
}

pub fn to_dense(c: &CirculantQ) -> MatrixQ {
    c.to_dense()
}

/// Product of two circulants as `cir(x' * Y)`; only the first row of the
/// product is computed.
pub fn circ_mul(x: &CirculantQ, y: &CirculantQ) -> Result<CirculantQ> {
    if x.order() != y.order() {
        return Err(Error::DimensionMismatch {
            op: "circ_mul",
            left: (x.order(), x.order()),
            right: (y.order(), y.order()),
        });
    }
    Ok(CirculantQ::new(y.vec_mul(x.first_row())?))
}

/// For a period-3 row vector `g`, `g' * C` repeats `(tau1, tau2, tau3)`.
/// Returns the three values computed from the first column of `C` only.
pub fn period3_row_product(g: &VectorQ, c: &CirculantQ) -> Result<(Rational, Rational, Rational)> {
    let m = c.order();
    if m % 3 != 0 {
        return Err(Error::OutOfRange {
            n: m,
            requirement: "circulant order must be divisible by 3",
        });
    }
    if g.len() != m {
        return Err(Error::DimensionMismatch {
            op: "period3_row_product",
            left: (1, g.len()),
            right: (m, m),
        });
    }
    if (3..m).any(|i| g.get(i) != g.get(i - 3)) {
        return Err(Error::NotPeriodic);
    }
    let first_col = c.column(0);
    let tau1 = g.dot(&first_col)?;
    let tau2 = shift_t(g, 2).dot(&first_col)?;
    let tau3 = shift_t(g, 1).dot(&first_col)?;
    Ok((tau1, tau2, tau3))
}

/// `x_i = x_{m+2-i}` for `i = 2..m` (1-based): the tail after the first
/// coordinate reads the same backwards.
pub fn is_symmetric_in_last_coords(x: &VectorQ) -> bool {
    let m = x.len();
    (1..m).all(|k| x.get(k) == x.get(m - k))
}

/// Largest admissible `k` for `basis_c(k, n)`.
pub fn basis_c_max(n: usize) -> usize {
    if n % 2 == 0 {
        n.saturating_sub(2) / 2
    } else {
        n.saturating_sub(3) / 2
    }
}

/// `c_k = e_{k+1} + e_{n-k}` in dimension `n - 1` (1-based positions).
pub fn basis_c(k: usize, n: usize) -> Result<VectorQ> {
    if n < 4 {
        return Err(Error::OutOfRange {
            n,
            requirement: "basis vectors c_k are defined for n >= 4",
        });
    }
    if k == 0 || k > basis_c_max(n) {
        return Err(Error::IndexOutOfRange {
            index: k,
            requirement: "1 <= k <= (n-2)/2 for even n, (n-3)/2 for odd n",
        });
    }
    let mut entries = alloc::vec![Rational::zero(); n - 1];
    entries[k] = Rational::one();
    entries[n - 1 - k] = Rational::one();
    VectorQ::new(entries)
}

/// Standard basis vector `e_i` of dimension `n - 1`, 1-based `i`.
fn basis_e(i: usize, n: usize) -> VectorQ {
    VectorQ::unit(n - 1, i - 1).expect("basis index within dimension")
}

fn require_class(n: usize, residue: usize, min: usize, requirement: &'static str) -> Result<()> {
    if n % 3 != residue {
        return Err(Error::ResidueClass { n, requirement });
    }
    if n < min {
        return Err(Error::OutOfRange { n, requirement });
    }
    Ok(())
}

/// Accumulates `sum coeff * v` over the listed terms.
fn combine(n: usize, terms: &[(Rational, VectorQ)]) -> VectorQ {
    terms
        .iter()
        .fold(VectorQ::zeros(n - 1).expect("n >= 2"), |acc, (k, v)| {
            acc.add(&v.scale(k)).expect("equal dimensions")
        })
}

/// The closed pattern `(2-n, 1,-2,1, ..., 1,-2,1)` of length `n - 1`.
///
/// For `n >= 8` the summation form over the `c_k` is also evaluated and must
/// agree.
pub fn special_x(n: usize) -> Result<VectorQ> {
    require_class(n, 2, 5, "requires n = 2 mod 3 and n >= 5")?;
    let mut entries = Vec::with_capacity(n - 1);
    entries.push(int(2 - n as i64));
    for _ in 0..(n - 2) / 3 {
        entries.extend([int(1), int(-2), int(1)]);
    }
    let x = VectorQ::new(entries)?;
    if n >= 8 {
        assert_eq!(x, special_x_summation(n)?, "closed and summed x-bar disagree at n = {n}");
    }
    Ok(x)
}

/// Summation form of `x-bar`: separate expressions for even and odd `n`.
pub fn special_x_summation(n: usize) -> Result<VectorQ> {
    require_class(n, 2, 5, "requires n = 2 mod 3 and n >= 5")?;
    let mut terms = alloc::vec![(int(2 - n as i64), basis_e(1, n))];
    if n % 2 == 0 {
        for k in 1..=(n - 2) / 6 {
            terms.push((int(1), basis_c(3 * k - 2, n)?));
            terms.push((int(-2), basis_c(3 * k - 1, n)?));
            terms.push((int(1), basis_c(3 * k, n)?));
        }
    } else {
        for k in 1..=(n - 5) / 6 {
            terms.push((int(1), basis_c(3 * k, n)?));
            terms.push((int(-2), basis_c(3 * k - 1, n)?));
        }
        for k in 1..=(n + 1) / 6 {
            terms.push((int(1), basis_c(3 * k - 2, n)?));
        }
        terms.push((int(-2), basis_e((n + 1) / 2, n)));
    }
    Ok(combine(n, &terms))
}

/// The closed pattern `(-n, 2,-1,-1, ..., 2,-1,-1, 2)` of length `n - 1`.
///
/// For `n >= 9` the summation form is also evaluated and must agree.
pub fn special_y(n: usize) -> Result<VectorQ> {
    require_class(n, 0, 6, "requires n = 0 mod 3 and n >= 6")?;
    let mut entries = Vec::with_capacity(n - 1);
    entries.push(-int(n as i64));
    for _ in 0..(n - 3) / 3 {
        entries.extend([int(2), int(-1), int(-1)]);
    }
    entries.push(int(2));
    let y = VectorQ::new(entries)?;
    if n >= 8 {
        assert_eq!(y, special_y_summation(n)?, "closed and summed y-bar disagree at n = {n}");
    }
    Ok(y)
}

/// Summation form of `y-bar`.
pub fn special_y_summation(n: usize) -> Result<VectorQ> {
    require_class(n, 0, 6, "requires n = 0 mod 3 and n >= 6")?;
    let mut terms = alloc::vec![(-int(n as i64), basis_e(1, n))];
    if n % 2 == 0 {
        for k in 1..=n / 6 {
            terms.push((int(2), basis_c(3 * k - 2, n)?));
            terms.push((int(-1), basis_c(3 * k - 1, n)?));
        }
        for k in 1..n / 6 {
            terms.push((int(-1), basis_c(3 * k, n)?));
        }
    } else {
        for k in 1..=(n - 3) / 6 {
            terms.push((int(2), basis_c(3 * k - 2, n)?));
            terms.push((int(-1), basis_c(3 * k - 1, n)?));
            terms.push((int(-1), basis_c(3 * k, n)?));
        }
        terms.push((int(2), basis_e((n + 1) / 2, n)));
    }
    Ok(combine(n, &terms))
}

/// Defining vector of the circulant block of `L-hat` before the
/// `1/(3(n-1))` scaling; the construction depends on the parity of `n`.
pub fn special_z(n: usize) -> Result<VectorQ> {
    require_class(n, 1, 7, "requires n = 1 mod 3 and n >= 7")?;
    let ni = n as i64;
    let mut terms = alloc::vec![(int(2 * ni - ni * ni), basis_e(1, n))];
    let lead = |k: usize| rat(3 * ni - 18 * k as i64 + 8, 2);
    let next = |k: usize| -rat(3 * ni - 18 * k as i64 + 4, 2);
    if n % 2 == 0 {
        for k in 1..=(n - 4) / 6 {
            terms.push((lead(k), basis_c(3 * k - 2, n)?));
            terms.push((next(k), basis_c(3 * k - 1, n)?));
            terms.push((int(1), basis_c(3 * k, n)?));
        }
        terms.push((int(1), basis_c(n / 2 - 1, n)?));
    } else {
        for k in 1..=(n - 1) / 6 {
            terms.push((lead(k), basis_c(3 * k - 2, n)?));
            terms.push((next(k), basis_c(3 * k - 1, n)?));
        }
        for k in 1..=(n - 7) / 6 {
            terms.push((int(1), basis_c(3 * k, n)?));
        }
        terms.push((int(1), basis_e((n + 1) / 2, n)));
    }
    Ok(combine(n, &terms))
}

/// `u = (0, 0, 2, ..., 2, 0)`: first row of the rim block of `E(W_n)`.
pub fn ecc_rim_vector(n: usize) -> Result<VectorQ> {
    let m = rim_order(n)?;
    VectorQ::new((0..m).map(|k| if k <= 1 || k == m - 1 { int(0) } else { int(2) }).collect())
}

/// `d = (0, 1, 2, ..., 2, 1)`: first row of the rim block of `D(W_n)`.
pub fn distance_rim_vector(n: usize) -> Result<VectorQ> {
    let m = rim_order(n)?;
    VectorQ::new(
        (0..m)
            .map(|k| match k {
                0 => int(0),
                1 => int(1),
                k if k == m - 1 => int(1),
                _ => int(2),
            })
            .collect(),
    )
}

/// `u-bar = (1, 1, 0, ..., 0, 1)`: the cycle adjacency plus identity.
pub fn cycle_closure_vector(n: usize) -> Result<VectorQ> {
    let m = rim_order(n)?;
    VectorQ::new((0..m).map(|k| if k <= 1 || k == m - 1 { int(1) } else { int(0) }).collect())
}

/// `v-tilde = (2, -1, -1, 2, -1, -1, ...)` of length `n - 1`.
pub fn triple_vector(n: usize) -> Result<VectorQ> {
    let m = rim_order(n)?;
    VectorQ::new((0..m).map(|k| if k % 3 == 0 { int(2) } else { int(-1) }).collect())
}

fn rim_order(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::OutOfRange {
            n,
            requirement: "rim vectors need n >= 4",
        });
    }
    Ok(n - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagSpec {
    pub order: usize,
    /// diagonal
    pub a: Rational,
    /// superdiagonal
    pub b: Rational,
    /// subdiagonal
    pub c: Rational,
}

impl TridiagSpec {
    pub fn new(order: usize, a: Rational, b: Rational, c: Rational) -> Self {
        Self { order, a, b, c }
    }

    pub fn constant(order: usize, a: i64, b: i64, c: i64) -> Self {
        Self::new(order, int(a), int(b), int(c))
    }
}

pub fn tridiagonal(spec: &TridiagSpec) -> Result<MatrixQ> {
    MatrixQ::from_fn(spec.order, spec.order, |i, j| {
        if i == j {
            spec.a.clone()
        } else if j == i + 1 {
            spec.b.clone()
        } else if i == j + 1 {
            spec.c.clone()
        } else {
            Rational::zero()
        }
    })
}
