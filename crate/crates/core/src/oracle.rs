//! Definitional verifiers. Nothing here calls into `closedform` except to
//! fetch the matrix under test in [`rank_certificate_check`]; every answer is
//! computed from the dense entries alone.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::circulant::CirculantQ;
use crate::closedform::{laplacian_hat, InertiaTriple};
use crate::error::{Error, Result};
use crate::graphs::wheel_ecc_definitional;
use crate::ratq::{int, rat, to_f64, MatrixQ, Rational, VectorQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PivotKind {
    Positive,
    Negative,
    /// A 2x2 block `[[0, b], [b, 0]]`, contributing one positive and one
    /// negative eigenvalue.
    Hyperbolic,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub inertia: InertiaTriple,
    pub pivot_log: Vec<PivotKind>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PenroseReport {
    /// `A X A = A`
    pub axa: bool,
    /// `X A X = X`
    pub xax: bool,
    /// `(A X)' = A X`
    pub ax_symmetric: bool,
    /// `(X A)' = X A`
    pub xa_symmetric: bool,
}

impl PenroseReport {
    pub fn all(&self) -> bool {
        self.axa && self.xax && self.ax_symmetric && self.xa_symmetric
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificateReport {
    pub n: usize,
    pub product_matches: bool,
    pub rank_c: usize,
}

impl RankCertificateReport {
    pub fn holds(&self) -> bool {
        self.product_matches && self.rank_c == self.n - 3
    }
}

fn to_rows(m: &MatrixQ) -> Vec<Vec<Rational>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

fn require_square(m: &MatrixQ) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.rows())
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// The matrix is first scaled to integers by the least common multiple of its
/// denominators; the integer determinant is divided back out at the end.
pub fn bareiss_det(m: &MatrixQ) -> Result<Rational> {
    let n = require_square(m)?;
    let lcm = m
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = m.get(i, j);
                    x.numer() * (&lcm / x.denom())
                })
                .collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if negate { -prev } else { prev };
    let scale = num_traits::pow(lcm, n);
    Ok(Rational::new(det, scale))
}

/// Rank over the rationals by row reduction.
pub fn rank_exact(m: &MatrixQ) -> usize {
    let mut a = to_rows(m);
    let (rows, cols) = m.shape();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for j in c..cols {
                let delta = &f * &a[rank][j];
                a[r][j] -= delta;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Gauss-Jordan inverse.
pub fn inverse_exact(m: &MatrixQ) -> Result<MatrixQ> {
    let n = require_square(m)?;
    let mut a = to_rows(m);
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(p, c);
        inv.swap(p, c);
        let pivot_inv = a[c][c].recip();
        for j in 0..n {
            a[c][j] *= &pivot_inv;
            inv[c][j] *= &pivot_inv;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..n {
                let da = &f * &a[c][j];
                a[r][j] -= da;
                let di = &f * &inv[c][j];
                inv[r][j] -= di;
            }
        }
    }
    MatrixQ::from_fn(n, n, |i, j| inv[i][j].clone())
}

/// Inertia by symmetric congruence.
///
/// A nonzero diagonal entry is used as a 1x1 pivot when one exists. Otherwise
/// any nonzero off-diagonal `a_ij` gives the 2x2 pivot `[[0, a_ij], [a_ij, 0]]`.
/// Whatever is left once the active block vanishes counts as zero.
pub fn inertia_exact(m: &MatrixQ) -> Result<CongruenceReport> {
    let n = require_square(m)?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a = to_rows(m);
    let mut active: Vec<usize> = (0..n).collect();
    let mut log = Vec::with_capacity(n);
    let (mut plus, mut minus) = (0usize, 0usize);

    loop {
        if let Some(pos) = active.iter().position(|&k| !a[k][k].is_zero()) {
            let k = active.remove(pos);
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                plus += 1;
                log.push(PivotKind::Positive);
            } else {
                minus += 1;
                log.push(PivotKind::Negative);
            }
            for &r in &active {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &pivot;
                for &s in &active {
                    let delta = &f * &a[k][s];
                    a[r][s] -= delta;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            break;
        };
        active.retain(|&k| k != i && k != j);
        plus += 1;
        minus += 1;
        log.push(PivotKind::Hyperbolic);
        let b = a[i][j].clone();
        let ri: Vec<Rational> = active.iter().map(|&r| a[r][i].clone()).collect();
        let rj: Vec<Rational> = active.iter().map(|&r| a[r][j].clone()).collect();
        for (x, &r) in active.iter().enumerate() {
            for (y, &s) in active.iter().enumerate() {
                let delta = (&ri[x] * &rj[y] + &rj[x] * &ri[y]) / &b;
                a[r][s] -= delta;
            }
        }
    }
    let zero = active.len();
    log.extend(core::iter::repeat_n(PivotKind::Zero, zero));
    Ok(CongruenceReport {
        inertia: InertiaTriple::new(plus, minus, zero),
        pivot_log: log,
    })
}

/// Evaluates the four Penrose conditions for `x` against `e`.
pub fn penrose_check(e: &MatrixQ, x: &MatrixQ) -> Result<PenroseReport> {
    if e.rows() != x.cols() || e.cols() != x.rows() {
        return Err(Error::DimensionMismatch {
            op: "penrose_check",
            left: e.shape(),
            right: x.shape(),
        });
    }
    let ex = e.mat_mul(x)?;
    let xe = x.mat_mul(e)?;
    Ok(PenroseReport {
        axa: ex.mat_mul(e)? == *e,
        xax: xe.mat_mul(x)? == *x,
        ax_symmetric: ex.is_symmetric(),
        xa_symmetric: xe.is_symmetric(),
    })
}

fn require_nonnegative(m: &MatrixQ) -> Result<usize> {
    let n = require_square(m)?;
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j).is_negative() {
                return Err(Error::NegativeEntry(i, j));
            }
        }
    }
    Ok(n)
}

/// Largest order for which [`is_irreducible`] also evaluates `(I + A)^(n-1)`.
pub const LITERAL_IRREDUCIBILITY_MAX_ORDER: usize = 12;

/// Irreducibility of a non-negative matrix as strong connectivity of its
/// off-diagonal support. For orders up to
/// [`LITERAL_IRREDUCIBILITY_MAX_ORDER`] the literal power test is also run and
/// must agree.
pub fn is_irreducible(m: &MatrixQ) -> Result<bool> {
    let n = require_nonnegative(m)?;
    let forward = reaches_all(n, |i, j| i != j && !m.get(i, j).is_zero());
    let connected = forward && reaches_all(n, |i, j| i != j && !m.get(j, i).is_zero());
    if n <= LITERAL_IRREDUCIBILITY_MAX_ORDER {
        let literal = is_irreducible_literal(m)?;
        assert_eq!(
            connected, literal,
            "strong connectivity and (I + A)^(n-1) > 0 disagree"
        );
    }
    Ok(connected)
}

fn reaches_all(n: usize, edge: impl Fn(usize, usize) -> bool) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && edge(i, j) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `(I + A)^(n-1)` is entrywise positive.
pub fn is_irreducible_literal(m: &MatrixQ) -> Result<bool> {
    let n = require_nonnegative(m)?;
    let base = MatrixQ::identity(n)?.add(m)?;
    let mut power = MatrixQ::identity(n)?;
    for _ in 1..n {
        power = power.mat_mul(&base)?;
    }
    Ok(power.entries().iter().all(Signed::is_positive))
}

/// Spectral radius of a non-negative irreducible matrix by power iteration
/// from the all-ones vector, stopping once the relative change of the
/// estimate drops below `tol`.
pub fn power_iteration_rho(m: &MatrixQ, tol: f64, max_iters: usize) -> Result<f64> {
    let n = require_nonnegative(m)?;
    let a: Vec<f64> = m
        .entries()
        .iter()
        .map(to_f64)
        .collect();
    let mut v = vec![1.0f64; n];
    let mut rho = 0.0f64;
    for _ in 0..max_iters {
        let y: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum())
            .collect();
        let norm = y.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        if norm == 0.0 {
            return Ok(0.0);
        }
        let next = norm / v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        v = y.into_iter().map(|x| x / norm).collect();
        let change = (next - rho).abs();
        rho = next;
        if change <= tol * rho.abs() {
            return Ok(rho);
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iters,
        last: rho,
    })
}

fn cert_row(n: usize, slot: usize) -> Result<VectorQ> {
    let len = n - 3;
    VectorQ::new(
        (0..len)
            .map(|k| match k {
                0 => int(-1),
                _ if (k - 1) % 3 == slot => int(-3),
                _ => Rational::zero(),
            })
            .collect(),
    )
}

/// The rows `p'`, `q'`, `r'` of the certificate matrix `C`.
pub fn certificate_rows(n: usize) -> Result<(VectorQ, VectorQ, VectorQ)> {
    require_certificate_n(n)?;
    Ok((cert_row(n, 0)?, cert_row(n, 1)?, cert_row(n, 2)?))
}

fn require_certificate_n(n: usize) -> Result<()> {
    if n % 3 != 1 {
        return Err(Error::ResidueClass {
            n,
            requirement: "the rank certificate requires n = 1 mod 3",
        });
    }
    if n < 10 {
        return Err(Error::OutOfRange {
            n,
            requirement: "the rank certificate requires n >= 10",
        });
    }
    Ok(())
}

/// `S = cir(s)` with `s = (-2,0,0, -1,0,0, ..., -1,0,0)` of length `n - 4`.
pub fn certificate_s(n: usize) -> Result<CirculantQ> {
    require_certificate_n(n)?;
    let s = (0..n - 4)
        .map(|k| match k {
            0 => int(-2),
            _ if k % 3 == 0 => int(-1),
            _ => Rational::zero(),
        })
        .collect();
    Ok(CirculantQ::new(VectorQ::new(s)?))
}

/// The `n x (n-3)` matrix `X` of the certificate.
pub fn certificate_x(n: usize) -> Result<MatrixQ> {
    let s = certificate_s(n)?;
    let half = rat(1, 2);
    let corner = int(n as i64 - 10);
    let top = int(n as i64 - 7);
    MatrixQ::from_fn(n, n - 3, |i, j| {
        let raw = match (i, j) {
            (0, 0) => corner.clone(),
            (0, _) => top.clone(),
            (i, 0) if i <= n - 4 => int(-1),
            (i, j) if i <= n - 4 => s.entry(i - 1, j - 1) * int(3),
            _ => Rational::zero(),
        };
        raw * &half
    })
}

/// The `n x (n-3)` matrix `C = [3I; p'; q'; r']`.
pub fn certificate_c(n: usize) -> Result<MatrixQ> {
    let (p, q, r) = certificate_rows(n)?;
    MatrixQ::from_fn(n, n - 3, |i, j| match i {
        i if i < n - 3 => {
            if i == j {
                int(3)
            } else {
                Rational::zero()
            }
        }
        i if i == n - 3 => p.get(j).clone(),
        i if i == n - 2 => q.get(j).clone(),
        _ => r.get(j).clone(),
    })
}

/// Checks `L_hat * E * X = C` against the definitional `E(W_n)` and computes
/// `rank(C)`.
pub fn rank_certificate_check(n: usize) -> Result<RankCertificateReport> {
    require_certificate_n(n)?;
    let e = wheel_ecc_definitional(n)?;
    let lhs = laplacian_hat(n)?.mat_mul(&e)?.mat_mul(&certificate_x(n)?)?;
    let c = certificate_c(n)?;
    Ok(RankCertificateReport {
        n,
        product_matches: lhs == c,
        rank_c: rank_exact(&c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{
        bordered_matrix, ecc_matrix_wheel, inertia_e_closed, pinv_e_closed,
    };
    use proptest::prelude::*;

    fn cofactor_det(m: &MatrixQ) -> Rational {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        (0..n).fold(Rational::zero(), |acc, j| {
            if m.get(0, j).is_zero() {
                return acc;
            }
            let minor = MatrixQ::from_fn(n - 1, n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            })
            .unwrap();
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }

    fn diag(values: &[i64]) -> MatrixQ {
        let v: Vec<Rational> = values.iter().map(|&x| int(x)).collect();
        MatrixQ::diagonal(&v).unwrap()
    }

    #[test]
    fn bareiss_basics() {
        assert_eq!(bareiss_det(&MatrixQ::identity(5).unwrap()).unwrap(), int(1));
        assert_eq!(bareiss_det(&ecc_matrix_wheel(6).unwrap()).unwrap(), int(-80));
        assert_eq!(bareiss_det(&bordered_matrix(4).unwrap()).unwrap(), int(4));
        assert!(matches!(
            bareiss_det(&MatrixQ::zeros(2, 3).unwrap()),
            Err(Error::NotSquare { .. })
        ));
        let m = MatrixQ::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(bareiss_det(&m).unwrap(), int(-1));
        let half = MatrixQ::diagonal(&[rat(1, 2), rat(2, 3)]).unwrap();
        assert_eq!(bareiss_det(&half).unwrap(), rat(1, 3));
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank_exact(&MatrixQ::zeros(4, 4).unwrap()), 0);
        assert_eq!(rank_exact(&ecc_matrix_wheel(7).unwrap()), 5);
        assert_eq!(rank_exact(&laplacian_hat(7).unwrap()), 4);
        assert_eq!(rank_exact(&MatrixQ::ones(3, 5).unwrap()), 1);
    }

    #[test]
    fn inverse_basics() {
        let i = MatrixQ::identity(4).unwrap();
        assert_eq!(inverse_exact(&i).unwrap(), i);
        assert!(matches!(
            inverse_exact(&ecc_matrix_wheel(7).unwrap()),
            Err(Error::Singular)
        ));
        assert!(matches!(
            inverse_exact(&MatrixQ::zeros(2, 3).unwrap()),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn inertia_basics() {
        let r = inertia_exact(&diag(&[3, -2, 0])).unwrap();
        assert_eq!(r.inertia, InertiaTriple::new(1, 1, 1));
        let h = inertia_exact(&MatrixQ::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap()).unwrap();
        assert_eq!(h.inertia, InertiaTriple::new(1, 1, 0));
        assert_eq!(h.pivot_log, vec![PivotKind::Hyperbolic]);
        let e7 = inertia_exact(&ecc_matrix_wheel(7).unwrap()).unwrap();
        assert_eq!(e7.inertia, InertiaTriple::new(2, 3, 2));
        assert_eq!(e7.inertia, inertia_e_closed(7).unwrap());
        let bad = MatrixQ::from_i64_rows(&[&[0, 1], &[2, 0]]).unwrap();
        assert!(matches!(inertia_exact(&bad), Err(Error::NotSymmetric)));
    }

    #[test]
    fn pivot_log_reproduces_inertia() {
        for n in 5..16 {
            let r = inertia_exact(&ecc_matrix_wheel(n).unwrap()).unwrap();
            let count = |k| r.pivot_log.iter().filter(|&&p| p == k).count();
            let hyp = count(PivotKind::Hyperbolic);
            assert_eq!(r.inertia.n_plus, count(PivotKind::Positive) + hyp);
            assert_eq!(r.inertia.n_minus, count(PivotKind::Negative) + hyp);
            assert_eq!(r.inertia.n_zero, count(PivotKind::Zero));
        }
    }

    #[test]
    fn penrose_basics() {
        let i = MatrixQ::identity(3).unwrap();
        assert!(penrose_check(&i, &i).unwrap().all());
        let e = ecc_matrix_wheel(7).unwrap();
        assert!(penrose_check(&e, &pinv_e_closed(7).unwrap()).unwrap().all());
        let lhat = laplacian_hat(7).unwrap().scale(&rat(-1, 2));
        let r = penrose_check(&e, &lhat).unwrap();
        assert!(!r.axa);
        assert!(!r.all());
        assert!(penrose_check(&e, &MatrixQ::zeros(6, 7).unwrap()).is_err());
    }

    #[test]
    fn irreducibility_basics() {
        for n in 5..=20 {
            assert!(is_irreducible(&ecc_matrix_wheel(n).unwrap()).unwrap());
        }
        assert!(!is_irreducible(&MatrixQ::identity(3).unwrap()).unwrap());
        let two = MatrixQ::from_i64_rows(&[
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
        ])
        .unwrap();
        assert!(!is_irreducible(&two).unwrap());
        let directed = MatrixQ::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).unwrap();
        assert!(!is_irreducible(&directed).unwrap());
        let cycle = MatrixQ::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
        assert!(is_irreducible(&cycle).unwrap());
        let neg = MatrixQ::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap();
        assert!(matches!(is_irreducible(&neg), Err(Error::NegativeEntry(0, 1))));
    }

    #[test]
    fn power_iteration_basics() {
        let j3 = MatrixQ::ones(3, 3).unwrap();
        assert!((power_iteration_rho(&j3, 1e-12, 1000).unwrap() - 3.0).abs() < 1e-12);
        let e5 = ecc_matrix_wheel(5).unwrap();
        let rho = power_iteration_rho(&e5, 1e-12, 10_000).unwrap();
        assert!((rho - (1.0 + libm::sqrt(5.0))).abs() < 1e-8);
        let e20 = ecc_matrix_wheel(20).unwrap();
        let rho = power_iteration_rho(&e20, 1e-12, 10_000).unwrap();
        assert!((rho - (16.0 + libm::sqrt(275.0))).abs() < 1e-8);
        let rot = MatrixQ::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let start_is_eigenvector = power_iteration_rho(&rot, 1e-12, 10).unwrap();
        assert!((start_is_eigenvector - 1.0).abs() < 1e-12);
        let osc = MatrixQ::from_i64_rows(&[&[0, 2], &[1, 0]]).unwrap();
        assert!(matches!(
            power_iteration_rho(&osc, 1e-12, 50),
            Err(Error::NoConvergence { iterations: 50, .. })
        ));
    }

    #[test]
    fn certificate_rows_pattern() {
        let (p, q, r) = certificate_rows(13).unwrap();
        assert_eq!(p, VectorQ::from_i64s(&[-1, -3, 0, 0, -3, 0, 0, -3, 0, 0]).unwrap());
        assert_eq!(q, VectorQ::from_i64s(&[-1, 0, -3, 0, 0, -3, 0, 0, -3, 0]).unwrap());
        assert_eq!(r, VectorQ::from_i64s(&[-1, 0, 0, -3, 0, 0, -3, 0, 0, -3]).unwrap());
        assert_eq!(
            certificate_s(13).unwrap().first_row(),
            &VectorQ::from_i64s(&[-2, 0, 0, -1, 0, 0, -1, 0, 0]).unwrap()
        );
    }

    #[test]
    fn rank_certificate() {
        let r10 = rank_certificate_check(10).unwrap();
        assert!(r10.product_matches);
        assert!(r10.holds());
        let r13 = rank_certificate_check(13).unwrap();
        assert!(r13.holds());
        assert_eq!(r13.rank_c, 10);
        assert!(matches!(rank_certificate_check(7), Err(Error::OutOfRange { .. })));
        assert!(matches!(rank_certificate_check(11), Err(Error::ResidueClass { .. })));
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = MatrixQ> {
        (1..=max).prop_flat_map(|n| {
            prop::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
                MatrixQ::from_fn(n, n, |i, j| int(v[i * n + j])).unwrap()
            })
        })
    }

    fn symmetric_matrix(max: usize) -> impl Strategy<Value = MatrixQ> {
        (1..=max).prop_flat_map(|n| {
            prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                MatrixQ::from_fn(n, n, |i, j| {
                    let (a, b) = if i <= j { (i, j) } else { (j, i) };
                    int(v[a * n + b])
                })
                .unwrap()
            })
        })
    }

    /// `G = L U` with unit lower `L` and upper `U` with nonzero diagonal is
    /// nonsingular by construction.
    fn nonsingular(n: usize) -> impl Strategy<Value = MatrixQ> {
        (
            prop::collection::vec(-3i64..=3, n * n),
            prop::collection::vec(-3i64..=3, n * n),
            prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], n),
        )
            .prop_map(move |(l, u, d)| {
                let lower = MatrixQ::from_fn(n, n, |i, j| match i.cmp(&j) {
                    core::cmp::Ordering::Greater => int(l[i * n + j]),
                    core::cmp::Ordering::Equal => int(1),
                    core::cmp::Ordering::Less => Rational::zero(),
                })
                .unwrap();
                let upper = MatrixQ::from_fn(n, n, |i, j| match i.cmp(&j) {
                    core::cmp::Ordering::Less => rat(u[i * n + j], 2),
                    core::cmp::Ordering::Equal => int(d[i]),
                    core::cmp::Ordering::Greater => Rational::zero(),
                })
                .unwrap();
                lower.mat_mul(&upper).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn bareiss_matches_cofactor(m in small_matrix(5)) {
            prop_assert_eq!(bareiss_det(&m).unwrap(), cofactor_det(&m));
        }

        #[test]
        fn sylvester_invariance(
            (a, g) in (1usize..=6).prop_flat_map(|n| (symmetric_matrix_of(n), nonsingular(n)))
        ) {
            let congruent = g.transpose().mat_mul(&a).unwrap().mat_mul(&g).unwrap();
            prop_assert_eq!(
                inertia_exact(&congruent).unwrap().inertia,
                inertia_exact(&a).unwrap().inertia
            );
        }

        #[test]
        fn inverse_times_matrix_is_identity(m in small_matrix(5)) {
            match inverse_exact(&m) {
                Ok(inv) => {
                    let id = MatrixQ::identity(m.rows()).unwrap();
                    prop_assert_eq!(inv.mat_mul(&m).unwrap(), id.clone());
                    prop_assert_eq!(m.mat_mul(&inv).unwrap(), id);
                }
                Err(Error::Singular) => prop_assert!(bareiss_det(&m).unwrap().is_zero()),
                Err(e) => prop_assert!(false, "unexpected error {e:?}"),
            }
        }

        #[test]
        fn rank_agrees_with_determinant(m in small_matrix(5)) {
            let full = rank_exact(&m) == m.rows();
            prop_assert_eq!(full, !bareiss_det(&m).unwrap().is_zero());
        }

        #[test]
        fn inertia_counts_rank(m in symmetric_matrix(6)) {
            let t = inertia_exact(&m).unwrap().inertia;
            prop_assert_eq!(t.order(), m.rows());
            prop_assert_eq!(t.rank(), rank_exact(&m));
        }
    }

    fn symmetric_matrix_of(n: usize) -> impl Strategy<Value = MatrixQ> {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            MatrixQ::from_fn(n, n, |i, j| {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                int(v[a * n + b])
            })
            .unwrap()
        })
    }
}
