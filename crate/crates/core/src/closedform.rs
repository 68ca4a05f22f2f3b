//! Closed forms for `E(W_n)` and `E(W_n - e)`: the matrices themselves,
//! determinants, inertias, ranks, null vectors, the Laplacian-like matrices
//! `L-tilde` and `L-hat`, the inverse and Moore-Penrose formulas, the spectral
//! radius, and the non-EDM witnesses.
//!
//! Nothing here calls into [`crate::oracle`] or [`crate::graphs`]; those are
//! the independent checks.
//!
//! The inverse is built for every `n >= 5` with `n != 1 (mod 3)` and the
//! Moore-Penrose inverse for every `n >= 7` with `n = 1 (mod 3)`. Below the
//! sizes where the summation forms of the defining vectors kick in, the
//! constructions use the closed patterns and rely on the oracle checks.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::circulant::{
    circ_mul, cycle_closure_vector, ecc_rim_vector, special_x, special_y, special_z, tridiagonal, triple_vector,
    CirculantQ, TridiagSpec,
};
use crate::error::{Error, Result};
use crate::ratq::{block_compose, border_zero, int, rat, MatrixQ, Rational, VectorQ};

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InertiaTriple {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl InertiaTriple {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Self { n_plus, n_minus, n_zero }
    }

    pub fn order(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }
}

impl fmt::Display for InertiaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// `rho = integer_part + sqrt(radicand)`, its float value, and the Perron
/// direction `((n-1)/rho, 1, ..., 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRadiusResult {
    pub n: usize,
    pub integer_part: i64,
    pub radicand: i64,
    pub rho_float: f64,
    /// Numerator of the irrational first coordinate of the Perron vector; the
    /// coordinate is `perron_head_numerator / rho`.
    pub perron_head_numerator: i64,
}

impl SpectralRadiusResult {
    /// Float Perron vector of length `n`.
    pub fn perron_vector(&self) -> Vec<f64> {
        let mut v = alloc::vec![1.0; self.n];
        v[0] = self.perron_head_numerator as f64 / self.rho_float;
        v
    }
}

fn require_min(n: usize, min: usize, requirement: &'static str) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange { n, requirement });
    }
    Ok(())
}

fn require_wheel(n: usize) -> Result<()> {
    require_min(n, 5, "closed forms hold for n >= 5")
}

fn require_invertible(n: usize) -> Result<()> {
    require_wheel(n)?;
    if n % 3 == 1 {
        return Err(Error::ResidueClass {
            n,
            requirement: "E(W_n) is invertible only when n mod 3 != 1",
        });
    }
    Ok(())
}

fn require_singular(n: usize) -> Result<()> {
    if n % 3 != 1 {
        return Err(Error::ResidueClass {
            n,
            requirement: "E(W_n) is singular only when n mod 3 = 1",
        });
    }
    require_min(n, 7, "the singular case starts at n = 7")
}

fn pow2(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

fn hub_border(n: usize, corner: Rational, edge: &Rational, rim: &MatrixQ) -> Result<MatrixQ> {
    let m = n - 1;
    block_compose(
        &MatrixQ::new(1, 1, alloc::vec![corner])?,
        &VectorQ::ones(m)?.scale(edge).to_row(),
        &VectorQ::ones(m)?.scale(edge).to_column(),
        rim,
    )
}

/// `[[0, e'], [e, cir(u)]]` with `u = (0, 0, 2, ..., 2, 0)`; for `n = 4` the
/// wheel is complete and `E = D = J - I`.
pub fn ecc_matrix_wheel(n: usize) -> Result<MatrixQ> {
    require_min(n, 4, "a wheel needs n >= 4 vertices")?;
    if n == 4 {
        return MatrixQ::ones(4, 4)?.sub(&MatrixQ::identity(4)?);
    }
    let rim = CirculantQ::new(ecc_rim_vector(n)?).to_dense();
    hub_border(n, int(0), &int(1), &rim)
}

/// `[[0, e'], [e, 2J - T(2,2,2)]]`, the wheel with rim edge `v_2 v_n` removed.
pub fn ecc_matrix_wheel_minus_edge(n: usize) -> Result<MatrixQ> {
    require_min(n, 5, "W_n - e needs n >= 5")?;
    let m = n - 1;
    let rim = MatrixQ::ones(m, m)?
        .scale(&int(2))
        .sub(&tridiagonal(&TridiagSpec::constant(m, 2, 2, 2))?)?;
    hub_border(n, int(0), &int(1), &rim)
}

/// `B_n = [[0, e'], [e, T_{n-1}(-2,-2,-2)]]`.
pub fn bordered_matrix(n: usize) -> Result<MatrixQ> {
    require_min(n, 2, "B_n needs n >= 2")?;
    let t = tridiagonal(&TridiagSpec::constant(n - 1, -2, -2, -2))?;
    hub_border(n, int(0), &int(1), &t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TridiagDetRoute {
    /// `(alpha^{m+1} - beta^{m+1}) / (alpha - beta)` evaluated in `Q[sqrt(D)]`.
    ClosedForm,
    /// `a^2 = 4bc`: outside the closed form's domain, computed by recurrence.
    Recurrence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagDet {
    pub value: Rational,
    pub route: TridiagDetRoute,
}

/// `p + q * sqrt(d)` with rational `p`, `q`.
#[derive(Clone)]
struct QuadSurd {
    p: Rational,
    q: Rational,
}

impl QuadSurd {
    fn mul(&self, other: &QuadSurd, d: &Rational) -> QuadSurd {
        QuadSurd {
            p: &self.p * &other.p + &self.q * &other.q * d,
            q: &self.p * &other.q + &self.q * &other.p,
        }
    }

    fn pow(&self, mut k: usize, d: &Rational) -> QuadSurd {
        let mut acc = QuadSurd {
            p: Rational::one(),
            q: Rational::zero(),
        };
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, d);
            }
            base = base.mul(&base, d);
            k >>= 1;
        }
        acc
    }
}

/// Determinant of `T_m(a, b, c)`.
///
/// With `D = a^2 - 4bc != 0`, `alpha, beta = (a +- sqrt(D)) / 2` and the
/// closed form reduces to `2 q` where `alpha^{m+1} = p + q sqrt(D)`.
pub fn det_tridiagonal_closed(order: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<TridiagDet> {
    if order == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let disc = a * a - int(4) * b * c;
    if disc.is_zero() {
        let (mut prev, mut cur) = (Rational::one(), a.clone());
        let bc = b * c;
        for _ in 1..order {
            let next = a * &cur - &bc * &prev;
            prev = cur;
            cur = next;
        }
        return Ok(TridiagDet {
            value: cur,
            route: TridiagDetRoute::Recurrence,
        });
    }
    let half = rat(1, 2);
    let alpha = QuadSurd {
        p: a * &half,
        q: half,
    };
    let power = alpha.pow(order + 1, &disc);
    Ok(TridiagDet {
        value: power.q * int(2),
        route: TridiagDetRoute::ClosedForm,
    })
}

/// `det T_m(-2,-2,-2)`: `2^m`, `-2^m`, `0` for `m = 0, 1, 2 (mod 3)`.
pub fn det_t_closed(order: usize) -> Result<Rational> {
    if order == 0 {
        return Err(Error::InvalidDimension(0));
    }
    Ok(match order % 3 {
        0 => pow2(order),
        1 => -pow2(order),
        _ => Rational::zero(),
    })
}

/// `det B_n`: `0`, `2^{n-2}(n-1)/3`, `-2^{n-2}(n+1)/3` for `n = 0, 1, 2 (mod 3)`.
pub fn det_b_closed(n: usize) -> Result<Rational> {
    require_min(n, 2, "B_n needs n >= 2")?;
    let ni = n as i64;
    Ok(match n % 3 {
        0 => Rational::zero(),
        1 => pow2(n - 2) * rat(ni - 1, 3),
        _ => -pow2(n - 2) * rat(ni + 1, 3),
    })
}

/// `det E(W_n) = 2^{n-2}(1-n)` unless `n = 1 (mod 3)`, where it vanishes.
pub fn det_e_closed(n: usize) -> Result<Rational> {
    require_wheel(n)?;
    if n % 3 == 1 {
        return Ok(Rational::zero());
    }
    Ok(pow2(n - 2) * int(1 - n as i64))
}

/// `det E(W_n - e) = det B_n`.
pub fn det_e_minus_edge_closed(n: usize) -> Result<Rational> {
    require_wheel(n)?;
    det_b_closed(n)
}

pub fn inertia_e_minus_edge_closed(n: usize) -> Result<InertiaTriple> {
    require_wheel(n)?;
    Ok(match n % 3 {
        0 => InertiaTriple::new(n / 3, (2 * n - 3) / 3, 1),
        1 => InertiaTriple::new((n + 2) / 3, (2 * n - 2) / 3, 0),
        _ => InertiaTriple::new((n + 1) / 3, (2 * n - 1) / 3, 0),
    })
}

pub fn inertia_e_closed(n: usize) -> Result<InertiaTriple> {
    require_wheel(n)?;
    Ok(match n % 3 {
        0 => InertiaTriple::new((n + 3) / 3, (2 * n - 3) / 3, 0),
        1 => InertiaTriple::new((n - 1) / 3, (2 * n - 5) / 3, 2),
        _ => InertiaTriple::new((n + 1) / 3, (2 * n - 1) / 3, 0),
    })
}

pub fn rank_e_closed(n: usize) -> Result<usize> {
    require_wheel(n)?;
    Ok(if n % 3 == 1 { n - 2 } else { n })
}

/// Two independent kernel vectors of `E(W_n)` for `n = 1 (mod 3)`:
/// `(0, 1,0,-1, 1,0,-1, ...)` and `(0, 0,1,-1, 0,1,-1, ...)`.
pub fn null_vectors(n: usize) -> Result<(VectorQ, VectorQ)> {
    require_singular(n)?;
    let build = |pattern: [i64; 3]| {
        let mut e = alloc::vec![int(0)];
        for k in 0..n - 1 {
            e.push(int(pattern[k % 3]));
        }
        VectorQ::new(e)
    };
    Ok((build([1, 0, -1])?, build([0, 1, -1])?))
}

/// `w = (7-n, 1, ..., 1) / 6`.
pub fn weight_w(n: usize) -> Result<VectorQ> {
    require_wheel(n)?;
    let mut e = alloc::vec![rat(7 - n as i64, 6)];
    e.extend(core::iter::repeat_n(rat(1, 6), n - 1));
    VectorQ::new(e)
}

/// `M = cir(x-bar)/3` for `n = 2 (mod 3)`, `cir(y-bar)/3` for `n = 0 (mod 3)`.
pub fn m_circulant(n: usize) -> Result<CirculantQ> {
    require_invertible(n)?;
    let defining = if n % 3 == 2 { special_x(n)? } else { special_y(n)? };
    Ok(CirculantQ::new(defining).scale(&rat(1, 3)))
}

/// `P = cir(z)/(3(n-1))` for `n = 1 (mod 3)`.
pub fn p_circulant(n: usize) -> Result<CirculantQ> {
    require_singular(n)?;
    Ok(CirculantQ::new(special_z(n)?).scale(&rat(1, 3 * (n as i64 - 1))))
}

/// `(n-1)/3 I - (1/3) [[0, e'], [e, 0]] + blockdiag(0, inner)`.
fn laplacian_like(n: usize, inner: &CirculantQ) -> Result<MatrixQ> {
    let third = rat(1, 3);
    let diag = MatrixQ::identity(n)?.scale(&rat(n as i64 - 1, 3));
    let star = hub_border(n, int(0), &third, &MatrixQ::zeros(n - 1, n - 1)?)?;
    diag.sub(&star)?.add(&border_zero(&inner.to_dense())?)
}

pub fn laplacian_tilde(n: usize) -> Result<MatrixQ> {
    laplacian_like(n, &m_circulant(n)?)
}

pub fn laplacian_hat(n: usize) -> Result<MatrixQ> {
    laplacian_like(n, &p_circulant(n)?)
}

/// `-1/2 L + 6/(n-1) w w'`.
fn laplacian_plus_rank_one(n: usize, laplacian: &MatrixQ) -> Result<MatrixQ> {
    let w = weight_w(n)?;
    laplacian
        .scale(&rat(-1, 2))
        .add(&w.outer(&w).scale(&rat(6, n as i64 - 1)))
}

pub fn inverse_e_closed(n: usize) -> Result<MatrixQ> {
    laplacian_plus_rank_one(n, &laplacian_tilde(n)?)
}

pub fn pinv_e_closed(n: usize) -> Result<MatrixQ> {
    laplacian_plus_rank_one(n, &laplacian_hat(n)?)
}

/// `M * cir(u)` in closed form: `cir(-4, 2, 4-2n, ..., 4-2n, 2) / 3`.
pub fn m_times_rim_closed(n: usize) -> Result<CirculantQ> {
    require_invertible(n)?;
    let m = n - 1;
    let ni = n as i64;
    let z = VectorQ::new(
        (0..m)
            .map(|k| match k {
                0 => int(-4),
                1 => int(2),
                k if k == m - 1 => int(2),
                _ => int(4 - 2 * ni),
            })
            .collect(),
    )?;
    Ok(CirculantQ::new(z).scale(&rat(1, 3)))
}

/// `V = cir(2, -1, -1, ...)`.
pub fn triple_circulant(n: usize) -> Result<CirculantQ> {
    Ok(CirculantQ::new(triple_vector(n)?))
}

/// `U = cir(1, 1, 0, ..., 0, 1)`.
pub fn cycle_closure_circulant(n: usize) -> Result<CirculantQ> {
    Ok(CirculantQ::new(cycle_closure_vector(n)?))
}

/// `P * U` in closed form:
/// `cir(5n-n^2-10, 2n-n^2+2, 3,-6,3, ..., 3,-6,3, 2n-n^2+2) / (3(n-1))`.
pub fn p_times_cycle_closed(n: usize) -> Result<CirculantQ> {
    require_singular(n)?;
    let ni = n as i64;
    let edge = int(2 * ni - ni * ni + 2);
    let mut e = alloc::vec![int(5 * ni - ni * ni - 10), edge.clone()];
    for _ in 0..(n - 4) / 3 {
        e.extend([int(3), int(-6), int(3)]);
    }
    e.push(edge);
    Ok(CirculantQ::new(VectorQ::new(e)?).scale(&rat(1, 3 * (ni - 1))))
}

/// `L-hat * E` in closed form:
/// `(1/3) [[1-n, (7-n)e'], [e, cir(v)]]` with
/// `v = (17-5n, n-7,n-7,n+11, ..., n-7,n-7,n+11, n-7,n-7) / (n-1)`.
pub fn hat_l_times_e_closed(n: usize) -> Result<MatrixQ> {
    require_singular(n)?;
    let ni = n as i64;
    let mut v = alloc::vec![int(17 - 5 * ni)];
    for _ in 0..(n - 4) / 3 {
        v.extend([int(ni - 7), int(ni - 7), int(ni + 11)]);
    }
    v.extend([int(ni - 7), int(ni - 7)]);
    let v = VectorQ::new(v)?.scale(&rat(1, ni - 1));
    let third = rat(1, 3);
    let m = n - 1;
    block_compose(
        &MatrixQ::new(1, 1, alloc::vec![rat(1 - ni, 3)])?,
        &VectorQ::ones(m)?.scale(&rat(7 - ni, 3)).to_row(),
        &VectorQ::ones(m)?.scale(&third).to_column(),
        &CirculantQ::new(v).scale(&third).to_dense(),
    )
}

/// `X E = I - blockdiag(0, V) / (n-1)` where `X` is the Moore-Penrose inverse.
pub fn pinv_times_e_closed(n: usize) -> Result<MatrixQ> {
    require_singular(n)?;
    let v = triple_circulant(n)?.to_dense().scale(&rat(1, n as i64 - 1));
    MatrixQ::identity(n)?.sub(&border_zero(&v)?)
}

/// Identity `M * cir(u)` computed through the circulant product, for
/// comparison with [`m_times_rim_closed`].
pub fn m_times_rim(n: usize) -> Result<CirculantQ> {
    circ_mul(&m_circulant(n)?, &CirculantQ::new(ecc_rim_vector(n)?))
}

/// Quotient matrix of the hub/rim equitable partition.
pub fn quotient_matrix(n: usize) -> Result<MatrixQ> {
    require_wheel(n)?;
    let ni = n as i64;
    MatrixQ::from_i64_rows(&[&[0, ni - 1], &[1, 2 * (ni - 4)]])
}

/// `rho(E(W_n)) = (n-4) + sqrt(n^2 - 7n + 15)`.
pub fn spectral_radius_closed(n: usize) -> Result<SpectralRadiusResult> {
    require_wheel(n)?;
    let ni = n as i64;
    let integer_part = ni - 4;
    let radicand = ni * ni - 7 * ni + 15;
    Ok(SpectralRadiusResult {
        n,
        integer_part,
        radicand,
        rho_float: integer_part as f64 + libm::sqrt(radicand as f64),
        perron_head_numerator: ni - 1,
    })
}

/// Vector `z` with `e'z = 0` and `z'Ez > 0`, showing `E(W_n)` is not a
/// Euclidean distance matrix.
///
/// Odd `n`: `(0, 1,-1, ..., 1,-1)`. Even `n = 2m`: zeros at coordinates `1`
/// and `m+1`; coordinates `2..m` alternate starting at `+1`, and after the
/// second zero they alternate so that odd coordinates carry `+1`. For odd `m`
/// that block starts at `+1`, for even `m` at `-1`.
pub fn edm_witness(n: usize) -> Result<VectorQ> {
    require_wheel(n)?;
    let sign = |positive: bool| if positive { int(1) } else { int(-1) };
    let entries: Vec<Rational> = if n % 2 == 1 {
        (1..=n).map(|p| if p == 1 { int(0) } else { sign(p % 2 == 0) }).collect()
    } else {
        let m = n / 2;
        (1..=n)
            .map(|p| match p {
                1 => int(0),
                p if p == m + 1 => int(0),
                p if p <= m => sign(p % 2 == 0),
                p => sign(p % 2 == 1),
            })
            .collect()
    };
    VectorQ::new(entries)
}

/// `z'Ez` for [`edm_witness`]: `2(n-1)` for odd `n`, `2(n-4)` for even `n`.
pub fn edm_witness_value(n: usize) -> Result<Rational> {
    require_wheel(n)?;
    let ni = n as i64;
    Ok(if n % 2 == 1 { int(2 * (ni - 1)) } else { int(2 * (ni - 4)) })
}

/// Sign of a nonzero determinant implied by an inertia: `(-1)^{n_minus}`.
pub fn det_sign_from_inertia(t: &InertiaTriple) -> i32 {
    if t.n_zero > 0 {
        0
    } else if t.n_minus % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}
