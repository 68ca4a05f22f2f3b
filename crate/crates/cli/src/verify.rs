//! Closed form against oracle, one check per applicable result.

use num_traits::Zero;
use rayon::prelude::*;
use wheelecc_core::circulant::{ecc_rim_vector, tridiagonal, TridiagSpec};
use wheelecc_core::closedform::{
    bordered_matrix, cycle_closure_circulant, det_b_closed, det_e_closed, det_e_minus_edge_closed, det_t_closed,
    det_tridiagonal_closed, ecc_matrix_wheel, ecc_matrix_wheel_minus_edge, edm_witness,
    edm_witness_value, hat_l_times_e_closed, inertia_e_closed, inertia_e_minus_edge_closed,
    inverse_e_closed, laplacian_hat, laplacian_tilde, m_circulant, m_times_rim,
    m_times_rim_closed, null_vectors, p_circulant, p_times_cycle_closed, pinv_e_closed,
    pinv_times_e_closed, quotient_matrix, rank_e_closed, spectral_radius_closed, triple_circulant,
    weight_w,
};
use wheelecc_core::graphs::{wheel_ecc_definitional, wheel_minus_edge_ecc_definitional};
use wheelecc_core::oracle::{
    bareiss_det, inertia_exact, inverse_exact, is_irreducible, penrose_check,
    power_iteration_rho, rank_certificate_check, rank_exact,
};
use wheelecc_core::ratq::{format_fraction, int, rat, to_f64, MatrixQ, VectorQ};
use wheelecc_core::{CirculantQ, Error, InertiaTriple, Rational, Result};

use crate::report::{Check, Outcome, SweepReport, VerificationReport};

/// Largest `n` accepted by `verify` and `sweep` without an override.
pub const DEFAULT_MAX_N: usize = 200;

/// Relative-change stopping rule for power iteration.
pub const POWER_ITERATION_TOL: f64 = 1e-12;
pub const POWER_ITERATION_MAX_ITERS: usize = 100_000;

/// Every check name a report for `n >= 5` contains, in report order.
pub const CHECK_NAMES: &[&str] = &[
    "ecc_matrix_definitional",
    "ecc_minus_edge_definitional",
    "det_tridiagonal",
    "det_bordered",
    "det_bordered_recurrence",
    "det_ecc_wheel",
    "det_ecc_recurrence",
    "det_ecc_wheel_minus_edge",
    "inertia_ecc_wheel_minus_edge",
    "inertia_ecc_wheel",
    "rank_ecc_wheel",
    "quotient_spectrum",
    "weight_identity",
    "laplacian_tilde",
    "m_identities",
    "inverse_formula",
    "null_vectors",
    "laplacian_hat",
    "p_identities",
    "pinv_formula",
    "rank_certificate",
    "irreducible",
    "spectral_radius",
    "edm_witness",
];

/// Checks reported for the complete graph `W_4`, where only oracles apply.
pub const K4_CHECK_NAMES: &[&str] = &[
    "k4_ecc_matrix_definitional",
    "k4_det_oracle",
    "k4_inertia_oracle",
    "k4_inverse_oracle",
    "k4_irreducible",
    "k4_spectral_radius",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Reporting tolerance for floating-point comparisons.
    pub tol: f64,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            timings: false,
        }
    }
}

fn show_q(r: &Rational) -> String {
    format_fraction(r)
}

fn show_vec(v: &VectorQ) -> String {
    let parts: Vec<String> = v.iter().map(format_fraction).collect();
    format!("({})", parts.join(", "))
}

fn show_inertia(t: &InertiaTriple) -> String {
    t.to_string()
}

fn same(expected: &MatrixQ, actual: &MatrixQ, what: &str) -> Outcome {
    Outcome {
        passed: expected == actual,
        expected: what.to_string(),
        actual: if expected == actual {
            "equal".to_string()
        } else {
            "differs".to_string()
        },
    }
}

fn ones(n: usize) -> Result<VectorQ> {
    VectorQ::ones(n)
}

fn residue_note(requirement: &str) -> String {
    format!("not applicable: {requirement}")
}

/// Runs every check applicable at `n`. `n = 4` yields the oracle-only
/// report for the complete graph.
pub fn verify(n: usize, opts: VerifyOptions) -> Result<VerificationReport> {
    if n < 4 {
        return Err(Error::OutOfRange {
            n,
            requirement: "verification needs n >= 4",
        });
    }
    let mut checks = if n == 4 { verify_k4(opts) } else { verify_wheel(n, opts) };
    if !opts.timings {
        checks.iter_mut().for_each(|c| c.wall_time_ms = None);
    }
    Ok(VerificationReport { n, checks })
}

fn verify_k4(opts: VerifyOptions) -> Vec<Check> {
    let mut checks = vec![
        Check::run(K4_CHECK_NAMES[0], || {
            let k4 = MatrixQ::ones(4, 4)?.sub(&MatrixQ::identity(4)?)?;
            Ok(same(&k4, &wheel_ecc_definitional(4)?, "J - I"))
        }),
        Check::run(K4_CHECK_NAMES[1], || {
            let e = wheel_ecc_definitional(4)?;
            Ok(Outcome::compare(&int(-3), &bareiss_det(&e)?, show_q))
        }),
        Check::run(K4_CHECK_NAMES[2], || {
            let e = wheel_ecc_definitional(4)?;
            Ok(Outcome::compare(&InertiaTriple::new(1, 3, 0), &inertia_exact(&e)?.inertia, show_inertia))
        }),
        Check::run(K4_CHECK_NAMES[3], || {
            let e = wheel_ecc_definitional(4)?;
            let expected = MatrixQ::ones(4, 4)?.scale(&rat(1, 3)).sub(&MatrixQ::identity(4)?)?;
            Ok(same(&expected, &inverse_exact(&e)?, "J/3 - I"))
        }),
        Check::run(K4_CHECK_NAMES[4], || {
            Ok(Outcome::compare(&true, &is_irreducible(&wheel_ecc_definitional(4)?)?, bool::to_string))
        }),
        Check::run(K4_CHECK_NAMES[5], || {
            let rho = power_iteration_rho(&wheel_ecc_definitional(4)?, POWER_ITERATION_TOL, POWER_ITERATION_MAX_ITERS)?;
            Ok(float_outcome(3.0, rho, opts.tol))
        }),
    ];
    for name in CHECK_NAMES {
        checks.push(Check::skip(name, "closed forms hold for n >= 5; W_4 is complete and uses oracles only"));
    }
    checks
}

fn float_outcome(expected: f64, actual: f64, tol: f64) -> Outcome {
    Outcome {
        passed: (expected - actual).abs() < tol,
        expected: format!("{expected:.12}"),
        actual: format!("{actual:.12}"),
    }
}

fn verify_wheel(n: usize, opts: VerifyOptions) -> Vec<Check> {
    let ni = n as i64;
    let singular = n % 3 == 1;
    let invertible_only = "E(W_n) is invertible, which needs n mod 3 != 1";
    let singular_only = "E(W_n) is singular, which needs n mod 3 = 1";

    let mut checks = Vec::with_capacity(CHECK_NAMES.len());
    checks.push(Check::run("ecc_matrix_definitional", || {
        Ok(same(&wheel_ecc_definitional(n)?, &ecc_matrix_wheel(n)?, "BFS eccentricity matrix of W_n"))
    }));
    checks.push(Check::run("ecc_minus_edge_definitional", || {
        Ok(same(
            &wheel_minus_edge_ecc_definitional(n)?,
            &ecc_matrix_wheel_minus_edge(n)?,
            "BFS eccentricity matrix of W_n - e",
        ))
    }));
    checks.push(Check::run("det_tridiagonal", || {
        let order = n - 2;
        let closed = det_t_closed(order)?;
        let general = det_tridiagonal_closed(order, &int(-2), &int(-2), &int(-2))?.value;
        let oracle = bareiss_det(&tridiagonal(&TridiagSpec::constant(order, -2, -2, -2))?)?;
        Ok(Outcome {
            passed: closed == oracle && general == oracle,
            expected: show_q(&oracle),
            actual: format!("{} / {}", show_q(&closed), show_q(&general)),
        })
    }));
    checks.push(Check::run("det_bordered", || {
        Ok(Outcome::compare(&bareiss_det(&bordered_matrix(n)?)?, &det_b_closed(n)?, show_q))
    }));
    checks.push(Check::run("det_bordered_recurrence", || {
        let rhs = int(4) * det_t_closed(n - 4)? + int(8) * det_b_closed(n - 3)?;
        Ok(Outcome::compare(&rhs, &det_b_closed(n)?, show_q))
    }));
    checks.push(Check::run("det_ecc_wheel", || {
        Ok(Outcome::compare(&bareiss_det(&wheel_ecc_definitional(n)?)?, &det_e_closed(n)?, show_q))
    }));
    checks.push(Check::run("det_ecc_recurrence", || {
        let rhs = -int((ni - 1) * (ni - 1)) * det_t_closed(n - 2)? + int(6 * (ni - 1)) * det_b_closed(n - 1)?;
        Ok(Outcome::compare(&rhs, &det_e_closed(n)?, show_q))
    }));
    checks.push(Check::run("det_ecc_wheel_minus_edge", || {
        Ok(Outcome::compare(
            &bareiss_det(&wheel_minus_edge_ecc_definitional(n)?)?,
            &det_e_minus_edge_closed(n)?,
            show_q,
        ))
    }));
    checks.push(Check::run("inertia_ecc_wheel_minus_edge", || {
        let oracle = inertia_exact(&wheel_minus_edge_ecc_definitional(n)?)?.inertia;
        Ok(Outcome::compare(&oracle, &inertia_e_minus_edge_closed(n)?, show_inertia))
    }));
    checks.push(Check::run("inertia_ecc_wheel", || {
        let oracle = inertia_exact(&wheel_ecc_definitional(n)?)?.inertia;
        Ok(Outcome::compare(&oracle, &inertia_e_closed(n)?, show_inertia))
    }));
    checks.push(Check::run("rank_ecc_wheel", || {
        Ok(Outcome::compare(&rank_exact(&wheel_ecc_definitional(n)?), &rank_e_closed(n)?, usize::to_string))
    }));
    checks.push(Check::run("quotient_spectrum", || {
        let e = wheel_ecc_definitional(n)?;
        let q = quotient_matrix(n)?;
        let sums = e.row_sums();
        let hub_ok = sums.get(0) == q.get(0, 1);
        let rim_ok = (1..n).all(|i| sums.get(i) == &(q.get(1, 0) + q.get(1, 1)));
        let sr = spectral_radius_closed(n)?;
        let trace = q.get(0, 0) + q.get(1, 1);
        let det = q.get(0, 0) * q.get(1, 1) - q.get(0, 1) * q.get(1, 0);
        let roots_ok = trace == int(2 * sr.integer_part)
            && det == int(sr.integer_part * sr.integer_part - sr.radicand);
        Ok(Outcome::all(&[
            ("hub row sum = n-1", hub_ok),
            ("rim row sums = 1 + 2(n-4)", rim_ok),
            ("eigenvalues (n-4) +- sqrt(n^2-7n+15)", roots_ok),
        ]))
    }));
    checks.push(Check::run("weight_identity", || {
        let e = ecc_matrix_wheel(n)?;
        let expected = ones(n)?.scale(&rat(ni - 1, 6));
        Ok(Outcome::compare(&expected, &e.mul_vec(&weight_w(n)?)?, show_vec))
    }));

    if singular {
        for name in ["laplacian_tilde", "m_identities", "inverse_formula"] {
            checks.push(Check::skip(name, residue_note(invertible_only)));
        }
    } else {
        checks.push(Check::run("laplacian_tilde", || {
            let l = laplacian_tilde(n)?;
            let e = ecc_matrix_wheel(n)?;
            let w = weight_w(n)?;
            let lhs = l.mat_mul(&e)?.add(&MatrixQ::identity(n)?.scale(&int(2)))?;
            let rhs = w.outer(&ones(n)?).scale(&int(2));
            Ok(Outcome::all(&[
                ("symmetric", l.is_symmetric()),
                ("L e = 0", l.mul_vec(&ones(n)?)?.is_zero()),
                ("rank n-1", rank_exact(&l) == n - 1),
                ("L E + 2I = 2 w e'", lhs == rhs),
            ]))
        }));
        checks.push(Check::run("m_identities", || {
            let m = m_circulant(n)?;
            let me = m.mul_vec(&ones(n - 1)?)?;
            Ok(Outcome::all(&[
                ("M e = (2-n)/3 e", me == ones(n - 1)?.scale(&rat(2 - ni, 3))),
                ("M cir(u) closed form", m_times_rim(n)? == m_times_rim_closed(n)?),
                (
                    "M cir(u) dense",
                    m.to_dense().mat_mul(&CirculantQ::new(ecc_rim_vector(n)?).to_dense())?
                        == m_times_rim_closed(n)?.to_dense(),
                ),
            ]))
        }));
        checks.push(Check::run("inverse_formula", || {
            let e = wheel_ecc_definitional(n)?;
            let x = inverse_e_closed(n)?;
            let id = MatrixQ::identity(n)?;
            Ok(Outcome::all(&[
                ("E X = I", e.mat_mul(&x)? == id),
                ("X E = I", x.mat_mul(&e)? == id),
                ("X = Gauss-Jordan inverse", x == inverse_exact(&e)?),
            ]))
        }));
    }

    if !singular {
        for name in ["null_vectors", "laplacian_hat", "p_identities", "pinv_formula"] {
            checks.push(Check::skip(name, residue_note(singular_only)));
        }
    } else {
        checks.push(Check::run("null_vectors", || {
            let e = wheel_ecc_definitional(n)?;
            let (x, y) = null_vectors(n)?;
            let w = weight_w(n)?;
            let pair = x.to_column().hstack(&y.to_column())?;
            Ok(Outcome::all(&[
                ("E x = 0", e.mul_vec(&x)?.is_zero()),
                ("E y = 0", e.mul_vec(&y)?.is_zero()),
                ("w'x = w'y = 0", w.dot(&x)?.is_zero() && w.dot(&y)?.is_zero()),
                ("x, y independent", rank_exact(&pair) == 2),
            ]))
        }));
        checks.push(Check::run("laplacian_hat", || {
            let l = laplacian_hat(n)?;
            Ok(Outcome::all(&[
                ("symmetric", l.is_symmetric()),
                ("L e = 0", l.mul_vec(&ones(n)?)?.is_zero()),
                ("rank n-3", rank_exact(&l) == n - 3),
                ("L E closed form", l.mat_mul(&ecc_matrix_wheel(n)?)? == hat_l_times_e_closed(n)?),
            ]))
        }));
        checks.push(Check::run("p_identities", || {
            let p = p_circulant(n)?;
            let pd = p.to_dense();
            let v = triple_circulant(n)?.to_dense();
            let u = cycle_closure_circulant(n)?.to_dense();
            Ok(Outcome::all(&[
                ("P e = (2-n)/3 e", p.mul_vec(&ones(n - 1)?)? == ones(n - 1)?.scale(&rat(2 - ni, 3))),
                ("P V = (1-n)/3 V", pd.mat_mul(&v)? == v.scale(&rat(1 - ni, 3))),
                ("P U closed form", pd.mat_mul(&u)? == p_times_cycle_closed(n)?.to_dense()),
            ]))
        }));
        checks.push(Check::run("pinv_formula", || {
            let e = wheel_ecc_definitional(n)?;
            let x = pinv_e_closed(n)?;
            let r = penrose_check(&e, &x)?;
            Ok(Outcome::all(&[
                ("E X E = E", r.axa),
                ("X E X = X", r.xax),
                ("(E X)' = E X", r.ax_symmetric),
                ("(X E)' = X E", r.xa_symmetric),
                ("X E closed form", x.mat_mul(&e)? == pinv_times_e_closed(n)?),
            ]))
        }));
    }

    if singular && n >= 10 {
        checks.push(Check::run("rank_certificate", || {
            let r = rank_certificate_check(n)?;
            Ok(Outcome::all(&[
                ("L E X = C", r.product_matches),
                ("rank C = n-3", r.rank_c == n - 3),
            ]))
        }));
    } else {
        checks.push(Check::skip(
            "rank_certificate",
            residue_note("the rank certificate needs n mod 3 = 1 and n >= 10"),
        ));
    }

    checks.push(Check::run("irreducible", || {
        Ok(Outcome::compare(&true, &is_irreducible(&wheel_ecc_definitional(n)?)?, bool::to_string))
    }));
    checks.push(Check::run("spectral_radius", || {
        let e = wheel_ecc_definitional(n)?;
        let sr = spectral_radius_closed(n)?;
        let rho = power_iteration_rho(&e, POWER_ITERATION_TOL, POWER_ITERATION_MAX_ITERS)?;
        let mut o = float_outcome(sr.rho_float, rho, opts.tol);
        let v = sr.perron_vector();
        let residual = (0..n)
            .map(|i| {
                let ev: f64 = (0..n).map(|j| to_f64(e.get(i, j)) * v[j]).sum();
                (ev - sr.rho_float * v[i]).abs()
            })
            .fold(0.0, f64::max);
        if residual >= opts.tol {
            o.passed = false;
            o.actual = format!("{} (Perron residual {residual:e})", o.actual);
        }
        Ok(o)
    }));
    checks.push(Check::run("edm_witness", || {
        let e = wheel_ecc_definitional(n)?;
        let z = edm_witness(n)?;
        let value = z.dot(&e.mul_vec(&z)?)?;
        let mut o = Outcome::compare(&edm_witness_value(n)?, &value, show_q);
        if !z.sum().is_zero() {
            o.passed = false;
            o.actual = format!("{} (e'z = {})", o.actual, show_q(&z.sum()));
        }
        Ok(o)
    }));
    checks
}

/// Verifies every `n` in `n_min..=n_max` on `jobs` threads. Reports come back
/// ordered by `n` whatever the scheduling.
pub fn sweep(n_min: usize, n_max: usize, jobs: usize, opts: VerifyOptions) -> Result<SweepReport> {
    if n_min < 5 || n_min > n_max {
        return Err(Error::OutOfRange {
            n: n_min,
            requirement: "sweep needs 5 <= n_min <= n_max",
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let reports = pool.install(|| {
        (n_min..=n_max)
            .into_par_iter()
            .map(|n| verify(n, opts))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SweepReport::new(n_min, n_max, reports))
}
