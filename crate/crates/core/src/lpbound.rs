//! Linear programming bounds on the order of a connected `k`-regular graph
//! with prescribed nontrivial eigenvalues.
//!
//! A polynomial `f = sum f_i F_i` with `f(k) > 0`, `f(tau) <= 0` on every
//! nontrivial eigenvalue, `f_0 > 0` and `f_i >= 0` for `i >= 1` bounds the
//! vertex count by `f(k) / f_0`. The LP forms optimise over the coefficients
//! (dual) or the multiplicities (primal) for a fixed degree `u`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orthopoly::{f_values, to_f_basis, FBasisPolynomial, MonomialPolynomial, MAX_DEGREE};
use crate::scalar::Scalar;
use crate::simplex::{Constraint, LinearProgram, LpSolution, LpStatus, Relation};
use crate::spectral::{self, Spectrum};

/// Absolute slack applied to the non-strict certificate conditions in
/// floating-point mode, scaled by the magnitude of the evaluated terms.
pub const DEFAULT_SLACK_TOL: f64 = 1e-9;

/// Distance from `v` within which a floating-point bound counts as attained.
pub const BOUND_MATCH_TOL: f64 = 1e-6;

/// Outcome of one certificate condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub holds: bool,
    /// The value closest to violating the condition.
    pub worst: f64,
    /// Which eigenvalue or coefficient attains `worst`, where applicable.
    pub index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conditions {
    pub f_at_k_positive: Condition,
    pub nonpositive_on_eigenvalues: Condition,
    pub f0_positive: Condition,
    pub coefficients_nonnegative: Condition,
}

impl Conditions {
    pub fn all_hold(&self) -> bool {
        self.f_at_k_positive.holds
            && self.nonpositive_on_eigenvalues.holds
            && self.f0_positive.holds
            && self.coefficients_nonnegative.holds
    }
}

/// A polynomial together with its validated bound conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCertificate<T> {
    pub k: u32,
    pub taus: Vec<T>,
    pub f: FBasisPolynomial<T>,
    pub f_at_k: T,
    pub f0: T,
    /// `f(k) / f_0`, present only when every condition holds.
    pub bound: Option<T>,
    pub conditions: Conditions,
    pub slack_tol: f64,
}

impl<T: Scalar> BoundCertificate<T> {
    pub fn is_valid(&self) -> bool {
        self.bound.is_some()
    }

    /// The coefficients `f_i` as floats.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.f.coeffs().iter().map(Scalar::to_f64).collect()
    }
}

fn validate_taus<T: Scalar>(k: u32, taus: &[T]) -> Result<()> {
    let kk = T::from_i64(k as i64);
    if let Some(i) = taus.iter().position(|t| *t >= kk) {
        return Err(Error::InvalidEigenvalues(format!(
            "eigenvalue #{i} ({}) is not below k = {k}",
            taus[i].to_f64()
        )));
    }
    Ok(())
}

/// Evaluates the four bound conditions for `f` against eigenvalues `taus`.
///
/// An invalid certificate is returned as data with `bound = None`.
pub fn check_certificate<T: Scalar>(
    k: u32,
    taus: &[T],
    f: &FBasisPolynomial<T>,
) -> Result<BoundCertificate<T>> {
    check_certificate_with_tol(k, taus, f, DEFAULT_SLACK_TOL)
}

pub fn check_certificate_with_tol<T: Scalar>(
    k: u32,
    taus: &[T],
    f: &FBasisPolynomial<T>,
    slack_tol: f64,
) -> Result<BoundCertificate<T>> {
    if f.k() != k {
        return Err(Error::DegreeMismatch {
            certificate: f.k(),
            graph: k,
        });
    }
    validate_taus(k, taus)?;
    let kk = T::from_i64(k as i64);
    let f_at_k = f.eval(&kk);
    let f0 = f.coeff(0);

    let mut on_taus = Condition {
        holds: true,
        worst: f64::NEG_INFINITY,
        index: None,
    };
    for (i, tau) in taus.iter().enumerate() {
        let value = f.eval(tau);
        let allowed = T::slack(slack_tol * f.eval_magnitude(tau).max(1.0));
        if value > allowed {
            on_taus.holds = false;
        }
        if on_taus.index.is_none() || value.to_f64() > on_taus.worst {
            on_taus.worst = value.to_f64();
            on_taus.index = Some(i);
        }
    }

    let scale = f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().abs())
        .fold(1.0, f64::max);
    let mut coefficients = Condition {
        holds: true,
        worst: f64::INFINITY,
        index: None,
    };
    for (i, c) in f.coeffs().iter().enumerate().skip(1) {
        if *c < -T::slack(slack_tol * scale) {
            coefficients.holds = false;
        }
        if coefficients.index.is_none() || c.to_f64() < coefficients.worst {
            coefficients.worst = c.to_f64();
            coefficients.index = Some(i);
        }
    }
    if coefficients.index.is_none() {
        coefficients.worst = 0.0;
    }
    if on_taus.index.is_none() {
        on_taus.worst = 0.0;
    }

    let conditions = Conditions {
        f_at_k_positive: Condition {
            holds: f_at_k > T::zero(),
            worst: f_at_k.to_f64(),
            index: None,
        },
        nonpositive_on_eigenvalues: on_taus,
        f0_positive: Condition {
            holds: f0 > T::zero(),
            worst: f0.to_f64(),
            index: Some(0),
        },
        coefficients_nonnegative: coefficients,
    };
    let bound = conditions
        .all_hold()
        .then(|| f_at_k.clone() / f0.clone());
    Ok(BoundCertificate {
        k,
        taus: taus.to_vec(),
        f: f.clone(),
        f_at_k,
        f0,
        bound,
        conditions,
        slack_tol,
    })
}

/// Builds `(x - tau_1) prod_{i>=2} (x - tau_i)^2` and checks it as a
/// certificate. `taus` must be strictly decreasing and below `k`.
pub fn certificate_from_spectrum<T: Scalar>(k: u32, taus: &[T]) -> Result<BoundCertificate<T>> {
    certificate_from_spectrum_with_tol(k, taus, DEFAULT_SLACK_TOL)
}

pub fn certificate_from_spectrum_with_tol<T: Scalar>(
    k: u32,
    taus: &[T],
    slack_tol: f64,
) -> Result<BoundCertificate<T>> {
    let (first, rest) = taus.split_first().ok_or(Error::EmptySpectrum)?;
    if taus.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidEigenvalues(
            "eigenvalues must be strictly decreasing".into(),
        ));
    }
    validate_taus(k, taus)?;
    let roots: Vec<T> = std::iter::once(first.clone())
        .chain(rest.iter().flat_map(|t| [t.clone(), t.clone()]))
        .collect();
    let p = MonomialPolynomial::from_roots(&roots);
    let f = to_f_basis(k, &p)?;
    check_certificate_with_tol(k, taus, &f, slack_tol)
}

fn check_lp_input<T: Scalar>(k: u32, taus: &[T], u: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::DegreeTooSmall(k));
    }
    if taus.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    if u == 0 {
        return Err(Error::InvalidArgument("LP degree u must be at least 1".into()));
    }
    if u > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(u));
    }
    validate_taus(k, taus)
}

/// `F_1..F_u` at `k` and at each eigenvalue.
fn basis_table<T: Scalar>(k: u32, taus: &[T], u: usize) -> (Vec<T>, Vec<Vec<T>>) {
    let at_k = f_values(k, u, &T::from_i64(k as i64)).split_off(1);
    let at_taus = taus.iter().map(|t| f_values(k, u, t).split_off(1)).collect();
    (at_k, at_taus)
}

/// `min 1 + sum_j f_j F_j(k)` subject to `-sum_j f_j F_j(tau_i) >= 1`,
/// `f_j >= 0`, over `j = 1..=u`. The optimum bounds the order of any
/// connected `k`-regular graph whose nontrivial eigenvalues lie in `taus`.
pub fn lp_bound_dual<T: Scalar>(k: u32, taus: &[T], u: usize) -> Result<LpSolution<T>> {
    check_lp_input(k, taus, u)?;
    let (at_k, at_taus) = basis_table(k, taus, u);
    let lp = LinearProgram {
        objective: at_k.into_iter().map(|x| -x).collect(),
        constant: -T::one(),
        constraints: at_taus
            .into_iter()
            .map(|row| Constraint {
                coeffs: row.into_iter().map(|x| -x).collect(),
                relation: Relation::Ge,
                rhs: T::one(),
            })
            .collect(),
    };
    let mut sol = lp.solve();
    sol.objective = -sol.objective;
    Ok(sol)
}

/// `max 1 + sum_i m_i` subject to `-sum_i m_i F_j(tau_i) <= F_j(k)` for
/// `j = 1..=u`, `m_i >= 0`.
pub fn lp_bound_primal<T: Scalar>(k: u32, taus: &[T], u: usize) -> Result<LpSolution<T>> {
    check_lp_input(k, taus, u)?;
    let (at_k, at_taus) = basis_table(k, taus, u);
    let lp = LinearProgram {
        objective: vec![T::one(); taus.len()],
        constant: T::one(),
        constraints: at_k
            .into_iter()
            .enumerate()
            .map(|(j, fk)| Constraint {
                coeffs: at_taus.iter().map(|row| -row[j].clone()).collect(),
                relation: Relation::Le,
                rhs: fk,
            })
            .collect(),
    };
    Ok(lp.solve())
}

/// Default LP degree `2d - 1`.
pub fn default_degree(d: usize) -> usize {
    (2 * d).saturating_sub(1).max(1)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceTerm {
    pub i: usize,
    pub coefficient: f64,
    pub trace: i128,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenTerm {
    pub eigenvalue: f64,
    pub value: f64,
    pub vanishes: bool,
}

/// Equality analysis of a certificate against a concrete graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessReport {
    /// `f_i tr F_i(A)` for `i = 1..=deg f`.
    pub trace_terms: Vec<TraceTerm>,
    /// `f` at each nontrivial eigenvalue of the graph.
    pub eigen_terms: Vec<EigenTerm>,
    /// Every trace product and every eigenvalue value vanishes.
    pub tight: bool,
    pub v: usize,
    pub bound: Option<f64>,
    /// `v` equals the bound: exactly for exact certificates, within
    /// [`BOUND_MATCH_TOL`] otherwise.
    pub bound_equals_v: bool,
}

pub fn attainment_check<T: Scalar>(g: &Graph, cert: &BoundCertificate<T>) -> Result<TightnessReport> {
    let spec = spectral::spectrum(g, None)?;
    attainment_check_with(g, &spec, cert)
}

/// [`attainment_check`] against a precomputed spectrum of `g`.
pub fn attainment_check_with<T: Scalar>(
    g: &Graph,
    spec: &Spectrum,
    cert: &BoundCertificate<T>,
) -> Result<TightnessReport> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k != cert.k {
        return Err(Error::DegreeMismatch {
            certificate: cert.k,
            graph: k,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let degree = cert.f.degree();
    let traces = spectral::traces(g, degree)?;
    let coeff_scale = cert
        .f
        .coeffs()
        .iter()
        .map(|c| c.to_f64().abs())
        .fold(1.0, f64::max);
    let trace_terms: Vec<TraceTerm> = (1..=degree)
        .map(|i| {
            let c = cert.f.coeff(i);
            let coefficient_zero = c.abs_value() <= T::slack(cert.slack_tol * coeff_scale);
            TraceTerm {
                i,
                coefficient: c.to_f64(),
                trace: traces[i],
                vanishes: traces[i] == 0 || coefficient_zero,
            }
        })
        .collect();

    let eigen_terms: Vec<EigenTerm> = spec
        .nontrivial()
        .into_iter()
        .map(|tau| match T::from_eigenvalue(tau, spec.tol) {
            Some(t) => {
                let value = cert.f.eval(&t);
                let allowed = T::slack(cert.slack_tol * cert.f.eval_magnitude(&t).max(1.0));
                EigenTerm {
                    eigenvalue: tau,
                    value: value.to_f64(),
                    vanishes: value.abs_value() <= allowed,
                }
            }
            None => {
                let coeffs = cert.coeffs_f64();
                let approx = FBasisPolynomial::new(cert.k, coeffs).expect("same shape");
                let value = approx.eval(&tau);
                let allowed = cert.slack_tol * approx.eval_magnitude(&tau).max(1.0);
                EigenTerm {
                    eigenvalue: tau,
                    value,
                    vanishes: value.abs() <= allowed,
                }
            }
        })
        .collect();

    let tight = cert.is_valid()
        && trace_terms.iter().all(|t| t.vanishes)
        && eigen_terms.iter().all(|t| t.vanishes);
    let v = g.vertex_count();
    let bound_equals_v = match &cert.bound {
        Some(b) if T::EXACT => *b == T::from_i64(v as i64),
        Some(b) => (b.to_f64() - v as f64).abs() <= BOUND_MATCH_TOL,
        None => false,
    };
    Ok(TightnessReport {
        trace_terms,
        eigen_terms,
        tight,
        v,
        bound: cert.bound.as_ref().map(Scalar::to_f64),
        bound_equals_v,
    })
}

/// Gap `dual - primal` when both LPs are optimal.
pub fn duality_gap<T: Scalar>(primal: &LpSolution<T>, dual: &LpSolution<T>) -> Option<T> {
    (primal.status == LpStatus::Optimal && dual.status == LpStatus::Optimal)
        .then(|| dual.objective.clone() - primal.objective.clone())
}
