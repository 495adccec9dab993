//! End-to-end certification of a graph as an extremal expander.
//!
//! A connected `k`-regular graph with `d + 1` distinct eigenvalues and girth
//! `g >= 2d` attains the LP bound of the certificate
//! `(x - tau_1) prod_{i>=2} (x - tau_i)^2`, which forces every `k`-regular
//! graph of the same order to have second eigenvalue at least `tau_1`. The
//! report records each ingredient so a failure can be traced to its cause.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, IntersectionArray};
use crate::lpbound::{
    attainment_check_with, certificate_from_spectrum_with_tol, BoundCertificate, Conditions,
    TightnessReport, DEFAULT_SLACK_TOL,
};
use crate::scalar::Scalar;
use crate::spectral::{self, Spectrum, SPECTRUM_CAP};

pub const SCHEMA_VERSION: u32 = 1;

/// `1 + k sum_{j<d} (k-1)^j`: the largest order of a `k`-regular graph with
/// `d + 1` distinct eigenvalues.
pub fn moore_bound(k: u32, d: u32) -> Result<u128> {
    if k < 2 {
        return Err(Error::DegreeTooSmall(k));
    }
    if d < 1 {
        return Err(Error::InvalidArgument("moore_bound needs d >= 1".into()));
    }
    let overflow = || Error::Overflow("Moore bound");
    let mut sum: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..d {
        sum = sum.checked_add(power).ok_or_else(overflow)?;
        power = power.checked_mul(u128::from(k - 1)).ok_or_else(overflow)?;
    }
    sum.checked_mul(u128::from(k))
        .and_then(|s| s.checked_add(1))
        .ok_or_else(overflow)
}

/// Smallest order of a `k`-regular graph of girth `2e + 1`.
pub fn tutte_bound(k: u32, e: u32) -> Result<u128> {
    moore_bound(k, e)
}

/// Intersection array `{k, k-1, ..., k-1; 1, ..., 1, c}` of a distance-regular
/// graph of diameter `d` and girth at least `2d`.
pub fn moore_polygon_array(k: u32, d: usize, c: u32) -> Result<IntersectionArray> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("Moore polygons need d >= 2, got {d}")));
    }
    if !(1..=k).contains(&c) {
        return Err(Error::InvalidArgument(format!("c = {c} outside 1..={k}")));
    }
    let mut b = vec![k - 1; d];
    b[0] = k;
    let mut cs = vec![1; d];
    cs[d - 1] = c;
    IntersectionArray::new(k, b, cs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    NotApplicable,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceRegularity {
    pub b: Vec<u32>,
    pub c: Vec<u32>,
}

/// LP certificate summary in floating point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpReport {
    pub bound: Option<f64>,
    pub f_coeffs: Vec<f64>,
    pub conditions: Conditions,
    /// Valid certificate, every equality condition met and `v` = bound.
    pub tight: bool,
    /// Whether the certificate was built in exact rational arithmetic.
    pub exact: bool,
}

impl LpReport {
    fn new<T: Scalar>(cert: &BoundCertificate<T>, tightness: &TightnessReport) -> Self {
        Self {
            bound: cert.bound.as_ref().map(Scalar::to_f64),
            f_coeffs: cert.coeffs_f64(),
            conditions: cert.conditions.clone(),
            tight: tightness.tight && tightness.bound_equals_v,
            exact: T::EXACT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificationReport {
    pub schema: u32,
    pub v: usize,
    pub k: Option<u32>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub d: Option<usize>,
    pub spectrum: Option<Vec<(f64, usize)>>,
    pub moore_bound: Option<u128>,
    pub tutte_bound: Option<u128>,
    pub is_moore: bool,
    pub moore_polygon_c: Option<u32>,
    pub distance_regular: Option<DistanceRegularity>,
    pub lp: Option<LpReport>,
    pub verdict: Verdict,
    pub reason: String,
}

impl CertificationReport {
    fn not_applicable(v: usize, k: Option<u32>, reason: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            v,
            k,
            girth: None,
            diameter: None,
            d: None,
            spectrum: None,
            moore_bound: None,
            tutte_bound: None,
            is_moore: false,
            moore_polygon_c: None,
            distance_regular: None,
            lp: None,
            verdict: Verdict::NotApplicable,
            reason: reason.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyOptions {
    /// Eigenvalue clustering tolerance; `None` uses the spectral default.
    pub cluster_tol: Option<f64>,
    pub slack_tol: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            cluster_tol: None,
            slack_tol: DEFAULT_SLACK_TOL,
        }
    }
}

pub fn certify(g: &Graph) -> CertificationReport {
    certify_with(g, &CertifyOptions::default())
}

pub fn certify_with(g: &Graph, opts: &CertifyOptions) -> CertificationReport {
    let v = g.vertex_count();
    let Some(k) = g.regularity() else {
        return CertificationReport::not_applicable(v, None, "not regular");
    };
    if !g.is_connected() {
        return CertificationReport::not_applicable(v, Some(k), "disconnected");
    }
    if k < 2 {
        return CertificationReport::not_applicable(v, Some(k), "degree below 2: no cycles");
    }
    if v > SPECTRUM_CAP {
        return CertificationReport::not_applicable(
            v,
            Some(k),
            format!("{v} vertices exceed the eigensolver cap of {SPECTRUM_CAP}"),
        );
    }
    let spec = match spectral::spectrum(g, opts.cluster_tol) {
        Ok(s) => s,
        Err(e) => {
            let mut r = CertificationReport::not_applicable(v, Some(k), e.to_string());
            r.verdict = Verdict::Failed;
            return r;
        }
    };
    match assemble(g, k, &spec, opts) {
        Ok(report) => report,
        Err(e) => {
            let mut r = CertificationReport::not_applicable(v, Some(k), e.to_string());
            r.spectrum = Some(spectrum_pairs(&spec));
            r.d = Some(spec.d());
            r.verdict = Verdict::Failed;
            r
        }
    }
}

fn spectrum_pairs(spec: &Spectrum) -> Vec<(f64, usize)> {
    spec.entries.iter().map(|e| (e.value, e.multiplicity)).collect()
}

fn assemble(g: &Graph, k: u32, spec: &Spectrum, opts: &CertifyOptions) -> Result<CertificationReport> {
    let v = g.vertex_count();
    let girth = g.girth().ok_or(Error::Acyclic)?;
    let diameter = g.diameter()?;
    let d = spec.d();
    let moore = moore_bound(k, d as u32)?;
    let tutte = if girth % 2 == 1 {
        Some(tutte_bound(k, ((girth - 1) / 2) as u32)?)
    } else {
        None
    };
    let array = g.is_distance_regular()?;

    let lp = match spec.exact_nontrivial(spec.tol) {
        Some(taus) => lp_report::<BigRational>(g, k, spec, &taus, opts.slack_tol)?,
        None => lp_report::<f64>(g, k, spec, &spec.nontrivial(), opts.slack_tol)?,
    };

    let mut failures: Vec<String> = Vec::new();
    if girth + 1 >= 2 * d {
        if array.is_none() {
            failures.push(format!("girth {girth} >= 2d - 1 but the graph is not distance-regular"));
        }
        if diameter != d {
            failures.push(format!("girth {girth} >= 2d - 1 but diameter {diameter} != d = {d}"));
        }
    }
    let mut moore_polygon_c = None;
    if girth >= 2 * d && d >= 2 {
        if let Some(a) = &array {
            let c = *a.c.last().expect("d >= 2");
            if moore_polygon_array(k, d, c).ok().as_ref() == Some(a) {
                moore_polygon_c = Some(c);
            } else {
                failures.push("intersection array is not a Moore polygon array".into());
            }
        }
    }

    let (verdict, reason) = if girth >= 2 * d {
        if !lp.conditions.all_hold() {
            failures.push("certificate conditions fail".into());
        } else if !lp.tight {
            failures.push("certificate bound is not attained".into());
        }
        if failures.is_empty() {
            (
                Verdict::Certified,
                format!("girth {girth} >= 2d = {}; LP bound {v} attained", 2 * d),
            )
        } else {
            (Verdict::Failed, failures.join("; "))
        }
    } else if !failures.is_empty() {
        (Verdict::Failed, failures.join("; "))
    } else {
        (
            Verdict::NotApplicable,
            format!("girth {girth} < 2d = {}", 2 * d),
        )
    };

    Ok(CertificationReport {
        schema: SCHEMA_VERSION,
        v,
        k: Some(k),
        girth: Some(girth),
        diameter: Some(diameter),
        d: Some(d),
        spectrum: Some(spectrum_pairs(spec)),
        moore_bound: Some(moore),
        tutte_bound: tutte,
        is_moore: moore == v as u128,
        moore_polygon_c,
        distance_regular: array.map(|a| DistanceRegularity { b: a.b, c: a.c }),
        lp: Some(lp),
        verdict,
        reason,
    })
}

fn lp_report<T: Scalar>(
    g: &Graph,
    k: u32,
    spec: &Spectrum,
    taus: &[T],
    slack_tol: f64,
) -> Result<LpReport> {
    let cert = certificate_from_spectrum_with_tol(k, taus, slack_tol)?;
    let tightness = attainment_check_with(g, spec, &cert)?;
    Ok(LpReport::new(&cert, &tightness))
}
