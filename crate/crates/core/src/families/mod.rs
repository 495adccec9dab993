//! Deterministic constructions of the regular graphs that meet the LP bound.
//!
//! Every constructor numbers vertices canonically, so the same spec always
//! yields the same graph6 string.

mod field;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use field::{FiniteField, SUPPORTED_ORDERS};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count a Kneser spec may produce.
pub const KNESER_CAP: usize = 512;

/// A named family member, written on the command line as `name[:params]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize),
    Petersen,
    Kneser { n: usize, t: usize },
    Clebsch,
    HoffmanSingleton,
    /// Point-line incidence graph of the projective plane `PG(2, q)`.
    IncidencePg2(u32),
    /// Point-line incidence graph of the generalized quadrangle `GQ(q, q)`.
    IncidenceGq(u32),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::CompleteBipartite(k) => write!(f, "complete_bipartite:{k}"),
            Self::Petersen => f.write_str("petersen"),
            Self::Kneser { n, t } => write!(f, "kneser:{n},{t}"),
            Self::Clebsch => f.write_str("clebsch"),
            Self::HoffmanSingleton => f.write_str("hoffman_singleton"),
            Self::IncidencePg2(q) => write!(f, "pg2:{q}"),
            Self::IncidenceGq(q) => write!(f, "gq:{q}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedFamily(format!("cannot parse family spec {s:?}"));
        let (name, params) = match s.trim().split_once(':') {
            Some((name, params)) => (name, Some(params)),
            None => (s.trim(), None),
        };
        let nums: Vec<usize> = match params {
            Some(p) => p
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        let spec = match (name.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("cycle", &[n]) => Self::Cycle(n),
            ("complete", &[n]) => Self::Complete(n),
            ("complete_bipartite" | "kk", &[k]) => Self::CompleteBipartite(k),
            ("petersen", &[]) => Self::Petersen,
            ("kneser", &[n, t]) => Self::Kneser { n, t },
            ("clebsch", &[]) => Self::Clebsch,
            ("hoffman_singleton" | "hs", &[]) => Self::HoffmanSingleton,
            ("pg2", &[q]) => Self::IncidencePg2(u32::try_from(q).map_err(|_| bad())?),
            ("gq", &[q]) => Self::IncidenceGq(u32::try_from(q).map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `t`-subsets of `0..n` in lexicographic order, as bitmasks.
fn subsets(n: usize, t: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for x in start..=n - left {
            rec(x + 1, n, left - 1, cur | 1 << x, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, t, 0, &mut out);
    out
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let unsupported = |msg: String| Err(Error::UnsupportedFamily(msg));
        match *self {
            Self::Cycle(n) if n < 3 => unsupported(format!("cycle needs n >= 3, got {n}")),
            Self::Complete(n) if n < 2 => unsupported(format!("complete needs n >= 2, got {n}")),
            Self::CompleteBipartite(k) if k < 1 => {
                unsupported("complete_bipartite needs k >= 1".into())
            }
            Self::Kneser { n, t } if t < 1 || n < 2 * t + 1 || n > 63 => {
                unsupported(format!("kneser needs t >= 1 and 2t + 1 <= n <= 63, got n = {n}, t = {t}"))
            }
            Self::Kneser { n, t } if binomial(n, t) > KNESER_CAP => unsupported(format!(
                "kneser:{n},{t} has {} vertices, over the cap of {KNESER_CAP}",
                binomial(n, t)
            )),
            Self::IncidencePg2(q) => FiniteField::new(q).map(|_| ()),
            Self::IncidenceGq(q) if q != 2 => {
                unsupported(format!("gq is only shipped for q = 2, got {q}"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            Self::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            Self::Complete(n) => {
                Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
            }
            Self::CompleteBipartite(k) => {
                Graph::from_edges(2 * k, (0..k).flat_map(|a| (k..2 * k).map(move |b| (a, b))))
            }
            Self::Petersen => kneser(5, 2),
            Self::Kneser { n, t } => kneser(n, t),
            Self::Clebsch => clebsch(),
            Self::HoffmanSingleton => hoffman_singleton(),
            Self::IncidencePg2(q) => incidence_pg2(q),
            Self::IncidenceGq(_) => incidence_gq2(),
        }
    }

    pub fn expected_profile(&self) -> Result<Profile> {
        self.validate()?;
        let profile = match *self {
            Self::Cycle(n) => {
                let mut spectrum = vec![(2.0, 1)];
                for j in 1..=(n - 1) / 2 {
                    let x = 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos();
                    spectrum.push((x, 2));
                }
                if n % 2 == 0 {
                    spectrum.push((-2.0, 1));
                }
                Profile::new(n, 2, Some(n), spectrum)
            }
            Self::Complete(n) => {
                let girth = (n >= 3).then_some(3);
                Profile::new(n, n - 1, girth, vec![((n - 1) as f64, 1), (-1.0, n - 1)])
            }
            Self::CompleteBipartite(k) => {
                if k < 2 {
                    return Err(Error::UnsupportedFamily(
                        "complete_bipartite:1 is a single edge with no profile".into(),
                    ));
                }
                let kf = k as f64;
                Profile::new(2 * k, k, Some(4), vec![(kf, 1), (0.0, 2 * k - 2), (-kf, 1)])
            }
            Self::Petersen => Profile::new(10, 3, Some(5), vec![(3.0, 1), (1.0, 5), (-2.0, 4)]),
            Self::Kneser { n, t } => kneser_profile(n, t),
            Self::Clebsch => Profile::new(16, 5, Some(4), vec![(5.0, 1), (1.0, 10), (-3.0, 5)]),
            Self::HoffmanSingleton => {
                Profile::new(50, 7, Some(5), vec![(7.0, 1), (2.0, 28), (-3.0, 21)])
            }
            Self::IncidencePg2(q) => {
                let q = q as usize;
                let points = q * q + q + 1;
                let (k, s) = ((q + 1) as f64, (q as f64).sqrt());
                Profile::new(
                    2 * points,
                    q + 1,
                    Some(6),
                    vec![(k, 1), (s, q * q + q), (-s, q * q + q), (-k, 1)],
                )
            }
            Self::IncidenceGq(_) => Profile::new(
                30,
                3,
                Some(8),
                vec![(3.0, 1), (2.0, 9), (0.0, 10), (-2.0, 9), (-3.0, 1)],
            ),
        };
        Ok(profile)
    }

    /// The generated family members listed in the extremal-expander table,
    /// in display order.
    pub fn table_rows() -> Vec<FamilySpec> {
        vec![
            Self::Cycle(5),
            Self::Cycle(7),
            Self::Complete(4),
            Self::CompleteBipartite(3),
            Self::IncidencePg2(2),
            Self::IncidencePg2(3),
            Self::IncidencePg2(4),
            Self::IncidencePg2(5),
            Self::IncidencePg2(7),
            Self::IncidencePg2(8),
            Self::IncidenceGq(2),
            Self::Petersen,
            Self::HoffmanSingleton,
            Self::Kneser { n: 7, t: 3 },
            Self::Clebsch,
        ]
    }
}

/// Order, degree, girth and adjacency spectrum a family member must have.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Profile {
    pub v: usize,
    pub k: usize,
    pub girth: Option<usize>,
    /// Distinct eigenvalues, decreasing, with multiplicities.
    pub spectrum: Vec<(f64, usize)>,
}

impl Profile {
    fn new(v: usize, k: usize, girth: Option<usize>, mut spectrum: Vec<(f64, usize)>) -> Self {
        spectrum.sort_by(|a, b| b.0.total_cmp(&a.0));
        Self { v, k, girth, spectrum }
    }
}

fn kneser_profile(n: usize, t: usize) -> Profile {
    let spectrum = (0..=t)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let value = sign * binomial(n - t - i, t - i) as f64;
            let mult = binomial(n, i) - if i == 0 { 0 } else { binomial(n, i - 1) };
            (value, mult)
        })
        .collect();
    let girth = match (n, t) {
        (_, 1) => 3,
        (n, t) if n >= 3 * t => 3,
        (n, t) if n >= 2 * t + 2 => 4,
        (_, 2) => 5,
        _ => 6,
    };
    Profile::new(binomial(n, t), binomial(n - t, t), Some(girth), spectrum)
}

/// Disjointness graph on the `t`-subsets of an `n`-set.
fn kneser(n: usize, t: usize) -> Result<Graph> {
    let sets = subsets(n, t);
    let edges = (0..sets.len())
        .flat_map(|a| (a + 1..sets.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| sets[a] & sets[b] == 0);
    Graph::from_edges(sets.len(), edges)
}

/// The folded 5-cube: 4-bit words adjacent at Hamming distance 1 or 4.
fn clebsch() -> Result<Graph> {
    let edges = (0..16usize)
        .flat_map(|a| (a + 1..16).map(move |b| (a, b)))
        .filter(|&(a, b)| {
            let x = a ^ b;
            x.count_ones() == 1 || x == 15
        });
    Graph::from_edges(16, edges)
}

/// Five pentagons `P_h` and five pentagrams `Q_i`; vertex `j` of `P_h` is
/// joined to vertex `h i + j (mod 5)` of `Q_i`.
fn hoffman_singleton() -> Result<Graph> {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    Graph::from_edges(50, edges)
}

/// Normalised representatives of the points of `PG(2, q)`: first nonzero
/// coordinate equal to one, in lexicographic order.
fn projective_points(q: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Points `0..N` and lines `N..2N` of `PG(2, q)`, with `N = q^2 + q + 1`.
fn incidence_pg2(q: u32) -> Result<Graph> {
    let field = FiniteField::new(q)?;
    let points = projective_points(q);
    let n = points.len();
    let incident: Vec<Vec<usize>> = points
        .iter()
        .map(|p| (0..n).filter(|&l| field.dot(p, &points[l]) == 0).collect())
        .collect();
    check_plane_axioms(q as usize, &incident)?;
    let edges = incident
        .iter()
        .enumerate()
        .flat_map(|(p, lines)| lines.iter().map(move |&l| (p, n + l)));
    Graph::from_edges(2 * n, edges)
}

/// Every point on `q + 1` lines and any two points on exactly one common line.
fn check_plane_axioms(q: usize, incident: &[Vec<usize>]) -> Result<()> {
    let n = incident.len();
    if n != q * q + q + 1 {
        return Err(Error::UnsupportedFamily(format!("PG(2,{q}) has {n} points")));
    }
    for (p, lines) in incident.iter().enumerate() {
        if lines.len() != q + 1 {
            return Err(Error::UnsupportedFamily(format!(
                "point {p} of PG(2,{q}) lies on {} lines",
                lines.len()
            )));
        }
        for (r, other) in incident.iter().enumerate().skip(p + 1) {
            let common = lines.iter().filter(|l| other.binary_search(l).is_ok()).count();
            if common != 1 {
                return Err(Error::UnsupportedFamily(format!(
                    "points {p} and {r} of PG(2,{q}) share {common} lines"
                )));
            }
        }
    }
    Ok(())
}

/// `GQ(2, 2)`: points are the 15 pairs from a 6-set, lines the 15 perfect
/// matchings, incidence is membership.
fn incidence_gq2() -> Result<Graph> {
    let pairs = subsets(6, 2);
    let mut matchings: Vec<[u64; 3]> = Vec::new();
    for &a in &pairs {
        for &b in &pairs {
            for &c in &pairs {
                if a < b && b < c && a & b == 0 && a & c == 0 && b & c == 0 {
                    matchings.push([a, b, c]);
                }
            }
        }
    }
    let n = pairs.len();
    let edges = matchings.iter().enumerate().flat_map(|(l, m)| {
        let pairs = &pairs;
        m.iter()
            .map(move |pair| (pairs.iter().position(|p| p == pair).unwrap(), n + l))
    });
    Graph::from_edges(2 * n, edges.collect::<Vec<_>>())
}
