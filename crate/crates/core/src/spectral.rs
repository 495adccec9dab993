//! Adjacency spectra and the matrix polynomials `F_i(A)`.

use nalgebra::DMatrix;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::snap_to_integer;

/// Largest vertex count handed to the dense eigensolver.
pub const SPECTRUM_CAP: usize = 512;

/// Default clustering tolerance for a graph of maximum degree `k`.
pub fn default_cluster_tol(k: u32) -> f64 {
    1e-8 * f64::from(k.max(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// Distinct adjacency eigenvalues in decreasing order with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    pub tol: f64,
    pub v: usize,
}

impl Spectrum {
    /// Groups raw eigenvalues whose consecutive gaps are at most `tol`.
    pub fn from_eigenvalues(mut values: Vec<f64>, tol: f64) -> Self {
        let v = values.len();
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<Vec<f64>> = Vec::new();
        for x in values {
            match groups.last_mut() {
                Some(group) if group.last().unwrap() - x <= tol => group.push(x),
                _ => groups.push(vec![x]),
            }
        }
        let entries = groups
            .into_iter()
            .map(|group| SpectrumEntry {
                value: group.iter().sum::<f64>() / group.len() as f64,
                multiplicity: group.len(),
            })
            .collect();
        Self { entries, tol, v }
    }

    /// Number of nontrivial distinct eigenvalues.
    pub fn d(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn largest(&self) -> f64 {
        self.entries[0].value
    }

    /// Distinct eigenvalues after the largest one, decreasing.
    pub fn nontrivial(&self) -> Vec<f64> {
        self.entries.iter().skip(1).map(|e| e.value).collect()
    }

    pub fn second_largest(&self) -> Option<f64> {
        self.entries.get(1).map(|e| e.value)
    }

    /// The nontrivial eigenvalues as exact integers, when every one of them
    /// lies within `tol` of an integer.
    pub fn exact_nontrivial(&self, tol: f64) -> Option<Vec<BigRational>> {
        self.entries
            .iter()
            .skip(1)
            .map(|e| snap_to_integer(e.value, tol))
            .collect()
    }
}

/// Dense adjacency matrix as `f64`.
pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let v = g.vertex_count();
    let mut a = DMatrix::zeros(v, v);
    for (x, y) in g.edges() {
        a[(x, y)] = 1.0;
        a[(y, x)] = 1.0;
    }
    a
}

/// Eigenvalues of the adjacency matrix, unsorted.
pub fn eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    let v = g.vertex_count();
    if v == 0 {
        return Err(Error::InvalidArgument("spectrum of the empty graph".into()));
    }
    if v > SPECTRUM_CAP {
        return Err(Error::TooLarge { v, cap: SPECTRUM_CAP });
    }
    let eig = adjacency_matrix(g)
        .try_symmetric_eigen(f64::EPSILON, 100_000)
        .ok_or(Error::EigenSolver)?;
    Ok(eig.eigenvalues.iter().copied().collect())
}

/// Clustered spectrum; `tol` defaults to [`default_cluster_tol`] of the
/// maximum degree.
pub fn spectrum(g: &Graph, tol: Option<f64>) -> Result<Spectrum> {
    let max_degree = (0..g.vertex_count()).map(|x| g.degree(x)).max().unwrap_or(0);
    let tol = tol.unwrap_or_else(|| default_cluster_tol(max_degree as u32));
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("clustering tolerance must be positive, got {tol}")));
    }
    Ok(Spectrum::from_eigenvalues(eigenvalues(g)?, tol))
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    pub fn adjacency(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut data = vec![0; n * n];
        for (x, y) in g.edges() {
            data[x * n + y] = 1;
            data[y * n + x] = 1;
        }
        Self { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i128 {
        self.data[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[i128] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

fn checked(x: Option<i128>) -> Result<i128> {
    x.ok_or(Error::Overflow("F_i(A)"))
}

/// Successive `F_0(A), F_1(A), ...` for a `k`-regular graph.
pub struct FMatrices<'g> {
    g: &'g Graph,
    k: i128,
    prev: Option<IntMatrix>,
    cur: Option<IntMatrix>,
    index: usize,
}

impl<'g> FMatrices<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        let k = g.regularity().ok_or(Error::NotRegular)?;
        Ok(Self {
            g,
            k: k as i128,
            prev: None,
            cur: None,
            index: 0,
        })
    }

    /// `A * m`, using adjacency lists.
    fn times_adjacency(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let n = m.n;
        let mut data = vec![0i128; n * n];
        for u in 0..n {
            let out = &mut data[u * n..(u + 1) * n];
            for &x in self.g.neighbors(u) {
                for (o, &val) in out.iter_mut().zip(m.row(x)) {
                    *o = checked(o.checked_add(val))?;
                }
            }
        }
        Ok(IntMatrix { n, data })
    }

    fn step(&mut self) -> Result<IntMatrix> {
        let n = self.g.vertex_count();
        let next = match self.index {
            0 => IntMatrix::identity(n),
            1 => IntMatrix::adjacency(self.g),
            i => {
                let cur = self.cur.as_ref().unwrap();
                let prev = self.prev.as_ref().unwrap();
                // F_2 = A F_1 - k F_0, then F_i = A F_{i-1} - (k-1) F_{i-2}
                let c = if i == 2 { self.k } else { self.k - 1 };
                let mut m = self.times_adjacency(cur)?;
                for (o, &p) in m.data.iter_mut().zip(&prev.data) {
                    *o = checked(p.checked_mul(c).and_then(|cp| o.checked_sub(cp)))?;
                }
                m
            }
        };
        self.prev = self.cur.take();
        self.cur = Some(next.clone());
        self.index += 1;
        Ok(next)
    }
}

impl Iterator for FMatrices<'_> {
    type Item = Result<IntMatrix>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.step())
    }
}

/// `F_i^{(k)}(A)` in exact integer arithmetic.
pub fn f_of_a(g: &Graph, i: usize) -> Result<IntMatrix> {
    if i > crate::orthopoly::MAX_DEGREE {
        return Err(Error::DegreeTooLarge(i));
    }
    FMatrices::new(g)?.nth(i).unwrap()
}

/// Traces `tr F_0(A), ..., tr F_n(A)`.
pub fn traces(g: &Graph, n: usize) -> Result<Vec<i128>> {
    FMatrices::new(g)?
        .take(n + 1)
        .map(|m| m.map(|m| m.trace()))
        .collect()
}

/// Girth as the first `i >= 1` with `tr F_i(A) != 0`.
pub fn girth_via_traces(g: &Graph) -> Result<usize> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k < 2 {
        return Err(Error::Acyclic);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cap = 2 * g.vertex_count();
    for (i, m) in FMatrices::new(g)?.enumerate().take(cap + 1).skip(1) {
        if m?.trace() != 0 {
            return Ok(i);
        }
    }
    Err(Error::Acyclic)
}

/// The constant `e` with `sum_{i<d} F_i(A) + F_d(A) / e = J`, and the
/// max-abs residual of that identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HoffmanData {
    pub e: u64,
    pub residual: f64,
}

pub fn hoffman_e(g: &Graph) -> Result<HoffmanData> {
    let spec = spectrum(g, None)?;
    hoffman_e_with(g, &spec)
}

/// [`hoffman_e`] against a precomputed spectrum of `g`.
pub fn hoffman_e_with(g: &Graph, spec: &Spectrum) -> Result<HoffmanData> {
    g.regularity().ok_or(Error::NotRegular)?;
    let dist = g.distances()?;
    let d = spec.d();
    if d == 0 {
        return Err(Error::Hoffman("graph has a single distinct eigenvalue".into()));
    }
    let girth = g.girth().ok_or(Error::Acyclic)?;
    if girth < 2 * d {
        return Err(Error::Hoffman(format!("girth {girth} is below 2d = {}", 2 * d)));
    }
    let mats = FMatrices::new(g)?.take(d + 1).collect::<Result<Vec<_>>>()?;
    let top = &mats[d];
    let v = g.vertex_count();
    let e = (0..v)
        .flat_map(|x| (0..v).map(move |y| (x, y)))
        .filter(|&(x, y)| dist[x][y] == d)
        .map(|(x, y)| top.get(x, y))
        .max()
        .ok_or_else(|| Error::Hoffman("no pairs at distance d".into()))?;
    if e < 1 {
        return Err(Error::Hoffman(format!("candidate e = {e} is not a natural number")));
    }
    let mut residual = 0f64;
    for x in 0..v {
        for y in 0..v {
            let lower: i128 = mats[..d].iter().map(|m| m.get(x, y)).sum();
            let value = lower as f64 + top.get(x, y) as f64 / e as f64;
            residual = residual.max((value - 1.0).abs());
        }
    }
    if residual > 1e-6 {
        return Err(Error::Hoffman(format!(
            "identity fails with e = {e}: residual {residual}"
        )));
    }
    Ok(HoffmanData {
        e: e as u64,
        residual,
    })
}

/// `k - tau_1` for a connected `k`-regular graph.
pub fn spectral_gap(g: &Graph) -> Result<f64> {
    spectral_gap_with(g, &spectrum(g, None)?)
}

pub fn spectral_gap_with(g: &Graph, spec: &Spectrum) -> Result<f64> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tau1 = spec
        .second_largest()
        .ok_or_else(|| Error::InvalidArgument("graph has a single eigenvalue".into()))?;
    Ok(f64::from(k) - tau1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, petersen};

    fn assert_spectrum(spec: &Spectrum, expected: &[(f64, usize)]) {
        assert_eq!(spec.entries.len(), expected.len(), "{spec:?}");
        for (e, &(value, mult)) in spec.entries.iter().zip(expected) {
            assert!((e.value - value).abs() < 1e-9, "{spec:?}");
            assert_eq!(e.multiplicity, mult, "{spec:?}");
        }
    }

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn spectra() {
        assert_spectrum(&spectrum(&petersen(), None).unwrap(), &[(3.0, 1), (1.0, 5), (-2.0, 4)]);
        assert_spectrum(&spectrum(&complete(5), None).unwrap(), &[(4.0, 1), (-1.0, 4)]);
        assert_spectrum(&spectrum(&cycle(4), None).unwrap(), &[(2.0, 1), (0.0, 2), (-2.0, 1)]);
        assert!(spectrum(&Graph::empty(0), None).is_err());
        assert!(matches!(spectrum(&cycle(513), None), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn eigen_residual_contract() {
        let g = petersen();
        let a = adjacency_matrix(&g);
        let eig = a.clone().symmetric_eigen();
        let norm = a.norm();
        for (i, lambda) in eig.eigenvalues.iter().enumerate() {
            let x = eig.eigenvectors.column(i);
            assert!((&a * x - x * *lambda).norm() <= 1e-10 * norm);
        }
    }

    #[test]
    fn f_matrices() {
        let p = petersen();
        assert_eq!(f_of_a(&p, 0).unwrap(), IntMatrix::identity(10));
        assert_eq!(f_of_a(&p, 1).unwrap(), IntMatrix::adjacency(&p));
        let f2 = f_of_a(&p, 2).unwrap();
        let a2 = p.distance_matrix(2).unwrap();
        for x in 0..10 {
            for y in 0..10 {
                assert_eq!(f2.get(x, y), a2[x][y] as i128);
            }
        }
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(f_of_a(&path, 2), Err(Error::NotRegular)));
    }

    #[test]
    fn girth_by_traces() {
        assert_eq!(traces(&cycle(5), 5).unwrap(), vec![5, 0, 0, 0, 0, 10]);
        assert_eq!(girth_via_traces(&cycle(5)).unwrap(), 5);
        assert_eq!(girth_via_traces(&petersen()).unwrap(), 5);
        assert_eq!(girth_via_traces(&complete(4)).unwrap(), 3);
        assert_eq!(girth_via_traces(&complete(2)), Err(Error::Acyclic));
    }

    #[test]
    fn hoffman() {
        let h = hoffman_e(&petersen()).unwrap();
        assert_eq!((h.e, h.residual), (1, 0.0));
        // K_{3,3}: F_2(A) = A^2 - 3I equals 3 on pairs at distance 2
        let h = hoffman_e(&k33()).unwrap();
        assert_eq!((h.e, h.residual), (3, 0.0));
        assert_eq!(hoffman_e(&complete(6)).unwrap().e, 1);
        // C_6 has d = 3 but girth 6 = 2d
        assert_eq!(hoffman_e(&cycle(6)).unwrap().e, 2);
        // prism: girth 3 with several eigenvalues
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(matches!(hoffman_e(&prism), Err(Error::Hoffman(_))));
    }

    #[test]
    fn gaps() {
        assert!((spectral_gap(&complete(4)).unwrap() - 4.0).abs() < 1e-12);
        assert!((spectral_gap(&petersen()).unwrap() - 2.0).abs() < 1e-12);
        assert!((spectral_gap(&cycle(4)).unwrap() - 2.0).abs() < 1e-12);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(spectral_gap(&two), Err(Error::Disconnected));
    }
}
