//! Orthogonal polynomials of the homogeneous tree of degree `k`.
//!
//! `F_0 = 1`, `F_1 = x`, `F_2 = x^2 - k` and
//! `F_i = x F_{i-1} - (k-1) F_{i-2}` for `i >= 3`. Evaluated at the adjacency
//! matrix of a `k`-regular graph, `F_i` counts non-backtracking walks of
//! length `i`. The partial sums `G_i = F_0 + ... + F_i` are tracked alongside.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest polynomial degree accepted by the basis conversions.
pub const MAX_DEGREE: usize = 64;

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        Err(Error::DegreeTooSmall(k))
    } else {
        Ok(())
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree > MAX_DEGREE {
        Err(Error::DegreeTooLarge(degree))
    } else {
        Ok(())
    }
}

/// A polynomial in the monomial basis `1, x, x^2, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> MonomialPolynomial<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self { coeffs: vec![c] }
    }

    /// The monic polynomial `prod (x - r)` over `roots`.
    pub fn from_roots<'a, I>(roots: I) -> Self
    where
        I: IntoIterator<Item = &'a T>,
    {
        roots.into_iter().fold(Self::constant(T::one()), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), T::one()]))
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Index of the last nonzero coefficient; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    fn axpy(&mut self, scale: &T, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), T::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *dst = dst.clone() + scale.clone() * src.clone();
        }
    }

    /// Synthetic division by `x - root`, returning quotient and remainder.
    pub fn div_linear(&self, root: &T) -> (Self, T) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Self::new(Vec::new()), T::zero());
        }
        let mut quotient = vec![T::zero(); n.saturating_sub(1)];
        let mut carry = T::zero();
        for idx in (0..n).rev() {
            let value = self.coeffs[idx].clone() + carry.clone() * root.clone();
            if idx == 0 {
                return (Self::new(quotient), value);
            }
            quotient[idx - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }
}

/// A polynomial expanded over `F_0^{(k)}, F_1^{(k)}, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct FBasisPolynomial<T> {
    k: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> FBasisPolynomial<T> {
    pub fn new(k: u32, coeffs: Vec<T>) -> Result<Self> {
        check_k(k)?;
        check_degree(coeffs.len().saturating_sub(1))?;
        Ok(Self { k, coeffs })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `F_i`, zero past the stored range.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the last stored coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        f_values(self.k, self.degree(), x)
            .into_iter()
            .zip(&self.coeffs)
            .fold(T::zero(), |acc, (f, c)| acc + c.clone() * f)
    }

    /// Sum of `|f_i F_i(x)|`, the scale against which float roundoff in
    /// [`eval`](Self::eval) is judged.
    pub fn eval_magnitude(&self, x: &T) -> f64 {
        f_values(self.k, self.degree(), x)
            .into_iter()
            .zip(&self.coeffs)
            .map(|(f, c)| (c.clone() * f).to_f64().abs())
            .sum()
    }

    pub fn to_monomial(&self) -> MonomialPolynomial<T> {
        let basis = f_monomials::<T>(self.k, self.degree());
        let mut out = MonomialPolynomial::new(vec![T::zero(); self.coeffs.len().max(1)]);
        for (c, f) in self.coeffs.iter().zip(&basis) {
            out.axpy(c, f);
        }
        out
    }
}

/// Values `F_0(x), ..., F_n(x)` by forward recurrence.
pub fn f_values<T: Scalar>(k: u32, n: usize, x: &T) -> Vec<T> {
    let kk = T::from_i64(k as i64);
    let km1 = T::from_i64(k as i64 - 1);
    let mut out = Vec::with_capacity(n + 1);
    out.push(T::one());
    if n >= 1 {
        out.push(x.clone());
    }
    if n >= 2 {
        out.push(x.clone() * x.clone() - kk);
    }
    for i in 3..=n {
        let next = x.clone() * out[i - 1].clone() - km1.clone() * out[i - 2].clone();
        out.push(next);
    }
    out
}

/// `F_i^{(k)}(x)` in double precision.
pub fn eval_f(k: u32, i: usize, x: f64) -> Result<f64> {
    check_k(k)?;
    Ok(f_values(k, i, &x)[i])
}

/// Monomial expansions of `F_0, ..., F_n`.
fn f_monomials<T: Scalar>(k: u32, n: usize) -> Vec<MonomialPolynomial<T>> {
    let x = MonomialPolynomial::new(vec![T::zero(), T::one()]);
    let kk = T::from_i64(k as i64);
    let neg_km1 = -T::from_i64(k as i64 - 1);
    let mut out: Vec<MonomialPolynomial<T>> = Vec::with_capacity(n + 1);
    out.push(MonomialPolynomial::constant(T::one()));
    if n >= 1 {
        out.push(x.clone());
    }
    if n >= 2 {
        out.push(MonomialPolynomial::new(vec![-kk, T::zero(), T::one()]));
    }
    for i in 3..=n {
        let mut next = out[i - 1].mul(&x);
        next.axpy(&neg_km1, &out[i - 2]);
        out.push(next);
    }
    out
}

/// Monomial coefficients of `F_i^{(k)}`; exact when `T` is exact.
pub fn f_as_monomial<T: Scalar>(k: u32, i: usize) -> Result<MonomialPolynomial<T>> {
    check_k(k)?;
    check_degree(i)?;
    Ok(f_monomials(k, i).swap_remove(i))
}

/// Rewrites `p` over the `F^{(k)}` basis by leading-term elimination.
pub fn to_f_basis<T: Scalar>(k: u32, p: &MonomialPolynomial<T>) -> Result<FBasisPolynomial<T>> {
    check_k(k)?;
    let n = p.degree();
    check_degree(n)?;
    let basis = f_monomials::<T>(k, n);
    let mut rest = p.coeffs.clone();
    rest.resize(n + 1, T::zero());
    let mut out = vec![T::zero(); n + 1];
    // Every F_i is monic of degree i.
    for i in (0..=n).rev() {
        let lead = rest[i].clone();
        if lead.is_zero() {
            continue;
        }
        for (r, b) in rest.iter_mut().zip(basis[i].coeffs()) {
            *r = r.clone() - lead.clone() * b.clone();
        }
        out[i] = lead;
    }
    FBasisPolynomial::new(k, out)
}

/// `G_i^{(k)}(x) = F_0(x) + ... + F_i(x)`.
pub fn eval_g(k: u32, i: usize, x: f64) -> Result<f64> {
    check_k(k)?;
    Ok(f_values(k, i, &x).into_iter().sum())
}

/// `G_i^{(k)}` through the quotient `(F_{i+1} - (k-1) F_i) / (x - k)`.
///
/// At `x = k` the removable singularity is filled with the partial sum.
pub fn eval_g_quotient(k: u32, i: usize, x: f64) -> Result<f64> {
    check_k(k)?;
    if i == 0 || x == k as f64 {
        return eval_g(k, i, x);
    }
    let f = f_values(k, i + 1, &x);
    Ok((f[i + 1] - (k as f64 - 1.0) * f[i]) / (x - k as f64))
}

/// Divides `F_{i+1} - (k-1) F_i` by `x - k`, returning quotient and remainder.
///
/// The remainder vanishes for `i >= 1`; at `i = 0` it is 1 and `G_0 = 1` is
/// defined directly.
pub fn g_quotient<T: Scalar>(k: u32, i: usize) -> Result<(MonomialPolynomial<T>, T)> {
    check_k(k)?;
    check_degree(i + 1)?;
    let basis = f_monomials::<T>(k, i + 1);
    let mut numer = basis[i + 1].clone();
    numer.axpy(&-T::from_i64(k as i64 - 1), &basis[i]);
    Ok(numer.div_linear(&T::from_i64(k as i64)))
}

/// Coefficients `p_l(i, j)` with `F_i F_j = sum_l p_l(i, j) F_l`, `l = 0..=i+j`.
pub fn linearize<T: Scalar>(k: u32, i: usize, j: usize) -> Result<Vec<T>> {
    check_k(k)?;
    check_degree(i + j)?;
    let basis = f_monomials::<T>(k, i.max(j));
    let product = basis[i].mul(&basis[j]);
    let mut coeffs = to_f_basis(k, &product)?.coeffs;
    coeffs.resize(i + j + 1, T::zero());
    Ok(coeffs)
}

/// Orthogonality weight `sqrt(4q^2 - x^2) / (k^2 - x^2)` with `q^2 = k - 1`.
pub fn weight(k: u32, x: f64) -> Result<f64> {
    check_k(k)?;
    let four_q2 = 4.0 * (k as f64 - 1.0);
    if x * x > four_q2 {
        return Err(Error::InvalidArgument(format!(
            "weight is supported on |x| <= 2 sqrt(k - 1), got x = {x}"
        )));
    }
    let k2 = (k as f64) * (k as f64);
    Ok((four_q2 - x * x).sqrt() / (k2 - x * x))
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for m in 2..=n {
                let p2 = ((2 * m - 1) as f64 * x * p1 - (m - 1) as f64 * p0) / m as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// `int_{-2q}^{2q} F_i(x) F_j(x) w(x) dx` by composite Gauss-Legendre.
///
/// Integrates in `theta` with `x = 2q cos(theta)`, which turns the square-root
/// endpoint behaviour of `w` into a smooth periodic integrand.
pub fn weighted_inner_product(k: u32, i: usize, j: usize, panels: usize, order: usize) -> Result<f64> {
    check_k(k)?;
    let two_q = 2.0 * (k as f64 - 1.0).sqrt();
    let k2 = (k as f64) * (k as f64);
    let n = i.max(j);
    let (nodes, weights) = gauss_legendre(order);
    let h = std::f64::consts::PI / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        let mut panel = 0.0;
        for (t, w) in nodes.iter().zip(&weights) {
            let theta = mid + 0.5 * h * t;
            let (s, c) = theta.sin_cos();
            let x = two_q * c;
            let f = f_values(k, n, &x);
            let jac = (two_q * s) * (two_q * s) / (k2 - x * x);
            panel += w * f[i] * f[j] * jac;
        }
        total += 0.5 * h * panel;
    }
    Ok(total)
}
