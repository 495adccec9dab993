//! Dense two-phase tableau simplex with Bland's rule.
//!
//! Sized for the bound LPs: a few dozen rows and columns at most. Works over
//! any [`Scalar`]; with `BigRational` every pivot is exact.

use serde::Serialize;

use crate::scalar::Scalar;

/// Pivot threshold used for floating-point tableaux.
const FLOAT_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

/// `maximize constant + objective . x` subject to `constraints`, `x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram<T> {
    pub objective: Vec<T>,
    pub constant: T,
    pub constraints: Vec<Constraint<T>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpSolution<T> {
    pub status: LpStatus,
    /// Optimal value including the constant term; meaningful only when optimal.
    pub objective: T,
    pub variables: Vec<T>,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    cols: usize,
    eps: T,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, r: usize) -> &T {
        &self.rows[r][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize, objective: &mut [T]) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / p.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
        if !objective[c].is_zero() {
            let factor = objective[c].clone();
            for (x, y) in objective.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule on `objective`, a reduced-profit row whose last entry
    /// holds minus the current objective value. Columns at or after `limit`
    /// never enter. Returns false when unbounded.
    fn optimize(&mut self, objective: &mut [T], limit: usize) -> bool {
        loop {
            let Some(c) = (0..limit).find(|&j| objective[j] > self.eps) else {
                return true;
            };
            let mut leave: Option<(usize, T)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if *a <= self.eps {
                    continue;
                }
                let ratio = self.rhs(r).clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, c, objective);
        }
    }
}

impl<T: Scalar> LinearProgram<T> {
    pub fn solve(&self) -> LpSolution<T> {
        let n = self.objective.len();
        let m = self.constraints.len();
        let eps = T::slack(FLOAT_EPS);

        // Normalize to nonnegative right-hand sides.
        let rows: Vec<(Vec<T>, Relation, T)> = self
            .constraints
            .iter()
            .map(|c| {
                let mut coeffs = c.coeffs.clone();
                coeffs.resize(n, T::zero());
                if c.rhs < T::zero() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                    };
                    (coeffs.into_iter().map(|x| -x).collect(), flipped, -c.rhs.clone())
                } else {
                    (coeffs, c.relation, c.rhs.clone())
                }
            })
            .collect();

        // Columns: originals, one slack/surplus per row, then artificials.
        let artificial_rows: Vec<usize> =
            (0..m).filter(|&i| rows[i].1 == Relation::Ge).collect();
        let first_artificial = n + m;
        let cols = first_artificial + artificial_rows.len();
        let mut tab = Tableau {
            rows: Vec::with_capacity(m),
            basis: Vec::with_capacity(m),
            cols,
            eps: eps.clone(),
        };
        for (i, (coeffs, rel, rhs)) in rows.into_iter().enumerate() {
            let mut row = coeffs;
            row.resize(cols + 1, T::zero());
            row[n + i] = match rel {
                Relation::Le => T::one(),
                Relation::Ge => -T::one(),
            };
            row[cols] = rhs;
            match artificial_rows.iter().position(|&r| r == i) {
                Some(a) => {
                    row[first_artificial + a] = T::one();
                    tab.basis.push(first_artificial + a);
                }
                None => tab.basis.push(n + i),
            }
            tab.rows.push(row);
        }

        if !artificial_rows.is_empty() {
            // Phase 1: maximize -(sum of artificials).
            let mut phase1 = vec![T::zero(); cols + 1];
            for &r in &artificial_rows {
                for (x, y) in phase1.iter_mut().zip(&tab.rows[r]) {
                    *x = x.clone() + y.clone();
                }
            }
            for a in 0..artificial_rows.len() {
                phase1[first_artificial + a] = T::zero();
            }
            tab.optimize(&mut phase1, first_artificial);
            if phase1[cols] > eps {
                return LpSolution {
                    status: LpStatus::Infeasible,
                    objective: T::zero(),
                    variables: vec![T::zero(); n],
                };
            }
            // Drive artificials still basic (at zero) out of the basis.
            let mut r = 0;
            while r < tab.rows.len() {
                if tab.basis[r] >= first_artificial {
                    let entering = (0..first_artificial)
                        .find(|&j| tab.rows[r][j].abs_value() > eps);
                    match entering {
                        Some(c) => tab.pivot(r, c, &mut phase1),
                        None => {
                            tab.rows.remove(r);
                            tab.basis.remove(r);
                            continue;
                        }
                    }
                }
                r += 1;
            }
        }

        // Phase 2 objective in reduced form.
        let mut obj = vec![T::zero(); cols + 1];
        for (x, c) in obj.iter_mut().zip(&self.objective) {
            *x = c.clone();
        }
        for r in 0..tab.rows.len() {
            let b = tab.basis[r];
            if b < n && !self.objective[b].is_zero() {
                let factor = self.objective[b].clone();
                for (x, y) in obj.iter_mut().zip(&tab.rows[r]) {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
        if !tab.optimize(&mut obj, first_artificial) {
            return LpSolution {
                status: LpStatus::Unbounded,
                objective: T::zero(),
                variables: vec![T::zero(); n],
            };
        }
        let mut variables = vec![T::zero(); n];
        for (r, &b) in tab.basis.iter().enumerate() {
            if b < n {
                variables[b] = tab.rhs(r).clone();
            }
        }
        LpSolution {
            status: LpStatus::Optimal,
            objective: self.constant.clone() - obj[cols].clone(),
            variables,
        }
    }
}
