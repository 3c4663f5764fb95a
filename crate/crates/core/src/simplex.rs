//! Two-phase revised simplex over any [`Scalar`].
//!
//! The basis inverse is kept explicitly as a dense `m × m` matrix and
//! rebuilt from the basis columns every `refactor_every` pivots. Entering
//! columns are priced by Dantzig's largest reduced cost, and ratio-test ties
//! go to the largest pivot element. After `stall_limit` consecutive
//! degenerate pivots the solver switches to Bland's rule (lowest-index
//! entering and leaving variable) until the objective moves again, so it
//! cannot cycle. `PivotRule::Bland` forces Bland's rule throughout.
//!
//! [`solve_float`] does not use this engine: large float models go to a
//! sparse-LU simplex from the `microlp` crate. The generic engine still runs
//! over `f64`/`f32` through [`solve`].

use crate::error::{Error, Result};
use crate::lp::{check_assignment, Assignment, LinearProgram};
use num_traits::Signed;

use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    Bland,
    Dantzig,
}

#[derive(Debug, Clone)]
pub struct SimplexOptions {
    pub rule: PivotRule,
    pub refactor_every: usize,
    /// `None` means `1000 * (rows + columns)`.
    pub max_pivots: Option<usize>,
    /// Consecutive non-improving Dantzig pivots before switching to Bland.
    pub stall_limit: usize,
}

impl SimplexOptions {
    pub fn bland() -> Self {
        SimplexOptions { rule: PivotRule::Bland, ..Self::default() }
    }
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions { rule: PivotRule::Dantzig, refactor_every: 64, max_pivots: None, stall_limit: 1000 }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult<S = Rational> {
    pub status: Status,
    pub objective: Option<S>,
    pub solution: Option<Assignment<S>>,
    /// Basic variable per row. Indices at or above `num_vars` name the
    /// artificial of row `index - num_vars`, left basic at zero on a
    /// redundant row.
    pub basis: Option<Vec<usize>>,
    pub pivots: usize,
    pub phase1_pivots: usize,
    /// Numerical warnings from float runs; always empty for exact runs.
    /// Float results from [`solve_float`] carry no basis.
    pub warnings: Vec<String>,
}

impl<S> SolveResult<S> {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    pub fn degraded(&self) -> bool {
        !self.warnings.is_empty()
    }
}

pub fn solve_exact(lp: &LinearProgram) -> Result<SolveResult<Rational>> {
    solve::<Rational>(lp, &SimplexOptions::default())
}

/// Double-precision solve through `microlp`. The returned point is
/// re-checked against the rows; residuals beyond `1e-6` become warnings.
pub fn solve_float(lp: &LinearProgram) -> Result<SolveResult<f64>> {
    use microlp::{ComparisonOp, OptimizationDirection, Problem};

    let mut p = Problem::new(OptimizationDirection::Maximize);
    let cost = lp.objective_dense::<f64>();
    let vars: Vec<_> = cost.iter().map(|&c| p.add_var(c, (0.0, f64::INFINITY))).collect();
    for row in &lp.rows {
        let expr: Vec<_> = row.coeffs.iter().map(|(j, a)| (vars[*j], a.to_f64())).collect();
        p.add_constraint(&expr[..], ComparisonOp::Eq, row.rhs.to_f64());
    }
    let empty = |status| SolveResult {
        status,
        objective: None,
        solution: None,
        basis: None,
        pivots: 0,
        phase1_pivots: 0,
        warnings: Vec::new(),
    };
    let sol = match p.solve() {
        Ok(microlp::SolveOutcome::Solution(sol)) => sol,
        Ok(microlp::SolveOutcome::Interrupted(_)) => {
            return Err(Error::Internal("float solver interrupted".into()))
        }
        Err(microlp::Error::Infeasible) => return Ok(empty(Status::Infeasible)),
        Err(microlp::Error::Unbounded) => return Ok(empty(Status::Unbounded)),
        Err(e) => return Err(Error::Internal(format!("float solver: {e}"))),
    };
    let x = Assignment { values: vars.iter().map(|&v| sol.var_value(v)).collect() };
    let report = check_assignment(lp, &x)?;
    let warnings = report
        .violations
        .iter()
        .take(5)
        .map(|v| format!("degraded precision: {v:?}"))
        .collect();
    Ok(SolveResult {
        status: Status::Optimal,
        objective: Some(sol.objective()),
        solution: Some(x),
        basis: None,
        pivots: sol.stats().lp_iterations as usize,
        phase1_pivots: 0,
        warnings,
    })
}

pub fn solve<S: Scalar>(lp: &LinearProgram, opts: &SimplexOptions) -> Result<SolveResult<S>> {
    let mut t = Tableau::<S>::new(lp, opts);
    t.run()
}

struct Tableau<'a, S> {
    lp: &'a LinearProgram,
    m: usize,
    n: usize,
    /// Structural columns after row sign adjustment; artificial `n + i` is `e_i`.
    cols: Vec<Vec<(usize, S)>>,
    b: Vec<S>,
    basis: Vec<usize>,
    /// Position in `basis`, or `usize::MAX` when nonbasic.
    position: Vec<usize>,
    binv: Vec<S>,
    xb: Vec<S>,
    pivots: usize,
    phase1_pivots: usize,
    since_refactor: usize,
    cap: usize,
    rule: PivotRule,
    refactor_every: usize,
    stall_limit: usize,
    warnings: Vec<String>,
}

impl<'a, S: Scalar> Tableau<'a, S> {
    fn new(lp: &'a LinearProgram, opts: &SimplexOptions) -> Self {
        let m = lp.num_rows();
        let n = lp.num_vars;
        let sign: Vec<S> = lp
            .rows
            .iter()
            .map(|r| if r.rhs.is_negative() { -S::one() } else { S::one() })
            .collect();
        let mut cols: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for (i, row) in lp.rows.iter().enumerate() {
            for (j, a) in &row.coeffs {
                cols[*j].push((i, S::from_rational(a) * sign[i].clone()));
            }
        }
        let b: Vec<S> = lp
            .rows
            .iter()
            .zip(&sign)
            .map(|(r, s)| S::from_rational(&r.rhs) * s.clone())
            .collect();

        let basis: Vec<usize> = (0..m).map(|i| n + i).collect();
        let mut position = vec![usize::MAX; n + m];
        for (i, &v) in basis.iter().enumerate() {
            position[v] = i;
        }
        let mut binv = vec![S::zero(); m * m];
        for i in 0..m {
            binv[i * m + i] = S::one();
        }
        let rule = opts.rule;
        let cap = opts.max_pivots.unwrap_or(1000 * (m + n));
        Tableau {
            lp,
            m,
            n,
            cols,
            xb: b.clone(),
            b,
            basis,
            position,
            binv,
            pivots: 0,
            phase1_pivots: 0,
            since_refactor: 0,
            cap,
            rule,
            refactor_every: opts.refactor_every.max(1),
            stall_limit: opts.stall_limit,
            warnings: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<SolveResult<S>> {
        // Phase I: maximize minus the sum of artificials.
        let mut phase1 = vec![S::zero(); self.n + self.m];
        for c in phase1.iter_mut().skip(self.n) {
            *c = -S::one();
        }
        let n = self.n;
        let outcome = self.optimize(&phase1, |_| true)?;
        debug_assert!(outcome != Status::Unbounded);
        let infeasibility: S = self
            .basis
            .iter()
            .zip(&self.xb)
            .filter(|(v, _)| **v >= n)
            .fold(S::zero(), |acc, (_, x)| acc + x.clone());
        if infeasibility.is_pos() {
            return Ok(self.finish(Status::Infeasible, None));
        }
        self.drive_out_artificials();
        self.phase1_pivots = self.pivots;

        let mut phase2 = vec![S::zero(); self.n + self.m];
        for (j, c) in &self.lp.objective {
            phase2[*j] = S::from_rational(c);
        }
        let status = self.optimize(&phase2, |j| j < n)?;
        if status == Status::Unbounded {
            return Ok(self.finish(Status::Unbounded, None));
        }
        if !S::EXACT {
            self.refactor();
        }
        Ok(self.finish(Status::Optimal, Some(&phase2)))
    }

    fn finish(&mut self, status: Status, cost: Option<&[S]>) -> SolveResult<S> {
        let (objective, solution, basis) = match cost {
            Some(cost) => {
                let mut x = vec![S::zero(); self.n];
                let mut obj = S::zero();
                for (i, &v) in self.basis.iter().enumerate() {
                    if v < self.n {
                        x[v] = self.xb[i].clone();
                    }
                    obj = obj + cost[v].clone() * self.xb[i].clone();
                }
                (Some(obj), Some(Assignment { values: x }), Some(self.basis.clone()))
            }
            None => (None, None, None),
        };
        SolveResult {
            status,
            objective,
            solution,
            basis,
            pivots: self.pivots,
            phase1_pivots: self.phase1_pivots,
            warnings: std::mem::take(&mut self.warnings),
        }
    }

    /// Runs pivots until no eligible column has a positive reduced cost.
    fn optimize(&mut self, cost: &[S], eligible: impl Fn(usize) -> bool) -> Result<Status> {
        let mut stalled = 0usize;
        let mut y = self.duals(cost);
        loop {
            if self.since_refactor >= self.refactor_every {
                self.refactor();
                y = self.duals(cost);
            }
            let rule = if stalled >= self.stall_limit { PivotRule::Bland } else { self.rule };
            let Some((q, dq)) = self.price(cost, &y, &eligible, rule) else {
                return Ok(Status::Optimal);
            };
            let alpha = self.ftran(q);
            let Some(r) = self.ratio_test(&alpha, rule) else {
                return Ok(Status::Unbounded);
            };
            let theta = self.xb[r].clone() / alpha[r].clone();
            if (dq.clone() * theta).is_pos() {
                stalled = 0;
            } else {
                stalled += 1;
            }
            // y' = y + d_q * (new row r of B^{-1})
            for (k, v) in self.pivot(r, q, &alpha) {
                y[k] = y[k].clone() + dq.clone() * v;
            }
            if self.pivots > self.cap {
                return Err(Error::IterationLimit(self.cap));
            }
        }
    }

    /// `y = c_B^T B^{-1}`.
    fn duals(&self, cost: &[S]) -> Vec<S> {
        let m = self.m;
        let mut y = vec![S::zero(); m];
        for (i, &v) in self.basis.iter().enumerate() {
            let c = &cost[v];
            if c.is_zero() {
                continue;
            }
            let row = &self.binv[i * m..(i + 1) * m];
            for (yk, bk) in y.iter_mut().zip(row) {
                if !bk.is_zero() {
                    *yk = yk.clone() + c.clone() * bk.clone();
                }
            }
        }
        y
    }

    fn reduced_cost(&self, cost: &[S], y: &[S], j: usize) -> S {
        if j >= self.n {
            return cost[j].clone() - y[j - self.n].clone();
        }
        self.cols[j]
            .iter()
            .fold(cost[j].clone(), |acc, (i, a)| acc - y[*i].clone() * a.clone())
    }

    fn price(
        &self,
        cost: &[S],
        y: &[S],
        eligible: &impl Fn(usize) -> bool,
        rule: PivotRule,
    ) -> Option<(usize, S)> {
        let candidates = (0..self.n + self.m).filter(|&j| self.position[j] == usize::MAX && eligible(j));
        match rule {
            PivotRule::Bland => candidates
                .map(|j| (j, self.reduced_cost(cost, y, j)))
                .find(|(_, d)| d.is_pos()),
            PivotRule::Dantzig => {
                let mut best: Option<(usize, S)> = None;
                for j in candidates {
                    let d = self.reduced_cost(cost, y, j);
                    if d.is_pos() && best.as_ref().is_none_or(|(_, bd)| d > *bd) {
                        best = Some((j, d));
                    }
                }
                best
            }
        }
    }

    /// `B^{-1} a_q`.
    fn ftran(&self, q: usize) -> Vec<S> {
        let m = self.m;
        if q >= self.n {
            let k = q - self.n;
            return (0..m).map(|i| self.binv[i * m + k].clone()).collect();
        }
        let mut alpha = vec![S::zero(); m];
        for (k, a) in &self.cols[q] {
            for (i, al) in alpha.iter_mut().enumerate() {
                let bik = &self.binv[i * m + k];
                if !bik.is_zero() {
                    *al = al.clone() + bik.clone() * a.clone();
                }
            }
        }
        alpha
    }

    fn ratio_test(&self, alpha: &[S], rule: PivotRule) -> Option<usize> {
        let mut best: Option<(usize, S)> = None;
        for (i, a) in alpha.iter().enumerate() {
            if !a.is_pos() {
                continue;
            }
            let ratio = self.xb[i].clone() / a.clone();
            let better = match &best {
                None => true,
                Some((bi, br)) => {
                    if S::EXACT {
                        ratio < *br
                            || (ratio == *br
                                && match rule {
                                    PivotRule::Bland => self.basis[i] < self.basis[*bi],
                                    PivotRule::Dantzig => a.abs() > alpha[*bi].abs(),
                                })
                    } else {
                        let tol = S::tolerance();
                        if ratio < br.clone() - tol.clone() {
                            true
                        } else if ratio <= br.clone() + tol {
                            match rule {
                                PivotRule::Bland => self.basis[i] < self.basis[*bi],
                                PivotRule::Dantzig => a.abs() > alpha[*bi].abs(),
                            }
                        } else {
                            false
                        }
                    }
                }
            };
            if better {
                best = Some((i, ratio));
            }
        }
        best.map(|(i, _)| i)
    }

    /// Pivots `q` into position `r` and returns the new sparse row `r` of
    /// `B^{-1}`.
    fn pivot(&mut self, r: usize, q: usize, alpha: &[S]) -> Vec<(usize, S)> {
        let m = self.m;
        let pivot = alpha[r].clone();
        if !S::EXACT && pivot.abs() < S::tolerance() * S::from_i64(100) {
            self.warnings
                .push(format!("small pivot {pivot} at pivot {}", self.pivots + 1));
        }
        let theta = self.xb[r].clone() / pivot.clone();
        for (i, x) in self.xb.iter_mut().enumerate() {
            if i != r && !alpha[i].is_zero() {
                *x = x.clone() - theta.clone() * alpha[i].clone();
                if !S::EXACT && x.is_negligible() {
                    *x = S::zero();
                }
            }
        }
        self.xb[r] = theta;

        let row_r: Vec<(usize, S)> = self.binv[r * m..(r + 1) * m]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v.clone() / pivot.clone()))
            .collect();
        for k in 0..m {
            self.binv[r * m + k] = S::zero();
        }
        for (k, v) in &row_r {
            self.binv[r * m + k] = v.clone();
        }
        for (i, a) in alpha.iter().enumerate() {
            if i == r || a.is_zero() {
                continue;
            }
            for (k, v) in &row_r {
                let cell = &mut self.binv[i * m + k];
                *cell = cell.clone() - a.clone() * v.clone();
            }
        }

        let leaving = self.basis[r];
        self.position[leaving] = usize::MAX;
        self.position[q] = r;
        self.basis[r] = q;
        self.pivots += 1;
        self.since_refactor += 1;
        row_r
    }

    /// After phase I, swaps zero-valued artificials for structural columns
    /// wherever the row allows it. Artificials that cannot leave sit on
    /// redundant rows.
    fn drive_out_artificials(&mut self) {
        let m = self.m;
        for r in 0..m {
            if self.basis[r] < self.n {
                continue;
            }
            let candidate = (0..self.n).find(|&j| {
                self.position[j] == usize::MAX
                    && self.cols[j]
                        .iter()
                        .fold(S::zero(), |acc, (k, a)| acc + self.binv[r * m + k].clone() * a.clone())
                        .abs()
                        > S::tolerance() * S::from_i64(1000)
            });
            if let Some(q) = candidate {
                let alpha = self.ftran(q);
                self.pivot(r, q, &alpha);
            }
        }
    }

    /// Rebuilds `B^{-1}` and `x_B` from the basis columns by Gauss–Jordan
    /// elimination.
    fn refactor(&mut self) {
        let m = self.m;
        let mut bmat = vec![S::zero(); m * m];
        for (k, &v) in self.basis.iter().enumerate() {
            if v >= self.n {
                bmat[(v - self.n) * m + k] = S::one();
            } else {
                for (i, a) in &self.cols[v] {
                    bmat[i * m + k] = a.clone();
                }
            }
        }
        let mut inv = vec![S::zero(); m * m];
        for i in 0..m {
            inv[i * m + i] = S::one();
        }
        let mut used = vec![false; m];
        let mut pivot_row_of = vec![0usize; m];
        for k in 0..m {
            // Exact: sparsest usable row. Float: largest magnitude.
            let mut best: Option<usize> = None;
            for i in 0..m {
                if used[i] || bmat[i * m + k].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(p) => {
                        let take = if S::EXACT {
                            row_nnz(&bmat, i, m) < row_nnz(&bmat, p, m)
                        } else {
                            bmat[i * m + k].abs() > bmat[p * m + k].abs()
                        };
                        Some(if take { i } else { p })
                    }
                };
            }
            let Some(p) = best else {
                self.warnings.push("singular basis during refactorization".into());
                return;
            };
            used[p] = true;
            pivot_row_of[k] = p;
            let pv = bmat[p * m + k].clone();
            let brow: Vec<(usize, S)> = (0..m)
                .filter(|&c| !bmat[p * m + c].is_zero())
                .map(|c| (c, bmat[p * m + c].clone() / pv.clone()))
                .collect();
            let irow: Vec<(usize, S)> = (0..m)
                .filter(|&c| !inv[p * m + c].is_zero())
                .map(|c| (c, inv[p * m + c].clone() / pv.clone()))
                .collect();
            for c in 0..m {
                bmat[p * m + c] = S::zero();
                inv[p * m + c] = S::zero();
            }
            for (c, v) in &brow {
                bmat[p * m + c] = v.clone();
            }
            for (c, v) in &irow {
                inv[p * m + c] = v.clone();
            }
            for i in 0..m {
                if i == p {
                    continue;
                }
                let f = bmat[i * m + k].clone();
                if f.is_zero() {
                    continue;
                }
                for (c, v) in &brow {
                    let cell = &mut bmat[i * m + c];
                    *cell = cell.clone() - f.clone() * v.clone();
                }
                for (c, v) in &irow {
                    let cell = &mut inv[i * m + c];
                    *cell = cell.clone() - f.clone() * v.clone();
                }
                if !S::EXACT {
                    bmat[i * m + k] = S::zero();
                }
            }
        }
        for (k, &p) in pivot_row_of.iter().enumerate() {
            self.binv[k * m..(k + 1) * m].clone_from_slice(&inv[p * m..(p + 1) * m]);
        }
        for i in 0..m {
            let row = &self.binv[i * m..(i + 1) * m];
            let mut v = S::zero();
            for (bik, bk) in row.iter().zip(&self.b) {
                if !bik.is_zero() && !bk.is_zero() {
                    v = v + bik.clone() * bk.clone();
                }
            }
            if !S::EXACT && v.is_neg() {
                self.warnings.push(format!("basic variable {} negative after refactorization", self.basis[i]));
            }
            if !S::EXACT && v.is_negligible() {
                v = S::zero();
            }
            self.xb[i] = v;
        }
        self.since_refactor = 0;
    }
}

fn row_nnz<S: Scalar>(mat: &[S], i: usize, m: usize) -> usize {
    mat[i * m..(i + 1) * m].iter().filter(|v| !v.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{build_lp, Row, RowKind};
    use crate::profiles::Params;

    fn lp_for(b: u32, bm: u32) -> LinearProgram {
        build_lp(&Params::new(b, bm).unwrap()).unwrap()
    }

    /// Hand-written LP over `n` variables; rows are `(coeffs, rhs)`.
    fn toy(n: usize, rows: &[(&[(usize, i64)], i64)], obj: &[(usize, i64)]) -> LinearProgram {
        let r = Rational::from_integer;
        LinearProgram {
            params: Params::new(2, 1).unwrap(),
            num_vars: n,
            objective: obj.iter().map(|&(j, c)| (j, r(c))).collect(),
            rows: rows
                .iter()
                .enumerate()
                .map(|(i, (coeffs, rhs))| Row {
                    name: format!("r{i}"),
                    kind: RowKind::Degree,
                    coeffs: coeffs.iter().map(|&(j, c)| (j, r(c))).collect(),
                    rhs: r(*rhs),
                })
                .collect(),
            var_names: (0..n).map(|j| format!("x{j}")).collect(),
            var_kind: Vec::new(),
        }
    }

    #[test]
    fn exact_small_optima() {
        let res = solve_exact(&lp_for(2, 1)).unwrap();
        assert!(res.is_optimal());
        assert_eq!(res.objective, Some(Rational::from_integer(2)));
        assert_eq!(solve_exact(&lp_for(3, 2)).unwrap().objective, Some(Rational::from_integer(2)));
        assert_eq!(solve_exact(&lp_for(7, 6)).unwrap().objective, Some(Rational::new(3, 2)));
    }

    #[test]
    fn solution_satisfies_rows() {
        let lp = lp_for(5, 3);
        let res = solve_exact(&lp).unwrap();
        let report = check_assignment(&lp, res.solution.as_ref().unwrap()).unwrap();
        assert!(report.is_feasible());
        assert_eq!(Some(report.objective), res.objective);
        assert_eq!(res.basis.as_ref().unwrap().len(), lp.num_rows());
    }

    #[test]
    fn bland_agrees_with_default() {
        for (b, bm) in [(2, 1), (4, 3), (5, 2)] {
            let lp = lp_for(b, bm);
            let a = solve::<Rational>(&lp, &SimplexOptions::bland()).unwrap();
            let d = solve_exact(&lp).unwrap();
            assert_eq!(a.objective, d.objective);
        }
    }

    #[test]
    fn generic_float_instantiations() {
        for (b, bm) in [(2, 1), (4, 2), (6, 5)] {
            let lp = lp_for(b, bm);
            let exact = solve_exact(&lp).unwrap().objective.unwrap().to_f64();
            let f64_res = solve::<f64>(&lp, &SimplexOptions::default()).unwrap();
            assert!((f64_res.objective.unwrap() - exact).abs() < 1e-9);
            let f32_res = solve::<f32>(&lp, &SimplexOptions::default()).unwrap();
            assert!((f64::from(f32_res.objective.unwrap()) - exact).abs() < 1e-3);
        }
    }

    #[test]
    fn sparse_float_backend() {
        let res = solve_float(&lp_for(2, 1)).unwrap();
        assert!((res.objective.unwrap() - 2.0).abs() < 1e-9);
        assert!(!res.degraded());
        assert!(res.basis.is_none());
    }

    #[test]
    fn infeasible_toy() {
        // x0 + x1 = -1 with x >= 0.
        let lp = toy(2, &[(&[(0, 1), (1, 1)], -1)], &[(0, 1)]);
        assert_eq!(solve_exact(&lp).unwrap().status, Status::Infeasible);
        assert_eq!(solve_float(&lp).unwrap().status, Status::Infeasible);
    }

    #[test]
    fn unbounded_toy() {
        // x0 - x1 = 1, maximize x0.
        let lp = toy(2, &[(&[(0, 1), (1, -1)], 1)], &[(0, 1)]);
        assert_eq!(solve_exact(&lp).unwrap().status, Status::Unbounded);
        assert_eq!(solve_float(&lp).unwrap().status, Status::Unbounded);
    }

    #[test]
    fn redundant_rows_keep_artificial() {
        // Two copies of x0 + x1 = 2, maximize x1 - x0.
        let lp = toy(2, &[(&[(0, 1), (1, 1)], 2), (&[(0, 1), (1, 1)], 2)], &[(0, -1), (1, 1)]);
        let res = solve_exact(&lp).unwrap();
        assert_eq!(res.objective, Some(Rational::from_integer(2)));
        assert!(res.basis.unwrap().iter().any(|&v| v >= 2));
    }

    #[test]
    fn iteration_cap_is_an_error() {
        let opts = SimplexOptions { max_pivots: Some(1), ..SimplexOptions::default() };
        assert!(matches!(solve::<Rational>(&lp_for(4, 3), &opts), Err(Error::IterationLimit(1))));
    }
}
