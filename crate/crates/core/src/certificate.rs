//! Optimality certificate for an exact basic solution, computed from the
//! final basis alone without reusing any simplex state.
//!
//! The basis matrix is refactored from the LP rows, `B x_B = b` and
//! `B^T y = c_B` are solved by fresh Gaussian elimination, and the result is
//! accepted when `x_B ≥ 0`, every column has reduced cost `c_j - y^T A_j ≤ 0`,
//! and `c^T x = b^T y`. Primal feasibility plus dual feasibility with equal
//! objectives proves optimality by weak duality.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{check_assignment, Assignment, LinearProgram};
use crate::scalar::Rational;
use crate::simplex::{SolveResult, Status};

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub objective: Rational,
    /// Dual value per LP row.
    pub duals: Vec<Rational>,
    /// Largest reduced cost over nonbasic columns (`≤ 0` at optimality).
    pub max_reduced_cost: Rational,
}

/// Checks an exact `Optimal` result against its own basis. Any failure is a
/// contract error describing the first broken condition.
pub fn certify(lp: &LinearProgram, result: &SolveResult<Rational>) -> Result<Certificate> {
    if result.status != Status::Optimal {
        return Err(Error::Contract(format!("cannot certify a {:?} result", result.status)));
    }
    let basis = result
        .basis
        .as_ref()
        .ok_or_else(|| Error::Contract("optimal result without a basis".into()))?;
    let claimed = result
        .objective
        .as_ref()
        .ok_or_else(|| Error::Contract("optimal result without an objective".into()))?;
    let cert = certify_basis(lp, basis)?;
    if &cert.objective != claimed {
        return Err(Error::Contract(format!(
            "basis objective {} differs from reported {claimed}",
            cert.objective
        )));
    }
    Ok(cert)
}

/// Certifies that `basis` (one entry per row, `num_vars + i` meaning the
/// artificial of row `i`) is primal and dual feasible.
pub fn certify_basis(lp: &LinearProgram, basis: &[usize]) -> Result<Certificate> {
    let m = lp.num_rows();
    let n = lp.num_vars;
    if basis.len() != m {
        return Err(Error::Contract(format!("basis has {} entries for {m} rows", basis.len())));
    }
    let columns = lp.columns();
    let mut bmat = vec![Rational::zero(); m * m];
    for (k, &v) in basis.iter().enumerate() {
        if v >= n + m {
            return Err(Error::Contract(format!("basis entry {v} out of range")));
        }
        if v >= n {
            bmat[(v - n) * m + k] = Rational::one();
        } else {
            for (i, a) in &columns[v] {
                bmat[i * m + k] = a.clone();
            }
        }
    }
    let rhs: Vec<Rational> = lp.rows.iter().map(|r| r.rhs.clone()).collect();
    let xb = solve_square(bmat.clone(), m, rhs)
        .ok_or_else(|| Error::Contract("basis matrix is singular".into()))?;

    let cost = lp.objective_dense::<Rational>();
    let mut x = vec![Rational::zero(); n];
    for (k, &v) in basis.iter().enumerate() {
        if xb[k].is_negative() {
            return Err(Error::Contract(format!("basic variable {v} is negative ({})", xb[k])));
        }
        if v >= n {
            if !xb[k].is_zero() {
                return Err(Error::Contract(format!("artificial of row {} is {}", v - n, xb[k])));
            }
        } else {
            x[v] = xb[k].clone();
        }
    }
    let report = check_assignment(lp, &Assignment { values: x })?;
    if !report.is_feasible() {
        return Err(Error::Contract(format!("basic solution violates {:?}", report.violations[0])));
    }

    // B^T y = c_B.
    let mut bt = vec![Rational::zero(); m * m];
    for i in 0..m {
        for k in 0..m {
            bt[k * m + i] = bmat[i * m + k].clone();
        }
    }
    let cb: Vec<Rational> = basis
        .iter()
        .map(|&v| if v < n { cost[v].clone() } else { Rational::zero() })
        .collect();
    let y = solve_square(bt, m, cb).ok_or_else(|| Error::Contract("basis matrix is singular".into()))?;

    let mut max_rc: Option<Rational> = None;
    for (j, col) in columns.iter().enumerate() {
        let rc = col.iter().fold(cost[j].clone(), |acc, (i, a)| acc - &y[*i] * a);
        if rc.is_positive() {
            return Err(Error::Contract(format!(
                "column {} has positive reduced cost {rc}",
                lp.var_names[j]
            )));
        }
        if max_rc.as_ref().is_none_or(|b| rc > *b) {
            max_rc = Some(rc);
        }
    }
    let primal = report.objective;
    let dual = lp.rows.iter().zip(&y).fold(Rational::zero(), |acc, (r, yi)| acc + &r.rhs * yi);
    if primal != dual {
        return Err(Error::Contract(format!("primal objective {primal} differs from dual {dual}")));
    }
    Ok(Certificate { objective: primal, duals: y, max_reduced_cost: max_rc.unwrap_or_else(Rational::zero) })
}

/// Solves the dense `m × m` system `a z = rhs`; `None` when singular. Pivots
/// on the sparsest available row of each column.
fn solve_square(mut a: Vec<Rational>, m: usize, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let mut used = vec![false; m];
    let mut pivot_row = vec![0usize; m];
    for k in 0..m {
        let p = (0..m)
            .filter(|&i| !used[i] && !a[i * m + k].is_zero())
            .min_by_key(|&i| a[i * m..(i + 1) * m].iter().filter(|v| !v.is_zero()).count())?;
        used[p] = true;
        pivot_row[k] = p;
        let pv = a[p * m + k].clone();
        let row: Vec<(usize, Rational)> = (0..m)
            .filter(|&c| !a[p * m + c].is_zero())
            .map(|c| (c, &a[p * m + c] / &pv))
            .collect();
        let rp = &rhs[p] / &pv;
        for i in 0..m {
            if i == p || a[i * m + k].is_zero() {
                continue;
            }
            let f = a[i * m + k].clone();
            for (c, v) in &row {
                a[i * m + c] = &a[i * m + c] - &(&f * v);
            }
            rhs[i] = &rhs[i] - &(&f * &rp);
        }
        for c in 0..m {
            a[p * m + c] = Rational::zero();
        }
        for (c, v) in row {
            a[p * m + c] = v;
        }
        rhs[p] = rp;
    }
    Some((0..m).map(|k| rhs[pivot_row[k]].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::build_lp;
    use crate::profiles::Params;
    use crate::simplex::solve_exact;

    #[test]
    fn certifies_small_optima() {
        for (b, bm) in [(2, 1), (3, 2), (4, 1)] {
            let lp = build_lp(&Params::new(b, bm).unwrap()).unwrap();
            let res = solve_exact(&lp).unwrap();
            let cert = certify(&lp, &res).unwrap();
            assert_eq!(&cert.objective, res.objective.as_ref().unwrap());
            assert!(!cert.max_reduced_cost.is_positive());
        }
    }

    #[test]
    fn rejects_initial_basis() {
        let lp = build_lp(&Params::new(2, 1).unwrap()).unwrap();
        let all_artificial: Vec<usize> = (0..lp.num_rows()).map(|i| lp.num_vars + i).collect();
        assert!(matches!(certify_basis(&lp, &all_artificial), Err(Error::Contract(_))));
    }

    #[test]
    fn rejects_tampered_objective() {
        let lp = build_lp(&Params::new(2, 1).unwrap()).unwrap();
        let mut res = solve_exact(&lp).unwrap();
        res.objective = Some(Rational::from_integer(3));
        assert!(certify(&lp, &res).is_err());
    }

    #[test]
    fn dense_solver() {
        let r = |v: i64| Rational::from_integer(v);
        let z = solve_square(vec![r(2), r(1), r(1), r(3)], 2, vec![r(3), r(5)]).unwrap();
        assert_eq!(z, vec![Rational::new(4, 5), Rational::new(7, 5)]);
        assert!(solve_square(vec![r(1), r(2), r(2), r(4)], 2, vec![r(1), r(1)]).is_none());
    }
}
