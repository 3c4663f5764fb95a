//! The factor-revealing linear program.
//!
//! Variables are the vertex profiles followed by the edge profiles, each in
//! enumeration order. Every constraint is an equality with all variables on
//! the left; only the normalization row has a nonzero right-hand side.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::profiles::{
    enumerate_edge_profiles, enumerate_vertex_profiles_with, EdgeProfile, Params, ProfileOptions,
    Side, VertexProfile,
};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "profile", rename_all = "snake_case")]
pub enum VarKind {
    Vertex(VertexProfile),
    Edge(EdgeProfile),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// H-edges at the profile equal `deg_h` times its vertex count.
    Degree,
    /// Every vertex of an M-covered profile has exactly one M-edge.
    Matching,
    /// Every vertex of an M*-covered profile has exactly one M*-edge.
    MaxMatching,
    /// M-edge variables sum to one.
    Normalization,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub name: String,
    pub kind: RowKind,
    /// Sparse coefficients sorted by variable index.
    pub coeffs: Vec<(usize, Rational)>,
    pub rhs: Rational,
}

/// `maximize objective·x  s.t.  rows,  x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub params: Params,
    pub num_vars: usize,
    pub objective: Vec<(usize, Rational)>,
    pub rows: Vec<Row>,
    pub var_names: Vec<String>,
    pub var_kind: Vec<VarKind>,
}

impl LinearProgram {
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn vertex_var_count(&self) -> usize {
        self.var_kind.iter().filter(|k| matches!(k, VarKind::Vertex(_))).count()
    }

    pub fn edge_var_count(&self) -> usize {
        self.num_vars - self.vertex_var_count()
    }

    pub fn index_of(&self, kind: &VarKind) -> Option<usize> {
        self.var_kind.iter().position(|k| k == kind)
    }

    pub fn normalization_row(&self) -> Option<&Row> {
        self.rows.iter().find(|r| r.kind == RowKind::Normalization)
    }

    /// Column-major view: for each variable, the rows it appears in.
    pub fn columns(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut cols = vec![Vec::new(); self.num_vars];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, a) in &row.coeffs {
                cols[*j].push((i, a.clone()));
            }
        }
        cols
    }

    pub fn objective_dense<S: Scalar>(&self) -> Vec<S> {
        let mut c = vec![S::zero(); self.num_vars];
        for (j, v) in &self.objective {
            c[*j] = S::from_rational(v);
        }
        c
    }
}

/// Builds the LP for `params` over the default profile enumeration.
pub fn build_lp(params: &Params) -> Result<LinearProgram> {
    build_lp_with(params, ProfileOptions::default())
}

pub fn build_lp_with(params: &Params, opts: ProfileOptions) -> Result<LinearProgram> {
    let vps = enumerate_vertex_profiles_with(params, opts)?;
    let eps = enumerate_edge_profiles(params, &vps)?;

    let nv = vps.len();
    let num_vars = nv + eps.len();
    let vindex: HashMap<VertexProfile, usize> = vps.iter().enumerate().map(|(i, v)| (*v, i)).collect();

    // Incident edge-profile indices per vertex profile, for each edge set.
    let mut h_inc = vec![Vec::new(); nv];
    let mut m_inc = vec![Vec::new(); nv];
    let mut s_inc = vec![Vec::new(); nv];
    for (k, e) in eps.iter().enumerate() {
        let j = nv + k;
        for side in [Side::Left, Side::Right] {
            let vi = vindex[e.endpoint(side)];
            if e.in_h {
                h_inc[vi].push(j);
            }
            if e.in_m {
                m_inc[vi].push(j);
            }
            if e.in_mstar {
                s_inc[vi].push(j);
            }
        }
    }

    let one = Rational::one();
    let link_row = |name: String, kind: RowKind, vi: usize, coef: Rational, inc: &[usize]| {
        let mut coeffs = Vec::with_capacity(inc.len() + 1);
        coeffs.push((vi, -coef));
        coeffs.extend(inc.iter().map(|&j| (j, Rational::one())));
        Row { name, kind, coeffs, rhs: Rational::zero() }
    };

    let mut rows = Vec::new();
    for (vi, v) in vps.iter().enumerate() {
        if v.deg_h >= 1 {
            let d = Rational::from_integer(v.deg_h.into());
            rows.push(link_row(format!("deg_{}", v.label()), RowKind::Degree, vi, d, &h_inc[vi]));
        }
    }
    for (vi, v) in vps.iter().enumerate() {
        if v.in_m {
            rows.push(link_row(format!("m_{}", v.label()), RowKind::Matching, vi, one.clone(), &m_inc[vi]));
        }
    }
    for (vi, v) in vps.iter().enumerate() {
        if v.in_mstar {
            rows.push(link_row(format!("ms_{}", v.label()), RowKind::MaxMatching, vi, one.clone(), &s_inc[vi]));
        }
    }
    let norm: Vec<_> = eps
        .iter()
        .enumerate()
        .filter(|(_, e)| e.in_m)
        .map(|(k, _)| (nv + k, one.clone()))
        .collect();
    rows.push(Row { name: "norm".into(), kind: RowKind::Normalization, coeffs: norm, rhs: one.clone() });

    let objective = eps
        .iter()
        .enumerate()
        .filter(|(_, e)| e.in_mstar)
        .map(|(k, _)| (nv + k, one.clone()))
        .collect();

    let mut var_names = Vec::with_capacity(num_vars);
    let mut var_kind = Vec::with_capacity(num_vars);
    for v in &vps {
        var_names.push(format!("xv_{}", v.label()));
        var_kind.push(VarKind::Vertex(*v));
    }
    for e in &eps {
        var_names.push(format!("xe_{}", e.label()));
        var_kind.push(VarKind::Edge(*e));
    }

    Ok(LinearProgram { params: *params, num_vars, objective, rows, var_names, var_kind })
}

/// A candidate point of an LP.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment<S = Rational> {
    pub values: Vec<S>,
}

impl<S: Scalar> Assignment<S> {
    pub fn zeros(n: usize) -> Self {
        Assignment { values: vec![S::zero(); n] }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation<S = Rational> {
    Row { index: usize, name: String, lhs: S, rhs: S },
    Negative { var: usize, name: String, value: S },
}

#[derive(Debug, Clone)]
pub struct FeasibilityReport<S = Rational> {
    pub violations: Vec<Violation<S>>,
    pub objective: S,
}

impl<S> FeasibilityReport<S> {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates every row and sign constraint at `x`. Exact for rationals; for
/// floats a residual above `1e3 *` the scalar tolerance counts as violated.
pub fn check_assignment<S: Scalar>(lp: &LinearProgram, x: &Assignment<S>) -> Result<FeasibilityReport<S>> {
    if x.values.len() != lp.num_vars {
        return Err(Error::Params(format!(
            "assignment has {} values, LP has {} variables",
            x.values.len(),
            lp.num_vars
        )));
    }
    let slack = S::tolerance() * S::from_i64(1000);
    let mut violations = Vec::new();
    for (j, v) in x.values.iter().enumerate() {
        if *v < -slack.clone() {
            violations.push(Violation::Negative { var: j, name: lp.var_names[j].clone(), value: v.clone() });
        }
    }
    for (i, row) in lp.rows.iter().enumerate() {
        let lhs = row
            .coeffs
            .iter()
            .fold(S::zero(), |acc, (j, a)| acc + S::from_rational(a) * x.values[*j].clone());
        let rhs = S::from_rational(&row.rhs);
        if (lhs.clone() - rhs.clone()).abs() > slack {
            violations.push(Violation::Row { index: i, name: row.name.clone(), lhs, rhs });
        }
    }
    let objective = lp
        .objective
        .iter()
        .fold(S::zero(), |acc, (j, c)| acc + S::from_rational(c) * x.values[*j].clone());
    Ok(FeasibilityReport { violations, objective })
}
