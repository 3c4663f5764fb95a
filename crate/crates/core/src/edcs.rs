//! Edge-degree constrained subgraphs: validation, greedy construction, and
//! the tight three-group family.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Matching};
use crate::instance::EdcsInstance;
use crate::matching::{hall_witness, max_matching};
use crate::profiles::Params;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdcsViolation {
    pub edge: Edge,
    pub in_h: bool,
    /// `deg_H(l) + deg_H(r)`.
    pub degree_sum: u32,
    /// `beta` for H-edges, `beta_minus` otherwise.
    pub bound: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EdcsReport {
    pub violations: Vec<EdcsViolation>,
}

impl EdcsReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every H-edge with degree sum above `beta` and every other edge of `g`
/// with degree sum below `beta_minus`, in canonical edge order.
pub fn is_edcs(g: &BipartiteGraph, h: &[Edge], params: &Params) -> Result<EdcsReport> {
    params.validate()?;
    let hset: HashSet<Edge> = h.iter().copied().collect();
    if hset.len() != h.len() {
        return Err(Error::Params("h lists an edge twice".into()));
    }
    if let Some(e) = h.iter().find(|e| !g.has_edge(**e)) {
        return Err(Error::Params(format!("h-edge ({}, {}) is not in g", e.0, e.1)));
    }
    let (dl, dr) = g.degrees_of(h);
    let violations = g
        .edges()
        .iter()
        .filter_map(|&(l, r)| {
            let in_h = hset.contains(&(l, r));
            let degree_sum = dl[l] + dr[r];
            let bad = if in_h { degree_sum > params.beta } else { degree_sum < params.beta_minus };
            let bound = if in_h { params.beta } else { params.beta_minus };
            bad.then_some(EdcsViolation { edge: (l, r), in_h, degree_sum, bound })
        })
        .collect();
    Ok(EdcsReport { violations })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    /// Canonically ordered EDCS edges.
    pub h: Vec<Edge>,
    /// Removals plus additions performed.
    pub fixes: usize,
}

pub fn greedy_edcs(g: &BipartiteGraph, params: &Params) -> Result<Vec<Edge>> {
    greedy_edcs_counted(g, params).map(|o| o.h)
}

/// Starts from the empty subgraph and repeats passes over the edges in
/// canonical order, first deleting overfull H-edges, then inserting
/// underfull missing ones, until a pass changes nothing.
///
/// Each fix raises `(2β−1)|H| − Σ deg_H(u)²` by at least one, so the number
/// of fixes is at most `(2β−1)·β·n/2` for `n` vertices.
pub fn greedy_edcs_counted(g: &BipartiteGraph, params: &Params) -> Result<GreedyOutcome> {
    params.validate()?;
    let edges = g.edges();
    let mut in_h = vec![false; edges.len()];
    let mut dl = vec![0u32; g.n_left()];
    let mut dr = vec![0u32; g.n_right()];
    let mut fixes = 0;
    loop {
        let before = fixes;
        for (i, &(l, r)) in edges.iter().enumerate() {
            if in_h[i] && dl[l] + dr[r] > params.beta {
                in_h[i] = false;
                dl[l] -= 1;
                dr[r] -= 1;
                fixes += 1;
            }
        }
        for (i, &(l, r)) in edges.iter().enumerate() {
            if !in_h[i] && dl[l] + dr[r] < params.beta_minus {
                in_h[i] = true;
                dl[l] += 1;
                dr[r] += 1;
                fixes += 1;
            }
        }
        if fixes == before {
            break;
        }
    }
    let h = edges.iter().zip(&in_h).filter(|(_, &k)| k).map(|(e, _)| *e).collect();
    Ok(GreedyOutcome { h, fixes })
}

/// The three-group family for `(2k+1, 2k)`. Each side has groups A, B, C of
/// `n` vertices (indices `0..n`, `n..2n`, `2n..3n`). H joins A_L to C_R by a
/// perfect matching and B_L to C_R by the circulant `i -> i + j (mod n)`,
/// `j < k`, mirrored on the other side; G adds the perfect matching B_L–B_R.
/// `M* = A_L–C_R ∪ B_L–B_R ∪ C_L–A_R` has size `3n`, while every H-edge
/// touches C, so `μ(H) = 2n`.
pub fn tight_example(k: usize, n: usize) -> Result<EdcsInstance> {
    if k == 0 || n < k {
        return Err(Error::Params(format!("tight example needs n >= k >= 1, got k = {k}, n = {n}")));
    }
    let params = Params::new(2 * k as u32 + 1, 2 * k as u32)?;
    let (a, b, c) = (0, n, 2 * n);
    let mut h = Vec::new();
    for i in 0..n {
        h.push((a + i, c + i));
        h.push((c + i, a + i));
        for j in 0..k {
            h.push((b + i, c + (i + j) % n));
            h.push((c + i, b + (i + j) % n));
        }
    }
    let dashed: Vec<Edge> = (0..n).map(|i| (b + i, b + i)).collect();
    let g = BipartiteGraph::new(3 * n, 3 * n, h.iter().chain(&dashed).copied())?;
    let h = g.subgraph(&h)?;
    let mstar_pairs = (0..n).flat_map(|i| [(a + i, c + i), (b + i, b + i), (c + i, a + i)]);
    let mstar = Matching::new(&g, mstar_pairs)?;
    let m = max_matching(&h);
    let witness_a: BTreeSet<usize> = hall_witness(&h, &m)?;
    Ok(EdcsInstance { g, h, m, mstar, witness_a, params })
}
