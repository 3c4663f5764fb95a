use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// `(left, right)` vertex indices.
pub type Edge = (usize, usize);

/// Simple bipartite graph `G(L, R)` with `L = 0..n_left`, `R = 0..n_right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n_left: usize,
    n_right: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Rejects duplicate pairs and out-of-range endpoints.
    pub fn new(n_left: usize, n_right: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().collect();
        if let Some(&(l, r)) = list.iter().find(|(l, r)| *l >= n_left || *r >= n_right) {
            return Err(Error::Params(format!(
                "edge ({l}, {r}) out of range for a {n_left} x {n_right} graph"
            )));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Params(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        let mut adj = vec![Vec::new(); n_left];
        for &(l, r) in &list {
            adj[l].push(r);
        }
        Ok(BipartiteGraph { n_left, n_right, edges: list, adj })
    }

    pub fn empty(n_left: usize, n_right: usize) -> Self {
        BipartiteGraph { n_left, n_right, edges: Vec::new(), adj: vec![Vec::new(); n_left] }
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    /// Edges in canonical (left, right) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adj[left]
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.0 < self.n_left && self.adj[e.0].binary_search(&e.1).is_ok()
    }

    /// The subgraph on the same vertex set keeping only `edges`, which must
    /// all belong to `self`.
    pub fn subgraph(&self, edges: &[Edge]) -> Result<BipartiteGraph> {
        if let Some(e) = edges.iter().find(|e| !self.has_edge(**e)) {
            return Err(Error::Params(format!("edge ({}, {}) is not in the host graph", e.0, e.1)));
        }
        BipartiteGraph::new(self.n_left, self.n_right, edges.iter().copied())
    }

    /// `(left degrees, right degrees)` counted over `edges`.
    pub fn degrees_of(&self, edges: &[Edge]) -> (Vec<u32>, Vec<u32>) {
        let mut dl = vec![0u32; self.n_left];
        let mut dr = vec![0u32; self.n_right];
        for &(l, r) in edges {
            dl[l] += 1;
            dr[r] += 1;
        }
        (dl, dr)
    }

    /// `N(A)` for a set of left vertices.
    pub fn neighborhood(&self, a: &BTreeSet<usize>) -> BTreeSet<usize> {
        a.iter().flat_map(|&l| self.adj[l].iter().copied()).collect()
    }
}

/// A set of vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl Matching {
    /// Checks disjointness and membership in `host`.
    pub fn new(host: &BipartiteGraph, pairs: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut pairs: Vec<Edge> = pairs.into_iter().collect();
        pairs.sort_unstable();
        let mut seen_l = vec![false; host.n_left()];
        let mut seen_r = vec![false; host.n_right()];
        for &(l, r) in &pairs {
            if !host.has_edge((l, r)) {
                return Err(Error::Params(format!("matching edge ({l}, {r}) is not in the host graph")));
            }
            if std::mem::replace(&mut seen_l[l], true) || std::mem::replace(&mut seen_r[r], true) {
                return Err(Error::Params(format!("vertex of ({l}, {r}) is matched twice")));
            }
        }
        Ok(Matching { pairs })
    }

    pub(crate) fn from_sorted_unchecked(pairs: Vec<Edge>) -> Self {
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `mate[l]` for every left vertex of a graph with `n_left` vertices.
    pub fn left_mates(&self, n_left: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n_left];
        for &(l, r) in &self.pairs {
            mate[l] = Some(r);
        }
        mate
    }

    pub fn right_mates(&self, n_right: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n_right];
        for &(l, r) in &self.pairs {
            mate[r] = Some(l);
        }
        mate
    }
}
