//! Witness bundles `(G, H, M, M*, A)` and their JSON file form.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Matching};
use crate::profiles::Params;

/// A host graph with an EDCS `h`, a maximum matching `m` of `h`, a maximum
/// matching `mstar` of `g`, and a Hall witness for `m`. Constructors in this
/// crate produce consistent bundles; [`crate::roundtrip::verify_instance`]
/// checks one from the outside.
#[derive(Debug, Clone, PartialEq)]
pub struct EdcsInstance {
    pub g: BipartiteGraph,
    /// `h` on the vertex set of `g`.
    pub h: BipartiteGraph,
    pub m: Matching,
    pub mstar: Matching,
    pub witness_a: BTreeSet<usize>,
    pub params: Params,
}

impl EdcsInstance {
    pub fn to_file(&self) -> GraphFile {
        let pairs = |es: &[Edge]| es.iter().map(|&(l, r)| [l, r]).collect::<Vec<_>>();
        GraphFile {
            n_left: self.g.n_left(),
            n_right: self.g.n_right(),
            edges: pairs(self.g.edges()),
            h: Some(pairs(self.h.edges())),
            m: Some(pairs(self.m.pairs())),
            mstar: Some(pairs(self.mstar.pairs())),
            witness_a: Some(self.witness_a.iter().copied().collect()),
            beta: Some(self.params.beta),
            beta_minus: Some(self.params.beta_minus),
        }
    }

    /// Strict conversion: every optional field must be present and
    /// structurally valid (simple graphs, matchings inside their hosts).
    /// `params` overrides the file's own `beta`/`beta_minus`.
    pub fn from_file(file: &GraphFile, params: Option<Params>) -> Result<Self> {
        let g = BipartiteGraph::new(file.n_left, file.n_right, file.edge_list())?;
        let missing = |name: &str| Error::Parse(format!("missing field \"{name}\""));
        let h_edges = file.h_list().ok_or_else(|| missing("h"))?;
        let h = g.subgraph(&h_edges)?;
        let m = Matching::new(&h, file.m_list().ok_or_else(|| missing("m"))?)?;
        let mstar = Matching::new(&g, file.mstar_list().ok_or_else(|| missing("mstar"))?)?;
        let witness_a: BTreeSet<usize> =
            file.witness_a.clone().ok_or_else(|| missing("witness_a"))?.into_iter().collect();
        if let Some(&l) = witness_a.iter().find(|&&l| l >= file.n_left) {
            return Err(Error::Params(format!("witness vertex {l} out of range")));
        }
        let params = match params {
            Some(p) => p,
            None => file.params()?.ok_or_else(|| missing("beta"))?,
        };
        Ok(EdcsInstance { g, h, m, mstar, witness_a, params })
    }
}

/// On-disk graph format. Every field after `edges` is optional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n_left: usize,
    pub n_right: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mstar: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_a: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_minus: Option<u32>,
}

fn to_edges(v: &[[usize; 2]]) -> Vec<Edge> {
    v.iter().map(|&[l, r]| (l, r)).collect()
}

impl GraphFile {
    /// Parse errors carry the line and column serde reports.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files always serialize")
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        to_edges(&self.edges)
    }

    pub fn h_list(&self) -> Option<Vec<Edge>> {
        self.h.as_deref().map(to_edges)
    }

    pub fn m_list(&self) -> Option<Vec<Edge>> {
        self.m.as_deref().map(to_edges)
    }

    pub fn mstar_list(&self) -> Option<Vec<Edge>> {
        self.mstar.as_deref().map(to_edges)
    }

    /// `Ok(None)` when neither parameter is given.
    pub fn params(&self) -> Result<Option<Params>> {
        match (self.beta, self.beta_minus) {
            (Some(b), Some(bm)) => Params::new(b, bm).map(Some),
            (None, None) => Ok(None),
            _ => Err(Error::Parse("beta and beta_minus must appear together".into())),
        }
    }
}
