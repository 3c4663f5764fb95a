#![allow(dead_code)]

use std::collections::BTreeSet;

use edcs_core::edcs::greedy_edcs;
use edcs_core::matching::{hall_witness, max_matching};
use edcs_core::{BipartiteGraph, EdcsInstance, Matching, Params};
use rand::Rng;

/// Random bipartite graph with `1..=max_side` vertices per side and edge
/// probability drawn uniformly from `[0.05, 0.9]`.
pub fn random_graph<R: Rng>(rng: &mut R, max_side: usize) -> BipartiteGraph {
    let nl = rng.gen_range(1..=max_side);
    let nr = rng.gen_range(1..=max_side);
    let p: f64 = rng.gen_range(0.05..0.9);
    let edges: Vec<_> = (0..nl).flat_map(|l| (0..nr).map(move |r| (l, r))).filter(|_| rng.gen_bool(p)).collect();
    BipartiteGraph::new(nl, nr, edges).unwrap()
}

/// Greedy EDCS of `g` packaged with maximum matchings and a Hall witness.
/// `None` when `g` has no edges.
pub fn greedy_instance(g: &BipartiteGraph, params: Params) -> Option<EdcsInstance> {
    if g.num_edges() == 0 {
        return None;
    }
    let h = g.subgraph(&greedy_edcs(g, &params).unwrap()).unwrap();
    let m = max_matching(&h);
    let mstar: Matching = max_matching(g);
    let witness_a: BTreeSet<usize> = hall_witness(&h, &m).unwrap();
    Some(EdcsInstance { g: g.clone(), h, m, mstar, witness_a, params })
}
