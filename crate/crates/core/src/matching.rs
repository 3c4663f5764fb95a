//! Maximum bipartite matching, an exhaustive oracle for small graphs, and
//! Hall's-witness extraction.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Matching};

const NIL: usize = usize::MAX;

/// Maximum matching by Hopcroft–Karp: BFS layers from free left vertices,
/// then vertex-disjoint shortest augmenting paths found by DFS, repeated
/// until no augmenting path remains.
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let (nl, nr) = (g.n_left(), g.n_right());
    let mut mate_l = vec![NIL; nl];
    let mut mate_r = vec![NIL; nr];
    let mut dist = vec![0usize; nl];

    loop {
        // Layering.
        let mut queue = VecDeque::new();
        for l in 0..nl {
            if mate_l[l] == NIL {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in g.neighbors(l) {
                let next = mate_r[r];
                if next == NIL {
                    found = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found {
            break;
        }

        // Iterative DFS along the layering; `cursor[l]` skips exhausted arcs.
        let mut cursor = vec![0usize; nl];
        for root in 0..nl {
            if mate_l[root] != NIL {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&l) = stack.last() {
                let nbrs = g.neighbors(l);
                if cursor[l] >= nbrs.len() {
                    dist[l] = usize::MAX;
                    stack.pop();
                    continue;
                }
                let r = nbrs[cursor[l]];
                let next = mate_r[r];
                if next == NIL {
                    // Augment along the stack.
                    for &u in stack.iter().rev() {
                        let v = g.neighbors(u)[cursor[u]];
                        mate_l[u] = v;
                        mate_r[v] = u;
                    }
                    for &u in &stack {
                        dist[u] = usize::MAX;
                    }
                    break;
                }
                if dist[next] != usize::MAX && dist[next] == dist[l] + 1 {
                    stack.push(next);
                } else {
                    cursor[l] += 1;
                }
            }
        }
    }

    let pairs = (0..nl).filter(|&l| mate_l[l] != NIL).map(|l| (l, mate_l[l])).collect();
    Matching::from_sorted_unchecked(pairs)
}

/// Largest matching size by exhaustive search. Accepts graphs with at most
/// 12 edges (all subsets) or at most 8 vertices per side (every injective
/// assignment of left vertices).
pub fn brute_force_mu(g: &BipartiteGraph) -> Result<usize> {
    let edges = g.edges();
    if edges.len() <= 12 {
        // Compress endpoints so the used-vertex masks fit in 16 bits.
        let rank = |xs: Vec<usize>| {
            let mut v = xs;
            v.sort_unstable();
            v.dedup();
            v
        };
        let ls = rank(edges.iter().map(|e| e.0).collect());
        let rs = rank(edges.iter().map(|e| e.1).collect());
        let local: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(l, r)| (ls.binary_search(&l).unwrap(), rs.binary_search(&r).unwrap()))
            .collect();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let (mut ul, mut ur) = (0u16, 0u16);
            let mut ok = true;
            for (i, &(l, r)) in local.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if ul >> l & 1 == 1 || ur >> r & 1 == 1 {
                        ok = false;
                        break;
                    }
                    ul |= 1 << l;
                    ur |= 1 << r;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        return Ok(best);
    }
    if g.n_left() <= 8 && g.n_right() <= 8 {
        fn go(g: &BipartiteGraph, l: usize, used: u32) -> usize {
            if l == g.n_left() {
                return 0;
            }
            let mut best = go(g, l + 1, used);
            for &r in g.neighbors(l) {
                if used >> r & 1 == 0 {
                    best = best.max(1 + go(g, l + 1, used | 1 << r));
                }
            }
            best
        }
        return Ok(go(g, 0, 0));
    }
    Err(Error::TooLarge(format!(
        "{} edges on {} + {} vertices",
        edges.len(),
        g.n_left(),
        g.n_right()
    )))
}

/// König-style witness for a maximum matching `m` of `g`: the left vertices
/// reachable from unmatched left vertices by alternating paths. The result
/// satisfies `|N(A)| + |L \ A| = |m|`, and every edge of `m` covers exactly
/// one vertex of `N(A) ∪ (L \ A)`; a failure of either means `m` was not
/// maximum.
pub fn hall_witness(g: &BipartiteGraph, m: &Matching) -> Result<BTreeSet<usize>> {
    let m = Matching::new(g, m.pairs().iter().copied())
        .map_err(|e| Error::Contract(format!("witness needs a matching of the graph: {e}")))?;
    let mate_r = m.right_mates(g.n_right());
    let mate_l = m.left_mates(g.n_left());

    let mut in_a = vec![false; g.n_left()];
    let mut queue: VecDeque<usize> = (0..g.n_left()).filter(|&l| mate_l[l].is_none()).collect();
    for &l in &queue {
        in_a[l] = true;
    }
    while let Some(l) = queue.pop_front() {
        for &r in g.neighbors(l) {
            if let Some(next) = mate_r[r] {
                if !in_a[next] {
                    in_a[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    let a: BTreeSet<usize> = (0..g.n_left()).filter(|&l| in_a[l]).collect();
    check_witness(g, &m, &a)?;
    Ok(a)
}

/// Checks the witness identity and the exactly-one-cover property.
pub fn check_witness(g: &BipartiteGraph, m: &Matching, a: &BTreeSet<usize>) -> Result<()> {
    let na = g.neighborhood(a);
    let value = na.len() + (g.n_left() - a.len());
    if value != m.len() {
        return Err(Error::Contract(format!(
            "|N(A)| + |L \\ A| = {} + {} = {value} differs from |M| = {}; matching is not maximum",
            na.len(),
            g.n_left() - a.len(),
            m.len()
        )));
    }
    for &(l, r) in m.pairs() {
        let covers = usize::from(!a.contains(&l)) + usize::from(na.contains(&r));
        if covers != 1 {
            return Err(Error::Contract(format!(
                "matching edge ({l}, {r}) covers {covers} witness vertices"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> BipartiteGraph {
        BipartiteGraph::new(2, 2, [(0, 0), (1, 0), (1, 1)]).unwrap()
    }

    fn complete(k: usize) -> BipartiteGraph {
        BipartiteGraph::new(k, k, (0..k).flat_map(|l| (0..k).map(move |r| (l, r)))).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_matching(&path3()).len(), 2);
        assert_eq!(max_matching(&BipartiteGraph::empty(3, 4)).len(), 0);
        assert_eq!(max_matching(&complete(3)).len(), 3);
        let m = max_matching(&path3());
        assert!(Matching::new(&path3(), m.pairs().iter().copied()).is_ok());
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(brute_force_mu(&path3()).unwrap(), 2);
        assert_eq!(brute_force_mu(&BipartiteGraph::new(1, 1, [(0, 0)]).unwrap()).unwrap(), 1);
        assert_eq!(brute_force_mu(&complete(2)).unwrap(), 2);
        assert_eq!(brute_force_mu(&complete(8)).unwrap(), 8);
        assert!(brute_force_mu(&complete(9)).is_err());
        let far = BipartiteGraph::new(200, 200, [(150, 199), (199, 150), (150, 150)]).unwrap();
        assert_eq!(brute_force_mu(&far).unwrap(), 2);
    }

    #[test]
    fn witness_single_edge() {
        let g = BipartiteGraph::new(2, 2, [(1, 0)]).unwrap();
        let m = Matching::new(&g, [(1, 0)]).unwrap();
        let a = hall_witness(&g, &m).unwrap();
        assert_eq!(a, BTreeSet::from([0]));
    }

    #[test]
    fn witness_perfect_matching_is_empty() {
        let g = complete(4);
        let m = max_matching(&g);
        assert!(hall_witness(&g, &m).unwrap().is_empty());
        let p = path3();
        let m = Matching::new(&p, [(0, 0), (1, 1)]).unwrap();
        assert!(hall_witness(&p, &m).unwrap().is_empty());
    }

    #[test]
    fn witness_rejects_non_maximum() {
        let p = path3();
        let m = Matching::new(&p, [(1, 0)]).unwrap();
        assert!(matches!(hall_witness(&p, &m), Err(Error::Contract(_))));
    }
}
