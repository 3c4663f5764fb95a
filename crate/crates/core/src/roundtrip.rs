//! Conversions between concrete instances and points of the LP.
//!
//! [`instance_to_solution`] counts vertices and edges per profile and scales
//! by `1/μ(H)`. [`solution_to_instance`] goes the other way: it scales a
//! rational optimum to integer group sizes and wires up a simple graph with
//! exactly those profile counts.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap, HashSet};
use std::fmt::Write as _;
use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::edcs::is_edcs;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Matching};
use crate::instance::{EdcsInstance, GraphFile};
use crate::lp::{build_lp, check_assignment, Assignment, LinearProgram, VarKind};
use crate::matching::max_matching;
use crate::profiles::{edge_violation, vertex_violation, EdgeProfile, Params, Region, Side, VertexProfile};
use crate::scalar::Rational;
use crate::simplex::{SolveResult, Status};

/// Integer profile counts together with the scale that divides them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProfileAssignment {
    pub vertex_counts: BTreeMap<VertexProfile, u64>,
    pub edge_counts: BTreeMap<EdgeProfile, u64>,
    pub scale: u64,
}

impl ProfileAssignment {
    /// `count / scale` per LP variable. Isolated profiles missing from `lp`
    /// are skipped; any other unknown profile is a contract error.
    pub fn to_assignment(&self, lp: &LinearProgram) -> Result<Assignment> {
        let index: HashMap<VarKind, usize> = lp.var_kind.iter().enumerate().map(|(j, k)| (*k, j)).collect();
        let mut values = vec![Rational::zero(); lp.num_vars];
        let n = Rational::from_integer(self.scale as i64);
        let kinds = self
            .vertex_counts
            .iter()
            .map(|(v, c)| (VarKind::Vertex(*v), *c))
            .chain(self.edge_counts.iter().map(|(e, c)| (VarKind::Edge(*e), *c)));
        for (kind, count) in kinds {
            match index.get(&kind) {
                Some(&j) => values[j] = Rational::from_integer(count as i64) / &n,
                None if matches!(kind, VarKind::Vertex(v) if v.is_isolated()) => {}
                None => return Err(Error::Contract(format!("profile {kind:?} is not an LP variable"))),
            }
        }
        Ok(Assignment { values })
    }
}

#[derive(Debug, Clone)]
pub struct InstanceSolution {
    pub counts: ProfileAssignment,
    pub assignment: Assignment,
    /// `|M*| / |M|`.
    pub objective: Rational,
}

/// Profile counts of `inst`, with scale `|m|`. Edges outside `h ∪ mstar`
/// are ignored. A vertex or edge whose profile is invalid yields a contract
/// error naming the broken condition.
pub fn classify(inst: &EdcsInstance) -> Result<ProfileAssignment> {
    let params = &inst.params;
    params.validate()?;
    if inst.m.is_empty() {
        return Err(Error::Contract("M is empty, so the scale 1/μ(H) is undefined".into()));
    }
    let (nl, nr) = (inst.g.n_left(), inst.g.n_right());
    let (dl, dr) = inst.g.degrees_of(inst.h.edges());
    let na = inst.h.neighborhood(&inst.witness_a);
    let (ml, mr) = (inst.m.left_mates(nl), inst.m.right_mates(nr));
    let (sl, sr) = (inst.mstar.left_mates(nl), inst.mstar.right_mates(nr));

    let vertex = |side: Side, u: usize| -> Result<VertexProfile> {
        let (region, deg, in_m, in_s) = match side {
            Side::Left => (
                if inst.witness_a.contains(&u) { Region::A } else { Region::LminusA },
                dl[u],
                ml[u].is_some(),
                sl[u].is_some(),
            ),
            Side::Right => (
                if na.contains(&u) { Region::NA } else { Region::RminusNA },
                dr[u],
                mr[u].is_some(),
                sr[u].is_some(),
            ),
        };
        let v = VertexProfile::new(region, deg, in_m, in_s);
        match vertex_violation(params, &v) {
            None => Ok(v),
            Some(0) => Err(Error::Contract(format!(
                "{side:?} vertex {u} has H-degree {deg}, above beta - 1 = {}",
                params.beta - 1
            ))),
            Some(c) => Err(Error::Contract(format!("{side:?} vertex {u} breaks condition {c}"))),
        }
    };
    let left: Vec<VertexProfile> = (0..nl).map(|u| vertex(Side::Left, u)).collect::<Result<_>>()?;
    let right: Vec<VertexProfile> = (0..nr).map(|u| vertex(Side::Right, u)).collect::<Result<_>>()?;

    let mut out = ProfileAssignment { scale: inst.m.len() as u64, ..Default::default() };
    for v in left.iter().chain(&right) {
        *out.vertex_counts.entry(*v).or_default() += 1;
    }
    let h: HashSet<Edge> = inst.h.edges().iter().copied().collect();
    let m: HashSet<Edge> = inst.m.pairs().iter().copied().collect();
    let s: HashSet<Edge> = inst.mstar.pairs().iter().copied().collect();
    let kept: BTreeSet<Edge> = h.union(&s).copied().collect();
    for (l, r) in kept {
        let e = EdgeProfile {
            left: left[l],
            right: right[r],
            in_h: h.contains(&(l, r)),
            in_m: m.contains(&(l, r)),
            in_mstar: s.contains(&(l, r)),
        };
        if let Some(c) = edge_violation(params, &e) {
            return Err(Error::Contract(format!("edge ({l}, {r}) breaks condition {c}")));
        }
        *out.edge_counts.entry(e).or_default() += 1;
    }
    Ok(out)
}

pub fn instance_to_solution(inst: &EdcsInstance) -> Result<InstanceSolution> {
    instance_to_solution_in(&build_lp(&inst.params)?, inst)
}

/// As [`instance_to_solution`] against an already built LP, which must
/// belong to `inst.params`. The point is checked against every row.
pub fn instance_to_solution_in(lp: &LinearProgram, inst: &EdcsInstance) -> Result<InstanceSolution> {
    if lp.params != inst.params {
        return Err(Error::Params(format!("LP is for {} but the instance is for {}", lp.params, inst.params)));
    }
    let counts = classify(inst)?;
    let assignment = counts.to_assignment(lp)?;
    let report = check_assignment(lp, &assignment)?;
    if !report.is_feasible() {
        return Err(Error::Contract(format!("instance point violates {:?}", report.violations[0])));
    }
    Ok(InstanceSolution { counts, assignment, objective: report.objective })
}

/// Doublings of the scale tried after a failed placement.
pub const MAX_DOUBLINGS: u32 = 6;

/// Vertices allowed in one reconstruction attempt.
const VERTEX_LIMIT: u64 = 5_000_000;

/// Builds a verified instance whose `|M*| / |M|` equals the objective of an
/// exact optimal `result` for `lp`. Group sizes are `N·x` with `N` equal to
/// `min_scale` times the lcm of the solution's denominators; a failed
/// placement retries with `2N`, up to [`MAX_DOUBLINGS`] times.
pub fn solution_to_instance(
    lp: &LinearProgram,
    result: &SolveResult<Rational>,
    min_scale: u64,
) -> Result<EdcsInstance> {
    if result.status != Status::Optimal {
        return Err(Error::Contract(format!("cannot realize a {:?} result", result.status)));
    }
    let x = result
        .solution
        .as_ref()
        .ok_or_else(|| Error::Contract("optimal result without a solution".into()))?;
    if x.values.len() != lp.num_vars {
        return Err(Error::Contract("solution length does not match the LP".into()));
    }
    if min_scale == 0 {
        return Err(Error::Params("min_scale must be positive".into()));
    }
    let lcm = x.values.iter().fold(BigInt::one(), |acc, v| acc.lcm(&v.denom()));
    let base = (lcm * BigInt::from(min_scale))
        .to_u64()
        .ok_or_else(|| Error::Realization("scale does not fit in 64 bits".into()))?;

    let mut last = String::new();
    for attempt in 0..=MAX_DOUBLINGS {
        let scale = base
            .checked_mul(1 << attempt)
            .ok_or_else(|| Error::Realization("scale overflow".into()))?;
        match realize(lp, &x.values, scale) {
            Ok(inst) => {
                let report = verify_instance(&inst, None);
                if !report.passed() {
                    return Err(Error::Internal(format!("reconstruction failed verification:\n{}", report.to_text())));
                }
                let ratio = Rational::from_integer(inst.mstar.len() as i64)
                    / Rational::from_integer(inst.m.len() as i64);
                if Some(&ratio) != result.objective.as_ref() {
                    return Err(Error::Internal(format!("reconstructed ratio {ratio} differs from the optimum")));
                }
                return Ok(inst);
            }
            Err(Error::Realization(msg)) => last = format!("scale {scale}: {msg}"),
            Err(e) => return Err(e),
        }
    }
    Err(Error::Realization(format!("gave up after {MAX_DOUBLINGS} doublings; last failure at {last}")))
}

/// Per-side vertex state during placement.
struct SideState {
    group: HashMap<VertexProfile, Range<usize>>,
    resid: Vec<u32>,
    m_mate: Vec<bool>,
    s_next: HashMap<VertexProfile, usize>,
}

impl SideState {
    fn range(&self, v: &VertexProfile) -> Result<Range<usize>> {
        self.group
            .get(v)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("edge profile endpoint {} has no vertices", v.label())))
    }

    fn consume(&mut self, u: usize) -> Result<()> {
        if self.resid[u] == 0 {
            return Err(Error::Internal(format!("vertex {u} ran out of H-degree")));
        }
        self.resid[u] -= 1;
        Ok(())
    }
}

fn realize(lp: &LinearProgram, x: &[Rational], scale: u64) -> Result<EdcsInstance> {
    let n = Rational::from_integer(scale as i64);
    let count = |j: usize| -> Result<u64> {
        let v = &x[j] * &n;
        if !v.is_integer() {
            return Err(Error::Internal(format!("scaled value {v} is fractional")));
        }
        v.floor().to_u64().ok_or_else(|| Error::Realization(format!("count {v} is too large")))
    };

    let mut left = SideState { group: HashMap::new(), resid: Vec::new(), m_mate: Vec::new(), s_next: HashMap::new() };
    let mut right = SideState { group: HashMap::new(), resid: Vec::new(), m_mate: Vec::new(), s_next: HashMap::new() };
    let mut witness_a = BTreeSet::new();
    let mut total = 0u64;
    for (j, kind) in lp.var_kind.iter().enumerate() {
        let VarKind::Vertex(v) = kind else { continue };
        let c = count(j)?;
        total += c;
        if total > VERTEX_LIMIT {
            return Err(Error::Realization(format!("more than {VERTEX_LIMIT} vertices")));
        }
        let st = if v.side == Side::Left { &mut left } else { &mut right };
        let start = st.resid.len();
        let range = start..start + c as usize;
        st.resid.extend(std::iter::repeat_n(v.deg_h, c as usize));
        st.m_mate.extend(std::iter::repeat_n(false, c as usize));
        st.s_next.insert(*v, start);
        if v.region == Region::A {
            witness_a.extend(range.clone());
        }
        st.group.insert(*v, range);
    }

    let mut adjacent: HashSet<Edge> = HashSet::new();
    let (mut g_edges, mut h_edges, mut m_pairs, mut s_pairs) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let edge_vars: Vec<(usize, EdgeProfile)> = lp
        .var_kind
        .iter()
        .enumerate()
        .filter_map(|(j, k)| match k {
            VarKind::Edge(e) => Some((j, *e)),
            VarKind::Vertex(_) => None,
        })
        .collect();

    // Phase 1: M* edges pair group members in index order.
    for &(j, e) in edge_vars.iter().filter(|(_, e)| e.in_mstar) {
        let c = count(j)? as usize;
        if c == 0 {
            continue;
        }
        let (lr, rr) = (left.range(&e.left)?, right.range(&e.right)?);
        let (l0, r0) = (left.s_next[&e.left], right.s_next[&e.right]);
        if l0 + c > lr.end || r0 + c > rr.end {
            return Err(Error::Internal(format!("M* counts overflow the groups of {}", e.label())));
        }
        left.s_next.insert(e.left, l0 + c);
        right.s_next.insert(e.right, r0 + c);
        for i in 0..c {
            let (u, w) = (l0 + i, r0 + i);
            adjacent.insert((u, w));
            g_edges.push((u, w));
            s_pairs.push((u, w));
            if e.in_h {
                left.consume(u)?;
                right.consume(w)?;
                h_edges.push((u, w));
            }
            if e.in_m {
                left.m_mate[u] = true;
                right.m_mate[w] = true;
                m_pairs.push((u, w));
            }
        }
    }

    // Phase 2: M \ M* edges between still M-unmatched members, with the
    // first offset that avoids every phase-1 pair.
    for &(j, e) in edge_vars.iter().filter(|(_, e)| e.in_m && !e.in_mstar) {
        let c = count(j)? as usize;
        if c == 0 {
            continue;
        }
        let ls: Vec<usize> = left.range(&e.left)?.filter(|&u| !left.m_mate[u]).take(c).collect();
        let rs: Vec<usize> = right.range(&e.right)?.filter(|&w| !right.m_mate[w]).collect();
        if ls.len() < c || rs.len() < c {
            return Err(Error::Internal(format!("M counts overflow the groups of {}", e.label())));
        }
        let offset = (0..rs.len())
            .find(|&s| (0..c).all(|i| !adjacent.contains(&(ls[i], rs[(i + s) % rs.len()]))))
            .ok_or_else(|| Error::Realization(format!("no collision-free offset for {}", e.label())))?;
        for (i, &u) in ls.iter().enumerate() {
            let w = rs[(i + offset) % rs.len()];
            left.consume(u)?;
            right.consume(w)?;
            left.m_mate[u] = true;
            right.m_mate[w] = true;
            adjacent.insert((u, w));
            g_edges.push((u, w));
            h_edges.push((u, w));
            m_pairs.push((u, w));
        }
    }

    // Phase 3: remaining H-edges. Stubs of each profile are first spread
    // over its endpoint groups, always to the member with the most residual
    // degree, then each profile is wired Havel–Hakimi style. When the greedy
    // gets stuck on earlier pairs, the profile is wired by max-flow instead.
    let rest: Vec<(usize, EdgeProfile)> = edge_vars
        .iter()
        .filter(|(_, e)| e.in_h && !e.in_m && !e.in_mstar)
        .map(|&(j, e)| count(j).map(|c| (c as usize, e)))
        .filter(|r| !matches!(r, Ok((0, _))))
        .collect::<Result<_>>()?;
    let ldem = spread(&rest, &left, |e| e.left)?;
    let rdem = spread(&rest, &right, |e| e.right)?;
    for (k, (_, e)) in rest.iter().enumerate() {
        let placed = havel_hakimi(&ldem[k], &rdem[k], &adjacent)
            .or_else(|| flow_realization(&ldem[k], &rdem[k], &adjacent))
            .ok_or_else(|| {
                Error::Realization(format!("H-degree of {} cannot be met without parallel edges", e.label()))
            })?;
        for (u, w) in placed {
            adjacent.insert((u, w));
            g_edges.push((u, w));
            h_edges.push((u, w));
        }
    }

    let g = BipartiteGraph::new(left.resid.len(), right.resid.len(), g_edges)?;
    let h = g.subgraph(&h_edges)?;
    let m = Matching::new(&h, m_pairs)?;
    let mstar = Matching::new(&g, s_pairs)?;
    Ok(EdcsInstance { g, h, m, mstar, witness_a, params: lp.params })
}

/// Repeatedly joins the left vertex of largest remaining demand to the
/// right vertices of largest remaining demand it is not yet adjacent to.
fn havel_hakimi(ld: &[(usize, u32)], rd: &[(usize, u32)], adjacent: &HashSet<Edge>) -> Option<Vec<Edge>> {
    let mut ld = ld.to_vec();
    let mut rd = rd.to_vec();
    let mut out = Vec::new();
    while let Some(pos) = (0..ld.len()).filter(|&i| ld[i].1 > 0).max_by_key(|&i| (ld[i].1, Reverse(ld[i].0))) {
        let (u, d) = ld[pos];
        ld[pos].1 = 0;
        let mut order: Vec<usize> =
            (0..rd.len()).filter(|&i| rd[i].1 > 0 && !adjacent.contains(&(u, rd[i].0))).collect();
        if order.len() < d as usize {
            return None;
        }
        order.sort_by_key(|&i| (Reverse(rd[i].1), rd[i].0));
        for &i in &order[..d as usize] {
            rd[i].1 -= 1;
            out.push((u, rd[i].0));
        }
    }
    rd.iter().all(|r| r.1 == 0).then_some(out)
}

/// Exact bipartite degree realization avoiding `adjacent`: unit arcs between
/// the two sides, source and sink arcs carrying the demands, Dinic's
/// algorithm. `None` when no simple realization exists.
fn flow_realization(ld: &[(usize, u32)], rd: &[(usize, u32)], adjacent: &HashSet<Edge>) -> Option<Vec<Edge>> {
    let (a, b) = (ld.len(), rd.len());
    let (src, sink) = (a + b, a + b + 1);
    let mut net = Network::new(a + b + 2);
    for (i, &(_, d)) in ld.iter().enumerate() {
        net.add(src, i, d);
    }
    for (j, &(_, d)) in rd.iter().enumerate() {
        net.add(a + j, sink, d);
    }
    let mut pair_arcs = Vec::new();
    for (i, &(u, _)) in ld.iter().enumerate() {
        for (j, &(w, _)) in rd.iter().enumerate() {
            if !adjacent.contains(&(u, w)) {
                pair_arcs.push((net.add(i, a + j, 1), (u, w)));
            }
        }
    }
    let need: u32 = ld.iter().map(|x| x.1).sum();
    if net.max_flow(src, sink) != need {
        return None;
    }
    Some(pair_arcs.into_iter().filter(|(arc, _)| net.cap[*arc] == 0).map(|(_, e)| e).collect())
}

/// Residual network with paired arcs `2k` (forward) and `2k + 1` (reverse).
struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network { head: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn add(&mut self, u: usize, v: usize, c: u32) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        id
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u32 {
        let n = self.head.len();
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; n];
            level[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &id in &self.head[u] {
                    let v = self.to[id];
                    if self.cap[id] > 0 && level[v] == usize::MAX {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[t] == usize::MAX {
                return total;
            }
            let mut cursor = vec![0usize; n];
            loop {
                let pushed = self.augment(s, t, u32::MAX, &level, &mut cursor);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn augment(&mut self, u: usize, t: usize, limit: u32, level: &[usize], cursor: &mut [usize]) -> u32 {
        if u == t {
            return limit;
        }
        while cursor[u] < self.head[u].len() {
            let id = self.head[u][cursor[u]];
            let v = self.to[id];
            if self.cap[id] > 0 && level[v] == level[u] + 1 {
                let got = self.augment(v, t, limit.min(self.cap[id]), level, cursor);
                if got > 0 {
                    self.cap[id] -= got;
                    self.cap[id ^ 1] += got;
                    return got;
                }
            }
            cursor[u] += 1;
        }
        0
    }
}

/// For each profile in `rest`, the `(vertex, stubs)` demands on one side.
/// Uses up every member's residual H-degree exactly.
fn spread(
    rest: &[(usize, EdgeProfile)],
    st: &SideState,
    endpoint: impl Fn(&EdgeProfile) -> VertexProfile,
) -> Result<Vec<Vec<(usize, u32)>>> {
    let mut resid = st.resid.clone();
    let mut out = vec![Vec::new(); rest.len()];
    let mut heaps: HashMap<VertexProfile, BinaryHeap<(u32, Reverse<usize>)>> = HashMap::new();
    for (k, (c, e)) in rest.iter().enumerate() {
        let v = endpoint(e);
        let range = st.range(&v)?;
        let heap = heaps
            .entry(v)
            .or_insert_with(|| range.clone().map(|u| (resid[u], Reverse(u))).collect());
        let mut got: BTreeMap<usize, u32> = BTreeMap::new();
        let mut popped = Vec::new();
        for _ in 0..*c {
            // A vertex takes at most one stub per round so stubs spread out.
            let (r, Reverse(u)) = match heap.pop() {
                Some(top) if top.0 > 0 => top,
                _ => {
                    heap.extend(popped.drain(..));
                    match heap.pop() {
                        Some(top) if top.0 > 0 => top,
                        _ => return Err(Error::Internal(format!("residual degree exhausted in {}", v.label()))),
                    }
                }
            };
            resid[u] = r - 1;
            *got.entry(u).or_default() += 1;
            popped.push((r - 1, Reverse(u)));
        }
        heap.extend(popped);
        out[k] = got.into_iter().collect();
    }
    if let Some(u) = (0..resid.len()).find(|&u| resid[u] > 0) {
        return Err(Error::Internal(format!("vertex {u} keeps {} unused H-degree", resid[u])));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: Option<Params>,
    pub checks: Vec<Check>,
    pub mu_g: Option<usize>,
    pub mu_h: Option<usize>,
    /// `μ(G) / μ(H)`.
    pub ratio: Option<Rational>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(p) = &self.params {
            let _ = writeln!(s, "params {p}");
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{mark} {}: {}", c.name, c.detail);
        }
        let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let ratio = self.ratio.as_ref().map_or("-".to_string(), |r| r.to_string());
        let _ = writeln!(s, "mu(G) = {}, mu(H) = {}, ratio = {ratio}", show(self.mu_g), show(self.mu_h));
        s
    }
}

pub fn verify_instance(inst: &EdcsInstance, params: Option<Params>) -> VerificationReport {
    verify_file(&inst.to_file(), params.or(Some(inst.params)))
}

/// Runs every check on raw file data, so malformed inputs yield failed
/// entries rather than errors. `params` overrides the file's values.
pub fn verify_file(file: &GraphFile, params: Option<Params>) -> VerificationReport {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, r: std::result::Result<String, String>| {
        let (passed, detail) = match r {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        checks.push(Check { name, passed, detail });
    };
    fn skipped<T>() -> std::result::Result<T, String> {
        Err("skipped: an earlier check failed".into())
    }

    let params = match params {
        Some(p) => Ok(p),
        None => file.params().map_err(|e| e.to_string()).and_then(|p| p.ok_or("no beta/beta_minus given".into())),
    };
    let g = BipartiteGraph::new(file.n_left, file.n_right, file.edge_list());
    push("simple graph", g.as_ref().map(|g| format!("{} edges", g.num_edges())).map_err(|e| e.to_string()));
    let g = g.ok();

    let h = match (&g, file.h_list()) {
        (Some(g), Some(h)) => g.subgraph(&h).map_err(|e| e.to_string()),
        (None, _) => skipped(),
        (_, None) => Err("no h given".into()),
    };
    push("h subset of g", h.as_ref().map(|h| format!("{} edges", h.num_edges())).map_err(Clone::clone));
    let h = h.ok();

    let edcs = match (&g, &h, &params) {
        (Some(g), Some(h), Ok(p)) => match is_edcs(g, h.edges(), p) {
            Ok(r) if r.is_valid() => Ok(format!("valid for {p}")),
            Ok(r) => Err(r
                .violations
                .iter()
                .take(5)
                .map(|v| {
                    let rel = if v.in_h { ">" } else { "<" };
                    format!("edge ({}, {}) degree sum {} {rel} {}", v.edge.0, v.edge.1, v.degree_sum, v.bound)
                })
                .collect::<Vec<_>>()
                .join("; ")
                + if r.violations.len() > 5 { "; ..." } else { "" }),
            Err(e) => Err(e.to_string()),
        },
        (_, _, Err(e)) => Err(e.clone()),
        _ => skipped(),
    };
    push("edcs", edcs);

    let m = match (&h, file.m_list()) {
        (Some(h), Some(m)) => Matching::new(h, m).map_err(|e| e.to_string()),
        (None, _) => skipped(),
        (_, None) => Err("no m given".into()),
    };
    push("m matching in h", m.as_ref().map(|m| format!("{} edges", m.len())).map_err(Clone::clone));
    let m = m.ok();

    let mstar = match (&g, file.mstar_list()) {
        (Some(g), Some(s)) => Matching::new(g, s).map_err(|e| e.to_string()),
        (None, _) => skipped(),
        (_, None) => Err("no mstar given".into()),
    };
    push("mstar matching in g", mstar.as_ref().map(|m| format!("{} edges", m.len())).map_err(Clone::clone));
    let mstar = mstar.ok();

    let mu_g = g.as_ref().map(|g| max_matching(g).len());
    let mu_h = h.as_ref().map(|h| max_matching(h).len());
    push(
        "mstar maximum in g",
        match (&mstar, mu_g) {
            (Some(s), Some(mu)) if s.len() == mu => Ok(format!("|mstar| = mu(G) = {mu}")),
            (Some(s), Some(mu)) => Err(format!("|mstar| = {} but mu(G) = {mu}", s.len())),
            _ => skipped(),
        },
    );

    let witness: Option<BTreeSet<usize>> = file.witness_a.as_ref().map(|a| a.iter().copied().collect());
    let (hall, cover) = match (&h, &m, &witness) {
        (Some(h), Some(m), Some(a)) if a.iter().all(|&l| l < file.n_left) => {
            let na = h.neighborhood(a);
            let value = na.len() + file.n_left - a.len();
            let hall = if value == m.len() {
                Ok(format!("|N(A)| + |L \\ A| = {} + {} = |m|", na.len(), file.n_left - a.len()))
            } else {
                Err(format!("|N(A)| + |L \\ A| = {} + {} = {value} but |m| = {}", na.len(), file.n_left - a.len(), m.len()))
            };
            let bad: Vec<String> = m
                .pairs()
                .iter()
                .filter(|(l, r)| usize::from(!a.contains(l)) + usize::from(na.contains(r)) != 1)
                .map(|(l, r)| format!("({l}, {r})"))
                .collect();
            let cover = if bad.is_empty() {
                Ok("every m-edge covers one witness vertex".into())
            } else {
                Err(format!("m-edges not covering exactly one witness vertex: {}", bad.join(", ")))
            };
            (hall, cover)
        }
        (_, _, Some(_)) if h.is_some() && m.is_some() => {
            let e = Err("witness vertex out of range".to_string());
            (e.clone(), e)
        }
        (_, _, None) => (Err("no witness_a given".into()), Err("no witness_a given".into())),
        _ => (skipped(), skipped()),
    };
    push("hall identity", hall);
    push("one-cover", cover);

    let ratio = match (mu_g, mu_h) {
        (Some(a), Some(b)) if b > 0 => Some(Rational::from_integer(a as i64) / Rational::from_integer(b as i64)),
        _ => None,
    };
    VerificationReport { params: params.ok(), checks, mu_g, mu_h, ratio }
}
