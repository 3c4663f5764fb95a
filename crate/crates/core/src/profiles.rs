//! Vertex and edge profiles: the structural classes whose (scaled) counts
//! are the variables of the factor-revealing LP.
//!
//! A vertex is classified by its region relative to a Hall's witness `A` of
//! `H`, its degree in `H`, and whether `M` (a maximum matching of `H`) and
//! `M*` (a maximum matching of `G`) cover it. An edge is classified by its two
//! endpoint profiles and its membership in `H`, `M` and `M*`. Ten validity
//! conditions prune the combinations that cannot occur in any instance.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// EDCS parameters `(beta, beta_minus)` with `beta > beta_minus >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    pub beta: u32,
    pub beta_minus: u32,
}

impl Params {
    pub fn new(beta: u32, beta_minus: u32) -> Result<Self> {
        let p = Params { beta, beta_minus };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.beta_minus < 1 || self.beta <= self.beta_minus {
            return Err(Error::Params(format!(
                "need beta > beta_minus >= 1, got beta = {}, beta_minus = {}",
                self.beta, self.beta_minus
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.beta, self.beta_minus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Position relative to the Hall's witness `A ⊆ L` of `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    /// Left vertex in `A`.
    A,
    /// Left vertex outside `A`.
    LminusA,
    /// Right vertex in `N_H(A)`.
    NA,
    /// Right vertex outside `N_H(A)`.
    RminusNA,
}

impl Region {
    pub const ALL: [Region; 4] = [Region::A, Region::LminusA, Region::NA, Region::RminusNA];

    pub fn side(self) -> Side {
        match self {
            Region::A | Region::LminusA => Side::Left,
            Region::NA | Region::RminusNA => Side::Right,
        }
    }

    /// Regions whose vertices cover an `M`-edge in the witness identity.
    pub fn is_cover(self) -> bool {
        matches!(self, Region::LminusA | Region::NA)
    }

    fn code(self) -> &'static str {
        match self {
            Region::A => "A",
            Region::LminusA => "LA",
            Region::NA => "NA",
            Region::RminusNA => "RN",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexProfile {
    pub side: Side,
    pub region: Region,
    pub deg_h: u32,
    pub in_m: bool,
    pub in_mstar: bool,
}

impl VertexProfile {
    pub fn new(region: Region, deg_h: u32, in_m: bool, in_mstar: bool) -> Self {
        VertexProfile { side: region.side(), region, deg_h, in_m, in_mstar }
    }

    /// Degree zero and uncovered by both matchings.
    pub fn is_isolated(&self) -> bool {
        self.deg_h == 0 && !self.in_m && !self.in_mstar
    }

    /// Short identifier usable as an LP variable name.
    pub fn label(&self) -> String {
        format!(
            "{}_d{}_m{}_s{}",
            self.region.code(),
            self.deg_h,
            u8::from(self.in_m),
            u8::from(self.in_mstar)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeProfile {
    pub left: VertexProfile,
    pub right: VertexProfile,
    pub in_h: bool,
    pub in_m: bool,
    pub in_mstar: bool,
}

impl EdgeProfile {
    pub fn label(&self) -> String {
        format!(
            "{}__{}__h{}m{}s{}",
            self.left.label(),
            self.right.label(),
            u8::from(self.in_h),
            u8::from(self.in_m),
            u8::from(self.in_mstar)
        )
    }

    pub fn endpoint(&self, side: Side) -> &VertexProfile {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

/// Enumeration switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileOptions {
    /// Keep degree-zero profiles uncovered by both matchings. They appear in
    /// no constraint, so dropping them leaves the optimum unchanged.
    pub include_isolated: bool,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions { include_isolated: true }
    }
}

/// Returns the number (1 or 2) of the first vertex condition `v` breaks,
/// or 0 for a side/region mismatch or a degree outside `[0, beta - 1]`.
pub fn vertex_violation(params: &Params, v: &VertexProfile) -> Option<u8> {
    if v.side != v.region.side() || v.deg_h >= params.beta {
        return Some(0);
    }
    // 1: N_H(A) and L \ A are covered by M.
    if v.region.is_cover() && !v.in_m {
        return Some(1);
    }
    // 2: a vertex without H-edges has no M-edge.
    if v.deg_h == 0 && v.in_m {
        return Some(2);
    }
    None
}

/// Returns the number (3 to 10) of the first edge condition `e` breaks.
/// Endpoints are assumed to be valid vertex profiles.
pub fn edge_violation(params: &Params, e: &EdgeProfile) -> Option<u8> {
    let (l, r) = (&e.left, &e.right);
    let degree_sum = l.deg_h + r.deg_h;
    if e.in_h && (l.deg_h == 0 || r.deg_h == 0) {
        return Some(3);
    }
    if (e.in_m && !(l.in_m && r.in_m)) || (e.in_mstar && !(l.in_mstar && r.in_mstar)) {
        return Some(4);
    }
    if e.in_m && !e.in_h {
        return Some(5);
    }
    if !e.in_h && !e.in_mstar {
        return Some(6);
    }
    if e.in_h && degree_sum > params.beta {
        return Some(7);
    }
    if !e.in_h && degree_sum < params.beta_minus {
        return Some(8);
    }
    if e.in_h && l.region == Region::A && r.region == Region::RminusNA {
        return Some(9);
    }
    if e.in_m {
        let ok = matches!(
            (l.region, r.region),
            (Region::A, Region::NA) | (Region::LminusA, Region::RminusNA)
        );
        if !ok {
            return Some(10);
        }
    }
    None
}

/// All valid vertex profiles in canonical order.
pub fn enumerate_vertex_profiles(params: &Params) -> Result<Vec<VertexProfile>> {
    enumerate_vertex_profiles_with(params, ProfileOptions::default())
}

pub fn enumerate_vertex_profiles_with(
    params: &Params,
    opts: ProfileOptions,
) -> Result<Vec<VertexProfile>> {
    params.validate()?;
    let mut out = Vec::new();
    // Loop nesting follows the field order, so the output is already sorted.
    for region in Region::ALL {
        for deg_h in 0..params.beta {
            for in_m in [false, true] {
                for in_mstar in [false, true] {
                    let v = VertexProfile::new(region, deg_h, in_m, in_mstar);
                    if vertex_violation(params, &v).is_some() {
                        continue;
                    }
                    if !opts.include_isolated && v.is_isolated() {
                        continue;
                    }
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}

/// All valid edge profiles over `vps` in canonical order.
pub fn enumerate_edge_profiles(params: &Params, vps: &[VertexProfile]) -> Result<Vec<EdgeProfile>> {
    params.validate()?;
    if let Some(bad) = vps.iter().find(|v| vertex_violation(params, v).is_some()) {
        return Err(Error::Params(format!(
            "vertex profile {} is not valid for parameters {params}",
            bad.label()
        )));
    }
    let mut lefts: Vec<_> = vps.iter().filter(|v| v.side == Side::Left).copied().collect();
    let mut rights: Vec<_> = vps.iter().filter(|v| v.side == Side::Right).copied().collect();
    lefts.sort();
    lefts.dedup();
    rights.sort();
    rights.dedup();

    let mut out = Vec::new();
    for &left in &lefts {
        for &right in &rights {
            for in_h in [false, true] {
                for in_m in [false, true] {
                    for in_mstar in [false, true] {
                        let e = EdgeProfile { left, right, in_h, in_m, in_mstar };
                        if edge_violation(params, &e).is_none() {
                            out.push(e);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: u32, bm: u32) -> Params {
        Params::new(b, bm).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert!(Params::new(2, 2).is_err());
        assert!(Params::new(3, 0).is_err());
        assert!(Params::new(1, 2).is_err());
        assert!(enumerate_vertex_profiles(&Params { beta: 4, beta_minus: 4 }).is_err());
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(enumerate_vertex_profiles(&p(2, 1)).unwrap().len(), 16);
        assert_eq!(enumerate_vertex_profiles(&p(6, 5)).unwrap().len(), 64);
        let no_iso = ProfileOptions { include_isolated: false };
        assert_eq!(enumerate_vertex_profiles_with(&p(2, 1), no_iso).unwrap().len(), 14);
    }

    #[test]
    fn right_regions_never_on_left() {
        let vps = enumerate_vertex_profiles(&p(5, 3)).unwrap();
        assert!(vps.iter().all(|v| v.side == v.region.side()));
        let bogus = VertexProfile { side: Side::Left, region: Region::NA, deg_h: 1, in_m: true, in_mstar: true };
        assert_eq!(vertex_violation(&p(5, 3), &bogus), Some(0));
    }

    #[test]
    fn canonical_order_is_sorted_and_unique() {
        let params = p(4, 2);
        let vps = enumerate_vertex_profiles(&params).unwrap();
        assert!(vps.windows(2).all(|w| w[0] < w[1]));
        let eps = enumerate_edge_profiles(&params, &vps).unwrap();
        assert!(eps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn condition_nine_excludes_a_to_outside_neighbourhood() {
        let params = p(7, 6);
        let e = EdgeProfile {
            left: VertexProfile::new(Region::A, 1, false, false),
            right: VertexProfile::new(Region::RminusNA, 1, false, false),
            in_h: true,
            in_m: false,
            in_mstar: false,
        };
        assert_eq!(edge_violation(&params, &e), Some(9));
    }

    #[test]
    fn condition_eight_excludes_light_missing_edges() {
        let params = p(2, 1);
        let e = EdgeProfile {
            left: VertexProfile::new(Region::A, 0, false, true),
            right: VertexProfile::new(Region::RminusNA, 0, false, true),
            in_h: false,
            in_m: false,
            in_mstar: true,
        };
        assert_eq!(edge_violation(&params, &e), Some(8));
        let vps = enumerate_vertex_profiles(&params).unwrap();
        assert!(!enumerate_edge_profiles(&params, &vps).unwrap().contains(&e));
    }

    #[test]
    fn perfect_matching_edge_is_included() {
        let params = p(2, 1);
        let e = EdgeProfile {
            left: VertexProfile::new(Region::LminusA, 1, true, true),
            right: VertexProfile::new(Region::RminusNA, 1, true, true),
            in_h: true,
            in_m: true,
            in_mstar: true,
        };
        let vps = enumerate_vertex_profiles(&params).unwrap();
        assert!(enumerate_edge_profiles(&params, &vps).unwrap().contains(&e));
    }

    #[test]
    fn foreign_vertex_profiles_are_rejected() {
        let vps = enumerate_vertex_profiles(&p(6, 5)).unwrap();
        assert!(enumerate_edge_profiles(&p(3, 2), &vps).is_err());
    }

    #[test]
    fn m_edges_cover_exactly_one_witness_vertex() {
        let params = p(6, 4);
        let vps = enumerate_vertex_profiles(&params).unwrap();
        for e in enumerate_edge_profiles(&params, &vps).unwrap() {
            if e.in_m {
                let covers = u8::from(e.left.region.is_cover()) + u8::from(e.right.region.is_cover());
                assert_eq!(covers, 1, "{}", e.label());
            }
        }
    }
}
