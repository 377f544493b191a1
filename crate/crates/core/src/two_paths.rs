//! Streaming enumeration of the three 2-path classes that suffice to
//! rebuild every 4-cycle:
//!
//! * [`TwoPathClass::Hhh`]: all three vertices high.
//! * [`TwoPathClass::LowCenter`]: the center is low.
//! * [`TwoPathClass::OrientedLhh`]: `u → v → w` along the degree orientation
//!   with `u` low and `v`, `w` high.
//!
//! The classes are pairwise disjoint. Each enumerator hands paths to a sink
//! one at a time; a sink returning [`ControlFlow::Break`] stops enumeration.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::partition::DegreePartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TwoPathClass {
    Hhh,
    LowCenter,
    OrientedLhh,
}

/// A path `lo – center – hi` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoPath {
    pub lo: Vertex,
    pub hi: Vertex,
    pub center: Vertex,
    pub class: TwoPathClass,
}

impl TwoPath {
    #[inline]
    pub fn new(a: Vertex, center: Vertex, b: Vertex, class: TwoPathClass) -> Self {
        debug_assert!(a != b && a != center && b != center);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        TwoPath {
            lo,
            hi,
            center,
            class,
        }
    }

    /// Checks the structural and class invariants against `g` and `p`.
    pub fn is_valid(&self, g: &Graph, p: &DegreePartition) -> bool {
        let TwoPath { lo, hi, center, .. } = *self;
        if lo >= hi || center == lo || center == hi {
            return false;
        }
        if !g.has_edge(lo, center) || !g.has_edge(center, hi) {
            return false;
        }
        match self.class {
            TwoPathClass::Hhh => p.is_high(lo) && p.is_high(center) && p.is_high(hi),
            TwoPathClass::LowCenter => p.is_low(center),
            TwoPathClass::OrientedLhh => {
                let (low, high) = match (p.is_low(lo), p.is_low(hi)) {
                    (true, false) => (lo, hi),
                    (false, true) => (hi, lo),
                    _ => return false,
                };
                p.is_high(center) && p.points_to(low, center) && p.points_to(center, high)
            }
        }
    }
}

/// Emits every 2-path whose vertices all lie in H, once each.
pub fn enum_hhh_paths<F>(g: &Graph, p: &DegreePartition, mut sink: F) -> u64
where
    F: FnMut(TwoPath) -> ControlFlow<()>,
{
    let mut emitted = 0;
    let mut high_nbrs = Vec::new();
    for &c in p.high_vertices() {
        high_nbrs.clear();
        high_nbrs.extend(g.neighbors(c).iter().copied().filter(|&w| p.is_high(w)));
        for (i, &a) in high_nbrs.iter().enumerate() {
            for &b in &high_nbrs[i + 1..] {
                emitted += 1;
                if sink(TwoPath::new(a, c, b, TwoPathClass::Hhh)).is_break() {
                    return emitted;
                }
            }
        }
    }
    emitted
}

/// Emits every 2-path whose center lies in L, once each.
///
/// Each low center has at most `m^{1/3}` neighbors, so the work is
/// `O(m^{4/3})`.
pub fn enum_lcenter_paths<F>(g: &Graph, p: &DegreePartition, mut sink: F) -> u64
where
    F: FnMut(TwoPath) -> ControlFlow<()>,
{
    let mut emitted = 0;
    for c in p.low_vertices() {
        let nbrs = g.neighbors(c);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                emitted += 1;
                if sink(TwoPath::new(a, c, b, TwoPathClass::LowCenter)).is_break() {
                    return emitted;
                }
            }
        }
    }
    emitted
}

/// Emits every directed path `u → v → w` with `u ∈ L`, `v, w ∈ H`.
///
/// The out-neighbors in H of every high vertex are collected once up front
/// (sorted by id); afterwards each low vertex walks its high neighbors and
/// expands their lists. Total work is `O(m + P)`. Emission order is
/// ascending in `(u, v, w)`.
pub fn enum_oriented_lhh_paths<F>(g: &Graph, p: &DegreePartition, mut sink: F) -> u64
where
    F: FnMut(TwoPath) -> ControlFlow<()>,
{
    let high_out = HighOutLists::new(g, p);
    let mut emitted = 0;
    for u in p.low_vertices() {
        for &v in g.neighbors(u) {
            if !p.is_high(v) || !p.points_to(u, v) {
                continue;
            }
            for &w in high_out.get(v) {
                emitted += 1;
                if sink(TwoPath::new(u, v, w, TwoPathClass::OrientedLhh)).is_break() {
                    return emitted;
                }
            }
        }
    }
    emitted
}

/// CSR-style table of `v → w` edges with both endpoints in H.
struct HighOutLists {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl HighOutLists {
    fn new(g: &Graph, p: &DegreePartition) -> Self {
        let mut offsets = vec![0; g.n() + 1];
        let mut targets = Vec::new();
        for v in g.vertices() {
            if p.is_high(v) {
                targets.extend(p.out_neighbors(g, v).filter(|&w| p.is_high(w)));
            }
            offsets[v + 1] = targets.len();
        }
        HighOutLists { offsets, targets }
    }

    #[inline]
    fn get(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Counts of 2-paths by center class and unordered endpoint classes.
///
/// The six `*_center_*` fields partition all 2-paths; `oriented_lhh` is the
/// directed count `P`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TwoPathCensus {
    pub low_center_ll: u64,
    pub low_center_lh: u64,
    pub low_center_hh: u64,
    pub high_center_ll: u64,
    pub high_center_lh: u64,
    pub high_center_hh: u64,
    pub oriented_lhh: u64,
    pub total: u64,
}

impl TwoPathCensus {
    pub fn low_center(&self) -> u64 {
        self.low_center_ll + self.low_center_lh + self.low_center_hh
    }

    /// Unoriented L–H–H paths: high center, one low and one high endpoint.
    pub fn unoriented_lhh(&self) -> u64 {
        self.high_center_lh
    }

    pub fn hhh(&self) -> u64 {
        self.high_center_hh
    }

    /// Number of paths the `m^{4/3}` listing pipeline enumerates.
    pub fn useful(&self) -> u64 {
        self.hhh() + self.low_center() + self.oriented_lhh
    }
}

#[inline]
fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Counts 2-paths per class without materializing them.
pub fn two_path_census(g: &Graph, p: &DegreePartition) -> TwoPathCensus {
    let mut c = TwoPathCensus::default();
    for v in g.vertices() {
        let (mut low, mut high, mut low_in, mut high_out) = (0u64, 0u64, 0u64, 0u64);
        for &w in g.neighbors(v) {
            if p.is_high(w) {
                high += 1;
                if p.points_to(v, w) {
                    high_out += 1;
                }
            } else {
                low += 1;
                if p.points_to(w, v) {
                    low_in += 1;
                }
            }
        }
        let (ll, lh, hh) = (choose2(low), low * high, choose2(high));
        if p.is_high(v) {
            c.high_center_ll += ll;
            c.high_center_lh += lh;
            c.high_center_hh += hh;
            c.oriented_lhh += low_in * high_out;
        } else {
            c.low_center_ll += ll;
            c.low_center_lh += lh;
            c.low_center_hh += hh;
        }
        c.total += ll + lh + hh;
    }
    c
}
