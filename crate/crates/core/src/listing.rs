//! 4-cycle listing, detection and counting.
//!
//! Both listing algorithms group 2-paths by their unordered endpoint pair:
//! any two distinct centers `x, y` of the pair `{u, v}` close the cycle
//! `u – x – v – y`. A cycle has two opposite pairs, so it can show up as a
//! candidate twice; duplicates are filtered before reaching the sink.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rustc_hash::{FxHashMap, FxHashSet};
use smallvec::SmallVec;

use crate::cycle::CanonicalCycle;
use crate::diagnostics::trace_count;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle;
use crate::partition::degree_partition;
use crate::two_paths::{enum_hhh_paths, enum_lcenter_paths, enum_oriented_lhh_paths, TwoPath};

/// Work counters of one listing run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ListingStats {
    /// Distinct cycles handed to the sink (`t` for a complete run).
    pub cycles: u64,
    /// 2-paths fed into the endpoint grouping.
    pub useful_two_paths: u64,
    /// Σ over endpoint groups of C(|centers|, 2).
    pub raw_candidates: u64,
    /// Candidates rejected as an already-listed cycle.
    pub dedup_hits: u64,
    /// The sink asked to stop before the listing finished.
    pub stopped: bool,
}

/// Lists all 4-cycles in `O(n² + t)` time.
///
/// Works one row of the pair table at a time: for each `u` it buckets the
/// centers of every 2-path `u – w – v` with `v > u`, then scans all `v > u`.
/// The scan is the `n²` term. A cycle is emitted from the row of its
/// smallest vertex only, which removes the copy coming from the other
/// opposite pair without any set.
pub fn list_n2<F>(g: &Graph, mut sink: F) -> ListingStats
where
    F: FnMut(CanonicalCycle) -> ControlFlow<()>,
{
    const CHUNK: usize = 64;
    let n = g.n();
    let mut stats = ListingStats::default();
    // mark[v] = min(number of centers of (u, v), 2) for the current row
    let mut mark = vec![0u8; n];
    let mut centers: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut touched = Vec::new();

    for u in 0..n {
        for &w in g.neighbors(u) {
            let nbrs = g.neighbors(w);
            let start = nbrs.partition_point(|&v| v <= u);
            for &v in &nbrs[start..] {
                stats.useful_two_paths += 1;
                if mark[v] == 0 {
                    touched.push(v);
                }
                mark[v] = (mark[v] + 1).min(2);
                centers[v].push(w);
            }
        }

        let row = &mark[u + 1..];
        for (k, chunk) in row.chunks(CHUNK).enumerate() {
            if chunk.iter().fold(0u8, |acc, &x| acc | x) & 2 == 0 {
                continue;
            }
            for (j, &x) in chunk.iter().enumerate() {
                if x < 2 {
                    continue;
                }
                let v = u + 1 + k * CHUNK + j;
                let cs = &centers[v];
                for (i, &x) in cs.iter().enumerate() {
                    for &y in &cs[i + 1..] {
                        stats.raw_candidates += 1;
                        if x < u || y < u {
                            stats.dedup_hits += 1;
                            continue;
                        }
                        let cycle = CanonicalCycle::from_opposite(u, v, x, y);
                        debug_assert!(cycle.is_valid(g));
                        stats.cycles += 1;
                        if sink(cycle).is_break() {
                            stats.stopped = true;
                            return stats;
                        }
                    }
                }
            }
        }

        for &v in &touched {
            mark[v] = 0;
            centers[v].clear();
        }
        touched.clear();
    }
    stats
}

/// Endpoint grouping shared by the three 2-path streams of [`list_m43`].
struct Grouper<'g, F> {
    graph: &'g Graph,
    groups: FxHashMap<(Vertex, Vertex), SmallVec<[Vertex; 4]>>,
    seen: FxHashSet<CanonicalCycle>,
    stats: ListingStats,
    sink: F,
}

impl<F> Grouper<'_, F>
where
    F: FnMut(CanonicalCycle) -> ControlFlow<()>,
{
    fn push(&mut self, path: TwoPath) -> ControlFlow<()> {
        self.stats.useful_two_paths += 1;
        let group = self.groups.entry((path.lo, path.hi)).or_default();
        for &other in group.iter() {
            self.stats.raw_candidates += 1;
            let cycle = CanonicalCycle::from_opposite(path.lo, path.hi, other, path.center);
            debug_assert!(cycle.is_valid(self.graph));
            if !self.seen.insert(cycle) {
                self.stats.dedup_hits += 1;
                continue;
            }
            self.stats.cycles += 1;
            if (self.sink)(cycle).is_break() {
                self.stats.stopped = true;
                return ControlFlow::Break(());
            }
        }
        group.push(path.center);
        ControlFlow::Continue(())
    }
}

/// Lists all 4-cycles in `Õ(m^{4/3} + t)` time.
///
/// Only three classes of 2-paths are grouped: all-high paths, paths with a
/// low center, and oriented low → high → high paths. Every 4-cycle has an
/// opposite pair whose two 2-paths both fall in these classes:
///
/// * no low vertex: two all-high paths;
/// * two non-adjacent low vertices (or three or four low): two low-center paths;
/// * exactly one low vertex: an all-high path plus a low-center path;
/// * two adjacent low `x – y` and two adjacent high `z – w`
///   (`x ~ w`, `y ~ z`): one low-center path plus whichever of
///   `x → w → z` / `y → z → w` agrees with the orientation of `w – z`.
///
/// Cycles are emitted as soon as their second 2-path arrives.
pub fn list_m43<F>(g: &Graph, sink: F) -> ListingStats
where
    F: FnMut(CanonicalCycle) -> ControlFlow<()>,
{
    let p = degree_partition(g);
    let mut grouper = Grouper {
        graph: g,
        groups: FxHashMap::default(),
        seen: FxHashSet::default(),
        stats: ListingStats::default(),
        sink,
    };
    enum_hhh_paths(g, &p, |t| grouper.push(t));
    if !grouper.stats.stopped {
        enum_lcenter_paths(g, &p, |t| grouper.push(t));
    }
    if !grouper.stats.stopped {
        enum_oriented_lhh_paths(g, &p, |t| grouper.push(t));
    }
    grouper.stats
}

/// True when `n²` is predicted cheaper than `m^{4/3}`.
pub fn prefers_n2(g: &Graph) -> bool {
    let (n, m) = (g.n() as f64, g.m() as f64);
    n * n <= m.powf(4.0 / 3.0)
}

/// Whether the graph contains a 4-cycle. Runs the cheaper listing
/// algorithm and stops at the first cycle.
pub fn detect(g: &Graph) -> bool {
    let stop = |_| ControlFlow::Break(());
    let stats = if prefers_n2(g) {
        list_n2(g, stop)
    } else {
        list_m43(g, stop)
    };
    stats.cycles > 0
}

/// `t = ½ Σ_{u<v} C(codeg(u, v), 2)`, with codegrees accumulated row by
/// row from 2-paths.
pub fn count_codegree(g: &Graph) -> u64 {
    let n = g.n();
    let mut codeg = vec![0u64; n];
    let mut touched = Vec::new();
    let mut pairs = 0u64;
    for u in 0..n {
        for &w in g.neighbors(u) {
            let nbrs = g.neighbors(w);
            let start = nbrs.partition_point(|&v| v <= u);
            for &v in &nbrs[start..] {
                if codeg[v] == 0 {
                    touched.push(v);
                }
                codeg[v] += 1;
            }
        }
        for &v in &touched {
            let c = codeg[v];
            pairs += c * (c - 1) / 2;
            codeg[v] = 0;
        }
        touched.clear();
    }
    debug_assert_eq!(pairs % 2, 0);
    pairs / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    N2,
    M43,
    Codegree,
    Trace,
    Brute,
}

impl Algo {
    pub const ALL: [Algo; 5] = [
        Algo::N2,
        Algo::M43,
        Algo::Codegree,
        Algo::Trace,
        Algo::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::N2 => "n2",
            Algo::M43 => "m43",
            Algo::Codegree => "codegree",
            Algo::Trace => "trace",
            Algo::Brute => "brute",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgo(s.to_string()))
    }
}

/// Number of 4-cycles computed by the chosen backend.
///
/// `Brute` honors the default oracle limit and fails above it.
pub fn count(g: &Graph, algo: Algo) -> Result<u64> {
    let keep_going = |_| ControlFlow::Continue(());
    Ok(match algo {
        Algo::N2 => list_n2(g, keep_going).cycles,
        Algo::M43 => list_m43(g, keep_going).cycles,
        Algo::Codegree => count_codegree(g),
        Algo::Trace => trace_count(g)?,
        Algo::Brute => oracle::brute_force_list(g, oracle::default_limit())?.len() as u64,
    })
}

/// Collects a listing run into a sorted vector.
pub fn collect_cycles(
    g: &Graph,
    list: impl FnOnce(&Graph, &mut dyn FnMut(CanonicalCycle) -> ControlFlow<()>) -> ListingStats,
) -> (Vec<CanonicalCycle>, ListingStats) {
    let mut out = Vec::new();
    let stats = list(g, &mut |c| {
        out.push(c);
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    (out, stats)
}
