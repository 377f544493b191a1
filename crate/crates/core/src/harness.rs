//! Benchmark harness: named graph families, timed runs, and log-log slope
//! fits over a size sweep.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Ratio;
use serde::Serialize;

use crate::diagnostics::trace_count;
use crate::error::{Error, Result};
use crate::generators::*;
use crate::graph::Graph;
use crate::listing::{count_codegree, list_m43, list_n2, Algo, ListingStats};
use crate::oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Star,
    LhhAdversary,
    CompleteBipartite,
    Complete,
    Cycle,
    Grid,
    ErdosRenyi,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Star,
        Family::LhhAdversary,
        Family::CompleteBipartite,
        Family::Complete,
        Family::Cycle,
        Family::Grid,
        Family::ErdosRenyi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::LhhAdversary => "lhh_adversary",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Grid => "grid",
            Family::ErdosRenyi => "erdos_renyi",
        }
    }

    /// Instance of "size" `size` used by benchmark sweeps:
    /// `erdos_renyi` is `G(n = size, m = size)`, `grid` is
    /// `⌊√size⌋ × ⌊√size⌋`, `complete_bipartite` is `K_{size,size}`, and the
    /// other families take `size` as their vertex parameter.
    pub fn sized(self, size: usize, seed: u64, eps: Ratio<u64>) -> Result<(Graph, String)> {
        Ok(match self {
            Family::Star => (gen_star(size)?, format!("n={size}")),
            Family::LhhAdversary => (gen_lhh_adversary(size, eps)?, format!("n={size},eps={eps}")),
            Family::CompleteBipartite => (
                gen_complete_bipartite(size, size)?,
                format!("a={size},b={size}"),
            ),
            Family::Complete => (gen_complete(size)?, format!("n={size}")),
            Family::Cycle => (gen_cycle(size)?, format!("n={size}")),
            Family::Grid => {
                let side = (size as f64).sqrt().floor() as usize;
                (gen_grid(side, side)?, format!("rows={side},cols={side}"))
            }
            Family::ErdosRenyi => (
                gen_erdos_renyi(size, size, seed)?,
                format!("n={size},m={size}"),
            ),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// One timed run, serialized as a JSON line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub family: String,
    pub parameters: String,
    pub n: usize,
    pub m: usize,
    pub algo: String,
    pub t: u64,
    /// Seconds.
    pub wall_time: f64,
    pub useful_2path_count: Option<u64>,
    pub raw_candidates: Option<u64>,
    pub dedup_hits: Option<u64>,
    pub seed: u64,
}

/// Runs `algo` once on `g` and times it.
pub fn timed_run(g: &Graph, algo: Algo) -> Result<(u64, Option<ListingStats>, f64)> {
    let keep_going = |_| ControlFlow::Continue(());
    let start = Instant::now();
    let (t, stats) = match algo {
        Algo::N2 => {
            let s = list_n2(g, keep_going);
            (s.cycles, Some(s))
        }
        Algo::M43 => {
            let s = list_m43(g, keep_going);
            (s.cycles, Some(s))
        }
        Algo::Codegree => (count_codegree(g), None),
        Algo::Trace => (trace_count(g)?, None),
        Algo::Brute => (
            oracle::brute_force_list(g, oracle::default_limit())?.len() as u64,
            None,
        ),
    };
    // clamp so a record never reports zero time
    let wall = start.elapsed().as_secs_f64().max(1e-9);
    Ok((t, stats, wall))
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub seed: u64,
    pub algos: Vec<Algo>,
    pub eps: Ratio<u64>,
}

/// Runs the sweep; `emit` sees each record as soon as it is produced.
///
/// Each size is generated once and shared by every algorithm, so the
/// records of different algorithms describe matched instances.
pub fn run_bench(
    config: &BenchConfig,
    mut emit: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for &size in &config.sizes {
        let (g, parameters) = config.family.sized(size, config.seed, config.eps)?;
        for &algo in &config.algos {
            for _ in 0..config.repeats.max(1) {
                let (t, stats, wall_time) = timed_run(&g, algo)?;
                let record = BenchRecord {
                    family: config.family.to_string(),
                    parameters: parameters.clone(),
                    n: g.n(),
                    m: g.m(),
                    algo: algo.to_string(),
                    t,
                    wall_time,
                    useful_2path_count: stats.map(|s| s.useful_two_paths),
                    raw_candidates: stats.map(|s| s.raw_candidates),
                    dedup_hits: stats.map(|s| s.dedup_hits),
                    seed: config.seed,
                };
                emit(&record);
                records.push(record);
            }
        }
    }
    Ok(records)
}

/// Least-squares slope of `ln y` against `ln x`. `None` with fewer than two
/// distinct `x` values.
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (logs.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    N,
    M,
}

/// Per-algorithm slope of wall time against `n` or `m`, using the fastest
/// repeat of every instance.
pub fn slopes(records: &[BenchRecord], axis: Axis) -> BTreeMap<String, f64> {
    let mut best: BTreeMap<(String, usize), f64> = BTreeMap::new();
    for r in records {
        let x = match axis {
            Axis::N => r.n,
            Axis::M => r.m,
        };
        let e = best.entry((r.algo.clone(), x)).or_insert(f64::INFINITY);
        *e = e.min(r.wall_time);
    }
    let mut per_algo: BTreeMap<String, Vec<(f64, f64)>> = BTreeMap::new();
    for ((algo, x), y) in best {
        per_algo.entry(algo).or_default().push((x as f64, y));
    }
    per_algo
        .into_iter()
        .filter_map(|(algo, pts)| fit_loglog_slope(&pts).map(|s| (algo, s)))
        .collect()
}
