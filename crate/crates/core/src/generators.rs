//! Graph families used by tests, the CLI and benchmarks.
//!
//! Numbering conventions:
//! * star: center 0, leaves `1..n`.
//! * L→H→H adversary: hub 0, hub leaves `1..=n`, mid nodes `n+1..=n+h`,
//!   then the `ℓ` leaves of each mid node in mid-node order.
//! * `K_{a,b}`: side A is `0..a`, side B is `a..a+b`.
//! * grid: vertex `(i, j)` is `i·cols + j`.

use num_bigint::BigUint;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, Vertex};

fn from_edges(edges: &[(Vertex, Vertex)], n: usize) -> Graph {
    build_graph(edges, Some(n))
        .expect("generator produced a self-loop")
        .graph
}

/// `K_{1,n−1}`.
pub fn gen_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(from_edges(&edges, n))
}

/// `⌊n^{num/den}⌋`, exactly.
pub fn floor_pow(n: u64, exp: Ratio<u64>) -> u64 {
    let (num, den) = (*exp.numer(), *exp.denom());
    if n <= 1 || num == 0 {
        return if num == 0 { 1 } else { n };
    }
    let bound = BigUint::from(n).pow(num as u32);
    let fits = |k: u64| BigUint::from(k).pow(den as u32) <= bound;
    let mut k = (n as f64).powf(num as f64 / den as f64).floor() as u64;
    while k > 0 && !fits(k) {
        k -= 1;
    }
    while fits(k + 1) {
        k += 1;
    }
    k
}

/// Sizes of an adversary instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdversaryShape {
    pub hub_leaves: usize,
    /// `h = ⌊n^{2/3 − ε}⌋`
    pub mids: usize,
    /// `ℓ = ⌊n^{1/3 + ε}⌋`
    pub leaves_per_mid: usize,
}

impl AdversaryShape {
    pub fn new(n: usize, eps: Ratio<u64>) -> Result<Self> {
        let third = Ratio::new(1, 3);
        if eps <= Ratio::from_integer(0) || eps >= third {
            return Err(Error::InvalidParameter(format!(
                "eps must lie in (0, 1/3), got {eps}"
            )));
        }
        let mids = floor_pow(n as u64, third * 2 - eps) as usize;
        let leaves_per_mid = floor_pow(n as u64, third + eps) as usize;
        if mids == 0 || leaves_per_mid == 0 {
            return Err(Error::InvalidParameter(format!(
                "n = {n} too small for eps = {eps}"
            )));
        }
        Ok(AdversaryShape {
            hub_leaves: n,
            mids,
            leaves_per_mid,
        })
    }

    pub fn vertices(&self) -> usize {
        1 + self.hub_leaves + self.mids * (1 + self.leaves_per_mid)
    }

    pub fn edges(&self) -> usize {
        self.hub_leaves + self.mids * (1 + self.leaves_per_mid)
    }
}

/// Hub with `n` leaves and `h` mid nodes, each mid node with `ℓ` own leaves.
///
/// It has no 4-cycles but about `n·h` unoriented L–H–H 2-paths through the
/// hub, while only `h·ℓ` of them survive the degree orientation.
pub fn gen_lhh_adversary(n: usize, eps: Ratio<u64>) -> Result<Graph> {
    let shape = AdversaryShape::new(n, eps)?;
    let mut edges = Vec::with_capacity(shape.edges());
    edges.extend((1..=n).map(|v| (0, v)));
    let mut next = n + 1 + shape.mids;
    for i in 0..shape.mids {
        let mid = n + 1 + i;
        edges.push((0, mid));
        for _ in 0..shape.leaves_per_mid {
            edges.push((mid, next));
            next += 1;
        }
    }
    Ok(from_edges(&edges, shape.vertices()))
}

pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("K_{a,b} needs a, b >= 1".into()));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        edges.extend((a..a + b).map(|v| (u, v)));
    }
    Ok(from_edges(&edges, a + b))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("K_n needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Ok(from_edges(&edges, n))
}

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("C_n needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(from_edges(&edges, n))
}

pub fn gen_grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidParameter("grid needs rows, cols >= 1".into()));
    }
    let id = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if j + 1 < cols {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < rows {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Ok(from_edges(&edges, rows * cols))
}

/// `G(n, m)`: `m_target` distinct edges drawn uniformly, reproducible per seed.
///
/// Above half density the complement is sampled instead.
pub fn gen_erdos_renyi(n: usize, m_target: usize, seed: u64) -> Result<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    if m_target > total {
        return Err(Error::InvalidParameter(format!(
            "{m_target} edges requested but K_{n} has only {total}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let complement = 2 * m_target > total;
    let draws = if complement {
        total - m_target
    } else {
        m_target
    };

    let mut chosen = FxHashSet::default();
    let mut order = Vec::with_capacity(draws);
    while order.len() < draws {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if chosen.insert(e) {
            order.push(e);
        }
    }

    let edges = if complement {
        let mut kept = Vec::with_capacity(m_target);
        for u in 0..n {
            kept.extend(
                (u + 1..n)
                    .filter(|&v| !chosen.contains(&(u, v)))
                    .map(|v| (u, v)),
            );
        }
        kept
    } else {
        order
    };
    Ok(from_edges(&edges, n))
}
