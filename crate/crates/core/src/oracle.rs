//! Slow definition-level reference implementations.
//!
//! Nothing here touches [`DegreePartition`](crate::partition::DegreePartition)
//! or the enumerators; only `has_edge` and `degree` queries on the graph.

use std::collections::BTreeSet;

use crate::cycle::CanonicalCycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::two_paths::{TwoPath, TwoPathClass};

pub const DEFAULT_ORACLE_LIMIT: usize = 64;
pub const ORACLE_LIMIT_ENV: &str = "FOURCYCLE_ORACLE_LIMIT";

/// The oracle vertex limit, from `FOURCYCLE_ORACLE_LIMIT` when set.
pub fn default_limit() -> usize {
    std::env::var(ORACLE_LIMIT_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::OracleLimit { n: g.n(), limit });
    }
    Ok(())
}

/// Every 4-cycle, found by testing all ordered 4-tuples for the canonical
/// predicate (`a` smallest, `b < d`) and the four cycle edges.
pub fn brute_force_list(g: &Graph, limit: usize) -> Result<BTreeSet<CanonicalCycle>> {
    check_limit(g, limit)?;
    let n = g.n();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            if b <= a || !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c <= a || c == b || !g.has_edge(b, c) {
                    continue;
                }
                for d in 0..n {
                    if d <= b || d == c || !g.has_edge(c, d) || !g.has_edge(d, a) {
                        continue;
                    }
                    out.insert(CanonicalCycle { a, b, c, d });
                }
            }
        }
    }
    Ok(out)
}

fn is_high(g: &Graph, v: Vertex) -> bool {
    let d = g.degree(v) as u128;
    d * d * d > g.m() as u128
}

fn precedes(g: &Graph, u: Vertex, v: Vertex) -> bool {
    (g.degree(u), u) < (g.degree(v), v)
}

fn classify(g: &Graph, lo: Vertex, center: Vertex, hi: Vertex, class: TwoPathClass) -> bool {
    let (hl, hc, hh) = (is_high(g, lo), is_high(g, center), is_high(g, hi));
    match class {
        TwoPathClass::Hhh => hl && hc && hh,
        TwoPathClass::LowCenter => !hc,
        TwoPathClass::OrientedLhh => {
            let (low, high) = match (hl, hh) {
                (false, true) => (lo, hi),
                (true, false) => (hi, lo),
                _ => return false,
            };
            hc && precedes(g, low, center) && precedes(g, center, high)
        }
    }
}

/// All 2-paths of one class, by a triple loop over `(lo, center, hi)`.
pub fn brute_force_two_paths(
    g: &Graph,
    class: TwoPathClass,
    limit: usize,
) -> Result<BTreeSet<TwoPath>> {
    check_limit(g, limit)?;
    let n = g.n();
    let mut out = BTreeSet::new();
    for lo in 0..n {
        for hi in lo + 1..n {
            for center in 0..n {
                if center == lo || center == hi {
                    continue;
                }
                if g.has_edge(lo, center)
                    && g.has_edge(center, hi)
                    && classify(g, lo, center, hi, class)
                {
                    out.insert(TwoPath {
                        lo,
                        hi,
                        center,
                        class,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        g(&e)
    }

    #[test]
    fn brute_list_examples() {
        let c4 = g(&[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let cycles: Vec<_> = brute_force_list(&c4, 64).unwrap().into_iter().collect();
        assert_eq!(
            cycles,
            vec![CanonicalCycle {
                a: 0,
                b: 1,
                c: 2,
                d: 3
            }]
        );
        assert!(brute_force_list(&petersen(), 64).unwrap().is_empty());
        let k33 = g(&[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ]);
        assert_eq!(brute_force_list(&k33, 64).unwrap().len(), 9);
    }

    #[test]
    fn brute_two_path_examples() {
        let k4 = g(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            brute_force_two_paths(&k4, TwoPathClass::Hhh, 64)
                .unwrap()
                .len(),
            12
        );
        let star = g(&[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert!(brute_force_two_paths(&star, TwoPathClass::LowCenter, 64)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn refuses_large_graphs() {
        let big = Graph::empty(65);
        assert!(matches!(
            brute_force_list(&big, 64),
            Err(Error::OracleLimit { n: 65, limit: 64 })
        ));
        assert!(brute_force_two_paths(&big, TwoPathClass::Hhh, 64).is_err());
        assert!(brute_force_list(&big, 100).unwrap().is_empty());
    }
}
