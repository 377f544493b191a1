//! Shared instances for the criterion benchmarks.

use fourcycle::{gen_erdos_renyi, gen_lhh_adversary, gen_star, Graph};
use num_rational::Ratio;

/// Sparse `G(n, m)` with `n = m`; expected number of 4-cycles is O(1).
pub fn sparse_random(m: usize, seed: u64) -> Graph {
    gen_erdos_renyi(m, m, seed).expect("m <= C(m, 2) for m >= 3")
}

/// Average degree `2m/n` over `n` vertices; dense enough to carry 4-cycles.
pub fn dense_random(n: usize, avg_degree: usize, seed: u64) -> Graph {
    gen_erdos_renyi(n, n * avg_degree / 2, seed).expect("feasible density")
}

pub fn adversary(n: usize) -> Graph {
    gen_lhh_adversary(n, Ratio::new(1, 10)).expect("n large enough")
}

pub fn star(n: usize) -> Graph {
    gen_star(n).expect("n >= 1")
}
