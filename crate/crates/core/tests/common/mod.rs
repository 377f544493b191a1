#![allow(dead_code)]

use fourcycle::{gen_erdos_renyi, Graph};

/// Seeded `G(n, m)` graphs with `n ∈ [4, 40]` and densities from very sparse
/// to complete.
pub fn corpus(count: usize) -> Vec<(String, Graph)> {
    const DENSITIES: [f64; 8] = [0.03, 0.08, 0.15, 0.25, 0.4, 0.6, 0.85, 1.0];
    (0..count)
        .map(|i| {
            let n = 4 + (i * 7) % 37;
            let total = n * (n - 1) / 2;
            let m = ((total as f64) * DENSITIES[i % DENSITIES.len()]).round() as usize;
            let seed = 1_000 + i as u64;
            let g = gen_erdos_renyi(n, m.min(total), seed).unwrap();
            (format!("er(n={n},m={m},seed={seed})"), g)
        })
        .collect()
}

pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
