//! Invariants checked on random graphs against the brute-force oracle.

mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::path::Path;

use fourcycle::diagnostics::{degenerate_walks, work_bound};
use fourcycle::io::{parse_edge_list, write_edge_list};
use fourcycle::listing::collect_cycles;
use fourcycle::oracle::{brute_force_list, brute_force_two_paths};
use fourcycle::*;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..24).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..(n * n / 2 + 1)).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            build_graph(&edges, Some(n)).unwrap().graph
        })
    })
}

fn materialize(
    g: &Graph,
    p: &DegreePartition,
    f: impl FnOnce(&Graph, &DegreePartition, &mut dyn FnMut(TwoPath) -> ControlFlow<()>) -> u64,
) -> BTreeSet<TwoPath> {
    let mut out = BTreeSet::new();
    let n = f(g, p, &mut |t| {
        assert!(t.is_valid(g, p), "invalid emission {t:?}");
        assert!(out.insert(t), "duplicate emission {t:?}");
        ControlFlow::Continue(())
    });
    assert_eq!(n as usize, out.len());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_is_simple_symmetric_sorted(g in arb_graph()) {
        let mut deg_sum = 0;
        for v in g.vertices() {
            let nb = g.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!nb.contains(&v));
            for &w in nb {
                prop_assert!(g.neighbors(w).contains(&v));
            }
            deg_sum += g.degree(v);
        }
        prop_assert_eq!(deg_sum, 2 * g.m());
    }

    #[test]
    fn partition_and_orientation(g in arb_graph()) {
        let p = degree_partition(&g);
        prop_assert_eq!(&p, &degree_partition(&g));
        let m = g.m() as u128;
        for v in g.vertices() {
            let d = g.degree(v) as u128;
            prop_assert_eq!(p.is_high(v), d * d * d > m);
        }
        if m > 0 {
            let h = p.high_vertices().len() as u128;
            prop_assert!(h * h * h * m < 8 * m * m * m);
        }
        for (u, v) in g.edges() {
            prop_assert!(p.points_to(u, v) ^ p.points_to(v, u));
        }
    }

    #[test]
    fn enumerators_match_brute_force(g in arb_graph()) {
        let p = degree_partition(&g);
        let hhh = materialize(&g, &p, |g, p, s| enum_hhh_paths(g, p, s));
        let low = materialize(&g, &p, |g, p, s| enum_lcenter_paths(g, p, s));
        let lhh = materialize(&g, &p, |g, p, s| enum_oriented_lhh_paths(g, p, s));
        prop_assert_eq!(&hhh, &brute_force_two_paths(&g, TwoPathClass::Hhh, 64).unwrap());
        prop_assert_eq!(&low, &brute_force_two_paths(&g, TwoPathClass::LowCenter, 64).unwrap());
        prop_assert_eq!(&lhh, &brute_force_two_paths(&g, TwoPathClass::OrientedLhh, 64).unwrap());

        // disjoint as (endpoints, center) triples
        let key = |t: &TwoPath| (t.lo, t.hi, t.center);
        let mut all = BTreeSet::new();
        for t in hhh.iter().chain(&low).chain(&lhh) {
            prop_assert!(all.insert(key(t)));
        }

        let c = two_path_census(&g, &p);
        prop_assert_eq!(c.total, g.two_path_total());
        prop_assert_eq!(
            c.low_center_ll + c.low_center_lh + c.low_center_hh
                + c.high_center_ll + c.high_center_lh + c.high_center_hh,
            c.total
        );
        prop_assert_eq!(c.hhh(), hhh.len() as u64);
        prop_assert_eq!(c.low_center(), low.len() as u64);
        prop_assert_eq!(c.oriented_lhh, lhh.len() as u64);
        prop_assert!(c.oriented_lhh <= c.unoriented_lhh());
    }

    #[test]
    fn listings_agree_with_oracle(g in arb_graph()) {
        let expected: Vec<_> = brute_force_list(&g, 64).unwrap().into_iter().collect();
        let t = expected.len() as u64;
        let (a, sa) = collect_cycles(&g, |g, s| list_n2(g, s));
        let (b, sb) = collect_cycles(&g, |g, s| list_m43(g, s));
        prop_assert_eq!(&a, &expected);
        prop_assert_eq!(&b, &expected);
        for c in &a {
            prop_assert!(c.is_valid(&g));
        }
        for s in [sa, sb] {
            prop_assert_eq!(s.cycles, t);
            prop_assert_eq!(s.dedup_hits, s.raw_candidates - t);
            prop_assert!(t <= s.raw_candidates && s.raw_candidates <= 2 * t);
        }
        prop_assert_eq!(sa.raw_candidates, 2 * t);
        prop_assert_eq!(sa.useful_two_paths, g.two_path_total());
        prop_assert!((sb.useful_two_paths as f64) <= work_bound(g.n(), g.m(), t));
        prop_assert_eq!(count_codegree(&g), t);
        prop_assert_eq!(trace_count(&g).unwrap(), t);
        prop_assert_eq!(detect(&g), t > 0);
    }

    #[test]
    fn walk_identity_and_spectral_floor(g in arb_graph()) {
        let w = closed_4_walks(&g);
        let excess = w - degenerate_walks(&g);
        prop_assert_eq!(excess % 8, 0);
        prop_assert_eq!((excess / 8) as u64, count_codegree(&g));
        prop_assert!(spectral_floor_check(&g));
    }

    #[test]
    fn regular_partition_is_structurally_sound(g in arb_graph(), seed in any::<u64>()) {
        let p = degree_partition(&g);
        let rp = find_regular_partition(&g, &p, 8, seed);
        prop_assert!(rp.verify(&g, &p));
        prop_assert!(rp.achieved_paths <= rp.total_paths);
        prop_assert_eq!(rp, find_regular_partition(&g, &p, 8, seed));
    }

    #[test]
    fn canonical_form_is_symmetry_invariant(w in proptest::sample::subsequence((0usize..50).collect::<Vec<_>>(), 4)
        .prop_shuffle()) {
        let w = [w[0], w[1], w[2], w[3]];
        let c = CanonicalCycle::from_walk(w);
        prop_assert!(c.is_canonical());
        for r in 0..4 {
            let rot = [w[r], w[(r + 1) % 4], w[(r + 2) % 4], w[(r + 3) % 4]];
            prop_assert_eq!(CanonicalCycle::from_walk(rot), c);
            prop_assert_eq!(CanonicalCycle::from_walk([rot[0], rot[3], rot[2], rot[1]]), c);
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let list = parse_edge_list(buf.as_slice(), Path::new("mem")).unwrap();
        prop_assert_eq!(build_graph(&list.edges, list.n_hint).unwrap().graph, g);
    }

    #[test]
    fn erdos_renyi_is_deterministic(n in 2usize..60, frac in 0.0f64..=1.0, seed in any::<u64>()) {
        let m = ((n * (n - 1) / 2) as f64 * frac) as usize;
        let a = gen_erdos_renyi(n, m, seed).unwrap();
        prop_assert_eq!(a.m(), m);
        prop_assert_eq!(a, gen_erdos_renyi(n, m, seed).unwrap());
    }
}

#[test]
fn adversary_paths_match_oracle() {
    let g = gen_lhh_adversary(64, num_rational::Ratio::new(1, 10)).unwrap();
    let p = degree_partition(&g);
    let fast = materialize(&g, &p, |g, p, s| enum_oriented_lhh_paths(g, p, s));
    let slow = brute_force_two_paths(&g, TwoPathClass::OrientedLhh, 256).unwrap();
    assert_eq!(fast, slow);
    // h = ⌊64^{17/30}⌋ = 10 mid nodes with ℓ = ⌊64^{13/30}⌋ = 6 leaves each
    assert_eq!(fast.len(), 60);
    assert!(brute_force_list(&g, 256).unwrap().is_empty());
}

#[test]
fn corpus_graphs_agree_on_every_backend() {
    for (name, g) in common::corpus(40) {
        let t = brute_force_list(&g, 64).unwrap().len() as u64;
        for algo in [Algo::N2, Algo::M43, Algo::Codegree, Algo::Trace] {
            assert_eq!(count(&g, algo).unwrap(), t, "{name} {algo}");
        }
    }
}
