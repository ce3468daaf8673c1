mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use wheelforge::graph::{
    canonical_form, canonical_key, disjoint_paths, emit_graph6, families, is_k_connected, local_connectivity,
    parse_graph6, Routing,
};
use wheelforge::{Graph, VertexSet};

#[test]
fn graph6_matches_reference_encoder_on_all_small_graphs() {
    for n in 0..=5usize {
        for code in 0..(1u64 << (n * n.saturating_sub(1) / 2)) {
            let g = labeled_graph(n, code);
            let s = emit_graph6(&g).unwrap();
            assert_eq!(s, reference_graph6(&g));
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}

#[test]
fn graph6_round_trip_up_to_nine() {
    let mut r = rng(6);
    for n in 6..=9 {
        for _ in 0..400 {
            let p = r.gen_range(0.1..0.9);
            let g = random_graph(&mut r, n, p);
            let s = emit_graph6(&g).unwrap();
            assert_eq!(s, reference_graph6(&g));
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}

#[test]
fn grid_corner_routing_matches_enumeration() {
    // Corners {0,2,6} to the opposite side {2,5,8} of the 3x3 grid.
    let g = families::grid(3, 3);
    let sources = set(&[0, 2, 6]);
    let sinks = set(&[2, 5, 8]);
    let expected = min_set_cut_brute(&g, sources, sinks);
    let verdict = disjoint_paths(&g, sources, sinks, 3, VertexSet::EMPTY).unwrap();
    match verdict {
        Routing::Paths(p) => {
            assert!(expected >= 3);
            p.validate(&g, VertexSet::EMPTY).unwrap();
        }
        Routing::Cut(c) => assert_eq!(c.size(), expected),
        Routing::NoRouting { .. } => panic!("no mandatory sinks were given"),
    }
    // Brute force over systems of three disjoint paths agrees.
    assert_eq!(expected >= 3, three_disjoint_paths_exist(&g, sources, sinks));
}

fn three_disjoint_paths_exist(g: &Graph, sources: VertexSet, sinks: VertexSet) -> bool {
    fn rec(g: &Graph, left: Vec<usize>, sinks: VertexSet, used: VertexSet) -> bool {
        let Some((&s, rest)) = left.split_first() else {
            return true;
        };
        if used.contains(s) {
            return false;
        }
        for t in sinks.iter() {
            for p in simple_paths(g, s, t, used) {
                let pu: VertexSet = p.iter().collect();
                if rec(g, rest.to_vec(), sinks.difference(VertexSet::singleton(t)), used.union(pu)) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, sources.to_vec(), sinks, VertexSet::EMPTY)
}

#[test]
fn menger_duality_for_pairs() {
    let mut r = rng(11);
    for _ in 0..150 {
        let n = r.gen_range(4..=9);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        for s in 0..n {
            for t in s + 1..n {
                if g.has_edge(s, t) {
                    continue;
                }
                assert_eq!(local_connectivity(&g, s, t, usize::MAX), min_pair_cut_brute(&g, s, t), "{g:?} {s} {t}");
            }
        }
    }
}

#[test]
fn connectivity_matches_definition() {
    let mut r = rng(12);
    for _ in 0..300 {
        let n = r.gen_range(2..=9);
        let p = r.gen_range(0.3..0.95);
        let g = random_graph(&mut r, n, p);
        for k in 0..=5 {
            assert_eq!(is_k_connected(&g, k), k_connected_brute(&g, k), "{g:?} k={k}");
        }
    }
    assert!(k_connected_brute(&families::octahedron(), 4));
}

#[test]
fn canonical_form_matches_permutation_oracle() {
    let mut r = rng(13);
    let mut equal_pairs = 0;
    for _ in 0..300 {
        let g = random_graph(&mut r, 8, 0.5);
        // Half of the partners are relabelings, half independent samples.
        let h = if r.gen_bool(0.5) {
            let mut p: Vec<usize> = (0..8).collect();
            p.shuffle(&mut r);
            g.relabel(&p)
        } else {
            random_graph(&mut r, 8, 0.5)
        };
        let same = canonical_form(&g, None).unwrap() == canonical_form(&h, None).unwrap();
        assert_eq!(same, isomorphic_brute(&g, VertexSet::EMPTY, &h, VertexSet::EMPTY));
        equal_pairs += same as usize;
    }
    assert!(equal_pairs > 100);
}

#[test]
fn canonical_form_with_boundary_matches_oracle() {
    let mut r = rng(14);
    for _ in 0..300 {
        let n = r.gen_range(3..=7);
        let g = random_graph(&mut r, n, 0.45);
        let gm = VertexSet(r.gen::<u64>() & VertexSet::full(n).0);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut r);
        let (h, hm) = if r.gen_bool(0.5) {
            (g.relabel(&p), gm.iter().map(|v| p[v]).collect())
        } else {
            (g.relabel(&p), VertexSet(r.gen::<u64>() & VertexSet::full(n).0))
        };
        let same = canonical_key(&g, gm).unwrap() == canonical_key(&h, hm).unwrap();
        assert_eq!(same, isomorphic_brute(&g, gm, &h, hm));
    }
}

#[test]
fn counts_of_small_graphs_up_to_isomorphism() {
    // Number of unlabeled graphs on n vertices.
    let expected = [1usize, 1, 2, 4, 11, 34, 156];
    for (n, &want) in expected.iter().enumerate() {
        let mut keys: Vec<_> = (0..(1u64 << (n * n.saturating_sub(1) / 2)))
            .map(|c| canonical_key(&labeled_graph(n, c), VertexSet::EMPTY).unwrap())
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), want, "n = {n}");
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn routed_paths_always_validate(g in arb_graph(9), src in any::<u64>(), dst in any::<u64>(), k in 1usize..4) {
        let n = g.order();
        let sources = VertexSet(src & VertexSet::full(n).0);
        let sinks = VertexSet(dst & VertexSet::full(n).0);
        prop_assume!(!sources.is_empty() && !sinks.is_empty());
        if let Ok(Routing::Paths(p)) = disjoint_paths(&g, sources, sinks, k, VertexSet::EMPTY) {
            let mut shared = VertexSet::EMPTY;
            if sources.len() == 1 { shared = shared.union(sources); }
            if sinks.len() == 1 { shared = shared.union(sinks); }
            prop_assert!(p.validate(&g, shared).is_ok());
            prop_assert_eq!(p.len(), k);
            for q in &p.paths {
                prop_assert!(sources.contains(q[0]) && sinks.contains(*q.last().unwrap()));
            }
        }
    }

    #[test]
    fn canonical_form_is_invariant(g in arb_graph(8), seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut p: Vec<usize> = (0..g.order()).collect();
        p.shuffle(&mut r);
        prop_assert_eq!(canonical_form(&g, None).unwrap(), canonical_form(&g.relabel(&p), None).unwrap());
    }
}
