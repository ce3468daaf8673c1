mod common;

use common::{assembly_fixture, k5_brute, k5_certificate_ok, mutate_certificate, random_graph, rng};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use wheelforge::graph::families;
use wheelforge::harness::corpus::all_graphs;
use wheelforge::subdivision::{assemble_k5, find_k5_subdivision, pair_index, verify_k5_certificate, SubdivisionCertificate};
use wheelforge::{Error, Graph, PathSystem};

fn subdivided_k5() -> (Graph, SubdivisionCertificate) {
    let k5 = families::complete(5);
    let g = families::subdivide(&k5);
    let paths = k5.edges().iter().enumerate().map(|(i, &(u, v))| vec![u, 5 + i, v]).collect();
    (g, SubdivisionCertificate { branch: [0, 1, 2, 3, 4], paths })
}

#[test]
fn verifier_examples() {
    let (g, c) = subdivided_k5();
    assert_eq!(verify_k5_certificate(&g, &c), Ok(()));
    let k5 = families::complete(5);
    let direct = SubdivisionCertificate { branch: [0, 1, 2, 3, 4], paths: k5.edges().iter().map(|&(u, v)| vec![u, v]).collect() };
    assert_eq!(verify_k5_certificate(&k5, &direct), Ok(()));
    // Two paths through one internal vertex.
    let mut bad = c.clone();
    bad.paths[1] = vec![0, 5, 1, 6, 2].into_iter().filter(|&v| v != 1).collect();
    let err = verify_k5_certificate(&g, &bad).unwrap_err();
    assert!(err.to_string().contains('5') || err.to_string().contains('6'), "{err}");
}

#[test]
fn mutated_certificates_are_all_caught() {
    let mut r = rng(41);
    let (sub, sc) = subdivided_k5();
    let k6 = families::complete(6);
    let kc = find_k5_subdivision(&k6).unwrap().unwrap();
    let fixtures = [(sub, sc), (k6, kc)];
    for i in 0..200 {
        let (g, c) = &fixtures[i % 2];
        let m = mutate_certificate(c, g.order(), &mut r);
        assert!(!k5_certificate_ok(g, &m.branch, &m.paths), "mutation kept the definition: {m:?}");
        assert!(verify_k5_certificate(g, &m).is_err(), "verifier accepted {m:?}");
    }
}

#[test]
fn search_examples() {
    for g in [families::complete(5), families::complete(6)] {
        let c = find_k5_subdivision(&g).unwrap().expect("has a subdivision");
        assert!(k5_certificate_ok(&g, &c.branch, &c.paths));
    }
    assert_eq!(find_k5_subdivision(&families::petersen()).unwrap(), None);
    assert_eq!(find_k5_subdivision(&families::icosahedron()).unwrap(), None);
    // Past the search limit; the verifier still handles it.
    assert!(matches!(find_k5_subdivision(&subdivided_k5().0), Err(Error::UnsupportedSize { .. })));
}

#[test]
fn search_matches_naive_oracle_up_to_six() {
    for n in 5..=6 {
        for g in all_graphs(n).unwrap() {
            let got = find_k5_subdivision(&g).unwrap();
            assert_eq!(got.is_some(), k5_brute(&g), "{:?}", g.edges());
            if let Some(c) = got {
                assert!(k5_certificate_ok(&g, &c.branch, &c.paths));
            }
        }
    }
}

#[test]
fn search_matches_naive_oracle_on_random_order_eight() {
    let mut r = rng(42);
    for _ in 0..150 {
        let p = r.gen_range(0.4..0.8);
        let g = random_graph(&mut r, 8, p);
        let got = find_k5_subdivision(&g).unwrap();
        assert_eq!(got.is_some(), k5_brute(&g), "{:?}", g.edges());
    }
}

#[test]
fn few_high_degree_vertices_means_none() {
    let mut r = rng(43);
    for _ in 0..200 {
        let g = random_graph(&mut r, 9, 0.3);
        if g.vertices().iter().filter(|&v| g.degree(v) >= 4).count() < 5 {
            assert_eq!(find_k5_subdivision(&g).unwrap(), None);
        }
    }
}

#[test]
fn assembly_from_w4_with_crossing_links() {
    let (g, w, ext, links) = assembly_fixture(4, [1, 2, 3, 4], [0; 4], [0; 2]);
    let c = assemble_k5(&g, &w, &ext, &links).unwrap();
    assert_eq!(c.branch, [0, 1, 2, 3, 4]);
    assert!(k5_certificate_ok(&g, &c.branch, &c.paths));
}

#[test]
fn assembly_absorbs_unused_spokes() {
    let (g, w, ext, links) = assembly_fixture(5, [1, 2, 3, 4], [0; 4], [1, 0]);
    let c = assemble_k5(&g, &w, &ext, &links).unwrap();
    assert!(k5_certificate_ok(&g, &c.branch, &c.paths));
    // The unused spoke 5 lies inside the rim arc from 4 back to 1.
    assert!(c.path(1, 4).contains(&5));
}

#[test]
fn links_through_the_rim_are_rejected() {
    let (mut g, w, ext, _) = assembly_fixture(4, [1, 2, 3, 4], [0; 4], [0; 2]);
    // Ends are 5, 6, 7, 8; route the first link through rim vertex 2.
    g = g.union_edges(&Graph::from_edges(g.order(), &[(5, 2), (2, 7)]).unwrap()).unwrap();
    let links = PathSystem::new(vec![vec![5, 2, 7], vec![6, 8]]);
    assert!(matches!(assemble_k5(&g, &w, &ext, &links), Err(Error::Assembly(_))));
    // Links between adjacent extension ends are rejected too.
    let adjacent = PathSystem::new(vec![vec![5, 6], vec![7, 8]]);
    let g2 = g.union_edges(&Graph::from_edges(g.order(), &[(5, 6), (7, 8)]).unwrap()).unwrap();
    assert!(matches!(assemble_k5(&g2, &w, &ext, &adjacent), Err(Error::Assembly(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn assembled_certificates_verify(
        k in 4usize..8,
        ext_len in proptest::array::uniform4(0usize..3),
        link_len in proptest::array::uniform2(0usize..3),
        seed in any::<u64>(),
    ) {
        let mut r = rng(seed);
        let mut spokes: Vec<usize> = (1..=k).collect();
        spokes.shuffle(&mut r);
        let mut used = [spokes[0], spokes[1], spokes[2], spokes[3]];
        used.sort_unstable();
        let (g, w, ext, links) = assembly_fixture(k, used, ext_len, link_len);
        let c = assemble_k5(&g, &w, &ext, &links).unwrap();
        prop_assert!(k5_certificate_ok(&g, &c.branch, &c.paths));
        prop_assert_eq!(c.path(0, 1).len(), 2);
        prop_assert_eq!(pair_index(0, 1), 0);
    }
}
