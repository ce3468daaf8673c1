mod common;

use common::{extendable_brute, rng, set};
use rand::Rng;
use wheelforge::embedding::{for_each_disc_embedding, is_disc_planar, is_planar, DiscEmbedding, Element};
use wheelforge::graph::families;
use wheelforge::harness::corpus::random_disc_instance;
use wheelforge::wheels::{find_good_wheels, is_extendable, is_good, verify_extension, wheel_at, Extension, Wheel, WheelAt};
use wheelforge::{Graph, VertexSet};

fn disc(g: &Graph, boundary: &[usize]) -> DiscEmbedding {
    is_disc_planar(g, boundary, false).unwrap().expect("disc-planar fixture")
}

/// The vertices cofacial with `w`, other than `w`.
fn cofacial_closure(e: &DiscEmbedding, w: usize) -> VertexSet {
    e.host().vertices().without(w).iter().filter(|&x| e.cofacial(Element::Vertex(w), Element::Vertex(x)).unwrap()).collect()
}

#[test]
fn wheel_graph_is_its_own_wheel() {
    let g = families::wheel(4);
    // 1 and 3 share only the rim face, which must then be outer.
    let e = disc(&g, &[1, 3]);
    let w = wheel_at(&e, 0).unwrap().wheel().unwrap();
    assert_eq!(w.vertices(), g.vertices());
    assert_eq!(w.spoke_set(), set(&[1, 2, 3, 4]));
    assert_eq!(find_good_wheels(&e, set(&[1])).len(), 1);
}

#[test]
fn octahedron_wheels_have_four_rim_vertices() {
    let g = families::octahedron();
    let e = is_planar(&g).embedding().unwrap();
    let outer = e.outer_vertices();
    let mut seen = 0;
    for w in g.vertices().difference(outer).iter() {
        let wheel = wheel_at(&e, w).unwrap().wheel().unwrap();
        assert_eq!(wheel.rim.len(), 4);
        assert_eq!(wheel.rim.iter().collect::<VertexSet>(), g.neighbors(w));
        seen += 1;
    }
    assert_eq!(seen, 3);
}

#[test]
fn pendant_in_a_face_breaks_the_wheel() {
    // W4 (center 0, rim 1..4) with a pendant vertex 5 on rim vertex 1.
    let mut edges = families::wheel(4).edges();
    edges.push((1, 5));
    let g = Graph::from_edges(6, &edges).unwrap();
    let mut undefined = 0;
    for_each_disc_embedding(&g, &[3], |e| {
        if e.outer_vertices().contains(0) {
            return true;
        }
        let inside = !e.outer_vertices().contains(5);
        match wheel_at(e, 0).unwrap() {
            WheelAt::Undefined(_) => {
                // The pendant shares a face with the center.
                assert!(inside && cofacial_closure(e, 0).contains(5));
                undefined += 1;
            }
            WheelAt::Wheel(w) => {
                assert!(!inside);
                assert_eq!(w.vertices().without(0), cofacial_closure(e, 0));
            }
        }
        true
    })
    .unwrap();
    assert!(undefined > 0);
}

#[test]
fn goodness_examples() {
    let w = Wheel { center: 0, rim: vec![1, 2, 3, 4], spokes: vec![1, 3] };
    assert!(is_good(&w, set(&[7, 8])));
    assert!(is_good(&w, set(&[1, 3, 9])));
    assert!(!is_good(&w, set(&[2])));
}

#[test]
fn grid_wheels_against_king_neighbourhoods() {
    let g = families::grid(4, 4);
    for t in [vec![0, 3, 12, 15], vec![1, 4], vec![2, 7, 13], vec![1, 2, 4, 8, 7, 11, 13, 14]] {
        let tset: VertexSet = t.iter().collect();
        let e = disc(&g, &t);
        let got: Vec<usize> = find_good_wheels(&e, tset).iter().map(|w| w.center).collect();
        // Interior grid vertex: the rim is its eight king neighbours, the
        // spokes its four grid neighbours.
        let want: Vec<usize> = [5usize, 6, 9, 10]
            .into_iter()
            .filter(|&v| {
                let (r, c) = (v / 4, v % 4);
                let king: VertexSet = (0..16usize).filter(|&x| x != v && (x / 4).abs_diff(r) <= 1 && (x % 4).abs_diff(c) <= 1).collect();
                tset.intersection(king).is_subset(g.neighbors(v))
            })
            .collect();
        assert_eq!(got, want, "t = {t:?}");
    }
}

#[test]
fn spokes_on_the_cut_extend_directly() {
    let g = families::wheel(4);
    let e = disc(&g, &[1, 2, 3, 4]);
    let w = wheel_at(&e, 0).unwrap().wheel().unwrap();
    let t = [1, 2, 3, 4];
    match is_extendable(&e, &w, &t, set(&t)).unwrap() {
        Extension::Paths(p) => assert_eq!(p.paths, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn three_cut_blocks_extension() {
    // W4 at 0, rim 1..4, inside a ring 5, 6, 7 inside the cut 8..11.
    let mut edges = families::wheel(4).edges();
    edges.extend([(1, 5), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (4, 5), (5, 6), (6, 7), (5, 7)]);
    edges.extend([(5, 8), (5, 9), (6, 9), (6, 10), (7, 10), (7, 11), (5, 11)]);
    let g = Graph::from_edges(12, &edges).unwrap();
    let t = [8, 9, 10, 11];
    let Some(e) = is_disc_planar(&g, &t, false).unwrap() else {
        // The fixture must be disc-planar for the question to make sense.
        panic!("fixture is not disc-planar");
    };
    let w = wheel_at(&e, 0).unwrap().wheel().unwrap();
    match is_extendable(&e, &w, &t, VertexSet::EMPTY).unwrap() {
        Extension::Blocked { cut } => assert_eq!(cut.size(), 3),
        other => panic!("{other:?}"),
    }
    assert!(!extendable_brute(&g, w.vertices(), w.spoke_set(), set(&t), VertexSet::EMPTY));
}

#[test]
fn random_instances_match_exhaustive_path_systems() {
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 150 {
        let n = r.gen_range(7..=10);
        let b = r.gen_range(4..=5);
        let inst = random_disc_instance(&mut r, n, b, 0.85).unwrap();
        let (g, t) = (&inst.graph, &inst.boundary);
        let tset: VertexSet = t.iter().collect();
        let e = disc(g, t);
        for w in find_good_wheels(&e, tset) {
            let s: VertexSet = t.iter().copied().filter(|_| r.gen_bool(0.4)).take(4).collect();
            let want = extendable_brute(g, w.vertices(), w.spoke_set(), tset, s);
            match is_extendable(&e, &w, t, s).unwrap() {
                Extension::Paths(p) => {
                    assert!(want, "library found paths the oracle rejects: {:?}", g.edges());
                    verify_extension(g, &w, tset, s, &p).unwrap();
                }
                Extension::Blocked { .. } => assert!(!want, "oracle found paths: {:?} wheel {w:?} s {s:?}", g.edges()),
            }
            checked += 1;
        }
    }
}

#[test]
fn extendability_is_monotone_in_the_mandatory_set() {
    let mut r = rng(22);
    let mut checked = 0;
    while checked < 80 {
        let inst = random_disc_instance(&mut r, 9, 5, 0.9).unwrap();
        let t = &inst.boundary;
        let tset: VertexSet = t.iter().collect();
        let e = disc(&inst.graph, t);
        for w in find_good_wheels(&e, tset) {
            for mask in 0u64..32 {
                let s = VertexSet(mask);
                if s.len() > 4 || !matches!(is_extendable(&e, &w, t, s).unwrap(), Extension::Paths(_)) {
                    continue;
                }
                for sub in 0..32u64 {
                    if sub & mask == sub {
                        assert!(matches!(is_extendable(&e, &w, t, VertexSet(sub)).unwrap(), Extension::Paths(_)));
                    }
                }
            }
            checked += 1;
        }
    }
}

#[test]
fn returned_wheels_match_their_cofacial_closure() {
    let mut r = rng(23);
    for _ in 0..60 {
        let inst = random_disc_instance(&mut r, 9, 4, 0.8).unwrap();
        for_each_disc_embedding(&inst.graph, &inst.boundary, |e| {
            for v in inst.graph.vertices().difference(e.outer_vertices()).iter() {
                if let WheelAt::Wheel(w) = wheel_at(e, v).unwrap() {
                    w.validate(&inst.graph).unwrap();
                    assert_eq!(w.vertices().without(v), cofacial_closure(e, v));
                }
            }
            true
        })
        .unwrap();
    }
}
