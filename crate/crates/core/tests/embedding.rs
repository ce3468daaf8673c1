mod common;

use common::*;
use rand::Rng;
use wheelforge::embedding::{is_disc_planar, is_planar, DiscEmbedding, Element};
use wheelforge::graph::{canonical_key, families};
use wheelforge::{Graph, VertexSet};

/// One representative per isomorphism class, by canonicalizing every
/// labeled graph.
fn unlabeled(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for code in 0..(1u64 << (n * n.saturating_sub(1) / 2)) {
        let g = labeled_graph(n, code);
        if seen.insert(canonical_key(&g, VertexSet::EMPTY).unwrap()) {
            out.push(g);
        }
    }
    out
}

#[test]
fn planarity_matches_rotation_brute_force_up_to_seven() {
    let mut nonplanar = 0;
    for n in 1..=7 {
        for g in unlabeled(n) {
            let verdict = is_planar(&g);
            assert_eq!(verdict.is_planar(), planar_brute(&g), "{g:?}");
            if let Some(e) = verdict.embedding() {
                e.validate().unwrap();
                let comps = g.components().len();
                let faces = e.faces().len();
                assert_eq!(g.order() + faces, g.size() + 1 + comps);
            } else {
                nonplanar += 1;
            }
        }
    }
    assert!(nonplanar > 50);
}

#[test]
fn unordered_disc_planarity_matches_brute_force_up_to_five() {
    for n in 1..=5 {
        for g in unlabeled(n) {
            for mask in 1u64..(1 << n) {
                let s: Vec<usize> = VertexSet(mask).to_vec();
                let got = is_disc_planar(&g, &s, false).unwrap();
                assert_eq!(got.is_some(), disc_planar_brute(&g, VertexSet(mask)), "{g:?} {s:?}");
                if let Some(e) = got {
                    assert_eq!(e.boundary_set(), VertexSet(mask));
                    assert!(VertexSet(mask).is_subset(e.outer_vertices()));
                }
            }
        }
    }
}

/// Ordered disc-planarity for a connected graph: some planar rotation
/// system has a face meeting `s` in cyclic order, in either direction.
fn ordered_brute(g: &Graph, s: &[usize]) -> bool {
    let rev: Vec<usize> = s.iter().rev().copied().collect();
    let mut ok = false;
    for_each_planar_rotation(g, |rot| {
        ok = rotation_faces(rot).iter().any(|f| {
            let walk: Vec<usize> = f.iter().map(|&(a, _)| a).collect();
            cyclic_sub(&walk, s) || cyclic_sub(&walk, &rev)
        });
        !ok
    });
    ok
}

fn cyclic_sub(walk: &[usize], t: &[usize]) -> bool {
    let l = walk.len();
    (0..l).any(|p| {
        let mut j = 0;
        for i in 0..l {
            if j < t.len() && walk[(p + i) % l] == t[j] {
                j += 1;
            }
        }
        j == t.len()
    })
}

#[test]
fn ordered_disc_planarity_matches_brute_force() {
    let mut r = rng(21);
    let mut yes = 0;
    for _ in 0..400 {
        let n = r.gen_range(4..=7);
        let p = r.gen_range(0.3..0.7);
        let g = random_graph(&mut r, n, p);
        if !g.is_connected() || g.size() < 2 {
            continue;
        }
        let m = r.gen_range(3..=n.min(5));
        let mut s: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(&mut s[..], &mut r);
        s.truncate(m);
        let got = is_disc_planar(&g, &s, true).unwrap();
        assert_eq!(got.is_some(), ordered_brute(&g, &s), "{g:?} {s:?}");
        if let Some(e) = got {
            assert_eq!(e.boundary(), &s[..]);
            yes += 1;
        }
    }
    assert!(yes > 20);
}

#[test]
fn face_and_cofacial_examples() {
    let k4 = is_planar(&families::complete(4)).embedding().unwrap();
    assert_eq!(k4.faces().len(), 4);
    assert!(k4.cofacial(Element::Vertex(0), Element::Vertex(1)).unwrap());

    let c4 = is_planar(&families::cycle(4)).embedding().unwrap();
    assert!(c4.cofacial(Element::Vertex(0), Element::Vertex(2)).unwrap());
    assert_eq!(c4.faces().iter().filter(|f| f.vertices().contains(0) && f.vertices().contains(2)).count(), 2);

    let oct = is_planar(&families::octahedron()).embedding().unwrap();
    assert!(!oct.cofacial(Element::Vertex(0), Element::Vertex(1)).unwrap());
    assert!(oct.cofacial(Element::Vertex(0), Element::Edge(2, 4)).unwrap());

    // Center of a wheel and a vertex hanging off the rim through a
    // rim-only attachment never share a face.
    let mut w5 = families::wheel(5);
    w5 = w5.with_vertex([1usize, 2].iter().collect()).unwrap();
    let e = is_disc_planar(&w5, &[6, 3], false).unwrap().unwrap();
    assert!(!e.cofacial(Element::Vertex(0), Element::Vertex(6)).unwrap());
    assert!(e.cofacial(Element::Vertex(0), Element::Vertex(3)).unwrap());
    assert!(e.cofacial(Element::Vertex(9), Element::Vertex(0)).is_err());
}

#[test]
fn grid_has_five_faces() {
    let e = is_planar(&families::grid(3, 3)).embedding().unwrap();
    assert_eq!(e.faces().len(), 5);
}

#[test]
fn clockwise_halves_cover_the_cycle() {
    let mut r = rng(22);
    let mut checked = 0;
    for _ in 0..300 {
        let n = r.gen_range(4..=9);
        let p = r.gen_range(0.3..0.6);
        let g = random_graph(&mut r, n, p);
        let Some(e) = is_planar(&g).embedding() else { continue };
        // Inner faces of 2-connected pieces are cycles.
        for f in e.faces().iter().skip(1) {
            let w = &f.walks[0];
            let distinct: VertexSet = w.iter().collect();
            if w.len() < 3 || distinct.len() != w.len() {
                continue;
            }
            let u = w[r.gen_range(0..w.len())];
            let v = w[r.gen_range(0..w.len())];
            let a = e.clockwise_subpath(w, u, v).unwrap();
            let b = e.clockwise_subpath(w, v, u).unwrap();
            if u == v {
                assert_eq!(a, vec![u]);
                continue;
            }
            let mut cover: Vec<usize> = a.clone();
            cover.extend(&b[1..b.len() - 1]);
            cover.sort();
            let mut all = w.clone();
            all.sort();
            assert_eq!(cover, all);
            // An inner face is traversed counter to the clockwise sense.
            let c = e.clockwise_subpath(w, w[0], w[1]).unwrap();
            assert_eq!(c.len(), w.len());
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn json_round_trip() {
    let g = families::grid(3, 3);
    let e = is_disc_planar(&g, &[0, 2, 8, 6], true).unwrap().unwrap();
    let j = serde_json::to_string(&e.to_json()).unwrap();
    let back = DiscEmbedding::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
    assert_eq!(back, e);
    assert!(j.contains("\"outer_face\":0"));
}
