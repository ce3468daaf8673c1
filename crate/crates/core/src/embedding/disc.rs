//! Disc embeddings with a prescribed boundary, by reduction to planarity.
//!
//! Unordered: `G` embeds in a disc with `S` on the boundary iff `G` plus an
//! apex adjacent to `S` is planar. Ordered (`|S| >= 3`): add a frame, the
//! cycle `s0 x0 s1 x1 ... s(m-1) x(m-1)` through new vertices `xi`, plus an
//! apex adjacent to every `xi`; the frame is rigid, so `S` must appear on one
//! face of `G` in the frame's cyclic order. In both cases the faces touching
//! the added vertices merge into the outer face once they are removed.

use super::planarity::planar_rotation;
use super::{cyclic_subsequence, Dart, DiscEmbedding};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `g` plus a new vertex (id `g.order()`) adjacent to `s`.
pub fn with_apex(g: &Graph, s: VertexSet) -> Result<Graph> {
    g.with_vertex(s)
}

fn with_frame(g: &Graph, s: &[usize]) -> Result<Graph> {
    let n = g.order();
    let m = s.len();
    let mut edges = g.edges();
    let z = n + m;
    for i in 0..m {
        edges.push((s[i], n + i));
        edges.push((s[(i + 1) % m], n + i));
        edges.push((n + i, z));
    }
    Graph::from_edges(n + m + 1, &edges)
}

/// Decides whether `g` embeds in a closed disc with every vertex of `s` on
/// the boundary circle, in the given cyclic order when `fixed_cyclic_order`
/// holds. On success the returned embedding has `s` on its outer face; in
/// the unordered case its boundary lists `s` in the order met by the outer
/// walk.
pub fn is_disc_planar(g: &Graph, s: &[usize], fixed_cyclic_order: bool) -> Result<Option<DiscEmbedding>> {
    let sset: VertexSet = s.iter().collect();
    if sset.len() != s.len() || !sset.is_subset(g.vertices()) {
        return Err(Error::Domain(format!("boundary {s:?} has repeated or foreign vertices")));
    }
    let framed = fixed_cyclic_order && s.len() >= 3;
    let aug = if framed { with_frame(g, s)? } else { with_apex(g, sset)? };
    let Ok(rot_aug) = planar_rotation(&aug) else {
        return Ok(None);
    };

    let (mut rotation, mut outer, comps) = restrict_rotation(g, sset, &rot_aug);
    let probe = DiscEmbedding::new_unchecked(g.clone(), rotation.clone(), outer.clone(), Vec::new());
    let boundary = if framed {
        for (ci, c) in comps.iter().enumerate().filter(|(_, c)| c.len() > 1) {
            let target: Vec<usize> = s.iter().copied().filter(|&v| c.contains(v)).collect();
            if target.len() < 3 {
                continue;
            }
            let oi = outer.iter().position(|d| c.contains(d.0)).unwrap();
            let walk: Vec<usize> = probe.orbit(outer[oi]).iter().map(|&(a, _)| a).collect();
            if cyclic_subsequence(&walk, &target) {
                continue;
            }
            let rev: Vec<usize> = target.iter().rev().copied().collect();
            if !cyclic_subsequence(&walk, &rev) {
                return Err(Error::Embedding(format!(
                    "frame reduction left boundary {target:?} off the outer walk of component {ci}"
                )));
            }
            for v in c.iter() {
                rotation[v].reverse();
            }
            outer[oi] = (outer[oi].1, outer[oi].0);
        }
        s.to_vec()
    } else {
        walk_order(&probe, &comps, s)
    };

    let e = DiscEmbedding::new(g.clone(), rotation, outer, boundary)?;
    Ok(Some(e))
}

/// The rotation of `g` inside a rotation of `g` plus added vertices (ids
/// `>= g.order()`) adjacent only to `sset` and each other, with one outer
/// dart per component that has an edge: a dart on a face that touched the
/// added vertices.
pub(crate) fn restrict_rotation(
    g: &Graph,
    sset: VertexSet,
    rot_aug: &[Vec<usize>],
) -> (Vec<Vec<usize>>, Vec<Dart>, Vec<VertexSet>) {
    let n = g.order();
    let rotation: Vec<Vec<usize>> =
        (0..n).map(|v| rot_aug[v].iter().copied().filter(|&x| x < n).collect()).collect();
    let comps: Vec<VertexSet> = g.components();
    let mut outer: Vec<Dart> = Vec::new();
    for c in comps.iter().filter(|c| c.len() > 1) {
        let dart = match c.intersection(sset).first() {
            Some(sv) => {
                // The G-neighbour just before an added neighbour of `sv` gives a
                // dart whose face touched the added vertices.
                let r = &rot_aug[sv];
                let k = r.len();
                let f = r.iter().position(|&x| x >= n).expect("boundary vertex is attached");
                let mut i = (f + k - 1) % k;
                while r[i] >= n {
                    i = (i + k - 1) % k;
                }
                (r[i], sv)
            }
            None => {
                let v = c.first().unwrap();
                (v, rotation[v][0])
            }
        };
        outer.push(dart);
    }

    (rotation, outer, comps)
}

/// The disc embedding of `g` given by a planar rotation of `g` plus an apex
/// adjacent to `s`.
pub(crate) fn from_apex_rotation(g: &Graph, s: &[usize], rot_aug: &[Vec<usize>]) -> Result<DiscEmbedding> {
    let sset: VertexSet = s.iter().collect();
    let (rotation, outer, comps) = restrict_rotation(g, sset, rot_aug);
    let probe = DiscEmbedding::new_unchecked(g.clone(), rotation.clone(), outer.clone(), Vec::new());
    let boundary = walk_order(&probe, &comps, s);
    DiscEmbedding::new(g.clone(), rotation, outer, boundary)
}

/// Boundary order read off the outer walks: components in order of their
/// first listed boundary vertex, and within a component the order of first
/// appearance starting from that vertex.
fn walk_order(e: &DiscEmbedding, comps: &[VertexSet], s: &[usize]) -> Vec<usize> {
    let sset: VertexSet = s.iter().collect();
    let mut done = VertexSet::EMPTY;
    let mut out = Vec::new();
    for &first in s {
        if done.contains(first) {
            continue;
        }
        let c = *comps.iter().find(|c| c.contains(first)).unwrap();
        let want = c.intersection(sset);
        done = done.union(c);
        if c.len() == 1 {
            out.push(first);
            continue;
        }
        let walk: Vec<usize> = e.outer_orbit_of(first).unwrap().iter().map(|&(a, _)| a).collect();
        let start = walk.iter().position(|&x| x == first).unwrap();
        let mut seen = VertexSet::EMPTY;
        for i in 0..walk.len() {
            let x = walk[(start + i) % walk.len()];
            if want.contains(x) && !seen.contains(x) {
                seen.insert(x);
                out.push(x);
            }
        }
    }
    out
}
