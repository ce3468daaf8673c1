//! Corpus sources: exhaustive generation up to isomorphism, seeded random
//! graphs and disc instances, and graph6 / JSON streams.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::embedding::is_disc_planar;
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, labeling, parse_graph6, EdgeListJson, Graph, VertexSet, MAX_CANON_ORDER};

/// Parents handled per parallel batch; children are merged batch by batch
/// in parent order, so the output does not depend on the thread count.
const BATCH: usize = 512;

/// Every graph of order `n` that is `k`-connected (`k = 0`: every graph),
/// one canonically labeled representative per isomorphism class, sorted.
pub fn k_connected_graphs(k: usize, n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_k_connected(k, n, |g| {
        out.push(g.clone());
        true
    })?;
    out.sort();
    Ok(out)
}

/// Every graph of order exactly `n`, up to isomorphism.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    k_connected_graphs(0, n)
}

/// Streams the `k`-connected graphs of order `n` to `f` (until it returns
/// false) without holding them all; returns whether the stream finished.
///
/// A `k`-connected graph minus a vertex of minimum degree is
/// `(k-1)`-connected, so the graphs of order `n` are the children of the
/// `(k-1)`-connected graphs of order `n - 1` by a new vertex whose degree
/// does not exceed any other degree. Children are deduplicated by their
/// canonical code.
pub fn for_each_k_connected(k: usize, n: usize, mut f: impl FnMut(&Graph) -> bool) -> Result<bool> {
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_CANON_ORDER });
    }
    if n == 0 {
        return Ok(k > 0 || f(&Graph::empty(0)));
    }
    if n <= k {
        return Ok(true);
    }
    if n == 1 {
        return Ok(f(&Graph::empty(1)));
    }
    let parents = k_connected_graphs(k.saturating_sub(1), n - 1)?;
    let mut seen: HashSet<u128> = HashSet::new();
    for chunk in parents.chunks(BATCH) {
        let children: Vec<Vec<(u128, Graph)>> = chunk.par_iter().map(|p| children(p, k)).collect();
        for (code, g) in children.into_iter().flatten() {
            if seen.insert(code) && !f(&g) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn children(p: &Graph, k: usize) -> Vec<(u128, Graph)> {
    let n = p.order();
    let colors = vec![0u8; n + 1];
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        let nbrs = VertexSet(mask);
        let d = nbrs.len();
        if d < k || (0..n).any(|x| p.degree(x) + usize::from(nbrs.contains(x)) < d) {
            continue;
        }
        let child = p.with_vertex(nbrs).expect("order below the bitset limit");
        if k > 0 && !is_k_connected(&child, k) {
            continue;
        }
        let (perm, code) = labeling(&child, &colors);
        out.push((code, child.relabel(&perm)));
    }
    out
}

/// Configurations with boundary `0..b` (independent) and `m` interior
/// vertices `b..b+m`, built from every interior graph of order `m` and every
/// multiset of boundary neighbourhoods; one canonical representative (with
/// the boundary as a marked set) per class, sorted.
pub fn configurations(b: usize, m: usize) -> Result<Vec<Graph>> {
    let n = b + m;
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_CANON_ORDER });
    }
    let colors: Vec<u8> = (0..n).map(|v| u8::from(v >= b)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for inner in all_graphs(m)? {
        let mut masks = vec![0u64; b];
        loop {
            let mut adj = vec![0u64; n];
            for (i, &mk) in masks.iter().enumerate() {
                adj[i] = mk << b;
            }
            for v in 0..m {
                let mut row = inner.rows()[v] << b;
                for (i, &mk) in masks.iter().enumerate() {
                    if mk >> v & 1 == 1 {
                        row |= 1 << i;
                    }
                }
                adj[b + v] = row;
            }
            let g = Graph::from_adjacency(adj)?;
            let (perm, code) = labeling(&g, &colors);
            if seen.insert(code) {
                out.push(g.relabel(&perm));
            }
            // Next non-decreasing sequence of masks.
            let top = (1u64 << m) - 1;
            match (0..b).rev().find(|&i| masks[i] < top) {
                Some(i) => {
                    let x = masks[i] + 1;
                    masks[i..].iter_mut().for_each(|y| *y = x);
                }
                None => break,
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges are in range")
}

/// A disc-planar host with an independent boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscInstance {
    pub graph: Graph,
    pub boundary: Vec<usize>,
}

/// Random disc-planar instance on `n` vertices with `b` boundary vertices
/// `0..b`: edges are offered in random order and kept while the graph stays
/// disc-planar with the boundary independent, then each kept edge survives
/// with probability `keep`.
pub fn random_disc_instance(rng: &mut ChaCha8Rng, n: usize, b: usize, keep: f64) -> Result<DiscInstance> {
    if b > n {
        return Err(Error::Domain(format!("boundary of {b} vertices in a graph of order {n}")));
    }
    let boundary: Vec<usize> = (0..b).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(_, v)| v >= b).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        let h = g.union_edges(&Graph::from_edges(n, &[(u, v)])?)?;
        if is_disc_planar(&h, &boundary, false)?.is_some() {
            g = h;
        }
    }
    let thinned: Vec<(usize, usize)> = g.edges().into_iter().filter(|_| rng.gen_bool(keep)).collect();
    Ok(DiscInstance { graph: Graph::from_edges(n, &thinned)?, boundary })
}

/// Parses a corpus: JSON (an array of `{"n","edges"}` objects or one object
/// per line) when the text starts with `[` or `{`, otherwise one graph6
/// record per non-empty line.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    let body = text.trim_start();
    if body.starts_with('[') {
        let items: Vec<EdgeListJson> = serde_json::from_str(body)?;
        return items.iter().map(Graph::from_json).collect();
    }
    let json = body.starts_with('{');
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| if json { Graph::from_json(&serde_json::from_str(l)?) } else { parse_graph6(l) })
        .collect()
}
