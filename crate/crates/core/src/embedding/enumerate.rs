//! Every disc embedding of a small graph, by search over rotation systems of
//! the graph plus an apex adjacent to the boundary.

use super::disc::{from_apex_rotation, with_apex};
use super::planarity::planar_rotation;
use super::DiscEmbedding;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest apex-graph order accepted by [`for_each_disc_embedding`].
pub const ENUMERATION_LIMIT: usize = 16;

/// Calls `f` on every embedding of `g` in a disc with `s` on the boundary,
/// up to reflection, until `f` returns false. Every component with an edge
/// must meet `s`. Returns whether the enumeration ran to completion.
pub fn for_each_disc_embedding(g: &Graph, s: &[usize], mut f: impl FnMut(&DiscEmbedding) -> bool) -> Result<bool> {
    let sset: VertexSet = s.iter().collect();
    if sset.len() != s.len() || !sset.is_subset(g.vertices()) || s.is_empty() {
        return Err(Error::Domain(format!("boundary {s:?} has repeated or foreign vertices")));
    }
    if let Some(c) = g.components().into_iter().find(|c| c.len() > 1 && c.intersection(sset).is_empty()) {
        return Err(Error::Domain(format!("component {:?} misses the boundary", c.to_vec())));
    }
    let aug = with_apex(g, sset)?;
    if aug.order() > ENUMERATION_LIMIT {
        return Err(Error::UnsupportedSize { order: aug.order(), limit: ENUMERATION_LIMIT });
    }
    // The rotation search only prunes on faces, so a non-planar apex graph
    // would be explored in full before yielding nothing.
    if planar_rotation(&aug).is_err() {
        return Ok(true);
    }
    // Isolated non-boundary vertices are not in the apex component; they
    // have empty rotations either way.
    let keep = aug.reach(g.order(), aug.vertices());
    let mut err = None;
    let done = Rotations::new(&aug, keep).run(&mut |rot| match from_apex_rotation(g, s, rot) {
        Ok(e) => f(&e),
        Err(x) => {
            err = Some(x);
            false
        }
    });
    match err {
        Some(x) => Err(x),
        None => Ok(done),
    }
}

/// Planar rotation systems of the connected subgraph induced on `keep`,
/// fixed vertex by vertex in BFS order. A branch is cut when the faces it
/// can still produce fall short of Euler's count.
struct Rotations {
    n: usize,
    nbrs: Vec<Vec<usize>>,
    darts: Vec<(usize, usize)>,
    order: Vec<usize>,
    rot: Vec<Vec<usize>>,
    /// `succ[b * n + a]`: neighbour after `a` around `b`, once `b` is fixed.
    succ: Vec<usize>,
    fixed: Vec<bool>,
    mark: Vec<u32>,
    stamp: u32,
    target: usize,
}

impl Rotations {
    fn new(h: &Graph, keep: VertexSet) -> Self {
        let n = h.order();
        let nbrs: Vec<Vec<usize>> =
            (0..n).map(|v| if keep.contains(v) { h.neighbors(v).intersection(keep).to_vec() } else { Vec::new() }).collect();
        let darts: Vec<(usize, usize)> = (0..n).flat_map(|u| nbrs[u].iter().map(move |&v| (u, v))).collect();
        let e = darts.len() / 2;
        let start = keep.iter().max_by_key(|&v| (nbrs[v].len(), std::cmp::Reverse(v))).unwrap();
        let mut order = vec![start];
        let mut seen = VertexSet::singleton(start);
        let mut i = 0;
        while i < order.len() {
            for &y in &nbrs[order[i]] {
                if !seen.contains(y) {
                    seen.insert(y);
                    order.push(y);
                }
            }
            i += 1;
        }
        Rotations {
            n,
            rot: nbrs.clone(),
            nbrs,
            darts,
            order,
            succ: vec![0; n * n],
            fixed: vec![false; n],
            mark: vec![0; n * n],
            stamp: 0,
            target: (e + 2).saturating_sub(keep.len()),
        }
    }

    fn run(mut self, f: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        if self.darts.len() <= 2 {
            return f(&self.rot);
        }
        self.rec(0, f)
    }

    /// Upper bound on the faces of any completion: closed dart orbits, plus
    /// open chains of three or more darts, plus a third of the darts in
    /// shorter chains (a face of a simple graph with two or more edges has
    /// at least three darts).
    fn face_bound(&mut self) -> usize {
        let n = self.n;
        self.stamp += 1;
        let stamp = self.stamp;
        let (mut long, mut short) = (0, 0);
        for &(u, v) in &self.darts {
            if self.fixed[u] {
                continue;
            }
            let (mut a, mut b) = (u, v);
            let mut len = 1;
            self.mark[a * n + b] = stamp;
            while self.fixed[b] {
                let c = self.succ[b * n + a];
                a = b;
                b = c;
                self.mark[a * n + b] = stamp;
                len += 1;
            }
            if len >= 3 {
                long += 1;
            } else {
                short += len;
            }
        }
        let mut closed = 0;
        for &(u, v) in &self.darts {
            if self.mark[u * n + v] == stamp {
                continue;
            }
            closed += 1;
            let (mut a, mut b) = (u, v);
            while self.mark[a * n + b] != stamp {
                self.mark[a * n + b] = stamp;
                let c = self.succ[b * n + a];
                a = b;
                b = c;
            }
        }
        closed + long + short / 3
    }

    fn rec(&mut self, i: usize, f: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        if self.face_bound() < self.target {
            return true;
        }
        if i == self.order.len() {
            return f(&self.rot);
        }
        let n = self.n;
        let v = self.order[i];
        let nb = self.nbrs[v].clone();
        let d = nb.len();
        // Reflections are skipped by orienting the first vertex of degree
        // three or more.
        let first_branch = self.order[..i].iter().all(|&x| self.nbrs[x].len() < 3);
        self.fixed[v] = true;
        let mut rest: Vec<usize> = nb[1..].to_vec();
        let mut cont = true;
        permutations(&mut rest, 0, &mut |p| {
            if first_branch && d >= 3 && p[0] > p[d - 2] {
                return true;
            }
            let mut r = Vec::with_capacity(d);
            r.push(nb[0]);
            r.extend_from_slice(p);
            for k in 0..d {
                self.succ[v * n + r[k]] = r[(k + 1) % d];
            }
            self.rot[v] = r;
            cont = self.rec(i + 1, f);
            cont
        });
        self.fixed[v] = false;
        cont
    }
}

/// Calls `f` on each permutation of `a[k..]` (with `a[..k]` fixed) until it
/// returns false.
fn permutations(a: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k + 1 >= a.len() {
        return f(a);
    }
    for i in k..a.len() {
        a.swap(k, i);
        let go = permutations(a, k + 1, f);
        a.swap(k, i);
        if !go {
            return false;
        }
    }
    true
}
