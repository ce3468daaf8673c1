//! Combinatorial plane embeddings (rotation systems), planarity testing and
//! disc embeddings with a prescribed boundary.
//!
//! A rotation lists the neighbours of each vertex in cyclic order. The face
//! successor of a dart `u -> v` is `v -> w` where `w` follows `u` in the
//! rotation at `v`; faces are the orbits of this map. Every face lies on the
//! same side of its darts, and the walk of the outer face runs in the
//! direction called clockwise throughout the crate.
//!
//! For a disconnected host each component has its own outer orbit; together
//! they bound the single outer face. An isolated vertex forms a trivial orbit
//! on the outer face.

mod disc;
mod enumerate;
mod planarity;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use disc::{is_disc_planar, with_apex};
pub use enumerate::for_each_disc_embedding;
pub use planarity::{is_planar, planar_rotation, Planarity};

pub type Dart = (usize, usize);

/// Vertex or edge of the host, for incidence queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

/// A face as its boundary walks. Inner faces have one walk; the outer face
/// has one per component. A walk `[x0, x1, ..., xk]` uses the darts
/// `x0->x1, ..., xk->x0`; a one-vertex walk is an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub walks: Vec<Vec<usize>>,
}

impl Face {
    pub fn vertices(&self) -> VertexSet {
        self.walks.iter().flatten().collect()
    }

    pub fn darts(&self) -> Vec<Dart> {
        let mut out = Vec::new();
        for w in &self.walks {
            if w.len() >= 2 {
                for i in 0..w.len() {
                    out.push((w[i], w[(i + 1) % w.len()]));
                }
            }
        }
        out
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.darts().iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub fn incident(&self, x: Element) -> bool {
        match x {
            Element::Vertex(v) => self.walks.iter().any(|w| w.contains(&v)),
            Element::Edge(u, v) => self.contains_edge(u, v),
        }
    }
}

/// A plane embedding of `host` with a designated outer face carrying the
/// boundary vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscEmbedding {
    host: Graph,
    rotation: Vec<Vec<usize>>,
    /// One dart of the outer orbit of each component with an edge.
    outer: Vec<Dart>,
    boundary: Vec<usize>,
}

/// Serialized form: `{"rotation": [[...],...], "outer_face": id, "boundary": [...]}`.
/// `outer_face` indexes [`DiscEmbedding::faces`]; the outer face is listed first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub rotation: Vec<Vec<usize>>,
    pub outer_face: usize,
    pub boundary: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outer_darts: Vec<[usize; 2]>,
}

impl DiscEmbedding {
    /// Builds and validates an embedding. `outer` must hold exactly one dart
    /// per component that has an edge.
    pub fn new(host: Graph, rotation: Vec<Vec<usize>>, outer: Vec<Dart>, boundary: Vec<usize>) -> Result<Self> {
        let e = DiscEmbedding { host, rotation, outer, boundary };
        e.validate()?;
        Ok(e)
    }

    pub(crate) fn new_unchecked(host: Graph, rotation: Vec<Vec<usize>>, outer: Vec<Dart>, boundary: Vec<usize>) -> Self {
        DiscEmbedding { host, rotation, outer, boundary }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn boundary_set(&self) -> VertexSet {
        self.boundary.iter().collect()
    }

    pub fn outer_darts(&self) -> &[Dart] {
        &self.outer
    }

    /// The neighbour after `u` in the rotation at `v`.
    pub fn next(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = r.iter().position(|&x| x == u).expect("dart in rotation");
        r[(i + 1) % r.len()]
    }

    /// The neighbour before `u` in the rotation at `v`.
    pub fn prev(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = r.iter().position(|&x| x == u).expect("dart in rotation");
        r[(i + r.len() - 1) % r.len()]
    }

    /// Face successor of a dart.
    pub fn succ(&self, (u, v): Dart) -> Dart {
        (v, self.next(v, u))
    }

    /// The orbit of `d`, starting at `d`.
    pub fn orbit(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut x = self.succ(d);
        while x != d {
            out.push(x);
            x = self.succ(x);
            if out.len() > 2 * self.host.size() + 1 {
                break;
            }
        }
        out
    }

    /// All orbits, each starting at its smallest dart, sorted.
    pub fn orbits(&self) -> Vec<Vec<Dart>> {
        let n = self.host.order();
        let mut seen = vec![false; n * n];
        let mut out = Vec::new();
        for u in 0..n {
            let mut nb = self.rotation[u].clone();
            nb.sort_unstable();
            for v in nb {
                if seen[u * n + v] {
                    continue;
                }
                let orb = self.orbit((u, v));
                for &(a, b) in &orb {
                    seen[a * n + b] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    /// Whether `d` lies on the outer orbit of its component.
    pub fn is_outer_dart(&self, d: Dart) -> bool {
        self.outer_orbit_of(d.0).is_some_and(|o| o.contains(&d))
    }

    /// The outer orbit of the component of `v` (None for isolated vertices).
    pub fn outer_orbit_of(&self, v: usize) -> Option<Vec<Dart>> {
        let comp = self.host.reach(v, self.host.vertices());
        self.outer.iter().find(|d| comp.contains(d.0)).map(|&d| self.orbit(d))
    }

    /// Vertices on the outer face (isolated vertices included).
    pub fn outer_vertices(&self) -> VertexSet {
        let mut s: VertexSet = (0..self.host.order()).filter(|&v| self.host.degree(v) == 0).collect();
        for &d in &self.outer {
            for (a, _) in self.orbit(d) {
                s.insert(a);
            }
        }
        s
    }

    /// Faces of the embedding; the outer face comes first, inner faces follow
    /// in order of their smallest dart.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.host.order();
        let orbits = self.orbits();
        let outer_darts: Vec<Dart> = self.outer.clone();
        let mut outer = Face { walks: Vec::new() };
        let mut inner = Vec::new();
        let mut comp_walk: Vec<(usize, Vec<usize>)> = Vec::new();
        for orb in orbits {
            let walk: Vec<usize> = orb.iter().map(|&(a, _)| a).collect();
            if orb.iter().any(|d| outer_darts.contains(d)) {
                let start = outer_darts.iter().find(|d| orb.contains(d)).unwrap();
                let pos = orb.iter().position(|d| d == start).unwrap();
                let mut w = walk[pos..].to_vec();
                w.extend_from_slice(&walk[..pos]);
                comp_walk.push((self.host.reach(start.0, self.host.vertices()).first().unwrap(), w));
            } else {
                inner.push(Face { walks: vec![walk] });
            }
        }
        for v in 0..n {
            if self.host.degree(v) == 0 {
                comp_walk.push((v, vec![v]));
            }
        }
        comp_walk.sort();
        outer.walks = comp_walk.into_iter().map(|(_, w)| w).collect();
        let mut faces = vec![outer];
        faces.extend(inner);
        faces
    }

    /// The outer face (always `faces()[0]`).
    pub fn outer_face(&self) -> Face {
        self.faces().swap_remove(0)
    }

    /// Whether some face is incident with both elements.
    pub fn cofacial(&self, x: Element, y: Element) -> Result<bool> {
        for el in [x, y] {
            let ok = match el {
                Element::Vertex(v) => v < self.host.order(),
                Element::Edge(u, v) => self.host.has_edge(u, v),
            };
            if !ok {
                return Err(Error::Domain(format!("{el:?} is not in the host")));
            }
        }
        Ok(self.faces().iter().any(|f| f.incident(x) && f.incident(y)))
    }

    /// The subpath of cycle `c` from `u` to `v` in clockwise order; `[u]`
    /// when `u == v`.
    pub fn clockwise_subpath(&self, c: &[usize], u: usize, v: usize) -> Result<Vec<usize>> {
        let k = c.len();
        let set: VertexSet = c.iter().collect();
        if k < 3 || set.len() != k || (0..k).any(|i| !self.host.has_edge(c[i], c[(i + 1) % k])) {
            return Err(Error::Domain("not a cycle of the host".into()));
        }
        let (Some(iu), Some(iv)) = (c.iter().position(|&x| x == u), c.iter().position(|&x| x == v)) else {
            return Err(Error::Domain(format!("{u} or {v} is not on the cycle")));
        };
        if u == v {
            return Ok(vec![u]);
        }
        let step = if self.cycle_is_clockwise(c) { 1 } else { k - 1 };
        let mut out = vec![c[iu]];
        let mut i = iu;
        while i != iv {
            i = (i + step) % k;
            out.push(c[i]);
        }
        Ok(out)
    }

    /// Whether traversing `c` in list order is clockwise: the faces on the
    /// side of the darts `c[i] -> c[i+1]` include the outer face.
    pub fn cycle_is_clockwise(&self, c: &[usize]) -> bool {
        let k = c.len();
        let n = self.host.order();
        let mut on_cycle = vec![false; n * n];
        for i in 0..k {
            let (a, b) = (c[i], c[(i + 1) % k]);
            on_cycle[a * n + b] = true;
            on_cycle[b * n + a] = true;
        }
        let outer = self.outer_orbit_of(c[0]).unwrap_or_default();
        let mut seen = vec![false; n * n];
        let mut stack = vec![(c[0], c[1])];
        while let Some(d) = stack.pop() {
            if seen[d.0 * n + d.1] {
                continue;
            }
            let orb = self.orbit(d);
            for &(a, b) in &orb {
                seen[a * n + b] = true;
            }
            if orb.iter().any(|x| outer.contains(x)) {
                return true;
            }
            for &(a, b) in &orb {
                if !on_cycle[a * n + b] && !seen[b * n + a] {
                    stack.push((b, a));
                }
            }
        }
        false
    }

    /// The same embedding reflected: every rotation and orbit reversed.
    pub fn mirrored(&self) -> DiscEmbedding {
        let rotation = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let outer = self.outer.iter().map(|&(a, b)| (b, a)).collect();
        let mut boundary = self.boundary.clone();
        boundary.reverse();
        DiscEmbedding { host: self.host.clone(), rotation, outer, boundary }
    }

    /// Checks rotation consistency, Euler's formula per component, and that
    /// the boundary lies on the outer face in the stored cyclic order.
    pub fn validate(&self) -> Result<()> {
        let g = &self.host;
        let n = g.order();
        let bad = |m: String| Err(Error::Embedding(m));
        if self.rotation.len() != n {
            return bad(format!("rotation has {} rows for {n} vertices", self.rotation.len()));
        }
        for v in 0..n {
            let r: VertexSet = self.rotation[v].iter().collect();
            if r != g.neighbors(v) || r.len() != self.rotation[v].len() {
                return bad(format!("rotation at {v} is not a cyclic order of its neighbours"));
            }
        }
        let orbits = self.orbits();
        let comps = g.components();
        let mut comp_of = vec![0usize; n];
        for (i, c) in comps.iter().enumerate() {
            for v in c.iter() {
                comp_of[v] = i;
            }
        }
        let mut faces_per = vec![0i64; comps.len()];
        for orb in &orbits {
            faces_per[comp_of[orb[0].0]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let (h, _) = g.induced(*c);
            let f = if h.size() == 0 { 1 } else { faces_per[i] };
            if h.order() as i64 - h.size() as i64 + f != 2 {
                return bad(format!("component {:?} violates Euler's formula", c.to_vec()));
            }
        }
        let nontrivial: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].len() > 1).collect();
        if self.outer.len() != nontrivial.len() {
            return bad(format!("{} outer darts for {} components with edges", self.outer.len(), nontrivial.len()));
        }
        let mut covered = VertexSet::EMPTY;
        for &(a, b) in &self.outer {
            if !g.has_edge(a, b) {
                return bad(format!("outer dart ({a},{b}) is not an edge"));
            }
            let c = comps[comp_of[a]];
            if !c.intersection(covered).is_empty() {
                return bad(format!("two outer darts in the component of {a}"));
            }
            covered = covered.union(c);
        }
        let bset: VertexSet = self.boundary.iter().collect();
        if bset.len() != self.boundary.len() || !bset.is_subset(g.vertices()) {
            return bad("boundary has repeated or foreign vertices".into());
        }
        for &(a, b) in &self.outer {
            let walk: Vec<usize> = self.orbit((a, b)).iter().map(|&(x, _)| x).collect();
            let c = comps[comp_of[a]];
            let target: Vec<usize> = self.boundary.iter().copied().filter(|&s| c.contains(s)).collect();
            if !cyclic_subsequence(&walk, &target) {
                return bad(format!("boundary {target:?} is not met in order by the outer walk {walk:?}"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            rotation: self.rotation.clone(),
            outer_face: 0,
            boundary: self.boundary.clone(),
            outer_darts: self.outer.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Rebuilds an embedding from JSON. When `outer_darts` is absent the
    /// outer face is the orbit listed at position `outer_face` among the
    /// orbits of a connected host.
    pub fn from_json(j: &EmbeddingJson) -> Result<DiscEmbedding> {
        let n = j.rotation.len();
        let mut edges = Vec::new();
        for (u, r) in j.rotation.iter().enumerate() {
            for &v in r {
                if v >= n {
                    return Err(Error::Embedding(format!("rotation at {u} names vertex {v}")));
                }
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        let host = Graph::from_edges(n, &edges)?;
        let outer: Vec<Dart> = if !j.outer_darts.is_empty() {
            j.outer_darts.iter().map(|d| (d[0], d[1])).collect()
        } else {
            let probe = DiscEmbedding::new_unchecked(host.clone(), j.rotation.clone(), Vec::new(), Vec::new());
            let orbits = probe.orbits();
            if host.components().iter().filter(|c| c.len() > 1).count() > 1 {
                return Err(Error::Embedding("disconnected hosts need explicit outer darts".into()));
            }
            match orbits.get(j.outer_face) {
                Some(o) => vec![o[0]],
                None if orbits.is_empty() => Vec::new(),
                None => return Err(Error::Embedding(format!("no face {}", j.outer_face))),
            }
        };
        DiscEmbedding::new(host, j.rotation.clone(), outer, j.boundary.clone())
    }
}

/// Whether `target` (distinct vertices) appears in `walk`, read cyclically
/// from some starting point, as a subsequence.
pub(crate) fn cyclic_subsequence(walk: &[usize], target: &[usize]) -> bool {
    if target.is_empty() {
        return true;
    }
    let l = walk.len();
    for p in (0..l).filter(|&p| walk[p] == target[0]) {
        let mut j = 1;
        for i in 1..l {
            if j == target.len() {
                break;
            }
            if walk[(p + i) % l] == target[j] {
                j += 1;
            }
        }
        if j == target.len() {
            return true;
        }
    }
    false
}
