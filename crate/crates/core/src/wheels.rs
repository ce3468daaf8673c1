//! Wheels cut out of disc embeddings: the vertices and edges cofacial with
//! an interior vertex `w`, when they form a cycle (the rim) plus at least
//! three spokes from `w`.
//!
//! A wheel is good for a cut `T` when every `T`-vertex on it is a neighbour
//! of the center. It is `(T, S)`-extendable when four paths leave `w`,
//! meet pairwise only at `w`, each touch the wheel only in its second
//! vertex, end in `T`, and end at every vertex of `S`.

use serde::{Deserialize, Serialize};

use crate::embedding::DiscEmbedding;
use crate::error::{Error, Result};
use crate::graph::{disjoint_paths, Graph, PathSystem, Routing, VertexCut, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Wheel {
    pub center: usize,
    /// Rim vertices in clockwise cyclic order.
    pub rim: Vec<usize>,
    /// Rim vertices joined to the center, in rim order.
    pub spokes: Vec<usize>,
}

impl Wheel {
    pub fn vertices(&self) -> VertexSet {
        self.rim.iter().copied().chain([self.center]).collect()
    }

    pub fn spoke_set(&self) -> VertexSet {
        self.spokes.iter().collect()
    }

    /// Rim vertices that are not neighbours of the center.
    pub fn non_spokes(&self) -> VertexSet {
        self.vertices().without(self.center).difference(self.spoke_set())
    }

    /// Rim edges as `(u, v)` with `u < v`.
    pub fn rim_edges(&self) -> Vec<(usize, usize)> {
        let k = self.rim.len();
        (0..k)
            .map(|i| {
                let (a, b) = (self.rim[i], self.rim[(i + 1) % k]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Whether `(u, v)` is a rim or spoke edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.rim_edges().contains(&e)
            || (u == self.center && self.spokes.contains(&v))
            || (v == self.center && self.spokes.contains(&u))
    }

    /// Checks the wheel conditions in `g`: the rim is a cycle of `g` on at
    /// least three vertices avoiding the center, there are at least three
    /// spokes, and every neighbour of the center is a spoke.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let k = self.rim.len();
        let rim: VertexSet = self.rim.iter().collect();
        if k < 3 || rim.len() != k || rim.contains(self.center) {
            return Err("rim is not a cycle of distinct vertices avoiding the center".into());
        }
        if let Some((a, b)) = self.rim_edges().into_iter().find(|&(a, b)| !g.has_edge(a, b)) {
            return Err(format!("rim edge {a}-{b} is missing"));
        }
        if self.spokes.len() < 3 {
            return Err(format!("only {} spokes", self.spokes.len()));
        }
        if g.neighbors(self.center) != self.spoke_set() {
            return Err("spokes differ from the neighbourhood of the center".into());
        }
        Ok(())
    }
}

/// Outcome of [`wheel_at`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WheelAt {
    Wheel(Wheel),
    /// The cofacial closure is not a wheel; the note names the failed condition.
    Undefined(String),
}

impl WheelAt {
    pub fn wheel(self) -> Option<Wheel> {
        match self {
            WheelAt::Wheel(w) => Some(w),
            WheelAt::Undefined(_) => None,
        }
    }
}

/// The vertices and edges cofacial with `w`, if they form a wheel centred at
/// `w`. Errors when `w` is not a host vertex or lies on the outer face.
pub fn wheel_at(e: &DiscEmbedding, w: usize) -> Result<WheelAt> {
    let g = e.host();
    if w >= g.order() {
        return Err(Error::Domain(format!("vertex {w} is not in the host")));
    }
    if e.outer_vertices().contains(w) {
        return Err(Error::Precondition(format!("vertex {w} lies on the outer face")));
    }
    let mut verts = VertexSet::EMPTY;
    let mut rim_adj = vec![VertexSet::EMPTY; g.order()];
    for f in e.faces().iter().skip(1) {
        if !f.vertices().contains(w) {
            continue;
        }
        verts = verts.union(f.vertices());
        for (a, b) in f.darts() {
            if a != w && b != w {
                rim_adj[a].insert(b);
                rim_adj[b].insert(a);
            }
        }
    }
    let rim_set = verts.without(w);
    let spokes = g.neighbors(w);
    if spokes.len() < 3 {
        return Ok(WheelAt::Undefined(format!("center has {} spokes", spokes.len())));
    }
    if rim_set.len() < 3 {
        return Ok(WheelAt::Undefined("fewer than three rim vertices".into()));
    }
    if let Some(v) = rim_set.iter().find(|&v| rim_adj[v].len() != 2) {
        return Ok(WheelAt::Undefined(format!("rim vertex {v} has {} rim edges", rim_adj[v].len())));
    }
    let start = rim_set.first().unwrap();
    let mut rim = vec![start];
    let mut prev = start;
    let mut cur = rim_adj[start].first().unwrap();
    while cur != start {
        rim.push(cur);
        let next = rim_adj[cur].without(prev).first().unwrap();
        prev = cur;
        cur = next;
    }
    if rim.len() != rim_set.len() {
        return Ok(WheelAt::Undefined("rim edges form several cycles".into()));
    }
    if !e.cycle_is_clockwise(&rim) {
        rim[1..].reverse();
    }
    let spokes: Vec<usize> = rim.iter().copied().filter(|&v| spokes.contains(v)).collect();
    let wheel = Wheel { center: w, rim, spokes };
    debug_assert_eq!(wheel.validate(g), Ok(()));
    Ok(WheelAt::Wheel(wheel))
}

/// Whether every vertex of `t` on the wheel is a neighbour of the center.
pub fn is_good(wheel: &Wheel, t: VertexSet) -> bool {
    t.intersection(wheel.vertices()).is_subset(wheel.spoke_set())
}

/// Every interior vertex outside `t` whose cofacial closure is a wheel good
/// for `t`, in increasing order of center.
pub fn find_good_wheels(e: &DiscEmbedding, t: VertexSet) -> Vec<Wheel> {
    let g = e.host();
    let outer = e.outer_vertices();
    g.vertices()
        .difference(t)
        .difference(outer)
        .iter()
        .filter_map(|w| wheel_at(e, w).ok()?.wheel())
        .filter(|wh| is_good(wh, t))
        .collect()
}

/// Outcome of [`is_extendable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    /// Four paths from the center, sorted by endpoint.
    Paths(PathSystem),
    /// No such paths: after deleting the non-spoke rim vertices and the
    /// center, `cut` separates the spokes from `t` (or from the sinks that
    /// must be reached).
    Blocked { cut: VertexCut },
}

/// Checks the definition of `(t, s)`-extendability for `paths` directly.
pub fn verify_extension(
    g: &Graph,
    wheel: &Wheel,
    t: VertexSet,
    s: VertexSet,
    paths: &PathSystem,
) -> std::result::Result<(), String> {
    let w = wheel.center;
    if paths.len() != 4 {
        return Err(format!("{} paths instead of four", paths.len()));
    }
    paths.validate(g, VertexSet::singleton(w))?;
    let on_wheel = wheel.vertices();
    let mut ends = VertexSet::EMPTY;
    for (i, p) in paths.paths.iter().enumerate() {
        if p[0] != w || p.len() < 2 {
            return Err(format!("path {i} does not leave the center"));
        }
        let hits = p[1..].iter().filter(|&&v| on_wheel.contains(v)).count();
        if hits != 1 {
            return Err(format!("path {i} meets the wheel in {hits} vertices besides the center"));
        }
        let end = *p.last().unwrap();
        if !t.contains(end) {
            return Err(format!("path {i} ends at {end}, outside the cut"));
        }
        ends.insert(end);
    }
    if let Some(x) = s.difference(ends).first() {
        return Err(format!("no path ends at {x}"));
    }
    Ok(())
}

/// Decides whether `wheel` is `(t, s)`-extendable in the host of `e`.
///
/// After deleting the center and the rim vertices that are not its
/// neighbours, the question becomes one of four disjoint paths from the
/// spokes to `t` covering `s`: a path that meets several spokes is cut back
/// to start at the last one. Among all valid systems the one returned has
/// the smallest sorted endpoint set, then the smallest path sequences.
pub fn is_extendable(e: &DiscEmbedding, wheel: &Wheel, t: &[usize], s: VertexSet) -> Result<Extension> {
    let g = e.host();
    let tset: VertexSet = t.iter().collect();
    if tset.len() < 4 {
        return Err(Error::Infeasible(format!("cut has {} vertices, four are needed", tset.len())));
    }
    if !tset.is_subset(g.vertices()) || tset.len() != t.len() {
        return Err(Error::Domain("cut has repeated or foreign vertices".into()));
    }
    if !s.is_subset(tset) || s.len() > 4 {
        return Err(Error::Domain("s must be a subset of the cut with at most four vertices".into()));
    }
    wheel.validate(g).map_err(Error::Precondition)?;
    if !is_good(wheel, tset) {
        return Err(Error::Precondition("wheel is not good for the cut".into()));
    }

    let spokes = wheel.spoke_set();
    let keep = g.vertices().difference(wheel.non_spokes()).without(wheel.center);
    let reduced = g.restrict(keep);
    if spokes.len() < 4 {
        return Ok(Extension::Blocked { cut: VertexCut { vertices: spokes, direct_edges: Vec::new() } });
    }
    match disjoint_paths(&reduced, spokes, tset, 4, s)? {
        Routing::Paths(_) => {}
        Routing::Cut(cut) | Routing::NoRouting { cut, .. } => return Ok(Extension::Blocked { cut }),
    }

    // Smallest feasible endpoint set.
    let ends = subsets4(tset)
        .into_iter()
        .filter(|x| s.is_subset(*x))
        .find(|&x| matches!(disjoint_paths(&reduced, spokes, x, 4, x), Ok(Routing::Paths(_))))
        .expect("a routing to t has some endpoint set");

    let mut search = Search {
        g,
        reduced: &reduced,
        center: wheel.center,
        spokes,
        avoid: wheel.vertices(),
        ends: ends.to_vec(),
        paths: Vec::new(),
        used: VertexSet::EMPTY,
    };
    let found = search.path(0);
    assert!(found, "flow found a routing but the ordered search did not");
    let ps = PathSystem::new(search.paths);
    debug_assert_eq!(verify_extension(g, wheel, tset, s, &ps), Ok(()));
    Ok(Extension::Paths(ps))
}

/// Four-element subsets of `t` in lexicographic order of their sorted lists.
fn subsets4(t: VertexSet) -> Vec<VertexSet> {
    let v = t.to_vec();
    let mut out = Vec::new();
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            for c in b + 1..v.len() {
                for d in c + 1..v.len() {
                    out.push([v[a], v[b], v[c], v[d]].iter().collect());
                }
            }
        }
    }
    out
}

/// Depth-first search over path systems in lexicographic order, pruned by
/// a flow relaxation of what remains.
struct Search<'a> {
    g: &'a Graph,
    reduced: &'a Graph,
    center: usize,
    spokes: VertexSet,
    avoid: VertexSet,
    ends: Vec<usize>,
    paths: Vec<Vec<usize>>,
    used: VertexSet,
}

impl Search<'_> {
    /// Whether paths `i..4` can still be completed when path `i` currently
    /// stands at `at` (or has not left the center when `at` is None).
    fn feasible(&self, i: usize, at: Option<usize>) -> bool {
        let need = 4 - i;
        let free_spokes = self.spokes.difference(self.used);
        let sources = match at {
            Some(c) => free_spokes.with(c),
            None => free_spokes,
        };
        let sinks: VertexSet = self.ends[i..].iter().collect();
        if sources.len() < need {
            return false;
        }
        let mut blocked = self.used;
        if let Some(c) = at {
            blocked.remove(c);
        }
        let h = self.reduced.restrict(self.reduced.vertices().difference(blocked));
        matches!(disjoint_paths(&h, sources, sinks, need, sinks), Ok(Routing::Paths(_)))
    }

    fn path(&mut self, i: usize) -> bool {
        if i == 4 {
            return true;
        }
        if !self.feasible(i, None) {
            return false;
        }
        for x in self.spokes.difference(self.used).iter() {
            if self.ends[..i].contains(&x) || (self.ends.contains(&x) && x != self.ends[i]) {
                continue;
            }
            self.used.insert(x);
            let mut p = vec![self.center, x];
            if self.extend(i, &mut p) {
                return true;
            }
            self.used.remove(x);
        }
        false
    }

    fn extend(&mut self, i: usize, p: &mut Vec<usize>) -> bool {
        let c = *p.last().unwrap();
        if c == self.ends[i] {
            self.paths.push(p.clone());
            if self.path(i + 1) {
                return true;
            }
            self.paths.pop();
            return false;
        }
        if !self.feasible(i, Some(c)) {
            return false;
        }
        let others: VertexSet = self.ends.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
        let next = self.g.neighbors(c).difference(self.used).difference(self.avoid).difference(others);
        for y in next.iter() {
            self.used.insert(y);
            p.push(y);
            if self.extend(i, p) {
                return true;
            }
            p.pop();
            self.used.remove(y);
        }
        false
    }
}
