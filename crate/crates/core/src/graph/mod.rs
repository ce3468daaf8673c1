//! Simple undirected graphs on dense vertex ids `0..order`.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so graphs are limited
//! to [`MAX_ORDER`] vertices. Every procedure in the crate works at desk
//! scale (a dozen or so vertices), where bitsets make exhaustive searches cheap.

mod canon;
pub mod families;
mod graph6;
mod paths;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_key, canonical_labeling, CanonKey, MAX_CANON_ORDER};
pub(crate) use canon::labeling;
pub use graph6::{emit_graph6, parse_graph6};
pub use paths::{disjoint_paths, is_k_connected, local_connectivity, max_disjoint_paths, Routing, VertexCut};

pub const MAX_ORDER: usize = 64;

/// A set of vertex ids, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Undirected simple graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        Graph { adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize { order: n, limit: MAX_ORDER });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for order {n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency bitsets. The relation must be symmetric
    /// and irreflexive.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::UnsupportedSize { order: n, limit: MAX_ORDER });
        }
        let full = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::InvalidGraph(format!("vertex {v} has neighbours out of range")));
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::InvalidGraph(format!("self-loop at {v}")));
            }
            for u in VertexSet(row).iter() {
                if (adj[u] >> v) & 1 == 0 {
                    return Err(Error::InvalidGraph(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < 64 && (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, within);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within` (`start` must be in `within`).
    #[inline]
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Subgraph induced by `keep`; returns the graph and the map from new ids
    /// to old ids (ascending).
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for u in VertexSet(self.adj[v] & keep.0).iter() {
                g.adj[i] |= 1u64 << pos[u];
            }
        }
        (g, map)
    }

    /// Same vertex ids, keeping only the edges with both ends in `keep`.
    pub fn restrict(&self, keep: VertexSet) -> Graph {
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, r)| if keep.contains(v) { r & keep.0 } else { 0 })
                .collect(),
        }
    }

    /// The graph with vertices renamed by `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    /// Appends a vertex adjacent to `nbrs` and returns the new graph; the new
    /// vertex has id `order()`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(Error::UnsupportedSize { order: n + 1, limit: MAX_ORDER });
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::InvalidGraph(format!("neighbours {nbrs:?} out of range")));
        }
        let mut adj = self.adj.clone();
        for v in nbrs.iter() {
            adj[v] |= 1u64 << n;
        }
        adj.push(nbrs.0);
        Ok(Graph { adj })
    }

    /// The graph with the given edges removed (missing edges are ignored).
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.unlink(u, v);
        }
        g
    }

    /// Union with another graph on the same vertex set.
    pub fn union_edges(&self, other: &Graph) -> Result<Graph> {
        if self.order() != other.order() {
            return Err(Error::InvalidGraph("union of graphs of different orders".into()));
        }
        Ok(Graph {
            adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect(),
        })
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        Graph {
            adj: self.adj.iter().enumerate().map(|(v, r)| full & !r & !(1u64 << v)).collect(),
        }
    }

    pub fn to_json(&self) -> EdgeListJson {
        EdgeListJson {
            n: self.order(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(j: &EdgeListJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(j.n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Edge-list interchange form: `{"n": int, "edges": [[u,v],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Result of [`apply_edit`]: the edited graph and the old-to-new id map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edited {
    pub graph: Graph,
    /// `id_map[old] = Some(new)` for surviving vertices.
    pub id_map: Vec<Option<usize>>,
}

/// `G - deletions + additions`. Surviving vertices are renumbered densely in
/// increasing order; additions are given in old ids.
pub fn apply_edit(g: &Graph, deletions: VertexSet, additions: &[(usize, usize)]) -> Result<Edited> {
    let n = g.order();
    if !deletions.is_subset(g.vertices()) {
        return Err(Error::InvalidEdit(format!("deleting vertices outside 0..{n}")));
    }
    let keep = g.vertices().difference(deletions);
    let (mut h, map) = g.induced(keep);
    let mut id_map = vec![None; n];
    for (new, &old) in map.iter().enumerate() {
        id_map[old] = Some(new);
    }
    for &(u, v) in additions {
        let (Some(Some(a)), Some(Some(b))) = (id_map.get(u), id_map.get(v)) else {
            return Err(Error::InvalidEdit(format!("addition ({u},{v}) references a deleted or unknown vertex")));
        };
        if a == b {
            return Err(Error::InvalidEdit(format!("addition ({u},{v}) is a loop")));
        }
        if h.has_edge(*a, *b) {
            return Err(Error::InvalidEdit(format!("addition ({u},{v}) duplicates an existing edge")));
        }
        h.link(*a, *b);
    }
    Ok(Edited { graph: h, id_map })
}

/// An ordered family of vertex sequences in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize, PartialOrd, Ord)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn new(paths: Vec<Vec<usize>>) -> Self {
        PathSystem { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks that every path is a simple path of `g` and that two paths meet
    /// only in vertices of `shared`.
    pub fn validate(&self, g: &Graph, shared: VertexSet) -> std::result::Result<(), String> {
        let mut used = VertexSet::EMPTY;
        for (i, p) in self.paths.iter().enumerate() {
            if p.is_empty() {
                return Err(format!("path {i} is empty"));
            }
            let mut own = VertexSet::EMPTY;
            for &v in p {
                if v >= g.order() {
                    return Err(format!("path {i} uses vertex {v} outside the host"));
                }
                if own.contains(v) {
                    return Err(format!("path {i} repeats vertex {v}"));
                }
                own.insert(v);
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("path {i} uses non-edge ({},{})", w[0], w[1]));
                }
            }
            let clash = own.intersection(used).difference(shared);
            if let Some(v) = clash.first() {
                return Err(format!("path {i} meets an earlier path at {v}"));
            }
            used = used.union(own);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [3usize, 1, 7].iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 7]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(7) && !s.contains(2));
        assert_eq!(s.without(3).with(0).to_vec(), vec![0, 1, 7]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(65, &[]).is_err());
    }

    #[test]
    fn edit_k4_delete_vertex_gives_k3() {
        let k4 = families::complete(4);
        let e = apply_edit(&k4, VertexSet::singleton(3), &[]).unwrap();
        assert_eq!(e.graph, families::complete(3));
        assert_eq!(e.id_map, vec![Some(0), Some(1), Some(2), None]);
    }

    #[test]
    fn edit_duplicate_edge_is_rejected() {
        let k3 = families::complete(3);
        let err = apply_edit(&k3, VertexSet::EMPTY, &[(0, 1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidEdit(_)));
    }

    #[test]
    fn edit_cycle_surgery() {
        let c5 = families::cycle(5);
        let e = apply_edit(&c5, VertexSet::singleton(0), &[(1, 4)]).unwrap();
        assert_eq!(e.graph, families::cycle(4));
    }

    #[test]
    fn edit_addition_to_deleted_vertex_fails() {
        let c5 = families::cycle(5);
        assert!(matches!(
            apply_edit(&c5, VertexSet::singleton(0), &[(0, 2)]),
            Err(Error::InvalidEdit(_))
        ));
    }

    #[test]
    fn path_system_validation() {
        let c4 = families::cycle(4);
        let ok = PathSystem::new(vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert!(ok.validate(&c4, [0usize, 2].iter().collect()).is_ok());
        assert!(ok.validate(&c4, VertexSet::EMPTY).is_err());
        let bad = PathSystem::new(vec![vec![0, 2]]);
        assert!(bad.validate(&c4, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let comps: Vec<Vec<usize>> = g.components().into_iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        let (h, map) = g.induced([1usize, 2, 3, 4].iter().collect());
        assert_eq!(map, vec![1, 2, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
    }
}
