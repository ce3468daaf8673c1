//! k-separations: pairs of edge-disjoint subgraphs covering the host and
//! meeting in exactly k vertices, with neither side contained in the other.
//!
//! Separations are generated from vertex cuts. For a k-set `C`, each split
//! of the components of `G - C` into two nonempty groups `A`, `B` gives the
//! sides `C + A` and `C + B`; edges with both ends in `C` go to one side by
//! the [`CutEdges`] convention.

use serde::{Deserialize, Serialize};

use crate::embedding::{is_disc_planar, DiscEmbedding};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which side receives the edges joining two cut vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum CutEdges {
    #[default]
    Side1,
    Side2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

/// A separation of a host graph, stored by vertex sets. The edges of side
/// `i` are the host edges inside its vertex set, except that edges inside
/// the cut belong only to the side named by `cut_edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Separation {
    pub cut: VertexSet,
    pub side1: VertexSet,
    pub side2: VertexSet,
    pub cut_edges: CutEdges,
}

/// `{"cut":[...], "side1":[...], "side2":[...], "cut_edges_side":1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationJson {
    pub cut: Vec<usize>,
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
    pub cut_edges_side: u8,
}

impl Separation {
    pub fn sides(&self, side: Side) -> VertexSet {
        match side {
            Side::One => self.side1,
            Side::Two => self.side2,
        }
    }

    /// Whether `side` owns the edges inside the cut.
    fn owns_cut_edges(&self, side: Side) -> bool {
        matches!((side, self.cut_edges), (Side::One, CutEdges::Side1) | (Side::Two, CutEdges::Side2))
    }

    /// Edges of one side as host-id pairs `(u, v)` with `u < v`.
    pub fn side_edges(&self, g: &Graph, side: Side) -> Vec<(usize, usize)> {
        let vs = self.sides(side);
        let own = self.owns_cut_edges(side);
        g.edges()
            .into_iter()
            .filter(|&(u, v)| vs.contains(u) && vs.contains(v))
            .filter(|&(u, v)| own || !(self.cut.contains(u) && self.cut.contains(v)))
            .collect()
    }

    /// One side as a graph on dense ids, with the map from new ids to host ids.
    pub fn side_graph(&self, g: &Graph, side: Side) -> (Graph, Vec<usize>) {
        let map = self.sides(side).to_vec();
        let mut inv = vec![usize::MAX; g.order()];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let edges: Vec<(usize, usize)> =
            self.side_edges(g, side).into_iter().map(|(u, v)| (inv[u], inv[v])).collect();
        let h = Graph::from_edges(map.len(), &edges).expect("side edges are valid");
        (h, map)
    }

    /// The same separation with the sides exchanged.
    pub fn swapped(&self) -> Separation {
        let cut_edges = match self.cut_edges {
            CutEdges::Side1 => CutEdges::Side2,
            CutEdges::Side2 => CutEdges::Side1,
        };
        Separation { cut: self.cut, side1: self.side2, side2: self.side1, cut_edges }
    }

    /// Checks the defining conditions against `g`: the sides cover the host,
    /// meet exactly in the cut, every edge lies in exactly one side, and
    /// neither side is a subgraph of the other.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::Domain(m));
        if self.side1.union(self.side2) != g.vertices() {
            return bad("sides do not cover the host".into());
        }
        if self.side1.intersection(self.side2) != self.cut {
            return bad("sides do not meet exactly in the cut".into());
        }
        let e1 = self.side_edges(g, Side::One);
        let e2 = self.side_edges(g, Side::Two);
        for (u, v) in g.edges() {
            let n = e1.contains(&(u, v)) as usize + e2.contains(&(u, v)) as usize;
            if n != 1 {
                return bad(format!("edge {u}-{v} lies in {n} sides"));
            }
        }
        let contained = |a: VertexSet, ea: &[(usize, usize)], b: VertexSet, eb: &[(usize, usize)]| {
            a.is_subset(b) && ea.iter().all(|e| eb.contains(e))
        };
        if contained(self.side1, &e1, self.side2, &e2) || contained(self.side2, &e2, self.side1, &e1) {
            return bad("one side is contained in the other".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> SeparationJson {
        SeparationJson {
            cut: self.cut.to_vec(),
            side1: self.side1.to_vec(),
            side2: self.side2.to_vec(),
            cut_edges_side: match self.cut_edges {
                CutEdges::Side1 => 1,
                CutEdges::Side2 => 2,
            },
        }
    }

    pub fn from_json(j: &SeparationJson) -> Result<Separation> {
        let cut_edges = match j.cut_edges_side {
            1 => CutEdges::Side1,
            2 => CutEdges::Side2,
            x => return Err(Error::Domain(format!("cut_edges_side must be 1 or 2, got {x}"))),
        };
        let set = |v: &[usize]| -> Result<VertexSet> {
            if v.iter().any(|&x| x >= 64) {
                return Err(Error::Domain("vertex id out of range".into()));
            }
            Ok(v.iter().collect())
        };
        Ok(Separation { cut: set(&j.cut)?, side1: set(&j.side1)?, side2: set(&j.side2)?, cut_edges })
    }
}

/// Whether no edge of the chosen side joins two cut vertices.
pub fn independent_cut(g: &Graph, sep: &Separation, side: Side) -> bool {
    if !sep.owns_cut_edges(side) {
        return true;
    }
    sep.cut.iter().all(|c| g.neighbors(c).intersection(sep.cut).is_empty())
}

/// Next k-subset of `0..n` as a bitmask in increasing numeric order.
fn next_subset(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Cut sets of size `k` in increasing mask order, with the components left
/// by each.
struct Cuts<'a> {
    g: &'a Graph,
    k: usize,
    next: Option<u64>,
}

impl<'a> Cuts<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        let next = if k < n { Some(if k == 0 { 0 } else { (1u64 << k) - 1 }) } else { None };
        Cuts { g, k, next }
    }
}

impl Iterator for Cuts<'_> {
    type Item = (VertexSet, Vec<VertexSet>);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.g.order();
        loop {
            let x = self.next?;
            self.next = if self.k == 0 { None } else { Some(next_subset(x)).filter(|&y| y >> n == 0) };
            let cut = VertexSet(x);
            let comps = self.g.components_within(self.g.vertices().difference(cut));
            if comps.len() >= 2 {
                return Some((cut, comps));
            }
        }
    }
}

/// Groups of components as `(A, B)` vertex sets, each split listed once with
/// the first component in `A`.
fn splits(comps: &[VertexSet]) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
    let m = comps.len();
    (0u64..(1 << (m - 1)) - 1).map(move |mask| {
        let mut a = comps[0];
        let mut b = VertexSet::EMPTY;
        for (i, c) in comps.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                a = a.union(*c);
            } else {
                b = b.union(*c);
            }
        }
        (a, b)
    })
}

/// Every k-separation of `g` up to exchanging the sides, as a lazy stream.
/// Cuts come in increasing bitmask order. Each separation is oriented with
/// the larger side first (on ties, side 1 holds the smallest non-cut
/// vertex) and is skipped when that side has fewer than `min_side_order`
/// vertices.
pub fn enumerate_k_separations(
    g: &Graph,
    k: usize,
    min_side_order: usize,
    cut_edges: CutEdges,
) -> impl Iterator<Item = Separation> + '_ {
    Cuts::new(g, k).flat_map(move |(cut, comps)| {
        let found: Vec<Separation> = splits(&comps)
            .filter_map(|(a, b)| {
                let (a, b) = if b.len() > a.len() || (b.len() == a.len() && b.first() < a.first()) {
                    (b, a)
                } else {
                    (a, b)
                };
                let sep = Separation { cut, side1: cut.union(a), side2: cut.union(b), cut_edges };
                (sep.side1.len() >= min_side_order).then_some(sep)
            })
            .collect();
        found
    })
}

/// A separation whose side 1 is disc-planar with the cut on the boundary.
#[derive(Debug, Clone)]
pub struct PlanarSide {
    pub separation: Separation,
    /// Embedding of side 1 on dense ids; `map[i]` is the host id of vertex `i`.
    pub embedding: DiscEmbedding,
    pub map: Vec<usize>,
}

/// Separations whose side 1 has at least `min_side_order` vertices and
/// embeds in a disc with the cut on the boundary. Both orientations of each
/// split are tried, so any side of any separation can appear as side 1.
pub fn planar_side_separations(
    g: &Graph,
    k: usize,
    min_side_order: usize,
    cut_edges: CutEdges,
) -> impl Iterator<Item = PlanarSide> + '_ {
    Cuts::new(g, k).flat_map(move |(cut, comps)| {
        let mut found = Vec::new();
        for (a, b) in splits(&comps) {
            for (x, y) in [(a, b), (b, a)] {
                let sep = Separation { cut, side1: cut.union(x), side2: cut.union(y), cut_edges };
                if sep.side1.len() < min_side_order {
                    continue;
                }
                let (h, map) = sep.side_graph(g, Side::One);
                let boundary: Vec<usize> = (0..map.len()).filter(|&i| cut.contains(map[i])).collect();
                if let Ok(Some(embedding)) = is_disc_planar(&h, &boundary, false) {
                    found.push(PlanarSide { separation: sep, embedding, map });
                }
            }
        }
        found
    })
}
