//! Configurations that block good wheels: a graph with five independent
//! boundary vertices, at most a few interior vertices, a disc embedding with
//! the boundary on the outer face, and no wheel good for the boundary.
//!
//! Candidates must also be consistent with a 4-connected ambient graph:
//! for every set `X` of at most three vertices, each component of `G - X`
//! has a boundary vertex outside `X` (otherwise `X` would separate that
//! component from the rest of the ambient graph). In particular interior
//! vertices have degree at least 4. [`DegreeFilter::Flagged`] relaxes this
//! for single interior vertices of degree 3, which are kept and flagged.
//!
//! The catalog is built by adding one interior vertex at a time to all
//! disc-planar configurations of the previous size, deduplicating by
//! canonical labeling with the boundary as a distinguished set.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{for_each_disc_embedding, is_disc_planar, planar_rotation, with_apex};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_labeling, Graph, VertexSet};
use crate::linkage::small_separator;
use crate::wheels::find_good_wheels;

pub const BOUNDARY: usize = 5;
pub const MAX_INTERIOR: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum DegreeFilter {
    Strict,
    /// Interior vertices of degree 3 are admitted, listed in `flagged`, and
    /// treated like boundary vertices by the separator check (every
    /// component must still meet the boundary).
    #[default]
    Flagged,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionEntry {
    /// Canonical form of the configuration with its boundary marked.
    pub id: String,
    /// Canonically labeled: the boundary is `0..5`, interior `5..n`.
    pub graph: Graph,
    /// Boundary in the cyclic order of the outer walk.
    pub boundary: Vec<usize>,
    pub interior_order: usize,
    /// Interior vertices of degree 3 admitted by the flagged filter.
    pub flagged: Vec<usize>,
}

/// `{"id":..., "n":..., "boundary":[...], "edges":[[u,v],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub id: String,
    pub n: usize,
    pub boundary: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flagged: Vec<usize>,
}

impl ObstructionEntry {
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn to_json(&self) -> EntryJson {
        EntryJson {
            id: self.id.clone(),
            n: self.graph.order(),
            boundary: self.boundary.clone(),
            edges: self.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            flagged: self.flagged.clone(),
        }
    }

    pub fn from_json(j: &EntryJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = Graph::from_edges(j.n, &edges)?;
        if j.boundary.len() != BOUNDARY {
            return Err(Error::Domain(format!("entry {} has {} boundary vertices", j.id, j.boundary.len())));
        }
        Ok(ObstructionEntry {
            id: j.id.clone(),
            interior_order: j.n.saturating_sub(BOUNDARY),
            graph,
            boundary: j.boundary.clone(),
            flagged: j.flagged.clone(),
        })
    }
}

pub fn catalog_to_json(catalog: &[ObstructionEntry]) -> Vec<EntryJson> {
    catalog.iter().map(ObstructionEntry::to_json).collect()
}

pub fn catalog_from_json(entries: &[EntryJson]) -> Result<Vec<ObstructionEntry>> {
    entries.iter().map(ObstructionEntry::from_json).collect()
}

/// Why a configuration is not in the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    BadBoundary,
    BoundaryEdge(usize, usize),
    NoInterior,
    NotDiscPlanar,
    /// Deleting `separator` leaves `component` with no boundary vertex outside it.
    Inconsistent { separator: Vec<usize>, component: Vec<usize> },
    /// The good wheel centred here.
    GoodWheel(usize),
}

/// The consistency filter; `Ok` carries the flagged vertices.
pub fn consistency(g: &Graph, boundary: VertexSet, filter: DegreeFilter) -> std::result::Result<Vec<usize>, Rejection> {
    let interior = g.vertices().difference(boundary);
    let flagged: Vec<usize> = match filter {
        DegreeFilter::Strict => Vec::new(),
        DegreeFilter::Flagged => interior.iter().filter(|&v| g.degree(v) == 3).collect(),
    };
    if let Some(v) = interior.iter().find(|&v| g.degree(v) < 3 || (g.degree(v) == 3 && !flagged.contains(&v))) {
        let sep = g.neighbors(v).to_vec();
        return Err(Rejection::Inconsistent { separator: sep, component: vec![v] });
    }
    if let Some(c) = g.components().into_iter().find(|c| c.intersection(boundary).is_empty()) {
        return Err(Rejection::Inconsistent { separator: Vec::new(), component: c.to_vec() });
    }
    // A flagged vertex counts as reaching the ambient graph on its own.
    let anchors = boundary.union(flagged.iter().collect());
    match small_separator(g, anchors, 3) {
        Some(v) => Err(Rejection::Inconsistent { separator: v.separator, component: v.component }),
        None => Ok(flagged),
    }
}

/// Decides catalog membership for `g` with the 5-vertex `boundary`: the
/// configuration passes the filters and some disc embedding has no good
/// wheel. On success returns the boundary in the outer-walk order of such an
/// embedding and the flagged vertices.
pub fn is_obstruction(
    g: &Graph,
    boundary: &[usize],
    filter: DegreeFilter,
) -> Result<std::result::Result<(Vec<usize>, Vec<usize>), Rejection>> {
    let bset: VertexSet = boundary.iter().collect();
    if boundary.len() != BOUNDARY || bset.len() != BOUNDARY || !bset.is_subset(g.vertices()) {
        return Ok(Err(Rejection::BadBoundary));
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| bset.contains(u) && bset.contains(v)) {
        return Ok(Err(Rejection::BoundaryEdge(u, v)));
    }
    if g.order() == BOUNDARY {
        return Ok(Err(Rejection::NoInterior));
    }
    let flagged = match consistency(g, bset, filter) {
        Ok(f) => f,
        Err(r) => return Ok(Err(r)),
    };
    if is_disc_planar(g, boundary, false)?.is_none() {
        return Ok(Err(Rejection::NotDiscPlanar));
    }
    // Drawings can differ in which vertices lie on the outer face, so every
    // one is examined.
    let mut first_wheel = None;
    let mut free = None;
    for_each_disc_embedding(g, boundary, |e| match find_good_wheels(e, bset).first() {
        Some(w) => {
            first_wheel.get_or_insert(w.center);
            true
        }
        None => {
            free = Some(e.boundary().to_vec());
            false
        }
    })?;
    match free {
        Some(order) => Ok(Ok((order, flagged))),
        None => Ok(Err(Rejection::GoodWheel(first_wheel.expect("disc-planar graphs have an embedding")))),
    }
}

/// Canonical relabeling with the boundary `0..5` marked.
fn canonical(g: &Graph) -> Result<Graph> {
    let colors: Vec<u8> = (0..g.order()).map(|v| u8::from(v >= BOUNDARY)).collect();
    Ok(g.relabel(&canonical_labeling(g, &colors)?))
}

fn disc_planar(g: &Graph) -> bool {
    let b = VertexSet::full(BOUNDARY);
    with_apex(g, b).is_ok_and(|a| planar_rotation(&a).is_ok())
}

/// All disc-planar configurations (boundary `0..5`, independent) with
/// exactly `m` interior vertices, canonically labeled and sorted.
pub fn disc_planar_configurations(m: usize) -> Result<Vec<Graph>> {
    let mut level = vec![Graph::empty(BOUNDARY)];
    for _ in 0..m {
        level = grow(&level, disc_planar)?;
    }
    Ok(level)
}

/// Children of every parent by one new interior vertex with any
/// neighbourhood, kept when `keep` accepts them, deduplicated and sorted.
fn grow(parents: &[Graph], keep: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    let found: Vec<Vec<Graph>> = parents
        .par_iter()
        .map(|p| -> Result<Vec<Graph>> {
            let n = p.order();
            let mut out = Vec::new();
            for mask in 0..1u64 << n {
                let child = p.with_vertex(VertexSet(mask))?;
                if keep(&child) {
                    out.push(canonical(&child)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<Graph> = found.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    Ok(all)
}

/// The catalog for interior orders `1..=max_interior` under the default
/// (flagged) filter.
pub fn enumerate_obstructions(max_interior: usize) -> Result<Vec<ObstructionEntry>> {
    enumerate_obstructions_with(max_interior, DegreeFilter::default())
}

pub fn enumerate_obstructions_with(max_interior: usize, filter: DegreeFilter) -> Result<Vec<ObstructionEntry>> {
    if max_interior > MAX_INTERIOR {
        return Err(Error::UnsupportedSize { order: BOUNDARY + max_interior, limit: BOUNDARY + MAX_INTERIOR });
    }
    let b = VertexSet::full(BOUNDARY);
    let mut catalog = Vec::new();
    let mut level = vec![Graph::empty(BOUNDARY)];
    for m in 1..=max_interior {
        // Members at this size need not be disc-planar parents of anything
        // larger, so they are filtered from the full child set.
        let members = grow(&level, |g| consistency(g, b, filter).is_ok() && disc_planar(g))?;
        for g in members {
            if let Ok((boundary, flagged)) = is_obstruction(&g, &[0, 1, 2, 3, 4], filter)? {
                let id = canonical_form(&g, Some(&[0, 1, 2, 3, 4]))?;
                catalog.push(ObstructionEntry { id, graph: g, boundary, interior_order: m, flagged });
            }
        }
        if m < max_interior {
            level = grow(&level, disc_planar)?;
        }
    }
    Ok(catalog)
}

/// The id of the catalog entry isomorphic to `(g, boundary)` with the
/// boundary as a distinguished set.
pub fn match_obstruction<'a>(catalog: &'a [ObstructionEntry], g: &Graph, boundary: &[usize]) -> Option<&'a str> {
    let bset: VertexSet = boundary.iter().collect();
    if boundary.len() != BOUNDARY || bset.len() != BOUNDARY || !bset.is_subset(g.vertices()) {
        return None;
    }
    let id = canonical_form(g, Some(boundary)).ok()?;
    catalog.iter().find(|e| e.id == id).map(|e| e.id.as_str())
}
