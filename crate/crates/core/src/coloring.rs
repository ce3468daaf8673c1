//! 4-colorings: exact search, verification, and greedy extension of a
//! partial coloring along a given vertex order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const COLORS: u8 = 4;

/// Largest order accepted by [`four_color`].
pub const SEARCH_LIMIT: usize = 20;

/// A possibly partial assignment of colors `0..4`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<Option<u8>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    pub fn domain(&self) -> VertexSet {
        self.colors.iter().enumerate().filter(|(_, c)| c.is_some()).map(|(v, _)| v).collect()
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = [false; 256];
        self.colors.iter().flatten().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringViolation {
    Length { expected: usize, found: usize },
    BadColor { vertex: usize, color: u8 },
    Conflict(usize, usize),
    Uncolored(usize),
}

impl std::fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColoringViolation::Length { expected, found } => {
                write!(f, "coloring has {found} entries, graph has {expected} vertices")
            }
            ColoringViolation::BadColor { vertex, color } => write!(f, "vertex {vertex} has color {color}"),
            ColoringViolation::Conflict(u, v) => write!(f, "edge {u}-{v} is monochromatic"),
            ColoringViolation::Uncolored(v) => write!(f, "vertex {v} is uncolored"),
        }
    }
}

/// Checks the colors are in range, no edge is monochromatic (edges in
/// lexicographic order), then that every vertex is colored.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> std::result::Result<(), ColoringViolation> {
    check_partial(g, c)?;
    match c.colors.iter().position(Option::is_none) {
        Some(v) => Err(ColoringViolation::Uncolored(v)),
        None => Ok(()),
    }
}

fn check_partial(g: &Graph, c: &Coloring) -> std::result::Result<(), ColoringViolation> {
    if c.colors.len() != g.order() {
        return Err(ColoringViolation::Length { expected: g.order(), found: c.colors.len() });
    }
    if let Some((v, &x)) = c.colors.iter().enumerate().find(|(_, x)| x.is_some_and(|x| x >= COLORS)) {
        return Err(ColoringViolation::BadColor { vertex: v, color: x.unwrap() });
    }
    for (u, v) in g.edges() {
        if c.colors[u].is_some() && c.colors[u] == c.colors[v] {
            return Err(ColoringViolation::Conflict(u, v));
        }
    }
    Ok(())
}

/// Exhaustive DSATUR backtracking: the next vertex is the one whose colored
/// neighbours use the most colors (ties: higher degree, then lower id), and
/// a color beyond the largest one used so far is tried only once.
pub fn four_color(g: &Graph) -> Result<Option<Coloring>> {
    k_color(g, COLORS)
}

/// As [`four_color`] with `k` colors, `k <= 4`.
pub fn k_color(g: &Graph, k: u8) -> Result<Option<Coloring>> {
    if g.order() > SEARCH_LIMIT {
        return Err(Error::UnsupportedSize { order: g.order(), limit: SEARCH_LIMIT });
    }
    if k > COLORS {
        return Err(Error::Domain(format!("at most {COLORS} colors")));
    }
    let n = g.order();
    let mut colors = vec![None; n];
    if dsatur(g, k, &mut colors, 0, 0) {
        Ok(Some(Coloring { colors }))
    } else {
        Ok(None)
    }
}

fn dsatur(g: &Graph, k: u8, colors: &mut [Option<u8>], done: usize, used: u8) -> bool {
    if done == colors.len() {
        return true;
    }
    let mut best: Option<(usize, u32, usize)> = None;
    let mut best_mask = 0u8;
    for v in 0..colors.len() {
        if colors[v].is_some() {
            continue;
        }
        let mask = g.neighbors(v).iter().filter_map(|u| colors[u]).fold(0u8, |m, c| m | 1 << c);
        let key = (mask.count_ones(), g.degree(v));
        if best.is_none_or(|(_, s, d)| key > (s, d)) {
            best = Some((v, key.0, key.1));
            best_mask = mask;
        }
    }
    let v = best.unwrap().0;
    for c in 0..k.min(used + 1) {
        if best_mask >> c & 1 == 1 {
            continue;
        }
        colors[v] = Some(c);
        if dsatur(g, k, colors, done + 1, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = None;
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Greedy {
    Colored(Coloring),
    /// The first vertex whose neighbours already use all four colors.
    Stuck(usize),
}

/// Colors the vertices of `order` in turn, each with the least color absent
/// from its colored neighbours.
pub fn greedy_extend(g: &Graph, partial: &Coloring, order: &[usize]) -> Result<Greedy> {
    check_partial(g, partial).map_err(|v| Error::Precondition(format!("partial coloring: {v}")))?;
    let uncolored = g.vertices().difference(partial.domain());
    let listed: VertexSet = order.iter().filter(|&&v| v < g.order()).collect();
    if listed.len() != order.len() || listed != uncolored {
        return Err(Error::Domain("order must list each uncolored vertex exactly once".into()));
    }
    let mut c = partial.clone();
    for &v in order {
        let mask = g.neighbors(v).iter().filter_map(|u| c.colors[u]).fold(0u8, |m, x| m | 1 << x);
        match (0..COLORS).find(|&x| mask >> x & 1 == 0) {
            Some(x) => c.colors[v] = Some(x),
            None => return Ok(Greedy::Stuck(v)),
        }
    }
    Ok(Greedy::Colored(c))
}
