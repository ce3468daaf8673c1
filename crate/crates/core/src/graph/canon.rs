//! Canonical labeling of small vertex-colored graphs.
//!
//! Individualization-refinement: colors are refined to an equitable
//! partition, the first smallest non-singleton cell is split in every way,
//! and the leaf whose relabeled adjacency code is largest wins. Automorphisms
//! discovered at equal leaves prune sibling branches (orbit pruning) and
//! cut off subtrees equivalent to the first path.

use super::{emit_graph6, Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order handled by [`canonical_key`] (the adjacency code is a u128).
pub const MAX_CANON_ORDER: usize = 16;
/// Largest order accepted by [`canonical_form`].
pub const MAX_FORM_ORDER: usize = 12;

/// Isomorphism-invariant key: equal keys iff the colored graphs are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: u8,
    pub marked: u8,
    pub code: u128,
}

const MAX_AUTS: usize = 64;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first_path: Option<Vec<usize>>,
    first_code: u128,
    first_lab: Vec<usize>,
    best_code: u128,
    best_lab: Vec<usize>,
    auts: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    /// Refines `colors` to the coarsest equitable partition
    /// finer than it; ranks stay ordered by the previous color.
    fn refine(&self, colors: &mut [u8]) {
        let n = self.n;
        let mut ranks: Vec<u8> = colors.to_vec();
        ranks.sort_unstable();
        ranks.dedup();
        for c in colors.iter_mut() {
            *c = ranks.binary_search(c).unwrap() as u8;
        }
        let mut cells = ranks.len();
        loop {
            let mut sig = [0u128; MAX_CANON_ORDER];
            for v in 0..n {
                let mut s = (colors[v] as u128) << 64;
                for u in self.g.neighbors(v).iter() {
                    s += 1u128 << (4 * colors[u] as u32);
                }
                sig[v] = s;
            }
            let mut sorted: Vec<u128> = sig[..n].to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            for v in 0..n {
                colors[v] = sorted.binary_search(&sig[v]).unwrap() as u8;
            }
            if sorted.len() == cells {
                return;
            }
            cells = sorted.len();
        }
    }

    fn code(&self, lab: &[usize]) -> u128 {
        let mut inv = [0usize; MAX_CANON_ORDER];
        for v in 0..self.n {
            inv[lab[v]] = v;
        }
        let mut code = 0u128;
        for j in 1..self.n {
            let row = self.g.rows()[inv[j]];
            for i in 0..j {
                code = (code << 1) | ((row >> inv[i]) & 1) as u128;
            }
        }
        code
    }

    /// Records the automorphism sending the vertex labeled `i` in `a` to the
    /// vertex labeled `i` in `b`.
    fn record(&mut self, a: &[usize], b: &[usize]) {
        if self.auts.len() >= MAX_AUTS {
            return;
        }
        let mut inv_b = vec![0usize; self.n];
        for v in 0..self.n {
            inv_b[b[v]] = v;
        }
        let gamma: Vec<usize> = (0..self.n).map(|v| inv_b[a[v]]).collect();
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.auts.push(gamma);
        }
    }

    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.auts {
            if prefix.iter().all(|&v| gamma[v] == v) {
                for v in 0..self.n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    /// Returns `Some(d)` to abandon everything below depth `d`.
    fn search(&mut self, mut colors: Vec<u8>, prefix: &mut Vec<usize>) -> Option<usize> {
        self.refine(&mut colors);
        let n = self.n;
        let mut size = [0usize; MAX_CANON_ORDER];
        for &c in &colors {
            size[c as usize] += 1;
        }
        let target = (0..n).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(target) = target else {
            let lab: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let code = self.code(&lab);
            let common = self
                .first_path
                .as_ref()
                .map(|f| f.iter().zip(prefix.iter()).take_while(|(a, b)| a == b).count());
            match common {
                None => {
                    self.first_path = Some(prefix.clone());
                    self.first_code = code;
                    self.first_lab = lab.clone();
                    self.best_code = code;
                    self.best_lab = lab;
                }
                Some(common) => {
                    if code == self.first_code {
                        let first_lab = std::mem::take(&mut self.first_lab);
                        self.record(&lab, &first_lab);
                        self.first_lab = first_lab;
                        return Some(common);
                    }
                    if code > self.best_code {
                        self.best_code = code;
                        self.best_lab = lab;
                    } else if code == self.best_code {
                        let best = std::mem::take(&mut self.best_lab);
                        self.record(&lab, &best);
                        self.best_lab = best;
                    }
                }
            }
            return None;
        };

        let depth = prefix.len();
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &x in &cell {
            if !explored.is_empty() {
                let roots = self.orbit_roots(prefix);
                if explored.iter().any(|&e| roots[e] == roots[x]) {
                    continue;
                }
            }
            let child: Vec<u8> = (0..n)
                .map(|v| {
                    let c = colors[v] * 2;
                    if colors[v] as usize == target && v != x {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            prefix.push(x);
            let jump = self.search(child, prefix);
            prefix.pop();
            explored.push(x);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Canonical relabeling (`perm[old] = new`) of `g` with vertex colors.
/// Vertices are labeled in increasing color order; two colored graphs get
/// the same relabeled graph iff they are isomorphic by a color-preserving map.
pub fn canonical_labeling(g: &Graph, colors: &[u8]) -> Result<Vec<usize>> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_CANON_ORDER });
    }
    if colors.len() != n {
        return Err(Error::Domain(format!("{} colors for {n} vertices", colors.len())));
    }
    Ok(labeling(g, colors).0)
}

/// Canonical relabeling and its adjacency code; no size or length checks.
pub(crate) fn labeling(g: &Graph, colors: &[u8]) -> (Vec<usize>, u128) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), 0);
    }
    let mut ranks: Vec<u8> = colors.to_vec();
    let mut distinct = ranks.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for c in ranks.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u8;
    }
    let mut s = Search {
        g,
        n,
        first_path: None,
        first_code: 0,
        first_lab: Vec::new(),
        best_code: 0,
        best_lab: Vec::new(),
        auts: Vec::new(),
    };
    s.search(ranks, &mut Vec::new());
    (s.best_lab, s.best_code)
}

/// Isomorphism key of `g` with `marked` as a distinguished vertex set.
pub fn canonical_key(g: &Graph, marked: VertexSet) -> Result<CanonKey> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_CANON_ORDER });
    }
    let colors: Vec<u8> = (0..n).map(|v| if marked.contains(v) { 0 } else { 1 }).collect();
    let (_, code) = labeling(g, &colors);
    Ok(CanonKey { n: n as u8, marked: marked.intersection(g.vertices()).len() as u8, code })
}

/// Canonical string for `g`, optionally with a distinguished boundary set
/// (its cyclic order is ignored). The string is the graph6 record of the
/// canonical relabeling, followed by `:b` when a boundary of size `b` is given;
/// boundary vertices receive the labels `0..b`.
pub fn canonical_form(g: &Graph, boundary: Option<&[usize]>) -> Result<String> {
    let n = g.order();
    if n > MAX_FORM_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_FORM_ORDER });
    }
    let marked: VertexSet = boundary.unwrap_or(&[]).iter().collect();
    if !marked.is_subset(g.vertices()) {
        return Err(Error::Domain("boundary vertex outside the graph".into()));
    }
    let colors: Vec<u8> = (0..n).map(|v| if marked.contains(v) { 0 } else { 1 }).collect();
    let (perm, _) = labeling(g, &colors);
    let g6 = emit_graph6(&g.relabel(&perm))?;
    Ok(match boundary {
        Some(_) => format!("{g6}:{}", marked.len()),
        None => g6,
    })
}
