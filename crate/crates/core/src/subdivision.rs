//! K5-subdivisions: five branch vertices joined pairwise by ten internally
//! disjoint paths. Certificates can be checked, searched for in small
//! graphs, and assembled from a wheel, four extension paths out of its
//! center and two crossing links.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, PathSystem, VertexSet};
use crate::wheels::Wheel;

/// Largest order accepted by [`find_k5_subdivision`].
pub const SEARCH_LIMIT: usize = 12;

/// Pairs of branch indices in the order paths are stored.
pub const PAIRS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Index into [`PAIRS`] of the unordered pair `{i, j}`.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    PAIRS.iter().position(|&p| p == (i, j)).expect("indices below 5 and distinct")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubdivisionCertificate {
    pub branch: [usize; 5],
    /// `paths[k]` runs from `branch[PAIRS[k].0]` to `branch[PAIRS[k].1]`.
    pub paths: Vec<Vec<usize>>,
}

/// `{"branch":[...],"paths":{"0-1":[...],...}}`; keys are branch indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub branch: Vec<usize>,
    pub paths: BTreeMap<String, Vec<usize>>,
}

impl SubdivisionCertificate {
    pub fn path(&self, i: usize, j: usize) -> &[usize] {
        &self.paths[pair_index(i, j)]
    }

    pub fn to_json(&self) -> CertificateJson {
        let paths = PAIRS.iter().zip(&self.paths).map(|(&(i, j), p)| (format!("{i}-{j}"), p.clone())).collect();
        CertificateJson { branch: self.branch.to_vec(), paths }
    }

    pub fn from_json(j: &CertificateJson) -> Result<Self> {
        let branch: [usize; 5] =
            j.branch.clone().try_into().map_err(|_| Error::Domain("need exactly five branch vertices".into()))?;
        let mut paths = Vec::with_capacity(10);
        for (a, b) in PAIRS {
            let p = j.paths.get(&format!("{a}-{b}")).ok_or_else(|| Error::Domain(format!("missing path {a}-{b}")))?;
            paths.push(p.clone());
        }
        if j.paths.len() != 10 {
            return Err(Error::Domain(format!("{} paths instead of ten", j.paths.len())));
        }
        Ok(SubdivisionCertificate { branch, paths })
    }
}

/// The first condition a certificate breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum K5Violation {
    PathCount(usize),
    OutOfRange(usize),
    RepeatedBranch(usize),
    /// Path `pair` does not start and end at its branch vertices.
    Ends { pair: (usize, usize) },
    NonEdge { pair: (usize, usize), u: usize, v: usize },
    Repeats { pair: (usize, usize), vertex: usize },
    BranchInside { pair: (usize, usize), vertex: usize },
    /// Two paths share the internal vertex.
    Shared { vertex: usize, pairs: [(usize, usize); 2] },
}

impl fmt::Display for K5Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K5Violation::PathCount(n) => write!(f, "{n} paths instead of ten"),
            K5Violation::OutOfRange(v) => write!(f, "vertex {v} is not in the host"),
            K5Violation::RepeatedBranch(v) => write!(f, "branch vertex {v} listed twice"),
            K5Violation::Ends { pair } => write!(f, "path {pair:?} has wrong end vertices"),
            K5Violation::NonEdge { pair, u, v } => write!(f, "path {pair:?} uses non-edge {u}-{v}"),
            K5Violation::Repeats { pair, vertex } => write!(f, "path {pair:?} repeats vertex {vertex}"),
            K5Violation::BranchInside { pair, vertex } => {
                write!(f, "path {pair:?} passes through branch vertex {vertex}")
            }
            K5Violation::Shared { vertex, pairs } => {
                write!(f, "paths {:?} and {:?} share vertex {vertex}", pairs[0], pairs[1])
            }
        }
    }
}

/// Checks every certificate condition in `g` and reports the first failure.
pub fn verify_k5_certificate(g: &Graph, cert: &SubdivisionCertificate) -> std::result::Result<(), K5Violation> {
    if cert.paths.len() != 10 {
        return Err(K5Violation::PathCount(cert.paths.len()));
    }
    let mut branch = VertexSet::EMPTY;
    for &b in &cert.branch {
        if b >= g.order() {
            return Err(K5Violation::OutOfRange(b));
        }
        if branch.contains(b) {
            return Err(K5Violation::RepeatedBranch(b));
        }
        branch.insert(b);
    }
    let mut owner: [Option<(usize, usize)>; 64] = [None; 64];
    for (&pair, p) in PAIRS.iter().zip(&cert.paths) {
        if let Some(&v) = p.iter().find(|&&v| v >= g.order()) {
            return Err(K5Violation::OutOfRange(v));
        }
        if p.len() < 2 || p[0] != cert.branch[pair.0] || p[p.len() - 1] != cert.branch[pair.1] {
            return Err(K5Violation::Ends { pair });
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(K5Violation::NonEdge { pair, u: w[0], v: w[1] });
            }
        }
        let mut own = VertexSet::EMPTY;
        for &v in p {
            if own.contains(v) {
                return Err(K5Violation::Repeats { pair, vertex: v });
            }
            own.insert(v);
        }
        for &v in &p[1..p.len() - 1] {
            if branch.contains(v) {
                return Err(K5Violation::BranchInside { pair, vertex: v });
            }
            if let Some(other) = owner[v] {
                return Err(K5Violation::Shared { vertex: v, pairs: [other, pair] });
            }
            owner[v] = Some(pair);
        }
    }
    Ok(())
}

/// Routes the ten branch paths for a fixed branch set by backtracking.
struct Router<'a> {
    g: &'a Graph,
    branch: [usize; 5],
    /// Pairs that are not host edges, in routing order.
    todo: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

impl Router<'_> {
    fn route(&mut self, idx: usize, free: VertexSet) -> bool {
        if idx == self.todo.len() {
            return true;
        }
        if !self.feasible(idx, free) {
            return false;
        }
        let k = self.todo[idx];
        let (a, b) = (self.branch[PAIRS[k].0], self.branch[PAIRS[k].1]);
        let mut path = vec![a];
        self.extend(idx, b, free, &mut path)
    }

    fn extend(&mut self, idx: usize, b: usize, free: VertexSet, path: &mut Vec<usize>) -> bool {
        let c = *path.last().unwrap();
        if path.len() > 1 && self.g.has_edge(c, b) {
            path.push(b);
            self.paths[self.todo[idx]] = path.clone();
            path.pop();
            if self.route(idx + 1, free) {
                return true;
            }
        }
        for y in self.g.neighbors(c).intersection(free).iter() {
            path.push(y);
            if self.extend(idx, b, free.without(y), path) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Each remaining pair must still be joinable through free vertices,
    /// and each branch vertex needs a free neighbour per remaining pair.
    fn feasible(&self, idx: usize, free: VertexSet) -> bool {
        let mut need = [0usize; 5];
        for &k in &self.todo[idx..] {
            let (i, j) = PAIRS[k];
            need[i] += 1;
            need[j] += 1;
            let (a, b) = (self.branch[i], self.branch[j]);
            let mut seen = self.g.neighbors(a).intersection(free);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.g.neighbors(v));
                }
                frontier = next.intersection(free).difference(seen);
                seen = seen.union(frontier);
            }
            if seen.intersection(self.g.neighbors(b)).is_empty() {
                return false;
            }
        }
        (0..5).all(|i| self.g.neighbors(self.branch[i]).intersection(free).len() >= need[i])
    }
}

/// Tries to complete a subdivision on the given branch vertices.
pub fn route_branch_set(g: &Graph, branch: [usize; 5]) -> Option<SubdivisionCertificate> {
    let bset: VertexSet = branch.iter().collect();
    let mut paths = vec![Vec::new(); 10];
    let mut todo = Vec::new();
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        if g.has_edge(branch[i], branch[j]) {
            // A direct edge uses no internal vertex, so it is never worse.
            paths[k] = vec![branch[i], branch[j]];
        } else {
            todo.push(k);
        }
    }
    let mut r = Router { g, branch, todo, paths };
    if r.route(0, g.vertices().difference(bset)) {
        Some(SubdivisionCertificate { branch, paths: r.paths })
    } else {
        None
    }
}

/// Searches for a K5-subdivision. Branch candidates are the vertices of
/// degree at least 4, tried highest degree first.
pub fn find_k5_subdivision(g: &Graph) -> Result<Option<SubdivisionCertificate>> {
    if g.order() > SEARCH_LIMIT {
        return Err(Error::UnsupportedSize { order: g.order(), limit: SEARCH_LIMIT });
    }
    let mut cand: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 4).collect();
    if cand.len() < 5 {
        return Ok(None);
    }
    cand.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = cand.len();
    let mut idx = [0, 1, 2, 3, 4];
    loop {
        let branch = idx.map(|i| cand[i]);
        if let Some(c) = route_branch_set(g, branch) {
            return Ok(Some(c));
        }
        // Next 5-combination of 0..m in lexicographic order.
        let Some(p) = (0..5).rev().find(|&p| idx[p] < m - 5 + p) else {
            return Ok(None);
        };
        idx[p] += 1;
        for q in p + 1..5 {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Builds the subdivision formed by a wheel, four extension paths leaving
/// its center, and two links joining the far ends of extension paths whose
/// spokes are opposite on the rim. The center and the four used spokes are
/// the branch vertices; consecutive used spokes are joined along the rim.
pub fn assemble_k5(
    g: &Graph,
    wheel: &Wheel,
    extension: &PathSystem,
    links: &PathSystem,
) -> Result<SubdivisionCertificate> {
    let fail = |m: String| Err(Error::Assembly(m));
    wheel.validate(g).map_err(|m| Error::Assembly(format!("invalid wheel: {m}")))?;
    let w = wheel.center;
    if extension.len() != 4 {
        return fail(format!("{} extension paths instead of four", extension.len()));
    }
    extension
        .validate(g, VertexSet::singleton(w))
        .map_err(|m| Error::Assembly(format!("extension paths: {m}")))?;
    let wheel_verts = wheel.vertices();
    // (rim position of the spoke, extension path)
    let mut ext: Vec<(usize, &Vec<usize>)> = Vec::new();
    for (i, p) in extension.paths.iter().enumerate() {
        if p.len() < 2 || p[0] != w {
            return fail(format!("extension path {i} does not leave the center"));
        }
        if !wheel.spokes.contains(&p[1]) {
            return fail(format!("extension path {i} does not start with a spoke"));
        }
        if let Some(&v) = p[2..].iter().find(|&&v| wheel_verts.contains(v)) {
            return fail(format!("extension path {i} meets the wheel again at {v}"));
        }
        ext.push((wheel.rim.iter().position(|&r| r == p[1]).unwrap(), p));
    }
    ext.sort_by_key(|&(pos, _)| pos);
    let ends: Vec<usize> = ext.iter().map(|(_, p)| *p.last().unwrap()).collect();

    if links.len() != 2 {
        return fail(format!("{} links instead of two", links.len()));
    }
    links.validate(g, VertexSet::EMPTY).map_err(|m| Error::Assembly(format!("links: {m}")))?;
    let mut ext_used = VertexSet::EMPTY;
    for (_, p) in &ext {
        ext_used = ext_used.union(p.iter().collect());
    }
    let mut joined = [None; 2];
    for (li, q) in links.paths.iter().enumerate() {
        let (a, b) = (q[0], *q.last().unwrap());
        let ia = ends.iter().position(|&t| t == a);
        let ib = ends.iter().position(|&t| t == b);
        let (Some(ia), Some(ib)) = (ia, ib) else {
            return fail(format!("link {li} does not join two extension ends"));
        };
        if (ia + 2) % 4 != ib {
            return fail(format!("link {li} joins extension ends {a} and {b}, whose spokes are not opposite"));
        }
        if let Some(&v) = q[1..q.len() - 1].iter().find(|&&v| ext_used.union(wheel_verts).contains(v)) {
            return fail(format!("link {li} meets the wheel or an extension path at {v}"));
        }
        joined[li] = Some((ia.min(ib), q));
    }
    let mut joined = joined.map(Option::unwrap);
    joined.sort_by_key(|&(i, _)| i);
    if joined[0].0 != 0 || joined[1].0 != 1 {
        return fail("both links join the same pair of extension paths".into());
    }

    let spokes: Vec<usize> = ext.iter().map(|(_, p)| p[1]).collect();
    let branch = [w, spokes[0], spokes[1], spokes[2], spokes[3]];
    let mut paths = vec![Vec::new(); 10];
    let k = wheel.rim.len();
    for i in 0..4 {
        paths[pair_index(0, i + 1)] = vec![w, spokes[i]];
        let (from, to) = (ext[i].0, ext[(i + 1) % 4].0);
        let arc: Vec<usize> = (0..=(to + k - from) % k).map(|d| wheel.rim[(from + d) % k]).collect();
        let (a, b) = (i + 1, (i + 1) % 4 + 1);
        paths[pair_index(a, b)] = if a < b { arc } else { arc.into_iter().rev().collect() };
    }
    for (i, q) in joined {
        let j = i + 2;
        let mut p: Vec<usize> = ext[i].1[1..].to_vec();
        if *q.last().unwrap() == p[p.len() - 1] {
            p.extend(q.iter().rev().skip(1));
        } else {
            p.extend(q.iter().skip(1));
        }
        p.extend(ext[j].1[1..ext[j].1.len() - 1].iter().rev());
        paths[pair_index(i + 1, j + 1)] = p;
    }
    let cert = SubdivisionCertificate { branch, paths };
    verify_k5_certificate(g, &cert).map_err(|v| Error::Assembly(format!("assembled certificate fails: {v}")))?;
    Ok(cert)
}
