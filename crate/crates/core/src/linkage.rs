//! The two-disjoint-paths dichotomy: when every component left by deleting
//! at most three vertices contains a terminal, either disjoint paths
//! `s1 -> t1` and `s2 -> t2` exist, or the graph embeds in a disc with
//! `s1, s2, t1, t2` on the boundary in that cyclic order. The two outcomes
//! exclude each other (in the disc an `s1`-`t1` path separates `s2` from
//! `t2`), and each comes with a certificate.

use serde::{Deserialize, Serialize};

use crate::embedding::{is_disc_planar, DiscEmbedding, EmbeddingJson};
use crate::error::{Error, Result};
use crate::graph::{Graph, PathSystem, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageInstance {
    pub host: Graph,
    /// `(s1, s2, t1, t2)`.
    pub terminals: [usize; 4],
}

impl LinkageInstance {
    pub fn new(host: Graph, terminals: [usize; 4]) -> Result<Self> {
        let set: VertexSet = terminals.iter().collect();
        if set.len() != 4 || terminals.iter().any(|&v| v >= host.order()) {
            return Err(Error::Domain(format!("terminals {terminals:?} must be four distinct host vertices")));
        }
        Ok(LinkageInstance { host, terminals })
    }

    pub fn terminal_set(&self) -> VertexSet {
        self.terminals.iter().collect()
    }
}

/// A set of at most three vertices whose deletion leaves a component free
/// of terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub separator: Vec<usize>,
    pub component: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkageResult {
    /// Paths `s1 -> t1` and `s2 -> t2`, in that order.
    Paths(PathSystem),
    /// Disc embedding with boundary `[s1, s2, t1, t2]`.
    Planar(DiscEmbedding),
}

/// `{"kind":"paths","paths":[...]}` or `{"kind":"planar","embedding":{...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LinkageJson {
    Paths { paths: Vec<Vec<usize>> },
    Planar { embedding: EmbeddingJson },
}

impl LinkageResult {
    pub fn to_json(&self) -> LinkageJson {
        match self {
            LinkageResult::Paths(p) => LinkageJson::Paths { paths: p.paths.clone() },
            LinkageResult::Planar(e) => LinkageJson::Planar { embedding: e.to_json() },
        }
    }

    /// Re-checks the certificate against the instance.
    pub fn verify(&self, inst: &LinkageInstance) -> std::result::Result<(), String> {
        let [s1, s2, t1, t2] = inst.terminals;
        match self {
            LinkageResult::Paths(p) => verify_paths(&inst.host, [s1, s2, t1, t2], p),
            LinkageResult::Planar(e) => {
                if e.host() != &inst.host {
                    return Err("embedding host differs from the instance".into());
                }
                if e.boundary() != [s1, s2, t1, t2] {
                    return Err(format!("boundary {:?} is not (s1, s2, t1, t2)", e.boundary()));
                }
                e.validate().map_err(|x| x.to_string())
            }
        }
    }
}

/// Checks that `p` holds disjoint paths `s1 -> t1` and `s2 -> t2`.
pub fn verify_paths(g: &Graph, [s1, s2, t1, t2]: [usize; 4], p: &PathSystem) -> std::result::Result<(), String> {
    if p.len() != 2 {
        return Err(format!("{} paths instead of two", p.len()));
    }
    p.validate(g, VertexSet::EMPTY)?;
    let ends = |q: &Vec<usize>| (q[0], *q.last().unwrap());
    if ends(&p.paths[0]) != (s1, t1) || ends(&p.paths[1]) != (s2, t2) {
        return Err("paths do not join s1 to t1 and s2 to t2".into());
    }
    Ok(())
}

/// Looks for a set `S` with `|S| <= 3` such that some component of `G - S`
/// has no terminal. Sets are tried by size, then in lexicographic order;
/// the first violation found is returned.
pub fn hypothesis_holds(inst: &LinkageInstance) -> std::result::Result<(), Violation> {
    match small_separator(&inst.host, inst.terminal_set(), 3) {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// The first set `S` with `|S| <= max_size` (by size, then lexicographic)
/// such that a component of `G - S` avoids `terminals`.
pub fn small_separator(g: &Graph, terminals: VertexSet, max_size: usize) -> Option<Violation> {
    let mut chosen = Vec::new();
    (0..=max_size.min(g.order())).find_map(|size| violation_of_size(g, terminals, size, 0, &mut chosen))
}

fn violation_of_size(g: &Graph, term: VertexSet, size: usize, from: usize, chosen: &mut Vec<usize>) -> Option<Violation> {
    if chosen.len() == size {
        let s: VertexSet = chosen.iter().collect();
        let rest = g.vertices().difference(s);
        let mut left = rest;
        while let Some(v) = left.first() {
            let comp = g.reach(v, rest);
            if comp.intersection(term).is_empty() {
                return Some(Violation { separator: chosen.clone(), component: comp.to_vec() });
            }
            left = left.difference(comp);
        }
        return None;
    }
    for v in from..g.order() {
        chosen.push(v);
        let r = violation_of_size(g, term, size, v + 1, chosen);
        chosen.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// All simple `a`-`b` paths inside `within`, shortest first, ties broken
/// lexicographically.
fn paths_between(g: &Graph, a: usize, b: usize, within: VertexSet) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, b: usize, within: VertexSet, used: VertexSet, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let c = *p.last().unwrap();
        if c == b {
            out.push(p.clone());
            return;
        }
        for y in g.neighbors(c).intersection(within).difference(used).iter() {
            p.push(y);
            dfs(g, b, within, used.with(y), p, out);
            p.pop();
        }
    }
    let mut out = Vec::new();
    if within.contains(a) && within.contains(b) {
        dfs(g, b, within, VertexSet::singleton(a), &mut vec![a], &mut out);
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// A shortest `a`-`b` path inside `within` (neighbours in increasing order).
fn shortest_path(g: &Graph, a: usize, b: usize, within: VertexSet) -> Option<Vec<usize>> {
    let mut prev = [usize::MAX; 64];
    let mut seen = VertexSet::singleton(a);
    let mut frontier = vec![a];
    while !frontier.is_empty() && !seen.contains(b) {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in g.neighbors(x).intersection(within).difference(seen).iter() {
                seen.insert(y);
                prev[y] = x;
                next.push(y);
            }
        }
        frontier = next;
    }
    if !seen.contains(b) {
        return None;
    }
    let mut p = vec![b];
    while *p.last().unwrap() != a {
        p.push(prev[*p.last().unwrap()]);
    }
    p.reverse();
    Some(p)
}

/// Disjoint paths `s1 -> t1`, `s2 -> t2` if any exist: `s1`-`t1` paths are
/// tried shortest first, each followed by a search for `s2`-`t2` in what is
/// left. Needs no hypothesis.
pub fn find_two_paths(g: &Graph, [s1, s2, t1, t2]: [usize; 4]) -> Option<PathSystem> {
    let all = g.vertices();
    for p in paths_between(g, s1, t1, all.without(s2).without(t2)) {
        let rest = all.difference(p.iter().collect());
        if let Some(q) = shortest_path(g, s2, t2, rest) {
            return Some(PathSystem::new(vec![p, q]));
        }
    }
    None
}

/// Solves an instance that satisfies the hypothesis. Paths are preferred;
/// otherwise the ordered disc embedding is returned. If neither exists the
/// instance refutes the dichotomy and a counterexample error is raised.
pub fn solve_two_linkage(inst: &LinkageInstance) -> Result<LinkageResult> {
    if let Err(v) = hypothesis_holds(inst) {
        return Err(Error::HypothesisViolated { separator: v.separator, component: v.component });
    }
    if let Some(p) = find_two_paths(&inst.host, inst.terminals) {
        return Ok(LinkageResult::Paths(p));
    }
    match is_disc_planar(&inst.host, &inst.terminals, true)? {
        Some(e) => Ok(LinkageResult::Planar(e)),
        None => Err(Error::Counterexample(format!(
            "no disjoint paths and no disc embedding for terminals {:?}",
            inst.terminals
        ))),
    }
}
