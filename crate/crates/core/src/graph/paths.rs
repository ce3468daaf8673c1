//! Vertex-disjoint paths by unit-capacity flow on the split graph.
//!
//! Vertex `v` becomes `in(v) = 2v -> out(v) = 2v + 1` with capacity one; each
//! edge `uv` becomes the arcs `out(u) -> in(v)` and `out(v) -> in(u)`.
//! A singleton source or sink set is treated as a shared endpoint: its vertex
//! gets unbounded capacity, so the paths are internally disjoint (Menger's
//! local version). An edge joining a shared source to a shared sink carries
//! at most one path.

use std::collections::VecDeque;

use super::{Graph, PathSystem, VertexSet};
use crate::error::{Error, Result};

const INF: i32 = 1 << 20;

/// A set of vertices (plus, in the shared-endpoint case, possibly the direct
/// source-sink edge) meeting every source-sink path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexCut {
    pub vertices: VertexSet,
    pub direct_edges: Vec<(usize, usize)>,
}

impl VertexCut {
    pub fn size(&self) -> usize {
        self.vertices.len() + self.direct_edges.len()
    }
}

/// Outcome of [`disjoint_paths`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Routing {
    /// `k` paths; every mandatory sink ends one of them.
    Paths(PathSystem),
    /// Fewer than `k` paths exist; the cut has size below `k`.
    Cut(VertexCut),
    /// Mandatory sinks could not all be covered. `cut` is the minimum cut of
    /// the phase that failed, `routed` the best partial system.
    NoRouting { cut: VertexCut, routed: PathSystem },
}

struct Net {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    base: Vec<i32>,
}

impl Net {
    fn new(nodes: usize) -> Self {
        Net { adj: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new(), base: Vec::new() }
    }

    fn arc(&mut self, a: usize, b: usize, c: i32) -> usize {
        let id = self.to.len();
        self.adj[a].push(id);
        self.to.push(b);
        self.cap.push(c);
        self.base.push(c);
        self.adj[b].push(id + 1);
        self.to.push(a);
        self.cap.push(0);
        self.base.push(0);
        id
    }

    fn flow(&self, arc: usize) -> i32 {
        self.base[arc] - self.cap[arc]
    }

    /// One BFS augmentation by a unit; returns whether it succeeded.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = a;
                    if y == t {
                        let mut v = t;
                        while v != s {
                            let a = pred[v];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            v = self.to[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

struct Router {
    net: Net,
    n: usize,
    source: usize,
    sink: usize,
    shared_source: Option<usize>,
    shared_sink: Option<usize>,
    direct_arc: Option<usize>,
    /// A shared endpoint that is also on the other side, with the unit arc
    /// carrying its trivial path.
    trivial: Option<(usize, usize)>,
    value: usize,
}

impl Router {
    fn new(g: &Graph, sources: VertexSet, sinks: VertexSet) -> Self {
        let n = g.order();
        let shared_source = (sources.len() == 1).then(|| sources.first().unwrap());
        let shared_sink = (sinks.len() == 1).then(|| sinks.first().unwrap());
        let (source, sink) = (2 * n, 2 * n + 1);
        let mut net = Net::new(2 * n + 2);
        for v in 0..n {
            let c = if Some(v) == shared_source || Some(v) == shared_sink { INF } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        let mut direct_arc = None;
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                let direct = Some(a) == shared_source && Some(b) == shared_sink;
                let id = net.arc(2 * a + 1, 2 * b, if direct { 1 } else { INF });
                if direct {
                    direct_arc = Some(id);
                }
            }
        }
        let mut trivial = None;
        for v in sources.iter() {
            // A shared sink that is also a source yields one trivial path.
            if Some(v) == shared_sink {
                trivial = Some((v, net.arc(source, 2 * v, 1)));
            } else {
                net.arc(source, 2 * v, INF);
            }
        }
        Router { net, n, source, sink, shared_source, shared_sink, direct_arc, trivial, value: 0 }
    }

    fn open_sinks(&mut self, sinks: VertexSet) {
        for v in sinks.iter() {
            if Some(v) == self.shared_source {
                let a = self.net.arc(2 * v + 1, self.sink, 1);
                self.trivial = self.trivial.or(Some((v, a)));
            } else {
                self.net.arc(2 * v + 1, self.sink, INF);
            }
        }
    }

    fn run(&mut self, limit: usize) {
        while self.value < limit && self.net.augment(self.source, self.sink) {
            self.value += 1;
        }
    }

    fn cut(&self) -> VertexCut {
        let seen = self.net.reachable(self.source);
        let mut vertices: VertexSet = (0..self.n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect();
        // Only the shared vertex itself meets its trivial path.
        if let Some((v, a)) = self.trivial {
            if self.net.cap[a] == 0 {
                vertices.insert(v);
            }
        }
        let mut direct_edges = Vec::new();
        if let (Some(a), Some(s), Some(t)) = (self.direct_arc, self.shared_source, self.shared_sink) {
            if seen[2 * s + 1] && !seen[2 * t] && self.net.cap[a] == 0 {
                direct_edges.push((s.min(t), s.max(t)));
            }
        }
        VertexCut { vertices, direct_edges }
    }

    fn paths(&self) -> PathSystem {
        let mut flow: Vec<i32> = (0..self.net.to.len())
            .map(|a| if a % 2 == 0 { self.net.flow(a).max(0) } else { 0 })
            .collect();
        let mut out = Vec::new();
        for _ in 0..self.value {
            let mut walk = vec![self.source];
            while *walk.last().unwrap() != self.sink {
                let x = *walk.last().unwrap();
                let a = *self.net.adj[x]
                    .iter()
                    .find(|&&a| flow[a] > 0)
                    .expect("flow conservation");
                flow[a] -= 1;
                let y = self.net.to[a];
                if let Some(pos) = walk.iter().position(|&z| z == y) {
                    walk.truncate(pos + 1);
                } else {
                    walk.push(y);
                }
            }
            let path: Vec<usize> = walk
                .iter()
                .filter(|&&x| x < 2 * self.n && x % 2 == 0)
                .map(|&x| x / 2)
                .collect();
            out.push(path);
        }
        out.sort();
        PathSystem::new(out)
    }

    fn shared(&self) -> VertexSet {
        self.shared_source.into_iter().chain(self.shared_sink).collect()
    }
}

/// Finds `k` vertex-disjoint paths from `sources` to `sinks` such that every
/// vertex of `mandatory_sinks` ends some path, or reports why not.
///
/// A vertex in both sets is a one-vertex path. Singleton endpoint sets are
/// shared (see the module notes), so `k` may exceed their size.
pub fn disjoint_paths(
    g: &Graph,
    sources: VertexSet,
    sinks: VertexSet,
    k: usize,
    mandatory_sinks: VertexSet,
) -> Result<Routing> {
    let all = g.vertices();
    if !sources.is_subset(all) || !sinks.is_subset(all) {
        return Err(Error::Domain("endpoint sets must lie in the host".into()));
    }
    if k == 0 {
        return Err(Error::Infeasible("k must be at least 1".into()));
    }
    if sources.is_empty() || sinks.is_empty() {
        return Err(Error::Infeasible("empty source or sink set".into()));
    }
    if sources.len() > 1 && k > sources.len() {
        return Err(Error::Infeasible(format!("k = {k} exceeds {} sources", sources.len())));
    }
    if sinks.len() > 1 && k > sinks.len() {
        return Err(Error::Infeasible(format!("k = {k} exceeds {} sinks", sinks.len())));
    }
    if sources.len() == 1 && sources == sinks && k > 1 {
        return Err(Error::Infeasible("a single shared endpoint carries one path".into()));
    }
    if !mandatory_sinks.is_subset(sinks) {
        return Err(Error::Domain("mandatory sinks must be sinks".into()));
    }
    if mandatory_sinks.len() > k {
        return Err(Error::Infeasible(format!(
            "{} mandatory sinks cannot end {k} paths",
            mandatory_sinks.len()
        )));
    }

    let mut r = Router::new(g, sources, sinks);
    if !mandatory_sinks.is_empty() {
        r.open_sinks(mandatory_sinks);
        r.run(mandatory_sinks.len());
        if r.value < mandatory_sinks.len() {
            return Ok(Routing::NoRouting { cut: r.cut(), routed: r.paths() });
        }
        r.open_sinks(sinks.difference(mandatory_sinks));
    } else {
        r.open_sinks(sinks);
    }
    r.run(k);
    let routing = if r.value >= k {
        let ps = r.paths();
        debug_assert_eq!(ps.validate(g, r.shared()), Ok(()));
        Routing::Paths(ps)
    } else if mandatory_sinks.is_empty() {
        Routing::Cut(r.cut())
    } else {
        Routing::NoRouting { cut: r.cut(), routed: r.paths() }
    };
    Ok(routing)
}

/// A maximum family of disjoint `sources`-`sinks` paths, with the matching
/// minimum cut.
pub fn max_disjoint_paths(g: &Graph, sources: VertexSet, sinks: VertexSet) -> (PathSystem, VertexCut) {
    let mut r = Router::new(g, sources, sinks);
    r.open_sinks(sinks);
    r.run(usize::MAX);
    (r.paths(), r.cut())
}

/// Number of internally disjoint `s`-`t` paths, capped at `cap`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let mut r = Router::new(g, VertexSet::singleton(s), VertexSet::singleton(t));
    r.open_sinks(VertexSet::singleton(t));
    r.run(cap);
    r.value
}

/// True iff `g` has more than `k` vertices and no set of fewer than `k`
/// vertices disconnects it.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree() < k || !g.is_connected() {
        return false;
    }
    for u in 0..n {
        let far = g.vertices().difference(g.neighbors(u)).without(u);
        for v in far.iter().filter(|&v| v > u) {
            if local_connectivity(g, u, v, k) < k {
                return false;
            }
        }
    }
    true
}
