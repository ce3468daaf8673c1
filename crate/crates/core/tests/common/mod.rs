//! Brute-force oracles shared by the integration tests. Everything here is
//! written independently of the library's algorithms: plain enumeration over
//! subsets, permutations, paths and rotation systems.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wheelforge::graph::families;
use wheelforge::subdivision::SubdivisionCertificate;
use wheelforge::wheels::Wheel;
use wheelforge::{Graph, PathSystem, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Labeled graph number `code` on `n` vertices, bit `k` of `code` being the
/// k-th pair in `(0,1),(0,2),...,(n-2,n-1)` order.
pub fn labeled_graph(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if (code >> k) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().collect()
}

/// graph6 encoder written from the format description: a bit string of the
/// upper triangle in column order, padded with zeros and cut into 6-bit groups.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push(char::from(63 + n as u8));
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for &b in chunk {
            x = x * 2 + b as u8;
        }
        s.push(char::from(63 + x));
    }
    s
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if !f(&a) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            if !f(&a) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Isomorphism by trying every bijection; `marked` sets must correspond.
pub fn isomorphic_brute(g: &Graph, gm: VertexSet, h: &Graph, hm: VertexSet) -> bool {
    if g.order() != h.order() || g.size() != h.size() || gm.len() != hm.len() {
        return false;
    }
    let n = g.order();
    let ge = g.edges();
    let mut found = false;
    for_each_permutation(n, |p| {
        let ok = (0..n).all(|v| gm.contains(v) == hm.contains(p[v])) && ge.iter().all(|&(u, v)| h.has_edge(p[u], p[v]));
        if ok {
            found = true;
        }
        !found
    });
    found
}

/// Is there a path from `from` to `to` avoiding `blocked` (endpoints must be
/// unblocked)?
pub fn connected_avoiding(g: &Graph, from: VertexSet, to: VertexSet, blocked: VertexSet) -> bool {
    let alive = g.vertices().difference(blocked);
    let mut seen = from.intersection(alive);
    let mut stack: Vec<usize> = seen.to_vec();
    while let Some(x) = stack.pop() {
        if to.contains(x) {
            return true;
        }
        for y in g.neighbors(x).intersection(alive).difference(seen).iter() {
            seen.insert(y);
            stack.push(y);
        }
    }
    false
}

/// Minimum size of a vertex set meeting every `sources`-`sinks` path
/// (members of the cut may be sources or sinks).
pub fn min_set_cut_brute(g: &Graph, sources: VertexSet, sinks: VertexSet) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << n) {
        let x = VertexSet(mask);
        if x.len() < best && !connected_avoiding(g, sources, sinks, x) {
            best = x.len();
        }
    }
    best
}

/// Minimum number of vertices other than `s`, `t` separating two
/// nonadjacent vertices.
pub fn min_pair_cut_brute(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << n) {
        let x = VertexSet(mask);
        if x.contains(s) || x.contains(t) || x.len() >= best {
            continue;
        }
        if !connected_avoiding(g, VertexSet::singleton(s), VertexSet::singleton(t), x) {
            best = x.len();
        }
    }
    best
}

/// k-connectivity straight from the definition: more than `k` vertices and
/// no set of fewer than `k` vertices disconnects.
pub fn k_connected_brute(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k {
        return false;
    }
    for mask in 0u64..(1u64 << n) {
        let x = VertexSet(mask);
        if x.len() >= k {
            continue;
        }
        let rest = g.vertices().difference(x);
        let start = rest.first().unwrap();
        if g.reach(start, rest) != rest {
            return false;
        }
    }
    true
}

/// All simple paths from `s` to `t` in `g - blocked`.
pub fn simple_paths(g: &Graph, s: usize, t: usize, blocked: VertexSet) -> Vec<Vec<usize>> {
    fn go(g: &Graph, t: usize, blocked: VertexSet, path: &mut Vec<usize>, used: VertexSet, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == t {
            out.push(path.clone());
            return;
        }
        for y in g.neighbors(x).difference(used).difference(blocked).iter() {
            path.push(y);
            go(g, t, blocked, path, used.with(y), out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if blocked.contains(s) || blocked.contains(t) {
        return out;
    }
    go(g, t, blocked, &mut vec![s], VertexSet::singleton(s), &mut out);
    out
}

/// Do disjoint `s1`-`t1` and `s2`-`t2` paths exist? Exhaustive over the
/// first path.
pub fn two_linkage_brute(g: &Graph, s1: usize, s2: usize, t1: usize, t2: usize) -> bool {
    let block2 = set(&[s2, t2]);
    simple_paths(g, s1, t1, block2).iter().any(|p| {
        let used: VertexSet = p.iter().collect();
        connected_avoiding(g, VertexSet::singleton(s2), VertexSet::singleton(t2), used)
    })
}

/// Faces of a rotation system as dart cycles, using the successor
/// `(u -> v) => (v -> w)` with `w` following `u` in the rotation at `v`.
pub fn rotation_faces(rot: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = rot.len();
    let mut seen = std::collections::HashSet::new();
    let mut faces = Vec::new();
    for u in 0..n {
        for &v in &rot[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                face.push((a, b));
                let pos = rot[b].iter().position(|&x| x == a).unwrap();
                let c = rot[b][(pos + 1) % rot[b].len()];
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    faces
}

/// Calls `f` with every planar rotation system of the connected graph `h`
/// (at least one edge) up to reflection; each cyclic order is fixed by its
/// first neighbor.
/// Stops when `f` returns false.
///
/// Rotations are fixed vertex by vertex in BFS order. A branch is cut when
/// the faces already closed plus a third of the darts not on closed faces
/// cannot reach the Euler count `e - v + 2` (every face of a connected simple
/// graph with two or more edges has at least three darts).
pub fn for_each_planar_rotation(h: &Graph, mut f: impl FnMut(&[Vec<usize>]) -> bool) {
    let n = h.order();
    let e = h.size();
    assert!(e >= 1 && h.is_connected());
    let target = e + 2 - n;
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| h.neighbors(v).to_vec()).collect();
    if e == 1 {
        f(&nbrs);
        return;
    }
    let start = (0..n).max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut i = 0;
    while i < order.len() {
        for y in h.neighbors(order[i]).difference(seen).iter() {
            seen.insert(y);
            order.push(y);
        }
        i += 1;
    }
    let darts: Vec<(usize, usize)> = (0..n).flat_map(|u| nbrs[u].iter().map(move |&v| (u, v))).collect();
    let perms: Vec<Vec<Vec<usize>>> = (0..=n)
        .map(|d| {
            let mut ps = Vec::new();
            if d >= 1 {
                for_each_permutation(d - 1, |p| {
                    ps.push(p.to_vec());
                    true
                });
            }
            ps
        })
        .collect();

    struct St<'a> {
        n: usize,
        nbrs: &'a [Vec<usize>],
        darts: Vec<(usize, usize)>,
        order: Vec<usize>,
        rot: Vec<Vec<usize>>,
        // succ_nbr[b * n + a] = neighbor after a at b, valid once b is fixed.
        succ_nbr: Vec<usize>,
        fixed: Vec<bool>,
        mark: Vec<u32>,
        stamp: u32,
        target: usize,
    }

    /// Upper bound on the number of faces of any completion. The defined
    /// successors split the darts into closed orbits and open chains; each
    /// final face is a closed orbit or a union of chains with three or more
    /// darts.
    fn face_bound(st: &mut St) -> usize {
        let n = st.n;
        st.stamp += 1;
        let stamp = st.stamp;
        let mut long = 0;
        let mut short = 0;
        for k in 0..st.darts.len() {
            let (u, v) = st.darts[k];
            if st.fixed[u] {
                continue;
            }
            // (u, v) has no defined predecessor: it starts a chain.
            let (mut a, mut b) = (u, v);
            let mut len = 1;
            st.mark[a * n + b] = stamp;
            while st.fixed[b] {
                let c = st.succ_nbr[b * n + a];
                a = b;
                b = c;
                st.mark[a * n + b] = stamp;
                len += 1;
            }
            if len >= 3 {
                long += 1;
            } else {
                short += len;
            }
        }
        let mut closed = 0;
        for k in 0..st.darts.len() {
            let (u, v) = st.darts[k];
            if st.mark[u * n + v] == stamp {
                continue;
            }
            closed += 1;
            let (mut a, mut b) = (u, v);
            while st.mark[a * n + b] != stamp {
                st.mark[a * n + b] = stamp;
                let c = st.succ_nbr[b * n + a];
                a = b;
                b = c;
            }
        }
        closed + long + short / 3
    }

    fn rec(st: &mut St, perms: &[Vec<Vec<usize>>], i: usize, f: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        if face_bound(st) < st.target {
            return true;
        }
        if i == st.order.len() {
            return f(&st.rot);
        }
        let n = st.n;
        let v = st.order[i];
        let d = st.nbrs[v].len();
        st.fixed[v] = true;
        let mut cont = true;
        // Mirror images have the same faces reversed; fix the orientation at
        // the first vertex of degree three or more.
        let first_branch = st.order[..i].iter().all(|&x| st.nbrs[x].len() < 3);
        for p in &perms[d] {
            if first_branch && d >= 3 && p[0] > p[d - 2] {
                continue;
            }
            let mut r = Vec::with_capacity(d);
            r.push(st.nbrs[v][0]);
            r.extend(p.iter().map(|&j| st.nbrs[v][1 + j]));
            for k in 0..d {
                st.succ_nbr[v * n + r[k]] = r[(k + 1) % d];
            }
            st.rot[v] = r;
            if !rec(st, perms, i + 1, f) {
                cont = false;
                break;
            }
        }
        st.fixed[v] = false;
        cont
    }

    let mut st = St {
        n,
        nbrs: &nbrs,
        darts,
        order,
        rot: nbrs.clone(),
        succ_nbr: vec![0; n * n],
        fixed: vec![false; n],
        mark: vec![0; n * n],
        stamp: 0,
        target,
    };
    rec(&mut st, &perms, 0, &mut f);
}

/// For each planar rotation system of the connected graph `h`, the vertex
/// sets of its faces; duplicates removed.
pub fn planar_face_masks(h: &Graph) -> Vec<u64> {
    let mut masks = std::collections::BTreeSet::new();
    if h.size() == 0 {
        masks.insert(h.vertices().0);
    } else {
        for_each_planar_rotation(h, |rot| {
            for f in rotation_faces(rot) {
                masks.insert(f.iter().fold(0u64, |m, &(a, _)| m | (1 << a)));
            }
            true
        });
    }
    // Keep only maximal sets; a boundary fits some face iff it fits a maximal one.
    let all: Vec<u64> = masks.into_iter().collect();
    all.iter().copied().filter(|&m| !all.iter().any(|&o| o != m && o & m == m)).collect()
}

/// Planarity by brute force over rotation systems of each component.
pub fn planar_brute(g: &Graph) -> bool {
    g.components().into_iter().all(|c| {
        let (h, _) = g.induced(c);
        if h.size() == 0 {
            return true;
        }
        let mut ok = false;
        for_each_planar_rotation(&h, |rot| {
            debug_assert_eq!(rotation_faces(rot).len() + h.order(), h.size() + 2);
            ok = true;
            false
        });
        ok
    })
}

/// Disc-planarity by brute force: every component has a planar rotation
/// system with a face containing the boundary vertices of that component
/// (isolated vertices trivially qualify).
pub fn disc_planar_brute(g: &Graph, boundary: VertexSet) -> bool {
    g.components().into_iter().all(|c| {
        let (h, map) = g.induced(c);
        let local: VertexSet = map.iter().enumerate().filter(|(_, &v)| boundary.contains(v)).map(|(i, _)| i).collect();
        if h.size() == 0 {
            return true;
        }
        let mut ok = false;
        for_each_planar_rotation(&h, |rot| {
            ok = rotation_faces(rot).iter().any(|f| {
                let on: VertexSet = f.iter().map(|&(a, _)| a).collect();
                local.is_subset(on)
            });
            !ok
        });
        ok
    })
}

/// Smallest number of colors for a proper coloring, by trying k = 0, 1, ...
pub fn chromatic_number_brute(g: &Graph) -> usize {
    let n = g.order();
    for k in 0..=n {
        let mut col = vec![usize::MAX; n];
        if color_rec(g, 0, k, &mut col) {
            return k;
        }
    }
    n
}

fn color_rec(g: &Graph, v: usize, k: usize, col: &mut Vec<usize>) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 0..k {
        if g.neighbors(v).iter().all(|u| u >= v || col[u] != c) {
            col[v] = c;
            if color_rec(g, v + 1, k, col) {
                return true;
            }
        }
    }
    false
}

/// Is there a system of four paths from `center` that meet only at the
/// center, each leaving through a spoke neighbour and meeting the wheel in no
/// other vertex, ending in `t` and with every vertex of `s` an end?
/// Enumerates every such path per spoke, then every choice of four.
pub fn extendable_brute(g: &Graph, wheel: VertexSet, spokes: VertexSet, t: VertexSet, s: VertexSet) -> bool {
    // Paths are stored without the center.
    let mut per_spoke: Vec<Vec<(VertexSet, usize)>> = Vec::new();
    for u in spokes.iter() {
        let blocked = wheel.without(u);
        let mut options = Vec::new();
        for x in t.iter() {
            for p in simple_paths(g, u, x, blocked) {
                options.push((p.iter().collect::<VertexSet>(), x));
            }
        }
        per_spoke.push(options);
    }
    fn pick(per: &[Vec<(VertexSet, usize)>], i: usize, left: usize, used: VertexSet, ends: VertexSet, s: VertexSet) -> bool {
        if left == 0 {
            return s.is_subset(ends);
        }
        if per.len() - i < left {
            return false;
        }
        if pick(per, i + 1, left, used, ends, s) {
            return true;
        }
        per[i].iter().any(|&(vs, x)| vs.intersection(used).is_empty() && pick(per, i + 1, left - 1, used.union(vs), ends.with(x), s))
    }
    pick(&per_spoke, 0, 4, VertexSet::EMPTY, VertexSet::EMPTY, s)
}

/// Does `g` contain a subdivision of K5? Every 5-set of branch vertices, then
/// the ten pairs routed one after another through every simple path that
/// avoids the other branch vertices and the interiors already used.
pub fn k5_brute(g: &Graph) -> bool {
    let n = g.order();
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    fn route(g: &Graph, b: &[usize], pairs: &[(usize, usize)], k: usize, used: VertexSet) -> bool {
        if k == pairs.len() {
            return true;
        }
        let (i, j) = pairs[k];
        let branch: VertexSet = b.iter().collect();
        let blocked = used.union(branch).without(b[i]).without(b[j]);
        simple_paths(g, b[i], b[j], blocked).into_iter().any(|p| {
            let inner: VertexSet = p[1..p.len() - 1].iter().collect();
            route(g, b, pairs, k + 1, used.union(inner))
        })
    }
    (0u64..1 << n).filter(|m| m.count_ones() == 5).any(|m| {
        let b = VertexSet(m).to_vec();
        b.iter().all(|&v| g.degree(v) >= 4) && route(g, &b, &pairs, 0, VertexSet::EMPTY)
    })
}

/// Unordered pairs of vertex sets `{A, B}` with `A ∪ B = V`, `|A ∩ B| = k`,
/// both differences nonempty and no edge between them, by assigning every
/// vertex to A only, B only or both. Each pair appears once, as `(A, B)`
/// with `A` holding the smallest vertex of the differences.
pub fn separations_brute(g: &Graph, k: usize) -> Vec<(VertexSet, VertexSet)> {
    let n = g.order();
    let mut out = Vec::new();
    let mut code = vec![0u8; n];
    loop {
        let (mut a, mut b) = (VertexSet::EMPTY, VertexSet::EMPTY);
        for (v, &c) in code.iter().enumerate() {
            if c != 1 {
                a.insert(v);
            }
            if c != 0 {
                b.insert(v);
            }
        }
        let (ao, bo) = (a.difference(b), b.difference(a));
        if a.intersection(b).len() == k
            && !ao.is_empty()
            && !bo.is_empty()
            && ao.first() < bo.first()
            && ao.iter().all(|v| g.neighbors(v).intersection(bo).is_empty())
        {
            out.push((a, b));
        }
        match code.iter().position(|&c| c < 2) {
            Some(i) => {
                code[i] += 1;
                code[..i].iter_mut().for_each(|c| *c = 0);
            }
            None => break,
        }
    }
    out
}

/// The K5-subdivision definition checked directly: five distinct branch
/// vertices, and for each pair `(i, j)` in `(0,1),(0,2),...,(3,4)` order a
/// path of host edges from `branch[i]` to `branch[j]` without repeated
/// vertices, whose interior avoids the branch vertices and every other
/// path's interior.
pub fn k5_certificate_ok(g: &Graph, branch: &[usize; 5], paths: &[Vec<usize>]) -> bool {
    let n = g.order();
    let bset: VertexSet = branch.iter().filter(|&&v| v < n).collect();
    if bset.len() != 5 || paths.len() != 10 {
        return false;
    }
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let mut interiors = VertexSet::EMPTY;
    for (p, &(i, j)) in paths.iter().zip(&pairs) {
        if p.len() < 2 || p[0] != branch[i] || p[p.len() - 1] != branch[j] || p.iter().any(|&v| v >= n) {
            return false;
        }
        if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return false;
        }
        let all: VertexSet = p.iter().collect();
        if all.len() != p.len() {
            return false;
        }
        let inner: VertexSet = p[1..p.len() - 1].iter().collect();
        if !inner.intersection(bset).is_empty() || !inner.intersection(interiors).is_empty() {
            return false;
        }
        interiors = interiors.union(inner);
    }
    true
}

/// One injected violation; every kind breaks the definition.
pub fn mutate_certificate(c: &SubdivisionCertificate, n: usize, r: &mut ChaCha8Rng) -> SubdivisionCertificate {
    let mut m = c.clone();
    let k = r.gen_range(0..10);
    match r.gen_range(0..8) {
        0 => {
            m.paths.remove(k);
        }
        1 => {
            let i = r.gen_range(1..5);
            m.branch[i] = m.branch[r.gen_range(0..i)];
        }
        2 => m.paths[k].reverse(),
        3 => {
            m.paths[k].pop();
        }
        4 => {
            let p = &mut m.paths[k];
            let x = p[1];
            p.insert(1, x);
        }
        5 => {
            // A branch vertex not at either end of the path.
            let (i, j) = wheelforge::subdivision::PAIRS[k];
            let other = (0..5).find(|&b| b != i && b != j).unwrap();
            let at = r.gen_range(1..m.paths[k].len());
            m.paths[k].insert(at, c.branch[other]);
        }
        6 => {
            let at = r.gen_range(0..m.paths[k].len());
            m.paths[k][at] = n + r.gen_range(0..3);
        }
        _ => {
            // Splice another path's interior in, or a non-edge hop.
            let j = (k + 1 + r.gen_range(0..9)) % 10;
            let inner: Vec<usize> = m.paths[j][1..m.paths[j].len() - 1].to_vec();
            let p = &mut m.paths[k];
            if inner.is_empty() {
                let (a, b) = (p[0], p[p.len() - 1]);
                *p = vec![a, a, b];
            } else {
                p.splice(1..1, inner);
            }
        }
    }
    m
}

/// W_k at 0 with rim 1..=k, an extension path from each of `used` spokes
/// (with `ext_len[i]` extra vertices), and two links between opposite ends
/// (with `link_len[j]` extra vertices).
pub fn assembly_fixture(k: usize, used: [usize; 4], ext_len: [usize; 4], link_len: [usize; 2]) -> (Graph, Wheel, PathSystem, PathSystem) {
    let mut edges = families::wheel(k).edges();
    let mut next = k + 1;
    let mut ext = Vec::new();
    for (i, &s) in used.iter().enumerate() {
        let mut p = vec![0, s];
        for _ in 0..=ext_len[i] {
            edges.push((*p.last().unwrap(), next));
            p.push(next);
            next += 1;
        }
        ext.push(p);
    }
    let mut links = Vec::new();
    for (j, &(a, b)) in [(0, 2), (1, 3)].iter().enumerate() {
        let mut q = vec![*ext[a].last().unwrap()];
        for _ in 0..link_len[j] {
            edges.push((*q.last().unwrap(), next));
            q.push(next);
            next += 1;
        }
        let end = *ext[b].last().unwrap();
        edges.push((*q.last().unwrap(), end));
        q.push(end);
        links.push(q);
    }
    let g = Graph::from_edges(next, &edges).unwrap();
    let wheel = Wheel { center: 0, rim: (1..=k).collect(), spokes: (1..=k).collect() };
    (g, wheel, PathSystem::new(ext), PathSystem::new(links))
}
