//! Planarity by path addition (Demoucron, Malgrange and Pertuiset) on each
//! biconnected block, with block rotations spliced at cut vertices.

use super::{Dart, DiscEmbedding};
use crate::graph::{Graph, VertexSet};

/// Result of a planarity test.
#[derive(Debug, Clone)]
pub enum Planarity {
    Planar(DiscEmbedding),
    NonPlanar { note: String },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<DiscEmbedding> {
        match self {
            Planarity::Planar(e) => Some(e),
            Planarity::NonPlanar { .. } => None,
        }
    }
}

/// Tests planarity; a planar verdict carries a validated embedding whose
/// outer orbit in each component is the one through `v -> rot[v][0]` for
/// the smallest non-isolated vertex `v` of that component.
pub fn is_planar(g: &Graph) -> Planarity {
    match planar_rotation(g) {
        Ok(rot) => {
            let outer = default_outer(g, &rot);
            let e = DiscEmbedding::new(g.clone(), rot, outer, Vec::new())
                .expect("path addition produced an inconsistent rotation system");
            Planarity::Planar(e)
        }
        Err(note) => Planarity::NonPlanar { note },
    }
}

pub(crate) fn default_outer(g: &Graph, rot: &[Vec<usize>]) -> Vec<Dart> {
    g.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let v = c.first().unwrap();
            (v, rot[v][0])
        })
        .collect()
}

/// A planar rotation system of `g`, or a note on why none exists.
pub fn planar_rotation(g: &Graph) -> Result<Vec<Vec<usize>>, String> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return Err(format!("{} edges exceed 3n - 6 = {}", g.size(), 3 * n - 6));
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        let (h, map) = g.induced(block);
        let local = if h.order() == 2 {
            vec![vec![1], vec![0]]
        } else {
            embed_biconnected(&h).ok_or_else(|| format!("block {:?} is not planar", block.to_vec()))?
        };
        for (i, r) in local.into_iter().enumerate() {
            rot[map[i]].extend(r.into_iter().map(|x| map[x]));
        }
    }
    Ok(rot)
}

/// Vertex sets of the biconnected blocks (bridges included as 2-sets).
pub(crate) fn blocks(g: &Graph) -> Vec<VertexSet> {
    struct St<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<VertexSet>,
    }
    fn dfs(st: &mut St, u: usize, parent: usize) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for v in st.g.neighbors(u).iter() {
            if st.disc[v] == 0 {
                st.stack.push((u, v));
                dfs(st, v, u);
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut b = VertexSet::EMPTY;
                    while let Some((a, c)) = st.stack.pop() {
                        b.insert(a);
                        b.insert(c);
                        if (a, c) == (u, v) {
                            break;
                        }
                    }
                    st.out.push(b);
                }
            } else if v != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }
    let n = g.order();
    let mut st = St { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if st.disc[v] == 0 && g.degree(v) > 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.out
}

enum Fragment {
    Chord(usize, usize),
    Piece { inner: VertexSet, attach: VertexSet },
}

/// Path-addition embedding of a biconnected graph with at least 3 vertices.
fn embed_biconnected(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let m = h.order();
    let total = h.size();
    if total > 3 * m - 6 {
        return None;
    }
    let cycle = find_cycle(h);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut emb: VertexSet = cycle.iter().collect();
    let mut emb_adj = vec![0u64; m];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_adj[a] |= 1 << b;
        emb_adj[b] |= 1 << a;
    }
    let mut placed = cycle.len();

    while placed < total {
        let mut frags = Vec::new();
        for u in emb.iter() {
            for v in VertexSet(h.rows()[u] & !emb_adj[u] & emb.0).iter() {
                if u < v {
                    frags.push(Fragment::Chord(u, v));
                }
            }
        }
        for inner in h.components_within(h.vertices().difference(emb)) {
            let mut attach = VertexSet::EMPTY;
            for x in inner.iter() {
                attach = attach.union(h.neighbors(x).intersection(emb));
            }
            frags.push(Fragment::Piece { inner, attach });
        }
        let face_sets: Vec<VertexSet> = faces.iter().map(|f| f.iter().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (i, fr) in frags.iter().enumerate() {
            let attach = match fr {
                Fragment::Chord(u, v) => VertexSet::singleton(*u).with(*v),
                Fragment::Piece { attach, .. } => *attach,
            };
            let ok: Vec<usize> = (0..faces.len()).filter(|&f| attach.is_subset(face_sets[f])).collect();
            match ok.len() {
                0 => return None,
                1 => {
                    choice = Some((i, ok[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, ok[0]));
                    }
                }
            }
        }
        let (fi, face) = choice?;
        let path = match &frags[fi] {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Piece { inner, attach } => piece_path(h, *inner, *attach),
        };
        split_face(&mut faces, face, &path);
        for w in path.windows(2) {
            emb_adj[w[0]] |= 1 << w[1];
            emb_adj[w[1]] |= 1 << w[0];
        }
        for &x in &path {
            emb.insert(x);
        }
        placed += path.len() - 1;
    }
    Some(rotation_from_faces(h, &faces))
}

fn find_cycle(h: &Graph) -> Vec<usize> {
    let m = h.order();
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![usize::MAX; m];
    let mut stack = vec![0usize];
    depth[0] = 0;
    let mut order = Vec::new();
    while let Some(u) = stack.pop() {
        order.push(u);
        for v in h.neighbors(u).iter() {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    // Any non-tree edge closes a cycle with the two tree paths to their
    // common ancestor.
    for u in 0..m {
        for v in h.neighbors(u).iter() {
            if u < v && parent[u] != v && parent[v] != u {
                let (mut a, mut b) = (u, v);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return left;
            }
        }
    }
    unreachable!("biconnected graph on 3+ vertices has a cycle")
}

/// A path `a, x, ..., y, b` through the piece joining two distinct attachments.
fn piece_path(h: &Graph, inner: VertexSet, attach: VertexSet) -> Vec<usize> {
    let a = attach.first().unwrap();
    let x = h.neighbors(a).intersection(inner).first().unwrap();
    let m = h.order();
    let mut prev = vec![usize::MAX; m];
    let mut seen = VertexSet::singleton(x);
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        if let Some(b) = h.neighbors(y).intersection(attach).without(a).first() {
            let mut path = vec![b, y];
            let mut z = y;
            while z != x {
                z = prev[z];
                path.push(z);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for z in h.neighbors(y).intersection(inner).difference(seen).iter() {
            seen.insert(z);
            prev[z] = y;
            queue.push_back(z);
        }
    }
    unreachable!("a piece of a biconnected graph has two attachments")
}

/// Splits `faces[f]` along `path` (whose ends lie on the face).
fn split_face(faces: &mut Vec<Vec<usize>>, f: usize, path: &[usize]) {
    let face = faces.swap_remove(f);
    let a = path[0];
    let b = *path.last().unwrap();
    let k = face.len();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let inner = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % k;
    }
    f1.extend(inner.iter().rev());
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % k;
    }
    f2.extend(inner.iter());
    faces.push(f1);
    faces.push(f2);
}

fn rotation_from_faces(h: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let m = h.order();
    let mut next = vec![usize::MAX; m * m];
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            next[v * m + u] = w;
        }
    }
    (0..m)
        .map(|v| {
            let first = h.neighbors(v).first().unwrap();
            let mut r = vec![first];
            let mut x = next[v * m + first];
            while x != first && r.len() <= h.degree(v) {
                r.push(x);
                x = next[v * m + x];
            }
            r
        })
        .collect()
}
