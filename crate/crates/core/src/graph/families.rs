//! Named graphs used as fixtures and examples.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.link(u, v);
        }
    }
    g
}

/// Cycle `0-1-...-(n-1)-0`; for `n < 3` this is a path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.link(0, n - 1);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.link(v - 1, v);
    }
    g
}

/// Wheel with center 0 and rim `1..=rim` in cyclic order.
pub fn wheel(rim: usize) -> Graph {
    let mut g = Graph::empty(rim + 1);
    for i in 0..rim {
        g.link(0, 1 + i);
        g.link(1 + i, 1 + (i + 1) % rim);
    }
    g
}

/// `rows × cols` grid; vertex `(r, c)` has id `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut g = Graph::empty(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                g.link(v, v + 1);
            }
            if r + 1 < rows {
                g.link(v, v + cols);
            }
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.link(u, v);
        }
    }
    g
}

/// `K_{2,2,2}`; the non-edges are `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> Graph {
    let mut g = complete(6);
    g.unlink(0, 1);
    g.unlink(2, 3);
    g.unlink(4, 5);
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.link(i, (i + 1) % 5);
        g.link(i, i + 5);
        g.link(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Icosahedron: two poles 0 and 11, upper pentagon `1..=5`, lower `6..=10`.
pub fn icosahedron() -> Graph {
    let mut g = Graph::empty(12);
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let lo = 6 + i;
        let lo_next = 6 + (i + 1) % 5;
        g.link(0, up);
        g.link(11, lo);
        g.link(up, up_next);
        g.link(lo, lo_next);
        g.link(up, lo);
        g.link(up_next, lo);
    }
    g
}

/// Every edge of `g` replaced by a path of length two. Original vertices
/// keep their ids; the midpoint of the i-th edge (in `edges()` order) is
/// `order + i`.
pub fn subdivide(g: &Graph) -> Graph {
    let edges = g.edges();
    let n = g.order();
    let mut h = Graph::empty(n + edges.len());
    for (i, (u, v)) in edges.into_iter().enumerate() {
        h.link(u, n + i);
        h.link(n + i, v);
    }
    h
}
