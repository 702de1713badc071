//! Simple undirected graphs stored as symmetric bit rows, plus the graph
//! algebra the construction catalogue is built from.

use crate::error::{Error, Result};

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n.saturating_sub(1) * n / 2
}

/// Index of the pair `{u, v}` (`u < v`) in the fixed column-major upper
/// triangle order `(0,1), (0,2), (1,2), (0,3), ...`.
///
/// This single order drives realization bitmasks, flip loops, search
/// branching, and the graph6 body, so certificates are reproducible.
pub fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// All pairs of `[n]` in ascending `pair_index` order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

/// An immutable simple undirected graph.
///
/// Adjacency is a symmetric irreflexive relation stored one bit row per
/// vertex, `words_per_row` machine words each, so neighborhood queries and
/// intersections cost a handful of word ops. All mutators return new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an explicit edge list. Duplicate edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    /// The bit row of `v`: bit `u` set iff `uv` is an edge.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        if on {
            self.bits[u * w + v / 64] |= 1 << (v % 64);
            self.bits[v * w + u / 64] |= 1 << (u % 64);
        } else {
            self.bits[u * w + v / 64] &= !(1 << (v % 64));
            self.bits[v * w + u / 64] &= !(1 << (u % 64));
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edge count; always half the degree sum.
    pub fn edge_count(&self) -> usize {
        let total: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs(self.n).filter(|&(u, v)| self.has_edge(u, v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    /// New graph with the adjacency of `{u, v}` toggled.
    pub fn flip_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        let on = !g.has_edge(u, v);
        g.set_edge(u, v, on);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in pairs(self.n) {
            if !self.has_edge(u, v) {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// Subgraph induced by `verts`, renumbered in the order given.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if self.has_edge(verts[i], verts[j]) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Induced subgraph on the complement of `drop`, remaining vertices
    /// renumbered in increasing order.
    pub fn remove_vertices(&self, drop: &[usize]) -> Result<Graph> {
        let mut dropped = vec![false; self.n];
        for &v in drop {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
            dropped[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !dropped[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Block-diagonal union, vertex offsets in list order.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(|g| g.order()).sum();
    let mut out = Graph::empty(n);
    let mut offset = 0;
    for g in parts {
        for (u, v) in pairs(g.order()) {
            if g.has_edge(u, v) {
                out.set_edge(offset + u, offset + v, true);
            }
        }
        offset += g.order();
    }
    out
}

/// Disjoint union plus all edges between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut out = disjoint_union(&[a.clone(), b.clone()]);
    for u in 0..a.order() {
        for v in 0..b.order() {
            out.set_edge(u, a.order() + v, true);
        }
    }
    out
}

/// Cartesian product; vertex `(a, b)` gets index `a * n(b_graph) + b`.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Graph {
    let (na, nb) = (a.order(), b.order());
    let mut out = Graph::empty(na * nb);
    for i in 0..na {
        for j in 0..nb {
            let v = i * nb + j;
            // same first coordinate, adjacent second
            for j2 in j + 1..nb {
                if b.has_edge(j, j2) {
                    out.set_edge(v, i * nb + j2, true);
                }
            }
            // same second coordinate, adjacent first
            for i2 in i + 1..na {
                if a.has_edge(i, i2) {
                    out.set_edge(v, i2 * nb + j, true);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlowupMode {
    /// Each vertex becomes an independent set.
    Independent,
    /// Each vertex becomes a clique.
    Clique,
}

/// Replaces vertex `i` by a part of `sizes[i]` vertices; parts are internally
/// empty or complete per `mode`, and two parts are completely joined iff the
/// original vertices were adjacent.
pub fn blowup(g: &Graph, sizes: &[usize], mode: BlowupMode) -> Result<Graph> {
    if sizes.len() != g.order() {
        return Err(Error::SizeListMismatch {
            expected: g.order(),
            got: sizes.len(),
        });
    }
    if sizes.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let mut offsets = Vec::with_capacity(sizes.len() + 1);
    let mut total = 0;
    for &s in sizes {
        offsets.push(total);
        total += s;
    }
    offsets.push(total);
    let mut out = Graph::empty(total);
    for i in 0..g.order() {
        if mode == BlowupMode::Clique {
            for x in offsets[i]..offsets[i + 1] {
                for y in x + 1..offsets[i + 1] {
                    out.set_edge(x, y, true);
                }
            }
        }
        for j in i + 1..g.order() {
            if g.has_edge(i, j) {
                for x in offsets[i]..offsets[i + 1] {
                    for y in offsets[j]..offsets[j + 1] {
                        out.set_edge(x, y, true);
                    }
                }
            }
        }
    }
    Ok(out)
}
