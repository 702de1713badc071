//! Trigraphs: every vertex pair is a forced edge (black), a forced non-edge
//! (white), or free (gray). A realization keeps all black pairs, drops all
//! white pairs, and picks any subset of the gray pairs.

use crate::error::{Error, Result};
use crate::graph::{pair_count, pair_index, pairs, Graph};

/// Guard on `2^g` realization enumeration.
pub const GRAY_GUARD: usize = 25;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeColor {
    Black,
    White,
    Gray,
}

/// An immutable trigraph; the three color classes partition all pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trigraph {
    n: usize,
    colors: Vec<EdgeColor>,
}

impl Trigraph {
    /// The all-white trigraph on `n` vertices.
    pub fn all_white(n: usize) -> Trigraph {
        Trigraph {
            n,
            colors: vec![EdgeColor::White; pair_count(n)],
        }
    }

    /// The all-gray trigraph on `n` vertices.
    pub fn all_gray(n: usize) -> Trigraph {
        Trigraph {
            n,
            colors: vec![EdgeColor::Gray; pair_count(n)],
        }
    }

    /// Builds a trigraph from black and gray pair lists; unlisted pairs are
    /// white. Pairs may not repeat across or within the lists.
    pub fn from_pairs(n: usize, black: &[(usize, usize)], gray: &[(usize, usize)]) -> Result<Trigraph> {
        let mut t = Trigraph::all_white(n);
        for (list, color) in [(black, EdgeColor::Black), (gray, EdgeColor::Gray)] {
            for &(u, v) in list {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, order: n });
                }
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
                if u == v {
                    return Err(Error::LoopEdge(u));
                }
                let (u, v) = (u.min(v), u.max(v));
                let idx = pair_index(u, v);
                if t.colors[idx] != EdgeColor::White {
                    return Err(Error::BadParameter(format!("pair ({u}, {v}) listed twice")));
                }
                t.colors[idx] = color;
            }
        }
        Ok(t)
    }

    /// Views a graph as the trigraph with black edges, white non-edges, and
    /// no gray pairs.
    pub fn from_graph(g: &Graph) -> Trigraph {
        let n = g.order();
        let mut t = Trigraph::all_white(n);
        for (u, v) in pairs(n) {
            if g.has_edge(u, v) {
                t.colors[pair_index(u, v)] = EdgeColor::Black;
            }
        }
        t
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn color(&self, u: usize, v: usize) -> EdgeColor {
        self.colors[pair_index(u.min(v), u.max(v))]
    }

    /// New trigraph with the pair `{u, v}` recolored.
    pub fn with_color(&self, u: usize, v: usize, color: EdgeColor) -> Trigraph {
        let mut t = self.clone();
        t.colors[pair_index(u.min(v), u.max(v))] = color;
        t
    }

    pub fn count(&self, color: EdgeColor) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn gray_count(&self) -> usize {
        self.count(EdgeColor::Gray)
    }

    /// Pairs of the given color in ascending `pair_index` order.
    pub fn pairs_of(&self, color: EdgeColor) -> Vec<(usize, usize)> {
        pairs(self.n)
            .filter(|&(u, v)| self.colors[pair_index(u, v)] == color)
            .collect()
    }

    /// Black and white swapped, gray fixed.
    pub fn complement(&self) -> Trigraph {
        let colors = self
            .colors
            .iter()
            .map(|c| match c {
                EdgeColor::Black => EdgeColor::White,
                EdgeColor::White => EdgeColor::Black,
                EdgeColor::Gray => EdgeColor::Gray,
            })
            .collect();
        Trigraph { n: self.n, colors }
    }

    /// The realization that keeps exactly the gray pairs selected by `mask`,
    /// where bit `i` of `mask` refers to the `i`-th gray pair in ascending
    /// pair order.
    pub fn realization(&self, mask: u64) -> Graph {
        let gray = self.pairs_of(EdgeColor::Gray);
        let mut edges = self.pairs_of(EdgeColor::Black);
        for (i, &(u, v)) in gray.iter().enumerate() {
            if mask >> i & 1 == 1 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(self.n, &edges).expect("pairs are in range by construction")
    }

    /// Streams all `2^g` realizations in ascending gray-subset mask order.
    pub fn realizations(&self) -> Result<Realizations> {
        let g = self.gray_count();
        if g > GRAY_GUARD {
            return Err(Error::GrayGuard { count: g, guard: GRAY_GUARD });
        }
        Ok(Realizations {
            base: self.realization(0),
            gray: self.pairs_of(EdgeColor::Gray),
            next: 0,
            end: 1u64 << g,
        })
    }
}

impl std::fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Trigraph(n={}, black={:?}, gray={:?})",
            self.n,
            self.pairs_of(EdgeColor::Black),
            self.pairs_of(EdgeColor::Gray)
        )
    }
}

/// Owning iterator over realizations, yielding `(gray mask, graph)`.
pub struct Realizations {
    base: Graph,
    gray: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for Realizations {
    type Item = (u64, Graph);

    fn next(&mut self) -> Option<(u64, Graph)> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut g = self.base.clone();
        for (i, &(u, v)) in self.gray.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g = g.flip_edge(u, v).expect("gray pair in range");
            }
        }
        Some((mask, g))
    }
}
