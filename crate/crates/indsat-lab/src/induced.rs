//! Induced-subgraph decision procedure with witnesses, plus the brute-force
//! counting oracle used to cross-check it.

use itertools::Itertools;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Guard on the subset-enumeration oracle.
pub const COUNT_GUARD: usize = 12;

/// An injective map witnessing an induced copy: `map[h]` is the image of
/// pattern vertex `h`, and adjacency holds between images iff it holds in
/// the pattern.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Re-checks the adjacency biconditional edge by edge.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        if self.map.len() != h.order() {
            return false;
        }
        if self.map.iter().any(|&v| v >= g.order()) {
            return false;
        }
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] == self.map[j] {
                    return false;
                }
                if g.has_edge(self.map[i], self.map[j]) != h.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// Finds an induced copy of `h` in `g`, or `None`.
///
/// Deterministic: pattern vertices are matched in descending-degree order
/// (ties by index) and host candidates in ascending order, so the first
/// witness is reproducible. Candidates are filtered by degree and by bitwise
/// intersection with the rows of already-matched vertices.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Embedding> {
    let (ng, nh) = (g.order(), h.order());
    if nh == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    if nh > ng {
        return None;
    }

    let mut order: Vec<usize> = (0..nh).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));

    let words = g.words_per_row();
    // candidates with enough degree, one mask per pattern vertex
    let mut degree_ok = vec![0u64; nh * words];
    for (h_pos, &hv) in order.iter().enumerate() {
        let need = h.degree(hv);
        for gv in 0..ng {
            if g.degree(gv) >= need {
                degree_ok[h_pos * words + gv / 64] |= 1 << (gv % 64);
            }
        }
    }

    let mut matcher = Matcher {
        g,
        h,
        order: &order,
        degree_ok: &degree_ok,
        words,
        image: vec![0usize; nh],
        used: vec![0u64; words],
        cand: vec![0u64; nh * words],
    };
    if matcher.search(0) {
        let mut map = vec![0usize; nh];
        for (pos, &hv) in order.iter().enumerate() {
            map[hv] = matcher.image[pos];
        }
        Some(Embedding { map })
    } else {
        None
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    degree_ok: &'a [u64],
    words: usize,
    image: Vec<usize>,
    used: Vec<u64>,
    cand: Vec<u64>,
}

impl Matcher<'_> {
    fn search(&mut self, level: usize) -> bool {
        if level == self.order.len() {
            return true;
        }
        let words = self.words;
        let hv = self.order[level];
        {
            let slot = &mut self.cand[level * words..(level + 1) * words];
            slot.copy_from_slice(&self.degree_ok[level * words..(level + 1) * words]);
            for (w, u) in slot.iter_mut().zip(self.used.iter()) {
                *w &= !u;
            }
            for prev in 0..level {
                let row = self.g.row(self.image[prev]);
                if self.h.has_edge(hv, self.order[prev]) {
                    for (w, r) in slot.iter_mut().zip(row.iter()) {
                        *w &= r;
                    }
                } else {
                    for (w, r) in slot.iter_mut().zip(row.iter()) {
                        *w &= !r;
                    }
                }
            }
        }
        for wi in 0..words {
            let mut bits = self.cand[level * words + wi];
            while bits != 0 {
                let gv = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.image[level] = gv;
                self.used[gv / 64] |= 1 << (gv % 64);
                if self.search(level + 1) {
                    return true;
                }
                self.used[gv / 64] &= !(1 << (gv % 64));
            }
        }
        false
    }
}

/// Number of vertex subsets `S` with `G[S]` isomorphic to `H` (unordered
/// copies, not embeddings). Brute force over all subsets with isomorphism
/// testing by canonical form; this is the oracle `find_induced` is checked
/// against.
pub fn count_induced(g: &Graph, h: &Graph) -> Result<usize> {
    let ng = g.order();
    if ng > COUNT_GUARD {
        return Err(Error::OrderGuard { n: ng, guard: COUNT_GUARD });
    }
    let nh = h.order();
    if nh > ng {
        return Ok(0);
    }
    let target = canonical_form(h)?;
    let mut count = 0;
    for subset in (0..ng).combinations(nh) {
        if canonical_form(&g.induced(&subset))? == target {
            count += 1;
        }
    }
    Ok(count)
}

/// First family member (in list order) that occurs induced in `g`, with a
/// witness.
pub fn contains_any(g: &Graph, family: &[Graph]) -> Result<Option<(usize, Embedding)>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for (i, h) in family.iter().enumerate() {
        if let Some(emb) = find_induced(g, h) {
            return Ok(Some((i, emb)));
        }
    }
    Ok(None)
}
