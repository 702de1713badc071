//! Canonical forms for small graphs and trigraphs.
//!
//! Equitable refinement on per-color degree profiles, then individualization
//! with backtracking; leaves are compared as pair-color codes and discovered
//! automorphisms prune sibling branches. Two objects get equal byte strings
//! iff they are isomorphic (color-preserving for trigraphs).

use crate::error::{Error, Result};
use crate::graph::{pair_count, pairs, Graph};
use crate::trigraph::{EdgeColor, Trigraph};

/// Canonical labeling is meant for search-scale objects.
pub const CANON_GUARD: usize = 16;

/// Canonical byte string of a graph: `[n]` then one byte per pair in the
/// fixed pair order under the canonical labeling.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > CANON_GUARD {
        return Err(Error::OrderGuard { n, guard: CANON_GUARD });
    }
    Ok(canonical_code(n, 2, |u, v| u8::from(g.has_edge(u, v))))
}

/// Canonical byte string of a trigraph; white/black/gray are distinct pair
/// colors, so equality means color-preserving isomorphism.
pub fn canonical_form_trigraph(t: &Trigraph) -> Result<Vec<u8>> {
    let n = t.order();
    if n > CANON_GUARD {
        return Err(Error::OrderGuard { n, guard: CANON_GUARD });
    }
    Ok(canonical_code(n, 3, |u, v| match t.color(u, v) {
        EdgeColor::White => 0,
        EdgeColor::Black => 1,
        EdgeColor::Gray => 2,
    }))
}

/// True iff the two graphs are isomorphic (both within the order guard).
pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn canonical_code<F: Fn(usize, usize) -> u8>(n: usize, ncolors: usize, color: F) -> Vec<u8> {
    if n == 0 {
        return vec![0];
    }
    let mut searcher = Searcher {
        n,
        ncolors,
        color: &color,
        best: None,
        best_labeling: Vec::new(),
        automorphisms: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<usize>>()];
    searcher.refine(&mut cells);
    searcher.search(cells, &mut Vec::new());

    let mut out = Vec::with_capacity(1 + pair_count(n));
    out.push(n as u8);
    out.extend_from_slice(&searcher.best.expect("at least one leaf"));
    out
}

struct Searcher<'a> {
    n: usize,
    ncolors: usize,
    color: &'a dyn Fn(usize, usize) -> u8,
    best: Option<Vec<u8>>,
    best_labeling: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

impl Searcher<'_> {
    /// Splits cells until every vertex in a cell sees the same multiset of
    /// (cell, pair color) counts. Signature sorting keeps the refinement
    /// label-independent.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let sig = |v: usize| -> Vec<u32> {
                let mut counts = vec![0u32; cells.len() * self.ncolors];
                for u in 0..self.n {
                    if u != v {
                        let c = (self.color)(u.min(v), u.max(v)) as usize;
                        counts[cell_of[u] * self.ncolors + c] += 1;
                    }
                }
                counts
            };
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (sig(v), v)).collect();
                keyed.sort();
                let mut group: Vec<usize> = vec![keyed[0].1];
                for w in keyed.windows(2) {
                    if w[0].0 == w[1].0 {
                        group.push(w[1].1);
                    } else {
                        next.push(std::mem::take(&mut group));
                        group.push(w[1].1);
                    }
                }
                next.push(group);
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn search(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.iter().all(|c| c.len() == 1) {
            let labeling: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.visit_leaf(labeling);
            return;
        }
        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete partition has a splittable cell");
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if self.pruned_by_automorphism(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            for (ci, cell) in cells.iter().enumerate() {
                if ci == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            self.refine(&mut child);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }

    /// Branch `v` is redundant if a known automorphism fixes every vertex
    /// individualized so far and maps `v` onto an already-tried branch.
    fn pruned_by_automorphism(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        self.automorphisms.iter().any(|phi| {
            prefix.iter().all(|&p| phi[p] == p) && tried.contains(&phi[v])
        })
    }

    fn visit_leaf(&mut self, labeling: Vec<usize>) {
        let code: Vec<u8> = pairs(self.n)
            .map(|(i, j)| (self.color)(labeling[i].min(labeling[j]), labeling[i].max(labeling[j])))
            .collect();
        match &self.best {
            None => {
                self.best = Some(code);
                self.best_labeling = labeling;
            }
            Some(best) => {
                if code < *best {
                    self.best = Some(code);
                    self.best_labeling = labeling;
                    self.automorphisms.clear();
                } else if code == *best {
                    // labeling and best_labeling map positions to vertices
                    // with identical codes, so their composition is an
                    // automorphism.
                    let mut inv = vec![0usize; self.n];
                    for (pos, &vtx) in self.best_labeling.iter().enumerate() {
                        inv[vtx] = pos;
                    }
                    let phi: Vec<usize> = (0..self.n).map(|x| labeling[inv[x]]).collect();
                    if phi.iter().enumerate().any(|(i, &x)| x != i) {
                        self.automorphisms.push(phi);
                    }
                }
            }
        }
    }
}
