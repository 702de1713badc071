//! Exhaustive searches for indsat(n, H) and sis(n, H) at desk scale, with
//! isomorph rejection and optional claw-specific degree pruning.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_form_trigraph, isomorphic};
use crate::error::{Error, Result};
use crate::graph::{pair_count, pairs, Graph};
use crate::patterns::{pattern, Pattern};
use crate::saturation::{degree_profile_check, verify_graph_saturated, verify_trigraph_saturated};
use crate::trigraph::Trigraph;

pub const INDSAT_ORD_GUARD: usize = 7;
pub const INDSAT_GRAY_GUARD: usize = 4;
pub const SIS_ORD_GUARD: usize = 8;
pub const ENUM_ORD_GUARD: usize = 10;

/// Cap on per-class trigraph dedup sets; beyond this duplicates are simply
/// verified again, which is slower but changes nothing.
const DEDUP_CAP: usize = 1 << 21;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    /// Optimal value within the searched space.
    Optimal(usize),
    /// No witness within the budget; heavier witnesses may exist.
    ExceedsBudget,
    /// The whole space was exhausted and no witness exists.
    NoneExists,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Trigraph(Trigraph),
    Graph(Graph),
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub n: usize,
    pub target: String,
    pub budget: usize,
    pub outcome: SearchOutcome,
    pub certificate: Option<Certificate>,
    pub nodes_explored: u64,
    pub wall: Duration,
}

impl SearchReport {
    /// Machine-readable report: a `RESULT` line, then the certificate behind
    /// a `CERT` line (trigraph text or graph6).
    pub fn render(&self) -> String {
        let mut out = match self.outcome {
            SearchOutcome::Optimal(v) => format!("RESULT {v}\n"),
            SearchOutcome::ExceedsBudget => "RESULT exceeds-budget\n".to_string(),
            SearchOutcome::NoneExists => "RESULT none-exists\n".to_string(),
        };
        match &self.certificate {
            Some(Certificate::Trigraph(t)) => {
                out.push_str("CERT\n");
                out.push_str(&crate::io::encode_trigraph(t));
            }
            Some(Certificate::Graph(g)) => {
                out.push_str("CERT\n");
                out.push_str(&crate::io::encode_graph6(g).expect("search-scale order"));
                out.push('\n');
            }
            None => {}
        }
        out
    }
}

/// Builds the graph whose edges are the set bits of `mask` in pair order.
pub fn graph_from_pair_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// All labeled graphs on `n` vertices whose degree sequence passes `filter`,
/// in ascending edge-mask order; with `dedup`, only the first-seen graph of
/// each isomorphism class is yielded.
pub fn enumerate_graphs<F>(n: usize, filter: F, dedup: bool) -> Result<impl Iterator<Item = Graph>>
where
    F: Fn(&[usize]) -> bool,
{
    if n > ENUM_ORD_GUARD {
        return Err(Error::OrderGuard { n, guard: ENUM_ORD_GUARD });
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    Ok((0u64..1 << pair_count(n)).filter_map(move |mask| {
        let g = graph_from_pair_mask(n, mask);
        if !filter(&g.degrees()) {
            return None;
        }
        if dedup && !seen.insert(canonical_form(&g).expect("order within guard")) {
            return None;
        }
        Some(g)
    }))
}

// ---------------------------------------------------------------------------
// indsat search
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct IndsatOptions {
    pub gray_max: usize,
    /// Lifts the order and gray guards.
    pub override_guards: bool,
}

/// Next bit permutation with the same popcount (Gosper); masks must be
/// nonzero.
fn next_subset_mask(v: u64) -> u64 {
    let t = v | (v - 1);
    (t + 1) | ((((!t) & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1))
}

fn subsets_of_size(nbits: usize, size: usize) -> Vec<u64> {
    if size == 0 {
        return vec![0];
    }
    if size > nbits {
        return Vec::new();
    }
    let mut out = Vec::new();
    let limit = 1u64 << nbits;
    let mut mask = (1u64 << size) - 1;
    while mask < limit {
        out.push(mask);
        mask = next_subset_mask(mask);
    }
    out
}

/// Minimum number of gray edges over `H`-induced-saturated trigraphs on `n`
/// vertices, searched level by level for `g = 0..=gray_max`.
///
/// Each level enumerates gray placements in ascending subset-mask order,
/// keeps one representative per isomorphism class of the placement, then
/// scans all black/white assignments of the remaining pairs in ascending
/// mask order (bit set means black), rejecting trigraphs already seen within
/// the class by color-aware canonical form. The certificate is the first
/// saturated trigraph in this order; placement classes are independent, so
/// they run in parallel and the reduction picks the earliest class, which
/// matches the serial scan exactly.
pub fn search_indsat(n: usize, h: &Graph, opts: IndsatOptions) -> Result<SearchReport> {
    if !opts.override_guards {
        if n > INDSAT_ORD_GUARD {
            return Err(Error::OrderGuard { n, guard: INDSAT_ORD_GUARD });
        }
        if opts.gray_max > INDSAT_GRAY_GUARD {
            return Err(Error::GrayGuard { count: opts.gray_max, guard: INDSAT_GRAY_GUARD });
        }
    }
    let start = Instant::now();
    let npairs = pair_count(n);
    let all_pairs: Vec<(usize, usize)> = pairs(n).collect();
    let mut nodes = 0u64;

    for gray_size in 0..=opts.gray_max.min(npairs) {
        // level 1: gray placements up to isomorphism
        let mut class_reps: Vec<u64> = Vec::new();
        let mut seen_placements: HashSet<Vec<u8>> = HashSet::new();
        for mask in subsets_of_size(npairs, gray_size) {
            let placement = graph_from_pair_mask(n, mask);
            if seen_placements.insert(canonical_form(&placement)?) {
                class_reps.push(mask);
            }
        }

        let results: Vec<(u64, Option<(u64, Trigraph)>)> = class_reps
            .par_iter()
            .map(|&gray_mask| scan_placement(n, &all_pairs, gray_mask, gray_size, h))
            .collect();

        nodes += results.iter().map(|(c, _)| c).sum::<u64>();
        let hit = results
            .iter()
            .enumerate()
            .filter_map(|(class_idx, (_, hit))| hit.as_ref().map(|(bw, t)| (class_idx, *bw, t)))
            .min_by_key(|&(class_idx, bw, _)| (class_idx, bw));
        if let Some((_, _, t)) = hit {
            return Ok(SearchReport {
                n,
                target: format!("{h:?}"),
                budget: opts.gray_max,
                outcome: SearchOutcome::Optimal(gray_size),
                certificate: Some(Certificate::Trigraph(t.clone())),
                nodes_explored: nodes,
                wall: start.elapsed(),
            });
        }
    }
    Ok(SearchReport {
        n,
        target: format!("{h:?}"),
        budget: opts.gray_max,
        outcome: SearchOutcome::ExceedsBudget,
        certificate: None,
        nodes_explored: nodes,
        wall: start.elapsed(),
    })
}

/// Scans every black/white completion of one gray placement; returns the
/// number of verifications and the first saturated trigraph, if any.
fn scan_placement(
    n: usize,
    all_pairs: &[(usize, usize)],
    gray_mask: u64,
    gray_size: usize,
    h: &Graph,
) -> (u64, Option<(u64, Trigraph)>) {
    let npairs = all_pairs.len();
    let free: Vec<usize> = (0..npairs).filter(|i| gray_mask >> i & 1 == 0).collect();
    let gray: Vec<(usize, usize)> = (0..npairs)
        .filter(|i| gray_mask >> i & 1 == 1)
        .map(|i| all_pairs[i])
        .collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut nodes = 0u64;
    for bw_mask in 0u64..1 << free.len() {
        let mut black = Vec::new();
        for (bit, &i) in free.iter().enumerate() {
            if bw_mask >> bit & 1 == 1 {
                black.push(all_pairs[i]);
            }
        }
        let t = Trigraph::from_pairs(n, &black, &gray).expect("pairs are disjoint and in range");
        debug_assert_eq!(t.gray_count(), gray_size);
        if seen.len() < DEDUP_CAP {
            let form = canonical_form_trigraph(&t).expect("order within guard");
            if !seen.insert(form) {
                continue;
            }
        }
        nodes += 1;
        let verdict = verify_trigraph_saturated(&t, h).expect("gray count within guard");
        if verdict.is_saturated() {
            return (nodes, Some((bw_mask, t)));
        }
    }
    (nodes, None)
}

// ---------------------------------------------------------------------------
// sis search
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct SisOptions {
    pub edge_max: usize,
    /// Filter the enumeration by the degree constraints every
    /// claw-saturated graph satisfies (at most one isolate, no degree-1
    /// vertex, at most one of degree 2, at most two of degree 3). Only
    /// honored when the target is the claw; each constraint is a necessary
    /// condition, so completeness is preserved.
    pub prune: bool,
    pub override_guards: bool,
}

/// Minimum edge count over `H`-induced-saturated graphs on `n` vertices with
/// at most `edge_max` edges, by sweeping all labeled graphs in ascending
/// edge-mask order. The certificate is minimal by (edge count, mask), which
/// makes parallel and serial runs identical.
pub fn search_sis(n: usize, h: &Graph, opts: SisOptions) -> Result<SearchReport> {
    if !opts.override_guards && n > SIS_ORD_GUARD {
        return Err(Error::OrderGuard { n, guard: SIS_ORD_GUARD });
    }
    let start = Instant::now();
    let claw = pattern(&Pattern::Claw)?;
    let prune = opts.prune && h.order() <= 16 && isomorphic(h, &claw).unwrap_or(false);

    let npairs = pair_count(n);
    let total: u64 = 1 << npairs;
    let chunks: Vec<(u64, u64)> = {
        let parts = (rayon::current_num_threads() as u64 * 8).max(1).min(total);
        let step = total.div_ceil(parts);
        (0..parts)
            .map(|i| (i * step, ((i + 1) * step).min(total)))
            .filter(|(lo, hi)| lo < hi)
            .collect()
    };

    let results: Vec<(u64, Option<(usize, u64)>)> = chunks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut nodes = 0u64;
            let mut best: Option<(usize, u64)> = None;
            for mask in lo..hi {
                let e = mask.count_ones() as usize;
                if e > opts.edge_max {
                    continue;
                }
                if let Some((be, _)) = best {
                    if e > be {
                        continue;
                    }
                }
                let g = graph_from_pair_mask(n, mask);
                if prune && !degree_profile_check(&g).all_hold() {
                    continue;
                }
                nodes += 1;
                if verify_graph_saturated(&g, h).is_saturated() {
                    let key = (e, mask);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
            (nodes, best)
        })
        .collect();

    let nodes = results.iter().map(|(c, _)| c).sum();
    let best = results.iter().filter_map(|(_, b)| *b).min();
    let outcome = match best {
        Some((e, _)) => SearchOutcome::Optimal(e),
        None if opts.edge_max >= npairs => SearchOutcome::NoneExists,
        None => SearchOutcome::ExceedsBudget,
    };
    Ok(SearchReport {
        n,
        target: format!("{h:?}"),
        budget: opts.edge_max,
        outcome,
        certificate: best.map(|(_, mask)| Certificate::Graph(graph_from_pair_mask(n, mask))),
        nodes_explored: nodes,
        wall: start.elapsed(),
    })
}
