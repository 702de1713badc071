//! Saturation verifiers and the structural checks that accompany the claw
//! and star bounds.
//!
//! A graph is `H`-induced-saturated when it is `H`-free but flipping any
//! single pair creates an induced `H`. A trigraph is `H`-induced-saturated
//! when (a) no realization contains induced `H` and (b) graying any black or
//! white pair yields some realization that does. For (b) it suffices to scan
//! realizations with the pair flipped to the opposite value: realizations
//! keeping the original value are realizations of the unmodified trigraph,
//! already `H`-free once (a) holds.

use crate::error::Result;
use crate::graph::{pairs, Graph};
use crate::induced::{contains_any, find_induced, Embedding};
use crate::trigraph::{EdgeColor, Trigraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FlipDirection {
    Added,
    Deleted,
}

/// Outcome of a saturation check. Every failure carries a machine-checkable
/// certificate; `member` indexes the pattern family (0 for single-pattern
/// checks).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Saturated,
    /// The object itself contains an induced copy.
    NotFree { member: usize, witness: Embedding },
    /// Flipping this pair fails to create an induced copy.
    MissingOnFlip { pair: (usize, usize), direction: FlipDirection },
    /// Some realization (identified by gray-subset mask) contains a copy.
    TrigraphNotFree { mask: u64, member: usize, witness: Embedding },
    /// Graying this black/white pair never creates a copy.
    TrigraphMissingOnGray { pair: (usize, usize) },
}

impl Verdict {
    pub fn is_saturated(&self) -> bool {
        matches!(self, Verdict::Saturated)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Saturated => write!(f, "SATURATED"),
            Verdict::NotFree { member, witness } => {
                write!(f, "FAIL not-free member {member} witness")?;
                for v in witness.map() {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Verdict::MissingOnFlip { pair, direction } => {
                let dir = match direction {
                    FlipDirection::Added => "added",
                    FlipDirection::Deleted => "deleted",
                };
                write!(f, "FAIL missing-on-flip pair {} {} {dir}", pair.0, pair.1)
            }
            Verdict::TrigraphNotFree { mask, member, witness } => {
                write!(f, "FAIL trigraph-not-free mask {mask} member {member} witness")?;
                for v in witness.map() {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Verdict::TrigraphMissingOnGray { pair } => {
                write!(f, "FAIL trigraph-missing-on-gray pair {} {}", pair.0, pair.1)
            }
        }
    }
}

/// True iff `g` has no induced copy of `h`.
pub fn is_free(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_none()
}

/// Checks the graph saturation predicate for a single pattern.
pub fn verify_graph_saturated(g: &Graph, h: &Graph) -> Verdict {
    verify_graph_family_saturated(g, std::slice::from_ref(h)).expect("family is non-empty")
}

/// Checks the graph saturation predicate for a family: `g` must be free of
/// every member, and each pair flip must create some member. Pairs are
/// scanned in the fixed pair order, so the first failure is well-defined.
pub fn verify_graph_family_saturated(g: &Graph, family: &[Graph]) -> Result<Verdict> {
    if let Some((member, witness)) = contains_any(g, family)? {
        return Ok(Verdict::NotFree { member, witness });
    }
    for (u, v) in pairs(g.order()) {
        let flipped = g.flip_edge(u, v).expect("pair in range");
        if contains_any(&flipped, family)?.is_none() {
            let direction = if g.has_edge(u, v) {
                FlipDirection::Deleted
            } else {
                FlipDirection::Added
            };
            return Ok(Verdict::MissingOnFlip { pair: (u, v), direction });
        }
    }
    Ok(Verdict::Saturated)
}

/// Checks the trigraph saturation predicate for a single pattern.
pub fn verify_trigraph_saturated(t: &Trigraph, h: &Graph) -> Result<Verdict> {
    verify_trigraph_family_saturated(t, std::slice::from_ref(h))
}

/// Checks the trigraph saturation predicate for a family.
pub fn verify_trigraph_family_saturated(t: &Trigraph, family: &[Graph]) -> Result<Verdict> {
    // (a) every realization is family-free
    for (mask, g) in t.realizations()? {
        if let Some((member, witness)) = contains_any(&g, family)? {
            return Ok(Verdict::TrigraphNotFree { mask, member, witness });
        }
    }
    // (b) graying any black/white pair admits a realization with a copy;
    // only flipped-value realizations need scanning (see module docs)
    for (u, v) in pairs(t.order()) {
        let color = t.color(u, v);
        if color == EdgeColor::Gray {
            continue;
        }
        let opposite = match color {
            EdgeColor::Black => EdgeColor::White,
            EdgeColor::White => EdgeColor::Black,
            EdgeColor::Gray => unreachable!(),
        };
        let flipped = t.with_color(u, v, opposite);
        let mut found = false;
        for (_, g) in flipped.realizations()? {
            if contains_any(&g, family)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Verdict::TrigraphMissingOnGray { pair: (u, v) });
        }
    }
    Ok(Verdict::Saturated)
}

/// Degree clauses every claw-induced-saturated graph must satisfy.
#[derive(Clone, Debug)]
pub struct DegreeProfileReport {
    pub isolates: usize,
    pub degree_one: usize,
    pub degree_two: usize,
    pub degree_three: usize,
    pub at_most_one_isolate: bool,
    pub no_degree_one: bool,
    pub at_most_one_degree_two: bool,
    pub at_most_two_degree_three: bool,
    /// With an isolate removed, every remaining vertex has degree >= 4.
    pub isolate_residual_ok: bool,
}

impl DegreeProfileReport {
    pub fn all_hold(&self) -> bool {
        self.at_most_one_isolate
            && self.no_degree_one
            && self.at_most_one_degree_two
            && self.at_most_two_degree_three
            && self.isolate_residual_ok
    }

    /// Evaluates the clauses on a degree sequence alone; removing an isolate
    /// leaves the other degrees unchanged, so this is exact.
    pub fn from_degrees(degrees: &[usize]) -> DegreeProfileReport {
        let count = |d: usize| degrees.iter().filter(|&&x| x == d).count();
        let isolates = count(0);
        let degree_one = count(1);
        let degree_two = count(2);
        let degree_three = count(3);
        let isolate_residual_ok = isolates == 0
            || degrees.iter().all(|&d| d == 0 || d >= 4);
        DegreeProfileReport {
            isolates,
            degree_one,
            degree_two,
            degree_three,
            at_most_one_isolate: isolates <= 1,
            no_degree_one: degree_one == 0,
            at_most_one_degree_two: degree_two <= 1,
            at_most_two_degree_three: degree_three <= 2,
            isolate_residual_ok,
        }
    }
}

/// Reports which low-degree clauses hold for `g`.
pub fn degree_profile_check(g: &Graph) -> DegreeProfileReport {
    DegreeProfileReport::from_degrees(&g.degrees())
}

/// Vertex classes by neighborhood type in a candidate claw-saturated graph.
#[derive(Clone, Debug)]
pub struct RBPartition {
    /// `G[N(v)]` is two disjoint edges.
    pub red: Vec<usize>,
    /// `G[N(v)]` is a four-vertex path.
    pub blue: Vec<usize>,
    pub other: Vec<usize>,
}

/// Classifies every vertex by the isomorphism type of its open
/// neighborhood. On four vertices, degree sequence `[1,1,1,1]` pins two
/// disjoint edges and `[1,1,2,2]` pins the path, so no general isomorphism
/// test is needed.
pub fn classify_neighborhoods(g: &Graph) -> RBPartition {
    let mut part = RBPartition {
        red: Vec::new(),
        blue: Vec::new(),
        other: Vec::new(),
    };
    for v in 0..g.order() {
        let nbrs = g.neighbors(v);
        if nbrs.len() != 4 {
            part.other.push(v);
            continue;
        }
        let sub = g.induced(&nbrs);
        let mut degs = sub.degrees();
        degs.sort_unstable();
        match degs.as_slice() {
            [1, 1, 1, 1] => part.red.push(v),
            [1, 1, 2, 2] => part.blue.push(v),
            _ => part.other.push(v),
        }
    }
    part
}

/// Per-edge triangle membership counts and aggregates.
#[derive(Clone, Debug)]
pub struct TriangleCensus {
    /// `(u, v, count)` in ascending pair order, edges only.
    pub per_edge: Vec<(usize, usize, usize)>,
    pub edges_in_one: usize,
    pub edges_in_two: usize,
    pub triangles: usize,
}

pub fn triangle_census(g: &Graph) -> TriangleCensus {
    let mut per_edge = Vec::new();
    let mut weighted = 0usize;
    for (u, v) in pairs(g.order()) {
        if !g.has_edge(u, v) {
            continue;
        }
        let common: usize = g
            .row(u)
            .iter()
            .zip(g.row(v).iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum();
        per_edge.push((u, v, common));
        weighted += common;
    }
    TriangleCensus {
        edges_in_one: per_edge.iter().filter(|&&(_, _, c)| c == 1).count(),
        edges_in_two: per_edge.iter().filter(|&&(_, _, c)| c == 2).count(),
        triangles: weighted / 3,
        per_edge,
    }
}

/// True iff every open neighborhood induces two disjoint edges; such graphs
/// are claw-induced-saturated.
pub fn suff_claw_check(g: &Graph) -> bool {
    let part = classify_neighborhoods(g);
    part.blue.is_empty() && part.other.is_empty() && part.red.len() == g.order()
}

/// Vertices of degree at most `k - 1`. In a `K_{1,k+1}`-induced-saturated
/// graph this set has at most `k` elements.
pub fn low_degree_set(g: &Graph, k: usize) -> Vec<usize> {
    debug_assert!(k >= 2);
    (0..g.order()).filter(|&v| g.degree(v) < k).collect()
}

/// Checks that a vertex set induces a disjoint union of triangles.
pub fn induces_triangle_union(g: &Graph, verts: &[usize]) -> bool {
    let sub = g.induced(verts);
    if !sub.order().is_multiple_of(3) {
        return false;
    }
    sub.degrees().iter().all(|&d| d == 2) && sub.components().iter().all(|c| c.len() == 3)
}
