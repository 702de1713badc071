//! Executable catalogue of extremal constructions, hand-transcribed named
//! graphs and trigraphs, and the threshold/split recognizers.

use crate::error::{Error, Result};
use crate::graph::{blowup, cartesian_product, disjoint_union, pairs, BlowupMode, Graph};
use crate::induced::contains_any;
use crate::patterns::{complete_multipartite, pattern, Pattern};
use crate::trigraph::Trigraph;

// ---------------------------------------------------------------------------
// Paw constructions
// ---------------------------------------------------------------------------

/// Shape of a paw-induced-saturated graph: an optional isolated vertex plus
/// complete multipartite components, each with at least three parts, at most
/// one singleton part, and all other parts of size at least three.
#[derive(Clone, Debug)]
pub struct PawSpec {
    pub isolated: bool,
    pub components: Vec<Vec<usize>>,
}

fn validate_paw_component(parts: &[usize]) -> Result<()> {
    if parts.len() < 3 {
        return Err(Error::BadParameter(format!(
            "paw component needs at least three parts, got {parts:?}"
        )));
    }
    let singletons = parts.iter().filter(|&&p| p == 1).count();
    if singletons > 1 {
        return Err(Error::BadParameter(format!(
            "paw component allows at most one singleton part, got {parts:?}"
        )));
    }
    if parts.contains(&2) {
        return Err(Error::BadParameter(format!(
            "paw component parts other than one singleton need size >= 3, got {parts:?}"
        )));
    }
    Ok(())
}

/// Builds the graph described by a [`PawSpec`]: the multipartite components
/// in list order, then the isolate.
pub fn paw_construction(spec: &PawSpec) -> Result<Graph> {
    let mut blocks = Vec::new();
    for parts in &spec.components {
        validate_paw_component(parts)?;
        blocks.push(complete_multipartite(parts)?);
    }
    if spec.isolated {
        blocks.push(Graph::empty(1));
    }
    Ok(disjoint_union(&blocks))
}

/// The minimum-edge paw-induced-saturated graph on `n >= 7` vertices:
/// `floor(n/7)` components `K_{1,3,*}` plus one isolate when 7 does not
/// divide `n`; all surplus vertices go to the large part of the last
/// component.
pub fn minimal_paw(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(Error::BadParameter(format!(
            "minimal paw construction needs n >= 7, got {n}"
        )));
    }
    let k = n / 7;
    let r = n % 7;
    let mut components = vec![vec![1, 3, 3]; k];
    if r != 0 {
        components[k - 1] = vec![1, 3, 3 + (r - 1)];
    }
    paw_construction(&PawSpec {
        isolated: r != 0,
        components,
    })
}

/// Edge count the minimal paw construction realizes.
pub fn sis_paw_formula(n: usize) -> usize {
    let r = n % 7;
    if r == 0 {
        15 * n / 7
    } else {
        15 * (n / 7) + 4 * (r - 1)
    }
}

/// Decomposes a set of vertices into complete-multipartite parts, or `None`
/// when the induced subgraph is not complete multipartite.
fn multipartite_parts(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    let mut part_of = vec![usize::MAX; comp.len()];
    let mut parts = 0usize;
    for i in 0..comp.len() {
        if part_of[i] != usize::MAX {
            continue;
        }
        part_of[i] = parts;
        for j in i + 1..comp.len() {
            if part_of[j] == usize::MAX && !g.has_edge(comp[i], comp[j]) {
                part_of[j] = parts;
            }
        }
        parts += 1;
    }
    // adjacency must be exactly "different part"
    for i in 0..comp.len() {
        for j in i + 1..comp.len() {
            if g.has_edge(comp[i], comp[j]) != (part_of[i] != part_of[j]) {
                return None;
            }
        }
    }
    let mut sizes = vec![0usize; parts];
    for &p in &part_of {
        sizes[p] += 1;
    }
    Some(sizes)
}

/// Membership test for the paw construction family: at most one isolate, and
/// every nontrivial component complete multipartite with the part-size rules
/// of [`PawSpec`].
pub fn recognize_paw_shape(g: &Graph) -> bool {
    let mut isolates = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            isolates += 1;
            if isolates > 1 {
                return false;
            }
            continue;
        }
        match multipartite_parts(g, &comp) {
            Some(sizes) => {
                if validate_paw_component(&sizes).is_err() {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Star construction
// ---------------------------------------------------------------------------

/// `K_{1,k+1}`-induced-saturated graph on `n >= 3^k` vertices: copies of the
/// `k`-fold Cartesian power of `K_3`, with the `n mod 3^k` surplus vertices
/// forming a clique joined to one triangle fiber of the last copy.
pub fn star_construction(n: usize, k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::BadParameter(format!("star construction needs k >= 2, got {k}")));
    }
    let base = 3usize.pow(k as u32);
    if n < base {
        return Err(Error::BadParameter(format!(
            "star construction needs n >= 3^k = {base}, got {n}"
        )));
    }
    let copies = n / base;
    let surplus = n % base;

    let k3 = pattern(&Pattern::Complete(3))?;
    let mut product = k3.clone();
    for _ in 1..k {
        product = cartesian_product(&product, &k3);
    }

    let mut blocks = vec![product.clone(); copies - 1];
    let tail = if surplus == 0 {
        product
    } else {
        // clique of surplus vertices, each adjacent to the triangle fiber
        // that varies in the first coordinate
        let fiber = [0, base / 3, 2 * base / 3];
        let mut edges = product.edges();
        for i in 0..surplus {
            let v = base + i;
            for j in i + 1..surplus {
                edges.push((v, base + j));
            }
            for &f in &fiber {
                edges.push((v, f));
            }
        }
        Graph::from_edges(base + surplus, &edges)?
    };
    blocks.push(tail);
    Ok(disjoint_union(&blocks))
}

// ---------------------------------------------------------------------------
// Claw catalogue
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClawGraph {
    /// `K_3 x K_3`, 9 vertices.
    H,
    /// 11 vertices, 24 edges; the only catalogue member with degree-5
    /// vertices.
    J,
    /// 12 vertices, 24 edges, 4-regular.
    K,
    /// 15 vertices; same as `generalized_l(5)`.
    L,
}

/// Four hand-transcribed claw-induced-saturated graphs. The test suite
/// refuses to pass unless each one verifies, so transcription errors cannot
/// ship.
pub fn claw_catalogue(which: ClawGraph) -> Graph {
    match which {
        ClawGraph::H => {
            let k3 = pattern(&Pattern::Complete(3)).expect("valid pattern");
            cartesian_product(&k3, &k3)
        }
        ClawGraph::J => Graph::from_edges(
            11,
            &[
                (0, 1), (0, 2), (1, 2),
                (0, 3), (2, 3),
                (2, 4), (1, 4),
                (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
                (6, 9), (8, 9), (8, 10), (7, 10),
                (3, 6), (3, 9),
                (9, 10),
                (4, 10),
                (4, 7),
                (0, 5), (1, 5),
            ],
        )
        .expect("transcribed edge list is valid"),
        ClawGraph::K => Graph::from_edges(
            12,
            &[
                (9, 10), (10, 11), (9, 11),
                (1, 9), (0, 1),
                (3, 10), (2, 3),
                (5, 11), (4, 5),
                (0, 11), (2, 9), (4, 10),
                (0, 6), (1, 6),
                (2, 7), (3, 7),
                (4, 8), (5, 8),
                (6, 7), (7, 8), (6, 8),
                (0, 5), (1, 2), (3, 4),
            ],
        )
        .expect("transcribed edge list is valid"),
        ClawGraph::L => generalized_l(5).expect("m = 5 is valid"),
    }
}

/// Three concentric `m`-cycles `a`, `b`, `c` with each middle vertex `b_i`
/// joined to `a_i, a_{i+1}, c_i, c_{i+1}`; 4-regular on `3m` vertices with
/// every neighborhood inducing two disjoint edges.
pub fn generalized_l(m: usize) -> Result<Graph> {
    if m < 5 {
        return Err(Error::BadParameter(format!("generalized L needs m >= 5, got {m}")));
    }
    let a = |i: usize| i % m;
    let b = |i: usize| m + i % m;
    let c = |i: usize| 2 * m + i % m;
    let mut edges = Vec::with_capacity(6 * m);
    for i in 0..m {
        edges.push((a(i), a(i + 1)));
        edges.push((c(i), c(i + 1)));
        edges.push((b(i), a(i)));
        edges.push((b(i), a(i + 1)));
        edges.push((b(i), c(i)));
        edges.push((b(i), c(i + 1)));
    }
    Graph::from_edges(3 * m, &edges)
}

// ---------------------------------------------------------------------------
// Wheel stacks and the C4 / matching suite
// ---------------------------------------------------------------------------

/// `k` wheels with `j` spokes, rims joined pairwise by a zig-zag: for wheels
/// `i < i*`, rim vertex `l` of wheel `i` is adjacent to rim vertices `l` and
/// `l+1` of wheel `i*`. Wheel `i` occupies indices `i(j+1)..`, hub first.
/// The two-wheel five-spoke case is the icosahedron.
pub fn icosa(j: usize, k: usize) -> Result<Graph> {
    if j < 5 {
        return Err(Error::BadParameter(format!("wheel stack needs j >= 5, got {j}")));
    }
    if k < 2 {
        return Err(Error::BadParameter(format!("wheel stack needs k >= 2, got {k}")));
    }
    let hub = |i: usize| i * (j + 1);
    let rim = |i: usize, l: usize| i * (j + 1) + 1 + l % j;
    let mut edges = Vec::new();
    for i in 0..k {
        for l in 0..j {
            edges.push((hub(i), rim(i, l)));
            edges.push((rim(i, l), rim(i, l + 1)));
        }
    }
    for i in 0..k {
        for i2 in i + 1..k {
            for l in 0..j {
                edges.push((rim(i, l), rim(i2, l)));
                edges.push((rim(i, l), rim(i2, l + 1)));
            }
        }
    }
    Graph::from_edges(k * (j + 1), &edges)
}

/// Low-edge `C_4`-induced-saturated graph on `n >= 56` vertices: the
/// seven-spoke stack on `floor(n/8)` wheels with the first `n mod 8` hubs
/// doubled into adjacent twins.
pub fn c4_minimal(n: usize) -> Result<Graph> {
    if n < 56 {
        return Err(Error::BadParameter(format!("construction needs n >= 56, got {n}")));
    }
    let k = n / 8;
    let r = n % 8;
    let base = icosa(7, k)?;
    let mut sizes = vec![1usize; base.order()];
    for i in 0..r {
        sizes[i * 8] = 2;
    }
    blowup(&base, &sizes, BlowupMode::Clique)
}

/// `kK_2`-induced-saturated graph: `k - 1` copies of the complement of the
/// icosahedron plus isolates.
pub fn matching_construction(n: usize, k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::BadParameter(format!("matching construction needs k >= 2, got {k}")));
    }
    if n < 12 * (k - 1) {
        return Err(Error::BadParameter(format!(
            "matching construction needs n >= 12(k-1) = {}, got {n}",
            12 * (k - 1)
        )));
    }
    let anti_icosa = icosa(5, 2)?.complement();
    let mut blocks = vec![anti_icosa; k - 1];
    blocks.push(Graph::empty(n - 12 * (k - 1)));
    Ok(disjoint_union(&blocks))
}

// ---------------------------------------------------------------------------
// Cycle constructions
// ---------------------------------------------------------------------------

/// Clique-product construction saturated for the odd cycle `C_{2k-1}` and
/// the augmented even cycles of length `2k`: `K_{k+1} x K_t` with the first
/// `s = (k+1)t - n` vertices of the last `K_t` fiber removed,
/// `t = ceil(n/(k+1))`.
pub fn cycles_construction(n: usize, k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::BadParameter(format!("cycle construction needs k >= 3, got {k}")));
    }
    if n < (k + 1) * (k + 1) + 2 {
        return Err(Error::BadParameter(format!(
            "cycle construction needs n >= (k+1)^2 + 2 = {}, got {n}",
            (k + 1) * (k + 1) + 2
        )));
    }
    let t = n.div_ceil(k + 1);
    if t < k + 2 {
        return Err(Error::BadParameter(format!(
            "cycle construction needs t = ceil(n/(k+1)) >= k + 2, got t = {t}"
        )));
    }
    let s = (k + 1) * t - n;
    if s > t - 3 {
        return Err(Error::BadParameter(format!(
            "cycle construction needs s = (k+1)t - n <= t - 3, got s = {s}, t = {t}"
        )));
    }
    product_minus_fiber_prefix(k + 1, t, s)
}

/// Subquadratic-edge variant: `K_{r/t} x K_{tr}` for `r = ceil(sqrt(n))`
/// with `t | r`, trimmed back to exactly `n` vertices.
pub fn cycles_subquadratic(n: usize, k: usize, t: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::BadParameter(format!("cycle construction needs k >= 3, got {k}")));
    }
    if t < 3 {
        return Err(Error::BadParameter(format!("subquadratic variant needs t >= 3, got {t}")));
    }
    let quarter = (k + 1) * (k + 1) * (k + 1) * (k + 1);
    if n < quarter {
        return Err(Error::BadParameter(format!(
            "subquadratic variant needs n^(1/4) >= k + 1, i.e. n >= {quarter}, got {n}"
        )));
    }
    let root = n.isqrt() + usize::from(n.isqrt() * n.isqrt() < n);
    if !root.is_multiple_of(t) {
        return Err(Error::BadParameter(format!(
            "subquadratic variant needs t to divide ceil(sqrt(n)) = {root}, got t = {t}"
        )));
    }
    let a = root / t;
    let b = t * root;
    if a < k + 1 || b < k + 2 {
        return Err(Error::BadParameter(format!(
            "subquadratic variant needs clique factors of size at least k+1, got {a} and {b}"
        )));
    }
    let s = a * b - n;
    if s > b - 3 {
        return Err(Error::BadParameter(format!(
            "subquadratic variant cannot trim {s} vertices from a fiber of {b}"
        )));
    }
    product_minus_fiber_prefix(a, b, s)
}

/// `K_a x K_b` with the lexicographically first `s` vertices of the last
/// `K_b` fiber removed.
fn product_minus_fiber_prefix(a: usize, b: usize, s: usize) -> Result<Graph> {
    let product = cartesian_product(
        &pattern(&Pattern::Complete(a))?,
        &pattern(&Pattern::Complete(b))?,
    );
    let drop: Vec<usize> = (0..s).map(|i| (a - 1) * b + i).collect();
    product.remove_vertices(&drop)
}

// ---------------------------------------------------------------------------
// Optimal small trigraphs
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableTarget {
    Paw,
    Claw,
}

/// The minimum-gray-edge trigraphs at small orders where no graph witness
/// exists: paw for `n` in `4..=6`, claw for `n` in `4..=8`.
pub fn table_trigraphs(target: TableTarget, n: usize) -> Result<Trigraph> {
    let unsupported = || {
        Error::BadParameter(format!(
            "no shipped trigraph for target {target:?} at n = {n}"
        ))
    };
    match (target, n) {
        (TableTarget::Paw, 4) => {
            Trigraph::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[(0, 1), (2, 3)])
        }
        (TableTarget::Paw, 5) | (TableTarget::Paw, 6) => {
            // K_{2,n-2} on leaves 2.. with one gray pair inside the 2-side
            let mut black = Vec::new();
            for leaf in 2..n {
                black.push((0, leaf));
                black.push((1, leaf));
            }
            Trigraph::from_pairs(n, &black, &[(0, 1)])
        }
        (TableTarget::Claw, 4) => Trigraph::from_pairs(4, &[], &[(0, 1), (1, 2), (0, 2)]),
        (TableTarget::Claw, 5) => {
            Trigraph::from_pairs(5, &[(0, 1), (1, 2)], &[(0, 2), (2, 3), (0, 3)])
        }
        (TableTarget::Claw, 6) => Trigraph::from_pairs(
            6,
            &[(0, 1), (1, 3), (2, 3), (0, 2), (0, 3)],
            &[(1, 2), (2, 4), (1, 4)],
        ),
        (TableTarget::Claw, 7) | (TableTarget::Claw, 8) => Trigraph::from_pairs(
            n,
            &[
                (0, 3), (3, 4), (2, 4), (2, 6), (5, 6), (0, 5),
                (1, 3), (1, 5), (1, 4), (1, 6),
            ],
            &[(3, 5), (4, 6)],
        ),
        _ => Err(unsupported()),
    }
}

/// The ten-vertex trigraph certifying `indsat(10, C5) <= 1`: `K_3 x K_3`
/// plus an apex with four black edges into the grid and a single gray edge.
pub fn c5_trigraph10() -> Trigraph {
    let k3 = pattern(&Pattern::Complete(3)).expect("valid pattern");
    let grid = cartesian_product(&k3, &k3);
    let mut black = grid.edges();
    // apex 9; grid vertex (row r, col c) sits at index 3r + c
    for base in [1, 4, 6, 8] {
        black.push((base, 9));
    }
    Trigraph::from_pairs(10, &black, &[(7, 9)]).expect("transcription is valid")
}

// ---------------------------------------------------------------------------
// Threshold and split graphs
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

/// Parses strings like `"--+"` or `"+-+"`.
pub fn parse_signs(s: &str) -> Result<Vec<Sign>> {
    s.chars()
        .map(|c| match c {
            '-' => Ok(Sign::Minus),
            '+' => Ok(Sign::Plus),
            other => Err(Error::BadParameter(format!("sign string admits only + and -, got '{other}'"))),
        })
        .collect()
}

/// Builds the threshold graph of a sign string: vertex `i` is adjacent to
/// every earlier vertex iff the `i`-th sign is `+`.
pub fn threshold_from_string(signs: &[Sign]) -> Graph {
    let n = signs.len();
    let mut edges = Vec::new();
    for (i, &s) in signs.iter().enumerate() {
        if s == Sign::Plus {
            for j in 0..i {
                edges.push((j, i));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("string indices are in range")
}

fn forbidden_family(patterns: &[Pattern]) -> Vec<Graph> {
    patterns
        .iter()
        .map(|p| pattern(p).expect("fixed patterns are valid"))
        .collect()
}

/// Threshold graphs are exactly the graphs with no induced `2K_2`, `P_4`,
/// or `C_4`.
pub fn is_threshold(g: &Graph) -> bool {
    let family = forbidden_family(&[Pattern::Matching(2), Pattern::Path(4), Pattern::Cycle(4)]);
    contains_any(g, &family).expect("family non-empty").is_none()
}

/// Split graphs are exactly the graphs with no induced `2K_2`, `C_4`, or
/// `C_5`.
pub fn is_split(g: &Graph) -> bool {
    let family = forbidden_family(&[Pattern::Matching(2), Pattern::Cycle(4), Pattern::Cycle(5)]);
    contains_any(g, &family).expect("family non-empty").is_none()
}

/// Recovers a build order and sign string by repeatedly peeling an isolate
/// (sign `-`) or a dominating vertex (sign `+`) from the back; `None` when
/// the graph is not threshold. Peeling prefers the smallest-index isolate,
/// then the smallest-index dominating vertex.
pub fn threshold_string(g: &Graph) -> Option<(Vec<usize>, Vec<Sign>)> {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut order = vec![0usize; n];
    let mut signs = vec![Sign::Minus; n];
    for pos in (0..n).rev() {
        let remaining: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let deg = |v: usize| remaining.iter().filter(|&&u| u != v && g.has_edge(u, v)).count();
        let pick = if let Some(&v) = remaining.iter().find(|&&v| deg(v) == 0) {
            (v, Sign::Minus)
        } else if let Some(&v) = remaining.iter().find(|&&v| deg(v) == remaining.len() - 1) {
            (v, Sign::Plus)
        } else {
            return None;
        };
        alive[pick.0] = false;
        order[pos] = pick.0;
        signs[pos] = pick.1;
    }
    Some((order, signs))
}

/// An edge whose removal keeps a threshold graph threshold: the first
/// build-order position where a `-` is followed by a `+` yields that pair;
/// otherwise the graph is a clique plus isolates and any clique edge works.
pub fn threshold_edge_removal_witness(g: &Graph) -> Result<(usize, usize)> {
    if g.edge_count() == 0 || !is_threshold(g) {
        return Err(Error::WitnessUndefined);
    }
    let (order, signs) = threshold_string(g).expect("threshold graphs always peel");
    for i in 0..signs.len().saturating_sub(1) {
        if signs[i] == Sign::Minus && signs[i + 1] == Sign::Plus {
            return Ok((order[i], order[i + 1]));
        }
    }
    let (u, v) = pairs(g.order())
        .find(|&(u, v)| g.has_edge(u, v))
        .expect("graph has an edge");
    Ok((u, v))
}

// ---------------------------------------------------------------------------
// Catalogue registry
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum CatalogueObject {
    Graph(Graph),
    Trigraph(Trigraph),
}

/// Every named catalogue object under its stable export name.
pub fn catalogue() -> Vec<(String, CatalogueObject)> {
    let mut out: Vec<(String, CatalogueObject)> = Vec::new();
    let mut graph = |name: String, g: Graph| out.push((name, CatalogueObject::Graph(g)));
    for n in [7, 8, 13, 14, 16] {
        graph(format!("minimal_paw_{n}"), minimal_paw(n).expect("n >= 7"));
    }
    for (n, k) in [(9, 2), (10, 2), (27, 3)] {
        graph(format!("star_{n}_{k}"), star_construction(n, k).expect("valid params"));
    }
    for (tag, which) in [
        ("h", ClawGraph::H),
        ("j", ClawGraph::J),
        ("k", ClawGraph::K),
        ("l", ClawGraph::L),
    ] {
        graph(format!("claw_{tag}"), claw_catalogue(which));
    }
    for m in 5..=8 {
        graph(format!("gen_l_{m}"), generalized_l(m).expect("m >= 5"));
    }
    for k in [2, 3] {
        for j in [5, 6, 7] {
            graph(format!("icosa_{j}_{k}"), icosa(j, k).expect("valid params"));
        }
    }
    for n in [56, 57] {
        graph(format!("c4min_{n}"), c4_minimal(n).expect("n >= 56"));
    }
    for (n, k) in [(12, 2), (13, 2), (24, 3)] {
        graph(format!("matching_{n}_{k}"), matching_construction(n, k).expect("valid params"));
    }
    for (n, k) in [(18, 3), (20, 3), (27, 4)] {
        graph(format!("cycles_{n}_{k}"), cycles_construction(n, k).expect("valid params"));
    }
    let mut trigraph = |name: String, t: Trigraph| out.push((name, CatalogueObject::Trigraph(t)));
    for n in 4..=6 {
        trigraph(
            format!("table1_paw_n{n}"),
            table_trigraphs(TableTarget::Paw, n).expect("supported n"),
        );
    }
    for n in 4..=8 {
        trigraph(
            format!("table2_claw_n{n}"),
            table_trigraphs(TableTarget::Claw, n).expect("supported n"),
        );
    }
    trigraph("c5_trigraph_n10".to_string(), c5_trigraph10());
    out
}

/// Resolves a catalogue id (as listed by [`catalogue`]) or a parametric id
/// like `icosa_6_3`, `minimal_paw_21`, `star_81_4`, `gen_l_9`,
/// `cycles_34_3`, `c4min_60`, or `matching_36_4`. Plain pattern names build
/// their pattern graph.
pub fn construct_by_id(id: &str) -> Result<CatalogueObject> {
    let fail = || Error::UnknownCatalogueId(id.to_string());
    let tail_nums = |prefix: &str| -> Option<Vec<usize>> {
        id.strip_prefix(prefix)
            .map(|rest| rest.split('_').map(|x| x.parse::<usize>()).collect::<std::result::Result<Vec<_>, _>>())
            .and_then(|r| r.ok())
    };
    if let Some(nums) = tail_nums("minimal_paw_") {
        if let [n] = nums[..] {
            return Ok(CatalogueObject::Graph(minimal_paw(n)?));
        }
    }
    if let Some(nums) = tail_nums("star_") {
        if let [n, k] = nums[..] {
            return Ok(CatalogueObject::Graph(star_construction(n, k)?));
        }
    }
    if let Some(nums) = tail_nums("gen_l_") {
        if let [m] = nums[..] {
            return Ok(CatalogueObject::Graph(generalized_l(m)?));
        }
    }
    if let Some(nums) = tail_nums("icosa_") {
        if let [j, k] = nums[..] {
            return Ok(CatalogueObject::Graph(icosa(j, k)?));
        }
    }
    if let Some(nums) = tail_nums("c4min_") {
        if let [n] = nums[..] {
            return Ok(CatalogueObject::Graph(c4_minimal(n)?));
        }
    }
    if let Some(nums) = tail_nums("matching_") {
        if let [n, k] = nums[..] {
            return Ok(CatalogueObject::Graph(matching_construction(n, k)?));
        }
    }
    if let Some(nums) = tail_nums("cycles_") {
        if let [n, k] = nums[..] {
            return Ok(CatalogueObject::Graph(cycles_construction(n, k)?));
        }
        if let [n, k, t] = nums[..] {
            return Ok(CatalogueObject::Graph(cycles_subquadratic(n, k, t)?));
        }
    }
    if let Some(nums) = tail_nums("table1_paw_n") {
        if let [n] = nums[..] {
            return Ok(CatalogueObject::Trigraph(table_trigraphs(TableTarget::Paw, n)?));
        }
    }
    if let Some(nums) = tail_nums("table2_claw_n") {
        if let [n] = nums[..] {
            return Ok(CatalogueObject::Trigraph(table_trigraphs(TableTarget::Claw, n)?));
        }
    }
    if id == "c5_trigraph_n10" {
        return Ok(CatalogueObject::Trigraph(c5_trigraph10()));
    }
    for (tag, which) in [
        ("claw_h", ClawGraph::H),
        ("claw_j", ClawGraph::J),
        ("claw_k", ClawGraph::K),
        ("claw_l", ClawGraph::L),
    ] {
        if id == tag {
            return Ok(CatalogueObject::Graph(claw_catalogue(which)));
        }
    }
    if let Ok(p) = Pattern::parse(id) {
        return Ok(CatalogueObject::Graph(pattern(&p)?));
    }
    Err(fail())
}

/// Claw upper-bound witness with `2n`, `2n - 2`, or `2n + 2` edges,
/// depending on `n mod 3`; undefined below 9 and at 14 and 17.
pub fn claw_witness(n: usize) -> Option<Graph> {
    fn zero_mod_three(m: usize) -> Graph {
        // m ≡ 0 (mod 3), m >= 9: copies of H plus one of H, K, L
        let h = claw_catalogue(ClawGraph::H);
        let (tail, tail_n) = match m % 9 {
            0 => (h.clone(), 9),
            3 => (claw_catalogue(ClawGraph::K), 12),
            _ => (claw_catalogue(ClawGraph::L), 15),
        };
        let mut blocks = vec![h; (m - tail_n) / 9];
        blocks.push(tail);
        disjoint_union(&blocks)
    }
    if n < 9 {
        return None;
    }
    match n % 3 {
        0 => Some(zero_mod_three(n)),
        1 => Some(disjoint_union(&[zero_mod_three(n - 1), Graph::empty(1)])),
        _ => {
            if n == 11 {
                Some(claw_catalogue(ClawGraph::J))
            } else if n >= 20 {
                Some(disjoint_union(&[claw_catalogue(ClawGraph::J), zero_mod_three(n - 11)]))
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;

    #[test]
    fn paw_construction_examples() {
        let g = paw_construction(&PawSpec { isolated: false, components: vec![vec![1, 3, 3]] }).unwrap();
        assert_eq!((g.order(), g.edge_count()), (7, 15));

        let g = paw_construction(&PawSpec { isolated: true, components: vec![vec![1, 3, 3]] }).unwrap();
        assert_eq!((g.order(), g.edge_count()), (8, 15));

        let g = paw_construction(&PawSpec {
            isolated: false,
            components: vec![vec![1, 3, 3], vec![1, 3, 3]],
        })
        .unwrap();
        assert_eq!((g.order(), g.edge_count()), (14, 30));

        assert!(paw_construction(&PawSpec { isolated: false, components: vec![vec![3, 3]] }).is_err());
        assert!(paw_construction(&PawSpec { isolated: false, components: vec![vec![1, 1, 3]] }).is_err());
        assert!(paw_construction(&PawSpec { isolated: false, components: vec![vec![2, 3, 3]] }).is_err());
    }

    #[test]
    fn minimal_paw_examples() {
        let g = minimal_paw(7).unwrap();
        assert!(isomorphic(&g, &complete_multipartite(&[1, 3, 3]).unwrap()).unwrap());
        assert_eq!(minimal_paw(16).unwrap().edge_count(), 34);
        assert_eq!(minimal_paw(13).unwrap().edge_count(), 35);
        assert_eq!(minimal_paw(14).unwrap().edge_count(), 30);
        assert!(minimal_paw(6).is_err());
        // non-monotone triple
        assert!(sis_paw_formula(14) < sis_paw_formula(16));
        assert!(sis_paw_formula(16) < sis_paw_formula(13));
    }

    #[test]
    fn recognize_paw_shape_examples() {
        let yes = disjoint_union(&[complete_multipartite(&[1, 3, 3]).unwrap(), Graph::empty(1)]);
        assert!(recognize_paw_shape(&yes));
        assert!(!recognize_paw_shape(&complete_multipartite(&[2, 3, 3]).unwrap()));
        assert!(!recognize_paw_shape(&claw_catalogue(ClawGraph::H)));
    }

    #[test]
    fn star_construction_examples() {
        let g = star_construction(9, 2).unwrap();
        assert!(isomorphic(&g, &claw_catalogue(ClawGraph::H)).unwrap());

        let g = star_construction(10, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (10, 21));
        assert_eq!(g.degree(9), 3);

        let g = star_construction(27, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (27, 81));
        assert!(g.degrees().iter().all(|&d| d == 6));

        assert!(star_construction(8, 2).is_err());
        assert!(star_construction(9, 1).is_err());
    }

    #[test]
    fn claw_catalogue_counts() {
        let h = claw_catalogue(ClawGraph::H);
        assert_eq!((h.order(), h.edge_count()), (9, 18));
        let j = claw_catalogue(ClawGraph::J);
        assert_eq!((j.order(), j.edge_count()), (11, 24));
        let mut degs = j.degrees();
        degs.sort_unstable();
        assert!(degs.iter().all(|&d| d == 4 || d == 5));
        let k = claw_catalogue(ClawGraph::K);
        assert_eq!((k.order(), k.edge_count()), (12, 24));
        assert!(k.degrees().iter().all(|&d| d == 4));
        let l = claw_catalogue(ClawGraph::L);
        assert_eq!((l.order(), l.edge_count()), (15, 30));

        let g = generalized_l(6).unwrap();
        assert_eq!((g.order(), g.edge_count()), (18, 36));
        assert!(generalized_l(4).is_err());
    }

    #[test]
    fn icosa_examples() {
        let ico = icosa(5, 2).unwrap();
        assert_eq!((ico.order(), ico.edge_count()), (12, 30));
        assert!(ico.degrees().iter().all(|&d| d == 5));

        let g = icosa(7, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (16, 42));

        assert_eq!(icosa(6, 3).unwrap().order(), 21);
        assert!(icosa(4, 2).is_err());
        assert!(icosa(5, 1).is_err());
    }

    #[test]
    fn c4_minimal_examples() {
        let g = c4_minimal(56).unwrap();
        assert_eq!((g.order(), g.edge_count()), (56, 392));
        let g = c4_minimal(57).unwrap();
        assert_eq!((g.order(), g.edge_count()), (57, 400));
        assert!(g.degrees().iter().all(|&d| d >= 5));
        assert!(c4_minimal(55).is_err());
    }

    #[test]
    fn matching_construction_examples() {
        let g = matching_construction(12, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (12, 36));
        let g = matching_construction(13, 2).unwrap();
        assert_eq!((g.order(), g.edge_count()), (13, 36));
        let g = matching_construction(24, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (24, 72));
        assert!(matching_construction(11, 2).is_err());
    }

    #[test]
    fn cycles_construction_examples() {
        let g = cycles_construction(18, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (18, 57));
        let g = cycles_construction(20, 3).unwrap();
        assert_eq!((g.order(), g.edge_count()), (20, 70));
        assert_eq!(cycles_construction(27, 4).unwrap().order(), 27);
        assert!(cycles_construction(17, 3).is_err());
    }

    #[test]
    fn cycles_subquadratic_shape() {
        // smallest admissible case: n = 256, k = 3, t = 4
        let g = cycles_subquadratic(256, 3, 4).unwrap();
        assert_eq!(g.order(), 256);
        // K4 x K64 intact: ceil(sqrt(256)) = 16, 16/4 = 4, 4*16 = 64
        assert_eq!(g.edge_count(), 64 * 6 + 4 * (64 * 63 / 2));
        assert!(cycles_subquadratic(250, 3, 4).is_err());
        assert!(cycles_subquadratic(256, 3, 5).is_err());
    }

    #[test]
    fn table_trigraph_shapes() {
        let t = table_trigraphs(TableTarget::Paw, 4).unwrap();
        assert_eq!(t.gray_count(), 2);
        let t = table_trigraphs(TableTarget::Paw, 5).unwrap();
        assert_eq!(t.gray_count(), 1);
        // the two realizations at n = 5: K_{2,3} and K_{2,3} plus the
        // edge inside the 2-side
        let rs: Vec<Graph> = t.realizations().unwrap().map(|(_, g)| g).collect();
        assert_eq!(rs.len(), 2);
        assert!(isomorphic(&rs[0], &complete_multipartite(&[2, 3]).unwrap()).unwrap());
        assert_eq!(rs[1].edge_count(), 7);

        for n in 4..=8 {
            let t = table_trigraphs(TableTarget::Claw, n).unwrap();
            assert_eq!(t.gray_count(), if n <= 6 { 3 } else { 2 });
        }
        assert!(table_trigraphs(TableTarget::Paw, 7).is_err());
        assert!(table_trigraphs(TableTarget::Claw, 9).is_err());
    }

    #[test]
    fn c5_trigraph_shape() {
        let t = c5_trigraph10();
        assert_eq!(t.order(), 10);
        assert_eq!(t.gray_count(), 1);
        assert_eq!(t.count(crate::trigraph::EdgeColor::Black), 22);
    }

    #[test]
    fn threshold_examples() {
        let p3 = threshold_from_string(&parse_signs("--+").unwrap());
        assert!(isomorphic(&p3, &pattern(&Pattern::Path(3)).unwrap()).unwrap());
        assert_eq!(p3.degree(2), 2);

        assert!(!is_threshold(&pattern(&Pattern::Path(4)).unwrap()));
        assert!(is_threshold(&p3));

        // witness removal keeps threshold
        for s in ["-++", "+-+", "--++", "-+-+", "++++"] {
            let g = threshold_from_string(&parse_signs(s).unwrap());
            if g.edge_count() == 0 {
                continue;
            }
            let (u, v) = threshold_edge_removal_witness(&g).unwrap();
            assert!(g.has_edge(u, v), "witness for {s} is not an edge");
            assert!(is_threshold(&g.flip_edge(u, v).unwrap()), "removal broke {s}");
        }
        assert!(threshold_edge_removal_witness(&Graph::empty(3)).is_err());
        assert!(threshold_edge_removal_witness(&pattern(&Pattern::Path(4)).unwrap()).is_err());
    }

    #[test]
    fn split_examples() {
        let split = join(&pattern(&Pattern::Complete(3)).unwrap(), &Graph::empty(2));
        assert!(is_split(&split));
        assert!(!is_split(&pattern(&Pattern::Matching(2)).unwrap()));
        assert!(is_split(&pattern(&Pattern::Path(4)).unwrap()));
    }

    use crate::graph::join;

    #[test]
    fn catalogue_ids_resolve() {
        for (name, _) in catalogue() {
            assert!(construct_by_id(&name).is_ok(), "id {name} did not resolve");
        }
        assert!(construct_by_id("icosa_6_3").is_ok());
        assert!(construct_by_id("paw").is_ok());
        assert!(construct_by_id("nonsense_42").is_err());
    }

    #[test]
    fn claw_witness_edge_counts() {
        for n in 9..=40 {
            match claw_witness(n) {
                Some(g) => {
                    assert_eq!(g.order(), n);
                    let expect = match n % 3 {
                        0 => 2 * n,
                        1 => 2 * n - 2,
                        _ => 2 * n + 2,
                    };
                    assert_eq!(g.edge_count(), expect, "witness edges at n = {n}");
                }
                None => assert!(n == 14 || n == 17, "missing witness at n = {n}"),
            }
        }
    }
}
