//! Constructors and recognizers for the extremal graph families:
//!
//! * the bipartite-plus-matching family attaining the double-domination
//!   lower bound `(4n - 2m + e - p)/3` (built from [`OmegaParams`],
//!   recognized by [`recognize_equality_family`]);
//! * its tree restriction (built by [`build_equality_tree`]);
//! * the regular multipartite family attaining the k-tuple domatic upper
//!   bound ([`build_domatic_equality_graph`]);
//! * the family characterizing graphs whose domatic number reaches
//!   `min_degree + 1` ([`build_full_graph`]), and the perfect-matching
//!   decomposition of regular such graphs ([`regular_full_decomposition`]).

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{Graph, GraphBuilder};
use crate::slater;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Subset search in the recognizer is capped at this order.
pub const RECOGNIZER_MAX_N: usize = 16;

/// Parameters for the equality family: a bipartite core with one side `X`
/// of degree-2 vertices and one side `Y`, a matching `M` added inside `Y`,
/// and pendant vertices attached to the `Y`-vertices `M` leaves uncovered.
#[derive(Clone, Debug)]
pub struct OmegaParams {
    /// Number of `Y`-vertices (indices `0..y_count`).
    pub y_count: usize,
    /// Each `X`-vertex's two distinct `Y`-neighbors.
    pub x_edges: Vec<(usize, usize)>,
    /// Disjoint matched pairs inside `Y`.
    pub matching: Vec<(usize, usize)>,
    /// Pendants per `Y`-vertex: zero exactly on matched vertices, at least
    /// one elsewhere.
    pub pendants: Vec<usize>,
}

impl OmegaParams {
    pub fn validate(&self) -> Result<()> {
        let y = self.y_count;
        if y == 0 {
            return Err(Error::InvalidConstruction("y_count: must be at least 1".into()));
        }
        if self.pendants.len() != y {
            return Err(Error::InvalidConstruction(format!(
                "pendants: expected {y} entries, got {}",
                self.pendants.len()
            )));
        }
        let mut saturated = vec![false; y];
        for &(u, v) in &self.matching {
            if u >= y || v >= y || u == v {
                return Err(Error::InvalidConstruction(format!(
                    "matching: pair ({u},{v}) is not two distinct Y-indices"
                )));
            }
            if saturated[u] || saturated[v] {
                return Err(Error::InvalidConstruction(
                    "matching: pairs are not disjoint".into(),
                ));
            }
            saturated[u] = true;
            saturated[v] = true;
        }
        let mut covered = vec![false; y];
        for &(u, v) in &self.x_edges {
            if u >= y || v >= y || u == v {
                return Err(Error::InvalidConstruction(format!(
                    "x_edges: pair ({u},{v}) is not two distinct Y-indices"
                )));
            }
            covered[u] = true;
            covered[v] = true;
        }
        for v in 0..y {
            if saturated[v] && self.pendants[v] != 0 {
                return Err(Error::InvalidConstruction(format!(
                    "pendants: matched Y-vertex {v} must not carry pendants"
                )));
            }
            if !saturated[v] && self.pendants[v] == 0 {
                return Err(Error::InvalidConstruction(format!(
                    "pendants: unmatched Y-vertex {v} needs at least one pendant"
                )));
            }
            if saturated[v] && !covered[v] {
                return Err(Error::InvalidConstruction(format!(
                    "matching: matched Y-vertex {v} has no X-neighbor"
                )));
            }
            if !self.x_edges.is_empty() && !covered[v] {
                return Err(Error::InvalidConstruction(format!(
                    "x_edges: Y-vertex {v} has no X-neighbor while X is nonempty"
                )));
            }
        }
        Ok(())
    }
}

/// The structured decomposition witnessing membership in the equality
/// family, in graph-vertex indices.
#[derive(Clone, Debug, Serialize)]
pub struct OmegaWitness {
    /// The double dominating set: all vertices outside the degree-2 side.
    pub dominating_set: Vec<usize>,
    /// The degree-2 side (independent, two neighbors each inside the set).
    pub independent: Vec<usize>,
    /// Matched pairs (the K2-components avoiding ends and penultimates).
    pub matching: Vec<(usize, usize)>,
    /// Star components as (center, leaves).
    pub stars: Vec<(usize, Vec<usize>)>,
}

/// Builds the equality-family member described by `params` along with its
/// witness. Vertex layout: `Y` first, then `X`, then pendants grouped by
/// their `Y`-vertex.
pub fn build_omega(params: &OmegaParams) -> Result<(Graph, OmegaWitness)> {
    params.validate()?;
    let y = params.y_count;
    let x = params.x_edges.len();
    let total_pendants: usize = params.pendants.iter().sum();
    let n = y + x + total_pendants;
    let mut b = GraphBuilder::new(n);
    for (i, &(u, v)) in params.x_edges.iter().enumerate() {
        b.add_edge(y + i, u);
        b.add_edge(y + i, v);
    }
    let mut matching = Vec::new();
    for &(u, v) in &params.matching {
        b.add_edge(u, v);
        matching.push((u.min(v), u.max(v)));
    }
    let mut stars = Vec::new();
    let mut next = y + x;
    for (v, &count) in params.pendants.iter().enumerate() {
        if count > 0 {
            let leaves: Vec<usize> = (next..next + count).collect();
            for &leaf in &leaves {
                b.add_edge(v, leaf);
            }
            next += count;
            stars.push((v, leaves));
        }
    }
    let g = b.build();
    let dominating_set: Vec<usize> = (0..y).chain(y + x..n).collect();
    let witness = OmegaWitness {
        independent: (y..y + x).collect(),
        dominating_set,
        matching,
        stars,
    };
    debug_assert!({
        let s = VertexSet::from_members(n, &witness.dominating_set);
        exact::is_ktuple_dominating(&g, &s, 2)
    });
    debug_assert_eq!(
        3 * witness.dominating_set.len() as i64,
        slater::size_bound_numerator(&crate::graph::DegreeProfile::new(&g)),
        "the witness size must equal the size bound exactly"
    );
    Ok((g, witness))
}

/// Searches for the equality-family decomposition of `g`: a set `A`
/// containing every end-vertex and penultimate vertex such that `G[A]`
/// splits into K2-components and stars (leaves exactly the end-vertices,
/// centers exactly the penultimate vertices) while every vertex outside `A`
/// has degree 2 with both neighbors in `A`.
pub fn recognize_equality_family(g: &Graph) -> Result<Option<OmegaWitness>> {
    let n = g.n();
    if n == 0 || g.min_degree() == 0 {
        return Err(Error::Undefined(
            "the equality family is defined for graphs with minimum degree >= 1".into(),
        ));
    }
    if n > RECOGNIZER_MAX_N {
        return Err(Error::TooLarge(format!(
            "recognition is capped at n <= {RECOGNIZER_MAX_N} (got {n})"
        )));
    }
    let ends: Vec<bool> = (0..n).map(|v| g.degree(v) == 1).collect();
    let penult: Vec<bool> = (0..n)
        .map(|v| g.neighbors(v).any(|u| ends[u]))
        .collect();
    let base: Vec<usize> = (0..n).filter(|&v| ends[v] || penult[v]).collect();
    let free: Vec<usize> = (0..n).filter(|&v| !ends[v] && !penult[v]).collect();

    'subsets: for mask in 0..(1u32 << free.len()) {
        let mut in_a = vec![false; n];
        for &v in &base {
            in_a[v] = true;
        }
        for (i, &v) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                in_a[v] = true;
            }
        }
        for v in 0..n {
            if in_a[v] {
                if penult[v] {
                    // Penultimate vertices may touch A only through their
                    // pendant ends.
                    if g.neighbors(v).any(|u| in_a[u] != ends[u]) {
                        continue 'subsets;
                    }
                } else if g.neighbors(v).filter(|&u| in_a[u]).count() != 1 {
                    continue 'subsets;
                }
            } else {
                if g.degree(v) != 2 || g.neighbors(v).any(|u| !in_a[u]) {
                    continue 'subsets;
                }
            }
        }
        return Ok(Some(decompose(g, &in_a, &ends, &penult)));
    }
    Ok(None)
}

/// Splits the verified set into matching pairs and stars.
fn decompose(g: &Graph, in_a: &[bool], ends: &[bool], penult: &[bool]) -> OmegaWitness {
    let n = g.n();
    let mut matching = Vec::new();
    let mut stars = Vec::new();
    let mut claimed = vec![false; n];
    for v in 0..n {
        if !in_a[v] || claimed[v] {
            continue;
        }
        if penult[v] {
            // A star center; in the two-vertex component where both sides
            // are ends, the smaller index plays the center.
            let leaves: Vec<usize> = g.neighbors(v).filter(|&u| in_a[u]).collect();
            if leaves.len() == 1 && ends[v] {
                let u = leaves[0];
                if claimed[u] || u < v {
                    continue;
                }
            }
            claimed[v] = true;
            for &u in &leaves {
                claimed[u] = true;
            }
            stars.push((v, leaves));
        } else if !ends[v] {
            let partner = g.neighbors(v).find(|&u| in_a[u]).unwrap();
            if !penult[partner] && !ends[partner] {
                claimed[v] = true;
                claimed[partner] = true;
                matching.push((v.min(partner), v.max(partner)));
            }
        }
    }
    OmegaWitness {
        dominating_set: (0..n).filter(|&v| in_a[v]).collect(),
        independent: (0..n).filter(|&v| !in_a[v]).collect(),
        matching,
        stars,
    }
}

/// Builds the tree member of the equality family: `a` matched pairs, stars
/// with the given pendant counts, and `a + s - 1` connector vertices each
/// joined to two distinct anchors. Anchors are numbered `0..2a` for the
/// pair vertices (pair `i` is `{2i, 2i+1}`) followed by `2a..2a+s` for the
/// star centers. When `a >= 1`, every pair must meet at least one
/// connector; the result must be a tree.
pub fn build_equality_tree(
    a: usize,
    star_pendants: &[usize],
    connectors: &[(usize, usize)],
) -> Result<Graph> {
    let s = star_pendants.len();
    if a + s == 0 {
        return Err(Error::InvalidConstruction(
            "need at least one pair or star".into(),
        ));
    }
    if star_pendants.contains(&0) {
        return Err(Error::InvalidConstruction(
            "every star needs at least one pendant".into(),
        ));
    }
    if connectors.len() != a + s - 1 {
        return Err(Error::InvalidConstruction(format!(
            "need exactly {} connectors, got {}",
            a + s - 1,
            connectors.len()
        )));
    }
    let anchors = 2 * a + s;
    for &(u, v) in connectors {
        if u >= anchors || v >= anchors || u == v {
            return Err(Error::InvalidConstruction(format!(
                "connector ({u},{v}) is not two distinct anchors"
            )));
        }
    }
    for pair in 0..a {
        let touched = connectors
            .iter()
            .any(|&(u, v)| u / 2 == pair && u < 2 * a || v / 2 == pair && v < 2 * a);
        if !touched {
            return Err(Error::InvalidConstruction(format!(
                "pair {pair} meets no connector"
            )));
        }
    }
    let total_pendants: usize = star_pendants.iter().sum();
    let n = anchors + total_pendants + connectors.len();
    let mut b = GraphBuilder::new(n);
    for i in 0..a {
        b.add_edge(2 * i, 2 * i + 1);
    }
    let mut next = anchors;
    for (j, &count) in star_pendants.iter().enumerate() {
        for leaf in next..next + count {
            b.add_edge(2 * a + j, leaf);
        }
        next += count;
    }
    for (c, &(u, v)) in connectors.iter().enumerate() {
        b.add_edge(next + c, u);
        b.add_edge(next + c, v);
    }
    let g = b.build();
    if g.m() != n - 1 || !g.is_connected() {
        return Err(Error::InvalidConstruction(
            "connectors must join the components into a tree (no cycles, no gaps)".into(),
        ));
    }
    Ok(g)
}

/// Draws small random valid [`OmegaParams`] (order at most 14, so the
/// brute-force oracle can certify every draw).
pub fn random_omega_params(seed: u64) -> OmegaParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let y_count = rng.gen_range(1..=4);
    let mut order: Vec<usize> = (0..y_count).collect();
    order.shuffle(&mut rng);
    let max_pairs = y_count / 2;
    let pair_count = if max_pairs == 0 { 0 } else { rng.gen_range(0..=max_pairs) };
    let matching: Vec<(usize, usize)> = (0..pair_count)
        .map(|i| (order[2 * i], order[2 * i + 1]))
        .collect();
    let mut saturated = vec![false; y_count];
    for &(u, v) in &matching {
        saturated[u] = true;
        saturated[v] = true;
    }
    let mut pendants = vec![0usize; y_count];
    let mut extra_budget = 1usize;
    for v in 0..y_count {
        if !saturated[v] {
            let extra = if extra_budget > 0 { rng.gen_range(0..=1) } else { 0 };
            extra_budget -= extra;
            pendants[v] = 1 + extra;
        }
    }
    let want_x = pair_count > 0 || (y_count >= 2 && rng.gen_bool(0.7));
    let mut x_edges: Vec<(usize, usize)> = Vec::new();
    if want_x && y_count >= 2 {
        let mut covered = vec![false; y_count];
        for v in 0..y_count {
            if !covered[v] {
                let mut other = rng.gen_range(0..y_count - 1);
                if other >= v {
                    other += 1;
                }
                x_edges.push((v, other));
                covered[v] = true;
                covered[other] = true;
            }
        }
        for _ in 0..rng.gen_range(0..=1) {
            let u = rng.gen_range(0..y_count);
            let mut v = rng.gen_range(0..y_count - 1);
            if v >= u {
                v += 1;
            }
            x_edges.push((u, v));
        }
    }
    let params = OmegaParams { y_count, x_edges, matching, pendants };
    debug_assert!(params.validate().is_ok());
    params
}

/// Builds the regular multipartite member of the domatic equality family:
/// `r` parts, each a seeded `(k-1)`-regular circulant on `q` vertices, with
/// every vertex of one part joined to `k` cyclically consecutive vertices
/// of every other part. The result is `(kr-1)`-regular with k-tuple
/// domination number `q` and k-tuple domatic number `r`.
pub fn build_domatic_equality_graph(k: usize, r: usize, q: usize, seed: u64) -> Result<Graph> {
    if k == 0 || r == 0 {
        return Err(Error::InvalidConstruction("k and r must be at least 1".into()));
    }
    if q < k {
        return Err(Error::InvalidConstruction(format!(
            "parts of order {q} cannot host {k} cross-neighbors"
        )));
    }
    if !(q * (k - 1)).is_multiple_of(2) {
        return Err(Error::InvalidConstruction(format!(
            "no ({}-)regular graph on {q} vertices exists (odd degree sum)",
            k - 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = r * q;
    let mut b = GraphBuilder::new(n);
    for part in 0..r {
        let offsets = random_regular_offsets(k - 1, q, &mut rng);
        for t in 0..q {
            for &o in &offsets {
                b.add_edge(part * q + t, part * q + (t + o) % q);
            }
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            for t in 0..q {
                for s in 0..k {
                    b.add_edge(i * q + t, j * q + (t + s) % q);
                }
            }
        }
    }
    let g = b.build();
    debug_assert!(
        (0..n).all(|v| g.degree(v) == k * r - 1),
        "the construction must be (kr-1)-regular"
    );
    Ok(g)
}

/// Circulant offsets realizing a `d`-regular graph on `q` vertices, chosen
/// at random among the valid offset sets.
fn random_regular_offsets(d: usize, q: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    debug_assert!(d < q && (d * q).is_multiple_of(2));
    let needs_half = d % 2 == 1;
    debug_assert!(!needs_half || q.is_multiple_of(2));
    let full_needed = if needs_half { (d - 1) / 2 } else { d / 2 };
    let top = if q.is_multiple_of(2) { q / 2 - 1 } else { (q - 1) / 2 };
    let mut candidates: Vec<usize> = (1..=top).collect();
    candidates.shuffle(rng);
    debug_assert!(candidates.len() >= full_needed);
    let mut offsets: Vec<usize> = candidates.into_iter().take(full_needed).collect();
    if needs_half {
        offsets.push(q / 2);
    }
    offsets.sort_unstable();
    offsets
}

/// An edge between two part-local endpoints, written
/// `((part, vertex), (part, vertex))`.
pub type CrossEdge = ((usize, usize), (usize, usize));

/// Builds a member of the family characterizing graphs with domatic number
/// `min_degree + 1`: disjoint parts, a designated vertex `v` isolated
/// inside part `anchor_part` and joined to vertex 0 of every other part,
/// plus caller-chosen cross edges avoiding `v`. Every vertex must end up
/// with a neighbor in every other part; violations are reported by vertex
/// and part.
pub fn build_full_graph(
    parts: &[Graph],
    anchor_part: usize,
    v: usize,
    cross_edges: &[CrossEdge],
) -> Result<Graph> {
    let r = parts.len();
    if r == 0 {
        return Err(Error::InvalidConstruction("need at least one part".into()));
    }
    if parts.iter().any(|p| p.n() == 0) {
        return Err(Error::InvalidConstruction("parts must be nonempty".into()));
    }
    if anchor_part >= r || v >= parts[anchor_part].n() {
        return Err(Error::InvalidConstruction(
            "anchor vertex out of range".into(),
        ));
    }
    if parts[anchor_part].degree(v) != 0 {
        return Err(Error::InvalidConstruction(format!(
            "vertex {v} must be isolated inside part {anchor_part}"
        )));
    }
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.n();
            Some(o)
        })
        .collect();
    let n: usize = parts.iter().map(Graph::n).sum();
    let anchor = offsets[anchor_part] + v;
    let mut b = GraphBuilder::new(n);
    for (i, p) in parts.iter().enumerate() {
        for (x, y) in p.edges() {
            b.add_edge(offsets[i] + x, offsets[i] + y);
        }
    }
    for (j, &off) in offsets.iter().enumerate() {
        if j != anchor_part {
            b.add_edge(anchor, off);
        }
    }
    for &((pa, xa), (pb, xb)) in cross_edges {
        if pa >= r || pb >= r || xa >= parts[pa].n() || xb >= parts[pb].n() {
            return Err(Error::InvalidConstruction(
                "cross edge endpoint out of range".into(),
            ));
        }
        if pa == pb {
            return Err(Error::InvalidConstruction(
                "cross edges must join different parts".into(),
            ));
        }
        let (ga, gb) = (offsets[pa] + xa, offsets[pb] + xb);
        if ga == anchor || gb == anchor {
            return Err(Error::InvalidConstruction(
                "cross edges must avoid the anchor vertex".into(),
            ));
        }
        b.add_edge(ga, gb);
    }
    let g = b.build();
    let part_of = |w: usize| -> usize {
        (0..r).rfind(|&i| offsets[i] <= w).unwrap()
    };
    for w in 0..n {
        let t = part_of(w);
        for t2 in 0..r {
            if t2 != t {
                let lo = offsets[t2];
                let hi = lo + parts[t2].n();
                if !g.neighbors(w).any(|u| (lo..hi).contains(&u)) {
                    return Err(Error::InvalidConstruction(format!(
                        "vertex {w} (part {t}) has no neighbor in part {t2}"
                    )));
                }
            }
        }
    }
    debug_assert!(g.n() > exact::DOMATIC_MAX_N || exact::is_full(&g).unwrap());
    Ok(g)
}

/// Seeded parameters accepted by [`build_full_graph`]: part graphs, the
/// anchor part and its isolated vertex, and enough cross edges that every
/// vertex meets every other part.
#[derive(Clone, Debug)]
pub struct ThetaParams {
    pub parts: Vec<Graph>,
    pub anchor_part: usize,
    pub anchor_vertex: usize,
    pub cross_edges: Vec<CrossEdge>,
}

/// Draws a random member of the full-graph family: 2–4 parts of one or two
/// vertices each (the anchor part carries one extra, isolated, vertex),
/// random edges inside parts, and random cross edges topped up until every
/// vertex has a neighbor in every other part. The same seed always yields
/// the same parameters.
pub fn random_theta_params(seed: u64) -> ThetaParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = rng.gen_range(2..=4);
    let anchor_part = rng.gen_range(0..r);
    // `base[t]` counts the ordinary vertices of part `t`; the anchor vertex
    // is appended after them.
    let base: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=2)).collect();
    let anchor_vertex = base[anchor_part];
    let mut parts = Vec::with_capacity(r);
    for (t, &b) in base.iter().enumerate() {
        let size = if t == anchor_part { b + 1 } else { b };
        let mut builder = GraphBuilder::new(size);
        for x in 0..b {
            for y in (x + 1)..b {
                if rng.gen_bool(0.4) {
                    builder.add_edge(x, y);
                }
            }
        }
        parts.push(builder.build());
    }
    let mut cross: Vec<CrossEdge> = Vec::new();
    let max_size = base.iter().max().copied().unwrap_or(0) + 1;
    let mut covered = vec![vec![vec![false; r]; max_size]; r];
    // The builder itself joins the anchor vertex to vertex 0 of every other
    // part, covering those vertices toward the anchor part.
    for (t, cov) in covered.iter_mut().enumerate() {
        if t != anchor_part {
            cov[0][anchor_part] = true;
        }
    }
    for t1 in 0..r {
        for t2 in (t1 + 1)..r {
            for x in 0..base[t1] {
                for y in 0..base[t2] {
                    if rng.gen_bool(0.3) {
                        cross.push(((t1, x), (t2, y)));
                        covered[t1][x][t2] = true;
                        covered[t2][y][t1] = true;
                    }
                }
            }
            for x in 0..base[t1] {
                if !covered[t1][x][t2] {
                    let y = rng.gen_range(0..base[t2]);
                    cross.push(((t1, x), (t2, y)));
                    covered[t1][x][t2] = true;
                    covered[t2][y][t1] = true;
                }
            }
            for (y, cov_y) in covered[t2].iter_mut().enumerate().take(base[t2]) {
                if !cov_y[t1] {
                    let x = rng.gen_range(0..base[t1]);
                    cross.push(((t1, x), (t2, y)));
                    cov_y[t1] = true;
                }
            }
        }
    }
    ThetaParams { parts, anchor_part, anchor_vertex, cross_edges: cross }
}

/// For a regular graph whose domatic number reaches `min_degree + 1`:
/// the partition into `degree + 1` independent parts whose pairwise edges
/// form perfect matchings. `None` when the graph is not full; an error if
/// the graph is not regular. The structure is forced, so it is asserted.
pub fn regular_full_decomposition(g: &Graph) -> Result<Option<Vec<Vec<usize>>>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Undefined("empty graph".into()));
    }
    let r = g.degree(0);
    if (0..n).any(|v| g.degree(v) != r) {
        return Err(Error::InvalidConstruction(
            "decomposition requires a regular graph".into(),
        ));
    }
    let Some(witness) = exact::full_structure_witness(g)? else {
        return Ok(None);
    };
    let partition = witness.partition;
    let mut part_of = vec![0usize; n];
    for (i, part) in partition.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    for v in 0..n {
        let mut per_part = vec![0usize; partition.len()];
        for u in g.neighbors(v) {
            per_part[part_of[u]] += 1;
        }
        debug_assert_eq!(per_part[part_of[v]], 0, "parts of a regular full graph are independent");
        debug_assert!(
            (0..partition.len()).all(|p| p == part_of[v] || per_part[p] == 1),
            "cross edges of a regular full graph form perfect matchings"
        );
    }
    debug_assert!(partition.windows(2).all(|w| w[0].len() == w[1].len()));
    Ok(Some(partition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn p2_params() -> OmegaParams {
        OmegaParams {
            y_count: 1,
            x_edges: vec![],
            matching: vec![],
            pendants: vec![1],
        }
    }

    #[test]
    fn minimal_member_is_p2() {
        let (g, w) = build_omega(&p2_params()).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(w.dominating_set, vec![0, 1]);
        assert!(w.matching.is_empty());
        assert_eq!(w.stars.len(), 1);
    }

    #[test]
    fn params_validation_names_the_field() {
        let bad = OmegaParams {
            y_count: 2,
            x_edges: vec![],
            matching: vec![(0, 1)],
            pendants: vec![0, 0],
        };
        let msg = bad.validate().unwrap_err().to_string();
        assert!(msg.contains("matching"), "{msg}");
        let bad = OmegaParams {
            y_count: 1,
            x_edges: vec![],
            matching: vec![],
            pendants: vec![0],
        };
        assert!(bad.validate().unwrap_err().to_string().contains("pendants"));
    }

    #[test]
    fn figure_sized_tree_member() {
        // Three matched pairs, two stars (3 and 2 pendants), four degree-2
        // connectors: a 17-vertex tree whose witness has 13 vertices.
        let params = OmegaParams {
            y_count: 8,
            x_edges: vec![(5, 6), (2, 1), (4, 3), (0, 7)],
            matching: vec![(0, 1), (2, 3), (4, 5)],
            pendants: vec![0, 0, 0, 0, 0, 0, 3, 2],
        };
        let (g, w) = build_omega(&params).unwrap();
        assert_eq!((g.n(), g.m()), (17, 16));
        assert!(g.is_connected());
        assert_eq!(w.dominating_set.len(), 13);
        let brute = exact::gamma_ktuple_bruteforce(&g, 2).unwrap();
        assert_eq!(brute.value, 13);
    }

    #[test]
    fn recognizer_small_cases() {
        assert!(recognize_equality_family(&path(2)).unwrap().is_some());
        assert!(recognize_equality_family(&path(3)).unwrap().is_some());
        assert!(recognize_equality_family(&cycle(4)).unwrap().is_none());
        assert!(recognize_equality_family(&complete(4)).unwrap().is_none());
        // P6 misses the bound (it is not a multiple of 3), so no witness.
        assert!(recognize_equality_family(&path(6)).unwrap().is_none());
    }

    #[test]
    fn recognizer_reports_a_genuine_matched_pair() {
        // A pair whose two vertices each meet their own connector stays a
        // pair in the decomposition; the star pendants stay stars.
        let g = build_equality_tree(1, &[1, 1], &[(0, 2), (1, 3)]).unwrap();
        assert_eq!((g.n(), g.m()), (8, 7));
        let w = recognize_equality_family(&g).unwrap().unwrap();
        assert_eq!(w.matching, vec![(0, 1)]);
        assert_eq!(w.stars, vec![(2, vec![4]), (3, vec![5])]);
        assert_eq!(w.independent, vec![6, 7]);
        assert_eq!(w.dominating_set.len(), 6);
        assert_eq!(exact::gamma_ktuple_bruteforce(&g, 2).unwrap().value, 6);
    }

    #[test]
    fn recognizer_round_trips_random_builds() {
        for seed in 0..100 {
            let params = random_omega_params(seed);
            let (g, w) = build_omega(&params).unwrap();
            assert!(g.n() <= 14, "seed {seed} built n = {}", g.n());
            let found = recognize_equality_family(&g).unwrap();
            assert!(found.is_some(), "seed {seed}: {params:?}");
            // The witness size is pinned by the formula, so both must agree.
            assert_eq!(
                found.unwrap().dominating_set.len(),
                w.dominating_set.len(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn equality_tree_matches_figure_parameters() {
        let g = build_equality_tree(3, &[3, 2], &[(5, 6), (2, 1), (4, 3), (0, 7)]).unwrap();
        assert_eq!((g.n(), g.m()), (17, 16));
        assert!(g.is_connected());
        let bound = slater::size_bound_numerator(&crate::graph::DegreeProfile::new(&g));
        assert_eq!(bound, 39);
        assert_eq!(exact::gamma_ktuple_bruteforce(&g, 2).unwrap().value, 13);
    }

    #[test]
    fn equality_tree_smallest_mixed_case() {
        // One pair, one single-pendant star, one connector: a 5-vertex tree
        // whose double domination number meets the bound (10 + 2)/3 = 4.
        let g = build_equality_tree(1, &[1], &[(0, 2)]).unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        assert_eq!(exact::gamma_ktuple_bruteforce(&g, 2).unwrap().value, 4);
        assert!(recognize_equality_family(&g).unwrap().is_some());
    }

    #[test]
    fn equality_tree_rejects_bad_shapes() {
        // A connector must join two distinct anchors.
        assert!(build_equality_tree(1, &[1], &[(2, 2)]).is_err());
        // Wrong connector count.
        assert!(build_equality_tree(1, &[1], &[]).is_err());
        // Both connector slots spent on pair 0 leaves pair 1 untouched.
        let err = build_equality_tree(2, &[], &[(0, 1)]).unwrap_err();
        assert!(err.to_string().contains("pair 1"), "{err}");
        // A connector across one pair closes a triangle and strands the
        // star: right edge count, wrong shape.
        let err = build_equality_tree(1, &[1], &[(0, 1)]).unwrap_err();
        assert!(err.to_string().contains("tree"), "{err}");
    }

    #[test]
    fn domatic_equality_small_members() {
        let k4 = build_domatic_equality_graph(2, 2, 2, 7).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        let k3 = build_domatic_equality_graph(1, 3, 1, 7).unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let g = build_domatic_equality_graph(2, 3, 4, 11).unwrap();
        assert_eq!(g.n(), 12);
        assert!((0..12).all(|v| g.degree(v) == 5));
        assert!(build_domatic_equality_graph(2, 2, 3, 0).is_err());
        assert!(build_domatic_equality_graph(3, 2, 2, 0).is_err());
    }

    #[test]
    fn domatic_equality_certified_by_solvers() {
        for (k, r, q, seed) in [(1, 2, 3, 1), (2, 2, 4, 2), (1, 3, 2, 3), (2, 2, 2, 4)] {
            let g = build_domatic_equality_graph(k, r, q, seed).unwrap();
            let gamma = exact::gamma_ktuple_bruteforce(&g, k).unwrap().value;
            let domatic = exact::domatic_ktuple_exact(&g, k).unwrap().value;
            assert_eq!((gamma, domatic), (q, r), "k={k} r={r} q={q}");
            assert_eq!(
                exact::domatic_quadratic_slack(g.n(), g.m(), k, gamma, domatic),
                0,
                "equality must hold exactly"
            );
        }
    }

    #[test]
    fn full_family_members() {
        let single = Graph::empty(1);
        let p2 = build_full_graph(&[single.clone(), single.clone()], 0, 0, &[]).unwrap();
        assert_eq!((p2.n(), p2.m()), (2, 1));
        assert!(exact::is_full(&p2).unwrap());
        // K3: the anchor join covers parts 1 and 2 from part 0; one cross
        // edge finishes the mutual coverage.
        let k3 = build_full_graph(
            &[single.clone(), single.clone(), single.clone()],
            0,
            0,
            &[((1, 0), (2, 0))],
        )
        .unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        assert!(exact::is_full(&k3).unwrap());
    }

    #[test]
    fn full_family_coverage_error_names_vertex_and_part() {
        let single = Graph::empty(1);
        let k2 = path(2);
        let err = build_full_graph(&[single, k2], 0, 0, &[]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("vertex 2") && msg.contains("part 0"), "{msg}");
    }

    #[test]
    fn full_family_anchor_must_be_isolated() {
        let err = build_full_graph(&[path(2), Graph::empty(1)], 0, 0, &[]).unwrap_err();
        assert!(err.to_string().contains("isolated"));
    }

    #[test]
    fn regular_decomposition_examples() {
        assert!(regular_full_decomposition(&cycle(4)).unwrap().is_none());
        let parts = regular_full_decomposition(&complete(4)).unwrap().unwrap();
        assert_eq!(parts.len(), 4);
        let parts = regular_full_decomposition(&cycle(6)).unwrap().unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 2));
        assert!(regular_full_decomposition(&path(3)).is_err());
    }

    #[test]
    fn random_theta_members_build_and_are_full() {
        for seed in 0..60 {
            let p = random_theta_params(seed);
            let g = build_full_graph(&p.parts, p.anchor_part, p.anchor_vertex, &p.cross_edges)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert!(g.n() <= 9, "seed {seed} produced an oversized member");
            assert!(exact::is_full(&g).unwrap(), "seed {seed} member is not full");
            // The anchor vertex realizes the minimum degree: one neighbor
            // per non-anchor part.
            assert_eq!(g.min_degree(), p.parts.len() - 1, "seed {seed}");
            let again = random_theta_params(seed);
            let g2 = build_full_graph(
                &again.parts,
                again.anchor_part,
                again.anchor_vertex,
                &again.cross_edges,
            )
            .unwrap();
            assert_eq!(g.edges(), g2.edges(), "seed {seed} must be reproducible");
        }
    }
}
