//! Simple undirected graphs on `0..n` with bit-vector adjacency rows.
//!
//! Rows are `u64` words, so neighborhood intersections used by the domination
//! solvers are word-parallel popcounts. Graphs are immutable once built;
//! every constructor funnels through [`GraphBuilder::build`], which checks
//! adjacency symmetry, absence of loops, and edge-count consistency in debug
//! builds.

mod format;
mod enumerate;

pub(crate) use enumerate::{graph_from_mask, pair_list, MAX_ENUM_N};
pub use enumerate::{canonical_key, enumerate_graphs, enumerate_regular, enumerate_trees, prufer_to_tree, GraphFilter};
pub use format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};

use crate::bitset::{words_for, VertexSet};
use crate::error::{Error, Result};

/// Immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

/// Incremental constructor for [`Graph`]. Edge insertion is idempotent, so
/// composite constructions (coronas, reductions) may re-add an edge freely.
pub struct GraphBuilder {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        GraphBuilder {
            n,
            words,
            adj: vec![0; n.max(1) * words],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "loops are not allowed");
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn build(self) -> Graph {
        let m = self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2;
        let g = Graph {
            n: self.n,
            words: self.words,
            adj: self.adj,
            m,
        };
        g.debug_validate();
        g
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidConstruction(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidConstruction(format!("loop at vertex {u}")));
            }
            b.add_edge(u, v);
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as words (open neighborhood).
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        (0..self.words).flat_map(move |wi| {
            let mut w = row[wi];
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    /// Open neighborhood as a [`VertexSet`].
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        for u in self.neighbors(v) {
            s.insert(u);
        }
        s
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Diameter via BFS from every vertex; `None` when the graph is
    /// disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            let mut reached = 1;
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        best = best.max(dist[u]);
                        reached += 1;
                        queue.push_back(u);
                    }
                }
            }
            if reached < self.n {
                return None;
            }
        }
        Some(best)
    }

    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let mut half_m = 0usize;
            for v in 0..self.n {
                assert!(
                    !self.has_edge(v, v),
                    "validator: loop at vertex {v}"
                );
                // No stray bits above n.
                for (wi, &w) in self.row(v).iter().enumerate() {
                    let hi = (wi + 1) * 64;
                    if hi > self.n {
                        let valid = self.n.saturating_sub(wi * 64);
                        let mask = if valid >= 64 { !0 } else { (1u64 << valid) - 1 };
                        assert_eq!(w & !mask, 0, "validator: bits beyond n in row {v}");
                    }
                }
                for u in self.neighbors(v) {
                    assert!(
                        self.has_edge(u, v),
                        "validator: asymmetric edge ({v},{u})"
                    );
                }
                half_m += self.degree(v);
            }
            assert_eq!(half_m, 2 * self.m, "validator: edge count mismatch");
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

// ---------------------------------------------------------------------------
// Named constructors
// ---------------------------------------------------------------------------

/// Path on `n` vertices, `0-1-2-...`.
pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v - 1, v);
    }
    b.build()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        b.add_edge(v, (v + 1) % n);
    }
    b.build()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v);
        }
    }
    b.build()
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let mut b = GraphBuilder::new(leaves + 1);
    for v in 1..=leaves {
        b.add_edge(0, v);
    }
    b.build()
}

/// Circulant graph: `v ~ v ± o (mod n)` for each offset `o`.
///
/// Offsets must lie in `1..=n/2`; the offset `n/2` (n even) contributes a
/// single edge per vertex, every other offset contributes two.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let mut b = GraphBuilder::new(n);
    for &o in offsets {
        if o == 0 || o > n / 2 {
            return Err(Error::InvalidConstruction(format!(
                "circulant offset {o} outside 1..={}",
                n / 2
            )));
        }
        for v in 0..n {
            b.add_edge(v, (v + o) % n);
        }
    }
    Ok(b.build())
}

// ---------------------------------------------------------------------------
// Degree profile
// ---------------------------------------------------------------------------

/// Degree data used by the Slater-style bounds: the degree sequence in
/// non-increasing order with prefix sums, the number `e` of end-vertices
/// (degree 1), the number `p` of penultimate vertices (vertices adjacent to
/// an end-vertex), and the extreme degrees.
#[derive(Clone, Debug)]
pub struct DegreeProfile {
    pub n: usize,
    pub m: usize,
    /// Degrees sorted in non-increasing order (`d_1 >= d_2 >= ...`).
    pub degrees: Vec<usize>,
    /// `prefix[t]` = sum of the `t` largest degrees; `prefix[0] = 0`.
    pub prefix: Vec<usize>,
    /// Number of end-vertices (degree exactly 1).
    pub end_vertices: usize,
    /// Number of penultimate vertices (adjacent to at least one end-vertex).
    pub penultimate: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    /// Builds the profile with a counting sort over degrees.
    pub fn new(g: &Graph) -> DegreeProfile {
        let n = g.n();
        let mut counts = vec![0usize; n.max(1)];
        let mut raw = vec![0usize; n];
        for (v, slot) in raw.iter_mut().enumerate() {
            let d = g.degree(v);
            *slot = d;
            counts[d] += 1;
        }
        let mut degrees = Vec::with_capacity(n);
        for d in (0..counts.len()).rev() {
            for _ in 0..counts[d] {
                degrees.push(d);
            }
        }
        let mut prefix = Vec::with_capacity(n + 1);
        prefix.push(0usize);
        for &d in &degrees {
            prefix.push(prefix.last().unwrap() + d);
        }
        let end_vertices = counts.get(1).copied().unwrap_or(0);
        let penultimate = (0..n)
            .filter(|&v| g.neighbors(v).any(|u| raw[u] == 1))
            .count();
        DegreeProfile {
            n,
            m: g.m(),
            degrees,
            prefix,
            end_vertices,
            penultimate,
            min_degree: raw.iter().copied().min().unwrap_or(0),
            max_degree: raw.iter().copied().max().unwrap_or(0),
        }
    }
}

// ---------------------------------------------------------------------------
// Corona products
// ---------------------------------------------------------------------------

/// Corona `G ∘ H`: one copy of `G`, plus `|V(G)|` copies of `H`, the `i`-th
/// copy fully joined to vertex `i` of `G`.
///
/// Vertex layout: `0..g.n()` is the `G`-copy; the copy of `H` attached to
/// `i` occupies `g.n() + i*h.n() .. g.n() + (i+1)*h.n()`.
/// Returns the product and a component label per vertex: `None` for
/// `G`-vertices, `Some(i)` for vertices in the copy attached to `i`.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, Vec<Option<usize>>) {
    let n = g.n() + g.n() * h.n();
    let mut b = GraphBuilder::new(n);
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    let mut labels = vec![None; n];
    for i in 0..g.n() {
        let base = g.n() + i * h.n();
        for (u, v) in h.edges() {
            b.add_edge(base + u, base + v);
        }
        for u in 0..h.n() {
            b.add_edge(i, base + u);
            labels[base + u] = Some(i);
        }
    }
    (b.build(), labels)
}

/// Iterated corona with `K1`: `H_1 = H`, `H_t = K1 ∘ H_{t-1}`.
///
/// Each step prepends a universal vertex (vertex 0 of the step's result).
pub fn k1_corona_tower(h: &Graph, t: usize) -> Graph {
    assert!(t >= 1, "tower height must be at least 1");
    let mut g = h.clone();
    for _ in 1..t {
        let (next, _) = corona(&complete(1), &g);
        g = next;
    }
    g
}

// ---------------------------------------------------------------------------
// Orientations
// ---------------------------------------------------------------------------

/// An orientation of a graph: exactly one arc per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Checks that `arcs` orients exactly the edges of `g`, one direction each.
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for &(x, y) in &self.arcs {
            if x >= g.n() || y >= g.n() || !g.has_edge(x, y) {
                return Err(Error::InvalidConstruction(format!(
                    "arc ({x},{y}) does not orient an edge of the graph"
                )));
            }
            if !seen.insert((x.min(y), x.max(y))) {
                return Err(Error::InvalidConstruction(format!(
                    "edge {{{x},{y}}} oriented twice"
                )));
            }
        }
        if seen.len() != g.m() {
            return Err(Error::InvalidConstruction(format!(
                "orientation covers {} of {} edges",
                seen.len(),
                g.m()
            )));
        }
        Ok(())
    }

    /// Transitivity: whenever arcs (x,y) and (y,z) exist, the arc (x,z) must
    /// also exist. Returns the violating triple on failure.
    pub fn check_transitive(&self) -> Result<()> {
        let set: std::collections::HashSet<(usize, usize)> =
            self.arcs.iter().copied().collect();
        let mut out: std::collections::HashMap<usize, Vec<usize>> =
            std::collections::HashMap::new();
        for &(x, y) in &self.arcs {
            out.entry(x).or_default().push(y);
        }
        for &(x, y) in &self.arcs {
            if let Some(zs) = out.get(&y) {
                for &z in zs {
                    if z != x && !set.contains(&(x, z)) {
                        return Err(Error::NotTransitive(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Given a comparability graph `h` with a transitive orientation `d`, builds
/// `K1 ∘ h` (new universal vertex 0, `h` shifted up by one) and extends `d`
/// with the arcs `(0, v)` for every `v`. The input orientation is validated
/// as transitive, and so is the output.
pub fn extend_transitive_orientation(h: &Graph, d: &Orientation) -> Result<(Graph, Orientation)> {
    d.validate_against(h)?;
    d.check_transitive()?;
    let (g2, _) = corona(&complete(1), h);
    let mut arcs: Vec<(usize, usize)> = d.arcs.iter().map(|&(x, y)| (x + 1, y + 1)).collect();
    for v in 1..=h.n() {
        arcs.push((0, v));
    }
    let d2 = Orientation { arcs };
    d2.validate_against(&g2)?;
    d2.check_transitive()?;
    Ok((g2, d2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2, "duplicate edge must collapse");
    }

    #[test]
    fn degrees_and_neighbors() {
        let g = path(3);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert!(g.has_edge(0, 1) && !g.has_edge(0, 2));
    }

    #[test]
    fn degree_profile_path3() {
        let p = DegreeProfile::new(&path(3));
        assert_eq!(p.degrees, vec![2, 1, 1]);
        assert_eq!(p.prefix, vec![0, 2, 3, 4]);
        assert_eq!(p.end_vertices, 2);
        assert_eq!(p.penultimate, 1);
        assert_eq!((p.min_degree, p.max_degree), (1, 2));
    }

    #[test]
    fn degree_profile_p2_overlapping_roles() {
        // In K2 both vertices are end-vertices and both are penultimate.
        let p = DegreeProfile::new(&path(2));
        assert_eq!(p.end_vertices, 2);
        assert_eq!(p.penultimate, 2);
    }

    #[test]
    fn degree_profile_c6() {
        let p = DegreeProfile::new(&cycle(6));
        assert_eq!(p.degrees, vec![2; 6]);
        assert_eq!(p.end_vertices, 0);
        assert_eq!(p.penultimate, 0);
        assert_eq!(p.prefix[3], 6);
    }

    #[test]
    fn connectivity_and_diameter() {
        assert!(path(5).is_connected());
        assert_eq!(path(5).diameter(), Some(4));
        assert_eq!(cycle(6).diameter(), Some(3));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.diameter(), None);
        assert_eq!(complete(1).diameter(), Some(0));
    }

    #[test]
    fn corona_c3_k1_is_net() {
        // C3 ∘ K1: triangle with a pendant leaf on each vertex.
        let (g, labels) = corona(&cycle(3), &complete(1));
        assert_eq!((g.n(), g.m()), (6, 6));
        assert_eq!(labels[..3], [None, None, None]);
        assert_eq!(labels[3..], [Some(0), Some(1), Some(2)]);
        // m = m(G) + |V(G)|(m(H) + |V(H)|)
        assert_eq!(g.m(), 3 + 3);
    }

    #[test]
    fn corona_k1_c3_is_k4() {
        let (g, _) = corona(&complete(1), &cycle(3));
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(g, complete(4));
    }

    #[test]
    fn corona_edge_count_identity() {
        let g = path(2);
        let h = path(2);
        let (c, _) = corona(&g, &h);
        assert_eq!(c.n(), 2 + 2 * 2);
        assert_eq!(c.m(), 1 + 2 * (1 + 2));
    }

    #[test]
    fn tower_k1_gives_k2_then_k3_like_growth() {
        let h2 = k1_corona_tower(&complete(1), 2);
        assert_eq!(h2, complete(2));
        let h3 = k1_corona_tower(&complete(1), 3);
        assert_eq!((h3.n(), h3.m()), (3, 3)); // K1 ∘ K2 = K3
        assert!(h3.diameter().unwrap() <= 2);
    }

    #[test]
    fn orientation_transitivity() {
        // Path a-b-c oriented a->b, b->c is not transitive (a->c missing).
        let g = path(3);
        let d = Orientation { arcs: vec![(0, 1), (1, 2)] };
        assert!(matches!(d.check_transitive(), Err(Error::NotTransitive(0, 1, 2))));
        // Orienting both edges out of the center is transitive.
        let d2 = Orientation { arcs: vec![(1, 0), (1, 2)] };
        d2.validate_against(&g).unwrap();
        d2.check_transitive().unwrap();
    }

    #[test]
    fn orientation_extension_adds_source() {
        let h = path(3);
        let d = Orientation { arcs: vec![(1, 0), (1, 2)] };
        let (g2, d2) = extend_transitive_orientation(&h, &d).unwrap();
        assert_eq!(g2.n(), 4);
        assert_eq!(d2.arcs.len(), g2.m());
        d2.check_transitive().unwrap();
        // New vertex 0 is a source adjacent to everything.
        assert_eq!(g2.degree(0), 3);
    }

    #[test]
    fn orientation_extension_rejects_nontransitive_input() {
        let h = path(3);
        let d = Orientation { arcs: vec![(0, 1), (1, 2)] };
        assert!(extend_transitive_orientation(&h, &d).is_err());
    }

    #[test]
    fn circulant_offsets() {
        let c = circulant(6, &[1]).unwrap();
        assert_eq!(c, cycle(6));
        let k4 = circulant(4, &[1, 2]).unwrap();
        assert_eq!(k4, complete(4));
        assert!(circulant(6, &[4]).is_err());
        // n/2 offset contributes one edge per vertex: 3-regular on 6 vertices.
        let g = circulant(6, &[1, 3]).unwrap();
        assert!((0..6).all(|v| g.degree(v) == 3));
    }
}
