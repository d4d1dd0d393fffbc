//! Exhaustive enumeration of small labeled graphs.
//!
//! General graphs are enumerated as bitmasks over the `C(n,2)` vertex pairs
//! (so `n <= 8` keeps the space at 2^28). Trees are enumerated through
//! Prüfer sequences (`n^(n-2)` labeled trees), and regular graphs through a
//! row-by-row backtracking that prunes on degree, which is vastly smaller
//! than filtering all masks.

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

pub(crate) const MAX_ENUM_N: usize = 8;

/// Hypothesis filters applied during enumeration.
#[derive(Clone, Copy, Debug, Default)]
pub struct GraphFilter {
    pub connected: bool,
    pub min_degree: usize,
    pub trees_only: bool,
    /// Keep one representative per isomorphism class (for reporting counts;
    /// the canonical key is a brute-force permutation minimum, so this is
    /// only sensible at very small `n`).
    pub dedup_isomorphic: bool,
}

/// Pair list in the fixed enumeration order `(0,1),(0,2),...,(0,n-1),(1,2),...`.
pub(crate) fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

pub(crate) fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[i];
        b.add_edge(u, v);
    }
    b.build()
}

/// Streams every labeled graph on `n` vertices passing `filter`.
///
/// `n` must be at most 8 unless `trees_only` is set (trees go through Prüfer
/// sequences and are cheap up to `n = 10`).
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if filter.trees_only {
        if n == 0 || n > 10 {
            return Err(Error::TooLarge(format!("tree enumeration supports 1..=10 vertices, got {n}")));
        }
        // Trees are connected by construction, so only min_degree applies.
        let it = enumerate_trees(n)?.filter(move |g| g.min_degree() >= filter.min_degree);
        return dedup_wrap(Box::new(it), filter.dedup_isomorphic);
    }
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::TooLarge(format!(
            "graph enumeration supports 1..={MAX_ENUM_N} vertices, got {n}"
        )));
    }
    let pairs = pair_list(n);
    let total: u64 = 1u64 << pairs.len();
    let it = (0..total).map(move |mask| graph_from_mask(n, &pairs, mask as u32)).filter(
        move |g| {
            (!filter.connected || g.is_connected()) && g.min_degree() >= filter.min_degree
        },
    );
    dedup_wrap(Box::new(it), filter.dedup_isomorphic)
}

fn dedup_wrap(
    it: Box<dyn Iterator<Item = Graph>>,
    dedup: bool,
) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if !dedup {
        return Ok(it);
    }
    let mut seen = std::collections::HashSet::new();
    Ok(Box::new(it.filter(move |g| seen.insert(canonical_key(g)))))
}

/// A label-invariant key: the lexicographically smallest upper-triangle bit
/// string over all vertex permutations. Exponential in `n`; intended for
/// deduplicating enumeration output at `n <= 8`.
pub fn canonical_key(g: &Graph) -> Vec<u64> {
    let n = g.n();
    assert!(n <= MAX_ENUM_N, "canonical_key is for small graphs");
    let pairs = pair_list(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<u32> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u32;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if g.has_edge(p[u], p[v]) {
                mask |= 1 << i;
            }
        }
        if best.is_none_or(|b| mask < b) {
            best = Some(mask);
        }
    });
    vec![best.unwrap_or(0) as u64]
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Decodes a Prüfer sequence (length `n-2`, entries in `0..n`) into the
/// labeled tree it encodes.
pub fn prufer_to_tree(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidConstruction("Prüfer decoding needs n >= 2".into()));
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidConstruction(format!(
            "Prüfer sequence for n={n} must have length {}",
            n - 2
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidConstruction(format!("Prüfer entry {bad} out of range")));
    }
    let mut deg = vec![1usize; n];
    for &x in seq {
        deg[x] += 1;
    }
    let mut b = GraphBuilder::new(n);
    // Take the smallest leaf each round; a pointer sweep plus a "reusable
    // leaf" slot (for vertices that become leaves behind the pointer) keeps
    // this linear without a heap.
    let mut ptr = 0usize;
    let mut leaf = usize::MAX;
    for &x in seq {
        let l = if leaf != usize::MAX {
            std::mem::replace(&mut leaf, usize::MAX)
        } else {
            while deg[ptr] != 1 {
                ptr += 1;
            }
            ptr += 1;
            ptr - 1
        };
        b.add_edge(l, x);
        deg[l] -= 1;
        deg[x] -= 1;
        if deg[x] == 1 && x < ptr {
            leaf = x;
        }
    }
    // Exactly two vertices of degree 1 remain; join them.
    let mut rest = (0..n).filter(|&v| deg[v] == 1);
    let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
    b.add_edge(x, y);
    Ok(b.build())
}

/// Streams all `n^(n-2)` labeled trees on `n` vertices (`n = 1` yields `K1`,
/// `n = 2` yields `K2`).
pub fn enumerate_trees(n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n == 0 {
        return Err(Error::InvalidConstruction("no trees on 0 vertices".into()));
    }
    if n == 1 {
        return Ok(Box::new(std::iter::once(Graph::empty(1))));
    }
    if n == 2 {
        return Ok(Box::new(std::iter::once(super::path(2))));
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut done = false;
    let it = std::iter::from_fn(move || {
        if done {
            return None;
        }
        let g = prufer_to_tree(&seq, n).expect("generated sequence is valid");
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == len {
                done = true;
                break;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        Some(g)
    });
    Ok(Box::new(it))
}

/// Streams all labeled `r`-regular graphs on `n` vertices by assigning each
/// vertex's higher-indexed neighbors with degree-feasibility pruning.
pub fn enumerate_regular(n: usize, r: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n > 12 {
        return Err(Error::TooLarge(format!("regular enumeration supports n <= 12, got {n}")));
    }
    if r >= n.max(1) || !(n * r).is_multiple_of(2) {
        return Ok(Box::new(std::iter::empty()));
    }
    let mut out = Vec::new();
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    fill_regular(n, r, 0, &mut deg, &mut edges, &mut out);
    Ok(Box::new(out.into_iter()))
}

/// Chooses the higher-indexed neighbors of vertex `v` so that `deg[v]`
/// reaches exactly `r`, then recurses on `v+1`.
fn fill_regular(
    n: usize,
    r: usize,
    v: usize,
    deg: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    if v == n {
        let mut b = GraphBuilder::new(n);
        for &(x, y) in edges.iter() {
            b.add_edge(x, y);
        }
        out.push(b.build());
        return;
    }
    let need = r - deg[v];
    let candidates: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < r).collect();
    if candidates.len() < need {
        return;
    }
    choose_neighbors(n, r, v, &candidates, need, 0, deg, edges, out);
}

#[allow(clippy::too_many_arguments)]
fn choose_neighbors(
    n: usize,
    r: usize,
    v: usize,
    candidates: &[usize],
    need: usize,
    start: usize,
    deg: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) {
    if need == 0 {
        fill_regular(n, r, v + 1, deg, edges, out);
        return;
    }
    if candidates.len() - start < need {
        return;
    }
    for i in start..candidates.len() {
        let u = candidates[i];
        if deg[u] == r {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push((v, u));
        choose_neighbors(n, r, v, candidates, need - 1, i + 1, deg, edges, out);
        edges.pop();
        deg[v] -= 1;
        deg[u] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn counts_on_three_vertices() {
        let all = enumerate_graphs(3, GraphFilter::default()).unwrap().count();
        assert_eq!(all, 8);
        let connected = enumerate_graphs(
            3,
            GraphFilter { connected: true, ..Default::default() },
        )
        .unwrap()
        .count();
        assert_eq!(connected, 4);
    }

    #[test]
    fn cayley_count_for_trees() {
        // n^(n-2) labeled trees: 4^2 = 16 on four vertices.
        assert_eq!(enumerate_trees(4).unwrap().count(), 16);
        assert_eq!(enumerate_trees(5).unwrap().count(), 125);
        let via_filter = enumerate_graphs(
            4,
            GraphFilter { trees_only: true, ..Default::default() },
        )
        .unwrap()
        .count();
        assert_eq!(via_filter, 16);
    }

    #[test]
    fn trees_are_trees() {
        for t in enumerate_trees(6).unwrap() {
            assert_eq!(t.m(), 5);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn prufer_decodes_known_sequence() {
        // Sequence [3,3] on n=4: leaves 0,1 attach to 3, then 2-3 closes.
        let t = prufer_to_tree(&[3, 3], 4).unwrap();
        assert_eq!(t.edges(), vec![(0, 3), (1, 3), (2, 3)]);
        assert!(prufer_to_tree(&[4], 4).is_err());
        assert!(prufer_to_tree(&[0], 4).is_err());
    }

    #[test]
    fn min_degree_filter() {
        let count = enumerate_graphs(
            4,
            GraphFilter { min_degree: 1, ..Default::default() },
        )
        .unwrap()
        .count();
        // Graphs on 4 vertices with no isolated vertex: 41 of 64.
        assert_eq!(count, 41);
    }

    #[test]
    fn dedup_counts_isomorphism_classes() {
        let classes = enumerate_graphs(
            4,
            GraphFilter { dedup_isomorphic: true, ..Default::default() },
        )
        .unwrap()
        .count();
        assert_eq!(classes, 11);
        let connected_classes = enumerate_graphs(
            4,
            GraphFilter { connected: true, dedup_isomorphic: true, ..Default::default() },
        )
        .unwrap()
        .count();
        assert_eq!(connected_classes, 6);
    }

    #[test]
    fn canonical_key_is_label_invariant() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap(); // relabeled path
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert_ne!(canonical_key(&a), canonical_key(&path(2)));
    }

    #[test]
    fn regular_enumeration_matches_known_counts() {
        // 1-regular on 2k vertices: (2k-1)!! perfect matchings.
        assert_eq!(enumerate_regular(8, 1).unwrap().count(), 105);
        // 2-regular labeled graphs: disjoint cycle covers. n=4: 3, n=5: 12,
        // n=6: 60 + 10 = 70.
        assert_eq!(enumerate_regular(4, 2).unwrap().count(), 3);
        assert_eq!(enumerate_regular(5, 2).unwrap().count(), 12);
        assert_eq!(enumerate_regular(6, 2).unwrap().count(), 70);
        // Parity: no 3-regular graph on 5 vertices.
        assert_eq!(enumerate_regular(5, 3).unwrap().count(), 0);
        for g in enumerate_regular(6, 3).unwrap() {
            assert!((0..6).all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn enumeration_caps() {
        assert!(enumerate_graphs(9, GraphFilter::default()).is_err());
        assert!(enumerate_graphs(0, GraphFilter::default()).is_err());
    }
}
