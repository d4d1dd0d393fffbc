//! Exact solvers for minimum k-tuple dominating sets and maximum k-tuple
//! domatic partitions.
//!
//! A set `S` is k-tuple dominating when `|N[v] ∩ S| >= k` for every vertex
//! `v`; it exists iff the minimum degree is at least `k - 1`. Two
//! independent routes compute the minimum size: a subset-enumeration brute
//! force (the oracle) and a branch-and-bound solver that prunes with the
//! degree-sequence lower bounds from [`crate::slater`] and stops early when
//! an incumbent matches the root bound, recording that bound as the
//! optimality proof.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Graph};
use crate::slater;
use serde::Serialize;

/// Subset enumeration is capped at this order.
pub const BRUTE_FORCE_MAX_N: usize = 24;
/// Domatic partition search and the full-graph test are capped at this order.
pub const DOMATIC_MAX_N: usize = 12;

/// Where a certificate's lower bound came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// The double Slater number (k = 2 only).
    DoubleSlater,
    /// `ceil((4n - 2m + e - p)/3)` (k = 2 only).
    SizeBound,
    /// `ceil(kn/(1 + max_degree))`.
    MaxDegree,
    /// The Slater number (k = 1 only).
    Slater,
    /// No bound matched; optimality was proven by exhausting the search.
    ExhaustedSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    BranchAndBound,
}

/// An optimal k-tuple dominating set together with the proof of optimality.
#[derive(Clone, Debug, Serialize)]
pub struct DominationCertificate {
    pub schema: &'static str,
    pub k: usize,
    /// Sorted members of the optimal set.
    pub set: Vec<usize>,
    pub value: usize,
    /// A lower bound equal to `value` unless the search was exhausted.
    pub lower_bound: usize,
    pub bound_source: BoundSource,
    pub method: Method,
    /// Brute force: candidate subsets tested. Branch and bound: search nodes.
    pub nodes: u64,
}

impl DominationCertificate {
    /// Re-checks everything the certificate claims about `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let s = VertexSet::from_members(g.n(), &self.set);
        if s.len() != self.set.len() || self.set.len() != self.value {
            return Err(Error::InvalidConstruction(
                "certificate set size disagrees with its value".into(),
            ));
        }
        if !is_ktuple_dominating(g, &s, self.k) {
            return Err(Error::InvalidConstruction(format!(
                "certificate set is not {}-tuple dominating",
                self.k
            )));
        }
        if self.lower_bound > self.value {
            return Err(Error::InvalidConstruction(
                "certificate lower bound exceeds its value".into(),
            ));
        }
        Ok(())
    }
}

/// Does every vertex have at least `k` members of `s` in its closed
/// neighborhood?
pub fn is_ktuple_dominating(g: &Graph, s: &VertexSet, k: usize) -> bool {
    (0..g.n()).all(|v| {
        s.intersection_size_words(g.row(v)) + usize::from(s.contains(v)) >= k
    })
}

fn check_defined(g: &Graph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Undefined("k-tuple domination requires k >= 1".into()));
    }
    if g.n() == 0 {
        return Err(Error::Undefined("the empty graph has no domination number".into()));
    }
    if g.min_degree() + 1 < k {
        return Err(Error::Undefined(format!(
            "{k}-tuple domination requires minimum degree >= {}",
            k - 1
        )));
    }
    Ok(())
}

/// Minimum k-tuple dominating set by subset enumeration, ascending by size
/// with early exit. Independent of the branch-and-bound route.
pub fn gamma_ktuple_bruteforce(g: &Graph, k: usize) -> Result<DominationCertificate> {
    check_defined(g, k)?;
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge(format!(
            "brute force is capped at n <= {BRUTE_FORCE_MAX_N} (got {n})"
        )));
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| g.row(v)[0] | (1u64 << v))
        .collect();
    let full = (1u64 << n) - 1;
    let mut nodes = 0u64;
    for size in k..=n {
        let mut mask = (1u64 << size) - 1;
        while mask <= full {
            nodes += 1;
            if closed.iter().all(|&c| (c & mask).count_ones() as usize >= k) {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let cert = DominationCertificate {
                    schema: slater::SCHEMA,
                    k,
                    value: set.len(),
                    lower_bound: set.len(),
                    set,
                    bound_source: BoundSource::ExhaustedSearch,
                    method: Method::BruteForce,
                    nodes,
                };
                debug_assert!(cert.validate(g).is_ok());
                return Ok(cert);
            }
            // Gosper's hack: next mask with the same popcount.
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    unreachable!("V(G) is k-tuple dominating whenever the minimum degree is >= k-1")
}

/// The best applicable root lower bound and its source; ties go to the
/// earlier source in the order double-Slater, size bound, max degree, Slater.
fn root_lower_bound(profile: &DegreeProfile, k: usize) -> (usize, BoundSource) {
    let mut candidates: Vec<(usize, BoundSource)> = Vec::new();
    if k == 2 && profile.min_degree >= 1 {
        if let Ok(sl2) = slater::double_slater(profile) {
            candidates.push((sl2, BoundSource::DoubleSlater));
        }
        let num = slater::size_bound_numerator(profile);
        if num > 0 {
            candidates.push(((num as usize).div_ceil(3), BoundSource::SizeBound));
        }
    }
    candidates.push((
        (k * profile.n).div_ceil(1 + profile.max_degree),
        BoundSource::MaxDegree,
    ));
    if k == 1 {
        candidates.push((slater::slater_number(profile), BoundSource::Slater));
    }
    let mut best = candidates[0];
    for &c in &candidates[1..] {
        if c.0 > best.0 {
            best = c;
        }
    }
    best
}

/// Any k-tuple dominating set, grown greedily by total-deficit coverage;
/// seeds the branch-and-bound incumbent.
fn greedy_cover(g: &Graph, k: usize, closed: &[Vec<usize>]) -> Vec<usize> {
    let n = g.n();
    let mut need = vec![k as i64; n];
    let mut deficit = (k * n) as i64;
    let mut chosen = vec![false; n];
    let mut set = Vec::new();
    while deficit > 0 {
        let mut best = usize::MAX;
        let mut best_gain = -1i64;
        for u in 0..n {
            if chosen[u] {
                continue;
            }
            let gain = closed[u].iter().filter(|&&w| need[w] > 0).count() as i64;
            if gain > best_gain || (gain == best_gain && g.degree(u) > g.degree(best)) {
                best = u;
                best_gain = gain;
            }
        }
        chosen[best] = true;
        set.push(best);
        for &w in &closed[best] {
            if need[w] > 0 {
                deficit -= 1;
            }
            need[w] -= 1;
        }
    }
    set.sort_unstable();
    set
}

struct Bnb<'a> {
    g: &'a Graph,
    max_deg_plus1: i64,
    closed: Vec<Vec<usize>>,
    need: Vec<i64>,
    avail: Vec<i64>,
    decided: Vec<bool>,
    in_set: Vec<bool>,
    in_count: usize,
    trail: Vec<(usize, bool)>,
    best: usize,
    best_set: Vec<usize>,
    nodes: u64,
    budget: u64,
    budget_hit: bool,
    root_lb: usize,
    stop: bool,
}

impl Bnb<'_> {
    fn decide(&mut self, u: usize, inside: bool) {
        debug_assert!(!self.decided[u]);
        self.decided[u] = true;
        if inside {
            self.in_set[u] = true;
            self.in_count += 1;
            for &w in &self.closed[u] {
                self.need[w] -= 1;
            }
        }
        for &w in &self.closed[u] {
            self.avail[w] -= 1;
        }
        self.trail.push((u, inside));
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (u, inside) = self.trail.pop().unwrap();
            self.decided[u] = false;
            if inside {
                self.in_set[u] = false;
                self.in_count -= 1;
                for &w in &self.closed[u] {
                    self.need[w] += 1;
                }
            }
            for &w in &self.closed[u] {
                self.avail[w] += 1;
            }
        }
    }

    /// Applies unit propagation: a vertex whose remaining candidates exactly
    /// match its remaining demand forces all of them in. Returns false on a
    /// vertex whose demand can no longer be met.
    fn propagate(&mut self) -> bool {
        loop {
            let mut forced = None;
            for v in 0..self.g.n() {
                if self.need[v] > 0 {
                    if self.need[v] > self.avail[v] {
                        return false;
                    }
                    if self.need[v] == self.avail[v] {
                        forced = Some(v);
                        break;
                    }
                }
            }
            match forced {
                None => return true,
                Some(v) => {
                    let force: Vec<usize> = self.closed[v]
                        .iter()
                        .copied()
                        .filter(|&w| !self.decided[w])
                        .collect();
                    for w in force {
                        self.decide(w, true);
                    }
                }
            }
        }
    }

    fn search(&mut self) {
        if self.stop || self.budget_hit {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.budget_hit = true;
            return;
        }
        let mark = self.trail.len();
        if self.propagate() {
            let deficit: i64 = self.need.iter().map(|&d| d.max(0)).sum();
            let lb = self.in_count
                + ((deficit + self.max_deg_plus1 - 1) / self.max_deg_plus1) as usize;
            if lb < self.best {
                if deficit == 0 {
                    self.best = self.in_count;
                    self.best_set = (0..self.g.n()).filter(|&v| self.in_set[v]).collect();
                    if self.best <= self.root_lb {
                        self.stop = true;
                    }
                } else {
                    let u = self.branch_target();
                    let c = self.branch_candidate(u);
                    let inner = self.trail.len();
                    self.decide(c, true);
                    self.search();
                    self.undo_to(inner);
                    if !self.stop && !self.budget_hit {
                        self.decide(c, false);
                        self.search();
                        self.undo_to(inner);
                    }
                }
            }
        }
        self.undo_to(mark);
    }

    /// Unsatisfied vertex with the least slack between supply and demand.
    fn branch_target(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_slack = i64::MAX;
        for v in 0..self.g.n() {
            if self.need[v] > 0 {
                let slack = self.avail[v] - self.need[v];
                if slack < best_slack {
                    best = v;
                    best_slack = slack;
                }
            }
        }
        debug_assert!(best != usize::MAX);
        best
    }

    /// Highest-degree undecided vertex that can still cover `u`.
    fn branch_candidate(&self, u: usize) -> usize {
        let mut best = usize::MAX;
        for &w in &self.closed[u] {
            if !self.decided[w] && (best == usize::MAX || self.g.degree(w) > self.g.degree(best)) {
                best = w;
            }
        }
        debug_assert!(best != usize::MAX);
        best
    }
}

/// Minimum k-tuple dominating set by branch and bound with no node budget.
pub fn gamma_ktuple_bnb(g: &Graph, k: usize) -> Result<DominationCertificate> {
    gamma_ktuple_bnb_budgeted(g, k, u64::MAX)
}

/// Branch and bound with a node budget; exceeding it returns
/// [`Error::BudgetExceeded`] carrying the best incumbent found.
pub fn gamma_ktuple_bnb_budgeted(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<DominationCertificate> {
    check_defined(g, k)?;
    let n = g.n();
    let profile = DegreeProfile::new(g);
    let (root_lb, root_source) = root_lower_bound(&profile, k);
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut c: Vec<usize> = g.neighbors(v).collect();
            c.push(v);
            c
        })
        .collect();
    let incumbent = greedy_cover(g, k, &closed);
    let mut solver = Bnb {
        g,
        max_deg_plus1: (profile.max_degree + 1) as i64,
        need: vec![k as i64; n],
        avail: closed.iter().map(|c| c.len() as i64).collect(),
        closed,
        decided: vec![false; n],
        in_set: vec![false; n],
        in_count: 0,
        trail: Vec::new(),
        best: incumbent.len(),
        best_set: incumbent,
        nodes: 0,
        budget,
        budget_hit: false,
        root_lb,
        stop: false,
    };
    if solver.best > root_lb {
        solver.search();
    }
    if solver.budget_hit {
        return Err(Error::BudgetExceeded {
            incumbent: Some(solver.best),
            lower_bound: root_lb,
        });
    }
    let value = solver.best;
    let (lower_bound, bound_source) = if value == root_lb {
        (root_lb, root_source)
    } else {
        (value, BoundSource::ExhaustedSearch)
    };
    let cert = DominationCertificate {
        schema: slater::SCHEMA,
        k,
        set: solver.best_set,
        value,
        lower_bound,
        bound_source,
        method: Method::BranchAndBound,
        nodes: solver.nodes,
    };
    debug_assert!(cert.validate(g).is_ok());
    Ok(cert)
}

/// A maximum partition of the vertices into k-tuple dominating sets.
#[derive(Clone, Debug, Serialize)]
pub struct DomaticResult {
    pub schema: &'static str,
    pub k: usize,
    pub value: usize,
    pub partition: Vec<Vec<usize>>,
}

impl DomaticResult {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.partition.len() != self.value {
            return Err(Error::InvalidConstruction(
                "domatic value disagrees with the number of parts".into(),
            ));
        }
        let mut seen = vec![false; g.n()];
        for part in &self.partition {
            let s = VertexSet::from_members(g.n(), part);
            if !is_ktuple_dominating(g, &s, self.k) {
                return Err(Error::InvalidConstruction(format!(
                    "a part is not {}-tuple dominating",
                    self.k
                )));
            }
            for &v in part {
                if seen[v] {
                    return Err(Error::InvalidConstruction(format!(
                        "vertex {v} appears in two parts"
                    )));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidConstruction(
                "partition does not cover every vertex".into(),
            ));
        }
        Ok(())
    }
}

/// Searches for a partition of V into exactly `r` k-tuple dominating sets;
/// vertex 0 pinned to part 0 and parts opened in index order for symmetry
/// breaking.
fn partition_into(g: &Graph, k: usize, r: usize) -> Option<Vec<usize>> {
    let n = g.n();
    debug_assert!(n <= DOMATIC_MAX_N && r >= 1);
    if r > n {
        return None;
    }
    let closed: Vec<u32> = (0..n).map(|v| g.row(v)[0] as u32 | (1 << v)).collect();
    let mut hits = vec![vec![0i64; n]; r];
    let mut assign = vec![0usize; n];

    fn rec(
        i: usize,
        opened: usize,
        k: i64,
        closed: &[u32],
        hits: &mut [Vec<i64>],
        assign: &mut [usize],
    ) -> bool {
        let (n, r) = (closed.len(), hits.len());
        if i == n {
            debug_assert!(hits.iter().all(|h| h.iter().all(|&c| c >= k)));
            return true;
        }
        let undecided_from = i + 1;
        for p in 0..=opened.min(r - 1) {
            assign[i] = p;
            for w in bits(closed[i]) {
                hits[p][w] += 1;
            }
            let new_opened = opened.max(p + 1);
            // Feasibility: enough vertices must remain to open the unopened
            // parts, and every (vertex, part) pair must still be able to
            // reach k hits using the unassigned suffix.
            let suffix = u32::MAX << undecided_from;
            let feasible = r.saturating_sub(new_opened) <= n - undecided_from
                && (0..n).all(|v| {
                    let pending = (closed[v] & suffix).count_ones() as i64;
                    (0..r).all(|q| hits[q][v] + pending >= k)
                });
            if feasible && rec(i + 1, new_opened, k, closed, hits, assign) {
                return true;
            }
            for w in bits(closed[i]) {
                hits[p][w] -= 1;
            }
        }
        false
    }

    fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(v)
            }
        })
    }

    rec(0, 0, k as i64, &closed, &mut hits, &mut assign).then_some(assign)
}

/// Maximum number of parts in a partition into k-tuple dominating sets,
/// searched from the ceiling `floor((min_degree + 1)/k)` downward.
pub fn domatic_ktuple_exact(g: &Graph, k: usize) -> Result<DomaticResult> {
    check_defined(g, k)?;
    if g.n() > DOMATIC_MAX_N {
        return Err(Error::TooLarge(format!(
            "domatic search is capped at n <= {DOMATIC_MAX_N} (got {})",
            g.n()
        )));
    }
    let ceiling = (g.min_degree() + 1) / k;
    for r in (1..=ceiling).rev() {
        if let Some(assign) = partition_into(g, k, r) {
            let mut partition = vec![Vec::new(); r];
            for (v, &p) in assign.iter().enumerate() {
                partition[p].push(v);
            }
            let result = DomaticResult {
                schema: slater::SCHEMA,
                k,
                value: r,
                partition,
            };
            debug_assert!(result.validate(g).is_ok());
            return Ok(result);
        }
    }
    unreachable!("V(G) itself is k-tuple dominating whenever the minimum degree is >= k-1")
}

/// `1/2 + sqrt(1/4 + (2m - (k-1)n)/(k*gamma_k))` — the real-valued ceiling
/// on the k-tuple domatic number. Pass/fail decisions should use
/// [`domatic_quadratic_slack`] instead.
pub fn domatic_upper_bound(n: usize, m: usize, k: usize, gamma_k: usize) -> f64 {
    assert!(k >= 1 && gamma_k >= 1 && 2 * m >= (k - 1) * n);
    0.5 + (0.25 + (2 * m - (k - 1) * n) as f64 / (k * gamma_k) as f64).sqrt()
}

/// Exact integer form of the same bound: `d <= 1/2 + sqrt(1/4 + C)` with
/// `C = (2m-(k-1)n)/(k*gamma)` holds iff this slack
/// `2m - (k-1)n - k*gamma*d*(d-1)` is nonnegative, with equality in the
/// real bound iff the slack is zero.
pub fn domatic_quadratic_slack(n: usize, m: usize, k: usize, gamma_k: usize, d: usize) -> i128 {
    let (n, m, k, gamma_k, d) = (n as i128, m as i128, k as i128, gamma_k as i128, d as i128);
    2 * m - (k - 1) * n - k * gamma_k * d * (d - 1)
}

/// Is the domatic number equal to `min_degree + 1`, its largest possible
/// value?
pub fn is_full(g: &Graph) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::Undefined("the empty graph has no domatic number".into()));
    }
    if g.n() > DOMATIC_MAX_N {
        return Err(Error::TooLarge(format!(
            "full-graph test is capped at n <= {DOMATIC_MAX_N} (got {})",
            g.n()
        )));
    }
    Ok(partition_into(g, 1, g.min_degree() + 1).is_some())
}

/// A domatic partition of maximum possible size together with a
/// minimum-degree vertex exhibiting the forced structure: isolated inside
/// its own part with exactly one neighbor in every other part.
#[derive(Clone, Debug, Serialize)]
pub struct FullWitness {
    pub partition: Vec<Vec<usize>>,
    pub vertex: usize,
}

/// Finds a `min_degree + 1` domatic partition and the structured vertex, or
/// `None` when the graph is not full. The structure is automatic: a
/// minimum-degree vertex has exactly enough neighbors to meet every other
/// part once, so it is asserted rather than searched for.
pub fn full_structure_witness(g: &Graph) -> Result<Option<FullWitness>> {
    if g.n() == 0 {
        return Err(Error::Undefined("the empty graph has no domatic number".into()));
    }
    if g.n() > DOMATIC_MAX_N {
        return Err(Error::TooLarge(format!(
            "full-graph witness search is capped at n <= {DOMATIC_MAX_N} (got {})",
            g.n()
        )));
    }
    let delta = g.min_degree();
    let Some(assign) = partition_into(g, 1, delta + 1) else {
        return Ok(None);
    };
    let mut partition = vec![Vec::new(); delta + 1];
    for (v, &p) in assign.iter().enumerate() {
        partition[p].push(v);
    }
    let vertex = (0..g.n()).find(|&v| g.degree(v) == delta).unwrap();
    #[cfg(debug_assertions)]
    {
        let own = assign[vertex];
        let mut per_part = vec![0usize; delta + 1];
        for u in g.neighbors(vertex) {
            per_part[assign[u]] += 1;
        }
        debug_assert_eq!(per_part[own], 0, "minimum-degree vertex must be isolated in its part");
        debug_assert!(
            (0..=delta).all(|p| p == own || per_part[p] == 1),
            "minimum-degree vertex must have exactly one neighbor per other part"
        );
    }
    Ok(Some(FullWitness { partition, vertex }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, Graph};

    #[test]
    fn dominating_predicate_matches_hand_checks() {
        let c4 = cycle(4);
        assert!(is_ktuple_dominating(&c4, &VertexSet::from_members(4, &[0, 1, 2]), 2));
        assert!(!is_ktuple_dominating(&c4, &VertexSet::from_members(4, &[0, 1]), 2));
        assert!(is_ktuple_dominating(&c4, &VertexSet::from_members(4, &[0, 1, 2, 3]), 1));
        assert!(is_ktuple_dominating(&c4, &VertexSet::from_members(4, &[0, 2]), 1));
    }

    #[test]
    fn brute_force_small_values() {
        assert_eq!(gamma_ktuple_bruteforce(&path(2), 2).unwrap().value, 2);
        assert_eq!(gamma_ktuple_bruteforce(&cycle(4), 2).unwrap().value, 3);
        assert_eq!(gamma_ktuple_bruteforce(&complete(4), 2).unwrap().value, 2);
        assert_eq!(gamma_ktuple_bruteforce(&cycle(4), 1).unwrap().value, 2);
        assert_eq!(gamma_ktuple_bruteforce(&star(3), 1).unwrap().value, 1);
        assert_eq!(gamma_ktuple_bruteforce(&star(3), 2).unwrap().value, 4);
        assert_eq!(gamma_ktuple_bruteforce(&complete(5), 3).unwrap().value, 3);
    }

    #[test]
    fn undefined_and_oversized_inputs_are_rejected() {
        assert!(matches!(
            gamma_ktuple_bruteforce(&path(3), 3),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            gamma_ktuple_bruteforce(&Graph::empty(2), 2),
            Err(Error::Undefined(_))
        ));
        assert!(matches!(
            gamma_ktuple_bruteforce(&cycle(30), 2),
            Err(Error::TooLarge(_))
        ));
        assert!(matches!(gamma_ktuple_bnb(&path(3), 0), Err(Error::Undefined(_))));
    }

    #[test]
    fn bnb_certifies_cycle_via_double_slater() {
        let cert = gamma_ktuple_bnb(&cycle(6), 2).unwrap();
        assert_eq!(cert.value, 4);
        assert_eq!(cert.lower_bound, 4);
        assert_eq!(cert.bound_source, BoundSource::DoubleSlater);
        cert.validate(&cycle(6)).unwrap();
    }

    #[test]
    fn bnb_matches_brute_force_on_all_small_graphs() {
        use crate::graph::{enumerate_graphs, GraphFilter};
        for n in 1..=5usize {
            for g in enumerate_graphs(n, GraphFilter::default()).unwrap() {
                for k in 1..=3usize {
                    if g.min_degree() + 1 < k {
                        continue;
                    }
                    let brute = gamma_ktuple_bruteforce(&g, k).unwrap();
                    let bnb = gamma_ktuple_bnb(&g, k).unwrap();
                    assert_eq!(brute.value, bnb.value, "n={n} k={k} edges={:?}", g.edges());
                    bnb.validate(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn spider_tree_forces_every_vertex() {
        let g = crate::slater::spider_tree(1);
        let cert = gamma_ktuple_bnb(&g, 2).unwrap();
        assert_eq!(cert.value, 20);
        assert_eq!(cert.bound_source, BoundSource::ExhaustedSearch);
        assert!(cert.nodes <= 2, "leaf forcing should settle the root node");
    }

    #[test]
    fn budget_error_carries_incumbent() {
        // The spider tree's optimum (20) sits strictly above its double
        // Slater bound (15), so the search must run and immediately exceed a
        // zero-node budget.
        let g = crate::slater::spider_tree(1);
        match gamma_ktuple_bnb_budgeted(&g, 2, 0) {
            Err(Error::BudgetExceeded { incumbent, lower_bound }) => {
                assert_eq!(lower_bound, 15);
                assert!(incumbent.unwrap() >= 20);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn domatic_small_values() {
        let r = domatic_ktuple_exact(&complete(3), 1).unwrap();
        assert_eq!(r.value, 3);
        r.validate(&complete(3)).unwrap();
        assert_eq!(domatic_ktuple_exact(&complete(4), 2).unwrap().value, 2);
        assert_eq!(domatic_ktuple_exact(&cycle(4), 1).unwrap().value, 2);
        assert_eq!(domatic_ktuple_exact(&path(2), 1).unwrap().value, 2);
        assert_eq!(domatic_ktuple_exact(&star(3), 1).unwrap().value, 2);
    }

    #[test]
    fn domatic_bound_examples() {
        assert_eq!(domatic_upper_bound(4, 6, 1, 1), 4.0);
        assert_eq!(domatic_upper_bound(4, 6, 2, 2), 2.0);
        let c5 = domatic_upper_bound(5, 5, 1, 2);
        assert!((c5 - 2.7912878).abs() < 1e-6);
        // C5: d=2 admissible, d=3 not.
        assert!(domatic_quadratic_slack(5, 5, 1, 2, 2) > 0);
        assert!(domatic_quadratic_slack(5, 5, 1, 2, 3) < 0);
        // K4 with k=1 attains equality at d=4.
        assert_eq!(domatic_quadratic_slack(4, 6, 1, 1, 4), 0);
    }

    #[test]
    fn full_graphs_and_witnesses() {
        assert!(is_full(&complete(3)).unwrap());
        assert!(is_full(&path(2)).unwrap());
        assert!(!is_full(&cycle(4)).unwrap());
        let w = full_structure_witness(&complete(3)).unwrap().unwrap();
        assert_eq!(w.partition.len(), 3);
        assert!(full_structure_witness(&cycle(4)).unwrap().is_none());
    }

    #[test]
    fn certificate_validation_rejects_tampering() {
        let g = cycle(6);
        let mut cert = gamma_ktuple_bnb(&g, 2).unwrap();
        cert.set.pop();
        assert!(cert.validate(&g).is_err());
    }
}
