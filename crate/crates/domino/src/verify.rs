//! Exhaustive and randomized verification of the library's bound and
//! structure claims, producing machine-readable pass/fail reports.
//!
//! Each claim is identified by a short id and checked over an explicit
//! universe: all labeled graphs up to `n_max` (optionally filtered by a
//! hypothesis such as minimum degree or connectivity), all labeled trees,
//! all labeled regular graphs, or a seeded random family. Both sides of
//! every claim are computed by independent routes — brute-force solvers on
//! one side, closed forms, degree-sequence bounds, or structure recognizers
//! on the other — so a bug in either route surfaces as a counterexample.
//!
//! Reports are deterministic: the same id, `n_max`, seed, and universe
//! produce byte-identical JSON regardless of the worker count, because
//! universes are sharded into contiguous index ranges and merged in range
//! order. Wall time is deliberately not part of the report.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::exact::{
    domatic_ktuple_exact, domatic_quadratic_slack, full_structure_witness,
    gamma_ktuple_bnb, gamma_ktuple_bruteforce, is_full, is_ktuple_dominating, FullWitness,
    BRUTE_FORCE_MAX_N,
};
use crate::families::{recognize_equality_family, regular_full_decomposition};
use crate::graph::{
    corona, emit_graph6, enumerate_regular, extend_transitive_orientation, graph_from_mask,
    k1_corona_tower, pair_list, prufer_to_tree, DegreeProfile, Graph, GraphBuilder, Orientation,
};
use crate::slater::{
    double_slater, gap_and_boundary_checks, regularity_bounds, size_bound_equality_predicate,
    size_bound_numerator, SCHEMA,
};

/// Ids accepted by [`verify_theorem`].
pub const THEOREM_IDS: &[&str] = &[
    "eq1",
    "prop21",
    "prop22",
    "thm-general",
    "thm-t2",
    "thm-t3",
    "thm-t4",
    "cor-formula",
    "tower",
    "thm-domatic",
    "thm-full",
    "cor-regular-full",
];

/// Seed used for the randomized universes when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Largest `n` for the labeled-tree universe (`n^(n-2)` trees).
const MAX_TREE_N: usize = 10;

/// Largest factor order for the corona identity universe; the product
/// order `|V(G)|·(1 + |V(H)|)` must stay within brute-force reach.
const MAX_CORONA_FACTOR_N: usize = 4;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Worker threads for sharded universes (clamped to at least 1).
    pub jobs: usize,
    /// Seed for the randomized universes; recorded in their reports.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: 1, seed: DEFAULT_SEED }
    }
}

/// One counterexample: the offending graph and what went wrong on it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

/// Outcome of one verification run. `failures` empty means the claim held
/// on every instance of the stated universe.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub theorem: String,
    pub universe: String,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub instances: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the claim named by `id` over its universe up to `n_max`.
///
/// Supported ids and the claims they check:
///
/// * `eq1` — the double domination number is at least the double Slater
///   number (all graphs with minimum degree ≥ 1).
/// * `prop21` — `⌈2n/(1+Δ)⌉ ≤ sl×2 ≤ ⌈2n/(1+δ)⌉` (minimum degree ≥ 2).
/// * `prop22` — the gap `sl×2 − sl` lies in `[1, ⌈n/(δ+1)⌉]`, and the
///   boundary characterizations of `sl×2 = 2`, `sl×2 = n`, and
///   `sl×2 = 2n/(1+Δ)` are exact (minimum degree ≥ 2).
/// * `thm-general` — `3·γ×2 ≥ 4n−2m+e−p` with equality exactly on the
///   graphs accepted by the equality-family recognizer (minimum degree ≥ 1).
/// * `thm-t2` — the tree form `3·γ×2 ≥ 2n+e−p+2` with the same equality
///   recognizer (all labeled trees).
/// * `thm-t3` — `3·γ×2 ≥ 2n+e−p+2−2(m−n+1)` (connected graphs).
/// * `thm-t4` — `γ×2 ≥ sl×2` and `3·sl×2 ≥ 4n−2m+e−p`, the latter with
///   equality exactly when the degree-sequence predicate holds (minimum
///   degree ≥ 1).
/// * `cor-formula` — `γ×k(G⊙H) = |V(G)|·(γ×(k−1)(H)+1)` on seeded random
///   pairs for k ∈ {2, 3}, brute force and branch-and-bound both agreeing.
/// * `tower` — iterated coronas with `K1` satisfy `γ×k = γ(H)+k−1` and have
///   diameter ≤ 2, and extending a transitive orientation by a universal
///   source stays transitive (seeded random inputs).
/// * `thm-domatic` — `2m−(k−1)n−k·γ×k·d(d−1) ≥ 0` for the exact k-tuple
///   domatic number `d`, and zero slack forces equal part sizes `γ×k` with
///   every vertex meeting its own part `k−1` times and every other part `k`
///   times (k ∈ {1, 2}, minimum degree ≥ k−1).
/// * `thm-full` — the domatic number reaches `δ+1` exactly when a witness
///   partition exists whose minimum-degree vertex is isolated in its own
///   part and has exactly one neighbor in each other part (all graphs).
/// * `cor-regular-full` — a regular graph is domatically full exactly when
///   it splits into `r+1` equal independent parts with a perfect matching
///   between every two parts (all labeled regular graphs).
pub fn verify_theorem(id: &str, n_max: usize, opts: &VerifyOptions) -> Result<Report> {
    let jobs = opts.jobs.max(1);
    match id {
        "eq1" => verify_eq1(n_max, jobs),
        "prop21" => verify_prop21(n_max, jobs),
        "prop22" => verify_prop22(n_max, jobs),
        "thm-general" => verify_thm_general(n_max, jobs),
        "thm-t2" => verify_thm_t2(n_max, jobs),
        "thm-t3" => verify_thm_t3(n_max, jobs),
        "thm-t4" => verify_thm_t4(n_max, jobs),
        "cor-formula" => verify_cor_formula(n_max, opts.seed),
        "tower" => verify_tower(n_max, opts.seed),
        "thm-domatic" => verify_thm_domatic(n_max, jobs),
        "thm-full" => verify_thm_full(n_max, jobs),
        "cor-regular-full" => verify_cor_regular_full(n_max, jobs),
        _ => Err(Error::UnknownTheorem(id.to_string())),
    }
}

// ---------------------------------------------------------------------------
// Sharded scan drivers
// ---------------------------------------------------------------------------

/// A check returns `None` when the instance is outside the hypothesis (not
/// counted), `Some(None)` on a pass, and `Some(Some(detail))` on a failure.
type Verdict = Option<Option<String>>;

/// Splits `0..total` into at most `jobs` contiguous ranges, runs them on
/// scoped threads, and merges `(instances, failures)` in range order, so the
/// outcome is independent of the worker count.
fn run_sharded<F>(total: u64, jobs: usize, run_range: F) -> (u64, Vec<Failure>)
where
    F: Fn(u64, u64) -> (u64, Vec<Failure>) + Sync,
{
    let jobs = (jobs.max(1) as u64).min(64).min(total.max(1));
    let chunk = total.div_ceil(jobs);
    let mut results: Vec<(u64, Vec<Failure>)> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let lo = j * chunk;
                let hi = ((j + 1) * chunk).min(total);
                let run = &run_range;
                scope.spawn(move || if lo >= hi { (0, Vec::new()) } else { run(lo, hi) })
            })
            .collect();
        results = handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .collect();
    });
    let mut instances = 0;
    let mut failures = Vec::new();
    for (i, f) in results {
        instances += i;
        failures.extend(f);
    }
    (instances, failures)
}

/// Scans every labeled graph with `n_lo <= n <= n_max` by edge-mask
/// enumeration, sharding each order's `2^(n choose 2)` masks.
fn mask_scan<F>(n_lo: usize, n_max: usize, jobs: usize, check: F) -> Result<(u64, Vec<Failure>)>
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    if n_max > crate::graph::MAX_ENUM_N {
        return Err(Error::TooLarge(format!(
            "exhaustive graph scans support n_max <= {}, got {n_max}",
            crate::graph::MAX_ENUM_N
        )));
    }
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in n_lo..=n_max {
        let pairs = pair_list(n);
        let total = 1u64 << pairs.len();
        let (i, f) = run_sharded(total, jobs, |lo, hi| {
            let mut inst = 0;
            let mut fails = Vec::new();
            for mask in lo..hi {
                let g = graph_from_mask(n, &pairs, mask as u32);
                match check(&g) {
                    None => {}
                    Some(None) => inst += 1,
                    Some(Some(detail)) => {
                        inst += 1;
                        fails.push(Failure { graph6: emit_graph6(&g), detail });
                    }
                }
            }
            (inst, fails)
        });
        instances += i;
        failures.extend(f);
    }
    Ok((instances, failures))
}

/// Scans every labeled tree with `2 <= n <= n_max`, sharding each order's
/// `n^(n-2)` Prüfer sequences by direct mixed-radix indexing.
fn tree_scan<F>(n_max: usize, jobs: usize, check: F) -> Result<(u64, Vec<Failure>)>
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    if n_max > MAX_TREE_N {
        return Err(Error::TooLarge(format!(
            "exhaustive tree scans support n_max <= {MAX_TREE_N}, got {n_max}"
        )));
    }
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 2..=n_max {
        let total = (n as u64).pow((n - 2) as u32);
        let (i, f) = run_sharded(total, jobs, |lo, hi| {
            let mut inst = 0;
            let mut fails = Vec::new();
            let mut seq = vec![0usize; n - 2];
            for index in lo..hi {
                let mut rest = index;
                for digit in seq.iter_mut() {
                    *digit = (rest % n as u64) as usize;
                    rest /= n as u64;
                }
                let g = prufer_to_tree(&seq, n).expect("in-range Prüfer digits");
                match check(&g) {
                    None => {}
                    Some(None) => inst += 1,
                    Some(Some(detail)) => {
                        inst += 1;
                        fails.push(Failure { graph6: emit_graph6(&g), detail });
                    }
                }
            }
            (inst, fails)
        });
        instances += i;
        failures.extend(f);
    }
    Ok((instances, failures))
}

/// Scans a materialized list of graphs, sharded by index.
fn slice_scan<F>(graphs: &[Graph], jobs: usize, check: F) -> (u64, Vec<Failure>)
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    run_sharded(graphs.len() as u64, jobs, |lo, hi| {
        let mut inst = 0;
        let mut fails = Vec::new();
        for g in &graphs[lo as usize..hi as usize] {
            match check(g) {
                None => {}
                Some(None) => inst += 1,
                Some(Some(detail)) => {
                    inst += 1;
                    fails.push(Failure { graph6: emit_graph6(g), detail });
                }
            }
        }
        (inst, fails)
    })
}

fn make_report(
    theorem: &str,
    universe: String,
    n_max: usize,
    seed: Option<u64>,
    scanned: (u64, Vec<Failure>),
) -> Report {
    Report {
        schema: SCHEMA,
        theorem: theorem.to_string(),
        universe,
        n_max,
        seed,
        instances: scanned.0,
        failures: scanned.1,
    }
}

// ---------------------------------------------------------------------------
// Degree-sequence bound claims
// ---------------------------------------------------------------------------

fn verify_eq1(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(1, n_max, jobs, |g| {
        if g.min_degree() < 1 {
            return None;
        }
        let p = DegreeProfile::new(g);
        let sl2 = double_slater(&p).expect("minimum degree 1 checked");
        let gamma = gamma_ktuple_bruteforce(g, 2).expect("defined for minimum degree >= 1").value;
        Some((gamma < sl2).then(|| {
            format!("double domination number {gamma} is below the double Slater number {sl2}")
        }))
    })?;
    Ok(make_report(
        "eq1",
        format!("all labeled graphs with minimum degree >= 1 and n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

fn verify_prop21(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(1, n_max, jobs, |g| {
        if g.n() == 0 || g.min_degree() < 2 {
            return None;
        }
        let p = DegreeProfile::new(g);
        let (lo, hi) = regularity_bounds(&p).expect("minimum degree 2 checked");
        let sl2 = double_slater(&p).expect("minimum degree 2 checked");
        Some((sl2 < lo || sl2 > hi).then(|| {
            format!("double Slater number {sl2} escapes the degree bounds [{lo}, {hi}]")
        }))
    })?;
    Ok(make_report(
        "prop21",
        format!("all labeled graphs with minimum degree >= 2 and n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

fn verify_prop22(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(1, n_max, jobs, |g| {
        if g.n() == 0 || g.min_degree() < 2 {
            return None;
        }
        let p = DegreeProfile::new(g);
        let c = gap_and_boundary_checks(&p).expect("minimum degree 2 checked");
        let sl2 = double_slater(&p).expect("minimum degree 2 checked");
        let mut broken: Vec<&str> = Vec::new();
        if !c.gap_within_bounds {
            broken.push("gap outside [1, ceil(n/(min_degree+1))]");
        }
        if c.sl2_is_two != c.two_universal_vertices {
            broken.push("value-2 characterization");
        }
        if c.sl2_is_n != c.size_at_most_half {
            broken.push("value-n characterization");
        }
        if c.sl2_hits_ratio != c.ratio_integral_with_max_degree_tail {
            broken.push("max-degree-ratio characterization");
        }
        if sl2 < 2 || sl2 > g.n() {
            broken.push("value outside [2, n]");
        }
        Some((!broken.is_empty()).then(|| broken.join("; ")))
    })?;
    Ok(make_report(
        "prop22",
        format!("all labeled graphs with minimum degree >= 2 and n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

fn verify_thm_t4(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(1, n_max, jobs, |g| {
        if g.min_degree() < 1 {
            return None;
        }
        let p = DegreeProfile::new(g);
        let sl2 = double_slater(&p).expect("minimum degree 1 checked");
        let gamma = gamma_ktuple_bruteforce(g, 2).expect("defined for minimum degree >= 1").value;
        let numer = size_bound_numerator(&p);
        let predicate =
            size_bound_equality_predicate(&p).expect("minimum degree 1 checked");
        let mut broken: Vec<String> = Vec::new();
        if gamma < sl2 {
            broken.push(format!(
                "double domination number {gamma} is below the double Slater number {sl2}"
            ));
        }
        if (3 * sl2 as i64) < numer {
            broken.push(format!(
                "3 * double Slater number {sl2} falls below the size bound numerator {numer}"
            ));
        }
        if (3 * sl2 as i64 == numer) != predicate {
            broken.push(format!(
                "equality predicate {predicate} disagrees with 3*{sl2} vs {numer}"
            ));
        }
        Some((!broken.is_empty()).then(|| broken.join("; ")))
    })?;
    Ok(make_report(
        "thm-t4",
        format!("all labeled graphs with minimum degree >= 1 and n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

// ---------------------------------------------------------------------------
// Size-bound and equality-family claims
// ---------------------------------------------------------------------------

/// Shared body for the general size bound and its tree form: checks
/// `3·γ×2 ≥ numer` and that equality holds exactly on recognizer-accepted
/// graphs, cross-validating the returned witness.
fn check_size_bound_equality(g: &Graph, numer: i64) -> Option<String> {
    let gamma = gamma_ktuple_bruteforce(g, 2).expect("defined for minimum degree >= 1").value;
    let lhs = 3 * gamma as i64;
    if lhs < numer {
        return Some(format!(
            "3 * double domination number {gamma} falls below the bound numerator {numer}"
        ));
    }
    let witness = recognize_equality_family(g).expect("defined for minimum degree >= 1");
    match (lhs == numer, witness) {
        (true, None) => Some(format!(
            "bound is tight (3*{gamma} = {numer}) but the equality-family recognizer rejects"
        )),
        (false, Some(_)) => Some(format!(
            "equality-family recognizer accepts but the bound is strict (3*{gamma} > {numer})"
        )),
        (true, Some(w)) => {
            let s = VertexSet::from_members(g.n(), &w.dominating_set);
            if w.dominating_set.len() != gamma {
                Some(format!(
                    "recognizer witness has {} vertices but the double domination number is {gamma}",
                    w.dominating_set.len()
                ))
            } else if !is_ktuple_dominating(g, &s, 2) {
                Some("recognizer witness set is not double dominating".to_string())
            } else {
                None
            }
        }
        (false, None) => None,
    }
}

fn verify_thm_general(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(1, n_max, jobs, |g| {
        if g.min_degree() < 1 {
            return None;
        }
        let numer = size_bound_numerator(&DegreeProfile::new(g));
        Some(check_size_bound_equality(g, numer))
    })?;
    Ok(make_report(
        "thm-general",
        format!("all labeled graphs with minimum degree >= 1 and n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

fn verify_thm_t2(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = tree_scan(n_max, jobs, |g| {
        let p = DegreeProfile::new(g);
        let numer = 2 * p.n as i64 + p.end_vertices as i64 - p.penultimate as i64 + 2;
        debug_assert_eq!(numer, size_bound_numerator(&p), "tree form must match on trees");
        Some(check_size_bound_equality(g, numer))
    })?;
    Ok(make_report(
        "thm-t2",
        format!("all labeled trees with 2 <= n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

fn verify_thm_t3(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(2, n_max, jobs, |g| {
        if !g.is_connected() {
            return None;
        }
        let p = DegreeProfile::new(g);
        let cycle_rank = p.m as i64 - p.n as i64 + 1;
        let numer = 2 * p.n as i64 + p.end_vertices as i64 - p.penultimate as i64 + 2
            - 2 * cycle_rank;
        let gamma = gamma_ktuple_bruteforce(g, 2).expect("connected with n >= 2").value;
        Some(((3 * gamma as i64) < numer).then(|| {
            format!(
                "3 * double domination number {gamma} falls below the cycle-adjusted numerator {numer}"
            )
        }))
    })?;
    Ok(make_report(
        "thm-t3",
        format!("all connected labeled graphs with 2 <= n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

// ---------------------------------------------------------------------------
// Seeded random universes: corona identity, towers, orientations
// ---------------------------------------------------------------------------

fn random_graph(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize) -> Graph {
    let n = rng.gen_range(n_lo..=n_hi);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

fn random_graph_min_degree_1(rng: &mut ChaCha8Rng, n_hi: usize) -> Graph {
    loop {
        let g = random_graph(rng, 2, n_hi);
        if g.min_degree() >= 1 {
            return g;
        }
    }
}

fn verify_cor_formula(n_max: usize, seed: u64) -> Result<Report> {
    if n_max > MAX_CORONA_FACTOR_N {
        return Err(Error::TooLarge(format!(
            "corona verification supports factor orders <= {MAX_CORONA_FACTOR_N}, got {n_max}"
        )));
    }
    if n_max < 2 {
        return Err(Error::Undefined(
            "corona verification needs n_max >= 2 so k = 3 factors with minimum degree >= 1 exist"
                .into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Sample every instance up front in a fixed order so the report depends
    // only on the seed.
    let mut items: Vec<(Graph, Graph, usize)> = Vec::new();
    for _ in 0..50 {
        let g = random_graph(&mut rng, 1, n_max);
        let h2 = random_graph(&mut rng, 1, n_max);
        let h3 = random_graph_min_degree_1(&mut rng, n_max);
        items.push((g.clone(), h2, 2));
        items.push((g, h3, 3));
    }
    let mut instances = 0;
    let mut failures = Vec::new();
    for (g, h, k) in &items {
        instances += 1;
        let (product, _) = corona(g, h);
        let inner = gamma_ktuple_bruteforce(h, k - 1)
            .expect("inner factor sampled with the required minimum degree")
            .value;
        let claimed = g.n() * (inner + 1);
        let brute = gamma_ktuple_bruteforce(&product, *k).expect("product order within reach");
        let bnb = gamma_ktuple_bnb(&product, *k).expect("product order within reach");
        let mut broken: Vec<String> = Vec::new();
        if let Err(e) = brute.validate(&product) {
            broken.push(format!("brute-force certificate invalid: {e}"));
        }
        if let Err(e) = bnb.validate(&product) {
            broken.push(format!("branch-and-bound certificate invalid: {e}"));
        }
        if brute.value != claimed || bnb.value != claimed {
            broken.push(format!(
                "corona identity predicts {claimed}, brute force found {}, branch and bound found {}",
                brute.value, bnb.value
            ));
        }
        if !broken.is_empty() {
            failures.push(Failure {
                graph6: emit_graph6(&product),
                detail: format!(
                    "k={k}, G={}, H={}: {}",
                    emit_graph6(g),
                    emit_graph6(h),
                    broken.join("; ")
                ),
            });
        }
    }
    Ok(make_report(
        "cor-formula",
        format!(
            "50 seeded random pairs (G, H) with factor orders <= {n_max}, checked for k in {{2, 3}}"
        ),
        n_max,
        Some(seed),
        (instances, failures),
    ))
}

/// Builds a random transitively oriented graph: shuffle a vertex order,
/// keep each forward pair with probability 1/2, then close transitively
/// (all arcs follow the order, so the closure is finite and acyclic).
fn random_transitive_orientation(rng: &mut ChaCha8Rng, n_hi: usize) -> (Graph, Orientation) {
    let n = rng.gen_range(1..=n_hi);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.gen_bool(0.5);
        }
    }
    for mid in 0..n {
        let (earlier, rest) = reach.split_at_mut(mid);
        let via = &rest[0];
        for row in earlier.iter_mut() {
            if row[mid] {
                for (j, &onward) in via.iter().enumerate().skip(mid + 1) {
                    if onward {
                        row[j] = true;
                    }
                }
            }
        }
    }
    let mut b = GraphBuilder::new(n);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if reach[i][j] {
                b.add_edge(order[i], order[j]);
                arcs.push((order[i], order[j]));
            }
        }
    }
    (b.build(), Orientation { arcs })
}

fn verify_tower(n_max: usize, seed: u64) -> Result<Report> {
    if n_max == 0 || n_max + 2 > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge(format!(
            "tower verification supports 1 <= n_max <= {}, got {n_max}",
            BRUTE_FORCE_MAX_N - 2
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases: Vec<Graph> = (0..20).map(|_| random_graph(&mut rng, 1, n_max)).collect();
    let oriented: Vec<(Graph, Orientation)> =
        (0..20).map(|_| random_transitive_orientation(&mut rng, n_max)).collect();

    let mut instances = 0;
    let mut failures = Vec::new();
    for h in &bases {
        let gamma_h = gamma_ktuple_bruteforce(h, 1).expect("domination is always defined").value;
        for k in [2usize, 3] {
            instances += 1;
            let t = k1_corona_tower(h, k);
            let expected = gamma_h + k - 1;
            let brute = gamma_ktuple_bruteforce(&t, k).expect("tower has minimum degree >= k-1");
            let bnb = gamma_ktuple_bnb(&t, k).expect("tower has minimum degree >= k-1");
            let mut broken: Vec<String> = Vec::new();
            if brute.value != expected || bnb.value != expected {
                broken.push(format!(
                    "expected {expected}, brute force found {}, branch and bound found {}",
                    brute.value, bnb.value
                ));
            }
            match t.diameter() {
                Some(d) if d <= 2 => {}
                Some(d) => broken.push(format!("tower diameter {d} exceeds 2")),
                None => broken.push("tower is disconnected".to_string()),
            }
            if !broken.is_empty() {
                failures.push(Failure {
                    graph6: emit_graph6(&t),
                    detail: format!("k={k}, base H={}: {}", emit_graph6(h), broken.join("; ")),
                });
            }
        }
    }
    for (h, d) in &oriented {
        instances += 1;
        let extended = extend_transitive_orientation(h, d)
            .and_then(|(g2, d2)| extend_transitive_orientation(&g2, &d2));
        if let Err(e) = extended {
            failures.push(Failure {
                graph6: emit_graph6(h),
                detail: format!("orientation extension failed: {e}"),
            });
        }
    }
    Ok(make_report(
        "tower",
        format!(
            "20 seeded random base graphs with n <= {n_max} (towers for k in {{2, 3}}) \
             plus 20 seeded transitive orientations extended twice"
        ),
        n_max,
        Some(seed),
        (instances, failures),
    ))
}

// ---------------------------------------------------------------------------
// Domatic claims
// ---------------------------------------------------------------------------

fn verify_thm_domatic(n_max: usize, jobs: usize) -> Result<Report> {
    let mut instances = 0;
    let mut failures = Vec::new();
    for k in [1usize, 2] {
        let (i, f) = mask_scan(1, n_max, jobs, |g| {
            if g.min_degree() + 1 < k {
                return None;
            }
            let d = domatic_ktuple_exact(g, k).expect("defined for minimum degree >= k-1");
            if let Err(e) = d.validate(g) {
                return Some(Some(format!("k={k}: domatic partition invalid: {e}")));
            }
            let gamma =
                gamma_ktuple_bruteforce(g, k).expect("defined for minimum degree >= k-1").value;
            let slack = domatic_quadratic_slack(g.n(), g.m(), k, gamma, d.value);
            if slack < 0 {
                return Some(Some(format!(
                    "k={k}: quadratic slack {slack} is negative for domatic number {} and \
                     domination number {gamma}",
                    d.value
                )));
            }
            if slack == 0 {
                if let Some(detail) = check_tight_domatic_structure(g, k, gamma, &d.partition) {
                    return Some(Some(format!("k={k}, zero slack: {detail}")));
                }
            }
            Some(None)
        })?;
        instances += i;
        failures.extend(f);
    }
    Ok(make_report(
        "thm-domatic",
        format!(
            "all labeled graphs with minimum degree >= k-1 and n <= {n_max}, for k in {{1, 2}}"
        ),
        n_max,
        None,
        (instances, failures),
    ))
}

/// When the domatic bound is tight, every part must have size exactly
/// `gamma` and every vertex must meet its own part `k-1` times and every
/// other part exactly `k` times.
fn check_tight_domatic_structure(
    g: &Graph,
    k: usize,
    gamma: usize,
    partition: &[Vec<usize>],
) -> Option<String> {
    let mut part_of = vec![usize::MAX; g.n()];
    for (pi, part) in partition.iter().enumerate() {
        if part.len() != gamma {
            return Some(format!(
                "part {pi} has {} vertices, expected the domination number {gamma}",
                part.len()
            ));
        }
        for &v in part {
            part_of[v] = pi;
        }
    }
    for v in 0..g.n() {
        let mut counts = vec![0usize; partition.len()];
        for u in g.neighbors(v) {
            counts[part_of[u]] += 1;
        }
        for (pi, &c) in counts.iter().enumerate() {
            let want = if pi == part_of[v] { k - 1 } else { k };
            if c != want {
                return Some(format!(
                    "vertex {v} has {c} neighbors in part {pi}, expected {want}"
                ));
            }
        }
    }
    None
}

fn verify_thm_full(n_max: usize, jobs: usize) -> Result<Report> {
    let scanned = mask_scan(1, n_max, jobs, |g| {
        let full = is_full(g).expect("nonempty and within the search cap");
        let witness = full_structure_witness(g).expect("nonempty and within the search cap");
        match (full, witness) {
            (true, None) => Some(Some(
                "graph is domatically full but no structured witness was found".to_string(),
            )),
            (false, Some(_)) => Some(Some(
                "structured witness exists but the graph is not domatically full".to_string(),
            )),
            (true, Some(w)) => Some(validate_full_witness(g, &w)),
            (false, None) => Some(None),
        }
    })?;
    Ok(make_report(
        "thm-full",
        format!("all labeled graphs with 1 <= n <= {n_max}"),
        n_max,
        None,
        scanned,
    ))
}

/// Re-checks every structural property a fullness witness claims.
fn validate_full_witness(g: &Graph, w: &FullWitness) -> Option<String> {
    let delta = g.min_degree();
    if w.partition.len() != delta + 1 {
        return Some(format!(
            "witness has {} parts, expected min degree + 1 = {}",
            w.partition.len(),
            delta + 1
        ));
    }
    let part_of = match exact_cover(g.n(), &w.partition) {
        Ok(p) => p,
        Err(detail) => return Some(detail),
    };
    for (pi, part) in w.partition.iter().enumerate() {
        let s = VertexSet::from_members(g.n(), part);
        if !is_ktuple_dominating(g, &s, 1) {
            return Some(format!("part {pi} is not a dominating set"));
        }
    }
    let v = w.vertex;
    if v >= g.n() || g.degree(v) != delta {
        return Some(format!("witness vertex {v} does not have minimum degree {delta}"));
    }
    let mut counts = vec![0usize; delta + 1];
    for u in g.neighbors(v) {
        counts[part_of[u]] += 1;
    }
    if counts[part_of[v]] != 0 {
        return Some(format!("witness vertex {v} has a neighbor inside its own part"));
    }
    for (pi, &c) in counts.iter().enumerate() {
        if pi != part_of[v] && c != 1 {
            return Some(format!(
                "witness vertex {v} has {c} neighbors in part {pi}, expected exactly 1"
            ));
        }
    }
    None
}

/// Checks that `parts` partitions `0..n` exactly and returns the
/// part index of each vertex.
fn exact_cover(n: usize, parts: &[Vec<usize>]) -> std::result::Result<Vec<usize>, String> {
    let mut part_of = vec![usize::MAX; n];
    for (pi, part) in parts.iter().enumerate() {
        for &v in part {
            if v >= n {
                return Err(format!("part {pi} names vertex {v} outside the graph"));
            }
            if part_of[v] != usize::MAX {
                return Err(format!("vertex {v} appears in two parts"));
            }
            part_of[v] = pi;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(format!("vertex {v} is missing from the partition"));
    }
    Ok(part_of)
}

fn verify_cor_regular_full(n_max: usize, jobs: usize) -> Result<Report> {
    if n_max > crate::graph::MAX_ENUM_N {
        return Err(Error::TooLarge(format!(
            "regular-graph scans support n_max <= {}, got {n_max}",
            crate::graph::MAX_ENUM_N
        )));
    }
    let mut instances = 0;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for r in 0..n {
            if n * r % 2 != 0 {
                continue;
            }
            let graphs: Vec<Graph> = enumerate_regular(n, r)?.collect();
            let (i, f) = slice_scan(&graphs, jobs, |g| {
                let full = is_full(g).expect("nonempty and within the search cap");
                let decomposition =
                    regular_full_decomposition(g).expect("regular by construction");
                match (full, decomposition) {
                    (true, None) => Some(Some(
                        "regular graph is domatically full but no decomposition was found"
                            .to_string(),
                    )),
                    (false, Some(_)) => Some(Some(
                        "decomposition exists but the graph is not domatically full".to_string(),
                    )),
                    (true, Some(parts)) => Some(validate_regular_decomposition(g, r, &parts)),
                    (false, None) => Some(None),
                }
            });
            instances += i;
            failures.extend(f);
        }
    }
    Ok(make_report(
        "cor-regular-full",
        format!("all labeled r-regular graphs with 1 <= n <= {n_max} and 0 <= r < n"),
        n_max,
        None,
        (instances, failures),
    ))
}

/// A full `r`-regular graph must split into `r+1` equal independent parts
/// with a perfect matching between every two parts.
fn validate_regular_decomposition(g: &Graph, r: usize, parts: &[Vec<usize>]) -> Option<String> {
    if parts.len() != r + 1 {
        return Some(format!("{} parts, expected r + 1 = {}", parts.len(), r + 1));
    }
    let part_of = match exact_cover(g.n(), parts) {
        Ok(p) => p,
        Err(detail) => return Some(detail),
    };
    let share = g.n() / (r + 1);
    if !g.n().is_multiple_of(r + 1) || parts.iter().any(|p| p.len() != share) {
        return Some(format!("parts do not split {} vertices equally", g.n()));
    }
    for (pi, part) in parts.iter().enumerate() {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if g.has_edge(u, v) {
                    return Some(format!("part {pi} is not independent: edge {{{u},{v}}}"));
                }
            }
        }
    }
    for v in 0..g.n() {
        let mut counts = vec![0usize; parts.len()];
        for u in g.neighbors(v) {
            counts[part_of[u]] += 1;
        }
        for (pi, &c) in counts.iter().enumerate() {
            if pi != part_of[v] && c != 1 {
                return Some(format!(
                    "vertex {v} has {c} neighbors in part {pi}, expected exactly 1 \
                     (perfect matching)"
                ));
            }
        }
    }
    None
}
