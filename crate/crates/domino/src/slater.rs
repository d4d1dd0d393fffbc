//! Degree-sequence lower bounds for domination and double domination.
//!
//! With degrees sorted non-increasingly (`d_1 >= d_2 >= ...`):
//!
//! * the Slater number `sl(G)` is the least `t` with `t + d_1 + ... + d_t >= n`,
//!   a lower bound for the domination number;
//! * the double Slater number `sl2(G)` is the least `t` with
//!   `t + d_1 + ... + d_(t-e) >= 2n - p`, where `e` counts end-vertices and
//!   `p` counts penultimate vertices (sum empty when `t <= e`), a lower
//!   bound for the double domination number of any graph with minimum
//!   degree at least 1.
//!
//! The module also provides the closed-form sandwich `ceil(2n/(1+Δ)) <=
//! sl2 <= ceil(2n/(1+δ))` for `δ >= 2`, the structural facts about the gap
//! `sl2 - sl` and the boundary values 2 and `n`, the size-based bound
//! `(4n - 2m + e - p)/3` with its exact equality predicate, and two
//! constructions showing the bounds can beat older leaf/support bounds by
//! arbitrary margins.

use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Graph, GraphBuilder};
use serde::Serialize;

/// Slater number: least `t >= 1` with `t + prefix[t] >= n`. Defined for
/// every nonempty graph (isolated vertices allowed).
pub fn slater_number(p: &DegreeProfile) -> usize {
    debug_assert!(p.n >= 1, "Slater number needs a nonempty graph");
    let mut t = 1;
    while t + p.prefix[t] < p.n {
        t += 1;
    }
    debug_assert!(t <= p.n, "t = n always satisfies t + sum of all degrees >= n");
    t
}

/// Double Slater number: least `t` with `t + sum of the largest `t - e`
/// degrees `>= 2n - p`. Requires minimum degree at least 1.
pub fn double_slater(p: &DegreeProfile) -> Result<usize> {
    if p.n == 0 || p.min_degree < 1 {
        return Err(Error::Undefined(
            "double Slater number requires minimum degree >= 1".into(),
        ));
    }
    let target = 2 * p.n - p.penultimate;
    let value = |t: usize| t + p.prefix[t.saturating_sub(p.end_vertices)];
    let mut t = 1;
    while value(t) < target {
        t += 1;
        debug_assert!(
            t <= p.n,
            "t = n satisfies n + (2m - e) >= 2n - p for every graph with min degree >= 1"
        );
    }
    #[cfg(debug_assertions)]
    for s in t..=p.n {
        // The predicate is monotone in t, so the linear scan finds the minimum.
        debug_assert!(value(s) >= target, "double Slater predicate must be monotone");
    }
    Ok(t)
}

/// Closed-form sandwich for `sl2` when the minimum degree is at least 2:
/// returns `(ceil(2n/(1+Δ)), ceil(2n/(1+δ)))`.
pub fn regularity_bounds(p: &DegreeProfile) -> Result<(usize, usize)> {
    if p.min_degree < 2 {
        return Err(Error::Undefined(
            "the 2n/(1+degree) sandwich requires minimum degree >= 2".into(),
        ));
    }
    Ok((
        (2 * p.n).div_ceil(1 + p.max_degree),
        (2 * p.n).div_ceil(1 + p.min_degree),
    ))
}

/// Both sides of each structural biconditional about `sl2` for graphs with
/// minimum degree at least 2, so a harness can assert the equivalences
/// rather than trusting them:
///
/// * `1 <= sl2 - sl <= ceil(n/(δ+1))` (checked directly);
/// * `sl2 = 2` iff at least two vertices have degree `n-1`;
/// * `sl2 = n` iff `m <= floor((n+δ)/2)`;
/// * `sl2 = 2n/(1+Δ)` iff `(1+Δ) | 2n` and `d_(2n/(1+Δ)) = Δ`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GapAndBoundaryChecks {
    pub gap: usize,
    pub gap_within_bounds: bool,
    pub sl2_is_two: bool,
    pub two_universal_vertices: bool,
    pub sl2_is_n: bool,
    pub size_at_most_half: bool,
    pub sl2_hits_ratio: bool,
    pub ratio_integral_with_max_degree_tail: bool,
}

pub fn gap_and_boundary_checks(p: &DegreeProfile) -> Result<GapAndBoundaryChecks> {
    if p.min_degree < 2 {
        return Err(Error::Undefined(
            "the gap and boundary characterizations require minimum degree >= 2".into(),
        ));
    }
    let sl = slater_number(p);
    let sl2 = double_slater(p)?;
    let gap = sl2 - sl;
    let two_n = 2 * p.n;
    let ratio_integral = two_n.is_multiple_of(1 + p.max_degree);
    let ratio = two_n / (1 + p.max_degree);
    Ok(GapAndBoundaryChecks {
        gap,
        gap_within_bounds: gap >= 1 && gap <= p.n.div_ceil(p.min_degree + 1),
        sl2_is_two: sl2 == 2,
        two_universal_vertices: p.degrees.iter().take(2).filter(|&&d| d == p.n - 1).count() >= 2,
        sl2_is_n: sl2 == p.n,
        size_at_most_half: p.m <= (p.n + p.min_degree) / 2,
        sl2_hits_ratio: ratio_integral && sl2 == ratio,
        ratio_integral_with_max_degree_tail: ratio_integral
            && ratio >= 1
            && ratio <= p.n
            && p.degrees[ratio - 1] == p.max_degree,
    })
}

/// Numerator of the size-based double domination lower bound
/// `(4n - 2m + e - p) / 3`; the denominator is always 3. Kept as an exact
/// integer so equality tests never touch floating point.
pub fn size_bound_numerator(p: &DegreeProfile) -> i64 {
    4 * p.n as i64 - 2 * p.m as i64 + p.end_vertices as i64 - p.penultimate as i64
}

/// Exact predicate for `sl2 = (4n - 2m + e - p)/3`, stated purely in terms
/// of the degree sequence. Requires minimum degree at least 1. Holds iff
/// `n + m + e - p ≡ 0 (mod 3)` and:
///
/// * if `δ >= 2`: `d_q = 2` where `q = (4n - 2m + 3)/3`;
/// * if `δ = 1`: either `n = 2m - e + p`, or `n < 2m - e + p` and
///   `d_q = 2` where `q = (4n - 2m - 2e - p + 3)/3`.
pub fn size_bound_equality_predicate(p: &DegreeProfile) -> Result<bool> {
    if p.n == 0 || p.min_degree < 1 {
        return Err(Error::Undefined(
            "the size-bound equality predicate requires minimum degree >= 1".into(),
        ));
    }
    let (n, m) = (p.n as i64, p.m as i64);
    let (e, pen) = (p.end_vertices as i64, p.penultimate as i64);
    if (n + m + e - pen).rem_euclid(3) != 0 {
        return Ok(false);
    }
    let degree_at = |q: i64| -> Option<usize> {
        (q >= 1 && q <= n).then(|| p.degrees[(q - 1) as usize])
    };
    if p.min_degree >= 2 {
        let q = (4 * n - 2 * m + 3) / 3;
        return Ok(degree_at(q) == Some(2));
    }
    if n == 2 * m - e + pen {
        return Ok(true);
    }
    if n < 2 * m - e + pen {
        let q = (4 * n - 2 * m - 2 * e - pen + 3) / 3;
        return Ok(degree_at(q) == Some(2));
    }
    Ok(false)
}

/// Wheel-minus-rim-gap construction: a hub joined to every vertex of a path
/// on `4b + 3` vertices (order `n = 4b + 4`). Its double Slater number is
/// `b + 2`, while `ceil(2n/(1+Δ)) = 2`, so the degree-sequence bound beats
/// the maximum-degree bound by an arbitrary margin.
pub fn star_plus_path(b: usize) -> Graph {
    assert!(b >= 1);
    let n = 4 * b + 4;
    let mut g = GraphBuilder::new(n);
    for v in 1..n {
        g.add_edge(0, v);
        if v + 1 < n {
            g.add_edge(v, v + 1);
        }
    }
    g.build()
}

/// Spider construction: a path on `6b + 4` vertices with one extra leaf
/// joined to every path vertex (order `n = 12b + 8`). Its double Slater
/// number is `9b + 6`, which exceeds the leaf/support bound
/// `(2n + leaves - supports + 2)/3 = 8b + 6` by exactly `b`.
pub fn spider_tree(b: usize) -> Graph {
    assert!(b >= 1);
    let path_len = 6 * b + 4;
    let mut g = GraphBuilder::new(2 * path_len);
    for v in 0..path_len {
        if v + 1 < path_len {
            g.add_edge(v, v + 1);
        }
        g.add_edge(v, path_len + v);
    }
    g.build()
}

/// Everything the `slater` CLI subcommand reports for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct SlaterReport {
    pub schema: &'static str,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub end_vertices: usize,
    pub penultimate: usize,
    pub slater: usize,
    pub double_slater: usize,
    /// `(ceil(2n/(1+Δ)), ceil(2n/(1+δ)))`, only when `δ >= 2`.
    pub regularity_bounds: Option<(usize, usize)>,
    /// Exact value of `(4n - 2m + e - p)` — the size bound times 3.
    pub size_bound_numerator: i64,
    pub size_bound_denominator: i64,
    pub size_bound_ceil: i64,
    pub size_bound_equality: bool,
    pub gap_checks: Option<GapAndBoundaryChecks>,
}

pub const SCHEMA: &str = "domino/v1";

pub fn slater_report(g: &Graph) -> Result<SlaterReport> {
    let p = DegreeProfile::new(g);
    let sl = slater_number(&p);
    let sl2 = double_slater(&p)?;
    debug_assert!(sl <= sl2, "sl <= sl2 whenever both are defined");
    let num = size_bound_numerator(&p);
    debug_assert!(3 * sl2 as i64 >= num, "sl2 dominates the size bound");
    Ok(SlaterReport {
        schema: SCHEMA,
        n: p.n,
        m: p.m,
        min_degree: p.min_degree,
        max_degree: p.max_degree,
        end_vertices: p.end_vertices,
        penultimate: p.penultimate,
        slater: sl,
        double_slater: sl2,
        regularity_bounds: regularity_bounds(&p).ok(),
        size_bound_numerator: num,
        size_bound_denominator: 3,
        size_bound_ceil: num.div_euclid(3) + i64::from(num.rem_euclid(3) != 0),
        size_bound_equality: size_bound_equality_predicate(&p)?,
        gap_checks: gap_and_boundary_checks(&p).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, Graph};

    fn profile(g: &Graph) -> DegreeProfile {
        DegreeProfile::new(g)
    }

    #[test]
    fn slater_small_graphs() {
        assert_eq!(slater_number(&profile(&complete(4))), 1);
        assert_eq!(slater_number(&profile(&cycle(6))), 2);
        assert_eq!(slater_number(&profile(&path(3))), 1);
        assert_eq!(slater_number(&profile(&star(4))), 1);
    }

    #[test]
    fn double_slater_small_graphs() {
        // K2: t=2 reaches 2n - p = 2 with the empty degree sum.
        assert_eq!(double_slater(&profile(&path(2))).unwrap(), 2);
        // C6 is 2-regular: ceil(12/3) = 4.
        assert_eq!(double_slater(&profile(&cycle(6))).unwrap(), 4);
        // P3: e=2, p=1, target 5; t=3 gives 3 + d_1 = 5.
        assert_eq!(double_slater(&profile(&path(3))).unwrap(), 3);
        assert_eq!(double_slater(&profile(&complete(4))).unwrap(), 2);
        // Stars force every vertex.
        assert_eq!(double_slater(&profile(&star(4))).unwrap(), 5);
    }

    #[test]
    fn double_slater_undefined_with_isolated_vertex() {
        let g = Graph::empty(3);
        assert!(double_slater(&profile(&g)).is_err());
    }

    #[test]
    fn double_slater_of_cycles_is_two_thirds() {
        for n in 3..=40 {
            let p = profile(&cycle(n));
            assert_eq!(double_slater(&p).unwrap(), (2 * n).div_ceil(3), "C_{n}");
        }
    }

    #[test]
    fn regularity_sandwich() {
        assert_eq!(regularity_bounds(&profile(&cycle(6))).unwrap(), (4, 4));
        assert_eq!(regularity_bounds(&profile(&complete(4))).unwrap(), (2, 2));
        // Hub of degree n-1 = 7, minimum degree 2: (ceil(16/8), ceil(16/3)).
        assert_eq!(regularity_bounds(&profile(&star_plus_path(1))).unwrap(), (2, 6));
        assert!(regularity_bounds(&profile(&path(3))).is_err());
    }

    #[test]
    fn star_plus_path_shape_and_value() {
        // b = 1: n = 8, degrees (7, 3,3,3,3,3, 2,2), sl2 = 3 = b + 2.
        let g = star_plus_path(1);
        let p = profile(&g);
        assert_eq!(p.n, 8);
        assert_eq!(p.degrees, vec![7, 3, 3, 3, 3, 3, 2, 2]);
        assert_eq!(double_slater(&p).unwrap(), 3);
        // b = 3: n = 16, one degree-15 hub, thirteen 3s, two 2s.
        let p3 = profile(&star_plus_path(3));
        assert_eq!(p3.n, 16);
        assert_eq!(p3.degrees[0], 15);
        assert_eq!(p3.degrees.iter().filter(|&&d| d == 3).count(), 13);
        assert_eq!(p3.degrees.iter().filter(|&&d| d == 2).count(), 2);
        for b in 1..=10 {
            let p = profile(&star_plus_path(b));
            assert_eq!(double_slater(&p).unwrap(), b + 2, "b={b}");
            assert_eq!((2 * p.n).div_ceil(1 + p.max_degree), 2);
        }
    }

    #[test]
    fn spider_tree_shape_and_value() {
        // b = 1: path on 10 with a leaf everywhere: n = 20, e = p = 10,
        // degrees: eight 3s, two 2s, ten 1s.
        let g = spider_tree(1);
        let p = profile(&g);
        assert_eq!((p.n, p.m), (20, 19));
        assert_eq!((p.end_vertices, p.penultimate), (10, 10));
        assert_eq!(p.degrees.iter().filter(|&&d| d == 3).count(), 8);
        assert_eq!(p.degrees.iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(p.degrees.iter().filter(|&&d| d == 1).count(), 10);
        assert_eq!(double_slater(&p).unwrap(), 15);
        for b in 1..=10 {
            let p = profile(&spider_tree(b));
            let n = p.n as i64;
            let leaf_support_bound =
                (2 * n + p.end_vertices as i64 - p.penultimate as i64 + 2) / 3;
            assert_eq!(double_slater(&p).unwrap() as i64, 9 * b as i64 + 6, "b={b}");
            assert_eq!(leaf_support_bound, 8 * b as i64 + 6);
        }
    }

    #[test]
    fn gap_between_single_and_double() {
        // Complete graphs: gap exactly 1 (the lower extreme).
        for n in 3..=10 {
            let c = gap_and_boundary_checks(&profile(&complete(n))).unwrap();
            assert_eq!(c.gap, 1, "K_{n}");
            assert!(c.gap_within_bounds);
        }
        // Cycles with n ≡ 0,2 (mod 3): gap hits ceil(n/3) (the upper extreme).
        for n in (3..=20usize).filter(|n| n % 3 != 1) {
            let c = gap_and_boundary_checks(&profile(&cycle(n))).unwrap();
            assert_eq!(c.gap, n.div_ceil(3), "C_{n}");
            assert!(c.gap_within_bounds);
        }
    }

    #[test]
    fn boundary_characterizations() {
        let k4 = gap_and_boundary_checks(&profile(&complete(4))).unwrap();
        assert!(k4.sl2_is_two && k4.two_universal_vertices);
        let c6 = gap_and_boundary_checks(&profile(&cycle(6))).unwrap();
        assert!(!c6.sl2_is_two && !c6.two_universal_vertices);
        // C4: sl2 = 3 < 4 = n, and m = 4 > floor((4+2)/2) = 3.
        let c4 = gap_and_boundary_checks(&profile(&cycle(4))).unwrap();
        assert_eq!(c4.sl2_is_n, c4.size_at_most_half);
        // C3 = K3: sl2 = 2, n = 3, m = 3 > floor(5/2) = 2: both sides false.
        let c3 = gap_and_boundary_checks(&profile(&cycle(3))).unwrap();
        assert!(!c3.sl2_is_n && !c3.size_at_most_half);
        // Ratio case: C6 hits 2n/(1+Δ) = 4 with d_4 = 2 = Δ.
        assert!(c6.sl2_hits_ratio && c6.ratio_integral_with_max_degree_tail);
    }

    #[test]
    fn size_bound_and_equality() {
        // P3: bound (12-4+2-1)/3 = 3 = sl2, equality via n = 2m - e + p.
        let p3 = profile(&path(3));
        assert_eq!(size_bound_numerator(&p3), 9);
        assert!(size_bound_equality_predicate(&p3).unwrap());
        // C6: bound 4 = sl2, equality via d_5 = 2.
        let c6 = profile(&cycle(6));
        assert_eq!(size_bound_numerator(&c6), 12);
        assert!(size_bound_equality_predicate(&c6).unwrap());
        // Spider b=1: bound 14 < 15 = sl2; the congruence holds but the
        // degree condition fails (d_5 = 3).
        let sp = profile(&spider_tree(1));
        assert_eq!(size_bound_numerator(&sp), 42);
        assert!(!size_bound_equality_predicate(&sp).unwrap());
        // C4: numerator 8 not divisible by 3.
        assert!(!size_bound_equality_predicate(&profile(&cycle(4))).unwrap());
    }

    #[test]
    fn report_contains_consistent_fields() {
        let r = slater_report(&cycle(6)).unwrap();
        assert_eq!((r.slater, r.double_slater), (2, 4));
        assert_eq!(r.regularity_bounds, Some((4, 4)));
        assert_eq!(r.size_bound_ceil, 4);
        assert!(r.size_bound_equality);
        let r = slater_report(&spider_tree(1)).unwrap();
        assert_eq!(r.size_bound_ceil, 14);
        assert!(r.regularity_bounds.is_none());
        assert!(r.gap_checks.is_none());
    }
}
