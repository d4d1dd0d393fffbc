//! The 3-SAT reduction gadget: builds, labels, and solves the graphs that
//! tie satisfiability to double domination.
//!
//! For a formula with variables `u_1..u_a`, each variable gets a block of
//! `5a^2` vertices: a triangle `q, q', q''` plus `5a^2 - 3` independent
//! vertices adjacent to all three triangle corners. Each clause gets one
//! vertex adjacent, per literal, to the literal's variable vertex (`q` for
//! a positive literal, `q'` for a negative one) and to that variable's
//! `q''`. The resulting graph has order `5a^3 + b`, is 4-colorable, and
//! has double Slater number `2a`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Each variable may appear (in either sign) in at most this many clauses.
pub const OCCURRENCE_CAP: usize = 5;

/// Gadget construction and the specialized solver are capped at this many
/// variables (the gadget graph has `5a^3 + b` vertices).
pub const GADGET_MAX_VARS: usize = 12;

/// The exhaustive satisfiability oracle is capped at this many variables.
pub const SAT_MAX_VARS: usize = 24;

/// A 3-CNF formula: clauses are triples of nonzero literals, where literal
/// `+i`/`-i` means variable `i` (1-based) plain or negated. Literals may
/// repeat inside a clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variables: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(variables: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        if variables == 0 {
            return Err(Error::InvalidConstruction(
                "a formula needs at least one variable".into(),
            ));
        }
        for (j, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > variables {
                    return Err(Error::InvalidConstruction(format!(
                        "clause {j}: literal {lit} is out of range for {variables} variables"
                    )));
                }
            }
        }
        let formula = CnfFormula { variables, clauses };
        for (i, &count) in formula.occurrence_counts().iter().enumerate() {
            if count > OCCURRENCE_CAP {
                return Err(Error::InvalidConstruction(format!(
                    "variable {} appears in {count} clauses (cap {OCCURRENCE_CAP})",
                    i + 1
                )));
            }
        }
        Ok(formula)
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// For each variable, the number of clauses containing it in any sign.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.variables];
        for clause in &self.clauses {
            let mut seen = [false; 3];
            for (slot, &lit) in clause.iter().enumerate() {
                let var = lit.unsigned_abs() as usize - 1;
                let dup = clause[..slot]
                    .iter()
                    .any(|&prev| prev.unsigned_abs() as usize - 1 == var);
                seen[slot] = !dup;
                if !dup {
                    counts[var] += 1;
                }
            }
            let _ = seen;
        }
        counts
    }

    /// True when `assignment` (indexed by variable) makes every clause true.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.variables
            && self.clauses.iter().all(|clause| {
                clause.iter().any(|&lit| {
                    let var = lit.unsigned_abs() as usize - 1;
                    (lit > 0) == assignment[var]
                })
            })
    }
}

/// Parses DIMACS CNF text. Every clause must have exactly three literals;
/// the per-variable occurrence cap is enforced.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut declared: Option<(usize, usize)> = None;
    let mut literals: Vec<(i32, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            if declared.is_some() {
                return Err(Error::parse("line", lineno, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(Error::parse(
                    "line",
                    lineno,
                    format!("expected `p cnf <vars> <clauses>`, got {line:?}"),
                ));
            }
            let vars = fields[2]
                .parse::<usize>()
                .map_err(|e| Error::parse("line", lineno, format!("bad variable count: {e}")))?;
            let count = fields[3]
                .parse::<usize>()
                .map_err(|e| Error::parse("line", lineno, format!("bad clause count: {e}")))?;
            declared = Some((vars, count));
            continue;
        }
        if declared.is_none() {
            return Err(Error::parse(
                "line",
                lineno,
                "clause data before the problem line",
            ));
        }
        for token in line.split_whitespace() {
            let lit = token
                .parse::<i32>()
                .map_err(|e| Error::parse("line", lineno, format!("bad literal {token:?}: {e}")))?;
            literals.push((lit, lineno));
        }
    }
    let Some((vars, count)) = declared else {
        return Err(Error::parse("line", 1, "missing problem line"));
    };
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut clause_line = 1;
    for (lit, lineno) in literals {
        if current.is_empty() {
            clause_line = lineno;
        }
        if lit == 0 {
            if current.len() != 3 {
                return Err(Error::parse(
                    "line",
                    clause_line,
                    format!("clause has {} literals, expected exactly 3", current.len()),
                ));
            }
            clauses.push([current[0], current[1], current[2]]);
            current.clear();
        } else {
            current.push(lit);
        }
    }
    if !current.is_empty() {
        return Err(Error::parse(
            "line",
            clause_line,
            "unterminated clause (missing trailing 0)",
        ));
    }
    if clauses.len() != count {
        return Err(Error::parse(
            "line",
            1,
            format!("problem line declares {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses).map_err(|e| match e {
        Error::InvalidConstruction(msg) => Error::parse("line", 1, msg),
        other => other,
    })
}

/// Vertex roles of one variable block in the gadget graph.
#[derive(Clone, Debug, Serialize)]
pub struct VariableLabels {
    pub q: usize,
    pub q_prime: usize,
    pub q_second: usize,
    pub independents: Vec<usize>,
}

/// Vertex-role labeling of a gadget graph.
#[derive(Clone, Debug, Serialize)]
pub struct GadgetLabels {
    pub order: usize,
    pub variables: Vec<VariableLabels>,
    pub clause_vertices: Vec<usize>,
}

impl GadgetLabels {
    /// A proper 4-coloring: the three triangle corners get colors 0, 1, 2;
    /// independents and clause vertices (mutually non-adjacent) get 3.
    pub fn four_coloring(&self) -> Vec<u8> {
        let mut colors = vec![3u8; self.order];
        for var in &self.variables {
            colors[var.q] = 0;
            colors[var.q_prime] = 1;
            colors[var.q_second] = 2;
        }
        colors
    }
}

/// True when adjacent vertices always receive different colors.
pub fn is_proper_coloring(g: &Graph, colors: &[u8]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

fn block_size(a: usize) -> usize {
    5 * a * a
}

/// Builds the reduction gadget for `f` together with its vertex labeling.
/// Variable `i`'s block starts at `i * 5a^2` with `q`, `q'`, `q''` first;
/// clause vertex `j` sits at `5a^3 + j`.
pub fn sat_gadget(f: &CnfFormula) -> Result<(Graph, GadgetLabels)> {
    let a = f.variables();
    if a > GADGET_MAX_VARS {
        return Err(Error::TooLarge(format!(
            "gadget construction is capped at {GADGET_MAX_VARS} variables (got {a})"
        )));
    }
    let block = block_size(a);
    let n = a * block + f.clauses().len();
    let mut b = GraphBuilder::new(n);
    let mut variables = Vec::with_capacity(a);
    for i in 0..a {
        let base = i * block;
        b.add_edge(base, base + 1);
        b.add_edge(base, base + 2);
        b.add_edge(base + 1, base + 2);
        let independents: Vec<usize> = (base + 3..base + block).collect();
        for &w in &independents {
            b.add_edge(w, base);
            b.add_edge(w, base + 1);
            b.add_edge(w, base + 2);
        }
        variables.push(VariableLabels {
            q: base,
            q_prime: base + 1,
            q_second: base + 2,
            independents,
        });
    }
    let clause_vertices: Vec<usize> = (a * block..n).collect();
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = clause_vertices[j];
        for &lit in clause {
            let var = lit.unsigned_abs() as usize - 1;
            let base = var * block;
            b.add_edge(c, base + 2);
            b.add_edge(c, if lit > 0 { base } else { base + 1 });
        }
    }
    let g = b.build();
    let labels = GadgetLabels {
        order: n,
        variables,
        clause_vertices,
    };
    debug_assert!(is_proper_coloring(&g, &labels.four_coloring()));
    Ok((g, labels))
}

/// The gadget vertex set encoding a truth assignment: for each variable,
/// its `q''` plus `q` (when true) or `q'` (when false). Size `2a`.
pub fn assignment_set(f: &CnfFormula, assignment: &[bool]) -> Vec<usize> {
    debug_assert_eq!(assignment.len(), f.variables());
    let block = block_size(f.variables());
    let mut set = Vec::with_capacity(2 * f.variables());
    for (i, &value) in assignment.iter().enumerate() {
        let base = i * block;
        set.push(if value { base } else { base + 1 });
        set.push(base + 2);
    }
    set
}

/// Outcome of the specialized gadget solver.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GadgetSolveOutcome {
    /// A double dominating set whose size matches the `2a` lower bound.
    Optimal { value: usize, set: Vec<usize> },
    /// No candidate works: the double domination number exceeds `2a`.
    Exceeds { bound: usize },
}

/// Per-variable pair choices, in enumeration order. Bit 0 = `q`,
/// bit 1 = `q'`, bit 2 = `q''`.
const PAIR_MASKS: [u8; 3] = [0b101, 0b110, 0b011];
const PAIR_OFFSETS: [[usize; 2]; 3] = [[0, 2], [1, 2], [0, 1]];

/// Decides whether the gadget for `f` has a double dominating set of the
/// minimum conceivable size `2a` by enumerating the `3^a` ways to pick two
/// triangle corners per variable block — the only shape such a set can
/// have, since each independent vertex's closed neighborhood meets the
/// rest of the graph only in its own triangle. Enumeration is split over
/// `jobs` worker threads; the reported set is the first in enumeration
/// order regardless of `jobs`.
pub fn gadget_gamma_x2_sharded(f: &CnfFormula, jobs: usize) -> Result<GadgetSolveOutcome> {
    let a = f.variables();
    if a > GADGET_MAX_VARS {
        return Err(Error::TooLarge(format!(
            "gadget solver is capped at {GADGET_MAX_VARS} variables (got {a})"
        )));
    }
    // Per clause, which triangle corners of which variables it touches.
    let mut adjacency: Vec<Vec<(usize, u8)>> = Vec::with_capacity(f.clauses().len());
    for clause in f.clauses() {
        let mut per_var: Vec<(usize, u8)> = Vec::new();
        for &lit in clause {
            let var = lit.unsigned_abs() as usize - 1;
            let mask = 0b100 | if lit > 0 { 0b001 } else { 0b010 };
            match per_var.iter_mut().find(|(v, _)| *v == var) {
                Some((_, m)) => *m |= mask,
                None => per_var.push((var, mask)),
            }
        }
        adjacency.push(per_var);
    }
    let total = 3u64.pow(a as u32);
    let covers = |index: u64| -> bool {
        adjacency.iter().all(|per_var| {
            let mut covered = 0u32;
            for &(var, adj) in per_var {
                let digit = (index / 3u64.pow(var as u32)) % 3;
                covered += (adj & PAIR_MASKS[digit as usize]).count_ones();
            }
            covered >= 2
        })
    };
    let jobs = jobs.clamp(1, total.max(1) as usize).min(64);
    let found: Option<u64> = if jobs == 1 {
        (0..total).find(|&i| covers(i))
    } else {
        let chunk = total.div_ceil(jobs as u64);
        let mut firsts: Vec<Option<u64>> = vec![None; jobs];
        std::thread::scope(|scope| {
            for (w, slot) in firsts.iter_mut().enumerate() {
                let covers = &covers;
                scope.spawn(move || {
                    let lo = w as u64 * chunk;
                    let hi = (lo + chunk).min(total);
                    *slot = (lo..hi).find(|&i| covers(i));
                });
            }
        });
        firsts.into_iter().flatten().min()
    };
    match found {
        Some(index) => {
            let block = block_size(a);
            let mut set = Vec::with_capacity(2 * a);
            for var in 0..a {
                let digit = ((index / 3u64.pow(var as u32)) % 3) as usize;
                for &off in &PAIR_OFFSETS[digit] {
                    set.push(var * block + off);
                }
            }
            Ok(GadgetSolveOutcome::Optimal {
                value: set.len(),
                set,
            })
        }
        None => Ok(GadgetSolveOutcome::Exceeds { bound: 2 * a }),
    }
}

/// Single-threaded form of [`gadget_gamma_x2_sharded`].
pub fn gadget_gamma_x2(f: &CnfFormula) -> Result<GadgetSolveOutcome> {
    gadget_gamma_x2_sharded(f, 1)
}

/// Exhaustive satisfiability check, independent of the gadget machinery:
/// returns the first satisfying assignment (variable 0 in the low bit) or
/// `None`.
pub fn sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let a = f.variables();
    if a > SAT_MAX_VARS {
        return Err(Error::TooLarge(format!(
            "satisfiability oracle is capped at {SAT_MAX_VARS} variables (got {a})"
        )));
    }
    for bits in 0u64..1u64 << a {
        let assignment: Vec<bool> = (0..a).map(|i| bits >> i & 1 == 1).collect();
        if self::CnfFormula::is_satisfied_by(f, &assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Draws a random formula from the family on which the gadget solver and
/// the satisfiability oracle provably agree: clauses either span at least
/// two distinct variables and contain a literal from a planted assignment
/// (keeping the formula satisfiable), or — on roughly half the seeds — a
/// contradictory pure pair `{l,l,l}`, `{-l,-l,-l}` is injected, making the
/// formula unsatisfiable and the gadget bound unreachable at once.
pub fn random_reduction_formula(seed: u64) -> CnfFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(2..=6);
    let planted: Vec<bool> = (0..a).map(|_| rng.gen()).collect();
    let mut uses = vec![0usize; a];
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    if rng.gen_bool(0.5) {
        let v = rng.gen_range(0..a);
        let lit = (v + 1) as i32;
        clauses.push([lit; 3]);
        clauses.push([-lit; 3]);
        uses[v] = 2;
    }
    let extra = rng.gen_range(1..=(5 * a / 3).saturating_sub(clauses.len()).max(1));
    for _ in 0..extra {
        let mut open: Vec<usize> = (0..a).filter(|&v| uses[v] < OCCURRENCE_CAP).collect();
        if open.len() < 2 {
            break;
        }
        open.shuffle(&mut rng);
        let span = open.len().min(if rng.gen_bool(0.5) { 3 } else { 2 });
        let vars = &open[..span];
        let mut clause = [0i32; 3];
        for (slot, item) in clause.iter_mut().enumerate() {
            let v = vars[slot.min(span - 1)];
            let positive = if slot == 0 { planted[v] } else { rng.gen() };
            *item = if positive { (v + 1) as i32 } else { -((v + 1) as i32) };
        }
        for &v in vars {
            uses[v] += 1;
        }
        clauses.push(clause);
    }
    let formula = CnfFormula::new(a, clauses).expect("generator respects the occurrence cap");
    debug_assert!(formula.is_satisfied_by(&planted) || formula.clauses().len() >= 2);
    formula
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;
    use crate::exact;
    use crate::graph::DegreeProfile;
    use crate::slater;

    fn figure_formula() -> CnfFormula {
        CnfFormula::new(
            4,
            vec![[1, 2, -3], [4, -2, -1], [3, 4, -2], [-4, -3, -1]],
        )
        .unwrap()
    }

    #[test]
    fn parse_accepts_basic_dimacs() {
        let f = parse_dimacs_cnf("c comment\np cnf 2 1\n1 2 -2 0\n").unwrap();
        assert_eq!(f.variables(), 2);
        assert_eq!(f.clauses(), &[[1, 2, -2]]);
    }

    #[test]
    fn parse_rejects_wrong_arity() {
        let err = parse_dimacs_cnf("p cnf 2 1\n1 2 0\n").unwrap_err();
        assert!(err.to_string().contains("expected exactly 3"), "{err}");
    }

    #[test]
    fn parse_rejects_occurrence_cap_violation() {
        // Variable 1 appears in six clauses.
        let mut text = String::from("p cnf 2 6\n");
        for _ in 0..6 {
            text.push_str("1 2 2 0\n");
        }
        let err = parse_dimacs_cnf(&text).unwrap_err();
        assert!(err.to_string().contains("cap"), "{err}");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_dimacs_cnf("").is_err());
        assert!(parse_dimacs_cnf("1 2 3 0\n").is_err());
        assert!(parse_dimacs_cnf("p cnf x 1\n1 2 3 0\n").is_err());
        assert!(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n").is_err());
        assert!(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n").is_err());
        assert!(parse_dimacs_cnf("p cnf 3 1\n1 2 4 0\n").is_err());
    }

    #[test]
    fn occurrence_counts_are_per_clause() {
        let f = CnfFormula::new(2, vec![[1, 1, 1], [1, -1, 2]]).unwrap();
        assert_eq!(f.occurrence_counts(), vec![2, 1]);
    }

    #[test]
    fn gadget_shape_and_layout() {
        let f = figure_formula();
        let (g, labels) = sat_gadget(&f).unwrap();
        assert_eq!(g.n(), 324);
        assert_eq!(labels.order, 324);
        assert_eq!(labels.variables.len(), 4);
        assert_eq!(labels.variables[1].q, 80);
        assert_eq!(labels.variables[1].q_second, 82);
        assert_eq!(labels.variables[1].independents.len(), 77);
        assert_eq!(labels.clause_vertices, vec![320, 321, 322, 323]);
        assert_eq!(g.min_degree(), 3);
        // The maximum degree lives on a triangle corner.
        let max_deg = g.max_degree();
        assert!(labels
            .variables
            .iter()
            .flat_map(|v| [v.q, v.q_prime, v.q_second])
            .any(|v| g.degree(v) == max_deg));
        assert!(is_proper_coloring(&g, &labels.four_coloring()));
    }

    #[test]
    fn clause_vertex_degrees_collapse_repeated_literals() {
        let degree_of_clause = |f: &CnfFormula| {
            let (g, labels) = sat_gadget(f).unwrap();
            g.degree(labels.clause_vertices[0])
        };
        let distinct = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
        assert_eq!(degree_of_clause(&distinct), 6);
        let complementary = CnfFormula::new(3, vec![[1, -1, 2]]).unwrap();
        assert_eq!(degree_of_clause(&complementary), 5);
        let pure = CnfFormula::new(1, vec![[1, 1, 1]]).unwrap();
        assert_eq!(degree_of_clause(&pure), 2);
    }

    #[test]
    fn figure_instance_double_slater_and_caption_set() {
        let f = figure_formula();
        let (g, _) = sat_gadget(&f).unwrap();
        let profile = DegreeProfile::new(&g);
        assert_eq!(slater::double_slater(&profile).unwrap(), 8);
        let caption = vec![0, 2, 81, 82, 160, 162, 241, 242];
        assert_eq!(assignment_set(&f, &[true, false, true, false]), caption);
        let s = VertexSet::from_members(g.n(), &caption);
        assert!(exact::is_ktuple_dominating(&g, &s, 2));
        match gadget_gamma_x2(&f).unwrap() {
            GadgetSolveOutcome::Optimal { value, set } => {
                assert_eq!(value, 8);
                let s = VertexSet::from_members(g.n(), &set);
                assert!(exact::is_ktuple_dominating(&g, &s, 2));
            }
            GadgetSolveOutcome::Exceeds { .. } => panic!("figure instance is solvable"),
        }
    }

    #[test]
    fn contradictory_pure_clauses_exceed_the_bound() {
        let f = CnfFormula::new(2, vec![[1, 1, 1], [-1, -1, -1]]).unwrap();
        assert!(sat_bruteforce(&f).unwrap().is_none());
        match gadget_gamma_x2(&f).unwrap() {
            GadgetSolveOutcome::Exceeds { bound } => assert_eq!(bound, 4),
            GadgetSolveOutcome::Optimal { .. } => panic!("unsatisfiable instance"),
        }
        // The generic solver agrees that 2a is not attained.
        let (g, _) = sat_gadget(&f).unwrap();
        assert_eq!(g.n(), 42);
        let cert = exact::gamma_ktuple_bnb(&g, 2).unwrap();
        assert_eq!(cert.value, 5);
        cert.validate(&g).unwrap();
    }

    #[test]
    fn single_variable_instance_attains_two() {
        let f = CnfFormula::new(1, vec![[1, 1, 1]]).unwrap();
        match gadget_gamma_x2(&f).unwrap() {
            GadgetSolveOutcome::Optimal { value, set } => {
                assert_eq!(value, 2);
                assert_eq!(set, vec![0, 2]);
            }
            GadgetSolveOutcome::Exceeds { .. } => panic!("satisfiable instance"),
        }
    }

    #[test]
    fn sharded_solver_matches_single_threaded() {
        for seed in [0, 3, 9] {
            let f = random_reduction_formula(seed);
            let single = serde_json::to_string(&gadget_gamma_x2(&f).unwrap()).unwrap();
            for jobs in [2, 3, 7] {
                let sharded =
                    serde_json::to_string(&gadget_gamma_x2_sharded(&f, jobs).unwrap()).unwrap();
                assert_eq!(single, sharded, "seed {seed} jobs {jobs}");
            }
        }
    }

    #[test]
    fn generated_formulas_agree_across_both_routes() {
        let mut saw_sat = false;
        let mut saw_unsat = false;
        for seed in 0..20 {
            let f = random_reduction_formula(seed);
            assert!(f.variables() >= 2 && f.variables() <= 6);
            let satisfiable = sat_bruteforce(&f).unwrap();
            if let Some(assignment) = &satisfiable {
                assert!(f.is_satisfied_by(assignment));
                saw_sat = true;
            } else {
                saw_unsat = true;
            }
            let solved = matches!(
                gadget_gamma_x2(&f).unwrap(),
                GadgetSolveOutcome::Optimal { .. }
            );
            assert_eq!(
                solved,
                satisfiable.is_some(),
                "seed {seed}: gadget and satisfiability must agree on {f:?}"
            );
        }
        assert!(saw_sat && saw_unsat, "the seed window must exercise both outcomes");
    }

    #[test]
    fn caps_are_enforced() {
        let f = CnfFormula::new(13, vec![[1, 2, 3]]).unwrap();
        assert!(matches!(sat_gadget(&f), Err(Error::TooLarge(_))));
        assert!(matches!(gadget_gamma_x2(&f), Err(Error::TooLarge(_))));
        let f = CnfFormula::new(25, vec![[1, 2, 3]]).unwrap();
        assert!(matches!(sat_bruteforce(&f), Err(Error::TooLarge(_))));
    }
}
