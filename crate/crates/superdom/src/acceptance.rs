//! Acceptance suite: eight release-gating checks, each reported as one
//! pass or fail line. The command line `selftest` runs the same suite.

use std::fmt::Write as _;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::batch;
use crate::construct::{lex_product_k4, subdivide};
use crate::enumerate::{all_graphs, all_trees, random_tree};
use crate::gamma_sp::{canonical_gamma_sp_set, gamma_sp_exact, DEFAULT_BUDGET};
use crate::graph::Graph;
use crate::induced::{canonical_max_ii_matching, ii_number};
use crate::matching::max_matching;
use crate::oracle::{gamma_sp_by_subsets, max_ii_brute};
use crate::reductions::{
    assignment_to_superdom, audit_gf, build_gf, build_product, ii_to_independent,
    independent_to_ii, parse_dimacs_cnf, superdom_to_assignment,
};
use crate::sk::{build_superdom_set_subdivision, gamma_sp_subdivision_value};
use crate::superdom::{bounds, exchange, gamma_sp_closed_form, verify_super_dom, Family};
use crate::tree::tree_gamma_sp_set;
use crate::vertex_sets::max_independent;

/// Node budget for the exhaustive ii oracle on 20-vertex products.
const ORACLE_BUDGET: u64 = 4_000_000;

/// Outcome of one criterion: verdict, check count, notes, timing.
#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    /// First few failure messages; the rest are only counted.
    pub first_failures: Vec<String>,
    /// Recorded observations that do not fail the criterion.
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl CriterionOutcome {
    /// The single report line for this criterion.
    pub fn line(&self) -> String {
        self.line_with(true)
    }

    /// The report line, with timing omitted for byte-stable output.
    pub fn line_with(&self, timing: bool) -> String {
        let mut s = format!(
            "criterion {} {}: {} ({} checks{})",
            self.index,
            self.name,
            if self.passed { "pass" } else { "FAIL" },
            self.checks,
            if timing {
                format!(", {} ms", self.elapsed_ms)
            } else {
                String::new()
            }
        );
        for note in &self.notes {
            let _ = write!(s, "; note: {note}");
        }
        for f in &self.first_failures {
            let _ = write!(s, "; {f}");
        }
        if self.failures > self.first_failures.len() {
            let _ = write!(s, "; and {} more failures", self.failures - self.first_failures.len());
        }
        s
    }
}

struct Ctx {
    checks: usize,
    failures: usize,
    first_failures: Vec<String>,
    notes: Vec<String>,
}

impl Ctx {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failures.len() < 3 {
                self.first_failures.push(msg());
            }
        }
    }

    fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }
}

fn run_criterion(
    index: usize,
    name: &'static str,
    limit_ms: Option<u128>,
    body: impl FnOnce(&mut Ctx),
) -> CriterionOutcome {
    let mut ctx = Ctx {
        checks: 0,
        failures: 0,
        first_failures: Vec::new(),
        notes: Vec::new(),
    };
    let start = Instant::now();
    body(&mut ctx);
    let elapsed_ms = start.elapsed().as_millis();
    if let Some(limit) = limit_ms {
        ctx.check(elapsed_ms <= limit, || {
            format!("ran {elapsed_ms} ms, over the {limit} ms budget")
        });
    }
    CriterionOutcome {
        index,
        name,
        passed: ctx.failures == 0,
        checks: ctx.checks,
        failures: ctx.failures,
        first_failures: ctx.first_failures,
        notes: ctx.notes,
        elapsed_ms,
    }
}

/// Runs all eight criteria in order.
pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=8).map(|i| run(i).unwrap()).collect()
}

/// Runs one criterion by its 1-based index.
pub fn run(index: usize) -> Option<CriterionOutcome> {
    Some(match index {
        1 => run_criterion(1, "closed-forms", Some(1_000), closed_forms),
        2 => run_criterion(2, "tree-suite", Some(30_000), tree_suite),
        3 => run_criterion(3, "subdivision-formula-suite", Some(600_000), subdivision_suite),
        4 => run_criterion(4, "star-subdivision-arithmetic", Some(1_000), star_arithmetic),
        5 => run_criterion(5, "ii-product-suite", Some(300_000), ii_product_suite),
        6 => run_criterion(6, "sat-reduction-suite", Some(300_000), sat_reduction_suite),
        7 => run_criterion(7, "characterization-suite", Some(600_000), characterization_suite),
        8 => run_criterion(8, "determinism", None, determinism),
        _ => return None,
    })
}

fn closed_forms(ctx: &mut Ctx) {
    for n in 2..=16 {
        let want = gamma_sp_closed_form(Family::Path(n)).ok();
        let got = gamma_sp_exact(&Graph::path(n), DEFAULT_BUDGET).exact_value();
        ctx.check(got.is_some() && got == want, || {
            format!("path on {n}: solver {got:?}, formula {want:?}")
        });
    }
    for n in 3..=40 {
        let want = gamma_sp_closed_form(Family::Cycle(n)).ok();
        let got = gamma_sp_exact(&Graph::cycle(n), DEFAULT_BUDGET).exact_value();
        ctx.check(got.is_some() && got == want, || {
            format!("cycle on {n}: solver {got:?}, formula {want:?}")
        });
    }
    for leaves in 2..=8 {
        let want = gamma_sp_closed_form(Family::Star(leaves)).ok();
        let got = gamma_sp_exact(&Graph::star(leaves), DEFAULT_BUDGET).exact_value();
        ctx.check(got == Some(leaves) && want == Some(leaves), || {
            format!("star with {leaves} leaves: solver {got:?}, formula {want:?}")
        });
    }
}

struct TreeRow {
    n: usize,
    solver: Option<usize>,
    search: Option<usize>,
    complement: usize,
    verified: bool,
}

fn tree_suite(ctx: &mut Ctx) {
    let mut instances: Vec<Graph> = Vec::new();
    for n in 1..=10 {
        instances.extend(all_trees(n));
    }
    let exhaustive = instances.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7265_6553);
    for _ in 0..200 {
        let n = rng.random_range(2..=14);
        instances.push(random_tree(n, &mut rng));
    }
    ctx.note(format!("{exhaustive} exhaustive trees and 200 random trees"));
    let rows = batch::map(&instances, |t| {
        let complement = t.n() - max_matching(t).size();
        match tree_gamma_sp_set(t) {
            Ok(sol) => TreeRow {
                n: t.n(),
                solver: Some(sol.value),
                search: gamma_sp_exact(t, DEFAULT_BUDGET).exact_value(),
                complement,
                verified: verify_super_dom(t, &sol.set).is_ok(),
            },
            Err(_) => TreeRow {
                n: t.n(),
                solver: None,
                search: None,
                complement,
                verified: false,
            },
        }
    });
    for row in rows {
        let agree = row.solver.is_some()
            && row.solver == row.search
            && row.solver == Some(row.complement);
        ctx.check(agree && row.verified, || {
            format!(
                "tree on {}: solver {:?}, search {:?}, n - matching {}, verified {}",
                row.n, row.solver, row.search, row.complement, row.verified
            )
        });
    }
}

struct SubdivisionRow {
    label: &'static str,
    k: usize,
    formula: Option<usize>,
    search: Option<usize>,
    built: Option<usize>,
}

fn subdivision_bases() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", Graph::path(2)),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("paw", Graph::paw()),
        ("K1,3", Graph::star(3)),
    ]
}

fn subdivision_suite(ctx: &mut Ctx) {
    let mut work: Vec<(&'static str, Graph, usize)> = Vec::new();
    let mut skipped = 0;
    for (label, g) in subdivision_bases() {
        for k in 1..=4 {
            if g.n() + k * g.m() <= 26 {
                work.push((label, g.clone(), k));
            } else {
                skipped += 1;
            }
        }
    }
    ctx.note(format!(
        "{} base-k pairs, {skipped} skipped above 26 subdivided vertices",
        work.len()
    ));
    let rows = batch::map(&work, |(label, g, k)| {
        let formula = gamma_sp_subdivision_value(g, *k, DEFAULT_BUDGET).exact_value();
        let search = gamma_sp_exact(&subdivide(g, *k).graph, DEFAULT_BUDGET).exact_value();
        let built = build_superdom_set_subdivision(g, *k, DEFAULT_BUDGET)
            .ok()
            .map(|b| b.value);
        SubdivisionRow {
            label,
            k: *k,
            formula,
            search,
            built,
        }
    });
    for row in rows {
        let agree = row.formula.is_some() && row.formula == row.search && row.formula == row.built;
        ctx.check(agree, || {
            format!(
                "{} with k={}: formula {:?}, search {:?}, built {:?}",
                row.label, row.k, row.formula, row.search, row.built
            )
        });
    }
    for (k, want) in [(1, 4usize), (2, 5), (3, 6), (4, 8)] {
        let triangle = gamma_sp_subdivision_value(&Graph::complete(3), k, DEFAULT_BUDGET);
        let cycle = gamma_sp_exact(&Graph::cycle(3 * (k + 1)), DEFAULT_BUDGET).exact_value();
        ctx.check(
            triangle.exact_value() == Some(want) && cycle == Some(want),
            || {
                format!(
                    "triangle k={k}: formula {:?}, cycle on {} gives {cycle:?}, want {want}",
                    triangle.exact_value(),
                    3 * (k + 1)
                )
            },
        );
    }
}

fn star_arithmetic(ctx: &mut Ctx) {
    for leaves in 2..=5 {
        for k in 0..=6 {
            let closed = gamma_sp_closed_form(Family::StarSubdivision { leaves, k }).ok();
            let solved = tree_gamma_sp_set(&subdivide(&Graph::star(leaves), k).graph)
                .ok()
                .map(|s| s.value);
            ctx.check(closed.is_some() && closed == solved, || {
                format!("star {leaves} leaves, k={k}: closed form {closed:?}, tree solver {solved:?}")
            });
        }
    }
}

struct ProductRow {
    base_n: usize,
    base_m: usize,
    alpha: usize,
    ii: usize,
    cert_ok: bool,
    oracle: Option<usize>,
    round_trip: Option<usize>,
}

fn ii_product_suite(ctx: &mut Ctx) {
    let mut bases: Vec<Graph> = Vec::new();
    for n in 1..=5 {
        bases.extend(all_graphs(n));
    }
    let rows = batch::map(&bases, |f| {
        let alpha_set = max_independent(f);
        let product = lex_product_k4(f).graph;
        let cert = canonical_max_ii_matching(&product);
        let round_trip = independent_to_ii(f, &alpha_set)
            .ok()
            .and_then(|c| ii_to_independent(f, &c).ok())
            .map(|s| s.len());
        ProductRow {
            base_n: f.n(),
            base_m: f.m(),
            alpha: alpha_set.len(),
            ii: ii_number(&product),
            cert_ok: cert.verify(&product).is_ok() && cert.size() == ii_number(&product),
            oracle: max_ii_brute(&product, ORACLE_BUDGET),
            round_trip,
        }
    });
    let total = rows.len();
    let mut confirmed = 0;
    for row in rows {
        ctx.check(row.ii == 2 * row.alpha, || {
            format!(
                "base n={} m={}: product ii {} but 2*alpha {}",
                row.base_n,
                row.base_m,
                row.ii,
                2 * row.alpha
            )
        });
        ctx.check(row.cert_ok, || {
            format!("base n={} m={}: canonical ii certificate rejected", row.base_n, row.base_m)
        });
        ctx.check(row.oracle.is_none_or(|v| v == row.ii), || {
            format!(
                "base n={} m={}: oracle {:?} disagrees with solver {}",
                row.base_n, row.base_m, row.oracle, row.ii
            )
        });
        if row.oracle.is_some() {
            confirmed += 1;
        }
        ctx.check(row.round_trip == Some(row.alpha), || {
            format!(
                "base n={} m={}: translation round trip {:?}, want {}",
                row.base_n, row.base_m, row.round_trip, row.alpha
            )
        });
    }
    ctx.note(format!(
        "oracle confirmed {confirmed} of {total} products, {} over its node budget",
        total - confirmed
    ));
}

fn sat_reduction_suite(ctx: &mut Ctx) {
    let single = build_gf(&parse_dimacs_cnf("p cnf 1 1\n1 1 1 0").unwrap());
    let got = gamma_sp_exact(&single.graph, DEFAULT_BUDGET).exact_value();
    ctx.check(got == Some(8) && single.threshold == 8, || {
        format!("single-clause instance: value {got:?}, threshold {}", single.threshold)
    });
    let d = assignment_to_superdom(&single, &[true]).unwrap_or_default();
    let cert = verify_super_dom(&single.graph, &d);
    ctx.check(
        d.len() == 8
            && cert.is_ok()
            && cert
                .ok()
                .and_then(|c| superdom_to_assignment(&single, &c).ok())
                == Some(vec![true]),
        || "single-clause instance: all-true set does not round-trip at size 8".into(),
    );

    let unsat = build_gf(&parse_dimacs_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0").unwrap());
    let got = gamma_sp_exact(&unsat.graph, DEFAULT_BUDGET).exact_value();
    ctx.check(
        got == Some(12) && unsat.threshold == 11 && got.is_some_and(|v| v > unsat.threshold),
        || format!("contradictory instance: value {got:?}, threshold {}", unsat.threshold),
    );
    ctx.note(
        "the contradictory instance's value is exactly 12, one above its threshold 11; \
         a strict bound above 12 would overshoot the true value"
            .into(),
    );

    let fig = build_gf(&parse_dimacs_cnf("p cnf 4 3\n-1 2 -3 0\n1 3 -4 0\n-2 3 4 0\n").unwrap());
    let audit = audit_gf(&fig);
    ctx.check(
        audit.n == 46 && audit.bipartite && audit.alpha_prime == 20 && audit.pass(),
        || {
            format!(
                "audit instance: n {}, bipartite {}, matching number {}, pass {}",
                audit.n,
                audit.bipartite,
                audit.alpha_prime,
                audit.pass()
            )
        },
    );
    ctx.check(audit.girth == Some(6) && !audit.girth_bound_expected, || {
        format!("audit instance: girth {:?}, bound expected {}", audit.girth, audit.girth_bound_expected)
    });
    ctx.note(
        "the 46-vertex audit instance has girth 6 because two clauses share a positive \
         literal; the girth-8 guarantee holds only when no clause pair does"
            .into(),
    );
    let one_clause_per_var = build_gf(&parse_dimacs_cnf("p cnf 3 1\n1 2 3 0").unwrap());
    let clean = audit_gf(&one_clause_per_var);
    ctx.check(
        clean.girth_bound_expected && clean.girth.is_none_or(|c| c >= 8) && clean.pass(),
        || format!("distinct-variable instance: girth {:?}", clean.girth),
    );
    let all_true = assignment_to_superdom(&fig, &[true; 4]).unwrap_or_default();
    ctx.check(
        all_true.len() == 26 && verify_super_dom(&fig.graph, &all_true).is_ok(),
        || format!("audit instance: all-true set has size {}", all_true.len()),
    );
    ctx.note("exact search on the 46-vertex instance is out of scale and not attempted".into());
}

fn characterization_suite(ctx: &mut Ctx) {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=7 {
        graphs.extend(all_graphs(n));
    }
    ctx.note(format!("{} graphs up to isomorphism", graphs.len()));
    let rows = batch::map(&graphs, |g| {
        let value = match gamma_sp_exact(g, DEFAULT_BUDGET).exact_value() {
            Some(v) => v,
            None => return Some(format!("n={} m={}: solver gave no exact value", g.n(), g.m())),
        };
        let (by_subsets, _) = gamma_sp_by_subsets(g);
        if by_subsets != value {
            return Some(format!(
                "n={} m={}: labeling optimum {value}, subset optimum {by_subsets}",
                g.n(),
                g.m()
            ));
        }
        let cert = match canonical_gamma_sp_set(g, DEFAULT_BUDGET) {
            Some(c) if c.size() == value => c,
            other => {
                return Some(format!(
                    "n={} m={}: canonical set size {:?}, want {value}",
                    g.n(),
                    g.m(),
                    other.map(|c| c.size())
                ))
            }
        };
        let rep = bounds(g);
        if !(rep.lower <= value && value <= rep.upper) {
            return Some(format!(
                "n={} m={}: value {value} outside bounds [{}, {}]",
                g.n(),
                g.m(),
                rep.lower,
                rep.upper
            ));
        }
        if rep.alpha.is_some_and(|a| a > value) {
            return Some(format!(
                "n={} m={}: bipartite independence {} above value {value}",
                g.n(),
                g.m(),
                rep.alpha.unwrap()
            ));
        }
        let swapped = exchange(g, &cert);
        match verify_super_dom(g, &swapped) {
            Ok(c) if c.size() == value => {
                let covered = (0..g.n())
                    .all(|v| cert.d.binary_search(&v).is_ok() || swapped.binary_search(&v).is_ok());
                if !covered {
                    return Some(format!(
                        "n={} m={}: some vertex lies in neither optimal set",
                        g.n(),
                        g.m()
                    ));
                }
            }
            _ => {
                return Some(format!(
                    "n={} m={}: exchanged set fails to verify at size {value}",
                    g.n(),
                    g.m()
                ))
            }
        }
        None
    });
    for row in rows {
        ctx.check(row.is_none(), || row.unwrap());
    }
}

/// One deterministic transcript over canonical solver, builder,
/// enumeration, and reduction output.
fn canonical_transcript() -> String {
    let mut menu: Vec<Graph> = vec![
        Graph::path(9),
        Graph::cycle(10),
        Graph::cycle(12),
        Graph::star(5),
        Graph::complete(5),
        Graph::paw(),
        Graph::complete_bipartite(3, 4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..6 {
        menu.push(random_tree(11, &mut rng));
    }
    let mut out = String::new();
    let certs = batch::map(&menu, |g| canonical_gamma_sp_set(g, DEFAULT_BUDGET));
    for (g, cert) in menu.iter().zip(&certs) {
        match cert {
            Some(c) => {
                let _ = writeln!(
                    out,
                    "gamma-sp n={} m={} value={} d={:?} core={:?}",
                    g.n(),
                    g.m(),
                    c.size(),
                    c.d,
                    c.b
                );
            }
            None => {
                let _ = writeln!(out, "gamma-sp n={} m={} incomplete", g.n(), g.m());
            }
        }
    }
    for (g, k) in [
        (Graph::complete(3), 3),
        (Graph::paw(), 2),
        (Graph::star(3), 1),
        (Graph::cycle(4), 4),
    ] {
        match build_superdom_set_subdivision(&g, k, DEFAULT_BUDGET) {
            Ok(b) => {
                let _ = writeln!(out, "subdivision k={} value={} d={:?}", k, b.value, b.certificate.d);
                for p in &b.plan.placements {
                    let _ = writeln!(
                        out,
                        "  edge={} from={} case={} positions={:?}",
                        p.edge, p.from, p.case, p.positions
                    );
                }
            }
            Err(e) => {
                let _ = writeln!(out, "subdivision k={k} error={e}");
            }
        }
    }
    for g in [Graph::cycle(9), Graph::path(10), lex_product_k4(&Graph::path(3)).graph] {
        let c = canonical_max_ii_matching(&g);
        let _ = writeln!(out, "ii n={} first={:?} second={:?}", g.n(), c.m1, c.m2);
    }
    for (i, g) in all_graphs(5).iter().enumerate() {
        let _ = writeln!(out, "graph5 {} {:?}", i, g.edges());
    }
    for (i, t) in all_trees(8).iter().enumerate() {
        let _ = writeln!(out, "tree8 {} {:?}", i, t.edges());
    }
    let sat = build_gf(&parse_dimacs_cnf("p cnf 2 1\n1 -2 2 0").unwrap());
    out.push_str(&sat.role_sidecar());
    let _ = writeln!(out, "{:?}", sat.graph.edges());
    let product = build_product(&Graph::paw(), 2);
    out.push_str(&product.role_sidecar());
    out
}

fn determinism(ctx: &mut Ctx) {
    let first = canonical_transcript();
    let second = canonical_transcript();
    ctx.check(first == second, || {
        "repeated canonical transcripts differ".into()
    });
    ctx.note(format!("transcript of {} bytes compared twice", first.len()));
    let items: Vec<Graph> = (4..=10).map(Graph::cycle).collect();
    let parallel = batch::map(&items, |g| gamma_sp_exact(g, DEFAULT_BUDGET).exact_value());
    let sequential = batch::map_seq(&items, |g| gamma_sp_exact(g, DEFAULT_BUDGET).exact_value());
    ctx.check(parallel == sequential, || {
        "parallel and sequential batch runs disagree".into()
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_lines_carry_verdicts_and_notes() {
        let good = run_criterion(1, "closed-forms", None, |ctx| {
            ctx.check(true, || unreachable!());
            ctx.note("steady".into());
        });
        assert!(good.passed);
        let line = good.line();
        assert!(line.starts_with("criterion 1 closed-forms: pass (1 checks,"));
        assert!(line.ends_with("; note: steady"));
        let bad = run_criterion(2, "tree-suite", None, |ctx| {
            for i in 0..5 {
                ctx.check(false, || format!("broken {i}"));
            }
        });
        assert!(!bad.passed);
        assert_eq!(bad.failures, 5);
        assert!(bad.line().contains("broken 0"));
        assert!(bad.line().ends_with("; and 2 more failures"));
    }

    #[test]
    fn time_budget_overrun_fails_the_criterion() {
        let slow = run_criterion(3, "subdivision-formula-suite", Some(0), |_| {
            std::thread::sleep(std::time::Duration::from_millis(5));
        });
        assert!(!slow.passed);
        assert!(slow.line().contains("over the 0 ms budget"));
    }

    #[test]
    fn unknown_index_is_refused() {
        assert!(run(0).is_none());
        assert!(run(9).is_none());
    }

    #[test]
    fn closed_forms_pass_quickly() {
        let outcome = run(1).unwrap();
        assert!(outcome.passed, "{}", outcome.line());
        assert_eq!(outcome.checks, 15 + 38 + 7 + 1);
    }

    #[test]
    fn star_arithmetic_passes() {
        let outcome = run(4).unwrap();
        assert!(outcome.passed, "{}", outcome.line());
        assert_eq!(outcome.checks, 4 * 7 + 1);
    }
}
