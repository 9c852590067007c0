//! Command line front end: compute, verify, reduce, bench, selftest.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use superdom::acceptance;
use superdom::batch;
use superdom::construct::lex_product_k4;
use superdom::gamma_sp::{canonical_gamma_sp_set, gamma_sp_exact, GammaSpOutcome, DEFAULT_BUDGET};
use superdom::graph::Graph;
use superdom::induced::{canonical_max_ii_matching, max_ii_matching};
use superdom::reductions::{build_gf, build_product, parse_dimacs_cnf};
use superdom::sk::{build_superdom_set_subdivision, gamma_sp_subdivision_value, SubdivisionValue};
use superdom::superdom::{bounds, extract_core, verify_super_dom};
use superdom::tree::tree_gamma_sp_set;

const EXIT_REFUSAL: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "superdom", version, about = "Super domination solvers, reductions, and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of the input graph.
    Compute {
        #[command(subcommand)]
        what: ComputeWhat,
    },
    /// Check a candidate super dominating set.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertex ids, for example 0,2,5.
        #[arg(long)]
        set: String,
    },
    /// Build a hardness-reduction instance with a role sidecar.
    Reduce {
        #[command(subcommand)]
        what: ReduceWhat,
    },
    /// Time the solvers on fixed sample families.
    Bench {
        #[command(flatten)]
        common: Common,
    },
    /// Run the acceptance suite; nonzero exit on any failure.
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ComputeWhat {
    /// Exact super domination number by branch and bound.
    GammaSp {
        #[command(flatten)]
        common: Common,
    },
    /// Linear-time solver for forests.
    Tree {
        #[command(flatten)]
        common: Common,
    },
    /// Value of the k-subdivision by the residue formulas.
    Subdivision {
        #[command(flatten)]
        common: Common,
        /// Interior vertices added per edge.
        #[arg(long)]
        k: usize,
    },
    /// Maximum matching that splits into two induced matchings.
    Ii {
        #[command(flatten)]
        common: Common,
    },
    /// Lower and upper bounds without running the exact solver.
    Bounds {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum ReduceWhat {
    /// 3-SAT formula (DIMACS CNF) to a super domination threshold instance.
    Sat {
        #[command(flatten)]
        common: Common,
        /// Write <prefix>.el and <prefix>.roles instead of embedding them.
        #[arg(long)]
        out: Option<String>,
    },
    /// Independence threshold alpha(f) >= k to an ii threshold instance.
    Alpha {
        #[command(flatten)]
        common: Common,
        /// Independence threshold k.
        #[arg(long)]
        k: usize,
        /// Write <prefix>.el and <prefix>.roles instead of embedding them.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    /// Input document path, or - for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Node budget for exact searches.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Canonical deterministic output: lexicographically smallest
    /// certificates and no timing fields.
    #[arg(long)]
    canonical: bool,
    /// Include certificates in the result.
    #[arg(long)]
    cert: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Serialize)]
struct InstanceDigest {
    n: usize,
    m: usize,
    components: usize,
}

impl InstanceDigest {
    fn of(g: &Graph) -> InstanceDigest {
        InstanceDigest {
            n: g.n(),
            m: g.m(),
            components: g.components().1,
        }
    }
}

/// One result record; `value` is present exactly when `status` is exact.
#[derive(Serialize)]
struct RunResult {
    command: String,
    instance: InstanceDigest,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<usize>,
    provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    refusal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_matching: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_matching: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl RunResult {
    fn new(command: &str, g: &Graph) -> RunResult {
        RunResult {
            command: command.to_string(),
            instance: InstanceDigest::of(g),
            status: "exact",
            value: None,
            lower: None,
            upper: None,
            provenance: "search".to_string(),
            refusal: None,
            certificate: None,
            core: None,
            first_matching: None,
            second_matching: None,
            elapsed_ms: None,
        }
    }

    fn tsv_pairs(&self) -> Vec<(&'static str, String)> {
        let mut pairs = vec![
            ("command", self.command.clone()),
            ("n", self.instance.n.to_string()),
            ("m", self.instance.m.to_string()),
            ("components", self.instance.components.to_string()),
            ("status", self.status.to_string()),
        ];
        let join = |ids: &[usize]| {
            ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        let join_pairs = |edges: &[(usize, usize)]| {
            edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        if let Some(v) = self.value {
            pairs.push(("value", v.to_string()));
        }
        if let Some(v) = self.lower {
            pairs.push(("lower", v.to_string()));
        }
        if let Some(v) = self.upper {
            pairs.push(("upper", v.to_string()));
        }
        pairs.push(("provenance", self.provenance.clone()));
        if let Some(r) = &self.refusal {
            pairs.push(("refusal", r.clone()));
        }
        if let Some(c) = &self.certificate {
            pairs.push(("certificate", join(c)));
        }
        if let Some(c) = &self.core {
            pairs.push(("core", join(c)));
        }
        if let Some(e) = &self.first_matching {
            pairs.push(("first_matching", join_pairs(e)));
        }
        if let Some(e) = &self.second_matching {
            pairs.push(("second_matching", join_pairs(e)));
        }
        if let Some(t) = self.elapsed_ms {
            pairs.push(("elapsed_ms", t.to_string()));
        }
        pairs
    }
}

#[derive(Serialize)]
struct ReduceResult {
    command: String,
    n: usize,
    m: usize,
    threshold: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    vars: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clauses: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tree_shaped: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_list: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roles: Option<String>,
}

/// A printable outcome plus the process exit code.
struct Outcome {
    stdout: String,
    code: u8,
}

enum Failure {
    /// Unknown flags or malformed input: usage text, exit 64.
    Usage(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let benign = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if benign {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            if !outcome.stdout.is_empty() {
                println!("{}", outcome.stdout.trim_end_matches('\n'));
            }
            ExitCode::from(outcome.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `superdom --help` for usage");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
    }
}

fn read_graph(common: &Common) -> Result<Graph, Failure> {
    Graph::parse(&read_input(&common.input)?).map_err(|e| Failure::Usage(e.to_string()))
}

fn render(result: &RunResult, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(result).unwrap(),
        Format::Tsv => {
            let pairs = result.tsv_pairs();
            let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = pairs.into_iter().map(|(_, v)| v).collect();
            format!("{}\n{}", header.join("\t"), row.join("\t"))
        }
    }
}

fn elapsed_field(common: &Common, start: Instant) -> Option<u128> {
    if common.canonical {
        None
    } else {
        Some(start.elapsed().as_millis())
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Compute { what } => match what {
            ComputeWhat::GammaSp { common } => compute_gamma_sp(&common),
            ComputeWhat::Tree { common } => compute_tree(&common),
            ComputeWhat::Subdivision { common, k } => compute_subdivision(&common, k),
            ComputeWhat::Ii { common } => compute_ii(&common),
            ComputeWhat::Bounds { common } => compute_bounds(&common),
        },
        Command::Verify { common, set } => verify(&common, &set),
        Command::Reduce { what } => match what {
            ReduceWhat::Sat { common, out } => reduce_sat(&common, out.as_deref()),
            ReduceWhat::Alpha { common, k, out } => reduce_alpha(&common, k, out.as_deref()),
        },
        Command::Bench { common } => bench(&common),
        Command::Selftest { common } => selftest(&common),
    }
}

fn compute_gamma_sp(common: &Common) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let start = Instant::now();
    let outcome = gamma_sp_exact(&g, common.budget);
    let mut result = RunResult::new("compute gamma-sp", &g);
    let code = match &outcome {
        GammaSpOutcome::Exact { value, .. } => {
            result.value = Some(*value);
            if common.cert {
                let set = if common.canonical {
                    canonical_gamma_sp_set(&g, common.budget)
                        .map(|c| c.d)
                        .unwrap_or_else(|| outcome.set().to_vec())
                } else {
                    outcome.set().to_vec()
                };
                result.certificate = Some(set);
            }
            0
        }
        GammaSpOutcome::Incomplete { .. } => {
            let (lower, upper) = outcome.bounds();
            result.status = "incomplete";
            result.lower = Some(lower);
            result.upper = Some(upper);
            EXIT_BUDGET
        }
    };
    result.elapsed_ms = elapsed_field(common, start);
    Ok(Outcome {
        stdout: render(&result, common.format),
        code,
    })
}

fn compute_tree(common: &Common) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let start = Instant::now();
    let mut result = RunResult::new("compute tree", &g);
    let code = match tree_gamma_sp_set(&g) {
        Ok(solution) => {
            let matched = g.n() - solution.value;
            result.value = Some(solution.value);
            result.provenance = format!(
                "forest: n - matching = {} - {} = {}",
                g.n(),
                matched,
                solution.value
            );
            if common.cert {
                result.certificate = Some(solution.set.clone());
                result.core = Some(extract_core(&solution.certificate));
            }
            0
        }
        Err(e) => {
            result.status = "refused";
            result.refusal = Some(e.to_string());
            EXIT_REFUSAL
        }
    };
    result.elapsed_ms = elapsed_field(common, start);
    Ok(Outcome {
        stdout: render(&result, common.format),
        code,
    })
}

fn compute_subdivision(common: &Common, k: usize) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let start = Instant::now();
    let value = gamma_sp_subdivision_value(&g, k, common.budget);
    let mut result = RunResult::new("compute subdivision", &g);
    result.provenance = value.provenance().to_string();
    let code = match value {
        SubdivisionValue::Exact { value, .. } => {
            result.value = Some(value);
            if common.cert {
                match build_superdom_set_subdivision(&g, k, common.budget) {
                    Ok(build) => result.certificate = Some(build.certificate.d),
                    Err(e) => {
                        result.status = "refused";
                        result.value = None;
                        result.refusal = Some(e.to_string());
                    }
                }
            }
            if result.status == "refused" {
                EXIT_REFUSAL
            } else {
                0
            }
        }
        SubdivisionValue::Incomplete { lower, upper, .. } => {
            result.status = "incomplete";
            result.lower = Some(lower);
            result.upper = Some(upper);
            EXIT_BUDGET
        }
    };
    result.elapsed_ms = elapsed_field(common, start);
    Ok(Outcome {
        stdout: render(&result, common.format),
        code,
    })
}

fn compute_ii(common: &Common) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let start = Instant::now();
    let cert = if common.canonical {
        canonical_max_ii_matching(&g)
    } else {
        max_ii_matching(&g)
    };
    let mut result = RunResult::new("compute ii", &g);
    result.value = Some(cert.size());
    if common.cert {
        let endpoints = |ids: &[usize]| ids.iter().map(|&e| g.edge(e)).collect::<Vec<_>>();
        result.first_matching = Some(endpoints(&cert.m1));
        result.second_matching = Some(endpoints(&cert.m2));
    }
    result.elapsed_ms = elapsed_field(common, start);
    Ok(Outcome {
        stdout: render(&result, common.format),
        code: 0,
    })
}

fn compute_bounds(common: &Common) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let start = Instant::now();
    let report = bounds(&g);
    let mut result = RunResult::new("compute bounds", &g);
    result.status = "incomplete";
    result.lower = Some(report.lower);
    result.upper = Some(report.upper);
    result.provenance = format!(
        "max(ceil(n/2), n - matching{}) <= gamma-sp <= {}; matching = {}, packing = {}",
        match report.alpha {
            Some(a) => format!(", independence {a} since bipartite"),
            None => String::new(),
        },
        if report.has_isolated {
            "n with isolated vertices"
        } else {
            "min(n - 1, n - packing)"
        },
        report.alpha_prime,
        report.rho
    );
    result.elapsed_ms = elapsed_field(common, start);
    Ok(Outcome {
        stdout: render(&result, common.format),
        code: 0,
    })
}

fn parse_set(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad vertex id in --set: {part:?}")))
        })
        .collect()
}

fn verify(common: &Common, set: &str) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let d = parse_set(set)?;
    let start = Instant::now();
    let mut result = RunResult::new("verify", &g);
    result.provenance = "definition check".to_string();
    let code = match verify_super_dom(&g, &d) {
        Ok(cert) => {
            result.value = Some(cert.size());
            if common.cert {
                result.core = Some(extract_core(&cert));
                result.certificate = Some(cert.d);
            }
            0
        }
        Err(refusal) => {
            result.status = "refused";
            result.refusal = Some(refusal.to_string());
            EXIT_REFUSAL
        }
    };
    result.elapsed_ms = elapsed_field(common, start);
    Ok(Outcome {
        stdout: render(&result, common.format),
        code,
    })
}

fn emit_reduction(
    common: &Common,
    out: Option<&str>,
    mut result: ReduceResult,
    edge_list: String,
    roles: String,
) -> Result<Outcome, Failure> {
    if let Some(prefix) = out {
        std::fs::write(format!("{prefix}.el"), &edge_list)
            .map_err(|e| Failure::Usage(format!("cannot write {prefix}.el: {e}")))?;
        std::fs::write(format!("{prefix}.roles"), &roles)
            .map_err(|e| Failure::Usage(format!("cannot write {prefix}.roles: {e}")))?;
    } else {
        result.edge_list = Some(edge_list.clone());
        result.roles = Some(roles.clone());
    }
    let stdout = match common.format {
        Format::Json => serde_json::to_string_pretty(&result).unwrap(),
        Format::Tsv => {
            let mut pairs = vec![
                ("command", result.command.clone()),
                ("n", result.n.to_string()),
                ("m", result.m.to_string()),
                ("threshold", result.threshold.to_string()),
            ];
            if let Some(v) = result.vars {
                pairs.push(("vars", v.to_string()));
            }
            if let Some(c) = result.clauses {
                pairs.push(("clauses", c.to_string()));
            }
            if let Some(t) = result.tree_shaped {
                pairs.push(("tree_shaped", t.to_string()));
            }
            let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = pairs.iter().map(|(_, v)| v.clone()).collect();
            let mut doc = format!("{}\n{}", header.join("\t"), row.join("\t"));
            if result.edge_list.is_some() {
                doc = format!("{doc}\n---\n{edge_list}---\n{roles}");
            }
            doc
        }
    };
    Ok(Outcome { stdout, code: 0 })
}

fn reduce_sat(common: &Common, out: Option<&str>) -> Result<Outcome, Failure> {
    let formula =
        parse_dimacs_cnf(&read_input(&common.input)?).map_err(|e| Failure::Usage(e.to_string()))?;
    let artifact = build_gf(&formula);
    let result = ReduceResult {
        command: "reduce sat".to_string(),
        n: artifact.graph.n(),
        m: artifact.graph.m(),
        threshold: artifact.threshold,
        vars: Some(artifact.vars()),
        clauses: Some(artifact.clause_count()),
        tree_shaped: Some(artifact.tree_shaped),
        edge_list: None,
        roles: None,
    };
    let edge_list = artifact.graph.to_edge_list();
    let roles = artifact.role_sidecar();
    emit_reduction(common, out, result, edge_list, roles)
}

fn reduce_alpha(common: &Common, k: usize, out: Option<&str>) -> Result<Outcome, Failure> {
    let g = read_graph(common)?;
    let artifact = build_product(&g, k);
    let result = ReduceResult {
        command: "reduce alpha".to_string(),
        n: artifact.map.graph.n(),
        m: artifact.map.graph.m(),
        threshold: artifact.threshold,
        vars: None,
        clauses: None,
        tree_shaped: None,
        edge_list: None,
        roles: None,
    };
    let edge_list = artifact.map.graph.to_edge_list();
    let roles = artifact.role_sidecar();
    emit_reduction(common, out, result, edge_list, roles)
}

fn caterpillar(spine: usize) -> Graph {
    let mut g = Graph::new(2 * spine);
    for i in 0..spine - 1 {
        g.add_edge(i, i + 1).unwrap();
    }
    for i in 0..spine {
        g.add_edge(i, spine + i).unwrap();
    }
    g
}

fn bench(common: &Common) -> Result<Outcome, Failure> {
    let mut rows: Vec<RunResult> = Vec::new();
    let mut push = |label: &str, g: &Graph, provenance: &str, value: usize, start: Instant| {
        let mut row = RunResult::new(label, g);
        row.value = Some(value);
        row.provenance = provenance.to_string();
        row.elapsed_ms = elapsed_field(common, start);
        rows.push(row);
    };
    for n in [64usize, 256, 1024] {
        let g = Graph::path(n);
        let start = Instant::now();
        let value = tree_gamma_sp_set(&g).unwrap().value;
        push(&format!("bench tree path-{n}"), &g, "forest solver", value, start);
    }
    let g = caterpillar(128);
    let start = Instant::now();
    let value = tree_gamma_sp_set(&g).unwrap().value;
    push("bench tree caterpillar-256", &g, "forest solver", value, start);
    for n in [16usize, 24, 32] {
        let g = Graph::cycle(n);
        let start = Instant::now();
        let value = gamma_sp_exact(&g, common.budget).exact_value().unwrap();
        push(&format!("bench gamma-sp cycle-{n}"), &g, "search", value, start);
    }
    let g = Graph::complete(3);
    let start = Instant::now();
    let value = gamma_sp_subdivision_value(&g, 4, common.budget)
        .exact_value()
        .unwrap();
    push("bench subdivision triangle-k4", &g, "residue formula", value, start);
    for (label, g) in [
        ("bench ii cycle-12", Graph::cycle(12)),
        ("bench ii product-p3", lex_product_k4(&Graph::path(3)).graph),
    ] {
        let start = Instant::now();
        let value = max_ii_matching(&g).size();
        push(label, &g, "search", value, start);
    }
    let items: Vec<Graph> = (3..35).map(Graph::cycle).collect();
    let whole: Graph = items
        .iter()
        .fold(Graph::new(0), |acc, g| acc.disjoint_union(g));
    let start = Instant::now();
    let parallel: usize = batch::map(&items, |g| {
        gamma_sp_exact(g, common.budget).exact_value().unwrap()
    })
    .into_iter()
    .sum();
    push("bench batch parallel cycles-3-34", &whole, "search", parallel, start);
    let start = Instant::now();
    let sequential: usize = batch::map_seq(&items, |g| {
        gamma_sp_exact(g, common.budget).exact_value().unwrap()
    })
    .into_iter()
    .sum();
    push("bench batch sequential cycles-3-34", &whole, "search", sequential, start);

    let stdout = match common.format {
        Format::Json => rows
            .iter()
            .map(|r| serde_json::to_string(r).unwrap())
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Tsv => {
            let mut lines = Vec::new();
            for (i, row) in rows.iter().enumerate() {
                let pairs = row.tsv_pairs();
                if i == 0 {
                    lines.push(pairs.iter().map(|(k, _)| *k).collect::<Vec<_>>().join("\t"));
                }
                lines.push(pairs.into_iter().map(|(_, v)| v).collect::<Vec<_>>().join("\t"));
            }
            lines.join("\n")
        }
    };
    Ok(Outcome { stdout, code: 0 })
}

#[derive(Serialize)]
struct SelftestRow {
    index: usize,
    name: &'static str,
    passed: bool,
    checks: usize,
    notes: Vec<String>,
    failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn selftest(common: &Common) -> Result<Outcome, Failure> {
    let outcomes = acceptance::run_all();
    let all_pass = outcomes.iter().all(|o| o.passed);
    let stdout = match common.format {
        Format::Json => outcomes
            .iter()
            .map(|o| {
                serde_json::to_string(&SelftestRow {
                    index: o.index,
                    name: o.name,
                    passed: o.passed,
                    checks: o.checks,
                    notes: o.notes.clone(),
                    failures: o.first_failures.clone(),
                    elapsed_ms: if common.canonical { None } else { Some(o.elapsed_ms) },
                })
                .unwrap()
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Tsv => outcomes
            .iter()
            .map(|o| o.line_with(!common.canonical))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome {
        stdout,
        code: if all_pass { 0 } else { EXIT_REFUSAL },
    })
}
