//! Command-line interface. [`run`] executes a parsed command and returns
//! the exit code, the JSON report and a human summary; nothing here prints.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ordlevel_core::alcoved::{
    check_level_alcoved, check_level_polytope, check_product_level, codegree, AlcovedError, BoundedLevel,
    LatticePolytope, Polytope, ProductRule, DEFAULT_POINT_BUDGET,
};
use ordlevel_core::ehrhart::{self, ehrhart_polynomial, hstar, stanley_level_inequalities};
use ordlevel_core::levelness::{
    check_ehh_condition, check_level, revalidate, Budgets, LevelnessCertificate, Method, Verdict,
    DEFAULT_BRUTE_BUDGET, DEFAULT_SEQUENCE_BUDGET, DEFAULT_SUBSET_BUDGET,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::io::{expect_two_factors, write_json, Input, PolytopeFile, PosetFile};
use crate::parallel::check_level_subsets_parallel;
use crate::report::{bounded_level_json, certificate_json, without_timing, RunReport};
use crate::search::search;

pub const EXIT_LEVEL: i32 = 0;
pub const EXIT_NOT_LEVEL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ordlevel", version, about = "Levelness of order polytopes and alcoved polytopes")]
pub struct Cli {
    /// Print only the JSON report on stdout; the summary goes to stderr.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Subsets,
    ConditionN,
    Brute,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlcovedAction {
    Check,
    Points,
    Shrink,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide levelness of a poset's order polytope.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// Largest number of covers of the bounded poset for the subset search.
        #[arg(long, env = "ORDLEVEL_BUDGET", default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: usize,
        /// Largest poset for the brute-force decider.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BUDGET)]
        brute_budget: usize,
        /// Largest number of condition-N sequences enumerated.
        #[arg(long, default_value_t = DEFAULT_SEQUENCE_BUDGET)]
        sequence_budget: usize,
    },
    /// Ehrhart polynomial of the order polytope.
    Ehrhart {
        path: PathBuf,
        #[arg(long, default_value_t = ehrhart::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// h*-vector, degree and codegree of the order polytope.
    Hstar {
        path: PathBuf,
        #[arg(long, default_value_t = ehrhart::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Alcoved, simplex or product polytopes (a poset file means its order polytope).
    Alcoved {
        #[arg(value_enum)]
        action: AlcovedAction,
        path: PathBuf,
        /// Dilation factor for `points` and `shrink`.
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Largest dilate examined by `check`; defaults to dimension + 1.
        #[arg(long)]
        kmax: Option<i64>,
        /// List interior points only.
        #[arg(long)]
        interior: bool,
        #[arg(long, env = "ORDLEVEL_POINT_BUDGET", default_value_t = DEFAULT_POINT_BUDGET)]
        point_budget: usize,
    },
    /// Levelness of a product of two polytopes and the rule that explains it.
    Product {
        path: PathBuf,
        /// Largest dilate examined; defaults to dimension + 1.
        #[arg(long)]
        kmax: Option<i64>,
        #[arg(long, env = "ORDLEVEL_POINT_BUDGET", default_value_t = DEFAULT_POINT_BUDGET)]
        point_budget: usize,
    },
    /// Replay the fixture manifest and compare against stored reports.
    VerifyFixtures {
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Rewrite the expected reports instead of comparing.
        #[arg(long)]
        bless: bool,
    },
    /// Random search for level posets with long condition-N sequences.
    Search {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        min_size: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, env = "ORDLEVEL_BUDGET", default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: usize,
    },
}

pub struct Outcome {
    pub exit: i32,
    pub report: RunReport,
    pub summary: String,
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs `cli`; relative input paths resolve against `base`. `echo` is
/// recorded verbatim in the report.
pub fn run(cli: &Cli, echo: Vec<String>, base: &Path) -> Outcome {
    let start = Instant::now();
    let mut report = RunReport::new(echo);
    let mut summary = String::new();
    let exit = match dispatch(&cli.command, base, &mut report, &mut summary) {
        Ok(code) => code,
        Err(e) => {
            report.result = json!({ "error": format!("{e:#}") });
            let _ = writeln!(summary, "error: {e:#}");
            EXIT_ERROR
        }
    };
    report.timing.insert("total_ms".into(), ms(start));
    Outcome { exit, report, summary }
}

fn resolve(base: &Path, path: &Path) -> PathBuf {
    if path.is_absolute() {
        path.to_path_buf()
    } else {
        base.join(path)
    }
}

fn read(base: &Path, path: &Path, report: &mut RunReport) -> Result<Input> {
    let input = Input::read(&resolve(base, path))?;
    report.input_sha256 = Some(input.sha256());
    Ok(input)
}

fn dispatch(cmd: &Command, base: &Path, report: &mut RunReport, out: &mut String) -> Result<i32> {
    match cmd {
        Command::Check { path, method, budget, brute_budget, sequence_budget } => {
            let budgets = Budgets { subset_edges: *budget, sequences: *sequence_budget, brute_elements: *brute_budget };
            cmd_check(&read(base, path, report)?, *method, &budgets, report, out)
        }
        Command::Ehrhart { path, budget } => cmd_ehrhart(&read(base, path, report)?, *budget, report, out),
        Command::Hstar { path, budget } => cmd_hstar(&read(base, path, report)?, *budget, report, out),
        Command::Alcoved { action, path, k, kmax, interior, point_budget } => {
            report.budgets.insert("points", *point_budget as u64);
            let input = read(base, path, report)?;
            cmd_alcoved(&input, *action, *k, *kmax, *interior, *point_budget, report, out)
        }
        Command::Product { path, kmax, point_budget } => {
            report.budgets.insert("points", *point_budget as u64);
            cmd_product(&read(base, path, report)?, *kmax, *point_budget, report, out)
        }
        Command::VerifyFixtures { manifest, bless } => {
            let manifest = manifest.clone().unwrap_or_else(default_manifest);
            cmd_verify(&resolve(base, &manifest), *bless, report, out)
        }
        Command::Search { seed, trials, min_size, max_size, budget } => {
            let budgets = Budgets { subset_edges: *budget, ..Budgets::default() };
            report.budgets.insert("subset_edges", *budget as u64);
            let found = search(*seed, *trials, *min_size, *max_size, &budgets)?;
            report.result = json!({
                "seed": seed,
                "trials": found.trials,
                "level": found.level,
                "not_level": found.not_level,
                "longest_level_sequence": found.best.as_ref().map(|b| b.1),
                "poset": found.best.as_ref().map(|b| PosetFile::from_poset(&b.0)),
            });
            let _ = writeln!(out, "{} trials: {} level, {} not level", found.trials, found.level, found.not_level);
            if let Some((_, len)) = &found.best {
                let _ = writeln!(out, "longest condition-N sequence in a level poset: {len}");
            }
            Ok(EXIT_LEVEL)
        }
    }
}

pub fn default_manifest() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/manifest.json")
}

fn run_method(
    poset: &ordlevel_core::Poset,
    method: Method,
    budgets: &Budgets,
) -> Result<LevelnessCertificate, ordlevel_core::levelness::LevelnessError> {
    match method {
        Method::Subsets => check_level_subsets_parallel(poset, budgets.subset_edges),
        other => check_level(poset, other, budgets),
    }
}

fn cmd_check(input: &Input, method: MethodArg, budgets: &Budgets, report: &mut RunReport, out: &mut String) -> Result<i32> {
    let poset = input.poset()?;
    let bounded = poset.bounded();
    let methods: Vec<Method> = match method {
        MethodArg::Subsets => vec![Method::Subsets],
        MethodArg::ConditionN => vec![Method::ConditionN],
        MethodArg::Brute => vec![Method::BruteForce],
        MethodArg::All => Method::ALL.to_vec(),
    };
    for m in &methods {
        let (key, value) = match m {
            Method::Subsets => ("subset_edges", budgets.subset_edges),
            Method::ConditionN => ("sequences", budgets.sequences),
            Method::BruteForce => ("brute_elements", budgets.brute_elements),
        };
        report.budgets.insert(key, value as u64);
    }

    let mut certs = Vec::new();
    for &m in &methods {
        let start = Instant::now();
        let cert = run_method(&poset, m, budgets).with_context(|| format!("{m} checker"))?;
        report.timing.insert(format!("{m}_ms"), ms(start));
        if cert.verdict == Verdict::NotLevel {
            let start = Instant::now();
            let ok = revalidate(&poset, &cert);
            report.timing.insert(format!("{m}_revalidate_ms"), ms(start));
            if !ok {
                bail!("{m} certificate failed re-validation: {cert:?}");
            }
        }
        certs.push(cert);
    }
    report.certificates = certs.iter().map(|c| certificate_json(&bounded, c)).collect();

    let verdict = certs[0].verdict;
    let r_max = certs.iter().find_map(|c| c.r_max);
    let ehh = check_ehh_condition(&poset);
    let ehh_names: Vec<Value> = ehh.iter().map(|&(i, j)| json!([poset.name(i), poset.name(j)])).collect();
    if certs.iter().any(|c| c.verdict != verdict) {
        report.result = json!({
            "error": "checkers disagree",
            "poset": PosetFile::from_poset(&poset),
            "verdicts": certs.iter().map(|c| json!([c.method.name(), c.verdict.to_string()])).collect::<Vec<_>>(),
        });
        let _ = writeln!(out, "checkers disagree:");
        for c in &certs {
            let _ = writeln!(out, "  {}: {}", c.method, c.verdict);
        }
        let _ = writeln!(out, "poset: {}", serde_json::to_string(&PosetFile::from_poset(&poset))?);
        return Ok(EXIT_ERROR);
    }

    report.result = json!({
        "verdict": verdict.to_string(),
        "level": verdict.is_level(),
        "elements": poset.len(),
        "r": bounded.total_rank(),
        "r_max": r_max,
        "methods": methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
        "ehh_violations": ehh_names,
        "revalidated": true,
    });

    let _ = write!(out, "{verdict} (codegree r = {}", bounded.total_rank());
    if let Some(r_max) = r_max {
        let _ = write!(out, ", r_max = {r_max}");
    }
    let _ = writeln!(out, ")");
    for c in &certs {
        let _ = write!(out, "  {}: {}", c.method, c.verdict);
        if let Some(w) = &c.witness {
            let p = w.point();
            let coords: Vec<String> = p.coords.iter().map(i64::to_string).collect();
            let _ = write!(out, ", witness ({}) at height {}", coords.join(","), p.height);
        }
        let _ = writeln!(out);
    }
    if !ehh.is_empty() {
        let _ = writeln!(out, "  height/depth condition fails on {} cover(s)", ehh.len());
    }
    Ok(if verdict.is_level() { EXIT_LEVEL } else { EXIT_NOT_LEVEL })
}

fn cmd_ehrhart(input: &Input, budget: usize, report: &mut RunReport, out: &mut String) -> Result<i32> {
    let poset = input.poset()?;
    report.budgets.insert("elements", budget as u64);
    let poly = ehrhart_polynomial(&poset, budget)?;
    let d = poset.len() as i64;
    let values: Vec<String> = (0..=d + 1).map(|k| poly.value(k).to_string()).collect();
    report.result = json!({
        "polynomial": poly.to_string(),
        "coefficients": poly.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "values": values,
        "dimension": d,
        "codegree": poset.bounded().total_rank(),
    });
    let _ = writeln!(out, "ehr(k) = {poly}");
    let _ = writeln!(out, "ehr(0..={}) = {}", d + 1, values.join(", "));
    Ok(EXIT_LEVEL)
}

fn cmd_hstar(input: &Input, budget: usize, report: &mut RunReport, out: &mut String) -> Result<i32> {
    let poset = input.poset()?;
    report.budgets.insert("elements", budget as u64);
    let h = hstar(&poset, budget)?;
    let entries: Vec<String> = h.entries().iter().map(u128::to_string).collect();
    let trimmed = &entries[..=h.degree()];
    report.result = json!({
        "hstar": h.entries().iter().map(|&v| json!(v as u64)).collect::<Vec<_>>(),
        "degree": h.degree(),
        "codegree": h.codegree(),
        "dimension": h.dimension(),
        "stanley_violations": stanley_level_inequalities(&h),
    });
    let _ = writeln!(out, "h* = ({})", trimmed.join(", "));
    let _ = writeln!(out, "degree {}, codegree {}", h.degree(), h.codegree());
    Ok(EXIT_LEVEL)
}

fn bounded_exit(v: &BoundedLevel) -> i32 {
    if v.is_level() {
        EXIT_LEVEL
    } else {
        EXIT_NOT_LEVEL
    }
}

fn describe(v: &BoundedLevel) -> String {
    match v {
        BoundedLevel::LevelUpTo(k) => format!("LEVEL_UP_TO({k})"),
        BoundedLevel::NotLevel { k, witnesses } => {
            format!("NOT_LEVEL at k = {k}, {} failing point(s), first {:?}", witnesses.len(), witnesses[0])
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_alcoved(
    input: &Input,
    action: AlcovedAction,
    k: i64,
    kmax: Option<i64>,
    interior: bool,
    budget: usize,
    report: &mut RunReport,
    out: &mut String,
) -> Result<i32> {
    let poly = input.polytope_or_order()?;
    match action {
        AlcovedAction::Check => {
            let kmax = kmax.unwrap_or(poly.ambient_dim() as i64 + 1);
            let r = codegree(&poly, budget)?;
            let verdict = match &poly {
                Polytope::Alcoved(a) => check_level_alcoved(a, kmax, budget)?,
                other => check_level_polytope(other, kmax, budget)?,
            };
            let mut result = bounded_level_json(&verdict);
            result["codegree"] = json!(r);
            report.result = result;
            let _ = writeln!(out, "{} (codegree {r})", describe(&verdict));
            Ok(bounded_exit(&verdict))
        }
        AlcovedAction::Points => {
            let pts = if interior { poly.interior_lattice_points(k, budget)? } else { poly.lattice_points(k, budget)? };
            report.result = json!({ "k": k, "interior": interior, "count": pts.len(), "points": pts.iter().collect::<Vec<_>>() });
            let _ = writeln!(out, "{} {}lattice points in {k}P", pts.len(), if interior { "interior " } else { "" });
            Ok(EXIT_LEVEL)
        }
        AlcovedAction::Shrink => {
            let a = poly.as_alcoved().ok_or_else(|| anyhow!("shrink needs an alcoved polytope"))?;
            match a.dilate(k)?.shrink() {
                Ok(s) => {
                    let pts = s.lattice_points(1, budget)?;
                    report.result = json!({
                        "k": k,
                        "empty": false,
                        "polytope": PolytopeFile::from_alcoved(&s),
                        "points": pts.iter().collect::<Vec<_>>(),
                    });
                    let _ = writeln!(out, "shrink of {k}P has {} lattice points", pts.len());
                }
                Err(AlcovedError::EmptyShrink) => {
                    report.result = json!({ "k": k, "empty": true });
                    let _ = writeln!(out, "shrink of {k}P is empty");
                }
                Err(e) => return Err(e.into()),
            }
            Ok(EXIT_LEVEL)
        }
    }
}

fn rule_name(rule: Option<ProductRule>) -> Value {
    match rule {
        None => Value::Null,
        Some(ProductRule::SecondHasIdp) => json!("lower codegree second factor has IDP"),
        Some(ProductRule::FirstHasIdp) => json!("lower codegree first factor has IDP"),
        Some(ProductRule::EqualCodegrees) => json!("equal codegrees"),
        Some(ProductRule::AlcovedHighCodegree { level_factor }) => {
            json!(format!("alcoved factors, factor {} level with codegree above the other's dimension", level_factor + 1))
        }
    }
}

fn cmd_product(input: &Input, kmax: Option<i64>, budget: usize, report: &mut RunReport, out: &mut String) -> Result<i32> {
    let poly = input.polytope()?;
    let (p, q) = expect_two_factors(&poly)?;
    let kmax = kmax.unwrap_or(poly.ambient_dim() as i64 + 1);
    let r = check_product_level(p, q, kmax, budget)?;
    report.result = json!({
        "codegrees": r.codegrees,
        "product_codegree": r.product_codegree,
        "factor_levels": r.factor_levels.iter().map(bounded_level_json).collect::<Vec<_>>(),
        "idp_failures": r.idp_failures,
        "rule": rule_name(r.rule),
        "product": bounded_level_json(&r.product),
        "consistent": r.consistent(),
    });
    let _ = writeln!(out, "codegrees {:?}, product codegree {}", r.codegrees, r.product_codegree);
    let _ = writeln!(out, "rule: {}", rule_name(r.rule).as_str().unwrap_or("none applies"));
    let _ = writeln!(out, "product: {}", describe(&r.product));
    if !r.consistent() {
        let _ = writeln!(out, "inconsistent: a sufficient rule applies but the product check failed");
        return Ok(EXIT_ERROR);
    }
    Ok(bounded_exit(&r.product))
}

/// One replayed command with its stored exit code and report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureCase {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
    pub expected: String,
}

fn cmd_verify(manifest: &Path, bless: bool, report: &mut RunReport, out: &mut String) -> Result<i32> {
    let text = std::fs::read(manifest).with_context(|| format!("reading {}", manifest.display()))?;
    let mut cases: Vec<FixtureCase> = serde_json::from_slice(&text).context("parsing fixture manifest")?;
    let dir = manifest.parent().unwrap_or(Path::new("."));
    let mut results = Vec::new();
    let mut failures = 0;
    for case in &mut cases {
        let mut argv = vec!["ordlevel".to_string()];
        argv.extend(case.args.iter().cloned());
        let cli = Cli::try_parse_from(&argv).with_context(|| format!("fixture {}", case.name))?;
        if matches!(cli.command, Command::VerifyFixtures { .. }) {
            bail!("fixture {} would recurse", case.name);
        }
        let outcome = run(&cli, case.args.clone(), dir);
        let got = without_timing(outcome.report.to_json());
        let expected_path = dir.join(&case.expected);
        let ok = if bless {
            case.exit = outcome.exit;
            write_json(&expected_path, &got)?;
            true
        } else {
            let expected: Value = serde_json::from_slice(
                &std::fs::read(&expected_path).with_context(|| format!("reading {}", expected_path.display()))?,
            )?;
            outcome.exit == case.exit && got == expected
        };
        failures += usize::from(!ok);
        let _ = writeln!(out, "{} {}", if ok { "ok  " } else { "FAIL" }, case.name);
        results.push(json!({ "name": case.name, "ok": ok, "exit": outcome.exit }));
    }
    if bless {
        write_json(manifest, &cases)?;
    }
    report.result = json!({ "cases": results, "failures": failures });
    Ok(if failures == 0 { EXIT_LEVEL } else { EXIT_ERROR })
}
