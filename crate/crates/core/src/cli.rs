//! Batch command-line frontend: every computation behind a subcommand,
//! deterministic reports in JSON, CSV or text, explicit exit codes.
//!
//! Exit codes: 0 success, 1 failed assertion-mode or theorem check,
//! 2 invalid input, 3 resource-cap overflow.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::{rat_to_string, Rational};
use crate::flaggeo;
use crate::fundmod;
use crate::ideal;
use crate::jsonio;
use crate::pluecker::{self, ParamMap, XVar};
use crate::roots::{self, MultDegree, RootIndex};
use crate::tensormod::{self, DEFAULT_DIM_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct CommonOpts {
    /// Rank parameter: computations run inside the n-dimensional space.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Multiplicities: inline "i,j:m;i,j:m" or a JSON file path.
    #[arg(long, global = true)]
    pub mult: Option<String>,
    /// A single root "i,j".
    #[arg(long, global = true)]
    pub root: Option<String>,
    /// Seed for every randomized suite; fixed seed means fixed report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of randomized trials where applicable.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Degree cutoff for graded computations.
    #[arg(long, global = true)]
    pub max_degree: Option<u64>,
    /// Entry bound for multiplicity sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub max_mult: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Turn conjecture disagreements into failures (theorem checks always
    /// assert).
    #[arg(long = "assert", global = true)]
    pub assert_mode: bool,
    /// Bound on internal parallelism.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Resource cap on ambient dimensions and enumeration sizes.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_CAP)]
    pub cap: usize,
}

#[derive(Debug, Parser)]
#[command(
    name = "degflag",
    version,
    about = "Exact computations with degenerate flag varieties of type A"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: CommonOpts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded and total dimensions of the module of a multiplicity
    /// collection.
    Dims,
    /// Basis and graded dimensions of one fundamental module (--root i,j).
    Fundamental,
    /// Lattice points of the Dyck-path polytope of a multiplicity
    /// collection.
    Polytope,
    /// Monomial-basis evidence: polytope size vs module dimension vs rank.
    CheckFfl,
    /// Enumerate the generalized Pluecker relations.
    Relations,
    /// Symbolic (and optionally randomized) vanishing of every relation.
    VerifyRelations,
    /// Map a polynomial file through the parametrization homomorphism.
    Psi { file: PathBuf },
    /// Straighten a polynomial file to PBW degree <= 1 variables.
    Straighten { file: PathBuf },
    /// Coordinate-ring component dimension vs module dimension.
    Qdim,
    /// Ideal-quotient Hilbert function vs module Hilbert function.
    CheckIdeal,
    /// Orbit point from a parameter file, or seeded random points.
    Orbit { file: Option<PathBuf> },
    /// Sweep all multiplicity collections with entries up to --max-mult.
    Report,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dims => "dims",
            Command::Fundamental => "fundamental",
            Command::Polytope => "polytope",
            Command::CheckFfl => "check-ffl",
            Command::Relations => "relations",
            Command::VerifyRelations => "verify-relations",
            Command::Psi { .. } => "psi",
            Command::Straighten { .. } => "straighten",
            Command::Qdim => "qdim",
            Command::CheckIdeal => "check-ideal",
            Command::Orbit { .. } => "orbit",
            Command::Report => "report",
        }
    }
}

/// Parses "i,j:m;i,j:m" with positional diagnostics, or loads a JSON file.
pub fn mult_parse(spec: &str, n: usize) -> Result<MultDegree> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Error::invalid(format!("cannot read {spec}: {e}")))?;
        let json: jsonio::MultDegreeJson =
            serde_json::from_str(&text).map_err(|e| Error::invalid(format!("{spec}: {e}")))?;
        if json.n != n {
            return Err(Error::invalid(format!(
                "{spec} declares n={}, command uses n={n}",
                json.n
            )));
        }
        return jsonio::mult_from_json(&json);
    }
    let mut m = MultDegree::new(n)?;
    if spec.trim().is_empty() {
        return Ok(m);
    }
    for (pos, segment) in spec.split(';').enumerate() {
        let diag = |msg: String| {
            Error::invalid(format!("--mult segment {} (`{segment}`): {msg}", pos + 1))
        };
        let (pair, mult) = segment
            .split_once(':')
            .ok_or_else(|| diag("expected `i,j:m`".to_string()))?;
        let (i, j) = pair
            .split_once(',')
            .ok_or_else(|| diag("expected `i,j` before `:`".to_string()))?;
        let parse = |t: &str, what: &str| -> Result<u64> {
            t.trim()
                .parse::<u64>()
                .map_err(|_| diag(format!("malformed {what} `{t}`")))
        };
        let i = parse(i, "i")? as usize;
        let j = parse(j, "j")? as usize;
        let value = parse(mult, "multiplicity")?;
        let root = RootIndex::new(i, j);
        root.check(n).map_err(|e| diag(e.to_string()))?;
        if m.get(root) != 0 {
            return Err(diag("duplicate pair".to_string()));
        }
        m.set(root, value)?;
    }
    Ok(m)
}

fn parse_root(spec: &str, n: usize) -> Result<RootIndex> {
    let (i, j) = spec
        .split_once(',')
        .ok_or_else(|| Error::invalid(format!("--root expects `i,j`, got `{spec}`")))?;
    let parse = |t: &str| -> Result<usize> {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::invalid(format!("malformed root component `{t}`")))
    };
    let root = RootIndex::new(parse(i)?, parse(j)?);
    root.check(n)?;
    Ok(root)
}

fn require_n(opts: &CommonOpts) -> Result<usize> {
    opts.n
        .ok_or_else(|| Error::invalid("--n is required for this command".to_string()))
}

fn require_mult(opts: &CommonOpts, n: usize) -> Result<MultDegree> {
    match &opts.mult {
        Some(spec) => mult_parse(spec, n),
        None => Ok(MultDegree::new(n)?),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer: i64 = rng.random_range(-9..=9);
    let denom: i64 = rng.random_range(1..=9);
    Rational::new(numer.into(), denom.into())
}

fn random_params(rng: &mut ChaCha8Rng, n: usize) -> Result<ParamMap> {
    Ok(roots::positive_roots(n)?
        .into_iter()
        .map(|r| (r, random_rational(rng)))
        .collect())
}

struct Outcome {
    result: Value,
    exit: i32,
}

fn ok(result: Value) -> Result<Outcome> {
    Ok(Outcome { result, exit: 0 })
}

fn failed(result: Value) -> Result<Outcome> {
    Ok(Outcome { result, exit: 1 })
}

fn run_dims(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let m = require_mult(opts, n)?;
    let graded = tensormod::hilbert(&m, opts.cap)?;
    ok(json!({
        "n": n,
        "mult": jsonio::mult_to_json(&m).mult,
        "graded_dims": graded,
        "dim": graded.iter().sum::<usize>(),
    }))
}

fn run_fundamental(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let root = parse_root(
        opts.root
            .as_deref()
            .ok_or_else(|| Error::invalid("--root i,j is required".to_string()))?,
        n,
    )?;
    let basis = fundmod::fundamental_basis(n, root.i, root.j)?;
    let mut graded: BTreeMap<usize, usize> = BTreeMap::new();
    for key in &basis {
        *graded.entry(fundmod::pbw_degree(key)).or_insert(0) += 1;
    }
    let max_degree = graded.keys().max().copied().unwrap_or(0);
    let graded: Vec<usize> = (0..=max_degree)
        .map(|d| graded.get(&d).copied().unwrap_or(0))
        .collect();
    ok(json!({
        "n": n,
        "i": root.i,
        "j": root.j,
        "dim": basis.len(),
        "graded_dims": graded,
        "basis": basis
            .iter()
            .map(|k| jsonio::xvar_to_json(&XVar::from(k)))
            .collect::<Vec<_>>(),
    }))
}

fn run_polytope(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let m = require_mult(opts, n)?;
    let points = roots::enumerate_polytope(&m)?;
    ok(json!({
        "n": n,
        "mult": jsonio::mult_to_json(&m).mult,
        "size": points.len(),
        "points": points.iter().map(|p| p.exps.clone()).collect::<Vec<_>>(),
    }))
}

fn run_check_basis(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let m = require_mult(opts, n)?;
    let report = tensormod::monomial_basis_check(&m, opts.cap)?;
    let value = serde_json::to_value(&report).expect("serializable report");
    // Rank equals the module dimension by the spanning lemma; a mismatch
    // is an implementation bug, not conjecture evidence.
    if report.rank != report.dim {
        return failed(value);
    }
    if opts.assert_mode && !report.independent {
        return failed(value);
    }
    ok(value)
}

fn relation_records(n: usize) -> Result<Vec<Value>> {
    let mut records = Vec::new();
    for (data, poly) in pluecker::distinct_nonzero_relations(n)? {
        let mut record = serde_json::to_value(jsonio::relation_to_json(&data, &poly))
            .expect("serializable relation");
        record["text"] = Value::String(poly.to_string());
        records.push(record);
    }
    Ok(records)
}

fn run_relations(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let all = pluecker::enumerate_relations(n)?;
    let zero_count = all.iter().filter(|(_, p)| p.is_zero()).count();
    let records = relation_records(n)?;
    ok(json!({
        "n": n,
        "total_data": all.len(),
        "zero_count": zero_count,
        "distinct_nonzero": records.len(),
        "relations": records,
    }))
}

fn run_verify_relations(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let all = pluecker::enumerate_relations(n)?;
    let threads = opts.threads.max(1);
    let chunk = all.len().div_ceil(threads).max(1);
    let symbolic_failures: usize = std::thread::scope(|scope| {
        let handles: Vec<_> = all
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .filter(|(_, p)| !pluecker::verify_vanishing(p))
                        .count()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker")).sum()
    });
    let trials = opts.trials.unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut randomized_failures = 0usize;
    for _ in 0..trials {
        let c = random_params(&mut rng, n)?;
        for (_, poly) in &all {
            if !pluecker::evaluate_orbit_poly(n, &c, poly)?.is_zero() {
                randomized_failures += 1;
            }
        }
    }
    let result = json!({
        "n": n,
        "checked": all.len(),
        "symbolic_failures": symbolic_failures,
        "randomized_trials": trials,
        "randomized_failures": randomized_failures,
    });
    // Vanishing is a theorem; failures are failures regardless of --assert.
    if symbolic_failures > 0 || randomized_failures > 0 {
        failed(result)
    } else {
        ok(result)
    }
}

fn read_poly(n: usize, file: &Path) -> Result<pluecker::XPoly> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", file.display())))?;
    let json: jsonio::XPolyJson = serde_json::from_str(&text)
        .map_err(|e| Error::invalid(format!("{}: {e}", file.display())))?;
    jsonio::xpoly_from_json(n, &json)
}

fn run_psi(opts: &CommonOpts, file: &Path) -> Result<Outcome> {
    let n = require_n(opts)?;
    let poly = read_poly(n, file)?;
    let image = pluecker::psi(&poly);
    ok(json!({
        "n": n,
        "input": jsonio::xpoly_to_json(&poly),
        "input_text": poly.to_string(),
        "image": jsonio::tzpoly_to_json(&image),
        "image_text": image.to_string(),
        "vanishes": image.is_zero(),
    }))
}

fn run_straighten(opts: &CommonOpts, file: &Path) -> Result<Outcome> {
    let n = require_n(opts)?;
    let poly = read_poly(n, file)?;
    let (exponents, g) = pluecker::straighten(n, &poly)?;
    let lifted = pluecker::multiply_by_degree_zero(&poly, &exponents);
    let check = pluecker::psi(&lifted) == pluecker::psi(&g);
    let result = json!({
        "n": n,
        "exponents": jsonio::mult_to_json(&exponents),
        "g": jsonio::xpoly_to_json(&g),
        "g_text": g.to_string(),
        "psi_consistent": check,
    });
    // The rewriting postcondition is exact; a mismatch is a bug.
    if check {
        ok(result)
    } else {
        failed(result)
    }
}

fn run_qdim(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let m = require_mult(opts, n)?;
    let q_dim = pluecker::qm_dimension(&m, opts.cap)?;
    let m_dim = tensormod::build_module(&m, opts.cap)?.dim();
    let agree = q_dim == m_dim;
    let result = json!({
        "q_dim": q_dim,
        "m_dim": m_dim,
        "agree": agree,
    });
    // Duality of the component with the module is a theorem.
    if agree {
        ok(result)
    } else {
        failed(result)
    }
}

fn run_check_ideal(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let m = require_mult(opts, n)?;
    let report = ideal::ideal_comparison_report(&m, opts.cap, opts.max_degree)?;
    let spanning = ideal::spanning_bound_holds(&report);
    let mut value = serde_json::to_value(&report).expect("serializable report");
    value["spanning_bound_ok"] = Value::Bool(spanning);
    value["surjection_ok"] = Value::Bool(report.surjection_ok);
    // The surjection inequality and the spanning bound are theorems.
    if !report.surjection_ok || !spanning {
        return failed(value);
    }
    // Agreement is a theorem on the diagonal, a conjecture off it.
    let diagonal = m.entries().all(|(r, _)| r.i == r.j);
    if !report.agree && (diagonal || opts.assert_mode) {
        return failed(value);
    }
    ok(value)
}

fn orbit_point_report(n: usize, c: &ParamMap, include_coords: bool) -> Result<(Value, bool)> {
    let point = flaggeo::orbit_point(n, c)?;
    let (rn_ok, violations) = flaggeo::is_rn_member(&point)?;
    let flag = flaggeo::project_to_flag(&point)?;
    let fna_ok = flaggeo::is_fna_member(&flag)?;

    let mut base_nonzero = true;
    let mut proportional = true;
    let mut coords_json = serde_json::Map::new();
    for (root, space) in &point.spaces {
        let coords = flaggeo::pluecker_of_subspace(space, n, *root)?;
        let base = coords[&XVar::highest(*root)].clone();
        if base.is_zero() {
            base_nonzero = false;
            continue;
        }
        for (var, minor) in &coords {
            let expected = pluecker::evaluate_orbit(n, c, var)? * base.clone();
            if &expected != minor {
                proportional = false;
            }
        }
        if include_coords {
            let list: Vec<Value> = coords
                .iter()
                .map(|(var, value)| {
                    json!({
                        "var": jsonio::xvar_to_json(var),
                        "value": rat_to_string(value),
                    })
                })
                .collect();
            coords_json.insert(format!("{},{}", root.i, root.j), Value::Array(list));
        }
    }

    let mut relations_vanish = true;
    for (data, poly) in pluecker::enumerate_relations(n)? {
        let _ = &data;
        if !pluecker::evaluate_orbit_poly(n, c, &poly)?.is_zero() {
            relations_vanish = false;
            break;
        }
    }

    let all_ok = rn_ok && fna_ok && base_nonzero && proportional && relations_vanish;
    let mut value = json!({
        "rn_member": rn_ok,
        "violations": violations,
        "fna_member": fna_ok,
        "base_coordinates_nonzero": base_nonzero,
        "coordinates_proportional": proportional,
        "relations_vanish": relations_vanish,
    });
    if include_coords {
        value["coordinates"] = Value::Object(coords_json);
        value["subspaces"] = Value::Object(
            point
                .spaces
                .iter()
                .map(|(root, space)| {
                    (
                        format!("{},{}", root.i, root.j),
                        serde_json::to_value(jsonio::subspace_to_json(space)).unwrap(),
                    )
                })
                .collect(),
        );
    }
    Ok((value, all_ok))
}

fn run_orbit(opts: &CommonOpts, file: &Option<PathBuf>) -> Result<Outcome> {
    let mut all_ok = true;
    let result = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
            let json: jsonio::ParamsJson = serde_json::from_str(&text)
                .map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
            let (n, c) = jsonio::params_from_json(&json)?;
            if let Some(cli_n) = opts.n {
                if cli_n != n {
                    return Err(Error::invalid(format!(
                        "parameter file has n={n}, command uses n={cli_n}"
                    )));
                }
            }
            let (value, ok_flag) = orbit_point_report(n, &c, true)?;
            all_ok = ok_flag;
            json!({
                "n": n,
                "params": jsonio::params_to_json(n, &c),
                "point": value,
            })
        }
        None => {
            let n = require_n(opts)?;
            let trials = opts.trials.unwrap_or(10);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let mut rows = Vec::new();
            for t in 0..trials {
                let c = random_params(&mut rng, n)?;
                let (value, ok_flag) = orbit_point_report(n, &c, false)?;
                all_ok &= ok_flag;
                rows.push(json!({"trial": t, "checks": value}));
            }
            json!({
                "n": n,
                "trials": trials,
                "seed": opts.seed,
                "all_ok": all_ok,
                "rows": rows,
            })
        }
    };
    // Orbit membership and vanishing are theorems.
    if all_ok {
        ok(result)
    } else {
        failed(result)
    }
}

fn sweep_mults(n: usize, max_mult: u64) -> Result<Vec<MultDegree>> {
    let roots = roots::positive_roots(n)?;
    let mut out = vec![MultDegree::new(n)?];
    for root in roots {
        let mut next = Vec::new();
        for m in &out {
            for value in 0..=max_mult {
                let mut grown = m.clone();
                grown.set(root, value)?;
                next.push(grown);
            }
        }
        out = next;
    }
    out.sort_by_key(|m| (m.total(), m.to_spec_string()));
    Ok(out)
}

fn run_report(opts: &CommonOpts) -> Result<Outcome> {
    let n = require_n(opts)?;
    let mut rows = Vec::new();
    let mut all_independent = true;
    let mut all_q_agree = true;
    for m in sweep_mults(n, opts.max_mult)? {
        let basis = tensormod::monomial_basis_check(&m, opts.cap)?;
        let q_dim = pluecker::qm_dimension(&m, opts.cap)?;
        let ideal_report = ideal::ideal_comparison_report(&m, opts.cap, opts.max_degree)?;
        all_independent &= basis.independent;
        all_q_agree &= q_dim == basis.dim;
        rows.push(json!({
            "mult": jsonio::mult_to_json(&m).mult,
            "dim": basis.dim,
            "graded_dims": basis.graded_dims,
            "polytope_size": basis.polytope_size,
            "independent": basis.independent,
            "q_dim": q_dim,
            "ideal_hilbert": ideal_report.ideal_hilbert,
            "ideal_agree": ideal_report.agree,
        }));
    }
    let result = json!({
        "n": n,
        "max_mult": opts.max_mult,
        "rows": rows,
        "all_independent": all_independent,
        "all_q_agree": all_q_agree,
    });
    if !all_q_agree || (opts.assert_mode && !all_independent) {
        failed(result)
    } else {
        ok(result)
    }
}

fn config_echo(command: &str, opts: &CommonOpts, input: Option<&Path>) -> Value {
    json!({
        "command": command,
        "n": opts.n,
        "mult": opts.mult,
        "root": opts.root,
        "seed": opts.seed,
        "trials": opts.trials,
        "max_degree": opts.max_degree,
        "max_mult": opts.max_mult,
        "format": format!("{:?}", opts.format).to_lowercase(),
        "assert": opts.assert_mode,
        "threads": opts.threads,
        "cap": opts.cap,
        "input": input.map(|p| p.display().to_string()),
    })
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(report: &Value) -> String {
    let mut lines = Vec::new();
    lines.push(format!(
        "degflag {} :: {}",
        report["version"].as_str().unwrap_or(""),
        report["config"]["command"].as_str().unwrap_or("")
    ));
    if let Value::Object(result) = &report["result"] {
        for (key, value) in result {
            match value {
                Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
                    lines.push(format!(
                        "{key} = [{}]",
                        items
                            .iter()
                            .map(render_scalar)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ));
                }
                Value::Object(_) | Value::Array(_) => {
                    lines.push(format!("{key} = {value}"));
                }
                scalar => lines.push(format!("{key} = {}", render_scalar(scalar))),
            }
        }
    }
    lines.join("\n") + "\n"
}

fn render_csv(report: &Value) -> String {
    let mut lines = vec!["key,value".to_string()];
    if let Value::Object(result) = &report["result"] {
        for (key, value) in result {
            match value {
                Value::Array(items) => {
                    for (idx, item) in items.iter().enumerate() {
                        lines.push(format!(
                            "{key}[{idx}],\"{}\"",
                            render_scalar(item).replace('"', "\"\"")
                        ));
                    }
                }
                other => lines.push(format!(
                    "{key},\"{}\"",
                    render_scalar(other).replace('"', "\"\"")
                )),
            }
        }
    }
    lines.join("\n") + "\n"
}

fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
        Format::Text => render_text(report),
        Format::Csv => render_csv(report),
    }
}

/// Runs one parsed invocation and renders its report; returns the exit
/// code.
pub fn run(cli: &Cli) -> Result<i32> {
    let start = Instant::now();
    let opts = &cli.opts;
    let input = match &cli.command {
        Command::Psi { file } | Command::Straighten { file } => Some(file.as_path()),
        Command::Orbit { file: Some(file) } => Some(file.as_path()),
        _ => None,
    };
    let outcome = match &cli.command {
        Command::Dims => run_dims(opts)?,
        Command::Fundamental => run_fundamental(opts)?,
        Command::Polytope => run_polytope(opts)?,
        Command::CheckFfl => run_check_basis(opts)?,
        Command::Relations => run_relations(opts)?,
        Command::VerifyRelations => run_verify_relations(opts)?,
        Command::Psi { file } => run_psi(opts, file)?,
        Command::Straighten { file } => run_straighten(opts, file)?,
        Command::Qdim => run_qdim(opts)?,
        Command::CheckIdeal => run_check_ideal(opts)?,
        Command::Orbit { file } => run_orbit(opts, file)?,
        Command::Report => run_report(opts)?,
    };
    let report = json!({
        "command": cli.command.name(),
        "config": config_echo(cli.command.name(), opts, input),
        "version": env!("CARGO_PKG_VERSION"),
        "timing_ms": start.elapsed().as_millis() as u64,
        "result": outcome.result,
        "status": if outcome.exit == 0 { "ok" } else { "failed" },
    });
    let rendered = render(&report, opts.format);
    match &opts.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(outcome.exit)
}

/// Entry point used by the binary: maps error kinds onto exit codes.
pub fn main_run() -> i32 {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) | Error::DimensionMismatch(_) => 2,
                Error::CapExceeded { .. } => 3,
            }
        }
    }
}
