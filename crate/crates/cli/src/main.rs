//! `propfox`: command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 hypothesis failure,
//! 4 math domain error, 5 golden mismatch.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use propfox_core::algebra::scalar::{format_rational, parse_rational, unit_ball_check};
use propfox_core::cohomology::{h1_report, TheoremStatus};
use propfox_core::corpus;
use propfox_core::extensions::{build_extension, cocycle_space, verify_factors, CrossedHom};
use propfox_core::fitting::{fitting_delta, iwasawa_delta, FittingResult, MuContent};
use propfox_core::fox::{alexander_matrix, tensor_with_alpha};
use propfox_core::zeros::{filter_unit_ball, find_zeros};
use propfox_core::{Error, Matrix, Presentation, RatLaurent, Rational, Representation};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "propfox", version, about = "Twisted Alexander polynomials and representation extensions for pro-p presentations")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the total-degree and constant-γ hypotheses.
    Validate { file: PathBuf },
    /// Print the Alexander matrix over Q[γ, γ⁻¹].
    Matrix {
        file: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// GCD of the (cols − d)-minors.
    Delta {
        file: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Δ_d of the Iwasawa module, i.e. Δ_{d+1} of the untwisted matrix.
    IwasawaDelta {
        file: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Rational and p-adic zeros of Δ_d.
    Zeros {
        file: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        prec: u32,
    },
    /// Cocycle space at γ = a and a verified sample extension.
    Extend {
        file: PathBuf,
        #[arg(long, value_parser = parse_at)]
        at: Rational,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// First cohomology of the local system at γ = a, with the zero audit.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, value_parser = parse_at)]
        at: Rational,
    },
    /// Bundled examples with golden results.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    Run {
        #[arg(long)]
        id: Option<String>,
    },
}

fn parse_at(s: &str) -> Result<Rational, String> {
    let ok = !s.is_empty() && s.split('/').count() <= 2 && s.split('/').all(|t| t.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()));
    if !ok {
        return Err(format!("expected an integer or n/d, got `{s}`"));
    }
    parse_rational(s).map_err(|e| e.to_string())
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::HypothesisViolated(_) => 3,
            _ => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

/// What a subcommand produced: text lines, the JSON results object and an
/// exit code (nonzero for a reported, non-fatal failure such as a golden
/// mismatch or a failed validation).
struct Output {
    text: String,
    results: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = std::env::var("PROPFOX_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let (name, inputs) = describe(&cli.command);
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "inputs": inputs,
                    "results": out.results,
                    "exit_code": out.code,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            if cli.json {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "inputs": inputs,
                    "error": f.message,
                    "exit_code": f.code,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn describe(cmd: &Command) -> (&'static str, Value) {
    let path = |p: &Path| Value::String(p.display().to_string());
    let opt = |p: &Option<PathBuf>| p.as_deref().map_or(Value::Null, path);
    match cmd {
        Command::Validate { file } => ("validate", json!({ "file": path(file) })),
        Command::Matrix { file, rep } => ("matrix", json!({ "file": path(file), "rep": opt(rep) })),
        Command::Delta { file, d, rep } => ("delta", json!({ "file": path(file), "d": d, "rep": opt(rep) })),
        Command::IwasawaDelta { file, d } => ("iwasawa-delta", json!({ "file": path(file), "d": d })),
        Command::Zeros { file, d, rep, prec } => {
            ("zeros", json!({ "file": path(file), "d": d, "rep": opt(rep), "prec": prec }))
        }
        Command::Extend { file, at, rep } => {
            ("extend", json!({ "file": path(file), "at": format_rational(at), "rep": opt(rep) }))
        }
        Command::Cohomology { file, rep, at } => {
            ("cohomology", json!({ "file": path(file), "rep": path(rep), "at": format_rational(at) }))
        }
        Command::Corpus { action: CorpusAction::Run { id } } => ("corpus run", json!({ "id": id })),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load(file: &Path) -> Result<Presentation, Failure> {
    let text = read(file)?;
    Presentation::parse(&text).map_err(|e| Error::from(e).into())
}

fn load_rep(pres: &Presentation, rep: Option<&Path>) -> Result<Representation, Failure> {
    match rep {
        None => Ok(Representation::trivial(pres.num_generators())),
        Some(path) => {
            let text = read(path)?;
            Representation::parse(&text, pres).map_err(|e| Error::from(e).into())
        }
    }
}

fn twisted_matrix(pres: &Presentation, phi: &Representation) -> Result<Matrix<RatLaurent>, Failure> {
    let tensor = tensor_with_alpha(phi, pres)?;
    Ok(alexander_matrix(pres, &tensor, false)?)
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Validate { file } => validate(&load(file)?),
        Command::Matrix { file, rep } => {
            let pres = load(file)?;
            let phi = load_rep(&pres, rep.as_deref())?;
            let q = twisted_matrix(&pres, &phi)?;
            let mut text = format!("Q ({} x {}):\n", q.rows(), q.cols());
            for row in q.row_vecs() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(text, "  [{}]", cells.join(", "));
            }
            let results = json!({ "rows": q.rows(), "cols": q.cols(), "entries": poly_matrix_json(&q) });
            Ok(Output { text, results, code: 0 })
        }
        Command::Delta { file, d, rep } => {
            let pres = load(file)?;
            let phi = load_rep(&pres, rep.as_deref())?;
            let q = twisted_matrix(&pres, &phi)?;
            Ok(delta_output(&fitting_delta(&q, *d, pres.prime)?))
        }
        Command::IwasawaDelta { file, d } => Ok(delta_output(&iwasawa_delta(&load(file)?, *d)?)),
        Command::Zeros { file, d, rep, prec } => {
            let pres = load(file)?;
            let phi = load_rep(&pres, rep.as_deref())?;
            zeros(&pres, &phi, *d, *prec)
        }
        Command::Extend { file, at, rep } => {
            let pres = load(file)?;
            let phi = load_rep(&pres, rep.as_deref())?;
            extend(&pres, &phi, at)
        }
        Command::Cohomology { file, rep, at } => {
            let pres = load(file)?;
            let phi = load_rep(&pres, Some(rep))?;
            cohomology(&pres, &phi, at)
        }
        Command::Corpus { action: CorpusAction::Run { id } } => corpus_run(id.as_deref()),
    }
}

fn validate(pres: &Presentation) -> Result<Output, Failure> {
    let report = pres.validate()?;
    let mut text = String::new();
    for f in &report.failures {
        let _ = writeln!(text, "{f}");
    }
    let ok = report.ok();
    if ok {
        let _ = writeln!(text, "ok: {} generators, {} relators, prime {}", pres.num_generators(), pres.num_relators(), pres.prime);
    }
    let degrees: Vec<String> = report.degrees.iter().map(|d| d.to_string()).collect();
    let results = json!({
        "valid": ok,
        "prime": pres.prime,
        "generators": pres.generators,
        "relator_degrees": degrees,
        "alpha_ok": report.alpha_ok,
        "failures": report.failures,
    });
    Ok(Output { text, results, code: if ok { 0 } else { 3 } })
}

fn poly_json(f: &RatLaurent) -> Value {
    let mut m = Map::new();
    for (k, c) in f.terms() {
        m.insert(k.to_string(), Value::String(format_rational(c)));
    }
    Value::Object(m)
}

fn poly_matrix_json(q: &Matrix<RatLaurent>) -> Value {
    Value::Array(q.row_vecs().iter().map(|r| Value::Array(r.iter().map(poly_json).collect())).collect())
}

fn rat_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

fn matrix_json(m: &Matrix<Rational>) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| vec_json(r)).collect())
}

fn show_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn show_matrix(m: &Matrix<Rational>) -> String {
    let rows: Vec<String> = m.row_vecs().iter().map(|r| show_vec(r)).collect();
    format!("[{}]", rows.join(", "))
}

fn mu_text(mu: &MuContent) -> (String, Value) {
    match mu {
        MuContent::Value(v) => (v.to_string(), json!(v)),
        MuContent::NotComputed => ("not computed".into(), Value::Null),
    }
}

fn delta_output(r: &FittingResult) -> Output {
    let delta = r.delta.normalize_associate();
    let (mu, mu_json) = mu_text(&r.mu_content);
    let text = format!(
        "Δ_{} = {}\nmu content: {}\nminors: {} of size {}\n",
        r.d, delta, mu, r.minor_count, r.minor_size
    );
    let results = json!({
        "d": r.d,
        "delta": poly_json(&delta),
        "delta_text": delta.to_string(),
        "mu_content": mu_json,
        "minor_count": r.minor_count,
        "minor_size": r.minor_size,
    });
    Output { text, results, code: 0 }
}

fn zeros(pres: &Presentation, phi: &Representation, d: usize, prec: u32) -> Result<Output, Failure> {
    if prec == 0 {
        return Err(usage("--prec must be positive"));
    }
    let q = twisted_matrix(pres, phi)?;
    let delta = fitting_delta(&q, d, pres.prime)?.delta.normalize_associate();
    let report = find_zeros(&delta, pres.prime, prec)?;
    let kept = filter_unit_ball(&report);
    let p = pres.prime;
    let mut text = format!("Δ_{d} = {delta}\n");
    if report.identically_zero {
        text.push_str("Δ is identically zero: every point is a zero\n");
    }
    let mut roots = Vec::new();
    for (r, mult) in &report.rational_roots {
        let accepted = unit_ball_check(r, p);
        let _ = writeln!(
            text,
            "rational zero {} (multiplicity {}){}",
            format_rational(r),
            mult,
            if accepted { ", in 1 + pZ_p" } else { "" }
        );
        roots.push(json!({ "value": format_rational(r), "multiplicity": mult, "unit_ball": accepted }));
    }
    let padic: Vec<String> = report.padic_roots.iter().map(|r| r.to_string()).collect();
    let kept_padic: Vec<String> = kept.padic_roots.iter().map(|r| r.to_string()).collect();
    for r in &padic {
        let accepted = kept_padic.contains(r);
        let _ = writeln!(text, "{p}-adic zero {r} mod {p}^{prec}{}", if accepted { ", in 1 + pZ_p" } else { "" });
    }
    for r in &report.obstructions {
        let _ = writeln!(text, "residue {r} mod {p} does not lift (repeated root)");
    }
    if roots.is_empty() && padic.is_empty() && !report.identically_zero {
        text.push_str("no zeros found\n");
    }
    let results = json!({
        "d": d,
        "delta": poly_json(&delta),
        "delta_text": delta.to_string(),
        "prime": p,
        "precision": prec,
        "identically_zero": report.identically_zero,
        "rational_zeros": roots,
        "padic_zeros": padic,
        "padic_zeros_unit_ball": kept_padic,
        "obstructions": report.obstructions,
    });
    Ok(Output { text, results, code: 0 })
}

fn extend(pres: &Presentation, phi: &Representation, a: &Rational) -> Result<Output, Failure> {
    pres.require_valid()?;
    let space = cocycle_space(pres, phi, a)?;
    let l = phi.dim();
    let n = l * pres.num_generators();
    let mut sample = vec![Rational::from_integer(0.into()); n];
    for b in &space.basis {
        for (x, y) in sample.iter_mut().zip(b.stacked()) {
            *x += y;
        }
    }
    let cand = build_extension(pres, phi, a, &CrossedHom::from_stacked(&sample, l))?;
    let report = verify_factors(pres, &cand)?;
    let failing: Vec<usize> = report.failures().map(|c| c.relator).collect();
    let mut text = format!("a = {}\nnullspace dim {}\n", format_rational(a), space.dim());
    let basis: Vec<Vec<Rational>> = space.basis.iter().map(|b| b.stacked()).collect();
    for b in &basis {
        let _ = writeln!(text, "  basis {}", show_vec(b));
    }
    let _ = writeln!(text, "sample cocycle {}", show_vec(&sample));
    let mut images = Map::new();
    for (i, name) in pres.generators.iter().enumerate() {
        let _ = writeln!(text, "  {name} -> {}", show_matrix(cand.image(i)));
        images.insert(name.clone(), matrix_json(cand.image(i)));
    }
    let _ = writeln!(text, "verified: {}", report.passed());
    let results = json!({
        "at": format_rational(a),
        "nullspace_dim": space.dim(),
        "basis": basis.iter().map(|b| vec_json(b)).collect::<Vec<_>>(),
        "sample_cocycle": vec_json(&sample),
        "sample_images": images,
        "verified": report.passed(),
        "failing_relators": failing,
    });
    Ok(Output { text, results, code: if report.passed() { 0 } else { 4 } })
}

fn status_str(s: &TheoremStatus) -> &'static str {
    match s {
        TheoremStatus::Confirmed => "confirmed",
        TheoremStatus::NotTriggered => "not triggered",
        TheoremStatus::NotApplicable => "not applicable",
    }
}

fn cohomology(pres: &Presentation, phi: &Representation, a: &Rational) -> Result<Output, Failure> {
    let r = h1_report(pres, phi, a)?;
    let delta = r.delta.normalize_associate();
    let mut text = format!(
        "a = {}\ndim Z1 = {}\ndim B1 = {}\ndim H1 = {}\nfixed space dim = {}\n",
        format_rational(a),
        r.z1_dim,
        r.b1_dim,
        r.h1_dim,
        r.fixed_space_dim
    );
    let _ = writeln!(text, "Δ_{} = {}", phi.dim(), delta);
    let _ = writeln!(text, "Δ(a) = {} (zero: {})", format_rational(&r.delta_value_at_a), r.delta_zero);
    let _ = writeln!(text, "zero implies H1 != 0: {}", status_str(&r.audit.zero_implies_h1));
    let _ = writeln!(text, "H1 != 0 implies zero: {}", status_str(&r.audit.h1_implies_zero));
    let _ = writeln!(text, "verdict: {}", r.audit.verdict.as_str());
    let results = json!({
        "at": format_rational(a),
        "z1_dim": r.z1_dim,
        "b1_dim": r.b1_dim,
        "h1_dim": r.h1_dim,
        "fixed_space_dim": r.fixed_space_dim,
        "fixed_basis": r.fixed_basis.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
        "cocycle_basis": r.cocycle_basis.iter().map(|b| vec_json(&b.stacked())).collect::<Vec<_>>(),
        "delta_d": phi.dim(),
        "delta": poly_json(&delta),
        "delta_text": delta.to_string(),
        "delta_value_at_a": rat_json(&r.delta_value_at_a),
        "delta_zero": r.delta_zero,
        "zero_implies_h1": status_str(&r.audit.zero_implies_h1),
        "h1_implies_zero": status_str(&r.audit.h1_implies_zero),
        "verdict": r.audit.verdict.as_str(),
    });
    Ok(Output { text, results, code: 0 })
}

fn corpus_run(id: Option<&str>) -> Result<Output, Failure> {
    let list = match id {
        None => corpus::entries(),
        Some(id) => vec![corpus::entry(id).ok_or_else(|| usage(format!("unknown corpus id `{id}`")))?],
    };
    let reports = corpus::run_entries(&list);
    let mut text = String::new();
    let mut entries = Vec::new();
    let mut all = true;
    for (entry, r) in list.iter().zip(&reports) {
        all &= r.passed();
        let passed = r.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(
            text,
            "{} [{}]: {} ({}/{} checks)",
            r.id,
            entry.parameters,
            if r.passed() { "PASS" } else { "FAIL" },
            passed,
            r.checks.len()
        );
        for c in r.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(text, "  mismatch: {} (got {})", c.name, c.detail);
        }
        let checks: Vec<Value> = r
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        entries.push(json!({
            "id": r.id,
            "presentation": entry.presentation_file,
            "representation": entry.representation_file,
            "parameters": entry.parameters,
            "passed": r.passed(),
            "checks": checks,
        }));
    }
    let _ = writeln!(text, "{}", if all { "all golden comparisons passed" } else { "golden mismatch" });
    Ok(Output { text, results: json!({ "entries": entries, "passed": all }), code: if all { 0 } else { 5 } })
}
