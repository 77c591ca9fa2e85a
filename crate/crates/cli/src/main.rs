//! `rorc`: analysis, rendering, verification and witnesses for the
//! components of the non-Richardson locus of a parabolic nilradical.
//!
//! Exit codes: 0 success, 1 violation or exhausted witness budget,
//! 2 invalid input or configuration.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rorc::io::{elementary_sum, SUPPORTED_PRIMES};
use rorc::verify::{check_component_count, check_lemmas, check_theorem_exhaustive, check_theorem_sampled, gl5_fixture_suite, CheckResult};
use rorc::{
    chain_stats, complete_diagram, decompose, diagram_class, gamma_set, jordan_type, lambda_of, lambda_set,
    minimal_movement, subdiagram, t_of_d, with_prime_field, DimensionVector, Domain, EntryScalar, Error,
    ExperimentConfig, FiniteField, Int, MatrixDoc, Mode, Pair, Rational, Strata, VerificationReport, WitnessConfig,
    WitnessMethod,
};

/// Version of the JSON documents emitted by `analyze`, `diagram`, `tableau`
/// and `witness`.
const DOC_SCHEMA_VERSION: &str = "1.0.0";

#[derive(Parser)]
#[command(name = "rorc", version, about = "Rank-defect strata and non-Richardson components in parabolic nilradicals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// λ(d), Γ(d), Λ(d) and the data of every component Z_ij.
    Analyze(Common),
    /// The complete line diagram L_R(d), or its window with --pair.
    Diagram(PairArgs),
    /// T(d), or T(i,j) with --pair.
    Tableau(PairArgs),
    /// Run verification checks, or test a single matrix with --matrix.
    Verify(VerifyArgs),
    /// A matrix in Z_ij lying in no other component.
    Witness(WitnessArgs),
}

#[derive(Args)]
struct Common {
    /// Dimension vector, comma separated (e.g. 7,5,2,3,5,1,2,6,5).
    #[arg(short = 'd', long = "dims", value_name = "D")]
    d: String,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON document to this path.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_name = "I,J")]
    pair: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension vector; defaults to the one recorded in --matrix.
    #[arg(short = 'd', long = "dims", value_name = "D")]
    d: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// exhaustive | sample
    #[arg(long, default_value = "sample")]
    mode: String,
    /// Prime p of F_p.
    #[arg(long, default_value_t = rorc::DEFAULT_PRIME.to_string())]
    field: String,
    /// Samples per population in sample mode.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, env = "RORC_SEED", default_value_t = 0)]
    seed: u64,
    /// Exhaustive mode refuses populations above 2^dim-cap matrices.
    #[arg(long, default_value_t = 20)]
    dim_cap: usize,
    /// Comma-separated checks: theorem, lemmas, count, gl5.
    #[arg(long, default_value = "theorem")]
    checks: String,
    /// Test one matrix document instead of running populations.
    #[arg(long, value_name = "PATH")]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_name = "I,J")]
    pair: String,
    #[arg(long, default_value_t = rorc::DEFAULT_PRIME.to_string())]
    field: String,
    #[arg(long, env = "RORC_SEED", default_value_t = 0)]
    seed: u64,
    /// Maximum number of randomized search trials.
    #[arg(long, default_value_t = WitnessConfig::default().budget)]
    budget: usize,
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WitnessBudgetExhausted { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// What a subcommand produced: text, its JSON form, and whether it passed.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, out) = match &cli.command {
        Command::Analyze(c) => (c.json, c.out.clone()),
        Command::Diagram(p) | Command::Tableau(p) => (p.common.json, p.common.out.clone()),
        Command::Verify(v) => (v.json, v.out.clone()),
        Command::Witness(w) => (w.common.json, w.common.out.clone()),
    };
    let result = match &cli.command {
        Command::Analyze(c) => analyze(c),
        Command::Diagram(p) => diagram(p),
        Command::Tableau(p) => tableau(p),
        Command::Verify(v) => verify(v),
        Command::Witness(w) => witness(w),
    };
    match result.and_then(|o| emit(o, json, out.as_deref())) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(o: Output, json: bool, out: Option<&Path>) -> CliResult<bool> {
    let doc = serde_json::to_string_pretty(&o.json).expect("serializable") + "\n";
    if let Some(path) = out {
        fs::write(path, &doc).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    if json {
        print!("{doc}");
    } else {
        print!("{}", o.text);
    }
    Ok(o.passed)
}

fn parse_d(s: &str) -> CliResult<DimensionVector> {
    Ok(s.parse()?)
}

fn parse_pair(d: &DimensionVector, s: &str) -> CliResult<Pair> {
    let p: Pair = s.parse()?;
    d.check_pair(p.i, p.j)?;
    Ok(p)
}

fn parse_prime(s: &str) -> CliResult<u64> {
    match s.parse::<Domain>()? {
        Domain::Fp(p) => Ok(p),
        other => Err(invalid(format!(
            "field {other} is not a prime field (supported primes: {SUPPORTED_PRIMES:?})"
        ))),
    }
}

fn pairs_text(pairs: impl IntoIterator<Item = Pair>) -> String {
    let v: Vec<String> = pairs.into_iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn indent(s: &str, by: &str) -> String {
    s.lines().map(|l| format!("{by}{l}\n")).collect()
}

fn analyze(c: &Common) -> CliResult<Output> {
    let d = parse_d(&c.d)?;
    let gamma = gamma_set(&d);
    let dec = decompose(&d);
    let mut text = format!("d = {d}  (n = {}, t = {}, dim n = {})\n", d.n(), d.t(), d.nilradical_dim());
    text += &format!("lambda(d) = {}\n", dec.lambda);
    text += &format!("Gamma(d) = {}  ({} pairs)\n", pairs_text(gamma.iter().copied()), gamma.len());
    text += &format!(
        "Lambda(d) = {}  ({} components)\n",
        pairs_text(dec.components.iter().map(|s| s.pair)),
        dec.components.len()
    );
    if dec.components.is_empty() {
        text += "complement of the Richardson orbit is empty\n";
    }
    for s in &dec.components {
        text += &format!(
            "\nZ{}: kappa = {}, rank threshold r = {}, codim c = {}, mu = {}\n",
            s.pair, s.kappa, s.rank_threshold, s.codim, s.mu
        );
        text += &indent(&s.tableau.render(), "  ");
    }
    let json = json!({
        "schema_version": DOC_SCHEMA_VERSION,
        "d": d,
        "n": d.n(),
        "t": d.t(),
        "nilradical_dim": d.nilradical_dim(),
        "lambda": dec.lambda,
        "gamma": gamma,
        "components": dec.components,
    });
    Ok(Output { text, json, passed: true })
}

fn diagram(p: &PairArgs) -> CliResult<Output> {
    let d = parse_d(&p.common.d)?;
    let full = complete_diagram(&d);
    let (l, window) = match &p.pair {
        Some(s) => {
            let pair = parse_pair(&d, s)?;
            (subdiagram(&full, pair.i, pair.j)?, Some(pair))
        }
        None => (full, None),
    };
    let stats = chain_stats(&l);
    let class = diagram_class(&l);
    let mut text = match window {
        Some(w) => format!("L_R{d} window {w}\n"),
        None => format!("L_R{d}\n"),
    };
    text += &l.render_ascii();
    let lengths: Vec<String> = stats.lengths.iter().map(usize::to_string).collect();
    text += &format!("chain lengths: {}\n", lengths.join(","));
    text += &format!("Jordan type of Phi: {class}\n");
    let edges: Vec<[usize; 2]> = l.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    let json = json!({
        "schema_version": DOC_SCHEMA_VERSION,
        "d": d,
        "window": window,
        "columns": l.columns(),
        "n": l.n(),
        "edges": edges,
        "chain_lengths": stats.lengths,
        "jordan_type": class,
        "ascii": l.render_ascii(),
    });
    Ok(Output { text, json, passed: true })
}

fn tableau(p: &PairArgs) -> CliResult<Output> {
    let d = parse_d(&p.common.d)?;
    let Some(s) = &p.pair else {
        let t = t_of_d(&d);
        let text = format!("T{d}, shape {}\n{}", lambda_of(&d), t.render());
        let json = json!({
            "schema_version": DOC_SCHEMA_VERSION,
            "d": d,
            "pair": null,
            "tableau": t,
        });
        return Ok(Output { text, json, passed: true });
    };
    let pair = parse_pair(&d, s)?;
    let mv = minimal_movement(&d, pair.i, pair.j)?;
    let text = format!(
        "T{pair} for d = {d}, shape {}\nbox {} moved from row {} to row {} (c = {})\n{}",
        mv.mu,
        pair.j,
        mv.from_row,
        mv.to_row,
        mv.codim,
        mv.tableau.render()
    );
    let json = json!({
        "schema_version": DOC_SCHEMA_VERSION,
        "d": d,
        "pair": pair,
        "tableau": mv.tableau,
        "from_row": mv.from_row,
        "to_row": mv.to_row,
        "codim": mv.codim,
    });
    Ok(Output { text, json, passed: true })
}

fn verify(v: &VerifyArgs) -> CliResult<Output> {
    let mode: Mode = v.mode.parse()?;
    let field = parse_prime(&v.field)?;
    if let Some(path) = &v.matrix {
        return verify_matrix(v, path);
    }
    let d = parse_d(v.d.as_deref().ok_or_else(|| invalid("verify needs -d or --matrix"))?)?;
    let mut cfg = ExperimentConfig::new(d);
    cfg.mode = mode;
    cfg.field = field;
    cfg.trials = v.trials;
    cfg.seed = v.seed;
    cfg.dim_cap = v.dim_cap;
    cfg.validate()?;

    let mut report = VerificationReport::new(Some(cfg.clone()));
    let mut seen = Vec::new();
    for name in v.checks.split(',').map(str::trim) {
        if seen.contains(&name) {
            continue;
        }
        seen.push(name);
        let part = match name {
            "theorem" => match cfg.mode {
                Mode::Exhaustive => check_theorem_exhaustive(&cfg)?,
                Mode::Sample => check_theorem_sampled(&cfg)?,
            },
            "lemmas" => check_lemmas(&cfg)?,
            "count" => check_component_count(&cfg)?,
            "gl5" => gl5_fixture_suite(),
            other => return Err(invalid(format!("unknown check {other:?} (theorem|lemmas|count|gl5)"))),
        };
        report.extend(part);
    }
    let mut text = format!(
        "verify d = {}  mode = {}  field = F_{}  trials = {}  seed = {}  dim-cap = {}\n",
        cfg.d, cfg.mode, cfg.field, cfg.trials, cfg.seed, cfg.dim_cap
    );
    text += &format!(
        "Lambda(d) = {}\n",
        pairs_text(report.components.clone().unwrap_or_default())
    );
    text += &report.summary();
    Ok(Output {
        text,
        passed: report.passed,
        json: serde_json::to_value(&report).expect("serializable"),
    })
}

/// Reads a matrix document, or any JSON object carrying one under `"matrix"`
/// (such as `witness --json` output).
fn read_matrix_doc(path: &Path) -> CliResult<MatrixDoc> {
    let raw = fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&raw).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    let v = match v.get("matrix") {
        Some(inner) if inner.is_object() => inner.clone(),
        _ => v,
    };
    serde_json::from_value(v).map_err(|e| invalid(format!("{}: not a matrix document: {e}", path.display())))
}

fn verify_matrix(v: &VerifyArgs, path: &Path) -> CliResult<Output> {
    let doc = read_matrix_doc(path)?;
    let d = match &v.d {
        Some(s) => parse_d(s)?,
        None => doc.dims()?,
    };
    if d.parts() != doc.d.as_slice() {
        return Err(invalid(format!("matrix document has d = {:?}, but -d gives {d}", doc.d)));
    }
    let check = match doc.domain()? {
        Domain::Z => matrix_check::<Int>(&doc, &d)?,
        Domain::Q => matrix_check::<Rational>(&doc, &d)?,
        Domain::Fp(p) => with_prime_field!(p, F => matrix_check::<F>(&doc, &d))??,
    };
    let mut report = VerificationReport::new(None);
    report.components = Some(lambda_set(&d).into_iter().collect());
    report.push(check);
    let text = format!("matrix {} over {}, d = {d}\n{}", path.display(), doc.field, report.summary());
    Ok(Output {
        text,
        passed: report.passed,
        json: serde_json::to_value(&report).expect("serializable"),
    })
}

/// Jordan type against window ranks, and coverage by the Λ-strata, for one matrix.
fn matrix_check<S: EntryScalar>(doc: &MatrixDoc, d: &DimensionVector) -> CliResult<CheckResult> {
    let a = doc.to_matrix::<S>()?;
    let st = Strata::new(d);
    let rich = st.is_richardson(&a)?;
    let profile = st.defect_profile(&a)?;
    let members = st.lambda_membership(&a);
    let mut c = CheckResult::new("matrix_membership", true);
    c.population = 1;
    c.counts.insert(if rich { "richardson" } else { "defective" }.into(), 1);
    for p in &members {
        c.counts.insert(format!("stratum{p}"), 1);
    }
    c.notes.push(format!("A = {}", elementary_sum(&a)));
    c.notes.push(format!("Jordan type {}", jordan_type(&a)?));
    c.notes.push(format!("defect profile (i,j,k): {profile:?}"));
    c.notes.push(format!("Λ-strata containing A: {}", pairs_text(members.iter().copied())));
    if rich != profile.is_empty() {
        c.violations += 1;
        c.notes.push("Jordan type and window ranks disagree".into());
    }
    if !rich && members.is_empty() {
        c.violations += 1;
        c.notes.push("defective matrix outside every Λ-stratum".into());
    }
    if rich && !members.is_empty() {
        c.violations += 1;
        c.notes.push("Richardson-type matrix inside a Λ-stratum".into());
    }
    c.passed = c.violations == 0;
    Ok(c)
}

fn witness(w: &WitnessArgs) -> CliResult<Output> {
    let d = parse_d(&w.common.d)?;
    let pair = parse_pair(&d, &w.pair)?;
    let field = parse_prime(&w.field)?;
    let cfg = WitnessConfig {
        seed: w.seed,
        budget: w.budget,
    };
    with_prime_field!(field, F => witness_for::<F>(&d, pair, &cfg))?
}

fn witness_for<F: FiniteField + EntryScalar>(d: &DimensionVector, pair: Pair, cfg: &WitnessConfig) -> CliResult<Output> {
    let st = Strata::new(d);
    let wit = rorc::witness_with::<F>(&st, pair, cfg)?;
    let profile = st.defect_profile_unchecked(&wit.matrix);
    let members = st.lambda_membership(&wit.matrix);
    let sum = elementary_sum(&wit.matrix);
    let mut text = format!("separating witness for Z{pair}, d = {d}, over F_{}\n", F::ORDER);
    text += &format!("A = {sum}\n");
    let method = method_json(&wit.method);
    text += &format!("method: {method}\n");
    text += &format!("defect profile (i,j,k): {profile:?}\n");
    text += &format!("Λ-strata containing A: {}\n", pairs_text(members.iter().copied()));
    for row in wit.matrix.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_json().to_string().trim_matches('"').to_string()).collect();
        text += &format!("  {}\n", cells.join(" "));
    }
    let json = json!({
        "schema_version": DOC_SCHEMA_VERSION,
        "d": d,
        "pair": pair,
        "seed": cfg.seed,
        "budget": cfg.budget,
        "method": method,
        "elementary_sum": sum,
        "defect_profile": profile,
        "lambda_membership": members,
        "matrix": MatrixDoc::from_matrix(&wit.matrix, d),
    });
    Ok(Output {
        text,
        json,
        passed: members == vec![pair],
    })
}

/// The witness method with 1-based vertex labels, as everywhere else in the output.
fn method_json(m: &WitnessMethod) -> Value {
    let edge = |(u, v): (usize, usize)| json!([u + 1, v + 1]);
    match m {
        WitnessMethod::Diagram { removed, added } => json!({
            "kind": "diagram",
            "removed": edge(*removed),
            "added": added.map(edge),
        }),
        WitnessMethod::Search { trial } => json!({ "kind": "search", "trial": trial }),
    }
}
