//! Command implementations for the `qcell` binary.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use qcell::aalg;
use qcell::cluster;
use qcell::ictables;
use qcell::invariants::{self, CheckResult};
use qcell::pbw::engine;
use qcell::rootdata::QWeight;
use qcell::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug, Clone)]
#[command(name = "qcell", version, about = "Dual canonical bases of quantum unipotent cells of affine sl2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Gram matrix of the PBW basis at a weight.
    Gram(WeightArgs),
    /// Canonical basis in PBW coordinates.
    Canonical(WeightArgs),
    /// Rescaled dual canonical basis in rescaled dual PBW coordinates.
    DualCanonical(WeightArgs),
    /// The initial quantum seed and its realization.
    Seed(Common),
    /// Apply a mutation sequence to the initial seed.
    Mutate(MutateArgs),
    /// Expansion table of IC classes in convolution classes.
    IcTable(WeightArgs),
    /// Run the invariant suite up to a degree bound.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    /// Worker threads; results do not depend on it.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Largest total degree d0 + d1 accepted.
    #[arg(long, default_value_t = 12)]
    pub max_degree: i64,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    #[command(flatten)]
    pub common: Common,
    /// Coefficients of alpha_0 and alpha_1.
    #[arg(long, num_args = 2, value_names = ["D0", "D1"], allow_negative_numbers = true)]
    pub beta: Vec<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct MutateArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    pub seq: Vec<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Degree bound for the per-weight checks.
    #[arg(long, default_value_t = 10)]
    pub degree: i64,
}

/// Failure classes with their exit codes.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Certification(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Certification(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(s) | CliError::Certification(s) | CliError::Resource(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidInput(_) => CliError::Invalid(e.to_string()),
            Error::ResourceBound(_) => CliError::Resource(e.to_string()),
            _ => CliError::Certification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn weight_of(args: &WeightArgs) -> CliResult<QWeight> {
    let c = &args.common;
    if c.n < 1 {
        return Err(CliError::Invalid("--n must be at least 1".to_string()));
    }
    if args.beta.len() != 2 {
        return Err(CliError::Invalid("--beta takes two integers".to_string()));
    }
    let beta = QWeight::new(args.beta[0], args.beta[1]);
    if !beta.is_nonneg() {
        return Err(CliError::Invalid(format!("beta {} is not in Q^+", beta)));
    }
    if beta.degree() > c.max_degree {
        return Err(CliError::Resource(format!(
            "degree {} exceeds the ceiling {} (raise --max-degree)",
            beta.degree(),
            c.max_degree
        )));
    }
    Ok(beta)
}

fn check_n(c: &Common) -> CliResult<()> {
    if c.n < 1 {
        return Err(CliError::Invalid("--n must be at least 1".to_string()));
    }
    Ok(())
}

/// One artifact, rendered in the requested format.
struct Report {
    command: &'static str,
    n: usize,
    body: Value,
    csv: Vec<Vec<String>>,
    csv_header: Vec<&'static str>,
    text: String,
}

fn braid_tag(n: usize) -> CliResult<String> {
    Ok(engine(n)?.convention().tag().to_string())
}

fn render(r: &Report, format: Format) -> CliResult<String> {
    let tag = braid_tag(r.n)?;
    match format {
        Format::Json => {
            let v = json!({
                "tool": "qcell",
                "version": VERSION,
                "braid_convention": tag,
                "command": r.command,
                "n": r.n,
                "result": r.body,
            });
            Ok(serde_json::to_string_pretty(&v).expect("json") + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["version", "braid_convention"];
            header.extend(&r.csv_header);
            w.write_record(&header).map_err(|e| CliError::Invalid(e.to_string()))?;
            for row in &r.csv {
                let mut rec = vec![VERSION.to_string(), tag.clone()];
                rec.extend(row.iter().cloned());
                w.write_record(&rec).map_err(|e| CliError::Invalid(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Invalid(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("utf8"))
        }
        Format::Text => Ok(format!("qcell {} [{}] {} n={}\n{}", VERSION, tag, r.command, r.n, r.text)),
    }
}

fn kp_str(a: &[u32]) -> String {
    a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn gram(args: &WeightArgs) -> CliResult<Report> {
    let n = args.common.n;
    let beta = weight_of(args)?;
    let e = engine(n)?;
    let keys = e.keys(beta);
    let mut rows = Vec::new();
    let mut csv = Vec::new();
    let mut text = String::new();
    for a in &keys {
        let mut row = Vec::new();
        let mut pretty = Vec::new();
        for b in &keys {
            let g = e.gram(a, b)?;
            csv.push(vec![kp_str(&a.a), kp_str(&b.a), g.to_string()]);
            row.push(g.to_string());
            pretty.push(g.pretty());
        }
        writeln!(text, "{}: {}", a, pretty.join(" | ")).unwrap();
        rows.push(row);
    }
    Ok(Report {
        command: "gram",
        n,
        body: json!({
            "weight": [beta.d0, beta.d1],
            "keys": keys.iter().map(|k| k.a.clone()).collect::<Vec<_>>(),
            "matrix": rows,
            "closed_form_holds": true,
        }),
        csv,
        csv_header: vec!["a", "b", "value"],
        text,
    })
}

fn canonical(args: &WeightArgs) -> CliResult<Report> {
    let n = args.common.n;
    let beta = weight_of(args)?;
    let t = engine(n)?.canonical(beta)?;
    let mut csv = Vec::new();
    let mut text = String::new();
    for (i, a) in t.keys.iter().enumerate() {
        for (j, c) in t.keys.iter().enumerate() {
            if !t.coeffs[i][j].is_zero() {
                csv.push(vec![kp_str(&a.a), kp_str(&c.a), t.coeffs[i][j].to_string()]);
                writeln!(text, "B{} : E{} -> {}", a, c, t.coeffs[i][j].pretty()).unwrap();
            }
        }
    }
    Ok(Report {
        command: "canonical",
        n,
        body: t.to_json(),
        csv,
        csv_header: vec!["a", "c", "coefficient"],
        text,
    })
}

fn dual_canonical(args: &WeightArgs) -> CliResult<Report> {
    let n = args.common.n;
    let beta = weight_of(args)?;
    let d = aalg::dual_canonical(n, beta)?;
    let mut csv = Vec::new();
    let mut text = String::new();
    let mut elems = Vec::new();
    for (i, a) in d.keys.iter().enumerate() {
        for (j, c) in d.keys.iter().enumerate() {
            if !d.coeffs[i][j].is_zero() {
                csv.push(vec![kp_str(&a.a), kp_str(&c.a), d.coeffs[i][j].to_string()]);
                writeln!(text, "B~{} : E~{} -> {}", a, c, d.coeffs[i][j].pretty()).unwrap();
            }
        }
        elems.push(json!({"a": a.a, "element": d.element(i).to_json()}));
    }
    Ok(Report {
        command: "dual-canonical",
        n,
        body: json!({
            "weight": [beta.d0, beta.d1],
            "order": d.order.iter().map(|k| k.a.clone()).collect::<Vec<_>>(),
            "basis": elems,
        }),
        csv,
        csv_header: vec!["a", "c", "coefficient"],
        text,
    })
}

fn seed_report(command: &'static str, s: &cluster::QuantumSeed) -> CliResult<Report> {
    let n = s.exchange.n;
    let mut csv = Vec::new();
    let mut text = String::new();
    writeln!(text, "mutations: {:?}", s.history).unwrap();
    for (i, x) in s.realization.iter().enumerate() {
        let beta = x.weight().expect("cluster variables are homogeneous");
        let label = aalg::dual_canonical(n, beta)?.find(x);
        let label_s = label.as_ref().map(|a| kp_str(&a.a)).unwrap_or_default();
        csv.push(vec![(i + 1).to_string(), beta.d0.to_string(), beta.d1.to_string(), label_s.clone()]);
        writeln!(
            text,
            "X_{} weight ({},{}) = B~({})",
            i + 1,
            beta.d0,
            beta.d1,
            label.map(|a| a.to_string()).unwrap_or_else(|| "?".to_string())
        )
        .unwrap();
    }
    Ok(Report {
        command,
        n,
        body: s.to_json(),
        csv,
        csv_header: vec!["k", "d0", "d1", "dual_canonical_label"],
        text,
    })
}

fn seed(c: &Common) -> CliResult<Report> {
    check_n(c)?;
    let s = cluster::initial_seed(c.n)?;
    seed_report("seed", &s)
}

fn mutate(args: &MutateArgs) -> CliResult<Report> {
    let c = &args.common;
    check_n(c)?;
    let m = 2 * c.n - 2;
    if let Some(k) = args.seq.iter().find(|&&k| k < 1 || k > m) {
        return Err(CliError::Invalid(format!("{} is not a mutable index (1..={})", k, m)));
    }
    let s = cluster::initial_seed(c.n)?;
    let s = cluster::mutate_sequence(&s, &args.seq)?;
    seed_report("mutate", &s)
}

fn ic_table(args: &WeightArgs) -> CliResult<Report> {
    let n = args.common.n;
    let beta = weight_of(args)?;
    let t = ictables::ic_table(n, beta)?;
    let mut csv = Vec::new();
    let mut text = String::new();
    for r in &t.rows {
        let lam = r.lambda.lam.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(text, "a = {}  lambda = ({})  delta = {}", r.a, lam, r.delta).unwrap();
        for (ap, p) in &r.coeffs {
            csv.push(vec![
                kp_str(&r.a.a),
                lam.clone(),
                r.delta.to_string(),
                kp_str(&ap.a),
                p.clone(),
                r.minor_hypothesis_used.to_string(),
            ]);
            writeln!(text, "    {} : {}", ap, p).unwrap();
        }
    }
    Ok(Report {
        command: "ic-table",
        n,
        body: t.to_json(),
        csv,
        csv_header: vec!["a", "lambda", "delta", "ap", "p", "minor_hypothesis_used"],
        text,
    })
}

fn verify(args: &VerifyArgs) -> CliResult<(Report, bool)> {
    let c = &args.common;
    check_n(c)?;
    if args.degree > c.max_degree {
        return Err(CliError::Resource(format!(
            "degree bound {} exceeds the ceiling {}",
            args.degree, c.max_degree
        )));
    }
    let n = c.n;
    engine(n)?;
    let weights = invariants::weights_up_to(n, args.degree);
    let per_weight: Vec<Vec<CheckResult>> =
        weights.par_iter().map(|&w| invariants::check_weight(n, w)).collect();
    let mut checks: Vec<CheckResult> = per_weight.into_iter().flatten().collect();
    checks.extend(invariants::check_seed(n));
    let all = checks.iter().all(|r| r.passed);
    let mut text = String::new();
    for r in &checks {
        writeln!(
            text,
            "{} {}{}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            if r.detail.is_empty() { String::new() } else { format!(" ({})", r.detail) }
        )
        .unwrap();
    }
    writeln!(text, "{}", if all { "ALL PASS" } else { "FAILURES" }).unwrap();
    let report = Report {
        command: "verify",
        n,
        body: json!({
            "degree": args.degree,
            "checks": checks.iter().map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail})).collect::<Vec<_>>(),
            "all_passed": all,
        }),
        csv: checks
            .iter()
            .map(|r| vec![r.name.clone(), r.passed.to_string(), r.detail.clone()])
            .collect(),
        csv_header: vec!["check", "passed", "detail"],
        text,
    };
    Ok((report, all))
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Gram(a) | Command::Canonical(a) | Command::DualCanonical(a) | Command::IcTable(a) => &a.common,
        Command::Seed(c) => c,
        Command::Mutate(a) => &a.common,
        Command::Verify(a) => &a.common,
    }
}

/// Runs a command; returns the rendered artifact. A failing `verify` renders its
/// report and then reports a certification error.
pub fn run(cli: &Cli) -> CliResult<(String, Option<CliError>)> {
    let c = common(&cli.command);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(c.jobs.max(1))
        .build()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    pool.install(|| {
        let (report, failure) = match &cli.command {
            Command::Gram(a) => (gram(a)?, None),
            Command::Canonical(a) => (canonical(a)?, None),
            Command::DualCanonical(a) => (dual_canonical(a)?, None),
            Command::Seed(c) => (seed(c)?, None),
            Command::Mutate(a) => (mutate(a)?, None),
            Command::IcTable(a) => (ic_table(a)?, None),
            Command::Verify(a) => {
                let (r, ok) = verify(a)?;
                (r, (!ok).then(|| CliError::Certification("invariant suite failed".to_string())))
            }
        };
        let out = render(&report, c.format)?;
        if let Some(path) = &c.output {
            std::fs::write(path, &out)?;
            Ok((String::new(), failure))
        } else {
            Ok((out, failure))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("qcell").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn beta_is_validated() {
        let Command::Gram(a) = parse(&["gram", "--n", "2", "--beta", "-1", "2"]).command else { panic!() };
        assert!(matches!(weight_of(&a), Err(CliError::Invalid(_))));
        let Command::Gram(a) = parse(&["gram", "--n", "2", "--beta", "9", "4", "--max-degree", "12"]).command else {
            panic!()
        };
        assert!(matches!(weight_of(&a), Err(CliError::Resource(_))));
    }

    #[test]
    fn seq_accepts_commas_and_spaces() {
        let Command::Mutate(a) = parse(&["mutate", "--n", "2", "--seq", "1,2", "1"]).command else { panic!() };
        assert_eq!(a.seq, vec![1, 2, 1]);
    }

    #[test]
    fn defaults() {
        let Command::Verify(a) = parse(&["verify", "--n", "1"]).command else { panic!() };
        assert_eq!((a.degree, a.common.jobs, a.common.max_degree), (10, 1, 12));
        assert!(matches!(a.common.format, Format::Json));
    }

    #[test]
    fn text_and_csv_headers() {
        let (out, failure) = run(&parse(&["seed", "--n", "1", "--format", "text"])).unwrap();
        assert!(failure.is_none());
        assert!(out.starts_with("qcell 0.1.0 [T'_{i,-1}] seed n=1\n"));
        let (out, _) = run(&parse(&["seed", "--n", "1", "--format", "csv"])).unwrap();
        assert!(out.starts_with("version,braid_convention,"));
    }
}
