//! Implementation of the `ybmaps` command-line tool: batch relation
//! verification, orbit experiments, invariant extraction, refactorization
//! checks and the entropy diagnostic, all seeded and machine-readable.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dynamics::{conservation_report, height_series, iterate, Orbit};
use crate::error::{Result, YbError};
use crate::lax::{family_by_name, refactor_check, spectral_invariants, LaxFamily};
use crate::maps::{by_name, YbMap, MAP_NAMES};
use crate::sample::Sampler;
use crate::state::{parse_state, SiteKind, TupleState};
use crate::yb;

#[derive(Parser, Debug)]
#[command(
    name = "ybmaps",
    version,
    about = "Exact verification and dynamics of Yang-Baxter maps",
    long_about = "All checks run over exact rational arithmetic: a pass is an identity, \
                  not a tolerance. State literals are parenthesized, semicolon-separated \
                  sites with comma-separated fields, e.g. \"(1,3; 2,1)\" for a dressing \
                  pair or \"([1,0],[1,1],2; [0,1],[1,1],1)\" for KdV sites."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify an operator relation on seeded random exact states
    Verify(VerifyArgs),
    /// Iterate a monodromy map and emit the orbit
    Orbit(OrbitArgs),
    /// Spectral invariants along an orbit, with a conservation verdict
    Invariants(InvariantsArgs),
    /// Check the matrix refactorization identity on random samples
    Refactor(RefactorArgs),
    /// Height-growth diagnostic along an orbit
    Entropy(EntropyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Relation {
    YangBaxter,
    Reversibility,
    Commutativity,
    ProductIdentity,
    Braid,
    Involution,
}

impl Relation {
    fn default_n(&self) -> usize {
        match self {
            Relation::YangBaxter => 3,
            Relation::Reversibility => 2,
            _ => 3,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Relation::YangBaxter => "yang-baxter",
            Relation::Reversibility => "reversibility",
            Relation::Commutativity => "commutativity",
            Relation::ProductIdentity => "product-identity",
            Relation::Braid => "braid",
            Relation::Involution => "involution",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result document here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Suppress the timestamp for byte-identical reruns
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Map name: adler, kdv, lyubashenko, identity, permutation, sumleft
    #[arg(long)]
    pub map: String,
    #[arg(long, value_enum)]
    pub relation: Relation,
    /// Tuple length (defaults to the relation's natural arity)
    #[arg(long)]
    pub n: Option<usize>,
    /// Vector dimension for KdV sites
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[arg(long)]
    pub map: String,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Generator index i of the monodromy map T_i
    #[arg(long, default_value_t = 1)]
    pub generator: usize,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Explicit start state; overrides seeded sampling
    #[arg(long)]
    pub state: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub map: String,
    /// Matrix family: dressing or kdv
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 1)]
    pub generator: usize,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub state: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct RefactorArgs {
    #[arg(long)]
    pub map: String,
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct EntropyArgs {
    #[arg(long, default_value = "adler")]
    pub map: String,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, default_value_t = 1)]
    pub generator: usize,
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub state: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
    Info,
}

impl Outcome {
    fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skip => "skip",
            Outcome::Info => "info",
        }
    }

    fn parse(s: &str) -> Result<Self> {
        match s {
            "pass" => Ok(Outcome::Pass),
            "fail" => Ok(Outcome::Fail),
            "skip" => Ok(Outcome::Skip),
            "info" => Ok(Outcome::Info),
            other => Err(YbError::Parse(format!("bad outcome {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub index: usize,
    pub label: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// The machine-readable result of one CLI run. Deterministic for a fixed
/// config apart from the suppressible timestamp.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<String>,
    pub config: BTreeMap<String, String>,
    pub counts: Counts,
    pub records: Vec<Record>,
}

impl ResultDocument {
    fn new(config: BTreeMap<String, String>, with_timestamp: bool) -> Self {
        ResultDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: with_timestamp.then(|| chrono::Utc::now().to_rfc3339()),
            config,
            counts: Counts::default(),
            records: Vec::new(),
        }
    }

    fn push(&mut self, label: &str, outcome: Outcome, detail: String) {
        match outcome {
            Outcome::Pass | Outcome::Info => self.counts.pass += 1,
            Outcome::Fail => self.counts.fail += 1,
            Outcome::Skip => self.counts.skipped += 1,
        }
        self.records.push(Record {
            index: self.records.len(),
            label: label.to_string(),
            outcome,
            detail,
        });
    }

    pub fn exit_code(&self) -> i32 {
        if self.counts.fail > 0 {
            1
        } else {
            0
        }
    }
}

pub fn to_json(doc: &ResultDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

/// CSV rendering: metadata as `# key=value` comment lines, then the record
/// table. Carries the same data as the JSON form.
pub fn to_csv(doc: &ResultDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# tool_version={}", doc.tool_version);
    if let Some(ts) = &doc.timestamp {
        let _ = writeln!(out, "# timestamp={ts}");
    }
    for (k, v) in &doc.config {
        let _ = writeln!(out, "# config.{k}={v}");
    }
    let _ = writeln!(
        out,
        "# counts.pass={} counts.fail={} counts.skipped={}",
        doc.counts.pass, doc.counts.fail, doc.counts.skipped
    );
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "label", "outcome", "detail"])
        .expect("csv header");
    for r in &doc.records {
        w.write_record([
            r.index.to_string(),
            r.label.clone(),
            r.outcome.as_str().to_string(),
            r.detail.clone(),
        ])
        .expect("csv record");
    }
    out.push_str(&String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8"));
    out
}

/// Parses the CSV rendering back; inverse of [`to_csv`].
pub fn from_csv(text: &str) -> Result<ResultDocument> {
    let mut doc = ResultDocument {
        tool_version: String::new(),
        timestamp: None,
        config: BTreeMap::new(),
        counts: Counts::default(),
        records: Vec::new(),
    };
    let mut body = String::new();
    for line in text.lines() {
        if let Some(meta) = line.strip_prefix("# ") {
            if let Some(v) = meta.strip_prefix("tool_version=") {
                doc.tool_version = v.to_string();
            } else if let Some(v) = meta.strip_prefix("timestamp=") {
                doc.timestamp = Some(v.to_string());
            } else if let Some(kv) = meta.strip_prefix("config.") {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| YbError::Parse(format!("bad config line {line:?}")))?;
                doc.config.insert(k.to_string(), v.to_string());
            } else if meta.starts_with("counts.") {
                for part in meta.split_whitespace() {
                    let (k, v) = part
                        .split_once('=')
                        .ok_or_else(|| YbError::Parse(format!("bad counts line {line:?}")))?;
                    let v: usize = v
                        .parse()
                        .map_err(|e| YbError::Parse(format!("bad count {v:?}: {e}")))?;
                    match k {
                        "counts.pass" => doc.counts.pass = v,
                        "counts.fail" => doc.counts.fail = v,
                        "counts.skipped" => doc.counts.skipped = v,
                        _ => return Err(YbError::Parse(format!("unknown count {k:?}"))),
                    }
                }
            }
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    for row in reader.records() {
        let row = row.map_err(|e| YbError::Parse(format!("csv: {e}")))?;
        doc.records.push(Record {
            index: row[0]
                .parse()
                .map_err(|e| YbError::Parse(format!("bad index: {e}")))?,
            label: row[1].to_string(),
            outcome: Outcome::parse(&row[2])?,
            detail: row[3].to_string(),
        });
    }
    Ok(doc)
}

pub fn render(doc: &ResultDocument, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => to_csv(doc),
    }
}

fn resolve_map(name: &str) -> Result<Box<dyn YbMap>> {
    by_name(name).ok_or_else(|| {
        YbError::Config(format!(
            "unknown map {name:?}; available: {}",
            MAP_NAMES.join(", ")
        ))
    })
}

fn resolve_family(name: &str) -> Result<LaxFamily> {
    family_by_name(name)
        .ok_or_else(|| YbError::Config(format!("unknown family {name:?}; available: dressing, kdv")))
}

fn sample_kind(map: &dyn YbMap) -> SiteKind {
    map.kind().unwrap_or(SiteKind::Scalar)
}

fn start_state(
    state: &Option<String>,
    map: &dyn YbMap,
    n: usize,
    d: usize,
    seed: u64,
) -> Result<TupleState> {
    match state {
        Some(literal) => parse_state(literal),
        None => Sampler::new(seed).tuple(sample_kind(map), n, d),
    }
}

pub fn run(cli: &Cli) -> Result<ResultDocument> {
    match &cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Orbit(args) => run_orbit(args),
        Command::Invariants(args) => run_invariants(args),
        Command::Refactor(args) => run_refactor(args),
        Command::Entropy(args) => run_entropy(args),
    }
}

pub fn output_of(cli: &Cli) -> &OutputArgs {
    match &cli.command {
        Command::Verify(a) => &a.out,
        Command::Orbit(a) => &a.out,
        Command::Invariants(a) => &a.out,
        Command::Refactor(a) => &a.out,
        Command::Entropy(a) => &a.out,
    }
}

fn config_echo(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn run_relation_once(
    map: &dyn YbMap,
    relation: Relation,
    t: &TupleState,
) -> Result<bool> {
    let n = t.n();
    match relation {
        Relation::YangBaxter => yb::check_yb(map, t),
        Relation::Reversibility => yb::check_reversibility(map, t),
        Relation::Commutativity => {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    if !yb::check_commutativity(map, t, i, j)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Relation::ProductIdentity => yb::check_product_identity(map, t),
        Relation::Braid => {
            for i in 1..=n {
                if !yb::check_braid(map, t, i)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Relation::Involution => {
            for i in 1..=n {
                if !yb::check_involution(map, t, i)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<ResultDocument> {
    let map = resolve_map(&args.map)?;
    let n = args.n.unwrap_or_else(|| args.relation.default_n());
    if args.relation == Relation::Reversibility && n != 2 {
        return Err(YbError::Config("reversibility needs n = 2".into()));
    }
    if args.relation == Relation::YangBaxter && n != 3 {
        return Err(YbError::Config("the Yang-Baxter relation needs n = 3".into()));
    }
    let config = config_echo(&[
        ("subcommand", "verify".into()),
        ("map", args.map.clone()),
        ("relation", args.relation.label().into()),
        ("n", n.to_string()),
        ("d", args.d.to_string()),
        ("samples", args.samples.to_string()),
        ("seed", args.seed.to_string()),
    ]);
    let mut doc = ResultDocument::new(config, !args.out.no_timestamp);
    let mut sampler = Sampler::new(args.seed);
    let kind = sample_kind(map.as_ref());
    for _ in 0..args.samples {
        let t = sampler.tuple(kind, n, args.d)?;
        match run_relation_once(map.as_ref(), args.relation, &t) {
            Ok(true) => doc.push(args.relation.label(), Outcome::Pass, t.to_string()),
            Ok(false) => doc.push(args.relation.label(), Outcome::Fail, t.to_string()),
            Err(YbError::Singular(msg)) => {
                doc.push(args.relation.label(), Outcome::Skip, format!("{t}: {msg}"))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(doc)
}

fn run_orbit(args: &OrbitArgs) -> Result<ResultDocument> {
    let map = resolve_map(&args.map)?;
    let start = start_state(&args.state, map.as_ref(), args.n, args.d, args.seed)?;
    let config = config_echo(&[
        ("subcommand", "orbit".into()),
        ("map", args.map.clone()),
        ("n", start.n().to_string()),
        ("generator", args.generator.to_string()),
        ("steps", args.steps.to_string()),
        ("seed", args.seed.to_string()),
        ("state", start.to_string()),
    ]);
    let mut doc = ResultDocument::new(config, !args.out.no_timestamp);
    let orbit = iterate(map.as_ref(), &start, args.generator, args.steps);
    push_orbit(&mut doc, &orbit);
    Ok(doc)
}

fn push_orbit(doc: &mut ResultDocument, orbit: &Orbit) {
    for s in &orbit.states {
        doc.push("state", Outcome::Info, s.to_string());
    }
    if let Some((step, reason)) = &orbit.truncated_at {
        doc.push("truncated", Outcome::Skip, format!("step {step}: {reason}"));
    }
}

fn run_invariants(args: &InvariantsArgs) -> Result<ResultDocument> {
    let map = resolve_map(&args.map)?;
    let family = resolve_family(&args.family)?;
    let start = start_state(&args.state, map.as_ref(), args.n, args.d, args.seed)?;
    let config = config_echo(&[
        ("subcommand", "invariants".into()),
        ("map", args.map.clone()),
        ("family", family.name().into()),
        ("n", start.n().to_string()),
        ("generator", args.generator.to_string()),
        ("steps", args.steps.to_string()),
        ("seed", args.seed.to_string()),
        ("state", start.to_string()),
    ]);
    let mut doc = ResultDocument::new(config, !args.out.no_timestamp);
    let base = spectral_invariants(family, &start)?;
    doc.push("trace", Outcome::Info, base.char_poly.trace().to_string());
    doc.push(
        "det",
        Outcome::Info,
        base.char_poly.determinant().to_string(),
    );
    doc.push(
        "clearing_factor",
        Outcome::Info,
        base.clearing_factor.to_string(),
    );
    let orbit = iterate(map.as_ref(), &start, args.generator, args.steps);
    let report = conservation_report(family, &orbit)?;
    for (k, inv) in report.per_step.iter().enumerate() {
        doc.push("charpoly", Outcome::Info, format!("step {k}: {}", inv.char_poly));
    }
    for (k, msg) in &report.errors {
        doc.push("charpoly", Outcome::Skip, format!("step {k}: {msg}"));
    }
    if report.conserved {
        doc.push("verdict", Outcome::Pass, "conserved".into());
    } else {
        let at = report
            .first_divergence
            .map(|k| format!(" (first divergence at step {k})"))
            .unwrap_or_default();
        doc.push("verdict", Outcome::Fail, format!("not conserved{at}"));
    }
    if let Some((step, reason)) = &orbit.truncated_at {
        doc.push("truncated", Outcome::Skip, format!("step {step}: {reason}"));
    }
    Ok(doc)
}

fn run_refactor(args: &RefactorArgs) -> Result<ResultDocument> {
    let map = resolve_map(&args.map)?;
    let family = resolve_family(&args.family)?;
    if map
        .kind()
        .is_some_and(|k| k != family.kind())
    {
        return Err(YbError::Config(format!(
            "map {} acts on {} sites but family {} builds from {} sites",
            map.name(),
            map.kind().map(|k| k.to_string()).unwrap_or_default(),
            family.name(),
            family.kind()
        )));
    }
    let config = config_echo(&[
        ("subcommand", "refactor".into()),
        ("map", args.map.clone()),
        ("family", family.name().into()),
        ("d", args.d.to_string()),
        ("samples", args.samples.to_string()),
        ("seed", args.seed.to_string()),
    ]);
    let mut doc = ResultDocument::new(config, !args.out.no_timestamp);
    let mut sampler = Sampler::new(args.seed);
    for _ in 0..args.samples {
        let t = sampler.tuple(family.kind(), 2, args.d)?;
        let x = t.site(1)?;
        let y = t.site(2)?;
        match refactor_check(family, map.as_ref(), x, y) {
            Ok(true) => doc.push("refactor", Outcome::Pass, t.to_string()),
            Ok(false) => doc.push("refactor", Outcome::Fail, t.to_string()),
            Err(YbError::Singular(msg)) => {
                doc.push("refactor", Outcome::Skip, format!("{t}: {msg}"))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(doc)
}

fn run_entropy(args: &EntropyArgs) -> Result<ResultDocument> {
    let map = resolve_map(&args.map)?;
    let start = start_state(&args.state, map.as_ref(), args.n, args.d, args.seed)?;
    let config = config_echo(&[
        ("subcommand", "entropy".into()),
        ("map", args.map.clone()),
        ("n", start.n().to_string()),
        ("generator", args.generator.to_string()),
        ("steps", args.steps.to_string()),
        ("seed", args.seed.to_string()),
        ("state", start.to_string()),
    ]);
    let mut doc = ResultDocument::new(config, !args.out.no_timestamp);
    let orbit = iterate(map.as_ref(), &start, args.generator, args.steps);
    let series = height_series(&orbit);
    for (k, h) in series.heights.iter().enumerate() {
        doc.push("height", Outcome::Info, format!("step {k}: {h}"));
    }
    doc.push(
        "fit_window",
        Outcome::Info,
        format!("[{}, {})", series.window.0, series.window.1),
    );
    doc.push(
        "log_slope",
        Outcome::Info,
        series
            .log_slope
            .map(|s| format!("{s:.6}"))
            .unwrap_or_else(|| "n/a".into()),
    );
    doc.push(
        "loglog_slope",
        Outcome::Info,
        series
            .loglog_slope
            .map(|s| format!("{s:.6}"))
            .unwrap_or_else(|| "n/a".into()),
    );
    if let Some((step, reason)) = &orbit.truncated_at {
        doc.push("truncated", Outcome::Skip, format!("step {step}: {reason}"));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc_for(argv: &[&str]) -> ResultDocument {
        let cli = Cli::try_parse_from(argv).unwrap();
        run(&cli).unwrap()
    }

    #[test]
    fn verify_identity_reversibility() {
        let doc = doc_for(&[
            "ybmaps",
            "verify",
            "--map",
            "identity",
            "--relation",
            "reversibility",
            "--samples",
            "5",
            "--no-timestamp",
        ]);
        assert_eq!(doc.counts.pass, 5);
        assert_eq!(doc.exit_code(), 0);
    }

    #[test]
    fn verify_sumleft_fails() {
        let doc = doc_for(&[
            "ybmaps",
            "verify",
            "--map",
            "sumleft",
            "--relation",
            "yang-baxter",
            "--samples",
            "10",
            "--seed",
            "7",
            "--no-timestamp",
        ]);
        assert!(doc.counts.fail > 0);
        assert_eq!(doc.exit_code(), 1);
    }

    #[test]
    fn unknown_map_is_config_error() {
        let cli = Cli::try_parse_from([
            "ybmaps",
            "verify",
            "--map",
            "nope",
            "--relation",
            "yang-baxter",
        ])
        .unwrap();
        assert!(matches!(run(&cli), Err(YbError::Config(_))));
    }

    #[test]
    fn orbit_row_count() {
        let doc = doc_for(&[
            "ybmaps",
            "orbit",
            "--map",
            "adler",
            "--n",
            "3",
            "--generator",
            "1",
            "--steps",
            "10",
            "--seed",
            "1",
            "--no-timestamp",
        ]);
        let states = doc
            .records
            .iter()
            .filter(|r| r.label == "state")
            .count();
        assert_eq!(states, 11);
    }

    #[test]
    fn invariants_fixture() {
        let doc = doc_for(&[
            "ybmaps",
            "invariants",
            "--map",
            "adler",
            "--family",
            "dressing",
            "--n",
            "2",
            "--state",
            "(1,3; 2,1)",
            "--no-timestamp",
        ]);
        let get = |label: &str| {
            doc.records
                .iter()
                .find(|r| r.label == label)
                .map(|r| r.detail.clone())
                .unwrap()
        };
        assert_eq!(get("trace"), "13 - 2*z");
        assert_eq!(get("det"), "3 - 4*z + z^2");
        assert!(doc
            .records
            .iter()
            .any(|r| r.label == "verdict" && r.outcome == Outcome::Pass));
    }

    #[test]
    fn csv_json_equivalence() {
        let doc = doc_for(&[
            "ybmaps",
            "verify",
            "--map",
            "adler",
            "--relation",
            "yang-baxter",
            "--samples",
            "3",
            "--no-timestamp",
        ]);
        let parsed = from_csv(&to_csv(&doc)).unwrap();
        assert_eq!(parsed, doc);
        let via_json: ResultDocument = serde_json::from_str(&to_json(&doc)).unwrap();
        assert_eq!(via_json, doc);
    }

    #[test]
    fn counts_are_consistent() {
        let doc = doc_for(&[
            "ybmaps",
            "verify",
            "--map",
            "adler",
            "--relation",
            "commutativity",
            "--n",
            "3",
            "--samples",
            "20",
            "--seed",
            "3",
            "--no-timestamp",
        ]);
        assert_eq!(doc.counts.pass + doc.counts.fail + doc.counts.skipped, 20);
    }
}
