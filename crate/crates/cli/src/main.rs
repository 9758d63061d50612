mod settings;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use fermifock::affinec::{suite_affine, FoldedAlgebra, Preset, RiMode};
use fermifock::audit::{
    calibrate, default_grid, parse_relation, relation_residual, root_commutator_template,
    run_suite, AuditConfig, AuditReport, Context, Relation, Status,
};
use fermifock::glinf::{suite_glinf, suite_glinf_literal, ConventionTable};
use fermifock::{enumerate, CornerKind, Diagram};

use settings::{parse_list, FileSettings};

/// Exact two-parameter Fock space computations: enumeration, operator
/// action, relation audits, convention calibration and character data.
#[derive(Parser)]
#[command(name = "fermifock", version)]
struct Cli {
    /// `key = value` file overriding the built-in defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for audits and calibration.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Omit the timing block from JSON output.
    #[arg(long, global = true)]
    no_meta: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Default)]
struct AlgebraArgs {
    /// Rank of the folded algebra.
    #[arg(long)]
    l: Option<usize>,
    /// Dressing tables: paper, dual or std.
    #[arg(long)]
    preset: Option<String>,
    /// half or full.
    #[arg(long)]
    ri_mode: Option<String>,
}

#[derive(Args, Default)]
struct BasisArgs {
    /// Comma-separated charges.
    #[arg(long, allow_hyphen_values = true)]
    charges: Option<String>,
    #[arg(long)]
    max_boxes: Option<u64>,
    /// Generator index window as `lo,hi`.
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Glinf,
    GlinfLiteral,
    Affine,
}

impl SuiteName {
    fn as_str(self) -> &'static str {
        match self {
            SuiteName::Glinf => "glinf",
            SuiteName::GlinfLiteral => "glinf-literal",
            SuiteName::Affine => "affine",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// List the diagrams of one charge up to a box bound.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<i64>,
        #[arg(long)]
        max_boxes: Option<u64>,
        #[arg(long)]
        count_only: bool,
        /// Also print box counts, corners and occupations.
        #[arg(long)]
        details: bool,
    },
    /// Apply a word (or linear combination of words) to a diagram.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Check a relation suite on a truncated basis and write a JSON report.
    Audit {
        #[arg(long, value_enum)]
        suite: Option<SuiteName>,
        #[command(flatten)]
        basis: BasisArgs,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Search the monomial grid for corner tables satisfying the cleared
    /// root-form commutator.
    Calibrate {
        #[command(flatten)]
        basis: BasisArgs,
        /// Largest number of assignments to try.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Color-vector multiplicities of the diagrams up to a box bound.
    Character {
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<i64>,
        #[arg(long)]
        max_boxes: Option<u64>,
    },
}

const DEFAULT_CHARGE: i64 = 0;
const DEFAULT_MAX_BOXES: u64 = 5;
const DEFAULT_L: usize = 2;
const DEFAULT_BUDGET: u128 = 1_000_000;

enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<fermifock::Error> for Failure {
    fn from(e: fermifock::Error) -> Self {
        Failure::Usage(e.into())
    }
}

type Outcome = std::result::Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {}", one_line(&e));
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {}", one_line(&e));
            ExitCode::from(3)
        }
    }
}

fn one_line(e: &anyhow::Error) -> String {
    format!("{e:#}").replace('\n', " ")
}

struct Env {
    file: FileSettings,
    workers: Option<usize>,
    no_meta: bool,
    output: Option<PathBuf>,
}

impl Env {
    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.output {
            Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()?;
                Ok(())
            }
        }
    }

    fn algebra(&self, a: &AlgebraArgs) -> anyhow::Result<(FoldedAlgebra, Preset)> {
        let l = a.l.or(self.file.get("l")?).unwrap_or(DEFAULT_L);
        let preset: Preset = match &a.preset {
            Some(p) => p.parse()?,
            None => self.file.get("preset")?.unwrap_or(Preset::Paper),
        };
        let ri: RiMode = match &a.ri_mode {
            Some(m) => m.parse()?,
            None => self.file.get("ri-mode")?.unwrap_or(RiMode::Full),
        };
        Ok((FoldedAlgebra::with_preset(l, preset, ri)?, preset))
    }

    fn audit_config(&self, b: &BasisArgs) -> anyhow::Result<AuditConfig> {
        let charges = match &b.charges {
            Some(c) => parse_list(c)?,
            None => match self.file.get_list("charges")? {
                Some(c) => c,
                None => vec![self.file.get("charge")?.unwrap_or(DEFAULT_CHARGE)],
            },
        };
        let max_boxes = b
            .max_boxes
            .or(self.file.get("max-boxes")?)
            .unwrap_or(DEFAULT_MAX_BOXES);
        let mut cfg = AuditConfig::new(charges, max_boxes)?;
        let window = match &b.window {
            Some(w) => Some(parse_list(w)?),
            None => self.file.get_list("window")?,
        };
        if let Some(w) = window {
            let [lo, hi] = w[..] else {
                return Err(anyhow!("window needs exactly two bounds, got {}", w.len()));
            };
            cfg = cfg.with_window(lo, hi)?;
        }
        if let Some(n) = self.workers.or(self.file.get("workers")?) {
            cfg = cfg.with_workers(n);
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn meta(&self, start: Instant) -> Option<Value> {
        (!self.no_meta).then(|| {
            json!({
                "version": env!("CARGO_PKG_VERSION"),
                "seconds": start.elapsed().as_secs_f64(),
            })
        })
    }
}

fn run(cli: Cli) -> Outcome {
    let file = match &cli.config {
        Some(p) => FileSettings::load(p)?,
        None => FileSettings::default(),
    };
    let no_meta = cli.no_meta || file.flag("no-meta")?;
    let env = Env {
        file,
        workers: cli.workers,
        no_meta,
        output: cli.output,
    };
    match cli.cmd {
        Cmd::Enumerate {
            charge,
            max_boxes,
            count_only,
            details,
        } => cmd_enumerate(&env, charge, max_boxes, count_only, details),
        Cmd::Act { expr, diagram, alg } => cmd_act(&env, &expr, &diagram, &alg),
        Cmd::Audit { suite, basis, alg } => cmd_audit(&env, suite, &basis, &alg),
        Cmd::Calibrate { basis, budget } => cmd_calibrate(&env, &basis, budget),
        Cmd::Character {
            l,
            charge,
            max_boxes,
        } => cmd_character(&env, l, charge, max_boxes),
    }
}

fn cmd_enumerate(
    env: &Env,
    charge: Option<i64>,
    max_boxes: Option<u64>,
    count_only: bool,
    details: bool,
) -> Outcome {
    let n = charge.or(env.file.get("charge")?).unwrap_or(DEFAULT_CHARGE);
    let b = max_boxes
        .or(env.file.get("max-boxes")?)
        .unwrap_or(DEFAULT_MAX_BOXES);
    let diagrams = enumerate(n, b);
    let mut text = String::new();
    if count_only {
        text.push_str(&format!("{}\n", diagrams.len()));
    } else {
        let (lo, hi) = AuditConfig::required_window(&[n], b);
        for y in &diagrams {
            if details {
                text.push_str(&describe(y, lo, hi));
            } else {
                text.push_str(&y.to_string());
            }
            text.push('\n');
        }
    }
    env.emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn describe(y: &Diagram, lo: i64, hi: i64) -> String {
    let list = |kind| {
        y.corners()
            .iter()
            .filter(|c| c.kind == kind)
            .map(|c| c.diagonal.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let occ: String = (lo..=hi)
        .map(|i| char::from(b'0' + y.occupation(i)))
        .collect();
    format!(
        "{y}\tboxes={}\tconcave=[{}]\tconvex=[{}]\tm[{lo}..{hi}]={occ}",
        y.box_count(),
        list(CornerKind::Concave),
        list(CornerKind::Convex),
    )
}

fn cmd_act(env: &Env, expr: &str, diagram: &str, alg: &AlgebraArgs) -> Outcome {
    let y: Diagram = diagram.parse().context("--diagram")?;
    let rel = parse_relation("act", expr).context("--expr")?;
    let (folded, _) = env.algebra(alg)?;
    let ctx = Context::folded(folded);
    let res = relation_residual(&rel, &y, &ctx)?;
    env.emit(&format!("{res}\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn suite_for(name: SuiteName, cfg: &AuditConfig) -> Vec<Relation> {
    let (lo, hi) = cfg.window;
    match name {
        SuiteName::Glinf => suite_glinf(lo, hi),
        SuiteName::GlinfLiteral => suite_glinf_literal(lo, hi),
        SuiteName::Affine => suite_affine(cfg.folded.as_ref().expect("set for affine"), cfg),
    }
}

fn cmd_audit(env: &Env, suite: Option<SuiteName>, basis: &BasisArgs, alg: &AlgebraArgs) -> Outcome {
    let name = match suite {
        Some(s) => s,
        None => match env.file.get::<String>("suite")?.as_deref() {
            Some("glinf") | None => SuiteName::Glinf,
            Some("glinf-literal") => SuiteName::GlinfLiteral,
            Some("affine") => SuiteName::Affine,
            Some(other) => return Err(anyhow!("unknown suite {other:?}").into()),
        },
    };
    let mut cfg = env.audit_config(basis)?;
    if matches!(name, SuiteName::Affine) {
        let (folded, preset) = env.algebra(alg)?;
        cfg = cfg.with_folded(folded, Some(preset));
    }
    let relations = suite_for(name, &cfg);
    let mut report = run_suite(name.as_str(), &relations, &cfg)?;
    self_check(&report, &relations, &cfg).map_err(Failure::Internal)?;
    if env.no_meta {
        report = report.without_meta();
    }
    env.emit(&report.to_json())?;
    Ok(if report.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Replays every reported counterexample; each must still leave a nonzero
/// residual that prints as reported.
fn self_check(
    report: &AuditReport,
    relations: &[Relation],
    cfg: &AuditConfig,
) -> anyhow::Result<()> {
    if report.results.len() != relations.len() {
        return Err(anyhow!(
            "report has {} results for {} relations",
            report.results.len(),
            relations.len()
        ));
    }
    let ctx = cfg.context();
    for (res, rel) in report.results.iter().zip(relations) {
        if res.status != Status::Fails {
            continue;
        }
        let cx = res
            .counterexample
            .as_ref()
            .ok_or_else(|| anyhow!("{} fails without a counterexample", res.relation))?;
        let y: Diagram = cx.diagram.parse()?;
        let replay = relation_residual(rel, &y, &ctx)?;
        if replay.is_zero() || replay.to_string() != cx.residual {
            return Err(anyhow!(
                "counterexample for {} {:?} does not replay",
                res.relation,
                res.indices
            ));
        }
    }
    Ok(())
}

fn table_json(t: &ConventionTable) -> Value {
    let mut m = Map::new();
    if let Some(name) = t.preset_name() {
        m.insert("name".into(), json!(name));
    }
    m.insert("cc".into(), json!(t.cc.to_string()));
    m.insert("cv".into(), json!(t.cv.to_string()));
    Value::Object(m)
}

fn cmd_calibrate(env: &Env, basis: &BasisArgs, budget: Option<u128>) -> Outcome {
    let start = Instant::now();
    let cfg = env.audit_config(basis)?;
    let budget = budget.or(env.file.get("budget")?).unwrap_or(DEFAULT_BUDGET);
    let grid = default_grid();
    let templates = root_commutator_template(cfg.window.0, cfg.window.1);
    let survivors = calibrate(&templates, 2, &grid, &cfg, budget)?;
    let mut doc = Map::new();
    doc.insert("template".into(), json!("root_commutator"));
    doc.insert(
        "config".into(),
        json!({
            "charges": cfg.charges,
            "max_boxes": cfg.max_boxes,
            "window": [cfg.window.0, cfg.window.1],
            "grid": grid.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "slots": 2,
        }),
    );
    doc.insert(
        "survivors".into(),
        Value::Array(
            survivors
                .iter()
                .map(|a| Value::Array(a.iter().map(table_json).collect()))
                .collect(),
        ),
    );
    if let Some(m) = env.meta(start) {
        doc.insert("meta".into(), m);
    }
    env.emit(
        &(serde_json::to_string_pretty(&Value::Object(doc)).map_err(anyhow::Error::from)? + "\n"),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_character(
    env: &Env,
    l: Option<usize>,
    charge: Option<i64>,
    max_boxes: Option<u64>,
) -> Outcome {
    let l = l.or(env.file.get("l")?).unwrap_or(DEFAULT_L);
    if l < 2 {
        return Err(anyhow!("rank must be at least 2, got {l}").into());
    }
    let n = charge.or(env.file.get("charge")?).unwrap_or(DEFAULT_CHARGE);
    let b = max_boxes
        .or(env.file.get("max-boxes")?)
        .unwrap_or(DEFAULT_MAX_BOXES);
    let mut counts: BTreeMap<(u64, Vec<u64>), u64> = BTreeMap::new();
    for y in enumerate(n, b) {
        let c = y.color_counts(l);
        if c.iter().sum::<u64>() != y.box_count() {
            return Err(Failure::Internal(anyhow!(
                "color counts of {y} do not add up"
            )));
        }
        *counts.entry((y.box_count(), c)).or_default() += 1;
    }
    let mut doc = Map::new();
    for ((_, c), k) in counts {
        let key = format!(
            "({})",
            c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        );
        doc.insert(key, json!(k));
    }
    env.emit(
        &(serde_json::to_string_pretty(&Value::Object(doc)).map_err(anyhow::Error::from)? + "\n"),
    )?;
    Ok(ExitCode::SUCCESS)
}
