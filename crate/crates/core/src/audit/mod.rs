//! Relations as formal sums of generator words, their evaluation on
//! truncated Fock bases, and machine-readable reports.

mod calibrate;
mod dsl;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affinec::{FoldedAlgebra, GenKind, Preset};
use crate::coeffring::{Monomial, QuarterElem, QuarterShift, RingElem};
use crate::diagram::{enumerate, Diagram};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::glinf::{corner_eigen, eps_eigen, ConventionTable, EpsKind};

pub use calibrate::{calibrate, default_grid, root_commutator_template, Assignment};
pub use dsl::{parse_relation, parse_symbol};

/// A corner table given directly or as a calibration slot `$n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableRef {
    Fixed(ConventionTable),
    Slot(usize),
}

impl fmt::Display for TableRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableRef::Fixed(t) => write!(f, "{t}"),
            TableRef::Slot(n) => write!(f, "${n}"),
        }
    }
}

impl From<ConventionTable> for TableRef {
    fn from(t: ConventionTable) -> Self {
        TableRef::Fixed(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(i64),
    F(i64),
    A(i64),
    B(i64),
    K(i64, TableRef),
    EFold(usize),
    FFold(usize),
    W(usize),
    Wp(usize),
    D,
    Dp,
    Gamma,
    GammaP,
    /// `Π_{k' > k, π(k') = π(k)} K[k'; T]`
    Tail(i64, TableRef),
}

impl Gen {
    pub fn is_diagonal(&self) -> bool {
        !matches!(self, Gen::E(_) | Gen::F(_) | Gen::EFold(_) | Gen::FFold(_))
    }

    fn is_folded(&self) -> bool {
        matches!(
            self,
            Gen::EFold(_)
                | Gen::FFold(_)
                | Gen::W(_)
                | Gen::Wp(_)
                | Gen::D
                | Gen::Dp
                | Gen::Gamma
                | Gen::GammaP
                | Gen::Tail(..)
        )
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e[{i}]"),
            Gen::F(i) => write!(f, "f[{i}]"),
            Gen::A(i) => write!(f, "a[{i}]"),
            Gen::B(i) => write!(f, "b[{i}]"),
            Gen::K(i, t) => write!(f, "K[{i};{t}]"),
            Gen::EFold(i) => write!(f, "Efold[{i}]"),
            Gen::FFold(i) => write!(f, "Ffold[{i}]"),
            Gen::W(i) => write!(f, "W[{i}]"),
            Gen::Wp(i) => write!(f, "Wp[{i}]"),
            Gen::D => write!(f, "D"),
            Gen::Dp => write!(f, "Dp"),
            Gen::Gamma => write!(f, "gamma"),
            Gen::GammaP => write!(f, "gammap"),
            Gen::Tail(k, t) => write!(f, "P[{k};{t}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub gen: Gen,
    pub inverse: bool,
}

impl Symbol {
    pub fn new(gen: Gen) -> Self {
        Symbol {
            gen,
            inverse: false,
        }
    }

    pub fn e(i: i64) -> Self {
        Symbol::new(Gen::E(i))
    }

    pub fn f(i: i64) -> Self {
        Symbol::new(Gen::F(i))
    }

    pub fn a(i: i64) -> Self {
        Symbol::new(Gen::A(i))
    }

    pub fn b(i: i64) -> Self {
        Symbol::new(Gen::B(i))
    }

    pub fn k(i: i64, t: impl Into<TableRef>) -> Self {
        Symbol::new(Gen::K(i, t.into()))
    }

    pub fn efold(i: usize) -> Self {
        Symbol::new(Gen::EFold(i))
    }

    pub fn ffold(i: usize) -> Self {
        Symbol::new(Gen::FFold(i))
    }

    pub fn w(i: usize) -> Self {
        Symbol::new(Gen::W(i))
    }

    pub fn wp(i: usize) -> Self {
        Symbol::new(Gen::Wp(i))
    }

    pub fn d() -> Self {
        Symbol::new(Gen::D)
    }

    pub fn dp() -> Self {
        Symbol::new(Gen::Dp)
    }

    pub fn gamma() -> Self {
        Symbol::new(Gen::Gamma)
    }

    pub fn gammap() -> Self {
        Symbol::new(Gen::GammaP)
    }

    pub fn tail(k: i64, t: impl Into<TableRef>) -> Self {
        Symbol::new(Gen::Tail(k, t.into()))
    }

    /// Formal inverse. Only diagonal generators resolve once inverted.
    pub fn inv(self) -> Self {
        Symbol {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "inv({})", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A product of generators, written left to right and applied right to left.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn of(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Word(symbols.into_iter().collect())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (idx, s) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `coeff * shift * word`, where `shift` is a product of `r^(1/4)` and
/// `s^(1/4)` that the base ring cannot hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: RingElem,
    pub shift: QuarterShift,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub indices: Vec<i64>,
    /// Restricts the check to one charge.
    pub charge: Option<i64>,
    pub terms: Vec<Term>,
}

impl Relation {
    pub fn new(name: impl Into<String>, indices: Vec<i64>) -> Self {
        Relation {
            name: name.into(),
            indices,
            charge: None,
            terms: Vec::new(),
        }
    }

    pub fn with(mut self, coeff: impl Into<QuarterElem>, word: Word) -> Self {
        for (shift, x) in coeff.into().parts() {
            self.terms.push(Term {
                coeff: x.clone(),
                shift,
                word: word.clone(),
            });
        }
        self
    }

    pub fn only_charge(mut self, n: i64) -> Self {
        self.charge = Some(n);
        self
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.terms.iter().flat_map(|t| t.word.symbols())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", t.coeff)?;
            if !t.shift.is_none() {
                write!(f, " * {}", t.shift)?;
            }
            write!(f, " * {}", t.word)?;
        }
        Ok(())
    }
}

/// What symbols resolve against: the folded algebra for folded generators
/// and the tables bound to calibration slots.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    pub folded: Option<FoldedAlgebra>,
    pub slots: Vec<ConventionTable>,
}

impl Context {
    pub fn glinf() -> Self {
        Context::default()
    }

    pub fn folded(alg: FoldedAlgebra) -> Self {
        Context {
            folded: Some(alg),
            slots: Vec::new(),
        }
    }

    pub fn check_symbol(&self, s: &Symbol) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::Unresolvable {
                symbol: s.to_string(),
                reason,
            })
        };
        if s.inverse && !s.gen.is_diagonal() {
            return fail("only diagonal generators are invertible".into());
        }
        if let Gen::K(_, TableRef::Slot(n)) | Gen::Tail(_, TableRef::Slot(n)) = s.gen {
            if n >= self.slots.len() {
                return fail(format!("slot ${n} is not bound"));
            }
        }
        if s.gen.is_folded() {
            let Some(alg) = &self.folded else {
                return fail("folded generators need a rank".into());
            };
            if let Gen::EFold(i) | Gen::FFold(i) | Gen::W(i) | Gen::Wp(i) = s.gen {
                if i > alg.l() {
                    return fail(format!("node {i} outside 0..={}", alg.l()));
                }
            }
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.symbols().iter().try_for_each(|s| self.check_symbol(s))
    }

    pub fn check_relation_symbols(&self, rel: &Relation) -> Result<()> {
        rel.symbols().try_for_each(|s| self.check_symbol(s))
    }

    fn table(&self, t: &TableRef) -> ConventionTable {
        match t {
            TableRef::Fixed(t) => *t,
            TableRef::Slot(n) => self.slots[*n],
        }
    }

    fn alg(&self) -> &FoldedAlgebra {
        self.folded.as_ref().expect("checked before evaluation")
    }

    fn eigen(&self, g: &Gen, y: &Diagram) -> Monomial {
        match g {
            Gen::A(i) => eps_eigen(*i, EpsKind::A, y),
            Gen::B(i) => eps_eigen(*i, EpsKind::B, y),
            Gen::K(i, t) => corner_eigen(*i, &self.table(t), y),
            Gen::W(i) => self.alg().omega_eigen(*i, false, y),
            Gen::Wp(i) => self.alg().omega_eigen(*i, true, y),
            Gen::D => self.alg().d_eigen(false, y),
            Gen::Dp => self.alg().d_eigen(true, y),
            Gen::Gamma => self.alg().gamma_eigen(false, y),
            Gen::GammaP => self.alg().gamma_eigen(true, y),
            Gen::Tail(k, t) => self.alg().tail_eigen(*k, &self.table(t), y),
            Gen::E(_) | Gen::F(_) | Gen::EFold(_) | Gen::FFold(_) => {
                unreachable!("not diagonal")
            }
        }
    }

    fn kernel(&self, g: &Gen, y: &Diagram) -> FockVector {
        match g {
            Gen::E(i) => y.remove_box(*i).map(FockVector::basis).unwrap_or_default(),
            Gen::F(i) => y.add_box(*i).map(FockVector::basis).unwrap_or_default(),
            Gen::EFold(i) => self.alg().apply_gen(GenKind::E, *i, y),
            Gen::FFold(i) => self.alg().apply_gen(GenKind::F, *i, y),
            _ => unreachable!("diagonal"),
        }
    }

    fn apply_symbol(&self, s: &Symbol, v: &FockVector) -> FockVector {
        if s.gen.is_diagonal() {
            let mut out = FockVector::zero();
            for (y, c) in v.terms() {
                let m = self.eigen(&s.gen, y);
                let m = if s.inverse { m.inv() } else { m };
                out.push(y.clone(), c.mul_monomial(m));
            }
            out
        } else {
            let mut out = FockVector::zero();
            for (y, c) in v.terms() {
                out.push_scaled(&self.kernel(&s.gen, y), c);
            }
            out
        }
    }

    /// Assumes the word resolves.
    fn eval_unchecked(&self, w: &Word, y: &Diagram) -> FockVector {
        let mut v = FockVector::basis(y.clone());
        for s in w.symbols().iter().rev() {
            if v.is_zero() {
                break;
            }
            v = self.apply_symbol(s, &v);
        }
        v
    }

    fn residual_unchecked(&self, rel: &Relation, y: &Diagram) -> Residual {
        let mut parts: BTreeMap<QuarterShift, FockVector> = BTreeMap::new();
        for t in &rel.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let v = self.eval_unchecked(&t.word, y);
            parts.entry(t.shift).or_default().push_scaled(&v, &t.coeff);
        }
        parts.retain(|_, v| !v.is_zero());
        Residual { parts }
    }

    fn check_unchecked(&self, rel: &Relation, basis: &[Diagram]) -> CheckOutcome {
        for y in basis {
            if rel.charge.is_some_and(|n| n != y.charge()) {
                continue;
            }
            let residual = self.residual_unchecked(rel, y);
            if !residual.is_zero() {
                return CheckOutcome::Counterexample {
                    diagram: y.clone(),
                    residual,
                };
            }
        }
        CheckOutcome::Holds
    }
}

/// Right-to-left application of `w` to `[y]`.
pub fn evaluate_word(w: &Word, y: &Diagram, ctx: &Context) -> Result<FockVector> {
    ctx.check_word(w)?;
    Ok(ctx.eval_unchecked(w, y))
}

/// `Σ coeff * word [y]`, split by quarter shift.
pub fn relation_residual(rel: &Relation, y: &Diagram, ctx: &Context) -> Result<Residual> {
    ctx.check_relation_symbols(rel)?;
    Ok(ctx.residual_unchecked(rel, y))
}

/// A vector over `Q[r^(±1/4), s^(±1/4)]`, kept as one Fock vector per
/// quarter shift. Zero iff every part is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Residual {
    parts: BTreeMap<QuarterShift, FockVector>,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, shift: QuarterShift) -> FockVector {
        self.parts.get(&shift).cloned().unwrap_or_default()
    }

    pub fn parts(&self) -> impl Iterator<Item = (QuarterShift, &FockVector)> {
        self.parts.iter().map(|(k, v)| (*k, v))
    }

    /// The residual as a plain Fock vector, if no quarter powers occur.
    pub fn as_vector(&self) -> Option<FockVector> {
        match self.parts.len() {
            0 => Some(FockVector::zero()),
            1 => self.parts.get(&QuarterShift::NONE).cloned(),
            _ => None,
        }
    }
}

impl From<FockVector> for Residual {
    fn from(v: FockVector) -> Self {
        let mut parts = BTreeMap::new();
        if !v.is_zero() {
            parts.insert(QuarterShift::NONE, v);
        }
        Residual { parts }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (shift, v)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if shift.is_none() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{shift} * [{v}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    /// First basis diagram, in basis order, with a nonzero residual.
    Counterexample {
        diagram: Diagram,
        residual: Residual,
    },
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }
}

/// Charges, box bound and generator-index window of an audit, plus the
/// folded algebra when folded generators are involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub charges: Vec<i64>,
    pub max_boxes: u64,
    pub window: (i64, i64),
    pub folded: Option<FoldedAlgebra>,
    /// Echoed in reports; `None` means a custom dressing.
    pub preset: Option<Preset>,
    /// `None` lets rayon decide.
    pub workers: Option<usize>,
}

impl AuditConfig {
    /// Uses the smallest admissible window.
    pub fn new(charges: Vec<i64>, max_boxes: u64) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::Config("at least one charge is required".into()));
        }
        let window = AuditConfig::required_window(&charges, max_boxes);
        Ok(AuditConfig {
            charges,
            max_boxes,
            window,
            folded: None,
            preset: None,
            workers: None,
        })
    }

    /// `[min charge - B - 2, max charge + B + 2]`.
    pub fn required_window(charges: &[i64], max_boxes: u64) -> (i64, i64) {
        let b = max_boxes as i64;
        let lo = charges.iter().min().copied().unwrap_or(0);
        let hi = charges.iter().max().copied().unwrap_or(0);
        (lo - b - 2, hi + b + 2)
    }

    pub fn with_window(mut self, lo: i64, hi: i64) -> Result<Self> {
        self.window = (lo, hi);
        self.validate()?;
        Ok(self)
    }

    pub fn with_folded(mut self, alg: FoldedAlgebra, preset: Option<Preset>) -> Self {
        self.folded = Some(alg);
        self.preset = preset;
        self
    }

    pub fn with_workers(mut self, n: usize) -> Self {
        self.workers = Some(n);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.charges.is_empty() {
            return Err(Error::Config("at least one charge is required".into()));
        }
        let (lo, hi) = AuditConfig::required_window(&self.charges, self.max_boxes);
        if self.window.0 > lo || self.window.1 < hi {
            return Err(Error::Config(format!(
                "window [{}, {}] does not contain [{lo}, {hi}]",
                self.window.0, self.window.1
            )));
        }
        if self.workers == Some(0) {
            return Err(Error::Config("worker count must be positive".into()));
        }
        Ok(())
    }

    /// All diagrams of the configured charges, in (charge, box count,
    /// columns) order.
    pub fn basis(&self) -> Vec<Diagram> {
        let mut charges = self.charges.clone();
        charges.sort_unstable();
        charges.dedup();
        charges
            .into_iter()
            .flat_map(|n| enumerate(n, self.max_boxes))
            .collect()
    }

    pub fn context(&self) -> Context {
        Context {
            folded: self.folded,
            slots: Vec::new(),
        }
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool> {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = self.workers {
            b = b.num_threads(n);
        }
        b.build().map_err(|e| Error::Config(e.to_string()))
    }
}

pub fn check_relation(rel: &Relation, cfg: &AuditConfig) -> Result<CheckOutcome> {
    cfg.validate()?;
    let ctx = cfg.context();
    ctx.check_relation_symbols(rel)?;
    Ok(ctx.check_unchecked(rel, &cfg.basis()))
}

/// Checks `rel` against `basis` under an explicit context.
pub fn check_relation_in(rel: &Relation, ctx: &Context, basis: &[Diagram]) -> Result<CheckOutcome> {
    ctx.check_relation_symbols(rel)?;
    Ok(ctx.check_unchecked(rel, basis))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub charges: Vec<i64>,
    pub max_boxes: u64,
    pub window: [i64; 2],
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ri_mode: Option<String>,
}

impl ConfigEcho {
    fn of(cfg: &AuditConfig) -> Self {
        ConfigEcho {
            charges: cfg.charges.clone(),
            max_boxes: cfg.max_boxes,
            window: [cfg.window.0, cfg.window.1],
            l: cfg.folded.map(|a| a.l()),
            preset: cfg.folded.map(|_| {
                cfg.preset
                    .map_or_else(|| "custom".to_string(), |p| p.to_string())
            }),
            ri_mode: cfg.folded.map(|a| a.ri_mode().to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleEcho {
    pub diagram: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationResult {
    pub relation: String,
    pub indices: Vec<i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<CounterexampleEcho>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub suite: String,
    pub config: ConfigEcho,
    pub results: Vec<RelationResult>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meta: Option<Meta>,
}

impl AuditReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationResult> {
        self.results.iter().filter(|r| r.status == Status::Fails)
    }

    /// Results whose relation name is `name`.
    pub fn named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a RelationResult> {
        self.results.iter().filter(move |r| r.relation == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn without_meta(mut self) -> Self {
        self.meta = None;
        self
    }
}

/// Checks every relation of `suite` on the configured basis. Results keep
/// the suite's order whatever the worker count.
pub fn run_suite(name: &str, suite: &[Relation], cfg: &AuditConfig) -> Result<AuditReport> {
    let start = Instant::now();
    cfg.validate()?;
    let ctx = cfg.context();
    for rel in suite {
        ctx.check_relation_symbols(rel)?;
    }
    let basis = cfg.basis();
    let outcomes: Vec<CheckOutcome> = cfg.pool()?.install(|| {
        suite
            .par_iter()
            .map(|rel| ctx.check_unchecked(rel, &basis))
            .collect()
    });
    let results = suite
        .iter()
        .zip(outcomes)
        .map(|(rel, out)| {
            let (status, counterexample) = match out {
                CheckOutcome::Holds => (Status::Holds, None),
                CheckOutcome::Counterexample { diagram, residual } => (
                    Status::Fails,
                    Some(CounterexampleEcho {
                        diagram: diagram.to_string(),
                        residual: residual.to_string(),
                    }),
                ),
            };
            RelationResult {
                relation: rel.name.clone(),
                indices: rel.indices.clone(),
                status,
                counterexample,
            }
        })
        .collect();
    Ok(AuditReport {
        suite: name.to_string(),
        config: ConfigEcho::of(cfg),
        results,
        meta: Some(Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seconds: start.elapsed().as_secs_f64(),
        }),
    })
}
