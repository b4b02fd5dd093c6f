//! Verification campaigns over exhaustive enumerations or graph6 streams.
//!
//! Inputs are cut into chunks evaluated on a dedicated rayon pool; each chunk
//! owns its caches and results, and the merge sorts violations by subject so
//! the report does not depend on worker count or input order.

use crate::error::{Error, Result};
use crate::graph::{
    build_named, disjoint_union, independence_number, is_isomorphic, parse_graph6, strip_isolated, Graph,
    LabeledGraphs, NamedGraph, PatternMatcher, MAX_ENUMERATION_ORDER,
};
use crate::graph_poly::dependence_counts;
use crate::hessian::{hessian, UlcHypothesis};
use crate::poly::{check_sequence, SequenceReport};
use crate::systems::{
    enumerate_systems, enumerate_systems_extended, from_codependent, independent_set_system, screen_generalized,
    IndependenceSystem,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::BufRead;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

const GRAPH_CHUNK: usize = 1 << 14;
const SYSTEM_CHUNK: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    ThmUlc,
    ThmRr,
    HorrocksLc,
    ConjUlc,
    LemmaHessian,
    #[serde(rename = "prop_2matroid")]
    Prop2matroid,
    PropClawfree,
    #[serde(rename = "conj_2matroid_systems")]
    Conj2matroidSystems,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::ThmUlc,
        Target::ThmRr,
        Target::HorrocksLc,
        Target::ConjUlc,
        Target::LemmaHessian,
        Target::Prop2matroid,
        Target::PropClawfree,
        Target::Conj2matroidSystems,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Target::ThmUlc => "thm_ulc",
            Target::ThmRr => "thm_rr",
            Target::HorrocksLc => "horrocks_lc",
            Target::ConjUlc => "conj_ulc",
            Target::LemmaHessian => "lemma_hessian",
            Target::Prop2matroid => "prop_2matroid",
            Target::PropClawfree => "prop_clawfree",
            Target::Conj2matroidSystems => "conj_2matroid_systems",
        }
    }

    pub fn takes_graphs(self) -> bool {
        self != Target::Conj2matroidSystems
    }

    /// Names of the checks every record of this target carries.
    pub fn checks(self) -> &'static [&'static str] {
        match self {
            Target::ThmUlc | Target::ConjUlc => &["ultra_lc"],
            Target::HorrocksLc => &["log_concave"],
            Target::ThmRr => &["real_rooted_iff_listed"],
            Target::LemmaHessian => &["three_way", "t_constraints", "det_nonpositive"],
            Target::Prop2matroid => &["two_matroid"],
            Target::PropClawfree => &["claw_free_exchange"],
            Target::Conj2matroidSystems => &["generalized_ulc", "two_matroid_ulc"],
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown campaign target {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Every labeled graph on `n ≤ 7` vertices.
    Internal {
        n: usize,
    },
    /// One graph6 string per line.
    Graph6Text(String),
    Graph6File(PathBuf),
    /// Every downward-closed family on `ground` elements.
    Systems {
        ground: usize,
    },
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::Internal { n } => format!("internal:n={n}"),
            Source::Graph6Text(_) => "graph6:inline".into(),
            Source::Graph6File(p) => format!("graph6:{}", p.display()),
            Source::Systems { ground } => format!("systems:ground={ground}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    pub target: Target,
    /// Worker threads; 0 means one per available core.
    pub workers: usize,
    /// Keep passing records too, not just violations.
    pub keep_all: bool,
    /// Admit ground 6 for system enumeration.
    pub allow_ground6: bool,
}

impl CampaignConfig {
    pub fn new(target: Target) -> Self {
        CampaignConfig {
            target,
            workers: 0,
            keep_all: false,
            allow_ground6: false,
        }
    }

    pub fn workers(mut self, w: usize) -> Self {
        self.workers = w;
        self
    }

    pub fn keep_all(mut self, keep: bool) -> Self {
        self.keep_all = keep;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    #[serde(skip_serializing_if = "Value::is_null", default)]
    pub witness: Value,
}

impl CheckOutcome {
    fn pass() -> Self {
        CheckOutcome {
            passed: true,
            witness: Value::Null,
        }
    }

    fn new(passed: bool, witness: Value) -> Self {
        CheckOutcome { passed, witness }
    }
}

/// Verdicts for one scanned object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub system: Option<IndependenceSystem>,
    pub n: usize,
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl ScanRecord {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }

    fn sort_key(&self) -> (String, String) {
        (
            self.graph6.clone().unwrap_or_default(),
            self.system
                .as_ref()
                .map(IndependenceSystem::to_json)
                .unwrap_or_default(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MalformedLine {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub target: Target,
    pub source: String,
    /// Objects the target's predicate was applied to.
    pub scanned: u64,
    /// Graphs without edges.
    pub skipped: u64,
    /// Objects outside the target's hypothesis class.
    pub out_of_scope: u64,
    pub violations: Vec<ScanRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub records: Vec<ScanRecord>,
    pub malformed_lines: Vec<MalformedLine>,
    /// Set when a certificate failed to classify or agree; the scan stopped.
    pub aborted: bool,
    pub verdict: String,
    pub wall_time_ms: u64,
}

impl CampaignSummary {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }

    /// 0 when consistent, 2 when violations were found.
    pub fn exit_code(&self) -> i32 {
        if self.consistent() {
            0
        } else {
            2
        }
    }
}

enum Eval {
    Skipped,
    OutOfScope,
    Checked(ScanRecord, bool),
}

#[derive(Default)]
struct Partial {
    scanned: u64,
    skipped: u64,
    out_of_scope: u64,
    violations: Vec<ScanRecord>,
    records: Vec<ScanRecord>,
    malformed: Vec<MalformedLine>,
    aborted: bool,
}

impl Partial {
    fn absorb(&mut self, e: Eval, keep_all: bool) {
        match e {
            Eval::Skipped => self.skipped += 1,
            Eval::OutOfScope => self.out_of_scope += 1,
            Eval::Checked(rec, fatal) => {
                self.scanned += 1;
                self.aborted |= fatal;
                if !rec.passed() {
                    self.violations.push(rec);
                } else if keep_all {
                    self.records.push(rec);
                }
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.skipped += other.skipped;
        self.out_of_scope += other.out_of_scope;
        self.violations.extend(other.violations);
        self.records.extend(other.records);
        self.malformed.extend(other.malformed);
        self.aborted |= other.aborted;
        self
    }
}

/// The eight graphs without isolated vertices whose dependence polynomial is
/// real-rooted.
pub fn real_rooted_family() -> Vec<(&'static str, Graph)> {
    let b = |n| build_named(n).expect("named graph");
    let k2 = b(NamedGraph::Complete(2));
    vec![
        ("K2", k2),
        ("P3", b(NamedGraph::Path(3))),
        ("K3", b(NamedGraph::Complete(3))),
        ("2K2", disjoint_union(&k2, &k2).expect("2K2")),
        ("P4", b(NamedGraph::Path(4))),
        ("C4", b(NamedGraph::Cycle(4))),
        ("paw", b(NamedGraph::Paw)),
        ("chair", b(NamedGraph::Chair)),
    ]
}

/// Name of the listed graph `strip_isolated(g)` is isomorphic to, if any.
pub fn real_rooted_member(g: &Graph, family: &[(&'static str, Graph)]) -> Option<&'static str> {
    let h = strip_isolated(g);
    if h.order() > 5 {
        return None;
    }
    family
        .iter()
        .find(|(_, f)| is_isomorphic(&h, f).unwrap_or(false))
        .map(|(name, _)| *name)
}

/// Per-chunk evaluation state; caches verdicts keyed by coefficient vector.
struct Worker {
    target: Target,
    hypothesis: UlcHypothesis,
    claw: PatternMatcher,
    rr_family: Vec<(&'static str, Graph)>,
    seq_cache: HashMap<Vec<u64>, SequenceReport>,
}

impl Worker {
    fn new(target: Target) -> Self {
        let claw = build_named(NamedGraph::Star(3)).expect("claw");
        Worker {
            target,
            hypothesis: UlcHypothesis::new(),
            claw: PatternMatcher::new(&claw).expect("claw pattern"),
            rr_family: real_rooted_family(),
            seq_cache: HashMap::new(),
        }
    }

    fn sequence_report(&mut self, d: &[u64]) -> SequenceReport {
        if let Some(r) = self.seq_cache.get(d) {
            return r.clone();
        }
        let big: Vec<BigInt> = d.iter().map(|&c| BigInt::from(c)).collect();
        let rep = check_sequence(&big, d.len() - 1).expect("dependence counts are a valid sequence");
        self.seq_cache.insert(d.to_vec(), rep.clone());
        rep
    }

    fn record(g: &Graph, checks: Vec<(&str, CheckOutcome)>) -> ScanRecord {
        ScanRecord {
            graph6: Some(g.to_graph6()),
            system: None,
            n: g.order(),
            checks: checks.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn graph(&mut self, g: &Graph) -> Eval {
        if g.edge_count() == 0 {
            return Eval::Skipped;
        }
        let n = g.order();
        match self.target {
            Target::HorrocksLc | Target::ThmUlc | Target::ConjUlc => {
                let alpha = || independence_number(g);
                if self.target == Target::ThmUlc && !self.hypothesis.holds_with_alpha(g, alpha()) {
                    return Eval::OutOfScope;
                }
                let d = dependence_counts(g);
                let rep = self.sequence_report(&d);
                let (name, verdict) = if self.target == Target::HorrocksLc {
                    ("log_concave", rep.log_concave)
                } else {
                    ("ultra_lc", rep.ultra_lc)
                };
                let out = if verdict.holds {
                    CheckOutcome::pass()
                } else {
                    CheckOutcome::new(
                        false,
                        json!({ "first_failure": verdict.first_failure, "polynomial": decimal(&d) }),
                    )
                };
                Eval::Checked(Self::record(g, vec![(name, out)]), false)
            }
            Target::ThmRr => {
                let d = dependence_counts(g);
                let real = self
                    .sequence_report(&d)
                    .real_rooted
                    .expect("graphs with an edge have nonzero D");
                let member = real_rooted_member(g, &self.rr_family);
                let out = if real == member.is_some() {
                    CheckOutcome::pass()
                } else {
                    CheckOutcome::new(
                        false,
                        json!({ "real_rooted": real, "listed_as": member, "polynomial": decimal(&d) }),
                    )
                };
                Eval::Checked(Self::record(g, vec![("real_rooted_iff_listed", out)]), false)
            }
            Target::LemmaHessian => self.lemma_hessian(g),
            Target::Prop2matroid => {
                let m = from_codependent(g).expect("graph within system size");
                let out = match m.exchange_witness(2) {
                    None => CheckOutcome::pass(),
                    Some((s, t)) => CheckOutcome::new(false, json!({ "s": s, "t": t, "l": 2 })),
                };
                Eval::Checked(Self::record(g, vec![("two_matroid", out)]), false)
            }
            Target::PropClawfree => {
                if self.claw.occurs_in(g) {
                    return Eval::OutOfScope;
                }
                let m = independent_set_system(g).expect("graph within system size");
                let l = m.rank().unwrap_or(0) / 2 + 1;
                let out = match m.exchange_witness(l) {
                    None => CheckOutcome::pass(),
                    Some((s, t)) => CheckOutcome::new(false, json!({ "s": s, "t": t, "l": l, "alpha": m.rank() })),
                };
                Eval::Checked(Self::record(g, vec![("claw_free_exchange", out)]), false)
            }
            Target::Conj2matroidSystems => {
                unreachable!("system target evaluated on a graph; n = {n}")
            }
        }
    }

    fn lemma_hessian(&mut self, g: &Graph) -> Eval {
        let n = g.order();
        let alpha = independence_number(g);
        let k2_free = self.hypothesis.k2_2k1_free(g);
        let in_class = k2_free || alpha + 2 >= n;
        let mut rows = Vec::new();
        let mut three_way = CheckOutcome::pass();
        let mut t_ok = true;
        let mut det_ok = true;
        let mut fatal = false;
        for k in 1..=n.saturating_sub(3) {
            match hessian(g, k) {
                Ok(rep) => {
                    let t = rep.histogram.t;
                    if (k2_free && t[0] != 0) || (alpha + 2 >= n && t[7] != 0) {
                        t_ok = false;
                    }
                    if in_class && rep.det > BigInt::from(0) {
                        det_ok = false;
                    }
                    rows.push(json!({ "k": k, "t": t, "det": rep.det.to_string() }));
                }
                Err(e) => {
                    fatal = true;
                    three_way = CheckOutcome::new(false, json!({ "k": k, "error": e.to_string() }));
                    break;
                }
            }
        }
        let payload = json!({ "alpha": alpha, "k2_2k1_free": k2_free, "rows": rows });
        let verdict = |ok: bool| {
            if ok {
                CheckOutcome::pass()
            } else {
                CheckOutcome::new(false, payload.clone())
            }
        };
        let rec = Self::record(
            g,
            vec![
                ("three_way", three_way),
                ("t_constraints", verdict(t_ok)),
                ("det_nonpositive", verdict(det_ok)),
            ],
        );
        Eval::Checked(rec, fatal)
    }

    fn system(&mut self, m: &IndependenceSystem) -> Eval {
        let Some(s) = screen_generalized(m).expect("enumerated systems are valid") else {
            return Eval::Skipped;
        };
        if !s.in_scope {
            return Eval::OutOfScope;
        }
        let witness = json!({
            "f_vector": s.f_vector,
            "rank": s.rank,
            "min_l": s.min_l,
            "first_failure": s.report.ultra_lc.first_failure,
        });
        let verdict = |applies: bool| {
            if applies && !s.report.ultra_lc.holds {
                CheckOutcome::new(false, witness.clone())
            } else {
                CheckOutcome::pass()
            }
        };
        let rec = ScanRecord {
            graph6: None,
            system: Some(m.clone()),
            n: m.ground_size(),
            checks: BTreeMap::from([
                ("generalized_ulc".to_string(), verdict(true)),
                ("two_matroid_ulc".to_string(), verdict(s.is_2matroid)),
            ]),
        };
        Eval::Checked(rec, false)
    }
}

fn decimal(d: &[u64]) -> Vec<String> {
    d.iter().map(u64::to_string).collect()
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Io(format!("cannot start worker pool: {e}")))
}

fn check_compatible(target: Target, source: &Source) -> Result<()> {
    let systems = matches!(source, Source::Systems { .. });
    if target.takes_graphs() == systems {
        return Err(Error::InvalidParameter(format!(
            "target {target} cannot run on source {}",
            source.describe()
        )));
    }
    Ok(())
}

/// Runs `config.target` over `source`.
pub fn run_campaign(config: &CampaignConfig, source: &Source) -> Result<CampaignSummary> {
    check_compatible(config.target, source)?;
    let start = Instant::now();
    let pool = pool(config.workers)?;
    let stop = AtomicBool::new(false);
    let total = pool.install(|| match source {
        Source::Internal { n } => scan_internal(config, *n, &stop),
        Source::Graph6Text(text) => scan_lines(config, text.as_bytes(), &stop),
        Source::Graph6File(path) => {
            let f = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            scan_lines(config, std::io::BufReader::new(f), &stop)
        }
        Source::Systems { ground } => scan_systems(config, *ground, &stop),
    })?;
    let mut violations = total.violations;
    violations.sort_by_key(ScanRecord::sort_key);
    let mut records = total.records;
    records.sort_by_key(ScanRecord::sort_key);
    let mut malformed = total.malformed;
    malformed.sort_by_key(|m| m.line);
    let verdict = if violations.is_empty() {
        "consistent"
    } else {
        "violations"
    };
    Ok(CampaignSummary {
        target: config.target,
        source: source.describe(),
        scanned: total.scanned,
        skipped: total.skipped,
        out_of_scope: total.out_of_scope,
        violations,
        records,
        malformed_lines: malformed,
        aborted: total.aborted,
        verdict: verdict.into(),
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

fn scan_internal(config: &CampaignConfig, n: usize, stop: &AtomicBool) -> Result<Partial> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Unsupported(format!(
            "internal enumeration of n = {n} (limit {MAX_ENUMERATION_ORDER}); pipe a graph6 stream instead"
        )));
    }
    let total = crate::graph::labeled_graph_count(n) as usize;
    let parts = total.div_ceil(GRAPH_CHUNK).max(1);
    let chunks = LabeledGraphs::partition(n, parts)?;
    Ok(chunks
        .into_par_iter()
        .map(|chunk| {
            let mut part = Partial::default();
            if stop.load(Ordering::Relaxed) {
                return part;
            }
            let mut w = Worker::new(config.target);
            for g in chunk {
                part.absorb(w.graph(&g), config.keep_all);
            }
            if part.aborted {
                stop.store(true, Ordering::Relaxed);
            }
            part
        })
        .reduce(Partial::default, Partial::merge))
}

fn scan_lines(config: &CampaignConfig, reader: impl BufRead, stop: &AtomicBool) -> Result<Partial> {
    let mut total = Partial::default();
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(GRAPH_CHUNK * 4);
    let mut lines = reader.lines().enumerate();
    loop {
        batch.clear();
        for (i, line) in lines.by_ref() {
            batch.push((i + 1, line?));
            if batch.len() == GRAPH_CHUNK * 4 {
                break;
            }
        }
        if batch.is_empty() || stop.load(Ordering::Relaxed) {
            return Ok(total);
        }
        let part = batch
            .par_chunks(GRAPH_CHUNK / 4)
            .map(|chunk| {
                let mut part = Partial::default();
                let mut w = Worker::new(config.target);
                for (line, text) in chunk {
                    let text = text.trim();
                    if text.is_empty() {
                        continue;
                    }
                    match parse_graph6(text) {
                        Ok(g) => part.absorb(w.graph(&g), config.keep_all),
                        Err(e) => part.malformed.push(MalformedLine {
                            line: *line,
                            error: e.to_string(),
                        }),
                    }
                }
                part
            })
            .reduce(Partial::default, Partial::merge);
        if part.aborted {
            stop.store(true, Ordering::Relaxed);
        }
        total = total.merge(part);
    }
}

fn scan_systems(config: &CampaignConfig, ground: usize, stop: &AtomicBool) -> Result<Partial> {
    let mut stream = if config.allow_ground6 {
        enumerate_systems_extended(ground)?
    } else {
        enumerate_systems(ground)?
    };
    let mut total = Partial::default();
    loop {
        let batch: Vec<u64> = stream.by_ref().take(SYSTEM_CHUNK * 16).collect();
        if batch.is_empty() || stop.load(Ordering::Relaxed) {
            return Ok(total);
        }
        let part = batch
            .par_chunks(SYSTEM_CHUNK)
            .map(|chunk| {
                let mut part = Partial::default();
                let mut w = Worker::new(config.target);
                for &bits in chunk {
                    let m = IndependenceSystem::from_characteristic(ground, bits)
                        .expect("enumerated families are downward closed");
                    part.absorb(w.system(&m), config.keep_all);
                }
                part
            })
            .reduce(Partial::default, Partial::merge);
        total = total.merge(part);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(target: Target, source: Source, workers: usize) -> CampaignSummary {
        run_campaign(&CampaignConfig::new(target).workers(workers), &source).unwrap()
    }

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.as_str().parse::<Target>().unwrap(), t);
        }
        assert!("thm_foo".parse::<Target>().is_err());
    }

    #[test]
    fn incompatible_sources() {
        let cfg = CampaignConfig::new(Target::HorrocksLc);
        assert!(run_campaign(&cfg, &Source::Systems { ground: 2 }).is_err());
        let cfg = CampaignConfig::new(Target::Conj2matroidSystems);
        assert!(run_campaign(&cfg, &Source::Internal { n: 3 }).is_err());
        let cfg = CampaignConfig::new(Target::HorrocksLc);
        assert!(matches!(
            run_campaign(&cfg, &Source::Internal { n: 8 }),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn small_campaigns_are_consistent() {
        let s = run(Target::ThmRr, Source::Internal { n: 4 }, 1);
        assert!(s.consistent());
        assert_eq!(s.scanned + s.skipped, 64);
        assert_eq!(s.skipped, 1);
        let s = run(Target::HorrocksLc, Source::Internal { n: 5 }, 2);
        assert_eq!(s.scanned + s.skipped, 1024);
        assert!(s.consistent());
        assert!(run(Target::Prop2matroid, Source::Internal { n: 4 }, 1).consistent());
    }

    #[test]
    fn malformed_lines_are_reported() {
        let text = "A_\n\nbad~line\nC~\n@\n".to_string();
        let s = run(Target::ThmRr, Source::Graph6Text(text), 1);
        assert_eq!(s.malformed_lines.len(), 1);
        assert_eq!(s.malformed_lines[0].line, 3);
        assert_eq!(s.scanned, 2);
        assert_eq!(s.skipped, 1);
        assert!(s.consistent());
    }

    #[test]
    fn hypothesis_filters_thm_ulc() {
        let k2 = build_named(NamedGraph::Complete(2)).unwrap();
        let three_k2 = disjoint_union(&disjoint_union(&k2, &k2).unwrap(), &k2).unwrap();
        let text = format!("{}\nC~\n", three_k2.to_graph6());
        let s = run(Target::ThmUlc, Source::Graph6Text(text.clone()), 1);
        assert_eq!((s.scanned, s.out_of_scope), (1, 1));
        let s = run(Target::ConjUlc, Source::Graph6Text(text), 1);
        assert_eq!((s.scanned, s.out_of_scope), (2, 0));
        assert!(s.consistent());
    }

    #[test]
    fn keep_all_retains_passing_records() {
        let cfg = CampaignConfig::new(Target::HorrocksLc).workers(1).keep_all(true);
        let s = run_campaign(&cfg, &Source::Graph6Text("C~\nA_\n".into())).unwrap();
        assert_eq!(s.records.len(), 2);
        assert_eq!(s.records[0].graph6.as_deref(), Some("A_"));
        assert!(s.records.iter().all(|r| r.checks.len() == 1 && r.passed()));
        assert_eq!(s.exit_code(), 0);
    }

    #[test]
    fn system_screening_separates_conjectures() {
        let s = run(Target::Conj2matroidSystems, Source::Systems { ground: 4 }, 1);
        assert_eq!(s.scanned + s.out_of_scope + s.skipped, 168);
        assert!(s.consistent());
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"target\":\"conj_2matroid_systems\""));
    }

    #[test]
    fn family_membership() {
        let fam = real_rooted_family();
        let c4 = build_named(NamedGraph::Cycle(4)).unwrap();
        let padded = crate::graph::add_isolated(&c4, 2).unwrap();
        assert_eq!(real_rooted_member(&padded, &fam), Some("C4"));
        let k4 = build_named(NamedGraph::Complete(4)).unwrap();
        assert_eq!(real_rooted_member(&k4, &fam), None);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let strip = |mut s: CampaignSummary| {
            s.wall_time_ms = 0;
            serde_json::to_string(&s).unwrap()
        };
        let a = strip(run(Target::LemmaHessian, Source::Internal { n: 5 }, 1));
        let b = strip(run(Target::LemmaHessian, Source::Internal { n: 5 }, 3));
        assert_eq!(a, b);
    }
}
