use clap::{Args, Parser, Subcommand, ValueEnum};
use depoly::campaign::{run_campaign, CampaignConfig, CampaignSummary, ScanRecord, Source, Target};
use depoly::graph::{build_named, parse_graph6, NamedGraph};
use depoly::graph_poly::{graph_polynomial, PolyKind};
use depoly::hessian::{hessian, HessianRow};
use depoly::poly::check_polynomial;
use depoly::systems::{
    counterexample_45, enumerate_systems, enumerate_systems_extended, sample_systems, screen_generalized,
    IndependenceSystem,
};
use depoly::{Error, Graph, Result};
use serde_json::json;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "depoly",
    version,
    about = "Exact graph polynomials and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients and sequence verdicts of a graph polynomial.
    Poly(PolyArgs),
    /// Scan a graph or system source against a theorem or conjecture.
    Campaign(CampaignArgs),
    /// Independence-system reports.
    System(SystemArgs),
    /// Hessian certificates of a graph.
    Hessian(HessianArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSpec {
    /// graph6 text.
    #[arg(long)]
    graph6: Option<String>,
    /// Named constructor such as K4, P5, C6, K2,3, star3, paw, chair, empty5.
    #[arg(long)]
    named: Option<String>,
}

impl GraphSpec {
    fn graph(&self) -> Result<Graph> {
        match (&self.graph6, &self.named) {
            (Some(text), _) => parse_graph6(text),
            (_, Some(name)) => build_named(name.parse::<NamedGraph>()?),
            _ => Err(Error::InvalidParameter("give --graph6 or --named".into())),
        }
    }
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    spec: GraphSpec,
    #[arg(long, default_value = "dependence")]
    kind: String,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct CampaignArgs {
    #[arg(long)]
    target: String,
    /// Enumerate every labeled graph on n ≤ 7 vertices.
    #[arg(long, conflicts_with_all = ["input", "ground"])]
    n: Option<usize>,
    /// graph6 file, one graph per line.
    #[arg(long, conflicts_with = "ground")]
    input: Option<PathBuf>,
    /// Ground size for system enumeration.
    #[arg(long)]
    ground: Option<usize>,
    /// Allow ground 6 (about 7.8 million systems).
    #[arg(long)]
    ground6: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Emit passing records as well as violations.
    #[arg(long)]
    all_records: bool,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct SystemArgs {
    /// Enumerate every system on this many elements (≤ 5, or 6 with --ground6).
    #[arg(long, conflicts_with_all = ["input", "counterexample"])]
    ground: Option<usize>,
    #[arg(long)]
    ground6: bool,
    /// JSON file holding {"ground_size": n, "family": [...]}.
    #[arg(long, conflicts_with = "counterexample")]
    input: Option<PathBuf>,
    /// The ten-element system with f-vector (1, 10, 3, 1).
    #[arg(long)]
    counterexample: bool,
    /// Draw this many seeded random systems on --ground elements instead.
    #[arg(long, requires = "ground")]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct HessianArgs {
    #[command(flatten)]
    spec: GraphSpec,
    /// A single k; all of 1..=n-3 when omitted.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

fn main() -> ExitCode {
    // exit code 2 is reserved for violations, so usage errors map to 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Poly(a) => poly(a, &mut out).map(|_| 0),
        Command::Campaign(a) => campaign(a, &mut out),
        Command::System(a) => system(a, &mut out).map(|_| 0),
        Command::Hessian(a) => hessian_cmd(a, &mut out).map(|_| 0),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn poly(a: PolyArgs, out: &mut impl Write) -> Result<()> {
    let g = a.spec.graph()?;
    let kind: PolyKind = a.kind.parse()?;
    let p = graph_polynomial(&g, kind)?;
    let m = p.degree().unwrap_or(0).max(g.order());
    let report = check_polynomial(&p, m)?;
    let coeffs = p.coeffs();
    match a.output {
        Output::Json => {
            let rec = json!({
                "graph6": g.to_graph6(),
                "n": g.order(),
                "kind": kind.as_str(),
                "coefficients": coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "report": report,
            });
            writeln!(out, "{rec}")?;
        }
        Output::Csv => {
            writeln!(
                out,
                "graph6,n,kind,coefficients,unimodal,log_concave,ordered_lc,ultra_lc,real_rooted"
            )?;
            let c: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            let rr = report.real_rooted.map_or("".into(), |b| b.to_string());
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                g.to_graph6(),
                g.order(),
                kind.as_str(),
                c.join(" "),
                report.unimodal.holds,
                report.log_concave.holds,
                report.ordered_lc.holds,
                report.ultra_lc.holds,
                rr
            )?;
        }
        Output::Pretty => {
            writeln!(out, "{} of {} (n = {}): {p}", kind.as_str(), g.to_graph6(), g.order())?;
            let c: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            writeln!(out, "coefficients: [{}]", c.join(", "))?;
            let show = |name: &str, v: depoly::poly::Verdict| match v.first_failure {
                None => format!("{name}: yes"),
                Some(k) => format!("{name}: no (first failure at k = {k})"),
            };
            writeln!(out, "{}", show("unimodal", report.unimodal))?;
            writeln!(out, "{}", show("log-concave", report.log_concave))?;
            writeln!(out, "{}", show("ordered log-concave", report.ordered_lc))?;
            writeln!(out, "{}", show("ultra log-concave", report.ultra_lc))?;
            let rr = report
                .real_rooted
                .map_or("n/a".into(), |b| if b { "yes".into() } else { "no".to_string() });
            writeln!(out, "real-rooted: {rr}")?;
        }
    }
    Ok(())
}

fn campaign(a: CampaignArgs, out: &mut impl Write) -> Result<u8> {
    let target: Target = a.target.parse()?;
    let source = match (a.n, a.input, a.ground) {
        (Some(n), None, None) => Source::Internal { n },
        (None, Some(path), None) => Source::Graph6File(path),
        (None, None, Some(ground)) => Source::Systems { ground },
        _ => {
            return Err(Error::InvalidParameter(
                "give exactly one of --n, --input or --ground".into(),
            ))
        }
    };
    let mut config = CampaignConfig::new(target).workers(a.workers).keep_all(a.all_records);
    config.allow_ground6 = a.ground6;
    let summary = run_campaign(&config, &source)?;
    match a.output {
        Output::Json | Output::Pretty => write_json_campaign(&summary, out)?,
        Output::Csv => write_csv_campaign(&summary, out)?,
    }
    Ok(summary.exit_code() as u8)
}

fn write_json_campaign(summary: &CampaignSummary, out: &mut impl Write) -> Result<()> {
    for rec in summary.violations.iter().chain(&summary.records) {
        writeln!(out, "{}", to_json(rec))?;
    }
    let mut envelope = summary.clone();
    envelope.records.clear();
    writeln!(out, "{}", to_json(&envelope))?;
    Ok(())
}

fn write_csv_campaign(summary: &CampaignSummary, out: &mut impl Write) -> Result<()> {
    writeln!(out, "subject,n,check,passed,witness")?;
    let row = |rec: &ScanRecord| -> Vec<String> {
        let subject = rec
            .graph6
            .clone()
            .or_else(|| rec.system.as_ref().map(IndependenceSystem::to_json))
            .unwrap_or_default();
        rec.checks
            .iter()
            .map(|(name, c)| {
                let witness = if c.witness.is_null() {
                    String::new()
                } else {
                    c.witness.to_string()
                };
                format!(
                    "{},{},{},{},{}",
                    csv_field(&subject),
                    rec.n,
                    name,
                    c.passed,
                    csv_field(&witness)
                )
            })
            .collect()
    };
    for rec in summary.violations.iter().chain(&summary.records) {
        for line in row(rec) {
            writeln!(out, "{line}")?;
        }
    }
    eprintln!(
        "{}: scanned {}, skipped {}, out of scope {}, violations {}, malformed lines {}, {} ms",
        summary.target,
        summary.scanned,
        summary.skipped,
        summary.out_of_scope,
        summary.violations.len(),
        summary.malformed_lines.len(),
        summary.wall_time_ms
    );
    for m in &summary.malformed_lines {
        eprintln!("line {}: {}", m.line, m.error);
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn system(a: SystemArgs, out: &mut impl Write) -> Result<()> {
    let systems: Box<dyn Iterator<Item = Result<IndependenceSystem>>> =
        match (a.ground, a.input, a.counterexample, a.sample) {
            (Some(ground), None, false, Some(count)) => {
                Box::new(sample_systems(ground, count, a.seed)?.into_iter().map(Ok))
            }
            (Some(ground), None, false, None) => {
                let stream = if a.ground6 {
                    enumerate_systems_extended(ground)?
                } else {
                    enumerate_systems(ground)?
                };
                Box::new(stream.map(move |bits| IndependenceSystem::from_characteristic(ground, bits)))
            }
            (None, Some(path), false, None) => {
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let m: IndependenceSystem = serde_json::from_str(&text)
                    .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
                Box::new(std::iter::once(Ok(m)))
            }
            (None, None, true, None) => Box::new(std::iter::once(Ok(counterexample_45()))),
            _ => {
                return Err(Error::InvalidParameter(
                    "give one of --ground, --input or --counterexample".into(),
                ))
            }
        };
    if a.output == Output::Csv {
        writeln!(
            out,
            "system,f_vector,rank,min_l,in_scope,log_concave,ordered_lc,ultra_lc"
        )?;
    }
    for m in systems {
        let m = m?;
        let s = screen_generalized(&m)?;
        match a.output {
            Output::Json | Output::Pretty => {
                let row = json!({
                    "system": m,
                    "f_vector": m.f_vector(),
                    "rank": m.rank(),
                    "min_l": s.as_ref().map(|s| s.min_l),
                    "in_scope": s.as_ref().map(|s| s.in_scope),
                    "report": m.mason_report()?,
                });
                writeln!(out, "{row}")?;
            }
            Output::Csv => {
                let rep = m.mason_report()?;
                let f: Vec<String> = m.f_vector().iter().map(u64::to_string).collect();
                let opt = |v: Option<String>| v.unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(&m.to_json()),
                    f.join(" "),
                    opt(m.rank().map(|r| r.to_string())),
                    opt(s.as_ref().map(|s| s.min_l.to_string())),
                    opt(s.as_ref().map(|s| s.in_scope.to_string())),
                    rep.log_concave.holds,
                    rep.ordered_lc.holds,
                    rep.ultra_lc.holds
                )?;
            }
        }
    }
    Ok(())
}

fn hessian_cmd(a: HessianArgs, out: &mut impl Write) -> Result<()> {
    let g = a.spec.graph()?;
    let ks: Vec<usize> = match a.k {
        Some(k) => vec![k],
        None => (1..=g.order().saturating_sub(3)).collect(),
    };
    if ks.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "no admissible k for n = {} (need n >= 4)",
            g.order()
        )));
    }
    if a.output == Output::Csv {
        writeln!(out, "{}", HessianRow::CSV_HEADER)?;
    }
    for k in ks {
        let rep = hessian(&g, k)?;
        let row = HessianRow::new(&g, &rep);
        match a.output {
            Output::Csv => writeln!(out, "{}", row.to_csv())?,
            Output::Json => writeln!(out, "{}", to_json(&row))?,
            Output::Pretty => writeln!(
                out,
                "k = {}, r = {}: Hessian {}, det {}, t = {:?}, ulc gap {}",
                rep.k, rep.r, rep.matrix, rep.det, rep.histogram.t, rep.ulc_gap
            )?,
        }
    }
    Ok(())
}
