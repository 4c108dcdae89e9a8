//! Command-line front end. One thin binary dispatches here; everything it
//! prints is built from the library plus the deterministic formatters in
//! [`crate::report`].
//!
//! Exit codes: 0 on success, 1 when a verification check fails or a
//! numerical inconsistency surfaces, 2 on usage, parse or I/O errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::energy::energy_self_loop;
use crate::error::Error;
use crate::graph::SelfLoopGraph;
use crate::graph6;
use crate::report::{self, ReportFormat};
use crate::spectral::{cluster_spectrum, CLUSTER_TOL};
use crate::verify::{
    self, build_family, exhaustive_conjecture_check_with_tol, verify_family_pair_with_tol,
    CheckSummary, FamilyPartner, FamilyVariant, WitnessCertificate,
};
use crate::DEFAULT_TOL;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "selfloop-energy",
    version,
    about = "Energy of graphs with self-loops: spectra, witnesses, equienergetic families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// graph6 string of the graph
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,

    /// File of `graph6[ : hexmask]` records, one per line; `#` comments
    /// are skipped
    #[arg(long)]
    input: Option<PathBuf>,

    /// Hex loop mask for --graph6 (digit k covers vertices 4k..4k+3;
    /// records from --input carry their own masks)
    #[arg(long, requires = "graph6")]
    loops: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the energy of one graph or a corpus
    Energy {
        #[command(flatten)]
        source: SourceArgs,
        /// Output format: json, csv or text (default json)
        #[arg(long)]
        format: Option<String>,
    },
    /// Eigenvalues of the loop-adjacency matrix, with multiplicities
    Spectrum {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        format: Option<String>,
        /// Clustering tolerance for the multiplicity table (default 1e-6)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Find a loop set that strictly increases the energy
    Witness {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        format: Option<String>,
        /// Strictness tolerance (default 1e-8)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Build an equienergetic family pair and verify it
    Family {
        /// Partner side: `empty` or `complete` (12-vertex blocks)
        #[arg(long)]
        partner: String,
        /// Number of 12-vertex copies on each side
        #[arg(long)]
        n: usize,
        /// Report a single member (`h1` or `h2`) instead of the pair
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run the constructive witness over every labeled graph
    VerifyAll {
        /// Check all graphs on 2..=n vertices (n at most 6)
        #[arg(long = "n-max", conflicts_with = "input")]
        n_max: Option<usize>,
        /// Check the graphs of a corpus file instead
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonConvergence { .. }
            | Error::ToleranceAmbiguity { .. }
            | Error::TraceMismatch { .. } => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI on `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let full = std::iter::once("selfloop-energy".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Energy { source, format } => {
            let format = parse_format(format.as_deref(), ReportFormat::Json)?;
            cmd_energy(&source, format, out)
        }
        Command::Spectrum {
            source,
            format,
            tol,
        } => {
            let format = parse_format(format.as_deref(), ReportFormat::Json)?;
            let tol = parse_tol(tol, CLUSTER_TOL)?;
            cmd_spectrum(&source, format, tol, out)
        }
        Command::Witness {
            source,
            format,
            tol,
        } => {
            let format = parse_format(format.as_deref(), ReportFormat::Json)?;
            let tol = parse_tol(tol, DEFAULT_TOL)?;
            cmd_witness(&source, format, tol, out)
        }
        Command::Family {
            partner,
            n,
            variant,
            format,
            tol,
        } => {
            let format = parse_format(format.as_deref(), ReportFormat::Json)?;
            let tol = parse_tol(tol, DEFAULT_TOL)?;
            let partner: FamilyPartner = partner
                .parse()
                .map_err(|_| Failure::usage(format!("unknown partner `{partner}` (expected empty or complete)")))?;
            let variant = match variant {
                None => None,
                Some(v) => Some(v.parse::<FamilyVariant>().map_err(|_| {
                    Failure::usage(format!("unknown variant `{v}` (expected h1 or h2)"))
                })?),
            };
            cmd_family(partner, n, variant, format, tol, out)
        }
        Command::VerifyAll {
            n_max,
            input,
            format,
            tol,
        } => {
            let format = parse_format(format.as_deref(), ReportFormat::Text)?;
            let tol = parse_tol(tol, DEFAULT_TOL)?;
            cmd_verify_all(n_max, input, format, tol, out)
        }
    }
}

fn parse_format(s: Option<&str>, default: ReportFormat) -> Result<ReportFormat, Failure> {
    match s {
        None => Ok(default),
        Some(s) => s.parse().map_err(Failure::usage),
    }
}

fn parse_tol(tol: Option<f64>, default: f64) -> Result<f64, Failure> {
    match tol {
        None => Ok(default),
        Some(t) if t > 0.0 => Ok(t),
        Some(t) => Err(Failure::usage(format!("--tol must be positive, got {t}"))),
    }
}

/// Loads the graphs a subcommand works on. `single` is true when the graph
/// came from --graph6 (reports then print one object, not an array).
fn load_records(source: &SourceArgs) -> Result<(Vec<SelfLoopGraph>, bool), Failure> {
    match (&source.graph6, &source.input) {
        (Some(g6), None) => {
            let graph = graph6::decode_graph6(g6)?;
            let loops = match &source.loops {
                Some(mask) => crate::graph::LoopSet::from_hex(mask)?,
                None => crate::graph::LoopSet::empty(),
            };
            Ok((vec![SelfLoopGraph::new(graph, loops)?], true))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            Ok((graph6::parse_corpus(&text)?, false))
        }
        _ => Err(Failure::usage("one of --graph6 or --input is required")),
    }
}

fn emit_single_or_array(
    format: ReportFormat,
    single: bool,
    json_items: Vec<String>,
    csv_header: &str,
    csv_rows: Vec<String>,
    text_lines: Vec<String>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        ReportFormat::Json => {
            if single {
                writeln!(out, "{}", json_items[0])?;
            } else {
                writeln!(out, "[{}]", json_items.join(","))?;
            }
        }
        ReportFormat::Csv => {
            writeln!(out, "{csv_header}")?;
            for row in csv_rows {
                writeln!(out, "{row}")?;
            }
        }
        ReportFormat::Text => {
            for line in text_lines {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn cmd_energy(
    source: &SourceArgs,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (records, single) = load_records(source)?;
    let mut json_items = Vec::new();
    let mut csv_rows = Vec::new();
    let mut text_lines = Vec::new();
    for gs in &records {
        let r = energy_self_loop(gs)?;
        json_items.push(report::energy_report_json(&r));
        csv_rows.push(report::energy_report_csv_row(&r));
        text_lines.push(report::energy_report_text(&r));
    }
    emit_single_or_array(
        format,
        single,
        json_items,
        report::ENERGY_CSV_HEADER,
        csv_rows,
        text_lines,
        out,
    )?;
    Ok(EXIT_OK)
}

fn cmd_spectrum(
    source: &SourceArgs,
    format: ReportFormat,
    tol: f64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (records, single) = load_records(source)?;
    let mut json_items = Vec::new();
    let mut csv_rows = Vec::new();
    let mut text_lines = Vec::new();
    for gs in &records {
        let r = energy_self_loop(gs)?;
        let clusters = cluster_spectrum(&r.spectrum, tol);
        let values: Vec<String> = r
            .spectrum
            .values()
            .iter()
            .map(|v| report::fmt_sig12(*v))
            .collect();
        let mut cluster_json = String::from("[");
        let mut cluster_text = Vec::new();
        for (i, &(v, m)) in clusters.pairs().iter().enumerate() {
            if i > 0 {
                cluster_json.push(',');
            }
            let _ = write!(
                cluster_json,
                "{{\"value\":{},\"multiplicity\":{}}}",
                report::fmt_sig12(v),
                m
            );
            cluster_text.push(format!("{} x{}", report::fmt_sig12(v), m));
        }
        cluster_json.push(']');
        json_items.push(format!(
            "{{\"n\":{},\"alpha\":{},\"shift\":{},\"spectrum\":[{}],\"clusters\":{}}}",
            r.n,
            r.alpha,
            report::fmt_shift(r.shift),
            values.join(","),
            cluster_json
        ));
        csv_rows.push(format!(
            "{},{},{},{}",
            r.n,
            r.alpha,
            report::fmt_shift(r.shift),
            values.join(";")
        ));
        text_lines.push(format!(
            "n={} alpha={} shift={} spectrum=[{}] clusters=[{}]",
            r.n,
            r.alpha,
            report::fmt_shift(r.shift),
            values.join(", "),
            cluster_text.join(", ")
        ));
    }
    emit_single_or_array(
        format,
        single,
        json_items,
        "n,alpha,shift,eigenvalues",
        csv_rows,
        text_lines,
        out,
    )?;
    Ok(EXIT_OK)
}

fn witness_json(n: usize, cert: &WitnessCertificate) -> String {
    format!(
        "{{\"n\":{},\"alpha\":{},\"route\":\"{}\",\"loops\":\"{}\",\"e_base\":{},\"e_loops\":{}}}",
        n,
        cert.loop_set.alpha(),
        cert.route.as_str(),
        cert.loop_set.to_hex(n),
        report::fmt_sig12(cert.e_base),
        report::fmt_sig12(cert.e_loops)
    )
}

fn cmd_witness(
    source: &SourceArgs,
    format: ReportFormat,
    tol: f64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (records, single) = load_records(source)?;
    let mut json_items = Vec::new();
    let mut csv_rows = Vec::new();
    let mut text_lines = Vec::new();
    for gs in &records {
        let g = gs.base();
        let cert = verify::conjecture_witness_with_tol(g, tol)?;
        json_items.push(witness_json(g.order(), &cert));
        csv_rows.push(format!(
            "{},{},{},{},{},{}",
            g.order(),
            cert.loop_set.alpha(),
            cert.route.as_str(),
            cert.loop_set.to_hex(g.order()),
            report::fmt_sig12(cert.e_base),
            report::fmt_sig12(cert.e_loops)
        ));
        text_lines.push(format!(
            "n={} route={} loops={} alpha={} e_base={} e_loops={}",
            g.order(),
            cert.route.as_str(),
            cert.loop_set.to_hex(g.order()),
            cert.loop_set.alpha(),
            report::fmt_sig12(cert.e_base),
            report::fmt_sig12(cert.e_loops)
        ));
    }
    emit_single_or_array(
        format,
        single,
        json_items,
        "n,alpha,route,loops,e_base,e_loops",
        csv_rows,
        text_lines,
        out,
    )?;
    Ok(EXIT_OK)
}

fn summary_failures_json(summary: &CheckSummary) -> String {
    let mut out = String::from("[");
    for (i, f) in summary.failures().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"input\":\"{}\",\"detail\":\"{}\"}}",
            report::json_escape(&f.input),
            report::json_escape(&f.detail)
        );
    }
    out.push(']');
    out
}

fn cmd_family(
    partner: FamilyPartner,
    n: usize,
    variant: Option<FamilyVariant>,
    format: ReportFormat,
    tol: f64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if let Some(variant) = variant {
        let instance = build_family(variant, partner, n)?;
        let r = energy_self_loop(&instance.graph)?;
        let deviation = (r.energy - instance.predicted_energy).abs();
        let ok = deviation <= tol;
        match format {
            ReportFormat::Json => writeln!(
                out,
                "{{\"variant\":\"{}\",\"partner\":\"{}\",\"n\":{},\"order\":{},\"alpha\":{},\
                 \"energy\":{},\"predicted_energy\":{},\"matches_prediction\":{}}}",
                instance.variant.as_str(),
                partner.as_str(),
                n,
                instance.graph.order(),
                instance.graph.alpha(),
                report::fmt_sig12(r.energy),
                report::fmt_sig12(instance.predicted_energy),
                ok
            )?,
            ReportFormat::Csv => {
                writeln!(out, "variant,partner,n,order,alpha,energy,predicted_energy,matches_prediction")?;
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    instance.variant.as_str(),
                    partner.as_str(),
                    n,
                    instance.graph.order(),
                    instance.graph.alpha(),
                    report::fmt_sig12(r.energy),
                    report::fmt_sig12(instance.predicted_energy),
                    ok
                )?;
            }
            ReportFormat::Text => writeln!(
                out,
                "variant={} partner={} n={} order={} alpha={} energy={} predicted={} matches_prediction={}",
                instance.variant.as_str(),
                partner.as_str(),
                n,
                instance.graph.order(),
                instance.graph.alpha(),
                report::fmt_sig12(r.energy),
                report::fmt_sig12(instance.predicted_energy),
                ok
            )?,
        }
        return Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED });
    }

    let pair = verify_family_pair_with_tol(partner, n, tol)?;
    let ok = pair.summary.all_passed();
    match format {
        ReportFormat::Json => writeln!(
            out,
            "{{\"partner\":\"{}\",\"n\":{},\"energy\":{},\"predicted_energy\":{},\"equal\":{},\
             \"total\":{},\"passed\":{},\"failures\":{}}}",
            partner.as_str(),
            n,
            report::fmt_sig12(pair.energy_first),
            report::fmt_sig12(pair.predicted_energy),
            pair.equal(),
            pair.summary.total(),
            pair.summary.passed(),
            summary_failures_json(&pair.summary)
        )?,
        ReportFormat::Csv => {
            writeln!(out, "partner,n,energy,predicted_energy,equal,total,passed,failed")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                partner.as_str(),
                n,
                report::fmt_sig12(pair.energy_first),
                report::fmt_sig12(pair.predicted_energy),
                pair.equal(),
                pair.summary.total(),
                pair.summary.passed(),
                pair.summary.failed()
            )?;
        }
        ReportFormat::Text => {
            writeln!(
                out,
                "partner={} n={} energy={} predicted={} equal={} checks={}/{} passed",
                partner.as_str(),
                n,
                report::fmt_sig12(pair.energy_first),
                report::fmt_sig12(pair.predicted_energy),
                pair.equal(),
                pair.summary.passed(),
                pair.summary.total()
            )?;
            for f in pair.summary.failures() {
                writeln!(out, "  FAIL {} — {}", f.input, f.detail)?;
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_verify_all(
    n_max: Option<usize>,
    input: Option<PathBuf>,
    format: ReportFormat,
    tol: f64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut labeled: Vec<(String, CheckSummary)> = Vec::new();
    match (n_max, input) {
        (Some(n_max), None) => {
            if !(2..=6).contains(&n_max) {
                return Err(Failure::usage(format!(
                    "--n-max must be between 2 and 6, got {n_max}"
                )));
            }
            for n in 2..=n_max {
                let summary = exhaustive_conjecture_check_with_tol(n, tol)?;
                labeled.push((format!("graphs on {n} vertices"), summary));
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)?;
            let records = graph6::parse_corpus(&text)?;
            let graphs: Vec<_> = records.iter().map(|r| r.base().clone()).collect();
            let summary = verify::corpus_conjecture_check(&graphs, tol);
            labeled.push(("graphs from corpus".to_string(), summary));
        }
        _ => {
            return Err(Failure::usage(
                "exactly one of --n-max or --input is required",
            ))
        }
    }

    let mut merged = CheckSummary::new();
    for (_, summary) in &labeled {
        merged.merge(summary.clone());
    }
    match format {
        ReportFormat::Json => writeln!(out, "{}", report::summary_json(&merged))?,
        ReportFormat::Csv => {
            writeln!(out, "{}", report::SUMMARY_CSV_HEADER)?;
            writeln!(out, "{}", report::summary_csv_row(&merged))?;
        }
        ReportFormat::Text => {
            for (label, summary) in &labeled {
                writeln!(out, "{}", report::summary_text(summary, label))?;
            }
        }
    }
    Ok(if merged.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
