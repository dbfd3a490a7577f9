//! Multi-command interface over the bifiltered-complex engines, with
//! machine-readable output for pipelines and golden tests.
//!
//! Exit codes: 0 on success, 1 on a domain or validation error (the
//! diagnostic names the failing contract), 2 on a usage error. All
//! behavior is controlled by flags; there are no configuration files or
//! environment variables.

mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use openbook_core::cfk::{BifilteredComplex, Hand, RegionSpec};
use openbook_core::contact::{self, Certificate, KernelEvidence, Status};
use openbook_core::error::Error;
use openbook_core::farey::{self, FareyPath, Slope};
use openbook_core::heegaard::{self, PeriodicDomainModel, Rational};
use openbook_core::surgery::{self, canonical_m, spinc_range, spinc_window};

use report::{error_json, ranks_text, ranks_value, Report};

#[derive(Parser)]
#[command(
    name = "openbook",
    version,
    about = "Surgery homology, contact-invariant criteria, and Farey surgery planning for bifiltered knot complexes"
)]
struct Cli {
    /// Canonical JSON output (UTF-8, sorted keys)
    #[arg(long, global = true)]
    json: bool,
    /// Enable cross-check recomputations
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bifiltered complex files: validation, slice homology, the corpus
    #[command(subcommand)]
    Cfk(CfkCmd),
    /// Floer homology of large integer surgeries and the core knot
    #[command(subcommand)]
    Surgery(SurgeryCmd),
    /// Contact-invariant criteria
    #[command(subcommand)]
    Contact(ContactCmd),
    /// Farey tessellation arithmetic and surgery planning
    #[command(subcommand)]
    Farey(FareyCmd),
    /// Periodic-domain gradings and winding arithmetic
    #[command(subcommand)]
    Heegaard(HeegaardCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum HandArg {
    Right,
    Left,
}

impl From<HandArg> for Hand {
    fn from(h: HandArg) -> Hand {
        match h {
            HandArg::Right => Hand::Right,
            HandArg::Left => Hand::Left,
        }
    }
}

#[derive(Subcommand)]
enum CfkCmd {
    /// Parse a cfk v1 file and check every invariant
    Validate { file: PathBuf },
    /// Knot Floer homology ranks per Alexander grading
    Hfk { file: PathBuf },
    /// Genus and top-slice fiberedness
    Genus { file: PathBuf },
    /// Emit a torus-knot staircase complex in cfk v1 format
    Staircase {
        /// Staircase parameter: the complex of the (2, 2k+1) torus knot
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum)]
        hand: HandArg,
        /// Write the document here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SurgeryCmd {
    /// Homology of one Spin^c slot of n-surgery
    Hf {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        file: PathBuf,
    },
    /// Knot Floer table of the surgery core
    CoreTable {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        file: PathBuf,
    },
    /// Rank-equality certificate for the surgered manifold
    Lspace {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum ContactCmd {
    /// Top-slice connecting homomorphism and invariant nonvanishing
    Delta { file: PathBuf },
    /// Verdict for p/q surgery on the binding
    Verdict {
        /// Surgery slope P/Q (positive, in lowest terms)
        #[arg(long, value_parser = parse_raw_fraction, allow_hyphen_values = true)]
        slope: (i64, i64),
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum FareyCmd {
    /// Legendrian surgery plan from an integer slope to a rational one
    Path {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        from: i64,
        #[arg(long, value_parser = parse_slope)]
        to: Slope,
    },
    /// Slam-dunk conversion of p/q surgery through n-surgery
    Slamdunk {
        #[arg(long, value_parser = parse_slope, allow_hyphen_values = true)]
        slope: Slope,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Subcommand)]
enum HeegaardCmd {
    /// Relative Alexander grading of two generators of a domain model
    Grading {
        file: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Winding-region distinctness for parameters a, q
    Winding {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        a: i64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        q: i64,
    },
}

fn parse_slope(s: &str) -> Result<Slope, String> {
    s.parse::<Slope>().map_err(|e| e.to_string())
}

fn parse_raw_fraction(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid integer '{t}'"))
    };
    match s.split_once('/') {
        Some((p, q)) => Ok((parse(p)?, parse(q)?)),
        None => Ok((parse(s)?, 1)),
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = command_label(&cli.command);
    let json = cli.json;
    match run(&cli) {
        Ok(report) => {
            report.print(json);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            if json {
                println!("{}", error_json(&command, e.kind(), &e.to_string()));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn command_label(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Cfk(c) => match c {
            CfkCmd::Validate { .. } => "cfk validate",
            CfkCmd::Hfk { .. } => "cfk hfk",
            CfkCmd::Genus { .. } => "cfk genus",
            CfkCmd::Staircase { .. } => "cfk staircase",
        },
        Cmd::Surgery(c) => match c {
            SurgeryCmd::Hf { .. } => "surgery hf",
            SurgeryCmd::CoreTable { .. } => "surgery core-table",
            SurgeryCmd::Lspace { .. } => "surgery lspace",
        },
        Cmd::Contact(c) => match c {
            ContactCmd::Delta { .. } => "contact delta",
            ContactCmd::Verdict { .. } => "contact verdict",
        },
        Cmd::Farey(c) => match c {
            FareyCmd::Path { .. } => "farey path",
            FareyCmd::Slamdunk { .. } => "farey slamdunk",
        },
        Cmd::Heegaard(c) => match c {
            HeegaardCmd::Grading { .. } => "heegaard grading",
            HeegaardCmd::Winding { .. } => "heegaard winding",
        },
    }
    .to_string()
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read '{}': {e}", path.display())))
}

fn load_complex(path: &PathBuf) -> Result<BifilteredComplex, Failure> {
    Ok(BifilteredComplex::parse(&read_file(path)?)?)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Cmd::Cfk(c) => run_cfk(c, cli),
        Cmd::Surgery(c) => run_surgery(c, cli),
        Cmd::Contact(c) => run_contact(c, cli),
        Cmd::Farey(c) => run_farey(c, cli),
        Cmd::Heegaard(c) => run_heegaard(c, cli),
    }
}

fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn slopes_value(slopes: &[Slope]) -> Value {
    Value::Array(
        slopes
            .iter()
            .map(|s| Value::String(s.to_string()))
            .collect(),
    )
}

fn slopes_text(slopes: &[Slope]) -> String {
    slopes
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn gate_value(genus: i64, n: i64) -> Value {
    json!({
        "genus": genus,
        "n": n,
        "threshold": 2 * genus,
        "ok": n >= 2 * genus,
    })
}

fn spinc_conventions(report: &mut Report, n: i64) {
    let window = spinc_window(n);
    let display = spinc_range(n);
    report.result("spinc_window", json!(window));
    report.result("spinc_range_display", json!(display));
    if window.len() != display.len() {
        report.warn(format!(
            "displayed Spin^c range has {} labels for n = {n}; computations use the length-{n} window",
            display.len()
        ));
    }
}

fn kernel_evidence_value(e: &KernelEvidence) -> Value {
    json!({
        "type": "kernel",
        "domain_rank": e.domain_rank,
        "map_rank": e.map_rank,
        "kernel_rank": e.kernel_rank,
        "witness": e.witness.clone().map(Value::from).unwrap_or(Value::Null),
    })
}

fn path_value(path: &FareyPath) -> Value {
    json!({
        "back_slopes": slopes_value(&path.back_slopes),
        "surgeries": slopes_value(&path.surgeries),
    })
}

fn certificate_value(c: &Certificate) -> Value {
    match c {
        Certificate::Kernel(e) => kernel_evidence_value(e),
        Certificate::LegendrianPlan { base, path } => json!({
            "type": "legendrian_plan",
            "base": kernel_evidence_value(base),
            "path": path_value(path),
        }),
        Certificate::Reason(reason) => json!({
            "type": "reason",
            "reason": reason,
        }),
    }
}

fn run_cfk(cmd: &CfkCmd, cli: &Cli) -> Result<Report, Failure> {
    match cmd {
        CfkCmd::Validate { file } => {
            let mut report = Report::new("cfk validate");
            report.input("file", json!(file.display().to_string()));
            let complex = load_complex(file)?;
            let has_maslov = complex.generators().iter().all(|g| g.maslov.is_some());
            report
                .result("status", json!("valid"))
                .result("generators", json!(complex.generators().len()))
                .result("arrows", json!(complex.arrows().len()))
                .result("maslov", json!(has_maslov));
            report
                .line(format!("file: {}", file.display()))
                .line("status: valid")
                .line(format!("generators: {}", complex.generators().len()))
                .line(format!("arrows: {}", complex.arrows().len()));
            Ok(report)
        }
        CfkCmd::Hfk { file } => {
            let mut report = Report::new("cfk hfk");
            report.input("file", json!(file.display().to_string()));
            let complex = load_complex(file)?;
            let ranks = complex.hfk_ranks();
            report.result("hfk_ranks", ranks_value(&ranks));
            report.line(format!("hfk_ranks: {}", ranks_text(&ranks)));
            Ok(report)
        }
        CfkCmd::Genus { file } => {
            let mut report = Report::new("cfk genus");
            report.input("file", json!(file.display().to_string()));
            let complex = load_complex(file)?;
            let genus = complex.genus()?;
            let fibered = complex.is_fibered_like()?;
            report
                .result("genus", json!(genus))
                .result("fibered_like", json!(fibered));
            report
                .line(format!("genus: {genus}"))
                .line(format!("fibered_like: {fibered}"));
            Ok(report)
        }
        CfkCmd::Staircase { k, hand, out } => {
            let mut report = Report::new("cfk staircase");
            report
                .input("k", json!(k))
                .input("hand", json!(Hand::from(*hand).to_string()));
            let complex = BifilteredComplex::staircase(*k, Hand::from(*hand));
            let document = complex.to_cfk_v1();
            if cli.oracle {
                BifilteredComplex::parse(&document)?;
            }
            match out {
                Some(path) => {
                    std::fs::write(path, &document).map_err(|e| {
                        Failure::Usage(format!("cannot write '{}': {e}", path.display()))
                    })?;
                    report.input("out", json!(path.display().to_string()));
                    report.result("document", json!(document));
                    report.line(format!("wrote {}", path.display()));
                }
                None => {
                    report.result("document", json!(document));
                    for line in document.lines() {
                        report.line(line);
                    }
                }
            }
            Ok(report)
        }
    }
}

fn run_surgery(cmd: &SurgeryCmd, cli: &Cli) -> Result<Report, Failure> {
    match cmd {
        SurgeryCmd::Hf { n, m, file } => {
            let mut report = Report::new("surgery hf");
            report
                .input("file", json!(file.display().to_string()))
                .input("n", json!(n))
                .input("m", json!(m));
            let complex = load_complex(file)?;
            let genus = surgery::validity_gate(&complex, *n)?;
            let ranks = surgery::hf_hat_surgery(&complex, *n, *m)?;
            let total: usize = ranks.values().sum();
            let mc = canonical_m(*m, *n);
            report
                .result("gate", gate_value(genus, *n))
                .result("m_canonical", json!(mc))
                .result("ranks_by_level", ranks_value(&ranks))
                .result("total", json!(total));
            spinc_conventions(&mut report, *n);
            report
                .line(format!(
                    "gate: genus={genus} n={n} threshold={} ok",
                    2 * genus
                ))
                .line(format!("m: {m} (canonical {mc})"))
                .line(format!("ranks_by_level: {}", ranks_text(&ranks)))
                .line(format!("total: {total}"));
            if cli.oracle {
                let oracle = surgery::hook_rank_oracle(&complex, mc)?;
                if oracle != total {
                    return Err(Error::Validation(format!(
                        "oracle cross-check mismatch at m = {mc}: direct {total}, truncation {oracle}"
                    ))
                    .into());
                }
                report.result("oracle_total", json!(oracle));
                report.result("oracle_agrees", json!(true));
                report.line(format!("oracle_total: {oracle} (agrees)"));
            }
            Ok(report)
        }
        SurgeryCmd::CoreTable { n, file } => {
            let mut report = Report::new("surgery core-table");
            report
                .input("file", json!(file.display().to_string()))
                .input("n", json!(n));
            let complex = load_complex(file)?;
            let genus = surgery::validity_gate(&complex, *n)?;
            let table = surgery::core_hfk_table(&complex, *n)?;
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "m": r.m,
                        "rank_sub": r.rank_sub,
                        "rank_quot": r.rank_quot,
                        "rel_a_sub": r.rel_a_sub,
                        "rel_a_quot": r.rel_a_quot,
                    })
                })
                .collect();
            report
                .result("gate", gate_value(genus, *n))
                .result("rows", Value::Array(rows))
                .result("total_rank", json!(table.total_rank()));
            spinc_conventions(&mut report, *n);
            report.line(format!(
                "gate: genus={genus} n={n} threshold={} ok",
                2 * genus
            ));
            for r in &table.rows {
                report.line(format!(
                    "m={} rank_sub={} rank_quot={} rel_a_sub={} rel_a_quot={}",
                    r.m, r.rank_sub, r.rank_quot, r.rel_a_sub, r.rel_a_quot
                ));
            }
            report.line(format!("total_rank: {}", table.total_rank()));
            if cli.oracle {
                let mut hooks = BTreeMap::new();
                for m in spinc_window(*n) {
                    let direct = surgery::hook_rank(&complex, m);
                    let oracle = surgery::hook_rank_oracle(&complex, m)?;
                    if direct != oracle {
                        return Err(Error::Validation(format!(
                            "oracle cross-check mismatch at m = {m}: direct {direct}, truncation {oracle}"
                        ))
                        .into());
                    }
                    hooks.insert(m, direct);
                }
                report.result("oracle_hook_ranks", ranks_value(&hooks));
                report.result("oracle_agrees", json!(true));
                report.line(format!(
                    "oracle_hook_ranks: {} (agrees)",
                    ranks_text(&hooks)
                ));
            }
            Ok(report)
        }
        SurgeryCmd::Lspace { n, file } => {
            let mut report = Report::new("surgery lspace");
            report
                .input("file", json!(file.display().to_string()))
                .input("n", json!(n));
            let complex = load_complex(file)?;
            let genus = surgery::validity_gate(&complex, *n)?;
            let certificate = surgery::lspace_certificate(&complex, *n)?;
            let table = surgery::core_hfk_table(&complex, *n)?;
            let surgery_sum: usize = spinc_window(*n)
                .into_iter()
                .map(|m| surgery::hook_rank(&complex, m))
                .sum();
            report
                .result("gate", gate_value(genus, *n))
                .result("sum_core_hfk", json!(table.total_rank()))
                .result("sum_surgery_hf", json!(surgery_sum))
                .result("lspace_certificate", json!(certificate));
            spinc_conventions(&mut report, *n);
            report
                .line(format!(
                    "gate: genus={genus} n={n} threshold={} ok",
                    2 * genus
                ))
                .line(format!("sum_core_hfk: {}", table.total_rank()))
                .line(format!("sum_surgery_hf: {surgery_sum}"))
                .line(format!("lspace_certificate: {certificate}"));
            if cli.oracle {
                let oracle_sum: usize = spinc_window(*n)
                    .into_iter()
                    .map(|m| surgery::hook_rank_oracle(&complex, m))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .sum();
                if oracle_sum != surgery_sum {
                    return Err(Error::Validation(format!(
                        "oracle cross-check mismatch: direct sum {surgery_sum}, truncation sum {oracle_sum}"
                    ))
                    .into());
                }
                report.result("oracle_sum_surgery_hf", json!(oracle_sum));
                report.result("oracle_agrees", json!(true));
                report.line(format!("oracle_sum_surgery_hf: {oracle_sum} (agrees)"));
            }
            Ok(report)
        }
    }
}

fn run_contact(cmd: &ContactCmd, cli: &Cli) -> Result<Report, Failure> {
    match cmd {
        ContactCmd::Delta { file } => {
            let mut report = Report::new("contact delta");
            report.input("file", json!(file.display().to_string()));
            let complex = load_complex(file)?;
            let delta = contact::delta_star(&complex)?;
            let vertical = complex.extract(RegionSpec::Vertical);
            let witness: Option<Vec<String>> = delta
                .map
                .kernel_witnesses()
                .first()
                .map(|cycle| vertical.cycle_labels(cycle));
            let nonzero = delta.kernel_rank > 0;
            report
                .result("genus", json!(delta.genus))
                .result("domain_rank", json!(delta.map.quotient_classes.len()))
                .result("map_rank", json!(delta.map.matrix.rank()))
                .result("kernel_rank", json!(delta.kernel_rank))
                .result("contact_invariant_nonzero", json!(nonzero))
                .result(
                    "witness",
                    witness.clone().map(Value::from).unwrap_or(Value::Null),
                );
            report
                .line(format!("genus: {}", delta.genus))
                .line(format!("domain_rank: {}", delta.map.quotient_classes.len()))
                .line(format!("map_rank: {}", delta.map.matrix.rank()))
                .line(format!("kernel_rank: {}", delta.kernel_rank))
                .line(format!("contact_invariant_nonzero: {nonzero}"));
            if let Some(w) = witness {
                report.line(format!("witness: {}", w.join(" ")));
            }
            if cli.oracle {
                // The horizontal criterion agrees with the vertical one on
                // flip-symmetric complexes; rank-level symmetry can hold
                // without the chain-level flip, so a mismatch is reported
                // rather than fatal.
                if complex.check_flip_symmetry() {
                    let n = 2 * delta.genus.max(1);
                    let core = contact::core_contact_nonzero(&complex, n)?;
                    let agrees = (core.status == Status::Nonvanishing) == nonzero;
                    report.result("oracle_core_status", json!(core.status.to_string()));
                    report.result("oracle_agrees", json!(agrees));
                    report.line(format!(
                        "oracle_core_status: {} ({})",
                        core.status,
                        if agrees { "agrees" } else { "disagrees" }
                    ));
                    if !agrees {
                        report.warn(
                            "vertical and horizontal criteria disagree; the input is rank-level flip symmetric only",
                        );
                    }
                } else {
                    report.warn("flip symmetry fails; horizontal cross-check skipped");
                }
            }
            Ok(report)
        }
        ContactCmd::Verdict { slope, file } => {
            let (p, q) = *slope;
            let mut report = Report::new("contact verdict");
            report
                .input("file", json!(file.display().to_string()))
                .input("slope", json!(format!("{p}/{q}")));
            let complex = load_complex(file)?;
            let verdict = contact::slope_verdict(&complex, p, q)?;
            let genus = complex.genus()?;
            let in_range = p >= 2 * genus * q;
            report
                .result(
                    "gate",
                    json!({
                        "genus": genus,
                        "min_slope": format!("{}/1", 2 * genus),
                        "in_range": in_range,
                    }),
                )
                .result("status", json!(verdict.status.to_string()))
                .result("certificate", certificate_value(&verdict.certificate));
            report
                .line(format!(
                    "gate: 2*genus={} slope={p}/{q} {}",
                    2 * genus,
                    if in_range { "ok" } else { "below" }
                ))
                .line(format!("status: {}", verdict.status));
            match &verdict.certificate {
                Certificate::Kernel(e) => {
                    report.line(format!(
                        "certificate: kernel domain_rank={} map_rank={} kernel_rank={}",
                        e.domain_rank, e.map_rank, e.kernel_rank
                    ));
                    if let Some(w) = &e.witness {
                        report.line(format!("witness: {}", w.join(" ")));
                    }
                }
                Certificate::LegendrianPlan { base, path } => {
                    report.line(format!(
                        "certificate: legendrian_plan base_kernel_rank={}",
                        base.kernel_rank
                    ));
                    report.line(format!("back_slopes: {}", slopes_text(&path.back_slopes)));
                    report.line(format!("surgeries: {}", slopes_text(&path.surgeries)));
                }
                Certificate::Reason(reason) => {
                    report.line(format!("certificate: reason \"{reason}\""));
                }
            }
            Ok(report)
        }
    }
}

fn run_farey(cmd: &FareyCmd, _cli: &Cli) -> Result<Report, Failure> {
    match cmd {
        FareyCmd::Path { from, to } => {
            let mut report = Report::new("farey path");
            report
                .input("from", json!(from))
                .input("to", json!(to.to_string()));
            let path = farey::surgery_path(*from, *to)?;
            report
                .result("back_slopes", slopes_value(&path.back_slopes))
                .result("surgeries", slopes_value(&path.surgeries));
            report
                .line(format!("from: {from}/1"))
                .line(format!("target: {to}"))
                .line(format!("back_slopes: {}", slopes_text(&path.back_slopes)))
                .line(format!("surgeries: {}", slopes_text(&path.surgeries)));
            Ok(report)
        }
        FareyCmd::Slamdunk { slope, n } => {
            let mut report = Report::new("farey slamdunk");
            report
                .input("slope", json!(slope.to_string()))
                .input("n", json!(n));
            let meridian = farey::slam_dunk(*slope, *n)?;
            report.result("meridian_surgery", json!(meridian.to_string()));
            report
                .line(format!("slope: {slope}"))
                .line(format!("n: {n}"))
                .line(format!("meridian_surgery: {meridian}"));
            Ok(report)
        }
    }
}

fn run_heegaard(cmd: &HeegaardCmd, _cli: &Cli) -> Result<Report, Failure> {
    match cmd {
        HeegaardCmd::Grading { file, x, y } => {
            let mut report = Report::new("heegaard grading");
            report
                .input("file", json!(file.display().to_string()))
                .input("x", json!(x))
                .input("y", json!(y));
            let domain = PeriodicDomainModel::parse(&read_file(file)?)?;
            let difference = domain.alexander_difference(x, y)?;
            let integral = difference.is_integer();
            report
                .result("alexander_difference", json!(rational_string(&difference)))
                .result("integral", json!(integral));
            report
                .line(format!("x: {x}"))
                .line(format!("y: {y}"))
                .line(format!(
                    "alexander_difference: {}",
                    rational_string(&difference)
                ))
                .line(format!("integral: {integral}"));
            if !integral {
                report.warn(
                    "non-integer grading difference: the model does not present a domain in an integral fiber class",
                );
            }
            Ok(report)
        }
        HeegaardCmd::Winding { a, q } => {
            let mut report = Report::new("heegaard winding");
            report.input("a", json!(a)).input("q", json!(q));
            let check = heegaard::winding_distinct(*a, *q);
            let witness = check.witness.map(|(rl, rm)| {
                let mut m = Map::new();
                m.insert("r_lambda".into(), json!(rl));
                m.insert("r_mu".into(), json!(rm));
                Value::Object(m)
            });
            report
                .result("distinct", json!(check.distinct))
                .result("witness", witness.unwrap_or(Value::Null));
            report
                .line(format!("a: {a}"))
                .line(format!("q: {q}"))
                .line(format!("distinct: {}", check.distinct));
            if let Some((rl, rm)) = check.witness {
                report.line(format!("witness: r_lambda={rl} r_mu={rm}"));
            }
            Ok(report)
        }
    }
}
