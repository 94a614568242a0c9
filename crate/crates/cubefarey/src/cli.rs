//! Command-line front end: orbit expansion, periodicity reports, Pisot
//! queries, resumable surveys, stepped-surface exports, and continued
//! fraction printing. Exit codes: 0 success, 2 invalid input, 3 step cap
//! exceeded.

use crate::analysis::{
    self, detect_period, is_pisot, period_matrix, PeriodResult, RowStatus, SurveyRow,
};
use crate::contfrac::{digits_to_cfword, reduce_cfword, reduce_periodic, CfWord};
use crate::error::{Error, Result};
use crate::farey::{expand, Digit, PointPair, ValueExponent};
use crate::numberfield::{CubicField, FieldDescription, Rat};
use crate::ratstr;
use crate::stepped::{
    export_json, export_obj, export_svg, grow_from_seed, Direction, Seed, SvgOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

pub const CACHE_DIR_ENV: &str = "CUBEFAREY_CACHE_DIR";

const EXIT_OK: i32 = 0;
const EXIT_INVALID: i32 = 2;
const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cubefarey",
    version,
    about = "Exact two-dimensional slow continued fractions over real cubic fields"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Weight exponent p/q.
    #[arg(long = "r", global = true, default_value = "5/2")]
    r: ValueExponent,
    /// Step cap for periodicity detection.
    #[arg(long, global = true, default_value_t = analysis::DEFAULT_CAP)]
    cap: usize,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where a command supports several.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Worker threads for surveys.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
    Obj,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the expansion and print its digits.
    Expand(ExpandArgs),
    /// Detect the period of an orbit and report its invariants.
    Period(PointCmd),
    /// Decide whether a monic integer cubic is a Pisot minimal polynomial.
    Pisot(PisotArgs),
    /// Sweep a family of inputs and tabulate periods, heights and verdicts.
    Survey(SurveyArgs),
    /// Grow a stepped-surface patch along an orbit and export it.
    Stepped(SteppedArgs),
    /// Print the continued-fraction word of an orbit.
    Cf(CfArgs),
    /// Verify the built-in matrix identities.
    Selftest,
}

/// Input point selection shared by the orbit commands.
#[derive(Args, Debug)]
struct PointArgs {
    /// Builtin family: "purecubic:m", "p2:m", or "nt-basis:c0,c1,c2".
    #[arg(long, conflicts_with_all = ["field", "alpha", "beta"])]
    family: Option<String>,
    /// Minimal polynomial coefficients "c0,c1,c2" of x^3+c2x^2+c1x+c0.
    #[arg(long, allow_hyphen_values = true, requires_all = ["alpha", "beta"])]
    field: Option<String>,
    /// 1-based index of the real root in ascending order; largest if omitted.
    #[arg(long, requires = "field")]
    root: Option<usize>,
    /// First coordinate "a0,a1,a2" in the power basis.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Second coordinate "b0,b1,b2" in the power basis.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Step count, or "auto" to run until the orbit repeats.
    #[arg(long, default_value = "auto")]
    steps: String,
    /// Also emit the convergent matrices in JSON output.
    #[arg(long)]
    convergents: bool,
}

#[derive(Args, Debug)]
struct PointCmd {
    #[command(flatten)]
    point: PointArgs,
}

#[derive(Args, Debug)]
struct PisotArgs {
    /// Coefficients "c0,c1,c2" of x^3+c2x^2+c1x+c0.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// Range "lo:hi" of radicands for the pure cubic survey.
    #[arg(long, conflicts_with = "family_t")]
    purecubic: Option<String>,
    /// Coefficient bound for the polynomial family survey.
    #[arg(long = "family-t")]
    family_t: Option<i64>,
}

#[derive(Args, Debug)]
struct SteppedArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Digit count to grow through, or "auto" for one full cycle.
    #[arg(long, default_value = "auto")]
    steps: String,
    /// Seed patch: faces at the unit vectors or at the origin.
    #[arg(long, value_enum, default_value_t = SeedArg::Unit)]
    seed: SeedArg,
    /// Override the three kind fills, "#rrggbb,#rrggbb,#rrggbb".
    #[arg(long)]
    fills: Option<String>,
    /// Draw a marker at the projected origin.
    #[arg(long)]
    origin_marker: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeedArg {
    Unit,
    Origin,
}

#[derive(Args, Debug)]
struct CfArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Print the reduced normal form instead of the raw letter word.
    #[arg(long)]
    reduce: bool,
    /// Use only the first N digits and print a finite word.
    #[arg(long)]
    steps: Option<usize>,
}

/// Parses arguments from the process environment and runs the selected
/// command, returning the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build();
            match pool {
                Ok(pool) => pool.install(|| execute(&cli)),
                Err(e) => Err(Error::invalid(format!("worker pool: {e}"))),
            }
        }
        None => execute(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INVALID
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Expand(args) => cmd_expand(cli, args),
        Command::Period(args) => cmd_period(cli, args),
        Command::Pisot(args) => cmd_pisot(args),
        Command::Survey(args) => cmd_survey(cli, args),
        Command::Stepped(args) => cmd_stepped(cli, args),
        Command::Cf(args) => cmd_cf(cli, args),
        Command::Selftest => cmd_selftest(),
    }
}

// ---------------------------------------------------------------------------
// Point resolution.
// ---------------------------------------------------------------------------

fn parse_int_triple(s: &str) -> Result<[BigInt; 3]> {
    let rats = ratstr::parse_triple(s)?;
    let mut out = [BigInt::from(0), BigInt::from(0), BigInt::from(0)];
    for (slot, r) in out.iter_mut().zip(rats) {
        if !r.denom().is_one() {
            return Err(Error::invalid(format!("{s:?} must have integer entries")));
        }
        *slot = r.numer().clone();
    }
    Ok(out)
}

fn resolve_family(spec: &str) -> Result<PointPair> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("family {spec:?} must look like name:params")))?;
    match kind {
        "purecubic" => {
            let m: u64 = rest
                .parse()
                .map_err(|_| Error::invalid(format!("bad radicand {rest:?}")))?;
            analysis::pure_cubic_point(m)
        }
        "p2" => {
            let m: i64 = rest
                .parse()
                .map_err(|_| Error::invalid(format!("bad family index {rest:?}")))?;
            if m < 1 {
                return Err(Error::invalid("family index must be at least 1"));
            }
            let c = [BigInt::from(-1), BigInt::from(0), BigInt::from(-m)];
            analysis::family_point(&c)?
                .ok_or_else(|| Error::invalid("family constructor produced no point"))
        }
        "nt-basis" => {
            let c = parse_int_triple(rest)?;
            analysis::family_point(&c)?.ok_or_else(|| {
                Error::invalid("polynomial is reducible or has no positive dominant root")
            })
        }
        _ => Err(Error::invalid(format!("unknown family {kind:?}"))),
    }
}

fn resolve_point(args: &PointArgs) -> Result<PointPair> {
    if let Some(spec) = &args.family {
        return resolve_family(spec);
    }
    let (field_str, alpha_str, beta_str) = match (&args.field, &args.alpha, &args.beta) {
        (Some(f), Some(a), Some(b)) => (f, a, b),
        _ => {
            return Err(Error::invalid(
                "supply either --family or all of --field, --alpha, --beta",
            ))
        }
    };
    let coeffs = ratstr::parse_triple(field_str)?;
    let field = match args.root {
        Some(k) => CubicField::kth_real_root(coeffs, k)?,
        None => CubicField::largest_real_root(coeffs)?,
    };
    let alpha = field.element(ratstr::parse_triple(alpha_str)?);
    let beta = field.element(ratstr::parse_triple(beta_str)?);
    PointPair::new(alpha, beta)
}

// ---------------------------------------------------------------------------
// Shared output plumbing.
// ---------------------------------------------------------------------------

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            std::io::stdout().flush()?;
            Ok(())
        }
    }
}

fn digit_list(digits: &[Digit], period: Option<(usize, usize)>) -> String {
    let mut line = String::new();
    for (k, d) in digits.iter().enumerate() {
        if k > 0 {
            line.push(' ');
        }
        let _ = write!(line, "{d}");
        if let Some((m, l)) = period {
            if k == m || k + 1 == m + l {
                line.push('*');
            }
        }
    }
    line
}

fn charpoly_string(cp: &[BigInt; 3]) -> String {
    format!("{};{};{}", cp[0], cp[1], cp[2])
}

/// Serialized orbit: the field, the exponent, exact coordinates, digits,
/// and optional period data and convergent matrices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitDocument {
    pub field: FieldDescription,
    pub r: String,
    pub alpha: [String; 3],
    pub beta: [String; 3],
    pub digits: Vec<Digit>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub preperiod: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub period: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub charpoly: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pisot: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub convergents: Option<Vec<[[String; 3]; 3]>>,
}

fn coord_strings(p: &PointPair) -> ([String; 3], [String; 3]) {
    let s = |c: &[Rat; 3]| {
        [
            ratstr::to_string(&c[0]),
            ratstr::to_string(&c[1]),
            ratstr::to_string(&c[2]),
        ]
    };
    (s(p.alpha.coords()), s(p.beta.coords()))
}

// ---------------------------------------------------------------------------
// expand / period.
// ---------------------------------------------------------------------------

fn cmd_expand(cli: &Cli, args: &ExpandArgs) -> Result<i32> {
    let point = resolve_point(&args.point)?;
    let (alpha, beta) = coord_strings(&point);
    let mut doc = OrbitDocument {
        field: point.field().description(),
        r: cli.r.to_string(),
        alpha,
        beta,
        digits: Vec::new(),
        preperiod: None,
        period: None,
        charpoly: None,
        pisot: None,
        convergents: None,
    };
    let mut exit = EXIT_OK;
    let mut summary = String::new();
    let convergent_docs = |digits: &[Digit]| -> Result<Vec<[[String; 3]; 3]>> {
        let e = expand(&point, cli.r, digits.len())?;
        Ok(e.convergents
            .iter()
            .map(|c| c.matrix().clone().map(|row| row.map(|v| v.to_string())))
            .collect())
    };
    if args.steps == "auto" {
        let res = detect_period(&point, cli.r, cli.cap)?;
        if res.found() {
            doc.digits = res.digits.clone();
            doc.preperiod = Some(res.preperiod);
            doc.period = Some(res.period);
            let _ = writeln!(
                summary,
                "digits: {}",
                digit_list(&res.digits, Some((res.preperiod, res.period)))
            );
            let _ = writeln!(summary, "preperiod: {}", res.preperiod);
            let _ = writeln!(summary, "period: {}", res.period);
        } else {
            doc.digits = res.digits.clone();
            let _ = writeln!(summary, "digits: {}", digit_list(&res.digits, None));
            let _ = writeln!(summary, "status: cap exceeded after {} steps", cli.cap);
            exit = EXIT_CAP;
        }
    } else {
        let n: usize = args
            .steps
            .parse()
            .map_err(|_| Error::invalid(format!("bad step count {:?}", args.steps)))?;
        let e = expand(&point, cli.r, n)?;
        doc.digits = e.digits.clone();
        let _ = writeln!(summary, "digits: {}", digit_list(&e.digits, None));
        let _ = writeln!(summary, "steps: {n}");
    }
    if args.convergents {
        doc.convergents = Some(convergent_docs(&doc.digits)?);
    }
    if cli.format == Some(OutputFormat::Json) {
        let mut json = serde_json::to_string_pretty(&doc)?;
        json.push('\n');
        write_output(&cli.out, &json)?;
    } else {
        write_output(&cli.out, &summary)?;
    }
    Ok(exit)
}

fn period_report(res: &PeriodResult) -> Result<(String, OrbitReportData)> {
    let pm = period_matrix(res)?;
    let cert = is_pisot(&pm.charpoly);
    let prim = analysis::is_primitive(&pm.matrix)?;
    let (dh0, dhf, rdhf) = analysis::orbit_heights(res);
    let mut s = String::new();
    let _ = writeln!(s, "status: periodic");
    let _ = writeln!(
        s,
        "digits: {}",
        digit_list(
            &res.digits[..res.preperiod + res.period],
            Some((res.preperiod, res.period))
        )
    );
    let _ = writeln!(s, "preperiod: {}", res.preperiod);
    let _ = writeln!(s, "period: {}", res.period);
    let _ = writeln!(s, "charpoly: {}", charpoly_string(&pm.charpoly));
    let _ = writeln!(s, "pisot: {}", if cert.is_pisot() { "yes" } else { "no" });
    let _ = writeln!(s, "primitive: {}", if prim { "yes" } else { "no" });
    let _ = writeln!(s, "dh0: {dh0}");
    let _ = writeln!(s, "dhF: {dhf}");
    let _ = writeln!(s, "rdhF: {}", ratstr::to_string(&rdhf));
    Ok((
        s,
        OrbitReportData {
            charpoly: pm.charpoly,
            pisot: cert.is_pisot(),
        },
    ))
}

struct OrbitReportData {
    charpoly: [BigInt; 3],
    pisot: bool,
}

fn cmd_period(cli: &Cli, args: &PointCmd) -> Result<i32> {
    let point = resolve_point(&args.point)?;
    let res = detect_period(&point, cli.r, cli.cap)?;
    if !res.found() {
        let msg = format!("status: cap exceeded after {} steps\n", cli.cap);
        write_output(&cli.out, &msg)?;
        return Ok(EXIT_CAP);
    }
    let (summary, data) = period_report(&res)?;
    if cli.format == Some(OutputFormat::Json) {
        let (alpha, beta) = coord_strings(&point);
        let doc = OrbitDocument {
            field: point.field().description(),
            r: cli.r.to_string(),
            alpha,
            beta,
            digits: res.digits[..res.preperiod + res.period].to_vec(),
            preperiod: Some(res.preperiod),
            period: Some(res.period),
            charpoly: Some(data.charpoly.map(|c| c.to_string())),
            pisot: Some(data.pisot),
            convergents: None,
        };
        let mut json = serde_json::to_string_pretty(&doc)?;
        json.push('\n');
        write_output(&cli.out, &json)?;
    } else {
        write_output(&cli.out, &summary)?;
    }
    Ok(EXIT_OK)
}

fn cmd_pisot(args: &PisotArgs) -> Result<i32> {
    let poly = parse_int_triple(&args.poly)?;
    let cert = is_pisot(&poly);
    println!("Pisot: {}", if cert.is_pisot() { "yes" } else { "no" });
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// survey.
// ---------------------------------------------------------------------------

const CSV_HEADER: [&str; 9] = [
    "m_or_poly",
    "status",
    "preperiod",
    "period_len",
    "charpoly(c0;c1;c2)",
    "pisot",
    "primitive",
    "dhF_max",
    "rdhF_max",
];

fn csv_record(row: &SurveyRow) -> [String; 9] {
    let opt = |o: &Option<String>| o.clone().unwrap_or_default();
    [
        row.key.clone(),
        row.status.to_string(),
        opt(&row.preperiod.map(|v| v.to_string())),
        opt(&row.period_len.map(|v| v.to_string())),
        opt(&row.charpoly.as_ref().map(charpoly_string)),
        opt(&row.pisot.map(|v| v.to_string())),
        opt(&row.primitive.map(|v| v.to_string())),
        opt(&row.dhf.map(|v| v.to_string())),
        opt(&row.rdhf.as_ref().map(ratstr::to_string)),
    ]
}

fn row_from_record(rec: &csv::StringRecord) -> Result<SurveyRow> {
    if rec.len() != CSV_HEADER.len() {
        return Err(Error::invalid("survey CSV row has wrong arity"));
    }
    let get = |i: usize| rec.get(i).unwrap_or_default().to_string();
    let non_empty = |s: String| if s.is_empty() { None } else { Some(s) };
    let status = match get(1).as_str() {
        "periodic" => RowStatus::Periodic,
        "cap" => RowStatus::Cap,
        "failed" => RowStatus::Failed,
        other => return Err(Error::invalid(format!("unknown row status {other:?}"))),
    };
    let parse_usize = |s: String| -> Result<Option<usize>> {
        non_empty(s)
            .map(|v| v.parse().map_err(|_| Error::invalid("bad count in CSV")))
            .transpose()
    };
    let charpoly = non_empty(get(4))
        .map(|s| -> Result<[BigInt; 3]> {
            let parts: Vec<&str> = s.split(';').collect();
            if parts.len() != 3 {
                return Err(Error::invalid("bad charpoly in CSV"));
            }
            let mut out = [BigInt::from(0), BigInt::from(0), BigInt::from(0)];
            for (slot, p) in out.iter_mut().zip(parts) {
                *slot = p
                    .parse()
                    .map_err(|_| Error::invalid("bad charpoly coefficient in CSV"))?;
            }
            Ok(out)
        })
        .transpose()?;
    let parse_bool = |s: String| -> Result<Option<bool>> {
        non_empty(s)
            .map(|v| v.parse().map_err(|_| Error::invalid("bad bool in CSV")))
            .transpose()
    };
    Ok(SurveyRow {
        key: get(0),
        status,
        preperiod: parse_usize(get(2))?,
        period_len: parse_usize(get(3))?,
        charpoly,
        pisot: parse_bool(get(5))?,
        primitive: parse_bool(get(6))?,
        dh0: None,
        dhf: parse_usize(get(7))?.map(|v| v as u32),
        rdhf: non_empty(get(8)).map(|s| ratstr::parse(&s)).transpose()?,
    })
}

fn read_existing_rows(path: &Path) -> Result<Vec<SurveyRow>> {
    if !path.exists() || std::fs::metadata(path)?.len() == 0 {
        return Ok(Vec::new());
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(csv_err)?;
    {
        let headers = reader.headers().map_err(csv_err)?;
        if headers.iter().ne(CSV_HEADER) {
            return Err(Error::invalid("survey CSV has an unexpected header"));
        }
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        rows.push(row_from_record(&rec.map_err(csv_err)?)?);
    }
    Ok(rows)
}

fn csv_err(e: csv::Error) -> Error {
    Error::invalid(format!("survey CSV: {e}"))
}

fn append_rows(path: &Path, write_header: bool, rows: &[SurveyRow]) -> Result<()> {
    let file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(file);
    if write_header {
        writer.write_record(CSV_HEADER).map_err(csv_err)?;
    }
    for row in rows {
        writer.write_record(csv_record(row)).map_err(csv_err)?;
    }
    writer.flush()?;
    Ok(())
}

/// Computes the missing suffix of a keyed survey, appending to the CSV at
/// `path` when given. Any rows already present must be a prefix of the
/// canonical key order; the finished row set is returned for aggregation.
fn run_keyed_survey<F>(
    path: Option<PathBuf>,
    keys: &[String],
    compute: F,
) -> Result<Vec<SurveyRow>>
where
    F: Fn(&[String]) -> Vec<SurveyRow>,
{
    let existing = match &path {
        Some(p) => read_existing_rows(p)?,
        None => Vec::new(),
    };
    if existing.len() > keys.len() {
        return Err(Error::invalid("survey CSV has more rows than the key plan"));
    }
    for (row, key) in existing.iter().zip(keys) {
        if &row.key != key {
            return Err(Error::invalid(format!(
                "survey CSV row {:?} does not match planned key {:?}",
                row.key, key
            )));
        }
    }
    let missing = &keys[existing.len()..];
    let fresh = compute(missing);
    if let Some(p) = &path {
        append_rows(p, existing.is_empty(), &fresh)?;
    }
    let mut all = existing;
    all.extend(fresh);
    Ok(all)
}

fn survey_path(cli: &Cli, default_name: &str) -> Option<PathBuf> {
    if let Some(out) = &cli.out {
        return Some(out.clone());
    }
    std::env::var_os(CACHE_DIR_ENV).map(|dir| PathBuf::from(dir).join(default_name))
}

fn cmd_survey(cli: &Cli, args: &SurveyArgs) -> Result<i32> {
    match (&args.purecubic, args.family_t) {
        (Some(range), None) => {
            let (lo, hi) = parse_range(range)?;
            let ms: Vec<u64> = (lo..=hi)
                .filter(|&m| !analysis::is_perfect_cube(m))
                .collect();
            let keys: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
            let path = survey_path(cli, &format!("purecubic_{lo}_{hi}.csv"));
            let rows = run_keyed_survey(path, &keys, |missing| {
                use rayon::prelude::*;
                missing
                    .par_iter()
                    .map(|k| analysis::pure_cubic_row(k.parse().unwrap(), cli.r, cli.cap))
                    .collect()
            })?;
            let report = analysis::aggregate_rows(rows);
            println!(
                "L_A={} H_A={} R_A={}",
                report.longest_period,
                report.max_height,
                ratstr::to_string(&report.max_height_ratio)
            );
            Ok(EXIT_OK)
        }
        (None, Some(t)) => {
            let members = analysis::family_members(t)?;
            let keys: Vec<String> = members
                .iter()
                .map(|(c, _)| analysis::family_key(c))
                .collect();
            let path = survey_path(cli, &format!("family_t{t}.csv"));
            let rows = run_keyed_survey(path, &keys, |missing| {
                use rayon::prelude::*;
                let start = members.len() - missing.len();
                members[start..]
                    .par_iter()
                    .map(|(c, point)| {
                        analysis::point_row(analysis::family_key(c), point, cli.r, cli.cap)
                    })
                    .collect()
            })?;
            let polys: Vec<[BigInt; 3]> = members.iter().map(|(c, _)| c.clone()).collect();
            let stats = analysis::family_statistics(&polys, &rows);
            println!("{stats}");
            Ok(EXIT_OK)
        }
        _ => Err(Error::invalid(
            "supply exactly one of --purecubic lo:hi or --family-t T",
        )),
    }
}

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("range {s:?} must look like lo:hi")))?;
    let lo = lo
        .parse()
        .map_err(|_| Error::invalid(format!("bad range start {lo:?}")))?;
    let hi = hi
        .parse()
        .map_err(|_| Error::invalid(format!("bad range end {hi:?}")))?;
    Ok((lo, hi))
}

// ---------------------------------------------------------------------------
// stepped / cf / selftest.
// ---------------------------------------------------------------------------

fn orbit_digits(point: &PointPair, cli: &Cli, steps: &str) -> Result<(Vec<Digit>, bool)> {
    if steps == "auto" {
        let res = detect_period(point, cli.r, cli.cap)?;
        if !res.found() {
            return Ok((res.digits, false));
        }
        Ok((res.digits[..res.preperiod + res.period].to_vec(), true))
    } else {
        let n: usize = steps
            .parse()
            .map_err(|_| Error::invalid(format!("bad step count {steps:?}")))?;
        Ok((expand(point, cli.r, n)?.digits, true))
    }
}

fn cmd_stepped(cli: &Cli, args: &SteppedArgs) -> Result<i32> {
    let point = resolve_point(&args.point)?;
    let (digits, complete) = orbit_digits(&point, cli, &args.steps)?;
    if !complete {
        eprintln!("status: cap exceeded after {} steps", cli.cap);
        return Ok(EXIT_CAP);
    }
    let seed = match args.seed {
        SeedArg::Unit => Seed::UnitVectors,
        SeedArg::Origin => Seed::Origin,
    };
    let dir = Direction::new(&point);
    let patch = grow_from_seed(&digits, seed, &dir)?;
    let format = cli.format.unwrap_or(OutputFormat::Json);
    let content = match format {
        OutputFormat::Json => export_json(&patch, &dir)? + "\n",
        OutputFormat::Svg => {
            let mut options = SvgOptions {
                origin_marker: args.origin_marker,
                ..SvgOptions::default()
            };
            if let Some(fills) = &args.fills {
                let parts: Vec<&str> = fills.split(',').collect();
                if parts.len() != 3 {
                    return Err(Error::invalid("--fills needs three comma-separated colors"));
                }
                for (slot, p) in options.fills.iter_mut().zip(parts) {
                    *slot = p.trim().to_string();
                }
            }
            export_svg(&patch, &options)?
        }
        OutputFormat::Obj => export_obj(&patch)?,
        OutputFormat::Csv => return Err(Error::invalid("stepped has no CSV form")),
    };
    write_output(&cli.out, &content)?;
    if cli.out.is_some() {
        println!("faces={}", patch.len());
    }
    Ok(EXIT_OK)
}

fn cmd_cf(cli: &Cli, args: &CfArgs) -> Result<i32> {
    let point = resolve_point(&args.point)?;
    let word = if let Some(n) = args.steps {
        let digits = expand(&point, cli.r, n)?.digits;
        let finite = CfWord::Finite(digits_to_cfword(&digits));
        if args.reduce {
            reduce_cfword(&finite)?
        } else {
            finite
        }
    } else {
        let res = detect_period(&point, cli.r, cli.cap)?;
        if !res.found() {
            eprintln!("status: cap exceeded after {} steps", cli.cap);
            return Ok(EXIT_CAP);
        }
        if args.reduce {
            reduce_periodic(res.preperiod_digits(), res.period_digits())?
        } else {
            CfWord::Periodic {
                pre: digits_to_cfword(res.preperiod_digits()),
                per: digits_to_cfword(res.period_digits()),
            }
        }
    };
    let mut line = word.to_string();
    line.push('\n');
    write_output(&cli.out, &line)?;
    Ok(EXIT_OK)
}

fn cmd_selftest() -> Result<i32> {
    let report = crate::contfrac::verify_decompositions();
    let mut ok = true;
    for (name, pass) in &report {
        println!("{}: {}", name, if *pass { "ok" } else { "FAIL" });
        ok &= *pass;
    }
    if ok {
        println!("selftest: all {} checks passed", report.len());
        Ok(EXIT_OK)
    } else {
        Ok(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs() {
        assert!(resolve_family("p2:2").is_ok());
        assert!(resolve_family("purecubic:5").is_ok());
        assert!(resolve_family("purecubic:8").is_err());
        assert!(resolve_family("nt-basis:-1,0,-1").is_ok());
        assert!(resolve_family("nt-basis:0,-1,0").is_err());
        assert!(resolve_family("mystery:1").is_err());
        assert!(resolve_family("p2").is_err());
    }

    #[test]
    fn range_and_poly_parsing() {
        assert_eq!(parse_range("2:200").unwrap(), (2, 200));
        assert!(parse_range("200").is_err());
        let p = parse_int_triple("-1,3,-57").unwrap();
        assert_eq!(p, [BigInt::from(-1), BigInt::from(3), BigInt::from(-57)]);
        assert!(parse_int_triple("1/2,0,0").is_err());
    }

    #[test]
    fn digit_line_markers() {
        let d = |i, j| Digit { i, j };
        let line = digit_list(&[d(2, 0), d(0, 2), d(2, 1)], Some((0, 3)));
        assert_eq!(line, "(2,0)* (0,2) (2,1)*");
        let free = digit_list(&[d(2, 0), d(0, 2)], None);
        assert_eq!(free, "(2,0) (0,2)");
    }

    #[test]
    fn csv_round_trip() {
        let row = analysis::pure_cubic_row(2, ValueExponent::default(), 10_000);
        let rec = csv_record(&row);
        let parsed = row_from_record(&csv::StringRecord::from(rec.to_vec())).unwrap();
        assert_eq!(parsed.key, row.key);
        assert_eq!(parsed.status, row.status);
        assert_eq!(parsed.period_len, row.period_len);
        assert_eq!(parsed.charpoly, row.charpoly);
        assert_eq!(parsed.rdhf, row.rdhf);
    }

    #[test]
    fn orbit_document_round_trip() {
        let point = resolve_family("p2:1").unwrap();
        let (alpha, beta) = coord_strings(&point);
        let doc = OrbitDocument {
            field: point.field().description(),
            r: "5/2".to_string(),
            alpha,
            beta,
            digits: vec![Digit { i: 0, j: 2 }, Digit { i: 2, j: 1 }],
            preperiod: Some(0),
            period: Some(3),
            charpoly: None,
            pisot: None,
            convergents: None,
        };
        let json = serde_json::to_string(&doc).unwrap();
        let back: OrbitDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
