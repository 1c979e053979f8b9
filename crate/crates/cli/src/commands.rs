//! Subcommand definitions and dispatch.
//!
//! Exit code contract: 0 = success/verified, 1 = mathematical verification
//! mismatch, 2 = input/usage error, 3 = resource guard exceeded.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use symcone::cone_geom::{
    edges1_verify, is_perfect, ConeJson, Edges1Input, RationalCone,
};
use symcone::diag_cone::{analyze, polytope_pi};
use symcone::diagonals::{diagonal_class, DiagonalSpec, DiagonalSpecJson};
use symcone::partitions::{balance_descend, brute_min, cheb_certify, SymAffineForm};
use symcone::rational::Rat;
use symcone::sweep::{self, GridSpec};
use symcone::taut_ring::{MonomialSum, RingContext, TautClass, TautClassJson};
use symcone::Guards;

use crate::output::{
    class_csv, emit, json_string, partition_token, table_csv, Format,
};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Guard(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Guard(m) | CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<symcone::Error> for CliError {
    fn from(e: symcone::Error) -> Self {
        match e {
            symcone::Error::Resource(m) => CliError::Guard(format!("resource guard: {m}")),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// An inclusive integer range, written `a..b` or a single value `a`.
#[derive(Clone, Copy, Debug)]
pub struct RangeArg {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| x.parse::<u32>().map_err(|_| format!("bad integer {x:?}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let lo = parse(a)?;
                let hi = parse(b)?;
                if lo > hi {
                    return Err(format!("empty range {s:?}"));
                }
                Ok(RangeArg { lo, hi })
            }
            None => {
                let v = parse(s)?;
                Ok(RangeArg { lo: v, hi: v })
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "symcone",
    about = "Exact computations in tautological rings of symmetric products, diagonal cones, and rational polyhedral cones",
    version
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Lift the default resource guards.
    #[arg(long, global = true)]
    pub guard_override: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(format!("unknown format {other:?} (expected json or csv)")),
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the class of a diagonal cycle.
    DiagClass(DiagClassArgs),
    /// Pair eta against every diagonal of dimension n; verify all vanish.
    EtaCheck(EtaCheckArgs),
    /// Analyze the diagonal cone: brute-force extremal rays vs prediction.
    DiagCone(DiagConeArgs),
    /// Hull vertices of the sigma-image polytope vs prediction.
    Polytope(PolytopeArgs),
    /// Certify a symmetric affine form and compare with brute-force minimum.
    Cheb(ChebArgs),
    /// Polyhedral cone operations on a cone JSON file.
    #[command(subcommand)]
    Cone(ConeCommand),
    /// Tautological ring operations on class JSON files.
    #[command(subcommand)]
    Taut(TautCommand),
    /// Verification sweeps over parameter grids.
    Sweep(SweepArgs),
}

#[derive(Args)]
pub struct DiagClassArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub d: u32,
    /// Comma-separated partition of d, e.g. 2,1
    #[arg(long)]
    pub parts: String,
}

#[derive(Args)]
pub struct EtaCheckArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: u32,
}

#[derive(Args)]
pub struct DiagConeArgs {
    /// Genus, or a range g0..g1 with --sweep.
    #[arg(long)]
    pub g: RangeArg,
    /// Degree, or a range d0..d1 with --sweep.
    #[arg(long)]
    pub d: RangeArg,
    /// Dimension of the diagonals; with --sweep, omitting it sweeps all n.
    #[arg(long)]
    pub n: Option<u32>,
    /// Sweep the whole grid instead of a single instance.
    #[arg(long)]
    pub sweep: bool,
}

#[derive(Args)]
pub struct PolytopeArgs {
    #[arg(long)]
    pub t: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub r: u32,
    /// Exploratory: compare the hull facet count with the cyclic polytope
    /// (Gale evenness). Not part of the verification contract.
    #[arg(long)]
    pub cyclic_check: bool,
}

#[derive(Args)]
pub struct ChebArgs {
    #[arg(long)]
    pub t: u32,
    #[arg(long)]
    pub r: u32,
    /// Coefficients a0,a2,...,ar as comma-separated rationals (sigma_1 slot
    /// absent by convention; trailing zeros may be omitted).
    #[arg(long)]
    pub coeffs: String,
    /// Also run the balancing descent from this start vector (comma-separated).
    #[arg(long)]
    pub descend_from: Option<String>,
}

#[derive(Subcommand)]
pub enum ConeCommand {
    /// Dual cone of the input cone.
    Dual(ConeFileArgs),
    /// Full face lattice of the input cone.
    Faces(ConeFileArgs),
    /// Perfectness report for every face.
    Perfect(ConeFileArgs),
    /// Run the locally-finitely-generated verifier on an instance file.
    Edges1(ConeFileArgs),
}

#[derive(Args)]
pub struct ConeFileArgs {
    /// Input JSON file.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Subcommand)]
pub enum TautCommand {
    /// Product of two classes.
    Mul(TautTwoArgs),
    /// Complementary-degree pairing of two classes.
    Pair(TautTwoArgs),
    /// Reduce a monomial sum to the standard basis.
    Reduce(ConeFileArgs),
}

#[derive(Args)]
pub struct TautTwoArgs {
    /// First class (JSON file).
    #[arg(long)]
    pub a: PathBuf,
    /// Second class (JSON file).
    #[arg(long)]
    pub b: PathBuf,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Which sweep to run: diag-cone | polytope | eta.
    #[arg(long)]
    pub kind: String,
    #[arg(long, default_value = "1..4")]
    pub g: RangeArg,
    #[arg(long, default_value = "2..8")]
    pub d: RangeArg,
    /// Restrict diag-cone/eta sweeps to a single n.
    #[arg(long)]
    pub n: Option<u32>,
    /// t-range for polytope sweeps.
    #[arg(long, default_value = "2..10")]
    pub t: RangeArg,
    /// s-range for polytope sweeps (clamped to s <= t; default all).
    #[arg(long)]
    pub s: Option<RangeArg>,
    /// Largest r for polytope sweeps.
    #[arg(long, default_value = "4")]
    pub r_max: u32,
}

pub fn run(cli: Cli) -> CliResult<ExitCode> {
    let guards = effective_guards(cli.guard_override)?;
    let format = cli.format;
    let out = cli.out;
    match cli.command {
        Command::DiagClass(a) => diag_class_cmd(a, format, &out),
        Command::EtaCheck(a) => eta_check_cmd(a, format, &out),
        Command::DiagCone(a) => diag_cone_cmd(a, format, &out, &guards),
        Command::Polytope(a) => polytope_cmd(a, format, &out, &guards),
        Command::Cheb(a) => cheb_cmd(a, format, &out, &guards),
        Command::Cone(c) => cone_cmd(c, format, &out, &guards),
        Command::Taut(t) => taut_cmd(t, format, &out),
        Command::Sweep(s) => sweep_cmd(s, format, &out, &guards),
    }
}

fn effective_guards(lift: bool) -> CliResult<Guards> {
    let mut guards = if lift {
        Guards::unlimited()
    } else {
        Guards::default()
    };
    if let Ok(v) = std::env::var("SYMCONE_MAX_AMBIENT") {
        let n: usize = v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad SYMCONE_MAX_AMBIENT value {v:?}")))?;
        guards.max_ambient = n;
    }
    Ok(guards)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> CliResult<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad JSON in {}: {e}", path.display())))
}

fn parse_parts(s: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad partition part {x:?}")))
        })
        .collect()
}

fn parse_rats(s: &str) -> CliResult<Vec<Rat>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<Rat>()
                .map_err(|e| CliError::Usage(format!("bad rational {x:?}: {e}")))
        })
        .collect()
}

fn write(format: Format, out: &Option<PathBuf>, json: String, csv: String) -> CliResult<()> {
    let content = match format {
        Format::Json => json,
        Format::Csv => csv,
    };
    emit(out, &content).map_err(|e| CliError::Io(format!("cannot write output: {e}")))
}

fn diag_class_cmd(a: DiagClassArgs, format: Format, out: &Option<PathBuf>) -> CliResult<ExitCode> {
    let spec: DiagonalSpec = DiagonalSpecJson {
        g: a.g,
        d: a.d,
        parts: parse_parts(&a.parts)?,
    }
    .try_into()?;
    let class = diagonal_class(&spec);
    write(
        format,
        out,
        json_string(&TautClassJson::from(&class)),
        class_csv(&class),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn eta_check_cmd(a: EtaCheckArgs, format: Format, out: &Option<PathBuf>) -> CliResult<ExitCode> {
    let ctx = RingContext::new(a.g, a.d)?;
    if a.n == 0 || a.n >= a.d {
        return Err(CliError::Usage(format!(
            "need 1 <= n <= d-1, got n={}, d={}",
            a.n, a.d
        )));
    }
    let rows = sweep::eta_check(ctx, a.n)?;
    let all_zero = rows.iter().all(|r| r.pairing.is_zero());
    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.g.to_string(),
                r.d.to_string(),
                r.n.to_string(),
                partition_token(&r.parts),
                r.pairing.to_string(),
            ]
        })
        .collect();
    write(
        format,
        out,
        json_string(&json!({ "rows": rows, "all_zero": all_zero })),
        table_csv(&["g", "d", "n", "parts", "pairing"], &csv_rows),
    )?;
    Ok(if all_zero {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn diag_cone_rows(reports: &[symcone::diag_cone::DiagConeReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .map(|r| {
            vec![
                r.g.to_string(),
                r.d.to_string(),
                r.n.to_string(),
                r.r.to_string(),
                r.s.to_string(),
                r.is_match.to_string(),
                r.eta_supported.to_string(),
                r.dim_ok.to_string(),
                r.brute_extremal
                    .iter()
                    .map(|p| partition_token(p.parts()))
                    .collect::<Vec<_>>()
                    .join("|"),
                r.predicted_extremal
                    .iter()
                    .map(|p| partition_token(p.parts()))
                    .collect::<Vec<_>>()
                    .join("|"),
            ]
        })
        .collect()
}

const DIAG_CONE_HEADER: [&str; 10] = [
    "g",
    "d",
    "n",
    "r",
    "s",
    "match",
    "eta_supported",
    "dim_ok",
    "brute_extremal",
    "predicted_extremal",
];

fn diag_cone_cmd(
    a: DiagConeArgs,
    format: Format,
    out: &Option<PathBuf>,
    guards: &Guards,
) -> CliResult<ExitCode> {
    let reports = if a.sweep {
        let grid = GridSpec {
            g: (a.g.lo, a.g.hi),
            d: (a.d.lo, a.d.hi),
            n: a.n,
        };
        sweep::diag_cone_sweep(&grid, guards)?
    } else {
        if a.g.lo != a.g.hi || a.d.lo != a.d.hi {
            return Err(CliError::Usage(
                "ranges for --g/--d require --sweep".into(),
            ));
        }
        let n = a.n.ok_or_else(|| CliError::Usage("--n is required without --sweep".into()))?;
        vec![analyze(RingContext::new(a.g.lo, a.d.lo)?, n, guards)?]
    };
    let ok = reports
        .iter()
        .all(|r| r.is_match && r.eta_supported && r.dim_ok);
    let json = if reports.len() == 1 {
        json_string(&reports[0])
    } else {
        json_string(&json!({ "reports": reports, "all_match": ok }))
    };
    write(
        format,
        out,
        json,
        table_csv(&DIAG_CONE_HEADER, &diag_cone_rows(&reports)),
    )?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn polytope_cmd(
    a: PolytopeArgs,
    format: Format,
    out: &Option<PathBuf>,
    guards: &Guards,
) -> CliResult<ExitCode> {
    let rep = polytope_pi(a.t, a.s, a.r, guards)?;
    let cyclic = if a.cyclic_check {
        Some(symcone::diag_cone::cyclic_facet_comparison(
            a.t, a.s, a.r, guards,
        )?)
    } else {
        None
    };
    let ok = rep.is_match && rep.dim_ok;
    let row = vec![vec![
        rep.t.to_string(),
        rep.s.to_string(),
        rep.r.to_string(),
        rep.is_match.to_string(),
        rep.affine_dim.to_string(),
        rep.dim_ok.to_string(),
        rep.predicted
            .iter()
            .map(|p| partition_token(p.parts()))
            .collect::<Vec<_>>()
            .join("|"),
    ]];
    let json = match &cyclic {
        Some(c) => json_string(&json!({ "report": rep, "cyclic": c })),
        None => json_string(&rep),
    };
    write(
        format,
        out,
        json,
        table_csv(
            &["t", "s", "r", "match", "affine_dim", "dim_ok", "predicted"],
            &row,
        ),
    )?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cheb_cmd(
    a: ChebArgs,
    format: Format,
    out: &Option<PathBuf>,
    guards: &Guards,
) -> CliResult<ExitCode> {
    let coeffs = parse_rats(&a.coeffs)?;
    let form = SymAffineForm::new(a.r, &coeffs)?;
    let certified = cheb_certify(&form, a.t)?;
    let (min, witness) = brute_min(&form, a.t, guards)?;
    let descend = match &a.descend_from {
        Some(s) => {
            let start = parse_parts(s)?;
            if start.iter().sum::<u32>() != a.t || start.len() != a.r as usize {
                return Err(CliError::Usage(
                    "--descend-from must have r entries summing to t".into(),
                ));
            }
            let end = balance_descend(&form, a.t, &start);
            let value = form.eval(&end);
            Some(json!({ "end": end, "value": value }))
        }
        None => None,
    };
    // A certified form with a negative brute minimum would be a soundness
    // violation of the positivity criterion.
    let sound = !certified || !min.is_negative();
    let json = json_string(&json!({
        "r": a.r,
        "t": a.t,
        "certified": certified,
        "brute_min": min,
        "witness": witness,
        "descend": descend,
        "sound": sound,
    }));
    let csv = table_csv(
        &["t", "r", "certified", "brute_min", "witness", "sound"],
        &[vec![
            a.t.to_string(),
            a.r.to_string(),
            certified.to_string(),
            min.to_string(),
            partition_token(witness.parts()),
            sound.to_string(),
        ]],
    );
    write(format, out, json, csv)?;
    Ok(if sound { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cone_cmd(
    c: ConeCommand,
    format: Format,
    out: &Option<PathBuf>,
    guards: &Guards,
) -> CliResult<ExitCode> {
    match c {
        ConeCommand::Dual(a) => {
            let cone: RationalCone = read_json::<ConeJson>(&a.input)?.try_into()?;
            let dual = cone.dual(guards)?;
            let json = json_string(&ConeJson::from(&dual));
            let rows: Vec<Vec<String>> = dual
                .generators()
                .iter()
                .map(|g| vec![g.iter().map(Rat::to_string).collect::<Vec<_>>().join(" ")])
                .collect();
            write(format, out, json, table_csv(&["generator"], &rows))?;
            Ok(ExitCode::SUCCESS)
        }
        ConeCommand::Faces(a) | ConeCommand::Perfect(a) => {
            let cone: RationalCone = read_json::<ConeJson>(&a.input)?.try_into()?;
            let faces = cone.faces(guards)?;
            let mut all_perfect = true;
            let mut face_rows = Vec::new();
            let mut face_json = Vec::new();
            for f in &faces {
                let perfect = is_perfect(&cone, f, guards)?;
                all_perfect &= perfect;
                face_rows.push(vec![
                    f.dim.to_string(),
                    f.generator_indices
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join("|"),
                    f.is_exposed.to_string(),
                    perfect.to_string(),
                ]);
                face_json.push(json!({
                    "dim": f.dim,
                    "generator_indices": f.generator_indices,
                    "is_exposed": f.is_exposed,
                    "is_perfect": perfect,
                }));
            }
            let json = json_string(&json!({
                "ambient_dim": cone.ambient_dim(),
                "faces": face_json,
                "all_perfect": all_perfect,
            }));
            write(
                format,
                out,
                json,
                table_csv(&["dim", "generators", "exposed", "perfect"], &face_rows),
            )?;
            Ok(if all_perfect {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        ConeCommand::Edges1(a) => {
            #[derive(Deserialize)]
            struct Edges1Json {
                dim: usize,
                y: Vec<Vec<Rat>>,
                delta_indices: Vec<usize>,
                l: Vec<Rat>,
                phi: Vec<Rat>,
            }
            let raw: Edges1Json = read_json(&a.input)?;
            let input = Edges1Input {
                dim: raw.dim,
                y: raw.y,
                delta_indices: raw.delta_indices,
                l: raw.l,
                phi: raw.phi,
            };
            let report = edges1_verify(&input, guards)?;
            let pass = report.all_pass();
            let rows: Vec<Vec<String>> = report
                .hypotheses
                .iter()
                .map(|(k, v)| vec![format!("hypothesis {k}"), format!("{v:?}")])
                .chain(
                    report
                        .conclusions
                        .iter()
                        .map(|(k, v)| vec![format!("conclusion {k}"), format!("{v:?}")]),
                )
                .collect();
            write(
                format,
                out,
                json_string(&report),
                table_csv(&["clause", "status"], &rows),
            )?;
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// JSON form of a monomial sum: theta-exponent (as a string key) to "p/q".
#[derive(Deserialize)]
struct MonomialSumJson {
    g: u32,
    d: u32,
    codim: u32,
    terms: BTreeMap<String, Rat>,
}

fn taut_cmd(t: TautCommand, format: Format, out: &Option<PathBuf>) -> CliResult<ExitCode> {
    match t {
        TautCommand::Mul(a) => {
            let x: TautClass = read_json::<TautClassJson>(&a.a)?.try_into()?;
            let y: TautClass = read_json::<TautClassJson>(&a.b)?.try_into()?;
            let prod = x.multiply(&y)?;
            write(
                format,
                out,
                json_string(&TautClassJson::from(&prod)),
                class_csv(&prod),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        TautCommand::Pair(a) => {
            let x: TautClass = read_json::<TautClassJson>(&a.a)?.try_into()?;
            let y: TautClass = read_json::<TautClassJson>(&a.b)?.try_into()?;
            let v = x.pair(&y)?;
            write(
                format,
                out,
                json_string(&json!({ "pairing": v })),
                table_csv(&["pairing"], &[vec![v.to_string()]]),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        TautCommand::Reduce(a) => {
            let raw: MonomialSumJson = read_json(&a.input)?;
            let ctx = RingContext::new(raw.g, raw.d)?;
            let mut mono = MonomialSum::zero(ctx, raw.codim)?;
            for (k, v) in raw.terms {
                let alpha: u32 = k
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad theta exponent {k:?}")))?;
                mono.add_term(alpha, v)?;
            }
            let red = mono.reduce()?;
            write(
                format,
                out,
                json_string(&TautClassJson::from(&red)),
                class_csv(&red),
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn sweep_cmd(
    s: SweepArgs,
    format: Format,
    out: &Option<PathBuf>,
    guards: &Guards,
) -> CliResult<ExitCode> {
    match s.kind.as_str() {
        "diag-cone" => {
            let grid = GridSpec {
                g: (s.g.lo, s.g.hi),
                d: (s.d.lo, s.d.hi),
                n: s.n,
            };
            let reports = sweep::diag_cone_sweep(&grid, guards)?;
            let ok = reports
                .iter()
                .all(|r| r.is_match && r.eta_supported && r.dim_ok);
            write(
                format,
                out,
                json_string(&json!({ "reports": reports, "all_match": ok })),
                table_csv(&DIAG_CONE_HEADER, &diag_cone_rows(&reports)),
            )?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "polytope" => {
            let mut items = sweep::polytope_instances(s.t.lo, s.t.hi, s.r_max);
            if let Some(sr) = s.s {
                items.retain(|&(_, ss, _)| sr.lo <= ss && ss <= sr.hi);
            }
            if items
                .iter()
                .any(|&(t, _, r)| t > guards.max_polytope_t || r > guards.max_polytope_r)
            {
                return Err(CliError::Guard(format!(
                    "polytope sweep exceeds guards (t <= {}, r <= {})",
                    guards.max_polytope_t, guards.max_polytope_r
                )));
            }
            let reports = sweep::polytope_sweep(items, guards)?;
            let ok = reports.iter().all(|r| r.is_match && r.dim_ok);
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.t.to_string(),
                        r.s.to_string(),
                        r.r.to_string(),
                        r.is_match.to_string(),
                        r.affine_dim.to_string(),
                        r.dim_ok.to_string(),
                    ]
                })
                .collect();
            let summary: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "t": r.t, "s": r.s, "r": r.r,
                        "match": r.is_match, "affine_dim": r.affine_dim, "dim_ok": r.dim_ok,
                    })
                })
                .collect();
            write(
                format,
                out,
                json_string(&json!({ "reports": summary, "all_match": ok })),
                table_csv(&["t", "s", "r", "match", "affine_dim", "dim_ok"], &rows),
            )?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "eta" => {
            let grid = GridSpec {
                g: (s.g.lo, s.g.hi),
                d: (s.d.lo, s.d.hi),
                n: s.n,
            };
            let rows = sweep::eta_sweep(&grid)?;
            let ok = rows.iter().all(|r| r.pairing.is_zero());
            let csv_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.g.to_string(),
                        r.d.to_string(),
                        r.n.to_string(),
                        partition_token(&r.parts),
                        r.pairing.to_string(),
                    ]
                })
                .collect();
            write(
                format,
                out,
                json_string(&json!({ "rows": rows, "all_zero": ok })),
                table_csv(&["g", "d", "n", "parts", "pairing"], &csv_rows),
            )?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        other => Err(CliError::Usage(format!(
            "unknown sweep kind {other:?} (expected diag-cone, polytope, or eta)"
        ))),
    }
}
