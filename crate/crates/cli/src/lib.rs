//! Command-line surface of tiltc: KL queries, tilting multiplicities,
//! oracle verification and cache management.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use tiltc_core::hecke::{table, Family, Flavor, KlEngine};
use tiltc_core::mincpx::block::{verify, HwBlock};
use tiltc_core::rootdata::linkage::LinkageDatum;
use tiltc_core::rootdata::Weight;
use tiltc_core::tilting::{Formulas, Kind, MultiplicityPoly, QuantumBlock, Query, Setting};
use tiltc_core::{CoxeterElement, CoxeterSystem, Error, LaurentPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const CACHE_ENV: &str = "TILTC_CACHE";
const CACHE_EXT: &str = "tbl";

#[derive(Parser, Debug)]
#[command(
    name = "tiltc",
    version,
    about = "Kazhdan-Lusztig polynomials and tilting multiplicities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
    /// Length bound for enumerations in infinite groups.
    #[arg(long = "max-length", default_value_t = 8, global = true)]
    max_length: usize,
    /// Neither read nor write the polynomial cache.
    #[arg(long = "no-cache", global = true)]
    no_cache: bool,
    /// Cache directory (overrides TILTC_CACHE).
    #[arg(long = "cache-dir", global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FlavorArg {
    Spherical,
    Antispherical,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LevelArg {
    Neg,
    Pos,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SettingArg {
    #[value(name = "O")]
    O,
    Km,
    Quantum,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Ordinary, parabolic and inverse KL polynomials.
    Kl {
        #[command(flatten)]
        common: Common,
        #[arg(long = "type")]
        ctype: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// File with one `x ; y` query per line.
        #[arg(long)]
        batch: Option<PathBuf>,
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
        #[arg(long)]
        inverse: bool,
    },
    /// Graded tilting multiplicities of standard or simple objects.
    Tilt {
        #[arg(value_enum)]
        setting: SettingArg,
        #[command(flatten)]
        common: Common,
        #[arg(long = "type")]
        ctype: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long, conflicts_with = "simple")]
        standard: bool,
        #[arg(long)]
        simple: bool,
        #[arg(long = "I")]
        i: Option<String>,
        #[arg(long = "J")]
        j: Option<String>,
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[arg(long)]
        ell: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Positive-level simple formula with the z-free antispherical factor.
        #[arg(long = "literal-positive")]
        literal_positive: bool,
    },
    /// Brute-force homological oracle on an explicit block.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Polynomial cache management.
    Cache {
        #[command(subcommand)]
        cmd: CacheCmd,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Runs all invariant suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Shipped block name or block file path.
        #[arg(long)]
        block: String,
    },
    /// Minimal tilting complex of a designated module.
    Cmin {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        block: String,
        #[arg(long)]
        module: String,
    },
}

#[derive(Subcommand, Debug)]
enum CacheCmd {
    Info {
        #[arg(long)]
        path: Option<PathBuf>,
    },
    Clear {
        #[arg(long)]
        path: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    reason: String,
    message: String,
    stdout: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            reason: "usage".into(),
            message: message.into(),
            stdout: String::new(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => EXIT_INTERNAL,
            Error::Parse(_) | Error::UnknownType(_) => EXIT_USAGE,
            _ => EXIT_VALIDATION,
        };
        Self {
            code,
            reason: e.kind().into(),
            message: e.to_string(),
            stdout: String::new(),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        code: EXIT_OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error[usage]: {}\n", first_line(&text)),
                },
            };
        }
    };
    let mut stderr = String::new();
    match dispatch(cli, &mut stderr) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr,
        },
        Err(f) => {
            let _ = writeln!(stderr, "error[{}]: {}", f.reason, first_line(&f.message));
            Outcome {
                code: f.code,
                stdout: f.stdout,
                stderr,
            }
        }
    }
}

fn first_line(s: &str) -> String {
    s.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("")
        .trim_start_matches("error: ")
        .to_string()
}

fn dispatch(cli: Cli, stderr: &mut String) -> Res<String> {
    match cli.cmd {
        Cmd::Kl {
            common,
            ctype,
            x,
            y,
            batch,
            parabolic,
            flavor,
            inverse,
        } => {
            let req = KlRequest {
                ctype,
                x,
                y,
                batch,
                parabolic,
                flavor,
                inverse,
            };
            tiltc_core::par::with_jobs(common.jobs, || run_kl(&common, &req, stderr))
        }
        Cmd::Tilt {
            setting,
            common,
            ctype,
            x,
            y,
            standard: _,
            simple,
            i,
            j,
            level,
            ell,
            lambda,
            literal_positive,
        } => {
            let req = TiltRequest {
                setting,
                ctype,
                x,
                y,
                kind: if simple { Kind::Simple } else { Kind::Standard },
                i,
                j,
                level,
                ell,
                lambda,
                literal_positive,
            };
            req.validate()?;
            tiltc_core::par::with_jobs(common.jobs, || run_tilt(&common, &req, stderr))
        }
        Cmd::Oracle { cmd } => run_oracle(cmd),
        Cmd::Cache { cmd } => run_cache(cmd),
    }
}

/// Cache directory: explicit flag, then TILTC_CACHE, then the user cache directory.
pub fn cache_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os(CACHE_ENV).filter(|p| !p.is_empty()) {
        return PathBuf::from(p);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|p| !p.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("tiltc")
}

fn cache_file(dir: &Path, sys: &CoxeterSystem) -> PathBuf {
    dir.join(format!("{}.{CACHE_EXT}", sys.name()))
}

/// Engine with tables from the cache, if enabled and readable.
fn open_engine(common: &Common, sys: Arc<CoxeterSystem>, stderr: &mut String) -> KlEngine {
    let eng = KlEngine::new(sys.clone());
    if common.no_cache {
        return eng;
    }
    let path = cache_file(&cache_dir(common.cache_dir.as_deref()), &sys);
    if !path.exists() {
        return eng;
    }
    let loaded = table::load(&path, sys.name(), sys.rank())
        .and_then(|ts| ts.iter().try_for_each(|t| eng.import_table(t).map(|_| ())));
    match loaded {
        Ok(()) => eng.mark_clean(),
        Err(e) => {
            let _ = writeln!(stderr, "warning[cache]: ignoring {}: {e}", path.display());
            return KlEngine::new(sys);
        }
    }
    eng
}

fn close_engine(common: &Common, eng: &KlEngine, stderr: &mut String) {
    if common.no_cache || !eng.is_dirty() {
        return;
    }
    let sys = eng.sys();
    let path = cache_file(&cache_dir(common.cache_dir.as_deref()), sys);
    match table::save(&path, sys.name(), sys.rank(), &eng.export_tables()) {
        Ok(()) => eng.mark_clean(),
        Err(e) => {
            let _ = writeln!(
                stderr,
                "warning[cache]: could not write {}: {e}",
                path.display()
            );
        }
    }
}

struct KlRequest {
    ctype: String,
    x: Option<String>,
    y: Option<String>,
    batch: Option<PathBuf>,
    parabolic: Option<String>,
    flavor: Option<FlavorArg>,
    inverse: bool,
}

fn run_kl(common: &Common, req: &KlRequest, stderr: &mut String) -> Res<String> {
    let pairs: Vec<(String, String)> = match (&req.batch, &req.x, &req.y) {
        (Some(path), None, None) => {
            let text = fs::read_to_string(path).map_err(Error::from)?;
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| {
                    l.split_once(';')
                        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                        .ok_or_else(|| Failure::usage(format!("batch line {l:?} is not 'x ; y'")))
                })
                .collect::<Res<_>>()?
        }
        (None, Some(x), Some(y)) => vec![(x.clone(), y.clone())],
        _ => return Err(Failure::usage("kl needs --x and --y, or --batch FILE")),
    };
    let fam = match (&req.parabolic, req.flavor) {
        (None, None) => None,
        (Some(i), Some(f)) => Some((i.clone(), f)),
        (Some(_), None) => return Err(Failure::usage("--parabolic needs --flavor")),
        (None, Some(_)) => return Err(Failure::usage("--flavor needs --parabolic")),
    };
    let sys = CoxeterSystem::from_type(&req.ctype)?;
    let fam = match fam {
        None => Family::H,
        Some((i, f)) => {
            let i = sys.parse_subset(&i)?;
            let flavor = match f {
                FlavorArg::Spherical => Flavor::Spherical,
                FlavorArg::Antispherical => Flavor::Antispherical,
            };
            Family::parabolic(&i, flavor)
        }
    };
    let els: Vec<(CoxeterElement, CoxeterElement)> = pairs
        .iter()
        .map(|(x, y)| Ok((sys.parse_word(x)?, sys.parse_word(y)?)))
        .collect::<Result<_, Error>>()?;
    let eng = open_engine(common, sys.clone(), stderr);
    let bound = common.max_length;
    let vals: Vec<Result<LaurentPoly, Error>> = tiltc_core::par::map(&els, |(x, y)| {
        if req.inverse {
            if sys.is_affine() && x.len() > bound {
                return Err(Error::Validation(format!(
                    "l(x) = {} exceeds --max-length {bound}",
                    x.len()
                )));
            }
            eng.inverse_poly(&fam, x, y, x.len().max(bound))
        } else {
            eng.direct_poly(&fam, x, y)
        }
    });
    let vals: Vec<LaurentPoly> = vals.into_iter().collect::<Result<_, Error>>()?;
    close_engine(common, &eng, stderr);
    let tag = fam.tag(req.inverse);
    let subset = sys.format_subset(fam.subset());
    let mut out = String::new();
    match common.format {
        Format::Text => {
            for ((x, y), p) in els.iter().zip(&vals) {
                if els.len() == 1 {
                    let _ = writeln!(out, "{p}");
                } else {
                    let _ = writeln!(out, "{}\t{}\t{p}", sys.format_word(x), sys.format_word(y));
                }
            }
        }
        Format::Json => {
            let recs: Vec<Value> = els
                .iter()
                .zip(&vals)
                .map(|((x, y), p)| {
                    json!({
                        "system": sys.name(),
                        "family": tag,
                        "I": subset,
                        "x": sys.format_word(x),
                        "y": sys.format_word(y),
                        "poly": p.to_json(),
                    })
                })
                .collect();
            let v = if recs.len() == 1 {
                recs[0].clone()
            } else {
                Value::Array(recs)
            };
            out = serde_json::to_string_pretty(&v).expect("json renders") + "\n";
        }
        Format::Tsv => {
            out.push_str("x\ty\texponent\tcoefficient\n");
            for ((x, y), p) in els.iter().zip(&vals) {
                for (k, c) in p.terms() {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{k}\t{c}",
                        sys.format_word(x),
                        sys.format_word(y)
                    );
                }
            }
        }
    }
    Ok(out)
}

struct TiltRequest {
    setting: SettingArg,
    ctype: String,
    x: Option<String>,
    y: Option<String>,
    kind: Kind,
    i: Option<String>,
    j: Option<String>,
    level: Option<LevelArg>,
    ell: Option<i64>,
    lambda: Option<String>,
    literal_positive: bool,
}

impl TiltRequest {
    fn validate(&self) -> Res<()> {
        let quantum = self.setting == SettingArg::Quantum;
        if self.level.is_some() != (self.setting == SettingArg::Km) {
            return Err(Failure::usage(
                "--level is required for km and only allowed there",
            ));
        }
        if quantum {
            if self.ell.is_none() {
                return Err(Failure::usage("quantum needs --ell"));
            }
            if self.lambda.is_some() == self.x.is_some() {
                return Err(Failure::usage(
                    "quantum needs exactly one of --lambda and --x",
                ));
            }
            if self.j.is_some() {
                return Err(Failure::usage(
                    "quantum blocks fix J to the finite generators",
                ));
            }
            if self.i.is_some() {
                return Err(Failure::usage("quantum blocks derive I from the weight"));
            }
        } else {
            if self.ell.is_some() || self.lambda.is_some() {
                return Err(Failure::usage(
                    "--ell and --lambda are only allowed for quantum",
                ));
            }
            if self.x.is_none() {
                return Err(Failure::usage("tilt needs --x"));
            }
        }
        if self.literal_positive
            && !(self.level == Some(LevelArg::Pos) && self.kind == Kind::Simple)
        {
            return Err(Failure::usage(
                "--literal-positive applies to km --level pos --simple",
            ));
        }
        Ok(())
    }
}

fn run_tilt(common: &Common, req: &TiltRequest, stderr: &mut String) -> Res<String> {
    let mut echo = None;
    let datum = match req.setting {
        SettingArg::Quantum => Some(LinkageDatum::from_str(
            &req.ctype,
            req.ell.expect("validated"),
        )?),
        _ => None,
    };
    let (sys, setting) = match req.setting {
        SettingArg::O => {
            let sys = CoxeterSystem::from_type(&req.ctype)?;
            if sys.is_affine() {
                return Err(Failure::usage(
                    "category O takes a finite type; use km for affine types",
                ));
            }
            (sys, Setting::O)
        }
        SettingArg::Km => {
            let sys = CoxeterSystem::from_type(&req.ctype)?;
            if !sys.is_affine() {
                return Err(Failure::usage("km takes an affine type such as affA1"));
            }
            let s = match req.level {
                Some(LevelArg::Pos) => Setting::KmPos,
                _ => Setting::KmNeg,
            };
            (sys, s)
        }
        SettingArg::Quantum => (
            datum.as_ref().expect("quantum datum").system().clone(),
            Setting::Quantum,
        ),
    };
    let eng = open_engine(common, sys.clone(), stderr);
    let table = match req.setting {
        SettingArg::Quantum => {
            let datum = datum.as_ref().expect("quantum datum");
            let rank = datum.ctype.rank;
            let (block, x) = match &req.lambda {
                Some(l) => {
                    let w = Weight::parse(l)?;
                    if w.0.len() != rank {
                        return Err(Error::Validation(format!(
                            "weight has {} coordinates, type has rank {rank}",
                            w.0.len()
                        ))
                        .into());
                    }
                    let (b, x) = QuantumBlock::from_weight(datum, &w)?;
                    echo = Some((
                        sys.format_word(&x),
                        b.lambda0.to_string(),
                        sys.format_subset(&b.i),
                    ));
                    (b, x)
                }
                None => {
                    // the block of the zero weight
                    let (b, _) = QuantumBlock::from_weight(datum, &Weight::zero(rank))?;
                    (b, sys.parse_word(req.x.as_deref().expect("validated"))?)
                }
            };
            let q = block.query(&eng, req.kind, common.max_length)?;
            answer(&q, &x, req.y.as_deref())?
        }
        _ => {
            let i = req
                .i
                .as_deref()
                .map(|s| sys.parse_subset(s))
                .transpose()?
                .unwrap_or_default();
            let j = req
                .j
                .as_deref()
                .map(|s| sys.parse_subset(s))
                .transpose()?
                .unwrap_or_default();
            let mut f = Formulas::new(&eng, &i, &j)?;
            f.literal_positive = req.literal_positive;
            let q = Query::new(f, setting, req.kind, common.max_length);
            let x = sys.parse_word(req.x.as_deref().expect("validated"))?;
            answer(&q, &x, req.y.as_deref())?
        }
    };
    close_engine(common, &eng, stderr);
    Ok(render_table(common.format, &table, echo))
}

fn answer(q: &Query<'_>, x: &CoxeterElement, y: Option<&str>) -> Res<MultiplicityPoly> {
    let mut t = q.table(x)?;
    if let Some(y) = y {
        let sys = q.f.sys();
        let yw = sys.parse_word(y)?;
        let p = q.entry(x, &yw)?;
        let key = sys.format_word(&yw);
        t.entries.retain(|e| e.y == key);
        if t.entries.is_empty() && !p.is_zero() {
            return Err(
                Error::Internal(format!("entry at y = \"{key}\" missing from the table")).into(),
            );
        }
        if let Some(e) = t.entries.first() {
            if e.poly != p {
                return Err(Error::Internal(format!(
                    "entry at y = \"{key}\" disagrees with the table"
                ))
                .into());
            }
        }
    }
    Ok(t)
}

fn render_table(
    format: Format,
    t: &MultiplicityPoly,
    echo: Option<(String, String, Vec<usize>)>,
) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            if let Some((x, l0, i)) = &echo {
                let _ = writeln!(out, "normalized: x=\"{x}\" lambda0=({l0}) I={i:?}");
            }
            out + &t.to_string()
        }
        Format::Json => {
            let mut v = t.to_json();
            if let Some((x, l0, i)) = echo {
                v["normalized"] = json!({"x": x, "lambda0": l0, "I": i});
            }
            serde_json::to_string_pretty(&v).expect("json renders") + "\n"
        }
        Format::Tsv => t.to_tsv(),
    }
}

fn load_block(name: &str) -> Res<HwBlock> {
    if tiltc_core::mincpx::block::builtin(name).is_some() {
        return Ok(HwBlock::builtin(name)?);
    }
    let path = Path::new(name);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(Error::from)?;
        return Ok(HwBlock::parse(&text)?);
    }
    Err(Failure {
        code: EXIT_VALIDATION,
        reason: "validation".into(),
        message: format!("no shipped block or file named {name}"),
        stdout: String::new(),
    })
}

fn run_oracle(cmd: OracleCmd) -> Res<String> {
    match cmd {
        OracleCmd::Verify { common, block } => {
            let b = load_block(&block)?;
            let suites = tiltc_core::par::with_jobs(common.jobs, || verify(&b))?;
            let failed: Vec<&str> = suites
                .iter()
                .filter(|s| !s.report.passed())
                .map(|s| s.name)
                .collect();
            let mut out = String::new();
            match common.format {
                Format::Json => {
                    let v: Vec<Value> = suites
                        .iter()
                        .map(|s| json!({"suite": s.name, "checks": s.report.checks, "failures": s.report.failures}))
                        .collect();
                    out = serde_json::to_string_pretty(&json!({"block": block, "suites": v}))
                        .expect("json renders")
                        + "\n";
                }
                _ => {
                    for s in &suites {
                        let status = if s.report.passed() { "pass" } else { "FAIL" };
                        let _ = writeln!(out, "{}: {status} ({} checks)", s.name, s.report.checks);
                        for f in &s.report.failures {
                            let _ = writeln!(out, "  {f}");
                        }
                    }
                    if failed.is_empty() {
                        let _ = writeln!(out, "all {} invariant suites pass", suites.len());
                    }
                }
            }
            if !failed.is_empty() {
                return Err(Failure {
                    code: EXIT_INTERNAL,
                    reason: "internal".into(),
                    message: format!("invariant suites failed: {}", failed.join(", ")),
                    stdout: out,
                });
            }
            Ok(out)
        }
        OracleCmd::Cmin {
            common,
            block,
            module,
        } => {
            let b = load_block(&block)?;
            let m = b.module(&module)?;
            let c = b.cmin_module(m)?.complex;
            let mut out = String::new();
            match common.format {
                Format::Json => {
                    let terms: Vec<Value> = c
                        .terms
                        .iter()
                        .enumerate()
                        .map(|(k, t)| {
                            json!({
                                "degree": c.lo + k as i32,
                                "labels": t.iter().map(|&a| b.tilt.labels[a].clone()).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let counts: serde_json::Map<String, Value> = b
                        .readout(&c)
                        .into_iter()
                        .map(|(a, p)| (b.tilt.labels[a].clone(), p.to_json()))
                        .collect();
                    let v = json!({"module": module, "terms": terms, "counts": counts});
                    out = serde_json::to_string_pretty(&v).expect("json renders") + "\n";
                }
                _ => {
                    out.push_str(&c.render(&b.tilt));
                    for (a, p) in b.readout(&c) {
                        let _ = writeln!(out, "[{} : {}] = {p}", module, b.tilt.labels[a]);
                    }
                }
            }
            Ok(out)
        }
    }
}

fn run_cache(cmd: CacheCmd) -> Res<String> {
    let (path, clear) = match cmd {
        CacheCmd::Info { path } => (path, false),
        CacheCmd::Clear { path } => (path, true),
    };
    let dir = cache_dir(path.as_deref());
    let mut files: Vec<PathBuf> = match fs::read_dir(&dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == CACHE_EXT))
            .collect(),
        Err(_) => vec![],
    };
    files.sort();
    let mut out = String::new();
    let _ = writeln!(out, "cache: {}", dir.display());
    if clear {
        for f in &files {
            fs::remove_file(f).map_err(Error::from)?;
        }
        let _ = writeln!(out, "removed {} file(s)", files.len());
        return Ok(out);
    }
    for f in &files {
        let text = fs::read_to_string(f).map_err(Error::from)?;
        let records = text.lines().count().saturating_sub(1);
        let size = text.len();
        let head: Value = text
            .lines()
            .next()
            .and_then(|h| serde_json::from_str(h).ok())
            .unwrap_or(Value::Null);
        let system = head["system"].as_str().unwrap_or("?");
        let status = match head["generators"].as_u64() {
            Some(g) => match table::parse(&text, system, g as usize) {
                Ok(_) => "ok",
                Err(_) => "corrupt",
            },
            None => "corrupt",
        };
        let _ = writeln!(
            out,
            "{}\tsystem={system}\trecords={records}\tbytes={size}\t{status}",
            f.file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default()
        );
    }
    if files.is_empty() {
        let _ = writeln!(out, "empty");
    }
    Ok(out)
}
