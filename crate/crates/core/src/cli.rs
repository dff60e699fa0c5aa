//! Command-line front end. `run` returns the process exit code: 0 on success,
//! 1 when a verification suite fails, 2 on usage or domain errors.

use crate::boundary::{boundary_scan, log_grid, RationalAngle};
use crate::divisor::{fig1_table, sigma_o_minus2, DivisorTable, SIGMA_UPPER};
use crate::error::{Error, Result};
use crate::legfn_cs::{cs_identity_residual, cs_partition_log, leg_p, leg_p_root, one_point, LegRoute};
use crate::mordell::{dual_auto_kmax, fig2_scan, j_dual_continued, j_mellin_barnes, j_quadrature, Branch};
use crate::resurgence::{borel_pole_coeffs, borel_transform, lateral_difference, stokes_discontinuity, LATERAL_OFFSET};
use crate::scan::{fmt_g15, ScanTable};
use crate::v_function::{v_by_route, v_eval, VRoute};
use crate::verify::{run_suite, Suite};
use crate::{c64, C64};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

pub const THREADS_ENV: &str = "BOUNDARY_SCOPE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "boundary-scope", version, about = "Numerics for v(1/N), its natural boundary and the attached identities")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Target tolerance, within [1e-14, 1e-2]
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    /// Term cap for truncated series (Stokes sum, false theta)
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Output file for tables (stdout if absent)
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads for scans
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VMethod {
    Auto,
    Integral,
    MellinBarnes,
    Loggamma,
    Borel,
    Series,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LegMethod {
    Sqrt,
    Finite,
    Integral,
    Asymptotic,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JMethod {
    Quadrature,
    MellinBarnes,
    Dual,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    V,
    Boundary,
    Divisor,
    Resurgence,
    Cs,
    Mordell,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate v(1/N)
    V {
        /// N as a complex literal, e.g. 10, 1+1i, -0.5+2e-3i
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        n: C64,
        #[arg(long, value_enum, default_value_t = VMethod::Auto)]
        method: VMethod,
    },
    /// Scan the singular sum and reflection residual along y at rational x
    BoundaryScan {
        /// x as p/q in lowest terms
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 1e-4)]
        y_min: f64,
        #[arg(long, default_value_t = 1e-1)]
        y_max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
    /// σ₋₂ᵒ(n) for one n, or the table up to n_max
    Divisor {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 3000)]
        n_max: usize,
    },
    /// Borel transform, pole data and Stokes discontinuity
    Resurgence {
        /// Evaluate B[v](t)
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        t: Option<C64>,
        /// Print Laurent data of the poles l = 1..=L
        #[arg(long)]
        poles: Option<i64>,
        /// Compare the Stokes series with the lateral Laplace difference at N
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        stokes: Option<C64>,
    },
    /// Leg function p(𝒵, 𝔮), 𝔮 = e^{iπ/N}
    Legfn {
        #[arg(long)]
        n: u32,
        /// Root exponent: 𝒵 = 𝔮^j, 0 ≤ j < 2N
        #[arg(long)]
        j: Option<i64>,
        /// General 𝒵 off the positive real axis
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        z: Option<C64>,
        #[arg(long, value_enum, default_value_t = LegMethod::All)]
        method: LegMethod,
    },
    /// ln Z(N, k) and the P(𝔮) identity residual
    Cs {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// One-point function from v and from P(𝔮)
    Onepoint {
        #[arg(long)]
        n: u32,
    },
    /// Mordell integral J(t)
    Mordell {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        t: C64,
        #[arg(long, value_enum, default_value_t = JMethod::All)]
        method: JMethod,
        #[arg(long, value_enum, default_value_t = BranchArg::Upper)]
        branch: BranchArg,
    },
    /// Figure data: 1 = divisor table, 2 = Mordell scan near the negative axis
    Fig {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long, default_value_t = 3000)]
        n_max: usize,
        #[arg(long, default_value_t = 2000)]
        points: usize,
        #[arg(long, default_value_t = 800)]
        k_max: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = -2e-4)]
        re_t: f64,
        #[arg(long, value_enum, default_value_t = SignArg::Both)]
        sign: SignArg,
    },
    /// Run identity-verification suites
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` with optional scientific notation; `j`
/// is accepted for `i`.
pub fn parse_complex(s: &str) -> std::result::Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse '{s}' as a complex number (expected a+bi)");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return t.parse::<f64>().map(|x| c64(x, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |p: &str| -> std::result::Result<f64, String> {
        match p {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => p.parse::<f64>().map_err(|_| bad()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| bad())?;
            Ok(c64(re, imag(&body[k..])?))
        }
        None => Ok(c64(0.0, imag(body)?)),
    }
}

/// Formats a complex value as `a+bi` with 15 significant digits.
pub fn fmt_complex(z: C64) -> String {
    let im = fmt_g15(z.im);
    if im.starts_with('-') {
        format!("{}{}i", fmt_g15(z.re), im)
    } else {
        format!("{}+{}i", fmt_g15(z.re), im)
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1e-14..=1e-2).contains(&self.tol) {
            return Err(Error::Domain(format!("--tol must lie in [1e-14, 1e-2], got {}", self.tol)));
        }
        if self.threads == Some(0) {
            return Err(Error::Domain("--threads must be at least 1".into()));
        }
        Ok(())
    }
}

/// Parses `args` and runs the command, writing text output to `out`.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = cli.config.validate() {
        eprintln!("error: {e}");
        return 2;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.config.threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: thread pool: {e}");
            return 2;
        }
    };
    match pool.install(|| dispatch(&cli, out)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(table: &ScanTable, cfg: &RunConfig, out: &mut dyn Write) -> Result<()> {
    let body = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Svg => table.to_svg(),
    };
    match &cfg.out {
        Some(p) => std::fs::write(p, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

/// Appends `suffix` before the extension of the output path, if any.
fn suffixed(cfg: &RunConfig, suffix: &str) -> RunConfig {
    let mut c = cfg.clone();
    if let Some(p) = &cfg.out {
        let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let name = match p.extension() {
            Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
            None => format!("{stem}_{suffix}"),
        };
        c.out = Some(p.with_file_name(name));
    }
    c
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    let tol = cfg.tol;
    match &cli.command {
        Command::V { n, method } => cmd_v(*n, *method, tol, out),
        Command::BoundaryScan { x, y_min, y_max, points } => {
            let x = RationalAngle::parse(x)?;
            if *points < 2 || !(*y_min > 0.0 && *y_max > *y_min) {
                return Err(Error::Domain(format!(
                    "empty y range: need 0 < y_min < y_max and points ≥ 2, got [{y_min}, {y_max}] with {points} points"
                )));
            }
            let mut ys = log_grid(*y_min, *y_max, *points);
            ys.reverse();
            emit(&boundary_scan(x, &ys, tol)?, cfg, out)?;
            Ok(0)
        }
        Command::Divisor { n, n_max } => {
            if let Some(n) = n {
                if *n == 0 {
                    return Err(Error::Domain("σ₋₂ᵒ(n) needs n ≥ 1".into()));
                }
                let s = sigma_o_minus2(*n);
                writeln!(out, "sigma_o_minus2({n}) = {s} = {}", fmt_g15(*s.numer() as f64 / *s.denom() as f64))?;
                return Ok(0);
            }
            if *n_max == 0 {
                return Err(Error::Domain("--n-max must be at least 1".into()));
            }
            emit(&fig1_table(*n_max), cfg, out)?;
            Ok(0)
        }
        Command::Resurgence { t, poles, stokes } => {
            if t.is_none() && poles.is_none() && stokes.is_none() {
                return Err(Error::Domain("give at least one of --t, --poles, --stokes".into()));
            }
            if let Some(t) = t {
                writeln!(out, "B[v]({}) = {}", fmt_complex(*t), fmt_complex(borel_transform(*t, 0.0)?))?;
            }
            if let Some(l) = poles {
                if *l < 1 {
                    return Err(Error::Domain("--poles must be at least 1".into()));
                }
                for l in 1..=*l {
                    let p = borel_pole_coeffs(l);
                    writeln!(
                        out,
                        "l={l} double={} single={}",
                        fmt_complex(p.double_pole_coeff),
                        fmt_complex(p.single_pole_coeff)
                    )?;
                }
            }
            if let Some(n) = stokes {
                let s = stokes_discontinuity(*n, cfg.max_terms.unwrap_or(60))?;
                let d = lateral_difference(*n, LATERAL_OFFSET, tol)?;
                writeln!(out, "stokes_series = {}", fmt_complex(s))?;
                writeln!(out, "lateral_difference = {}", fmt_complex(d))?;
                writeln!(out, "relative_deviation = {}", fmt_g15((s - d).norm() / s.norm()))?;
            }
            Ok(0)
        }
        Command::Legfn { n, j, z, method } => cmd_legfn(*n, *j, *z, *method, out),
        Command::Cs { n, k } => {
            let k = k.unwrap_or(*n);
            writeln!(out, "ln Z({n},{k}) = {}", fmt_complex(cs_partition_log(*n, k)?))?;
            writeln!(out, "identity_residual = {}", fmt_g15(cs_identity_residual(*n)?))?;
            Ok(0)
        }
        Command::Onepoint { n } => {
            let o = one_point(*n, tol)?;
            writeln!(out, "via_v = {}", fmt_g15(o.via_v))?;
            writeln!(out, "via_P = {}", fmt_g15(o.via_p))?;
            writeln!(out, "difference = {}", fmt_g15((o.via_v - o.via_p).abs()))?;
            Ok(0)
        }
        Command::Mordell { t, method, branch } => cmd_mordell(*t, *method, *branch, cfg, out),
        Command::Fig { which, n_max, points, k_max, re_t, sign } => {
            if *which == 1 {
                if *n_max == 0 {
                    return Err(Error::Domain("--n-max must be at least 1".into()));
                }
                let table = fig1_table(*n_max);
                let inside = DivisorTable::new(*n_max);
                if !crate::divisor::fig1_rows_within_bounds(&inside) {
                    return Err(Error::Domain(format!("a row leaves [1, {SIGMA_UPPER})")));
                }
                emit(&table, cfg, out)?;
                return Ok(0);
            }
            let k = cfg.max_terms.unwrap_or(*k_max);
            let mut run_sign = |s: f64, c: &RunConfig| -> Result<()> {
                emit(&fig2_scan(*re_t, 0.5, 1.5, *points, k, s)?, c, out)
            };
            match sign {
                SignArg::Plus => run_sign(1.0, cfg)?,
                SignArg::Minus => run_sign(-1.0, cfg)?,
                SignArg::Both => {
                    run_sign(1.0, &suffixed(cfg, "plus"))?;
                    run_sign(-1.0, &suffixed(cfg, "minus"))?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::V => vec![Suite::V],
                SuiteArg::Boundary => vec![Suite::Boundary],
                SuiteArg::Divisor => vec![Suite::Divisor],
                SuiteArg::Resurgence => vec![Suite::Resurgence],
                SuiteArg::Cs => vec![Suite::Cs],
                SuiteArg::Mordell => vec![Suite::Mordell],
            };
            let mut failed = Vec::new();
            for s in suites {
                for c in run_suite(s, tol) {
                    writeln!(out, "{c}")?;
                    if !c.passed {
                        failed.push(format!("{}/{}", c.suite, c.name));
                    }
                }
            }
            if failed.is_empty() {
                writeln!(out, "all invariants passed")?;
                Ok(0)
            } else {
                writeln!(out, "failing invariants: {}", failed.join("; "))?;
                Ok(1)
            }
        }
    }
}

fn cmd_v(n: C64, method: VMethod, tol: f64, out: &mut dyn Write) -> Result<i32> {
    if n.im == 0.0 && n.re < 0.0 {
        return Err(Error::Domain(format!(
            "N = {} lies on the negative real axis, the natural boundary of v(1/N)",
            fmt_g15(n.re)
        )));
    }
    let single = |r: VRoute| v_by_route(n, r, tol);
    let report = |out: &mut dyn Write, e: &crate::v_function::VEvaluation| -> Result<()> {
        writeln!(out, "{:<14} {}  abs_err={}", e.route.name(), fmt_complex(e.value), fmt_g15(e.abs_err))?;
        Ok(())
    };
    let eval = match method {
        VMethod::Auto => v_eval(n, tol)?,
        VMethod::Integral => single(VRoute::Integral)?,
        VMethod::MellinBarnes => single(VRoute::MellinBarnes)?,
        VMethod::Loggamma => single(VRoute::LogGammaSum)?,
        VMethod::Borel => single(VRoute::BorelLaplace)?,
        VMethod::Series => single(VRoute::Series)?,
        VMethod::All => {
            let mut vals = Vec::new();
            let mut first_err = None;
            for r in [VRoute::Integral, VRoute::MellinBarnes, VRoute::LogGammaSum, VRoute::BorelLaplace] {
                match single(r) {
                    Ok(e) => {
                        report(out, &e)?;
                        vals.push(e.value);
                    }
                    Err(e) => {
                        writeln!(out, "{:<14} unavailable: {e}", r.name())?;
                        first_err.get_or_insert(e);
                    }
                }
            }
            if vals.is_empty() {
                return Err(first_err.unwrap_or_else(|| Error::Domain("no route applies".into())));
            }
            let mut spread: f64 = 0.0;
            for a in &vals {
                for b in &vals {
                    spread = spread.max((a - b).norm());
                }
            }
            writeln!(out, "max_route_spread {}", fmt_g15(spread))?;
            return Ok(0);
        }
    };
    report(out, &eval)?;
    Ok(0)
}

fn cmd_legfn(n: u32, j: Option<i64>, z: Option<C64>, method: LegMethod, out: &mut dyn Write) -> Result<i32> {
    if let Some(z) = z {
        let e = leg_p(z, n)?;
        writeln!(out, "p = {}", fmt_complex(e.value))?;
        return Ok(0);
    }
    let j = j.ok_or_else(|| Error::Domain("give --j or --z".into()))?;
    let routes: Vec<(LegRoute, &str)> = match method {
        LegMethod::Sqrt => vec![(LegRoute::SqrtProduct, "sqrt-product")],
        LegMethod::Finite => vec![(LegRoute::FiniteProduct, "finite-product")],
        LegMethod::Integral => vec![(LegRoute::IntegralRep, "integral-rep")],
        LegMethod::Asymptotic => vec![(LegRoute::Asymptotic, "asymptotic")],
        LegMethod::All => vec![
            (LegRoute::SqrtProduct, "sqrt-product"),
            (LegRoute::FiniteProduct, "finite-product"),
            (LegRoute::IntegralRep, "integral-rep"),
        ],
    };
    let single = routes.len() == 1;
    for (r, name) in routes {
        match leg_p_root(n, j, r) {
            Ok(e) => writeln!(out, "{name:<15} {}", fmt_complex(e.value))?,
            Err(e) if !single && matches!(e, Error::Domain(_)) && j == 0 => {
                writeln!(out, "{name:<15} unavailable: {e}")?
            }
            Err(e) => return Err(e),
        }
    }
    Ok(0)
}

fn cmd_mordell(t: C64, method: JMethod, branch: BranchArg, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let tol = cfg.tol;
    let branch = match branch {
        BranchArg::Upper => Branch::Upper,
        BranchArg::Lower => Branch::Lower,
    };
    let dual = || {
        let k = cfg.max_terms.unwrap_or_else(|| dual_auto_kmax(t));
        j_dual_continued(t, branch, k)
    };
    let routes: Vec<(&str, Box<dyn Fn() -> Result<crate::mordell::MordellEvaluation>>)> = vec![
        ("quadrature", Box::new(move || j_quadrature(t, tol))),
        ("mellin-barnes", Box::new(move || {
            // on the negative axis the branch picks Arg t = ±π
            if t.im == 0.0 && t.re < 0.0 {
                crate::mordell::j_mellin_barnes_polar(-t.re, branch.sign() * std::f64::consts::PI, tol, 0.5)
            } else {
                j_mellin_barnes(t, tol, 0.5)
            }
        })),
        ("dual", Box::new(dual)),
    ];
    let wanted: &[&str] = match method {
        JMethod::Quadrature => &["quadrature"],
        JMethod::MellinBarnes => &["mellin-barnes"],
        JMethod::Dual => &["dual"],
        JMethod::All => &["quadrature", "mellin-barnes", "dual"],
    };
    let mut any = false;
    let mut last_err = None;
    for (name, f) in routes.iter().filter(|(n, _)| wanted.contains(n)) {
        match f() {
            Ok(e) => {
                any = true;
                writeln!(out, "{name:<14} {}", fmt_complex(e.value))?;
            }
            Err(e) if wanted.len() > 1 => {
                writeln!(out, "{name:<14} unavailable: {e}")?;
                last_err = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    if !any {
        return Err(last_err.unwrap_or_else(|| Error::Domain("no route applies".into())));
    }
    Ok(0)
}
