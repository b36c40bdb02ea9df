//! Command-line front end for the `phg` binary.

pub mod scan;
pub mod values;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::hypergeom::params::default_len;
use crate::hypergeom::{evaluate, CoeffTable, FnKind, HGParams};
use crate::padic_core::rational::int;
use crate::padic_core::{parse_rational, Rational};
use crate::verify::{run_check, CheckKind, CheckOptions, Fault, VerifyReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PRECISION: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "phg", version, about = "p-adic hypergeometric congruence checker")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the coefficient table as CSV: k,A_k,v_p,B_k,prec.
    Coeffs(ParamArgs),
    /// Print one of the quotient functions as a truncated series.
    Fn {
        #[arg(value_enum)]
        function: FnArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run one check and print its JSON report.
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        opts: OptionArgs,
    },
    /// Run checks over a parameter grid, writing one JSON report per line.
    Scan(scan::ScanArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long)]
    pub p: u64,
    /// Parameter a, as `u/v` or an integer.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// Frobenius constant, as a rational or an expression like `1+2*p`.
    #[arg(long, default_value = "1")]
    pub c: String,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Series length M; defaults to 2p^n + 2p.
    #[arg(long = "deg")]
    pub deg: Option<usize>,
    /// Working precision; defaults to the growth bound for M.
    #[arg(long)]
    pub nw: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct OptionArgs {
    /// Corrupt one tested residue; the index meaning depends on the check.
    #[arg(long = "inject-fault")]
    pub inject_fault: Option<usize>,
    /// Lipschitz modulus exponent (defaults to n).
    #[arg(long = "lip-m")]
    pub lip_m: Option<u32>,
    #[arg(long, default_value_t = 100)]
    pub pairs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "sm-max", default_value_t = 30)]
    pub sm_max: usize,
    /// Branch index for blal.
    #[arg(long, default_value_t = 0)]
    pub l: u64,
    /// Unit multiplier for blal.
    #[arg(long, default_value_t = 1)]
    pub d: i64,
}

impl OptionArgs {
    pub fn to_options(&self) -> CheckOptions {
        CheckOptions {
            fault: self.inject_fault.map(|index| Fault { index }),
            lipschitz_m: self.lip_m,
            lipschitz_pairs: self.pairs,
            seed: self.seed,
            sm_max: self.sm_max,
            blal_l: self.l,
            blal_d: self.d,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum FnArg {
    Dwork,
    Log,
    Hat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum CheckArg {
    Hat,
    Dwork,
    Log,
    Factor,
    Lipschitz,
    Blal,
    Sm,
    Reflect,
    TransformLog,
    TransformDwork,
}

impl From<CheckArg> for CheckKind {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Hat => CheckKind::Hat,
            CheckArg::Dwork => CheckKind::Dwork,
            CheckArg::Log => CheckKind::Log,
            CheckArg::Factor => CheckKind::Factor,
            CheckArg::Lipschitz => CheckKind::Lipschitz,
            CheckArg::Blal => CheckKind::Blal,
            CheckArg::Sm => CheckKind::Sm,
            CheckArg::Reflect => CheckKind::Reflect,
            CheckArg::TransformLog => CheckKind::TransformLog,
            CheckArg::TransformDwork => CheckKind::TransformDwork,
        }
    }
}

/// Exit status for an error that stopped a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InsufficientPrecision(_)
        | Error::PrecisionOverflow { .. }
        | Error::InsufficientCoefficients { .. }
        | Error::NotInvertible
        | Error::DlogUndefined => EXIT_PRECISION,
        Error::InfiniteValuation
        | Error::NotIntegral(_)
        | Error::InvalidFrobenius { .. }
        | Error::PrimeMismatch(..)
        | Error::InvalidParameter(_) => EXIT_INVALID,
    }
}

/// Exit status for a finished report.
pub fn report_code(r: &VerifyReport) -> i32 {
    if r.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Builds validated parameters. When `uses_c` is false the Frobenius
/// constant plays no part and is fixed to 1.
pub fn build_params(p: u64, a: &Rational, s: u32, c: &Rational, n: u32, deg: Option<usize>, nw: Option<u32>, uses_c: bool) -> Result<HGParams> {
    let c = if uses_c { c.clone() } else { int(1) };
    let m = deg.unwrap_or_else(|| default_len(p, n));
    match nw {
        Some(nw) => HGParams::with_all(p, a.clone(), s, c, n, m, nw),
        None => HGParams::with_len(p, a.clone(), s, c, n, m),
    }
}

impl ParamArgs {
    fn a(&self) -> Result<Rational> {
        let text = self.a.as_deref().ok_or_else(|| Error::InvalidParameter("--a is required".into()))?;
        parse_rational(text)
    }

    pub fn to_params(&self, uses_c: bool) -> Result<HGParams> {
        let c = values::parse_c(&self.c, self.p)?;
        build_params(self.p, &self.a()?, self.s, &c, self.n, self.deg, self.nw, uses_c)
    }
}

fn run_verify(check: CheckKind, params: &ParamArgs, opts: &OptionArgs, out: &mut dyn Write) -> Result<i32> {
    let h = if check == CheckKind::Blal {
        crate::verify::blal_params(params.p, params.n, opts.l, opts.d)?
    } else {
        params.to_params(check.uses_frobenius_constant())?
    };
    let r = run_check(check, &h, &opts.to_options())?;
    writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("report serializes")).map_err(io_err)?;
    Ok(report_code(&r))
}

fn run_fn(function: FnArg, params: &ParamArgs, format: Format, out: &mut dyn Write) -> Result<i32> {
    let (kind, uses_c, name) = match function {
        FnArg::Dwork => (FnKind::Dwork, false, "dwork"),
        FnArg::Log => (FnKind::Log, true, "log"),
        FnArg::Hat => (FnKind::Hat, true, "hat"),
    };
    let h = params.to_params(uses_c)?;
    let f = evaluate(kind, &h)?;
    match format {
        Format::Json => {
            let v = serde_json::json!({ "function": name, "params": h.to_json(), "series": f.to_json() });
            writeln!(out, "{v}").map_err(io_err)?;
        }
        Format::Text => {
            for (k, b) in f.coeffs().iter().enumerate() {
                writeln!(out, "{k} {} {}", b.residue(), b.precision()).map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn run_coeffs(params: &ParamArgs, out: &mut dyn Write) -> Result<i32> {
    let h = params.to_params(true)?;
    let t = CoeffTable::build(&h)?;
    out.write_all(t.to_csv().as_bytes()).map_err(io_err)?;
    Ok(EXIT_PASS)
}

pub(crate) fn io_err(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("output: {e}"))
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the exit status. Reports go to `out`, diagnostics to `err`.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_INVALID,
            };
        }
    };
    let result = match &cli.command {
        Command::Coeffs(params) => run_coeffs(params, out),
        Command::Fn { function, params, format } => run_fn(*function, params, *format, out),
        Command::Verify { check, params, opts } => run_verify((*check).into(), params, opts, out),
        Command::Scan(args) => scan::run_scan(args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
