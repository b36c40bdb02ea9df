//! Grid scans: every grid point runs in parallel, reports are written in
//! grid order as soon as all earlier points are done.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::sync::mpsc;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use super::values::{parse_c, parse_int_list, parse_rational_list, split_list};
use super::{build_params, exit_code, io_err, EXIT_FAIL, EXIT_PASS, EXIT_PRECISION};
use crate::error::{Error, Result};
use crate::hypergeom::HGParams;
use crate::padic_core::branch_constants;
use crate::padic_core::special::check_frobenius;
use crate::verify::{blal_params, run_check, CheckKind, CheckOptions, Fault};

#[derive(Args, Debug, Clone)]
pub struct ScanArgs {
    /// Checks to run, comma separated (e.g. `hat,transform-log`).
    #[arg(long)]
    pub check: String,
    /// Primes, e.g. `3,5,7`.
    #[arg(long)]
    pub p: String,
    /// Parameters a, e.g. `1/3,1/2,22`.
    #[arg(long, default_value = "")]
    pub a: String,
    #[arg(long, default_value = "1")]
    pub s: String,
    /// Frobenius constants; `p` expressions are resolved per prime.
    #[arg(long, default_value = "1")]
    pub c: String,
    #[arg(long, default_value = "1")]
    pub n: String,
    /// Series length M for every point; defaults to 2p^n + 2p.
    #[arg(long = "deg")]
    pub deg: Option<usize>,
    /// JSONL output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Corrupt the given index at every grid point.
    #[arg(long = "inject-fault")]
    pub inject_fault: Option<usize>,
    /// Append one extra run of the first grid point with this index corrupted.
    #[arg(long = "control-fault")]
    pub control_fault: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub pairs: usize,
    #[arg(long = "sm-max", default_value_t = 30)]
    pub sm_max: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

/// One unit of work in a scan.
#[derive(Clone, Debug)]
pub struct GridPoint {
    pub check: CheckKind,
    pub params: HGParams,
    pub options: CheckOptions,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub conjectural_pass: usize,
    pub conjectural_fail: usize,
    pub error: usize,
    pub total: usize,
}

impl Summary {
    pub fn exit_code(&self) -> i32 {
        if self.fail + self.conjectural_fail > 0 {
            EXIT_FAIL
        } else if self.error > 0 {
            EXIT_PRECISION
        } else {
            EXIT_PASS
        }
    }
}

/// Expands the grid, skipping combinations that are not defined, with a
/// note for each skip on `err`.
pub fn expand_grid(args: &ScanArgs, err: &mut dyn Write) -> Result<Vec<GridPoint>> {
    let checks = split_list(&args.check).iter().map(|c| c.parse::<CheckKind>()).collect::<Result<Vec<_>>>()?;
    let primes: Vec<u64> = parse_int_list(&args.p)?;
    let a_list = parse_rational_list(&args.a)?;
    let s_list: Vec<u32> = parse_int_list(&args.s)?;
    let c_list = split_list(&args.c);
    let n_list: Vec<u32> = parse_int_list(&args.n)?;
    let base = CheckOptions { fault: args.inject_fault.map(|index| Fault { index }), lipschitz_pairs: args.pairs, seed: args.seed, sm_max: args.sm_max, ..CheckOptions::default() };
    let mut out = Vec::new();
    for &check in &checks {
        for &p in &primes {
            if check == CheckKind::Blal {
                for &n in &n_list {
                    for l in 0..p {
                        let options = CheckOptions { blal_l: l, ..base.clone() };
                        out.push(GridPoint { check, params: blal_params(p, n, l, 1)?, options });
                    }
                }
                continue;
            }
            let cs: Vec<String> = if check.uses_frobenius_constant() { c_list.clone() } else { vec!["1".into()] };
            for a in &a_list {
                if let Err(e) = branch_constants(a, p) {
                    let _ = writeln!(err, "skip: {check} p={p} a={a}: {e}");
                    continue;
                }
                for &s in &s_list {
                    for c_text in &cs {
                        let c = parse_c(c_text, p)?;
                        if let Err(e) = check_frobenius(&c, p) {
                            let _ = writeln!(err, "skip: {check} p={p} c={c_text}: {e}");
                            continue;
                        }
                        for &n in &n_list {
                            let params = build_params(p, a, s, &c, n, args.deg, None, true)?;
                            out.push(GridPoint { check, params, options: base.clone() });
                        }
                    }
                }
            }
        }
    }
    if let (Some(index), Some(first)) = (args.control_fault, out.first().cloned()) {
        let options = CheckOptions { fault: Some(Fault { index }), ..first.options.clone() };
        out.push(GridPoint { options, ..first });
    }
    Ok(out)
}

/// One JSON line and its tally category.
fn run_point(point: &GridPoint) -> (String, Outcome) {
    match run_check(point.check, &point.params, &point.options) {
        Ok(r) => {
            let outcome = match (r.conjectural, r.pass) {
                (false, true) => Outcome::Pass,
                (false, false) => Outcome::Fail,
                (true, true) => Outcome::ConjecturalPass,
                (true, false) => Outcome::ConjecturalFail,
            };
            (serde_json::to_string(&r).expect("report serializes"), outcome)
        }
        Err(e) => {
            let v = serde_json::json!({
                "check": point.check.name(),
                "params": point.params.to_json(),
                "error": e.to_string(),
                "exit": exit_code(&e),
            });
            (v.to_string(), Outcome::Error)
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Outcome {
    Pass,
    Fail,
    ConjecturalPass,
    ConjecturalFail,
    Error,
}

/// Runs every point and writes reports in grid order followed by the summary.
pub fn scan_grid(points: &[GridPoint], threads: usize, sink: &mut dyn Write) -> Result<Summary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let (tx, rx) = mpsc::channel::<(usize, String, Outcome)>();
    let mut summary = Summary { total: points.len(), ..Summary::default() };
    let mut write_result: Result<()> = Ok(());
    pool.in_place_scope(|scope| {
        scope.spawn(move |_| {
            points.par_iter().enumerate().for_each_with(tx, |tx, (i, point)| {
                let (line, outcome) = run_point(point);
                let _ = tx.send((i, line, outcome));
            });
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, line, outcome) in rx.iter() {
            pending.insert(i, (line, outcome));
            while let Some((line, outcome)) = pending.remove(&next) {
                match outcome {
                    Outcome::Pass => summary.pass += 1,
                    Outcome::Fail => summary.fail += 1,
                    Outcome::ConjecturalPass => summary.conjectural_pass += 1,
                    Outcome::ConjecturalFail => summary.conjectural_fail += 1,
                    Outcome::Error => summary.error += 1,
                }
                if write_result.is_ok() {
                    write_result = writeln!(sink, "{line}").and_then(|_| sink.flush()).map_err(io_err);
                }
                next += 1;
            }
        }
    });
    write_result?;
    let summary_json = serde_json::to_string(&summary).expect("summary serializes");
    writeln!(sink, "{{\"summary\":{summary_json}}}").map_err(io_err)?;
    sink.flush().map_err(io_err)?;
    Ok(summary)
}

pub fn run_scan(args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let points = expand_grid(args, err)?;
    let summary = match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            scan_grid(&points, args.threads, &mut w)?
        }
        None => scan_grid(&points, args.threads, out)?,
    };
    let _ = writeln!(
        err,
        "scan: {} points, {} pass, {} fail, {} conjectural pass, {} conjectural fail, {} error",
        summary.total, summary.pass, summary.fail, summary.conjectural_pass, summary.conjectural_fail, summary.error
    );
    Ok(summary.exit_code())
}
