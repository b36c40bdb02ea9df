//! Residue-level checks of the congruences, lemmas and transformation formulas.
//!
//! Every check returns a [`VerifyReport`]; a failing comparison is a report
//! with `pass = false`, while an `Err` means the check could not be run.

pub mod congruence;
pub mod lemmas;
pub mod report;
pub mod transform;

use std::fmt;
use std::str::FromStr;

pub use congruence::{check_congruence_dwork, check_congruence_hat, check_congruence_log, check_trunc_factorization};
pub use lemmas::{blal_params, check_blal, check_lipschitz, check_reflection_unit, check_sm, sample_pairs};
pub use report::{DegreesChecked, FirstFailure, VerifyReport};
pub use transform::{check_example_mod_p, check_transform_dwork, check_transform_log, example_polynomial, is_proved_instance};

use crate::error::{Error, Result};
use crate::hypergeom::HGParams;

/// Deliberate corruption of one tested residue, for negative controls.
///
/// The meaning of `index` depends on the check: a coefficient degree for
/// series checks, a pair number for `lipschitz`, `m` for `sm`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fault {
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
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

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::Hat,
        CheckKind::Dwork,
        CheckKind::Log,
        CheckKind::Factor,
        CheckKind::Lipschitz,
        CheckKind::Blal,
        CheckKind::Sm,
        CheckKind::Reflect,
        CheckKind::TransformLog,
        CheckKind::TransformDwork,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Hat => "hat",
            CheckKind::Dwork => "dwork",
            CheckKind::Log => "log",
            CheckKind::Factor => "factor",
            CheckKind::Lipschitz => "lipschitz",
            CheckKind::Blal => "blal",
            CheckKind::Sm => "sm",
            CheckKind::Reflect => "reflect",
            CheckKind::TransformLog => "transform-log",
            CheckKind::TransformDwork => "transform-dwork",
        }
    }

    /// Checks whose statement involves `c` and so need `c = 1 mod 4` at `p = 2`.
    pub fn uses_frobenius_constant(self) -> bool {
        matches!(self, CheckKind::Hat | CheckKind::Log | CheckKind::Lipschitz | CheckKind::Sm | CheckKind::TransformLog)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check {s:?}")))
    }
}

/// Check-specific knobs beyond [`HGParams`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub fault: Option<Fault>,
    /// Exponent `m` of the Lipschitz modulus; defaults to `n`.
    pub lipschitz_m: Option<u32>,
    pub lipschitz_pairs: usize,
    pub seed: u64,
    pub sm_max: usize,
    pub blal_l: u64,
    pub blal_d: i64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { fault: None, lipschitz_m: None, lipschitz_pairs: 100, seed: 0, sm_max: 30, blal_l: 0, blal_d: 1 }
    }
}

/// Runs one check. For `blal` only `p` and `n` are taken from `h`.
pub fn run_check(kind: CheckKind, h: &HGParams, opts: &CheckOptions) -> Result<VerifyReport> {
    let fault = opts.fault;
    match kind {
        CheckKind::Hat => check_congruence_hat(h, fault),
        CheckKind::Dwork => check_congruence_dwork(h, fault),
        CheckKind::Log => check_congruence_log(h, fault),
        CheckKind::Factor => check_trunc_factorization(h, fault),
        CheckKind::Lipschitz => {
            let m = opts.lipschitz_m.unwrap_or(h.n);
            let pairs = sample_pairs(h.m, h.p.pow(m) as usize, opts.lipschitz_pairs, opts.seed);
            check_lipschitz(h, m, &pairs, fault)
        }
        CheckKind::Blal => check_blal(h.p, h.n, opts.blal_l, opts.blal_d, fault),
        CheckKind::Sm => check_sm(h, opts.sm_max, fault),
        CheckKind::Reflect => check_reflection_unit(h, fault),
        CheckKind::TransformLog => check_transform_log(h, fault),
        CheckKind::TransformDwork => check_transform_dwork(h, fault),
    }
}
