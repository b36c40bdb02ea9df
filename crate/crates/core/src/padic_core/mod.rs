//! Exact rationals, precision-tracked p-adic residues, and the p-adic
//! special functions the hypergeometric coefficients need.
//!
//! All values are immutable; every operation is a pure function.

pub mod ball;
pub mod branch;
pub mod modular;
pub mod rational;
pub mod scaled;
pub mod special;

pub use ball::{BallOp, PadicBall};
pub use branch::{branch_constants, BranchConstants};
pub use rational::{format_rational, parse_rational, reduce, valuation, Rational};
pub use scaled::ScaledUnit;
pub use special::{iwasawa_log_unit, pow_binomial, psi_gamma};
