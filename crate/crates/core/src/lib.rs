//! Exact p-adic hypergeometric functions and a residue-level checker for
//! their congruence relations and transformation formulas.
//!
//! The crate computes, over `Z_p` restricted to rationals with denominators
//! prime to `p`:
//!
//! * the hypergeometric series `F_{a,...,a}(t)`,
//! * Dwork's function `F(t) / F_{a'}(t^p)`,
//! * the logarithmic-type function `G^(sigma)(t) / F(t)`,
//! * the hat function `G-hat^(sigma)(t) / F(t)`,
//!
//! and checks identities between them as exact residues modulo `p^n`.

pub mod cli;
pub mod error;
pub mod hypergeom;
pub mod padic_core;
pub mod series_ring;
pub mod verify;

pub use error::{Error, Result};
