//! Truncated power series and finite Laurent polynomials over [`PadicBall`]
//! coefficients.
//!
//! [`PadicBall`]: crate::padic_core::PadicBall

mod kernel;
pub mod laurent;
pub mod power;

pub use laurent::LaurentPoly;
pub use power::PowerSeries;
