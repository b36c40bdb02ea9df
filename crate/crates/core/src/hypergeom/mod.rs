//! Coefficient generators and the hypergeometric functions as truncated series.

pub mod coeffs;
pub mod functions;
pub mod params;

pub use coeffs::{coeff_A, dwork_orbit, dwork_prime, CoeffTable};
pub use functions::{
    evaluate, fn_dwork, fn_hat, fn_log, series_f, series_f_prime, series_f_prime_frob, series_g_hat, series_g_log, FnKind,
};
pub use params::HGParams;
