//! Coefficient families `A_k`, `A_k^(1)`, `B_k` and `G_k`.

use num_traits::{One, ToPrimitive};

use super::params::HGParams;
use crate::error::{Error, Result};
use crate::padic_core::rational::int;
use crate::padic_core::special::pow_binomial;
use crate::padic_core::{branch_constants, format_rational, iwasawa_log_unit, psi_gamma, reduce, PadicBall, Rational, ScaledUnit};

/// `a' = (a + l) / p`.
pub fn dwork_prime(a: &Rational, p: u64) -> Result<Rational> {
    let b = branch_constants(a, p)?;
    Ok((a + int(b.l as i64)) / int(p as i64))
}

/// Iterates of the Dwork prime starting at `a`, and the period if the
/// orbit returns to `a` within `max_steps` applications.
pub fn dwork_orbit(a: &Rational, p: u64, max_steps: usize) -> Result<(Vec<Rational>, Option<usize>)> {
    let mut orbit = vec![a.clone()];
    let mut cur = a.clone();
    for r in 1..=max_steps {
        cur = dwork_prime(&cur, p)?;
        if &cur == a {
            return Ok((orbit, Some(r)));
        }
        orbit.push(cur.clone());
    }
    Ok((orbit, None))
}

/// `((a)_k / k!)^s` exactly.
#[allow(non_snake_case)]
pub fn coeff_A(a: &Rational, s: u32, k: usize) -> Rational {
    let mut x = Rational::one();
    for j in 1..=k {
        let f = (a + int(j as i64 - 1)) / int(j as i64);
        x *= num_traits::pow(f, s as usize);
    }
    x
}

/// `A_0, ..., A_{len-1}` for parameter `num / den` as scaled units.
pub fn scaled_table(num: i128, den: i128, s: u32, p: u64, len: usize, prec: u32) -> Result<Vec<ScaledUnit>> {
    let mut out = Vec::with_capacity(len);
    let mut x = ScaledUnit::one(p, prec)?;
    for k in 0..len {
        if k > 0 {
            let k = k as i128;
            let f = ScaledUnit::from_ratio(num + (k - 1) * den, den * k, p, prec)?;
            x = x.mul(&f.pow(s));
        }
        if x.valuation() < 0 {
            return Err(Error::NotIntegral(format!("A_{k} has negative {p}-adic valuation")));
        }
        out.push(x);
    }
    Ok(out)
}

/// Finished coefficient tables for one parameter set.
///
/// `a` and `a1` hold `A_k` and `A_k^(1)` as `p^v * unit`; use [`coeff_A`]
/// for exact rationals.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    pub params: HGParams,
    pub a: Vec<ScaledUnit>,
    pub a1: Vec<ScaledUnit>,
    pub b: Vec<PadicBall>,
    pub g: Vec<PadicBall>,
}

impl CoeffTable {
    /// Tables of length `params.m`; `a1` has enough terms for every
    /// Frobenius index below `m`.
    pub fn build(params: &HGParams) -> Result<Self> {
        let p = params.p;
        let m = params.m;
        let nw = params.nw;
        let (num, den) = params.a_parts()?;
        let a1r = dwork_prime(&params.a, p)?;
        let (num1, den1) = (
            a1r.numer().to_i128().expect("small"),
            a1r.denom().to_i128().expect("small"),
        );
        let a = scaled_table(num, den, params.s, p, m, nw)?;
        let a1 = scaled_table(num1, den1, params.s, p, m / p as usize + 2, nw)?;
        let mut table = Self { params: params.clone(), a, a1, b: Vec::new(), g: Vec::new() };
        table.b = table.hat_coeffs()?;
        table.g = table.log_coeffs()?;
        Ok(table)
    }

    /// `k + a` as a scaled unit.
    fn k_plus_a(&self, k: usize) -> Result<ScaledUnit> {
        let (num, den) = self.params.a_parts()?;
        ScaledUnit::from_ratio(k as i128 * den + num, den, self.params.p, self.params.nw)
    }

    /// `(-1)^{s e} A^(1)_j c^{(k + a)/p}` for `k = l + j p`, at working precision.
    fn hat_subtrahend(&self, j: usize, c_a1: &PadicBall, c_ball: &PadicBall) -> Result<PadicBall> {
        let h = &self.params;
        let br = h.branch();
        let cpow = c_a1.mul(&c_ball.pow(j as u64))?;
        let t = self.a1[j].to_ball(h.nw)?.mul(&cpow)?;
        Ok(if (h.s as u64 * br.e) % 2 == 1 { t.neg() } else { t })
    }

    fn hat_coeffs(&self) -> Result<Vec<PadicBall>> {
        let h = &self.params;
        let p = h.p;
        let l = h.branch().l as usize;
        let a1r = dwork_prime(&h.a, p)?;
        let c_a1 = pow_binomial(&h.c, &a1r, p, h.nw)?;
        let c_ball = reduce(&h.c, p, h.nw)?;
        let mut out = Vec::with_capacity(h.m);
        for k in 0..h.m {
            let mut x = self.a[k].to_ball(h.nw)?;
            if k >= l && (k - l) % p as usize == 0 {
                x = x.sub(&self.hat_subtrahend((k - l) / p as usize, &c_a1, &c_ball)?)?;
            }
            let b = self.k_plus_a(k)?.divide_ball(&x)?;
            if b.precision() < h.n {
                return Err(Error::InsufficientPrecision(format!(
                    "B_{k} has {} digits, need {}; raise the working precision",
                    b.precision(),
                    h.n
                )));
            }
            out.push(b);
        }
        Ok(out)
    }

    fn log_coeffs(&self) -> Result<Vec<PadicBall>> {
        let h = &self.params;
        let p = h.p;
        let c_ball = reduce(&h.c, p, h.nw)?;
        let mut out = Vec::with_capacity(h.m);
        out.push(log_constant(h)?);
        for k in 1..h.m {
            let mut x = self.a[k].to_ball(h.nw)?;
            if k % p as usize == 0 {
                let j = k / p as usize;
                x = x.sub(&self.a1[j].to_ball(h.nw)?.mul(&c_ball.pow(j as u64))?)?;
            }
            let g = ScaledUnit::from_ratio(k as i128, 1, p, h.nw)?.divide_ball(&x)?;
            if g.precision() < h.n {
                return Err(Error::InsufficientPrecision(format!(
                    "G_{k} has {} digits, need {}; raise the working precision",
                    g.precision(),
                    h.n
                )));
            }
            out.push(g);
        }
        Ok(out)
    }

    /// `B_k / A_k` without dividing by a possibly non-unit `A_k`.
    ///
    /// For `k = l + j p` this is `(1 - (-1)^{s e} (A^(1)_j / A_k) c^{(k+a)/p}) / (k + a)`,
    /// where the ratio of `A`'s is a unit; otherwise it is `1 / (k + a)`.
    pub fn hat_ratio(&self, k: usize) -> Result<PadicBall> {
        let h = &self.params;
        let p = h.p;
        let l = h.branch().l as usize;
        let mut x = PadicBall::one(p, h.nw)?;
        if k >= l && (k - l) % p as usize == 0 {
            let j = (k - l) / p as usize;
            let ratio = self.a1[j].div(&self.a[k]);
            if ratio.valuation() < 0 {
                return Err(Error::NotIntegral(format!("A^(1)_{j} / A_{k} is not integral")));
            }
            let a1r = dwork_prime(&h.a, p)?;
            let c_a1 = pow_binomial(&h.c, &a1r, p, h.nw)?;
            let cpow = c_a1.mul(&reduce(&h.c, p, h.nw)?.pow(j as u64))?;
            let mut t = ratio.to_ball(h.nw)?.mul(&cpow)?;
            if (h.s as u64 * h.branch().e) % 2 == 1 {
                t = t.neg();
            }
            x = x.sub(&t)?;
        }
        self.k_plus_a(k)?.divide_ball(&x)
    }

    /// `A_k` reduced at working precision.
    pub fn a_ball(&self, k: usize) -> Result<PadicBall> {
        self.a[k].to_ball(self.params.nw)
    }

    /// `A^(1)_j` reduced at working precision.
    pub fn a1_ball(&self, j: usize) -> Result<PadicBall> {
        self.a1[j].to_ball(self.params.nw)
    }

    /// CSV rows `k,A_k,v_p,B_k,prec`.
    pub fn to_csv(&self) -> String {
        let h = &self.params;
        let mut out = String::from("k,A_k,v_p,B_k,prec\n");
        let mut exact = Rational::one();
        for k in 0..h.m {
            if k > 0 {
                exact *= num_traits::pow((&h.a + int(k as i64 - 1)) / int(k as i64), h.s as usize);
            }
            let b = &self.b[k];
            out.push_str(&format!(
                "{k},{},{},{},{}\n",
                format_rational(&exact),
                self.a[k].valuation(),
                b.residue(),
                b.precision()
            ));
        }
        out
    }
}

/// `G_0 = s Psi(a) - log(c) / p` at precision `n`.
pub fn log_constant(h: &HGParams) -> Result<PadicBall> {
    let p = h.p;
    let psi = psi_gamma(&h.a, p, h.n)?;
    let s_psi = psi.mul(&PadicBall::from_i64(p, h.s as i64, h.n)?)?;
    let log = iwasawa_log_unit(&h.c, p, h.n)?;
    let log_over_p = ScaledUnit::from_ratio(p as i128, 1, p, h.n + 1)?.divide_ball(&log)?;
    s_psi.sub(&log_over_p)
}

/// Exact `B_k` for small cases, with `c^{(k+a)/p}` taken as a rational power.
///
/// Only usable when that power is rational, e.g. `c = 1`.
pub fn exact_hat_coeff_c1(a: &Rational, s: u32, p: u64, k: usize) -> Result<Rational> {
    let br = branch_constants(a, p)?;
    let l = br.l as usize;
    let mut x = coeff_A(a, s, k);
    if k >= l && (k - l) % p as usize == 0 {
        let t = coeff_A(&dwork_prime(a, p)?, s, (k - l) / p as usize);
        if (s as u64 * br.e) % 2 == 1 {
            x += t;
        } else {
            x -= t;
        }
    }
    Ok(x / (a + int(k as i64)))
}
