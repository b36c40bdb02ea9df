//! Exact rational re-derivations of the series and their congruences,
//! compared residue by residue with the library.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use padic_hg::hypergeom::{fn_dwork, fn_hat, fn_log, CoeffTable, HGParams};
use padic_hg::padic_core::rational::{int, rational};
use padic_hg::padic_core::Rational;
use padic_hg::series_ring::PowerSeries;
use padic_hg::verify::{check_congruence_dwork, check_congruence_hat, check_congruence_log};

fn modpow(p: u64, n: u32) -> BigInt {
    BigInt::from(p).pow(n)
}

/// `x mod p^n` for a p-integral rational.
fn residue(x: &Rational, p: u64, n: u32) -> u64 {
    let m = modpow(p, n);
    let den = x.denom().mod_floor(&m);
    let inv = den.modpow(&(&m - BigInt::one() - (&m / BigInt::from(p))), &m);
    (x.numer().mod_floor(&m) * inv).mod_floor(&m).to_u64().unwrap()
}

fn vp(x: &Rational, p: u64) -> i64 {
    if x.is_zero() {
        return i64::MAX;
    }
    let pb = BigInt::from(p);
    let mut v = 0;
    let (mut n, mut d) = (x.numer().abs(), x.denom().clone());
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    while (&d % &pb).is_zero() {
        d /= &pb;
        v -= 1;
    }
    v
}

fn a_coeffs(a: &Rational, s: u32, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    for k in 1..len {
        let f = (a + int(k as i64 - 1)) / int(k as i64);
        let prev = out[k - 1].clone();
        out.push(prev * num_traits::pow(f, s as usize));
    }
    out
}

fn branch_l(a: &Rational, p: u64) -> u64 {
    (0..p).find(|&l| vp(&(a + int(l as i64)), p) >= 1).unwrap()
}

fn sign_e(a: &Rational, p: u64) -> u64 {
    let q = if p == 2 { 4 } else { p };
    let need = if p == 2 { 2 } else { 1 };
    let lq = (0..q).find(|&l| vp(&(a + int(l as i64)), p) >= need).unwrap();
    lq - lq / p
}

/// `c^alpha` by the binomial series, summed far past the needed digits.
fn binomial_power(c: &Rational, alpha: &Rational, terms: usize) -> Rational {
    let u = c - Rational::one();
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for i in 0..terms {
        sum += &term;
        term = term * (alpha - int(i as i64)) * &u / int(i as i64 + 1);
    }
    sum
}

fn log_unit(c: &Rational, terms: usize) -> Rational {
    let u = c - Rational::one();
    let mut sum = Rational::zero();
    let mut pw = u.clone();
    for i in 1..=terms {
        let t = &pw / int(i as i64);
        if i % 2 == 1 {
            sum += t;
        } else {
            sum -= t;
        }
        pw *= &u;
    }
    sum
}

/// `psi_p(a) + gamma_p` mod `p^n` as a harmonic sum up to a representative
/// of `a - 1` taken with three guard digits.
fn psi(a: &Rational, p: u64, n: u32) -> u64 {
    let m = residue(&(a - Rational::one()), p, n + 3);
    let mut h = Rational::zero();
    for k in 1..=m {
        if k % p != 0 {
            h += rational(1, k as i64);
        }
    }
    residue(&h, p, n)
}

struct Oracle {
    f: Vec<Rational>,
    b: Vec<Rational>,
    g: Vec<Rational>,
    d: Vec<Rational>,
}

/// `p^n`-adic truncation of the binomial series needs `(n + extra) / v(c-1)` terms.
fn oracle(p: u64, a: &Rational, s: u32, c: &Rational, n: u32, len: usize) -> (Oracle, u64) {
    let f = a_coeffs(a, s, len);
    let l = branch_l(a, p);
    let a1 = (a + int(l as i64)) / int(p as i64);
    let f1 = a_coeffs(&a1, s, len / p as usize + 2);
    let e = sign_e(a, p);
    let terms = 3 * (n as usize + 12);
    let mut b = Vec::new();
    for k in 0..len {
        let mut x = f[k].clone();
        if k as u64 >= l && (k as u64 - l) % p == 0 {
            let j = (k as u64 - l) / p;
            let alpha = (a + int(k as i64)) / int(p as i64);
            let t = &f1[j as usize] * binomial_power(c, &alpha, terms);
            if (s as u64 * e) % 2 == 1 {
                x += t;
            } else {
                x -= t;
            }
        }
        b.push(x / (a + int(k as i64)));
    }
    let log_over_p = log_unit(c, 4 * terms) / int(p as i64);
    let g0 = (s as u64 * psi(a, p, n)) as i64 - residue(&log_over_p, p, n) as i64;
    let mut g = vec![int(g0)];
    for k in 1..len {
        let mut x = f[k].clone();
        if k as u64 % p == 0 {
            let j = k / p as usize;
            x -= &f1[j] * binomial_power(c, &rational(j as i64, 1), terms);
        }
        g.push(x / int(k as i64));
    }
    let mut d = vec![Rational::zero(); len];
    for (j, x) in f1.iter().enumerate() {
        if j * (p as usize) < len {
            d[j * p as usize] = x.clone();
        }
    }
    (Oracle { f, b, g, d }, p.pow(n))
}

/// Exact quotient `num / den` of formal power series, `len` terms.
fn divide(num: &[Rational], den: &[Rational], len: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    let inv0 = Rational::one() / &den[0];
    for k in 0..len {
        let mut x = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for i in 1..=k.min(den.len() - 1) {
            x -= &den[i] * &out[k - i];
        }
        out.push(x * &inv0);
    }
    out
}

fn lib_residues(f: &PowerSeries, n: u32) -> Vec<u64> {
    f.coeffs().iter().map(|b| b.residue_mod(n).expect("n digits known")).collect()
}

fn exact_residues(xs: &[Rational], p: u64, n: u32) -> Vec<u64> {
    xs.iter().map(|x| residue(x, p, n)).collect()
}

fn g0_fixed(o: &Oracle, p: u64, n: u32) -> Vec<Rational> {
    let mut g = o.g.clone();
    let m = p.pow(n) as i64;
    g[0] = int(o.g[0].to_integer().to_i64().unwrap().rem_euclid(m));
    g
}

#[test]
fn hat_quotient_matches_exact_rationals() {
    for (p, a, s, c, n, len) in [
        (3u64, int(1), 1u32, int(1), 1u32, 12usize),
        (5, rational(1, 3), 2, int(6), 2, 60),
        (7, rational(3, 4), 1, int(15), 1, 30),
        (2, rational(1, 5), 2, int(5), 2, 16),
    ] {
        let (o, big) = oracle(p, &a, s, &c, n, len);
        let h = HGParams::with_len(p, a.clone(), s, c.clone(), n, len).unwrap();
        let t = CoeffTable::build(&h).unwrap();
        assert_eq!(exact_residues(&o.b, p, n), t.b.iter().map(|x| x.residue_mod(n).unwrap()).collect::<Vec<_>>());
        let full = divide(&o.b, &o.f, len);
        assert_eq!(exact_residues(&full, p, n), lib_residues(&fn_hat(&t).unwrap(), n), "p={p} a={a}");
        let cut = divide(&o.b[..big as usize], &o.f[..big as usize], len);
        assert_eq!(exact_residues(&cut, p, n), exact_residues(&full, p, n), "congruence p={p} a={a}");
        assert!(check_congruence_hat(&h, None).unwrap().pass);
    }
}

#[test]
fn log_quotient_matches_exact_rationals() {
    for (p, a, s, c, n, len) in [
        (3u64, int(1), 1u32, int(1), 1u32, 12usize),
        (7, rational(1, 2), 1, int(8), 2, 100),
        (5, rational(1, 3), 2, int(6), 2, 60),
    ] {
        let (o, big) = oracle(p, &a, s, &c, n, len);
        let h = HGParams::with_len(p, a.clone(), s, c.clone(), n, len).unwrap();
        let t = CoeffTable::build(&h).unwrap();
        let g = g0_fixed(&o, p, n);
        let full = divide(&g, &o.f, len);
        assert_eq!(exact_residues(&full, p, n), lib_residues(&fn_log(&t).unwrap(), n), "p={p} a={a}");
        let cut = divide(&g[..big as usize], &o.f[..big as usize], len);
        assert_eq!(exact_residues(&cut, p, n), exact_residues(&full, p, n));
        assert!(check_congruence_log(&h, None).unwrap().pass);
    }
}

#[test]
fn dwork_quotient_matches_exact_rationals() {
    for (p, a, s, n, len) in [(3u64, int(1), 1u32, 2u32, 20usize), (5, rational(1, 3), 2, 2, 60), (2, rational(1, 3), 3, 3, 20)] {
        let (o, big) = oracle(p, &a, s, &int(1), n, len);
        let h = HGParams::with_len(p, a.clone(), s, int(1), n, len).unwrap();
        let t = CoeffTable::build(&h).unwrap();
        let full = divide(&o.f, &o.d, len);
        assert_eq!(exact_residues(&full, p, n), lib_residues(&fn_dwork(&t).unwrap(), n));
        let cut = divide(&o.f[..big as usize], &o.d[..big as usize], len);
        assert_eq!(exact_residues(&cut, p, n), exact_residues(&full, p, n));
        assert!(check_congruence_dwork(&h, None).unwrap().pass);
    }
}

/// `G_0 = 2 Psi(1/3) - log(6)/5` at `p = 5`, two digits.
#[test]
fn log_constant_matches_exact_rationals() {
    let (o, _) = oracle(5, &rational(1, 3), 2, &int(6), 2, 2);
    let h = HGParams::new(5, rational(1, 3), 2, int(6), 2).unwrap();
    let t = CoeffTable::build(&h).unwrap();
    let expect = o.g[0].to_integer().to_i64().unwrap().rem_euclid(25) as u64;
    assert_eq!(t.g[0].residue_mod(2), Some(expect));
}
