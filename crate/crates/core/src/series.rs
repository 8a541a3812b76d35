//! The Rademacher series for `p(n)` with Lehmer's remainder bound.
//!
//! With `mu = (pi/6) sqrt(24n - 1)` the truncated series is
//!
//! ```text
//! p(n) = sqrt(12)/(24n - 1) * sum_{k<=N} A*_k(n) [(1 - k/mu) e^{mu/k} + (1 + k/mu) e^{-mu/k}] + R2(n, N)
//! ```
//!
//! where `A*_k(n) = A_k(n)/sqrt(k)` and `A_k` is the Kloosterman-type sum over
//! `h mod k` built from Dedekind sums. `T(n)` keeps the `k = 1` and `k = 2`
//! exponentially growing pieces only.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::{Integer, Rational};

use crate::enclosure::{default_precision, Enclosure, PRECISION_CAP};
use crate::error::{domain, Error, Result};

pub(crate) fn int(v: impl Into<Integer>, prec: u32) -> Enclosure {
    Enclosure::from_integer(v).with_precision(prec)
}

fn sign_of_parity(n: u64) -> i32 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `C = pi sqrt(2/3)` and `d = pi^2 / (6 sqrt 3)`.
#[derive(Clone, Debug)]
pub struct HrConstants {
    pub c: Enclosure,
    pub d: Enclosure,
}

impl HrConstants {
    pub fn new(prec: u32) -> Self {
        Self {
            c: c_const(prec),
            d: d_const(prec),
        }
    }
}

/// `C = pi sqrt(2/3)`.
pub fn c_const(prec: u32) -> Enclosure {
    let two_thirds = Enclosure::from_ratio(2, 3, prec).expect("nonzero denominator");
    &Enclosure::pi(prec) * &two_thirds.sqrt().expect("positive")
}

/// `d = pi^2 / (6 sqrt 3)`.
pub fn d_const(prec: u32) -> Enclosure {
    let pi = Enclosure::pi(prec);
    let den = &int(6, prec) * &int(3, prec).sqrt().expect("positive");
    (&pi * &pi).div(&den).expect("nonzero")
}

/// `1/sqrt(2)`.
fn inv_sqrt2(prec: u32) -> Enclosure {
    int(2, prec).sqrt().expect("positive").recip().expect("nonzero")
}

/// `mu(n) = (pi/6) sqrt(24n - 1)`.
pub fn mu(n: u64, prec: u32) -> Result<Enclosure> {
    if n == 0 {
        return Err(domain("mu(n) requires n >= 1"));
    }
    let root = int(24 * Integer::from(n) - 1, prec).sqrt()?;
    Ok((&Enclosure::pi(prec) * &root).div(&int(6, prec))?)
}

/// `sqrt(12) / (24n - 1)`.
fn prefactor(n: u64, prec: u32) -> Result<Enclosure> {
    int(12, prec).sqrt()?.div(&int(24 * Integer::from(n) - 1, prec))
}

/// The dominant part of the series:
/// `T(n) = sqrt(12)/(24n-1) [(1 - 1/mu) e^mu + ((-1)^n/sqrt 2) e^{mu/2}]`.
pub fn big_t(n: u64, prec: u32) -> Result<Enclosure> {
    let m = mu(n, prec)?;
    let one = int(1, prec);
    let first = &(&one - &one.div(&m)?) * &m.exp();
    let half_mu = m.div(&int(2, prec))?;
    let second = &inv_sqrt2(prec) * &half_mu.exp();
    let bracket = if sign_of_parity(n) > 0 {
        &first + &second
    } else {
        &first - &second
    };
    Ok(&prefactor(n, prec)? * &bracket)
}

/// Ratio of the second piece of `T(n)` to the first:
/// `x_n = (-1)^n e^{-mu/2} mu / (sqrt 2 (mu - 1))`, so that
/// `T(n) = d (mu - 1) e^mu / mu^3 * (1 + x_n)`.
pub fn x_term(n: u64, prec: u32) -> Result<Enclosure> {
    if n < 2 {
        return Err(Error::Range {
            what: "x_term",
            min: 2,
            n,
        });
    }
    let m = mu(n, prec)?;
    let decay = (-&m.div(&int(2, prec))?).exp();
    let den = &int(2, prec).sqrt()? * &(&m - &int(1, prec));
    let magnitude = (&decay * &m).div(&den)?;
    Ok(if sign_of_parity(n) > 0 {
        magnitude
    } else {
        -magnitude
    })
}

/// `log T(n) = log d + mu + log(mu - 1) - 3 log mu + log(1 + x_n)`.
pub fn log_t_closed(n: u64, prec: u32) -> Result<Enclosure> {
    let m = mu(n, prec)?;
    let x = x_term(n, prec)?;
    let one_plus_x = &int(1, prec) + &x;
    if !one_plus_x.is_positive() {
        return Err(domain(format!("1 + x_{n} is not certified positive")));
    }
    let three_log_mu = &int(3, prec) * &m.log()?;
    let sum = &(&d_const(prec).log()? + &m) + &(&m - &int(1, prec)).log()?;
    Ok(&(&sum - &three_log_mu) + &one_plus_x.log()?)
}

/// Lehmer's bound on the truncation remainder:
/// `|R2(n, N)| < (pi^2 N^{-2/3} / sqrt 3) [(N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2]`.
///
/// Only the upper endpoint of the returned enclosure is a certified bound.
pub fn lehmer_r2_bound(n: u64, terms: u64, prec: u32) -> Result<Enclosure> {
    if terms == 0 {
        return Err(domain("Lehmer bound requires N >= 1"));
    }
    let m = mu(n, prec)?;
    let big_n = int(terms, prec);
    let pi = Enclosure::pi(prec);
    // N^{-2/3} = exp(-(2/3) log N)
    let n_pow = (-&(&Enclosure::from_ratio(2, 3, prec)? * &big_n.log()?)).exp();
    let head = (&(&pi * &pi) * &n_pow).div(&int(3, prec).sqrt()?)?;
    let ratio = big_n.div(&m)?;
    let ratio_sq = &ratio * &ratio;
    let cube_sinh = &(&ratio_sq * &ratio) * &m.div(&big_n)?.sinh();
    let sixth = Enclosure::from_ratio(1, 6, prec)?;
    let bracket = &(&cube_sinh + &sixth) - &ratio_sq;
    Ok(&head * &bracket)
}

/// Dedekind sum `s(h, k)` for `0 <= h < k`, `gcd(h, k) = 1`, computed by
/// the reciprocity law `s(a,b) + s(b,a) = (a/b + b/a + 1/(ab))/12 - 1/4`.
pub fn dedekind_sum(h: u64, k: u64) -> Result<Rational> {
    if k == 0 || h >= k {
        return Err(domain(format!("dedekind_sum needs 0 <= h < k, got h={h}, k={k}")));
    }
    if Integer::from(h).gcd(&Integer::from(k)) != 1 {
        return Err(domain(format!("dedekind_sum needs gcd(h, k) = 1, got h={h}, k={k}")));
    }
    let mut acc = Rational::new();
    let mut positive = true;
    let (mut a, mut b) = (h, k);
    while a != 0 {
        let (ai, bi) = (Integer::from(a), Integer::from(b));
        let num = Integer::from(&ai * &ai) + Integer::from(&bi * &bi) + 1u32;
        let den = Integer::from(&ai * &bi) * 12u32;
        let step = Rational::from((num, den)) - Rational::from((1, 4));
        if positive {
            acc += step;
        } else {
            acc -= step;
        }
        positive = !positive;
        (a, b) = (b % a, a);
    }
    Ok(acc)
}

type DedekindRow = Arc<Vec<(u64, Rational)>>;

// s(h, k) for every unit h mod k; rows are reused across n.
fn dedekind_row(k: u64) -> DedekindRow {
    static CACHE: OnceLock<RwLock<HashMap<u64, DedekindRow>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(row) = cache.read().expect("cache poisoned").get(&k) {
        return Arc::clone(row);
    }
    let row: DedekindRow = Arc::new(
        (0..k)
            .filter(|&h| Integer::from(h).gcd(&Integer::from(k)) == 1)
            .map(|h| (h, dedekind_sum(h, k).expect("coprime by construction")))
            .collect(),
    );
    cache
        .write()
        .expect("cache poisoned")
        .entry(k)
        .or_insert(row)
        .clone()
}

/// `A_k(n) = sum_{h mod k, gcd(h,k)=1} cos(pi s(h,k) - 2 pi h n / k)`.
pub fn a_k(n: u64, k: u64, prec: u32) -> Result<Enclosure> {
    if k == 0 {
        return Err(domain("A_k requires k >= 1"));
    }
    let n_mod = n % k;
    let mut sum = int(0, prec);
    for (h, s) in dedekind_row(k).iter() {
        let turn = Rational::from((Integer::from(2 * ((h * n_mod) % k)), Integer::from(k)));
        let angle = Rational::from(s - &turn);
        sum = &sum + &Enclosure::cos_pi_rational(&angle, prec);
    }
    Ok(sum)
}

/// `A*_k(n) = A_k(n) / sqrt(k)`; exactly 1 for `k = 1` and `(-1)^n/sqrt 2` for `k = 2`.
pub fn a_k_star(n: u64, k: u64, prec: u32) -> Result<Enclosure> {
    match k {
        0 => Err(domain("A*_k requires k >= 1")),
        1 => Ok(int(1, prec)),
        2 => {
            let v = inv_sqrt2(prec);
            Ok(if sign_of_parity(n) > 0 { v } else { -v })
        }
        _ => a_k(n, k, prec)?.div(&int(k, prec).sqrt()?),
    }
}

/// The `k`-th summand of the series (without the common prefactor).
#[derive(Clone, Debug)]
pub struct SeriesTerm {
    pub k: u64,
    pub a_k_star: Enclosure,
    /// `(1 - k/mu) e^{mu/k} + (1 + k/mu) e^{-mu/k}`
    pub value: Enclosure,
}

impl SeriesTerm {
    pub fn contribution(&self) -> Enclosure {
        &self.a_k_star * &self.value
    }
}

fn series_term_with_mu(n: u64, k: u64, m: &Enclosure, prec: u32) -> Result<SeriesTerm> {
    let kk = int(k, prec);
    let one = int(1, prec);
    let k_over_mu = kk.div(m)?;
    let mu_over_k = m.div(&kk)?;
    let grow = &(&one - &k_over_mu) * &mu_over_k.exp();
    let shrink = &(&one + &k_over_mu) * &(-&mu_over_k).exp();
    Ok(SeriesTerm {
        k,
        a_k_star: a_k_star(n, k, prec)?,
        value: &grow + &shrink,
    })
}

pub fn series_term(n: u64, k: u64, prec: u32) -> Result<SeriesTerm> {
    series_term_with_mu(n, k, &mu(n, prec)?, prec)
}

/// Sum of the first `terms` series terms including the prefactor (no remainder).
pub fn partial_sum(n: u64, terms: u64, prec: u32) -> Result<Enclosure> {
    let m = mu(n, prec)?;
    let mut sum = int(0, prec);
    for k in 1..=terms {
        sum = &sum + &series_term_with_mu(n, k, &m, prec)?.contribution();
    }
    Ok(&prefactor(n, prec)? * &sum)
}

/// Certified enclosure of `p(n)`: the `N`-term partial sum widened by
/// Lehmer's bound on both sides.
pub fn rademacher_enclosure(n: u64, terms: u64, prec: u32) -> Result<Enclosure> {
    let partial = partial_sum(n, terms, prec)?;
    let bound = lehmer_r2_bound(n, terms, prec)?;
    Ok(partial.widen(bound.hi()))
}

/// Exact `p(n)` from the series alone, by refining `N` and the precision
/// until exactly one integer remains in the certified window.
pub fn p_via_series(n: u64) -> Result<Integer> {
    if n == 0 {
        return Err(domain("p_via_series requires n >= 1"));
    }
    let root = (n as f64).sqrt();
    let mut terms = 2u64.max((root / 2.0).ceil() as u64);
    // p(n) has about (C/ln 2) sqrt(n) ~ 3.7 sqrt(n) bits.
    let mut prec = default_precision().max((3.8 * root) as u32 + 64);
    loop {
        let window = rademacher_enclosure(n, terms, prec)?;
        if let Some(v) = window.unique_integer() {
            return Ok(v);
        }
        if prec.saturating_mul(2) > PRECISION_CAP {
            return Err(Error::Resolution {
                n,
                terms,
                precision_bits: prec,
            });
        }
        terms *= 2;
        prec *= 2;
    }
}
