//! Certified interval arithmetic over MPFR floats.
//!
//! An [`Enclosure`] is a closed interval `[lo, hi]` of extended reals that is
//! guaranteed to contain the exact value of the expression that produced it.
//! Every endpoint is computed with directed rounding (lower endpoints towards
//! `-inf`, upper endpoints towards `+inf`), so containment survives any chain
//! of operations. Width is not part of the contract; callers that need a sign
//! or an integer re-evaluate at a higher precision (see [`resolve_sign`]).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round, Special};
use rug::ops::AssignRound;
use rug::{Float, Integer, Rational};

use crate::error::{domain, Result};

/// Starting precision when nothing else is configured.
pub const DEFAULT_PRECISION: u32 = 128;
/// Smallest working precision accepted anywhere in the crate.
pub const MIN_PRECISION: u32 = 16;
/// Largest precision adaptive refinement will try.
pub const PRECISION_CAP: u32 = 1 << 16;
/// Environment variable overriding [`DEFAULT_PRECISION`].
pub const PRECISION_ENV: &str = "PARTCERT_PRECISION_BITS";

/// Starting precision: `PARTCERT_PRECISION_BITS` if set and valid, else 128.
pub fn default_precision() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .filter(|&p| (MIN_PRECISION..=PRECISION_CAP).contains(&p))
        .unwrap_or(DEFAULT_PRECISION)
}

fn down<T>(prec: u32, val: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, Round::Down).0
}

fn up<T>(prec: u32, val: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, Round::Up).0
}

fn neg_inf(prec: u32) -> Float {
    Float::with_val(prec, Special::NegInfinity)
}

fn pos_inf(prec: u32) -> Float {
    Float::with_val(prec, Special::Infinity)
}

fn min_of(values: [Float; 4]) -> Float {
    let [a, b, c, d] = values;
    [b, c, d]
        .into_iter()
        .fold(a, |acc, v| if v < acc { v } else { acc })
}

fn max_of(values: [Float; 4]) -> Float {
    let [a, b, c, d] = values;
    [b, c, d]
        .into_iter()
        .fold(a, |acc, v| if v > acc { v } else { acc })
}

/// Arithmetic operations accepted by [`binary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Transcendental functions accepted by [`unary`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryFn {
    Exp,
    Log,
    Sqrt,
    Sinh,
    Cosh,
}

/// A certified closed interval `[lo, hi]` produced at a stated working precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Enclosure {
    lo: Float,
    hi: Float,
    prec: u32,
}

impl Enclosure {
    /// Builds an enclosure from explicit endpoints.
    pub fn new(lo: Float, hi: Float, precision_bits: u32) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() {
            return Err(domain("enclosure endpoints must not be NaN"));
        }
        if lo > hi {
            return Err(domain(format!("enclosure endpoints out of order: {lo} > {hi}")));
        }
        Ok(Self {
            lo,
            hi,
            prec: precision_bits.max(MIN_PRECISION),
        })
    }

    // NaN endpoints only arise from inf - inf or 0 * inf; widening them to
    // the matching infinity keeps containment.
    fn from_parts(mut lo: Float, mut hi: Float, prec: u32) -> Self {
        if lo.is_nan() {
            lo = neg_inf(prec);
        }
        if hi.is_nan() {
            hi = pos_inf(prec);
        }
        debug_assert!(lo <= hi, "enclosure inverted: [{lo}, {hi}]");
        Self { lo, hi, prec }
    }

    /// The exact integer `v` as a degenerate interval `[v, v]`.
    ///
    /// The endpoints carry as many bits as `v` needs; the working-precision
    /// label is the larger of that and [`MIN_PRECISION`].
    pub fn from_integer(v: impl Into<Integer>) -> Self {
        let v: Integer = v.into();
        let bits = v.significant_bits().max(1);
        let exact = Float::with_val(bits, &v);
        Self {
            lo: exact.clone(),
            hi: exact,
            prec: bits.max(MIN_PRECISION),
        }
    }

    /// Enclosure of `num / den`.
    pub fn from_ratio(
        num: impl Into<Integer>,
        den: impl Into<Integer>,
        precision_bits: u32,
    ) -> Result<Self> {
        let den: Integer = den.into();
        if den == 0 {
            return Err(domain("from_ratio: zero denominator"));
        }
        Ok(Self::from_rational(&Rational::from((num.into(), den)), precision_bits))
    }

    /// Enclosure of an exact rational.
    pub fn from_rational(r: &Rational, precision_bits: u32) -> Self {
        let prec = precision_bits.max(MIN_PRECISION);
        Self::from_parts(down(prec, r), up(prec, r), prec)
    }

    /// The same interval relabelled with a different working precision.
    ///
    /// Endpoints are untouched; only subsequent operations are affected.
    pub fn with_precision(mut self, precision_bits: u32) -> Self {
        self.prec = precision_bits.max(MIN_PRECISION);
        self
    }

    /// Enclosure of pi of width at most `2^(2 - precision_bits)`.
    pub fn pi(precision_bits: u32) -> Self {
        let prec = precision_bits.max(MIN_PRECISION);
        Self::from_parts(down(prec, Constant::Pi), up(prec, Constant::Pi), prec)
    }

    /// Enclosure of `cos(pi * r)` for an exact rational `r`.
    ///
    /// The angle is reduced exactly to `r in [0, 1/2]` using the symmetries of
    /// cosine before any rounding happens.
    pub fn cos_pi_rational(r: &Rational, precision_bits: u32) -> Self {
        let prec = precision_bits.max(MIN_PRECISION);
        // r mod 2 in [0, 2)
        let turns = Integer::from((r.clone() / 2u32).floor_ref());
        let mut red = r.clone() - Rational::from(turns * 2u32);
        debug_assert!(red >= 0 && red < 2);
        if red > 1 {
            red = Rational::from(2) - red;
        }
        // red in [0, 1]
        let mut negate = false;
        let half = Rational::from((1, 2));
        if red > half {
            red = Rational::from(1) - red;
            negate = true;
        }
        let value = if red == 0 {
            Self::from_integer(1).with_precision(prec)
        } else if red == half {
            Self::from_integer(0).with_precision(prec)
        } else {
            let angle = &Self::pi(prec + 8) * &Self::from_rational(&red, prec + 8);
            // cos is decreasing on [0, pi]; red in (0, 1/2) keeps the angle there.
            let lo = down(prec, angle.hi.cos_ref());
            let hi = if angle.lo <= 0 {
                Float::with_val(prec, 1)
            } else {
                up(prec, angle.lo.cos_ref())
            };
            Self::from_parts(lo, hi, prec)
        };
        if negate {
            -value
        } else {
            value
        }
    }

    /// Exact `log(v)` enclosure for a positive big integer.
    ///
    /// `v = m * 2^e` with `m in [1, 2)` exact; the result is `log(m) + e log 2`.
    pub fn log_integer(v: &Integer, precision_bits: u32) -> Result<Self> {
        if *v <= 0 {
            return Err(domain("log of a non-positive integer"));
        }
        let prec = precision_bits.max(MIN_PRECISION);
        let e = v.significant_bits() - 1;
        let mut mantissa = Float::with_val(v.significant_bits().max(1), v);
        mantissa >>= e;
        let m = Self::from_parts(mantissa.clone(), mantissa, prec);
        let log_m = m.log()?;
        if e == 0 {
            return Ok(log_m);
        }
        let ln2 = Self::from_parts(down(prec, Constant::Log2), up(prec, Constant::Log2), prec);
        Ok(&log_m + &(&ln2 * &Self::from_integer(e)))
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn precision_bits(&self) -> u32 {
        self.prec
    }

    /// `hi - lo`, rounded up.
    pub fn width(&self) -> Float {
        up(self.prec, &self.hi - &self.lo)
    }

    /// Midpoint of the interval (rounded to nearest; not certified).
    pub fn midpoint(&self) -> Float {
        let mut m = Float::with_val(self.prec + 2, &self.lo + &self.hi);
        m >>= 1;
        m
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (self.lo.to_f64_round(Round::Down), self.hi.to_f64_round(Round::Up))
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi < 0
    }

    /// Certified sign, or `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo > 0 {
            Some(Ordering::Greater)
        } else if self.hi < 0 {
            Some(Ordering::Less)
        } else if self.lo == 0 && self.hi == 0 {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn contains_integer(&self, v: &Integer) -> bool {
        self.lo <= *v && self.hi >= *v
    }

    pub fn contains_rational(&self, v: &Rational) -> bool {
        self.lo <= *v && self.hi >= *v
    }

    /// `other` is a subset of `self`.
    pub fn contains(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// The only integer in `[lo, hi]`, if there is exactly one.
    pub fn unique_integer(&self) -> Option<Integer> {
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return None;
        }
        let first = self.lo.clone().ceil().to_integer()?;
        let last = self.hi.clone().floor().to_integer()?;
        (first == last).then_some(first)
    }

    fn join_prec(&self, other: &Enclosure) -> u32 {
        self.prec.max(other.prec)
    }

    /// Quotient; fails when the divisor contains zero.
    pub fn div(&self, other: &Enclosure) -> Result<Enclosure> {
        if other.lo <= 0 && other.hi >= 0 {
            return Err(domain("division by an interval containing zero"));
        }
        let p = self.join_prec(other);
        let (a, b) = (self, other);
        let lo = min_of([
            down(p, &a.lo / &b.lo),
            down(p, &a.lo / &b.hi),
            down(p, &a.hi / &b.lo),
            down(p, &a.hi / &b.hi),
        ]);
        let hi = max_of([
            up(p, &a.lo / &b.lo),
            up(p, &a.lo / &b.hi),
            up(p, &a.hi / &b.lo),
            up(p, &a.hi / &b.hi),
        ]);
        Ok(Self::from_parts(lo, hi, p))
    }

    pub fn recip(&self) -> Result<Enclosure> {
        Self::from_integer(1).with_precision(self.prec).div(self)
    }

    pub fn exp(&self) -> Enclosure {
        let p = self.prec;
        Self::from_parts(down(p, self.lo.exp_ref()), up(p, self.hi.exp_ref()), p)
    }

    /// Natural logarithm; requires `lo > 0`.
    pub fn log(&self) -> Result<Enclosure> {
        if self.lo <= 0 {
            return Err(domain("log of an interval that is not strictly positive"));
        }
        let p = self.prec;
        Ok(Self::from_parts(down(p, self.lo.ln_ref()), up(p, self.hi.ln_ref()), p))
    }

    /// Square root; requires `lo >= 0`.
    pub fn sqrt(&self) -> Result<Enclosure> {
        if self.lo < 0 {
            return Err(domain("sqrt of an interval with negative part"));
        }
        let p = self.prec;
        Ok(Self::from_parts(down(p, self.lo.sqrt_ref()), up(p, self.hi.sqrt_ref()), p))
    }

    /// `(exp(x) - exp(-x)) / 2`.
    pub fn sinh(&self) -> Enclosure {
        (&self.exp() - &(-self).exp()).half()
    }

    /// `(exp(x) + exp(-x)) / 2`, clamped below by 1.
    pub fn cosh(&self) -> Enclosure {
        let mut c = (&self.exp() + &(-self).exp()).half();
        if c.lo < 1 {
            c.lo = Float::with_val(c.prec, 1);
        }
        c
    }

    fn half(mut self) -> Enclosure {
        self.lo >>= 1;
        self.hi >>= 1;
        self
    }

    /// `x^(3/2)` for non-negative `x`.
    pub fn pow_three_halves(&self) -> Result<Enclosure> {
        Ok(self * &self.sqrt()?)
    }

    /// Integer power by repeated multiplication.
    pub fn powi(&self, e: u32) -> Enclosure {
        let mut acc = Self::from_integer(1).with_precision(self.prec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn abs(&self) -> Enclosure {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            let m = if -self.lo.clone() > self.hi {
                -self.lo.clone()
            } else {
                self.hi.clone()
            };
            Self::from_parts(Float::with_val(self.prec, 0), m, self.prec)
        }
    }

    /// Pointwise minimum of two enclosed values.
    pub fn min(&self, other: &Enclosure) -> Enclosure {
        let lo = if self.lo < other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
        Self::from_parts(lo.clone(), hi.clone(), self.join_prec(other))
    }

    /// Widens by `r` on both sides; `r` must be non-negative.
    pub fn widen(&self, r: &Float) -> Enclosure {
        debug_assert!(*r >= 0);
        let p = self.prec;
        Self::from_parts(down(p, &self.lo - r), up(p, &self.hi + r), p)
    }

    /// Lower endpoint rendered in decimal, rounded down.
    pub fn lo_string(&self) -> String {
        format_float(&self.lo, Round::Down)
    }

    /// Upper endpoint rendered in decimal, rounded up.
    pub fn hi_string(&self) -> String {
        format_float(&self.hi, Round::Up)
    }
}

/// Decimal rendering with 20 significant digits in the given direction.
///
/// Values that are exact integers of at most 40 digits print as integers.
pub fn format_float(f: &Float, round: Round) -> String {
    if f.is_infinite() {
        return if f.is_sign_negative() { "-inf" } else { "inf" }.to_string();
    }
    if f.is_integer() {
        if let Some(i) = f.to_integer() {
            if i.significant_bits() <= 132 {
                return i.to_string();
            }
        }
    }
    f.to_string_radix_round(10, Some(20), round)
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_string(), self.hi_string())
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure::from_parts(-self.hi.clone(), -self.lo.clone(), self.prec)
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure::from_parts(-self.hi, -self.lo, self.prec)
    }
}

impl Add for &Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: &Enclosure) -> Enclosure {
        let p = self.join_prec(rhs);
        Enclosure::from_parts(down(p, &self.lo + &rhs.lo), up(p, &self.hi + &rhs.hi), p)
    }
}

impl Sub for &Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: &Enclosure) -> Enclosure {
        let p = self.join_prec(rhs);
        Enclosure::from_parts(down(p, &self.lo - &rhs.hi), up(p, &self.hi - &rhs.lo), p)
    }
}

impl Mul for &Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: &Enclosure) -> Enclosure {
        let p = self.join_prec(rhs);
        let (a, b) = (self, rhs);
        let lo = min_of([
            down(p, &a.lo * &b.lo),
            down(p, &a.lo * &b.hi),
            down(p, &a.hi * &b.lo),
            down(p, &a.hi * &b.hi),
        ]);
        let hi = max_of([
            up(p, &a.lo * &b.lo),
            up(p, &a.lo * &b.hi),
            up(p, &a.hi * &b.lo),
            up(p, &a.hi * &b.hi),
        ]);
        // 0 * inf gives NaN in one product; the true product is finite or the
        // other corner already dominates, so dropping to +-inf is safe.
        Enclosure::from_parts(lo, hi, p)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: &Enclosure) -> Enclosure {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Dispatches one of the four interval operations.
pub fn binary(op: BinaryOp, a: &Enclosure, b: &Enclosure) -> Result<Enclosure> {
    Ok(match op {
        BinaryOp::Add => a + b,
        BinaryOp::Sub => a - b,
        BinaryOp::Mul => a * b,
        BinaryOp::Div => a.div(b)?,
    })
}

/// Dispatches one of the supported transcendental functions.
pub fn unary(f: UnaryFn, a: &Enclosure) -> Result<Enclosure> {
    match f {
        UnaryFn::Exp => Ok(a.exp()),
        UnaryFn::Log => a.log(),
        UnaryFn::Sqrt => a.sqrt(),
        UnaryFn::Sinh => Ok(a.sinh()),
        UnaryFn::Cosh => Ok(a.cosh()),
    }
}

/// Outcome of an adaptive sign determination.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub sign: Option<Ordering>,
    pub value: Enclosure,
    pub precision_bits: u32,
}

/// Evaluates `f` at `start` bits, doubling the precision until the sign of
/// the result is certified or `cap` is exceeded.
pub fn resolve_sign<F>(start: u32, cap: u32, mut f: F) -> Result<Resolved>
where
    F: FnMut(u32) -> Result<Enclosure>,
{
    let mut prec = start.max(MIN_PRECISION);
    loop {
        let value = f(prec)?;
        let sign = value.sign();
        if sign.is_some() || prec.saturating_mul(2) > cap {
            return Ok(Resolved {
                sign,
                value,
                precision_bits: prec,
            });
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Enclosure {
        Enclosure::from_integer(v)
    }

    #[test]
    fn integers_are_exact() {
        let seven = int(7);
        assert_eq!(*seven.lo(), 7);
        assert_eq!(*seven.hi(), 7);
        let big: Integer = Integer::from(Integer::u_pow_u(10, 80)) + 1;
        let e = Enclosure::from_integer(big.clone());
        assert!(e.contains_integer(&big));
        assert_eq!(e.unique_integer(), Some(big));
    }

    #[test]
    fn one_third_is_tight() {
        let third = Enclosure::from_ratio(1, 3, 64).unwrap();
        assert!(third.contains_rational(&Rational::from((1, 3))));
        assert!(third.width() <= Float::with_val(64, Float::i_exp(1, -60)));
        assert!(Enclosure::from_ratio(1, 0, 64).is_err());
    }

    #[test]
    fn basic_binary_ops() {
        let sum = &int(1) + &int(2);
        assert_eq!(sum, int(3).with_precision(sum.precision_bits()));
        let unit = Enclosure::new(Float::with_val(16, -1), Float::with_val(16, 1), 16).unwrap();
        let sq = &unit * &unit;
        assert_eq!(*sq.lo(), -1);
        assert_eq!(*sq.hi(), 1);
        assert!(int(1).div(&unit).is_err());
        assert!(binary(BinaryOp::Div, &int(1), &unit).is_err());
    }

    #[test]
    fn unary_exact_points() {
        let one = unary(UnaryFn::Exp, &int(0)).unwrap();
        assert_eq!(*one.lo(), 1);
        assert_eq!(*one.hi(), 1);
        let two = unary(UnaryFn::Sqrt, &int(4)).unwrap();
        assert_eq!(*two.lo(), 2);
        assert_eq!(*two.hi(), 2);
        assert!(int(0).log().is_err());
        assert!(int(-1).sqrt().is_err());
    }

    #[test]
    fn log_exp_round_trip() {
        let e = int(1).with_precision(128).exp();
        let back = e.log().unwrap();
        assert!(back.contains_integer(&Integer::from(1)));
        let rel_in = Float::with_val(64, e.width() / e.lo());
        assert!(back.width() <= rel_in * 4u32);
    }

    #[test]
    fn pi_nests_and_narrows() {
        let p16 = Enclosure::pi(16);
        let p64 = Enclosure::pi(64);
        let p128 = Enclosure::pi(128);
        assert!(p16.contains(&p64));
        assert!(p64.contains(&p128));
        assert!(p128.width() < p64.width());
        let digits = Rational::from_f64(3.14159265358979).unwrap();
        assert!(*p64.lo() < digits.clone() + Rational::from((1, 10u64.pow(13))));
        assert!(*p64.hi() > digits - Rational::from((1, 10u64.pow(13))));
        assert!(p64.width() <= Float::with_val(64, Float::i_exp(1, 2 - 64)));
    }

    #[test]
    fn unique_integer_cases() {
        let e = |a: f64, b: f64| {
            Enclosure::new(Float::with_val(64, a), Float::with_val(64, b), 64).unwrap()
        };
        assert_eq!(e(2.9, 3.2).unique_integer(), Some(Integer::from(3)));
        assert_eq!(e(2.9, 4.1).unique_integer(), None);
        assert_eq!(e(3.0, 3.0).unique_integer(), Some(Integer::from(3)));
        assert_eq!(e(3.1, 3.9).unique_integer(), None);
    }

    #[test]
    fn cos_of_rational_multiples() {
        let c = |n: i64, d: i64| Enclosure::cos_pi_rational(&Rational::from((n, d)), 128);
        assert_eq!(c(0, 1).sign(), Some(Ordering::Greater));
        assert!(c(0, 1).contains_integer(&Integer::from(1)));
        assert!(c(1, 1).contains_integer(&Integer::from(-1)));
        assert!(c(1, 2).contains_integer(&Integer::from(0)));
        assert!(c(-3, 1).contains_integer(&Integer::from(-1)));
        assert!(c(7, 2).contains_integer(&Integer::from(0)));
        // cos(pi/3) = 1/2, cos(2pi/3) = -1/2, cos(5pi/3) = 1/2, cos(-pi/3) = 1/2
        for (n, d, want) in [(1, 3, (1, 2)), (2, 3, (-1, 2)), (5, 3, (1, 2)), (-1, 3, (1, 2))] {
            let v = c(n, d);
            assert!(v.contains_rational(&Rational::from(want)), "cos({n}pi/{d}) = {v}");
            assert!(v.width() < Float::with_val(64, Float::i_exp(1, -120)));
        }
    }

    #[test]
    fn log_integer_matches_plain_log() {
        let v: Integer = Integer::from(Integer::u_pow_u(10, 120)) + 12345;
        let a = Enclosure::log_integer(&v, 128).unwrap();
        let b = Enclosure::from_integer(v).with_precision(128).log().unwrap();
        assert!(a.overlaps(&b));
        assert!(a.width() < Float::with_val(64, Float::i_exp(1, -110)));
    }

    #[test]
    fn sinh_cosh_identity() {
        let x = Enclosure::from_ratio(7, 3, 128).unwrap();
        let s = x.sinh();
        let c = x.cosh();
        let one = &(&c * &c) - &(&s * &s);
        assert!(one.contains_integer(&Integer::from(1)));
    }

    #[test]
    fn resolve_sign_doubles_until_resolved() {
        // pi - 355/113 is about -2.7e-7: unresolved at 16 bits, resolved later.
        let r = resolve_sign(16, 1024, |p| {
            Ok(&Enclosure::pi(p) - &Enclosure::from_ratio(355, 113, p)?)
        })
        .unwrap();
        assert_eq!(r.sign, Some(Ordering::Less));
        assert!(r.precision_bits > 16);
    }

    #[test]
    fn abs_and_min() {
        let e = Enclosure::new(Float::with_val(16, -3), Float::with_val(16, 2), 16).unwrap();
        let a = e.abs();
        assert_eq!(*a.lo(), 0);
        assert_eq!(*a.hi(), 3);
        let m = int(5).min(&int(4));
        assert_eq!(*m.hi(), 4);
    }
}
