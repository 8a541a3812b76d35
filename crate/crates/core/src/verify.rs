//! Range scans that classify every point of a range as holding, violated or
//! indeterminate, and the per-point predicates behind them.
//!
//! Every predicate has the form `margin > 0`. Checks on exact integers never
//! come back indeterminate; checks involving transcendental constants double
//! the working precision until the margin's sign is certified or the cap is
//! reached.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Integer;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{self, Containment};
use crate::decay::d_exact;
use crate::enclosure::{resolve_sign, Enclosure};
use crate::error::{domain, Error, Result};
use crate::exact::PartitionTable;
use crate::series::{a_k_star, big_t, c_const, int, mu};

pub const TOOL_VERSION: &str = concat!("partcert ", env!("CARGO_PKG_VERSION"));

/// A margin together with its certified sign, if any.
#[derive(Clone, Debug)]
pub struct CertifiedSign {
    /// `None` when the enclosure still contains zero at the precision cap.
    pub sign: Option<Ordering>,
    pub margin: Enclosure,
    pub precision_bits: u32,
}

impl CertifiedSign {
    fn exact(value: Integer) -> Self {
        let sign = Some(value.cmp0());
        let margin = Enclosure::from_integer(value);
        Self {
            sign,
            precision_bits: margin.precision_bits(),
            margin,
        }
    }

    fn resolved<F>(start: u32, cap: u32, f: F) -> Result<Self>
    where
        F: FnMut(u32) -> Result<Enclosure>,
    {
        let r = resolve_sign(start, cap, f)?;
        Ok(Self {
            sign: r.sign,
            margin: r.value,
            precision_bits: r.precision_bits,
        })
    }

    pub fn verdict(&self) -> Verdict {
        match self.sign {
            Some(Ordering::Greater) => Verdict::Holds,
            Some(_) => Verdict::Violated,
            None => Verdict::Indeterminate,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Indeterminate,
}

/// The coefficient `c(n)` in `p(n-1) p(n+1) (1 + c(n)) > p(n)^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChenVariant {
    /// `1/n`
    Unit,
    /// `240/(24n)^{3/2}`
    Refined,
    /// `pi/(sqrt 24 n^{3/2})`
    Sharp,
}

/// How `A_k(n)` in the Janoski inequality relates to the series coefficient `A_k^*(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// `A_k = A_k^* / sqrt k`
    StarOverSqrtK,
    /// `A_k` is the Kloosterman-type sum itself, `A_k = A_k^* sqrt k`.
    Standard,
}

impl Normalization {
    pub const ALL: [Normalization; 2] = [Normalization::StarOverSqrtK, Normalization::Standard];

    pub fn name(self) -> &'static str {
        match self {
            Normalization::StarOverSqrtK => "star-over-sqrtk",
            Normalization::Standard => "standard",
        }
    }
}

impl FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("normalization {s:?}")))
    }
}

fn pn(table: &PartitionTable, n: u64) -> &Integer {
    table.at(n)
}

/// Sign of `p(n)^2 - p(n-1) p(n+1)`.
pub fn check_log_concavity(table: &PartitionTable, n: u64) -> Result<CertifiedSign> {
    if n == 0 {
        return Err(Error::Range { what: "check_log_concavity", min: 1, n });
    }
    let sq = Integer::from(pn(table, n) * pn(table, n));
    let cross = Integer::from(pn(table, n - 1) * pn(table, n + 1));
    Ok(CertifiedSign::exact(sq - cross))
}

/// Sign of `p(n-1) p(n+1) (1 + c(n)) - p(n)^2`.
///
/// The unit and refined variants decide the sign with integers only; the
/// reported margin is an enclosure of the same quantity.
pub fn check_chen_reverse(
    table: &PartitionTable,
    n: u64,
    variant: ChenVariant,
    prec: u32,
    cap: u32,
) -> Result<CertifiedSign> {
    if n < 2 {
        return Err(Error::Range { what: "check_chen_reverse", min: 2, n });
    }
    let a = Integer::from(pn(table, n - 1) * pn(table, n + 1));
    let b = Integer::from(pn(table, n) * pn(table, n));
    let excess = Integer::from(&b - &a);
    match variant {
        ChenVariant::Unit => {
            // n (A (1 + 1/n) - B) = A (n + 1) - n B
            let scaled = Integer::from(&a * (n + 1)) - Integer::from(&b * n);
            let sign = scaled.cmp0();
            let margin = Enclosure::from_ratio(scaled, n, prec)?;
            Ok(CertifiedSign {
                sign: Some(sign),
                margin,
                precision_bits: prec,
            })
        }
        ChenVariant::Refined => {
            // 240 A / (24n)^{3/2} > B - A; square when the right side is positive.
            let sign = if excess <= 0 {
                Ordering::Greater
            } else {
                let lhs = Integer::from(&a * 240u32).square();
                let rhs = excess.clone().square() * Integer::from(24 * n).pow(3);
                lhs.cmp(&rhs)
            };
            let mut found =
                CertifiedSign::resolved(prec, cap, |p| chen_margin(&a, &excess, n, variant, p))?;
            debug_assert!(found.sign.is_none() || found.sign == Some(sign));
            found.sign = Some(sign);
            Ok(found)
        }
        ChenVariant::Sharp => {
            CertifiedSign::resolved(prec, cap, |p| chen_margin(&a, &excess, n, variant, p))
        }
    }
}

fn chen_margin(
    a: &Integer,
    excess: &Integer,
    n: u64,
    variant: ChenVariant,
    prec: u32,
) -> Result<Enclosure> {
    let n3 = int(n, prec).pow_three_halves()?;
    let c = match variant {
        ChenVariant::Unit => Enclosure::from_ratio(1, n, prec)?,
        ChenVariant::Refined => int(240, prec).div(&int(24 * n, prec).pow_three_halves()?)?,
        ChenVariant::Sharp => Enclosure::pi(prec).div(&(&int(24, prec).sqrt()? * &n3))?,
    };
    Ok(&(&int(a.clone(), prec) * &c) - &int(excess.clone(), prec))
}

/// Sign of `p(n)^2 - p(n-m) p(n+m)` for `n > m > 1`.
pub fn check_strong_lc(table: &PartitionTable, n: u64, m: u64) -> Result<CertifiedSign> {
    if !(n > m && m > 1) {
        return Err(domain(format!("strong log-concavity needs n > m > 1, got n={n}, m={m}")));
    }
    let sq = Integer::from(pn(table, n) * pn(table, n));
    let cross = Integer::from(pn(table, n - m) * pn(table, n + m));
    Ok(CertifiedSign::exact(sq - cross))
}

/// Sign of `q(n)^2 - q(n-1) q(n+1)` for `q(n) = p(n)/n`, scaled by `n^2 (n-1)(n+1)`.
pub fn check_sun_q(table: &PartitionTable, n: u64) -> Result<CertifiedSign> {
    if n < 2 {
        return Err(Error::Range { what: "check_sun_q", min: 2, n });
    }
    let sq = Integer::from(pn(table, n) * pn(table, n)) * (n - 1) * (n + 1);
    let cross = Integer::from(pn(table, n - 1) * pn(table, n + 1)) * n * n;
    Ok(CertifiedSign::exact(sq - cross))
}

/// Both readings of the Janoski summation limit at one point.
#[derive(Clone, Debug)]
pub struct JanoskiOutcome {
    /// Upper summation limit `floor(C sqrt t)`.
    pub terms: u64,
    pub floor: CertifiedSign,
    /// The same with one more term, standing in for `ceil(C sqrt t)`.
    pub ceil: CertifiedSign,
}

// d(n,k) = (C/(2kt)) cosh(C sqrt(t)/k) - sinh(C sqrt(t)/k) / (2 t^{3/2}), t = n - 1/24.
fn janoski_d(n: u64, k: u64, root: &Enclosure, prec: u32) -> Result<Enclosure> {
    let t = Enclosure::from_ratio(24 * Integer::from(n) - 1, 24, prec)?;
    let arg = (&c_const(prec) * root).div(&int(k, prec))?;
    let first = (&c_const(prec) * &arg.cosh()).div(&(&int(2 * k, prec) * &t))?;
    let second = arg.sinh().div(&(&int(2, prec) * &t.pow_three_halves()?))?;
    Ok(&first - &second)
}

// A_k(n) sqrt k under the given normalization.
fn janoski_coefficient(n: u64, k: u64, norm: Normalization, prec: u32) -> Result<Enclosure> {
    let star = a_k_star(n, k, prec)?;
    Ok(match norm {
        Normalization::StarOverSqrtK => star,
        Normalization::Standard => &star * &int(k, prec),
    })
}

/// Number of terms `floor(C sqrt(n - 1/24))`; note `C sqrt t = mu(n)`.
pub fn janoski_limit(n: u64, prec: u32, cap: u32) -> Result<u64> {
    let mut p = prec;
    loop {
        let m = mu(n, p)?;
        let lo = m.lo().clone().floor();
        let hi = m.hi().clone().floor();
        if lo == hi {
            return lo
                .to_integer()
                .and_then(|i| i.to_u64())
                .ok_or_else(|| domain("summation limit out of range"));
        }
        if p.saturating_mul(2) > cap {
            return Err(domain(format!("could not certify floor(mu({n}))")));
        }
        p *= 2;
    }
}

// LHS - RHS of the Janoski inequality with terms k = 3..=limit.
fn janoski_margin(n: u64, limit: u64, norm: Normalization, prec: u32) -> Result<Enclosure> {
    let t = Enclosure::from_ratio(24 * Integer::from(n) - 1, 24, prec)?;
    let root = t.sqrt()?;
    let scale = (&Enclosure::pi(prec) * &int(2, prec).sqrt()?).recip()?;
    let mut sum = int(0, prec);
    for k in 3..=limit {
        let term = &janoski_coefficient(n, k, norm, prec)? * &janoski_d(n, k, &root, prec)?;
        sum = &sum + &term;
    }
    let lhs = &scale * &sum;
    let three = &janoski_coefficient(n, 3, norm, prec)? * &janoski_d(n, 3, &root, prec)?;
    let factor = &(&c_const(prec) * &root) * &(&int(3, prec).sqrt()? * &scale);
    // RHS uses A_3(n) d(n,3) without the sqrt k weight.
    let three = three.div(&int(3, prec).sqrt()?)?;
    Ok(&lhs - &(&factor * &three))
}

/// Sign of `LHS - RHS` in Janoski's inequality
/// `(1/(pi sqrt 2)) sum_{k=3}^{K} A_k sqrt(k) d(n,k) > C sqrt(t) (sqrt 3/(pi sqrt 2)) A_3 d(n,3)`.
pub fn janoski_check(n: u64, norm: Normalization, prec: u32, cap: u32) -> Result<JanoskiOutcome> {
    if n < 2 {
        return Err(Error::Range { what: "janoski_check", min: 2, n });
    }
    let terms = janoski_limit(n, prec, cap)?;
    if terms < 3 {
        return Err(domain(format!("janoski_check({n}): summation limit {terms} < 3")));
    }
    let floor = CertifiedSign::resolved(prec, cap, |p| janoski_margin(n, terms, norm, p))?;
    let ceil = CertifiedSign::resolved(prec, cap, |p| janoski_margin(n, terms + 1, norm, p))?;
    Ok(JanoskiOutcome { terms, floor, ceil })
}

/// Strict containment of `D(n)` in the simple sandwich `(1/(24n)^{3/2}, 2/n^{3/2})`.
pub fn check_prop_bounds(table: &PartitionTable, n: u64, prec: u32, cap: u32) -> Result<CertifiedSign> {
    CertifiedSign::resolved(prec, cap, |p| {
        let pair = bounds::p2_bounds_simple(n, p)?;
        Ok(pair.margin(&d_exact(table, n, p)?))
    })
}

/// Strict containment of `T1(n)` in its sandwich.
pub fn check_lemma_t1(n: u64, prec: u32, cap: u32) -> Result<CertifiedSign> {
    CertifiedSign::resolved(prec, cap, |p| {
        Ok(bounds::t1_bounds(n, p)?.margin(&bounds::t1_value(n, p)?))
    })
}

/// `e^{-C sqrt(n)/10} - (1 + 16 e^{mu/2}/mu^3) / T(n) > 0`.
pub fn check_lemma_ratio(n: u64, prec: u32, cap: u32) -> Result<CertifiedSign> {
    if n < 10 {
        return Err(Error::Range { what: "check_lemma_ratio", min: 10, n });
    }
    CertifiedSign::resolved(prec, cap, |p| {
        let ratio = bounds::bound_r(n, p)?.div(&big_t(n, p)?)?;
        Ok(&bounds::y_ratio_bound(n, p)? - &ratio)
    })
}

/// Checks that [`scan`] knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckId {
    LogConcave,
    ChenReverse,
    ChenRefined,
    ChenSharp,
    Strong,
    SunQ,
    Janoski,
    PropBounds,
    LemmaT1,
    LemmaRatio,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::LogConcave,
        CheckId::ChenReverse,
        CheckId::ChenRefined,
        CheckId::ChenSharp,
        CheckId::Strong,
        CheckId::SunQ,
        CheckId::Janoski,
        CheckId::PropBounds,
        CheckId::LemmaT1,
        CheckId::LemmaRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::LogConcave => "logconcave",
            CheckId::ChenReverse => "chen-reverse",
            CheckId::ChenRefined => "chen-refined",
            CheckId::ChenSharp => "chen-sharp",
            CheckId::Strong => "strong",
            CheckId::SunQ => "sun-q",
            CheckId::Janoski => "janoski",
            CheckId::PropBounds => "prop-bounds",
            CheckId::LemmaT1 => "lemma-t1",
            CheckId::LemmaRatio => "lemma-ratio",
        }
    }

    /// Smallest `n` at which the predicate is defined or asserted.
    pub fn min_n(self) -> u64 {
        match self {
            CheckId::LogConcave => 1,
            CheckId::Strong => 3,
            CheckId::PropBounds => 2600,
            CheckId::LemmaT1 => 50,
            CheckId::LemmaRatio => 10,
            _ => 2,
        }
    }

    /// Default upper end of a scan.
    pub fn default_to(self) -> u64 {
        match self {
            CheckId::Strong => 1500,
            CheckId::ChenSharp => 8000,
            CheckId::Janoski => 1000,
            CheckId::LemmaT1 | CheckId::LemmaRatio => 5000,
            _ => 10_000,
        }
    }

    /// Whether the predicate is decided in exact integer arithmetic.
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            CheckId::LogConcave
                | CheckId::ChenReverse
                | CheckId::ChenRefined
                | CheckId::Strong
                | CheckId::SunQ
        )
    }

    /// Largest table index a scan up to `to` reads.
    fn table_need(self, to: u64) -> u64 {
        match self {
            CheckId::Strong => 2 * to,
            _ => to + 1,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// A scanned point: a single index, or `(n, m)` for strong log-concavity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Point {
    Single(u64),
    Pair([u64; 2]),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Single(n) => write!(f, "{n}"),
            Point::Pair([n, m]) => write!(f, "{n}:{m}"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Unsupported(format!("bad point {s:?}")))
        };
        match s.split_once(':') {
            Some((n, m)) => Ok(Point::Pair([num(n)?, num(m)?])),
            None => Ok(Point::Single(num(s)?)),
        }
    }
}

/// A certified failure of the predicate.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub point: Point,
    pub margin_lo: String,
    pub margin_hi: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRange {
    pub from: u64,
    pub to: u64,
}

/// The outcome of a range scan.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub range: ScanRange,
    pub parameters: BTreeMap<String, Value>,
    pub violations: Vec<Violation>,
    pub indeterminate: Vec<Point>,
    pub passed: bool,
    pub tool_version: String,
    pub precision_bits: u32,
}

impl CheckReport {
    pub fn violation_points(&self) -> BTreeSet<Point> {
        self.violations.iter().map(|v| v.point).collect()
    }

    /// Violation set as plain indices (pairs contribute their `n`).
    pub fn violation_indices(&self) -> BTreeSet<u64> {
        self.violations
            .iter()
            .map(|v| match v.point {
                Point::Single(n) | Point::Pair([n, _]) => n,
            })
            .collect()
    }

    /// True iff nothing is indeterminate and the violations are exactly `expected`.
    pub fn matches(&self, expected: &Expectation) -> bool {
        self.indeterminate.is_empty()
            && self.violation_points() == expected.points(self.range.from, self.range.to)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// A known violation set, as accepted by `--expect`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// Odd `n <= 25`.
    OddLe25,
    /// Even `n < 45`.
    EvenLt45,
    Nothing,
    Explicit(BTreeSet<Point>),
}

impl Expectation {
    /// The expected violations that fall inside `[from, to]`.
    pub fn points(&self, from: u64, to: u64) -> BTreeSet<Point> {
        let window = |keep: fn(u64) -> bool| {
            (from..=to).filter(|&n| keep(n)).map(Point::Single).collect()
        };
        match self {
            Expectation::OddLe25 => window(|n| n % 2 == 1 && n <= 25),
            Expectation::EvenLt45 => window(|n| n % 2 == 0 && n < 45),
            Expectation::Nothing => BTreeSet::new(),
            Expectation::Explicit(set) => set.clone(),
        }
    }
}

impl FromStr for Expectation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd-le-25" => Ok(Expectation::OddLe25),
            "even-lt-45" => Ok(Expectation::EvenLt45),
            "none" => Ok(Expectation::Nothing),
            list => list
                .split(',')
                .map(str::parse)
                .collect::<Result<BTreeSet<Point>>>()
                .map(Expectation::Explicit),
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::OddLe25 => f.write_str("odd-le-25"),
            Expectation::EvenLt45 => f.write_str("even-lt-45"),
            Expectation::Nothing => f.write_str("none"),
            Expectation::Explicit(set) => {
                let parts: Vec<String> = set.iter().map(Point::to_string).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// Knobs shared by all scans.
#[derive(Clone, Debug)]
pub struct ScanParams {
    pub precision_bits: u32,
    pub precision_cap: u32,
    pub normalization: Normalization,
}

impl Default for ScanParams {
    fn default() -> Self {
        Self {
            precision_bits: crate::enclosure::default_precision(),
            precision_cap: crate::enclosure::PRECISION_CAP,
            normalization: Normalization::StarOverSqrtK,
        }
    }
}

struct PointResult {
    point: Point,
    sign: CertifiedSign,
    // Janoski only: the ceil-limit sign, when it differs from the floor one.
    flipped: bool,
}

fn evaluate(
    table: &PartitionTable,
    check: CheckId,
    n: u64,
    params: &ScanParams,
) -> Result<Vec<PointResult>> {
    let (prec, cap) = (params.precision_bits, params.precision_cap);
    let single = |sign: CertifiedSign| {
        vec![PointResult {
            point: Point::Single(n),
            sign,
            flipped: false,
        }]
    };
    Ok(match check {
        CheckId::LogConcave => single(check_log_concavity(table, n)?),
        CheckId::ChenReverse => single(check_chen_reverse(table, n, ChenVariant::Unit, prec, cap)?),
        CheckId::ChenRefined => {
            single(check_chen_reverse(table, n, ChenVariant::Refined, prec, cap)?)
        }
        CheckId::ChenSharp => single(check_chen_reverse(table, n, ChenVariant::Sharp, prec, cap)?),
        CheckId::SunQ => single(check_sun_q(table, n)?),
        CheckId::PropBounds => single(check_prop_bounds(table, n, prec, cap)?),
        CheckId::LemmaT1 => single(check_lemma_t1(n, prec, cap)?),
        CheckId::LemmaRatio => single(check_lemma_ratio(n, prec, cap)?),
        CheckId::Janoski => {
            let out = janoski_check(n, params.normalization, prec, cap)?;
            let flipped = out.ceil.sign != out.floor.sign;
            vec![PointResult {
                point: Point::Single(n),
                sign: out.floor,
                flipped,
            }]
        }
        CheckId::Strong => (2..n)
            .map(|m| {
                Ok(PointResult {
                    point: Point::Pair([n, m]),
                    sign: check_strong_lc(table, n, m)?,
                    flipped: false,
                })
            })
            .collect::<Result<_>>()?,
    })
}

/// Classifies every point of `from..=to` for `check`.
///
/// The table is extended first and then shared read-only across threads;
/// results are merged in ascending order. For `strong` the points are the
/// pairs `1 < m < n` with `n` in range.
pub fn scan(
    table: &mut PartitionTable,
    check: CheckId,
    from: u64,
    to: u64,
    params: &ScanParams,
) -> Result<CheckReport> {
    if from > to {
        return Err(domain(format!("empty range {from}..{to}")));
    }
    if from < check.min_n() {
        return Err(Error::Range {
            what: check.name(),
            min: check.min_n(),
            n: from,
        });
    }
    table.fill_to(table.n_max().max(check.table_need(to)));
    let table: &PartitionTable = table;

    let results: Vec<Vec<PointResult>> = (from..=to)
        .into_par_iter()
        .map(|n| evaluate(table, check, n, params))
        .collect::<Result<_>>()?;

    let mut violations = Vec::new();
    let mut indeterminate = Vec::new();
    let mut flips = Vec::new();
    let mut precision_bits = params.precision_bits;
    for r in results.into_iter().flatten() {
        if !check.is_exact() {
            precision_bits = precision_bits.max(r.sign.precision_bits);
        }
        if r.flipped {
            flips.push(r.point);
        }
        match r.sign.verdict() {
            Verdict::Holds => {}
            Verdict::Violated => violations.push(Violation {
                point: r.point,
                margin_lo: r.sign.margin.lo_string(),
                margin_hi: r.sign.margin.hi_string(),
            }),
            Verdict::Indeterminate => indeterminate.push(r.point),
        }
    }

    let mut parameters = BTreeMap::new();
    parameters.insert("precision_cap".to_string(), json!(params.precision_cap));
    match check {
        CheckId::Janoski => {
            parameters.insert("normalization".into(), json!(params.normalization.name()));
            parameters.insert("summation_limit".into(), json!("floor"));
            parameters.insert(
                "ceil_limit_flips".into(),
                json!(flips.iter().map(Point::to_string).collect::<Vec<_>>()),
            );
        }
        CheckId::Strong => {
            parameters.insert("region".into(), json!("1 < m < n"));
        }
        _ => {}
    }
    let passed = violations.is_empty() && indeterminate.is_empty();
    Ok(CheckReport {
        check_id: check.name().to_string(),
        range: ScanRange { from, to },
        parameters,
        violations,
        indeterminate,
        passed,
        tool_version: TOOL_VERSION.to_string(),
        precision_bits,
    })
}

/// Whether every certified bound of [`bounds::classical_p_bounds`] contains `p(m)`.
pub fn classical_bounds_hold(table: &PartitionTable, m: u64, prec: u32) -> Result<bool> {
    let pair = bounds::classical_p_bounds(m, prec)?;
    Ok(pair.classify(&Enclosure::from_integer(table.at(m).clone())) == Containment::Inside)
}
