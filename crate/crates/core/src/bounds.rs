//! Explicit sandwich bounds.
//!
//! Every function here returns enclosures of closed-form expressions; deciding
//! whether a bound holds is done by comparing enclosures with a strict gap
//! (see [`BoundPair::classify`]).

use std::fmt;

use rug::{Integer, Rational};

use crate::enclosure::Enclosure;
use crate::error::{domain, Error, Result};
use crate::series::{c_const, int, log_t_closed, mu};

/// Which quantity a [`BoundPair`] sandwiches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundTarget {
    /// `f(x+1) - 2f(x) + f(x-1)` for a catalog function.
    SecondDifference(AdmissibleFn),
    /// `T1(n) = 2 log T(n) - log T(n-1) - log T(n+1)`.
    T1,
    /// `p2(n) = 2 log p(n) - log p(n-1) - log p(n+1)`.
    P2,
    /// `q2(n)`, the same for `q(n) = p(n)/n`.
    Q2,
    /// `p(m)` itself.
    PartitionValue,
}

/// Strict containment verdict for a value against a [`BoundPair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Outside,
    Indeterminate,
}

/// A lower and an upper enclosure for some target quantity.
#[derive(Clone, Debug)]
pub struct BoundPair {
    pub lower: Enclosure,
    pub upper: Enclosure,
    pub target: BoundTarget,
    /// Smallest argument for which the bound is asserted.
    pub valid_from: u64,
}

impl BoundPair {
    /// `(value - lower, upper - value)`; both positive iff the bound holds strictly.
    pub fn margins(&self, value: &Enclosure) -> (Enclosure, Enclosure) {
        (value - &self.lower, &self.upper - value)
    }

    /// The smaller of the two margins.
    pub fn margin(&self, value: &Enclosure) -> Enclosure {
        let (below, above) = self.margins(value);
        below.min(&above)
    }

    pub fn classify(&self, value: &Enclosure) -> Containment {
        let (below, above) = self.margins(value);
        if below.is_positive() && above.is_positive() {
            Containment::Inside
        } else if below.hi() <= &0 || above.hi() <= &0 {
            Containment::Outside
        } else {
            Containment::Indeterminate
        }
    }
}

/// Functions whose second derivative is strictly monotone on their domain,
/// so the second difference lies strictly between `f''(x-1)` and `f''(x+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdmissibleFn {
    /// `log x`
    Log,
    /// `sqrt x`
    Sqrt,
    /// `mu(x) = (pi/6) sqrt(24x - 1)`
    Mu,
    /// `log(mu(x) - 1)`
    LogMuMinusOne,
    /// `-3 log mu(x)`; convex, so the sandwich is reversed.
    NegThreeLogMu,
}

impl AdmissibleFn {
    pub const ALL: [AdmissibleFn; 5] = [
        AdmissibleFn::Log,
        AdmissibleFn::Sqrt,
        AdmissibleFn::Mu,
        AdmissibleFn::LogMuMinusOne,
        AdmissibleFn::NegThreeLogMu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdmissibleFn::Log => "log",
            AdmissibleFn::Sqrt => "sqrt",
            AdmissibleFn::Mu => "mu",
            AdmissibleFn::LogMuMinusOne => "log_mu_minus_one",
            AdmissibleFn::NegThreeLogMu => "neg_three_log_mu",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::Unsupported(format!("function {name:?} is not in the catalog")))
    }

    /// `f''` increasing (concave case) or decreasing (convex case).
    fn concave(self) -> bool {
        !matches!(self, AdmissibleFn::NegThreeLogMu)
    }

    pub fn eval(self, x: &Enclosure) -> Result<Enclosure> {
        let prec = x.precision_bits();
        match self {
            AdmissibleFn::Log => x.log(),
            AdmissibleFn::Sqrt => x.sqrt(),
            AdmissibleFn::Mu => mu_real(x),
            AdmissibleFn::LogMuMinusOne => (&mu_real(x)? - &int(1, prec)).log(),
            AdmissibleFn::NegThreeLogMu => Ok(&int(-3, prec) * &mu_real(x)?.log()?),
        }
    }

    pub fn second_derivative(self, x: &Enclosure) -> Result<Enclosure> {
        let prec = x.precision_bits();
        let u = &(&int(24, prec) * x) - &int(1, prec);
        match self {
            AdmissibleFn::Log => Ok(-(x * x).recip()?),
            AdmissibleFn::Sqrt => {
                Ok(-(&int(4, prec) * &x.pow_three_halves()?).recip()?)
            }
            AdmissibleFn::Mu => {
                let pi = Enclosure::pi(prec);
                Ok(-(&int(24, prec) * &pi).div(&u.pow_three_halves()?)?)
            }
            AdmissibleFn::LogMuMinusOne => {
                // (mu''(mu - 1) - mu'^2) / (mu - 1)^2 with mu' = 2 pi u^{-1/2}
                let pi = Enclosure::pi(prec);
                let m1 = &mu_real(x)? - &int(1, prec);
                let d1 = (&int(2, prec) * &pi).div(&u.sqrt()?)?;
                let d2 = -(&int(24, prec) * &pi).div(&u.pow_three_halves()?)?;
                (&(&d2 * &m1) - &(&d1 * &d1)).div(&(&m1 * &m1))
            }
            AdmissibleFn::NegThreeLogMu => int(864, prec).div(&(&u * &u)),
        }
    }

    // Smallest x (exclusive) for which x - 1 lies in the domain where the
    // hypotheses hold.
    fn check_domain(self, x: &Rational, prec: u32) -> Result<()> {
        if *x <= 1 {
            return Err(domain(format!("second_diff_bounds needs x > 1, got {x}")));
        }
        let left = Rational::from(x - 1u32);
        let needs_mu = !matches!(self, AdmissibleFn::Log | AdmissibleFn::Sqrt);
        if needs_mu && left * 24u32 <= 1 {
            return Err(domain(format!("{} needs 24(x-1) > 1, got x = {x}", self.name())));
        }
        if self == AdmissibleFn::LogMuMinusOne {
            let at_left = mu_real(&Enclosure::from_rational(&Rational::from(x - 1u32), prec))?;
            if !(&at_left - &int(1, prec)).is_positive() {
                return Err(domain(format!("log(mu - 1) needs mu(x-1) > 1, got x = {x}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for AdmissibleFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// mu at a real argument.
fn mu_real(x: &Enclosure) -> Result<Enclosure> {
    let prec = x.precision_bits();
    let u = &(&int(24, prec) * x) - &int(1, prec);
    (&Enclosure::pi(prec) * &u.sqrt()?).div(&int(6, prec))
}

/// `(f''(x-1), f''(x+1))` ordered as (lower, upper).
pub fn second_diff_bounds(f: AdmissibleFn, x: &Rational, prec: u32) -> Result<BoundPair> {
    f.check_domain(x, prec)?;
    let at = |r: Rational| f.second_derivative(&Enclosure::from_rational(&r, prec));
    let left = at(Rational::from(x - 1u32))?;
    let right = at(Rational::from(x + 1u32))?;
    let (lower, upper) = if f.concave() { (left, right) } else { (right, left) };
    Ok(BoundPair {
        lower,
        upper,
        target: BoundTarget::SecondDifference(f),
        valid_from: 1,
    })
}

/// `f(x+1) - 2 f(x) + f(x-1)`.
pub fn second_difference(f: AdmissibleFn, x: &Rational, prec: u32) -> Result<Enclosure> {
    f.check_domain(x, prec)?;
    let at = |r: Rational| f.eval(&Enclosure::from_rational(&r, prec));
    let mid = at(x.clone())?;
    Ok(&(&at(Rational::from(x + 1u32))? - &(&int(2, prec) * &mid)) + &at(Rational::from(x - 1u32))?)
}

fn require(what: &'static str, n: u64, min: u64) -> Result<()> {
    if n < min {
        Err(Error::Range { what, min, n })
    } else {
        Ok(())
    }
}

/// `24 pi / (24 m - 1)^{3/2}`, which equals `-mu''(m)`.
fn mu_curvature(m: u64, prec: u32) -> Result<Enclosure> {
    let u = int(24 * Integer::from(m) - 1, prec);
    (&int(24, prec) * &Enclosure::pi(prec)).div(&u.pow_three_halves()?)
}

/// `e^{-C sqrt(n) / 10}`.
pub fn y_ratio_bound(n: u64, prec: u32) -> Result<Enclosure> {
    require("y_ratio_bound", n, 2)?;
    let arg = (&c_const(prec) * &int(n, prec).sqrt()?).div(&int(10, prec))?;
    Ok((-arg).exp())
}

/// `T1(n) = 2 log T(n) - log T(n-1) - log T(n+1)` via the closed form of `log T`.
pub fn t1_value(n: u64, prec: u32) -> Result<Enclosure> {
    require("t1_value", n, 3)?;
    let mid = log_t_closed(n, prec)?;
    Ok(&(&(&int(2, prec) * &mid) - &log_t_closed(n - 1, prec)?) - &log_t_closed(n + 1, prec)?)
}

/// Bounds on `T1(n)` for `n >= 50`:
/// `24pi/(24(n+1)-1)^{3/2} - 3/n^2 < T1(n) < 24pi/(24(n-1)-1)^{3/2} + e^{-C sqrt(n)/10}`.
pub fn t1_bounds(n: u64, prec: u32) -> Result<BoundPair> {
    require("t1_bounds", n, 50)?;
    let lower = &mu_curvature(n + 1, prec)? - &Enclosure::from_ratio(3, Integer::from(n) * n, prec)?;
    let upper = &mu_curvature(n - 1, prec)? + &y_ratio_bound(n, prec)?;
    Ok(BoundPair {
        lower,
        upper,
        target: BoundTarget::T1,
        valid_from: 50,
    })
}

/// `1 + (16/mu^3) e^{mu/2}`, an upper bound on `|p(n) - T(n)|`.
pub fn bound_r(n: u64, prec: u32) -> Result<Enclosure> {
    require("bound_r", n, 2)?;
    let m = mu(n, prec)?;
    let tail = (&int(16, prec) * &m.div(&int(2, prec))?.exp()).div(&m.powi(3))?;
    Ok(&int(1, prec) + &tail)
}

/// Bounds on `p2(n)` for `n >= 50`, with slack `2 e^{-C sqrt(n)/10}` on both sides.
pub fn p2_bounds_explicit(n: u64, prec: u32) -> Result<BoundPair> {
    require("p2_bounds_explicit", n, 50)?;
    let slack = &int(2, prec) * &y_ratio_bound(n, prec)?;
    let lower = &(&mu_curvature(n + 1, prec)? - &Enclosure::from_ratio(3, Integer::from(n) * n, prec)?)
        - &slack;
    let upper = &mu_curvature(n - 1, prec)? + &slack;
    Ok(BoundPair {
        lower,
        upper,
        target: BoundTarget::P2,
        valid_from: 50,
    })
}

/// `(1/(24n)^{3/2}, 2/n^{3/2})` for `n >= 2600`.
pub fn p2_bounds_simple(n: u64, prec: u32) -> Result<BoundPair> {
    require("p2_bounds_simple", n, 2600)?;
    let lower = int(24 * Integer::from(n), prec).pow_three_halves()?.recip()?;
    let upper = int(2, prec).div(&int(n, prec).pow_three_halves()?)?;
    Ok(BoundPair {
        lower,
        upper,
        target: BoundTarget::P2,
        valid_from: 2600,
    })
}

/// Bounds on `q2(n)` for `n >= 50`: the explicit `p2` pair with the lower
/// end reduced by `1/(n+1)^2`.
pub fn q2_bounds(n: u64, prec: u32) -> Result<BoundPair> {
    require("q2_bounds", n, 50)?;
    let p2 = p2_bounds_explicit(n, prec)?;
    let extra = Enclosure::from_ratio(1, Integer::from(n + 1) * (n + 1), prec)?;
    Ok(BoundPair {
        lower: &p2.lower - &extra,
        upper: p2.upper,
        target: BoundTarget::Q2,
        valid_from: 50,
    })
}

/// `e^{2 sqrt m} / (2 pi m e^{1/(6m)}) < p(m) < e^{C sqrt m}`.
pub fn classical_p_bounds(m: u64, prec: u32) -> Result<BoundPair> {
    require("classical_p_bounds", m, 1)?;
    let root = int(m, prec).sqrt()?;
    let upper = (&c_const(prec) * &root).exp();
    let num = (&int(2, prec) * &root).exp();
    let inv_six_m = Enclosure::from_ratio(1, 6 * Integer::from(m), prec)?;
    let den = &(&(&int(2, prec) * &Enclosure::pi(prec)) * &int(m, prec)) * &inv_six_m.exp();
    Ok(BoundPair {
        lower: num.div(&den)?,
        upper,
        target: BoundTarget::PartitionValue,
        valid_from: 1,
    })
}

/// `4 sqrt(m+1) - 2 log(m+1) - 1/(3(m+1)) - 2 log(2 pi) - log 2000 - C sqrt(m+25)`.
pub fn thm51_gap(m: u64, prec: u32) -> Result<Enclosure> {
    require("thm51_gap", m, 1)?;
    let m1 = int(m + 1, prec);
    let two_pi = &int(2, prec) * &Enclosure::pi(prec);
    let mut acc = &int(4, prec) * &m1.sqrt()?;
    acc = &acc - &(&int(2, prec) * &m1.log()?);
    acc = &acc - &Enclosure::from_ratio(1, 3 * Integer::from(m + 1), prec)?;
    acc = &acc - &(&int(2, prec) * &two_pi.log()?);
    acc = &acc - &int(2000, prec).log()?;
    acc = &acc - &(&c_const(prec) * &int(m + 25, prec).sqrt()?);
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PartitionTable;
    use crate::series::big_t;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn log_and_sqrt_sandwich_examples() {
        for (f, x) in [
            (AdmissibleFn::Log, r(2, 1)),
            (AdmissibleFn::Sqrt, r(4, 1)),
            (AdmissibleFn::Log, r(100, 1)),
        ] {
            let pair = second_diff_bounds(f, &x, 128).unwrap();
            let value = second_difference(f, &x, 128).unwrap();
            assert_eq!(pair.classify(&value), Containment::Inside, "{f} at {x}");
        }
        let pair = second_diff_bounds(AdmissibleFn::Log, &r(2, 1), 128).unwrap();
        assert!(pair.lower.contains_integer(&Integer::from(-1)));
        assert!(pair.upper.contains_rational(&r(-1, 9)));
        let log100 = second_diff_bounds(AdmissibleFn::Log, &r(100, 1), 128).unwrap();
        assert!(log100.lower.contains_rational(&r(-1, 99 * 99)));
        assert!(log100.upper.contains_rational(&r(-1, 101 * 101)));
    }

    #[test]
    fn catalog_domains() {
        assert!(second_diff_bounds(AdmissibleFn::Log, &r(1, 1), 64).is_err());
        assert!(second_diff_bounds(AdmissibleFn::Mu, &r(51, 50), 64).is_err());
        assert!(second_diff_bounds(AdmissibleFn::LogMuMinusOne, &r(11, 10), 64).is_err());
        assert!(second_diff_bounds(AdmissibleFn::LogMuMinusOne, &r(3, 2), 64).is_ok());
        assert!(AdmissibleFn::from_name("exp").is_err());
        assert_eq!(AdmissibleFn::from_name("mu").unwrap(), AdmissibleFn::Mu);
    }

    #[test]
    fn t1_sandwich_samples() {
        for n in [50, 51, 100, 999, 2600] {
            let pair = t1_bounds(n, 128).unwrap();
            assert_eq!(pair.classify(&t1_value(n, 128).unwrap()), Containment::Inside, "n={n}");
        }
        assert!(t1_bounds(50, 128).unwrap().lower.is_positive());
        assert!(matches!(t1_bounds(49, 128), Err(Error::Range { .. })));
    }

    #[test]
    fn remainder_bound_covers_p_minus_t() {
        let t = PartitionTable::with_max(1001);
        for n in [2, 3, 10, 100, 1000] {
            let gap = (&Enclosure::from_integer(t.at(n).clone()) - &big_t(n, 128).unwrap()).abs();
            assert!(gap.hi() < bound_r(n, 128).unwrap().lo(), "n={n}");
        }
        let ratio = bound_r(1000, 128).unwrap().div(&big_t(1000, 128).unwrap()).unwrap();
        assert!(ratio.hi() < y_ratio_bound(1000, 128).unwrap().lo());
    }

    #[test]
    fn ratio_bound_values() {
        assert!(*y_ratio_bound(10, 64).unwrap().hi() < 0.5);
        let v100 = y_ratio_bound(100, 64).unwrap().midpoint().to_f64();
        assert!((v100 - (-2.565_099_660_323_728_f64).exp()).abs() < 1e-12);
        assert!(*y_ratio_bound(2600, 64).unwrap().hi() < 5e-6);
    }

    #[test]
    fn simple_p2_pair_values() {
        let pair = p2_bounds_simple(2600, 128).unwrap();
        let lo = Rational::from((1, 62_400u32));
        // (1/62400)^{3/2} and 2/2600^{3/2}
        let lo_sq_cubed = Rational::from(&lo * &lo) * &lo;
        let l = pair.lower.clone();
        assert!((&l * &l).contains_rational(&lo_sq_cubed));
        let u = pair.upper.clone();
        let want = Rational::from((4, 2600u64.pow(3)));
        assert!((&u * &u).contains_rational(&want));
        assert!(p2_bounds_simple(2599, 64).is_err());
    }

    #[test]
    fn explicit_p2_lower_dominates_simple_lower_at_2600() {
        let e = p2_bounds_explicit(2600, 128).unwrap();
        let s = p2_bounds_simple(2600, 128).unwrap();
        assert!(e.lower.lo() > s.lower.hi());
        assert!(q2_bounds(2600, 128).unwrap().lower.is_positive());
        assert!(q2_bounds(49, 64).is_err());
    }

    #[test]
    fn classical_bounds_small_m() {
        let t = PartitionTable::with_max(1000);
        for m in [1, 2, 25, 1000] {
            let pair = classical_p_bounds(m, 128).unwrap();
            let v = Enclosure::from_integer(t.at(m).clone());
            assert_eq!(pair.classify(&v), Containment::Inside, "m={m}");
        }
        let e_c = classical_p_bounds(1, 64).unwrap().upper.midpoint().to_f64();
        assert!((e_c - 13.0).abs() < 0.05, "{e_c}");
    }

    #[test]
    fn gap_signs() {
        assert!(thm51_gap(300, 128).unwrap().is_positive());
        assert!(thm51_gap(2, 128).unwrap().is_negative());
        let first = (1..=300).find(|&m| thm51_gap(m, 128).unwrap().is_positive());
        assert_eq!(first, Some(288));
        assert!((288..=300).all(|m| thm51_gap(m, 128).unwrap().is_positive()));
    }
}
