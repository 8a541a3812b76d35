//! Second log-differences of `p(n)` and their asymptotic expansions.
//!
//! `D(n) = 2 log p(n) - log p(n-1) - log p(n+1)` is evaluated as the log of
//! the exact rational `p(n)^2 / (p(n-1) p(n+1))`, which avoids subtracting
//! three nearly equal logarithms.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::exact::PartitionTable;
use crate::series::{c_const, int};

/// Highest derivative order available to [`l_expansion`].
pub const MAX_DERIVATIVE_ORDER: u32 = 6;

fn require_table(table: &PartitionTable, n: u64, what: &'static str) -> Result<()> {
    if n < 2 {
        return Err(Error::Range { what, min: 2, n });
    }
    if table.n_max() < n + 1 {
        return Err(Error::Unsupported(format!(
            "{what}({n}) needs p({}) but the table ends at {}",
            n + 1,
            table.n_max()
        )));
    }
    Ok(())
}

/// `p(n)^2 / (p(n-1) p(n+1))`, exactly.
pub fn log_concavity_ratio(table: &PartitionTable, n: u64) -> Result<Rational> {
    require_table(table, n, "log_concavity_ratio")?;
    let num = Integer::from(table.at(n) * table.at(n));
    let den = Integer::from(table.at(n - 1) * table.at(n + 1));
    Ok(Rational::from((num, den)))
}

/// Enclosure of `D(n)`; the table must reach `n + 1`.
pub fn d_exact(table: &PartitionTable, n: u64, prec: u32) -> Result<Enclosure> {
    Enclosure::from_rational(&log_concavity_ratio(table, n)?, prec).log()
}

/// `q2(n) = D(n) - log(n^2 / ((n-1)(n+1)))` for `q(n) = p(n)/n`.
pub fn q2_exact(table: &PartitionTable, n: u64, prec: u32) -> Result<Enclosure> {
    let mut ratio = log_concavity_ratio(table, n)?;
    ratio *= Rational::from((Integer::from(n - 1) * (n + 1), Integer::from(n) * n));
    Enclosure::from_rational(&ratio, prec).log()
}

/// `n^{3/2} D(n) / (pi / sqrt 24)`.
pub fn normalized_decay(table: &PartitionTable, n: u64, prec: u32) -> Result<Enclosure> {
    normalize(n, &d_exact(table, n, prec)?, prec)
}

fn normalize(n: u64, d: &Enclosure, prec: u32) -> Result<Enclosure> {
    let scale = int(n, prec).pow_three_halves()?;
    let unit = Enclosure::pi(prec).div(&int(24, prec).sqrt()?)?;
    (&scale * d).div(&unit)
}

/// Hardy-Ramanujan leading asymptote `e^{C sqrt n} / (4 n sqrt 3)`.
pub fn hr_asymptote(n: u64, prec: u32) -> Result<Enclosure> {
    if n == 0 {
        return Err(Error::Range { what: "hr_asymptote", min: 1, n });
    }
    let growth = (&c_const(prec) * &int(n, prec).sqrt()?).exp();
    growth.div(&(&int(4 * Integer::from(n), prec) * &int(3, prec).sqrt()?))
}

fn check_x(x: &Rational) -> Result<()> {
    if *x <= 1 {
        Err(crate::error::domain(format!("h_terms needs x > 1, got {x}")))
    } else {
        Ok(())
    }
}

/// `(h1(x), h2(x))` with `h1(x) = (C/4) x^{-3/2}` and `h2(x) = -288/(24x - 1)^2`.
pub fn h_terms(x: &Rational, prec: u32) -> Result<(Enclosure, Enclosure)> {
    check_x(x)?;
    Ok((h1_derivative(x, 0, prec)?, h2_derivative(x, 0, prec)?))
}

/// The leading constant as printed, `4 / (C x^{3/2})`.
pub fn h1_printed(x: &Rational, prec: u32) -> Result<Enclosure> {
    check_x(x)?;
    let xe = Enclosure::from_rational(x, prec);
    int(4, prec).div(&(&c_const(prec) * &xe.pow_three_halves()?))
}

/// `h1^{(j)}(x) / j!`: the Taylor coefficient of order `j`.
fn h1_derivative(x: &Rational, j: u32, prec: u32) -> Result<Enclosure> {
    // d^j/dx^j x^{-3/2} = prod_{i<j} (-3/2 - i) x^{-3/2-j}
    let mut coeff = Rational::from(1);
    for i in 0..j {
        coeff *= Rational::from((-3 - 2 * i as i64, 2));
        coeff /= i + 1;
    }
    let xe = Enclosure::from_rational(x, prec);
    let x_pow = Enclosure::from_rational(&Rational::from(x.clone().pow(j as i32)), prec);
    let quarter_c = c_const(prec).div(&int(4, prec))?;
    let magnitude = (&quarter_c * &Enclosure::from_rational(&coeff, prec))
        .div(&(&x_pow * &xe.pow_three_halves()?))?;
    Ok(magnitude)
}

/// `h2^{(j)}(x) / j!`, exact rational.
fn h2_derivative(x: &Rational, j: u32, prec: u32) -> Result<Enclosure> {
    // -288 (-1)^j (j+1) 24^j (24x - 1)^{-2-j}
    let u = Rational::from(x * 24u32) - 1u32;
    let mut value = Rational::from(-288 * (j as i64 + 1));
    if j % 2 == 1 {
        value = -value;
    }
    value *= Integer::from(24).pow(j);
    value /= u.pow(2 + j as i32);
    Ok(Enclosure::from_rational(&value, prec))
}

/// Which expansion of `D(n)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionSign {
    /// Even-order Taylor terms of `h1 + h2` shifted to `n + 1`, orders `0..=2k`.
    Plus,
    /// Orders `0..=2k` of `h1` plus orders `0..=2k-2` of `h2`; `k = 0` gives `h1(n)`.
    Minus,
}

/// `L_k^+(n)` or `L_k^-(n)`: Taylor expansions about `x0 = n` evaluated at
/// `n + 1`, keeping the even-order terms.
pub fn l_expansion(n: u64, k: u32, sign: ExpansionSign, prec: u32) -> Result<Enclosure> {
    if 2 * k > MAX_DERIVATIVE_ORDER {
        return Err(Error::Unsupported(format!(
            "expansion order {} exceeds the derivative cap {MAX_DERIVATIVE_ORDER}",
            2 * k
        )));
    }
    if n < 2 {
        return Err(Error::Range { what: "l_expansion", min: 2, n });
    }
    let x = Rational::from(n);
    let h2_orders = match sign {
        ExpansionSign::Plus => k + 1,
        ExpansionSign::Minus => k,
    };
    let mut acc = int(0, prec);
    for i in 0..=k {
        acc = &acc + &h1_derivative(&x, 2 * i, prec)?;
    }
    for i in 0..h2_orders {
        acc = &acc + &h2_derivative(&x, 2 * i, prec)?;
    }
    Ok(acc)
}

/// One point of the normalized decay series.
#[derive(Clone, Debug)]
pub struct DecaySample {
    pub n: u64,
    pub d_value: Enclosure,
    pub normalized: Enclosure,
}

/// Samples for `n_from..=n_to`, computed in parallel and returned in order.
pub fn figure1_series(
    table: &PartitionTable,
    n_from: u64,
    n_to: u64,
    prec: u32,
) -> Result<Vec<DecaySample>> {
    if n_from < 2 || n_from > n_to {
        return Err(crate::error::domain(format!(
            "figure1_series needs 2 <= from <= to, got {n_from}..{n_to}"
        )));
    }
    require_table(table, n_to, "figure1_series")?;
    (n_from..=n_to)
        .into_par_iter()
        .map(|n| {
            let d_value = d_exact(table, n, prec)?;
            let normalized = normalize(n, &d_value, prec)?;
            Ok(DecaySample {
                n,
                d_value,
                normalized,
            })
        })
        .collect()
}
