//! Test-only helpers shared by the integration suites.
//!
//! `Fixed` is a binary fixed-point real backed by a big integer. It shares no
//! code with the MPFR-backed enclosures: `exp` is a Taylor series with
//! halving and squaring, `log` an atanh series, `sqrt` an integer square
//! root. Its error is far below any enclosure width we compare against.

#![allow(dead_code)]

use partcert::{binary, unary, BinaryOp, Enclosure, UnaryFn};
use rand::Rng;
use rug::ops::DivRounding;
use rug::{Integer, Rational};

/// Fractional bits carried by [`Fixed`].
pub const FRAC_BITS: u32 = 640;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed(pub Integer);

impl Fixed {
    pub fn from_rational(r: &Rational) -> Self {
        let num = Integer::from(r.numer() << FRAC_BITS);
        Fixed(num.div_floor(r.denom()))
    }

    pub fn from_int(v: i64) -> Self {
        Fixed(Integer::from(v) << FRAC_BITS)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        Fixed(Integer::from(&self.0 + &o.0))
    }

    pub fn sub(&self, o: &Fixed) -> Fixed {
        Fixed(Integer::from(&self.0 - &o.0))
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        Fixed(Integer::from(&self.0 * &o.0) >> FRAC_BITS)
    }

    pub fn div(&self, o: &Fixed) -> Fixed {
        Fixed(Integer::from(&self.0 << FRAC_BITS).div_floor(&o.0))
    }

    pub fn half(&self) -> Fixed {
        Fixed(Integer::from(&self.0 >> 1))
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0
    }

    /// Exact rational value of the fixed-point number.
    pub fn to_rational(&self) -> Rational {
        Rational::from((self.0.clone(), Integer::from(1) << FRAC_BITS))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64()
    }

    pub fn exp(&self) -> Fixed {
        // exp(x) = exp(x / 2^r)^(2^r)
        let r = 16;
        let y = Fixed(Integer::from(&self.0 >> r));
        let mut sum = Fixed::one();
        let mut term = Fixed::one();
        for i in 1.. {
            term = Fixed(term.mul(&y).0 / i);
            if term.0 == 0 {
                break;
            }
            sum = sum.add(&term);
        }
        for _ in 0..r {
            sum = sum.mul(&sum);
        }
        sum
    }

    // 2 atanh(z) for |z| < 1
    fn two_atanh(z: &Fixed) -> Fixed {
        let z2 = z.mul(z);
        let mut power = z.clone();
        let mut sum = Fixed(Integer::new());
        let mut k: u32 = 1;
        while power.0 != 0 {
            sum = sum.add(&Fixed(Integer::from(&power.0 / k)));
            power = power.mul(&z2);
            k += 2;
        }
        Fixed(sum.0 << 1)
    }

    pub fn ln2() -> Fixed {
        Self::two_atanh(&Fixed::one().div(&Fixed::from_int(3)))
    }

    pub fn log(&self) -> Option<Fixed> {
        if !self.is_positive() {
            return None;
        }
        // self = m * 2^e with m in [1, 2)
        let e = self.0.significant_bits() as i64 - 1 - FRAC_BITS as i64;
        let m = if e >= 0 {
            Fixed(Integer::from(&self.0 >> e as u32))
        } else {
            Fixed(Integer::from(&self.0 << (-e) as u32))
        };
        let z = m.sub(&Fixed::one()).div(&m.add(&Fixed::one()));
        let log_m = Self::two_atanh(&z);
        Some(log_m.add(&Fixed(Self::ln2().0 * e)))
    }

    pub fn sqrt(&self) -> Option<Fixed> {
        if self.0 < 0 {
            return None;
        }
        Some(Fixed(Integer::from(&self.0 << FRAC_BITS).sqrt()))
    }

    pub fn sinh(&self) -> Fixed {
        let e = self.exp();
        e.sub(&Fixed::one().div(&e)).half()
    }

    pub fn cosh(&self) -> Fixed {
        let e = self.exp();
        e.add(&Fixed::one().div(&e)).half()
    }
}

/// Whether `[lo, hi]` contains the oracle value up to the oracle's own slack.
pub fn encloses(e: &Enclosure, v: &Fixed) -> bool {
    let val = v.to_rational();
    let slack = Rational::from((1, Integer::from(1) << (FRAC_BITS - 250)));
    let tol = slack * (Rational::from(val.abs_ref()) + 1u32);
    let lo_ok = match e.lo().to_rational() {
        Some(lo) => lo <= Rational::from(&val + &tol),
        None => e.lo().is_sign_negative(),
    };
    let hi_ok = match e.hi().to_rational() {
        Some(hi) => hi >= Rational::from(&val - &tol),
        None => e.hi().is_sign_positive(),
    };
    lo_ok && hi_ok
}

fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::from((rng.random_range(-60i64..=60), rng.random_range(1i64..=24)))
}

/// One random expression evaluated both ways: the enclosure at `prec` bits
/// and the oracle. Returns the op trace for failure messages.
pub fn random_case<R: Rng>(rng: &mut R, prec: u32) -> (Enclosure, Fixed, String) {
    let start = random_rational(rng);
    let mut enc = Enclosure::from_rational(&start, prec);
    let mut fix = Fixed::from_rational(&start);
    let mut trace = format!("{start}");
    let steps = rng.random_range(1..=6);
    for _ in 0..steps {
        let magnitude = fix.to_f64().abs();
        if rng.random_bool(0.5) {
            let y = random_rational(rng);
            let op = [BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div][rng.random_range(0..4)];
            let Ok(next) = binary(op, &enc, &Enclosure::from_rational(&y, prec)) else {
                continue;
            };
            let fy = Fixed::from_rational(&y);
            fix = match op {
                BinaryOp::Add => fix.add(&fy),
                BinaryOp::Sub => fix.sub(&fy),
                BinaryOp::Mul => fix.mul(&fy),
                BinaryOp::Div => fix.div(&fy),
            };
            enc = next;
            trace.push_str(&format!(" {op:?} {y}"));
        } else {
            let f = [UnaryFn::Exp, UnaryFn::Log, UnaryFn::Sqrt, UnaryFn::Sinh, UnaryFn::Cosh]
                [rng.random_range(0..5)];
            if matches!(f, UnaryFn::Exp | UnaryFn::Sinh | UnaryFn::Cosh) && magnitude > 40.0 {
                continue;
            }
            let Ok(next) = unary(f, &enc) else {
                continue;
            };
            let value = match f {
                UnaryFn::Exp => Some(fix.exp()),
                UnaryFn::Log => fix.log(),
                UnaryFn::Sqrt => fix.sqrt(),
                UnaryFn::Sinh => Some(fix.sinh()),
                UnaryFn::Cosh => Some(fix.cosh()),
            };
            let Some(value) = value else {
                continue;
            };
            fix = value;
            enc = next;
            trace.push_str(&format!(" {f:?}"));
        }
        if fix.to_f64().abs() > 1e40 {
            break;
        }
    }
    (enc, fix, trace)
}
