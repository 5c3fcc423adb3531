use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Commutative ring elements usable as matrix entries.
///
/// `Zero`/`One` come from num-traits, so identity and zero matrices can be
/// built without a context value.
pub trait Ring:
    Clone + Debug + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync + 'static
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
        + 'static
{
}

/// Scalar fields for elimination and evaluation.
pub trait Field: Ring {
    /// `true` when equality and zero tests are certain, `false` for
    /// finite-precision models.
    const EXACT: bool;

    fn inverse(&self) -> Option<Self>;

    /// Image of a rational constant, in the same context (prime, precision)
    /// as `self`.
    fn embed(&self, q: &Rational) -> Self;

    /// Pivot preference for elimination; lower is better, `None` means the
    /// value is (or is indistinguishable from) zero.
    fn pivot_weight(&self) -> Option<i64>;

    /// Zero with certainty, as opposed to zero below the tracked precision.
    fn is_certain_zero(&self) -> bool {
        self.is_zero()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * inv)
    }
}

impl Field for Rational {
    const EXACT: bool = true;

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn embed(&self, q: &Rational) -> Self {
        q.clone()
    }

    fn pivot_weight(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(0)
        }
    }
}

/// Rings with a partial exact division, as needed by fraction-free
/// elimination.
pub trait ExactDiv: Ring {
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl<F: Field> ExactDiv for F {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.div(divisor)
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// p-adic valuation; `None` stands for +∞ (the value is zero).
pub fn valuation(q: &Rational, p: u64) -> Option<i64> {
    let num = int_valuation(q.numer(), p)?;
    let den = int_valuation(q.denom(), p).unwrap_or(0);
    Some(num - den)
}

/// `|a - 1|_p < 1`.
pub fn unit_ball_check(a: &Rational, p: u64) -> bool {
    match valuation(&(a - Rational::one()), p) {
        None => true,
        Some(v) => v >= 1,
    }
}

/// Parses `n` or `n/d` with `d > 0`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(ParseError::syntax(1, 1, format!("invalid rational `{s}`")));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let parse_int = |t: &str| -> Result<BigInt> {
        if t.is_empty() || t.starts_with('+') {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    let n = parse_int(n)?;
    let d = match d {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if !d.is_positive() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `n` or `n/d`; this is the serialized form used everywhere.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
