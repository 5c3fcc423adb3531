//! Fixed-precision p-adic numbers.
//!
//! An approximation `u·p^v + O(p^abs)` stores the valuation `v`, a unit
//! residue `u` modulo `p^(abs - v)` and the absolute precision `abs`.
//! Precision is propagated pessimistically: sums keep the smaller absolute
//! precision, products the smaller relative precision. A value whose
//! residue vanishes is *indistinguishable from zero*; it is never reported
//! as an exact zero.
//!
//! Exact rationals form a second variant so that `Zero`/`One` exist without
//! a prime; they adopt the prime and precision of whatever they meet.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::scalar::{int_valuation, valuation, Field, Rational};

#[derive(Clone, Debug)]
pub struct PAdic(Repr);

#[derive(Clone, Debug)]
enum Repr {
    Exact(Rational),
    Approx(Approx),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Approx {
    prime: u64,
    abs: i64,
    val: Option<i64>,
    unit: BigInt,
}

pub(crate) fn prime_power(p: u64, k: i64) -> BigInt {
    assert!(k >= 0, "negative prime power");
    Pow::pow(BigInt::from(p), k as u64)
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl Approx {
    fn zero(prime: u64, abs: i64) -> Self {
        Approx { prime, abs, val: None, unit: BigInt::zero() }
    }

    /// The value `s·p^scale`, known modulo `p^abs`.
    fn normalized(prime: u64, abs: i64, scale: i64, s: BigInt) -> Self {
        if abs <= scale {
            return Self::zero(prime, abs);
        }
        let s = s.mod_floor(&prime_power(prime, abs - scale));
        match int_valuation(&s, prime) {
            None => Self::zero(prime, abs),
            Some(k) => {
                let unit = s / prime_power(prime, k);
                Approx { prime, abs, val: Some(scale + k), unit }
            }
        }
    }

    fn from_rational(q: &Rational, prime: u64, rel: i64) -> Self {
        let rel = rel.max(1);
        match valuation(q, prime) {
            None => Self::zero(prime, rel),
            Some(v) => {
                let num_v = int_valuation(q.numer(), prime).unwrap_or(0);
                let den_v = int_valuation(q.denom(), prime).unwrap_or(0);
                let a = q.numer() / prime_power(prime, num_v);
                let b = q.denom() / prime_power(prime, den_v);
                let modulus = prime_power(prime, rel);
                let b_inv = mod_inverse(&b, &modulus).expect("denominator coprime to p");
                Self::normalized(prime, v + rel, v, a * b_inv)
            }
        }
    }

    fn relative(&self) -> i64 {
        match self.val {
            Some(v) => self.abs - v,
            None => 0,
        }
    }

    fn add(&self, other: &Approx) -> Approx {
        assert_eq!(self.prime, other.prime, "mixing p-adic numbers of different primes");
        let abs = self.abs.min(other.abs);
        let parts: Vec<(i64, &BigInt)> = [self, other]
            .iter()
            .filter_map(|x| x.val.map(|v| (v, &x.unit)))
            .collect();
        let Some(scale) = parts.iter().map(|(v, _)| *v).min() else {
            return Approx::zero(self.prime, abs);
        };
        let s = parts
            .iter()
            .fold(BigInt::zero(), |acc, (v, u)| acc + *u * prime_power(self.prime, v - scale));
        Approx::normalized(self.prime, abs, scale, s)
    }

    fn mul(&self, other: &Approx) -> Approx {
        assert_eq!(self.prime, other.prime, "mixing p-adic numbers of different primes");
        match (self.val, other.val) {
            (Some(va), Some(vb)) => {
                let rel = self.relative().min(other.relative());
                let val = va + vb;
                Approx::normalized(self.prime, val + rel, val, &self.unit * &other.unit)
            }
            (None, Some(v)) => Approx::zero(self.prime, self.abs + v),
            (Some(v), None) => Approx::zero(self.prime, other.abs + v),
            (None, None) => Approx::zero(self.prime, self.abs + other.abs),
        }
    }

    fn neg(&self) -> Approx {
        match self.val {
            None => self.clone(),
            Some(v) => Approx::normalized(self.prime, self.abs, v, -self.unit.clone()),
        }
    }

    fn inverse(&self) -> Option<Approx> {
        let v = self.val?;
        let rel = self.relative();
        let u = mod_inverse(&self.unit, &prime_power(self.prime, rel))?;
        Some(Approx::normalized(self.prime, rel - v, -v, u))
    }

    /// Converts an exact rational at the absolute precision of `self`.
    fn exact_like(&self, q: &Rational) -> Approx {
        match valuation(q, self.prime) {
            None => Approx::zero(self.prime, self.abs),
            Some(v) if v >= self.abs => Approx::zero(self.prime, self.abs),
            Some(v) => Approx::from_rational(q, self.prime, self.abs - v),
        }
    }
}

impl PAdic {
    /// `q` reduced to relative precision `precision` (at least 1).
    pub fn from_rational(q: &Rational, prime: u64, precision: i64) -> Self {
        PAdic(Repr::Approx(Approx::from_rational(q, prime, precision)))
    }

    /// The integer `r`, known modulo `p^abs`.
    pub fn from_residue(r: &BigInt, prime: u64, abs: i64) -> Self {
        PAdic(Repr::Approx(Approx::normalized(prime, abs, 0, r.clone())))
    }

    pub fn exact(q: Rational) -> Self {
        PAdic(Repr::Exact(q))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Exact(q) => Some(q),
            Repr::Approx(_) => None,
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match &self.0 {
            Repr::Exact(_) => None,
            Repr::Approx(a) => Some(a.prime),
        }
    }

    /// Valuation of an approximation; `None` for exact values and for
    /// values indistinguishable from zero.
    pub fn valuation(&self) -> Option<i64> {
        match &self.0 {
            Repr::Exact(_) => None,
            Repr::Approx(a) => a.val,
        }
    }

    /// Relative precision `N` of a nonzero approximation.
    pub fn precision(&self) -> Option<i64> {
        match &self.0 {
            Repr::Approx(a) if a.val.is_some() => Some(a.relative()),
            _ => None,
        }
    }

    pub fn absolute_precision(&self) -> Option<i64> {
        match &self.0 {
            Repr::Exact(_) => None,
            Repr::Approx(a) => Some(a.abs),
        }
    }

    pub fn unit(&self) -> Option<&BigInt> {
        match &self.0 {
            Repr::Approx(a) if a.val.is_some() => Some(&a.unit),
            _ => None,
        }
    }

    pub fn is_indistinguishable_from_zero(&self) -> bool {
        matches!(&self.0, Repr::Approx(a) if a.val.is_none())
    }

    /// The value modulo `p^k`, for a p-integral approximation with `k` at
    /// most its absolute precision.
    pub fn residue(&self, k: i64) -> Option<BigInt> {
        let Repr::Approx(a) = &self.0 else { return None };
        if k > a.abs || k < 0 {
            return None;
        }
        match a.val {
            None => Some(BigInt::zero()),
            Some(v) if v < 0 => None,
            Some(v) if v >= k => Some(BigInt::zero()),
            Some(v) => {
                Some((&a.unit * prime_power(a.prime, v)).mod_floor(&prime_power(a.prime, k)))
            }
        }
    }

    fn combine(
        &self,
        other: &PAdic,
        exact: impl Fn(&Rational, &Rational) -> Rational,
        approx: impl Fn(&Approx, &Approx) -> Approx,
        lift: impl Fn(&Rational, &Approx) -> Option<Approx>,
    ) -> PAdic {
        match (&self.0, &other.0) {
            (Repr::Exact(a), Repr::Exact(b)) => PAdic(Repr::Exact(exact(a, b))),
            (Repr::Approx(a), Repr::Approx(b)) => PAdic(Repr::Approx(approx(a, b))),
            (Repr::Exact(q), Repr::Approx(b)) => match lift(q, b) {
                Some(a) => PAdic(Repr::Approx(approx(&a, b))),
                None => PAdic(Repr::Exact(exact(q, &Rational::zero()))),
            },
            (Repr::Approx(a), Repr::Exact(q)) => match lift(q, a) {
                Some(b) => PAdic(Repr::Approx(approx(a, &b))),
                None => PAdic(Repr::Exact(exact(&Rational::zero(), q))),
            },
        }
    }
}

fn lift_for_add(q: &Rational, other: &Approx) -> Option<Approx> {
    Some(other.exact_like(q))
}

fn lift_for_mul(q: &Rational, other: &Approx) -> Option<Approx> {
    if q.is_zero() {
        // an exact zero factor makes the product exactly zero
        return None;
    }
    Some(Approx::from_rational(q, other.prime, other.relative().max(1)))
}

impl Add for PAdic {
    type Output = PAdic;
    fn add(self, rhs: PAdic) -> PAdic {
        self.combine(&rhs, |a, b| a + b, Approx::add, lift_for_add)
    }
}

impl Sub for PAdic {
    type Output = PAdic;
    fn sub(self, rhs: PAdic) -> PAdic {
        self + (-rhs)
    }
}

impl Mul for PAdic {
    type Output = PAdic;
    fn mul(self, rhs: PAdic) -> PAdic {
        self.combine(&rhs, |a, b| a * b, Approx::mul, lift_for_mul)
    }
}

impl Neg for PAdic {
    type Output = PAdic;
    fn neg(self) -> PAdic {
        match self.0 {
            Repr::Exact(q) => PAdic(Repr::Exact(-q)),
            Repr::Approx(a) => PAdic(Repr::Approx(a.neg())),
        }
    }
}

impl PartialEq for PAdic {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Exact(a), Repr::Exact(b)) => a == b,
            (Repr::Approx(a), Repr::Approx(b)) => a == b,
            (Repr::Exact(q), Repr::Approx(a)) | (Repr::Approx(a), Repr::Exact(q)) => {
                &a.exact_like(q) == a
            }
        }
    }
}

impl Zero for PAdic {
    fn zero() -> Self {
        PAdic(Repr::Exact(Rational::zero()))
    }

    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Exact(q) => q.is_zero(),
            Repr::Approx(a) => a.val.is_none(),
        }
    }
}

impl One for PAdic {
    fn one() -> Self {
        PAdic(Repr::Exact(Rational::one()))
    }
}

impl Field for PAdic {
    const EXACT: bool = false;

    fn inverse(&self) -> Option<Self> {
        match &self.0 {
            Repr::Exact(q) if q.is_zero() => None,
            Repr::Exact(q) => Some(PAdic(Repr::Exact(q.recip()))),
            Repr::Approx(a) => a.inverse().map(|a| PAdic(Repr::Approx(a))),
        }
    }

    fn embed(&self, q: &Rational) -> Self {
        PAdic(Repr::Exact(q.clone()))
    }

    fn pivot_weight(&self) -> Option<i64> {
        match &self.0 {
            Repr::Exact(q) if q.is_zero() => None,
            Repr::Exact(_) => Some(i64::MIN),
            Repr::Approx(a) => a.val,
        }
    }

    fn is_certain_zero(&self) -> bool {
        matches!(&self.0, Repr::Exact(q) if q.is_zero())
    }
}

impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Exact(q) => write!(f, "{}", super::scalar::format_rational(q)),
            Repr::Approx(a) => match a.val {
                None => write!(f, "O({}^{})", a.prime, a.abs),
                Some(v) => write!(f, "{}*{}^{} + O({}^{})", a.unit, a.prime, v, a.prime, a.abs),
            },
        }
    }
}
