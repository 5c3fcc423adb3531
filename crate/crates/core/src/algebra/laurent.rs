//! Laurent polynomials in one variable γ over a scalar field.
//!
//! Units of `F[γ, γ⁻¹]` are exactly the monomials `c·γ^k`, `c ≠ 0`. The
//! canonical representative of an associate class is the monic polynomial
//! with nonzero constant term (see [`LaurentPoly::normalize_associate`]).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{format_rational, parse_rational, ExactDiv, Field, Rational};
use crate::error::{Error, ParseError, Result};

/// Symbol used for γ in the text form.
pub const GAMMA_SYMBOL: char = 'g';

#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<F> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, F)>) -> Self {
        let mut map: BTreeMap<i64, F> = BTreeMap::new();
        for (k, c) in terms {
            let slot = map.entry(k).or_insert_with(F::zero);
            *slot = slot.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    pub fn monomial(c: F, k: i64) -> Self {
        Self::from_terms([(k, c)])
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable γ.
    pub fn gamma() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// Builds `Σ coeffs[i]·γ^(low + i)`.
    pub fn from_dense(low: i64, coeffs: Vec<F>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (low + i as i64, c)))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &F)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> F {
        self.terms.get(&k).cloned().unwrap_or_else(F::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; the degree of the polynomial part.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Ascending coefficients from `min_exp` to `max_exp`.
    pub fn to_dense(&self) -> (i64, Vec<F>) {
        let Some(low) = self.min_exp() else { return (0, Vec::new()) };
        let high = self.max_exp().unwrap();
        let mut out = vec![F::zero(); (high - low + 1) as usize];
        for (k, c) in &self.terms {
            out[(k - low) as usize] = c.clone();
        }
        (low, out)
    }

    /// Multiplication by `γ^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (*k, x.clone() * c.clone())))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn invert_unit(&self) -> Result<Self> {
        match self.terms.iter().next() {
            Some((k, c)) if self.terms.len() == 1 => {
                let inv = c.inverse().ok_or(Error::DivisionByZero)?;
                Ok(Self::monomial(inv, -k))
            }
            _ => Err(Error::NotAUnit(format!("{} terms", self.terms.len()))),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        result
    }

    /// Canonical associate: monic polynomial in γ with nonzero constant term.
    pub fn normalize_associate(&self) -> Self {
        let (Some(low), Some(lead)) = (self.min_exp(), self.leading_coeff()) else {
            return Self::zero();
        };
        let inv = lead.inverse().expect("nonzero leading coefficient");
        self.shift(-low).scale(&inv)
    }

    /// Exact quotient in the Laurent ring, `None` when `divisor` does not
    /// divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (low_a, a) = self.to_dense();
        let (low_b, b) = divisor.to_dense();
        let (q, r) = poly_divmod(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(low_a - low_b, q))
    }

    /// Remainder of the polynomial parts, shifted back to the exponent
    /// range of `self`. Zero iff `divisor` divides `self`.
    pub fn rem_polynomial(&self, divisor: &Self) -> Self {
        let (low_a, a) = self.to_dense();
        let (_, b) = divisor.to_dense();
        let (_, r) = poly_divmod(&a, &b);
        Self::from_dense(low_a, r)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (_, mut a) = self.normalize_associate().to_dense();
        let (_, mut b) = other.normalize_associate().to_dense();
        while !b.is_empty() {
            let (_, r) = poly_divmod(&a, &b);
            a = b;
            b = trim(r);
            if let Some(lead) = b.last().cloned() {
                let inv = lead.inverse().expect("nonzero");
                b = b.into_iter().map(|c| c * inv.clone()).collect();
            }
        }
        Self::from_dense(0, a).normalize_associate()
    }

    /// Normalized GCD of a list; zero for an empty or all-zero list.
    pub fn gcd_many<'a>(fs: impl IntoIterator<Item = &'a Self>) -> Self
    where
        F: 'a,
    {
        let mut acc = Self::zero();
        for f in fs {
            acc = acc.gcd(f);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Substitutes `γ = a`.
    pub fn eval_at(&self, a: &F) -> Result<F> {
        let Some(low) = self.min_exp() else { return Ok(F::zero()) };
        let (_, dense) = self.to_dense();
        let mut acc = F::zero();
        for c in dense.iter().rev() {
            acc = acc * a.clone() + c.clone();
        }
        if low >= 0 {
            Ok(acc * scalar_pow(a, low as u64))
        } else {
            let inv = a.inverse().ok_or(Error::DivisionByZero)?;
            Ok(acc * scalar_pow(&inv, low.unsigned_abs()))
        }
    }

    /// Formal derivative with respect to γ.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| {
            let kf = c.embed(&Rational::from_integer((*k).into()));
            (k - 1, c.clone() * kf)
        }))
    }
}

impl LaurentPoly<Rational> {
    /// Substitutes `γ = a` for a point in any field that contains `Q`.
    pub fn eval_embedded<S: Field>(&self, a: &S) -> Result<S> {
        self.map_coeffs(|c| a.embed(c)).eval_at(a)
    }

    /// Parses the text form, e.g. `g^2 - 5*g + 4` or `3*g^-1`.
    pub fn parse(text: &str) -> Result<Self> {
        PolyParser { chars: text.chars().collect(), pos: 0 }.parse()
    }
}

pub(crate) fn scalar_pow<F: Field>(a: &F, mut n: u64) -> F {
    let mut result = F::one();
    let mut base = a.clone();
    while n > 0 {
        if n & 1 == 1 {
            result = result * base.clone();
        }
        base = base.clone() * base;
        n >>= 1;
    }
    result
}

fn trim<F: Field>(mut v: Vec<F>) -> Vec<F> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Dense polynomial long division over a field.
fn poly_divmod<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let b = trim(b.to_vec());
    let lead_inv = b.last().expect("division by zero polynomial").inverse().expect("nonzero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![F::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap().clone() * lead_inv.clone();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - factor.clone() * c.clone();
        }
        // leading term cancels exactly by construction
        r.pop();
        q[shift] = factor;
        r = trim(r);
    }
    (q, r)
}

impl<F: Field> ExactDiv for LaurentPoly<F> {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, divisor)
    }
}

impl<F: Field> Zero for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> One for LaurentPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}

impl<F: Field> Add for LaurentPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut terms = self.terms;
        for (k, c) in rhs.terms {
            let slot = terms.entry(k).or_insert_with(F::zero);
            *slot = slot.clone() + c;
            if slot.is_zero() {
                terms.remove(&k);
            }
        }
        LaurentPoly { terms }
    }
}

impl<F: Field> Neg for LaurentPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<F: Field> Sub for LaurentPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for LaurentPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut terms: BTreeMap<i64, F> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let slot = terms.entry(ka + kb).or_insert_with(F::zero);
                *slot = slot.clone() + ca.clone() * cb.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl fmt::Display for LaurentPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match *k {
                0 => String::new(),
                1 => GAMMA_SYMBOL.to_string(),
                k => format!("{GAMMA_SYMBOL}^{k}"),
            };
            if var.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

struct PolyParser {
    chars: Vec<char>,
    pos: usize,
}

impl PolyParser {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(ParseError::syntax(1, self.pos + 1, msg))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == '/') {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|_| self.err("expected integer exponent"))
    }

    fn parse(mut self) -> Result<LaurentPoly<Rational>> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some('+') if !first => self.pos += 1,
                Some('-') => {
                    self.pos += 1;
                    sign = -sign;
                }
                Some(_) if first => {}
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            first = false;
            let number = self.number();
            let coeff = match &number {
                Some(n) => parse_rational(n).map_err(|_| self.err("invalid coefficient"))?,
                None => Rational::one(),
            };
            let starred = number.is_some() && self.peek() == Some('*');
            if starred {
                self.pos += 1;
            }
            let exp = if self.peek() == Some(GAMMA_SYMBOL) {
                self.pos += 1;
                self.exponent()?
            } else if number.is_some() && !starred {
                0
            } else {
                return Err(self.err("expected a term"));
            };
            terms.push((exp, sign * coeff));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rational};
    use proptest::prelude::*;

    type P = LaurentPoly<Rational>;

    fn p(s: &str) -> P {
        P::parse(s).unwrap()
    }

    #[test]
    fn ring_ops() {
        assert_eq!(p("g - 1") * p("g - 4"), p("g^2 - 5*g + 4"));
        assert_eq!(p("3*g^-1").invert_unit().unwrap(), p("1/3*g"));
        assert_eq!(p("g + g^-1") + p("-g^-1"), p("g"));
        assert_eq!((p("g + g^-1") + p("-g^-1")).num_terms(), 1);
        assert!(matches!(p("g + 1").invert_unit(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn normalization() {
        assert_eq!(p("-3 + 12*g^-1").normalize_associate(), p("g - 4"));
        assert_eq!(P::zero().normalize_associate(), P::zero());
        assert_eq!(p("g - 4").normalize_associate(), p("g - 4"));
    }

    #[test]
    fn gcds() {
        assert_eq!(P::gcd_many(&[p("g^2 - 1"), p("g^2 - 3*g + 2")]), p("g - 1"));
        let f = p("2*g^3 - 6*g^-1");
        assert_eq!(P::gcd_many(&[P::zero(), f.clone()]), f.normalize_associate());
        let minors = [p("3*g - 12"), p("g^2 - 5*g + 4"), p("9*g - 36")];
        assert_eq!(P::gcd_many(&minors), p("g - 4"));
        assert_eq!(P::gcd_many(&[]), P::zero());
        assert_eq!(P::gcd_many(&[P::zero(), P::zero()]), P::zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("g - 4").eval_at(&int(4)).unwrap(), int(0));
        assert_eq!(p("g + g^-1").eval_at(&int(2)).unwrap(), rational(5, 2));
        assert_eq!(p("g^2 - 9").eval_at(&int(3)).unwrap(), int(0));
        assert!(matches!(p("g^-1").eval_at(&int(0)), Err(Error::DivisionByZero)));
        assert_eq!(p("g + 2").eval_at(&int(0)).unwrap(), int(2));
    }

    #[test]
    fn text_form() {
        for s in ["g^2 - 5*g + 4", "3*g^-1", "-g^3 + 1/2*g - 7/3", "0", "g"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("4 - 5*g + g^2"), p("g^2 - 5*g + 4"));
        assert!(P::parse("g^").is_err());
        assert!(P::parse("2 3").is_err());
        assert!(P::parse("").is_err());
    }

    #[test]
    fn division() {
        assert_eq!(p("g^2 - 9").div_exact(&p("g + 3")).unwrap(), p("g - 3"));
        assert_eq!(p("g - 9*g^-1").div_exact(&p("g - 3")).unwrap(), p("1 + 3*g^-1"));
        assert!(p("g^2 + 1").div_exact(&p("g - 1")).is_none());
        assert!(p("g^2 - 1").rem_polynomial(&p("g - 1")).is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(-4i64..5, 1..5).prop_flat_map(|c| {
            (-2i64..3).prop_map(move |low| P::from_dense(low, c.iter().map(|&x| int(x)).collect()))
        })
    }

    proptest! {
        #[test]
        fn normalize_constant_on_associates(f in arb_poly(), c in 1i64..7, neg in any::<bool>(), k in -3i64..4) {
            let c = if neg { -int(c) } else { int(c) };
            let u = P::monomial(c, k);
            let n = f.normalize_associate();
            prop_assert_eq!((u * f).normalize_associate(), n.clone());
            prop_assert_eq!(n.normalize_associate(), n);
        }

        #[test]
        fn gcd_divides_and_is_symmetric(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let a = f.clone() * h.clone();
            let b = g.clone() * h.clone();
            let d = P::gcd_many(&[a.clone(), b.clone()]);
            prop_assert_eq!(d.clone(), P::gcd_many(&[b.clone(), a.clone()]));
            if !d.is_zero() {
                prop_assert!(a.div_exact(&d).is_some());
                prop_assert!(b.div_exact(&d).is_some());
                if !h.is_zero() {
                    prop_assert!(d.div_exact(&h.normalize_associate()).is_some());
                }
            }
        }

        #[test]
        fn eval_is_ring_homomorphism(f in arb_poly(), g in arb_poly(), ai in 0usize..6) {
            let a = [int(1), int(-1), int(2), int(-2), int(4), rational(1, 4)][ai].clone();
            let ef = f.eval_at(&a).unwrap();
            let eg = g.eval_at(&a).unwrap();
            prop_assert_eq!((f.clone() * g.clone()).eval_at(&a).unwrap(), ef.clone() * eg.clone());
            prop_assert_eq!((f + g).eval_at(&a).unwrap(), ef + eg);
        }
    }
}
