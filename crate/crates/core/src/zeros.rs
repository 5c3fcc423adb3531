//! Zeros of a Laurent polynomial: exact rational roots, and roots in `Z_p`
//! modulo `p^N` by Newton lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::padic::{mod_inverse, prime_power};
use crate::algebra::scalar::int_valuation;
use crate::algebra::{unit_ball_check, valuation, LaurentPoly, Rational};
use crate::error::{Error, Result};

type Poly = LaurentPoly<Rational>;

/// Trial division bound used when enumerating divisors.
const TRIAL_BOUND: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroReport {
    pub prime: u64,
    pub precision: u32,
    /// Exact roots with multiplicity, ascending.
    pub rational_roots: Vec<(Rational, u32)>,
    /// Roots in `Z_p` as residues in `[0, p^precision)`, ascending.
    pub padic_roots: Vec<BigInt>,
    /// Residues mod p at which lifting could not be certified.
    pub obstructions: Vec<u64>,
    pub identically_zero: bool,
}

/// Integer coefficients `c_0..c_n` (ascending, `c_0 ≠ 0`, content 1,
/// `c_n > 0`) of the polynomial associated with `f`.
fn primitive_integer(f: &Poly) -> Vec<BigInt> {
    let (_, dense) = f.to_dense();
    let lcm = dense.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = dense.iter().map(|c| (c * Rational::from(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    for c in &mut ints {
        *c = &*c / &content * &sign;
    }
    ints
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn derivative_int(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Positive divisors of a nonzero integer.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_BOUND {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        let mut e = 0;
        while (&m % &bd).is_zero() {
            m /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += 1;
    }
    if m > BigInt::one() {
        let bound = BigInt::from(TRIAL_BOUND);
        let certified = &bound * &bound >= m || m.to_u64().is_some_and(is_prime_u64);
        if !certified {
            return Err(Error::TooLarge(format!("cannot factor coefficient {n}")));
        }
        factors.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let base = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            out.extend(base.iter().map(|x| x * &pk));
        }
    }
    out.sort();
    Ok(out)
}

fn linear_factor(r: &Rational) -> Poly {
    Poly::from_terms([(1, Rational::one()), (0, -r.clone())])
}

/// Rational roots with multiplicity, ascending.
pub fn rational_roots(f: &Poly) -> Result<Vec<(Rational, u32)>> {
    if f.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let coeffs = primitive_integer(f);
    if coeffs.len() == 1 {
        return Ok(Vec::new());
    }
    let lead = coeffs.last().expect("nonempty");
    let num_divs = divisors(&coeffs[0])?;
    let den_divs = divisors(lead)?;
    let mut candidates: Vec<Rational> = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            let q = Rational::new(a.clone(), b.clone());
            candidates.push(-q.clone());
            candidates.push(q);
        }
    }
    candidates.sort();
    candidates.dedup();
    let mut g = f.shift(-f.min_exp().expect("nonzero"));
    let mut out = Vec::new();
    for r in candidates {
        let mut mult = 0;
        while g.eval_at(&r)?.is_zero() {
            g = g.div_exact(&linear_factor(&r)).expect("root gives an exact factor");
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    Ok(out)
}

/// Residue of a p-integral rational modulo `m = p^N`.
fn residue(q: &Rational, m: &BigInt) -> BigInt {
    let inv = mod_inverse(&q.denom().mod_floor(m), m).expect("p-integral");
    (q.numer() * inv).mod_floor(m)
}

/// Newton iteration from `x` until the root is determined modulo `p^n`.
/// Requires `v(f(x)) > 2·v(f'(x))`.
fn newton_lift(coeffs: &[BigInt], x: BigInt, p: u64, n: u32) -> BigInt {
    let df = derivative_int(coeffs);
    let target = prime_power(p, i64::from(n));
    let mut x = x;
    for _ in 0..256 {
        let fx = eval_int(coeffs, &x);
        let Some(vf) = int_valuation(&fx, p) else { break };
        let dfx = eval_int(&df, &x);
        let vd = int_valuation(&dfx, p).expect("criterion keeps f'(x) nonzero");
        if vf - vd >= i64::from(n) {
            break;
        }
        let modulus = prime_power(p, i64::from(n) + 2 * vd + 2);
        let pv = prime_power(p, vd);
        let unit = mod_inverse(&(&dfx / &pv).mod_floor(&modulus), &modulus).expect("unit");
        let step = (&fx / &pv) * unit;
        x = (x - step).mod_floor(&modulus);
    }
    x.mod_floor(&target)
}

/// Roots of `f` in `Z_p` modulo `p^n`, plus residues mod p where lifting
/// could not be certified. p-integral rational roots are found exactly and
/// removed first; each remaining residue root `r` in `[0, p)` is lifted when
/// `v(f(r)) > 2·v(f'(r))` (always true for a simple root) and reported as an
/// obstruction otherwise. A lifted root `x` satisfies
/// `v(f(x)) ≥ n + v(f'(r))`.
pub fn hensel_roots(f: &Poly, p: u64, n: u32) -> Result<(Vec<BigInt>, Vec<u64>)> {
    if f.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let modulus = prime_power(p, i64::from(n));
    let mut roots = Vec::new();
    let mut rest = f.clone();
    for (r, mult) in rational_roots(f)? {
        if valuation(&r, p).is_none_or(|v| v >= 0) {
            roots.push(residue(&r, &modulus));
        }
        for _ in 0..mult {
            rest = rest.div_exact(&linear_factor(&r)).expect("exact factor");
        }
    }
    let coeffs = primitive_integer(&rest);
    let df = derivative_int(&coeffs);
    let mut obstructions = Vec::new();
    if coeffs.len() > 1 {
        let pb = BigInt::from(p);
        for r in 0..p {
            let x = BigInt::from(r);
            let fx = eval_int(&coeffs, &x);
            if !(&fx % &pb).is_zero() {
                continue;
            }
            let vf = int_valuation(&fx, p);
            let vd = int_valuation(&eval_int(&df, &x), p);
            let liftable = match (vf, vd) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(vf), Some(vd)) => vf > 2 * vd,
            };
            if liftable {
                roots.push(newton_lift(&coeffs, x, p, n));
            } else {
                obstructions.push(r);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok((roots, obstructions))
}

/// Rational and `Z_p` zeros of `f`. A zero polynomial yields an empty report
/// with `identically_zero` set.
pub fn find_zeros(f: &Poly, p: u64, precision: u32) -> Result<ZeroReport> {
    if f.is_zero() {
        return Ok(ZeroReport {
            prime: p,
            precision,
            rational_roots: Vec::new(),
            padic_roots: Vec::new(),
            obstructions: Vec::new(),
            identically_zero: true,
        });
    }
    let rational_roots = rational_roots(f)?;
    let (padic_roots, obstructions) = hensel_roots(f, p, precision)?;
    Ok(ZeroReport { prime: p, precision, rational_roots, padic_roots, obstructions, identically_zero: false })
}

/// Keeps the zeros with `|a − 1|_p < 1`: rational roots by valuation,
/// residues and obstructions congruent to 1 mod p.
pub fn filter_unit_ball(report: &ZeroReport) -> ZeroReport {
    let p = report.prime;
    let pb = BigInt::from(p);
    ZeroReport {
        rational_roots: report
            .rational_roots
            .iter()
            .filter(|(r, _)| unit_ball_check(r, p))
            .cloned()
            .collect(),
        padic_roots: report
            .padic_roots
            .iter()
            .filter(|r| (*r % &pb).is_one())
            .cloned()
            .collect(),
        obstructions: report.obstructions.iter().copied().filter(|&r| r == 1).collect(),
        ..report.clone()
    }
}
