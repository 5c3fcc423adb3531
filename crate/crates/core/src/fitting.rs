//! Determinants over `Q[γ, γ⁻¹]`, Fitting-ideal GCDs Δ_d of an Alexander
//! matrix, rank after substituting `γ = a`, and the zero test that
//! cross-checks the two.

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{valuation, Field, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::fox::{alexander_matrix, tensor_with_alpha, Representation};
use crate::matrix::Matrix;
use crate::presentation::Presentation;

type Poly = LaurentPoly<Rational>;

/// Minors evaluated per parallel batch.
const BATCH: usize = 512;
/// Refuse to enumerate more minors than this.
pub const MAX_MINORS: u128 = 20_000_000;

/// Determinant of a square Laurent-polynomial matrix. The lowest γ power
/// of each row is factored out first so that elimination runs in `Q[γ]`.
pub fn det_laurent(m: &Matrix<Poly>) -> Poly {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let mut shift = 0i64;
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let row = m.row(i);
        let Some(low) = row.iter().filter_map(Poly::min_exp).min() else {
            return Poly::zero();
        };
        shift += low;
        rows.push(row.iter().map(|f| f.shift(-low)).collect());
    }
    Matrix::from_rows(rows).det_bareiss().shift(shift)
}

/// p-adic valuation of the rational content of a nonzero polynomial.
pub fn content_valuation(f: &Poly, p: u64) -> Option<i64> {
    f.terms().filter_map(|(_, c)| valuation(c, p)).min()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuContent {
    Value(i64),
    /// Enumeration stopped early or no minor was nonzero.
    NotComputed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FittingResult {
    pub d: usize,
    /// Normalized: monic polynomial with nonzero constant term, or 0 or 1.
    pub delta: Poly,
    /// Smallest p-adic valuation of the content of a nonzero minor.
    pub mu_content: MuContent,
    /// Number of minors actually evaluated.
    pub minor_count: u64,
    /// Size `nℓ − d` of the minors.
    pub minor_size: i64,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Δ_d: GCD of the `(nℓ − d)`-minors of `q`, where `nℓ = q.cols()`.
pub fn fitting_delta(q: &Matrix<Poly>, d: usize, prime: u64) -> Result<FittingResult> {
    let r = q.cols() as i64 - d as i64;
    if r <= 0 {
        return Ok(FittingResult {
            d,
            delta: Poly::one(),
            mu_content: MuContent::Value(0),
            minor_count: 0,
            minor_size: r,
        });
    }
    let r = r as usize;
    if r > q.rows() {
        return Ok(FittingResult {
            d,
            delta: Poly::zero(),
            mu_content: MuContent::NotComputed,
            minor_count: 0,
            minor_size: r as i64,
        });
    }
    let total = binomial(q.rows(), r).saturating_mul(binomial(q.cols(), r));
    if total > MAX_MINORS {
        return Err(Error::TooLarge(format!("{total} minors of size {r}")));
    }
    let entries_integral = q
        .entries()
        .iter()
        .all(|f| content_valuation(f, prime).is_none_or(|v| v >= 0));

    let row_sets: Vec<Vec<usize>> = (0..q.rows()).combinations(r).collect();
    let col_sets: Vec<Vec<usize>> = (0..q.cols()).combinations(r).collect();
    let mut pairs = row_sets.iter().cartesian_product(col_sets.iter());

    let mut acc = Poly::zero();
    let mut mu: Option<i64> = None;
    let mut count = 0u64;
    loop {
        let batch: Vec<_> = pairs.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let dets: Vec<Poly> = batch
            .par_iter()
            .map(|(rs, cs)| det_laurent(&q.submatrix(rs, cs)))
            .collect();
        for det in &dets {
            count += 1;
            if det.is_zero() {
                continue;
            }
            if let Some(v) = content_valuation(det, prime) {
                mu = Some(mu.map_or(v, |m| m.min(v)));
            }
            acc = acc.gcd(det);
        }
        // μ cannot drop below 0 when every entry is p-integral
        if acc.is_one() && entries_integral && mu == Some(0) {
            break;
        }
    }
    let complete = count as u128 == total;
    let mu_content = match mu {
        Some(v) if complete || (entries_integral && v == 0) => MuContent::Value(v),
        _ => MuContent::NotComputed,
    };
    Ok(FittingResult {
        d,
        delta: acc.normalize_associate(),
        mu_content,
        minor_count: count,
        minor_size: r as i64,
    })
}

/// `q` with `γ = a` substituted.
pub fn specialize_matrix<S: Field>(q: &Matrix<Poly>, a: &S) -> Result<Matrix<S>> {
    if a.is_certain_zero() {
        return Err(Error::DivisionByZero);
    }
    q.try_map(|f| f.eval_embedded(a))
}

pub fn rank_at<S: Field>(q: &Matrix<Poly>, a: &S) -> Result<usize> {
    Ok(specialize_matrix(q, a)?.rank())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCheck {
    /// `Δ_d(a) = 0`.
    pub by_eval: bool,
    /// `rank Q|_{γ=a} < nℓ − d`.
    pub by_rank: bool,
    pub rank: usize,
    /// Set for inexact scalars when a pivot decision hit the precision floor.
    pub precision_limited: bool,
}

impl ZeroCheck {
    pub fn is_zero(&self) -> bool {
        self.by_eval
    }
}

/// Decides whether `a` is a zero of `delta` (which must be Δ_d of `q`) by
/// evaluation and by rank. Over an exact field a disagreement is an
/// `InternalInconsistency`.
pub fn zero_check<S: Field>(q: &Matrix<Poly>, delta: &FittingResult, a: &S) -> Result<ZeroCheck> {
    let spec = specialize_matrix(q, a)?;
    let rn = spec.rank_nullspace();
    let by_rank = (rn.rank as i64) < delta.minor_size;
    let by_eval = delta.delta.eval_embedded(a)?.is_zero();
    if S::EXACT && by_rank != by_eval {
        return Err(Error::InternalInconsistency(format!(
            "Δ_{} vanishes: {by_eval}, rank {} < {}: {by_rank}",
            delta.d, rn.rank, delta.minor_size
        )));
    }
    Ok(ZeroCheck { by_eval, by_rank, rank: rn.rank, precision_limited: rn.precision_limited })
}

/// Computes Δ_d and runs [`zero_check`].
pub fn is_zero_of_delta<S: Field>(q: &Matrix<Poly>, d: usize, prime: u64, a: &S) -> Result<bool> {
    let delta = fitting_delta(q, d, prime)?;
    Ok(zero_check(q, &delta, a)?.is_zero())
}

/// Δ_d of the Iwasawa module, i.e. Δ_{d+1} of the Alexander matrix for the
/// trivial one-dimensional representation.
pub fn iwasawa_delta(pres: &Presentation, d: usize) -> Result<FittingResult> {
    pres.require_valid()?;
    let rep = tensor_with_alpha(&Representation::trivial(pres.num_generators()), pres)?;
    let q = alexander_matrix(pres, &rep, false)?;
    fitting_delta(&q, d + 1, pres.prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rational};
    use crate::algebra::PAdic;
    use proptest::prelude::*;

    fn poly(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn pm(rows: &[&[&str]]) -> Matrix<Poly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect())
    }

    fn first_example() -> Matrix<Poly> {
        pm(&[
            &["-9", "9", "0"],
            &["3", "-3", "0"],
            &["g - 1", "1 - g", "0"],
            &["7 - g", "-3", "g - 4"],
        ])
    }

    #[test]
    fn determinants() {
        assert_eq!(det_laurent(&pm(&[&["g - 1", "1"], &["0", "g - 4"]])), poly("g^2 - 5*g + 4"));
        assert!(det_laurent(&pm(&[&["g^-1", "1"], &["1", "g"]])).is_zero());
        assert_eq!(det_laurent(&pm(&[&["1", "2"], &["3", "4"]])), poly("-2"));
        assert_eq!(det_laurent(&pm(&[&["g^-2", "0"], &["0", "3*g"]])), poly("3*g^-1"));
    }

    #[test]
    fn deltas_of_first_example() {
        let q = first_example();
        let d1 = fitting_delta(&q, 1, 3).unwrap();
        assert_eq!(d1.delta, poly("g - 4"));
        assert_eq!(d1.mu_content, MuContent::Value(0));
        assert!(fitting_delta(&q, 0, 3).unwrap().delta.is_zero());
        let d2 = fitting_delta(&q, 2, 3).unwrap();
        assert!(d2.delta.is_one());
        assert_eq!(d2.mu_content, MuContent::Value(0));
        assert!(fitting_delta(&q, 3, 3).unwrap().delta.is_one());
        let wide = Matrix::<Poly>::zeros(1, 4);
        assert!(fitting_delta(&wide, 1, 3).unwrap().delta.is_zero());
    }

    #[test]
    fn rank_and_zero_test() {
        let q = first_example();
        assert_eq!(rank_at(&q, &int(4)).unwrap(), 1);
        assert_eq!(rank_at(&q, &int(2)).unwrap(), 2);
        assert!(is_zero_of_delta(&q, 1, 3, &int(4)).unwrap());
        assert!(!is_zero_of_delta(&q, 1, 3, &int(2)).unwrap());
        for a in [int(1), int(4), rational(1, 4), int(-7)] {
            assert!(!is_zero_of_delta(&q, 2, 3, &a).unwrap());
        }
        assert!(matches!(rank_at(&q, &int(0)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn padic_zero_test() {
        let q = first_example();
        let delta = fitting_delta(&q, 1, 3).unwrap();
        let a = PAdic::from_rational(&int(4), 3, 6);
        let check = zero_check(&q, &delta, &a).unwrap();
        assert!(check.by_eval && check.by_rank);
    }

    #[test]
    fn inconsistent_delta_is_trapped() {
        let q = first_example();
        let mut wrong = fitting_delta(&q, 1, 3).unwrap();
        wrong.delta = poly("g - 2");
        assert!(matches!(zero_check(&q, &wrong, &int(4)), Err(Error::InternalInconsistency(_))));
    }

    #[test]
    fn mu_content_detects_p_power() {
        let q = pm(&[&["3*g - 3"], &["9"]]);
        let r = fitting_delta(&q, 0, 3).unwrap();
        assert!(r.delta.is_one());
        assert_eq!(r.mu_content, MuContent::Value(1));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        (prop::collection::vec(-3i64..4, 3), -1i64..2)
            .prop_map(|(c, low)| Poly::from_dense(low, c.into_iter().map(int).collect()))
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix<Poly>> {
        prop::collection::vec(arb_poly(), r * c).prop_map(move |v| Matrix::new(r, c, v))
    }

    fn arb_point() -> impl Strategy<Value = Rational> {
        prop::sample::select(vec![int(1), int(-1), int(2), int(-2), int(4), rational(1, 4)])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn evaluation_commutes_with_minors(m in arb_matrix(3, 4), a in arb_point()) {
            for cols in (0..4).combinations(3) {
                let sub = m.submatrix(&[0, 1, 2], &cols);
                let lhs = det_laurent(&sub).eval_at(&a).unwrap();
                let rhs = specialize_matrix(&sub, &a).unwrap().det_bareiss();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn divisibility_chain(m in arb_matrix(3, 3)) {
            let ds: Vec<Poly> = (0..4).map(|d| fitting_delta(&m, d, 3).unwrap().delta).collect();
            for d in 0..3 {
                if !ds[d].is_zero() && !ds[d + 1].is_zero() {
                    prop_assert!(ds[d].div_exact(&ds[d + 1]).is_some());
                }
            }
        }

        #[test]
        fn rank_agrees_with_evaluation(m in arb_matrix(3, 3), a in arb_point(), d in 0usize..3) {
            let delta = fitting_delta(&m, d, 3).unwrap();
            let check = zero_check(&m, &delta, &a).unwrap();
            prop_assert_eq!(check.by_eval, check.by_rank);
        }
    }
}
