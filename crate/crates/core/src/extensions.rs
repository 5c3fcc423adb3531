//! Crossed homomorphisms at `γ = a`, the block upper-triangular extension
//! they define, and verification of the relators on that extension.

use rayon::prelude::*;

use crate::algebra::{Field, Ring};
use crate::error::{Error, Result};
use crate::fitting::{fitting_delta, specialize_matrix, zero_check};
use crate::fox::{alexander_matrix, tensor_with_alpha, MatrixRep, Representation};
use crate::matrix::Matrix;
use crate::presentation::{Presentation, Word};

/// A crossed homomorphism, given by its value on each generator.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossedHom<S> {
    pub values: Vec<Vec<S>>,
}

impl<S: Ring> CrossedHom<S> {
    pub fn new(values: Vec<Vec<S>>) -> Self {
        CrossedHom { values }
    }

    pub fn zero(n: usize, dim: usize) -> Self {
        CrossedHom { values: vec![vec![S::zero(); dim]; n] }
    }

    /// Splits `b ∈ S^{nℓ}` into `n` vectors of length `ℓ`.
    pub fn from_stacked(b: &[S], dim: usize) -> Self {
        CrossedHom { values: b.chunks(dim).map(<[S]>::to_vec).collect() }
    }

    pub fn stacked(&self) -> Vec<S> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn dim(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }

    pub fn num_generators(&self) -> usize {
        self.values.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(u, v)| u.iter().zip(v).map(|(x, y)| x.clone() + y.clone()).collect())
            .collect();
        CrossedHom { values }
    }

    pub fn scale(&self, c: &S) -> Self {
        let values = self
            .values
            .iter()
            .map(|u| u.iter().map(|x| c.clone() * x.clone()).collect())
            .collect();
        CrossedHom { values }
    }
}

/// The space of crossed homomorphisms at `γ = a`: the nullspace of the
/// specialized Alexander matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleSpace<S> {
    pub rank: usize,
    pub basis: Vec<CrossedHom<S>>,
    pub precision_limited: bool,
}

impl<S> CocycleSpace<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn cocycle_space<S: Field>(pres: &Presentation, phi: &Representation, a: &S) -> Result<CocycleSpace<S>> {
    let q = alexander_matrix(pres, &tensor_with_alpha(phi, pres)?, false)?;
    let rn = specialize_matrix(&q, a)?.rank_nullspace();
    Ok(CocycleSpace {
        rank: rn.rank,
        basis: rn.basis.iter().map(|b| CrossedHom::from_stacked(b, phi.dim())).collect(),
        precision_limited: rn.precision_limited,
    })
}

/// `g_i ↦ [[a^{e_i}·φ(g_i), β(g_i)], [0, 1]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionCandidate<S> {
    pub a: S,
    pub beta: CrossedHom<S>,
    /// The `ℓ`-dimensional local system `φ̃|_{γ=a}`.
    pub base: MatrixRep<S>,
    /// The `(ℓ+1)`-dimensional block representation.
    pub rep: MatrixRep<S>,
}

impl<S: Field> ExtensionCandidate<S> {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn image(&self, i: usize) -> &Matrix<S> {
        self.rep.image(i)
    }
}

/// Assembles block matrices from a local system and a crossed hom. No
/// relator is checked here.
pub fn extend_local_system<S: Field>(base: &MatrixRep<S>, beta: &CrossedHom<S>) -> Result<MatrixRep<S>> {
    let l = base.dim();
    if beta.num_generators() != base.num_generators() || beta.values.iter().any(|v| v.len() != l) {
        return Err(Error::DimensionMismatch(format!(
            "crossed hom must give {} vectors of length {l}",
            base.num_generators()
        )));
    }
    let mut images = Vec::with_capacity(beta.num_generators());
    let mut inverses = Vec::with_capacity(beta.num_generators());
    for (i, b) in beta.values.iter().enumerate() {
        let m = base.image(i);
        let minv = base.inverse_image(i);
        let col = Matrix::column(b.clone());
        let mut img = Matrix::identity(l + 1);
        img.set_block(0, 0, m);
        img.set_block(0, l, &col);
        let mut inv = Matrix::identity(l + 1);
        inv.set_block(0, 0, minv);
        inv.set_block(0, l, &minv.mul(&col).neg());
        images.push(img);
        inverses.push(inv);
    }
    MatrixRep::from_parts(l + 1, images, inverses)
}

pub fn build_extension<S: Field>(
    pres: &Presentation,
    phi: &Representation,
    a: &S,
    beta: &CrossedHom<S>,
) -> Result<ExtensionCandidate<S>> {
    if beta.dim() != phi.dim() {
        return Err(Error::DimensionMismatch(format!(
            "crossed hom has dimension {}, representation {}",
            beta.dim(),
            phi.dim()
        )));
    }
    let base = tensor_with_alpha(phi, pres)?.specialize(a)?;
    let rep = extend_local_system(&base, beta)?;
    Ok(ExtensionCandidate { a: a.clone(), beta: beta.clone(), base, rep })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelatorCheck<S> {
    /// 1-based relator number.
    pub relator: usize,
    pub passed: bool,
    /// Image of `L·R⁻¹`.
    pub image: Matrix<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport<S> {
    pub checks: Vec<RelatorCheck<S>>,
}

impl<S> VerifyReport<S> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelatorCheck<S>> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Evaluates every relator on `rep` and compares with the identity.
pub fn verify_relators<S: Field>(pres: &Presentation, rep: &MatrixRep<S>) -> Result<VerifyReport<S>> {
    let checks = pres
        .relators
        .par_iter()
        .enumerate()
        .map(|(j, r)| {
            let image = rep.evaluate_word(&r.word()?)?;
            Ok(RelatorCheck { relator: j + 1, passed: image.is_identity(), image })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { checks })
}

pub fn verify_factors<S: Field>(pres: &Presentation, cand: &ExtensionCandidate<S>) -> Result<VerifyReport<S>> {
    verify_relators(pres, &cand.rep)
}

/// `β(w)` from the generator values, using `β(uv) = β(u) + ρ(u)β(v)`.
pub fn evaluate_cocycle<S: Field>(beta: &CrossedHom<S>, rho: &MatrixRep<S>, w: &Word) -> Result<Vec<S>> {
    let grad = rho.fox_gradient(w)?;
    let mut out = vec![S::zero(); rho.dim()];
    for (block, b) in grad.iter().zip(&beta.values) {
        for (o, x) in out.iter_mut().zip(block.mul_vec(b)) {
            *o = o.clone() + x;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountCriterion {
    /// Dimension of the crossed-hom space.
    pub dim: usize,
    /// `dim ≥ k`.
    pub meets_k: bool,
    /// `a` is a zero of `Δ_{k−1}`.
    pub delta_zero: bool,
}

/// Counts independent extensions to dimension `k = ℓ + 1` and checks that
/// there are at least `k` exactly when `a` is a zero of `Δ_{k−1}`.
pub fn extension_count_criterion<S: Field>(
    pres: &Presentation,
    phi: &Representation,
    a: &S,
    k: usize,
) -> Result<CountCriterion> {
    if k != phi.dim() + 1 {
        return Err(Error::DimensionMismatch(format!("k must be {}", phi.dim() + 1)));
    }
    let q = alexander_matrix(pres, &tensor_with_alpha(phi, pres)?, false)?;
    let delta = fitting_delta(&q, k - 1, pres.prime)?;
    let check = zero_check(&q, &delta, a)?;
    let dim = q.cols() - check.rank;
    let meets_k = dim >= k;
    if S::EXACT && meets_k != check.by_eval {
        return Err(Error::InternalInconsistency(format!(
            "{dim} independent crossed homs but Δ_{} vanishing is {}",
            k - 1,
            check.by_eval
        )));
    }
    Ok(CountCriterion { dim, meets_k, delta_zero: check.by_eval })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rational};
    use crate::algebra::Rational;
    use crate::presentation::parse_presentation;
    use num_traits::Zero;

    fn eg41() -> Presentation {
        parse_presentation(include_str!("../corpus/eg41.pres")).unwrap()
    }

    fn eg44_phi(p: &Presentation) -> Representation {
        Representation::parse(include_str!("../corpus/eg44.rep"), p).unwrap()
    }

    fn ints(v: &[&[i64]]) -> CrossedHom<Rational> {
        CrossedHom::new(v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn first_example_cocycles() {
        let p = eg41();
        let phi = Representation::trivial(3);
        let s = cocycle_space(&p, &phi, &int(4)).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis, vec![ints(&[&[1], &[1], &[0]]), ints(&[&[0], &[0], &[1]])]);
        assert_eq!(cocycle_space(&p, &phi, &int(2)).unwrap().dim(), 1);
    }

    #[test]
    fn first_example_extensions() {
        let p = eg41();
        let phi = Representation::trivial(3);
        let good = build_extension(&p, &phi, &int(4), &ints(&[&[1], &[1], &[0]])).unwrap();
        assert_eq!(good.image(0), &qm(&[&[4, 1], &[0, 1]]));
        assert_eq!(good.image(1), &qm(&[&[4, 1], &[0, 1]]));
        assert_eq!(good.image(2), &qm(&[&[4, 0], &[0, 1]]));
        let report = verify_factors(&p, &good).unwrap();
        assert!(report.passed());
        assert_eq!(report.checks.len(), 4);

        let bad = build_extension(&p, &phi, &int(4), &ints(&[&[1], &[0], &[0]])).unwrap();
        let report = verify_factors(&p, &bad).unwrap();
        assert!(!report.checks[0].passed);
        assert_eq!(report.checks[0].image, qm(&[&[1, -9], &[0, 1]]));

        let zero = build_extension(&p, &phi, &int(4), &CrossedHom::zero(3, 1)).unwrap();
        assert_eq!(zero.image(2), &qm(&[&[4, 0], &[0, 1]]));
        assert!(verify_factors(&p, &zero).unwrap().passed());

        let empty = parse_presentation("prime 3\ngenerators g1").unwrap();
        let c = build_extension(&empty, &Representation::trivial(1), &int(7), &ints(&[&[5]])).unwrap();
        assert!(verify_factors(&empty, &c).unwrap().passed());
    }

    #[test]
    fn cocycle_values() {
        let p = eg41();
        let rho = tensor_with_alpha(&Representation::trivial(3), &p).unwrap().specialize(&int(4)).unwrap();
        let beta = ints(&[&[2], &[3], &[5]]);
        let w = p.parse_word("g1*g3").unwrap();
        assert_eq!(evaluate_cocycle(&beta, &rho, &w).unwrap(), vec![int(2 + 4 * 5)]);
        assert_eq!(evaluate_cocycle(&beta, &rho, &Word::identity()).unwrap(), vec![int(0)]);
        let w = p.parse_word("g1^-1").unwrap();
        assert_eq!(evaluate_cocycle(&beta, &rho, &w).unwrap(), vec![rational(-1, 2)]);
    }

    #[test]
    fn count_criterion() {
        let p = eg41();
        let phi = Representation::trivial(3);
        let c = extension_count_criterion(&p, &phi, &int(4), 2).unwrap();
        assert_eq!(c, CountCriterion { dim: 2, meets_k: true, delta_zero: true });
        let c = extension_count_criterion(&p, &phi, &int(2), 2).unwrap();
        assert_eq!(c, CountCriterion { dim: 1, meets_k: false, delta_zero: false });
        let c = extension_count_criterion(&p, &eg44_phi(&p), &int(1), 3).unwrap();
        assert_eq!(c, CountCriterion { dim: 3, meets_k: true, delta_zero: true });
        assert!(extension_count_criterion(&p, &phi, &int(4), 3).is_err());
    }

    #[test]
    fn fourth_example_at_one() {
        let p = eg41();
        let phi = eg44_phi(&p);
        let s = cocycle_space(&p, &phi, &int(1)).unwrap();
        assert_eq!(s.dim(), 3);
        for b in &s.basis {
            let v = &b.values;
            assert_eq!(v[0][0], v[1][0]);
            assert_eq!(v[0][1], v[1][1]);
            assert_eq!(v[1][1], v[2][1]);
            let cand = build_extension(&p, &phi, &int(1), b).unwrap();
            assert!(verify_factors(&p, &cand).unwrap().passed());
        }
        let sum = s.basis[0].add(&s.basis[2]).scale(&rational(2, 3));
        let cand = build_extension(&p, &phi, &int(1), &sum).unwrap();
        assert!(verify_factors(&p, &cand).unwrap().passed());
        assert!(s.basis.iter().all(|b| !b.stacked().iter().all(Zero::is_zero)));
    }
}
