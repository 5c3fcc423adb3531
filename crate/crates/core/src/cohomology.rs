//! First cohomology of the local system `φ̃|_{γ=a}`: dimensions of Z¹, B¹
//! and H¹, coboundary witnesses, the cocycle carried by the symmetric
//! square of a two-dimensional extension, and an audit of the implications
//! between zeros of Δ and nonvanishing of H¹.

use crate::algebra::{Field, LaurentPoly, Rational};
use crate::error::{Error, Result};
use crate::extensions::{extend_local_system, verify_relators, CrossedHom};
use crate::fitting::{fitting_delta, specialize_matrix, zero_check};
use crate::fox::{alexander_matrix, tensor_with_alpha, MatrixRep, Representation};
use crate::matrix::Matrix;
use crate::presentation::Presentation;

/// The stacked `(ρ(g_i) − I)`, an `nℓ × ℓ` matrix whose rank is dim B¹ and
/// whose kernel is the space of simultaneously fixed vectors.
pub fn coboundary_matrix<S: Field>(rho: &MatrixRep<S>) -> Matrix<S> {
    let id = Matrix::identity(rho.dim());
    let blocks: Vec<Matrix<S>> = rho.images().iter().map(|m| m.sub(&id)).collect();
    Matrix::vstack(&blocks, rho.dim())
}

/// `β_v(g_i) = ρ(g_i)v − v`.
pub fn coboundary_of<S: Field>(rho: &MatrixRep<S>, v: &[S]) -> CrossedHom<S> {
    CrossedHom::from_stacked(&coboundary_matrix(rho).mul_vec(v), rho.dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremStatus {
    /// Hypotheses held and the conclusion was checked.
    Confirmed,
    /// The hypothesis about `a` or H¹ did not hold.
    NotTriggered,
    /// A standing hypothesis (no common fixed vector) fails.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// H¹ ≠ 0 although `a` is not a zero; allowed only because the local
    /// system has a nonzero fixed vector.
    HypothesisViolated,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::HypothesisViolated => "hypothesis violated, not applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Audit {
    /// A zero of Δ_ℓ forces H¹ ≠ 0.
    pub zero_implies_h1: TheoremStatus,
    /// Without fixed vectors, H¹ ≠ 0 forces a zero of Δ_ℓ.
    pub h1_implies_zero: TheoremStatus,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyReport<S> {
    pub z1_dim: usize,
    pub b1_dim: usize,
    pub h1_dim: usize,
    pub fixed_space_dim: usize,
    /// Δ_ℓ of the twisted Alexander matrix, normalized.
    pub delta: LaurentPoly<Rational>,
    pub delta_value_at_a: S,
    pub delta_zero: bool,
    pub audit: Audit,
    /// Basis of the common fixed space.
    pub fixed_basis: Vec<Vec<S>>,
    /// Basis of Z¹ as crossed homs.
    pub cocycle_basis: Vec<CrossedHom<S>>,
    pub precision_limited: bool,
}

fn audit(delta_zero: bool, h1_dim: usize, fixed_space_dim: usize) -> Result<Audit> {
    let zero_implies_h1 = if delta_zero {
        if h1_dim == 0 {
            return Err(Error::TheoremViolation("a is a zero of Δ but H¹ = 0".into()));
        }
        TheoremStatus::Confirmed
    } else {
        TheoremStatus::NotTriggered
    };
    let h1_implies_zero = if fixed_space_dim != 0 {
        TheoremStatus::NotApplicable
    } else if h1_dim == 0 {
        TheoremStatus::NotTriggered
    } else if delta_zero {
        TheoremStatus::Confirmed
    } else {
        return Err(Error::TheoremViolation("H¹ ≠ 0 without fixed vectors but a is not a zero of Δ".into()));
    };
    let verdict = if h1_implies_zero == TheoremStatus::NotApplicable && h1_dim > 0 && !delta_zero {
        Verdict::HypothesisViolated
    } else {
        Verdict::Consistent
    };
    Ok(Audit { zero_implies_h1, h1_implies_zero, verdict })
}

pub fn h1_report<S: Field>(pres: &Presentation, phi: &Representation, a: &S) -> Result<CohomologyReport<S>> {
    let tensor = tensor_with_alpha(phi, pres)?;
    let q = alexander_matrix(pres, &tensor, false)?;
    let l = phi.dim();
    let z = specialize_matrix(&q, a)?.rank_nullspace();
    let rho = tensor.specialize(a)?;
    let c = coboundary_matrix(&rho).rank_nullspace();
    let z1_dim = z.basis.len();
    let b1_dim = c.rank;
    if b1_dim > z1_dim {
        return Err(Error::InternalInconsistency(format!("dim B¹ = {b1_dim} exceeds dim Z¹ = {z1_dim}")));
    }
    let h1_dim = z1_dim - b1_dim;
    let delta = fitting_delta(&q, l, pres.prime)?;
    let check = zero_check(&q, &delta, a)?;
    let delta_value_at_a = delta.delta.eval_embedded(a)?;
    let fixed_space_dim = l - b1_dim;
    let audit = audit(check.by_eval, h1_dim, fixed_space_dim)?;
    Ok(CohomologyReport {
        z1_dim,
        b1_dim,
        h1_dim,
        fixed_space_dim,
        delta: delta.delta,
        delta_value_at_a,
        delta_zero: check.by_eval,
        audit,
        fixed_basis: c.basis,
        cocycle_basis: z.basis.iter().map(|b| CrossedHom::from_stacked(b, l)).collect(),
        precision_limited: z.precision_limited || c.precision_limited || check.precision_limited,
    })
}

/// The audit alone.
pub fn theorem_audit<S: Field>(pres: &Presentation, phi: &Representation, a: &S) -> Result<Audit> {
    Ok(h1_report(pres, phi, a)?.audit)
}

/// Some `v` with `β = β_v`, or `None` if `β` is not a coboundary. Fails with
/// `NotACocycle` if `β` does not satisfy the relators of `pres` over `rho`.
pub fn is_coboundary<S: Field>(pres: &Presentation, beta: &CrossedHom<S>, rho: &MatrixRep<S>) -> Result<Option<Vec<S>>> {
    let ext = extend_local_system(rho, beta)?;
    let report = verify_relators(pres, &ext)?;
    if let Some(bad) = report.failures().next() {
        return Err(Error::NotACocycle(format!("relator {} is not respected", bad.relator)));
    }
    Ok(coboundary_matrix(rho).solve(&beta.stacked()))
}

/// `Sym²` of a 2×2 matrix in the basis `e₁², e₁e₂, e₂²`.
pub fn symmetric_square<S: Field>(m: &Matrix<S>) -> Matrix<S> {
    let (a, b, c, d) = (m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone());
    let two = a.embed(&Rational::from_integer(2.into()));
    Matrix::from_rows(vec![
        vec![a.clone() * a.clone(), a.clone() * b.clone(), b.clone() * b.clone()],
        vec![
            two.clone() * a.clone() * c.clone(),
            a.clone() * d.clone() + b.clone() * c.clone(),
            two * b.clone() * d.clone(),
        ],
        vec![c.clone() * c.clone(), c * d.clone(), d.clone() * d],
    ])
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymSquare<S> {
    pub rho3: MatrixRep<S>,
    /// The upper-left 2×2 corner, the local system of the cocycle.
    pub local: MatrixRep<S>,
    pub beta: CrossedHom<S>,
    /// `β` is a coboundary.
    pub trivial: bool,
    pub witness: Option<Vec<S>>,
}

/// Applies `Sym²` to a two-dimensional extension `g ↦ [[x, y], [0, 1]]`;
/// the result is again block upper-triangular with last column
/// `(y², 2y, 1)`, and the cocycle is its top part.
pub fn symmetric_square_cocycle<S: Field>(pres: &Presentation, ext2: &MatrixRep<S>) -> Result<SymSquare<S>> {
    if ext2.dim() != 2 {
        return Err(Error::DimensionMismatch("symmetric square needs a 2-dimensional extension".into()));
    }
    for m in ext2.images() {
        if !m[(1, 0)].is_zero() || !m[(1, 1)].is_one() {
            return Err(Error::DimensionMismatch("extension images must have bottom row (0, 1)".into()));
        }
    }
    let images: Vec<Matrix<S>> = ext2.images().iter().map(symmetric_square).collect();
    let inverses: Vec<Matrix<S>> =
        (0..ext2.num_generators()).map(|i| symmetric_square(ext2.inverse_image(i))).collect();
    let rho3 = MatrixRep::from_parts(3, images.clone(), inverses.clone())?;
    let local = MatrixRep::from_parts(
        2,
        images.iter().map(|m| m.block(0, 0, 2, 2)).collect(),
        inverses.iter().map(|m| m.block(0, 0, 2, 2)).collect(),
    )?;
    let beta = CrossedHom::new(images.iter().map(|m| vec![m[(0, 2)].clone(), m[(1, 2)].clone()]).collect());
    let witness = is_coboundary(pres, &beta, &local)?;
    Ok(SymSquare { rho3, local, beta, trivial: witness.is_some(), witness })
}
