//! Matrix representations of the free group, the twist by the degree map,
//! Fox derivatives evaluated under a representation, and the Alexander
//! matrix of a presentation.

use rayon::prelude::*;

use crate::algebra::scalar::parse_rational;
use crate::algebra::{format_rational, Field, LaurentPoly, Rational, Ring};
use crate::error::{Error, ParseError, Result};
use crate::matrix::Matrix;
use crate::presentation::{Presentation, Word};

/// A representation of the free group on `images.len()` generators, with
/// precomputed inverses of the generator images.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep<R> {
    dim: usize,
    images: Vec<Matrix<R>>,
    inverses: Vec<Matrix<R>>,
}

/// `φ ⊗ α`: images `γ^{e_i}·φ(g_i)` over `Q[γ, γ⁻¹]`.
pub type TensorRep = MatrixRep<LaurentPoly<Rational>>;

impl<R: Ring> MatrixRep<R> {
    /// Trusts the caller that `inverses[i]` inverts `images[i]`.
    pub fn from_parts(dim: usize, images: Vec<Matrix<R>>, inverses: Vec<Matrix<R>>) -> Result<Self> {
        if images.len() != inverses.len() {
            return Err(Error::DimensionMismatch("images and inverses differ in number".into()));
        }
        for m in images.iter().chain(&inverses) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "expected {dim}x{dim} generator images, found {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(MatrixRep { dim, images, inverses })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Matrix<R> {
        &self.images[i]
    }

    pub fn inverse_image(&self, i: usize) -> &Matrix<R> {
        &self.inverses[i]
    }

    pub fn images(&self) -> &[Matrix<R>] {
        &self.images
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(g) if g >= self.images.len() => Err(Error::DimensionMismatch(format!(
                "word uses generator {} but the representation has {}",
                g + 1,
                self.images.len()
            ))),
            _ => Ok(()),
        }
    }

    /// `R(g_i)^e`.
    pub fn syllable_image(&self, i: usize, e: i64) -> Matrix<R> {
        if e >= 0 {
            self.images[i].pow(e as u64)
        } else {
            self.inverses[i].pow(e.unsigned_abs())
        }
    }

    pub fn evaluate_word(&self, w: &Word) -> Result<Matrix<R>> {
        self.check_word(w)?;
        let mut acc = Matrix::identity(self.dim);
        for &(g, e) in w.syllables() {
            acc = acc.mul(&self.syllable_image(g, e));
        }
        Ok(acc)
    }

    /// Images of `∂w/∂g_i` for every generator, in one left-to-right scan:
    /// a syllable `g^e` after prefix `u` adds `R(u)·Σ(R(g), e)` to slot `g`.
    pub fn fox_gradient(&self, w: &Word) -> Result<Vec<Matrix<R>>> {
        self.check_word(w)?;
        let mut grad = vec![Matrix::zeros(self.dim, self.dim); self.images.len()];
        let mut prefix = Matrix::identity(self.dim);
        for &(g, e) in w.syllables() {
            let (sum, power) = syllable_parts(&self.images[g], &self.inverses[g], e);
            grad[g] = grad[g].add(&prefix.mul(&sum));
            prefix = prefix.mul(&power);
        }
        Ok(grad)
    }

    pub fn fox_derivative_matrix(&self, w: &Word, i: usize) -> Result<Matrix<R>> {
        if i >= self.images.len() {
            return Err(Error::DimensionMismatch(format!("no generator {}", i + 1)));
        }
        Ok(self.fox_gradient(w)?.swap_remove(i))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> MatrixRep<S> {
        MatrixRep {
            dim: self.dim,
            images: self.images.iter().map(|m| m.map(f)).collect(),
            inverses: self.inverses.iter().map(|m| m.map(f)).collect(),
        }
    }
}

/// `(Σ_{j<n} M^j, M^n)` for `n ≥ 0` by halving.
fn geometric_parts<R: Ring>(m: &Matrix<R>, n: u64) -> (Matrix<R>, Matrix<R>) {
    if n == 0 {
        return (Matrix::zeros(m.rows(), m.cols()), Matrix::identity(m.rows()));
    }
    if n % 2 == 1 {
        let (s, p) = geometric_parts(m, n - 1);
        return (s.add(&p), p.mul(m));
    }
    let (s, p) = geometric_parts(m, n / 2);
    (s.add(&p.mul(&s)), p.mul(&p))
}

/// Image of `∂(g^e)/∂g` together with `R(g)^e`.
fn syllable_parts<R: Ring>(m: &Matrix<R>, inv: &Matrix<R>, e: i64) -> (Matrix<R>, Matrix<R>) {
    if e >= 0 {
        geometric_parts(m, e as u64)
    } else {
        // -(M^-1 + ... + M^-|e|) = -M^-1 · Σ_{j<|e|} M^-j
        let (s, p) = geometric_parts(inv, e.unsigned_abs());
        (inv.mul(&s).neg(), p)
    }
}

/// `Σ_{j<n} M^j` for `n ≥ 0` and `-M^n·Σ_{j<-n} M^j` for `n < 0`; the
/// inverse must be supplied in the latter case.
pub fn geometric_sum<R: Ring>(m: &Matrix<R>, inverse: Option<&Matrix<R>>, n: i64) -> Result<Matrix<R>> {
    if n >= 0 {
        return Ok(geometric_parts(m, n as u64).0);
    }
    let inv = inverse.ok_or(Error::NotInvertible)?;
    Ok(syllable_parts(m, inv, n).0)
}

/// [`geometric_sum`] over a field, inverting `m` when needed.
pub fn geometric_sum_field<S: Field>(m: &Matrix<S>, n: i64) -> Result<Matrix<S>> {
    if n >= 0 {
        return geometric_sum(m, None, n);
    }
    let inv = m.inverse()?;
    geometric_sum(m, Some(&inv), n)
}

impl MatrixRep<LaurentPoly<Rational>> {
    /// Substitutes `γ = a` in every image.
    pub fn specialize<S: Field>(&self, a: &S) -> Result<MatrixRep<S>> {
        if a.is_certain_zero() {
            return Err(Error::DivisionByZero);
        }
        let eval = |m: &Matrix<LaurentPoly<Rational>>| m.try_map(|f| f.eval_embedded(a));
        Ok(MatrixRep {
            dim: self.dim,
            images: self.images.iter().map(eval).collect::<Result<_>>()?,
            inverses: self.inverses.iter().map(eval).collect::<Result<_>>()?,
        })
    }
}

/// A representation of the free group by invertible rational matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    rep: MatrixRep<Rational>,
}

impl Representation {
    pub fn new(images: Vec<Matrix<Rational>>) -> Result<Self> {
        let dim = images.first().map_or(1, Matrix::rows);
        let inverses = images
            .iter()
            .map(|m| {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "expected {dim}x{dim} generator images"
                    )));
                }
                m.inverse()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { rep: MatrixRep { dim, images, inverses } })
    }

    /// The one-dimensional trivial representation on `n` generators.
    pub fn trivial(n: usize) -> Self {
        Self::constant(n, Matrix::identity(1)).expect("identity is invertible")
    }

    /// Every generator maps to `m`.
    pub fn constant(n: usize, m: Matrix<Rational>) -> Result<Self> {
        Self::new(vec![m; n])
    }

    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    pub fn num_generators(&self) -> usize {
        self.rep.images.len()
    }

    pub fn image(&self, i: usize) -> &Matrix<Rational> {
        &self.rep.images[i]
    }

    pub fn as_matrix_rep(&self) -> &MatrixRep<Rational> {
        &self.rep
    }

    /// Parses `dim ℓ` followed by `matrix <generator>` blocks of ℓ rows.
    pub fn parse(text: &str, pres: &Presentation) -> std::result::Result<Self, ParseError> {
        parse_representation(text, pres)
    }

    pub fn to_text(&self, names: &[String]) -> String {
        let mut out = format!("dim {}\n", self.dim());
        for (name, m) in names.iter().zip(&self.rep.images) {
            out.push_str(&format!("matrix {name}\n"));
            for row in m.row_vecs() {
                let cells: Vec<String> = row.iter().map(format_rational).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

fn parse_representation(text: &str, pres: &Presentation) -> std::result::Result<Representation, ParseError> {
    let n = pres.num_generators();
    let mut dim: Option<usize> = None;
    let mut images: Vec<Option<Matrix<Rational>>> = vec![None; n];
    let mut current: Option<(usize, usize, Vec<Vec<Rational>>)> = None;
    let mut last_line = 0;

    let finish = |cur: &mut Option<(usize, usize, Vec<Vec<Rational>>)>,
                  images: &mut Vec<Option<Matrix<Rational>>>,
                  dim: usize,
                  line: usize|
     -> std::result::Result<(), ParseError> {
        if let Some((g, start, rows)) = cur.take() {
            if rows.len() != dim {
                return Err(ParseError::syntax(
                    line,
                    1,
                    format!("matrix starting on line {start} has {} rows, expected {dim}", rows.len()),
                ));
            }
            images[g] = Some(Matrix::from_rows(rows));
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = token_columns(content);
        let Some(&(col, first)) = tokens.first() else { continue };
        match first {
            "dim" => {
                if dim.is_some() {
                    return Err(ParseError::syntax(line, col, "duplicate `dim` directive"));
                }
                let [_, (c, v)] = tokens.as_slice() else {
                    return Err(ParseError::syntax(line, col, "expected `dim <integer>`"));
                };
                let d: usize = v
                    .parse()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| ParseError::syntax(line, *c, "dimension must be a positive integer"))?;
                dim = Some(d);
            }
            "matrix" => {
                let Some(d) = dim else {
                    return Err(ParseError::syntax(line, col, "`matrix` before `dim`"));
                };
                finish(&mut current, &mut images, d, line)?;
                let [_, (c, name)] = tokens.as_slice() else {
                    return Err(ParseError::syntax(line, col, "expected `matrix <generator>`"));
                };
                let g = pres.generator_index(name).ok_or_else(|| ParseError {
                    line,
                    col: *c,
                    kind: crate::error::ParseErrorKind::UnknownGenerator(name.to_string()),
                })?;
                if images[g].is_some() {
                    return Err(ParseError::syntax(line, *c, format!("second matrix for `{name}`")));
                }
                current = Some((g, line, Vec::new()));
            }
            _ => {
                let Some(d) = dim else {
                    return Err(ParseError::syntax(line, col, "expected `dim`"));
                };
                let Some((_, _, rows)) = current.as_mut() else {
                    return Err(ParseError::syntax(line, col, "matrix row outside a `matrix` block"));
                };
                if rows.len() == d {
                    return Err(ParseError::syntax(line, col, format!("too many rows, expected {d}")));
                }
                if tokens.len() != d {
                    return Err(ParseError::syntax(
                        line,
                        col,
                        format!("row has {} entries, expected {d}", tokens.len()),
                    ));
                }
                let row = tokens
                    .iter()
                    .map(|&(c, t)| {
                        parse_rational(t)
                            .map_err(|_| ParseError::syntax(line, c, format!("invalid rational `{t}`")))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                rows.push(row);
            }
        }
    }
    let end = last_line + 1;
    let d = dim.ok_or_else(|| ParseError::syntax(end, 1, "missing `dim` directive"))?;
    finish(&mut current, &mut images, d, end)?;
    let images = images
        .into_iter()
        .enumerate()
        .map(|(g, m)| {
            m.ok_or_else(|| {
                ParseError::syntax(end, 1, format!("missing matrix for generator `{}`", pres.generators[g]))
            })
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Representation::new(images).map_err(|e| ParseError::syntax(end, 1, e.to_string()))
}

fn token_columns(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut col = 0;
    let mut start_col = 0;
    for (byte, ch) in s.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((start_col, &s[b..byte]));
            }
        } else if start.is_none() {
            start = Some(byte);
            start_col = col;
        }
    }
    if let Some(b) = start {
        out.push((start_col, &s[b..]));
    }
    out
}

/// `φ̃(g_i) = γ^{e_i}·φ(g_i)`, with inverse `γ^{-e_i}·φ(g_i)⁻¹`.
pub fn tensor_with_alpha(phi: &Representation, pres: &Presentation) -> Result<TensorRep> {
    if phi.num_generators() != pres.num_generators() {
        return Err(Error::DimensionMismatch(format!(
            "representation has {} generators, presentation has {}",
            phi.num_generators(),
            pres.num_generators()
        )));
    }
    let lift = |m: &Matrix<Rational>, k: i64| m.map(|c| LaurentPoly::monomial(c.clone(), k));
    let images = phi.rep.images.iter().zip(&pres.alpha).map(|(m, &e)| lift(m, e)).collect();
    let inverses = phi.rep.inverses.iter().zip(&pres.alpha).map(|(m, &e)| lift(m, -e)).collect();
    Ok(MatrixRep { dim: phi.dim(), images, inverses })
}

/// The `mℓ × nℓ` matrix whose block `(j, i)` is the image of
/// `∂(L_j·R_j⁻¹)/∂g_i`. Unless `allow_invalid` is set the presentation must
/// pass [`Presentation::validate`].
pub fn alexander_matrix<R: Ring>(pres: &Presentation, rep: &MatrixRep<R>, allow_invalid: bool) -> Result<Matrix<R>> {
    if !allow_invalid {
        pres.require_valid()?;
    }
    let n = pres.num_generators();
    if rep.num_generators() != n {
        return Err(Error::DimensionMismatch(format!(
            "representation has {} generators, presentation has {n}",
            rep.num_generators()
        )));
    }
    let l = rep.dim();
    let rows = pres
        .relators
        .par_iter()
        .map(|r| rep.fox_gradient(&r.word()?))
        .collect::<Result<Vec<_>>>()?;
    let mut q = Matrix::zeros(pres.num_relators() * l, n * l);
    for (j, grad) in rows.iter().enumerate() {
        for (i, block) in grad.iter().enumerate() {
            q.set_block(j * l, i * l, block);
        }
    }
    Ok(q)
}

/// `true` when every generator image in `rep` is the identity.
pub fn is_trivial<R: Ring>(rep: &MatrixRep<R>) -> bool {
    rep.images.iter().all(|m| m.is_identity())
}
