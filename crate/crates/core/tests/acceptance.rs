//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Criteria 1-8 read the golden corpus; 9 runs randomized property
//! suites from a fixed ChaCha seed; 10 checks the Iwasawa shift directly.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use propfox_core::algebra::scalar::{int, rational};
use propfox_core::cohomology::Verdict;
use propfox_core::corpus::{self, associates, Check, EntryReport};
use propfox_core::extensions::{build_extension, cocycle_space, evaluate_cocycle, extend_local_system, verify_factors, CrossedHom};
use propfox_core::fitting::{det_laurent, fitting_delta, iwasawa_delta, specialize_matrix, zero_check};
use propfox_core::fox::{alexander_matrix, tensor_with_alpha};
use propfox_core::zeros::rational_roots;
use propfox_core::{Error, Matrix, MatrixRep, Presentation, RatLaurent, Rational, Relator, Representation, Word};

const SEED: [u8; 32] = *b"propfox acceptance seed 20261018";
const CASES: u32 = 500;

type Outcome = Result<(), String>;
type Suite = fn(&mut TestRunner) -> Outcome;

fn main() -> ExitCode {
    let clock = Instant::now();
    let reports = corpus::run_all();
    println!("corpus evaluated in {:.2}s", clock.elapsed().as_secs_f64());
    let criteria: [(u32, &dyn Fn() -> Outcome); 10] = [
        (1, &|| entry_passes(&reports, "eg-4.1-p3")),
        (2, &|| entry_passes(&reports, "eg-4.2-p2")),
        (3, &|| entry_passes(&reports, "eg-4.3-p5")),
        (4, &|| entry_passes(&reports, "eg-4.4-p3-b1")),
        (5, &|| entry_passes(&reports, "eg-4.5-p3").and_then(|_| no_matrix_check(&reports, "eg-4.5-p3"))),
        (6, &|| cohomology_corpus(&reports)),
        (7, &|| theorem_audits(&reports)),
        (8, &|| sym_square(&reports)),
        (9, &properties),
        (10, &iwasawa_shift),
    ];
    let mut failed = false;
    for (n, criterion) in criteria {
        let clock = Instant::now();
        let outcome = criterion();
        let secs = clock.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {n}: PASS ({secs:.2}s)"),
            Err(why) => {
                failed = true;
                println!("criterion {n}: FAIL ({why})");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn report<'a>(reports: &'a [EntryReport], id: &str) -> Result<&'a EntryReport, String> {
    reports.iter().find(|r| r.id == id).ok_or_else(|| format!("{id} missing"))
}

fn all_pass<'a>(id: &str, checks: impl IntoIterator<Item = &'a Check>) -> Outcome {
    let mut n = 0;
    for c in checks {
        n += 1;
        if !c.passed {
            return Err(format!("{id}: {} got {}", c.name, c.detail));
        }
    }
    if n == 0 {
        return Err(format!("{id}: no checks"));
    }
    Ok(())
}

fn entry_passes(reports: &[EntryReport], id: &str) -> Outcome {
    all_pass(id, &report(reports, id)?.checks)
}

fn no_matrix_check(reports: &[EntryReport], id: &str) -> Outcome {
    match report(reports, id)?.checks.iter().find(|c| c.name.starts_with("Q entry")) {
        Some(_) => Err(format!("{id} asserts matrix entries")),
        None => Ok(()),
    }
}

fn cohomology_corpus(reports: &[EntryReport]) -> Outcome {
    for id in ["eg-5.1", "eg-5.2", "eg-5.3", "eg-5.4", "eg-5.5"] {
        let r = report(reports, id)?;
        let relevant: Vec<&Check> = r.checks.iter().filter(|c| !c.name.starts_with("Sym²")).collect();
        if !relevant.iter().any(|c| c.name == "(Z1, B1, H1)") || !relevant.iter().any(|c| c.name.starts_with('δ')) {
            return Err(format!("{id}: dimension or witness check missing"));
        }
        all_pass(id, relevant)?;
    }
    Ok(())
}

fn theorem_audits(reports: &[EntryReport]) -> Outcome {
    for r in reports {
        let audits: Vec<&Check> = r.checks.iter().filter(|c| c.name.contains("theorem audit")).collect();
        // The zeros of eg-4.3-p5 are irrational, so there is no exact point to audit.
        if audits.is_empty() && r.id == "eg-4.3-p5" && r.passed() {
            continue;
        }
        all_pass(r.id, audits)?;
    }
    let five = report(reports, "eg-5.5")?;
    let audit = five.checks.iter().find(|c| c.name == "theorem audit").ok_or("eg-5.5 audit missing")?;
    if audit.detail != Verdict::HypothesisViolated.as_str() {
        return Err(format!("eg-5.5 verdict {}", audit.detail));
    }
    Ok(())
}

fn sym_square(reports: &[EntryReport]) -> Outcome {
    for id in ["eg-5.3", "eg-5.4"] {
        all_pass(id, report(reports, id)?.checks.iter().filter(|c| c.name.starts_with("Sym²")))?;
    }
    Ok(())
}

fn iwasawa_shift() -> Outcome {
    let e = corpus::entry("eg-4.1-p3").ok_or("eg-4.1-p3 missing")?;
    let pres = e.presentation().map_err(|e| e.to_string())?;
    let run = || -> propfox_core::Result<Outcome> {
        let q = alexander_matrix(&pres, &tensor_with_alpha(&Representation::trivial(3), &pres)?, false)?;
        let iw = iwasawa_delta(&pres, 0)?;
        let d1 = fitting_delta(&q, 1, pres.prime)?;
        let d0 = fitting_delta(&q, 0, pres.prime)?;
        let d2 = fitting_delta(&q, 2, pres.prime)?;
        if !associates(&iw.delta, &d1.delta) || !associates(&d1.delta, &RatLaurent::parse("g - 4")?) {
            return Ok(Err(format!("iwasawa Δ_0 = {}, Δ_1 = {}", iw.delta, d1.delta)));
        }
        if !d0.delta.is_zero() || d0.minor_count == 0 || d0.minor_size != 3 {
            return Ok(Err(format!("Δ_0 = {} from {} minors", d0.delta, d0.minor_count)));
        }
        if !d2.delta.is_one() || d2.minor_count == 0 || d2.minor_size != 1 {
            return Ok(Err(format!("Δ_2 = {} from {} minors", d2.delta, d2.minor_count)));
        }
        Ok(Ok(()))
    };
    run().map_err(|e| e.to_string())?
}

// Property suites.

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn properties() -> Outcome {
    let suites: [(&str, Suite); 8] = [
        ("fox product/inverse rules", prop_fox_rules),
        ("fundamental identity", prop_fundamental_identity),
        ("block form of extensions", prop_block_form),
        ("verify_factors iff nullspace", prop_verify_iff_nullspace),
        ("divisibility chain", prop_divisibility_chain),
        ("relator conjugation invariance", prop_conjugation_invariance),
        ("evaluation commutes with minors", prop_eval_minor),
        ("rank-vs-eval zero test", prop_zero_test_agreement),
    ];
    for (name, suite) in suites {
        let clock = Instant::now();
        suite(&mut runner()).map_err(|e| format!("{name}: {e}"))?;
        println!("  {name}: {CASES} cases in {:.2}s", clock.elapsed().as_secs_f64());
    }
    Ok(())
}

fn fail(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

fn arb_word(gens: usize) -> impl Strategy<Value = Word> {
    let syllable = (0..gens, prop_oneof![-3i64..=-1, 1i64..=3]);
    prop::collection::vec(syllable, 0..7).prop_map(|s| Word::from_syllables(s).expect("short word"))
}

fn arb_small() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(int)
}

fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(arb_small(), n * n).prop_map(move |v| Matrix::new(n, n, v))
}

/// Random invertible rational representation of a free group.
fn arb_rep(gens: usize, dim: usize) -> impl Strategy<Value = MatrixRep<Rational>> {
    prop::collection::vec(arb_matrix(dim), gens)
        .prop_filter_map("singular image", |images| Representation::new(images).ok().map(|r| r.as_matrix_rep().clone()))
}

fn identity_minus(rep: &MatrixRep<Rational>, i: usize) -> Matrix<Rational> {
    rep.image(i).sub(&Matrix::identity(rep.dim()))
}

fn prop_fox_rules(r: &mut TestRunner) -> Outcome {
    r.run(&(arb_rep(3, 2), arb_word(3), arb_word(3)), |(rep, u, v)| {
        let gu = rep.fox_gradient(&u).map_err(fail)?;
        let gv = rep.fox_gradient(&v).map_err(fail)?;
        let guv = rep.fox_gradient(&u.mul(&v)).map_err(fail)?;
        let ru = rep.evaluate_word(&u).map_err(fail)?;
        for i in 0..3 {
            prop_assert_eq!(&guv[i], &gu[i].add(&ru.mul(&gv[i])));
        }
        let ginv = rep.fox_gradient(&u.inv()).map_err(fail)?;
        let ru_inv = rep.evaluate_word(&u.inv()).map_err(fail)?;
        for i in 0..3 {
            prop_assert_eq!(&ginv[i], &ru_inv.mul(&gu[i]).neg());
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

fn prop_fundamental_identity(r: &mut TestRunner) -> Outcome {
    r.run(&(arb_rep(3, 2), arb_word(3)), |(rep, w)| {
        let grad = rep.fox_gradient(&w).map_err(fail)?;
        let mut lhs = Matrix::zeros(2, 2);
        for (i, g) in grad.iter().enumerate() {
            lhs = lhs.add(&g.mul(&identity_minus(&rep, i)));
        }
        let rw = rep.evaluate_word(&w).map_err(fail)?;
        prop_assert_eq!(lhs, rw.sub(&Matrix::identity(2)));
        Ok(())
    })
    .map_err(|e| e.to_string())
}

fn prop_block_form(r: &mut TestRunner) -> Outcome {
    let beta = prop::collection::vec(prop::collection::vec(arb_small(), 2), 3).prop_map(CrossedHom::new);
    r.run(&(arb_rep(3, 2), beta, arb_word(3)), |(rep, beta, w)| {
        let ext = extend_local_system(&rep, &beta).map_err(fail)?;
        let big = ext.evaluate_word(&w).map_err(fail)?;
        let top = rep.evaluate_word(&w).map_err(fail)?;
        let col = evaluate_cocycle(&beta, &rep, &w).map_err(fail)?;
        for i in 0..2 {
            for j in 0..2 {
                prop_assert_eq!(&big[(i, j)], &top[(i, j)]);
            }
            prop_assert_eq!(&big[(i, 2)], &col[i]);
            prop_assert!(big[(2, i)].is_zero());
        }
        prop_assert!(big[(2, 2)].is_one());
        Ok(())
    })
    .map_err(|e| e.to_string())
}

struct Setting {
    pres: Presentation,
    phi: Representation,
    q: Matrix<RatLaurent>,
}

fn eg41_settings() -> Vec<Setting> {
    let pres = corpus::entry("eg-4.1-p3").unwrap().presentation().unwrap();
    let phis = [
        Representation::trivial(3),
        corpus::entry("eg-4.4-p3-b1").unwrap().representation(&pres).unwrap(),
        corpus::entry("eg-4.5-p3").unwrap().representation(&pres).unwrap(),
    ];
    phis.into_iter()
        .map(|phi| {
            let q = alexander_matrix(&pres, &tensor_with_alpha(&phi, &pres).unwrap(), false).unwrap();
            Setting { pres: pres.clone(), phi, q }
        })
        .collect()
}

fn prop_verify_iff_nullspace(r: &mut TestRunner) -> Outcome {
    let settings = eg41_settings();
    let points = [int(4), int(1), int(2), rational(1, 4), int(-2)];
    let strategy = (0..settings.len(), 0..points.len(), prop::collection::vec(arb_small(), 6), prop::collection::vec(arb_small(), 6), any::<bool>());
    r.run(&strategy, |(s, k, coeffs, noise, perturb)| {
        let Setting { pres, phi, q } = &settings[s];
        let a = &points[k];
        let l = phi.dim();
        let n = l * pres.num_generators();
        // Half the cases start inside the cocycle space so both outcomes occur.
        let space = cocycle_space(pres, phi, a).map_err(fail)?;
        let mut b = vec![Rational::zero(); n];
        for (basis, c) in space.basis.iter().zip(&coeffs) {
            for (x, y) in b.iter_mut().zip(basis.stacked()) {
                *x += c * y;
            }
        }
        if perturb {
            for (x, y) in b.iter_mut().zip(&noise) {
                *x += y;
            }
        }
        let member = specialize_matrix(q, a).map_err(fail)?.mul_vec(&b).iter().all(Zero::is_zero);
        let cand = build_extension(pres, phi, a, &CrossedHom::from_stacked(&b, l)).map_err(fail)?;
        let verified = verify_factors(pres, &cand).map_err(fail)?.passed();
        prop_assert_eq!(member, verified);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

fn arb_poly() -> impl Strategy<Value = RatLaurent> {
    (prop::collection::vec(-3i64..=3, 3), -1i64..=1).prop_map(|(c, low)| RatLaurent::from_dense(low, c.into_iter().map(int).collect()))
}

fn arb_poly_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<RatLaurent>> {
    prop::collection::vec(arb_poly(), rows * cols).prop_map(move |v| Matrix::new(rows, cols, v))
}

fn prop_divisibility_chain(r: &mut TestRunner) -> Outcome {
    r.run(&arb_poly_matrix(3, 3), |m| {
        let ds: Vec<RatLaurent> = (0..4).map(|d| fitting_delta(&m, d, 3).map(|f| f.delta)).collect::<Result<_, _>>().map_err(fail)?;
        for d in 0..3 {
            if !ds[d].is_zero() {
                prop_assert!(!ds[d + 1].is_zero());
                prop_assert!(ds[d].div_exact(&ds[d + 1]).is_some(), "Δ_{} = {} not divisible by {}", d, ds[d], ds[d + 1]);
            }
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

fn conjugated(pres: &Presentation, j: usize, u: &Word) -> Presentation {
    let mut out = pres.clone();
    let rel = &pres.relators[j];
    let ui = u.inv();
    out.relators[j] = Relator::equation(u.mul(&rel.left).mul(&ui), u.mul(&rel.right).mul(&ui));
    out
}

fn prop_conjugation_invariance(r: &mut TestRunner) -> Outcome {
    let bases: Vec<Presentation> = ["eg-4.1-p3", "eg-4.3-p5"].iter().map(|id| corpus::entry(id).unwrap().presentation().unwrap()).collect();
    let scalars = [int(1), int(2), int(-1), rational(1, 2)];
    let strategy = (0..bases.len(), 0..4usize, arb_word(3), prop::collection::vec(0..scalars.len(), 3), 0..4usize);
    r.run(&strategy, |(b, j, u, s, d)| {
        let pres = &bases[b];
        let n = pres.num_generators();
        let j = j % pres.num_relators();
        let u = Word::from_syllables(u.syllables().iter().map(|&(g, e)| (g % n, e))).map_err(fail)?;
        let images = (0..n).map(|i| Matrix::from_rows(vec![vec![scalars[s[i]].clone()]])).collect();
        let phi = Representation::new(images).map_err(fail)?;
        let other = conjugated(pres, j, &u);
        let qa = alexander_matrix(pres, &tensor_with_alpha(&phi, pres).map_err(fail)?, false).map_err(fail)?;
        let qb = alexander_matrix(&other, &tensor_with_alpha(&phi, &other).map_err(fail)?, false).map_err(fail)?;
        let da = fitting_delta(&qa, d, pres.prime).map_err(fail)?.delta;
        let db = fitting_delta(&qb, d, pres.prime).map_err(fail)?.delta;
        prop_assert!(associates(&da, &db), "Δ_{} changed from {} to {}", d, da, db);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

fn arb_point() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![int(1), int(-1), int(2), int(-2), int(4), rational(1, 4), rational(-2, 3)])
}

fn prop_eval_minor(r: &mut TestRunner) -> Outcome {
    r.run(&(arb_poly_matrix(3, 3), arb_point()), |(m, a)| {
        let lhs = det_laurent(&m).eval_at(&a).map_err(fail)?;
        let rhs = specialize_matrix(&m, &a).map_err(fail)?.det_bareiss();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

fn prop_zero_test_agreement(r: &mut TestRunner) -> Outcome {
    r.run(&(arb_poly_matrix(3, 2), 0..3usize, arb_point()), |(m, d, a)| {
        let delta = fitting_delta(&m, d, 3).map_err(fail)?;
        // Rational zeros of Δ exercise the positive side of the test.
        let mut points = vec![a];
        if !delta.delta.is_zero() {
            points.extend(rational_roots(&delta.delta).map_err(fail)?.into_iter().map(|(x, _)| x));
        }
        for p in &points {
            match zero_check(&m, &delta, p) {
                Ok(c) => prop_assert_eq!(c.by_eval, c.by_rank),
                Err(Error::InternalInconsistency(e)) => return Err(fail(e)),
                Err(e) => return Err(fail(e)),
            }
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}
