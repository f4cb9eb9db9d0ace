//! Exhaustive checks of the auxiliary lemmas: floor sums and quadratic
//! symbols, Gauss sums, almost-circulant determinants, Galois behaviour of
//! `I_q`, and the Jacobi-sum congruences modulo a prime above `p`.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{ExactValue, Report};
use crate::characters::{
    conductor, i_unit, jacobi_sum, lambda_k, product_iq, teichmuller_reduce, trace_ad, Character,
};
use crate::cyclotomic::{
    is_fundamental_discriminant, quadratic_gauss_sum, scaled_gauss_sum, sqrt_disc, CycInt,
};
use crate::error::{invalid, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::matrices::{
    almost_circulant_det_via_eigs, bareiss_det, build_almost_circulant, int_vector, Integers,
};
use crate::nt_base::{
    binomial, binomial_product_bp, decompose_two_square, floor_sum_k, gauss_lemma_count, is_prime,
    jacobi_symbol, key_lemma_sign, kronecker_symbol, lattice_floor_sums,
    lattice_floor_sums_truncated, pan_delta, residue, SymbolValue,
};

/// Default bound on the multiplier `a` in the integer lemma sweeps.
pub const DEFAULT_A_MAX: i64 = 99;

/// Relative tolerance for the floating-point Gauss sum cross-check.
pub const GAUSS_FLOAT_TOL: f64 = 1e-6;

/// Counts cases and remembers the first failure.
#[derive(Default)]
struct Tally {
    holds: u64,
    total: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.holds += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(case());
        }
    }

    fn finish(self, report: Report, start: Instant) -> Report {
        let mut report = report.witness("cases", self.total);
        if let Some(f) = self.first_failure {
            report = report.witness("counterexample", f);
        }
        report.compare(self.holds, self.total).elapsed_since(start)
    }
}

fn parity_symbol(e: u64) -> SymbolValue {
    SymbolValue::from_parity(e)
}

/// Gauss-lemma count and floor sum `K` against `(a/s)` for all
/// `1 ≤ a ≤ a_max` coprime to the odd modulus `s`.
pub fn verify_symbol_lemmas(s: i64, a_max: i64) -> Result<Vec<Report>> {
    if s < 1 || s % 2 == 0 {
        return invalid(format!("s = {s} must be odd and positive"));
    }
    let start = Instant::now();
    let mut gauss = Tally::default();
    let mut floor = Tally::default();
    for a in (1..=a_max).filter(|a| a.gcd(&s) == 1) {
        let symbol = jacobi_symbol(a, s)?;
        gauss.record(parity_symbol(gauss_lemma_count(a, s)?) == symbol, || {
            format!("a={a}")
        });
        floor.record(parity_symbol(floor_sum_k(a, s)?) == symbol, || {
            format!("a={a}")
        });
    }
    Ok(vec![
        gauss.finish(Report::new("gauss-lemma").param("s", s), start),
        floor.finish(Report::new("floor-sum").param("s", s), start),
    ])
}

/// `pan_delta(a, m, i, j) = 1` whenever `{ai}_m > {aj}_m`, over all
/// `1 ≤ i < j ≤ m − 1` and `1 ≤ a ≤ a_max` coprime to `m`.
pub fn verify_pan_delta(m: i64, a_max: i64) -> Result<Report> {
    if m < 2 {
        return invalid("m must be at least 2");
    }
    let start = Instant::now();
    let mut tally = Tally::default();
    for a in (1..=a_max).filter(|a| a.gcd(&m) == 1) {
        for i in 1..m {
            for j in i + 1..m {
                if residue(a * i, m) > residue(a * j, m) {
                    tally.record(pan_delta(a, m, i, j)? == 1, || format!("a={a} i={i} j={j}"));
                }
            }
        }
    }
    Ok(tally.finish(Report::new("pan-delta").param("m", m), start))
}

/// Both lattice-point sums (second sum to `m`, and to `m − 1`) against their
/// closed forms, and the key sign lemma against `(2m/a)`, for odd
/// `a ≤ a_max` coprime to the even modulus `m`.
pub fn verify_even_modulus_lemmas(m: i64, a_max: i64) -> Result<Vec<Report>> {
    if m < 2 || m % 2 != 0 {
        return invalid(format!("m = {m} must be even and positive"));
    }
    let start = Instant::now();
    let mut lattice = Tally::default();
    let mut key = Tally::default();
    for a in (1..=a_max).step_by(2).filter(|a| a.gcd(&m) == 1) {
        let (x, y) = lattice_floor_sums(a, m)?;
        let (xt, yt) = lattice_floor_sums_truncated(a, m)?;
        lattice.record(
            x + y == (a - 1) * m / 2 && xt + yt == (a - 1) * (m - 1) / 2,
            || format!("a={a}"),
        );
        key.record(key_lemma_sign(a, m)? == kronecker_symbol(2 * m, a)?, || {
            format!("a={a}")
        });
    }
    Ok(vec![
        lattice.finish(Report::new("lattice-sums").param("m", m), start),
        key.finish(Report::new("key-lemma").param("m", m), start),
    ])
}

/// `G(m) = Σ_{x mod m} ζ_m^{x²}`: exact square against the three-case
/// evaluation, and the complex embedding against the closed form.
pub fn verify_gauss_sum_eval(m: u64) -> Result<Report> {
    let start = Instant::now();
    if m == 0 {
        return invalid("m must be positive");
    }
    let g = quadratic_gauss_sum(m);
    let sqrt_m = (m as f64).sqrt();
    let (expected_sq, closed) = match m % 4 {
        0 => (
            CycInt::zeta_pow(m, (m / 4) as i64).scale(&BigInt::from(2 * m)),
            Complex64::new(sqrt_m, sqrt_m),
        ),
        1 => (CycInt::from_int(m, m), Complex64::new(sqrt_m, 0.0)),
        2 => (CycInt::zero(m), Complex64::new(0.0, 0.0)),
        _ => (
            CycInt::from_int(m, -(m as i64)),
            Complex64::new(0.0, sqrt_m),
        ),
    };
    let embedded = g.embed_complex();
    let float_error = (embedded - closed).norm() / closed.norm().max(1.0);
    let float_ok = float_error <= GAUSS_FLOAT_TOL;
    Ok(Report::new("gauss-sum-eval")
        .param("m", m as i64)
        .witness("G", &g)
        .witness(
            "embedding",
            format!("{:.9}{:+.9}i", embedded.re, embedded.im),
        )
        .witness("float_error", format!("{float_error:e}"))
        .compare(
            ExactValue::seq([(&(&g * &g)).into(), float_ok.into()]),
            ExactValue::seq([(&expected_sq).into(), true.into()]),
        )
        .elapsed_since(start))
}

/// `Σ_x ζ_m^{a x²} = (a/m) G(m)` for odd `m` and every `a ∈ [−m, m]` coprime to `m`.
pub fn verify_scaled_gauss_sum(m: u64) -> Result<Report> {
    if m.is_multiple_of(2) {
        return invalid("m must be odd");
    }
    let start = Instant::now();
    let mi = m as i64;
    let g = quadratic_gauss_sum(m);
    let mut tally = Tally::default();
    for a in (-mi..=mi).filter(|a| *a != 0 && a.gcd(&mi) == 1) {
        let symbol = i64::from(jacobi_symbol(a, mi)?);
        let expected = g.scale(&BigInt::from(symbol));
        tally.record(scaled_gauss_sum(a, m)? == expected, || format!("a={a}"));
    }
    Ok(tally.finish(Report::new("scaled-gauss-sum").param("m", m as i64), start))
}

/// `sqrt_disc(D)² = D` and the embedding is the principal root.
pub fn verify_sqrt_disc(d: i64) -> Result<Report> {
    let start = Instant::now();
    let root = sqrt_disc(d)?;
    let z = root.embed_complex();
    let principal = if d > 0 {
        Complex64::new((d as f64).sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-d as f64).sqrt())
    };
    let float_ok = (z - principal).norm() < 1e-6 * principal.norm();
    Ok(Report::new("sqrt-disc")
        .param("m", d.abs())
        .param("disc", d)
        .witness("root", &root)
        .compare(
            ExactValue::seq([(&(&root * &root)).into(), float_ok.into()]),
            ExactValue::seq([ExactValue::int(d), true.into()]),
        )
        .elapsed_since(start))
}

/// Fundamental discriminants with `|D| = m`.
pub fn fundamental_discriminants_of_size(m: i64) -> Vec<i64> {
    [-m, m]
        .into_iter()
        .filter(|&d| is_fundamental_discriminant(d))
        .collect()
}

/// Deterministic random integer vectors with lengths in `[2, 10]` and
/// entries in `[−5, 5]`.
pub fn sample_circulant_vectors(seed: u64, count: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(2..=10);
            (0..m).map(|_| rng.gen_range(-5..=5)).collect()
        })
        .collect()
}

/// The eigenvalue formula for `det W(v)` against elimination, for each vector.
pub fn verify_almost_circulant(vectors: &[Vec<i64>]) -> Result<Report> {
    let start = Instant::now();
    let mut lhs = Vec::with_capacity(vectors.len());
    let mut rhs = Vec::with_capacity(vectors.len());
    for v in vectors {
        lhs.push(ExactValue::int(almost_circulant_det_via_eigs(v)?));
        rhs.push(ExactValue::int(bareiss_det(&build_almost_circulant(
            Integers,
            &int_vector(v),
        )?)?));
    }
    let mut report = Report::new("almost-circulant").witness("vectors", vectors.len() as u64);
    if let Some(m) = vectors.first().map(Vec::len) {
        if vectors.iter().all(|v| v.len() == m) {
            report = report.param("m", m as i64);
        }
    }
    Ok(report
        .compare(ExactValue::Seq(lhs), ExactValue::Seq(rhs))
        .elapsed_since(start))
}

/// Galois behaviour of `I_q`: `σ_a(I_q) = (a/n) I_q` for `q ≡ 3 (mod 4)` and
/// `σ_a(i^{(n−2)/2} I_q) = ((q−1)/a) i^{(n−2)/2} I_q` for `q ≡ 1 (mod 4)`,
/// for every `a` coprime to `q − 1`.
pub fn verify_galois_iq(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let m = conductor(ctx);
    let n = ctx.n() as i64;
    let iq = product_iq(ctx);
    let (value, three_mod_four) = if ctx.q() % 4 == 3 {
        (iq, true)
    } else {
        (&i_unit(ctx)?.pow(((n - 2) / 2) as u32) * &iq, false)
    };
    let mut tally = Tally::default();
    for a in (1..m as i64).filter(|a| a.gcd(&(m as i64)) == 1) {
        let symbol = if three_mod_four {
            jacobi_symbol(a, n)?
        } else {
            kronecker_symbol(m as i64, a)?
        };
        let expected = value.scale(&BigInt::from(i64::from(symbol)));
        tally.record(value.galois(a)? == expected, || format!("a={a}"));
    }
    Ok(tally.finish(
        Report::for_field("galois-iq", ctx).witness("value", &value),
        start,
    ))
}

/// `λ_n(−1) = 0` for `q ≡ 3 (mod 4)`.
pub fn verify_lambda_vanishing(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let report = Report::for_field("lambda-vanish", ctx);
    if ctx.q() % 4 != 3 {
        return Ok(report
            .not_applicable("needs q ≡ 3 (mod 4)")
            .elapsed_since(start));
    }
    let minus_one = ctx.neg(FieldElement::ONE);
    let value = lambda_k(ctx, minus_one, ctx.n() as i64)?;
    Ok(report.compare(&value, 0i64).elapsed_since(start))
}

/// `a_d(q) = −2 λ_{n/2}(d)` for `q ≡ 1 (mod 4)` and every nonsquare `d`; for
/// prime `q` also records whether `|a_d| = 4 b_q` throughout.
pub fn verify_trace_lambda(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let report = Report::for_field("trace-lambda", ctx);
    if ctx.q() % 4 != 1 {
        return Ok(report
            .not_applicable("needs q ≡ 1 (mod 4)")
            .elapsed_since(start));
    }
    let half = (ctx.n() / 2) as i64;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut traces = Vec::new();
    for d in ctx.nonsquares() {
        let a = trace_ad(ctx, d)?;
        traces.push(a);
        lhs.push(ExactValue::int(a));
        rhs.push((&lambda_k(ctx, d, half)?.scale(&BigInt::from(-2))).into());
    }
    let mut report = report;
    if ctx.f() == 1 {
        let b = decompose_two_square(ctx.p() as u64)?.b as i64;
        report = report
            .witness("b_p", b)
            .witness("abs_trace_is_4b", traces.iter().all(|a| a.abs() == 4 * b));
    }
    Ok(report
        .compare(ExactValue::Seq(lhs), ExactValue::Seq(rhs))
        .elapsed_since(start))
}

/// `(B_p / p) = (2/p)` for `B_p = Π_{k=1}^{(p−1)/4} C(2k, k)`.
pub fn verify_binomial_product(p: u64) -> Result<Report> {
    let start = Instant::now();
    let (b, symbol) = binomial_product_bp(p)?;
    Ok(Report::new("binomial-product")
        .param("p", p as i64)
        .witness("B_p", &b)
        .compare(symbol, jacobi_symbol(2, p as i64)?)
        .elapsed_since(start))
}

/// Reduction of `J_p(χ^{−i}, χ^{−j})` modulo the prime above `p` fixed by
/// the generator: `≡ −C(i+j, i)`, and `≡ 0` when `i + j ≥ p`, for all
/// `1 ≤ i, j ≤ p − 2`.
pub fn verify_jacobi_congruence(ctx: &FieldCtx) -> Result<Report> {
    if ctx.f() != 1 {
        return invalid("the congruence is checked over prime fields");
    }
    let start = Instant::now();
    let p = ctx.p() as i64;
    let pb = BigInt::from(p);
    let mut tally = Tally::default();
    let mut vanishing = Tally::default();
    for i in 1..=p - 2 {
        for j in 1..=p - 2 {
            let reduced = teichmuller_reduce(&jacobi_sum(ctx, -i, -j).value, ctx)? as i64;
            let expected = (-binomial((i + j) as u64, i as u64)).mod_floor(&pb);
            tally.record(BigInt::from(reduced) == expected, || format!("i={i} j={j}"));
            if i + j >= p {
                vanishing.record(reduced == 0, || format!("i={i} j={j}"));
            }
        }
    }
    let report = Report::new("jacobi-congruence").param("p", p);
    let report = Report {
        generator: Some(ctx.coeffs(ctx.generator())),
        ..report
    };
    Ok(report
        .witness("cases", tally.total)
        .witness("vanishing_cases", vanishing.total)
        .compare(
            ExactValue::seq([tally.holds.into(), vanishing.holds.into()]),
            ExactValue::seq([tally.total.into(), vanishing.total.into()]),
        )
        .elapsed_since(start))
}

/// `J_p(φ, ψ) = ψ(4) J_p(ψ, ψ)` for every nontrivial `ψ = χ^k`.
pub fn verify_jacobi_four(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let n = ctx.n() as i64;
    let four = ctx.from_int(4);
    let mut tally = Tally::default();
    for k in 1..conductor(ctx) as i64 {
        let lhs = jacobi_sum(ctx, n, k).value;
        let rhs = &Character::new(ctx, k).eval(four) * &jacobi_sum(ctx, k, k).value;
        tally.record(lhs == rhs, || format!("k={k}"));
    }
    Ok(tally.finish(Report::for_field("jacobi-four", ctx), start))
}

/// Every integer-indexed lemma report for the modulus `v`.
pub fn integer_lemma_reports(v: i64, a_max: i64) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    if v >= 1 && v % 2 == 1 {
        out.extend(verify_symbol_lemmas(v, a_max)?);
        out.push(verify_scaled_gauss_sum(v as u64)?);
    }
    if v >= 2 {
        out.push(verify_pan_delta(v, a_max)?);
    }
    if v >= 2 && v % 2 == 0 {
        out.extend(verify_even_modulus_lemmas(v, a_max)?);
    }
    if v >= 1 {
        out.push(verify_gauss_sum_eval(v as u64)?);
    }
    for d in fundamental_discriminants_of_size(v) {
        out.push(verify_sqrt_disc(d)?);
    }
    if v >= 3 && is_prime(v as u64) && v % 4 == 1 {
        out.push(verify_binomial_product(v as u64)?);
    }
    Ok(out)
}

/// Every field-indexed lemma report for `F_q`.
pub fn field_lemma_reports(ctx: &FieldCtx) -> Result<Vec<Report>> {
    let mut out = vec![verify_galois_iq(ctx)?];
    if ctx.q() % 4 == 3 {
        out.push(verify_lambda_vanishing(ctx)?);
    } else {
        out.push(verify_trace_lambda(ctx)?);
    }
    if ctx.f() == 1 {
        out.push(verify_jacobi_congruence(ctx)?);
        out.push(verify_jacobi_four(ctx)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, make_field_q, GeneratorChoice};

    #[test]
    fn integer_lemmas_small_range() {
        for v in 1..=20 {
            for r in integer_lemma_reports(v, 30).unwrap() {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn gauss_sum_examples() {
        let r = verify_gauss_sum_eval(4).unwrap();
        assert_eq!(r.witnesses["G"].to_string(), "[2,2]_4");
        assert!(verify_gauss_sum_eval(2).unwrap().passed());
    }

    #[test]
    fn field_lemmas_small() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27] {
            let ctx = make_field_q(q, GeneratorChoice::Least).unwrap();
            for r in field_lemma_reports(&ctx).unwrap() {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn almost_circulant_sampled() {
        let vs = sample_circulant_vectors(7, 30);
        assert!(vs.iter().all(|v| (2..=10).contains(&v.len())));
        assert!(verify_almost_circulant(&vs).unwrap().passed());
        assert_eq!(vs, sample_circulant_vectors(7, 30));
    }

    #[test]
    fn congruence_needs_teichmuller_pairing() {
        let f7 = make_field(7, 1).unwrap();
        assert!(verify_jacobi_congruence(&f7).unwrap().passed());
    }
}
