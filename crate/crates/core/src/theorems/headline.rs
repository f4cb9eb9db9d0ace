//! The determinant identities for `I_q`: the `q ≡ 3 (mod 4)` and
//! `q ≡ 1 (mod 4)` theorems, the prime corollary and the integrality scan.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::report::{ExactValue, Report};
use crate::characters::{conductor, i_unit, product_iq, trace_ad};
use crate::cyclotomic::{as_rational_integer, exact_sqrt, field_div, CycInt, CycRat};
use crate::error::{invalid, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::matrices::{bareiss_det, build_nq, build_tq, is_nonzero_square};
use crate::nt_base::{decompose_two_square, legendre_big};

pub(crate) fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn rat_int(m: u64, v: impl Into<BigInt>) -> CycRat {
    CycInt::from_int(m, v).to_rat()
}

/// `x_q ∈ Z` and `x_q² = 2^{n−1} det N_q(−1)` for `q ≡ 3 (mod 4)`, where
/// `x_q = I_q / √((−1)^{(n−1)/2} n)`.
///
/// The square-root-free form `I_q² = (−1)^{(n−1)/2} n 2^{n−1} det N_q(−1)` is
/// checked alongside.
pub fn verify_thm1(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let report = Report::for_field("thm1", ctx);
    if ctx.q() % 4 != 3 {
        return Ok(report
            .not_applicable("q is not 3 mod 4")
            .elapsed_since(start));
    }
    let m = conductor(ctx);
    let n = ctx.n() as i64;
    let sign = sign_pow((n - 1) / 2);

    let iq = product_iq(ctx);
    let iq_sq = &iq * &iq;
    let det_n = bareiss_det(&build_nq(ctx))?;
    let scaled_det = pow2(ctx.n() - 1) * &det_n;
    let gate_rhs = CycInt::from_int(m, &scaled_det * BigInt::from(sign * n));

    let root = exact_sqrt(m, sign * n)?;
    let x = field_div(&iq.to_rat(), &root)?;
    let x_int = as_rational_integer(&x);
    let x_sq: ExactValue = match &x_int {
        Some(v) => (v * v).into(),
        None => (&x.mul(&x)?).into(),
    };

    Ok(report
        .witness("I_q", &iq)
        .witness("I_q^2", &iq_sq)
        .witness("det_N", &det_n)
        .witness("sqrt", &root)
        .witness("x_q", &x)
        .witness("x_q^2", x_sq.clone())
        .compare(
            ExactValue::seq([(&iq_sq).into(), x_sq, x_int.is_some().into()]),
            ExactValue::seq([(&gate_rhs).into(), scaled_det.into(), true.into()]),
        )
        .elapsed_since(start))
}

/// The `d`-independent part of the `q ≡ 1 (mod 4)` computation.
struct OneModFour {
    iq: CycInt,
    /// `(−1)^{(n−2)/2} (q−1) I_q²`
    gate_core: CycInt,
    y: CycRat,
    y_int: Option<BigInt>,
    y_sq: CycRat,
}

fn one_mod_four(ctx: &FieldCtx) -> Result<OneModFour> {
    if ctx.q() % 4 != 1 {
        return invalid(format!("q = {} is not 1 mod 4", ctx.q()));
    }
    let m = conductor(ctx);
    let e = (ctx.n() as i64 - 2) / 2;
    let iq = product_iq(ctx);
    let gate_core = (&iq * &iq).scale(&BigInt::from(sign_pow(e) * m as i64));
    let unit = i_unit(ctx)?.pow(e as u32);
    let y = (&unit * &iq).to_rat().mul(&exact_sqrt(m, m as i64)?)?;
    let y_int = as_rational_integer(&y);
    let y_sq = y.mul(&y)?;
    Ok(OneModFour {
        iq,
        gate_core,
        y,
        y_int,
        y_sq,
    })
}

fn thm2_report(
    ctx: &FieldCtx,
    common: &OneModFour,
    d: FieldElement,
    start: Instant,
) -> Result<Report> {
    let m = conductor(ctx);
    let a = trace_ad(ctx, d)?;
    let det_t = bareiss_det(&build_tq(ctx, d)?)?;
    let scaled_det = pow2(ctx.n()) * &det_t;
    let gate_lhs = common.gate_core.scale(&BigInt::from(-a));
    let claim_lhs: ExactValue = (&common.y_sq.mul(&rat_int(m, -a))?).into();
    Ok(Report::for_field("thm2", ctx)
        .param("d", ctx.dlog(d)? as i64)
        .witness("I_q", &common.iq)
        .witness("y_q", &common.y)
        .witness("y_q^2", &common.y_sq)
        .witness("a_d", a)
        .witness("det_T", &det_t)
        .compare(
            ExactValue::seq([(&gate_lhs).into(), claim_lhs, common.y_int.is_some().into()]),
            ExactValue::seq([
                ExactValue::int(scaled_det.clone()),
                scaled_det.into(),
                true.into(),
            ]),
        )
        .elapsed_since(start))
}

fn thm2_applicable(ctx: &FieldCtx) -> Option<Report> {
    let q = ctx.q();
    (q % 4 != 1 || q < 7)
        .then(|| Report::for_field("thm2", ctx).not_applicable("needs q ≡ 1 (mod 4) and q ≥ 7"))
}

/// `y_q ∈ Z` and `−a_d(q) y_q² = 2^n det T_q(d)` for one nonsquare `d`, where
/// `y_q = i^{(n−2)/2} I_q √(q−1)`.
pub fn verify_thm2(ctx: &FieldCtx, d: FieldElement) -> Result<Report> {
    Ok(verify_thm2_for(ctx, &[d])?.remove(0))
}

/// As [`verify_thm2`] for several `d`, sharing the `d`-independent work.
/// Returns a single not-applicable report when `q` is out of range.
pub fn verify_thm2_for(ctx: &FieldCtx, ds: &[FieldElement]) -> Result<Vec<Report>> {
    let start = Instant::now();
    if let Some(r) = thm2_applicable(ctx) {
        return Ok(vec![r.elapsed_since(start)]);
    }
    if let Some(bad) = ds.iter().find(|d| !ctx.is_nonsquare(**d)) {
        return invalid(format!("d = {bad} is not a nonsquare"));
    }
    let common = one_mod_four(ctx)?;
    ds.iter()
        .map(|&d| thm2_report(ctx, &common, d, start))
        .collect()
}

/// As [`verify_thm2`] for every nonsquare `d`.
pub fn verify_thm2_all(ctx: &FieldCtx) -> Result<Vec<Report>> {
    let ds: Vec<FieldElement> = ctx.nonsquares().collect();
    verify_thm2_for(ctx, &ds)
}

/// `z_p = y_p / 2^{n−1}`, the normalisation under which
/// `|det T_p(d)| / (2^n b_p) = z_p²`.
fn z_from_y(y: &BigInt, n: u32) -> BigRational {
    BigRational::new(y.clone(), pow2(n - 1))
}

/// For a prime `p ≡ 1 (mod 4)`: `z_p ∈ Z`, `(z_p/p) = 1`, and
/// `|det T_p(d)| / (2^{(p−1)/2} b_p) = z_p²` for every nonsquare `d`, the
/// quotient being independent of `d`.
pub fn verify_corollary(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new("corollary").param("p", ctx.p() as i64);
    let report = Report {
        generator: Some(ctx.coeffs(ctx.generator())),
        ..report
    };
    if ctx.f() != 1 || ctx.p() % 4 != 1 {
        return Ok(report
            .not_applicable("needs a prime p ≡ 1 (mod 4)")
            .elapsed_since(start));
    }
    let p = ctx.p() as u64;
    let n = ctx.n();
    let common = one_mod_four(ctx)?;
    let decomp = decompose_two_square(p)?;
    let b = BigInt::from(decomp.b);

    let mut quotients = BTreeSet::new();
    for d in ctx.nonsquares() {
        let det_t = bareiss_det(&build_tq(ctx, d)?)?;
        quotients.insert(BigRational::new(det_t.abs(), pow2(n) * &b));
    }

    let report = report
        .witness("y_p", &common.y)
        .witness("b_p", decomp.b)
        .witness("c_p", decomp.c);
    let Some(y) = &common.y_int else {
        let lhs = ExactValue::seq([false.into(), "undefined".into(), seq_rat(&quotients)]);
        return Ok(report
            .compare(lhs, "y_p is not a rational integer")
            .elapsed_since(start));
    };
    let z = z_from_y(y, n);
    let z_sq = &z * &z;
    let symbol: ExactValue = if z.is_integer() {
        legendre_big(&z.to_integer(), p as i64)?.into()
    } else {
        "undefined".into()
    };
    let literal = BigRational::new(y.clone(), pow2((n - 2) / 2));
    let quotient_is_square = quotients.len() == 1 && {
        let qv = quotients.first().unwrap();
        qv.is_integer() && is_nonzero_square(&qv.to_integer())
    };
    Ok(report
        .witness("z_p", ExactValue::rational(&z))
        .witness("z_p^2", ExactValue::rational(&z_sq))
        .witness("z_literal", ExactValue::rational(&literal))
        .witness(
            "z_literal_matches",
            quotients.iter().all(|qv| *qv == &literal * &literal),
        )
        .witness("quotient_is_positive_square", quotient_is_square)
        .compare(
            ExactValue::seq([z.is_integer().into(), symbol, seq_rat(&quotients)]),
            ExactValue::seq([
                true.into(),
                ExactValue::int(1),
                ExactValue::seq([ExactValue::rational(&z_sq)]),
            ]),
        )
        .elapsed_since(start))
}

fn seq_rat(values: &BTreeSet<BigRational>) -> ExactValue {
    ExactValue::seq(values.iter().map(ExactValue::rational))
}

/// Records whether `4 z_p / (p − 1)` is an integer and, if so, the Legendre
/// symbol of `t_p = 4 z_p / (p − 1)`. Never asserts.
pub fn scan_sun_conjecture(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new("sun-scan").param("p", ctx.p() as i64);
    let report = Report {
        generator: Some(ctx.coeffs(ctx.generator())),
        ..report
    };
    if ctx.f() != 1 || ctx.p() % 4 != 1 {
        return Ok(report
            .not_applicable("needs a prime p ≡ 1 (mod 4)")
            .elapsed_since(start));
    }
    let p = ctx.p() as i64;
    let common = one_mod_four(ctx)?;
    let Some(y) = &common.y_int else {
        return Ok(report
            .witness("verdict", "undefined")
            .observe("y_p is not a rational integer", p - 1)
            .elapsed_since(start));
    };
    let z = z_from_y(y, ctx.n());
    let four_z = &z * BigRational::from_integer(4.into());
    let ratio = &four_z / BigRational::from_integer((p - 1).into());
    let mut report = report
        .witness("z_p", ExactValue::rational(&z))
        .witness("ratio", ExactValue::rational(&ratio));
    if ratio.is_integer() {
        let t = ratio.to_integer();
        let symbol = if t.is_zero() {
            0
        } else {
            i64::from(legendre_big(&t, p)?)
        };
        report = report
            .witness("verdict", "integral")
            .witness("t_p", &t)
            .witness("t_p_symbol", symbol);
    } else {
        report = report.witness("verdict", "non-integral");
    }
    Ok(report
        .observe(ExactValue::rational(&four_z), p - 1)
        .elapsed_since(start))
}
