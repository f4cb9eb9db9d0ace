//! Eigenvalues of `M_q(d)` and `T_q(d)` through characteristic polynomials.

use std::time::Instant;

use super::report::{ExactValue, Report};
use crate::characters::{conductor, lambda_k};
use crate::cyclotomic::CycInt;
use crate::error::Result;
use crate::field::{FieldCtx, FieldElement};
use crate::matrices::{
    build_mq, build_tq, char_poly, expand_from_roots, mul_poly, CycRing, IntMatrix,
};

fn int_char_poly(mat: &IntMatrix, m: u64) -> Result<Vec<CycInt>> {
    Ok(char_poly(mat)?
        .into_iter()
        .map(|c| CycInt::from_int(m, c))
        .collect())
}

/// `char_poly(M_q(d)) = Π_{k=1}^n (x − λ_k(d))`, and for `q ≡ 1 (mod 4)`
/// with nonsquare `d` also `char_poly(T_q(d)) = (x² + n) Π_{k=1}^{n−1} (x − λ_k(d))`.
pub fn verify_eigen_lemmas(ctx: &FieldCtx, d: FieldElement) -> Result<Report> {
    let start = Instant::now();
    let m = conductor(ctx);
    let ring = CycRing(m);
    let n = ctx.n() as i64;
    let lambdas = (1..=n)
        .map(|k| lambda_k(ctx, d, k))
        .collect::<Result<Vec<_>>>()?;

    let mq = build_mq(ctx, d)?;
    let mut lhs = vec![ExactValue::poly(&int_char_poly(&mq, m)?)];
    let mut rhs = vec![ExactValue::poly(&expand_from_roots(&ring, &lambdas))];
    let trace: CycInt = lambdas.iter().fold(CycInt::zero(m), |acc, l| &acc + l);

    let mut report = Report::for_field("eigen", ctx)
        .param("d", ctx.dlog(d)? as i64)
        .witness(
            "lambdas",
            ExactValue::seq(lambdas.iter().map(ExactValue::from)),
        )
        .witness("trace_M", mq.trace())
        .witness("lambda_sum", &trace);

    if ctx.q() % 4 == 1 && ctx.is_nonsquare(d) {
        let tq = build_tq(ctx, d)?;
        let quadratic = [CycInt::from_int(m, n), CycInt::zero(m), CycInt::one(m)];
        let expected = mul_poly(
            &ring,
            &quadratic,
            &expand_from_roots(&ring, &lambdas[..lambdas.len() - 1]),
        );
        lhs.push(ExactValue::poly(&int_char_poly(&tq, m)?));
        rhs.push(ExactValue::poly(&expected));
        report = report.witness("includes_T", true);
    }
    Ok(report
        .compare(ExactValue::Seq(lhs), ExactValue::Seq(rhs))
        .elapsed_since(start))
}
