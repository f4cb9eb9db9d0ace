//! Earlier determinant evaluations and the Fermat-curve zeta function.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::report::{ExactValue, Report};
use crate::characters::{conductor, jacobi_sum};
use crate::cyclotomic::CycInt;
use crate::error::{invalid, Result};
use crate::field::{extend_field, FieldCtx, FieldElement};
use crate::matrices::{
    bareiss_det, build_carlitz, build_sun_sp, build_wuwang, is_nonzero_square, mul_poly, CycRing,
};
use crate::nt_base::decompose_two_square;

/// `det C_p = (−1)^{(p−1)/2} Π_{k=1}^{p−1} J_p(φ, χ^k) = p^{(p−3)/2}`.
pub fn verify_carlitz(ctx: &FieldCtx) -> Result<Report> {
    let start = Instant::now();
    if ctx.f() != 1 {
        return invalid("the Carlitz determinant is indexed by a prime");
    }
    let p = ctx.p() as u64;
    let n = ctx.n() as i64;
    let m = conductor(ctx);
    let det = bareiss_det(&build_carlitz(p)?)?;
    let product = (1..p as i64).fold(CycInt::one(m), |acc, k| &acc * &jacobi_sum(ctx, n, k).value);
    let signed = if n % 2 == 0 { product } else { -product };
    let formula = BigInt::from(p).pow(((p - 3) / 2) as u32);
    let report = Report::new("carlitz").param("p", p as i64);
    Ok(Report {
        generator: Some(ctx.coeffs(ctx.generator())),
        ..report
    }
    .witness("det_C", &det)
    .witness("jacobi_product", &signed)
    .compare(
        ExactValue::seq([det.into(), (&signed).into()]),
        ExactValue::seq([(&formula).into(), (&formula).into()]),
    )
    .elapsed_since(start))
}

/// `det[χ^r(s_i + s_j) + χ^r(s_i − s_j)]_{1≤i,j≤n} = Π_{k=0}^{(q−3)/2} J_q(χ^r, χ^{2k})`
/// for `q ≡ 3 (mod 4)`.
pub fn verify_wuwang(ctx: &FieldCtx, r: i64) -> Result<Report> {
    let start = Instant::now();
    let q = ctx.q() as i64;
    let report = Report::for_field("wuwang", ctx).param("r", r);
    if q % 4 != 3 {
        return Ok(report
            .not_applicable("needs q ≡ 3 (mod 4)")
            .elapsed_since(start));
    }
    if !(1..=q - 2).contains(&r) {
        return invalid(format!("r = {r} outside [1, q−2]"));
    }
    let det = bareiss_det(&build_wuwang(ctx, r))?;
    let product = (0..=(q - 3) / 2).fold(CycInt::one(conductor(ctx)), |acc, k| {
        &acc * &jacobi_sum(ctx, r, 2 * k).value
    });
    Ok(report.compare(&det, &product).elapsed_since(start))
}

/// `−det S_p` is a nonzero square for `p ≡ 3 (mod 4)`; `det S_p / a` is a
/// nonzero square for `p ≡ 1 (mod 4)`, `p = a² + 4b²`, `a ≡ 1 (mod 4)`.
pub fn verify_sp_squares(p: u64) -> Result<Report> {
    let start = Instant::now();
    let det = bareiss_det(&build_sun_sp(p)?)?;
    let report = Report::new("sp")
        .param("p", p as i64)
        .witness("det_S", &det);
    let (value, report) = if p % 4 == 3 {
        (BigRational::from_integer(-det), report)
    } else {
        let a = decompose_two_square(p)?.signed_a;
        (
            BigRational::new(det, a.into()),
            report.witness("signed_a", a),
        )
    };
    let square = value.is_integer() && is_nonzero_square(&value.to_integer());
    let root = if value.is_integer() && !value.is_negative() {
        value.to_integer().sqrt()
    } else {
        BigInt::zero()
    };
    Ok(report
        .witness("root", &root)
        .compare(
            ExactValue::seq([ExactValue::rational(&value), square.into()]),
            ExactValue::seq([ExactValue::int(&root * &root), true.into()]),
        )
        .elapsed_since(start))
}

/// Projective points of `x^m + y^m = z^m` over the field of `ctx`.
pub fn fermat_point_count(ctx: &FieldCtx, m: u64) -> u64 {
    let pw: Vec<FieldElement> = ctx.elements().map(|x| ctx.pow(x, m)).collect();
    let one = FieldElement::ONE;
    // affine chart z = 1: count pairs with x^m + y^m = 1 via the value histogram
    let mut hist = vec![0u64; ctx.q() as usize];
    for v in &pw {
        hist[v.index() as usize] += 1;
    }
    let mut count = 0;
    for v in &pw {
        count += hist[ctx.sub(one, *v).index() as usize];
    }
    // z = 0, y = 1: x^m = −1
    count += pw.iter().filter(|v| ctx.add(**v, one).is_zero()).count() as u64;
    // [1 : 0 : 0] lies on the curve only if 1 = 0
    count
}

/// Expands `P_m(t) = Π (1 + J_q(χ^{li}, χ^{lj}) t)` over `i, j ∈ [1, m−1]`,
/// `i + j ≢ 0 (mod m)`, `l = (q−1)/m`; constant term first.
pub fn fermat_l_polynomial(ctx: &FieldCtx, m: u64) -> Result<(Vec<CycInt>, Vec<CycInt>)> {
    let qm1 = conductor(ctx);
    if m <= 1 || m >= qm1 || !qm1.is_multiple_of(m) {
        return invalid(format!(
            "m = {m} must be a divisor of q − 1 = {qm1} with 1 < m < q − 1"
        ));
    }
    let l = (qm1 / m) as i64;
    let ring = CycRing(qm1);
    let mut sums = Vec::new();
    for i in 1..m as i64 {
        for j in 1..m as i64 {
            if (i + j) % m as i64 != 0 {
                sums.push(jacobi_sum(ctx, l * i, l * j).value);
            }
        }
    }
    let mut poly = vec![CycInt::one(qm1)];
    for s in &sums {
        poly = mul_poly(&ring, &poly, &[CycInt::one(qm1), s.clone()]);
    }
    Ok((poly, sums))
}

/// Integrality and degree of `P_m(t)`, and the point counts over `F_q` and
/// `F_{q²}` against `N(q^r) = q^r + 1 − Σ (−J)^r`.
pub fn fermat_zeta(ctx: &FieldCtx, m: u64) -> Result<Report> {
    let start = Instant::now();
    let (poly, sums) = fermat_l_polynomial(ctx, m)?;
    let integral = poly.iter().all(|c| c.as_integer().is_some());
    let degree = poly.iter().rposition(|c| !c.is_zero()).unwrap_or(0) as u64;
    let q = BigInt::from(ctx.q());
    let qm1 = conductor(ctx);

    let predicted = |r: u32| -> ExactValue {
        let power_sum = sums
            .iter()
            .fold(CycInt::zero(qm1), |acc, j| acc + (-j).pow(r));
        (&(CycInt::from_int(qm1, q.pow(r) + 1) - power_sum)).into()
    };
    let n1 = fermat_point_count(ctx, m);
    let ext = extend_field(ctx, 2)?;
    let n2 = fermat_point_count(&ext.field, m);

    Ok(Report::for_field("fermat", ctx)
        .param("m", m as i64)
        .witness("P_m", ExactValue::poly(&poly))
        .compare(
            ExactValue::seq([integral.into(), degree.into(), n1.into(), n2.into()]),
            ExactValue::seq([
                true.into(),
                ((m - 1) * (m - 2)).into(),
                predicted(1),
                predicted(2),
            ]),
        )
        .elapsed_since(start))
}
