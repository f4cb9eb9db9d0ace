//! Multiplicative characters of `F_q^×` and the exact character sums built
//! from them: Jacobi sums, the `λ_k(d)` eigen-sums, the product `I_q`, the
//! Frobenius trace `a_d(q)` and reduction modulo a prime above `p`.
//!
//! Characters are powers of the generator `χ(g^t) = ζ_{q−1}^t` attached to the
//! field's fixed generator `g`. Exponents live in `[0, q−2]`; negative
//! exponents are normalised modulo `q − 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::cyclotomic::CycInt;
use crate::error::{invalid, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::nt_base::SymbolValue;

/// The character `χ_q^k`.
#[derive(Clone, Copy, Debug)]
pub struct Character<'a> {
    ctx: &'a FieldCtx,
    k: u32,
}

impl<'a> Character<'a> {
    pub fn new(ctx: &'a FieldCtx, k: i64) -> Self {
        Character {
            ctx,
            k: normalize_exp(ctx, k),
        }
    }

    /// The quadratic character `φ = χ^n`.
    pub fn quadratic(ctx: &'a FieldCtx) -> Self {
        Character { ctx, k: ctx.n() }
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    /// Exponent `e` with `χ^k(x) = ζ^e`, or `None` at zero.
    pub fn exponent_at(&self, x: FieldElement) -> Option<u32> {
        if x.is_zero() {
            return None;
        }
        let m = (self.ctx.q() - 1) as u64;
        Some((self.k as u64 * self.ctx.dlog_unchecked(x) as u64 % m) as u32)
    }

    pub fn eval(&self, x: FieldElement) -> CycInt {
        char_eval(self, x)
    }
}

/// Conductor of every character value over `ctx`.
pub fn conductor(ctx: &FieldCtx) -> u64 {
    (ctx.q() - 1) as u64
}

fn normalize_exp(ctx: &FieldCtx, k: i64) -> u32 {
    k.rem_euclid((ctx.q() - 1) as i64) as u32
}

/// `χ^k(x)`, with `χ^k(0) = 0` for every `k`.
pub fn char_eval(chi: &Character<'_>, x: FieldElement) -> CycInt {
    let m = conductor(chi.ctx);
    match chi.exponent_at(x) {
        None => CycInt::zero(m),
        Some(e) => CycInt::zeta_pow(m, e as i64),
    }
}

/// An exact Jacobi sum `J_q(χ^i, χ^j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiValue {
    pub value: CycInt,
    pub i: u32,
    pub j: u32,
}

/// `J_q(χ^i, χ^j) = Σ_{x ∈ F_q} χ^i(x) χ^j(1 − x)` by direct summation.
pub fn jacobi_sum(ctx: &FieldCtx, i: i64, j: i64) -> JacobiValue {
    let m = conductor(ctx) as usize;
    let (i, j) = (normalize_exp(ctx, i), normalize_exp(ctx, j));
    let mut counts = vec![0i64; m];
    for x in ctx.elements() {
        let y = ctx.sub(FieldElement::ONE, x);
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let e = (i as usize * ctx.dlog_unchecked(x) as usize
            + j as usize * ctx.dlog_unchecked(y) as usize)
            % m;
        counts[e] += 1;
    }
    JacobiValue {
        value: CycInt::from_exponent_counts(m as u64, &counts),
        i,
        j,
    }
}

/// Both sides of `J(χ^i, χ^j) = (−1)^i J(χ^i, χ^{−(i+j)})`, each summed
/// independently.
pub fn jacobi_transform_check(ctx: &FieldCtx, i: i64, j: i64) -> (CycInt, CycInt) {
    let lhs = jacobi_sum(ctx, i, j).value;
    let rhs = jacobi_sum(ctx, i, -(i + j)).value;
    let rhs = if i.rem_euclid(2) == 1 { -rhs } else { rhs };
    (lhs, rhs)
}

/// Both sides of `J(φ, χ^j) = φ(−1) J(φ, χ^{n−j})`.
pub fn jacobi_phi_reflection(ctx: &FieldCtx, j: i64) -> (CycInt, CycInt) {
    let n = ctx.n() as i64;
    let lhs = jacobi_sum(ctx, n, j).value;
    let rhs = jacobi_sum(ctx, n, n - j).value;
    let minus_one = ctx.neg(FieldElement::ONE);
    let rhs = if ctx.quad_char(minus_one) == SymbolValue::MINUS_ONE {
        -rhs
    } else {
        rhs
    };
    (lhs, rhs)
}

/// `λ_k(d) = Σ_{s ∈ S_q} φ(1 + ds) χ^k(s)` for `d ≠ 0` and `1 ≤ k ≤ n`.
pub fn lambda_k(ctx: &FieldCtx, d: FieldElement, k: i64) -> Result<CycInt> {
    if d.is_zero() {
        return invalid("λ_k(d) needs d ≠ 0");
    }
    if k < 1 || k > ctx.n() as i64 {
        return invalid(format!("λ_k needs 1 ≤ k ≤ n = {}, got {k}", ctx.n()));
    }
    let m = conductor(ctx) as usize;
    let chi = Character::new(ctx, k);
    let mut counts = vec![0i64; m];
    for &s in &ctx.squares()[1..] {
        let phi = ctx.quad_char(ctx.add(FieldElement::ONE, ctx.mul(d, s)));
        let e = chi.exponent_at(s).expect("nonzero square") as usize;
        counts[e] += i64::from(phi);
    }
    Ok(CycInt::from_exponent_counts(m as u64, &counts))
}

/// Index set `(0, n/2) = {1, …, ⌈n/2⌉ − 1}`.
pub fn half_interval(n: u32) -> std::ops::Range<u32> {
    1..n.div_ceil(2)
}

/// `J(φ, χ^k) − J(φ, χ^{−k})`.
pub fn imaginary_factor(ctx: &FieldCtx, k: i64) -> CycInt {
    let n = ctx.n() as i64;
    jacobi_sum(ctx, n, k).value - jacobi_sum(ctx, n, -k).value
}

/// `I_q = Π_{k ∈ (0, n/2)} (J(φ, χ^k) − J(φ, χ^{−k}))`; the empty product is 1.
pub fn product_iq(ctx: &FieldCtx) -> CycInt {
    half_interval(ctx.n()).fold(CycInt::one(conductor(ctx)), |acc, k| {
        &acc * &imaginary_factor(ctx, k as i64)
    })
}

/// `R_q = Π_{k ∈ (0, (q−1)/4)} (J(φ, χ^k) + J(φ, χ^{−k}))`. Not tied to any
/// checked identity; provided for inspection.
pub fn product_rq(ctx: &FieldCtx) -> CycInt {
    let n = ctx.n() as i64;
    let upper = (ctx.q() - 1).div_ceil(4);
    (1..upper).fold(CycInt::one(conductor(ctx)), |acc, k| {
        let k = k as i64;
        &acc * &(jacobi_sum(ctx, n, k).value + jacobi_sum(ctx, n, -k).value)
    })
}

/// `ζ_{q−1}^{(q−1)/4}`, the fourth root of unity with argument π/2.
pub fn i_unit(ctx: &FieldCtx) -> Result<CycInt> {
    let m = conductor(ctx);
    if !m.is_multiple_of(4) {
        return invalid(format!("Q(ζ_{m}) contains no primitive 4th root of unity"));
    }
    Ok(CycInt::zeta_pow(m, (m / 4) as i64))
}

/// Frobenius trace `a_d(q) = −Σ_x φ(dx³ + x)` of `y² = dx³ + x`, for a
/// nonsquare `d`.
pub fn trace_ad(ctx: &FieldCtx, d: FieldElement) -> Result<i64> {
    if !ctx.is_nonsquare(d) {
        return invalid("a_d(q) is defined here for nonsquare d only");
    }
    Ok(-ctx
        .elements()
        .map(|x| {
            let x3 = ctx.mul(ctx.mul(x, x), x);
            i64::from(ctx.quad_char(ctx.add(ctx.mul(d, x3), x)))
        })
        .sum::<i64>())
}

/// `#X_d(F_q) = q + 1 − a_d(q)`.
pub fn point_count_xd(ctx: &FieldCtx, d: FieldElement) -> Result<i64> {
    Ok(ctx.q() as i64 + 1 - trace_ad(ctx, d)?)
}

/// Reduction `Z[ζ_{p−1}] → F_p` sending `ζ_{p−1}` to the field generator.
/// Paired with `χ(g^t) = ζ^t`, this identifies `χ` with the Teichmüller
/// character of the prime above `p` cut out by `ζ − g`.
pub fn teichmuller_reduce(x: &CycInt, ctx: &FieldCtx) -> Result<u32> {
    if ctx.f() != 1 {
        return invalid("Teichmüller reduction is only defined over prime fields here");
    }
    if x.conductor() != conductor(ctx) {
        return invalid(format!(
            "value has conductor {}, expected p − 1 = {}",
            x.conductor(),
            conductor(ctx)
        ));
    }
    let p = BigInt::from(ctx.p());
    let g = BigInt::from(ctx.generator().index());
    let r = x
        .coeffs()
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * &g + c).mod_floor(&p));
    Ok(r.to_u32().expect("residue below p"))
}
