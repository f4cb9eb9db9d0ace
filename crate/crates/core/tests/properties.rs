//! Cross-module invariants checked against independent oracles.

use jsum_core::characters::{jacobi_sum, product_iq, trace_ad};
use jsum_core::cyclotomic::{euler_phi, exact_sqrt_int};
use jsum_core::field::{make_field_q, FieldCtx, GeneratorChoice};
use jsum_core::matrices::{
    almost_circulant_det_via_eigs, bareiss_det, build_almost_circulant, build_mq, build_nq,
    build_tq, char_poly, int_vector, mq_minus_one_vector, IntMatrix, Integers,
};
use jsum_core::nt_base::{
    decompose_two_square, is_prime, is_prime_power, jacobi_symbol, kronecker_symbol,
};
use jsum_core::theorems::{verify_thm1, verify_thm2_all};
use jsum_core::{CycInt, FieldElement};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use proptest::prelude::*;
use proptest::sample::select;

fn odd_prime_powers(hi: u64) -> Vec<u64> {
    (3..=hi)
        .filter(|&q| q % 2 == 1 && is_prime_power(q).is_some())
        .collect()
}

fn small_primes(hi: u64) -> Vec<u64> {
    (2..=hi).filter(|&p| is_prime(p)).collect()
}

fn field(q: u64) -> FieldCtx {
    make_field_q(q, GeneratorChoice::Least).unwrap()
}

/// Euler's criterion for an odd prime `p`.
fn euler_legendre(a: i64, p: i64) -> i8 {
    let r = a.rem_euclid(p);
    if r == 0 {
        return 0;
    }
    let mut acc = 1i64;
    let (mut base, mut e) = (r, (p - 1) / 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// Kronecker symbol `(b/a)` from the factorisation of `a`.
fn kronecker_oracle(b: i64, a: i64) -> i8 {
    let mut acc: i8 = if a < 0 && b < 0 { -1 } else { 1 };
    let mut rest = a.abs();
    let mut p = 2;
    while rest > 1 {
        while rest % p == 0 {
            rest /= p;
            acc *= if p == 2 {
                match b.rem_euclid(8) {
                    1 | 7 => 1,
                    3 | 5 => -1,
                    _ => 0,
                }
            } else {
                euler_legendre(b, p)
            };
        }
        p += 1;
    }
    acc
}

fn embed(x: &CycInt) -> Complex64 {
    x.embed_complex()
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-6 * b.norm().max(1.0)
}

/// `J(χ^i, χ^j)` summed in floating point from discrete logarithms.
fn jacobi_float(ctx: &FieldCtx, i: i64, j: i64) -> Complex64 {
    let m = (ctx.q() - 1) as f64;
    let one = FieldElement::ONE;
    let mut total = Complex64::new(0.0, 0.0);
    for x in ctx.nonzero() {
        let y = ctx.sub(one, x);
        if y.is_zero() {
            continue;
        }
        let e = i * ctx.dlog(x).unwrap() as i64 + j * ctx.dlog(y).unwrap() as i64;
        total += Complex64::from_polar(1.0, std::f64::consts::TAU * e as f64 / m);
    }
    total
}

/// Leibniz expansion for small integer matrices.
fn leibniz(rows: &[Vec<i64>]) -> i64 {
    fn go(rows: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i64 {
        if row == rows.len() {
            return 1;
        }
        let mut total = 0;
        let mut sign = 1;
        for col in 0..rows.len() {
            if used[col] {
                continue;
            }
            used[col] = true;
            total += sign * rows[row][col] * go(rows, row + 1, used);
            used[col] = false;
            sign = -sign;
        }
        total
    }
    go(rows, 0, &mut vec![false; rows.len()])
}

fn cyc_strategy() -> impl Strategy<Value = (u64, Vec<i64>, Vec<i64>)> {
    (1u64..=30).prop_flat_map(|m| {
        let len = m as usize;
        (
            Just(m),
            prop::collection::vec(-20i64..=20, len),
            prop::collection::vec(-20i64..=20, len),
        )
    })
}

fn square_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..=6, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn jacobi_symbol_matches_euler_criterion(a in -500i64..500, s in (0i64..200).prop_map(|k| 2 * k + 1)) {
        let mut expected = 1i8;
        let mut rest = s;
        for p in small_primes(s as u64).into_iter().filter(|&p| p > 2).map(|p| p as i64) {
            while rest % p == 0 {
                rest /= p;
                expected *= euler_legendre(a, p);
            }
        }
        prop_assert_eq!(jacobi_symbol(a, s).unwrap().value(), expected);
    }

    #[test]
    fn kronecker_symbol_matches_factorisation(b in -300i64..300, a in -300i64..300) {
        prop_assume!(a != 0 && b != 0);
        prop_assert_eq!(kronecker_symbol(b, a).unwrap().value(), kronecker_oracle(b, a));
    }

    #[test]
    fn cyclotomic_ring_ops_commute_with_embedding((m, a, b) in cyc_strategy()) {
        let (x, y) = (CycInt::from_i64_coeffs(m, &a), CycInt::from_i64_coeffs(m, &b));
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU / m as f64);
        let raw = a.iter().enumerate().map(|(k, &c)| zeta.powu(k as u32) * c as f64).sum::<Complex64>();
        prop_assert!(close(embed(&x), raw));
        prop_assert!(close(embed(&(&x + &y)), embed(&x) + embed(&y)));
        prop_assert!(close(embed(&(&x * &y)), embed(&x) * embed(&y)));
        prop_assert_eq!(x.coeffs().len() as u64, euler_phi(m));
    }

    #[test]
    fn galois_action_is_a_ring_homomorphism((m, a, b) in cyc_strategy(), k in 1i64..60) {
        prop_assume!(k.gcd(&(m as i64)) == 1);
        let (x, y) = (CycInt::from_i64_coeffs(m, &a), CycInt::from_i64_coeffs(m, &b));
        let s = |v: &CycInt| v.galois(k).unwrap();
        prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
        prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / m as f64);
        let raw = a.iter().enumerate().map(|(e, &c)| zeta.powu(e as u32) * c as f64).sum::<Complex64>();
        prop_assert!(close(embed(&s(&x)), raw));
    }

    #[test]
    fn exact_division_inverts_multiplication((m, a, b) in cyc_strategy()) {
        let (x, y) = (CycInt::from_i64_coeffs(m, &a), CycInt::from_i64_coeffs(m, &b));
        prop_assume!(!y.is_zero());
        prop_assert_eq!((&x * &y).div_exact(&y).unwrap(), x);
    }

    #[test]
    fn jacobi_sums_match_float_summation(q in select(odd_prime_powers(64)), i in 0i64..64, j in 0i64..64) {
        let ctx = field(q);
        let value = jacobi_sum(&ctx, i, j).value;
        prop_assert!(close(embed(&value), jacobi_float(&ctx, i, j)));
    }

    #[test]
    fn jacobi_sums_have_absolute_value_sqrt_q(q in select(odd_prime_powers(64)), i in 1i64..64, j in 1i64..64) {
        let m = (q - 1) as i64;
        prop_assume!(i % m != 0 && j % m != 0 && (i + j) % m != 0);
        let ctx = field(q);
        let value = jacobi_sum(&ctx, i, j).value;
        prop_assert_eq!(&value * &value.galois(-1).unwrap(), CycInt::from_int(m as u64, q));
    }

    #[test]
    fn galois_permutes_jacobi_sums(q in select(odd_prime_powers(50)), i in 0i64..50, j in 0i64..50, k in 1i64..50) {
        let m = (q - 1) as i64;
        prop_assume!(k.gcd(&m) == 1);
        let ctx = field(q);
        let lhs = jacobi_sum(&ctx, i, j).value.galois(k).unwrap();
        prop_assert_eq!(lhs, jacobi_sum(&ctx, k * i, k * j).value);
    }

    #[test]
    fn bareiss_matches_leibniz(rows in square_matrix(6)) {
        let det = bareiss_det(&IntMatrix::from_rows(&rows).unwrap()).unwrap();
        prop_assert_eq!(det, BigInt::from(leibniz(&rows)));
    }

    #[test]
    fn char_poly_constant_term_is_signed_det(rows in square_matrix(6)) {
        let mat = IntMatrix::from_rows(&rows).unwrap();
        let poly = char_poly(&mat).unwrap();
        let n = rows.len();
        prop_assert_eq!(poly.len(), n + 1);
        prop_assert_eq!(&poly[n], &BigInt::from(1));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(&poly[0], &(bareiss_det(&mat).unwrap() * sign));
        let trace: i64 = (0..n).map(|i| rows[i][i]).sum();
        prop_assert_eq!(&poly[n - 1], &BigInt::from(-trace));
    }

    #[test]
    fn almost_circulant_routes_agree(v in prop::collection::vec(-5i64..=5, 2..=9)) {
        let direct = bareiss_det(&build_almost_circulant(Integers, &int_vector(&v)).unwrap()).unwrap();
        prop_assert_eq!(direct, almost_circulant_det_via_eigs(&v).unwrap());
    }

    #[test]
    fn square_order_does_not_change_determinants(q in select(odd_prime_powers(50)), seed in any::<u64>()) {
        let ctx = field(q);
        let n = ctx.n() as usize;
        let mut order: Vec<usize> = (2..=n).collect();
        let mut state = seed;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let shuffled = ctx.with_square_order(&order).unwrap();
        prop_assert_eq!(bareiss_det(&build_nq(&ctx)).unwrap(), bareiss_det(&build_nq(&shuffled)).unwrap());
        let g = ctx.generator();
        prop_assert_eq!(
            bareiss_det(&build_mq(&ctx, g).unwrap()).unwrap(),
            bareiss_det(&build_mq(&shuffled, g).unwrap()).unwrap()
        );
        if q % 4 == 1 {
            prop_assert_eq!(
                bareiss_det(&build_tq(&ctx, g).unwrap()).unwrap(),
                bareiss_det(&build_tq(&shuffled, g).unwrap()).unwrap()
            );
        }
    }
}

#[test]
fn exact_square_roots_square_correctly() {
    for m in (4..=60).step_by(4) {
        let r = exact_sqrt_int(m, m as i64).unwrap();
        assert_eq!(&r * &r, CycInt::from_int(m, m));
        assert!(
            close(embed(&r), Complex64::new((m as f64).sqrt(), 0.0)),
            "m={m}"
        );
    }
    for n in (3..=41u64).step_by(2) {
        let target = if n % 4 == 1 { n as i64 } else { -(n as i64) };
        let r = exact_sqrt_int(2 * n, target).unwrap();
        assert_eq!(&r * &r, CycInt::from_int(2 * n, target));
        let expected = if target > 0 {
            Complex64::new((n as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (n as f64).sqrt())
        };
        assert!(close(embed(&r), expected), "n={n}");
    }
}

#[test]
fn square_roots_transform_by_quadratic_character() {
    for n in [3u64, 5, 7, 11, 13, 15, 21] {
        let m = 2 * n;
        let target = if n % 4 == 1 { n as i64 } else { -(n as i64) };
        let r = exact_sqrt_int(m, target).unwrap();
        for a in (1..m as i64).filter(|a| a.gcd(&(m as i64)) == 1) {
            let sign = jacobi_symbol(a, n as i64).unwrap().value();
            assert_eq!(
                r.galois(a).unwrap(),
                r.scale(&BigInt::from(sign)),
                "n={n} a={a}"
            );
        }
    }
}

#[test]
fn frobenius_trace_is_four_b() {
    for p in small_primes(200).into_iter().filter(|p| p % 4 == 1) {
        let ctx = field(p);
        let b = decompose_two_square(p).unwrap().b as i64;
        for d in ctx.nonsquares() {
            assert_eq!(trace_ad(&ctx, d).unwrap().abs(), 4 * b, "p={p}");
        }
    }
}

#[test]
fn mq_minus_one_is_circulant() {
    for q in odd_prime_powers(60) {
        let ctx = field(q);
        let v = mq_minus_one_vector(&ctx);
        let mq = build_mq(&ctx, ctx.neg(FieldElement::ONE)).unwrap();
        let n = v.len();
        for i in 0..n {
            for j in 0..n {
                let expected = BigInt::from(v[(j + n - i) % n]);
                assert_eq!(mq.get(i, j), &expected, "q={q} ({i},{j})");
            }
        }
    }
}

#[test]
fn headline_identities_hold_for_another_generator() {
    for q in odd_prime_powers(50) {
        let Ok(ctx) = make_field_q(q, GeneratorChoice::Nth(1)) else {
            continue;
        };
        let least = field(q);
        if q % 4 == 3 {
            let (a, b) = (verify_thm1(&ctx).unwrap(), verify_thm1(&least).unwrap());
            assert!(a.passed(), "{a:?}");
            assert_eq!(a.witnesses["det_N"], b.witnesses["det_N"]);
        } else if q > 5 {
            assert!(
                verify_thm2_all(&ctx).unwrap().iter().all(|r| r.passed()),
                "q={q}"
            );
        }
        let (x, y) = (product_iq(&ctx), product_iq(&least));
        assert_eq!(&x * &x, &y * &y, "q={q}");
    }
}
