//! Elementary integer number theory: quadratic symbols, the floor-sum
//! identities behind the Gauss-lemma variants, two-square decompositions
//! and a few small arithmetic services.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// A value of a quadratic symbol: one of −1, 0, 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub struct SymbolValue(i8);

impl SymbolValue {
    pub const ZERO: SymbolValue = SymbolValue(0);
    pub const ONE: SymbolValue = SymbolValue(1);
    pub const MINUS_ONE: SymbolValue = SymbolValue(-1);

    /// `(-1)^e`.
    pub fn from_parity(e: u64) -> Self {
        if e.is_multiple_of(2) {
            Self::ONE
        } else {
            Self::MINUS_ONE
        }
    }

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl TryFrom<i8> for SymbolValue {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            -1..=1 => Ok(SymbolValue(v)),
            _ => Err(format!("symbol value {v} outside {{-1,0,1}}")),
        }
    }
}

impl From<SymbolValue> for i8 {
    fn from(s: SymbolValue) -> i8 {
        s.0
    }
}

impl From<SymbolValue> for i64 {
    fn from(s: SymbolValue) -> i64 {
        s.0 as i64
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;

    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        SymbolValue(self.0 * rhs.0)
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `p = c² + 4b²` with `c, b > 0`, together with the signed representative
/// `signed_a ∈ {±c}` normalised by `signed_a ≡ 1 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoSquareDecomp {
    pub c: u64,
    pub b: u64,
    pub signed_a: i64,
}

/// Least nonnegative residue `{x}_m`.
pub fn residue(x: i64, m: i64) -> i64 {
    x.rem_euclid(m)
}

/// Jacobi symbol `(a/s)` for odd positive `s`, by binary reciprocity.
pub fn jacobi_symbol(a: i64, s: i64) -> Result<SymbolValue> {
    if s <= 0 || s % 2 == 0 {
        return invalid(format!("Jacobi symbol needs odd positive modulus, got {s}"));
    }
    Ok(jacobi_unchecked(a.rem_euclid(s) as u64, s as u64))
}

fn jacobi_unchecked(mut a: u64, mut n: u64) -> SymbolValue {
    let mut t = 1i8;
    a %= n;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && (n % 8 == 3 || n % 8 == 5) {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        SymbolValue(t)
    } else {
        SymbolValue::ZERO
    }
}

/// Legendre symbol of a big integer modulo an odd prime.
pub fn legendre_big(a: &BigInt, p: i64) -> Result<SymbolValue> {
    let r = a
        .mod_floor(&BigInt::from(p))
        .to_i64()
        .expect("residue fits");
    jacobi_symbol(r, p)
}

/// Kronecker symbol `(b/a)`; `a` is the lower argument.
pub fn kronecker_symbol(b: i64, a: i64) -> Result<SymbolValue> {
    if a == 0 || b == 0 {
        return invalid("Kronecker symbol is defined on nonzero integers only");
    }
    let mut acc = SymbolValue::ONE;
    let mut lower = a;
    if lower < 0 {
        acc = acc
            * if b < 0 {
                SymbolValue::MINUS_ONE
            } else {
                SymbolValue::ONE
            };
        lower = -lower;
    }
    let twos = lower.trailing_zeros();
    if twos > 0 {
        let two = if b % 2 == 0 {
            SymbolValue::ZERO
        } else {
            // (b/2) = (2/|b|)
            match b.unsigned_abs() % 8 {
                1 | 7 => SymbolValue::ONE,
                _ => SymbolValue::MINUS_ONE,
            }
        };
        if twos % 2 == 1 {
            acc = acc * two;
        } else if two.is_zero() {
            acc = SymbolValue::ZERO;
        }
        lower >>= twos;
    }
    Ok(acc * jacobi_symbol(b, lower)?)
}

fn require_coprime(a: i64, m: i64) -> Result<()> {
    if a.gcd(&m) != 1 {
        return invalid(format!("gcd({a}, {m}) must be 1"));
    }
    Ok(())
}

fn require_odd_positive(s: i64) -> Result<()> {
    if s <= 0 || s % 2 == 0 {
        return invalid(format!("expected a positive odd integer, got {s}"));
    }
    Ok(())
}

/// `#{1 ≤ x ≤ (s−1)/2 : {ax}_s > s/2}`; its parity gives `(a/s)`.
pub fn gauss_lemma_count(a: i64, s: i64) -> Result<u64> {
    require_odd_positive(s)?;
    require_coprime(a, s)?;
    Ok((1..=(s - 1) / 2)
        .filter(|&x| 2 * residue(a * x, s) > s)
        .count() as u64)
}

/// `K = Σ_{x=1}^{(s−1)/2} ⌊2ax/s⌋`.
pub fn floor_sum_k(a: i64, s: i64) -> Result<u64> {
    require_odd_positive(s)?;
    if a < 1 {
        return invalid(format!("floor sum needs a ≥ 1, got {a}"));
    }
    require_coprime(a, s)?;
    Ok((1..=(s - 1) / 2).map(|x| (2 * a * x / s) as u64).sum())
}

/// `⌊aj/m⌋ − ⌊ai/m⌋ − ⌊a(j−i)/m⌋`, returned raw so that the case where the
/// ordering hypothesis `{ai}_m > {aj}_m` fails stays observable.
pub fn pan_delta(a: i64, m: i64, i: i64, j: i64) -> Result<i64> {
    if m < 2 {
        return invalid(format!("modulus must be ≥ 2, got {m}"));
    }
    require_coprime(a, m)?;
    if !(1 <= i && i < j && j < m) {
        return invalid(format!("need 1 ≤ i < j ≤ m−1, got i={i}, j={j}, m={m}"));
    }
    Ok((a * j).div_euclid(m) - (a * i).div_euclid(m) - (a * (j - i)).div_euclid(m))
}

fn lattice_pair(a: i64, m: i64, second_upper: i64) -> Result<(i64, i64)> {
    if a < 1 {
        return invalid(format!("a must be positive, got {a}"));
    }
    if m < 2 || m % 2 != 0 {
        return invalid(format!("m must be even and ≥ 2, got {m}"));
    }
    require_coprime(a, m)?;
    let first = (1..=(a - 1) / 2).map(|x| 2 * m * x / a).sum();
    let second = (1..=second_upper).map(|y| a * y / (2 * m)).sum();
    Ok((first, second))
}

/// `(Σ_{x=1}^{(a−1)/2} ⌊2mx/a⌋, Σ_{y=1}^{m} ⌊ay/2m⌋)`; the two parts add up
/// to `(a−1)m/2`.
pub fn lattice_floor_sums(a: i64, m: i64) -> Result<(i64, i64)> {
    lattice_pair(a, m, m)
}

/// Same as [`lattice_floor_sums`] with the second sum stopping at `m − 1`;
/// the parts then add up to `(a−1)(m−1)/2`.
pub fn lattice_floor_sums_truncated(a: i64, m: i64) -> Result<(i64, i64)> {
    lattice_pair(a, m, m - 1)
}

/// `(−1)^{(a−1)(m−2)/4 + #{1 ≤ x ≤ (m−2)/2 : {ax}_{2m} > m}}`, which agrees
/// with the Kronecker symbol `(2m/a)`.
pub fn key_lemma_sign(a: i64, m: i64) -> Result<SymbolValue> {
    require_odd_positive(a)?;
    if m < 2 || m % 2 != 0 {
        return invalid(format!("m must be even and ≥ 2, got {m}"));
    }
    require_coprime(a, m)?;
    let count = (1..=(m - 2) / 2)
        .filter(|&x| residue(a * x, 2 * m) > m)
        .count() as u64;
    let base = ((a - 1) * (m - 2) / 4) as u64;
    Ok(SymbolValue::from_parity(base + count))
}

/// Deterministic trial-division primality test; adequate at desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// `Some((p, f))` when `q = p^f` for a prime `p`.
pub fn is_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

/// Integer square root of a nonnegative `i64`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Exhaustive search for `p = c² + 4b²` over `c ≤ √p`.
pub fn decompose_two_square(p: u64) -> Result<TwoSquareDecomp> {
    if p % 4 != 1 || !is_prime(p) {
        return invalid(format!("{p} is not a prime ≡ 1 (mod 4)"));
    }
    let mut c = 1;
    while c * c < p {
        let rest = p - c * c;
        if rest.is_multiple_of(4) {
            let b = isqrt(rest / 4);
            if b > 0 && b * b * 4 == rest {
                let signed_a = if c % 4 == 1 { c as i64 } else { -(c as i64) };
                return Ok(TwoSquareDecomp { c, b, signed_a });
            }
        }
        c += 2;
    }
    Err(crate::Error::Inconsistent(format!(
        "no two-square decomposition found for prime {p}"
    )))
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `B_p = Π_{k=1}^{(p−1)/4} C(2k, k)` and its Legendre symbol modulo `p`.
pub fn binomial_product_bp(p: u64) -> Result<(BigInt, SymbolValue)> {
    if p % 4 != 1 || !is_prime(p) {
        return invalid(format!("{p} is not a prime ≡ 1 (mod 4)"));
    }
    let product: BigInt = (1..=(p - 1) / 4).map(|k| binomial(2 * k, k)).product();
    let symbol = legendre_big(&product, p as i64)?;
    Ok((product, symbol))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Factorisation route: Euler's criterion on each prime factor.
    fn jacobi_by_factoring(a: i64, s: i64) -> i8 {
        let mut rest = s;
        let mut acc = 1i8;
        let mut p = 3;
        while rest > 1 {
            while rest % p == 0 {
                rest /= p;
                let r = a.rem_euclid(p);
                let mut e = 1i64;
                for _ in 0..(p - 1) / 2 {
                    e = e * r % p;
                }
                acc *= match e {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
            }
            p += 2;
        }
        acc
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_symbol(1, 9).unwrap(), SymbolValue::ONE);
        assert_eq!(jacobi_symbol(2, 15).unwrap(), SymbolValue::ONE);
        assert_eq!(jacobi_symbol(3, 7).unwrap(), SymbolValue::MINUS_ONE);
        assert!(jacobi_symbol(3, 8).is_err());
        assert!(jacobi_symbol(3, -7).is_err());
        assert_eq!(jacobi_symbol(6, 9).unwrap(), SymbolValue::ZERO);
    }

    #[test]
    fn jacobi_matches_factoring() {
        for s in (1..200).step_by(2) {
            for a in -50..150 {
                assert_eq!(
                    jacobi_symbol(a, s).unwrap().value(),
                    jacobi_by_factoring(a, s),
                    "({a}/{s})"
                );
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_symbol(-5, -1).unwrap(), SymbolValue::MINUS_ONE);
        assert_eq!(kronecker_symbol(3, 2).unwrap(), SymbolValue::MINUS_ONE);
        assert_eq!(kronecker_symbol(5, 1).unwrap(), SymbolValue::ONE);
        assert!(kronecker_symbol(0, 3).is_err());
        assert!(kronecker_symbol(3, 0).is_err());
        assert_eq!(kronecker_symbol(4, 2).unwrap(), SymbolValue::ZERO);
    }

    #[test]
    fn kronecker_defining_rules() {
        for b in (-40i64..40).filter(|&b| b != 0) {
            let sign = if b > 0 { 1 } else { -1 };
            assert_eq!(kronecker_symbol(b, -1).unwrap().value(), sign);
            let two = kronecker_symbol(b, 2).unwrap().value();
            if b % 2 == 0 {
                assert_eq!(two, 0);
            } else {
                assert_eq!(two, jacobi_symbol(2, b.abs()).unwrap().value());
            }
            for a in (1..60).step_by(2) {
                assert_eq!(
                    kronecker_symbol(b, a).unwrap(),
                    jacobi_symbol(b, a).unwrap()
                );
            }
        }
    }

    #[test]
    fn gauss_and_floor_examples() {
        assert_eq!(gauss_lemma_count(2, 7).unwrap(), 2);
        assert_eq!(gauss_lemma_count(1, 9).unwrap(), 0);
        assert_eq!(gauss_lemma_count(3, 7).unwrap(), 1);
        assert!(gauss_lemma_count(3, 9).is_err());
        assert_eq!(floor_sum_k(2, 7).unwrap(), 2);
        assert_eq!(floor_sum_k(1, 9).unwrap(), 0);
        assert_eq!(floor_sum_k(5, 3).unwrap(), 3);
        assert!(floor_sum_k(3, 9).is_err());
    }

    #[test]
    fn pan_delta_examples() {
        assert_eq!(pan_delta(2, 5, 2, 3).unwrap(), 1);
        assert_eq!(pan_delta(1, 5, 1, 2).unwrap(), 0);
        assert_eq!(pan_delta(3, 7, 3, 5).unwrap(), 1);
        assert!(pan_delta(3, 7, 5, 3).is_err());
        assert!(pan_delta(3, 7, 1, 7).is_err());
        assert!(pan_delta(2, 4, 1, 2).is_err());
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(lattice_floor_sums(3, 4).unwrap(), (2, 2));
        assert_eq!(lattice_floor_sums(1, 6).unwrap(), (0, 0));
        // ⌊4/5⌋ + ⌊8/5⌋ = 1 and ⌊5/4⌋ + ⌊10/4⌋ = 3
        assert_eq!(lattice_floor_sums(5, 2).unwrap(), (1, 3));
        assert_eq!(lattice_floor_sums_truncated(3, 4).unwrap(), (2, 1));
        assert!(lattice_floor_sums(3, 5).is_err());
        assert!(lattice_floor_sums(3, 6).is_err());
    }

    #[test]
    fn key_lemma_examples() {
        assert_eq!(key_lemma_sign(3, 4).unwrap(), SymbolValue::MINUS_ONE);
        assert_eq!(key_lemma_sign(3, 2).unwrap(), SymbolValue::ONE);
        assert_eq!(
            key_lemma_sign(5, 4).unwrap(),
            kronecker_symbol(8, 5).unwrap()
        );
        assert_eq!(key_lemma_sign(5, 4).unwrap(), SymbolValue::MINUS_ONE);
        assert!(key_lemma_sign(4, 3).is_err());
        assert!(key_lemma_sign(3, 5).is_err());
        assert!(key_lemma_sign(3, 6).is_err());
    }

    #[test]
    fn two_square_examples() {
        assert_eq!(
            decompose_two_square(5).unwrap(),
            TwoSquareDecomp {
                c: 1,
                b: 1,
                signed_a: 1
            }
        );
        assert_eq!(
            decompose_two_square(13).unwrap(),
            TwoSquareDecomp {
                c: 3,
                b: 1,
                signed_a: -3
            }
        );
        assert_eq!(
            decompose_two_square(29).unwrap(),
            TwoSquareDecomp {
                c: 5,
                b: 1,
                signed_a: 5
            }
        );
        assert!(decompose_two_square(7).is_err());
        assert!(decompose_two_square(21).is_err());
    }

    #[test]
    fn two_square_round_trip() {
        for p in (5..2000).filter(|&p| p % 4 == 1 && is_prime(p)) {
            let d = decompose_two_square(p).unwrap();
            assert_eq!(d.c * d.c + 4 * d.b * d.b, p);
            assert_eq!(d.signed_a.rem_euclid(4), 1);
            assert_eq!(d.signed_a.unsigned_abs(), d.c);
            // exhaustive recount: the representation is unique
            let hits = (1..p)
                .flat_map(|c| (1..p).map(move |b| (c, b)))
                .take_while(|&(c, _)| c * c < p)
                .filter(|&(c, b)| c * c + 4 * b * b == p)
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn binomial_product_examples() {
        assert_eq!(
            binomial_product_bp(5).unwrap(),
            (BigInt::from(2), SymbolValue::MINUS_ONE)
        );
        assert_eq!(
            binomial_product_bp(13).unwrap(),
            (BigInt::from(240), SymbolValue::MINUS_ONE)
        );
        let (b17, s17) = binomial_product_bp(17).unwrap();
        assert_eq!(b17, BigInt::from(2 * 6 * 20 * 70));
        assert_eq!(s17, SymbolValue::ONE);
        assert_eq!(s17, jacobi_symbol(2, 17).unwrap());
        assert!(binomial_product_bp(7).is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(343), Some((7, 3)));
        assert_eq!(is_prime_power(2), Some((2, 1)));
        assert_eq!(is_prime_power(1), None);
    }

    #[test]
    fn symbol_value_serde_rejects_out_of_range() {
        assert!(SymbolValue::try_from(2).is_err());
        assert_eq!(SymbolValue::try_from(-1).unwrap(), SymbolValue::MINUS_ONE);
    }
}
