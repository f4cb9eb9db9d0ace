//! Exact arithmetic in `Z[ζ_m]` and `Q(ζ_m)`.
//!
//! Values are stored in the power basis `1, ζ, …, ζ^{φ(m)−1}` reduced modulo
//! the m-th cyclotomic polynomial, so two equal algebraic numbers always
//! have identical coefficient vectors. Moving a value to a larger conductor
//! is an explicit call ([`CycInt::lift_to`]); mixing conductors in arithmetic
//! is an error.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::nt_base::kronecker_symbol;

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Φ_m`, low degree first, computed by exact division of `x^m − 1` by the
/// `Φ_d` for proper divisors `d` of `m`. Results are memoised.
pub fn cyclotomic_poly(m: u64) -> Arc<Vec<i64>> {
    assert!(m >= 1, "cyclotomic polynomial needs m ≥ 1");
    if let Some(hit) = phi_cache().read().unwrap().get(&m) {
        return hit.clone();
    }
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = exact_div_monic(&num, &cyclotomic_poly(d));
    }
    let out = Arc::new(num);
    phi_cache().write().unwrap().insert(m, out.clone());
    out
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut out = m;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out = out / d * (d - 1);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out = out / n * (n - 1);
    }
    out
}

/// Reduces an arbitrary-length coefficient vector in `ζ_m` to canonical form.
fn reduce(m: u64, mut v: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_poly(m);
    let deg = phi.len() - 1;
    // fold exponents ≥ m using ζ^m = 1 first; keeps the division short
    if v.len() > m as usize {
        let tail = v.split_off(m as usize);
        for (i, c) in tail.into_iter().enumerate() {
            v[i % m as usize] += c;
        }
    }
    for k in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[k]);
        if c.is_zero() {
            continue;
        }
        let base = k - deg;
        for (i, &pc) in phi[..deg].iter().enumerate() {
            match pc {
                0 => {}
                1 => v[base + i] -= &c,
                -1 => v[base + i] += &c,
                _ => v[base + i] -= &c * pc,
            }
        }
    }
    v.resize(deg, BigInt::zero());
    v
}

/// An element of `Z[ζ_m]` in canonical power-basis form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    m: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    /// Builds from coefficients of `1, ζ, ζ², …` (any length), reducing.
    pub fn from_coeffs(m: u64, coeffs: Vec<BigInt>) -> Self {
        assert!(m >= 1, "conductor must be positive");
        CycInt {
            m,
            coeffs: reduce(m, coeffs),
        }
    }

    pub fn from_i64_coeffs(m: u64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(m, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Σ counts[e] ζ^e` for a table of exponent multiplicities.
    pub fn from_exponent_counts(m: u64, counts: &[i64]) -> Self {
        Self::from_i64_coeffs(m, counts)
    }

    pub fn zero(m: u64) -> Self {
        CycInt {
            m,
            coeffs: vec![BigInt::zero(); euler_phi(m) as usize],
        }
    }

    pub fn from_int(m: u64, v: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[0] = v.into();
        out
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// `ζ_m^e` for any integer exponent.
    pub fn zeta_pow(m: u64, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self::from_coeffs(m, v)
    }

    pub fn zeta(m: u64) -> Self {
        Self::zeta_pow(m, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &CycInt) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ConductorMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn checked_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.m));
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(CycInt {
            m: self.m,
            coeffs: reduce(self.m, out),
        })
    }

    fn zip(&self, other: &CycInt, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> CycInt {
        let mut base = self.clone();
        let mut acc = CycInt::one(self.m);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divides every coefficient by `k`, if all divisions are exact.
    pub fn div_int_exact(&self, k: &BigInt) -> Option<CycInt> {
        if k.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quot, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return None;
            }
            coeffs.push(quot);
        }
        Some(CycInt { m: self.m, coeffs })
    }

    /// The automorphism `σ_a : ζ ↦ ζ^a`.
    pub fn galois(&self, a: i64) -> Result<CycInt> {
        let m = self.m as i64;
        if a.gcd(&m) != 1 {
            return invalid(format!("σ_{a} is not an automorphism of Q(ζ_{m})"));
        }
        let mut v = vec![BigInt::zero(); self.m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(a * i as i64).rem_euclid(m) as usize] += c;
        }
        Ok(CycInt::from_coeffs(self.m, v))
    }

    /// Re-expresses the value in conductor `target` (a multiple of the
    /// current one) through `ζ_m = ζ_target^{target/m}`.
    pub fn lift_to(&self, target: u64) -> Result<CycInt> {
        if !target.is_multiple_of(self.m) {
            return invalid(format!("cannot lift conductor {} to {target}", self.m));
        }
        let k = (target / self.m) as usize;
        let mut v = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Ok(CycInt::from_coeffs(target, v))
    }

    /// Evaluation under `ζ_m ↦ exp(2πi/m)`. Advisory only; never used to
    /// decide equality.
    pub fn embed_complex(&self) -> Complex64 {
        let m = self.m as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Complex64::from_polar(1.0, 2.0 * PI * i as f64 / m) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    /// `Some(v)` when the value is the rational integer `v`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn to_rat(&self) -> CycRat {
        CycRat {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Exact quotient in `Z[ζ_m]`, or an error if it is not integral.
    pub fn div_exact(&self, den: &CycInt) -> Result<CycInt> {
        let q = field_div(&self.to_rat(), &den.to_rat())?;
        q.to_cyc_int().ok_or_else(|| {
            Error::Inconsistent(format!(
                "{self} is not divisible by {den} in Z[ζ_{}]",
                self.m
            ))
        })
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]_{}", parts.join(","), self.m)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycInt> for &CycInt {
            type Output = CycInt;

            /// Panics on a conductor mismatch; use the `checked_` form to
            /// get an error instead.
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).expect("conductor mismatch")
            }
        }

        impl $tr<CycInt> for CycInt {
            type Output = CycInt;

            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycInt {
    type Output = CycInt;

    fn neg(self) -> CycInt {
        CycInt {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;

    fn neg(self) -> CycInt {
        -&self
    }
}

/// An element of `Q(ζ_m)` in canonical power-basis form.
#[derive(Clone, PartialEq, Eq)]
pub struct CycRat {
    m: u64,
    coeffs: Vec<BigRational>,
}

type QPoly = Vec<BigRational>;

fn qtrim(mut a: QPoly) -> QPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), qtrim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    let lead = &b[db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / lead;
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                rem[k + i] -= &c * bc;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (qtrim(quot), qtrim(rem))
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qtrim(out)
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qtrim(out)
}

impl CycRat {
    pub fn from_coeffs(m: u64, coeffs: Vec<BigRational>) -> Self {
        let phi: Vec<BigRational> = cyclotomic_poly(m)
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let deg = phi.len() - 1;
        let (_, mut rem) = qdivrem(&qtrim(coeffs), &phi);
        rem.resize(deg, BigRational::zero());
        CycRat { m, coeffs: rem }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &CycRat) -> Result<CycRat> {
        if self.m != other.m {
            return Err(Error::ConductorMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(CycRat::from_coeffs(
            self.m,
            qmul(&self.coeffs, &other.coeffs),
        ))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_m` over the rationals.
    pub fn inverse(&self) -> Result<CycRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: QPoly = cyclotomic_poly(self.m)
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        // invariant: s_i · a ≡ r_i (mod Φ)
        let (mut r0, mut r1) = (phi, qtrim(self.coeffs.clone()));
        let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (quot, rem) = qdivrem(&r0, &r1);
            let s2 = qsub(&s0, &qmul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r1.is_empty() {
            return Err(Error::Inconsistent("non-unit in a field".into()));
        }
        let c = r1[0].clone();
        let inv: QPoly = s1.into_iter().map(|x| x / &c).collect();
        Ok(CycRat::from_coeffs(self.m, inv))
    }

    /// `Some` when every coefficient is integral.
    pub fn to_cyc_int(&self) -> Option<CycInt> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(CycInt {
                m: self.m,
                coeffs: self.coeffs.iter().map(|c| c.to_integer()).collect(),
            })
        } else {
            None
        }
    }

    pub fn embed_complex(&self) -> Complex64 {
        let m = self.m as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Complex64::from_polar(1.0, 2.0 * PI * i as f64 / m) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]_{}", parts.join(","), self.m)
    }
}

impl fmt::Debug for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact quotient in `Q(ζ_m)`.
pub fn field_div(num: &CycRat, den: &CycRat) -> Result<CycRat> {
    if num.m != den.m {
        return Err(Error::ConductorMismatch {
            left: num.m,
            right: den.m,
        });
    }
    num.mul(&den.inverse()?)
}

/// `Some(v)` when `x` is the rational integer `v`.
pub fn as_rational_integer(x: &CycRat) -> Option<BigInt> {
    let mut rest = x.coeffs.iter();
    let head = rest.next().cloned().unwrap_or_else(BigRational::zero);
    (rest.all(Zero::is_zero) && head.is_integer()).then(|| head.to_integer())
}

/// `Σ_{x mod m} ζ_m^{x²}`.
pub fn quadratic_gauss_sum(m: u64) -> CycInt {
    let mut counts = vec![0i64; m as usize];
    for x in 0..m {
        counts[(x * x % m) as usize] += 1;
    }
    CycInt::from_exponent_counts(m, &counts)
}

/// `Σ_{x mod m} ζ_m^{a x²}` for odd `m` and `gcd(a, m) = 1`.
pub fn scaled_gauss_sum(a: i64, m: u64) -> Result<CycInt> {
    if m.is_multiple_of(2) {
        return invalid(format!("scaled Gauss sum needs odd m, got {m}"));
    }
    let mi = m as i64;
    if a.gcd(&mi) != 1 {
        return invalid(format!("gcd({a}, {m}) must be 1"));
    }
    let mut counts = vec![0i64; m as usize];
    for x in 0..mi {
        counts[(a * x % mi * x).rem_euclid(mi) as usize] += 1;
    }
    Ok(CycInt::from_exponent_counts(m, &counts))
}

fn is_squarefree(n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Whether `d` is the discriminant of a quadratic number field.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let k = d / 4;
            matches!(k.rem_euclid(4), 2 | 3) && is_squarefree(k.unsigned_abs())
        }
        _ => false,
    }
}

/// `Σ_{x mod |D|, x ≠ 0} (D/x) ζ_{|D|}^x`, the principal square root of `D`.
pub fn sqrt_disc(d: i64) -> Result<CycInt> {
    if !is_fundamental_discriminant(d) {
        return invalid(format!("{d} is not a fundamental discriminant"));
    }
    let m = d.unsigned_abs();
    let mut counts = vec![0i64; m as usize];
    for x in 1..m as i64 {
        counts[x as usize] = kronecker_symbol(d, x)?.value() as i64;
    }
    Ok(CycInt::from_exponent_counts(m, &counts))
}

/// Principal square root of `target` inside `Q(ζ_m)` for the two shapes the
/// verifiers need:
///
/// * `target = m` with `4 | m`: the Gauss-sum quotient `G/(1+ζ_4)`, where
///   `G = Σ_{x mod m} ζ_m^{x²}` and `ζ_4 = ζ_m^{m/4}`;
/// * `m = 2n` with `n` odd and `target = (−1)^{(n−1)/2}·n`: the odd Gauss sum
///   `Σ_{x mod n} ζ_n^{x²}`, lifted to conductor `m`.
pub fn exact_sqrt(m: u64, target: i64) -> Result<CycRat> {
    if m.is_multiple_of(4) && target == m as i64 {
        let g = quadratic_gauss_sum(m).to_rat();
        let one_plus_i = (CycInt::one(m) + CycInt::zeta_pow(m, (m / 4) as i64)).to_rat();
        return field_div(&g, &one_plus_i);
    }
    if m % 4 == 2 {
        let n = m / 2;
        let sign = if ((n - 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        };
        if target == sign * n as i64 {
            return Ok(quadratic_gauss_sum(n).lift_to(m)?.to_rat());
        }
    }
    invalid(format!(
        "no supported square-root construction for {target} in conductor {m}"
    ))
}

/// Same as [`exact_sqrt`], returned as an algebraic integer.
pub fn exact_sqrt_int(m: u64, target: i64) -> Result<CycInt> {
    exact_sqrt(m, target)?
        .to_cyc_int()
        .ok_or_else(|| Error::Inconsistent(format!("√{target} not integral in Z[ζ_{m}]")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(*cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        for m in 1..120 {
            assert_eq!(cyclotomic_poly(m).len() as u64 - 1, euler_phi(m));
            assert_eq!(*cyclotomic_poly(m).last().unwrap(), 1);
        }
    }

    #[test]
    fn ring_examples() {
        let i = CycInt::zeta(4);
        assert_eq!(&i * &i, CycInt::from_int(4, -1));
        let w = CycInt::from_i64_coeffs(3, &[1, 2]);
        assert_eq!(w.pow(2), CycInt::from_int(3, -3));
        assert_eq!(&w + &CycInt::zero(3), w);
        assert!(matches!(
            w.checked_mul(&i),
            Err(Error::ConductorMismatch { .. })
        ));
    }

    #[test]
    fn galois_examples() {
        let i = CycInt::zeta(4);
        assert_eq!(i.galois(3).unwrap(), -&i);
        assert_eq!(
            CycInt::from_int(12, 5).galois(5).unwrap(),
            CycInt::from_int(12, 5)
        );
        let x = CycInt::from_i64_coeffs(5, &[1, 1]);
        assert_eq!(x.galois(2).unwrap(), CycInt::from_i64_coeffs(5, &[1, 0, 1]));
        assert!(x.galois(5).is_err());
        assert!(CycInt::zeta(12).galois(4).is_err());
    }

    #[test]
    fn embedding_examples() {
        let i = CycInt::zeta(4).embed_complex();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!(
            (CycInt::from_int(7, -3).embed_complex() - Complex64::new(-3.0, 0.0)).norm() < 1e-12
        );
        let z = CycInt::from_i64_coeffs(3, &[1, 1]).embed_complex();
        assert!((z - Complex64::new(0.5, 3f64.sqrt() / 2.0)).norm() < 1e-12);
    }

    #[test]
    fn gauss_sum_examples() {
        assert!(quadratic_gauss_sum(2).is_zero());
        let g4 = quadratic_gauss_sum(4);
        assert_eq!(g4, CycInt::from_i64_coeffs(4, &[2, 2]));
        assert!((g4.embed_complex() - Complex64::new(2.0, 2.0)).norm() < 1e-12);
        let g3 = quadratic_gauss_sum(3);
        assert_eq!(g3, CycInt::from_i64_coeffs(3, &[1, 2]));
        assert_eq!(g3.pow(2), CycInt::from_int(3, -3));

        assert_eq!(scaled_gauss_sum(1, 5).unwrap(), quadratic_gauss_sum(5));
        assert_eq!(
            scaled_gauss_sum(2, 3).unwrap(),
            -CycInt::from_i64_coeffs(3, &[1, 2])
        );
        assert_eq!(scaled_gauss_sum(4, 5).unwrap(), quadratic_gauss_sum(5));
        assert!(scaled_gauss_sum(3, 9).is_err());
        assert!(scaled_gauss_sum(1, 4).is_err());
    }

    #[test]
    fn discriminant_roots() {
        assert_eq!(sqrt_disc(-4).unwrap(), CycInt::from_i64_coeffs(4, &[0, 2]));
        for d in [5, -3, -4, 8, -8, 12, -7, 13, 21, 24, -20] {
            let r = sqrt_disc(d).unwrap();
            assert_eq!(r.pow(2), CycInt::from_int(d.unsigned_abs(), d), "D={d}");
        }
        assert!(sqrt_disc(9).is_err());
        assert!(sqrt_disc(-12).is_err());
        assert!(sqrt_disc(1).is_err());
        assert!(sqrt_disc(6).is_err());
    }

    #[test]
    fn exact_sqrt_examples() {
        let r = exact_sqrt_int(12, 12).unwrap();
        assert_eq!(r.pow(2), CycInt::from_int(12, 12));
        assert!((r.embed_complex() - Complex64::new(12f64.sqrt(), 0.0)).norm() < 1e-9);

        let r = exact_sqrt_int(6, -3).unwrap();
        assert_eq!(r, CycInt::from_i64_coeffs(3, &[1, 2]).lift_to(6).unwrap());
        assert_eq!(r.pow(2), CycInt::from_int(6, -3));

        let r = exact_sqrt(4, 4).unwrap();
        assert_eq!(as_rational_integer(&r), Some(big(2)));

        assert!(exact_sqrt(12, 5).is_err());
        assert!(exact_sqrt(6, 3).is_err());
    }

    #[test]
    fn division_examples() {
        let num = CycInt::from_i64_coeffs(4, &[2, 2]).to_rat();
        let den = CycInt::from_i64_coeffs(4, &[1, 1]).to_rat();
        assert_eq!(
            as_rational_integer(&field_div(&num, &den).unwrap()),
            Some(big(2))
        );
        let x = CycInt::from_i64_coeffs(7, &[3, -1, 4]).to_rat();
        assert_eq!(field_div(&x, &CycInt::one(7).to_rat()).unwrap(), x);
        let inv_i = field_div(&CycInt::one(4).to_rat(), &CycInt::zeta(4).to_rat()).unwrap();
        assert_eq!(inv_i.to_cyc_int().unwrap(), -CycInt::zeta(4));
        assert_eq!(
            field_div(&x, &CycInt::zero(7).to_rat()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn rational_integer_extraction() {
        let seven = CycRat::from_coeffs(12, vec![BigRational::from_integer(big(7))]);
        assert_eq!(as_rational_integer(&seven), Some(big(7)));
        assert_eq!(as_rational_integer(&CycInt::zeta(4).to_rat()), None);
        let half = CycRat::from_coeffs(12, vec![BigRational::new(big(3), big(2))]);
        assert_eq!(as_rational_integer(&half), None);
    }

    #[test]
    fn lift_roundtrip() {
        let x = CycInt::from_i64_coeffs(5, &[1, 2, 3, 4]);
        let y = x.lift_to(10).unwrap();
        assert_eq!(y.conductor(), 10);
        assert!((x.embed_complex() - y.embed_complex()).norm() < 1e-9);
        assert!(x.lift_to(12).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for m in [3u64, 5, 7, 8, 9, 12, 15, 20, 24] {
            let x = CycInt::from_i64_coeffs(m, &[2, -1, 3, 0, 1]);
            if x.is_zero() {
                continue;
            }
            let inv = x.to_rat().inverse().unwrap();
            let prod = x.to_rat().mul(&inv).unwrap();
            assert_eq!(as_rational_integer(&prod), Some(big(1)), "m={m}");
        }
    }
}
