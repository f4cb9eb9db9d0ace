//! Fully tabled finite fields `F_{p^f}`.
//!
//! Elements are stored by their index `Σ c_i p^i` over the polynomial basis
//! `1, x, …, x^{f−1}`. Every context carries a fixed multiplicative generator,
//! a complete discrete-log table and the ordered list of squares
//! `s_0 = 0, s_1 = 1, s_{j+1} = g^{2j}`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::nt_base::{is_prime, SymbolValue};

/// Largest field (number of elements) a context may table.
pub const DEFAULT_TABLE_BUDGET: u64 = 1 << 20;

/// An element of `F_q`, identified by its base-`p` coefficient index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How the multiplicative generator is picked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorChoice {
    /// Least element (by index) of full multiplicative order.
    #[default]
    Least,
    /// The k-th primitive element in index order, counting from 0.
    Nth(usize),
    /// A specific element index; must have full order.
    Explicit(u32),
}

impl fmt::Display for GeneratorChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorChoice::Least => write!(f, "least"),
            GeneratorChoice::Nth(k) => write!(f, "nth:{k}"),
            GeneratorChoice::Explicit(e) => write!(f, "{e}"),
        }
    }
}

impl std::str::FromStr for GeneratorChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "least" {
            Ok(GeneratorChoice::Least)
        } else if let Some(k) = s.strip_prefix("nth:") {
            k.parse()
                .map(GeneratorChoice::Nth)
                .map_err(|e| format!("bad generator rank: {e}"))
        } else {
            s.parse().map(GeneratorChoice::Explicit).map_err(|_| {
                format!("generator must be `least`, `nth:K` or an element index, got `{s}`")
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    f: u32,
    q: u32,
    /// Monic irreducible modulus, low degree first, length `f + 1`.
    modulus: Vec<u32>,
    generator: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
    squares: Vec<FieldElement>,
}

// Polynomials over Z/p, low degree first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm] as u64, p as u64);
    let p64 = p as u64;
    while r.len() > dm {
        let top = r.pop().unwrap() % p64;
        if top == 0 {
            continue;
        }
        let factor = top * lead_inv % p64;
        let shift = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            let idx = shift + i;
            r[idx] = (r[idx] + p64 - factor * c as u64 % p64) % p64;
        }
    }
    poly_trim(r.into_iter().map(|c| (c % p64) as u32).collect())
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    poly_trim(out.into_iter().map(|c| c as u32).collect())
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    e.x.rem_euclid(p as i64) as u64
}

fn digits(index: u32, p: u32, f: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(f as usize);
    let mut v = index;
    for _ in 0..f {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    if deg <= 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=deg/2
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut cand = digits(low as u32, p, d as u32);
            cand.push(1);
            if poly_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn find_modulus(p: u32, f: u32) -> Vec<u32> {
    let count = (p as u64).pow(f);
    for low in 0..count {
        let mut m = digits(low as u32, p, f);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds `F_{p^f}` with the least primitive element as generator.
pub fn make_field(p: u32, f: u32) -> Result<FieldCtx> {
    FieldCtx::new(p, f, GeneratorChoice::Least)
}

/// Builds `F_q` for an odd prime power `q`.
pub fn make_field_q(q: u64, choice: GeneratorChoice) -> Result<FieldCtx> {
    match crate::nt_base::is_prime_power(q) {
        Some((p, f)) if p > 2 => FieldCtx::new(p as u32, f, choice),
        _ => invalid(format!("{q} is not an odd prime power")),
    }
}

impl FieldCtx {
    pub fn new(p: u32, f: u32, choice: GeneratorChoice) -> Result<Self> {
        Self::with_budget(p, f, choice, DEFAULT_TABLE_BUDGET)
    }

    pub fn with_budget(p: u32, f: u32, choice: GeneratorChoice, budget: u64) -> Result<Self> {
        if p == 2 || !is_prime(p as u64) {
            return invalid(format!("characteristic must be an odd prime, got {p}"));
        }
        if f == 0 {
            return invalid("extension degree must be positive");
        }
        let size = (p as u64).checked_pow(f).unwrap_or(u64::MAX);
        if size > budget {
            return Err(Error::TableBudget { size, budget });
        }
        let q = size as u32;
        let modulus = find_modulus(p, f);
        let mut ctx = FieldCtx {
            p,
            f,
            q,
            modulus,
            generator: FieldElement::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            squares: Vec::new(),
        };
        let g = ctx.pick_generator(choice)?;
        ctx.install_generator(g);
        Ok(ctx)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let pa = poly_trim(digits(a, self.p, self.f));
        let pb = poly_trim(digits(b, self.p, self.f));
        let r = poly_rem(&poly_mul(&pa, &pb, self.p), &self.modulus, self.p);
        undigits(&r, self.p)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn has_full_order(&self, a: u32, factors: &[u64]) -> bool {
        let order = (self.q - 1) as u64;
        a != 0 && factors.iter().all(|&l| self.pow_slow(a, order / l) != 1)
    }

    fn pick_generator(&self, choice: GeneratorChoice) -> Result<FieldElement> {
        let factors = prime_factors((self.q - 1) as u64);
        let mut primitive = (1..self.q).filter(|&a| self.has_full_order(a, &factors));
        let found = match choice {
            GeneratorChoice::Least => primitive.next(),
            GeneratorChoice::Nth(k) => primitive.nth(k),
            GeneratorChoice::Explicit(e) => {
                if e >= self.q || !self.has_full_order(e, &factors) {
                    return invalid(format!("element {e} is not a generator of F_{}^×", self.q));
                }
                Some(e)
            }
        };
        found
            .map(FieldElement)
            .ok_or_else(|| Error::InvalidArgument(format!("no generator for choice {choice}")))
    }

    fn install_generator(&mut self, g: FieldElement) {
        let order = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![u32::MAX; self.q as usize];
        let mut cur = 1u32;
        for t in 0..order {
            exp.push(cur);
            log[cur as usize] = t as u32;
            cur = self.mul_slow(cur, g.0);
        }
        debug_assert_eq!(cur, 1);
        self.generator = g;
        self.exp = exp;
        self.log = log;
        let n = self.n() as usize;
        let mut squares = Vec::with_capacity(n + 1);
        squares.push(FieldElement::ZERO);
        squares.extend((0..n).map(|j| FieldElement(self.exp[2 * j])));
        self.squares = squares;
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `n = (q − 1)/2`.
    pub fn n(&self) -> u32 {
        (self.q - 1) / 2
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Ordered squares `s_0, …, s_n`.
    pub fn squares(&self) -> &[FieldElement] {
        &self.squares
    }

    /// Returns a copy whose squares `s_2, …, s_n` are permuted by `order`,
    /// a permutation of `2..=n`. `s_0` and `s_1` stay fixed.
    pub fn with_square_order(&self, order: &[usize]) -> Result<FieldCtx> {
        let n = self.n() as usize;
        let mut seen = vec![false; n + 1];
        if order.len() + 2 != n + 1 {
            return invalid("square order must list indices 2..=n exactly once");
        }
        for &i in order {
            if !(2..=n).contains(&i) || seen[i] {
                return invalid("square order must list indices 2..=n exactly once");
            }
            seen[i] = true;
        }
        let mut out = self.clone();
        for (slot, &i) in order.iter().enumerate() {
            out.squares[slot + 2] = self.squares[i];
        }
        Ok(out)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    /// Nonsquares `g^{2t+1}` in increasing exponent order.
    pub fn nonsquares(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.n() as usize).map(|t| FieldElement(self.exp[2 * t + 1]))
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index >= self.q {
            return invalid(format!("index {index} outside F_{}", self.q));
        }
        Ok(FieldElement(index))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.f as usize || coeffs.iter().any(|&c| c >= self.p) {
            return invalid("coefficient vector does not describe a field element");
        }
        Ok(FieldElement(undigits(coeffs, self.p)))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        digits(x.0, self.p, self.f)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.f == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        for _ in 0..self.f {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.f == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        for _ in 0..self.f {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let order = self.q - 1;
        let t = (self.log[a.0 as usize] + self.log[b.0 as usize]) % order;
        FieldElement(self.exp[t as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(FieldElement(
            self.exp[((order - self.log[a.0 as usize]) % order) as usize],
        ))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let order = (self.q - 1) as u64;
        let t = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        FieldElement(self.exp[t as usize])
    }

    /// `g^t` for any integer exponent.
    pub fn gen_pow(&self, t: i64) -> FieldElement {
        FieldElement(self.exp[t.rem_euclid((self.q - 1) as i64) as usize])
    }

    /// Discrete logarithm to the base of the fixed generator, in `[0, q−2]`.
    pub fn dlog(&self, x: FieldElement) -> Result<u32> {
        if x.is_zero() || x.0 >= self.q {
            return invalid("discrete log of zero or foreign element");
        }
        Ok(self.log[x.0 as usize])
    }

    pub(crate) fn dlog_unchecked(&self, x: FieldElement) -> u32 {
        self.log[x.0 as usize]
    }

    /// Quadratic character `φ`, with `φ(0) = 0`.
    pub fn quad_char(&self, x: FieldElement) -> SymbolValue {
        if x.is_zero() {
            SymbolValue::ZERO
        } else {
            SymbolValue::from_parity(self.log[x.0 as usize] as u64)
        }
    }

    pub fn is_nonsquare(&self, x: FieldElement) -> bool {
        self.quad_char(x) == SymbolValue::MINUS_ONE
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: FieldElement) -> Result<u64> {
        let t = self.dlog(x)? as u64;
        let m = (self.q - 1) as u64;
        Ok(m / t.gcd(&m))
    }
}

/// `F_{q^r}` together with a ring embedding of the base field.
#[derive(Clone, Debug)]
pub struct FieldExtension {
    pub field: FieldCtx,
    /// `embedding[x.index()]` is the image of the base element `x`.
    pub embedding: Vec<FieldElement>,
}

impl FieldExtension {
    pub fn embed(&self, x: FieldElement) -> FieldElement {
        self.embedding[x.index() as usize]
    }
}

/// Degree-`r` extension of `ctx`, rebuilt as a tabled field over the prime
/// field, with an embedding checked to be an injective ring map.
pub fn extend_field(ctx: &FieldCtx, r: u32) -> Result<FieldExtension> {
    extend_field_with_budget(ctx, r, DEFAULT_TABLE_BUDGET)
}

pub fn extend_field_with_budget(ctx: &FieldCtx, r: u32, budget: u64) -> Result<FieldExtension> {
    if r == 0 {
        return invalid("extension degree must be positive");
    }
    let big = FieldCtx::with_budget(ctx.p, ctx.f * r, GeneratorChoice::Least, budget)?;
    let step = ((big.q - 1) / (ctx.q - 1)) as i64;

    // A root β of the base modulus inside the subfield of order q (β = 0
    // when the modulus is x itself).
    let eval = |beta: FieldElement| {
        ctx.modulus
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| {
                big.add(big.mul(acc, beta), big.from_int(c as i64))
            })
    };
    let beta = std::iter::once(FieldElement::ZERO)
        .chain((0..(ctx.q - 1) as i64).map(|j| big.gen_pow(j * step)))
        .find(|&b| eval(b).is_zero())
        .ok_or_else(|| Error::Inconsistent("base modulus has no root in the extension".into()))?;

    let powers: Vec<FieldElement> = (0..ctx.f as u64).map(|i| big.pow(beta, i)).collect();
    let embedding: Vec<FieldElement> = ctx
        .elements()
        .map(|x| {
            ctx.coeffs(x)
                .iter()
                .zip(&powers)
                .fold(FieldElement::ZERO, |acc, (&c, &b)| {
                    big.add(acc, big.mul(big.from_int(c as i64), b))
                })
        })
        .collect();

    let ext = FieldExtension {
        field: big,
        embedding,
    };
    verify_embedding(ctx, &ext)?;
    Ok(ext)
}

fn verify_embedding(ctx: &FieldCtx, ext: &FieldExtension) -> Result<()> {
    let big = &ext.field;
    let mut seen = vec![false; big.q as usize];
    let g = ctx.generator();
    let basis: Vec<FieldElement> = (0..ctx.f).map(|k| FieldElement(ctx.p.pow(k))).collect();
    let bad = |what: &str| Err(Error::Inconsistent(format!("embedding is not {what}")));
    if ext.embed(FieldElement::ONE) != FieldElement::ONE {
        return bad("unital");
    }
    for x in ctx.elements() {
        let ix = ext.embed(x);
        if std::mem::replace(&mut seen[ix.index() as usize], true) {
            return bad("injective");
        }
        if ext.embed(ctx.mul(g, x)) != big.mul(ext.embed(g), ix) {
            return bad("multiplicative");
        }
        for &e in &basis {
            if ext.embed(ctx.add(x, e)) != big.add(ix, ext.embed(e)) {
                return bad("additive");
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_phi(mut n: u64) -> u64 {
        let mut out = n;
        for l in prime_factors(n) {
            out = out / l * (l - 1);
            while n.is_multiple_of(l) {
                n /= l;
            }
        }
        out
    }

    #[test]
    fn prime_field_generator() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.q(), 7);
        assert_eq!(f7.generator().index(), 3);
        assert_eq!(f7.dlog(FieldElement(2)).unwrap(), 2);
        assert_eq!(f7.dlog(FieldElement::ONE).unwrap(), 0);
        assert_eq!(f7.dlog(f7.generator()).unwrap(), 1);
        assert!(f7.dlog(FieldElement::ZERO).is_err());
    }

    #[test]
    fn squares_list() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.squares().len(), 5);
        let f5 = make_field(5, 1).unwrap();
        let mut s: Vec<u32> = f5.squares().iter().map(|x| x.index()).collect();
        assert_eq!(&s[..2], &[0, 1]);
        s.sort();
        assert_eq!(s, vec![0, 1, 4]);
        assert_eq!(f5.quad_char(FieldElement(2)), SymbolValue::MINUS_ONE);
        assert_eq!(f5.quad_char(FieldElement::ZERO), SymbolValue::ZERO);
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(make_field(2, 3).is_err());
        assert!(make_field(9, 1).is_err());
        assert!(make_field(3, 0).is_err());
        assert!(matches!(
            FieldCtx::with_budget(3, 10, GeneratorChoice::Least, 1000),
            Err(Error::TableBudget { .. })
        ));
    }

    #[test]
    fn table_invariants() {
        for &(p, f) in &[
            (3, 1),
            (3, 2),
            (3, 3),
            (3, 4),
            (5, 1),
            (5, 2),
            (7, 1),
            (7, 2),
            (11, 1),
            (13, 1),
        ] {
            let k = make_field(p, f).unwrap();
            let q = k.q() as u64;
            // dlog is a bijection onto [0, q−2]
            let mut hit = vec![false; (q - 1) as usize];
            for x in k.nonzero() {
                let t = k.dlog(x).unwrap() as usize;
                assert!(!hit[t]);
                hit[t] = true;
                assert_eq!(k.gen_pow(t as i64), x);
            }
            assert_eq!(k.order(k.generator()).unwrap(), q - 1);
            // squares are exactly {x²}
            let mut from_def: Vec<FieldElement> = k.elements().map(|x| k.mul(x, x)).collect();
            from_def.sort();
            from_def.dedup();
            let mut listed = k.squares().to_vec();
            listed.sort();
            assert_eq!(listed, from_def);
            assert_eq!(k.squares().len() as u64, q.div_ceil(2));
            assert_eq!(k.squares()[0], FieldElement::ZERO);
            assert_eq!(k.squares()[1], FieldElement::ONE);
            // φ(d) elements of order d
            for d in 1..q {
                if (q - 1).is_multiple_of(d) {
                    let count = k.nonzero().filter(|&x| k.order(x).unwrap() == d).count() as u64;
                    assert_eq!(count, euler_phi(d), "q={q} d={d}");
                }
            }
            // quadratic character sums to zero and is multiplicative
            let total: i64 = k.elements().map(|x| i64::from(k.quad_char(x))).sum();
            assert_eq!(total, 0);
            for x in k.nonzero() {
                for y in k.nonzero().step_by(3) {
                    assert_eq!(k.quad_char(k.mul(x, y)), k.quad_char(x) * k.quad_char(y));
                }
            }
            let minus_one = k.neg(FieldElement::ONE);
            let expect = if q % 4 == 1 {
                SymbolValue::ONE
            } else {
                SymbolValue::MINUS_ONE
            };
            assert_eq!(k.quad_char(minus_one), expect);
        }
    }

    #[test]
    fn ring_axioms_spot_check() {
        let k = make_field(3, 3).unwrap();
        for a in k.elements() {
            assert_eq!(k.add(a, k.neg(a)), FieldElement::ZERO);
            for b in k.elements().step_by(5) {
                for c in k.elements().step_by(7) {
                    assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
            if !a.is_zero() {
                assert_eq!(k.mul(a, k.inv(a).unwrap()), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn generator_override() {
        let k = FieldCtx::new(7, 1, GeneratorChoice::Nth(1)).unwrap();
        assert_eq!(k.generator().index(), 5);
        let k = FieldCtx::new(7, 1, GeneratorChoice::Explicit(5)).unwrap();
        assert_eq!(k.generator().index(), 5);
        assert!(FieldCtx::new(7, 1, GeneratorChoice::Explicit(2)).is_err());
        assert!(FieldCtx::new(7, 1, GeneratorChoice::Nth(2)).is_err());
        assert_eq!(
            "nth:3".parse::<GeneratorChoice>().unwrap(),
            GeneratorChoice::Nth(3)
        );
        assert_eq!(
            "least".parse::<GeneratorChoice>().unwrap(),
            GeneratorChoice::Least
        );
        assert_eq!(
            "5".parse::<GeneratorChoice>().unwrap(),
            GeneratorChoice::Explicit(5)
        );
    }

    #[test]
    fn extensions() {
        let f7 = make_field(7, 1).unwrap();
        let e = extend_field(&f7, 2).unwrap();
        assert_eq!(e.field.q(), 49);
        assert_eq!(e.embed(FieldElement::ZERO), FieldElement::ZERO);
        assert_eq!(e.embed(FieldElement::ONE), FieldElement::ONE);

        let e1 = extend_field(&f7, 1).unwrap();
        let mut img: Vec<_> = e1.embedding.clone();
        img.sort();
        assert_eq!(img, e1.field.elements().collect::<Vec<_>>());

        let f9 = make_field(3, 2).unwrap();
        let e = extend_field(&f9, 2).unwrap();
        assert_eq!(e.field.q(), 81);
        let img = e.embed(f9.generator());
        let order = e.field.order(img).unwrap();
        assert_eq!(80 % order, 0);
        assert_eq!(order, 8);

        assert!(matches!(
            extend_field_with_budget(&f9, 4, 1000),
            Err(Error::TableBudget { .. })
        ));
        assert!(extend_field(&f9, 0).is_err());
    }

    #[test]
    fn reordered_squares() {
        let k = make_field(13, 1).unwrap();
        let order: Vec<usize> = (2..=6).rev().collect();
        let r = k.with_square_order(&order).unwrap();
        assert_eq!(r.squares()[2], k.squares()[6]);
        assert_eq!(r.squares()[..2], k.squares()[..2]);
        assert!(k.with_square_order(&[2, 2, 3, 4, 5]).is_err());
        assert!(k.with_square_order(&[1, 2, 3, 4, 5]).is_err());
    }
}
