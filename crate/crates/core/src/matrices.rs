//! Exact linear algebra over integral domains.
//!
//! Determinants use fraction-free (Bareiss) elimination and characteristic
//! polynomials use Faddeev–LeVerrier; both only ever divide where the
//! division is known to be exact, and report an inconsistency otherwise.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::characters::{conductor, Character};
use crate::cyclotomic::CycInt;
use crate::error::{invalid, Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::nt_base::{jacobi_symbol, residue};

/// An exact integral domain whose elements a [`DomainMatrix`] holds.
pub trait Domain: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;
    /// Precomputed form of a divisor reused across many exact divisions.
    type Divisor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn divisor(&self, b: &Self::Elem) -> Result<Self::Divisor>;
    /// `a / b`, failing if the quotient leaves the domain.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Divisor) -> Result<Self::Elem>;
    fn div_int_exact(&self, a: &Self::Elem, k: i64) -> Result<Self::Elem>;
}

/// The rational integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Domain for Integers {
    type Elem = BigInt;
    type Divisor = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn divisor(&self, b: &BigInt) -> Result<BigInt> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(b.clone())
    }

    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        let (quot, rem) = a.div_rem(b);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!("{a} is not divisible by {b}")));
        }
        Ok(quot)
    }

    fn div_int_exact(&self, a: &BigInt, k: i64) -> Result<BigInt> {
        self.div_exact(a, &self.divisor(&BigInt::from(k))?)
    }
}

/// `Z[ζ_m]` for a fixed conductor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycRing(pub u64);

/// `b^{-1} = w / den` with `w ∈ Z[ζ_m]` and a positive integer `den`.
#[derive(Clone, Debug)]
pub struct CycDivisor {
    numerator: CycInt,
    denominator: BigInt,
}

impl Domain for CycRing {
    type Elem = CycInt;
    type Divisor = CycDivisor;

    fn zero(&self) -> CycInt {
        CycInt::zero(self.0)
    }

    fn one(&self) -> CycInt {
        CycInt::one(self.0)
    }

    fn is_zero(&self, a: &CycInt) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &CycInt, b: &CycInt) -> CycInt {
        a + b
    }

    fn sub(&self, a: &CycInt, b: &CycInt) -> CycInt {
        a - b
    }

    fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        a * b
    }

    fn neg(&self, a: &CycInt) -> CycInt {
        -a
    }

    fn divisor(&self, b: &CycInt) -> Result<CycDivisor> {
        let inv = b.to_rat().inverse()?;
        let denominator = inv
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerator = CycInt::from_coeffs(
            self.0,
            inv.coeffs()
                .iter()
                .map(|c| (c * &denominator).to_integer())
                .collect(),
        );
        Ok(CycDivisor {
            numerator,
            denominator,
        })
    }

    fn div_exact(&self, a: &CycInt, b: &CycDivisor) -> Result<CycInt> {
        (a * &b.numerator)
            .div_int_exact(&b.denominator)
            .ok_or_else(|| Error::Inconsistent(format!("{a} is not divisible in Z[ζ_{}]", self.0)))
    }

    fn div_int_exact(&self, a: &CycInt, k: i64) -> Result<CycInt> {
        a.div_int_exact(&BigInt::from(k))
            .ok_or_else(|| Error::Inconsistent(format!("{a} is not divisible by {k}")))
    }
}

/// A dense square matrix over an exact domain, row-major.
#[derive(Clone, PartialEq)]
pub struct DomainMatrix<D: Domain> {
    domain: D,
    size: usize,
    entries: Vec<D::Elem>,
}

pub type IntMatrix = DomainMatrix<Integers>;

impl<D: Domain> fmt::Debug for DomainMatrix<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.size.max(1)))
            .finish()
    }
}

impl<D: Domain> DomainMatrix<D> {
    pub fn new(domain: D, size: usize, entries: Vec<D::Elem>) -> Result<Self> {
        if entries.len() != size * size {
            return invalid(format!(
                "{} entries do not fill a {size}×{size} matrix",
                entries.len()
            ));
        }
        Ok(DomainMatrix {
            domain,
            size,
            entries,
        })
    }

    pub fn from_fn(domain: D, size: usize, mut f: impl FnMut(usize, usize) -> D::Elem) -> Self {
        let entries = (0..size * size).map(|k| f(k / size, k % size)).collect();
        DomainMatrix {
            domain,
            size,
            entries,
        }
    }

    pub fn identity(domain: D, size: usize) -> Self {
        let (one, zero) = (domain.one(), domain.zero());
        Self::from_fn(domain, size, |i, j| {
            if i == j {
                one.clone()
            } else {
                zero.clone()
            }
        })
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &D::Elem {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[D::Elem] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.domain.clone(), self.size, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries == self.transpose().entries
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let t = self.transpose();
        self.entries
            .iter()
            .zip(&t.entries)
            .all(|(a, b)| *a == self.domain.neg(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return invalid("matrix sizes differ");
        }
        let d = &self.domain;
        let n = self.size;
        let mut out = vec![d.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if d.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !d.is_zero(b) {
                        out[i * n + j] = d.add(&out[i * n + j], &d.mul(a, b));
                    }
                }
            }
        }
        Ok(DomainMatrix {
            domain: d.clone(),
            size: n,
            entries: out,
        })
    }

    pub fn trace(&self) -> D::Elem {
        (0..self.size).fold(self.domain.zero(), |acc, i| {
            self.domain.add(&acc, self.get(i, i))
        })
    }

    /// Deletes the first row and column.
    pub fn minor_00(&self) -> Self {
        let n = self.size.saturating_sub(1);
        Self::from_fn(self.domain.clone(), n, |i, j| {
            self.get(i + 1, j + 1).clone()
        })
    }
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return invalid("rows do not form a square matrix");
        }
        Ok(Self::from_fn(Integers, n, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn to_cyc(&self, m: u64) -> DomainMatrix<CycRing> {
        DomainMatrix::from_fn(CycRing(m), self.size, |i, j| {
            CycInt::from_int(m, self.get(i, j).clone())
        })
    }
}

/// Determinant by fraction-free elimination, with row swaps on zero pivots.
/// The 0×0 determinant is 1.
pub fn bareiss_det<D: Domain>(mat: &DomainMatrix<D>) -> Result<D::Elem> {
    let d = &mat.domain;
    let n = mat.size;
    if n == 0 {
        return Ok(d.one());
    }
    let mut a: Vec<Vec<D::Elem>> = mat.entries.chunks(n).map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev: Option<D::Divisor> = None;
    for k in 0..n - 1 {
        if d.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&r| !d.is_zero(&a[r][k])) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(d.zero()),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let mut v = d.mul(pivot, &row[j]);
                if !d.is_zero(&lead) && !d.is_zero(&pivot_row[j]) {
                    v = d.sub(&v, &d.mul(&lead, &pivot_row[j]));
                }
                row[j] = match &prev {
                    Some(div) => d.div_exact(&v, div)?,
                    None => v,
                };
            }
            row[k] = d.zero();
        }
        prev = Some(d.divisor(&a[k][k])?);
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg(&det) } else { det })
}

/// Coefficients (constant term first) of `det(xI − M)` by Faddeev–LeVerrier.
pub fn char_poly<D: Domain>(mat: &DomainMatrix<D>) -> Result<Vec<D::Elem>> {
    let d = &mat.domain;
    let n = mat.size;
    let mut coeffs = vec![d.zero(); n + 1];
    coeffs[n] = d.one();
    if n == 0 {
        return Ok(coeffs);
    }
    // M_1 = I; c_{n−k} = −tr(A M_k)/k; M_{k+1} = A M_k + c_{n−k} I
    let mut mk = DomainMatrix::identity(d.clone(), n);
    for k in 1..=n {
        let amk = mat.mul(&mk)?;
        let c = d.neg(&d.div_int_exact(&amk.trace(), k as i64)?);
        coeffs[n - k] = c.clone();
        if k < n {
            let mut next = amk;
            for i in 0..n {
                let idx = i * n + i;
                next.entries[idx] = d.add(&next.entries[idx], &c);
            }
            mk = next;
        }
    }
    Ok(coeffs)
}

/// Coefficients (constant first) of `Π (x − r)`.
pub fn expand_from_roots<D: Domain>(domain: &D, roots: &[D::Elem]) -> Vec<D::Elem> {
    let mut poly = vec![domain.one()];
    for r in roots {
        poly = mul_poly(domain, &poly, &[domain.neg(r), domain.one()]);
    }
    poly
}

pub fn mul_poly<D: Domain>(domain: &D, a: &[D::Elem], b: &[D::Elem]) -> Vec<D::Elem> {
    let mut out = vec![domain.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = domain.add(&out[i + j], &domain.mul(x, y));
        }
    }
    out
}

fn legendre(a: i64, p: u64) -> i64 {
    jacobi_symbol(a, p as i64).map(i64::from).unwrap_or(0)
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !crate::nt_base::is_prime(p) {
        return invalid(format!("{p} is not an odd prime"));
    }
    Ok(())
}

/// `C_p = [((i − j)/p)]_{1 ≤ i,j ≤ p−1}`.
pub fn build_carlitz(p: u64) -> Result<IntMatrix> {
    require_odd_prime(p)?;
    let n = (p - 1) as usize;
    Ok(IntMatrix::from_fn(Integers, n, |i, j| {
        BigInt::from(legendre(i as i64 - j as i64, p))
    }))
}

/// `S_p = [((i² + j²)/p)]_{1 ≤ i,j ≤ (p−1)/2}`.
pub fn build_sun_sp(p: u64) -> Result<IntMatrix> {
    require_odd_prime(p)?;
    let n = ((p - 1) / 2) as usize;
    Ok(IntMatrix::from_fn(Integers, n, |i, j| {
        let (x, y) = (i as i64 + 1, j as i64 + 1);
        BigInt::from(legendre(x * x + y * y, p))
    }))
}

/// `[φ(s_i + d s_j)]` over the given index range of the square list.
fn square_matrix(ctx: &FieldCtx, d: FieldElement, from: usize) -> IntMatrix {
    let s = ctx.squares();
    let size = s.len() - from;
    IntMatrix::from_fn(Integers, size, |i, j| {
        let v = ctx.add(s[i + from], ctx.mul(d, s[j + from]));
        BigInt::from(i64::from(ctx.quad_char(v)))
    })
}

/// `M_q(d) = [φ(s_i + d s_j)]_{1 ≤ i,j ≤ n}`.
pub fn build_mq(ctx: &FieldCtx, d: FieldElement) -> Result<IntMatrix> {
    if d.is_zero() {
        return invalid("M_q(d) needs d ≠ 0");
    }
    Ok(square_matrix(ctx, d, 1))
}

/// `N_q(−1) = [φ(s_i − s_j)]_{2 ≤ i,j ≤ n}`.
pub fn build_nq(ctx: &FieldCtx) -> IntMatrix {
    square_matrix(ctx, ctx.neg(FieldElement::ONE), 2)
}

/// `T_q(d) = [φ(s_i + d s_j)]_{0 ≤ i,j ≤ n}` for nonsquare `d`.
pub fn build_tq(ctx: &FieldCtx, d: FieldElement) -> Result<IntMatrix> {
    if !ctx.is_nonsquare(d) {
        return invalid("T_q(d) needs a nonsquare d");
    }
    Ok(square_matrix(ctx, d, 0))
}

/// `[χ^r(s_i + s_j) + χ^r(s_i − s_j)]_{1 ≤ i,j ≤ n}` over `Z[ζ_{q−1}]`.
pub fn build_wuwang(ctx: &FieldCtx, r: i64) -> DomainMatrix<CycRing> {
    let chi = Character::new(ctx, r);
    let s = &ctx.squares()[1..];
    let ring = CycRing(conductor(ctx));
    DomainMatrix::from_fn(ring, s.len(), |i, j| {
        chi.eval(ctx.add(s[i], s[j])) + chi.eval(ctx.sub(s[i], s[j]))
    })
}

/// The vector `(φ(1 − s_1), …, φ(1 − s_n))` whose circulant is `M_q(−1)`
/// under the ordering `s_{j+1} = g^{2j}`.
pub fn mq_minus_one_vector(ctx: &FieldCtx) -> Vec<i64> {
    ctx.squares()[1..]
        .iter()
        .map(|&s| i64::from(ctx.quad_char(ctx.sub(FieldElement::ONE, s))))
        .collect()
}

/// `C(v) = [c_{j−i}]_{0 ≤ i,j ≤ m−1}`, indices taken mod `m`.
pub fn build_circulant<D: Domain>(domain: D, v: &[D::Elem]) -> Result<DomainMatrix<D>> {
    let m = v.len();
    if m < 2 {
        return invalid("circulant needs a vector of length ≥ 2");
    }
    Ok(DomainMatrix::from_fn(domain, m, |i, j| {
        v[residue(j as i64 - i as i64, m as i64) as usize].clone()
    }))
}

/// `W(v) = [c_{j−i}]_{1 ≤ i,j ≤ m−1}`: `C(v)` without its first row and column.
pub fn build_almost_circulant<D: Domain>(domain: D, v: &[D::Elem]) -> Result<DomainMatrix<D>> {
    Ok(build_circulant(domain, v)?.minor_00())
}

pub fn int_vector(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Eigenvalues `λ_l = Σ_j c_j ζ_m^{jl}` of `C(v)` for `l = 1, …, m`.
pub fn circulant_eigs(v: &[i64]) -> Result<Vec<CycInt>> {
    let m = v.len();
    if m < 2 {
        return invalid("circulant needs a vector of length ≥ 2");
    }
    Ok((1..=m)
        .map(|l| {
            let mut counts = vec![0i64; m];
            for (j, &c) in v.iter().enumerate() {
                counts[j * l % m] += c;
            }
            CycInt::from_exponent_counts(m as u64, &counts)
        })
        .collect())
}

/// `det W(v) = (1/m) Σ_l Π_{k ≠ l} λ_k`, evaluated exactly in `Q(ζ_m)`.
pub fn almost_circulant_det_via_eigs(v: &[i64]) -> Result<BigInt> {
    let eigs = circulant_eigs(v)?;
    let m = eigs.len();
    let conductor = m as u64;
    // prefix/suffix products give every Π_{k≠l} in O(m) multiplications
    let mut prefix = vec![CycInt::one(conductor)];
    for e in &eigs {
        prefix.push(prefix.last().unwrap() * e);
    }
    let mut suffix = vec![CycInt::one(conductor); m + 1];
    for l in (0..m).rev() {
        suffix[l] = &suffix[l + 1] * &eigs[l];
    }
    let total = (0..m).fold(CycInt::zero(conductor), |acc, l| {
        acc + &prefix[l] * &suffix[l + 1]
    });
    let det = total
        .div_int_exact(&BigInt::from(m))
        .and_then(|x| x.as_integer())
        .ok_or_else(|| {
            Error::Inconsistent(format!("det W(v) for v={v:?} is not a rational integer"))
        })?;
    if eigs[m - 1].is_zero() {
        // λ_m = 0 leaves a single surviving term
        let special = prefix[m - 1]
            .div_int_exact(&BigInt::from(m))
            .and_then(|x| x.as_integer());
        if special.as_ref() != Some(&det) {
            return Err(Error::Inconsistent(
                "λ_m = 0 specialisation disagrees".into(),
            ));
        }
    }
    Ok(det)
}

/// Checks whether `n` is a nonzero perfect square.
pub fn is_nonzero_square(n: &BigInt) -> bool {
    n.is_positive() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}
