//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! Irreducibility is decided by trial division against the monic irreducibles
//! of degree at most half the degree, which the field spec caches for the
//! small degrees every search needs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ffield::{monic_from_code, Elem, FieldSpec};

/// Coefficient-slice routines shared with the field constructors.
///
/// Inputs and outputs are trimmed: no trailing (highest-degree) zeros, and the
/// zero polynomial is the empty slice.
pub(crate) mod raw {
    use super::*;

    pub(crate) fn trimmed(mut v: Vec<Elem>) -> Vec<Elem> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub(crate) fn add(spec: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = long.to_vec();
        for (o, &s) in out.iter_mut().zip(short) {
            *o = spec.add(*o, s);
        }
        trimmed(out)
    }

    pub(crate) fn sub(spec: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let mut out = a.to_vec();
        if out.len() < b.len() {
            out.resize(b.len(), Elem::ZERO);
        }
        for (o, &s) in out.iter_mut().zip(b) {
            *o = spec.sub(*o, s);
        }
        trimmed(out)
    }

    pub(crate) fn scale(spec: &FieldSpec, a: &[Elem], c: Elem) -> Vec<Elem> {
        if c.is_zero() {
            return Vec::new();
        }
        a.iter().map(|&x| spec.mul(x, c)).collect()
    }

    pub(crate) fn mul(spec: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = spec.add(out[i + j], spec.mul(x, y));
            }
        }
        trimmed(out)
    }

    /// Quotient and remainder; `m` must be nonzero.
    pub(crate) fn divrem(spec: &FieldSpec, a: &[Elem], m: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let dm = m.len() - 1;
        let lead_inv = spec.inv(m[dm]).expect("divisor is trimmed and nonzero");
        let mut rem = a.to_vec();
        if rem.len() <= dm {
            return (Vec::new(), rem);
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dm];
        for i in (dm..rem.len()).rev() {
            let c = rem[i];
            if c.is_zero() {
                continue;
            }
            let factor = spec.mul(c, lead_inv);
            quot[i - dm] = factor;
            for (j, &mj) in m.iter().enumerate() {
                let k = i - dm + j;
                rem[k] = spec.sub(rem[k], spec.mul(factor, mj));
            }
        }
        rem.truncate(dm);
        (trimmed(quot), trimmed(rem))
    }

    pub(crate) fn rem(spec: &FieldSpec, a: &[Elem], m: &[Elem]) -> Vec<Elem> {
        divrem(spec, a, m).1
    }

    /// Monic irreducibles of degree `n` in canonical order, given the lists
    /// for every degree below `n` in `lower` (index = degree).
    pub(crate) fn sieve_irreducibles(spec: &FieldSpec, n: usize, lower: &[Vec<Vec<Elem>>]) -> Vec<Vec<Elem>> {
        let q = spec.order() as u64;
        (0..q.pow(n as u32))
            .map(|code| monic_from_code(spec, n, code))
            .filter(|cand| (1..=n / 2).all(|k| lower[k].iter().all(|p| !rem(spec, cand, p).is_empty())))
            .collect()
    }
}

/// A polynomial over a finite field, coefficients low degree first.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Poly {
    /// Builds a polynomial from coefficients, low degree first.
    pub fn new(spec: &FieldSpec, coeffs: Vec<Elem>) -> Result<Poly> {
        for c in &coeffs {
            spec.elem(c.0)?;
        }
        Ok(Poly::from_trusted(spec, coeffs))
    }

    pub fn from_codes(spec: &FieldSpec, codes: &[u32]) -> Result<Poly> {
        Poly::new(spec, codes.iter().map(|&c| Elem(c)).collect())
    }

    pub(crate) fn from_trusted(spec: &FieldSpec, coeffs: Vec<Elem>) -> Poly {
        Poly {
            spec: spec.clone(),
            coeffs: raw::trimmed(coeffs),
        }
    }

    pub fn zero(spec: &FieldSpec) -> Poly {
        Poly {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldSpec) -> Poly {
        Poly::constant(spec, Elem::ONE)
    }

    pub fn constant(spec: &FieldSpec, c: Elem) -> Poly {
        Poly::from_trusted(spec, vec![c])
    }

    /// The monic linear polynomial `x - root`.
    pub fn linear(spec: &FieldSpec, root: Elem) -> Poly {
        Poly::from_trusted(spec, vec![spec.neg(root), Elem::ONE])
    }

    /// `c x^n`.
    pub fn monomial(spec: &FieldSpec, c: Elem, n: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[n] = c;
        Poly::from_trusted(spec, coeffs)
    }

    /// The polynomial whose coefficients are the base-q digits of `code`.
    pub fn from_code(spec: &FieldSpec, mut code: u64) -> Poly {
        let q = spec.order() as u64;
        let mut coeffs = Vec::new();
        while code > 0 {
            coeffs.push(Elem((code % q) as u32));
            code /= q;
        }
        Poly::from_trusted(spec, coeffs)
    }

    /// Canonical integer code: coefficients read as base-q digits.
    pub fn code(&self) -> u64 {
        let q = self.spec.order() as u64;
        self.coeffs.iter().rev().fold(0, |acc, c| acc * q + c.0 as u64)
    }

    #[inline]
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    #[inline]
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(Elem::ONE)
    }

    fn same_spec(&self, other: &Poly) {
        assert!(self.spec == other.spec, "polynomials over different fields");
    }

    pub fn scale(&self, c: Elem) -> Poly {
        Poly::from_trusted(&self.spec, raw::scale(&self.spec, &self.coeffs, c))
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_spec(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = raw::divrem(&self.spec, &self.coeffs, &divisor.coeffs);
        Ok((
            Poly {
                spec: self.spec.clone(),
                coeffs: q,
            },
            Poly {
                spec: self.spec.clone(),
                coeffs: r,
            },
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// True when `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        self.same_spec(other);
        raw::rem(&self.spec, &other.coeffs, &self.coeffs).is_empty()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.same_spec(other);
        let (mut a, mut b) = (self.coeffs.clone(), other.coeffs.clone());
        while !b.is_empty() {
            let r = raw::rem(&self.spec, &a, &b);
            a = b;
            b = r;
        }
        let g = Poly {
            spec: self.spec.clone(),
            coeffs: a,
        };
        g.make_monic().unwrap_or(g)
    }

    pub fn eval(&self, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.spec.add(self.spec.mul(acc, x), c))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(&self.spec);
        let mut base = self.clone();
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

    pub fn make_monic(&self) -> Result<Poly> {
        let lead = self.lead().ok_or(Error::Zero)?;
        Ok(self.scale(self.spec.inv(lead)?))
    }

    /// Coefficients in reverse order, padded to degree `d`: `x^d f(1/x)`.
    pub fn reversed(&self, d: usize) -> Poly {
        let mut c = self.coeffs.clone();
        c.resize(d + 1, Elem::ZERO);
        c.reverse();
        Poly::from_trusted(&self.spec, c)
    }
}

impl Ord for Poly {
    /// Canonical order: by degree, then coefficient codes from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::hash::Hash for Poly {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.spec.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.same_spec(rhs);
        Poly {
            spec: self.spec.clone(),
            coeffs: raw::add(&self.spec, &self.coeffs, &rhs.coeffs),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.same_spec(rhs);
        Poly {
            spec: self.spec.clone(),
            coeffs: raw::sub(&self.spec, &self.coeffs, &rhs.coeffs),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.same_spec(rhs);
        Poly {
            spec: self.spec.clone(),
            coeffs: raw::mul(&self.spec, &self.coeffs, &rhs.coeffs),
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let c = self.coeffs.iter().map(|&c| self.spec.neg(c)).collect();
        Poly {
            spec: self.spec.clone(),
            coeffs: c,
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.spec, self)
    }
}

/// Pretty form with element codes as coefficients, e.g. `x^3 + 4x + 2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, |i| match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        })
    }
}

/// Writes `sum c_i m_i` skipping zero terms, highest index first. Unit
/// coefficients are omitted unless the monomial is empty.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[Elem],
    monomial: impl Fn(usize) -> String,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        let m = monomial(i);
        if c.0 != 1 || m.is_empty() {
            write!(f, "{}", c.0)?;
        }
        f.write_str(&m)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Möbius function.
pub fn mobius(mut k: u64) -> i8 {
    assert!(k >= 1, "mobius is defined for k >= 1");
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducibles of degree `d` over `F_q`.
pub fn count_monic_irreducibles(q: u64, d: u32) -> u64 {
    assert!(d >= 1);
    let total: i128 = (1..=d as u64)
        .filter(|k| d as u64 % k == 0)
        .map(|k| mobius(k) as i128 * (q as i128).pow(d / k as u32))
        .sum();
    (total / d as i128) as u64
}

/// `|I(q,d)|`: irreducible binary forms of degree `d` up to scaling. For
/// `d = 1` this is `q + 1` (the monic linears and `Y`).
pub fn count_irreducibles(q: u64, d: u32) -> u64 {
    if d == 1 {
        q + 1
    } else {
        count_monic_irreducibles(q, d)
    }
}

/// All monic irreducibles of degree `n` over `spec`, in canonical order.
pub fn enumerate_monic_irreducibles(spec: &FieldSpec, n: usize) -> Vec<Poly> {
    irreducible_coeffs(spec, n)
        .into_iter()
        .map(|c| Poly {
            spec: spec.clone(),
            coeffs: c,
        })
        .collect()
}

fn irreducible_coeffs(spec: &FieldSpec, n: usize) -> Vec<Vec<Elem>> {
    if n == 0 {
        return Vec::new();
    }
    if let Some(cached) = spec.cached_irreducibles(n) {
        return cached.to_vec();
    }
    let lower: Vec<Vec<Vec<Elem>>> = (0..=n / 2).map(|k| irreducible_coeffs(spec, k)).collect();
    raw::sieve_irreducibles(spec, n, &lower)
}

/// Trial-division irreducibility test. Constants and zero are not irreducible.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    (1..=n / 2).all(|k| {
        with_irreducibles(f.spec(), k, |list| {
            list.iter().all(|p| !raw::rem(f.spec(), f.coeffs(), p).is_empty())
        })
    })
}

fn with_irreducibles<R>(spec: &FieldSpec, n: usize, body: impl FnOnce(&[Vec<Elem>]) -> R) -> R {
    match spec.cached_irreducibles(n) {
        Some(list) => body(list),
        None => body(&irreducible_coeffs(spec, n)),
    }
}

/// `unit * prod(factor^multiplicity)`, factors monic irreducible in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, spec: &FieldSpec) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(spec, self.unit), |acc, (p, m)| &acc * &p.pow(*m))
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Complete factorization by recursive trial division.
pub fn factorize(f: &Poly) -> Result<Factorization> {
    let unit = f.lead().ok_or(Error::Zero)?;
    let spec = f.spec();
    let mut rest = f.make_monic()?.coeffs;
    let mut factors = Vec::new();
    let mut k = 1;
    while 2 * k < rest.len() {
        with_irreducibles(spec, k, |list| {
            for p in list {
                if 2 * k >= rest.len() {
                    break;
                }
                let mut mult = 0;
                loop {
                    let (q, r) = raw::divrem(spec, &rest, p);
                    if !r.is_empty() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((
                        Poly {
                            spec: spec.clone(),
                            coeffs: p.clone(),
                        },
                        mult,
                    ));
                }
            }
        });
        k += 1;
    }
    if rest.len() > 1 {
        factors.push((
            Poly {
                spec: spec.clone(),
                coeffs: rest,
            },
            1,
        ));
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization { unit, factors })
}
