//! Exact arithmetic in small finite fields.
//!
//! A field is either a prime field `F_p` or an extension `B[t]/(m(t))` of a
//! base field `B`, where `m` is the lexicographically least monic irreducible
//! of its degree over `B`. Fields built by [`make_field`] are extensions of
//! the prime field; [`make_extension`] builds towers over any base.
//!
//! Elements are integer codes. The code of `c_0 + c_1 t + ... + c_{n-1} t^{n-1}`
//! is `sum c_i |B|^i`, so the base field embeds as the codes below `|B|` and
//! the prime field of `F_{p^k}` as the codes below `p`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::raw;

/// Largest order accepted by [`make_field`].
pub const MAX_FIELD_ORDER: u32 = 125;
/// Largest order accepted by [`make_extension`].
pub const MAX_EXTENSION_ORDER: u32 = 15625;

// Fields up to this order get full addition and multiplication tables.
const TABLE_LIMIT: u32 = 256;
// Monic irreducibles are precomputed while q^n stays below this.
const IRREDUCIBLE_CACHE_LIMIT: u64 = 1 << 12;
const IRREDUCIBLE_CACHE_DEGREE: usize = 7;

/// A field element, stored as its code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Description of a finite field together with its arithmetic tables.
///
/// Cheap to clone; all clones share the same tables. Two specs compare equal
/// when they describe the same construction (same base, same modulus).
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    p: u32,
    order: u32,
    base: Option<FieldSpec>,
    /// Monic modulus over the base, low degree first. Empty for prime fields.
    modulus: Vec<Elem>,
    tables: Option<Tables>,
    /// `irreducibles[n]` lists the monic irreducibles of degree `n` (coefficient
    /// vectors, low first) in canonical order, for the degrees that were cheap
    /// enough to precompute.
    irreducibles: Vec<Vec<Vec<Elem>>>,
}

struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.order == other.0.order
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for FieldSpec {}

impl core::hash::Hash for FieldSpec {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.0.order.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("FieldSpec");
        s.field("p", &self.0.p).field("q", &self.0.order);
        if !self.0.modulus.is_empty() {
            s.field("modulus", &self.0.modulus);
        }
        if let Some(base) = &self.0.base {
            s.field("base_q", &base.order());
        }
        s.finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}", self.0.order)
    }
}

/// Splits `q` as `p^k`, or returns `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Builds the canonical field of order `q` (`2 <= q <= 125`).
pub fn make_field(q: u32) -> Result<FieldSpec> {
    let (p, k) = prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
    if q > MAX_FIELD_ORDER {
        return Err(Error::FieldTooLarge(q as u64));
    }
    let prime = FieldSpec::prime(p as u32);
    let spec = if k == 1 {
        prime
    } else {
        FieldSpec::extension(&prime, k as usize)
    };
    Ok(spec.with_irreducible_cache())
}

/// Builds `F_{q^n}` as `base[t]/(m(t))`, `m` the lex-least monic irreducible
/// of degree `n` over `base`.
pub fn make_extension(base: &FieldSpec, n: u32) -> Result<FieldSpec> {
    if n < 2 {
        return Err(Error::OutOfRange(alloc::format!("extension degree {n} < 2")));
    }
    let order = (base.order() as u64).checked_pow(n).unwrap_or(u64::MAX);
    if order > MAX_EXTENSION_ORDER as u64 {
        return Err(Error::FieldTooLarge(order));
    }
    Ok(FieldSpec::extension(base, n as usize))
}

impl FieldSpec {
    fn prime(p: u32) -> FieldSpec {
        let mut inner = Inner {
            p,
            order: p,
            base: None,
            modulus: Vec::new(),
            tables: None,
            irreducibles: Vec::new(),
        };
        inner.tables = Some(Tables::build(p, |a, b| (a + b) % p, |a, b| (a * b) % p));
        FieldSpec(Arc::new(inner))
    }

    fn extension(base: &FieldSpec, n: usize) -> FieldSpec {
        let modulus = least_irreducible(base, n);
        let order = base.order().pow(n as u32);
        let mut spec = FieldSpec(Arc::new(Inner {
            p: base.characteristic(),
            order,
            base: Some(base.clone()),
            modulus,
            tables: None,
            irreducibles: Vec::new(),
        }));
        if order <= TABLE_LIMIT {
            let tables = Tables::build(
                order,
                |a, b| spec.add_slow(Elem(a), Elem(b)).0,
                |a, b| spec.mul_slow(Elem(a), Elem(b)).0,
            );
            let inner = Arc::get_mut(&mut spec.0).expect("fresh spec is unshared");
            inner.tables = Some(tables);
        }
        spec
    }

    fn with_irreducible_cache(mut self) -> FieldSpec {
        let q = self.order() as u64;
        let mut lists: Vec<Vec<Vec<Elem>>> = vec![Vec::new()];
        let mut n = 1;
        while n <= IRREDUCIBLE_CACHE_DEGREE && q.checked_pow(n as u32).is_some_and(|v| v <= IRREDUCIBLE_CACHE_LIMIT) {
            let next = raw::sieve_irreducibles(&self, n, &lists);
            lists.push(next);
            n += 1;
        }
        Arc::get_mut(&mut self.0).expect("fresh spec is unshared").irreducibles = lists;
        self
    }

    /// Precomputed monic irreducibles of degree `n`, if cached.
    pub(crate) fn cached_irreducibles(&self, n: usize) -> Option<&[Vec<Elem>]> {
        self.0.irreducibles.get(n).filter(|_| n >= 1).map(|v| v.as_slice())
    }

    /// The order `q`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.0.order
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    /// Degree over the prime field.
    pub fn prime_degree(&self) -> u32 {
        let mut k = 0;
        let mut q = self.0.order;
        while q > 1 {
            q /= self.0.p;
            k += 1;
        }
        k
    }

    /// Degree over the immediate base field (1 for prime fields).
    pub fn extension_degree(&self) -> usize {
        self.0.modulus.len().saturating_sub(1).max(1)
    }

    pub fn base(&self) -> Option<&FieldSpec> {
        self.0.base.as_ref()
    }

    /// Monic modulus over the base, low degree first; empty for prime fields.
    pub fn modulus(&self) -> &[Elem] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// Validates a code.
    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code < self.0.order {
            Ok(Elem(code))
        } else {
            Err(Error::InvalidElement {
                code,
                order: self.0.order,
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// All elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.order).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.0.order).map(Elem)
    }

    /// Coefficients over the base field, low degree first, padded to the
    /// extension degree. Prime fields return the element itself.
    pub fn coefficients(&self, a: Elem) -> Vec<Elem> {
        match &self.0.base {
            None => vec![a],
            Some(base) => {
                let radix = base.order();
                let mut code = a.0;
                (0..self.extension_degree())
                    .map(|_| {
                        let digit = code % radix;
                        code /= radix;
                        Elem(digit)
                    })
                    .collect()
            }
        }
    }

    /// Inverse of [`FieldSpec::coefficients`]; missing high coefficients are zero.
    pub fn from_coefficients(&self, coeffs: &[Elem]) -> Elem {
        match &self.0.base {
            None => coeffs.first().copied().unwrap_or(Elem::ZERO),
            Some(base) => {
                let radix = base.order();
                Elem(coeffs.iter().rev().fold(0, |acc, c| acc * radix + c.0))
            }
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.add[(a.0 * self.0.order + b.0) as usize] as u32),
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.neg[a.0 as usize] as u32),
            None => {
                let base = self.base().expect("untabulated fields are extensions");
                let c: Vec<Elem> = self.coefficients(a).into_iter().map(|c| base.neg(c)).collect();
                self.from_coefficients(&c)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.mul[(a.0 * self.0.order + b.0) as usize] as u32),
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => Elem(t.inv[a.0 as usize] as u32),
            None => self.pow(a, self.0.order as u64 - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a ↦ a^{|base|}`, the generator of the Galois group over the base.
    /// On a prime field this is `a ↦ a^p`, the identity.
    pub fn frobenius(&self, a: Elem) -> Elem {
        let exp = self.base().map_or(self.0.p, FieldSpec::order);
        self.pow(a, exp as u64)
    }

    fn add_slow(&self, a: Elem, b: Elem) -> Elem {
        let base = self.base().expect("extension field");
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<Elem> = x.iter().zip(&y).map(|(&u, &v)| base.add(u, v)).collect();
        self.from_coefficients(&sum)
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let base = self.base().expect("extension field");
        let x = raw::trimmed(self.coefficients(a));
        let y = raw::trimmed(self.coefficients(b));
        let prod = raw::mul(base, &x, &y);
        let r = raw::rem(base, &prod, &self.0.modulus);
        self.from_coefficients(&r)
    }
}

impl Tables {
    fn build(q: u32, add: impl Fn(u32, u32) -> u32, mul: impl Fn(u32, u32) -> u32) -> Tables {
        let n = q as usize;
        let mut t = Tables {
            add: vec![0; n * n],
            mul: vec![0; n * n],
            neg: vec![0; n],
            inv: vec![0; n],
        };
        for a in 0..q {
            for b in 0..q {
                let i = (a * q + b) as usize;
                let s = add(a, b);
                let m = mul(a, b);
                t.add[i] = s as u8;
                t.mul[i] = m as u8;
                if s == 0 {
                    t.neg[a as usize] = b as u8;
                }
                if m == 1 {
                    t.inv[a as usize] = b as u8;
                }
            }
        }
        t
    }
}

/// Lex-least monic irreducible of degree `n` over `base`, by trial division
/// against every monic polynomial of degree `1..=n/2`.
fn least_irreducible(base: &FieldSpec, n: usize) -> Vec<Elem> {
    let q = base.order() as u64;
    let count = q.pow(n as u32);
    (0..count)
        .map(|code| monic_from_code(base, n, code))
        .find(|cand| {
            (1..=n / 2).all(|k| {
                (0..q.pow(k as u32)).all(|dcode| {
                    let divisor = monic_from_code(base, k, dcode);
                    !raw::rem(base, cand, &divisor).is_empty()
                })
            })
        })
        .expect("irreducibles of every degree exist")
}

/// The monic polynomial of degree `n` whose lower coefficients are the base-q
/// digits of `code`.
pub(crate) fn monic_from_code(spec: &FieldSpec, n: usize, mut code: u64) -> Vec<Elem> {
    let q = spec.order() as u64;
    let mut coeffs = Vec::with_capacity(n + 1);
    for _ in 0..n {
        coeffs.push(Elem((code % q) as u32));
        code /= q;
    }
    coeffs.push(Elem::ONE);
    coeffs
}
