//! Binary forms and the action of `Γ = PGL₂(F_q)` by linear substitution.
//!
//! A form of degree `d` stores the coefficient of `X^i Y^(d-i)` at index `i`,
//! so homogenizing `f` is padding its coefficient vector to length `d + 1`.
//!
//! The matrix `[[α, β], [γ, δ]]` acts by `F(X, Y) ↦ F(αX + γY, βX + δY)`.
//! With matrix products this is a left action:
//! `act(g·h, F) = act(g, act(h, F))`. The unit test
//! `action_is_a_left_action` pins the orientation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::ffield::{Elem, FieldSpec};
use crate::poly::{self, enumerate_monic_irreducibles, raw, Poly};

/// A binary form `sum c_i X^i Y^(d-i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    spec: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Form {
    /// Builds a form of degree `coeffs.len() - 1`.
    pub fn new(spec: &FieldSpec, coeffs: Vec<Elem>) -> Result<Form> {
        if coeffs.is_empty() {
            return Err(Error::OutOfRange("a form needs at least one coefficient".into()));
        }
        for c in &coeffs {
            spec.elem(c.0)?;
        }
        Ok(Form {
            spec: spec.clone(),
            coeffs,
        })
    }

    pub fn from_codes(spec: &FieldSpec, codes: &[u32]) -> Result<Form> {
        Form::new(spec, codes.iter().map(|&c| Elem(c)).collect())
    }

    pub(crate) fn from_trusted(spec: &FieldSpec, coeffs: Vec<Elem>) -> Form {
        debug_assert!(!coeffs.is_empty());
        Form {
            spec: spec.clone(),
            coeffs,
        }
    }

    pub fn zero(spec: &FieldSpec, d: usize) -> Form {
        Form {
            spec: spec.clone(),
            coeffs: vec![Elem::ZERO; d + 1],
        }
    }

    /// The linear form `X`.
    pub fn x(spec: &FieldSpec) -> Form {
        Form {
            spec: spec.clone(),
            coeffs: vec![Elem::ZERO, Elem::ONE],
        }
    }

    /// The linear form `Y`.
    pub fn y(spec: &FieldSpec) -> Form {
        Form {
            spec: spec.clone(),
            coeffs: vec![Elem::ONE, Elem::ZERO],
        }
    }

    /// `Y^d`, the homogenization of the constant 1.
    pub fn y_power(spec: &FieldSpec, d: usize) -> Form {
        let mut coeffs = vec![Elem::ZERO; d + 1];
        coeffs[0] = Elem::ONE;
        Form {
            spec: spec.clone(),
            coeffs,
        }
    }

    #[inline]
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    #[inline]
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn codes(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Base-q code of the coefficient vector; a compact key for lookups.
    pub fn code(&self) -> u64 {
        let q = self.spec.order() as u64;
        self.coeffs.iter().rev().fold(0, |acc, c| acc * q + c.0 as u64)
    }

    fn same_spec(&self, other: &Form) {
        assert!(self.spec == other.spec, "forms over different fields");
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.same_spec(other);
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: Some(other.degree()),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.spec.add(a, b))
            .collect();
        Ok(Form {
            spec: self.spec.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.scale(self.spec.neg(Elem::ONE))
    }

    pub fn scale(&self, c: Elem) -> Form {
        let coeffs = self.coeffs.iter().map(|&a| self.spec.mul(a, c)).collect();
        Form {
            spec: self.spec.clone(),
            coeffs,
        }
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, other: &Form) -> Form {
        self.same_spec(other);
        Form {
            spec: self.spec.clone(),
            coeffs: convolve(&self.spec, &self.coeffs, &other.coeffs),
        }
    }

    pub fn pow(&self, e: u32) -> Form {
        (0..e).fold(Form::y_power(&self.spec, 0), |acc, _| acc.mul(self))
    }

    /// `F(x, 1)` and the power of `Y` dividing `F`, so that
    /// `F = Y^yexp · homogenize(f, d - yexp)`.
    pub fn dehomogenize(&self) -> Result<(Poly, usize)> {
        dehomogenize(self)
    }

    /// `F(x, 1)` as a polynomial (zero for the zero form).
    pub fn to_poly(&self) -> Poly {
        Poly::from_trusted(&self.spec, self.coeffs.clone())
    }

    /// True when `self` divides `other` as forms.
    pub fn divides(&self, other: &Form) -> bool {
        if other.is_zero() {
            return true;
        }
        let Ok((p, pe)) = self.dehomogenize() else { return false };
        let (f, fe) = other.dehomogenize().expect("nonzero");
        pe <= fe && p.divides(&f)
    }

    /// Evaluates at the projective point `(x : 1)`, or `(1 : 0)` for `None`.
    pub fn eval_point(&self, x: Option<Elem>) -> Elem {
        match x {
            Some(x) => self.to_poly().eval(x),
            None => *self.coeffs.last().unwrap(),
        }
    }

    /// Normalizes to the projective class.
    pub fn projective(&self) -> Result<ProjForm> {
        ProjForm::new(self.clone())
    }
}

fn convolve(spec: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = spec.add(out[i + j], spec.mul(x, y));
        }
    }
    out
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({})", self.spec, self)
    }
}

/// Pretty form, e.g. `X^2 + XY + Y^2`, coefficients as element codes.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        poly::write_terms(f, &self.coeffs, |i| {
            let mut m = String::new();
            match i {
                0 => {}
                1 => m.push('X'),
                _ => m.push_str(&format!("X^{i}")),
            }
            match d - i {
                0 => {}
                1 => m.push('Y'),
                e => m.push_str(&format!("Y^{e}")),
            }
            m
        })
    }
}

/// `F(X, Y) = Y^d f(X/Y)`.
pub fn homogenize(f: &Poly, d: usize) -> Result<Form> {
    if let Some(deg) = f.degree() {
        if deg > d {
            return Err(Error::DegreeExceeded { degree: deg, max: d });
        }
    }
    let mut coeffs = f.coeffs().to_vec();
    coeffs.resize(d + 1, Elem::ZERO);
    Ok(Form::from_trusted(f.spec(), coeffs))
}

/// `F(x, 1)` together with the exponent of `Y` in `F`.
pub fn dehomogenize(form: &Form) -> Result<(Poly, usize)> {
    let f = form.to_poly();
    let deg = f.degree().ok_or(Error::Zero)?;
    Ok((f, form.degree() - deg))
}

/// A nonzero form up to scaling, normalized so that its highest-index nonzero
/// coefficient is 1 (equivalently, `F(x, 1)` is monic).
///
/// Ordered by the power of `Y` it contains, then by the canonical order of the
/// dehomogenized polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjForm(Form);

impl ProjForm {
    pub fn new(form: Form) -> Result<ProjForm> {
        let lead = *form.coeffs.iter().rev().find(|c| !c.is_zero()).ok_or(Error::Zero)?;
        let inv = form.spec.inv(lead)?;
        Ok(ProjForm(form.scale(inv)))
    }

    #[inline]
    pub fn form(&self) -> &Form {
        &self.0
    }

    pub fn into_form(self) -> Form {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    fn y_exponent(&self) -> usize {
        self.0.degree() - self.0.coeffs.iter().rposition(|c| !c.is_zero()).expect("nonzero")
    }
}

impl Ord for ProjForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.y_exponent().cmp(&other.y_exponent()))
            .then_with(|| self.0.coeffs.iter().rev().cmp(other.0.coeffs.iter().rev()))
    }
}

impl PartialOrd for ProjForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ProjForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

impl fmt::Display for ProjForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `[[α, β], [γ, δ]]` modulo scalars, scaled so the first nonzero entry
/// (in the order α, β, γ, δ) is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pgl {
    pub alpha: Elem,
    pub beta: Elem,
    pub gamma: Elem,
    pub delta: Elem,
}

impl Pgl {
    pub const IDENTITY: Pgl = Pgl {
        alpha: Elem::ONE,
        beta: Elem::ZERO,
        gamma: Elem::ZERO,
        delta: Elem::ONE,
    };

    /// Canonical element for an invertible matrix.
    pub fn new(spec: &FieldSpec, alpha: Elem, beta: Elem, gamma: Elem, delta: Elem) -> Result<Pgl> {
        for e in [alpha, beta, gamma, delta] {
            spec.elem(e.0)?;
        }
        let m = Pgl {
            alpha,
            beta,
            gamma,
            delta,
        };
        if m.det(spec).is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(m.normalized(spec))
    }

    fn normalized(self, spec: &FieldSpec) -> Pgl {
        let lead = [self.alpha, self.beta, self.gamma, self.delta]
            .into_iter()
            .find(|e| !e.is_zero())
            .expect("invertible");
        let inv = spec.inv(lead).expect("nonzero");
        Pgl {
            alpha: spec.mul(self.alpha, inv),
            beta: spec.mul(self.beta, inv),
            gamma: spec.mul(self.gamma, inv),
            delta: spec.mul(self.delta, inv),
        }
    }

    pub fn det(&self, spec: &FieldSpec) -> Elem {
        spec.sub(spec.mul(self.alpha, self.delta), spec.mul(self.beta, self.gamma))
    }

    /// Matrix product `self · other`, normalized.
    pub fn compose(&self, spec: &FieldSpec, other: &Pgl) -> Pgl {
        let m = |a, b, c, d| spec.add(spec.mul(a, b), spec.mul(c, d));
        Pgl {
            alpha: m(self.alpha, other.alpha, self.beta, other.gamma),
            beta: m(self.alpha, other.beta, self.beta, other.delta),
            gamma: m(self.gamma, other.alpha, self.delta, other.gamma),
            delta: m(self.gamma, other.beta, self.delta, other.delta),
        }
        .normalized(spec)
    }

    /// Adjugate, which is the inverse modulo scalars.
    pub fn inverse(&self, spec: &FieldSpec) -> Pgl {
        Pgl {
            alpha: self.delta,
            beta: spec.neg(self.beta),
            gamma: spec.neg(self.gamma),
            delta: self.alpha,
        }
        .normalized(spec)
    }

    /// Order in `PGL₂`.
    pub fn order(&self, spec: &FieldSpec) -> usize {
        let mut power = *self;
        let mut n = 1;
        while power != Pgl::IDENTITY {
            power = power.compose(spec, self);
            n += 1;
        }
        n
    }

    /// True when the matrix fixes `Y` up to scaling (the affine subgroup).
    pub fn fixes_y(&self) -> bool {
        // Y ↦ βX + δY
        self.beta.is_zero()
    }

    /// The induced action on roots, `ξ ↦ (δξ − γ)/(−βξ + α)`, on
    /// `P¹(E) = E ∪ {∞}` for any extension `E` of the matrix's field
    /// (`None` is ∞). If `X − ξY` divides `F`, then `X − (g⋆ξ)Y`
    /// divides `act(g, F)`.
    pub fn act_on_point(&self, ext: &FieldSpec, xi: Option<Elem>) -> Option<Elem> {
        let (num, den) = match xi {
            Some(x) => (
                ext.sub(ext.mul(self.delta, x), self.gamma),
                ext.sub(self.alpha, ext.mul(self.beta, x)),
            ),
            None => (self.delta, ext.neg(self.beta)),
        };
        if den.is_zero() {
            None
        } else {
            Some(ext.div(num, den).expect("nonzero"))
        }
    }
}

impl fmt::Display for Pgl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.alpha, self.beta, self.gamma, self.delta)
    }
}

/// All `q³ − q` elements of `PGL₂(F_q)` in ascending canonical order.
pub fn enumerate_pgl(spec: &FieldSpec) -> Vec<Pgl> {
    let mut out = Vec::new();
    for a in spec.elements() {
        for b in spec.elements() {
            for c in spec.elements() {
                for d in spec.elements() {
                    let m = Pgl {
                        alpha: a,
                        beta: b,
                        gamma: c,
                        delta: d,
                    };
                    let first = [a, b, c, d].into_iter().find(|e| !e.is_zero());
                    if first == Some(Elem::ONE) && !m.det(spec).is_zero() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// The affine subgroup `GA₁(F_q)`: elements of `Γ` fixing `Y` up to scaling.
pub fn enumerate_affine(spec: &FieldSpec) -> Vec<Pgl> {
    enumerate_pgl(spec).into_iter().filter(Pgl::fixes_y).collect()
}

/// `act(g, F) = F(αX + γY, βX + δY)`.
pub fn act(g: &Pgl, form: &Form) -> Form {
    ActionMatrix::new(form.spec(), g, form.degree()).apply(form)
}

/// The linear map of `act(g, ·)` on forms of one degree, precomputed.
pub struct ActionMatrix {
    spec: FieldSpec,
    rows: Vec<Vec<Elem>>,
}

impl ActionMatrix {
    pub fn new(spec: &FieldSpec, g: &Pgl, d: usize) -> ActionMatrix {
        // X ↦ αX + γY, Y ↦ βX + δY
        let u = [g.gamma, g.alpha];
        let v = [g.delta, g.beta];
        let powers = |base: &[Elem; 2]| {
            let mut out = vec![vec![Elem::ONE]];
            for k in 0..d {
                out.push(convolve(spec, &out[k], base));
            }
            out
        };
        let (up, vp) = (powers(&u), powers(&v));
        let rows = (0..=d).map(|i| convolve(spec, &up[i], &vp[d - i])).collect();
        ActionMatrix {
            spec: spec.clone(),
            rows,
        }
    }

    pub fn apply(&self, form: &Form) -> Form {
        let spec = &self.spec;
        let mut out = vec![Elem::ZERO; form.coeffs.len()];
        for (row, &c) in self.rows.iter().zip(&form.coeffs) {
            if c.is_zero() {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = spec.add(*o, spec.mul(c, r));
            }
        }
        Form::from_trusted(spec, out)
    }
}

/// `I(q, n)`: irreducible forms of degree `n` up to scaling. For `n = 1` these
/// are the `q` monic linears followed by `Y`.
pub fn irreducible_forms(spec: &FieldSpec, n: usize) -> Vec<ProjForm> {
    let mut out: Vec<ProjForm> = enumerate_monic_irreducibles(spec, n)
        .iter()
        .map(|p| ProjForm(homogenize(p, n).expect("degree fits")))
        .collect();
    if n == 1 {
        out.push(ProjForm(Form::y(spec)));
    }
    out
}

/// True when the form is irreducible (up to scaling).
pub fn is_irreducible_form(form: &Form) -> bool {
    match dehomogenize(form) {
        Ok((f, 0)) => poly::is_irreducible(&f),
        Ok((f, 1)) => form.degree() == 1 && f.degree() == Some(0),
        _ => false,
    }
}

/// One orbit of a group acting on forms up to scaling.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Least member in [`ProjForm`] order.
    pub representative: ProjForm,
    pub members: Vec<ProjForm>,
    pub stabilizer: Vec<Pgl>,
    /// The stabilizer is generated by one of its elements.
    pub cyclic: bool,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub q: u32,
    pub degree: usize,
    pub group_order: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    /// Orbit sizes in the order the orbits were found.
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::size).collect()
    }

    pub fn orbit_of(&self, form: &ProjForm) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.members.binary_search(form).is_ok())
    }
}

/// Orbits of `group` on `forms` (which must be closed under the action and
/// share one degree). Every element of `group` is applied to each
/// representative; no generating set is assumed.
pub fn orbits(spec: &FieldSpec, forms: &[ProjForm], group: &[Pgl]) -> OrbitReport {
    let degree = forms.first().map_or(0, ProjForm::degree);
    let matrices: Vec<ActionMatrix> = group.iter().map(|g| ActionMatrix::new(spec, g, degree)).collect();
    let mut index: BTreeMap<u64, usize> = BTreeMap::new();
    for (i, f) in forms.iter().enumerate() {
        index.insert(f.0.code(), i);
    }
    let mut seen = vec![false; forms.len()];
    let mut result = Vec::new();
    for start in 0..forms.len() {
        if seen[start] {
            continue;
        }
        let rep = &forms[start];
        let mut members = Vec::new();
        let mut stabilizer = Vec::new();
        for (g, m) in group.iter().zip(&matrices) {
            let image = ProjForm::new(m.apply(&rep.0)).expect("action is invertible");
            if image == *rep {
                stabilizer.push(*g);
            }
            let i = *index.get(&image.0.code()).expect("form set is closed under the action");
            if !seen[i] {
                seen[i] = true;
                members.push(image);
            }
        }
        members.sort();
        let cyclic = stabilizer.iter().any(|g| g.order(spec) == stabilizer.len());
        result.push(Orbit {
            representative: members[0].clone(),
            members,
            stabilizer,
            cyclic,
        });
    }
    OrbitReport {
        q: spec.order(),
        degree,
        group_order: group.len(),
        orbits: result,
    }
}

/// Orbit decomposition of `I(q, d)` under the full group `Γ`.
pub fn orbits_on_irreducibles(spec: &FieldSpec, d: usize) -> Result<OrbitReport> {
    if spec.order() > 5 || d > 7 || d == 0 {
        return Err(Error::OutOfRange(format!(
            "orbits need q <= 5 and 1 <= d <= 7, got q={} d={d}",
            spec.order()
        )));
    }
    Ok(orbits(spec, &irreducible_forms(spec, d), &enumerate_pgl(spec)))
}

/// `|F_q ∪ F_{q²} ∪ ... ∪ F_{q^m}|` inside the algebraic closure, as
/// `sum_{e <= m} e · N_q(e)` with `N_q(e)` the number of monic irreducibles.
pub fn union_field_size(q: u64, m: u32) -> u64 {
    (1..=m).map(|e| e as u64 * poly::count_monic_irreducibles(q, e)).sum()
}

/// Minimal polynomial over the base of `ext` of the element `xi`, as the
/// product of `x − τ^k(ξ)` over its distinct Frobenius conjugates.
pub fn minimal_polynomial(ext: &FieldSpec, xi: Elem) -> Result<Poly> {
    let base = ext
        .base()
        .ok_or_else(|| Error::OutOfRange("minimal polynomial needs an extension".into()))?;
    let mut conjugates = vec![xi];
    loop {
        let next = ext.frobenius(*conjugates.last().unwrap());
        if next == xi {
            break;
        }
        conjugates.push(next);
    }
    let mut prod = vec![Elem::ONE];
    for c in conjugates {
        prod = raw::mul(ext, &prod, &[ext.neg(c), Elem::ONE]);
    }
    for c in &prod {
        if c.0 >= base.order() {
            return Err(Error::SpecMismatch);
        }
    }
    Poly::new(base, prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{make_extension, make_field};
    use crate::poly::Poly;
    use alloc::string::ToString;

    fn poly(spec: &FieldSpec, codes: &[u32]) -> Poly {
        Poly::from_codes(spec, codes).unwrap()
    }

    #[test]
    fn homogenize_examples() {
        let f5 = make_field(5).unwrap();
        let f = homogenize(&poly(&f5, &[2, 4, 2, 1]), 3).unwrap();
        // X^3 + 2X^2Y + 4XY^2 + 2Y^3
        assert_eq!(f.codes(), [2, 4, 2, 1]);
        assert_eq!(f.to_string(), "X^3 + 2X^2Y + 4XY^2 + 2Y^3");
        assert_eq!(homogenize(&Poly::one(&f5), 2).unwrap().to_string(), "Y^2");
        let f2 = make_field(2).unwrap();
        assert_eq!(
            homogenize(&poly(&f2, &[1, 1, 1]), 2).unwrap().to_string(),
            "X^2 + XY + Y^2"
        );
        assert_eq!(
            homogenize(&poly(&f2, &[1, 1, 1]), 1).unwrap_err(),
            Error::DegreeExceeded { degree: 2, max: 1 }
        );
    }

    #[test]
    fn dehomogenize_examples() {
        let f2 = make_field(2).unwrap();
        let q = Form::from_codes(&f2, &[1, 1, 1]).unwrap();
        assert_eq!(dehomogenize(&q).unwrap(), (poly(&f2, &[1, 1, 1]), 0));
        let xy = Form::from_codes(&f2, &[0, 1, 0]).unwrap();
        assert_eq!(dehomogenize(&xy).unwrap(), (poly(&f2, &[0, 1]), 1));
        assert_eq!(dehomogenize(&Form::y_power(&f2, 3)).unwrap(), (Poly::one(&f2), 3));
        assert_eq!(dehomogenize(&Form::zero(&f2, 2)), Err(Error::Zero));
        let (f, e) = dehomogenize(&xy).unwrap();
        assert_eq!(Form::y_power(&f2, e).mul(&homogenize(&f, 2 - e).unwrap()), xy);
    }

    #[test]
    fn action_examples() {
        let f3 = make_field(3).unwrap();
        let f = Form::from_codes(&f3, &[1, 2, 0, 1]).unwrap();
        assert_eq!(act(&Pgl::IDENTITY, &f), f);
        // the raw scalar matrix 2I multiplies by 2^3
        let scalar = Pgl {
            alpha: Elem(2),
            beta: Elem(0),
            gamma: Elem(0),
            delta: Elem(2),
        };
        assert_eq!(act(&scalar, &f), f.scale(f3.pow(Elem(2), 3)));

        let f2 = make_field(2).unwrap();
        let q = Form::from_codes(&f2, &[1, 1, 1]).unwrap();
        let g = Pgl::new(&f2, Elem(1), Elem(1), Elem(0), Elem(1)).unwrap();
        assert_eq!(act(&g, &q), q);
    }

    #[test]
    fn action_is_a_left_action() {
        let f3 = make_field(3).unwrap();
        let group = enumerate_pgl(&f3);
        let forms = [
            Form::from_codes(&f3, &[1, 2, 0, 1]).unwrap(),
            Form::from_codes(&f3, &[2, 0, 1, 1, 0]).unwrap(),
        ];
        let mut other_fails = false;
        for g in group.iter().step_by(5) {
            for h in group.iter().step_by(7) {
                for f in &forms {
                    let twice = act(g, &act(h, f)).projective().unwrap();
                    assert_eq!(act(&g.compose(&f3, h), f).projective().unwrap(), twice);
                    other_fails |= act(&h.compose(&f3, g), f).projective().unwrap() != twice;
                }
            }
        }
        assert!(other_fails, "the right-action candidate should fail somewhere");
    }

    #[test]
    fn group_sizes_and_laws() {
        for (q, n) in [(2, 6), (3, 24), (4, 60), (5, 120)] {
            let spec = make_field(q).unwrap();
            let group = enumerate_pgl(&spec);
            assert_eq!(group.len(), n);
            for g in &group {
                assert_eq!(g.compose(&spec, &g.inverse(&spec)), Pgl::IDENTITY);
                assert_eq!(Pgl::IDENTITY.compose(&spec, g), *g);
            }
        }
        let f3 = make_field(3).unwrap();
        let group = enumerate_pgl(&f3);
        for a in &group {
            for b in &group {
                let ab = a.compose(&f3, b);
                assert!(group.binary_search(&ab).is_ok());
                for c in group.iter().step_by(5) {
                    assert_eq!(ab.compose(&f3, c), a.compose(&f3, &b.compose(&f3, c)));
                }
            }
        }
    }

    #[test]
    fn irreducible_form_lists() {
        let f2 = make_field(2).unwrap();
        let lin: Vec<String> = irreducible_forms(&f2, 1).iter().map(|f| f.to_string()).collect();
        assert_eq!(lin, ["X", "X + Y", "Y"]);
        let quad: Vec<String> = irreducible_forms(&f2, 2).iter().map(|f| f.to_string()).collect();
        assert_eq!(quad, ["X^2 + XY + Y^2"]);
        let f3 = make_field(3).unwrap();
        assert_eq!(irreducible_forms(&f3, 3).len(), 8);
        assert!(irreducible_forms(&f3, 3).iter().all(|f| is_irreducible_form(f.form())));
        assert!(is_irreducible_form(&Form::y(&f3)));
        assert!(!is_irreducible_form(&Form::y_power(&f3, 2)));
    }

    #[test]
    fn orbit_examples() {
        let f2 = make_field(2).unwrap();
        let sextics = orbits_on_irreducibles(&f2, 6).unwrap();
        let mut sizes = sextics.sizes();
        sizes.sort();
        assert_eq!(sizes, [3, 6]);
        let special = homogenize(&poly(&f2, &[1, 0, 0, 1, 0, 0, 1]), 6)
            .unwrap()
            .projective()
            .unwrap();
        let orbit = sextics.orbit_of(&special).unwrap();
        assert_eq!((orbit.size(), orbit.stabilizer_order()), (3, 2));

        let f3 = make_field(3).unwrap();
        let quintics = orbits_on_irreducibles(&f3, 5).unwrap();
        assert_eq!(quintics.sizes(), [24, 24]);
        assert!(quintics.orbits.iter().all(|o| o.stabilizer_order() == 1));

        let quartics = orbits_on_irreducibles(&f2, 4).unwrap();
        assert_eq!(quartics.sizes(), [3]);
        for report in [&sextics, &quintics, &quartics] {
            for o in &report.orbits {
                assert_eq!(o.size() * o.stabilizer_order(), report.group_order);
                assert!(o.cyclic);
            }
        }
        assert!(orbits_on_irreducibles(&make_field(7).unwrap(), 3).is_err());
    }

    #[test]
    fn union_sizes() {
        assert_eq!(union_field_size(7, 1), 7);
        assert_eq!(union_field_size(3, 2), 9);
        assert_eq!(union_field_size(2, 4), 22);
        assert_eq!(union_field_size(2, 3), 10);
    }

    #[test]
    fn minimal_polynomials_and_point_action() {
        let f3 = make_field(3).unwrap();
        let f27 = make_extension(&f3, 3).unwrap();
        let group = enumerate_pgl(&f3);
        // t itself has the modulus as minimal polynomial
        let t = Elem(3);
        assert_eq!(minimal_polynomial(&f27, t).unwrap().coeffs(), f27.modulus());
        for g in group.iter().step_by(3) {
            let image = g.act_on_point(&f27, Some(t)).unwrap();
            let lhs = homogenize(&minimal_polynomial(&f27, image).unwrap(), 3)
                .unwrap()
                .projective()
                .unwrap();
            let m = homogenize(&minimal_polynomial(&f27, t).unwrap(), 3).unwrap();
            assert_eq!(act(g, &m).projective().unwrap(), lhs);
        }
        assert!(minimal_polynomial(&f3, Elem(1)).is_err());
    }
}
