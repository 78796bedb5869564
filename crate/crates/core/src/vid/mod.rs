//! Visibly irreducible decompositions: verification, the term-count bound and
//! exhaustive search, plus the shape machinery in [`shape`].
//!
//! An *operative factor* for degree `d` is an irreducible of degree at most
//! `d/2`. A decomposition `f = f_1 + ... + f_r` is visibly irreducible when
//! every operative factor divides all summands but exactly one and, in
//! [`Mode::Full`], exactly one summand has degree `d`. In the homogeneous
//! setting the form `Y` is one more operative factor and replaces the degree
//! condition.

mod search;
pub mod shape;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::forms::{self, homogenize, irreducible_forms, Form, ProjForm};
use crate::poly::{count_monic_irreducibles, enumerate_monic_irreducibles, Poly};

pub use search::{default_r_max, search_vids, MAX_SEARCH_DEGREE, MAX_SEARCH_ORDER};
pub use shape::{
    classify_vids_by_shape, enumerate_instances, infer_shape, infer_shape_forms, is_vis, Shape, ShapeInstance,
    ShapeRow, ShapeTable,
};

/// Which definition a decomposition is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Divisibility by every operative factor plus the degree condition.
    Full,
    /// Divisibility only; the degree condition is dropped.
    DegreeFree,
    /// Homogeneous: `Y` is an operative factor in place of the degree condition.
    Homogeneous,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::DegreeFree => "degree-free",
            Mode::Homogeneous => "homogeneous",
        }
    }

    pub fn from_name(s: &str) -> Option<Mode> {
        match s {
            "full" => Some(Mode::Full),
            "degree-free" => Some(Mode::DegreeFree),
            "homogeneous" => Some(Mode::Homogeneous),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A candidate decomposition of a degree-`d` polynomial: a multiset of
/// `r >= 2` nonzero summands of degree at most `d`.
///
/// Summands are kept in descending canonical order, so two decompositions are
/// the same multiset exactly when they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    degree: usize,
    mode: Mode,
    summands: Vec<Poly>,
}

impl Decomposition {
    pub fn new(d: usize, mode: Mode, mut summands: Vec<Poly>) -> Result<Decomposition> {
        if summands.len() < 2 {
            return Err(Error::OutOfRange("a decomposition needs at least two summands".into()));
        }
        let spec = summands[0].spec().clone();
        for s in &summands {
            if *s.spec() != spec {
                return Err(Error::SpecMismatch);
            }
            match s.degree() {
                None => return Err(Error::Zero),
                Some(deg) if deg > d => return Err(Error::DegreeExceeded { degree: deg, max: d }),
                _ => {}
            }
        }
        summands.sort_by(|a, b| b.cmp(a));
        Ok(Decomposition {
            degree: d,
            mode,
            summands,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        self.summands[0].spec()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn summands(&self) -> &[Poly] {
        &self.summands
    }

    /// Number of summands `r`.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn sum(&self) -> Poly {
        self.summands
            .iter()
            .skip(1)
            .fold(self.summands[0].clone(), |acc, s| &acc + s)
    }

    /// Summands homogenized to degree `d`.
    pub fn forms(&self) -> Vec<Form> {
        self.summands
            .iter()
            .map(|s| homogenize(s, self.degree).expect("summand degree checked"))
            .collect()
    }

    pub fn with_mode(mut self, mode: Mode) -> Decomposition {
        self.mode = mode;
        self
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({s})")?;
        }
        Ok(())
    }
}

/// Divisibility of one operative factor across the summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorRow {
    pub factor: ProjForm,
    /// Indices of summands the factor divides.
    pub divides: Vec<usize>,
    /// Indices of summands the factor does not divide.
    pub omits: Vec<usize>,
}

impl FactorRow {
    pub fn ok(&self) -> bool {
        self.omits.len() == 1
    }
}

/// Outcome of checking a candidate against the definition, with one witness
/// row per operative factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub accepted: bool,
    pub sum_matches: bool,
    pub summands_nonzero: bool,
    pub rows: Vec<FactorRow>,
    /// Indices of summands of full degree, when the degree condition applies.
    pub full_degree: Option<Vec<usize>>,
}

impl VerifyReport {
    /// The first operative factor that breaks the divisibility condition.
    pub fn first_violation(&self) -> Option<&FactorRow> {
        self.rows.iter().find(|r| !r.ok())
    }
}

/// Monic irreducibles of degree at most `d/2`, lowest degree first.
pub fn operative_factors(spec: &FieldSpec, d: usize) -> Vec<Poly> {
    (1..=d / 2)
        .flat_map(|n| enumerate_monic_irreducibles(spec, n))
        .collect()
}

/// Irreducible forms of degree at most `d/2`, including `Y`.
pub fn operative_forms(spec: &FieldSpec, d: usize) -> Vec<ProjForm> {
    (1..=d / 2).flat_map(|n| irreducible_forms(spec, n)).collect()
}

fn factor_rows(factors: &[ProjForm], summands: &[Form]) -> Vec<FactorRow> {
    factors
        .iter()
        .map(|p| {
            let (divides, omits) = (0..summands.len()).partition(|&i| p.form().divides(&summands[i]));
            FactorRow {
                factor: p.clone(),
                divides,
                omits,
            }
        })
        .collect()
}

/// Checks `cand` against the definition for its mode as a decomposition of `f`.
pub fn verify_vid(f: &Poly, cand: &Decomposition) -> Result<VerifyReport> {
    if f.spec() != cand.spec() {
        return Err(Error::SpecMismatch);
    }
    let d = cand.degree();
    if f.degree() != Some(d) || d < 2 {
        return Err(Error::DegreeMismatch {
            expected: d,
            found: f.degree(),
        });
    }
    if cand.mode() == Mode::Homogeneous {
        return verify_hvid(&homogenize(f, d)?, &cand.forms());
    }
    let forms = cand.forms();
    let factors: Vec<ProjForm> = operative_factors(f.spec(), d)
        .iter()
        .map(|p| ProjForm::new(homogenize(p, p.degree().unwrap()).unwrap()).unwrap())
        .collect();
    let rows = factor_rows(&factors, &forms);
    let sum_matches = cand.sum() == *f;
    let full_degree = (cand.mode() == Mode::Full).then(|| {
        (0..cand.len())
            .filter(|&i| cand.summands()[i].degree() == Some(d))
            .collect::<Vec<_>>()
    });
    let accepted = sum_matches && rows.iter().all(FactorRow::ok) && full_degree.as_ref().map_or(true, |v| v.len() == 1);
    Ok(VerifyReport {
        accepted,
        sum_matches,
        summands_nonzero: true,
        rows,
        full_degree,
    })
}

/// Checks a homogeneous decomposition `F = F_1 + ... + F_r` (all of degree `d`).
pub fn verify_hvid(target: &Form, summands: &[Form]) -> Result<VerifyReport> {
    let d = target.degree();
    if d < 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: Some(d),
        });
    }
    if summands.len() < 2 {
        return Err(Error::OutOfRange("a decomposition needs at least two summands".into()));
    }
    for s in summands {
        if s.spec() != target.spec() {
            return Err(Error::SpecMismatch);
        }
        if s.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: Some(s.degree()),
            });
        }
    }
    let mut sum = Form::zero(target.spec(), d);
    for s in summands {
        sum = sum.add(s)?;
    }
    let rows = factor_rows(&operative_forms(target.spec(), d), summands);
    let summands_nonzero = summands.iter().all(|s| !s.is_zero());
    let sum_matches = sum == *target;
    let accepted = sum_matches && summands_nonzero && rows.iter().all(FactorRow::ok);
    Ok(VerifyReport {
        accepted,
        sum_matches,
        summands_nonzero,
        rows,
        full_degree: None,
    })
}

/// Largest number of terms a decomposition can have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RBound {
    /// Not even `r = 2` is possible.
    NoVid,
    Max(usize),
    Unbounded,
}

/// The bound `d r >= (r - 1)(1 + |F_q ∪ ... ∪ F_{q^⌊d/2⌋}|)` solved for `r`.
///
/// In [`Mode::DegreeFree`] the `1 +` (the root at infinity) is dropped.
pub fn max_r_bound_mode(q: u64, d: usize, mode: Mode) -> RBound {
    let union = forms::union_field_size(q, (d / 2) as u32);
    let k = match mode {
        Mode::DegreeFree => union,
        Mode::Full | Mode::Homogeneous => union + 1,
    } as usize;
    if k <= d {
        return RBound::Unbounded;
    }
    // r (k - d) <= k
    let r = k / (k - d);
    if r < 2 {
        RBound::NoVid
    } else {
        RBound::Max(r)
    }
}

pub fn max_r_bound(q: u64, d: usize) -> RBound {
    max_r_bound_mode(q, d, Mode::Full)
}

/// Crank term for `(q, d)`: the product of all operative forms when it has
/// degree exactly `d`. It is divisible by every operative factor, so it can be
/// added to any visibly irreducible decomposition as one more summand.
pub fn crank_term(spec: &FieldSpec, d: usize) -> Option<Form> {
    let product = operative_forms(spec, d)
        .iter()
        .fold(Form::y_power(spec, 0), |acc, p| acc.mul(p.form()));
    (product.degree() == d).then_some(product)
}

/// Number of operative factors of degree `n` for the inhomogeneous
/// definition: the monic irreducibles.
pub fn operative_count(q: u64, n: u32) -> u64 {
    count_monic_irreducibles(q, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use alloc::vec;

    fn p(spec: &FieldSpec, codes: &[u32]) -> Poly {
        Poly::from_codes(spec, codes).unwrap()
    }

    #[test]
    fn operative_examples() {
        let f5 = make_field(5).unwrap();
        let ops: Vec<_> = operative_factors(&f5, 3).iter().map(Poly::codes).collect();
        assert_eq!(ops, [vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![4, 1]]);
        let f2 = make_field(2).unwrap();
        let ops: Vec<_> = operative_factors(&f2, 7).iter().map(Poly::codes).collect();
        assert_eq!(
            ops,
            [
                vec![0, 1],
                vec![1, 1],
                vec![1, 1, 1],
                vec![1, 1, 0, 1],
                vec![1, 0, 1, 1]
            ]
        );
        assert_eq!(operative_forms(&f2, 2).len(), 3);
    }

    #[test]
    fn verify_examples() {
        let f5 = make_field(5).unwrap();
        let f = p(&f5, &[2, 4, 2, 1]);
        let dec = Decomposition::new(3, Mode::Full, vec![p(&f5, &[0, 4, 0, 1]), p(&f5, &[2, 0, 2])]).unwrap();
        assert!(verify_vid(&f, &dec).unwrap().accepted);

        let f2 = make_field(2).unwrap();
        let f = p(&f2, &[1, 1, 0, 0, 1]);
        let dec = Decomposition::new(4, Mode::Full, vec![p(&f2, &[0, 0, 0, 0, 1]), p(&f2, &[1, 1])]).unwrap();
        let report = verify_vid(&f, &dec).unwrap();
        assert!(!report.accepted);
        let bad = report.first_violation().unwrap();
        assert_eq!(bad.factor.form().codes(), [1, 1, 1]);
        assert!(bad.omits.len() == 2);

        let f = p(&f2, &[1, 1, 1]);
        let dec = Decomposition::new(2, Mode::Full, vec![p(&f2, &[0, 1, 1]), p(&f2, &[1])]).unwrap();
        assert!(verify_vid(&f, &dec).unwrap().accepted);
    }

    #[test]
    fn verify_errors() {
        let f2 = make_field(2).unwrap();
        let f3 = make_field(3).unwrap();
        let dec = Decomposition::new(2, Mode::Full, vec![p(&f2, &[0, 1, 1]), p(&f2, &[1])]).unwrap();
        assert_eq!(verify_vid(&p(&f3, &[1, 0, 1]), &dec).unwrap_err(), Error::SpecMismatch);
        assert!(matches!(
            verify_vid(&p(&f2, &[1, 1, 0, 1]), &dec),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(Decomposition::new(2, Mode::Full, vec![p(&f2, &[1])]).is_err());
        assert_eq!(
            Decomposition::new(2, Mode::Full, vec![p(&f2, &[1]), Poly::zero(&f2)]).unwrap_err(),
            Error::Zero
        );
    }

    #[test]
    fn hvid_examples() {
        let f2 = make_field(2).unwrap();
        let target = Form::from_codes(&f2, &[1, 1, 1]).unwrap();
        let xy = Form::from_codes(&f2, &[0, 1, 0]).unwrap();
        let rest = Form::from_codes(&f2, &[1, 0, 1]).unwrap();
        assert!(verify_hvid(&target, &[xy.clone(), rest]).unwrap().accepted);
        // Y divides every summand: its row is empty
        let f5 = make_field(5).unwrap();
        let target = Form::from_codes(&f5, &[1, 2, 0]).unwrap();
        let a = Form::from_codes(&f5, &[1, 1, 0]).unwrap();
        let b = Form::from_codes(&f5, &[0, 1, 0]).unwrap();
        let report = verify_hvid(&target, &[a, b]).unwrap();
        assert!(!report.accepted);
        let y_row = report.rows.iter().find(|r| r.factor.form() == &Form::y(&f5)).unwrap();
        assert!(y_row.omits.is_empty());

        let f = p(&f5, &[2, 4, 2, 1]);
        let dec = Decomposition::new(3, Mode::Full, vec![p(&f5, &[0, 4, 0, 1]), p(&f5, &[2, 0, 2])]).unwrap();
        assert!(verify_hvid(&homogenize(&f, 3).unwrap(), &dec.forms()).unwrap().accepted);
    }

    #[test]
    fn bounds() {
        assert_eq!(max_r_bound(5, 3), RBound::Max(2));
        assert_eq!(max_r_bound(3, 3), RBound::Max(4));
        assert_eq!(max_r_bound(2, 3), RBound::Unbounded);
        assert_eq!(max_r_bound(2, 5), RBound::Unbounded);
        assert_eq!(max_r_bound(2, 2), RBound::Max(3));
        assert_eq!(max_r_bound(2, 7), RBound::Max(2));
        assert_eq!(max_r_bound(3, 4), RBound::NoVid);
        assert_eq!(max_r_bound(4, 2), RBound::NoVid);
        assert_eq!(max_r_bound_mode(4, 2, Mode::DegreeFree), RBound::Max(2));
    }

    #[test]
    fn crank_terms() {
        let f2 = make_field(2).unwrap();
        // X Y (X + Y), i.e. x^2 + x
        assert_eq!(crank_term(&f2, 3).unwrap().codes(), [0, 1, 1, 0]);
        // x (x + 1)(x^2 + x + 1) = x^4 + x
        assert_eq!(crank_term(&f2, 5).unwrap().codes(), [0, 1, 0, 0, 1, 0]);
        assert!(crank_term(&f2, 4).is_none());
        assert!(crank_term(&make_field(3).unwrap(), 3).is_none());
    }
}
