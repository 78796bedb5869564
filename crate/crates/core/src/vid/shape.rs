//! Shapes: formal sums of products of degree-labelled factor slots.
//!
//! Slots with different ids are inequivalent. A shape is stored in canonical
//! form (the least encoding over all relabelings of slots within a degree),
//! so isomorphic shapes compare equal. Relative term scalars are a single
//! flag: when set, every term after the first carries a free nonzero scalar.
//!
//! Shapes render as `L1^2.L2 + a*L3.L4.L5`, with letters `L Q C D E S T`
//! for slot degrees 1 to 7.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use super::{search_vids, verify_vid, Decomposition, Mode};
use crate::error::{Error, Result};
use crate::ffield::{Elem, FieldSpec};
use crate::forms::{homogenize, irreducible_forms, Form, ProjForm};
use crate::poly::{count_irreducibles, count_monic_irreducibles, enumerate_monic_irreducibles, factorize, Poly};

const LETTERS: [char; 7] = ['L', 'Q', 'C', 'D', 'E', 'S', 'T'];
const SCALAR_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

type Term = Vec<(usize, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    degree: usize,
    slots: Vec<usize>,
    terms: Vec<Term>,
    scaled: bool,
}

impl Shape {
    /// Builds a shape from slot degrees and terms of `(slot, exponent)` pairs.
    pub fn new(slot_degrees: Vec<usize>, terms: Vec<Term>, scaled: bool) -> Result<Shape> {
        if terms.len() < 2 {
            return Err(Error::OutOfRange("a shape needs at least two terms".into()));
        }
        if slot_degrees.iter().any(|&n| n == 0 || n > LETTERS.len()) {
            return Err(Error::OutOfRange("slot degrees must be in 1..=7".into()));
        }
        let mut used = vec![false; slot_degrees.len()];
        let mut merged = Vec::with_capacity(terms.len());
        let mut degree = None;
        for term in terms {
            let mut m: BTreeMap<usize, u32> = BTreeMap::new();
            for (slot, e) in term {
                if slot >= slot_degrees.len() || e == 0 {
                    return Err(Error::OutOfRange(format!("bad factor ({slot}, {e})")));
                }
                used[slot] = true;
                *m.entry(slot).or_default() += e;
            }
            let deg: usize = m.iter().map(|(&s, &e)| slot_degrees[s] * e as usize).sum();
            if *degree.get_or_insert(deg) != deg {
                return Err(Error::DegreeMismatch {
                    expected: degree.unwrap(),
                    found: Some(deg),
                });
            }
            merged.push(m.into_iter().collect());
        }
        if used.iter().any(|u| !u) {
            return Err(Error::OutOfRange("every slot must occur in some term".into()));
        }
        let degree = degree.unwrap();
        if degree == 0 {
            return Err(Error::OutOfRange("terms must not be empty".into()));
        }
        let c = canonicalize(&slot_degrees, &merged);
        Ok(Shape {
            degree,
            slots: c.slots,
            terms: c.terms,
            scaled,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Slot degrees, nondecreasing.
    pub fn slot_degrees(&self) -> &[usize] {
        &self.slots
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms `r`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self) -> bool {
        self.scaled
    }

    pub fn with_scaled(mut self, scaled: bool) -> Shape {
        self.scaled = scaled;
        self
    }

    /// Has a slot of degree above `d/2`, which is not an operative factor.
    pub fn is_crank(&self) -> bool {
        self.slots.iter().any(|&n| 2 * n > self.degree)
    }

    fn slot_label(&self, slot: usize) -> String {
        let n = self.slots[slot];
        let first = self.slots.iter().position(|&m| m == n).unwrap();
        format!("{}{}", LETTERS[n - 1], slot - first + 1)
    }
}

struct Canonical {
    slots: Vec<usize>,
    terms: Vec<Term>,
    /// Old slot id to canonical slot id.
    relabel: Vec<usize>,
    /// Canonical term index to old term index.
    term_order: Vec<usize>,
}

type EncodedTerm = Vec<(usize, Reverse<u32>)>;
type Encoding = Vec<EncodedTerm>;

fn encode(terms: &[Term], relabel: &[usize]) -> (Encoding, Vec<usize>) {
    let mut enc: Vec<(EncodedTerm, usize)> = terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut v: Vec<_> = t.iter().map(|&(s, e)| (relabel[s], Reverse(e))).collect();
            v.sort();
            (v, i)
        })
        .collect();
    enc.sort();
    enc.into_iter().unzip()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Least encoding over all relabelings that keep slot degrees nondecreasing.
fn canonicalize(slot_degrees: &[usize], terms: &[Term]) -> Canonical {
    let mut by_degree: Vec<usize> = (0..slot_degrees.len()).collect();
    by_degree.sort_by_key(|&s| slot_degrees[s]);
    let slots: Vec<usize> = by_degree.iter().map(|&s| slot_degrees[s]).collect();
    let mut classes = Vec::new();
    let mut start = 0;
    while start < slots.len() {
        let end = start + slots[start..].iter().take_while(|&&n| n == slots[start]).count();
        classes.push((start, permutations(end - start)));
        start = end;
    }
    let mut choice = vec![0usize; classes.len()];
    let mut relabel = vec![0usize; slots.len()];
    let mut best: Option<(Encoding, Vec<usize>, Vec<usize>)> = None;
    loop {
        for (c, (start, perms)) in classes.iter().enumerate() {
            for (k, &target) in perms[choice[c]].iter().enumerate() {
                relabel[by_degree[start + k]] = start + target;
            }
        }
        let (enc, order) = encode(terms, &relabel);
        if best.as_ref().map_or(true, |b| enc < b.0) {
            best = Some((enc, relabel.clone(), order));
        }
        let mut c = 0;
        loop {
            if c == classes.len() {
                let (enc, relabel, term_order) = best.unwrap();
                let terms = enc
                    .into_iter()
                    .map(|t| t.into_iter().map(|(s, e)| (s, e.0)).collect())
                    .collect();
                return Canonical {
                    slots,
                    terms,
                    relabel,
                    term_order,
                };
            }
            choice[c] += 1;
            if choice[c] < classes[c].1.len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
                if self.scaled {
                    let name = SCALAR_NAMES
                        .get(i - 1)
                        .map_or_else(|| format!("a{i}"), |s| s.to_string());
                    write!(f, "{name}*")?;
                }
            }
            for (j, &(slot, e)) in term.iter().enumerate() {
                if j > 0 {
                    f.write_str(".")?;
                }
                f.write_str(&self.slot_label(slot))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Shape> {
        let bad = |msg: &str| Error::Parse(format!("shape {s:?}: {msg}"));
        let mut ids: BTreeMap<(usize, u32), usize> = BTreeMap::new();
        let mut slot_degrees = Vec::new();
        let mut terms = Vec::new();
        let mut scaled = false;
        for raw_term in s.split('+') {
            let mut body = raw_term.trim();
            if let Some((scalar, rest)) = body.split_once('*') {
                if scalar.trim().is_empty() || !scalar.trim().chars().all(|c| c.is_ascii_alphanumeric()) {
                    return Err(bad("bad scalar"));
                }
                scaled = true;
                body = rest.trim();
            }
            let mut term = Vec::new();
            for factor in body.split('.') {
                let factor = factor.trim();
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let mut chars = name.chars();
                let letter = chars.next().ok_or_else(|| bad("empty factor"))?;
                let degree = LETTERS
                    .iter()
                    .position(|&l| l == letter)
                    .ok_or_else(|| bad("unknown letter"))?
                    + 1;
                let rest = chars.as_str();
                let index = if rest.is_empty() {
                    1
                } else {
                    rest.parse::<u32>().map_err(|_| bad("bad index"))?
                };
                let id = *ids.entry((degree, index)).or_insert_with(|| {
                    slot_degrees.push(degree);
                    slot_degrees.len() - 1
                });
                term.push((id, exp));
            }
            terms.push(term);
        }
        Shape::new(slot_degrees, terms, scaled).map_err(|e| match e {
            Error::Parse(_) => e,
            other => bad(&other.to_string()),
        })
    }
}

/// Number of slots of degree `n` a visibly irreducible shape needs.
fn required_slots(q: u64, n: u32, mode: Mode) -> u64 {
    match mode {
        Mode::DegreeFree => count_monic_irreducibles(q, n),
        Mode::Full | Mode::Homogeneous => count_irreducibles(q, n),
    }
}

/// True when, for every `n <= d/2`, the shape has exactly `|I(q, n)|` slots of
/// degree `n` and each occurs in all terms but one.
///
/// In [`Mode::DegreeFree`] the form `Y` is not counted.
pub fn is_vis(shape: &Shape, q: u64, mode: Mode) -> bool {
    let r = shape.len();
    (1..=shape.degree / 2).all(|n| {
        let slots: Vec<usize> = (0..shape.slots.len()).filter(|&s| shape.slots[s] == n).collect();
        slots.len() as u64 == required_slots(q, n as u32, mode)
            && slots
                .iter()
                .all(|&s| shape.terms.iter().filter(|t| t.iter().any(|&(x, _)| x == s)).count() == r - 1)
    })
}

/// A shape with actual irreducible forms substituted for its slots and a
/// scalar for each term, the first scalar being 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeInstance {
    pub shape: Shape,
    /// Canonical slot id to form.
    pub assignment: Vec<ProjForm>,
    pub scalars: Vec<Elem>,
}

impl ShapeInstance {
    pub fn spec(&self) -> &FieldSpec {
        self.assignment[0].form().spec()
    }

    pub fn terms(&self) -> Vec<Form> {
        build_terms(&self.shape, &self.assignment, &self.scalars)
    }

    pub fn sum(&self) -> Form {
        let terms = self.terms();
        terms
            .iter()
            .skip(1)
            .fold(terms[0].clone(), |acc, t| acc.add(t).expect("equal degrees"))
    }

    /// Identifies the instance up to overall scaling and term order.
    pub fn key(&self) -> Vec<Vec<u32>> {
        instance_key(self.spec(), &self.terms())
    }
}

fn build_terms(shape: &Shape, assignment: &[ProjForm], scalars: &[Elem]) -> Vec<Form> {
    shape
        .terms
        .iter()
        .zip(scalars)
        .map(|(t, &c)| {
            let spec = assignment[0].form().spec();
            t.iter()
                .fold(Form::y_power(spec, 0), |acc, &(s, e)| {
                    acc.mul(&assignment[s].form().pow(e))
                })
                .scale(c)
        })
        .collect()
}

fn instance_key(spec: &FieldSpec, terms: &[Form]) -> Vec<Vec<u32>> {
    spec.nonzero_elements()
        .map(|c| {
            let mut k: Vec<Vec<u32>> = terms.iter().map(|t| t.scale(c).codes()).collect();
            k.sort();
            k
        })
        .min()
        .expect("fields have a nonzero element")
}

/// All instances of `shape` over `spec` up to overall scaling and term
/// permutations preserving the shape. Slots take irreducible forms, distinct
/// slots nonproportional ones; [`Mode::DegreeFree`] never uses `Y`.
pub fn enumerate_instances(shape: &Shape, spec: &FieldSpec, mode: Mode) -> Result<Vec<ShapeInstance>> {
    if shape.degree > 7 {
        return Err(Error::OutOfRange(format!("shape degree {} exceeds 7", shape.degree)));
    }
    let y = Form::y(spec);
    let mut pools: BTreeMap<usize, Vec<ProjForm>> = BTreeMap::new();
    for &n in &shape.slots {
        if pools.contains_key(&n) {
            continue;
        }
        let mut pool = irreducible_forms(spec, n);
        if mode == Mode::DegreeFree {
            pool.retain(|p| *p.form() != y);
        }
        let needed = shape.slots.iter().filter(|&&m| m == n).count();
        if pool.len() < needed {
            return Err(Error::UnsatisfiableShape {
                degree: n as u32,
                slots: needed,
                available: pool.len(),
            });
        }
        pools.insert(n, pool);
    }
    let scalar_choices: Vec<Vec<Elem>> = if shape.scaled {
        let mut all = vec![vec![Elem::ONE]];
        for _ in 1..shape.len() {
            all = all
                .into_iter()
                .flat_map(|v| {
                    spec.nonzero_elements().map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        all
    } else {
        vec![vec![Elem::ONE; shape.len()]]
    };
    let mut found: BTreeMap<Vec<Vec<u32>>, ShapeInstance> = BTreeMap::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(shape.slots.len());
    assign(shape, &pools, &mut chosen, &mut |idx| {
        let assignment: Vec<ProjForm> = idx
            .iter()
            .zip(&shape.slots)
            .map(|(&i, n)| pools[n][i].clone())
            .collect();
        for scalars in &scalar_choices {
            let terms = build_terms(shape, &assignment, scalars);
            found
                .entry(instance_key(spec, &terms))
                .or_insert_with(|| ShapeInstance {
                    shape: shape.clone(),
                    assignment: assignment.clone(),
                    scalars: scalars.clone(),
                });
        }
    });
    Ok(found.into_values().collect())
}

/// Injective choices of pool indices for each slot, within degree classes.
fn assign(
    shape: &Shape,
    pools: &BTreeMap<usize, Vec<ProjForm>>,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    let s = chosen.len();
    if s == shape.slots.len() {
        visit(chosen);
        return;
    }
    let n = shape.slots[s];
    for i in 0..pools[&n].len() {
        let taken = (0..s).any(|t| shape.slots[t] == n && chosen[t] == i);
        if !taken {
            chosen.push(i);
            assign(shape, pools, chosen, visit);
            chosen.pop();
        }
    }
}

/// Reads off the shape of homogeneous summands by factoring each one.
///
/// Does not check that the summands form a decomposition. The shape is marked
/// scaled when the field has more than two elements.
pub fn infer_shape_forms(summands: &[Form]) -> Result<(Shape, ShapeInstance)> {
    if summands.len() < 2 {
        return Err(Error::OutOfRange("a shape needs at least two terms".into()));
    }
    let spec = summands[0].spec().clone();
    let mut slot_forms: Vec<ProjForm> = Vec::new();
    let mut raw_terms: Vec<Vec<(ProjForm, u32)>> = Vec::new();
    let mut units = Vec::new();
    for s in summands {
        let (f, yexp) = s.dehomogenize()?;
        let fac = factorize(&f)?;
        let mut term: Vec<(ProjForm, u32)> = fac
            .factors
            .iter()
            .map(|(p, m)| (ProjForm::new(homogenize(p, p.degree().unwrap()).unwrap()).unwrap(), *m))
            .collect();
        if yexp > 0 {
            term.push((ProjForm::new(Form::y(&spec)).unwrap(), yexp as u32));
        }
        for (p, _) in &term {
            if !slot_forms.contains(p) {
                slot_forms.push(p.clone());
            }
        }
        raw_terms.push(term);
        units.push(fac.unit);
    }
    slot_forms.sort();
    let slot_degrees: Vec<usize> = slot_forms.iter().map(ProjForm::degree).collect();
    if slot_degrees.iter().any(|&n| n > LETTERS.len()) {
        return Err(Error::OutOfRange("factor degree exceeds 7".into()));
    }
    let terms: Vec<Term> = raw_terms
        .iter()
        .map(|t| {
            let mut v: Term = t
                .iter()
                .map(|(p, m)| (slot_forms.binary_search(p).unwrap(), *m))
                .collect();
            v.sort();
            v
        })
        .collect();
    let c = canonicalize(&slot_degrees, &terms);
    let shape = Shape {
        degree: summands[0].degree(),
        slots: c.slots,
        terms: c.terms,
        scaled: spec.order() > 2,
    };
    let mut assignment = slot_forms.clone();
    for (old, &new) in c.relabel.iter().enumerate() {
        assignment[new] = slot_forms[old].clone();
    }
    let first = spec.inv(units[c.term_order[0]])?;
    let scalars = c.term_order.iter().map(|&i| spec.mul(units[i], first)).collect();
    Ok((
        shape.clone(),
        ShapeInstance {
            shape,
            assignment,
            scalars,
        },
    ))
}

/// The shape of an accepted decomposition.
pub fn infer_shape(dec: &Decomposition) -> Result<(Shape, ShapeInstance)> {
    if !verify_vid(&dec.sum(), dec)?.accepted {
        return Err(Error::NotAVid);
    }
    infer_shape_forms(&dec.forms())
}

#[derive(Clone, Debug)]
pub struct ShapeRow {
    pub poly: Poly,
    /// Number of decompositions found, of any shape.
    pub total: usize,
    pub counts: BTreeMap<Shape, usize>,
}

/// Decompositions of every monic irreducible of one degree, grouped by shape.
#[derive(Clone, Debug)]
pub struct ShapeTable {
    pub q: u32,
    pub degree: usize,
    pub rows: Vec<ShapeRow>,
}

impl ShapeTable {
    /// Per-irreducible counts of `shape`, in row order.
    pub fn counts_of(&self, shape: &Shape) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.counts.get(shape).copied().unwrap_or(0))
            .collect()
    }
}

pub fn classify_vids_by_shape(spec: &FieldSpec, d: usize, r_max: usize, mode: Mode) -> Result<ShapeTable> {
    let mut rows = Vec::new();
    for f in enumerate_monic_irreducibles(spec, d) {
        let found = search_vids(&f, r_max, mode)?;
        let mut counts: BTreeMap<Shape, usize> = BTreeMap::new();
        for dec in &found {
            let (shape, _) = infer_shape_forms(&dec.forms())?;
            *counts.entry(shape).or_default() += 1;
        }
        rows.push(ShapeRow {
            poly: f,
            total: found.len(),
            counts,
        });
    }
    Ok(ShapeTable {
        q: spec.order(),
        degree: d,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use crate::vid::verify_hvid;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    fn p(spec: &FieldSpec, codes: &[u32]) -> Poly {
        Poly::from_codes(spec, codes).unwrap()
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(shape("L1.L2.L3 + a*L4.L5.L6").to_string(), "L1.L2.L3 + a*L4.L5.L6");
        assert_eq!(shape("L3.L4 + L1.L2").to_string(), "L1.L2 + L3.L4");
    }

    #[test]
    fn canonical_forms_agree() {
        assert_eq!(shape("L1.L2 + L2.L3 + L3.L1"), shape("L1.L2 + L1.L3 + L2.L3"));
        assert_eq!(
            shape("L1^2.L2 + L2^2.L3 + L3^2.L1"),
            shape("L2^2.L1 + L1^2.L3 + L3^2.L2")
        );
        assert_eq!(shape("Q^2 + L1^2.L2.L3").to_string(), "L1^2.L2.L3 + Q1^2");
        assert_eq!(shape("L3.Q1^2 + L1^4.L2").to_string(), "L1^4.L2 + L3.Q1^2");
        assert_eq!(shape("a*L2.L3.L4 + L1^3").to_string(), "L1^3 + a*L2.L3.L4");
        assert_eq!(shape("L1^2.L2 + L3.L4.L5"), shape("L1.L2.L3 + L4^2.L5"));
        assert_ne!(shape("L1^2.L2 + L3.L4.L5"), shape("L1^3 + L2.L3.L4"));
        assert_ne!(shape("L1.L2 + L3.L4"), shape("L1.L2 + a*L3.L4"));
    }

    #[test]
    fn parse_errors() {
        for s in [
            "",
            "L1",
            "L1.L2 + L3",
            "X1.L2 + L3.L4",
            "L1^x + L2",
            "L1L2 + L3L4",
            "L1.L2 + *L3.L4",
        ] {
            assert!(matches!(s.parse::<Shape>(), Err(Error::Parse(_))), "{s}");
        }
    }

    #[test]
    fn vis_examples() {
        assert!(is_vis(&shape("L1.L2 + L2.L3 + L3.L1"), 2, Mode::Full));
        assert!(is_vis(&shape("L1^2 + L2.L3"), 2, Mode::Full));
        assert!(!is_vis(&shape("L1.L2 + L2.L3 + L3.L1"), 3, Mode::Full));
        assert!(is_vis(&shape("L1.L2 + a*L3.L4"), 4, Mode::DegreeFree));
        assert!(!is_vis(&shape("L1.L2 + a*L3.L4"), 4, Mode::Full));
        assert!(shape("L1.L2.L3 + C1").is_crank());
        assert!(!shape("L1^2.L2 + L2^2.L3 + L3^2.L1").is_crank());
    }

    #[test]
    fn instance_counts() {
        let cases = [
            (5, "L1.L2.L3 + a*L4.L5.L6", 40),
            (3, "L1.L2 + a*L3.L4", 6),
            (4, "L1^2.L2 + a*L3.L4.L5", 60),
            (2, "L1.L2 + L2.L3 + L3.L1", 1),
            (2, "L1^2.L2 + L2^2.L3 + L3^2.L1", 2),
            (3, "L1^3 + a*L2.L3.L4", 8),
        ];
        for (q, s, n) in cases {
            let spec = make_field(q).unwrap();
            let inst = enumerate_instances(&shape(s), &spec, Mode::Full).unwrap();
            assert_eq!(inst.len(), n, "{s} over F{q}");
            for i in &inst {
                let sum = i.sum();
                assert!(verify_hvid(&sum, &i.terms()).unwrap().accepted);
            }
        }
        let f4 = make_field(4).unwrap();
        assert_eq!(
            enumerate_instances(&shape("L1.L2 + a*L3.L4"), &f4, Mode::DegreeFree)
                .unwrap()
                .len(),
            9
        );
    }

    #[test]
    fn unsatisfiable() {
        let f2 = make_field(2).unwrap();
        let err = enumerate_instances(&shape("L1.L2 + L3.L4"), &f2, Mode::Full).unwrap_err();
        assert_eq!(
            err,
            Error::UnsatisfiableShape {
                degree: 1,
                slots: 4,
                available: 3
            }
        );
    }

    #[test]
    fn inferred_shapes() {
        let f5 = make_field(5).unwrap();
        let dec = Decomposition::new(3, Mode::Full, vec![p(&f5, &[0, 4, 0, 1]), p(&f5, &[2, 0, 2])]).unwrap();
        let (s, inst) = infer_shape(&dec).unwrap();
        assert_eq!(s.to_string(), "L1.L2.L3 + a*L4.L5.L6");
        assert_eq!(inst.sum().projective(), homogenize(&dec.sum(), 3).unwrap().projective());

        let f2 = make_field(2).unwrap();
        let dec = Decomposition::new(2, Mode::Full, vec![p(&f2, &[0, 0, 1]), p(&f2, &[1, 1])]).unwrap();
        assert_eq!(infer_shape(&dec).unwrap().0, shape("L1^2 + L2.L3"));
        let dec = Decomposition::new(2, Mode::Full, vec![p(&f2, &[0, 1, 1]), p(&f2, &[1])]).unwrap();
        assert_eq!(infer_shape(&dec).unwrap().0, shape("L1.L2 + L3^2"));

        let bad = Decomposition::new(4, Mode::Full, vec![p(&f2, &[0, 0, 0, 0, 1]), p(&f2, &[1, 1])]).unwrap();
        assert_eq!(infer_shape(&bad).unwrap_err(), Error::NotAVid);
    }

    #[test]
    fn classify_small() {
        let f3 = make_field(3).unwrap();
        let table = classify_vids_by_shape(&f3, 2, 2, Mode::Full).unwrap();
        assert_eq!(table.rows.len(), 3);
        assert_eq!(table.counts_of(&shape("L1.L2 + a*L3.L4")), [2, 2, 2]);
        let f5 = make_field(5).unwrap();
        let table = classify_vids_by_shape(&f5, 3, 2, Mode::Full).unwrap();
        assert_eq!(table.rows.len(), 40);
        assert!(table.counts_of(&shape("L1.L2.L3 + a*L4.L5.L6")).iter().all(|&c| c == 1));
    }
}
