//! Consequences of selected decompositions: the quartic bijection over F_2,
//! cubic partners over F_3 and rootless interpolation for degree q.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{distinct, proj, sum_forms, TheoremReport, Value};
use crate::error::{Error, Result};
use crate::ffield::{make_field, Elem, FieldSpec};
use crate::forms::{act, enumerate_pgl, homogenize, irreducible_forms, is_irreducible_form, Form, ProjForm};
use crate::poly::{enumerate_monic_irreducibles, factorize, is_irreducible, Poly};
use crate::vid::{infer_shape, is_vis, search_vids, verify_hvid, Mode, Shape};

/// `L1^2 L2 L3 + Q^2`, `L1^4 + L2 L3 Q` and `L1^2 Q + L2^2 L3^2` for the
/// linear form `l1` over F_2, `{L2, L3}` being the other two.
fn quartic_expressions(spec: &FieldSpec, l1: &ProjForm) -> [Form; 3] {
    let lin = irreducible_forms(spec, 1);
    let others: Vec<&Form> = lin.iter().filter(|l| *l != l1).map(ProjForm::form).collect();
    let (a, b, c) = (l1.form(), others[0], others[1]);
    let q = irreducible_forms(spec, 2).remove(0).into_form();
    let bc = b.mul(c);
    [
        a.pow(2).mul(&bc).add(&q.pow(2)),
        a.pow(4).add(&bc.mul(&q)),
        a.pow(2).mul(&q).add(&bc.pow(2)),
    ]
    .map(|f| f.expect("degree 4"))
}

/// The three expressions agree and are irreducible for every linear form,
/// the map `L1 -> D1` hits all three irreducible quartics and commutes with
/// every element of `Γ`.
pub fn quartic_bijection_f2() -> Result<TheoremReport> {
    let spec = make_field(2)?;
    let mut r = TheoremReport::new(
        "quartic-bijection",
        "the three linear forms and the three irreducible quartics over F_2 correspond by \
         L1 -> L1^2 L2 L3 + Q^2 = L1^4 + L2 L3 Q = L1^2 Q + L2^2 L3^2, compatibly with the group action",
    );
    let lin = irreducible_forms(&spec, 1);
    let mut images = Vec::new();
    let (mut equal, mut irreducible) = (0, 0);
    for l in &lin {
        let [e1, e2, e3] = quartic_expressions(&spec, l);
        if e1 == e2 && e2 == e3 {
            equal += 1;
        }
        if is_irreducible_form(&e1) {
            irreducible += 1;
        }
        images.push(proj(&e1));
    }
    r.check("linear forms with three equal expressions", 3, equal);
    r.check("linear forms whose image is irreducible", 3, irreducible);
    let image_set: BTreeSet<ProjForm> = images.iter().cloned().collect();
    r.check("distinct images", 3, image_set.len());
    let quartics: BTreeSet<ProjForm> = irreducible_forms(&spec, 4).into_iter().collect();
    r.check("images are the irreducible quartics", true, image_set == quartics);

    let group = enumerate_pgl(&spec);
    let mut commuting = 0;
    for g in &group {
        for (l, d) in lin.iter().zip(&images) {
            let gl = proj(&act(g, l.form()));
            let i = lin.iter().position(|m| *m == gl).expect("linear forms are permuted");
            if images[i] == proj(&act(g, d.form())) {
                commuting += 1;
            }
        }
    }
    r.check("group elements", 6, group.len());
    r.check("pairs (g, L) with image(g L) = g image(L)", 18, commuting);
    r.witness(
        "images",
        Value::List(images.iter().map(|d| Value::from(d.form().to_string())).collect()),
    );
    Ok(r)
}

const CUBIC_VIS: &str = "L1^3 + a*L2.L3.L4";

fn cube_form(f: &Form) -> bool {
    let Ok((p, e)) = f.dehomogenize() else { return false };
    let fact = factorize(&p).expect("nonzero");
    match (fact.factors.as_slice(), e) {
        ([], 3) => true,
        ([(l, 3)], 0) => l.degree() == Some(1),
        _ => false,
    }
}

fn three_distinct_linears(f: &Form) -> bool {
    let Ok((p, e)) = f.dehomogenize() else { return false };
    let fact = factorize(&p).expect("nonzero");
    e <= 1 && fact.factors.iter().all(|(l, m)| l.degree() == Some(1) && *m == 1) && fact.factors.len() + e == 3
}

fn cubic_form(c: &Poly) -> Form {
    homogenize(c, 3).expect("cubic")
}

/// The unique irreducible cubic `C'` over F_3 with `C + C'` a cube and
/// `C - C'` a product of three distinct linear forms, read off the unique
/// decomposition `C = L1^3 + L2 L3 L4` as `L1^3 - L2 L3 L4`. Non-monic input
/// is handled by scaling, since both conditions are homogeneous in the pair.
pub fn cubic_partner_f3(c: &Poly) -> Result<Poly> {
    if c.spec().order() != 3 || c.degree() != Some(3) || !is_irreducible(c) {
        return Err(Error::NotIrreducibleCubic);
    }
    let lead = c.lead().expect("nonzero");
    let monic = c.make_monic()?;
    let shape: Shape = CUBIC_VIS.parse()?;
    let mut partners = Vec::new();
    for dec in search_vids(&monic, 2, Mode::Full)? {
        let (found, _) = infer_shape(&dec)?;
        if found != shape {
            continue;
        }
        let forms = dec.forms();
        let (cube, product) = if cube_form(&forms[0]) {
            (&forms[0], &forms[1])
        } else {
            (&forms[1], &forms[0])
        };
        partners.push(cube.sub(product)?.to_poly());
    }
    match partners.as_slice() {
        [p] => Ok(p.scale(lead)),
        _ => Err(Error::OutOfRange(format!(
            "expected one decomposition of shape {CUBIC_VIS} for {c}, found {}",
            partners.len()
        ))),
    }
}

fn partner_conditions(c: &Form, d: &Form) -> bool {
    let plus = c.add(d).expect("degree 3");
    let minus = c.sub(d).expect("degree 3");
    cube_form(&plus) && three_distinct_linears(&minus)
}

/// Exhaustive scan of all 16 irreducible cubics (with either leading
/// coefficient) for partners of each monic irreducible cubic.
pub fn verify_cubic_partner() -> Result<TheoremReport> {
    let spec = make_field(3)?;
    let mut r = TheoremReport::new(
        "cubic-partner",
        "for each irreducible cubic C over F_3 there is a unique irreducible cubic C' with \
         C + C' a cube and C - C' a product of three distinct linear forms",
    );
    let monic = enumerate_monic_irreducibles(&spec, 3);
    let minus_one = spec.neg(Elem::ONE);
    let candidates: Vec<Poly> = monic.iter().flat_map(|c| [c.clone(), c.scale(minus_one)]).collect();
    r.check("irreducible cubics", 8, monic.len());
    r.check("candidates", 16, candidates.len());
    let mut counts = Vec::new();
    let (mut matches, mut involutive, mut cubes, mut scaled) = (0, 0, 0, 0);
    for c in &monic {
        let cf = cubic_form(c);
        let found: Vec<&Poly> = candidates
            .iter()
            .filter(|d| partner_conditions(&cf, &cubic_form(d)))
            .collect();
        counts.push(found.len());
        let partner = cubic_partner_f3(c)?;
        if found.len() == 1 && *found[0] == partner {
            matches += 1;
        }
        if cubic_partner_f3(&partner)? == *c {
            involutive += 1;
        }
        if cube_form(&cf.add(&cubic_form(&partner))?) {
            cubes += 1;
        }
        if cubic_partner_f3(&c.scale(minus_one))? == partner.scale(minus_one) {
            scaled += 1;
        }
    }
    r.check("partners per cubic", vec![1], distinct(counts));
    r.check("cubics whose scanned partner is the computed one", 8, matches);
    r.check("cubics with partner(partner(C)) = C", 8, involutive);
    r.check("cubics with C + C' a cube by factorization", 8, cubes);
    r.check("cubics with partner(-C) = -partner(C)", 8, scaled);
    r.check(
        "non-cubic input rejected",
        true,
        cubic_partner_f3(&Poly::from_codes(&spec, &[1, 0, 1])?) == Err(Error::NotIrreducibleCubic),
    );
    r.witness(
        "pairs",
        Value::List(
            monic
                .iter()
                .map(|c| Value::from(format!("{c} <-> {}", cubic_partner_f3(c).expect("irreducible cubic"))))
                .collect(),
        ),
    );
    Ok(r)
}

/// Rank over the field of the coefficient vectors of `forms`.
fn rank(spec: &FieldSpec, forms: &[Form]) -> usize {
    let mut rows: Vec<Vec<Elem>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = spec.inv(rows[rank][col]).expect("nonzero pivot");
        for i in 0..rows.len() {
            if i == rank || rows[i][col].is_zero() {
                continue;
            }
            let factor = spec.mul(rows[i][col], inv);
            let pivot_row = rows[rank].clone();
            for (x, &p) in rows[i].iter_mut().zip(&pivot_row) {
                *x = spec.sub(*x, spec.mul(factor, p));
            }
        }
        rank += 1;
    }
    rank
}

/// Root of a linear form as a projective point, `None` being `(1 : 0)`.
fn root(l: &Form) -> Option<Elem> {
    let c = l.coeffs();
    // c[0] Y + c[1] X vanishes at (x : 1) with x = -c[0] / c[1]
    if c[1].is_zero() {
        None
    } else {
        let spec = l.spec();
        Some(spec.neg(spec.div(c[0], c[1]).expect("nonzero")))
    }
}

/// All nonzero forms of degree `d`.
fn all_forms(spec: &FieldSpec, d: usize) -> Vec<Form> {
    let q = spec.order() as u64;
    (1..q.pow(d as u32 + 1))
        .map(|mut code| {
            let codes: Vec<u32> = (0..=d)
                .map(|_| {
                    let c = (code % q) as u32;
                    code /= q;
                    c
                })
                .collect();
            Form::from_codes(spec, &codes).expect("valid codes")
        })
        .collect()
}

const RDL_Q3: &str = "L1.L2.L3 + a*L1.L2.L4 + b*L1.L3.L4 + c*L2.L3.L4";

/// The omit-one products of the `q + 1` linear forms are a basis of the
/// forms of degree `q`, and a form is rootless exactly when all its
/// coordinates in this basis are nonzero; for `q = 3` the sign choices give
/// the eight irreducible cubics.
pub fn verify_rootless_lagrange() -> Result<TheoremReport> {
    let mut r = TheoremReport::new(
        "rootless-lagrange",
        "the products of all but one linear form are a basis of the forms of degree q; a rootless \
         form has all coordinates nonzero, and for q = 3 the sign choices give the 8 irreducible cubics",
    );
    for q in [2u32, 3] {
        let spec = make_field(q)?;
        let lin: Vec<Form> = irreducible_forms(&spec, 1)
            .into_iter()
            .map(ProjForm::into_form)
            .collect();
        let products: Vec<Form> = (0..lin.len())
            .map(|i| {
                lin.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(Form::y_power(&spec, 0), |acc, (_, l)| acc.mul(l))
            })
            .collect();
        r.check(format!("q={q} omit-one products"), q as usize + 1, products.len());
        r.check(
            format!("q={q} rank of the omit-one products"),
            q as usize + 1,
            rank(&spec, &products),
        );

        let points: Vec<Option<Elem>> = lin.iter().map(root).collect();
        let (mut reconstructed, mut agree, mut rootless) = (0, 0, 0);
        let forms = all_forms(&spec, q as usize);
        for f in &forms {
            let coords: Vec<Elem> = (0..lin.len())
                .map(|i| {
                    let p = products[i].eval_point(points[i]);
                    spec.div(f.eval_point(points[i]), p)
                        .expect("product is nonzero at the omitted root")
                })
                .collect();
            let sum = products
                .iter()
                .zip(&coords)
                .fold(Form::zero(&spec, q as usize), |acc, (p, &c)| {
                    acc.add(&p.scale(c)).expect("degree q")
                });
            if sum == *f {
                reconstructed += 1;
            }
            let has_root = spec
                .elements()
                .map(Some)
                .chain([None])
                .any(|x| f.eval_point(x).is_zero());
            let all_nonzero = coords.iter().all(|c| !c.is_zero());
            if has_root != all_nonzero {
                agree += 1;
            }
            if !has_root {
                rootless += 1;
            }
        }
        r.check(
            format!("q={q} forms rebuilt from their coordinates"),
            forms.len(),
            reconstructed,
        );
        r.check(
            format!("q={q} forms where rootless iff all coordinates nonzero"),
            forms.len(),
            agree,
        );
        r.witness(format!("q={q} rootless forms"), rootless);

        if q == 2 {
            let sum = sum_forms(&products);
            let quad = irreducible_forms(&spec, 2).remove(0);
            r.check(
                "q=2 L1 L2 + L2 L3 + L3 L1 is the irreducible quadratic",
                true,
                proj(&sum) == quad,
            );
            let shape: Shape = "L1.L2 + L2.L3 + L3.L1".parse()?;
            r.check("q=2 shape is visibly irreducible", true, is_vis(&shape, 2, Mode::Full));
        } else {
            let signs = [Elem::ONE, spec.neg(Elem::ONE)];
            let mut sums = Vec::new();
            let mut accepted = 0;
            for a in signs {
                for b in signs {
                    for c in signs {
                        // products[i] omits lin[i]; the shape's terms omit L4, L3, L2, L1 in turn
                        let terms = [
                            products[3].clone(),
                            products[2].scale(a),
                            products[1].scale(b),
                            products[0].scale(c),
                        ];
                        let sum = sum_forms(&terms);
                        if !sum.is_zero() && verify_hvid(&sum, &terms)?.accepted {
                            accepted += 1;
                        }
                        sums.push(sum);
                    }
                }
            }
            r.check("q=3 sign choices", 8, sums.len());
            r.check("q=3 sign choices accepted as decompositions", 8, accepted);
            let distinct_sums: BTreeSet<ProjForm> = sums.iter().filter(|s| !s.is_zero()).map(proj).collect();
            r.check("q=3 distinct sums", 8, distinct_sums.len());
            r.check(
                "q=3 sums that are irreducible",
                8,
                sums.iter().filter(|s| is_irreducible_form(s)).count(),
            );
            let cubics: BTreeSet<ProjForm> = irreducible_forms(&spec, 3).into_iter().collect();
            r.check("q=3 sums are the irreducible cubics", true, distinct_sums == cubics);
            let shape: Shape = RDL_Q3.parse()?;
            r.check("q=3 shape is visibly irreducible", true, is_vis(&shape, 3, Mode::Full));
            r.witness(
                "q=3 monic irreducible cubics",
                Value::List(
                    enumerate_monic_irreducibles(&spec, 3)
                        .iter()
                        .map(|c| Value::from(c.to_string()))
                        .collect(),
                ),
            );
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: &TheoremReport) {
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{}: {bad:#?}", r.claim);
    }

    #[test]
    fn quartic_bijection_passes() {
        assert_pass(&quartic_bijection_f2().unwrap());
    }

    #[test]
    fn cubic_partner_passes() {
        assert_pass(&verify_cubic_partner().unwrap());
    }

    #[test]
    fn rootless_passes() {
        assert_pass(&verify_rootless_lagrange().unwrap());
    }

    #[test]
    fn partner_example() {
        let f3 = make_field(3).unwrap();
        let c = Poly::from_codes(&f3, &[1, 2, 0, 1]).unwrap();
        let p = cubic_partner_f3(&c).unwrap();
        assert!(is_irreducible(&p));
        assert!(partner_conditions(&cubic_form(&c), &cubic_form(&p)));
        assert_eq!(
            cubic_partner_f3(&Poly::from_codes(&f3, &[0, 0, 0, 1]).unwrap()),
            Err(Error::NotIrreducibleCubic)
        );
    }

    #[test]
    fn rank_examples() {
        let f3 = make_field(3).unwrap();
        let f = |c: &[u32]| Form::from_codes(&f3, c).unwrap();
        assert_eq!(rank(&f3, &[f(&[1, 0]), f(&[0, 1]), f(&[1, 1])]), 2);
        assert_eq!(rank(&f3, &[f(&[1, 2, 0]), f(&[2, 1, 0])]), 1);
    }
}
