//! Shape-level claims: the one-orbit table, sextics and septimics over F_2,
//! quintics over F_3 and quadratics over F_4 without the degree condition.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::counting::admissible_pairs_mode;
use super::{distinct, proj, proj_poly, TheoremReport, Value};
use crate::error::Result;
use crate::ffield::{make_field, Elem, FieldSpec};
use crate::forms::{irreducible_forms, is_irreducible_form, orbits_on_irreducibles, union_field_size, Form, ProjForm};
use crate::poly::{count_irreducibles, enumerate_monic_irreducibles, Poly};
use crate::vid::{
    classify_vids_by_shape, crank_term, enumerate_instances, is_vis, max_r_bound, max_r_bound_mode, verify_vid,
    Decomposition, Mode, RBound, Shape, ShapeRow,
};

/// A row of the one-orbit table: field, degree, the term counts that occur
/// (`None` for any), an example shape, `|I(q,d)|` and the number of
/// decompositions of that shape per irreducible.
pub struct TableRow {
    pub q: u32,
    pub d: usize,
    pub r: Option<&'static [usize]>,
    pub shape: &'static str,
    pub irreducibles: usize,
    pub per_irreducible: usize,
}

pub const TABLE1: [TableRow; 8] = [
    TableRow {
        q: 2,
        d: 2,
        r: Some(&[2, 3]),
        shape: "L1.L2 + L2.L3 + L3.L1",
        irreducibles: 1,
        per_irreducible: 1,
    },
    TableRow {
        q: 2,
        d: 3,
        r: None,
        shape: "L1^2.L2 + L2^2.L3 + L3^2.L1",
        irreducibles: 2,
        per_irreducible: 1,
    },
    TableRow {
        q: 2,
        d: 4,
        r: Some(&[2, 3, 4]),
        shape: "L1^2.L2.L3 + Q1^2",
        irreducibles: 3,
        per_irreducible: 1,
    },
    TableRow {
        q: 2,
        d: 5,
        r: None,
        shape: "L1^4.L2 + L3.Q1^2",
        irreducibles: 6,
        per_irreducible: 1,
    },
    TableRow {
        q: 3,
        d: 2,
        r: Some(&[2]),
        shape: "L1.L2 + a*L3.L4",
        irreducibles: 3,
        per_irreducible: 2,
    },
    TableRow {
        q: 3,
        d: 3,
        r: Some(&[2, 3, 4]),
        shape: "L1^3 + a*L2.L3.L4",
        irreducibles: 8,
        per_irreducible: 1,
    },
    TableRow {
        q: 4,
        d: 3,
        r: Some(&[2]),
        shape: "L1^2.L2 + a*L3.L4.L5",
        irreducibles: 20,
        per_irreducible: 3,
    },
    TableRow {
        q: 5,
        d: 3,
        r: Some(&[2]),
        shape: "L1.L2.L3 + a*L4.L5.L6",
        irreducibles: 40,
        per_irreducible: 1,
    },
];

/// Term cap used when the bound is unbounded.
const UNBOUNDED_CAP: usize = 4;

fn instance_sums(shape: &Shape, spec: &FieldSpec, mode: Mode) -> Result<Vec<Form>> {
    Ok(enumerate_instances(shape, spec, mode)?
        .iter()
        .map(|i| i.sum())
        .collect())
}

fn multiplicities(sums: &[Form]) -> BTreeMap<ProjForm, usize> {
    let mut m = BTreeMap::new();
    for s in sums.iter().filter(|s| !s.is_zero()) {
        *m.entry(proj(s)).or_default() += 1;
    }
    m
}

/// Every row of the one-orbit table: the example shape is visibly
/// irreducible, its instances number `|I(q,d)|` times the per-irreducible
/// count and sum to irreducibles, each irreducible gets exactly that many
/// decompositions of the shape, and the term counts found are the tabulated
/// ones.
pub fn verify_table1() -> Result<TheoremReport> {
    let mut r = TheoremReport::new(
        "table1",
        "for each single-orbit pair the example shape is visibly irreducible and every irreducible \
         has the tabulated number of decompositions of that shape",
    );
    for row in &TABLE1 {
        let (q, d) = (row.q, row.d);
        let tag = format!("({q},{d})");
        let spec = make_field(q)?;
        let shape: Shape = row.shape.parse()?;
        let bound = max_r_bound(q as u64, d);
        let r_max = match bound {
            RBound::Max(m) => m,
            _ => UNBOUNDED_CAP,
        };
        r.check(
            format!("{tag} shape is visibly irreducible"),
            true,
            is_vis(&shape, q as u64, Mode::Full),
        );
        r.check(
            format!("{tag} |I(q,d)|"),
            row.irreducibles,
            enumerate_monic_irreducibles(&spec, d).len(),
        );
        let sums = instance_sums(&shape, &spec, Mode::Full)?;
        r.check(
            format!("{tag} instances"),
            row.irreducibles * row.per_irreducible,
            sums.len(),
        );
        r.check(
            format!("{tag} instances summing to an irreducible"),
            row.irreducibles * row.per_irreducible,
            sums.iter().filter(|s| is_irreducible_form(s)).count(),
        );

        let table = classify_vids_by_shape(&spec, d, r_max, Mode::Full)?;
        r.check(
            format!("{tag} decompositions of this shape per irreducible"),
            vec![row.per_irreducible],
            distinct(table.counts_of(&shape)),
        );
        let found_r: BTreeSet<usize> = table
            .rows
            .iter()
            .flat_map(|row| row.counts.keys().map(Shape::len))
            .collect();
        let found_r: Vec<usize> = found_r.into_iter().collect();
        match row.r {
            Some(expected) => {
                r.check(format!("{tag} term counts that occur"), expected.to_vec(), found_r);
                let covers = matches!(bound, RBound::Max(m) if m >= *expected.last().unwrap());
                r.check(format!("{tag} bound admits every tabulated term count"), true, covers);
            }
            None => {
                r.check(
                    format!("{tag} bound"),
                    "unbounded",
                    if bound == RBound::Unbounded {
                        "unbounded"
                    } else {
                        "finite"
                    },
                );
                r.check(
                    format!("{tag} term counts that occur up to {UNBOUNDED_CAP}"),
                    vec![2, 3, 4],
                    found_r,
                );
                let (extended, total) = crank_extensions(&spec, d, &table.rows)?;
                r.check(
                    format!("{tag} decompositions still accepted after adding the crank term"),
                    total,
                    extended,
                );
            }
        }
        r.witness(format!("{tag} bound"), format!("{bound:?}"));
        r.witness(format!("{tag} r searched up to"), r_max);
        r.witness(
            format!("{tag} shapes found"),
            table
                .rows
                .iter()
                .flat_map(|row| row.counts.keys())
                .collect::<BTreeSet<_>>()
                .len(),
        );
    }
    Ok(r)
}

/// Adds the crank term to every decomposition of every row and re-verifies
/// against the shifted polynomial. Returns (accepted, total).
fn crank_extensions(spec: &FieldSpec, d: usize, rows: &[ShapeRow]) -> Result<(usize, usize)> {
    let crank = crank_term(spec, d)
        .expect("unbounded pairs have a crank term")
        .to_poly();
    let mut accepted = 0;
    let mut total = 0;
    for row in rows {
        let r_max = 4;
        for dec in crate::vid::search_vids(&row.poly, r_max, Mode::Full)? {
            let mut summands = dec.summands().to_vec();
            summands.push(crank.clone());
            let extended = Decomposition::new(d, Mode::Full, summands)?;
            let target = &row.poly + &crank;
            total += 1;
            if verify_vid(&target, &extended)?.accepted {
                accepted += 1;
            }
        }
    }
    Ok((accepted, total))
}

const SEXTIC_SYMMETRIC: &str = "L1^2.L2.L3.Q1 + C1.C2";
const SEXTIC_ASYMMETRIC: &str = "L1^2.L2.C1 + L3.Q1.C2";

/// Sextics over F_2: two orbits of sizes 3 and 6; the symmetric shape covers
/// the special orbit, the asymmetric one covers everything, twice on the
/// special orbit, and generic sextics have a unique decomposition.
pub fn verify_sextic_theorem() -> Result<TheoremReport> {
    let spec = make_field(2)?;
    let mut r = TheoremReport::new(
        "sextic",
        "every irreducible sextic over F_2 has a decomposition: the symmetric shape covers the \
         size-3 orbit of x^6 + x^3 + 1 and the asymmetric shape covers all nine",
    );
    r.check("|I(2,6)|", 9, enumerate_monic_irreducibles(&spec, 6).len());
    let orbits = orbits_on_irreducibles(&spec, 6)?;
    let mut sizes = orbits.sizes();
    sizes.sort_unstable();
    r.check("orbit sizes", vec![3, 6], sizes);
    let special_poly = Poly::from_codes(&spec, &[1, 0, 0, 1, 0, 0, 1])?;
    let special = orbits.orbit_of(&proj_poly(&special_poly)).expect("irreducible");
    r.check("orbit size of x^6 + x^3 + 1", 3, special.size());
    r.check("stabilizer order of x^6 + x^3 + 1", 2, special.stabilizer_order());
    let special_set: BTreeSet<ProjForm> = special.members.iter().cloned().collect();

    let symmetric: Shape = SEXTIC_SYMMETRIC.parse()?;
    let sums = instance_sums(&symmetric, &spec, Mode::Full)?;
    r.check(
        "symmetric shape is visibly irreducible",
        true,
        is_vis(&symmetric, 2, Mode::Full),
    );
    r.check("symmetric shape instances", 3, sums.len());
    let covered: BTreeSet<ProjForm> = sums.iter().map(proj).collect();
    r.check(
        "symmetric shape sums are the special orbit",
        true,
        covered == special_set,
    );

    let asymmetric: Shape = SEXTIC_ASYMMETRIC.parse()?;
    let sums = instance_sums(&asymmetric, &spec, Mode::Full)?;
    r.check(
        "asymmetric shape is visibly irreducible",
        true,
        is_vis(&asymmetric, 2, Mode::Full),
    );
    r.check("asymmetric shape instances", 12, sums.len());
    let mult = multiplicities(&sums);
    r.check("sextics covered by the asymmetric shape", 9, mult.len());
    let special_mult = distinct(special_set.iter().map(|f| mult.get(f).copied().unwrap_or(0)));
    let generic_mult = distinct(mult.iter().filter(|(f, _)| !special_set.contains(f)).map(|(_, &m)| m));
    r.check("asymmetric instances per special sextic", vec![2], special_mult);
    r.check("asymmetric instances per generic sextic", vec![1], generic_mult);

    let table = classify_vids_by_shape(&spec, 6, 2, Mode::Full)?;
    let (special_rows, generic_rows): (Vec<_>, Vec<_>) = table
        .rows
        .iter()
        .partition(|row| special_set.contains(&proj_poly(&row.poly)));
    r.check(
        "decompositions per generic sextic",
        vec![1],
        distinct(generic_rows.iter().map(|row| row.total)),
    );
    r.check(
        "asymmetric-shape decompositions per special sextic",
        vec![2],
        distinct(
            special_rows
                .iter()
                .map(|row| row.counts.get(&asymmetric).copied().unwrap_or(0)),
        ),
    );
    r.witness(
        "decompositions per special sextic",
        distinct(special_rows.iter().map(|row| row.total)),
    );
    r.witness(
        "special orbit",
        Value::List(
            special
                .members
                .iter()
                .map(|f| Value::from(f.form().to_poly().to_string()))
                .collect(),
        ),
    );
    Ok(r)
}

/// One configuration of the septimic schema `L1^i L2^(4-i) C1 + L3^2 Q C2`:
/// exponent `i`, an ordering of the three linears and of the two cubics.
type SchemaConfig = (u32, [usize; 3], [usize; 2]);

fn schema_configs() -> Vec<SchemaConfig> {
    let lin_orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for i in 1..=3 {
        for l in lin_orders {
            for c in [[0, 1], [1, 0]] {
                out.push((i, l, c));
            }
        }
    }
    out
}

fn schema_sum(c: &SchemaConfig, lin: &[ProjForm], quad: &ProjForm, cub: &[ProjForm]) -> Form {
    let (i, l, k) = *c;
    let a = lin[l[0]]
        .form()
        .pow(i)
        .mul(&lin[l[1]].form().pow(4 - i))
        .mul(cub[k[0]].form());
    let b = lin[l[2]].form().pow(2).mul(quad.form()).mul(cub[k[1]].form());
    a.add(&b).expect("degree 7")
}

/// Classes of the 36 configurations when each is identified with its image
/// under `f`, if that image is in the schema.
fn class_count(configs: &[SchemaConfig], f: impl Fn(&SchemaConfig) -> Option<SchemaConfig>) -> usize {
    configs
        .iter()
        .map(|c| match f(c) {
            Some(img) if configs.contains(&img) => core::cmp::min(*c, img),
            _ => *c,
        })
        .collect::<BTreeSet<_>>()
        .len()
}

fn swap_first_two(l: [usize; 3]) -> [usize; 3] {
    [l[1], l[0], l[2]]
}

/// Septimics over F_2: the schema has 18 classes under the exponent swap and
/// their sums are the 18 irreducible septimics, each once.
pub fn verify_septimic_theorem() -> Result<TheoremReport> {
    let spec = make_field(2)?;
    let mut r = TheoremReport::new(
        "septimic",
        "every irreducible septimic over F_2 is uniquely of the form L1^i L2^(4-i) C1 + L3^2 Q C2, \
         0 < i < 4, up to the symmetry swapping L1 with L2",
    );
    r.check("|I(2,7)|", 18, enumerate_monic_irreducibles(&spec, 7).len());
    let orbits = orbits_on_irreducibles(&spec, 7)?;
    r.check("orbit sizes", vec![6, 6, 6], orbits.sizes());
    r.check(
        "stabilizer orders",
        vec![1],
        distinct(orbits.orbits.iter().map(|o| o.stabilizer_order())),
    );

    let lin = irreducible_forms(&spec, 1);
    let quad = irreducible_forms(&spec, 2).remove(0);
    let cub = irreducible_forms(&spec, 3);
    let configs = schema_configs();
    r.check("schema configurations", 36, configs.len());
    let swap4 = |c: &SchemaConfig| Some((4 - c.0, swap_first_two(c.1), c.2));
    let swap2 = |c: &SchemaConfig| (c.0 < 2).then(|| (2 - c.0, swap_first_two(c.1), c.2));
    let invariant = configs
        .iter()
        .all(|c| schema_sum(c, &lin, &quad, &cub) == schema_sum(&swap4(c).unwrap(), &lin, &quad, &cub));
    r.check("sum is invariant under i -> 4-i with L1, L2 swapped", true, invariant);
    let classes4 = class_count(&configs, swap4);
    let classes2 = class_count(&configs, swap2);
    r.check("classes under i -> 4-i", 18, classes4);
    let which = [("i -> 4-i", classes4), ("i -> 2-i", classes2)]
        .iter()
        .filter(|(_, n)| *n == 18)
        .map(|(s, _)| Value::from(*s))
        .collect::<Vec<_>>();
    r.check("symmetries giving 18 classes", vec!["i -> 4-i"], Value::List(which));
    r.witness("classes under i -> 2-i (images outside 0 < i < 4 left alone)", classes2);

    let reps: BTreeSet<SchemaConfig> = configs.iter().map(|c| core::cmp::min(*c, swap4(c).unwrap())).collect();
    let sums: Vec<Form> = reps.iter().map(|c| schema_sum(c, &lin, &quad, &cub)).collect();
    let distinct_sums: BTreeSet<ProjForm> = sums.iter().map(proj).collect();
    r.check("distinct class sums", 18, distinct_sums.len());
    r.check(
        "class sums that are irreducible",
        18,
        sums.iter().filter(|s| is_irreducible_form(s)).count(),
    );
    let all: BTreeSet<ProjForm> = irreducible_forms(&spec, 7).into_iter().collect();
    r.check("class sums cover I(2,7)", true, distinct_sums == all);

    let schema_shapes: [Shape; 2] = ["L1^2.L2^2.C1 + L3^2.Q1.C2".parse()?, "L1^3.L2.C1 + L3^2.Q1.C2".parse()?];
    let table = classify_vids_by_shape(&spec, 7, 2, Mode::Full)?;
    let per: Vec<usize> = table
        .rows
        .iter()
        .map(|row| {
            schema_shapes
                .iter()
                .map(|s| row.counts.get(s).copied().unwrap_or(0))
                .sum()
        })
        .collect();
    r.check(
        "schema decompositions per septimic found by search",
        vec![1],
        distinct(per),
    );
    r.witness(
        "decompositions per septimic, any shape",
        distinct(table.rows.iter().map(|row| row.total)),
    );
    r.witness(
        "shapes found",
        Value::List(
            table
                .rows
                .iter()
                .flat_map(|row| row.counts.keys())
                .collect::<BTreeSet<_>>()
                .iter()
                .map(|s| Value::from(s.to_string()))
                .collect(),
        ),
    );
    Ok(r)
}

const QUINTIC_VIS: &str = "L1.Q2.Q3 + a*L2.L3.L4.Q1";

/// Quintics over F_3: equality in the bound at two terms, a single shape with
/// 24 instances whose sums form one orbit, and no decomposition for the
/// other orbit.
pub fn verify_quintic_f3() -> Result<TheoremReport> {
    let spec = make_field(3)?;
    let mut r = TheoremReport::new(
        "quintic",
        "exactly half of the irreducible quintics over F_3 have a decomposition: one orbit of 24, \
         all of the single shape L1 Q2 Q3 + a L2 L3 L4 Q1",
    );
    r.check("|I(3,5)|", 48, enumerate_monic_irreducibles(&spec, 5).len());
    let orbits = orbits_on_irreducibles(&spec, 5)?;
    r.check("orbit sizes", vec![24, 24], orbits.sizes());
    r.check(
        "stabilizer orders",
        vec![1],
        distinct(orbits.orbits.iter().map(|o| o.stabilizer_order())),
    );
    r.check("d r at r = 2", 10, 5 * 2);
    r.check("(r - 1)(1 + |F_3 ∪ F_9|) at r = 2", 10, 1 + union_field_size(3, 2));
    r.check("bound on r", "Max(2)", format!("{:?}", max_r_bound(3, 5)));

    let shape: Shape = QUINTIC_VIS.parse()?;
    r.check("shape is visibly irreducible", true, is_vis(&shape, 3, Mode::Full));
    let sums = instance_sums(&shape, &spec, Mode::Full)?;
    r.check("instances", 24, sums.len());
    let sum_set: BTreeSet<ProjForm> = sums.iter().map(proj).collect();
    r.check("distinct instance sums", 24, sum_set.len());
    r.check(
        "instance sums that are irreducible",
        24,
        sums.iter().filter(|s| is_irreducible_form(s)).count(),
    );
    let one_orbit = orbits
        .orbits
        .iter()
        .any(|o| o.members.iter().cloned().collect::<BTreeSet<_>>() == sum_set);
    r.check("instance sums form one orbit", true, one_orbit);

    let table = classify_vids_by_shape(&spec, 5, 2, Mode::Full)?;
    let admitting: BTreeSet<ProjForm> = table
        .rows
        .iter()
        .filter(|row| row.total > 0)
        .map(|row| proj_poly(&row.poly))
        .collect();
    r.check("quintics with a decomposition", 24, admitting.len());
    r.check(
        "quintics without a decomposition",
        24,
        table.rows.iter().filter(|row| row.total == 0).count(),
    );
    r.check(
        "quintics with a decomposition are the instance sums",
        true,
        admitting == sum_set,
    );
    let shapes: BTreeSet<&Shape> = table.rows.iter().flat_map(|row| row.counts.keys()).collect();
    r.check(
        "shapes found",
        vec![shape.to_string()],
        shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    );
    Ok(r)
}

const F4_SHAPE: &str = "L1.L2 + a*L3.L4";

/// Quadratics over F_4 without the degree condition: 9 instances of
/// `L1 L2 + a L3 L4` (no `Y`), 3 degenerate and 6 covering each irreducible
/// once; each irreducible has exactly one such decomposition, with distinct
/// leading coefficients.
pub fn verify_f4_quadratic() -> Result<TheoremReport> {
    let spec = make_field(4)?;
    let mut r = TheoremReport::new(
        "f4-quadratic",
        "without the degree condition every irreducible quadratic over F_4 is uniquely \
         a (x - a)(x - b) + b' (x - c)(x - d) with {a, b, c, d} = F_4 and distinct scalars",
    );
    r.check("|I(4,2)|", 6, count_irreducibles(4, 2));
    r.check(
        "|I(4,2)| by enumeration",
        6,
        enumerate_monic_irreducibles(&spec, 2).len(),
    );
    let full = admissible_pairs_mode(Mode::Full);
    let free = admissible_pairs_mode(Mode::DegreeFree);
    r.check(
        "(4,2) admissible only without the degree condition",
        true,
        !full.contains(&(4, 2)) && free.contains(&(4, 2)),
    );
    r.check(
        "bound on r without the degree condition",
        "Max(2)",
        format!("{:?}", max_r_bound_mode(4, 2, Mode::DegreeFree)),
    );

    let shape: Shape = F4_SHAPE.parse()?;
    r.check(
        "shape is visibly irreducible without Y",
        true,
        is_vis(&shape, 4, Mode::DegreeFree),
    );
    let sums = instance_sums(&shape, &spec, Mode::DegreeFree)?;
    r.check("instances", 9, sums.len());
    let y2 = proj(&Form::y_power(&spec, 2));
    let degenerate = sums.iter().filter(|s| !s.is_zero() && proj(s) == y2).count();
    r.check("instances summing to a multiple of Y^2", 3, degenerate);
    let rest: Vec<Form> = sums.into_iter().filter(|s| s.is_zero() || proj(s) != y2).collect();
    r.check(
        "other instances summing to an irreducible",
        6,
        rest.iter().filter(|s| is_irreducible_form(s)).count(),
    );
    let mult = multiplicities(&rest);
    r.check("irreducibles covered", 6, mult.len());
    r.check("instances per irreducible", vec![1], distinct(mult.values().copied()));

    let table = classify_vids_by_shape(&spec, 2, 2, Mode::DegreeFree)?;
    r.check(
        "decompositions per irreducible",
        vec![1],
        distinct(table.rows.iter().map(|row| row.total)),
    );
    let mut scalars_distinct = true;
    let mut roots_cover = true;
    for row in &table.rows {
        for dec in crate::vid::search_vids(&row.poly, 2, Mode::DegreeFree)? {
            let leads: Vec<Elem> = dec.summands().iter().filter_map(Poly::lead).collect();
            scalars_distinct &= leads.len() == 2 && leads[0] != leads[1];
            let roots: BTreeSet<Elem> = dec
                .summands()
                .iter()
                .flat_map(|s| spec.elements().filter(move |&a| s.eval(a).is_zero()))
                .collect();
            roots_cover &= roots.len() == 4;
        }
    }
    r.check("leading scalars distinct", true, scalars_distinct);
    r.check("roots of the summands are all of F_4", true, roots_cover);
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
    fn table1_passes() {
        assert_pass(&verify_table1().unwrap());
    }

    #[test]
    fn sextic_passes() {
        assert_pass(&verify_sextic_theorem().unwrap());
    }

    #[test]
    fn septimic_passes() {
        assert_pass(&verify_septimic_theorem().unwrap());
    }

    #[test]
    fn quintic_passes() {
        assert_pass(&verify_quintic_f3().unwrap());
    }

    #[test]
    fn f4_passes() {
        assert_pass(&verify_f4_quadratic().unwrap());
    }
}
