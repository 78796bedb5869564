//! Counting claims: irreducible counts, the admissible pairs, the
//! all/half/none classification and the orbit lemmas.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{distinct, pair, TheoremReport, Value};
use crate::error::{Error, Result};
use crate::ffield::{make_extension, make_field, prime_power, Elem};
use crate::forms::{
    enumerate_affine, enumerate_pgl, irreducible_forms, orbits, orbits_on_irreducibles, union_field_size,
};
use crate::poly::{count_irreducibles, enumerate_monic_irreducibles};
use crate::vid::{default_r_max, max_r_bound, search_vids, Mode, RBound};

const GAUSS: [(u32, usize, u64); 9] = [
    (2, 7, 18),
    (3, 5, 48),
    (3, 3, 8),
    (4, 3, 20),
    (5, 3, 40),
    (2, 4, 3),
    (2, 5, 6),
    (2, 6, 9),
    (4, 2, 6),
];

pub fn verify_gauss_counts() -> Result<TheoremReport> {
    let mut r = TheoremReport::new(
        "gauss-counts",
        "the number of irreducible forms of degree d over F_q given by the Moebius sum, and q + 1 for d = 1",
    );
    for (q, d, n) in GAUSS {
        let spec = make_field(q)?;
        r.check(
            format!("|I({q},{d})| by formula"),
            n,
            count_irreducibles(q as u64, d as u32),
        );
        r.check(
            format!("|I({q},{d})| by enumeration"),
            n,
            irreducible_forms(&spec, d).len(),
        );
    }
    for q in [2u32, 3, 4, 5] {
        let spec = make_field(q)?;
        r.check(
            format!("|I({q},1)| by enumeration"),
            q + 1,
            irreducible_forms(&spec, 1).len(),
        );
    }
    Ok(r)
}

/// Right-hand side of the `r = 2` bound, `2d >= K`.
fn bound_rhs(q: u64, d: usize, mode: Mode) -> u64 {
    let union = union_field_size(q, (d / 2) as u32);
    match mode {
        Mode::DegreeFree => union,
        Mode::Full | Mode::Homogeneous => union + 1,
    }
}

/// Degrees that survive `2d >= 1 + 2^⌊d/2⌋` (or `2d >= 2^⌊d/2⌋` without
/// the degree condition). Beyond 64 the right side has long outgrown the left.
fn candidate_degrees(mode: Mode) -> Vec<usize> {
    let slack = u64::from(mode != Mode::DegreeFree);
    (2..=64usize)
        .filter(|&d| 2 * d as u64 >= slack + (1u64 << (d / 2)))
        .collect()
}

/// Largest `q` with `q^m <= n`.
fn integer_root(n: u64, m: u32) -> u64 {
    let mut q = 1;
    while (q + 1u64).pow(m) <= n {
        q += 1;
    }
    q
}

/// Pairs `(q, d)` for which the term-count bound allows `r = 2`, ordered by
/// degree then field size.
pub fn admissible_pairs_mode(mode: Mode) -> Vec<(u32, usize)> {
    let slack = u64::from(mode != Mode::DegreeFree);
    let mut out = Vec::new();
    for d in candidate_degrees(mode) {
        let m = (d / 2) as u32;
        for q in 2..=integer_root(2 * d as u64 - slack, m) {
            if prime_power(q).is_some() && 2 * d as u64 >= bound_rhs(q, d, mode) {
                out.push((q as u32, d));
            }
        }
    }
    out
}

pub fn admissible_pairs() -> Vec<(u32, usize)> {
    admissible_pairs_mode(Mode::Full)
}

const EXPECTED_PAIRS: [(u32, usize); 11] = [
    (2, 2),
    (3, 2),
    (2, 3),
    (3, 3),
    (4, 3),
    (5, 3),
    (2, 4),
    (2, 5),
    (3, 5),
    (2, 6),
    (2, 7),
];

fn pairs_value(pairs: &[(u32, usize)]) -> Value {
    Value::List(pairs.iter().map(|&(q, d)| pair(q, d)).collect())
}

pub fn verify_admissible() -> TheoremReport {
    let mut r = TheoremReport::new(
        "admissible",
        "the bound on the number of terms allows a decomposition only for eleven pairs (q, d), \
         and dropping the degree condition adds exactly (4, 2)",
    );
    r.check("pairs", pairs_value(&EXPECTED_PAIRS), pairs_value(&admissible_pairs()));
    r.check(
        "degrees with 2d >= 1 + 2^floor(d/2)",
        vec![2, 3, 4, 5, 6, 7, 9],
        candidate_degrees(Mode::Full),
    );
    let q_bounds: Vec<u64> = (2..=7)
        .map(|d| integer_root(2 * d as u64 - 1, (d / 2) as u32))
        .collect();
    r.check(
        "q bounds floor((2d-1)^(1/floor(d/2))) for d = 2..7",
        vec![3, 5, 2, 3, 2, 2],
        q_bounds,
    );
    r.check("1 + |F_8 ∪ F_16| for d = 9, q = 2", 23, bound_rhs(2, 9, Mode::Full));
    r.check("d = 9 admits q = 2", false, 18 >= bound_rhs(2, 9, Mode::Full));
    let full: BTreeSet<_> = admissible_pairs().into_iter().collect();
    let extra: Vec<(u32, usize)> = admissible_pairs_mode(Mode::DegreeFree)
        .into_iter()
        .filter(|p| !full.contains(p))
        .collect();
    r.check(
        "extra pairs without the degree condition",
        pairs_value(&[(4, 2)]),
        pairs_value(&extra),
    );
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MainClass {
    All,
    Half,
    None,
    /// Some but not half: never expected.
    Partial,
}

impl MainClass {
    pub fn name(self) -> &'static str {
        match self {
            MainClass::All => "all",
            MainClass::Half => "half",
            MainClass::None => "none",
            MainClass::Partial => "partial",
        }
    }
}

/// The classification the main theorem predicts for `(q, d)`.
pub fn classify_main(q: u32, d: usize) -> MainClass {
    if (q, d) == (3, 5) {
        MainClass::Half
    } else if EXPECTED_PAIRS.contains(&(q, d)) {
        MainClass::All
    } else {
        MainClass::None
    }
}

/// Searches every irreducible of degree `d` over `F_q` and classifies how
/// many admit a decomposition.
pub fn verify_theorem_main(q: u32, d: usize) -> Result<TheoremReport> {
    if q > 5 || !(2..=7).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "main theorem check needs q <= 5 and 2 <= d <= 7, got ({q}, {d})"
        )));
    }
    let spec = make_field(q)?;
    let r_max = default_r_max(q as u64, d, Mode::Full);
    let polys = enumerate_monic_irreducibles(&spec, d);
    let mut admitting = 0;
    for f in &polys {
        if !search_vids(f, r_max, Mode::Full)?.is_empty() {
            admitting += 1;
        }
    }
    let total = polys.len();
    let computed = if admitting == total {
        MainClass::All
    } else if admitting == 0 {
        MainClass::None
    } else if 2 * admitting == total {
        MainClass::Half
    } else {
        MainClass::Partial
    };
    let expected = classify_main(q, d);
    let expected_count = match expected {
        MainClass::All => total,
        MainClass::Half => total / 2,
        _ => 0,
    };
    let bound = max_r_bound(q as u64, d);
    let mut r = TheoremReport::new(
        "main",
        "every irreducible admits a decomposition for the eleven listed pairs except (3, 5), \
         exactly half do for (3, 5), and none do otherwise",
    );
    r.param("q", q).param("d", d);
    r.check("classification", expected.name(), computed.name());
    r.check("irreducibles admitting a decomposition", expected_count, admitting);
    r.check(
        "bound allows two terms",
        expected != MainClass::None,
        bound != RBound::NoVid,
    );
    r.witness("irreducibles", total);
    r.witness("r searched up to", r_max);
    r.witness("bound", format!("{bound:?}"));
    Ok(r)
}

/// Pairs just outside the list, where the bound already forbids decompositions.
pub const OUTSIDE_SAMPLES: [(u32, usize); 4] = [(3, 4), (4, 4), (5, 2), (4, 2)];

pub fn verify_main_all() -> Result<Vec<TheoremReport>> {
    admissible_pairs()
        .into_iter()
        .chain(OUTSIDE_SAMPLES)
        .map(|(q, d)| verify_theorem_main(q, d))
        .collect()
}

/// Orbit and stabilizer facts for `Γ = PGL₂(F_q)`: simple transitivity on
/// points of degree 2 and 3, which degrees form one orbit, cyclic stabilizers
/// of order dividing `d`, quartic stabilizers of order at least 2, and
/// `|I(q, d)| > |Γ|` for the remaining degrees from 5 on.
pub fn verify_lemmas(q: u32) -> Result<TheoremReport> {
    if !(2..=5).contains(&q) {
        return Err(Error::OutOfRange(format!("lemma checks need 2 <= q <= 5, got {q}")));
    }
    let spec = make_field(q)?;
    let q64 = q as u64;
    let group = enumerate_pgl(&spec);
    let affine = enumerate_affine(&spec);
    let mut r = TheoremReport::new(
        "lemmas",
        "the affine group acts simply transitively on F_{q^2} minus F_q and PGL_2 on F_{q^3} minus F_q; \
         I(q,d) is one orbit exactly for d <= 3 and (2,4), (2,5); stabilizers for d >= 3 are cyclic of \
         order dividing d; quartic stabilizers have order at least 2 for q >= 3; |I(q,d)| > |PGL_2| for \
         the other degrees from 5 on",
    );
    r.param("q", q);
    r.check("|PGL_2|", q64.pow(3) - q64, group.len());
    r.check("|affine group|", q64 * q64 - q64, affine.len());

    // the point t of F_{q^n}, which is not in F_q
    let xi = Some(Elem(q));
    let ext2 = make_extension(&spec, 2)?;
    let images: BTreeSet<_> = affine.iter().map(|g| g.act_on_point(&ext2, xi)).collect();
    let outside = images.iter().all(|p| p.is_some_and(|e| e.0 >= q));
    r.check(
        "affine images of a point of F_{q^2} \\ F_q",
        q64 * q64 - q64,
        images.len(),
    );
    r.check("affine images avoid F_q", true, outside);
    let ext3 = make_extension(&spec, 3)?;
    let images: BTreeSet<_> = group.iter().map(|g| g.act_on_point(&ext3, xi)).collect();
    let outside = images.iter().all(|p| p.is_some_and(|e| e.0 >= q));
    r.check(
        "PGL_2 images of a point of F_{q^3} \\ F_q",
        q64.pow(3) - q64,
        images.len(),
    );
    r.check("PGL_2 images avoid F_q", true, outside);
    let quadratics = orbits(&spec, &irreducible_forms(&spec, 2), &affine);
    r.check("affine orbits on I(q,2)", 1, quadratics.orbits.len());

    let mut single = Vec::new();
    let mut cyclic_ok = true;
    let mut sizes = Vec::new();
    let mut quartic_min = 0;
    for d in 1..=7 {
        let report = orbits_on_irreducibles(&spec, d)?;
        if report.orbits.len() == 1 {
            single.push(d);
        }
        if d >= 3 {
            cyclic_ok &= report
                .orbits
                .iter()
                .all(|o| o.cyclic && d % o.stabilizer_order() == 0 && o.size() * o.stabilizer_order() == group.len());
        }
        if d == 4 {
            quartic_min = report.orbits.iter().map(|o| o.stabilizer_order()).min().unwrap_or(0);
        }
        sizes.push(Value::from(distinct(report.sizes())));
    }
    let expected_single: Vec<usize> = if q == 2 { vec![1, 2, 3, 4, 5] } else { vec![1, 2, 3] };
    r.check("single-orbit degrees", expected_single, single.clone());
    r.check(
        "stabilizers cyclic of order dividing d for 3 <= d <= 7",
        true,
        cyclic_ok,
    );
    if q >= 3 {
        r.check("least quartic stabilizer order is at least 2", true, quartic_min >= 2);
    }
    let big: Vec<usize> = (5..=7).filter(|d| !single.contains(d)).collect();
    let exceeds = big
        .iter()
        .all(|&d| count_irreducibles(q64, d as u32) > group.len() as u64);
    r.check("|I(q,d)| > |PGL_2| for multi-orbit d >= 5", true, exceeds);
    r.witness("distinct orbit sizes for d = 1..7", Value::List(sizes));
    r.witness("least quartic stabilizer order", quartic_min);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_examples() {
        let pairs = admissible_pairs();
        assert_eq!(pairs, EXPECTED_PAIRS);
        assert!(pairs.contains(&(3, 5)));
        assert!(!pairs.contains(&(4, 2)));
        assert!(!pairs.iter().any(|&(_, d)| d == 9));
        let free = admissible_pairs_mode(Mode::DegreeFree);
        assert!(free.contains(&(4, 2)));
        assert_eq!(free.len(), 12);
    }

    #[test]
    fn roots() {
        assert_eq!(integer_root(3, 1), 3);
        assert_eq!(integer_root(9, 2), 3);
        assert_eq!(integer_root(8, 2), 2);
    }

    #[test]
    fn main_examples() {
        let r = verify_theorem_main(3, 4).unwrap();
        assert!(r.pass(), "{r:?}");
        let r = verify_theorem_main(3, 2).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(verify_theorem_main(7, 2).is_err());
    }

    #[test]
    fn gauss_and_admissible_pass() {
        assert!(verify_gauss_counts().unwrap().pass());
        let r = verify_admissible();
        assert!(r.pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
