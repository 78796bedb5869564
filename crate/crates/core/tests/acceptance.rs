//! One PASS/FAIL line per acceptance criterion, each under a pinned time limit.

mod common;

use std::time::{Duration, Instant};

use common::{hom_agrees, naive_vids, structured_vids, transport};
use vidcore::forms::enumerate_pgl;
use vidcore::poly::enumerate_monic_irreducibles;
use vidcore::theorems::{self, TheoremReport};
use vidcore::vid::{default_r_max, search_vids, verify_vid, Decomposition, Mode};
use vidcore::{make_field, Poly};

type Outcome = Result<(), String>;

/// Name, time limit in seconds and check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn reports(rs: Vec<TheoremReport>) -> Outcome {
    let bad: Vec<String> = rs
        .iter()
        .flat_map(|r| {
            r.failures()
                .map(move |c| format!("{}: {} expected {} got {}", r.label(), c.name, c.expected, c.computed))
        })
        .collect();
    if rs.iter().any(|r| r.checks.is_empty()) {
        return Err("report without checks".into());
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join("; "))
    }
}

fn claim(id: &str) -> Outcome {
    reports(theorems::run_claim(id).map_err(|e| e.to_string())?)
}

fn ensure(cond: bool, what: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn main_trichotomy() -> Outcome {
    let rs = theorems::run_claim("main").map_err(|e| e.to_string())?;
    ensure(rs.len() == 15, "expected 11 listed pairs and 4 outside samples")?;
    reports(rs)
}

fn corollaries() -> Outcome {
    claim("quartic-bijection")?;
    claim("cubic-partner")
}

fn oracle_equivalence() -> Outcome {
    for (q, d, r_max) in [(2, 2, 3), (2, 3, 3), (2, 4, 2), (3, 2, 2)] {
        let spec = make_field(q).unwrap();
        for f in enumerate_monic_irreducibles(&spec, d) {
            let found = structured_vids(&f, r_max, Mode::Full);
            ensure(
                found == naive_vids(&f, r_max, Mode::Full),
                &format!("search differs from brute force on {f} over F_{q}"),
            )?;
            ensure(
                found.iter().all(|v| hom_agrees(&f, v)),
                &format!("verifiers disagree on {f}"),
            )?;
        }
    }
    for (q, d) in [(2, 4), (3, 2)] {
        let spec = make_field(q).unwrap();
        let r_max = default_r_max(q as u64, d, Mode::Full);
        for f in enumerate_monic_irreducibles(&spec, d) {
            let found = search_vids(&f, r_max, Mode::Full).map_err(|e| e.to_string())?;
            for g in enumerate_pgl(&spec) {
                let moved: Vec<(Poly, Decomposition)> = found.iter().map(|v| transport(&g, &f, v)).collect();
                let target = &moved[0].0;
                let image = moved.iter().map(|(_, v)| v.clone()).collect();
                ensure(
                    structured_vids(target, r_max, Mode::Full) == image,
                    &format!("{f} moved by {g} does not match the decompositions of {target}"),
                )?;
            }
        }
    }
    Ok(())
}

fn spot_examples() -> Outcome {
    let f5 = make_field(5).unwrap();
    let p5 = |c: &[u32]| Poly::from_codes(&f5, c).unwrap();
    let f = p5(&[2, 4, 2, 1]);
    let lin = |a: u32| p5(&[(5 - a) % 5, 1]);
    let cubic = &(&lin(0) * &lin(4)) * &lin(1);
    let quad = (&lin(3) * &lin(2)).scale(f5.from_int(-3));
    ensure(
        &cubic + &quad == f,
        "x(x+1)(x-1) - 3(x+2)(x-2) is not x^3 - 3x^2 - x - 3",
    )?;
    let dec = Decomposition::new(3, Mode::Full, vec![cubic, quad]).unwrap();
    ensure(
        verify_vid(&f, &dec).unwrap().accepted,
        "the F_5 cubic decomposition is rejected",
    )?;

    let f2 = make_field(2).unwrap();
    let p2 = |c: &[u32]| Poly::from_codes(&f2, c).unwrap();
    let f = p2(&[1, 1, 1]);
    let listed: Vec<Decomposition> = [
        [p2(&[0, 0, 1]), p2(&[1, 1])],
        [p2(&[1, 0, 1]), p2(&[0, 1])],
        [p2(&[0, 1, 1]), p2(&[1])],
    ]
    .into_iter()
    .map(|s| Decomposition::new(2, Mode::Full, s.to_vec()).unwrap())
    .collect();
    let mut listed_sorted = listed.clone();
    listed_sorted.sort();
    ensure(
        search_vids(&f, 2, Mode::Full).unwrap() == listed_sorted,
        "x^2 + x + 1 does not have exactly the three listed decompositions",
    )?;

    let f = p2(&[1, 1, 0, 0, 1]);
    let naive = Decomposition::new(4, Mode::Full, vec![p2(&[0, 0, 0, 0, 1]), p2(&[1, 1])]).unwrap();
    ensure(!verify_vid(&f, &naive).unwrap().accepted, "x^4 + (x + 1) is accepted")?;
    let product = &(&p2(&[0, 1]) * &p2(&[1, 1])) * &p2(&[1, 1, 1]);
    let good = Decomposition::new(4, Mode::Full, vec![product, p2(&[1])]).unwrap();
    ensure(
        verify_vid(&f, &good).unwrap().accepted,
        "x(x+1)(x^2+x+1) + 1 is rejected",
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("irreducible counts", 1, || claim("gauss-counts")),
        ("admissible pairs", 1, || claim("admissible")),
        ("all, half or none", 60, main_trichotomy),
        ("one-orbit table", 10, || claim("table1")),
        ("sextics over F_2", 5, || claim("sextic")),
        ("septimics over F_2", 10, || claim("septimic")),
        ("quintics over F_3", 30, || claim("quintic")),
        ("quadratics over F_4 without the degree condition", 1, || {
            claim("f4-quadratic")
        }),
        ("quartic bijection and cubic partners", 1, corollaries),
        ("orbit and stabilizer lemmas", 30, || claim("lemmas")),
        (
            "search against brute force, equivariance, verifier agreement",
            30,
            oracle_equivalence,
        ),
        ("introductory examples", 1, spot_examples),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(
                elapsed <= Duration::from_secs(*limit),
                &format!("took longer than {limit}s"),
            )
        });
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "{status} {:>2}. {name} ({:.2}s, limit {limit}s)",
            i + 1,
            elapsed.as_secs_f64()
        );
        if let Err(why) = outcome {
            println!("     {why}");
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
