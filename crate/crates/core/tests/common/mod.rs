//! Brute-force oracles shared by the property and acceptance tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use vidcore::forms::{act, homogenize, Pgl};
use vidcore::vid::{search_vids, verify_hvid, verify_vid, Decomposition, Mode};
use vidcore::{FieldSpec, Poly};

/// Every nonzero polynomial of degree at most `d`.
pub fn all_polys(spec: &FieldSpec, d: usize) -> Vec<Poly> {
    let q = spec.order() as u64;
    (1..q.pow(d as u32 + 1)).map(|c| Poly::from_code(spec, c)).collect()
}

/// Decompositions of `f` with `2..=r_max` summands found by trying every
/// multiset of summands and asking the verifier.
pub fn naive_vids(f: &Poly, r_max: usize, mode: Mode) -> BTreeSet<Decomposition> {
    let polys = all_polys(f.spec(), f.degree().expect("nonzero"));
    let mut out = BTreeSet::new();
    for r in 2..=r_max {
        naive_extend(f, mode, &polys, r, 0, &mut Vec::new(), &mut out);
    }
    out
}

fn naive_extend(
    f: &Poly,
    mode: Mode,
    polys: &[Poly],
    r: usize,
    from: usize,
    chosen: &mut Vec<Poly>,
    out: &mut BTreeSet<Decomposition>,
) {
    let d = f.degree().unwrap();
    if chosen.len() == r - 1 {
        let partial = chosen.iter().fold(Poly::zero(f.spec()), |acc, p| &acc + p);
        let last = f - &partial;
        if last.is_zero() || last.degree().unwrap() > d {
            return;
        }
        let mut summands = chosen.clone();
        summands.push(last);
        let dec = Decomposition::new(d, mode, summands).expect("well formed");
        if verify_vid(f, &dec).expect("same field").accepted {
            out.insert(dec);
        }
        return;
    }
    for i in from..polys.len() {
        chosen.push(polys[i].clone());
        naive_extend(f, mode, polys, r, i, chosen, out);
        chosen.pop();
    }
}

pub fn structured_vids(f: &Poly, r_max: usize, mode: Mode) -> BTreeSet<Decomposition> {
    search_vids(f, r_max, mode).expect("in range").into_iter().collect()
}

/// Image of a decomposition of `f` under `g`, rescaled so the target is
/// monic. Returns the new target and decomposition.
pub fn transport(g: &Pgl, f: &Poly, dec: &Decomposition) -> (Poly, Decomposition) {
    let spec = f.spec();
    let d = dec.degree();
    let target = act(g, &homogenize(f, d).unwrap()).to_poly();
    let inv = spec.inv(target.lead().expect("nonzero")).unwrap();
    let summands = dec.forms().iter().map(|s| act(g, s).to_poly().scale(inv)).collect();
    (target.scale(inv), Decomposition::new(d, dec.mode(), summands).unwrap())
}

/// True when the homogeneous verifier gives the same verdict as the
/// polynomial one.
pub fn hom_agrees(f: &Poly, dec: &Decomposition) -> bool {
    let d = dec.degree();
    let hom = verify_hvid(&homogenize(f, d).unwrap(), &dec.forms()).unwrap();
    hom.accepted == verify_vid(f, dec).unwrap().accepted
}
