//! Exhaustive search for visibly irreducible decompositions.
//!
//! Every operative factor `p` is assigned the one summand `a(p)` it must not
//! divide. Summand `i` is then a multiple of `B_i = prod_{a(p) != i} p`; the
//! cofactors of all summands but the last are enumerated and the last summand
//! is whatever remains of `f`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{max_r_bound_mode, operative_factors, Decomposition, Mode, RBound};
use crate::error::{Error, Result};
use crate::ffield::{Elem, FieldSpec};
use crate::poly::{raw, Poly};

pub const MAX_SEARCH_ORDER: u32 = 5;
pub const MAX_SEARCH_DEGREE: usize = 7;
const MAX_SEARCH_TERMS: usize = 6;

/// Default term cap: the bound capped at 4, and 2 when the bound already
/// rules decompositions out (the search then confirms it).
pub fn default_r_max(q: u64, d: usize, mode: Mode) -> usize {
    match max_r_bound_mode(q, d, mode) {
        RBound::Max(r) => r.min(4),
        RBound::Unbounded => 4,
        RBound::NoVid => 2,
    }
}

struct Search<'a> {
    spec: &'a FieldSpec,
    d: usize,
    mode: Mode,
    target: &'a [Elem],
    ops: Vec<Vec<Elem>>,
    found: BTreeSet<Vec<Vec<Elem>>>,
}

/// All decompositions of `f` with `2 <= r <= r_max` summands accepted by the
/// definition for `mode`, without duplicates, in ascending order.
///
/// [`Mode::Homogeneous`] gives the same decompositions as [`Mode::Full`].
pub fn search_vids(f: &Poly, r_max: usize, mode: Mode) -> Result<Vec<Decomposition>> {
    let spec = f.spec();
    let d = f.degree().unwrap_or(0);
    if spec.order() > MAX_SEARCH_ORDER || !(2..=MAX_SEARCH_DEGREE).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "search needs q <= {MAX_SEARCH_ORDER} and 2 <= d <= {MAX_SEARCH_DEGREE}, got q={} d={d}",
            spec.order()
        )));
    }
    if !(2..=MAX_SEARCH_TERMS).contains(&r_max) {
        return Err(Error::OutOfRange(format!(
            "r_max must be in 2..={MAX_SEARCH_TERMS}, got {r_max}"
        )));
    }
    let ops = operative_factors(spec, d).iter().map(|p| p.coeffs().to_vec()).collect();
    let mut search = Search {
        spec,
        d,
        mode,
        target: f.coeffs(),
        ops,
        found: BTreeSet::new(),
    };
    for r in 2..=r_max {
        search.run(r);
    }
    let mut out: Vec<Decomposition> = search
        .found
        .into_iter()
        .map(|summands| {
            let polys = summands.into_iter().map(|c| Poly::from_trusted(spec, c)).collect();
            Decomposition::new(d, mode, polys).expect("search output is well formed")
        })
        .collect();
    out.sort();
    Ok(out)
}

impl Search<'_> {
    fn run(&mut self, r: usize) {
        let k = self.ops.len();
        let op_deg: Vec<usize> = self.ops.iter().map(|p| p.len() - 1).collect();
        let total: usize = op_deg.iter().sum();
        let mut assign = vec![0usize; k];
        loop {
            let mut omitted = vec![0usize; r];
            for (j, &i) in assign.iter().enumerate() {
                omitted[i] += op_deg[j];
            }
            if omitted.iter().all(|&o| total - o <= self.d) {
                self.fill(r, &assign);
            }
            // odometer over assignments in base r
            let mut pos = 0;
            loop {
                if pos == k {
                    return;
                }
                assign[pos] += 1;
                if assign[pos] < r {
                    break;
                }
                assign[pos] = 0;
                pos += 1;
            }
        }
    }

    fn fill(&mut self, r: usize, assign: &[usize]) {
        let spec = self.spec;
        let bases: Vec<Vec<Elem>> = (0..r)
            .map(|i| {
                self.ops
                    .iter()
                    .zip(assign)
                    .filter(|(_, &a)| a != i)
                    .fold(vec![Elem::ONE], |acc, (p, _)| raw::mul(spec, &acc, p))
            })
            .collect();
        let excluded: Vec<Vec<usize>> = (0..r)
            .map(|i| (0..assign.len()).filter(|&j| assign[j] == i).collect())
            .collect();
        let mut summands = Vec::with_capacity(r);
        self.extend(r, &bases, &excluded, &mut summands, Vec::new());
    }

    fn extend(
        &mut self,
        r: usize,
        bases: &[Vec<Elem>],
        excluded: &[Vec<usize>],
        summands: &mut Vec<Vec<Elem>>,
        partial: Vec<Elem>,
    ) {
        let spec = self.spec;
        let i = summands.len();
        let full_count = summands.iter().filter(|s| s.len() == self.d + 1).count();
        if self.mode != Mode::DegreeFree && full_count > 1 {
            return;
        }
        if i == r - 1 {
            let last = raw::sub(spec, self.target, &partial);
            if last.is_empty() || last.len() > self.d + 1 {
                return;
            }
            if !raw::rem(spec, &last, &bases[i]).is_empty() {
                return;
            }
            if excluded[i]
                .iter()
                .any(|&j| raw::rem(spec, &last, &self.ops[j]).is_empty())
            {
                return;
            }
            let full = full_count + usize::from(last.len() == self.d + 1);
            if self.mode != Mode::DegreeFree && full != 1 {
                return;
            }
            let mut key = summands.clone();
            key.push(last);
            key.sort_by(|a, b| canonical_cmp(b, a));
            self.found.insert(key);
            return;
        }
        let base = &bases[i];
        let room = self.d + 1 - (base.len() - 1);
        let q = spec.order() as u64;
        for code in 1..q.pow(room as u32) {
            let cofactor = digits(code, q, room);
            if excluded[i]
                .iter()
                .any(|&j| raw::rem(spec, &cofactor, &self.ops[j]).is_empty())
            {
                continue;
            }
            let summand = raw::mul(spec, base, &cofactor);
            let next = raw::add(spec, &partial, &summand);
            summands.push(summand);
            self.extend(r, bases, excluded, summands, next);
            summands.pop();
        }
    }
}

fn digits(mut code: u64, q: u64, len: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(Elem((code % q) as u32));
        code /= q;
    }
    raw::trimmed(out)
}

fn canonical_cmp(a: &[Elem], b: &[Elem]) -> core::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use crate::poly::enumerate_monic_irreducibles;
    use crate::vid::verify_vid;

    fn p(spec: &FieldSpec, codes: &[u32]) -> Poly {
        Poly::from_codes(spec, codes).unwrap()
    }

    #[test]
    fn quadratic_over_f2_has_three() {
        let f2 = make_field(2).unwrap();
        let f = p(&f2, &[1, 1, 1]);
        let found = search_vids(&f, 2, Mode::Full).unwrap();
        let got: Vec<Vec<Vec<u32>>> = found
            .iter()
            .map(|d| d.summands().iter().map(Poly::codes).collect())
            .collect();
        assert_eq!(got.len(), 3);
        for expected in [
            vec![vec![0, 0, 1], vec![1, 1]],
            vec![vec![1, 0, 1], vec![0, 1]],
            vec![vec![0, 1, 1], vec![1]],
        ] {
            assert!(got.contains(&expected), "missing {expected:?}");
        }
        for dec in &found {
            assert!(verify_vid(&f, dec).unwrap().accepted);
        }
    }

    #[test]
    fn f5_cubic_has_unique_vid() {
        let f5 = make_field(5).unwrap();
        let f = p(&f5, &[2, 4, 2, 1]);
        let found = search_vids(&f, 2, Mode::Full).unwrap();
        assert_eq!(found.len(), 1);
        let codes: Vec<_> = found[0].summands().iter().map(Poly::codes).collect();
        assert_eq!(codes, [vec![0, 4, 0, 1], vec![2, 0, 2]]);
    }

    #[test]
    fn quartics_over_f3_have_none() {
        let f3 = make_field(3).unwrap();
        for f in enumerate_monic_irreducibles(&f3, 4) {
            assert!(search_vids(&f, 2, Mode::Full).unwrap().is_empty());
        }
    }

    #[test]
    fn range_checks() {
        let f7 = make_field(7).unwrap();
        assert!(search_vids(&p(&f7, &[3, 0, 1]), 2, Mode::Full).is_err());
        let f2 = make_field(2).unwrap();
        assert!(search_vids(&p(&f2, &[1, 1, 1]), 1, Mode::Full).is_err());
        assert!(search_vids(&p(&f2, &[1, 1]), 2, Mode::Full).is_err());
    }

    #[test]
    fn defaults() {
        assert_eq!(default_r_max(2, 3, Mode::Full), 4);
        assert_eq!(default_r_max(2, 4, Mode::Full), 4);
        assert_eq!(default_r_max(3, 4, Mode::Full), 2);
        assert_eq!(default_r_max(5, 3, Mode::Full), 2);
    }
}
