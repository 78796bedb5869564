//! Human-readable certificates: the decomposition, one row per operative
//! factor saying which summands it divides and which it omits, and the row
//! for the summand of full degree.

use std::fmt::Write as _;

use serde_json::{json, Value as Json};
use vidcore::vid::{verify_vid, Decomposition, Mode, VerifyReport};
use vidcore::{FieldSpec, Poly};

use crate::error::{CliError, CliResult};
use crate::json;
use crate::syntax::{parse_field, parse_poly, poly_codes};

const HEADER: &str = "certificate of visible irreducibility";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Poly,
    pub decomposition: Decomposition,
    pub report: VerifyReport,
}

impl Certificate {
    pub fn new(target: &Poly, decomposition: &Decomposition) -> CliResult<Certificate> {
        let report = verify_vid(target, decomposition)?;
        Ok(Certificate {
            target: target.clone(),
            decomposition: decomposition.clone(),
            report,
        })
    }

    pub fn accepted(&self) -> bool {
        self.report.accepted
    }

    pub fn render(&self) -> String {
        let dec = &self.decomposition;
        let mut out = String::new();
        let names = |idx: &[usize]| -> String {
            if idx.is_empty() {
                "none".into()
            } else {
                idx.iter().map(|i| format!("f{}", i + 1)).collect::<Vec<_>>().join(" ")
            }
        };
        writeln!(out, "{HEADER}").unwrap();
        writeln!(out, "field: q={}", dec.spec().order()).unwrap();
        writeln!(out, "mode: {}", dec.mode().name()).unwrap();
        writeln!(out, "degree: {}", dec.degree()).unwrap();
        writeln!(out, "target: {}  {}", poly_codes(&self.target), self.target).unwrap();
        for (i, s) in dec.summands().iter().enumerate() {
            writeln!(out, "f{}: {}  {}", i + 1, poly_codes(s), s).unwrap();
        }
        for row in &self.report.rows {
            let factor = if dec.mode() == Mode::Homogeneous {
                row.factor.form().to_string()
            } else {
                row.factor.form().to_poly().to_string()
            };
            writeln!(
                out,
                "factor {factor}: divides {}, omits {}",
                names(&row.divides),
                names(&row.omits)
            )
            .unwrap();
        }
        if let Some(full) = &self.report.full_degree {
            writeln!(out, "degree {}: {}", dec.degree(), names(full)).unwrap();
        }
        let verdict = if self.report.accepted {
            "accepted".to_string()
        } else if !self.report.sum_matches {
            "rejected: the summands do not add up to the target".to_string()
        } else if let Some(row) = self.report.first_violation() {
            format!(
                "rejected: factor {} is omitted by {} summands",
                row.factor.form(),
                row.omits.len()
            )
        } else {
            "rejected: not exactly one summand has full degree".to_string()
        };
        writeln!(out, "verdict: {verdict}").unwrap();
        out
    }

    pub fn to_json(&self) -> Json {
        json!({
            "target": self.target.codes(),
            "decomposition": json::decomposition(&self.decomposition),
            "verification": json::verification(&self.report),
        })
    }

    /// Reads a rendered certificate, recomputes it and insists that every
    /// line matches the recomputation.
    pub fn parse(text: &str) -> CliResult<Certificate> {
        let bad = |msg: String| CliError::Parse(format!("certificate: {msg}"));
        let mut lines = text.lines().map(str::trim_end).filter(|l| !l.is_empty());
        if lines.next() != Some(HEADER) {
            return Err(bad("missing header".into()));
        }
        let (mut spec, mut mode, mut degree, mut target) = (None::<FieldSpec>, None, None, None);
        let mut summands = Vec::new();
        for line in lines {
            let Some((key, value)) = line.split_once(": ") else {
                continue;
            };
            let first = value.split_whitespace().next().unwrap_or("");
            match key {
                "field" => spec = Some(parse_field(value)?),
                "mode" => mode = Some(Mode::from_name(value).ok_or_else(|| bad(format!("unknown mode {value:?}")))?),
                "degree" => degree = Some(value.parse::<usize>().map_err(|e| bad(e.to_string()))?),
                "target" => target = Some(first.to_string()),
                k if k.starts_with('f') && k[1..].parse::<usize>().is_ok() => summands.push(first.to_string()),
                _ => {}
            }
        }
        let spec = spec.ok_or_else(|| bad("missing field".into()))?;
        let target = parse_poly(&spec, &target.ok_or_else(|| bad("missing target".into()))?)?;
        let summands = summands
            .iter()
            .map(|s| parse_poly(&spec, s))
            .collect::<CliResult<Vec<_>>>()?;
        let degree = degree.ok_or_else(|| bad("missing degree".into()))?;
        let dec = Decomposition::new(degree, mode.ok_or_else(|| bad("missing mode".into()))?, summands)?;
        let cert = Certificate::new(&target, &dec)?;
        let rendered = cert.render();
        let given: Vec<&str> = text.lines().map(str::trim_end).filter(|l| !l.is_empty()).collect();
        let expected: Vec<&str> = rendered.lines().collect();
        if given != expected {
            let at = given
                .iter()
                .zip(&expected)
                .position(|(a, b)| a != b)
                .unwrap_or(given.len().min(expected.len()));
            return Err(bad(format!(
                "line {} does not match the recomputation (expected {:?})",
                at + 1,
                expected.get(at).copied().unwrap_or("end of certificate")
            )));
        }
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use vidcore::make_field;
    use vidcore::vid::search_vids;

    fn example() -> Certificate {
        let f5 = make_field(5).unwrap();
        let f = Poly::from_codes(&f5, &[2, 4, 2, 1]).unwrap();
        let dec = search_vids(&f, 2, Mode::Full).unwrap().remove(0);
        Certificate::new(&f, &dec).unwrap()
    }

    #[test]
    fn renders_rows() {
        let text = example().render();
        assert!(text.contains("f1: 0,4,0,1  x^3 + 4x"), "{text}");
        assert!(text.contains("factor x + 1: divides f1, omits f2"), "{text}");
        assert!(text.contains("factor x + 3: divides f2, omits f1"), "{text}");
        assert!(text.contains("degree 3: f1"), "{text}");
        assert!(text.ends_with("verdict: accepted\n"));
        assert_eq!(text.lines().filter(|l| l.starts_with("factor")).count(), 5);
    }

    #[test]
    fn round_trip() {
        let cert = example();
        assert_eq!(Certificate::parse(&cert.render()).unwrap(), cert);
    }

    #[test]
    fn tampering_is_detected() {
        let text = example().render();
        let forged = text.replace(
            "factor x + 3: divides f2, omits f1",
            "factor x + 3: divides f1, omits f2",
        );
        assert!(Certificate::parse(&forged).is_err());
        let forged = text.replace("f2: 2,0,2", "f2: 2,0,3");
        assert!(Certificate::parse(&forged).is_err());
        assert!(Certificate::parse("hello").is_err());
    }

    #[test]
    fn rejected_candidates_say_why() {
        let f2 = make_field(2).unwrap();
        let p = |c: &[u32]| Poly::from_codes(&f2, c).unwrap();
        let f = p(&[1, 1, 0, 0, 1]);
        let dec = Decomposition::new(4, Mode::Full, vec![p(&[0, 0, 0, 0, 1]), p(&[1, 1])]).unwrap();
        let cert = Certificate::new(&f, &dec).unwrap();
        assert!(!cert.accepted());
        let text = cert.render();
        assert!(
            text.contains("verdict: rejected: factor X^2 + XY + Y^2 is omitted by 2 summands"),
            "{text}"
        );
        assert_eq!(Certificate::parse(&text).unwrap(), cert);
    }
}
