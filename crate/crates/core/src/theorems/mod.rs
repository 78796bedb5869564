//! One verifier per classification claim.
//!
//! Each verifier recomputes the quantities a claim is about and compares them
//! by exact equality against hard-coded expected values. A report passes only
//! when every check does.

mod corollaries;
mod counting;
mod tables;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::error::{Error, Result};
use crate::forms::{homogenize, Form, ProjForm};
use crate::poly::Poly;

pub use corollaries::{cubic_partner_f3, quartic_bijection_f2, verify_cubic_partner, verify_rootless_lagrange};
pub use counting::{
    admissible_pairs, admissible_pairs_mode, classify_main, verify_admissible, verify_gauss_counts, verify_lemmas,
    verify_main_all, verify_theorem_main, MainClass,
};
pub use tables::{
    verify_f4_quadratic, verify_quintic_f3, verify_septimic_theorem, verify_sextic_theorem, verify_table1, TABLE1,
};

/// A value in a report: exact integers, flags, text and lists of these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<Value>),
}

impl From<bool> for Value {
    fn from(b: bool) -> Value {
        Value::Bool(b)
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(n: $t) -> Value {
                Value::Int(n as i64)
            }
        }
    )*};
}
int_value!(i32, i64, u32, u64, usize);

impl From<&str> for Value {
    fn from(s: &str) -> Value {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Value {
        Value::Text(s)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Value {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Text(s) => f.write_str(s),
            Value::List(items) => {
                f.write_str("[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// A `(q, d)` pair as a report value.
pub fn pair(q: u32, d: usize) -> Value {
    Value::List(vec![Value::Int(q as i64), Value::Int(d as i64)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub claim: String,
    /// What the claim says, in words.
    pub cite: String,
    pub params: Vec<(String, Value)>,
    pub checks: Vec<Check>,
    /// Supporting data; never affects `pass`.
    pub witnesses: Vec<(String, Value)>,
}

impl TheoremReport {
    pub fn new(claim: &str, cite: &str) -> TheoremReport {
        TheoremReport {
            claim: claim.to_string(),
            cite: cite.to_string(),
            params: Vec::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, v: impl Into<Value>) -> &mut Self {
        self.params.push((name.to_string(), v.into()));
        self
    }

    pub fn check(
        &mut self,
        name: impl Into<String>,
        expected: impl Into<Value>,
        computed: impl Into<Value>,
    ) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.into(),
            computed: computed.into(),
        });
        self
    }

    pub fn witness(&mut self, name: impl Into<String>, v: impl Into<Value>) -> &mut Self {
        self.witnesses.push((name.into(), v.into()));
        self
    }

    pub fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass())
    }

    /// A short label such as `main(q=3, d=5)`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.claim.clone();
        }
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.claim, params.join(", "))
    }
}

/// Claim ids accepted by [`run_claim`], in report order.
pub const CLAIMS: [&str; 12] = [
    "gauss-counts",
    "admissible",
    "main",
    "table1",
    "sextic",
    "septimic",
    "quintic",
    "f4-quadratic",
    "quartic-bijection",
    "cubic-partner",
    "rootless-lagrange",
    "lemmas",
];

/// Runs one claim, or every claim for `"all"`.
pub fn run_claim(id: &str) -> Result<Vec<TheoremReport>> {
    Ok(match id {
        "all" => {
            let mut out = Vec::new();
            for c in CLAIMS {
                out.extend(run_claim(c)?);
            }
            out
        }
        "gauss-counts" => vec![verify_gauss_counts()?],
        "admissible" => vec![verify_admissible()],
        "main" => verify_main_all()?,
        "table1" => vec![verify_table1()?],
        "sextic" => vec![verify_sextic_theorem()?],
        "septimic" => vec![verify_septimic_theorem()?],
        "quintic" => vec![verify_quintic_f3()?],
        "f4-quadratic" => vec![verify_f4_quadratic()?],
        "quartic-bijection" => vec![quartic_bijection_f2()?],
        "cubic-partner" => vec![verify_cubic_partner()?],
        "rootless-lagrange" => vec![verify_rootless_lagrange()?],
        "lemmas" => (2..=5).map(verify_lemmas).collect::<Result<_>>()?,
        other => return Err(Error::UnknownClaim(other.to_string())),
    })
}

fn proj(f: &Form) -> ProjForm {
    f.projective().expect("nonzero form")
}

fn proj_poly(p: &Poly) -> ProjForm {
    proj(&homogenize(p, p.degree().expect("nonzero")).expect("degree fits"))
}

fn sum_forms(forms: &[Form]) -> Form {
    forms
        .iter()
        .skip(1)
        .fold(forms[0].clone(), |acc, t| acc.add(t).expect("equal degrees"))
}

/// Sorted distinct values, for checks of the form "every count equals n".
fn distinct(values: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = values.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_pass_needs_checks() {
        let mut r = TheoremReport::new("x", "y");
        assert!(!r.pass());
        r.check("a", 1, 1usize);
        assert!(r.pass());
        r.check("b", vec![1, 2], vec![1u32, 3]);
        assert!(!r.pass());
        assert_eq!(r.failures().count(), 1);
        r.param("q", 3);
        assert_eq!(r.label(), "x(q=3)");
    }

    #[test]
    fn value_display() {
        assert_eq!(
            Value::from(vec![pair(2, 2), pair(3, 5)]).to_string(),
            "[[2, 2], [3, 5]]"
        );
        assert_eq!(Value::from("all").to_string(), "all");
    }

    #[test]
    fn unknown_claim() {
        assert_eq!(run_claim("nope").unwrap_err(), Error::UnknownClaim("nope".into()));
    }
}
