//! JSON documents. The layout of each is described in `docs/schema.md`.

use serde_json::{json, Map, Value as Json};
use vidcore::forms::OrbitReport;
use vidcore::theorems::{TheoremReport, Value};
use vidcore::vid::{Decomposition, Mode, VerifyReport};
use vidcore::{FieldSpec, Poly};

use crate::error::{CliError, CliResult};
use crate::syntax::{form_syntax, parse_field};

pub fn value(v: &Value) -> Json {
    match v {
        Value::Bool(b) => json!(b),
        Value::Int(n) => json!(n),
        Value::Text(s) => json!(s),
        Value::List(items) => Json::Array(items.iter().map(value).collect()),
    }
}

fn named(pairs: impl IntoIterator<Item = (String, Json)>) -> Json {
    Json::Object(pairs.into_iter().collect::<Map<_, _>>())
}

pub fn report(r: &TheoremReport) -> Json {
    json!({
        "claim": r.claim,
        "label": r.label(),
        "cite": r.cite,
        "params": named(r.params.iter().map(|(k, v)| (k.clone(), value(v)))),
        "expected": named(r.checks.iter().map(|c| (c.name.clone(), value(&c.expected)))),
        "computed": named(r.checks.iter().map(|c| (c.name.clone(), value(&c.computed)))),
        "failed": r.failures().map(|c| c.name.clone()).collect::<Vec<_>>(),
        "pass": r.pass(),
        "witnesses": named(r.witnesses.iter().map(|(k, v)| (k.clone(), value(v)))),
    })
}

pub fn decomposition(dec: &Decomposition) -> Json {
    json!({
        "q": dec.spec().order(),
        "d": dec.degree(),
        "mode": dec.mode().name(),
        "summands": dec.summands().iter().map(Poly::codes).collect::<Vec<_>>(),
    })
}

fn field<'a>(obj: &'a Map<String, Json>, key: &str) -> CliResult<&'a Json> {
    obj.get(key)
        .ok_or_else(|| CliError::Parse(format!("decomposition: missing {key:?}")))
}

fn uint(v: &Json, what: &str) -> CliResult<u64> {
    v.as_u64()
        .ok_or_else(|| CliError::Parse(format!("decomposition: {what} must be a non-negative integer")))
}

/// Reads `{"q":5,"d":3,"mode":"full","summands":[[0,4,0,1],[2,0,2]]}`;
/// `mode` defaults to `full`.
pub fn parse_decomposition(text: &str) -> CliResult<Decomposition> {
    let doc: Json = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| CliError::Parse("decomposition: expected an object".into()))?;
    let spec: FieldSpec = parse_field(&uint(field(obj, "q")?, "q")?.to_string())?;
    let d = uint(field(obj, "d")?, "d")? as usize;
    let mode = match obj.get("mode") {
        None => Mode::Full,
        Some(m) => {
            let name = m
                .as_str()
                .ok_or_else(|| CliError::Parse("decomposition: mode must be a string".into()))?;
            Mode::from_name(name).ok_or_else(|| CliError::Parse(format!("decomposition: unknown mode {name:?}")))?
        }
    };
    let summands = field(obj, "summands")?
        .as_array()
        .ok_or_else(|| CliError::Parse("decomposition: summands must be an array".into()))?
        .iter()
        .map(|s| {
            let codes = s
                .as_array()
                .ok_or_else(|| CliError::Parse("decomposition: each summand is a code array".into()))?
                .iter()
                .map(|c| uint(c, "a code").and_then(|c| u32::try_from(c).map_err(|e| CliError::Parse(e.to_string()))))
                .collect::<CliResult<Vec<u32>>>()?;
            Ok(Poly::from_codes(&spec, &codes)?)
        })
        .collect::<CliResult<Vec<Poly>>>()?;
    Ok(Decomposition::new(d, mode, summands)?)
}

pub fn verification(report: &VerifyReport) -> Json {
    json!({
        "accepted": report.accepted,
        "sum_matches": report.sum_matches,
        "summands_nonzero": report.summands_nonzero,
        "rows": report.rows.iter().map(|row| json!({
            "factor": form_syntax(row.factor.form()),
            "factor_text": row.factor.form().to_string(),
            "divides": row.divides,
            "omits": row.omits,
        })).collect::<Vec<_>>(),
        "full_degree": report.full_degree,
    })
}

pub fn orbits(report: &OrbitReport) -> Json {
    json!({
        "q": report.q,
        "d": report.degree,
        "group_order": report.group_order,
        "sizes": report.sizes(),
        "orbits": report.orbits.iter().map(|o| json!({
            "size": o.size(),
            "representative": form_syntax(o.representative.form()),
            "representative_text": o.representative.form().to_string(),
            "stabilizer_order": o.stabilizer_order(),
            "cyclic": o.cyclic,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_round_trip() {
        let text = r#"{"q":5,"d":3,"mode":"full","summands":[[0,4,0,1],[2,0,2]]}"#;
        let dec = parse_decomposition(text).unwrap();
        assert_eq!(decomposition(&dec).to_string(), text);
        assert_eq!(parse_decomposition(&decomposition(&dec).to_string()).unwrap(), dec);
    }

    #[test]
    fn decomposition_errors() {
        for bad in [
            "[]",
            r#"{"q":6,"d":3,"summands":[[1],[1]]}"#,
            r#"{"q":5,"summands":[[1],[1]]}"#,
            r#"{"q":5,"d":3,"mode":"half","summands":[[1],[1]]}"#,
            r#"{"q":5,"d":3,"summands":[[1]]}"#,
            r#"{"q":5,"d":1,"summands":[[1,1,1],[1]]}"#,
            r#"{"q":5,"d":3,"summands":[[9],[1]]}"#,
            "{",
        ] {
            assert!(parse_decomposition(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn report_fields() {
        let r = vidcore::theorems::run_claim("admissible").unwrap().remove(0);
        let j = report(&r);
        for key in ["claim", "cite", "expected", "computed", "pass", "witnesses"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["pass"], json!(true));
        assert_eq!(j["expected"]["pairs"], j["computed"]["pairs"]);
    }
}
