//! Text syntax for fields, polynomials, forms and group elements.
//!
//! - field: `5` or `q=5`
//! - polynomial: element codes from the constant term up, `2,4,0,1`, or a
//!   pretty sum such as `x^3 - 3x^2 - x - 3` (coefficients are integers
//!   reduced mod p over a prime field and element codes otherwise)
//! - form: `hom:d=<d>:<codes>`, code `i` being the coefficient of `X^i Y^(d-i)`
//! - group element: `[[a,b],[g,d]]`, acting by `F(aX + gY, bX + dY)`

use vidcore::{make_field, Elem, FieldSpec, Form, Pgl, Poly};

use crate::error::{CliError, CliResult};

fn parse_err(what: &str, input: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{what} {input:?}: {why}"))
}

pub fn parse_field(s: &str) -> CliResult<FieldSpec> {
    let t = s.trim();
    let t = t.strip_prefix("q=").unwrap_or(t);
    let q: u32 = t.parse().map_err(|e| parse_err("field", s, e))?;
    Ok(make_field(q)?)
}

fn parse_codes(s: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|e| parse_err("code list", s, e)))
        .collect()
}

fn is_code_list(s: &str) -> bool {
    let t = s.trim();
    !t.is_empty()
        && t.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace())
        && t.contains(|c: char| c.is_ascii_digit())
}

/// Parses either syntax for a polynomial.
pub fn parse_poly(spec: &FieldSpec, s: &str) -> CliResult<Poly> {
    if is_code_list(s) {
        Ok(Poly::from_codes(spec, &parse_codes(s)?)?)
    } else {
        parse_pretty(spec, s)
    }
}

fn coefficient(spec: &FieldSpec, n: u64, input: &str) -> CliResult<Elem> {
    if spec.is_prime_field() {
        Ok(spec.from_int((n % spec.order() as u64) as i64))
    } else {
        let code = u32::try_from(n).map_err(|e| parse_err("polynomial", input, e))?;
        Ok(spec.elem(code)?)
    }
}

fn parse_pretty(spec: &FieldSpec, input: &str) -> CliResult<Poly> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_err("polynomial", input, "empty"));
    }
    let mut coeffs: Vec<Elem> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(parse_err("polynomial", input, "expected + or -"));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let number = if i > start {
            Some(
                s[start..i]
                    .parse::<u64>()
                    .map_err(|e| parse_err("polynomial", input, e))?,
            )
        } else {
            None
        };
        if i < bytes.len() && bytes[i] == b'*' {
            if number.is_none() {
                return Err(parse_err("polynomial", input, "dangling *"));
            }
            i += 1;
            if i >= bytes.len() || bytes[i] != b'x' {
                return Err(parse_err("polynomial", input, "expected x after *"));
            }
        }
        let mut exp = 0usize;
        if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[es..i]
                    .parse()
                    .map_err(|_| parse_err("polynomial", input, "bad exponent"))?;
            }
        } else if number.is_none() {
            return Err(parse_err("polynomial", input, format!("unexpected character at {i}")));
        }
        let mut c = coefficient(spec, number.unwrap_or(1), input)?;
        if negative {
            c = spec.neg(c);
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Elem::ZERO);
        }
        coeffs[exp] = spec.add(coeffs[exp], c);
    }
    Ok(Poly::new(spec, coeffs)?)
}

/// Code list of a polynomial, the inverse of the code syntax.
pub fn poly_codes(p: &Poly) -> String {
    join_codes(&p.codes())
}

pub fn join_codes(codes: &[u32]) -> String {
    codes.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn parse_form(spec: &FieldSpec, s: &str) -> CliResult<Form> {
    let rest = s
        .trim()
        .strip_prefix("hom:d=")
        .ok_or_else(|| parse_err("form", s, "expected hom:d=<d>:<codes>"))?;
    let (d, codes) = rest
        .split_once(':')
        .ok_or_else(|| parse_err("form", s, "missing codes"))?;
    let d: usize = d.parse().map_err(|e| parse_err("form", s, e))?;
    let codes = parse_codes(codes)?;
    if codes.len() != d + 1 {
        return Err(parse_err(
            "form",
            s,
            format!("degree {d} needs {} codes, got {}", d + 1, codes.len()),
        ));
    }
    Ok(Form::from_codes(spec, &codes)?)
}

pub fn form_syntax(f: &Form) -> String {
    format!("hom:d={}:{}", f.degree(), join_codes(&f.codes()))
}

pub fn parse_pgl(spec: &FieldSpec, s: &str) -> CliResult<Pgl> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| parse_err("group element", s, "expected [[a,b],[g,d]]"))?;
    let (top, bottom) = inner
        .split_once("],[")
        .ok_or_else(|| parse_err("group element", s, "expected two rows"))?;
    let mut entries = Vec::new();
    for row in [top, bottom] {
        let codes = parse_codes(row)?;
        if codes.len() != 2 {
            return Err(parse_err("group element", s, "rows need two entries"));
        }
        for c in codes {
            entries.push(spec.elem(c)?);
        }
    }
    Ok(Pgl::new(spec, entries[0], entries[1], entries[2], entries[3])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("q=5").unwrap().order(), 5);
        assert_eq!(parse_field("9").unwrap().order(), 9);
        assert!(matches!(
            parse_field("6"),
            Err(CliError::Core(vidcore::Error::NotPrimePower(6)))
        ));
        assert!(matches!(parse_field("q=x"), Err(CliError::Parse(_))));
    }

    #[test]
    fn code_and_pretty_syntax_agree() {
        let f5 = make_field(5).unwrap();
        let a = parse_poly(&f5, "2,4,2,1").unwrap();
        let b = parse_poly(&f5, "x^3 - 3x^2 - x - 3").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_poly(&f5, "x^3 + 4x + 2").unwrap(),
            parse_poly(&f5, "2,4,0,1").unwrap()
        );
        assert_eq!(parse_poly(&f5, "3*x^2 + 7").unwrap().codes(), [2, 0, 3]);
        assert_eq!(poly_codes(&a), "2,4,2,1");
    }

    #[test]
    fn printed_polynomials_reparse() {
        for q in [2, 3, 4, 5, 9] {
            let spec = make_field(q).unwrap();
            for code in 1..200u64 {
                let p = Poly::from_code(&spec, code);
                assert_eq!(parse_poly(&spec, &p.to_string()).unwrap(), p, "{p}");
                assert_eq!(parse_poly(&spec, &poly_codes(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn bad_polynomials() {
        let f5 = make_field(5).unwrap();
        for s in ["", "x^", "2x3", "x + + 1", "y", "1,2,a", "*x"] {
            assert!(parse_poly(&f5, s).is_err(), "{s:?}");
        }
        let f4 = make_field(4).unwrap();
        assert!(parse_poly(&f4, "4x + 1").is_err());
        assert!(parse_poly(&f5, "1,7").is_err());
    }

    #[test]
    fn forms_and_group_elements() {
        let f3 = make_field(3).unwrap();
        let f = parse_form(&f3, "hom:d=2:1,0,1").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(form_syntax(&f), "hom:d=2:1,0,1");
        assert!(parse_form(&f3, "hom:d=3:1,0,1").is_err());
        let g = parse_pgl(&f3, "[[1,2],[0,1]]").unwrap();
        assert_eq!(g.to_string(), "[[1,2],[0,1]]");
        assert!(parse_pgl(&f3, "[[1,1],[1,1]]").is_err());
        assert!(parse_pgl(&f3, "[1,2,0,1]").is_err());
    }
}
