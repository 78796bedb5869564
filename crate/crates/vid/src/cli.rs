//! Subcommands. Each returns the text to print and the exit status:
//! 0 for success, 1 for a negative mathematical result (no decomposition, a
//! rejected certificate, a failed claim) and 2 for usage or parse errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};
use vidcore::forms::{act, homogenize, orbits_on_irreducibles};
use vidcore::poly::{count_irreducibles, count_monic_irreducibles, enumerate_monic_irreducibles, is_irreducible};
use vidcore::theorems::{run_claim, TheoremReport};
use vidcore::vid::{default_r_max, infer_shape, search_vids, Mode};
use vidcore::{FieldSpec, Poly};

use crate::certificate::Certificate;
use crate::error::{CliError, CliResult};
use crate::golden::write_golden;
use crate::json;
use crate::syntax::{parse_field, parse_form, parse_pgl, parse_poly, poly_codes};

/// Largest `q^d` for which `irreducibles` lists polynomials.
const MAX_LISTING: u64 = 1 << 20;

#[derive(Parser, Debug)]
#[command(
    name = "vid",
    version,
    about = "Visibly irreducible decompositions over small finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    DegreeFree,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Full => Mode::Full,
            ModeArg::DegreeFree => Mode::DegreeFree,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the monic irreducible polynomials of degree d over F_q.
    Irreducibles {
        #[arg(long)]
        q: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Find every decomposition of a polynomial, or check a given one.
    Vids {
        #[arg(long)]
        q: String,
        /// Expected degree; defaults to the degree of the polynomial.
        #[arg(long)]
        d: Option<usize>,
        /// Codes `2,4,0,1`, a sum `x^3 + 4x + 2` or a form `hom:d=3:2,4,0,1`.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        max_r: Option<usize>,
        #[arg(long, value_enum, default_value = "full")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
        /// Print the witness table for each decomposition.
        #[arg(long)]
        certificate: bool,
        /// Search reducible polynomials too (nothing will be found).
        #[arg(long)]
        allow_reducible: bool,
        /// Check this decomposition (JSON, a rendered certificate, or @file) instead of searching.
        #[arg(long)]
        decomposition: Option<String>,
    },
    /// Orbits of PGL_2(F_q) on the irreducible forms of degree d.
    Orbits {
        #[arg(long)]
        q: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        json: bool,
        /// Report the orbit of this polynomial.
        #[arg(long)]
        poly: Option<String>,
        /// With --poly, also apply this group element `[[a,b],[g,d]]`.
        #[arg(long)]
        act: Option<String>,
    },
    /// Recompute a claim (or `all`) and compare with the expected values.
    Verify {
        #[arg(default_value = "all")]
        claim: String,
        #[arg(long)]
        json: bool,
        /// Write one JSON report per claim into this directory.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Outcome {
        Outcome {
            text,
            code: if ok { 0 } else { 1 },
        }
    }

    fn json(doc: &Json, ok: bool) -> Outcome {
        Outcome::new(
            format!("{}\n", serde_json::to_string_pretty(doc).expect("serializable")),
            ok,
        )
    }
}

/// Runs a parsed command; errors become exit status 2.
pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            text: format!("error: {e}\n"),
            code: 2,
        },
    }
}

fn dispatch(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Irreducibles { q, d, json } => irreducibles(&parse_field(&q)?, d, json),
        Command::Vids {
            q,
            d,
            poly,
            max_r,
            mode,
            json,
            certificate,
            allow_reducible,
            decomposition,
        } => {
            let spec = parse_field(&q)?;
            match decomposition {
                Some(dec) => check(&spec, poly.as_deref(), &dec, json),
                None => {
                    let poly = poly.ok_or_else(|| CliError::Usage("vids needs --poly or --decomposition".into()))?;
                    let opts = SearchOpts {
                        d,
                        max_r,
                        mode: mode.into(),
                        json,
                        certificate,
                        allow_reducible,
                    };
                    vids(&spec, &poly, &opts)
                }
            }
        }
        Command::Orbits { q, d, json, poly, act } => {
            orbits(&parse_field(&q)?, d, json, poly.as_deref(), act.as_deref())
        }
        Command::Verify { claim, json, golden } => verify(&claim, json, golden.as_deref()),
    }
}

fn irreducibles(spec: &FieldSpec, d: usize, as_json: bool) -> CliResult<Outcome> {
    let q = spec.order() as u64;
    if d == 0 || (q as f64).powi(d as i32) > MAX_LISTING as f64 {
        return Err(CliError::Usage(format!(
            "irreducibles needs d >= 1 and q^d <= {MAX_LISTING}"
        )));
    }
    let polys = enumerate_monic_irreducibles(spec, d);
    let formula = count_monic_irreducibles(q, d as u32);
    let forms = count_irreducibles(q, d as u32);
    if as_json {
        let doc = json!({
            "q": q,
            "d": d,
            "count": polys.len(),
            "formula": formula,
            "forms": forms,
            "polys": polys.iter().map(Poly::codes).collect::<Vec<_>>(),
        });
        return Ok(Outcome::json(&doc, true));
    }
    let mut out = String::new();
    for p in &polys {
        writeln!(out, "{:<24} {p}", poly_codes(p)).unwrap();
    }
    writeln!(
        out,
        "{} monic irreducibles of degree {d} over F_{q} (formula: {formula})",
        polys.len()
    )
    .unwrap();
    writeln!(out, "{forms} irreducible forms up to scaling").unwrap();
    Ok(Outcome::new(out, true))
}

struct SearchOpts {
    d: Option<usize>,
    max_r: Option<usize>,
    mode: Mode,
    json: bool,
    certificate: bool,
    allow_reducible: bool,
}

/// A polynomial from any of the three syntaxes, with the degree it stands
/// for (a form divisible by `Y` has a lower polynomial degree).
fn read_target(spec: &FieldSpec, s: &str) -> CliResult<(Poly, usize)> {
    if s.trim_start().starts_with("hom:") {
        let form = parse_form(spec, s)?;
        Ok((form.to_poly(), form.degree()))
    } else {
        let p = parse_poly(spec, s)?;
        let d = p
            .degree()
            .ok_or_else(|| CliError::Usage("the zero polynomial has no decompositions".into()))?;
        Ok((p, d))
    }
}

fn vids(spec: &FieldSpec, poly: &str, opts: &SearchOpts) -> CliResult<Outcome> {
    let (f, d) = read_target(spec, poly)?;
    if let Some(expected) = opts.d {
        if expected != d {
            return Err(CliError::Usage(format!(
                "--d {expected} but the polynomial has degree {d}"
            )));
        }
    }
    let irreducible = f.degree() == Some(d) && is_irreducible(&f);
    if !irreducible && !opts.allow_reducible {
        return Err(CliError::Usage(format!(
            "{f} is not irreducible of degree {d}; pass --allow-reducible to search anyway"
        )));
    }
    let q = spec.order() as u64;
    let r_max = opts.max_r.unwrap_or_else(|| default_r_max(q, d, opts.mode));
    let found = if f.degree() == Some(d) {
        search_vids(&f, r_max, opts.mode)?
    } else {
        Vec::new()
    };
    let mut entries = Vec::new();
    for dec in &found {
        let (shape, _) = infer_shape(dec)?;
        let cert = Certificate::new(&f, dec)?;
        entries.push((dec, shape, cert));
    }
    if opts.json {
        let vids: Vec<Json> = entries
            .iter()
            .map(|(dec, shape, cert)| {
                let mut v = json::decomposition(dec);
                v["r"] = json!(dec.len());
                v["shape"] = json!(shape.to_string());
                if opts.certificate {
                    v["certificate"] = json::verification(&cert.report);
                }
                v
            })
            .collect();
        let doc = json!({
            "q": q,
            "d": d,
            "mode": opts.mode.name(),
            "poly": f.codes(),
            "irreducible": irreducible,
            "r_max": r_max,
            "count": vids.len(),
            "vids": vids,
        });
        return Ok(Outcome::json(&doc, !found.is_empty()));
    }
    let mut out = String::new();
    writeln!(
        out,
        "f = {f} over F_{q}, degree {d}, mode {}, up to {r_max} terms",
        opts.mode.name()
    )
    .unwrap();
    if found.is_empty() {
        let why = if irreducible { "" } else { " (f is reducible)" };
        writeln!(out, "no VID{why}").unwrap();
        return Ok(Outcome::new(out, false));
    }
    writeln!(out, "{} VID{}", found.len(), if found.len() == 1 { "" } else { "s" }).unwrap();
    for (i, (dec, shape, cert)) in entries.iter().enumerate() {
        writeln!(out, "[{}] {shape}", i + 1).unwrap();
        writeln!(out, "    {dec}").unwrap();
        let codes: Vec<String> = dec.summands().iter().map(poly_codes).collect();
        writeln!(out, "    summands: {}", codes.join(" | ")).unwrap();
        if opts.certificate {
            for line in cert.render().lines() {
                writeln!(out, "    {line}").unwrap();
            }
        }
    }
    Ok(Outcome::new(out, true))
}

fn read_arg(arg: &str) -> CliResult<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        }),
        None => Ok(arg.to_string()),
    }
}

/// Checks a supplied decomposition or certificate against `--poly` (or its
/// own sum when no target is given).
fn check(spec: &FieldSpec, poly: Option<&str>, input: &str, as_json: bool) -> CliResult<Outcome> {
    let text = read_arg(input)?;
    let cert = if text.trim_start().starts_with('{') {
        let dec = json::parse_decomposition(&text)?;
        if dec.spec() != spec {
            return Err(CliError::Usage(format!(
                "decomposition is over F_{}, not F_{}",
                dec.spec().order(),
                spec.order()
            )));
        }
        let target = match poly {
            Some(p) => read_target(spec, p)?.0,
            None => dec.sum(),
        };
        if target.degree() != Some(dec.degree()) {
            return Err(CliError::Usage(format!(
                "target {target} does not have degree {}",
                dec.degree()
            )));
        }
        Certificate::new(&target, &dec)?
    } else {
        let cert = Certificate::parse(&text)?;
        if cert.target.spec() != spec {
            return Err(CliError::Usage("certificate is over a different field".into()));
        }
        if let Some(p) = poly {
            if read_target(spec, p)?.0 != cert.target {
                return Err(CliError::Usage("certificate is for a different polynomial".into()));
            }
        }
        cert
    };
    if as_json {
        let mut doc = cert.to_json();
        doc["accepted"] = json!(cert.accepted());
        return Ok(Outcome::json(&doc, cert.accepted()));
    }
    Ok(Outcome::new(cert.render(), cert.accepted()))
}

fn orbits(spec: &FieldSpec, d: usize, as_json: bool, poly: Option<&str>, g: Option<&str>) -> CliResult<Outcome> {
    let report = orbits_on_irreducibles(spec, d)?;
    let located = match poly {
        Some(p) => {
            let (f, deg) = read_target(spec, p)?;
            if deg != d {
                return Err(CliError::Usage(format!("--poly has degree {deg}, not {d}")));
            }
            let form = homogenize(&f, d)?;
            let proj = form.projective()?;
            let index = report
                .orbits
                .iter()
                .position(|o| o.members.binary_search(&proj).is_ok())
                .ok_or_else(|| CliError::Usage(format!("{f} is not irreducible")))?;
            let image = match g {
                Some(g) => {
                    let g = parse_pgl(spec, g)?;
                    Some(act(&g, &form).projective()?.form().to_poly())
                }
                None => None,
            };
            Some((f, index, image))
        }
        None => {
            if g.is_some() {
                return Err(CliError::Usage("--act needs --poly".into()));
            }
            None
        }
    };
    if as_json {
        let mut doc = json::orbits(&report);
        if let Some((f, index, image)) = &located {
            doc["poly"] = json!({
                "codes": f.codes(),
                "orbit": index,
                "image": image.as_ref().map(Poly::codes),
            });
        }
        return Ok(Outcome::json(&doc, true));
    }
    let mut out = String::new();
    let total: usize = report.sizes().iter().sum();
    writeln!(
        out,
        "PGL_2(F_{}) of order {} on {total} irreducible forms of degree {d}: {} orbit{}",
        report.q,
        report.group_order,
        report.orbits.len(),
        if report.orbits.len() == 1 { "" } else { "s" }
    )
    .unwrap();
    for (i, o) in report.orbits.iter().enumerate() {
        writeln!(
            out,
            "[{}] size {}, stabilizer order {}{}, representative {}",
            i,
            o.size(),
            o.stabilizer_order(),
            if o.cyclic { " (cyclic)" } else { "" },
            o.representative.form()
        )
        .unwrap();
    }
    if let Some((f, index, image)) = located {
        writeln!(out, "{f} lies in orbit [{index}]").unwrap();
        if let Some(image) = image {
            writeln!(out, "image: {image}  ({})", poly_codes(&image)).unwrap();
        }
    }
    Ok(Outcome::new(out, true))
}

fn render_report(out: &mut String, r: &TheoremReport) {
    writeln!(
        out,
        "{} {}: {}",
        if r.pass() { "PASS" } else { "FAIL" },
        r.label(),
        r.cite
    )
    .unwrap();
    for c in &r.checks {
        if c.pass() {
            writeln!(out, "  ok    {}: {}", c.name, c.computed).unwrap();
        } else {
            writeln!(
                out,
                "  FAIL  {}: expected {}, computed {}",
                c.name, c.expected, c.computed
            )
            .unwrap();
        }
    }
    for (k, v) in &r.witnesses {
        writeln!(out, "  note  {k}: {v}").unwrap();
    }
}

fn verify(claim: &str, as_json: bool, golden: Option<&Path>) -> CliResult<Outcome> {
    let reports = run_claim(claim).map_err(|e| CliError::Usage(e.to_string()))?;
    let ok = reports.iter().all(TheoremReport::pass);
    let written = match golden {
        Some(dir) => write_golden(dir, &reports)?,
        None => Vec::new(),
    };
    if as_json {
        let doc = json!({
            "pass": ok,
            "reports": reports.iter().map(json::report).collect::<Vec<_>>(),
        });
        return Ok(Outcome::json(&doc, ok));
    }
    let mut out = String::new();
    for r in &reports {
        render_report(&mut out, r);
    }
    let passed = reports.iter().filter(|r| r.pass()).count();
    writeln!(out, "{passed}/{} reports pass", reports.len()).unwrap();
    for path in written {
        writeln!(out, "wrote {}", path.display()).unwrap();
    }
    Ok(Outcome::new(out, ok))
}

/// Convenience for tests: parse arguments as the binary would.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => Outcome {
            text: e.to_string(),
            code: e.exit_code(),
        },
    }
}
