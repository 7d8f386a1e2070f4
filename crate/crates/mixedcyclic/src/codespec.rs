//! Line-oriented text formats: code-spec files and generator-matrix text.
//!
//! A code-spec file describes a code in standard form, one `key = value` pair
//! per line. `#` starts a comment, blank lines are skipped, and keys may
//! appear in any order:
//!
//! ```text
//! # the |C| = 32 example
//! p = 2
//! r = 1
//! s = 2
//! alpha = 3
//! beta = 3
//! gamma = 3
//! A0 = 1 1 1
//! B0 = 1 1
//! G0 = 3 1 1 1
//! G1 = 1
//! l = 0
//! l1 = 1
//! l2 = 0
//! ```
//!
//! `p, r, s, alpha, beta, gamma` are required integers. `A0..A{r-1}` and
//! `B0..B{r-1}` are the first- and second-block divisor chains over Z_{p^r},
//! `G0..G{s-1}` the third-block chain over Z_{p^s}, all in the ascending
//! space-separated coefficient format of [`parse_poly`]. A chain that is
//! omitted entirely defaults to the full modulus x^n - 1 in every entry (the
//! zero contribution on that block); a chain given only up to some index
//! repeats its last entry, which adds nothing to the span and keeps the
//! divisor condition intact. `l`, `l1`, `l2` default to `0`. Whether the
//! assembled data actually satisfies the standard-form conditions is decided
//! by [`TripleCode::build`], not by the parser.
//!
//! The matrix format is a header line `alpha beta gamma p r s` followed by
//! one row per line, entries space-separated.

use std::collections::HashMap;

use crate::additivecode::TripleCode;
use crate::chainlinalg::GenMatrix;
use crate::polyring::{parse_poly, Poly};
use crate::ringcore::{MixedParams, RingSpec};
use crate::{Error, Result};

/// Parsed (but not yet validated) standard-form data for a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub params: MixedParams,
    pub a_chain: Vec<Poly>,
    pub b_chain: Vec<Poly>,
    pub g_chain: Vec<Poly>,
    pub l: Poly,
    pub l1: Poly,
    pub l2: Poly,
}

impl CodeSpec {
    /// Parses a code-spec file. Errors name the offending line (line 0 for
    /// file-level problems such as a missing required key).
    pub fn parse(text: &str) -> Result<CodeSpec> {
        let mut pairs: HashMap<String, (usize, String)> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected `key = value`, got `{line}`"),
            })?;
            let key = key.trim().to_string();
            let value = value.trim().to_string();
            if key.is_empty() {
                return Err(Error::Parse { line: line_no, msg: "empty key".into() });
            }
            if value.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("empty value for key `{key}`"),
                });
            }
            if let Some((first, _)) = pairs.get(&key) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("duplicate key `{key}` (first given on line {first})"),
                });
            }
            pairs.insert(key, (line_no, value));
        }

        let p = take_int::<u64>(&mut pairs, "p")?;
        let r = take_int::<u32>(&mut pairs, "r")?;
        let s = take_int::<u32>(&mut pairs, "s")?;
        let alpha = take_int::<usize>(&mut pairs, "alpha")?;
        let beta = take_int::<usize>(&mut pairs, "beta")?;
        let gamma = take_int::<usize>(&mut pairs, "gamma")?;
        let params = MixedParams::new(p, r, s, alpha, beta, gamma)?;
        let rr = params.ring_r();
        let rs = params.ring_s();

        let a_chain = take_chain(&mut pairs, 'A', r as usize, rr, alpha)?;
        let b_chain = take_chain(&mut pairs, 'B', r as usize, rr, beta)?;
        let g_chain = take_chain(&mut pairs, 'G', s as usize, rs, gamma)?;
        let l = take_poly_or_zero(&mut pairs, "l", rr)?;
        let l1 = take_poly_or_zero(&mut pairs, "l1", rr)?;
        let l2 = take_poly_or_zero(&mut pairs, "l2", rr)?;

        if let Some((key, (line, _))) = pairs.iter().min_by_key(|(_, (line, _))| *line) {
            return Err(Error::Parse { line: *line, msg: format!("unknown key `{key}`") });
        }

        Ok(CodeSpec { params, a_chain, b_chain, g_chain, l, l1, l2 })
    }

    /// Snapshot of the stored standard form of a built code.
    pub fn from_code(code: &TripleCode) -> CodeSpec {
        CodeSpec {
            params: *code.params(),
            a_chain: code.a_chain().chain().to_vec(),
            b_chain: code.b_chain().chain().to_vec(),
            g_chain: code.g_chain().chain().to_vec(),
            l: code.l().clone(),
            l1: code.l1().clone(),
            l2: code.l2().clone(),
        }
    }

    /// Runs full standard-form validation on the parsed data.
    pub fn build(&self) -> Result<TripleCode> {
        TripleCode::build(
            &self.params,
            self.a_chain.clone(),
            self.b_chain.clone(),
            self.g_chain.clone(),
            self.l.clone(),
            self.l1.clone(),
            self.l2.clone(),
        )
    }

    /// Serializes back to file text with every key written explicitly, in a
    /// fixed order, so output is byte-stable and `parse` round-trips.
    pub fn render(&self) -> String {
        let p = &self.params;
        let mut out = String::new();
        for (key, value) in [
            ("p", p.p().to_string()),
            ("r", p.r().to_string()),
            ("s", p.s().to_string()),
            ("alpha", p.alpha().to_string()),
            ("beta", p.beta().to_string()),
            ("gamma", p.gamma().to_string()),
        ] {
            out.push_str(&format!("{key} = {value}\n"));
        }
        for (prefix, chain) in [('A', &self.a_chain), ('B', &self.b_chain), ('G', &self.g_chain)] {
            for (i, f) in chain.iter().enumerate() {
                out.push_str(&format!("{prefix}{i} = {f}\n"));
            }
        }
        for (key, poly) in [("l", &self.l), ("l1", &self.l1), ("l2", &self.l2)] {
            out.push_str(&format!("{key} = {poly}\n"));
        }
        out
    }
}

fn take_int<T: std::str::FromStr>(
    pairs: &mut HashMap<String, (usize, String)>,
    key: &str,
) -> Result<T> {
    let (line, value) = pairs
        .remove(key)
        .ok_or_else(|| Error::Parse { line: 0, msg: format!("missing required key `{key}`") })?;
    value.parse::<T>().map_err(|_| Error::Parse {
        line,
        msg: format!("key `{key}`: `{value}` is not a valid non-negative integer"),
    })
}

fn take_poly(
    pairs: &mut HashMap<String, (usize, String)>,
    key: &str,
    spec: RingSpec,
) -> Result<Option<Poly>> {
    let Some((line, value)) = pairs.remove(key) else { return Ok(None) };
    let poly = parse_poly(spec, &value).map_err(|e| {
        let msg = match e {
            Error::Parse { msg, .. } => msg,
            other => other.to_string(),
        };
        Error::Parse { line, msg: format!("key `{key}`: {msg}") }
    })?;
    Ok(Some(poly))
}

fn take_poly_or_zero(
    pairs: &mut HashMap<String, (usize, String)>,
    key: &str,
    spec: RingSpec,
) -> Result<Poly> {
    Ok(take_poly(pairs, key, spec)?.unwrap_or_else(|| Poly::zero(spec)))
}

/// Reads `X0..X{count-1}`. The given entries must form a prefix; the tail is
/// filled by repetition, and a fully absent chain becomes x^n - 1 throughout.
fn take_chain(
    pairs: &mut HashMap<String, (usize, String)>,
    prefix: char,
    count: usize,
    spec: RingSpec,
    n: usize,
) -> Result<Vec<Poly>> {
    let mut given: Vec<Option<(usize, Poly)>> = Vec::with_capacity(count);
    for i in 0..count {
        let key = format!("{prefix}{i}");
        given.push(match pairs.remove(&key) {
            Some((line, value)) => {
                let poly = parse_poly(spec, &value).map_err(|e| {
                    let msg = match e {
                        Error::Parse { msg, .. } => msg,
                        other => other.to_string(),
                    };
                    Error::Parse { line, msg: format!("key `{key}`: {msg}") }
                })?;
                Some((line, poly))
            }
            None => None,
        });
    }
    if given.iter().all(Option::is_none) {
        return Ok(vec![Poly::xn_minus_1(spec, n); count]);
    }
    if let Some(hole) = given.iter().position(Option::is_none) {
        if let Some(next) = given[hole..].iter().position(Option::is_some) {
            let (line, _) = given[hole + next].as_ref().unwrap();
            return Err(Error::Parse {
                line: *line,
                msg: format!(
                    "chain entry `{prefix}{}` given but `{prefix}{hole}` is missing",
                    hole + next
                ),
            });
        }
    }
    let mut entries: Vec<Poly> = given.into_iter().flatten().map(|(_, p)| p).collect();
    let tail = entries.last().expect("at least one entry was given").clone();
    entries.resize(count, tail);
    Ok(entries)
}

/// Renders a generator matrix as header `alpha beta gamma p r s` plus one
/// space-separated row per line.
pub fn render_matrix(m: &GenMatrix) -> String {
    let p = m.params();
    let mut out = format!(
        "{} {} {} {} {} {}\n",
        p.alpha(),
        p.beta(),
        p.gamma(),
        p.p(),
        p.r(),
        p.s()
    );
    for row in m.rows() {
        let parts: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the matrix text format. Comments and blank lines are allowed; the
/// first data line must be the six-integer header.
pub fn parse_matrix(text: &str) -> Result<GenMatrix> {
    let mut params: Option<MixedParams> = None;
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match params {
            None => {
                if fields.len() != 6 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "matrix header must be six integers: alpha beta gamma p r s".into(),
                    });
                }
                let ints = parse_fields::<u64>(&fields, line_no)?;
                params = Some(MixedParams::new(
                    ints[3],
                    ints[4] as u32,
                    ints[5] as u32,
                    ints[0] as usize,
                    ints[1] as usize,
                    ints[2] as usize,
                )?);
            }
            Some(_) => rows.push(parse_fields::<u64>(&fields, line_no)?),
        }
    }
    let params =
        params.ok_or(Error::Parse { line: 0, msg: "matrix text has no header line".into() })?;
    GenMatrix::new(&params, rows)
}

fn parse_fields<T: std::str::FromStr>(fields: &[&str], line_no: usize) -> Result<Vec<T>> {
    fields
        .iter()
        .map(|f| {
            f.parse::<T>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("`{f}` is not a valid non-negative integer"),
            })
        })
        .collect()
}

/// Human-readable rendering with descending powers: "x^2+x+1", "2x+3", "0".
/// Inverse-free display only; [`parse_poly`] does not read this format.
pub fn pretty_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainlinalg::span_eq;

    fn r4() -> RingSpec {
        RingSpec::new(2, 2).unwrap()
    }

    const EXAMPLE: &str = "\
# the |C| = 32 example
p = 2
r = 1
s = 2
alpha = 3
beta = 3
gamma = 3
A0 = 1 1 1
B0 = 1 0 0 1
G0 = 1 1 1
G1 = 1
l = 0
l1 = 1
l2 = 1 1
";

    #[test]
    fn parses_the_worked_example_file() {
        let spec = CodeSpec::parse(EXAMPLE).expect("example file must parse");
        let code = spec.build().expect("example data is a valid standard form");
        assert_eq!(code.code_size(), 32, "worked example has 32 words");
        assert_eq!(
            spec.l1.coeffs(),
            &[1],
            "l1 line must survive into the parsed data"
        );
    }

    #[test]
    fn keys_are_order_free_and_comments_ignored() {
        let shuffled = "\
G1 = 1\u{20}
l1 = 1   # trailing comment
gamma = 3
A0 = 1 1 1
beta = 3
p = 2
G0 = 1 1 1
s = 2
r = 1
B0 = 1 0 0 1
alpha = 3
l2 = 1 1
";
        let a = CodeSpec::parse(EXAMPLE).unwrap();
        let b = CodeSpec::parse(shuffled).unwrap();
        assert_eq!(a, b, "key order and comments must not affect the parse");
    }

    #[test]
    fn defaults_fill_missing_chains_and_mixing_rows() {
        let text = "\
p = 3
r = 2
s = 2
alpha = 2
beta = 2
gamma = 2
G0 = 8 1
";
        let spec = CodeSpec::parse(text).unwrap();
        let r9 = spec.params.ring_s();
        assert_eq!(
            spec.a_chain,
            vec![Poly::xn_minus_1(r9, 2); 2],
            "omitted A chain defaults to the full modulus in both entries"
        );
        assert_eq!(
            spec.g_chain,
            vec![parse_poly(r9, "8 1").unwrap(); 2],
            "partial G chain repeats its last given entry"
        );
        assert!(spec.l.is_zero() && spec.l1.is_zero() && spec.l2.is_zero());
        let code = spec.build().unwrap();
        assert_eq!(code.code_size(), 9, "the ideal <x - 1> over Z_9, length 2, has 9 words");
    }

    #[test]
    fn round_trips_through_render() {
        let spec = CodeSpec::parse(EXAMPLE).unwrap();
        let code = spec.build().unwrap();
        let text = CodeSpec::from_code(&code).render();
        let reparsed = CodeSpec::parse(&text).unwrap();
        let rebuilt = reparsed.build().unwrap();
        assert!(
            span_eq(&code.gen_matrix(), &rebuilt.gen_matrix()),
            "render/parse round trip must preserve the code"
        );
        assert_eq!(text, CodeSpec::from_code(&rebuilt).render(), "render is byte-stable");
    }

    #[test]
    fn errors_name_the_offending_line() {
        let cases: &[(&str, usize, &str)] = &[
            ("p = 2\nbogus line\n", 2, "expected `key = value`"),
            ("p = 2\nq = 3\np = 5\n", 3, "duplicate key `p`"),
            ("p = two\n", 1, "not a valid non-negative integer"),
            (
                "p = 2\nr = 1\ns = 1\nalpha = 3\nbeta = 1\ngamma = 1\nA0 = 1 x\n",
                7,
                "key `A0`",
            ),
            (
                "p = 2\nr = 1\ns = 1\nalpha = 3\nbeta = 1\ngamma = 1\nwat = 1\n",
                7,
                "unknown key `wat`",
            ),
        ];
        for (text, want_line, want_fragment) in cases {
            match CodeSpec::parse(text) {
                Err(Error::Parse { line, msg }) => {
                    assert_eq!(line, *want_line, "wrong line for input {text:?}: {msg}");
                    assert!(
                        msg.contains(want_fragment),
                        "message {msg:?} should mention {want_fragment:?}"
                    );
                }
                other => panic!("expected a parse error for {text:?}, got {other:?}"),
            }
        }
        // Missing required key is a file-level (line 0) error.
        match CodeSpec::parse("p = 2\nr = 1\n") {
            Err(Error::Parse { line: 0, msg }) => {
                assert!(msg.contains("missing required key `s`"), "got {msg:?}");
            }
            other => panic!("expected missing-key error, got {other:?}"),
        }
    }

    #[test]
    fn chain_gap_is_rejected() {
        let text = "\
p = 2
r = 1
s = 2
alpha = 3
beta = 3
gamma = 3
G1 = 1
";
        match CodeSpec::parse(text) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 7, "gap error should point at the later entry's line");
                assert!(
                    msg.contains("`G1` given but `G0` is missing"),
                    "gap diagnosis should name both entries, got {msg:?}"
                );
            }
            other => panic!("expected a gap error, got {other:?}"),
        }
        // Interior holes are also rejected, not silently filled.
        let hole = "\
p = 2
r = 1
s = 3
alpha = 1
beta = 1
gamma = 7
G0 = 1 1
G2 = 1 1
";
        match CodeSpec::parse(hole) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 8);
                assert!(msg.contains("`G2` given but `G1` is missing"), "got {msg:?}");
            }
            other => panic!("expected a hole error, got {other:?}"),
        }
    }

    #[test]
    fn invalid_chain_data_propagates_build_errors() {
        // x+1 does not divide x^2+x+1, so the A chain is not a divisor tower.
        let text = "\
p = 2
r = 2
s = 2
alpha = 3
beta = 1
gamma = 1
A0 = 1 1 1
A1 = 1 1
";
        let spec = CodeSpec::parse(text).unwrap();
        assert!(
            matches!(spec.build(), Err(Error::ChainViolation(_))),
            "non-divisor chain must be rejected by build, not by the parser"
        );
    }

    #[test]
    fn matrix_round_trip_preserves_span_and_bytes() {
        let spec = CodeSpec::parse(EXAMPLE).unwrap();
        let m = spec.build().unwrap().gen_matrix();
        let text = render_matrix(&m);
        assert!(text.starts_with("3 3 3 2 1 2\n"), "header is alpha beta gamma p r s");
        let back = parse_matrix(&text).unwrap();
        assert_eq!(m.rows(), back.rows(), "entries survive the round trip");
        assert_eq!(render_matrix(&back), text, "second render is byte-identical");
        assert!(span_eq(&m, &back), "span is preserved");
    }

    #[test]
    fn matrix_errors_name_lines() {
        match parse_matrix("1 2 3\n") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 1);
                assert!(msg.contains("six integers"), "got {msg:?}");
            }
            other => panic!("expected header error, got {other:?}"),
        }
        match parse_matrix("3 3 3 2 1 2\n0 1 zero\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected row error, got {other:?}"),
        }
        assert!(
            matches!(parse_matrix("# only comments\n"), Err(Error::Parse { line: 0, .. })),
            "headerless text is a file-level error"
        );
    }

    #[test]
    fn pretty_poly_renders_descending_terms() {
        assert_eq!(pretty_poly(&Poly::zero(r4())), "0");
        assert_eq!(pretty_poly(&parse_poly(r4(), "3 1").unwrap()), "x+3");
        assert_eq!(pretty_poly(&parse_poly(r4(), "1 1 1").unwrap()), "x^2+x+1");
        assert_eq!(pretty_poly(&parse_poly(r4(), "0 2 0 0 3").unwrap()), "3x^4+2x");
        assert_eq!(pretty_poly(&Poly::constant(r4(), 2)), "2");
    }
}
