//! Text and JSON input formats.
//!
//! Product syntax: one monomial per line such as `x1^2*x3`, `#` starts a
//! comment, and an optional `vars:` header gives either the variable count
//! (`vars: 5`) or explicit names (`vars: a b c`). Without a header, names of
//! the form `x<k>` give the ring `x1..xm` with `m` the largest index seen, and
//! any other names are taken in order of first appearance. A line holding only
//! `---` separates sequences in a batch.
//!
//! JSON: `{"vars": m, "monomials": [[e_1, ..., e_m], ...]}` with an optional
//! `"names"` list, or an array of such objects.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableSet, MAX_INPUT_EXPONENT};
use crate::sequence::MonomialSequence;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses exactly one sequence in either format.
pub fn parse_sequence(text: &str) -> Result<MonomialSequence> {
    let mut batch = parse_batch(text)?;
    match batch.len() {
        1 => Ok(batch.pop().expect("one element")),
        k => Err(Error::InvalidInput(format!("expected one sequence, found {k}"))),
    }
}

/// Parses one or more sequences; JSON when the first significant character is
/// `{` or `[`.
pub fn parse_batch(text: &str) -> Result<Vec<MonomialSequence>> {
    match text.trim_start().chars().next() {
        Some('{') | Some('[') => parse_json(text),
        _ => parse_product_batch(text),
    }
}

#[derive(Clone, Debug)]
struct Factor {
    name: String,
    exponent: u32,
    column: usize,
}

#[derive(Clone, Debug)]
struct Line {
    number: usize,
    factors: Vec<Factor>,
}

enum Header {
    Count(usize),
    Names(Vec<String>),
}

struct Block {
    header: Option<(usize, Header)>,
    lines: Vec<Line>,
}

fn parse_product_batch(text: &str) -> Result<Vec<MonomialSequence>> {
    let mut blocks = vec![Block {
        header: None,
        lines: Vec::new(),
    }];
    for (idx, raw) in text.lines().enumerate() {
        let number = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "---" {
            blocks.push(Block {
                header: None,
                lines: Vec::new(),
            });
            continue;
        }
        let block = blocks.last_mut().expect("non-empty");
        if let Some(rest) = trimmed.strip_prefix("vars:") {
            if block.header.is_some() || !block.lines.is_empty() {
                return Err(parse_error(number, 1, "`vars:` header must come first"));
            }
            block.header = Some((number, parse_header(rest, number, raw)?));
            continue;
        }
        let start = content.len() - content.trim_start().len();
        block.lines.push(Line {
            number,
            factors: parse_monomial(trimmed, number, start + 1)?,
        });
    }
    let blocks: Vec<Block> = blocks
        .into_iter()
        .filter(|b| b.header.is_some() || !b.lines.is_empty())
        .collect();
    if blocks.is_empty() {
        return Err(Error::InvalidInput("no monomials in input".into()));
    }
    blocks.into_iter().map(build_block).collect()
}

fn parse_header(rest: &str, line: usize, raw: &str) -> Result<Header> {
    let column = raw.find("vars:").unwrap_or(0) + 6;
    let body = rest.trim();
    if body.is_empty() {
        return Err(parse_error(line, column, "empty `vars:` header"));
    }
    if body.chars().all(|c| c.is_ascii_digit()) {
        let m: usize = body
            .parse()
            .map_err(|_| parse_error(line, column, "variable count out of range"))?;
        if m == 0 {
            return Err(parse_error(line, column, "the ring needs at least one variable"));
        }
        return Ok(Header::Count(m));
    }
    let names: Vec<String> = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    for n in &names {
        if !is_identifier(n) {
            return Err(parse_error(line, column, format!("invalid variable name `{n}`")));
        }
    }
    Ok(Header::Names(names))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `x<k>` with `k >= 1`, returning `k`.
fn standard_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Parses `factor ('*' factor)*`, where a factor is `name` or `name^k`.
/// `column` is the 1-based column of the first character of `text`.
fn parse_monomial(text: &str, line: usize, column: usize) -> Result<Vec<Factor>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut factors = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    if text == "1" {
        return Err(parse_error(line, column, "unit monomial is not allowed"));
    }
    loop {
        skip_ws(&mut pos);
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        let name = &text[start..pos];
        if !is_identifier(name) {
            let found = text[start..].chars().next().map_or("end of line".to_string(), |c| format!("`{c}`"));
            return Err(parse_error(line, column + start, format!("expected a variable, found {found}")));
        }
        skip_ws(&mut pos);
        let mut exponent = 1u32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            skip_ws(&mut pos);
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &text[digits_start..pos];
            if digits.is_empty() {
                return Err(parse_error(line, column + digits_start, "expected an exponent after `^`"));
            }
            exponent = match digits.parse::<u64>() {
                Ok(e) if e <= MAX_INPUT_EXPONENT as u64 => e as u32,
                _ => {
                    return Err(parse_error(
                        line,
                        column + digits_start,
                        format!("exponent {digits} exceeds {MAX_INPUT_EXPONENT}"),
                    ))
                }
            };
            skip_ws(&mut pos);
        }
        factors.push(Factor {
            name: name.to_string(),
            exponent,
            column: column + start,
        });
        if pos == bytes.len() {
            return Ok(factors);
        }
        if bytes[pos] != b'*' {
            let c = text[pos..].chars().next().expect("not at end");
            return Err(parse_error(line, column + pos, format!("expected `*`, found `{c}`")));
        }
        pos += 1;
    }
}

fn build_block(block: Block) -> Result<MonomialSequence> {
    let (vars, header_line) = match &block.header {
        Some((line, Header::Count(m))) => (VariableSet::standard(*m), Some(*line)),
        Some((line, Header::Names(names))) => (
            VariableSet::with_names(names.clone())
                .map_err(|e| parse_error(*line, 1, e.to_string()))?,
            Some(*line),
        ),
        None => (infer_variables(&block.lines)?, None),
    };
    if block.lines.is_empty() {
        return Err(parse_error(header_line.unwrap_or(1), 1, "header without monomials"));
    }
    let mut items = Vec::with_capacity(block.lines.len());
    for line in &block.lines {
        let mut exps = vec![0u32; vars.len()];
        for f in &line.factors {
            let idx = vars.index_of(&f.name).ok_or_else(|| {
                parse_error(
                    line.number,
                    f.column,
                    format!("variable `{}` is outside the declared ring", f.name),
                )
            })?;
            exps[idx] = exps[idx]
                .checked_add(f.exponent)
                .filter(|&e| e <= MAX_INPUT_EXPONENT)
                .ok_or_else(|| {
                    parse_error(
                        line.number,
                        f.column,
                        format!("exponent of `{}` exceeds {MAX_INPUT_EXPONENT}", f.name),
                    )
                })?;
        }
        let mono = Monomial::new(exps);
        if mono.is_one() {
            let column = line.factors.first().map_or(1, |f| f.column);
            return Err(parse_error(line.number, column, "unit monomial is not allowed"));
        }
        items.push(mono);
    }
    MonomialSequence::new(vars, items)
}

fn infer_variables(lines: &[Line]) -> Result<VariableSet> {
    let factors = lines.iter().flat_map(|l| l.factors.iter());
    if factors.clone().all(|f| standard_index(&f.name).is_some()) {
        let m = factors
            .filter_map(|f| standard_index(&f.name))
            .max()
            .unwrap_or(0);
        if m == 0 {
            return Err(Error::InvalidInput("no variables in input".into()));
        }
        return Ok(VariableSet::standard(m));
    }
    let mut names: Vec<String> = Vec::new();
    for f in factors {
        if !names.contains(&f.name) {
            names.push(f.name.clone());
        }
    }
    Ok(VariableSet::with_names(names)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonSequence {
    vars: usize,
    monomials: Vec<Vec<u64>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

fn json_error(e: serde_json::Error) -> Error {
    parse_error(e.line(), e.column(), e.to_string())
}

fn parse_json(text: &str) -> Result<Vec<MonomialSequence>> {
    let docs: Vec<JsonSequence> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(json_error)?
    } else {
        vec![serde_json::from_str(text).map_err(json_error)?]
    };
    if docs.is_empty() {
        return Err(Error::InvalidInput("empty JSON batch".into()));
    }
    docs.into_iter()
        .enumerate()
        .map(|(d, doc)| json_sequence(d, doc))
        .collect()
}

fn json_sequence(doc_index: usize, doc: JsonSequence) -> Result<MonomialSequence> {
    let context = |msg: String| Error::InvalidInput(format!("document {}: {msg}", doc_index + 1));
    if doc.vars == 0 {
        return Err(context("the ring needs at least one variable".into()));
    }
    let vars = match doc.names {
        Some(names) if names.len() != doc.vars => {
            return Err(context(format!(
                "{} names for {} variables",
                names.len(),
                doc.vars
            )))
        }
        Some(names) => VariableSet::with_names(names).map_err(|e| context(e.to_string()))?,
        None => VariableSet::standard(doc.vars),
    };
    let mut items = Vec::with_capacity(doc.monomials.len());
    for (k, row) in doc.monomials.iter().enumerate() {
        if row.len() != doc.vars {
            return Err(context(format!(
                "monomial {} has {} exponents, expected {}",
                k + 1,
                row.len(),
                doc.vars
            )));
        }
        if let Some(e) = row.iter().find(|&&e| e > MAX_INPUT_EXPONENT as u64) {
            return Err(context(format!(
                "monomial {}: exponent {e} exceeds {MAX_INPUT_EXPONENT}",
                k + 1
            )));
        }
        items.push(Monomial::new(row.iter().map(|&e| e as u32).collect()));
    }
    MonomialSequence::new(vars, items).map_err(|e| context(e.to_string()))
}

/// Product-syntax text that parses back to `seq`, with a `vars:` header.
pub fn format_sequence(seq: &MonomialSequence) -> String {
    let names = seq.vars().names();
    let standard = names
        .iter()
        .enumerate()
        .all(|(i, n)| standard_index(n) == Some(i + 1));
    let mut out = if standard {
        format!("vars: {}\n", seq.ambient())
    } else {
        format!("vars: {}\n", names.join(" "))
    };
    for k in 0..seq.len() {
        out.push_str(&seq.display_item(k));
        out.push('\n');
    }
    out
}

/// Sequences separated by `---` lines.
pub fn format_batch(seqs: &[MonomialSequence]) -> String {
    seqs.iter()
        .map(format_sequence)
        .collect::<Vec<_>>()
        .join("---\n")
}

/// JSON array in the structured input format.
pub fn format_json_batch(seqs: &[MonomialSequence]) -> String {
    let docs: Vec<serde_json::Value> = seqs
        .iter()
        .map(|s| {
            let rows: Vec<&[u32]> = s.items().iter().map(|f| f.exponents()).collect();
            serde_json::json!({
                "vars": s.ambient(),
                "names": s.vars().names(),
                "monomials": rows,
            })
        })
        .collect();
    serde_json::to_string(&docs).expect("plain data serializes")
}
