//! Plain-text generator files: a `degree n` header, then one generator per line, either as
//! `n` space-separated 0-based images or in cycle notation such as `(0,1,2)(3,4)`.
//! Blank lines and lines starting with `#` are ignored.

use super::{GeneratedGroup, PermError, Permutation};

fn parse_cycles(line: &str, degree: usize, lineno: usize) -> Result<Permutation, PermError> {
    let err = |msg: &str| PermError::ParseError(format!("line {lineno}: {msg}"));
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let cycle = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| err("bad point")))
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles).map_err(|e| err(&e.to_string()))
}

fn parse_images(line: &str, degree: usize, lineno: usize) -> Result<Permutation, PermError> {
    let err = |msg: String| PermError::ParseError(format!("line {lineno}: {msg}"));
    let images = line
        .split_whitespace()
        .map(|s| s.parse::<usize>().map_err(|_| err(format!("bad image {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if images.len() != degree {
        return Err(err(format!("expected {degree} images, found {}", images.len())));
    }
    Permutation::from_images(images).map_err(|e| err(e.to_string()))
}

/// Parses a generator file into its degree and generator list.
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>), PermError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| PermError::ParseError("empty input".into()))?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|s| s.trim().parse::<usize>().ok())
        .ok_or_else(|| PermError::ParseError(format!("line {lineno}: expected 'degree n'")))?;
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    let mut gens = Vec::new();
    for (lineno, line) in lines {
        gens.push(if line.starts_with('(') {
            parse_cycles(line, degree, lineno)?
        } else {
            parse_images(line, degree, lineno)?
        });
    }
    if gens.is_empty() {
        return Err(PermError::ParseError("no generators".into()));
    }
    Ok((degree, gens))
}

pub fn parse_group(text: &str) -> Result<GeneratedGroup, PermError> {
    let (degree, gens) = parse_generators(text)?;
    GeneratedGroup::new(degree, gens)
}

/// Writes generators in image form.
pub fn format_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        out.push_str(&g.to_image_string());
        out.push('\n');
    }
    out
}
