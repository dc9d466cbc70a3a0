use super::field::FiniteField;
use super::matrix::Matrix;
use super::AlgebraError;

/// Writes matrices as a `q0 a d` header followed by one blank-line separated block per matrix,
/// one row per line, entries as discrete logs (`-1` for zero).
pub fn dump_matrices(f: &FiniteField, mats: &[Matrix]) -> String {
    let d = mats.first().map_or(0, Matrix::dim);
    let mut out = format!("{} {} {}\n", f.characteristic(), f.degree(), d);
    for m in mats {
        out.push('\n');
        for row in m.dlog_rows(f) {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Inverse of [`dump_matrices`].
pub fn parse_matrices(text: &str) -> Result<(FiniteField, Vec<Matrix>), AlgebraError> {
    let bad = |m: &str| AlgebraError::ParseError(m.to_string());
    let mut lines = text.lines().map(str::trim);
    let header: Vec<u32> = lines
        .next()
        .ok_or_else(|| bad("empty input"))?
        .split_whitespace()
        .map(|s| s.parse().map_err(|_| bad("bad header")))
        .collect::<Result<_, _>>()?;
    let [p, a, d] = header[..] else {
        return Err(bad("header must be 'q0 a d'"));
    };
    let f = FiniteField::new(p, a)?;
    let d = d as usize;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut mats = Vec::new();
    for line in lines.filter(|l| !l.is_empty()) {
        let row = line
            .split_whitespace()
            .map(|s| {
                let k: i64 = s.parse().map_err(|_| bad("bad entry"))?;
                Ok(if k < 0 { 0 } else { f.exp(k) })
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        if row.len() != d {
            return Err(bad("row length differs from d"));
        }
        rows.push(row);
        if rows.len() == d {
            mats.push(Matrix::from_rows(&rows)?);
            rows.clear();
        }
    }
    if !rows.is_empty() {
        return Err(bad("truncated matrix"));
    }
    Ok((f, mats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl_generators;

    #[test]
    fn dump_round_trip() {
        let f = FiniteField::new(2, 2).unwrap();
        let g = sl_generators(2, &f).unwrap();
        let text = dump_matrices(&f, &g.matrices);
        assert!(text.starts_with("2 2 2\n"));
        let (f2, back) = parse_matrices(&text).unwrap();
        assert_eq!(f2.order(), 4);
        assert_eq!(back, g.matrices);
        assert!(parse_matrices("2 2 2\n0 -1\n").is_err());
    }
}
