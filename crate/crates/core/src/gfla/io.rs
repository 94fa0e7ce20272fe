//! The `GFMAT p k rows cols` text format.

use super::{FieldSpec, GFMatrix, GfError};

/// Serialize a matrix: header line, then one line per row.
pub fn write_matrix(m: &GFMatrix) -> String {
    let f = m.field();
    let mut s = format!("GFMAT {} {} {} {}\n", f.p(), f.k(), m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|&a| f.format_elem(a)).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn parse_usize(tok: &str) -> Result<usize, GfError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) || (tok.len() > 1 && tok.starts_with('0')) {
        return Err(GfError::Parse(format!("expected a count, found {tok:?}")));
    }
    tok.parse().map_err(|_| GfError::Parse(format!("count {tok:?} out of range")))
}

/// Parse one matrix block from the front of `lines`, consuming exactly
/// `rows + 1` lines.
pub fn parse_matrix_lines<'a, I>(lines: &mut I) -> Result<GFMatrix, GfError>
where
    I: Iterator<Item = &'a str>,
{
    let header = lines.next().ok_or_else(|| GfError::Parse("missing GFMAT header".into()))?;
    let toks: Vec<&str> = header.split(' ').collect();
    if toks.len() != 5 || toks[0] != "GFMAT" {
        return Err(GfError::Parse(format!("bad header {header:?}")));
    }
    let p = parse_usize(toks[1])? as u32;
    let k = parse_usize(toks[2])? as u32;
    let rows = parse_usize(toks[3])?;
    let cols = parse_usize(toks[4])?;
    let field = FieldSpec::canonical(p, k)?;
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let line = lines.next().ok_or_else(|| GfError::Parse(format!("missing row {}", r + 1)))?;
        let entries: Vec<&str> = if cols == 0 { Vec::new() } else { line.split(' ').collect() };
        if cols == 0 && !line.is_empty() {
            return Err(GfError::Parse(format!("row {} should be empty", r + 1)));
        }
        if entries.len() != cols {
            return Err(GfError::Parse(format!("row {} has {} entries, expected {cols}", r + 1, entries.len())));
        }
        for e in entries {
            data.push(field.parse_elem(e)?);
        }
    }
    GFMatrix::from_vec(&field, rows, cols, data)
}

/// Parse a complete file holding exactly one matrix.
pub fn parse_matrix(text: &str) -> Result<GFMatrix, GfError> {
    let body = text.strip_suffix('\n').ok_or_else(|| GfError::Parse("missing final newline".into()))?;
    let mut lines = body.split('\n');
    let m = parse_matrix_lines(&mut lines)?;
    if lines.next().is_some() {
        return Err(GfError::Parse("trailing content after matrix".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_exact_format() {
        let f = FieldSpec::prime(7).unwrap();
        let m = GFMatrix::from_int_rows(&f, &[vec![1, 6], vec![0, 3]]);
        assert_eq!(write_matrix(&m), "GFMAT 7 1 2 2\n1 6\n0 3\n");
        let g = FieldSpec::canonical(3, 2).unwrap();
        let e = GFMatrix::from_vec(&g, 1, 2, vec![5, 0]).unwrap();
        assert_eq!(write_matrix(&e), "GFMAT 3 2 1 2\n2.1 0.0\n");
        assert_eq!(parse_matrix(&write_matrix(&e)).unwrap(), e);
    }

    #[test]
    fn rejects_deviations() {
        for bad in [
            "GFMAT 7 1 1 2\n1  6\n",
            "GFMAT 7 1 1 2\n1 7\n",
            "GFMAT 7 1 1 2\n1 6",
            "GFMAT 7 1 1 2\n1 6\n\n",
            "GFMAT 7 1 2 2\n1 6\n",
            "gfmat 7 1 1 2\n1 6\n",
            "GFMAT 7 1 1 2\n1 6 \n",
            "GFMAT 9 1 1 1\n1\n",
            "GFMAT 7 1 1 1\n01\n",
        ] {
            assert!(parse_matrix(bad).is_err(), "accepted {bad:?}");
        }
        assert!(parse_matrix("GFMAT 2 1 0 3\n").is_ok());
    }
}
