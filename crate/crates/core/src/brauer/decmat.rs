//! Parametrized decomposition matrices and relation matrices, with their
//! text formats.

use super::BrauerError;
use crate::exact::{param_solve, Assignment, ParamInt, ParamSystem};

/// Row-labelled matrix of parametrized integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrix {
    pub rows: Vec<String>,
    pub ncols: usize,
    pub entries: Vec<Vec<ParamInt>>,
}

impl ParamMatrix {
    pub fn new(rows: Vec<String>, ncols: usize, entries: Vec<Vec<ParamInt>>) -> Result<Self, BrauerError> {
        if rows.len() != entries.len() || entries.iter().any(|r| r.len() != ncols) {
            return Err(BrauerError::Shape(format!("{} names for {} rows of width {ncols}", rows.len(), entries.len())));
        }
        Ok(ParamMatrix { rows, ncols, entries })
    }

    pub fn from_ints(rows: Vec<String>, m: &[Vec<i64>]) -> Result<Self, BrauerError> {
        let ncols = m.first().map_or(0, Vec::len);
        Self::new(rows, ncols, m.iter().map(|r| r.iter().map(|&v| ParamInt::constant(v)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, j: usize) -> Vec<ParamInt> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> ParamMatrix {
        ParamMatrix {
            rows: self.rows.clone(),
            ncols: cols.len(),
            entries: self.entries.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect(),
        }
    }

    /// Integer matrix at a full assignment.
    pub fn specialize(&self, a: &Assignment) -> Result<Vec<Vec<i64>>, BrauerError> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.eval_unchecked(a).map_err(BrauerError::from)).collect())
            .collect()
    }

    /// Integer matrix when no entry mentions a parameter.
    pub fn to_ints(&self) -> Option<Vec<Vec<i64>>> {
        self.entries.iter().map(|r| r.iter().map(ParamInt::as_constant).collect()).collect()
    }

    /// Row of the first nonzero entry of a column.
    pub fn lead_row(&self, j: usize) -> Option<usize> {
        self.entries.iter().position(|r| !r[j].is_zero())
    }
}

/// A decomposition matrix (or a set of projective columns) of a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecMat {
    pub block: String,
    pub sys: ParamSystem,
    pub matrix: ParamMatrix,
}

impl DecMat {
    /// Admissible assignments of the parameter system.
    pub fn assignments(&self) -> Vec<Assignment> {
        param_solve(&self.sys)
    }

    /// Entrywise nonnegativity at every admissible assignment; returns the
    /// first offending `(assignment, row, column)`.
    pub fn nonnegativity_violation(&self) -> Result<Option<(Assignment, usize, usize)>, BrauerError> {
        for a in self.assignments() {
            let m = self.matrix.specialize(&a)?;
            for (i, r) in m.iter().enumerate() {
                if let Some(j) = r.iter().position(|&v| v < 0) {
                    return Ok(Some((a, i, j)));
                }
            }
        }
        Ok(None)
    }
}

fn perr(line: usize, msg: impl Into<String>) -> BrauerError {
    BrauerError::Parse { line, message: msg.into() }
}

pub fn write_decmat(d: &DecMat) -> String {
    let mut s = format!("DECMAT {} params{{{}}} constraints{{{}}}\n", d.block, d.sys.format_params(), d.sys.format_constraints());
    for (name, row) in d.matrix.rows.iter().zip(&d.matrix.entries) {
        let v: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        s.push_str(&format!("{name}: {}\n", v.join(" ")));
    }
    s
}

fn braced<'a>(tok: &'a str, key: &str, line: usize) -> Result<&'a str, BrauerError> {
    tok.strip_prefix(key)
        .and_then(|t| t.strip_prefix('{'))
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| perr(line, format!("expected `{key}{{...}}`")))
}

fn split_row(line: &str, ln: usize) -> Result<(&str, Vec<&str>), BrauerError> {
    let (name, body) = line.split_once(": ").ok_or_else(|| perr(ln, "expected `name: e1 e2 ...`"))?;
    if name.is_empty() || name.contains(char::is_whitespace) {
        return Err(perr(ln, format!("bad row name {name:?}")));
    }
    Ok((name, body.split(' ').collect()))
}

pub fn parse_decmat(text: &str) -> Result<DecMat, BrauerError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let toks: Vec<&str> = header.split(' ').collect();
    if toks.len() != 4 || toks[0] != "DECMAT" || toks[1].is_empty() {
        return Err(perr(1, "expected `DECMAT block params{...} constraints{...}`"));
    }
    let sys = ParamSystem::parse(braced(toks[2], "params", 1)?, braced(toks[3], "constraints", 1)?).map_err(|e| perr(1, e.to_string()))?;
    let mut rows = Vec::new();
    let mut entries: Vec<Vec<ParamInt>> = Vec::new();
    for (ln, line) in lines {
        let (name, cells) = split_row(line, ln)?;
        let row = cells
            .iter()
            .map(|c| {
                let e: ParamInt = c.parse().map_err(|e: crate::exact::ExactError| perr(ln, e.to_string()))?;
                if let Some(v) = e.params().into_iter().find(|v| sys.index_of(v).is_none()) {
                    return Err(perr(ln, format!("undeclared parameter `{v}`")));
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = entries.first() {
            if first.len() != row.len() {
                return Err(perr(ln, format!("{} entries, expected {}", row.len(), first.len())));
            }
        }
        rows.push(name.to_string());
        entries.push(row);
    }
    let ncols = entries.first().map_or(0, Vec::len);
    Ok(DecMat { block: toks[1].to_string(), sys, matrix: ParamMatrix { rows, ncols, entries } })
}

/// `chi_nb = sum_b y[b][nb] * b` on `p`-regular classes, with rows indexed by
/// the basic set and columns by the remaining characters of the block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationsMatrix {
    pub block: String,
    pub basic: Vec<String>,
    pub nonbasic: Vec<String>,
    pub y: Vec<Vec<i64>>,
}

pub fn write_relmat(r: &RelationsMatrix) -> String {
    let mut s = format!("RELMAT {}\nCOLS", r.block);
    for n in &r.nonbasic {
        s.push(' ');
        s.push_str(n);
    }
    s.push('\n');
    for (name, row) in r.basic.iter().zip(&r.y) {
        let v: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        if v.is_empty() {
            s.push_str(&format!("{name}:\n"));
        } else {
            s.push_str(&format!("{name}: {}\n", v.join(" ")));
        }
    }
    s
}

pub fn parse_relmat(text: &str) -> Result<RelationsMatrix, BrauerError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let block = header.strip_prefix("RELMAT ").filter(|b| !b.is_empty() && !b.contains(' ')).ok_or_else(|| perr(1, "expected `RELMAT block`"))?;
    let (_, cols) = lines.next().ok_or_else(|| perr(2, "missing COLS line"))?;
    let nonbasic: Vec<String> = match cols.strip_prefix("COLS") {
        Some("") => Vec::new(),
        Some(rest) => rest.strip_prefix(' ').ok_or_else(|| perr(2, "expected `COLS n1 n2 ...`"))?.split(' ').map(str::to_string).collect(),
        None => return Err(perr(2, "expected `COLS n1 n2 ...`")),
    };
    let mut basic = Vec::new();
    let mut y = Vec::new();
    for (ln, line) in lines {
        let (name, cells) = if nonbasic.is_empty() {
            (line.strip_suffix(':').ok_or_else(|| perr(ln, "expected `name:`"))?, Vec::new())
        } else {
            split_row(line, ln)?
        };
        let row = cells
            .iter()
            .map(|c| c.parse::<i64>().map_err(|_| perr(ln, format!("bad integer {c:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != nonbasic.len() {
            return Err(perr(ln, format!("{} entries, expected {}", row.len(), nonbasic.len())));
        }
        basic.push(name.to_string());
        y.push(row);
    }
    Ok(RelationsMatrix { block: block.to_string(), basic, nonbasic, y })
}

/// Full matrix: basic-set rows of `d` followed by `Y^t X` for the
/// non-basic characters.
pub fn expand_nonbasic(d: &DecMat, y: &RelationsMatrix) -> Result<DecMat, BrauerError> {
    if d.matrix.rows.len() != y.basic.len() || y.y.iter().any(|r| r.len() != y.nonbasic.len()) {
        return Err(BrauerError::Shape(format!("{} basic rows against a {}-row relations matrix", d.matrix.nrows(), y.basic.len())));
    }
    let mut rows = d.matrix.rows.clone();
    let mut entries = d.matrix.entries.clone();
    for (k, name) in y.nonbasic.iter().enumerate() {
        let mut row = vec![ParamInt::zero(); d.matrix.ncols];
        for (b, xrow) in d.matrix.entries.iter().enumerate() {
            let c = y.y[b][k];
            if c != 0 {
                for (acc, e) in row.iter_mut().zip(xrow) {
                    *acc = acc.add(&e.scale(c));
                }
            }
        }
        rows.push(name.clone());
        entries.push(row);
    }
    Ok(DecMat { block: d.block.clone(), sys: d.sys.clone(), matrix: ParamMatrix { rows, ncols: d.matrix.ncols, entries } })
}

/// Row permutation `chi^+ <-> chi^-` given by tensoring with the sign
/// character, read off the row names: the k-th `X^+` row pairs with the k-th
/// `X^-` row; `^0` rows are fixed.
pub fn epsilon_row_permutation(names: &[String]) -> Result<Vec<usize>, BrauerError> {
    let mut perm: Vec<usize> = (0..names.len()).collect();
    let mut plus: std::collections::BTreeMap<&str, Vec<usize>> = Default::default();
    let mut minus: std::collections::BTreeMap<&str, Vec<usize>> = Default::default();
    for (i, n) in names.iter().enumerate() {
        if let Some(b) = n.strip_suffix("^+") {
            plus.entry(b).or_default().push(i);
        } else if let Some(b) = n.strip_suffix("^-") {
            minus.entry(b).or_default().push(i);
        } else if !n.ends_with("^0") {
            return Err(BrauerError::Label(n.clone()));
        }
    }
    for (b, ps) in &plus {
        let ms = minus.get(b).map(Vec::as_slice).unwrap_or(&[]);
        if ms.len() != ps.len() {
            return Err(BrauerError::Label(format!("{b}^+ without matching {b}^-")));
        }
        for (&p, &m) in ps.iter().zip(ms) {
            perm[p] = m;
            perm[m] = p;
        }
    }
    if minus.keys().any(|b| !plus.contains_key(b)) {
        return Err(BrauerError::Label("unpaired ^- row".into()));
    }
    Ok(perm)
}

/// Column involution `pi` with `D[eps r][pi c] = D[r][c]` for all rows and
/// the given columns, if one exists; columns fixed by `pi` come from
/// `sigma`-moved heads.
pub fn epsilon_twist_columns(m: &ParamMatrix, cols: &[usize]) -> Result<Option<Vec<usize>>, BrauerError> {
    let eps = epsilon_row_permutation(&m.rows)?;
    let twisted = |c: usize| -> Vec<ParamInt> {
        let mut v = vec![ParamInt::zero(); m.nrows()];
        for r in 0..m.nrows() {
            v[eps[r]] = m.entries[r][c].clone();
        }
        v
    };
    let mut pi = vec![usize::MAX; m.ncols];
    for &c in cols {
        let t = twisted(c);
        let Some(&d) = cols.iter().find(|&&d| m.column(d) == t) else { return Ok(None) };
        pi[c] = d;
    }
    for &c in cols {
        if pi[pi[c]] != c {
            return Ok(None);
        }
    }
    Ok(Some(cols.iter().map(|&c| pi[c]).collect()))
}
