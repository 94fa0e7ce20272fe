//! Line-based text format for facts about the columns of a decomposition
//! matrix `C1, C2, ..` and of extra projectives `P1, P2, ..`.
//!
//! ```text
//! absent LABEL: ROW in EXPR
//! identity LABEL: EXPR = EXPR
//! projective LABEL: EXPR over C1..C24
//! traces LABEL mod P: EXPR:T EXPR:T ... | TxM TxM ...
//! ```
//! `EXPR` is a sum of terms `coef*C3`, `C3` or `(1-a)*P1`, separated by
//! ` + ` or ` - `; `ROW` is a row name, `name#2` for its second occurrence.

use super::{BrauerError, DecMat, Fact};
use crate::exact::{ParamInt, ParamSystem};

fn perr(line: usize, msg: impl Into<String>) -> BrauerError {
    BrauerError::Parse { line, message: msg.into() }
}

struct Ctx<'a> {
    d: &'a DecMat,
    proj: Option<&'a DecMat>,
    sys: ParamSystem,
}

impl Ctx<'_> {
    fn column(&self, r: &str, line: usize) -> Result<Vec<ParamInt>, BrauerError> {
        let (m, idx) = if let Some(i) = r.strip_prefix('C') {
            (self.d, i)
        } else if let Some(i) = r.strip_prefix('P') {
            (self.proj.ok_or_else(|| perr(line, "P columns need a projectives file"))?, i)
        } else {
            return Err(perr(line, format!("bad column reference {r:?}")));
        };
        let j: usize = idx.parse().map_err(|_| perr(line, format!("bad column reference {r:?}")))?;
        if j == 0 || j > m.matrix.ncols {
            return Err(perr(line, format!("{r} out of range")));
        }
        if m.matrix.rows != self.d.matrix.rows {
            return Err(perr(line, "projectives and matrix have different rows"));
        }
        Ok(m.matrix.column(j - 1))
    }

    fn terms(&self, s: &str, line: usize) -> Result<Vec<(ParamInt, Vec<ParamInt>)>, BrauerError> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.is_empty() || toks.len() % 2 == 0 {
            return Err(perr(line, format!("bad expression {s:?}")));
        }
        let mut out = Vec::new();
        let mut sign = 1;
        for (k, t) in toks.iter().enumerate() {
            if k % 2 == 1 {
                sign = match *t {
                    "+" => 1,
                    "-" => -1,
                    _ => return Err(perr(line, format!("expected + or -, found {t:?}"))),
                };
                continue;
            }
            let (coef, r) = match t.rsplit_once('*') {
                Some((c, r)) => {
                    let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
                    (c.parse::<ParamInt>().map_err(|e| perr(line, e.to_string()))?, r)
                }
                None => (ParamInt::constant(1), *t),
            };
            for v in coef.params() {
                if self.sys.index_of(v).is_none() {
                    return Err(perr(line, format!("undeclared parameter `{v}`")));
                }
            }
            out.push((coef.scale(sign), self.column(r, line)?));
        }
        Ok(out)
    }

    fn eval(&self, s: &str, line: usize) -> Result<Vec<ParamInt>, BrauerError> {
        let mut v = vec![ParamInt::zero(); self.d.matrix.nrows()];
        for (c, col) in self.terms(s, line)? {
            for (x, y) in v.iter_mut().zip(&col) {
                *x = x.add(&c.mul(y, &self.sys)?);
            }
        }
        Ok(v)
    }

    fn row(&self, s: &str, line: usize) -> Result<usize, BrauerError> {
        let (name, k) = match s.split_once('#') {
            Some((n, k)) => (n, k.parse::<usize>().map_err(|_| perr(line, format!("bad occurrence in {s:?}")))?),
            None => (s, 1),
        };
        self.d
            .matrix
            .rows
            .iter()
            .enumerate()
            .filter(|(_, r)| *r == name)
            .nth(k.saturating_sub(1))
            .map(|(i, _)| i)
            .ok_or_else(|| perr(line, format!("no row {s:?}")))
    }
}

fn col_range(s: &str, line: usize) -> Result<Vec<String>, BrauerError> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        match part.split_once("..") {
            Some((a, b)) => {
                let pre = &a[..1];
                let lo: usize = a[1..].parse().map_err(|_| perr(line, format!("bad range {part:?}")))?;
                let hi: usize = b.strip_prefix(pre).unwrap_or(b).parse().map_err(|_| perr(line, format!("bad range {part:?}")))?;
                out.extend((lo..=hi).map(|j| format!("{pre}{j}")));
            }
            None => out.push(part.to_string()),
        }
    }
    Ok(out)
}

/// Parses a facts file against a matrix and optional extra projectives.
pub fn parse_facts(text: &str, d: &DecMat, proj: Option<&DecMat>) -> Result<Vec<Fact>, BrauerError> {
    let mut sys = d.sys.clone();
    if let Some(p) = proj {
        sys.merge(&p.sys)?;
    }
    let ctx = Ctx { d, proj, sys };
    let mut facts = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (head, body) = l.split_once(':').ok_or_else(|| perr(line, "expected `kind label: ...`"))?;
        let htoks: Vec<&str> = head.split_whitespace().collect();
        let body = body.trim();
        let fact = match htoks.as_slice() {
            ["absent", label] => {
                let (row, expr) = body.split_once(" in ").ok_or_else(|| perr(line, "expected `ROW in EXPR`"))?;
                let r = ctx.row(row.trim(), line)?;
                Fact::EntryZero { label: label.to_string(), entry: ctx.eval(expr, line)?[r].clone() }
            }
            ["identity", label] => {
                let (lhs, rhs) = body.split_once(" = ").ok_or_else(|| perr(line, "expected `EXPR = EXPR`"))?;
                Fact::ProjIdentity { label: label.to_string(), lhs: ctx.eval(lhs, line)?, terms: ctx.terms(rhs, line)? }
            }
            ["projective", label] => {
                let (cand, over) = body.split_once(" over ").ok_or_else(|| perr(line, "expected `EXPR over COLUMNS`"))?;
                let pims = col_range(over, line)?.iter().map(|c| ctx.column(c, line)).collect::<Result<_, _>>()?;
                Fact::ProjectiveDecomposes { label: label.to_string(), candidate: ctx.eval(cand, line)?, pims }
            }
            ["traces", label, "mod", p] => {
                let prime: u64 = p.parse().map_err(|_| perr(line, format!("bad prime {p:?}")))?;
                let (cand, obs) = body.split_once('|').ok_or_else(|| perr(line, "expected `CANDIDATES | OBSERVED`"))?;
                let candidates = cand
                    .split_whitespace()
                    .map(|t| {
                        let (e, tr) = t.rsplit_once(':').ok_or_else(|| perr(line, format!("bad candidate {t:?}")))?;
                        let e: ParamInt = e.parse().map_err(|err: crate::exact::ExactError| perr(line, err.to_string()))?;
                        let tr: i64 = tr.parse().map_err(|_| perr(line, format!("bad trace {tr:?}")))?;
                        Ok((e, tr))
                    })
                    .collect::<Result<Vec<_>, BrauerError>>()?;
                let observed = obs
                    .split_whitespace()
                    .map(|t| {
                        let (tr, m) = t.split_once('x').ok_or_else(|| perr(line, format!("bad observation {t:?}")))?;
                        let tr: i64 = tr.parse().map_err(|_| perr(line, format!("bad trace {tr:?}")))?;
                        let m: i64 = m.parse().map_err(|_| perr(line, format!("bad multiplicity {m:?}")))?;
                        Ok((tr, m))
                    })
                    .collect::<Result<Vec<_>, BrauerError>>()?;
                Fact::FactorTrace { label: label.to_string(), prime, candidates, observed }
            }
            _ => return Err(perr(line, format!("unknown fact {head:?}"))),
        };
        facts.push(fact);
    }
    Ok(facts)
}
