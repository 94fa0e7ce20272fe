use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use super::ExactError;

/// A parameter assignment.
pub type Assignment = BTreeMap<String, i64>;

/// Integer polynomial in named parameters, multilinear in each variable.
///
/// Monomials are sorted sets of names; the empty monomial is the constant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParamInt {
    terms: BTreeMap<Vec<String>, i64>,
}

impl ParamInt {
    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        ParamInt { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![name.to_string()], 1);
        ParamInt { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if no parameter occurs.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Vec::new()).copied(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> i64 {
        self.terms.get(&Vec::new()).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[String], i64)> {
        self.terms.iter().map(|(m, &c)| (m.as_slice(), c))
    }

    /// Every parameter name occurring.
    pub fn params(&self) -> BTreeSet<&str> {
        self.terms.keys().flatten().map(String::as_str).collect()
    }

    /// True when no monomial has degree above one.
    pub fn is_affine(&self) -> bool {
        self.terms.keys().all(|m| m.len() <= 1)
    }

    fn push(&mut self, m: Vec<String>, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&self, o: &ParamInt) -> ParamInt {
        let mut r = self.clone();
        for (m, &c) in &o.terms {
            r.push(m.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &ParamInt) -> ParamInt {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, k: i64) -> ParamInt {
        if k == 0 {
            return ParamInt::zero();
        }
        ParamInt { terms: self.terms.iter().map(|(m, &c)| (m.clone(), c * k)).collect() }
    }

    /// Product, using `x^2 = x` for parameters whose domain in `sys` is a
    /// subset of `{0, 1}`; a repeated parameter with a wider domain is an error.
    pub fn mul(&self, o: &ParamInt, sys: &ParamSystem) -> Result<ParamInt, ExactError> {
        let mut r = ParamInt::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &o.terms {
                let mut m: BTreeSet<String> = ma.iter().cloned().collect();
                for v in mb {
                    if !m.insert(v.clone()) {
                        let binary = sys.domain(v).map_or(false, |(lo, hi)| lo >= 0 && hi <= 1);
                        if !binary {
                            return Err(ExactError::NonBinaryProduct(v.clone()));
                        }
                    }
                }
                r.push(m.into_iter().collect(), ca * cb);
            }
        }
        Ok(r)
    }

    /// Replaces assigned parameters by their values; others stay symbolic.
    pub fn substitute(&self, a: &Assignment) -> ParamInt {
        let mut r = ParamInt::zero();
        for (m, &c) in &self.terms {
            let mut coef = c;
            let mut rest = Vec::new();
            for v in m {
                match a.get(v) {
                    Some(&x) => coef *= x,
                    None => rest.push(v.clone()),
                }
            }
            r.push(rest, coef);
        }
        r
    }

    /// Evaluation with every occurring parameter assigned (no domain check).
    pub fn eval_unchecked(&self, a: &Assignment) -> Result<i64, ExactError> {
        let mut s = 0;
        for (m, &c) in &self.terms {
            let mut t = c;
            for v in m {
                t *= *a.get(v).ok_or_else(|| ExactError::Unassigned(v.clone()))?;
            }
            s += t;
        }
        Ok(s)
    }

    pub(crate) fn indexed(&self, sys: &ParamSystem) -> Result<Vec<(Vec<usize>, i64)>, ExactError> {
        self.terms
            .iter()
            .map(|(m, &c)| {
                let ix = m
                    .iter()
                    .map(|v| sys.index_of(v).ok_or_else(|| ExactError::UnknownParam(v.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((ix, c))
            })
            .collect()
    }
}

impl From<i64> for ParamInt {
    fn from(c: i64) -> Self {
        ParamInt::constant(c)
    }
}

impl fmt::Debug for ParamInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ParamInt {
    /// Canonical form: constant first, then monomials in sorted order,
    /// e.g. `3-2b`, `1-a`, `a*d+at*dt`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, &c) in &self.terms {
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if m.is_empty() {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                write!(f, "{}", m.join("*"))?;
            }
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic())
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for ParamInt {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(format!("bad parameter expression `{s}`"));
        if s.is_empty() {
            return Err(bad());
        }
        let mut out = ParamInt::zero();
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            let digits_end = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (num, vars) = term.split_at(digits_end);
            let coef: i64 = if num.is_empty() { 1 } else { num.parse().map_err(|_| bad())? };
            let vars = if !num.is_empty() { vars.strip_prefix('*').unwrap_or(vars) } else { vars };
            let mono: Vec<String> = if vars.is_empty() {
                if num.is_empty() {
                    return Err(bad());
                }
                Vec::new()
            } else {
                let mut set = BTreeSet::new();
                for v in vars.split('*') {
                    if !is_ident(v) || !set.insert(v.to_string()) {
                        return Err(bad());
                    }
                }
                set.into_iter().collect()
            };
            out.push(mono, sign * coef);
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
            rest = &rest[end + 1..];
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

fn eval_indexed(idx: &[(Vec<usize>, i64)], vals: &[i64]) -> i64 {
    idx.iter().map(|(m, c)| m.iter().fold(*c, |acc, &i| acc * vals[i])).sum()
}

fn rel_holds(rel: Relation, v: i64) -> bool {
    match rel {
        Relation::Eq => v == 0,
        Relation::Ge => v >= 0,
        Relation::Le => v <= 0,
    }
}

/// `expr REL 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub expr: ParamInt,
    pub rel: Relation,
}

impl Constraint {
    pub fn eq(lhs: ParamInt, rhs: ParamInt) -> Self {
        Constraint { expr: lhs.sub(&rhs), rel: Relation::Eq }
    }
    pub fn ge(lhs: ParamInt, rhs: ParamInt) -> Self {
        Constraint { expr: lhs.sub(&rhs), rel: Relation::Ge }
    }
    pub fn le(lhs: ParamInt, rhs: ParamInt) -> Self {
        Constraint { expr: lhs.sub(&rhs), rel: Relation::Le }
    }

    pub fn holds(&self, v: i64) -> bool {
        rel_holds(self.rel, v)
    }

    pub fn check(&self, a: &Assignment) -> Result<bool, ExactError> {
        Ok(self.holds(self.expr.eval_unchecked(a)?))
    }
}

impl fmt::Display for Constraint {
    /// `a+at=4`: parameter part on the left, constant on the right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.expr.constant_term();
        let lhs = self.expr.sub(&ParamInt::constant(c));
        let op = match self.rel {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        };
        write!(f, "{lhs}{op}{}", -c)
    }
}

impl FromStr for Constraint {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        for (op, rel) in [(">=", Relation::Ge), ("<=", Relation::Le), ("=", Relation::Eq)] {
            if let Some((l, r)) = s.split_once(op) {
                let l: ParamInt = l.parse()?;
                let r: ParamInt = r.parse()?;
                return Ok(Constraint { expr: l.sub(&r), rel });
            }
        }
        Err(ExactError::Parse(format!("bad constraint `{s}`")))
    }
}

/// Named parameters with finite integer ranges and constraints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamSystem {
    params: Vec<(String, i64, i64)>,
    constraints: Vec<Constraint>,
}

impl ParamSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a parameter with the inclusive range `lo..=hi`.
    pub fn add_param(&mut self, name: &str, lo: i64, hi: i64) -> Result<(), ExactError> {
        if !is_ident(name) {
            return Err(ExactError::Parse(format!("bad parameter name `{name}`")));
        }
        if self.index_of(name).is_some() {
            return Err(ExactError::DuplicateParam(name.to_string()));
        }
        self.params.push((name.to_string(), lo, hi));
        Ok(())
    }

    /// Declares `name` and `namet` in `{0,1}` with `name + namet = 1`.
    pub fn add_binary_pair(&mut self, name: &str) -> Result<(), ExactError> {
        let t = format!("{name}t");
        self.add_param(name, 0, 1)?;
        self.add_param(&t, 0, 1)?;
        self.add_constraint(Constraint::eq(ParamInt::var(name).add(&ParamInt::var(&t)), 1.into()))
    }

    pub fn add_constraint(&mut self, c: Constraint) -> Result<(), ExactError> {
        for v in c.expr.params() {
            if self.index_of(v).is_none() {
                return Err(ExactError::UnknownParam(v.to_string()));
            }
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn params(&self) -> &[(String, i64, i64)] {
        &self.params
    }

    pub fn names(&self) -> Vec<&str> {
        self.params.iter().map(|p| p.0.as_str()).collect()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p.0 == name)
    }

    pub fn domain(&self, name: &str) -> Option<(i64, i64)> {
        self.params.iter().find(|p| p.0 == name).map(|p| (p.1, p.2))
    }

    /// Adds every parameter and constraint of `other`; shared names must
    /// have identical ranges.
    pub fn merge(&mut self, other: &ParamSystem) -> Result<(), ExactError> {
        for (n, lo, hi) in &other.params {
            match self.domain(n) {
                Some(d) if d == (*lo, *hi) => {}
                Some(_) => return Err(ExactError::DuplicateParam(n.clone())),
                None => self.params.push((n.clone(), *lo, *hi)),
            }
        }
        for c in &other.constraints {
            if !self.constraints.contains(c) {
                self.constraints.push(c.clone());
            }
        }
        Ok(())
    }

    /// Checks that `a` assigns every parameter inside its range.
    pub fn check_domain(&self, a: &Assignment) -> Result<(), ExactError> {
        for (k, &v) in a {
            let (lo, hi) = self.domain(k).ok_or_else(|| ExactError::UnknownParam(k.clone()))?;
            if v < lo || v > hi {
                return Err(ExactError::OutOfDomain { name: k.clone(), value: v });
            }
        }
        Ok(())
    }

    /// Index of the first violated constraint, if any.
    pub fn first_violation(&self, a: &Assignment) -> Result<Option<usize>, ExactError> {
        for (i, c) in self.constraints.iter().enumerate() {
            if !c.check(a)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Fixes the assigned parameters: they are removed and every constraint
    /// is specialized.
    pub fn substitute(&self, a: &Assignment) -> Result<ParamSystem, ExactError> {
        self.check_domain(a)?;
        Ok(ParamSystem {
            params: self.params.iter().filter(|p| !a.contains_key(&p.0)).cloned().collect(),
            constraints: self
                .constraints
                .iter()
                .map(|c| Constraint { expr: c.expr.substitute(a), rel: c.rel })
                .collect(),
        })
    }

    /// `a:0..1,at:0..1`
    pub fn format_params(&self) -> String {
        self.params.iter().map(|(n, lo, hi)| format!("{n}:{lo}..{hi}")).collect::<Vec<_>>().join(",")
    }

    /// `a+at=1;x>=0`
    pub fn format_constraints(&self) -> String {
        self.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
    }

    /// Inverse of [`Self::format_params`] / [`Self::format_constraints`].
    pub fn parse(params: &str, constraints: &str) -> Result<ParamSystem, ExactError> {
        let mut sys = ParamSystem::new();
        let bad = |t: &str| ExactError::Parse(format!("bad parameter declaration `{t}`"));
        if !params.is_empty() {
            for decl in params.split(',') {
                let (name, range) = decl.split_once(':').ok_or_else(|| bad(decl))?;
                let (lo, hi) = range.split_once("..").ok_or_else(|| bad(decl))?;
                let lo: i64 = lo.parse().map_err(|_| bad(decl))?;
                let hi: i64 = hi.parse().map_err(|_| bad(decl))?;
                if lo > hi {
                    return Err(bad(decl));
                }
                sys.add_param(name, lo, hi)?;
            }
        }
        if !constraints.is_empty() {
            for c in constraints.split(';') {
                sys.add_constraint(c.parse()?)?;
            }
        }
        Ok(sys)
    }
}

/// Evaluates `m` under `a`, checking domains.
pub fn param_eval(m: &ParamInt, a: &Assignment, sys: &ParamSystem) -> Result<i64, ExactError> {
    for v in m.params() {
        if sys.index_of(v).is_none() {
            return Err(ExactError::UnknownParam(v.to_string()));
        }
    }
    sys.check_domain(a)?;
    m.eval_unchecked(a)
}

/// Specializes `m` at the (partial) assignment `a`, checking domains.
pub fn param_substitute(m: &ParamInt, a: &Assignment, sys: &ParamSystem) -> Result<ParamInt, ExactError> {
    sys.check_domain(a)?;
    Ok(m.substitute(a))
}

/// All assignments satisfying every constraint, in lexicographic order
/// (parameters in declaration order, values ascending).
pub fn param_solve(sys: &ParamSystem) -> Vec<Assignment> {
    let n = sys.params.len();
    // Each constraint is checked as soon as its last parameter is fixed.
    let mut by_last: Vec<Vec<(Vec<(Vec<usize>, i64)>, Relation)>> = vec![Vec::new(); n + 1];
    let mut constant_ok = true;
    for c in &sys.constraints {
        let idx = c.expr.indexed(sys).expect("constraints mention declared params");
        let last = idx.iter().flat_map(|(m, _)| m.iter().copied()).max();
        match last {
            Some(l) => by_last[l].push((idx, c.rel)),
            None => constant_ok &= c.holds(c.expr.constant_term()),
        }
    }
    let mut out = Vec::new();
    if !constant_ok {
        return out;
    }
    let mut vals = vec![0i64; n];
    fn rec(
        i: usize,
        sys: &ParamSystem,
        by_last: &[Vec<(Vec<(Vec<usize>, i64)>, Relation)>],
        vals: &mut Vec<i64>,
        out: &mut Vec<Assignment>,
    ) {
        if i == sys.params.len() {
            out.push(sys.params.iter().zip(vals.iter()).map(|(p, &v)| (p.0.clone(), v)).collect());
            return;
        }
        let (_, lo, hi) = sys.params[i];
        for v in lo..=hi {
            vals[i] = v;
            let ok = by_last[i].iter().all(|(idx, rel)| rel_holds(*rel, eval_indexed(idx, vals)));
            if ok {
                rec(i + 1, sys, by_last, vals, out);
            }
        }
    }
    rec(0, sys, &by_last, &mut vals, &mut out);
    out
}
