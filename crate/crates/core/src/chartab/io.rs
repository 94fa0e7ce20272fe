//! `CHARTAB` and `FUSION` text formats.

use std::collections::BTreeMap;

use super::{CharacterTable, ChartabError, ClassInfo, Character, FusionMap};
use crate::exact::Cyclotomic;

/// Line numbers (1-based) of each part of a parsed table file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LineMap {
    pub classes: Vec<usize>,
    pub power_maps: BTreeMap<u64, usize>,
    pub characters: Vec<usize>,
}

pub fn write_table(t: &CharacterTable) -> String {
    let mut s = format!("CHARTAB {} {}", t.name, t.order);
    if let Some(p) = t.prime {
        s.push_str(&format!(" {p}"));
    }
    s.push('\n');
    for c in &t.classes {
        s.push_str(&format!("{} {} {} {}\n", c.name, c.order, c.size, c.centralizer));
    }
    for (p, m) in &t.power_maps {
        let idx: Vec<String> = m.iter().map(|i| (i + 1).to_string()).collect();
        s.push_str(&format!("POW {p}: {}\n", idx.join(" ")));
    }
    for chi in &t.irreducibles {
        let vals: Vec<String> = chi.values.iter().map(|v| v.to_string()).collect();
        s.push_str(&format!("CHI {}: {}\n", chi.name, vals.join(" ")));
    }
    s
}

fn perr(line: usize, msg: impl Into<String>) -> ChartabError {
    ChartabError::Parse { line, message: msg.into() }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, ChartabError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(perr(line, format!("{what}: expected a nonnegative integer, found {tok:?}")));
    }
    tok.parse().map_err(|_| perr(line, format!("{what}: {tok:?} out of range")))
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.contains(char::is_whitespace) && !s.contains(':')
}

/// Parses a table; the result is not validated (see [`CharacterTable::validate`]).
pub fn parse_table(text: &str) -> Result<(CharacterTable, LineMap), ChartabError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let toks: Vec<&str> = header.split(' ').collect();
    if !(toks.len() == 3 || toks.len() == 4) || toks[0] != "CHARTAB" || !valid_name(toks[1]) {
        return Err(perr(hl, "expected `CHARTAB name order [p]`"));
    }
    let order: u64 = num(toks[2], hl, "group order")?;
    let prime = match toks.get(3) {
        Some(t) => Some(num::<u32>(t, hl, "prime")?),
        None => None,
    };
    let mut map = LineMap::default();
    let mut classes = Vec::new();
    let mut power_maps = BTreeMap::new();
    let mut irreducibles = Vec::new();
    let mut stage = 0; // 0 classes, 1 power maps, 2 characters
    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("POW ") {
            if stage > 1 {
                return Err(perr(ln, "power map after characters"));
            }
            stage = 1;
            let (p, body) = rest.split_once(": ").ok_or_else(|| perr(ln, "expected `POW p: i1 i2 ...`"))?;
            let p: u64 = num(p, ln, "prime")?;
            let idx = body
                .split(' ')
                .map(|t| {
                    let v: usize = num(t, ln, "class index")?;
                    if v == 0 || v > classes.len() {
                        return Err(perr(ln, format!("class index {v} out of range")));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>, _>>()?;
            if idx.len() != classes.len() {
                return Err(perr(ln, format!("{} entries, expected {}", idx.len(), classes.len())));
            }
            if power_maps.insert(p, idx).is_some() {
                return Err(perr(ln, format!("duplicate power map {p}")));
            }
            map.power_maps.insert(p, ln);
        } else if let Some(rest) = line.strip_prefix("CHI ") {
            stage = 2;
            let (name, body) = rest.split_once(": ").ok_or_else(|| perr(ln, "expected `CHI name: v1 v2 ...`"))?;
            if !valid_name(name) {
                return Err(perr(ln, format!("bad character name {name:?}")));
            }
            let vals = body
                .split(' ')
                .map(|t| t.parse::<Cyclotomic>().map_err(|e| perr(ln, format!("value {t:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if vals.len() != classes.len() {
                return Err(perr(ln, format!("{} values, expected {}", vals.len(), classes.len())));
            }
            irreducibles.push(Character::new(name, vals));
            map.characters.push(ln);
        } else {
            if stage > 0 {
                return Err(perr(ln, "class line after power maps or characters"));
            }
            let t: Vec<&str> = line.split(' ').collect();
            if t.len() != 4 || !valid_name(t[0]) {
                return Err(perr(ln, "expected `name order size centralizer`"));
            }
            if classes.iter().any(|c: &ClassInfo| c.name == t[0]) {
                return Err(perr(ln, format!("duplicate class name {}", t[0])));
            }
            classes.push(ClassInfo {
                name: t[0].to_string(),
                order: num(t[1], ln, "element order")?,
                size: num(t[2], ln, "class size")?,
                centralizer: num(t[3], ln, "centralizer order")?,
            });
            map.classes.push(ln);
        }
    }
    if classes.is_empty() {
        return Err(perr(hl, "no classes"));
    }
    let t = CharacterTable { name: toks[1].to_string(), order, prime, classes, power_maps, irreducibles };
    Ok((t, map))
}

pub fn write_fusion(f: &FusionMap) -> String {
    let idx: Vec<String> = f.map.iter().map(|i| (i + 1).to_string()).collect();
    format!("FUSION {} {}: {}\n", f.source, f.target, idx.join(" "))
}

pub fn parse_fusion(text: &str) -> Result<FusionMap, ChartabError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    if line.contains('\n') {
        return Err(perr(2, "trailing content after fusion"));
    }
    let rest = line.strip_prefix("FUSION ").ok_or_else(|| perr(1, "expected `FUSION src dst: j1 j2 ...`"))?;
    let (names, body) = rest.split_once(": ").ok_or_else(|| perr(1, "missing `: `"))?;
    let (src, dst) = names.split_once(' ').ok_or_else(|| perr(1, "expected source and target names"))?;
    if !valid_name(src) || !valid_name(dst) {
        return Err(perr(1, "bad table name"));
    }
    let map = body
        .split(' ')
        .map(|t| {
            let v: usize = num(t, 1, "class index")?;
            if v == 0 {
                return Err(perr(1, "class indices are 1-based"));
            }
            Ok(v - 1)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FusionMap { source: src.to_string(), target: dst.to_string(), map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::fixtures;

    #[test]
    fn table_round_trip() {
        let t = fixtures::s3();
        let text = write_table(&t);
        let (u, lines) = parse_table(&text).unwrap();
        assert_eq!(u, t);
        assert_eq!(write_table(&u), text);
        assert_eq!(lines.classes, vec![2, 3, 4]);
        assert_eq!(lines.characters.len(), 3);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(parse_table(""), Err(ChartabError::Parse { line: 1, .. })));
        let bad = "CHARTAB X 2\n1A 1 1 2\n2A 2 1 2\nCHI 1a: 1 1\nCHI s: 1 -1 0\n";
        assert!(matches!(parse_table(bad), Err(ChartabError::Parse { line: 5, .. })));
        let bad = "CHARTAB X 2\n1A 1 1 2\nPOW 2: 3\n";
        assert!(matches!(parse_table(bad), Err(ChartabError::Parse { line: 3, .. })));
    }

    #[test]
    fn fusion_round_trip() {
        let f = FusionMap { source: "A4".into(), target: "S4".into(), map: vec![0, 2, 3, 3] };
        let s = write_fusion(&f);
        assert_eq!(s, "FUSION A4 S4: 1 3 4 4\n");
        assert_eq!(parse_fusion(&s).unwrap(), f);
        assert!(parse_fusion("FUSION A4 S4: 0 1\n").is_err());
    }
}
