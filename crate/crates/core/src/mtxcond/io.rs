//! `FGMOD p k dim ngens` followed by `ngens` GFMAT blocks.

use super::{chop, FGModule, MtxError};
use crate::gfla::{parse_matrix_lines, write_matrix, FieldSpec};

pub fn write_module(m: &FGModule) -> String {
    let f = m.field();
    let mut s = format!("FGMOD {} {} {} {}\n", f.p(), f.k(), m.dim(), m.ngens());
    for g in m.gens() {
        s.push_str(&write_matrix(g));
    }
    s
}

fn count(tok: &str) -> Result<usize, MtxError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(MtxError::Parse(format!("expected a count, found {tok:?}")));
    }
    tok.parse().map_err(|_| MtxError::Parse(format!("count {tok:?} out of range")))
}

/// Parses a module file. Generators need not be invertible (condensed
/// algebras are stored in the same format).
pub fn parse_module(text: &str) -> Result<FGModule, MtxError> {
    let body = text.strip_suffix('\n').ok_or_else(|| MtxError::Parse("missing final newline".into()))?;
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    let toks: Vec<&str> = header.split(' ').collect();
    if toks.len() != 5 || toks[0] != "FGMOD" {
        return Err(MtxError::Parse(format!("bad header {header:?}")));
    }
    let p = count(toks[1])? as u32;
    let k = count(toks[2])? as u32;
    let dim = count(toks[3])?;
    let ngens = count(toks[4])?;
    let field = FieldSpec::canonical(p, k)?;
    let mut gens = Vec::with_capacity(ngens);
    for i in 0..ngens {
        let g = parse_matrix_lines(&mut lines).map_err(|e| MtxError::Parse(format!("generator {}: {e}", i + 1)))?;
        gens.push(g);
    }
    if lines.next().is_some() {
        return Err(MtxError::Parse("trailing content after generators".into()));
    }
    let labels = (1..=ngens).map(|i| format!("g{i}")).collect();
    FGModule::algebra(&field, dim, gens, labels)
}

/// Reruns `chop` with the seed in a certificate's header and compares the
/// regenerated text.
pub fn replay_certificate_text(m: &FGModule, text: &str) -> Result<bool, MtxError> {
    let header = text.lines().next().unwrap_or("");
    let toks: Vec<&str> = header.split(' ').collect();
    if toks.len() != 5 || toks[0] != "CHOP" || toks[1] != "seed" || toks[3] != "dim" {
        return Err(MtxError::Parse(format!("bad certificate header {header:?}")));
    }
    let seed: u64 = toks[2].parse().map_err(|_| MtxError::Parse("bad seed".into()))?;
    Ok(chop(m, seed)?.certificate.to_string() == text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::catalog;

    #[test]
    fn module_round_trip() {
        let f = FieldSpec::canonical(3, 2).unwrap();
        let m = FGModule::permutation(&f, catalog::symmetric(4).gens()).unwrap();
        let text = write_module(&m);
        assert!(text.starts_with("FGMOD 3 2 4 2\nGFMAT 3 2 4 4\n"));
        assert_eq!(parse_module(&text).unwrap(), m);
        assert!(parse_module("FGMOD 3 1 2 1\n").is_err());
        assert!(parse_module(&text.replace("FGMOD 3 2 4 2", "FGMOD 3 2 5 2")).is_err());
    }

    #[test]
    fn certificate_text_replays() {
        let f = FieldSpec::prime(3).unwrap();
        let m = FGModule::permutation(&f, catalog::symmetric(4).gens()).unwrap();
        let cert = chop(&m, 11).unwrap().certificate.to_string();
        assert!(replay_certificate_text(&m, &cert).unwrap());
        let tampered = cert.replacen("dim 4", "dim 5", 1);
        assert!(!replay_certificate_text(&m, &tampered).unwrap());
    }
}
