use super::{Perm, PermError};

/// Writes one `PERM n` block: header then one line of 1-based images per
/// permutation.
pub fn write_perms(n: usize, perms: &[Perm]) -> String {
    let mut s = format!("PERM {n}\n");
    for p in perms {
        let line: Vec<String> = p.images().iter().map(|x| (x + 1).to_string()).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

/// Parses a sequence of `PERM n` blocks. Each data line must list `n`
/// distinct points in `1..=n` separated by single spaces.
pub fn parse_perm_blocks(text: &str) -> Result<Vec<(usize, Vec<Perm>)>, PermError> {
    let mut blocks: Vec<(usize, Vec<Perm>)> = Vec::new();
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(PermError::Parse("missing final newline".into()));
    }
    for (ln, line) in text.lines().enumerate() {
        let err = |m: &str| PermError::Parse(format!("line {}: {m}", ln + 1));
        if let Some(rest) = line.strip_prefix("PERM ") {
            let n: usize = rest.parse().map_err(|_| err("bad degree"))?;
            if rest != n.to_string() {
                return Err(err("bad degree"));
            }
            blocks.push((n, Vec::new()));
            continue;
        }
        let Some((n, perms)) = blocks.last_mut() else { return Err(err("expected `PERM n` header")) };
        let imgs: Vec<u32> = line
            .split(' ')
            .map(|t| if t.is_empty() || t.starts_with('+') { Err(()) } else { t.parse().map_err(|_| ()) })
            .collect::<Result<_, _>>()
            .map_err(|_| err("bad image list"))?;
        if imgs.len() != *n {
            return Err(err(&format!("expected {n} images, found {}", imgs.len())));
        }
        perms.push(Perm::from_images_1(&imgs).map_err(|_| err("not a permutation"))?);
    }
    if blocks.is_empty() {
        return Err(PermError::Parse("no `PERM n` block".into()));
    }
    Ok(blocks)
}

/// Parses exactly one block.
pub fn parse_perms(text: &str) -> Result<(usize, Vec<Perm>), PermError> {
    let mut b = parse_perm_blocks(text)?;
    if b.len() != 1 {
        return Err(PermError::Parse(format!("expected one block, found {}", b.len())));
    }
    Ok(b.pop().expect("one block"))
}

/// Evaluates a word such as `g1*g2^-1*g3^2` (generators are 1-based; the
/// empty word and `1` denote the identity).
pub fn eval_word(n: usize, gens: &[Perm], word: &str) -> Result<Perm, PermError> {
    let w = word.trim();
    let mut acc = Perm::identity(n);
    if w.is_empty() || w == "1" {
        return Ok(acc);
    }
    for tok in w.split('*') {
        let err = || PermError::Parse(format!("bad word token `{tok}`"));
        let body = tok.strip_prefix('g').ok_or_else(err)?;
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<i64>().map_err(|_| err())?),
            None => (body, 1),
        };
        let idx: usize = idx.parse().map_err(|_| err())?;
        let g = gens.get(idx.wrapping_sub(1)).ok_or_else(err)?;
        acc = acc.mul(&g.pow(exp));
    }
    Ok(acc)
}
