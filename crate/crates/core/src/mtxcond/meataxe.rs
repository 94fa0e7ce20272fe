use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FGModule, MtxError};
use crate::gfla::poly::{charpoly, factor, Poly};
use crate::gfla::{CoordBasis, Echelon, Elem, FieldSpec, GFMatrix};

/// Split attempts per node before giving up.
pub const SPLIT_BUDGET: usize = 200;

/// Smallest invariant subspace containing `seed`, echelonized.
pub fn spin(m: &FGModule, seed: &[Elem]) -> Result<Echelon, MtxError> {
    spin_many(m, &[seed.to_vec()])
}

/// Smallest invariant subspace containing every seed.
pub fn spin_many(m: &FGModule, seeds: &[Vec<Elem>]) -> Result<Echelon, MtxError> {
    if seeds.iter().all(|s| s.iter().all(|&x| x == 0)) {
        return Err(MtxError::ZeroSeed);
    }
    let mut e = Echelon::new(m.field(), m.dim());
    let mut queue: Vec<Vec<Elem>> = Vec::new();
    for s in seeds {
        if s.len() != m.dim() {
            return Err(MtxError::Shape("seed length".into()));
        }
        if e.insert(s) {
            queue.push(s.clone());
        }
    }
    let mut k = 0;
    while k < queue.len() && e.len() < m.dim() {
        for g in m.gens() {
            let w = g.vec_mul(&queue[k]);
            if e.insert(&w) {
                queue.push(w);
            }
        }
        k += 1;
    }
    Ok(e)
}

/// Standard basis from `seed`: the seed, then images `b_i g_j` in order of
/// discovery, keeping those independent of the previous ones.
pub fn standard_basis(m: &FGModule, seed: &[Elem]) -> GFMatrix {
    let mut e = Echelon::new(m.field(), m.dim());
    let mut list: Vec<Vec<Elem>> = Vec::new();
    if e.insert(seed) {
        list.push(seed.to_vec());
    }
    let mut k = 0;
    while k < list.len() && list.len() < m.dim() {
        for g in m.gens() {
            let w = g.vec_mul(&list[k]);
            if e.insert(&w) {
                list.push(w);
            }
        }
        k += 1;
    }
    GFMatrix::from_rows(m.field(), m.dim(), &list)
}

fn stream_for(path: &str) -> u64 {
    // FNV-1a; stable across platforms and releases.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in path.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn node_rng(seed: u64, path: &str) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream_for(path));
    r
}

/// A random algebra element: `sum_t c_t w_t` for short generator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraWord {
    pub terms: Vec<(Elem, Vec<usize>)>,
}

impl fmt::Display for AlgebraWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                let ws: Vec<String> = w.iter().map(|i| format!("g{}", i + 1)).collect();
                format!("{c}:{}", ws.join("."))
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl AlgebraWord {
    fn random(rng: &mut ChaCha8Rng, ngens: usize, p: u32) -> Self {
        let terms = (0..3)
            .map(|_| {
                let len = rng.gen_range(1..=3);
                let w = (0..len).map(|_| rng.gen_range(0..ngens)).collect();
                (rng.gen_range(1..p) as Elem, w)
            })
            .collect();
        AlgebraWord { terms }
    }

    pub fn evaluate(&self, m: &FGModule) -> Result<GFMatrix, MtxError> {
        let f = m.field();
        let mut acc = GFMatrix::zeros(f, m.dim(), m.dim());
        for (c, w) in &self.terms {
            let mut x = GFMatrix::identity(f, m.dim());
            for &i in w {
                x = x.mul(&m.gens()[i])?;
            }
            acc = acc.add(&x.scale(f.from_int(*c as i64)))?;
        }
        Ok(acc)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Direct,
    Dual,
    /// dimension one or no generators
    Trivial,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Direct => "direct",
            Direction::Dual => "dual",
            Direction::Trivial => "trivial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeOutcome {
    Split { sub_dim: usize, direction: Direction },
    Irreducible { direction: Direction },
}

/// One MeatAxe node in the certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeRecord {
    pub path: String,
    pub dim: usize,
    pub attempts: usize,
    pub word: Option<AlgebraWord>,
    pub factor_degree: Option<usize>,
    pub outcome: NodeOutcome,
}

/// Replayable log of a chop run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChopCertificate {
    pub seed: u64,
    pub dim: usize,
    pub nodes: Vec<NodeRecord>,
}

impl fmt::Display for ChopCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CHOP seed {} dim {}", self.seed, self.dim)?;
        for n in &self.nodes {
            write!(f, "node {} dim {} attempts {}", n.path, n.dim, n.attempts)?;
            if let Some(w) = &n.word {
                write!(f, " word {w}")?;
            }
            if let Some(d) = n.factor_degree {
                write!(f, " factor_degree {d}")?;
            }
            match &n.outcome {
                NodeOutcome::Split { sub_dim, direction } => writeln!(f, " split {sub_dim} {direction}")?,
                NodeOutcome::Irreducible { direction } => writeln!(f, " irreducible {direction}")?,
            }
        }
        Ok(())
    }
}

/// A composition factor occurrence `L / R` inside the ambient space:
/// `lower` spans `R`, `lower + upper` spans `L` (rows in ambient coordinates).
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub lower: Vec<Vec<Elem>>,
    pub upper: GFMatrix,
}

#[derive(Clone, Debug)]
pub struct CompositionFactor {
    pub module: FGModule,
    pub multiplicity: usize,
}

/// Composition series: factors up to isomorphism with multiplicities, plus
/// the flag of occurrences from the bottom up.
#[derive(Clone, Debug)]
pub struct CompositionSeries {
    pub ambient_dim: usize,
    pub factors: Vec<CompositionFactor>,
    /// `(factor index, occurrence)` from the bottom of the series up.
    pub series: Vec<(usize, Subquotient)>,
    pub certificate: ChopCertificate,
}

impl CompositionSeries {
    /// Dimensions with multiplicities, sorted.
    pub fn dims(&self) -> Vec<(usize, usize)> {
        let mut d: Vec<(usize, usize)> = self.factors.iter().map(|f| (f.module.dim(), f.multiplicity)).collect();
        d.sort_unstable();
        d
    }

    /// Indices into `series` of the occurrences of factor `k`.
    pub fn occurrences(&self, k: usize) -> Vec<usize> {
        self.series.iter().enumerate().filter(|(_, (f, _))| *f == k).map(|(i, _)| i).collect()
    }
}

enum Test {
    Split(Echelon, Direction),
    Irreducible(Direction),
}

struct Found {
    attempts: usize,
    word: Option<AlgebraWord>,
    degree: Option<usize>,
    test: Test,
}

fn annihilator(f: &FieldSpec, dual_sub: &Echelon, dim: usize) -> Echelon {
    let w = GFMatrix::from_rows(f, dim, dual_sub.basis_rows());
    Echelon::from_matrix(&w.nullspace())
}

fn transposed(m: &FGModule) -> FGModule {
    let gens = m.gens().iter().map(GFMatrix::transpose).collect();
    FGModule::algebra(m.field(), m.dim(), gens, m.labels().to_vec()).expect("same shape")
}

/// Splits or certifies one module.
fn split_node(m: &FGModule, rng: &mut ChaCha8Rng) -> Result<Found, usize> {
    let d = m.dim();
    let f = m.field();
    if d <= 1 {
        return Ok(Found { attempts: 0, word: None, degree: None, test: Test::Irreducible(Direction::Trivial) });
    }
    if m.ngens() == 0 {
        let mut e = Echelon::new(f, d);
        let mut v = vec![0; d];
        v[0] = 1;
        e.insert(&v);
        return Ok(Found { attempts: 0, word: None, degree: None, test: Test::Split(e, Direction::Trivial) });
    }
    let mt = transposed(m);
    for attempt in 1..=SPLIT_BUDGET {
        let word = AlgebraWord::random(rng, m.ngens(), f.p());
        let a = word.evaluate(m).expect("conformable");
        let cp = charpoly(&a).expect("square");
        let mut facs: Vec<Poly> = factor(&cp, f).into_iter().map(|x| x.0).collect();
        facs.sort_by_key(|p| p.degree());
        for fp in facs {
            let deg = fp.degree().unwrap_or(0);
            let n = fp.eval_matrix(&a).expect("square");
            let ker = n.left_nullspace();
            if ker.rows() == 0 {
                continue;
            }
            let s = spin(m, ker.row(0)).expect("nonzero");
            if s.len() < d {
                return Ok(Found {
                    attempts: attempt,
                    word: Some(word),
                    degree: Some(deg),
                    test: Test::Split(s, Direction::Direct),
                });
            }
            if ker.rows() != deg {
                continue;
            }
            let kt = n.nullspace();
            let st = spin(&mt, kt.row(0)).expect("nonzero");
            if st.len() < d {
                let sub = annihilator(f, &st, d);
                return Ok(Found {
                    attempts: attempt,
                    word: Some(word),
                    degree: Some(deg),
                    test: Test::Split(sub, Direction::Dual),
                });
            }
            return Ok(Found {
                attempts: attempt,
                word: Some(word),
                degree: Some(deg),
                test: Test::Irreducible(Direction::Dual),
            });
        }
    }
    Err(SPLIT_BUDGET)
}

/// True if `m` is irreducible; errors if the budget is exhausted.
pub fn is_irreducible(m: &FGModule, seed: u64) -> Result<bool, MtxError> {
    let mut rng = node_rng(seed, "irr");
    match split_node(m, &mut rng) {
        Ok(Found { test: Test::Irreducible(_), .. }) => Ok(true),
        Ok(_) => Ok(false),
        Err(_) => Err(MtxError::Budget { partial: String::new() }),
    }
}

/// Proper nonzero submodule, if one is found.
pub fn find_submodule(m: &FGModule, seed: u64) -> Result<Option<Echelon>, MtxError> {
    let mut rng = node_rng(seed, "sub");
    match split_node(m, &mut rng) {
        Ok(Found { test: Test::Split(e, _), .. }) => Ok(Some(e)),
        Ok(_) => Ok(None),
        Err(_) => Err(MtxError::Budget { partial: String::new() }),
    }
}

struct Node {
    path: String,
    module: FGModule,
    lower: Vec<Vec<Elem>>,
    upper: GFMatrix,
}

/// Composition series by recursive splitting; deterministic in `seed`.
pub fn chop(m: &FGModule, seed: u64) -> Result<CompositionSeries, MtxError> {
    let f = m.field().clone();
    let mut cert = ChopCertificate { seed, dim: m.dim(), nodes: Vec::new() };
    let mut leaves: Vec<(FGModule, Subquotient)> = Vec::new();
    if m.dim() > 0 {
        let root = Node {
            path: "0".into(),
            module: m.clone(),
            lower: Vec::new(),
            upper: GFMatrix::identity(&f, m.dim()),
        };
        // Depth-first, submodule before quotient: leaves come out bottom-up.
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            let mut rng = node_rng(seed, &node.path);
            let found = match split_node(&node.module, &mut rng) {
                Ok(x) => x,
                Err(_) => {
                    return Err(MtxError::Budget { partial: cert.to_string() });
                }
            };
            let outcome = match &found.test {
                Test::Split(s, dir) => NodeOutcome::Split { sub_dim: s.len(), direction: *dir },
                Test::Irreducible(dir) => NodeOutcome::Irreducible { direction: *dir },
            };
            cert.nodes.push(NodeRecord {
                path: node.path.clone(),
                dim: node.module.dim(),
                attempts: found.attempts,
                word: found.word.clone(),
                factor_degree: found.degree,
                outcome,
            });
            match found.test {
                Test::Irreducible(_) => {
                    leaves.push((node.module, Subquotient { lower: node.lower, upper: node.upper }));
                }
                Test::Split(s, _) => {
                    let sm = s.to_matrix();
                    let sub = node.module.submodule(&sm)?;
                    let sub_upper = sm.mul(&node.upper)?;
                    let (quo, comp) = node.module.quotient(&s)?;
                    let quo_upper = node.upper.select_rows(&comp);
                    let mut quo_lower = node.lower.clone();
                    quo_lower.extend(sub_upper.row_list());
                    stack.push(Node {
                        path: format!("{}.1", node.path),
                        module: quo,
                        lower: quo_lower,
                        upper: quo_upper,
                    });
                    stack.push(Node {
                        path: format!("{}.0", node.path),
                        module: sub,
                        lower: node.lower,
                        upper: sub_upper,
                    });
                }
            }
        }
    }
    let mut factors: Vec<CompositionFactor> = Vec::new();
    let mut series = Vec::new();
    for (module, sq) in leaves {
        let mut idx = None;
        for (k, fc) in factors.iter().enumerate() {
            if fc.module.dim() == module.dim() && iso_irreducible(&fc.module, &module)?.is_some() {
                idx = Some(k);
                break;
            }
        }
        let k = match idx {
            Some(k) => {
                factors[k].multiplicity += 1;
                k
            }
            None => {
                factors.push(CompositionFactor { module, multiplicity: 1 });
                factors.len() - 1
            }
        };
        series.push((k, sq));
    }
    Ok(CompositionSeries { ambient_dim: m.dim(), factors, series, certificate: cert })
}

/// Re-runs `chop` with the certificate's seed and checks that the same
/// certificate is produced.
pub fn replay_certificate(m: &FGModule, cert: &ChopCertificate) -> Result<bool, MtxError> {
    Ok(chop(m, cert.seed)?.certificate == *cert)
}

/// Trace of the ambient matrix `x` on occurrence `occ` of the series.
/// `x` must stabilise the flag `R < L` of that occurrence.
pub fn factor_trace(series: &CompositionSeries, x: &GFMatrix, occ: usize) -> Result<Elem, MtxError> {
    let (_, sq) = series.series.get(occ).ok_or(MtxError::FactorIndex(occ))?;
    let f = x.field();
    let n = x.rows();
    if n != series.ambient_dim || !x.is_square() {
        return Err(MtxError::Shape("element does not act on the ambient space".into()));
    }
    let mut rows = sq.lower.clone();
    rows.extend(sq.upper.row_list());
    let cb = CoordBasis::new(&GFMatrix::from_rows(f, n, &rows))?;
    let r = sq.lower.len();
    let mut t: Elem = 0;
    for i in 0..sq.upper.rows() {
        let img = x.vec_mul(sq.upper.row(i));
        let c = cb.coordinates(&img).ok_or(MtxError::NotInvariant)?;
        t = f.add(t, c[r + i]);
    }
    Ok(t)
}

/// Action of ambient matrices on occurrence `occ`, as a module in that
/// occurrence's basis (fails if some matrix does not stabilise the flag).
pub fn occurrence_action(series: &CompositionSeries, occ: usize, extra: &[GFMatrix]) -> Result<FGModule, MtxError> {
    let (k, sq) = series.series.get(occ).ok_or(MtxError::FactorIndex(occ))?;
    let f = series.factors[*k].module.field();
    let n = series.ambient_dim;
    let mut rows = sq.lower.clone();
    rows.extend(sq.upper.row_list());
    let cb = CoordBasis::new(&GFMatrix::from_rows(f, n, &rows))?;
    let r = sq.lower.len();
    let d = sq.upper.rows();
    let mut mats = Vec::new();
    for x in extra {
        let mut m = GFMatrix::zeros(f, d, d);
        for i in 0..d {
            let c = cb.coordinates(&x.vec_mul(sq.upper.row(i))).ok_or(MtxError::NotInvariant)?;
            m.row_mut(i).copy_from_slice(&c[r..]);
        }
        mats.push(m);
    }
    let labels: Vec<String> = (1..=extra.len()).map(|i| format!("x{i}")).collect();
    FGModule::algebra(f, d, mats, labels)
}

/// Isomorphism test for irreducible modules by standard bases; returns an
/// intertwiner `T` with `g1 T = T g2` for all generators.
pub fn iso_irreducible(m1: &FGModule, m2: &FGModule) -> Result<Option<GFMatrix>, MtxError> {
    if m1.dim() != m2.dim() || m1.ngens() != m2.ngens() || m1.field() != m2.field() {
        return Ok(None);
    }
    let d = m1.dim();
    let f = m1.field().clone();
    if d == 0 {
        return Ok(Some(GFMatrix::zeros(&f, 0, 0)));
    }
    for (a, b) in m1.gens().iter().zip(m2.gens()) {
        if a.trace()? != b.trace()? {
            return Ok(None);
        }
    }
    let mut rng = node_rng(0x150, "iso");
    for _ in 0..SPLIT_BUDGET {
        let word = if m1.ngens() == 0 {
            AlgebraWord { terms: vec![] }
        } else {
            AlgebraWord::random(&mut rng, m1.ngens(), f.p())
        };
        let a1 = word.evaluate(m1)?;
        let a2 = word.evaluate(m2)?;
        let cp = charpoly(&a1)?;
        if charpoly(&a2)? != cp {
            return Ok(None);
        }
        let mut facs: Vec<Poly> = factor(&cp, &f).into_iter().map(|x| x.0).collect();
        facs.sort_by_key(|p| p.degree());
        for fp in facs {
            let deg = fp.degree().unwrap_or(0);
            let k1 = fp.eval_matrix(&a1)?.left_nullspace();
            if k1.rows() != deg {
                continue;
            }
            let k2 = fp.eval_matrix(&a2)?.left_nullspace();
            if k2.rows() != deg {
                return Ok(None);
            }
            let b1 = standard_basis(m1, k1.row(0));
            if b1.rows() != d {
                return Err(MtxError::NotIrreducible);
            }
            let b1i = b1.inverse()?;
            let std1: Vec<GFMatrix> =
                m1.gens().iter().map(|g| b1.mul(g)?.mul(&b1i)).collect::<Result<_, _>>()?;
            // candidates in k2 up to scalars: first nonzero coordinate 1
            let q = f.q() as usize;
            let total = q.pow(deg as u32);
            for code in 1..total {
                let mut coeffs = Vec::with_capacity(deg);
                let mut c = code;
                for _ in 0..deg {
                    coeffs.push((c % q) as Elem);
                    c /= q;
                }
                if coeffs.iter().find(|&&x| x != 0) != Some(&1) {
                    continue;
                }
                let mut v = vec![0; d];
                for (i, &c) in coeffs.iter().enumerate() {
                    if c != 0 {
                        crate::gfla::axpy(&f, &mut v, c, k2.row(i));
                    }
                }
                let b2 = standard_basis(m2, &v);
                if b2.rows() != d {
                    continue;
                }
                let b2i = b2.inverse()?;
                let mut same = true;
                for (g, s1) in m2.gens().iter().zip(&std1) {
                    if b2.mul(g)?.mul(&b2i)? != *s1 {
                        same = false;
                        break;
                    }
                }
                if same {
                    return Ok(Some(b1i.mul(&b2)?));
                }
            }
            return Ok(None);
        }
    }
    Err(MtxError::Budget { partial: "iso: no suitable algebra element".into() })
}

/// General isomorphism test: standard bases for irreducible inputs,
/// otherwise a search for an invertible element of the homomorphism space.
pub fn iso(m1: &FGModule, m2: &FGModule) -> Result<Option<GFMatrix>, MtxError> {
    if m1.dim() != m2.dim() || m1.ngens() != m2.ngens() || m1.field() != m2.field() {
        return Ok(None);
    }
    if is_irreducible(m1, 0)? {
        return iso_irreducible(m1, m2);
    }
    let hom = hom_space(m1, m2)?;
    if hom.is_empty() {
        return Ok(None);
    }
    let f = m1.field();
    let mut rng = node_rng(0x150, "hom");
    for _ in 0..SPLIT_BUDGET {
        let mut t = GFMatrix::zeros(f, m1.dim(), m1.dim());
        for h in &hom {
            let c = rng.gen_range(0..f.q()) as Elem;
            if c != 0 {
                t = t.add(&h.scale(c))?;
            }
        }
        if t.is_invertible() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Basis of `{T : g1 T = T g2 for all generators}`.
pub fn hom_space(m1: &FGModule, m2: &FGModule) -> Result<Vec<GFMatrix>, MtxError> {
    let (d1, d2) = (m1.dim(), m2.dim());
    let f = m1.field();
    let nvar = d1 * d2;
    // Row-major vec: vec(A T B) = vec(T) (A^T kron B).
    let mut cols: Vec<GFMatrix> = Vec::new();
    for (g1, g2) in m1.gens().iter().zip(m2.gens()) {
        let left = g1.transpose().kron(&GFMatrix::identity(f, d2))?;
        let right = GFMatrix::identity(f, d1).kron(g2)?;
        cols.push(left.sub(&right)?);
    }
    let mut big = GFMatrix::zeros(f, nvar, nvar * cols.len());
    for (k, c) in cols.iter().enumerate() {
        for i in 0..nvar {
            big.row_mut(i)[k * nvar..(k + 1) * nvar].copy_from_slice(c.row(i));
        }
    }
    let ker = if cols.is_empty() { GFMatrix::identity(f, nvar) } else { big.left_nullspace() };
    Ok((0..ker.rows())
        .map(|i| GFMatrix::from_vec(f, d1, d2, ker.row_vec(i)).expect("shape"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mtxcond::permutation_matrix;
    use crate::permgrp::{catalog, Perm};

    fn perm_module(p: u32, perms: &[Perm]) -> FGModule {
        FGModule::permutation(&FieldSpec::prime(p).unwrap(), perms).unwrap()
    }

    /// Factor dimensions by exhaustive search: spin every vector to find a
    /// minimal submodule, then recurse into the quotient.
    fn brute_dims(m: &FGModule) -> Vec<usize> {
        let d = m.dim();
        if d == 0 {
            return vec![];
        }
        let q = m.field().q() as usize;
        let mut best: Option<Echelon> = None;
        for code in 1..q.pow(d as u32) {
            let mut v = vec![0; d];
            let mut c = code;
            for x in v.iter_mut() {
                *x = (c % q) as Elem;
                c /= q;
            }
            let s = spin(m, &v).unwrap();
            if best.as_ref().map_or(true, |b| s.len() < b.len()) {
                best = Some(s);
            }
        }
        let s = best.unwrap();
        let mut out = vec![s.len()];
        if s.len() < d {
            let (quo, _) = m.quotient(&s).unwrap();
            out.extend(brute_dims(&quo));
        }
        out.sort_unstable();
        out
    }

    fn flat_dims(s: &CompositionSeries) -> Vec<usize> {
        let mut v: Vec<usize> = s.series.iter().map(|(k, _)| s.factors[*k].module.dim()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn natural_s4_module_mod_3() {
        let g = catalog::symmetric(4);
        let m = perm_module(3, g.gens());
        let s = chop(&m, 1).unwrap();
        assert_eq!(flat_dims(&s), vec![1, 3]);
        assert_eq!(brute_dims(&m), vec![1, 3]);
    }

    #[test]
    fn regular_c2_mod_3() {
        let c2 = Perm::from_cycles(2, &[&[1, 2]]).unwrap();
        let m = perm_module(3, &[c2]);
        let s = chop(&m, 0).unwrap();
        assert_eq!(flat_dims(&s), vec![1, 1]);
        assert_eq!(s.factors.len(), 2, "trivial and sign are distinct");
    }

    #[test]
    fn chop_is_seed_deterministic() {
        let g = catalog::symmetric(5);
        let m = perm_module(2, g.gens());
        let a = chop(&m, 7).unwrap();
        let b = chop(&m, 7).unwrap();
        assert_eq!(a.certificate, b.certificate);
        assert!(replay_certificate(&m, &a.certificate).unwrap());
        let c = chop(&m, 8).unwrap();
        assert_eq!(a.dims(), c.dims());
    }

    #[test]
    fn spin_examples() {
        let g = catalog::symmetric(4);
        let m = perm_module(3, g.gens());
        assert_eq!(spin(&m, &[1, 1, 1, 1]).unwrap().len(), 1);
        assert_eq!(spin(&m, &[1, 0, 0, 0]).unwrap().len(), 4);
        assert!(spin(&m, &[0, 0, 0, 0]).is_err());
        let s = spin(&m, &[1, 2, 0, 0]).unwrap();
        assert!(m.is_invariant(&s.to_matrix()));
    }

    #[test]
    fn iso_of_conjugated_copy() {
        let g = catalog::symmetric(4);
        let m = perm_module(5, g.gens());
        let s = chop(&m, 3).unwrap();
        let three = s.factors.iter().find(|f| f.module.dim() == 3).unwrap().module.clone();
        let f = FieldSpec::prime(5).unwrap();
        let b = GFMatrix::from_int_rows(&f, &[vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let conj = three.change_basis(&b).unwrap();
        let t = iso(&three, &conj).unwrap().expect("isomorphic");
        for (g1, g2) in three.gens().iter().zip(conj.gens()) {
            assert_eq!(g1.mul(&t).unwrap(), t.mul(g2).unwrap());
        }
        assert!(iso(&three, &three).unwrap().is_some());
        let triv = s.factors.iter().find(|f| f.module.dim() == 1).unwrap().module.clone();
        assert!(iso(&three, &triv).unwrap().is_none());
        // reducible input goes through the Hom space
        let mc = m.change_basis(&permutation_matrix(&f, &g.gens()[1])).unwrap();
        assert!(iso(&m, &mc).unwrap().is_some());
    }

    #[test]
    fn factor_traces_of_identity() {
        let g = catalog::symmetric(4);
        let m = perm_module(3, g.gens());
        let s = chop(&m, 0).unwrap();
        let id = GFMatrix::identity(m.field(), 4);
        for occ in 0..s.series.len() {
            let d = s.factors[s.series[occ].0].module.dim();
            assert_eq!(factor_trace(&s, &id, occ).unwrap(), (d % 3) as Elem);
        }
        assert!(factor_trace(&s, &id, 9).is_err());
    }
}
