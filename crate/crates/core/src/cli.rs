//! Command-line front end. `main.rs` only forwards to [`run`].

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::brauer::{
    self, brute_force_decomposition, clifford_oracle, decompose_block, default_recipes, expand_nonbasic, parse_decmat, parse_facts,
    parse_relmat, solve_parameters, write_decmat, write_relmat, BrauerError, DecMat, EllSource, Fact, PeelMode, Provenance,
    RelationsMatrix, TensorRecipe,
};
use crate::chartab::{dixon_schneider, parse_table, ChartabError, CharacterTable};
use crate::exact::ExactError;
use crate::gfla::{write_matrix, FieldSpec, GFMatrix, GfError};
use crate::mtxcond::{chop, factor_trace, parse_module, FGModule, MatrixCondensation, MtxError, PermCondensation};
use crate::permgrp::{
    closure, coset_distribution, eval_word, parse_perm_blocks, parse_perms, steinberg_element_module, BNData, Enumeration,
    InvariantSpec, Perm, PermError, PermGroup,
};

#[derive(Parser, Debug)]
#[command(name = "modchar", version, about = "Decomposition matrices, condensation and MeatAxe tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// write the report here (atomically) instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a CHARTAB file against the table invariants
    ValidateTable { file: PathBuf },
    /// Decomposition matrix of a block, or parameter resolution on DECMAT data
    Decompose(DecomposeArgs),
    /// Fixed-point condensation followed by a MeatAxe chop
    Condense(CondenseArgs),
    /// Distribution of the coset yV over class invariants
    CosetClassify(CosetArgs),
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// CHARTAB file
    #[arg(long, conflicts_with = "group")]
    pub table: Option<PathBuf>,
    /// permutation group file; the table is computed from it
    #[arg(long)]
    pub group: Option<PathBuf>,
    #[arg(long)]
    pub prime: Option<u32>,
    /// comma-separated basic-set character names
    #[arg(long, value_delimiter = ',')]
    pub basic: Vec<String>,
    /// number of Brauer characters of the block, overriding the computed rank
    #[arg(long)]
    pub ell: Option<usize>,
    /// projective recipe `d0:chi` (defect-zero character times chi); default all
    #[arg(long = "tensor")]
    pub tensors: Vec<String>,
    /// compare with the brute-force matrix (needs --group)
    #[arg(long)]
    pub oracle: bool,
    /// index-2 overgroup of --group: predict its matrix by Clifford splitting
    #[arg(long, requires = "group")]
    pub extension: Option<PathBuf>,
    /// shipped data set: mod3-b1, mod7-b1 or mod7-b1-traces
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long)]
    pub decmat: Option<PathBuf>,
    #[arg(long)]
    pub relmat: Option<PathBuf>,
    /// further projective columns referenced as P1, P2, ... in facts
    #[arg(long)]
    pub proj: Option<PathBuf>,
    #[arg(long = "facts")]
    pub facts: Vec<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CondenseArgs {
    /// permutation group file; alone it selects the permutation module
    #[arg(long)]
    pub group: Option<PathBuf>,
    /// three PERM blocks: generators of G, the elements of U, Coxeter generators
    #[arg(long, conflicts_with_all = ["group", "module"])]
    pub steinberg: Option<PathBuf>,
    /// FGMOD file whose generators are those of --group
    #[arg(long, requires = "group")]
    pub module: Option<PathBuf>,
    /// generators of the condensation subgroup; omitted means V = 1
    #[arg(long)]
    pub v: Option<PathBuf>,
    /// words in the generators to condense; default every generator
    #[arg(long = "element")]
    pub elements: Vec<String>,
    #[arg(long)]
    pub prime: u32,
}

#[derive(Args, Debug)]
pub struct CosetArgs {
    #[arg(long)]
    pub group: PathBuf,
    /// word in the generators, e.g. `g1*g2^-1`
    #[arg(long)]
    pub y: String,
    /// generators of V
    #[arg(long)]
    pub v: PathBuf,
    #[arg(long)]
    pub centralizer: bool,
    #[arg(long)]
    pub power_maps: bool,
    #[arg(long)]
    pub fixed_points: bool,
    /// name the classes hit (enumerates the group)
    #[arg(long)]
    pub classes: bool,
}

/// Failure of a command with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// unreadable or malformed input: exit 2
    Input(String),
    /// mathematically inconsistent data or a failed check: exit 1
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Domain(m) => m,
        }
    }
}

fn gf_parse(e: &GfError) -> bool {
    matches!(e, GfError::Parse(_) | GfError::BadField(_))
}

fn mtx_parse(e: &MtxError) -> bool {
    match e {
        MtxError::Parse(_) => true,
        MtxError::Gf(g) => gf_parse(g),
        _ => false,
    }
}

fn chartab_parse(e: &ChartabError) -> bool {
    matches!(e, ChartabError::Parse { .. })
}

fn exact_parse(e: &ExactError) -> bool {
    matches!(e, ExactError::Parse(_) | ExactError::UnknownParam(_))
}

fn brauer_parse(e: &BrauerError) -> bool {
    match e {
        BrauerError::Parse { .. } | BrauerError::Label(_) => true,
        BrauerError::Exact(x) => exact_parse(x),
        BrauerError::Chartab(x) => chartab_parse(x),
        BrauerError::Mtx(x) => mtx_parse(x),
        _ => false,
    }
}

/// Tags an error with the stage it came from and classifies it.
trait Stage<T> {
    fn stage(self, tag: &str) -> Result<T, CliError>;
}

macro_rules! stage_impl {
    ($t:ty, $is_input:expr) => {
        impl<T> Stage<T> for Result<T, $t> {
            fn stage(self, tag: &str) -> Result<T, CliError> {
                self.map_err(|e| {
                    let msg = format!("{tag}: {e}");
                    if $is_input(&e) {
                        CliError::Input(msg)
                    } else {
                        CliError::Domain(msg)
                    }
                })
            }
        }
    };
}

stage_impl!(BrauerError, brauer_parse);
stage_impl!(ChartabError, chartab_parse);
stage_impl!(MtxError, mtx_parse);
stage_impl!(GfError, gf_parse);
stage_impl!(PermError, |e: &PermError| matches!(e, PermError::Parse(_) | PermError::DegreeMismatch | PermError::NotBijection));

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// Writes `data` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, data: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(data.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// A finished report. `ok == false` still prints the report but exits 1.
pub struct Report {
    pub text: String,
    pub structured: serde_json::Value,
    pub ok: bool,
}

fn report<T: Serialize>(text: String, data: &T, ok: bool) -> Report {
    Report { text, structured: serde_json::to_value(data).expect("report serializes"), ok }
}

// ---------------------------------------------------------------- validate

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IssueOut {
    pub line: Option<usize>,
    pub message: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ValidateOut {
    pub name: String,
    pub classes: usize,
    pub characters: usize,
    pub valid: bool,
    pub issues: Vec<IssueOut>,
}

pub fn cmd_validate_table(path: &Path) -> Result<Report, CliError> {
    let text = read(path)?;
    let (t, lines) = parse_table(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let issues: Vec<IssueOut> = t
        .validate()
        .into_iter()
        .map(|i| {
            let line = i
                .character
                .and_then(|c| lines.characters.get(c).copied())
                .or_else(|| i.power.and_then(|p| lines.power_maps.get(&p).copied()))
                .or_else(|| i.class.and_then(|c| lines.classes.get(c).copied()));
            IssueOut { line, message: i.message }
        })
        .collect();
    let out = ValidateOut { name: t.name.clone(), classes: t.nclasses(), characters: t.irreducibles.len(), valid: issues.is_empty(), issues };
    let mut s = String::new();
    for i in &out.issues {
        match i.line {
            Some(l) => writeln!(s, "{}:{l}: {}", path.display(), i.message).unwrap(),
            None => writeln!(s, "{}: {}", path.display(), i.message).unwrap(),
        }
    }
    let verdict = if out.valid { "valid" } else { "invalid" };
    writeln!(s, "{}: table {} with {} classes is {verdict}", path.display(), out.name, out.classes).unwrap();
    let ok = out.valid;
    Ok(report(s, &out, ok))
}

// --------------------------------------------------------------- decompose

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ColumnOut {
    pub source: String,
    pub coords: Vec<i64>,
    /// multiplicities of earlier columns peeled off the source
    pub peeled: Vec<i64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BlockOut {
    pub table: String,
    pub prime: u32,
    pub block: String,
    pub defect: u32,
    pub basic: Vec<String>,
    pub ell: usize,
    pub ell_overridden: bool,
    pub relations: String,
    pub decmat: String,
    pub full: String,
    pub columns: Vec<ColumnOut>,
    pub unitriangular: bool,
    /// `exact`, `projective` (columns are sums of true PIMs) or `mismatch`
    pub oracle: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactOut {
    pub label: String,
    pub eliminated: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ParamsOut {
    pub block: String,
    pub params: String,
    pub constraints: String,
    pub admissible: usize,
    pub facts: Vec<FactOut>,
    pub survivors: Vec<BTreeMap<String, i64>>,
    pub domains: Vec<(String, i64, i64)>,
    /// symbolic expansion of the non-basic rows, when a relations matrix is given
    pub full: Option<String>,
    /// the expansion is nonnegative at every survivor
    pub full_nonnegative: Option<bool>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ExtensionOut {
    pub subgroup: String,
    pub extension: String,
    pub prime: u32,
    pub field_order: u32,
    pub cases: Vec<String>,
    pub predicted: Vec<Vec<i64>>,
    pub brute_force: Vec<Vec<i64>>,
    pub survivors: usize,
    pub cases_consistent: bool,
    pub matches: bool,
}

fn load_group(path: &Path) -> Result<PermGroup, CliError> {
    let (n, gens) = parse_perms(&read(path)?).stage(&path.display().to_string())?;
    PermGroup::new(n, gens).stage("group")
}

fn char_index(t: &CharacterTable, name: &str) -> Result<usize, CliError> {
    t.char_index(name).ok_or_else(|| input(format!("no character named `{name}` in table {}", t.name)))
}

fn provenance(p: &Provenance) -> String {
    match p {
        Provenance::Tensor { defect_zero, other } => format!("{defect_zero} x {other}"),
        Provenance::Induced { from, character } => format!("{character} induced from {from}"),
        Provenance::Combination(s) => s.clone(),
    }
}

fn group_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "G".into())
}

pub fn cmd_decompose(a: &DecomposeArgs, seed: u64) -> Result<Report, CliError> {
    let table_mode = a.table.is_some() || a.group.is_some();
    let fixture_mode = a.fixture.is_some() || a.decmat.is_some();
    match (table_mode, fixture_mode) {
        (true, true) => Err(input("give either a table/group or DECMAT data, not both")),
        (false, false) => Err(input("nothing to decompose: give --table, --group, --fixture or --decmat")),
        (false, true) => decompose_params(a),
        (true, false) if a.extension.is_some() => decompose_extension(a, seed),
        (true, false) => decompose_table(a, seed),
    }
}

fn decompose_table(a: &DecomposeArgs, seed: u64) -> Result<Report, CliError> {
    let p = a.prime.ok_or_else(|| input("--prime is required"))?;
    if a.basic.is_empty() {
        return Err(input("--basic is required"));
    }
    let (t, group) = match (&a.table, &a.group) {
        (Some(path), _) => {
            let (t, _) = parse_table(&read(path)?).stage(&path.display().to_string())?;
            t.check().stage("table")?;
            (t, None)
        }
        (None, Some(path)) => {
            let g = load_group(path)?;
            let (t, cl) = dixon_schneider(&g, &group_name(path)).stage("character table")?;
            (t, Some((g, cl)))
        }
        (None, None) => unreachable!("table mode"),
    };
    let basic = a.basic.iter().map(|n| char_index(&t, n)).collect::<Result<Vec<_>, _>>()?;
    let recipes: Vec<TensorRecipe> = if a.tensors.is_empty() {
        default_recipes(&t, p as u64)
    } else {
        a.tensors
            .iter()
            .map(|r| {
                let (x, y) = r.split_once(':').ok_or_else(|| input(format!("recipe `{r}` is not `d0:chi`")))?;
                Ok((char_index(&t, x)?, char_index(&t, y)?))
            })
            .collect::<Result<_, CliError>>()?
    };
    let dec = decompose_block(&t, p, &basic, a.ell, &recipes).stage("decompose")?;
    let oracle = if a.oracle {
        let (g, cl) = group.as_ref().ok_or_else(|| input("--oracle needs --group"))?;
        let bf = brute_force_decomposition(g, &t, cl, p, None, seed).stage("oracle")?;
        Some(compare_with_oracle(&t, &dec.full, &bf.d)?)
    } else {
        None
    };
    let out = BlockOut {
        table: t.name.clone(),
        prime: p,
        block: dec.basic.block.clone(),
        defect: dec.basic_set.block.defect,
        basic: dec.basic_set.names.clone(),
        ell: dec.basic_set.ell,
        ell_overridden: dec.basic_set.ell_source == EllSource::Override,
        relations: write_relmat(&dec.relations),
        decmat: write_decmat(&dec.basic),
        full: write_decmat(&dec.full),
        columns: dec
            .columns
            .iter()
            .map(|c| ColumnOut { source: provenance(&c.source.provenance), coords: c.coords.clone(), peeled: c.certificate.multiplicities.clone() })
            .collect(),
        unitriangular: dec.unitriangular,
        oracle,
    };
    let mut s = String::new();
    writeln!(s, "table {} p = {} block {} (defect {})", out.table, p, out.block, out.defect).unwrap();
    writeln!(s, "basic set {} (ell = {}{})", out.basic.join(" "), out.ell, if out.ell_overridden { ", given" } else { "" }).unwrap();
    for (j, c) in out.columns.iter().enumerate() {
        writeln!(s, "column {}: {} from {} peeled {:?}", j + 1, fmt_vec(&c.coords), c.source, c.peeled).unwrap();
    }
    if !out.unitriangular {
        writeln!(s, "warning: some lead entry is not 1").unwrap();
    }
    s.push_str(&out.relations);
    s.push_str(&out.decmat);
    s.push_str(&out.full);
    if let Some(o) = &out.oracle {
        writeln!(s, "oracle: {o}").unwrap();
    }
    let ok = out.oracle.as_deref() != Some("mismatch");
    Ok(report(s, &out, ok))
}

fn fmt_vec(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

fn compare_with_oracle(t: &CharacterTable, full: &DecMat, d: &[Vec<i64>]) -> Result<String, CliError> {
    let got = full.matrix.to_ints().ok_or_else(|| CliError::Domain("matrix is not numeric".into()))?;
    let rows = full.matrix.rows.iter().map(|n| char_index(t, n)).collect::<Result<Vec<_>, _>>()?;
    let ncols = d.first().map_or(0, Vec::len);
    let mut want: Vec<Vec<i64>> =
        (0..ncols).filter(|&j| rows.iter().any(|&r| d[r][j] != 0)).map(|j| rows.iter().map(|&r| d[r][j]).collect()).collect();
    let mut have: Vec<Vec<i64>> = (0..full.matrix.ncols).map(|j| got.iter().map(|r| r[j]).collect()).collect();
    want.sort();
    have.sort();
    if have == want {
        return Ok("exact".into());
    }
    let combos = have.len() == want.len()
        && have.iter().all(|h| {
            brauer::peel_pims(h, &want, PeelMode::Forced).map_or(false, |c| c.remainder.iter().all(|&x| x == 0))
        });
    Ok(if combos { "projective".into() } else { "mismatch".into() })
}

fn decompose_extension(a: &DecomposeArgs, seed: u64) -> Result<Report, CliError> {
    let p = a.prime.ok_or_else(|| input("--prime is required"))?;
    let hp = a.group.as_ref().expect("required by clap");
    let gp = a.extension.as_ref().expect("checked");
    let h = load_group(hp)?;
    let g = load_group(gp)?;
    let (hn, gn) = (group_name(hp), group_name(gp));
    let r = clifford_oracle(&h, &g, (&hn, &gn), p, seed).stage("clifford")?;
    let out = ExtensionOut {
        subgroup: hn,
        extension: gn,
        prime: p,
        field_order: r.field_order,
        cases: r.cases.iter().map(|c| format!("{:?} over {:?}", c.kind, c.over)).collect(),
        predicted: r.predicted.clone(),
        brute_force: r.d_ht.clone(),
        survivors: r.survivors,
        cases_consistent: r.cases_consistent,
        matches: r.matches,
    };
    let mut s = String::new();
    writeln!(s, "{} in {} p = {} over GF({})", out.subgroup, out.extension, p, out.field_order).unwrap();
    for (i, c) in out.cases.iter().enumerate() {
        writeln!(s, "block {}: {c}", i + 1).unwrap();
    }
    writeln!(s, "predicted matrix of {}:", out.extension).unwrap();
    for row in &out.predicted {
        writeln!(s, "  {}", fmt_vec(row)).unwrap();
    }
    writeln!(s, "survivors {} cases consistent {} matches brute force {}", out.survivors, out.cases_consistent, out.matches).unwrap();
    let ok = out.matches && out.cases_consistent;
    Ok(report(s, &out, ok))
}

struct ParamData {
    d: DecMat,
    rel: Option<RelationsMatrix>,
    proj: Option<DecMat>,
    facts: Vec<Fact>,
}

fn fixture_data(name: &str) -> Result<ParamData, CliError> {
    let f = brauer::fixtures::mod7_condensed_factors();
    f.stage("fixture")?;
    let s = "fixture";
    Ok(match name {
        "mod3-b1" => ParamData {
            d: brauer::fixtures::mod3_b1().stage(s)?,
            rel: Some(brauer::fixtures::mod3_b1_relations().stage(s)?),
            proj: Some(brauer::fixtures::mod3_b1_projectives().stage(s)?),
            facts: brauer::fixtures::mod3_b1_facts().stage(s)?,
        },
        "mod7-b1" | "mod7-b1-traces" => {
            let mut facts = brauer::fixtures::mod7_projective_facts().stage(s)?;
            if name.ends_with("traces") {
                facts.extend(brauer::fixtures::mod7_trace_facts().stage(s)?);
            }
            ParamData { d: brauer::fixtures::mod7_b1().stage(s)?, rel: None, proj: Some(brauer::fixtures::mod7_b1_projectives().stage(s)?), facts }
        }
        other => return Err(input(format!("unknown fixture `{other}` (mod3-b1, mod7-b1, mod7-b1-traces)"))),
    })
}

fn decompose_params(a: &DecomposeArgs) -> Result<Report, CliError> {
    let mut data = match &a.fixture {
        Some(n) => fixture_data(n)?,
        None => ParamData { d: DecMat { block: String::new(), sys: Default::default(), matrix: brauer::ParamMatrix::from_ints(vec![], &[]).stage("decmat")? }, rel: None, proj: None, facts: vec![] },
    };
    if let Some(p) = &a.decmat {
        data.d = parse_decmat(&read(p)?).stage(&p.display().to_string())?;
        if a.fixture.is_some() {
            data.facts.clear();
        }
    }
    if let Some(p) = &a.relmat {
        data.rel = Some(parse_relmat(&read(p)?).stage(&p.display().to_string())?);
    }
    if let Some(p) = &a.proj {
        data.proj = Some(parse_decmat(&read(p)?).stage(&p.display().to_string())?);
    }
    for p in &a.facts {
        let f = parse_facts(&read(p)?, &data.d, data.proj.as_ref()).stage(&p.display().to_string())?;
        data.facts.extend(f);
    }
    let mut sys = data.d.sys.clone();
    if let Some(pr) = &data.proj {
        sys.merge(&pr.sys).map_err(|e| CliError::Domain(format!("parameters: {e}")))?;
    }
    let admissible = crate::exact::param_solve(&sys).len();
    let sr = solve_parameters(&sys, &data.facts).stage("facts")?;
    let (full, full_nonnegative) = match &data.rel {
        Some(y) => {
            let f = expand_nonbasic(&data.d, y).stage("expansion")?;
            let mut nonneg = true;
            for s in &sr.survivors {
                let m = f.matrix.specialize(s).stage("expansion")?;
                nonneg &= m.iter().flatten().all(|&v| v >= 0);
            }
            (Some(write_decmat(&f)), Some(nonneg))
        }
        None => (None, None),
    };
    let out = ParamsOut {
        block: data.d.block.clone(),
        params: sys.format_params(),
        constraints: sys.format_constraints(),
        admissible,
        facts: sr.per_fact.iter().map(|f| FactOut { label: f.label.clone(), eliminated: f.eliminated }).collect(),
        survivors: sr.survivors.clone(),
        domains: sr.domains.clone(),
        full,
        full_nonnegative,
    };
    let mut s = String::new();
    writeln!(s, "block {} params {{{}}} constraints {{{}}}: {} admissible", out.block, out.params, out.constraints, admissible).unwrap();
    for f in &out.facts {
        writeln!(s, "fact {}: eliminated {}", f.label, f.eliminated).unwrap();
    }
    writeln!(s, "{} survivor(s)", out.survivors.len()).unwrap();
    for a in &out.survivors {
        let kv: Vec<String> = a.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(s, "  {}", kv.join(" ")).unwrap();
    }
    for (n, lo, hi) in &out.domains {
        if lo == hi {
            writeln!(s, "{n} = {lo}").unwrap();
        } else {
            writeln!(s, "{n} in [{lo}, {hi}]").unwrap();
        }
    }
    if let Some(f) = &out.full {
        s.push_str(f);
        writeln!(s, "expansion nonnegative at survivors: {}", out.full_nonnegative.unwrap_or(false)).unwrap();
    }
    let ok = out.full_nonnegative != Some(false);
    Ok(report(s, &out, ok))
}

// ---------------------------------------------------------------- condense

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FactorOut {
    pub dim: usize,
    pub multiplicity: usize,
    /// trace of each condensed element on the first occurrence
    pub traces: Vec<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CondenseOut {
    pub prime: u32,
    pub seed: u64,
    pub module: String,
    pub module_dim: usize,
    pub v_order: usize,
    pub condensed_dim: usize,
    pub elements: Vec<String>,
    pub matrices: Vec<String>,
    pub factors: Vec<FactorOut>,
    pub certificate: String,
}

fn load_v(path: Option<&PathBuf>, degree: usize) -> Result<Vec<Perm>, CliError> {
    match path {
        None => Ok(vec![Perm::identity(degree)]),
        Some(p) => {
            let (n, gens) = parse_perms(&read(p)?).stage(&p.display().to_string())?;
            if n != degree {
                return Err(input(format!("{}: degree {n}, expected {degree}", p.display())));
            }
            closure(n, &gens).stage("V")
        }
    }
}

fn perm_matrix(m: &FGModule, en: &Enumeration, x: &Perm) -> Result<GFMatrix, CliError> {
    let i = en.index_of(x).ok_or_else(|| CliError::Domain("element is not in the group".into()))?;
    let w: Vec<(usize, i64)> = en.word(i).into_iter().map(|g| (g, 1)).collect();
    m.word_matrix(&w).stage("module")
}

pub fn cmd_condense(a: &CondenseArgs, seed: u64) -> Result<Report, CliError> {
    let field = FieldSpec::prime(a.prime).stage("field")?;
    let (g, module, label) = match (&a.steinberg, &a.group, &a.module) {
        (Some(path), _, _) => {
            let blocks = parse_perm_blocks(&read(path)?).stage(&path.display().to_string())?;
            let [(n, gens), (_, u), (_, cox)] = <[_; 3]>::try_from(blocks)
                .map_err(|b: Vec<_>| input(format!("{}: expected 3 PERM blocks, found {}", path.display(), b.len())))?;
            let g = PermGroup::new(n, gens).stage("group")?;
            let bn = BNData::new(g.clone(), u, cox).stage("BN data")?;
            let m = steinberg_element_module(&bn, &field).stage("Steinberg module")?;
            (g, Some(m), "Steinberg".to_string())
        }
        (None, Some(gp), Some(mp)) => {
            let g = load_group(gp)?;
            let m = parse_module(&read(mp)?).stage(&mp.display().to_string())?;
            if m.field() != &field {
                return Err(input(format!("{}: module is not over GF({})", mp.display(), a.prime)));
            }
            if m.ngens() != g.gens().len() {
                return Err(input("module and group have different numbers of generators"));
            }
            (g, Some(m), mp.display().to_string())
        }
        (None, Some(gp), None) => (load_group(gp)?, None, "permutation".to_string()),
        (None, None, _) => return Err(input("give --group or --steinberg")),
    };
    let n = g.degree();
    let v = load_v(a.v.as_ref(), n)?;
    let words: Vec<String> = if a.elements.is_empty() { (1..=g.gens().len()).map(|i| format!("g{i}")).collect() } else { a.elements.clone() };
    let elems = words.iter().map(|w| eval_word(n, g.gens(), w)).collect::<Result<Vec<_>, _>>().stage("elements")?;
    let (module_dim, condensed) = match &module {
        None => {
            let c = PermCondensation::new(&field, n, &v).stage("condensation")?;
            (n, c.condense_module(&elems).stage("condensation")?)
        }
        Some(m) => {
            let en = g.elements().stage("group")?;
            let vm = v.iter().map(|x| perm_matrix(m, &en, x)).collect::<Result<Vec<_>, _>>()?;
            let em = elems.iter().map(|x| perm_matrix(m, &en, x)).collect::<Result<Vec<_>, _>>()?;
            let c = MatrixCondensation::new(&vm).stage("condensation")?;
            (m.dim(), c.condense_module(&em).stage("condensation")?)
        }
    };
    let series = chop(&condensed, seed).stage("chop")?;
    let mut factors = Vec::new();
    for (k, f) in series.factors.iter().enumerate() {
        let occ = *series.occurrences(k).first().ok_or_else(|| CliError::Domain(format!("factor {k} has no occurrence")))?;
        let traces = condensed.gens().iter().map(|x| factor_trace(&series, x, occ).map(|t| t as u64)).collect::<Result<Vec<_>, _>>().stage("traces")?;
        factors.push(FactorOut { dim: f.module.dim(), multiplicity: f.multiplicity, traces });
    }
    let out = CondenseOut {
        prime: a.prime,
        seed,
        module: label,
        module_dim,
        v_order: v.len(),
        condensed_dim: condensed.dim(),
        elements: words,
        matrices: condensed.gens().iter().map(write_matrix).collect(),
        factors,
        certificate: series.certificate.to_string(),
    };
    let mut s = String::new();
    writeln!(s, "{} module of dim {} over GF({}), |V| = {}, condensed dim {}", out.module, out.module_dim, out.prime, out.v_order, out.condensed_dim).unwrap();
    for (w, m) in out.elements.iter().zip(&out.matrices) {
        writeln!(s, "condensed {w}:").unwrap();
        s.push_str(m);
    }
    s.push_str(&out.certificate);
    writeln!(s, "factors (dim x multiplicity: traces of {}):", out.elements.join(" ")).unwrap();
    for f in &out.factors {
        let t: Vec<String> = f.traces.iter().map(|x| x.to_string()).collect();
        writeln!(s, "  {} x {}: {}", f.dim, f.multiplicity, t.join(" ")).unwrap();
    }
    Ok(report(s, &out, true))
}

// ------------------------------------------------------------------- coset

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CosetOut {
    pub size: usize,
    pub orders: BTreeMap<u64, usize>,
    pub invariants: Vec<(String, usize)>,
    pub classes: Option<BTreeMap<String, usize>>,
    pub ambiguities: Vec<(String, Vec<String>)>,
    pub notes: Vec<String>,
}

pub fn cmd_coset_classify(a: &CosetArgs) -> Result<Report, CliError> {
    let g = load_group(&a.group)?;
    let n = g.degree();
    let y = eval_word(n, g.gens(), &a.y).stage("y")?;
    let v = load_v(Some(&a.v), n)?;
    let spec = InvariantSpec { centralizer: a.centralizer, power_maps: a.power_maps, fixed_points: a.fixed_points };
    let classes = if a.classes || a.centralizer || a.power_maps { Some(g.conjugacy_classes().stage("classes")?) } else { None };
    let r = coset_distribution(&g, &y, &v, spec, classes.as_ref()).stage("coset")?;
    let out = CosetOut {
        size: r.size,
        orders: r.order_distribution.clone(),
        invariants: r.invariant_distribution.iter().map(|(k, c)| (k.to_string(), *c)).collect(),
        classes: r.classified.clone(),
        ambiguities: r.ambiguities.iter().map(|(k, c)| (k.to_string(), c.clone())).collect(),
        notes: r.notes.clone(),
    };
    Ok(report(r.to_string(), &out, true))
}

// ------------------------------------------------------------------ driver

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::ValidateTable { file } => cmd_validate_table(file),
        Command::Decompose(a) => cmd_decompose(a, cli.common.seed),
        Command::Condense(a) => cmd_condense(a, cli.common.seed),
        Command::CosetClassify(a) => cmd_coset_classify(a),
    }
}

/// Parses arguments, runs the command, writes the report and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let r = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return e.code();
        }
    };
    let body = match cli.common.format {
        Format::Text => r.text.clone(),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&r.structured).expect("json");
            s.push('\n');
            s
        }
    };
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, &body) {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{body}"),
    }
    if r.ok {
        0
    } else {
        1
    }
}
