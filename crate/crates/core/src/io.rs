//! The TOML structure-file format, fixture generation and field dispatch.
//!
//! A file names a field, a category table, one `[[block]]` per morphism
//! (basis labels, comultiplication, counit), sparse `[[product]]` and
//! `[[unit]]` entries, and optionally modules, representations and an
//! R-matrix. Entries are `[row label, column label, scalar]`; a basis vector
//! of a tensor product is written `x*y`, with compound factors in
//! parentheses. Absent entries are zero.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::PolyadError;
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::fincat::{standard_category, FinCategory, FunctorData, GroupTable, Mor, Obj, RawCategory, RawFunctor, StandardKind};
use crate::fixtures::{self, Bialgebra};
use crate::matrix::Matrix;
use crate::modrep::{PolyModule, PolyRepresentation};
use crate::polyalg::{Polyalgebra, Polybialgebra};
use crate::space::LabeledSpace;
use crate::wrapup::TotalAlgebra;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed structure file (line {line}): {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Structure(#[from] PolyadError),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("cannot read `{path}`: {source}")]
    Read { path: String, source: std::io::Error },
}

type IoResult<T> = std::result::Result<T, IoError>;

fn shape_err(msg: impl Into<String>) -> IoError {
    IoError::Structure(PolyadError::ShapeMismatch(msg.into()))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub category: RawCategory,
    #[serde(default)]
    pub block: Vec<RawBlock>,
    #[serde(default)]
    pub product: Vec<RawProduct>,
    #[serde(default)]
    pub unit: Vec<RawUnit>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub module: Vec<RawModule>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub representation: Vec<RawRepresentation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rmatrix: Vec<RawColumn>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBlock {
    pub morphism: String,
    pub labels: Vec<String>,
    #[serde(default)]
    pub comult: Vec<[String; 3]>,
    /// `[column label, scalar]`
    #[serde(default)]
    pub counit: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawProduct {
    pub pair: [String; 2],
    #[serde(default)]
    pub entries: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawUnit {
    pub object: String,
    /// `[row label, scalar]`
    #[serde(default)]
    pub entries: Vec<[String; 2]>,
}

/// A column vector attached to an object (used for R-matrices).
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawColumn {
    pub object: String,
    #[serde(default)]
    pub entries: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawObjectSpace {
    pub object: String,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMorphismSpace {
    pub morphism: String,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMorphismMap {
    pub morphism: String,
    #[serde(default)]
    pub entries: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawObjectMap {
    pub object: String,
    #[serde(default)]
    pub entries: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPairMap {
    pub pair: [String; 2],
    #[serde(default)]
    pub entries: Vec<[String; 3]>,
}

/// A module; with `coactions` it is read as a Hopf module, where the
/// coacting space at `i` has basis `a:label` over the arrows `a` into `i`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModule {
    pub name: String,
    pub spaces: Vec<RawObjectSpace>,
    #[serde(default)]
    pub actions: Vec<RawMorphismMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coactions: Option<Vec<RawObjectMap>>,
}

/// A representation; with `coactions` it is read as a Hopf representation.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRepresentation {
    pub name: String,
    pub spaces: Vec<RawMorphismSpace>,
    #[serde(default)]
    pub actions: Vec<RawPairMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coactions: Option<Vec<RawMorphismMap>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedModule<F: Field> {
    pub name: String,
    pub module: PolyModule<F>,
    pub coactions: Option<Vec<Matrix<F>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedRepresentation<F: Field> {
    pub name: String,
    pub rep: PolyRepresentation<F>,
    pub coactions: Option<Vec<Matrix<F>>>,
}

/// A parsed file: the polybialgebra and its attachments.
#[derive(Clone, Debug, PartialEq)]
pub struct Structure<F: Field> {
    pub title: Option<String>,
    pub bialgebra: Polybialgebra<F>,
    pub modules: Vec<NamedModule<F>>,
    pub representations: Vec<NamedRepresentation<F>>,
    pub rmatrix: Option<Vec<Matrix<F>>>,
}

impl<F: Field> Structure<F> {
    pub fn new(title: &str, bialgebra: Polybialgebra<F>) -> Self {
        Structure { title: Some(title.to_string()), bialgebra, modules: vec![], representations: vec![], rmatrix: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnyStructure {
    Rationals(Structure<Rationals>),
    Prime(Structure<PrimeField>),
}

impl AnyStructure {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyStructure::Rationals(_) => FieldSpec::Rationals,
            AnyStructure::Prime(s) => FieldSpec::Prime(s.bialgebra.field().modulus()),
        }
    }

    pub fn to_toml(&self) -> String {
        match self {
            AnyStructure::Rationals(s) => write_structure(s),
            AnyStructure::Prime(s) => write_structure(s),
        }
    }
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Parses a structure file. The field comes from the file, else from
/// `default_field`; `forced` must agree with the file when both are given.
pub fn parse_structure(text: &str, default_field: FieldSpec, forced: Option<FieldSpec>) -> IoResult<AnyStructure> {
    let raw: StructureFile = from_toml(text)?;
    let declared = match &raw.field {
        Some(s) => Some(s.parse::<FieldSpec>().map_err(|e| IoError::FieldMismatch(e.to_string()))?),
        None => None,
    };
    let spec = match (declared, forced) {
        (Some(d), Some(f)) if d != f => {
            return Err(IoError::FieldMismatch(format!("file declares {d}, command line asks for {f}")));
        }
        (Some(d), _) => d,
        (None, Some(f)) => f,
        (None, None) => default_field,
    };
    Ok(match spec {
        FieldSpec::Rationals => AnyStructure::Rationals(build(&Rationals, &raw)?),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| IoError::FieldMismatch(e.to_string()))?;
            AnyStructure::Prime(build(&f, &raw)?)
        }
    })
}

pub fn read_structure(path: &Path, default_field: FieldSpec, forced: Option<FieldSpec>) -> IoResult<AnyStructure> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
    parse_structure(&text, default_field, forced)
}

fn tensor_space(x: &LabeledSpace, y: &LabeledSpace) -> IoResult<LabeledSpace> {
    LabeledSpace::new(x.tensor(y).labels().to_vec()).map_err(|e| shape_err(format!("tensor labels collide: {e}")))
}

fn scalar<F: Field>(f: &F, s: &str) -> IoResult<F::Elem> {
    f.parse(s).map_err(|e| IoError::FieldMismatch(e.to_string()))
}

fn index(space: &LabeledSpace, label: &str, ctx: &str) -> IoResult<usize> {
    space
        .index_of(label)
        .ok_or_else(|| shape_err(format!("{ctx}: unknown basis label `{label}`")))
}

fn fill<F: Field>(f: &F, rows: &LabeledSpace, cols: &LabeledSpace, entries: &[[String; 3]], ctx: &str) -> IoResult<Matrix<F>> {
    let mut m = Matrix::zeros(f, rows.dim(), cols.dim());
    let mut seen = HashSet::new();
    for [r, c, v] in entries {
        let (i, j) = (index(rows, r, ctx)?, index(cols, c, ctx)?);
        if !seen.insert((i, j)) {
            return Err(shape_err(format!("{ctx}: duplicate entry at ({r}, {c})")));
        }
        m.set(i, j, scalar(f, v)?);
    }
    Ok(m)
}

fn fill_column<F: Field>(f: &F, rows: &LabeledSpace, entries: &[[String; 2]], ctx: &str) -> IoResult<Matrix<F>> {
    let triples: Vec<[String; 3]> = entries.iter().map(|[r, v]| [r.clone(), "1".into(), v.clone()]).collect();
    fill(f, rows, &LabeledSpace::from_strs(&["1"]), &triples, ctx)
}

fn fill_row<F: Field>(f: &F, cols: &LabeledSpace, entries: &[[String; 2]], ctx: &str) -> IoResult<Matrix<F>> {
    let triples: Vec<[String; 3]> = entries.iter().map(|[c, v]| ["1".into(), c.clone(), v.clone()]).collect();
    fill(f, &LabeledSpace::from_strs(&["1"]), cols, &triples, ctx)
}

fn find_mor(cat: &FinCategory, name: &str, ctx: &str) -> IoResult<Mor> {
    cat.find_morphism(name)
        .ok_or_else(|| shape_err(format!("{ctx}: unknown morphism `{name}`")))
}

fn find_obj(cat: &FinCategory, name: &str, ctx: &str) -> IoResult<Obj> {
    cat.find_object(name).ok_or_else(|| shape_err(format!("{ctx}: unknown object `{name}`")))
}

fn labeled(labels: &[String], ctx: &str) -> IoResult<LabeledSpace> {
    LabeledSpace::new(labels.to_vec()).map_err(|e| shape_err(format!("{ctx}: {e}")))
}

/// Coacting space `⊕_{a: tgt a = i} M_a` with labels `a:label`.
pub fn coacting_space<F: Field>(p: &Polyalgebra<F>, i: Obj) -> LabeledSpace {
    let parts: Vec<(String, LabeledSpace)> = p
        .cat()
        .arrows_into(i)
        .into_iter()
        .map(|a| (p.name(a).to_string(), p.space(a).clone()))
        .collect();
    LabeledSpace::direct_sum(&parts)
}

fn build<F: Field>(f: &F, raw: &StructureFile) -> IoResult<Structure<F>> {
    let cat = FinCategory::validate(&raw.category).map_err(PolyadError::from)?;
    let n = cat.num_morphisms();
    let mut blocks: Vec<Option<&RawBlock>> = vec![None; n];
    for b in &raw.block {
        let a = find_mor(&cat, &b.morphism, "block")?;
        if blocks[a.0].replace(b).is_some() {
            return Err(shape_err(format!("two blocks for `{}`", b.morphism)));
        }
    }
    let mut spaces = Vec::with_capacity(n);
    for a in cat.morphisms() {
        let b = blocks[a.0].ok_or_else(|| shape_err(format!("no block for morphism `{}`", cat.morphism_name(a))))?;
        spaces.push(labeled(&b.labels, &format!("block {}", b.morphism))?);
    }

    let mut mult: Vec<Option<Matrix<F>>> = vec![None; cat.composable_pairs().len()];
    for p in &raw.product {
        let ctx = format!("product ({},{})", p.pair[0], p.pair[1]);
        let (a, b) = (find_mor(&cat, &p.pair[0], &ctx)?, find_mor(&cat, &p.pair[1], &ctx)?);
        let k = cat
            .pair_index(a, b)
            .ok_or_else(|| shape_err(format!("{ctx}: not a composable pair")))?;
        let ab = cat.compose(a, b).unwrap();
        let m = fill(f, &spaces[ab.0], &tensor_space(&spaces[a.0], &spaces[b.0])?, &p.entries, &ctx)?;
        if mult[k].replace(m).is_some() {
            return Err(shape_err(format!("{ctx}: given twice")));
        }
    }
    let mult = cat
        .composable_pairs()
        .iter()
        .zip(mult)
        .map(|(&(a, b), m)| {
            m.unwrap_or_else(|| {
                let ab = cat.compose(a, b).unwrap();
                Matrix::zeros(f, spaces[ab.0].dim(), spaces[a.0].dim() * spaces[b.0].dim())
            })
        })
        .collect();

    let mut units: Vec<Option<Matrix<F>>> = vec![None; cat.num_objects()];
    for u in &raw.unit {
        let ctx = format!("unit {}", u.object);
        let i = find_obj(&cat, &u.object, &ctx)?;
        let m = fill_column(f, &spaces[cat.identity(i).0], &u.entries, &ctx)?;
        if units[i.0].replace(m).is_some() {
            return Err(shape_err(format!("{ctx}: given twice")));
        }
    }
    let units = cat
        .objects()
        .zip(units)
        .map(|(i, u)| u.unwrap_or_else(|| Matrix::zeros(f, spaces[cat.identity(i).0].dim(), 1)))
        .collect();

    let mut comult = Vec::new();
    let mut counit = Vec::new();
    for a in cat.morphisms() {
        let b = blocks[a.0].unwrap();
        let s = &spaces[a.0];
        let ctx = format!("block {}", b.morphism);
        comult.push(fill(f, &tensor_space(s, s)?, s, &b.comult, &format!("{ctx} comult"))?);
        counit.push(fill_row(f, s, &b.counit, &format!("{ctx} counit"))?);
    }
    let alg = Polyalgebra::new(f.clone(), cat.clone(), spaces, mult, units)?;
    let bialgebra = Polybialgebra::new(alg, comult, counit)?;

    let modules = raw.module.iter().map(|m| build_module(f, &bialgebra, m)).collect::<IoResult<_>>()?;
    let representations = raw
        .representation
        .iter()
        .map(|r| build_representation(f, &bialgebra, r))
        .collect::<IoResult<_>>()?;
    let rmatrix = if raw.rmatrix.is_empty() { None } else { Some(build_rmatrix(&bialgebra, &raw.rmatrix)?) };
    Ok(Structure { title: raw.title.clone(), bialgebra, modules, representations, rmatrix })
}

fn build_rmatrix<F: Field>(b: &Polybialgebra<F>, raw: &[RawColumn]) -> IoResult<Vec<Matrix<F>>> {
    let (f, cat) = (b.field(), b.cat());
    let mut cols: Vec<Option<Matrix<F>>> = vec![None; cat.num_objects()];
    for c in raw {
        let ctx = format!("rmatrix {}", c.object);
        let i = find_obj(cat, &c.object, &ctx)?;
        let s = b.space(cat.identity(i));
        if cols[i.0].replace(fill_column(f, &tensor_space(s, s)?, &c.entries, &ctx)?).is_some() {
            return Err(shape_err(format!("{ctx}: given twice")));
        }
    }
    Ok(cat
        .objects()
        .zip(cols)
        .map(|(i, c)| {
            let d = b.dim(cat.identity(i));
            c.unwrap_or_else(|| Matrix::zeros(f, d * d, 1))
        })
        .collect())
}

fn from_toml<T: serde::de::DeserializeOwned>(text: &str) -> IoResult<T> {
    toml::from_str(text).map_err(|e| IoError::Malformed {
        line: e.span().map(|s| line_of(text, s.start)).unwrap_or(1),
        message: e.message().to_string(),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RmatrixFile {
    pub rmatrix: Vec<RawColumn>,
}

/// A standalone file holding only `[[rmatrix]]` tables for `b`.
pub fn parse_rmatrix<F: Field>(text: &str, b: &Polybialgebra<F>) -> IoResult<Vec<Matrix<F>>> {
    let raw: RmatrixFile = from_toml(text)?;
    build_rmatrix(b, &raw.rmatrix)
}

/// A functor file: a `[source]` category and a `[functor]` table mapping it
/// into `target`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    pub source: RawCategory,
    pub functor: RawFunctor,
}

pub fn parse_functor(text: &str, target: &FinCategory) -> IoResult<FunctorData> {
    let raw: FunctorFile = from_toml(text)?;
    let source = FinCategory::validate(&raw.source).map_err(PolyadError::from)?;
    Ok(FunctorData::validate(&raw.functor, &source, target).map_err(PolyadError::from)?)
}

/// The wrapped total algebra as a structure file over the terminal category,
/// preceded by comment lines recording the grading of each block.
pub fn write_total_algebra<F: Field>(t: &TotalAlgebra<F>, title: &str) -> IoResult<String> {
    let star = t.as_star_polyad()?;
    let cat = t.cat();
    let mut out = String::new();
    for a in cat.morphisms() {
        let (i, j) = t.grading(a);
        let r = t.block_range(a);
        out.push_str(&format!(
            "# grading: block {} = basis {}..{} in degree ({} <- {})\n",
            cat.morphism_name(a),
            r.start,
            r.end,
            cat.object_name(i),
            cat.object_name(j)
        ));
    }
    out.push_str(&write_structure(&Structure::new(title, star)));
    Ok(out)
}

fn build_module<F: Field>(f: &F, b: &Polybialgebra<F>, raw: &RawModule) -> IoResult<NamedModule<F>> {
    let cat = b.cat();
    let ctx = format!("module {}", raw.name);
    let mut spaces: Vec<Option<LabeledSpace>> = vec![None; cat.num_objects()];
    for s in &raw.spaces {
        let i = find_obj(cat, &s.object, &ctx)?;
        spaces[i.0] = Some(labeled(&s.labels, &ctx)?);
    }
    let spaces: Vec<LabeledSpace> = spaces.into_iter().map(|s| s.unwrap_or_else(|| LabeledSpace::numbered("x", 0))).collect();
    let mut actions: Vec<Option<Matrix<F>>> = vec![None; cat.num_morphisms()];
    for a in &raw.actions {
        let m = find_mor(cat, &a.morphism, &ctx)?;
        let cols = tensor_space(b.space(m), &spaces[cat.src(m).0])?;
        actions[m.0] = Some(fill(f, &spaces[cat.tgt(m).0], &cols, &a.entries, &ctx)?);
    }
    let actions = cat
        .morphisms()
        .zip(actions)
        .map(|(m, a)| a.unwrap_or_else(|| Matrix::zeros(f, spaces[cat.tgt(m).0].dim(), b.dim(m) * spaces[cat.src(m).0].dim())))
        .collect();
    let coactions = match &raw.coactions {
        None => None,
        Some(list) => {
            let mut out: Vec<Option<Matrix<F>>> = vec![None; cat.num_objects()];
            for c in list {
                let i = find_obj(cat, &c.object, &ctx)?;
                let rows = tensor_space(&coacting_space(b, i), &spaces[i.0])?;
                out[i.0] = Some(fill(f, &rows, &spaces[i.0], &c.entries, &ctx)?);
            }
            Some(
                cat.objects()
                    .zip(out)
                    .map(|(i, c)| {
                        c.unwrap_or_else(|| {
                            let d = spaces[i.0].dim();
                            Matrix::zeros(f, coacting_space(b, i).dim() * d, d)
                        })
                    })
                    .collect(),
            )
        }
    };
    Ok(NamedModule { name: raw.name.clone(), module: PolyModule { spaces, actions }, coactions })
}

fn build_representation<F: Field>(f: &F, b: &Polybialgebra<F>, raw: &RawRepresentation) -> IoResult<NamedRepresentation<F>> {
    let cat = b.cat();
    let ctx = format!("representation {}", raw.name);
    let mut spaces: Vec<Option<LabeledSpace>> = vec![None; cat.num_morphisms()];
    for s in &raw.spaces {
        let a = find_mor(cat, &s.morphism, &ctx)?;
        spaces[a.0] = Some(labeled(&s.labels, &ctx)?);
    }
    let spaces: Vec<LabeledSpace> = spaces.into_iter().map(|s| s.unwrap_or_else(|| LabeledSpace::numbered("w", 0))).collect();
    let mut actions: Vec<Option<Matrix<F>>> = vec![None; cat.composable_pairs().len()];
    for p in &raw.actions {
        let (a, c) = (find_mor(cat, &p.pair[0], &ctx)?, find_mor(cat, &p.pair[1], &ctx)?);
        let k = cat
            .pair_index(a, c)
            .ok_or_else(|| shape_err(format!("{ctx}: ({},{}) is not composable", p.pair[0], p.pair[1])))?;
        let ac = cat.compose(a, c).unwrap();
        actions[k] = Some(fill(f, &spaces[ac.0], &tensor_space(b.space(a), &spaces[c.0])?, &p.entries, &ctx)?);
    }
    let actions = cat
        .composable_pairs()
        .iter()
        .zip(actions)
        .map(|(&(a, c), m)| {
            m.unwrap_or_else(|| {
                let ac = cat.compose(a, c).unwrap();
                Matrix::zeros(f, spaces[ac.0].dim(), b.dim(a) * spaces[c.0].dim())
            })
        })
        .collect();
    let coactions = match &raw.coactions {
        None => None,
        Some(list) => {
            let mut out: Vec<Option<Matrix<F>>> = vec![None; cat.num_morphisms()];
            for c in list {
                let a = find_mor(cat, &c.morphism, &ctx)?;
                let rows = tensor_space(b.space(a), &spaces[a.0])?;
                out[a.0] = Some(fill(f, &rows, &spaces[a.0], &c.entries, &ctx)?);
            }
            Some(
                cat.morphisms()
                    .zip(out)
                    .map(|(a, c)| {
                        c.unwrap_or_else(|| {
                            let d = spaces[a.0].dim();
                            Matrix::zeros(f, b.dim(a) * d, d)
                        })
                    })
                    .collect(),
            )
        }
    };
    Ok(NamedRepresentation { name: raw.name.clone(), rep: PolyRepresentation { spaces, actions }, coactions })
}

fn entries<F: Field>(m: &Matrix<F>, rows: &LabeledSpace, cols: &LabeledSpace) -> Vec<[String; 3]> {
    let f = m.field();
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j);
            if !f.is_zero(v) {
                out.push([rows.labels()[i].clone(), cols.labels()[j].clone(), f.render(v)]);
            }
        }
    }
    out
}

fn column_entries<F: Field>(m: &Matrix<F>, rows: &LabeledSpace) -> Vec<[String; 2]> {
    entries(m, rows, &LabeledSpace::from_strs(&["1"])).into_iter().map(|[r, _, v]| [r, v]).collect()
}

fn row_entries<F: Field>(m: &Matrix<F>, cols: &LabeledSpace) -> Vec<[String; 2]> {
    entries(m, &LabeledSpace::from_strs(&["1"]), cols).into_iter().map(|[_, c, v]| [c, v]).collect()
}

pub fn to_structure_file<F: Field>(s: &Structure<F>) -> StructureFile {
    let b = &s.bialgebra;
    let cat = b.cat();
    let block = cat
        .morphisms()
        .map(|a| {
            let sp = b.space(a);
            RawBlock {
                morphism: b.name(a).to_string(),
                labels: sp.labels().to_vec(),
                comult: entries(b.comult(a), &sp.tensor(sp), sp),
                counit: row_entries(b.counit(a), sp),
            }
        })
        .collect();
    let product = cat
        .composable_pairs()
        .iter()
        .map(|&(a, c)| {
            let ac = cat.compose(a, c).unwrap();
            RawProduct {
                pair: [b.name(a).to_string(), b.name(c).to_string()],
                entries: entries(b.mult(a, c), b.space(ac), &b.space(a).tensor(b.space(c))),
            }
        })
        .collect();
    let unit = cat
        .objects()
        .map(|i| RawUnit {
            object: cat.object_name(i).to_string(),
            entries: column_entries(b.unit(i), b.space(cat.identity(i))),
        })
        .collect();
    let module = s
        .modules
        .iter()
        .map(|m| {
            let x = &m.module;
            RawModule {
                name: m.name.clone(),
                spaces: cat
                    .objects()
                    .map(|i| RawObjectSpace { object: cat.object_name(i).to_string(), labels: x.spaces[i.0].labels().to_vec() })
                    .collect(),
                actions: cat
                    .morphisms()
                    .map(|a| RawMorphismMap {
                        morphism: b.name(a).to_string(),
                        entries: entries(&x.actions[a.0], &x.spaces[cat.tgt(a).0], &b.space(a).tensor(&x.spaces[cat.src(a).0])),
                    })
                    .collect(),
                coactions: m.coactions.as_ref().map(|cs| {
                    cat.objects()
                        .map(|i| RawObjectMap {
                            object: cat.object_name(i).to_string(),
                            entries: entries(&cs[i.0], &coacting_space(b, i).tensor(&x.spaces[i.0]), &x.spaces[i.0]),
                        })
                        .collect()
                }),
            }
        })
        .collect();
    let representation = s
        .representations
        .iter()
        .map(|r| {
            let w = &r.rep;
            RawRepresentation {
                name: r.name.clone(),
                spaces: cat
                    .morphisms()
                    .map(|a| RawMorphismSpace { morphism: b.name(a).to_string(), labels: w.spaces[a.0].labels().to_vec() })
                    .collect(),
                actions: cat
                    .composable_pairs()
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, c))| {
                        let ac = cat.compose(a, c).unwrap();
                        RawPairMap {
                            pair: [b.name(a).to_string(), b.name(c).to_string()],
                            entries: entries(&w.actions[k], &w.spaces[ac.0], &b.space(a).tensor(&w.spaces[c.0])),
                        }
                    })
                    .collect(),
                coactions: r.coactions.as_ref().map(|cs| {
                    cat.morphisms()
                        .map(|a| RawMorphismMap {
                            morphism: b.name(a).to_string(),
                            entries: entries(&cs[a.0], &b.space(a).tensor(&w.spaces[a.0]), &w.spaces[a.0]),
                        })
                        .collect()
                }),
            }
        })
        .collect();
    let rmatrix = s
        .rmatrix
        .as_ref()
        .map(|rs| {
            cat.objects()
                .map(|i| {
                    let sp = b.space(cat.identity(i));
                    RawColumn { object: cat.object_name(i).to_string(), entries: column_entries(&rs[i.0], &sp.tensor(sp)) }
                })
                .collect()
        })
        .unwrap_or_default();
    StructureFile {
        field: Some(b.field().spec().to_string()),
        title: s.title.clone(),
        category: cat.to_raw(),
        block,
        product,
        unit,
        module,
        representation,
        rmatrix,
    }
}

pub fn write_structure<F: Field>(s: &Structure<F>) -> String {
    toml::to_string(&to_structure_file(s)).expect("structure files serialize")
}

/// Names accepted by [`generate_example`].
pub const EXAMPLE_NAMES: &[&str] = &[
    "kZ2",
    "kZ3",
    "sweedler",
    "func(Z2)",
    "idempotent",
    "grp(Z2)",
    "grp(Z3)",
    "const(terminal)",
    "const(delta1)",
    "const(indiscrete2)",
    "hopfcat(kZ2,2)",
    "hopfcat(sweedler,2)",
    "rmat(func(Z2))",
    "delta1-zero-u",
    "delta1-grouplike-pair",
];

fn bialgebra_named<F: Field>(f: &F, name: &str) -> Option<Bialgebra<F>> {
    Some(match name {
        "sweedler" => fixtures::sweedler_algebra(f),
        "idempotent" => fixtures::idempotent_monoid_algebra(f),
        "k" => fixtures::ground(f),
        _ if name.starts_with("kZ") => fixtures::cyclic_group_algebra(f, name[2..].parse().ok()?),
        _ if name.starts_with("func(Z") => {
            fixtures::cyclic_function_algebra(f, name.strip_prefix("func(Z")?.strip_suffix(')')?.parse().ok()?)
        }
        _ => return None,
    })
}

fn fixture<F: Field>(f: &F, name: &str) -> Option<Structure<F>> {
    let star = |h: Bialgebra<F>| Structure::new(name, fixtures::star(f, &h));
    if let Some(h) = bialgebra_named(f, name) {
        return (name != "k").then(|| star(h));
    }
    let inner = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    if let Some(g) = inner("grp(Z") {
        let n: usize = g.parse().ok().filter(|&n| n >= 1)?;
        return Some(Structure::new(name, fixtures::grp(f, &GroupTable::cyclic(n))));
    }
    if let Some(c) = inner("const(") {
        let kind = match c {
            "terminal" => StandardKind::Terminal,
            "delta1" => StandardKind::Delta1,
            _ => StandardKind::Indiscrete(c.strip_prefix("indiscrete")?.parse().ok().filter(|&n| n >= 1)?),
        };
        let cat = standard_category(&kind).ok()?;
        return Some(Structure::new(name, fixtures::constant(f, &cat)));
    }
    if let Some(args) = inner("hopfcat(") {
        let (h, n) = args.rsplit_once(',')?;
        let n: usize = n.trim().parse().ok().filter(|&n| n >= 1)?;
        let h = bialgebra_named(f, h.trim())?;
        return Some(Structure::new(name, fixtures::hopf_category(f, &h, n)));
    }
    match name {
        "rmat(func(Z2))" => {
            let mut s = Structure::new(name, fixtures::func_zn(f, 2));
            s.rmatrix = Some(vec![fixtures::sign_rmatrix(f)]);
            Some(s)
        }
        "delta1-zero-u" => Some(Structure::new(name, fixtures::delta1_zero_u(f))),
        "delta1-grouplike-pair" => Some(Structure::new(name, fixtures::delta1_grouplike_pair(f))),
        _ => None,
    }
}

/// The structure file for a named fixture, over the given field.
pub fn generate_example(name: &str, field: FieldSpec) -> IoResult<String> {
    let unknown = || IoError::UnknownFixture(name.to_string());
    Ok(match field {
        FieldSpec::Rationals => write_structure(&fixture(&Rationals, name).ok_or_else(unknown)?),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| IoError::FieldMismatch(e.to_string()))?;
            write_structure(&fixture(&f, name).ok_or_else(unknown)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::free_module;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn fixtures_round_trip_bit_exact() {
        for name in EXAMPLE_NAMES {
            for field in [FieldSpec::Rationals, FieldSpec::Prime(101)] {
                let text = generate_example(name, field).unwrap();
                let parsed = parse_structure(&text, q(), None).unwrap();
                assert_eq!(parsed.field_spec(), field);
                assert_eq!(parsed.to_toml(), text, "{name}");
            }
        }
    }

    #[test]
    fn generated_shapes() {
        let AnyStructure::Rationals(s) = parse_structure(&generate_example("kZ2", q()).unwrap(), q(), None).unwrap() else {
            panic!()
        };
        assert_eq!(s.bialgebra.dim(Mor(0)), 2);
        let AnyStructure::Rationals(s) =
            parse_structure(&generate_example("const(delta1)", q()).unwrap(), q(), None).unwrap()
        else {
            panic!()
        };
        assert_eq!(s.bialgebra.spaces().iter().map(|x| x.dim()).collect::<Vec<_>>(), vec![1, 1, 1]);
        let AnyStructure::Rationals(s) =
            parse_structure(&generate_example("hopfcat(sweedler,2)", q()).unwrap(), q(), None).unwrap()
        else {
            panic!()
        };
        assert!(s.bialgebra.spaces().iter().all(|x| x.dim() == 4) && s.bialgebra.cat().num_morphisms() == 4);
        assert!(s.bialgebra.validate().passed());
        assert!(matches!(generate_example("nope", q()), Err(IoError::UnknownFixture(_))));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_structure("", q(), None), Err(IoError::Malformed { line: 1, .. })));
        let text = generate_example("kZ2", q()).unwrap();
        let extra = text.replace("[category]", "bogus = 1\n[category]");
        assert!(matches!(parse_structure(&extra, q(), None), Err(IoError::Malformed { .. })));
        let dangling = text.replacen("pair = [\"1\", \"1\"]", "pair = [\"1\", \"zz\"]", 1);
        assert_ne!(dangling, text);
        assert!(matches!(
            parse_structure(&dangling, q(), None),
            Err(IoError::Structure(PolyadError::ShapeMismatch(_)))
        ));
        assert!(matches!(
            parse_structure(&text, q(), Some(FieldSpec::Prime(7))),
            Err(IoError::FieldMismatch(_))
        ));
        let bad_label = text.replacen("\"e*e\"", "\"q*q\"", 1);
        assert!(matches!(parse_structure(&bad_label, q(), None), Err(IoError::Structure(_))));
    }

    #[test]
    fn total_algebra_export_reparses() {
        let b = fixtures::grp_cyclic(&Rationals, 2);
        let text = write_total_algebra(&crate::wrapup::wrap(&b), "wrapped").unwrap();
        assert!(text.starts_with("# grading: block"));
        let AnyStructure::Rationals(s) = parse_structure(&text, q(), None).unwrap() else { panic!() };
        assert_eq!(s.bialgebra.dim(Mor(0)), 2);
        assert!(s.bialgebra.validate().passed());
    }

    #[test]
    fn functor_and_rmatrix_files() {
        let f = Rationals;
        let b = fixtures::func_zn(&f, 2);
        let text = "[[rmatrix]]\nobject = \"*\"\nentries = [[\"d_e*d_e\", \"1\"], [\"d_g*d_g\", \"-1\"]]\n";
        let r = parse_rmatrix(text, &b).unwrap();
        assert_eq!(r[0], Matrix::from_i64(&f, 4, 1, &[1, 0, 0, -1]));
        assert!(matches!(
            parse_rmatrix(&text.replace("d_g*d_g", "d_g*d_x"), &b),
            Err(IoError::Structure(PolyadError::ShapeMismatch(_)))
        ));
        let text = "[source]\nobjects = [\"p\"]\nmorphisms = [[\"i\", \"p\", \"p\"]]\nidentities = [[\"p\", \"i\"]]\ncompose = [[\"i\", \"i\", \"i\"]]\n\n[functor]\nobjects = [[\"p\", \"*\"]]\nmorphisms = [[\"i\", \"1\"]]\n";
        let g = parse_functor(text, b.cat()).unwrap();
        assert_eq!(g.map_mor(Mor(0)), Mor(0));
        assert!(parse_functor(&text.replace("[\"i\", \"1\"]", "[\"i\", \"2\"]"), b.cat()).is_err());
    }

    #[test]
    fn malformed_line_numbers() {
        let text = "field = \"Q\"\n\n[category]\nobjects = [1]\n";
        match parse_structure(text, q(), None) {
            Err(IoError::Malformed { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn attachments_round_trip() {
        let f = Rationals;
        let b = fixtures::grp_cyclic(&f, 2);
        let mut s = Structure::new("grp(Z2) with modules", b.clone());
        s.modules.push(NamedModule {
            name: "flip".into(),
            module: PolyModule {
                spaces: vec![LabeledSpace::from_strs(&["x0", "x1"])],
                actions: vec![Matrix::identity(&f, 2), Matrix::from_i64(&f, 2, 2, &[0, 1, 1, 0])],
            },
            coactions: None,
        });
        let hm = crate::hopfstruct::free_hopf_module(&b, &[1]);
        s.modules.push(NamedModule { name: "free".into(), module: hm.module, coactions: Some(hm.coactions) });
        let hr = crate::hopfstruct::free_hopf_representation(&b, &[2]);
        s.representations.push(NamedRepresentation { name: "h".into(), rep: hr.rep, coactions: Some(hr.coactions) });
        s.rmatrix = Some(fixtures::trivial_rmatrix(&b));
        let text = write_structure(&s);
        let AnyStructure::Rationals(back) = parse_structure(&text, q(), None).unwrap() else { panic!() };
        assert_eq!(back, s);
        assert_eq!(back.modules[1].module, free_module(&b, &[1]));
    }
}
