//! Finite categories given by explicit composition tables, and functors
//! between them.
//!
//! Composition is written in the applicative order used throughout the crate:
//! for `b: k -> j` and `a: j -> i` the composite is `ab: k -> i`, and the pair
//! `(a, b)` is *composable* iff `src(a) = tgt(b)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mor(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: Obj,
    pub tgt: Obj,
}

/// Unvalidated tables, as read from a file or produced by a constructor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCategory {
    pub objects: Vec<String>,
    /// `[id, src, tgt]`
    pub morphisms: Vec<[String; 3]>,
    /// `[object, identity morphism]`
    pub identities: Vec<[String; 2]>,
    /// `[a, b, ab]`
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryViolation {
    DuplicateId(String),
    UnknownObject(String),
    UnknownMorphism(String),
    MissingIdentity(String),
    IdentityViolation(String),
    CompositionDomainError { a: String, b: String, reason: String },
    MissingComposite { a: String, b: String },
    AssociativityViolation { a: String, b: String, c: String },
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CategoryViolation::*;
        match self {
            DuplicateId(x) => write!(f, "duplicate id `{x}`"),
            UnknownObject(x) => write!(f, "unknown object `{x}`"),
            UnknownMorphism(x) => write!(f, "unknown morphism `{x}`"),
            MissingIdentity(x) => write!(f, "object `{x}` has no identity"),
            IdentityViolation(x) => write!(f, "identity law fails for `{x}`"),
            CompositionDomainError { a, b, reason } => {
                write!(f, "composition ({a},{b}): {reason}")
            }
            MissingComposite { a, b } => write!(f, "composable pair ({a},{b}) has no composite"),
            AssociativityViolation { a, b, c } => write!(f, "associativity fails on ({a},{b},{c})"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("invalid category: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct CategoryError {
    pub violations: Vec<CategoryViolation>,
}

/// A validated finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<Mor>,
    /// `compose[a * n + b]`
    compose: Vec<Option<Mor>>,
    pairs: Vec<(Mor, Mor)>,
    pair_index: HashMap<(Mor, Mor), usize>,
}

impl FinCategory {
    /// Checks every axiom and reports all violations at once.
    pub fn validate(raw: &RawCategory) -> Result<Self, CategoryError> {
        use CategoryViolation::*;
        let mut v = Vec::new();

        let mut obj_ix = HashMap::new();
        for (i, o) in raw.objects.iter().enumerate() {
            if obj_ix.insert(o.clone(), Obj(i)).is_some() {
                v.push(DuplicateId(o.clone()));
            }
        }
        let mut mor_ix = HashMap::new();
        let mut morphisms = Vec::new();
        for [id, s, t] in &raw.morphisms {
            if mor_ix.insert(id.clone(), Mor(morphisms.len())).is_some() {
                v.push(DuplicateId(id.clone()));
            }
            let src = obj_ix.get(s).copied();
            let tgt = obj_ix.get(t).copied();
            if src.is_none() {
                v.push(UnknownObject(s.clone()));
            }
            if tgt.is_none() {
                v.push(UnknownObject(t.clone()));
            }
            morphisms.push(Morphism {
                id: id.clone(),
                src: src.unwrap_or(Obj(0)),
                tgt: tgt.unwrap_or(Obj(0)),
            });
        }
        if !v.is_empty() {
            return Err(CategoryError { violations: v });
        }

        let mut identity: Vec<Option<Mor>> = vec![None; raw.objects.len()];
        for [o, m] in &raw.identities {
            match (obj_ix.get(o), mor_ix.get(m)) {
                (Some(&oi), Some(&mi)) => {
                    let mm = &morphisms[mi.0];
                    if mm.src != oi || mm.tgt != oi {
                        v.push(IdentityViolation(m.clone()));
                    }
                    identity[oi.0] = Some(mi);
                }
                (None, _) => v.push(UnknownObject(o.clone())),
                (_, None) => v.push(UnknownMorphism(m.clone())),
            }
        }
        for (i, id) in identity.iter().enumerate() {
            if id.is_none() {
                v.push(MissingIdentity(raw.objects[i].clone()));
            }
        }

        let n = morphisms.len();
        let mut compose: Vec<Option<Mor>> = vec![None; n * n];
        for [a, b, ab] in &raw.compose {
            let (Some(&ai), Some(&bi), Some(&ci)) = (mor_ix.get(a), mor_ix.get(b), mor_ix.get(ab))
            else {
                for x in [a, b, ab] {
                    if !mor_ix.contains_key(x) {
                        v.push(UnknownMorphism(x.clone()));
                    }
                }
                continue;
            };
            let (ma, mb, mc) = (&morphisms[ai.0], &morphisms[bi.0], &morphisms[ci.0]);
            if ma.src != mb.tgt {
                v.push(CompositionDomainError {
                    a: a.clone(),
                    b: b.clone(),
                    reason: "src(a) != tgt(b)".into(),
                });
            } else if mc.tgt != ma.tgt || mc.src != mb.src {
                v.push(CompositionDomainError {
                    a: a.clone(),
                    b: b.clone(),
                    reason: format!("composite `{ab}` has the wrong endpoints"),
                });
            } else if compose[ai.0 * n + bi.0].is_some_and(|prev| prev != ci) {
                v.push(CompositionDomainError {
                    a: a.clone(),
                    b: b.clone(),
                    reason: "composite defined twice".into(),
                });
            }
            compose[ai.0 * n + bi.0] = Some(ci);
        }
        if !v.is_empty() {
            return Err(CategoryError { violations: v });
        }
        for a in 0..n {
            for b in 0..n {
                if morphisms[a].src == morphisms[b].tgt && compose[a * n + b].is_none() {
                    v.push(MissingComposite {
                        a: morphisms[a].id.clone(),
                        b: morphisms[b].id.clone(),
                    });
                }
            }
        }
        if !v.is_empty() {
            return Err(CategoryError { violations: v });
        }

        let identity: Vec<Mor> = identity.into_iter().map(|m| m.unwrap()).collect();
        for (ai, m) in morphisms.iter().enumerate() {
            let left = compose[identity[m.tgt.0].0 * n + ai];
            let right = compose[ai * n + identity[m.src.0].0];
            if left != Some(Mor(ai)) || right != Some(Mor(ai)) {
                v.push(IdentityViolation(m.id.clone()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = compose[a * n + b] else { continue };
                for c in 0..n {
                    let Some(bc) = compose[b * n + c] else { continue };
                    let lhs = compose[ab.0 * n + c];
                    let rhs = compose[a * n + bc.0];
                    if lhs != rhs {
                        v.push(AssociativityViolation {
                            a: morphisms[a].id.clone(),
                            b: morphisms[b].id.clone(),
                            c: morphisms[c].id.clone(),
                        });
                    }
                }
            }
        }
        if !v.is_empty() {
            return Err(CategoryError { violations: v });
        }

        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if compose[a * n + b].is_some() {
                    pairs.push((Mor(a), Mor(b)));
                }
            }
        }
        let pair_index = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Ok(FinCategory {
            objects: raw.objects.clone(),
            morphisms,
            identity,
            compose,
            pairs,
            pair_index,
        })
    }

    pub fn to_raw(&self) -> RawCategory {
        let name = |m: Mor| self.morphisms[m.0].id.clone();
        RawCategory {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| [m.id.clone(), self.objects[m.src.0].clone(), self.objects[m.tgt.0].clone()])
                .collect(),
            identities: self
                .identity
                .iter()
                .enumerate()
                .map(|(i, &m)| [self.objects[i].clone(), name(m)])
                .collect(),
            compose: self
                .pairs
                .iter()
                .map(|&(a, b)| [name(a), name(b), name(self.compose(a, b).unwrap())])
                .collect(),
        }
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }
    pub fn objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.objects.len()).map(Obj)
    }
    pub fn morphisms(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len()).map(Mor)
    }
    pub fn object_name(&self, o: Obj) -> &str {
        &self.objects[o.0]
    }
    pub fn morphism_name(&self, m: Mor) -> &str {
        &self.morphisms[m.0].id
    }
    pub fn find_object(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|o| o == name).map(Obj)
    }
    pub fn find_morphism(&self, name: &str) -> Option<Mor> {
        self.morphisms.iter().position(|m| m.id == name).map(Mor)
    }
    pub fn src(&self, m: Mor) -> Obj {
        self.morphisms[m.0].src
    }
    pub fn tgt(&self, m: Mor) -> Obj {
        self.morphisms[m.0].tgt
    }
    pub fn identity(&self, o: Obj) -> Mor {
        self.identity[o.0]
    }
    pub fn is_identity(&self, m: Mor) -> bool {
        self.identity[self.src(m).0] == m
    }

    /// `ab` when `src(a) = tgt(b)`.
    pub fn compose(&self, a: Mor, b: Mor) -> Option<Mor> {
        self.compose[a.0 * self.morphisms.len() + b.0]
    }

    /// Composable pairs in lexicographic morphism order.
    pub fn composable_pairs(&self) -> &[(Mor, Mor)] {
        &self.pairs
    }

    pub fn pair_index(&self, a: Mor, b: Mor) -> Option<usize> {
        self.pair_index.get(&(a, b)).copied()
    }

    pub fn composable_triples(&self) -> Vec<(Mor, Mor, Mor)> {
        let mut out = Vec::new();
        for &(a, b) in &self.pairs {
            for c in self.morphisms() {
                if self.compose(b, c).is_some() {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    /// Morphisms with target `i`, in morphism order.
    pub fn arrows_into(&self, i: Obj) -> Vec<Mor> {
        self.morphisms().filter(|&m| self.tgt(m) == i).collect()
    }

    pub fn arrows_out_of(&self, i: Obj) -> Vec<Mor> {
        self.morphisms().filter(|&m| self.src(m) == i).collect()
    }

    pub fn hom(&self, from: Obj, to: Obj) -> Vec<Mor> {
        self.morphisms()
            .filter(|&m| self.src(m) == from && self.tgt(m) == to)
            .collect()
    }

    pub fn inverse_of(&self, a: Mor) -> Option<Mor> {
        let (s, t) = (self.src(a), self.tgt(a));
        self.hom(t, s).into_iter().find(|&b| {
            self.compose(a, b) == Some(self.identity(t)) && self.compose(b, a) == Some(self.identity(s))
        })
    }

    /// The inverse table when every morphism is invertible.
    pub fn is_groupoid(&self) -> Option<Vec<Mor>> {
        self.morphisms().map(|a| self.inverse_of(a)).collect()
    }

    /// Connectedness of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.objects.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.objects.len()];
        let mut queue = VecDeque::from([Obj(0)]);
        seen[0] = true;
        while let Some(o) = queue.pop_front() {
            for m in &self.morphisms {
                for (x, y) in [(m.src, m.tgt), (m.tgt, m.src)] {
                    if x == o && !seen[y.0] {
                        seen[y.0] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The full subcategory on one object, with its inclusion.
    pub fn full_subcategory_at(&self, o: Obj) -> FunctorData {
        let endos = self.hom(o, o);
        let name = |m: Mor| self.morphism_name(m).to_string();
        let raw = RawCategory {
            objects: vec![self.object_name(o).to_string()],
            morphisms: endos
                .iter()
                .map(|&m| [name(m), self.object_name(o).into(), self.object_name(o).into()])
                .collect(),
            identities: vec![[self.object_name(o).into(), name(self.identity(o))]],
            compose: endos
                .iter()
                .flat_map(|&a| endos.iter().map(move |&b| (a, b)))
                .map(|(a, b)| [name(a), name(b), name(self.compose(a, b).unwrap())])
                .collect(),
        };
        let sub = FinCategory::validate(&raw).expect("full subcategory is a category");
        FunctorData {
            obj_map: vec![o],
            mor_map: endos,
            source: sub,
            target: self.clone(),
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    /// `table[g][h]` is the index of `gh`.
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("malformed group table: {0}")]
pub struct GroupTableError(pub String);

impl GroupTable {
    /// Elements `e, g, g2, …` of `Z/n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable { names, table }
    }

    /// Checks closure, associativity, a two-sided identity and inverses.
    pub fn validate(&self) -> Result<usize, GroupTableError> {
        let n = self.names.len();
        if n == 0 || self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return Err(GroupTableError("table must be n x n with n > 0".into()));
        }
        if self.table.iter().flatten().any(|&x| x >= n) {
            return Err(GroupTableError("entry out of range".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g))
            .ok_or_else(|| GroupTableError("no identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| self.table[a][b] == e && self.table[b][a] == e) {
                return Err(GroupTableError(format!("`{}` has no inverse", self.names[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(GroupTableError("not associative".into()));
                    }
                }
            }
        }
        Ok(e)
    }
}

/// Named source categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardKind {
    /// `*`: one object `*`, one morphism `1`.
    Terminal,
    /// One object `*`, one morphism per group element.
    Group(GroupTable),
    /// Objects `1..=n`, exactly one morphism `(x,y): y -> x` per pair.
    Indiscrete(usize),
    /// Objects `0, 1`; morphisms `id0, id1, u: 0 -> 1`.
    Delta1,
}

pub fn standard_category(kind: &StandardKind) -> Result<FinCategory, GroupTableError> {
    let s = |x: &str| x.to_string();
    let raw = match kind {
        StandardKind::Terminal => RawCategory {
            objects: vec![s("*")],
            morphisms: vec![[s("1"), s("*"), s("*")]],
            identities: vec![[s("*"), s("1")]],
            compose: vec![[s("1"), s("1"), s("1")]],
        },
        StandardKind::Group(g) => {
            let e = g.validate()?;
            let n = g.names.len();
            RawCategory {
                objects: vec![s("*")],
                morphisms: g.names.iter().map(|x| [x.clone(), s("*"), s("*")]).collect(),
                identities: vec![[s("*"), g.names[e].clone()]],
                compose: (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .map(|(a, b)| [g.names[a].clone(), g.names[b].clone(), g.names[g.table[a][b]].clone()])
                    .collect(),
            }
        }
        StandardKind::Indiscrete(n) => {
            let objs: Vec<String> = (1..=*n).map(|k| k.to_string()).collect();
            let arrow = |x: &str, y: &str| format!("({x},{y})");
            let mut morphisms = Vec::new();
            for x in &objs {
                for y in &objs {
                    morphisms.push([arrow(x, y), y.clone(), x.clone()]);
                }
            }
            let mut compose = Vec::new();
            for x in &objs {
                for y in &objs {
                    for z in &objs {
                        compose.push([arrow(x, y), arrow(y, z), arrow(x, z)]);
                    }
                }
            }
            RawCategory {
                identities: objs.iter().map(|x| [x.clone(), arrow(x, x)]).collect(),
                objects: objs,
                morphisms,
                compose,
            }
        }
        StandardKind::Delta1 => RawCategory {
            objects: vec![s("0"), s("1")],
            morphisms: vec![
                [s("id0"), s("0"), s("0")],
                [s("id1"), s("1"), s("1")],
                [s("u"), s("0"), s("1")],
            ],
            identities: vec![[s("0"), s("id0")], [s("1"), s("id1")]],
            compose: vec![
                [s("id0"), s("id0"), s("id0")],
                [s("id1"), s("id1"), s("id1")],
                [s("u"), s("id0"), s("u")],
                [s("id1"), s("u"), s("u")],
            ],
        },
    };
    Ok(FinCategory::validate(&raw).expect("standard tables are valid"))
}

/// A validated functor between finite categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorData {
    pub source: FinCategory,
    pub target: FinCategory,
    pub obj_map: Vec<Obj>,
    pub mor_map: Vec<Mor>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFunctor {
    /// `[source object, target object]`
    pub objects: Vec<[String; 2]>,
    /// `[source morphism, target morphism]`
    pub morphisms: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FunctorError {
    #[error("not a functor: {0}")]
    NotAFunctor(String),
}

impl FunctorData {
    pub fn validate(raw: &RawFunctor, source: &FinCategory, target: &FinCategory) -> Result<Self, FunctorError> {
        let bad = |s: String| FunctorError::NotAFunctor(s);
        let mut obj_map = vec![None; source.num_objects()];
        for [x, y] in &raw.objects {
            let xs = source.find_object(x).ok_or_else(|| bad(format!("unknown source object `{x}`")))?;
            let yt = target.find_object(y).ok_or_else(|| bad(format!("unknown target object `{y}`")))?;
            obj_map[xs.0] = Some(yt);
        }
        let mut mor_map = vec![None; source.num_morphisms()];
        for [a, b] in &raw.morphisms {
            let asrc = source.find_morphism(a).ok_or_else(|| bad(format!("unknown source morphism `{a}`")))?;
            let bt = target.find_morphism(b).ok_or_else(|| bad(format!("unknown target morphism `{b}`")))?;
            mor_map[asrc.0] = Some(bt);
        }
        let obj_map: Vec<Obj> = obj_map
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| bad(format!("object `{}` unmapped", source.objects[i]))))
            .collect::<Result<_, _>>()?;
        let mor_map: Vec<Mor> = mor_map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| bad(format!("morphism `{}` unmapped", source.morphisms[i].id))))
            .collect::<Result<_, _>>()?;
        Self::from_maps(source.clone(), target.clone(), obj_map, mor_map)
    }

    pub fn from_maps(
        source: FinCategory,
        target: FinCategory,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<Self, FunctorError> {
        let f = FunctorData { source, target, obj_map, mor_map };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<(), FunctorError> {
        let (s, t) = (&self.source, &self.target);
        for m in s.morphisms() {
            let fm = self.mor_map[m.0];
            if t.src(fm) != self.obj_map[s.src(m).0] || t.tgt(fm) != self.obj_map[s.tgt(m).0] {
                return Err(FunctorError::NotAFunctor(format!(
                    "`{}` does not respect endpoints",
                    s.morphism_name(m)
                )));
            }
        }
        for o in s.objects() {
            if self.mor_map[s.identity(o).0] != t.identity(self.obj_map[o.0]) {
                return Err(FunctorError::NotAFunctor(format!(
                    "identity of `{}` not preserved",
                    s.object_name(o)
                )));
            }
        }
        for &(a, b) in s.composable_pairs() {
            let ab = s.compose(a, b).unwrap();
            if t.compose(self.map_mor(a), self.map_mor(b)) != Some(self.map_mor(ab)) {
                return Err(FunctorError::NotAFunctor(format!(
                    "composition not preserved at ({},{})",
                    s.morphism_name(a),
                    s.morphism_name(b)
                )));
            }
        }
        Ok(())
    }

    pub fn map_obj(&self, o: Obj) -> Obj {
        self.obj_map[o.0]
    }
    pub fn map_mor(&self, m: Mor) -> Mor {
        self.mor_map[m.0]
    }

    pub fn identity(d: &FinCategory) -> Self {
        FunctorData {
            source: d.clone(),
            target: d.clone(),
            obj_map: d.objects().collect(),
            mor_map: d.morphisms().collect(),
        }
    }

    /// The unique functor `D -> *`.
    pub fn to_terminal(d: &FinCategory) -> Self {
        let t = standard_category(&StandardKind::Terminal).unwrap();
        FunctorData {
            source: d.clone(),
            obj_map: vec![Obj(0); d.num_objects()],
            mor_map: vec![Mor(0); d.num_morphisms()],
            target: t,
        }
    }

    /// `* -> D` picking the object `o`.
    pub fn point(d: &FinCategory, o: Obj) -> Self {
        FunctorData {
            source: standard_category(&StandardKind::Terminal).unwrap(),
            target: d.clone(),
            obj_map: vec![o],
            mor_map: vec![d.identity(o)],
        }
    }

    /// `self ∘ g` for `g: D'' -> D'`.
    pub fn after(&self, g: &FunctorData) -> Result<Self, FunctorError> {
        if g.target != self.source {
            return Err(FunctorError::NotAFunctor("composite of non-composable functors".into()));
        }
        Self::from_maps(
            g.source.clone(),
            self.target.clone(),
            g.obj_map.iter().map(|&o| self.map_obj(o)).collect(),
            g.mor_map.iter().map(|&m| self.map_mor(m)).collect(),
        )
    }

    pub fn to_raw(&self) -> RawFunctor {
        RawFunctor {
            objects: self
                .source
                .objects()
                .map(|o| [self.source.object_name(o).into(), self.target.object_name(self.map_obj(o)).into()])
                .collect(),
            morphisms: self
                .source
                .morphisms()
                .map(|m| [self.source.morphism_name(m).into(), self.target.morphism_name(self.map_mor(m)).into()])
                .collect(),
        }
    }
}

/// Name of the arrow-category morphism `a: b -> ab` for the composable pair `(a, b)`.
pub fn arrow_morphism_name(d: &FinCategory, a: Mor, b: Mor) -> String {
    format!("[{};{}]", d.morphism_name(a), d.morphism_name(b))
}

/// `Ar(D)` together with the target functor `t: Ar(D) -> D`.
///
/// Objects of `Ar(D)` are the morphisms of `D`; a morphism `b -> c` is an `a`
/// with `c = ab`, so the morphisms are in bijection with composable pairs.
pub fn arrow_category(d: &FinCategory) -> (FinCategory, FunctorData) {
    let pairs = d.composable_pairs();
    let mut raw = RawCategory {
        objects: d.morphisms().map(|m| d.morphism_name(m).to_string()).collect(),
        ..Default::default()
    };
    for &(a, b) in pairs {
        let ab = d.compose(a, b).unwrap();
        raw.morphisms.push([
            arrow_morphism_name(d, a, b),
            d.morphism_name(b).into(),
            d.morphism_name(ab).into(),
        ]);
    }
    for b in d.morphisms() {
        raw.identities.push([
            d.morphism_name(b).into(),
            arrow_morphism_name(d, d.identity(d.tgt(b)), b),
        ]);
    }
    // (a', ab) ∘ (a, b) = (a'a, b)
    for &(a2, c) in pairs {
        for &(a1, b) in pairs {
            if d.compose(a1, b) != Some(c) {
                continue;
            }
            let a = d.compose(a2, a1).expect("tgt(a1) = tgt(c) = src(a2)");
            raw.compose.push([
                arrow_morphism_name(d, a2, c),
                arrow_morphism_name(d, a1, b),
                arrow_morphism_name(d, a, b),
            ]);
        }
    }
    let ar = FinCategory::validate(&raw).expect("arrow category is a category");
    let obj_map = d.morphisms().map(|b| d.tgt(b)).collect();
    let mor_map = pairs.iter().map(|&(a, _)| a).collect();
    let t = FunctorData::from_maps(ar.clone(), d.clone(), obj_map, mor_map)
        .expect("target functor is a functor");
    (ar, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize) -> FinCategory {
        standard_category(&StandardKind::Group(GroupTable::cyclic(n))).unwrap()
    }

    #[test]
    fn standard_categories() {
        let t = standard_category(&StandardKind::Terminal).unwrap();
        assert_eq!((t.num_objects(), t.num_morphisms()), (1, 1));
        assert_eq!(t.composable_pairs(), &[(Mor(0), Mor(0))]);
        let z2 = group(2);
        assert_eq!((z2.num_objects(), z2.num_morphisms()), (1, 2));
        assert_eq!(z2.composable_pairs().len(), 4);
        let ind = standard_category(&StandardKind::Indiscrete(2)).unwrap();
        assert_eq!((ind.num_objects(), ind.num_morphisms()), (2, 4));
    }

    #[test]
    fn delta1_pairs() {
        let d = standard_category(&StandardKind::Delta1).unwrap();
        let names: Vec<(String, String)> = d
            .composable_pairs()
            .iter()
            .map(|&(a, b)| (d.morphism_name(a).into(), d.morphism_name(b).into()))
            .collect();
        let mut expected = vec![
            ("id0".to_string(), "id0".to_string()),
            ("id1".into(), "id1".into()),
            ("u".into(), "id0".into()),
            ("id1".into(), "u".into()),
        ];
        expected.sort();
        let mut got = names.clone();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn groupoid_detection() {
        assert!(group(3).is_groupoid().is_some());
        let d = standard_category(&StandardKind::Delta1).unwrap();
        assert!(d.is_groupoid().is_none());
        let ind = standard_category(&StandardKind::Indiscrete(2)).unwrap();
        let inv = ind.is_groupoid().unwrap();
        for a in ind.morphisms() {
            let ai = inv[a.0];
            assert_eq!(ind.compose(a, ai), Some(ind.identity(ind.tgt(a))));
            assert_eq!(ind.compose(ai, a), Some(ind.identity(ind.src(a))));
        }
    }

    #[test]
    fn rejects_wrong_composite_endpoints() {
        let mut raw = standard_category(&StandardKind::Delta1).unwrap().to_raw();
        // u ∘ id0 declared to be id1: tgt matches but src does not
        for c in raw.compose.iter_mut() {
            if c[0] == "u" && c[1] == "id0" {
                c[2] = "id1".into();
            }
        }
        let err = FinCategory::validate(&raw).unwrap_err();
        assert!(matches!(err.violations[0], CategoryViolation::CompositionDomainError { .. }));
    }

    #[test]
    fn rejects_non_associative_table() {
        // Z/3 table with one product altered keeps the shape but breaks associativity
        let mut raw = group(3).to_raw();
        for c in raw.compose.iter_mut() {
            if c[0] == "g" && c[1] == "g" {
                c[2] = "e".into();
            }
        }
        let err = FinCategory::validate(&raw).unwrap_err();
        assert!(err
            .violations
            .iter()
            .any(|v| matches!(v, CategoryViolation::AssociativityViolation { .. })));
    }

    #[test]
    fn malformed_group_table() {
        let g = GroupTable { names: vec!["a".into(), "b".into()], table: vec![vec![0, 0], vec![0, 0]] };
        assert!(standard_category(&StandardKind::Group(g)).is_err());
    }

    #[test]
    fn arrow_categories() {
        let t = standard_category(&StandardKind::Terminal).unwrap();
        let (ar, _) = arrow_category(&t);
        assert_eq!((ar.num_objects(), ar.num_morphisms()), (1, 1));
        let (ar, _) = arrow_category(&group(2));
        assert_eq!((ar.num_objects(), ar.num_morphisms()), (2, 4));
        let d = standard_category(&StandardKind::Delta1).unwrap();
        let (ar, tf) = arrow_category(&d);
        assert_eq!((ar.num_objects(), ar.num_morphisms()), (3, 4));
        FunctorData::validate(&tf.to_raw(), &ar, &d).unwrap();
    }

    #[test]
    fn functors() {
        let g = group(2);
        FunctorData::validate(&FunctorData::identity(&g).to_raw(), &g, &g).unwrap();
        let t = FunctorData::to_terminal(&g);
        FunctorData::validate(&t.to_raw(), &g, &t.target).unwrap();
        // sending g to e is fine, sending e to g is not
        let bad = RawFunctor {
            objects: vec![["*".into(), "*".into()]],
            morphisms: vec![["e".into(), "g".into()], ["g".into(), "g".into()]],
        };
        assert!(FunctorData::validate(&bad, &g, &g).is_err());
    }

    #[test]
    fn pair_count_identity() {
        for d in [
            group(3),
            standard_category(&StandardKind::Delta1).unwrap(),
            standard_category(&StandardKind::Indiscrete(3)).unwrap(),
        ] {
            let expected: usize = d
                .objects()
                .map(|j| d.arrows_into(j).len() * d.arrows_out_of(j).len())
                .sum();
            assert_eq!(d.composable_pairs().len(), expected);
        }
    }
}
