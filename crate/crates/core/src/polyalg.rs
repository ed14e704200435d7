//! Polyalgebras, polybialgebras and their fusion operators.
//!
//! A polyalgebra is the structure-constant form of a representable polyad:
//! `T_a = M_a ⊗ -`, `μ_{a,b} = m_{a,b} ⊗ -`, `η_i = u_i ⊗ -`. A polybialgebra
//! adds a coalgebra on every `M_a`; its comonoidal structure is
//! `T²_a(X,Y) = (M_a ⊗ τ_{M_a,X} ⊗ Y)(Δ_a ⊗ X ⊗ Y)` and `T⁰_a = ε_a`, where
//! `τ` is the flip of vector spaces.
//!
//! Objects `X, Y, Z` of the module categories only enter through identity legs,
//! so every natural transformation here is a matrix parametrised by the
//! dimensions of those legs.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{shape, PolyadError, Result};
use crate::field::Field;
use crate::fincat::{FinCategory, FunctorData, Mor, Obj};
use crate::matrix::{Matrix, NotInvertible};
use crate::par;
use crate::report::{Check, Report};
use crate::space::LabeledSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polyalgebra<F: Field> {
    field: F,
    cat: FinCategory,
    spaces: Vec<LabeledSpace>,
    /// Indexed like `cat.composable_pairs()`.
    mult: Vec<Matrix<F>>,
    units: Vec<Matrix<F>>,
}

fn check_matrix<F: Field>(field: &F, m: &Matrix<F>, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.field() != field {
        return Err(PolyadError::Linalg(crate::matrix::LinalgError::FieldMismatch));
    }
    if m.shape() != (rows, cols) {
        return Err(shape(format!("{what} is {:?}, expected {:?}", m.shape(), (rows, cols))));
    }
    Ok(())
}

/// Records every instance of one axiom family: a single passing line when
/// all instances hold, otherwise one line per failing instance.
pub(crate) fn push_family(report: &mut Report, family: &str, instances: Vec<(String, Check)>) {
    let n = instances.len();
    let failures: Vec<Check> = instances
        .into_iter()
        .filter(|(_, c)| !c.passed)
        .map(|(inst, mut c)| {
            c.name = format!("{family} at {inst}");
            c
        })
        .collect();
    if failures.is_empty() {
        report.push(Check::pass(family).with_detail(format!("{n} instances")));
    } else {
        report.checks.extend(failures);
    }
}

impl<F: Field> Polyalgebra<F> {
    pub fn new(
        field: F,
        cat: FinCategory,
        spaces: Vec<LabeledSpace>,
        mult: Vec<Matrix<F>>,
        units: Vec<Matrix<F>>,
    ) -> Result<Self> {
        if spaces.len() != cat.num_morphisms() {
            return Err(shape(format!("{} spaces for {} morphisms", spaces.len(), cat.num_morphisms())));
        }
        if mult.len() != cat.composable_pairs().len() {
            return Err(shape(format!(
                "{} products for {} composable pairs",
                mult.len(),
                cat.composable_pairs().len()
            )));
        }
        if units.len() != cat.num_objects() {
            return Err(shape(format!("{} units for {} objects", units.len(), cat.num_objects())));
        }
        let p = Polyalgebra { field, cat, spaces, mult, units };
        for (k, &(a, b)) in p.cat.composable_pairs().iter().enumerate() {
            let ab = p.cat.compose(a, b).unwrap();
            check_matrix(&p.field, &p.mult[k], p.dim(ab), p.dim(a) * p.dim(b), &format!("m_({},{})", p.name(a), p.name(b)))?;
        }
        for i in p.cat.objects() {
            let id = p.cat.identity(i);
            check_matrix(&p.field, &p.units[i.0], p.dim(id), 1, &format!("u_{}", p.cat.object_name(i)))?;
        }
        Ok(p)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn cat(&self) -> &FinCategory {
        &self.cat
    }
    pub fn space(&self, a: Mor) -> &LabeledSpace {
        &self.spaces[a.0]
    }
    pub fn spaces(&self) -> &[LabeledSpace] {
        &self.spaces
    }
    pub fn dim(&self, a: Mor) -> usize {
        self.spaces[a.0].dim()
    }
    pub fn name(&self, a: Mor) -> &str {
        self.cat.morphism_name(a)
    }
    pub fn pair_name(&self, a: Mor, b: Mor) -> String {
        format!("({},{})", self.name(a), self.name(b))
    }

    pub fn try_mult(&self, a: Mor, b: Mor) -> Result<&Matrix<F>> {
        self.cat
            .pair_index(a, b)
            .map(|k| &self.mult[k])
            .ok_or_else(|| PolyadError::NotComposable { a: self.name(a).into(), b: self.name(b).into() })
    }

    /// `m_{a,b}`; panics on a non-composable pair.
    pub fn mult(&self, a: Mor, b: Mor) -> &Matrix<F> {
        self.try_mult(a, b).expect("composable pair")
    }

    pub fn unit(&self, i: Obj) -> &Matrix<F> {
        &self.units[i.0]
    }

    pub fn set_mult(&mut self, a: Mor, b: Mor, m: Matrix<F>) -> Result<()> {
        let k = self.cat.pair_index(a, b).ok_or_else(|| PolyadError::NotComposable {
            a: self.name(a).into(),
            b: self.name(b).into(),
        })?;
        let ab = self.cat.compose(a, b).unwrap();
        check_matrix(&self.field, &m, self.dim(ab), self.dim(a) * self.dim(b), "replacement product")?;
        self.mult[k] = m;
        Ok(())
    }

    pub fn set_unit(&mut self, i: Obj, u: Matrix<F>) -> Result<()> {
        check_matrix(&self.field, &u, self.dim(self.cat.identity(i)), 1, "replacement unit")?;
        self.units[i.0] = u;
        Ok(())
    }

    pub fn id(&self, n: usize) -> Matrix<F> {
        Matrix::identity(&self.field, n)
    }

    /// `T_a(f) = M_a ⊗ f`.
    pub fn t_map(&self, a: Mor, f: &Matrix<F>) -> Matrix<F> {
        self.id(self.dim(a)).tensor(f)
    }

    /// `μ_{a,b}` at an object of dimension `dy`.
    pub fn mu(&self, a: Mor, b: Mor, dy: usize) -> Matrix<F> {
        self.mult(a, b).tensor(&self.id(dy))
    }

    /// `η_i` at an object of dimension `dx`.
    pub fn eta(&self, i: Obj, dx: usize) -> Matrix<F> {
        self.unit(i).tensor(&self.id(dx))
    }

    /// Associativity on all composable triples and both unit laws.
    pub fn validate(&self) -> Report {
        let mut r = Report::new("polyalgebra axioms");
        let triples = self.cat.composable_triples();
        let assoc = par::map(&triples, |&(a, b, c)| {
            let ab = self.cat.compose(a, b).unwrap();
            let bc = self.cat.compose(b, c).unwrap();
            let lhs = self.mult(ab, c).mul(&self.mult(a, b).tensor(&self.id(self.dim(c))));
            let rhs = self.mult(a, bc).mul(&self.id(self.dim(a)).tensor(self.mult(b, c)));
            let name = format!("({},{},{})", self.name(a), self.name(b), self.name(c));
            (name, Check::equal("", &lhs, &rhs))
        });
        push_family(&mut r, "associativity", assoc);
        let morphisms: Vec<Mor> = self.cat.morphisms().collect();
        let units = par::map(&morphisms, |&a| {
            let (i, j) = (self.cat.tgt(a), self.cat.src(a));
            let right = self.mult(a, self.cat.identity(j)).mul(&self.id(self.dim(a)).tensor(self.unit(j)));
            let left = self.mult(self.cat.identity(i), a).mul(&self.unit(i).tensor(&self.id(self.dim(a))));
            let id = self.id(self.dim(a));
            let c = Check::equal("", &right, &id);
            let c = if c.passed { Check::equal("", &left, &id) } else { c };
            (self.name(a).to_string(), c)
        });
        push_family(&mut r, "unit laws", units);
        r
    }

    /// All products and units invertible.
    pub fn is_action_type(&self) -> Result<()> {
        for &(a, b) in self.cat.composable_pairs() {
            if let Err(e) = self.mult(a, b).try_invert() {
                return Err(PolyadError::NotActionType(format!("m_{} is a {e}", self.pair_name(a, b))));
            }
        }
        for i in self.cat.objects() {
            if let Err(e) = self.unit(i).try_invert() {
                return Err(PolyadError::NotActionType(format!(
                    "u_{} is a {e}",
                    self.cat.object_name(i)
                )));
            }
        }
        Ok(())
    }

    /// `f^*P` with `M'_x = M_{f(x)}`.
    pub fn pullback(&self, f: &FunctorData) -> Result<Self> {
        if f.target != self.cat {
            return Err(PolyadError::Invalid("functor target is not the source category".into()));
        }
        let src = &f.source;
        let spaces = src.morphisms().map(|x| self.spaces[f.map_mor(x).0].clone()).collect();
        let mult = src
            .composable_pairs()
            .iter()
            .map(|&(x, y)| self.mult(f.map_mor(x), f.map_mor(y)).clone())
            .collect();
        let units = src.objects().map(|o| self.unit(f.map_obj(o)).clone()).collect();
        Polyalgebra::new(self.field.clone(), src.clone(), spaces, mult, units)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polybialgebra<F: Field> {
    alg: Polyalgebra<F>,
    comult: Vec<Matrix<F>>,
    counit: Vec<Matrix<F>>,
}

impl<F: Field> Deref for Polybialgebra<F> {
    type Target = Polyalgebra<F>;
    fn deref(&self) -> &Polyalgebra<F> {
        &self.alg
    }
}

/// One fusion operator and its inverse, if any.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionEntry<F: Field> {
    pub a: Mor,
    pub b: Mor,
    pub side: Side,
    pub matrix: Matrix<F>,
    pub inverse: std::result::Result<Matrix<F>, NotInvertible>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FusionReport<F: Field> {
    pub entries: Vec<FusionEntry<F>>,
}

impl<F: Field> FusionReport<F> {
    pub fn side_is_hopf(&self, side: Side) -> bool {
        self.entries.iter().filter(|e| e.side == side).all(|e| e.inverse.is_ok())
    }
    pub fn left_hopf(&self) -> bool {
        self.side_is_hopf(Side::Left)
    }
    pub fn right_hopf(&self) -> bool {
        self.side_is_hopf(Side::Right)
    }
    pub fn is_hopf(&self) -> bool {
        self.left_hopf() && self.right_hopf()
    }

    pub fn entry(&self, side: Side, a: Mor, b: Mor) -> Option<&FusionEntry<F>> {
        self.entries.iter().find(|e| e.side == side && e.a == a && e.b == b)
    }

    pub fn to_report(&self, cat: &FinCategory) -> Report {
        let mut r = Report::new("fusion operators");
        for e in &self.entries {
            let name = format!("{} fusion at ({},{})", e.side, cat.morphism_name(e.a), cat.morphism_name(e.b));
            let c = match &e.inverse {
                Ok(inv) => {
                    // witness inverses are multiplied back before being trusted
                    let ok = e.matrix.mul(inv).is_identity() && inv.mul(&e.matrix).is_identity();
                    Check::verdict(name, ok, format!("{}x{} invertible", e.matrix.rows(), e.matrix.cols()))
                }
                Err(ni) => Check::fail(name, ni.to_string()).with_witness("fusion matrix", &e.matrix),
            };
            r.push(c);
        }
        let verdict = match (self.left_hopf(), self.right_hopf()) {
            (true, true) => "Hopf",
            (true, false) => "left Hopf only",
            (false, true) => "right Hopf only",
            (false, false) => "neither left nor right Hopf",
        };
        r.note(format!("verdict: {verdict}"));
        r
    }
}

/// Result of the transitivity test for one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityEntry {
    pub a: Mor,
    pub dim: usize,
    pub cokernel_dim: usize,
    pub counit_compatible: bool,
}

impl TransitivityEntry {
    pub fn primary(&self) -> bool {
        self.dim > 0
    }
    pub fn cross_check(&self) -> bool {
        self.cokernel_dim == 1 && self.counit_compatible
    }
}

impl<F: Field> Polybialgebra<F> {
    pub fn new(alg: Polyalgebra<F>, comult: Vec<Matrix<F>>, counit: Vec<Matrix<F>>) -> Result<Self> {
        let n = alg.cat().num_morphisms();
        if comult.len() != n || counit.len() != n {
            return Err(shape("one comultiplication and one counit per morphism"));
        }
        for a in alg.cat().morphisms() {
            let d = alg.dim(a);
            check_matrix(alg.field(), &comult[a.0], d * d, d, &format!("Δ_{}", alg.name(a)))?;
            check_matrix(alg.field(), &counit[a.0], 1, d, &format!("ε_{}", alg.name(a)))?;
        }
        Ok(Polybialgebra { alg, comult, counit })
    }

    pub fn algebra(&self) -> &Polyalgebra<F> {
        &self.alg
    }
    pub fn algebra_mut(&mut self) -> &mut Polyalgebra<F> {
        &mut self.alg
    }
    pub fn comult(&self, a: Mor) -> &Matrix<F> {
        &self.comult[a.0]
    }
    pub fn counit(&self, a: Mor) -> &Matrix<F> {
        &self.counit[a.0]
    }

    pub fn set_comult(&mut self, a: Mor, m: Matrix<F>) -> Result<()> {
        let d = self.dim(a);
        check_matrix(self.field(), &m, d * d, d, "replacement comultiplication")?;
        self.comult[a.0] = m;
        Ok(())
    }

    pub fn set_counit(&mut self, a: Mor, m: Matrix<F>) -> Result<()> {
        check_matrix(self.field(), &m, 1, self.dim(a), "replacement counit")?;
        self.counit[a.0] = m;
        Ok(())
    }

    pub fn pullback(&self, f: &FunctorData) -> Result<Self> {
        let alg = self.alg.pullback(f)?;
        let comult = f.source.morphisms().map(|x| self.comult(f.map_mor(x)).clone()).collect();
        let counit = f.source.morphisms().map(|x| self.counit(f.map_mor(x)).clone()).collect();
        Polybialgebra::new(alg, comult, counit)
    }

    /// `T²_a(X,Y): M_a⊗X⊗Y -> M_a⊗X⊗M_a⊗Y` for `dim X = dx`, `dim Y = dy`.
    pub fn t2(&self, a: Mor, dx: usize, dy: usize) -> Matrix<F> {
        let d = self.dim(a);
        self.comult(a)
            .tensor(&self.id(dx * dy))
            .permute_row_legs(&[d, d, dx, dy], &[0, 2, 1, 3])
    }

    /// `H^l_{a,b}(X,Y): M_a⊗X⊗M_b⊗Y -> M_a⊗X⊗M_{ab}⊗Y`.
    pub fn fusion_left(&self, a: Mor, b: Mor, dx: usize, dy: usize) -> Result<Matrix<F>> {
        let m = self.try_mult(a, b)?;
        let outer = Matrix::tensor_all(self.field(), &[&self.id(self.dim(a) * dx), m, &self.id(dy)]);
        Ok(outer.mul(&self.t2(a, dx, self.dim(b) * dy)))
    }

    /// `H^r_{a,b}(Y,X): M_a⊗M_b⊗Y⊗X -> M_{ab}⊗Y⊗M_a⊗X`.
    pub fn fusion_right(&self, a: Mor, b: Mor, dy: usize, dx: usize) -> Result<Matrix<F>> {
        let m = self.try_mult(a, b)?;
        let outer = Matrix::tensor_all(self.field(), &[m, &self.id(dy * self.dim(a) * dx)]);
        Ok(outer.mul(&self.t2(a, self.dim(b) * dy, dx)))
    }

    /// The fusion operator at trivial outer objects:
    /// `H^l_{a,b} = (M_a ⊗ m_{a,b})(Δ_a ⊗ M_b)` and
    /// `H^r_{a,b} = (m_{a,b} ⊗ M_a)(M_a ⊗ τ)(Δ_a ⊗ M_b)`.
    pub fn fusion(&self, side: Side, a: Mor, b: Mor) -> Result<Matrix<F>> {
        match side {
            Side::Left => self.fusion_left(a, b, 1, 1),
            Side::Right => self.fusion_right(a, b, 1, 1),
        }
    }

    pub fn is_hopf(&self) -> FusionReport<F> {
        let jobs: Vec<(Side, Mor, Mor)> = [Side::Left, Side::Right]
            .into_iter()
            .flat_map(|s| self.cat().composable_pairs().iter().map(move |&(a, b)| (s, a, b)))
            .collect();
        let entries = par::map(&jobs, |&(side, a, b)| {
            let matrix = self.fusion(side, a, b).expect("pairs are composable");
            let inverse = matrix.try_invert();
            FusionEntry { a, b, side, matrix, inverse }
        });
        FusionReport { entries }
    }

    /// The classical antipode `S = (ε ⊗ M)(H^l)^{-1}(M ⊗ u)` when the source
    /// has one object and one morphism.
    pub fn antipode(&self) -> Option<Matrix<F>> {
        if self.cat().num_morphisms() != 1 {
            return None;
        }
        let a = Mor(0);
        let inv = self.fusion(Side::Left, a, a).ok()?.try_invert().ok()?;
        let d = self.dim(a);
        let lhs = self.counit(a).tensor(&self.id(d));
        let rhs = self.id(d).tensor(self.unit(Obj(0)));
        Some(lhs.mul(&inv).mul(&rhs))
    }

    pub fn transitivity(&self) -> Vec<TransitivityEntry> {
        self.cat()
            .morphisms()
            .map(|a| {
                let d = self.dim(a);
                let eps = self.counit(a);
                let diff = self.id(d).tensor(eps).sub(&eps.tensor(&self.id(d)));
                let coker = diff.cokernel();
                let counit_compatible = eps.mul(&diff).is_zero()
                    && (coker.dim != 1
                        || Matrix::vstack(self.field(), d, &[&coker.projection, eps]).rank() == 1);
                TransitivityEntry { a, dim: d, cokernel_dim: coker.dim, counit_compatible }
            })
            .collect()
    }

    pub fn is_transitive(&self) -> Report {
        let mut r = Report::new("transitivity");
        for e in self.transitivity() {
            let name = format!("block {}", self.name(e.a));
            let detail = format!(
                "dim {}, counit-cofork cokernel dim {}",
                e.dim, e.cokernel_dim
            );
            if e.primary() != e.cross_check() {
                r.push(Check::fail(name, format!("criteria disagree: {detail}")));
            } else {
                r.push(Check::verdict(name, e.primary(), detail));
            }
        }
        r
    }

    /// Coassociativity, counitality, and that products and units are
    /// coalgebra morphisms.
    pub fn validate(&self) -> Report {
        let mut r = self.alg.validate();
        r.title = "polybialgebra axioms".into();
        let morphisms: Vec<Mor> = self.cat().morphisms().collect();
        let coalg = par::map(&morphisms, |&a| {
            let d = self.dim(a);
            let (delta, eps) = (self.comult(a), self.counit(a));
            let i = self.id(d);
            let lhs = delta.tensor(&i).mul(delta);
            let rhs = i.tensor(delta).mul(delta);
            let c = Check::equal("", &lhs, &rhs).with_detail("coassociativity");
            if !c.passed {
                return (self.name(a).to_string(), c);
            }
            let left = eps.tensor(&i).mul(delta);
            let right = i.tensor(eps).mul(delta);
            let c = Check::equal("", &left, &i);
            let c = if c.passed { Check::equal("", &right, &i) } else { c };
            (self.name(a).to_string(), c.with_detail("counit"))
        });
        push_family(&mut r, "coalgebra", coalg);
        let pairs = self.cat().composable_pairs().to_vec();
        let comult_mult = par::map(&pairs, |&(a, b)| {
            let ab = self.cat().compose(a, b).unwrap();
            let m = self.mult(a, b);
            let (da, db) = (self.dim(a), self.dim(b));
            let lhs = self.comult(ab).mul(m);
            let middle = self.comult(a).tensor(self.comult(b)).permute_row_legs(&[da, da, db, db], &[0, 2, 1, 3]);
            let rhs = m.tensor(m).mul(&middle);
            (self.pair_name(a, b), Check::equal("", &lhs, &rhs))
        });
        push_family(&mut r, "comultiplication is multiplicative", comult_mult);
        let counit_mult = par::map(&pairs, |&(a, b)| {
            let ab = self.cat().compose(a, b).unwrap();
            let lhs = self.counit(ab).mul(self.mult(a, b));
            let rhs = self.counit(a).tensor(self.counit(b));
            (self.pair_name(a, b), Check::equal("", &lhs, &rhs))
        });
        push_family(&mut r, "counit is multiplicative", counit_mult);
        let units: Vec<(String, Check)> = self
            .cat()
            .objects()
            .map(|i| {
                let id = self.cat().identity(i);
                let u = self.unit(i);
                let c = Check::equal("", &self.comult(id).mul(u), &u.tensor(u));
                let c = if c.passed { Check::equal("", &self.counit(id).mul(u), &self.id(1)) } else { c };
                (self.cat().object_name(i).to_string(), c)
            })
            .collect();
        push_family(&mut r, "units are grouplike", units);
        r
    }

    /// The identities satisfied by fusion operators, instantiated with outer
    /// objects of the given dimensions `(dim X, dim Y, dim Z)`; `Z` also plays
    /// the role of the second object `X'` where one is needed.
    pub fn check_fusion_identities(&self, probes: &[(usize, usize, usize)]) -> Report {
        let mut r = Report::new("fusion operator identities");
        for &(dx, dy, dz) in probes {
            let suffix = if probes.len() > 1 { format!(" [dims {dx},{dy},{dz}]") } else { String::new() };
            for (name, inst) in self.fusion_identity_instances(dx, dy, dz) {
                push_family(&mut r, &format!("{name}{suffix}"), inst);
            }
        }
        r
    }

    fn fusion_identity_instances(&self, dx: usize, dy: usize, dz: usize) -> Vec<(String, Vec<(String, Check)>)> {
        let cat = self.cat();
        let f = self.field();
        let d = |a: Mor| self.dim(a);
        let id = |n: usize| self.id(n);
        let kron = |ms: &[&Matrix<F>]| Matrix::tensor_all(f, ms);
        let hl = |a, b, x, y| self.fusion_left(a, b, x, y).unwrap();
        let hr = |a, b, y, x| self.fusion_right(a, b, y, x).unwrap();
        let comp = |a, b| cat.compose(a, b).unwrap();
        let triples = cat.composable_triples();
        let pairs = cat.composable_pairs().to_vec();
        let morphisms: Vec<Mor> = cat.morphisms().collect();
        let tname = |a: Mor, b: Mor, c: Mor| format!("({},{},{})", self.name(a), self.name(b), self.name(c));
        let mut out = Vec::new();

        // (1) compatibility with the product
        let inst = par::map(&triples, |&(a, b, c)| {
            let (bc, ab) = (comp(b, c), comp(a, b));
            let lhs = hl(a, bc, dx, dy).mul(&kron(&[&id(d(a) * dx), self.mult(b, c), &id(dy)]));
            let rhs = kron(&[&id(d(a) * dx), self.mult(ab, c), &id(dy)]).mul(&hl(a, b, dx, d(c) * dy));
            let left = Check::equal("", &lhs, &rhs);
            let lhs = hr(a, bc, dy, dx).mul(&kron(&[&id(d(a)), self.mult(b, c), &id(dy * dx)]));
            let rhs = kron(&[self.mult(ab, c), &id(dy * d(a) * dx)]).mul(&hr(a, b, d(c) * dy, dx));
            let right = Check::equal("", &lhs, &rhs);
            (tname(a, b, c), both(left, right))
        });
        out.push(("fusion identity (1)".to_string(), inst));

        // (2) against the unit of the source of a
        let inst = par::map(&morphisms, |&a| {
            let j = cat.src(a);
            let idj = cat.identity(j);
            let u = self.unit(j);
            let lhs = hl(a, idj, dx, dy).mul(&kron(&[&id(d(a) * dx), u, &id(dy)]));
            let left = Check::equal("", &lhs, &self.t2(a, dx, dy));
            let lhs = hr(a, idj, dx, dy).mul(&kron(&[&id(d(a)), u, &id(dx * dy)]));
            let right = Check::equal("", &lhs, &self.t2(a, dx, dy));
            (self.name(a).to_string(), both(left, right))
        });
        out.push(("fusion identity (2)".to_string(), inst));

        // (3) against the unit of the target of a
        let inst = par::map(&morphisms, |&a| {
            let i = cat.tgt(a);
            let idi = cat.identity(i);
            let u = self.unit(i);
            let lhs = hl(idi, a, dx, dy).mul(&kron(&[u, &id(dx * d(a) * dy)]));
            let rhs = kron(&[u, &id(dx * d(a) * dy)]);
            let left = Check::equal("", &lhs, &rhs);
            let lhs = hr(idi, a, dy, dx).mul(&kron(&[u, &id(d(a) * dy * dx)]));
            let rhs = kron(&[&id(d(a) * dy), u, &id(dx)]);
            let right = Check::equal("", &lhs, &rhs);
            (self.name(a).to_string(), both(left, right))
        });
        out.push(("fusion identity (3)".to_string(), inst));

        // (4) compatibility with T² in the first variable; X' has dimension dz
        let dx2 = dz;
        let inst = par::map(&pairs, |&(a, b)| {
            let ab = comp(a, b);
            let lhs = kron(&[&self.t2(a, dx, dx2), &id(d(ab) * dy)]).mul(&hl(a, b, dx * dx2, dy));
            let rhs = kron(&[&id(d(a) * dx), &hl(a, b, dx2, dy)]).mul(&self.t2(a, dx, dx2 * d(b) * dy));
            let left = Check::equal("", &lhs, &rhs);
            let lhs = kron(&[&id(d(ab) * dy), &self.t2(a, dx, dx2)]).mul(&hr(a, b, dy, dx * dx2));
            let rhs = kron(&[&hr(a, b, dy, dx), &id(d(a) * dx2)]).mul(&self.t2(a, d(b) * dy * dx, dx2));
            let right = Check::equal("", &lhs, &rhs);
            (self.pair_name(a, b), both(left, right))
        });
        out.push(("fusion identity (4)".to_string(), inst));

        // (5) counit of ab
        let inst = par::map(&pairs, |&(a, b)| {
            let ab = comp(a, b);
            let lhs = kron(&[&id(d(a) * dx), self.counit(ab)]).mul(&hl(a, b, dx, 1));
            let rhs = kron(&[&id(d(a) * dx), self.counit(b)]);
            let left = Check::equal("", &lhs, &rhs);
            let lhs = kron(&[self.counit(ab), &id(d(a) * dx)]).mul(&hr(a, b, 1, dx));
            let rhs = kron(&[&id(d(a)), self.counit(b), &id(dx)]);
            let right = Check::equal("", &lhs, &rhs);
            (self.pair_name(a, b), both(left, right))
        });
        out.push(("fusion identity (5)".to_string(), inst));

        // (6) counit of a recovers the product
        let inst = par::map(&pairs, |&(a, b)| {
            let ab = comp(a, b);
            let mu = self.mu(a, b, dx);
            let lhs = kron(&[self.counit(a), &id(d(ab) * dx)]).mul(&hl(a, b, 1, dx));
            let left = Check::equal("", &lhs, &mu);
            let lhs = kron(&[&id(d(ab) * dx), self.counit(a)]).mul(&hr(a, b, dx, 1));
            let right = Check::equal("", &lhs, &mu);
            (self.pair_name(a, b), both(left, right))
        });
        out.push(("fusion identity (6)".to_string(), inst));

        // (7) pentagon; X at src(a), Y at src(b), Z at src(c)
        let inst = par::map(&triples, |&(a, b, c)| {
            let (ab, bc) = (comp(a, b), comp(b, c));
            let abc = comp(ab, c);
            let lhs = kron(&[&hl(a, b, dx, dy), &id(d(abc) * dz)])
                .mul(&hl(a, bc, dx * d(b) * dy, dz))
                .mul(&kron(&[&id(d(a) * dx), &hl(b, c, dy, dz)]));
            let rhs = kron(&[&id(d(a) * dx), &hl(ab, c, dy, dz)]).mul(&hl(a, b, dx, dy * d(c) * dz));
            let left = Check::equal("", &lhs, &rhs);
            let lhs = kron(&[&id(d(abc) * dz), &hr(a, b, dy, dx)])
                .mul(&hr(a, bc, dz, d(b) * dy * dx))
                .mul(&kron(&[&id(d(a)), &hr(b, c, dz, dy), &id(dx)]));
            let rhs = kron(&[&hr(ab, c, dz, dy), &id(d(a) * dx)]).mul(&hr(a, b, d(c) * dz * dy, dx));
            let right = Check::equal("", &lhs, &rhs);
            (tname(a, b, c), both(left, right))
        });
        out.push(("pentagon (7)".to_string(), inst));
        out
    }
}

fn both(left: Check, right: Check) -> Check {
    match (left.passed, right.passed) {
        (true, true) => Check::pass(""),
        (false, _) => left.with_detail("left-handed version"),
        (true, false) => right.with_detail("right-handed version"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::fixtures;

    #[test]
    fn kz2_left_fusion_by_hand() {
        // basis e, g; H(x⊗y) = x⊗xy for grouplike x
        let b = fixtures::kz2(&Rationals);
        let h = b.fusion(Side::Left, Mor(0), Mor(0)).unwrap();
        // columns e⊗e, e⊗g, g⊗e, g⊗g map to e⊗e, e⊗g, g⊗g, g⊗e
        let expected = Matrix::from_i64(
            &Rationals,
            4,
            4,
            &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
        );
        assert_eq!(h, expected);
        assert_eq!(h.rank(), 4);
    }

    #[test]
    fn const_fusion_is_trivial() {
        let b = fixtures::constant(&Rationals, &crate::fincat::standard_category(&crate::fincat::StandardKind::Delta1).unwrap());
        for &(a, c) in b.cat().composable_pairs() {
            for side in [Side::Left, Side::Right] {
                assert!(b.fusion(side, a, c).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn non_composable_pair_is_rejected() {
        let d = crate::fincat::standard_category(&crate::fincat::StandardKind::Delta1).unwrap();
        let b = fixtures::constant(&Rationals, &d);
        let u = d.find_morphism("u").unwrap();
        assert!(matches!(b.fusion(Side::Left, u, u), Err(PolyadError::NotComposable { .. })));
    }

    #[test]
    fn shape_errors() {
        let b = fixtures::kz2(&Rationals);
        let mut p = b.algebra().clone();
        let bad = Matrix::identity(&Rationals, 3);
        assert!(matches!(p.set_mult(Mor(0), Mor(0), bad), Err(PolyadError::ShapeMismatch(_))));
    }

    #[test]
    fn sweedler_antipode() {
        let b = fixtures::sweedler(&Rationals);
        let s = b.antipode().unwrap();
        // S(g) = g, S(x) = -gx, S(gx) = x with basis order 1, g, x, gx
        let expected = Matrix::from_i64(&Rationals, 4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
        assert_eq!(s, expected);
    }
}
