//! The lift of a representable polyad: unit algebras `A_i = M_{id_i}`, the
//! blocks `M_a` as `A_i`-`A_j`-bimodules, relative tensor products and the
//! lifted structure maps `μ̃`, `T̃⁰`, `T̃²`.

use crate::error::{PolyadError, Result};
use crate::field::Field;
use crate::fincat::{Mor, Obj};
use crate::matrix::Matrix;
use crate::par;
use crate::polyalg::{Polyalgebra, Polybialgebra};
use crate::report::{Check, Report};
use crate::space::LabeledSpace;

#[derive(Clone, Debug, PartialEq)]
pub struct FinAlgebra<F: Field> {
    pub space: LabeledSpace,
    pub mult: Matrix<F>,
    pub unit: Matrix<F>,
}

impl<F: Field> FinAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn validate(&self) -> Report {
        let f = self.mult.field();
        let id = Matrix::identity(f, self.dim());
        let mut r = Report::new("algebra");
        r.push(Check::equal(
            "associativity",
            &self.mult.mul(&self.mult.tensor(&id)),
            &self.mult.mul(&id.tensor(&self.mult)),
        ));
        r.push(Check::equal("left unit", &self.mult.mul(&self.unit.tensor(&id)), &id));
        r.push(Check::equal("right unit", &self.mult.mul(&id.tensor(&self.unit)), &id));
        r
    }

    /// The ground field.
    pub fn ground(field: &F) -> Self {
        FinAlgebra {
            space: LabeledSpace::from_strs(&["1"]),
            mult: Matrix::identity(field, 1),
            unit: Matrix::identity(field, 1),
        }
    }
}

/// An `A`-`B`-bimodule with `left: A⊗M -> M`, `right: M⊗B -> M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule<F: Field> {
    pub space: LabeledSpace,
    pub left_algebra: FinAlgebra<F>,
    pub right_algebra: FinAlgebra<F>,
    pub left: Matrix<F>,
    pub right: Matrix<F>,
}

impl<F: Field> Bimodule<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn validate(&self) -> Report {
        let f = self.left.field();
        let (a, b) = (&self.left_algebra, &self.right_algebra);
        let id = |n| Matrix::identity(f, n);
        let d = self.dim();
        let mut r = Report::new("bimodule");
        r.push(Check::equal(
            "left action associative",
            &self.left.mul(&a.mult.tensor(&id(d))),
            &self.left.mul(&id(a.dim()).tensor(&self.left)),
        ));
        r.push(Check::equal("left action unital", &self.left.mul(&a.unit.tensor(&id(d))), &id(d)));
        r.push(Check::equal(
            "right action associative",
            &self.right.mul(&id(d).tensor(&b.mult)),
            &self.right.mul(&self.right.tensor(&id(b.dim()))),
        ));
        r.push(Check::equal("right action unital", &self.right.mul(&id(d).tensor(&b.unit)), &id(d)));
        r.push(Check::equal(
            "actions commute",
            &self.left.mul(&id(a.dim()).tensor(&self.right)),
            &self.right.mul(&self.left.tensor(&id(b.dim()))),
        ));
        r
    }
}

pub fn unit_algebra<F: Field>(p: &Polyalgebra<F>, i: Obj) -> FinAlgebra<F> {
    let id = p.cat().identity(i);
    FinAlgebra { space: p.space(id).clone(), mult: p.mult(id, id).clone(), unit: p.unit(i).clone() }
}

pub fn unit_algebras<F: Field>(p: &Polyalgebra<F>) -> Vec<FinAlgebra<F>> {
    p.cat().objects().map(|i| unit_algebra(p, i)).collect()
}

pub fn bimodule_of<F: Field>(p: &Polyalgebra<F>, a: Mor) -> Bimodule<F> {
    let cat = p.cat();
    let (i, j) = (cat.tgt(a), cat.src(a));
    Bimodule {
        space: p.space(a).clone(),
        left_algebra: unit_algebra(p, i),
        right_algebra: unit_algebra(p, j),
        left: p.mult(cat.identity(i), a).clone(),
        right: p.mult(a, cat.identity(j)).clone(),
    }
}

/// A quotient `V -> V/K` with a chosen section.
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient<F: Field> {
    pub projection: Matrix<F>,
    /// `projection · section = id`.
    pub section: Matrix<F>,
}

impl<F: Field> Quotient<F> {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// The cokernel of `relations`.
    pub fn of(relations: &Matrix<F>) -> Self {
        let projection = relations.cokernel().projection;
        let f = relations.field();
        let section = projection
            .solve(&Matrix::identity(f, projection.rows()))
            .expect("a cokernel projection is surjective");
        Quotient { projection, section }
    }
}

/// `M ⊗_A X` for a right `A`-module structure `r: M⊗A -> M` and a left one
/// `l: A⊗X -> X`: the cokernel of `r ⊗ X - M ⊗ l`.
pub fn balanced_quotient<F: Field>(r: &Matrix<F>, dm: usize, l: &Matrix<F>, dx: usize) -> Quotient<F> {
    let f = r.field();
    let rel = r.tensor(&Matrix::identity(f, dx)).sub(&Matrix::identity(f, dm).tensor(l));
    Quotient::of(&rel)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeTensor<F: Field> {
    pub quotient: Quotient<F>,
    pub bimodule: Bimodule<F>,
    /// Whether the induced actions factor through the quotient.
    pub report: Report,
}

pub fn relative_tensor<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<RelativeTensor<F>> {
    if m.right_algebra != n.left_algebra {
        return Err(PolyadError::MiddleMismatch);
    }
    let f = m.left.field();
    let id = |k| Matrix::identity(f, k);
    let (dm, dn) = (m.dim(), n.dim());
    let (da, dc) = (m.left_algebra.dim(), n.right_algebra.dim());
    let rel = m.right.tensor(&id(dn)).sub(&id(dm).tensor(&n.left));
    let q = Quotient::of(&rel);
    let p = &q.projection;
    let mut report = Report::new("relative tensor product");
    report.push(Check::verdict("projection kills the relations", p.mul(&rel).is_zero(), ""));

    let lift_left = p.mul(&m.left.tensor(&id(dn)));
    let lift_right = p.mul(&id(dm).tensor(&n.right));
    report.push(Check::verdict(
        "left action factors",
        lift_left.mul(&id(da).tensor(&rel)).is_zero(),
        "",
    ));
    report.push(Check::verdict(
        "right action factors",
        lift_right.mul(&rel.tensor(&id(dc))).is_zero(),
        "",
    ));
    let left = lift_left.mul(&id(da).tensor(&q.section));
    let right = lift_right.mul(&q.section.tensor(&id(dc)));
    let bimodule = Bimodule {
        space: LabeledSpace::numbered("t", q.dim()),
        left_algebra: m.left_algebra.clone(),
        right_algebra: n.right_algebra.clone(),
        left,
        right,
    };
    Ok(RelativeTensor { quotient: q, bimodule, report })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftedProduct<F: Field> {
    pub tensor: RelativeTensor<F>,
    /// `μ̃_{a,b}: M_a ⊗_{A_j} M_b -> M_{ab}`.
    pub matrix: Matrix<F>,
    /// `μ̃ · projection = m_{a,b}` holds exactly.
    pub well_defined: bool,
}

pub fn lifted_product<F: Field>(p: &Polyalgebra<F>, a: Mor, b: Mor) -> Result<LiftedProduct<F>> {
    let m = p.try_mult(a, b)?;
    let tensor = relative_tensor(&bimodule_of(p, a), &bimodule_of(p, b))?;
    let matrix = m.mul(&tensor.quotient.section);
    let well_defined = matrix.mul(&tensor.quotient.projection) == *m;
    Ok(LiftedProduct { tensor, matrix, well_defined })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairLift {
    pub a: Mor,
    pub b: Mor,
    pub dim: usize,
    pub well_defined: bool,
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnitLift {
    pub a: Mor,
    /// `dim T̃_a(1)`.
    pub dim: usize,
    pub counit_factors: bool,
    /// `T̃⁰_a` invertible.
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorLift {
    pub a: Mor,
    /// Free modules `A_j ⊗ k^n`, `A_j ⊗ k^m`.
    pub n: usize,
    pub m: usize,
    pub well_defined: bool,
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftReport {
    pub hopf: bool,
    pub transitive: bool,
    pub max_dim: usize,
    pub pairs: Vec<PairLift>,
    pub units: Vec<UnitLift>,
    pub tensors: Vec<TensorLift>,
}

impl LiftReport {
    /// (a) every `μ̃` invertible.
    pub fn products_ok(&self) -> bool {
        self.pairs.iter().all(|p| p.well_defined && p.invertible)
    }
    /// (b) every `T̃_a(1)` one-dimensional with `T̃⁰_a` invertible.
    pub fn units_ok(&self) -> bool {
        self.units.iter().all(|u| u.dim == 1 && u.counit_factors && u.invertible)
    }
    /// (c) every probed `T̃²_a` invertible.
    pub fn tensors_ok(&self) -> bool {
        self.tensors.iter().all(|t| t.well_defined && t.invertible)
    }
    pub fn passed(&self) -> bool {
        self.products_ok() && self.units_ok() && self.tensors_ok()
    }

    pub fn to_report<F: Field>(&self, b: &Polybialgebra<F>) -> Report {
        let mut r = Report::new("lift");
        r.push(Check::verdict("hypothesis: Hopf", self.hopf, "fusion operators invertible"));
        r.push(Check::verdict("hypothesis: transitive", self.transitive, "every block is a transitive coalgebra"));
        for p in &self.pairs {
            let name = format!("(a) μ̃ at {}", b.pair_name(p.a, p.b));
            let ok = p.well_defined && p.invertible;
            let detail = format!("relative tensor of dim {} -> {}", p.dim, b.dim(b.cat().compose(p.a, p.b).unwrap()));
            r.push(Check::verdict(name, ok, detail));
        }
        for u in &self.units {
            let name = format!("(b) T̃⁰ at {}", b.name(u.a));
            let ok = u.dim == 1 && u.counit_factors && u.invertible;
            r.push(Check::verdict(name, ok, format!("dim T̃(1) = {}", u.dim)));
        }
        for t in &self.tensors {
            let name = format!("(c) T̃² at {} on free modules of rank {},{}", b.name(t.a), t.n, t.m);
            r.push(Check::verdict(name, t.well_defined && t.invertible, ""));
        }
        r.note(format!(
            "strong tensor compatibility probed on free modules of rank up to {}; the unit of each lifted category is the field acting through the counit",
            self.max_dim
        ));
        r
    }
}

fn unit_lift<F: Field>(b: &Polybialgebra<F>, a: Mor) -> UnitLift {
    let cat = b.cat();
    let j = cat.src(a);
    let idj = cat.identity(j);
    let d = b.dim(a);
    let r = b.mult(a, idj);
    let l = b.counit(idj);
    let rel = r.sub(&Matrix::identity(b.field(), d).tensor(l));
    let q = Quotient::of(&rel);
    let eps = b.counit(a);
    let counit_factors = eps.mul(&rel).is_zero();
    let t0 = eps.mul(&q.section);
    UnitLift { a, dim: q.dim(), counit_factors, invertible: t0.try_invert().is_ok() }
}

/// `T̃²_a` on `V = A_j ⊗ k^n`, `W = A_j ⊗ k^m`.
fn tensor_lift<F: Field>(b: &Polybialgebra<F>, a: Mor, n: usize, m: usize) -> TensorLift {
    let f = b.field();
    let cat = b.cat();
    let j = cat.src(a);
    let idj = cat.identity(j);
    let aj = b.dim(idj);
    let (dv, dw) = (aj * n, aj * m);
    let lv = b.mu(idj, idj, n);
    let lw = b.mu(idj, idj, m);
    let lvw = lv.tensor(&lw).mul(&b.t2(idj, dv, dw));
    let r = b.mult(a, idj);
    let da = b.dim(a);
    let qv = balanced_quotient(r, da, &lv, dv);
    let qw = balanced_quotient(r, da, &lw, dw);
    let qvw = balanced_quotient(r, da, &lvw, dv * dw);
    let t2 = b.t2(a, dv, dw);
    let outer = qv.projection.tensor(&qw.projection);
    let rel = r
        .tensor(&Matrix::identity(f, dv * dw))
        .sub(&Matrix::identity(f, da).tensor(&lvw));
    let well_defined = outer.mul(&t2).mul(&rel).is_zero();
    let lifted = outer.mul(&t2).mul(&qvw.section);
    TensorLift { a, n, m, well_defined, invertible: lifted.try_invert().is_ok() }
}

/// Checks (a) `μ̃` invertible, (b) `T̃⁰` invertible with `T̃_a(1)` a line,
/// (c) `T̃²` invertible on free modules of rank `1..=max_dim`. Runs all
/// diagnostics even when the hypotheses fail.
pub fn lift_fundamental_check<F: Field>(b: &Polybialgebra<F>, max_dim: usize) -> LiftReport {
    let cat = b.cat();
    let hopf = b.is_hopf().is_hopf();
    let transitive = b.is_transitive().passed();
    let pairs = par::map(cat.composable_pairs(), |&(a, bm)| {
        let lp = lifted_product(b, a, bm).expect("pairs are composable");
        PairLift {
            a,
            b: bm,
            dim: lp.tensor.quotient.dim(),
            well_defined: lp.well_defined && lp.tensor.report.passed(),
            invertible: lp.matrix.try_invert().is_ok(),
        }
    });
    let morphisms: Vec<Mor> = cat.morphisms().collect();
    let units = par::map(&morphisms, |&a| unit_lift(b, a));
    let jobs: Vec<(Mor, usize, usize)> = morphisms
        .iter()
        .flat_map(|&a| (1..=max_dim).flat_map(move |n| (1..=max_dim).map(move |m| (a, n, m))))
        .collect();
    let tensors = par::map(&jobs, |&(a, n, m)| tensor_lift(b, a, n, m));
    LiftReport { hopf, transitive, max_dim, pairs, units, tensors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::fincat::{standard_category, StandardKind};
    use crate::fixtures;

    #[test]
    fn unit_algebras_of_fixtures() {
        let q = Rationals;
        let a = unit_algebras(&fixtures::kz2(&q));
        assert_eq!(a[0].mult, fixtures::cyclic_group_algebra(&q, 2).mult);
        let h = fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2);
        assert!(unit_algebras(&h).iter().all(|x| x.dim() == 2 && x.validate().passed()));
        let c = fixtures::constant(&q, &standard_category(&StandardKind::Delta1).unwrap());
        assert!(unit_algebras(&c).iter().all(|x| *x == FinAlgebra::ground(&q)));
    }

    #[test]
    fn bimodules_validate() {
        let q = Rationals;
        let h = fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2);
        for a in h.cat().morphisms() {
            assert!(bimodule_of(&h, a).validate().passed());
        }
        let g = fixtures::grp_cyclic(&q, 2);
        let bm = bimodule_of(&g, fixtures::mor(&g, "g"));
        assert_eq!(bm.dim(), 1);
        assert!(bm.validate().passed());
    }

    #[test]
    fn relative_tensor_dimensions() {
        let q = Rationals;
        let k = fixtures::kz2(&q);
        let a = bimodule_of(&k, Mor(0));
        let t = relative_tensor(&a, &a).unwrap();
        assert_eq!(t.quotient.dim(), 2);
        assert!(t.report.passed());
        assert!(t.bimodule.validate().passed());

        let s = fixtures::sweedler(&q);
        let g = fixtures::grp_cyclic(&q, 2);
        assert!(matches!(
            relative_tensor(&bimodule_of(&s, Mor(0)), &bimodule_of(&g, Mor(0))),
            Err(PolyadError::MiddleMismatch)
        ));

        let c = fixtures::constant(&q, &standard_category(&StandardKind::Delta1).unwrap());
        let u = fixtures::mor(&c, "u");
        let t = relative_tensor(&bimodule_of(&c, u), &bimodule_of(&c, Mor(0))).unwrap();
        assert!(t.quotient.projection.is_identity());
    }

    #[test]
    fn lifted_products() {
        let q = Rationals;
        let k = fixtures::kz2(&q);
        let lp = lifted_product(&k, Mor(0), Mor(0)).unwrap();
        assert!(lp.well_defined);
        assert!(lp.matrix.try_invert().is_ok());

        let c = fixtures::constant(&q, &standard_category(&StandardKind::Delta1).unwrap());
        let (u, id0) = (fixtures::mor(&c, "u"), fixtures::mor(&c, "id0"));
        let lp = lifted_product(&c, u, id0).unwrap();
        assert!(lp.matrix.mul(&lp.tensor.quotient.projection).is_identity());
        assert!(matches!(lifted_product(&c, u, u), Err(PolyadError::NotComposable { .. })));

        let h = fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2);
        let lp = lifted_product(&h, fixtures::mor(&h, "(1,2)"), fixtures::mor(&h, "(2,1)")).unwrap();
        assert_eq!(lp.tensor.quotient.dim(), 2);
        assert!(lp.well_defined && lp.matrix.try_invert().is_ok());
    }

    #[test]
    fn fundamental_check_on_hopf_category() {
        let q = Rationals;
        let h = fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2);
        let r = lift_fundamental_check(&h, 2);
        assert!(r.hopf && r.transitive);
        assert!(r.passed(), "{}", r.to_report(&h));
        assert_eq!(r.tensors.len(), 4 * 4);
    }

    #[test]
    fn mutants_fail_the_unit_check() {
        let q = Rationals;
        let z = lift_fundamental_check(&fixtures::delta1_zero_u(&q), 1);
        assert!(!z.transitive && !z.units_ok());
        let p = lift_fundamental_check(&fixtures::delta1_grouplike_pair(&q), 1);
        assert!(!p.hopf && !p.units_ok());
        let u = p.units.iter().find(|u| u.dim != 1).unwrap();
        assert_eq!(u.dim, 2);
    }
}
