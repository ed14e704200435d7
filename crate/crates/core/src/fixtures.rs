//! The named example library, generic over the field.
//!
//! Basis conventions: group elements are `e, g, g2, …`; the dual basis of a
//! function algebra is `d_e, d_g, …`; the Sweedler algebra has basis
//! `1, g, x, gx` with `g² = 1`, `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`.

use crate::field::Field;
use crate::fincat::{standard_category, FinCategory, GroupTable, Mor, StandardKind};
use crate::matrix::Matrix;
use crate::polyalg::{Polyalgebra, Polybialgebra};
use crate::space::LabeledSpace;

/// A single finite-dimensional bialgebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct Bialgebra<F: Field> {
    pub labels: Vec<String>,
    pub mult: Matrix<F>,
    pub unit: Matrix<F>,
    pub comult: Matrix<F>,
    pub counit: Matrix<F>,
}

/// Matrix from `(row, col, value)` triples.
pub fn sparse<F: Field>(f: &F, rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Matrix<F> {
    let mut m = Matrix::zeros(f, rows, cols);
    for &(r, c, v) in entries {
        m.add_at(r, c, &f.from_i64(v));
    }
    m
}

fn element_names(n: usize) -> Vec<String> {
    GroupTable::cyclic(n).names
}

/// `k` with its trivial bialgebra structure.
pub fn ground<F: Field>(f: &F) -> Bialgebra<F> {
    let one = Matrix::identity(f, 1);
    Bialgebra {
        labels: vec!["1".into()],
        mult: one.clone(),
        unit: one.clone(),
        comult: one.clone(),
        counit: one,
    }
}

/// The group algebra of `Z/n`.
pub fn cyclic_group_algebra<F: Field>(f: &F, n: usize) -> Bialgebra<F> {
    let mult = (0..n)
        .flat_map(|i| (0..n).map(move |j| ((i + j) % n, i * n + j, 1)))
        .collect::<Vec<_>>();
    let comult = (0..n).map(|i| (i * n + i, i, 1)).collect::<Vec<_>>();
    Bialgebra {
        labels: element_names(n),
        mult: sparse(f, n, n * n, &mult),
        unit: sparse(f, n, 1, &[(0, 0, 1)]),
        comult: sparse(f, n * n, n, &comult),
        counit: Matrix::from_fn(f, 1, n, |_, _| f.one()),
    }
}

/// The algebra of functions on `Z/n`, dual to the group algebra.
pub fn cyclic_function_algebra<F: Field>(f: &F, n: usize) -> Bialgebra<F> {
    let mult = (0..n).map(|x| (x, x * n + x, 1)).collect::<Vec<_>>();
    let comult = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x * n + y, (x + y) % n, 1)))
        .collect::<Vec<_>>();
    Bialgebra {
        labels: element_names(n).into_iter().map(|s| format!("d_{s}")).collect(),
        mult: sparse(f, n, n * n, &mult),
        unit: Matrix::from_fn(f, n, 1, |_, _| f.one()),
        comult: sparse(f, n * n, n, &comult),
        counit: sparse(f, 1, n, &[(0, 0, 1)]),
    }
}

/// The 4-dimensional Sweedler Hopf algebra.
pub fn sweedler_algebra<F: Field>(f: &F) -> Bialgebra<F> {
    // index of g^s x^t is s + 2t
    let mut mult = Vec::new();
    for (s1, t1) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (s2, t2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if t1 + t2 > 1 {
                continue;
            }
            let sign = if t1 * s2 == 1 { -1 } else { 1 };
            let row = (s1 + s2) % 2 + 2 * (t1 + t2);
            let col = (s1 + 2 * t1) * 4 + (s2 + 2 * t2);
            mult.push((row, col, sign));
        }
    }
    let comult = [
        (0, 0, 1),          // 1 -> 1⊗1
        (4 + 1, 1, 1),      // g -> g⊗g
        (2 * 4, 2, 1),      // x -> x⊗1
        (4 + 2, 2, 1),      //      + g⊗x
        (3 * 4 + 1, 3, 1),  // gx -> gx⊗g
        (3, 3, 1),          //       + 1⊗gx
    ];
    Bialgebra {
        labels: ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        mult: sparse(f, 4, 16, &mult),
        unit: sparse(f, 4, 1, &[(0, 0, 1)]),
        comult: sparse(f, 16, 4, &comult),
        counit: sparse(f, 1, 4, &[(0, 0, 1), (0, 1, 1)]),
    }
}

/// The monoid algebra of `{1, s}` with `s² = s`; a bialgebra that is not Hopf.
pub fn idempotent_monoid_algebra<F: Field>(f: &F) -> Bialgebra<F> {
    Bialgebra {
        labels: vec!["1".into(), "s".into()],
        mult: sparse(f, 2, 4, &[(0, 0, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1)]),
        unit: sparse(f, 2, 1, &[(0, 0, 1)]),
        comult: sparse(f, 4, 2, &[(0, 0, 1), (3, 1, 1)]),
        counit: sparse(f, 1, 2, &[(0, 0, 1), (0, 1, 1)]),
    }
}

/// Every block carries the same bialgebra `h`, with `m_{a,b} = m`.
pub fn uniform<F: Field>(f: &F, cat: &FinCategory, h: &Bialgebra<F>) -> Polybialgebra<F> {
    let space = LabeledSpace::new(h.labels.clone()).expect("distinct labels");
    let alg = Polyalgebra::new(
        f.clone(),
        cat.clone(),
        vec![space; cat.num_morphisms()],
        vec![h.mult.clone(); cat.composable_pairs().len()],
        vec![h.unit.clone(); cat.num_objects()],
    )
    .expect("uniform shapes agree");
    Polybialgebra::new(
        alg,
        vec![h.comult.clone(); cat.num_morphisms()],
        vec![h.counit.clone(); cat.num_morphisms()],
    )
    .expect("uniform shapes agree")
}

fn terminal() -> FinCategory {
    standard_category(&StandardKind::Terminal).unwrap()
}

/// `h` as a polyad over the terminal category.
pub fn star<F: Field>(f: &F, h: &Bialgebra<F>) -> Polybialgebra<F> {
    uniform(f, &terminal(), h)
}

pub fn kz2<F: Field>(f: &F) -> Polybialgebra<F> {
    star(f, &cyclic_group_algebra(f, 2))
}

pub fn kzn<F: Field>(f: &F, n: usize) -> Polybialgebra<F> {
    star(f, &cyclic_group_algebra(f, n))
}

pub fn sweedler<F: Field>(f: &F) -> Polybialgebra<F> {
    star(f, &sweedler_algebra(f))
}

pub fn func_zn<F: Field>(f: &F, n: usize) -> Polybialgebra<F> {
    star(f, &cyclic_function_algebra(f, n))
}

pub fn idempotent<F: Field>(f: &F) -> Polybialgebra<F> {
    star(f, &idempotent_monoid_algebra(f))
}

/// The polyalgebra of `ul(G)` with every `M_g = k`.
pub fn grp<F: Field>(f: &F, g: &GroupTable) -> Polybialgebra<F> {
    let cat = standard_category(&StandardKind::Group(g.clone())).expect("valid group table");
    uniform(f, &cat, &ground(f))
}

pub fn grp_cyclic<F: Field>(f: &F, n: usize) -> Polybialgebra<F> {
    grp(f, &GroupTable::cyclic(n))
}

/// `M_a = k` for every morphism.
pub fn constant<F: Field>(f: &F, cat: &FinCategory) -> Polybialgebra<F> {
    uniform(f, cat, &ground(f))
}

/// The Hopf category over `indiscrete(n)` with every block equal to `h`.
pub fn hopf_category<F: Field>(f: &F, h: &Bialgebra<F>, n: usize) -> Polybialgebra<F> {
    let cat = standard_category(&StandardKind::Indiscrete(n)).unwrap();
    uniform(f, &cat, h)
}

fn delta1() -> FinCategory {
    standard_category(&StandardKind::Delta1).unwrap()
}

/// `Δ₁` with `k` on the identities and a block `M_u` built from `u_dim`
/// grouplike basis vectors; `u_dim = 0` gives a block of dimension zero.
fn delta1_with_grouplikes<F: Field>(f: &F, u_dim: usize) -> Polybialgebra<F> {
    let cat = delta1();
    let u = cat.find_morphism("u").unwrap();
    let labels: Vec<String> = (0..u_dim).map(|k| format!("p{k}")).collect();
    let spaces = cat
        .morphisms()
        .map(|m| {
            if m == u {
                LabeledSpace::new(labels.clone()).unwrap()
            } else {
                LabeledSpace::from_strs(&["1"])
            }
        })
        .collect();
    let mult = cat
        .composable_pairs()
        .iter()
        .map(|&(a, b)| if a == u || b == u { Matrix::identity(f, u_dim) } else { Matrix::identity(f, 1) })
        .collect();
    let units = vec![Matrix::identity(f, 1); 2];
    let alg = Polyalgebra::new(f.clone(), cat.clone(), spaces, mult, units).unwrap();
    let grouplike = |d: usize| sparse(f, d * d, d, &(0..d).map(|k| (k * d + k, k, 1)).collect::<Vec<_>>());
    let comult = cat.morphisms().map(|m| grouplike(if m == u { u_dim } else { 1 })).collect();
    let counit = cat
        .morphisms()
        .map(|m| Matrix::from_fn(f, 1, if m == u { u_dim } else { 1 }, |_, _| f.one()))
        .collect();
    Polybialgebra::new(alg, comult, counit).unwrap()
}

/// `const(Δ₁)` with `M_u` replaced by zero: Hopf, but neither transitive nor
/// conservative.
pub fn delta1_zero_u<F: Field>(f: &F) -> Polybialgebra<F> {
    delta1_with_grouplikes(f, 0)
}

/// `Δ₁` with `M_u` a two-dimensional coalgebra spanned by two grouplikes:
/// a transitive polybialgebra that is not Hopf.
pub fn delta1_grouplike_pair<F: Field>(f: &F) -> Polybialgebra<F> {
    delta1_with_grouplikes(f, 2)
}

/// `indiscrete(2)` with one-dimensional blocks and `m = -1` on the two
/// products of mutually inverse non-identity arrows. Associative, of action
/// type, but its counits are not multiplicative.
pub fn sign_twist_indiscrete2<F: Field>(f: &F) -> Polyalgebra<F> {
    let cat = standard_category(&StandardKind::Indiscrete(2)).unwrap();
    let m12 = cat.find_morphism("(1,2)").unwrap();
    let m21 = cat.find_morphism("(2,1)").unwrap();
    let mult = cat
        .composable_pairs()
        .iter()
        .map(|&(a, b)| {
            let v = if (a, b) == (m12, m21) || (a, b) == (m21, m12) { -1 } else { 1 };
            Matrix::from_i64(f, 1, 1, &[v])
        })
        .collect();
    Polyalgebra::new(
        f.clone(),
        cat.clone(),
        vec![LabeledSpace::from_strs(&["1"]); 4],
        mult,
        vec![Matrix::identity(f, 1); 2],
    )
    .unwrap()
}

/// `R = Σ β(x,y) δ_x ⊗ δ_y` on `k^{Z/2}` with `β(g,g) = -1`, as a column.
pub fn sign_rmatrix<F: Field>(f: &F) -> Matrix<F> {
    sparse(f, 4, 1, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, -1)])
}

/// `u ⊗ u` for each object.
pub fn trivial_rmatrix<F: Field>(b: &Polybialgebra<F>) -> Vec<Matrix<F>> {
    b.cat().objects().map(|i| b.unit(i).tensor(b.unit(i))).collect()
}

/// Morphism lookup that panics with the name, for fixtures and tests.
pub fn mor<F: Field>(b: &Polyalgebra<F>, name: &str) -> Mor {
    b.cat()
        .find_morphism(name)
        .unwrap_or_else(|| panic!("no morphism `{name}`"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn fixtures_are_polybialgebras() {
        let q = Rationals;
        let all = [
            kz2(&q),
            kzn(&q, 3),
            sweedler(&q),
            func_zn(&q, 2),
            func_zn(&q, 3),
            idempotent(&q),
            grp_cyclic(&q, 2),
            grp_cyclic(&q, 3),
            constant(&q, &delta1()),
            hopf_category(&q, &cyclic_group_algebra(&q, 2), 2),
            hopf_category(&q, &sweedler_algebra(&q), 2),
            delta1_zero_u(&q),
            delta1_grouplike_pair(&q),
        ];
        for b in &all {
            let r = b.validate();
            assert!(r.passed(), "{r}");
        }
        let f = PrimeField::new(101).unwrap();
        assert!(sweedler(&f).validate().passed());
    }

    #[test]
    fn sign_twist_is_an_action_type_polyalgebra() {
        let p = sign_twist_indiscrete2(&Rationals);
        assert!(p.validate().passed());
        assert!(p.is_action_type().is_ok());
    }

    #[test]
    fn negated_product_entry_breaks_associativity_at_ggg() {
        let q = Rationals;
        let b = kz2(&q);
        let mut p = b.algebra().clone();
        let mut m = p.mult(Mor(0), Mor(0)).clone();
        // e·g = g becomes e·g = -g; negating g·g instead would stay associative
        m.set(1, 1, q.from_i64(-1));
        p.set_mult(Mor(0), Mor(0), m.clone()).unwrap();
        let r = p.validate();
        assert!(r.failures().any(|c| c.name == "associativity at (1,1,1)"));
        let i = Matrix::identity(&q, 2);
        let defect = m.mul(&m.tensor(&i)).sub(&m.mul(&i.tensor(&m)));
        // column g⊗g⊗g has index 7
        assert!(!defect.select_columns(&[7]).is_zero());
    }
}
