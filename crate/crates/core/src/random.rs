//! Seeded random data: matrices, modules and structures obtained from the
//! fixtures by transport along random invertible maps (which keeps every
//! axiom intact).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::Field;
use crate::fincat::{standard_category, GroupTable, StandardKind};
use crate::fixtures;
use crate::hopfstruct::{free_hopf_representation, transport_hopf_representation, HopfRepresentation};
use crate::matrix::Matrix;
use crate::modrep::{free_module, PolyModule};
use crate::polyalg::{Polyalgebra, Polybialgebra};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<F: Field, R: Rng + ?Sized>(f: &F, rows: usize, cols: usize, rng: &mut R) -> Matrix<F> {
    let data = (0..rows * cols).map(|_| f.sample(rng)).collect();
    Matrix::from_vec(f, rows, cols, data)
}

/// Rejection-samples an invertible matrix; returns it with its inverse.
pub fn random_invertible<F: Field, R: Rng + ?Sized>(f: &F, n: usize, rng: &mut R) -> (Matrix<F>, Matrix<F>) {
    loop {
        let m = random_matrix(f, n, n, rng);
        if let Ok(inv) = m.try_invert() {
            return (m, inv);
        }
    }
}

/// `m' = g_{ab} m (g_a^{-1} ⊗ g_b^{-1})`, `u' = g u`, `Δ' = (g ⊗ g) Δ g^{-1}`,
/// `ε' = ε g^{-1}`.
pub fn transport<F: Field>(b: &Polybialgebra<F>, g: &[(Matrix<F>, Matrix<F>)]) -> Result<Polybialgebra<F>> {
    let cat = b.cat();
    let mult = cat
        .composable_pairs()
        .iter()
        .map(|&(a, c)| {
            let ac = cat.compose(a, c).unwrap();
            g[ac.0].0.mul(b.mult(a, c)).mul(&g[a.0].1.tensor(&g[c.0].1))
        })
        .collect();
    let units = cat.objects().map(|i| g[cat.identity(i).0].0.mul(b.unit(i))).collect();
    let alg = Polyalgebra::new(b.field().clone(), cat.clone(), b.spaces().to_vec(), mult, units)?;
    let comult = cat
        .morphisms()
        .map(|a| g[a.0].0.tensor(&g[a.0].0).mul(b.comult(a)).mul(&g[a.0].1))
        .collect();
    let counit = cat.morphisms().map(|a| b.counit(a).mul(&g[a.0].1)).collect();
    Polybialgebra::new(alg, comult, counit)
}

/// Fixtures with every block of dimension at most 3; all Hopf.
pub fn hopf_pool<F: Field>(f: &F) -> Vec<(String, Polybialgebra<F>)> {
    let indiscrete2 = standard_category(&StandardKind::Indiscrete(2)).unwrap();
    vec![
        ("kZ2".into(), fixtures::kz2(f)),
        ("kZ3".into(), fixtures::kzn(f, 3)),
        ("func(Z2)".into(), fixtures::func_zn(f, 2)),
        ("func(Z3)".into(), fixtures::func_zn(f, 3)),
        ("grp(Z3)".into(), fixtures::grp(f, &GroupTable::cyclic(3))),
        ("const(indiscrete2)".into(), fixtures::constant(f, &indiscrete2)),
        ("hopfcat(kZ2,2)".into(), fixtures::hopf_category(f, &fixtures::cyclic_group_algebra(f, 2), 2)),
    ]
}

/// Fixtures with blocks of dimension at most 3, including non-Hopf ones.
pub fn pool<F: Field>(f: &F) -> Vec<(String, Polybialgebra<F>)> {
    let delta1 = standard_category(&StandardKind::Delta1).unwrap();
    let mut v = hopf_pool(f);
    v.push(("idempotent".into(), fixtures::idempotent(f)));
    v.push(("const(delta1)".into(), fixtures::constant(f, &delta1)));
    v.push(("delta1-grouplike-pair".into(), fixtures::delta1_grouplike_pair(f)));
    v
}

/// A random transport of a random pool member.
pub fn random_structure<F: Field, R: Rng + ?Sized>(
    f: &F,
    pool: &[(String, Polybialgebra<F>)],
    rng: &mut R,
) -> (String, Polybialgebra<F>) {
    let (name, b) = &pool[rng.random_range(0..pool.len())];
    let g: Vec<_> = b.cat().morphisms().map(|a| random_invertible(f, b.dim(a), rng)).collect();
    (format!("transported {name}"), transport(b, &g).expect("transport preserves shapes"))
}

/// Random per-object dimensions in `0..=max`.
pub fn random_dims<R: Rng + ?Sized>(n: usize, max: usize, rng: &mut R) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(0..=max)).collect()
}

/// A free module transported along random invertible maps `g_i`.
pub fn random_module<F: Field, R: Rng + ?Sized>(b: &Polybialgebra<F>, dims: &[usize], rng: &mut R) -> PolyModule<F> {
    let x = free_module(b, dims);
    let cat = b.cat();
    let g: Vec<_> = cat.objects().map(|i| random_invertible(b.field(), x.dim(i), rng)).collect();
    let actions = cat
        .morphisms()
        .map(|a| {
            let (i, j) = (cat.tgt(a), cat.src(a));
            g[i.0].0.mul(&x.actions[a.0]).mul(&b.t_map(a, &g[j.0].1))
        })
        .collect();
    PolyModule { spaces: x.spaces, actions }
}

/// `𝔥^l(X)` transported along random invertible `g_a`.
pub fn random_hopf_representation<F: Field, R: Rng + ?Sized>(
    b: &Polybialgebra<F>,
    dims: &[usize],
    rng: &mut R,
) -> HopfRepresentation<F> {
    let hr = free_hopf_representation(b, dims);
    let g: Vec<Matrix<F>> = b
        .cat()
        .morphisms()
        .map(|a| random_invertible(b.field(), hr.rep.dim(a), rng).0)
        .collect();
    transport_hopf_representation(b, &hr, &g).expect("invertible transport")
}
