//! R-matrices on representable comonoidal polyads and the braidings they
//! induce on module categories.
//!
//! `R_i ∈ M_{id_i} ⊗ M_{id_i}` is stored as a column. On modules it acts by
//! `τ_{X,Y} = (σ_{id_i} ⊗ ρ_{id_i}) R^i_{X,Y}` where
//! `R^i_{X,Y}: x ⊗ y ↦ Σ r_pq (e_q ⊗ y) ⊗ (e_p ⊗ x)`.

use crate::error::{PolyadError, Result};
use crate::field::Field;
use crate::fincat::{FunctorData, Mor};
use crate::matrix::Matrix;
use crate::modrep::{
    free_extension, free_module, restrict_module, restrict_morphism, tensor_modules, unit_module,
    validate_module_morphism, ModuleMorphism, PolyModule,
};
use crate::polyalg::{push_family, Polybialgebra};
use crate::random::{random_matrix, rng};
use crate::report::{Check, Report};

pub fn check_rmatrix_shapes<F: Field>(b: &Polybialgebra<F>, r: &[Matrix<F>]) -> Result<()> {
    let cat = b.cat();
    if r.len() != cat.num_objects() {
        return Err(PolyadError::RMatrixInvalid("one element per object".into()));
    }
    for i in cat.objects() {
        let d = b.dim(cat.identity(i));
        if r[i.0].shape() != (d * d, 1) {
            return Err(PolyadError::RMatrixInvalid(format!(
                "R at `{}` is {:?}, expected a column of length {}",
                cat.object_name(i),
                r[i.0].shape(),
                d * d
            )));
        }
    }
    Ok(())
}

/// `R_{X,Y}: X ⊗ Y -> M ⊗ Y ⊗ M ⊗ X` for `R ∈ M ⊗ M`.
pub fn r_transform<F: Field>(r: &Matrix<F>, d: usize, dx: usize, dy: usize) -> Matrix<F> {
    r.tensor(&Matrix::identity(r.field(), dx * dy))
        .permute_row_legs(&[d, d, dx, dy], &[1, 3, 0, 2])
}

/// Both sides of the compatibility axiom at `a: j -> i` on free coordinates
/// of dimensions `dx`, `dy`.
pub fn compatibility_sides<F: Field>(
    b: &Polybialgebra<F>,
    r: &[Matrix<F>],
    a: Mor,
    dx: usize,
    dy: usize,
) -> (Matrix<F>, Matrix<F>) {
    let cat = b.cat();
    let (i, j) = (cat.tgt(a), cat.src(a));
    let (idi, idj) = (cat.identity(i), cat.identity(j));
    let (di, dj, da) = (b.dim(idi), b.dim(idj), b.dim(a));
    let lhs = b
        .mu(a, idj, dy)
        .tensor(&b.mu(a, idj, dx))
        .mul(&b.t2(a, dj * dy, dj * dx))
        .mul(&b.t_map(a, &r_transform(&r[j.0], dj, dx, dy)));
    let rhs = b
        .mu(idi, a, dy)
        .tensor(&b.mu(idi, a, dx))
        .mul(&r_transform(&r[i.0], di, da * dx, da * dy))
        .mul(&b.t2(a, dx, dy));
    (lhs, rhs)
}

/// `τ_{X,Y}: X ⊗ Y -> Y ⊗ X`, componentwise.
pub fn induced_braiding<F: Field>(
    b: &Polybialgebra<F>,
    r: &[Matrix<F>],
    x: &PolyModule<F>,
    y: &PolyModule<F>,
) -> Result<ModuleMorphism<F>> {
    check_rmatrix_shapes(b, r)?;
    let cat = b.cat();
    let components = cat
        .objects()
        .map(|i| {
            let id = cat.identity(i);
            let t = r_transform(&r[i.0], b.dim(id), x.dim(i), y.dim(i));
            y.actions[id.0].tensor(&x.actions[id.0]).mul(&t)
        })
        .collect();
    Ok(ModuleMorphism { components })
}

/// Unit module and free modules of uniform rank `1..=max_dim`.
pub fn probe_modules<F: Field>(b: &Polybialgebra<F>, max_dim: usize) -> Vec<(String, PolyModule<F>)> {
    let n = b.cat().num_objects();
    let mut v = vec![("1".to_string(), unit_module(b))];
    for d in 1..=max_dim {
        v.push((format!("F({d})"), free_module(b, &vec![d; n])));
    }
    v
}

fn tensor_pair<F: Field>(b: &Polybialgebra<F>, x: &PolyModule<F>, y: &PolyModule<F>) -> PolyModule<F> {
    tensor_modules(b, x, y).expect("probe modules are well-shaped")
}

/// The compatibility axiom per morphism, then on the probe modules: `τ` a
/// module morphism, invertible, natural in random maps out of free
/// modules, and both hexagon identities.
pub fn validate_rmatrix<F: Field>(b: &Polybialgebra<F>, r: &[Matrix<F>], max_dim: usize, seed: u64) -> Result<Report> {
    check_rmatrix_shapes(b, r)?;
    let cat = b.cat();
    let f = b.field();
    let mut rep = Report::new("R-matrix");
    let inst = cat
        .morphisms()
        .map(|a| {
            let (l, rr) = compatibility_sides(b, r, a, 1, 1);
            let c = Check::equal("", &l, &rr);
            let c = if c.passed {
                let (l, rr) = compatibility_sides(b, r, a, 1, 2);
                Check::equal("", &l, &rr)
            } else {
                c
            };
            (b.name(a).to_string(), c)
        })
        .collect();
    push_family(&mut rep, "compatibility axiom", inst);

    let probes = probe_modules(b, max_dim);
    let id = |m: &PolyModule<F>| ModuleMorphism::identity(f, &m.dims());
    let mut morph = Vec::new();
    let mut inv = Vec::new();
    for (nx, x) in &probes {
        for (ny, y) in &probes {
            let tau = induced_braiding(b, r, x, y)?;
            let name = format!("({nx},{ny})");
            let c = validate_module_morphism(b, &tau, &tensor_pair(b, x, y), &tensor_pair(b, y, x))?;
            morph.push((name.clone(), Check::verdict("", c.passed(), "")));
            inv.push((name, Check::verdict("", tau.try_invert().is_some(), "")));
        }
    }
    push_family(&mut rep, "τ is a module morphism", morph);
    push_family(&mut rep, "τ is invertible", inv);

    let mut g = rng(seed);
    let mut nat = Vec::new();
    for d in 1..=max_dim {
        let dims = vec![d; cat.num_objects()];
        let free = free_module(b, &dims);
        for (np, p) in &probes {
            let phi_gen: Vec<Matrix<F>> = cat.objects().map(|i| random_matrix(f, p.dim(i), d, &mut g)).collect();
            let phi = free_extension(b, &dims, p, &phi_gen);
            for (ny, y) in &probes {
                let name = format!("F({d}) -> {np}, {ny}");
                let lhs = induced_braiding(b, r, p, y)?.after(&phi.tensor(&id(y)));
                let rhs = id(y).tensor(&phi).after(&induced_braiding(b, r, &free, y)?);
                let c1 = Check::verdict("", lhs == rhs, "left slot");
                let lhs = induced_braiding(b, r, y, p)?.after(&id(y).tensor(&phi));
                let rhs = phi.tensor(&id(y)).after(&induced_braiding(b, r, y, &free)?);
                let c = if c1.passed { Check::verdict("", lhs == rhs, "right slot") } else { c1 };
                nat.push((name, c));
            }
        }
    }
    push_family(&mut rep, "τ is natural", nat);

    let mut hex1 = Vec::new();
    let mut hex2 = Vec::new();
    for (nx, x) in &probes {
        for (ny, y) in &probes {
            for (nz, z) in &probes {
                let name = format!("({nx},{ny},{nz})");
                let yz = tensor_pair(b, y, z);
                let xy = tensor_pair(b, x, y);
                let lhs = induced_braiding(b, r, x, &yz)?;
                let rhs = id(y)
                    .tensor(&induced_braiding(b, r, x, z)?)
                    .after(&induced_braiding(b, r, x, y)?.tensor(&id(z)));
                hex1.push((name.clone(), Check::verdict("", lhs == rhs, "")));
                let lhs = induced_braiding(b, r, &xy, z)?;
                let rhs = induced_braiding(b, r, x, z)?
                    .tensor(&id(y))
                    .after(&id(x).tensor(&induced_braiding(b, r, y, z)?));
                hex2.push((name, Check::verdict("", lhs == rhs, "")));
            }
        }
    }
    push_family(&mut rep, "hexagon τ_{X,Y⊗Z}", hex1);
    push_family(&mut rep, "hexagon τ_{X⊗Y,Z}", hex2);
    rep.note(format!("braiding probed on the unit and free modules of rank up to {max_dim}"));
    Ok(rep)
}

/// `τ` on restricted modules equals the restriction of `τ`, over the probe
/// modules and along `f: D' -> D`.
pub fn braided_restriction_check<F: Field>(
    b: &Polybialgebra<F>,
    r: &[Matrix<F>],
    f: &FunctorData,
    max_dim: usize,
) -> Result<Report> {
    check_rmatrix_shapes(b, r)?;
    let pulled = b.pullback(f)?;
    let r_pulled: Vec<Matrix<F>> = f.source.objects().map(|x| r[f.map_obj(x).0].clone()).collect();
    let probes = probe_modules(b, max_dim);
    let mut rep = Report::new("braided restriction");
    let mut inst = Vec::new();
    for (nx, x) in &probes {
        for (ny, y) in &probes {
            let tau = induced_braiding(b, r, x, y)?;
            let (xr, yr) = (restrict_module(x, f), restrict_module(y, f));
            let tau_r = induced_braiding(&pulled, &r_pulled, &xr, &yr)?;
            let tensor_ok = restrict_module(&tensor_pair(b, x, y), f) == tensor_pair(&pulled, &xr, &yr);
            let equal = tau_r == restrict_morphism(&tau, f);
            inst.push((format!("({nx},{ny})"), Check::verdict("", equal && tensor_ok, "")));
        }
    }
    push_family(&mut rep, "restriction commutes with τ and ⊗", inst);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::fincat::{arrow_category, Obj};
    use crate::fixtures;
    use crate::space::LabeledSpace;

    #[test]
    fn trivial_r_is_symmetric_flip() {
        let q = Rationals;
        let k = fixtures::kz2(&q);
        let r = fixtures::trivial_rmatrix(&k);
        assert!(validate_rmatrix(&k, &r, 2, 1).unwrap().passed());
        let x = free_module(&k, &[1]);
        let tau = induced_braiding(&k, &r, &x, &x).unwrap();
        assert_eq!(tau.components[0], Matrix::flip(&q, 2, 2));
        let back = induced_braiding(&k, &r, &x, &x).unwrap().after(&tau);
        assert!(back.components[0].is_identity());
    }

    #[test]
    fn sign_braiding_on_function_algebra() {
        let q = Rationals;
        let b = fixtures::func_zn(&q, 2);
        let r = vec![fixtures::sign_rmatrix(&q)];
        assert!(validate_rmatrix(&b, &r, 2, 1).unwrap().passed());
        // the module where δ_g acts as 1
        let sign = PolyModule {
            spaces: vec![LabeledSpace::from_strs(&["s"])],
            actions: vec![Matrix::from_i64(&q, 1, 2, &[0, 1])],
        };
        let tau = induced_braiding(&b, &r, &sign, &sign).unwrap();
        assert_eq!(tau.components[0], Matrix::from_i64(&q, 1, 1, &[-1]));
        let two = tensor_modules(&b, &sign, &unit_module(&b)).unwrap();
        let tau = induced_braiding(&b, &r, &two, &unit_module(&b)).unwrap();
        assert!(tau.components[0].is_identity());
    }

    #[test]
    fn sign_r_fails_on_group_algebra() {
        // β is not an R-matrix for kZ2 after relabelling the basis
        let q = Rationals;
        let k = fixtures::kz2(&q);
        let r = vec![fixtures::sign_rmatrix(&q)];
        assert!(!validate_rmatrix(&k, &r, 1, 1).unwrap().passed());
        assert!(matches!(
            validate_rmatrix(&k, &[Matrix::zeros(&q, 2, 1)], 1, 1),
            Err(PolyadError::RMatrixInvalid(_))
        ));
    }

    #[test]
    fn restrictions_are_braided() {
        let f = PrimeField::new(101).unwrap();
        let h = fixtures::hopf_category(&f, &fixtures::cyclic_group_algebra(&f, 2), 2);
        let r = fixtures::trivial_rmatrix(&h);
        assert!(validate_rmatrix(&h, &r, 1, 3).unwrap().passed());
        let cat = h.cat();
        for fun in [FunctorData::identity(cat), FunctorData::point(cat, Obj(1)), arrow_category(cat).1] {
            assert!(braided_restriction_check(&h, &r, &fun, 1).unwrap().passed());
        }
    }
}
