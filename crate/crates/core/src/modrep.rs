//! Modules and representations over a representable polyad.
//!
//! A module is a family `X_i` over objects with actions
//! `ρ_a: M_a ⊗ X_{src a} -> X_{tgt a}`; a representation is a family `W_a` over
//! morphisms with actions `ρ_{a,b}: M_a ⊗ W_b -> W_{ab}`.

use std::collections::VecDeque;

use crate::error::{shape, PolyadError, Result};
use crate::field::Field;
use crate::fincat::{arrow_category, FunctorData, Mor, Obj};
use crate::matrix::Matrix;
use crate::polyalg::{push_family, Polyalgebra, Polybialgebra};
use crate::report::{Check, Report};
use crate::space::LabeledSpace;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyModule<F: Field> {
    /// Indexed by object.
    pub spaces: Vec<LabeledSpace>,
    /// Indexed by morphism.
    pub actions: Vec<Matrix<F>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolyRepresentation<F: Field> {
    /// Indexed by morphism.
    pub spaces: Vec<LabeledSpace>,
    /// Indexed like the composable pairs of the source category.
    pub actions: Vec<Matrix<F>>,
}

/// A family of linear maps, one per object (modules) or per morphism
/// (representations).
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism<F: Field> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> PolyModule<F> {
    pub fn dim(&self, i: Obj) -> usize {
        self.spaces[i.0].dim()
    }
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }
    pub fn action(&self, a: Mor) -> &Matrix<F> {
        &self.actions[a.0]
    }
}

impl<F: Field> PolyRepresentation<F> {
    pub fn dim(&self, a: Mor) -> usize {
        self.spaces[a.0].dim()
    }
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }
}

impl<F: Field> ModuleMorphism<F> {
    pub fn identity(field: &F, dims: &[usize]) -> Self {
        ModuleMorphism { components: dims.iter().map(|&d| Matrix::identity(field, d)).collect() }
    }

    pub fn zero(field: &F, from: &[usize], to: &[usize]) -> Self {
        ModuleMorphism {
            components: from.iter().zip(to).map(|(&s, &t)| Matrix::zeros(field, t, s)).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Self) -> Self {
        ModuleMorphism {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        ModuleMorphism {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.tensor(b)).collect(),
        }
    }

    /// Componentwise inverse.
    pub fn try_invert(&self) -> Option<Self> {
        let components = self.components.iter().map(|c| c.try_invert().ok()).collect::<Option<Vec<_>>>()?;
        Some(ModuleMorphism { components })
    }
}

pub fn check_module_shapes<F: Field>(p: &Polyalgebra<F>, x: &PolyModule<F>) -> Result<()> {
    let cat = p.cat();
    if x.spaces.len() != cat.num_objects() || x.actions.len() != cat.num_morphisms() {
        return Err(shape("module needs one space per object and one action per morphism"));
    }
    for a in cat.morphisms() {
        let want = (x.dim(cat.tgt(a)), p.dim(a) * x.dim(cat.src(a)));
        if x.action(a).shape() != want {
            return Err(shape(format!(
                "action of `{}` is {:?}, expected {:?}",
                p.name(a),
                x.action(a).shape(),
                want
            )));
        }
    }
    Ok(())
}

pub fn check_representation_shapes<F: Field>(p: &Polyalgebra<F>, w: &PolyRepresentation<F>) -> Result<()> {
    let cat = p.cat();
    if w.spaces.len() != cat.num_morphisms() || w.actions.len() != cat.composable_pairs().len() {
        return Err(shape("representation needs one space per morphism and one action per composable pair"));
    }
    for (k, &(a, b)) in cat.composable_pairs().iter().enumerate() {
        let ab = cat.compose(a, b).unwrap();
        let want = (w.dim(ab), p.dim(a) * w.dim(b));
        if w.actions[k].shape() != want {
            return Err(shape(format!(
                "action at {} is {:?}, expected {:?}",
                p.pair_name(a, b),
                w.actions[k].shape(),
                want
            )));
        }
    }
    Ok(())
}

/// `ρ_a(M_a ⊗ ρ_b) = ρ_{ab}(m_{a,b} ⊗ X)` and `ρ_{id_i}(u_i ⊗ X_i) = id`.
pub fn validate_module<F: Field>(p: &Polyalgebra<F>, x: &PolyModule<F>) -> Result<Report> {
    check_module_shapes(p, x)?;
    let cat = p.cat();
    let mut r = Report::new("module axioms");
    let assoc = cat
        .composable_pairs()
        .iter()
        .map(|&(a, b)| {
            let ab = cat.compose(a, b).unwrap();
            let dk = x.dim(cat.src(b));
            let lhs = x.action(a).mul(&p.t_map(a, x.action(b)));
            let rhs = x.action(ab).mul(&p.mu(a, b, dk));
            (p.pair_name(a, b), Check::equal("", &lhs, &rhs))
        })
        .collect();
    push_family(&mut r, "action is associative", assoc);
    let unit = cat
        .objects()
        .map(|i| {
            let lhs = x.action(cat.identity(i)).mul(&p.eta(i, x.dim(i)));
            (cat.object_name(i).to_string(), Check::equal("", &lhs, &p.id(x.dim(i))))
        })
        .collect();
    push_family(&mut r, "action is unital", unit);
    Ok(r)
}

/// The square `f_i ρ_a = ρ'_a (M_a ⊗ f_j)` for every morphism `a`.
pub fn validate_module_morphism<F: Field>(
    p: &Polyalgebra<F>,
    f: &ModuleMorphism<F>,
    x: &PolyModule<F>,
    y: &PolyModule<F>,
) -> Result<Report> {
    check_module_shapes(p, x)?;
    check_module_shapes(p, y)?;
    let cat = p.cat();
    if f.components.len() != cat.num_objects() {
        return Err(shape("one component per object"));
    }
    for i in cat.objects() {
        if f.components[i.0].shape() != (y.dim(i), x.dim(i)) {
            return Err(shape(format!("component at `{}` has the wrong shape", cat.object_name(i))));
        }
    }
    let mut r = Report::new("module morphism");
    let inst = cat
        .morphisms()
        .map(|a| {
            let (i, j) = (cat.tgt(a), cat.src(a));
            let lhs = f.components[i.0].mul(x.action(a));
            let rhs = y.action(a).mul(&p.t_map(a, &f.components[j.0]));
            (p.name(a).to_string(), Check::equal("", &lhs, &rhs))
        })
        .collect();
    push_family(&mut r, "intertwines the actions", inst);
    Ok(r)
}

/// The field at every object, acted on through the counits.
pub fn unit_module<F: Field>(b: &Polybialgebra<F>) -> PolyModule<F> {
    let cat = b.cat();
    PolyModule {
        spaces: vec![LabeledSpace::from_strs(&["1"]); cat.num_objects()],
        actions: cat.morphisms().map(|a| b.counit(a).clone()).collect(),
    }
}

/// `(X ⊗ Y)_i = X_i ⊗ Y_i` with action `(ρ_a ⊗ σ_a) T²_a(X_j, Y_j)`.
pub fn tensor_modules<F: Field>(b: &Polybialgebra<F>, x: &PolyModule<F>, y: &PolyModule<F>) -> Result<PolyModule<F>> {
    check_module_shapes(b, x)?;
    check_module_shapes(b, y)?;
    let cat = b.cat();
    let spaces = cat.objects().map(|i| x.spaces[i.0].tensor(&y.spaces[i.0])).collect();
    let actions = cat
        .morphisms()
        .map(|a| {
            let j = cat.src(a);
            x.action(a).tensor(y.action(a)).mul(&b.t2(a, x.dim(j), y.dim(j)))
        })
        .collect();
    Ok(PolyModule { spaces, actions })
}

/// Offsets of the summands `M_b ⊗ V_{src b}` (for `b` into `i`) inside the
/// free module at `i`.
pub(crate) fn free_offsets<F: Field>(p: &Polyalgebra<F>, dims: &[usize], i: Obj) -> (Vec<(Mor, usize)>, usize) {
    let cat = p.cat();
    let mut off = 0;
    let mut out = Vec::new();
    for b in cat.arrows_into(i) {
        out.push((b, off));
        off += p.dim(b) * dims[cat.src(b).0];
    }
    (out, off)
}

/// The free module `X_i = ⊕_{b: k -> i} M_b ⊗ V_k`, acted on by the products.
pub fn free_module<F: Field>(p: &Polyalgebra<F>, dims: &[usize]) -> PolyModule<F> {
    let cat = p.cat();
    let f = p.field();
    let vspaces: Vec<LabeledSpace> = dims.iter().map(|&d| LabeledSpace::numbered("v", d)).collect();
    let spaces = cat
        .objects()
        .map(|i| {
            let parts: Vec<(String, LabeledSpace)> = cat
                .arrows_into(i)
                .into_iter()
                .map(|b| (p.name(b).to_string(), p.space(b).tensor(&vspaces[cat.src(b).0])))
                .collect();
            LabeledSpace::direct_sum(&parts)
        })
        .collect();
    let actions = cat
        .morphisms()
        .map(|a| {
            let (i, j) = (cat.tgt(a), cat.src(a));
            let (src_blocks, src_dim) = free_offsets(p, dims, j);
            let (tgt_blocks, tgt_dim) = free_offsets(p, dims, i);
            let da = p.dim(a);
            let mut m = Matrix::zeros(f, tgt_dim, da * src_dim);
            for (bm, off) in src_blocks {
                let ab = cat.compose(a, bm).unwrap();
                let toff = tgt_blocks.iter().find(|(c, _)| *c == ab).unwrap().1;
                let block = p.mu(a, bm, dims[cat.src(bm).0]);
                // column index of e_p ⊗ (block b, q) is p * src_dim + off + q
                let w = block.cols() / da.max(1);
                for pa in 0..da {
                    for q in 0..w {
                        for row in 0..block.rows() {
                            let v = block.get(row, pa * w + q);
                            if !f.is_zero(v) {
                                m.set(toff + row, pa * src_dim + off + q, v.clone());
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    PolyModule { spaces, actions }
}

/// `F(φ): F(V) -> F(V')`, blockwise `M_b ⊗ φ_k`.
pub fn free_module_map<F: Field>(p: &Polyalgebra<F>, from: &[usize], to: &[usize], phi: &[Matrix<F>]) -> ModuleMorphism<F> {
    let cat = p.cat();
    let components = cat
        .objects()
        .map(|i| {
            let blocks: Vec<Matrix<F>> = cat
                .arrows_into(i)
                .into_iter()
                .map(|b| p.t_map(b, &phi[cat.src(b).0]))
                .collect();
            let refs: Vec<&Matrix<F>> = blocks.iter().collect();
            let m = Matrix::block_diag(p.field(), &refs);
            debug_assert_eq!(m.shape(), (free_offsets(p, to, i).1, free_offsets(p, from, i).1));
            m
        })
        .collect();
    ModuleMorphism { components }
}

/// The module morphism `F(V) -> Y` extending `φ_k: V_k -> Y_k`: on the
/// summand `M_b ⊗ V_k` it is `ρ^Y_b (M_b ⊗ φ_k)`.
pub fn free_extension<F: Field>(p: &Polyalgebra<F>, dims: &[usize], y: &PolyModule<F>, phi: &[Matrix<F>]) -> ModuleMorphism<F> {
    let cat = p.cat();
    let components = cat
        .objects()
        .map(|i| {
            let blocks: Vec<Matrix<F>> = cat
                .arrows_into(i)
                .into_iter()
                .map(|b| y.action(b).mul(&p.t_map(b, &phi[cat.src(b).0])))
                .collect();
            let refs: Vec<&Matrix<F>> = blocks.iter().collect();
            let cols = free_offsets(p, dims, i).1;
            let m = Matrix::hstack(p.field(), y.dim(i), &refs);
            debug_assert_eq!(m.cols(), cols);
            m
        })
        .collect();
    ModuleMorphism { components }
}

/// `ρ_{ab,c}(m_{a,b} ⊗ W_c) = ρ_{a,bc}(M_a ⊗ ρ_{b,c})` and
/// `ρ_{id_i,a}(u_i ⊗ W_a) = id`.
pub fn validate_representation<F: Field>(p: &Polyalgebra<F>, w: &PolyRepresentation<F>) -> Result<Report> {
    check_representation_shapes(p, w)?;
    let cat = p.cat();
    let act = |a: Mor, b: Mor| &w.actions[cat.pair_index(a, b).unwrap()];
    let mut r = Report::new("representation axioms");
    let assoc = cat
        .composable_triples()
        .into_iter()
        .map(|(a, b, c)| {
            let (ab, bc) = (cat.compose(a, b).unwrap(), cat.compose(b, c).unwrap());
            let lhs = act(ab, c).mul(&p.mu(a, b, w.dim(c)));
            let rhs = act(a, bc).mul(&p.t_map(a, act(b, c)));
            (format!("({},{},{})", p.name(a), p.name(b), p.name(c)), Check::equal("", &lhs, &rhs))
        })
        .collect();
    push_family(&mut r, "action is associative", assoc);
    let unit = cat
        .morphisms()
        .map(|a| {
            let i = cat.tgt(a);
            let lhs = act(cat.identity(i), a).mul(&p.eta(i, w.dim(a)));
            (p.name(a).to_string(), Check::equal("", &lhs, &p.id(w.dim(a))))
        })
        .collect();
    push_family(&mut r, "action is unital", unit);
    Ok(r)
}

/// `L_T X`: `W_a = M_a ⊗ X_{src a}`, `ρ_{a,b} = m_{a,b} ⊗ X`.
pub fn free_representation<F: Field>(p: &Polyalgebra<F>, dims: &[usize]) -> PolyRepresentation<F> {
    let cat = p.cat();
    let vspaces: Vec<LabeledSpace> = dims.iter().map(|&d| LabeledSpace::numbered("v", d)).collect();
    PolyRepresentation {
        spaces: cat.morphisms().map(|a| p.space(a).tensor(&vspaces[cat.src(a).0])).collect(),
        actions: cat
            .composable_pairs()
            .iter()
            .map(|&(a, b)| p.mu(a, b, dims[cat.src(b).0]))
            .collect(),
    }
}

/// Triangle identities of `L_T ⊣ V_T` with unit `(η_i)` and counit
/// `(ρ_{a,src a})`, naturality of the counit, and (for action-type polyads
/// over groupoids) invertibility of the counit.
pub fn check_rep_adjunction<F: Field>(p: &Polyalgebra<F>, dims: &[usize], w: &PolyRepresentation<F>) -> Result<Report> {
    check_representation_shapes(p, w)?;
    let cat = p.cat();
    if dims.len() != cat.num_objects() {
        return Err(shape("one dimension per object"));
    }
    let act = |a: Mor, b: Mor| &w.actions[cat.pair_index(a, b).unwrap()];
    let counit = |a: Mor| act(a, cat.identity(cat.src(a)));
    let mut r = Report::new("free representation adjunction");

    // (V ε)(η V) = id on V_T W
    let inst = cat
        .objects()
        .map(|i| {
            let idi = cat.identity(i);
            let lhs = counit(idi).mul(&p.eta(i, w.dim(idi)));
            (cat.object_name(i).to_string(), Check::equal("", &lhs, &p.id(w.dim(idi))))
        })
        .collect();
    push_family(&mut r, "triangle identity on V_T W", inst);

    // (ε L)(L η) = id on L_T X
    let lx = free_representation(p, dims);
    let inst = cat
        .morphisms()
        .map(|a| {
            let j = cat.src(a);
            let eps_l = &lx.actions[cat.pair_index(a, cat.identity(j)).unwrap()];
            let l_eta = p.t_map(a, &p.eta(j, dims[j.0]));
            let lhs = eps_l.mul(&l_eta);
            (p.name(a).to_string(), Check::equal("", &lhs, &p.id(p.dim(a) * dims[j.0])))
        })
        .collect();
    push_family(&mut r, "triangle identity on L_T X", inst);

    // ε_W is a morphism of representations L_T V_T W -> W
    let inst = cat
        .composable_pairs()
        .iter()
        .map(|&(a, b)| {
            let ab = cat.compose(a, b).unwrap();
            let k = cat.src(b);
            let lhs = act(a, b).mul(&p.t_map(a, counit(b)));
            let rhs = counit(ab).mul(&p.mu(a, b, w.dim(cat.identity(k))));
            (p.pair_name(a, b), Check::equal("", &lhs, &rhs))
        })
        .collect();
    push_family(&mut r, "counit is a morphism of representations", inst);

    if cat.is_groupoid().is_some() && p.is_action_type().is_ok() {
        let inst = cat
            .morphisms()
            .map(|a| {
                let c = match counit(a).try_invert() {
                    Ok(_) => Check::pass(""),
                    Err(e) => Check::fail("", e.to_string()).with_witness("counit component", counit(a)),
                };
                (p.name(a).to_string(), c)
            })
            .collect();
        push_family(&mut r, "counit is invertible (action type over a groupoid)", inst);
    }
    Ok(r)
}

/// Restriction of a module along `f: D' -> D`: `X'_x = X_{f(x)}`,
/// `ρ'_m = ρ_{f(m)}`.
pub fn restrict_module<F: Field>(x: &PolyModule<F>, f: &FunctorData) -> PolyModule<F> {
    PolyModule {
        spaces: f.source.objects().map(|o| x.spaces[f.map_obj(o).0].clone()).collect(),
        actions: f.source.morphisms().map(|m| x.actions[f.map_mor(m).0].clone()).collect(),
    }
}

pub fn restrict_morphism<F: Field>(g: &ModuleMorphism<F>, f: &FunctorData) -> ModuleMorphism<F> {
    ModuleMorphism {
        components: f.source.objects().map(|o| g.components[f.map_obj(o).0].clone()).collect(),
    }
}

/// The module over `t^*P` (with `t: Ar(D) -> D`) corresponding to `W`:
/// `X_b = W_b` and the action of `a: b -> ab` is `ρ_{a,b}`.
pub fn rep_to_module<F: Field>(p: &Polyalgebra<F>, w: &PolyRepresentation<F>) -> Result<(Polyalgebra<F>, PolyModule<F>)> {
    check_representation_shapes(p, w)?;
    let (_, t) = arrow_category(p.cat());
    let pulled = p.pullback(&t)?;
    // Ar(D) lists its morphisms in composable-pair order, so the actions carry over
    Ok((pulled, PolyModule { spaces: w.spaces.clone(), actions: w.actions.clone() }))
}

pub fn module_to_rep<F: Field>(x: &PolyModule<F>) -> PolyRepresentation<F> {
    PolyRepresentation { spaces: x.spaces.clone(), actions: x.actions.clone() }
}

/// For each invertible `a`, certifies that `ρ_a` is invertible. Requires an
/// action-type polyalgebra, which forces `dim M_a = 1` on invertible arrows.
pub fn action_invertibility<F: Field>(p: &Polyalgebra<F>, x: &PolyModule<F>) -> Result<Report> {
    p.is_action_type()?;
    check_module_shapes(p, x)?;
    let cat = p.cat();
    let mut r = Report::new("actions along invertible arrows");
    for a in cat.morphisms() {
        let name = format!("ρ_{}", p.name(a));
        if cat.inverse_of(a).is_none() {
            r.note(format!("{name} skipped: `{}` is not invertible", p.name(a)));
            continue;
        }
        match x.action(a).try_invert() {
            Ok(_) => r.push(Check::pass(name)),
            Err(e) => r.push(Check::fail(name, e.to_string()).with_witness("action", x.action(a))),
        }
    }
    Ok(r)
}

/// The data of the groupoid restriction equivalence.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupoidExtension<F: Field> {
    pub basepoint: Obj,
    /// `a_i: i0 -> i`, chosen by breadth-first search.
    pub choices: Vec<Mor>,
    /// Inclusion of the full subcategory on the basepoint.
    pub inclusion: FunctorData,
    /// The polyalgebra restricted to the basepoint.
    pub local: Polyalgebra<F>,
    pub module: PolyModule<F>,
}

/// Deterministic spanning choices `a_i: i0 -> i`.
pub fn bfs_choices<F: Field>(p: &Polyalgebra<F>, i0: Obj) -> Result<Vec<Mor>> {
    let cat = p.cat();
    let mut choice: Vec<Option<Mor>> = vec![None; cat.num_objects()];
    choice[i0.0] = Some(cat.identity(i0));
    let mut queue = VecDeque::from([i0]);
    while let Some(j) = queue.pop_front() {
        let aj = choice[j.0].unwrap();
        for b in cat.arrows_out_of(j) {
            let i = cat.tgt(b);
            if choice[i.0].is_none() {
                choice[i.0] = Some(cat.compose(b, aj).unwrap());
                queue.push_back(i);
            }
        }
    }
    choice.into_iter().map(|c| c.ok_or(PolyadError::NotConnected)).collect()
}

fn groupoid_preconditions<F: Field>(p: &Polyalgebra<F>) -> Result<Vec<Mor>> {
    let inverses = p
        .cat()
        .is_groupoid()
        .ok_or_else(|| PolyadError::NotGroupoid("some morphism has no inverse".into()))?;
    if !p.cat().is_connected() {
        return Err(PolyadError::NotConnected);
    }
    p.is_action_type()?;
    Ok(inverses)
}

/// Extends a module `X0` over the restriction to `Γ_{i0}` to a module over
/// the whole connected groupoid: `X_i = M_{a_i} ⊗ X0` and
/// `ρ_a = (M_{a_i} ⊗ r_γ)(m_{a_i,γ}^{-1} ⊗ X0)(m_{a,a_j} ⊗ X0)` with
/// `γ = a_i^{-1} a a_j`.
pub fn groupoid_extension<F: Field>(p: &Polyalgebra<F>, i0: Obj, x0: &PolyModule<F>) -> Result<GroupoidExtension<F>> {
    let inverses = groupoid_preconditions(p)?;
    let cat = p.cat();
    let inclusion = cat.full_subcategory_at(i0);
    let local = p.pullback(&inclusion)?;
    check_module_shapes(&local, x0)?;
    let choices = bfs_choices(p, i0)?;
    let d0 = x0.dim(Obj(0));
    let spaces = cat
        .objects()
        .map(|i| p.space(choices[i.0]).tensor(&x0.spaces[0]))
        .collect();
    let mut actions = Vec::new();
    for a in cat.morphisms() {
        let (i, j) = (cat.tgt(a), cat.src(a));
        let (ai, aj) = (choices[i.0], choices[j.0]);
        let ai_inv = inverses[ai.0];
        let gamma = cat.compose(ai_inv, cat.compose(a, aj).unwrap()).unwrap();
        let g_local = Mor(inclusion.mor_map.iter().position(|&m| m == gamma).unwrap());
        let m_inv = p
            .mult(ai, gamma)
            .try_invert()
            .map_err(|e| PolyadError::NotActionType(e.to_string()))?;
        let rho = p
            .t_map(ai, x0.action(g_local))
            .mul(&m_inv.tensor(&p.id(d0)))
            .mul(&p.mu(a, aj, d0));
        actions.push(rho);
    }
    Ok(GroupoidExtension {
        basepoint: i0,
        choices,
        inclusion,
        local,
        module: PolyModule { spaces, actions },
    })
}

/// Both halves of the equivalence, realised by explicit isomorphisms:
/// `X0 ≅ (ext X0)|_{i0}` through `u_{i0} ⊗ X0`, and, when `x` is given,
/// `ext(X|_{i0}) ≅ X` through `φ_i = ρ_{a_i}`.
pub fn check_groupoid_equivalence<F: Field>(
    p: &Polyalgebra<F>,
    i0: Obj,
    x0: &PolyModule<F>,
    x: Option<&PolyModule<F>>,
) -> Result<Report> {
    let ext = groupoid_extension(p, i0, x0)?;
    let mut r = Report::new("groupoid restriction equivalence");
    r.absorb("extended module", validate_module(p, &ext.module)?);

    let restricted = restrict_module(&ext.module, &ext.inclusion);
    let iso = ModuleMorphism { components: vec![p.eta(i0, x0.dim(Obj(0)))] };
    r.absorb(
        "restriction after extension",
        validate_module_morphism(&ext.local, &iso, x0, &restricted)?,
    );
    r.push(Check::verdict(
        "restriction after extension is invertible",
        iso.try_invert().is_some(),
        "component u_{i0} ⊗ X0",
    ));

    if let Some(x) = x {
        let xr = restrict_module(x, &ext.inclusion);
        let ext2 = groupoid_extension(p, i0, &xr)?;
        let phi = ModuleMorphism {
            components: p.cat().objects().map(|i| x.action(ext2.choices[i.0]).clone()).collect(),
        };
        r.absorb(
            "extension after restriction",
            validate_module_morphism(p, &phi, &ext2.module, x)?,
        );
        r.push(Check::verdict(
            "extension after restriction is invertible",
            phi.try_invert().is_some(),
            "components ρ_{a_i}",
        ));
    }
    Ok(r)
}
