//! The wrap-up: a polyad over `D` seen as a single monad `T̂` on `D₀`-graded
//! spaces, `(T̂X)_i = ⊕_{a: j -> i} M_a ⊗ X_j`, housed in the total algebra
//! `Â = ⊕_a M_a`.

use crate::error::{shape, Result};
use crate::field::Field;
use crate::fincat::{FinCategory, Mor, Obj};
use crate::matrix::{Matrix, NotInvertible};
use crate::modrep::{check_module_shapes, free_offsets, tensor_modules, PolyModule};
use crate::par;
use crate::polyalg::{push_family, Polyalgebra, Polybialgebra};
use crate::report::{Check, Report};
use crate::space::LabeledSpace;

#[derive(Clone, Debug, PartialEq)]
pub struct TotalAlgebra<F: Field> {
    field: F,
    cat: FinCategory,
    /// Block labels are `a:label`.
    pub space: LabeledSpace,
    /// Start of block `a`, indexed by morphism.
    pub offsets: Vec<usize>,
    /// `dim × dim²`.
    pub mult: Matrix<F>,
    /// `dim × 1`.
    pub unit: Matrix<F>,
    /// Blockwise `(Δ_a, ε_a)` when wrapping a polybialgebra.
    pub coalgebra: Option<(Matrix<F>, Matrix<F>)>,
}

impl<F: Field> TotalAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn cat(&self) -> &FinCategory {
        &self.cat
    }

    /// Bi-degree `(tgt a, src a)` of block `a`.
    pub fn grading(&self, a: Mor) -> (Obj, Obj) {
        (self.cat.tgt(a), self.cat.src(a))
    }

    pub fn block_range(&self, a: Mor) -> std::ops::Range<usize> {
        let end = self.offsets.get(a.0 + 1).copied().unwrap_or(self.dim());
        self.offsets[a.0]..end
    }

    /// Associativity and unitality of `Â`, plus coassociativity and
    /// counitality of the blockwise coalgebra when present.
    pub fn validate(&self) -> Report {
        let f = &self.field;
        let n = self.dim();
        let id = Matrix::identity(f, n);
        let mut r = Report::new("total algebra");
        r.push(Check::equal(
            "associativity",
            &self.mult.mul(&self.mult.tensor(&id)),
            &self.mult.mul(&id.tensor(&self.mult)),
        ));
        let left = self.mult.mul(&self.unit.tensor(&id));
        let right = self.mult.mul(&id.tensor(&self.unit));
        r.push(Check::equal("left unit", &left, &id));
        r.push(Check::equal("right unit", &right, &id));
        if let Some((delta, eps)) = &self.coalgebra {
            r.push(Check::equal(
                "coassociativity",
                &delta.tensor(&id).mul(delta),
                &id.tensor(delta).mul(delta),
            ));
            r.push(Check::equal("left counit", &eps.tensor(&id).mul(delta), &id));
            r.push(Check::equal("right counit", &id.tensor(eps).mul(delta), &id));
        }
        r
    }

    /// The total algebra as a polybialgebra over the terminal category; needs
    /// the blockwise coalgebra.
    pub fn as_star_polyad(&self) -> Result<Polybialgebra<F>> {
        let (delta, eps) = self
            .coalgebra
            .clone()
            .ok_or_else(|| crate::PolyadError::Invalid("wrapped structure has no coalgebra".into()))?;
        let star = crate::fincat::standard_category(&crate::fincat::StandardKind::Terminal)
            .map_err(|e| crate::PolyadError::Invalid(e.0))?;
        let alg = Polyalgebra::new(
            self.field.clone(),
            star,
            vec![self.space.clone()],
            vec![self.mult.clone()],
            vec![self.unit.clone()],
        )?;
        Polybialgebra::new(alg, vec![delta], vec![eps])
    }
}

fn block_offsets<F: Field>(p: &Polyalgebra<F>) -> Vec<usize> {
    let mut off = 0;
    p.cat()
        .morphisms()
        .map(|a| {
            let o = off;
            off += p.dim(a);
            o
        })
        .collect()
}

/// `Â` of a polyalgebra: products of non-composable blocks vanish.
pub fn wrap_algebra<F: Field>(p: &Polyalgebra<F>) -> TotalAlgebra<F> {
    let f = p.field();
    let cat = p.cat();
    let parts: Vec<(String, LabeledSpace)> =
        cat.morphisms().map(|a| (p.name(a).to_string(), p.space(a).clone())).collect();
    let space = LabeledSpace::direct_sum(&parts);
    let offsets = block_offsets(p);
    let n = space.dim();
    let mut mult = Matrix::zeros(f, n, n * n);
    for &(a, b) in cat.composable_pairs() {
        let ab = cat.compose(a, b).unwrap();
        let m = p.mult(a, b);
        let db = p.dim(b);
        for pa in 0..p.dim(a) {
            for qb in 0..db {
                let col = (offsets[a.0] + pa) * n + offsets[b.0] + qb;
                for row in 0..m.rows() {
                    let v = m.get(row, pa * db + qb);
                    if !f.is_zero(v) {
                        mult.set(offsets[ab.0] + row, col, v.clone());
                    }
                }
            }
        }
    }
    let mut unit = Matrix::zeros(f, n, 1);
    for i in cat.objects() {
        unit.set_block(offsets[cat.identity(i).0], 0, p.unit(i));
    }
    TotalAlgebra { field: f.clone(), cat: cat.clone(), space, offsets, mult, unit, coalgebra: None }
}

/// `Â` with the blockwise coalgebra `Δ = ⊕ Δ_a`, `ε = Σ ε_a`.
pub fn wrap<F: Field>(b: &Polybialgebra<F>) -> TotalAlgebra<F> {
    let mut t = wrap_algebra(b);
    let f = b.field();
    let n = t.dim();
    let mut delta = Matrix::zeros(f, n * n, n);
    let mut eps = Matrix::zeros(f, 1, n);
    for a in b.cat().morphisms() {
        let (o, d) = (t.offsets[a.0], b.dim(a));
        let da = b.comult(a);
        for col in 0..d {
            for p in 0..d {
                for q in 0..d {
                    let v = da.get(p * d + q, col);
                    if !f.is_zero(v) {
                        delta.set((o + p) * n + o + q, o + col, v.clone());
                    }
                }
            }
        }
        eps.set_block(0, o, b.counit(a));
    }
    t.coalgebra = Some((delta, eps));
    t
}

/// Dimensions of `T̂X` per object.
pub fn hat_dims<F: Field>(p: &Polyalgebra<F>, dims: &[usize]) -> Vec<usize> {
    p.cat().objects().map(|i| free_offsets(p, dims, i).1).collect()
}

fn offset_of(blocks: &[(Mor, usize)], a: Mor) -> usize {
    blocks.iter().find(|(b, _)| *b == a).expect("block present").1
}

/// `T̂(f)`, blockwise `M_a ⊗ f_j`.
pub fn hat_map<F: Field>(p: &Polyalgebra<F>, f: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let cat = p.cat();
    cat.objects()
        .map(|i| {
            let blocks: Vec<Matrix<F>> = cat.arrows_into(i).into_iter().map(|a| p.t_map(a, &f[cat.src(a).0])).collect();
            let refs: Vec<&Matrix<F>> = blocks.iter().collect();
            Matrix::block_diag(p.field(), &refs)
        })
        .collect()
}

/// `μ̂_X: T̂T̂X -> T̂X`, block `(a,b)` to block `ab` through `m_{a,b} ⊗ X`.
pub fn hat_mu<F: Field>(p: &Polyalgebra<F>, dims: &[usize]) -> Vec<Matrix<F>> {
    let cat = p.cat();
    let hd = hat_dims(p, dims);
    cat.objects()
        .map(|i| {
            let (outer, rows_in) = free_offsets(p, &hd, i);
            let (tgt_blocks, rows) = free_offsets(p, dims, i);
            let mut out = Matrix::zeros(p.field(), rows, rows_in);
            for (a, aoff) in outer {
                let j = cat.src(a);
                let (inner, _) = free_offsets(p, dims, j);
                for (b, boff) in inner {
                    let ab = cat.compose(a, b).unwrap();
                    let dk = dims[cat.src(b).0];
                    let m = p.mu(a, b, dk);
                    let w = p.dim(b) * dk;
                    let roff = offset_of(&tgt_blocks, ab);
                    for pa in 0..p.dim(a) {
                        let blk = m.block(0, pa * w, m.rows(), w);
                        out.set_block(roff, aoff + pa * hd[j.0] + boff, &blk);
                    }
                }
            }
            out
        })
        .collect()
}

/// `η̂_X: X -> T̂X`, into block `id_i` through `u_i ⊗ X`.
pub fn hat_eta<F: Field>(p: &Polyalgebra<F>, dims: &[usize]) -> Vec<Matrix<F>> {
    let cat = p.cat();
    cat.objects()
        .map(|i| {
            let (blocks, rows) = free_offsets(p, dims, i);
            let mut out = Matrix::zeros(p.field(), rows, dims[i.0]);
            out.set_block(offset_of(&blocks, cat.identity(i)), 0, &p.eta(i, dims[i.0]));
            out
        })
        .collect()
}

fn tensor_dims(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().zip(y).map(|(a, b)| a * b).collect()
}

/// `T̂²_{X,Y}: T̂(X ⊗ Y) -> T̂X ⊗ T̂Y`, block `a` into block `(a,a)` through
/// `T²_a(X_j, Y_j)`.
pub fn hat_t2<F: Field>(b: &Polybialgebra<F>, xdims: &[usize], ydims: &[usize]) -> Vec<Matrix<F>> {
    let cat = b.cat();
    let xy = tensor_dims(xdims, ydims);
    let hx = hat_dims(b, xdims);
    let hy = hat_dims(b, ydims);
    cat.objects()
        .map(|i| {
            let (src_blocks, cols) = free_offsets(b, &xy, i);
            let (xb, _) = free_offsets(b, xdims, i);
            let (yb, _) = free_offsets(b, ydims, i);
            let mut out = Matrix::zeros(b.field(), hx[i.0] * hy[i.0], cols);
            for (a, off) in src_blocks {
                let j = cat.src(a);
                let t = b.t2(a, xdims[j.0], ydims[j.0]);
                let wy = b.dim(a) * ydims[j.0];
                let (xo, yo) = (offset_of(&xb, a), offset_of(&yb, a));
                scatter_rows(&mut out, &t, off, |row| {
                    let (px, qy) = (row / wy, row % wy);
                    (xo + px) * hy[i.0] + yo + qy
                });
            }
            out
        })
        .collect()
}

fn scatter_rows<F: Field>(out: &mut Matrix<F>, m: &Matrix<F>, col_off: usize, row_of: impl Fn(usize) -> usize) {
    for r in 0..m.rows() {
        let target = row_of(r);
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !m.field().is_zero(v) {
                out.set(target, col_off + c, v.clone());
            }
        }
    }
}

/// Per-object block of the wrapped fusion operator.
#[derive(Clone, Debug)]
pub struct WrappedFusionEntry<F: Field> {
    pub object: Obj,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix<F>,
    pub inverse: std::result::Result<Matrix<F>, NotInvertible>,
}

#[derive(Clone, Debug)]
pub struct WrappedFusion<F: Field> {
    pub entries: Vec<WrappedFusionEntry<F>>,
}

impl<F: Field> WrappedFusion<F> {
    pub fn invertible(&self) -> bool {
        self.entries.iter().all(|e| e.inverse.is_ok())
    }

    pub fn to_report(&self, cat: &FinCategory) -> Report {
        let mut r = Report::new("wrapped left fusion operator");
        for e in &self.entries {
            let name = format!("Ĥ^l at object {}", cat.object_name(e.object));
            let detail = format!("{} -> {}", e.source_dim, e.target_dim);
            let c = match &e.inverse {
                Ok(_) => Check::pass(name).with_detail(detail),
                Err(err) => Check::fail(name, format!("{detail}: {err}")).with_witness("Ĥ^l", &e.matrix),
            };
            r.push(c);
        }
        r.note("all coproducts are finite direct sums, so exactness of the sums holds automatically");
        r
    }
}

/// `Ĥ^l_{X,Y}: T̂(X ⊗ T̂Y) -> T̂X ⊗ T̂Y`, assembled from the blocks
/// `H^l_{a,b}(X_j, Y_k)` placed at `(a, ab)`.
pub fn wrapped_fusion<F: Field>(b: &Polybialgebra<F>, xdims: &[usize], ydims: &[usize]) -> Result<WrappedFusion<F>> {
    let cat = b.cat();
    if xdims.len() != cat.num_objects() || ydims.len() != cat.num_objects() {
        return Err(shape("one dimension per object"));
    }
    let hx = hat_dims(b, xdims);
    let hy = hat_dims(b, ydims);
    let xty = tensor_dims(xdims, &hy);
    let objects: Vec<Obj> = cat.objects().collect();
    let entries = par::map(&objects, |&i| {
        let (src_blocks, cols) = free_offsets(b, &xty, i);
        let (xb, _) = free_offsets(b, xdims, i);
        let (yb, _) = free_offsets(b, ydims, i);
        let rows = hx[i.0] * hy[i.0];
        let mut out = Matrix::zeros(b.field(), rows, cols);
        for (a, aoff) in src_blocks {
            let j = cat.src(a);
            let dx = xdims[j.0];
            let (inner, _) = free_offsets(b, ydims, j);
            for (bm, boff) in inner {
                let k = cat.src(bm);
                let ab = cat.compose(a, bm).unwrap();
                let h = b.fusion_left(a, bm, dx, ydims[k.0]).expect("composable");
                let wq_in = b.dim(bm) * ydims[k.0];
                let wq_out = b.dim(ab) * ydims[k.0];
                let (xo, yo) = (offset_of(&xb, a), offset_of(&yb, ab));
                for col in 0..h.cols() {
                    let (pp, q) = (col / wq_in, col % wq_in);
                    let src = aoff + pp * hy[j.0] + boff + q;
                    for row in 0..h.rows() {
                        let v = h.get(row, col);
                        if !b.field().is_zero(v) {
                            let (pp2, q2) = (row / wq_out, row % wq_out);
                            out.set((xo + pp2) * hy[i.0] + yo + q2, src, v.clone());
                        }
                    }
                }
            }
        }
        let inverse = out.try_invert();
        WrappedFusionEntry { object: i, source_dim: cols, target_dim: rows, matrix: out, inverse }
    });
    Ok(WrappedFusion { entries })
}

/// A module over `T̂`: one action `r_i: (T̂X)_i -> X_i` per object.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModule<F: Field> {
    pub spaces: Vec<LabeledSpace>,
    pub actions: Vec<Matrix<F>>,
}

impl<F: Field> GradedModule<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }
}

/// `r_i = [ρ_a]_{a: j -> i}`.
pub fn to_graded<F: Field>(p: &Polyalgebra<F>, x: &PolyModule<F>) -> Result<GradedModule<F>> {
    check_module_shapes(p, x)?;
    let cat = p.cat();
    let actions = cat
        .objects()
        .map(|i| {
            let blocks: Vec<&Matrix<F>> = cat.arrows_into(i).into_iter().map(|a| &x.actions[a.0]).collect();
            Matrix::hstack(p.field(), x.dim(i), &blocks)
        })
        .collect();
    Ok(GradedModule { spaces: x.spaces.clone(), actions })
}

pub fn from_graded<F: Field>(p: &Polyalgebra<F>, g: &GradedModule<F>) -> Result<PolyModule<F>> {
    let cat = p.cat();
    let dims = g.dims();
    let mut actions = vec![None; cat.num_morphisms()];
    for i in cat.objects() {
        let (blocks, cols) = free_offsets(p, &dims, i);
        if g.actions[i.0].shape() != (dims[i.0], cols) {
            return Err(shape(format!("graded action at `{}` has the wrong shape", cat.object_name(i))));
        }
        for (a, off) in blocks {
            let w = p.dim(a) * dims[cat.src(a).0];
            actions[a.0] = Some(g.actions[i.0].block(0, off, dims[i.0], w));
        }
    }
    Ok(PolyModule { spaces: g.spaces.clone(), actions: actions.into_iter().map(Option::unwrap).collect() })
}

/// Monad-module axioms `r μ̂ = r T̂(r)` and `r η̂ = id`.
pub fn validate_graded<F: Field>(p: &Polyalgebra<F>, g: &GradedModule<F>) -> Report {
    let dims = g.dims();
    let mu = hat_mu(p, &dims);
    let eta = hat_eta(p, &dims);
    let tr = hat_map(p, &g.actions);
    let mut r = Report::new("T̂-module axioms");
    let cat = p.cat();
    let assoc = cat
        .objects()
        .map(|i| {
            let lhs = g.actions[i.0].mul(&mu[i.0]);
            let rhs = g.actions[i.0].mul(&tr[i.0]);
            (cat.object_name(i).to_string(), Check::equal("", &lhs, &rhs))
        })
        .collect();
    push_family(&mut r, "associative action", assoc);
    let unit = cat
        .objects()
        .map(|i| {
            let lhs = g.actions[i.0].mul(&eta[i.0]);
            (cat.object_name(i).to_string(), Check::equal("", &lhs, &p.id(dims[i.0])))
        })
        .collect();
    push_family(&mut r, "unital action", unit);
    r
}

/// The single action `Â ⊗ (⊕_i X_i) -> ⊕_i X_i`; block `a` sends `X_src`
/// to `X_tgt`, everything else to zero.
pub fn total_action<F: Field>(t: &TotalAlgebra<F>, x: &PolyModule<F>) -> Matrix<F> {
    let f = &t.field;
    let cat = &t.cat;
    let mut xoff = Vec::new();
    let mut n = 0;
    for i in cat.objects() {
        xoff.push(n);
        n += x.dim(i);
    }
    let mut out = Matrix::zeros(f, n, t.dim() * n);
    for a in cat.morphisms() {
        let (i, j) = (cat.tgt(a), cat.src(a));
        let rho = &x.actions[a.0];
        let dj = x.dim(j);
        for pa in 0..t.block_range(a).len() {
            for q in 0..dj {
                let col = (t.offsets[a.0] + pa) * n + xoff[j.0] + q;
                for row in 0..rho.rows() {
                    let v = rho.get(row, pa * dj + q);
                    if !f.is_zero(v) {
                        out.set(xoff[i.0] + row, col, v.clone());
                    }
                }
            }
        }
    }
    out
}

/// Converts `X` to a `T̂`-module and back, checks both axiom sets agree, the
/// `Â`-module picture, and compatibility with `⊗` on the pair `(X, Y)`.
pub fn module_roundtrip<F: Field>(b: &Polybialgebra<F>, x: &PolyModule<F>, y: &PolyModule<F>) -> Result<Report> {
    let g = to_graded(b, x)?;
    let mut r = Report::new("module round trip through the wrap-up");
    r.absorb("as T̂-module", validate_graded(b, &g));
    let back = from_graded(b, &g)?;
    r.push(Check::verdict("back-conversion is the identity", back == *x, "exact equality of all actions"));

    let t = wrap_algebra(b);
    let act = total_action(&t, x);
    let n = act.rows();
    let id = Matrix::identity(b.field(), n);
    let lhs = act.mul(&t.mult.tensor(&id));
    let rhs = act.mul(&Matrix::identity(b.field(), t.dim()).tensor(&act));
    r.push(Check::equal("Â-action is associative", &lhs, &rhs));
    r.push(Check::equal("Â-action is unital", &act.mul(&t.unit.tensor(&id)), &id));

    let gy = to_graded(b, y)?;
    let xy = tensor_modules(b, x, y)?;
    let gxy = to_graded(b, &xy)?;
    let t2 = hat_t2(b, &x.dims(), &y.dims());
    let inst = b
        .cat()
        .objects()
        .map(|i| {
            let rhs = g.actions[i.0].tensor(&gy.actions[i.0]).mul(&t2[i.0]);
            (b.cat().object_name(i).to_string(), Check::equal("", &gxy.actions[i.0], &rhs))
        })
        .collect();
    push_family(&mut r, "wrap of X ⊗ Y equals (r ⊗ s) T̂²", inst);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::fincat::{standard_category, StandardKind};
    use crate::fixtures;
    use crate::modrep::{free_module, unit_module};

    #[test]
    fn wrap_of_z2_group_is_group_algebra() {
        let q = Rationals;
        let t = wrap(&fixtures::grp_cyclic(&q, 2));
        assert_eq!(t.dim(), 2);
        let h = fixtures::cyclic_group_algebra(&q, 2);
        assert_eq!(t.mult, h.mult);
        assert_eq!(t.unit, h.unit);
        assert!(t.validate().passed());
    }

    #[test]
    fn wrap_of_delta1() {
        let q = Rationals;
        let d1 = standard_category(&StandardKind::Delta1).unwrap();
        let t = wrap(&fixtures::constant(&q, &d1));
        assert_eq!(t.dim(), 3);
        // blocks id0, id1, u: u·id0 = u, id1·u = u, u·u = 0
        let e = |i: usize| {
            let mut c = Matrix::zeros(&q, 3, 1);
            c.set(i, 0, q.from_i64(1));
            c
        };
        let prod = |x: usize, y: usize| t.mult.mul(&e(x).tensor(&e(y)));
        assert_eq!(prod(2, 0), e(2));
        assert_eq!(prod(1, 2), e(2));
        assert!(prod(2, 2).is_zero());
        assert!(prod(0, 2).is_zero());
        assert!(t.validate().passed());
    }

    #[test]
    fn wrap_of_star_is_the_bialgebra() {
        let q = Rationals;
        let s = fixtures::sweedler(&q);
        let t = wrap(&s);
        let back = t.as_star_polyad().unwrap();
        assert_eq!(back.mult(Mor(0), Mor(0)), s.mult(Mor(0), Mor(0)));
        assert_eq!(back.comult(Mor(0)), s.comult(Mor(0)));
        assert!(back.validate().passed());
    }

    #[test]
    fn delta1_counterexample_shapes() {
        let q = Rationals;
        let d1 = standard_category(&StandardKind::Delta1).unwrap();
        let w = wrapped_fusion(&fixtures::constant(&q, &d1), &[1, 1], &[1, 1]).unwrap();
        let e = &w.entries[1];
        assert_eq!((e.source_dim, e.target_dim), (3, 4));
        assert!(e.inverse.is_err());
        assert!(w.entries[0].inverse.is_ok());
    }

    #[test]
    fn wrapped_fusion_factors_through_hat_structure() {
        let q = Rationals;
        let d1 = standard_category(&StandardKind::Delta1).unwrap();
        let cases = vec![
            (fixtures::constant(&q, &d1), vec![1, 2], vec![2, 1]),
            (fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2), vec![1, 1], vec![2, 1]),
            (fixtures::sweedler(&q), vec![1], vec![2]),
        ];
        for (b, xd, yd) in cases {
            let w = wrapped_fusion(&b, &xd, &yd).unwrap();
            let hy = hat_dims(&b, &yd);
            let t2 = hat_t2(&b, &xd, &hy);
            let mu = hat_mu(&b, &yd);
            let hx = hat_dims(&b, &xd);
            for i in b.cat().objects() {
                let expect = Matrix::identity(&q, hx[i.0]).tensor(&mu[i.0]).mul(&t2[i.0]);
                assert_eq!(w.entries[i.0].matrix, expect);
            }
        }
    }

    #[test]
    fn hat_is_a_monad() {
        let q = Rationals;
        let d1 = standard_category(&StandardKind::Delta1).unwrap();
        let b = fixtures::constant(&q, &d1);
        let dims = [1, 2];
        let hd = hat_dims(&b, &dims);
        let mu = hat_mu(&b, &dims);
        let mu_t = hat_mu(&b, &hd);
        let t_mu = hat_map(&b, &mu);
        let eta_t = hat_eta(&b, &hd);
        let t_eta = hat_map(&b, &hat_eta(&b, &dims));
        for i in 0..2 {
            assert_eq!(mu[i].mul(&mu_t[i]), mu[i].mul(&t_mu[i]));
            assert!(mu[i].mul(&eta_t[i]).is_identity());
            assert!(mu[i].mul(&t_eta[i]).is_identity());
        }
    }

    #[test]
    fn roundtrips() {
        let q = Rationals;
        let g = fixtures::grp_cyclic(&q, 2);
        let flip = PolyModule {
            spaces: vec![LabeledSpace::from_strs(&["x0", "x1"])],
            actions: vec![Matrix::identity(&q, 2), Matrix::from_i64(&q, 2, 2, &[0, 1, 1, 0])],
        };
        let u = unit_module(&g);
        assert!(module_roundtrip(&g, &u, &u).unwrap().passed());
        assert!(module_roundtrip(&g, &flip, &flip).unwrap().passed());
        let d1 = standard_category(&StandardKind::Delta1).unwrap();
        let c = fixtures::constant(&q, &d1);
        let x = free_module(&c, &[1, 1]);
        let r = module_roundtrip(&c, &x, &unit_module(&c)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn broken_module_fails_as_graded_module() {
        let q = Rationals;
        let g = fixtures::grp_cyclic(&q, 2);
        let bad = PolyModule {
            spaces: vec![LabeledSpace::from_strs(&["x0", "x1"])],
            actions: vec![Matrix::identity(&q, 2), Matrix::from_i64(&q, 2, 2, &[1, 1, 0, 1])],
        };
        let r = module_roundtrip(&g, &bad, &bad).unwrap();
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.name.contains("associative")));
    }
}
