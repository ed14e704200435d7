//! One line per acceptance criterion; exits non-zero if any fails or runs
//! over its time bound.

use std::time::{Duration, Instant};

use polyad_core::fincat::{arrow_category, standard_category, FunctorData, StandardKind};
use polyad_core::hopfstruct::{
    decompose_hopf_module, decompose_hopf_representation, free_coinvariants_iso, free_hopf_module,
    validate_hopf_representation,
};
use polyad_core::lift::lift_fundamental_check;
use polyad_core::modrep::{
    check_groupoid_equivalence, check_rep_adjunction, free_representation, groupoid_extension, module_to_rep,
    rep_to_module, restrict_module, validate_module, validate_representation, PolyModule,
};
use polyad_core::random::{self, hopf_pool, pool, random_dims, random_hopf_representation, random_module, random_structure};
use polyad_core::rmatrix::{braided_restriction_check, induced_braiding, validate_rmatrix};
use polyad_core::wrapup::{module_roundtrip, wrapped_fusion};
use polyad_core::{
    fixtures, FinCategory, Matrix, Obj, PolyadError, Polybialgebra, PrimeField, Rationals, Side,
};

type Outcome = Result<(), String>;

/// Name, time bound in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn cat(kind: StandardKind) -> FinCategory {
    standard_category(&kind).unwrap()
}

/// Every fixture over `Q` with its name.
fn fixtures_q() -> Vec<(&'static str, Polybialgebra<Rationals>)> {
    let q = Rationals;
    vec![
        ("kZ2", fixtures::kz2(&q)),
        ("kZ3", fixtures::kzn(&q, 3)),
        ("sweedler", fixtures::sweedler(&q)),
        ("func(Z2)", fixtures::func_zn(&q, 2)),
        ("idempotent", fixtures::idempotent(&q)),
        ("grp(Z2)", fixtures::grp_cyclic(&q, 2)),
        ("grp(Z3)", fixtures::grp_cyclic(&q, 3)),
        ("const(terminal)", fixtures::constant(&q, &cat(StandardKind::Terminal))),
        ("const(delta1)", fixtures::constant(&q, &cat(StandardKind::Delta1))),
        ("const(indiscrete2)", fixtures::constant(&q, &cat(StandardKind::Indiscrete(2)))),
        ("hopfcat(kZ2,2)", fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2)),
        ("delta1-zero-u", fixtures::delta1_zero_u(&q)),
        ("delta1-grouplike-pair", fixtures::delta1_grouplike_pair(&q)),
    ]
}

/// `dim (T̂Z)_i = Σ_{b: tgt b = i} dim M_b · dim Z_{src b}`, read straight
/// off the category tables.
fn hat_dim(c: &FinCategory, block: &dyn Fn(usize) -> usize, z: &[usize], i: usize) -> usize {
    c.morphisms()
        .filter(|&b| c.tgt(b).0 == i)
        .map(|b| block(b.0) * z[c.src(b).0])
        .sum()
}

fn criterion_1() -> Outcome {
    let b = fixtures::constant(&Rationals, &cat(StandardKind::Delta1));
    let c = b.cat();
    let one = |_: usize| 1;
    let (x, y) = ([1, 1], [1, 1]);
    let ty: Vec<usize> = (0..2).map(|i| hat_dim(c, &one, &y, i)).collect();
    let x_ty: Vec<usize> = (0..2).map(|i| x[i] * ty[i]).collect();
    let tx: Vec<usize> = (0..2).map(|i| hat_dim(c, &one, &x, i)).collect();
    let obj1 = c.find_object("1").unwrap();
    let (src, tgt) = (hat_dim(c, &one, &x_ty, obj1.0), tx[obj1.0] * ty[obj1.0]);
    ensure((src, tgt) == (3, 4), || format!("oracle gives {src} -> {tgt}"))?;
    let wf = wrapped_fusion(&b, &x, &y).map_err(|e| e.to_string())?;
    let e = wf.entries.iter().find(|e| e.object == obj1).ok_or("no entry at object 1")?;
    ensure((e.source_dim, e.target_dim) == (src, tgt), || {
        format!("object 1: {} -> {}", e.source_dim, e.target_dim)
    })?;
    ensure(e.matrix.shape() == (4, 3) && e.inverse.is_err(), || "Ĥ^l at 1 is invertible".into())?;
    ensure(!wf.invertible(), || "wrapped fusion reported invertible".into())
}

fn criterion_2() -> Outcome {
    let q = Rationals;
    let cases = [
        ("grp(Z2)", fixtures::grp_cyclic(&q, 2)),
        ("grp(Z3)", fixtures::grp_cyclic(&q, 3)),
        ("hopfcat(kZ2,2)", fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2)),
    ];
    for (name, b) in cases {
        let n = b.cat().num_objects();
        for dims in [vec![1; n], vec![2; n]] {
            let wf = wrapped_fusion(&b, &dims, &dims).map_err(|e| e.to_string())?;
            for e in &wf.entries {
                let inv = e.inverse.as_ref().map_err(|err| format!("{name} at {:?}: {err}", e.object))?;
                ensure(e.matrix.mul(inv).is_identity() && inv.mul(&e.matrix).is_identity(), || {
                    format!("{name}: inverse does not multiply back")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let q = Rationals;
    let hopf = [
        ("kZ2", fixtures::kz2(&q)),
        ("func(Z2)", fixtures::func_zn(&q, 2)),
        ("sweedler", fixtures::sweedler(&q)),
        ("hopfcat(kZ2,2)", fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2)),
    ];
    for (name, b) in hopf {
        let r = b.is_hopf();
        ensure(r.is_hopf(), || format!("{name} not certified Hopf"))?;
        for e in &r.entries {
            ensure(e.matrix.rank() == e.matrix.rows(), || format!("{name}: rank defect"))?;
        }
    }
    let b = fixtures::idempotent(&q);
    let r = b.is_hopf();
    ensure(!r.is_hopf(), || "idempotent certified Hopf".into())?;
    // x⊗y ↦ x₁⊗x₂y on {1, s}: 1⊗1, 1⊗s fixed, s⊗1 and s⊗s both go to s⊗s
    let hand = Matrix::from_i64(&q, 4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1]);
    let e = r.entry(Side::Left, polyad_core::Mor(0), polyad_core::Mor(0)).ok_or("no left entry")?;
    ensure(e.matrix == hand, || "left fusion differs from the hand expansion".into())?;
    for e in &r.entries {
        ensure(e.matrix.shape() == (4, 4) && e.matrix.rank() == 3, || {
            format!("rank {} of {}", e.matrix.rank(), e.matrix.rows())
        })?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for (name, b) in fixtures_q() {
        let r = b.check_fusion_identities(&[(1, 1, 1), (2, 1, 2)]);
        ensure(r.passed(), || format!("{name}: {}", r.failures().next().unwrap().name))?;
    }
    let sw2 = fixtures::hopf_category(&Rationals, &fixtures::sweedler_algebra(&Rationals), 2);
    ensure(sw2.check_fusion_identities(&[(1, 1, 1)]).passed(), || "hopfcat(sweedler,2)".into())?;
    let f = f101();
    let p = pool(&f);
    let mut rng = random::rng(404);
    for k in 0..100 {
        let (name, b) = random_structure(&f, &p, &mut rng);
        ensure(b.validate().passed(), || format!("random #{k} ({name}) invalid"))?;
        let r = b.check_fusion_identities(&[(1, 1, 1)]);
        ensure(r.passed(), || format!("random #{k} ({name}): {}", r.failures().next().unwrap().name))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let q = Rationals;
    for (name, b) in [
        ("hopfcat(kZ2,2)", fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2)),
        ("hopfcat(sweedler,2)", fixtures::hopf_category(&q, &fixtures::sweedler_algebra(&q), 2)),
    ] {
        let r = lift_fundamental_check(&b, 2);
        ensure(r.products_ok() && r.units_ok() && r.tensors_ok(), || format!("{name}: {}", r.to_report(&b)))?;
    }
    for (name, b) in [
        ("non-transitive", fixtures::delta1_zero_u(&q)),
        ("non-Hopf", fixtures::delta1_grouplike_pair(&q)),
    ] {
        let r = lift_fundamental_check(&b, 1);
        ensure(!r.units_ok(), || format!("{name} mutant passes the unit sub-check"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let f = f101();
    let p = hopf_pool(&f);
    let mut rng = random::rng(606);
    for k in 0..50 {
        let (name, b) = random_structure(&f, &p, &mut rng);
        let dims = random_dims(b.cat().num_objects(), 3, &mut rng);
        let r = free_coinvariants_iso(&b, &dims).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("X #{k} over {name}, dims {dims:?}: {r}"))?;
    }
    for k in 0..20 {
        let (name, b) = random_structure(&f, &p, &mut rng);
        let dims = random_dims(b.cat().num_objects(), 2, &mut rng);
        let hr = random_hopf_representation(&b, &dims, &mut rng);
        ensure(validate_hopf_representation(&b, &hr).map_err(|e| e.to_string())?.passed(), || {
            format!("HR #{k} invalid")
        })?;
        let d = decompose_hopf_representation(&b, &hr).map_err(|e| e.to_string())?;
        let xi = d.xi.as_ref().ok_or_else(|| format!("HR #{k} over {name}: no ξ̃"))?;
        for (t, x) in d.theta.iter().zip(xi) {
            ensure(t.mul(x).is_identity() && x.mul(t).is_identity(), || format!("HR #{k}: θξ̃ ≠ id"))?;
        }
        ensure(d.report.passed(), || format!("HR #{k} over {name}: {}", d.report))?;
    }
    let z = fixtures::delta1_zero_u(&f);
    let hr = polyad_core::hopfstruct::free_hopf_representation(&z, &[1, 1]);
    let d = decompose_hopf_representation(&z, &hr).map_err(|e| e.to_string())?;
    let failed: Vec<_> = d.report.failures().collect();
    ensure(
        failed.len() == 1
            && failed[0].name == "hypothesis: T is conservative"
            && failed[0].detail.starts_with("M_u = 0, so T_u sends the non-invertible map 0: k -> 0")
            && failed[0].witnesses.first().is_some_and(|w| (w.rows, w.cols) == (0, 0)),
        || format!("zero-block mutant: {}", d.report),
    )
}

fn criterion_7() -> Outcome {
    let q = Rationals;
    for (name, b) in [("grp(Z2)", fixtures::grp_cyclic(&q, 2)), ("kZ2", fixtures::kz2(&q))] {
        for d in 0..=2 {
            let hm = free_hopf_module(&b, &[d]);
            let r = decompose_hopf_module(&b, &hm).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{name} rank {d}: {r}"))?;
        }
    }
    let c = fixtures::constant(&q, &cat(StandardKind::Delta1));
    match decompose_hopf_module(&c, &free_hopf_module(&c, &[1, 1])) {
        Err(PolyadError::NotGroupoid(_)) => Ok(()),
        other => Err(format!("const(delta1): {:?}", other.map(|r| r.passed()))),
    }
}

fn criterion_8() -> Outcome {
    let mut rng = random::rng(808);
    for (name, b) in fixtures_q() {
        let n = b.cat().num_objects();
        let x = random_module(&b, &random_dims(n, 2, &mut rng), &mut rng);
        let y = random_module(&b, &random_dims(n, 2, &mut rng), &mut rng);
        let r = module_roundtrip(&b, &x, &y).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("module round trip on {name}: {r}"))?;

        let dims = random_dims(n, 2, &mut rng);
        let w = free_representation(&b, &dims);
        ensure(validate_representation(&b, &w).map_err(|e| e.to_string())?.passed(), || {
            format!("{name}: free representation invalid")
        })?;
        let (pulled, m) = rep_to_module(&b, &w).map_err(|e| e.to_string())?;
        ensure(validate_module(&pulled, &m).map_err(|e| e.to_string())?.passed(), || {
            format!("{name}: converted module invalid")
        })?;
        ensure(module_to_rep(&m) == w, || format!("{name}: Rep -> Mod -> Rep is not the identity"))?;
        let r = check_rep_adjunction(&b, &dims, &w).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: adjunction {r}"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let q = Rationals;
    let func = fixtures::func_zn(&q, 2);
    let sign = vec![fixtures::sign_rmatrix(&q)];
    let k = fixtures::kz2(&q);
    let hc = fixtures::hopf_category(&q, &fixtures::cyclic_group_algebra(&q, 2), 2);
    let cases = [
        ("sign R on func(Z2)", &func, sign.clone()),
        ("trivial R on kZ2", &k, fixtures::trivial_rmatrix(&k)),
        ("trivial R on hopfcat(kZ2,2)", &hc, fixtures::trivial_rmatrix(&hc)),
    ];
    for (name, b, r) in &cases {
        let rep = validate_rmatrix(b, r, 2, 9).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("{name}: {rep}"))?;
        for hex in ["hexagon τ_{X,Y⊗Z}", "hexagon τ_{X⊗Y,Z}"] {
            ensure(rep.checks.iter().any(|c| c.name.starts_with(hex) && c.passed), || format!("{name}: {hex} missing"))?;
        }
        let c = b.cat();
        let functors: [(&str, FunctorData); 3] = [
            ("identity", FunctorData::identity(c)),
            ("point", FunctorData::point(c, Obj(c.num_objects() - 1))),
            ("arrow target", arrow_category(c).1),
        ];
        for (fname, fun) in functors {
            let r = braided_restriction_check(b, r, &fun, 2).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{name} along {fname}: {r}"))?;
        }
    }
    // evaluation at g (d_e ↦ 0, d_g ↦ 1) braids with itself by β(g,g) = -1
    let s = PolyModule {
        spaces: vec![polyad_core::LabeledSpace::from_strs(&["v"])],
        actions: vec![Matrix::from_i64(&q, 1, 2, &[0, 1])],
    };
    ensure(validate_module(&func, &s).map_err(|e| e.to_string())?.passed(), || "sign module invalid".into())?;
    let tau = induced_braiding(&func, &sign, &s, &s).map_err(|e| e.to_string())?;
    ensure(tau.components[0] == Matrix::from_i64(&q, 1, 1, &[-1]), || "sign braiding is not -1".into())?;
    // and the kZ2 compatibility test rejects it
    ensure(!validate_rmatrix(&k, &[fixtures::sign_rmatrix(&q)], 1, 9).map_err(|e| e.to_string())?.passed(), || {
        "sign R accepted on kZ2".into()
    })
}

fn criterion_10() -> Outcome {
    let f = f101();
    let c = fixtures::constant(&f, &cat(StandardKind::Indiscrete(2)));
    let twist = fixtures::sign_twist_indiscrete2(&f);
    let mut rng = random::rng(1010);
    for (name, p) in [("const(indiscrete2)", c.algebra().clone()), ("sign twist", twist)] {
        for d in 1..=2 {
            // the local polyalgebra at the basepoint is k, so X0 is a bare space
            let x0 = PolyModule {
                spaces: vec![polyad_core::LabeledSpace::numbered("v", d)],
                actions: vec![Matrix::identity(&f, d)],
            };
            let ext = groupoid_extension(&p, Obj(0), &x0).map_err(|e| e.to_string())?;
            let back = restrict_module(&ext.module, &ext.inclusion);
            // spaces are relabelled M_{id}⊗X0, and u_{i0}⊗X0 is the identity matrix
            ensure(
                back.actions == x0.actions && back.dims() == x0.dims() && p.eta(Obj(0), d).is_identity(),
                || format!("{name}: restriction after extension is not the identity"),
            )?;
            let r = check_groupoid_equivalence(&p, Obj(0), &x0, Some(&ext.module)).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{name}: {r}"))?;
            // a module that is not an extension: transport the extension along random g_i
            let g: Vec<_> = (0..2).map(|_| random::random_invertible(&f, d, &mut rng)).collect();
            let cat = p.cat();
            let actions = cat
                .morphisms()
                .map(|a| g[cat.tgt(a).0].0.mul(&ext.module.actions[a.0]).mul(&p.t_map(a, &g[cat.src(a).0].1)))
                .collect();
            let x = PolyModule { spaces: ext.module.spaces.clone(), actions };
            let r = check_groupoid_equivalence(&p, Obj(0), &x0, Some(&x)).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{name} transported: {r}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("wrapped fusion counterexample on const(delta1)", Some(1), criterion_1),
        ("wrapped fusion invertible on Hopf fixtures", Some(5), criterion_2),
        ("Hopf certification and rank defect", None, criterion_3),
        ("fusion operator identities, fixtures and 100 random structures", Some(60), criterion_4),
        ("lift of the polyad: products, units, tensor functors", None, criterion_5),
        ("Hopf representation decomposition", Some(120), criterion_6),
        ("Hopf module decomposition over a groupoid", None, criterion_7),
        ("module, representation and adjunction identifications", None, criterion_8),
        ("R-matrix suite", None, criterion_9),
        ("groupoid restriction equivalence", None, criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, bound, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let over = bound.is_some_and(|b| elapsed > Duration::from_secs(b));
        let bound_text = bound.map(|b| format!(" (bound {b} s)")).unwrap_or_default();
        match (&outcome, over) {
            (Ok(()), false) => println!("criterion {:>2}: PASS  {name} [{elapsed:.2?}{bound_text}]", k + 1),
            (Ok(()), true) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} [{elapsed:.2?} exceeds{bound_text}]", k + 1);
            }
            (Err(msg), _) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} [{elapsed:.2?}{bound_text}]: {msg}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
