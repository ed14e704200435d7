use proptest::prelude::*;

use polyad_core::fincat::{arrow_category, standard_category, GroupTable, StandardKind};
use polyad_core::hopfstruct::{free_hopf_representation, validate_hopf_representation};
use polyad_core::modrep::{tensor_modules, validate_module};
use polyad_core::random::{self, hopf_pool, pool, random_dims, random_module, random_structure};
use polyad_core::wrapup::module_roundtrip;
use polyad_core::{FinCategory, Matrix, PrimeField, Rationals};

fn q_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| Matrix::from_i64(&Rationals, rows, cols, &v))
}

fn shaped(max: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| q_matrix(r, c))
}

fn f101() -> PrimeField {
    PrimeField::new(101).unwrap()
}

fn categories() -> Vec<FinCategory> {
    let mut v: Vec<FinCategory> = [
        StandardKind::Terminal,
        StandardKind::Delta1,
        StandardKind::Indiscrete(2),
        StandardKind::Indiscrete(3),
        StandardKind::Group(GroupTable::cyclic(2)),
        StandardKind::Group(GroupTable::cyclic(4)),
    ]
    .iter()
    .map(|k| standard_category(k).unwrap())
    .collect();
    let arrows: Vec<FinCategory> = v.iter().map(|d| arrow_category(d).0).collect();
    v.extend(arrows);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kron_is_associative(a in shaped(3), b in shaped(3), c in shaped(2)) {
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
    }

    #[test]
    fn kron_is_functorial(
        (a, c) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(m, n, k)| (q_matrix(m, n), q_matrix(n, k))),
        (b, d) in (1usize..=2, 1usize..=3, 1usize..=2).prop_flat_map(|(m, n, k)| (q_matrix(m, n), q_matrix(n, k))),
    ) {
        prop_assert_eq!(a.tensor(&b).mul(&c.tensor(&d)), a.mul(&c).tensor(&b.mul(&d)));
    }

    #[test]
    fn inverses_are_two_sided(a in (1usize..=4).prop_flat_map(|n| q_matrix(n, n))) {
        match a.try_invert() {
            Ok(b) => {
                prop_assert!(a.mul(&b).is_identity());
                prop_assert!(b.mul(&a).is_identity());
            }
            Err(_) => prop_assert!(a.rank() < a.rows()),
        }
    }

    #[test]
    fn cokernel_kills_the_image(a in shaped(4)) {
        let ck = a.cokernel();
        prop_assert!(ck.projection.mul(&a).is_zero());
        prop_assert_eq!(ck.dim + a.rank(), a.rows());
        prop_assert_eq!(ck.projection.rank(), ck.dim);
    }

    #[test]
    fn rank_nullity(a in shaped(4)) {
        let k = a.kernel_basis();
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.cols() + a.rank(), a.cols());
    }

    #[test]
    fn prime_field_matrices_invert(seed in any::<u64>(), n in 1usize..=5) {
        let f = f101();
        let (m, inv) = random::random_invertible(&f, n, &mut random::rng(seed));
        prop_assert!(m.mul(&inv).is_identity() && inv.mul(&m).is_identity());
    }
}

#[test]
fn pair_count_formula() {
    for d in categories() {
        let expected: usize = d.objects().map(|j| d.arrows_into(j).len() * d.arrows_out_of(j).len()).sum();
        assert_eq!(d.composable_pairs().len(), expected);
        if let Some(inv) = d.is_groupoid() {
            for a in d.morphisms() {
                let b = inv[a.0];
                assert_eq!(d.compose(a, b), Some(d.identity(d.tgt(a))));
                assert_eq!(d.compose(b, a), Some(d.identity(d.src(a))));
            }
        }
        // Ar(Ar(D)) still validates
        let (ar, t) = arrow_category(&d);
        assert_eq!(t.source, ar);
        assert_eq!(arrow_category(&ar).0.num_objects(), ar.num_morphisms());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_of_modules_is_a_module(seed in any::<u64>()) {
        let f = f101();
        let mut r = random::rng(seed);
        let p = hopf_pool(&f);
        let (_, b) = &p[(seed % p.len() as u64) as usize];
        let n = b.cat().num_objects();
        let x = random_module(b, &random_dims(n, 2, &mut r), &mut r);
        let y = random_module(b, &random_dims(n, 2, &mut r), &mut r);
        let xy = tensor_modules(b, &x, &y).unwrap();
        prop_assert!(validate_module(b, &xy).unwrap().passed());
        prop_assert!(module_roundtrip(b, &x, &y).unwrap().passed());
    }

    #[test]
    fn transport_preserves_axioms_and_hopfness(seed in any::<u64>()) {
        let f = f101();
        let mut r = random::rng(seed);
        let p = pool(&f);
        let (name, b) = random_structure(&f, &p, &mut r);
        let original = &p.iter().find(|(n, _)| name.strip_prefix("transported ") == Some(n.as_str())).unwrap().1;
        prop_assert!(b.algebra().validate().passed());
        prop_assert!(b.validate().passed());
        let before = original.is_hopf();
        let after = b.is_hopf();
        prop_assert_eq!(before.is_hopf(), after.is_hopf(), "{}", name);
        for (e0, e1) in before.entries.iter().zip(&after.entries) {
            prop_assert_eq!(e0.matrix.rank(), e1.matrix.rank());
            if let Ok(inv) = &e1.inverse {
                prop_assert!(inv.mul(&e1.matrix).is_identity());
            }
        }
        for t in b.transitivity() {
            prop_assert_eq!(t.primary(), t.cross_check());
        }
        let hr = free_hopf_representation(&b, &vec![1; b.cat().num_objects()]);
        prop_assert!(validate_hopf_representation(&b, &hr).unwrap().passed());
    }
}
