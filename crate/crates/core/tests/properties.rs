mod common;

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tpalg_core::catalog;
use tpalg_core::halfderiv;
use tpalg_core::identities::{self, IdentityId};
use tpalg_core::kantor;
use tpalg_core::structure::{self, IdealKind, SimplicityOptions, SimplicityVerdict, Strategy as Search};
use tpalg_core::witt::{self, ZAlgebraSpec, ZElement};
use tpalg_core::{Element, FieldSpec, Matrix, Product, Scalar, Subspace, SuperAlgebra};

fn f3() -> FieldSpec {
    FieldSpec::Prime(3)
}

fn gf3_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(0i64..3, rows * cols).prop_map(move |v| {
        let rows: Vec<Vec<Scalar>> = v.chunks(cols).map(|r| r.iter().map(|&x| f3().from_i64(x)).collect()).collect();
        Matrix::from_rows(f3(), rows).unwrap()
    })
}

fn random_scalar(f: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match f.order() {
        Some(p) => f.from_i64(rng.random_range(0..p as i64)),
        None => f.from_ratio(rng.random_range(-4..=4), rng.random_range(1..=3)).unwrap(),
    }
}

/// A random element supported on basis vectors of one parity.
fn random_homogeneous(a: &SuperAlgebra, parity: u8, rng: &mut ChaCha8Rng) -> Element {
    let coords = (0..a.dim())
        .map(|i| if a.parity_of_basis(i) == parity { random_scalar(a.field(), rng) } else { a.field().zero() })
        .collect();
    Element::new(a.field(), coords)
}

fn all_catalog() -> Vec<SuperAlgebra> {
    let mut out: Vec<SuperAlgebra> = catalog::list().iter().map(|e| catalog::get(e.default_spec).unwrap()).collect();
    out.push(catalog::tp_sl2_gf3(1, 1).unwrap());
    out.push(catalog::sl2(FieldSpec::Rationals));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_kernels_annihilate(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| gf3_matrix(r, c))) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r);
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
        }
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn subspaces_canonicalize(m in gf3_matrix(3, 4), mix in gf3_matrix(3, 3)) {
        let s = Subspace::span(f3(), 4, m.row_vectors()).unwrap();
        // rows of mix·m span a subspace of s, equal to it when mix is invertible
        let t = Subspace::span(f3(), 4, mix.mul(&m).row_vectors()).unwrap();
        prop_assert!(t.is_subspace_of(&s).unwrap());
        if mix.rank() == 3 {
            prop_assert_eq!(t, s);
        }
    }

    #[test]
    fn rational_inverses_are_exact(a in -1000i64..1000, b in -1000i64..1000) {
        prop_assume!(a != 0 && b != 0);
        let q = FieldSpec::Rationals;
        let x = q.from_ratio(a, b).unwrap();
        let y = q.from_ratio(b, a).unwrap();
        prop_assert!((&x * &y).is_one());
    }

    #[test]
    fn random_tables_are_supersymmetric(seed in any::<u64>(), n in 1usize..5, graded in any::<bool>()) {
        let mut rng = common::rng(seed);
        let a = common::random_algebra(&mut rng, f3(), n, graded, 0.4);
        prop_assert!(a.validate().is_ok());
        for i in 0..n {
            for j in 0..n {
                let flip = a.parity_of_basis(i) & a.parity_of_basis(j) == 1;
                let (ei, ej) = (a.basis_element(i), a.basis_element(j));
                let c1 = a.multiply(Product::Circ, &ei, &ej).unwrap();
                let c2 = a.multiply(Product::Circ, &ej, &ei).unwrap();
                prop_assert_eq!(c1, c2.signed(flip));
                let b1 = a.multiply(Product::Bracket, &ei, &ej).unwrap();
                let b2 = a.multiply(Product::Bracket, &ej, &ei).unwrap();
                prop_assert_eq!(b1, b2.signed(!flip));
            }
        }
    }

    #[test]
    fn ungraded_collapse(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = common::rng(seed);
        let a = common::random_algebra(&mut rng, f3(), n, false, 0.5);
        let c = |x: &Element, y: &Element| a.multiply(Product::Circ, x, y).unwrap();
        let b = |x: &Element, y: &Element| a.multiply(Product::Bracket, x, y).unwrap();
        let two = f3().from_i64(2);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
                    let jac = b(&b(&x, &y), &z).add(&b(&b(&y, &z), &x)).add(&b(&b(&z, &x), &y));
                    let d = identities::defect(&a, IdentityId::JacobiSuper, &[i, j, k]).unwrap();
                    prop_assert_eq!(d.as_element().unwrap(), &jac);
                    let leib = c(&x, &b(&y, &z)).scale(&two).sub(&b(&c(&x, &y), &z)).sub(&b(&y, &c(&x, &z)));
                    let d = identities::defect(&a, IdentityId::TpLeibnizSuper, &[i, j, k]).unwrap();
                    prop_assert_eq!(d.as_element().unwrap(), &leib);
                }
            }
        }
    }

    #[test]
    fn direct_sum_summands_are_ideals(s1 in any::<u64>(), s2 in any::<u64>(), n in 1usize..3, m in 1usize..3) {
        let a = common::random_algebra(&mut common::rng(s1), f3(), n, false, 0.6);
        let b = common::random_algebra(&mut common::rng(s2), f3(), m, false, 0.6);
        let s = a.direct_sum(&b).unwrap();
        let first = Subspace::coordinate(f3(), n + m, &(0..n).collect::<Vec<_>>());
        let second = Subspace::coordinate(f3(), n + m, &(n..n + m).collect::<Vec<_>>());
        prop_assert!(structure::is_ideal(&s, &first, IdealKind::Tp));
        prop_assert!(structure::is_ideal(&s, &second, IdealKind::Tp));
        for i in 0..n {
            for j in n..n + m {
                prop_assert!(s.basis_product(Product::Circ, i, j).is_empty());
                prop_assert!(s.basis_product(Product::Bracket, j, i).is_empty());
            }
        }
    }

    #[test]
    fn meataxe_agrees_with_exhaustive(seed in any::<u64>(), n in 1usize..5, graded in any::<bool>()) {
        let a = common::random_algebra(&mut common::rng(seed), f3(), n, graded, 0.3);
        let opts = SimplicityOptions { seed, ..SimplicityOptions::default() };
        for which in [None, Some(Product::Bracket)] {
            let ex = structure::is_simple(&a, which, Search::Exhaustive, &opts).unwrap().verdict;
            let mx = structure::is_simple(&a, which, Search::Meataxe, &opts).unwrap().verdict;
            if mx != SimplicityVerdict::Indeterminate {
                prop_assert_eq!(ex.is_simple(), mx.is_simple());
            }
            let kind = if which.is_none() { IdealKind::Tp } else { IdealKind::Bracket };
            for w in [ex.witness(), mx.witness()].into_iter().flatten() {
                prop_assert!(structure::is_ideal(&a, w, kind));
            }
        }
    }

    #[test]
    fn half_derivation_members_satisfy_the_law(seed in any::<u64>(), n in 1usize..4, graded in any::<bool>(), parity in 0u8..2) {
        let mut rng = common::rng(seed);
        let a = common::random_algebra(&mut rng, f3(), n, graded, 0.4);
        let s = halfderiv::half_derivations(&a, Product::Bracket, parity).unwrap();
        if parity == 0 {
            prop_assert!(s.contains(&Matrix::identity(f3(), n)));
        }
        let basis = s.basis();
        let mut d = Matrix::zeros(f3(), n, n);
        for m in &basis {
            d.add_scaled(&random_scalar(f3(), &mut rng), m);
        }
        prop_assert!(halfderiv::is_half_derivation(&a, Product::Bracket, parity, &d));
        let apply = |e: &Element| Element::new(f3(), d.mul_vec(e.coords()));
        let two = f3().from_i64(2);
        for _ in 0..10 {
            let px = rng.random_range(0..2u8);
            let x = random_homogeneous(&a, px, &mut rng);
            let y = random_homogeneous(&a, rng.random_range(0..2u8), &mut rng);
            let lhs = apply(&a.multiply(Product::Bracket, &x, &y).unwrap()).scale(&two);
            let rhs = a
                .multiply(Product::Bracket, &apply(&x), &y)
                .unwrap()
                .add(&a.multiply(Product::Bracket, &x, &apply(&y)).unwrap().signed(parity & px == 1));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn witt_mutations_are_transposed_poisson(
        q in proptest::collection::btree_map(-5i64..=5, -3i64..=3, 1..4),
        xs in proptest::collection::vec(proptest::collection::btree_map(-5i64..=5, -3i64..=3, 1..4), 3),
    ) {
        let z = |m: &std::collections::BTreeMap<i64, i64>| ZElement::from_pairs(&m.iter().map(|(&k, &c)| (k, c)).collect::<Vec<_>>());
        let spec = ZAlgebraSpec::witt(z(&q));
        let (x, y, w) = (z(&xs[0]), z(&xs[1]), z(&xs[2]));
        let m = |a: &ZElement, b: &ZElement| spec.product(a, b).unwrap();
        let b = |a: &ZElement, c: &ZElement| spec.bracket(a, c).unwrap();
        prop_assert_eq!(m(&x, &y), m(&y, &x));
        prop_assert_eq!(m(&m(&x, &y), &w), m(&x, &m(&y, &w)));
        let two = FieldSpec::Rationals.from_i64(2);
        let leibniz = m(&x, &b(&y, &w)).scale(&two).sub(&b(&m(&x, &y), &w)).sub(&b(&y, &m(&x, &w)));
        prop_assert!(leibniz.is_zero());
    }

    #[test]
    fn laurent_units_match_window_units(k in -2i64..=2, c in 1i64..4, extra in proptest::option::of((-2i64..=2, 1i64..4))) {
        let mut q = ZElement::from_pairs(&[(k, c)]);
        if let Some((k2, c2)) = extra {
            q = q.add(&ZElement::from_pairs(&[(k2, c2)]));
        }
        prop_assume!(!q.is_zero());
        let spec = ZAlgebraSpec::witt(q.clone());
        let inv = witt::laurent_invertible(&q).unwrap();
        let unit = witt::unit_in_window(&spec, -4, 4).unwrap();
        prop_assert_eq!(inv, unit);
    }
}

#[test]
fn multilinearity_on_the_catalog() {
    let mut rng = common::rng(7);
    for a in all_catalog() {
        for id in IdentityId::ALL {
            let passes = identities::check(&a, id).passed();
            for _ in 0..100 {
                let parities: Vec<u8> = (0..id.arity()).map(|_| rng.random_range(0..2)).collect();
                let args: Vec<Element> = parities.iter().map(|&p| random_homogeneous(&a, p, &mut rng)).collect();
                let d = identities::defect_at(&a, id, &args).unwrap();
                if passes {
                    assert!(d.is_zero(), "{} {id}", a.name());
                }
                // additivity in the first slot
                let extra = random_homogeneous(&a, parities[0], &mut rng);
                let mut shifted = args.clone();
                shifted[0] = args[0].add(&extra);
                let mut alone = args.clone();
                alone[0] = extra;
                let sum = identities::defect_at(&a, id, &shifted).unwrap();
                let parts = (identities::defect_at(&a, id, &alone).unwrap(), d);
                match (sum, parts) {
                    (identities::Defect::Element(s), (identities::Defect::Element(p), identities::Defect::Element(q))) => {
                        assert_eq!(s, p.add(&q), "{} {id}", a.name())
                    }
                    (identities::Defect::Operator(s), (identities::Defect::Operator(p), identities::Defect::Operator(q))) => {
                        assert_eq!(s, p.add(&q), "{} {id}", a.name())
                    }
                    _ => panic!("defect kinds differ"),
                }
            }
        }
    }
}

#[test]
fn tp_axioms_imply_the_derived_identities() {
    let mut rng = common::rng(11);
    let mut found = 0;
    for i in 0..400u64 {
        let n = 1 + (i % 3) as usize;
        let a = common::random_algebra(&mut rng, f3(), n, i % 2 == 0, 0.25);
        if !identities::is_tp(&a) {
            continue;
        }
        found += 1;
        for id in IdentityId::DERIVED.iter().chain(&IdentityId::OPERATOR_RELATIONS) {
            assert!(identities::check(&a, *id).passed(), "seed index {i}: {id}");
        }
        assert!(identities::check(&kantor::kantor_double(&a), IdentityId::JordanSuper).passed(), "seed index {i}");
        assert!(halfderiv::scalar_half_derivations_check(&a).unwrap());
    }
    assert!(found > 20, "only {found} random TP algebras");
}

#[test]
fn catalog_structure_theorems() {
    let opts = SimplicityOptions::default();
    for a in all_catalog().into_iter().filter(identities::is_tp) {
        let kantor = kantor::kantor_double(&a);
        assert!(identities::check(&kantor, IdentityId::JordanSuper).passed(), "{}", a.name());
        assert!(kantor.validate().is_ok());
        if a.field().is_finite() {
            let tp = structure::is_simple(&a, None, Search::Exhaustive, &opts).unwrap().verdict;
            if tp.is_simple() {
                if a.has_product(Product::Bracket) {
                    let br = structure::is_simple(&a, Some(Product::Bracket), Search::Exhaustive, &opts).unwrap();
                    assert!(br.verdict.is_simple(), "{}", a.name());
                }
                assert!(structure::find_proper_closure(&a, IdealKind::TransposedQuasi, opts.bound).unwrap().is_none());
                if structure::product_span(&a, Product::Circ).is_full() {
                    assert!(structure::find_proper_closure(&a, IdealKind::Quasi, opts.bound).unwrap().is_none());
                }
            }
            let perfect = structure::product_span(&a, Product::Circ).is_full();
            if !perfect || !tp.is_simple() {
                let d = structure::is_simple(&kantor, Some(Product::Circ), Search::Exhaustive, &opts).unwrap();
                let w = d.verdict.witness().expect("explicit witness");
                assert!(structure::is_ideal(&kantor, w, IdealKind::Circ), "{}", a.name());
            }
        } else if !a.is_graded() {
            let r = structure::radical(&a).unwrap();
            assert!(structure::product_span(&a, Product::Circ).is_subspace_of(&r).unwrap(), "{}", a.name());
            assert!(structure::is_closed(&a, &r, IdealKind::Bracket));
            let rs = structure::derived_series_of(&a, &r);
            assert!(rs.last().unwrap().is_zero(), "{}", a.name());
            for ri in &rs {
                assert!(structure::is_closed(&a, ri, IdealKind::Tp), "{}", a.name());
            }
            let s = structure::series(&a);
            if s.perfect_circ {
                assert!(s.solvable(), "{}", a.name());
            }
        }
    }
    let p = catalog::tp_sl2_gf3(1, 0).unwrap();
    assert!(structure::is_quasi_ideal(&p, &Subspace::coordinate(f3(), 3, &[1])));
}

#[test]
fn radical_quotients_match_hand_computation() {
    // semisimple parts: sl2 has dimension 3, the others none
    let q = FieldSpec::Rationals;
    for (a, semisimple) in [
        (catalog::sl2(q), 3),
        (catalog::solvable3_q(), 0),
        (catalog::radical_demo_q(), 3),
        (catalog::nonlie_remark_q(), 0),
        (catalog::witt_trunc3_q(), 0),
    ] {
        let r = structure::radical(&a).unwrap();
        assert_eq!(a.dim() - r.dim(), semisimple, "{}", a.name());
    }
}
