mod common;

use common::*;
use gamma_depth_core::*;
use proptest::prelude::*;

fn r2() -> Ring {
    Ring::new(2)
}

fn ideal(r: Ring, gens: &[&str]) -> Submodule {
    Submodule::ideal(r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
}

fn elem(u: &Submodule, s: &str) -> FreeElement {
    u.ambient().parse_element(s).unwrap()
}

#[test]
fn gb_of_staircase_ideal_is_itself() {
    let u = ideal(r2(), &["x1^2", "x1x2", "x2^3"]);
    let gb = u.groebner_basis();
    assert!(gb.same_as(&u));
    let mut lts: Vec<String> = u.leading_terms().iter().map(|(_, m)| format!("{:?}", m.exponents())).collect();
    lts.sort();
    assert_eq!(lts, vec!["[0, 3]", "[1, 1]", "[2, 0]"]);
}

#[test]
fn gb_of_principal_ideal() {
    let r = Ring::new(1);
    let u = ideal(r, &["x1"]);
    assert_eq!(u.groebner_basis().generators().len(), 1);
}

#[test]
fn gb_of_full_module_has_unit_leads() {
    let f = GradedFreeModule::new(r2(), vec![0, 1]);
    let gens = vec![
        f.parse_element("[1 | 0]").unwrap(),
        f.parse_element("[x1 | 1]").unwrap(),
        f.parse_element("[x2 | 1]").unwrap(),
    ];
    let u = Submodule::new(f, gens).unwrap();
    assert!(u.is_full());
    assert!(u.leading_terms().iter().all(|(_, m)| m.is_one()));
    assert_eq!(u.leading_terms().len(), 2);
}

#[test]
fn normal_forms() {
    let u = ideal(r2(), &["x1^2", "x1x2", "x2^3"]);
    assert!(u.normal_form(&elem(&u, "[x1^2]")).unwrap().is_zero());
    assert_eq!(u.normal_form(&elem(&u, "[x2^2]")).unwrap(), elem(&u, "[x2^2]"));
    assert!(u.normal_form(&elem(&u, "[0]")).unwrap().is_zero());
    let wrong = GradedFreeModule::new(r2(), vec![0, 0]).parse_element("[x1 | x2]").unwrap();
    assert!(u.normal_form(&wrong).is_err());
}

#[test]
fn kernel_of_quadrics() {
    let r = r2();
    let target = PresentedModule::free(GradedFreeModule::ring_module(r));
    let src = GradedFreeModule::new(r, vec![2, 2, 2]);
    let f = target.free_module();
    let imgs: Vec<FreeElement> = ["[x1^2]", "[x1x2]", "[x2^2]"].iter().map(|s| f.parse_element(s).unwrap()).collect();
    let k = kernel_of_map(&src, &target, &imgs).unwrap();
    let expected = Submodule::new(
        src.clone(),
        vec![
            src.parse_element("[x2 | -x1 | 0]").unwrap(),
            src.parse_element("[0 | x2 | -x1]").unwrap(),
        ],
    )
    .unwrap();
    assert!(k.same_as(&expected));
    assert_eq!(k.num_minimal_generators(), 2);
    // rank-nullity on the degree 3 slice: dim F_3 = 3*2, image rank 4 (x^3,x^2y,xy^2,y^3)
    assert_eq!(k.dim_in_degree(3) as usize, 6 - 4);
    assert_eq!(dense_dim(&k, 3), 2);
}

#[test]
fn kernel_trivial_cases() {
    let r = r2();
    let target = PresentedModule::free(GradedFreeModule::ring_module(r));
    let src = GradedFreeModule::new(r, vec![1, 3]);
    let zero = target.free_module().zero();
    let k = kernel_of_map(&src, &target, &[zero.clone(), zero]).unwrap();
    assert!(k.is_full());
    let one = GradedFreeModule::new(r, vec![0]);
    let k = kernel_of_map(&one, &target, &[target.free_module().basis(0)]).unwrap();
    assert!(k.is_zero() || k.generators().iter().all(|g| g.is_zero()));
    let bad = kernel_of_map(&one, &target, &[target.free_module().parse_element("[x1]").unwrap()]);
    assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
}

#[test]
fn kernel_into_quotient() {
    // R(-1) -> R/(x1^2), e -> x1: kernel (x1)
    let r = r2();
    let target = PresentedModule::cyclic(r, vec![r.parse("x1^2").unwrap()]).unwrap();
    let src = GradedFreeModule::new(r, vec![1]);
    let img = target.free_module().parse_element("[x1]").unwrap();
    let k = kernel_of_map(&src, &target, &[img]).unwrap();
    let expected = Submodule::new(src.clone(), vec![src.parse_element("[x1]").unwrap()]).unwrap();
    assert!(k.same_as(&expected));
}

#[test]
fn colon_examples() {
    let r = r2();
    let u = ideal(r, &["x1^2", "x1x2", "x2^3"]);
    let y = LinearForm::parse(r, "x2").unwrap();
    let x = LinearForm::parse(r, "x1").unwrap();
    assert!(colon_by_linear(&u, &y).unwrap().same_as(&ideal(r, &["x1", "x2^2"])));
    assert!(colon_by_linear(&u, &x).unwrap().same_as(&ideal(r, &["x1", "x2"])));
    let full = Submodule::full(GradedFreeModule::ring_module(r));
    assert!(colon_by_linear(&full, &x).unwrap().is_full());
}

#[test]
fn colon_by_maximal_examples() {
    let r = r2();
    let u = ideal(r, &["x1^2", "x1x2", "x2^3"]);
    assert!(colon_by_maximal(&u).unwrap().same_as(&ideal(r, &["x1", "x2^2"])));
    let zero = Submodule::zero(GradedFreeModule::ring_module(r));
    assert!(colon_by_maximal(&zero).unwrap().is_zero() || colon_by_maximal(&zero).unwrap().generators().is_empty());
    let m = ideal(r, &["x1", "x2"]);
    assert!(colon_by_maximal(&m).unwrap().is_full());
}

#[test]
fn saturation_examples() {
    let r = r2();
    assert!(saturate(&ideal(r, &["x1^2", "x1x2", "x2^3"])).unwrap().is_full());
    assert!(saturate(&ideal(r, &["x1^2", "x1x2"])).unwrap().same_as(&ideal(r, &["x1"])));
    assert!(saturate(&ideal(r, &["x1"])).unwrap().same_as(&ideal(r, &["x1"])));
}

#[test]
fn hilbert_function_examples() {
    let r = r2();
    let m2 = PresentedModule::new(ideal(r, &["x1^2", "x1x2", "x2^2"]));
    let dims: Vec<u64> = (0..=3).map(|d| m2.hilbert_function(0, 3).get(d)).collect();
    assert_eq!(dims, vec![1, 2, 0, 0]);
    let free = PresentedModule::free(GradedFreeModule::ring_module(r));
    let dims: Vec<u64> = (0..=2).map(|d| free.hilbert_function(0, 2).get(d)).collect();
    assert_eq!(dims, vec![1, 2, 3]);
    let m = PresentedModule::new(ideal(r, &["x1^2", "x1x2", "x2^3"]));
    let dims: Vec<u64> = (0..=3).map(|d| m.hilbert_function(0, 3).get(d)).collect();
    assert_eq!(dims, vec![1, 2, 1, 0]);
    let h = m.hilbert_series();
    for d in 0..=6 {
        assert_eq!(h.dim_in_degree(d), m.hilbert_function(d, d).get(d) as i64);
    }
}

#[test]
fn twisted_module_colon() {
    // F = R(-1) + R(-2), U generated by [x1 | 0], [0 | x1 x2]
    let r = r2();
    let f = GradedFreeModule::new(r, vec![1, 2]);
    let u = Submodule::new(
        f.clone(),
        vec![f.parse_element("[x1 | 0]").unwrap(), f.parse_element("[x2^2 | x1]").unwrap()],
    )
    .unwrap();
    let z = LinearForm::parse(r, "x1 + 3x2").unwrap();
    let w = colon_by_linear(&u, &z).unwrap();
    for d in 0..6 {
        assert_eq!(w.dim_in_degree(d) as usize, dense_colon_dim(&u, &z.to_polynomial(), d), "degree {d}");
    }
    let wm = colon_by_maximal(&u).unwrap();
    for d in 0..6 {
        assert_eq!(wm.dim_in_degree(d) as usize, dense_colon_max_dim(&u, d), "degree {d}");
    }
}

fn random_submodule() -> impl Strategy<Value = Submodule> {
    (1usize..=3, 1usize..=2, any::<u64>()).prop_map(|(n, rank, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let r = Ring::new(n);
        let twists: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..2)).collect();
        let f = GradedFreeModule::new(r, twists.clone());
        let ngens = rng.gen_range(1..=4);
        let mut gens = Vec::new();
        for _ in 0..ngens {
            let d = rng.gen_range(2..=4) + 1;
            let comps: Vec<Polynomial> = twists
                .iter()
                .map(|&t| {
                    let e = (d - t) as u32;
                    let mut terms: Vec<(Monomial, u32)> = Vec::new();
                    for m in Monomial::all_of_degree(n, e) {
                        if rng.gen_bool(0.5) {
                            terms.push((m, rng.gen_range(1..r.characteristic())));
                        }
                    }
                    Polynomial::from_terms(r, terms)
                })
                .collect();
            gens.push(f.element(comps).unwrap());
        }
        Submodule::new(f, gens).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gb_dims_match_dense_ranks(u in random_submodule()) {
        for d in 0..=8 {
            prop_assert_eq!(u.dim_in_degree(d) as usize, dense_dim(&u, d));
        }
    }

    #[test]
    fn gb_is_idempotent_and_sound(u in random_submodule()) {
        let g = u.groebner_basis();
        let gg = g.groebner_basis();
        let mut a = g.leading_terms();
        let mut b = gg.leading_terms();
        a.sort_by(|x, y| (x.0, x.1.exponents()).cmp(&(y.0, y.1.exponents())));
        b.sort_by(|x, y| (x.0, x.1.exponents()).cmp(&(y.0, y.1.exponents())));
        prop_assert_eq!(a, b);
        for gen in u.generators() {
            prop_assert!(u.normal_form(gen).unwrap().is_zero());
        }
        prop_assert!(g.same_as(&u));
    }

    #[test]
    fn colon_and_saturation_are_monotone(u in random_submodule(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let z = LinearForm::random(*u.ring(), &mut rng);
        let c = colon_by_linear(&u, &z).unwrap();
        let s = saturate(&u).unwrap();
        prop_assert!(c.contains_submodule(&u));
        prop_assert!(s.contains_submodule(&c));
        prop_assert!(saturate(&s).unwrap().same_as(&s));
        for d in 0..6 {
            prop_assert_eq!(c.dim_in_degree(d) as usize, dense_colon_dim(&u, &z.to_polynomial(), d));
        }
    }

    #[test]
    fn hilbert_is_additive(u in random_submodule()) {
        let f = Submodule::zero(u.ambient().clone());
        let q = PresentedModule::new(u.clone());
        let fm = PresentedModule::new(f);
        let hq = q.hilbert_series();
        for d in 0..=8 {
            let total = fm.hilbert_function(d, d).get(d);
            prop_assert_eq!(total, u.dim_in_degree(d) + q.hilbert_function(d, d).get(d));
            prop_assert_eq!(hq.dim_in_degree(d), q.hilbert_function(d, d).get(d) as i64);
        }
    }
}
