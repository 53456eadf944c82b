use super::*;
use crate::polyring::{CoefficientField, Ring};

fn ring(n: usize) -> RingRef {
    Ring::standard(CoefficientField::Rational, n)
}

fn ideal(r: &RingRef, text: &str) -> Ideal {
    Ideal::parse(r, text).unwrap()
}

fn twisted_cubic() -> Ideal {
    ideal(&ring(4), "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2")
}

#[test]
fn koszul_syzygy() {
    let r = ring(2);
    let m = ModuleMap::from_generators(&r, &crate::polyring::parse_polynomials("x0, x1", &r).unwrap()).unwrap();
    let s = syzygies(&m).unwrap();
    assert_eq!(s.source().twists(), &[2]);
    assert!(m.compose(&s).is_zero());
    let col = s.column(0);
    assert!(!col[0].is_constant() && col[0].degree() == Some(1));
    assert!(syzygies(&s).unwrap().source().rank() == 0);
}

#[test]
fn syzygies_of_non_regular_pair() {
    let r = ring(2);
    let m = ModuleMap::from_generators(&r, &crate::polyring::parse_polynomials("x0^2, x0*x1", &r).unwrap()).unwrap();
    let s = syzygies(&m).unwrap();
    assert_eq!(s.source().twists(), &[3]);
    let expected = crate::polyring::parse_polynomials("-x1, x0", &r).unwrap();
    let col = s.column(0);
    assert!(col == expected || col == expected.iter().map(|p| p.neg()).collect::<Vec<_>>());
}

#[test]
fn principal_resolution() {
    let r = ring(3);
    let res = minimal_free_resolution(&ideal(&r, "x0")).unwrap();
    let bt = res.betti_table();
    assert_eq!(bt.get(0, 0), 1);
    assert_eq!(bt.get(1, 1), 1);
    assert_eq!(bt.regularity(), Some(0));
    let q = minimal_free_resolution(&ideal(&r, "x0^2 + x1*x2")).unwrap();
    assert_eq!(q.betti_table().regularity(), Some(1));
}

#[test]
fn complete_intersection_is_koszul() {
    let r = ring(4);
    let res = minimal_free_resolution(&ideal(&r, "x0^2 + x1^2 + x2^2 + x3^2, x0^3 + 2*x1^3 + 3*x2^3 + 4*x3^3")).unwrap();
    let bt = res.betti_table();
    assert_eq!(bt.get(1, 2), 1);
    assert_eq!(bt.get(1, 3), 1);
    assert_eq!(bt.get(2, 5), 1);
    assert_eq!(res.length(), 2);
    assert_eq!(bt.regularity(), Some(3));
}

#[test]
fn twisted_cubic_resolution() {
    let i = twisted_cubic();
    let res = minimal_free_resolution(&i).unwrap();
    let bt = res.betti_table();
    assert_eq!(bt, BettiTable::from_entries([((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]));
    assert_eq!(bt.regularity(), Some(1));
    assert!(res.is_complex() && res.is_minimal());
    assert_eq!(res.euler_characteristic(), i.hilbert_series().unwrap());
    assert_eq!(bt.to_text(), "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
    let json = serde_json::to_string(&bt).unwrap();
    assert_eq!(json, r#"{"0,0":1,"1,2":3,"2,3":2}"#);
    assert_eq!(serde_json::from_str::<BettiTable>(&json).unwrap(), bt);
}

#[test]
fn unit_and_inhomogeneous_inputs() {
    let r = ring(2);
    assert_eq!(minimal_free_resolution(&Ideal::unit(&r)), Err(Error::UnitIdeal));
    assert!(matches!(minimal_free_resolution(&ideal(&r, "x0^2 + x1")), Err(Error::NotHomogeneous(_))));
    assert!(BettiTable::default().regularity().is_none());
}

#[test]
fn lifting() {
    let r = ring(2);
    let m = ModuleMap::from_generators(&r, &crate::polyring::parse_polynomials("x0, x1", &r).unwrap()).unwrap();
    let v = crate::polyring::parse_polynomials("x0^2 + 3*x0*x1", &r).unwrap();
    let x = lift(&m, &v).unwrap().unwrap();
    assert_eq!(m.compose(&ModuleMap::new_unchecked(&r, GradedFreeModule::new(vec![2]), m.source().clone(), x.into_iter().map(|p| vec![p]).collect())).column(0), v);
    let w = crate::polyring::parse_polynomials("1", &r).unwrap();
    assert!(lift(&m, &w).unwrap().is_none());
}

#[test]
fn canonical_module_of_plane_curves() {
    let r = ring(3);
    for (text, d) in [("x0^3 + x1^3 + x2^3", 3i64), ("x0^4 + x1^4 + x2^4", 4), ("x0^2 + x1^2 + x2^2", 2)] {
        let w = canonical_module(&ideal(&r, text), 1).unwrap();
        assert_eq!(w.target().twists(), &[3 - d]);
        assert_eq!(w.source().twists(), &[3]);
    }
    let cubic = canonical_module(&ideal(&r, "x0^3 + x1^3 + x2^3"), 1).unwrap();
    assert_eq!(module_regularity(&cubic).unwrap(), Some(2));
}

#[test]
fn canonical_module_of_complete_intersection_curve() {
    let r = ring(4);
    let i = ideal(&r, "x0^2 + x1^2 + x2^2 + x3^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2");
    let w = canonical_module(&i, 2).unwrap();
    assert_eq!(w.target().twists(), &[0]);
    assert_eq!(module_regularity(&w).unwrap(), Some(2));
    assert!(matches!(canonical_module(&i, 3), Err(Error::ExtOutOfRange { index: 3, length: 2 })));
}

#[test]
fn ext_below_the_top_is_zero_for_cohen_macaulay() {
    let res = minimal_free_resolution(&twisted_cubic()).unwrap();
    let e1 = ext_module(&res, 1).unwrap();
    assert_eq!(e1.target().rank(), 0);
    let e0 = ext_module(&res, 0).unwrap();
    assert_eq!(e0.target().rank(), 0);
}

#[test]
fn twisted_cubic_canonical_module() {
    let i = twisted_cubic();
    let w = canonical_module(&i, 2).unwrap();
    let res = resolve_cokernel(&w).unwrap();
    assert_eq!(res.betti_table(), BettiTable::from_entries([((0, 1), 2), ((1, 2), 3), ((2, 4), 1)]));
    assert_eq!(res.betti_table().regularity(), Some(2));
    let hs = module_hilbert_series(&w).unwrap();
    assert_eq!(res.euler_characteristic(), hs);
}

#[test]
fn dualizing_twice_recovers_betti_numbers() {
    let r = ring(4);
    let i = ideal(&r, "x0^2 + x1^2 + x2^2 + x3^2, x0^3 + 2*x1^3 + 3*x2^3 + 4*x3^3");
    let res = minimal_free_resolution(&i).unwrap();
    let ext = ext_module(&res, 2).unwrap();
    let back = resolve_cokernel(&ext).unwrap();
    let p = back.length();
    let dual_twists: Vec<Vec<i64>> = (0..=p).rev().map(|k| back.module(k).dual().twists().to_vec()).collect();
    let shift = -dual_twists[0][0];
    let shifted: Vec<Vec<i64>> = dual_twists.into_iter().map(|t| t.into_iter().map(|a| a + shift).collect()).collect();
    assert_eq!(BettiTable::from_modules(shifted), res.betti_table());
}

#[test]
fn prune_cancels_units() {
    let r = ring(2);
    let one = Polynomial::one(&r);
    let xy = crate::polyring::parse_polynomial("x0*x1", &r).unwrap();
    let y = Polynomial::variable(&r, 1);
    // the image contains e0, so the cokernel is R(-1)/(x1)
    let pres = ModuleMap::new(
        &r,
        GradedFreeModule::new(vec![0, 2]),
        GradedFreeModule::new(vec![0, 1]),
        vec![vec![one, xy], vec![Polynomial::zero(&r), y]],
    )
    .unwrap();
    let res = resolve_cokernel(&pres).unwrap();
    assert_eq!(res.betti_table(), BettiTable::from_entries([((0, 1), 1), ((1, 2), 1)]));
    assert!(res.is_minimal());
}

mod properties {
    use super::*;
    use crate::polyring::Monomial;
    use proptest::prelude::*;

    fn binomial() -> impl Strategy<Value = (Vec<u16>, Vec<u16>, i64)> {
        let mono = || proptest::collection::vec(0u16..=3, 3);
        (mono(), mono(), -2i64..=2).prop_filter("same degree, nonconstant", |(a, b, _)| {
            let (da, db): (u32, u32) = (a.iter().map(|&e| e as u32).sum(), b.iter().map(|&e| e as u32).sum());
            da == db && da > 0
        })
    }

    fn build(r: &RingRef, data: &[(Vec<u16>, Vec<u16>, i64)]) -> Ideal {
        let f = r.field();
        let gens = data
            .iter()
            .map(|(a, b, c)| {
                Polynomial::from_terms(
                    r,
                    vec![(f.one(), Monomial::from_exponents(a)), (f.from_i64(*c), Monomial::from_exponents(b))],
                )
            })
            .collect();
        Ideal::new(r, gens)
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

        #[test]
        fn resolutions_are_exact_minimal_complexes(data in proptest::collection::vec(binomial(), 1..5)) {
            let r = ring(3);
            let i = build(&r, &data);
            if i.is_zero() || i.is_unit().unwrap() {
                return Ok(());
            }
            let res = minimal_free_resolution(&i).unwrap();
            prop_assert!(res.is_complex());
            prop_assert!(res.is_minimal());
            prop_assert!(res.length() <= r.nvars());
            prop_assert_eq!(res.euler_characteristic(), i.hilbert_series().unwrap());
        }

        #[test]
        fn complete_intersection_regularity(d in proptest::collection::vec(1u32..=4, 1..4)) {
            let r = ring(4);
            let gens: Vec<Polynomial> = d
                .iter()
                .enumerate()
                .map(|(k, &e)| {
                    let text = format!("x{k}^{e} + x3^{e}");
                    crate::polyring::parse_polynomial(&text, &r).unwrap()
                })
                .collect();
            let i = Ideal::new(&r, gens);
            let res = minimal_free_resolution(&i).unwrap();
            prop_assert_eq!(res.length(), d.len());
            let expected: i64 = d.iter().map(|&e| e as i64 - 1).sum();
            prop_assert_eq!(res.betti_table().regularity(), Some(expected));
        }
    }
}
