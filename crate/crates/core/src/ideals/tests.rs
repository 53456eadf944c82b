use proptest::prelude::*;

use super::*;
use crate::polyring::{CoefficientField, Ring};

fn xyz() -> RingRef {
    Ring::graded(CoefficientField::Rational, &["x", "y", "z"]).unwrap()
}

fn xy() -> RingRef {
    Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap()
}

fn ideal(r: &RingRef, text: &str) -> Ideal {
    Ideal::parse(r, text).unwrap()
}

fn twisted_cubic() -> Ideal {
    let r = Ring::standard(CoefficientField::Rational, 4);
    ideal(&r, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2")
}

#[test]
fn sum_and_product() {
    let r = xy();
    let s = ideal(&r, "x").sum(&ideal(&r, "y"));
    assert!(s.same_ideal(&ideal(&r, "x, y")).unwrap());
    let i = ideal(&r, "x^2, y");
    assert!(i.sum(&Ideal::zero(&r)).same_ideal(&i).unwrap());
    let r3 = Ring::standard(CoefficientField::Rational, 3);
    let l = ideal(&r3, "x0 + x1 + x2");
    let h = ideal(&r3, "x0^2, x1^2, x2^2");
    let p = l.product(&h);
    assert_eq!(p.generators().len(), 3);
    assert_eq!(p.generators()[0], l.generators()[0].mul(&h.generators()[0]));
}

#[test]
fn intersections() {
    let r = xy();
    let meet = ideal(&r, "x").intersection(&ideal(&r, "y")).unwrap();
    assert!(meet.same_ideal(&ideal(&r, "x*y")).unwrap());
    let i = ideal(&r, "x^2 + y^2, x*y");
    assert!(i.intersection(&i).unwrap().same_ideal(&i).unwrap());
    let c = ideal(&r, "x").intersection(&ideal(&r, "x, y")).unwrap();
    assert!(c.same_ideal(&ideal(&r, "x")).unwrap());
}

#[test]
fn colons() {
    let r = xy();
    let q = ideal(&r, "x^2, x*y").colon(&ideal(&r, "x")).unwrap();
    assert!(q.same_ideal(&ideal(&r, "x, y")).unwrap());
    let i = ideal(&r, "x^2 - y, x*y^2");
    assert!(i.colon(&Ideal::unit(&r)).unwrap().same_ideal(&i).unwrap());
    let q = ideal(&r, "x*y").colon(&ideal(&r, "x")).unwrap();
    assert!(q.same_ideal(&ideal(&r, "y")).unwrap());
}

#[test]
fn saturations() {
    let r = xy();
    let m = Ideal::maximal(&r);
    let s = ideal(&r, "x^2, x*y").saturation(&m).unwrap();
    assert!(s.same_ideal(&ideal(&r, "x")).unwrap());
    assert!(s.saturation(&m).unwrap().same_ideal(&s).unwrap());
    let t = ideal(&r, "x").saturation(&ideal(&r, "y")).unwrap();
    assert!(t.same_ideal(&ideal(&r, "x")).unwrap());
}

#[test]
fn elimination() {
    let r = Ring::affine(CoefficientField::Rational, &["t", "x", "y"]).unwrap();
    let e = eliminate(&ideal(&r, "t*x - 1, y"), &[0]).unwrap();
    assert!(e.same_ideal(&ideal(&r, "y")).unwrap());
    let i = ideal(&r, "x^2 - y");
    assert!(eliminate(&i, &[]).unwrap().same_ideal(&i).unwrap());
    assert!(eliminate(&ideal(&r, "t - x"), &[0]).unwrap().is_zero());
}

#[test]
fn dimensions() {
    let r = xyz();
    let i = ideal(&r, "x");
    assert_eq!(i.krull_dimension().unwrap(), 2);
    assert_eq!(i.codimension().unwrap(), 1);
    assert_eq!(twisted_cubic().codimension().unwrap(), 2);
    assert_eq!(ideal(&r, "x, y, z").krull_dimension().unwrap(), 0);
    assert_eq!(Ideal::unit(&r).codimension(), Err(Error::UnitIdeal));
    assert_eq!(Ideal::zero(&r).krull_dimension().unwrap(), 3);
}

#[test]
fn hilbert_series_examples() {
    let r = Ring::standard(CoefficientField::Rational, 4);
    assert_eq!(Ideal::zero(&r).hilbert_series().unwrap().numerator_coefficients().unwrap(), vec![1]);
    let p = ideal(&r, "x0^3 + x1^3 - x2*x3^2");
    assert_eq!(p.hilbert_series().unwrap().numerator_coefficients().unwrap(), vec![1, 0, 0, -1]);
    let hs = twisted_cubic().hilbert_series().unwrap();
    assert_eq!(hs.numerator_coefficients().unwrap(), vec![1, 0, -3, 2]);
    assert_eq!(hs.to_string(), "1 - 3t^2 + 2t^3");
    assert!(matches!(ideal(&r, "x0^2 + x1").hilbert_series(), Err(Error::NotHomogeneous(_))));
}

#[test]
fn minimal_generators_drop_redundant_ones() {
    let r = xyz();
    let i = ideal(&r, "x*y, x^2, x^2*y + x*y^2, y*z, x*y*z");
    let mg = i.minimal_generators().unwrap();
    assert_eq!(mg.len(), 3);
    assert!(Ideal::new(&r, mg).same_ideal(&i).unwrap());
    assert_eq!(i.generator_degrees().unwrap(), vec![2, 2, 2]);
}

#[test]
fn prime_field_intersection() {
    let r = Ring::graded(CoefficientField::prime(32003).unwrap(), &["x", "y"]).unwrap();
    let meet = ideal(&r, "x^2, y").intersection(&ideal(&r, "x, y^2")).unwrap();
    assert!(meet.same_ideal(&ideal(&r, "x^2, x*y, y^2")).unwrap());
}

fn monomial_strategy(n: usize, max_exp: u16) -> impl Strategy<Value = Vec<u16>> {
    proptest::collection::vec(0..=max_exp, n)
}

fn monomial_ideal(r: &RingRef, exps: &[Vec<u16>]) -> Ideal {
    let gens = exps
        .iter()
        .map(|e| Polynomial::term(r, r.field().one(), Monomial::from_exponents(e)))
        .collect();
    Ideal::new(r, gens)
}

/// Small homogeneous binomials `m1 - c·m2` of one degree.
fn binomial_strategy() -> impl Strategy<Value = (Vec<u16>, Vec<u16>, i64)> {
    (monomial_strategy(3, 3), monomial_strategy(3, 3), -3i64..=3).prop_filter("same degree", |(a, b, _)| {
        a.iter().map(|&e| e as u32).sum::<u32>() == b.iter().map(|&e| e as u32).sum::<u32>()
    })
}

fn binomial_ideal(r: &RingRef, data: &[(Vec<u16>, Vec<u16>, i64)]) -> Ideal {
    let f = r.field();
    let gens = data
        .iter()
        .map(|(a, b, c)| {
            Polynomial::from_terms(
                r,
                vec![(f.one(), Monomial::from_exponents(a)), (f.from_i64(-c), Monomial::from_exponents(b))],
            )
        })
        .collect();
    Ideal::new(r, gens)
}

/// Brute-force `g^k ∈ I` for some `k ≤ 6` on monomial ideals.
fn in_radical(i: &Ideal, g: &Polynomial) -> bool {
    (1..=6).any(|k| i.contains(&g.pow(k)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn colon_contains_ideal_and_saturation_is_unit_iff_radical(
        a in proptest::collection::vec(monomial_strategy(3, 3), 1..4),
        b in proptest::collection::vec(monomial_strategy(3, 2), 1..3),
    ) {
        let r = xyz();
        let i = monomial_ideal(&r, &a);
        let j = monomial_ideal(&r, &b);
        let q = i.colon(&j).unwrap();
        prop_assert!(i.is_subset_of(&q).unwrap());
        prop_assert_eq!(q.is_unit().unwrap(), j.is_subset_of(&i).unwrap());
        let radical = j.generators().iter().all(|g| in_radical(&i, g));
        prop_assert_eq!(i.saturation(&j).unwrap().is_unit().unwrap(), radical);
    }

    #[test]
    fn intersection_and_sum_containments(
        a in proptest::collection::vec(binomial_strategy(), 1..3),
        b in proptest::collection::vec(binomial_strategy(), 1..3),
    ) {
        let r = xyz();
        let i = binomial_ideal(&r, &a);
        let j = binomial_ideal(&r, &b);
        let meet = i.intersection(&j).unwrap();
        prop_assert!(meet.is_subset_of(&i).unwrap());
        prop_assert!(meet.is_subset_of(&j).unwrap());
        let s = i.sum(&j);
        prop_assert!(i.is_subset_of(&s).unwrap());
        prop_assert!(j.is_subset_of(&s).unwrap());
        for g in i.generators() {
            for h in j.generators() {
                prop_assert!(meet.contains(&g.mul(h)).unwrap());
            }
        }
    }

    #[test]
    fn hilbert_function_counts_standard_monomials(
        a in proptest::collection::vec(binomial_strategy(), 1..4),
        monomial in any::<bool>(),
    ) {
        let r = xyz();
        let i = if monomial {
            monomial_ideal(&r, &a.iter().map(|x| x.0.clone()).collect::<Vec<_>>())
        } else {
            binomial_ideal(&r, &a)
        };
        if i.is_unit().unwrap() {
            return Ok(());
        }
        let hs = i.hilbert_series().unwrap();
        let lead = i.groebner_basis().unwrap().leading_monomials();
        for d in 0..=10u32 {
            let count = r.monomials_of_degree(d).iter().filter(|m| !lead.iter().any(|l| l.divides(m))).count();
            prop_assert_eq!(hs.hilbert_function(d as i64), count as i64);
        }
    }

    #[test]
    fn dimension_plus_codimension(a in proptest::collection::vec(binomial_strategy(), 1..4)) {
        let r = xyz();
        let i = binomial_ideal(&r, &a);
        if i.is_unit().unwrap() {
            return Ok(());
        }
        let d = i.krull_dimension().unwrap();
        prop_assert_eq!(d + i.codimension().unwrap(), 3);
        if let Some((hd, _)) = i.hilbert_series().unwrap().reduced() {
            prop_assert_eq!(hd, d);
        }
    }

    #[test]
    fn saturation_is_idempotent(a in proptest::collection::vec(monomial_strategy(3, 3), 1..4)) {
        let r = xyz();
        let i = monomial_ideal(&r, &a);
        let m = Ideal::maximal(&r);
        let s = i.saturation(&m).unwrap();
        prop_assert!(s.saturation(&m).unwrap().same_ideal(&s).unwrap());
        prop_assert!(i.is_subset_of(&s).unwrap());
    }
}
