use proptest::prelude::*;

use liaison::ideals::Ideal;
use liaison::linkage::{graded_generic_link, max_generator_degree, LinkOptions};
use liaison::polyring::{CoefficientField, Ring};

fn suite_ideal(k: usize) -> Ideal {
    let cases = [
        (4, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2"),
        (5, "x0*x2 - x1^2, x0*x3 - x1*x2, x0*x4 - x2^2, x1*x3 - x2^2, x1*x4 - x2*x3, x2*x4 - x3^2"),
        (3, "(x0 + x1 + x2)*x0^2, (x0 + x1 + x2)*x1^2, (x0 + x1 + x2)*x2^2"),
        (4, "x0^3 + x1^3 + x2^3 + x3^3, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2"),
    ];
    let (n, text) = cases[k];
    Ideal::parse(&Ring::standard(CoefficientField::Rational, n), text).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn containments_and_grading(k in 0usize..4, seed in any::<u64>()) {
        let i = suite_ideal(k);
        let link = graded_generic_link(&i, seed, &LinkOptions::default()).unwrap();
        let ring = i.ring();
        let alpha = Ideal::new(ring, link.alpha.clone());
        prop_assert!(alpha.is_subset_of(&i).unwrap());
        prop_assert!(alpha.is_subset_of(&link.j).unwrap());
        let lowest = link.ideal.generators().last().unwrap().clone();
        let upper = alpha.colon(&Ideal::new(ring, vec![lowest])).unwrap();
        prop_assert!(link.j.is_subset_of(&upper).unwrap());
        for (a, d) in link.alpha.iter().zip(&link.degrees) {
            prop_assert!(a.is_homogeneous().unwrap());
            prop_assert_eq!(a.degree(), Some(*d));
        }
        for (row, d_i) in link.matrix.entries.iter().zip(&link.degrees).skip(link.codim) {
            for (e, d_j) in row.iter().zip(&link.degrees) {
                if d_j < d_i {
                    prop_assert!(e.is_zero());
                } else if !e.is_zero() {
                    prop_assert_eq!(e.degree(), Some(d_j - d_i));
                }
            }
        }
        if !link.degenerate {
            prop_assert_eq!(link.genericity.codim_z, Some(link.codim + 1));
        }
    }

    #[test]
    fn determinism(k in 0usize..4, seed in any::<u64>()) {
        let i = suite_ideal(k);
        let a = graded_generic_link(&i, seed, &LinkOptions::default()).unwrap();
        let b = graded_generic_link(&i, seed, &LinkOptions::default()).unwrap();
        prop_assert_eq!(a.report().unwrap(), b.report().unwrap());
    }
}

#[test]
fn generator_degrees_stay_below_sigma() {
    for k in [0usize, 1, 3] {
        let i = suite_ideal(k);
        for seed in 0..5u64 {
            let link = graded_generic_link(&i, seed, &LinkOptions::default()).unwrap();
            let sigma = link.sigma().unwrap();
            assert!(max_generator_degree(&link.j).unwrap() <= sigma);
        }
    }
}

#[test]
fn prime_field_links() {
    let ring = Ring::standard(CoefficientField::prime(32003).unwrap(), 4);
    let i = Ideal::parse(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let link = graded_generic_link(&i, 11, &LinkOptions::default()).unwrap();
    assert_eq!(link.genericity.codim_j, Some(2));
    let back = Ideal::new(&ring, link.alpha.clone()).colon(&link.j).unwrap();
    assert!(back.same_ideal(&i).unwrap());
}
