use super::*;
use crate::polyring::{CoefficientField, Ring};

fn ring(n: usize) -> crate::polyring::RingRef {
    Ring::standard(CoefficientField::Rational, n)
}

#[test]
fn bound_formulas() {
    assert_eq!(sigma(&[2, 2], 2).unwrap(), 2);
    assert_eq!(sigma(&[3, 2, 2], 3).unwrap(), 4);
    assert_eq!(sigma(&[7], 1).unwrap(), 6);
    assert!(sigma(&[2], 2).is_err());
    assert_eq!(niu_bound(1, &[2, 2], 2).unwrap(), BigInt::from(6));
    assert_eq!(niu_bound(2, &[3, 2], 2).unwrap(), BigInt::from(36));
    assert_eq!(niu_sharp_bound(2, &[3, 2], 2).unwrap(), BigInt::from(24));
    assert!(niu_bound(0, &[2, 2], 2).is_err());
    assert_eq!(bel_bound(&[2, 2], 2).unwrap(), 2);
    assert_eq!(bel_bound(&[3, 2, 2], 3).unwrap(), 4);
    assert_eq!(niu_bound(20, &[2], 1).unwrap(), factorial(22) / 2);
}

#[test]
fn claims_parse() {
    assert_eq!("niu11".parse::<Claim>().unwrap(), Claim::Niu11);
    assert_eq!("LINKDEG".parse::<Claim>().unwrap(), Claim::LinkDeg);
    assert!("nope".parse::<Claim>().is_err());
}

#[test]
fn twisted_cubic_report() {
    let i = Ideal::parse(&ring(4), "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let r = check_ideal("twisted_cubic", &i, &Claim::ALL, &CheckOptions::default()).unwrap();
    assert_eq!(r.reg, 1);
    assert_eq!(r.dim_x, 1);
    assert_eq!(r.niu_bound, Some(BigInt::from(6)));
    assert!(!r.gorenstein);
    assert_eq!(r.check(Claim::Niu11).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check(Claim::Niu11).unwrap().detail, "reg=1 bound=6");
    assert_eq!(r.check(Claim::Niu).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check(Claim::LinkDeg).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check(Claim::Omega).unwrap().verdict, Verdict::Skipped);
    assert_eq!(r.check(Claim::Exc).unwrap().verdict, Verdict::Skipped);
    assert_eq!(r.violations(), 0);
}

#[test]
fn exceptional_product() {
    let i = Ideal::parse(&ring(3), "(x0 + x1 + x2)*x0^2, (x0 + x1 + x2)*x1^2, (x0 + x1 + x2)*x2^2").unwrap();
    let r = check_ideal("lH", &i, &Claim::ALL, &CheckOptions::default()).unwrap();
    assert!(r.exceptional_case);
    assert_eq!(r.reg, 4);
    assert_eq!(r.check(Claim::Exc).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check(Claim::Niu).unwrap().verdict, Verdict::Skipped);
    assert_eq!(r.check(Claim::Niu11).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.reg_saturation, Some(0));
}

#[test]
fn complete_intersection_is_sharp() {
    let i = Ideal::parse(&ring(4), "x0^3 + x1^3 + x2^3 + x3^3, x0^2 + x1^2 + x2^2 + x3^2").unwrap();
    let r = check_ideal("ci", &i, &[Claim::Bel, Claim::Omega, Claim::Niu], &CheckOptions::default()).unwrap();
    assert_eq!(r.reg, 3);
    assert_eq!(r.reg_saturation, Some(3));
    assert_eq!(r.bel_bound, 3);
    assert!(r.complete_intersection && r.gorenstein);
    assert!(r.check(Claim::Bel).unwrap().detail.ends_with("(equality)"));
    assert_eq!(r.check(Claim::Omega).unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check(Claim::Niu).unwrap().verdict, Verdict::Skipped);
}

#[test]
fn points_skip_dimension_gated_claims() {
    let i = Ideal::parse(&ring(3), "x0^2, x1^2, x0*x2").unwrap();
    let r = check_ideal("points", &i, &[Claim::Niu, Claim::Niu11], &CheckOptions::default()).unwrap();
    assert_eq!(r.dim_x, 0);
    assert!(r.niu_bound.is_none());
    assert!(r.checks.iter().all(|c| c.verdict == Verdict::Skipped));
}

#[test]
fn report_round_trip() {
    let i = Ideal::parse(&ring(4), "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let r = check_ideal("twisted_cubic", &i, &[Claim::Niu11, Claim::Bel], &CheckOptions::default()).unwrap();
    let text = r.to_json();
    let back = BoundReport::from_json(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.to_json(), text);
    assert!(!text.contains("timings"));
    let tampered = text.replace("\"sigma\": 2", "\"sigma\": 3");
    assert!(BoundReport::from_json(&tampered).is_err());
}

#[test]
fn huge_bounds_serialize_as_numbers() {
    let i = Ideal::parse(&ring(3), "x0").unwrap();
    let mut r = check_ideal("line", &i, &[Claim::Niu11], &CheckOptions::default()).unwrap();
    r.niu_bound = Some(factorial(40));
    let text = r.to_json();
    assert!(text.contains(&format!("\"niu_bound\": {}", factorial(40))));
    assert_eq!(BoundReport::from_json(&text).unwrap().to_json(), text);
}

#[test]
fn link_module_identity() {
    let i = Ideal::parse(&ring(4), "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let (lhs, rhs) = link_module_hilbert(&i, 3, 10).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn suite_selection() {
    let cfg = SuiteConfig { families: vec![], ..SuiteConfig::default() };
    assert!(run_suite(&cfg).unwrap().reports.is_empty());
    assert_eq!("c".parse::<Family>().unwrap(), Family::Exceptional);
    assert_eq!("cone".parse::<Family>().unwrap(), Family::Cone);
}
