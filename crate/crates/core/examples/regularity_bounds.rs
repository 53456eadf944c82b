//! Bound checks on single ideals, including the exceptional `l·H` shape.
//!
//! `cargo run --example regularity_bounds`

use liaison::ideals::Ideal;
use liaison::verify::{check_ideal, niu_bound, CheckOptions, Claim};
use liaison::polyring::{CoefficientField, Ring};

fn main() {
    println!("bound for dim X = 2, degrees (3, 2): {}", niu_bound(2, &[3, 2], 2).unwrap());
    let cases = [
        (4, "twisted cubic", "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2"),
        (4, "(2,3) complete intersection", "x0^3 + x1^3 + x2^3 + x3^3, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2"),
        (3, "l·H", "(x0 + x1 + x2)*x0^2, (x0 + x1 + x2)*x1^2, (x0 + x1 + x2)*x2^2"),
    ];
    for (n, name, text) in cases {
        let ring = Ring::standard(CoefficientField::Rational, n);
        let i = Ideal::parse(&ring, text).unwrap();
        let report = check_ideal(name, &i, &Claim::ALL, &CheckOptions::default()).unwrap();
        println!("{name}: reg = {}, sigma = {}, dim X = {}", report.reg, report.sigma, report.dim_x);
        for c in &report.checks {
            println!("  {:<8} {:<5} {}", c.claim.to_string(), c.verdict.to_string(), c.detail);
        }
    }
}
