//! A seeded generic link of the twisted cubic and its JSON report.
//!
//! `cargo run --example generic_link -- [seed]`

use liaison::ideals::Ideal;
use liaison::linkage::{graded_generic_link, max_generator_degree, LinkOptions};
use liaison::polyring::{CoefficientField, Ring};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let ring = Ring::standard(CoefficientField::Rational, 4);
    let cubic = Ideal::parse(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let link = graded_generic_link(&cubic, seed, &LinkOptions::default()).unwrap();
    println!(
        "sigma = {}, max generator degree of J = {}",
        link.sigma().unwrap(),
        max_generator_degree(&link.j).unwrap()
    );
    let back = Ideal::new(&ring, link.alpha.clone()).colon(&link.j).unwrap();
    println!("[α : J] = I: {}", back.same_ideal(&cubic).unwrap());
    println!("{}", serde_json::to_string_pretty(&link.report().unwrap()).unwrap());
}
