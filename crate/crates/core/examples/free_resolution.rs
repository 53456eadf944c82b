//! Minimal graded free resolution, Betti table and regularity.
//!
//! `cargo run --example free_resolution`

use liaison::ideals::Ideal;
use liaison::polyring::{CoefficientField, Ring};
use liaison::resolution::minimal_free_resolution;

fn main() {
    let ring = Ring::standard(CoefficientField::Rational, 5);
    let quartic = Ideal::parse(
        &ring,
        "x0*x2 - x1^2, x0*x3 - x1*x2, x0*x4 - x2^2, x1*x3 - x2^2, x1*x4 - x2*x3, x2*x4 - x3^2",
    )
    .unwrap();
    let res = minimal_free_resolution(&quartic).unwrap();
    for (i, m) in res.modules().iter().enumerate() {
        println!("F{i}: twists {:?}", m.twists());
    }
    let table = res.betti_table();
    print!("{}", table.to_text());
    println!("reg R/I = {}", table.regularity().unwrap());
    println!("complex: {}, minimal: {}", res.is_complex(), res.is_minimal());
}
