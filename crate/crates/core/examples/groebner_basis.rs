//! Reduced Gröbner bases under grevlex and lex.
//!
//! `cargo run --example groebner_basis`

use liaison::groebner::{reduced_groebner_basis, GbOptions};
use liaison::polyring::{parse_polynomials, CoefficientField, MonomialOrder, Ring};

fn main() {
    let ring = Ring::graded(CoefficientField::Rational, &["x", "y", "z"]).unwrap();
    let gens = parse_polynomials("x^2 - y*z, x*y - z^2, y^2 - x*z", &ring).unwrap();
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let r = ring.with_order(order).unwrap();
        let gens: Vec<_> = gens.iter().map(|g| g.with_ring(&r)).collect();
        let gb = reduced_groebner_basis(&r, &gens, &GbOptions::default()).unwrap();
        println!("{order:?}:");
        for g in gb.elements() {
            println!("  {g}");
        }
    }
}
