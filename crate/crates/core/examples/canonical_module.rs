//! The canonical module as a twisted Ext and its regularity.
//!
//! `cargo run --example canonical_module`

use liaison::ideals::Ideal;
use liaison::polyring::{CoefficientField, Ring};
use liaison::resolution::{canonical_module, module_regularity, resolve_cokernel};

fn main() {
    let ring = Ring::standard(CoefficientField::Rational, 4);
    for (name, text) in [
        ("twisted cubic", "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2"),
        ("(2,2) curve", "x0^2 + x1^2 + x2^2 + x3^2, x0^2 + 2*x1^2 + 3*x2^2 + 4*x3^2"),
    ] {
        let i = Ideal::parse(&ring, text).unwrap();
        let r = i.codimension().unwrap();
        let omega = canonical_module(&i, r).unwrap();
        println!("{name}: ω generated in degrees {:?}", omega.target().twists());
        print!("{}", resolve_cokernel(&omega).unwrap().betti_table().to_text());
        println!("reg ω = {}", module_regularity(&omega).unwrap().unwrap());
    }
}
