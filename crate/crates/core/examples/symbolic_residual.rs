//! Residual intersection with a matrix of indeterminates.
//!
//! `cargo run --example symbolic_residual`

use liaison::ideals::Ideal;
use liaison::linkage::{symbolic_residual, LinkOptions};
use liaison::polyring::{parse_polynomial, CoefficientField, Ring};

fn main() {
    let ring = Ring::graded(CoefficientField::Rational, &["x", "y"]).unwrap();
    let i = Ideal::parse(&ring, "x, y").unwrap();
    let res = symbolic_residual(&i, 2, &LinkOptions::default()).unwrap();
    let ext = res.j.ring().clone();
    println!("ring: {:?}", ext.names());
    for (k, a) in res.alpha.iter().enumerate() {
        println!("α{} = {a}", k + 1);
    }
    let mut expected = res.alpha.clone();
    expected.push(parse_polynomial("U0_0*U1_1 - U0_1*U1_0", &ext).unwrap());
    let same = res.j.same_ideal(&Ideal::new(&ext, expected)).unwrap();
    println!("[α : I] = (α1, α2, det M): {same}");
}
