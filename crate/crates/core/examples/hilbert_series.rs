//! Hilbert series and Hilbert function of a graded quotient.
//!
//! `cargo run --example hilbert_series`

use liaison::ideals::Ideal;
use liaison::polyring::{CoefficientField, Ring};

fn main() {
    let ring = Ring::standard(CoefficientField::Rational, 4);
    let cubic = Ideal::parse(&ring, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2").unwrap();
    let hs = cubic.hilbert_series().unwrap();
    println!("HS(R/I) numerator: {hs}");
    if let Some((dim, h)) = hs.reduced() {
        println!("reduced: dim {dim}, h-vector {h:?}");
    }
    println!("H(d), d = 0..8: {:?}", hs.hilbert_function_range(0, 8));
}
