//! Sums, intersections, colons, saturation and elimination.
//!
//! `cargo run --example ideal_operations`

use liaison::ideals::{eliminate, Ideal};
use liaison::polyring::{CoefficientField, Ring};

fn show(label: &str, i: &Ideal) {
    let gb = i.groebner_basis().unwrap();
    let gens: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
    println!("{label:<12} ({})", gens.join(", "));
}

fn main() {
    let ring = Ring::graded(CoefficientField::Rational, &["x", "y", "z"]).unwrap();
    let i = Ideal::parse(&ring, "x^2, x*y").unwrap();
    let j = Ideal::parse(&ring, "y, z").unwrap();
    show("I + J", &i.sum(&j));
    show("I ∩ J", &i.intersection(&j).unwrap());
    show("I : x", &i.colon(&Ideal::parse(&ring, "x").unwrap()).unwrap());
    show("I : m^∞", &i.saturation(&Ideal::maximal(&ring)).unwrap());
    println!("dim R/I = {}, codim I = {}", i.krull_dimension().unwrap(), i.codimension().unwrap());

    let affine = Ring::affine(CoefficientField::Rational, &["t", "x", "y"]).unwrap();
    let curve = Ideal::parse(&affine, "x - t^2, y - t^3").unwrap();
    show("eliminate t", &eliminate(&curve, &[0]).unwrap());
}
