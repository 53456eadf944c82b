//! Reading an ideal file and resolving each ideal in it.
//!
//! `cargo run --example ideal_file -- [path]`

use liaison::idealfile::IdealFile;
use liaison::resolution::minimal_free_resolution;

const SAMPLE: &str = "\
ring GF(32003) [x, y, z, w]
# lc: yes
ideal cubic = x*z - y^2, x*w - y*z, y*w - z^2;
ideal points = x, y, z^2;
";

fn main() {
    let file = match std::env::args().nth(1) {
        Some(path) => IdealFile::read(path),
        None => IdealFile::parse(SAMPLE),
    };
    let file = file.unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    println!("ring over {} in {:?}", file.ring.field(), file.ring.names());
    for named in &file.ideals {
        let table = minimal_free_resolution(&named.ideal).unwrap().betti_table();
        println!("{} (lc: {:?}), reg R/I = {}", named.name, named.lc, table.regularity().unwrap());
        print!("{}", table.to_text());
    }
}
