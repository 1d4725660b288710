//! A window of the diagram: vertices, edges, and triangles up to a
//! denominator bound.
//!
//! `cargo run --example diagram -- out.svg`

use sternbrocot::diagram::{render_svg, Diagram, SvgOptions};
use sternbrocot::rational::is_farey_triple;

fn main() -> sternbrocot::Result<()> {
    let d = Diagram::build(&"0".parse()?, &"1".parse()?, 7)?;
    println!(
        "[0, 1] with denominators <= 7: {} vertices, {} edges, {} triangles",
        d.vertices().len(),
        d.edges().len(),
        d.triangles().len()
    );
    for [a, b, c] in d.triangles().iter().take(6) {
        println!("  {a} {b} {c}  farey triple: {}", is_farey_triple(a, b, c));
    }
    if let Some(path) = std::env::args().nth(1) {
        let big = Diagram::build(&"0".parse()?, &"1".parse()?, 60)?;
        std::fs::write(&path, render_svg(&big, &[], &SvgOptions::default())).expect("write svg");
        println!("wrote {path}");
    }
    Ok(())
}
