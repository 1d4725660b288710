//! The funnels over -4/7 and 2/7, their vertex indices, and a figure.
//!
//! `cargo run --example funnel -- out.svg`

use sternbrocot::diagram::{funnel, render_svg, verify_hatcher, Diagram, Overlay, SvgOptions};
use sternbrocot::rational::{nu, ExtendedRational};

fn main() -> sternbrocot::Result<()> {
    let out = std::env::args().nth(1);
    let mut overlays = Vec::new();
    for text in ["-4/7", "2/7"] {
        let alpha: ExtendedRational = text.parse()?;
        let f = funnel(&alpha)?;
        println!("{alpha} = {}", f.terms());
        println!(
            "  left edge  {:?}",
            f.left_edge()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        );
        println!(
            "  right edge {:?}",
            f.right_edge()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
        );
        for (v, k) in f.indices() {
            println!("  index {v:>5} = {k}");
        }
        for c in verify_hatcher(f.terms())?.clauses {
            println!(
                "  clause {} {}",
                c.clause,
                if c.passed { "holds" } else { "fails" }
            );
        }
        overlays.push(Overlay::points(vec![nu(&alpha)], "#d62728"));
        overlays.push(Overlay::funnel(f));
    }
    if let Some(path) = out {
        let d = Diagram::build(&"-1".parse()?, &"1".parse()?, 12)?;
        std::fs::write(&path, render_svg(&d, &overlays, &SvgOptions::default()))
            .expect("write svg");
        println!("wrote {path}");
    }
    Ok(())
}
