//! The family [0;3,m,4]: every vertex lies on one of two lines through
//! (1/3, 0), shared with the family [0;2,1,m,4].
//!
//! `cargo run --example line_families -- out.svg`

use sternbrocot::contfrac::parse_terms;
use sternbrocot::diagram::{render_svg, Diagram, Overlay, SvgOptions};
use sternbrocot::lines::{membership, LineFamily};
use sternbrocot::rational::nu;

fn main() -> sternbrocot::Result<()> {
    let f = LineFamily::from_pattern(&parse_terms("[0;3,_,4]")?)?;
    let g = f.partner()?;
    let (plus, minus) = f.lines()?;
    print!("{}", f.report(-5..=5)?);
    println!("root of Q: {}", f.q_root()?.value);

    println!("\npartner {}", g.pattern());
    for m in -5..=5 {
        let pt = nu(&g.alpha_m(m));
        let on = if membership(&pt, &plus) {
            "l+"
        } else if membership(&pt, &minus) {
            "l-"
        } else {
            "neither"
        };
        println!("  m = {m:>2}  {:>7}  on {on}", g.alpha_m(m));
    }

    let profile = f.distance_profile(8);
    println!(
        "\nsquared distances to (1/3, 0) decrease: m >= 0 {}, m <= -2 {}",
        profile.forward_monotone(),
        profile.backward_monotone()
    );

    if let Some(path) = std::env::args().nth(1) {
        let d = Diagram::build(&"0".parse()?, &"1".parse()?, 60)?;
        let overlays = vec![
            Overlay::line(plus),
            Overlay::line(minus),
            Overlay::points((-10..=10).map(|m| nu(&f.alpha_m(m))).collect(), "#ff69b4"),
            Overlay::points((-10..=10).map(|m| nu(&g.alpha_m(m))).collect(), "#ffd700"),
        ];
        std::fs::write(&path, render_svg(&d, &overlays, &SvgOptions::default()))
            .expect("write svg");
        println!("wrote {path}");
    }
    Ok(())
}
