//! 4-plat diagrams, Schubert's criterion, and canonical 2-bridge fractions.

use num_bigint::BigInt;
use sternbrocot::contfrac::CfSequence;
use sternbrocot::links::{canonical_form, fraction_of, link_family, plat_of, schubert_equivalent};

fn main() -> sternbrocot::Result<()> {
    let terms = [4, 3, 2, 3].map(BigInt::from);
    let plat = plat_of(&terms)?;
    print!("{}", plat.render_text());
    println!("fraction {}", fraction_of(&terms)?);

    for (a, b) in [("3/7", "5/7"), ("2/7", "3/7"), ("1/3", "1/5")] {
        println!(
            "{a} ~ {b}: {}",
            schubert_equivalent(&a.parse()?, &b.parse()?)?
        );
    }
    for x in ["5/7", "24/103", "7/19"] {
        let c = canonical_form(&x.parse()?)?;
        println!("{x} -> {} {}", c.canonical, c.sequence);
    }

    println!("\nlinks of D(3, m, 4):");
    for e in link_family(&CfSequence::from_i64s(&[0, 3, 2, 4])?, 2, -3..=3)? {
        match &e.canonical {
            Some(c) => println!("  m = {:>2}  {:>6} -> {c}", e.m, e.alpha),
            None => println!("  m = {:>2}  {:>6} (degenerate)", e.m, e.alpha),
        }
    }
    Ok(())
}
