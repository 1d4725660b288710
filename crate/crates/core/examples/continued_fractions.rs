//! Exact evaluation, standard expansions, and convergents.

use sternbrocot::contfrac::{convergents, evaluate, standard_expansion, CfSequence};
use sternbrocot::rational::ExtendedRational;

fn main() -> sternbrocot::Result<()> {
    for text in ["[-1;2,3]", "[0;3,2]", "[0;2,-1,2]", "[3;7,15,1,292]"] {
        let seq: CfSequence = text.parse()?;
        println!("{text:>16} = {}", evaluate(&seq));
    }

    let x: ExtendedRational = "355/113".parse()?;
    let seq = standard_expansion(&x)?;
    println!("\n{x} = {seq}");
    for (j, c) in convergents(&seq).iter().enumerate() {
        println!("  c_{j} = {c}");
    }

    // a trailing 1 is folded into the previous term
    let folded = standard_expansion(&evaluate(&CfSequence::from_i64s(&[0, 2, 1])?))?;
    println!("\n[0;2,1] is standard as {folded}");
    Ok(())
}
