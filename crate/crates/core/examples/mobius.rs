//! Integer matrices acting on columns and on Q ∪ {1/0}.

use sternbrocot::matrix::{b_matrix, mobius_apply, IntMat2};
use sternbrocot::rational::ExtendedRational;

fn main() -> sternbrocot::Result<()> {
    let terms = [3, 2, 4].map(num_bigint::BigInt::from);
    for j in 0..=terms.len() {
        let b = b_matrix(&terms[..j]);
        println!("B_{j} = {b}  det {}", b.det());
    }

    let x3 = IntMat2::x(&3.into());
    let half: ExtendedRational = "1/2".parse()?;
    println!("\nX_3 acting on 1/2: {}", mobius_apply(&x3, &half)?);
    println!(
        "X_3 acting on 1/0: {}",
        mobius_apply(&x3, &ExtendedRational::infinity())?
    );

    let flip = IntMat2::new(-1, 1, 0, 1);
    println!(
        "x -> 1 - x sends 5/9 to {}",
        mobius_apply(&flip, &"5/9".parse()?)?
    );
    Ok(())
}
