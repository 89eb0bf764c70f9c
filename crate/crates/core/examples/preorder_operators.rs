//! Closure and interior of a small preorder, and the law report over every
//! subset.

use rauszer::laws::{conjugacy_laws, operator_laws};
use rauszer::rauszer::{closure, interior};
use rauszer::{build_preorder, BuildMode, Subset};

fn main() -> rauszer::Result<()> {
    // 0 ≤ 1 ≤ 2 with 3 equivalent to 2
    let r = build_preorder(4, &[(0, 1), (1, 2), (2, 3), (3, 2)], BuildMode::Close)?;
    let x = Subset::from_indices(4, [1])?;
    println!("X = {x}");
    println!("C X = {}", closure(&r, &x)?);
    println!("I X = {}", interior(&r, &x)?);
    println!("I (C X) = {}", interior(&r, &closure(&r, &x)?)?);

    for (name, rep) in [
        ("operators", operator_laws(&r)?),
        ("conjugacy", conjugacy_laws(&r)?),
    ] {
        println!("{name}: {}", rep.to_json());
    }
    Ok(())
}
