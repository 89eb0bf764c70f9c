//! The opens of a preorder with Heyting implication and Brouwer difference.

use rauszer::algebra::{check_class, ClassName};
use rauszer::dot::set_label;
use rauszer::rauszer::{brouwer_minus, heyting_implies, opens};
use rauszer::Preorder;

fn main() -> rauszer::Result<()> {
    let r = Preorder::from_fn(3, |x, y| x == y || x == 0)?;
    let lattice = opens(&r)?;
    println!("{} opens:", lattice.len());
    for g in lattice.members() {
        println!("  {}", set_label(g, None));
    }

    let g = &lattice.members()[1];
    let h = &lattice.members()[2];
    println!(
        "{} => {} = {}",
        set_label(g, None),
        set_label(h, None),
        set_label(&heyting_implies(&r, g, h)?, None)
    );
    println!(
        "{} -. {} = {}",
        set_label(g, None),
        set_label(h, None),
        set_label(&brouwer_minus(&r, g, h)?, None)
    );

    let alg = lattice.to_algebra(None)?;
    let rep = check_class(&alg, ClassName::HeytingBrouwer)?;
    println!("heyting-brouwer: {}", rep.holds);
    Ok(())
}
