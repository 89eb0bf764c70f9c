//! Prime spectrum of a symmetric Heyting algebra and the laws of its
//! Stone map.

use rauszer::algebra::{samples, with_heyting_brouwer};
use rauszer::dot::set_label;
use rauszer::representation::{prime_spectrum, stone_map, with_involution};

fn main() -> rauszer::Result<()> {
    let alg = with_heyting_brouwer(&samples::kleene_chain(4))?;
    let space = with_involution(&alg, &prime_spectrum(&alg)?)?;
    for (i, p) in space.points().iter().enumerate() {
        let phi = space.phi().map(|v| v.apply(i));
        println!(
            "P{i} = {}  phi -> P{}",
            set_label(p, None),
            phi.unwrap_or(i)
        );
    }
    let e = stone_map(&alg, &space)?;
    for x in alg.elements() {
        println!("h({x}) = {}", set_label(&e.h[x], None));
    }
    println!("{}", e.report.to_json());
    Ok(())
}
