//! Graphviz for a preorder, its opens and a spectrum. Pipe into `dot -Tsvg`.

use rauszer::algebra::samples;
use rauszer::dot::{hasse_dot, opens_dot, spectrum_dot};
use rauszer::rauszer::opens;
use rauszer::representation::prime_spectrum;
use rauszer::Preorder;

fn main() -> rauszer::Result<()> {
    let r = Preorder::from_fn(3, |x, y| x == y || y == 2)?;
    let labels: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
    print!("{}", hasse_dot("preorder", &r, &labels));
    print!("{}", opens_dot(&opens(&r)?, Some(&labels)));
    print!(
        "{}",
        spectrum_dot(&prime_spectrum(&samples::product(2, 3))?)
    );
    Ok(())
}
