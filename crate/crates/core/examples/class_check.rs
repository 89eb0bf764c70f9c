//! Checking sample algebras against the class axioms; failures carry a
//! witness tuple.

use rauszer::algebra::{check_class, samples, with_heyting_brouwer, ClassName};

fn main() -> rauszer::Result<()> {
    let cases = [
        (
            "Lukasiewicz 3-chain",
            samples::lukasiewicz3(),
            ClassName::Lukasiewicz3,
        ),
        (
            "Nelson 4-chain",
            samples::nelson_chain(4),
            ClassName::Nelson,
        ),
        (
            "diamond, atoms fixed",
            samples::diamond_fixing_atoms(),
            ClassName::Kleene,
        ),
        (
            "2x3 grid",
            with_heyting_brouwer(&samples::product(2, 3))?,
            ClassName::HeytingBrouwer,
        ),
        (
            "monadic",
            samples::simple_monadic(),
            ClassName::MonadicBoolean,
        ),
    ];
    for (name, alg, class) in cases {
        let rep = check_class(&alg, class)?;
        match &rep.witness {
            None => println!("{name}: {} holds", class.as_str()),
            Some(w) => println!(
                "{name}: {} fails, {} at {:?}",
                class.as_str(),
                w.axiom,
                w.tuple
            ),
        }
    }
    Ok(())
}
