//! An equivalence relation turns closure into an existential quantifier.

use rauszer::enumerate::equivalences;
use rauszer::laws::monadic_laws;

fn main() -> rauszer::Result<()> {
    for r in equivalences(4) {
        let rep = monadic_laws(&r)?;
        let mut blocks: Vec<String> = r.up_sets().iter().map(|b| b.to_string()).collect();
        blocks.dedup();
        blocks.sort();
        blocks.dedup();
        println!("{}: {}", blocks.join(" "), rep.all_hold());
    }
    Ok(())
}
