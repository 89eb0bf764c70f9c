//! Exhaustive search over small Kleene symmetric Heyting algebras,
//! comparing condition (N) with interpolation on the spectrum.

use rauszer::enumerate::kleene_symmetric_heyting;
use rauszer::representation::monteiro_equivalence;

fn main() -> rauszer::Result<()> {
    let mut disagreements = 0;
    for n in 2..=6 {
        let algs = kleene_symmetric_heyting(n)?;
        for alg in &algs {
            let m = monteiro_equivalence(alg)?;
            disagreements += usize::from(!m.agree);
            println!(
                "size {n}: (N) {}  interpolation {}",
                m.n_holds, m.interp_holds
            );
        }
    }
    println!("disagreements: {disagreements}");
    Ok(())
}
