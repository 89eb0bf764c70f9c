//! Nelson algebras up to five elements: the interpolation property of the
//! spectrum, and whether its opens are again Nelson.

use rauszer::enumerate::nelson_algebras;
use rauszer::representation::{
    interpolation_check, opens_nelson_check, prime_spectrum, with_involution,
};

fn main() -> rauszer::Result<()> {
    for n in 2..=5 {
        for alg in nelson_algebras(n)? {
            let space = with_involution(&alg, &prime_spectrum(&alg)?)?;
            let interp = interpolation_check(&space)?;
            let nelson = opens_nelson_check(&space)?;
            let kinds = space.kinds().map(|k| (k.first.len(), k.second.len()));
            println!(
                "size {n}: {} points, {} eligible pairs, interpolation {}, opens nelson {}, kinds {:?}",
                space.len(),
                interp.eligible_pairs,
                interp.holds,
                nelson.holds,
                kinds
            );
        }
    }
    Ok(())
}
