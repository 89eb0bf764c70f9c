//! Weak implication and Moisil's exception on the opens of a preorder with
//! an antitone involution.

use rauszer::dot::set_label;
use rauszer::rauszer::{
    demorgan_complement, exception, opens, weak_implication_laws, weak_implies, PointInvolution,
};
use rauszer::Preorder;

fn main() -> rauszer::Result<()> {
    // a 3-chain of points reversed by the involution
    let r = Preorder::chain(3);
    let v = PointInvolution::antitone_for(vec![2, 1, 0], &r)?;
    let lattice = opens(&r)?;
    for g in lattice.members() {
        for h in lattice.members() {
            println!(
                "G={} H={}  ~G={}  G->wH={}  E={}",
                set_label(g, None),
                set_label(h, None),
                set_label(&demorgan_complement(&v, g)?, None),
                set_label(&weak_implies(&r, &v, g, h)?, None),
                set_label(&exception(&r, &v, g, h)?, None)
            );
        }
    }
    println!("{}", weak_implication_laws(&r, &v)?.to_json());
    Ok(())
}
