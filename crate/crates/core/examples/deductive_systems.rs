use rauszer::algebra::{
    deductive_systems, generate_deductive_system, generate_from_system_and_element, samples,
    BinaryOp, DeductiveMode,
};
use rauszer::Subset;

fn main() -> rauszer::Result<()> {
    let alg = samples::nelson_chain(4);
    for arrow in [BinaryOp::Impl, BinaryOp::WImpl] {
        if !alg.has_binary(arrow) {
            continue;
        }
        let all = deductive_systems(&alg, arrow)?;
        println!("{}: {} deductive systems", arrow.name(), all.len());
        for z in 0..alg.size() {
            let zs = Subset::singleton(alg.size(), z);
            let d = generate_deductive_system(&alg, arrow, &zs, DeductiveMode::Chained)?;
            println!("  D({{{z}}}) = {d}");
        }
        let one = Subset::singleton(alg.size(), alg.top());
        let top = generate_deductive_system(&alg, arrow, &one, DeductiveMode::Conjunctive)?;
        println!(
            "  D({top}, 2) = {}",
            generate_from_system_and_element(&alg, arrow, &top, 2)?
        );
    }
    Ok(())
}
