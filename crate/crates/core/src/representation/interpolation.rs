use serde::Serialize;

use super::{prime_spectrum, rasiowa_involution, PrimeFilterSpace};
use crate::algebra::{
    check_class, derived_weak_implication, BinaryOp, ClassName, ClassReport, FiniteAlgebra, UnaryOp,
};
use crate::error::{Error, Result};
use crate::rauszer::opens;

/// Outcome of the interpolation scan over the spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interpolation {
    pub holds: bool,
    /// First pair `(P, Q)` meeting the hypotheses with no interpolant.
    pub witness: Option<(usize, usize)>,
    /// First eligible pair where `Q ⊆ φ(P)` failed. Antitonicity of `φ`
    /// rules this out, so anything here is a bug.
    pub delta_failure: Option<(usize, usize)>,
    pub eligible_pairs: usize,
}

/// For all points with `P ⊆ φ(P)`, `Q ⊆ φ(Q)`, `P ⊆ φ(Q)`, looks for `M`
/// with `P, Q ⊆ M ⊆ φ(P) ∩ φ(Q)`.
pub fn interpolation_check(space: &PrimeFilterSpace) -> Result<Interpolation> {
    let phi = space.phi().ok_or(Error::MissingInvolution)?;
    let k = space.len();
    let le = |a: usize, b: usize| space.order().relates(a, b);
    let mut out = Interpolation {
        holds: true,
        witness: None,
        delta_failure: None,
        eligible_pairs: 0,
    };
    for p in 0..k {
        if !le(p, phi.apply(p)) {
            continue;
        }
        for q in 0..k {
            if !le(q, phi.apply(q)) || !le(p, phi.apply(q)) {
                continue;
            }
            out.eligible_pairs += 1;
            if out.delta_failure.is_none() && !le(q, phi.apply(p)) {
                out.delta_failure = Some((p, q));
            }
            let found =
                (0..k).any(|m| le(p, m) && le(q, m) && le(m, phi.apply(p)) && le(m, phi.apply(q)));
            if !found && out.witness.is_none() {
                out.holds = false;
                out.witness = Some((p, q));
            }
        }
    }
    Ok(out)
}

/// Both sides of Monteiro's characterization on one Kleene algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonteiroReport {
    pub n_holds: bool,
    /// First `(a, b, c)` with `(a ∧ b) →w c ≰ a →w (b →w c)`.
    pub n_witness: Option<Vec<usize>>,
    pub interp_holds: bool,
    pub interp_witness: Option<(usize, usize)>,
    pub agree: bool,
}

/// Evaluates `(N)` with `a →w b = a ⇒ (∼a ∨ b)` derived from the order,
/// and the interpolation property of the spectrum.
pub fn monteiro_equivalence(alg: &FiniteAlgebra) -> Result<MonteiroReport> {
    if !alg.has_unary(UnaryOp::Neg) {
        return Err(Error::MissingInvolution);
    }
    let kleene = check_class(alg, ClassName::Kleene)?;
    if let Some(w) = kleene.witness {
        return Err(Error::NotKleene {
            axiom: w.axiom,
            witness: w.tuple,
        });
    }
    let derived = derived_weak_implication(alg)?;
    let w = |a, b| derived.binary(BinaryOp::WImpl, a, b).expect("derived");
    let mut n_witness = None;
    'scan: for a in alg.elements() {
        for b in alg.elements() {
            for c in alg.elements() {
                if !alg.leq(w(alg.meet(a, b), c), w(a, w(b, c))) {
                    n_witness = Some(vec![a, b, c]);
                    break 'scan;
                }
            }
        }
    }
    let space = prime_spectrum(alg)?;
    let phi = rasiowa_involution(alg, &space)?;
    let space = space.with_phi(phi)?;
    let interp = interpolation_check(&space)?;
    if let Some(pair) = interp.delta_failure {
        return Err(Error::Internal(format!(
            "(δ) failed at points {pair:?} under an antitone φ"
        )));
    }
    let n_holds = n_witness.is_none();
    Ok(MonteiroReport {
        n_holds,
        n_witness,
        interp_holds: interp.holds,
        interp_witness: interp.witness,
        agree: n_holds == interp.holds,
    })
}

/// Builds the opens of the spectrum with `∩, ∪, ∼, →w` and checks the
/// Nelson axioms on it. The space must carry an interpolating `φ`.
pub fn opens_nelson_check(space: &PrimeFilterSpace) -> Result<ClassReport> {
    let phi = space.phi().ok_or(Error::MissingInvolution)?;
    let interp = interpolation_check(space)?;
    if let Some((p, q)) = interp.witness {
        return Err(Error::Precondition(format!(
            "φ does not interpolate at points ({p}, {q})"
        )));
    }
    let alg = opens(space.order())?.to_algebra(Some(phi))?;
    check_class(&alg, ClassName::Nelson)
}

#[cfg(test)]
mod tests {
    use super::super::with_involution;
    use super::*;
    use crate::algebra::samples;
    use crate::order::Preorder;
    use crate::rauszer::PointInvolution;

    fn nelson_space(alg: &FiniteAlgebra) -> PrimeFilterSpace {
        with_involution(alg, &prime_spectrum(alg).unwrap()).unwrap()
    }

    #[test]
    fn kleene_three_chain_interpolates() {
        let space = nelson_space(&samples::nelson_chain(3));
        let r = interpolation_check(&space).unwrap();
        assert!(r.holds);
        // only (P, P) with P = {1}
        assert_eq!(r.eligible_pairs, 1);
        assert!(opens_nelson_check(&space).unwrap().holds);
    }

    #[test]
    fn single_point() {
        let space = PrimeFilterSpace::from_order(Preorder::identity(1))
            .with_phi(PointInvolution::identity(1))
            .unwrap();
        assert!(interpolation_check(&space).unwrap().holds);
        assert!(opens_nelson_check(&space).unwrap().holds);
    }

    #[test]
    fn monteiro_examples() {
        for alg in [
            samples::kleene_chain(3),
            samples::kleene_chain(4),
            samples::boolean2(),
        ] {
            let r = monteiro_equivalence(&alg).unwrap();
            assert!(r.n_holds && r.interp_holds && r.agree, "{r:?}");
        }
        assert!(matches!(
            monteiro_equivalence(&samples::diamond_fixing_atoms()),
            Err(Error::NotKleene { .. })
        ));
    }
}
