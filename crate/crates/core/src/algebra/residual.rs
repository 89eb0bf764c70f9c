use super::{BinaryOp, FiniteAlgebra};
use crate::error::{Error, Result};

/// `a ⇒ b`: the largest `x` with `a ∧ x ≤ b`, if one exists.
pub fn relative_pseudocomplement(alg: &FiniteAlgebra, a: usize, b: usize) -> Option<usize> {
    let cands: Vec<usize> = alg
        .elements()
        .filter(|&x| alg.leq(alg.meet(a, x), b))
        .collect();
    cands
        .iter()
        .copied()
        .find(|&m| cands.iter().all(|&x| alg.leq(x, m)))
}

/// `a −̇ b`: the least `x` with `a ≤ b ∨ x`, if one exists.
pub fn pseudo_difference(alg: &FiniteAlgebra, a: usize, b: usize) -> Option<usize> {
    let cands: Vec<usize> = alg
        .elements()
        .filter(|&x| alg.leq(a, alg.join(b, x)))
        .collect();
    cands
        .iter()
        .copied()
        .find(|&m| cands.iter().all(|&x| alg.leq(m, x)))
}

/// First `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
pub fn distributivity_witness(alg: &FiniteAlgebra) -> Option<(usize, usize, usize)> {
    for a in alg.elements() {
        for b in alg.elements() {
            for c in alg.elements() {
                if alg.meet(a, alg.join(b, c)) != alg.join(alg.meet(a, b), alg.meet(a, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn derived_table(
    alg: &FiniteAlgebra,
    f: impl Fn(usize, usize) -> Option<usize>,
) -> Result<Vec<Vec<usize>>> {
    alg.elements()
        .map(|a| {
            alg.elements()
                .map(|b| f(a, b).ok_or(Error::MissingImplication { a, b }))
                .collect()
        })
        .collect()
}

/// Adds `impl` and `minus` tables computed from the lattice order.
pub fn with_heyting_brouwer(alg: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let imp = derived_table(alg, |a, b| relative_pseudocomplement(alg, a, b))?;
    let minus = derived_table(alg, |a, b| pseudo_difference(alg, a, b))?;
    alg.clone()
        .with_binary(BinaryOp::Impl, imp)?
        .with_binary(BinaryOp::Minus, minus)
}

/// Adds a `wimpl` table `a →w b = a ⇒ (∼a ∨ b)`; needs a `neg` table.
pub fn derived_weak_implication(alg: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let neg = alg.unary(super::UnaryOp::Neg).ok_or(Error::MissingTable {
        class: "weak implication".into(),
        table: "neg",
    })?;
    let table = alg
        .elements()
        .map(|a| {
            alg.elements()
                .map(|b| {
                    let target = alg.join(neg[a], b);
                    relative_pseudocomplement(alg, a, target)
                        .ok_or(Error::MissingImplication { a, b: target })
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    alg.clone().with_binary(BinaryOp::WImpl, table)
}

#[cfg(test)]
mod tests {
    use super::super::samples;
    use super::*;

    #[test]
    fn rpc_examples() {
        let c3 = samples::chain(3);
        for a in 0..3 {
            for b in a..3 {
                assert_eq!(relative_pseudocomplement(&c3, a, b), Some(c3.top()));
            }
        }
        assert_eq!(relative_pseudocomplement(&c3, 2, 1), Some(1));
        // atoms of the four-element Boolean lattice are 1 and 2
        let b4 = samples::product(2, 2);
        assert_eq!(relative_pseudocomplement(&b4, 1, 2), Some(2));
    }

    #[test]
    fn rpc_absent_on_pentagon() {
        let n5 = samples::pentagon().unwrap();
        let missing = (0..5)
            .flat_map(|a| (0..5).map(move |b| (a, b)))
            .any(|(a, b)| relative_pseudocomplement(&n5, a, b).is_none());
        assert!(missing);
        assert!(distributivity_witness(&n5).is_some());
    }

    #[test]
    fn pseudo_difference_examples() {
        let c3 = samples::chain(3);
        for a in 0..3 {
            for b in a..3 {
                assert_eq!(pseudo_difference(&c3, a, b), Some(c3.bot()));
            }
        }
        assert_eq!(pseudo_difference(&c3, 2, 1), Some(2));
        assert_eq!(pseudo_difference(&c3, 1, 0), Some(1));
    }

    #[test]
    fn join_splits_through_difference() {
        let alg = with_heyting_brouwer(&samples::product(2, 3)).unwrap();
        for a in alg.elements() {
            for b in alg.elements() {
                let d = alg.binary(BinaryOp::Minus, a, b).unwrap();
                assert_eq!(alg.join(a, b), alg.join(b, d));
            }
        }
    }
}
