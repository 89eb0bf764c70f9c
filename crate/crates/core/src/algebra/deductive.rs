//! Deductive systems: sets containing `1` and closed under modus ponens for
//! a chosen arrow table.

use super::{BinaryOp, FilterKind, FilterSet, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Which finite-sequence description of `D(Z)` a generated system is
/// checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeductiveMode {
    /// `z1 ↣ (z2 ↣ ... (zn ↣ x)) = 1`
    Chained,
    /// `(z1 ∧ ... ∧ zn) ↣ x = 1`
    Conjunctive,
}

fn arrow_of(alg: &FiniteAlgebra, arrow: BinaryOp) -> Result<impl Fn(usize, usize) -> usize + '_> {
    if !alg.has_binary(arrow) {
        return Err(Error::MissingTable {
            class: "deductive system".into(),
            table: arrow.name(),
        });
    }
    Ok(move |a, b| alg.binary(arrow, a, b).expect("checked"))
}

fn check_carrier(alg: &FiniteAlgebra, s: &Subset) -> Result<()> {
    if s.universe() != alg.size() {
        return Err(Error::UniverseMismatch {
            expected: alg.size(),
            found: s.universe(),
        });
    }
    Ok(())
}

/// (D1) `1 ∈ D` and (D2) `a, a ↣ b ∈ D` imply `b ∈ D`.
pub fn is_deductive_system(alg: &FiniteAlgebra, arrow: BinaryOp, d: &Subset) -> Result<bool> {
    check_carrier(alg, d)?;
    let to = arrow_of(alg, arrow)?;
    Ok(d.contains(alg.top())
        && d.iter().all(|a| {
            alg.elements()
                .all(|b| !d.contains(to(a, b)) || d.contains(b))
        }))
}

/// Least set containing `z` and `1` closed under modus ponens.
pub fn modus_ponens_closure(alg: &FiniteAlgebra, arrow: BinaryOp, z: &Subset) -> Result<Subset> {
    check_carrier(alg, z)?;
    let to = arrow_of(alg, arrow)?;
    let mut d = z.clone().with(alg.top());
    loop {
        let mut next = d.clone();
        for a in d.iter() {
            for b in alg.elements() {
                if d.contains(to(a, b)) {
                    next.insert(b);
                }
            }
        }
        if next == d {
            return Ok(d);
        }
        d = next;
    }
}

/// `D(Z)` evaluated from its sequence description, over sequences of length
/// at most `|A|`.
pub fn sequence_characterization(
    alg: &FiniteAlgebra,
    arrow: BinaryOp,
    z: &Subset,
    mode: DeductiveMode,
) -> Result<Subset> {
    check_carrier(alg, z)?;
    let to = arrow_of(alg, arrow)?;
    let n = alg.size();
    let one = alg.top();
    match mode {
        DeductiveMode::Chained => {
            // level k holds the x reachable by some chain of length k
            let mut level = Subset::singleton(n, one);
            let mut acc = level.clone();
            for _ in 0..n {
                let next = Subset::from_indices(
                    n,
                    alg.elements()
                        .filter(|&x| z.iter().any(|zi| level.contains(to(zi, x)))),
                )?;
                acc = acc.union(&next);
                if next == level {
                    break;
                }
                level = next;
            }
            Ok(acc)
        }
        DeductiveMode::Conjunctive => {
            if z.is_empty() {
                return Ok(Subset::singleton(n, one));
            }
            // meets of nonempty subfamilies of Z
            let mut meets = z.clone();
            loop {
                let mut next = meets.clone();
                for a in meets.iter() {
                    for b in z.iter() {
                        next.insert(alg.meet(a, b));
                    }
                }
                if next == meets {
                    break;
                }
                meets = next;
            }
            Subset::from_indices(
                n,
                alg.elements()
                    .filter(|&x| meets.iter().any(|m| to(m, x) == one)),
            )
        }
    }
}

/// The deductive system generated by `z`, as a modus-ponens fixpoint,
/// cross-checked against the chosen sequence description. `D(∅)` is the
/// closure of `{1}`.
pub fn generate_deductive_system(
    alg: &FiniteAlgebra,
    arrow: BinaryOp,
    z: &Subset,
    mode: DeductiveMode,
) -> Result<Subset> {
    let d = modus_ponens_closure(alg, arrow, z)?;
    if !z.is_empty() {
        let by_sequences = sequence_characterization(alg, arrow, z, mode)?;
        if by_sequences != d {
            return Err(Error::Precondition(format!(
                "{arrow} does not generate deductive systems by {mode:?} sequences: fixpoint {d}, sequences {by_sequences}"
            )));
        }
    }
    Ok(d)
}

/// `D(D1, a) = {x : a ↣ x ∈ D1}`.
pub fn generate_from_system_and_element(
    alg: &FiniteAlgebra,
    arrow: BinaryOp,
    d1: &Subset,
    a: usize,
) -> Result<Subset> {
    if !is_deductive_system(alg, arrow, d1)? {
        return Err(Error::NotDeductiveSystem(d1.to_vec()));
    }
    if a >= alg.size() {
        return Err(Error::OutOfRange {
            index: a,
            size: alg.size(),
        });
    }
    let to = arrow_of(alg, arrow)?;
    Subset::from_indices(
        alg.size(),
        alg.elements().filter(|&x| d1.contains(to(a, x))),
    )
}

/// Every deductive system for `arrow`, by subset scan.
pub fn deductive_systems(alg: &FiniteAlgebra, arrow: BinaryOp) -> Result<FilterSet> {
    let n = alg.size();
    if n > super::DEFAULT_FILTER_SCAN_CAP {
        return Err(Error::Capacity {
            what: "deductive system scan carrier",
            size: n,
            cap: super::DEFAULT_FILTER_SCAN_CAP,
        });
    }
    let mut members = Vec::new();
    for mask in 0..(1u64 << n) {
        let s = Subset::from_bits(n, mask);
        if is_deductive_system(alg, arrow, &s)? {
            members.push(s);
        }
    }
    Ok(FilterSet {
        kind: FilterKind::DeductiveSystems,
        members,
    })
}
