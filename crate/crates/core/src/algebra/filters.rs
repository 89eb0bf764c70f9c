//! Filters and prime filters of a finite lattice, by exhaustive subset scan.

use super::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Largest carrier scanned subset-by-subset unless overridden.
pub const DEFAULT_FILTER_SCAN_CAP: usize = 20;

/// Hard limit for the subset scan, whatever the configured cap.
const SCAN_HARD_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterKind {
    All,
    Prime,
    DeductiveSystems,
}

/// A family of subsets of an algebra's carrier, sorted ascending by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterSet {
    pub kind: FilterKind,
    pub members: Vec<Subset>,
}

impl FilterSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// (f1) `1 ∈ F`, (f2) closed under `∧`, (f3) upward closed.
pub fn is_filter(alg: &FiniteAlgebra, f: &Subset) -> bool {
    if f.universe() != alg.size() || !f.contains(alg.top()) {
        return false;
    }
    for a in f.iter() {
        if !alg
            .elements()
            .filter(|&b| alg.leq(a, b))
            .all(|b| f.contains(b))
        {
            return false;
        }
        if !f.iter().all(|b| f.contains(alg.meet(a, b))) {
            return false;
        }
    }
    true
}

/// A filter that is proper (p1) and prime (p2).
pub fn is_prime_filter(alg: &FiniteAlgebra, p: &Subset) -> bool {
    is_filter(alg, p) && !p.is_full() && is_prime_set(alg, p)
}

fn is_prime_set(alg: &FiniteAlgebra, p: &Subset) -> bool {
    alg.elements().all(|a| {
        alg.elements()
            .all(|b| !p.contains(alg.join(a, b)) || p.contains(a) || p.contains(b))
    })
}

pub fn filters(alg: &FiniteAlgebra, kind: FilterKind) -> Result<FilterSet> {
    filters_with_cap(alg, kind, DEFAULT_FILTER_SCAN_CAP)
}

/// Scans every subset of the carrier containing the top element.
pub fn filters_with_cap(alg: &FiniteAlgebra, kind: FilterKind, cap: usize) -> Result<FilterSet> {
    let n = alg.size();
    let cap = cap.min(SCAN_HARD_LIMIT);
    if n > cap {
        return Err(Error::Capacity {
            what: "filter scan carrier",
            size: n,
            cap,
        });
    }
    if kind == FilterKind::DeductiveSystems {
        return Err(Error::Precondition(
            "deductive systems need an arrow; use deductive_systems".into(),
        ));
    }
    let top_bit = 1u64 << alg.top();
    let mut members = Vec::new();
    for mask in 0..(1u64 << n) {
        if mask & top_bit == 0 {
            continue;
        }
        let s = Subset::from_bits(n, mask);
        let keep = match kind {
            FilterKind::All => is_filter(alg, &s),
            _ => is_prime_filter(alg, &s),
        };
        if keep {
            members.push(s);
        }
    }
    Ok(FilterSet { kind, members })
}

/// Elements `j ≠ 0` with `j = x ∨ y` only when `j = x` or `j = y`.
pub fn join_irreducibles(alg: &FiniteAlgebra) -> Vec<usize> {
    alg.elements()
        .filter(|&j| j != alg.bot())
        .filter(|&j| {
            alg.elements().all(|x| {
                alg.elements()
                    .all(|y| alg.join(x, y) != j || x == j || y == j)
            })
        })
        .collect()
}

/// Principal up-sets `↑j` of the join-irreducibles. On a distributive
/// lattice these are exactly the prime filters.
pub fn prime_filters_via_join_irreducibles(alg: &FiniteAlgebra) -> Vec<Subset> {
    let n = alg.size();
    let mut out: Vec<Subset> = join_irreducibles(alg)
        .into_iter()
        .map(|j| {
            Subset::from_indices(n, alg.elements().filter(|&b| alg.leq(j, b))).expect("in range")
        })
        .collect();
    out.sort();
    out
}

/// A prime filter containing `f` and avoiding `avoid`: the smallest by
/// bitmask among all candidates, or `None` if there is none.
pub fn extend_to_prime(alg: &FiniteAlgebra, f: &Subset, avoid: usize) -> Result<Option<Subset>> {
    if !is_filter(alg, f) {
        return Err(Error::NotFilter(f.to_vec()));
    }
    if avoid >= alg.size() {
        return Err(Error::OutOfRange {
            index: avoid,
            size: alg.size(),
        });
    }
    let primes = if alg.size() <= DEFAULT_FILTER_SCAN_CAP {
        filters(alg, FilterKind::Prime)?.members
    } else {
        prime_filters_via_join_irreducibles(alg)
    };
    Ok(primes
        .into_iter()
        .find(|p| f.is_subset(p) && !p.contains(avoid)))
}
