//! Small named algebras used by the examples, tests and the search command.

use super::{derived_weak_implication, with_heyting_brouwer, FiniteAlgebra, UnaryOp};
use crate::error::Result;

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> FiniteAlgebra {
    assert!(n >= 1);
    FiniteAlgebra::from_fns(n, usize::min, usize::max, 0, n - 1).expect("chains are lattices")
}

/// Product of the chains of sizes `a` and `b`; `(i, j)` is element `i * b + j`.
pub fn product(a: usize, b: usize) -> FiniteAlgebra {
    assert!(a >= 1 && b >= 1);
    let split = |x: usize| (x / b, x % b);
    let combine = |f: fn(usize, usize) -> usize| {
        move |x: usize, y: usize| {
            let ((xi, xj), (yi, yj)) = (split(x), split(y));
            f(xi, yi) * b + f(xj, yj)
        }
    };
    FiniteAlgebra::from_fns(
        a * b,
        combine(usize::min),
        combine(usize::max),
        0,
        a * b - 1,
    )
    .expect("products of chains are lattices")
}

/// Boolean lattice of subsets of a `k`-element set, elements are bitmasks.
pub fn boolean(k: u32) -> FiniteAlgebra {
    let n = 1usize << k;
    FiniteAlgebra::from_fns(n, |a, b| a & b, |a, b| a | b, 0, n - 1)
        .expect("powersets are lattices")
}

/// The non-distributive pentagon: `0 < a < c < 1` and `0 < b < 1`,
/// elements `0, a, b, c, 1` numbered `0..5`.
pub fn pentagon() -> Result<FiniteAlgebra> {
    let below = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 3),
        (1, 4),
        (2, 4),
        (3, 4),
    ];
    FiniteAlgebra::from_order(5, |x, y| x == y || below.contains(&(x, y)))
}

/// Chain with `∼i = n-1-i`.
pub fn kleene_chain(n: usize) -> FiniteAlgebra {
    chain(n)
        .with_unary(UnaryOp::Neg, (0..n).rev().collect())
        .expect("valid table")
}

/// Kleene chain with Heyting, Brouwer and derived weak implication tables.
pub fn nelson_chain(n: usize) -> FiniteAlgebra {
    let alg = with_heyting_brouwer(&kleene_chain(n)).expect("chains are Heyting-Brouwer");
    derived_weak_implication(&alg).expect("chains have all implications")
}

/// Chain with its Heyting implication and Brouwer difference.
pub fn heyting_brouwer_chain(n: usize) -> FiniteAlgebra {
    with_heyting_brouwer(&chain(n)).expect("chains are Heyting-Brouwer")
}

/// Three-element chain with `∼m = m`, `⇒` and `−̇`.
pub fn lukasiewicz3() -> FiniteAlgebra {
    with_heyting_brouwer(&kleene_chain(3)).expect("chains are Heyting-Brouwer")
}

/// Four-element Boolean lattice whose `∼` fixes both atoms: De Morgan but
/// not Kleene. Elements: `0`, atoms `1` and `2`, top `3`.
pub fn diamond_fixing_atoms() -> FiniteAlgebra {
    product(2, 2)
        .with_unary(UnaryOp::Neg, vec![3, 1, 2, 0])
        .expect("valid table")
}

/// Four-element Boolean lattice with classical complement as `∼`.
pub fn diamond_boolean() -> FiniteAlgebra {
    product(2, 2)
        .with_unary(UnaryOp::Neg, vec![3, 2, 1, 0])
        .expect("valid table")
}

/// Two-element Boolean algebra with `∼` the classical complement.
pub fn boolean2() -> FiniteAlgebra {
    chain(2)
        .with_unary(UnaryOp::Neg, vec![1, 0])
        .expect("valid table")
}

/// Four-element Boolean algebra with the simple quantifier
/// (`∃0 = 0`, `∃x = 1` otherwise).
pub fn simple_monadic() -> FiniteAlgebra {
    boolean(2)
        .with_unary(UnaryOp::Quant, vec![0, 3, 3, 3])
        .expect("valid table")
}
