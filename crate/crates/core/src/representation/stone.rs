use super::PrimeFilterSpace;
use crate::algebra::{BinaryOp, FiniteAlgebra, UnaryOp};
use crate::error::{Error, Result};
use crate::rauszer::{
    brouwer_minus, brouwer_negation, demorgan_complement, heyting_implies, heyting_negation,
    interior_of, is_open, weak_implies,
};
use crate::report::LawReport;
use crate::subset::Subset;

/// `h(x) = {P : x ∈ P}` with the outcome of every law that the algebra's
/// tables make checkable.
#[derive(Debug, Clone)]
pub struct StoneEmbedding {
    pub h: Vec<Subset>,
    pub report: LawReport,
}

fn scan1(n: usize, ok: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&x| !ok(x)).map(|x| vec![x])
}

fn scan2(n: usize, ok: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| !ok(a, b))
        .map(|(a, b)| vec![a, b])
}

/// Builds `h` and checks, over all elements and pairs:
///
/// * `open`, `injective`, `h0` (monotone, `h(1) = Ob`), `h1` (meets and joins)
/// * `h2`, `h3` with an `impl` table; `h4` with a `minus` table
/// * `t-image`, `h(⌐⌞x) = I_R(I_S h(x))`, when both are present
/// * `neg` and `wimpl` when the space carries `φ` and the tables exist
pub fn stone_map(alg: &FiniteAlgebra, space: &PrimeFilterSpace) -> Result<StoneEmbedding> {
    if space.carrier() != alg.size() {
        return Err(Error::UniverseMismatch {
            expected: alg.size(),
            found: space.carrier(),
        });
    }
    let r = space.order();
    let k = space.len();
    let n = alg.size();
    let h: Vec<Subset> = alg
        .elements()
        .map(|x| Subset::from_indices(k, (0..k).filter(|&i| space.points()[i].contains(x))))
        .collect::<Result<_>>()?;
    let mut report = LawReport::new();

    report.record("open", scan1(n, |x| is_open(r, &h[x])));
    report.record("injective", scan2(n, |a, b| a == b || h[a] != h[b]));
    let h0 = scan2(n, |a, b| !alg.leq(a, b) || h[a].is_subset(&h[b]))
        .or_else(|| (!h[alg.top()].is_full()).then(|| vec![alg.top()]));
    report.record("h0", h0);
    report.record(
        "h1",
        scan2(n, |a, b| {
            h[alg.meet(a, b)] == &h[a] & &h[b] && h[alg.join(a, b)] == &h[a] | &h[b]
        }),
    );

    // the operations on opens cannot fail once every h(x) is open
    let opens_ok = report.holds("open");
    if alg.has_binary(BinaryOp::Impl) && opens_ok {
        report.record(
            "h2",
            scan1(n, |a| {
                Ok(&h[alg.hneg(a).expect("impl")]) == heyting_negation(r, &h[a]).as_ref()
            }),
        );
        report.record(
            "h3",
            scan2(n, |a, b| {
                Ok(&h[alg.binary(BinaryOp::Impl, a, b).expect("impl")])
                    == heyting_implies(r, &h[a], &h[b]).as_ref()
            }),
        );
    }
    if alg.has_binary(BinaryOp::Minus) && opens_ok {
        report.record(
            "h4",
            scan2(n, |a, b| {
                Ok(&h[alg.binary(BinaryOp::Minus, a, b).expect("minus")])
                    == brouwer_minus(r, &h[a], &h[b]).as_ref()
            }),
        );
    }
    if alg.has_binary(BinaryOp::Impl) && alg.has_binary(BinaryOp::Minus) && opens_ok {
        let s = r.converse();
        report.record(
            "t-image",
            scan1(n, |x| {
                let lhs = &h[alg.hneg(alg.bneg(x).expect("minus")).expect("impl")];
                // sanity: the same value through the opens operations
                let through_ops = brouwer_negation(r, &h[x]).and_then(|b| heyting_negation(r, &b));
                *lhs == interior_of(r, &interior_of(&s, &h[x])) && through_ops.as_ref() == Ok(lhs)
            }),
        );
    }
    if let (Some(phi), true) = (space.phi(), alg.has_unary(UnaryOp::Neg) && opens_ok) {
        report.record(
            "neg",
            scan1(n, |x| {
                Ok(&h[alg.neg(x)]) == demorgan_complement(phi, &h[x]).as_ref()
            }),
        );
        if alg.has_binary(BinaryOp::WImpl) {
            report.record(
                "wimpl",
                scan2(n, |a, b| {
                    Ok(&h[alg.binary(BinaryOp::WImpl, a, b).expect("wimpl")])
                        == weak_implies(r, phi, &h[a], &h[b]).as_ref()
                }),
            );
        }
    }
    Ok(StoneEmbedding { h, report })
}
