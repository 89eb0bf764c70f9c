//! Finite algebras given by operation tables over the carrier `0..size`.

mod classes;
mod deductive;
mod filters;
mod residual;
pub mod samples;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use classes::{
    check_class, check_deductive_algebra, evaluate_axiom, ClassName, ClassReport, Witness,
};
pub use deductive::{
    deductive_systems, generate_deductive_system, generate_from_system_and_element,
    is_deductive_system, modus_ponens_closure, sequence_characterization, DeductiveMode,
};
pub use filters::{
    extend_to_prime, filters, filters_with_cap, is_filter, is_prime_filter, join_irreducibles,
    prime_filters_via_join_irreducibles, FilterKind, FilterSet, DEFAULT_FILTER_SCAN_CAP,
};
pub use residual::{
    derived_weak_implication, distributivity_witness, pseudo_difference, relative_pseudocomplement,
    with_heyting_brouwer,
};

/// Optional unary operation tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnaryOp {
    /// De Morgan / strong negation `∼`.
    Neg,
    /// Heyting negation `⌐a = a ⇒ 0`.
    HNeg,
    /// Brouwer negation `⌞a = 1 −̇ a`.
    BNeg,
    /// Weak negation `a →w 0`.
    WNeg,
    /// Existential quantifier `∃`.
    Quant,
}

/// Optional binary operation tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryOp {
    /// Heyting implication `⇒`.
    Impl,
    /// Brouwer pseudo-difference `−̇`.
    Minus,
    /// Weak (Nelson) implication `→w`.
    WImpl,
    /// Arrow of a deductive algebra `↣`.
    DImpl,
}

impl UnaryOp {
    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Neg => "neg",
            UnaryOp::HNeg => "hneg",
            UnaryOp::BNeg => "bneg",
            UnaryOp::WNeg => "wneg",
            UnaryOp::Quant => "quant",
        }
    }
}

impl BinaryOp {
    pub fn name(self) -> &'static str {
        match self {
            BinaryOp::Impl => "impl",
            BinaryOp::Minus => "minus",
            BinaryOp::WImpl => "wimpl",
            BinaryOp::DImpl => "dimpl",
        }
    }

    pub fn parse(name: &str) -> Option<BinaryOp> {
        [
            BinaryOp::Impl,
            BinaryOp::Minus,
            BinaryOp::WImpl,
            BinaryOp::DImpl,
        ]
        .into_iter()
        .find(|op| op.name() == name)
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite lattice with bounds and named optional operations.
///
/// The lattice laws and bounds are checked on construction; every table
/// entry is in range. The order is `a ≤ b ⟺ a ∧ b = a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    size: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
    unary: BTreeMap<UnaryOp, Vec<usize>>,
    binary: BTreeMap<BinaryOp, Vec<usize>>,
}

impl FiniteAlgebra {
    pub fn lattice(
        size: usize,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        bot: usize,
        top: usize,
    ) -> Result<Self> {
        let meet = flatten("meet", size, meet)?;
        let join = flatten("join", size, join)?;
        if let Some(&v) = [bot, top].iter().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { index: v, size });
        }
        let alg = FiniteAlgebra {
            size,
            meet,
            join,
            bot,
            top,
            unary: BTreeMap::new(),
            binary: BTreeMap::new(),
        };
        alg.check_lattice()?;
        Ok(alg)
    }

    pub fn from_fns(
        size: usize,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
        bot: usize,
        top: usize,
    ) -> Result<Self> {
        let table = |f: &dyn Fn(usize, usize) -> usize| {
            (0..size)
                .map(|a| (0..size).map(|b| f(a, b)).collect())
                .collect()
        };
        FiniteAlgebra::lattice(size, table(&meet), table(&join), bot, top)
    }

    /// Lattice of a partial order given by `leq`; fails when some pair has
    /// no meet or join.
    pub fn from_order(size: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let below = |x: usize, y: usize| if lower { leq(x, y) } else { leq(y, x) };
            let cands: Vec<usize> = (0..size).filter(|&x| below(x, a) && below(x, b)).collect();
            cands
                .iter()
                .copied()
                .find(|&m| cands.iter().all(|&c| below(c, m)))
        };
        let mut meet = vec![vec![0; size]; size];
        let mut join = vec![vec![0; size]; size];
        for a in 0..size {
            for b in 0..size {
                meet[a][b] = bound(a, b, true).ok_or(Error::LatticeLaw {
                    law: "meet-existence",
                    witness: vec![a, b],
                })?;
                join[a][b] = bound(a, b, false).ok_or(Error::LatticeLaw {
                    law: "join-existence",
                    witness: vec![a, b],
                })?;
            }
        }
        let bot = (0..size)
            .find(|&x| (0..size).all(|y| leq(x, y)))
            .ok_or(Error::LatticeLaw {
                law: "bottom",
                witness: vec![],
            })?;
        let top = (0..size)
            .find(|&x| (0..size).all(|y| leq(y, x)))
            .ok_or(Error::LatticeLaw {
                law: "top",
                witness: vec![],
            })?;
        FiniteAlgebra::lattice(size, meet, join, bot, top)
    }

    fn check_lattice(&self) -> Result<()> {
        let n = self.size;
        let fail = |law, witness| Err(Error::LatticeLaw { law, witness });
        for a in 0..n {
            if self.meet(a, a) != a || self.join(a, a) != a {
                return fail("idempotence", vec![a]);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.meet(a, b) != self.meet(b, a) || self.join(a, b) != self.join(b, a) {
                    return fail("commutativity", vec![a, b]);
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c))
                        || self.join(self.join(a, b), c) != self.join(a, self.join(b, c))
                    {
                        return fail("associativity", vec![a, b, c]);
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.meet(a, self.join(a, b)) != a || self.join(a, self.meet(a, b)) != a {
                    return fail("absorption", vec![a, b]);
                }
            }
        }
        for a in 0..n {
            if self.meet(self.bot, a) != self.bot {
                return fail("bottom", vec![a]);
            }
            if self.meet(a, self.top) != a {
                return fail("top", vec![a]);
            }
        }
        Ok(())
    }

    pub fn with_unary(mut self, op: UnaryOp, table: Vec<usize>) -> Result<Self> {
        if table.len() != self.size {
            return Err(Error::TableShape {
                table: op.name().into(),
                expected: self.size,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= self.size) {
            return Err(Error::OutOfRange {
                index: bad,
                size: self.size,
            });
        }
        self.unary.insert(op, table);
        self.check_derived()?;
        Ok(self)
    }

    pub fn with_binary(mut self, op: BinaryOp, table: Vec<Vec<usize>>) -> Result<Self> {
        let flat = flatten(op.name(), self.size, table)?;
        self.binary.insert(op, flat);
        self.check_derived()?;
        Ok(self)
    }

    pub fn with_binary_fn(self, op: BinaryOp, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = self.size;
        let table = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        self.with_binary(op, table)
    }

    pub fn without_binary(mut self, op: BinaryOp) -> Self {
        self.binary.remove(&op);
        self
    }

    /// Explicit negation tables must agree with the values derived from
    /// the implications they abbreviate.
    fn check_derived(&self) -> Result<()> {
        let pairs = [
            (UnaryOp::HNeg, BinaryOp::Impl, "hneg"),
            (UnaryOp::BNeg, BinaryOp::Minus, "bneg"),
            (UnaryOp::WNeg, BinaryOp::WImpl, "wneg"),
        ];
        for (u, b, name) in pairs {
            if let (Some(explicit), Some(_)) = (self.unary.get(&u), self.binary.get(&b)) {
                for (a, &e) in explicit.iter().enumerate() {
                    let derived = match u {
                        UnaryOp::BNeg => self.binary(b, self.top, a),
                        _ => self.binary(b, a, self.bot),
                    };
                    if Some(e) != derived {
                        return Err(Error::InconsistentTable {
                            table: name,
                            witness: vec![a],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    pub fn unary(&self, op: UnaryOp) -> Option<&[usize]> {
        self.unary.get(&op).map(Vec::as_slice)
    }

    pub fn has_unary(&self, op: UnaryOp) -> bool {
        self.unary.contains_key(&op)
    }

    pub fn has_binary(&self, op: BinaryOp) -> bool {
        self.binary.contains_key(&op)
    }

    pub fn binary(&self, op: BinaryOp, a: usize, b: usize) -> Option<usize> {
        self.binary.get(&op).map(|t| t[a * self.size + b])
    }

    /// `∼a`; panics without a `neg` table.
    pub fn neg(&self, a: usize) -> usize {
        self.unary[&UnaryOp::Neg][a]
    }

    /// `⌐a`, explicit or `a ⇒ 0`.
    pub fn hneg(&self, a: usize) -> Option<usize> {
        self.unary(UnaryOp::HNeg)
            .map(|t| t[a])
            .or_else(|| self.binary(BinaryOp::Impl, a, self.bot))
    }

    /// `⌞a`, explicit or `1 −̇ a`.
    pub fn bneg(&self, a: usize) -> Option<usize> {
        self.unary(UnaryOp::BNeg)
            .map(|t| t[a])
            .or_else(|| self.binary(BinaryOp::Minus, self.top, a))
    }

    /// `⌐w a`, explicit or `a →w 0`.
    pub fn wneg(&self, a: usize) -> Option<usize> {
        self.unary(UnaryOp::WNeg)
            .map(|t| t[a])
            .or_else(|| self.binary(BinaryOp::WImpl, a, self.bot))
    }

    /// The Boolean complement of `a`, when it exists (and is unique).
    pub fn complement(&self, a: usize) -> Option<usize> {
        let mut found =
            (0..self.size).filter(|&b| self.meet(a, b) == self.bot && self.join(a, b) == self.top);
        let first = found.next()?;
        found.next().is_none().then_some(first)
    }

    /// `∀a = −∃−a`, when `∃` is present and complements exist.
    pub fn forall(&self, a: usize) -> Option<usize> {
        let quant = self.unary(UnaryOp::Quant)?;
        self.complement(quant[self.complement(a)?])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn to_doc(&self) -> AlgebraDoc {
        let n = self.size;
        let unflat = |t: &[usize]| {
            t.chunks(n.max(1))
                .map(<[usize]>::to_vec)
                .collect::<Vec<_>>()
        };
        let u = |op| self.unary(op).map(<[usize]>::to_vec);
        let b = |op| self.binary.get(&op).map(|t| unflat(t));
        AlgebraDoc {
            size: n,
            meet: unflat(&self.meet),
            join: unflat(&self.join),
            bot: self.bot,
            top: self.top,
            ops: OpsDoc {
                neg: u(UnaryOp::Neg),
                hneg: u(UnaryOp::HNeg),
                bneg: u(UnaryOp::BNeg),
                wneg: u(UnaryOp::WNeg),
                quant: u(UnaryOp::Quant),
                impl_: b(BinaryOp::Impl),
                minus: b(BinaryOp::Minus),
                wimpl: b(BinaryOp::WImpl),
                dimpl: b(BinaryOp::DImpl),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("serializable")
    }
}

fn flatten(name: &str, size: usize, table: Vec<Vec<usize>>) -> Result<Vec<usize>> {
    if table.len() != size {
        return Err(Error::TableShape {
            table: name.into(),
            expected: size,
            found: table.len(),
        });
    }
    let mut flat = Vec::with_capacity(size * size);
    for row in table {
        if row.len() != size {
            return Err(Error::TableShape {
                table: name.into(),
                expected: size,
                found: row.len(),
            });
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= size) {
            return Err(Error::OutOfRange { index: bad, size });
        }
        flat.extend(row);
    }
    Ok(flat)
}

/// JSON form of a [`FiniteAlgebra`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub size: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bot: usize,
    pub top: usize,
    #[serde(default)]
    pub ops: OpsDoc,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hneg: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bneg: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wneg: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quant: Option<Vec<usize>>,
    #[serde(rename = "impl", default, skip_serializing_if = "Option::is_none")]
    pub impl_: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wimpl: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimpl: Option<Vec<Vec<usize>>>,
}

impl AlgebraDoc {
    pub fn build(self) -> Result<FiniteAlgebra> {
        let mut alg = FiniteAlgebra::lattice(self.size, self.meet, self.join, self.bot, self.top)?;
        let ops = self.ops;
        // binary tables first so that explicit negations are compared against them
        for (op, t) in [
            (BinaryOp::Impl, ops.impl_),
            (BinaryOp::Minus, ops.minus),
            (BinaryOp::WImpl, ops.wimpl),
            (BinaryOp::DImpl, ops.dimpl),
        ] {
            if let Some(t) = t {
                alg = alg.with_binary(op, t)?;
            }
        }
        for (op, t) in [
            (UnaryOp::Neg, ops.neg),
            (UnaryOp::HNeg, ops.hneg),
            (UnaryOp::BNeg, ops.bneg),
            (UnaryOp::WNeg, ops.wneg),
            (UnaryOp::Quant, ops.quant),
        ] {
            if let Some(t) = t {
                alg = alg.with_unary(op, t)?;
            }
        }
        Ok(alg)
    }
}

/// Parses and validates an algebra JSON document.
pub fn load_algebra(json: &str) -> Result<FiniteAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    doc.build()
}
