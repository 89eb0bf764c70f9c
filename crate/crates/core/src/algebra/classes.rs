//! Exhaustive class-membership checks.
//!
//! Each class is a list of axioms; an axiom of arity `k` is checked on all
//! `size^k` tuples in lexicographic order. The first failing tuple of the
//! first failing axiom is the witness.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{BinaryOp, FiniteAlgebra, UnaryOp};
use crate::error::{Error, Result};
use crate::report::{first_failure, tuples};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassName {
    Distributive,
    DeMorgan,
    Kleene,
    Heyting,
    Brouwer,
    HeytingBrouwer,
    SymmetricHeyting,
    Nelson,
    Lukasiewicz3,
    MonadicBoolean,
    Deductive,
}

impl ClassName {
    pub const ALL: [ClassName; 11] = [
        ClassName::Distributive,
        ClassName::DeMorgan,
        ClassName::Kleene,
        ClassName::Heyting,
        ClassName::Brouwer,
        ClassName::HeytingBrouwer,
        ClassName::SymmetricHeyting,
        ClassName::Nelson,
        ClassName::Lukasiewicz3,
        ClassName::MonadicBoolean,
        ClassName::Deductive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::Distributive => "distributive",
            ClassName::DeMorgan => "de-morgan",
            ClassName::Kleene => "kleene",
            ClassName::Heyting => "heyting",
            ClassName::Brouwer => "brouwer",
            ClassName::HeytingBrouwer => "heyting-brouwer",
            ClassName::SymmetricHeyting => "symmetric-heyting",
            ClassName::Nelson => "nelson",
            ClassName::Lukasiewicz3 => "lukasiewicz3",
            ClassName::MonadicBoolean => "monadic-boolean",
            ClassName::Deductive => "deductive",
        }
    }

    fn axioms(self) -> &'static [&'static str] {
        match self {
            ClassName::Distributive => &["distributivity"],
            ClassName::DeMorgan => &["distributivity", "DM1", "DM2"],
            ClassName::Kleene => &["distributivity", "DM1", "DM2", "K"],
            ClassName::Heyting => &["H1", "H2"],
            ClassName::Brouwer => &["B1", "B2"],
            ClassName::HeytingBrouwer => &["H1", "H2", "B1", "B2"],
            ClassName::SymmetricHeyting => &["H1", "H2", "SH2", "SH3"],
            ClassName::Nelson => &[
                "distributivity",
                "DM1",
                "DM2",
                "K",
                "neg-top",
                "N1",
                "N2",
                "N3",
            ],
            ClassName::Lukasiewicz3 => &["H1", "H2", "B1", "B2", "T"],
            ClassName::MonadicBoolean => &["distributivity", "complemented", "E0", "E1", "E2"],
            ClassName::Deductive => &["I1", "I2", "I3"],
        }
    }
}

impl fmt::Display for ClassName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        let alias = match key.as_str() {
            "demorgan" => "de-morgan",
            "hb" | "h-b" => "heyting-brouwer",
            "symmetrical-heyting" | "sym-heyting" => "symmetric-heyting",
            "lukasiewicz" | "lukasiewicz-3" => "lukasiewicz3",
            "monadic" => "monadic-boolean",
            other => other,
        };
        ClassName::ALL
            .into_iter()
            .find(|c| c.as_str() == alias)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: String,
    pub tuple: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    #[serde(serialize_with = "ser_class")]
    pub class: ClassName,
    pub holds: bool,
    pub witness: Option<Witness>,
}

fn ser_class<S: serde::Serializer>(c: &ClassName, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(c.as_str())
}

impl ClassReport {
    /// True when the witness (if any) still fails its axiom.
    pub fn recheck(&self, alg: &FiniteAlgebra) -> Result<bool> {
        match &self.witness {
            None => Ok(self.holds),
            Some(w) => Ok(!self.holds && !evaluate_axiom(alg, &w.axiom, &w.tuple)?),
        }
    }
}

#[derive(Clone, Copy)]
enum Need {
    Unary(UnaryOp),
    Binary(BinaryOp),
}

struct Axiom {
    name: &'static str,
    arity: usize,
    needs: &'static [Need],
    check: fn(&FiniteAlgebra, &[usize]) -> bool,
}

const NEG: Need = Need::Unary(UnaryOp::Neg);
const QUANT: Need = Need::Unary(UnaryOp::Quant);
const IMPL: Need = Need::Binary(BinaryOp::Impl);
const MINUS: Need = Need::Binary(BinaryOp::Minus);
const WIMPL: Need = Need::Binary(BinaryOp::WImpl);
const DIMPL: Need = Need::Binary(BinaryOp::DImpl);

fn imp(a: &FiniteAlgebra, x: usize, y: usize) -> usize {
    a.binary(BinaryOp::Impl, x, y).expect("impl table")
}
fn minus(a: &FiniteAlgebra, x: usize, y: usize) -> usize {
    a.binary(BinaryOp::Minus, x, y).expect("minus table")
}
fn wimpl(a: &FiniteAlgebra, x: usize, y: usize) -> usize {
    a.binary(BinaryOp::WImpl, x, y).expect("wimpl table")
}
fn dimpl(a: &FiniteAlgebra, x: usize, y: usize) -> usize {
    a.binary(BinaryOp::DImpl, x, y).expect("dimpl table")
}
fn quant(a: &FiniteAlgebra, x: usize) -> usize {
    a.unary(UnaryOp::Quant).expect("quant table")[x]
}

const AXIOMS: &[Axiom] = &[
    Axiom {
        name: "distributivity",
        arity: 3,
        needs: &[],
        check: |a, t| {
            a.meet(t[0], a.join(t[1], t[2])) == a.join(a.meet(t[0], t[1]), a.meet(t[0], t[2]))
        },
    },
    Axiom {
        name: "DM1",
        arity: 1,
        needs: &[NEG],
        check: |a, t| a.neg(a.neg(t[0])) == t[0],
    },
    Axiom {
        name: "DM2",
        arity: 2,
        needs: &[NEG],
        check: |a, t| a.neg(a.meet(t[0], t[1])) == a.join(a.neg(t[0]), a.neg(t[1])),
    },
    Axiom {
        name: "K",
        arity: 2,
        needs: &[NEG],
        check: |a, t| a.leq(a.meet(t[0], a.neg(t[0])), a.join(t[1], a.neg(t[1]))),
    },
    Axiom {
        name: "H1",
        arity: 2,
        needs: &[IMPL],
        check: |a, t| a.leq(a.meet(t[0], imp(a, t[0], t[1])), t[1]),
    },
    Axiom {
        name: "H2",
        arity: 3,
        needs: &[IMPL],
        check: |a, t| !a.leq(a.meet(t[0], t[2]), t[1]) || a.leq(t[2], imp(a, t[0], t[1])),
    },
    Axiom {
        name: "B1",
        arity: 2,
        needs: &[MINUS],
        check: |a, t| a.leq(t[0], a.join(t[1], minus(a, t[0], t[1]))),
    },
    Axiom {
        name: "B2",
        arity: 3,
        needs: &[MINUS],
        check: |a, t| !a.leq(t[0], a.join(t[1], t[2])) || a.leq(minus(a, t[0], t[1]), t[2]),
    },
    Axiom {
        name: "SH2",
        arity: 1,
        needs: &[NEG],
        check: |a, t| a.neg(a.neg(t[0])) == t[0],
    },
    Axiom {
        name: "SH3",
        arity: 2,
        needs: &[NEG],
        check: |a, t| a.neg(a.meet(t[0], t[1])) == a.join(a.neg(t[0]), a.neg(t[1])),
    },
    Axiom {
        name: "neg-top",
        arity: 0,
        needs: &[NEG],
        check: |a, _| a.neg(a.top()) == a.bot(),
    },
    Axiom {
        name: "N1",
        arity: 1,
        needs: &[WIMPL],
        check: |a, t| wimpl(a, t[0], t[0]) == a.top(),
    },
    Axiom {
        name: "N2",
        arity: 2,
        needs: &[NEG, WIMPL],
        check: |a, t| a.meet(t[0], wimpl(a, t[0], t[1])) == a.meet(t[0], a.join(a.neg(t[0]), t[1])),
    },
    Axiom {
        name: "N3",
        arity: 3,
        needs: &[WIMPL],
        check: |a, t| wimpl(a, t[0], wimpl(a, t[1], t[2])) == wimpl(a, a.meet(t[0], t[1]), t[2]),
    },
    Axiom {
        name: "T",
        arity: 2,
        needs: &[IMPL, MINUS],
        check: |a, t| {
            let nn = a.hneg(a.bneg(t[0]).expect("bneg")).expect("hneg");
            a.join(imp(a, t[0], t[1]), imp(a, t[1], nn)) == a.top()
        },
    },
    Axiom {
        name: "complemented",
        arity: 1,
        needs: &[],
        check: |a, t| a.complement(t[0]).is_some(),
    },
    Axiom {
        name: "E0",
        arity: 0,
        needs: &[QUANT],
        check: |a, _| quant(a, a.bot()) == a.bot(),
    },
    Axiom {
        name: "E1",
        arity: 1,
        needs: &[QUANT],
        check: |a, t| a.meet(t[0], quant(a, t[0])) == t[0],
    },
    Axiom {
        name: "E2",
        arity: 2,
        needs: &[QUANT],
        check: |a, t| {
            quant(a, a.meet(t[0], quant(a, t[1]))) == a.meet(quant(a, t[0]), quant(a, t[1]))
        },
    },
    Axiom {
        name: "I1",
        arity: 2,
        needs: &[DIMPL],
        check: |a, t| dimpl(a, t[0], dimpl(a, t[1], t[0])) == a.top(),
    },
    Axiom {
        name: "I2",
        arity: 3,
        needs: &[DIMPL],
        check: |a, t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = dimpl(a, x, dimpl(a, y, z));
            let rhs = dimpl(a, dimpl(a, x, y), dimpl(a, x, z));
            dimpl(a, lhs, rhs) == a.top()
        },
    },
    Axiom {
        name: "I3",
        arity: 1,
        needs: &[DIMPL],
        check: |a, t| dimpl(a, a.top(), t[0]) != a.top() || t[0] == a.top(),
    },
];

fn axiom(name: &str) -> Option<&'static Axiom> {
    AXIOMS.iter().find(|ax| ax.name == name)
}

fn missing_table(alg: &FiniteAlgebra, ax: &Axiom) -> Option<&'static str> {
    ax.needs.iter().find_map(|need| match *need {
        Need::Unary(op) if !alg.has_unary(op) => Some(op.name()),
        Need::Binary(op) if !alg.has_binary(op) => Some(op.name()),
        _ => None,
    })
}

/// Evaluates one named axiom at one tuple.
pub fn evaluate_axiom(alg: &FiniteAlgebra, name: &str, tuple: &[usize]) -> Result<bool> {
    let ax = axiom(name).ok_or_else(|| Error::Precondition(format!("unknown axiom '{name}'")))?;
    if let Some(table) = missing_table(alg, ax) {
        return Err(Error::MissingTable {
            class: name.to_string(),
            table,
        });
    }
    if tuple.len() != ax.arity {
        return Err(Error::Precondition(format!(
            "axiom '{name}' takes {} arguments",
            ax.arity
        )));
    }
    if let Some(&bad) = tuple.iter().find(|&&x| x >= alg.size()) {
        return Err(Error::OutOfRange {
            index: bad,
            size: alg.size(),
        });
    }
    Ok((ax.check)(alg, tuple))
}

pub fn check_class(alg: &FiniteAlgebra, class: ClassName) -> Result<ClassReport> {
    let axioms: Vec<&Axiom> = class
        .axioms()
        .iter()
        .map(|n| axiom(n).expect("known axiom"))
        .collect();
    for ax in &axioms {
        if let Some(table) = missing_table(alg, ax) {
            return Err(Error::MissingTable {
                class: class.as_str().to_string(),
                table,
            });
        }
    }
    for ax in axioms {
        if let Some(tuple) = first_failure(tuples(alg.size(), ax.arity), |t| (ax.check)(alg, t)) {
            return Ok(ClassReport {
                class,
                holds: false,
                witness: Some(Witness {
                    axiom: ax.name.to_string(),
                    tuple,
                }),
            });
        }
    }
    Ok(ClassReport {
        class,
        holds: true,
        witness: None,
    })
}

/// Checks the deductive-algebra axioms for the given arrow table.
pub fn check_deductive_algebra(alg: &FiniteAlgebra, arrow: BinaryOp) -> Result<ClassReport> {
    if !alg.has_binary(arrow) {
        return Err(Error::MissingTable {
            class: ClassName::Deductive.as_str().into(),
            table: arrow.name(),
        });
    }
    let table = alg
        .elements()
        .map(|a| {
            alg.elements()
                .map(|b| alg.binary(arrow, a, b).expect("present"))
                .collect()
        })
        .collect();
    let copy = alg.clone().with_binary(BinaryOp::DImpl, table)?;
    check_class(&copy, ClassName::Deductive)
}

#[cfg(test)]
mod tests {
    use super::super::{samples, with_heyting_brouwer};
    use super::*;

    fn holds(alg: &FiniteAlgebra, class: ClassName) -> bool {
        check_class(alg, class).unwrap().holds
    }

    #[test]
    fn kleene_three_chain() {
        let k3 = samples::kleene_chain(3);
        assert!(holds(&k3, ClassName::DeMorgan));
        assert!(holds(&k3, ClassName::Kleene));
    }

    #[test]
    fn diamond_fixing_atoms_is_de_morgan_not_kleene() {
        let d = samples::diamond_fixing_atoms();
        assert!(holds(&d, ClassName::DeMorgan));
        let report = check_class(&d, ClassName::Kleene).unwrap();
        assert!(!report.holds);
        assert_eq!(
            report.witness,
            Some(Witness {
                axiom: "K".into(),
                tuple: vec![1, 2]
            })
        );
        assert!(report.recheck(&d).unwrap());
    }

    #[test]
    fn three_chain_is_lukasiewicz() {
        assert!(holds(&samples::lukasiewicz3(), ClassName::Lukasiewicz3));
        let four = samples::heyting_brouwer_chain(4);
        assert!(holds(&four, ClassName::HeytingBrouwer));
        let report = check_class(&four, ClassName::Lukasiewicz3).unwrap();
        assert_eq!(report.witness.as_ref().map(|w| w.axiom.as_str()), Some("T"));
        assert!(report.recheck(&four).unwrap());
    }

    #[test]
    fn missing_tables_are_errors() {
        let err = check_class(&samples::kleene_chain(3), ClassName::Nelson).unwrap_err();
        assert_eq!(
            err,
            Error::MissingTable {
                class: "nelson".into(),
                table: "wimpl"
            }
        );
        assert!(check_class(&samples::chain(2), ClassName::Heyting).is_err());
    }

    #[test]
    fn nelson_chains() {
        for n in 2..=5 {
            assert!(
                holds(&samples::nelson_chain(n), ClassName::Nelson),
                "chain {n}"
            );
        }
    }

    #[test]
    fn heyting_and_brouwer_classes() {
        let alg = with_heyting_brouwer(&samples::product(2, 3)).unwrap();
        assert!(holds(&alg, ClassName::Heyting));
        assert!(holds(&alg, ClassName::Brouwer));
        assert!(holds(&alg, ClassName::HeytingBrouwer));
        assert!(check_deductive_algebra(&alg, BinaryOp::Impl).unwrap().holds);
        // a wrong implication table is caught by residuation
        let bogus = alg
            .clone()
            .with_binary_fn(BinaryOp::Impl, |_, b| b)
            .unwrap();
        assert!(!holds(&bogus, ClassName::Heyting));
    }

    #[test]
    fn monadic_boolean() {
        let m = samples::simple_monadic();
        assert!(holds(&m, ClassName::MonadicBoolean));
        for a in m.elements() {
            assert_eq!(m.forall(a), Some(if a == 3 { 3 } else { 0 }));
        }
        let not_boolean = samples::chain(3)
            .with_unary(UnaryOp::Quant, vec![0, 2, 2])
            .unwrap();
        let r = check_class(&not_boolean, ClassName::MonadicBoolean).unwrap();
        assert_eq!(r.witness.unwrap().axiom, "complemented");
    }

    #[test]
    fn class_names_parse() {
        for c in ClassName::ALL {
            assert_eq!(c.as_str().parse::<ClassName>().unwrap(), c);
        }
        assert_eq!(
            "demorgan".parse::<ClassName>().unwrap(),
            ClassName::DeMorgan
        );
        assert!("nope".parse::<ClassName>().is_err());
    }

    #[test]
    fn report_serializes() {
        let r = check_class(&samples::diamond_fixing_atoms(), ClassName::Kleene).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["class"], "kleene");
        assert_eq!(v["witness"]["axiom"], "K");
        assert_eq!(v["witness"]["tuple"], serde_json::json!([1, 2]));
    }
}
