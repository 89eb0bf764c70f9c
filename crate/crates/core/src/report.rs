use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one named law checked over a finite scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub holds: bool,
    /// First violating tuple in scan order; absent when the law holds.
    pub witness: Option<Vec<usize>>,
}

/// Named law outcomes, keyed and printed in name order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    laws: BTreeMap<String, LawOutcome>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, law: &str, witness: Option<Vec<usize>>) {
        self.laws.insert(
            law.to_string(),
            LawOutcome {
                holds: witness.is_none(),
                witness,
            },
        );
    }

    pub fn get(&self, law: &str) -> Option<&LawOutcome> {
        self.laws.get(law)
    }

    pub fn holds(&self, law: &str) -> bool {
        self.laws.get(law).is_some_and(|o| o.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.laws.values().all(|o| o.holds)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.laws.keys().map(String::as_str)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &LawOutcome)> {
        self.laws
            .iter()
            .filter(|(_, o)| !o.holds)
            .map(|(k, o)| (k.as_str(), o))
    }

    pub fn len(&self) -> usize {
        self.laws.len()
    }

    pub fn is_empty(&self) -> bool {
        self.laws.is_empty()
    }

    /// `{"laws": {name: bool}, "witness": {name: [..]} | null}`.
    pub fn to_json(&self) -> Value {
        let laws: BTreeMap<&str, bool> = self
            .laws
            .iter()
            .map(|(k, o)| (k.as_str(), o.holds))
            .collect();
        let witness: BTreeMap<&str, &Vec<usize>> = self
            .laws
            .iter()
            .filter_map(|(k, o)| o.witness.as_ref().map(|w| (k.as_str(), w)))
            .collect();
        json!({
            "laws": laws,
            "witness": if witness.is_empty() { Value::Null } else { json!(witness) },
        })
    }
}

/// Scans `tuples` and returns the first one for which `holds` is false.
pub(crate) fn first_failure<I>(
    tuples: I,
    mut holds: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>>
where
    I: IntoIterator<Item = Vec<usize>>,
{
    tuples.into_iter().find(|t| !holds(t))
}

/// All tuples in `0..size` of the given arity, lexicographically.
pub(crate) fn tuples(size: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if arity == 0 {
        1
    } else {
        size.checked_pow(arity as u32).unwrap_or(usize::MAX)
    };
    let total = if size == 0 && arity > 0 { 0 } else { total };
    (0..total).map(move |mut code| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = code % size.max(1);
            code /= size.max(1);
        }
        t
    })
}
