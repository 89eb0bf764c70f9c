//! Pawlak information systems with set-valued cells, and rough
//! approximations over any preorder.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::Preorder;
use crate::rauszer::{closure_of, interior_of};
use crate::subset::Subset;

/// Objects × attributes → sets of value tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationSystem {
    objects: Vec<String>,
    attributes: Vec<String>,
    cells: Vec<Vec<BTreeSet<String>>>,
}

impl InformationSystem {
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        cells: Vec<Vec<BTreeSet<String>>>,
    ) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::InfoSystem("no objects".into()));
        }
        if attributes.is_empty() {
            return Err(Error::InfoSystem("no attributes".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = objects.iter().find(|o| !seen.insert(o.as_str())) {
            return Err(Error::InfoSystem(format!("duplicate object label '{dup}'")));
        }
        if cells.len() != objects.len() {
            return Err(Error::InfoSystem(format!(
                "{} rows for {} objects",
                cells.len(),
                objects.len()
            )));
        }
        if let Some((i, row)) = cells
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != attributes.len())
        {
            return Err(Error::InfoSystem(format!(
                "row '{}' has {} cells, expected {}",
                objects[i],
                row.len(),
                attributes.len()
            )));
        }
        Ok(Self {
            objects,
            attributes,
            cells,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// `f(x, a)`.
    pub fn value(&self, x: usize, a: usize) -> &BTreeSet<String> {
        &self.cells[x][a]
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// Subset of objects named by `labels`.
    pub fn select<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut out = Subset::empty(self.len());
        for l in labels {
            let l = l.as_ref();
            let i = self
                .objects
                .iter()
                .position(|o| o == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            out.insert(i);
        }
        Ok(out)
    }

    pub fn labels_of(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.objects[i].clone()).collect()
    }

    /// A random system: up to `max_objects` objects, `max_attrs`
    /// attributes, cells drawn from the powerset of `max_tokens` tokens.
    pub fn random<R: Rng>(
        rng: &mut R,
        max_objects: usize,
        max_attrs: usize,
        max_tokens: usize,
    ) -> Self {
        let n = rng.gen_range(1..=max_objects);
        let m = rng.gen_range(1..=max_attrs);
        let objects = (0..n).map(|i| format!("o{}", i + 1)).collect();
        let attributes = (0..m).map(|a| format!("a{}", a + 1)).collect();
        let cells = (0..n)
            .map(|_| {
                (0..m)
                    .map(|_| {
                        let mask: u32 = rng.gen_range(0..(1 << max_tokens));
                        (0..max_tokens)
                            .filter(|t| mask >> t & 1 == 1)
                            .map(|t| format!("v{t}"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(objects, attributes, cells).expect("well formed")
    }
}

/// Header `object,<attr>...`, one row per object, cells are `;`-separated
/// tokens. Tokens are trimmed; empty tokens are dropped.
pub fn parse_info_system(text: &str) -> Result<InformationSystem> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::Parse(e.to_string()))?
        .clone();
    if header.is_empty() || header.iter().all(|h| h.trim().is_empty()) {
        return Err(Error::InfoSystem("empty header".into()));
    }
    let attributes: Vec<String> = header
        .iter()
        .skip(1)
        .map(|h| h.trim().to_string())
        .collect();
    if attributes.is_empty() {
        return Err(Error::InfoSystem("no attributes".into()));
    }
    let mut objects = Vec::new();
    let mut cells = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if rec.len() != header.len() {
            return Err(Error::InfoSystem(format!(
                "ragged row {}: {} fields, header has {}",
                line + 2,
                rec.len(),
                header.len()
            )));
        }
        objects.push(rec[0].trim().to_string());
        cells.push(
            rec.iter()
                .skip(1)
                .map(|c| {
                    c.split(';')
                        .map(str::trim)
                        .filter(|t| !t.is_empty())
                        .map(String::from)
                        .collect()
                })
                .collect(),
        );
    }
    InformationSystem::new(objects, attributes, cells)
}

/// `x R_P y` iff `f(x, a) = f(y, a)` for every attribute.
pub fn indiscernibility(s: &InformationSystem) -> Preorder {
    Preorder::from_fn(s.len(), |x, y| s.cells[x] == s.cells[y]).expect("equality is an equivalence")
}

/// `x R y` iff `f(x, a) ⊆ f(y, a)` for every attribute.
pub fn inclusion_preorder(s: &InformationSystem) -> Preorder {
    Preorder::from_fn(s.len(), |x, y| {
        s.cells[x]
            .iter()
            .zip(&s.cells[y])
            .all(|(a, b)| a.is_subset(b))
    })
    .expect("inclusion is a preorder")
}

/// Lower and upper approximation of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub lower: Subset,
    pub upper: Subset,
    pub definable: bool,
}

#[derive(Serialize)]
struct LabeledApproximation<'a> {
    lower: Vec<&'a str>,
    upper: Vec<&'a str>,
    definable: bool,
}

impl Approximation {
    /// `{"lower": [..], "upper": [..], "definable": bool}` with points named by `labels`.
    pub fn to_json(&self, labels: &[String]) -> String {
        let names = |s: &Subset| s.iter().map(|i| labels[i].as_str()).collect();
        serde_json::to_string(&LabeledApproximation {
            lower: names(&self.lower),
            upper: names(&self.upper),
            definable: self.definable,
        })
        .expect("serializable")
    }
}

/// `lower = I_R X`, `upper = C_R X`; `X` is definable when they agree.
pub fn approximate(r: &Preorder, x: &Subset) -> Result<Approximation> {
    if x.universe() != r.len() {
        return Err(Error::UniverseMismatch {
            expected: r.len(),
            found: x.universe(),
        });
    }
    let lower = interior_of(r, x);
    let upper = closure_of(r, x);
    let definable = lower == upper;
    Ok(Approximation {
        lower,
        upper,
        definable,
    })
}
