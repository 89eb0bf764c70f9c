//! Finite preorders stored as per-point up-set bitmasks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_UNIVERSE};

/// How [`build_preorder`] treats a relation that is not already a preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    /// Reject input whose reflexive hull is not transitive.
    Validate,
    /// Return the reflexive-transitive closure.
    Close,
}

/// A reflexive, transitive relation on `0..n`.
///
/// `up(x)` is the set `R(x) = {y : x R y}`. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Preorder {
    up: Vec<Subset>,
}

pub fn build_preorder(n: usize, pairs: &[(usize, usize)], mode: BuildMode) -> Result<Preorder> {
    if n > MAX_UNIVERSE {
        return Err(Error::Capacity {
            what: "preorder",
            size: n,
            cap: MAX_UNIVERSE,
        });
    }
    let mut up: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
    for &(x, y) in pairs {
        for i in [x, y] {
            if i >= n {
                return Err(Error::OutOfRange { index: i, size: n });
            }
        }
        up[x].insert(y);
    }
    let closed = transitive_closure(&up);
    if mode == BuildMode::Validate && closed != up {
        let witness = first_missing_pair(&up, &closed);
        return Err(Error::NotTransitive { witness });
    }
    Ok(Preorder { up: closed })
}

fn transitive_closure(up: &[Subset]) -> Vec<Subset> {
    let mut up = up.to_vec();
    for k in 0..up.len() {
        let via = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                *row = row.union(&via);
            }
        }
    }
    up
}

fn first_missing_pair(given: &[Subset], closed: &[Subset]) -> (usize, usize) {
    for (x, (g, c)) in given.iter().zip(closed).enumerate() {
        if let Some(y) = c.difference(g).iter().next() {
            return (x, y);
        }
    }
    unreachable!("closure differs from input but no missing pair was found")
}

impl Preorder {
    pub fn identity(n: usize) -> Self {
        Preorder {
            up: (0..n).map(|x| Subset::singleton(n, x)).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Preorder {
            up: vec![Subset::full(n); n],
        }
    }

    /// Chain `0 R 1 R ... R n-1`.
    pub fn chain(n: usize) -> Self {
        Preorder {
            up: (0..n)
                .map(|x| Subset::from_indices(n, x..n).expect("in range"))
                .collect(),
        }
    }

    /// Preorder given by a predicate `x R y`, validated.
    pub fn from_fn(n: usize, relates: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if relates(x, y) {
                    pairs.push((x, y));
                }
            }
        }
        build_preorder(n, &pairs, BuildMode::Validate)
    }

    /// Preorder from explicit up-sets, validated against the invariants.
    pub fn from_up_sets(up: Vec<Subset>) -> Result<Self> {
        let n = up.len();
        for (x, s) in up.iter().enumerate() {
            if s.universe() != n {
                return Err(Error::UniverseMismatch {
                    expected: n,
                    found: s.universe(),
                });
            }
            if !s.contains(x) {
                return Err(Error::Precondition(format!(
                    "up-set of {x} does not contain {x}"
                )));
            }
        }
        let closed = transitive_closure(&up);
        if closed != up {
            return Err(Error::NotTransitive {
                witness: first_missing_pair(&up, &closed),
            });
        }
        Ok(Preorder { up })
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    /// `R(x)`; panics if `x` is out of range.
    pub fn up(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    pub fn up_set(&self, x: usize) -> Result<&Subset> {
        self.up.get(x).ok_or(Error::OutOfRange {
            index: x,
            size: self.len(),
        })
    }

    pub fn up_sets(&self) -> &[Subset] {
        &self.up
    }

    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// The converse relation `S`, with `S(x) = {y : y R x}`.
    pub fn converse(&self) -> Preorder {
        let n = self.len();
        let mut down: Vec<Subset> = vec![Subset::empty(n); n];
        for (x, row) in self.up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        Preorder { up: down }
    }

    /// `R ∩ S`: the equivalence of mutually related points.
    pub fn kernel_equivalence(&self) -> Preorder {
        let conv = self.converse();
        Preorder {
            up: self
                .up
                .iter()
                .zip(&conv.up)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.converse()
    }

    /// Every related pair, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Related pairs `(x, y)` with `x != y` and no point strictly between them
    /// (only meaningful on the quotient by the kernel; equivalent points are
    /// reported once, via their least representative).
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let rep: Vec<usize> = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| self.relates(x, y) && self.relates(y, x))
                    .expect("reflexive")
            })
            .collect();
        let mut out = Vec::new();
        for x in (0..n).filter(|&x| rep[x] == x) {
            for y in (0..n).filter(|&y| rep[y] == y && y != x && self.relates(x, y)) {
                let between = (0..n).any(|z| {
                    rep[z] == z && z != x && z != y && self.relates(x, z) && self.relates(z, y)
                });
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// JSON form `{"n": int, "pairs": [[x, y], ...]}` with optional point labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreorderDoc {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PreorderDoc {
    pub fn build(&self, mode: BuildMode) -> Result<Preorder> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::TableShape {
                    table: "labels".into(),
                    expected: self.n,
                    found: labels.len(),
                });
            }
        }
        build_preorder(self.n, &self.pairs, mode)
    }

    pub fn from_preorder(r: &Preorder, labels: Option<Vec<String>>) -> Self {
        PreorderDoc {
            n: r.len(),
            pairs: r.pairs(),
            labels,
        }
    }
}
