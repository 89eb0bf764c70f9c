//! The powerset of a preorder's points with its interior and closure
//! operators, the lattice of open sets, and the operations defined on it.
//!
//! For a preorder `R` with up-sets `R(x)`:
//!
//! * `closure(X)  = ⋃ { R(x) : x ∈ X }`
//! * `interior(X) = ⋃ { R(x) : R(x) ⊆ X }`
//!
//! A set is open iff it is closed, so the opens are exactly the up-closed
//! sets. On the opens:
//!
//! * `G ⇒ H  = interior(-G ∪ H)` (Heyting implication)
//! * `G −̇ H = closure(G ∩ -H)` (Brouwer pseudo-difference)
//! * `∼X = -v(X)` for an antitone involution `v` of the points
//! * `G →w H = G ⇒ (∼G ∪ H)` (weak implication)

use std::collections::HashSet;

use crate::algebra::{BinaryOp, FiniteAlgebra, UnaryOp};
use crate::error::{Error, Result};
use crate::order::Preorder;
use crate::report::LawReport;
use crate::subset::Subset;

/// Default limit on the number of open sets [`opens`] will materialize.
pub const DEFAULT_OPENS_LIMIT: usize = 1 << 20;

fn check_universe(r: &Preorder, x: &Subset) -> Result<()> {
    if x.universe() != r.len() {
        return Err(Error::UniverseMismatch {
            expected: r.len(),
            found: x.universe(),
        });
    }
    Ok(())
}

pub(crate) fn closure_of(r: &Preorder, x: &Subset) -> Subset {
    let mut out = Subset::empty(r.len());
    for p in x.iter() {
        out = out.union(r.up(p));
    }
    out
}

pub(crate) fn interior_of(r: &Preorder, x: &Subset) -> Subset {
    let mut out = Subset::empty(r.len());
    for up in r.up_sets() {
        if up.is_subset(x) {
            out = out.union(up);
        }
    }
    out
}

pub fn closure(r: &Preorder, x: &Subset) -> Result<Subset> {
    check_universe(r, x)?;
    Ok(closure_of(r, x))
}

pub fn interior(r: &Preorder, x: &Subset) -> Result<Subset> {
    check_universe(r, x)?;
    Ok(interior_of(r, x))
}

pub fn is_open(r: &Preorder, g: &Subset) -> bool {
    g.universe() == r.len() && open_witness(r, g).is_none()
}

/// A point of `g` whose up-set leaves `g`.
fn open_witness(r: &Preorder, g: &Subset) -> Option<usize> {
    g.iter().find(|&x| !r.up(x).is_subset(g))
}

fn require_open(r: &Preorder, g: &Subset, argument: &'static str) -> Result<()> {
    check_universe(r, g)?;
    match open_witness(r, g) {
        Some(point) => Err(Error::NotOpen { argument, point }),
        None => Ok(()),
    }
}

/// The open sets of a preorder, sorted ascending by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpensLattice {
    base: Preorder,
    opens: Vec<Subset>,
}

pub fn opens(r: &Preorder) -> Result<OpensLattice> {
    opens_with_limit(r, DEFAULT_OPENS_LIMIT)
}

/// Union-closure of the up-sets (plus `∅`), failing once more than `limit`
/// sets have been produced.
pub fn opens_with_limit(r: &Preorder, limit: usize) -> Result<OpensLattice> {
    let n = r.len();
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut frontier = vec![Subset::empty(n)];
    seen.insert(Subset::empty(n));
    let mut generators: Vec<&Subset> = r.up_sets().iter().collect();
    generators.sort();
    generators.dedup();
    while let Some(g) = frontier.pop() {
        for up in &generators {
            if up.is_subset(&g) {
                continue;
            }
            let next = g.union(up);
            if seen.insert(next.clone()) {
                if seen.len() > limit {
                    return Err(Error::Capacity {
                        what: "opens lattice",
                        size: seen.len(),
                        cap: limit,
                    });
                }
                frontier.push(next);
            }
        }
    }
    let mut opens: Vec<Subset> = seen.into_iter().collect();
    opens.sort();
    Ok(OpensLattice {
        base: r.clone(),
        opens,
    })
}

impl OpensLattice {
    pub fn base(&self) -> &Preorder {
        &self.base
    }

    pub fn members(&self) -> &[Subset] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    pub fn index_of(&self, g: &Subset) -> Option<usize> {
        self.opens.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Subset) -> bool {
        self.index_of(g).is_some()
    }

    /// The opens as a finite algebra over indices into [`Self::members`]:
    /// meet `∩`, join `∪`, `impl` (`⇒`) and `minus` (`−̇`); with an
    /// involution also `neg` (`∼`) and `wimpl` (`→w`).
    pub fn to_algebra(&self, involution: Option<&PointInvolution>) -> Result<FiniteAlgebra> {
        let size = self.len();
        let idx = |s: Subset| -> Result<usize> {
            self.index_of(&s)
                .ok_or_else(|| Error::Internal(format!("{s} is not open")))
        };
        let table2 = |f: &dyn Fn(&Subset, &Subset) -> Result<Subset>| -> Result<Vec<Vec<usize>>> {
            self.opens
                .iter()
                .map(|g| self.opens.iter().map(|h| idx(f(g, h)?)).collect())
                .collect()
        };
        let meet = table2(&|g, h| Ok(g & h))?;
        let join = table2(&|g, h| Ok(g | h))?;
        let full = self.base.full_set();
        let mut alg = FiniteAlgebra::lattice(
            size,
            meet,
            join,
            idx(Subset::empty(self.base.len()))?,
            idx(full)?,
        )?;
        alg = alg.with_binary(
            BinaryOp::Impl,
            table2(&|g, h| heyting_implies(&self.base, g, h))?,
        )?;
        alg = alg.with_binary(
            BinaryOp::Minus,
            table2(&|g, h| brouwer_minus(&self.base, g, h))?,
        )?;
        if let Some(v) = involution {
            v.check_antitone(&self.base)?;
            let neg = self
                .opens
                .iter()
                .map(|g| idx(demorgan_complement(v, g)?))
                .collect::<Result<_>>()?;
            alg = alg.with_unary(UnaryOp::Neg, neg)?;
            alg = alg.with_binary(
                BinaryOp::WImpl,
                table2(&|g, h| weak_implies(&self.base, v, g, h))?,
            )?;
        }
        Ok(alg)
    }
}

/// `G ⇒ H = interior(-G ∪ H)` on opens.
pub fn heyting_implies(r: &Preorder, g: &Subset, h: &Subset) -> Result<Subset> {
    require_open(r, g, "antecedent")?;
    require_open(r, h, "consequent")?;
    Ok(interior_of(r, &(&!g | h)))
}

/// `⌐G = G ⇒ ∅`.
pub fn heyting_negation(r: &Preorder, g: &Subset) -> Result<Subset> {
    heyting_implies(r, g, &Subset::empty(r.len()))
}

/// `G −̇ H = closure(G ∩ -H)` on opens.
pub fn brouwer_minus(r: &Preorder, g: &Subset, h: &Subset) -> Result<Subset> {
    require_open(r, g, "minuend")?;
    require_open(r, h, "subtrahend")?;
    Ok(closure_of(r, &(g - h)))
}

/// `⌞G = Ob −̇ G`.
pub fn brouwer_negation(r: &Preorder, g: &Subset) -> Result<Subset> {
    brouwer_minus(r, &r.full_set(), g)
}

/// An involution of the points. Antitonicity is relative to a preorder and
/// checked by [`PointInvolution::check_antitone`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointInvolution {
    perm: Vec<usize>,
}

impl PointInvolution {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        for (x, &y) in perm.iter().enumerate() {
            if y >= n {
                return Err(Error::OutOfRange { index: y, size: n });
            }
            if perm[y] != x {
                return Err(Error::NotInvolution { point: x });
            }
        }
        Ok(PointInvolution { perm })
    }

    /// Involution that is also checked to be antitone for `r`.
    pub fn antitone_for(perm: Vec<usize>, r: &Preorder) -> Result<Self> {
        let v = PointInvolution::new(perm)?;
        v.check_antitone(r)?;
        Ok(v)
    }

    pub fn identity(n: usize) -> Self {
        PointInvolution {
            perm: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `x R y` implies `v(y) R v(x)`.
    pub fn check_antitone(&self, r: &Preorder) -> Result<()> {
        if r.len() != self.len() {
            return Err(Error::UniverseMismatch {
                expected: r.len(),
                found: self.len(),
            });
        }
        for (x, y) in r.pairs() {
            if !r.relates(self.apply(y), self.apply(x)) {
                return Err(Error::NotAntitone { x, y });
            }
        }
        Ok(())
    }

    /// First point with neither `x R v(x)` nor `v(x) R x`.
    pub fn kleene_witness(&self, r: &Preorder) -> Option<usize> {
        (0..self.len()).find(|&x| {
            let vx = self.apply(x);
            !r.relates(x, vx) && !r.relates(vx, x)
        })
    }

    pub fn satisfies_kleene(&self, r: &Preorder) -> bool {
        self.kleene_witness(r).is_none()
    }
}

/// `∼X = -v(X)`.
pub fn demorgan_complement(v: &PointInvolution, x: &Subset) -> Result<Subset> {
    if x.universe() != v.len() {
        return Err(Error::UniverseMismatch {
            expected: v.len(),
            found: x.universe(),
        });
    }
    Ok(x.image(v.as_slice()).complement())
}

/// `G →w H = G ⇒ (∼G ∪ H)`.
pub fn weak_implies(r: &Preorder, v: &PointInvolution, g: &Subset, h: &Subset) -> Result<Subset> {
    require_open(r, g, "antecedent")?;
    require_open(r, h, "consequent")?;
    v.check_antitone(r)?;
    let target = &demorgan_complement(v, g)? | h;
    heyting_implies(r, g, &target)
}

/// Moisil's exception `E(G, H) = ∼(∼H ⇒ ∼G)`.
pub fn exception(r: &Preorder, v: &PointInvolution, g: &Subset, h: &Subset) -> Result<Subset> {
    require_open(r, g, "minuend")?;
    require_open(r, h, "subtrahend")?;
    v.check_antitone(r)?;
    let inner = heyting_implies(r, &demorgan_complement(v, h)?, &demorgan_complement(v, g)?)?;
    demorgan_complement(v, &inner)
}

/// Laws `M0`–`M3` of the weak implication over every open triple.
/// Witnesses are indices into the sorted opens list.
///
/// * `M0`: `G ∩ ∼G ⊆ H ∪ ∼H`
/// * `M1`: `G →w G = Ob`
/// * `M2`: `G ∩ (G →w H) = G ∩ (∼G ∪ H)`
/// * `M3`: `G →w (H →w K) ⊆ (G ∩ H) →w K`
pub fn weak_implication_laws(r: &Preorder, v: &PointInvolution) -> Result<LawReport> {
    v.check_antitone(r)?;
    let lattice = opens(r)?;
    let os = lattice.members();
    let neg: Vec<Subset> = os
        .iter()
        .map(|g| demorgan_complement(v, g))
        .collect::<Result<_>>()?;
    let n = os.len();
    let mut wimpl = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            let w = weak_implies(r, v, &os[i], &os[j])?;
            wimpl[i][j] = Some(
                lattice
                    .index_of(&w)
                    .ok_or_else(|| Error::Internal(format!("{w} not open")))?,
            );
        }
    }
    let w = |i: usize, j: usize| wimpl[i][j].expect("filled");
    let full = r.full_set();
    let mut report = LawReport::new();

    let mut m0 = None;
    let mut m1 = None;
    let mut m2 = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            let (g, h) = (&os[i], &os[j]);
            if m0.is_none() && !(g & &neg[i]).is_subset(&(h | &neg[j])) {
                m0 = Some(vec![i, j]);
            }
            if m2.is_none() && g & &os[w(i, j)] != g & &(&neg[i] | h) {
                m2 = Some(vec![i, j]);
            }
            if m0.is_some() && m2.is_some() {
                break 'pairs;
            }
        }
    }
    for i in 0..n {
        if os[w(i, i)] != full {
            m1 = Some(vec![i]);
            break;
        }
    }
    let mut m3 = None;
    'triples: for i in 0..n {
        for j in 0..n {
            let gh = lattice
                .index_of(&(&os[i] & &os[j]))
                .expect("opens closed under meet");
            for k in 0..n {
                if !os[w(i, w(j, k))].is_subset(&os[w(gh, k)]) {
                    m3 = Some(vec![i, j, k]);
                    break 'triples;
                }
            }
        }
    }
    report.record("M0", m0);
    report.record("M1", m1);
    report.record("M2", m2);
    report.record("M3", m3);
    Ok(report)
}
