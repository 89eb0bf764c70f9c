//! Exhaustive law checks for the operators a single preorder induces on
//! its powerset and on its opens. Witnesses are subset bitmasks.

use crate::algebra::{check_deductive_algebra, BinaryOp};
use crate::error::{Error, Result};
use crate::order::Preorder;
use crate::rauszer::{brouwer_minus, closure_of, heyting_implies, interior_of, opens};
use crate::report::LawReport;
use crate::subset::Subset;

/// Largest point count for which every subset is scanned.
pub const MAX_SUBSET_SCAN: usize = 16;

struct Tables {
    n: usize,
    c: Vec<u64>,
    i: Vec<u64>,
    cs: Vec<u64>,
    is: Vec<u64>,
}

impl Tables {
    fn new(r: &Preorder) -> Result<Self> {
        let n = r.len();
        if n > MAX_SUBSET_SCAN {
            return Err(Error::Capacity {
                what: "subset scan points",
                size: n,
                cap: MAX_SUBSET_SCAN,
            });
        }
        let s = r.converse();
        let table = |f: &dyn Fn(&Subset) -> Subset| -> Vec<u64> {
            (0..1u64 << n)
                .map(|x| f(&Subset::from_bits(n, x)).bits().expect("small"))
                .collect()
        };
        Ok(Tables {
            n,
            c: table(&|x| closure_of(r, x)),
            i: table(&|x| interior_of(r, x)),
            cs: table(&|x| closure_of(&s, x)),
            is: table(&|x| interior_of(&s, x)),
        })
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn all(&self) -> std::ops::Range<u64> {
        0..1u64 << self.n
    }

    fn scan1(&self, ok: impl Fn(u64) -> bool) -> Option<Vec<usize>> {
        self.all().find(|&x| !ok(x)).map(|x| vec![x as usize])
    }

    fn scan2(&self, ok: impl Fn(u64, u64) -> bool) -> Option<Vec<usize>> {
        self.all()
            .flat_map(|x| self.all().map(move |y| (x, y)))
            .find(|&(x, y)| !ok(x, y))
            .map(|(x, y)| vec![x as usize, y as usize])
    }
}

/// `C1`–`C4` for the closure and `I1`–`I4` for the interior, over every
/// subset (and pair of subsets).
pub fn operator_laws(r: &Preorder) -> Result<LawReport> {
    let t = Tables::new(r)?;
    let (c, i, full) = (&t.c, &t.i, t.full());
    let mut rep = LawReport::new();
    rep.record("C1", (c[0] != 0).then(|| vec![0]));
    rep.record("C2", t.scan1(|x| x & !c[x as usize] == 0));
    rep.record(
        "C3",
        t.scan2(|x, y| c[(x | y) as usize] == c[x as usize] | c[y as usize]),
    );
    rep.record(
        "C4",
        t.scan1(|x| c[c[x as usize] as usize] == c[x as usize]),
    );
    rep.record(
        "I1",
        (i[full as usize] != full).then(|| vec![full as usize]),
    );
    rep.record("I2", t.scan1(|x| i[x as usize] & !x == 0));
    rep.record(
        "I3",
        t.scan2(|x, y| i[(x & y) as usize] == i[x as usize] & i[y as usize]),
    );
    rep.record(
        "I4",
        t.scan1(|x| i[i[x as usize] as usize] == i[x as usize]),
    );
    Ok(rep)
}

/// `I_R C_R X = C_R X`, `C_R I_R X = I_R X`, and the converse dualities
/// `C_R X = −I_S −X`, `C_S X = −I_R −X`.
pub fn conjugacy_laws(r: &Preorder) -> Result<LawReport> {
    let t = Tables::new(r)?;
    let full = t.full();
    let at = |v: &Vec<u64>, x: u64| v[x as usize];
    let mut rep = LawReport::new();
    rep.record("IC", t.scan1(|x| at(&t.i, at(&t.c, x)) == at(&t.c, x)));
    rep.record("CI", t.scan1(|x| at(&t.c, at(&t.i, x)) == at(&t.i, x)));
    rep.record(
        "C-dual",
        t.scan1(|x| at(&t.c, x) == full & !at(&t.is, full & !x)),
    );
    rep.record(
        "S-dual",
        t.scan1(|x| at(&t.cs, x) == full & !at(&t.i, full & !x)),
    );
    Ok(rep)
}

/// Fixpoints of `I` and of `C` coincide, the opens are closed under all
/// unions and intersections, and [`opens`] returns exactly the fixpoints.
pub fn opens_laws(r: &Preorder) -> Result<LawReport> {
    let t = Tables::new(r)?;
    let full = t.full();
    let fix: Vec<u64> = t.all().filter(|&x| t.i[x as usize] == x).collect();
    let is_fix = |x: u64| t.i[x as usize] == x;
    let mut rep = LawReport::new();
    rep.record(
        "open-iff-closed",
        t.scan1(|x| is_fix(x) == (t.c[x as usize] == x)),
    );
    let pairs = |ok: &dyn Fn(u64, u64) -> bool| {
        fix.iter()
            .flat_map(|&x| fix.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| !ok(x, y))
            .map(|(x, y)| vec![x as usize, y as usize])
    };
    // finite families reduce to the empty family and pairs
    let unions = if is_fix(0) {
        pairs(&|x, y| is_fix(x | y))
    } else {
        Some(vec![])
    };
    let meets = if is_fix(full) {
        pairs(&|x, y| is_fix(x & y))
    } else {
        Some(vec![full as usize])
    };
    rep.record("union-closed", unions);
    rep.record("meet-closed", meets);
    let listed: Vec<u64> = opens(r)?
        .members()
        .iter()
        .map(|g| g.bits().expect("small"))
        .collect();
    rep.record("union-closure-of-up-sets", (listed != fix).then(Vec::new));
    Ok(rep)
}

/// Residuation on the opens, as biconditionals over every open `X`:
/// `G ∩ X ⊆ H ⟺ X ⊆ G ⇒ H` and `G ⊆ H ∪ X ⟺ G −̇ H ⊆ X`; then the
/// deductive-algebra axioms for `⇒`.
pub fn residuation_laws(r: &Preorder) -> Result<LawReport> {
    let lattice = opens(r)?;
    let os = lattice.members();
    let mut h1 = None;
    let mut h2 = None;
    let mut b1 = None;
    let mut b2 = None;
    for (gi, g) in os.iter().enumerate() {
        for (hi, h) in os.iter().enumerate() {
            let imp = heyting_implies(r, g, h)?;
            let dif = brouwer_minus(r, g, h)?;
            if h1.is_none() && !(g & &imp).is_subset(h) {
                h1 = Some(vec![gi, hi]);
            }
            if b1.is_none() && !g.is_subset(&(h | &dif)) {
                b1 = Some(vec![gi, hi]);
            }
            for (xi, x) in os.iter().enumerate() {
                if h2.is_none() && (g & x).is_subset(h) != x.is_subset(&imp) {
                    h2 = Some(vec![gi, hi, xi]);
                }
                if b2.is_none() && g.is_subset(&(h | x)) != dif.is_subset(x) {
                    b2 = Some(vec![gi, hi, xi]);
                }
            }
        }
    }
    let mut rep = LawReport::new();
    rep.record("H1", h1);
    rep.record("H2", h2);
    rep.record("B1", b1);
    rep.record("B2", b2);
    let deductive = check_deductive_algebra(&lattice.to_algebra(None)?, BinaryOp::Impl)?;
    rep.record("deductive", deductive.witness.map(|w| w.tuple));
    Ok(rep)
}

/// For an equivalence: the closure is a quantifier (`∃0`–`∃2`) and
/// `−C−X = I X`.
pub fn monadic_laws(r: &Preorder) -> Result<LawReport> {
    if !r.is_symmetric() {
        return Err(Error::Precondition(
            "monadic laws need an equivalence relation".into(),
        ));
    }
    let t = Tables::new(r)?;
    let (c, i, full) = (&t.c, &t.i, t.full());
    let mut rep = LawReport::new();
    rep.record("E0", (c[0] != 0).then(|| vec![0]));
    rep.record("E1", t.scan1(|x| x & c[x as usize] == x));
    rep.record(
        "E2",
        t.scan2(|x, y| c[(x & c[y as usize]) as usize] == c[x as usize] & c[y as usize]),
    );
    rep.record(
        "forall-is-interior",
        t.scan1(|x| full & !c[(full & !x) as usize] == i[x as usize]),
    );
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_preorders_pass() {
        for r in [
            Preorder::identity(3),
            Preorder::chain(3),
            Preorder::total(2),
        ] {
            assert!(operator_laws(&r).unwrap().all_hold());
            assert!(conjugacy_laws(&r).unwrap().all_hold());
            assert!(opens_laws(&r).unwrap().all_hold());
            assert!(residuation_laws(&r).unwrap().all_hold());
        }
        assert!(monadic_laws(&Preorder::total(3)).unwrap().all_hold());
        assert!(monadic_laws(&Preorder::chain(2)).is_err());
    }
}
