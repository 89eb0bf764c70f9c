//! Acceptance criteria, each run against oracles written here from the
//! definitions (boolean matrices and bitmask scans), independent of the
//! library's own algorithms. One PASS/FAIL line per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rauszer::algebra::{
    check_class, samples, with_heyting_brouwer, BinaryOp, ClassName, FiniteAlgebra, UnaryOp,
};
use rauszer::enumerate::{kleene_algebras, nelson_algebras};
use rauszer::info::{approximate, inclusion_preorder, indiscernibility, InformationSystem};
use rauszer::laws::residuation_laws;
use rauszer::rauszer::{
    brouwer_minus, closure, heyting_implies, interior, opens, weak_implication_laws,
};
use rauszer::representation::{
    interpolation_check, opens_nelson_check, prime_spectrum, stone_map, with_involution,
};
use rauszer::{build_preorder, BuildMode, Preorder, Subset};

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------------
// relation oracle

#[derive(Clone, Debug)]
struct Rel {
    n: usize,
    m: Vec<Vec<bool>>,
}

impl Rel {
    fn closed(n: usize, pairs: &[(usize, usize)]) -> Rel {
        let mut m = vec![vec![false; n]; n];
        for (x, row) in m.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in pairs {
            m[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if m[i][k] && m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
        Rel { n, m }
    }

    fn converse(&self) -> Rel {
        let m = (0..self.n)
            .map(|x| (0..self.n).map(|y| self.m[y][x]).collect())
            .collect();
        Rel { n: self.n, m }
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// `{y : x R y for some x ∈ X}`
    fn closure(&self, x: u64) -> u64 {
        (0..self.n)
            .filter(|&y| (0..self.n).any(|v| x >> v & 1 == 1 && self.m[v][y]))
            .fold(0, |a, y| a | 1 << y)
    }

    /// `{z : every y with z R y lies in X}`
    fn interior(&self, x: u64) -> u64 {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|y| !self.m[z][y] || x >> y & 1 == 1))
            .fold(0, |a, z| a | 1 << z)
    }

    fn opens(&self) -> Vec<u64> {
        (0..=self.full())
            .filter(|&x| self.interior(x) == x)
            .collect()
    }

    fn preorder(&self) -> Preorder {
        Preorder::from_fn(self.n, |x, y| self.m[x][y]).expect("oracle relation is a preorder")
    }
}

fn every_preorder(n: usize) -> Vec<Rel> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    (0u64..1 << off.len())
        .filter_map(|mask| {
            let pairs: Vec<(usize, usize)> = off
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let r = Rel::closed(n, &pairs);
            // keep only relations already closed
            let count = r.m.iter().flatten().filter(|&&b| b).count();
            (count == pairs.len() + n).then_some(r)
        })
        .collect()
}

fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Rel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let d: f64 = rng.gen_range(0.0..0.5);
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| x != y && rng.gen_bool(d))
                .collect();
            Rel::closed(n, &pairs)
        })
        .collect()
}

fn preorder_corpus() -> Vec<Rel> {
    let mut all: Vec<Rel> = (1..=4).flat_map(every_preorder).collect();
    all.extend(random_corpus(0x5eed, 500, 8));
    all
}

fn sub(n: usize, bits: u64) -> Subset {
    Subset::from_bits(n, bits)
}

fn bits(s: &Subset) -> u64 {
    s.bits().expect("small universe")
}

/// Library closure and interior tables of every subset.
fn library_tables(r: &Preorder) -> (Vec<u64>, Vec<u64>) {
    let n = r.len();
    let c = (0..1u64 << n)
        .map(|x| bits(&closure(r, &sub(n, x)).unwrap()))
        .collect();
    let i = (0..1u64 << n)
        .map(|x| bits(&interior(r, &sub(n, x)).unwrap()))
        .collect();
    (c, i)
}

// ---------------------------------------------------------------------------
// criteria on preorders

fn operator_axioms() -> Verdict {
    let counts: Vec<usize> = (1..=4).map(|n| every_preorder(n).len()).collect();
    ensure!(counts == [1, 4, 29, 355], "preorder counts {counts:?}");
    let corpus = preorder_corpus();
    for rel in &corpus {
        let r = rel.preorder();
        let built =
            build_preorder(rel.n, &r.pairs(), BuildMode::Validate).map_err(|e| e.to_string())?;
        ensure!(built == r, "build_preorder disagrees on {:?}", rel.m);
        let (c, i) = library_tables(&r);
        let all = 0..=rel.full();
        for x in all.clone() {
            ensure!(
                c[x as usize] == rel.closure(x),
                "closure of {x:b} differs from oracle"
            );
            ensure!(
                i[x as usize] == rel.interior(x),
                "interior of {x:b} differs from oracle"
            );
        }
        let full = rel.full();
        ensure!(c[0] == 0, "C1");
        ensure!(i[full as usize] == full, "I1");
        for x in all.clone() {
            let (cx, ix) = (c[x as usize], i[x as usize]);
            ensure!(x & !cx == 0, "C2 at {x:b}");
            ensure!(c[cx as usize] == cx, "C4 at {x:b}");
            ensure!(ix & !x == 0, "I2 at {x:b}");
            ensure!(i[ix as usize] == ix, "I4 at {x:b}");
            for y in all.clone() {
                ensure!(
                    c[(x | y) as usize] == cx | c[y as usize],
                    "C3 at {x:b},{y:b}"
                );
                ensure!(
                    i[(x & y) as usize] == ix & i[y as usize],
                    "I3 at {x:b},{y:b}"
                );
            }
        }
    }
    Ok(format!("{} preorders, every subset and pair", corpus.len()))
}

fn conjugacy_duality() -> Verdict {
    let corpus = preorder_corpus();
    for rel in &corpus {
        let r = rel.preorder();
        let s = r.converse();
        ensure!(
            s == rel.converse().preorder(),
            "converse differs from oracle"
        );
        let (c, i) = library_tables(&r);
        let (cs, is) = library_tables(&s);
        let full = rel.full();
        for x in 0..=full {
            let xu = x as usize;
            ensure!(i[c[xu] as usize] == c[xu], "I C X = C X fails at {x:b}");
            ensure!(c[i[xu] as usize] == i[xu], "C I X = I X fails at {x:b}");
            ensure!(
                c[xu] == full & !is[(full & !x) as usize],
                "C_R X = -I_S -X fails at {x:b}"
            );
            ensure!(
                cs[xu] == full & !i[(full & !x) as usize],
                "C_S X = -I_R -X fails at {x:b}"
            );
        }
    }
    Ok(format!("{} preorders, every subset", corpus.len()))
}

fn opens_lattice() -> Verdict {
    let mut checked = 0;
    for rel in (1..=4).flat_map(every_preorder) {
        let r = rel.preorder();
        let fix_i: Vec<u64> = rel.opens();
        let fix_c: Vec<u64> = (0..=rel.full()).filter(|&x| rel.closure(x) == x).collect();
        ensure!(fix_i == fix_c, "open and closed sets differ on {:?}", rel.m);
        let listed: Vec<u64> = opens(&r).unwrap().members().iter().map(bits).collect();
        ensure!(
            listed == fix_i,
            "opens() differs from the fixpoint oracle on {:?}",
            rel.m
        );
        // unions of principal up-sets, grown to a fixpoint
        let ups: Vec<u64> = (0..rel.n).map(|x| rel.closure(1 << x)).collect();
        let mut grown = std::collections::BTreeSet::from([0u64]);
        loop {
            let next: std::collections::BTreeSet<u64> = grown
                .iter()
                .flat_map(|&g| ups.iter().map(move |&u| g | u))
                .chain(grown.iter().copied())
                .collect();
            if next == grown {
                break;
            }
            grown = next;
        }
        ensure!(
            grown.into_iter().collect::<Vec<_>>() == fix_i,
            "opens differ from unions of up-sets on {:?}",
            rel.m
        );
        // every subfamily, including the empty one
        let k = fix_i.len();
        for fam in 0u64..1 << k {
            let members = (0..k).filter(|j| fam >> j & 1 == 1).map(|j| fix_i[j]);
            let union = members.clone().fold(0, |a, g| a | g);
            let meet = members.fold(rel.full(), |a, g| a & g);
            ensure!(
                fix_i.binary_search(&union).is_ok(),
                "union of family {fam:b} not open"
            );
            ensure!(
                fix_i.binary_search(&meet).is_ok(),
                "meet of family {fam:b} not open"
            );
        }
        checked += 1;
    }
    Ok(format!("{checked} preorders, all subfamilies of opens"))
}

fn residuation() -> Verdict {
    let mut checked = 0;
    for rel in (1..=4).flat_map(every_preorder) {
        let r = rel.preorder();
        let n = rel.n;
        let os = rel.opens();
        let full = rel.full();
        let imp = |g: u64, h: u64| bits(&heyting_implies(&r, &sub(n, g), &sub(n, h)).unwrap());
        let dif = |g: u64, h: u64| bits(&brouwer_minus(&r, &sub(n, g), &sub(n, h)).unwrap());
        for &g in &os {
            for &h in &os {
                let (gh, gd) = (imp(g, h), dif(g, h));
                for &x in &os {
                    ensure!(
                        (g & x & !h == 0) == (x & !gh == 0),
                        "H1/H2 biconditional at {g:b},{h:b},{x:b}"
                    );
                    ensure!(
                        (g & !(h | x) == 0) == (gd & !x == 0),
                        "B1/B2 biconditional at {g:b},{h:b},{x:b}"
                    );
                }
                // deductive algebra over (O_R, ⇒, Ob)
                ensure!(imp(g, imp(h, g)) == full, "I1 at {g:b},{h:b}");
                for &k in &os {
                    let lhs = imp(imp(g, imp(h, k)), imp(imp(g, h), imp(g, k)));
                    ensure!(lhs == full, "I2 at {g:b},{h:b},{k:b}");
                }
            }
            ensure!(imp(full, g) != full || g == full, "I3 at {g:b}");
        }
        let lib = residuation_laws(&r).map_err(|e| e.to_string())?;
        ensure!(
            lib.all_hold(),
            "library residuation report: {:?}",
            lib.failures().collect::<Vec<_>>()
        );
        checked += 1;
    }
    Ok(format!("{checked} preorders, all open triples"))
}

fn monadic_case() -> Verdict {
    let mut count = 0;
    for n in 1..=4usize {
        // set partitions by block labels, generated by brute force
        let mut seen = Vec::new();
        for labels in 0..n.pow(n as u32) {
            let block: Vec<usize> = (0..n).map(|i| labels / n.pow(i as u32) % n).collect();
            let rel = Rel {
                n,
                m: (0..n)
                    .map(|x| (0..n).map(|y| block[x] == block[y]).collect())
                    .collect(),
            };
            if seen.iter().any(|s: &Rel| s.m == rel.m) {
                continue;
            }
            seen.push(rel);
        }
        ensure!(
            seen.len() == [1, 2, 5, 15][n - 1],
            "Bell number mismatch at {n}"
        );
        for rel in seen {
            let r = rel.preorder();
            let (c, i) = library_tables(&r);
            let full = rel.full();
            ensure!(c[0] == 0, "∃0");
            for x in 0..=full {
                let xu = x as usize;
                ensure!(x & c[xu] == x, "∃1 at {x:b}");
                ensure!(
                    full & !c[(full & !x) as usize] == i[xu],
                    "∀ = -∃- differs from interior at {x:b}"
                );
                for y in 0..=full {
                    ensure!(
                        c[(x & c[y as usize]) as usize] == c[xu] & c[y as usize],
                        "∃2 at {x:b},{y:b}"
                    );
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} equivalences"))
}

// ---------------------------------------------------------------------------
// algebra oracles

/// Prime filters by their definition, over every subset of the carrier.
fn oracle_prime_filters(a: &FiniteAlgebra) -> Vec<u64> {
    let n = a.size();
    let has = |s: u64, x: usize| s >> x & 1 == 1;
    (0u64..1 << n)
        .filter(|&s| {
            has(s, a.top())
                && s != (1 << n) - 1
                && a.elements()
                    .all(|x| !has(s, x) || a.elements().all(|y| !a.leq(x, y) || has(s, y)))
                && a.elements().all(|x| {
                    a.elements()
                        .all(|y| !(has(s, x) && has(s, y)) || has(s, a.meet(x, y)))
                })
                && a.elements().all(|x| {
                    a.elements()
                        .all(|y| !has(s, a.join(x, y)) || has(s, x) || has(s, y))
                })
        })
        .collect()
}

/// Spectrum oracle: points, the inclusion relation, `h`, and its opens.
struct OracleSpectrum {
    points: Vec<u64>,
    rel: Rel,
    h: Vec<u64>,
}

impl OracleSpectrum {
    fn new(a: &FiniteAlgebra) -> OracleSpectrum {
        let points = oracle_prime_filters(a);
        let k = points.len();
        let rel = Rel {
            n: k,
            m: (0..k)
                .map(|i| (0..k).map(|j| points[i] & !points[j] == 0).collect())
                .collect(),
        };
        let h = a
            .elements()
            .map(|x| {
                (0..k)
                    .filter(|&i| points[i] >> x & 1 == 1)
                    .fold(0, |s, i| s | 1 << i)
            })
            .collect();
        OracleSpectrum { points, rel, h }
    }

    /// Largest open `X` with `G ∩ X ⊆ H`.
    fn imp(&self, g: u64, h: u64) -> u64 {
        self.rel
            .opens()
            .into_iter()
            .filter(|&x| g & x & !h == 0)
            .fold(0, |a, x| a | x)
    }

    /// Least open `X` with `G ⊆ H ∪ X`.
    fn dif(&self, g: u64, h: u64) -> u64 {
        self.rel
            .opens()
            .into_iter()
            .filter(|&x| g & !(h | x) == 0)
            .fold(self.rel.full(), |a, x| a & x)
    }

    /// `φ(P) = −(∼P)` as a point permutation.
    fn phi(&self, a: &FiniteAlgebra) -> Vec<usize> {
        let full = (1u64 << a.size()) - 1;
        self.points
            .iter()
            .map(|&p| {
                let image = a
                    .elements()
                    .filter(|&x| p >> x & 1 == 1)
                    .fold(0u64, |s, x| s | 1 << a.neg(x));
                let target = full & !image;
                self.points
                    .iter()
                    .position(|&q| q == target)
                    .expect("φ(P) is prime")
            })
            .collect()
    }

    fn neg(&self, phi: &[usize], g: u64) -> u64 {
        let image = (0..phi.len())
            .filter(|&i| g >> i & 1 == 1)
            .fold(0u64, |s, i| s | 1 << phi[i]);
        self.rel.full() & !image
    }
}

fn spectrum_matches(
    a: &FiniteAlgebra,
    o: &OracleSpectrum,
) -> Result<rauszer::representation::PrimeFilterSpace, String> {
    let space = prime_spectrum(a).map_err(|e| e.to_string())?;
    let pts: Vec<u64> = space.points().iter().map(bits).collect();
    ensure!(
        pts == o.points,
        "spectrum points {pts:?} vs oracle {:?}",
        o.points
    );
    Ok(space)
}

fn embedding_checks(a: &FiniteAlgebra, o: &OracleSpectrum, laws: &[&str]) -> Result<(), String> {
    let space = spectrum_matches(a, o)?;
    let space = if a.has_unary(UnaryOp::Neg) {
        with_involution(a, &space).map_err(|e| e.to_string())?
    } else {
        space
    };
    let e = stone_map(a, &space).map_err(|e| e.to_string())?;
    let h: Vec<u64> = e.h.iter().map(bits).collect();
    ensure!(h == o.h, "h differs from membership oracle");
    for law in laws {
        ensure!(e.report.get(law).is_some(), "law {law} was not checked");
        ensure!(
            e.report.holds(law),
            "law {law} fails: {:?}",
            e.report.get(law)
        );
    }
    Ok(())
}

fn hb_oracle_laws(a: &FiniteAlgebra, o: &OracleSpectrum) -> Result<(), String> {
    let full = o.rel.full();
    let os = o.rel.opens();
    let mut seen = std::collections::BTreeSet::new();
    for x in a.elements() {
        ensure!(os.contains(&o.h[x]), "h({x}) not open");
        ensure!(seen.insert(o.h[x]), "h not injective at {x}");
    }
    ensure!(o.h[a.top()] == full, "h(1) ≠ Ob");
    for x in a.elements() {
        for y in a.elements() {
            ensure!(
                !a.leq(x, y) || o.h[x] & !o.h[y] == 0,
                "h not increasing at {x},{y}"
            );
            ensure!(o.h[a.meet(x, y)] == o.h[x] & o.h[y], "h1 meet at {x},{y}");
            ensure!(o.h[a.join(x, y)] == o.h[x] | o.h[y], "h1 join at {x},{y}");
            let imp = a.binary(BinaryOp::Impl, x, y).unwrap();
            let dif = a.binary(BinaryOp::Minus, x, y).unwrap();
            ensure!(o.h[imp] == o.imp(o.h[x], o.h[y]), "h3 at {x},{y}");
            ensure!(o.h[dif] == o.dif(o.h[x], o.h[y]), "h4 at {x},{y}");
        }
        let hneg = a.binary(BinaryOp::Impl, x, a.bot()).unwrap();
        ensure!(o.h[hneg] == o.imp(o.h[x], 0), "h2 at {x}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// criteria on algebras

fn hb_representation() -> Verdict {
    let mut corpus: Vec<FiniteAlgebra> = (2..=6).map(samples::chain).collect();
    for a in 2..=9 {
        for b in 2..=9 {
            if a <= b && a * b <= 9 {
                corpus.push(samples::product(a, b));
            }
        }
    }
    for base in &corpus {
        let alg = with_heyting_brouwer(base).map_err(|e| e.to_string())?;
        let o = OracleSpectrum::new(&alg);
        embedding_checks(
            &alg,
            &o,
            &["open", "injective", "h0", "h1", "h2", "h3", "h4"],
        )?;
        hb_oracle_laws(&alg, &o)?;
    }
    Ok(format!("{} lattices", corpus.len()))
}

fn lukasiewicz_corollary() -> Verdict {
    let l3 = samples::lukasiewicz3();
    let report = check_class(&l3, ClassName::Lukasiewicz3).map_err(|e| e.to_string())?;
    ensure!(report.holds, "lukasiewicz3 class check fails: {report:?}");
    let o = OracleSpectrum::new(&l3);
    embedding_checks(&l3, &o, &["h0", "h1", "h2", "h3", "h4", "t-image"])?;
    hb_oracle_laws(&l3, &o)?;
    let s = o.rel.converse();
    for x in l3.elements() {
        let bneg = l3.binary(BinaryOp::Minus, l3.top(), x).unwrap();
        let t = l3.binary(BinaryOp::Impl, bneg, l3.bot()).unwrap();
        ensure!(
            o.h[t] == o.rel.interior(s.interior(o.h[x])),
            "t-image at {x}"
        );
    }
    Ok("3-chain with ∼m = m".into())
}

fn symmetric_and_nelson_representation() -> Verdict {
    for n in 2..=5 {
        let alg = with_heyting_brouwer(&samples::kleene_chain(n)).unwrap();
        let o = OracleSpectrum::new(&alg);
        embedding_checks(&alg, &o, &["neg", "h3", "h4"])?;
        let phi = o.phi(&alg);
        for x in alg.elements() {
            ensure!(
                o.h[alg.neg(x)] == o.neg(&phi, o.h[x]),
                "h(∼x) at {x} in the {n}-chain"
            );
        }
    }
    let mut nelson = vec![samples::nelson_chain(3), samples::nelson_chain(4)];
    let mut found = 0;
    for n in 2..=5 {
        let algs = nelson_algebras(n).map_err(|e| e.to_string())?;
        found += algs.len();
        nelson.extend(algs);
    }
    ensure!(
        found == 5,
        "expected 5 Nelson algebras up to size 5, found {found}"
    );
    for alg in &nelson {
        let o = OracleSpectrum::new(alg);
        embedding_checks(alg, &o, &["neg", "wimpl"])?;
        let phi = o.phi(alg);
        for a in alg.elements() {
            for b in alg.elements() {
                let w = alg.binary(BinaryOp::WImpl, a, b).unwrap();
                let rhs = o.imp(o.h[a], o.neg(&phi, o.h[a]) | o.h[b]);
                ensure!(o.h[w] == rhs, "h(a →w b) at {a},{b}");
            }
        }
    }
    Ok(format!("4 Kleene chains, {} Nelson samples", nelson.len()))
}

fn kleene_samples() -> Result<Vec<FiniteAlgebra>, String> {
    let mut out: Vec<FiniteAlgebra> = (2..=5).map(samples::kleene_chain).collect();
    out.push(samples::diamond_boolean());
    for n in 2..=5 {
        out.extend(kleene_algebras(n).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn weak_implication_props() -> Verdict {
    let corpus = kleene_samples()?;
    for alg in &corpus {
        let o = OracleSpectrum::new(alg);
        let phi = o.phi(alg);
        let space = with_involution(alg, &prime_spectrum(alg).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let rep = weak_implication_laws(space.order(), space.phi().unwrap())
            .map_err(|e| e.to_string())?;
        ensure!(rep.all_hold(), "library M-laws fail: {rep:?}");
        let os = o.rel.opens();
        let full = o.rel.full();
        let neg = |g| o.neg(&phi, g);
        let w = |g: u64, h: u64| o.imp(g, neg(g) | h);
        for &g in &os {
            ensure!(w(g, g) == full, "M1 at {g:b}");
            for &h in &os {
                ensure!(g & neg(g) & !(h | neg(h)) == 0, "M0 at {g:b},{h:b}");
                ensure!(g & w(g, h) == g & (neg(g) | h), "M2 at {g:b},{h:b}");
                for &k in &os {
                    ensure!(w(g, w(h, k)) & !w(g & h, k) == 0, "M3 at {g:b},{h:b},{k:b}");
                }
            }
        }
    }
    Ok(format!("{} Kleene samples", corpus.len()))
}

fn interpolation_props() -> Verdict {
    let mut corpus = vec![samples::nelson_chain(3), samples::nelson_chain(4)];
    for n in 2..=5 {
        corpus.extend(nelson_algebras(n).map_err(|e| e.to_string())?);
    }
    for alg in &corpus {
        let o = OracleSpectrum::new(alg);
        let phi = o.phi(alg);
        let k = o.points.len();
        let le = |a: usize, b: usize| o.rel.m[a][b];
        for p in 0..k {
            for q in 0..k {
                if le(p, phi[p]) && le(q, phi[q]) && le(p, phi[q]) {
                    ensure!(le(q, phi[p]), "(δ) not implied at {p},{q}");
                    let m = (0..k).any(|m| le(p, m) && le(q, m) && le(m, phi[p]) && le(m, phi[q]));
                    ensure!(m, "no interpolant for {p},{q}");
                }
            }
        }
        let space =
            with_involution(alg, &prime_spectrum(alg).unwrap()).map_err(|e| e.to_string())?;
        let i = interpolation_check(&space).map_err(|e| e.to_string())?;
        ensure!(
            i.holds && i.delta_failure.is_none(),
            "library interpolation: {i:?}"
        );
        let r = opens_nelson_check(&space).map_err(|e| e.to_string())?;
        ensure!(r.holds, "opens of the spectrum not Nelson: {r:?}");
    }
    Ok(format!("{} Nelson samples", corpus.len()))
}

fn monteiro_search() -> Verdict {
    let cfg = rauszer::cli::RunConfig::default();
    let args = [
        "rauszer",
        "search",
        "--family",
        "kleene-sym-heyting",
        "--max-n",
        "5",
        "--property",
        "monteiro-agree",
    ];
    let out = rauszer::cli::run_with(args, &cfg);
    ensure!(out.code == 0, "exit {} stderr {}", out.code, out.stderr);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(
        v["counterexamples"] == 0,
        "disagreements: {}",
        v["examples"]
    );
    // Kleene algebras up to five elements: the 2-, 3-, 4-, 5-chains and the four-element Boolean algebra
    ensure!(
        v["examined"] == 5,
        "examined {} algebras, expected 5",
        v["examined"]
    );
    Ok("5 algebras, 0 disagreements".into())
}

fn rough_sets() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let s = InformationSystem::random(&mut rng, 8, 4, 3);
        let n = s.len();
        let m = s.attributes().len();
        let same = |x: usize, y: usize| (0..m).all(|a| s.value(x, a) == s.value(y, a));
        let indisc = indiscernibility(&s);
        let oracle = Preorder::from_fn(n, same).unwrap();
        ensure!(
            indisc == oracle,
            "indiscernibility differs from cell equality"
        );
        ensure!(
            inclusion_preorder(&s).kernel_equivalence() == indisc,
            "kernel of inclusion ≠ indiscernibility"
        );
        let full = (1u64 << n) - 1;
        let mut definable = Vec::new();
        for x in 0..=full {
            let a = approximate(&indisc, &sub(n, x)).map_err(|e| e.to_string())?;
            let (lo, up) = (bits(&a.lower), bits(&a.upper));
            ensure!(
                lo & !x == 0 && x & !up == 0,
                "lower ⊆ X ⊆ upper fails at {x:b}"
            );
            ensure!(a.definable == (lo == up), "definable flag at {x:b}");
            if a.definable {
                definable.push(x);
            }
        }
        ensure!(
            definable.contains(&0) && definable.contains(&full),
            "bounds not definable"
        );
        for &x in &definable {
            ensure!(
                definable.contains(&(full & !x)),
                "complement of definable {x:b}"
            );
            for &y in &definable {
                ensure!(
                    definable.contains(&(x | y)) && definable.contains(&(x & y)),
                    "definables not closed"
                );
            }
        }
    }
    Ok("100 systems".into())
}

// ---------------------------------------------------------------------------

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Verdict,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "closure and interior axioms",
            budget: secs(10),
            run: operator_axioms,
        },
        Criterion {
            id: 2,
            name: "conjugacy and converse duality",
            budget: secs(10),
            run: conjugacy_duality,
        },
        Criterion {
            id: 3,
            name: "opens lattice",
            budget: secs(5),
            run: opens_lattice,
        },
        Criterion {
            id: 4,
            name: "residuation and deductive algebra",
            budget: secs(10),
            run: residuation,
        },
        Criterion {
            id: 5,
            name: "Heyting-Brouwer representation",
            budget: secs(30),
            run: hb_representation,
        },
        Criterion {
            id: 6,
            name: "three-valued Lukasiewicz corollary",
            budget: secs(1),
            run: lukasiewicz_corollary,
        },
        Criterion {
            id: 7,
            name: "symmetric Heyting and Nelson representation",
            budget: secs(30),
            run: symmetric_and_nelson_representation,
        },
        Criterion {
            id: 8,
            name: "weak implication laws M0-M3",
            budget: secs(10),
            run: weak_implication_props,
        },
        Criterion {
            id: 9,
            name: "interpolation and Nelson opens",
            budget: secs(10),
            run: interpolation_props,
        },
        Criterion {
            id: 10,
            name: "Monteiro equivalence search",
            budget: secs(120),
            run: monteiro_search,
        },
        Criterion {
            id: 11,
            name: "rough set approximations",
            budget: secs(5),
            run: rough_sets,
        },
        Criterion {
            id: 12,
            name: "monadic case",
            budget: secs(5),
            run: monadic_case,
        },
    ];
    let mut failed = 0;
    let mut stdout = std::io::stdout().lock();
    for c in &criteria {
        let start = Instant::now();
        let verdict = (c.run)();
        let took = start.elapsed();
        let (ok, detail) = match verdict {
            Ok(d) if took <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        writeln!(
            stdout,
            "criterion {:>2} {:<45} {} ({:.2} s of {} s) {}",
            c.id,
            c.name,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            c.budget.as_secs(),
            detail
        )
        .unwrap();
    }
    writeln!(
        stdout,
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    )
    .unwrap();
    if failed > 0 {
        std::process::exit(1);
    }
}
