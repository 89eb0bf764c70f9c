//! Small-model enumeration: preorders, equivalences, and finite
//! distributive, Kleene and Nelson algebras up to isomorphism.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{
    check_class, derived_weak_implication, distributivity_witness, with_heyting_brouwer, ClassName,
    FiniteAlgebra, UnaryOp,
};
use crate::error::{Error, Result};
use crate::order::{build_preorder, BuildMode, Preorder};
use crate::rauszer::{opens, PointInvolution};

/// Largest point count enumerated exhaustively by [`all_preorders`].
pub const MAX_EXHAUSTIVE_PREORDERS: usize = 5;

/// Largest carrier enumerated up to isomorphism (brute-force canonization).
pub const MAX_CANONICAL: usize = 7;

/// Every preorder on `n` labelled points.
pub fn all_preorders(n: usize) -> Result<Vec<Preorder>> {
    if n > MAX_EXHAUSTIVE_PREORDERS {
        return Err(Error::Capacity {
            what: "exhaustive preorder enumeration",
            size: n,
            cap: MAX_EXHAUSTIVE_PREORDERS,
        });
    }
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|(x, y)| x != y)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << off.len()) {
        let mut up = vec![0u64; n];
        for (x, row) in up.iter_mut().enumerate() {
            *row |= 1 << x;
        }
        for (k, &(x, y)) in off.iter().enumerate() {
            if mask >> k & 1 == 1 {
                up[x] |= 1 << y;
            }
        }
        let transitive = (0..n).all(|x| {
            (0..n)
                .filter(|&y| up[x] >> y & 1 == 1)
                .all(|y| up[y] & !up[x] == 0)
        });
        if transitive {
            let up = up
                .into_iter()
                .map(|b| crate::subset::Subset::from_bits(n, b))
                .collect();
            out.push(Preorder::from_up_sets(up)?);
        }
    }
    Ok(out)
}

/// Every equivalence relation on `n` points, one per set partition.
pub fn equivalences(n: usize) -> Vec<Preorder> {
    // restricted growth strings
    fn grow(n: usize, blocks: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if blocks.len() == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..=max {
            blocks.push(b);
            grow(n, blocks, max.max(b + 1), out);
            blocks.pop();
        }
    }
    let mut labels = Vec::new();
    grow(n, &mut Vec::new(), 0, &mut labels);
    labels
        .into_iter()
        .map(|b| Preorder::from_fn(n, |x, y| b[x] == b[y]).expect("equivalence"))
        .collect()
}

/// Random pairs, each present with probability `density`, then closed.
pub fn random_preorder<R: Rng>(rng: &mut R, n: usize, density: f64) -> Preorder {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && rng.gen_bool(density))
        .collect();
    build_preorder(n, &pairs, BuildMode::Close).expect("indices in range")
}

/// Relabelling-invariant code of an order with an optional unary table;
/// `bot` and `top` are assumed to sit at `0` and `n - 1`.
fn canonical(n: usize, leq: &[Vec<bool>], neg: Option<&[usize]>) -> (Vec<usize>, Vec<usize>) {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut middle: Vec<usize> = (1..n.saturating_sub(1)).collect();
    permutations(&mut middle, 0, &mut |mid| {
        // pos[old] = new
        let mut pos = vec![0; n];
        pos[n - 1] = n - 1;
        for (new, &old) in mid.iter().enumerate() {
            pos[old] = new + 1;
        }
        let mut inv = vec![0; n];
        for (old, &new) in pos.iter().enumerate() {
            inv[new] = old;
        }
        let mut code: Vec<usize> = (0..n)
            .map(|i| (0..n).fold(0usize, |acc, j| acc << 1 | leq[inv[i]][inv[j]] as usize))
            .collect();
        if let Some(neg) = neg {
            code.extend((0..n).map(|i| pos[neg[inv[i]]]));
        }
        if best.as_ref().is_none_or(|(c, _)| code < *c) {
            best = Some((code, pos));
        }
    });
    best.expect("at least one permutation")
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn leq_matrix(alg: &FiniteAlgebra) -> Vec<Vec<bool>> {
    alg.elements()
        .map(|a| alg.elements().map(|b| alg.leq(a, b)).collect())
        .collect()
}

fn relabel_order(leq: &[Vec<bool>], pos: &[usize]) -> Vec<Vec<bool>> {
    let n = leq.len();
    let mut out = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[pos[i]][pos[j]] = leq[i][j];
        }
    }
    out
}

fn check_canonical_size(n: usize) -> Result<()> {
    if n > MAX_CANONICAL {
        return Err(Error::Capacity {
            what: "enumeration up to isomorphism",
            size: n,
            cap: MAX_CANONICAL,
        });
    }
    Ok(())
}

/// Distributive lattices with exactly `n ≥ 1` elements, one per isomorphism
/// class, with `0` the bottom and `n - 1` the top. Built from every
/// naturally labelled order on the `n - 2` middle elements.
pub fn distributive_lattices(n: usize) -> Result<Vec<FiniteAlgebra>> {
    check_canonical_size(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![FiniteAlgebra::from_fns(1, |_, _| 0, |_, _| 0, 0, 0)?]);
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let mut found: BTreeMap<Vec<usize>, FiniteAlgebra> = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut below = vec![vec![false; m]; m];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            below[i][j] = mask >> k & 1 == 1;
        }
        let transitive = (0..m)
            .all(|i| (0..m).all(|j| (0..m).all(|k| !(below[i][j] && below[j][k]) || below[i][k])));
        if !transitive {
            continue;
        }
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        x == y
                            || x == 0
                            || y == n - 1
                            || (x > 0 && y > 0 && x < n - 1 && y < n - 1 && below[x - 1][y - 1])
                    })
                    .collect()
            })
            .collect();
        let Ok(alg) = FiniteAlgebra::from_order(n, |x, y| leq[x][y]) else {
            continue;
        };
        if distributivity_witness(&alg).is_some() {
            continue;
        }
        let (code, pos) = canonical(n, &leq, None);
        if let Entry::Vacant(slot) = found.entry(code) {
            let relabelled = relabel_order(&leq, &pos);
            slot.insert(FiniteAlgebra::from_order(n, |x, y| relabelled[x][y])?);
        }
    }
    Ok(found.into_values().collect())
}

/// Order-reversing involutions `∼` of a lattice satisfying
/// `a ∧ ∼a ≤ b ∨ ∼b`.
fn kleene_negations(alg: &FiniteAlgebra) -> Vec<Vec<usize>> {
    let n = alg.size();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    fn go(alg: &FiniteAlgebra, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = perm.len();
        let Some(x) = perm.iter().position(|&v| v == usize::MAX) else {
            let antitone = alg.elements().all(|a| {
                alg.elements()
                    .all(|b| !alg.leq(a, b) || alg.leq(perm[b], perm[a]))
            });
            if antitone {
                out.push(perm.clone());
            }
            return;
        };
        for y in x..n {
            if perm[y] != usize::MAX {
                continue;
            }
            perm[x] = y;
            perm[y] = x;
            go(alg, perm, out);
            perm[x] = usize::MAX;
            perm[y] = usize::MAX;
        }
    }
    go(alg, &mut perm, &mut out);
    out.retain(|neg| {
        alg.elements().all(|a| {
            alg.elements()
                .all(|b| alg.leq(alg.meet(a, neg[a]), alg.join(b, neg[b])))
        })
    });
    out
}

/// Kleene algebras with exactly `n` elements, up to isomorphism.
pub fn kleene_algebras(n: usize) -> Result<Vec<FiniteAlgebra>> {
    let mut found: BTreeMap<Vec<usize>, FiniteAlgebra> = BTreeMap::new();
    for lat in distributive_lattices(n)? {
        let leq = leq_matrix(&lat);
        for neg in kleene_negations(&lat) {
            let (code, pos) = canonical(n, &leq, Some(&neg));
            if found.contains_key(&code) {
                continue;
            }
            let relabelled = relabel_order(&leq, &pos);
            let mut new_neg = vec![0; n];
            for (old, &img) in neg.iter().enumerate() {
                new_neg[pos[old]] = pos[img];
            }
            let alg = FiniteAlgebra::from_order(n, |x, y| relabelled[x][y])?
                .with_unary(UnaryOp::Neg, new_neg)?;
            found.insert(code, alg);
        }
    }
    Ok(found.into_values().collect())
}

/// Kleene algebras of size `n` with their Heyting implication and
/// Brouwer difference tables: the finite Kleene symmetrical Heyting
/// algebras.
pub fn kleene_symmetric_heyting(n: usize) -> Result<Vec<FiniteAlgebra>> {
    kleene_algebras(n)?
        .iter()
        .map(with_heyting_brouwer)
        .collect()
}

/// Those Kleene symmetrical Heyting algebras of size `n` that are Nelson
/// algebras under `a →w b = a ⇒ (∼a ∨ b)`.
pub fn nelson_algebras(n: usize) -> Result<Vec<FiniteAlgebra>> {
    let mut out = Vec::new();
    for alg in kleene_symmetric_heyting(n)? {
        let alg = derived_weak_implication(&alg)?;
        if check_class(&alg, ClassName::Nelson)?.holds {
            out.push(alg);
        }
    }
    Ok(out)
}

/// A random finite Kleene symmetrical Heyting algebra with at most
/// `max_size` elements: the opens of a random preorder with a random
/// antitone involution satisfying `P R φ(P)` or `φ(P) R P`. Gives up after
/// `attempts` draws.
pub fn random_kleene_algebra<R: Rng>(
    rng: &mut R,
    max_size: usize,
    attempts: usize,
) -> Result<Option<FiniteAlgebra>> {
    for _ in 0..attempts {
        let points = rng.gen_range(1..=max_size.saturating_sub(1).clamp(1, 8));
        let density = rng.gen_range(0.1..0.6);
        let r = random_preorder(rng, points, density);
        let mut order: Vec<usize> = (0..points).collect();
        order.shuffle(rng);
        let mut perm: Vec<usize> = (0..points).collect();
        for pair in order.chunks(2) {
            if pair.len() == 2 && rng.gen_bool(0.7) {
                perm[pair[0]] = pair[1];
                perm[pair[1]] = pair[0];
            }
        }
        let Ok(v) = PointInvolution::antitone_for(perm, &r) else {
            continue;
        };
        if !v.satisfies_kleene(&r) {
            continue;
        }
        let lattice = opens(&r)?;
        if lattice.len() > max_size {
            continue;
        }
        let alg = lattice.to_algebra(Some(&v))?;
        return Ok(Some(alg));
    }
    Ok(None)
}
