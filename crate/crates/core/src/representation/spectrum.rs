use crate::algebra::{
    check_class, distributivity_witness, filters, is_deductive_system, is_prime_filter,
    prime_filters_via_join_irreducibles, BinaryOp, ClassName, FilterKind, FiniteAlgebra, UnaryOp,
    DEFAULT_FILTER_SCAN_CAP,
};
use crate::error::{Error, Result};
use crate::order::Preorder;
use crate::rauszer::PointInvolution;
use crate::report::LawReport;
use crate::subset::Subset;

/// Split of a Nelson spectrum: `first` holds the prime filters closed
/// under `→w` modus ponens, `second` is its image under `φ`. Both are sets
/// of point indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kinds {
    pub first: Subset,
    pub second: Subset,
}

/// The prime filters of a finite algebra, ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFilterSpace {
    carrier: usize,
    points: Vec<Subset>,
    order: Preorder,
    phi: Option<PointInvolution>,
    kinds: Option<Kinds>,
}

impl PrimeFilterSpace {
    /// Size of the algebra the points are filters of.
    pub fn carrier(&self) -> usize {
        self.carrier
    }

    /// Points; for spectra, sorted ascending by bitmask.
    pub fn points(&self) -> &[Subset] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `P R Q` iff `P ⊆ Q`.
    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn phi(&self) -> Option<&PointInvolution> {
        self.phi.as_ref()
    }

    pub fn kinds(&self) -> Option<&Kinds> {
        self.kinds.as_ref()
    }

    pub fn index_of(&self, p: &Subset) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// An abstract space on a partial order: point `i` is represented by
    /// its principal down-set, so inclusion of points is the given order.
    pub fn from_order(order: Preorder) -> Self {
        let n = order.len();
        let points = (0..n)
            .map(|i| {
                Subset::from_indices(n, (0..n).filter(|&j| order.relates(j, i))).expect("in range")
            })
            .collect();
        PrimeFilterSpace {
            carrier: n,
            points,
            order,
            phi: None,
            kinds: None,
        }
    }

    /// Replaces `φ`, checking it is an antitone involution of the points.
    /// Any split into kinds is dropped.
    pub fn with_phi(self, phi: PointInvolution) -> Result<Self> {
        if phi.len() != self.len() {
            return Err(Error::UniverseMismatch {
                expected: self.len(),
                found: phi.len(),
            });
        }
        phi.check_antitone(&self.order)?;
        Ok(PrimeFilterSpace {
            phi: Some(phi),
            kinds: None,
            ..self
        })
    }

    /// Laws tying the split to `φ` and the order. Exclusivity is only
    /// demanded off the fixed points of `φ`, where a filter is trivially
    /// both `P ⊆ φ(P)` and `φ(P) ⊆ P`.
    pub fn kind_laws(&self) -> Option<LawReport> {
        let (kinds, phi) = (self.kinds.as_ref()?, self.phi.as_ref()?);
        let n = self.len();
        let mut report = LawReport::new();
        let p = &self.points;
        let first = |pred: &dyn Fn(usize) -> bool| (0..n).find(|&i| !pred(i)).map(|i| vec![i]);
        report.record(
            "cover",
            first(&|i| kinds.first.contains(i) || kinds.second.contains(i)),
        );
        report.record(
            "first-below-phi",
            first(&|i| !kinds.first.contains(i) || p[i].is_subset(&p[phi.apply(i)])),
        );
        report.record(
            "second-above-phi",
            first(&|i| !kinds.second.contains(i) || p[phi.apply(i)].is_subset(&p[i])),
        );
        report.record(
            "exclusive",
            first(&|i| phi.apply(i) == i || !(kinds.first.contains(i) && kinds.second.contains(i))),
        );
        report.record(
            "phi-maps-first-onto-second",
            if kinds.first.image(phi.as_slice()) == kinds.second {
                None
            } else {
                Some(kinds.first.to_vec())
            },
        );
        Some(report)
    }
}

/// Prime filters of `alg` with the inclusion order. Carriers above the scan
/// cap go through join-irreducibles instead of the subset scan.
pub fn prime_spectrum(alg: &FiniteAlgebra) -> Result<PrimeFilterSpace> {
    if let Some(witness) = distributivity_witness(alg) {
        return Err(Error::NotDistributive { witness });
    }
    let mut points = if alg.size() <= DEFAULT_FILTER_SCAN_CAP {
        filters(alg, FilterKind::Prime)?.members
    } else {
        prime_filters_via_join_irreducibles(alg)
    };
    points.sort();
    let order = Preorder::from_fn(points.len(), |i, j| points[i].is_subset(&points[j]))?;
    Ok(PrimeFilterSpace {
        carrier: alg.size(),
        points,
        order,
        phi: None,
        kinds: None,
    })
}

fn check_space(alg: &FiniteAlgebra, space: &PrimeFilterSpace) -> Result<()> {
    if space.carrier != alg.size() {
        return Err(Error::UniverseMismatch {
            expected: alg.size(),
            found: space.carrier,
        });
    }
    Ok(())
}

/// `φ(P) = −(∼P)`, checked to land on a prime filter, to be involutive and
/// antitone, and on Kleene inputs to satisfy `P ⊆ φ(P)` or `φ(P) ⊆ P`.
pub fn rasiowa_involution(
    alg: &FiniteAlgebra,
    space: &PrimeFilterSpace,
) -> Result<PointInvolution> {
    check_space(alg, space)?;
    let neg = alg.unary(UnaryOp::Neg).ok_or(Error::MissingInvolution)?;
    let mut perm = Vec::with_capacity(space.len());
    for (i, p) in space.points.iter().enumerate() {
        let image = p.image(neg).complement();
        if !is_prime_filter(alg, &image) {
            return Err(Error::PhiNotPoint { point: i });
        }
        perm.push(
            space
                .index_of(&image)
                .ok_or(Error::PhiNotPoint { point: i })?,
        );
    }
    let phi = PointInvolution::new(perm)?;
    phi.check_antitone(&space.order)?;
    if check_class(alg, ClassName::Kleene)?.holds {
        if let Some(point) = phi.kleene_witness(&space.order) {
            return Err(Error::NotKleene {
                axiom: "K".into(),
                witness: vec![point],
            });
        }
    }
    Ok(phi)
}

/// Attaches `φ` to the space, and on Nelson inputs (with a `wimpl` table)
/// also the split into the two kinds of points.
pub fn with_involution(alg: &FiniteAlgebra, space: &PrimeFilterSpace) -> Result<PrimeFilterSpace> {
    let phi = rasiowa_involution(alg, space)?;
    let nelson = alg.has_binary(BinaryOp::WImpl) && check_class(alg, ClassName::Nelson)?.holds;
    let kinds = if nelson {
        let n = space.len();
        let mut first = Subset::empty(n);
        for (i, p) in space.points.iter().enumerate() {
            if is_deductive_system(alg, BinaryOp::WImpl, p)? {
                first.insert(i);
            }
        }
        let second = first.image(phi.as_slice());
        Some(Kinds { first, second })
    } else {
        None
    };
    Ok(PrimeFilterSpace {
        phi: Some(phi),
        kinds,
        ..space.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn spectra_of_small_lattices() {
        let s = prime_spectrum(&samples::chain(3)).unwrap();
        assert_eq!(s.points(), &[set(3, &[2]), set(3, &[1, 2])]);
        assert_eq!(s.order(), &Preorder::chain(2));

        let s = prime_spectrum(&samples::product(2, 2)).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.order(), &Preorder::identity(2));

        assert_eq!(prime_spectrum(&samples::chain(2)).unwrap().len(), 1);
    }

    #[test]
    fn pentagon_is_rejected() {
        let err = prime_spectrum(&samples::pentagon().unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotDistributive { .. }));
    }

    #[test]
    fn involution_examples() {
        let k3 = samples::kleene_chain(3);
        let phi = rasiowa_involution(&k3, &prime_spectrum(&k3).unwrap()).unwrap();
        assert_eq!(phi.as_slice(), &[1, 0]);

        let b2 = samples::boolean2();
        let phi = rasiowa_involution(&b2, &prime_spectrum(&b2).unwrap()).unwrap();
        assert_eq!(phi.as_slice(), &[0]);

        let d = samples::diamond_fixing_atoms();
        let phi = rasiowa_involution(&d, &prime_spectrum(&d).unwrap()).unwrap();
        assert_eq!(phi.as_slice(), &[1, 0]);

        let err = rasiowa_involution(
            &samples::chain(3),
            &prime_spectrum(&samples::chain(3)).unwrap(),
        );
        assert_eq!(err.unwrap_err(), Error::MissingInvolution);
    }

    #[test]
    fn nelson_kinds() {
        let n3 = samples::nelson_chain(3);
        let space = with_involution(&n3, &prime_spectrum(&n3).unwrap()).unwrap();
        let kinds = space.kinds().unwrap();
        assert_eq!(kinds.first, set(2, &[0]));
        assert_eq!(kinds.second, set(2, &[1]));
        assert!(space.kind_laws().unwrap().all_hold());

        // the single point of the two-element algebra is fixed by φ and of both kinds
        let b2 = crate::algebra::derived_weak_implication(
            &crate::algebra::with_heyting_brouwer(&samples::boolean2()).unwrap(),
        )
        .unwrap();
        let space = with_involution(&b2, &prime_spectrum(&b2).unwrap()).unwrap();
        let kinds = space.kinds().unwrap();
        assert_eq!((kinds.first.len(), kinds.second.len()), (1, 1));
        assert!(space.kind_laws().unwrap().all_hold());
    }
}
