//! Bitmask subsets of a finite universe `0..n`.
//!
//! Universes of up to 64 points fit in one inline word; larger universes
//! spill into extra words, up to [`MAX_UNIVERSE`] points.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use smallvec::SmallVec;

use crate::error::Error;

/// Largest universe a [`Subset`] may range over.
pub const MAX_UNIVERSE: usize = 1024;

const WORD: usize = 64;

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `0..universe`.
///
/// Ordering compares the subsets as unsigned integers (bit `i` has weight
/// `2^i`), which is the canonical order used for every sorted listing in
/// this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: usize,
    words: SmallVec<[u64; 1]>,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        assert!(
            universe <= MAX_UNIVERSE,
            "universe {universe} exceeds {MAX_UNIVERSE}"
        );
        Subset {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Subset::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Subset::empty(universe);
        s.insert(x);
        s
    }

    /// Builds a subset from point indices, rejecting indices outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(
        universe: usize,
        items: I,
    ) -> Result<Self, Error> {
        if universe > MAX_UNIVERSE {
            return Err(Error::Capacity {
                what: "universe",
                size: universe,
                cap: MAX_UNIVERSE,
            });
        }
        let mut s = Subset::empty(universe);
        for x in items {
            if x >= universe {
                return Err(Error::OutOfRange {
                    index: x,
                    size: universe,
                });
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Subset of a universe of at most 64 points given by its raw mask.
    /// Bits beyond the universe are dropped.
    pub fn from_bits(universe: usize, bits: u64) -> Self {
        assert!(universe <= WORD);
        let mut s = Subset::empty(universe);
        if universe > 0 {
            s.words[0] = bits;
            s.trim();
        }
        s
    }

    /// Raw mask when the universe fits in a single word.
    pub fn bits(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD] >> (x % WORD) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        assert!(
            x < self.universe,
            "point {x} outside universe of size {}",
            self.universe
        );
        self.words[x / WORD] |= 1 << (x % WORD);
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.words[x / WORD] &= !(1 << (x % WORD));
        }
    }

    pub fn with(mut self, x: usize) -> Self {
        self.insert(x);
        self
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Subset::full(self.universe)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Subset {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    /// Image of this set under a map on points.
    pub fn image(&self, map: &[usize]) -> Subset {
        debug_assert_eq!(map.len(), self.universe);
        let mut out = Subset::empty(self.universe);
        for x in self.iter() {
            out.insert(map[x]);
        }
        out
    }

    /// Points in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &Subset) {
        assert_eq!(
            self.universe, other.universe,
            "subsets over different universes"
        );
    }

    fn zip_with(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        self.check_universe(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Subset {
            universe: self.universe,
            words,
        }
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for &Subset {
    type Output = Subset;
    fn bitor(self, rhs: &Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for &Subset {
    type Output = Subset;
    fn bitand(self, rhs: &Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for &Subset {
    type Output = Subset;
    fn sub(self, rhs: &Subset) -> Subset {
        self.difference(rhs)
    }
}

impl Not for &Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        self.complement()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.universe)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_numeric() {
        let a = Subset::from_bits(3, 0b100);
        let b = Subset::from_bits(3, 0b011);
        assert!(b < a);

        let mut big_low = Subset::empty(130);
        big_low.insert(0);
        big_low.insert(1);
        let big_high = Subset::singleton(130, 129);
        assert!(big_low < big_high);
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = Subset::from_bits(3, 0b001);
        assert_eq!(s.complement().to_vec(), vec![1, 2]);
        assert_eq!(Subset::full(70).len(), 70);
        assert_eq!(Subset::full(70).complement(), Subset::empty(70));
    }

    #[test]
    fn multiword_iteration() {
        let s = Subset::from_indices(200, [3, 64, 65, 199]).unwrap();
        assert_eq!(s.to_vec(), vec![3, 64, 65, 199]);
        assert_eq!(s.len(), 4);
        assert!(Subset::from_indices(10, [10]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Subset::from_bits(4, 0b1010).to_string(), "{1,3}");
        assert_eq!(Subset::empty(0).to_string(), "{}");
    }
}
