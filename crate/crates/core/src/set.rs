//! Finite universes and bitmask subsets.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use crate::error::{PraxError, Result};

/// Largest universe a [`Subset`] can index.
pub const MAX_POINTS: usize = 64;

/// Ordered, labelled carrier of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(PraxError::EmptyUniverse);
        }
        if labels.len() > MAX_POINTS {
            return Err(PraxError::UniverseTooLarge { n: labels.len(), max: MAX_POINTS });
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PraxError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(Self { labels, index }))
    }

    /// Universe labelled `0..n`.
    pub fn numbered(n: usize) -> Result<Arc<Self>> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| PraxError::UnknownElement(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Parses labels into a subset.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            s = s.with(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn names(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Errors unless every member of `s` indexes this universe.
    pub fn check(&self, s: Subset) -> Result<()> {
        if s.is_subset(self.full()) {
            Ok(())
        } else {
            Err(PraxError::UniverseMismatch)
        }
    }
}

/// Subset of a universe of at most [`MAX_POINTS`] points, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Subset::EMPTY, Subset::with)
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement inside a universe of `n` points.
    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Subset(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }

    /// Every subset of an `n`-point universe, in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 64, "power set of {n} points is not enumerable");
        (0..1u64 << n).map(Subset)
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Subset) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// Renders against a universe.
    pub fn display<'a>(self, u: &'a Universe) -> SubsetDisplay<'a> {
        SubsetDisplay { set: self, universe: u }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SubsetDisplay<'a> {
    set: Subset,
    universe: &'a Universe,
}

impl fmt::Display for SubsetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.set.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.universe.label(i))?;
        }
        write!(f, "}}")
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

/// Bitwise negation over all 64 slots; prefer [`Subset::complement`].
impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

/// Serialized as the ascending list of member indices.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ix = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = ix.iter().find(|&&i| i >= MAX_POINTS) {
            return Err(serde::de::Error::custom(format!("index {bad} exceeds {MAX_POINTS} points")));
        }
        Ok(Subset::from_indices(ix))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

/// Elements of `family` not strictly contained in another member.
pub fn maximal(family: &[Subset]) -> Vec<Subset> {
    family
        .iter()
        .copied()
        .filter(|a| !family.iter().any(|b| a.is_proper_subset(*b)))
        .collect()
}

/// Elements of `family` not strictly containing another member.
pub fn minimal(family: &[Subset]) -> Vec<Subset> {
    family
        .iter()
        .copied()
        .filter(|a| !family.iter().any(|b| b.is_proper_subset(*a)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_mask() {
        let m = Subset::from_indices([0, 2, 5]);
        let subs: Vec<_> = m.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(m)));
        assert_eq!(subs[0], Subset::EMPTY);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn universe_rejects_bad_input() {
        assert!(matches!(Universe::new(Vec::<String>::new()), Err(PraxError::EmptyUniverse)));
        assert!(matches!(Universe::new(["a", "a"]), Err(PraxError::DuplicateLabel(_))));
        assert!(Universe::numbered(65).is_err());
        let u = Universe::new(["a", "b"]).unwrap();
        assert!(matches!(u.subset(["z"]), Err(PraxError::UnknownElement(_))));
        assert!(u.check(Subset::singleton(3)).is_err());
    }

    #[test]
    fn lex_order() {
        let a = Subset::from_indices([0, 2]);
        let b = Subset::from_indices([1]);
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(Subset::singleton(0).lex_cmp(Subset::from_indices([0, 1])), std::cmp::Ordering::Less);
    }

    #[test]
    fn extremal_members() {
        let f = [Subset::from_bits(1), Subset::from_bits(3), Subset::from_bits(4)];
        assert_eq!(maximal(&f), vec![Subset::from_bits(3), Subset::from_bits(4)]);
        assert_eq!(minimal(&f), vec![Subset::from_bits(1), Subset::from_bits(4)]);
    }
}
