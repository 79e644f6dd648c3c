//! Subsets of `[n]` packed into a single machine word.
//!
//! Bit `i` stands for vertex (or variable) `i + 1`; everything user-facing is
//! 1-based, everything internal is 0-based.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ambient size.
pub const MAX_VERTICES: usize = 62;

/// A subset of `[n]`, `n <= MAX_VERTICES`.
///
/// Ordering is lexicographic on the sorted element lists, so `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, .., n-1}` in 0-based terms, i.e. `[n]`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    /// Builds a set from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    /// Builds a set from 1-based labels. Handy in tests and examples.
    pub fn from_labels<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self::from_indices(it.into_iter().map(|v| v - 1))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub const fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement inside `[n]`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order (0-based).
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Elements in increasing order, 1-based.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }

    /// All subsets of `self`, including `self` and the empty set, in increasing bit order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(0),
        }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

/// Subset enumeration via the `(s - u) & u` trick.
pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some(cur.wrapping_sub(self.universe) & self.universe)
        };
        Some(VertexSet(cur))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both sets agree below the first differing element `p`.
        let p = diff.trailing_zeros();
        let above = if p >= 63 { 0 } else { !((1u64 << (p + 1)) - 1) };
        if (self.0 >> p) & 1 == 1 {
            // `self` continues with p; `other` either ends (prefix) or continues with something larger.
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

/// Serialized as a sorted array of 1-based labels.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|v| v + 1))
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = labels.iter().find(|&&v| v == 0 || v > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex label {bad} outside 1..={MAX_VERTICES}"
            )));
        }
        Ok(VertexSet::from_labels(labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lexicographic_order() {
        let s = |l: &[usize]| VertexSet::from_labels(l.iter().copied());
        let mut v = vec![s(&[2]), s(&[1, 3]), s(&[1, 2, 3]), s(&[1, 2]), s(&[])];
        v.sort();
        assert_eq!(v, vec![s(&[]), s(&[1, 2]), s(&[1, 2, 3]), s(&[1, 3]), s(&[2])]);
    }

    #[test]
    fn subsets_enumerates_everything_once() {
        let u = VertexSet::from_labels([1, 3, 4]);
        let all: Vec<_> = u.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|s| s.is_subset(u)));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(VertexSet::from_indices([0, 2]).to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }

    proptest! {
        #[test]
        fn order_matches_sorted_label_lists(a in 0u64..(1 << 10), b in 0u64..(1 << 10)) {
            let (x, y) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            prop_assert_eq!(x.cmp(&y), x.labels().cmp(&y.labels()));
        }

        #[test]
        fn json_round_trip(a in 0u64..(1 << 62)) {
            let x = VertexSet::from_bits(a);
            let s = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<VertexSet>(&s).unwrap(), x);
        }
    }
}
