use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::partition::Partition;

/// Signed integer multiplicities keyed by irrep label.
///
/// Zero entries are never stored. Iteration follows the key order, which
/// for [`Partition`] is decreasing box count, then decreasing rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Decomposition<K: Ord = Partition> {
    terms: BTreeMap<K, i64>,
}

/// Result type of modification, where intermediate sums may be negative.
pub type SignedDecomposition = Decomposition<Partition>;

impl<K: Ord> Default for Decomposition<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord> Decomposition<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: K, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(mult);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += mult;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_all(&mut self, other: &Decomposition<K>, factor: i64)
    where
        K: Clone,
    {
        for (k, m) in other.iter() {
            self.add(k.clone(), m * factor);
        }
    }

    pub fn get(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Number of distinct labels.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    pub fn map_keys<L: Ord, F: FnMut(&K) -> L>(&self, mut f: F) -> Decomposition<L> {
        let mut out = Decomposition::new();
        for (k, m) in self.iter() {
            out.add(f(k), m);
        }
        out
    }
}

impl<K: Ord> FromIterator<(K, i64)> for Decomposition<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, m) in iter {
            out.add(k, m);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a Decomposition<K> {
    type Item = (&'a K, &'a i64);
    type IntoIter = std::collections::btree_map::Iter<'a, K, i64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Renders `[3,2] + 2[2,1] - [1]`; an empty decomposition prints as `0`.
impl<K: Ord + fmt::Display> fmt::Display for Decomposition<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m)) in self.iter().enumerate() {
            let abs = m.unsigned_abs();
            match (i, m < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for Decomposition<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn zeros_are_dropped() {
        let mut d = Decomposition::new();
        d.add(p(&[2, 1]), 2);
        d.add(p(&[2, 1]), -1);
        d.add(p(&[1]), 1);
        d.add(p(&[1]), -1);
        d.add(p(&[3]), 0);
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(&p(&[2, 1])), 1);
        assert_eq!(d.get(&p(&[1])), 0);
    }

    #[test]
    fn renders_in_display_order() {
        let d: Decomposition = [(p(&[1]), 2), (p(&[3, 2]), 1), (p(&[2]), -1), (p(&[]), 1)]
            .into_iter()
            .collect();
        assert_eq!(d.to_string(), "[3,2] - [2] + 2[1] + [0]");
        assert_eq!(Decomposition::<Partition>::new().to_string(), "0");
    }
}
