use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

use super::field::Scalar;

/// Finitely supported linear combination of keys with exact coefficients.
///
/// Zero coefficients are never stored, so two vectors are equal exactly when
/// they represent the same element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Scalar>,
}

/// Coordinates with respect to the basis `0..dim` of some space.
pub type Vector = SparseVec<usize>;

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: K, coeff: Scalar) -> Self {
        let mut v = Self::new();
        v.add_term(key, coeff);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut v = Self::new();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &coeff;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVec<K>, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.entries {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn add_assign(&mut self, other: &SparseVec<K>) {
        for (k, c) in &other.entries {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SparseVec<K>) {
        for (k, c) in &other.entries {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn scaled(&self, coeff: &Scalar) -> Self {
        if coeff.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn plus(&self, other: &SparseVec<K>) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn minus(&self, other: &SparseVec<K>) -> Self {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.entries.get(key)
    }

    pub fn coeff(&self, key: &K, zero: &Scalar) -> Scalar {
        self.entries.get(key).cloned().unwrap_or_else(|| zero.clone())
    }

    pub fn remove(&mut self, key: &K) -> Option<Scalar> {
        self.entries.remove(key)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.entries.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.entries.keys()
    }

    pub fn first(&self) -> Option<(&K, &Scalar)> {
        self.entries.iter().next()
    }

    pub fn last(&self) -> Option<(&K, &Scalar)> {
        self.entries.iter().next_back()
    }

    pub fn pop_last(&mut self) -> Option<(K, Scalar)> {
        self.entries.pop_last()
    }

    pub fn range_from(&self, key: &K) -> btree_map::Range<'_, K, Scalar> {
        self.entries.range(key.clone()..)
    }

    /// Re-indexes every term; colliding keys are summed.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> SparseVec<L> {
        let mut r = SparseVec::new();
        for (k, c) in &self.entries {
            r.add_term(f(k), c.clone());
        }
        r
    }

    /// Applies a linear map given on basis keys.
    pub fn apply<L: Ord + Clone, F: FnMut(&K) -> SparseVec<L>>(&self, mut f: F) -> SparseVec<L> {
        let mut r = SparseVec::new();
        for (k, c) in &self.entries {
            r.add_scaled(&f(k), c);
        }
        r
    }

    pub fn retain<F: FnMut(&K, &Scalar) -> bool>(&mut self, mut f: F) {
        self.entries.retain(|k, c| f(k, c));
    }

    pub fn into_terms(self) -> btree_map::IntoIter<K, Scalar> {
        self.entries.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a SparseVec<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for SparseVec<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.entries {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}){k:?}")?;
        }
        Ok(())
    }
}

/// Dot product of two coordinate vectors.
pub fn dot<K: Ord + Clone>(a: &SparseVec<K>, b: &SparseVec<K>, zero: &Scalar) -> Scalar {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut s = zero.clone();
    for (k, c) in small {
        if let Some(d) = large.get(k) {
            s += &(c * d);
        }
    }
    s
}
