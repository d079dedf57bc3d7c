use super::Permutation;
use crate::error::{Error, Result};

/// A deduplicated set of same-degree permutations, iterated in canonical
/// (lexicographic image) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    degree: usize,
    members: Vec<Permutation>,
}

impl ElementSet {
    pub fn new(degree: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut members: Vec<Permutation> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| m.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: bad.degree() });
        }
        members.sort_unstable();
        members.dedup();
        Ok(ElementSet { degree, members })
    }

    /// Caller guarantees sorted, deduplicated, same-degree input.
    pub(crate) fn from_sorted(degree: usize, members: Vec<Permutation>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        ElementSet { degree, members }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.members
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        members.sort_unstable();
        members.dedup();
        ElementSet { degree: self.degree, members }
    }

    /// `{ y^g : y in self }`
    pub fn conjugate_by(&self, g: &Permutation) -> ElementSet {
        let mut members: Vec<Permutation> = self.members.iter().map(|y| y.conj(g)).collect();
        members.sort_unstable();
        ElementSet { degree: self.degree, members }
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
