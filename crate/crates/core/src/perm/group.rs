use std::sync::{Arc, OnceLock};

use super::{Bsgs, ElementSet, Permutation};
use crate::error::{Error, Result};
use crate::table::EnumeratedGroup;

/// Largest group that will be enumerated element by element unless the
/// caller asks for more.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

/// A permutation group given by generators.
///
/// The BSGS and the full element table are built on first use and shared
/// between clones.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: OnceLock<Arc<Bsgs>>,
    elements: OnceLock<Arc<EnumeratedGroup>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidArgument("a group needs at least one generator".into()));
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: bad.degree() });
        }
        Ok(PermGroup { degree, generators, bsgs: OnceLock::new(), elements: OnceLock::new() })
    }

    /// Adopts an already built BSGS for `generators`.
    pub(crate) fn with_prebuilt(degree: usize, generators: Vec<Permutation>, bsgs: Bsgs) -> Self {
        let generators = if generators.is_empty() { vec![Permutation::identity(degree)] } else { generators };
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(bsgs));
        PermGroup { degree, generators, bsgs: cell, elements: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, vec![Permutation::identity(degree)]).expect("identity generator")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Arc::new(Bsgs::new(self.degree, &self.generators)))
    }

    /// Forces construction of the BSGS.
    pub fn with_bsgs(self) -> Self {
        self.bsgs();
        self
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.bsgs().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub(crate) fn require_member(&self, g: &Permutation) -> Result<()> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: g.degree() });
        }
        if !self.contains(g) {
            return Err(Error::NotMember { element: g.to_string() });
        }
        Ok(())
    }

    /// The full multiplication table, built once; fails if the group is
    /// larger than `cap`.
    pub fn enumerate(&self, cap: usize) -> Result<Arc<EnumeratedGroup>> {
        if let Some(e) = self.elements.get() {
            if e.len() > cap {
                return Err(Error::CapExceeded { order: e.len() as u128, cap });
            }
            return Ok(Arc::clone(e));
        }
        let order = self.order();
        if order > cap as u128 {
            return Err(Error::CapExceeded { order, cap });
        }
        let built = Arc::new(EnumeratedGroup::build(self.degree, &self.generators, cap)?);
        debug_assert_eq!(built.len() as u128, order);
        Ok(Arc::clone(self.elements.get_or_init(|| built)))
    }

    pub fn enumerated(&self) -> Result<Arc<EnumeratedGroup>> {
        self.enumerate(DEFAULT_ENUMERATION_CAP)
    }

    pub fn elements(&self, cap: usize) -> Result<ElementSet> {
        let e = self.enumerate(cap)?;
        Ok(ElementSet::from_sorted(self.degree, e.elements().to_vec()))
    }
}

/// Builds the BSGS of `group` (no-op if already present).
pub fn build_bsgs(group: PermGroup) -> PermGroup {
    group.with_bsgs()
}

/// All elements of `group`, or [`Error::CapExceeded`] if there are more than `cap`.
pub fn enumerate_elements(group: &PermGroup, cap: usize) -> Result<ElementSet> {
    group.elements(cap)
}
