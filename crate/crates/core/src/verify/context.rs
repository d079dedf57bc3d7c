use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::catalog::CatalogEntry;
use crate::error::Result;
use crate::graph::SolubilityGraph;
use crate::solubilizer::{PairCache, SolubilizerAtlas};
use crate::structure::{is_soluble, soluble_radical_from, RadicalResult};
use crate::table::EnumeratedGroup;

/// Everything the checks share for one group, built once.
pub(crate) struct GroupContext<'a> {
    pub entry: &'a CatalogEntry,
    pub eg: Arc<EnumeratedGroup>,
    pub atlas: SolubilizerAtlas,
    /// From the derived series, independently of the solubilizers.
    pub soluble: bool,
    radical: OnceLock<Result<(RadicalResult, FixedBitSet)>>,
    graph: OnceLock<SolubilityGraph>,
}

impl<'a> GroupContext<'a> {
    pub fn new(entry: &'a CatalogEntry) -> Result<Self> {
        let eg = entry.group.enumerated()?;
        let cache = PairCache::new();
        let atlas = SolubilizerAtlas::compute(&entry.group, &cache)?;
        Ok(GroupContext {
            entry,
            eg,
            atlas,
            soluble: is_soluble(&entry.group),
            radical: OnceLock::new(),
            graph: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.eg.len()
    }

    pub fn radical(&self) -> Result<&(RadicalResult, FixedBitSet)> {
        self.radical
            .get_or_init(|| {
                let r = soluble_radical_from(&self.entry.group, &self.atlas)?;
                let bits = self.eg.bitset_of(&r.radical)?;
                Ok((r, bits))
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn radical_order(&self) -> Result<usize> {
        Ok(self.radical()?.0.radical.len())
    }

    pub fn graph(&self) -> &SolubilityGraph {
        self.graph.get_or_init(|| SolubilityGraph::from_atlas(&self.atlas))
    }

    pub fn element_name(&self, x: usize) -> String {
        self.eg.element(x).to_string()
    }
}
