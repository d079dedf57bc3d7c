//! `Sol_G(x) = { y ∈ G : ⟨x, y⟩ is soluble }`.
//!
//! The scan over `y` decides one pair at a time and then propagates the answer:
//!
//! * if `⟨x, y⟩` is soluble, every element of it lies in `Sol_G(x)`;
//! * `⟨x, y⟩ = ⟨x, x^i y x^j⟩ = ⟨x, y^k⟩` for `gcd(k, o(y)) = 1`, and
//!   `⟨x, y^c⟩ = ⟨x, y⟩^c` for `c ∈ C_G(x)`, so the answer is shared by the
//!   whole orbit of `y` under those moves.
//!
//! Solubility is a property of the generated subgroup, so answers are cached
//! by its exact element set. Solubilizers of conjugate elements are conjugate;
//! [`SolubilizerAtlas`] computes one per conjugacy class and conjugates.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::perm::{ElementSet, PermGroup, Permutation};
use crate::structure::{centralizer_bits, is_soluble, nilpotency_class, subgroup_closure};
use crate::table::{EnumeratedGroup, IndexSubgroup};

/// Tuple evaluations allowed for the exhaustive commutator test.
pub const BRUTE_FORCE_BUDGET: u128 = 100_000_000;

/// Memo of subgroup solubility, keyed by group table and exact member set.
#[derive(Debug, Default)]
pub struct PairCache {
    map: RwLock<HashMap<(u64, FixedBitSet), bool>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl PairCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Solubility of `sub = ⟨gens⟩`.
    pub(crate) fn is_soluble(&self, eg: &EnumeratedGroup, gens: &[usize], sub: &IndexSubgroup) -> bool {
        if crate::table::soluble_by_order(sub.len()) {
            return true;
        }
        let key = (eg.fingerprint(), sub.members.clone());
        if let Some(&known) = self.map.read().expect("cache lock").get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return known;
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let soluble = eg.is_soluble_subgroup(gens, sub);
        self.map.write().expect("cache lock").insert(key, soluble);
        soluble
    }

    /// Cached entries as `(member set, soluble)` for one group table.
    #[cfg(test)]
    pub(crate) fn entries_for(&self, eg: &EnumeratedGroup) -> Vec<(FixedBitSet, bool)> {
        let fp = eg.fingerprint();
        self.map
            .read()
            .expect("cache lock")
            .iter()
            .filter(|((f, _), _)| *f == fp)
            .map(|((_, bits), &s)| (bits.clone(), s))
            .collect()
    }
}

/// Whether `⟨x, y⟩` is soluble.
pub fn pair_is_soluble(group: &PermGroup, x: &Permutation, y: &Permutation, cache: &PairCache) -> Result<bool> {
    let eg = group.enumerated()?;
    let xi = eg.require_index(x)?;
    let yi = eg.require_index(y)?;
    let sub = eg.closure(&[xi, yi]);
    Ok(cache.is_soluble(&eg, &[xi, yi], &sub))
}

/// Elements `z` with `⟨x, z⟩` conjugate to `⟨x, y⟩` under `C_G(x)`.
fn equivalent_partners(eg: &EnumeratedGroup, x: usize, y: usize, centralizer_gens: &[usize]) -> Vec<usize> {
    let mut seen = FixedBitSet::with_capacity(eg.len());
    let mut orbit = vec![y];
    seen.insert(y);
    let mut pos = 0;
    while pos < orbit.len() {
        let z = orbit[pos];
        let push = |w: usize, seen: &mut FixedBitSet, orbit: &mut Vec<usize>| {
            if !seen.put(w) {
                orbit.push(w);
            }
        };
        push(eg.mul(x, z), &mut seen, &mut orbit);
        push(eg.mul(z, x), &mut seen, &mut orbit);
        for &c in centralizer_gens {
            push(eg.conj(z, c), &mut seen, &mut orbit);
        }
        let order = eg.order_of(z) as u64;
        let mut power = z;
        for k in 1..order {
            if crate::perm::gcd(k, order) == 1 {
                push(power, &mut seen, &mut orbit);
            }
            power = eg.mul(power, z);
        }
        pos += 1;
    }
    orbit
}

/// Member bitset of `Sol_G(x)`.
pub(crate) fn solubilizer_bits(eg: &EnumeratedGroup, x: usize, cache: &PairCache) -> FixedBitSet {
    let n = eg.len();
    let mut sol = FixedBitSet::with_capacity(n);
    let mut decided = FixedBitSet::with_capacity(n);
    let (centralizer_gens, _) = eg.generating_set(centralizer_bits(eg, x).ones());
    for y in 0..n {
        if decided.contains(y) {
            continue;
        }
        let sub = eg.closure(&[x, y]);
        let soluble = cache.is_soluble(eg, &[x, y], &sub);
        for z in equivalent_partners(eg, x, y, &centralizer_gens) {
            decided.insert(z);
            sol.set(z, soluble);
        }
        if soluble {
            sol.union_with(&sub.members);
            decided.union_with(&sub.members);
        }
    }
    sol
}

#[derive(Clone, Debug)]
pub struct SolubilizerResult {
    pub x: Permutation,
    pub members: ElementSet,
    pub cardinality: usize,
    pub is_subgroup: bool,
    /// Nilpotency class when the solubilizer is a nilpotent subgroup.
    pub nilpotency_class_if_subgroup: Option<usize>,
}

fn subgroup_from_indices(eg: &EnumeratedGroup, gens: &[usize]) -> Result<PermGroup> {
    if gens.is_empty() {
        return Ok(PermGroup::trivial(eg.degree()));
    }
    PermGroup::new(eg.degree(), gens.iter().map(|&i| eg.element(i).clone()).collect())
}

/// Subgroup generators and nilpotency class of a member set, if it is a subgroup.
fn subgroup_shape(eg: &EnumeratedGroup, bits: &FixedBitSet) -> Result<(bool, Option<usize>)> {
    match eg.subgroup_generators(bits) {
        Some(gens) => Ok((true, nilpotency_class(&subgroup_from_indices(eg, &gens)?))),
        None => Ok((false, None)),
    }
}

fn result_from_bits(eg: &EnumeratedGroup, x: usize, bits: &FixedBitSet) -> Result<SolubilizerResult> {
    let (is_subgroup, class) = subgroup_shape(eg, bits)?;
    Ok(SolubilizerResult {
        x: eg.element(x).clone(),
        members: eg.to_element_set(bits),
        cardinality: bits.count_ones(..),
        is_subgroup,
        nilpotency_class_if_subgroup: class,
    })
}

pub fn solubilizer(group: &PermGroup, x: &Permutation, cache: &PairCache) -> Result<SolubilizerResult> {
    let eg = group.enumerated()?;
    let xi = eg.require_index(x)?;
    let bits = solubilizer_bits(&eg, xi, cache);
    result_from_bits(&eg, xi, &bits)
}

/// `Sol_G(x)` as the union of the element sets of the soluble subgroups
/// `⟨x, y⟩`, computed with the BSGS derived series and no caching.
pub fn solubilizer_oracle(group: &PermGroup, x: &Permutation) -> Result<ElementSet> {
    group.require_member(x)?;
    let all = group.elements(crate::perm::DEFAULT_ENUMERATION_CAP)?;
    let mut union: HashSet<Permutation> = HashSet::new();
    for y in &all {
        if union.contains(y) {
            // y already lies in a soluble subgroup containing x
            continue;
        }
        let h = subgroup_closure(group, &[x.clone(), y.clone()])?;
        if is_soluble(&h) {
            union.extend(closure_elements(&h));
        }
    }
    ElementSet::new(group.degree(), union)
}

fn closure_elements(h: &PermGroup) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::from([h.identity()]);
    let mut out = vec![h.identity()];
    let mut pos = 0;
    while pos < out.len() {
        for g in h.generators() {
            let next = out[pos].mul(g);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
        pos += 1;
    }
    out
}

/// Solubilizers of every element, computed once per conjugacy class.
#[derive(Debug, Clone)]
pub struct SolubilizerAtlas {
    group: Arc<EnumeratedGroup>,
    /// Member set of `Sol_G(rep)` for each class representative.
    class_sets: Vec<FixedBitSet>,
}

impl SolubilizerAtlas {
    pub fn compute(group: &PermGroup, cache: &PairCache) -> Result<Self> {
        let eg = group.enumerated()?;
        Ok(Self::compute_enumerated(eg, cache))
    }

    pub(crate) fn compute_enumerated(eg: Arc<EnumeratedGroup>, cache: &PairCache) -> Self {
        let reps = &eg.classes().reps;
        let class_sets = reps.par_iter().map(|&r| solubilizer_bits(&eg, r, cache)).collect();
        SolubilizerAtlas { group: eg, class_sets }
    }

    pub fn group(&self) -> &Arc<EnumeratedGroup> {
        &self.group
    }

    pub fn class_count(&self) -> usize {
        self.class_sets.len()
    }

    pub fn class_set(&self, class: usize) -> &FixedBitSet {
        &self.class_sets[class]
    }

    /// Member bitset of `Sol_G(x)` for the element with index `x`.
    pub fn bits(&self, x: usize) -> FixedBitSet {
        let classes = self.group.classes();
        let class = classes.class_of[x] as usize;
        let c = classes.conjugator[x] as usize;
        let base = &self.class_sets[class];
        if c == 0 {
            return base.clone();
        }
        let mut out = FixedBitSet::with_capacity(self.group.len());
        for y in base.ones() {
            out.insert(self.group.conj(y, c));
        }
        out
    }

    pub fn size(&self, x: usize) -> usize {
        let class = self.group.classes().class_of[x] as usize;
        self.class_sets[class].count_ones(..)
    }

    /// Elements whose solubilizer is the whole group.
    pub fn universal_bits(&self) -> FixedBitSet {
        let classes = self.group.classes();
        let n = self.group.len();
        let mut bits = FixedBitSet::with_capacity(n);
        for (c, set) in self.class_sets.iter().enumerate() {
            if set.count_ones(..) == n {
                for &m in &classes.members[c] {
                    bits.insert(m);
                }
            }
        }
        bits
    }

    pub fn result(&self, x: usize) -> Result<SolubilizerResult> {
        result_from_bits(&self.group, x, &self.bits(x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommutatorMode {
    /// Evaluate every k-tuple of solubilizer elements.
    Brute,
    /// Solubilizer is a subgroup of nilpotency class at most k − 1.
    Structural,
}

/// Whether `[u_1, …, u_k] = 1` for all `u_i ∈ Sol_G(x)`.
pub fn commutator_condition(
    group: &PermGroup,
    x: &Permutation,
    k: usize,
    mode: CommutatorMode,
    cache: &PairCache,
) -> Result<bool> {
    let eg = group.enumerated()?;
    let xi = eg.require_index(x)?;
    let bits = solubilizer_bits(&eg, xi, cache);
    commutator_condition_on(&eg, &bits, k, mode)
}

pub(crate) fn commutator_condition_on(
    eg: &EnumeratedGroup,
    sol: &FixedBitSet,
    k: usize,
    mode: CommutatorMode,
) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("commutator weight must be at least 2, got {k}")));
    }
    match mode {
        CommutatorMode::Brute => brute_commutator_condition(eg, sol, k),
        CommutatorMode::Structural => {
            let (is_subgroup, class) = subgroup_shape(eg, sol)?;
            Ok(is_subgroup && class.is_some_and(|c| c < k))
        }
    }
}

fn brute_commutator_condition(eg: &EnumeratedGroup, sol: &FixedBitSet, k: usize) -> Result<bool> {
    let members: Vec<usize> = sol.ones().collect();
    let needed = (members.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if needed > BRUTE_FORCE_BUDGET {
        return Err(Error::BudgetExceeded { needed, budget: BRUTE_FORCE_BUDGET });
    }
    // depth-first over tuples; once the partial commutator is trivial every
    // extension is trivial too
    fn all_trivial(eg: &EnumeratedGroup, members: &[usize], acc: usize, remaining: usize) -> bool {
        if acc == 0 || remaining == 0 {
            return acc == 0;
        }
        members.iter().all(|&u| all_trivial(eg, members, eg.comm(acc, u), remaining - 1))
    }
    Ok(members.iter().all(|&u| all_trivial(eg, &members, u, k - 1)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkHit {
    pub group: String,
    pub element: String,
    pub sol_size: usize,
    /// `|Sol_G(x)|` is the full 2-part of `|G|`.
    pub sylow_2_order: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkReport {
    pub k: usize,
    pub scanned: Vec<String>,
    pub excluded_soluble: Vec<String>,
    pub hits: Vec<RemarkHit>,
}

fn two_part(mut n: u128) -> u128 {
    let mut part = 1;
    while n.is_multiple_of(2) {
        n /= 2;
        part *= 2;
    }
    part
}

/// Lists every `(G, x)` with `G` insoluble whose solubilizer satisfies the
/// weight-`k` commutator condition. Reports only; no outcome is asserted.
pub fn search_remark_counterexample(catalog: &[CatalogEntry], k: usize) -> Result<RemarkReport> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("commutator weight must be at least 2, got {k}")));
    }
    let mut report = RemarkReport { k, scanned: Vec::new(), excluded_soluble: Vec::new(), hits: Vec::new() };
    for entry in catalog {
        if is_soluble(&entry.group) {
            report.excluded_soluble.push(entry.name.clone());
            continue;
        }
        report.scanned.push(entry.name.clone());
        let cache = PairCache::new();
        let atlas = SolubilizerAtlas::compute(&entry.group, &cache)?;
        report.hits.extend(remark_hits(&entry.name, &atlas, k)?);
    }
    Ok(report)
}

pub(crate) fn remark_hits(name: &str, atlas: &SolubilizerAtlas, k: usize) -> Result<Vec<RemarkHit>> {
    let eg = atlas.group();
    let classes = eg.classes();
    let group_two_part = two_part(eg.len() as u128);
    let mut hits = Vec::new();
    // the condition is invariant under conjugation, so test class representatives
    for (c, set) in (0..atlas.class_count()).map(|c| (c, atlas.class_set(c))) {
        if !commutator_condition_on(eg, set, k, CommutatorMode::Structural)? {
            continue;
        }
        let size = set.count_ones(..);
        for &m in &classes.members[c] {
            hits.push(RemarkHit {
                group: name.to_string(),
                element: eg.element(m).to_string(),
                sol_size: size,
                sylow_2_order: size.is_power_of_two() && size as u128 == group_two_part,
            });
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, dihedral, symmetric};
    use crate::perm::parse_cycles;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn pair_examples() {
        let a5 = alternating(5).unwrap();
        let cache = PairCache::new();
        let x = p("(1 2 3 4 5)", 5);
        assert!(pair_is_soluble(&a5, &x, &x, &cache).unwrap());
        assert!(!pair_is_soluble(&a5, &x, &p("(1 2 3)", 5), &cache).unwrap());
        assert!(pair_is_soluble(&a5, &x, &a5.identity(), &cache).unwrap());
        assert!(pair_is_soluble(&a5, &x, &p("(1 2)", 5), &cache).is_err());
    }

    #[test]
    fn a5_three_cycle() {
        let a5 = alternating(5).unwrap();
        let r = solubilizer(&a5, &p("(1 2 3)", 5), &PairCache::new()).unwrap();
        assert_eq!(r.cardinality, 24);
        assert!(!r.is_subgroup);
        assert_eq!(r.nilpotency_class_if_subgroup, None);
    }

    #[test]
    fn psl27_order_three() {
        let g = by_name("PSL2-7").unwrap().group;
        let eg = g.enumerated().unwrap();
        let x = (0..eg.len()).find(|&i| eg.order_of(i) == 3).unwrap();
        let r = solubilizer(&g, eg.element(x), &PairCache::new()).unwrap();
        assert_eq!(r.cardinality, 78);
    }

    #[test]
    fn soluble_group_gives_everything() {
        let s4 = symmetric(4).unwrap();
        let cache = PairCache::new();
        for x in s4.elements(100).unwrap().iter() {
            assert_eq!(solubilizer(&s4, x, &cache).unwrap().cardinality, 24);
        }
    }

    #[test]
    fn a5_double_transposition_matches_full_scan() {
        let a5 = alternating(5).unwrap();
        let x = p("(1 2)(3 4)", 5);
        let full: Vec<Permutation> = a5
            .elements(100)
            .unwrap()
            .iter()
            .filter(|y| is_soluble(&subgroup_closure(&a5, &[x.clone(), (*y).clone()]).unwrap()))
            .cloned()
            .collect();
        let r = solubilizer(&a5, &x, &PairCache::new()).unwrap();
        assert_eq!(r.members.as_slice(), full.as_slice());
        assert_eq!(r.cardinality, full.len());
    }

    #[test]
    fn oracle_examples() {
        let a5 = alternating(5).unwrap();
        let x = p("(1 2 3 4 5)", 5);
        let oracle = solubilizer_oracle(&a5, &x).unwrap();
        assert_eq!(oracle.len(), 10);
        assert_eq!(oracle, solubilizer(&a5, &x, &PairCache::new()).unwrap().members);

        let s4 = symmetric(4).unwrap();
        assert_eq!(solubilizer_oracle(&s4, &s4.identity()).unwrap().len(), 24);

        let s5 = symmetric(5).unwrap();
        let t = p("(1 2)", 5);
        assert_eq!(solubilizer_oracle(&s5, &t).unwrap(), solubilizer(&s5, &t, &PairCache::new()).unwrap().members);
    }

    #[test]
    fn commutator_condition_examples() {
        let cache = PairCache::new();
        let c6 = by_name("C6").unwrap().group;
        for mode in [CommutatorMode::Brute, CommutatorMode::Structural] {
            assert!(commutator_condition(&c6, &p("(1 2 3 4 5 6)", 6), 2, mode, &cache).unwrap());
        }
        let d4 = dihedral(4).unwrap();
        for x in d4.elements(100).unwrap().iter() {
            for mode in [CommutatorMode::Brute, CommutatorMode::Structural] {
                assert!(commutator_condition(&d4, x, 3, mode, &cache).unwrap());
                assert!(!commutator_condition(&d4, x, 2, mode, &cache).unwrap());
            }
        }
        let a5 = alternating(5).unwrap();
        for x in a5.elements(100).unwrap().iter() {
            for mode in [CommutatorMode::Brute, CommutatorMode::Structural] {
                assert!(!commutator_condition(&a5, x, 3, mode, &cache).unwrap());
            }
        }
        assert!(commutator_condition(&a5, &a5.identity(), 1, CommutatorMode::Brute, &cache).is_err());
    }

    #[test]
    fn brute_budget() {
        let g = by_name("A5xA5").unwrap().group;
        let cache = PairCache::new();
        let err = commutator_condition(&g, &g.identity(), 3, CommutatorMode::Brute, &cache).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn cache_reuses_subgroups() {
        let a5 = alternating(5).unwrap();
        let cache = PairCache::new();
        SolubilizerAtlas::compute(&a5, &cache).unwrap();
        let misses = cache.misses();
        SolubilizerAtlas::compute(&a5, &cache).unwrap();
        assert_eq!(cache.misses(), misses);
        assert!(cache.hits() > 0);
        let eg = a5.enumerated().unwrap();
        for (bits, soluble) in cache.entries_for(&eg) {
            let gens = eg.subgroup_generators(&bits).unwrap();
            assert_eq!(soluble, is_soluble(&subgroup_from_indices(&eg, &gens).unwrap()));
        }
    }

    #[test]
    fn atlas_matches_direct_scan() {
        let s5 = symmetric(5).unwrap();
        let cache = PairCache::new();
        let atlas = SolubilizerAtlas::compute(&s5, &cache).unwrap();
        let eg = atlas.group().clone();
        for x in 0..eg.len() {
            assert_eq!(atlas.bits(x), solubilizer_bits(&eg, x, &PairCache::new()));
        }
    }

    #[test]
    fn remark_search_filters_soluble() {
        let catalog: Vec<CatalogEntry> = ["S4", "D4", "C6"].iter().map(|n| by_name(n).unwrap()).collect();
        let report = search_remark_counterexample(&catalog, 4).unwrap();
        assert!(report.scanned.is_empty());
        assert_eq!(report.excluded_soluble.len(), 3);
        assert!(report.hits.is_empty());
    }

    #[test]
    fn remark_search_small_insoluble() {
        let catalog: Vec<CatalogEntry> = ["A5", "S5", "PSL2-7"].iter().map(|n| by_name(n).unwrap()).collect();
        for k in [3, 4] {
            let report = search_remark_counterexample(&catalog, k).unwrap();
            assert_eq!(report.scanned.len(), 3);
            assert!(report.hits.is_empty(), "k = {k}: {:?}", report.hits);
        }
    }

    #[test]
    fn two_parts() {
        assert_eq!(two_part(60), 4);
        assert_eq!(two_part(168), 8);
        assert_eq!(two_part(7), 1);
    }
}
