//! Subgroup structure: generated subgroups, derived and lower central series,
//! centralizers and normalizers of cyclic subgroups, quotients and the
//! soluble radical.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Bsgs, ElementSet, PermGroup, Permutation};
use crate::solubilizer::{PairCache, SolubilizerAtlas};
use crate::table::EnumeratedGroup;

/// Default bound on the number of terms of a derived or lower central series.
pub const DEFAULT_SERIES_LEN: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A descending series, stopping at the first term equal to its successor.
#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub kind: SeriesKind,
    pub terms: Vec<PermGroup>,
}

impl SeriesRecord {
    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(PermGroup::order).collect()
    }

    pub fn last(&self) -> &PermGroup {
        self.terms.last().expect("series has at least one term")
    }

    pub fn reaches_identity(&self) -> bool {
        self.last().order() == 1
    }
}

/// The subgroup of `group` generated by `seed`.
pub fn subgroup_closure(group: &PermGroup, seed: &[Permutation]) -> Result<PermGroup> {
    for s in seed {
        group.require_member(s)?;
    }
    let gens: Vec<Permutation> = seed.iter().filter(|s| !s.is_identity()).cloned().collect();
    if gens.is_empty() {
        return Ok(PermGroup::trivial(group.degree()).with_bsgs());
    }
    Ok(PermGroup::new(group.degree(), gens)?.with_bsgs())
}

/// Smallest subgroup containing `seeds` that is normalized by `ambient`.
fn normal_closure(degree: usize, ambient: &[Permutation], seeds: Vec<Permutation>) -> PermGroup {
    let mut bsgs = Bsgs::new(degree, &[]);
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seeds {
        if bsgs.insert(s.clone()) {
            gens.push(s);
        }
    }
    let mut next = 0;
    while next < gens.len() {
        let g = gens[next].clone();
        for h in ambient {
            let c = g.conj(h);
            if bsgs.insert(c.clone()) {
                gens.push(c);
            }
        }
        next += 1;
    }
    PermGroup::with_prebuilt(degree, gens, bsgs)
}

/// `[H, H]`, the normal closure in `H` of the commutators of generator pairs.
pub fn derived_subgroup(h: &PermGroup) -> PermGroup {
    let gens = h.generators();
    let mut seeds = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.comm(b);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure(h.degree(), gens, seeds)
}

fn series(
    h: &PermGroup,
    kind: SeriesKind,
    max_len: usize,
    next: impl Fn(&PermGroup) -> PermGroup,
) -> (SeriesRecord, bool) {
    let mut terms = vec![h.clone().with_bsgs()];
    loop {
        let current = terms.last().expect("non-empty");
        if current.order() == 1 {
            return (SeriesRecord { kind, terms }, true);
        }
        let following = next(current);
        if following.order() == current.order() {
            return (SeriesRecord { kind, terms }, true);
        }
        if terms.len() == max_len {
            return (SeriesRecord { kind, terms }, false);
        }
        terms.push(following);
    }
}

/// `H ⊇ H' ⊇ H'' ⊇ …` up to the first repeated term.
pub fn derived_series(h: &PermGroup, max_len: usize) -> Result<SeriesRecord> {
    let (record, stabilized) = series(h, SeriesKind::Derived, max_len, derived_subgroup);
    if !stabilized {
        return Err(Error::SeriesTooLong { max_len, last_order: record.last().order() });
    }
    Ok(record)
}

pub fn is_soluble(h: &PermGroup) -> bool {
    // derived series lengths of finite groups are tiny; 64 terms would need |H| >= 2^64
    derived_series(h, DEFAULT_SERIES_LEN).map(|s| s.reaches_identity()).unwrap_or(false)
}

/// `γ_1 = H`, `γ_{i+1} = [γ_i, H]`, up to stabilization or `k_max` terms.
pub fn lower_central_series(h: &PermGroup, k_max: usize) -> SeriesRecord {
    let top = h.generators().to_vec();
    let (record, _) = series(h, SeriesKind::LowerCentral, k_max.max(1), |term| {
        let mut seeds = Vec::new();
        for g in term.generators() {
            for t in &top {
                let c = g.comm(t);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        normal_closure(h.degree(), &top, seeds)
    });
    record
}

/// Least `c` with `γ_{c+1}(H) = 1`, or `None` if `H` is not nilpotent.
pub fn nilpotency_class(h: &PermGroup) -> Option<usize> {
    let record = lower_central_series(h, DEFAULT_SERIES_LEN);
    record.reaches_identity().then(|| record.terms.len() - 1)
}

pub(crate) fn centralizer_bits(eg: &EnumeratedGroup, x: usize) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(eg.len());
    for g in 0..eg.len() {
        if eg.mul(g, x) == eg.mul(x, g) {
            bits.insert(g);
        }
    }
    bits
}

pub(crate) fn cyclic_normalizer_bits(eg: &EnumeratedGroup, x: usize) -> FixedBitSet {
    let cyclic = eg.closure(&[x]);
    let mut bits = FixedBitSet::with_capacity(eg.len());
    for g in 0..eg.len() {
        if cyclic.contains(eg.conj(x, g)) {
            bits.insert(g);
        }
    }
    bits
}

/// `C_G(x)`.
pub fn centralizer(group: &PermGroup, x: &Permutation) -> Result<ElementSet> {
    let eg = group.enumerated()?;
    let xi = eg.require_index(x)?;
    Ok(eg.to_element_set(&centralizer_bits(&eg, xi)))
}

/// `N_G(⟨x⟩)`.
pub fn cyclic_normalizer(group: &PermGroup, x: &Permutation) -> Result<ElementSet> {
    let eg = group.enumerated()?;
    let xi = eg.require_index(x)?;
    Ok(eg.to_element_set(&cyclic_normalizer_bits(&eg, xi)))
}

/// `G/N` acting on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    elements: Arc<EnumeratedGroup>,
    /// Coset number (0-based) of every element of `G`, by canonical index.
    coset_of: Vec<u32>,
    /// Smallest element of each coset.
    coset_reps: Vec<usize>,
}

impl Quotient {
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    /// 1-based point of the coset `Ng`.
    pub fn coset_point(&self, g: &Permutation) -> Result<u32> {
        let i = self.elements.require_index(g)?;
        Ok(self.coset_of[i] + 1)
    }

    /// Image of `g` in `G/N`, as its action on cosets.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        let gi = self.elements.require_index(g)?;
        Ok(self.image_of_index(gi))
    }

    pub(crate) fn image_of_index(&self, g: usize) -> Permutation {
        let images = self.coset_reps.iter().map(|&r| self.coset_of[self.elements.mul(r, g)]).collect();
        Permutation::from_raw(images)
    }
}

/// Checks that `members` is a subgroup normalized by `ambient`; returns its generators.
fn normal_subgroup_generators(eg: &EnumeratedGroup, members: &FixedBitSet) -> Result<Vec<usize>> {
    let gens = eg.subgroup_generators(members).ok_or(Error::NotSubgroup)?;
    for &n in &gens {
        for &g in eg.generators() {
            if !members.contains(eg.conj(n, g)) {
                return Err(Error::NotNormal);
            }
        }
    }
    Ok(gens)
}

pub fn quotient_group(group: &PermGroup, normal: &ElementSet) -> Result<Quotient> {
    let eg = group.enumerated()?;
    let members = eg.bitset_of(normal)?;
    normal_subgroup_generators(&eg, &members)?;
    Ok(quotient_by_bits(group, eg, &members))
}

pub(crate) fn quotient_by_bits(group: &PermGroup, eg: Arc<EnumeratedGroup>, members: &FixedBitSet) -> Quotient {
    let n = eg.len();
    let unassigned = u32::MAX;
    let mut coset_of = vec![unassigned; n];
    let mut coset_reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != unassigned {
            continue;
        }
        let c = coset_reps.len() as u32;
        coset_reps.push(g);
        for m in members.ones() {
            coset_of[eg.mul(m, g)] = c;
        }
    }
    let mut q = Quotient { group: PermGroup::trivial(coset_reps.len()), elements: eg, coset_of, coset_reps };
    let gens: Vec<Permutation> = group
        .generators()
        .iter()
        .map(|g| q.image_of_index(q.elements.index_of(g).expect("generator is an element")))
        .collect();
    q.group = PermGroup::new(q.index(), gens).expect("coset action generators").with_bsgs();
    q
}

/// The soluble radical and the checks that certify it.
#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub radical: ElementSet,
    /// Closed under products and inverses, and under conjugation by the generators.
    pub verified_normal: bool,
    /// Its derived series reaches the identity.
    pub verified_soluble: bool,
    /// The quotient by it has no non-identity universal vertex.
    pub quotient_radical_trivial: bool,
}

/// `R(G)` computed as the set of universal vertices of the solubility graph.
pub fn soluble_radical(group: &PermGroup) -> Result<RadicalResult> {
    let cache = PairCache::new();
    let atlas = SolubilizerAtlas::compute(group, &cache)?;
    soluble_radical_from(group, &atlas)
}

pub(crate) fn soluble_radical_from(group: &PermGroup, atlas: &SolubilizerAtlas) -> Result<RadicalResult> {
    let eg = atlas.group();
    let bits = atlas.universal_bits();
    let radical = eg.to_element_set(&bits);

    let normal_gens = normal_subgroup_generators(eg, &bits);
    let verified_normal = normal_gens.is_ok();
    let verified_soluble = match &normal_gens {
        Ok(gens) => {
            let perms: Vec<Permutation> = gens.iter().map(|&i| eg.element(i).clone()).collect();
            let sub = if perms.is_empty() {
                PermGroup::trivial(group.degree())
            } else {
                PermGroup::new(group.degree(), perms)?
            };
            is_soluble(&sub)
        }
        Err(_) => false,
    };

    let quotient_radical_trivial = if !verified_normal {
        false
    } else if radical.len() == 1 || radical.len() == eg.len() {
        // G/1 is G itself, whose universal vertices were just computed;
        // G/G is trivial.
        true
    } else {
        let q = quotient_by_bits(group, Arc::clone(eg), &bits);
        let q_cache = PairCache::new();
        let q_atlas = SolubilizerAtlas::compute(&q.group, &q_cache)?;
        q_atlas.universal_bits().count_ones(..) == 1
    };

    Ok(RadicalResult { radical, verified_normal, verified_soluble, quotient_radical_trivial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, cyclic, dihedral, quaternion8, symmetric};
    use crate::perm::parse_cycles;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn closure_examples() {
        let a5 = alternating(5).unwrap();
        assert_eq!(subgroup_closure(&a5, &[p("(1 2 3 4 5)", 5), p("(1 2 3)", 5)]).unwrap().order(), 60);
        assert_eq!(subgroup_closure(&a5, &[p("()", 5)]).unwrap().order(), 1);
        let a4 = alternating(4).unwrap();
        assert_eq!(subgroup_closure(&a4, &[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap().order(), 4);
        assert!(matches!(subgroup_closure(&a5, &[p("(1 2)", 5)]), Err(Error::NotMember { .. })));
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(derived_subgroup(&symmetric(4).unwrap()).order(), 12);
        assert_eq!(derived_subgroup(&cyclic(6).unwrap()).order(), 1);
        assert_eq!(derived_subgroup(&alternating(5).unwrap()).order(), 60);
    }

    #[test]
    fn derived_series_examples() {
        assert_eq!(derived_series(&symmetric(4).unwrap(), 64).unwrap().orders(), vec![24, 12, 4, 1]);
        assert_eq!(derived_series(&alternating(5).unwrap(), 64).unwrap().orders(), vec![60]);
        assert_eq!(derived_series(&PermGroup::trivial(3), 64).unwrap().orders(), vec![1]);
    }

    #[test]
    fn derived_series_limit() {
        let err = derived_series(&symmetric(4).unwrap(), 2).unwrap_err();
        assert_eq!(err, Error::SeriesTooLong { max_len: 2, last_order: 12 });
        assert!(derived_series(&symmetric(4).unwrap(), 4).is_ok());
    }

    #[test]
    fn solubility() {
        assert!(is_soluble(&symmetric(4).unwrap()));
        assert!(!is_soluble(&alternating(5).unwrap()));
        assert!(is_soluble(&cyclic(1).unwrap()));
        assert!(!is_soluble(&symmetric(5).unwrap()));
    }

    #[test]
    fn lower_central_examples() {
        let d4 = dihedral(4).unwrap();
        assert_eq!(lower_central_series(&d4, 64).orders(), vec![8, 2, 1]);
        assert_eq!(nilpotency_class(&d4), Some(2));
        assert_eq!(lower_central_series(&cyclic(6).unwrap(), 64).orders(), vec![6, 1]);
        let s3 = symmetric(3).unwrap();
        assert_eq!(lower_central_series(&s3, 64).orders(), vec![6, 3]);
        assert_eq!(nilpotency_class(&s3), None);
        assert_eq!(nilpotency_class(&quaternion8()), Some(2));
        assert_eq!(nilpotency_class(&cyclic(5).unwrap()), Some(1));
        assert_eq!(nilpotency_class(&PermGroup::trivial(2)), Some(0));
    }

    #[test]
    fn lower_central_terms_are_normal() {
        let g = symmetric(4).unwrap();
        for term in &lower_central_series(&g, 64).terms {
            for t in term.generators() {
                for h in g.generators() {
                    assert!(term.contains(&t.conj(h)));
                }
            }
        }
    }

    #[test]
    fn centralizer_and_normalizer() {
        let a5 = alternating(5).unwrap();
        let x = p("(1 2 3 4 5)", 5);
        assert_eq!(centralizer(&a5, &x).unwrap().len(), 5);
        assert_eq!(cyclic_normalizer(&a5, &x).unwrap().len(), 10);
        let e = a5.identity();
        assert_eq!(centralizer(&a5, &e).unwrap().len(), 60);
        assert_eq!(cyclic_normalizer(&a5, &e).unwrap().len(), 60);
        assert!(centralizer(&a5, &p("(1 2)", 5)).is_err());
    }

    #[test]
    fn radical_examples() {
        let a5 = soluble_radical(&alternating(5).unwrap()).unwrap();
        assert_eq!(a5.radical.len(), 1);
        assert!(a5.verified_normal && a5.verified_soluble && a5.quotient_radical_trivial);

        let s4 = soluble_radical(&symmetric(4).unwrap()).unwrap();
        assert_eq!(s4.radical.len(), 24);
        assert!(s4.verified_normal && s4.verified_soluble && s4.quotient_radical_trivial);

        let r = soluble_radical(&by_name("A5xC2").unwrap().group).unwrap();
        assert_eq!(r.radical.len(), 2);
        assert!(r.verified_normal && r.verified_soluble && r.quotient_radical_trivial);
    }

    #[test]
    fn quotient_examples() {
        let s4 = symmetric(4).unwrap();
        let v4 = ElementSet::new(4, ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"].map(|t| p(t, 4))).unwrap();
        let q = quotient_group(&s4, &v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert_eq!(q.group.degree(), 6);

        let a5 = alternating(5).unwrap();
        let trivial = ElementSet::new(5, [a5.identity()]).unwrap();
        let q = quotient_group(&a5, &trivial).unwrap();
        assert_eq!(q.group.degree(), 60);
        assert_eq!(q.group.order(), 60);

        let g = by_name("A5xC2").unwrap().group;
        let c2 = ElementSet::new(7, [p("()", 7), p("(6 7)", 7)]).unwrap();
        let q = quotient_group(&g, &c2).unwrap();
        assert_eq!(q.group.order(), 60);
        for y in g.elements(1000).unwrap().iter() {
            assert_eq!(q.image(y).unwrap().is_identity(), c2.contains(y));
        }
    }

    #[test]
    fn quotient_rejects_bad_input() {
        let s4 = symmetric(4).unwrap();
        let not_normal = ElementSet::new(4, [p("()", 4), p("(1 2)", 4)]).unwrap();
        assert!(matches!(quotient_group(&s4, &not_normal), Err(Error::NotNormal)));
        let not_subgroup = ElementSet::new(4, [p("()", 4), p("(1 2 3)", 4)]).unwrap();
        assert!(matches!(quotient_group(&s4, &not_subgroup), Err(Error::NotSubgroup)));
    }
}
