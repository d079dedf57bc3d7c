//! Fully enumerated groups: elements in canonical order with a complete
//! multiplication table, so that subgroup computations run on indices.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::{ElementSet, Permutation};

/// Table entries are stored as `u16`.
const MAX_TABLE_ORDER: usize = u16::MAX as usize + 1;

/// A finite group with every element materialized.
///
/// Element `0` is always the identity (it is the lexicographically smallest
/// image sequence).
#[derive(Debug)]
pub struct EnumeratedGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    table: Vec<u16>,
    inverse: Vec<u16>,
    orders: Vec<u32>,
    generators: Vec<usize>,
    fingerprint: u64,
    classes: OnceLock<ConjugacyClasses>,
}

/// A subgroup given by its member indices, kept both as a bitset and a list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSubgroup {
    pub members: FixedBitSet,
    pub list: Vec<usize>,
}

impl IndexSubgroup {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }
}

#[derive(Debug)]
pub struct ConjugacyClasses {
    /// Class number of every element.
    pub class_of: Vec<u32>,
    /// Smallest element of each class.
    pub reps: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    /// `conjugator[m] = c` with `rep^c = m` for the representative of `m`'s class.
    pub conjugator: Vec<u16>,
}

impl EnumeratedGroup {
    pub(crate) fn build(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        let identity = Permutation::identity(degree);
        let gens: Vec<Permutation> = {
            let mut g: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
            g.dedup();
            g
        };
        let ng = gens.len();

        // breadth-first closure under right multiplication by generators
        let mut bfs: Vec<Permutation> = vec![identity.clone()];
        let mut seen: HashMap<Permutation, u32> = HashMap::from([(identity, 0)]);
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut right: Vec<u32> = Vec::new();
        let mut pos = 0;
        while pos < bfs.len() {
            for (s, g) in gens.iter().enumerate() {
                let prod = bfs[pos].mul(g);
                let idx = match seen.get(&prod) {
                    Some(&i) => i,
                    None => {
                        let i = bfs.len() as u32;
                        if bfs.len() >= cap.min(MAX_TABLE_ORDER) {
                            return Err(Error::CapExceeded { order: bfs.len() as u128 + 1, cap });
                        }
                        seen.insert(prod.clone(), i);
                        bfs.push(prod);
                        parent.push((pos as u32, s as u32));
                        i
                    }
                };
                right.push(idx);
            }
            pos += 1;
        }
        drop(seen);
        let n = bfs.len();

        // rank[b] = canonical index of the b-th element found
        let mut by_value: Vec<usize> = (0..n).collect();
        by_value.sort_unstable_by(|&a, &b| bfs[a].cmp(&bfs[b]));
        let mut rank = vec![0usize; n];
        for (r, &b) in by_value.iter().enumerate() {
            rank[b] = r;
        }

        // e_i · e_j = (e_i · e_parent(j)) · s  for j reached from parent(j) by generator s
        let mut table = vec![0u16; n * n];
        let mut row = vec![0u32; n];
        for i in 0..n {
            row[0] = i as u32;
            for j in 1..n {
                let (p, s) = parent[j];
                row[j] = right[row[p as usize] as usize * ng + s as usize];
            }
            let ri = rank[i];
            for j in 0..n {
                table[ri * n + rank[j]] = rank[row[j] as usize] as u16;
            }
        }

        let elements: Vec<Permutation> = by_value.iter().map(|&b| bfs[b].clone()).collect();
        debug_assert!(elements[0].is_identity());
        let index: HashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();

        let mut inverse = vec![0u16; n];
        for i in 0..n {
            let j = table[i * n..(i + 1) * n].iter().position(|&x| x == 0).expect("inverse exists");
            inverse[i] = j as u16;
        }
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let generators = gens.iter().map(|g| index[g] as usize).collect();

        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(EnumeratedGroup {
            degree,
            elements,
            index,
            table,
            inverse,
            orders,
            generators,
            fingerprint,
            classes: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn require_index(&self, p: &Permutation) -> Result<usize> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        self.index_of(p).ok_or_else(|| Error::NotMember { element: p.to_string() })
    }

    /// Identifies this element table; used to key caches.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Indices of the (non-identity) generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g⁻¹ a g`
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a⁻¹ b⁻¹ a b`
    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn order_of(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, e: u32) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn to_element_set(&self, members: &FixedBitSet) -> ElementSet {
        ElementSet::from_sorted(self.degree, members.ones().map(|i| self.elements[i].clone()).collect())
    }

    pub fn bitset_of(&self, set: &ElementSet) -> Result<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(self.len());
        for p in set {
            bits.insert(self.require_index(p)?);
        }
        Ok(bits)
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> IndexSubgroup {
        let mut members = FixedBitSet::with_capacity(self.len());
        members.insert(0);
        let sub = IndexSubgroup { members, list: vec![0] };
        self.extend_closure(sub, gens)
    }

    /// The subgroup generated by `gens`, given a closed subgroup `sub` of it.
    pub fn extend_closure(&self, mut sub: IndexSubgroup, gens: &[usize]) -> IndexSubgroup {
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        if gens.iter().all(|&g| sub.members.contains(g)) {
            return sub;
        }
        let mut pos = 0;
        while pos < sub.list.len() {
            let a = sub.list[pos];
            for &g in &gens {
                let p = self.mul(a, g);
                if !sub.members.put(p) {
                    sub.list.push(p);
                }
            }
            pos += 1;
        }
        sub
    }

    /// Greedy generating set of the subgroup generated by `elements`, taken
    /// in the given order, together with that subgroup.
    pub fn generating_set(&self, elements: impl IntoIterator<Item = usize>) -> (Vec<usize>, IndexSubgroup) {
        let mut gens = Vec::new();
        let mut sub = self.closure(&[]);
        for e in elements {
            if !sub.contains(e) {
                gens.push(e);
                sub = self.extend_closure(sub, &gens);
            }
        }
        (gens, sub)
    }

    /// Returns a generating set if `members` is a subgroup.
    pub fn subgroup_generators(&self, members: &FixedBitSet) -> Option<Vec<usize>> {
        if !members.contains(0) {
            return None;
        }
        let (gens, sub) = self.generating_set(members.ones());
        (sub.members == *members).then_some(gens)
    }

    /// Normal closure of `seeds` inside the subgroup generated by `ambient`.
    pub fn normal_closure(&self, ambient: &[usize], seeds: Vec<usize>) -> (Vec<usize>, IndexSubgroup) {
        let mut gens: Vec<usize> = Vec::new();
        let mut sub = self.closure(&[]);
        for s in seeds {
            if !sub.contains(s) {
                gens.push(s);
                sub = self.extend_closure(sub, &gens);
            }
        }
        let mut next = 0;
        while next < gens.len() {
            let g = gens[next];
            for &h in ambient {
                let c = self.conj(g, h);
                if !sub.contains(c) {
                    gens.push(c);
                    sub = self.extend_closure(sub, &gens);
                }
            }
            next += 1;
        }
        (gens, sub)
    }

    /// `[H, H]` for `H = ⟨gens⟩`, as the normal closure of generator commutators.
    pub fn derived(&self, gens: &[usize]) -> (Vec<usize>, IndexSubgroup) {
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.comm(a, b);
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(gens, seeds)
    }

    /// Solubility of `⟨gens⟩`, whose closure `sub` is already known.
    ///
    /// Orders below 60 or with at most two prime divisors are soluble
    /// outright (Burnside); otherwise the derived series is followed until it
    /// reaches such an order or becomes perfect.
    pub fn is_soluble_subgroup(&self, gens: &[usize], sub: &IndexSubgroup) -> bool {
        let mut gens = gens.to_vec();
        let mut order = sub.len();
        loop {
            if soluble_by_order(order) {
                return true;
            }
            let (dgens, dsub) = self.derived(&gens);
            if dsub.len() == order {
                return false;
            }
            order = dsub.len();
            gens = dgens;
        }
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.len();
        let unassigned = u32::MAX;
        let mut class_of = vec![unassigned; n];
        let mut conjugator = vec![0u16; n];
        let mut reps = Vec::new();
        let mut members = Vec::new();
        for start in 0..n {
            if class_of[start] != unassigned {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start);
            class_of[start] = c;
            conjugator[start] = 0;
            let mut orbit = vec![start];
            let mut pos = 0;
            while pos < orbit.len() {
                let m = orbit[pos];
                for &s in &self.generators {
                    let image = self.conj(m, s);
                    if class_of[image] == unassigned {
                        class_of[image] = c;
                        conjugator[image] = self.mul(conjugator[m] as usize, s) as u16;
                        orbit.push(image);
                    }
                }
                pos += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        ConjugacyClasses { class_of, reps, members, conjugator }
    }
}

/// True when every group of this order is soluble by Burnside's `p^a q^b`
/// theorem or because the order is below that of the smallest non-abelian
/// simple group.
pub fn soluble_by_order(order: usize) -> bool {
    if order < 60 {
        return true;
    }
    let mut n = order;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes += 1;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    primes <= 2
}
