//! Brute-force reference computations used by the integration tests. They
//! work on explicit element lists and share no code with the library beyond
//! permutation arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use solgraph::perm::{PermGroup, Permutation};

/// Every element of `⟨gens⟩` by breadth-first multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let id = Permutation::identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = g.compose(s).unwrap();
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen
}

pub fn elements(group: &PermGroup) -> Vec<Permutation> {
    closure(group.degree(), group.generators()).into_iter().collect()
}

/// Subgroup generated by all commutators `[a, b]` with `a, b ∈ h`.
pub fn commutator_subgroup(degree: usize, h: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    let comms: HashSet<Permutation> = h.iter().flat_map(|a| h.iter().map(move |b| a.commutator(b).unwrap())).collect();
    let gens: Vec<Permutation> = comms.into_iter().collect();
    closure(degree, &gens)
}

/// Solubility by iterating the all-pairs commutator subgroup.
pub fn is_soluble_by_commutators(degree: usize, h: &BTreeSet<Permutation>) -> bool {
    let mut current = h.clone();
    loop {
        if current.len() == 1 {
            return true;
        }
        let next = commutator_subgroup(degree, &current);
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

/// One representative per conjugacy class, with the class size.
pub fn class_representatives(elems: &[Permutation]) -> Vec<(Permutation, usize)> {
    let mut done: HashSet<Permutation> = HashSet::new();
    let mut reps = Vec::new();
    for x in elems {
        if done.contains(x) {
            continue;
        }
        let class: HashSet<Permutation> = elems.iter().map(|g| x.conjugate(g).unwrap()).collect();
        reps.push((x.clone(), class.len()));
        done.extend(class);
    }
    reps
}

/// `R(G)` as the set of `x` whose normal closure is soluble.
pub fn radical_oracle(group: &PermGroup) -> BTreeSet<Permutation> {
    let elems = elements(group);
    let mut radical = BTreeSet::new();
    let mut decided: HashSet<Permutation> = HashSet::new();
    for x in &elems {
        if decided.contains(x) {
            continue;
        }
        let class: Vec<Permutation> =
            elems.iter().map(|g| x.conjugate(g).unwrap()).collect::<BTreeSet<_>>().into_iter().collect();
        let normal = PermGroup::new(group.degree(), class.clone()).unwrap();
        if solgraph::structure::is_soluble(&normal) {
            radical.extend(class.iter().cloned());
        }
        decided.extend(class);
    }
    radical
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn is_prime_square(n: usize) -> bool {
    let r = (n as f64).sqrt().round() as usize;
    r * r == n && is_prime(r)
}
