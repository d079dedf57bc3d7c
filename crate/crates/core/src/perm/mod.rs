//! Permutations acting on the right of `{1..n}`.
//!
//! The product `a * b` first applies `a` and then `b`, so `(a·b)(i) = b(a(i))`.
//! With this convention `conjugate(a, g) = g⁻¹ a g` and
//! `commutator(a, b) = a⁻¹ b⁻¹ a b` read exactly as written.

mod cycles;
mod element_set;
mod group;
mod schreier_sims;

use std::fmt;

pub use cycles::{format_cycles, parse_cycles};
pub use element_set::ElementSet;
pub use group::{build_bsgs, enumerate_elements, PermGroup, DEFAULT_ENUMERATION_CAP};
pub use schreier_sims::Bsgs;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored 0-based.
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical element order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from its 1-based image sequence.
    pub fn from_images(images: &[u32]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidImages("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img as usize > n {
                return Err(Error::InvalidImages(format!("image {img} outside 1..={n}")));
            }
            let p = (img - 1) as usize;
            if seen[p] {
                return Err(Error::InvalidImages(format!("image {img} repeated")));
            }
            seen[p] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Unchecked 0-based constructor for internal callers that already hold a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| (i as usize) < seen.len() && !std::mem::replace(&mut seen[i as usize], true))
        });
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The 1-based image sequence.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: u32) -> u32 {
        self.images[(point - 1) as usize] + 1
    }

    #[inline]
    pub(crate) fn image0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// First (smallest) 0-based point moved, if any.
    pub(crate) fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// `self · other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_degree(g)?;
        Ok(self.conj(g))
    }

    pub(crate) fn conj(&self, g: &Permutation) -> Permutation {
        // g⁻¹ a g maps g(i) to g(a(i))
        let mut images = vec![0u32; self.images.len()];
        for (i, &a) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[a as usize];
        }
        Permutation { images }
    }

    /// `self⁻¹ · other⁻¹ · self · other`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.comm(other))
    }

    pub(crate) fn comm(&self, other: &Permutation) -> Permutation {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Sorted lengths of all cycles, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        let ct = self.cycle_type();
        ct.iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    /// Extends the permutation to a larger degree, shifting all points by `offset`
    /// and fixing everything outside `offset..offset + self.degree()`.
    pub(crate) fn embed(&self, degree: usize, offset: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn inverse(a: &Permutation) -> Permutation {
    a.inverse()
}

pub fn conjugate(a: &Permutation, g: &Permutation) -> Result<Permutation> {
    a.conjugate(g)
}

pub fn commutator(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.commutator(b)
}

/// Left-nested commutator `[x1, ..., xk] = [[x1, ..., x(k-1)], xk]`.
pub fn long_commutator(items: &[Permutation]) -> Result<Permutation> {
    if items.len() < 2 {
        return Err(Error::InvalidArgument(format!("long commutator needs at least 2 entries, got {}", items.len())));
    }
    let mut acc = items[0].clone();
    for item in &items[1..] {
        acc = acc.commutator(item)?;
    }
    Ok(acc)
}

pub fn element_order(a: &Permutation) -> u64 {
    a.order()
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_cycles(self))
    }
}
