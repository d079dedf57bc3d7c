//! Constructors for the test-bed groups and the named catalog.
//!
//! Names are stable identifiers: `C<n>`, `D<n>` (order `2n`), `S<n>`, `A<n>`,
//! `PSL2-<p>`, `Q8`, and `<name>x<name>` for direct products.

use crate::error::{Error, Result};
use crate::perm::{parse_cycles, PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
    pub is_soluble_expected: Option<bool>,
    pub is_almost_simple: Option<bool>,
    pub notes: String,
}

fn cycle(points: impl IntoIterator<Item = u32>, degree: usize) -> Permutation {
    let points: Vec<u32> = points.into_iter().map(|p| p - 1).collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p as usize] = points[(i + 1) % points.len()];
    }
    Permutation::from_raw(images)
}

fn group(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens).expect("catalog generators are well formed")
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group needs n >= 1".into()));
    }
    Ok(group(n, vec![cycle(1..=n as u32, n)]))
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument("dihedral group needs n >= 3".into()));
    }
    let rotation = cycle(1..=n as u32, n);
    // i -> 2 - i (mod n), fixing point 1
    let reflection = Permutation::from_raw((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    Ok(group(n, vec![rotation, reflection]))
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::InvalidArgument("symmetric group needs n >= 1".into())),
        1 => Ok(PermGroup::trivial(1)),
        2 => Ok(group(2, vec![cycle([1, 2], 2)])),
        _ => Ok(group(n, vec![cycle([1, 2], n), cycle(1..=n as u32, n)])),
    }
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    match n {
        0 => Err(Error::InvalidArgument("alternating group needs n >= 1".into())),
        1 | 2 => Ok(PermGroup::trivial(n)),
        3 => Ok(group(3, vec![cycle([1, 2, 3], 3)])),
        _ => {
            let long = if n % 2 == 1 { cycle(1..=n as u32, n) } else { cycle(2..=n as u32, n) };
            Ok(group(n, vec![cycle([1, 2, 3], n), long]))
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `PSL(2, p)` acting on the projective line over the field with `p` elements.
///
/// Field element `a` is point `a + 1`; the point at infinity is `p + 1`.
/// Generated by `z ↦ z + 1` and `z ↦ -1/z`.
pub fn psl2(p: usize) -> Result<PermGroup> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("PSL(2,p) needs an odd prime p >= 5, got {p}")));
    }
    let inf = p as u32;
    let translate: Vec<u32> = (0..p as u32).map(|z| (z + 1) % p as u32).chain([inf]).collect();
    let inverse_mod = |z: u64| -> u64 {
        // z^(p-2) mod p
        let (mut base, mut exp, mut acc) = (z, p as u64 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            exp >>= 1;
        }
        acc
    };
    let invert: Vec<u32> = (0..=p as u32)
        .map(|z| match z {
            0 => inf,
            z if z == inf => 0,
            z => ((p as u64 - inverse_mod(z as u64)) % p as u64) as u32,
        })
        .collect();
    Ok(group(p + 1, vec![Permutation::from_raw(translate), Permutation::from_raw(invert)]))
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|g| g.embed(degree, 0))
        .chain(b.generators().iter().map(|g| g.embed(degree, a.degree())))
        .collect();
    group(degree, gens)
}

pub fn from_generators(degree: usize, cycles: &[&str]) -> Result<PermGroup> {
    let gens = cycles.iter().map(|c| parse_cycles(c, degree)).collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

/// The quaternion group of order 8 in its regular representation.
pub fn quaternion8() -> PermGroup {
    from_generators(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]).expect("static generators")
}

/// Builds a catalog entry from its stable name.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let name = name.trim();
    let unknown = || Error::UnknownGroup(name.to_string());
    if let Some((left, right)) = name.split_once('x') {
        let a = by_name(left)?;
        let b = by_name(right)?;
        let soluble = a.is_soluble_expected.zip(b.is_soluble_expected).map(|(x, y)| x && y);
        return Ok(CatalogEntry {
            name: format!("{}x{}", a.name, b.name),
            group: direct_product(&a.group, &b.group),
            is_soluble_expected: soluble,
            is_almost_simple: Some(false),
            notes: format!("direct product of {} and {}", a.name, b.name),
        });
    }
    if name == "Q8" {
        return Ok(CatalogEntry {
            name: "Q8".into(),
            group: quaternion8(),
            is_soluble_expected: Some(true),
            is_almost_simple: Some(false),
            notes: "quaternion group, regular representation".into(),
        });
    }
    let number = |s: &str| -> Result<usize> { s.parse::<usize>().map_err(|_| unknown()) };
    let (group, soluble, almost_simple, notes) = if let Some(p) = name.strip_prefix("PSL2-") {
        let p = number(p)?;
        (psl2(p)?, false, true, format!("PSL(2,{p}) on the projective line"))
    } else if let Some(n) = name.strip_prefix('C') {
        let n = number(n)?;
        (cyclic(n)?, true, false, format!("cyclic group of order {n}"))
    } else if let Some(n) = name.strip_prefix('D') {
        let n = number(n)?;
        (dihedral(n)?, true, false, format!("dihedral group of order {}", 2 * n))
    } else if let Some(n) = name.strip_prefix('S') {
        let n = number(n)?;
        (symmetric(n)?, n <= 4, n >= 5, format!("symmetric group on {n} points"))
    } else if let Some(n) = name.strip_prefix('A') {
        let n = number(n)?;
        (alternating(n)?, n <= 4, n >= 5, format!("alternating group on {n} points"))
    } else {
        return Err(unknown());
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        group,
        is_soluble_expected: Some(soluble),
        is_almost_simple: Some(almost_simple),
        notes,
    })
}

/// Names in the default catalog. `extended` adds `A7`.
pub fn default_names(extended: bool) -> Vec<&'static str> {
    let mut names = vec!["C6", "S3", "S4", "D4", "D6", "Q8", "A5", "S5", "A6", "PSL2-7", "PSL2-11", "A5xC2", "A5xA5"];
    if extended {
        names.push("A7");
    }
    names
}

pub fn default_catalog(extended: bool) -> Vec<CatalogEntry> {
    default_names(extended).into_iter().map(|n| by_name(n).expect("default names are valid")).collect()
}
