//! Deterministic incremental Schreier–Sims.
//!
//! Base points are chosen as the first point moved by the element that forces
//! a new level. Level `i` holds every strong generator fixing the first `i`
//! base points. Every Schreier generator of a level is sifted into the next
//! level whenever that level gains a generator or an orbit point.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level { base_point, generators: Vec::new(), orbit: vec![base_point], transversal }
    }

    fn rep(&self, point: usize) -> &Permutation {
        self.transversal[point].as_ref().expect("point in orbit")
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs { degree, levels: Vec::new() };
        for g in generators {
            bsgs.insert(g.clone());
        }
        bsgs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// 1-based base points.
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point as u32 + 1).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Sifts `g` through the chain; returns the residue and the level at which
    /// sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.image0(level.base_point);
            match &level.transversal[b] {
                Some(u) => g = g.mul(&u.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.strip(g.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Adds an element to the group, extending the chain as needed.
    /// Returns `false` if the element was already a member.
    pub fn insert(&mut self, g: Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch in BSGS insert");
        if self.contains(&g) {
            return false;
        }
        self.insert_at(g, 0);
        true
    }

    fn insert_at(&mut self, h: Permutation, from: usize) {
        let (residue, level) = self.strip(h, from);
        if residue.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let base_point = residue.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(base_point, self.degree));
        }
        // the residue fixes every base point above `level`, so it belongs to
        // the strong generators of each level it passed through as well
        for l in (from..=level).rev() {
            self.add_generator(l, residue.clone());
        }
    }

    fn add_generator(&mut self, idx: usize, g: Permutation) {
        let old_len = self.levels[idx].orbit.len();
        self.levels[idx].generators.push(g);
        let gen_count = self.levels[idx].generators.len();

        // extend the orbit with every generator
        let mut pos = 0;
        while pos < self.levels[idx].orbit.len() {
            let p = self.levels[idx].orbit[pos];
            for s in 0..gen_count {
                let level = &mut self.levels[idx];
                let q = level.generators[s].image0(p);
                if level.transversal[q].is_none() {
                    let u = level.rep(p).mul(&level.generators[s]);
                    level.transversal[q] = Some(u);
                    level.orbit.push(q);
                }
            }
            pos += 1;
        }

        // Schreier generators not yet sifted: the new generator on old points,
        // and every generator on new points.
        let mut pending = Vec::new();
        {
            let level = &self.levels[idx];
            let new_gen = &level.generators[gen_count - 1];
            for &p in &level.orbit[..old_len] {
                pending.push(schreier_generator(level, p, new_gen));
            }
            for &p in &level.orbit[old_len..] {
                for s in &level.generators {
                    pending.push(schreier_generator(level, p, s));
                }
            }
        }
        for sg in pending {
            if !sg.is_identity() {
                self.insert_at(sg, idx + 1);
            }
        }
    }
}

fn schreier_generator(level: &Level, p: usize, s: &Permutation) -> Permutation {
    let q = s.image0(p);
    level.rep(p).mul(s).mul(&level.rep(q).inverse())
}
