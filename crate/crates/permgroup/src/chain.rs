use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Perm;

/// One level of a stabilizer chain: a base point, the generators of the
/// group at this level (as indices into the shared strong-generator pool),
/// the fundamental orbit of the base point and an explicit transversal.
struct Level {
    base: u32,
    gen_ids: Vec<usize>,
    orbit: Vec<u32>,
    /// pos[p] = index+1 of p in `orbit`, 0 if absent.
    pos: Vec<u32>,
    /// transversal[i] maps base -> orbit[i]; transversal[0] = identity.
    transversal: Vec<Perm>,
    /// Watermark per generator slot: orbit points already Schreier-scanned.
    scanned: Vec<usize>,
    /// Orbit points whose images under all current gens are already in the orbit.
    orbit_closed_upto: usize,
    gens_in_orbit: usize,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut pos = vec![0u32; degree];
        pos[base as usize] = 1;
        Level {
            base,
            gen_ids: Vec::new(),
            orbit: vec![base],
            pos,
            transversal: vec![Perm::identity(degree)],
            scanned: Vec::new(),
            orbit_closed_upto: 0,
            gens_in_orbit: 0,
        }
    }

    fn in_orbit(&self, p: u32) -> bool {
        self.pos[p as usize] != 0
    }

    fn transversal_to(&self, p: u32) -> &Perm {
        &self.transversal[self.pos[p as usize] as usize - 1]
    }

    /// Extends the fundamental orbit with any generators added since the
    /// last sweep, then closes under all generators. Deterministic: points
    /// in discovery order, generators in list order.
    fn extend_orbit(&mut self, pool: &[Perm]) {
        if self.gens_in_orbit < self.gen_ids.len() {
            // new generators must be applied to the whole existing orbit
            let start_new = self.gens_in_orbit;
            let mut i = 0;
            while i < self.orbit.len() {
                let p = self.orbit[i];
                for slot in start_new..self.gen_ids.len() {
                    let gid = self.gen_ids[slot];
                    let q = pool[gid].apply(p);
                    if !self.in_orbit(q) {
                        self.pos[q as usize] = self.orbit.len() as u32 + 1;
                        self.orbit.push(q);
                        let t = self.transversal[i].compose(&pool[gid]);
                        self.transversal.push(t);
                    }
                }
                i += 1;
            }
            self.gens_in_orbit = self.gen_ids.len();
            // everything before the old frontier may now reach new points
            self.orbit_closed_upto = 0;
        }
        let mut i = self.orbit_closed_upto;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for slot in 0..self.gen_ids.len() {
                let gid = self.gen_ids[slot];
                let q = pool[gid].apply(p);
                if !self.in_orbit(q) {
                    self.pos[q as usize] = self.orbit.len() as u32 + 1;
                    self.orbit.push(q);
                    let t = self.transversal[i].compose(&pool[gid]);
                    self.transversal.push(t);
                }
            }
            i += 1;
        }
        self.orbit_closed_upto = self.orbit.len();
    }
}

/// A base and strong generating set for a permutation group, built with a
/// deterministic Schreier–Sims procedure (no randomization). Base points
/// can be pinned in advance via a hint; remaining base points are chosen
/// greedily as least moved points.
pub struct StabChain {
    degree: usize,
    pool: Vec<Perm>,
    levels: Vec<Level>,
    order: BigUint,
}

impl StabChain {
    pub fn build(degree: usize, gens: &[Perm], base_hint: &[u32]) -> StabChain {
        let mut chain = StabChain {
            degree,
            pool: Vec::new(),
            levels: base_hint
                .iter()
                .map(|&b| {
                    assert!((b as usize) < degree, "base hint point out of range");
                    Level::new(b, degree)
                })
                .collect(),
            order: BigUint::one(),
        };
        for g in gens {
            assert_eq!(g.degree(), degree);
            if !g.is_identity() {
                chain.insert_gen(0, g.clone());
            }
        }
        if !chain.levels.is_empty() {
            chain.complete(0);
        }
        chain.order = chain
            .levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product();
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level_base(&self, i: usize) -> u32 {
        self.levels[i].base
    }

    pub fn level_orbit(&self, i: usize) -> &[u32] {
        &self.levels[i].orbit
    }

    pub fn level_transversal(&self, i: usize, point: u32) -> Option<&Perm> {
        let l = &self.levels[i];
        if l.in_orbit(point) {
            Some(l.transversal_to(point))
        } else {
            None
        }
    }

    /// Strong generators fixing the first `k` base points pointwise.
    pub fn strong_gens_fixing_first(&self, k: usize) -> Vec<Perm> {
        if k >= self.levels.len() {
            return Vec::new();
        }
        let mut ids: Vec<usize> = self.levels[k].gen_ids.clone();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().map(|i| self.pool[i].clone()).collect()
    }

    /// Adds `g` to every level from `start` down to the first level whose
    /// base it moves, creating a new level at the end if it fixes all
    /// existing base points.
    fn insert_gen(&mut self, start: usize, g: Perm) {
        let gid = self.pool.len();
        let mut k = start;
        while k < self.levels.len() && !g.moves(self.levels[k].base) {
            k += 1;
        }
        if k == self.levels.len() {
            let base = g
                .least_moved_point()
                .expect("identity cannot be inserted as a generator");
            self.levels.push(Level::new(base, self.degree));
        }
        self.pool.push(g);
        for j in start..=k.min(self.levels.len() - 1) {
            self.levels[j].gen_ids.push(gid);
            self.levels[j].scanned.push(0);
        }
    }

    /// Sifts `g` through levels `start..`, returning the residue and the
    /// level index at which sifting stopped.
    fn sift_from(&self, start: usize, g: Perm) -> (usize, Perm) {
        let mut h = g;
        for i in start..self.levels.len() {
            let l = &self.levels[i];
            let q = h.apply(l.base);
            if q == l.base {
                continue;
            }
            if !l.in_orbit(q) {
                return (i, h);
            }
            h = h.compose(&l.transversal_to(q).inverse());
        }
        (self.levels.len(), h)
    }

    /// Verifies level `i`: every Schreier generator must sift to the
    /// identity through the lower chain; residues are inserted below and
    /// the lower chain is re-verified.
    fn complete(&mut self, i: usize) {
        loop {
            self.levels[i].extend_orbit(&self.pool);
            let mut progressed = false;
            let mut slot = 0;
            while slot < self.levels[i].gen_ids.len() {
                while self.levels[i].scanned[slot] < self.levels[i].orbit.len() {
                    let idx = self.levels[i].scanned[slot];
                    self.levels[i].scanned[slot] = idx + 1;
                    let gid = self.levels[i].gen_ids[slot];
                    let p = self.levels[i].orbit[idx];
                    let s = &self.pool[gid];
                    let q = s.apply(p);
                    let u = {
                        let l = &self.levels[i];
                        l.transversal[idx]
                            .compose(s)
                            .compose(&l.transversal_to(q).inverse())
                    };
                    if u.is_identity() {
                        continue;
                    }
                    let (_, residue) = self.sift_from(i + 1, u);
                    if !residue.is_identity() {
                        self.insert_gen(i + 1, residue);
                        self.complete(i + 1);
                        progressed = true;
                    }
                }
                slot += 1;
            }
            if !progressed {
                break;
            }
        }
    }

    /// Exact membership by sifting.
    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(0, g.clone()).1.is_identity()
    }

    /// Decomposes a member as transversal digits, or None if not a member.
    pub fn sift_digits(&self, g: &Perm) -> Option<Vec<u32>> {
        let mut h = g.clone();
        let mut digits = Vec::with_capacity(self.levels.len());
        for l in &self.levels {
            let q = h.apply(l.base);
            if !l.in_orbit(q) {
                return None;
            }
            digits.push(q);
            if q != l.base {
                h = h.compose(&l.transversal_to(q).inverse());
            }
        }
        if h.is_identity() {
            Some(digits)
        } else {
            None
        }
    }

    /// The minimal element of the right coset `S*g` in image-word order,
    /// where `S` is the group of this chain. Requires a chain whose base
    /// is the natural order `0, 1, 2, ..` (pass that as the hint).
    /// Used to canonicalize coset representatives.
    pub fn min_coset_rep(&self, g: &Perm) -> Perm {
        let mut x = g.clone();
        for l in &self.levels {
            if l.orbit.len() == 1 {
                continue;
            }
            let mut best_pt = l.orbit[0];
            let mut best_val = x.apply(best_pt);
            for &o in &l.orbit[1..] {
                let v = x.apply(o);
                if v < best_val {
                    best_val = v;
                    best_pt = o;
                }
            }
            if best_pt != l.base {
                x = l.transversal_to(best_pt).compose(&x);
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4_gens() -> Vec<Perm> {
        vec![
            Perm::parse("(1 2)", 4).unwrap(),
            Perm::parse("(1 2 3 4)", 4).unwrap(),
        ]
    }

    #[test]
    fn s4_order() {
        let c = StabChain::build(4, &s4_gens(), &[]);
        assert_eq!(c.order(), &BigUint::from(24u32));
    }

    #[test]
    fn membership() {
        let c = StabChain::build(4, &s4_gens(), &[]);
        assert!(c.contains(&Perm::parse("(1 3)(2 4)", 4).unwrap()));
        let a4 = StabChain::build(
            4,
            &[
                Perm::parse("(1 2 3)", 4).unwrap(),
                Perm::parse("(2 3 4)", 4).unwrap(),
            ],
            &[],
        );
        assert_eq!(a4.order(), &BigUint::from(12u32));
        assert!(!a4.contains(&Perm::parse("(1 2)", 4).unwrap()));
    }

    #[test]
    fn pinned_base_gives_stabilizer_gens() {
        let c = StabChain::build(4, &s4_gens(), &[3]);
        assert_eq!(c.level_base(0), 3);
        let stab = c.strong_gens_fixing_first(1);
        let sc = StabChain::build(4, &stab, &[]);
        assert_eq!(sc.order(), &BigUint::from(6u32)); // S_3 on {0,1,2}
    }

    #[test]
    fn trivial_hint_levels_are_harmless() {
        let c = StabChain::build(4, &[Perm::parse("(3 4)", 4).unwrap()], &[0, 1, 2, 3]);
        assert_eq!(c.order(), &BigUint::from(2u32));
    }

    #[test]
    fn min_coset_rep_canonicalizes() {
        // S = <(1 2)>; cosets of S in S_3 have unique minimal elements.
        let s = StabChain::build(3, &[Perm::parse("(1 2)", 3).unwrap()], &[0, 1, 2]);
        let g = Perm::parse("(1 3 2)", 3).unwrap();
        let h = Perm::parse("(2 3)", 3).unwrap(); // same coset: (1 2)*(1 3 2) = (2 3)
        assert_eq!(s.min_coset_rep(&g), s.min_coset_rep(&h));
        let different = Perm::parse("(1 3)", 3).unwrap();
        assert_ne!(s.min_coset_rep(&g), s.min_coset_rep(&different));
    }
}
