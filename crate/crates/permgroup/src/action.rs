use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

use crate::chain::StabChain;
use crate::group::{GroupError, PermGroup};
use crate::perm::Perm;

/// Default cap on coset-action index.
pub const COSET_ACTION_BOUND: u64 = 100_000;

#[derive(Debug, Error)]
pub enum ActionError {
    #[error("action is not transitive")]
    NotTransitive,
    #[error("coset index {index} exceeds bound {bound}")]
    IndexBoundExceeded { index: BigUint, bound: u64 },
    #[error("subgroup is not contained in the group")]
    NotASubgroup,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Disjoint sets with path compression and union by size, ties broken by
/// least representative so reported blocks are deterministic.
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Returns the root that lost (was absorbed), if a merge happened.
    pub fn union(&mut self, a: u32, b: u32) -> Option<u32> {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return None;
        }
        let (winner, loser) = if self.size[ra as usize] > self.size[rb as usize]
            || (self.size[ra as usize] == self.size[rb as usize] && ra < rb)
        {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[loser as usize] = winner;
        self.size[winner as usize] += self.size[loser as usize];
        Some(loser)
    }
}

/// Table of right cosets of a subgroup, labeled by canonical (minimal)
/// coset representatives computed by greedy minimization over the
/// subgroup's stabilizer chain with natural base order.
pub struct CosetTable {
    pub subgroup: PermGroup,
    canon: StabChain,
    reps: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

impl CosetTable {
    fn canonical(&self, g: &Perm) -> Perm {
        self.canon.min_coset_rep(g)
    }

    pub fn rep(&self, label: u32) -> &Perm {
        &self.reps[label as usize]
    }

    /// Label of the coset (subgroup * g).
    pub fn label_of(&self, g: &Perm) -> Option<u32> {
        self.index.get(&self.canonical(g)).copied()
    }
}

enum ActionKind {
    /// Domain is the natural point set of the source group.
    Natural,
    /// Domain is the right cosets of a subgroup.
    Cosets(CosetTable),
    /// Generator images only; elements cannot be applied individually.
    Raw,
}

/// A group action on a labeled domain: the images of each source
/// generator as permutations of the domain.
pub struct Action {
    source: PermGroup,
    domain_size: usize,
    gen_images: Vec<Perm>,
    kind: ActionKind,
}

impl Action {
    /// The natural action of a group on its own point set.
    pub fn natural(group: &PermGroup) -> Action {
        Action {
            source: group.clone(),
            domain_size: group.degree(),
            gen_images: group.gens().to_vec(),
            kind: ActionKind::Natural,
        }
    }

    /// An action given by explicit generator images (aligned with the
    /// source group's generator list).
    pub fn from_images(source: &PermGroup, domain_size: usize, gen_images: Vec<Perm>) -> Action {
        assert_eq!(source.gens().len(), gen_images.len());
        for g in &gen_images {
            assert_eq!(g.degree(), domain_size);
        }
        Action {
            source: source.clone(),
            domain_size,
            gen_images,
            kind: ActionKind::Raw,
        }
    }

    /// The action of `group` on the right cosets of `sub` by right
    /// multiplication. Coset 0 is the subgroup itself.
    pub fn on_cosets(group: &PermGroup, sub: &PermGroup, bound: u64) -> Result<Action, ActionError> {
        if !sub.is_subgroup_of(group)? {
            return Err(ActionError::NotASubgroup);
        }
        let index = group.order() / sub.order();
        if index > BigUint::from(bound) {
            return Err(ActionError::IndexBoundExceeded { index, bound });
        }
        let n = group.degree();
        let natural_base: Vec<u32> = (0..n as u32).collect();
        let canon = sub.chain_with_base(&natural_base);
        let mut table = CosetTable {
            subgroup: sub.clone(),
            canon,
            reps: Vec::new(),
            index: HashMap::new(),
        };
        let id_rep = table.canonical(&Perm::identity(n));
        table.index.insert(id_rep.clone(), 0);
        table.reps.push(id_rep);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); group.gens().len()];
        let mut i = 0usize;
        while i < table.reps.len() {
            for (gi, g) in group.gens().iter().enumerate() {
                let moved = table.reps[i].compose(g);
                let rep = table.canonical(&moved);
                let label = match table.index.get(&rep) {
                    Some(&l) => l,
                    None => {
                        let l = table.reps.len() as u32;
                        table.index.insert(rep.clone(), l);
                        table.reps.push(rep);
                        l
                    }
                };
                images[gi].push(label);
            }
            i += 1;
        }
        let gen_images = images
            .into_iter()
            .map(|v| Perm::from_images(v).expect("coset action images form permutations"))
            .collect();
        let domain = table.reps.len();
        Ok(Action {
            source: group.clone(),
            domain_size: domain,
            gen_images,
            kind: ActionKind::Cosets(table),
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn gen_images(&self) -> &[Perm] {
        &self.gen_images
    }

    pub fn coset_table(&self) -> Option<&CosetTable> {
        match &self.kind {
            ActionKind::Cosets(t) => Some(t),
            _ => None,
        }
    }

    /// Applies an arbitrary source-group element to a domain point.
    pub fn apply(&self, g: &Perm, pt: u32) -> u32 {
        match &self.kind {
            ActionKind::Natural => g.apply(pt),
            ActionKind::Cosets(t) => {
                let moved = t.reps[pt as usize].compose(g);
                t.label_of(&moved).expect("element must be in the group")
            }
            ActionKind::Raw => panic!("raw actions can only apply generators"),
        }
    }

    /// Full domain image of an arbitrary source-group element.
    pub fn image_of_element(&self, g: &Perm) -> Perm {
        match &self.kind {
            ActionKind::Natural => g.clone(),
            _ => {
                let imgs: Vec<u32> = (0..self.domain_size as u32)
                    .map(|p| self.apply(g, p))
                    .collect();
                Perm::from_images(imgs).expect("group element acts bijectively")
            }
        }
    }

    /// Orbit partition of the domain, each orbit sorted, orbits ordered by
    /// least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.domain_size];
        let mut out = Vec::new();
        for start in 0..self.domain_size as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start as usize] = true;
            let mut i = 0;
            while i < orbit.len() {
                for g in &self.gen_images {
                    let q = g.apply(orbit[i]);
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.domain_size <= 1 || self.orbits().len() == 1
    }

    /// The permutation group generated by the generator images. Builds a
    /// stabilizer chain on the domain; intended for small domains.
    pub fn induced_group(&self) -> PermGroup {
        PermGroup::new(self.domain_size, self.gen_images.clone()).unwrap()
    }

    /// Faithful iff only the identity acts trivially. For coset and
    /// natural actions this is exact without building a chain on the
    /// domain; for raw image actions it compares induced and source
    /// orders directly.
    pub fn is_faithful(&self) -> Result<bool, GroupError> {
        match &self.kind {
            ActionKind::Raw => Ok(self.induced_group().order() == self.source.order()),
            _ => Ok(self.kernel()?.is_trivial()),
        }
    }

    /// The kernel of the action, as a subgroup of the source group:
    /// descend through stabilizers of domain points until the candidate
    /// kernel is trivial or fixes everything.
    pub fn kernel(&self) -> Result<PermGroup, GroupError> {
        let mut s = match &self.kind {
            ActionKind::Cosets(t) => t.subgroup.clone(),
            ActionKind::Natural => self.stabilizer_in(&self.source, 0),
            ActionKind::Raw => panic!("kernel of a raw image action is not supported"),
        };
        if self.domain_size == 0 {
            return Ok(self.source.clone());
        }
        loop {
            if s.is_trivial() {
                return Ok(s);
            }
            // find a domain point moved by some generator of s
            let mut moved_pt: Option<u32> = None;
            'outer: for g in s.gens() {
                for p in 0..self.domain_size as u32 {
                    if self.apply(g, p) != p {
                        moved_pt = Some(p);
                        break 'outer;
                    }
                }
            }
            match moved_pt {
                None => return Ok(s), // s fixes the whole domain: s is the kernel
                Some(p) => {
                    s = self.stabilizer_in(&s, p);
                }
            }
        }
    }

    /// Stabilizer of a domain point inside a subgroup of the source,
    /// by orbit/Schreier generators evaluated through the action.
    pub fn stabilizer_in(&self, sub: &PermGroup, pt: u32) -> PermGroup {
        let n = self.source.degree();
        let mut orbit = vec![pt];
        let mut pos: HashMap<u32, usize> = HashMap::new();
        pos.insert(pt, 0);
        let mut trans: Vec<Perm> = vec![Perm::identity(n)];
        let mut schreier: Vec<Perm> = Vec::new();
        let mut i = 0;
        while i < orbit.len() {
            for g in sub.gens() {
                let q = self.apply(g, orbit[i]);
                match pos.get(&q) {
                    None => {
                        pos.insert(q, orbit.len());
                        let t = trans[i].compose(g);
                        orbit.push(q);
                        trans.push(t);
                    }
                    Some(&j) => {
                        let u = trans[i].compose(g).compose(&trans[j].inverse());
                        if !u.is_identity() && !schreier.contains(&u) {
                            schreier.push(u);
                        }
                    }
                }
            }
            i += 1;
        }
        let stab = PermGroup::new(n, schreier).unwrap();
        debug_assert_eq!(
            stab.order() * BigUint::from(orbit.len()),
            sub.order(),
            "orbit-stabilizer must hold"
        );
        stab.shrink_generators()
    }

    /// Orbit of a domain point under a subgroup of the source group.
    pub fn orbit_in(&self, sub: &PermGroup, pt: u32) -> Vec<u32> {
        let mut orbit = vec![pt];
        let mut seen: HashMap<u32, ()> = HashMap::new();
        seen.insert(pt, ());
        let mut i = 0;
        while i < orbit.len() {
            for g in sub.gens() {
                let q = self.apply(g, orbit[i]);
                if seen.insert(q, ()).is_none() {
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit
    }

    /// Transitive plus: the stabilizer of domain point 0 is transitive on
    /// the remaining points. Intended for small domains (builds a chain on
    /// the induced image group).
    pub fn is_2_transitive(&self) -> bool {
        if self.domain_size < 2 {
            return false;
        }
        if !self.is_transitive() {
            return false;
        }
        let induced = self.induced_group();
        let stab = induced.point_stabilizer(0);
        stab.orbit(1).len() == self.domain_size - 1
    }

    /// The smallest block of imprimitivity containing {p, q}, by
    /// union-find refinement. Returns the whole domain iff no proper
    /// block contains the pair.
    pub fn minimal_block(&self, p: u32, q: u32) -> Result<Vec<u32>, ActionError> {
        if !self.is_transitive() {
            return Err(ActionError::NotTransitive);
        }
        assert_ne!(p, q);
        let mut uf = UnionFind::new(self.domain_size);
        let mut queue: Vec<u32> = Vec::new();
        uf.union(p, q);
        queue.push(q);
        while let Some(x) = queue.pop() {
            let r = uf.find(x);
            for g in &self.gen_images {
                let a = g.apply(x);
                let b = g.apply(r);
                if let Some(loser) = uf.union(a, b) {
                    queue.push(loser);
                }
            }
        }
        let root = uf.find(p);
        let block: Vec<u32> = (0..self.domain_size as u32)
            .filter(|&x| uf.find(x) == root)
            .collect();
        Ok(block)
    }

    /// Primitivity via seed-pair reduction: for fixed p = 0, only pairs
    /// (0, q) with q ranging over orbit representatives of the point
    /// stabilizer need testing.
    pub fn is_primitive(&self) -> Result<bool, ActionError> {
        if self.domain_size <= 1 {
            return Ok(true);
        }
        if !self.is_transitive() {
            return Ok(false);
        }
        let stab_images: Vec<Perm> = match &self.kind {
            ActionKind::Cosets(t) => t
                .subgroup
                .gens()
                .iter()
                .map(|g| self.image_of_element(g))
                .collect(),
            ActionKind::Natural => self
                .stabilizer_in(&self.source, 0)
                .gens()
                .iter()
                .map(|g| self.image_of_element(g))
                .collect(),
            // images-only action: stabilizer from a chain on the domain
            ActionKind::Raw => self.induced_group().point_stabilizer(0).gens().to_vec(),
        };
        self.is_primitive_given_stabilizer(0, &stab_images)
    }

    /// Primitivity given generator images (on the domain) of the
    /// stabilizer of the domain point `base`: only pairs (base, q) with q
    /// ranging over stabilizer orbit representatives need testing.
    pub fn is_primitive_given_stabilizer(
        &self,
        base: u32,
        stab_images: &[Perm],
    ) -> Result<bool, ActionError> {
        if !self.is_transitive() {
            return Ok(false);
        }
        if self.domain_size <= 2 {
            return Ok(true);
        }
        let mut seen = vec![false; self.domain_size];
        seen[base as usize] = true;
        for q in 0..self.domain_size as u32 {
            if seen[q as usize] {
                continue;
            }
            // mark the whole stabilizer orbit of q
            let mut orbit = vec![q];
            seen[q as usize] = true;
            let mut i = 0;
            while i < orbit.len() {
                for g in stab_images {
                    let x = g.apply(orbit[i]);
                    if !seen[x as usize] {
                        seen[x as usize] = true;
                        orbit.push(x);
                    }
                }
                i += 1;
            }
            let block = self.minimal_block(base, q)?;
            if block.len() != self.domain_size {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Convenience wrapper: the coset action as the spec's operation.
pub fn coset_action(group: &PermGroup, sub: &PermGroup, bound: u64) -> Result<Action, ActionError> {
    Action::on_cosets(group, sub, bound)
}

/// Brute-force primitivity oracle for small domains: enumerates all
/// candidate blocks through point 0 and closes them under the generator
/// images. Independent of the union-find route.
pub fn is_primitive_bruteforce(act: &Action) -> bool {
    let n = act.domain_size();
    if !act.is_transitive() {
        return false;
    }
    if n <= 2 {
        return true;
    }
    assert!(n <= 16, "oracle is exponential in the domain size");
    // all subsets containing 0 of size b | n, 1 < b < n
    for mask in 0u32..(1 << (n - 1)) {
        let mut block: Vec<u32> = vec![0];
        for b in 0..(n - 1) {
            if mask & (1 << b) != 0 {
                block.push(b as u32 + 1);
            }
        }
        let b = block.len();
        if b == 1 || b == n || n % b != 0 {
            continue;
        }
        if block_closes(act, &block) {
            return false;
        }
    }
    true
}

fn block_closes(act: &Action, block: &[u32]) -> bool {
    // BFS over images of the block; any partial overlap kills it
    let key = |s: &[u32]| -> Vec<u32> {
        let mut v = s.to_vec();
        v.sort_unstable();
        v
    };
    let start = key(block);
    let mut sets = vec![start.clone()];
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    seen.insert(start, ());
    let mut i = 0;
    while i < sets.len() {
        for g in act.gen_images() {
            let img = key(&sets[i].iter().map(|&x| g.apply(x)).collect::<Vec<_>>());
            if seen.contains_key(&img) {
                continue;
            }
            // overlap test against all known sets
            for s in &sets {
                let mut inter = 0;
                let (mut a, mut b) = (0, 0);
                while a < s.len() && b < img.len() {
                    match s[a].cmp(&img[b]) {
                        std::cmp::Ordering::Less => a += 1,
                        std::cmp::Ordering::Greater => b += 1,
                        std::cmp::Ordering::Equal => {
                            inter += 1;
                            a += 1;
                            b += 1;
                        }
                    }
                }
                if inter != 0 && inter != s.len() {
                    return false;
                }
            }
            seen.insert(img.clone(), ());
            sets.push(img);
        }
        i += 1;
    }
    true
}

// keep Arc in the public signature surface minimal
pub type SharedAction = Arc<Action>;
