//! HS.2 as the full automorphism group of the 100-vertex rank-3 graph
//! built from the Steiner system S(3,6,22):
//!   vertex 0:        a distinguished point (star),
//!   vertices 1..22:  the 22 design points,
//!   vertices 23..99: the 77 hexads;
//! star ~ every point, point ~ hexads through it, hexads ~ when disjoint.
//! The design comes from the extended binary quadratic-residue code of
//! length 24 (the Golay code): hexads are octads through two fixed
//! positions. Automorphisms are found by a bitset backtracker and
//! assembled until the known order 88704000 is reached; the vertex
//! stabilizer entry data are the stabilizer of one Hoffman-Singleton
//! half (order 252000) and the normalizer of a Sylow 5-subgroup of it
//! (order 4000).

use std::path::Path;

use num_bigint::BigUint;
use permgroup::{Perm, PermGroup, ENUMERATION_BOUND};

use crate::util::*;

// ---- Golay code and the Steiner system --------------------------------

/// Binary polynomials as bitmasks; returns a degree-11 irreducible factor
/// of x^23 + 1 over F_2.
fn qr_generator() -> u32 {
    let target: u64 = (1 << 23) | 1;
    for cand in 0u32..(1 << 11) {
        let poly: u64 = (1 << 11) | cand as u64;
        if poly_divides(poly, target) {
            return poly as u32;
        }
    }
    panic!("x^23 + 1 has a degree-11 factor over F_2");
}

fn poly_divides(d: u64, mut n: u64) -> bool {
    let dd = 63 - d.leading_zeros();
    loop {
        let nd = if n == 0 { return true } else { 63 - n.leading_zeros() };
        if nd < dd {
            return false;
        }
        n ^= d << (nd - dd);
    }
}

fn carryless_mul(a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut bb = b;
    let mut shift = 0;
    while bb != 0 {
        if bb & 1 == 1 {
            out ^= a << shift;
        }
        bb >>= 1;
        shift += 1;
    }
    out
}

/// The 759 octads of S(5,8,24) as bitmasks over 24 positions.
fn octads() -> Vec<u32> {
    let g = qr_generator() as u64;
    let mut out = Vec::new();
    for m in 0u64..(1 << 12) {
        let c = carryless_mul(m, g); // length-23 word
        let word = (c | (((c.count_ones() & 1) as u64) << 23)) as u32;
        if word.count_ones() == 8 {
            out.push(word);
        }
    }
    assert_eq!(out.len(), 759, "the Golay code has 759 octads");
    out
}

/// Hexads of S(3,6,22) on points 0..21: octads through positions 22, 23.
fn hexads() -> Vec<u32> {
    let both = (1u32 << 22) | (1 << 23);
    let mut hx: Vec<u32> = octads()
        .into_iter()
        .filter(|o| o & both == both)
        .map(|o| o & !both)
        .collect();
    hx.sort_unstable();
    assert_eq!(hx.len(), 77);
    // Steiner property: every 3-subset of the 22 points lies in exactly
    // one hexad
    for a in 0..22u32 {
        for b in (a + 1)..22 {
            for c in (b + 1)..22 {
                let t = (1 << a) | (1 << b) | (1 << c);
                let n = hx.iter().filter(|&&h| h & t == t).count();
                assert_eq!(n, 1, "triple {a},{b},{c} lies in {n} hexads");
            }
        }
    }
    hx
}

// ---- the 100-vertex graph ---------------------------------------------

pub struct BigGraph {
    pub adj: Vec<u128>,
}

impl BigGraph {
    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }
}

pub fn higman_sims_graph() -> BigGraph {
    let hx = hexads();
    let n = 100usize;
    let mut adj = vec![0u128; n];
    let mut connect = |a: usize, b: usize| {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    };
    for p in 0..22 {
        connect(0, 1 + p);
    }
    for (i, &h) in hx.iter().enumerate() {
        for p in 0..22 {
            if h >> p & 1 == 1 {
                connect(1 + p, 23 + i);
            }
        }
    }
    for (i, &h1) in hx.iter().enumerate() {
        for (j, &h2) in hx.iter().enumerate().skip(i + 1) {
            if h1 & h2 == 0 {
                connect(23 + i, 23 + j);
            }
        }
    }
    let g = BigGraph { adj };
    // strongly regular (100, 22, 0, 6)
    for v in 0..n {
        assert_eq!(g.adj[v].count_ones(), 22, "degree at {v}");
    }
    for a in 0..n {
        for b in (a + 1)..n {
            let common = (g.adj[a] & g.adj[b]).count_ones();
            if g.adjacent(a, b) {
                assert_eq!(common, 0, "adjacent pair ({a},{b})");
            } else {
                assert_eq!(common, 6, "non-adjacent pair ({a},{b})");
            }
        }
    }
    g
}

// ---- automorphism backtracker -----------------------------------------

/// One graph automorphism extending the forced partial map, or None.
/// Backtracking over candidate bitsets with most-constrained-first
/// selection; deterministic.
pub fn find_automorphism(g: &BigGraph, forced: &[(u32, u32)]) -> Option<Perm> {
    let n = g.adj.len();
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut cand: Vec<u128> = vec![full; n];
    let mut assigned: Vec<Option<u32>> = vec![None; n];
    let mut used: u128 = 0;

    fn assign(
        g: &BigGraph,
        cand: &mut [u128],
        assigned: &mut [Option<u32>],
        used: &mut u128,
        v: usize,
        w: u32,
    ) -> bool {
        if cand[v] >> w & 1 == 0 {
            return false;
        }
        assigned[v] = Some(w);
        *used |= 1 << w;
        cand[v] = 1 << w;
        let row_w = g.adj[w as usize];
        for u in 0..g.adj.len() {
            if assigned[u].is_some() {
                continue;
            }
            cand[u] &= !(1u128 << w);
            if g.adjacent(u, v) {
                cand[u] &= row_w;
            } else {
                cand[u] &= !row_w;
            }
            if cand[u] == 0 {
                return false;
            }
        }
        true
    }

    for &(v, w) in forced {
        if !assign(g, &mut cand, &mut assigned, &mut used, v as usize, w) {
            return None;
        }
    }

    fn dfs(
        g: &BigGraph,
        cand: &[u128],
        assigned: &[Option<u32>],
        used: u128,
    ) -> Option<Vec<u32>> {
        // most constrained unassigned vertex
        let mut best: Option<(usize, u32)> = None;
        for v in 0..g.adj.len() {
            if assigned[v].is_some() {
                continue;
            }
            let c = cand[v].count_ones();
            if best.map_or(true, |(_, bc)| c < bc) {
                best = Some((v, c));
            }
        }
        let Some((v, _)) = best else {
            return Some(assigned.iter().map(|a| a.unwrap()).collect());
        };
        let mut options = cand[v];
        while options != 0 {
            let w = options.trailing_zeros();
            options &= options - 1;
            let mut c2 = cand.to_vec();
            let mut a2 = assigned.to_vec();
            let mut u2 = used;
            if assign(g, &mut c2, &mut a2, &mut u2, v, w) {
                if let Some(sol) = dfs(g, &c2, &a2, u2) {
                    return Some(sol);
                }
            }
        }
        None
    }

    dfs(g, &cand, &assigned, used).map(|imgs| Perm::from_images(imgs).expect("automorphism"))
}

/// Generators of the full automorphism group, assembled by walking a
/// natural base and searching for automorphisms that extend orbits,
/// until the known order is reached.
pub fn full_automorphism_group(g: &BigGraph, target: u64) -> PermGroup {
    let n = g.adj.len();
    let target_big = BigUint::from(target);
    let mut grp = PermGroup::trivial(n);
    'grow: loop {
        if grp.order() == target_big {
            return grp;
        }
        let mut forced: Vec<(u32, u32)> = Vec::new();
        let mut stab = grp.clone();
        for b in 0..n as u32 {
            let orbit = stab.orbit(b);
            for w in 0..n as u32 {
                if orbit.contains(&w) {
                    continue;
                }
                let mut f = forced.clone();
                f.push((b, w));
                if let Some(auto) = find_automorphism(g, &f) {
                    let mut gens = grp.gens().to_vec();
                    gens.push(auto);
                    grp = PermGroup::new(n, gens).unwrap();
                    continue 'grow;
                }
            }
            forced.push((b, b));
            stab = stab.point_stabilizer(b);
        }
        panic!(
            "automorphism search stalled at order {} (target {target})",
            grp.order()
        );
    }
}

// ---- Hoffman-Singleton split and the Sylow normalizer ------------------

/// The vertex set of one Hoffman-Singleton half containing the star:
/// star + a 7-subset S of the points + the 42 hexads meeting S once,
/// checked to induce a 7-regular subgraph on 50 vertices.
fn hoffman_singleton_half(g: &BigGraph) -> Vec<u32> {
    let hx = hexads();
    // iterate 7-subsets of the 22 points in lexicographic order
    let mut comb: Vec<u32> = (0..7).collect();
    loop {
        let smask: u32 = comb.iter().map(|&i| 1u32 << i).sum();
        if let Some(half) = try_half(g, &hx, smask) {
            return half;
        }
        // next combination
        let mut i = 6usize;
        loop {
            if comb[i] < 15 + i as u32 {
                comb[i] += 1;
                for j in i + 1..7 {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                panic!("no Hoffman-Singleton half found");
            }
            i -= 1;
        }
    }
}

fn try_half(g: &BigGraph, hx: &[u32], smask: u32) -> Option<Vec<u32>> {
    let mut half: Vec<u32> = vec![0];
    for p in 0..22 {
        if smask >> p & 1 == 1 {
            half.push(1 + p);
        }
    }
    let mut picked = Vec::new();
    for (i, &h) in hx.iter().enumerate() {
        if (h & smask).count_ones() == 1 {
            picked.push(23 + i as u32);
        }
    }
    if picked.len() != 42 {
        return None;
    }
    half.extend_from_slice(&picked);
    // induced subgraph must be 7-regular
    let mut mask: u128 = 0;
    for &v in &half {
        mask |= 1 << v;
    }
    for &v in &half {
        if (g.adj[v as usize] & mask).count_ones() != 7 {
            return None;
        }
    }
    Some(half)
}

pub fn gen_hs2(dir: &Path) {
    println!("  building the Steiner system and the 100-vertex graph...");
    let graph = higman_sims_graph();
    println!("  searching for graph automorphisms...");
    let g = full_automorphism_group(&graph, 88_704_000).shrink_generators();
    assert_order(&g, 88_704_000, "HS.2");

    println!("  locating a Hoffman-Singleton half...");
    let half = hoffman_singleton_half(&graph);
    let h = g
        .setwise_stabilizer(&half, 1_000_000)
        .unwrap()
        .shrink_generators();
    assert_order(&h, 252_000, "U_3(5).2 in HS.2");

    println!("  growing a Sylow 5-subgroup of the half stabilizer...");
    let z = find_element_of_order(&h, 5);
    let mut sylow = cyclic(&z);
    while sylow.order() < BigUint::from(125u32) {
        let norm = h.normalizer(&sylow, 1_000_000).unwrap();
        let mut grew = false;
        for w in norm.elements(ENUMERATION_BOUND).unwrap() {
            if w.order() == 5 && !sylow.contains(&w).unwrap() {
                let mut gens = sylow.gens().to_vec();
                gens.push(w);
                sylow = PermGroup::new(100, gens).unwrap();
                grew = true;
                break;
            }
        }
        assert!(grew, "normalizer growth must reach the Sylow 5-subgroup");
    }
    let k = g.normalizer(&sylow, 1_000_000).unwrap().shrink_generators();
    assert_order(&k, 4000, "Sylow-5 normalizer in HS.2");

    write_group(
        dir,
        "hs2_g.txt",
        &g,
        &[
            "HS.2: the full automorphism group of the 100-vertex graph on",
            "star + 22 points + 77 hexads of S(3,6,22); order 88704000",
        ],
    );
    write_group(
        dir,
        "hs2_h.txt",
        &h,
        &[
            "stabilizer of one Hoffman-Singleton half (50 vertices inducing a",
            "7-regular subgraph): U_3(5):2 of order 252000",
        ],
    );
    write_group(
        dir,
        "hs2_k.txt",
        &k,
        &["normalizer of a Sylow 5-subgroup of the half stabilizer: [5^3]:[2^5] of order 4000"],
    );
}
