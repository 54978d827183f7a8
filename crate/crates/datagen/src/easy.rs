//! Generator data reachable directly from the projective-line module and
//! small searches: the symmetric-group entries, the PSL_2(19) / PGL_2(11)
//! entries, the K_{6,6} family, and the two Mathieu entries.

use std::collections::HashSet;
use std::path::Path;

use permgroup::{Perm, PermGroup, ENUMERATION_BOUND};

use crate::util::*;

/// Fano plane on {0..6} with lines {i+1, i+2, i+4} mod 7; its stabilizer
/// inside S_7 is PSL_3(2) of order 168, found by filtering the standard
/// enumeration and shrunk to two generators.
fn fano_stabilizer() -> PermGroup {
    let lines: Vec<[u32; 3]> = (0..7)
        .map(|i| {
            let mut l = [(i + 1) % 7, (i + 2) % 7, (i + 4) % 7];
            l.sort_unstable();
            l
        })
        .collect();
    let line_set: HashSet<[u32; 3]> = lines.iter().copied().collect();
    let s7 = PermGroup::symmetric(7);
    let mut gens = Vec::new();
    let mut found = PermGroup::trivial(7);
    for e in s7.elements(ENUMERATION_BOUND).unwrap() {
        let ok = lines.iter().all(|l| {
            let mut img = [e.apply(l[0]), e.apply(l[1]), e.apply(l[2])];
            img.sort_unstable();
            line_set.contains(&img)
        });
        if ok && !found.contains(&e).unwrap() {
            gens.push(e.clone());
            found = PermGroup::new(7, gens.clone()).unwrap();
            if found.order_u64() == Some(168) {
                break;
            }
        }
    }
    assert_order(&found, 168, "Fano stabilizer");
    found.shrink_generators()
}

/// x -> c*x on Z_n represented on points 0..n-1.
fn affine_mult(n: u32, c: u32) -> Perm {
    let imgs: Vec<u32> = (0..n).map(|x| (x * c) % n).collect();
    Perm::from_images(imgs).unwrap()
}

fn cycle(n: u32) -> Perm {
    Perm::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()
}

pub fn gen_s7(dir: &Path) {
    let s7 = PermGroup::symmetric(7);
    let h = fano_stabilizer();
    // K = AGL(1,7) = <x -> x+1, x -> 3x> on Z_7; meets H in the 7:3
    // Frobenius group <x -> x+1, x -> 2x>
    let k = PermGroup::new(7, vec![cycle(7), affine_mult(7, 3)]).unwrap();
    assert_order(&k, 42, "AGL(1,7)");
    write_group(
        dir,
        "s7_g.txt",
        &s7,
        &["S_7 in its natural action", "order 5040 = 7!"],
    );
    write_group(
        dir,
        "s7_h.txt",
        &h,
        &[
            "stabilizer in S_7 of the Fano plane with lines {i+1,i+2,i+4} mod 7",
            "isomorphic to PSL_3(2) = PSL_2(7), order 168",
        ],
    );
    write_group(
        dir,
        "s7_k.txt",
        &k,
        &[
            "AGL(1,7) = <x -> x+1, x -> 3x> on Z_7 (points 1..7 are residues 0..6)",
            "order 42 = 7*6; meets the Fano stabilizer in <x -> x+1, x -> 2x> of order 21",
        ],
    );
}

pub fn gen_s11(dir: &Path) {
    let s11 = PermGroup::symmetric(11);
    // PSL_2(11) acting on the 11 cosets of an A_5 subgroup, relabeled so
    // that a fixed 11-cycle becomes (1 2 .. 11)
    let psl = numth::psl2_group(11).unwrap();
    let a5 = find_two_generated(&psl, 5, 2, 60);
    let act = permgroup::coset_action(&psl, &a5, 100_000).unwrap();
    assert_eq!(act.domain_size(), 11);
    let h_raw = act.induced_group();
    assert_order(&h_raw, 660, "PSL_2(11) on 11 points");
    let c = find_element_of_order(&h_raw, 11);
    // relabel: position in the c-orbit of 0 becomes the point name
    let mut relabel = vec![0u32; 11];
    let mut x = 0u32;
    for k in 0..11 {
        relabel[x as usize] = k;
        x = c.apply(x);
    }
    let sigma = Perm::from_images(relabel).unwrap();
    let h = h_raw.conjugate_by(&sigma);
    assert!(h
        .contains(&cycle(11))
        .unwrap());
    let k = PermGroup::new(11, vec![cycle(11), affine_mult(11, 2)]).unwrap();
    assert_order(&k, 110, "AGL(1,11)");
    write_group(dir, "s11_g.txt", &s11, &["S_11 in its natural action"]);
    write_group(
        dir,
        "s11_h.txt",
        &h,
        &[
            "PSL_2(11) acting on the 11 cosets of an A_5 subgroup,",
            "relabeled so x -> x+1 on Z_11 is one of its elements; order 660",
        ],
    );
    write_group(
        dir,
        "s11_k.txt",
        &k,
        &[
            "AGL(1,11) = <x -> x+1, x -> 2x> on Z_11, order 110",
            "meets the PSL_2(11) above in 11:5 of order 55",
        ],
    );
}

pub fn gen_psl219(dir: &Path) {
    let g = numth::psl2_group(19).unwrap();
    assert_order(&g, 3420, "PSL_2(19)");
    let h = find_two_generated(&g, 5, 2, 60);
    let r5 = find_element_of_order(&h, 5);
    let k = g.normalizer(&cyclic(&r5), 1_000_000).unwrap();
    assert_order(&k, 20, "D_20 in PSL_2(19)");
    write_group(
        dir,
        "psl219_g.txt",
        &g,
        &["PSL_2(19) on the 20 points of PG(1,19), order 3420"],
    );
    write_group(
        dir,
        "psl219_h.txt",
        &h,
        &["an A_5 = PSL_2(5) subgroup found by (5,2)-generation search, order 60"],
    );
    write_group(
        dir,
        "psl219_k.txt",
        &k,
        &[
            "normalizer of a cyclic 5-subgroup of the A_5 above: D_20, order 20",
            "meets the A_5 in D_10",
        ],
    );
}

pub fn gen_pgl211(dir: &Path) {
    let g = numth::pgl2_group(11).unwrap();
    assert_order(&g, 1320, "PGL_2(11)");
    let h = find_two_generated(&g, 5, 2, 60);
    let r5 = find_element_of_order(&h, 5);
    let k = g.normalizer(&cyclic(&r5), 1_000_000).unwrap();
    assert_order(&k, 20, "D_20 in PGL_2(11)");
    write_group(
        dir,
        "pgl211_g.txt",
        &g,
        &["PGL_2(11) on the 12 points of PG(1,11), order 1320"],
    );
    write_group(
        dir,
        "pgl211_h.txt",
        &h,
        &["an A_5 = PSL_2(5) subgroup (inside PSL_2(11)), order 60"],
    );
    write_group(
        dir,
        "pgl211_k.txt",
        &k,
        &["normalizer of a cyclic 5-subgroup of the A_5: D_20, order 20"],
    );
}

pub fn gen_m11(dir: &Path) {
    let g = PermGroup::new(
        11,
        vec![
            Perm::parse("(1 2 3 4 5 6 7 8 9 10 11)", 11).unwrap(),
            Perm::parse("(3 7 11 8)(4 10 5 6)", 11).unwrap(),
        ],
    )
    .unwrap();
    assert_order(&g, 7920, "M_11");
    let h = g.point_stabilizer(0).shrink_generators();
    assert_order(&h, 720, "M_10 point stabilizer");
    let k = g.setwise_stabilizer_pair(0, 1).shrink_generators();
    assert_order(&k, 144, "pair stabilizer in M_11");
    write_group(
        dir,
        "m11_g.txt",
        &g,
        &["M_11 = <(1..11), (3 7 11 8)(4 10 5 6)> on 11 points, order 7920"],
    );
    write_group(
        dir,
        "m11_h.txt",
        &h,
        &["stabilizer of point 1 in M_11: M_10 of order 720"],
    );
    write_group(
        dir,
        "m11_k.txt",
        &k,
        &["setwise stabilizer of {1,2} in M_11: 3^2:Q_8.2 of order 144"],
    );
}

pub fn gen_m10(dir: &Path) {
    let g = PermGroup::new(10, numth::m10_generators()).unwrap();
    assert_order(&g, 720, "M_10");
    let h = g.point_stabilizer(0).shrink_generators();
    assert_order(&h, 72, "M_9 point stabilizer");
    let k = g.setwise_stabilizer_pair(0, 1).shrink_generators();
    assert_order(&k, 16, "pair stabilizer in M_10");
    write_group(
        dir,
        "m10_g.txt",
        &g,
        &[
            "M_10 on the 10 points of PG(1,9): PSL_2(9) extended by x -> g*x^3",
            "order 720, sharply 3-transitive",
        ],
    );
    write_group(
        dir,
        "m10_h.txt",
        &h,
        &["stabilizer of point 1 in M_10: M_9 = 3^2:Q_8 of order 72"],
    );
    write_group(
        dir,
        "m10_k.txt",
        &k,
        &["setwise stabilizer of {1,2} in M_10: Z_8:Z_2 of order 16"],
    );
}

/// The three K_{6,6} variants: (PGL_2(9), A_5, D_20), (M_10, A_5, 5:4)
/// and (PGammaL_2(9), S_5-type, Z_10:Z_4).
pub fn gen_k66(dir: &Path) {
    let pgl = numth::pgl2_group(9).unwrap();
    assert_order(&pgl, 720, "PGL_2(9)");
    let h1 = find_two_generated(&pgl, 5, 2, 60);
    let r = find_element_of_order(&h1, 5);
    let k1 = pgl.normalizer(&cyclic(&r), 1_000_000).unwrap();
    assert_order(&k1, 20, "D_20 in PGL_2(9)");
    write_group(dir, "pgl29_g.txt", &pgl, &["PGL_2(9) on PG(1,9), order 720"]);
    write_group(dir, "pgl29_h.txt", &h1, &["an A_5 subgroup, order 60"]);
    write_group(
        dir,
        "pgl29_k.txt",
        &k1,
        &["normalizer of a cyclic 5-subgroup of the A_5: D_20, order 20"],
    );

    let m10 = PermGroup::new(10, numth::m10_generators()).unwrap();
    let h2 = find_two_generated(&m10, 5, 2, 60);
    let r2 = find_element_of_order(&h2, 5);
    let k2 = m10.normalizer(&cyclic(&r2), 1_000_000).unwrap();
    assert_order(&k2, 20, "5:4 in M_10");
    write_group(dir, "m10k66_g.txt", &m10, &["M_10 on PG(1,9), order 720"]);
    write_group(dir, "m10k66_h.txt", &h2, &["an A_5 subgroup, order 60"]);
    write_group(
        dir,
        "m10k66_k.txt",
        &k2,
        &["normalizer of a cyclic 5-subgroup of the A_5: 5:4, order 20"],
    );

    let pgam = PermGroup::new(10, numth::pgammal2_generators(9).unwrap()).unwrap();
    assert_order(&pgam, 1440, "PGammaL_2(9)");
    let h3 = find_centerless_120(&pgam);
    let r3 = find_element_of_order(&h3, 5);
    let k3 = pgam.normalizer(&cyclic(&r3), 1_000_000).unwrap();
    assert_order(&k3, 40, "Z_10:Z_4 in PGammaL_2(9)");
    write_group(
        dir,
        "pgammal29_g.txt",
        &pgam,
        &["PGammaL_2(9) on PG(1,9), order 1440"],
    );
    write_group(
        dir,
        "pgammal29_h.txt",
        &h3,
        &["an S_5 = PGL_2(5) subgroup, order 120"],
    );
    write_group(
        dir,
        "pgammal29_k.txt",
        &k3,
        &["normalizer of a cyclic 5-subgroup of the S_5: Z_10:Z_4, order 40"],
    );
}

/// First centerless subgroup of order 120 generated by an order-5 and an
/// order-2 element (an S_5; the other 120s in range have centers).
fn find_centerless_120(group: &PermGroup) -> PermGroup {
    let els: Vec<Perm> = group.elements(ENUMERATION_BOUND).unwrap().collect();
    let fives: Vec<&Perm> = els.iter().filter(|e| e.order() == 5).collect();
    let twos: Vec<&Perm> = els.iter().filter(|e| e.order() == 2).collect();
    for a in &fives {
        for b in &twos {
            let cand = PermGroup::new(group.degree(), vec![(*a).clone(), (*b).clone()]).unwrap();
            if cand.order_u64() != Some(120) {
                continue;
            }
            let center_free = els
                .iter()
                .filter(|e| e.order() == 2 && cand.contains(e).unwrap())
                .all(|t| cand.gens().iter().any(|g| &t.compose(g) != &g.compose(t)));
            if center_free {
                return cand;
            }
        }
    }
    panic!("no centerless order-120 subgroup found");
}
