//! The sporadic group J_1 on 266 points: generated inside GL_7(11) by
//! the 7-cycle basis permutation Y and a fixed matrix Z of order 5; the
//! 266-point representation is the unique orbit of that size on the
//! projective points of F_11^7. Subgroup data comes from normalizers of
//! cyclic subgroups and of a Sylow 2-subgroup.

use std::collections::HashMap;
use std::path::Path;

use permgroup::{Perm, PermGroup, ENUMERATION_BOUND};

use crate::util::*;

const P: u64 = 11;
const DIM: usize = 7;

type Mat = [[u64; DIM]; DIM];

fn y_matrix() -> Mat {
    let mut m = [[0u64; DIM]; DIM];
    for i in 0..DIM {
        m[i][(i + 1) % DIM] = 1;
    }
    m
}

fn z_matrix() -> Mat {
    // entries mod 11; -1 = 10, -2 = 9, -3 = 8
    let raw: [[i64; DIM]; DIM] = [
        [-3, 2, -1, -1, -3, -1, -3],
        [-2, 1, 1, 3, 1, 3, 3],
        [-1, -1, -3, -1, -3, -3, 2],
        [-1, -3, -1, -3, -3, 2, -1],
        [-3, -1, -3, -3, 2, -1, -1],
        [1, 3, 3, -2, 1, 1, 3],
        [3, 3, -2, 1, 1, 3, 1],
    ];
    let mut m = [[0u64; DIM]; DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            m[i][j] = raw[i][j].rem_euclid(P as i64) as u64;
        }
    }
    m
}

fn apply(v: &[u64; DIM], m: &Mat) -> [u64; DIM] {
    let mut out = [0u64; DIM];
    for i in 0..DIM {
        if v[i] == 0 {
            continue;
        }
        for j in 0..DIM {
            out[j] = (out[j] + v[i] * m[i][j]) % P;
        }
    }
    out
}

/// Scale so the first nonzero coordinate is 1.
fn normalize(v: &[u64; DIM]) -> [u64; DIM] {
    let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero");
    if lead == 1 {
        return *v;
    }
    let inv = mod_inv(lead);
    let mut out = [0u64; DIM];
    for i in 0..DIM {
        out[i] = v[i] * inv % P;
    }
    out
}

fn mod_inv(a: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % P;
    let mut e = P - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn pack(v: &[u64; DIM]) -> u32 {
    let mut k = 0u32;
    for &c in v.iter().rev() {
        k = k * P as u32 + c as u32;
    }
    k
}

/// BFS of the seed's orbit under <Y,Z>. If the orbit exceeds 266 points
/// or touches a point already abandoned, returns the visited points as
/// Err so the caller can mark them; complete small orbits come back Ok.
fn orbit_of(
    seed: [u64; DIM],
    y: &Mat,
    z: &Mat,
    abandoned: &HashMap<u32, ()>,
) -> Result<Vec<[u64; DIM]>, Vec<u32>> {
    let seed = normalize(&seed);
    let mut orbit = vec![seed];
    let mut seen: HashMap<u32, ()> = HashMap::new();
    seen.insert(pack(&seed), ());
    let mut i = 0;
    while i < orbit.len() {
        for m in [y, z] {
            let img = normalize(&apply(&orbit[i], m));
            let key = pack(&img);
            if abandoned.contains_key(&key) {
                return Err(seen.keys().copied().collect());
            }
            if seen.insert(key, ()).is_none() {
                orbit.push(img);
                if orbit.len() > 266 {
                    return Err(seen.keys().copied().collect());
                }
            }
        }
        i += 1;
    }
    Ok(orbit)
}

/// Finds the 266-point orbit by scanning seeds in index order.
fn degree_266_action() -> PermGroup {
    let y = y_matrix();
    let z = z_matrix();
    let mut abandoned: HashMap<u32, ()> = HashMap::new();
    let total = (P as u64).pow(DIM as u32);
    let mut t = 1u64;
    while t < total {
        let mut v = [0u64; DIM];
        let mut x = t;
        for slot in v.iter_mut() {
            *slot = x % P;
            x /= P;
        }
        t += 1;
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        let v = normalize(&v);
        if abandoned.contains_key(&pack(&v)) {
            continue;
        }
        match orbit_of(v, &y, &z, &abandoned) {
            Ok(orbit) if orbit.len() == 266 => {
                // index the orbit in a canonical (sorted) order
                let mut pts: Vec<u32> = orbit.iter().map(pack).collect();
                pts.sort_unstable();
                let index: HashMap<u32, u32> = pts
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| (k, i as u32))
                    .collect();
                let unpack = |k: u32| -> [u64; DIM] {
                    let mut v = [0u64; DIM];
                    let mut x = k;
                    for slot in v.iter_mut() {
                        *slot = (x % P as u32) as u64;
                        x /= P as u32;
                    }
                    v
                };
                let mut perms = Vec::new();
                for m in [&y, &z] {
                    let imgs: Vec<u32> = pts
                        .iter()
                        .map(|&k| index[&pack(&normalize(&apply(&unpack(k), m)))])
                        .collect();
                    perms.push(Perm::from_images(imgs).expect("orbit closed"));
                }
                return PermGroup::new(266, perms).unwrap();
            }
            Ok(orbit) => {
                for p in orbit {
                    abandoned.insert(pack(&p), ());
                }
            }
            Err(visited) => {
                for k in visited {
                    abandoned.insert(k, ());
                }
            }
        }
    }
    panic!("no orbit of length 266 found");
}

pub fn gen_j1(dir: &Path) {
    let g = degree_266_action();
    assert_order(&g, 175_560, "J_1");

    // d = 8 entry: K = 7:6 (normalizer of a 7-element), H = 2^3:7:3
    // (normalizer of the Sylow 2-subgroup generated by the y-conjugates
    // of a suitable involution)
    let y7 = find_element_of_order(&g, 7);
    let k8 = g.normalizer(&cyclic(&y7), 1_000_000).unwrap().shrink_generators();
    assert_order(&k8, 42, "7:6 in J_1");

    let mut h8: Option<PermGroup> = None;
    for e in g.elements(ENUMERATION_BOUND).unwrap() {
        if e.order() != 2 {
            continue;
        }
        // cheap filter: the y-conjugates must commute with e if they are
        // to span an elementary abelian 2-group
        let c1 = e.conjugate_by(&y7);
        if c1.compose(&e) != e.compose(&c1) {
            continue;
        }
        let mut conj = Vec::new();
        let mut cur = e.clone();
        for _ in 0..7 {
            cur = cur.conjugate_by(&y7);
            conj.push(cur.clone());
        }
        let span = PermGroup::new(266, conj).unwrap();
        if span.order_u64() == Some(8) {
            let h = g.normalizer(&span, 1_000_000).unwrap().shrink_generators();
            assert_order(&h, 168, "2^3:7:3 in J_1");
            h8 = Some(h);
            break;
        }
    }
    let h8 = h8.expect("a y-invariant Sylow 2-subgroup exists");

    // d = 12 entry: H = point stabilizer PSL_2(11), K = 11:10
    let h12 = g.point_stabilizer(0).shrink_generators();
    assert_order(&h12, 660, "PSL_2(11) point stabilizer");
    let x11 = find_element_of_order(&h12, 11);
    let k12 = g.normalizer(&cyclic(&x11), 1_000_000).unwrap().shrink_generators();
    assert_order(&k12, 110, "11:10 in J_1");

    write_group(
        dir,
        "j1_g.txt",
        &g,
        &[
            "J_1 on 266 points: the orbit of length 266 of the projective points of",
            "F_11^7 under the 7-cycle basis matrix and the fixed order-5 companion matrix",
            "order 175560",
        ],
    );
    write_group(
        dir,
        "j1d8_h.txt",
        &h8,
        &["normalizer of a Sylow 2-subgroup: 2^3:7:3 of order 168"],
    );
    write_group(
        dir,
        "j1d8_k.txt",
        &k8,
        &["normalizer of a 7-element inside the 2^3:7:3 above: 7:6 of order 42"],
    );
    write_group(
        dir,
        "j1d12_h.txt",
        &h12,
        &["stabilizer of point 1: PSL_2(11) of order 660"],
    );
    write_group(
        dir,
        "j1d12_k.txt",
        &k12,
        &["normalizer of an 11-element of the point stabilizer: 11:10 of order 110"],
    );
}
