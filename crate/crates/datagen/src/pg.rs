//! Projective-geometry entries: groups PSL_n(p) extended by a duality,
//! acting on (points ∪ hyperplanes) or (lines ∪ dual lines) of PG(n-1,p).
//! Subspaces are canonicalized by reduced row echelon form over F_p.

use std::collections::HashMap;
use std::path::Path;

use permgroup::{Perm, PermGroup};

use crate::util::*;

type Vect = Vec<u8>;
type Matrix = Vec<Vec<u8>>;

fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect()
}

/// v * M over F_p (row vector times matrix).
fn apply(v: &[u8], m: &Matrix, p: u8) -> Vect {
    let n = v.len();
    let mut out = vec![0u8; n];
    for (i, &vi) in v.iter().enumerate() {
        if vi == 0 {
            continue;
        }
        for j in 0..n {
            out[j] = (out[j] + vi * m[i][j]) % p;
        }
    }
    out
}

fn transvection(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = mat_identity(n);
    m[i][j] = 1;
    m
}

/// Cyclic basis shift with a sign fixing the determinant at 1.
fn signed_cycle(n: usize, p: u8) -> Matrix {
    let mut m = vec![vec![0u8; n]; n];
    for i in 0..n - 1 {
        m[i][i + 1] = 1;
    }
    // det of the plain cycle is (-1)^(n-1)
    m[n - 1][0] = if n % 2 == 1 { 1 } else { (p - 1) % p };
    m
}

/// Reduced row echelon form; rows are the basis of the row space.
fn rref(rows: &mut Vec<Vect>, p: u8) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let inv = |a: u8| -> u8 {
        // p is 2 or 3 here
        match (p, a) {
            (2, 1) => 1,
            (3, 1) => 1,
            (3, 2) => 2,
            _ => panic!("no inverse"),
        }
    };
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let s = inv(rows[pivot_row][col]);
        if s != 1 {
            for c in 0..ncols {
                rows[pivot_row][c] = (rows[pivot_row][c] * s) % p;
            }
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && rows[r2][col] != 0 {
                let f = rows[r2][col];
                for c in 0..ncols {
                    rows[r2][c] = (rows[r2][c] + (p - f) * rows[pivot_row][c]) % p;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
}

/// Exact canonical key: each RREF row packed base p.
fn key_of(rows: &[Vect], p: u8) -> Vec<u8> {
    rows.iter()
        .map(|row| {
            let mut rk: u64 = 0;
            for &c in row.iter().rev() {
                rk = rk * p as u64 + c as u64;
            }
            u8::try_from(rk).expect("packed row fits a byte")
        })
        .collect()
}

/// All k-dimensional subspaces of F_p^n as canonical RREF bases.
fn subspaces(n: usize, k: usize, p: u8) -> Vec<Vec<Vect>> {
    let total = (p as u64).pow(n as u32);
    let vecs: Vec<Vect> = (1..total)
        .map(|t| {
            let mut v = vec![0u8; n];
            let mut x = t;
            for slot in v.iter_mut() {
                *slot = (x % p as u64) as u8;
                x /= p as u64;
            }
            v
        })
        .collect();
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
    let mut out = Vec::new();
    // spans of k-tuples; fine at these sizes
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(idxs) = stack.pop() {
        if idxs.len() == k {
            let mut rows: Vec<Vect> = idxs.iter().map(|&i| vecs[i].clone()).collect();
            rref(&mut rows, p);
            if rows.len() == k {
                let key = key_of(&rows, p);
                if seen.insert(key, ()).is_none() {
                    out.push(rows);
                }
            }
            continue;
        }
        let start = idxs.last().map_or(0, |&i| i + 1);
        for i in start..vecs.len() {
            let mut next = idxs.clone();
            next.push(i);
            stack.push(next);
        }
    }
    out.sort_by_key(|rows| key_of(rows, p));
    out
}

/// Orthogonal complement of a subspace with respect to the dot form.
fn complement(rows: &[Vect], n: usize, p: u8) -> Vec<Vect> {
    // kernel of the matrix whose rows are `rows`
    let k = rows.len();
    let mut m: Vec<Vect> = rows.to_vec();
    rref(&mut m, p);
    let mut pivots = Vec::new();
    let mut col = 0;
    for r in 0..m.len() {
        while col < n && m[r][col] == 0 {
            col += 1;
        }
        pivots.push(col);
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u8; n];
        v[fc] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // v[pc] = -m[r][fc]
            v[pc] = (p - m[r][fc]) % p;
        }
        basis.push(v);
    }
    debug_assert_eq!(basis.len(), n - k);
    let mut b = basis;
    rref(&mut b, p);
    b
}

/// Domain: the chosen subspaces of dimension k, then their duals of
/// dimension n-k; a linear map acts on both ranges, the polarity swaps
/// them.
struct PgDomain {
    n: usize,
    p: u8,
    index: HashMap<Vec<u8>, u32>,
    bases: Vec<Vec<Vect>>,
    half: usize,
}

impl PgDomain {
    fn new(n: usize, k: usize, p: u8) -> PgDomain {
        let lows = subspaces(n, k, p);
        let half = lows.len();
        let mut bases = lows;
        if 2 * k != n {
            let highs: Vec<Vec<Vect>> = bases.iter().map(|b| complement(b, n, p)).collect();
            bases.extend(highs);
        } else {
            panic!("self-dual dimension split not used here");
        }
        let mut index = HashMap::new();
        for (i, b) in bases.iter().enumerate() {
            index.insert(key_of(b, p), i as u32);
        }
        assert_eq!(index.len(), bases.len(), "subspace keys must be unique");
        PgDomain {
            n,
            p,
            index,
            bases,
            half,
        }
    }

    fn perm_of_matrix(&self, m: &Matrix) -> Perm {
        let imgs: Vec<u32> = self
            .bases
            .iter()
            .map(|b| {
                let mut rows: Vec<Vect> = b.iter().map(|v| apply(v, m, self.p)).collect();
                rref(&mut rows, self.p);
                self.index[&key_of(&rows, self.p)]
            })
            .collect();
        Perm::from_images(imgs).expect("matrix acts bijectively")
    }

    fn polarity(&self) -> Perm {
        let imgs: Vec<u32> = self
            .bases
            .iter()
            .map(|b| {
                let c = complement(b, self.n, self.p);
                self.index[&key_of(&c, self.p)]
            })
            .collect();
        Perm::from_images(imgs).expect("polarity is an involution")
    }

    /// A pair (low-object index, high-object index) that is incident
    /// (low contained in high) or anti-incident.
    fn find_pair(&self, incident: bool) -> (u32, u32) {
        let low = &self.bases[0];
        for hi in self.half..self.bases.len() {
            let high = &self.bases[hi];
            // low subset of high: every low basis vector in the row space
            let mut combined: Vec<Vect> = high.clone();
            combined.extend(low.iter().cloned());
            let mut c = combined;
            rref(&mut c, self.p);
            let contained = c.len() == high.len();
            if contained == incident {
                return (0, hi as u32);
            }
        }
        panic!("no pair with the requested incidence");
    }

}

struct PgSpec {
    name: &'static str,
    n: usize,
    k: usize,
    p: u8,
    order_with_duality: u128,
    h_order: u128,
    k_order: u128,
    incident: bool,
    comment: &'static str,
}

fn build_pg_entry(dir: &Path, spec: &PgSpec) {
    let dom = PgDomain::new(spec.n, spec.k, spec.p);
    let degree = dom.bases.len();
    let a = dom.perm_of_matrix(&transvection(spec.n, 0, 1));
    let b = dom.perm_of_matrix(&signed_cycle(spec.n, spec.p));
    let d = dom.polarity();
    let g = PermGroup::new(degree, vec![a, b, d]).unwrap();
    assert_order(&g, spec.order_with_duality, spec.name);
    let h = g.point_stabilizer(0).shrink_generators();
    assert_order(&h, spec.h_order, "vertex stabilizer");
    let (u, v) = dom.find_pair(spec.incident);
    assert_eq!(u, 0);
    let k = g.setwise_stabilizer_pair(u, v).shrink_generators();
    assert_order(&k, spec.k_order, "edge stabilizer");
    write_group(
        dir,
        &format!("{}_g.txt", spec.name),
        &g,
        &[
            spec.comment,
            "generated by a transvection, a signed basis cycle, and the dot-form polarity",
        ],
    );
    write_group(
        dir,
        &format!("{}_h.txt", spec.name),
        &h,
        &["stabilizer of the first domain object"],
    );
    write_group(
        dir,
        &format!("{}_k.txt", spec.name),
        &k,
        &[if spec.incident {
            "setwise stabilizer of an incident (object, dual object) pair"
        } else {
            "setwise stabilizer of a non-incident (object, dual object) pair"
        }],
    );
}

pub fn gen_psl33(dir: &Path) {
    build_pg_entry(
        dir,
        &PgSpec {
            name: "psl33",
            n: 3,
            k: 1,
            p: 3,
            order_with_duality: 11232,
            h_order: 432,
            k_order: 96,
            incident: false,
            comment: "PSL_3(3).2 on the 13 points and 13 lines of PG(2,3); order 11232",
        },
    );
}

pub fn gen_psl42(dir: &Path) {
    build_pg_entry(
        dir,
        &PgSpec {
            name: "psl42",
            n: 4,
            k: 1,
            p: 2,
            order_with_duality: 40320,
            h_order: 1344,
            k_order: 384,
            incident: true,
            comment: "PSL_4(2).2 on the 15 points and 15 planes of PG(3,2); order 40320",
        },
    );
}

pub fn gen_psl43(dir: &Path) {
    build_pg_entry(
        dir,
        &PgSpec {
            name: "psl43",
            n: 4,
            k: 1,
            p: 3,
            order_with_duality: 12_130_560,
            h_order: 151_632,
            k_order: 23_328,
            incident: true,
            comment: "PSL_4(3).2 on the 40 points and 40 planes of PG(3,3); order 12130560",
        },
    );
}

pub fn gen_psl52(dir: &Path) {
    build_pg_entry(
        dir,
        &PgSpec {
            name: "psl52",
            n: 5,
            k: 2,
            p: 2,
            order_with_duality: 19_998_720,
            h_order: 64_512,
            k_order: 18_432,
            incident: true,
            comment: "PSL_5(2).2 on the 155 lines and 155 planes of PG(4,2); order 19998720",
        },
    );
}

pub fn gen_psl53(dir: &Path) {
    build_pg_entry(
        dir,
        &PgSpec {
            name: "psl53",
            n: 5,
            k: 2,
            p: 3,
            order_with_duality: 475_566_474_240,
            h_order: 196_515_072,
            k_order: 30_233_088,
            incident: true,
            comment: "PSL_5(3).2 on the 1210 lines and 1210 planes of PG(4,3); order 475566474240",
        },
    );
}
