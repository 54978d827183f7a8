use num_bigint::BigUint;
use permgroup::{Perm, PermGroup, ENUMERATION_BOUND};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn g(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens
        .iter()
        .map(|t| Perm::parse(t, degree).unwrap())
        .collect();
    PermGroup::new(degree, gens).unwrap()
}

/// Dihedral group of order 2n acting on n points.
fn dihedral(n: usize) -> PermGroup {
    let rot: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    PermGroup::new(
        n,
        vec![
            Perm::from_images(rot).unwrap(),
            Perm::from_images(refl).unwrap(),
        ],
    )
    .unwrap()
}

fn agl17() -> PermGroup {
    // x -> x+1 and x -> 3x on Z_7 (points 1..7 standing for 1..6, 7=0)
    g(7, &["(1 2 3 4 5 6 7)", "(1 3 2 6 4 5)"])
}

#[test]
fn chain_orders_match_formulas() {
    for n in 2..=10 {
        let order: u64 = (1..=n as u64).product();
        assert_eq!(PermGroup::symmetric(n).order_u64(), Some(order));
        if n >= 3 {
            assert_eq!(PermGroup::alternating(n).order_u64(), Some(order / 2));
        }
    }
    assert_eq!(PermGroup::trivial(5).order_u64(), Some(1));
}

#[test]
fn membership_examples() {
    let s4 = PermGroup::symmetric(4);
    for gen in s4.gens() {
        assert!(s4.contains(gen).unwrap());
    }
    assert!(s4.contains(&Perm::identity(4)).unwrap());
    let a4 = PermGroup::alternating(4);
    assert!(!a4.contains(&Perm::parse("(1 2)", 4).unwrap()).unwrap());
}

#[test]
fn membership_of_random_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let m11 = g(11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]);
    for _ in 0..30 {
        let mut w = Perm::identity(11);
        for _ in 0..rng.gen_range(1..=20) {
            let i = rng.gen_range(0..m11.gens().len());
            w = w.compose(&m11.gens()[i]);
        }
        assert!(m11.contains(&w).unwrap());
    }
}

#[test]
fn m11_and_its_point_stabilizer() {
    let m11 = g(11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]);
    assert_eq!(m11.order_u64(), Some(7920));
    let m10 = m11.point_stabilizer(0);
    assert_eq!(m10.order_u64(), Some(720));
}

#[test]
fn psl32_as_fano_plane_stabilizer() {
    // lines of the Fano plane from the difference set {1,2,4} mod 7
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
        let preserves = lines.iter().all(|l| {
            let mut img = [e.apply(l[0]), e.apply(l[1]), e.apply(l[2])];
            img.sort_unstable();
            line_set.contains(&img)
        });
        if preserves && !found.contains(&e).unwrap() {
            gens.push(e.clone());
            found = PermGroup::new(7, gens.clone()).unwrap();
            if found.order_u64() == Some(168) {
                break;
            }
        }
    }
    assert_eq!(found.order_u64(), Some(168));
    // 2-transitive on the 7 points
    let st = found.point_stabilizer(0);
    assert_eq!(st.orbit(1).len(), 6);
}

#[test]
fn orbits_and_transversals() {
    let s4 = PermGroup::symmetric(4);
    let (orbit, trans) = s4.orbit_with_transversal(0);
    assert_eq!(orbit.len(), 4);
    for (i, &q) in orbit.iter().enumerate() {
        assert_eq!(trans[i].apply(0), q);
    }
    assert_eq!(PermGroup::trivial(3).orbit(2), vec![2]);
    let single = g(3, &["(1 2)"]);
    assert_eq!(single.orbit(2), vec![2]);
}

#[test]
fn orbit_stabilizer_identity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..25 {
        let n = rng.gen_range(4..=9);
        let grp = random_subgroup(&mut rng, n);
        let p = rng.gen_range(0..n as u32);
        let orbit = grp.orbit(p);
        let stab = grp.point_stabilizer(p);
        assert_eq!(
            BigUint::from(orbit.len()) * stab.order(),
            grp.order(),
            "orbit-stabilizer failed for degree {n}"
        );
    }
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut imgs: Vec<u32> = (0..n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        imgs.swap(i, j);
    }
    Perm::from_images(imgs).unwrap()
}

fn random_subgroup(rng: &mut ChaCha8Rng, n: usize) -> PermGroup {
    let k = rng.gen_range(1..=3);
    let gens: Vec<Perm> = (0..k).map(|_| random_perm(rng, n)).collect();
    PermGroup::new(n, gens).unwrap()
}

#[test]
fn pointwise_stabilizers() {
    let s4 = PermGroup::symmetric(4);
    let fix12 = s4.pointwise_stabilizer(&[0, 1]);
    assert_eq!(fix12.order_u64(), Some(2));
    assert!(fix12.contains(&Perm::parse("(3 4)", 4).unwrap()).unwrap());
    let fix123 = s4.pointwise_stabilizer(&[0, 1, 2]);
    assert_eq!(fix123.order_u64(), Some(1));
    let all = s4.pointwise_stabilizer(&[]);
    assert_eq!(all.order_u64(), Some(24));
}

#[test]
fn setwise_pair_stabilizers() {
    let s4 = PermGroup::symmetric(4);
    let k = s4.setwise_stabilizer_pair(0, 1);
    assert_eq!(k.order_u64(), Some(4));
    let c3 = g(3, &["(1 2 3)"]);
    assert!(c3.setwise_stabilizer_pair(0, 1).is_trivial());
    // pair in different orbits: no swap
    let h = g(4, &["(1 2)", "(3 4)"]);
    let st = h.setwise_stabilizer_pair(0, 2);
    assert_eq!(st.order_u64(), Some(1));
}

#[test]
fn setwise_pair_vs_bruteforce() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let n = rng.gen_range(4..=7);
        let grp = random_subgroup(&mut rng, n);
        let u = rng.gen_range(0..n as u32);
        let mut v = rng.gen_range(0..n as u32);
        while v == u {
            v = rng.gen_range(0..n as u32);
        }
        let fast = grp.setwise_stabilizer_pair(u, v);
        let brute: Vec<Perm> = grp
            .elements(ENUMERATION_BOUND)
            .unwrap()
            .filter(|e| {
                let (a, b) = (e.apply(u), e.apply(v));
                (a == u && b == v) || (a == v && b == u)
            })
            .collect();
        assert_eq!(fast.order_u64(), Some(brute.len() as u64));
        for e in &brute {
            assert!(fast.contains(e).unwrap());
        }
    }
}

#[test]
fn normal_closures() {
    let s4 = PermGroup::symmetric(4);
    let a4 = s4
        .normal_closure(&[Perm::parse("(1 2 3)", 4).unwrap()])
        .unwrap();
    assert_eq!(a4.order_u64(), Some(12));
    let trivial = s4.normal_closure(&[Perm::identity(4)]).unwrap();
    assert!(trivial.is_trivial());
    let a5 = PermGroup::alternating(5);
    let whole = a5
        .normal_closure(&[Perm::parse("(1 2 3)", 5).unwrap()])
        .unwrap();
    assert_eq!(whole.order(), a5.order());
    // seed outside the group is rejected
    assert!(a5
        .normal_closure(&[Perm::parse("(1 2)", 5).unwrap()])
        .is_err());
}

#[test]
fn derived_series_and_solubility() {
    assert!(PermGroup::symmetric(4).is_soluble());
    assert!(!PermGroup::alternating(5).is_soluble());
    assert!(agl17().is_soluble());
    assert_eq!(agl17().order_u64(), Some(42));
    let s4 = PermGroup::symmetric(4);
    let d = s4.derived_subgroup();
    assert_eq!(d.order_u64(), Some(12));
    assert!(d.is_normal_in(&s4).unwrap());
    // all generator commutators sift into the derived subgroup
    for a in s4.gens() {
        for b in s4.gens() {
            assert!(d.contains(&a.commutator(b)).unwrap());
        }
    }
}

#[test]
fn element_enumeration() {
    let s3 = PermGroup::symmetric(3);
    let els: Vec<Perm> = s3.elements(10).unwrap().collect();
    assert_eq!(els.len(), 6);
    let set: HashSet<Perm> = els.into_iter().collect();
    assert_eq!(set.len(), 6);
    assert_eq!(PermGroup::trivial(2).elements(10).unwrap().count(), 1);
    let gl23_sized = g(8, &["(1 2 3 4 5 6 7 8)", "(1 2 4)(5 6 7)"]);
    // sanity: enumeration honors the bound
    assert!(gl23_sized.elements(3).is_err());
}

#[test]
fn enumeration_streams_each_element_once() {
    let m11 = g(11, &["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]);
    let mut count = 0u64;
    let mut sample = HashSet::new();
    for e in m11.elements(ENUMERATION_BOUND).unwrap() {
        count += 1;
        if count % 97 == 0 {
            assert!(sample.insert(e), "duplicate element in stream");
        }
    }
    assert_eq!(count, 7920);
}

// ---- brute-force oracles ---------------------------------------------

fn elements_of(grp: &PermGroup) -> Vec<Perm> {
    grp.elements(ENUMERATION_BOUND).unwrap().collect()
}

/// Independent O_p oracle: one Sylow p-subgroup by greedy closure over
/// p-elements, then intersect all its conjugates.
fn brute_p_core(grp: &PermGroup, p: u64) -> HashSet<Perm> {
    let els = elements_of(grp);
    let mut sylow: HashSet<Perm> = HashSet::new();
    sylow.insert(Perm::identity(grp.degree()));
    for e in &els {
        if !is_p_element(e, p) || sylow.contains(e) {
            continue;
        }
        let mut cand: Vec<Perm> = sylow.iter().cloned().collect();
        cand.push(e.clone());
        let closed = close_set(&cand);
        if closed.iter().all(|x| is_p_element(x, p)) {
            sylow = closed.into_iter().collect();
        }
    }
    let mut core: HashSet<Perm> = sylow.clone();
    for e in &els {
        let conj: HashSet<Perm> = sylow.iter().map(|s| s.conjugate_by(e)).collect();
        core = core.intersection(&conj).cloned().collect();
    }
    core
}

fn is_p_element(e: &Perm, p: u64) -> bool {
    let mut o = e.order();
    while o % p as u128 == 0 {
        o /= p as u128;
    }
    o == 1
}

fn close_set(seed: &[Perm]) -> Vec<Perm> {
    let mut set: HashSet<Perm> = seed.iter().cloned().collect();
    let mut frontier: Vec<Perm> = seed.to_vec();
    while let Some(x) = frontier.pop() {
        for y in set.clone() {
            for z in [x.compose(&y), y.compose(&x)] {
                if set.insert(z.clone()) {
                    frontier.push(z);
                }
            }
        }
    }
    set.into_iter().collect()
}

#[test]
fn p_core_examples_and_oracle() {
    let d20 = dihedral(10); // dihedral of order 20
    assert_eq!(d20.order_u64(), Some(20));
    let o5 = d20.p_core(5, ENUMERATION_BOUND).unwrap();
    assert_eq!(o5.order_u64(), Some(5));
    let a5 = PermGroup::alternating(5);
    assert!(a5.p_core(2, ENUMERATION_BOUND).unwrap().is_trivial());
    let o7 = agl17().p_core(7, ENUMERATION_BOUND).unwrap();
    assert_eq!(o7.order_u64(), Some(7));
    assert!(d20.p_core(4, ENUMERATION_BOUND).is_err());

    // oracle agreement on a spread of small groups
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut cases: Vec<PermGroup> = vec![
        d20,
        agl17(),
        PermGroup::symmetric(4),
        PermGroup::alternating(4),
        dihedral(6),
        dihedral(8),
        g(8, &["(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)"]),
    ];
    while cases.len() < 14 {
        let n = rng.gen_range(4..=7);
        let c = random_subgroup(&mut rng, n);
        if c.order_u64().unwrap() <= 2000 {
            cases.push(c);
        }
    }
    for grp in &cases {
        for p in [2u64, 3, 5, 7] {
            let fast = grp.p_core(p, ENUMERATION_BOUND).unwrap();
            let brute = brute_p_core(grp, p);
            assert_eq!(
                fast.order_u64().unwrap(),
                brute.len() as u64,
                "p_core mismatch p={p} |G|={:?}",
                grp.order_u64()
            );
            for e in &brute {
                assert!(fast.contains(e).unwrap());
            }
        }
    }
}

#[test]
fn fitting_subgroups() {
    let d20 = dihedral(10);
    let fit = d20.fitting_subgroup(ENUMERATION_BOUND).unwrap();
    assert_eq!(fit.order_u64(), Some(10));
    assert!(PermGroup::alternating(5)
        .fitting_subgroup(ENUMERATION_BOUND)
        .unwrap()
        .is_trivial());
    let abelian = g(6, &["(1 2 3)", "(4 5 6)"]);
    let fit2 = abelian.fitting_subgroup(ENUMERATION_BOUND).unwrap();
    assert_eq!(fit2.order(), abelian.order());
}

#[test]
fn index_subgroup_normal() {
    let s4 = PermGroup::symmetric(4);
    let a4 = PermGroup::alternating(4);
    assert_eq!(s4.index_of(&a4).unwrap(), BigUint::from(2u32));
    assert!(a4.is_normal_in(&s4).unwrap());
    let t = g(4, &["(1 2)"]);
    assert_eq!(s4.index_of(&t).unwrap(), BigUint::from(12u32));
    assert!(!t.is_normal_in(&s4).unwrap());
    assert_eq!(s4.index_of(&s4).unwrap(), BigUint::from(1u32));
    // not a subgroup
    let c5 = g(5, &["(1 2 3 4 5)"]);
    assert!(PermGroup::symmetric(4)
        .index_of(&g(4, &["(1 2 3)"]))
        .is_ok());
    assert!(c5.index_of(&g(5, &["(1 2)"])).is_err());
}

#[test]
fn intersections_vs_bruteforce() {
    // (A_4, D_8) -> V_4
    let a4 = PermGroup::alternating(4);
    let d8 = g(4, &["(1 2)", "(3 4)", "(1 3)(2 4)"]);
    assert_eq!(d8.order_u64(), Some(8));
    let v4 = a4.intersection(&d8).unwrap();
    assert_eq!(v4.order_u64(), Some(4));
    let same = a4.intersection(&a4).unwrap();
    assert_eq!(same.order(), a4.order());
    let t1 = g(3, &["(1 2)"]);
    let t2 = g(3, &["(1 3)"]);
    assert!(t1.intersection(&t2).unwrap().is_trivial());

    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut done = 0;
    while done < 25 {
        let n = rng.gen_range(4..=7);
        let g1 = random_subgroup(&mut rng, n);
        let g2 = random_subgroup(&mut rng, n);
        if g1.order_u64().unwrap() > 5000 {
            continue;
        }
        let fast = g1.intersection(&g2).unwrap();
        let brute: Vec<Perm> = elements_of(&g1)
            .into_iter()
            .filter(|e| g2.contains(e).unwrap())
            .collect();
        assert_eq!(fast.order_u64(), Some(brute.len() as u64));
        for e in &brute {
            assert!(fast.contains(e).unwrap());
        }
        done += 1;
    }
}

#[test]
fn normal_sylow_lift_checks() {
    let s7 = PermGroup::symmetric(7);
    assert!(s7
        .normal_sylow_lift_check(&agl17(), 7, ENUMERATION_BOUND)
        .unwrap());
    let s4 = PermGroup::symmetric(4);
    let d8 = g(4, &["(1 2)", "(3 4)", "(1 3)(2 4)"]);
    assert!(s4.normal_sylow_lift_check(&d8, 2, ENUMERATION_BOUND).unwrap());
    // A_4 has no normal Sylow 2 inside S_4? It does: V_4. But A_4 itself
    // as candidate with p=3 has no normal Sylow 3 subgroup.
    let a4 = PermGroup::alternating(4);
    assert!(s4.normal_sylow_lift_check(&a4, 3, ENUMERATION_BOUND).is_err());
}
