use permgroup::{coset_action, Action, Perm, PermGroup, COSET_ACTION_BOUND};
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

/// S_4 acting on the six 2-subsets of {1..4}, pairs ordered lexicographically.
fn s4_on_pairs() -> Action {
    let s4 = PermGroup::symmetric(4);
    let pairs: Vec<(u32, u32)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let idx = |a: u32, b: u32| -> u32 {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap() as u32
    };
    let images = s4
        .gens()
        .iter()
        .map(|gp| {
            let v: Vec<u32> = pairs
                .iter()
                .map(|&(a, b)| idx(gp.apply(a), gp.apply(b)))
                .collect();
            Perm::from_images(v).unwrap()
        })
        .collect();
    Action::from_images(&s4, 6, images)
}

#[test]
fn induced_groups() {
    let c3 = g(3, &["(1 2 3)"]);
    let act = Action::natural(&c3);
    assert_eq!(act.induced_group().order_u64(), Some(3));
    let s4 = PermGroup::symmetric(4);
    assert_eq!(
        Action::natural(&s4).induced_group().order_u64(),
        s4.order_u64()
    );
}

#[test]
fn faithfulness() {
    let s4 = PermGroup::symmetric(4);
    assert!(Action::natural(&s4).is_faithful().unwrap());
    // S_4 on the cosets of D_8: three points, kernel V_4
    let d8 = g(4, &["(1 2)", "(3 4)", "(1 3)(2 4)"]);
    let act = coset_action(&s4, &d8, COSET_ACTION_BOUND).unwrap();
    assert_eq!(act.domain_size(), 3);
    assert!(!act.is_faithful().unwrap());
    let ker = act.kernel().unwrap();
    assert_eq!(ker.order_u64(), Some(4));
    assert!(ker.is_normal_in(&s4).unwrap());
    // regular action is faithful
    let c5 = g(5, &["(1 2 3 4 5)"]);
    assert!(Action::natural(&c5).is_faithful().unwrap());
}

#[test]
fn transitivity_and_orbits() {
    let act = Action::natural(&g(3, &["(1 2)"]));
    assert!(!act.is_transitive());
    assert_eq!(act.orbits(), vec![vec![0, 1], vec![2]]);
    assert!(Action::natural(&g(5, &["(1 2 3 4 5)"])).is_transitive());
    assert!(s4_on_pairs().is_transitive());
}

#[test]
fn two_transitivity() {
    assert!(Action::natural(&PermGroup::symmetric(4)).is_2_transitive());
    assert!(!Action::natural(&dihedral(4)).is_2_transitive());
    // the pair action of S_4 is transitive but not 2-transitive
    assert!(!s4_on_pairs().is_2_transitive());
}

#[test]
fn minimal_blocks() {
    let c4 = g(4, &["(1 2 3 4)"]);
    let b = Action::natural(&c4).minimal_block(0, 2).unwrap();
    assert_eq!(b, vec![0, 2]);
    let s4 = PermGroup::symmetric(4);
    let whole = Action::natural(&s4).minimal_block(0, 1).unwrap();
    assert_eq!(whole.len(), 4);
    let d12 = dihedral(6);
    let antipodal = Action::natural(&d12).minimal_block(0, 3).unwrap();
    assert_eq!(antipodal, vec![0, 3]);
    // intransitive actions are rejected
    assert!(Action::natural(&g(3, &["(1 2)"])).minimal_block(0, 2).is_err());
}

#[test]
fn primitivity_examples() {
    assert!(!Action::natural(&g(6, &["(1 2 3 4 5 6)"]))
        .is_primitive()
        .unwrap());
    assert!(Action::natural(&PermGroup::alternating(5))
        .is_primitive()
        .unwrap());
    // S_4 on pairs has blocks {pair, complement}
    assert!(!s4_on_pairs().is_primitive().unwrap());
}

#[test]
fn primitivity_matches_bruteforce_on_random_actions() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut tested = 0;
    while tested < 60 {
        let n = rng.gen_range(3..=10);
        let k = rng.gen_range(1..=2);
        let gens: Vec<Perm> = (0..k)
            .map(|_| {
                let mut imgs: Vec<u32> = (0..n as u32).collect();
                for i in (1..n).rev() {
                    let j = rng.gen_range(0..=i);
                    imgs.swap(i, j);
                }
                Perm::from_images(imgs).unwrap()
            })
            .collect();
        let grp = PermGroup::new(n, gens).unwrap();
        let act = Action::natural(&grp);
        if !act.is_transitive() {
            continue;
        }
        assert_eq!(
            act.is_primitive().unwrap(),
            permgroup::action::is_primitive_bruteforce(&act),
            "primitivity mismatch on degree {n}"
        );
        tested += 1;
    }
}

#[test]
fn coset_action_examples() {
    let s4 = PermGroup::symmetric(4);
    // S_3 fixing point 4: coset action is the natural 4-point action
    let s3 = s4.point_stabilizer(3);
    let act = coset_action(&s4, &s3, COSET_ACTION_BOUND).unwrap();
    assert_eq!(act.domain_size(), 4);
    assert!(act.is_faithful().unwrap());
    assert!(act.is_2_transitive());
    assert!(act.is_primitive().unwrap());

    let d8 = g(4, &["(1 2)", "(3 4)", "(1 3)(2 4)"]);
    let act3 = coset_action(&s4, &d8, COSET_ACTION_BOUND).unwrap();
    assert_eq!(act3.domain_size(), 3);
    assert_eq!(act3.induced_group().order_u64(), Some(6));

    // K not a subgroup is rejected
    let c5 = g(5, &["(1 2 3 4 5)"]);
    assert!(coset_action(&c5, &g(5, &["(1 2)"]), COSET_ACTION_BOUND).is_err());
    // index bound enforced
    assert!(coset_action(&s4, &PermGroup::trivial(4), 10).is_err());
}

#[test]
fn coset_action_on_frobenius_subgroup_of_psl27() {
    // PSL_3(2) = PSL_2(7) as the Fano-plane stabilizer in S_7
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
    let mut psl = PermGroup::trivial(7);
    for e in s7.elements(10_000_000).unwrap() {
        let ok = lines.iter().all(|l| {
            let mut img = [e.apply(l[0]), e.apply(l[1]), e.apply(l[2])];
            img.sort_unstable();
            line_set.contains(&img)
        });
        if ok && !psl.contains(&e).unwrap() {
            gens.push(e.clone());
            psl = PermGroup::new(7, gens.clone()).unwrap();
            if psl.order_u64() == Some(168) {
                break;
            }
        }
    }
    assert_eq!(psl.order_u64(), Some(168));
    // 7:3 Frobenius inside it
    let frob = g(7, &["(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"]);
    assert_eq!(frob.order_u64(), Some(21));
    assert!(frob.is_subgroup_of(&psl).unwrap());
    let act = coset_action(&psl, &frob, COSET_ACTION_BOUND).unwrap();
    assert_eq!(act.domain_size(), 8);
    assert!(act.is_2_transitive());
}

#[test]
fn coset_action_stabilizer_is_the_subgroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let n = rng.gen_range(4..=7);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Perm> = (0..k)
            .map(|_| {
                let mut imgs: Vec<u32> = (0..n as u32).collect();
                for i in (1..n).rev() {
                    let j = rng.gen_range(0..=i);
                    imgs.swap(i, j);
                }
                Perm::from_images(imgs).unwrap()
            })
            .collect();
        let grp = PermGroup::new(n, gens).unwrap();
        let p = rng.gen_range(0..n as u32);
        let sub = grp.point_stabilizer(p);
        let act = coset_action(&grp, &sub, COSET_ACTION_BOUND).unwrap();
        assert!(act.is_transitive());
        // |domain| * |stabilizer of coset 0| = |G|, stabilizer = subgroup
        let stab = act.stabilizer_in(&grp, 0);
        assert_eq!(stab.order(), sub.order());
        assert!(stab.is_subgroup_of(&sub).unwrap() && sub.is_subgroup_of(&stab).unwrap());
    }
}

#[test]
fn primitive_coset_action_iff_maximal() {
    let s4 = PermGroup::symmetric(4);
    // maximal: A_4, D_8, S_3
    for sub in [
        PermGroup::alternating(4),
        g(4, &["(1 2)", "(3 4)", "(1 3)(2 4)"]),
        s4.point_stabilizer(0),
    ] {
        let act = coset_action(&s4, &sub, COSET_ACTION_BOUND).unwrap();
        assert!(act.is_primitive().unwrap());
    }
    // non-maximal: <(1 2)> inside D_8, V_4 inside A_4
    for sub in [g(4, &["(1 2)"]), g(4, &["(1 2)(3 4)", "(1 3)(2 4)"])] {
        let act = coset_action(&s4, &sub, COSET_ACTION_BOUND).unwrap();
        assert!(!act.is_primitive().unwrap());
    }
}
