use std::path::Path;

use num_bigint::BigUint;
use permgroup::fileio::format_group;
use permgroup::{Perm, PermGroup, ENUMERATION_BOUND};

pub fn write_group(dir: &Path, name: &str, group: &PermGroup, header: &[&str]) {
    let path = dir.join(name);
    let text = format_group(group, header);
    std::fs::write(&path, text).unwrap_or_else(|e| panic!("writing {}: {e}", path.display()));
    println!(
        "  wrote {:<28} degree {:>5}, order {}",
        name,
        group.degree(),
        group.order()
    );
}

pub fn assert_order(group: &PermGroup, expect: u128, what: &str) {
    let got = group.order();
    assert_eq!(
        got,
        BigUint::from(expect),
        "{what}: order mismatch (got {got}, expected {expect})"
    );
}

/// First element of the given order in the deterministic enumeration.
pub fn find_element_of_order(group: &PermGroup, order: u128) -> Perm {
    for e in group
        .elements(ENUMERATION_BOUND)
        .expect("group small enough to enumerate")
    {
        if e.order() == order {
            return e;
        }
    }
    panic!("no element of order {order} found");
}

/// First (a, b) with |a| = oa, |b| = ob and |<a,b>| = target, scanning
/// the deterministic enumeration. Used for small subgroup recipes.
pub fn find_two_generated(group: &PermGroup, oa: u128, ob: u128, target: u128) -> PermGroup {
    let els: Vec<Perm> = group
        .elements(ENUMERATION_BOUND)
        .expect("enumerable")
        .collect();
    let a_candidates: Vec<&Perm> = els.iter().filter(|e| e.order() == oa).collect();
    let b_candidates: Vec<&Perm> = els.iter().filter(|e| e.order() == ob).collect();
    for a in &a_candidates {
        for b in &b_candidates {
            let cand =
                PermGroup::new(group.degree(), vec![(*a).clone(), (*b).clone()]).expect("degree");
            if cand.order() == BigUint::from(target) {
                return cand;
            }
        }
    }
    panic!("no ({oa},{ob})-generated subgroup of order {target} found");
}

/// The cyclic group generated by one element.
pub fn cyclic(of: &Perm) -> PermGroup {
    PermGroup::new(of.degree(), vec![of.clone()]).expect("degree")
}
