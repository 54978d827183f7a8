use permgroup::{Perm, PermGroup};
use proptest::prelude::*;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just(degree).prop_perturb(move |n, mut rng| {
        let mut imgs: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            imgs.swap(i, j);
        }
        Perm::from_images(imgs).unwrap()
    })
}

proptest! {
    #[test]
    fn compose_then_uncompose(a in arb_perm(9), b in arb_perm(9)) {
        prop_assert_eq!(a.compose(&b).compose(&b.inverse()), a);
    }

    #[test]
    fn parse_print_parse_is_fixed_point(a in arb_perm(12)) {
        let text = a.to_string();
        let back = Perm::parse(&text, 12).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn inverse_is_involution_on_compose(a in arb_perm(7), b in arb_perm(7)) {
        let ab = a.compose(&b);
        prop_assert_eq!(ab.inverse(), b.inverse().compose(&a.inverse()));
    }

    #[test]
    fn element_order_divides_group_order(a in arb_perm(6), b in arb_perm(6)) {
        let grp = PermGroup::new(6, vec![a.clone(), b]).unwrap();
        let n = grp.order_u64().unwrap();
        prop_assert_eq!(n as u128 % a.order(), 0);
    }
}
