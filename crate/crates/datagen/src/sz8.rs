//! The Suzuki group Sz(8) on its 65-point ovoid: affine points (a, b)
//! over F_8 plus one point at infinity. With theta the square of the
//! Frobenius (x -> x^4, so theta(theta(x)) = x^2) the ovoid norm is
//! f(a,b) = a^(theta+2) + ab + b^theta, nonzero away from the origin.
//! Generators: the unipotent maps (c,d) -> (c+a, d+b+theta(a)c), the
//! torus (c,d) -> (kc, k^(theta+1) d), and the involution swapping the
//! origin with infinity via (c,d) -> (d/f, c/f).

use std::path::Path;

use numth::Gf;
use permgroup::{Perm, PermGroup};

use crate::util::*;

struct Ovoid {
    field: Gf,
}

impl Ovoid {
    fn new() -> Ovoid {
        Ovoid {
            field: Gf::new(8).unwrap(),
        }
    }

    fn theta(&self, x: u64) -> u64 {
        self.field.pow(x, 4)
    }

    fn norm(&self, a: u64, b: u64) -> u64 {
        let f = &self.field;
        f.add(f.add(f.mul(self.theta(a), f.mul(a, a)), f.mul(a, b)), self.theta(b))
    }

    fn label(&self, a: u64, b: u64) -> u32 {
        (a * 8 + b) as u32
    }

    fn infinity(&self) -> u32 {
        64
    }

    fn perm_affine(&self, map: impl Fn(u64, u64) -> (u64, u64)) -> Perm {
        let mut imgs: Vec<u32> = Vec::with_capacity(65);
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = map(a, b);
                imgs.push(self.label(x, y));
            }
        }
        imgs.push(self.infinity());
        Perm::from_images(imgs).expect("affine ovoid map is a bijection")
    }

    /// (c,d) -> (c+a, d+b+theta(a)c)
    fn unipotent(&self, a: u64, b: u64) -> Perm {
        let f = &self.field;
        self.perm_affine(|c, d| (f.add(c, a), f.add(f.add(d, b), f.mul(self.theta(a), c))))
    }

    /// (c,d) -> (kc, k^(theta+1) d)
    fn torus(&self, k: u64) -> Perm {
        let f = &self.field;
        let kpow = f.mul(self.theta(k), k);
        self.perm_affine(|c, d| (f.mul(k, c), f.mul(kpow, d)))
    }

    /// origin <-> infinity, (c,d) -> (d/f(c,d), c/f(c,d)) elsewhere
    fn flip(&self) -> Perm {
        let f = &self.field;
        let mut imgs: Vec<u32> = Vec::with_capacity(65);
        for a in 0..8 {
            for b in 0..8 {
                if a == 0 && b == 0 {
                    imgs.push(self.infinity());
                } else {
                    let nrm = self.norm(a, b);
                    assert!(nrm != 0, "ovoid norm vanishes only at the origin");
                    let ninv = f.inv(nrm);
                    imgs.push(self.label(f.mul(b, ninv), f.mul(a, ninv)));
                }
            }
        }
        imgs.push(self.label(0, 0));
        Perm::from_images(imgs).expect("flip is a bijection")
    }
}

pub fn gen_sz8(dir: &Path) {
    let ov = Ovoid::new();
    let kappa = ov.field.generator();
    let u10 = ov.unipotent(1, 0);
    let u01 = ov.unipotent(0, 1);
    let t = ov.torus(kappa);
    let w = ov.flip();
    assert!(w.compose(&w).is_identity(), "flip must be an involution");

    let g = PermGroup::new(65, vec![u10.clone(), u01.clone(), t.clone(), w.clone()]).unwrap();
    assert_order(&g, 29_120, "Sz(8)");
    // 2-transitive on the ovoid
    let st = g.point_stabilizer(ov.infinity());
    assert_order(&st, 448, "point stabilizer of Sz(8)");
    assert_eq!(st.orbit(0).len(), 64);

    // H = Z_2^3 : Z_7, the center of the Sylow 2-subgroup extended by the
    // torus; K = D_14, the torus inverted by the flip.
    let h = PermGroup::new(
        65,
        vec![
            ov.unipotent(0, 1),
            ov.unipotent(0, kappa),
            ov.unipotent(0, ov.field.mul(kappa, kappa)),
            t.clone(),
        ],
    )
    .unwrap();
    assert_order(&h, 56, "2^3:7 in Sz(8)");
    let k = PermGroup::new(65, vec![t.clone(), w.clone()]).unwrap();
    assert_order(&k, 14, "D_14 in Sz(8)");

    write_group(
        dir,
        "sz8_g.txt",
        &g,
        &[
            "Sz(8) on its 65-point ovoid over F_8 (points 1..64 are (a,b), point 65 is infinity)",
            "order 29120 = 65 * 448",
        ],
    );
    write_group(
        dir,
        "sz8_h.txt",
        &h,
        &["Z_2^3:Z_7: the u(0,b) translations extended by the torus; order 56"],
    );
    write_group(
        dir,
        "sz8_k.txt",
        &k,
        &["D_14: the order-7 torus inverted by the ovoid flip; order 14"],
    );
}
