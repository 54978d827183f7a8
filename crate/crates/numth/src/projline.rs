use permgroup::{Perm, PermGroup};

use crate::field::Gf;
use crate::NumthError;

/// The projective line PG(1, q): points 0..q-1 are the field elements in
/// index order and point q is infinity.
pub struct ProjLine {
    field: Gf,
}

impl ProjLine {
    pub fn new(q: u64) -> Result<ProjLine, NumthError> {
        Ok(ProjLine {
            field: Gf::new(q)?,
        })
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.field.q() as usize + 1
    }

    fn infinity(&self) -> u32 {
        self.field.q() as u32
    }

    /// Builds the permutation of PG(1,q) from a map on field elements
    /// plus an explicit image for infinity.
    fn perm_from(&self, map: impl Fn(u64) -> u32, inf_to: u32) -> Perm {
        let q = self.field.q();
        let mut imgs: Vec<u32> = (0..q).map(&map).collect();
        imgs.push(inf_to);
        Perm::from_images(imgs).expect("projective maps are bijections")
    }

    /// x -> x + 1
    pub fn translation(&self) -> Perm {
        self.perm_from(|x| self.field.add(x, 1) as u32, self.infinity())
    }

    /// x -> c * x for a fixed scalar c
    pub fn scaling(&self, c: u64) -> Perm {
        self.perm_from(|x| self.field.mul(c, x) as u32, self.infinity())
    }

    /// x -> -1/x, swapping 0 and infinity
    pub fn inversion(&self) -> Perm {
        let q = self.field.q() as u32;
        self.perm_from(
            |x| {
                if x == 0 {
                    q
                } else {
                    self.field.neg(self.field.inv(x)) as u32
                }
            },
            0,
        )
    }

    /// x -> x^p (the field Frobenius), fixing 0 and infinity
    pub fn frobenius(&self) -> Perm {
        self.perm_from(|x| self.field.frobenius(x) as u32, self.infinity())
    }

    /// x -> c * x^p
    pub fn twisted_scaling(&self, c: u64) -> Perm {
        self.perm_from(
            |x| self.field.mul(c, self.field.frobenius(x)) as u32,
            self.infinity(),
        )
    }
}

/// Generators of PSL_2(q) on the q+1 points of the projective line:
/// x -> x+1, x -> g^2 x (g the least multiplicative generator), and
/// x -> -1/x. The generated group has order q(q^2-1)/gcd(2,q-1).
pub fn psl2_generators(q: u64) -> Result<Vec<Perm>, NumthError> {
    if q <= 3 {
        return Err(NumthError::BoundsExceeded(format!(
            "q={q} is below the projective-line range"
        )));
    }
    let line = ProjLine::new(q)?;
    let g = line.field().generator();
    let gsq = line.field().mul(g, g);
    Ok(vec![
        line.translation(),
        line.scaling(gsq),
        line.inversion(),
    ])
}

/// Generators of PGL_2(q): x -> x+1, x -> g x, x -> -1/x.
/// Order q(q^2-1); equal to PSL_2(q) in characteristic 2.
pub fn pgl2_generators(q: u64) -> Result<Vec<Perm>, NumthError> {
    if q <= 3 {
        return Err(NumthError::BoundsExceeded(format!(
            "q={q} is below the projective-line range"
        )));
    }
    let line = ProjLine::new(q)?;
    let g = line.field().generator();
    Ok(vec![line.translation(), line.scaling(g), line.inversion()])
}

/// Generators of PGammaL_2(q) = PGL_2(q) extended by the Frobenius.
pub fn pgammal2_generators(q: u64) -> Result<Vec<Perm>, NumthError> {
    let mut gens = pgl2_generators(q)?;
    let line = ProjLine::new(q)?;
    gens.push(line.frobenius());
    Ok(gens)
}

/// Generators of M_10 on the 10 points of PG(1,9): PSL_2(9) extended by
/// x -> g * x^3 (the product of a non-square scaling and the Frobenius,
/// whose square lies back in PSL_2(9)).
pub fn m10_generators() -> Vec<Perm> {
    let line = ProjLine::new(9).expect("9 is a prime power");
    let g = line.field().generator();
    let mut gens = psl2_generators(9).expect("q=9 in range");
    gens.push(line.twisted_scaling(g));
    gens
}

/// Expected |PSL_2(q)| = q(q^2-1)/gcd(2,q-1).
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 }
}

/// Expected |PGL_2(q)| = q(q^2-1).
pub fn pgl2_order(q: u64) -> u64 {
    q * (q * q - 1)
}

/// Convenience: the group object for PSL_2(q).
pub fn psl2_group(q: u64) -> Result<PermGroup, NumthError> {
    let gens = psl2_generators(q)?;
    Ok(PermGroup::new(q as usize + 1, gens).expect("equal degrees"))
}

pub fn pgl2_group(q: u64) -> Result<PermGroup, NumthError> {
    let gens = pgl2_generators(q)?;
    Ok(PermGroup::new(q as usize + 1, gens).expect("equal degrees"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use permgroup::Action;

    fn prime_powers_to(n: u64) -> Vec<u64> {
        (2..=n)
            .filter(|&q| crate::prime_power_decompose(q).is_ok())
            .collect()
    }

    #[test]
    fn psl2_orders_match_formula() {
        for q in prime_powers_to(64) {
            if q <= 3 {
                continue;
            }
            let grp = psl2_group(q).unwrap();
            assert_eq!(grp.order_u64(), Some(psl2_order(q)), "q={q}");
        }
    }

    #[test]
    fn psl2_examples() {
        assert_eq!(psl2_group(5).unwrap().order_u64(), Some(60));
        let g8 = psl2_group(8).unwrap();
        assert_eq!(g8.order_u64(), Some(504));
        let g19 = psl2_group(19).unwrap();
        assert_eq!(g19.order_u64(), Some(3420));
    }

    #[test]
    fn transitivity_degrees() {
        // odd q: 2-transitive; even q: 3-transitive
        let g9 = psl2_group(9).unwrap();
        let act = Action::natural(&g9);
        assert!(act.is_2_transitive());
        let st = g9.pointwise_stabilizer(&[0, 1]);
        assert!(st.orbit(2).len() < 8, "PSL_2(9) is not 3-transitive");

        let g8 = psl2_group(8).unwrap();
        let st2 = g8.pointwise_stabilizer(&[0, 1]);
        assert_eq!(st2.orbit(2).len(), 7, "PSL_2(8) is 3-transitive");
    }

    #[test]
    fn pgl2_orders_and_transitivity() {
        for q in [5u64, 7, 9, 11, 25] {
            let grp = pgl2_group(q).unwrap();
            assert_eq!(grp.order_u64(), Some(pgl2_order(q)), "q={q}");
            let st = grp.pointwise_stabilizer(&[0, 1]);
            assert_eq!(st.orbit(2).len() as u64, q - 1, "PGL_2({q}) is 3-transitive");
        }
    }

    #[test]
    fn pgammal2_9() {
        let g = PermGroup::new(10, pgammal2_generators(9).unwrap()).unwrap();
        assert_eq!(g.order_u64(), Some(1440));
    }

    #[test]
    fn m10_is_the_third_extension() {
        let m10 = PermGroup::new(10, m10_generators()).unwrap();
        assert_eq!(m10.order_u64(), Some(720));
        // sharply 3-transitive
        let st = m10.pointwise_stabilizer(&[0, 1, 2]);
        assert!(st.is_trivial());
        // distinct from PGL_2(9) and PSigmaL_2(9)
        let line = ProjLine::new(9).unwrap();
        let scaling = line.scaling(line.field().generator());
        assert!(!m10.contains(&scaling).unwrap());
        assert!(!m10.contains(&line.frobenius()).unwrap());
    }
}
