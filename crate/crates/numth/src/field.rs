use crate::NumthError;

/// A small finite field GF(p^f), represented as polynomials over F_p
/// modulo the lexicographically least monic irreducible polynomial of
/// degree f (tuples (a_{f-1}, .., a_0) of non-leading coefficients,
/// ordered lexicographically). Elements are indexed 0..q-1 with index
/// sum(c_i * p^i) standing for sum(c_i * alpha^i), so the data layout is
/// reproducible bit-exactly.
#[derive(Debug, Clone)]
pub struct Gf {
    p: u64,
    f: u32,
    q: u64,
    /// non-leading coefficients a_0 .. a_{f-1} of the modulus
    modulus: Vec<u64>,
}

impl Gf {
    pub fn new(q: u64) -> Result<Gf, NumthError> {
        let (p, f) = crate::prime_power_decompose(q)?;
        if q > 1 << 16 {
            return Err(NumthError::BoundsExceeded(format!("q={q}")));
        }
        let modulus = if f == 1 {
            vec![0]
        } else {
            least_irreducible(p, f)
        };
        Ok(Gf { p, f, q, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut d = vec![0; self.f as usize];
        let mut v = x;
        for slot in d.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        let mut v = 0;
        for &c in d.iter().rev() {
            v = v * self.p + c;
        }
        v
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let (dx, dy) = (self.digits(x), self.digits(y));
        let sum: Vec<u64> = dx
            .iter()
            .zip(dy.iter())
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, x: u64) -> u64 {
        let d: Vec<u64> = self
            .digits(x)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.undigits(&d)
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let (dx, dy) = (self.digits(x), self.digits(y));
        let f = self.f as usize;
        let mut prod = vec![0u64; 2 * f];
        for (i, &a) in dx.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in dy.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        // reduce modulo x^f = -(a_{f-1} x^{f-1} + .. + a_0)
        for k in (f..2 * f).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = k - f + i;
                prod[idx] = (prod[idx] + c * ((self.p - m) % self.p)) % self.p;
            }
        }
        self.undigits(&prod[..f])
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: u64) -> u64 {
        assert!(x != 0, "zero has no inverse");
        self.pow(x, self.q - 2)
    }

    pub fn frobenius(&self, x: u64) -> u64 {
        self.pow(x, self.p)
    }

    /// Least element (by index) of multiplicative order q - 1.
    pub fn generator(&self) -> u64 {
        let factors: Vec<u64> = {
            let mut fs = Vec::new();
            let mut rest = self.q - 1;
            let mut d = 2;
            while rest > 1 {
                if rest % d == 0 {
                    fs.push(d);
                    while rest % d == 0 {
                        rest /= d;
                    }
                }
                d += 1;
                if d * d > rest && rest > 1 {
                    fs.push(rest);
                    break;
                }
            }
            fs
        };
        'candidate: for g in 2..self.q {
            for &r in &factors {
                if self.pow(g, (self.q - 1) / r) == 1 {
                    continue 'candidate;
                }
            }
            return g;
        }
        1 // q = 2
    }

    pub fn element_order(&self, x: u64) -> u64 {
        assert!(x != 0);
        let mut o = 1u64;
        let mut v = x;
        while v != 1 {
            v = self.mul(v, x);
            o += 1;
        }
        o
    }
}

/// Lexicographically least monic irreducible polynomial of degree f over
/// F_p, returned as its non-leading coefficients a_0..a_{f-1}.
fn least_irreducible(p: u64, f: u32) -> Vec<u64> {
    let count = p.pow(f);
    for t in 0..count {
        // base-p digits of t, little-endian, read as a_0 .. a_{f-1}; the
        // lex key (a_{f-1}, .., a_0) is then the big-endian reading of t,
        // so increasing t enumerates tuples in lexicographic order.
        let mut coeffs = vec![0u64; f as usize];
        let mut v = t;
        for slot in coeffs.iter_mut() {
            *slot = v % p;
            v /= p;
        }
        if is_irreducible(p, f, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

// polynomial helpers over F_p, little-endian coefficient vectors

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(mut num: Vec<u64>, den: &[u64], p: u64) -> Vec<u64> {
    let dd = den.len() - 1;
    let dlead_inv = mod_inv(den[dd], p);
    while num.len() > dd {
        let k = num.len() - 1;
        let c = num[k];
        if c != 0 {
            let scale = c * dlead_inv % p;
            for (i, &dc) in den.iter().enumerate() {
                let idx = k - dd + i;
                num[idx] = (num[idx] + p * p - scale * dc % p) % p;
            }
        }
        num.pop();
        poly_trim(&mut num);
        if num.is_empty() {
            break;
        }
    }
    num
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn is_irreducible(p: u64, f: u32, non_leading: &[u64]) -> bool {
    // full poly: non_leading[0..f] then leading 1
    let mut poly: Vec<u64> = non_leading.to_vec();
    poly.push(1);
    if f == 1 {
        return true;
    }
    if poly[0] == 0 {
        return false; // divisible by x
    }
    // trial division by all monic polynomials of degree 1..=f/2
    for d in 1..=(f / 2) {
        let count = p.pow(d);
        for t in 0..count {
            let mut den = vec![0u64; d as usize];
            let mut v = t;
            for slot in den.iter_mut() {
                *slot = v % p;
                v /= p;
            }
            den.push(1);
            let rem = poly_rem(poly.clone(), &den, p);
            if rem.is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf8_tables() {
        let f8 = Gf::new(8).unwrap();
        // least irreducible is x^3 + x + 1: coefficients (a_0,a_1,a_2) = (1,1,0)
        assert_eq!(f8.modulus_coeffs(), &[1, 1, 0]);
        // alpha = index 2; alpha^3 = alpha + 1 = index 3
        assert_eq!(f8.mul(2, f8.mul(2, 2)), 3);
        assert_eq!(f8.generator(), 2);
        for x in 1..8 {
            assert_eq!(f8.mul(x, f8.inv(x)), 1);
        }
    }

    #[test]
    fn gf9_field() {
        let f9 = Gf::new(9).unwrap();
        // least irreducible over F_3 of degree 2 is x^2 + 1
        assert_eq!(f9.modulus_coeffs(), &[1, 0]);
        assert_eq!(f9.element_order(f9.generator()), 8);
        for x in 1..9 {
            assert_eq!(f9.mul(x, f9.inv(x)), 1);
            assert_eq!(f9.add(x, f9.neg(x)), 0);
        }
        // frobenius is an automorphism
        for x in 0..9 {
            for y in 0..9 {
                assert_eq!(
                    f9.frobenius(f9.mul(x, y)),
                    f9.mul(f9.frobenius(x), f9.frobenius(y))
                );
                assert_eq!(
                    f9.frobenius(f9.add(x, y)),
                    f9.add(f9.frobenius(x), f9.frobenius(y))
                );
            }
        }
    }

    #[test]
    fn prime_field() {
        let f19 = Gf::new(19).unwrap();
        assert_eq!(f19.mul(7, 8), 56 % 19);
        assert_eq!(f19.add(15, 6), 2);
        assert_eq!(f19.element_order(f19.generator()), 18);
    }

    #[test]
    fn all_small_fields_are_fields() {
        for q in [4u64, 8, 9, 16, 25, 27, 32, 49, 64] {
            let gf = Gf::new(q).unwrap();
            assert_eq!(gf.element_order(gf.generator()), q - 1);
            for x in 1..q {
                assert_eq!(gf.mul(x, gf.inv(x)), 1, "inverse failed in GF({q})");
            }
        }
    }
}
