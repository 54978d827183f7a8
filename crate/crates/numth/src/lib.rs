//! Number theory support: Zsigmondy primitive prime divisors, p-parts,
//! small finite fields and the groups they induce on the projective line.

pub mod field;
pub mod projline;
pub mod zsigmondy;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

pub use field::Gf;
pub use projline::{pgl2_group, pgl2_order, psl2_group, psl2_order, 
    m10_generators, pgammal2_generators, pgl2_generators, psl2_generators, ProjLine,
};
pub use zsigmondy::{
    ppd_divisibility, ppd_order_property, primitive_prime_divisors, ExceptionKind, PpdResult,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumthError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("arguments exceed configured bounds: {0}")]
    BoundsExceeded(String),
    #[error("no primitive prime divisor exists for ({0}, {1})")]
    NoPrimitivePrime(u64, u32),
    #[error("internal arithmetic contradiction: {0}")]
    Contradiction(String),
}

/// Largest power of p dividing n.
pub fn p_part(n: u128, p: u64) -> Result<u128, NumthError> {
    if !permgroup::is_prime_u64(p) {
        return Err(NumthError::NotPrime(p));
    }
    let mut part: u128 = 1;
    let mut rest = n;
    while rest % p as u128 == 0 {
        rest /= p as u128;
        part *= p as u128;
    }
    Ok(part)
}

/// Writes n = p^f with p prime, or errors.
pub fn prime_power_decompose(q: u64) -> Result<(u64, u32), NumthError> {
    if q < 2 {
        return Err(NumthError::NotPrimePower(q));
    }
    let mut p = 2u64;
    loop {
        if q % p == 0 {
            let mut f = 0u32;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                f += 1;
            }
            return if rest == 1 {
                Ok((p, f))
            } else {
                Err(NumthError::NotPrimePower(q))
            };
        }
        if p * p > q {
            return Ok((q, 1));
        }
        p += 1;
    }
}

/// Distinct prime factors of a BigUint by trial division with a small
/// sieve and Pollard rho for the cofactor, with an iteration cap.
pub fn factor_distinct(n: &BigUint) -> Result<Vec<BigUint>, NumthError> {
    let mut out: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() || rest.is_one() {
        return Ok(out);
    }
    for p in small_primes_up_to(1_000_000) {
        let p_big = BigUint::from(p);
        if (&rest % &p_big).is_zero() {
            out.push(p_big.clone());
            while (&rest % &p_big).is_zero() {
                rest /= &p_big;
            }
        }
        if rest.is_one() {
            return Ok(out);
        }
        if BigUint::from(p) * BigUint::from(p) > rest {
            break;
        }
    }
    if !rest.is_one() {
        let mut stack = vec![rest];
        let mut budget = 200u32;
        while let Some(m) = stack.pop() {
            if is_probable_prime(&m) {
                if !out.contains(&m) {
                    out.push(m);
                }
                continue;
            }
            budget = budget
                .checked_sub(1)
                .ok_or_else(|| NumthError::BoundsExceeded("factorization budget".into()))?;
            let d = pollard_rho(&m)
                .ok_or_else(|| NumthError::BoundsExceeded("pollard rho stalled".into()))?;
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    out.sort();
    Ok(out)
}

fn small_primes_up_to(n: usize) -> Vec<u64> {
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    use num_traits::ToPrimitive;
    if let Some(v) = n.to_u64() {
        return permgroup::is_prime_u64(v);
    }
    // Miller-Rabin with fixed bases; inputs here are cofactors of a^f - 1
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if (n % &two).is_zero() {
        return false;
    }
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a_big = BigUint::from(a);
        if &a_big >= n {
            continue;
        }
        let mut x = a_big.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> Option<BigUint> {
    use num_integer::Integer;
    let one = BigUint::one();
    for c in 1u64..40 {
        let c_big = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c_big) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        let mut steps = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            steps += 1;
            if steps > 2_000_000 {
                break;
            }
        }
        if d != one && &d != n {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_parts() {
        assert_eq!(p_part(5040, 7).unwrap(), 7);
        assert_eq!(p_part(64, 2).unwrap(), 64);
        assert_eq!(p_part(15, 2).unwrap(), 1);
        assert!(p_part(10, 4).is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_decompose(8).unwrap(), (2, 3));
        assert_eq!(prime_power_decompose(19).unwrap(), (19, 1));
        assert_eq!(prime_power_decompose(49).unwrap(), (7, 2));
        assert!(prime_power_decompose(12).is_err());
        assert!(prime_power_decompose(1).is_err());
    }

    #[test]
    fn factoring() {
        let f = factor_distinct(&BigUint::from(5040u32)).unwrap();
        let expect: Vec<BigUint> = [2u32, 3, 5, 7].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(f, expect);
    }
}
