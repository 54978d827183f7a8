use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{factor_distinct, NumthError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionKind {
    None,
    /// a^f = 2^6, the single sporadic exception.
    AfIs64,
    /// f = 2 with a+1 a power of two (a = 2^t - 1).
    F2Mersenne,
}

/// Primitive prime divisors of a^f - 1: primes dividing a^f - 1 but no
/// a^e - 1 for 1 <= e < f.
#[derive(Debug, Clone)]
pub struct PpdResult {
    pub a: u64,
    pub f: u32,
    pub primes: Vec<BigUint>,
    pub is_exception: bool,
    pub exception_kind: ExceptionKind,
}

/// Exact computation: strip from a^f - 1 every prime shared with some
/// a^e - 1 for a proper divisor e of f (sufficient: the multiplicative
/// order of a modulo a prime divides f), then factor what is left.
pub fn primitive_prime_divisors(a: u64, f: u32) -> Result<PpdResult, NumthError> {
    if a < 2 || a > 1 << 16 || f < 1 || f > 64 {
        return Err(NumthError::BoundsExceeded(format!("a={a}, f={f}")));
    }
    let a_big = BigUint::from(a);
    let mut m = a_big.pow(f) - BigUint::one();
    for e in 1..f {
        if f % e != 0 {
            continue;
        }
        let g = a_big.pow(e) - BigUint::one();
        loop {
            let d = m.gcd(&g);
            if d.is_one() {
                break;
            }
            m /= &d;
        }
    }
    let primes = factor_distinct(&m)?;
    let empty = primes.is_empty();
    let kind = if empty && f > 1 {
        if a_big.pow(f) == BigUint::from(64u32) {
            ExceptionKind::AfIs64
        } else if f == 2 && (a + 1).is_power_of_two() {
            ExceptionKind::F2Mersenne
        } else {
            return Err(NumthError::Contradiction(format!(
                "no primitive prime for ({a},{f}) outside the known exceptions"
            )));
        }
    } else {
        ExceptionKind::None
    };
    Ok(PpdResult {
        a,
        f,
        primes,
        is_exception: kind != ExceptionKind::None,
        exception_kind: kind,
    })
}

/// For each primitive prime r of a^f - 1, verifies that
/// r | a^f2 - 1 if and only if f | f2, and returns that truth value.
/// A disagreement between the two sides is an arithmetic contradiction.
pub fn ppd_divisibility(a: u64, f: u32, f2: u32) -> Result<bool, NumthError> {
    let ppd = primitive_prime_divisors(a, f)?;
    if ppd.primes.is_empty() {
        return Err(NumthError::NoPrimitivePrime(a, f));
    }
    if f2 < 1 || f2 > 64 {
        return Err(NumthError::BoundsExceeded(format!("f2={f2}")));
    }
    let expected = f2 % f == 0;
    let target = BigUint::from(a).pow(f2) - BigUint::one();
    for r in &ppd.primes {
        let divides = (&target % r).is_zero();
        if divides != expected {
            return Err(NumthError::Contradiction(format!(
                "r={r} divides a^{f2}-1: {divides}, but f|f2 is {expected}"
            )));
        }
    }
    Ok(expected)
}

/// Every primitive prime r of a^f - 1 satisfies f | r - 1 (a has order f
/// modulo r). Vacuously true when no primitive prime exists.
pub fn ppd_order_property(a: u64, f: u32) -> Result<bool, NumthError> {
    let ppd = primitive_prime_divisors(a, f)?;
    for r in &ppd.primes {
        let rm1 = r - BigUint::one();
        if !(&rm1 % BigUint::from(f)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptions() {
        let r = primitive_prime_divisors(2, 6).unwrap();
        assert!(r.primes.is_empty());
        assert_eq!(r.exception_kind, ExceptionKind::AfIs64);

        let r = primitive_prime_divisors(7, 2).unwrap();
        assert!(r.primes.is_empty());
        assert_eq!(r.exception_kind, ExceptionKind::F2Mersenne);

        let r = primitive_prime_divisors(3, 2).unwrap();
        assert_eq!(r.exception_kind, ExceptionKind::F2Mersenne);
    }

    #[test]
    fn small_values() {
        // 2^4 - 1 = 15 = 3 * 5, and 5 divides no smaller 2^e - 1
        let r = primitive_prime_divisors(2, 4).unwrap();
        assert_eq!(r.primes, vec![BigUint::from(5u32)]);
        // 3^5 - 1 = 242 = 2 * 11^2; 11 is primitive
        let r = primitive_prime_divisors(3, 5).unwrap();
        assert_eq!(r.primes, vec![BigUint::from(11u32)]);
        // f = 1: all primes of a - 1
        let r = primitive_prime_divisors(2, 1).unwrap();
        assert!(r.primes.is_empty());
        assert!(!r.is_exception);
    }

    #[test]
    fn divisibility_rule() {
        assert!(ppd_divisibility(2, 3, 6).unwrap()); // 7 | 63
        assert!(!ppd_divisibility(2, 3, 4).unwrap()); // 7 does not divide 15
        assert!(ppd_divisibility(2, 4, 8).unwrap());
        assert!(matches!(
            ppd_divisibility(2, 6, 12),
            Err(NumthError::NoPrimitivePrime(2, 6))
        ));
    }

    #[test]
    fn order_property() {
        assert!(ppd_order_property(2, 4).unwrap()); // 4 | 5-1
        assert!(ppd_order_property(2, 6).unwrap()); // vacuous
        assert!(ppd_order_property(3, 5).unwrap()); // 5 | 11-1
    }

    #[test]
    fn exhaustive_scan_matches_zsigmondy() {
        for a in 2u64..=10 {
            for f in 2u32..=12 {
                let r = primitive_prime_divisors(a, f).unwrap();
                let expect_empty = (a == 2 && f == 6) || (f == 2 && (a + 1).is_power_of_two());
                assert_eq!(
                    r.primes.is_empty(),
                    expect_empty,
                    "zsigmondy mismatch at ({a},{f})"
                );
                assert_eq!(r.is_exception, expect_empty);
                // definition check: each reported prime divides a^f-1 and
                // no a^e-1 below
                let af = BigUint::from(a).pow(f) - BigUint::one();
                for p in &r.primes {
                    assert!((&af % p).is_zero());
                    for e in 1..f {
                        let ae = BigUint::from(a).pow(e) - BigUint::one();
                        assert!(!(&ae % p).is_zero(), "({a},{f}): {p} divides a^{e}-1");
                    }
                }
            }
        }
    }
}
