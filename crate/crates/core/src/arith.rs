//! Exact integer arithmetic underlying every decision procedure.
//!
//! All inputs are positive 64-bit integers; multiplication is checked and
//! overflow is reported, never wrapped.

use crate::{Error, Limits, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    debug_assert!(a >= 1 && b >= 1);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(Error::Overflow { op: "lcm", a, b })
}

/// "Divide as much as you can": `a / gcd(a, c)`.
pub fn dotdiv(a: u64, c: u64) -> u64 {
    a / gcd(a, c)
}

/// Product of the distinct prime divisors of `a`; `rad(1) = 1`.
pub fn rad(a: u64) -> u64 {
    factorize(a).into_iter().map(|(p, _)| p).product()
}

/// Sorted prime factorization by trial division; empty for `a = 1`.
pub fn factorize(mut a: u64) -> Vec<(u64, u32)> {
    debug_assert!(a >= 1);
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= a {
        if a.is_multiple_of(p) {
            let mut e = 0;
            while a.is_multiple_of(p) {
                a /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if a > 1 {
        out.push((a, 1));
    }
    out
}

pub fn is_prime(a: u64) -> bool {
    a > 1 && factorize(a) == [(a, 1)]
}

/// All positive divisors of `a`, ascending.
pub fn divisors(a: u64, limits: &Limits) -> Result<Vec<u64>> {
    let factors = factorize(a);
    let count: u128 = factors.iter().map(|&(_, e)| (e as u128) + 1).product();
    if count > limits.max_divisors as u128 {
        return Err(Error::ResourceExceeded {
            what: "divisor enumeration",
            required: count,
            limit: limits.max_divisors as u128,
            unit: "divisors",
        });
    }
    let mut divs = vec![1u64];
    for (p, e) in factors {
        let prev = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(6, 20), 2);
        assert_eq!(gcd(7, 7), 7);
        assert_eq!(gcd(20, 15), 5);
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm(2, 3).unwrap(), 6);
        assert_eq!(lcm(6, 20).unwrap(), 60);
        assert_eq!(lcm(17, 1).unwrap(), 17);
    }

    #[test]
    fn lcm_overflow_is_reported() {
        let big = u64::MAX - 58; // prime
        assert!(matches!(lcm(big, 3), Err(Error::Overflow { .. })));
    }

    #[test]
    fn dotdiv_examples() {
        assert_eq!(dotdiv(6, 2), 3);
        assert_eq!(dotdiv(6, 12), 1); // a | c
        assert_eq!(dotdiv(20, 15), 4);
    }

    #[test]
    fn rad_examples() {
        assert_eq!(rad(12), 6);
        assert_eq!(rad(30), 30);
        assert_eq!(rad(9), 3);
        assert_eq!(rad(1), 1);
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(20), vec![(2, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(30), vec![(2, 1), (3, 1), (5, 1)]);
    }

    #[test]
    fn divisors_examples() {
        let limits = Limits::default();
        assert_eq!(divisors(6, &limits).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1, &limits).unwrap(), vec![1]);
        assert_eq!(
            divisors(60, &limits).unwrap(),
            vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]
        );
    }

    #[test]
    fn divisor_cap_is_enforced() {
        let limits = Limits {
            max_divisors: 4,
            ..Limits::default()
        };
        assert!(matches!(
            divisors(60, &limits),
            Err(Error::ResourceExceeded { .. })
        ));
    }

    proptest! {
        #[test]
        fn dotdiv_self_inverse(a in 1u64..5000, c in 1u64..5000) {
            prop_assert_eq!(dotdiv(a, dotdiv(a, c)), gcd(a, c));
        }

        #[test]
        fn dotdiv_composes(a in 1u64..2000, b in 1u64..2000, c in 1u64..2000) {
            prop_assert_eq!(dotdiv(dotdiv(a, b), c), dotdiv(a, b * c));
        }

        #[test]
        fn dotdiv_coprime_residues(a in 1u64..5000, c in 1u64..5000) {
            prop_assert_eq!(gcd(dotdiv(a, c), dotdiv(c, a)), 1);
        }

        #[test]
        fn dotdiv_one_iff_divides(a in 1u64..5000, c in 1u64..5000) {
            prop_assert_eq!(dotdiv(a, c) == 1, c % a == 0);
        }

        #[test]
        fn rad_idempotent(a in 1u64..100_000) {
            prop_assert_eq!(rad(rad(a)), rad(a));
        }

        #[test]
        fn rad_of_product(a in 1u64..1000, b in 1u64..1000) {
            prop_assert_eq!(rad(a * b), rad(rad(a) * rad(b)));
        }

        // gcd(a, c) = gcd(a, gcd(c, L)) whenever a | L; this justifies
        // restricting maximal-c candidates to the divisors of lcm(C).
        #[test]
        fn gcd_through_multiple(a in 1u64..500, m in 1u64..500, c in 1u64..100_000) {
            let l = a * m;
            prop_assert_eq!(gcd(a, c), gcd(a, gcd(c, l)));
        }
    }
}
