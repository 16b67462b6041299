//! Small-integer number theory used throughout the crate.

pub use num_integer::{gcd, lcm};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Exponent `a` with `p^a` exactly dividing `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut a = 0;
    while n % p == 0 {
        n /= p;
        a += 1;
    }
    a
}

/// `Some(k)` when `n == p^k`.
pub fn prime_power_exponent(mut n: u64, p: u64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_round_trips() {
        for n in 1..500u64 {
            let back: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            assert!(factorize(n).iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn phi_matches_counting() {
        for n in 1..200u64 {
            let count = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n), count, "n={n}");
        }
    }

    #[test]
    fn divisors_sorted_and_complete() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(as_prime_power(16), Some((2, 4)));
        assert_eq!(as_prime_power(12), None);
        assert_eq!(as_prime_power(1), None);
        assert_eq!(prime_power_exponent(1, 3), Some(0));
        assert_eq!(prime_power_exponent(27, 3), Some(3));
        assert_eq!(prime_power_exponent(18, 3), None);
    }
}
