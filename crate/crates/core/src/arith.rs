//! Small integer helpers: primality, prime-power decomposition, modular powers.

use num_bigint::BigInt;
use num_traits::One;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Decomposes `q = p^e` with `p` prime and `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0 || d.saturating_mul(*d) > q)?;
    let p = if q % p == 0 { p } else { q };
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, e))
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn big_pow(base: i64, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    let b = BigInt::from(base);
    for _ in 0..exp {
        acc *= &b;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(1021), Some((1021, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn divisors() {
        assert_eq!(prime_divisors(15), vec![3, 5]);
        assert_eq!(prime_divisors(80), vec![2, 5]);
        assert_eq!(prime_divisors(1023), vec![3, 11, 31]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn modpow() {
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(pow_mod(3, 0, 7), 1);
        assert_eq!(big_pow(-3, 3), BigInt::from(-27));
    }
}
