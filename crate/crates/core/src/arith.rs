//! Integer number theory on `u64`: gcd/lcm, primality, factorization and
//! multiplicative orders.
//!
//! Orders such as `q^m - 1` must be exact, so everything here is checked
//! arithmetic; `mul_mod` widens to `u128`.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's variant of Pollard rho; `n` is odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5, 7, 11, 13] {
        while rest.is_multiple_of(p) {
            primes.push(p);
            rest /= p;
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            primes.push(m);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, k) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..k {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, k)| k == 1)
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    k
}

/// Writes `q` as `p^e` with `p` prime.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, e)] => Ok((*p, *e)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

/// Least `h >= 1` with `q^h = 1 (mod n)`.
pub fn mult_order(q: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Degenerate("modulus must be positive".into()));
    }
    let g = gcd(n, q);
    if g != 1 {
        return Err(Error::NotCoprime { n, q, gcd: g });
    }
    if n == 1 {
        return Ok(1);
    }
    // The order divides phi(n); descend from phi(n).
    let phi = factorize(n)
        .iter()
        .fold(1u64, |acc, &(p, k)| acc * (p - 1) * p.pow(k - 1));
    let mut ord = phi;
    for (p, _) in factorize(phi) {
        while ord % p == 0 && pow_mod(q, ord / p, n) == 1 {
            ord /= p;
        }
    }
    Ok(ord)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order(3, 8), Ok(2));
        assert_eq!(mult_order(4, 5), Ok(2));
        assert_eq!(mult_order(3, 13), Ok(3));
        assert_eq!(mult_order(7, 1), Ok(1));
        assert!(matches!(mult_order(3, 6), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn mult_order_matches_scan() {
        for q in 2..30u64 {
            for n in 1..200u64 {
                if gcd(n, q) != 1 {
                    continue;
                }
                let scan = (1..=n).find(|&h| pow_mod(q, h, n) == 1 % n).unwrap();
                assert_eq!(mult_order(q, n).unwrap(), scan, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn factorize_reconstructs() {
        for n in [
            1u64,
            2,
            12,
            80,
            728,
            6560,
            65535,
            4294967295,
            18446744073709551615,
        ] {
            let f = factorize(n);
            assert_eq!(f.iter().fold(1u64, |a, &(p, k)| a * p.pow(k)), n);
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
        }
    }

    #[test]
    fn primes_and_powers() {
        assert!(is_prime(65537));
        assert!(!is_prime(65535));
        assert_eq!(prime_power(9), Ok((3, 2)));
        assert_eq!(prime_power(6), Err(Error::NotPrimePower(6)));
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
