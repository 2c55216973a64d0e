//! Integer helpers: primality, factorization, modular powers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `Some((p, k))` when `n = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime.
pub fn invmod_prime(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Multiplicative order of a unit `a` modulo the prime `p`.
pub fn order_mod_prime(a: u64, p: u64) -> u64 {
    order_in_group(p - 1, |e| powmod(a, e, p) == 1)
}

/// Smallest divisor `k` of `group_order` with `is_one(k)`, given `is_one(group_order)`.
pub fn order_in_group(group_order: u64, is_one: impl Fn(u64) -> bool) -> u64 {
    let mut ord = group_order;
    for (r, _) in factorize(group_order) {
        while ord.is_multiple_of(r) && is_one(ord / r) {
            ord /= r;
        }
    }
    ord
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Splits `n` as `(n', v)` with `n = n'·ℓ^v` and `ℓ ∤ n'`.
pub fn split_ell(mut n: u64, ell: u64) -> (u64, u32) {
    let mut v = 0;
    while n.is_multiple_of(ell) {
        n /= ell;
        v += 1;
    }
    (n, v)
}

/// Least `d ≥ 1` with `m | ℓ^d − 1`; requires `gcd(m, ℓ) = 1`.
pub fn embedding_degree(ell: u64, m: u64) -> u32 {
    if m == 1 {
        return 1;
    }
    order_in_group_mod(ell % m, m) as u32
}

fn order_in_group_mod(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = mulmod(x, a, m);
        k += 1;
    }
    k
}
