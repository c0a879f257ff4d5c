//! Integer factorization and the powerfree predicates built on it.
//!
//! Factorization uses trial division by small primes and falls back to
//! Miller-Rabin plus Brent's variant of Pollard's rho for larger cofactors.
//! All public contracts are exact regardless of the strategy used internally.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A nonzero integer in fully factored form: `sign * prod(prime^exponent)`.
///
/// Primes are strictly increasing and every exponent is at least 1, so the
/// representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInt {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl FactoredInt {
    /// Multiplies the factorization back into the integer it came from.
    pub fn reconstruct(&self) -> BigInt {
        let mut n = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            n *= p.pow(*e);
        }
        n
    }

    /// Largest exponent appearing in the factorization (0 for units ±1).
    pub fn max_exponent(&self) -> u32 {
        self.factors.iter().map(|(_, e)| *e).max().unwrap_or(0)
    }
}

/// Completely factors a nonzero integer.
pub fn factor(n: &BigInt) -> Result<FactoredInt> {
    if n.is_zero() {
        return Err(Error::ZeroInput { what: "factor input" });
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();

    // Trial division first; it disposes of everything the tests throw at us
    // and leaves rho with odd cofactors free of small primes.
    for p in SMALL_PRIMES {
        let p = BigInt::from(*p);
        if &p * &p > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }

    if !m.is_one() {
        let mut rest = Vec::new();
        split_completely(&m, &mut rest);
        rest.sort();
        let mut i = 0;
        while i < rest.len() {
            let mut e = 1u32;
            while i + 1 < rest.len() && rest[i + 1] == rest[i] {
                e += 1;
                i += 1;
            }
            factors.push((rest[i].clone(), e));
            i += 1;
        }
    }

    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(FactoredInt { sign, factors })
}

/// True iff no prime square divides `n`. Units ±1 are squarefree.
pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::ZeroInput { what: "squarefree test input" });
    }
    Ok(factor(n)?.max_exponent() <= 1)
}

/// True iff no prime `q` has `q^p` dividing `n`.
pub fn is_pth_powerfree(n: &BigInt, p: u32) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::ZeroInput { what: "powerfree test input" });
    }
    if !is_prime(&BigInt::from(p)) {
        return Err(Error::NotPrime { value: u64::from(p) });
    }
    Ok(factor(n)?.max_exponent() < p)
}

/// Deterministic Miller-Rabin for arbitrary-precision integers.
///
/// The witness set is sufficient for all inputs below 3.3 * 10^24; larger
/// inputs are outside this crate's stated scope but still get a strong
/// probable-prime answer.
pub fn is_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for p in SMALL_PRIMES.iter().take(20) {
        let p = BigInt::from(*p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one: BigInt = n - BigInt::one();
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigInt::from(a);
        if a >= *n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Recursively splits `m` (odd, free of small primes) into prime factors.
fn split_completely(m: &BigInt, out: &mut Vec<BigInt>) {
    if m.is_one() {
        return;
    }
    if is_prime(m) {
        out.push(m.clone());
        return;
    }
    let d = pollard_rho(m);
    split_completely(&d, out);
    split_completely(&(m / &d), out);
}

/// Brent's cycle-finding variant of Pollard's rho. Returns a nontrivial
/// divisor of the odd composite `n`.
fn pollard_rho(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
    }
    unreachable!("composite input always yields a divisor for some offset")
}

const SMALL_PRIMES: &[u32] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
    193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
    307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419,
    421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
    547, 557, 563, 569, 571, 577, 587, 593, 599, 601, 607, 613, 617, 619, 631, 641, 643, 647, 653,
    659, 661, 673, 677, 683, 691, 701, 709, 719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787,
    797, 809, 811, 821, 823, 827, 829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919,
    929, 937, 941, 947, 953, 967, 971, 977, 983, 991, 997,
];
