use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; these twelve bases decide every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
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

/// Seeded stream of distinct primes in `[2^61, 2^62)`.
#[derive(Debug, Clone)]
pub struct PrimeSource {
    rng: ChaCha8Rng,
    issued: Vec<u64>,
}

impl PrimeSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            issued: Vec::new(),
        }
    }

    pub fn next_prime(&mut self) -> u64 {
        loop {
            let candidate = (self.rng.random::<u64>() >> 3) | (1 << 61) | 1;
            if is_prime_u64(candidate) && !self.issued.contains(&candidate) {
                self.issued.push(candidate);
                return candidate;
            }
        }
    }

    pub fn take(&mut self, count: usize) -> Vec<u64> {
        (0..count).map(|_| self.next_prime()).collect()
    }
}

/// Rank of a dense row-major matrix over GF(p). Entries must be reduced.
pub fn rank_mod_p(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = pow_mod(a[rank * cols + col], p - 2, p);
        for j in col..cols {
            a[rank * cols + j] = mul_mod(a[rank * cols + j], inv, p);
        }
        for r in rank + 1..rows {
            let f = a[r * cols + col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let t = mul_mod(f, a[rank * cols + j], p);
                let v = a[r * cols + j];
                a[r * cols + j] = if v >= t { v - t } else { v + p - t };
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
    }

    #[test]
    fn primes_are_large_distinct_and_seeded() {
        let a = PrimeSource::new(7).take(3);
        let b = PrimeSource::new(7).take(3);
        assert_eq!(a, b);
        assert!(a.iter().all(|&p| p > 1 << 60 && is_prime_u64(p)));
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn modular_rank() {
        let p = 1_000_000_007;
        // [[1,2],[2,4]] has rank 1; [[1,1],[1, p+1 ≡ 1]] also rank 1 mod p.
        assert_eq!(rank_mod_p(vec![1, 2, 2, 4], 2, 2, p), 1);
        assert_eq!(rank_mod_p(vec![0, 1, 1, 0, 1, 1], 3, 2, p), 2);
    }
}
