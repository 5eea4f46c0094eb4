//! The sequence of primes `p_1 < p_2 < ...` adjoined as square roots.

use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeTableError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("primes must be strictly increasing ({0} follows {1})")]
    NotIncreasing(u64, u64),
}

/// The map `i -> p_i` for `i >= 1`.
///
/// A table starts from an explicit prefix (by default the first primes
/// `2, 3, 5, 7, ...`) and continues past the prefix with the consecutive
/// primes following its last entry, so every index resolves and the
/// sequence stays strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    prefix: Arc<[u64]>,
}

const DEFAULT_PREFIX_LEN: usize = 64;

impl Default for PrimeTable {
    fn default() -> Self {
        let mut primes = Vec::with_capacity(DEFAULT_PREFIX_LEN);
        let mut candidate = 1;
        while primes.len() < DEFAULT_PREFIX_LEN {
            candidate = next_prime(candidate);
            primes.push(candidate);
        }
        PrimeTable {
            prefix: primes.into(),
        }
    }
}

impl PrimeTable {
    /// A table whose first entries are `primes`.
    pub fn with_prefix(primes: &[u64]) -> Result<Self, PrimeTableError> {
        for (k, &p) in primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(PrimeTableError::NotPrime(p));
            }
            if k > 0 && primes[k - 1] >= p {
                return Err(PrimeTableError::NotIncreasing(p, primes[k - 1]));
            }
        }
        if primes.is_empty() {
            return Ok(Self::default());
        }
        Ok(PrimeTable {
            prefix: primes.into(),
        })
    }

    /// `p_i`. Index 0 is not part of the sequence and panics.
    pub fn prime(&self, i: u32) -> u64 {
        assert!(i >= 1, "prime indices start at 1");
        let i = i as usize;
        if let Some(&p) = self.prefix.get(i - 1) {
            return p;
        }
        let mut p = *self.prefix.last().expect("prefix is never empty");
        for _ in self.prefix.len()..i {
            p = next_prime(p);
        }
        p
    }

    pub fn primes(&self, count: u32) -> Vec<u64> {
        (1..=count).map(|i| self.prime(i)).collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn next_prime(after: u64) -> u64 {
    let mut c = after + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}
