//! Primality and Goldbach witnesses.

/// Sieve of Eratosthenes over `0..=limit`.
#[derive(Debug, Clone)]
pub struct Sieve {
    limit: u64,
    composite: Vec<bool>,
}

impl Sieve {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        if n >= 1 {
            composite[0] = true;
            composite[1] = true;
        }
        let mut p = 2usize;
        while p * p <= n {
            if !composite[p] {
                let mut m = p * p;
                while m <= n {
                    composite[m] = true;
                    m += p;
                }
            }
            p += 1;
        }
        Sieve { limit, composite }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Panics if `n` exceeds the sieve limit.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "{n} beyond sieve limit {}", self.limit);
        !self.composite[n as usize]
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| i as u64)
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest-p decomposition of an even number `e >= 4` into two primes
/// `p <= q` with `p + q = e`. `None` would be a Goldbach counterexample.
///
/// Panics if `e` is odd, below 4, or beyond the sieve limit.
pub fn goldbach_witness(e: u64, sieve: &Sieve) -> Option<(u64, u64)> {
    assert!(e >= 4 && e % 2 == 0, "need an even number >= 4, got {e}");
    (2..=e / 2)
        .find(|&p| sieve.is_prime(p) && sieve.is_prime(e - p))
        .map(|p| (p, e - p))
}

/// Same search using only trial division — an independent oracle for the
/// sieve-based path.
pub fn goldbach_witness_naive(e: u64) -> Option<(u64, u64)> {
    assert!(e >= 4 && e % 2 == 0, "need an even number >= 4, got {e}");
    (2..=e / 2)
        .find(|&p| is_prime(p) && is_prime(e - p))
        .map(|p| (p, e - p))
}

/// Checks every even number in `4..=max` and returns the first one without a
/// Goldbach witness, or `None` if the conjecture holds on the range.
pub fn goldbach_sweep(max: u64, sieve: &Sieve) -> Option<u64> {
    (4..=max)
        .step_by(2)
        .find(|&e| goldbach_witness(e, sieve).is_none())
}
