//! Prime generation, factorization and the valuation primitives.
//!
//! Everything downstream reduces to the canonical prime factorization
//! `n = prod p^e`. Two engines produce it:
//!
//! * [`SpfSieve`] — a linear smallest-prime-factor sieve; `O(log n)` per
//!   query for `n` up to the sieve limit, used for bulk scans.
//! * [`factor`] — standalone path for arbitrary 64-bit `n`: wheel trial
//!   division for small factors, then deterministic Miller-Rabin plus
//!   Pollard-Brent rho for the hard cofactor.
//!
//! All intermediate products run in 128-bit arithmetic; anything that would
//! leave the 64-bit range is an error, never a silent wrap.

use crate::error::{invalid, out_of_range, Error, Result};

/// Trial-division cutoff for the standalone [`factor`] path. Any cofactor
/// surviving division by all primes up to this bound goes to Miller-Rabin /
/// Pollard rho.
const TRIAL_BOUND: u64 = 4096;

/// Witnesses making the strong-probable-prime test deterministic for every
/// 64-bit integer (Sinclair's base set).
const MILLER_RABIN_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Gap sequence of the mod-30 wheel starting at 7 (7, 11, 13, 17, 19, 23, 29, 31, ...).
const WHEEL_GAPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
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

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Strong-probable-prime test to base `a` for odd `n > 2`.
fn sprp(n: u64, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let t = (n - 1).trailing_zeros();
    let u = (n - 1) >> t;
    let mut x = pow_mod(a, u, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..t {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test for any `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    MILLER_RABIN_BASES.iter().all(|&a| sprp(n, a))
}

/// Pollard-Brent rho: one attempt with polynomial x^2 + c, bounded iteration
/// budget. Returns a nontrivial factor of odd composite `n` on success.
fn pollard_brent(n: u64, c: u64, max_iters: u64) -> Option<u64> {
    let step = |x: u64| -> u64 { ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64 };
    let m: u64 = 128;
    let mut y: u64 = 2;
    let mut r: u64 = 1;
    let mut q: u64 = 1;
    let mut g: u64 = 1;
    let mut x: u64 = 0;
    let mut ys: u64 = 0;
    let mut spent: u64 = 0;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += m;
        }
        spent += r;
        if spent > max_iters && g == 1 {
            return None;
        }
        r *= 2;
    }
    if g == n {
        // The batched product absorbed the factor; replay one step at a time.
        loop {
            ys = step(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    if g == n {
        None
    } else {
        Some(g)
    }
}

fn rho_budget(n: u64) -> u64 {
    match 64 - n.leading_zeros() {
        0..=32 => 1 << 14,
        33..=40 => 1 << 16,
        41..=48 => 1 << 17,
        49..=56 => 1 << 19,
        _ => 1 << 21,
    }
}

/// Factor an odd `n > 1` with no prime factor <= `TRIAL_BOUND`, appending
/// prime factors (unsorted, with repetition) to `out`.
fn factor_hard(n: u64, out: &mut Vec<u64>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n) {
        out.push(n);
        return Ok(());
    }
    let budget = rho_budget(n);
    for c in 1..=24 {
        if let Some(d) = pollard_brent(n, c, budget) {
            factor_hard(d, out)?;
            factor_hard(n / d, out)?;
            return Ok(());
        }
    }
    Err(Error::Internal(format!(
        "rho retry schedule exhausted on {n}"
    )))
}

/// A canonical prime factorization: entries `(prime, exponent)` in strictly
/// increasing prime order, exponents >= 1. The empty sequence represents 1.
///
/// A `Factorization` may describe a number exceeding 64 bits (for instance
/// the lcm exponents of two large arguments); [`Factorization::value`]
/// reports `OutOfRange` in that case rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    entries: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1: the empty product.
    pub fn one() -> Self {
        Factorization::default()
    }

    /// Builds a factorization from raw entries, validating every invariant:
    /// primes strictly increasing and actually prime, exponents >= 1.
    pub fn from_entries(entries: Vec<(u64, u32)>) -> Result<Self> {
        for window in entries.windows(2) {
            if window[0].0 >= window[1].0 {
                return Err(invalid("factorization entries must be strictly increasing by prime"));
            }
        }
        for &(p, e) in &entries {
            if !is_prime(p) {
                return Err(invalid(format!("{p} is not prime")));
            }
            if e == 0 {
                return Err(invalid("zero exponents are never stored"));
            }
        }
        Ok(Factorization { entries })
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(u64, u32)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        Factorization { entries }
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// The p-adic valuation stored for `p` (0 when `p` is absent).
    pub fn valuation(&self, p: u64) -> u32 {
        match self.entries.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    /// Total number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u64 {
        self.entries.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Multiplies the factorization back out, in 128-bit arithmetic.
    /// `OutOfRange` if the represented number exceeds 64 bits.
    pub fn value(&self) -> Result<u64> {
        let mut acc: u128 = 1;
        for &(p, e) in &self.entries {
            for _ in 0..e {
                acc *= p as u128;
                if acc > u64::MAX as u128 {
                    return Err(out_of_range("factorization value exceeds 64 bits"));
                }
            }
        }
        Ok(acc as u64)
    }

    /// Merges two factorizations into `(prime, exponent_in_self, exponent_in_other)`
    /// triples over the union of their supports, in increasing prime order.
    pub fn merged<'a>(
        &'a self,
        other: &'a Factorization,
    ) -> impl Iterator<Item = (u64, u32, u32)> + 'a {
        MergeIter {
            left: &self.entries,
            right: &other.entries,
            i: 0,
            j: 0,
        }
    }
}

impl std::fmt::Display for Factorization {
    /// Product form: `2^3 * 3^2 * 5` (unit exponents unwritten), `1` for
    /// the empty product.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

struct MergeIter<'a> {
    left: &'a [(u64, u32)],
    right: &'a [(u64, u32)],
    i: usize,
    j: usize,
}

impl Iterator for MergeIter<'_> {
    type Item = (u64, u32, u32);

    fn next(&mut self) -> Option<(u64, u32, u32)> {
        match (self.left.get(self.i), self.right.get(self.j)) {
            (Some(&(p, e)), Some(&(q, f))) => {
                if p < q {
                    self.i += 1;
                    Some((p, e, 0))
                } else if q < p {
                    self.j += 1;
                    Some((q, 0, f))
                } else {
                    self.i += 1;
                    self.j += 1;
                    Some((p, e, f))
                }
            }
            (Some(&(p, e)), None) => {
                self.i += 1;
                Some((p, e, 0))
            }
            (None, Some(&(q, f))) => {
                self.j += 1;
                Some((q, 0, f))
            }
            (None, None) => None,
        }
    }
}

/// Factors any `n >= 1` without a sieve: strip 2, 3, 5, wheel trial division
/// up to the trial bound, then Miller-Rabin / Pollard rho on the survivor.
pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(invalid("0 has no prime factorization (valuations undefined)"));
    }
    let mut m = n;
    let mut entries: Vec<(u64, u32)> = Vec::new();
    for p in [2u64, 3, 5] {
        let mut e = 0u32;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            entries.push((p, e));
        }
    }
    let mut p: u64 = 7;
    let mut gap = 0usize;
    while p <= TRIAL_BOUND && p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            entries.push((p, e));
        }
        p += WHEEL_GAPS[gap];
        gap = (gap + 1) % WHEEL_GAPS.len();
    }
    if m > 1 {
        if p * p > m {
            // survivor is prime by exhaustion of trial divisors
            entries.push((m, 1));
        } else {
            let mut hard = Vec::new();
            factor_hard(m, &mut hard)?;
            hard.sort_unstable();
            let mut k = 0;
            while k < hard.len() {
                let q = hard[k];
                let mut e = 0u32;
                while k < hard.len() && hard[k] == q {
                    e += 1;
                    k += 1;
                }
                entries.push((q, e));
            }
        }
    }
    Ok(Factorization::from_sorted_unchecked(entries))
}

/// The p-adic valuation of `n`: the largest `k` with `p^k | n`.
pub fn valuation(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(invalid("valuation of 0 is undefined"));
    }
    if !is_prime(p) {
        return Err(invalid(format!("valuation base {p} is not prime")));
    }
    let mut m = n;
    let mut k = 0u32;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    Ok(k)
}

/// Total number of prime factors of `n` counted with multiplicity.
pub fn big_omega(n: u64) -> Result<u64> {
    Ok(factor(n)?.big_omega())
}

/// Smallest-prime-factor table for every integer in `[2, limit]`, built with
/// a linear sieve. Immutable after construction and safe to share across
/// threads; all queries are read-only.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    limit: u64,
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl SpfSieve {
    /// Largest supported limit: spf entries are stored as `u32`.
    pub const MAX_LIMIT: u64 = u32::MAX as u64;

    pub fn build(limit: u64) -> Result<SpfSieve> {
        if limit < 2 {
            return Err(invalid("sieve limit must be at least 2"));
        }
        if limit > Self::MAX_LIMIT {
            return Err(out_of_range(format!(
                "sieve limit {limit} exceeds the supported maximum {}",
                Self::MAX_LIMIT
            )));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || i * p > n {
                    break;
                }
                spf[i * p] = p as u32;
            }
        }
        Ok(SpfSieve { limit, spf, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes `<= limit`, increasing.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Smallest prime factor of `m`, or `None` for `m < 2` or `m > limit`.
    pub fn smallest_prime_factor(&self, m: u64) -> Option<u64> {
        if (2..=self.limit).contains(&m) {
            Some(self.spf[m as usize] as u64)
        } else {
            None
        }
    }

    pub fn is_prime(&self, m: u64) -> bool {
        self.smallest_prime_factor(m) == Some(m)
    }

    /// Factors `n <= limit` by repeated smallest-prime-factor division.
    pub fn factor(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(invalid("0 has no prime factorization (valuations undefined)"));
        }
        if n > self.limit {
            return Err(out_of_range(format!(
                "{n} exceeds the sieve limit {}",
                self.limit
            )));
        }
        let mut entries: Vec<(u64, u32)> = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m];
            let mut e = 0u32;
            while (m as u32).is_multiple_of(p) {
                m /= p as usize;
                e += 1;
            }
            entries.push((p as u64, e));
        }
        Ok(Factorization::from_sorted_unchecked(entries))
    }

    /// `Omega(m)` for every `m in [1, n]` in one linear pass; `table[m]`
    /// holds the count, `table[0]` is unused.
    pub fn omega_table(&self, n: u64) -> Result<Vec<u8>> {
        if n == 0 {
            return Err(invalid("omega table needs n >= 1"));
        }
        if n > self.limit {
            return Err(out_of_range(format!(
                "{n} exceeds the sieve limit {}",
                self.limit
            )));
        }
        let n = n as usize;
        let mut table = vec![0u8; n + 1];
        for m in 2..=n {
            table[m] = table[m / self.spf[m] as usize] + 1;
        }
        Ok(table)
    }
}

/// Factorization engine: a sieve for the bulk range plus the standalone
/// 64-bit path beyond it. Read-only after construction.
#[derive(Debug, Clone)]
pub struct Factorizer {
    sieve: SpfSieve,
}

impl Factorizer {
    /// Default sieve limit; roughly 40 MB of table, covering every bulk scan
    /// the crate performs out of the box. Override with [`Factorizer::with_limit`].
    pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000_000;

    pub fn new() -> Result<Factorizer> {
        Factorizer::with_limit(Self::DEFAULT_SIEVE_LIMIT)
    }

    pub fn with_limit(limit: u64) -> Result<Factorizer> {
        Ok(Factorizer {
            sieve: SpfSieve::build(limit)?,
        })
    }

    pub fn sieve(&self) -> &SpfSieve {
        &self.sieve
    }

    /// Canonical factorization of any `n >= 1`: sieve lookup when within the
    /// limit, otherwise trial division by sieved primes then the
    /// Miller-Rabin / Pollard rho path.
    pub fn factor(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return Err(invalid("0 has no prime factorization (valuations undefined)"));
        }
        if n <= self.sieve.limit {
            return self.sieve.factor(n);
        }
        let mut m = n;
        let mut entries: Vec<(u64, u32)> = Vec::new();
        for &p in &self.sieve.primes {
            let p = p as u64;
            if p > TRIAL_BOUND || p * p > m {
                break;
            }
            if m.is_multiple_of(p) {
                let mut e = 0u32;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                entries.push((p, e));
            }
        }
        if m > 1 {
            let mut hard = Vec::new();
            factor_hard(m, &mut hard)?;
            hard.sort_unstable();
            let mut k = 0;
            while k < hard.len() {
                let q = hard[k];
                let mut e = 0u32;
                while k < hard.len() && hard[k] == q {
                    e += 1;
                    k += 1;
                }
                // hard factors all exceed the trial primes stripped above
                entries.push((q, e));
            }
        }
        Ok(Factorization::from_sorted_unchecked(entries))
    }

    pub fn valuation(&self, n: u64, p: u64) -> Result<u32> {
        if p <= self.sieve.limit && !self.sieve.is_prime(p) {
            return Err(invalid(format!("valuation base {p} is not prime")));
        }
        valuation(n, p)
    }

    pub fn big_omega(&self, n: u64) -> Result<u64> {
        Ok(self.factor(n)?.big_omega())
    }

    pub fn is_prime(&self, n: u64) -> bool {
        if n <= self.sieve.limit {
            self.sieve.is_prime(n)
        } else {
            is_prime(n)
        }
    }

    /// All primes `<= n` in increasing order. `n` must lie within the sieve.
    pub fn primes_up_to(&self, n: u64) -> Result<Vec<u64>> {
        if n < 2 {
            return Err(invalid("primes_up_to needs n >= 2"));
        }
        if n > self.sieve.limit {
            return Err(out_of_range(format!(
                "{n} exceeds the sieve limit {}",
                self.sieve.limit
            )));
        }
        let cut = self.sieve.primes.partition_point(|&p| p as u64 <= n);
        Ok(self.sieve.primes[..cut].iter().map(|&p| p as u64).collect())
    }
}
