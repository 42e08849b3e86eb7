//! Structural results about the metric on initial segments `[1, n]`:
//! largest-power indices, closed balls, the interval diameter, and the
//! census of `Omega` values against its classical asymptotic estimate.

use crate::error::{invalid, out_of_range, Result};
use crate::factor::{factor, Factorization, Factorizer};
use crate::metric::dist_factored;

/// Default cap on `n` for [`closed_ball`].
pub const BALL_CAP: u64 = 1_000_000;

/// Cap on `n` for [`diameter_bruteforce`] (the scan is quadratic in `n`).
pub const DIAMETER_BRUTE_CAP: u64 = 2000;

/// Largest `k >= 0` with `p^k <= s`, by exact integer powering.
///
/// Equivalent to `floor(log_p(s))` but never touches floating point, so
/// boundary cases like `s = p^k` exactly are classified correctly.
/// `xi(p, s) = 0` whenever `s < p`.
pub fn xi(p: u64, s: u64) -> Result<u64> {
    if p < 2 {
        return Err(invalid("xi needs a base p >= 2"));
    }
    if s == 0 {
        return Err(invalid("xi needs s >= 1"));
    }
    let mut k = 0u64;
    let mut power = p as u128;
    while power <= s as u128 {
        k += 1;
        power *= p as u128;
    }
    Ok(k)
}

/// All `y` in `[1, n]` with `d(x, y) <= r`, ascending, under the default
/// cap on `n`. The center `x` need not lie in `[1, n]` itself.
pub fn closed_ball(x: u64, r: u64, n: u64, factorizer: &Factorizer) -> Result<Vec<u64>> {
    closed_ball_with_cap(x, r, n, BALL_CAP, factorizer)
}

/// [`closed_ball`] with an explicit cap.
pub fn closed_ball_with_cap(
    x: u64,
    r: u64,
    n: u64,
    cap: u64,
    factorizer: &Factorizer,
) -> Result<Vec<u64>> {
    if x == 0 {
        return Err(invalid("ball center must be a positive integer"));
    }
    if n == 0 {
        return Err(invalid("the scan range [1, n] needs n >= 1"));
    }
    if n > cap {
        return Err(out_of_range(format!("n = {n} exceeds the cap {cap}")));
    }
    let fx = factorizer.factor(x)?;
    let mut out = Vec::new();
    for y in 1..=n {
        if dist_factored(&fx, &factorizer.factor(y)?) <= r {
            out.push(y);
        }
    }
    Ok(out)
}

/// The diameter of `[1, n]` by the closed formula `xi(2, n) + xi(3, n)`.
pub fn diameter_formula(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(invalid("the interval [1, n] needs n >= 1"));
    }
    Ok(xi(2, n)? + xi(3, n)?)
}

/// A maximal-distance pair found by exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterWitness {
    pub diameter: u64,
    /// Lexicographically smallest pair `(a, b)`, `a <= b`, achieving it.
    pub pair: (u64, u64),
}

/// The diameter of `[1, n]` by scanning every pair, with a witness.
/// Capped because the scan is quadratic.
pub fn diameter_bruteforce(n: u64) -> Result<DiameterWitness> {
    if n == 0 {
        return Err(invalid("the interval [1, n] needs n >= 1"));
    }
    if n > DIAMETER_BRUTE_CAP {
        return Err(out_of_range(format!(
            "n = {n} exceeds the brute-force cap {DIAMETER_BRUTE_CAP}"
        )));
    }
    let facts: Vec<Factorization> = (1..=n).map(factor).collect::<Result<_>>()?;
    let mut best = DiameterWitness {
        diameter: 0,
        pair: (1, 1),
    };
    for a in 1..=n {
        for b in a + 1..=n {
            let d = dist_factored(&facts[a as usize - 1], &facts[b as usize - 1]);
            if d > best.diameter {
                best = DiameterWitness {
                    diameter: d,
                    pair: (a, b),
                };
            }
        }
    }
    Ok(best)
}

/// How many integers in `[1, n]` have each `Omega` value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaCensus {
    n: u64,
    counts: Vec<u64>,
}

impl OmegaCensus {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `counts()[k]` is the number of `m` in `[1, n]` with `Omega(m) = k`;
    /// the last entry is nonzero.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, k: u64) -> u64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.counts.get(k).copied())
            .unwrap_or(0)
    }

    /// Census rows up to `kmax`, each with the asymptotic estimate and the
    /// count/estimate ratio. The estimate is undefined for `k = 0` and for
    /// `n < 3`; those cells are `None`.
    pub fn rows(&self, kmax: u64) -> Vec<CensusRow> {
        (0..=kmax)
            .map(|k| {
                let count = self.count(k);
                let estimate = if k >= 1 { landau_estimate(self.n, k).ok() } else { None };
                CensusRow {
                    k,
                    count,
                    estimate,
                    ratio: estimate.map(|e| count as f64 / e),
                }
            })
            .collect()
    }
}

/// One line of census output: exact count vs asymptotic estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusRow {
    pub k: u64,
    pub count: u64,
    pub estimate: Option<f64>,
    pub ratio: Option<f64>,
}

/// Counts `#{m <= n : Omega(m) = k}` for every `k` in one sieve pass.
pub fn omega_census(n: u64, factorizer: &Factorizer) -> Result<OmegaCensus> {
    if n == 0 {
        return Err(invalid("the census range [1, n] needs n >= 1"));
    }
    let table = factorizer.sieve().omega_table(n)?;
    let max_omega = table[1..=n as usize].iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u64; max_omega as usize + 1];
    for &w in &table[1..=n as usize] {
        counts[w as usize] += 1;
    }
    Ok(OmegaCensus { n, counts })
}

/// The classical asymptotic for the count of `m <= n` with `Omega(m) = k`:
/// `(n / ln n) * (ln ln n)^(k-1) / (k-1)!`.
///
/// The only floating-point computation in the crate; treat its output as
/// approximate. Convergence is logarithmically slow, so desk-scale ratios
/// against exact counts are loose.
pub fn landau_estimate(n: u64, k: u64) -> Result<f64> {
    if n < 3 {
        return Err(invalid("the estimate needs n >= 3 (ln ln n must be positive)"));
    }
    if k == 0 {
        return Err(invalid("the estimate needs k >= 1"));
    }
    let ln_n = (n as f64).ln();
    let ln_ln_n = ln_n.ln();
    let mut value = n as f64 / ln_n;
    for i in 1..k {
        value *= ln_ln_n / i as f64;
    }
    Ok(value)
}
