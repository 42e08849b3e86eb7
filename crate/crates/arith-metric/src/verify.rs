//! Seeded self-verification suites.
//!
//! Each suite pits a fast code path against an independent oracle: the
//! exponent-merge distance against the lcm/gcd formula, BFS on the covering
//! graph against the closed-form distance, the BK-tree against linear
//! scans, the diameter formula against an exhaustive pair scan, and so on.
//! Random sampling uses an explicitly seeded, portable PRNG (ChaCha8), so a
//! given seed reproduces byte-identical results on any platform; each suite
//! draws from its own stream, so suites are independent of the order they
//! run in.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    closed_ball, diameter_bruteforce, diameter_formula, landau_estimate, omega_census, xi,
};
use crate::error::{invalid, Result};
use crate::extended::{embed, ext_dist, ExtendedNumber, Exponent};
use crate::factor::{factor, Factorization, Factorizer};
use crate::hasse::HasseGraph;
use crate::index::BkIndex;
use crate::metric::{
    dist, dist_factored, dist_via_lcm_gcd, geodesic_through, is_unit_step, lcm_gcd_factored,
    Waypoint,
};

use num_traits::{CheckedAdd, CheckedSub, Zero};

/// Outcome of one verification suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Individual assertions evaluated.
    pub checks: u64,
    /// Assertions that did not hold.
    pub failures: u64,
    /// Descriptions of the first few failures, for diagnosis.
    pub samples: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

const SAMPLE_CAP: usize = 8;

struct Recorder {
    checks: u64,
    failures: u64,
    samples: Vec<String>,
}

impl Recorder {
    fn new() -> Recorder {
        Recorder {
            checks: 0,
            failures: 0,
            samples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < SAMPLE_CAP {
                self.samples.push(describe());
            }
        }
    }

    fn into_report(self, name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            checks: self.checks,
            failures: self.failures,
            samples: self.samples,
        }
    }
}

/// One independent PRNG stream per suite.
fn stream(seed: u64, salt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(salt);
    rng
}

type Suite = fn(&Factorizer, u64) -> Result<SuiteReport>;

const SUITES: &[(&str, Suite)] = &[
    ("factorization", suite_factorization),
    ("formula-equivalence", suite_formula_equivalence),
    ("metric-axioms", suite_metric_axioms),
    ("multiplicative-invariance", suite_multiplicative_invariance),
    ("unit-step", suite_unit_step),
    ("geodesics", suite_geodesics),
    ("balls", suite_balls),
    ("diameter", suite_diameter),
    ("hasse-oracle", suite_hasse_oracle),
    ("omega-bounds", suite_omega_bounds),
    ("census", suite_census),
    ("extension", suite_extension),
    ("index-oracle", suite_index_oracle),
];

/// Names of all suites, in execution order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|&(name, _)| name).collect()
}

/// Runs one suite by name.
pub fn run_suite(name: &str, factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    match SUITES.iter().find(|&&(n, _)| n == name) {
        Some(&(_, f)) => f(factorizer, seed),
        None => Err(invalid(format!(
            "unknown suite `{name}` (expected one of: {})",
            suite_names().join(", ")
        ))),
    }
}

/// Runs every suite with the same seed.
pub fn run_all(factorizer: &Factorizer, seed: u64) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|&(_, f)| f(factorizer, seed)).collect()
}

/// l1 norm of the difference of two dense exponent vectors, padding the
/// shorter with zeros. Deliberately a separate code path from [`ext_dist`]
/// (dense indexing here, sparse merge there) so the isometry check is
/// meaningful.
pub fn l1_diff_norm(xs: &[Exponent], ys: &[Exponent]) -> Result<Exponent> {
    let mut total = Exponent::zero();
    for i in 0..xs.len().max(ys.len()) {
        let x = xs.get(i).copied().unwrap_or_else(Exponent::zero);
        let y = ys.get(i).copied().unwrap_or_else(Exponent::zero);
        let diff = x
            .checked_sub(&y)
            .ok_or_else(|| crate::error::out_of_range("norm subtraction overflows"))?;
        let diff = if diff < Exponent::zero() {
            Exponent::zero()
                .checked_sub(&diff)
                .ok_or_else(|| crate::error::out_of_range("norm negation overflows"))?
        } else {
            diff
        };
        total = total
            .checked_add(&diff)
            .ok_or_else(|| crate::error::out_of_range("norm sum overflows"))?;
    }
    Ok(total)
}

/// Linear-scan oracle for range queries over a pre-factored corpus.
pub fn linear_range(corpus: &[(u64, Factorization)], x: &Factorization, r: u64) -> Vec<u64> {
    let mut out: Vec<u64> = corpus
        .iter()
        .filter(|(_, f)| dist_factored(x, f) <= r)
        .map(|&(v, _)| v)
        .collect();
    out.sort_unstable();
    out
}

/// Linear-scan oracle for nearest-neighbor queries: `(value, distance)`
/// ascending by `(distance, value)`.
pub fn linear_nearest(
    corpus: &[(u64, Factorization)],
    x: &Factorization,
    k: usize,
) -> Vec<(u64, u64)> {
    let mut all: Vec<(u64, u64)> = corpus
        .iter()
        .map(|(v, f)| (dist_factored(x, f), *v))
        .collect();
    all.sort_unstable();
    all.into_iter().take(k).map(|(d, v)| (v, d)).collect()
}

/// Reconstruction, sieve/standalone agreement, and total additivity of the
/// prime-factor count.
fn suite_factorization(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    for n in 1..=100_000u64 {
        let via_sieve = factorizer.factor(n)?;
        r.check(via_sieve.value()? == n, || {
            format!("factor({n}) does not multiply back")
        });
        if n <= 10_000 {
            let standalone = factor(n)?;
            r.check(standalone == via_sieve, || {
                format!("sieve and standalone factorizations of {n} disagree")
            });
        }
    }
    let mut rng = stream(seed, 1);
    for _ in 0..10_000 {
        let n: u64 = rng.gen_range(1..=u64::MAX);
        r.check(factor(n)?.value()? == n, || {
            format!("factor({n}) does not multiply back")
        });
    }
    for _ in 0..10_000 {
        let a: u64 = rng.gen_range(1..=u32::MAX as u64);
        let b: u64 = rng.gen_range(1..=u32::MAX as u64);
        let lhs = factor(a * b)?.big_omega();
        let rhs = factor(a)?.big_omega() + factor(b)?.big_omega();
        r.check(lhs == rhs, || {
            format!("Omega({a} * {b}) = {lhs} but Omega({a}) + Omega({b}) = {rhs}")
        });
    }
    Ok(r.into_report("factorization"))
}

/// The exponent-merge distance equals the lcm/gcd formula.
fn suite_formula_equivalence(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let mut rng = stream(seed, 2);
    for _ in 0..10_000 {
        let a: u64 = rng.gen_range(1..=1_000_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000_000);
        let (fa, fb) = (factorizer.factor(a)?, factorizer.factor(b)?);
        let direct = dist_factored(&fa, &fb);
        let (lcm, gcd) = lcm_gcd_factored(&fa, &fb);
        let via = lcm.big_omega() - gcd.big_omega();
        r.check(direct == via, || {
            format!("dist({a}, {b}): merge gives {direct}, lcm/gcd gives {via}")
        });
        let public = dist_via_lcm_gcd(a, b)?;
        r.check(public == direct, || {
            format!("dist_via_lcm_gcd({a}, {b}) = {public}, expected {direct}")
        });
    }
    Ok(r.into_report("formula-equivalence"))
}

/// Identity, symmetry, and the triangle inequality.
fn suite_metric_axioms(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let mut rng = stream(seed, 3);
    for _ in 0..10_000 {
        let a: u64 = rng.gen_range(1..=1_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000);
        let c: u64 = rng.gen_range(1..=1_000_000);
        let (fa, fb, fc) = (
            factorizer.factor(a)?,
            factorizer.factor(b)?,
            factorizer.factor(c)?,
        );
        let ab = dist_factored(&fa, &fb);
        let ba = dist_factored(&fb, &fa);
        let ac = dist_factored(&fa, &fc);
        let bc = dist_factored(&fb, &fc);
        let aa = dist_factored(&fa, &fa);
        r.check(aa == 0, || format!("d({a}, {a}) = {aa}, expected 0"));
        r.check((ab == 0) == (a == b), || {
            format!("d({a}, {b}) = {ab} violates the identity axiom")
        });
        r.check(ab == ba, || {
            format!("d({a}, {b}) = {ab} but d({b}, {a}) = {ba}")
        });
        r.check(ac <= ab + bc, || {
            format!("triangle failure: d({a},{c}) = {ac} > d({a},{b}) + d({b},{c}) = {}", ab + bc)
        });
    }
    Ok(r.into_report("metric-axioms"))
}

/// `d(ac, bc) = d(a, b)` whenever the products stay in range.
fn suite_multiplicative_invariance(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let mut rng = stream(seed, 4);
    let mut done = 0u64;
    while done < 10_000 {
        let a: u64 = rng.gen_range(1..=1_000_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000_000);
        let c: u64 = rng.gen_range(1..=1_000_000_000);
        let (Some(ac), Some(bc)) = (a.checked_mul(c), b.checked_mul(c)) else {
            continue;
        };
        done += 1;
        let base = dist_factored(&factorizer.factor(a)?, &factorizer.factor(b)?);
        let scaled = dist_factored(&factorizer.factor(ac)?, &factorizer.factor(bc)?);
        r.check(base == scaled, || {
            format!("d({a}*{c}, {b}*{c}) = {scaled} but d({a}, {b}) = {base}")
        });
    }
    Ok(r.into_report("multiplicative-invariance"))
}

/// Distance 1 happens exactly at prime ratios, exhaustively for
/// `a < b <= 10^4`.
fn suite_unit_step(factorizer: &Factorizer, _seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    const N: u64 = 10_000;
    let facts: Vec<Factorization> = (1..=N).map(|m| factorizer.factor(m)).collect::<Result<_>>()?;
    let mut adjacent_found = 0u64;
    for a in 1..=N {
        for b in a + 1..=N {
            let d = dist_factored(&facts[a as usize - 1], &facts[b as usize - 1]);
            let prime_ratio = b % a == 0 && factorizer.is_prime(b / a);
            r.check((d == 1) == prime_ratio, || {
                format!("d({a}, {b}) = {d} but b/a prime ratio is {prime_ratio}")
            });
            if d == 1 {
                adjacent_found += 1;
                // spot-check the public wrapper on every adjacent pair
                let step = is_unit_step(a, b)?;
                r.check(step == Some(b / a), || {
                    format!("is_unit_step({a}, {b}) = {step:?}, expected Some({})", b / a)
                });
            }
        }
    }
    // every adjacency is a (value, prime) pair: sum over a of pi(N / a)
    let expected: u64 = (1..=N)
        .map(|a| factorizer.primes_up_to(N / a).map(|p| p.len() as u64).unwrap_or(0))
        .sum();
    r.check(adjacent_found == expected, || {
        format!("found {adjacent_found} adjacent pairs, expected {expected}")
    });
    Ok(r.into_report("unit-step"))
}

/// Waypoint additivity and explicit geodesic paths.
fn suite_geodesics(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let mut rng = stream(seed, 5);
    for _ in 0..10_000 {
        let a: u64 = rng.gen_range(1..=1_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000);
        let (fa, fb) = (factorizer.factor(a)?, factorizer.factor(b)?);
        let d = dist_factored(&fa, &fb);
        let (lcm, gcd) = lcm_gcd_factored(&fa, &fb);
        let through_lcm = dist_factored(&fa, &lcm) + dist_factored(&lcm, &fb);
        let through_gcd = dist_factored(&fa, &gcd) + dist_factored(&gcd, &fb);
        r.check(through_lcm == d, || {
            format!("d({a},l) + d(l,{b}) = {through_lcm}, expected {d}")
        });
        r.check(through_gcd == d, || {
            format!("d({a},g) + d(g,{b}) = {through_gcd}, expected {d}")
        });
    }
    // explicit paths on a smaller sample (every step is re-factored)
    for _ in 0..500 {
        let a: u64 = rng.gen_range(1..=1_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000);
        let d = dist(a, b)?;
        for way in [Waypoint::Gcd, Waypoint::Lcm] {
            let path = geodesic_through(a, b, way)?;
            r.check(path.len() as u64 == d + 1, || {
                format!("geodesic({a}, {b}, {way:?}) has {} vertices, expected {}", path.len(), d + 1)
            });
            r.check(
                path.first() == Some(&a) && path.last() == Some(&b),
                || format!("geodesic({a}, {b}, {way:?}) endpoints wrong"),
            );
            for w in path.windows(2) {
                let (lo, hi) = (w[0].min(w[1]), w[0].max(w[1]));
                let ok = hi % lo == 0 && factorizer.is_prime(hi / lo);
                r.check(ok, || {
                    format!("geodesic({a}, {b}, {way:?}) step {} -> {} is not a prime step", w[0], w[1])
                });
            }
        }
    }
    Ok(r.into_report("geodesics"))
}

/// The unit ball around 1 is the primes (plus the center), and balls match
/// a direct scan.
fn suite_balls(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    for n in [100u64, 10_000] {
        let ball = closed_ball(1, 1, n, factorizer)?;
        let mut expected = vec![1u64];
        expected.extend(factorizer.primes_up_to(n)?);
        r.check(ball == expected, || {
            format!("closed_ball(1, 1, {n}) is not 1 plus the primes")
        });
    }
    let mut rng = stream(seed, 6);
    let corpus: Vec<Factorization> = (1..=1000).map(|m| factorizer.factor(m)).collect::<Result<_>>()?;
    for _ in 0..50 {
        let x: u64 = rng.gen_range(1..=2000);
        let radius: u64 = rng.gen_range(0..=6);
        let ball = closed_ball(x, radius, 1000, factorizer)?;
        let fx = factorizer.factor(x)?;
        let scan: Vec<u64> = (1..=1000u64)
            .filter(|&y| dist_factored(&fx, &corpus[y as usize - 1]) <= radius)
            .collect();
        r.check(ball == scan, || {
            format!("closed_ball({x}, {radius}, 1000) disagrees with the direct scan")
        });
    }
    Ok(r.into_report("balls"))
}

/// The closed-form diameter of `[1, n]` equals the exhaustive scan.
fn suite_diameter(_factorizer: &Factorizer, _seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    for n in 1..=300u64 {
        let formula = diameter_formula(n)?;
        let brute = diameter_bruteforce(n)?;
        r.check(formula == brute.diameter, || {
            format!("diameter([1, {n}]): formula {formula}, scan {}", brute.diameter)
        });
        r.check(xi(2, n).unwrap() + xi(3, n).unwrap() == formula, || {
            format!("diameter_formula({n}) is not xi2 + xi3")
        });
    }
    Ok(r.into_report("diameter"))
}

/// BFS distance on the covering graph equals the metric, exhaustively for
/// every n <= 200; edge counts match the distinct-prime-factor sum.
fn suite_hasse_oracle(factorizer: &Factorizer, _seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let sieve = factorizer.sieve();
    for n in 1..=200u64 {
        let g = HasseGraph::build(n, sieve)?;
        let facts: Vec<Factorization> = (1..=n).map(|m| factorizer.factor(m)).collect::<Result<_>>()?;
        for a in 1..=n {
            let row = g.distances_from(a)?;
            for b in 1..=n {
                let metric = dist_factored(&facts[a as usize - 1], &facts[b as usize - 1]);
                r.check(row[b as usize] == metric, || {
                    format!("BFS distance({a}, {b}) in [1, {n}] is {} but d = {metric}", row[b as usize])
                });
            }
        }
    }
    let n = 10_000u64;
    let g = HasseGraph::build(n, sieve)?;
    let omega_distinct: u64 = (2..=n)
        .map(|m| factorizer.factor(m).map(|f| f.entries().len() as u64))
        .sum::<Result<u64>>()?;
    r.check(g.edge_count() == omega_distinct, || {
        format!("edge count {} differs from the distinct-prime sum {omega_distinct}", g.edge_count())
    });
    for (a, b) in g.edges().take(50_000) {
        r.check(b % a == 0 && factorizer.is_prime(b / a), || {
            format!("edge ({a}, {b}) is not a covering step")
        });
    }
    Ok(r.into_report("hasse-oracle"))
}

/// `Omega(n) <= xi(2, n)` for all `n`, and `<= xi(3, n)` for odd `n`.
fn suite_omega_bounds(factorizer: &Factorizer, _seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    const N: u64 = 100_000;
    let table = factorizer.sieve().omega_table(N)?;
    for n in 1..=N {
        let omega = table[n as usize] as u64;
        r.check(omega <= xi(2, n)?, || {
            format!("Omega({n}) = {omega} exceeds xi(2, {n})")
        });
        if n % 2 == 1 {
            r.check(omega <= xi(3, n)?, || {
                format!("Omega({n}) = {omega} exceeds xi(3, {n}) for odd n")
            });
        }
    }
    Ok(r.into_report("omega-bounds"))
}

/// Census totals, the prime count at k = 1, and loose agreement with the
/// asymptotic estimate.
fn suite_census(factorizer: &Factorizer, _seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    const N: u64 = 1_000_000;
    let census = omega_census(N, factorizer)?;
    r.check(census.counts().iter().sum::<u64>() == N, || {
        format!("census counts sum to {} instead of {N}", census.counts().iter().sum::<u64>())
    });
    r.check(census.count(0) == 1, || {
        format!("count of Omega = 0 is {}, expected 1", census.count(0))
    });
    let primes = factorizer.primes_up_to(N)?.len() as u64;
    r.check(census.count(1) == primes, || {
        format!("count of Omega = 1 is {} but pi({N}) = {primes}", census.count(1))
    });
    for k in 1..=5u64 {
        let ratio = census.count(k) as f64 / landau_estimate(N, k)?;
        // convergence of the asymptotic is logarithmically slow; at desk
        // scale a loose band is all that holds
        r.check((0.5..=2.0).contains(&ratio), || {
            format!("count/estimate ratio at k = {k} is {ratio:.3}, outside [0.5, 2.0]")
        });
    }
    Ok(r.into_report("census"))
}

/// Random finite-support extended number: a rational from bounded parts,
/// optionally under a root.
fn random_extended(rng: &mut ChaCha8Rng) -> Result<ExtendedNumber> {
    let num: u64 = rng.gen_range(1..=10_000);
    let den: u64 = rng.gen_range(1..=10_000);
    let x = ExtendedNumber::from_rational(num, den)?;
    if rng.gen_bool(0.5) {
        x.nth_root(rng.gen_range(2..=5))
    } else {
        Ok(x)
    }
}

/// Restriction to the naturals, metric axioms over exact rationals, the
/// embedding isometry, and multiplicative invariance.
fn suite_extension(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let mut rng = stream(seed, 7);
    for _ in 0..10_000 {
        let a: u64 = rng.gen_range(1..=1_000_000);
        let b: u64 = rng.gen_range(1..=1_000_000);
        let ext = ext_dist(&ExtendedNumber::from_natural(a)?, &ExtendedNumber::from_natural(b)?)?;
        let nat = Exponent::from_integer(dist(a, b)? as i128);
        r.check(ext == nat, || {
            format!("ext_dist restricted to ({a}, {b}) gives {ext}, expected {nat}")
        });
    }
    for _ in 0..10_000 {
        let x = random_extended(&mut rng)?;
        let y = random_extended(&mut rng)?;
        let z = random_extended(&mut rng)?;
        let xy = ext_dist(&x, &y)?;
        let yx = ext_dist(&y, &x)?;
        let xz = ext_dist(&x, &z)?;
        let yz = ext_dist(&y, &z)?;
        r.check(ext_dist(&x, &x)?.is_zero(), || format!("ext_dist(x, x) != 0 for x = {x}"));
        r.check((xy.is_zero()) == (x == y), || {
            format!("identity axiom fails for {x} and {y}")
        });
        r.check(xy == yx, || format!("symmetry fails for {x} and {y}"));
        r.check(xz <= xy + yz, || {
            format!("triangle fails for {x}, {y}, {z}")
        });

        // isometry via the independent dense-vector norm
        let ex = embed(&x, factorizer)?;
        let ey = embed(&y, factorizer)?;
        let norm = l1_diff_norm(&ex, &ey)?;
        r.check(norm == xy, || {
            format!("|embed({x}) - embed({y})|_1 = {norm} but ext_dist = {xy}")
        });

        // invariance under common multiplication
        let xz_prod = x.mul(&z)?;
        let yz_prod = y.mul(&z)?;
        r.check(ext_dist(&xz_prod, &yz_prod)? == xy, || {
            format!("ext_dist(xz, yz) != ext_dist(x, y) for {x}, {y}, {z}")
        });
    }
    let sqrt2 = ExtendedNumber::from_natural(2)?.nth_root(2)?;
    let cbrt2 = ExtendedNumber::from_natural(2)?.nth_root(3)?;
    r.check(ext_dist(&sqrt2, &cbrt2)? == Exponent::new(1, 6), || {
        "d(sqrt 2, cbrt 2) != 1/6".to_string()
    });
    Ok(r.into_report("extension"))
}

/// BK-tree range and nearest queries against linear scans over `[1, 500]`.
fn suite_index_oracle(factorizer: &Factorizer, seed: u64) -> Result<SuiteReport> {
    let mut r = Recorder::new();
    let mut rng = stream(seed, 8);
    const N: u64 = 500;
    let index = BkIndex::from_values(1..=N)?;
    let corpus: Vec<(u64, Factorization)> = (1..=N)
        .map(|v| factorizer.factor(v).map(|f| (v, f)))
        .collect::<Result<_>>()?;
    for _ in 0..500 {
        let x: u64 = rng.gen_range(1..=2000);
        let radius: u64 = rng.gen_range(0..=8);
        let fx = factorizer.factor(x)?;
        let (got, stats) = index.range_with_stats(x, radius)?;
        let expected = linear_range(&corpus, &fx, radius);
        r.check(got == expected, || {
            format!("bk_range({x}, {radius}) disagrees with the linear scan")
        });
        r.check(stats.visited <= N, || {
            format!("bk_range({x}, {radius}) visited {} nodes out of {N}", stats.visited)
        });
    }
    for _ in 0..500 {
        let x: u64 = rng.gen_range(1..=2000);
        let k: usize = rng.gen_range(1..=20);
        let fx = factorizer.factor(x)?;
        let (got, stats) = index.nearest_with_stats(x, k)?;
        let expected = linear_nearest(&corpus, &fx, k);
        r.check(got == expected, || {
            format!("bk_nearest({x}, {k}) disagrees with the linear scan")
        });
        r.check(stats.visited <= N, || {
            format!("bk_nearest({x}, {k}) visited {} nodes out of {N}", stats.visited)
        });
    }
    Ok(r.into_report("index-oracle"))
}
