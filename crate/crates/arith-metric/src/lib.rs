//! The arithmetic metric on the natural numbers.
//!
//! For naturals `a` and `b` with prime factorizations `a = prod p^x_p`,
//! `b = prod p^y_p`, the distance is
//!
//! ```text
//! d(a, b) = Omega(lcm(a, b)) - Omega(gcd(a, b)) = sum_p |x_p - y_p|
//! ```
//!
//! where `Omega` counts prime factors with multiplicity. This is a true
//! metric: `d(a, b) = 0` iff `a = b`, it is symmetric, and the triangle
//! inequality holds. It is invariant under common multiplication,
//! `d(ac, bc) = d(a, b)`, and the primes are exactly the points at
//! distance 1 from the unit.
//!
//! The crate provides:
//!
//! * [`metric`] — the distance itself, lcm/gcd exponent views, unit steps
//!   and explicit geodesics.
//! * [`factor`] — factorization engines backing everything else: a linear
//!   smallest-prime-factor sieve for bulk scans and a standalone 64-bit
//!   path (deterministic Miller-Rabin plus Pollard-Brent rho).
//! * [`extended`] — the extension to finite-support rational exponent
//!   vectors, covering positive rationals and real roots, with the exact
//!   rational distance and the isometric l1 embedding.
//! * [`hasse`] — the covering-relation graph on `[1, n]` whose shortest
//!   paths realize the metric, with a BFS oracle and DOT export.
//! * [`analysis`] — structural results: the largest-power index `xi`,
//!   closed balls, interval diameter (formula and brute force), and the
//!   Omega census against its asymptotic estimate.
//! * [`index`] — a BK-tree for range and nearest-neighbor queries under
//!   the metric.
//! * [`verify`] — seeded self-check suites pitting every fast path
//!   against an independent oracle.

pub mod analysis;
pub mod error;
pub mod extended;
pub mod factor;
pub mod hasse;
pub mod index;
pub mod metric;
pub mod verify;

pub use analysis::{
    closed_ball, diameter_bruteforce, diameter_formula, landau_estimate, omega_census, xi,
    CensusRow, DiameterWitness, OmegaCensus,
};
pub use error::{Error, Result};
pub use extended::{embed, ext_big_omega, ext_dist, ExtendedNumber, Exponent};
pub use factor::{big_omega, factor, is_prime, valuation, Factorization, Factorizer, SpfSieve};
pub use hasse::HasseGraph;
pub use index::{BkIndex, QueryStats};
pub use metric::{
    dist, dist_factored, dist_via_lcm_gcd, geodesic_through, is_unit_step, lcm_gcd_exponents,
    lcm_gcd_factored, Waypoint,
};
pub use verify::{run_all, run_suite, suite_names, SuiteReport};
