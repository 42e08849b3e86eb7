//! The distance itself, its two equivalent formulas, and geodesics.
//!
//! The primary formula sums coordinatewise over exponent vectors:
//! `d(a, b) = sum_p |nu_p(a) - nu_p(b)|`. The equivalent lcm/gcd form
//! `Omega(lcm(a, b)) - Omega(gcd(a, b))` is kept as an independent
//! implementation so the two can be pitted against each other in tests.

use crate::error::{invalid, out_of_range, Result};
use crate::factor::{factor, Factorization};

fn check_positive(n: u64, name: &str) -> Result<()> {
    if n == 0 {
        Err(invalid(format!("{name} must be a positive integer")))
    } else {
        Ok(())
    }
}

/// Distance between two naturals: the sum of absolute differences of their
/// prime exponents.
pub fn dist(a: u64, b: u64) -> Result<u64> {
    check_positive(a, "a")?;
    check_positive(b, "b")?;
    Ok(dist_factored(&factor(a)?, &factor(b)?))
}

/// Distance computed from already-obtained factorizations.
pub fn dist_factored(a: &Factorization, b: &Factorization) -> u64 {
    a.merged(b)
        .map(|(_, x, y)| (x as u64).abs_diff(y as u64))
        .sum()
}

/// Distance via the equivalent formula `Omega(lcm) - Omega(gcd)`.
///
/// Works on exponent vectors directly, so it never materializes the lcm
/// and cannot overflow.
pub fn dist_via_lcm_gcd(a: u64, b: u64) -> Result<u64> {
    check_positive(a, "a")?;
    check_positive(b, "b")?;
    let (lcm, gcd) = lcm_gcd_factored(&factor(a)?, &factor(b)?);
    Ok(lcm.big_omega() - gcd.big_omega())
}

/// Factorizations of `lcm(a, b)` and `gcd(a, b)` (coordinatewise max and min).
pub fn lcm_gcd_exponents(a: u64, b: u64) -> Result<(Factorization, Factorization)> {
    check_positive(a, "a")?;
    check_positive(b, "b")?;
    Ok(lcm_gcd_factored(&factor(a)?, &factor(b)?))
}

/// lcm/gcd exponent vectors from already-obtained factorizations.
pub fn lcm_gcd_factored(a: &Factorization, b: &Factorization) -> (Factorization, Factorization) {
    let mut lcm = Vec::new();
    let mut gcd = Vec::new();
    for (p, x, y) in a.merged(b) {
        lcm.push((p, x.max(y)));
        if x.min(y) > 0 {
            gcd.push((p, x.min(y)));
        }
    }
    (
        Factorization::from_sorted_unchecked(lcm),
        Factorization::from_sorted_unchecked(gcd),
    )
}

/// If `a` and `b` are adjacent (distance exactly 1), the prime `p` with
/// `b = a * p` or `a = b * p`; otherwise `None`.
pub fn is_unit_step(a: u64, b: u64) -> Result<Option<u64>> {
    check_positive(a, "a")?;
    check_positive(b, "b")?;
    let fa = factor(a)?;
    let fb = factor(b)?;
    if dist_factored(&fa, &fb) != 1 {
        return Ok(None);
    }
    // exactly one coordinate differs, by exactly one
    let p = fa
        .merged(&fb)
        .find(|&(_, x, y)| x != y)
        .map(|(p, _, _)| p)
        .expect("distance 1 forces a differing coordinate");
    Ok(Some(p))
}

/// Which common waypoint a geodesic should pass through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Waypoint {
    /// Ascend from `a` to `lcm(a, b)`, then descend to `b`.
    Lcm,
    /// Descend from `a` to `gcd(a, b)`, then ascend to `b`.
    Gcd,
}

/// A shortest path from `a` to `b` through the chosen waypoint, as the full
/// vertex sequence including both endpoints. Every consecutive pair is at
/// distance 1 and the path length equals `d(a, b)`.
///
/// Steps are deterministic: multiply in (or divide out) one prime at a
/// time, primes in increasing order.
///
/// The lcm route materializes `lcm(a, b)` and is rejected when that exceeds
/// 64 bits; the gcd route never grows beyond `max(a, b)`.
pub fn geodesic_through(a: u64, b: u64, way: Waypoint) -> Result<Vec<u64>> {
    check_positive(a, "a")?;
    check_positive(b, "b")?;
    let fa = factor(a)?;
    let fb = factor(b)?;
    let (lcm, gcd) = lcm_gcd_factored(&fa, &fb);
    if way == Waypoint::Lcm && lcm.value().is_err() {
        return Err(out_of_range(format!("lcm({a}, {b}) exceeds 64 bits")));
    }

    // Per-prime exponent moves for one leg, primes increasing; `up` chooses
    // multiplication or division.
    fn leg(path: &mut Vec<u64>, from: &Factorization, to: &Factorization, up: bool) {
        let mut cur = *path.last().expect("path starts nonempty");
        for (p, x, y) in from.merged(to) {
            let (lo, hi) = (x.min(y), x.max(y));
            debug_assert!(if up { x == lo } else { x == hi });
            for _ in lo..hi {
                cur = if up { cur * p } else { cur / p };
                path.push(cur);
            }
        }
    }

    let mut path = vec![a];
    match way {
        Waypoint::Lcm => {
            leg(&mut path, &fa, &lcm, true);
            leg(&mut path, &lcm, &fb, false);
        }
        Waypoint::Gcd => {
            leg(&mut path, &fa, &gcd, false);
            leg(&mut path, &gcd, &fb, true);
        }
    }
    Ok(path)
}
