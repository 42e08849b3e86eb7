//! Extension of the metric beyond the naturals.
//!
//! An [`ExtendedNumber`] is a finite formal product `prod p^(a_p)` with
//! rational exponents. That covers every positive rational (integer
//! exponents of both signs) and all real roots of rationals (`nth_root`
//! divides exponents). The distance extends verbatim:
//! `d(x, y) = sum_p |a_p(x) - a_p(y)|`, now an exact non-negative rational.
//!
//! Exponents are exact `i128` fractions, reduced after every operation.
//! Arithmetic that would overflow 128 bits is an error, never a wrap; no
//! floating point is involved anywhere, so `d(x, y) = 0 iff x = y` holds
//! exactly.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedSub, Zero};

use crate::error::{invalid, out_of_range, Result};
use crate::factor::{factor, is_prime, Factorizer};

/// Exact rational exponent: reduced `i128` fraction, positive denominator.
pub type Exponent = Ratio<i128>;

fn checked_add(a: &Exponent, b: &Exponent) -> Result<Exponent> {
    a.checked_add(b)
        .ok_or_else(|| out_of_range("exponent addition overflows 128 bits"))
}

fn checked_sub(a: &Exponent, b: &Exponent) -> Result<Exponent> {
    a.checked_sub(b)
        .ok_or_else(|| out_of_range("exponent subtraction overflows 128 bits"))
}

fn checked_abs(a: &Exponent) -> Result<Exponent> {
    if a.numer() >= &0 {
        Ok(*a)
    } else {
        checked_sub(&Exponent::zero(), a)
    }
}

/// A positive real of the form `prod p^(a_p)` with finitely many nonzero
/// rational exponents `a_p`.
///
/// Entries are `(prime, exponent)` pairs in strictly increasing prime order
/// with every exponent nonzero; the empty sequence is the number 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtendedNumber {
    entries: Vec<(u64, Exponent)>,
}

impl ExtendedNumber {
    /// The multiplicative unit: the empty product.
    pub fn one() -> Self {
        ExtendedNumber::default()
    }

    /// Embeds a natural number via its prime factorization.
    pub fn from_natural(n: u64) -> Result<Self> {
        ExtendedNumber::from_rational(n, 1)
    }

    /// The positive rational `numerator / denominator`: exponents are the
    /// factorization of the numerator minus that of the denominator.
    pub fn from_rational(numerator: u64, denominator: u64) -> Result<Self> {
        if numerator == 0 || denominator == 0 {
            return Err(invalid("rational parts must be positive integers"));
        }
        let num = factor(numerator)?;
        let den = factor(denominator)?;
        let mut entries = Vec::new();
        for (p, x, y) in num.merged(&den) {
            let e = Exponent::from_integer(x as i128) - Exponent::from_integer(y as i128);
            if !e.is_zero() {
                entries.push((p, e));
            }
        }
        Ok(ExtendedNumber { entries })
    }

    /// Builds from raw entries, validating the type invariants: primes
    /// strictly increasing and prime, exponents nonzero.
    pub fn from_entries(entries: Vec<(u64, Exponent)>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(invalid("entries must be strictly increasing by prime"));
            }
        }
        for &(p, e) in &entries {
            if !is_prime(p) {
                return Err(invalid(format!("{p} is not prime")));
            }
            if e.is_zero() {
                return Err(invalid("zero exponents are never stored"));
            }
        }
        Ok(ExtendedNumber { entries })
    }

    /// The real k-th root: every exponent divided by `k`, kept exact.
    pub fn nth_root(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(invalid("0th root is undefined"));
        }
        let divisor = Exponent::from_integer(k as i128);
        let entries = self
            .entries
            .iter()
            .map(|&(p, e)| {
                e.checked_div(&divisor)
                    .map(|q| (p, q))
                    .ok_or_else(|| out_of_range("exponent division overflows 128 bits"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExtendedNumber { entries })
    }

    /// The product `self * other`: exponent maps added coordinatewise.
    pub fn mul(&self, other: &ExtendedNumber) -> Result<Self> {
        let mut entries = Vec::new();
        for (p, x, y) in merge(&self.entries, &other.entries) {
            let e = checked_add(&x, &y)?;
            if !e.is_zero() {
                entries.push((p, e));
            }
        }
        Ok(ExtendedNumber { entries })
    }

    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn entries(&self) -> &[(u64, Exponent)] {
        &self.entries
    }

    /// The exponent of `p` (zero when absent).
    pub fn exponent(&self, p: u64) -> Exponent {
        match self.entries.binary_search_by_key(&p, |&(q, _)| q) {
            Ok(i) => self.entries[i].1,
            Err(_) => Exponent::zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Merged iteration over two sparse exponent maps: `(prime, left, right)`
/// over the union of supports, primes increasing.
fn merge<'a>(
    left: &'a [(u64, Exponent)],
    right: &'a [(u64, Exponent)],
) -> impl Iterator<Item = (u64, Exponent, Exponent)> + 'a {
    let mut i = 0;
    let mut j = 0;
    std::iter::from_fn(move || match (left.get(i), right.get(j)) {
        (Some(&(p, x)), Some(&(q, y))) => {
            if p < q {
                i += 1;
                Some((p, x, Exponent::zero()))
            } else if q < p {
                j += 1;
                Some((q, Exponent::zero(), y))
            } else {
                i += 1;
                j += 1;
                Some((p, x, y))
            }
        }
        (Some(&(p, x)), None) => {
            i += 1;
            Some((p, x, Exponent::zero()))
        }
        (None, Some(&(q, y))) => {
            j += 1;
            Some((q, Exponent::zero(), y))
        }
        (None, None) => None,
    })
}

/// Extended distance: the exact rational `sum_p |a_p(x) - a_p(y)|`.
pub fn ext_dist(x: &ExtendedNumber, y: &ExtendedNumber) -> Result<Exponent> {
    let mut total = Exponent::zero();
    for (_, a, b) in merge(&x.entries, &y.entries) {
        total = checked_add(&total, &checked_abs(&checked_sub(&a, &b)?)?)?;
    }
    Ok(total)
}

/// Extended Omega: the signed rational sum of all exponents. Restricts to
/// the usual count of prime factors with multiplicity on the naturals.
pub fn ext_big_omega(x: &ExtendedNumber) -> Result<Exponent> {
    let mut total = Exponent::zero();
    for &(_, e) in &x.entries {
        total = checked_add(&total, &e)?;
    }
    Ok(total)
}

/// The exponent sequence of `x` indexed by prime rank (rank 1 is the prime
/// 2), as a dense vector cut off after the largest prime in the support.
/// The empty vector embeds 1; trailing coordinates are implicitly zero.
///
/// The map is an isometry: the l1 norm of `embed(x) - embed(y)` equals
/// `ext_dist(x, y)`.
pub fn embed(x: &ExtendedNumber, factorizer: &Factorizer) -> Result<Vec<Exponent>> {
    let Some(&(max_p, _)) = x.entries.last() else {
        return Ok(Vec::new());
    };
    let primes = factorizer.primes_up_to(max_p)?;
    let mut out = vec![Exponent::zero(); primes.len()];
    for &(p, e) in &x.entries {
        let rank = primes
            .binary_search(&p)
            .expect("support primes are prime and within the sieve");
        out[rank] = e;
    }
    Ok(out)
}

impl fmt::Display for ExtendedNumber {
    /// Map-style rendering: `{}` for 1, otherwise `{2: -1, 3: 1/2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}: {e}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for ExtendedNumber {
    type Err = crate::error::Error;

    /// Accepts `n`, `num/den`, or `root(k, num/den)` (radicand may itself
    /// be an integer or a fraction).
    fn from_str(s: &str) -> Result<Self> {
        fn rational(s: &str) -> Result<ExtendedNumber> {
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let num: u64 = num
                .parse()
                .map_err(|_| invalid(format!("invalid numerator `{num}`")))?;
            let den: u64 = den
                .parse()
                .map_err(|_| invalid(format!("invalid denominator `{den}`")))?;
            ExtendedNumber::from_rational(num, den)
        }

        let s = s.trim();
        if let Some(body) = s.strip_prefix("root(").and_then(|t| t.strip_suffix(')')) {
            let (k, radicand) = body
                .split_once(',')
                .ok_or_else(|| invalid("root literal needs the form root(k, num/den)"))?;
            let k: u64 = k
                .trim()
                .parse()
                .map_err(|_| invalid(format!("invalid root degree `{}`", k.trim())))?;
            return rational(radicand.trim())?.nth_root(k);
        }
        rational(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn rat(n: i128, d: i128) -> Exponent {
        Exponent::new(n, d)
    }

    #[test]
    fn from_rational_examples() {
        let x = ExtendedNumber::from_rational(3, 2).unwrap();
        assert_eq!(x.entries(), &[(2, rat(-1, 1)), (3, rat(1, 1))]);
        assert!(ExtendedNumber::from_rational(6, 6).unwrap().is_one());
        let y = ExtendedNumber::from_rational(12, 1).unwrap();
        assert_eq!(y.entries(), &[(2, rat(2, 1)), (3, rat(1, 1))]);
        assert!(matches!(
            ExtendedNumber::from_rational(0, 3),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            ExtendedNumber::from_rational(3, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn nth_root_examples() {
        let two = ExtendedNumber::from_rational(2, 1).unwrap();
        assert_eq!(two.nth_root(2).unwrap().entries(), &[(2, rat(1, 2))]);
        assert_eq!(two.nth_root(1).unwrap(), two);
        let eight = ExtendedNumber::from_rational(8, 1).unwrap();
        assert_eq!(eight.nth_root(3).unwrap().entries(), &[(2, rat(1, 1))]);
        assert!(matches!(two.nth_root(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn ext_dist_examples() {
        let half = ExtendedNumber::from_rational(1, 2).unwrap();
        let three = ExtendedNumber::from_rational(3, 1).unwrap();
        assert_eq!(ext_dist(&half, &three).unwrap(), rat(2, 1));
        assert_eq!(ext_dist(&half, &half).unwrap(), rat(0, 1));

        let sqrt2 = ExtendedNumber::from_rational(2, 1).unwrap().nth_root(2).unwrap();
        let cbrt2 = ExtendedNumber::from_rational(2, 1).unwrap().nth_root(3).unwrap();
        assert_eq!(ext_dist(&sqrt2, &cbrt2).unwrap(), rat(1, 6));
    }

    #[test]
    fn ext_big_omega_examples() {
        let x = ExtendedNumber::from_rational(3, 2).unwrap();
        assert_eq!(ext_big_omega(&x).unwrap(), rat(0, 1));
        assert_eq!(ext_big_omega(&ExtendedNumber::one()).unwrap(), rat(0, 1));
        let sqrt2 = ExtendedNumber::from_rational(2, 1).unwrap().nth_root(2).unwrap();
        assert_eq!(ext_big_omega(&sqrt2).unwrap(), rat(1, 2));
    }

    #[test]
    fn embed_examples() {
        let f = Factorizer::with_limit(1000).unwrap();
        let twelve = ExtendedNumber::from_rational(12, 1).unwrap();
        assert_eq!(embed(&twelve, &f).unwrap(), vec![rat(2, 1), rat(1, 1)]);
        assert!(embed(&ExtendedNumber::one(), &f).unwrap().is_empty());

        // |embed(8) - embed(9)|_1 = 5 = dist(8, 9)
        let e8 = embed(&ExtendedNumber::from_natural(8).unwrap(), &f).unwrap();
        let e9 = embed(&ExtendedNumber::from_natural(9).unwrap(), &f).unwrap();
        assert_eq!(e8, vec![rat(3, 1)]);
        assert_eq!(e9, vec![rat(0, 1), rat(2, 1)]);
        let l1: Exponent = (0..2)
            .map(|i| {
                let a = e8.get(i).copied().unwrap_or_else(Exponent::zero);
                let b = e9.get(i).copied().unwrap_or_else(Exponent::zero);
                if a > b { a - b } else { b - a }
            })
            .sum();
        assert_eq!(l1, rat(5, 1));
    }

    #[test]
    fn restriction_agrees_with_natural_distance() {
        for a in 1..=40u64 {
            for b in 1..=40u64 {
                let x = ExtendedNumber::from_natural(a).unwrap();
                let y = ExtendedNumber::from_natural(b).unwrap();
                assert_eq!(
                    ext_dist(&x, &y).unwrap(),
                    Exponent::from_integer(crate::metric::dist(a, b).unwrap() as i128)
                );
            }
        }
    }

    #[test]
    fn mul_adds_exponents_and_drops_zeros() {
        let x = ExtendedNumber::from_rational(3, 2).unwrap();
        let y = ExtendedNumber::from_rational(2, 1).unwrap();
        assert_eq!(x.mul(&y).unwrap().entries(), &[(3, rat(1, 1))]);
        let inv = ExtendedNumber::from_rational(2, 3).unwrap();
        assert!(x.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn from_entries_validates() {
        assert!(ExtendedNumber::from_entries(vec![(2, rat(1, 2)), (3, rat(-1, 1))]).is_ok());
        assert!(ExtendedNumber::from_entries(vec![(3, rat(1, 1)), (2, rat(1, 1))]).is_err());
        assert!(ExtendedNumber::from_entries(vec![(4, rat(1, 1))]).is_err());
        assert!(ExtendedNumber::from_entries(vec![(2, rat(0, 1))]).is_err());
    }

    #[test]
    fn overflow_is_out_of_range() {
        let big = ExtendedNumber::from_entries(vec![(2, Exponent::new(i128::MAX, 1))]).unwrap();
        let one_half = ExtendedNumber::from_entries(vec![(2, rat(1, 2))]).unwrap();
        assert!(matches!(
            ext_dist(&big, &one_half),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(big.mul(&big), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn parse_literals() {
        let p = |s: &str| s.parse::<ExtendedNumber>();
        assert_eq!(p("12").unwrap(), ExtendedNumber::from_natural(12).unwrap());
        assert_eq!(p("3/2").unwrap(), ExtendedNumber::from_rational(3, 2).unwrap());
        assert_eq!(
            p("root(2, 2)").unwrap().entries(),
            &[(2, rat(1, 2))]
        );
        assert_eq!(
            p("root(3, 8/27)").unwrap().entries(),
            &[(2, rat(1, 1)), (3, rat(-1, 1))]
        );
        assert_eq!(p(" 5 / 10 ").unwrap(), ExtendedNumber::from_rational(1, 2).unwrap());
        assert!(p("").is_err());
        assert!(p("0").is_err());
        assert!(p("-3").is_err());
        assert!(p("3/0").is_err());
        assert!(p("root(0, 2)").is_err());
        assert!(p("root(2)").is_err());
        assert!(p("two").is_err());
    }

    #[test]
    fn display_is_map_style() {
        assert_eq!(ExtendedNumber::one().to_string(), "{}");
        let x = ExtendedNumber::from_rational(3, 2).unwrap();
        assert_eq!(x.to_string(), "{2: -1, 3: 1}");
        let sqrt2 = ExtendedNumber::from_rational(2, 1).unwrap().nth_root(2).unwrap();
        assert_eq!(sqrt2.to_string(), "{2: 1/2}");
    }
}
